//! The universal symmetric 2-algebraic 2-valued group.
//!
//! The multiplication x * y is the root multiset of the quadratic
//! P(z; x, y) = e1^2 - 4 e2 + k2 e3 + k8 e3^2 + k4 e1 e3 + k6 e2 e3 in z,
//! with e1, e2, e3 elementary symmetric in (x, y, z).  The central theorem:
//! the law is associative iff 4 k8 = k4^2 - k6 k2.  Associativity is encoded
//! without computing roots, as an identity of two degree-4 polynomials in t
//! built from resultants, and the defect is certified to factor exactly
//! through the relation.

use num_complex::Complex;

use crate::exact::{rat, resultant, ExactError, MPoly, Var};
use crate::numeric::{multiset_distance_rel, solve_quadratic, Real};

pub fn vz() -> Var {
    Var::new("z")
}
pub fn vx() -> Var {
    Var::new("x")
}
pub fn vy() -> Var {
    Var::new("y")
}
pub fn vt() -> Var {
    Var::new("t")
}
pub fn vw() -> Var {
    Var::new("w")
}
pub fn vk(i: u32) -> Var {
    Var::new(&format!("k{}", i))
}
pub fn va(i: u32) -> Var {
    Var::new(&format!("a{}", i))
}

/// The symmetric two-valued law with (possibly symbolic) parameters.
#[derive(Clone)]
pub struct TwoValuedLaw {
    pub k2: MPoly,
    pub k4: MPoly,
    pub k6: MPoly,
    pub k8: MPoly,
    /// P(z; x, y), fully expanded.
    pub p: MPoly,
}

/// Elementary symmetric polynomials in (x, y, z).
pub fn elementary_symmetric() -> (MPoly, MPoly, MPoly) {
    let (x, y, z) = (MPoly::var(vx()), MPoly::var(vy()), MPoly::var(vz()));
    let e1 = &(&x + &y) + &z;
    let e2 = &(&(&x * &y) + &(&y * &z)) + &(&z * &x);
    let e3 = &(&x * &y) * &z;
    (e1, e2, e3)
}

pub fn build_law(k2: MPoly, k4: MPoly, k6: MPoly, k8: MPoly) -> TwoValuedLaw {
    let (e1, e2, e3) = elementary_symmetric();
    let p = &(&(&(&e1 * &e1) - &e2.scale(&rat(4))) + &(&k2 * &e3))
        + &(&(&(&k8 * &(&e3 * &e3)) + &(&k4 * &(&e1 * &e3))) + &(&k6 * &(&e2 * &e3)));
    TwoValuedLaw { k2, k4, k6, k8, p }
}

/// All four parameters free symbols.
pub fn universal_law() -> TwoValuedLaw {
    build_law(
        MPoly::var(vk(2)),
        MPoly::var(vk(4)),
        MPoly::var(vk(6)),
        MPoly::var(vk(8)),
    )
}

/// The elementary law z^2 - 2(x+y) z + (x-y)^2.
pub fn elementary_law() -> TwoValuedLaw {
    build_law(MPoly::zero(), MPoly::zero(), MPoly::zero(), MPoly::zero())
}

/// Parameter dictionary from the curve y^2 = x^3 + a1 x^2 + a2 x + a3:
/// k = (-4 a1, -2 a2, -4 a3, a2^2 - 4 a1 a3).
pub fn from_curve_symbolic() -> TwoValuedLaw {
    let (a1, a2, a3) = (MPoly::var(va(1)), MPoly::var(va(2)), MPoly::var(va(3)));
    build_law(
        a1.scale(&rat(-4)),
        a2.scale(&rat(-2)),
        a3.scale(&rat(-4)),
        &(&a2 * &a2) - &(&a1 * &a3).scale(&rat(4)),
    )
}

impl TwoValuedLaw {
    /// Coefficient of z^j in P.
    pub fn f(&self, j: u16) -> MPoly {
        self.p.coeff_of_power(vz(), j)
    }

    /// 4 k8 - k4^2 + k2 k6, the associativity relation of the family.
    pub fn relation(&self) -> MPoly {
        &(&self.k8.scale(&rat(4)) - &(&self.k4 * &self.k4)) + &(&self.k2 * &self.k6)
    }
}

/// Per-axiom outcome of the group-axiom battery.
pub struct AxiomReport {
    pub neutral: bool,
    pub symmetry: bool,
    pub inverse: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.neutral && self.symmetry && self.inverse
    }
}

/// Exact verification of the n-valued group axioms for a symbolic law:
/// P(z; 0, y) = F0(0, y) (z - y)^2, full S3 symmetry of P, and the inverse
/// axiom F2(x, x) = 0 with inv(x) = x.
pub fn check_axioms(law: &TwoValuedLaw) -> AxiomReport {
    let (x, y, z) = (vx(), vy(), vz());
    let f0_at0 = law.f(2).substitute(x, &MPoly::zero());
    let zmy = &MPoly::var(z) - &MPoly::var(y);
    let neutral =
        law.p.substitute(x, &MPoly::zero()) == &f0_at0 * &(&zmy * &zmy);

    let swap_xz = law.p.rename(&[(x, z), (z, x)]);
    let swap_yz = law.p.rename(&[(y, z), (z, y)]);
    let swap_xy = law.p.rename(&[(x, y), (y, x)]);
    let symmetry = swap_xz == law.p && swap_yz == law.p && swap_xy == law.p;

    let f2 = law.p.substitute(z, &MPoly::zero());
    let inverse = f2.substitute(y, &MPoly::var(x)).is_zero();

    AxiomReport {
        neutral,
        symmetry,
        inverse,
    }
}

/// Output of the resultant-based associativity computation.
pub struct AssocDefect {
    /// L(t) = Res_w(P(w; x, y), P(t; w, z)).
    pub lhs: MPoly,
    /// R(t) = Res_w(P(w; y, z), P(t; x, w)).
    pub rhs: MPoly,
    /// D = L lc_t(R) - R lc_t(L); zero iff the two monic quartics agree.
    pub defect: MPoly,
}

/// The two four-root products of the associativity identity, realized as
/// resultants; monic normalization is done by cross-multiplying leading
/// t-coefficients, which avoids tracking F0 factors and stays exact.
pub fn associativity_defect(law: &TwoValuedLaw) -> Result<AssocDefect, ExactError> {
    let (x, y, z, t, w) = (vx(), vy(), vz(), vt(), vw());
    let p_w_xy = law.p.rename(&[(z, w)]);
    let p_t_wz = law.p.rename(&[(z, t), (x, w), (y, z)]);
    let lhs = resultant(&p_w_xy, &p_t_wz, w)?;

    let p_w_yz = law.p.rename(&[(z, w), (x, y), (y, z)]);
    let p_t_xw = law.p.rename(&[(z, t), (y, w)]);
    let rhs = resultant(&p_w_yz, &p_t_xw, w)?;

    let lc_l = lhs.leading_coeff_in(t);
    let lc_r = rhs.leading_coeff_in(t);
    let defect = &(&lhs * &lc_r) - &(&rhs * &lc_l);
    Ok(AssocDefect { lhs, rhs, defect })
}

/// Factor the defect of the universal law as D = (4 k8 - k4^2 + k2 k6) E.
/// Division failure would falsify the associativity theorem.
pub fn certify_universal_associativity() -> Result<(AssocDefect, MPoly), ExactError> {
    let law = universal_law();
    let ad = associativity_defect(&law)?;
    let e = ad.defect.divide_exact(&law.relation())?;
    Ok((ad, e))
}

/// Numeric two-valued law with complex parameters.
#[derive(Clone, Copy)]
pub struct NumLaw<T: Real> {
    pub k2: Complex<T>,
    pub k4: Complex<T>,
    pub k6: Complex<T>,
    pub k8: Complex<T>,
}

impl<T: Real> NumLaw<T> {
    pub fn elementary() -> Self {
        let zero = Complex::new(T::zero(), T::zero());
        NumLaw {
            k2: zero,
            k4: zero,
            k6: zero,
            k8: zero,
        }
    }

    /// Parameters from a curve (a1, a2, a3); these satisfy the associativity
    /// relation by construction.
    pub fn from_curve(a1: Complex<T>, a2: Complex<T>, a3: Complex<T>) -> Self {
        let four = Complex::new(T::from_f64_lossy(4.0), T::zero());
        let two = Complex::new(T::from_f64_lossy(2.0), T::zero());
        NumLaw {
            k2: -four * a1,
            k4: -two * a2,
            k6: -four * a3,
            k8: a2 * a2 - four * a1 * a3,
        }
    }

    /// z^2-coefficient F0(x, y) = 1 + k4 xy + k6 xy(x+y) + k8 x^2 y^2.
    pub fn f0(&self, x: Complex<T>, y: Complex<T>) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        one + self.k4 * x * y + self.k6 * x * y * (x + y) + self.k8 * x * x * y * y
    }

    /// z^1-coefficient F1(x, y) = -2(x+y) + k2 xy + k4 xy(x+y) + k6 x^2 y^2.
    pub fn f1(&self, x: Complex<T>, y: Complex<T>) -> Complex<T> {
        let two = Complex::new(T::from_f64_lossy(2.0), T::zero());
        -two * (x + y) + self.k2 * x * y + self.k4 * x * y * (x + y) + self.k6 * x * x * y * y
    }

    /// z^0-coefficient F2(x, y) = (x - y)^2.
    pub fn f2(&self, x: Complex<T>, y: Complex<T>) -> Complex<T> {
        (x - y) * (x - y)
    }

    /// The two-valued product: roots of F0 z^2 + F1 z + F2.
    /// `None` when |F0(x, y)| <= tol, i.e. the law is undefined at (x, y).
    pub fn multiply(
        &self,
        x: Complex<T>,
        y: Complex<T>,
        tol: T,
    ) -> Option<[Complex<T>; 2]> {
        let f0 = self.f0(x, y);
        if f0.norm() <= tol {
            return None;
        }
        Some(solve_quadratic(f0, self.f1(x, y), self.f2(x, y)))
    }

    /// Relative defect of the four-element multiset associativity identity,
    /// or None when any intermediate product is undefined.
    pub fn associativity_defect_at(
        &self,
        x: Complex<T>,
        y: Complex<T>,
        z: Complex<T>,
        tol: T,
    ) -> Option<T> {
        let mut left = Vec::with_capacity(4);
        for u in self.multiply(x, y, tol)? {
            left.extend(self.multiply(u, z, tol)?);
        }
        let mut right = Vec::with_capacity(4);
        for v in self.multiply(y, z, tol)? {
            right.extend(self.multiply(x, v, tol)?);
        }
        Some(multiset_distance_rel(&left, &right))
    }
}

/// f64 conversion helper for the Real bound.
trait FromF64Lossy {
    fn from_f64_lossy(v: f64) -> Self;
}
impl<T: Real> FromF64Lossy for T {
    fn from_f64_lossy(v: f64) -> T {
        T::from(v).unwrap()
    }
}

/// Finite coset two-valued group on Z/n modulo negation.
pub struct CosetCyclic {
    pub n: u32,
}

impl CosetCyclic {
    pub fn new(n: u32) -> Self {
        assert!((2..=64).contains(&n));
        CosetCyclic { n }
    }

    /// Class representative of a residue: min(v, n - v).
    pub fn class(&self, v: i64) -> u32 {
        let m = v.rem_euclid(self.n as i64) as u32;
        m.min(self.n - m)
    }

    pub fn elements(&self) -> Vec<u32> {
        (0..=self.n / 2).collect()
    }

    /// [g] * [h] = [[g+h], [g-h]], as a sorted pair.
    pub fn product(&self, g: u32, h: u32) -> [u32; 2] {
        let a = self.class(g as i64 + h as i64);
        let b = self.class(g as i64 - h as i64);
        [a.min(b), a.max(b)]
    }

    fn four_product_left(&self, x: u32, y: u32, z: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(4);
        for u in self.product(x, y) {
            out.extend(self.product(u, z));
        }
        out.sort_unstable();
        out
    }

    fn four_product_right(&self, x: u32, y: u32, z: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(4);
        for v in self.product(y, z) {
            out.extend(self.product(x, v));
        }
        out.sort_unstable();
        out
    }

    /// Neutral element, inverse, and exhaustive multiset associativity over
    /// all triples of classes.
    pub fn check(&self) -> bool {
        let elems = self.elements();
        assert_eq!(elems.len() as u32, self.n / 2 + 1);
        for &x in &elems {
            if self.product(x, 0) != [x, x] {
                return false;
            }
            // inv(x) = x: the neutral class must appear in x * x.
            if !self.product(x, x).contains(&0) {
                return false;
            }
        }
        for &x in &elems {
            for &y in &elems {
                for &z in &elems {
                    if self.four_product_left(x, y, z) != self.four_product_right(x, y, z) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::numeric::cx;

    #[test]
    fn elementary_law_polynomial() {
        // z^2 - 2(x+y) z + (x-y)^2
        let law = elementary_law();
        let (x, y, z) = (MPoly::var(vx()), MPoly::var(vy()), MPoly::var(vz()));
        let want = &(&(&z * &z) - &(&z * &(&x + &y)).scale(&rat(2))) + &(&x - &y).pow(2);
        assert_eq!(law.p, want);
    }

    #[test]
    fn z2_coefficient_symbolic() {
        // F0 = 1 + k4 xy + k6 xy(x+y) + k8 x^2 y^2
        let law = universal_law();
        let (x, y) = (MPoly::var(vx()), MPoly::var(vy()));
        let xy = &x * &y;
        let want = &(&MPoly::one() + &(&MPoly::var(vk(4)) * &xy))
            + &(&(&MPoly::var(vk(6)) * &(&xy * &(&x + &y))) + &(&MPoly::var(vk(8)) * &xy.pow(2)));
        assert_eq!(law.f(2), want);
    }

    #[test]
    fn f1_f2_symbolic_match_numeric_formulas() {
        // The explicit F1, F2 used by NumLaw agree with the z-expansion.
        let law = universal_law();
        let (x, y) = (MPoly::var(vx()), MPoly::var(vy()));
        let xy = &x * &y;
        let f1_want = &(&(&x + &y).scale(&rat(-2)) + &(&MPoly::var(vk(2)) * &xy))
            + &(&(&MPoly::var(vk(4)) * &(&xy * &(&x + &y))) + &(&MPoly::var(vk(6)) * &xy.pow(2)));
        assert_eq!(law.f(1), f1_want);
        assert_eq!(law.f(0), (&x - &y).pow(2));
    }

    #[test]
    fn curve_dictionary_satisfies_relation() {
        let law = from_curve_symbolic();
        assert!(law.relation().is_zero());
    }

    #[test]
    fn axioms_hold_for_universal_law() {
        let law = universal_law();
        let report = check_axioms(&law);
        assert!(report.neutral);
        assert!(report.symmetry);
        assert!(report.inverse);
        // P(z; 0, y) = (z - y)^2 for the universal law (F0(0, y) = 1).
        let p0 = law.p.substitute(vx(), &MPoly::zero());
        let zmy = &MPoly::var(vz()) - &MPoly::var(vy());
        assert_eq!(p0, &zmy * &zmy);
    }

    #[test]
    fn elementary_law_is_associative_exactly() {
        let ad = associativity_defect(&elementary_law()).unwrap();
        assert!(ad.defect.is_zero());
        assert!(!ad.lhs.is_zero());
    }

    #[test]
    fn universal_defect_factors_through_relation() {
        let (ad, e) = certify_universal_associativity().unwrap();
        assert!(!ad.defect.is_zero());
        assert!(!e.is_zero());
        // Substituting k8 := (k4^2 - k2 k6)/4 kills the defect.
        let value = (&MPoly::var(vk(4)).pow(2) - &(&MPoly::var(vk(2)) * &MPoly::var(vk(6))))
            .scale(&ratio(1, 4));
        assert!(ad.defect.substitute(vk(8), &value).is_zero());
    }

    #[test]
    fn k8_only_specialization() {
        // k2 = k4 = k6 = 0, k8 free: defect nonzero and divisible by 4 k8.
        let law = build_law(
            MPoly::zero(),
            MPoly::zero(),
            MPoly::zero(),
            MPoly::var(vk(8)),
        );
        let ad = associativity_defect(&law).unwrap();
        assert!(!ad.defect.is_zero());
        let q = ad
            .defect
            .divide_exact(&MPoly::var(vk(8)).scale(&rat(4)))
            .unwrap();
        assert!(!q.is_zero());
    }

    #[test]
    fn numeric_products() {
        let law = NumLaw::<f64>::elementary();
        let r = law.multiply(cx(1.0, 0.0), cx(1.0, 0.0), 1e-12).unwrap();
        assert!(multiset_distance_rel(&r, &[cx::<f64>(0.0, 0.0), cx(4.0, 0.0)]) < 1e-12);
        let r = law.multiply(cx(4.0, 0.0), cx(1.0, 0.0), 1e-12).unwrap();
        assert!(multiset_distance_rel(&r, &[cx::<f64>(1.0, 0.0), cx(9.0, 0.0)]) < 1e-12);
        // Neutral element: x * 0 = [x, x] for any law.
        let law = NumLaw::<f64>::from_curve(cx(0.5, 0.25), cx(-1.0, 0.0), cx(0.0, 2.0));
        let r = law.multiply(cx(0.0, 0.0), cx(5.0, 0.0), 1e-12).unwrap();
        assert!(multiset_distance_rel(&r, &[cx::<f64>(5.0, 0.0), cx(5.0, 0.0)]) < 1e-12);
    }

    #[test]
    fn numeric_law_undefined_where_f0_vanishes() {
        // k4 = -1: F0(1, 1) = 1 + k4 = 0, so the product is undefined there.
        let mut law = NumLaw::<f64>::elementary();
        law.k4 = cx(-1.0, 0.0);
        assert!(law.multiply(cx(1.0, 0.0), cx(1.0, 0.0), 1e-9).is_none());
        assert!(law.multiply(cx(2.0, 0.0), cx(1.0, 0.0), 1e-9).is_some());
    }

    #[test]
    fn numeric_associativity_and_perturbation() {
        let law: NumLaw<f64> = NumLaw::from_curve(cx(0.3, -0.2), cx(1.1, 0.4), cx(-0.7, 0.1));
        let (x, y, z) = (cx(0.9, 0.1), cx(-0.4, 0.7), cx(0.2, -0.6));
        let d = law.associativity_defect_at(x, y, z, 1e-12).unwrap();
        assert!(d < 1e-9, "defect {}", d);
        let mut bad = law;
        bad.k8 += cx(0.5, 0.0);
        let d = bad.associativity_defect_at(x, y, z, 1e-12).unwrap();
        assert!(d > 1e-4, "perturbed defect unexpectedly small: {}", d);
    }

    #[test]
    fn coset_cyclic_small_cases() {
        // n = 5: [1] * [2] = [[2], [1]]  (1+2 = 3 ~ 2, 1-2 = -1 ~ 1 mod 5).
        let g5 = CosetCyclic::new(5);
        assert_eq!(g5.product(1, 2), [1, 2]);
        assert!(g5.check());
        assert!(CosetCyclic::new(2).check());
        assert!(CosetCyclic::new(12).check());
    }
}

