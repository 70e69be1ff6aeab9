//! The three-dimensional Frobenius algebra with multiplication table
//! e2^2 = a e1 + b e2 + e3, e2 e3 = c e1 + a e2, e3^2 = d e1 + c e2 (e1 the
//! unit), its WDVV reduction, the coalgebra/Casimir structure, Frobenius
//! n-homomorphisms, and cyclic group determinants.
//!
//! The single relation doing all the work is a^2 - d - bc = 0: every
//! associator, every WDVV equation and the coassociativity defect are exact
//! polynomial multiples of it.

use num_traits::{One, Zero};

use crate::exact::{rat, ratio, ExactError, MPoly, Rat, Var};

pub fn sym(name: &str) -> MPoly {
    MPoly::var(Var::new(name))
}

/// Structure constants of the 3D algebra, possibly symbolic.
#[derive(Clone)]
pub struct FrobAlg3 {
    pub a: MPoly,
    pub b: MPoly,
    pub c: MPoly,
    pub d: MPoly,
}

impl FrobAlg3 {
    pub fn symbolic() -> FrobAlg3 {
        FrobAlg3 {
            a: sym("a"),
            b: sym("b"),
            c: sym("c"),
            d: sym("d"),
        }
    }

    pub fn numeric(a: Rat, b: Rat, c: Rat, d: Rat) -> FrobAlg3 {
        FrobAlg3 {
            a: MPoly::constant(a),
            b: MPoly::constant(b),
            c: MPoly::constant(c),
            d: MPoly::constant(d),
        }
    }

    /// a^2 - d - bc, the associativity relation.
    pub fn relation(&self) -> MPoly {
        &(&(&self.a * &self.a) - &self.d) - &(&self.b * &self.c)
    }

    /// Product of basis vectors e_i e_j in coordinates (0-based indices).
    pub fn basis_product(&self, i: usize, j: usize) -> [MPoly; 3] {
        let (i, j) = (i.min(j), i.max(j));
        match (i, j) {
            (0, k) => {
                let mut out = [MPoly::zero(), MPoly::zero(), MPoly::zero()];
                out[k] = MPoly::one();
                out
            }
            (1, 1) => [self.a.clone(), self.b.clone(), MPoly::one()],
            (1, 2) => [self.c.clone(), self.a.clone(), MPoly::zero()],
            (2, 2) => [self.d.clone(), self.c.clone(), MPoly::zero()],
            _ => unreachable!(),
        }
    }

    /// Product of coordinate vectors.
    pub fn product(&self, u: &[MPoly; 3], v: &[MPoly; 3]) -> [MPoly; 3] {
        let mut out = [MPoly::zero(), MPoly::zero(), MPoly::zero()];
        for i in 0..3 {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if v[j].is_zero() {
                    continue;
                }
                let p = self.basis_product(i, j);
                let f = &u[i] * &v[j];
                for (k, out_k) in out.iter_mut().enumerate() {
                    *out_k = &*out_k + &(&f * &p[k]);
                }
            }
        }
        out
    }

    /// Frobenius functional theta(e1) = theta(e2) = 0, theta(e3) = 1.
    pub fn theta(&self, u: &[MPoly; 3]) -> MPoly {
        u[2].clone()
    }
}

fn basis(k: usize) -> [MPoly; 3] {
    let mut e = [MPoly::zero(), MPoly::zero(), MPoly::zero()];
    e[k] = MPoly::one();
    e
}

pub struct AssociatorScan {
    /// (i, j, k) -> associator (e_i e_j) e_k - e_i (e_j e_k), coordinates.
    pub associators: Vec<((usize, usize, usize), [MPoly; 3])>,
    /// every coordinate is a multiple of a^2 - d - bc
    pub all_divisible: bool,
    /// some quotient is a nonzero constant, so the scan generates exactly
    /// the principal ideal (a^2 - d - bc)
    pub unit_quotient: bool,
    /// associators with an e1 factor all vanish
    pub unit_slots_trivial: bool,
}

/// All 27 associators of the symbolic algebra, with exact divisibility
/// certificates.
pub fn associator_scan(alg: &FrobAlg3) -> Result<AssociatorScan, ExactError> {
    let rel = alg.relation();
    let mut associators = Vec::new();
    let mut all_divisible = true;
    let mut unit_quotient = false;
    let mut unit_slots_trivial = true;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let left = alg.product(&alg.product(&basis(i), &basis(j)), &basis(k));
                let right = alg.product(&basis(i), &alg.product(&basis(j), &basis(k)));
                let assoc = [
                    &left[0] - &right[0],
                    &left[1] - &right[1],
                    &left[2] - &right[2],
                ];
                if (i == 0 || j == 0 || k == 0) && assoc.iter().any(|c| !c.is_zero()) {
                    unit_slots_trivial = false;
                }
                for coord in &assoc {
                    if coord.is_zero() {
                        continue;
                    }
                    match coord.divide_exact(&rel) {
                        Ok(q) => {
                            if let Some(c) = q.as_constant() {
                                if !c.is_zero() {
                                    unit_quotient = true;
                                }
                            }
                        }
                        Err(_) => all_divisible = false,
                    }
                }
                associators.push(((i, j, k), assoc));
            }
        }
    }
    Ok(AssociatorScan {
        associators,
        all_divisible,
        unit_quotient,
        unit_slots_trivial,
    })
}

/// Third-derivative tensor of the potential
/// F = 1/2 (t1)^2 t3 + 1/2 t1 (t2)^2 + f(t2, t3) with the f-jets (a, b, c, d)
/// free.  Indices 0-based and symmetric.
fn wdvv_c_tensor(alg: &FrobAlg3) -> [[[MPoly; 3]; 3]; 3] {
    let zero = MPoly::zero;
    let mut c: [[[MPoly; 3]; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                c[i][j][k] = zero();
            }
        }
    }
    let mut set = |i: usize, j: usize, k: usize, v: MPoly| {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        // fill all permutations
        let perms = [
            (idx[0], idx[1], idx[2]),
            (idx[0], idx[2], idx[1]),
            (idx[1], idx[0], idx[2]),
            (idx[1], idx[2], idx[0]),
            (idx[2], idx[0], idx[1]),
            (idx[2], idx[1], idx[0]),
        ];
        for (p, q, r) in perms {
            c[p][q][r] = v.clone();
        }
    };
    set(0, 0, 2, MPoly::one());
    set(0, 1, 1, MPoly::one());
    set(1, 1, 1, alg.b.clone());
    set(1, 1, 2, alg.a.clone());
    set(1, 2, 2, alg.c.clone());
    set(2, 2, 2, alg.d.clone());
    c
}

pub struct WdvvReport {
    /// normalization c_{1 alpha beta} = eta_{alpha beta} holds identically
    pub normalization: bool,
    /// every WDVV associativity difference is a multiple of a^2 - d - bc
    pub reduces_to_relation: bool,
    /// at least one difference is exactly +/- the relation
    pub relation_attained: bool,
}

/// The n = 3 WDVV associativity equations for the quadratic+quartic
/// potential, reduced against a^2 - d - bc.
pub fn wdvv_reduction(alg: &FrobAlg3) -> WdvvReport {
    let c = wdvv_c_tensor(alg);
    let rel = alg.relation();
    // eta antidiagonal: index nu pairs with 2 - nu (0-based).
    let mut normalization = true;
    for alpha in 0..3 {
        for beta in 0..3 {
            let want = if alpha + beta == 2 {
                MPoly::one()
            } else {
                MPoly::zero()
            };
            if c[0][alpha][beta] != want {
                normalization = false;
            }
        }
    }
    let mut reduces = true;
    let mut attained = false;
    for alpha in 0..3 {
        for beta in 0..3 {
            for gamma in 0..3 {
                for delta in 0..3 {
                    let mut diff = MPoly::zero();
                    for nu in 0..3 {
                        let lhs = &c[alpha][beta][nu] * &c[gamma][delta][2 - nu];
                        let rhs = &c[gamma][beta][nu] * &c[alpha][delta][2 - nu];
                        diff = &diff + &(&lhs - &rhs);
                    }
                    if diff.is_zero() {
                        continue;
                    }
                    match diff.divide_exact(&rel) {
                        Ok(q) => {
                            if let Some(v) = q.as_constant() {
                                if !v.is_zero() {
                                    attained = true;
                                }
                            }
                        }
                        Err(_) => reduces = false,
                    }
                }
            }
        }
    }
    WdvvReport {
        normalization,
        reduces_to_relation: reduces,
        relation_attained: attained,
    }
}

/// Jets of the quartic potential f = -x^4 phi(y) / divisor (divisor 96 or
/// 16): structure constants a = -x^2 phi'/(divisor/12), etc., expressed with
/// free jet symbols phi0..phi3.
pub fn quartic_potential_jets(divisor: i64) -> FrobAlg3 {
    let x = sym("x");
    let phi0 = sym("phi0");
    let phi1 = sym("phi1");
    let phi2 = sym("phi2");
    let phi3 = sym("phi3");
    // f = -x^4 phi / divisor:
    //   b = f_xxx = -24 x phi / divisor
    //   a = f_xxy = -12 x^2 phi' / divisor
    //   c = f_xyy = -4 x^3 phi'' / divisor
    //   d = f_yyy = -x^4 phi''' / divisor
    let s = |k: i64| ratio(-k, divisor);
    FrobAlg3 {
        a: (&x.pow(2) * &phi1).scale(&s(12)),
        b: (&x * &phi0).scale(&s(24)),
        c: (&x.pow(3) * &phi2).scale(&s(4)),
        d: (&x.pow(4) * &phi3).scale(&s(1)),
    }
}

/// The Chazy-type combination the quartic jets reduce to:
/// for divisor 96: a^2 - d - bc = (x^4/96) [phi''' - phi phi'' + 3/2 phi'^2];
/// for divisor 16: a^2 - d - bc = (x^4/16) [phi''' - 6 phi phi'' + 9 phi'^2].
pub fn quartic_reduction_target(divisor: i64) -> MPoly {
    let x = sym("x");
    let phi0 = sym("phi0");
    let phi1 = sym("phi1");
    let phi2 = sym("phi2");
    let phi3 = sym("phi3");
    let bracket = match divisor {
        96 => &(&phi3 - &(&phi0 * &phi2)) + &(&phi1 * &phi1).scale(&ratio(3, 2)),
        16 => &(&phi3 - &(&phi0 * &phi2).scale(&rat(6))) + &(&phi1 * &phi1).scale(&rat(9)),
        _ => panic!("unsupported divisor {}", divisor),
    };
    (&x.pow(4) * &bracket).scale(&ratio(1, divisor))
}

/// Comultiplication data: Delta(e_k) = sum_{i,j} delta[k][i][j] e_i (x) e_j.
pub struct Comultiplication {
    pub delta: [[[MPoly; 3]; 3]; 3],
    /// Delta(e1) equals the Casimir element e1(x)e3 + e2(x)e2 + e3(x)e1
    pub unit_is_casimir: bool,
    /// left and right forms sum_i e_i x (x) y_i and sum_i e_i (x) x y_i agree
    pub left_right_agree: bool,
    /// counit laws (theta (x) id) Delta = id = (id (x) theta) Delta
    pub counit_ok: bool,
    /// every coassociativity defect coordinate is a multiple of the relation
    pub coassoc_divisible: bool,
    /// some coassociativity quotient is a nonzero constant
    pub coassoc_attained: bool,
}

/// Dual bases for the antidiagonal metric: (e1, e2, e3) and (e3, e2, e1).
pub fn comultiplication(alg: &FrobAlg3) -> Comultiplication {
    let mut delta: [[[MPoly; 3]; 3]; 3] = Default::default();
    let mut delta_r: [[[MPoly; 3]; 3]; 3] = Default::default();
    for k in 0..3 {
        for i in 0..3 {
            // left form: (e_i e_k) (x) y_i with y_i = e_{2-i}
            let prod = alg.basis_product(i, k);
            for (m, pm) in prod.iter().enumerate() {
                delta[k][m][2 - i] = &delta[k][m][2 - i] + pm;
            }
            // right form: e_i (x) (e_k y_i)
            let prod = alg.basis_product(k, 2 - i);
            for (m, pm) in prod.iter().enumerate() {
                delta_r[k][i][m] = &delta_r[k][i][m] + pm;
            }
        }
    }
    let left_right_agree = delta == delta_r;

    let mut unit_is_casimir = true;
    for i in 0..3 {
        for j in 0..3 {
            let want = if i + j == 2 { MPoly::one() } else { MPoly::zero() };
            if delta[0][i][j] != want {
                unit_is_casimir = false;
            }
        }
    }

    // Counit: theta picks the e3-coordinate of a leg.
    let mut counit_ok = true;
    for k in 0..3 {
        for j in 0..3 {
            let want = if j == k { MPoly::one() } else { MPoly::zero() };
            if delta[k][2][j] != want || delta[k][j][2] != want {
                counit_ok = false;
            }
        }
    }

    // Coassociativity: (Delta (x) id) Delta vs (id (x) Delta) Delta.
    let rel = alg.relation();
    let mut coassoc_divisible = true;
    let mut coassoc_attained = false;
    for k in 0..3 {
        for p in 0..3 {
            for q in 0..3 {
                for r in 0..3 {
                    let mut lhs = MPoly::zero();
                    let mut rhs = MPoly::zero();
                    for m in 0..3 {
                        lhs = &lhs + &(&delta[k][m][r] * &delta[m][p][q]);
                        rhs = &rhs + &(&delta[k][p][m] * &delta[m][q][r]);
                    }
                    let diff = &lhs - &rhs;
                    if diff.is_zero() {
                        continue;
                    }
                    match diff.divide_exact(&rel) {
                        Ok(qt) => {
                            if let Some(v) = qt.as_constant() {
                                if !v.is_zero() {
                                    coassoc_attained = true;
                                }
                            }
                        }
                        Err(_) => coassoc_divisible = false,
                    }
                }
            }
        }
    }

    Comultiplication {
        delta,
        unit_is_casimir,
        left_right_agree,
        counit_ok,
        coassoc_divisible,
        coassoc_attained,
    }
}

/// Finite-dimensional algebra with exact structure constants, a designated
/// unit, and products by bilinear extension.
#[derive(Clone)]
pub struct FinAlgebra {
    pub dim: usize,
    /// structure[i][j] = coordinates of e_i e_j
    pub structure: Vec<Vec<Vec<Rat>>>,
    pub unit: Vec<Rat>,
}

impl FinAlgebra {
    pub fn product(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let f = &u[i] * &v[j];
                for k in 0..self.dim {
                    if !self.structure[i][j][k].is_zero() {
                        out[k] += &f * &self.structure[i][j][k];
                    }
                }
            }
        }
        out
    }

    pub fn power(&self, u: &[Rat], m: usize) -> Vec<Rat> {
        let mut acc = self.unit.clone();
        for _ in 0..m {
            acc = self.product(&acc, u);
        }
        acc
    }

    /// The d x d matrix algebra with basis the matrix units (row-major).
    pub fn matrix_algebra(d: usize) -> FinAlgebra {
        let dim = d * d;
        let mut structure = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        if j == k {
                            structure[i * d + j][k * d + l][i * d + l] = Rat::one();
                        }
                    }
                }
            }
        }
        let mut unit = vec![Rat::zero(); dim];
        for i in 0..d {
            unit[i * d + i] = Rat::one();
        }
        FinAlgebra {
            dim,
            structure,
            unit,
        }
    }

    /// Q[t]/(t^n - m_{n-1} t^{n-1} - ... - m_0), a commutative associative
    /// algebra with basis 1, t, ..., t^{n-1}.
    pub fn quotient_algebra(modulus_tail: &[Rat]) -> FinAlgebra {
        let n = modulus_tail.len();
        let dim = n;
        // reduction of t^n
        let mut structure = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        // power basis products via reduction
        let mut powers: Vec<Vec<Rat>> = Vec::new();
        for k in 0..=2 * (n - 1) {
            if k < n {
                let mut v = vec![Rat::zero(); dim];
                v[k] = Rat::one();
                powers.push(v);
            } else {
                // t^k = t * t^{k-1}, reduce using t^n = sum m_i t^i
                let prev = powers[k - 1].clone();
                let mut v = vec![Rat::zero(); dim];
                for i in 0..dim {
                    if prev[i].is_zero() {
                        continue;
                    }
                    if i + 1 < n {
                        v[i + 1] += &prev[i];
                    } else {
                        for (j, m) in modulus_tail.iter().enumerate() {
                            v[j] += &prev[i] * m;
                        }
                    }
                }
                powers.push(v);
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                structure[i][j] = powers[i + j].clone();
            }
        }
        let mut unit = vec![Rat::zero(); dim];
        unit[0] = Rat::one();
        FinAlgebra {
            dim,
            structure,
            unit,
        }
    }

    /// Group algebra of Z/n.
    pub fn cyclic_group_algebra(n: usize) -> FinAlgebra {
        let mut structure = vec![vec![vec![Rat::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                structure[i][j][(i + j) % n] = Rat::one();
            }
        }
        let mut unit = vec![Rat::zero(); n];
        unit[0] = Rat::one();
        FinAlgebra {
            dim: n,
            structure,
            unit,
        }
    }
}

/// A linear functional given by its basis values.
pub fn functional(values: &[Rat], u: &[Rat]) -> Rat {
    values
        .iter()
        .zip(u)
        .map(|(a, b)| a * b)
        .fold(Rat::zero(), |s, t| s + t)
}

/// Phi_n by the recursion:
/// Phi_{n+1}(f)(x1 (x) ... ) = f(x1) Phi_n(f)(x2, ...) -
/// sum_i Phi_n(f)(x2, ..., x1 xi, ..., x_{n+1}).
pub fn phi_recursive(alg: &FinAlgebra, f: &[Rat], args: &[Vec<Rat>]) -> Rat {
    match args.len() {
        0 => Rat::one(),
        1 => functional(f, &args[0]),
        _ => {
            let head = &args[0];
            let rest: Vec<Vec<Rat>> = args[1..].to_vec();
            let mut acc = functional(f, head) * phi_recursive(alg, f, &rest);
            for i in 0..rest.len() {
                let mut merged = rest.clone();
                merged[i] = alg.product(head, &rest[i]);
                acc -= phi_recursive(alg, f, &merged);
            }
            acc
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (0..n).collect();
    fn go(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            go(v, k + 1, out);
            v.swap(k, i);
        }
    }
    go(&mut v, 0, &mut out);
    out
}

fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut j = perm[s];
        while j != s {
            seen[j] = true;
            cyc.push(j);
            j = perm[j];
        }
        cycles.push(cyc);
    }
    cycles
}

fn sign_from_cycles(cycles: &[Vec<usize>], n: usize) -> i64 {
    // sgn = (-1)^(n - #cycles)
    if (n - cycles.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Phi_n by the cycle-sum formula
/// Phi_n(f) = sum_{sigma in S_n} sgn(sigma) prod_{cycles} f(x_{i1} ... x_{im}).
pub fn phi_cycle_sum(alg: &FinAlgebra, f: &[Rat], args: &[Vec<Rat>]) -> Result<Rat, ExactError> {
    let n = args.len();
    if n > 6 {
        return Err(ExactError::Singular(format!(
            "factorial enumeration limited to n <= 6, got {}",
            n
        )));
    }
    let mut total = Rat::zero();
    for perm in permutations(n) {
        let cycles = cycles_of(&perm);
        let sgn = sign_from_cycles(&cycles, n);
        let mut prod = Rat::from_integer(sgn.into());
        for cyc in &cycles {
            let mut elem = alg.unit.clone();
            for &i in cyc {
                elem = alg.product(&elem, &args[i]);
            }
            prod *= functional(f, &elem);
        }
        total += prod;
    }
    Ok(total)
}

/// The polarization polynomial F_n(s1, ..., sn) =
/// sum_{sigma} prod_k ((-1)^{k+1} s_k)^{m_k(sigma)}.
pub fn f_polynomial(s: &[Rat]) -> Rat {
    let n = s.len();
    let mut total = Rat::zero();
    for perm in permutations(n) {
        let cycles = cycles_of(&perm);
        let mut prod = Rat::one();
        for cyc in &cycles {
            let k = cyc.len();
            let val = &s[k - 1];
            let signed = if k % 2 == 0 { -val.clone() } else { val.clone() };
            prod *= signed;
        }
        total += prod;
    }
    total
}

/// det(M) for a rational matrix by Laplace expansion (test oracle scale).
pub fn det_rational(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut sum = Rat::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let cof = det_rational(&minor) * m[0][c].clone();
        if c % 2 == 0 {
            sum += cof;
        } else {
            sum -= cof;
        }
    }
    sum
}

/// factorial as a rational
pub fn factorial(n: usize) -> Rat {
    let mut f = Rat::one();
    for k in 2..=n {
        f *= Rat::from_integer((k as i64).into());
    }
    f
}

// ---------------------------------------------------------------------------
// Cyclic group determinants over the cyclotomic extension.

/// Cyclotomic polynomial coefficients (low to high degree) for n <= 8.
pub fn cyclotomic(n: usize) -> Vec<i64> {
    match n {
        1 => vec![-1, 1],
        2 => vec![1, 1],
        3 => vec![1, 1, 1],
        4 => vec![1, 0, 1],
        5 => vec![1, 1, 1, 1, 1],
        6 => vec![1, -1, 1],
        7 => vec![1, 1, 1, 1, 1, 1, 1],
        8 => vec![1, 0, 0, 0, 1],
        _ => panic!("cyclotomic polynomial wanted only for n <= 8"),
    }
}

/// Element of Q(omega)[X0..X_{n-1}] with omega a primitive n-th root of
/// unity: coordinates in the power basis of omega modulo Phi_n.
#[derive(Clone, PartialEq)]
struct CycElem {
    coords: Vec<MPoly>,
}

impl CycElem {
    fn zero(deg: usize) -> CycElem {
        CycElem {
            coords: vec![MPoly::zero(); deg],
        }
    }

    fn from_poly(deg: usize, p: MPoly) -> CycElem {
        let mut e = CycElem::zero(deg);
        e.coords[0] = p;
        e
    }

    /// omega^k reduced modulo Phi_n (k arbitrary; omega^n = 1).
    fn omega_pow(n: usize, k: usize) -> CycElem {
        let phi = cyclotomic(n);
        let deg = phi.len() - 1;
        let k = k % n;
        // repeated reduction of the monomial omega^k
        let mut coords = vec![MPoly::zero(); k + 1];
        coords[k] = MPoly::one();
        reduce_mod_phi(&mut coords, &phi);
        coords.resize(deg, MPoly::zero());
        CycElem { coords }
    }

    fn add(&self, o: &CycElem) -> CycElem {
        CycElem {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    fn mul(&self, o: &CycElem, phi: &[i64]) -> CycElem {
        let deg = phi.len() - 1;
        let mut conv = vec![MPoly::zero(); 2 * deg];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] = &conv[i + j] + &(a * b);
            }
        }
        reduce_mod_phi(&mut conv, phi);
        conv.truncate(deg);
        CycElem { coords: conv }
    }
}

/// Reduce a coefficient vector modulo the monic polynomial phi.
fn reduce_mod_phi(coords: &mut Vec<MPoly>, phi: &[i64]) {
    let deg = phi.len() - 1;
    while coords.len() > deg {
        let top = coords.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = coords.len() - deg;
        for (i, &c) in phi.iter().take(deg).enumerate() {
            if c != 0 {
                coords[k + i] = &coords[k + i] - &top.scale(&rat(c));
            }
        }
    }
    while coords.len() < deg {
        coords.push(MPoly::zero());
    }
}

fn xvar(j: usize) -> MPoly {
    MPoly::var(Var::new(&format!("X{}", j)))
}

/// The circulant determinant det(X_{(c - r) mod n}) by signed permutation
/// expansion, accumulated directly on exponent vectors.
pub fn circulant_determinant(n: usize) -> MPoly {
    let vars: Vec<Var> = (0..n).map(|j| Var::new(&format!("X{}", j))).collect();
    let mut entries: Vec<(Vec<u16>, Rat)> = Vec::new();
    for perm in permutations(n) {
        let cycles = cycles_of(&perm);
        let sgn = sign_from_cycles(&cycles, n);
        let mut exps = vec![0u16; n];
        for (r, &c) in perm.iter().enumerate() {
            exps[(c + n - r) % n] += 1;
        }
        entries.push((exps, rat(sgn)));
    }
    MPoly::from_exponent_map(vars, entries)
}

pub struct GroupDetReport {
    pub theta: MPoly,
    /// product over k of (sum_j omega^{jk} X_j) equals Theta in Q[omega]/Phi_n
    pub factorization_ok: bool,
    /// Theta = (1/n!) Phi_n(chi_reg)(a, ..., a) with a = sum X_g g
    pub regular_character_ok: bool,
}

/// Frobenius' factorization for cyclic groups, certified in the exact
/// cyclotomic extension, plus the regular-character identity.
pub fn group_determinant(n: usize) -> GroupDetReport {
    assert!((2..=8).contains(&n), "group determinant wanted for 2 <= n <= 8");
    let theta = circulant_determinant(n);
    let phi = cyclotomic(n);
    let deg = phi.len() - 1;

    // Product of the n linear forms sum_j omega^{jk} X_j.
    let mut prod = CycElem::from_poly(deg, MPoly::one());
    for k in 0..n {
        let mut form = CycElem::zero(deg);
        for j in 0..n {
            let w = CycElem::omega_pow(n, j * k);
            let scaled = CycElem {
                coords: w.coords.iter().map(|c| c * &xvar(j)).collect(),
            };
            form = form.add(&scaled);
        }
        prod = prod.mul(&form, &phi);
    }
    let factorization_ok = prod.coords[0] == theta
        && prod.coords[1..].iter().all(|c| c.is_zero());

    // chi_reg(a^m) = n * identity coefficient of a^m, a = sum X_j g_j.
    let mut s = Vec::with_capacity(n);
    let mut power = vec![MPoly::zero(); n];
    power[0] = MPoly::one();
    for _ in 1..=n {
        // multiply by a: cyclic convolution with (X_0, ..., X_{n-1})
        let mut next = vec![MPoly::zero(); n];
        for (i, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for j in 0..n {
                next[(i + j) % n] = &next[(i + j) % n] + &(p * &xvar(j));
            }
        }
        power = next;
        s.push(power[0].scale(&rat(n as i64)));
    }
    // F_n summed per cycle type: enumerate S_n, count multiplicities of each
    // type, then add each type product once with its count.
    let mut counts: std::collections::BTreeMap<Vec<usize>, i64> = Default::default();
    for perm in permutations(n) {
        let cycles = cycles_of(&perm);
        let mut t: Vec<usize> = cycles.iter().map(|c| c.len()).collect();
        t.sort_unstable();
        *counts.entry(t).or_insert(0) += 1;
    }
    let mut total = MPoly::zero();
    for (t, count) in counts {
        let mut prod = MPoly::one();
        for k in &t {
            let signed = if k % 2 == 0 {
                -s[k - 1].clone()
            } else {
                s[k - 1].clone()
            };
            prod = &prod * &signed;
        }
        total = &total + &prod.scale(&rat(count));
    }
    let regular_character_ok = total.scale(&(Rat::one() / factorial(n))) == theta;

    GroupDetReport {
        theta,
        factorization_ok,
        regular_character_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn associator_ideal() {
        let alg = FrobAlg3::symbolic();
        let scan = associator_scan(&alg).unwrap();
        assert!(scan.all_divisible);
        assert!(scan.unit_quotient);
        assert!(scan.unit_slots_trivial);
        // (e2 e2) e3 - e2 (e2 e3) = (bc + d - a^2) e1.
        let target = scan
            .associators
            .iter()
            .find(|((i, j, k), _)| (*i, *j, *k) == (1, 1, 2))
            .unwrap();
        let want = -alg.relation();
        assert_eq!(target.1[0], want);
        assert!(target.1[1].is_zero());
        assert!(target.1[2].is_zero());
    }

    #[test]
    fn associators_vanish_on_shell() {
        // a = 1, b = 2, c = 3, d = a^2 - bc = -5.
        let alg = FrobAlg3::numeric(rat(1), rat(2), rat(3), rat(-5));
        let scan = associator_scan(&alg).unwrap();
        for (_, a) in &scan.associators {
            assert!(a.iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn wdvv_reduces_to_the_relation() {
        let rep = wdvv_reduction(&FrobAlg3::symbolic());
        assert!(rep.normalization);
        assert!(rep.reduces_to_relation);
        assert!(rep.relation_attained);
    }

    #[test]
    fn quartic_jets_give_chazy_form() {
        let alg96 = quartic_potential_jets(96);
        assert_eq!(alg96.relation(), quartic_reduction_target(96));
        let alg16 = quartic_potential_jets(16);
        assert_eq!(alg16.relation(), quartic_reduction_target(16));
        // phi constant: phi1 = phi2 = phi3 = 0 makes the relation vanish.
        let z = MPoly::zero();
        let r = alg96
            .relation()
            .substitute(Var::new("phi1"), &z)
            .substitute(Var::new("phi2"), &z)
            .substitute(Var::new("phi3"), &z);
        assert!(r.is_zero());
    }

    #[test]
    fn comultiplication_matches_printed_diagonal() {
        let alg = FrobAlg3::symbolic();
        let co = comultiplication(&alg);
        assert!(co.unit_is_casimir);
        assert!(co.left_right_agree);
        assert!(co.counit_ok);
        assert!(co.coassoc_divisible);
        assert!(co.coassoc_attained);
        // Delta(e2) has e1 (x) e1 coefficient c and e2 (x) e2 coefficient b.
        assert_eq!(co.delta[1][0][0], sym("c"));
        assert_eq!(co.delta[1][1][1], sym("b"));
        assert_eq!(co.delta[1][0][1], sym("a"));
        assert_eq!(co.delta[1][1][0], sym("a"));
        // Delta(e3) has e1 (x) e1 coefficient d and e2 (x) e2 coefficient a.
        assert_eq!(co.delta[2][0][0], sym("d"));
        assert_eq!(co.delta[2][1][1], sym("a"));
        assert_eq!(co.delta[2][2][2], MPoly::one());
    }

    #[test]
    fn phi_recursion_matches_cycle_sum() {
        // Phi_2(f)(x1, x2) = f(x1) f(x2) - f(x1 x2) on a quotient algebra.
        let alg = FinAlgebra::quotient_algebra(&[rat(2), rat(0), rat(1)]);
        let f = vec![rat(1), ratio(1, 2), rat(-3)];
        let x1 = vec![rat(1), rat(2), rat(0)];
        let x2 = vec![rat(0), rat(1), rat(-1)];
        let rec = phi_recursive(&alg, &f, &[x1.clone(), x2.clone()]);
        let cyc = phi_cycle_sum(&alg, &f, &[x1.clone(), x2.clone()]).unwrap();
        assert_eq!(rec, cyc);
        let direct = functional(&f, &x1) * functional(&f, &x2)
            - functional(&f, &alg.product(&x1, &x2));
        assert_eq!(rec, direct);
        assert!(phi_cycle_sum(&alg, &f, &vec![x1; 7]).is_err());
    }

    #[test]
    fn determinant_identity_small() {
        // M = [[1, 2], [3, 4]]: (tr^2 - tr M^2)/2 = -2 = det M.
        let alg = FinAlgebra::matrix_algebra(2);
        let m = vec![rat(1), rat(2), rat(3), rat(4)];
        let trace = vec![rat(1), rat(0), rat(0), rat(1)];
        let phi2 = phi_cycle_sum(&alg, &trace, &[m.clone(), m.clone()]).unwrap();
        assert_eq!(phi2.clone() / factorial(2), rat(-2));
        // polarization via F_n
        let m2 = alg.product(&m, &m);
        let s = vec![functional(&trace, &m), functional(&trace, &m2)];
        assert_eq!(f_polynomial(&s), phi2);
    }

    #[test]
    fn multiplicative_character_kills_phi2() {
        // Z/2 with the sign character: Phi_2 vanishes on the group algebra.
        let alg = FinAlgebra::cyclic_group_algebra(2);
        let chi = vec![rat(1), rat(-1)];
        for x in [vec![rat(1), rat(0)], vec![rat(3), rat(-2)]] {
            for y in [vec![rat(0), rat(1)], vec![ratio(1, 2), rat(5)]] {
                let v = phi_cycle_sum(&alg, &chi, &[x.clone(), y.clone()]).unwrap();
                assert_eq!(v, rat(0));
            }
        }
    }

    #[test]
    fn cyclotomics_multiply_to_x_n_minus_1() {
        for n in 1..=8usize {
            let mut prod = vec![rat(1)];
            for d in 1..=n {
                if n % d == 0 {
                    let phi = cyclotomic(d);
                    let mut next = vec![rat(0); prod.len() + phi.len() - 1];
                    for (i, a) in prod.iter().enumerate() {
                        for (j, &b) in phi.iter().enumerate() {
                            next[i + j] += a * rat(b);
                        }
                    }
                    prod = next;
                }
            }
            let mut want = vec![rat(0); n + 1];
            want[0] = rat(-1);
            want[n] = rat(1);
            assert_eq!(prod, want, "n = {}", n);
        }
    }

    #[test]
    fn group_determinant_n2_explicit() {
        let rep = group_determinant(2);
        let want = &xvar(0).pow(2) - &xvar(1).pow(2);
        assert_eq!(rep.theta, want);
        assert!(rep.factorization_ok);
        assert!(rep.regular_character_ok);
    }

    #[test]
    fn group_determinant_n3() {
        let rep = group_determinant(3);
        assert!(rep.factorization_ok);
        assert!(rep.regular_character_ok);
        // Theta(1, 0, 0) = det(identity) = 1.
        let point = vec![
            (Var::new("X0"), rat(1)),
            (Var::new("X1"), rat(0)),
            (Var::new("X2"), rat(0)),
        ];
        assert_eq!(rep.theta.eval_rat(&point), rat(1));
    }

    #[test]
    fn group_determinant_through_8() {
        for n in 4..=8 {
            let rep = group_determinant(n);
            assert!(rep.factorization_ok, "factorization n = {}", n);
            assert!(rep.regular_character_ok, "regular character n = {}", n);
        }
    }
}
