//! The 9x9 parametric R-matrix of the 3D Frobenius family and the exact
//! quantum Yang-Baxter factorization: Y = R12 R13 R23 - R23 R13 R12 equals
//! (a^2 - d - bc) N with N a nonzero integer matrix, which certifies both
//! directions of the QYBE criterion at once.
//!
//! Matrix-of-operator convention: columns are images of basis vectors, in
//! the basis (e1(x)e1, e1(x)e2, e1(x)e3, e2(x)e1, ..., e3(x)e3).

use num_traits::{One, Zero};

use crate::exact::{rat, ExactError, MPoly, Rat, Var};
use crate::frobenius::FrobAlg3;

fn sym(name: &str) -> MPoly {
    MPoly::var(Var::new(name))
}

/// 9x9 matrix over the polynomial ring in (a, b, c, d).
#[derive(Clone, PartialEq)]
pub struct RMat9 {
    pub m: Vec<Vec<MPoly>>,
}

/// 27x27 matrix over the same ring.
#[derive(Clone, PartialEq)]
pub struct Mat27 {
    pub m: Vec<Vec<MPoly>>,
}

/// Transcription of the printed R-matrix.
pub fn printed_r() -> RMat9 {
    let (a, b, c, d) = (sym("a"), sym("b"), sym("c"), sym("d"));
    let z = MPoly::zero;
    let one = MPoly::one;
    let a2 = &a * &a;
    let ab_c = &(&a * &b) + &c;
    let bc_d = &(&b * &c) + &d;
    let ac = &a * &c;
    let c2 = &c * &c;
    let two_a_b2 = &a.scale(&rat(2)) + &(&b * &b);
    let rows: Vec<Vec<MPoly>> = vec![
        vec![z(), c.clone(), d.clone(), c.clone(), a2.clone(), ac.clone(), d.clone(), ac.clone(), c2],
        vec![z(), a.clone(), c.clone(), a.clone(), ab_c.clone(), bc_d.clone(), c.clone(), a2.clone(), ac.clone()],
        vec![one(), z(), z(), z(), a.clone(), c.clone(), z(), c.clone(), d.clone()],
        vec![z(), a.clone(), c.clone(), a.clone(), ab_c.clone(), a2.clone(), c.clone(), bc_d.clone(), ac.clone()],
        vec![one(), b.clone(), a.clone(), b.clone(), two_a_b2, ab_c.clone(), a.clone(), ab_c.clone(), a2],
        vec![z(), one(), z(), one(), b.clone(), a.clone(), z(), a.clone(), c.clone()],
        vec![one(), z(), z(), z(), a.clone(), c.clone(), z(), c.clone(), d.clone()],
        vec![z(), one(), z(), one(), b.clone(), a.clone(), z(), a.clone(), c.clone()],
        vec![z(), z(), one(), z(), one(), z(), one(), z(), z()],
    ];
    RMat9 { m: rows }
}

/// R built from the Casimir element: x (x) y -> Q . (y (x) x) with
/// Q = e1(x)e3 + e2(x)e2 + e3(x)e1 and componentwise multiplication.
pub fn casimir_r(alg: &FrobAlg3) -> RMat9 {
    let mut m = vec![vec![MPoly::zero(); 9]; 9];
    for i in 0..3 {
        for j in 0..3 {
            let col = 3 * i + j;
            // Q . (e_j (x) e_i) = sum_m (e_m e_j) (x) (e_{2-m} e_i)
            for mm in 0..3 {
                let left = alg.basis_product(mm, j);
                let right = alg.basis_product(2 - mm, i);
                for (p, lp) in left.iter().enumerate() {
                    if lp.is_zero() {
                        continue;
                    }
                    for (q, rq) in right.iter().enumerate() {
                        if rq.is_zero() {
                            continue;
                        }
                        let row = 3 * p + q;
                        m[row][col] = &m[row][col] + &(lp * rq);
                    }
                }
            }
        }
    }
    RMat9 { m }
}

/// Which reading of the printed matrix matches the Casimir construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    ColumnsAreImages,
    RowsAreImages,
}

/// Build R both ways and establish the matching convention.  A mismatch in
/// both readings would falsify the transcription.
pub fn build_r() -> Result<(RMat9, Convention), ExactError> {
    let printed = printed_r();
    let constructed = casimir_r(&FrobAlg3::symbolic());
    if printed == constructed {
        return Ok((printed, Convention::ColumnsAreImages));
    }
    let transposed = RMat9 {
        m: (0..9)
            .map(|i| (0..9).map(|j| printed.m[j][i].clone()).collect())
            .collect(),
    };
    if transposed == constructed {
        return Ok((transposed, Convention::RowsAreImages));
    }
    Err(ExactError::Singular(
        "printed R-matrix matches neither reading of the Casimir construction".into(),
    ))
}

impl RMat9 {
    /// Leg embeddings into the triple tensor product by index arithmetic on
    /// (p, q, r) triples.
    pub fn embed12(&self) -> Mat27 {
        self.embed(|p, q, r| ((p, q), r, 2, (0usize, 1usize)))
    }

    pub fn embed23(&self) -> Mat27 {
        self.embed(|p, q, r| ((q, r), p, 0, (1usize, 2usize)))
    }

    pub fn embed13(&self) -> Mat27 {
        self.embed(|p, q, r| ((p, r), q, 1, (0usize, 2usize)))
    }

    fn embed(
        &self,
        split: impl Fn(usize, usize, usize) -> ((usize, usize), usize, usize, (usize, usize)),
    ) -> Mat27 {
        let mut m = vec![vec![MPoly::zero(); 27]; 27];
        for p in 0..3 {
            for q in 0..3 {
                for r in 0..3 {
                    let row = 9 * p + 3 * q + r;
                    let ((rp, rq), fixed, fixed_slot, (s0, s1)) = split(p, q, r);
                    let rrow = 3 * rp + rq;
                    for i in 0..3 {
                        for j in 0..3 {
                            let rcol = 3 * i + j;
                            if self.m[rrow][rcol].is_zero() {
                                continue;
                            }
                            let mut col_idx = [0usize; 3];
                            col_idx[s0] = i;
                            col_idx[s1] = j;
                            col_idx[fixed_slot] = fixed;
                            let col = 9 * col_idx[0] + 3 * col_idx[1] + col_idx[2];
                            m[row][col] = self.m[rrow][rcol].clone();
                        }
                    }
                }
            }
        }
        Mat27 { m }
    }
}

impl Mat27 {
    pub fn mul(&self, o: &Mat27) -> Mat27 {
        let mut m = vec![vec![MPoly::zero(); 27]; 27];
        for i in 0..27 {
            for k in 0..27 {
                if self.m[i][k].is_zero() {
                    continue;
                }
                for j in 0..27 {
                    if o.m[k][j].is_zero() {
                        continue;
                    }
                    m[i][j] = &m[i][j] + &(&self.m[i][k] * &o.m[k][j]);
                }
            }
        }
        Mat27 { m }
    }

    pub fn sub(&self, o: &Mat27) -> Mat27 {
        Mat27 {
            m: (0..27)
                .map(|i| (0..27).map(|j| &self.m[i][j] - &o.m[i][j]).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|row| row.iter().all(|e| e.is_zero()))
    }

    pub fn substitute(&self, v: Var, value: &MPoly) -> Mat27 {
        Mat27 {
            m: self
                .m
                .iter()
                .map(|row| row.iter().map(|e| e.substitute(v, value)).collect())
                .collect(),
        }
    }
}

pub struct QybeFactorization {
    pub defect: Mat27,
    pub cofactor: Mat27,
    /// entries of the cofactor equal to the constant 1
    pub ones_in_cofactor: usize,
    pub defect_nonzero: bool,
    pub cofactor_nonzero: bool,
}

/// Y = R12 R13 R23 - R23 R13 R12, divided entrywise by a^2 - d - bc.
pub fn qybe_defect(r: &RMat9) -> Result<QybeFactorization, ExactError> {
    let rel = FrobAlg3::symbolic().relation();
    let r12 = r.embed12();
    let r13 = r.embed13();
    let r23 = r.embed23();
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    let defect = lhs.sub(&rhs);
    let mut cofactor = vec![vec![MPoly::zero(); 27]; 27];
    let mut ones = 0usize;
    for i in 0..27 {
        for j in 0..27 {
            if defect.m[i][j].is_zero() {
                continue;
            }
            let q = defect.m[i][j].divide_exact(&rel)?;
            if q == MPoly::one() {
                ones += 1;
            }
            cofactor[i][j] = q;
        }
    }
    let cofactor = Mat27 { m: cofactor };
    Ok(QybeFactorization {
        defect_nonzero: !defect.is_zero(),
        cofactor_nonzero: !cofactor.is_zero(),
        defect,
        cofactor,
        ones_in_cofactor: ones,
    })
}

/// Numeric QYBE check at rational parameters: returns whether
/// R12 R13 R23 = R23 R13 R12 exactly.
pub fn qybe_holds_at(r: &RMat9, a: Rat, b: Rat, c: Rat, d: Rat) -> bool {
    let assign: Vec<(Var, Rat)> = vec![
        (Var::new("a"), a),
        (Var::new("b"), b),
        (Var::new("c"), c),
        (Var::new("d"), d),
    ];
    let eval = |p: &MPoly| -> MPoly {
        let mut q = p.clone();
        for (v, val) in &assign {
            q = q.substitute(*v, &MPoly::constant(val.clone()));
        }
        q
    };
    let num = RMat9 {
        m: r.m
            .iter()
            .map(|row| row.iter().map(eval).collect())
            .collect(),
    };
    let lhs = num.embed12().mul(&num.embed13()).mul(&num.embed23());
    let rhs = num.embed23().mul(&num.embed13()).mul(&num.embed12());
    lhs.sub(&rhs).is_zero()
}

/// Triple tensor elements of the 3D algebra over exact rationals.
fn triple_product(
    table: &[[[Rat; 3]; 3]; 3],
    u: &[Rat; 27],
    v: &[Rat; 27],
) -> [Rat; 27] {
    let mut out: [Rat; 27] = std::array::from_fn(|_| Rat::zero());
    for iu in 0..27 {
        if u[iu].is_zero() {
            continue;
        }
        let (i, j, k) = (iu / 9, (iu / 3) % 3, iu % 3);
        for iv in 0..27 {
            if v[iv].is_zero() {
                continue;
            }
            let (l, m, n) = (iv / 9, (iv / 3) % 3, iv % 3);
            let f = &u[iu] * &v[iv];
            for p in 0..3 {
                if table[i][l][p].is_zero() {
                    continue;
                }
                for q in 0..3 {
                    if table[j][m][q].is_zero() {
                        continue;
                    }
                    for r in 0..3 {
                        if table[k][n][r].is_zero() {
                            continue;
                        }
                        let idx = 9 * p + 3 * q + r;
                        out[idx] += &f * &(&table[i][l][p] * &(&table[j][m][q] * &table[k][n][r]));
                    }
                }
            }
        }
    }
    out
}

/// Link to the potential picture: specialize (a, b, c, d) to the quartic
/// third-derivative jets a = -x^2 p1/8, b = -x p0/4, c = -x^3 p2/24,
/// d = -x^4 p3/96 at a rational point.  QYBE then holds iff the jets satisfy
/// p3 = p0 p2 - (3/2) p1^2, i.e. iff the Chazy-side constraint holds.
pub fn qybe_at_potential_jets(r: &RMat9, x: Rat, jets: [Rat; 4]) -> bool {
    let [p0, p1, p2, p3] = jets;
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    let x4 = &x2 * &x2;
    let a = -(&x2 * &p1) / Rat::from_integer(8.into());
    let b = -(&x * &p0) / Rat::from_integer(4.into());
    let c = -(&x3 * &p2) / Rat::from_integer(24.into());
    let d = -(&x4 * &p3) / Rat::from_integer(96.into());
    qybe_holds_at(r, a, b, c, d)
}

/// Braid relation Q12 Q23 Q12 = Q23 Q12 Q23 in the associative algebra with
/// d = a^2 - bc, evaluated in the 27-dimensional triple tensor product.
pub fn braid_check(a: Rat, b: Rat, c: Rat) -> bool {
    let d = &(&a * &a) - &(&b * &c);
    let alg = FrobAlg3::numeric(a, b, c, d);
    let mut table: [[[Rat; 3]; 3]; 3] = std::array::from_fn(|_| {
        std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()))
    });
    for i in 0..3 {
        for j in 0..3 {
            let p = alg.basis_product(i, j);
            for (k, pk) in p.iter().enumerate() {
                table[i][j][k] = pk.as_constant().unwrap();
            }
        }
    }
    // Q = e1 (x) e3 + e2 (x) e2 + e3 (x) e1 on legs (1,2) and (2,3); the
    // remaining leg carries the unit e1.
    let mut q12: [Rat; 27] = std::array::from_fn(|_| Rat::zero());
    let mut q23: [Rat; 27] = std::array::from_fn(|_| Rat::zero());
    for m in 0..3 {
        q12[9 * m + 3 * (2 - m)] = Rat::one();
        q23[3 * m + (2 - m)] = Rat::one();
    }
    let lhs = triple_product(&table, &triple_product(&table, &q12, &q23), &q12);
    let rhs = triple_product(&table, &triple_product(&table, &q23, &q12), &q23);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::numeric::seeded_rng;
    use rand::Rng;

    #[test]
    fn casimir_matches_printed_matrix() {
        let (r, convention) = build_r().unwrap();
        assert_eq!(convention, Convention::ColumnsAreImages);
        // Column of e1 (x) e1 is the Casimir: ones at rows 3, 5, 7 (1-based).
        for row in 0..9 {
            let want = if row == 2 || row == 4 || row == 6 {
                MPoly::one()
            } else {
                MPoly::zero()
            };
            assert_eq!(r.m[row][0], want);
        }
        // Center entry (e2(x)e2, e2(x)e2) is 2a + b^2.
        let want = &sym("a").scale(&rat(2)) + &(&sym("b") * &sym("b"));
        assert_eq!(r.m[4][4], want);
    }

    #[test]
    fn zero_specialization_is_permutation_like() {
        let (r, _) = build_r().unwrap();
        let zero = MPoly::zero();
        for row in &r.m {
            for e in row {
                let v = e
                    .substitute(Var::new("a"), &zero)
                    .substitute(Var::new("b"), &zero)
                    .substitute(Var::new("c"), &zero)
                    .substitute(Var::new("d"), &zero);
                assert!(v.is_zero() || v == MPoly::one());
            }
        }
    }

    #[test]
    fn qybe_factorization_exact() {
        let (r, _) = build_r().unwrap();
        let f = qybe_defect(&r).unwrap();
        assert!(f.defect_nonzero);
        assert!(f.cofactor_nonzero);
        assert!(f.ones_in_cofactor > 0, "expected some entries equal to 1");
        // Substituting d = a^2 - bc kills the defect.
        let d_val = &(&sym("a") * &sym("a")) - &(&sym("b") * &sym("c"));
        assert!(f.defect.substitute(Var::new("d"), &d_val).is_zero());
    }

    #[test]
    fn qybe_numeric_spot_checks() {
        let (r, _) = build_r().unwrap();
        assert!(qybe_holds_at(&r, rat(1), rat(2), rat(3), rat(-5)));
        assert!(!qybe_holds_at(&r, rat(1), rat(2), rat(3), rat(-4)));
    }

    #[test]
    fn qybe_iff_chazy_constraint_at_potential_jets() {
        let (r, _) = build_r().unwrap();
        let mut rng = seeded_rng(0, 92);
        use rand::Rng;
        for _ in 0..10 {
            let x = ratio(rng.gen_range(1..=5), rng.gen_range(1..=2));
            let p0 = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2));
            let p1 = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2));
            let p2 = ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2));
            // on the constraint p3 = p0 p2 - (3/2) p1^2
            let p3 = &(&p0 * &p2) - &(&p1 * &p1) * ratio(3, 2);
            assert!(qybe_at_potential_jets(&r, x.clone(), [
                p0.clone(),
                p1.clone(),
                p2.clone(),
                p3.clone()
            ]));
            // off the constraint
            let bad = &p3 + ratio(1, 1);
            assert!(!qybe_at_potential_jets(&r, x, [p0, p1, p2, bad]));
        }
    }

    #[test]
    fn braid_relation_on_shell() {
        assert!(braid_check(rat(0), rat(0), rat(0)));
        assert!(braid_check(rat(1), rat(2), rat(3)));
        let mut rng = seeded_rng(0, 91);
        for _ in 0..20 {
            let a = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            let b = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            let c = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            assert!(braid_check(a, b, c));
        }
    }
}
