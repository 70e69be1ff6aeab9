//! Resultants via the Sylvester matrix and fraction-free Bareiss elimination.
//!
//! Bareiss keeps all intermediate entries polynomial: every division it
//! performs is exact over an integral domain, which `divide_exact` asserts.

use super::{ExactError, MPoly, Var};

/// Determinant of a square matrix of polynomials, fraction-free.
pub fn det_bareiss(mut m: Vec<Vec<MPoly>>) -> Result<MPoly, ExactError> {
    let n = m.len();
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(MPoly::zero());
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.divide_exact(&prev)?;
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { -det } else { det })
}

/// Sylvester matrix of p and q with respect to `var`.
fn sylvester(p: &MPoly, q: &MPoly, var: Var) -> (Vec<Vec<MPoly>>, usize, usize) {
    let dp = p.degree_in(var) as usize;
    let dq = q.degree_in(var) as usize;
    let n = dp + dq;
    let pc: Vec<MPoly> = (0..=dp).map(|k| p.coeff_of_power(var, (dp - k) as u16)).collect();
    let qc: Vec<MPoly> = (0..=dq).map(|k| q.coeff_of_power(var, (dq - k) as u16)).collect();
    let mut m = vec![vec![MPoly::zero(); n]; n];
    for r in 0..dq {
        for (k, c) in pc.iter().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..dp {
        for (k, c) in qc.iter().enumerate() {
            m[dq + r][r + k] = c.clone();
        }
    }
    (m, dp, dq)
}

/// Resultant of p and q with respect to `var`: the determinant of their
/// Sylvester matrix, with entries in the remaining variables.
pub fn resultant(p: &MPoly, q: &MPoly, var: Var) -> Result<MPoly, ExactError> {
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        return Err(ExactError::NotElimination(format!(
            "degree 0 in {} for an argument",
            var
        )));
    }
    let (m, _, _) = sylvester(p, q, var);
    det_bareiss(m)
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn resultant_linear_divisor() {
        // Res(x^2 - 1, x - 2, x) = (2-1)(2+1) = 3
        let x = Var::new("x");
        let p = &MPoly::var(x).pow(2) - &MPoly::one();
        let q = &MPoly::var(x) - &MPoly::int(2);
        assert_eq!(resultant(&p, &q, x).unwrap(), MPoly::int(3));
    }

    #[test]
    fn resultant_common_root_is_zero() {
        let x = Var::new("x");
        let p = MPoly::var(x);
        assert!(resultant(&p, &p, x).unwrap().is_zero());
    }

    #[test]
    fn resultant_two_by_two_sylvester() {
        // Res(a*x + b, c*x + d, x) = a*d - b*c
        let (x, a, b, c, d) = (
            Var::new("x"),
            Var::new("a"),
            Var::new("b"),
            Var::new("c"),
            Var::new("d"),
        );
        let p = &(&MPoly::var(a) * &MPoly::var(x)) + &MPoly::var(b);
        let q = &(&MPoly::var(c) * &MPoly::var(x)) + &MPoly::var(d);
        let want = &(&MPoly::var(a) * &MPoly::var(d)) - &(&MPoly::var(b) * &MPoly::var(c));
        assert_eq!(resultant(&p, &q, x).unwrap(), want);
    }

    #[test]
    fn resultant_rejects_degree_zero() {
        let x = Var::new("x");
        let p = MPoly::var(x);
        let q = MPoly::int(5);
        let err = resultant(&p, &q, x).unwrap_err();
        assert!(err.to_string().contains("not a bivariate elimination"));
    }

    #[test]
    fn bareiss_matches_planted_factorization() {
        // det of [[x, 1], [1, x]] = x^2 - 1
        let x = Var::new("x");
        let m = vec![
            vec![MPoly::var(x), MPoly::one()],
            vec![MPoly::one(), MPoly::var(x)],
        ];
        assert_eq!(det_bareiss(m).unwrap(), &MPoly::var(x).pow(2) - &MPoly::one());
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let m = vec![
            vec![MPoly::zero(), MPoly::one()],
            vec![MPoly::one(), MPoly::zero()],
        ];
        assert_eq!(det_bareiss(m).unwrap(), MPoly::constant(rat(-1)));
    }

    #[test]
    fn resultant_vanishes_iff_planted_common_factor() {
        // (x - y)(x + y^2) and (x - y)(x + 3) share the factor x - y;
        // replacing it in one argument by (x - y - 1) removes the common
        // root and the resultant becomes nonzero.
        let x = Var::new("x");
        let y = Var::new("y");
        let common = &MPoly::var(x) - &MPoly::var(y);
        let p = &common * &(&MPoly::var(x) + &MPoly::var(y).pow(2));
        let q = &common * &(&MPoly::var(x) + &MPoly::int(3));
        assert!(resultant(&p, &q, x).unwrap().is_zero());
        let q2 = &(&common - &MPoly::one()) * &(&MPoly::var(x) + &MPoly::int(3));
        assert!(!resultant(&p, &q2, x).unwrap().is_zero());
    }

    // Independent oracle: Laplace cofactor expansion of the Sylvester
    // matrix, evaluated entrywise at a rational point, cross-checks the
    // fraction-free elimination on a many-variable instance.
    fn det_laplace(m: Vec<Vec<crate::exact::Rat>>) -> crate::exact::Rat {
        use num_traits::Zero;
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut sum = rat(0);
        for c in 0..n {
            if m[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<crate::exact::Rat>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let cof = det_laplace(minor) * m[0][c].clone();
            if c % 2 == 0 {
                sum += cof;
            } else {
                sum -= cof;
            }
        }
        sum
    }

    #[test]
    fn bareiss_matches_laplace_oracle_at_a_point() {
        use crate::exact::{ratio, Rat};
        let (x, y, z, w) = (Var::new("x"), Var::new("y"), Var::new("z"), Var::new("w"));
        // Two dense quadratics in w with coefficients in x, y, z.
        let p = &(&MPoly::var(w).pow(2) * &(&MPoly::var(x) + &MPoly::one()))
            + &(&(&MPoly::var(w) * &(&MPoly::var(y).pow(2) - &MPoly::var(z)))
                + &(&MPoly::var(x) * &MPoly::var(z)));
        let q = &(&MPoly::var(w).pow(2) * &MPoly::var(z))
            + &(&(&MPoly::var(w) * &MPoly::var(x)) + &(&MPoly::var(y) - &MPoly::int(2)));
        let res = resultant(&p, &q, w).unwrap();
        let assign = vec![(x, ratio(1, 2)), (y, ratio(-2, 3)), (z, ratio(5, 7))];
        let got = res.eval_rat(&assign);
        let mut pw = vec![Rat::from_integer(0.into()); 3];
        let mut qw = vec![Rat::from_integer(0.into()); 3];
        for k in 0..=2u16 {
            pw[k as usize] = p.coeff_of_power(w, k).eval_rat(&assign);
            qw[k as usize] = q.coeff_of_power(w, k).eval_rat(&assign);
        }
        let m = vec![
            vec![pw[2].clone(), pw[1].clone(), pw[0].clone(), rat(0)],
            vec![rat(0), pw[2].clone(), pw[1].clone(), pw[0].clone()],
            vec![qw[2].clone(), qw[1].clone(), qw[0].clone(), rat(0)],
            vec![rat(0), qw[2].clone(), qw[1].clone(), qw[0].clone()],
        ];
        assert_eq!(got, det_laplace(m));
    }
}
