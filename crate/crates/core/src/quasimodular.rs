//! Exact q-expansion arithmetic for the Eisenstein series E2, E4, E6 and the
//! identities the workbench leans on: the Ramanujan system, the Chazy
//! equation for E2, the eliminations E4 = E2^2 - 12 E2', E6 = E2^3 - 18 E2 E2'
//! + 36 E2'', and the curve-family dictionary a1 = -pi^2 E2, a2 = 4 pi^4 E2',
//! a3 = -(8/3) pi^6 E2''.
//!
//! Everything here is an exact rational identity of truncated series; there
//! are no tolerances.  pi is never evaluated: it enters the dictionary check
//! only as the formal symbol p = pi^2.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{rat, ratio, ExactError, MPoly, Rat, Var};
use crate::QSeries;

/// sigma_k(n): sum of k-th powers of the divisors of n.
fn divisor_sum(n: u64, k: u32) -> BigInt {
    let mut s = BigInt::zero();
    for d in 1..=n {
        if n % d == 0 {
            s += BigInt::from(d).pow(k);
        }
    }
    s
}

/// Eisenstein series E_k for k in {2, 4, 6}, to the given q-order.
///
/// The expansions are the classical divisor-sum ones; the Ramanujan and Chazy
/// identities below cross-validate them independently.
pub fn eisenstein(k: u32, order: usize) -> Result<QSeries, ExactError> {
    let (scale, power) = match k {
        2 => (rat(-24), 1),
        4 => (rat(240), 3),
        6 => (rat(-504), 5),
        _ => {
            return Err(ExactError::Singular(format!(
                "unsupported Eisenstein weight {}",
                k
            )))
        }
    };
    Ok(QSeries::from_fn(order, |n| {
        if n == 0 {
            Rat::one()
        } else {
            &scale * Rat::from_integer(divisor_sum(n as u64, power))
        }
    }))
}

/// The three Ramanujan identities, checked coefficientwise:
/// E2' = (E2^2 - E4)/12, E4' = (E2 E4 - E6)/3, E6' = (E2 E6 - E4^2)/2,
/// with (-)' = q d/dq.
pub fn verify_ramanujan(order: usize) -> bool {
    let e2 = eisenstein(2, order).unwrap();
    let e4 = eisenstein(4, order).unwrap();
    let e6 = eisenstein(6, order).unwrap();
    let r1 = e2
        .euler_derivative()
        .sub(&e2.mul(&e2).sub(&e4).scale(&ratio(1, 12)));
    let r2 = e4
        .euler_derivative()
        .sub(&e2.mul(&e4).sub(&e6).scale(&ratio(1, 3)));
    let r3 = e6
        .euler_derivative()
        .sub(&e2.mul(&e6).sub(&e4.mul(&e4)).scale(&ratio(1, 2)));
    r1.is_zero() && r2.is_zero() && r3.is_zero()
}

/// Chazy III for E2: E2''' - E2 E2'' + (3/2)(E2')^2 = 0, derivatives q d/dq.
pub fn verify_chazy_e2(order: usize) -> bool {
    chazy_defect_e2(order).is_zero()
}

pub fn chazy_defect_e2(order: usize) -> QSeries {
    let y = eisenstein(2, order).unwrap();
    chazy_defect_q(&y)
}

/// y''' - y y'' + (3/2)(y')^2 for a q-expansion, derivatives q d/dq.
pub fn chazy_defect_q(y: &QSeries) -> QSeries {
    let d1 = y.euler_derivative();
    let d2 = d1.euler_derivative();
    let d3 = d2.euler_derivative();
    d3.sub(&y.mul(&d2)).add(&d1.mul(&d1).scale(&ratio(3, 2)))
}

/// E4 and E6 expressed through E2 alone.
pub fn verify_elimination(order: usize) -> bool {
    let e2 = eisenstein(2, order).unwrap();
    let e4 = eisenstein(4, order).unwrap();
    let e6 = eisenstein(6, order).unwrap();
    let d1 = e2.euler_derivative();
    let d2 = d1.euler_derivative();
    let id4 = e4.sub(&e2.mul(&e2).sub(&d1.scale(&rat(12))));
    let id6 = e6.sub(
        &e2.pow(3)
            .sub(&e2.mul(&d1).scale(&rat(18)))
            .add(&d2.scale(&rat(36))),
    );
    id4.is_zero() && id6.is_zero()
}

/// Symbolic curve dictionary over Q[E2, E2', E2'', p] with p standing for
/// pi^2.  Eliminating E4, E6 via the Ramanujan identities and substituting
/// alpha = -p E2/3, g2 = 4 p^2 E4/3, g3 = 8 p^3 E6/27 into
/// a1 = 3 alpha, a2 = 3 alpha^2 - g2/4, a3 = alpha^3 - g2 alpha/4 - g3/4
/// must give a1 = -p E2, a2 = 4 p^2 E2', a3 = -(8/3) p^3 E2''.
pub struct CurveDictionary {
    pub a1: MPoly,
    pub a2: MPoly,
    pub a3: MPoly,
    pub a1_expected: MPoly,
    pub a2_expected: MPoly,
    pub a3_expected: MPoly,
}

pub fn curve_dictionary() -> CurveDictionary {
    let e2 = MPoly::var(Var::new("E2"));
    let e2p = MPoly::var(Var::new("E2p"));
    let e2pp = MPoly::var(Var::new("E2pp"));
    let p = MPoly::var(Var::new("p"));

    // E4, E6 eliminated through E2 and its derivatives.
    let e4 = &(&e2 * &e2) - &e2p.scale(&rat(12));
    let e6 = &(&e2.pow(3) - &(&e2 * &e2p).scale(&rat(18))) + &e2pp.scale(&rat(36));

    let alpha = (&p * &e2).scale(&ratio(-1, 3));
    let g2 = (&p.pow(2) * &e4).scale(&ratio(4, 3));
    let g3 = (&p.pow(3) * &e6).scale(&ratio(8, 27));

    let a1 = alpha.scale(&rat(3));
    let a2 = &alpha.pow(2).scale(&rat(3)) - &g2.scale(&ratio(1, 4));
    let a3 = &(&alpha.pow(3) - &(&g2 * &alpha).scale(&ratio(1, 4))) - &g3.scale(&ratio(1, 4));

    CurveDictionary {
        a1,
        a2,
        a3,
        a1_expected: -(&p * &e2),
        a2_expected: (&p.pow(2) * &e2p).scale(&rat(4)),
        a3_expected: (&p.pow(3) * &e2pp).scale(&ratio(-8, 3)),
    }
}

pub fn verify_curve_dictionary() -> bool {
    let d = curve_dictionary();
    d.a1 == d.a1_expected && d.a2 == d.a2_expected && d.a3 == d.a3_expected
}

/// The discriminant form Delta_q = (E4^3 - E6^2)/1728; its q-expansion must
/// have integer coefficients, starting q - 24 q^2 + 252 q^3 - ...
pub fn discriminant_q(order: usize) -> QSeries {
    let e4 = eisenstein(4, order).unwrap();
    let e6 = eisenstein(6, order).unwrap();
    e4.pow(3).sub(&e6.mul(&e6)).scale(&ratio(1, 1728))
}

pub fn verify_discriminant_integrality(order: usize) -> bool {
    let d = discriminant_q(order);
    if !d.coeff(0).is_zero() || d.coeff(1) != rat(1) {
        return false;
    }
    d.coeffs().iter().all(|c| c.denom().is_one())
}
