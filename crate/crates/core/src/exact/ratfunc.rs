//! Rational functions num/den over the multivariate polynomial ring.
//!
//! Equality is decided by cross-multiplication, so correctness never depends
//! on canonical form.  Construction strips common monomial factors and scales
//! the denominator to a primitive polynomial with positive leading
//! coefficient; no multivariate gcd is attempted.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{MPoly, Rat, Var};

#[derive(Clone)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> RatFunc {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num: MPoly::zero(),
                den: MPoly::one(),
            };
        }
        let mut num = num;
        let mut den = den;
        // Strip shared monomial content.
        for v in den.vars().to_vec() {
            let k = num.min_exp(v).min(den.min_exp(v));
            if k > 0 {
                num = num.shift_down(v, k);
                den = den.shift_down(v, k);
            }
        }
        // Make the denominator primitive with positive leading coefficient.
        let c = den.content();
        if !c.is_one() {
            let inv = Rat::one() / c;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: MPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(MPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(MPoly::one())
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(MPoly::var(v))
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(MPoly::constant(c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The rational value, when numerator and denominator are constants.
    pub fn as_constant(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// The polynomial this reduces to, when the denominator divides exactly.
    pub fn to_poly(&self) -> Option<MPoly> {
        if self.den.is_constant() {
            let c = self.den.as_constant().unwrap();
            return Some(self.num.scale(&(Rat::one() / c)));
        }
        self.num.divide_exact(&self.den).ok()
    }

    pub fn inverse(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Partial derivative via the quotient rule.
    pub fn derivative(&self, v: Var) -> RatFunc {
        let num = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        let den = &self.den * &self.den;
        RatFunc::new(num, den)
    }

    /// Substitute `v := value` in both numerator and denominator.
    pub fn substitute(&self, v: Var, value: &RatFunc) -> RatFunc {
        let n = self.num.substitute_rf(v, value);
        let d = self.den.substitute_rf(v, value);
        n / d
    }

    /// Exact evaluation at a rational point (the denominator must not vanish
    /// there).
    pub fn eval_rat(&self, assign: &[(Var, Rat)]) -> Rat {
        let d = self.den.eval_rat(assign);
        assert!(!d.is_zero(), "evaluation at a pole");
        self.num.eval_rat(assign) / d
    }
}

impl PartialEq for RatFunc {
    /// Cross-multiplied equality: n1*d2 == n2*d1.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.as_constant().unwrap().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn cross_multiplied_equality() {
        let x = Var::new("x");
        let y = Var::new("y");
        // (x^2 - y^2)/(x - y) == (x + y)/1
        let a = RatFunc::new(
            &MPoly::var(x).pow(2) - &MPoly::var(y).pow(2),
            &MPoly::var(x) - &MPoly::var(y),
        );
        let b = RatFunc::from_poly(&MPoly::var(x) + &MPoly::var(y));
        assert_eq!(a, b);
    }

    #[test]
    fn arithmetic_and_derivative() {
        let x = Var::new("x");
        // d/dx (1/x) = -1/x^2
        let inv = RatFunc::new(MPoly::one(), MPoly::var(x));
        let d = inv.derivative(x);
        let want = RatFunc::new(MPoly::int(-1), MPoly::var(x).pow(2));
        assert_eq!(d, want);
        // 1/x + 1/x = 2/x
        let s = &inv + &inv;
        assert_eq!(s, RatFunc::new(MPoly::int(2), MPoly::var(x)));
    }

    #[test]
    fn monomial_content_is_stripped() {
        let x = Var::new("x");
        let y = Var::new("y");
        let f = RatFunc::new(
            &MPoly::var(x) * &MPoly::var(y).pow(2),
            &MPoly::var(y) * &MPoly::var(x).pow(3),
        );
        assert_eq!(f.num(), &MPoly::var(y));
        assert_eq!(f.den(), &MPoly::var(x).pow(2));
    }

    #[test]
    fn eval_rat_on_quotient() {
        let x = Var::new("x");
        let f = RatFunc::new(&MPoly::var(x).pow(2) - &MPoly::one(), &MPoly::var(x) - &MPoly::one());
        assert_eq!(f.eval_rat(&[(x, rat(3))]), rat(4));
    }
}
