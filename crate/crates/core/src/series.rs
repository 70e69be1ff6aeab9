//! Truncated formal power series with exact coefficients.
//!
//! The coefficient ring is generic: plain rationals for q-expansions,
//! polynomials in curve parameters for the genus computations, so parametric
//! identities are proved for all parameter values at once.  Univariate series
//! are dense; multivariate series are sparse maps truncated by total degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use num_traits::{One, Zero};

use crate::exact::{MPoly, Rat};

/// Coefficient ring for truncated series.
pub trait SeriesCoeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::fmt::Display
{
    fn from_rat(r: Rat) -> Self;
    /// Multiply by a rational scalar.
    fn scale(&self, r: &Rat) -> Self;
    /// Multiplicative inverse, when this coefficient is a unit.
    fn try_invert(&self) -> Option<Self>;
}

impl SeriesCoeff for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn try_invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rat::one() / self)
        }
    }
}

impl SeriesCoeff for MPoly {
    fn from_rat(r: Rat) -> Self {
        MPoly::constant(r)
    }
    fn scale(&self, r: &Rat) -> Self {
        MPoly::scale(self, r)
    }
    /// Only unit polynomial constants are invertible.
    fn try_invert(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if c.is_zero() {
            None
        } else {
            Some(MPoly::constant(Rat::one() / c))
        }
    }
}

/// Univariate truncated power series: coefficients for degrees 0..=order.
#[derive(Clone, PartialEq)]
pub struct Series1<C: SeriesCoeff> {
    coeffs: Vec<C>,
}

impl<C: SeriesCoeff> Series1<C> {
    pub fn zero(order: usize) -> Self {
        Series1 {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = C::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty());
        Series1 { coeffs }
    }

    /// Series with coefficients produced by `f(n)`.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> C) -> Self {
        Series1 {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lower the truncation order (never extend).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series1 {
            coeffs: (0..=order).map(|n| self.coeff(n)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series1::from_fn(order, |n| self.coeff(n) + rhs.coeff(n))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series1::from_fn(order, |n| self.coeff(n) - rhs.coeff(n))
    }

    pub fn neg(&self) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn scale_coeff(&self, k: &C) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![C::zero(); order + 1];
        for i in 0..=order {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=order - i {
                let b = rhs.coeff(j);
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        Series1 { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Series1::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn reciprocal(&self) -> Self {
        let inv0 = self
            .coeff(0)
            .try_invert()
            .expect("reciprocal needs an invertible constant term");
        let order = self.order();
        let mut out = vec![C::zero(); order + 1];
        out[0] = inv0.clone();
        for n in 1..=order {
            let mut s = C::zero();
            for k in 1..=n {
                s = s + self.coeff(k) * out[n - k].clone();
            }
            out[n] = -(inv0.clone() * s);
        }
        Series1 { coeffs: out }
    }

    /// Square root with constant term 1 of a series with constant term 1.
    pub fn sqrt_unit(&self) -> Self {
        assert!(
            self.coeff(0).is_one(),
            "sqrt_unit needs constant term exactly 1"
        );
        let order = self.order();
        let half = Rat::new(1.into(), 2.into());
        let mut out = vec![C::zero(); order + 1];
        out[0] = C::one();
        for n in 1..=order {
            // 2*s_n = a_n - sum_{k=1}^{n-1} s_k s_{n-k}
            let mut s = self.coeff(n);
            for k in 1..n {
                s = s - out[k].clone() * out[n - k].clone();
            }
            out[n] = s.scale(&half);
        }
        Series1 { coeffs: out }
    }

    /// Composition self(g); g must have zero constant term.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(g.coeff(0).is_zero(), "composition needs g(0) = 0");
        let order = self.order().min(g.order());
        let mut acc = Series1::zero(order);
        // Horner: a_0 + g*(a_1 + g*(a_2 + ...))
        for n in (0..=order).rev() {
            acc = acc.mul(&g.truncate(order));
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeff(n);
        }
        acc
    }

    /// Compositional inverse: s(rev(s)) = t.  Requires s(0) = 0 and s'(0)
    /// invertible.
    pub fn reversion(&self) -> Self {
        assert!(self.coeff(0).is_zero(), "reversion needs s(0) = 0");
        let c1 = self
            .coeff(1)
            .try_invert()
            .expect("reversion needs invertible s'(0)");
        let order = self.order();
        let mut h = Series1::zero(order);
        if order >= 1 {
            h.coeffs[1] = c1.clone();
        }
        for n in 2..=order {
            // Coefficient of t^n in s(h) must be 0; it is linear in h_n with
            // slope s'(0).
            let trial = self.compose(&h);
            h.coeffs[n] = -(c1.clone() * trial.coeff(n));
        }
        h
    }

    /// Termwise derivative (order drops by one).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Series1::from_fn(order, |n| {
            self.coeff(n + 1).scale(&Rat::from_integer(((n + 1) as i64).into()))
        })
    }

    /// Termwise antiderivative with zero constant term (order grows by one).
    pub fn integrate(&self) -> Self {
        let mut out = vec![C::zero(); self.order() + 2];
        for n in 0..=self.order() {
            out[n + 1] = self
                .coeff(n)
                .scale(&Rat::new(1.into(), ((n + 1) as i64).into()));
        }
        Series1 { coeffs: out }
    }

    /// Euler derivative t*d/dt (the q d/dq operator for q-expansions).
    pub fn euler_derivative(&self) -> Self {
        Series1::from_fn(self.order(), |n| {
            self.coeff(n).scale(&Rat::from_integer((n as i64).into()))
        })
    }

    /// Keep only even-degree coefficients, halving exponents: t^{2k} -> t^k.
    /// Fails if an odd coefficient is nonzero.
    pub fn contract_even(&self) -> Self {
        for n in (1..=self.order()).step_by(2) {
            assert!(self.coeff(n).is_zero(), "series has odd-degree terms");
        }
        Series1::from_fn(self.order() / 2, |n| self.coeff(2 * n))
    }

    /// Substitute t -> t^2 (doubling the order).
    pub fn expand_square(&self) -> Self {
        let mut out = vec![C::zero(); 2 * self.order() + 1];
        for n in 0..=self.order() {
            out[2 * n] = self.coeff(n);
        }
        Series1 { coeffs: out }
    }
}

impl<C: SeriesCoeff> fmt::Display for Series1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({})*t^{}", c, n));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{} + O(t^{})", parts.join(" + "), self.order() + 1)
        }
    }
}

impl<C: SeriesCoeff> fmt::Debug for Series1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Multivariate truncated power series: sparse map from exponent vectors to
/// coefficients, truncated by total degree.
#[derive(Clone, PartialEq)]
pub struct MSeries<C: SeriesCoeff> {
    nvars: usize,
    order: usize,
    terms: BTreeMap<Vec<u16>, C>,
}

impl<C: SeriesCoeff> MSeries<C> {
    pub fn zero(nvars: usize, order: usize) -> Self {
        MSeries {
            nvars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, order: usize, c: C) -> Self {
        let mut s = Self::zero(nvars, order);
        if !c.is_zero() {
            s.terms.insert(vec![0; nvars], c);
        }
        s
    }

    /// Bulk construction; entries beyond the order are rejected, duplicates
    /// are summed.
    pub fn from_entries(nvars: usize, order: usize, entries: Vec<(Vec<u16>, C)>) -> Self {
        let mut s = Self::zero(nvars, order);
        for (e, c) in entries {
            assert_eq!(e.len(), nvars);
            assert!(total(&e) <= order, "entry beyond truncation order");
            s.add_to(e, c);
        }
        s
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        Self::constant(nvars, order, C::one())
    }

    /// The series `x_i`.
    pub fn var(nvars: usize, order: usize, i: usize) -> Self {
        let mut s = Self::zero(nvars, order);
        if order >= 1 {
            let mut e = vec![0; nvars];
            e[i] = 1;
            s.terms.insert(e, C::one());
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, exps: &[u16]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.nvars])
    }

    /// Minimal total degree of a nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(|e| total(e)).min()
    }

    fn insert(&mut self, e: Vec<u16>, c: C) {
        if !c.is_zero() {
            self.terms.insert(e, c);
        }
    }

    fn add_to(&mut self, e: Vec<u16>, c: C) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&e).unwrap_or_else(C::zero);
        let s = cur + c;
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    /// Lower the truncation order (never extend: coefficients beyond the
    /// current order are unknown, not zero).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| total(e) <= order)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        MSeries {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (e, c) in rhs.terms.iter().filter(|(e, _)| total(e) <= order) {
            out.add_to(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MSeries {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        MSeries {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.scale(r)))
                .collect(),
        }
    }

    pub fn scale_coeff(&self, k: &C) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            out.add_to(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(self.nvars, order);
        for (ea, ca) in &self.terms {
            let da = total(ea);
            if da > order {
                continue;
            }
            for (eb, cb) in &rhs.terms {
                if da + total(eb) > order {
                    continue;
                }
                let e: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_to(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.nvars, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn reciprocal(&self) -> Self {
        let inv0 = self
            .constant_term()
            .try_invert()
            .expect("reciprocal needs an invertible constant term");
        // Newton-free: peel the constant, then geometric series degree by
        // degree.  B satisfies B = inv0 - inv0 * (A - a0) * B.
        let a0 = self.constant_term();
        let rest = self.sub(&Self::constant(self.nvars, self.order, a0));
        let mut b = Self::constant(self.nvars, self.order, inv0.clone());
        let inv0s = Self::constant(self.nvars, self.order, inv0);
        // Each multiplication by `rest` raises the valuation by >= 1.
        for _ in 0..self.order {
            b = inv0s.sub(&inv0s.mul(&rest.mul(&b)));
        }
        b
    }

    pub fn sqrt_unit(&self) -> Self {
        assert!(
            self.constant_term().is_one(),
            "sqrt_unit needs constant term exactly 1"
        );
        let half = Rat::new(1.into(), 2.into());
        let mut out = Self::one(self.nvars, self.order);
        // Degree-by-degree: 2*s_m = a_m - sum_{k+l=m, k,l>0} s_k s_l.
        for d in 1..=self.order {
            let square = out.mul(&out);
            let mut layer: Vec<(Vec<u16>, C)> = Vec::new();
            for (e, c) in self.terms.iter().filter(|(e, _)| total(e) == d) {
                layer.push((e.clone(), c.clone()));
            }
            for (e, c) in square.terms.iter().filter(|(e, _)| total(e) == d) {
                layer.push((e.clone(), -c.clone()));
            }
            let mut acc: BTreeMap<Vec<u16>, C> = BTreeMap::new();
            for (e, c) in layer {
                let cur = acc.remove(&e).unwrap_or_else(C::zero);
                let s = cur + c;
                if !s.is_zero() {
                    acc.insert(e, s);
                }
            }
            for (e, c) in acc {
                out.add_to(e, c.scale(&half));
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.order.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_to(e2, c.scale(&Rat::from_integer((e[i] as i64).into())));
            }
        }
        out
    }

    /// Set variable `i` to zero.
    pub fn set_var_zero(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                out.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Restrict to a univariate series in variable `i` (all other exponents
    /// must be zero; call `set_var_zero` first if needed).
    pub fn to_series1(&self, i: usize) -> Series1<C> {
        let mut coeffs = vec![C::zero(); self.order + 1];
        for (e, c) in &self.terms {
            assert!(
                e.iter().enumerate().all(|(j, &x)| j == i || x == 0),
                "series is not univariate in variable {}",
                i
            );
            coeffs[e[i] as usize] = c.clone();
        }
        Series1::from_coeffs(coeffs)
    }

    /// Composition f(g1, ..., gk) of a multivariate series with argument
    /// series over the same coefficient ring; all arguments must have zero
    /// constant term.
    pub fn compose(&self, args: &[&MSeries<C>]) -> MSeries<C> {
        assert_eq!(args.len(), self.nvars);
        let nvars = args[0].nvars;
        let order = args
            .iter()
            .map(|a| a.order)
            .min()
            .unwrap_or(self.order)
            .min(self.order);
        for a in args {
            assert!(a.constant_term().is_zero(), "composition needs zero constant terms");
            assert_eq!(a.nvars, nvars);
        }
        // Cache powers of each argument up to the truncation order.
        let mut pows: Vec<Vec<MSeries<C>>> = Vec::with_capacity(args.len());
        for a in args {
            let mut v = vec![MSeries::one(nvars, order)];
            for k in 1..=order {
                let next = v[k - 1].mul(&a.truncate(order));
                v.push(next);
            }
            pows.push(v);
        }
        let mut out = MSeries::zero(nvars, order);
        for (e, c) in &self.terms {
            if total(e) > order {
                continue;
            }
            let mut term = MSeries::constant(nvars, order, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&pows[i][k as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exchange two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i, j);
            out.insert(e2, c.clone());
        }
        out
    }

    /// Re-embed into a larger variable space: old variable k becomes
    /// variable mapping[k].
    pub fn extend_vars(&self, nvars: usize, mapping: &[usize]) -> Self {
        assert_eq!(mapping.len(), self.nvars);
        let mut out = Self::zero(nvars, self.order);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u16; nvars];
            for (k, &x) in e.iter().enumerate() {
                e2[mapping[k]] += x;
            }
            out.insert(e2, c.clone());
        }
        out
    }

    /// Apply a map to every coefficient (e.g. a parameter substitution).
    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// Embed a univariate series as a multivariate one in variable `i`.
    pub fn from_series1(s: &Series1<C>, nvars: usize, order: usize, i: usize) -> Self {
        let mut out = Self::zero(nvars, order);
        for (n, c) in s.coeffs().iter().enumerate() {
            if n > order {
                break;
            }
            let mut e = vec![0u16; nvars];
            e[i] = n as u16;
            out.insert(e, c.clone());
        }
        out
    }

    /// Substitute x_i -> sign * x_i.
    pub fn flip_var(&self, i: usize, negate: bool) -> Self {
        if !negate {
            return self.clone();
        }
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            let c2 = if e[i] % 2 == 1 { -c.clone() } else { c.clone() };
            out.insert(e.clone(), c2);
        }
        out
    }

    /// Halve all exponents of variable `i` (series must be even in it),
    /// multiplying each coefficient by `sign^(e_i/2)`.  Realizes exact
    /// substitutions of the form x = sign * u^2.
    pub fn contract_even(&self, i: usize, sign: i64) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        let sgn = Rat::from_integer(sign.into());
        for (e, c) in &self.terms {
            assert!(e[i] % 2 == 0, "series has odd degree in variable {}", i);
            let mut e2 = e.clone();
            e2[i] /= 2;
            let mut c2 = c.clone();
            let mut s = Rat::one();
            for _ in 0..(e[i] / 2) {
                s *= &sgn;
            }
            c2 = c2.scale(&s);
            out.insert(e2, c2);
        }
        out
    }

    /// Exact division by (x_i - x_j), verified by multiplying back.
    ///
    /// The relation (x_i - x_j) * T = S fixes t_e = s_{e+e_i} + t_{e+e_i-e_j},
    /// so the coefficients of T are determined by a sweep of increasing
    /// exponent of x_j.  Panics if S is not divisible.
    pub fn div_diff(&self, i: usize, j: usize) -> Self {
        let order = self.order.saturating_sub(1);
        let mut t = Self::zero(self.nvars, order);
        let mut exps = Vec::new();
        gen_exps(self.nvars, order, &mut vec![0; self.nvars], 0, &mut exps);
        exps.sort_by_key(|e| e[j]);
        for e in exps {
            let mut up = e.clone();
            up[i] += 1;
            let mut coef = self.coeff(&up);
            if e[j] >= 1 {
                let mut tp = up.clone();
                tp[j] -= 1;
                coef = coef + t.coeff(&tp);
            }
            t.insert(e, coef);
        }
        // Multiply back.  Lifting T's cap is sound here: its unknown
        // degree-(order+1) layer only feeds degree order+2 of the product.
        let lifted = MSeries {
            nvars: t.nvars,
            order: self.order,
            terms: t.terms.clone(),
        };
        let xi = Self::var(self.nvars, self.order, i);
        let xj = Self::var(self.nvars, self.order, j);
        let back = xi.sub(&xj).mul(&lifted);
        assert!(
            back == *self,
            "series not divisible by the variable difference"
        );
        t
    }
}

/// Composition of a univariate series with a multivariate argument having
/// zero constant term, by Horner, truncated at min(orders).
pub fn compose_series1<C: SeriesCoeff>(f: &Series1<C>, g: &MSeries<C>) -> MSeries<C> {
    compose_series1_at(f, g, f.order().min(g.order()))
}

/// Composition truncated at an explicit output order.  Valuation-aware: for
/// an argument of valuation v, coefficients of f beyond its order only feed
/// degrees >= (order(f)+1) v, which must exceed the requested order.
pub fn compose_series1_at<C: SeriesCoeff>(
    f: &Series1<C>,
    g: &MSeries<C>,
    out_order: usize,
) -> MSeries<C> {
    assert!(g.constant_term().is_zero(), "composition needs g(0) = 0");
    assert!(
        g.order() >= out_order,
        "argument series not known to the requested order"
    );
    let Some(val) = g.valuation() else {
        let mut out = MSeries::zero(g.nvars(), out_order);
        let c = f.coeff(0);
        if !c.is_zero() {
            out = out.add(&MSeries::constant(g.nvars(), out_order, c));
        }
        return out;
    };
    assert!(
        (f.order() + 1) * val > out_order,
        "outer series order insufficient for the requested composition order"
    );
    let g = g.truncate(out_order);
    let mut acc = MSeries::zero(g.nvars(), out_order);
    for n in (0..=f.order()).rev() {
        acc = acc.mul(&g);
        let c = f.coeff(n);
        if !c.is_zero() {
            acc = acc.add(&MSeries::constant(g.nvars(), out_order, c));
        }
    }
    acc
}

fn total(e: &[u16]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

fn gen_exps(nvars: usize, order: usize, cur: &mut Vec<u16>, i: usize, out: &mut Vec<Vec<u16>>) {
    if i == nvars {
        out.push(cur.clone());
        return;
    }
    let used: usize = cur[..i].iter().map(|&x| x as usize).sum();
    for e in 0..=(order - used) as u16 {
        cur[i] = e;
        gen_exps(nvars, order, cur, i + 1, out);
    }
    cur[i] = 0;
}

impl<C: SeriesCoeff> fmt::Display for MSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| format!("x{}^{}", i, x))
                .collect();
            parts.push(format!("({})*{}", c, if mono.is_empty() { "1".into() } else { mono.join("*") }));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{} + O(deg {})", parts.join(" + "), self.order + 1)
        }
    }
}

impl<C: SeriesCoeff> fmt::Debug for MSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
