//! Sparse multivariate polynomials over Q.
//!
//! Representation: per-polynomial sorted variable list plus a map from
//! exponent vectors to nonzero rational coefficients.  Monomials are ordered
//! graded-lexicographically (by interned variable name), which fixes the
//! leading term and makes the textual form deterministic.  Operations on
//! polynomials with different variable sets first take the union of the
//! variables; normalization prunes variables that no longer occur.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_complex::Complex;
use num_traits::{Float, One, Signed, Zero};

use super::Rat;

static INTERNER: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();

/// Interned variable name.  Copies are pointer-sized; ordering is by name.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var(&'static str);

impl Var {
    pub fn new(name: &str) -> Var {
        let mut set = INTERNER
            .get_or_init(|| Mutex::new(HashSet::new()))
            .lock()
            .unwrap();
        if let Some(s) = set.get(name) {
            Var(s)
        } else {
            let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
            set.insert(leaked);
            Var(leaked)
        }
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(other.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exponent vector aligned with the owning polynomial's variable list.
/// Ordered graded lex: total degree first, then lexicographic.
#[derive(Clone, PartialEq, Eq)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Errors surfaced by the exact-arithmetic layer.
#[derive(Debug, Clone)]
pub enum ExactError {
    /// `divide_exact` found a nonzero remainder.
    NotDivisible { remainder: MPoly },
    /// Resultant was asked for with degree 0 in the elimination variable.
    NotElimination(String),
    /// A linear solve over the rational function field was singular.
    Singular(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::NotDivisible { remainder } => {
                write!(f, "not divisible, remainder {}", remainder)
            }
            ExactError::NotElimination(msg) => write!(f, "not a bivariate elimination: {}", msg),
            ExactError::Singular(msg) => write!(f, "singular system: {}", msg),
        }
    }
}

impl std::error::Error for ExactError {}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(Vec::new()), c);
        }
        MPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn int(n: i64) -> MPoly {
        MPoly::constant(Rat::from_integer(n.into()))
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> MPoly {
        if e == 0 {
            return MPoly::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Mono(vec![e]), Rat::one());
        MPoly {
            vars: vec![v],
            terms,
        }
    }

    /// Build from a list of (coefficient, [(var, exp)]) terms.
    pub fn from_terms(terms: &[(Rat, Vec<(Var, u16)>)]) -> MPoly {
        let mut acc = MPoly::zero();
        for (c, m) in terms {
            let mut t = MPoly::constant(c.clone());
            for &(v, e) in m {
                t = &t * &MPoly::var_pow(v, e);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Bulk construction from exponent vectors aligned with a sorted
    /// variable list; duplicates are summed.
    pub fn from_exponent_map(vars: Vec<Var>, entries: Vec<(Vec<u16>, Rat)>) -> MPoly {
        debug_assert!(vars.windows(2).all(|w| w[0] < w[1]), "vars must be sorted");
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (e, c) in entries {
            debug_assert_eq!(e.len(), vars.len());
            let entry = terms.entry(Mono(e)).or_insert_with(Rat::zero);
            *entry += c;
        }
        MPoly { vars, terms }.normalize()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total() == 0)
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    /// Remove zero coefficients and variables that no longer occur.
    fn normalize(mut self) -> MPoly {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            return MPoly::zero();
        }
        let n = self.vars.len();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        let vars: Vec<Var> = keep.iter().map(|&i| self.vars[i]).collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| (Mono(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        MPoly { vars, terms }
    }

    /// Re-index both polynomials over the union of their variables.
    fn aligned(&self, other: &MPoly) -> (Vec<Var>, BTreeMap<Mono, Rat>, BTreeMap<Mono, Rat>) {
        if self.vars == other.vars {
            return (self.vars.clone(), self.terms.clone(), other.terms.clone());
        }
        let mut union: Vec<Var> = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() || j < other.vars.len() {
            if j >= other.vars.len() {
                union.push(self.vars[i]);
                i += 1;
            } else if i >= self.vars.len() {
                union.push(other.vars[j]);
                j += 1;
            } else {
                match self.vars[i].cmp(&other.vars[j]) {
                    std::cmp::Ordering::Less => {
                        union.push(self.vars[i]);
                        i += 1;
                    }
                    std::cmp::Ordering::Greater => {
                        union.push(other.vars[j]);
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        union.push(self.vars[i]);
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        let remap = |p: &MPoly| -> BTreeMap<Mono, Rat> {
            let pos: Vec<usize> = p
                .vars
                .iter()
                .map(|v| union.iter().position(|u| u == v).unwrap())
                .collect();
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u16; union.len()];
                    for (k, &ex) in m.0.iter().enumerate() {
                        e[pos[k]] = ex;
                    }
                    (Mono(e), c.clone())
                })
                .collect()
        };
        (union.clone(), remap(self), remap(other))
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, r: &Rat) -> MPoly {
        if r.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Formal degree in `v`, read off the stored exponents.
    pub fn degree_in(&self, v: Var) -> u16 {
        match self.vars.iter().position(|&u| u == v) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: Var, k: u16) -> MPoly {
        let Some(i) = self.vars.iter().position(|&u| u == v) else {
            return if k == 0 { self.clone() } else { MPoly::zero() };
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut e = m.0.clone();
                e[i] = 0;
                terms.insert(Mono(e), c.clone());
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
        .normalize()
    }

    /// Leading coefficient with respect to `v`.
    pub fn leading_coeff_in(&self, v: Var) -> MPoly {
        self.coeff_of_power(v, self.degree_in(v))
    }

    /// Exact substitution `v := value`; polynomials without `v` are returned
    /// unchanged.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        let deg = self.degree_in(v);
        if deg == 0 {
            return self.clone();
        }
        // Horner over descending powers of v.
        let mut acc = MPoly::zero();
        for k in (0..=deg).rev() {
            acc = &(&acc * value) + &self.coeff_of_power(v, k);
        }
        acc
    }

    /// Substitution by a rational function; the result is a rational function
    /// with denominator `value.den^deg`.
    pub fn substitute_rf(&self, v: Var, value: &super::RatFunc) -> super::RatFunc {
        let deg = self.degree_in(v);
        if deg == 0 {
            return super::RatFunc::from_poly(self.clone());
        }
        let mut den_pow = vec![MPoly::one()];
        for k in 1..=deg as usize {
            den_pow.push(&den_pow[k - 1] * value.den());
        }
        let mut acc = MPoly::zero();
        for k in (0..=deg).rev() {
            let c = self.coeff_of_power(v, k);
            acc = &(&acc * value.num()) + &(&c * &den_pow[(deg - k) as usize]);
        }
        super::RatFunc::new(acc, den_pow[deg as usize].clone())
    }

    /// Multivariate division by a single divisor; returns the quotient when
    /// the division is exact, otherwise the nonzero remainder.
    ///
    /// For a single divisor the division algorithm decides principal-ideal
    /// membership: the remainder is zero iff the divisor divides self.
    /// The reduction loop works over a fixed variable union so exponent
    /// comparisons stay aligned.
    pub fn divide_exact(&self, divisor: &MPoly) -> Result<MPoly, ExactError> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(MPoly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&(Rat::one() / c)));
        }
        let (vars, mut rem, div) = self.aligned(divisor);
        let (lt_mono, lt_coeff) = {
            let (m, c) = div.iter().next_back().unwrap();
            (m.clone(), c.clone())
        };
        let mut quot: BTreeMap<Mono, Rat> = BTreeMap::new();
        let mut tail: BTreeMap<Mono, Rat> = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if m.0.iter().zip(&lt_mono.0).all(|(a, b)| a >= b) {
                let qm = Mono(m.0.iter().zip(&lt_mono.0).map(|(a, b)| a - b).collect());
                let qc = c / &lt_coeff;
                for (dm, dc) in &div {
                    let em = Mono(qm.0.iter().zip(&dm.0).map(|(a, b)| a + b).collect());
                    let entry = rem.entry(em.clone()).or_insert_with(Rat::zero);
                    *entry -= &qc * dc;
                    if entry.is_zero() {
                        rem.remove(&em);
                    }
                }
                quot.insert(qm, qc);
            } else {
                // Leading term not reducible by lt(divisor): park it.
                rem.remove(&m);
                tail.insert(m, c);
            }
        }
        if tail.is_empty() {
            Ok(MPoly {
                vars,
                terms: quot,
            }
            .normalize())
        } else {
            Err(ExactError::NotDivisible {
                remainder: MPoly { vars, terms: tail }.normalize(),
            })
        }
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let Some(i) = self.vars.iter().position(|&u| u == v) else {
            return MPoly::zero();
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut exps = m.0.clone();
                exps[i] = e - 1;
                terms.insert(Mono(exps), c * Rat::from_integer(e.into()));
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
        .normalize()
    }

    /// Exact evaluation at a rational point.  Every variable of the
    /// polynomial must be assigned.
    pub fn eval_rat(&self, assign: &[(Var, Rat)]) -> Rat {
        let vals: Vec<Rat> = self
            .vars
            .iter()
            .map(|v| {
                assign
                    .iter()
                    .find(|(u, _)| u == v)
                    .unwrap_or_else(|| panic!("unassigned variable {}", v))
                    .1
                    .clone()
            })
            .collect();
        let mut sum = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &vals[i];
                }
            }
            sum += t;
        }
        sum
    }

    /// Numeric evaluation at a complex point.
    pub fn eval_complex<T: Float>(&self, assign: &[(Var, Complex<T>)]) -> Complex<T> {
        let vals: Vec<Complex<T>> = self
            .vars
            .iter()
            .map(|v| {
                assign
                    .iter()
                    .find(|(u, _)| u == v)
                    .unwrap_or_else(|| panic!("unassigned variable {}", v))
                    .1
            })
            .collect();
        let mut sum = Complex::new(T::zero(), T::zero());
        for (m, c) in &self.terms {
            let cf = rat_to_float::<T>(c);
            let mut t = Complex::new(cf, T::zero());
            for (i, &e) in m.0.iter().enumerate() {
                t = t * vals[i].powi(e as i32);
            }
            sum = sum + t;
        }
        sum
    }

    /// Rational content: the poly is `content * primitive` with `primitive`
    /// integral, coprime coefficients and positive leading coefficient.
    pub fn content(&self) -> Rat {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::from(0);
        let mut den_lcm = BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        let lead = self.terms.iter().next_back().unwrap().1;
        if lead.is_negative() {
            content = -content;
        }
        content
    }

    pub fn primitive_part(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        self.scale(&(Rat::one() / self.content()))
    }

    /// Simultaneous variable renaming (e.g. cyclic shifts), collision-safe.
    pub fn rename(&self, map: &[(Var, Var)]) -> MPoly {
        let mut q = self.clone();
        let temps: Vec<Var> = (0..map.len())
            .map(|i| Var::new(&format!("__tmp{}", i)))
            .collect();
        for ((from, _), t) in map.iter().zip(&temps) {
            q = q.substitute(*from, &MPoly::var(*t));
        }
        for ((_, to), t) in map.iter().zip(&temps) {
            q = q.substitute(*t, &MPoly::var(*to));
        }
        q
    }

    /// Iterate terms as (exponents aligned with vars(), coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rat)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Minimum exponent of `v` over all terms (0 for the zero polynomial).
    pub fn min_exp(&self, v: Var) -> u16 {
        match self.vars.iter().position(|&u| u == v) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0),
        }
    }

    /// Divide out `v^k` (requires every term to carry at least `v^k`).
    pub fn shift_down(&self, v: Var, k: u16) -> MPoly {
        if k == 0 {
            return self.clone();
        }
        let i = self.vars.iter().position(|&u| u == v).expect("missing var");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                assert!(m.0[i] >= k);
                let mut e = m.0.clone();
                e[i] -= k;
                (Mono(e), c.clone())
            })
            .collect();
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
        .normalize()
    }
}

pub(crate) fn rat_to_float<T: Float>(r: &Rat) -> T {
    use num_traits::ToPrimitive;
    let f = r.to_f64().expect("rational out of f64 range");
    T::from(f).expect("float conversion")
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::one()
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (vars, mut a, b) = self.aligned(rhs);
        for (m, c) in b {
            let entry = a.entry(m).or_insert_with(Rat::zero);
            *entry += c;
        }
        MPoly { vars, terms: a }.normalize()
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let (vars, mut a, b) = self.aligned(rhs);
        for (m, c) in b {
            let entry = a.entry(m).or_insert_with(Rat::zero);
            *entry -= c;
        }
        MPoly { vars, terms: a }.normalize()
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let (vars, a, b) = self.aligned(rhs);
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m = Mono(ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect());
                let entry = terms.entry(m).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        MPoly { vars, terms }.normalize()
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

impl fmt::Display for MPoly {
    /// Deterministic textual form: terms in descending graded-lex order,
    /// `coef*var1^e1*var2^e2`, rational coefficients as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = if abs.denom() == &num_bigint::BigInt::from(1) {
                format!("{}", abs.numer())
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            let mut parts: Vec<String> = Vec::new();
            if m.total() == 0 || coeff_str != "1" {
                parts.push(coeff_str);
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    parts.push(self.vars[i].name().to_string());
                } else if e > 1 {
                    parts.push(format!("{}^{}", self.vars[i].name(), e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
