//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! A [`Cyclotomic`] is stored as rational coordinates on the power basis
//! 1, ζ_n, …, ζ_n^{φ(n)-1} of Q[x]/Φ_n(x), always at the smallest conductor
//! n whose field contains the value. Because that representation is unique,
//! structural equality is value equality and `Hash` is sound.

mod approx;
mod field;
mod identity;
mod parse;
mod rational;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub use approx::ComplexInterval;
pub use field::{cyclotomic_polynomial, totient};
pub use identity::{product_identity, ProductVariant};
pub use parse::{parse_value, parse_value_set, ParseError};
pub use rational::{ParseRationalError, Rational};

use field::{field, lcm};

/// Conductors above this bound are refused by [`Cyclotomic::root_of_unity`].
pub const MAX_CONDUCTOR: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("root of unity of order 0")]
    ZeroOrder,
    #[error("conductor {0} exceeds the supported maximum {MAX_CONDUCTOR}")]
    ConductorTooLarge(u64),
    #[error("value {0} is not rational")]
    NotRational(String),
    #[error("value {0} is not an integer")]
    NotInteger(String),
    #[error("integer value {0} does not fit in 64 bits")]
    IntegerOverflow(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    Domain(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    /// ζ_n^k = e^{2πik/n}, with k taken modulo n.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroOrder);
        }
        if n > MAX_CONDUCTOR {
            return Err(CycloError::ConductorTooLarge(n as u64));
        }
        let k = k.rem_euclid(n as i64) as usize;
        let f = field(n);
        let coeffs = dense(f.phi, f.power(k));
        Ok(Self::canonical(n, coeffs))
    }

    /// Sum of ζ_n^{k} over the given exponents (repeats add up).
    pub fn sum_of_roots(n: u32, exponents: impl IntoIterator<Item = i64>) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroOrder);
        }
        if n > MAX_CONDUCTOR {
            return Err(CycloError::ConductorTooLarge(n as u64));
        }
        let mut by_exp = vec![Rational::zero(); n as usize];
        for k in exponents {
            by_exp[k.rem_euclid(n as i64) as usize] += &Rational::one();
        }
        Ok(Self::canonical(n, field(n).reduce_exponents(&by_exp)))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coordinates, `φ(conductor)` of them.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Result<Rational, CycloError> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(CycloError::NotRational(self.to_string()))
        }
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_integer()
    }

    pub fn as_integer(&self) -> Result<i64, CycloError> {
        let q = self.as_rational().map_err(|_| CycloError::NotInteger(self.to_string()))?;
        if !q.is_integer() {
            return Err(CycloError::NotInteger(self.to_string()));
        }
        q.to_i64().ok_or_else(|| CycloError::IntegerOverflow(self.to_string()))
    }

    pub fn as_bigint(&self) -> Result<BigInt, CycloError> {
        if !self.is_integer() {
            return Err(CycloError::NotInteger(self.to_string()));
        }
        Ok(self.coeffs[0].numer().clone())
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || self.conjugate() == *self
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conjugate(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.conductor as i64;
        self.galois_map(|k| (n - k) % n)
    }

    /// The Galois automorphism ζ_n ↦ ζ_n^a; `a` must be coprime to the conductor.
    pub fn galois(&self, a: i64) -> Result<Self, CycloError> {
        let n = self.conductor as i64;
        if num_integer::gcd(a, n) != 1 {
            return Err(CycloError::Domain(format!("{a} is not a unit modulo {n}")));
        }
        if self.is_rational() {
            return Ok(self.clone());
        }
        Ok(self.galois_map(|k| (a.rem_euclid(n) * k) % n))
    }

    // Automorphisms keep the conductor, so no descent is needed afterwards.
    fn galois_map(&self, exp: impl Fn(i64) -> i64) -> Self {
        let f = field(self.conductor);
        let mut by_exp = vec![Rational::zero(); self.conductor as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                by_exp[exp(k as i64) as usize] += c;
            }
        }
        Cyclotomic { conductor: self.conductor, coeffs: f.reduce_exponents(&by_exp) }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let n = lcm(self.conductor, other.conductor);
        let f = field(n);
        let a = self.lift_to(n);
        let b = other.lift_to(n);
        // Work on integer numerators over a common denominator.
        let (a, da) = integral(&a);
        let (b, db) = integral(&b);
        let mut by_exp = vec![BigInt::zero(); n as usize];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    by_exp[(i + j) % n as usize] += x * y;
                }
            }
        }
        let denom = da * db;
        let coeffs = f
            .reduce_integer_exponents(&by_exp)
            .into_iter()
            .map(|c| Rational::from_bigints(c, denom.clone()).expect("nonzero denominator"))
            .collect();
        Self::canonical(n, coeffs)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, CycloError> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse via the norm: x⁻¹ = (∏_{σ≠1} σ(x)) / N(x).
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.coeffs[0].recip().unwrap()));
        }
        let n = self.conductor as i64;
        let mut others = Self::one();
        for a in 2..n {
            if num_integer::gcd(a, n) == 1 {
                others = others.mul(&self.galois(a)?);
            }
        }
        let norm = self.mul(&others).as_rational().expect("field norm is rational");
        Ok(others.scale(&norm.recip().unwrap()))
    }

    /// Encloses the complex value in a disc of radius 10^-digits.
    pub fn approx(&self, digits: u32) -> ComplexInterval {
        approx::enclose(self, digits.max(1))
    }

    /// Deterministic display order: real part, then imaginary part (both
    /// rounded at 30 digits), then canonical coordinates.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        if self.is_rational() && other.is_rational() {
            return self.coeffs[0].cmp(&other.coeffs[0]);
        }
        approx::order_key(self).cmp(&approx::order_key(other)).then_with(|| self.cmp(other))
    }

    /// Coordinates after embedding into Q(ζ_n); the conductor must divide n.
    fn lift_to(&self, n: u32) -> Vec<Rational> {
        if n == self.conductor {
            return self.coeffs.clone();
        }
        debug_assert_eq!(n % self.conductor, 0);
        let f = field(n);
        let step = (n / self.conductor) as usize;
        let mut by_exp = vec![Rational::zero(); n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            by_exp[k * step] = c.clone();
        }
        f.reduce_exponents(&by_exp)
    }

    fn combine(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        if self.conductor == 1 && other.conductor == 1 {
            return Self::from_rational(op(&self.coeffs[0], &other.coeffs[0]));
        }
        let n = lcm(self.conductor, other.conductor);
        let a = self.lift_to(n);
        let b = other.lift_to(n);
        let coeffs = a.iter().zip(&b).map(|(x, y)| op(x, y)).collect();
        Self::canonical(n, coeffs)
    }

    /// Descend to the minimal conductor. `coeffs` are coordinates in Q(ζ_n).
    fn canonical(mut n: u32, mut coeffs: Vec<Rational>) -> Self {
        loop {
            if n == 1 || coeffs[1..].iter().all(Rational::is_zero) {
                coeffs.truncate(1);
                return Cyclotomic { conductor: 1, coeffs };
            }
            let f = field(n);
            let found = f.subfields.iter().find_map(|sub| sub.project(&coeffs).map(|y| (sub.conductor, y)));
            match found {
                Some((d, y)) => {
                    n = d;
                    coeffs = y;
                }
                None => return Cyclotomic { conductor: n, coeffs },
            }
        }
    }
}

fn dense(phi: usize, sparse: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); phi];
    for &(i, c) in sparse {
        v[i] = Rational::from_integer(c);
    }
    v
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

/// Canonical expression form: an integer, `a/b`, or a sum of `q*z(n)^k`
/// terms with ascending k. The output parses back to the same value.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let n = self.conductor;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { "-" } else { "+" })?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    let root = if k == 1 { format!("z({n})") } else { format!("z({n})^{k}") };
                    // A leading "-z(n)^k" would parse as (-z(n))^k.
                    if mag.is_one() && !(first && negative && k > 1) {
                        f.write_str(&root)?;
                    } else {
                        write!(f, "{mag}*{root}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

macro_rules! ops {
    ($trait:ident, $method:ident) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                Cyclotomic::$method(self, rhs)
            }
        }
    };
}

ops!(Add, add);
ops!(Sub, sub);
ops!(Mul, mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(self)
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc.add(&x))
    }
}

impl std::iter::Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |acc, x| acc.mul(&x))
    }
}

/// Sort values into display order and drop duplicates.
pub fn sort_display(values: &mut Vec<Cyclotomic>) {
    values.sort();
    values.dedup();
    // Rounding is monotone, so this agrees with `display_cmp`.
    values.sort_by_cached_key(|x| (approx::order_key(x), x.clone()));
}

/// Numerators over the least common denominator.
fn integral(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let common = coeffs.iter().fold(BigInt::from(1), |l, c| l.lcm(c.denom()));
    let scaled = coeffs.iter().map(|c| c.numer() * (&common / c.denom())).collect();
    (scaled, common)
}
