//! Rigorous numerical enclosures of cyclotomic values.
//!
//! Used for display ordering and printing only; equality is always exact.
//! cos/sin of 2πk/n are evaluated in binary fixed point (π by Machin's
//! formula, Taylor series on |θ| ≤ π) with enough guard bits that the total
//! truncation error stays far below the advertised radius.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Cyclotomic, Rational};

/// A disc in the complex plane given by an exact midpoint and radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: Rational,
    pub im: Rational,
    pub radius: Rational,
}

impl ComplexInterval {
    /// Whether `re + i·im` lies in the closed disc.
    pub fn contains(&self, re: &Rational, im: &Rational) -> bool {
        let dr = re - &self.re;
        let di = im - &self.im;
        &(&dr * &dr) + &(&di * &di) <= &self.radius * &self.radius
    }

    /// Whether two discs intersect.
    pub fn overlaps(&self, other: &ComplexInterval) -> bool {
        let dr = &self.re - &other.re;
        let di = &self.im - &other.im;
        let r = &self.radius + &other.radius;
        &(&dr * &dr) + &(&di * &di) <= &r * &r
    }

    pub fn re_f64(&self) -> f64 {
        self.re.to_f64()
    }

    pub fn im_f64(&self) -> f64 {
        self.im.to_f64()
    }

    /// Midpoint rounded to `digits` decimals, e.g. `0.30902+0.95106i`.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let re = decimal(&self.re, digits);
        if scaled_round(&self.im, digits).is_zero() {
            return re;
        }
        let im = decimal(&self.im.abs(), digits);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }
}

fn pow10(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), digits as usize)
}

/// Nearest integer to q·10^digits (ties away from zero).
fn scaled_round(q: &Rational, digits: u32) -> BigInt {
    let scaled = q * &Rational::from_bigint(pow10(digits));
    let half = Rational::new(1, 2).unwrap();
    if scaled.is_negative() {
        -(&(-&scaled) + &half).floor()
    } else {
        (&scaled + &half).floor()
    }
}

fn decimal(q: &Rational, digits: u32) -> String {
    let n = scaled_round(q, digits);
    let negative = n.is_negative();
    let mut s = n.abs().to_string();
    if digits > 0 {
        let width = digits as usize + 1;
        if s.len() < width {
            s = format!("{}{}", "0".repeat(width - s.len()), s);
        }
        s.insert(s.len() - digits as usize, '.');
    }
    if negative {
        s.insert(0, '-');
    }
    s
}

/// Unreduced midpoint `(re, im, denom)` within 10^-digits of `x`.
fn midpoint(x: &Cyclotomic, digits: u32) -> (BigInt, BigInt, BigInt) {
    if x.is_rational() {
        let c = &x.coeffs[0];
        return (c.numer().clone(), BigInt::zero(), c.denom().clone());
    }
    // Each trig value is within 2^-bits; scale the budget by Σ|c_k|.
    let weight: BigInt = x.coeffs.iter().map(|c| c.abs().floor() + BigInt::one()).sum();
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u64 + weight.bits() + 8;
    let bits = bits.div_ceil(64) * 64;
    let n = x.conductor;
    let common = x.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for (k, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scaled = c.numer() * (&common / c.denom());
        let (cos, sin) = cos_sin(n, k as u32, bits);
        re += &scaled * cos;
        im += &scaled * sin;
    }
    if x.is_real() {
        im = BigInt::zero();
    }
    (re, im, common << bits)
}

pub(super) fn enclose(x: &Cyclotomic, digits: u32) -> ComplexInterval {
    let radius = Rational::from_bigints(BigInt::one(), pow10(digits)).unwrap();
    let (re, im, denom) = midpoint(x, digits);
    let re = Rational::from_bigints(re, denom.clone()).unwrap();
    let im = Rational::from_bigints(im, denom).unwrap();
    ComplexInterval { re, im, radius }
}

/// Nearest integer to num/den (den > 0, ties away from zero).
fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let twice = num.abs() * 2u32 + den;
    let q = twice.div_floor(&(den * 2u32));
    if num.is_negative() {
        -q
    } else {
        q
    }
}

/// Key for display ordering: real and imaginary parts rounded at 30 digits.
pub(super) fn order_key(x: &Cyclotomic) -> (BigInt, BigInt) {
    let (re, im, denom) = midpoint(x, 40);
    let scale = pow10(30);
    (round_div(&(re * &scale), &denom), round_div(&(im * scale), &denom))
}

const GUARD_BITS: u64 = 48;

/// cos and sin of 2πk/n as integers scaled by 2^bits, each within 1 unit.
type TrigCache = HashMap<(u32, u32, u64), (BigInt, BigInt)>;

fn cos_sin(n: u32, k: u32, bits: u64) -> (BigInt, BigInt) {
    static CACHE: OnceLock<Mutex<TrigCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let g = num_integer::gcd(n, k.max(1));
    let (n, k) = if k == 0 { (1, 0) } else { (n / g, k / g) };
    if let Some(v) = cache.lock().unwrap().get(&(n, k, bits)) {
        return v.clone();
    }
    let v = compute_cos_sin(n, k, bits);
    cache.lock().unwrap().insert((n, k, bits), v.clone());
    v
}

fn compute_cos_sin(n: u32, k: u32, bits: u64) -> (BigInt, BigInt) {
    let one_out = BigInt::one() << bits;
    match (k, n) {
        (0, _) => return (one_out, BigInt::zero()),
        (1, 2) => return (-one_out, BigInt::zero()),
        (1, 4) => return (BigInt::zero(), one_out),
        (3, 4) => return (BigInt::zero(), -one_out),
        _ => {}
    }
    let w = bits + GUARD_BITS;
    let one = BigInt::one() << w;
    // centred exponent so that |θ| ≤ π
    let kc: i64 = if 2 * k > n { k as i64 - n as i64 } else { k as i64 };
    let theta = (pi_fixed(w) * BigInt::from(2 * kc)) / BigInt::from(n);
    let theta2 = (&theta * &theta) >> w;

    let mut cos = one.clone();
    let mut term = one.clone();
    let mut j: u64 = 1;
    loop {
        term = -((&term * &theta2) >> w) / BigInt::from((2 * j - 1) * (2 * j));
        if term.is_zero() {
            break;
        }
        cos += &term;
        j += 1;
    }

    let mut sin = theta.clone();
    let mut term = theta;
    let mut j: u64 = 1;
    loop {
        term = -((&term * &theta2) >> w) / BigInt::from((2 * j) * (2 * j + 1));
        if term.is_zero() {
            break;
        }
        sin += &term;
        j += 1;
    }
    (cos >> GUARD_BITS, sin >> GUARD_BITS)
}

/// π scaled by 2^bits.
fn pi_fixed(bits: u64) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<u64, BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&bits) {
        return p.clone();
    }
    let w = bits + 32;
    let pi: BigInt = (BigInt::from(16) * atan_inv(5, w) - BigInt::from(4) * atan_inv(239, w)) >> 32;
    cache.lock().unwrap().insert(bits, pi.clone());
    pi
}

/// atan(1/x) scaled by 2^bits.
fn atan_inv(x: u64, bits: u64) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = power.clone();
    let mut k: u64 = 1;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}
