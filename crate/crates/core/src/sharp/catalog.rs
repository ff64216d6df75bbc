//! The irrational types L₁ … L₈ and the norm predictor.

use std::collections::BTreeSet;
use std::fmt;

use crate::cyclo::{sort_display, Cyclotomic};

use super::SharpError;

/// The value sets that occur for sharp pairs with an irrational value.
///
/// With ω = e^{2πi/m}:
/// * `L1(m)`: ω^r, 1 ≤ r ≤ m−1 (m ≥ 3)
/// * `L2(m)`: ω^r + ω^{−r}, 1 ≤ r ≤ (m−1)/2 (m ≥ 5 odd)
/// * `L3(m)`: L2(m) ∪ {0}
/// * `L4(m)`: {−2, 0} ∪ {ω^r + ω^{−r}, 1 ≤ r ≤ m/2 − 1} (m ≥ 8 even)
/// * `L5(m)`: {−1} ∪ {1 + ω^r + ω^{−r}, 1 ≤ r ≤ m/2 − 1} (m ≥ 8 even)
/// * `L6`: {−2, −1, 0, 1, ±√2}
/// * `L7`: {−2, −1, 0, 1, (±1 ± √5)/2}
/// * `L8`: {−1, 0, (1 ± √5)/2}
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LType {
    L1(u32),
    L2(u32),
    L3(u32),
    L4(u32),
    L5(u32),
    L6,
    L7,
    L8,
}

impl LType {
    /// By family index 1–8; `m` is required for 1–5 and ignored otherwise.
    pub fn new(index: u32, m: Option<u32>) -> Result<Self, SharpError> {
        let need_m = || m.ok_or_else(|| SharpError::Precondition(format!("L{index} needs a modulus m")));
        let t = match index {
            1 => LType::L1(need_m()?),
            2 => LType::L2(need_m()?),
            3 => LType::L3(need_m()?),
            4 => LType::L4(need_m()?),
            5 => LType::L5(need_m()?),
            6 => LType::L6,
            7 => LType::L7,
            8 => LType::L8,
            _ => return Err(SharpError::Precondition(format!("no type L{index}; indices run 1 to 8"))),
        };
        t.check()?;
        Ok(t)
    }

    pub fn check(&self) -> Result<(), SharpError> {
        let fail = |what: &str| Err(SharpError::Precondition(format!("{self}: {what}")));
        match *self {
            LType::L1(m) if m < 3 => fail("needs m >= 3"),
            LType::L2(m) | LType::L3(m) if m < 5 || m % 2 == 0 => fail("needs odd m >= 5"),
            LType::L4(m) | LType::L5(m) if m < 8 || m % 2 == 1 => fail("needs even m >= 8"),
            _ => Ok(()),
        }
    }

    /// The set in display order.
    pub fn values(&self) -> Result<Vec<Cyclotomic>, SharpError> {
        self.check()?;
        let int = Cyclotomic::from_integer;
        let two_cos = |m: u32, r: u32| Cyclotomic::sum_of_roots(m, [r as i64, -(r as i64)]).expect("small conductor");
        // (1 + √5)/2 = 1 + ζ5 + ζ5⁴
        let golden = || int(1).add(&two_cos(5, 1));
        let sqrt2 = || two_cos(8, 1);
        let mut v: Vec<Cyclotomic> = match *self {
            LType::L1(m) => (1..m).map(|r| Cyclotomic::root_of_unity(m, r as i64).expect("small conductor")).collect(),
            LType::L2(m) => (1..=(m - 1) / 2).map(|r| two_cos(m, r)).collect(),
            LType::L3(m) => std::iter::once(int(0)).chain((1..=(m - 1) / 2).map(|r| two_cos(m, r))).collect(),
            LType::L4(m) => [int(-2), int(0)].into_iter().chain((1..m / 2).map(|r| two_cos(m, r))).collect(),
            LType::L5(m) => std::iter::once(int(-1)).chain((1..m / 2).map(|r| int(1).add(&two_cos(m, r)))).collect(),
            LType::L6 => vec![int(-2), int(-1), int(0), int(1), sqrt2(), sqrt2().neg()],
            LType::L7 => {
                let g = golden();
                // (1 − √5)/2 = 1 − g, (−1 + √5)/2 = g − 1, (−1 − √5)/2 = −g
                vec![int(-2), int(-1), int(0), int(1), g.clone(), int(1).sub(&g), g.sub(&int(1)), g.neg()]
            }
            LType::L8 => {
                let g = golden();
                vec![int(-1), int(0), g.clone(), int(1).sub(&g)]
            }
        };
        sort_display(&mut v);
        Ok(v)
    }
}

impl fmt::Display for LType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LType::L1(m) => write!(f, "L1(m={m})"),
            LType::L2(m) => write!(f, "L2(m={m})"),
            LType::L3(m) => write!(f, "L3(m={m})"),
            LType::L4(m) => write!(f, "L4(m={m})"),
            LType::L5(m) => write!(f, "L5(m={m})"),
            LType::L6 => f.write_str("L6"),
            LType::L7 => f.write_str("L7"),
            LType::L8 => f.write_str("L8"),
        }
    }
}

/// L ∩ ℤ, ascending.
pub fn integer_part(l: &[Cyclotomic]) -> Vec<i64> {
    let set: BTreeSet<i64> = l.iter().filter_map(|v| v.as_integer().ok()).collect();
    set.into_iter().collect()
}

/// Some value of L lies outside ℚ (non-real values count).
pub fn contains_irrational(l: &[Cyclotomic]) -> bool {
    l.iter().any(|v| !v.is_rational())
}

pub fn l_is_real(l: &[Cyclotomic]) -> bool {
    l.iter().all(Cyclotomic::is_real)
}

/// Norm of a normalized L-sharp character when L has an irrational value:
/// 2 if L ⊆ ℝ and L ∩ ℤ is one of ∅, {−1}, {−1, 1}, {−1, 0, 2},
/// {−1, 0, 1, 2}; 1 otherwise.
pub fn predict_norm(l: &[Cyclotomic]) -> Result<u32, SharpError> {
    let mut l = l.to_vec();
    sort_display(&mut l);
    if l.len() < 2 {
        return Err(SharpError::Precondition(format!("|L| = {} but at least 2 values are needed", l.len())));
    }
    if !contains_irrational(&l) {
        return Err(SharpError::Precondition("L has no irrational value".into()));
    }
    const TWO: [&[i64]; 5] = [&[], &[-1], &[-1, 1], &[-1, 0, 2], &[-1, 0, 1, 2]];
    let ints = integer_part(&l);
    Ok(if l_is_real(&l) && TWO.contains(&ints.as_slice()) { 2 } else { 1 })
}
