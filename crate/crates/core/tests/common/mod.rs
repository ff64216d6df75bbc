//! Oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

use sharpchar::chartab::CharacterTable;
use sharpchar::cyclo::{Cyclotomic, Rational};
use sharpchar::sharp::Family;

/// Values of Σ coeffs·rows on every class, straight from the table rows.
pub fn oracle_values(t: &CharacterTable, coeffs: &[i64]) -> Vec<Cyclotomic> {
    (0..t.classes().len())
        .map(|c| {
            t.rows()
                .iter()
                .zip(coeffs)
                .map(|(r, &k)| r.values[c].scale(&Rational::from_integer(k)))
                .fold(Cyclotomic::zero(), |a, b| &a + &b)
        })
        .collect()
}

/// L deduplicated through a hash set, in no particular order.
pub fn oracle_l(t: &CharacterTable, coeffs: &[i64]) -> HashSet<Cyclotomic> {
    let id = t.identity_index();
    oracle_values(t, coeffs).into_iter().enumerate().filter(|&(c, _)| c != id).map(|(_, v)| v).collect()
}

/// Sh recomputed without going through `VirtualCharacter`.
pub fn oracle_sh(t: &CharacterTable, coeffs: &[i64]) -> Cyclotomic {
    let degree = oracle_values(t, coeffs)[t.identity_index()].clone();
    oracle_l(t, coeffs).iter().fold(Cyclotomic::one(), |acc, x| &acc * &(&degree - x))
}

pub fn oracle_is_sharp(t: &CharacterTable, coeffs: &[i64]) -> bool {
    oracle_sh(t, coeffs) == Cyclotomic::from_integer(t.group_order() as i64)
}

/// (χ, χ) as Σ |Cl| |χ(g)|² / |G|.
pub fn oracle_norm(t: &CharacterTable, coeffs: &[i64]) -> Rational {
    let vals = oracle_values(t, coeffs);
    let sum = t
        .classes()
        .iter()
        .zip(&vals)
        .map(|(c, v)| (v * &v.conjugate()).scale(&Rational::from_integer(c.size as i64)))
        .fold(Cyclotomic::zero(), |a, b| &a + &b);
    sum.scale(&Rational::new(1, t.group_order() as i64).unwrap()).as_rational().unwrap()
}

/// Every vector in the box, first coordinate most significant.
pub fn box_vectors(bounds: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &(lo, hi) in bounds {
        out = out.into_iter().flat_map(|p| (lo..=hi).map(move |c| [p.clone(), vec![c]].concat())).collect();
    }
    out
}

/// Values on non-identity elements straight from the closed forms, with
/// degree, group order and norm.
pub fn closed_form(family: Family, m: u32, j: u32) -> (HashSet<Cyclotomic>, i64, i64, i64) {
    let z = |e: i64| Cyclotomic::root_of_unity(m, e).unwrap();
    let two_cos = |r: i64| &z(j as i64 * r) + &z(-(j as i64) * r);
    let rotations = 1..m as i64;
    let m_ = m as i64;
    match family {
        Family::CyclicLinear => (rotations.map(|r| z(j as i64 * r)).collect(), 1, m_, 1),
        Family::CyclicConjugateSum => (rotations.map(two_cos).collect(), 2, m_, 2),
        Family::DihedralOdd | Family::PsiEven => {
            let mut s: HashSet<_> = rotations.map(two_cos).collect();
            s.insert(Cyclotomic::zero());
            (s, 2, 2 * m_, 1)
        }
        Family::PsiPlusEpsilon => {
            let one = Cyclotomic::one();
            let mut s: HashSet<_> = rotations.map(|r| &one + &two_cos(r)).collect();
            s.insert(Cyclotomic::from_integer(-1));
            (s, 3, 2 * m_, 2)
        }
    }
}
