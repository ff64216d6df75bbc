//! Sharp pairs in the cyclic, dihedral and generalized quaternion families.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::gcd;

use crate::chartab::{cyclic_table, dihedral_table, quaternion_table, CharacterTable, TableError};

use super::{LType, SharpError, VirtualCharacter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// A faithful linear character λ of C_m.
    CyclicLinear,
    /// λ + λ̄ on C_m, m odd.
    CyclicConjugateSum,
    /// A faithful degree-2 irreducible of D_2m, m odd.
    DihedralOdd,
    /// A faithful degree-2 irreducible ψ, 4 | m.
    PsiEven,
    /// ψ + ε, where ε is the linear character with kernel ⟨a⟩.
    PsiPlusEpsilon,
}

/// Group used by the ψ families, which exist for D_2m and Q_2m alike.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FamilyGroup {
    #[default]
    Dihedral,
    Quaternion,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::CyclicLinear,
        Family::CyclicConjugateSum,
        Family::DihedralOdd,
        Family::PsiEven,
        Family::PsiPlusEpsilon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::CyclicLinear => "cyclic_linear",
            Family::CyclicConjugateSum => "cyclic_conjugate_sum",
            Family::DihedralOdd => "dihedral_odd",
            Family::PsiEven => "psi_even",
            Family::PsiPlusEpsilon => "psi_plus_epsilon",
        }
    }

    /// The type every pair of this family has.
    pub fn l_type(self, m: u32) -> LType {
        match self {
            Family::CyclicLinear => LType::L1(m),
            Family::CyclicConjugateSum => LType::L2(m),
            Family::DihedralOdd => LType::L3(m),
            Family::PsiEven => LType::L4(m),
            Family::PsiPlusEpsilon => LType::L5(m),
        }
    }

    /// Whether `(m, j)` satisfies the family's hypotheses for `group`.
    pub fn admits(self, group: FamilyGroup, m: u32, j: u32) -> bool {
        check(self, group, m, j).is_ok()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SharpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| SharpError::Precondition(format!("unknown family {s:?}")))
    }
}

fn check(family: Family, group: FamilyGroup, m: u32, j: u32) -> Result<(), SharpError> {
    let fail = |condition: String| Err(SharpError::Hypothesis { family: family.name().into(), condition });
    let psi = matches!(family, Family::PsiEven | Family::PsiPlusEpsilon);
    if group == FamilyGroup::Quaternion && !psi {
        return fail("only the psi families are defined for quaternion groups".into());
    }
    match family {
        Family::CyclicLinear if m < 3 => return fail(format!("m >= 3 required, got {m}")),
        Family::CyclicConjugateSum | Family::DihedralOdd if m < 5 || m.is_multiple_of(2) => {
            return fail(format!("m must be odd and >= 5, got {m}"))
        }
        Family::PsiEven | Family::PsiPlusEpsilon if m < 8 || m % 2 == 1 => {
            return fail(format!("m must be even and >= 8, got {m}"))
        }
        Family::PsiEven if !m.is_multiple_of(4) => return fail(format!("m/4 must be an integer, got m = {m}")),
        _ => {}
    }
    if j.is_multiple_of(m) || gcd(j, m) != 1 {
        return fail(format!("gcd(j, m) = 1 required, got j = {j}, m = {m}"));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum TableKind {
    Cyclic,
    Dihedral,
    Quaternion,
}

type TableCache = HashMap<(TableKind, u32), Arc<CharacterTable>>;

/// Tables are shared between builds with the same group.
fn family_table(kind: TableKind, m: u32) -> Result<Arc<CharacterTable>, TableError> {
    static CACHE: OnceLock<Mutex<TableCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(kind, m)) {
        return Ok(t.clone());
    }
    let t = Arc::new(match kind {
        TableKind::Cyclic => cyclic_table(m)?,
        TableKind::Dihedral => dihedral_table(m)?,
        TableKind::Quaternion => quaternion_table(m / 2)?,
    });
    cache.lock().unwrap().insert((kind, m), t.clone());
    Ok(t)
}

/// [`build_family_pair_in`] on the dihedral group.
pub fn build_family_pair(
    family: Family,
    m: u32,
    j: Option<u32>,
) -> Result<(Arc<CharacterTable>, VirtualCharacter), SharpError> {
    build_family_pair_in(family, FamilyGroup::Dihedral, m, j)
}

/// Builds the table and the character of one family member; `j` defaults to 1.
///
/// The group has a cyclic subgroup ⟨a⟩ of order m: C_m itself, D_2m, or
/// Q_2m (so `Quaternion` with m = 2t is Q_4t).
pub fn build_family_pair_in(
    family: Family,
    group: FamilyGroup,
    m: u32,
    j: Option<u32>,
) -> Result<(Arc<CharacterTable>, VirtualCharacter), SharpError> {
    let j = j.unwrap_or(1);
    check(family, group, m, j)?;
    let j = j % m;
    // ψ_j = ψ_{m−j}
    let folded = j.min(m - j);
    let (kind, terms): (TableKind, Vec<(String, i64)>) = match family {
        Family::CyclicLinear => (TableKind::Cyclic, vec![(format!("lambda{j}"), 1)]),
        Family::CyclicConjugateSum => {
            (TableKind::Cyclic, vec![(format!("lambda{j}"), 1), (format!("lambda{}", m - j), 1)])
        }
        Family::DihedralOdd => (TableKind::Dihedral, vec![(format!("psi{folded}"), 1)]),
        Family::PsiEven | Family::PsiPlusEpsilon => {
            let kind = match group {
                FamilyGroup::Dihedral => TableKind::Dihedral,
                FamilyGroup::Quaternion => TableKind::Quaternion,
            };
            let mut terms = vec![(format!("psi{folded}"), 1)];
            if family == Family::PsiPlusEpsilon {
                terms.push(("chi2".to_string(), 1));
            }
            (kind, terms)
        }
    };
    let table = family_table(kind, m)?;
    let borrowed: Vec<(&str, i64)> = terms.iter().map(|(n, c)| (n.as_str(), *c)).collect();
    let vc = VirtualCharacter::from_terms(table.clone(), &borrowed)?;
    Ok((table, vc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{parse_value_set, sort_display, Rational};

    fn set(text: &str) -> Vec<crate::cyclo::Cyclotomic> {
        let mut v = parse_value_set(text).unwrap();
        sort_display(&mut v);
        v
    }

    #[test]
    fn conjugate_sum_five() {
        let (_, vc) = build_family_pair(Family::CyclicConjugateSum, 5, None).unwrap();
        let r = vc.analyze().unwrap();
        assert!(r.is_sharp);
        assert_eq!(r.l, set("{z(5)+z(5)^4, z(5)^2+z(5)^3}"));
        assert_eq!(r.norm, Rational::from_integer(2));
    }

    #[test]
    fn psi_even_eight() {
        let (_, vc) = build_family_pair(Family::PsiEven, 8, Some(1)).unwrap();
        let r = vc.analyze().unwrap();
        assert!(r.is_sharp);
        assert_eq!(r.l, set("{-2, 0, z(8)+z(8)^7, -z(8)-z(8)^7}"));
        assert_eq!(r.norm, Rational::one());
    }

    #[test]
    fn psi_plus_epsilon_eight() {
        let (_, vc) = build_family_pair(Family::PsiPlusEpsilon, 8, Some(1)).unwrap();
        let r = vc.analyze().unwrap();
        assert!(r.is_sharp);
        assert_eq!(r.l, set("{-1, 1+z(8)+z(8)^7, 1, 1-z(8)-z(8)^7}"));
        assert_eq!(r.norm, Rational::from_integer(2));
    }

    #[test]
    fn quaternion_variants_are_sharp() {
        for family in [Family::PsiEven, Family::PsiPlusEpsilon] {
            let (t, vc) = build_family_pair_in(family, FamilyGroup::Quaternion, 16, Some(3)).unwrap();
            assert_eq!(t.name(), "Q32");
            assert!(vc.is_sharp());
        }
    }

    #[test]
    fn hypotheses_are_named() {
        let err = build_family_pair(Family::PsiEven, 10, None).unwrap_err();
        assert!(err.to_string().contains("m/4"), "{err}");
        assert!(build_family_pair(Family::CyclicLinear, 6, Some(2)).is_err());
        assert!(build_family_pair(Family::CyclicConjugateSum, 6, None).is_err());
        assert!(build_family_pair(Family::DihedralOdd, 3, None).is_err());
        assert!(build_family_pair(Family::PsiPlusEpsilon, 6, None).is_err());
        assert!(build_family_pair_in(Family::DihedralOdd, FamilyGroup::Quaternion, 7, None).is_err());
        assert!(build_family_pair(Family::CyclicLinear, 5, Some(5)).is_err());
    }

    #[test]
    fn names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
