//! Virtual characters and sharpness.
//!
//! For a virtual character χ of G, L(χ) is the set of values χ takes off the
//! identity and Sh(χ) = ∏_{l ∈ L(χ)} (χ(1) − l). The pair (G, χ) is sharp
//! when Sh(χ) = |G|. Everything here is computed class-wise from the rows of
//! a (possibly partial) [`CharacterTable`].

mod catalog;
mod combo;
mod family;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::chartab::{CharacterTable, TableError};
use crate::cyclo::{sort_display, Cyclotomic, Rational};

pub use catalog::{contains_irrational, integer_part, l_is_real, predict_norm, LType};
pub use family::{build_family_pair, build_family_pair_in, Family, FamilyGroup};

#[derive(Debug, thiserror::Error)]
pub enum SharpError {
    #[error("no character named {0:?}")]
    UnknownRow(String),
    #[error("no class labelled {0:?}")]
    UnknownClass(String),
    #[error("all coefficients are zero")]
    ZeroCombination,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("the two characters live on different tables")]
    TableMismatch,
    #[error("row {0:?} has a degree that is not an integer")]
    Degree(String),
    #[error("degree overflows 64 bits")]
    Overflow,
    #[error("value {0} should be rational")]
    NotRational(String),
    #[error("position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("{family}: {condition}")]
    Hypothesis { family: String, condition: String },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// An integer combination of the rows of one table.
#[derive(Debug, Clone)]
pub struct VirtualCharacter {
    table: Arc<CharacterTable>,
    coeffs: Vec<i64>,
    degree: i64,
}

impl PartialEq for VirtualCharacter {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.table, &other.table) || self.table == other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for VirtualCharacter {}

impl VirtualCharacter {
    /// `coeffs[i]` multiplies the i-th row of `table`.
    pub fn new(table: Arc<CharacterTable>, coeffs: Vec<i64>) -> Result<Self, SharpError> {
        if coeffs.len() != table.rows().len() {
            return Err(SharpError::CoefficientCount { expected: table.rows().len(), got: coeffs.len() });
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Err(SharpError::ZeroCombination);
        }
        let id = table.identity_index();
        let mut degree: i64 = 0;
        for (row, &c) in table.rows().iter().zip(&coeffs) {
            let d = row.values[id].as_integer().map_err(|_| SharpError::Degree(row.name.clone()))?;
            degree = c.checked_mul(d).and_then(|x| degree.checked_add(x)).ok_or(SharpError::Overflow)?;
        }
        Ok(VirtualCharacter { table, coeffs, degree })
    }

    /// Builds from `(row name, coefficient)` pairs; repeated names add up.
    pub fn from_terms(table: Arc<CharacterTable>, terms: &[(&str, i64)]) -> Result<Self, SharpError> {
        let mut coeffs = vec![0i64; table.rows().len()];
        for (name, c) in terms {
            let i = table.row_index(name).ok_or_else(|| SharpError::UnknownRow(name.to_string()))?;
            coeffs[i] = coeffs[i].checked_add(*c).ok_or(SharpError::Overflow)?;
        }
        Self::new(table, coeffs)
    }

    /// Parses a combination such as `chi1+2*chi2+chi5` or `chi3+chi4-chi1`.
    pub fn parse(table: Arc<CharacterTable>, text: &str) -> Result<Self, SharpError> {
        let terms = combo::parse_terms(text)?;
        let borrowed: Vec<(&str, i64)> = terms.iter().map(|(n, c)| (n.as_str(), *c)).collect();
        Self::from_terms(table, &borrowed)
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, row: &str) -> Option<i64> {
        self.table.row_index(row).map(|i| self.coeffs[i])
    }

    /// χ(1).
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Values on every class, in table order.
    pub fn values(&self) -> Vec<Cyclotomic> {
        (0..self.table.classes().len()).map(|c| self.value_on(c)).collect()
    }

    fn value_on(&self, class: usize) -> Cyclotomic {
        self.table
            .rows()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(r, &c)| match c {
                1 => r.values[class].clone(),
                _ => r.values[class].scale(&Rational::from_integer(c)),
            })
            .sum()
    }

    pub fn value_at(&self, class: &str) -> Result<Cyclotomic, SharpError> {
        let c = self.table.class_index(class).ok_or_else(|| SharpError::UnknownClass(class.to_string()))?;
        Ok(self.value_on(c))
    }

    fn same_table(&self, other: &Self) -> Result<(), SharpError> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(SharpError::TableMismatch)
        }
    }

    /// (a, b)_G computed class-wise from the values.
    pub fn inner_product(&self, other: &Self) -> Result<Rational, SharpError> {
        self.same_table(other)?;
        let ip = self.table.class_inner_product(&self.values(), &other.values());
        ip.as_rational().map_err(|_| SharpError::NotRational(ip.to_string()))
    }

    /// Σ a_i b_i over the coefficient vectors; equals the inner product
    /// whenever the rows are distinct irreducibles.
    pub fn coefficient_dot(&self, other: &Self) -> Result<i64, SharpError> {
        self.same_table(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum())
    }

    /// L(χ) in display order.
    pub fn value_set_l(&self) -> Vec<Cyclotomic> {
        let id = self.table.identity_index();
        let mut l: Vec<Cyclotomic> =
            (0..self.table.classes().len()).filter(|&c| c != id).map(|c| self.value_on(c)).collect();
        sort_display(&mut l);
        l
    }

    pub fn sh_product(&self) -> Cyclotomic {
        sh_of(self.degree, &self.value_set_l())
    }

    pub fn is_sharp(&self) -> bool {
        self.sh_product() == Cyclotomic::from_integer(self.table.group_order() as i64)
    }

    /// |G| divides Sh(χ) (0 included).
    pub fn blichfeldt_check(&self) -> bool {
        match self.sh_product().as_bigint() {
            Ok(sh) => (sh % BigInt::from(self.table.group_order())).is_zero(),
            Err(_) => false,
        }
    }

    pub fn is_faithful(&self) -> bool {
        let id = self.table.identity_index();
        let d = Cyclotomic::from_integer(self.degree);
        (0..self.table.classes().len()).all(|c| c == id || self.value_on(c) != d)
    }

    /// (χ, 1_G) = 0, from class sizes alone.
    pub fn is_normalized(&self) -> bool {
        weighted_sum(&self.table, &self.values()).is_zero()
    }

    pub fn is_character(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn analyze(&self) -> Result<SharpReport, SharpError> {
        self.analyze_values(self.values())
    }

    /// `analyze` given the output of [`values`](Self::values).
    pub(crate) fn analyze_values(&self, values: Vec<Cyclotomic>) -> Result<SharpReport, SharpError> {
        let id = self.table.identity_index();
        let mut l: Vec<Cyclotomic> =
            values.iter().enumerate().filter(|&(c, _)| c != id).map(|(_, v)| v.clone()).collect();
        sort_display(&mut l);
        let degree = Cyclotomic::from_integer(self.degree);
        let sh = sh_of(self.degree, &l);
        let norm_value = self.table.class_inner_product(&values, &values);
        let norm = norm_value.as_rational().map_err(|_| SharpError::NotRational(norm_value.to_string()))?;
        Ok(SharpReport {
            table: self.table.name().to_string(),
            partial_table: !self.table.is_complete(),
            combination: self.to_string(),
            group_order: self.table.group_order(),
            degree: self.degree,
            is_sharp: sh == Cyclotomic::from_integer(self.table.group_order() as i64),
            sh_value: sh,
            is_normalized: weighted_sum(&self.table, &values).is_zero(),
            is_character: self.is_character(),
            is_faithful: !l.contains(&degree),
            norm,
            l_int: integer_part(&l),
            l_has_irrational: contains_irrational(&l),
            l_is_real: l_is_real(&l),
            l,
        })
    }
}

fn sh_of(degree: i64, l: &[Cyclotomic]) -> Cyclotomic {
    let d = Cyclotomic::from_integer(degree);
    let mut sh = Cyclotomic::one();
    for v in l {
        if *v == d {
            return Cyclotomic::zero();
        }
        sh = sh.mul(&d.sub(v));
    }
    sh
}

fn weighted_sum(t: &CharacterTable, values: &[Cyclotomic]) -> Cyclotomic {
    t.classes().iter().zip(values).map(|(c, v)| v.scale(&Rational::from_integer(c.size as i64))).sum()
}

impl fmt::Display for VirtualCharacter {
    /// `chi1+2*chi2-chi5`, rows in table order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (row, &c) in self.table.rows().iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.unsigned_abs())?;
            }
            f.write_str(&row.name)?;
            first = false;
        }
        Ok(())
    }
}

/// Everything [`VirtualCharacter::analyze`] computes, exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpReport {
    pub table: String,
    pub partial_table: bool,
    pub combination: String,
    pub group_order: u64,
    pub degree: i64,
    #[serde(rename = "L")]
    pub l: Vec<Cyclotomic>,
    pub sh_value: Cyclotomic,
    pub is_sharp: bool,
    pub is_normalized: bool,
    pub is_character: bool,
    pub is_faithful: bool,
    pub norm: Rational,
    #[serde(rename = "L_int")]
    pub l_int: Vec<i64>,
    #[serde(rename = "L_has_irrational")]
    pub l_has_irrational: bool,
    #[serde(rename = "L_is_real")]
    pub l_is_real: bool,
}

impl SharpReport {
    /// Canonical text of L, used as a grouping key.
    pub fn l_key(&self) -> String {
        format_set(&self.l)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `{a, b, c}` with canonical expressions.
pub fn format_set<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for SharpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table:            {}{}", self.table, if self.partial_table { " (partial)" } else { "" })?;
        writeln!(f, "combination:      {}", self.combination)?;
        writeln!(f, "degree:           {}", self.degree)?;
        writeln!(f, "L:                {}", format_set(&self.l))?;
        writeln!(f, "Sh:               {}", self.sh_value)?;
        writeln!(f, "|G|:              {}", self.group_order)?;
        writeln!(f, "sharp:            {}", yes_no(self.is_sharp))?;
        writeln!(f, "normalized:       {}", yes_no(self.is_normalized))?;
        writeln!(f, "character:        {}", yes_no(self.is_character))?;
        writeln!(f, "faithful:         {}", yes_no(self.is_faithful))?;
        writeln!(f, "norm:             {}", self.norm)?;
        writeln!(f, "L_int:            {}", format_set(&self.l_int))?;
        writeln!(f, "L has irrational: {}", yes_no(self.l_has_irrational))?;
        writeln!(f, "L is real:        {}", yes_no(self.l_is_real))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{cyclic_table, dihedral_table};
    use crate::cyclo::parse_value_set;
    use crate::fixtures::fixture;

    fn vc(table: &str, combo: &str) -> VirtualCharacter {
        VirtualCharacter::parse(fixture(table).unwrap(), combo).unwrap()
    }

    fn set(text: &str) -> Vec<Cyclotomic> {
        let mut v = parse_value_set(text).unwrap();
        sort_display(&mut v);
        v
    }

    #[test]
    fn degrees() {
        assert_eq!(vc("sg32_6", "chi1+2*chi2+chi5").degree(), 7);
        assert_eq!(vc("sg192_1494", "chi3+chi4-chi1").degree(), 6);
        let t = vc("sg192_1494_theta", "theta1+theta2");
        assert_eq!(t.value_at("c1").unwrap(), Cyclotomic::from_integer(t.degree()));
    }

    #[test]
    fn example_norms() {
        let chi = vc("sg32_6", "chi1+2*chi2+chi5");
        assert_eq!(chi.inner_product(&chi).unwrap(), Rational::from_integer(6));
        let theta = vc("sg192_1494", "chi3+chi4-chi1");
        assert_eq!(theta.inner_product(&theta).unwrap(), Rational::from_integer(3));
        let d16 = vc("d16", "chi3+2*chi1");
        assert_eq!(d16.inner_product(&d16).unwrap(), Rational::from_integer(5));
    }

    #[test]
    fn value_sets() {
        assert_eq!(vc("sg192_1494", "chi2+chi5").value_set_l(), set("{-2, 0, 2}"));
        assert_eq!(vc("a7_chi", "chi").value_set_l(), set("{-1, 0, 2}"));
        assert_eq!(vc("d16", "chi3+2*chi1").value_set_l(), set("{2, 0, z(8)-z(8)^3+2, -z(8)+z(8)^3+2}"));
    }

    #[test]
    fn sh_values() {
        assert_eq!(vc("sg32_6", "chi1+2*chi2+chi5").sh_product(), Cyclotomic::from_integer(32));
        assert_eq!(vc("a7_chi", "chi").sh_product(), Cyclotomic::from_integer(2520));
        // χ1 is constant, so χ(g) = χ(1) everywhere
        assert_eq!(vc("d12", "chi1+chi5").sh_product(), Cyclotomic::zero());
    }

    #[test]
    fn sharp_examples() {
        assert!(vc("sg192_1494_theta", "theta1+theta2").is_sharp());
        let d12 = vc("d12", "chi2+chi6");
        assert!(d12.is_sharp());
        assert_eq!(d12.value_set_l(), set("{-1, 0, 2}"));
    }

    #[test]
    fn analyze_examples() {
        let r = vc("sg192_1494", "chi2+chi5").analyze().unwrap();
        assert!(r.is_sharp && r.is_normalized && r.is_character && r.is_faithful);
        assert_eq!(r.norm, Rational::from_integer(2));

        let r = vc("sg192_1494", "chi3+chi4-chi1").analyze().unwrap();
        assert!(r.is_sharp && r.is_normalized && !r.is_character);
        assert_eq!(r.norm, Rational::from_integer(3));

        let r = vc("d16", "chi3+2*chi1").analyze().unwrap();
        assert!(r.is_sharp && !r.is_normalized && r.is_character);
        assert_eq!(r.norm, Rational::from_integer(5));
        assert!(r.partial_table);
    }

    #[test]
    fn combination_round_trip() {
        let x = vc("sg192_1494", " chi3 + chi4 - chi1 ");
        assert_eq!(x.to_string(), "-chi1+chi3+chi4");
        let y = vc("sg32_6", "chi5+2*chi2+chi1");
        assert_eq!(y.to_string(), "chi1+2*chi2+chi5");
        assert_eq!(vc("d16", "-2*chi1+chi3").to_string(), "-2*chi1+chi3");
    }

    #[test]
    fn construction_errors() {
        let t = fixture("d12").unwrap();
        assert!(matches!(VirtualCharacter::parse(t.clone(), "chi9"), Err(SharpError::UnknownRow(_))));
        assert!(matches!(VirtualCharacter::parse(t.clone(), "chi1-chi1"), Err(SharpError::ZeroCombination)));
        assert!(matches!(VirtualCharacter::parse(t.clone(), "chi1+*"), Err(SharpError::Syntax { .. })));
        assert!(VirtualCharacter::parse(t.clone(), "chi1").unwrap().value_at("zz").is_err());
        let other = VirtualCharacter::parse(fixture("d16").unwrap(), "chi1").unwrap();
        let here = VirtualCharacter::parse(t, "chi1").unwrap();
        assert!(matches!(here.inner_product(&other), Err(SharpError::TableMismatch)));
    }

    #[test]
    fn normalized_means_orthogonal_to_principal() {
        let t = Arc::new(dihedral_table(6).unwrap());
        let chi = VirtualCharacter::parse(t.clone(), "chi2+psi2").unwrap();
        let one = VirtualCharacter::parse(t, "chi1").unwrap();
        assert!(chi.is_normalized());
        assert_eq!(chi.inner_product(&one).unwrap(), Rational::zero());
    }

    #[test]
    fn report_serializes_deterministically() {
        let t = Arc::new(cyclic_table(4).unwrap());
        let r = VirtualCharacter::parse(t, "lambda1").unwrap().analyze().unwrap();
        let json = r.to_json();
        assert!(json.starts_with("{\"table\":\"C4\",\"partial_table\":false,\"combination\":\"lambda1\""));
        assert!(json.contains("\"L\":[\"-1\",\"-z(4)\",\"z(4)\"]"));
        assert_eq!(json, r.clone().to_json());
        assert!(r.to_string().contains("sharp:            yes"));
    }
}
