use std::fmt;

use crate::cyclo::{Cyclotomic, Rational};

use super::CharacterTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    ClassSizeSum { sum: u64, order: u64 },
    ClassSizeDoesNotDivide { class: String, size: u64 },
    IdentityNotFirst { label: String },
    IdentitySize { size: u64 },
    DegreeNotPositiveInteger { row: String, value: Cyclotomic },
    RowOrthogonality { row_a: String, row_b: String, expected: i64, got: Cyclotomic },
    RowCount { rows: usize, classes: usize },
    DegreeSquares { sum: Cyclotomic, order: u64 },
    ColumnOrthogonality { class_a: String, class_b: String, expected: Rational, got: Cyclotomic },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::ClassSizeSum { sum, order } => {
                write!(f, "class sizes sum to {sum}, group order is {order}")
            }
            Issue::ClassSizeDoesNotDivide { class, size } => {
                write!(f, "class {class}: size {size} does not divide the group order")
            }
            Issue::IdentityNotFirst { label } => write!(f, "identity class {label} is not listed first"),
            Issue::IdentitySize { size } => write!(f, "identity class has size {size}, expected 1"),
            Issue::DegreeNotPositiveInteger { row, value } => {
                write!(f, "row {row}: degree {value} is not a positive integer")
            }
            Issue::RowOrthogonality { row_a, row_b, expected, got } => {
                write!(f, "row orthogonality ({row_a}, {row_b}): expected {expected}, got {got}")
            }
            Issue::RowCount { rows, classes } => {
                write!(f, "complete table has {rows} rows but {classes} classes")
            }
            Issue::DegreeSquares { sum, order } => {
                write!(f, "sum of squared degrees is {sum}, group order is {order}")
            }
            Issue::ColumnOrthogonality { class_a, class_b, expected, got } => {
                write!(f, "column orthogonality ({class_a}, {class_b}): expected {expected}, got {got}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return writeln!(f, "ok");
        }
        for issue in &self.issues {
            writeln!(f, "{issue}")?;
        }
        Ok(())
    }
}

/// Checks class data, degrees, and the orthogonality relations.
///
/// Rows are treated as irreducible characters: two rows with identical
/// values are the same character (inner product 1), otherwise they must be
/// orthogonal. Column relations and Σ χ(1)² = |G| are only checked for
/// complete tables.
pub fn validate(t: &CharacterTable) -> ValidationReport {
    let mut issues = Vec::new();
    let order = t.group_order();
    let classes = t.classes();

    let sum: u64 = classes.iter().map(|c| c.size).sum();
    if sum != order {
        issues.push(Issue::ClassSizeSum { sum, order });
    }
    for c in classes {
        if !order.is_multiple_of(c.size) {
            issues.push(Issue::ClassSizeDoesNotDivide { class: c.label.clone(), size: c.size });
        }
    }
    let id = t.identity_index();
    if id != 0 {
        issues.push(Issue::IdentityNotFirst { label: t.identity_label().to_string() });
    }
    if classes[id].size != 1 {
        issues.push(Issue::IdentitySize { size: classes[id].size });
    }

    let rows = t.rows();
    for r in rows {
        let d = &r.values[id];
        if !d.is_integer() || d.as_bigint().map(|n| n <= 0.into()).unwrap_or(true) {
            issues.push(Issue::DegreeNotPositiveInteger { row: r.name.clone(), value: d.clone() });
        }
    }

    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i..] {
            let got = t.class_inner_product(&a.values, &b.values);
            let expected = if a.values == b.values { 1 } else { 0 };
            if got != Cyclotomic::from_integer(expected) {
                issues.push(Issue::RowOrthogonality { row_a: a.name.clone(), row_b: b.name.clone(), expected, got });
            }
        }
    }

    if t.is_complete() {
        if rows.len() != classes.len() {
            issues.push(Issue::RowCount { rows: rows.len(), classes: classes.len() });
        }
        let squares: Cyclotomic = rows.iter().map(|r| r.values[id].mul(&r.values[id])).sum();
        if squares != Cyclotomic::from_integer(order as i64) {
            issues.push(Issue::DegreeSquares { sum: squares, order });
        }
        let conj: Vec<Vec<Cyclotomic>> =
            rows.iter().map(|r| r.values.iter().map(Cyclotomic::conjugate).collect()).collect();
        for g in 0..classes.len() {
            for h in g..classes.len() {
                let got: Cyclotomic = rows.iter().zip(&conj).map(|(r, c)| r.values[g].mul(&c[h])).sum();
                let expected = if g == h {
                    Rational::new(order as i64, classes[g].size as i64).unwrap()
                } else {
                    Rational::zero()
                };
                if got != Cyclotomic::from_rational(expected.clone()) {
                    issues.push(Issue::ColumnOrthogonality {
                        class_a: classes[g].label.clone(),
                        class_b: classes[h].label.clone(),
                        expected,
                        got,
                    });
                }
            }
        }
    }

    ValidationReport { issues }
}
