//! Character tables, possibly partial, with orthogonality validation.

mod families;
mod io;
mod validate;

use std::fmt;

use crate::cyclo::{Cyclotomic, Rational};

pub use families::{cyclic_table, dihedral_table, quaternion_table, rotation_label};
pub use io::{load_table, parse_table, render_table, save_table, LoadMode};
pub use validate::{validate, Issue, ValidationReport};

#[derive(Debug, thiserror::Error)]
pub enum TableError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("character {character:?}, value {index}: {source}")]
    Value { character: String, index: usize, source: crate::cyclo::ParseError },
    #[error("malformed table: {0}")]
    Structure(String),
    #[error("table {name:?} failed validation:\n{report}")]
    Invalid { name: String, report: ValidationReport },
    #[error("{0}")]
    Parameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    pub label: String,
    /// |Cl_G(g)|
    pub size: u64,
    pub element_order: Option<u64>,
}

impl ClassData {
    pub fn new(label: impl Into<String>, size: u64) -> Self {
        ClassData { label: label.into(), size, element_order: None }
    }

    pub fn with_order(mut self, order: u64) -> Self {
        self.element_order = Some(order);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub name: String,
    pub values: Vec<Cyclotomic>,
}

/// A table of irreducible characters of a group of order `group_order`.
///
/// When `complete` is false only some irreducibles are present; everything
/// that needs only the printed rows and the class sizes still works.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    name: String,
    group_order: u64,
    classes: Vec<ClassData>,
    identity: String,
    rows: Vec<Row>,
    complete: bool,
}

impl CharacterTable {
    /// Assembles a table, rejecting only shape errors. Orthogonality and the
    /// other invariants are checked by [`validate`].
    pub fn new(
        name: impl Into<String>,
        group_order: u64,
        classes: Vec<ClassData>,
        identity: impl Into<String>,
        rows: Vec<Row>,
        complete: bool,
    ) -> Result<Self, TableError> {
        let identity = identity.into();
        if group_order == 0 {
            return Err(TableError::Structure("group order must be positive".into()));
        }
        if classes.is_empty() {
            return Err(TableError::Structure("no conjugacy classes".into()));
        }
        for (i, c) in classes.iter().enumerate() {
            if c.size == 0 {
                return Err(TableError::Structure(format!("class {:?} has size 0", c.label)));
            }
            if classes[..i].iter().any(|d| d.label == c.label) {
                return Err(TableError::Structure(format!("duplicate class label {:?}", c.label)));
            }
        }
        if !classes.iter().any(|c| c.label == identity) {
            return Err(TableError::Structure(format!("identity class {identity:?} is not a class label")));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.values.len() != classes.len() {
                return Err(TableError::Structure(format!(
                    "character {:?} has {} values for {} classes",
                    r.name,
                    r.values.len(),
                    classes.len()
                )));
            }
            if rows[..i].iter().any(|s| s.name == r.name) {
                return Err(TableError::Structure(format!("duplicate character name {:?}", r.name)));
            }
        }
        Ok(CharacterTable { name: name.into(), group_order, classes, identity, rows, complete })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn classes(&self) -> &[ClassData] {
        &self.classes
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn identity_label(&self) -> &str {
        &self.identity
    }

    pub fn identity_index(&self) -> usize {
        self.class_index(&self.identity).expect("identity label checked at construction")
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn row_index(&self, name: &str) -> Option<usize> {
        self.rows.iter().position(|r| r.name == name)
    }

    pub fn row(&self, name: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.name == name)
    }

    /// Value of a row on a class, by name and label.
    pub fn value(&self, row: &str, class: &str) -> Option<&Cyclotomic> {
        let c = self.class_index(class)?;
        self.row(row).map(|r| &r.values[c])
    }

    pub fn degrees(&self) -> Vec<&Cyclotomic> {
        let id = self.identity_index();
        self.rows.iter().map(|r| &r.values[id]).collect()
    }

    /// (1/|G|) Σ |Cl(g)| a(g) conj(b(g)) for two value vectors on this table's classes.
    pub fn class_inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let sum: Cyclotomic = self
            .classes
            .iter()
            .zip(a.iter().zip(b))
            .filter(|(_, (x, y))| !x.is_zero() && !y.is_zero())
            .map(|(c, (x, y))| x.mul(&y.conjugate()).scale(&Rational::from_integer(c.size as i64)))
            .sum();
        sum.scale(&Rational::new(1, self.group_order as i64).unwrap())
    }

    /// The same table with the given rows only (in the given order).
    pub fn restrict_rows(&self, names: &[&str]) -> Result<Self, TableError> {
        let rows = names
            .iter()
            .map(|n| self.row(n).cloned().ok_or_else(|| TableError::Structure(format!("no character named {n:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let complete = self.complete && rows.len() == self.rows.len();
        CharacterTable::new(
            self.name.clone(),
            self.group_order,
            self.classes.clone(),
            self.identity.clone(),
            rows,
            complete,
        )
    }

    /// Same table with one value replaced; used to inject faults in tests.
    pub fn with_value(&self, row: &str, class: &str, value: Cyclotomic) -> Result<Self, TableError> {
        let r = self.row_index(row).ok_or_else(|| TableError::Structure(format!("no character named {row:?}")))?;
        let c = self.class_index(class).ok_or_else(|| TableError::Structure(format!("no class labelled {class:?}")))?;
        let mut t = self.clone();
        t.rows[r].values[c] = value;
        Ok(t)
    }
}

/// True when `b` is `a` with classes and rows permuted (names and labels ignored).
pub fn equivalent_up_to_relabeling(a: &CharacterTable, b: &CharacterTable) -> bool {
    if a.group_order != b.group_order || a.classes.len() != b.classes.len() || a.rows.len() != b.rows.len() {
        return false;
    }
    fn column(t: &CharacterTable, c: usize) -> Vec<&Cyclotomic> {
        let mut col: Vec<&Cyclotomic> = t.rows.iter().map(|r| &r.values[c]).collect();
        col.sort();
        col
    }
    let a_cols: Vec<_> = (0..a.classes.len()).map(|c| column(a, c)).collect();
    let b_cols: Vec<_> = (0..b.classes.len()).map(|c| column(b, c)).collect();
    let mut assignment = vec![usize::MAX; a.classes.len()];
    let mut used = vec![false; b.classes.len()];

    // a's class i corresponds to b's class assignment[i]
    fn rows_match(a: &CharacterTable, b: &CharacterTable, assignment: &[usize]) -> bool {
        let mut ra: Vec<Vec<&Cyclotomic>> = a.rows.iter().map(|r| r.values.iter().collect()).collect();
        let mut rb: Vec<Vec<&Cyclotomic>> =
            b.rows.iter().map(|r| assignment.iter().map(|&j| &r.values[j]).collect()).collect();
        ra.sort();
        rb.sort();
        ra == rb
    }

    fn search(
        i: usize,
        a: &CharacterTable,
        b: &CharacterTable,
        a_cols: &[Vec<&Cyclotomic>],
        b_cols: &[Vec<&Cyclotomic>],
        assignment: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == a.classes.len() {
            return rows_match(a, b, assignment);
        }
        let a_is_id = a.classes[i].label == a.identity;
        for j in 0..b.classes.len() {
            let b_is_id = b.classes[j].label == b.identity;
            if used[j] || a_is_id != b_is_id || a.classes[i].size != b.classes[j].size || a_cols[i] != b_cols[j] {
                continue;
            }
            used[j] = true;
            assignment[i] = j;
            if search(i + 1, a, b, a_cols, b_cols, assignment, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }

    search(0, a, b, &a_cols, &b_cols, &mut assignment, &mut used)
}

impl fmt::Display for CharacterTable {
    /// Plain-text grid: class sizes, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (order {}{})", self.name, self.group_order, if self.complete { "" } else { ", partial" })?;
        let mut grid: Vec<Vec<String>> = Vec::new();
        grid.push(std::iter::once(String::new()).chain(self.classes.iter().map(|c| c.label.clone())).collect());
        grid.push(std::iter::once("|Cl|".to_string()).chain(self.classes.iter().map(|c| c.size.to_string())).collect());
        for r in &self.rows {
            grid.push(std::iter::once(r.name.clone()).chain(r.values.iter().map(|v| v.to_string())).collect());
        }
        let widths: Vec<usize> = (0..=self.classes.len())
            .map(|c| grid.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        for row in grid {
            let line: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}
