//! JSON table files.
//!
//! ```json
//! {
//!   "name": "D12",
//!   "order": 12,
//!   "classes": [
//!     {"label": "1", "size": 1, "order": 1},
//!     ...
//!   ],
//!   "identity": "1",
//!   "characters": [
//!     {"name": "chi1", "values": ["1", "1", ...]},
//!     ...
//!   ],
//!   "complete": true
//! }
//! ```
//!
//! Values use the cyclotomic expression grammar. Output is byte-deterministic:
//! keys in the order above, one class or character per line, values in
//! canonical form.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::cyclo::parse_value;

use super::{validate, CharacterTable, ClassData, Row, TableError};

/// Whether validation failures abort loading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoadMode {
    #[default]
    Lenient,
    Strict,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileClass {
    label: String,
    size: u64,
    #[serde(default)]
    order: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileCharacter {
    name: String,
    values: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileTable {
    name: String,
    order: u64,
    classes: Vec<FileClass>,
    identity: String,
    characters: Vec<FileCharacter>,
    complete: bool,
}

pub fn parse_table(text: &str, mode: LoadMode) -> Result<CharacterTable, TableError> {
    let file: FileTable = serde_json::from_str(text).map_err(|e| TableError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let classes =
        file.classes.into_iter().map(|c| ClassData { label: c.label, size: c.size, element_order: c.order }).collect();
    let mut rows = Vec::with_capacity(file.characters.len());
    for ch in file.characters {
        let values = ch
            .values
            .iter()
            .enumerate()
            .map(|(index, v)| {
                parse_value(v).map_err(|source| TableError::Value { character: ch.name.clone(), index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(Row { name: ch.name, values });
    }
    let table = CharacterTable::new(file.name, file.order, classes, file.identity, rows, file.complete)?;
    if mode == LoadMode::Strict {
        let report = validate(&table);
        if !report.is_valid() {
            return Err(TableError::Invalid { name: table.name().to_string(), report });
        }
    }
    Ok(table)
}

pub fn load_table(path: impl AsRef<Path>, mode: LoadMode) -> Result<CharacterTable, TableError> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|source| TableError::Io { path: path.display().to_string(), source })?;
    parse_table(&text, mode)
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

pub fn render_table(t: &CharacterTable) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    writeln!(out, "  \"name\": {},", quote(t.name())).unwrap();
    writeln!(out, "  \"order\": {},", t.group_order()).unwrap();
    out.push_str("  \"classes\": [\n");
    for (i, c) in t.classes().iter().enumerate() {
        write!(out, "    {{\"label\": {}, \"size\": {}", quote(&c.label), c.size).unwrap();
        if let Some(o) = c.element_order {
            write!(out, ", \"order\": {o}").unwrap();
        }
        out.push('}');
        out.push_str(if i + 1 < t.classes().len() { ",\n" } else { "\n" });
    }
    out.push_str("  ],\n");
    writeln!(out, "  \"identity\": {},", quote(t.identity_label())).unwrap();
    out.push_str("  \"characters\": [\n");
    for (i, r) in t.rows().iter().enumerate() {
        let values: Vec<String> = r.values.iter().map(|v| quote(&v.to_string())).collect();
        write!(out, "    {{\"name\": {}, \"values\": [{}]}}", quote(&r.name), values.join(", ")).unwrap();
        out.push_str(if i + 1 < t.rows().len() { ",\n" } else { "\n" });
    }
    out.push_str("  ],\n");
    writeln!(out, "  \"complete\": {}", t.is_complete()).unwrap();
    out.push_str("}\n");
    out
}

pub fn save_table(t: &CharacterTable, path: impl AsRef<Path>) -> Result<(), TableError> {
    let path = path.as_ref();
    std::fs::write(path, render_table(t)).map_err(|source| TableError::Io { path: path.display().to_string(), source })
}
