//! Transcribed tables shipped with the crate.
//!
//! The same files live in the repository's `fixtures/` directory; they are
//! embedded here so that the example checks run without a filesystem.

use std::sync::Arc;

use crate::chartab::{parse_table, CharacterTable, LoadMode, TableError};

/// (name, file contents) of every shipped table.
pub const FIXTURES: &[(&str, &str)] = &[
    ("sg32_6", include_str!("../../../fixtures/sg32_6.json")),
    ("sg192_1494", include_str!("../../../fixtures/sg192_1494.json")),
    ("a7_chi", include_str!("../../../fixtures/a7_chi.json")),
    ("d12", include_str!("../../../fixtures/d12.json")),
    ("sg192_955_chi", include_str!("../../../fixtures/sg192_955_chi.json")),
    ("sg192_1494_theta", include_str!("../../../fixtures/sg192_1494_theta.json")),
    ("d16", include_str!("../../../fixtures/d16.json")),
];

pub fn fixture_text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Loads an embedded table, validating it strictly.
pub fn fixture(name: &str) -> Result<Arc<CharacterTable>, TableError> {
    let text = fixture_text(name).ok_or_else(|| TableError::Parameter(format!("unknown fixture {name:?}")))?;
    parse_table(text, LoadMode::Strict).map(Arc::new)
}
