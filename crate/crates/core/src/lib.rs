//! Exact tools for sharp characters of finite groups.
//!
//! * [`cyclo`]: arithmetic in cyclotomic fields, the value type of every
//!   character entry.
//! * [`chartab`]: character tables, their validation, the cyclic, dihedral and
//!   generalized quaternion families, JSON ingestion.
//! * [`sharp`]: virtual characters, the value set L(χ), Sh(χ), sharpness
//!   reports, the catalogue of irrational types and the norm predictor.
//! * [`search`]: bounded enumeration of sharp virtual characters and
//!   detection of families with equal L but different norms.

pub mod chartab;
pub mod cli;
pub mod cyclo;
pub mod fixtures;
pub mod search;
pub mod sharp;
