//! Bounded enumeration of sharp virtual characters.
//!
//! The search space is a box of integer coefficient vectors over the rows of
//! one table. Results come out in lexicographic order of the coefficient
//! vectors whatever the number of worker threads: the box is split by the
//! value of the first coefficient, the slices run in parallel, and the
//! per-slice result lists are concatenated in slice order.

mod examples;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::cyclo::{Cyclotomic, Rational};
use crate::sharp::{format_set, SharpError, SharpReport, VirtualCharacter};

pub use examples::{verify_examples, ExampleCheck, ExampleReport};

/// Coefficient bounds used when none are given.
pub const DEFAULT_BOUNDS: (i64, i64) = (-2, 2);

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("row {row:?}: lower bound {min} exceeds upper bound {max}")]
    EmptyRange { row: String, min: i64, max: i64 },
    #[error("expected {expected} bounds, got {got}")]
    BoundCount { expected: usize, got: usize },
    #[error("no character named {0:?}")]
    UnknownRow(String),
    #[error("could not build worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Sharp(#[from] SharpError),
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub table: Arc<CharacterTable>,
    /// Inclusive (min, max) per row, in table order.
    pub bounds: Vec<(i64, i64)>,
    pub max_nonzero_rows: Option<usize>,
    pub require_character: bool,
    pub require_normalized: bool,
    pub require_faithful: bool,
    pub require_irrational_in_l: bool,
    pub max_results: Option<usize>,
    /// Worker threads; 0 uses rayon's default.
    pub workers: usize,
    /// Skip Sh for vectors that take the value χ(1) off the identity.
    pub faithful_prefilter: bool,
    /// Only consider χ(1) > 0.
    pub positive_degree_only: bool,
}

impl SearchSpec {
    /// The box [min, max]^rows with no constraints.
    pub fn new(table: Arc<CharacterTable>, min: i64, max: i64) -> Self {
        let bounds = vec![(min, max); table.rows().len()];
        SearchSpec {
            table,
            bounds,
            max_nonzero_rows: None,
            require_character: false,
            require_normalized: false,
            require_faithful: false,
            require_irrational_in_l: false,
            max_results: None,
            workers: 0,
            faithful_prefilter: true,
            positive_degree_only: true,
        }
    }

    pub fn with_row_bounds(mut self, row: &str, min: i64, max: i64) -> Result<Self, SearchError> {
        let i = self.table.row_index(row).ok_or_else(|| SearchError::UnknownRow(row.to_string()))?;
        self.bounds[i] = (min, max);
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let rows = self.table.rows();
        if self.bounds.len() != rows.len() {
            return Err(SearchError::BoundCount { expected: rows.len(), got: self.bounds.len() });
        }
        for (row, &(min, max)) in rows.iter().zip(&self.bounds) {
            if min > max {
                return Err(SearchError::EmptyRange { row: row.name.clone(), min, max });
            }
        }
        Ok(())
    }

    /// Bounds actually enumerated; `require_character` clips at 0.
    fn effective_bounds(&self) -> Vec<(i64, i64)> {
        self.bounds.iter().map(|&(lo, hi)| if self.require_character { (lo.max(0), hi) } else { (lo, hi) }).collect()
    }
}

/// One sharp virtual character and its report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Find {
    pub character: VirtualCharacter,
    pub report: SharpReport,
}

impl Serialize for Find {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.report.serialize(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub finds: Vec<Find>,
    /// More results existed than `max_results`.
    pub truncated: bool,
    /// The table lists only some irreducibles, so the box misses characters of G.
    pub partial_table: bool,
}

/// Precomputed table data shared by all workers.
struct Context<'a> {
    spec: &'a SearchSpec,
    id: usize,
    degrees: Vec<i64>,
    sizes: Vec<Rational>,
}

impl Context<'_> {
    fn evaluate(&self, coeffs: &[i64]) -> Result<Option<Find>, SearchError> {
        let spec = self.spec;
        let nonzero = coeffs.iter().filter(|&&c| c != 0).count();
        if nonzero == 0 || spec.max_nonzero_rows.is_some_and(|k| nonzero > k) {
            return Ok(None);
        }
        let degree: i64 = coeffs.iter().zip(&self.degrees).map(|(c, d)| c * d).sum();
        if spec.positive_degree_only && degree <= 0 {
            return Ok(None);
        }
        if spec.require_character && coeffs.iter().any(|&c| c < 0) {
            return Ok(None);
        }
        let rows = spec.table.rows();
        let values: Vec<Cyclotomic> = (0..spec.table.classes().len())
            .map(|class| {
                rows.iter()
                    .zip(coeffs)
                    .filter(|(_, &c)| c != 0)
                    .map(|(r, &c)| r.values[class].scale(&Rational::from_integer(c)))
                    .sum()
            })
            .collect();
        if spec.require_normalized {
            let s: Cyclotomic = values.iter().zip(&self.sizes).map(|(v, n)| v.scale(n)).sum();
            if !s.is_zero() {
                return Ok(None);
            }
        }
        if spec.faithful_prefilter {
            let d = Cyclotomic::from_integer(degree);
            if values.iter().enumerate().any(|(c, v)| c != self.id && *v == d) {
                return Ok(None);
            }
        }
        let character = VirtualCharacter::new(spec.table.clone(), coeffs.to_vec())?;
        let report = character.analyze_values(values)?;
        let keep = report.is_sharp
            && (!spec.require_normalized || report.is_normalized)
            && (!spec.require_faithful || report.is_faithful)
            && (!spec.require_irrational_in_l || report.l_has_irrational);
        Ok(keep.then_some(Find { character, report }))
    }

    /// All finds whose first coefficient is `first`, in lexicographic order,
    /// stopping after `cap` finds.
    fn slice(&self, bounds: &[(i64, i64)], first: i64, cap: usize) -> Result<Vec<Find>, SearchError> {
        let mut out = Vec::new();
        let mut v: Vec<i64> = bounds.iter().map(|b| b.0).collect();
        v[0] = first;
        loop {
            if let Some(f) = self.evaluate(&v)? {
                out.push(f);
                if out.len() >= cap {
                    return Ok(out);
                }
            }
            // odometer over positions 1..
            let mut i = v.len();
            loop {
                i -= 1;
                if i == 0 {
                    return Ok(out);
                }
                if v[i] < bounds[i].1 {
                    v[i] += 1;
                    break;
                }
                v[i] = bounds[i].0;
            }
        }
    }
}

/// Every sharp vector of the box that passes the filters in `spec`, in
/// lexicographic order of coefficients.
pub fn enumerate_sharp(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    spec.validate()?;
    let partial_table = !spec.table.is_complete();
    let bounds = spec.effective_bounds();
    if bounds.is_empty() || bounds.iter().any(|(lo, hi)| lo > hi) {
        return Ok(SearchOutcome { finds: Vec::new(), truncated: false, partial_table });
    }
    let ctx = Context {
        spec,
        id: spec.table.identity_index(),
        degrees: spec
            .table
            .rows()
            .iter()
            .map(|r| r.values[spec.table.identity_index()].as_integer())
            .collect::<Result<_, _>>()
            .map_err(|_| SharpError::Degree(spec.table.name().to_string()))?,
        sizes: spec.table.classes().iter().map(|c| Rational::from_integer(c.size as i64)).collect(),
    };
    // one more than asked for, so truncation is detectable
    let cap = spec.max_results.map_or(usize::MAX, |m| m.saturating_add(1));
    let firsts: Vec<i64> = (bounds[0].0..=bounds[0].1).collect();
    let run =
        || -> Result<Vec<Vec<Find>>, SearchError> { firsts.par_iter().map(|&f| ctx.slice(&bounds, f, cap)).collect() };
    let slices = if spec.workers == 0 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(spec.workers)
            .build()
            .map_err(|e| SearchError::Pool(e.to_string()))?
            .install(run)?
    };
    let mut finds: Vec<Find> = slices.into_iter().flatten().collect();
    let truncated = spec.max_results.is_some_and(|m| finds.len() > m);
    if let Some(m) = spec.max_results {
        finds.truncate(m);
    }
    Ok(SearchOutcome { finds, truncated, partial_table })
}

/// Sharp characters with one L and at least two different norms.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleFamily {
    #[serde(rename = "L")]
    pub l: Vec<Cyclotomic>,
    pub distinct_norms: Vec<Rational>,
    /// In discovery order.
    pub members: Vec<Find>,
}

impl CounterexampleFamily {
    pub fn key(&self) -> String {
        format_set(&self.l)
    }
}

impl fmt::Display for CounterexampleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "L = {}  norms {}", self.key(), format_set(&self.distinct_norms))?;
        for m in &self.members {
            writeln!(f, "  {}  norm {}", m.report.combination, m.report.norm)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub families: Vec<CounterexampleFamily>,
    pub truncated: bool,
    pub partial_table: bool,
}

/// Groups [`enumerate_sharp`] output by L and keeps groups with more than
/// one norm, ordered by the canonical text of L.
pub fn find_counterexamples(spec: &SearchSpec) -> Result<CounterexampleReport, SearchError> {
    let outcome = enumerate_sharp(spec)?;
    let mut groups: BTreeMap<String, Vec<Find>> = BTreeMap::new();
    for find in outcome.finds {
        groups.entry(find.report.l_key()).or_default().push(find);
    }
    let families = groups
        .into_values()
        .filter_map(|members| {
            let mut norms: Vec<Rational> = members.iter().map(|m| m.report.norm.clone()).collect();
            norms.sort();
            norms.dedup();
            (norms.len() >= 2).then(|| CounterexampleFamily {
                l: members[0].report.l.clone(),
                distinct_norms: norms,
                members,
            })
        })
        .collect();
    Ok(CounterexampleReport { families, truncated: outcome.truncated, partial_table: outcome.partial_table })
}
