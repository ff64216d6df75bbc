//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check or verification failed, 2 usage or input
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::{
    cyclic_table, dihedral_table, load_table, quaternion_table, render_table, validate, CharacterTable, LoadMode,
};
use crate::cyclo::{parse_value_set, product_identity, sort_display, ProductVariant};
use crate::search::{enumerate_sharp, find_counterexamples, verify_examples, SearchSpec, DEFAULT_BOUNDS};
use crate::sharp::{build_family_pair_in, integer_part, predict_norm, Family, FamilyGroup, VirtualCharacter};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sharpchar", version, about = "Exact checks and searches for sharp characters of finite groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory searched for table names that are not existing paths.
    #[arg(long, global = true)]
    pub fixtures: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    Cyclic,
    Dihedral,
    Quaternion,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a table file against the orthogonality relations.
    Validate { table: String },
    /// Print a constructed table: cyclic m, dihedral m (D_2m) or quaternion t (Q_4t).
    Table { family: TableFamily, param: u32 },
    /// Analyze one integer combination of rows.
    Check {
        /// Table file or fixture name.
        #[arg(long)]
        table: String,
        /// Integer combination of row names, e.g. "chi1+2*chi2-chi5".
        #[arg(long)]
        combo: String,
    },
    /// List sharp combinations in a coefficient box.
    Search(SearchArgs),
    /// List types L realized with more than one norm.
    Counterexamples(SearchArgs),
    /// Predict the norm of a normalized sharp character from its type L.
    Predict {
        /// Set literal such as "{-1, 0, 1+z(5)+z(5)^4, -z(5)-z(5)^4}".
        #[arg(long = "l", allow_hyphen_values = true)]
        l: String,
    },
    /// Verify the product identities, the family sharp pairs and the L ∩ Z claims.
    Lemmas {
        #[arg(long, default_value_t = 60)]
        m_max: u32,
    },
    /// Run every published example on the shipped tables.
    Examples,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Table file or fixture name.
    #[arg(long)]
    pub table: String,
    /// Lower coefficient bound for every row.
    #[arg(long, allow_hyphen_values = true, default_value_t = DEFAULT_BOUNDS.0)]
    pub min: i64,
    /// Upper coefficient bound for every row.
    #[arg(long, allow_hyphen_values = true, default_value_t = DEFAULT_BOUNDS.1)]
    pub max: i64,
    /// Only non-negative coefficients.
    #[arg(long)]
    pub character: bool,
    /// Only (χ, 1_G) = 0.
    #[arg(long)]
    pub normalized: bool,
    /// Only faithful combinations.
    #[arg(long)]
    pub faithful: bool,
    /// Only types L with a value outside Q.
    #[arg(long)]
    pub irrational: bool,
    /// At most this many rows with a nonzero coefficient.
    #[arg(long)]
    pub max_nonzero: Option<usize>,
    /// Stop after this many results and report truncation.
    #[arg(long)]
    pub max_results: Option<usize>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Also consider combinations of degree <= 0.
    #[arg(long)]
    pub allow_nonpositive_degree: bool,
}

fn default_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// A path as given, else `<fixtures>/<name>`, else `<fixtures>/<name>.json`.
fn resolve(name: &str, fixtures: &Path) -> PathBuf {
    let direct = PathBuf::from(name);
    if direct.is_file() {
        return direct;
    }
    let joined = fixtures.join(name);
    if joined.is_file() {
        return joined;
    }
    fixtures.join(format!("{name}.json"))
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn fail_input(&mut self, e: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {e}");
        EXIT_USAGE
    }

    fn json<T: Serialize>(&mut self, value: &T) -> std::io::Result<()> {
        writeln!(self.out, "{}", serde_json::to_string(value).expect("values serialize"))
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let fixtures = cli.fixtures.clone().unwrap_or_else(default_fixtures);
    let mut io = Io { out, err, format: cli.format };
    match dispatch(cli.command, &fixtures, &mut io) {
        Ok(code) => code,
        // a closed pipe downstream (`| head`) is not an error
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, fixtures: &Path, io: &mut Io) -> std::io::Result<i32> {
    match command {
        Command::Validate { table } => cmd_validate(&table, fixtures, io),
        Command::Table { family, param } => cmd_table(family, param, io),
        Command::Check { table, combo } => cmd_check(&table, &combo, fixtures, io),
        Command::Search(args) => cmd_search(&args, fixtures, io, false),
        Command::Counterexamples(args) => cmd_search(&args, fixtures, io, true),
        Command::Predict { l } => cmd_predict(&l, io),
        Command::Lemmas { m_max } => cmd_lemmas(m_max, io),
        Command::Examples => cmd_examples(io),
    }
}

fn cmd_validate(name: &str, fixtures: &Path, io: &mut Io) -> std::io::Result<i32> {
    let table = match load_table(resolve(name, fixtures), LoadMode::Lenient) {
        Ok(t) => t,
        Err(e) => return Ok(io.fail_input(e)),
    };
    let report = validate(&table);
    #[derive(Serialize)]
    struct Out<'a> {
        table: &'a str,
        valid: bool,
        issues: Vec<String>,
    }
    match io.format {
        Format::Json => io.json(&Out {
            table: table.name(),
            valid: report.is_valid(),
            issues: report.issues.iter().map(|i| i.to_string()).collect(),
        })?,
        Format::Text => write!(io.out, "{}: {}", table.name(), report)?,
    }
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_table(family: TableFamily, param: u32, io: &mut Io) -> std::io::Result<i32> {
    let table = match family {
        TableFamily::Cyclic => cyclic_table(param),
        TableFamily::Dihedral => dihedral_table(param),
        TableFamily::Quaternion => quaternion_table(param),
    };
    let table = match table {
        Ok(t) => t,
        Err(e) => return Ok(io.fail_input(e)),
    };
    match io.format {
        Format::Json => write!(io.out, "{}", render_table(&table))?,
        Format::Text => write!(io.out, "{table}")?,
    }
    Ok(EXIT_OK)
}

fn load_strict(name: &str, fixtures: &Path) -> Result<Arc<CharacterTable>, crate::chartab::TableError> {
    load_table(resolve(name, fixtures), LoadMode::Strict).map(Arc::new)
}

fn cmd_check(name: &str, combo: &str, fixtures: &Path, io: &mut Io) -> std::io::Result<i32> {
    let report = load_strict(name, fixtures)
        .map_err(|e| e.to_string())
        .and_then(|t| VirtualCharacter::parse(t, combo).map_err(|e| e.to_string()))
        .and_then(|vc| vc.analyze().map_err(|e| e.to_string()));
    let report = match report {
        Ok(r) => r,
        Err(e) => return Ok(io.fail_input(e)),
    };
    match io.format {
        Format::Json => io.json(&report)?,
        Format::Text => write!(io.out, "{report}")?,
    }
    Ok(if report.is_sharp { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_search(args: &SearchArgs, fixtures: &Path, io: &mut Io, families: bool) -> std::io::Result<i32> {
    let table = match load_strict(&args.table, fixtures) {
        Ok(t) => t,
        Err(e) => return Ok(io.fail_input(e)),
    };
    let mut spec = SearchSpec::new(table, args.min, args.max);
    spec.require_character = args.character;
    spec.require_normalized = args.normalized;
    spec.require_faithful = args.faithful;
    spec.require_irrational_in_l = args.irrational;
    spec.max_nonzero_rows = args.max_nonzero;
    spec.max_results = args.max_results;
    spec.workers = args.workers;
    spec.positive_degree_only = !args.allow_nonpositive_degree;

    let (truncated, partial) = if families {
        let report = match find_counterexamples(&spec) {
            Ok(r) => r,
            Err(e) => return Ok(io.fail_input(e)),
        };
        for fam in &report.families {
            match io.format {
                Format::Json => io.json(fam)?,
                Format::Text => write!(io.out, "{fam}")?,
            }
        }
        if io.format == Format::Text {
            let n = report.families.len();
            writeln!(io.out, "{n} {}", if n == 1 { "family" } else { "families" })?;
        }
        (report.truncated, report.partial_table)
    } else {
        let outcome = match enumerate_sharp(&spec) {
            Ok(o) => o,
            Err(e) => return Ok(io.fail_input(e)),
        };
        for f in &outcome.finds {
            match io.format {
                Format::Json => io.json(&f.report)?,
                Format::Text => {
                    let r = &f.report;
                    writeln!(
                        io.out,
                        "{}  degree {}  L = {}  norm {}{}{}",
                        r.combination,
                        r.degree,
                        crate::sharp::format_set(&r.l),
                        r.norm,
                        if r.is_normalized { "  normalized" } else { "" },
                        if r.is_character { "  character" } else { "" },
                    )?;
                }
            }
        }
        if io.format == Format::Text {
            writeln!(io.out, "{} sharp combinations", outcome.finds.len())?;
        }
        (outcome.truncated, outcome.partial_table)
    };
    if truncated {
        writeln!(io.err, "note: stopped at --max-results; the list is incomplete")?;
    }
    if partial {
        writeln!(io.err, "note: partial table; only the listed rows were combined, so absence of a result says nothing about the group")?;
    }
    Ok(EXIT_OK)
}

fn cmd_predict(literal: &str, io: &mut Io) -> std::io::Result<i32> {
    let mut l = match parse_value_set(literal) {
        Ok(l) => l,
        Err(e) => return Ok(io.fail_input(e)),
    };
    sort_display(&mut l);
    let norm = match predict_norm(&l) {
        Ok(n) => n,
        Err(e) => return Ok(io.fail_input(e)),
    };
    match io.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(rename = "L")]
                l: &'a [crate::cyclo::Cyclotomic],
                norm: u32,
            }
            io.json(&Out { l: &l, norm })?
        }
        Format::Text => writeln!(io.out, "{norm}")?,
    }
    Ok(EXIT_OK)
}

/// Outcome of one group of lemma checks.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn product_checks(m_max: u32) -> Vec<LemmaCheck> {
    ProductVariant::ALL
        .into_iter()
        .map(|variant| {
            let mut check = LemmaCheck { name: format!("product identity {variant:?}"), cases: 0, failures: vec![] };
            for m in (2..=m_max).filter(|&m| variant.admits(m)) {
                check.cases += 1;
                match product_identity(m, variant) {
                    Ok(v) if v.as_integer() == Ok(variant.expected(m)) => {}
                    Ok(v) => check.failures.push(format!("m = {m}: got {v}, expected {}", variant.expected(m))),
                    Err(e) => check.failures.push(format!("m = {m}: {e}")),
                }
            }
            check
        })
        .collect()
}

/// Valid j for a family at modulus m, one per distinct character.
fn family_js(family: Family, group: FamilyGroup, m: u32) -> Vec<u32> {
    let top = match family {
        Family::CyclicLinear => m.saturating_sub(1),
        _ => m / 2,
    };
    (1..=top).filter(|&j| family.admits(group, m, j)).collect()
}

fn family_checks(m_max: u32) -> Vec<LemmaCheck> {
    let mut checks = Vec::new();
    for family in Family::ALL {
        let groups: &[FamilyGroup] = match family {
            Family::PsiEven | Family::PsiPlusEpsilon => &[FamilyGroup::Dihedral, FamilyGroup::Quaternion],
            _ => &[FamilyGroup::Dihedral],
        };
        for &group in groups {
            let name = match family {
                Family::PsiEven | Family::PsiPlusEpsilon => format!("sharp pairs {family} ({group:?})"),
                _ => format!("sharp pairs {family}"),
            };
            let cases: Vec<(u32, u32)> =
                (1..=m_max).flat_map(|m| family_js(family, group, m).into_iter().map(move |j| (m, j))).collect();
            let failures = cases
                .par_iter()
                .filter_map(|&(m, j)| {
                    check_family_member(family, group, m, j).err().map(|msg| format!("m = {m}, j = {j}: {msg}"))
                })
                .collect();
            checks.push(LemmaCheck { name, cases: cases.len(), failures });
        }
    }
    checks
}

fn check_family_member(family: Family, group: FamilyGroup, m: u32, j: u32) -> Result<(), String> {
    let (_, vc) = build_family_pair_in(family, group, m, Some(j)).map_err(|e| e.to_string())?;
    let r = vc.analyze().map_err(|e| e.to_string())?;
    if !r.is_sharp {
        return Err(format!("{} is not sharp (Sh = {})", r.combination, r.sh_value));
    }
    let expected = family.l_type(m).values().map_err(|e| e.to_string())?;
    if r.l != expected {
        return Err(format!("L = {} differs from {}", crate::sharp::format_set(&r.l), family.l_type(m)));
    }
    if r.is_normalized && r.l_has_irrational {
        let predicted = predict_norm(&r.l).map_err(|e| e.to_string())?;
        if r.norm.to_i64() != Some(predicted as i64) {
            return Err(format!("norm {} but predicted {predicted}", r.norm));
        }
    }
    Ok(())
}

fn integer_part_checks(m_max: u32) -> Vec<LemmaCheck> {
    use crate::sharp::LType;
    type Rule = fn(u32, &[i64]) -> bool;
    type Case = (&'static str, fn(u32) -> LType, Rule);
    let rules: [Case; 4] = [
        ("L2 ∩ Z ⊆ {-1}", LType::L2, |_, z| z.is_empty() || z == [-1]),
        ("{0} ⊆ L3 ∩ Z ⊆ {-1, 0}", LType::L3, |_, z| z == [0] || z == [-1, 0]),
        ("L4 ∩ Z = {-2, 0} iff 3 ∤ m, else {-2, -1, 0, 1}", LType::L4, |m, z| {
            if m % 3 != 0 {
                z == [-2, 0]
            } else {
                z == [-2, -1, 0, 1]
            }
        }),
        ("L5 ∩ Z ∈ {{-1}, {-1, 1}, {-1, 0, 2}, {-1, 0, 1, 2}}", LType::L5, |_, z| {
            [&[-1][..], &[-1, 1], &[-1, 0, 2], &[-1, 0, 1, 2]].contains(&z)
        }),
    ];
    rules
        .into_iter()
        .map(|(name, make, rule)| {
            let mut check = LemmaCheck { name: name.to_string(), cases: 0, failures: vec![] };
            for m in 1..=m_max {
                let t = make(m);
                if t.check().is_err() {
                    continue;
                }
                check.cases += 1;
                match t.values() {
                    Ok(l) => {
                        let z = integer_part(&l);
                        if !rule(m, &z) {
                            check.failures.push(format!("m = {m}: L ∩ Z = {}", crate::sharp::format_set(&z)));
                        }
                    }
                    Err(e) => check.failures.push(format!("m = {m}: {e}")),
                }
            }
            check
        })
        .collect()
}

/// Every lemma-level check for moduli up to `m_max`.
pub fn lemma_checks(m_max: u32) -> Vec<LemmaCheck> {
    let mut all = product_checks(m_max);
    all.extend(family_checks(m_max));
    all.extend(integer_part_checks(m_max));
    all
}

fn cmd_lemmas(m_max: u32, io: &mut Io) -> std::io::Result<i32> {
    let checks = lemma_checks(m_max);
    match io.format {
        Format::Json => io.json(&checks)?,
        Format::Text => {
            for c in &checks {
                writeln!(io.out, "[{}] {} ({} cases)", if c.passed() { "PASS" } else { "FAIL" }, c.name, c.cases)?;
                for f in &c.failures {
                    writeln!(io.out, "       {f}")?;
                }
            }
        }
    }
    Ok(if checks.iter().all(LemmaCheck::passed) { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_examples(io: &mut Io) -> std::io::Result<i32> {
    let report = verify_examples();
    match io.format {
        Format::Json => io.json(&report)?,
        Format::Text => write!(io.out, "{report}")?,
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}
