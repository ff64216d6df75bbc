//! End-to-end checks of the published sharp pairs on the shipped tables.

use std::fmt;

use serde::Serialize;

use crate::cyclo::{parse_value_set, sort_display, Cyclotomic, Rational};
use crate::fixtures::fixture;
use crate::sharp::{format_set, SharpReport, VirtualCharacter};

use super::{enumerate_sharp, find_counterexamples, SearchSpec};

#[derive(Debug, Clone, Serialize)]
pub struct ExampleCheck {
    pub name: String,
    pub passed: bool,
    /// What was observed, then every failed expectation.
    pub details: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub checks: Vec<ExampleCheck>,
}

impl ExampleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            for d in &c.details {
                writeln!(f, "       {d}")?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(f, "{passed}/{} examples passed", self.checks.len())
    }
}

struct Checker {
    name: String,
    details: Vec<String>,
    passed: bool,
}

impl Checker {
    fn new(name: &str) -> Self {
        Checker { name: name.to_string(), details: Vec::new(), passed: true }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.passed = false;
            self.details.push(format!("expected {}", what.into()));
        }
    }

    fn fail(&mut self, why: impl fmt::Display) {
        self.passed = false;
        self.details.push(why.to_string());
    }

    /// Analyzes `combo` on fixture `table` and records the summary line.
    fn analyze(&mut self, table: &str, combo: &str) -> Option<SharpReport> {
        let result = fixture(table)
            .map_err(|e| e.to_string())
            .and_then(|t| VirtualCharacter::parse(t, combo).map_err(|e| e.to_string()))
            .and_then(|vc| vc.analyze().map_err(|e| e.to_string()));
        match result {
            Ok(r) => {
                self.details.push(format!(
                    "{table}: {combo} L = {} Sh = {} norm = {}",
                    format_set(&r.l),
                    r.sh_value,
                    r.norm
                ));
                Some(r)
            }
            Err(e) => {
                self.fail(format!("{table}: {combo}: {e}"));
                None
            }
        }
    }

    fn expect_sharp(&mut self, r: &SharpReport, l: &[Cyclotomic], norm: i64) {
        self.expect(r.is_sharp, format!("{} to be sharp", r.combination));
        self.expect(r.l == l, format!("{} to have L = {}", r.combination, format_set(l)));
        self.expect(r.norm == Rational::from_integer(norm), format!("{} to have norm {norm}", r.combination));
    }

    fn finish(self) -> ExampleCheck {
        ExampleCheck { name: self.name, passed: self.passed, details: self.details }
    }
}

fn set(text: &str) -> Vec<Cyclotomic> {
    let mut v = parse_value_set(text).expect("literal sets parse");
    sort_display(&mut v);
    v
}

fn sg32_6() -> ExampleCheck {
    let mut c = Checker::new("SmallGroup(32,6): two sharp characters of type {-1, 3} with norms 6 and 4");
    let l = set("{-1, 3}");
    if let Some(r) = c.analyze("sg32_6", "chi1+2*chi2+chi5") {
        c.expect_sharp(&r, &l, 6);
        c.expect(r.sh_value == Cyclotomic::from_integer(32), "Sh = 32");
    }
    if let Some(r) = c.analyze("sg32_6", "chi2+chi3+chi4+chi5") {
        c.expect_sharp(&r, &l, 4);
    }
    c.finish()
}

fn sg192_1494() -> ExampleCheck {
    let mut c = Checker::new("SmallGroup(192,1494): normalized sharp pair of type {-2, 0, 2} with norms 2 and 3");
    let l = set("{-2, 0, 2}");
    if let Some(r) = c.analyze("sg192_1494", "chi2+chi5") {
        c.expect_sharp(&r, &l, 2);
        c.expect(r.is_normalized && r.is_character, "chi2+chi5 to be a normalized character");
    }
    if let Some(r) = c.analyze("sg192_1494", "chi3+chi4-chi1") {
        c.expect_sharp(&r, &l, 3);
        c.expect(r.is_normalized && !r.is_character, "chi3+chi4-chi1 to be normalized but not a character");
    }
    let key = crate::sharp::format_set(&l);
    match fixture("sg192_1494") {
        Ok(t) => {
            let mut spec = SearchSpec::new(t, -1, 1);
            match find_counterexamples(&spec) {
                Ok(rep) => c.expect(
                    rep.families.iter().any(|f| f.key() == key),
                    "the search over [-1, 1] to report the {-2, 0, 2} family",
                ),
                Err(e) => c.fail(e),
            }
            spec.require_character = true;
            match find_counterexamples(&spec) {
                Ok(rep) => {
                    c.expect(!rep.families.iter().any(|f| f.key() == key), "no {-2, 0, 2} family among characters")
                }
                Err(e) => c.fail(e),
            }
        }
        Err(e) => c.fail(e),
    }
    c.finish()
}

fn a7_d12() -> ExampleCheck {
    let mut c = Checker::new("A7 and D12: sharp of type {-1, 0, 2} with norms 1 and 2");
    let l = set("{-1, 0, 2}");
    if let Some(r) = c.analyze("a7_chi", "chi") {
        c.expect_sharp(&r, &l, 1);
        c.expect(r.sh_value == Cyclotomic::from_integer(2520), "Sh = 2520");
    }
    if let Some(r) = c.analyze("d12", "chi2+chi6") {
        c.expect_sharp(&r, &l, 2);
    }
    c.finish()
}

fn sg192_pair() -> ExampleCheck {
    let mut c =
        Checker::new("SmallGroup(192,955) and SmallGroup(192,1494): sharp of type {-2, 0, 2} with norms 1 and 2");
    let l = set("{-2, 0, 2}");
    if let Some(r) = c.analyze("sg192_955_chi", "chi") {
        c.expect_sharp(&r, &l, 1);
        c.expect(r.degree == 6, "degree 6");
    }
    if let Some(r) = c.analyze("sg192_1494_theta", "theta1+theta2") {
        c.expect_sharp(&r, &l, 2);
    }
    c.finish()
}

fn d16() -> ExampleCheck {
    let mut c = Checker::new("D16: sharp characters of type {2, 0, 2+sqrt2, 2-sqrt2} with norms 5 and 3");
    let l = set("{2, 0, 2+z(8)-z(8)^3, 2-z(8)+z(8)^3}");
    if let Some(r) = c.analyze("d16", "chi3+2*chi1") {
        c.expect_sharp(&r, &l, 5);
        c.expect(!r.is_normalized, "chi3+2*chi1 not to be normalized");
    }
    if let Some(r) = c.analyze("d16", "chi2+chi3+chi1") {
        c.expect_sharp(&r, &l, 3);
    }
    match fixture("d16") {
        Ok(t) => {
            let mut spec = SearchSpec::new(t, 0, 2);
            spec.require_character = true;
            match enumerate_sharp(&spec) {
                Ok(out) => {
                    let found: Vec<&str> = out.finds.iter().map(|f| f.report.combination.as_str()).collect();
                    c.expect(
                        found.contains(&"2*chi1+chi3") && found.contains(&"chi1+chi2+chi3"),
                        "the search over [0, 2] to find both",
                    );
                }
                Err(e) => c.fail(e),
            }
        }
        Err(e) => c.fail(e),
    }
    c.finish()
}

/// Runs every published example on the embedded tables.
pub fn verify_examples() -> ExampleReport {
    ExampleReport { checks: vec![sg32_6(), sg192_1494(), a7_d12(), sg192_pair(), d16()] }
}
