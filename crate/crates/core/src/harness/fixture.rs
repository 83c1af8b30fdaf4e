//! Regression fixtures: one `kind<TAB>key<TAB>value` record per line.
//!
//! Kinds `reduce` and `bracket` hold canonical polynomial text and are
//! compared byte for byte. Kind `fiber` holds floats, compared relative to
//! `FLOAT_REL_TOL`. Lines starting with `#` are comments.

use std::fmt;
use std::fs;
use std::path::Path;

use super::corpus::reduction_corpus;
use super::suites::{FIBER_BOUNDARIES, FIBER_GRID};
use super::HarnessError;
use crate::poisson::{base_table, COORDINATES};
use crate::rp2::{fiber_point, fiber_t4, fiber_tm4, BoundaryData, FiberInput, FiberParams};
use crate::trace::reduce_trace_word;

pub const FLOAT_REL_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureEntry {
    pub kind: String,
    pub key: String,
    pub value: String,
}

impl FixtureEntry {
    fn new(kind: &str, key: impl Into<String>, value: impl Into<String>) -> Self {
        FixtureEntry { kind: kind.to_string(), key: key.into(), value: value.into() }
    }

    fn float(key: impl Into<String>, v: f64) -> Self {
        // Debug formatting is the shortest text that round-trips
        FixtureEntry::new("fiber", key, format!("{v:?}"))
    }

    fn matches(&self, other: &FixtureEntry) -> bool {
        if self.kind != other.kind || self.key != other.key {
            return false;
        }
        if self.kind != "fiber" {
            return self.value == other.value;
        }
        match (self.value.parse::<f64>(), other.value.parse::<f64>()) {
            (Ok(a), Ok(b)) => (a - b).abs() <= FLOAT_REL_TOL * a.abs().max(b.abs()).max(1.0),
            _ => false,
        }
    }
}

impl fmt::Display for FixtureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.kind, self.key, self.value)
    }
}

/// The current build's canonical outputs.
pub fn fixture_lines() -> Result<Vec<FixtureEntry>, HarnessError> {
    let fail = |e: &dyn fmt::Display| HarnessError::InvalidConfig(e.to_string());
    let mut out = Vec::new();
    for w in reduction_corpus() {
        let expr = reduce_trace_word(&w).map_err(|e| fail(&e))?;
        out.push(FixtureEntry::new("reduce", w.to_string(), expr.to_string()));
    }
    let table = base_table();
    for (a, &i) in COORDINATES.iter().enumerate() {
        for &j in &COORDINATES[a + 1..] {
            out.push(FixtureEntry::new("bracket", format!("t{i},t{j}"), table.get(i, j).to_string()));
        }
    }
    let unit = FiberInput { lam: [1.0; 3], s: 1.0, t: 1.0, t1: 3.0, t2: 3.0, tm3: 3.0 };
    out.push(FixtureEntry::float("unit:t4", fiber_t4(&unit).map_err(|e| fail(&e))?));
    out.push(FixtureEntry::float("unit:t-4", fiber_tm4(&unit).map_err(|e| fail(&e))?));
    for (k, pairs) in FIBER_BOUNDARIES.iter().enumerate() {
        let b = BoundaryData { pairs: *pairs };
        for s in FIBER_GRID {
            for t in FIBER_GRID {
                let fp = fiber_point(&b, &FiberParams { s, t }).map_err(|e| fail(&e))?;
                let key = format!("b{}:s={s}:t={t}", k + 1);
                out.push(FixtureEntry::float(format!("{key}:t4"), fp.r[6]));
                out.push(FixtureEntry::float(format!("{key}:t-4"), fp.r[7]));
            }
        }
    }
    Ok(out)
}

pub fn render_fixture(entries: &[FixtureEntry]) -> String {
    let mut text = String::from("# kind\tkey\tvalue\n");
    for e in entries {
        text.push_str(&e.to_string());
        text.push('\n');
    }
    text
}

pub fn parse_fixture(text: &str) -> Result<Vec<FixtureEntry>, HarnessError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.splitn(3, '\t');
        match (parts.next(), parts.next(), parts.next()) {
            (Some(kind), Some(key), Some(value)) => out.push(FixtureEntry::new(kind, key, value)),
            _ => return Err(HarnessError::MalformedFixture { line: n + 1, msg: "expected three tab-separated fields".into() }),
        }
    }
    Ok(out)
}

/// Compare recorded entries against current ones; the error carries a
/// line diff with `-` for recorded and `+` for current values.
pub fn compare_fixture(recorded: &[FixtureEntry], current: &[FixtureEntry]) -> Result<(), HarnessError> {
    let mut diff = String::new();
    for e in recorded {
        match current.iter().find(|c| c.kind == e.kind && c.key == e.key) {
            Some(c) if c.matches(e) => {}
            Some(c) => diff.push_str(&format!("-{e}\n+{c}\n")),
            None => diff.push_str(&format!("-{e}\n")),
        }
    }
    for c in current {
        if !recorded.iter().any(|e| e.kind == c.kind && e.key == c.key) {
            diff.push_str(&format!("+{c}\n"));
        }
    }
    if diff.is_empty() {
        Ok(())
    } else {
        Err(HarnessError::FixtureMismatch { diff })
    }
}

/// Write the current outputs to `path`, returning the record count.
pub fn record_fixture(path: &Path) -> Result<usize, HarnessError> {
    let entries = fixture_lines()?;
    fs::write(path, render_fixture(&entries)).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    Ok(entries.len())
}

/// Replay the fixture at `path` against the current build.
pub fn check_fixture(path: &Path) -> Result<usize, HarnessError> {
    let text = fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    let recorded = parse_fixture(&text)?;
    compare_fixture(&recorded, &fixture_lines()?)?;
    Ok(recorded.len())
}
