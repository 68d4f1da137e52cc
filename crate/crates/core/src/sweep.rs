//! Parameter sweeps over the registered checks.
//!
//! Cells are enumerated in a fixed order (registry order, then `i`, `m`, `k`,
//! `l` ascending) and results are emitted in that order whatever the number
//! of worker threads.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::catalan::{lemma1_check, lemma2_check, lemma3_check, CheckReport, Model};
use crate::error::{Error, Result};
use crate::poly::bp_to_text;
use crate::rational::{FamilyIndex, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Expansion,
    FtildeForms,
    Lemma1,
    Lemma2,
    Lemma3,
    Prop1,
    Prop2,
    Prop3,
    Theorem,
    VRecurrence,
    Saito,
    Membership,
    Parity,
    Degree,
}

impl CheckKind {
    pub const ALL: [CheckKind; 14] = [
        CheckKind::Expansion,
        CheckKind::FtildeForms,
        CheckKind::Lemma1,
        CheckKind::Lemma2,
        CheckKind::Lemma3,
        CheckKind::Prop1,
        CheckKind::Prop2,
        CheckKind::Prop3,
        CheckKind::Theorem,
        CheckKind::VRecurrence,
        CheckKind::Saito,
        CheckKind::Membership,
        CheckKind::Parity,
        CheckKind::Degree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Expansion => "expansion",
            CheckKind::FtildeForms => "ftilde-forms",
            CheckKind::Lemma1 => "lemma1",
            CheckKind::Lemma2 => "lemma2",
            CheckKind::Lemma3 => "lemma3",
            CheckKind::Prop1 => "prop1",
            CheckKind::Prop2 => "prop2",
            CheckKind::Prop3 => "prop3",
            CheckKind::Theorem => "theorem",
            CheckKind::VRecurrence => "v-recurrence",
            CheckKind::Saito => "saito",
            CheckKind::Membership => "membership",
            CheckKind::Parity => "parity",
            CheckKind::Degree => "degree",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<CheckKind> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check '{s}'")))
    }
}

/// Parses `all` or a comma-separated list of check names, returned in registry order.
pub fn parse_checks(s: &str) -> Result<Vec<CheckKind>> {
    if s.trim() == "all" {
        return Ok(CheckKind::ALL.to_vec());
    }
    let mut out = s
        .split(',')
        .map(|name| name.trim().parse())
        .collect::<Result<Vec<CheckKind>>>()?;
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::Config("empty check list".into()));
    }
    Ok(out)
}

/// Inclusive interval of nonnegative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: u32,
    pub hi: u32,
}

impl IndexRange {
    pub fn new(lo: u32, hi: u32) -> Result<IndexRange> {
        if lo > hi {
            return Err(Error::Config(format!("empty range {lo}..{hi}")));
        }
        Ok(IndexRange { lo, hi })
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u32> {
        self.lo..=self.hi
    }
}

impl FromStr for IndexRange {
    type Err = Error;

    /// `LO..HI` (inclusive) or a single `N`.
    fn from_str(s: &str) -> Result<IndexRange> {
        let bad = || Error::Config(format!("invalid range '{s}', expected LO..HI"));
        match s.split_once("..") {
            Some((lo, hi)) => IndexRange::new(
                lo.parse().map_err(|_| bad())?,
                hi.parse().map_err(|_| bad())?,
            ),
            None => {
                let n = s.parse().map_err(|_| bad())?;
                IndexRange::new(n, n)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub i_range: IndexRange,
    pub m_range: IndexRange,
    /// `k` runs over `0..=m + k_extra` for `prop2` and `lemma3`.
    pub k_extra: u32,
    pub checks: Vec<CheckKind>,
    pub format: Format,
    pub jobs: usize,
    pub model: Model,
}

impl Default for SweepConfig {
    fn default() -> SweepConfig {
        SweepConfig {
            i_range: IndexRange { lo: 0, hi: 4 },
            m_range: IndexRange { lo: 0, hi: 4 },
            k_extra: 2,
            checks: CheckKind::ALL.to_vec(),
            format: Format::Text,
            jobs: 1,
            model: Model::exact(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be positive".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        IndexRange::new(self.i_range.lo, self.i_range.hi)?;
        IndexRange::new(self.m_range.lo, self.m_range.hi)?;
        Ok(())
    }
}

/// One unit of work: a check and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub check: CheckKind,
    pub i: u32,
    pub m: u32,
    pub k: Option<u32>,
    pub l: Option<u32>,
}

impl Cell {
    fn new(check: CheckKind, i: u32, m: u32) -> Cell {
        Cell {
            check,
            i,
            m,
            k: None,
            l: None,
        }
    }

    /// Report parameters in display order.
    fn params(&self) -> Vec<(String, i64)> {
        let mut out: Vec<(String, i64)> = match self.check {
            CheckKind::Lemma2 => vec![("a".into(), self.i.into()), ("b".into(), self.m.into())],
            CheckKind::Saito => vec![("m".into(), self.m.into())],
            _ => vec![("i".into(), self.i.into()), ("m".into(), self.m.into())],
        };
        if let Some(k) = self.k {
            out.push(("k".into(), k.into()));
        }
        if let Some(l) = self.l {
            out.push(("l".into(), l.into()));
        }
        out
    }

    fn skipped(&self) -> bool {
        match self.check {
            CheckKind::Lemma1 | CheckKind::Lemma3 | CheckKind::Prop1 => self.i == 0,
            CheckKind::VRecurrence => self.m == 0,
            _ => false,
        }
    }
}

/// Enumerates every cell of the sweep in output order.
pub fn cells(cfg: &SweepConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    for &check in &cfg.checks {
        if check == CheckKind::Saito {
            out.extend(cfg.m_range.iter().map(|m| Cell::new(check, 0, m)));
            continue;
        }
        for i in cfg.i_range.iter() {
            for m in cfg.m_range.iter() {
                let base = Cell::new(check, i, m);
                match check {
                    CheckKind::Lemma1 => {
                        out.extend((0..=m + 1).map(|l| Cell { l: Some(l), ..base }));
                    }
                    CheckKind::Prop2 => {
                        out.extend((0..=m + cfg.k_extra).map(|k| Cell { k: Some(k), ..base }));
                    }
                    CheckKind::Lemma3 => {
                        for k in 0..=m + cfg.k_extra {
                            out.extend((0..=k + 1).map(|l| Cell {
                                k: Some(k),
                                l: Some(l),
                                ..base
                            }));
                        }
                    }
                    _ => out.push(base),
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ran(CheckReport),
    Skipped(Cell),
}

impl Outcome {
    pub fn failed(&self) -> bool {
        matches!(self, Outcome::Ran(r) if !r.passed)
    }
}

pub fn run_cell(model: &Model, cell: &Cell) -> Outcome {
    if cell.skipped() {
        return Outcome::Skipped(*cell);
    }
    let (i, m) = (cell.i, cell.m);
    let report = match cell.check {
        CheckKind::Expansion => Ok(model.expansion_check(i, m)),
        CheckKind::FtildeForms => Ok(model.ftilde_forms_check(i, m)),
        CheckKind::Lemma1 => lemma1_check(i, m, cell.l.unwrap_or(0)),
        CheckKind::Lemma2 => Ok(lemma2_check(i, m)),
        CheckKind::Lemma3 => lemma3_check(i, m, cell.k.unwrap_or(0), cell.l.unwrap_or(0)),
        CheckKind::Prop1 => model.recurrence_check(i, m),
        CheckKind::Prop2 => model.prop2_check(i, m, cell.k.unwrap_or(0)),
        CheckKind::Prop3 => Ok(model.prop3_check(i, m)),
        CheckKind::Theorem => Ok(model.theorem_check(i, m)),
        CheckKind::VRecurrence => model.theorem_v_recurrence_check(i, m),
        CheckKind::Saito => Ok(model.saito_check(m)),
        CheckKind::Membership => Ok(model.membership_check(i, m)),
        CheckKind::Parity => Ok(model.parity_check(i, m)),
        CheckKind::Degree => Ok(model.degree_check(i, m)),
    };
    // preconditions are enforced by `skipped`, so an error here is a bug in the
    // check itself; surface it as a failure rather than aborting the sweep
    Outcome::Ran(report.unwrap_or_else(|e| {
        CheckReport::fail(cell.check.name(), cell.params(), format!("error: {e}"))
    }))
}

/// Runs every cell of the sweep; results are in [`cells`] order.
pub fn run_verify(cfg: &SweepConfig) -> Result<Vec<Outcome>> {
    cfg.validate()?;
    let cells = cells(cfg);
    if cfg.jobs == 1 {
        return Ok(cells.iter().map(|c| run_cell(&cfg.model, c)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    Ok(pool.install(|| cells.par_iter().map(|c| run_cell(&cfg.model, c)).collect()))
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(outcomes: &[Outcome]) -> i32 {
    if outcomes.iter().any(Outcome::failed) {
        1
    } else {
        0
    }
}

fn result_word(o: &Outcome) -> &'static str {
    match o {
        Outcome::Ran(r) if r.passed => "PASS",
        Outcome::Ran(_) => "FAIL",
        Outcome::Skipped(_) => "SKIP",
    }
}

/// `CHECK=<name> i=<i> m=<m> [k=<k> l=<l>] RESULT=<PASS|FAIL|SKIP> [WITNESS=<poly>]`
pub fn text_line(o: &Outcome) -> String {
    let (name, params, witness) = match o {
        Outcome::Ran(r) => (
            r.check_name.as_str(),
            r.params.clone(),
            r.witness.as_deref(),
        ),
        Outcome::Skipped(c) => (c.check.name(), c.params(), None),
    };
    let mut line = format!("CHECK={name}");
    for (k, v) in &params {
        line.push_str(&format!(" {k}={v}"));
    }
    line.push_str(" RESULT=");
    line.push_str(result_word(o));
    if let Some(w) = witness {
        line.push_str(" WITNESS=");
        line.push_str(w);
    }
    line
}

pub fn json_record(o: &Outcome) -> Value {
    let (name, params) = match o {
        Outcome::Ran(r) => (r.check_name.clone(), r.params.clone()),
        Outcome::Skipped(c) => (c.check.name().to_string(), c.params()),
    };
    let mut obj = Map::new();
    obj.insert("check".into(), json!(name));
    let p: Map<String, Value> = params.into_iter().map(|(k, v)| (k, json!(v))).collect();
    obj.insert("params".into(), Value::Object(p));
    obj.insert("result".into(), json!(result_word(o)));
    if let Outcome::Ran(r) = o {
        if let Some(w) = &r.witness {
            obj.insert("witness".into(), json!(w));
        }
        for (k, v) in &r.values {
            obj.insert(k.clone(), json!(v.to_string()));
        }
    }
    Value::Object(obj)
}

/// One line per outcome, each terminated by a newline.
pub fn render(outcomes: &[Outcome], format: Format) -> String {
    let mut out = String::new();
    for o in outcomes {
        match format {
            Format::Text => out.push_str(&text_line(o)),
            Format::Json => out.push_str(&json_record(o).to_string()),
        }
        out.push('\n');
    }
    out
}

/// Basis data for one `m`: the two deformed polynomials, the Saito constant
/// and the congruence constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisData {
    pub m: u32,
    pub f0: String,
    pub f1: String,
    pub c: Rat,
    pub a: [Rat; 2],
    pub b: [Rat; 2],
}

pub fn basis_data(model: &Model, m: u32) -> Result<BasisData> {
    let mut a = [Rat::zero(), Rat::zero()];
    let mut b = [Rat::zero(), Rat::zero()];
    for i in 0..2u32 {
        let rep = model.prop3_check(i, m);
        let missing = || Error::Config(format!("congruence constants unavailable for i={i} m={m}"));
        a[i as usize] = rep.value("A").cloned().ok_or_else(missing)?;
        b[i as usize] = rep.value("B").cloned().ok_or_else(missing)?;
    }
    Ok(BasisData {
        m,
        f0: bp_to_text(&model.f_tilde(FamilyIndex::new(0, m))),
        f1: bp_to_text(&model.f_tilde(FamilyIndex::new(1, m))),
        c: model.saito_constant(m),
        a,
        b,
    })
}

pub fn render_basis(data: &BasisData, format: Format) -> String {
    let fields = [
        ("f0", data.f0.clone()),
        ("f1", data.f1.clone()),
        ("C", data.c.to_string()),
        ("A0", data.a[0].to_string()),
        ("A1", data.a[1].to_string()),
        ("B0", data.b[0].to_string()),
        ("B1", data.b[1].to_string()),
    ];
    match format {
        Format::Text => {
            let mut out = format!("m={}\n", data.m);
            for (k, v) in fields {
                out.push_str(&format!("{k}={v}\n"));
            }
            out
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("m".into(), json!(data.m));
            for (k, v) in fields {
                obj.insert(k.into(), json!(v));
            }
            format!("{}\n", Value::Object(obj))
        }
    }
}
