//! Pass/fail identity checks with counterexample witnesses.
//!
//! Each check sweeps its full index range in a fixed order and reports the
//! first failing instance, so a failure is reproducible from the parameter
//! map and witness alone. The nine check names form the stable
//! command-line interface of the `verify` binary; results do not depend on
//! thread count or term-map iteration order.

pub mod generators;
pub mod images;
pub mod relations;

use crate::context::AlgebraError;
use crate::walgebra::WSetup;

use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Canonical renderings of both sides of the first failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub expected: String,
    pub actual: String,
}

/// One executed check: name, swept parameters, outcome, timing.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    pub ms: u64,
}

/// Counts of passed and failed checks in a report.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// Full suite output: configuration echo, per-check results, counts.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

/// Suite bounds; `new` picks defaults that finish in minutes for n <= 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub n: u16,
    pub l: u16,
    pub max_r: u16,
    pub max_k: u16,
}

impl SuiteConfig {
    /// Default bounds for Q(n) with block size l.
    pub fn new(n: u16, l: u16) -> SuiteConfig {
        SuiteConfig { n, l, max_r: (l + 1).min(3), max_k: l }
    }
}

/// The nine checks, in canonical execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Lem1,
    Lem2,
    Lem3,
    T2,
    T3,
    T4,
    Kl,
    Cor1,
    Rel,
}

impl CheckKind {
    /// Every check, in canonical order.
    pub const ALL: [CheckKind; 9] = [
        CheckKind::Lem1,
        CheckKind::Lem2,
        CheckKind::Lem3,
        CheckKind::T2,
        CheckKind::T3,
        CheckKind::T4,
        CheckKind::Kl,
        CheckKind::Cor1,
        CheckKind::Rel,
    ];

    /// Stable command-line name.
    pub fn id(self) -> &'static str {
        match self {
            CheckKind::Lem1 => "lem1",
            CheckKind::Lem2 => "lem2",
            CheckKind::Lem3 => "lem3",
            CheckKind::T2 => "t2",
            CheckKind::T3 => "t3",
            CheckKind::T4 => "t4",
            CheckKind::Kl => "kl",
            CheckKind::Cor1 => "cor1",
            CheckKind::Rel => "rel",
        }
    }

    /// Parse a command-line name.
    pub fn parse(name: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|k| k.id() == name)
    }

    /// One-line description of what the check verifies.
    pub fn describe(self) -> &'static str {
        match self {
            CheckKind::Lem1 => "low-order projected Gauss powers collapse to block deltas",
            CheckKind::Lem2 => "projected Gauss powers up to the block size are signed diagonal sums",
            CheckKind::Lem3 => "top symbols of the distinguished generators match the centralizer basis",
            CheckKind::T2 => "distinguished generators and their pairwise products pass the invariance test",
            CheckKind::T4 => "opposite-coproduct images equal the signed factor sums in the tensor model",
            CheckKind::T3 => "fully projected diagonal Gauss powers equal the ordered factor sums",
            CheckKind::Kl => "twisted evaluation of antipode coproducts equals the Gauss-power images",
            CheckKind::Cor1 => "plain-coproduct images equal the strict factor sums and truncate to zero",
            CheckKind::Rel => "the signed convolution of the two factor-sum families vanishes",
        }
    }
}

/// Internal verdict of one sweep: clean pass or first failing instance.
pub(crate) enum Verdict {
    Pass,
    Fail(Failure),
}

/// First failing instance of a sweep, in sweep order.
pub(crate) struct Failure {
    pub at: Vec<(&'static str, i64)>,
    pub expected: String,
    pub actual: String,
}

fn timed(
    kind: CheckKind,
    setup: &WSetup,
    bounds: &[(&'static str, i64)],
    body: impl FnOnce() -> Result<Verdict, AlgebraError>,
) -> Result<CheckResult, AlgebraError> {
    let start = Instant::now();
    let verdict = body()?;
    let ms = start.elapsed().as_millis() as u64;
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), setup.ctx().n() as i64);
    params.insert("l".to_string(), setup.ctx().l() as i64);
    for &(key, value) in bounds {
        params.insert(key.to_string(), value);
    }
    Ok(match verdict {
        Verdict::Pass => CheckResult {
            name: kind.id().to_string(),
            params,
            status: CheckStatus::Pass,
            witness: None,
            ms,
        },
        Verdict::Fail(failure) => {
            for (key, value) in &failure.at {
                params.insert((*key).to_string(), *value);
            }
            CheckResult {
                name: kind.id().to_string(),
                params,
                status: CheckStatus::Fail,
                witness: Some(Witness { expected: failure.expected, actual: failure.actual }),
                ms,
            }
        }
    })
}

/// Projected Gauss powers of order below the block size are block deltas.
pub fn check_lem1(setup: &WSetup) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::Lem1, setup, &[], || generators::lem1(setup))
}

/// Projected Gauss powers up to the block size are signed diagonal sums.
pub fn check_lem2(setup: &WSetup) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::Lem2, setup, &[], || generators::lem2(setup))
}

/// Distinguished-generator top symbols biject onto the centralizer basis.
pub fn check_lem3(setup: &WSetup) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::Lem3, setup, &[], || generators::lem3(setup))
}

/// Distinguished generators and their pairwise products lie in the W-algebra.
pub fn check_t2(setup: &WSetup) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::T2, setup, &[], || generators::t2(setup))
}

/// Fully projected diagonal Gauss powers equal the ordered factor sums.
pub fn check_t3(setup: &WSetup, k_max: u16) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::T3, setup, &[("k_max", k_max as i64)], || images::t3(setup, k_max))
}

/// Tensor images of opposite coproducts equal the signed factor sums.
pub fn check_t4(setup: &WSetup, r_max: u16) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::T4, setup, &[("r_max", r_max as i64)], || images::t4(setup, r_max))
}

/// Twisted evaluation of antipode coproducts equals the Gauss-power images.
pub fn check_kl(setup: &WSetup, r_max: u16, k_max: u16) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::Kl, setup, &[("r_max", r_max as i64), ("k_max", k_max as i64)], || {
        images::kl(setup, r_max, k_max)
    })
}

/// Plain-coproduct images equal the strict factor sums; high orders vanish.
pub fn check_cor1(setup: &WSetup, r_max: u16) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::Cor1, setup, &[("r_max", r_max as i64)], || images::cor1(setup, r_max))
}

/// The signed convolution of the two factor-sum families is zero.
pub fn check_rel(setup: &WSetup, r_max: u16) -> Result<CheckResult, AlgebraError> {
    timed(CheckKind::Rel, setup, &[("r_max", r_max as i64)], || images::rel(setup, r_max))
}

fn run_check(kind: CheckKind, setup: &WSetup, cfg: &SuiteConfig) -> Result<CheckResult, AlgebraError> {
    match kind {
        CheckKind::Lem1 => check_lem1(setup),
        CheckKind::Lem2 => check_lem2(setup),
        CheckKind::Lem3 => check_lem3(setup),
        CheckKind::T2 => check_t2(setup),
        CheckKind::T3 => check_t3(setup, cfg.max_k),
        CheckKind::T4 => check_t4(setup, cfg.max_r),
        CheckKind::Kl => check_kl(setup, cfg.max_r, cfg.max_k),
        CheckKind::Cor1 => check_cor1(setup, cfg.max_r),
        CheckKind::Rel => check_rel(setup, cfg.max_r),
    }
}

/// Runs the selected checks at the given bounds; results keep the order of
/// `kinds`.
pub fn run_all(cfg: &SuiteConfig, kinds: &[CheckKind]) -> Result<Report, AlgebraError> {
    let setup = WSetup::new(cfg.n, cfg.l)?;
    let results: Vec<CheckResult> = kinds
        .par_iter()
        .map(|&kind| run_check(kind, &setup, cfg))
        .collect::<Result<_, _>>()?;
    let pass = results.iter().filter(|r| r.status == CheckStatus::Pass).count();
    let fail = results.len() - pass;
    Ok(Report { config: *cfg, results, summary: Summary { pass, fail } })
}
