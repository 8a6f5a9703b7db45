//! Solving every generating set of every catalog group in a range of
//! orders, with a deterministic report.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::catalog::{enumerate_generating_sets, route, CatalogEntry, GenSetRecord, Route, DEFAULT_GENSET_CAP};
use crate::constructions::{solve_with, Certificate, SolveOptions};
use crate::trace::StepKind;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub min_order: usize,
    pub max_order: usize,
    pub max_gens: usize,
    pub genset_cap: usize,
    /// Also sweep orders whose route has no construction, by search.
    pub allow_fallback: bool,
    pub jobs: usize,
    /// Record wall-clock time per row; makes reports differ between runs.
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_order: 1,
            max_order: 63,
            max_gens: 3,
            genset_cap: DEFAULT_GENSET_CAP,
            allow_fallback: false,
            jobs: 1,
            timing: false,
        }
    }
}

/// How a row's cycle was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Explicit constructions only.
    Construction,
    /// At least one search backed by a published existence result.
    Cited,
    /// At least one search with no construction behind it.
    Fallback,
    Failed,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Construction => "construction",
            Provenance::Cited => "cited",
            Provenance::Fallback => "fallback",
            Provenance::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub key: GenSetRecord,
    pub order: usize,
    pub route: Route,
    pub provenance: Provenance,
    /// The trace, or the error for a failed row.
    pub method: String,
    pub verified: bool,
    pub millis: Option<u128>,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Groups whose generating sets were cut off at the cap.
    pub capped: Vec<String>,
    /// Groups left out because their order has no construction.
    pub skipped: Vec<String>,
    /// Groups with no generating set of at most `max_gens` elements.
    pub needs_more_gens: Vec<String>,
}

pub const REPORT_HEADER: &str = "group\torder\troute\tgens\tminimal\tprovenance\tverified\tmethod";

impl SweepReport {
    /// Every row verified and none needed an uncredited search.
    pub fn success(&self) -> bool {
        self.rows.iter().all(|r| r.verified && r.provenance != Provenance::Fallback)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.verified || r.provenance == Provenance::Fallback)
    }

    /// Header line, then one tab-separated row per instance.
    pub fn to_tsv(&self, timing: bool) -> String {
        let mut s = String::from(REPORT_HEADER);
        if timing {
            s.push_str("\tmillis");
        }
        s.push('\n');
        for r in &self.rows {
            let gens: Vec<String> = r.key.generators.iter().map(|g| g.index().to_string()).collect();
            let _ = write!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.key.group,
                r.order,
                r.route,
                gens.join(","),
                u8::from(r.key.minimal),
                r.provenance.as_str(),
                u8::from(r.verified),
                r.method
            );
            if timing {
                let _ = write!(s, "\t{}", r.millis.unwrap_or(0));
            }
            s.push('\n');
        }
        s
    }
}

fn provenance(cert: &Certificate) -> Provenance {
    let steps = cert.method.steps();
    if steps.iter().any(|s| s.kind == StepKind::Unexpected) {
        Provenance::Fallback
    } else if steps.iter().any(|s| matches!(s.kind, StepKind::Cited(_))) {
        Provenance::Cited
    } else {
        Provenance::Construction
    }
}

fn solve_row(e: &CatalogEntry, key: GenSetRecord, rt: Route, opts: &SolveOptions, timing: bool) -> SweepRow {
    let t = Instant::now();
    let res = solve_with(&e.table, &key.generators, opts);
    let millis = timing.then(|| t.elapsed().as_millis());
    match res {
        Ok(cert) => SweepRow {
            order: e.order,
            route: rt,
            provenance: provenance(&cert),
            method: cert.method.to_string(),
            verified: cert.verify_both(&e.table),
            millis,
            certificate: Some(cert),
            key,
        },
        Err(err) => SweepRow {
            key,
            order: e.order,
            route: rt,
            provenance: Provenance::Failed,
            method: err.to_string().replace(['\t', '\n'], " "),
            verified: false,
            millis,
            certificate: None,
        },
    }
}

/// Sweeps the catalog entries with orders in range. Rows come out in
/// catalog order and then generating-set order, whatever `jobs` is.
pub fn run_sweep(catalog: &[CatalogEntry], cfg: &SweepConfig) -> SweepReport {
    let opts = SolveOptions { allow_fallback: cfg.allow_fallback, ..SolveOptions::default() };
    let mut report = SweepReport::default();
    let mut tasks = Vec::new();
    for e in catalog.iter().filter(|e| (cfg.min_order..=cfg.max_order).contains(&e.order)) {
        let rt = route(e.order);
        if !rt.is_supported() && !cfg.allow_fallback {
            report.skipped.push(e.name.clone());
            continue;
        }
        let list = enumerate_generating_sets(&e.table, cfg.max_gens, cfg.genset_cap);
        if list.capped {
            report.capped.push(e.name.clone());
        }
        if list.records.is_empty() {
            report.needs_more_gens.push(e.name.clone());
        }
        tasks.extend(list.records.into_iter().map(|r| (e, r, rt)));
    }
    let run = || tasks.into_par_iter().map(|(e, key, rt)| solve_row(e, key, rt, &opts, cfg.timing)).collect();
    report.rows = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    report
}
