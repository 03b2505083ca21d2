//! Named verification suites over partition ranges.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::binomialtype::{
    bernoulli_series, binomial_family, verify_binomial_shift, verify_exp_binomial,
    verify_intertwine, verify_psi_pieri, verify_twisted_pieri_binomial, SeriesF,
};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::interpolation::{verify_difference_eq, verify_ijack_pieri};
use crate::jack::{
    lemma_sum_suite, sekiguchi_literal_erratum, verify_d_eigen, verify_pieri_classical,
    verify_sekiguchi_eigen, verify_sekiguchi_scaled, verify_twisted_falling,
    verify_twisted_raising,
};
use crate::partitions::{partitions_up_to, Partition};
use crate::verdict::VerdictReport;

pub const LEMMA_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    SekiguchiEigen,
    PieriClassical,
    TwistedFalling,
    TwistedRaising,
    LemmaSum,
    IjackDifference,
    IjackPieri,
    ExpBinomial,
    KernelIntertwine,
    PsiPieri,
    BinomialShift,
    BinomialTwisted,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::SekiguchiEigen,
        SuiteId::PieriClassical,
        SuiteId::TwistedFalling,
        SuiteId::TwistedRaising,
        SuiteId::LemmaSum,
        SuiteId::IjackDifference,
        SuiteId::IjackPieri,
        SuiteId::ExpBinomial,
        SuiteId::KernelIntertwine,
        SuiteId::PsiPieri,
        SuiteId::BinomialShift,
        SuiteId::BinomialTwisted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::SekiguchiEigen => "sekiguchi-eigen",
            SuiteId::PieriClassical => "pieri-classical",
            SuiteId::TwistedFalling => "twisted-falling",
            SuiteId::TwistedRaising => "twisted-raising",
            SuiteId::LemmaSum => "lemma-sum",
            SuiteId::IjackDifference => "ijack-difference",
            SuiteId::IjackPieri => "ijack-pieri",
            SuiteId::ExpBinomial => "exp-binomial",
            SuiteId::KernelIntertwine => "kernel-intertwine",
            SuiteId::PsiPieri => "psi-pieri",
            SuiteId::BinomialShift => "binomial-shift",
            SuiteId::BinomialTwisted => "binomial-twisted",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

/// Which generating series the binomial-type suites use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesChoice {
    One,
    Bernoulli,
    Both,
}

impl SeriesChoice {
    fn members(self) -> &'static [SeriesChoice] {
        match self {
            SeriesChoice::One => &[SeriesChoice::One],
            SeriesChoice::Bernoulli => &[SeriesChoice::Bernoulli],
            SeriesChoice::Both => &[SeriesChoice::One, SeriesChoice::Bernoulli],
        }
    }

    fn build(self, r: usize, n: u32) -> Result<SeriesF> {
        match self {
            SeriesChoice::Bernoulli => bernoulli_series(r, n),
            _ => Ok(SeriesF::one(r, n)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest partition weight among the suite's main arguments.
    pub max_weight: u32,
    /// Truncation degree for series.
    pub trunc: u32,
    pub seed: u64,
    /// Largest first part of evaluation points; defaults to `max_weight + 1`.
    pub box_height: Option<u32>,
    pub series: SeriesChoice,
    /// Largest `l` for the binomial-type twisted Pieri suite.
    pub max_l: Option<usize>,
}

impl SuiteConfig {
    pub fn new(max_weight: u32, trunc: u32, seed: u64) -> Self {
        SuiteConfig {
            max_weight,
            trunc,
            seed,
            box_height: None,
            series: SeriesChoice::Both,
            max_l: None,
        }
    }

    fn box_height(&self) -> u32 {
        self.box_height.unwrap_or(self.max_weight + 1)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CaseOutcome {
    Report(VerdictReport),
    /// A specialization singularity was hit.
    Skipped {
        case: String,
        reason: String,
    },
    Error {
        case: String,
        error: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: SuiteId,
    pub outcomes: Vec<CaseOutcome>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub error: usize,
}

impl SuiteResult {
    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for o in &self.outcomes {
            match o {
                CaseOutcome::Report(r) if r.passed => c.pass += 1,
                CaseOutcome::Report(_) => c.fail += 1,
                CaseOutcome::Skipped { .. } => c.skip += 1,
                CaseOutcome::Error { .. } => c.error += 1,
            }
        }
        c
    }

    pub fn all_passed(&self) -> bool {
        let c = self.counts();
        c.fail == 0 && c.error == 0 && c.skip == 0
    }
}

fn outcome(case: String, res: Result<VerdictReport>) -> CaseOutcome {
    match res {
        Ok(r) => CaseOutcome::Report(r),
        Err(e) if e.is_specialization_singularity() => CaseOutcome::Skipped {
            case,
            reason: e.to_string(),
        },
        Err(e) => CaseOutcome::Error {
            case,
            error: e.to_string(),
        },
    }
}

fn run_cases<T: Sync + fmt::Debug>(
    cases: Vec<T>,
    f: impl Fn(&T) -> Vec<Result<VerdictReport>> + Sync,
) -> Vec<CaseOutcome> {
    cases
        .par_iter()
        .map(|c| {
            f(c).into_iter()
                .map(|res| outcome(format!("{c:?}"), res))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn with_l(ctx: &Context, parts: Vec<Partition>) -> Vec<(Partition, usize)> {
    parts
        .into_iter()
        .flat_map(|m| (0..=ctx.r()).map(move |l| (m.clone(), l)))
        .collect()
}

/// Runs one suite over the configured ranges.
pub fn run_suite(ctx: &Context, id: SuiteId, cfg: &SuiteConfig) -> SuiteResult {
    let r = ctx.r();
    let parts = partitions_up_to(cfg.max_weight, r);
    let outcomes = match id {
        SuiteId::SekiguchiEigen => run_cases(parts, |m| {
            vec![
                verify_sekiguchi_eigen(ctx, m),
                verify_sekiguchi_scaled(ctx, m),
                sekiguchi_literal_erratum(ctx, m),
                verify_d_eigen(ctx, m),
            ]
        }),
        SuiteId::PieriClassical => run_cases(with_l(ctx, parts), |(m, l)| {
            vec![verify_pieri_classical(ctx, m, *l)]
        }),
        SuiteId::TwistedFalling => run_cases(with_l(ctx, parts), |(x, l)| {
            vec![verify_twisted_falling(ctx, x, *l)]
        }),
        SuiteId::TwistedRaising => run_cases(with_l(ctx, parts), |(k, l)| {
            vec![verify_twisted_raising(ctx, k, *l)]
        }),
        SuiteId::LemmaSum => run_cases(vec![cfg.seed], |seed| {
            vec![lemma_sum_suite(ctx, *seed, LEMMA_SAMPLES)]
        }),
        SuiteId::IjackDifference => run_cases(parts, |k| {
            vec![verify_difference_eq(ctx, k, cfg.box_height())]
        }),
        SuiteId::IjackPieri => run_cases(parts, |k| {
            vec![verify_ijack_pieri(ctx, k, cfg.box_height())]
        }),
        SuiteId::ExpBinomial => {
            let ks = partitions_up_to(cfg.max_weight.min(cfg.trunc), r);
            run_cases(ks, |k| vec![verify_exp_binomial(ctx, k, cfg.trunc)])
        }
        SuiteId::KernelIntertwine => run_cases((0..=r).collect(), |l| {
            vec![verify_intertwine(ctx, *l, cfg.trunc)]
        }),
        SuiteId::PsiPieri => run_cases(with_l(ctx, parts), |(m, l)| {
            vec![verify_psi_pieri(ctx, m, *l)]
        }),
        SuiteId::BinomialShift | SuiteId::BinomialTwisted => binomial_cases(ctx, id, cfg),
    };
    SuiteResult {
        suite: id,
        outcomes,
    }
}

fn binomial_cases(ctx: &Context, id: SuiteId, cfg: &SuiteConfig) -> Vec<CaseOutcome> {
    let r = ctx.r();
    let n = cfg.trunc;
    let w = cfg.max_weight.min(n);
    let mut out = Vec::new();
    for &choice in cfg.series.members() {
        let series = match choice.build(r, n) {
            Ok(s) => s,
            Err(e) => {
                out.push(outcome(format!("{choice:?}"), Err(e)));
                continue;
            }
        };
        let family = match binomial_family(ctx, &series, n) {
            Ok(f) => f,
            Err(e) => {
                out.push(outcome(format!("{choice:?} family"), Err(e)));
                continue;
            }
        };
        let name = series.name.clone();
        let parts = partitions_up_to(w, r);
        let batch = if id == SuiteId::BinomialShift {
            run_cases(parts, |m| {
                vec![verify_binomial_shift(ctx, &name, &family, m)]
            })
        } else {
            let max_l = cfg.max_l.unwrap_or(r).min(r);
            let cases: Vec<(Partition, usize)> = parts
                .into_iter()
                .flat_map(|m| (0..=max_l).map(move |l| (m.clone(), l)))
                .collect();
            run_cases(cases, |(m, l)| {
                vec![verify_twisted_pieri_binomial(ctx, &name, &family, m, *l)]
            })
        };
        out.extend(batch);
    }
    out
}
