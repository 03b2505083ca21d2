//! Acceptance harness: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use jpk::binomialtype::bernoulli_poly;
use jpk::interpolation::ijack_p;
use jpk::jack::{jack_p, lemma_sum_suite};
use jpk::partitions::{elementary_e, partitions_up_to, power_sum_p1};
use jpk::scalars::{int, rat};
use jpk::suites::{run_suite, CaseOutcome, SeriesChoice, SuiteConfig, SuiteId, SuiteResult};
use jpk::{BigRat, Context, DRat, Partition, SymPoly, VerdictReport};
use num_integer::binomial;
use num_traits::Zero;

const SEED: u64 = 20240601;

struct Line {
    n: u32,
    passed: bool,
    summary: String,
    notes: Vec<String>,
}

#[derive(Default)]
struct Tally {
    pass: usize,
    fail: usize,
    skip: usize,
    error: usize,
    first_problem: Option<String>,
}

impl Tally {
    fn add_report(&mut self, r: &VerdictReport) {
        if r.passed {
            self.pass += 1;
        } else {
            self.fail += 1;
            self.first_problem.get_or_insert_with(|| r.summary_line());
        }
    }

    fn add(&mut self, res: &SuiteResult, identity: Option<&str>) {
        for o in &res.outcomes {
            match o {
                CaseOutcome::Report(r) => {
                    if identity.is_none_or(|id| r.identity == id) {
                        self.add_report(r);
                    }
                }
                CaseOutcome::Skipped { case, reason } => {
                    self.skip += 1;
                    self.first_problem
                        .get_or_insert_with(|| format!("skipped {case}: {reason}"));
                }
                CaseOutcome::Error { case, error } => {
                    self.error += 1;
                    self.first_problem
                        .get_or_insert_with(|| format!("error in {case}: {error}"));
                }
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.skip += other.skip;
        self.error += other.error;
        if self.first_problem.is_none() {
            self.first_problem = other.first_problem;
        }
    }

    /// Skips count as failures unless `allow_skips` is set.
    fn ok(&self, allow_skips: bool) -> bool {
        self.fail == 0 && self.error == 0 && (allow_skips || self.skip == 0) && self.pass > 0
    }

    fn describe(&self) -> String {
        let mut s = format!("{} passed, {} failed", self.pass, self.fail);
        if self.skip > 0 {
            s.push_str(&format!(", {} skipped at poles", self.skip));
        }
        if self.error > 0 {
            s.push_str(&format!(", {} errors", self.error));
        }
        s
    }
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn cfg(max_weight: u32, trunc: u32) -> SuiteConfig {
    SuiteConfig::new(max_weight, trunc, SEED)
}

/// Runs criteria 1 to 9 in one mode; also used by criterion 11.
struct ModeRun {
    ctxs: BTreeMap<usize, Context>,
    tallies: BTreeMap<u32, Tally>,
    literal_failures: usize,
    elapsed: BTreeMap<u32, f64>,
}

fn eigen_weight(r: usize) -> u32 {
    if r <= 2 {
        5
    } else {
        4
    }
}

fn run_mode(make: impl Fn(usize) -> Context) -> ModeRun {
    let ctxs: BTreeMap<usize, Context> = (1..=4).map(|r| (r, make(r))).collect();
    let mut tallies = BTreeMap::new();
    let mut elapsed = BTreeMap::new();
    let mut literal_failures = 0;

    let t = Instant::now();
    let mut t1 = Tally::default();
    let mut t2 = Tally::default();
    for r in 1..=3 {
        let res = run_suite(&ctxs[&r], SuiteId::SekiguchiEigen, &cfg(eigen_weight(r), 0));
        t1.add(&res, Some("sekiguchi-eigen"));
        t1.add(&res, Some("d-eigen"));
        t2.add(&res, Some("sekiguchi-scaled"));
        t2.add(&res, Some("sekiguchi-literal-erratum"));
        for o in &res.outcomes {
            if let CaseOutcome::Report(rep) = o {
                if rep.identity == "sekiguchi-literal-erratum" {
                    literal_failures += rep.details.len();
                }
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    tallies.insert(1, t1);
    tallies.insert(2, t2);
    elapsed.insert(1, secs);
    elapsed.insert(2, secs);

    let mut timed = |n: u32, f: &dyn Fn() -> Tally| {
        let t = Instant::now();
        tallies.insert(n, f());
        elapsed.insert(n, t.elapsed().as_secs_f64());
    };

    let over = |id: SuiteId, rs: &[usize], c: SuiteConfig| {
        let mut t = Tally::default();
        for r in rs {
            t.add(&run_suite(&ctxs[r], id, &c), None);
        }
        t
    };

    timed(3, &|| over(SuiteId::TwistedRaising, &[1, 2, 3], cfg(4, 0)));
    timed(4, &|| over(SuiteId::TwistedFalling, &[1, 2, 3], cfg(4, 0)));
    timed(5, &|| over(SuiteId::LemmaSum, &[1, 2, 3, 4], cfg(0, 0)));
    timed(6, &|| over(SuiteId::IjackDifference, &[1, 2, 3], cfg(3, 0)));
    timed(7, &|| over(SuiteId::IjackPieri, &[1, 2, 3], cfg(3, 0)));
    timed(8, &|| over(SuiteId::ExpBinomial, &[1, 2, 3], cfg(3, 4)));
    timed(9, &|| {
        let mut t = over(SuiteId::KernelIntertwine, &[1, 2, 3], cfg(0, 4));
        t.merge(over(SuiteId::PsiPieri, &[1, 2, 3], cfg(4, 0)));
        let mut shift = cfg(3, 3);
        shift.series = SeriesChoice::Both;
        t.merge(over(SuiteId::BinomialShift, &[1, 2, 3], shift.clone()));
        t.merge(over(SuiteId::BinomialTwisted, &[1, 2], shift));
        t
    });

    ModeRun {
        ctxs,
        tallies,
        literal_failures,
        elapsed,
    }
}

const DESCRIPTIONS: [&str; 9] = [
    "Sekiguchi generating identity S(u) P_m = I(u; m) P_m, r<=3",
    "scaled components (d/2)^p H_p P_m = e_p(m + (d/2)delta) P_m",
    "raising twisted Pieri, Phi and Psi forms and components, l<=r<=3, |k|<=4",
    "falling twisted Pieri and u-extracted forms, l<=r<=3, |x|<=4",
    "mysterious summation equals |I|, 20 seeded points per subset, r<=4",
    "interpolation difference equation, x_1<=4, r<=3, |k|<=3",
    "interpolation Pieri formula, x_1<=4, r<=3, |k|<=3",
    "exponential binomial formulas, N=4, r<=3, |k|<=3",
    "kernel intertwining, Psi-Pieri, binomial shift and binomial twisted Pieri",
];

fn main() -> ExitCode {
    let start = Instant::now();
    let mut lines = Vec::new();

    let sym = run_mode(|r| Context::symbolic(r).unwrap());
    for n in 1..=9u32 {
        let t = &sym.tallies[&n];
        let mut passed = t.ok(false);
        let mut notes = Vec::new();
        if n == 2 {
            notes.push(format!(
                "erratum check: unscaled relation fails in {} cases with p>=1 at symbolic d",
                sym.literal_failures
            ));
            passed &= sym.literal_failures > 0;
        }
        if let Some(prob) = &t.first_problem {
            notes.push(prob.clone());
        }
        lines.push(Line {
            n,
            passed,
            summary: format!(
                "{}: {} ({:.1}s)",
                DESCRIPTIONS[n as usize - 1],
                t.describe(),
                sym.elapsed[&n]
            ),
            notes,
        });
    }

    lines.push(criterion_10(&sym.ctxs));
    lines.push(criterion_11(&sym));

    let mut all = true;
    for l in &lines {
        all &= l.passed;
        let status = if l.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status}  {}", l.n, l.summary);
        for note in &l.notes {
            println!("               {note}");
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        lines.iter().filter(|l| l.passed).count(),
        lines.len(),
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// Classical Bernoulli numbers from `Σ_{k<=n} C(n+1, k) B_k = 0`.
fn classical_bernoulli(n: usize) -> Vec<BigRat> {
    let mut b: Vec<BigRat> = vec![int(1)];
    for m in 1..=n {
        let s: BigRat = (0..m)
            .map(|k| &b[k] * int(binomial(m as i64 + 1, k as i64)))
            .sum();
        b.push(-s / int(m as i64 + 1));
    }
    b
}

fn criterion_10(ctxs: &BTreeMap<usize, Context>) -> Line {
    let t = Instant::now();
    let mut notes = Vec::new();
    let mut checks = 0;
    let mut check = |label: String, got: SymPoly, want: SymPoly| {
        checks += 1;
        if got != want {
            notes.push(format!("{label}: got {got}, expected {want}"));
        }
    };

    let d = DRat::d();
    let two = DRat::from_int(2);
    let c = (&two * &d).checked_div(&(&d + &two)).unwrap();
    let want = SymPoly::from_terms(2, [(p(&[2, 0]), DRat::one()), (p(&[1, 1]), c)]);
    check(
        "P_(2,0) at r=2".into(),
        (*jack_p(&ctxs[&2], &p(&[2, 0])).unwrap()).clone(),
        want,
    );

    for r in 1..=4 {
        for k in 1..=r {
            let mut parts = vec![1; k];
            parts.resize(r, 0);
            let got = (*jack_p(&ctxs[&r], &p(&parts)).unwrap()).clone();
            check(
                format!("P_(1^{k}) at r={r}"),
                got,
                elementary_e(r, k).unwrap(),
            );
        }
    }

    for r in 1..=4 {
        let mut parts = vec![1];
        parts.resize(r, 0);
        let got = (*ijack_p(&ctxs[&r], &p(&parts)).unwrap()).clone();
        let shift = d.scale(&rat((r * (r - 1)) as i64, 4));
        let want = power_sum_p1(r).sub(&SymPoly::constant(r, shift));
        check(format!("P^ip_(1) at r={r}"), got, want);
    }

    let b = classical_bernoulli(6);
    for n in 0..=6u32 {
        let got = bernoulli_poly(&ctxs[&1], &p(&[n])).unwrap();
        let want = SymPoly::from_terms(
            1,
            (0..=n).filter(|&k| !b[k as usize].is_zero()).map(|k| {
                let c = &b[k as usize] * int(binomial(n as i64, k as i64));
                (p(&[n - k]), DRat::from_bigrat(c))
            }),
        );
        check(format!("Bernoulli B_{n}(z)"), got, want);
    }

    let passed = notes.is_empty();
    Line {
        n: 10,
        passed,
        summary: format!(
            "value anchors: P_(2,0), P_(1^k)=e_k, P^ip_(1), Bernoulli B_n for n<=6: {} checks ({:.1}s)",
            checks,
            t.elapsed().as_secs_f64()
        ),
        notes,
    }
}

fn criterion_11(sym: &ModeRun) -> Line {
    let t = Instant::now();
    let mut notes = Vec::new();
    let mut total = Tally::default();
    let mut spec_checks = 0;
    let mut mismatches = 0;
    for d0 in [rat(2, 1), rat(1, 3)] {
        let run = run_mode(|r| Context::specialized(r, d0.clone()).unwrap());
        let mut mode_tally = Tally::default();
        for n in 1..=9u32 {
            mode_tally.merge(clone_tally(&run.tallies[&n]));
        }
        if let Some(prob) = &mode_tally.first_problem {
            notes.push(format!("d0={d0}: {prob}"));
        }
        total.merge(mode_tally);

        // Same polynomials as the symbolic run after evaluating d.
        for r in 1..=3usize {
            let (sc, dc) = (&sym.ctxs[&r], &run.ctxs[&r]);
            for m in partitions_up_to(eigen_weight(r).max(4 + r as u32), r) {
                spec_checks += 1;
                let (a, b) = (jack_p(sc, &m), jack_p(dc, &m));
                if !same_specialized(a.as_deref(), b.as_deref(), &d0) {
                    mismatches += 1;
                    notes.push(format!(
                        "d0={d0}: P_{m} differs from the specialized symbolic value"
                    ));
                }
            }
            for m in partitions_up_to(3 + r as u32, r) {
                spec_checks += 1;
                let (a, b) = (ijack_p(sc, &m), ijack_p(dc, &m));
                if !same_specialized(a.as_deref(), b.as_deref(), &d0) {
                    mismatches += 1;
                    notes.push(format!(
                        "d0={d0}: P^ip_{m} differs from the specialized symbolic value"
                    ));
                }
            }
        }
        for r in 1..=4usize {
            spec_checks += 1;
            let a = lemma_sum_suite(&run.ctxs[&r], SEED, 20).map(|rep| rep.passed);
            if a != Ok(true) {
                mismatches += 1;
                notes.push(format!("d0={d0}: lemma summation at r={r} gave {a:?}"));
            }
        }
    }
    let passed = total.ok(true) && mismatches == 0;
    Line {
        n: 11,
        passed,
        summary: format!(
            "criteria 1-9 at d0=2 and d0=1/3: {}; {} specialized polynomial comparisons, {} mismatches ({:.1}s)",
            total.describe(),
            spec_checks,
            mismatches,
            t.elapsed().as_secs_f64()
        ),
        notes,
    }
}

fn clone_tally(t: &Tally) -> Tally {
    Tally {
        pass: t.pass,
        fail: t.fail,
        skip: t.skip,
        error: t.error,
        first_problem: t.first_problem.clone(),
    }
}

/// Symbolic poles are allowed to become specialization poles and vice versa
/// only as a pair; otherwise the specialized symbolic value must match.
fn same_specialized(
    sym: Result<&SymPoly, &jpk::Error>,
    spec: Result<&SymPoly, &jpk::Error>,
    d0: &BigRat,
) -> bool {
    match (sym, spec) {
        (Ok(a), Ok(b)) => a.specialize(d0).as_ref() == Ok(b),
        (Ok(a), Err(e)) => e.is_specialization_singularity() && a.specialize(d0).is_err(),
        (Err(_), _) => false,
    }
}
