//! Exhaustive verification suites over bounded corpora of shapes and posets.
//!
//! Every suite runs its cases in parallel and gathers results in corpus
//! order, so reports are identical from run to run. Failures carry a case
//! identifier that can be fed back to the command line: shape text such as
//! `3,2/1`, or the JSON file form of a poset.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pedestal::{bst_forward, bst_inverse, pedestal, pedestal_polynomial};
use crate::polyq::{series_rational, TruncatedSeries};
use crate::poset::{
    for_each_x_partition, is_semistandard, linear_extensions, minimal_semistandard, semistandard_counts,
    x_partition_counts, Filter, Poset, PosetFile,
};
use crate::rsk::{schuetzenberger, schuetzenberger_with};
use crate::shapes::SkewShape;
use crate::specmat::{factored_display, verify_integer_eigenvalues};
use crate::tableaux::{
    bss_forward, bss_inverse, enumerate_syt, for_each_ssyt, maj, maj_polynomial, partition_sequences, plinth,
    ssyt_counts,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Stanley,
    Equidistribution,
    MahonianRowFilter,
    Schuetzenberger,
    PedestalIndependence,
    Bijections,
    MinimalElement,
    Eigen,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Stanley,
        Suite::Equidistribution,
        Suite::MahonianRowFilter,
        Suite::Schuetzenberger,
        Suite::PedestalIndependence,
        Suite::Bijections,
        Suite::MinimalElement,
        Suite::Eigen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Stanley => "stanley",
            Suite::Equidistribution => "equidistribution",
            Suite::MahonianRowFilter => "mahonian-row-filter",
            Suite::Schuetzenberger => "schuetzenberger",
            Suite::PedestalIndependence => "pedestal-independence",
            Suite::Bijections => "bijections",
            Suite::MinimalElement => "minimal-element",
            Suite::Eigen => "eigen",
        }
    }

    /// Suites whose cases are tableaux of shapes rather than general posets.
    fn needs_shapes(self) -> bool {
        matches!(
            self,
            Suite::Stanley | Suite::Equidistribution | Suite::MahonianRowFilter | Suite::Schuetzenberger
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Corpus sizes and truncation limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Skew shapes `λ/μ` with `|λ| <= max_cells`.
    pub max_cells: usize,
    pub series_degree: usize,
    /// Pedestal matrices are only built below this many linear extensions.
    pub max_extensions: usize,
    pub seed: u64,
    pub random_posets: usize,
    pub random_max_elements: usize,
    /// Chains and antichains up to this size.
    pub max_chain: usize,
    pub bijection_cells: usize,
    pub bijection_volume: u64,
    pub minimal_volume: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_cells: 6,
            series_degree: 12,
            max_extensions: 24,
            seed: 0,
            random_posets: 50,
            random_max_elements: 6,
            max_chain: 5,
            bijection_cells: 5,
            bijection_volume: 8,
            minimal_volume: 10,
        }
    }
}

/// A poset together with the filter used by the filter-aware suites.
#[derive(Clone, Debug)]
pub struct PosetCase {
    pub id: String,
    pub poset: Poset,
    pub filter: Filter,
}

impl PosetCase {
    pub fn from_shape(s: &SkewShape) -> Self {
        PosetCase {
            id: s.to_string(),
            poset: Poset::from_skew_shape(s),
            filter: Filter::row(s),
        }
    }

    /// Identified by its JSON file form.
    pub fn from_poset(poset: Poset, filter: Filter) -> Self {
        let file = PosetFile::from_poset(&poset, Some(&filter));
        PosetCase {
            id: serde_json::to_string(&file).expect("poset files serialize"),
            poset,
            filter,
        }
    }
}

/// What a suite runs over.
#[derive(Clone, Debug, Default)]
pub enum Target {
    /// The built-in corpus at the configured bounds.
    #[default]
    Corpus,
    Shape(SkewShape),
    Posets(Vec<PosetCase>),
}

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub bounds: Bounds,
    pub target: Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(case: &str, expected: impl ToString, actual: impl ToString) -> Self {
        Failure {
            case: case.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    fn error(case: &str, e: &Error) -> Self {
        Failure::new(case, "no error", e)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub passed: bool,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    /// Wall-clock time; left out of the serialized form so output is stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Multi-line human summary.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({} cases, {} failures)\n",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases_run,
            self.failures.len()
        );
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        for f in &self.failures {
            out.push_str(&format!(
                "  case {}\n    expected: {}\n    actual:   {}\n",
                f.case, f.expected, f.actual
            ));
        }
        out
    }
}

/// Posets that are not shapes: the diamond, the N, a zigzag, a claw and a bowtie.
pub fn named_posets() -> Vec<(&'static str, Poset)> {
    let build = |labels: &[&str], covers: &[(&str, &str)]| {
        Poset::from_covers(labels, covers).expect("named posets are acyclic")
    };
    vec![
        (
            "diamond",
            build(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]),
        ),
        ("n", build(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")])),
        (
            "zigzag",
            build(
                &["a", "b", "c", "d", "e"],
                &[("a", "b"), ("c", "b"), ("c", "d"), ("e", "d")],
            ),
        ),
        (
            "claw",
            build(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("a", "d")]),
        ),
        (
            "bowtie",
            build(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]),
        ),
    ]
}

/// Seeded random posets with random filters.
pub fn random_cases(bounds: &Bounds) -> Vec<PosetCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    (0..bounds.random_posets)
        .map(|_| {
            let n = rng.gen_range(1..=bounds.random_max_elements.max(1));
            let density = rng.gen_range(0.15..0.6);
            let p = Poset::random(n, density, &mut rng);
            let f = Filter::random(&p, &mut rng);
            PosetCase::from_poset(p, f)
        })
        .collect()
}

/// Shape posets with the row filter, chains, antichains, the named posets
/// and the random posets, in that order.
pub fn poset_corpus(bounds: &Bounds) -> Vec<PosetCase> {
    let mut out: Vec<PosetCase> = SkewShape::corpus(bounds.max_cells)
        .iter()
        .map(PosetCase::from_shape)
        .collect();
    for n in 1..=bounds.max_chain {
        for p in [Poset::chain(n), Poset::antichain(n)] {
            let f = Filter::trivial(&p);
            out.push(PosetCase::from_poset(p, f));
        }
    }
    for (_, p) in named_posets() {
        let f = Filter::trivial(&p);
        out.push(PosetCase::from_poset(p, f));
    }
    out.extend(random_cases(bounds));
    out
}

/// Reads one poset file, or every `*.json` file of a directory in name order.
pub fn load_poset_cases(path: &Path) -> Result<Vec<PosetCase>> {
    let files = if path.is_dir() {
        let mut files: Vec<_> = std::fs::read_dir(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
            .collect();
        files.sort();
        files
    } else {
        vec![path.to_path_buf()]
    };
    files
        .iter()
        .map(|file| {
            let text =
                std::fs::read_to_string(file).map_err(|e| Error::InvalidInput(format!("{}: {e}", file.display())))?;
            let parsed: PosetFile =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
            let (p, f) = parsed.build()?;
            Ok(PosetCase::from_poset(p, f))
        })
        .collect()
}

/// Outcome of a single case.
struct CaseOutcome {
    failures: Vec<Failure>,
    notes: Vec<String>,
    skipped: bool,
}

impl CaseOutcome {
    fn from_failures(failures: Vec<Failure>) -> Self {
        CaseOutcome {
            failures,
            notes: Vec::new(),
            skipped: false,
        }
    }

    fn skipped() -> Self {
        CaseOutcome {
            failures: Vec::new(),
            notes: Vec::new(),
            skipped: true,
        }
    }
}

fn run_cases<T: Sync>(
    items: &[T],
    case: impl Fn(&T) -> CaseOutcome + Sync + Send,
) -> (usize, Vec<Failure>, Vec<String>, usize) {
    let outcomes: Vec<CaseOutcome> = items.par_iter().map(case).collect();
    let mut run = 0;
    let mut skipped = 0;
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for o in outcomes {
        if o.skipped {
            skipped += 1;
        } else {
            run += 1;
        }
        failures.extend(o.failures);
        notes.extend(o.notes);
    }
    (run, failures, notes, skipped)
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort_unstable();
    v
}

fn series_text(s: &TruncatedSeries) -> String {
    let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    format!("[{}]", coeffs.join(","))
}

fn stanley_case(s: &SkewShape, degree: usize) -> Vec<Failure> {
    let id = s.to_string();
    let exps: Vec<usize> = (1..=s.size()).collect();
    let lhs = TruncatedSeries::from_counts(&ssyt_counts(s, degree as u64));
    match series_rational(&maj_polynomial(s), &exps, degree) {
        Ok(rhs) if rhs == lhs => Vec::new(),
        Ok(rhs) => vec![Failure::new(&id, series_text(&lhs), series_text(&rhs))],
        Err(e) => vec![Failure::error(&id, &e)],
    }
}

fn equidistribution_case(s: &SkewShape) -> Vec<Failure> {
    let syt = enumerate_syt(s);
    let majs = sorted(syt.iter().map(|q| maj(q) as u64).collect());
    let vols = sorted(syt.iter().map(|q| plinth(q).volume()).collect());
    if majs == vols {
        Vec::new()
    } else {
        vec![Failure::new(&s.to_string(), format!("{majs:?}"), format!("{vols:?}"))]
    }
}

fn mahonian_row_filter_case(s: &SkewShape) -> Vec<Failure> {
    let id = s.to_string();
    let x = Poset::from_skew_shape(s);
    let shift = minimal_semistandard(&x, &Filter::row(s)).volume();
    let majs = sorted(enumerate_syt(s).iter().map(|q| maj(q) as u64).collect());
    let exts = linear_extensions(&x);
    for p in &exts {
        let stats: Result<Vec<u64>> = exts
            .iter()
            .map(|q| pedestal(p, q).map(|d| d.volume() + shift))
            .collect();
        match stats {
            Ok(stats) => {
                let stats = sorted(stats);
                if stats != majs {
                    return vec![Failure::new(
                        &id,
                        format!("maj multiset {majs:?}"),
                        format!("pedestal + {shift} multiset {stats:?} for P = {:?}", p.ranks()),
                    )];
                }
            }
            Err(e) => return vec![Failure::error(&id, &e)],
        }
    }
    Vec::new()
}

fn schuetzenberger_case(s: &SkewShape) -> Vec<Failure> {
    let id = s.to_string();
    let all = enumerate_syt(s);
    let mut failures = Vec::new();
    for q in &all {
        let sch = match schuetzenberger(q) {
            Ok(t) => t,
            Err(e) => return vec![Failure::error(&id, &e)],
        };
        let tag = format!("{id} Q={:?}", q.rows());
        let vol = plinth(&sch).volume();
        if maj(q) as u64 != vol {
            failures.push(Failure::new(
                &tag,
                format!("maj {}", maj(q)),
                format!("plinth volume {vol}"),
            ));
        }
        match schuetzenberger(&sch) {
            Ok(back) if &back == q => {}
            Ok(back) => failures.push(Failure::new(&tag, "involution", format!("{:?}", back.rows()))),
            Err(e) => failures.push(Failure::error(&tag, &e)),
        }
        for aux in &all {
            match schuetzenberger_with(q, aux) {
                Ok(t) if t == sch => {}
                Ok(t) => {
                    failures.push(Failure::new(
                        &format!("{tag} aux={:?}", aux.rows()),
                        format!("{:?}", sch.rows()),
                        format!("{:?}", t.rows()),
                    ));
                    break;
                }
                Err(e) => failures.push(Failure::error(&tag, &e)),
            }
        }
    }
    failures
}

fn independence_case(c: &PosetCase) -> Vec<Failure> {
    let exts = linear_extensions(&c.poset);
    let mut reference = None;
    for p in &exts {
        match pedestal_polynomial(&c.poset, p) {
            Ok(g) => match &reference {
                None => reference = Some(g),
                Some(r) if *r == g => {}
                Some(r) => {
                    return vec![Failure::new(&c.id, r, format!("{g} for P = {:?}", p.ranks()))];
                }
            },
            Err(e) => return vec![Failure::error(&c.id, &e)],
        }
    }
    Vec::new()
}

fn bss_case(s: &SkewShape, max_volume: u64) -> Vec<Failure> {
    let id = s.to_string();
    let mut failures = Vec::new();
    let mut backward = vec![0u64; max_volume as usize + 1];
    for_each_ssyt(s, max_volume, |t| {
        backward[t.volume() as usize] += 1;
        if !failures.is_empty() {
            return;
        }
        let round = bss_inverse(t).and_then(|(q, y)| {
            let vol = plinth(&q).volume() + y.iter().sum::<u64>();
            bss_forward(&q, &y).map(|back| (back, vol))
        });
        match round {
            Ok((back, vol)) if &back == t && vol == t.volume() => {}
            Ok((back, vol)) => failures.push(Failure::new(
                &format!("{id} T={:?}", t.rows()),
                format!("{:?} with volume {}", t.rows(), t.volume()),
                format!("{:?} with volume {vol}", back.rows()),
            )),
            Err(e) => failures.push(Failure::error(&format!("{id} T={:?}", t.rows()), &e)),
        }
    });
    let mut forward = vec![0u64; max_volume as usize + 1];
    for q in enumerate_syt(s) {
        let base = plinth(&q).volume();
        if base > max_volume {
            continue;
        }
        for y in partition_sequences(s.size(), max_volume - base) {
            let vol = base + y.iter().sum::<u64>();
            forward[vol as usize] += 1;
            let round = bss_forward(&q, &y).and_then(|t| bss_inverse(&t).map(|pair| (t.volume(), pair)));
            match round {
                Ok((tv, (q2, y2))) if tv == vol && q2 == q && y2 == y => {}
                Ok((tv, (q2, y2))) => failures.push(Failure::new(
                    &format!("{id} Q={:?} y={y:?}", q.rows()),
                    format!("({:?}, {y:?}) at volume {vol}", q.rows()),
                    format!("({:?}, {y2:?}) at volume {tv}", q2.rows()),
                )),
                Err(e) => failures.push(Failure::error(&format!("{id} Q={:?} y={y:?}", q.rows()), &e)),
            }
        }
    }
    if forward != backward {
        failures.push(Failure::new(
            &id,
            format!("semistandard counts {backward:?}"),
            format!("pair counts {forward:?}"),
        ));
    }
    failures
}

fn bst_case(c: &PosetCase, max_volume: u64) -> Vec<Failure> {
    let x = &c.poset;
    let exts = linear_extensions(x);
    let mut failures = Vec::new();
    for p in &exts {
        let tag = format!("{} P={:?}", c.id, p.ranks());
        let mut backward = vec![0u64; max_volume as usize + 1];
        for_each_x_partition(x, None, max_volume, |t| {
            backward[t.volume() as usize] += 1;
            if !failures.is_empty() {
                return;
            }
            let round = bst_inverse(p, t).and_then(|(q, y)| {
                let ok = x.is_linear_extension(&q);
                bst_forward(p, &q, &y).map(|back| (back, ok))
            });
            match round {
                Ok((back, true)) if &back == t => {}
                Ok((back, _)) => failures.push(Failure::new(
                    &format!("{tag} T={:?}", t.values()),
                    format!("{:?}", t.values()),
                    format!("{:?}", back.values()),
                )),
                Err(e) => failures.push(Failure::error(&format!("{tag} T={:?}", t.values()), &e)),
            }
        });
        let mut forward = vec![0u64; max_volume as usize + 1];
        for q in &exts {
            let base = match pedestal(p, q) {
                Ok(d) => d.volume(),
                Err(e) => {
                    failures.push(Failure::error(&tag, &e));
                    continue;
                }
            };
            if base > max_volume {
                continue;
            }
            for y in partition_sequences(x.len(), max_volume - base) {
                forward[(base + y.iter().sum::<u64>()) as usize] += 1;
                let round = bst_forward(p, q, &y).and_then(|t| {
                    let ok = x.is_x_partition(&t);
                    bst_inverse(p, &t).map(|pair| (pair, ok))
                });
                match round {
                    Ok(((q2, y2), true)) if &q2 == q && y2 == y => {}
                    Ok(((q2, y2), _)) => failures.push(Failure::new(
                        &format!("{tag} Q={:?} y={y:?}", q.ranks()),
                        format!("({:?}, {y:?})", q.ranks()),
                        format!("({:?}, {y2:?})", q2.ranks()),
                    )),
                    Err(e) => failures.push(Failure::error(&format!("{tag} Q={:?} y={y:?}", q.ranks()), &e)),
                }
            }
        }
        if forward != backward {
            failures.push(Failure::new(
                &tag,
                format!("X-partition counts {backward:?}"),
                format!("pair counts {forward:?}"),
            ));
        }
        if !failures.is_empty() {
            break;
        }
    }
    failures
}

fn minimal_element_case(c: &PosetCase, max_volume: u64) -> Vec<Failure> {
    let (x, f) = (&c.poset, &c.filter);
    let t = minimal_semistandard(x, f);
    let mut failures = Vec::new();
    if !is_semistandard(x, f, &t) {
        failures.push(Failure::new(
            &c.id,
            "semistandard minimal element",
            format!("{:?}", t.values()),
        ));
    }
    let mut not_above = None;
    for_each_x_partition(x, None, max_volume, |s| {
        if not_above.is_none() && is_semistandard(x, f, s) && !t.below(s) {
            not_above = Some(s.values().to_vec());
        }
    });
    if let Some(s) = not_above {
        failures.push(Failure::new(
            &c.id,
            format!("{:?} below every semistandard element", t.values()),
            format!("{s:?}"),
        ));
    }
    let shift = t.volume() as usize;
    let semi = semistandard_counts(x, f, max_volume);
    let plain = x_partition_counts(x, max_volume);
    let shifted: Vec<u64> = (0..plain.len())
        .map(|v| if v >= shift { plain[v - shift] } else { 0 })
        .collect();
    if semi != shifted {
        failures.push(Failure::new(
            &c.id,
            format!("X-partition counts shifted by {shift}: {shifted:?}"),
            format!("semistandard counts {semi:?}"),
        ));
    }
    failures
}

fn eigen_case(c: &PosetCase, max_extensions: usize, with_notes: bool) -> CaseOutcome {
    if linear_extensions(&c.poset).len() > max_extensions {
        return CaseOutcome::skipped();
    }
    match verify_integer_eigenvalues(&c.poset, max_extensions) {
        Ok(check) => {
            let mut outcome = CaseOutcome::from_failures(Vec::new());
            match &check.result {
                Some(r) if !r.certified => {
                    outcome
                        .failures
                        .push(Failure::new(&c.id, "certified eigenvalues", "uncertified"));
                }
                Some(r) if with_notes => {
                    outcome.notes.extend(
                        r.eigenvalues
                            .iter()
                            .map(|e| format!("{}: eigenvalue {e} = {}", c.id, factored_display(e))),
                    );
                }
                _ => {}
            }
            outcome.failures.extend(
                check
                    .problems
                    .iter()
                    .map(|p| Failure::new(&c.id, "structural checks hold", p)),
            );
            outcome
        }
        Err(e) => CaseOutcome::from_failures(vec![Failure::error(&c.id, &e)]),
    }
}

fn shapes_for(suite: Suite, config: &SuiteConfig) -> Result<Vec<SkewShape>> {
    match &config.target {
        Target::Shape(s) => Ok(vec![s.clone()]),
        Target::Corpus if suite == Suite::Schuetzenberger => Ok(SkewShape::straight_corpus(config.bounds.max_cells)),
        Target::Corpus => Ok(SkewShape::corpus(config.bounds.max_cells)),
        Target::Posets(_) => Err(Error::InvalidInput(format!(
            "suite {suite} runs over shapes, not posets"
        ))),
    }
}

fn posets_for(config: &SuiteConfig, corpus: impl FnOnce(&Bounds) -> Vec<PosetCase>) -> Vec<PosetCase> {
    match &config.target {
        Target::Shape(s) => vec![PosetCase::from_shape(s)],
        Target::Posets(cases) => cases.clone(),
        Target::Corpus => corpus(&config.bounds),
    }
}

/// Runs `suite` over the configured target.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let b = &config.bounds;
    if suite.needs_shapes() {
        let shapes = shapes_for(suite, config)?;
        if suite == Suite::Schuetzenberger {
            if let Some(skew) = shapes.iter().find(|s| !s.is_straight()) {
                return Err(Error::InvalidInput(format!(
                    "suite {suite} needs a straight shape, got {skew}"
                )));
            }
        }
    }
    let (cases_run, failures, mut notes, skipped) = match suite {
        Suite::Stanley => run_cases(&shapes_for(suite, config)?, |s| {
            CaseOutcome::from_failures(stanley_case(s, b.series_degree))
        }),
        Suite::Equidistribution => run_cases(&shapes_for(suite, config)?, |s| {
            CaseOutcome::from_failures(equidistribution_case(s))
        }),
        Suite::MahonianRowFilter => run_cases(&shapes_for(suite, config)?, |s| {
            CaseOutcome::from_failures(mahonian_row_filter_case(s))
        }),
        Suite::Schuetzenberger => run_cases(&shapes_for(suite, config)?, |s| {
            CaseOutcome::from_failures(schuetzenberger_case(s))
        }),
        Suite::PedestalIndependence => run_cases(&posets_for(config, poset_corpus), |c| {
            CaseOutcome::from_failures(independence_case(c))
        }),
        Suite::Bijections => {
            let shapes = match &config.target {
                Target::Shape(s) => vec![s.clone()],
                Target::Posets(_) => Vec::new(),
                Target::Corpus => SkewShape::corpus(b.bijection_cells.min(b.max_cells)),
            };
            let mut posets = posets_for(config, poset_corpus);
            if matches!(config.target, Target::Corpus) {
                posets.retain(|c| c.poset.len() <= b.bijection_cells);
            }
            let ss = run_cases(&shapes, |s| CaseOutcome::from_failures(bss_case(s, b.bijection_volume)));
            let st = run_cases(&posets, |c| CaseOutcome::from_failures(bst_case(c, b.bijection_volume)));
            let mut failures = ss.1;
            failures.extend(st.1);
            let notes = vec![
                format!("semistandard tableau bijection: {} shapes", ss.0),
                format!("X-partition bijection: {} posets", st.0),
            ];
            (ss.0 + st.0, failures, notes, 0)
        }
        Suite::MinimalElement => {
            let cases = posets_for(config, |bounds| {
                let mut cases: Vec<PosetCase> = SkewShape::corpus(bounds.max_cells)
                    .iter()
                    .map(PosetCase::from_shape)
                    .collect();
                cases.extend(random_cases(bounds));
                cases
            });
            run_cases(&cases, |c| {
                CaseOutcome::from_failures(minimal_element_case(c, b.minimal_volume))
            })
        }
        Suite::Eigen => {
            let with_notes = !matches!(config.target, Target::Corpus);
            run_cases(&posets_for(config, poset_corpus), |c| {
                eigen_case(c, b.max_extensions, with_notes)
            })
        }
    };
    if skipped > 0 {
        notes.push(format!(
            "{skipped} posets skipped for having more than {} linear extensions",
            b.max_extensions
        ));
    }
    Ok(VerificationReport {
        suite,
        passed: failures.is_empty(),
        cases_run,
        failures,
        notes,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape_config(s: &str) -> SuiteConfig {
        SuiteConfig {
            bounds: Bounds::default(),
            target: Target::Shape(s.parse().unwrap()),
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert_eq!("nope".parse::<Suite>(), Err(Error::UnknownSuite("nope".into())));
    }

    #[test]
    fn random_corpus_is_seeded() {
        let b = Bounds::default();
        let ids = |b: &Bounds| random_cases(b).into_iter().map(|c| c.id).collect::<Vec<_>>();
        assert_eq!(ids(&b), ids(&b));
        assert_ne!(ids(&b), ids(&Bounds { seed: 1, ..b.clone() }));
        assert_eq!(random_cases(&b).len(), 50);
        assert!(random_cases(&b).iter().all(|c| c.poset.len() <= 6));
    }

    #[test]
    fn poset_case_ids_replay() {
        for c in poset_corpus(&Bounds {
            max_cells: 2,
            ..Bounds::default()
        }) {
            if c.id.starts_with('{') {
                let file: PosetFile = serde_json::from_str(&c.id).unwrap();
                let (p, f) = file.build().unwrap();
                assert_eq!(p, c.poset);
                assert_eq!(f, c.filter);
            } else {
                let s: SkewShape = c.id.parse().unwrap();
                assert_eq!(Poset::from_skew_shape(&s), c.poset);
            }
        }
    }

    #[test]
    fn single_shape_suites_pass() {
        for suite in [
            Suite::Stanley,
            Suite::Equidistribution,
            Suite::MahonianRowFilter,
            Suite::Schuetzenberger,
            Suite::PedestalIndependence,
            Suite::Bijections,
            Suite::MinimalElement,
            Suite::Eigen,
        ] {
            let r = run_suite(suite, &shape_config("3,2")).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.failures);
            assert_eq!(r.passed, r.passed());
            assert!(r.cases_run >= 1);
        }
    }

    #[test]
    fn eigen_report_names_eigenvalues() {
        let r = run_suite(Suite::Eigen, &shape_config("3,2")).unwrap();
        assert_eq!(r.notes.len(), 5);
        assert!(r.notes.iter().any(|n| n.contains("1 + q + q^2 + q^3 + q^4")));
    }

    #[test]
    fn skew_shape_failure_is_reported_with_replayable_id() {
        let r = run_suite(Suite::MahonianRowFilter, &shape_config("2,2/1")).unwrap();
        assert!(!r.passed());
        assert_eq!(r.failures[0].case, "2,2/1");
        let r = run_suite(Suite::MinimalElement, &shape_config("2,2/1")).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn shape_suites_reject_posets() {
        let config = SuiteConfig {
            bounds: Bounds::default(),
            target: Target::Posets(vec![]),
        };
        assert!(matches!(
            run_suite(Suite::Stanley, &config),
            Err(Error::InvalidInput(_))
        ));
        let skew = shape_config("2,1/1");
        assert!(matches!(
            run_suite(Suite::Schuetzenberger, &skew),
            Err(Error::InvalidInput(_))
        ));
    }
}
