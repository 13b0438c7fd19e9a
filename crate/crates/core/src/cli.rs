//! Command-line front end.
//!
//! `pedestal-lab <verb> [subverb] (--shape TEXT | --poset FILE) [flags]`.
//! JSON is written on a single line unless `--format text` is given. Exit
//! codes: 0 on success, 1 when a verification fails, 2 on bad input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pedestal::{pedestal, pedestal_polynomial, semistandard_series_via_pedestals};
use crate::polyq::{series_rational, IntPoly, TruncatedSeries};
use crate::poset::{linear_extensions, minimal_semistandard, semistandard_counts, x_partition_counts, Filter, Poset};
use crate::rsk::{rsk, schuetzenberger, Permutation};
use crate::shapes::SkewShape;
use crate::specmat::{
    eigen_polynomials, factored_display, find_simultaneous_permutation, structural_checks, PedestalMatrix,
};
use crate::tableaux::{descent_data, enumerate_syt, maj, maj_polynomial, plinth, plinth_polynomial, ssyt_counts};
use crate::verify::{self, Bounds, Suite, SuiteConfig, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Syt,
    Gf,
    Plinth,
    Pedestal,
    Matrix,
    Eigen,
    Rsk,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterKind {
    Row,
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "pedestal-lab",
    version,
    about = "Plinths, pedestals and pedestal matrices over Z[q]"
)]
pub struct Command {
    pub verb: Verb,
    /// Sub-command of the verb, e.g. `count`, `plinth`, `insert` or a suite name.
    pub subverb: Option<String>,
    /// Skew shape such as `3,2` or `4,3,1/2,1`.
    #[arg(long, conflicts_with = "poset")]
    pub shape: Option<String>,
    /// Poset JSON file; `verify` also accepts a directory of them.
    #[arg(long)]
    pub poset: Option<PathBuf>,
    /// Overrides the filter of the target (row filter needs a shape).
    #[arg(long, value_enum)]
    pub filter: Option<FilterKind>,
    #[arg(long, default_value_t = 12)]
    pub series_degree: usize,
    #[arg(long, default_value_t = 6)]
    pub max_cells: usize,
    #[arg(long, default_value_t = 24)]
    pub max_extensions: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Permutation for `rsk insert`, one-line notation such as `2,3,1`.
    #[arg(long)]
    pub perm: Option<String>,
    /// Exponent matrix to compare `matrix` output against, as JSON rows of
    /// exponents of q.
    #[arg(long)]
    pub reference: Option<PathBuf>,
}

/// What a command produced: a JSON value, its text rendering and whether a
/// check inside it failed.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            failed: false,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn series_text(s: &TruncatedSeries) -> String {
    let mut terms = Vec::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        let mono = IntPoly::monomial(k).scale(c);
        if !mono.is_zero() {
            terms.push(mono.to_string());
        }
    }
    if terms.is_empty() {
        terms.push("0".into());
    }
    format!(
        "{} + O(q^{})",
        terms.join(" + ").replace("+ -", "- "),
        s.truncation_degree() + 1
    )
}

fn rows_text<T: ToString>(rows: &[Vec<T>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

impl Command {
    fn bounds(&self) -> Bounds {
        Bounds {
            max_cells: self.max_cells,
            series_degree: self.series_degree,
            max_extensions: self.max_extensions,
            seed: self.seed,
            ..Bounds::default()
        }
    }

    fn sub<'a>(&'a self, default: &'a str) -> &'a str {
        self.subverb.as_deref().unwrap_or(default)
    }

    fn shape(&self) -> Result<Option<SkewShape>> {
        self.shape.as_deref().map(str::parse).transpose()
    }

    fn require_shape(&self) -> Result<SkewShape> {
        self.shape()?
            .ok_or_else(|| Error::InvalidInput(format!("{:?} needs --shape", self.verb).to_lowercase()))
    }

    /// The poset of the target with its filter, after any `--filter` override.
    fn poset(&self) -> Result<(Poset, Filter)> {
        let (p, f, shape) = match (self.shape()?, &self.poset) {
            (Some(s), _) => (Poset::from_skew_shape(&s), Filter::row(&s), Some(s)),
            (None, Some(path)) => {
                let mut cases = verify::load_poset_cases(path)?;
                if cases.len() != 1 || path.is_dir() {
                    return Err(Error::InvalidInput("--poset must name a single file here".into()));
                }
                let c = cases.remove(0);
                (c.poset, c.filter, None)
            }
            (None, None) => return Err(Error::InvalidInput("either --shape or --poset is required".into())),
        };
        let f = match (self.filter, shape) {
            (None, _) => f,
            (Some(FilterKind::Trivial), _) => Filter::trivial(&p),
            (Some(FilterKind::Row), Some(s)) => Filter::row(&s),
            (Some(FilterKind::Row), None) => {
                return Err(Error::InvalidInput("the row filter needs --shape".into()));
            }
        };
        Ok((p, f))
    }

    fn run(&self) -> Result<Output> {
        match self.verb {
            Verb::Syt => self.syt(),
            Verb::Gf => self.gf(),
            Verb::Plinth => self.plinth(),
            Verb::Pedestal => self.pedestal(),
            Verb::Matrix => self.matrix(),
            Verb::Eigen => self.eigen(),
            Verb::Rsk => self.rsk(),
            Verb::Verify => self.verify(),
        }
    }

    fn syt(&self) -> Result<Output> {
        match self.sub("count") {
            "count" => {
                let n = match self.shape()? {
                    Some(s) => enumerate_syt(&s).len(),
                    None => linear_extensions(&self.poset()?.0).len(),
                };
                Ok(Output::ok(json!(n), n.to_string()))
            }
            "list" => match self.shape()? {
                Some(s) => {
                    let all = enumerate_syt(&s);
                    let text = all.iter().map(|t| rows_text(&t.rows())).collect::<Vec<_>>().join("\n");
                    Ok(Output::ok(to_json(&all), text))
                }
                None => {
                    let (p, _) = self.poset()?;
                    let exts = linear_extensions(&p);
                    let text = exts
                        .iter()
                        .map(|e| e.order().iter().map(|&a| p.label(a)).collect::<Vec<_>>().join(" < "))
                        .collect::<Vec<_>>()
                        .join("\n");
                    Ok(Output::ok(to_json(&exts), text))
                }
            },
            other => Err(unknown_subverb("syt", other, &["count", "list"])),
        }
    }

    fn gf(&self) -> Result<Output> {
        let n = self.series_degree;
        let poly = |g: IntPoly| Output::ok(to_json(&g), g.to_string());
        let series = |s: TruncatedSeries| Output::ok(to_json(&s), series_text(&s));
        match self.sub("plinth") {
            "plinth" => Ok(poly(plinth_polynomial(&self.require_shape()?))),
            "maj" => Ok(poly(maj_polynomial(&self.require_shape()?))),
            "ssyt" => Ok(series(TruncatedSeries::from_counts(&ssyt_counts(
                &self.require_shape()?,
                n as u64,
            )))),
            "stanley" => {
                let s = self.require_shape()?;
                let exps: Vec<usize> = (1..=s.size()).collect();
                Ok(series(series_rational(&maj_polynomial(&s), &exps, n)?))
            }
            "xpart" => Ok(series(TruncatedSeries::from_counts(&x_partition_counts(
                &self.poset()?.0,
                n as u64,
            )))),
            "semistandard" => {
                let (p, f) = self.poset()?;
                Ok(series(TruncatedSeries::from_counts(&semistandard_counts(
                    &p, &f, n as u64,
                ))))
            }
            "pedestal" => {
                let (p, f) = self.poset()?;
                let first = linear_extensions(&p).remove(0);
                Ok(series(semistandard_series_via_pedestals(&p, &f, &first, n)?))
            }
            other => Err(unknown_subverb(
                "gf",
                other,
                &["plinth", "maj", "ssyt", "stanley", "xpart", "semistandard", "pedestal"],
            )),
        }
    }

    fn plinth(&self) -> Result<Output> {
        let s = self.require_shape()?;
        let mut rows = Vec::new();
        let mut text = Vec::new();
        for q in enumerate_syt(&s) {
            let p = plinth(&q);
            let d = descent_data(&q);
            text.push(format!(
                "{}  maj {}  plinth {}  volume {}",
                rows_text(&q.rows()),
                d.maj,
                rows_text(&p.rows()),
                p.volume()
            ));
            rows.push(json!({
                "tableau": to_json(&q),
                "descents": d.descent_contents,
                "maj": maj(&q),
                "plinth": to_json(&p),
                "volume": p.volume(),
            }));
        }
        Ok(Output::ok(Value::Array(rows), text.join("\n")))
    }

    fn pedestal(&self) -> Result<Output> {
        let (p, f) = self.poset()?;
        let exts = linear_extensions(&p);
        let reference = exts[0].clone();
        match self.sub("polynomial") {
            "polynomial" => {
                let g = pedestal_polynomial(&p, &reference)?;
                let t = minimal_semistandard(&p, &f);
                let text = format!("{g}\nminimal semistandard volume {}", t.volume());
                Ok(Output::ok(
                    json!({
                        "polynomial": to_json(&g),
                        "minimal_semistandard": t.to_json(&p),
                        "shift": t.volume(),
                    }),
                    text,
                ))
            }
            "list" => {
                let mut items = Vec::new();
                let mut text = Vec::new();
                for q in &exts {
                    let d = pedestal(&reference, q)?;
                    text.push(format!(
                        "{:?} -> {:?} volume {}",
                        q.ranks(),
                        d.base.values(),
                        d.volume()
                    ));
                    items.push(json!({
                        "extension": q,
                        "pedestal": d.base.to_json(&p),
                        "volume": d.volume(),
                    }));
                }
                Ok(Output::ok(
                    json!({"reference": reference, "pedestals": items}),
                    text.join("\n"),
                ))
            }
            other => Err(unknown_subverb("pedestal", other, &["polynomial", "list"])),
        }
    }

    fn matrix(&self) -> Result<Output> {
        let (p, _) = self.poset()?;
        let m = PedestalMatrix::new(&p);
        let mut text = rows_text_matrix(&m);
        let mut out = json!({"matrix": to_json(&m)});
        let mut failed = false;
        if let Some(path) = &self.reference {
            let body =
                std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            let exps: Vec<Vec<usize>> =
                serde_json::from_str(&body).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let reference: Vec<Vec<IntPoly>> = exps
                .iter()
                .map(|r| r.iter().map(|&e| IntPoly::monomial(e)).collect())
                .collect();
            let sigma = find_simultaneous_permutation(&m, &reference);
            failed = sigma.is_none();
            text.push_str(&match &sigma {
                Some(s) => format!("\nmatches reference under permutation {s:?}"),
                None => "\ndoes not match reference under any simultaneous permutation".into(),
            });
            out["reference_permutation"] = to_json(&sigma);
        }
        Ok(Output {
            json: out,
            text,
            failed,
        })
    }

    fn eigen(&self) -> Result<Output> {
        let (p, _) = self.poset()?;
        let count = linear_extensions(&p).len();
        if count > self.max_extensions {
            return Err(Error::InvalidInput(format!(
                "{count} linear extensions exceed --max-extensions {}",
                self.max_extensions
            )));
        }
        let m = PedestalMatrix::new(&p);
        let eig = eigen_polynomials(&m)?;
        let problems = structural_checks(&m, &eig);
        let factored: Vec<String> = eig.eigenvalues.iter().map(factored_display).collect();
        let mut text: Vec<String> = eig
            .eigenvalues
            .iter()
            .zip(&factored)
            .map(|(e, f)| format!("{e} = {f}"))
            .collect();
        text.push(format!("certified: {}", eig.certified));
        text.extend(problems.iter().map(|p| format!("problem: {p}")));
        Ok(Output {
            json: json!({
                "dim": m.dim(),
                "eigenvalues": to_json(&eig.eigenvalues),
                "factored": factored,
                "certified": eig.certified,
                "base_point": eig.base_point,
                "char_poly": to_json(&eig.char_poly),
                "problems": problems,
            }),
            text: text.join("\n"),
            failed: !eig.certified || !problems.is_empty(),
        })
    }

    fn rsk(&self) -> Result<Output> {
        match self.sub("insert") {
            "insert" => {
                let text = self
                    .perm
                    .as_deref()
                    .ok_or_else(|| Error::InvalidInput("rsk insert needs --perm".into()))?;
                let word = text
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let sigma = Permutation::new(word)?;
                let (p, q) = rsk(&sigma);
                Ok(Output::ok(
                    json!({"permutation": sigma, "P": to_json(&p), "Q": to_json(&q)}),
                    format!("P: {}\nQ: {}", rows_text(&p.rows()), rows_text(&q.rows())),
                ))
            }
            "sch" => {
                let s = self.require_shape()?;
                let mut items = Vec::new();
                let mut text = Vec::new();
                for q in enumerate_syt(&s) {
                    let e = schuetzenberger(&q)?;
                    text.push(format!("{} -> {}", rows_text(&q.rows()), rows_text(&e.rows())));
                    items.push(json!({"tableau": to_json(&q), "image": to_json(&e)}));
                }
                Ok(Output::ok(Value::Array(items), text.join("\n")))
            }
            other => Err(unknown_subverb("rsk", other, &["insert", "sch"])),
        }
    }

    fn verify(&self) -> Result<Output> {
        let suite: Suite = self
            .subverb
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("verify needs a suite name".into()))?
            .parse()?;
        let target = match (self.shape()?, &self.poset) {
            (Some(s), _) => Target::Shape(s),
            (None, Some(path)) => Target::Posets(verify::load_poset_cases(path)?),
            (None, None) => Target::Corpus,
        };
        let report = verify::run_suite(
            suite,
            &SuiteConfig {
                bounds: self.bounds(),
                target,
            },
        )?;
        Ok(Output {
            json: to_json(&report),
            text: report.to_text().trim_end().to_string(),
            failed: !report.passed(),
        })
    }
}

fn rows_text_matrix(m: &PedestalMatrix) -> String {
    m.entries()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join("\t"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn unknown_subverb(verb: &str, got: &str, known: &[&str]) -> Error {
    Error::InvalidInput(format!(
        "unknown {verb} sub-command {got:?}; expected one of {}",
        known.join(", ")
    ))
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the process exit code.
pub fn run_command<O: Write, E: Write>(args: &[String], out: &mut O, err: &mut E) -> i32 {
    let cmd = match Command::try_parse_from(args) {
        Ok(cmd) => cmd,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match cmd.run() {
        Ok(output) => {
            let body = match cmd.format {
                Format::Json => output.json.to_string(),
                Format::Text => output.text,
            };
            if writeln!(out, "{body}").is_err() {
                return 2;
            }
            i32::from(output.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}
