//! The `wehrhart` command line. Everything except argument collection and
//! process exit lives here so that tests can drive [`run`] directly.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::algebra::{format_rat, parse_rat, HomogPoly, LaurentPoly};
use crate::corpus;
use crate::ehrhart::{run_suite, Ehrhart, EhrhartError, NamedPhi, NamedWeight, Suite, Variant};
use crate::polytope::{FaceId, FaceLattice, PolytopeFile};
use crate::weights::{dualize, WeightFunction};

/// Environment variable that caps the worker threads of `verify`.
pub const THREADS_ENV: &str = "WEHRHART_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input. Exit code 2.
    #[error("{0}")]
    Parse(String),
    /// Well-formed input that violates a precondition. Exit code 3.
    #[error("{0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Validation(_) => "validation",
        }
    }
}

impl From<EhrhartError> for CliError {
    fn from(e: EhrhartError) -> Self {
        CliError::Validation(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceSelector {
    Top,
    Id(FaceId),
}

impl FromStr for FaceSelector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "P" {
            return Ok(FaceSelector::Top);
        }
        s.parse()
            .map(FaceSelector::Id)
            .map_err(|_| format!("expected a face id or P, got {s:?}"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "wehrhart", about = "Weighted Ehrhart polynomials and their reciprocity identities")]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facet presentation and face lattice export.
    Faces { polytope: PathBuf },
    /// g-weight function of a face (`P` for the whole polytope).
    Gweights {
        polytope: PathBuf,
        #[arg(long)]
        face: FaceSelector,
    },
    /// h-polynomial of the polar polytope.
    Hpoly { polytope: PathBuf },
    /// Dual of a weight function.
    Dualize {
        polytope: PathBuf,
        #[arg(long)]
        weights: PathBuf,
    },
    /// Equivariant character sum at dilation `l` (any integer).
    Charsum {
        polytope: PathBuf,
        #[arg(long = "l", allow_hyphen_values = true)]
        l: i64,
        /// Defaults to the all-ones weight.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Weighted Ehrhart polynomial in `z`, with its consistency checks.
    Ehrhart {
        polytope: PathBuf,
        /// Defaults to `phi = 1`.
        #[arg(long)]
        phi: Option<PathBuf>,
        #[arg(long, default_value = "E")]
        variant: Variant,
        /// Defaults to the all-ones weight.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Exact verification suite.
    Verify {
        polytope: PathBuf,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        lmax: i64,
        /// Verify this weight function only (default: all-ones and the
        /// g-weights of P).
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Integrand files; defaults to `1`, a linear and a quadratic form.
        #[arg(long)]
        phi: Vec<PathBuf>,
        /// Add seeded random weight functions.
        #[arg(long)]
        random_weights: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 5)]
        count: u64,
    },
}

/// Result of a successful run: the rendered output and whether every check
/// passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
    pub summary: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            passed: true,
            summary: String::new(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn load_lattice(path: &Path) -> Result<FaceLattice, CliError> {
    let file: PolytopeFile = parse_json(path)?;
    let polytope = file
        .build()
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    Ok(FaceLattice::build(&polytope))
}

pub fn load_weights(path: &Path, lattice: &FaceLattice) -> Result<WeightFunction, CliError> {
    let w: WeightFunction = parse_json(path)?;
    w.check(lattice)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    Ok(w)
}

#[derive(Deserialize)]
struct PhiMonomial {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Deserialize)]
struct PhiFile {
    n: usize,
    monomials: Vec<PhiMonomial>,
}

/// Loads `{"n": d, "monomials": [{"exps": [...], "coeff": "p/q"}]}`; a
/// non-homogeneous polynomial or a dimension mismatch is a validation error.
pub fn load_phi(path: &Path, n: usize) -> Result<HomogPoly, CliError> {
    let raw: PhiFile = parse_json(path)?;
    let monos = raw
        .monomials
        .into_iter()
        .map(|m| {
            parse_rat(&m.coeff)
                .map(|c| (m.exps, c))
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let phi = HomogPoly::new(raw.n, monos)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    if phi.n() != n {
        return Err(CliError::Validation(format!(
            "{}: integrand is {}-dimensional, polytope is {n}-dimensional",
            path.display(),
            phi.n()
        )));
    }
    Ok(phi)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn resolve_face(lattice: &FaceLattice, sel: FaceSelector) -> Result<FaceId, CliError> {
    match sel {
        FaceSelector::Top => Ok(lattice.top()),
        FaceSelector::Id(id) if id < lattice.len() && lattice.dim(id) >= 0 => Ok(id),
        FaceSelector::Id(id) => Err(CliError::Validation(format!("no nonempty face with id {id}"))),
    }
}

#[derive(Serialize)]
struct HpolyOutput {
    h_polynomial: String,
    coefficients: Vec<String>,
    palindromic: bool,
}

#[derive(Serialize)]
struct ConstantTermOutput {
    formula: LaurentPoly,
    interpolated: LaurentPoly,
    passed: bool,
}

#[derive(Serialize)]
struct EhrhartOutput {
    variant: &'static str,
    phi: String,
    degree_bound: usize,
    coeffs: Vec<LaurentPoly>,
    rendered: String,
    overdetermination_samples: [usize; 2],
    constant_term: ConstantTermOutput,
}

pub fn run(job: &JobSpec) -> Result<Outcome, CliError> {
    match &job.command {
        Command::Faces { polytope } => {
            let lattice = load_lattice(polytope)?;
            Ok(Outcome::ok(to_json(&lattice.export())))
        }
        Command::Gweights { polytope, face } => {
            let lattice = load_lattice(polytope)?;
            let q = resolve_face(&lattice, *face)?;
            let w = Ehrhart::new(&lattice)
                .stanley()
                .g_weight_function(q)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            Ok(Outcome::ok(to_json(&w)))
        }
        Command::Hpoly { polytope } => {
            let lattice = load_lattice(polytope)?;
            let h = crate::stanley::h_polynomial(&lattice);
            let palindromic = h.reversed(lattice.n()) == h;
            let out = HpolyOutput {
                h_polynomial: h.to_string(),
                coefficients: h.coeffs().iter().map(format_rat).collect(),
                palindromic,
            };
            Ok(Outcome {
                output: to_json(&out),
                passed: palindromic,
                summary: "h-polynomial is not palindromic".into(),
            })
        }
        Command::Dualize { polytope, weights } => {
            let lattice = load_lattice(polytope)?;
            let w = load_weights(weights, &lattice)?;
            let d = dualize(&lattice, &w).map_err(|e| CliError::Validation(e.to_string()))?;
            Ok(Outcome::ok(to_json(&d)))
        }
        Command::Charsum { polytope, l, weights } => {
            let lattice = load_lattice(polytope)?;
            let w = match weights {
                Some(p) => load_weights(p, &lattice)?,
                None => WeightFunction::all_ones(&lattice),
            };
            let s = Ehrhart::new(&lattice).hodge_character_sum(&w, *l)?;
            Ok(Outcome::ok(to_json(&s)))
        }
        Command::Ehrhart {
            polytope,
            phi,
            variant,
            weights,
        } => {
            let lattice = load_lattice(polytope)?;
            let n = lattice.n();
            let w = match weights {
                Some(p) => load_weights(p, &lattice)?,
                None => WeightFunction::all_ones(&lattice),
            };
            let phi = match phi {
                Some(p) => load_phi(p, n)?,
                None => HomogPoly::one(n),
            };
            let engine = Ehrhart::new(&lattice);
            match engine.polynomial(&w, &phi, *variant) {
                Ok(z) => {
                    let bound = n + phi.degree() as usize;
                    let constant = engine.constant_term(&w, &phi, *variant)?;
                    let interpolated = z.eval_int(0);
                    let out = EhrhartOutput {
                        variant: variant.name(),
                        phi: phi.to_string(),
                        degree_bound: bound,
                        coeffs: z.coeffs().to_vec(),
                        rendered: z.to_string(),
                        overdetermination_samples: [bound + 2, bound + 3],
                        constant_term: ConstantTermOutput {
                            passed: interpolated == constant,
                            formula: constant,
                            interpolated,
                        },
                    };
                    Ok(Outcome::ok(to_json(&out)))
                }
                Err(e @ (EhrhartError::Overdetermination { .. } | EhrhartError::ConstantTerm { .. })) => {
                    let out = json!({ "variant": variant.name(), "error": e.to_string() });
                    Ok(Outcome {
                        output: to_json(&out),
                        passed: false,
                        summary: e.to_string(),
                    })
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify {
            polytope,
            suite,
            lmax,
            weights,
            phi,
            random_weights,
            seed,
            count,
        } => {
            if *lmax < 1 {
                return Err(CliError::Validation(format!("--lmax must be at least 1, got {lmax}")));
            }
            if *random_weights && seed.is_none() {
                return Err(CliError::Validation("--random-weights requires --seed".into()));
            }
            let lattice = load_lattice(polytope)?;
            let n = lattice.n();
            let engine = Ehrhart::new(&lattice);

            let mut named_weights = Vec::new();
            match weights {
                Some(p) => named_weights.push(NamedWeight {
                    name: p.display().to_string(),
                    weight: load_weights(p, &lattice)?,
                }),
                None => {
                    named_weights.push(NamedWeight {
                        name: "all-ones".into(),
                        weight: WeightFunction::all_ones(&lattice),
                    });
                    named_weights.push(NamedWeight {
                        name: "g-weights(P)".into(),
                        weight: engine
                            .stanley()
                            .g_weight_function(lattice.top())
                            .map_err(|e| CliError::Validation(e.to_string()))?,
                    });
                }
            }
            if let (true, Some(seed)) = (*random_weights, seed) {
                for s in *seed..*seed + *count {
                    named_weights.push(NamedWeight {
                        name: format!("random(seed={s})"),
                        weight: WeightFunction::random_seeded(&lattice, s),
                    });
                }
            }

            let phis = if phi.is_empty() {
                corpus::standard_phis(n)
                    .into_iter()
                    .map(|(name, phi)| NamedPhi {
                        name: name.into(),
                        phi,
                    })
                    .collect()
            } else {
                phi.iter()
                    .map(|p| {
                        Ok(NamedPhi {
                            name: p.display().to_string(),
                            phi: load_phi(p, n)?,
                        })
                    })
                    .collect::<Result<Vec<_>, CliError>>()?
            };

            let name = polytope
                .file_stem()
                .map_or_else(|| "polytope".to_string(), |s| s.to_string_lossy().into_owned());
            let report = run_suite(&engine, &name, *suite, &named_weights, &phis, *lmax);
            Ok(Outcome {
                output: to_json(&report),
                passed: report.passed,
                summary: format!(
                    "{} of {} checks failed",
                    report.failed_checks, report.total_checks
                ),
            })
        }
    }
}

/// Parses `args`, runs the job, writes the output and returns the process
/// exit code. Errors go to stderr as one `key=value` line.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let job = match JobSpec::try_parse_from(args) {
        Ok(job) => job,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(threads) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(&job) {
        Ok(outcome) => {
            let written = match &job.output {
                Some(path) => fs::write(path, &outcome.output),
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("status=error kind=io reason={e:?}");
                return 2;
            }
            if !outcome.passed {
                eprintln!("status=fail kind=check reason={:?}", outcome.summary);
            }
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("status=error kind={} reason={:?}", e.kind(), e.to_string());
            e.exit_code()
        }
    }
}
