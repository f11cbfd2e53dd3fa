//! The `spflag` command line: one subcommand per computation, JSON or CSV out.
//!
//! Exit status is 0 on success, 1 when a verification fails, 2 on bad input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bundles::{discrepancy_rows, discrepancy_solve, discrepancy_table, verify_canonical_identity};
use crate::charring::{weyl_character, LaurentPoly};
use crate::error::Error;
use crate::fixedpoints::{abl_verify, enumerate_fixed_points};
use crate::geometry::{in_resolution, in_sp_flag_a, in_sp_grass_a, lift, project_pi, FlagPoint, ResolutionPoint};
use crate::polytope::{character_of_points, lattice_points, polytope_spec, LatticePoint};
use crate::rootsys::{DominantWeight, FlagType, Root, RootSystem};

const ENUM_LIMIT_N: u32 = 4;
const ABL_LIMIT_N: u32 = 3;
const TYPE_A_LIMIT_M: u32 = 8;

#[derive(Debug, Parser)]
#[command(name = "spflag", version, about = "Degenerate symplectic flag varieties: characters, fixed points, resolutions")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for enumeration (results do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Lift the soft size limits.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Eps,
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    C,
    A,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    /// Rank parameter: `sp_2n` for type C, `sl_n` for type A.
    #[arg(long)]
    pub n: u32,
    /// Coefficients m_1,...,m_r of lambda in fundamental weights.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Vec<String>,
    #[arg(long = "type", value_enum, default_value_t = Kind::C)]
    pub kind: Kind,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of lattice points of P(lambda).
    Dim(WeightArgs),
    /// PBW-graded character from the polytope.
    Qchar {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum, default_value_t = Basis::Eps)]
        weight_basis: Basis,
    },
    /// Weyl character oracle.
    Weyl {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum, default_value_t = Basis::Eps)]
        weight_basis: Basis,
    },
    /// Inequalities and lattice points of P(lambda).
    Polytope(WeightArgs),
    /// Torus fixed points of the complete resolution.
    FixedPoints {
        #[arg(long)]
        n: u32,
        /// Print only the number of fixed points.
        #[arg(long)]
        count: bool,
    },
    /// Compare the localization sum with the polytope q-character.
    AblVerify {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<String>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, env = "SPFLAG_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Discrepancy coefficients b_{i,j} and the exceptional divisors.
    Discrepancy {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        d: Vec<String>,
    },
    /// Membership test for a flag or resolution point read from JSON.
    CheckGeometry {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        d: Vec<String>,
        #[arg(long)]
        input: PathBuf,
    },
    /// Lift a flag point to the resolution.
    Lift {
        #[arg(long)]
        input: PathBuf,
    },
}

/// Input and output documents of the geometry commands.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeometryDoc {
    Flag(FlagPoint),
    Resolution(ResolutionPoint),
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LiftInfeasible { .. } | Error::NonzeroRemainder | Error::EmbeddingViolation(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Rendered output plus whether the verification it reports passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn parse_list(raw: &[String], what: &str) -> std::result::Result<Vec<u32>, Failure> {
    raw.iter()
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Failure::usage(format!("{what}: {s:?} is not a nonnegative integer")))
        })
        .collect()
}

fn system_and_weight(w: &WeightArgs, force: bool) -> std::result::Result<(RootSystem, DominantWeight), Failure> {
    let m = parse_list(&w.lambda, "--lambda")?;
    let system = match w.kind {
        Kind::C => {
            if w.n > ENUM_LIMIT_N && !force {
                return Err(Failure::usage(format!(
                    "n = {} exceeds the soft limit {ENUM_LIMIT_N}; pass --force to run anyway",
                    w.n
                )));
            }
            RootSystem::type_c(w.n)?
        }
        Kind::A => {
            if w.n > TYPE_A_LIMIT_M && !force {
                return Err(Failure::usage(format!(
                    "sl_{} exceeds the soft limit sl_{TYPE_A_LIMIT_M}; pass --force to run anyway",
                    w.n
                )));
            }
            RootSystem::type_a(w.n)?
        }
    };
    if m.len() != system.rank() {
        return Err(Failure::usage(format!(
            "--lambda needs {} comma-separated entries for {system}, got {}",
            system.rank(),
            m.len()
        )));
    }
    Ok((system, DominantWeight(m)))
}

fn to_json<T: Serialize>(v: &T) -> std::result::Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::usage(e.to_string()))
}

fn csv_text(header: &[String], rows: Vec<Vec<String>>) -> std::result::Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| Failure::from(Error::from(e));
    w.write_record(header).map_err(fail)?;
    for r in rows {
        w.write_record(&r).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render_poly(p: &LaurentPoly, system: RootSystem, basis: Basis, format: Format) -> std::result::Result<String, Failure> {
    let p = match basis {
        Basis::Eps => p.clone(),
        Basis::Omega => p.map_exponents(|z| crate::rootsys::Weight(z.to_vec()).to_omega(system)),
    };
    let terms = p.to_terms();
    match format {
        Format::Json => to_json(&terms),
        Format::Csv => {
            let width = terms.first().map_or(system.eps_len(), |t| t.weight.len());
            let prefix = if basis == Basis::Omega { "w" } else { "e" };
            let mut header = vec!["q".to_string()];
            header.extend((1..=width).map(|k| format!("{prefix}{k}")));
            header.push("mult".into());
            let rows = terms
                .iter()
                .map(|t| {
                    let mut r = vec![t.q.to_string()];
                    r.extend(t.weight.iter().map(|x| x.to_string()));
                    r.push(match &t.mult {
                        crate::charring::Mult::Int(v) => v.to_string(),
                        crate::charring::Mult::Frac(s) => s.clone(),
                    });
                    r
                })
                .collect();
            csv_text(&header, rows)
        }
    }
}

#[derive(Serialize)]
struct PolytopeDoc<'a> {
    system: String,
    lambda: &'a [u32],
    roots: &'a [Root],
    inequalities: &'a [crate::polytope::Inequality],
    points: &'a [LatticePoint],
}

#[derive(Serialize)]
struct DiscrepancyDoc {
    n: u32,
    d: Vec<u32>,
    rows: Vec<crate::bundles::DiscrepancyRow>,
    identity_holds: bool,
    oracle_agrees: bool,
}

#[derive(Serialize)]
struct FlagCheckDoc {
    kind: &'static str,
    grassmannian: Vec<bool>,
    in_sp_flag_a: bool,
}

#[derive(Serialize)]
struct ResolutionCheckDoc {
    kind: &'static str,
    in_resolution: bool,
    projection_in_sp_flag_a: bool,
}

fn read_doc(path: &PathBuf) -> std::result::Result<GeometryDoc, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn check_flag_args(flag: &FlagType, n: Option<u32>, d: &[String]) -> std::result::Result<(), Failure> {
    if let Some(n) = n {
        if n != flag.n() {
            return Err(Failure::usage(format!("--n {n} disagrees with the input (n = {})", flag.n())));
        }
    }
    if !d.is_empty() {
        let d = parse_list(d, "--d")?;
        if d != flag.d() {
            return Err(Failure::usage(format!("--d {d:?} disagrees with the input (d = {flag})")));
        }
    }
    Ok(())
}

fn execute(cli: &Cli) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Dim(w) => {
            let (system, lambda) = system_and_weight(w, g.force)?;
            let spec = polytope_spec(&lambda, system)?;
            Ok(Outcome::ok(format!("{}\n", lattice_points(&spec).len())))
        }
        Command::Qchar { w, weight_basis } => {
            let (system, lambda) = system_and_weight(w, g.force)?;
            let spec = polytope_spec(&lambda, system)?;
            let ch = character_of_points(&spec, &lattice_points(&spec));
            let mut p = LaurentPoly::from(&ch);
            if p.is_empty() {
                p = LaurentPoly::zero(system.eps_len());
            }
            Ok(Outcome::ok(render_poly(&p, system, *weight_basis, g.format)?))
        }
        Command::Weyl { w, weight_basis } => {
            let (system, lambda) = system_and_weight(w, g.force)?;
            let p = weyl_character(&lambda, system)?;
            Ok(Outcome::ok(render_poly(&p, system, *weight_basis, g.format)?))
        }
        Command::Polytope(w) => {
            let (system, lambda) = system_and_weight(w, g.force)?;
            let spec = polytope_spec(&lambda, system)?;
            let points = lattice_points(&spec);
            match g.format {
                Format::Json => to_json(&PolytopeDoc {
                    system: system.to_string(),
                    lambda: lambda.coeffs(),
                    roots: &spec.roots,
                    inequalities: &spec.inequalities,
                    points: &points,
                }),
                Format::Csv => {
                    let header: Vec<String> = spec.roots.iter().map(|r| format!("s_{}_{}", r.i, r.j)).collect();
                    let rows = points.iter().map(|p| p.0.iter().map(|x| x.to_string()).collect()).collect();
                    csv_text(&header, rows)
                }
            }
            .map(Outcome::ok)
        }
        Command::FixedPoints { n, count } => {
            RootSystem::type_c(*n)?;
            if *n > ENUM_LIMIT_N && !g.force {
                return Err(Failure::usage(format!(
                    "2^{} fixed points exceed the soft limit n <= {ENUM_LIMIT_N}; pass --force",
                    n * n
                )));
            }
            let all = enumerate_fixed_points(*n);
            if *count {
                return Ok(Outcome::ok(format!("{}\n", all.len())));
            }
            match g.format {
                Format::Json => to_json(&all),
                Format::Csv => {
                    let header: Vec<String> = ["collection", "i", "j", "set"].iter().map(|s| s.to_string()).collect();
                    let mut rows = Vec::new();
                    for (k, c) in all.iter().enumerate() {
                        for (r, s) in c.sets() {
                            let set: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                            rows.push(vec![k.to_string(), r.i.to_string(), r.j.to_string(), set.join(" ")]);
                        }
                    }
                    csv_text(&header, rows)
                }
            }
            .map(Outcome::ok)
        }
        Command::AblVerify { n, lambda, trials, seed } => {
            if *n > ABL_LIMIT_N && !g.force {
                return Err(Failure::usage(format!(
                    "abl-verify is limited to n <= {ABL_LIMIT_N}; pass --force to run anyway"
                )));
            }
            let (_, lam) = system_and_weight(
                &WeightArgs { n: *n, lambda: lambda.clone(), kind: Kind::C },
                true,
            )?;
            if *trials == 0 {
                return Err(Failure::usage("--trials must be positive"));
            }
            let report = abl_verify(&lam, *trials, *seed)?;
            Ok(Outcome { text: to_json(&report)?, ok: report.matched })
        }
        Command::Discrepancy { n, d } => {
            if *n > ENUM_LIMIT_N && !g.force {
                return Err(Failure::usage(format!("n = {n} exceeds the soft limit {ENUM_LIMIT_N}; pass --force")));
            }
            let d = if d.is_empty() { (1..=*n).collect() } else { parse_list(d, "--d")? };
            let flag = FlagType::new(*n, d)?;
            let rows = discrepancy_rows(&flag)?;
            let identity_holds = verify_canonical_identity(&flag)?.holds;
            let oracle_agrees = discrepancy_solve(&flag)? == discrepancy_table(&flag)?;
            let ok = identity_holds && oracle_agrees;
            let text = match g.format {
                Format::Json => to_json(&DiscrepancyDoc {
                    n: *n,
                    d: flag.d().to_vec(),
                    rows,
                    identity_holds,
                    oracle_agrees,
                })?,
                Format::Csv => {
                    let header: Vec<String> = ["i", "j", "b", "exceptional"].iter().map(|s| s.to_string()).collect();
                    let rows = rows
                        .iter()
                        .map(|r| vec![r.i.to_string(), r.j.to_string(), r.b.to_string(), r.exceptional.to_string()])
                        .collect();
                    csv_text(&header, rows)?
                }
            };
            Ok(Outcome { text, ok })
        }
        Command::CheckGeometry { n, d, input } => match read_doc(input)? {
            GeometryDoc::Flag(f) => {
                check_flag_args(&f.flag, *n, d)?;
                let grass = f
                    .spaces
                    .iter()
                    .zip(f.flag.d())
                    .map(|(v, &k)| in_sp_grass_a(v, k, f.flag.n()))
                    .collect::<crate::Result<Vec<bool>>>()?;
                let ok = in_sp_flag_a(&f)?;
                Ok(Outcome {
                    text: to_json(&FlagCheckDoc { kind: "flag", grassmannian: grass, in_sp_flag_a: ok })?,
                    ok,
                })
            }
            GeometryDoc::Resolution(p) => {
                check_flag_args(&p.flag, *n, d)?;
                let ok = in_resolution(&p)?;
                let proj = ok && in_sp_flag_a(&project_pi(&p))?;
                Ok(Outcome {
                    text: to_json(&ResolutionCheckDoc {
                        kind: "resolution",
                        in_resolution: ok,
                        projection_in_sp_flag_a: proj,
                    })?,
                    ok: ok && proj,
                })
            }
        },
        Command::Lift { input } => match read_doc(input)? {
            GeometryDoc::Flag(f) => {
                let p = lift(&f)?;
                Ok(Outcome::ok(to_json(&GeometryDoc::Resolution(p))?))
            }
            GeometryDoc::Resolution(_) => Err(Failure::usage("lift expects a document of kind \"flag\"")),
        },
    }
}

/// Parses `args` (including the program name), runs the command and writes the
/// result to `--output` or `out`. Diagnostics go to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let result = match cli.global.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Failure::usage(format!("--threads: {e}"))),
        },
        None => execute(&cli),
    };
    match result {
        Ok(outcome) => {
            let written = match &cli.global.output {
                Some(path) => fs::write(path, &outcome.text),
                None => out.write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if outcome.ok {
                0
            } else {
                let _ = writeln!(err, "verification failed");
                1
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
