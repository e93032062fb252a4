//! Command-line front end. The `simplab` binary is a thin wrapper around
//! [`run`], which takes its arguments and output streams explicitly so the
//! whole interface can be driven in-process.
//!
//! Exit codes: 0 success, 1 a verification claim failed, 2 usage or input
//! error, 3 resource budget exceeded.
//!
//! Settings resolve as flags, then `SIMPLAB_*` environment variables, then
//! the config file (`--config` or `SIMPLAB_CONFIG`), then defaults.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::{FileConfig, Limits, OracleBounds, VerifyBounds};
use crate::containment::verify::{verify_paper, Scope, Status};
use crate::containment::{
    empirical_resurgence_sup, resurgence, resurgence_witness, ContainmentQuery, ContainmentVerdict,
    SupMethod,
};
use crate::error::Error;
use crate::monomial::Monomial;
use crate::simplicial::{
    min_face_sum, ordinary_deficit, ordinary_power_min_gens, simplicial_ideal, symbolic_member,
    symbolic_member_by_subsets, symbolic_power, symbolic_power_oracle, SimplicialSpec,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "simplab",
    version,
    about = "Powers, containments and resurgence of simplicial ideals I(n,c)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SIMPLAB_FORMAT")]
    format: Option<Format>,

    /// Key-value (TOML) configuration file.
    #[arg(long, global = true, env = "SIMPLAB_CONFIG")]
    config: Option<PathBuf>,

    /// Largest exponent box an enumeration may scan.
    #[arg(long, global = true, env = "SIMPLAB_MAX_CANDIDATES")]
    max_candidates: Option<u64>,

    /// Largest number of generator pairs in one product or intersection.
    #[arg(long, global = true, env = "SIMPLAB_MAX_INTERMEDIATE")]
    max_intermediate: Option<usize>,

    /// Largest n the brute-force oracles accept.
    #[arg(long, global = true, env = "SIMPLAB_ORACLE_MAX_N")]
    oracle_max_n: Option<usize>,

    /// Largest symbolic exponent m the oracles accept.
    #[arg(long, global = true, env = "SIMPLAB_ORACLE_MAX_M")]
    oracle_max_m: Option<u32>,

    /// Largest ordinary exponent r the oracles accept.
    #[arg(long, global = true, env = "SIMPLAB_ORACLE_MAX_R")]
    oracle_max_r: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Ambient projective dimension.
    #[arg(long)]
    n: usize,
    /// Codimension of the faces, 1 <= c <= n.
    #[arg(long)]
    c: usize,
}

impl SpecArgs {
    fn spec(&self) -> crate::Result<SimplicialSpec> {
        SimplicialSpec::new(self.n, self.c)
    }
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
struct PowerKind {
    /// Ordinary power I^r.
    #[arg(long, value_name = "R")]
    power: Option<u32>,
    /// Symbolic power I^(m).
    #[arg(long, value_name = "M")]
    symbolic: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List minimal generators of I(n,c), I^r(n,c) or I^(m)(n,c).
    Gens {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        kind: PowerKind,
        /// Compute symbolic powers by intersecting face-prime powers.
        #[arg(long, requires = "symbolic")]
        oracle: bool,
    },
    /// Test whether a monomial lies in I^r(n,c) or I^(m)(n,c).
    Member {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        kind: PowerKind,
        /// Monomial such as "x0^2*x1"; "1" is the unit.
        monomial: String,
        /// Check symbolic membership over every c-subset instead of the sorted prefix.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Decide I^(m)(n,c) ⊆ I^r(n,c).
    Containment {
        #[command(flatten)]
        spec: SpecArgs,
        /// Symbolic exponent.
        #[arg(long)]
        m: u32,
        /// Ordinary exponent.
        #[arg(long)]
        r: u32,
        /// Also run the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide I^(m)(n,c) ⊆ I^(s)(n,d).
    ContainmentSym {
        #[command(flatten)]
        spec: SpecArgs,
        /// Codimension of the target faces.
        #[arg(long)]
        d: usize,
        /// Symbolic exponent of the source.
        #[arg(long)]
        m: u32,
        /// Symbolic exponent of the target.
        #[arg(long)]
        s: u32,
        /// Also run the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Exact resurgence with witness pairs and a box sweep.
    Resurgence {
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of witness pairs (m_k, r_k) to list.
        #[arg(long, default_value_t = 5)]
        witnesses: u32,
        /// Box bounds M R for the empirical supremum.
        #[arg(long = "box", num_args = 2, value_names = ["M", "R"], default_values_t = [12, 12])]
        box_bounds: Vec<u32>,
        /// Decide box cells by brute force instead of the closed-form criterion.
        #[arg(long)]
        oracle: bool,
    },
    /// Check the known identities and containments over bounded ranges.
    Verify {
        #[arg(value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Widen every range.
        #[arg(long)]
        deep: bool,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record per-claim wall time (the report is then run-dependent).
        #[arg(long)]
        timings: bool,
    },
}

/// Fully resolved settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub limits: Limits,
    pub oracle: OracleBounds,
    pub format: Format,
    pub deep: bool,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            limits: Limits::default(),
            oracle: OracleBounds::default(),
            format: Format::Text,
            deep: false,
        }
    }
}

impl CliConfig {
    /// Layers `file` under the explicit settings in `cli`.
    fn resolve(cli: &Cli, file: &FileConfig) -> crate::Result<Self> {
        let d = CliConfig::default();
        let file_format = match file.format.as_deref() {
            None => None,
            Some("text") => Some(Format::Text),
            Some("json") => Some(Format::Json),
            Some(other) => {
                return Err(Error::Parse(format!(
                    "config file: unknown format `{other}`"
                )))
            }
        };
        let cfg = CliConfig {
            limits: Limits {
                max_candidates: cli
                    .max_candidates
                    .or(file.max_candidates)
                    .unwrap_or(d.limits.max_candidates),
                max_intermediate: cli
                    .max_intermediate
                    .or(file.max_intermediate)
                    .unwrap_or(d.limits.max_intermediate),
            },
            oracle: OracleBounds {
                max_n: cli
                    .oracle_max_n
                    .or(file.oracle_max_n)
                    .unwrap_or(d.oracle.max_n),
                max_m: cli
                    .oracle_max_m
                    .or(file.oracle_max_m)
                    .unwrap_or(d.oracle.max_m),
                max_r: cli
                    .oracle_max_r
                    .or(file.oracle_max_r)
                    .unwrap_or(d.oracle.max_r),
            },
            format: cli.format.or(file_format).unwrap_or(d.format),
            deep: file.deep.unwrap_or(d.deep),
        };
        if cfg.limits.max_candidates == 0 || cfg.limits.max_intermediate == 0 {
            return Err(Error::Parameter("budgets must be positive".into()));
        }
        Ok(cfg)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = FileConfig::load_optional(cli.config.as_deref())
        .and_then(|file| CliConfig::resolve(&cli, &file))
        .and_then(|cfg| dispatch(&cli.command, &cfg, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

impl FileConfig {
    fn load_optional(path: Option<&std::path::Path>) -> crate::Result<FileConfig> {
        path.map_or_else(|| Ok(FileConfig::default()), FileConfig::load)
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> crate::Result<()> {
    let s = serde_json::to_string(value).expect("output serializes");
    writeln!(out, "{s}").map_err(io)
}

fn dispatch(cmd: &Command, cfg: &CliConfig, out: &mut dyn Write) -> crate::Result<i32> {
    match cmd {
        Command::Gens { spec, kind, oracle } => cmd_gens(spec.spec()?, kind, *oracle, cfg, out),
        Command::Member {
            spec,
            kind,
            monomial,
            exhaustive,
        } => cmd_member(spec.spec()?, kind, monomial, *exhaustive, cfg, out),
        Command::Containment { spec, m, r, oracle } => {
            let bounds = oracle.then_some((&cfg.oracle, &cfg.limits));
            let v = ContainmentVerdict::ordinary(spec.spec()?, *m, *r, bounds)?;
            print_verdict(&v, cfg, out)
        }
        Command::ContainmentSym {
            spec,
            d,
            m,
            s,
            oracle,
        } => {
            let bounds = oracle.then_some((&cfg.oracle, &cfg.limits));
            let v = ContainmentVerdict::symbolic(spec.n, spec.c, *d, *m, *s, bounds)?;
            print_verdict(&v, cfg, out)
        }
        Command::Resurgence {
            spec,
            witnesses,
            box_bounds,
            oracle,
        } => cmd_resurgence(spec.spec()?, *witnesses, box_bounds, *oracle, cfg, out),
        Command::Verify {
            scope,
            deep,
            report,
            timings,
        } => cmd_verify(
            *scope,
            *deep || cfg.deep,
            report.as_deref(),
            *timings,
            cfg,
            out,
        ),
    }
}

fn cmd_gens(
    spec: SimplicialSpec,
    kind: &PowerKind,
    oracle: bool,
    cfg: &CliConfig,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let ideal = match (kind.power, kind.symbolic) {
        (Some(r), _) => ordinary_power_min_gens(spec, r, &cfg.limits)?,
        (None, Some(m)) if oracle => symbolic_power_oracle(spec, m, &cfg.limits)?,
        (None, Some(m)) => symbolic_power(spec, m, &cfg.limits)?,
        (None, None) => simplicial_ideal(spec),
    };
    match cfg.format {
        Format::Text => write!(out, "{}", ideal.to_text()).map_err(io)?,
        Format::Json => writeln!(out, "{}", ideal.to_json()).map_err(io)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum MemberReport {
    Symbolic {
        member: bool,
        m: u32,
        weakest_face: Vec<usize>,
        face_sum: u64,
    },
    Power {
        member: bool,
        r: u32,
        required_degree: u64,
        deficit: u64,
    },
}

fn cmd_member(
    spec: SimplicialSpec,
    kind: &PowerKind,
    text: &str,
    exhaustive: bool,
    cfg: &CliConfig,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let a = Monomial::parse(text, spec.num_vars())?;
    let report = match (kind.power, kind.symbolic) {
        (Some(r), _) => {
            let deficit = ordinary_deficit(spec, r, &a)?;
            MemberReport::Power {
                member: deficit == 0,
                r,
                required_degree: spec.generator_degree() as u64 * u64::from(r),
                deficit,
            }
        }
        (None, Some(m)) => {
            let member = if exhaustive {
                symbolic_member_by_subsets(spec, m, &a)?
            } else {
                symbolic_member(spec, m, &a)?
            };
            let (weakest_face, face_sum) = min_face_sum(spec, &a)?;
            MemberReport::Symbolic {
                member,
                m,
                weakest_face,
                face_sum,
            }
        }
        (None, None) => {
            return Err(Error::Parameter(
                "member needs --power R or --symbolic M".into(),
            ));
        }
    };
    match cfg.format {
        Format::Json => json_line(out, &report)?,
        Format::Text => match &report {
            MemberReport::Symbolic {
                member,
                m,
                weakest_face,
                face_sum,
            } => {
                let face = weakest_face
                    .iter()
                    .map(|i| format!("x{i}"))
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(out, "{member}").map_err(io)?;
                writeln!(
                    out,
                    "weakest face {{{face}}}: exponent sum {face_sum}, needs {m}"
                )
                .map_err(io)?;
            }
            MemberReport::Power {
                member,
                required_degree,
                deficit,
                ..
            } => {
                writeln!(out, "{member}").map_err(io)?;
                writeln!(
                    out,
                    "capped degree {}, needs {required_degree} (deficit {deficit})",
                    required_degree - deficit
                )
                .map_err(io)?;
            }
        },
    }
    Ok(EXIT_OK)
}

fn describe(q: &ContainmentQuery) -> String {
    match *q {
        ContainmentQuery::Ordinary { n, c, m, r } => format!("I^({m})({n},{c}) ⊆ I^{r}({n},{c})"),
        ContainmentQuery::Symbolic { n, c, d, m, s } => {
            format!("I^({m})({n},{c}) ⊆ I^({s})({n},{d})")
        }
    }
}

fn print_verdict(
    v: &ContainmentVerdict,
    cfg: &CliConfig,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    match cfg.format {
        Format::Json => json_line(out, v)?,
        Format::Text => {
            let opt = |b: Option<bool>| b.map_or_else(|| "not run".to_string(), |b| b.to_string());
            writeln!(out, "query: {}", describe(&v.query)).map_err(io)?;
            writeln!(out, "fast_path: {}", v.fast_path).map_err(io)?;
            writeln!(out, "oracle: {}", opt(v.oracle)).map_err(io)?;
            writeln!(out, "agree: {}", opt(v.agree)).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_resurgence(
    spec: SimplicialSpec,
    witnesses: u32,
    box_bounds: &[u32],
    oracle: bool,
    cfg: &CliConfig,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let (max_m, max_r) = match box_bounds {
        [m, r] if *m >= 1 && *r >= 1 => (*m, *r),
        _ => return Err(Error::Parameter("--box needs two positive bounds".into())),
    };
    let method = if oracle {
        SupMethod::Oracle
    } else {
        SupMethod::Predicate
    };
    let report = crate::containment::ResurgenceReport {
        n: spec.n(),
        c: spec.c(),
        rho: resurgence(spec),
        witnesses: (1..=witnesses)
            .map(|k| resurgence_witness(spec, k))
            .collect::<crate::Result<Vec<_>>>()?,
        box_max_m: max_m,
        box_max_r: max_r,
        empirical_sup: empirical_resurgence_sup(
            spec,
            max_m,
            max_r,
            method,
            &cfg.oracle,
            &cfg.limits,
        )?,
    };
    match cfg.format {
        Format::Json => json_line(out, &report)?,
        Format::Text => {
            writeln!(out, "rho({spec}) = {}", report.rho).map_err(io)?;
            if !report.witnesses.is_empty() {
                writeln!(out, "{:>5} {:>6} {:>6}  m/r", "k", "m", "r").map_err(io)?;
                for w in &report.witnesses {
                    writeln!(out, "{:>5} {:>6} {:>6}  {}", w.k, w.m, w.r, w.ratio).map_err(io)?;
                }
            }
            match report.empirical_sup {
                Some(s) => writeln!(
                    out,
                    "box m <= {max_m}, r <= {max_r}: sup m/r over non-containments = {} at (m, r) = ({}, {})",
                    s.ratio, s.m, s.r
                ),
                None => writeln!(out, "box m <= {max_m}, r <= {max_r}: every pair is a containment"),
            }
            .map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    scope: Scope,
    deep: bool,
    report_path: Option<&std::path::Path>,
    timings: bool,
    cfg: &CliConfig,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let bounds = if deep {
        VerifyBounds::deep(cfg.oracle)
    } else {
        VerifyBounds::standard(cfg.oracle)
    };
    let report = verify_paper(scope, &bounds, &cfg.limits, deep, timings);
    if let Some(path) = report_path {
        std::fs::write(path, report.to_json()).map_err(io)?;
    }
    match (cfg.format, report_path) {
        (Format::Json, None) => write!(out, "{}", report.to_json()).map_err(io)?,
        _ => write!(out, "{}", report.summary_table()).map_err(io)?,
    }
    let code = if report.failed > 0 {
        EXIT_CLAIM_FAILED
    } else if report.claims.iter().any(|c| c.status == Status::Error) {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["simplab"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn resolution_order() {
        let cli = Cli::try_parse_from([
            "simplab",
            "--max-candidates",
            "7",
            "gens",
            "--n",
            "2",
            "--c",
            "2",
        ])
        .unwrap();
        let file =
            FileConfig::parse("max_candidates = 9\nmax_intermediate = 11\nformat = \"json\"")
                .unwrap();
        let cfg = CliConfig::resolve(&cli, &file).unwrap();
        assert_eq!(cfg.limits.max_candidates, 7);
        assert_eq!(cfg.limits.max_intermediate, 11);
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.oracle, OracleBounds::default());
    }

    #[test]
    fn bad_config_values() {
        let cli = Cli::try_parse_from(["simplab", "gens", "--n", "2", "--c", "2"]).unwrap();
        assert!(CliConfig::resolve(&cli, &FileConfig::parse("format = \"xml\"").unwrap()).is_err());
        assert!(
            CliConfig::resolve(&cli, &FileConfig::parse("max_candidates = 0").unwrap()).is_err()
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["gens", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["gens", "--n", "2", "--c", "3"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&[
                "gens",
                "--n",
                "2",
                "--c",
                "2",
                "--power",
                "2",
                "--symbolic",
                "2"
            ])
            .0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["member", "--n", "2", "--c", "2", "x0"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["member", "--n", "2", "--c", "2", "--power", "1", "x5"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("containment-sym"));
    }

    #[test]
    fn resource_errors_exit_3() {
        let (code, _, err) = run_capture(&[
            "--max-candidates",
            "5",
            "gens",
            "--n",
            "2",
            "--c",
            "2",
            "--symbolic",
            "2",
        ]);
        assert_eq!(code, EXIT_RESOURCE);
        assert!(err.contains("budget"));
        let (code, ..) = run_capture(&[
            "containment",
            "--n",
            "5",
            "--c",
            "2",
            "--m",
            "2",
            "--r",
            "2",
            "--oracle",
        ]);
        assert_eq!(code, EXIT_RESOURCE);
    }
}
