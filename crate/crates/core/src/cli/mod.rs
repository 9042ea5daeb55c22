//! The `sfdepth` command line.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or input error,
//! 3 capability bound or search budget exhausted.

pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::family::{self, FamilyKind};
use crate::homology::{hochster_betti, FieldSpec, HOCHSTER_MAX_VARS, KOSZUL_MAX_VARS};
use crate::ideal::Ideal;
use crate::poset::{Poset, POSET_MAX_VARS};
use crate::sdepth::{
    sdepth_upper_bound_mu, sdepth_with, validate_partition, IntervalPartition, MuBound, SdepthOutcome, SearchConfig,
    SearchMode, SDEPTH_MAX_VARS,
};
use crate::verify::{self, ENUMERATE_MAX_VARS};

pub use report::{Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sfdepth", version, about = "Depth and Stanley depth of square-free monomial ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Coefficient field: 0 (rationals) or a prime p.
    #[arg(long, default_value = "2", global = true)]
    pub field: FieldSpec,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
#[group(required = true, multiple = false)]
pub struct IdealSource {
    /// Inline ideal, e.g. "n=3 {1,2} {2,3}".
    #[arg(long)]
    pub ideal: Option<String>,
    /// File containing an ideal in the text format.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Named fixture: example1 or example2.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Cyclic family member, e.g. L:5 or I:4.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// depth_S I via Hochster's formula.
    Depth(IdealSource),
    /// Stanley depth by exhaustive interval-partition search.
    Sdepth {
        #[command(flatten)]
        source: IdealSource,
        /// Abort after this many interval placements and report "unknown".
        #[arg(long)]
        budget: Option<u64>,
        /// Allow interval tops of every degree >= d instead of exactly d.
        #[arg(long)]
        full: bool,
    },
    /// Number of degree-d square-free monomials in I.
    Rho {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        source: IdealSource,
    },
    /// All square-free monomials of I.
    Poset(IdealSource),
    /// Validate an interval partition file against P_I.
    CheckPartition {
        partition: PathBuf,
        #[command(flatten)]
        source: IdealSource,
    },
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Probe(ProbeCommand),
    /// Print a cyclic family ideal.
    Family {
        #[arg(long)]
        kind: FamilyKind,
        #[arg(long)]
        n: usize,
    },
    /// List every ideal in n variables with generators of degree >= min-degree.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        min_degree: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Exhaustive threshold check over all ideals with n <= max-n.
    Prop1 {
        #[arg(long)]
        max_n: usize,
    },
    /// sdepth >= depth, exhaustively for all n' <= n or on samples at n.
    Stanley {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Depths of L_n and I_n for 3 <= n <= max-n.
    Lemma5 {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ProbeCommand {
    /// Compare ((n-d)/(n-d+1)) C(n,d) with C(n,d+1).
    RemarkSt {
        #[arg(long)]
        max_n: usize,
    },
}

/// Result of one invocation: the exit status and what to print on stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            Outcome { status, stdout: e.render().to_string() }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let (status, report) = match dispatch(cli) {
        Ok(pair) => pair,
        Err(e) => {
            let mut r = Report::new(command_name(&cli.command));
            r.push("field", cli.field.to_string());
            r.push("error", e.to_string());
            (exit_code(&e), r)
        }
    };
    let mut report = report;
    report.push("status", status);
    let stdout = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json()).unwrap()),
    };
    Outcome { status, stdout }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capability { .. } => EXIT_CAPABILITY,
        Error::Verification(_) | Error::Partition { .. } => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Depth(_) => "depth",
        Command::Sdepth { .. } => "sdepth",
        Command::Rho { .. } => "rho",
        Command::Poset(_) => "poset",
        Command::CheckPartition { .. } => "check-partition",
        Command::Verify(VerifyCommand::Prop1 { .. }) => "verify prop1",
        Command::Verify(VerifyCommand::Stanley { .. }) => "verify stanley",
        Command::Verify(VerifyCommand::Lemma5 { .. }) => "verify lemma5",
        Command::Probe(ProbeCommand::RemarkSt { .. }) => "probe remark-st",
        Command::Family { .. } => "family",
        Command::Enumerate { .. } => "enumerate",
    }
}

struct Loaded {
    ideal: Ideal,
    source: String,
    normalization: String,
}

fn load(src: &IdealSource) -> crate::Result<Loaded> {
    if let Some(text) = &src.ideal {
        return parsed(text, "inline".into());
    }
    if let Some(path) = &src.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
        return parsed(&text, format!("file {}", path.display()));
    }
    if let Some(name) = &src.fixture {
        let ideal = family::fixture(name)?;
        return Ok(Loaded {
            ideal,
            source: format!("fixture {name}"),
            normalization: "generators already minimal".into(),
        });
    }
    if let Some(spec) = &src.family {
        let ideal = family::parse_family_spec(spec)?;
        return Ok(Loaded {
            ideal,
            source: format!("family {spec}"),
            normalization: "generators already minimal".into(),
        });
    }
    Err(Error::Argument("no ideal source given".into()))
}

fn parsed(text: &str, source: String) -> crate::Result<Loaded> {
    let p = Ideal::parse_text(text)?;
    let normalization = if p.was_minimal {
        "generators already minimal".to_string()
    } else {
        "input normalized to minimal generators".to_string()
    };
    Ok(Loaded { ideal: p.ideal, source, normalization })
}

fn bounds() -> serde_json::Value {
    json!({
        "poset_max_n": POSET_MAX_VARS,
        "hochster_max_n": HOCHSTER_MAX_VARS,
        "koszul_max_n": KOSZUL_MAX_VARS,
        "sdepth_max_n": SDEPTH_MAX_VARS,
        "enumerate_max_n": ENUMERATE_MAX_VARS,
    })
}

fn provenance(r: &mut Report, field: FieldSpec, loaded: Option<&Loaded>) {
    if let Some(l) = loaded {
        r.push("source", &l.source);
        r.push("ideal", &l.ideal);
        r.push("n", l.ideal.n());
        r.push("mu", l.ideal.mu());
        r.push("normalization", &l.normalization);
    }
    r.push("field", field.to_string());
    r.push("bounds", bounds());
}

fn dispatch(cli: &Cli) -> crate::Result<(i32, Report)> {
    let field = cli.field;
    let mut r = Report::new(command_name(&cli.command));
    let status = match &cli.command {
        Command::Depth(src) => {
            let l = load(src)?;
            provenance(&mut r, field, Some(&l));
            let table = hochster_betti(&l.ideal, field)?;
            let depth = table.depth().expect("nonzero ideal");
            r.push("depth", depth);
            r.push("depth_quotient", depth - 1);
            r.push("projdim", table.projdim());
            r.push("betti_totals", table.totals());
            EXIT_OK
        }
        Command::Sdepth { source, budget, full } => {
            let l = load(source)?;
            provenance(&mut r, field, Some(&l));
            let config = SearchConfig {
                mode: if *full { SearchMode::Full } else { SearchMode::Truncated },
                node_budget: *budget,
            };
            r.push("search_mode", if *full { "full" } else { "truncated" });
            r.push("node_budget", budget);
            if let MuBound::Equals(d) = sdepth_upper_bound_mu(&l.ideal) {
                r.push("mu_bound", d);
            }
            match sdepth_with(&l.ideal, config)? {
                SdepthOutcome::Exact { value, witness } => {
                    r.push("sdepth", value);
                    r.push("partition", interval_lines(&witness));
                    EXIT_OK
                }
                SdepthOutcome::Unknown { at_least, undecided, .. } => {
                    r.push("sdepth", "unknown");
                    r.push("sdepth_at_least", at_least);
                    r.push("undecided_d", undecided);
                    EXIT_CAPABILITY
                }
            }
        }
        Command::Rho { d, source } => {
            let l = load(source)?;
            provenance(&mut r, field, Some(&l));
            r.push("d", d);
            r.push("rho", l.ideal.rho(*d)?);
            EXIT_OK
        }
        Command::Poset(src) => {
            let l = load(src)?;
            provenance(&mut r, field, Some(&l));
            let p = Poset::of(&l.ideal)?;
            r.push("size", p.len());
            r.push("degree_profile", p.degree_profile());
            r.push("elements", p.elements().iter().map(|m| m.to_string()).collect::<Vec<_>>());
            EXIT_OK
        }
        Command::CheckPartition { partition, source } => {
            let l = load(source)?;
            provenance(&mut r, field, Some(&l));
            let text = std::fs::read_to_string(partition)
                .map_err(|e| Error::Argument(format!("cannot read {}: {e}", partition.display())))?;
            let part = IntervalPartition::parse_text(&text)?;
            let poset = Poset::of(&l.ideal)?;
            r.push("intervals", part.len());
            match validate_partition(&poset, &part) {
                Ok(value) => {
                    r.push("valid", true);
                    r.push("partition_sdepth", value);
                    EXIT_OK
                }
                Err(Error::Partition { reason, witness }) => {
                    r.push("valid", false);
                    r.push("reason", reason);
                    r.push("witness", witness.to_string());
                    EXIT_VERIFICATION
                }
                Err(e) => return Err(e),
            }
        }
        Command::Verify(VerifyCommand::Prop1 { max_n }) => {
            provenance(&mut r, field, None);
            let s = verify::prop1_sweep(*max_n, field)?;
            r.push("max_n", max_n);
            r.push(
                "ideals_per_n",
                s.ideals_per_n.iter().map(|&(n, c)| json!({"n": n, "ideals": c})).collect::<Vec<_>>(),
            );
            r.push("ideals", s.ideals());
            r.push("checks", s.checks);
            r.push("triggered", s.triggered);
            r.push("inconsistencies", s.inconsistencies.len());
            r.push("lower_bound_violations", s.lower_bound_violations.len());
            if let Some(w) = s.inconsistencies.first() {
                r.push("witness", w);
            } else if let Some(w) = s.lower_bound_violations.first() {
                r.push("witness", w);
            }
            if s.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            }
        }
        Command::Verify(VerifyCommand::Stanley { n, samples, seed }) => {
            provenance(&mut r, field, None);
            let ideals = match samples {
                Some(count) => {
                    r.push("mode", "sampled");
                    r.push("seed", seed);
                    verify::sample_ideals(*n, *count, *seed, 1)?
                }
                None => {
                    r.push("mode", "exhaustive");
                    (1..=*n).map(|k| verify::enumerate_ideals(k, 1)).collect::<crate::Result<Vec<_>>>()?.concat()
                }
            };
            r.push("n", n);
            let s = verify::stanley_sweep(&ideals, field, SearchConfig::default())?;
            r.push("checked", s.checked);
            r.push("counterexamples", s.counterexamples.len());
            r.push("unknown", s.unknown.len());
            r.push("mu_bound_applied", s.mu_bound_applied);
            r.push("mu_bound_violations", s.mu_bound_violations.len());
            if let Some(w) = s.counterexamples.first().or(s.mu_bound_violations.first()).or(s.unknown.first()) {
                r.push("witness", w);
            }
            if s.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            }
        }
        Command::Verify(VerifyCommand::Lemma5 { max_n }) => {
            provenance(&mut r, field, None);
            let rep = verify::lemma5_check(*max_n, field)?;
            r.push("rows", &rep.rows);
            r.push("passed", rep.passed());
            if let Err(e) = rep.ensure() {
                r.push("failure", e.to_string());
                EXIT_VERIFICATION
            } else {
                EXIT_OK
            }
        }
        Command::Probe(ProbeCommand::RemarkSt { max_n }) => {
            provenance(&mut r, field, None);
            if *max_n < 2 || *max_n > 64 {
                return Err(Error::Argument(format!("--max-n must be in 2..=64, got {max_n}")));
            }
            let rows = verify::remark_st_threshold_probe(*max_n);
            r.push("rows", &rows);
            r.push("holds", rows.iter().filter(|c| c.holds).count());
            r.push("fails", rows.iter().filter(|c| !c.holds).count());
            r.push("equalities", rows.iter().filter(|c| c.equal).count());
            r.push("boundary_2d_ge_n_exact", rows.iter().all(|c| c.holds == c.predicted));
            EXIT_OK
        }
        Command::Family { kind, n } => {
            let ideal = kind.build(*n)?;
            r.push("kind", format!("{kind:?}"));
            r.push("ideal", &ideal);
            r.push("n", ideal.n());
            r.push("mu", ideal.mu());
            r.push("degree", ideal.equigenerated_degree());
            provenance(&mut r, field, None);
            EXIT_OK
        }
        Command::Enumerate { n, min_degree } => {
            provenance(&mut r, field, None);
            let ideals = verify::enumerate_ideals(*n, *min_degree)?;
            r.push("n", n);
            r.push("min_degree", min_degree);
            r.push("count", ideals.len());
            r.push("ideals", &ideals);
            EXIT_OK
        }
    };
    Ok((status, r))
}

fn interval_lines(p: &IntervalPartition) -> Vec<String> {
    p.intervals().iter().map(|iv| iv.to_string()).collect()
}
