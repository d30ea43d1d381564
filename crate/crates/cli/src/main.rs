//! `pathgb`: Gröbner bases over path algebras from the command line.
//!
//! Exit codes: 0 success (or membership), 1 non-membership, 2 usage or input
//! errors, 3 a completion cap was reached.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pathgb_core::dsl::{parse_problem, ProblemFile};
use pathgb_core::groebner::{overlap_witnesses, s_polynomial, OverlapWitness};
use pathgb_core::report::{
    AdmissibilityJson, DivisionReport, GbReport, MembershipReport, OracleReport, OverlapReport,
};
use pathgb_core::{
    admissibility_report, buchberger, ideal_member, membership_oracle, CompletionOptions,
    DivisionOptions, GbResult, GeneratorSet, Limits, OrderKind, PathOrder, Polynomial, Reducer,
    Side,
};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pathgb",
    version,
    about = "Gröbner bases over path algebras of quivers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Problem file in the `.q` format.
    file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Run llex/rlex anyway, with a step cap on every division.
    #[arg(long)]
    allow_unsafe_order: bool,
}

#[derive(Args)]
struct Completion {
    /// Maximum number of completion rounds.
    #[arg(long, default_value_t = 64)]
    max_iter: usize,
    /// Longest leading monomial a new basis element may have.
    #[arg(long, default_value_t = 64)]
    max_len: usize,
    /// Skip plain concatenation overlaps.
    #[arg(long)]
    proper_overlaps: bool,
    /// Never interreduce: make the input monic and append new elements as found.
    #[arg(long)]
    no_initial_reduce: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Complete an ideal to a Gröbner basis.
    Gb {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        completion: Completion,
    },
    /// Normal form of a polynomial modulo a completed ideal.
    Nf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        completion: Completion,
    },
    /// Decide ideal membership; exits 0 for members and 1 otherwise.
    Member {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        completion: Completion,
        /// Also run the brute-force oracle up to this path length.
        #[arg(long)]
        oracle_len: Option<usize>,
    },
    /// Divide a polynomial by a sequence of polynomials.
    Divide {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
        /// Comma-separated divisor names.
        #[arg(long, value_delimiter = ',', required = true)]
        by: Vec<String>,
        #[arg(long, default_value = "twosided")]
        side: Side,
    },
    /// S-polynomials of two polynomials, at every overlap or at one witness.
    Spoly {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "twosided")]
        side: Side,
        #[arg(long)]
        proper_overlaps: bool,
        /// Cofactor of f, as a path such as `y*x` or `[v1]`.
        #[arg(long, requires = "q")]
        p: Option<String>,
        /// Cofactor of g.
        #[arg(long, requires = "p")]
        q: Option<String>,
    },
    /// Overlap witnesses between the leading monomials of two polynomials.
    Overlaps {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "twosided")]
        side: Side,
        #[arg(long)]
        proper_overlaps: bool,
    },
    /// Check the admissibility conditions on all paths up to a length.
    CheckOrder {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        depth: usize,
        /// Order to check instead of the file's.
        #[arg(long)]
        order: Option<OrderKind>,
        /// Report descending chains of at least this many paths.
        #[arg(long, default_value_t = 3)]
        chain: usize,
    },
}

struct Outcome {
    text: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load(common: &Common) -> anyhow::Result<ProblemFile> {
    let text = fs::read_to_string(&common.file)
        .with_context(|| format!("reading {}", common.file.display()))?;
    parse_problem(&text).map_err(|e| anyhow!("{}: {e}", common.file.display()))
}

fn poly<'a>(file: &'a ProblemFile, name: &str) -> anyhow::Result<&'a Polynomial> {
    file.poly(name)
        .ok_or_else(|| anyhow!("unknown polynomial `{name}`"))
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
        Format::Text => Ok(text()),
    }
}

fn division_options(common: &Common) -> DivisionOptions {
    DivisionOptions {
        allow_unsafe_order: common.allow_unsafe_order,
        ..DivisionOptions::default()
    }
}

fn complete(
    file: &ProblemFile,
    common: &Common,
    ideal: &str,
    c: &Completion,
) -> anyhow::Result<GbResult> {
    let decl = file
        .ideal(ideal)
        .ok_or_else(|| anyhow!("unknown ideal `{ideal}`"))?;
    let options = CompletionOptions {
        limits: Limits {
            max_iterations: c.max_iter,
            max_path_length: c.max_len,
        },
        proper_overlaps: c.proper_overlaps,
        interreduce: !c.no_initial_reduce,
        division: division_options(common),
    };
    let gens = GeneratorSet::new(decl.generators.clone(), decl.side);
    Ok(buchberger(&gens, &file.order, &options)?)
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Gb {
            common,
            ideal,
            completion,
        } => {
            let file = load(&common)?;
            let res = complete(&file, &common, &ideal, &completion)?;
            let report = GbReport::new(&file.quiver, &res);
            let text = emit(common.format, &report, || gb_text(&report))?;
            let code = if res.is_completed() { 0 } else { EXIT_CAP };
            Ok(Outcome { text, code })
        }
        Command::Nf {
            common,
            poly: name,
            ideal,
            completion,
        } => {
            let file = load(&common)?;
            let f = poly(&file, &name)?;
            let res = complete(&file, &common, &ideal, &completion)?;
            let reducer =
                Reducer::new(file.order, res.side).with_options(division_options(&common));
            let nf = reducer.reduce_total(f, &res.basis)?;
            #[derive(Serialize)]
            struct Nf {
                poly: String,
                normal_form: String,
                completed: bool,
            }
            let report = Nf {
                poly: file.format(f),
                normal_form: file.format(&nf),
                completed: res.is_completed(),
            };
            let text = emit(common.format, &report, || {
                format!("{}\n", report.normal_form)
            })?;
            let code = if res.is_completed() { 0 } else { EXIT_CAP };
            Ok(Outcome { text, code })
        }
        Command::Member {
            common,
            poly: name,
            ideal,
            completion,
            oracle_len,
        } => {
            let file = load(&common)?;
            let f = poly(&file, &name)?;
            let res = complete(&file, &common, &ideal, &completion)?;
            let m = ideal_member(f, &res.basis, &file.order, res.side)?;
            let reducer =
                Reducer::new(file.order, res.side).with_options(division_options(&common));
            let nf = reducer.reduce_total(f, &res.basis)?;
            let oracle = oracle_len.map(|len| {
                let decl = file.ideal(&ideal).expect("resolved by complete");
                OracleReport::new(&membership_oracle(
                    &file.quiver,
                    f,
                    &decl.generators,
                    decl.side,
                    len,
                ))
            });
            #[derive(Serialize)]
            struct Member {
                poly: String,
                completed: bool,
                #[serde(flatten)]
                membership: MembershipReport,
                oracle: Option<OracleReport>,
            }
            let report = Member {
                poly: file.format(f),
                completed: res.is_completed(),
                membership: MembershipReport::new(&file.quiver, &file.order, &m, &nf),
                oracle,
            };
            let text = emit(common.format, &report, || {
                let mut s = format!(
                    "{}: {}\nnormal form: {}\n",
                    report.poly,
                    if m.member { "member" } else { "not a member" },
                    report.membership.normal_form
                );
                if m.heuristic {
                    s.push_str("warning: basis is not certified; the verdict is heuristic\n");
                }
                if let Some(o) = &report.oracle {
                    s.push_str(&format!("oracle: {}\n", o.verdict));
                }
                s
            })?;
            let code = match (m.member, res.is_completed()) {
                (true, _) => 0,
                (false, true) => EXIT_FALSE,
                (false, false) => EXIT_CAP,
            };
            Ok(Outcome { text, code })
        }
        Command::Divide {
            common,
            poly: name,
            by,
            side,
        } => {
            let file = load(&common)?;
            let f = poly(&file, &name)?;
            let divisors = by
                .iter()
                .map(|n| poly(&file, n).cloned())
                .collect::<anyhow::Result<Vec<_>>>()?;
            let reducer = Reducer::new(file.order, side).with_options(division_options(&common));
            let rep = reducer.divide(f, &divisors)?;
            let report = DivisionReport::new(&file.quiver, &file.order, &rep);
            let text = emit(common.format, &report, || division_text(&report, &by))?;
            Ok(Outcome { text, code: 0 })
        }
        Command::Spoly {
            common,
            f,
            g,
            side,
            proper_overlaps,
            p,
            q,
        } => {
            let file = load(&common)?;
            let (pf, pg) = (poly(&file, &f)?, poly(&file, &g)?);
            let witnesses = match (p, q) {
                (Some(p), Some(q)) => vec![OverlapWitness {
                    kind: side,
                    f_cofactor: parse_path(&file, &p)?,
                    g_cofactor: parse_path(&file, &q)?,
                }],
                _ => {
                    let lf = pf.leading_monomial(&file.order)?;
                    let lg = pg.leading_monomial(&file.order)?;
                    overlap_witnesses(&lf, &lg, side, proper_overlaps)
                }
            };
            let mut reports = Vec::new();
            for w in &witnesses {
                let s = s_polynomial(pf, pg, w, &file.order)?;
                reports.push(OverlapReport::new(&file.quiver, &file.order, w, &s));
            }
            let text = emit(common.format, &reports, || {
                reports
                    .iter()
                    .map(|r| format!("S({f}, {g}, {}, {}) = {}\n", r.p, r.q, r.s_polynomial))
                    .collect()
            })?;
            Ok(Outcome { text, code: 0 })
        }
        Command::Overlaps {
            common,
            f,
            g,
            side,
            proper_overlaps,
        } => {
            let file = load(&common)?;
            let lf = poly(&file, &f)?.leading_monomial(&file.order)?;
            let lg = poly(&file, &g)?.leading_monomial(&file.order)?;
            #[derive(Serialize)]
            struct Witness {
                kind: Side,
                p: String,
                q: String,
            }
            let list: Vec<Witness> = overlap_witnesses(&lf, &lg, side, proper_overlaps)
                .iter()
                .map(|w| Witness {
                    kind: w.kind,
                    p: file.quiver.format_path(&w.f_cofactor),
                    q: file.quiver.format_path(&w.g_cofactor),
                })
                .collect();
            let text = emit(common.format, &list, || {
                list.iter()
                    .map(|w| format!("p = {}, q = {}\n", w.p, w.q))
                    .collect()
            })?;
            Ok(Outcome { text, code: 0 })
        }
        Command::CheckOrder {
            common,
            depth,
            order,
            chain,
        } => {
            let file = load(&common)?;
            let order = order.map(PathOrder::new).unwrap_or(file.order);
            let sample = file.quiver.paths_up_to(depth);
            let r = admissibility_report(&order, &sample, chain);
            let report = AdmissibilityJson::new(&file.quiver, &order, sample.len(), &r);
            let text = emit(common.format, &report, || order_text(&report))?;
            Ok(Outcome { text, code: 0 })
        }
    }
}

fn parse_path(file: &ProblemFile, text: &str) -> anyhow::Result<pathgb_core::Path> {
    let p = file
        .parse_expr(text)
        .map_err(|e| anyhow!("path `{text}`: {e}"))?;
    match p.iter().collect::<Vec<_>>().as_slice() {
        [(path, c)] if **c == pathgb_core::scalar(1) => Ok((*path).clone()),
        _ => bail!("`{text}` is not a single path"),
    }
}

fn gb_text(r: &GbReport) -> String {
    let mut s = match r.status {
        "completed" => format!("completed after {} iteration(s)\n", r.iterations),
        _ => format!(
            "cap reached after {} iteration(s), {} pending\n",
            r.iterations, r.pending
        ),
    };
    s.push_str("basis:\n");
    for f in &r.basis {
        s.push_str(&format!("  {f}\n"));
    }
    if !r.trace.is_empty() {
        s.push_str("trace:\n");
        for t in &r.trace {
            s.push_str(&format!(
                "  [{}] S({}, {}, {}, {}) -> {}\n",
                t.iteration, t.i, t.j, t.p, t.q, t.added
            ));
        }
    }
    s
}

fn division_text(r: &DivisionReport, names: &[String]) -> String {
    let mut s = String::new();
    for q in &r.quotients {
        for t in &q.terms {
            s.push_str(&format!(
                "{} * ({}) {} ({})\n",
                t.coeff, t.w, names[q.divisor], t.z
            ));
        }
    }
    s.push_str(&format!("remainder: {}\n", r.remainder));
    s
}

fn order_text(r: &AdmissibilityJson) -> String {
    let mut s = format!(
        "{} on {} paths: {}\n",
        r.order,
        r.sample_size,
        if r.clean {
            "admissible on the sample"
        } else {
            "violations found"
        }
    );
    s.push_str(&format!(
        "totality {}, right-compatible {}, left-compatible {}, factor {}\n",
        r.totality, r.right_compatible, r.left_compatible, r.factor
    ));
    if let Some(chain) = &r.descending_chain {
        s.push_str(&format!("descending chain: {}\n", chain.join(" > ")));
    }
    s
}
