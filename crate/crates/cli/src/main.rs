//! Command-line front end for the crossnest library.
//!
//! Exit codes: 0 on success, 1 when an internal cross-check fails, 2 on a
//! usage error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crossnest::charlier::{phi_l_inv, phi_r_inv, shape};
use crossnest::genfun;
use crossnest::group_seq::GroupVec;
use crossnest::partition::{enumerate_partitions, enumerate_partitions_k, VertexRole};
use crossnest::similarity::{self, Stat};
use crossnest::tree;
use crossnest::verify::{self, CellStatus, ClassTable, Suite};
use crossnest::{BigSeries, SetPartition};

#[derive(Parser, Debug)]
#[command(name = "crossnest", version, about = "Crossings and nestings of set partitions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Cr,
    Ne,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Stat {
        match s {
            StatArg::Cr => Stat::Cr,
            StatArg::Ne => Stat::Ne,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Formula,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Theorem,
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Fraction {
    V1,
    V2,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of [n] in restricted-growth order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only partitions with this many blocks.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Arcs, vertex roles and statistics of one partition.
    Stats {
        #[arg(long, value_parser = parse_pi)]
        pi: SetPartition,
    },
    /// Distribution of (cr, ne) over a level of the partition tree.
    TreeDist {
        #[arg(long, value_parser = parse_pi)]
        root: SetPartition,
        #[arg(long)]
        level: usize,
        /// Restrict to descendants with this many blocks.
        #[arg(long)]
        blocks: Option<usize>,
    },
    /// Number of crossing- or nesting-similarity classes of partitions of [n] with k blocks.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Coefficients of the crossing/nesting generating function.
    Gf {
        /// Root of the subtree.
        #[arg(long, value_parser = parse_pi, conflicts_with = "all", required_unless_present = "all")]
        pi: Option<SetPartition>,
        /// Sum over all partitions instead of a subtree.
        #[arg(long)]
        all: bool,
        /// Truncation order in z.
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Route::Both, conflicts_with = "all")]
        route: Route,
        #[arg(long, value_enum, default_value_t = Fraction::Both, requires = "all")]
        fraction: Fraction,
    },
    /// Run verification suites (all of them when none is named).
    Verify {
        #[arg(value_parser = parse_suite, conflicts_with = "suite")]
        name: Option<Suite>,
        #[arg(long, value_parser = parse_suite)]
        suite: Option<Suite>,
    },
    /// Recompute the printed class-count tables for n <= 6.
    Tables,
}

fn parse_pi(s: &str) -> Result<SetPartition, String> {
    s.parse().map_err(|e: crossnest::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: crossnest::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Check(String),
}

/// Rendered output plus the outcome of any cross-check.
type Rendered = (String, Result<(), Failure>);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Writes the rendering into `out` even when a check fails, so the failing
/// instance is visible.
fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let fmt = cli.format;
    let (text, status) = match &cli.command {
        Command::Enumerate { n, k } => (enumerate(*n, *k, fmt), Ok(())),
        Command::Stats { pi } => (stats(pi, fmt), Ok(())),
        Command::TreeDist { root, level, blocks } => (tree_dist(root, *level, *blocks, fmt), Ok(())),
        Command::Classes { n, k, stat, method } => classes(*n, *k, (*stat).into(), *method, fmt)?,
        Command::Gf {
            pi,
            all,
            order,
            route,
            fraction,
        } => {
            if *all {
                gf_all(*order, *fraction, fmt)?
            } else {
                let pi = pi.as_ref().expect("clap requires --pi without --all");
                gf_pi(pi, *order, *route, fmt)?
            }
        }
        Command::Verify { name, suite } => {
            let suites = match name.or(*suite) {
                Some(s) => vec![s],
                None => Suite::ALL.to_vec(),
            };
            verify_suites(&suites, fmt)
        }
        Command::Tables => tables(fmt),
    };
    out.push_str(&text);
    status
}

fn json_line(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn enumerate(n: usize, k: Option<usize>, fmt: Format) -> String {
    let parts: Vec<SetPartition> = match k {
        Some(k) => enumerate_partitions_k(n, k).collect(),
        None => enumerate_partitions(n).collect(),
    };
    match fmt {
        Format::Tsv => parts.iter().map(|p| format!("{p}\n")).collect(),
        Format::Json => json_line(Value::Array(parts.iter().map(SetPartition::to_json).collect())),
    }
}

fn role_name(r: VertexRole) -> &'static str {
    match r {
        VertexRole::Opener => "opener",
        VertexRole::Closer => "closer",
        VertexRole::Singleton => "singleton",
        VertexRole::Transient => "transient",
    }
}

fn stats(pi: &SetPartition, fmt: Format) -> String {
    let (cr, ne, al) = pi.pair_stats();
    let arcs: Vec<(usize, usize)> = pi.arcs().iter().map(|a| (a.i, a.j)).collect();
    let roles: Vec<&str> = pi.vertex_roles().into_iter().map(role_name).collect();
    let seqs = similarity::crseq(pi).ok().zip(similarity::neseq(pi).ok());
    let path = shape(pi).to_string();
    let xi_r = phi_r_inv(pi).xi().to_vec();
    let xi_l = phi_l_inv(pi).xi().to_vec();
    match fmt {
        Format::Json => json_line(json!({
            "partition": pi.canonical_string(),
            "n": pi.n(),
            "k": pi.k(),
            "cr": cr,
            "ne": ne,
            "al": al,
            "arcs": arcs,
            "roles": roles,
            "crseq": seqs.as_ref().map(|s| &s.0),
            "neseq": seqs.as_ref().map(|s| &s.1),
            "path": path,
            "xi_r": xi_r,
            "xi_l": xi_l,
        })),
        Format::Tsv => {
            let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let mut s = String::new();
            let _ = writeln!(s, "partition\t{pi}");
            let _ = writeln!(s, "n\t{}", pi.n());
            let _ = writeln!(s, "k\t{}", pi.k());
            let _ = writeln!(s, "cr\t{cr}");
            let _ = writeln!(s, "ne\t{ne}");
            let _ = writeln!(s, "al\t{al}");
            let arcs_txt: Vec<String> = arcs.iter().map(|(i, j)| format!("{i}-{j}")).collect();
            let _ = writeln!(s, "arcs\t{}", arcs_txt.join(","));
            let _ = writeln!(s, "roles\t{}", roles.join(","));
            if let Some((u, v)) = &seqs {
                let _ = writeln!(s, "crseq\t{}", join(u));
                let _ = writeln!(s, "neseq\t{}", join(v));
            }
            let _ = writeln!(s, "path\t{path}");
            let _ = writeln!(s, "xi_r\t{}", join(&xi_r));
            let _ = writeln!(s, "xi_l\t{}", join(&xi_l));
            s
        }
    }
}

fn tree_dist(root: &SetPartition, level: usize, blocks: Option<usize>, fmt: Format) -> String {
    let dist = tree::cr_ne_distribution(root, level, blocks);
    match fmt {
        Format::Tsv => dist
            .iter()
            .map(|(g, m)| format!("{}\t{}\t{m}\n", g.a, g.b))
            .collect(),
        Format::Json => json_line(json!({
            "root": root.canonical_string(),
            "level": level,
            "blocks": blocks,
            "distribution": dist
                .iter()
                .map(|(g, m): (&GroupVec, &usize)| json!({"cr": g.a, "ne": g.b, "mult": m}))
                .collect::<Vec<_>>(),
        })),
    }
}

fn classes(n: usize, k: usize, stat: Stat, method: Method, fmt: Format) -> Result<Rendered, Failure> {
    if k == 0 || k > n {
        return Err(Failure::Usage(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let brute = matches!(method, Method::Brute | Method::Both)
        .then(|| BigInt::from(similarity::count_classes_brute(n, k, stat)));
    let formula = matches!(method, Method::Formula | Method::Both).then(|| match stat {
        Stat::Cr => similarity::count_cr_formula::<BigInt>(n, k),
        Stat::Ne => similarity::count_ne_recurrence::<BigInt>(n, k),
    });
    let status = match (&brute, &formula) {
        (Some(b), Some(f)) if b != f => Err(Failure::Check(format!(
            "{stat} classes at n = {n}, k = {k}: formula {f}, enumeration {b}"
        ))),
        _ => Ok(()),
    };
    let text = match fmt {
        Format::Tsv => {
            let mut s = String::new();
            if let Some(b) = &brute {
                let _ = writeln!(s, "{n}\t{k}\t{stat}\tbrute\t{b}");
            }
            if let Some(f) = &formula {
                let _ = writeln!(s, "{n}\t{k}\t{stat}\tformula\t{f}");
            }
            s
        }
        Format::Json => json_line(json!({
            "n": n,
            "k": k,
            "stat": stat.to_string(),
            "brute": brute.as_ref().map(big_json),
            "formula": formula.as_ref().map(big_json),
        })),
    };
    Ok((text, status))
}

fn big_json(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn render_series(series: &BigSeries, fmt: Format) -> String {
    let terms = series.coeffs().iter().enumerate().flat_map(|(l, poly)| {
        poly.terms()
            .map(move |((dq, dp), c)| (l, dq, dp, c.clone()))
            .collect::<Vec<_>>()
    });
    match fmt {
        Format::Tsv => terms
            .map(|(l, dq, dp, c)| format!("{l}\t{dq}\t{dp}\t{c}\n"))
            .collect(),
        Format::Json => json_line(json!({
            "order": series.order(),
            "terms": terms
                .map(|(l, dq, dp, c)| json!({"l": l, "deg_q": dq, "deg_p": dp, "coeff": big_json(&c)}))
                .collect::<Vec<_>>(),
        })),
    }
}

fn gf_pi(pi: &SetPartition, order: usize, route: Route, fmt: Format) -> Result<Rendered, Failure> {
    if pi.k() == 0 {
        return Err(Failure::Usage("the root must have at least one block".into()));
    }
    let theorem = || genfun::s_pi_theorem::<BigInt>(pi, order).map_err(|e| Failure::Check(e.to_string()));
    let (series, status) = match route {
        Route::Theorem => (theorem()?, Ok(())),
        Route::Brute => (genfun::s_pi_brute::<BigInt>(pi, order), Ok(())),
        Route::Both => {
            let brute = genfun::s_pi_brute::<BigInt>(pi, order);
            let status = if theorem()? == brute {
                Ok(())
            } else {
                Err(Failure::Check(format!("theorem and enumeration differ for {pi} at order {order}")))
            };
            (brute, status)
        }
    };
    Ok((render_series(&series, fmt), status))
}

fn gf_all(order: usize, fraction: Fraction, fmt: Format) -> Result<Rendered, Failure> {
    let err = |e: crossnest::Error| Failure::Check(e.to_string());
    let (series, status) = match fraction {
        Fraction::V1 => (genfun::fraction_allpartitions_v1::<BigInt>(order).map_err(err)?, Ok(())),
        Fraction::V2 => (genfun::fraction_allpartitions_v2::<BigInt>(order).map_err(err)?, Ok(())),
        Fraction::Both => {
            let v1 = genfun::fraction_allpartitions_v1::<BigInt>(order).map_err(err)?;
            let v2 = genfun::fraction_allpartitions_v2::<BigInt>(order).map_err(err)?;
            let status = if v1 == v2 {
                Ok(())
            } else {
                Err(Failure::Check(format!("the two fractions differ at order {order}")))
            };
            (v2, status)
        }
    };
    Ok((render_series(&series, fmt), status))
}

fn verify_suites(suites: &[Suite], fmt: Format) -> Rendered {
    let reports: Vec<verify::Report> = suites.iter().map(|&s| verify::run(s)).collect();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| !c.passed)
                .map(move |c| format!("{}: {} ({})", r.suite, c.label, c.detail))
        })
        .collect();
    let text = match fmt {
        Format::Json => json_line(serde_json::to_value(&reports).expect("serializable")),
        Format::Tsv => {
            let mut s = String::new();
            for r in &reports {
                for c in &r.checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{}\t{tag}\t{}\t{}", r.suite, c.label, c.detail);
                }
            }
            s
        }
    };
    let status = if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(failed.join("; ")))
    };
    (text, status)
}

fn table_text(table: &ClassTable) -> String {
    let mut s = String::new();
    let title = match table.stat {
        Stat::Cr => "crossing-similarity classes",
        Stat::Ne => "nesting-similarity classes",
    };
    let width = table.cells.iter().map(|c| c.k).max().unwrap_or(0);
    let _ = writeln!(s, "# {title}");
    let header: Vec<String> = (1..=width).map(|k| k.to_string()).collect();
    let _ = writeln!(s, "n\\k\t{}", header.join("\t"));
    let max_n = table.cells.iter().map(|c| c.n).max().unwrap_or(0);
    for n in 1..=max_n {
        let row: Vec<String> = table.row(n).iter().map(|c| c.printed.to_string()).collect();
        let _ = writeln!(s, "{n}\t{}", row.join("\t"));
    }
    for c in table.cells.iter().filter(|c| c.status != CellStatus::Match) {
        let what = match c.status {
            CellStatus::KnownAnomaly => "known anomaly",
            _ => "mismatch",
        };
        let _ = writeln!(
            s,
            "# ({},{}): printed {}, enumeration {}, formula {} [{what}]",
            c.n, c.k, c.printed, c.computed, c.formula
        );
    }
    s
}

fn tables(fmt: Format) -> Rendered {
    let tables = [verify::class_table(Stat::Cr), verify::class_table(Stat::Ne)];
    let text = match fmt {
        Format::Json => json_line(serde_json::to_value(&tables).expect("serializable")),
        Format::Tsv => tables.iter().map(table_text).collect::<Vec<_>>().join("\n"),
    };
    let bad: Vec<String> = tables
        .iter()
        .flat_map(|t| {
            t.cells
                .iter()
                .filter(|c| c.status == CellStatus::Mismatch)
                .map(move |c| format!("{} ({},{})", t.stat, c.n, c.k))
        })
        .collect();
    let status = if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("table cells differ: {}", bad.join(", "))))
    };
    (text, status)
}
