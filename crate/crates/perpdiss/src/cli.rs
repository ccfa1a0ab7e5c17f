//! Command-line surface: analyze a gain graph, verify it against the
//! geometric oracle, generate families, and render planar arrangements.
//!
//! Exit codes: 0 pass, 1 verified mismatch, 2 input error, 3 resource guard,
//! 4 sampling failure.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use crate::counts::{counts_from_whitney, make_family, CountReport, FamilySpec};
use crate::error::Error;
use crate::exact::Rat;
use crate::geometry::{
    build_arrangement, check_gp, check_igp, geometric_counts, intersection_semilattice,
    planar_census, render_svg, sample_generic, PointConfiguration,
};
use crate::graph::{BalanceMode, GainGraph};
use crate::lattice::enumerate_flats;
use crate::Result;

const USAGE: &str = "\
usage: perpdiss <subcommand> [flags]

subcommands:
  analyze   predict flat/face counts of a gain graph
            --graph PATH --dim N [--alpha R] [--out PATH] [--format json|text]
  verify    compare the prediction against the geometric oracle
            --graph PATH --dim N [--points PATH | --seed N]
            [--alpha R] [--bound N] [--retries N] [--out PATH] [--format json|text]
  family    emit a named family as graph JSON
            --name bisectors|power_diagram|contrabalanced|fat|odd|even|no_bisector|catalan
            --n N [--k K] [--m M] [--weights r1,r2,...] [--seed N] [--out PATH]
  render    draw a planar arrangement as SVG
            --graph PATH --points PATH [--out PATH]

exit codes: 0 pass, 1 verified mismatch, 2 input error, 3 resource guard,
4 sampling failure";

/// Parsed command line.
#[derive(Debug, Default, Clone)]
pub struct RunConfig {
    pub subcommand: String,
    pub graph: Option<PathBuf>,
    pub points: Option<PathBuf>,
    pub dim: Option<usize>,
    pub alpha: Option<Rat>,
    pub seed: Option<u64>,
    pub bound: Option<i64>,
    pub retries: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub name: Option<String>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub weights: Option<Vec<Rat>>,
}

pub fn parse_args(args: &[String]) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut it = args.iter();
    cfg.subcommand = it
        .next()
        .ok_or_else(|| Error::Input(USAGE.to_string()))?
        .clone();
    while let Some(flag) = it.next() {
        let mut value = || {
            it.next()
                .ok_or_else(|| Error::Input(format!("flag {flag} needs a value")))
        };
        match flag.as_str() {
            "--graph" => cfg.graph = Some(PathBuf::from(value()?)),
            "--points" => cfg.points = Some(PathBuf::from(value()?)),
            "--dim" => cfg.dim = Some(parse_num(value()?, "--dim")?),
            "--alpha" => cfg.alpha = Some(value()?.parse()?),
            "--seed" => cfg.seed = Some(parse_num(value()?, "--seed")?),
            "--bound" => cfg.bound = Some(parse_num(value()?, "--bound")?),
            "--retries" => cfg.retries = Some(parse_num(value()?, "--retries")?),
            "--out" => cfg.out = Some(PathBuf::from(value()?)),
            "--format" => cfg.format = Some(value()?.clone()),
            "--name" => cfg.name = Some(value()?.clone()),
            "--n" => cfg.n = Some(parse_num(value()?, "--n")?),
            "--k" => cfg.k = Some(parse_num(value()?, "--k")?),
            "--m" => cfg.m = Some(parse_num(value()?, "--m")?),
            "--weights" => {
                cfg.weights = Some(
                    value()?
                        .split(',')
                        .map(str::parse)
                        .collect::<Result<Vec<Rat>>>()?,
                )
            }
            other => return Err(Error::Input(format!("unknown flag {other}\n{USAGE}"))),
        }
    }
    Ok(cfg)
}

fn parse_num<T: std::str::FromStr>(s: &str, flag: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Input(format!("bad value {s:?} for {flag}")))
}

/// Entry point used by the binary: returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let cfg = match parse_args(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let outcome = match cfg.subcommand.as_str() {
        "analyze" => run_analyze(&cfg).map(|r| (r, 0)),
        "verify" => run_verify(&cfg),
        "family" => run_family(&cfg).map(|r| (r, 0)),
        "render" => run_render(&cfg).map(|r| (r, 0)),
        other => Err(Error::Input(format!("unknown subcommand {other}\n{USAGE}"))),
    };
    match outcome {
        Ok((content, code)) => {
            if let Some(path) = &cfg.out {
                if let Err(e) = fs::write(path, &content) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                print!("{content}");
            }
            code
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn load_graph(cfg: &RunConfig) -> Result<GainGraph> {
    let path = cfg
        .graph
        .as_ref()
        .ok_or_else(|| Error::Input("--graph is required".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let mut g = GainGraph::from_json(&text)?;
    if let Some(alpha) = &cfg.alpha {
        g = g.with_alpha(alpha.clone());
    }
    Ok(g)
}

fn load_points(cfg: &RunConfig) -> Result<Option<PointConfiguration>> {
    match &cfg.points {
        None => Ok(None),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            Ok(Some(PointConfiguration::from_json(&text)?))
        }
    }
}

/// The balance mode the descriptor exponent selects, and the predicted
/// count report for dimension d.
pub fn analyze_graph(g: &GainGraph, d: usize) -> Result<CountReport> {
    if d < 1 {
        return Err(Error::InvalidParam("dimension must be at least 1".into()));
    }
    let mode = if g.alpha().is_zero() {
        BalanceMode::Exact
    } else {
        BalanceMode::ZOnly
    };
    let cap = d.min(g.n().saturating_sub(1));
    let table = enumerate_flats(g, mode, cap)?.whitney();
    let mut report = counts_from_whitney(&table, d, g.n())?;
    report.degenerate = !g.degenerate_loops().is_empty();
    Ok(report)
}

pub fn run_analyze(cfg: &RunConfig) -> Result<String> {
    let g = load_graph(cfg)?;
    let d = cfg
        .dim
        .ok_or_else(|| Error::Input("--dim is required".into()))?;
    let report = analyze_graph(&g, d)?;
    Ok(match cfg.format.as_deref() {
        Some("text") => report.to_text(),
        None | Some("json") => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Some(other) => return Err(Error::Input(format!("unknown format {other}"))),
    })
}

/// One line of the verification report.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Comparison {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, serde::Serialize)]
pub struct VerifyReport {
    pub igp: bool,
    pub gp: bool,
    pub comparisons: Vec<Comparison>,
    pub predicted: CountReport,
    pub geometric: CountReport,
    pub pass: bool,
}

/// Run the full two-path verification for (g, q): position checks, Whitney
/// prediction, geometric recount, and (in the plane) the Euler census.
pub fn verify_graph(g: &GainGraph, q: &PointConfiguration, d: usize) -> Result<VerifyReport> {
    let igp = check_igp(q)?;
    let gp = check_gp(g, q)?;
    let predicted = analyze_graph(g, d)?;
    let hyperplanes = build_arrangement(g, q)?;
    let lattice = intersection_semilattice(&hyperplanes, d)?;
    let geometric = geometric_counts(&lattice, d)?;

    let mut comparisons = vec![];
    let mut push = |name: &str, pass: bool, detail: String| {
        comparisons.push(Comparison {
            name: name.to_string(),
            pass,
            detail,
        });
    };
    push(
        "igp",
        igp.ok,
        igp.witness.as_ref().map_or("no parallelisms".into(), |w| {
            format!("dependent directions {w:?}")
        }),
    );
    push(
        "gp",
        gp.ok,
        gp.failure
            .clone()
            .unwrap_or_else(|| "prediction realized".into()),
    );
    push(
        "faces",
        predicted.f == geometric.f,
        format!("predicted {:?} geometric {:?}", predicted.f, geometric.f),
    );
    push(
        "bounded",
        predicted.b == geometric.b,
        format!("predicted {:?} geometric {:?}", predicted.b, geometric.b),
    );
    push(
        "flats",
        predicted.a == geometric.a,
        format!("predicted {:?} geometric {:?}", predicted.a, geometric.a),
    );
    push(
        "characteristic",
        predicted.p == geometric.p,
        format!("predicted {} geometric {}", predicted.p, geometric.p),
    );
    if d == 2 {
        match planar_census(&hyperplanes) {
            Ok((f0, f1, f2)) => {
                let census = vec![f0, f1, f2];
                push(
                    "euler_census",
                    census == geometric.f && census == predicted.f,
                    format!("census {census:?}"),
                );
            }
            Err(e) => push("euler_census", true, format!("skipped: {e}")),
        }
    }
    let pass = comparisons.iter().all(|c| c.pass);
    Ok(VerifyReport {
        igp: igp.ok,
        gp: gp.ok,
        comparisons,
        predicted,
        geometric,
        pass,
    })
}

fn run_verify(cfg: &RunConfig) -> Result<(String, i32)> {
    let g = load_graph(cfg)?;
    let d = cfg
        .dim
        .ok_or_else(|| Error::Input("--dim is required".into()))?;
    let q = match load_points(cfg)? {
        Some(q) => q,
        None => {
            let seed = cfg
                .seed
                .ok_or_else(|| Error::Input("need --points or --seed".into()))?;
            sample_generic(
                &g,
                d,
                seed,
                cfg.bound.unwrap_or(1_000_000),
                cfg.retries.unwrap_or(100),
            )?
        }
    };
    let report = verify_graph(&g, &q, d)?;
    let code = if report.pass { 0 } else { 1 };
    let content = match cfg.format.as_deref() {
        Some("text") => {
            let mut s = String::new();
            for c in &report.comparisons {
                let _ = writeln!(
                    s,
                    "{} {:<16} {}",
                    if c.pass { "pass" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            let _ = writeln!(s, "overall: {}", if report.pass { "pass" } else { "FAIL" });
            s
        }
        None | Some("json") => {
            let mut s =
                serde_json::to_string_pretty(&report).expect("report serialization cannot fail");
            s.push('\n');
            s
        }
        Some(other) => return Err(Error::Input(format!("unknown format {other}"))),
    };
    Ok((content, code))
}

fn run_family(cfg: &RunConfig) -> Result<String> {
    let name = cfg
        .name
        .as_deref()
        .ok_or_else(|| Error::Input("--name is required".into()))?;
    let n = cfg
        .n
        .ok_or_else(|| Error::Input("--n is required".into()))?;
    let need_k = || cfg.k.ok_or_else(|| Error::Input("--k is required".into()));
    let spec = match name {
        "bisectors" => FamilySpec::Bisectors { n },
        "power_diagram" => FamilySpec::PowerDiagram {
            n,
            weights: cfg
                .weights
                .clone()
                .ok_or_else(|| Error::Input("--weights is required".into()))?,
        },
        "contrabalanced" => FamilySpec::Contrabalanced {
            n,
            multiplicity: cfg.m.unwrap_or(1),
            seed: cfg.seed.unwrap_or(0),
        },
        "fat" => FamilySpec::Fat {
            n,
            m_extra: cfg.m.unwrap_or(1),
            seed: cfg.seed.unwrap_or(0),
        },
        "odd" => FamilySpec::Odd { n, k: need_k()? },
        "even" => FamilySpec::Even { n, k: need_k()? },
        "no_bisector" => FamilySpec::NoBisector { n, k: need_k()? },
        "catalan" => FamilySpec::Catalan { n },
        other => return Err(Error::Input(format!("unknown family {other}"))),
    };
    let mut s = make_family(&spec)?.to_json();
    s.push('\n');
    Ok(s)
}

fn run_render(cfg: &RunConfig) -> Result<String> {
    let g = load_graph(cfg)?;
    let q = load_points(cfg)?.ok_or_else(|| Error::Input("--points is required".into()))?;
    let hyperplanes = build_arrangement(&g, &q)?;
    render_svg(&g, &q, &hyperplanes)
}
