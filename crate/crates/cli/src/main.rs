use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chromapos::csf::{self, MAX_CSF_VERTICES};
use chromapos::error::Error;
use chromapos::graphs::{self, Graph};
use chromapos::rational::format_rational;
use chromapos::symfunc::{is_positive, to_basis, Basis, SymFn};
use chromapos::verify::{self, Section, Status, VerifyOptions, MAX_VERTICES_ENV};

#[derive(Parser)]
#[command(name = "chromapos", version, about = "Exact chromatic symmetric functions and positivity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic symmetric function of a graph file.
    Csf {
        /// Graph file, or `-` for standard input.
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a term listing in another basis.
    Convert {
        /// Term listing, or `-` for standard input.
        terms: PathBuf,
        #[arg(long, value_enum)]
        to: BasisArg,
        #[arg(long)]
        json: bool,
    },
    /// Twin a vertex or replace it by a clique.
    Transform(TransformArgs),
    /// Report whether the expansion in a basis has only nonnegative coefficients.
    Positivity {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = PositivityBasis::E)]
        basis: PositivityBasis,
        #[arg(long)]
        json: bool,
    },
    /// Most negative coefficient along a graph family.
    Scan {
        #[arg(long, value_enum)]
        family: Family,
        /// Inclusive parameter range `k1..k2`.
        #[arg(long, value_parser = parse_range)]
        range: (usize, usize),
        #[arg(long, value_enum, default_value_t = PositivityBasis::E)]
        basis: PositivityBasis,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every published identity against golden files and brute force.
    VerifyPaper {
        #[arg(long, value_parser = parse_section, default_value = "all")]
        section: SectionArg,
        /// Raise brute-force bounds by one size step.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("op").required(true).args(["twin", "clan"])))]
struct TransformArgs {
    graph: PathBuf,
    /// Vertex to twin.
    #[arg(long, value_name = "V")]
    twin: Option<usize>,
    /// Vertex and number of copies.
    #[arg(long, num_args = 2, value_names = ["V", "K"])]
    clan: Option<Vec<usize>>,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    E,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::E => Basis::E,
            BasisArg::S => Basis::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PositivityBasis {
    E,
    S,
}

impl From<PositivityBasis> for Basis {
    fn from(b: PositivityBasis) -> Basis {
        match b {
            PositivityBasis::E => Basis::E,
            PositivityBasis::S => Basis::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    TwinnedTadpole4,
    ForkClan,
}

#[derive(Clone)]
enum SectionArg {
    All,
    One(Section),
}

fn parse_section(s: &str) -> Result<SectionArg, String> {
    if s == "all" {
        return Ok(SectionArg::All);
    }
    s.parse::<u8>()
        .ok()
        .and_then(Section::from_number)
        .map(SectionArg::One)
        .ok_or_else(|| format!("unknown section `{s}` (expected 2, 3, 4 or all)"))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected `k1..k2`, got `{s}`"))?;
    let a = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    Ok((a, b))
}

/// Failures mapped onto the documented exit codes.
enum Failure {
    Input(String),
    Guard(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } | Error::DegreeCapExceeded { .. } => Failure::Guard(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    Ok(Graph::parse(&read_input(path)?)?)
}

fn admit(g: &Graph) -> Result<(), Failure> {
    let limit = verify::vertex_limit(MAX_CSF_VERTICES);
    if g.order() > limit {
        let guard = if limit < MAX_CSF_VERTICES { MAX_VERTICES_ENV } else { "MAX_CSF_VERTICES" };
        return Err(Error::TooLarge { what: "graph", size: g.order(), guard, limit }.into());
    }
    Ok(())
}

#[derive(Serialize)]
struct TermJson {
    basis: String,
    partition: Vec<usize>,
    num: String,
    den: String,
}

fn terms_json(f: &SymFn) -> Vec<TermJson> {
    f.terms()
        .map(|(p, c)| TermJson {
            basis: f.basis().letter().to_string(),
            partition: p.parts().to_vec(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

fn term_text(basis: Basis, lambda: &chromapos::Partition, c: &chromapos::Rational) -> String {
    format!("{} {}{}", format_rational(c), basis.letter(), lambda)
}

fn print_json(value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn cmd_csf(path: &PathBuf, basis: Basis, json: bool) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    admit(&g)?;
    let f = to_basis(&csf::csf(&g)?, basis)?;
    if json {
        #[derive(Serialize)]
        struct Out {
            command: &'static str,
            vertices: usize,
            edges: usize,
            basis: String,
            terms: Vec<TermJson>,
        }
        print_json(&Out {
            command: "csf",
            vertices: g.order(),
            edges: g.edge_count(),
            basis: basis.letter().to_string(),
            terms: terms_json(&f),
        })?;
    } else {
        print!("{f}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_convert(path: &PathBuf, to: Basis, json: bool) -> Result<ExitCode, Failure> {
    let f = SymFn::parse_terms(&read_input(path)?, to)?;
    let g = to_basis(&f, to)?;
    if json {
        #[derive(Serialize)]
        struct Out {
            command: &'static str,
            from: String,
            basis: String,
            terms: Vec<TermJson>,
        }
        print_json(&Out {
            command: "convert",
            from: f.basis().letter().to_string(),
            basis: to.letter().to_string(),
            terms: terms_json(&g),
        })?;
    } else {
        print!("{g}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_transform(args: &TransformArgs) -> Result<ExitCode, Failure> {
    let g = read_graph(&args.graph)?;
    let out = match (&args.twin, &args.clan) {
        (Some(v), None) => graphs::twin(&g, *v)?,
        (None, Some(vk)) => graphs::clan(&g, vk[0], vk[1])?,
        _ => return Err(Failure::Input("give exactly one of --twin or --clan".into())),
    };
    let text = out.to_file_string();
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_positivity(path: &PathBuf, basis: Basis, json: bool) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    admit(&g)?;
    let p = is_positive(&csf::csf(&g)?, basis)?;
    let witness = p.witness.as_ref().map(|(lam, c)| term_text(basis, lam, c));
    if json {
        #[derive(Serialize)]
        struct Out {
            command: &'static str,
            basis: String,
            positive: bool,
            witness: Option<String>,
        }
        print_json(&Out { command: "positivity", basis: basis.letter().to_string(), positive: p.positive, witness })?;
    } else if let Some(w) = witness {
        println!("NOT POSITIVE");
        println!("witness {w}");
    } else {
        println!("POSITIVE");
    }
    Ok(if p.positive { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct ScanRow {
    parameter: usize,
    vertices: usize,
    positive: bool,
    witness: Option<String>,
}

fn cmd_scan(family: Family, (lo, hi): (usize, usize), basis: Basis, json: bool) -> Result<ExitCode, Failure> {
    let (name, param) = match family {
        Family::TwinnedTadpole4 => ("twinned-tadpole4", "b"),
        Family::ForkClan => ("fork-clan", "k"),
    };
    let mut rows = Vec::new();
    for k in lo..=hi {
        let (f, vertices) = match family {
            Family::TwinnedTadpole4 => (csf::twinned_tadpole4_csf(k)?, k + 5),
            Family::ForkClan => (csf::fork_clan_schur_closed_form(k)?, k + 5),
        };
        let p = is_positive(&f, basis)?;
        let witness = p.witness.as_ref().map(|(lam, c)| term_text(basis, lam, c));
        rows.push(ScanRow { parameter: k, vertices, positive: p.positive, witness });
    }
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            command: &'static str,
            family: &'static str,
            basis: String,
            rows: &'a [ScanRow],
        }
        print_json(&Out { command: "scan", family: name, basis: basis.letter().to_string(), rows: &rows })?;
    } else {
        println!("{param}\tvertices\tverdict\tmost negative");
        for r in &rows {
            let verdict = if r.positive { "POSITIVE" } else { "NOT POSITIVE" };
            println!("{}\t{}\t{verdict}\t{}", r.parameter, r.vertices, r.witness.as_deref().unwrap_or("-"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(section: SectionArg, deep: bool, json: bool) -> Result<ExitCode, Failure> {
    let sections = match section {
        SectionArg::All => Section::ALL.to_vec(),
        SectionArg::One(s) => vec![s],
    };
    let options = VerifyOptions { sections: sections.clone(), deep, ..VerifyOptions::default() };
    let report = verify::run(&options)?;
    if json {
        #[derive(Serialize)]
        struct Check<'a> {
            id: &'a str,
            section: u8,
            criterion: u8,
            status: String,
            expected: &'a str,
            actual: &'a str,
            elapsed_ms: f64,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            command: &'static str,
            sections: Vec<u8>,
            deep: bool,
            passed: bool,
            pass: usize,
            fail: usize,
            skipped: usize,
            checks: Vec<Check<'a>>,
        }
        let checks = report
            .records
            .iter()
            .map(|r| Check {
                id: &r.id,
                section: r.section.number(),
                criterion: r.criterion,
                status: r.status.to_string(),
                expected: &r.expected,
                actual: &r.actual,
                elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
            })
            .collect();
        print_json(&Out {
            command: "verify-paper",
            sections: sections.iter().map(|s| s.number()).collect(),
            deep,
            passed: report.passed(),
            pass: report.count(Status::Pass),
            fail: report.count(Status::Fail),
            skipped: report.count(Status::Skipped),
            checks,
        })?;
    } else {
        for r in &report.records {
            println!("{:<7} {} ({:.3}s)", r.status.to_string().to_uppercase(), r.id, r.elapsed.as_secs_f64());
            if r.status != Status::Pass {
                for line in r.expected.lines() {
                    println!("        expected: {line}");
                }
                for line in r.actual.lines() {
                    println!("        actual:   {line}");
                }
            }
        }
        println!(
            "{} passed, {} failed, {} skipped",
            report.count(Status::Pass),
            report.count(Status::Fail),
            report.count(Status::Skipped)
        );
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Csf { graph, basis, json } => cmd_csf(&graph, basis.into(), json),
        Command::Convert { terms, to, json } => cmd_convert(&terms, to.into(), json),
        Command::Transform(args) => cmd_transform(&args),
        Command::Positivity { graph, basis, json } => cmd_positivity(&graph, basis.into(), json),
        Command::Scan { family, range, basis, json } => cmd_scan(family, range, basis.into(), json),
        Command::VerifyPaper { section, deep, json } => cmd_verify(section, deep, json),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(4)
        }
    }
}
