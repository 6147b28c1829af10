use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use sdecomp_core::{Face, SearchStrategy, ShellingOrder, SimplicialComplex};

use crate::format::{
    label_sets, monomial, monomial_list, parse_complex, serialize_complex, ParseError,
    ParsedComplex,
};
use crate::report::{label_lists, ComplexReport, KVerdict};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sdecomp",
    version,
    about = "Shellability and decomposability of simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertices, facets, purity, dimension, f- and h-vector
    Info(Input),
    /// Exit 0 if the complex is shellable, 1 otherwise
    Shellable(Input),
    /// Find a shelling order by depth-first search
    ShellingOrder {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
    /// Exit 0 if the complex is vertex-decomposable, 1 otherwise
    VertexDecomposable(Input),
    /// Exit 0 if the complex is k-decomposable, 1 otherwise
    KDecomposable {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Shedding vertices (k = 0) or shedding faces of dimension at most k
    Shedding {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Alexander dual, in the input file format
    Dual(Input),
    /// Minimal nonfaces (Stanley–Reisner ideal generators)
    Nonfaces(Input),
    /// Link of a face, in the input file format
    Link {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        face: FaceArg,
    },
    /// Face deletion, in the input file format
    Delete {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        face: FaceArg,
    },
    /// Linear quotients of the dual ideal read off a shelling order
    LinearQuotients {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Complex file, or `-` for standard input
    input: String,
    /// Emit a JSON report instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct StrategyArgs {
    /// Shuffle the facets before searching
    #[arg(long, conflicts_with = "permutation")]
    random: bool,
    /// Seed for --random (implies --random)
    #[arg(long, conflicts_with = "permutation")]
    seed: Option<u64>,
    /// Rearrange the facets, as written in the input, by these indices
    #[arg(long, value_delimiter = ',')]
    permutation: Option<Vec<usize>>,
}

impl StrategyArgs {
    fn strategy(&self) -> SearchStrategy {
        if let Some(perm) = &self.permutation {
            SearchStrategy::Permutation(perm.clone())
        } else if self.random || self.seed.is_some() {
            SearchStrategy::Random {
                seed: self.seed.unwrap_or(0),
            }
        } else {
            SearchStrategy::Default
        }
    }
}

#[derive(Debug, Args)]
struct FaceArg {
    /// Face labels separated by spaces or commas
    #[arg(long, allow_hyphen_values = true)]
    face: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(ParseError),
    Domain(sdecomp_core::Error),
}

impl From<sdecomp_core::Error> for Failure {
    fn from(e: sdecomp_core::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Complex(inner) => Failure::Domain(inner),
            syntax => Failure::Parse(syntax),
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_TRUE,
        }
    }

    fn verdict(text: String, verdict: bool) -> Self {
        Output {
            text,
            code: if verdict { EXIT_TRUE } else { EXIT_FALSE },
        }
    }
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// code: 0 success or true, 1 false or no witness, 2 usage or parse error,
/// 3 domain error.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    return EXIT_TRUE;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok(out) => {
            let _ = stdout.write_all(out.text.as_bytes());
            out.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Parse(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn load(input: &Input, stdin: &mut dyn Read) -> Result<(String, ParsedComplex), Failure> {
    let mut text = String::new();
    let name = if input.input == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        "stdin".to_string()
    } else {
        let path = Path::new(&input.input);
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("reading {}: {e}", input.input)))?;
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| input.input.clone())
    };
    Ok((name, parse_complex(&text)?))
}

fn json(report: &ComplexReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn face_arg(complex: &SimplicialComplex, arg: &FaceArg) -> Result<Face, Failure> {
    let labels = arg
        .face
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty());
    Ok(complex.vertices().face(labels)?)
}

fn find_shelling(
    parsed: &ParsedComplex,
    strategy: &StrategyArgs,
) -> Result<Option<ShellingOrder>, Failure> {
    Ok(parsed
        .complex
        .shelling_order_from(&parsed.facet_order, &strategy.strategy())?)
}

fn add_shelling_witnesses(
    report: &mut ComplexReport,
    complex: &SimplicialComplex,
    order: &ShellingOrder,
) -> Result<(), Failure> {
    let vs = complex.vertices();
    let quotients = complex.linear_quotients_from_shelling(&order.facets)?;
    report.shelling_order = Some(label_lists(vs, &order.facets));
    report.restriction_faces = Some(label_lists(vs, &order.restrictions));
    report.linear_quotients = Some(
        quotients
            .iter()
            .map(|s| vs.vertex_labels(s).into_iter().map(String::from).collect())
            .collect(),
    );
    Ok(())
}

fn bool_text(b: bool) -> String {
    format!("{b}\n")
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match command {
        Command::Info(input) => {
            let (name, parsed) = load(&input, stdin)?;
            let c = &parsed.complex;
            let report = ComplexReport::new(name, c)?;
            if input.json {
                return Ok(Output::ok(json(&report)));
            }
            let vs = c.vertices();
            let text = format!(
                "name: {}\nvertices: {}\nfacets: {}\npure: {}\ndimension: {}\nf-vector: {}\nh-vector: {}\n",
                report.name,
                vs.labels().join(" "),
                monomial_list(vs, c.facets()),
                report.pure,
                report.dimension,
                c.f_vector()?,
                c.h_vector()?,
            );
            Ok(Output::ok(text))
        }
        Command::Shellable(input) => {
            let (name, parsed) = load(&input, stdin)?;
            let c = &parsed.complex;
            let order = c.shelling_order_from(&parsed.facet_order, &SearchStrategy::Default)?;
            let verdict = order.is_some();
            if input.json {
                let mut report = ComplexReport::new(name, c)?;
                report.shellable = Some(verdict);
                if let Some(order) = &order {
                    add_shelling_witnesses(&mut report, c, order)?;
                }
                return Ok(Output::verdict(json(&report), verdict));
            }
            Ok(Output::verdict(bool_text(verdict), verdict))
        }
        Command::ShellingOrder { input, strategy } => {
            let (name, parsed) = load(&input, stdin)?;
            let c = &parsed.complex;
            let order = find_shelling(&parsed, &strategy)?;
            if input.json {
                let mut report = ComplexReport::new(name, c)?;
                report.shellable = Some(order.is_some());
                if let Some(order) = &order {
                    add_shelling_witnesses(&mut report, c, order)?;
                }
                return Ok(Output::verdict(json(&report), order.is_some()));
            }
            Ok(match order {
                Some(order) => {
                    Output::ok(format!("{}\n", monomial_list(c.vertices(), &order.facets)))
                }
                None => Output::verdict("none\n".to_string(), false),
            })
        }
        Command::VertexDecomposable(input) => {
            let (name, parsed) = load(&input, stdin)?;
            let verdict = parsed.complex.is_vertex_decomposable()?;
            if input.json {
                let mut report = ComplexReport::new(name, &parsed.complex)?;
                report.vertex_decomposable = Some(verdict);
                return Ok(Output::verdict(json(&report), verdict));
            }
            Ok(Output::verdict(bool_text(verdict), verdict))
        }
        Command::KDecomposable { input, k } => {
            let (name, parsed) = load(&input, stdin)?;
            let verdict = parsed.complex.is_k_decomposable(k)?;
            if input.json {
                let mut report = ComplexReport::new(name, &parsed.complex)?;
                report.k_decomposable.push(KVerdict {
                    k,
                    decomposable: verdict,
                });
                return Ok(Output::verdict(json(&report), verdict));
            }
            Ok(Output::verdict(bool_text(verdict), verdict))
        }
        Command::Shedding { input, k } => {
            let (name, parsed) = load(&input, stdin)?;
            let c = &parsed.complex;
            let vs = c.vertices();
            let faces = c.shedding_faces(k)?;
            let vertices = if k == 0 {
                Some(c.shedding_vertices()?)
            } else {
                None
            };
            if input.json {
                let mut report = ComplexReport::new(name, c)?;
                report.shedding_faces = Some(label_lists(vs, &faces));
                report.shedding_vertices = vertices
                    .as_deref()
                    .map(|v| vs.vertex_labels(v).into_iter().map(String::from).collect());
                return Ok(Output::ok(json(&report)));
            }
            let text = match vertices {
                Some(v) => {
                    let singletons: Vec<Face> = v.into_iter().map(Face::singleton).collect();
                    monomial_list(vs, &singletons)
                }
                None => monomial_list(vs, &faces),
            };
            Ok(Output::ok(format!("{text}\n")))
        }
        Command::Dual(input) => {
            let (name, parsed) = load(&input, stdin)?;
            let dual = parsed.complex.alexander_dual()?;
            if input.json {
                let report = ComplexReport::new(format!("dual({name})"), &dual)?;
                return Ok(Output::ok(json(&report)));
            }
            Ok(Output::ok(serialize_complex(&dual)))
        }
        Command::Nonfaces(input) => {
            let (name, parsed) = load(&input, stdin)?;
            let c = &parsed.complex;
            let nonfaces = c.minimal_nonfaces()?;
            if input.json {
                let mut report = ComplexReport::new(name, c)?;
                report.minimal_nonfaces = Some(label_lists(c.vertices(), nonfaces.gens()));
                return Ok(Output::ok(json(&report)));
            }
            Ok(Output::ok(format!(
                "{}\n",
                monomial_list(c.vertices(), nonfaces.gens())
            )))
        }
        Command::Link { input, face } => {
            let (name, parsed) = load(&input, stdin)?;
            let sigma = face_arg(&parsed.complex, &face)?;
            let link = parsed.complex.link(sigma)?;
            if input.json {
                let label = monomial(parsed.complex.vertices(), sigma);
                let report = ComplexReport::new(format!("link({name}, {label})"), &link)?;
                return Ok(Output::ok(json(&report)));
            }
            Ok(Output::ok(serialize_complex(&link)))
        }
        Command::Delete { input, face } => {
            let (name, parsed) = load(&input, stdin)?;
            let sigma = face_arg(&parsed.complex, &face)?;
            let deletion = parsed.complex.face_deletion(sigma)?;
            if input.json {
                let label = monomial(parsed.complex.vertices(), sigma);
                let report = ComplexReport::new(format!("delete({name}, {label})"), &deletion)?;
                return Ok(Output::ok(json(&report)));
            }
            Ok(Output::ok(serialize_complex(&deletion)))
        }
        Command::LinearQuotients { input, strategy } => {
            let (name, parsed) = load(&input, stdin)?;
            let c = &parsed.complex;
            let Some(order) = find_shelling(&parsed, &strategy)? else {
                if input.json {
                    let mut report = ComplexReport::new(name, c)?;
                    report.shellable = Some(false);
                    return Ok(Output::verdict(json(&report), false));
                }
                return Ok(Output::verdict("none\n".to_string(), false));
            };
            if input.json {
                let mut report = ComplexReport::new(name, c)?;
                report.shellable = Some(true);
                add_shelling_witnesses(&mut report, c, &order)?;
                return Ok(Output::ok(json(&report)));
            }
            let quotients = c.linear_quotients_from_shelling(&order.facets)?;
            Ok(Output::ok(format!(
                "{}\n",
                label_sets(c.vertices(), &quotients)
            )))
        }
    }
}
