//! `toric-additive`: Demazure roots, additivity and smooth Fano atlases from
//! the command line.
//!
//! Exit codes: 0 ok, 2 malformed input or usage, 3 violated precondition,
//! 4 internal error.

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};
use serde::Serialize;
use toric_additive::atlas::{
    classify_collection, dim2_fixture, emit_report, ClassificationRecord, ClassifyOptions, ReportFormat,
    ReportOptions,
};
use toric_additive::families::{
    del_pezzo_polytope, hirzebruch_bundle_fan, kleinschmidt_fan, projective_space_fan, projective_space_polytope,
    pseudo_del_pezzo_polytope, HirzebruchBundleParams, KleinschmidtParams,
};
use toric_additive::formats::{
    detect_input_kind, parse_collection, parse_fan, write_collection_text, write_fan, CollectionFormat, Collection,
    InputKind,
};
use toric_additive::invariants::{invariant_record, picard_number, specialized_betti_checks, InvariantRecord};
use toric_additive::{
    additive_actions, all_roots, classify_polytope, roots_for_ray, AdditiveOptions, AdditivityReport, Error, Fan,
    LatticeVector, Polytope, Side,
};

#[derive(Parser)]
#[command(name = "toric-additive", version, about = "Additive actions on complete toric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Demazure roots of a fan, or of the fan of a polytope.
    Roots(RootsArgs),
    /// Decide additivity and unique additivity.
    Classify(ClassifyArgs),
    /// Write a fan or polytope of a named family.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Batch classification of smooth Fano polytope collections.
    #[command(subcommand)]
    Atlas(AtlasCommand),
    /// Betti numbers, Picard number and anticanonical degree.
    Invariants(InputArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Fan file or polytope collection (text or JSON); `-` reads stdin.
    input: PathBuf,
    /// Select one polytope of a collection by id.
    #[arg(long)]
    id: Option<String>,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Only the roots of this ray, given by its coordinates, e.g. `1,0`.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    ray: Option<Vec<i64>>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Report a complete collection of Demazure roots.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    complete_collection: bool,
    /// Decide unique additivity.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    check_unique: bool,
    /// Skip the completeness check of a fan input.
    #[arg(long)]
    assume_complete: bool,
    /// Skip the smoothness check of a fan input.
    #[arg(long)]
    assume_smooth: bool,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Projective space of dimension `n`.
    ProjectiveSpace {
        n: usize,
        /// Write the polytope in `N` instead of the fan.
        #[arg(long)]
        polytope: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Kleinschmidt fan with parameters `r s a_1 .. a_r`.
    Kleinschmidt {
        r: usize,
        s: usize,
        #[arg(allow_negative_numbers = true)]
        a: Vec<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Projectivized bundle over a Hirzebruch surface with `0 <= d`, `a <= b`.
    #[command(allow_negative_numbers = true)]
    HirzebruchBundle {
        d: i64,
        a: i64,
        b: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Del Pezzo polytope in `N` of even dimension `n`.
    DelPezzo {
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pseudo del Pezzo polytope in `N` of even dimension `n`.
    PseudoDelPezzo {
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AtlasCommand {
    /// Classify every polytope of a collection.
    Run {
        input: PathBuf,
        #[arg(long, default_value = "table")]
        format: String,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Only list additive varieties; counts still cover all of them.
        #[arg(long)]
        additive_only: bool,
        /// Collection format (text or json); detected when absent.
        #[arg(long)]
        input_format: Option<String>,
        /// Record a complete collection for each additive variety.
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        complete_collection: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the five smooth Fano polygons as a collection.
    Enumerate2 {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-render a JSON report written by `atlas run --format json`.
    Report {
        input: PathBuf,
        #[arg(long, default_value = "table")]
        format: String,
        #[arg(long)]
        additive_only: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_parse_error() { 2 } else { 3 }, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type CliResult<T> = Result<T, Failure>;

fn read_input(path: &Path) -> CliResult<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map_err(Error::from)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn write_output(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn collection_format(path: &Path, text: &str, explicit: Option<&str>) -> CliResult<CollectionFormat> {
    match explicit {
        Some(f) => Ok(f.parse()?),
        None => Ok(toric_additive::formats::detect_format(path, text)),
    }
}

/// Every block must parse; the first diagnostic decides the exit code.
fn strict(collection: Collection) -> CliResult<Vec<(String, Polytope)>> {
    if let Some(d) = collection.diagnostics.first() {
        let id = d.id.as_deref().map(|i| format!(" (id {i})")).unwrap_or_default();
        return Err(Failure { code: if d.malformed { 2 } else { 3 }, message: format!("line {}{id}: {}", d.line, d.message) });
    }
    Ok(collection.polytopes)
}

enum Input {
    Fan(Fan),
    Polytopes(Vec<(String, Polytope)>),
}

fn load(args: &InputArgs) -> CliResult<Input> {
    let text = read_input(&args.input)?;
    match detect_input_kind(&text)? {
        InputKind::Fan => {
            if args.id.is_some() {
                return Err(usage("--id applies to polytope collections only"));
            }
            Ok(Input::Fan(parse_fan(&text)?))
        }
        InputKind::Polytopes => {
            let format = collection_format(&args.input, &text, None)?;
            let mut polytopes = strict(parse_collection(&text, format)?)?;
            if let Some(id) = &args.id {
                polytopes.retain(|(pid, _)| pid == id);
                if polytopes.is_empty() {
                    return Err(usage(format!("no polytope with id {id}")));
                }
            }
            if polytopes.is_empty() {
                return Err(usage("input holds no polytopes"));
            }
            Ok(Input::Polytopes(polytopes))
        }
    }
}

/// One object for a single item, an array otherwise.
fn one_or_many<T: Serialize>(mut items: Vec<T>) -> String {
    if items.len() == 1 {
        to_json(&items.remove(0))
    } else {
        to_json(&items)
    }
}

fn single_fan(input: Input) -> CliResult<Fan> {
    match input {
        Input::Fan(f) => Ok(f),
        Input::Polytopes(mut ps) => {
            if ps.len() != 1 {
                return Err(usage(format!("input holds {} polytopes; select one with --id", ps.len())));
            }
            Ok(toric_additive::additivity::variety_fan(&ps.remove(0).1)?)
        }
    }
}

fn cmd_roots(args: &RootsArgs) -> CliResult<String> {
    let fan = single_fan(load(&args.input)?)?;
    match &args.ray {
        None => Ok(to_json(&all_roots(&fan)?)),
        Some(coords) => {
            let ray = LatticeVector::from(coords.as_slice());
            let i = fan.ray_index(&ray).ok_or_else(|| Failure { code: 3, message: format!("{ray} is not a ray of the fan") })?;
            #[derive(Serialize)]
            struct Out {
                ray: LatticeVector,
                roots: Vec<LatticeVector>,
            }
            Ok(to_json(&Out { ray, roots: roots_for_ray(&fan, i)? }))
        }
    }
}

#[derive(Serialize)]
struct Witness {
    cone: Option<usize>,
    basis: Vec<usize>,
    basis_rays: Vec<LatticeVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<LatticeVector>,
}

/// Snake-case counterparts of `isAdditive`, `isUniquelyAdditive` and
/// `completeCollection`, plus the witness cone.
#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    is_additive: bool,
    is_uniquely_additive: Option<bool>,
    complete_collection: Vec<LatticeVector>,
    witness: Option<Witness>,
}

fn classify_output(id: Option<String>, fan: &Fan, r: AdditivityReport) -> ClassifyOutput {
    let witness = r.basis.as_ref().map(|b| Witness {
        cone: r.witness_cone,
        basis: b.clone(),
        basis_rays: b.iter().map(|&i| fan.ray(i).clone()).collect(),
        vertex: r.witness_vertex.clone(),
    });
    ClassifyOutput {
        id,
        is_additive: r.is_additive,
        is_uniquely_additive: r.is_uniquely_additive,
        complete_collection: r.complete_collection.unwrap_or_default(),
        witness,
    }
}

fn cmd_classify(args: &ClassifyArgs) -> CliResult<String> {
    let opts = AdditiveOptions {
        complete_collection: args.complete_collection,
        check_unique: args.check_unique,
        assume_complete: args.assume_complete,
        assume_smooth: args.assume_smooth,
    };
    match load(&args.input)? {
        Input::Fan(fan) => {
            let r = additive_actions(&fan, &opts)?;
            Ok(to_json(&classify_output(None, &fan, r)))
        }
        Input::Polytopes(ps) => {
            let single = ps.len() == 1;
            let mut out = Vec::new();
            for (id, p) in ps {
                let fan = toric_additive::additivity::variety_fan(&p)?;
                let r = classify_polytope(&p, &opts)?;
                out.push(classify_output((!single).then_some(id), &fan, r));
            }
            Ok(one_or_many(out))
        }
    }
}

#[derive(Serialize)]
struct PolytopeInvariants {
    id: String,
    side: &'static str,
    #[serde(flatten)]
    record: InvariantRecord,
    /// Disagreements between the general Betti formula and the closed forms
    /// in dimensions 2 to 4.
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_mismatches: Option<Vec<String>>,
}

/// `M`-side polytopes are replaced by their duals, whose face fan is the
/// normal fan of the input.
fn cmd_invariants(args: &InputArgs) -> CliResult<String> {
    match load(args)? {
        Input::Fan(fan) => {
            #[derive(Serialize)]
            struct Out {
                dim: usize,
                picard: usize,
            }
            Ok(to_json(&Out { dim: fan.dim(), picard: picard_number(&fan)? }))
        }
        Input::Polytopes(ps) => {
            let mut out = Vec::new();
            for (id, p) in ps {
                let side = p.side().name();
                let q = if p.side() == Side::M { p.dual()? } else { p };
                out.push(PolytopeInvariants {
                    id,
                    side,
                    record: invariant_record(&q)?,
                    closed_form_mismatches: specialized_betti_checks(&q)?,
                });
            }
            Ok(one_or_many(out))
        }
    }
}

fn cmd_family(cmd: &FamilyCommand) -> CliResult<()> {
    let polytope_block = |id: &str, p: Polytope| write_collection_text([(id, &p)]);
    let (text, output) = match cmd {
        FamilyCommand::ProjectiveSpace { n, polytope, output } => {
            let text = if *polytope {
                polytope_block(&format!("P{n}"), projective_space_polytope(*n)?)
            } else {
                write_fan(&projective_space_fan(*n)?)
            };
            (text, output)
        }
        FamilyCommand::Kleinschmidt { r, s, a, output } => {
            (write_fan(&kleinschmidt_fan(&KleinschmidtParams::new(*r, *s, a.clone())?)?), output)
        }
        FamilyCommand::HirzebruchBundle { d, a, b, output } => {
            (write_fan(&hirzebruch_bundle_fan(&HirzebruchBundleParams::new(*d, *a, *b)?)?), output)
        }
        FamilyCommand::DelPezzo { n, output } => (polytope_block(&format!("dP{n}"), del_pezzo_polytope(*n)?), output),
        FamilyCommand::PseudoDelPezzo { n, output } => {
            (polytope_block(&format!("pdP{n}"), pseudo_del_pezzo_polytope(*n)?), output)
        }
    };
    write_output(output.as_deref(), &text)
}

fn report_options(format: &str, additive_only: bool) -> CliResult<ReportOptions> {
    Ok(ReportOptions { format: format.parse::<ReportFormat>()?, additive_only })
}

fn cmd_atlas(cmd: &AtlasCommand) -> CliResult<()> {
    match cmd {
        AtlasCommand::Run { input, format, jobs, additive_only, input_format, complete_collection, output } => {
            let opts = report_options(format, *additive_only)?;
            let text = read_input(input)?;
            let collection = parse_collection(&text, collection_format(input, &text, input_format.as_deref())?)?;
            for d in &collection.diagnostics {
                let id = d.id.as_deref().map(|i| format!(" (id {i})")).unwrap_or_default();
                eprintln!("warning: skipped block at line {}{id}: {}", d.line, d.message);
            }
            let copts = ClassifyOptions { jobs: *jobs, complete_collection: *complete_collection };
            let (records, _) = classify_collection(&collection.polytopes, &copts)?;
            write_output(output.as_deref(), &emit_report(&records, &opts))
        }
        AtlasCommand::Enumerate2 { output } => {
            let fixture = dim2_fixture();
            write_output(output.as_deref(), &write_collection_text(fixture.iter().map(|(id, p)| (id.as_str(), p))))
        }
        AtlasCommand::Report { input, format, additive_only, output } => {
            let opts = report_options(format, *additive_only)?;
            #[derive(serde::Deserialize)]
            struct Doc {
                records: Vec<ClassificationRecord>,
                #[serde(default)]
                errors: Vec<ClassificationRecord>,
            }
            let doc: Doc = serde_json::from_str(&read_input(input)?).map_err(Error::from)?;
            let records: Vec<ClassificationRecord> = doc.records.into_iter().chain(doc.errors).collect();
            write_output(output.as_deref(), &emit_report(&records, &opts))
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match &cli.command {
        Command::Roots(a) => write_output(None, &cmd_roots(a)?),
        Command::Classify(a) => write_output(None, &cmd_classify(a)?),
        Command::Invariants(a) => write_output(None, &cmd_invariants(a)?),
        Command::Family(f) => cmd_family(f),
        Command::Atlas(a) => cmd_atlas(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(f)) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
        Err(_) => ExitCode::from(4),
    }
}
