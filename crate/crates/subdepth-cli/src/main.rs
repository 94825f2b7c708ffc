//! `subdepth`: depth computations for inclusions of multimatrix algebras,
//! from raw matrices, permutation group pairs, or the symmetric and
//! alternating series.
//!
//! Exit codes: 0 success, 1 input error, 2 violated internal theorem. The
//! last kind is always a bug; user input can never legitimately produce it.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use subdepth::analysis::{analyze_matrix, analyze_pair, AnalysisError, AnalysisReport};
use subdepth::bratteli::{build_graph, DotOptions};
use subdepth::chartab::assets;
use subdepth::chartab::generate::{table_generate, TableKind};
use subdepth::chartab::ChartabError;
use subdepth::checks;
use subdepth::intmatrix::{
    check_tensor_bound, check_tower_embedding, check_transpose_theorem, parse_matrix, Matrix,
    MatrixError,
};
use subdepth::perm::{parse_generators, MinConjugates, PermGroup, DEFAULT_ENUMERATION_CAP};
use subdepth::young;

/// Largest n for which the family commands rerun the matrix oracle.
const FAMILY_ORACLE_CAP: usize = 8;
/// Largest n for which the family commands materialize the matrix.
const FAMILY_MATRIX_CAP: usize = 12;

#[derive(Parser)]
#[command(
    name = "subdepth",
    version,
    about = "Depth of inclusions of multimatrix algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Depth computations on induction-restriction matrix files
    Matrix {
        #[command(subcommand)]
        cmd: MatrixCmd,
    },
    /// Analysis of a subgroup pair given by permutation generators
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// The symmetric group series S_n < S_{n+1}
    Sym {
        #[command(subcommand)]
        cmd: FamilyCmd,
    },
    /// The alternating group series A_n < A_{n+1}
    Alt {
        #[command(subcommand)]
        cmd: FamilyCmd,
    },
    /// Character table generation
    Chartab {
        #[command(subcommand)]
        cmd: ChartabCmd,
    },
    /// Run the built-in verification table: every published example and
    /// theorem, recomputed from scratch
    Verify,
    /// Write the bundled character tables and matrices to a directory
    DumpAssets {
        /// Target directory; tables/ and matrices/ are created inside
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum MatrixCmd {
    /// Depth, minimal q, and the graph cross-check for a matrix file
    Depth {
        file: PathBuf,
        /// Emit the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// k-th alternating power: M, M M^t, M M^t M, ... in file format
    Power {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Kronecker product of two matrix files
    Tensor {
        a: PathBuf,
        b: PathBuf,
        /// Output file; stdout when absent
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Verify the transpose, tower, and tensor theorems on one matrix
    Props { file: PathBuf },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Full report: inclusion matrix, depth, bounds, graph data
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Number of points the permutations act on
    #[arg(long)]
    degree: usize,
    /// Generators of the ambient group, e.g. "(1,2), (1,2,3,4)"
    #[arg(long)]
    group: String,
    /// Generators of the subgroup
    #[arg(long)]
    subgroup: String,
    /// Directory of .tab files tried before bundled and structural tables
    /// (SUBDEPTH_TABLE_DIR is the fallback)
    #[arg(long)]
    tables: Option<PathBuf>,
    /// Write the inclusion graph in DOT format to this file
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Emit the full report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Closed-form depth at level n, with the matrix oracle for small n
    Depth { n: usize },
    /// The branching matrix at level n in file format
    Matrix {
        n: usize,
        /// Output file; stdout when absent
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ChartabCmd {
    /// Generate a table: kind is cyclic, dihedral, or symmetric
    Gen {
        kind: String,
        n: usize,
        /// Output file; stdout when absent
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ChartabError> for CliError {
    fn from(e: ChartabError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn internal_error(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

fn main() -> ExitCode {
    // Die quietly when the reader of a pipe goes away, instead of turning
    // the write failure into a panic with a backtrace.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    // A panic past this point is a broken internal invariant, the same
    // class of failure as a theorem check, so it maps to exit 2.
    match catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            eprintln!("internal invariant violated: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Matrix { cmd } => run_matrix(cmd),
        Command::Group { cmd } => match cmd {
            GroupCmd::Analyze(args) => run_analyze(args),
        },
        Command::Sym { cmd } => run_family(cmd, Family::Sym),
        Command::Alt { cmd } => run_family(cmd, Family::Alt),
        Command::Chartab { cmd } => run_chartab(cmd),
        Command::Verify => run_verify(),
        Command::DumpAssets { out } => run_dump_assets(&out),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, content)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn matrix_file_string(m: &Matrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn depth_lines(report: &AnalysisReport) -> String {
    let mut out = String::new();
    writeln!(out, "size: {} x {}", report.rows, report.cols).unwrap();
    writeln!(
        out,
        "depth = {} (least depth {}{})",
        report.depth,
        report.least_depth,
        if report.depth_one {
            ", depth-one pair"
        } else {
            ""
        }
    )
    .unwrap();
    writeln!(out, "minimal q = {}", report.minimal_q).unwrap();
    writeln!(
        out,
        "graph: odd depth {}, even depth {}, {} component{}",
        report.odd_depth,
        report.even_depth,
        report.components,
        if report.components == 1 { "" } else { "s" }
    )
    .unwrap();
    out
}

fn report_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("reports always serialize")
}

fn run_matrix(cmd: MatrixCmd) -> Result<(), CliError> {
    match cmd {
        MatrixCmd::Depth { file, json } => {
            let matrix = parse_matrix(&read_file(&file)?)?;
            let report = analyze_matrix(&file.display().to_string(), &matrix)?;
            if json {
                println!("{}", report_json(&report));
            } else {
                println!("source: {}", report.description);
                print!("{}", depth_lines(&report));
            }
            Ok(())
        }
        MatrixCmd::Power { file, k } => {
            if k == 0 {
                return Err(CliError::Input("the exponent must be at least 1".into()));
            }
            let matrix = parse_matrix(&read_file(&file)?)?;
            print!("{}", matrix_file_string(&matrix.alt_power(k).value));
            Ok(())
        }
        MatrixCmd::Tensor { a, b, out } => {
            let left = parse_matrix(&read_file(&a)?)?;
            let right = parse_matrix(&read_file(&b)?)?;
            let product = left.tensor(&right);
            write_output(out.as_deref(), &product.to_file_string())
        }
        MatrixCmd::Props { file } => {
            let matrix = parse_matrix(&read_file(&file)?)?;
            let transpose = check_transpose_theorem(&matrix).map_err(internal_error)?;
            println!(
                "transpose: least depth {} -> {} (within one, even stays)",
                transpose.least_depth, transpose.transpose_least_depth
            );
            let tower = check_tower_embedding(&matrix).map_err(internal_error)?;
            println!(
                "tower: P = M^({}) satisfies P P^t P <= {} P",
                tower.power_exponent, tower.q
            );
            let tensor = check_tensor_bound(&matrix, &matrix).map_err(internal_error)?;
            println!(
                "tensor with itself: least depth {} (factor bound {})",
                tensor.tensor_least_depth,
                tensor.left_least_depth.max(tensor.right_least_depth)
            );
            Ok(())
        }
    }
}

fn group_lines(report: &AnalysisReport) -> String {
    let section = report.group.as_ref().expect("group analysis has a section");
    let bounds = &section.bounds;
    let mut out = String::new();
    writeln!(
        out,
        "pair: {} (group order {}, subgroup order {}, degree {})",
        report.description, bounds.group_order, bounds.subgroup_order, section.degree
    )
    .unwrap();
    writeln!(
        out,
        "tables: {} over {}",
        section.subgroup_table, section.group_table
    )
    .unwrap();
    writeln!(out, "inclusion matrix:").unwrap();
    for row in &report.inclusion {
        writeln!(out, "  {}", row.join(" ")).unwrap();
    }
    out.push_str(&depth_lines(report));
    writeln!(
        out,
        "core: order {}, central: {}, subgroup normal: {}, orbits on core = {}",
        bounds.core_order,
        yes_no(bounds.core_is_central),
        yes_no(bounds.is_normal),
        section.core_orbits
    )
    .unwrap();
    let (m, exact, witnesses) = match &bounds.min_conjugates {
        MinConjugates::Exact { m, witnesses } => (*m, true, witnesses),
        MinConjugates::UpperBound { m, witnesses } => (*m, false, witnesses),
    };
    let words: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
    writeln!(
        out,
        "conjugates meeting in the core: m = {m} ({}), conjugators: {}",
        if exact { "exact" } else { "upper bound" },
        words.join(" ")
    )
    .unwrap();
    let eigen = &bounds.eigen;
    let values: Vec<String> = eigen.eigenvalues.iter().map(|r| r.to_string()).collect();
    writeln!(
        out,
        "eigenvalues of M M^t: {}{}",
        values.join(", "),
        if eigen.zero_multiplicity > 0 {
            format!(" and 0 with multiplicity {}", eigen.zero_multiplicity)
        } else {
            String::new()
        }
    )
    .unwrap();
    writeln!(
        out,
        "bounds: conjugate intersection {}, eigenvalue {} ({} distinct, fusion injective: {}), normalizer {}",
        bounds.core_bound,
        eigen.eigen_bound,
        eigen.distinct_nonzero,
        yes_no(eigen.fusion_injective),
        bounds.normalizer_bound
    )
    .unwrap();
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    if args.degree == 0 {
        return Err(CliError::Input("the degree must be at least 1".into()));
    }
    let build = |text: &str| -> Result<PermGroup, CliError> {
        let gens = parse_generators(text, args.degree)
            .map_err(|e| CliError::Input(format!("bad generators {text:?}: {e}")))?;
        PermGroup::generate(args.degree, gens, DEFAULT_ENUMERATION_CAP).map_err(input_error)
    };
    let g = build(&args.group)?;
    let h = build(&args.subgroup)?;
    let tables = args
        .tables
        .or_else(|| std::env::var_os("SUBDEPTH_TABLE_DIR").map(PathBuf::from));
    let description = format!("<{}> over <{}>", args.subgroup, args.group);
    let report = analyze_pair(&description, &g, &h, tables.as_deref())?;

    if let Some(dot_path) = &args.dot {
        let matrix = parse_inclusion(&report)?;
        let graph = build_graph(&matrix);
        let options = DotOptions {
            graph_name: Some("inclusion".into()),
            bottom_labels: None,
            top_labels: None,
        };
        std::fs::write(dot_path, graph.export_dot(&options))
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", dot_path.display())))?;
    }

    if args.json {
        println!("{}", report_json(&report));
    } else {
        print!("{}", group_lines(&report));
    }
    Ok(())
}

/// The report keeps the matrix as decimal strings; rebuild it for DOT export.
fn parse_inclusion(
    report: &AnalysisReport,
) -> Result<subdepth::intmatrix::IrredundantMatrix, CliError> {
    let mut text = format!("{} {}\n", report.rows, report.cols);
    for row in &report.inclusion {
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    parse_matrix(&text).map_err(internal_error)
}

enum Family {
    Sym,
    Alt,
}

fn run_family(cmd: FamilyCmd, family: Family) -> Result<(), CliError> {
    let min_n = match family {
        Family::Sym => 1,
        Family::Alt => 2,
    };
    match cmd {
        FamilyCmd::Depth { n } => {
            if n < min_n || n > 10_000 {
                return Err(CliError::Input(format!(
                    "n must be between {min_n} and 10000"
                )));
            }
            let (report, formula) = match family {
                Family::Sym => (young::sym_depth_checked(n, FAMILY_ORACLE_CAP), "2n - 1"),
                Family::Alt => (
                    young::alt_depth_checked(n, FAMILY_ORACLE_CAP),
                    "2(n - ceil(sqrt n)) + 1",
                ),
            };
            let report = report.map_err(internal_error)?;
            let oracle = if report.oracle_checked {
                "matrix oracle: agree".to_string()
            } else {
                format!("matrix oracle: skipped (n > {FAMILY_ORACLE_CAP})")
            };
            println!("{} (= {formula}), {oracle}", report.depth);
            Ok(())
        }
        FamilyCmd::Matrix { n, out } => {
            if n < min_n || n > FAMILY_MATRIX_CAP {
                return Err(CliError::Input(format!(
                    "n must be between {min_n} and {FAMILY_MATRIX_CAP}"
                )));
            }
            let matrix = match family {
                Family::Sym => young::sym_inclusion_matrix(n),
                Family::Alt => young::alt_inclusion_matrix(n),
            };
            write_output(out.as_deref(), &matrix.to_file_string())
        }
    }
}

fn run_chartab(cmd: ChartabCmd) -> Result<(), CliError> {
    match cmd {
        ChartabCmd::Gen { kind, n, out } => {
            let kind = TableKind::parse(&kind).ok_or_else(|| {
                CliError::Input(format!(
                    "unknown kind {kind:?}: expected cyclic, dihedral, or symmetric"
                ))
            })?;
            let table = table_generate(kind, n)?;
            write_output(out.as_deref(), &table.to_file_string())
        }
    }
}

fn run_verify() -> Result<(), CliError> {
    let rows = checks::run_all();
    let mut failures = 0;
    for row in &rows {
        let status = if row.passed { "PASS" } else { "FAIL" };
        println!("{:02} {status} {} [{}]", row.id, row.name, row.details);
        if !row.passed {
            failures += 1;
        }
    }
    if failures > 0 {
        return Err(CliError::Internal(format!(
            "{failures} verification row(s) failed"
        )));
    }
    println!("all {} rows pass", rows.len());
    Ok(())
}

fn run_dump_assets(out: &Path) -> Result<(), CliError> {
    let tables_dir = out.join("tables");
    let matrices_dir = out.join("matrices");
    for dir in [&tables_dir, &matrices_dir] {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Input(format!("cannot create {}: {e}", dir.display())))?;
    }
    for (label, text) in assets::TABLES {
        let path = tables_dir.join(format!("{label}.tab"));
        std::fs::write(&path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    for (name, text) in assets::MATRICES {
        let path = matrices_dir.join(name);
        std::fs::write(&path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
