//! Command-line front end: validation, solving, decomposition, generation,
//! and the grid experiment over the documented file formats.
//!
//! Exit codes: 0 success, 1 domain errors (disconnected base space, invalid
//! form, exhausted retries), 2 usage/parse/io errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hodge_choice::experiment::{
    plot_data, plot_data_json, run_grid, summarize_csv, GridSpec, RunOptions,
};
use hodge_choice::gen::{random_game, random_marginal, GenConfig, GenError};
use hodge_choice::io::{
    parse_kv, read_game_json, read_marginal_json, read_matrix_pair, result_json, write_game_json,
    write_marginal_json, write_matrix_pair, ReadError,
};
use hodge_choice::{
    copeland_choice, copeland_scores_int, ehpc_with, fixtures, hpc_with, FormGame, Method,
    SolveOptions,
};

#[derive(Parser)]
#[command(
    name = "hodge-choice",
    version,
    about = "Dominance-game solver: Copeland and Hodge potential choice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    /// Game JSON: {"alternatives": [...], "dominances": [[i,j], ...]}
    Json,
    /// Two CSV blocks of integers: W, blank line, R
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Direct,
    Iterative,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Direct => Method::Direct,
            MethodArg::Iterative => Method::Iterative,
        }
    }
}

#[derive(Args)]
struct SolverArgs {
    /// Laplacian solve path
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    #[arg(long)]
    tol_abs: Option<f64>,
    #[arg(long)]
    tol_rel: Option<f64>,
    /// Iteration cap as a multiple of n (iterative path)
    #[arg(long)]
    max_iter_factor: Option<f64>,
    /// key=value config file; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
}

impl SolverArgs {
    fn resolve(&self) -> Result<SolveOptions, CliError> {
        let mut opts = SolveOptions::default();
        if let Some(path) = &self.config {
            for (key, value) in parse_kv(&read_file(path)?).map_err(read_to_cli)? {
                apply_config_key(&mut opts, &key, &value)?;
            }
        }
        if let Some(m) = self.method {
            opts.method = m.into();
        }
        if let Some(v) = self.tol_abs {
            opts.tol_abs = v;
        }
        if let Some(v) = self.tol_rel {
            opts.tol_rel = v;
        }
        if let Some(v) = self.max_iter_factor {
            opts.max_iter_factor = v;
        }
        Ok(opts)
    }
}

fn apply_config_key(opts: &mut SolveOptions, key: &str, value: &str) -> Result<(), CliError> {
    let bad = |what: &str| CliError::Usage(format!("config: invalid {what} {value:?}"));
    match key {
        "solver.method" => {
            opts.method = match value {
                "auto" => Method::Auto,
                "direct" => Method::Direct,
                "iterative" => Method::Iterative,
                _ => return Err(bad("solver.method")),
            }
        }
        "solver.tol_abs" => opts.tol_abs = value.parse().map_err(|_| bad("solver.tol_abs"))?,
        "solver.tol_rel" => opts.tol_rel = value.parse().map_err(|_| bad("solver.tol_rel"))?,
        "solver.max_iter_factor" => {
            opts.max_iter_factor = value.parse().map_err(|_| bad("solver.max_iter_factor"))?
        }
        _ => return Err(CliError::Usage(format!("config: unknown key {key:?}"))),
    }
    Ok(())
}

#[derive(Subcommand)]
enum Command {
    /// Check a game file against the matrix-pair encoding conditions
    Validate {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<FileFormat>,
    },
    /// Copeland scores plus the Hodge potential result for a game
    Solve {
        input: PathBuf,
        /// Report Copeland data only, skipping the Laplacian solve
        #[arg(long)]
        copeland_only: bool,
        #[arg(long, value_enum)]
        format: Option<FileFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Full decomposition: potential, gradient and harmonic matrices
    Decompose {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<FileFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Solve a margin-weighted game (marginal JSON input)
    Ehpc {
        input: PathBuf,
        /// Include the dense gradient and harmonic matrices
        #[arg(long)]
        forms: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Generate a seeded random connected game
    Gen {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        eta: Option<f64>,
        #[arg(long)]
        p_mutual: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Keep regular draws instead of resampling orientations
        #[arg(long)]
        allow_regular: bool,
        #[arg(long)]
        max_retries: Option<usize>,
        /// Generate a margin-weighted game instead of a plain one
        #[arg(long)]
        marginal: bool,
        /// Margin upper bound for --marginal (uniform on (0, max])
        #[arg(long, default_value_t = 10.0)]
        margin_max: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        format: Option<FileFormat>,
        /// key=value config file; flags take precedence
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Run the (n, eta) grid comparison harness
    Experiment {
        #[arg(long)]
        grid: PathBuf,
        /// CSV output path
        #[arg(long)]
        out: PathBuf,
        /// Conditional-averages JSON output path
        #[arg(long)]
        plot_data: Option<PathBuf>,
        /// Spool per-game audit records, one JSONL file per cell
        #[arg(long)]
        audit_dir: Option<PathBuf>,
        /// Report 0 for solve timing so the CSV is byte-stable
        #[arg(long)]
        no_timing: bool,
        /// Override the grid file's base seed
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Write the bundled example games to a directory
    Examples {
        #[arg(long, default_value = "example-games")]
        out_dir: PathBuf,
    },
}

enum CliError {
    /// Invalid games, disconnected bases, exhausted retries: exit 1.
    Domain(String),
    /// Bad flags, unparseable files, filesystem failures: exit 2.
    Usage(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Usage(m) => m,
        }
    }
}

fn read_to_cli(err: ReadError) -> CliError {
    if err.is_syntactic() {
        CliError::Usage(err.to_string())
    } else {
        CliError::Domain(err.to_string())
    }
}

fn gen_to_cli(err: GenError) -> CliError {
    match err {
        GenError::InvalidConfig(_) => CliError::Usage(err.to_string()),
        GenError::RetriesExhausted { .. } => CliError::Domain(err.to_string()),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
    }
}

fn detect_format(path: &Path, flag: Option<FileFormat>) -> Result<FileFormat, CliError> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Ok(FileFormat::Json),
        Some("csv") => Ok(FileFormat::Csv),
        _ => Err(CliError::Usage(format!(
            "cannot infer format of {}; pass --format",
            path.display()
        ))),
    }
}

fn load_game(path: &Path, flag: Option<FileFormat>) -> Result<FormGame, CliError> {
    let text = read_file(path)?;
    match detect_format(path, flag)? {
        FileFormat::Json => Ok(read_game_json(&text).map_err(read_to_cli)?.to_form()),
        FileFormat::Csv => read_matrix_pair(&text).map_err(read_to_cli),
    }
}

fn cmd_validate(input: &Path, format: Option<FileFormat>) -> Result<(), CliError> {
    let fg = load_game(input, format)?;
    let completeness = fg
        .completeness()
        .map(|c| c.to_string())
        .unwrap_or_else(|_| "n/a".into());
    println!(
        "valid: n={}, edges={}, completeness={}, connected={}",
        fg.n(),
        fg.base().edge_count(),
        completeness,
        fg.is_connected()
    );
    Ok(())
}

fn cmd_solve(
    input: &Path,
    copeland_only: bool,
    format: Option<FileFormat>,
    out: Option<&PathBuf>,
    solver: &SolverArgs,
) -> Result<(), CliError> {
    let fg = load_game(input, format)?;
    let cs = copeland_scores_int(&fg);
    let cw = copeland_choice(&fg);
    let text = if copeland_only {
        result_json(fg.labels(), &cs, &cw, None, false)
    } else {
        let opts = solver.resolve()?;
        let res = hpc_with(&fg, &opts).map_err(|e| CliError::Domain(e.to_string()))?;
        result_json(fg.labels(), &cs, &cw, Some(&res), false)
    };
    write_output(out, &text)
}

fn cmd_decompose(
    input: &Path,
    format: Option<FileFormat>,
    out: Option<&PathBuf>,
    solver: &SolverArgs,
) -> Result<(), CliError> {
    let fg = load_game(input, format)?;
    let opts = solver.resolve()?;
    let res = hpc_with(&fg, &opts).map_err(|e| CliError::Domain(e.to_string()))?;
    let text = result_json(
        fg.labels(),
        &copeland_scores_int(&fg),
        &copeland_choice(&fg),
        Some(&res),
        true,
    );
    write_output(out, &text)
}

fn cmd_ehpc(
    input: &Path,
    forms: bool,
    out: Option<&PathBuf>,
    solver: &SolverArgs,
) -> Result<(), CliError> {
    let text = read_file(input)?;
    let mg = read_marginal_json(&text).map_err(read_to_cli)?;
    let opts = solver.resolve()?;
    let res = ehpc_with(&mg, &opts).map_err(|e| CliError::Domain(e.to_string()))?;
    let fg = mg.to_form_game();
    let payload = result_json(
        mg.labels(),
        &copeland_scores_int(&fg),
        &copeland_choice(&fg),
        Some(&res),
        forms,
    );
    write_output(out, &payload)
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    n: Option<usize>,
    eta: Option<f64>,
    p_mutual: Option<f64>,
    seed: Option<u64>,
    allow_regular: bool,
    max_retries: Option<usize>,
    marginal: bool,
    margin_max: f64,
    out: &PathBuf,
    format: Option<FileFormat>,
    config: Option<&PathBuf>,
) -> Result<(), CliError> {
    // config file supplies defaults, flags win
    let mut from_config: std::collections::BTreeMap<String, String> = Default::default();
    if let Some(path) = config {
        for (key, value) in parse_kv(&read_file(path)?).map_err(read_to_cli)? {
            let key = if key == "eta_target" {
                "eta".to_string()
            } else {
                key
            };
            if !matches!(
                key.as_str(),
                "n" | "eta" | "p_mutual" | "seed" | "max_retries"
            ) {
                return Err(CliError::Usage(format!("config: unknown key {key:?}")));
            }
            from_config.insert(key, value);
        }
    }
    let pick = |flag: Option<String>, key: &str| flag.or_else(|| from_config.get(key).cloned());
    let parse = |text: Option<String>, key: &str| -> Result<Option<f64>, CliError> {
        text.map(|t| {
            t.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("config: invalid {key} {t:?}")))
        })
        .transpose()
    };
    let n = match pick(n.map(|v| v.to_string()), "n") {
        Some(t) => t
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("invalid n {t:?}")))?,
        None => return Err(CliError::Usage("missing --n".into())),
    };
    let eta = parse(pick(eta.map(|v| v.to_string()), "eta"), "eta")?
        .ok_or_else(|| CliError::Usage("missing --eta".into()))?;
    let p_mutual = parse(
        pick(p_mutual.map(|v| v.to_string()), "p_mutual"),
        "p_mutual",
    )?
    .unwrap_or(0.2);
    let seed = match pick(seed.map(|v| v.to_string()), "seed") {
        Some(t) => t
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("invalid seed {t:?}")))?,
        None => 0,
    };
    let max_retries = match pick(max_retries.map(|v| v.to_string()), "max_retries") {
        Some(t) => t
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("invalid max_retries {t:?}")))?,
        None => 100,
    };

    let cfg = GenConfig {
        n,
        eta_target: eta,
        p_mutual,
        seed,
        require_irregular: !allow_regular,
        max_retries,
    };
    let format = detect_format(out, format)?;
    let text = if marginal {
        if format == FileFormat::Csv {
            return Err(CliError::Usage(
                "marginal games serialize as JSON only".into(),
            ));
        }
        write_marginal_json(&random_marginal(&cfg, margin_max).map_err(gen_to_cli)?)
    } else {
        let fg = random_game(&cfg).map_err(gen_to_cli)?;
        match format {
            FileFormat::Json => write_game_json(&fg.to_abstract()),
            FileFormat::Csv => write_matrix_pair(&fg),
        }
    };
    write_output(Some(out), &text)?;
    eprintln!("wrote {}", out.display());
    Ok(())
}

fn cmd_experiment(
    grid_path: &Path,
    out: &PathBuf,
    plot_path: Option<&PathBuf>,
    audit_dir: Option<&PathBuf>,
    no_timing: bool,
    seed: Option<u64>,
    solver: &SolverArgs,
) -> Result<(), CliError> {
    let text = read_file(grid_path)?;
    let mut grid: GridSpec =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("grid file: {e}")))?;
    if let Some(s) = seed {
        grid.seed = s;
    }
    let opts = RunOptions {
        timing: !no_timing,
        audit_dir: audit_dir.cloned(),
        solver: solver.resolve()?,
    };
    let cells = run_grid(&grid, &opts).map_err(|e| match e {
        hodge_choice::experiment::ExperimentError::Io(_) => CliError::Usage(e.to_string()),
        _ => CliError::Domain(e.to_string()),
    })?;
    write_output(Some(out), &summarize_csv(&cells))?;
    if let Some(p) = plot_path {
        write_output(Some(p), &plot_data_json(&plot_data(&cells)))?;
    }
    let failed: usize = cells.iter().map(|c| c.failed).sum();
    eprintln!(
        "ran {} cells x {} samples, {} failed",
        cells.len(),
        grid.samples,
        failed
    );
    Ok(())
}

fn cmd_examples(out_dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", out_dir.display())))?;
    let x5 = fixtures::x5();
    let files: Vec<(&str, String)> = vec![
        ("x5.json", write_game_json(&x5)),
        ("x5.csv", write_matrix_pair(&x5.to_form())),
        (
            "cycle_replacement.json",
            write_game_json(&fixtures::x5_cycle_replaced()),
        ),
        (
            "mutual_removal.json",
            write_game_json(&fixtures::x5_mutual_removed()),
        ),
        (
            "marginal.json",
            write_marginal_json(&fixtures::x5_marginal()),
        ),
    ];
    for (name, text) in files {
        let path = out_dir.join(name);
        fs::write(&path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Validate { input, format } => cmd_validate(input, *format),
        Command::Solve {
            input,
            copeland_only,
            format,
            out,
            solver,
        } => cmd_solve(input, *copeland_only, *format, out.as_ref(), solver),
        Command::Decompose {
            input,
            format,
            out,
            solver,
        } => cmd_decompose(input, *format, out.as_ref(), solver),
        Command::Ehpc {
            input,
            forms,
            out,
            solver,
        } => cmd_ehpc(input, *forms, out.as_ref(), solver),
        Command::Gen {
            n,
            eta,
            p_mutual,
            seed,
            allow_regular,
            max_retries,
            marginal,
            margin_max,
            out,
            format,
            config,
        } => cmd_gen(
            *n,
            *eta,
            *p_mutual,
            *seed,
            *allow_regular,
            *max_retries,
            *marginal,
            *margin_max,
            out,
            *format,
            config.as_ref(),
        ),
        Command::Experiment {
            grid,
            out,
            plot_data,
            audit_dir,
            no_timing,
            seed,
            solver,
        } => cmd_experiment(
            grid,
            out,
            plot_data.as_ref(),
            audit_dir.as_ref(),
            *no_timing,
            *seed,
            solver,
        ),
        Command::Examples { out_dir } => cmd_examples(out_dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}
