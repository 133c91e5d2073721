//! Thin command-line front end over the library, speaking the JSON
//! formats documented in SCHEMA.md.
//!
//! Exit codes: 0 success (certificate found, where relevant), 1 malformed
//! input, 2 validation failure, 3 search exhausted, 4 out of coverage.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use fcomp::bounds::{lower_bound_gamma, lower_bound_general};
use fcomp::capacity::{capacity_oracle, Coverage};
use fcomp::codes::{is_realizable, paper_code, rate_of, SourceCode, CATALOG};
use fcomp::json::{
    CodeJson, ModelJson, NetworkJson, PermPairJson, RateReportJson, SearchOutcomeJson,
};
use fcomp::model::{classify, enumerate_states, find_isomorphism, MatrixType, Model};
use fcomp::network::to_network;
use fcomp::search::{search_linear, search_table, CodeClass, SearchSpec};

#[derive(Parser)]
#[command(name = "fcomp", version, about = "zero-error function-compression workbench")]
struct Cli {
    /// Dump every catalog model/code pair into a directory and exit.
    #[arg(long, value_name = "DIR", global = true)]
    seed_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the target matrix of a model.
    Classify {
        #[arg(long)]
        model: PathBuf,
    },
    /// Print the cut-set lower bounds of a model.
    Bound {
        #[arg(long)]
        model: PathBuf,
    },
    /// Print the exact capacity of a model, when characterized.
    Capacity {
        #[arg(long)]
        model: PathBuf,
    },
    /// Check a code's admissibility and rate against a model.
    Verify {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        code: PathBuf,
    },
    /// Exhaustively search for an admissible code at fixed (k, n).
    Search {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "class", default_value = "linear")]
        class: String,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Emit the induced network as a JSON edge list.
    Transform {
        #[arg(long)]
        model: PathBuf,
    },
    /// Find a source/encoder relabeling mapping one model onto another.
    Isomorphic {
        #[arg(long = "model-a")]
        model_a: PathBuf,
        #[arg(long = "model-b")]
        model_b: PathBuf,
    },
    /// List every connectivity state for (s, m).
    Enumerate {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
    },
    /// Emit a catalog model/code pair by id.
    PaperCode {
        #[arg(long)]
        id: String,
    },
}

enum CliError {
    Malformed(String),
    Validation(String),
}

impl CliError {
    fn exit(&self) -> ExitCode {
        match self {
            CliError::Malformed(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            CliError::Validation(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

fn load_model(path: &Path) -> Result<Model, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    let mj: ModelJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    mj.to_model().map_err(|e| CliError::Validation(e.to_string()))
}

fn load_code(path: &Path, model: &Model) -> Result<SourceCode, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    let cj: CodeJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    cj.to_code(model).map_err(|e| CliError::Validation(e.to_string()))
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn seed_fixtures(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", dir.display())))?;
    for id in CATALOG {
        let (model, code) = paper_code(id).map_err(|e| CliError::Validation(e.to_string()))?;
        let mj = serde_json::to_string_pretty(&ModelJson::from_model(&model)).unwrap();
        let cj = serde_json::to_string_pretty(&CodeJson::from_code(&SourceCode::Linear(code))).unwrap();
        std::fs::write(dir.join(format!("{id}-model.json")), mj)
            .map_err(|e| CliError::Malformed(e.to_string()))?;
        std::fs::write(dir.join(format!("{id}-code.json")), cj)
            .map_err(|e| CliError::Malformed(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(dir) = &cli.seed_fixtures {
        seed_fixtures(dir)?;
        if cli.command.is_none() {
            return Ok(ExitCode::SUCCESS);
        }
    }
    let Some(command) = cli.command else {
        return Err(CliError::Malformed("a subcommand is required".into()));
    };
    match command {
        Command::Classify { model } => {
            let model = load_model(&model)?;
            let tag = match classify(model.t()) {
                MatrixType::SumRank1 => "SumRank1",
                MatrixType::IdentityRankS => "IdentityRankS",
                MatrixType::Type1 => "Type1",
                MatrixType::Type2 => "Type2",
                MatrixType::Unclassified => "Unclassified",
            };
            print_json(&json!({ "type": tag }));
        }
        Command::Bound { model } => {
            let model = load_model(&model)?;
            let gamma = lower_bound_gamma(&model);
            let general =
                lower_bound_general(&model).map_err(|e| CliError::Validation(e.to_string()))?;
            print_json(&json!({
                "gamma": gamma.to_string(),
                "general": general.to_string(),
            }));
        }
        Command::Capacity { model } => {
            let model = load_model(&model)?;
            match capacity_oracle(&model) {
                Coverage::Covered(res) => {
                    print_json(&json!({
                        "value": res.value.to_string(),
                        "provenance": res.provenance.label(),
                    }));
                }
                Coverage::OutOfCoverage => {
                    print_json(&json!({ "out_of_coverage": true }));
                    return Ok(ExitCode::from(4));
                }
            }
        }
        Command::Verify { model, code } => {
            let model = load_model(&model)?;
            let code = load_code(&code, &model)?;
            let admissible =
                is_realizable(&model, &code).map_err(|e| CliError::Validation(e.to_string()))?;
            let report = rate_of(&model, &code).map_err(|e| CliError::Validation(e.to_string()))?;
            let rj = RateReportJson::from_report(&report);
            print_json(&json!({
                "admissible": admissible,
                "n_per_encoder": rj.n_per_encoder,
                "n": rj.n,
                "k": rj.k,
                "rate": rj.rate,
            }));
        }
        Command::Search { model, k, n, class, workers } => {
            let model = load_model(&model)?;
            let class = match class.as_str() {
                "linear" => CodeClass::Linear,
                "table" => CodeClass::Table,
                other => return Err(CliError::Malformed(format!("unknown class {other:?}"))),
            };
            let spec = SearchSpec { model, k, n_max: n, class, workers };
            let outcome = match class {
                CodeClass::Linear => search_linear(&spec),
                CodeClass::Table => search_table(&spec),
            }
            .map_err(|e| CliError::Validation(e.to_string()))?;
            let found = outcome.found.is_some();
            print_json(&serde_json::to_value(SearchOutcomeJson::from_outcome(&outcome)).unwrap());
            if !found {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Transform { model } => {
            let model = load_model(&model)?;
            let net = to_network(&model);
            print_json(&serde_json::to_value(NetworkJson::from_network(&net)).unwrap());
        }
        Command::Isomorphic { model_a, model_b } => {
            let a = load_model(&model_a)?;
            let b = load_model(&model_b)?;
            match find_isomorphism(&a, &b) {
                Some(pp) => print_json(&serde_json::to_value(PermPairJson::from_pair(&pp)).unwrap()),
                None => print_json(&serde_json::Value::Null),
            }
        }
        Command::Enumerate { s, m } => {
            let states = enumerate_states(s, m).map_err(|e| CliError::Validation(e.to_string()))?;
            let out: Vec<Vec<Vec<usize>>> = states
                .iter()
                .map(|st| {
                    (0..st.s())
                        .map(|i| st.gamma(i).iter().map(|&j| j + 1).collect())
                        .collect()
                })
                .collect();
            print_json(&json!({ "count": out.len(), "states": out }));
        }
        Command::PaperCode { id } => {
            let (model, code) =
                paper_code(&id).map_err(|e| CliError::Malformed(e.to_string()))?;
            print_json(&json!({
                "model": serde_json::to_value(ModelJson::from_model(&model)).unwrap(),
                "code": serde_json::to_value(CodeJson::from_code(&SourceCode::Linear(code))).unwrap(),
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Let clap print its own help/version output with status 0.
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => e.exit(),
    }
}
