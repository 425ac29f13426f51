mod args;
mod error;
mod graph;
mod logic;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use theoremnet_metamath::{extract_dependencies, parse_mm, ExtractOptions};

use args::{Cli, Command, MetamathCmd};
use error::CliError;
use report::{Output, Report};

fn dispatch(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Corpus(cmd) => graph::corpus(cmd, cli.format, cli.seed),
        Command::Stats(cmd) => graph::stats(cmd),
        Command::Deps { input, id } => graph::deps(&input.corpus, &id),
        Command::Cone(a) => graph::cone(a),
        Command::Chains { input, id } => graph::chains(&input.corpus, &id),
        Command::Foliate { input, custom, layers } => {
            graph::foliate(&input.corpus, custom.as_deref(), layers)
        }
        Command::Branchial { input, slice, dt, custom, any_path } => {
            graph::branchial(&input.corpus, slice, dt, custom.as_deref(), any_path)
        }
        Command::Growth(a) => graph::growth(a, false),
        Command::Dimension(a) => graph::growth(a, true),
        Command::Compile { input, target, metric, top } => {
            graph::compile(&input.corpus, &target, metric, top)
        }
        Command::Superaxiom(cmd) => graph::superaxiom(cmd),
        Command::Metamath(MetamathCmd::Extract { file, include_syntax, summary }) => {
            let db = parse_mm(&graph::read(&file)?)
                .map_err(|e| CliError::Data(format!("{}: {e}", file.display())))?;
            let c = extract_dependencies(&db, ExtractOptions { include_syntax })?;
            if !summary {
                return Ok(graph::export_as(&c, cli.format, false));
            }
            Ok(Output::Report(
                Report::default()
                    .field("statements", db.statements().len())
                    .field("nodes", c.len())
                    .field("axioms", c.axiom_count())
                    .field("theorems", c.len() - c.axiom_count())
                    .field("edges", c.edge_count())
                    .field("references", c.reference_count()),
            ))
        }
        Command::Logic(cmd) => logic::run(cmd),
        Command::Books { input, groups } => graph::books(&input.corpus, groups),
        Command::Reduce { input } => graph::reduce(&input.corpus),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    let output = cli.output.clone();
    let text = report::render(dispatch(cli)?, format)?;
    match output {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
        }
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Data(e.to_string())),
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("theoremnet: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
