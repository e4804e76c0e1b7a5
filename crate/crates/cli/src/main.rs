use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use hermsig::realform::{all_presets, RealFormData};
use hermsig::rootsys::{build_root_system, Family};
use hermsig_cli::{human, merge, run_case, run_corpus, Basis, CaseError, CaseFile, CorpusFilter, Overrides};

#[derive(Parser)]
#[command(name = "hermsig", version, about = "Signatures of invariant hermitian forms on irreducible representations of real reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Human,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Fundamental,
    SimpleRoot,
}

#[derive(Subcommand)]
enum Command {
    /// Signature of a single representation.
    Sig {
        /// Preset name, compact(T) or vogan(T;inv=..;paint=..).
        #[arg(long)]
        group: Option<String>,
        /// Highest weight: comma-separated integers, or adjoint, zero, rho.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        /// Run the brute-force oracles (default).
        #[arg(long, overrides_with = "no_oracle", action = ArgAction::SetTrue)]
        oracle: bool,
        #[arg(long, overrides_with = "oracle", action = ArgAction::SetTrue)]
        no_oracle: bool,
        /// Oracles are skipped above this dimension.
        #[arg(long)]
        dim_cap: Option<u128>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Case file (TOML); flags override its values.
        #[arg(long)]
        case: Option<PathBuf>,
        /// Record the wall-clock time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Check the formula against the oracles over presets and small weights.
    Corpus {
        /// Restrict to these families (repeatable), e.g. --family A --family G.
        #[arg(long = "family")]
        families: Vec<String>,
        #[arg(long, default_value_t = 1)]
        min_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 200)]
        dim_cap: u128,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the preset real forms.
    Forms {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn fail(e: &CaseError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Sig { group, weight, basis, oracle, no_oracle, dim_cap, format, case, timing } => {
            let file = match case {
                Some(p) => match CaseFile::load(&p) {
                    Ok(f) => f,
                    Err(e) => return fail(&e),
                },
                None => CaseFile::default(),
            };
            let flags = Overrides {
                group,
                weight,
                basis: basis.map(|b| match b {
                    BasisArg::Fundamental => Basis::Fundamental,
                    BasisArg::SimpleRoot => Basis::SimpleRoot,
                }),
                run_oracles: if no_oracle {
                    Some(false)
                } else if oracle {
                    Some(true)
                } else {
                    None
                },
                dim_cap,
                timing: timing.then_some(true),
            };
            let spec = match merge(file, flags) {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            let doc = match run_case(&spec) {
                Ok(d) => d,
                Err(e) => return fail(&e),
            };
            match format {
                Format::Human => emit(&doc.to_human()),
                Format::Machine => emit(&format!("{}\n", doc.to_json())),
            }
            if doc.has_disagreement() {
                ExitCode::from(5)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Corpus { families, min_rank, max_rank, dim_cap, jobs, format } => {
            let mut fams = Vec::new();
            for f in &families {
                let mut chars = f.trim().chars();
                match (chars.next().and_then(Family::from_letter), chars.next()) {
                    (Some(fam), None) => fams.push(fam),
                    _ => return fail(&CaseError::input("--family", format!("unknown family {f:?}"))),
                }
            }
            let filter = CorpusFilter { families: fams, min_rank, max_rank };
            let summary = run_corpus(&filter, dim_cap, jobs);
            match format {
                Format::Human => emit(&human::render_corpus(&summary)),
                Format::Machine => emit(&format!("{}\n", serde_json::to_string_pretty(&summary).expect("summary serializes"))),
            }
            ExitCode::from(summary.exit_code() as u8)
        }
        Command::Forms { format } => {
            let mut rows = Vec::new();
            for p in all_presets() {
                let rs = build_root_system(p.diagram.cartan_type()).expect("preset");
                let rf = RealFormData::new(&p.diagram, &rs).expect("preset").with_name(&p.name);
                rows.push(hermsig_cli::report::summarize_form(&rf));
            }
            match format {
                Format::Human => {
                    let mut text = format!("{:<10} {:<32} {:>4} {:>4} {:>4} {:>3}\n", "name", "diagram", "dimk", "dims", "dima", "r");
                    for r in &rows {
                        text += &format!(
                            "{:<10} {:<32} {:>4} {:>4} {:>4} {:>3}\n",
                            r.name.as_deref().unwrap_or(""),
                            r.diagram,
                            r.dims.k,
                            r.dims.s,
                            r.dims.a,
                            r.r
                        );
                    }
                    emit(&text);
                }
                Format::Machine => emit(&format!("{}\n", serde_json::to_string_pretty(&rows).expect("serializes"))),
            }
            ExitCode::SUCCESS
        }
    }
}
