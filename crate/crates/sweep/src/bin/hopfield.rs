use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hopfield_sweep::{
    emit, find_preset, render, run_sweep_with_workers, verify, Format, RawConfig, SweepConfig,
    PRESETS, VERIFY_PRESETS,
};

/// Coherence and entanglement sweeps for two coupled bosonic modes.
///
/// Frequencies, temperatures and rates are in units of the matter
/// frequency. Numeric keys take a number, a comma list (`0.2,1,5`) or
/// `linspace START STOP N`; a key with several values becomes an axis.
#[derive(Parser)]
#[command(name = "hopfield", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a sweep from a config file and/or flags.
    Sweep {
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        keys: KeyFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Run a built-in figure preset, optionally with overrides.
    Preset {
        /// Preset name; omit with --list.
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        keys: KeyFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Compare the Gaussian pipeline with the Fock oracle.
    Verify {
        /// Verification preset; omit with --all or --list.
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
    },
    /// Print the fully resolved config of a preset or of the given flags.
    DumpConfig {
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        keys: KeyFlags,
    },
}

/// One flag per config key.
#[derive(Args, Default)]
struct KeyFlags {
    /// ground | thermal
    #[arg(long)]
    mode: Option<String>,
    /// Axis order, comma separated.
    #[arg(long)]
    axes: Option<String>,
    /// Report fields to emit, comma separated.
    #[arg(long)]
    outputs: Option<String>,
    #[arg(long)]
    variant: Option<String>,
    #[arg(long = "eta-a")]
    eta_a: Option<String>,
    #[arg(long)]
    g: Option<String>,
    /// Common bath temperature.
    #[arg(long)]
    t: Option<String>,
    #[arg(long = "t-a")]
    t_a: Option<String>,
    #[arg(long = "t-b")]
    t_b: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    kappa: Option<String>,
}

impl KeyFlags {
    fn to_raw(&self) -> Result<RawConfig> {
        let mut raw = RawConfig::default();
        let pairs = [
            ("mode", &self.mode),
            ("axes", &self.axes),
            ("outputs", &self.outputs),
            ("variant", &self.variant),
            ("eta_a", &self.eta_a),
            ("g", &self.g),
            ("t", &self.t),
            ("t_a", &self.t_a),
            ("t_b", &self.t_b),
            ("gamma", &self.gamma),
            ("kappa", &self.kappa),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                raw.set_text(key, v)?;
            }
        }
        Ok(raw)
    }
}

#[derive(Args)]
struct OutputFlags {
    /// Destination file; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,
}

fn resolve(base: Option<RawConfig>, keys: &KeyFlags) -> Result<SweepConfig> {
    let mut raw = base.unwrap_or_default();
    raw.merge(keys.to_raw()?);
    Ok(raw.resolve()?)
}

fn read_config(path: &PathBuf) -> Result<RawConfig> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(RawConfig::from_toml(&text)?)
}

fn preset_raw(name: &str) -> Result<RawConfig> {
    let preset =
        find_preset(name).with_context(|| format!("unknown preset `{name}` (try --list)"))?;
    Ok(RawConfig::from_toml(&preset.config().to_toml())?)
}

fn run_and_emit(config: &SweepConfig, out: &OutputFlags) -> Result<()> {
    let workers = out
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let start = Instant::now();
    let table = run_sweep_with_workers(config, workers)?;
    let failed = table
        .column(hopfield_sweep::run::REASON_COLUMN)
        .map_or(0, |c| {
            c.iter()
                .filter(|x| **x != &hopfield_sweep::Cell::Text(String::new()))
                .count()
        });
    match &out.output {
        Some(path) => {
            emit(&table, out.format, path)?;
            eprintln!(
                "{} rows ({failed} failed points) -> {} in {:.2?}",
                table.rows.len(),
                path.display(),
                start.elapsed()
            );
        }
        None => {
            std::io::stdout().write_all(render(&table, out.format)?.as_bytes())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Sweep { config, keys, out } => {
            let base = config.as_ref().map(read_config).transpose()?;
            run_and_emit(&resolve(base, &keys)?, &out)?;
        }
        Command::Preset {
            name,
            list,
            keys,
            out,
        } => {
            if list {
                for p in PRESETS {
                    println!("{:<14} {}", p.name, p.description);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let Some(name) = name else {
                bail!("give a preset name or --list")
            };
            run_and_emit(&resolve(Some(preset_raw(&name)?), &keys)?, &out)?;
        }
        Command::Verify { name, all, list } => {
            if list {
                for (n, d) in VERIFY_PRESETS {
                    println!("{n:<14} {d}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let names: Vec<String> = match (name, all) {
                (_, true) => VERIFY_PRESETS.iter().map(|(n, _)| n.to_string()).collect(),
                (Some(n), false) => vec![n],
                (None, false) => bail!("give a verification preset, --all or --list"),
            };
            let mut ok = true;
            for n in names {
                let report =
                    verify(&n).with_context(|| format!("unknown verification preset `{n}`"))?;
                println!("{report}");
                ok &= report.passed();
            }
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
        Command::DumpConfig {
            preset,
            config,
            keys,
        } => {
            let base = match (preset, config) {
                (Some(_), Some(_)) => bail!("--preset and --config are exclusive"),
                (Some(p), None) => Some(preset_raw(&p)?),
                (None, Some(c)) => Some(read_config(&c)?),
                (None, None) => None,
            };
            print!("{}", resolve(base, &keys)?.to_toml());
        }
    }
    Ok(ExitCode::SUCCESS)
}
