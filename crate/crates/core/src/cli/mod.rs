//! Command-line front end: argument parsing, dataset output and replay.

mod commands;
mod config;
mod dataset;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{design_self_check, execute, Report, DURATION_BUDGET};
pub use config::RunConfig;
pub use dataset::{embedded_config, Cell, Column, FigureDataset, Format};

use crate::equilibrium::{thresholds, StrategyGrid};
use crate::error::{Error, Result};
use crate::game::sweep_gammas;

#[derive(Debug, Parser)]
#[command(name = "qdilemma", version, about = "Quantum Prisoner's Dilemma simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Payoff surface over the t-parametrized strategy square.
    Landscape(LandscapeArgs),
    /// Analytic, simulated and reconstructed payoffs along the gamma sweep.
    Sweep(SweepArgs),
    /// Grid Nash equilibria.
    Equilibria(EquilibriaArgs),
    /// Entanglement thresholds of a payoff table.
    Thresholds(Common),
    /// Compile and simulate the pulse experiment at one gamma.
    Nmr(NmrArgs),
    /// Tomography round trip of the experiment at one gamma.
    Tomo(TomoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Half of the first threshold (classical regime).
    Fig2,
    /// Midpoint of the two thresholds.
    Fig3,
    /// Midpoint of the second threshold and pi/2.
    Fig4,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
        }
    }

    pub fn gamma(self, table: [f64; 4]) -> Result<f64> {
        let th = thresholds(&commands::table_from(table)?)?;
        Ok(match self {
            Preset::Fig2 => th.gamma_th1 / 2.0,
            Preset::Fig3 => (th.gamma_th1 + th.gamma_th2) / 2.0,
            Preset::Fig4 => (th.gamma_th2 + std::f64::consts::FRAC_PI_2) / 2.0,
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Payoff table as reward,sucker,temptation,punishment.
    #[arg(long, value_parser = parse_table, default_value = "3,0,5,1")]
    pub table: [f64; 4],
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Directory to write into; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Regenerate from the config embedded in a dataset; other parameters are ignored.
    #[arg(long)]
    pub replay: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GammaArg {
    /// Entanglement in radians; accepts forms like 0.6, pi/2 or 7pi/36.
    #[arg(long, value_parser = parse_angle, conflicts_with = "preset")]
    pub gamma: Option<f64>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
}

impl GammaArg {
    fn resolve(&self, table: [f64; 4], fallback: Option<f64>) -> Result<(f64, Option<String>)> {
        match (self.gamma, self.preset, fallback) {
            (Some(g), _, _) => Ok((g, None)),
            (None, Some(p), _) => Ok((p.gamma(table)?, Some(p.name().to_string()))),
            (None, None, Some(g)) => Ok((g, None)),
            (None, None, None) => Err(Error::InvalidInput("one of --gamma or --preset is required".into())),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct LandscapeArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub gamma: GammaArg,
    /// Points per axis.
    #[arg(long, default_value_t = 41)]
    pub steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated gammas; defaults to n pi/36 for n = 0..18.
    #[arg(long, value_parser = parse_angle, value_delimiter = ',')]
    pub gamma: Vec<f64>,
    /// Relative pulse-angle error of the noisy series.
    #[arg(long, default_value_t = 0.05)]
    pub noise_angle: f64,
    /// Readout noise sigma of the noisy series.
    #[arg(long, default_value_t = 0.03)]
    pub noise_readout: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct EquilibriaArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated gammas; defaults to n pi/36 for n = 0..18.
    #[arg(long, value_parser = parse_angle, value_delimiter = ',', conflicts_with = "preset")]
    pub gamma: Vec<f64>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Strategy grid as THETAxPHI.
    #[arg(long, default_value = "61x31")]
    pub grid: String,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct NmrArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub gamma: GammaArg,
    #[arg(long, default_value_t = 0.0)]
    pub noise_angle: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Nominal duration of one RF pulse in seconds.
    #[arg(long, default_value_t = 1e-3)]
    pub pulse_width: f64,
    /// Realize Q(x)D instead of D(x)Q in the intermediate regime.
    #[arg(long)]
    pub bob_defects: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TomoArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub gamma: GammaArg,
    #[arg(long, default_value_t = 0.0)]
    pub noise_angle: f64,
    #[arg(long, default_value_t = 0.03)]
    pub noise_readout: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Reconstruct from recorded readings instead of simulating them.
    #[arg(long)]
    pub records: Option<PathBuf>,
}

fn parse_table(s: &str) -> std::result::Result<[f64; 4], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|_| format!("bad payoff {x:?}")))
        .collect::<std::result::Result<_, _>>()?;
    <[f64; 4]>::try_from(v).map_err(|v| format!("expected 4 payoffs r,s,t,p, got {}", v.len()))
}

/// Radians as a plain number or a multiple of pi such as `7pi/36`.
pub fn parse_angle(s: &str) -> std::result::Result<f64, String> {
    let t = s.trim().to_ascii_lowercase().replace(['*', ' '], "");
    let bad = || format!("cannot read angle {s:?}");
    let Some((coef, rest)) = t.split_once("pi") else {
        return t.parse::<f64>().map_err(|_| bad());
    };
    let coef = match coef {
        "" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let div = match rest {
        "" => 1.0,
        r => r.strip_prefix('/').and_then(|d| d.parse::<f64>().ok()).ok_or_else(bad)?,
    };
    Ok(coef * std::f64::consts::PI / div)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

fn default_gammas(given: &[f64]) -> Vec<f64> {
    if given.is_empty() {
        sweep_gammas::<f64>().into_iter().map(|g| g.gamma()).collect()
    } else {
        given.to_vec()
    }
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Landscape(a) => &a.common,
            Command::Sweep(a) => &a.common,
            Command::Equilibria(a) => &a.common,
            Command::Thresholds(a) => a,
            Command::Nmr(a) => &a.common,
            Command::Tomo(a) => &a.common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Landscape(_) => "landscape",
            Command::Sweep(_) => "sweep",
            Command::Equilibria(_) => "equilibria",
            Command::Thresholds(_) => "thresholds",
            Command::Nmr(_) => "nmr",
            Command::Tomo(_) => "tomo",
        }
    }

    /// The config this invocation describes, read from `--replay` if given.
    pub fn config(&self) -> Result<RunConfig> {
        if let Some(path) = &self.common().replay {
            let config = embedded_config(&read(path)?)?;
            if config.command() != self.name() {
                return Err(Error::InvalidInput(format!(
                    "{} holds a `{}` dataset, not `{}`",
                    path.display(),
                    config.command(),
                    self.name()
                )));
            }
            return Ok(config);
        }
        let table = self.common().table;
        Ok(match self {
            Command::Landscape(a) => {
                let (gamma, preset) = a.gamma.resolve(table, None)?;
                RunConfig::Landscape { table, gamma, preset, steps: a.steps }
            }
            Command::Sweep(a) => RunConfig::Sweep {
                table,
                gammas: default_gammas(&a.gamma),
                noise_angle: a.noise_angle,
                noise_readout: a.noise_readout,
                seed: a.seed,
            },
            Command::Equilibria(a) => {
                let gammas = match a.preset {
                    Some(p) => vec![p.gamma(table)?],
                    None => default_gammas(&a.gamma),
                };
                let grid: StrategyGrid = a.grid.parse()?;
                RunConfig::Equilibria { table, gammas, grid: grid.to_string(), tol: a.tol }
            }
            Command::Thresholds(_) => RunConfig::Thresholds { table },
            Command::Nmr(a) => RunConfig::Nmr {
                table,
                gamma: a.gamma.resolve(table, None)?.0,
                noise_angle: a.noise_angle,
                seed: a.seed,
                pulse_width: a.pulse_width,
                bob_defects: a.bob_defects,
            },
            Command::Tomo(a) => RunConfig::Tomo {
                table,
                gamma: a.gamma.resolve(table, None)?.0,
                noise_angle: a.noise_angle,
                noise_readout: a.noise_readout,
                seed: a.seed,
                records: a.records.as_deref().map(read).transpose()?,
            },
        })
    }
}

fn emit(report: &Report, common: &Common, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let body = report.dataset.render(common.format);
    match &common.out {
        None => {
            let io = |source| Error::Io { path: PathBuf::from("<stdout>"), source };
            for (_, text) in &report.attachments {
                stdout.write_all(text.as_bytes()).map_err(io)?;
                stdout.write_all(b"\n").map_err(io)?;
            }
            stdout.write_all(body.as_bytes()).map_err(io)?;
        }
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|source| Error::Io { path: dir.clone(), source })?;
            let main = (format!("{}.{}", report.dataset.kind, common.format.extension()), body);
            for (name, text) in report.attachments.iter().chain(std::iter::once(&main)) {
                let path = dir.join(name);
                std::fs::write(&path, text).map_err(|source| Error::Io { path: path.clone(), source })?;
                let _ = writeln!(stderr, "wrote {}", path.display());
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (program name first) and returns the exit code:
/// 0 on success, 1 on input errors, 2 on I/O errors.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = (|| {
        if matches!(cli.command, Command::Tomo(_) | Command::Sweep(_)) {
            design_self_check()?;
        }
        let report = execute(&cli.command.config()?)?;
        for w in &report.warnings {
            let _ = writeln!(stderr, "warning: {w}");
        }
        emit(&report, cli.command.common(), stdout, stderr)
    })();
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_io() {
                2
            } else {
                1
            }
        }
    }
}
