use rayon::prelude::*;

use super::config::RunConfig;
use super::dataset::{Cell, FigureDataset};
use crate::equilibrium::{find_nash_grid, landscape, regime_profiles, thresholds, StrategyGrid};
use crate::error::{Error, Result};
use crate::game::{EntanglementParam, PayoffTable, QuantumGame};
use crate::nmr::{strategy_profile, write_sequence, Experiment, NoiseModel, SpinSystem, StrategyAssignment};
use crate::qstate::DensityMatrix4;
use crate::tomography::{measure_experiment, parse_records, payoff_from_density, reconstruct, write_records};

/// Modeled wall-clock budget of one experiment, in seconds.
pub const DURATION_BUDGET: f64 = 0.3;

/// A dataset with any side files and warnings produced alongside it.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub dataset: FigureDataset,
    /// `(file name, contents)`.
    pub attachments: Vec<(String, String)>,
    pub warnings: Vec<String>,
}

impl Report {
    fn plain(dataset: FigureDataset) -> Self {
        Self { dataset, attachments: Vec::new(), warnings: Vec::new() }
    }
}

pub fn table_from(t: [f64; 4]) -> Result<PayoffTable<f64>> {
    PayoffTable::new(t[0], t[1], t[2], t[3])
}

fn gamma(g: f64) -> Result<EntanglementParam<f64>> {
    EntanglementParam::new(g)
}

fn density_rows(ds: &mut FigureDataset, rho: &DensityMatrix4<f64>) {
    for i in 0..4 {
        for j in 0..4 {
            let z = rho.get(i, j);
            ds.push_row(vec![i.into(), j.into(), z.re.into(), z.im.into()]);
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<Report> {
    match config {
        RunConfig::Landscape { table, gamma: g, preset, steps } => {
            let game = QuantumGame::new(gamma(*g)?, table_from(*table)?);
            let mut ds = FigureDataset::new("landscape", config.clone(), &["t_a", "t_b", "payoff_a", "payoff_b"]);
            ds.note("gamma", *g);
            if let Some(p) = preset {
                ds.note("preset", p.as_str());
            }
            for cell in landscape(&game, *steps)? {
                ds.push_row(vec![cell.t_a.into(), cell.t_b.into(), cell.payoff_a.into(), cell.payoff_b.into()]);
            }
            Ok(Report::plain(ds))
        }

        RunConfig::Sweep { table, gammas, noise_angle, noise_readout, seed } => {
            let table = table_from(*table)?;
            let th = thresholds(&table)?;
            let rows: Vec<Vec<Vec<Cell>>> = gammas
                .par_iter()
                .enumerate()
                .map(|(i, &g)| {
                    let g = gamma(g)?;
                    let run_seed = seed.wrapping_add(i as u64);
                    let regime = th.regime(g.gamma());
                    regime_profiles(regime)
                        .iter()
                        .map(|&profile| {
                            let (analytic_a, analytic_b) = profile.payoffs(&table, g.gamma());
                            let mut ex = Experiment::with_profile(g, table, profile);
                            let (nmr_a, nmr_b) = ex.payoffs()?;
                            ex.noise = NoiseModel::new(*noise_angle, 0.0, false, run_seed)?;
                            let (fit, _) = measure_experiment(&ex, *noise_readout, run_seed)?;
                            let (noisy_a, noisy_b) = payoff_from_density(&fit.rho_hat, &table);
                            Ok(vec![
                                i.into(),
                                g.gamma().into(),
                                regime.name().into(),
                                profile.label().into(),
                                analytic_a.into(),
                                analytic_b.into(),
                                nmr_a.into(),
                                nmr_b.into(),
                                noisy_a.into(),
                                noisy_b.into(),
                                ((noisy_a - analytic_a).abs() / analytic_a.abs()).into(),
                            ])
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            let mut ds = FigureDataset::new(
                "sweep",
                config.clone(),
                &[
                    "index", "gamma", "regime", "profile", "analytic_a", "analytic_b", "nmr_a", "nmr_b", "noisy_a",
                    "noisy_b", "noisy_rel_err_a",
                ],
            );
            rows.into_iter().flatten().for_each(|r| ds.push_row(r));
            Ok(Report::plain(ds))
        }

        RunConfig::Equilibria { table, gammas, grid, tol } => {
            let table = table_from(*table)?;
            let grid: StrategyGrid = grid.parse()?;
            let mut ds = FigureDataset::new(
                "equilibria",
                config.clone(),
                &[
                    "gamma", "regime", "profile", "alice_theta", "alice_phi", "bob_theta", "bob_phi", "payoff_a", "payoff_b",
                ],
            );
            ds.note("grid", grid.to_string());
            ds.note("tol", *tol);
            for &g in gammas {
                let game = QuantumGame::new(gamma(g)?, table);
                let report = find_nash_grid(&game, &grid, *tol)?;
                for e in &report.equilibria {
                    ds.push_row(vec![
                        g.into(),
                        report.regime.name().into(),
                        e.label().into(),
                        e.alice.theta().into(),
                        e.alice.phi().into(),
                        e.bob.theta().into(),
                        e.bob.phi().into(),
                        e.payoff_a.into(),
                        e.payoff_b.into(),
                    ]);
                }
            }
            Ok(Report::plain(ds))
        }

        RunConfig::Thresholds { table } => {
            let th = thresholds(&table_from(*table)?)?;
            let mut ds = FigureDataset::new("thresholds", config.clone(), &["gamma_th1", "gamma_th2", "regimes"]);
            let regimes = if th.has_intermediate_regime() {
                "classical|intermediate|quantum"
            } else if th.gamma_th1 == th.gamma_th2 {
                "classical|quantum"
            } else {
                "classical|bistable|quantum"
            };
            ds.push_row(vec![th.gamma_th1.into(), th.gamma_th2.into(), regimes.into()]);
            Ok(Report::plain(ds))
        }

        RunConfig::Nmr { table, gamma: g, noise_angle, seed, pulse_width, bob_defects } => {
            let ex = experiment(*table, *g, *noise_angle, *seed, *pulse_width, *bob_defects)?;
            let seq = ex.sequence();
            let rho = ex.run()?;
            let (pa, pb) = payoff_from_density(&rho, &ex.table);
            let duration = seq.total_duration(&ex.system);
            let mut ds = FigureDataset::new("nmr", config.clone(), &["row", "col", "re", "im"]);
            ds.note("profile", ex.profile.label());
            ds.note("payoff_a", pa);
            ds.note("payoff_b", pb);
            ds.note("free_evolution_s", seq.free_evolution_time());
            ds.note("duration_s", duration);
            density_rows(&mut ds, &rho);
            let mut warnings = Vec::new();
            if duration >= DURATION_BUDGET {
                warnings.push(format!("modeled duration {duration:.6} s exceeds the {DURATION_BUDGET} s budget"));
            }
            if duration >= ex.system.t2 {
                warnings.push(format!("modeled duration {duration:.6} s is not below T2 = {} s", ex.system.t2));
            }
            Ok(Report { dataset: ds, attachments: vec![("nmr_pulses.txt".into(), write_sequence(&seq))], warnings })
        }

        RunConfig::Tomo { table, gamma: g, noise_angle, noise_readout, seed, records } => {
            let ex = experiment(*table, *g, *noise_angle, *seed, 1e-3, false)?;
            let (fit, recs) = match records {
                Some(text) => {
                    let recs = parse_records::<f64>(text)?;
                    (reconstruct(&recs)?, recs)
                }
                None => measure_experiment(&ex, *noise_readout, *seed)?,
            };
            let ideal = Experiment { noise: NoiseModel::noiseless(), ..ex.clone() }.run()?;
            let (pa, pb) = payoff_from_density(&fit.rho_hat, &ex.table);
            let (aa, ab) = ex.profile.payoffs(&ex.table, ex.gamma.gamma());
            let mut ds = FigureDataset::new("tomo", config.clone(), &["row", "col", "re", "im"]);
            ds.note("profile", ex.profile.label());
            ds.note("payoff_a", pa);
            ds.note("payoff_b", pb);
            ds.note("analytic_a", aa);
            ds.note("analytic_b", ab);
            ds.note("residual_norm", fit.residual_norm);
            ds.note("projected", fit.projected);
            ds.note("trace_distance", fit.rho_hat.trace_distance(&ideal));
            density_rows(&mut ds, &fit.rho_hat);
            Ok(Report {
                dataset: ds,
                attachments: vec![("tomo_records.txt".into(), write_records(&recs))],
                warnings: Vec::new(),
            })
        }
    }
}

fn experiment(
    table: [f64; 4],
    g: f64,
    noise_angle: f64,
    seed: u64,
    pulse_width: f64,
    bob_defects: bool,
) -> Result<Experiment<f64>> {
    let table = table_from(table)?;
    let g = gamma(g)?;
    let assignment = if bob_defects { StrategyAssignment::BobDefects } else { StrategyAssignment::AliceDefects };
    let mut ex = Experiment::with_profile(g, table, strategy_profile(g, &table, assignment)?);
    let d = SpinSystem::<f64>::default();
    ex.system = SpinSystem::new(d.j_coupling, d.t2, d.selective_addressing, pulse_width)?;
    ex.noise = NoiseModel::new(noise_angle, 0.0, false, seed)?;
    Ok(ex)
}

/// Checks the tomography design once before any reconstruction.
pub fn design_self_check() -> Result<()> {
    let (rank, directions) = crate::tomography::design_rank(&crate::tomography::ReadoutSetting::all());
    if rank == 15 {
        Ok(())
    } else {
        Err(Error::RankDeficient { rank, directions })
    }
}
