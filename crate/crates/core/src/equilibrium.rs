//! Pure-strategy Nash equilibria on discretized strategy grids, the two
//! entanglement thresholds, and the data behind the payoff figures.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{EntanglementParam, PayoffTable, QuantumGame, Strategy};
use crate::scalar::Real;

/// Uniform grid over `theta in [0, pi]` x `phi in [0, pi/2]`, endpoints included.
///
/// `U(pi, phi)` does not depend on `phi`, so the `theta = pi` row is collapsed
/// to the single point `D = (pi, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrategyGrid {
    theta_steps: usize,
    phi_steps: usize,
}

impl StrategyGrid {
    pub fn new(theta_steps: usize, phi_steps: usize) -> Result<Self> {
        if theta_steps < 2 || phi_steps < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 steps per axis, got {theta_steps}x{phi_steps}"
            )));
        }
        Ok(Self { theta_steps, phi_steps })
    }

    pub fn theta_steps(&self) -> usize {
        self.theta_steps
    }

    pub fn phi_steps(&self) -> usize {
        self.phi_steps
    }

    /// Grid points ordered by theta, then phi.
    pub fn points<T: Real>(&self) -> Vec<Strategy<T>> {
        let (nt, np) = (self.theta_steps - 1, self.phi_steps - 1);
        let mut out = Vec::with_capacity(nt * (np + 1) + 1);
        for i in 0..=nt {
            // i / nt first so that the last point is exactly pi.
            let theta = T::PI() * (T::from_usize_exact(i) / T::from_usize_exact(nt));
            if i == nt {
                out.push(Strategy::defect());
                break;
            }
            for j in 0..=np {
                let phi = T::FRAC_PI_2() * (T::from_usize_exact(j) / T::from_usize_exact(np));
                out.push(Strategy::new(theta, phi).expect("grid point in range"));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        (self.theta_steps - 1) * self.phi_steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl Default for StrategyGrid {
    /// 61 x 31: theta and phi both step by pi/60.
    fn default() -> Self {
        Self { theta_steps: 61, phi_steps: 31 }
    }
}

impl std::str::FromStr for StrategyGrid {
    type Err = Error;

    /// Parses `"61x31"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| Error::InvalidGrid(format!("expected THETAxPHI, got {s:?}")))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidGrid(format!("bad step count {v:?}")))
        };
        Self::new(parse(a)?, parse(b)?)
    }
}

impl fmt::Display for StrategyGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.theta_steps, self.phi_steps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Only D(x)D.
    Classical,
    /// The asymmetric pair D(x)Q and Q(x)D.
    Intermediate,
    /// Only Q(x)Q.
    Quantum,
    /// D(x)D and Q(x)Q coexist; occurs for tables with `reward + punishment > temptation + sucker`.
    Bistable,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Classical => "classical",
            Regime::Intermediate => "intermediate",
            Regime::Quantum => "quantum",
            Regime::Bistable => "bistable",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Entanglement values at which the equilibrium structure changes.
///
/// `gamma_th1`: below it Q no longer beats D against a defector.
/// `gamma_th2`: from it on D no longer beats Q against a Q player.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdPair<T> {
    pub gamma_th1: T,
    pub gamma_th2: T,
}

impl<T: Real> ThresholdPair<T> {
    /// Boundaries belong to the regime whose equilibria appear there:
    /// `gamma_th1` is intermediate, `gamma_th2` is quantum.
    pub fn regime(&self, gamma: T) -> Regime {
        let (t1, t2) = (self.gamma_th1, self.gamma_th2);
        if t1 < t2 {
            if gamma < t1 {
                Regime::Classical
            } else if gamma < t2 {
                Regime::Intermediate
            } else {
                Regime::Quantum
            }
        } else if gamma < t2 {
            Regime::Classical
        } else if gamma < t1 {
            Regime::Bistable
        } else {
            Regime::Quantum
        }
    }

    pub fn has_intermediate_regime(&self) -> bool {
        self.gamma_th1 < self.gamma_th2
    }
}

/// `gamma_th1 = arcsin sqrt((P - S)/(T - S))`, `gamma_th2 = arccos sqrt((R - S)/(T - S))`.
///
/// For the (3, 0, 5, 1) table these are `arcsin sqrt(1/5)` and `arcsin sqrt(2/5)`.
pub fn thresholds<T: Real>(table: &PayoffTable<T>) -> Result<ThresholdPair<T>> {
    let t = PayoffTable::new(table.reward, table.sucker, table.temptation, table.punishment)?;
    let span = t.temptation - t.sucker;
    Ok(ThresholdPair {
        gamma_th1: ((t.punishment - t.sucker) / span).sqrt().asin(),
        gamma_th2: ((t.reward - t.sucker) / span).sqrt().acos(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium<T> {
    pub alice: Strategy<T>,
    pub bob: Strategy<T>,
    pub payoff_a: T,
    pub payoff_b: T,
}

impl<T: Real> Equilibrium<T> {
    /// e.g. "DQ" for Alice defecting and Bob playing Q.
    pub fn label(&self) -> String {
        format!("{}{}", self.alice.describe(), self.bob.describe())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport<T> {
    pub gamma: T,
    pub equilibria: Vec<Equilibrium<T>>,
    pub regime: Regime,
}

impl<T: Real> EquilibriumReport<T> {
    /// Sorted profile labels, handy for set comparisons.
    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self.equilibria.iter().map(Equilibrium::label).collect();
        v.sort();
        v
    }
}

/// Alice's best reply on the grid to a fixed Bob strategy.
///
/// Ties (within `T::EXACT_TOL`) resolve to the smallest theta, then phi.
pub fn best_response<T: Real>(
    game: &QuantumGame<T>,
    opponent: &Strategy<T>,
    grid: &StrategyGrid,
) -> (Strategy<T>, T) {
    let tie = T::lit(T::EXACT_TOL);
    let bob = opponent.unitary();
    let mut best: Option<(Strategy<T>, T)> = None;
    for s in grid.points::<T>() {
        let p = game.play_unitaries(&s.unitary(), &bob).payoff_a;
        match best {
            Some((_, bp)) if p <= bp + tie => {}
            _ => best = Some((s, p)),
        }
    }
    best.expect("grid is never empty")
}

/// All grid profiles from which neither player gains more than `tol` by a
/// unilateral deviation to another grid point.
pub fn find_nash_grid<T: Real>(game: &QuantumGame<T>, grid: &StrategyGrid, tol: T) -> Result<EquilibriumReport<T>> {
    if tol.is_nan() || tol <= T::zero() {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let points = grid.points::<T>();
    let unitaries: Vec<_> = points.iter().map(Strategy::unitary).collect();
    let n = points.len();

    // payoffs[i * n + j]: Alice plays i, Bob plays j.
    let payoffs: Vec<(T, T)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let ua = unitaries[i];
            let unitaries = &unitaries;
            (0..n).map(move |j| {
                let o = game.play_unitaries(&ua, &unitaries[j]);
                (o.payoff_a, o.payoff_b)
            })
        })
        .collect();

    // Alice's best payoff against each Bob column; Bob's against each Alice row.
    let col_max: Vec<T> = (0..n)
        .into_par_iter()
        .map(|j| (0..n).fold(T::neg_infinity(), |m, i| m.max(payoffs[i * n + j].0)))
        .collect();
    let row_max: Vec<T> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).fold(T::neg_infinity(), |m, j| m.max(payoffs[i * n + j].1)))
        .collect();

    let mut equilibria = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (pa, pb) = payoffs[i * n + j];
            if pa >= col_max[j] - tol && pb >= row_max[i] - tol {
                equilibria.push(Equilibrium {
                    alice: points[i],
                    bob: points[j],
                    payoff_a: pa,
                    payoff_b: pb,
                });
            }
        }
    }

    let gamma = game.gamma().gamma();
    Ok(EquilibriumReport {
        gamma,
        equilibria,
        regime: thresholds(game.table())?.regime(gamma),
    })
}

/// Named pure profiles that appear as equilibria, Alice's move first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Profile {
    DD,
    DQ,
    QD,
    QQ,
}

impl Profile {
    pub fn label(self) -> &'static str {
        match self {
            Profile::DD => "DD",
            Profile::DQ => "DQ",
            Profile::QD => "QD",
            Profile::QQ => "QQ",
        }
    }

    pub fn strategies<T: Real>(self) -> (Strategy<T>, Strategy<T>) {
        let (d, q) = (Strategy::defect(), Strategy::quantum());
        match self {
            Profile::DD => (d, d),
            Profile::DQ => (d, q),
            Profile::QD => (q, d),
            Profile::QQ => (q, q),
        }
    }

    /// Analytic payoffs `(alice, bob)` of the profile at entanglement `gamma`.
    ///
    /// Against D, Q lands on the sucker/temptation outcomes with weights
    /// `cos^2 gamma` / `sin^2 gamma`.
    pub fn payoffs<T: Real>(self, table: &PayoffTable<T>, gamma: T) -> (T, T) {
        let s2 = gamma.sin().powi(2);
        let c2 = gamma.cos().powi(2);
        let q_vs_d = table.temptation * s2 + table.sucker * c2;
        let d_vs_q = table.temptation * c2 + table.sucker * s2;
        match self {
            Profile::DD => (table.punishment, table.punishment),
            Profile::QQ => (table.reward, table.reward),
            Profile::DQ => (d_vs_q, q_vs_d),
            Profile::QD => (q_vs_d, d_vs_q),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The equilibrium profiles predicted for `regime`, in a fixed order.
pub fn regime_profiles(regime: Regime) -> &'static [Profile] {
    match regime {
        Regime::Classical => &[Profile::DD],
        Regime::Intermediate => &[Profile::DQ, Profile::QD],
        Regime::Quantum => &[Profile::QQ],
        Regime::Bistable => &[Profile::DD, Profile::QQ],
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint<T> {
    pub gamma: T,
    pub profile: Profile,
    pub regime: Regime,
    pub payoff_a: T,
    pub payoff_b: T,
}

/// Alice's payoff at the analytic equilibria along `gammas`; the intermediate
/// regime contributes both branches.
pub fn nash_payoff_curve<T: Real>(table: &PayoffTable<T>, gammas: &[T]) -> Result<Vec<CurvePoint<T>>> {
    let th = thresholds(table)?;
    let mut out = Vec::new();
    for &g in gammas {
        let gamma = EntanglementParam::new(g)?.gamma();
        let regime = th.regime(gamma);
        for &profile in regime_profiles(regime) {
            let (payoff_a, payoff_b) = profile.payoffs(table, gamma);
            out.push(CurvePoint { gamma, profile, regime, payoff_a, payoff_b });
        }
    }
    Ok(out)
}

/// One-parameter strategy coordinate `t in [-1, 1]`: `U(t pi, 0)` for `t >= 0`
/// and `U(0, -t pi/2)` for `t < 0`. C sits at 0, D at 1, Q at -1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TParam<T>(T);

impl<T: Real> TParam<T> {
    pub fn new(t: T) -> Result<Self> {
        if !(t >= -T::one() && t <= T::one()) {
            return Err(Error::out_of_range("t", t.as_f64(), -1.0, 1.0));
        }
        Ok(Self(t))
    }

    pub fn value(&self) -> T {
        self.0
    }

    pub fn strategy(&self) -> Strategy<T> {
        let t = self.0;
        if t >= T::zero() {
            Strategy::new(T::PI() * t, T::zero())
        } else {
            Strategy::new(T::zero(), T::FRAC_PI_2() * (-t))
        }
        .expect("t in [-1, 1] maps into the strategy domain")
    }

    /// `steps` evenly spaced values from -1 to 1 inclusive.
    pub fn linspace(steps: usize) -> Result<Vec<Self>> {
        if steps < 2 {
            return Err(Error::InvalidInput(format!("landscape needs steps >= 2, got {steps}")));
        }
        let last = T::from_usize_exact(steps - 1);
        Ok((0..steps)
            .map(|i| {
                let two_i = T::from_usize_exact(2 * i);
                Self(((two_i - last) / last).max(-T::one()).min(T::one()))
            })
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandscapeCell<T> {
    pub t_a: T,
    pub t_b: T,
    pub payoff_a: T,
    pub payoff_b: T,
}

/// Payoffs over the `steps x steps` square of t-parametrized strategies,
/// row-major in `t_a`.
pub fn landscape<T: Real>(game: &QuantumGame<T>, steps: usize) -> Result<Vec<LandscapeCell<T>>> {
    let ts = TParam::<T>::linspace(steps)?;
    let unitaries: Vec<_> = ts.iter().map(|t| t.strategy().unitary()).collect();
    let mut out = Vec::with_capacity(steps * steps);
    for (ta, ua) in ts.iter().zip(&unitaries) {
        for (tb, ub) in ts.iter().zip(&unitaries) {
            let o = game.play_unitaries(ua, ub);
            out.push(LandscapeCell {
                t_a: ta.value(),
                t_b: tb.value(),
                payoff_a: o.payoff_a,
                payoff_b: o.payoff_b,
            });
        }
    }
    Ok(out)
}

/// Alice's payoff at a single `(t_a, t_b)` point.
pub fn landscape_point<T: Real>(game: &QuantumGame<T>, t_a: TParam<T>, t_b: TParam<T>) -> T {
    game.play(&t_a.strategy(), &t_b.strategy()).payoff_a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{payoff_vs_defect, payoff_vs_q};
    use std::f64::consts::FRAC_PI_2;

    fn default_thresholds() -> ThresholdPair<f64> {
        thresholds(&PayoffTable::default()).unwrap()
    }

    fn game(g: f64) -> QuantumGame<f64> {
        QuantumGame::new(EntanglementParam::new(g).unwrap(), PayoffTable::default())
    }

    #[test]
    fn grid_contains_named_points_once() {
        let pts = StrategyGrid::default().points::<f64>();
        assert_eq!(pts.len(), StrategyGrid::default().len());
        assert_eq!(pts.len(), 60 * 31 + 1);
        for named in [Strategy::cooperate(), Strategy::defect(), Strategy::quantum()] {
            assert_eq!(pts.iter().filter(|p| **p == named).count(), 1);
        }
        let small = StrategyGrid::new(2, 2).unwrap().points::<f64>();
        assert_eq!(small, vec![Strategy::cooperate(), Strategy::quantum(), Strategy::defect()]);
        assert!(StrategyGrid::new(1, 5).is_err());
        assert_eq!("61x31".parse::<StrategyGrid>().unwrap(), StrategyGrid::default());
        assert!("61-31".parse::<StrategyGrid>().is_err());
    }

    #[test]
    fn default_thresholds_match_closed_values() {
        let th = default_thresholds();
        assert!((th.gamma_th1 - (0.2f64).sqrt().asin()).abs() < 1e-15);
        assert!((th.gamma_th2 - (0.4f64).sqrt().asin()).abs() < 1e-15);
        assert!((th.gamma_th1 - 0.463648).abs() < 5e-7);
        assert!((th.gamma_th2 - 0.684719).abs() < 5e-7);
    }

    #[test]
    fn threshold_rejects_invalid_table() {
        let bad = PayoffTable { reward: 3.0, sucker: 0.0, temptation: 5.0, punishment: 5.0 };
        assert!(thresholds(&bad).is_err());
    }

    #[test]
    fn regime_boundaries() {
        let th = default_thresholds();
        assert_eq!(th.regime(0.0), Regime::Classical);
        assert_eq!(th.regime(th.gamma_th1), Regime::Intermediate);
        assert_eq!(th.regime(th.gamma_th2), Regime::Quantum);
        assert_eq!(th.regime(FRAC_PI_2), Regime::Quantum);
    }

    fn scan(table: PayoffTable<f64>, g: f64) -> Vec<String> {
        let game = QuantumGame::new(EntanglementParam::new(g).unwrap(), table);
        find_nash_grid(&game, &StrategyGrid::default(), 1e-9).unwrap().labels()
    }

    // Brute-force check of the closed forms, including tables with a nonzero sucker payoff.
    #[test]
    fn thresholds_agree_with_grid_scan() {
        let both = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        for (r, s, t, p) in [(3.0, 0.0, 5.0, 1.0), (3.0, 1.0, 5.0, 2.0), (4.0, 0.5, 6.0, 1.0)] {
            let table = PayoffTable::new(r, s, t, p).unwrap();
            let th = thresholds(&table).unwrap();
            assert!(th.has_intermediate_regime());
            assert_eq!(scan(table, th.gamma_th1 - 0.01), both(&["DD"]), "{table:?}");
            assert_eq!(scan(table, th.gamma_th1 + 0.01), both(&["DQ", "QD"]), "{table:?}");
            assert_eq!(scan(table, th.gamma_th2 - 0.01), both(&["DQ", "QD"]), "{table:?}");
            assert_eq!(scan(table, th.gamma_th2 + 0.01), both(&["QQ"]), "{table:?}");
        }

        let table = PayoffTable::new(5.0, 0.0, 7.0, 3.0).unwrap();
        let th = thresholds(&table).unwrap();
        let (lo, hi) = (th.gamma_th2, th.gamma_th1);
        assert!(lo < hi);
        assert_eq!(scan(table, lo - 0.01), both(&["DD"]));
        assert_eq!(scan(table, (lo + hi) / 2.0), both(&["DD", "QQ"]));
        assert_eq!(scan(table, hi + 0.01), both(&["QQ"]));
        assert_eq!(th.regime((lo + hi) / 2.0), Regime::Bistable);
    }

    #[test]
    fn best_response_examples() {
        let grid = StrategyGrid::default();
        let (s, p) = best_response(&game(0.0), &Strategy::defect(), &grid);
        assert_eq!(s, Strategy::defect());
        assert!((p - 1.0).abs() < 1e-12);

        let th = default_thresholds();
        let mid = (th.gamma_th1 + th.gamma_th2) / 2.0;
        let (s, p) = best_response(&game(mid), &Strategy::defect(), &grid);
        assert_eq!(s, Strategy::quantum());
        assert!((p - 5.0 * mid.sin().powi(2)).abs() < 1e-12);
        let (s, p) = best_response(&game(mid), &Strategy::quantum(), &grid);
        assert_eq!(s, Strategy::defect());
        assert!((p - 5.0 * mid.cos().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn nash_examples() {
        let grid = StrategyGrid::default();
        let th = default_thresholds();
        let r = find_nash_grid(&game(0.0), &grid, 1e-9).unwrap();
        assert_eq!(r.labels(), vec!["DD"]);
        assert_eq!(r.regime, Regime::Classical);
        assert!((r.equilibria[0].payoff_a - 1.0).abs() < 1e-12);

        let r = find_nash_grid(&game((th.gamma_th1 + th.gamma_th2) / 2.0), &grid, 1e-9).unwrap();
        assert_eq!(r.labels(), vec!["DQ", "QD"]);
        assert_eq!(r.regime, Regime::Intermediate);

        let r = find_nash_grid(&game(FRAC_PI_2), &grid, 1e-9).unwrap();
        assert_eq!(r.labels(), vec!["QQ"]);
        assert!((r.equilibria[0].payoff_b - 3.0).abs() < 1e-12);
        assert!(find_nash_grid(&game(0.1), &grid, 0.0).is_err());
    }

    #[test]
    fn intermediate_inequalities_and_asymmetry() {
        let th = default_thresholds();
        let pts = StrategyGrid::default().points::<f64>();
        for k in 1..10 {
            let g = th.gamma_th1 + (th.gamma_th2 - th.gamma_th1) * k as f64 / 10.0;
            let (s2, c2) = (g.sin().powi(2), g.cos().powi(2));
            for p in &pts {
                assert!(payoff_vs_defect(p.theta(), p.phi(), g) <= 5.0 * s2 + 1e-12);
                assert!(payoff_vs_q(p.theta(), p.phi(), g) <= 5.0 * c2 + 1e-12);
            }
            let (a, b) = Profile::DQ.payoffs(&PayoffTable::default(), g);
            assert!(a > b, "defecting player strictly better");
        }
    }

    #[test]
    fn q_is_best_reply_to_q_above_second_threshold() {
        let th = default_thresholds();
        let pts = StrategyGrid::default().points::<f64>();
        for k in 0..=10 {
            let g = th.gamma_th2 + 1e-6 + (FRAC_PI_2 - th.gamma_th2 - 1e-6) * k as f64 / 10.0;
            for p in &pts {
                assert!(payoff_vs_q(p.theta(), p.phi(), g) <= 3.0 + 1e-9);
            }
        }
    }

    #[test]
    fn curve_examples() {
        let t = PayoffTable::default();
        let c = nash_payoff_curve(&t, &[0.0, FRAC_PI_2, 10.0 * std::f64::consts::PI / 36.0]).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!((c[0].profile, c[0].payoff_a), (Profile::DD, 1.0));
        assert_eq!((c[1].profile, c[1].payoff_a), (Profile::QQ, 3.0));
        assert_eq!((c[2].profile, c[2].payoff_a), (Profile::QQ, 3.0));
        let g = 6.0 * std::f64::consts::PI / 36.0;
        let c = nash_payoff_curve(&t, &[g]).unwrap();
        assert_eq!(c.len(), 2);
        assert!((c[0].payoff_a - 5.0 * g.cos().powi(2)).abs() < 1e-12);
        assert!((c[1].payoff_a - 5.0 * g.sin().powi(2)).abs() < 1e-12);
        assert!(nash_payoff_curve(&t, &[2.0]).is_err());
    }

    #[test]
    fn tparam_mapping() {
        assert_eq!(TParam::new(0.0).unwrap().strategy(), Strategy::cooperate());
        assert_eq!(TParam::new(1.0).unwrap().strategy(), Strategy::defect());
        assert_eq!(TParam::new(-1.0).unwrap().strategy(), Strategy::quantum());
        assert!(TParam::new(1.5).is_err());
        let ts = TParam::<f64>::linspace(5).unwrap();
        let vals: Vec<f64> = ts.iter().map(|t| t.value()).collect();
        assert_eq!(vals, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn landscape_corners() {
        for g in [0.0, 0.3, 1.2] {
            let cells = landscape(&game(g), 2).unwrap();
            assert_eq!(cells.len(), 4);
            let at = |a: f64, b: f64| cells.iter().find(|c| c.t_a == a && c.t_b == b).unwrap().payoff_a;
            assert!((at(1.0, 1.0) - 1.0).abs() < 1e-12);
            assert!((at(-1.0, -1.0) - 3.0).abs() < 1e-12);
        }
        let cc = landscape_point(&game(0.0), TParam::new(0.0).unwrap(), TParam::new(0.0).unwrap());
        assert!((cc - 3.0).abs() < 1e-12);
        assert!(landscape(&game(0.0), 1).is_err());
    }

    #[test]
    fn classical_landscape_is_symmetric_under_player_swap() {
        let cells = landscape(&game(0.0), 9).unwrap();
        let n = 9;
        for i in 0..n {
            for j in 0..n {
                let a = cells[i * n + j];
                let b = cells[j * n + i];
                assert!((a.payoff_a - b.payoff_b).abs() < 1e-12);
            }
        }
    }
}
