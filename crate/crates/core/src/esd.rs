//! Dephasing scenarios for the one-parameter family: closed-form negativity,
//! disentanglement times, and numeric cross-checks through the full
//! channel / partial-transpose pipeline.
//!
//! Under every scenario the family keeps its diagonal and the corner becomes
//! `x g(t)`, where `g` is `gA`, `gB` or `gA gB`. The smallest partial-transpose
//! eigenvalue is `(1 - 8 x g) / 8`, so entanglement is lost for good once
//! `g(t) <= 1 / (8x)`, i.e. at
//!
//! ```text
//! t* = 2 ln(8x) / rate_eff,   rate_eff = rate_a, rate_b or rate_a + rate_b
//! ```
//!
//! while the corner itself only vanishes as `t -> infinity`.

use std::fmt;
use std::str::FromStr;

use crate::channels::{self, coherence_factor, DephasingParams};
use crate::entanglement::{self, NegativityResult};
use crate::error::{Error, Result};
use crate::linalg::Subsystem;
use crate::states::{self, DensityMatrix, ANSATZ_X_MAX};

/// Corner value separating entangled from separable family members.
pub const ENTANGLEMENT_THRESHOLD: f64 = 0.125;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    QubitOnly,
    QutritOnly,
    MultiLocal,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 3] = [
        ScenarioKind::QubitOnly,
        ScenarioKind::QutritOnly,
        ScenarioKind::MultiLocal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ScenarioKind::QubitOnly => "qubit",
            ScenarioKind::QutritOnly => "qutrit",
            ScenarioKind::MultiLocal => "multilocal",
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qubit" => Ok(ScenarioKind::QubitOnly),
            "qutrit" => Ok(ScenarioKind::QutritOnly),
            "multilocal" => Ok(ScenarioKind::MultiLocal),
            other => Err(Error::InvalidParameter(format!(
                "unknown scenario {other:?}; expected qubit, qutrit or multilocal"
            ))),
        }
    }
}

/// Which subsystems dephase, how fast, and the initial corner `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    kind: ScenarioKind,
    x: f64,
    rate_a: f64,
    rate_b: f64,
}

impl Scenario {
    pub fn new(kind: ScenarioKind, x: f64, rate_a: f64, rate_b: f64) -> Result<Self> {
        if !(0.0..=ANSATZ_X_MAX).contains(&x) {
            return Err(Error::InvalidParameter(format!("x = {x} is outside [0, 1/4]")));
        }
        for (name, rate) in [("rate_a", rate_a), ("rate_b", rate_b)] {
            if !(rate.is_finite() && rate >= 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and >= 0, got {rate}"
                )));
            }
        }
        Ok(Self {
            kind,
            x,
            rate_a,
            rate_b,
        })
    }

    pub fn kind(&self) -> ScenarioKind {
        self.kind
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn rate_a(&self) -> f64 {
        self.rate_a
    }

    pub fn rate_b(&self) -> f64 {
        self.rate_b
    }

    /// Qubit coherence factor; 1 when the qubit is noiseless in this scenario.
    pub fn gamma_a(&self, t: f64) -> f64 {
        match self.kind {
            ScenarioKind::QutritOnly => 1.0,
            _ => coherence_factor(self.rate_a, t),
        }
    }

    /// Qutrit coherence factor; 1 when the qutrit is noiseless in this scenario.
    pub fn gamma_b(&self, t: f64) -> f64 {
        match self.kind {
            ScenarioKind::QubitOnly => 1.0,
            _ => coherence_factor(self.rate_b, t),
        }
    }

    /// Combined factor multiplying the corner.
    pub fn coherence(&self, t: f64) -> f64 {
        self.gamma_a(t) * self.gamma_b(t)
    }

    /// Rate at which the corner decays as `exp(-rate_eff t / 2)`.
    pub fn effective_rate(&self) -> f64 {
        match self.kind {
            ScenarioKind::QubitOnly => self.rate_a,
            ScenarioKind::QutritOnly => self.rate_b,
            ScenarioKind::MultiLocal => self.rate_a + self.rate_b,
        }
    }

    /// Evolved corner `x g(t)`.
    pub fn corner(&self, t: f64) -> f64 {
        self.x * self.coherence(t)
    }

    /// Bisection bracket used when none is given: ten times the largest
    /// disentanglement time the family can have at this rate.
    pub fn default_t_max(&self) -> Option<f64> {
        let rate = self.effective_rate();
        (rate > 0.0).then(|| 10.0 * 2.0 * std::f64::consts::LN_2 / rate)
    }
}

/// Outcome of a disentanglement-time computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EsdTime {
    /// Entanglement vanishes at this finite time.
    At(f64),
    /// The initial state is already separable (`x <= 1/8`).
    NeverEntangled,
    /// Entangled, but the effective rate is zero so nothing decays.
    NoDeath,
}

impl EsdTime {
    pub fn time(&self) -> Option<f64> {
        match self {
            EsdTime::At(t) => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for EsdTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EsdTime::At(t) => write!(f, "{t}"),
            EsdTime::NeverEntangled => f.write_str("never-entangled"),
            EsdTime::NoDeath => f.write_str("no-death"),
        }
    }
}

/// `max{0, x g(t) - 1/8}`.
pub fn analytic_negativity(s: &Scenario, t: f64) -> f64 {
    (s.corner(t) - ENTANGLEMENT_THRESHOLD).max(0.0)
}

/// Closed-form partial-transpose spectrum of the evolved state, ascending:
/// `{1/4, 1/4, 1/8, 1/8, (1 + 8xg)/8, (1 - 8xg)/8}`.
pub fn pt_spectrum_closed_form(s: &Scenario, t: f64) -> Vec<f64> {
    let c = s.corner(t);
    let mut ev = vec![0.25, 0.25, 0.125, 0.125, 0.125 + c, 0.125 - c];
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

pub fn analytic_esd_time(s: &Scenario) -> EsdTime {
    if s.x <= ENTANGLEMENT_THRESHOLD {
        return EsdTime::NeverEntangled;
    }
    let rate = s.effective_rate();
    if rate == 0.0 {
        return EsdTime::NoDeath;
    }
    EsdTime::At(2.0 * (8.0 * s.x).ln() / rate)
}

/// The family member with corner `x`, pushed through the scenario's channels.
pub fn evolve(s: &Scenario, t: f64) -> Result<DensityMatrix> {
    let rho = states::ansatz_x(s.x)?;
    match s.kind {
        ScenarioKind::QubitOnly => {
            let ch = channels::dephasing_qubit(DephasingParams::new(s.rate_a, t)?);
            channels::apply(&ch, &rho)
        }
        ScenarioKind::QutritOnly => {
            let ch = channels::dephasing_qutrit(DephasingParams::new(s.rate_b, t)?);
            channels::apply(&ch, &rho)
        }
        ScenarioKind::MultiLocal => {
            let ch_a = channels::dephasing_qubit(DephasingParams::new(s.rate_a, t)?);
            let ch_b = channels::dephasing_qutrit(DephasingParams::new(s.rate_b, t)?);
            channels::apply_multilocal(&ch_a, &ch_b, &rho)
        }
    }
}

/// Negativity of the numerically evolved state.
pub fn numeric_negativity(s: &Scenario, t: f64) -> Result<NegativityResult> {
    Ok(entanglement::negativity(&evolve(s, t)?))
}

/// Finds the disentanglement time by bisection on `[0, t_max]`.
///
/// The bracket is refined on the sign of the smallest partial-transpose
/// eigenvalue, the continuous quantity the negativity clamps at zero, until it
/// is narrower than `tol`.
pub fn numeric_esd_time(s: &Scenario, t_max: f64, tol: f64) -> Result<EsdTime> {
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::InvalidParameter(format!("t_max must be positive, got {t_max}")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tol must be positive, got {tol}")));
    }
    if !numeric_negativity(s, 0.0)?.is_entangled {
        return Ok(EsdTime::NeverEntangled);
    }
    if numeric_negativity(s, t_max)?.is_entangled {
        return Err(Error::BracketFailure { t_max });
    }

    let min_pt = |t: f64| -> Result<f64> { Ok(entanglement::pt_spectrum(&evolve(s, t)?, Subsystem::A).min()) };
    let (mut lo, mut hi) = (0.0, t_max);
    const MAX_ITER: usize = 200;
    for _ in 0..MAX_ITER {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if min_pt(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(EsdTime::At(0.5 * (lo + hi)))
}

/// [`numeric_esd_time`] with the scenario's default bracket; `NoDeath` when the
/// state is entangled and nothing decays.
pub fn numeric_esd_time_default(s: &Scenario, tol: f64) -> Result<EsdTime> {
    match s.default_t_max() {
        Some(t_max) => numeric_esd_time(s, t_max, tol),
        None if numeric_negativity(s, 0.0)?.is_entangled => Ok(EsdTime::NoDeath),
        None => Ok(EsdTime::NeverEntangled),
    }
}

/// One time point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub t: f64,
    pub gamma_a: f64,
    pub gamma_b: f64,
    /// `(1,6)` entry of the numerically evolved state.
    pub corner: f64,
    pub negativity_numeric: f64,
    pub negativity_analytic: f64,
    pub min_pt_eigenvalue: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EsdReport {
    pub scenario: Scenario,
    /// Bisection result.
    pub esd_time: EsdTime,
    pub analytic_time: EsdTime,
    pub curve: Vec<CurveRow>,
}

/// Bisection tolerance used by [`sweep`].
pub const SWEEP_ESD_TOL: f64 = 1e-12;

pub fn curve_row(s: &Scenario, t: f64) -> Result<CurveRow> {
    let rho = evolve(s, t)?;
    let n = entanglement::negativity(&rho);
    Ok(CurveRow {
        t,
        gamma_a: s.gamma_a(t),
        gamma_b: s.gamma_b(t),
        corner: rho.corner(),
        negativity_numeric: n.value,
        negativity_analytic: analytic_negativity(s, t),
        min_pt_eigenvalue: n.min_pt_eigenvalue,
    })
}

/// Evaluates the scenario on every grid time, in grid order, plus both
/// disentanglement times.
pub fn sweep(s: &Scenario, t_grid: &[f64]) -> Result<EsdReport> {
    if let Some(bad) = t_grid.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
        return Err(Error::InvalidParameter(format!("grid time {bad} is not a valid time")));
    }
    let curve = compute_rows(s, t_grid)?;
    Ok(EsdReport {
        scenario: *s,
        esd_time: numeric_esd_time_default(s, SWEEP_ESD_TOL)?,
        analytic_time: analytic_esd_time(s),
        curve,
    })
}

#[cfg(feature = "parallel")]
fn compute_rows(s: &Scenario, t_grid: &[f64]) -> Result<Vec<CurveRow>> {
    use rayon::prelude::*;
    t_grid.par_iter().map(|&t| curve_row(s, t)).collect()
}

#[cfg(not(feature = "parallel"))]
fn compute_rows(s: &Scenario, t_grid: &[f64]) -> Result<Vec<CurveRow>> {
    t_grid.iter().map(|&t| curve_row(s, t)).collect()
}

/// `steps` evenly spaced times from 0 to `t_max`, both ends included.
pub fn uniform_grid(t_max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => {
            let last = (steps - 1) as f64;
            (0..steps)
                .map(|i| if i == steps - 1 { t_max } else { t_max * i as f64 / last })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn scenario(kind: ScenarioKind, x: f64, ra: f64, rb: f64) -> Scenario {
        Scenario::new(kind, x, ra, rb).unwrap()
    }

    #[test]
    fn scenario_validation() {
        assert!(Scenario::new(ScenarioKind::QubitOnly, 0.3, 1.0, 1.0).is_err());
        assert!(Scenario::new(ScenarioKind::QubitOnly, 0.2, -1.0, 1.0).is_err());
        assert!(Scenario::new(ScenarioKind::QubitOnly, 0.2, 1.0, f64::INFINITY).is_err());
        assert_eq!("multilocal".parse::<ScenarioKind>().unwrap(), ScenarioKind::MultiLocal);
        assert!("both".parse::<ScenarioKind>().is_err());
    }

    #[test]
    fn analytic_negativity_values() {
        let q = scenario(ScenarioKind::QubitOnly, 0.25, 1.0, 1.0);
        assert_eq!(analytic_negativity(&q, 0.0), 0.125);
        let m = scenario(ScenarioKind::MultiLocal, 0.25, 1.0, 1.0);
        assert!(analytic_negativity(&m, LN_2) < 1e-16);
        for kind in ScenarioKind::ALL {
            assert_eq!(analytic_negativity(&scenario(kind, 0.125, 1.0, 1.0), 0.0), 0.0);
        }
    }

    #[test]
    fn analytic_times() {
        let t = analytic_esd_time(&scenario(ScenarioKind::QubitOnly, 0.25, 1.0, 0.0));
        assert!((t.time().unwrap() - 2.0 * LN_2).abs() < 1e-15);
        let t = analytic_esd_time(&scenario(ScenarioKind::MultiLocal, 0.25, 1.0, 1.0));
        assert!((t.time().unwrap() - LN_2).abs() < 1e-15);
        assert_eq!(
            analytic_esd_time(&scenario(ScenarioKind::QubitOnly, 0.1, 1.0, 1.0)),
            EsdTime::NeverEntangled
        );
        assert_eq!(
            analytic_esd_time(&scenario(ScenarioKind::QubitOnly, 0.125, 1.0, 1.0)),
            EsdTime::NeverEntangled
        );
        assert_eq!(
            analytic_esd_time(&scenario(ScenarioKind::QutritOnly, 0.2, 5.0, 0.0)),
            EsdTime::NoDeath
        );
    }

    #[test]
    fn numeric_times_match() {
        let q = scenario(ScenarioKind::QubitOnly, 0.25, 1.0, 0.0);
        let t = numeric_esd_time(&q, 10.0, 1e-10).unwrap().time().unwrap();
        assert!((t - 2.0 * LN_2).abs() < 1e-8);

        let b = scenario(ScenarioKind::QutritOnly, 0.25, 0.0, 2.0);
        let t = numeric_esd_time(&b, 10.0, 1e-10).unwrap().time().unwrap();
        assert!((t - LN_2).abs() < 1e-8);

        let never = scenario(ScenarioKind::QubitOnly, 1.0 / 16.0, 1.0, 1.0);
        assert_eq!(numeric_esd_time(&never, 10.0, 1e-10).unwrap(), EsdTime::NeverEntangled);
    }

    #[test]
    fn numeric_bracket_failure() {
        let q = scenario(ScenarioKind::QubitOnly, 0.25, 1.0, 0.0);
        assert!(matches!(
            numeric_esd_time(&q, 1.0, 1e-10),
            Err(Error::BracketFailure { .. })
        ));
        assert!(numeric_esd_time(&q, 0.0, 1e-10).is_err());
        assert!(numeric_esd_time(&q, 1.0, 0.0).is_err());
    }

    #[test]
    fn zero_rate_is_no_death() {
        let s = scenario(ScenarioKind::QubitOnly, 0.2, 0.0, 3.0);
        assert_eq!(numeric_esd_time_default(&s, 1e-10).unwrap(), EsdTime::NoDeath);
        let r = sweep(&s, &uniform_grid(5.0, 6)).unwrap();
        assert_eq!(r.esd_time, EsdTime::NoDeath);
        assert!(r.curve.iter().all(|row| (row.negativity_numeric - 0.075).abs() < 1e-14));
    }

    #[test]
    fn evolve_keeps_diagonal() {
        let s = scenario(ScenarioKind::MultiLocal, 0.2, 0.6, 1.1);
        assert_eq!(evolve(&s, 0.0).unwrap(), states::ansatz_x(0.2).unwrap());
        for t in [0.5, 1.0, 3.0] {
            let rho = evolve(&s, t).unwrap();
            for (i, d) in states::ANSATZ_DIAGONAL.iter().enumerate() {
                assert!((rho.entry(i, i).re - d).abs() < 1e-15);
            }
        }
        let q = scenario(ScenarioKind::QubitOnly, 0.2, 0.6, 1.1);
        assert!((evolve(&q, 1.5).unwrap().corner() - 0.2 * (-0.45f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn grid_is_inclusive() {
        assert_eq!(uniform_grid(4.0, 2), vec![0.0, 4.0]);
        let g = uniform_grid(4.0, 101);
        assert_eq!(g.len(), 101);
        assert_eq!(g[100], 4.0);
        assert!((g[50] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn sweep_crossing_and_order() {
        let q = scenario(ScenarioKind::QubitOnly, 0.25, 1.0, 1.0);
        let grid = uniform_grid(4.0, 101);
        let r = sweep(&q, &grid).unwrap();
        assert_eq!(r.curve.iter().map(|row| row.t).collect::<Vec<_>>(), grid);
        let first_zero = r.curve.iter().position(|row| row.negativity_numeric == 0.0).unwrap();
        assert!(grid[first_zero - 1] < 2.0 * LN_2 && 2.0 * LN_2 <= grid[first_zero]);

        let m = scenario(ScenarioKind::MultiLocal, 0.25, 1.0, 1.0);
        let rm = sweep(&m, &grid).unwrap();
        for (a, b) in rm.curve.iter().zip(&r.curve) {
            assert!(a.negativity_numeric <= b.negativity_numeric + 1e-15);
        }

        let zero = sweep(&scenario(ScenarioKind::QubitOnly, 0.0, 1.0, 1.0), &grid).unwrap();
        assert!(zero.curve.iter().all(|row| row.negativity_numeric == 0.0));
        assert_eq!(zero.esd_time, EsdTime::NeverEntangled);
    }

    #[test]
    fn closed_form_spectrum_sorted() {
        let s = scenario(ScenarioKind::QubitOnly, 0.25, 1.0, 0.0);
        assert_eq!(
            pt_spectrum_closed_form(&s, 0.0),
            vec![-0.125, 0.125, 0.125, 0.25, 0.25, 0.375]
        );
    }
}
