//! Browser bindings for the dephasing simulator.
//!
//! Three operations back the demo page in `www/`: a negativity curve for a
//! scenario, the closed-form and bisection disentanglement times, and the
//! partial-transpose spectrum at a chosen time.

use esd_core::entanglement;
use esd_core::esd::{self, EsdTime, Scenario, ScenarioKind};
use esd_core::linalg::Subsystem;
use wasm_bindgen::prelude::*;

const ESD_TOL: f64 = 1e-12;

fn scenario(kind: &str, x: f64, rate_a: f64, rate_b: f64) -> esd_core::Result<Scenario> {
    Scenario::new(kind.parse::<ScenarioKind>()?, x, rate_a, rate_b)
}

fn to_js(e: esd_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// Columns of a sweep over a uniform time grid.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct Curve {
    t: Vec<f64>,
    corner: Vec<f64>,
    numeric: Vec<f64>,
    analytic: Vec<f64>,
    min_pt: Vec<f64>,
    esd_time: EsdTime,
}

#[wasm_bindgen]
impl Curve {
    pub fn t(&self) -> Vec<f64> {
        self.t.clone()
    }

    pub fn corner(&self) -> Vec<f64> {
        self.corner.clone()
    }

    pub fn negativity_numeric(&self) -> Vec<f64> {
        self.numeric.clone()
    }

    pub fn negativity_analytic(&self) -> Vec<f64> {
        self.analytic.clone()
    }

    pub fn min_pt_eigenvalue(&self) -> Vec<f64> {
        self.min_pt.clone()
    }

    /// Bisection disentanglement time, if entanglement dies at a finite time.
    pub fn esd_time(&self) -> Option<f64> {
        self.esd_time.time()
    }

    /// Largest `|numeric - analytic|` over the grid.
    pub fn max_deviation(&self) -> f64 {
        self.numeric
            .iter()
            .zip(&self.analytic)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn curve_impl(kind: &str, x: f64, rate_a: f64, rate_b: f64, t_max: f64, steps: usize) -> esd_core::Result<Curve> {
    if !(t_max.is_finite() && t_max > 0.0) || steps < 2 {
        return Err(esd_core::Error::InvalidParameter(format!(
            "need t_max > 0 and at least 2 steps, got t_max = {t_max}, steps = {steps}"
        )));
    }
    let s = scenario(kind, x, rate_a, rate_b)?;
    let report = esd::sweep(&s, &esd::uniform_grid(t_max, steps))?;
    let col = |f: fn(&esd::CurveRow) -> f64| report.curve.iter().map(f).collect::<Vec<_>>();
    Ok(Curve {
        t: col(|r| r.t),
        corner: col(|r| r.corner),
        numeric: col(|r| r.negativity_numeric),
        analytic: col(|r| r.negativity_analytic),
        min_pt: col(|r| r.min_pt_eigenvalue),
        esd_time: report.esd_time,
    })
}

/// Negativity curve for `kind` in `qubit | qutrit | multilocal`.
#[wasm_bindgen]
pub fn negativity_curve(
    kind: &str,
    x: f64,
    rate_a: f64,
    rate_b: f64,
    t_max: f64,
    steps: usize,
) -> Result<Curve, JsError> {
    curve_impl(kind, x, rate_a, rate_b, t_max, steps).map_err(to_js)
}

#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct EsdSummary {
    analytic: EsdTime,
    numeric: EsdTime,
}

#[wasm_bindgen]
impl EsdSummary {
    pub fn analytic(&self) -> Option<f64> {
        self.analytic.time()
    }

    pub fn numeric(&self) -> Option<f64> {
        self.numeric.time()
    }

    /// `"finite"`, `"never-entangled"` or `"no-death"`.
    pub fn status(&self) -> String {
        match self.analytic {
            EsdTime::At(_) => "finite".into(),
            other => other.to_string(),
        }
    }
}

pub fn esd_times_impl(kind: &str, x: f64, rate_a: f64, rate_b: f64) -> esd_core::Result<EsdSummary> {
    let s = scenario(kind, x, rate_a, rate_b)?;
    Ok(EsdSummary {
        analytic: esd::analytic_esd_time(&s),
        numeric: esd::numeric_esd_time_default(&s, ESD_TOL)?,
    })
}

#[wasm_bindgen]
pub fn esd_times(kind: &str, x: f64, rate_a: f64, rate_b: f64) -> Result<EsdSummary, JsError> {
    esd_times_impl(kind, x, rate_a, rate_b).map_err(to_js)
}

/// Numeric partial-transpose spectrum (ascending) followed by the closed form,
/// twelve values in total.
pub fn pt_spectrum_impl(kind: &str, x: f64, rate_a: f64, rate_b: f64, t: f64) -> esd_core::Result<Vec<f64>> {
    let s = scenario(kind, x, rate_a, rate_b)?;
    let numeric = entanglement::pt_spectrum(&esd::evolve(&s, t)?, Subsystem::A);
    let mut out = numeric.eigenvalues;
    out.extend(esd::pt_spectrum_closed_form(&s, t));
    Ok(out)
}

#[wasm_bindgen]
pub fn pt_spectrum(kind: &str, x: f64, rate_a: f64, rate_b: f64, t: f64) -> Result<Vec<f64>, JsError> {
    pt_spectrum_impl(kind, x, rate_a, rate_b, t).map_err(to_js)
}
