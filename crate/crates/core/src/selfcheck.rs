//! Numeric-versus-closed-form consistency checks run by `esd selfcheck`.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channels::{self, DephasingParams};
use crate::entanglement::{self, negativity_wrt};
use crate::error::Result;
use crate::esd::{self, Scenario, ScenarioKind};
use crate::linalg::{BipartiteDims, Subsystem};
use crate::sampling;
use crate::tolerances;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)
    }
}

fn outcome(name: &'static str, worst: f64, bound: f64) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: worst <= bound,
        detail: format!("worst {worst:.3e} (bound {bound:.0e})"),
    }
}

const SEED: u64 = 0x5eed_e5d0;

/// Runs every check for the family member `x` under rates `rate_a`, `rate_b`.
pub fn run_all(x: f64, rate_a: f64, rate_b: f64) -> Result<Vec<CheckOutcome>> {
    let scenarios = ScenarioKind::ALL
        .iter()
        .map(|&k| Scenario::new(k, x, rate_a, rate_b))
        .collect::<Result<Vec<_>>>()?;

    Ok(vec![
        completeness(rate_a.max(rate_b))?,
        negativity_formula(&scenarios)?,
        closed_form_spectrum(&scenarios)?,
        esd_times(&scenarios)?,
        irreversibility(&scenarios)?,
        subsystem_symmetry(),
        channel_preservation()?,
    ])
}

fn completeness(rate: f64) -> Result<CheckOutcome> {
    let rate = if rate > 0.0 { rate } else { 1.0 };
    let mut worst: f64 = 0.0;
    for k in 0..20 {
        let p = DephasingParams::new(rate, 0.37 * k as f64)?;
        worst = worst
            .max(channels::dephasing_qubit(p).completeness_defect())
            .max(channels::dephasing_qutrit(p).completeness_defect());
    }
    Ok(outcome("kraus completeness", worst, tolerances::COMPLETENESS))
}

fn horizon(s: &Scenario) -> f64 {
    let rate = s.effective_rate();
    if rate > 0.0 {
        5.0 / rate
    } else {
        5.0
    }
}

fn negativity_formula(scenarios: &[Scenario]) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for s in scenarios {
        for t in esd::uniform_grid(horizon(s), 200) {
            let numeric = esd::numeric_negativity(s, t)?.value;
            worst = worst.max((numeric - esd::analytic_negativity(s, t)).abs());
        }
    }
    Ok(outcome(
        "negativity vs max{0, x g(t) - 1/8}",
        worst,
        tolerances::SPECTRAL,
    ))
}

fn closed_form_spectrum(scenarios: &[Scenario]) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for s in scenarios {
        for t in esd::uniform_grid(horizon(s), 25) {
            let numeric = entanglement::pt_spectrum(&esd::evolve(s, t)?, Subsystem::A);
            let closed = esd::pt_spectrum_closed_form(s, t);
            for (a, b) in numeric.eigenvalues.iter().zip(&closed) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    Ok(outcome(
        "partial-transpose spectrum closed form",
        worst,
        tolerances::SPECTRAL,
    ))
}

fn esd_times(scenarios: &[Scenario]) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    let mut mismatched = Vec::new();
    for s in scenarios {
        let analytic = esd::analytic_esd_time(s);
        let numeric = esd::numeric_esd_time_default(s, 1e-12)?;
        match (analytic.time(), numeric.time()) {
            (Some(a), Some(n)) => worst = worst.max((a - n).abs()),
            _ if analytic == numeric => {}
            _ => mismatched.push(s.kind().name()),
        }
    }
    let mut check = outcome("bisection vs closed-form disentanglement time", worst, 1e-8);
    if !mismatched.is_empty() {
        check.passed = false;
        check.detail = format!("variant mismatch for {}", mismatched.join(", "));
    }
    Ok(check)
}

fn irreversibility(scenarios: &[Scenario]) -> Result<CheckOutcome> {
    let mut violations = 0usize;
    for s in scenarios {
        let grid = esd::uniform_grid(horizon(s), 200);
        let report = esd::sweep(s, &grid)?;
        let mut dead = false;
        let mut prev = f64::INFINITY;
        for row in &report.curve {
            if row.negativity_numeric > prev + tolerances::SPECTRAL || (dead && row.negativity_numeric > 0.0) {
                violations += 1;
            }
            dead |= row.negativity_numeric == 0.0;
            prev = row.negativity_numeric;
        }
    }
    Ok(CheckOutcome {
        name: "negativity non-increasing and never revives",
        passed: violations == 0,
        detail: format!("{violations} violations"),
    })
}

fn subsystem_symmetry() -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let dims = BipartiteDims::qubit_qutrit();
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let rho = sampling::random_density(&mut rng, dims);
        let a = negativity_wrt(&rho, Subsystem::A).value;
        let b = negativity_wrt(&rho, Subsystem::B).value;
        worst = worst.max((a - b).abs());
    }
    outcome("negativity via T_A equals via T_B", worst, tolerances::SPECTRAL)
}

fn channel_preservation() -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let dims = BipartiteDims::qubit_qutrit();
    let (pa, pb) = (DephasingParams::new(1.0, 0.7)?, DephasingParams::new(0.5, 0.7)?);
    let (qa, qb) = (channels::dephasing_qubit(pa), channels::dephasing_qutrit(pb));
    let mut worst_trace: f64 = 0.0;
    let mut rejected = 0usize;
    for _ in 0..100 {
        let rho = sampling::random_density(&mut rng, dims);
        // apply() validates Hermiticity, trace and positivity of its output.
        match channels::apply_multilocal(&qa, &qb, &rho) {
            Ok(out) => worst_trace = worst_trace.max((out.matrix().trace().re - 1.0).abs()),
            Err(_) => rejected += 1,
        }
    }
    let mut check = outcome("channels preserve valid states", worst_trace, tolerances::TRACE);
    if rejected > 0 {
        check.passed = false;
        check.detail = format!("{rejected} outputs failed validation");
    }
    Ok(check)
}
