//! Self-check suite behind the CLI `verify` subcommand.
//!
//! Each check exercises one of the model's exact properties — operator-level
//! symmetries, closed-form versus numerical agreement, and Gibbs-state
//! structure — on deterministic parameter grids, and reports a pass/fail
//! line with the worst observed deviation.

use crate::entanglement::{
    analytic_xstate, extract_xstate, negativity_eig, negativity_tracenorm, partial_trace_pair,
    thermal_pair_negativity, xstate_negativity,
};
use crate::error::Result;
use crate::model::{global_x_flip, sublattice_x_flip, z2_commutator_norm, ChainSpec, FieldPattern};
use crate::thermal::gibbs_state;

/// Outcome of one named invariant check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    /// Worst deviation observed, and the tolerance it was held to.
    pub worst: f64,
    pub tolerance: f64,
}

impl CheckReport {
    fn from_deviation(name: &'static str, worst: f64, tolerance: f64) -> Self {
        Self {
            name,
            passed: worst < tolerance,
            worst,
            tolerance,
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(
            f,
            "{verdict}  {}  (worst {:.3e}, tolerance {:.0e})",
            self.name, self.worst, self.tolerance
        )
    }
}

const GAMMAS: [f64; 4] = [0.0, 1.0 / 3.0, 0.5, 1.0];
const FIELDS: [f64; 5] = [0.0, 0.3, 0.9, 1.4, 2.0];
const TEMPERATURES: [f64; 2] = [0.02, 0.2];
const SIZES: [usize; 3] = [2, 4, 6];

/// Hermiticity and global-parity commutation of every constructed
/// Hamiltonian on the grid.
pub fn check_hamiltonian_structure() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for &n in &SIZES {
        for &gamma in &GAMMAS {
            for &b in &FIELDS {
                for pattern in [FieldPattern::Uniform, FieldPattern::Staggered] {
                    let h = ChainSpec::new(n, gamma, b, pattern)?.hamiltonian()?;
                    worst = worst.max(h.hermiticity_deviation());
                    worst = worst.max(z2_commutator_norm(&h, n)?);
                }
            }
        }
    }
    Ok(CheckReport::from_deviation(
        "hamiltonian hermiticity and parity symmetry",
        worst,
        1e-13,
    ))
}

/// Operator identity U₁ H(γ, B) U₁ = H(γ, -B) for both patterns.
pub fn check_field_sign_symmetry() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for &n in &SIZES {
        let u = global_x_flip(n)?;
        for &gamma in &GAMMAS {
            for &b in &FIELDS {
                for pattern in [FieldPattern::Uniform, FieldPattern::Staggered] {
                    let h = ChainSpec::new(n, gamma, b, pattern)?.hamiltonian()?;
                    let h_neg = ChainSpec::new(n, gamma, -b, pattern)?.hamiltonian()?;
                    worst = worst.max(u.dot(&h).dot(&u).max_abs_diff(&h_neg));
                }
            }
        }
    }
    Ok(CheckReport::from_deviation(
        "field-sign reversal by the global x flip",
        worst,
        1e-13,
    ))
}

/// Negativity equality between B and -B.
pub fn check_negativity_field_symmetry() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for &n in &SIZES {
        for &gamma in &GAMMAS {
            for &b in &FIELDS {
                for pattern in [FieldPattern::Uniform, FieldPattern::Staggered] {
                    let spec = ChainSpec::new(n, gamma, b, pattern)?;
                    let plus = thermal_pair_negativity(&spec, 0.2, 1)?.value;
                    let minus = thermal_pair_negativity(&spec.with_field(-b), 0.2, 1)?.value;
                    worst = worst.max((plus - minus).abs());
                }
            }
        }
    }
    Ok(CheckReport::from_deviation(
        "negativity symmetric under B -> -B",
        worst,
        1e-11,
    ))
}

/// Operator identity U₂ H_stag(γ, B) U₂ = H_unif(-γ, B).
pub fn check_pattern_mapping() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for &n in &SIZES {
        let u = sublattice_x_flip(n)?;
        for &gamma in &GAMMAS {
            for &b in &FIELDS {
                let h_stag = ChainSpec::new(n, gamma, b, FieldPattern::Staggered)?.hamiltonian()?;
                let h_unif = ChainSpec::new(n, -gamma, b, FieldPattern::Uniform)?.hamiltonian()?;
                worst = worst.max(u.dot(&h_stag).dot(&u).max_abs_diff(&h_unif));
            }
        }
    }
    Ok(CheckReport::from_deviation(
        "staggered-to-uniform sublattice mapping",
        worst,
        1e-13,
    ))
}

/// Negativity equality of the two patterns at γ = 0.
pub fn check_gamma_zero_equivalence() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for &n in &SIZES {
        for &b in &FIELDS {
            let stag = ChainSpec::new(n, 0.0, b, FieldPattern::Staggered)?;
            let unif = ChainSpec::new(n, 0.0, b, FieldPattern::Uniform)?;
            let a = thermal_pair_negativity(&stag, 0.2, 1)?.value;
            let u = thermal_pair_negativity(&unif, 0.2, 1)?.value;
            worst = worst.max((a - u).abs());
        }
    }
    Ok(CheckReport::from_deviation(
        "pattern equivalence at gamma = 0",
        worst,
        1e-10,
    ))
}

/// Closed-form two-site negativity against the full numerical pipeline.
pub fn check_analytic_vs_numeric() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for &gamma in &GAMMAS {
        for &t in &TEMPERATURES {
            for pattern in [FieldPattern::Uniform, FieldPattern::Staggered] {
                let mut b = -2.0;
                while b <= 2.0 + 1e-9 {
                    let spec = ChainSpec::new(2, gamma, b, pattern)?;
                    let numeric = thermal_pair_negativity(&spec, t, 1)?.value;
                    let analytic = xstate_negativity(&analytic_xstate(pattern, gamma, b, t)?)?;
                    worst = worst.max((numeric - analytic).abs());
                    b += 0.1;
                }
            }
        }
    }
    Ok(CheckReport::from_deviation(
        "closed form matches diagonalization (N=2)",
        worst,
        1e-9,
    ))
}

/// Gibbs-state structure: unit trace, positivity, X-form reduced pairs, and
/// agreement of the three negativity routes.
pub fn check_thermal_structure() -> Result<CheckReport> {
    let mut worst = 0.0f64;
    for &n in &SIZES {
        for &gamma in &GAMMAS {
            for &b in &[0.0, 0.9, 2.0] {
                for &t in &TEMPERATURES {
                    for pattern in [FieldPattern::Uniform, FieldPattern::Staggered] {
                        let spec = ChainSpec::new(n, gamma, b, pattern)?;
                        let state = gibbs_state(&spec.hamiltonian()?, t)?;
                        let rho = state.rho();
                        worst = worst.max((rho.trace().re - 1.0).abs());
                        let min_eig = rho.eig_hermitian()?.ground_energy();
                        worst = worst.max((-min_eig).max(0.0));
                        let pair = partial_trace_pair(rho, 1)?;
                        let x = extract_xstate(&pair)?;
                        let n_eig = negativity_eig(&pair)?;
                        let n_tn = negativity_tracenorm(&pair)?;
                        let n_x = xstate_negativity(&x)?;
                        worst = worst.max((n_eig - n_tn).abs());
                        worst = worst.max((n_eig - n_x).abs());
                    }
                }
            }
        }
    }
    Ok(CheckReport::from_deviation(
        "thermal states and negativity routes",
        worst,
        1e-11,
    ))
}

/// Run all checks in order.
pub fn run_all() -> Result<Vec<CheckReport>> {
    Ok(vec![
        check_hamiltonian_structure()?,
        check_field_sign_symmetry()?,
        check_negativity_field_symmetry()?,
        check_pattern_mapping()?,
        check_gamma_zero_equivalence()?,
        check_analytic_vs_numeric()?,
        check_thermal_structure()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for report in run_all().unwrap() {
            assert!(report.passed, "{report}");
        }
    }
}
