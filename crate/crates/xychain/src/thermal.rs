//! Gibbs thermal states ρ(T) = exp(-βH)/Z.
//!
//! Exponentiation goes through the eigendecomposition with the spectrum
//! shifted by the ground energy before exponentiating: at β = 50 the raw
//! Boltzmann factors overflow, while the shift cancels exactly in ρ. The
//! partition function is kept as a log for the same reason.

use ndarray::Array2;
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::operator::{scale_columns, Operator, HERMITICITY_TOL};

/// Normalized Gibbs density operator together with its inverse temperature
/// and (shifted) log partition function.
#[derive(Debug, Clone)]
pub struct ThermalState {
    rho: Operator,
    beta: f64,
    log_partition: f64,
    ground_energy: f64,
}

impl ThermalState {
    /// Density matrix.
    pub fn rho(&self) -> &Operator {
        &self.rho
    }

    /// Inverse temperature β = 1/T (k_B = 1).
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// log Tr exp(-β(H - E₀)), the partition function relative to the
    /// ground-energy shift. The unshifted log Z is this value minus β E₀.
    pub fn log_partition(&self) -> f64 {
        self.log_partition
    }

    /// Ground energy E₀ used for the shift.
    pub fn ground_energy(&self) -> f64 {
        self.ground_energy
    }

    /// Consume and return the density matrix.
    pub fn into_rho(self) -> Operator {
        self.rho
    }
}

/// Compute the Gibbs state of a Hermitian `h` at temperature `t > 0`.
///
/// ρ = V diag(e^{-β(λ_k - λ₀)}) V† / Σ_k e^{-β(λ_k - λ₀)}.
pub fn gibbs_state(h: &Operator, temperature: f64) -> Result<ThermalState> {
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::NonPositiveTemperature(temperature));
    }
    let beta = 1.0 / temperature;

    // The chain Hamiltonians are real; keep the whole pipeline in f64 there
    // and only lift to complex at the end.
    if let Some(real) = h.real_view() {
        let dev = h.hermiticity_deviation();
        if dev > HERMITICITY_TOL {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let (values, vectors) = real.eigh(UPLO::Lower)?;
        let ground = values[0];
        let weights: Vec<f64> = values
            .iter()
            .map(|e| (-beta * (e - ground)).exp())
            .collect();
        let z: f64 = weights.iter().sum();
        let mut scaled = vectors.clone();
        for (mut col, w) in scaled.columns_mut().into_iter().zip(weights.iter()) {
            let s = (w / z).sqrt();
            col.map_inplace(|x| *x *= s);
        }
        let rho_real: Array2<f64> = scaled.dot(&scaled.t());
        let rho = Operator::from_matrix(rho_real.map(|x| C64::new(*x, 0.0)))?;
        return Ok(ThermalState {
            rho,
            beta,
            log_partition: z.ln(),
            ground_energy: ground,
        });
    }

    let spectrum = h.eig_hermitian()?;
    let ground = spectrum.ground_energy();
    let weights: Vec<f64> = spectrum
        .eigenvalues()
        .iter()
        .map(|e| (-beta * (e - ground)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    // ρ = W W† with W = V diag(sqrt(w/z)) keeps ρ Hermitian by construction.
    let w = scale_columns(
        spectrum.eigenvectors(),
        weights.iter().map(|x| (x / z).sqrt()),
    );
    let rho = Operator::from_matrix(w.dot(&w.t().map(|x| x.conj())))?;
    Ok(ThermalState {
        rho,
        beta,
        log_partition: z.ln(),
        ground_energy: ground,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ChainSpec, FieldPattern};
    use crate::operator::{kron, pauli_z, Operator};

    fn trace_re(op: &Operator) -> f64 {
        op.trace().re
    }

    #[test]
    fn rejects_nonpositive_temperature() {
        let h = pauli_z();
        assert!(matches!(
            gibbs_state(&h, 0.0).unwrap_err(),
            Error::NonPositiveTemperature(_)
        ));
        assert!(gibbs_state(&h, -0.5).is_err());
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ndarray::Array2::zeros((2, 2));
        m[(0, 1)] = C64::new(1.0, 0.0);
        let op = Operator::from_matrix(m).unwrap();
        assert!(matches!(
            gibbs_state(&op, 1.0).unwrap_err(),
            Error::NotHermitian { .. }
        ));
    }

    #[test]
    fn infinite_temperature_limit_is_maximally_mixed() {
        let spec = ChainSpec::new(4, 0.5, 1.0, FieldPattern::Staggered).unwrap();
        let state = gibbs_state(&spec.hamiltonian().unwrap(), 1e6).unwrap();
        let dim = 16;
        let target = &Operator::identity(dim).unwrap() * (1.0 / dim as f64);
        assert!(state.rho().max_abs_diff(&target) < 1e-5);
    }

    #[test]
    fn two_level_boltzmann_limit() {
        // H = σ_z at T = 0.02: gap 2, β = 50, ρ ≈ diag(0, 1)
        let state = gibbs_state(&pauli_z(), 0.02).unwrap();
        assert!((state.rho().entry(1, 1).re - 1.0).abs() < 1e-10);
        assert!(state.rho().entry(0, 0).norm() < 1e-10);
        assert_eq!(state.ground_energy(), -1.0);
    }

    #[test]
    fn low_temperature_singlet_ground_state() {
        // H(γ=1, B=0, N=2): ground state (|01⟩ - |10⟩)/√2
        let spec = ChainSpec::new(2, 1.0, 0.0, FieldPattern::Uniform).unwrap();
        let state = gibbs_state(&spec.hamiltonian().unwrap(), 0.02).unwrap();
        let r = state.rho();
        // fidelity ⟨ψ⁻|ρ|ψ⁻⟩ for the X-form ρ reduces to the four middle entries
        let fidelity =
            0.5 * (r.entry(1, 1).re + r.entry(2, 2).re - r.entry(1, 2).re - r.entry(2, 1).re);
        assert!(fidelity > 1.0 - 1e-8, "fidelity {fidelity}");
    }

    #[test]
    fn gibbs_invariants_on_grid() {
        for n in [2usize, 4] {
            for gamma in [0.0, 0.5, 1.0] {
                for b in [-2.0, -0.5, 0.0, 1.5] {
                    for t in [0.02, 0.2] {
                        let spec = ChainSpec::new(n, gamma, b, FieldPattern::Staggered).unwrap();
                        let h = spec.hamiltonian().unwrap();
                        let state = gibbs_state(&h, t).unwrap();
                        let rho = state.rho();
                        assert!((trace_re(rho) - 1.0).abs() < 1e-12);
                        assert!(rho.hermiticity_deviation() < 1e-12);
                        let min_eig = rho.eig_hermitian().unwrap().ground_energy();
                        assert!(min_eig >= -1e-12, "min eigenvalue {min_eig}");
                        // ρ commutes with H
                        assert!(rho.commutator_max_norm(&h).unwrap() < 1e-10);
                        assert!(state.log_partition().is_finite());
                    }
                }
            }
        }
    }

    #[test]
    fn unitary_covariance() {
        use crate::model::{global_x_flip, sublattice_x_flip};
        let spec = ChainSpec::new(4, 0.5, 0.9, FieldPattern::Staggered).unwrap();
        let h = spec.hamiltonian().unwrap();
        for u in [global_x_flip(4).unwrap(), sublattice_x_flip(4).unwrap()] {
            let lhs = gibbs_state(&u.dot(&h).dot(&u), 0.2).unwrap();
            let rhs = u.dot(gibbs_state(&h, 0.2).unwrap().rho()).dot(&u);
            assert!(lhs.rho().max_abs_diff(&rhs) < 1e-11);
        }
    }

    #[test]
    fn complex_hermitian_path_matches_real_path() {
        // conjugate a real H by a phase gate; the rotated Hamiltonian has
        // genuinely complex entries, and the Gibbs state must rotate with it
        let spec = ChainSpec::new(2, 0.5, 0.7, FieldPattern::Uniform).unwrap();
        let h = spec.hamiltonian().unwrap();
        let mut s = ndarray::Array2::zeros((2, 2));
        s[(0, 0)] = C64::new(1.0, 0.0);
        s[(1, 1)] = C64::new(0.0, 1.0);
        let s = Operator::from_matrix(s).unwrap();
        let u = kron(&s, &Operator::identity(2).unwrap()).unwrap();
        let h_rot = u.dot(&h).dot(&u.adjoint());
        assert!(h_rot.real_view().is_none());
        let a = gibbs_state(&h, 0.2).unwrap();
        let b = gibbs_state(&h_rot, 0.2).unwrap();
        assert!((trace_re(b.rho()) - 1.0).abs() < 1e-12);
        assert!((a.log_partition() - b.log_partition()).abs() < 1e-10);
        let back = u.adjoint().dot(b.rho()).dot(&u);
        assert!(back.max_abs_diff(a.rho()) < 1e-11);
    }

    #[test]
    fn no_overflow_at_beta_50() {
        let spec = ChainSpec::new(6, 1.0, 2.0, FieldPattern::Uniform).unwrap();
        let state = gibbs_state(&spec.hamiltonian().unwrap(), 0.02).unwrap();
        assert!((trace_re(state.rho()) - 1.0).abs() < 1e-12);
        assert!(state
            .rho()
            .matrix()
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite()));
    }
}
