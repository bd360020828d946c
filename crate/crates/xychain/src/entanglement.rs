//! Two-qubit reduced density matrices, partial-transpose negativity, and the
//! X-state closed form.
//!
//! The chain's global parity symmetry forces every nearest-neighbor reduced
//! density matrix into X form in the computational basis,
//!
//! ```text
//!         | a1  0   0   b1 |
//!  ρ  =   | 0   a2  b2  0  |
//!         | 0   b2  a3  0  |
//!         | b1  0   0   a4 |
//! ```
//!
//! for which the negativity has a closed form in the six real parameters.
//! Three routes to the same number are provided — partial-transpose
//! eigenvalues, the trace norm, and the closed form — and the test suite
//! holds them to mutual agreement at 1e-12.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::model::{ChainSpec, FieldPattern};
use crate::operator::Operator;
use crate::thermal::gibbs_state;

/// Entries off the X pattern above this magnitude are treated as a
/// symmetry-breaking bug rather than noise.
pub const OFF_X_TOL: f64 = 1e-10;

/// Partial-transpose eigenvalues in (-NEG_EIG_FLOOR, 0) count as zero.
pub const NEG_EIG_FLOOR: f64 = 1e-12;

const DENSITY_TRACE_TOL: f64 = 1e-8;

/// Two-qubit X-form density matrix parameters: diagonal weights a1..a4,
/// corner element b1 = ρ14 and inner element b2 = ρ23 (both real).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    a1: f64,
    a2: f64,
    a3: f64,
    a4: f64,
    b1: f64,
    b2: f64,
    normalized: bool,
}

impl XState {
    /// Validate and wrap raw X-state parameters (not yet normalized).
    ///
    /// Requires non-negative diagonal weights and the positivity conditions
    /// a1·a4 ≥ b1² and a2·a3 ≥ b2² within a 1e-12 slack.
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64, b1: f64, b2: f64) -> Result<Self> {
        for (name, v) in [("a1", a1), ("a2", a2), ("a3", a3), ("a4", a4)] {
            if !v.is_finite() || v < -1e-12 {
                return Err(Error::InvalidXState(format!("{name} = {v} must be >= 0")));
            }
        }
        if !b1.is_finite() || !b2.is_finite() {
            return Err(Error::InvalidXState("b1, b2 must be finite".into()));
        }
        if a1 * a4 < b1 * b1 - 1e-12 {
            return Err(Error::InvalidXState(format!(
                "corner block not positive: a1*a4 = {} < b1^2 = {}",
                a1 * a4,
                b1 * b1
            )));
        }
        if a2 * a3 < b2 * b2 - 1e-12 {
            return Err(Error::InvalidXState(format!(
                "inner block not positive: a2*a3 = {} < b2^2 = {}",
                a2 * a3,
                b2 * b2
            )));
        }
        Ok(Self {
            a1,
            a2,
            a3,
            a4,
            b1,
            b2,
            normalized: false,
        })
    }

    /// Divide all six parameters by the trace a1+a2+a3+a4.
    pub fn normalized(self) -> Result<Self> {
        let z = self.a1 + self.a2 + self.a3 + self.a4;
        if z <= 0.0 || !z.is_finite() {
            return Err(Error::InvalidXState(format!(
                "trace {z} must be positive and finite"
            )));
        }
        Ok(Self {
            a1: self.a1 / z,
            a2: self.a2 / z,
            a3: self.a3 / z,
            a4: self.a4 / z,
            b1: self.b1 / z,
            b2: self.b2 / z,
            normalized: true,
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// (a1, a2, a3, a4).
    pub fn diagonal(&self) -> (f64, f64, f64, f64) {
        (self.a1, self.a2, self.a3, self.a4)
    }

    /// (b1, b2) — corner and inner off-diagonal elements.
    pub fn off_diagonal(&self) -> (f64, f64) {
        (self.b1, self.b2)
    }

    /// Trace a1+a2+a3+a4.
    pub fn trace(&self) -> f64 {
        self.a1 + self.a2 + self.a3 + self.a4
    }

    /// Assemble the dense 4x4 matrix.
    pub fn to_operator(&self) -> Operator {
        let mut m = ndarray::Array2::zeros((4, 4));
        m[(0, 0)] = C64::new(self.a1, 0.0);
        m[(1, 1)] = C64::new(self.a2, 0.0);
        m[(2, 2)] = C64::new(self.a3, 0.0);
        m[(3, 3)] = C64::new(self.a4, 0.0);
        m[(0, 3)] = C64::new(self.b1, 0.0);
        m[(3, 0)] = C64::new(self.b1, 0.0);
        m[(1, 2)] = C64::new(self.b2, 0.0);
        m[(2, 1)] = C64::new(self.b2, 0.0);
        Operator::from_matrix(m).expect("4x4 is always a valid operator shape")
    }
}

/// Negativity of a nearest-neighbor pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairNegativity {
    /// 1-based (i, i+1 mod N) site pair, first site first.
    pub pair: (usize, usize),
    /// Negativity value in [0, 1/2].
    pub value: f64,
}

/// Trace out all sites except {i, i+1 mod N} of an N-site density matrix.
///
/// Site i becomes the most significant qubit of the returned 4x4 matrix, so
/// for the wrap-around pair (N, 1) site N comes first.
pub fn partial_trace_pair(rho: &Operator, site: usize) -> Result<Operator> {
    let n = rho.n_sites();
    if n < 2 {
        return Err(Error::InvalidShape(format!(
            "partial trace to a pair needs at least 2 sites, got {n}"
        )));
    }
    if site == 0 || site > n {
        return Err(Error::SiteOutOfRange { site, n_sites: n });
    }
    check_density(rho)?;
    let partner = site % n + 1;
    // bit position of a 1-based site, counting from the LSB
    let pos_i = n - site;
    let pos_j = n - partner;
    let rest_positions: Vec<usize> = (0..n)
        .rev()
        .filter(|p| *p != pos_i && *p != pos_j)
        .collect();

    let mut out = ndarray::Array2::<C64>::zeros((4, 4));
    let m = rho.matrix();
    for rest in 0..(1usize << (n - 2)) {
        let mut base = 0usize;
        for (k, p) in rest_positions.iter().enumerate() {
            if (rest >> (rest_positions.len() - 1 - k)) & 1 == 1 {
                base |= 1 << p;
            }
        }
        for p in 0..2usize {
            for q in 0..2usize {
                let row_full = base | (p << pos_i) | (q << pos_j);
                for pp in 0..2usize {
                    for qq in 0..2usize {
                        let col_full = base | (pp << pos_i) | (qq << pos_j);
                        out[(2 * p + q, 2 * pp + qq)] += m[(row_full, col_full)];
                    }
                }
            }
        }
    }
    Operator::from_matrix(out)
}

fn check_density(rho: &Operator) -> Result<()> {
    let dev = rho.hermiticity_deviation();
    if dev > 1e-10 {
        return Err(Error::NotDensityMatrix(format!(
            "hermiticity deviation {dev:.3e} exceeds 1e-10"
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > DENSITY_TRACE_TOL || tr.im.abs() > DENSITY_TRACE_TOL {
        return Err(Error::NotDensityMatrix(format!("trace {tr} is not 1")));
    }
    Ok(())
}

fn check_density4(rho4: &Operator) -> Result<()> {
    if rho4.dim() != 4 {
        return Err(Error::InvalidShape(format!(
            "expected a 4x4 two-qubit matrix, got dim {}",
            rho4.dim()
        )));
    }
    check_density(rho4)
}

/// Read the six X-state parameters out of a 4x4 density matrix.
///
/// Entries off the X pattern above [`OFF_X_TOL`] are a hard error: the
/// chain's parity symmetry guarantees they vanish, so their presence signals
/// a bug upstream, not data to be discarded. The b elements must be real to
/// the same tolerance.
pub fn extract_xstate(rho4: &Operator) -> Result<XState> {
    check_density4(rho4)?;
    let mut max_off = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let on_x = i == j || i + j == 3;
            if !on_x {
                max_off = max_off.max(rho4.entry(i, j).norm());
            }
        }
    }
    if max_off > OFF_X_TOL {
        return Err(Error::NotXForm(format!(
            "off-pattern entry magnitude {max_off:.3e} exceeds {OFF_X_TOL:.0e}"
        )));
    }
    let b1c = rho4.entry(0, 3);
    let b2c = rho4.entry(1, 2);
    if b1c.im.abs() > OFF_X_TOL || b2c.im.abs() > OFF_X_TOL {
        return Err(Error::NotXForm(format!(
            "complex anti-diagonal elements: im(b1) = {:.3e}, im(b2) = {:.3e}",
            b1c.im, b2c.im
        )));
    }
    let state = XState::new(
        rho4.entry(0, 0).re,
        rho4.entry(1, 1).re,
        rho4.entry(2, 2).re,
        rho4.entry(3, 3).re,
        b1c.re,
        b2c.re,
    )?;
    // input had unit trace, so the parameters are already normalized
    Ok(XState {
        normalized: true,
        ..state
    })
}

/// Transpose the first-qubit indices of a 4x4 matrix.
///
/// For X states this is the same as swapping b1 and b2, but the general
/// index transpose stays correct even when an upstream symmetry bug leaves
/// entries off the X pattern; the swap identity is a test, not an
/// assumption here.
pub fn partial_transpose_first(rho4: &Operator) -> Result<Operator> {
    if rho4.dim() != 4 {
        return Err(Error::InvalidShape(format!(
            "partial transpose expects a 4x4 matrix, got dim {}",
            rho4.dim()
        )));
    }
    let mut out = ndarray::Array2::zeros((4, 4));
    for i1 in 0..2usize {
        for i2 in 0..2usize {
            for j1 in 0..2usize {
                for j2 in 0..2usize {
                    out[(2 * i1 + i2, 2 * j1 + j2)] = rho4.entry(2 * j1 + i2, 2 * i1 + j2);
                }
            }
        }
    }
    Operator::from_matrix(out)
}

/// Negativity as the absolute sum of negative partial-transpose eigenvalues.
pub fn negativity_eig(rho4: &Operator) -> Result<f64> {
    check_density4(rho4)?;
    let pt = partial_transpose_first(rho4)?;
    let spectrum = pt.eig_hermitian()?;
    Ok(spectrum
        .eigenvalues()
        .iter()
        .filter(|w| **w <= -NEG_EIG_FLOOR)
        .map(|w| -w)
        .sum())
}

/// Negativity as (‖ρ^{T₁}‖₁ - 1)/2, the trace norm being the sum of absolute
/// eigenvalues of the (Hermitian) partial transpose.
pub fn negativity_tracenorm(rho4: &Operator) -> Result<f64> {
    check_density4(rho4)?;
    let pt = partial_transpose_first(rho4)?;
    let spectrum = pt.eig_hermitian()?;
    let trace_norm: f64 = spectrum.eigenvalues().iter().map(|w| w.abs()).sum();
    Ok((trace_norm - 1.0) / 2.0)
}

/// Closed-form negativity of a normalized X state:
///
/// ```text
/// N = 1/2 max[0, √((a1-a4)² + 4 b2²) - a1 - a4]
///   + 1/2 max[0, √((a2-a3)² + 4 b1²) - a2 - a3]
/// ```
pub fn xstate_negativity(x: &XState) -> Result<f64> {
    if !x.is_normalized() {
        return Err(Error::UnnormalizedXState { sum: x.trace() });
    }
    let (a1, a2, a3, a4) = x.diagonal();
    let (b1, b2) = x.off_diagonal();
    let corner = ((a1 - a4).powi(2) + 4.0 * b2 * b2).sqrt() - a1 - a4;
    let inner = ((a2 - a3).powi(2) + 4.0 * b1 * b1).sqrt() - a2 - a3;
    Ok(0.5 * corner.max(0.0) + 0.5 * inner.max(0.0))
}

/// Unnormalized two-site thermal X-state elements in closed form.
///
/// These are the Boltzmann weights of the two-site chain at inverse
/// temperature β = 1/T, written per field pattern with
/// D = √(16B² + (1∓γ)²):
///
/// staggered: a1 = a4 = cosh[β(1-γ)/4],
///            a2,a3 = cosh(βD/4) ∓ 4B sinh(βD/4)/D,
///            b1 = -sinh[β(1-γ)/4], b2 = -(1+γ) sinh(βD/4)/D;
///
/// uniform:   a2 = a3 = cosh[β(1+γ)/4],
///            a1,a4 = cosh(βD/4) ∓ 4B sinh(βD/4)/D,
///            b1 = -(1-γ) sinh(βD/4)/D, b2 = -sinh[β(1+γ)/4].
///
/// The signs follow this crate's σ_z = diag(1, -1) basis (the spin-down
/// state is |1⟩); the removable D → 0 singularity in sinh(βD/4)/D is
/// replaced by its series below 1e-8.
pub fn analytic_xstate_unnormalized(
    pattern: FieldPattern,
    gamma: f64,
    field: f64,
    temperature: f64,
) -> Result<XState> {
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::NonPositiveTemperature(temperature));
    }
    let beta = 1.0 / temperature;
    let [a1, a2, a3, a4, b1, b2] = analytic_elements(pattern, gamma, field, beta, 0.0);
    XState::new(a1, a2, a3, a4, b1, b2)
}

/// Normalized two-site thermal X state in closed form.
///
/// Same elements as [`analytic_xstate_unnormalized`] divided by their trace;
/// internally the Boltzmann weights are rescaled before normalizing so the
/// result stays finite at arbitrarily low temperature.
pub fn analytic_xstate(
    pattern: FieldPattern,
    gamma: f64,
    field: f64,
    temperature: f64,
) -> Result<XState> {
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::NonPositiveTemperature(temperature));
    }
    let beta = 1.0 / temperature;
    // shift by the largest exponent so cosh/sinh never overflow
    let (x, y) = block_arguments(pattern, gamma, field, beta);
    let shift = x.max(y.abs());
    let [a1, a2, a3, a4, b1, b2] = analytic_elements(pattern, gamma, field, beta, shift);
    XState::new(a1, a2, a3, a4, b1, b2)?.normalized()
}

/// Block exponents (βD/4, β(1∓γ)/4) entering the closed form.
fn block_arguments(pattern: FieldPattern, gamma: f64, field: f64, beta: f64) -> (f64, f64) {
    match pattern {
        FieldPattern::Staggered => {
            let d = (16.0 * field * field + (1.0 + gamma).powi(2)).sqrt();
            (beta * d / 4.0, beta * (1.0 - gamma) / 4.0)
        }
        FieldPattern::Uniform => {
            let d = (16.0 * field * field + (1.0 - gamma).powi(2)).sqrt();
            (beta * d / 4.0, beta * (1.0 + gamma) / 4.0)
        }
    }
}

/// cosh(x) e^{-shift} without forming cosh(x) itself.
fn cosh_shifted(x: f64, shift: f64) -> f64 {
    0.5 * ((x - shift).exp() + (-x - shift).exp())
}

/// sinh(x) e^{-shift}.
fn sinh_shifted(x: f64, shift: f64) -> f64 {
    0.5 * ((x - shift).exp() - (-x - shift).exp())
}

/// sinh(βD/4)/D scaled by e^{-shift}, with the removable D → 0 limit
/// β/4 + (β/4)³ D²/6 spliced in below D = 1e-8.
fn sinh_over_d(beta: f64, d: f64, shift: f64) -> f64 {
    if d < 1e-8 {
        let q = beta / 4.0;
        (q + q.powi(3) * d * d / 6.0) * (-shift).exp()
    } else {
        sinh_shifted(beta * d / 4.0, shift) / d
    }
}

fn analytic_elements(
    pattern: FieldPattern,
    gamma: f64,
    field: f64,
    beta: f64,
    shift: f64,
) -> [f64; 6] {
    let b = field;
    match pattern {
        FieldPattern::Staggered => {
            let d = (16.0 * b * b + (1.0 + gamma).powi(2)).sqrt();
            let ch_d = cosh_shifted(beta * d / 4.0, shift);
            let sh_d = sinh_over_d(beta, d, shift);
            let y = beta * (1.0 - gamma) / 4.0;
            let a1 = cosh_shifted(y, shift);
            let a2 = ch_d - 4.0 * b * sh_d;
            let a3 = ch_d + 4.0 * b * sh_d;
            let b1 = -sinh_shifted(y, shift);
            let b2 = -(1.0 + gamma) * sh_d;
            [a1, a2, a3, a1, b1, b2]
        }
        FieldPattern::Uniform => {
            let d = (16.0 * b * b + (1.0 - gamma).powi(2)).sqrt();
            let ch_d = cosh_shifted(beta * d / 4.0, shift);
            let sh_d = sinh_over_d(beta, d, shift);
            let y = beta * (1.0 + gamma) / 4.0;
            let a1 = ch_d - 4.0 * b * sh_d;
            let a2 = cosh_shifted(y, shift);
            let a4 = ch_d + 4.0 * b * sh_d;
            let b1 = -(1.0 - gamma) * sh_d;
            let b2 = -sinh_shifted(y, shift);
            [a1, a2, a2, a4, b1, b2]
        }
    }
}

/// End-to-end nearest-neighbor thermal negativity: build the Hamiltonian,
/// form the Gibbs state, trace down to the pair (site, site+1 mod N), and
/// take the partial-transpose negativity.
pub fn thermal_pair_negativity(
    spec: &ChainSpec,
    temperature: f64,
    site: usize,
) -> Result<PairNegativity> {
    let h = spec.hamiltonian()?;
    let state = gibbs_state(&h, temperature)?;
    let rho_pair = partial_trace_pair(state.rho(), site)?;
    let value = negativity_eig(&rho_pair)?;
    let partner = site % spec.n_sites() + 1;
    Ok(PairNegativity {
        pair: (site, partner),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::kron;
    use ndarray::array;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn bell_phi_plus() -> Operator {
        // (|00⟩ + |11⟩)/√2
        let m = array![
            [c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)],
        ];
        Operator::from_matrix(m).unwrap()
    }

    fn psi_minus() -> Operator {
        // (|01⟩ - |10⟩)/√2
        let m = array![
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.5, 0.0), c(-0.5, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(-0.5, 0.0), c(0.5, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        ];
        Operator::from_matrix(m).unwrap()
    }

    fn maximally_mixed(n_sites: usize) -> Operator {
        let dim = 1usize << n_sites;
        &Operator::identity(dim).unwrap() * (1.0 / dim as f64)
    }

    #[test]
    fn partial_trace_two_sites_is_identity_map() {
        let spec = ChainSpec::new(2, 0.5, 0.4, FieldPattern::Staggered).unwrap();
        let rho = gibbs_state(&spec.hamiltonian().unwrap(), 0.2)
            .unwrap()
            .into_rho();
        let reduced = partial_trace_pair(&rho, 1).unwrap();
        assert!(reduced.max_abs_diff(&rho) < 1e-15);
    }

    #[test]
    fn partial_trace_of_maximally_mixed() {
        let rho = maximally_mixed(4);
        for site in 1..=4 {
            let reduced = partial_trace_pair(&rho, site).unwrap();
            assert!(reduced.max_abs_diff(&maximally_mixed(2)) < 1e-15);
        }
    }

    #[test]
    fn partial_trace_product_basis_state() {
        // |0101⟩⟨0101| at sites (2,3) reduces to |10⟩⟨10|
        let dim = 16;
        let mut m = ndarray::Array2::zeros((dim, dim));
        m[(0b0101, 0b0101)] = c(1.0, 0.0);
        let rho = Operator::from_matrix(m).unwrap();
        let reduced = partial_trace_pair(&rho, 2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == 2 && j == 2 { 1.0 } else { 0.0 };
                assert!((reduced.entry(i, j) - c(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn partial_trace_wraparound_pair_orders_sites() {
        // |0001⟩⟨0001|: pair (4,1) puts site 4 first -> |10⟩⟨10|
        let dim = 16;
        let mut m = ndarray::Array2::zeros((dim, dim));
        m[(0b0001, 0b0001)] = c(1.0, 0.0);
        let rho = Operator::from_matrix(m).unwrap();
        let reduced = partial_trace_pair(&rho, 4).unwrap();
        assert!((reduced.entry(2, 2).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_bad_input() {
        let rho = maximally_mixed(4);
        assert!(matches!(
            partial_trace_pair(&rho, 5).unwrap_err(),
            Error::SiteOutOfRange { .. }
        ));
        let not_density = Operator::identity(16).unwrap();
        assert!(matches!(
            partial_trace_pair(&not_density, 1).unwrap_err(),
            Error::NotDensityMatrix(_)
        ));
    }

    #[test]
    fn extract_xstate_maximally_mixed() {
        let x = extract_xstate(&maximally_mixed(2)).unwrap();
        let (a1, a2, a3, a4) = x.diagonal();
        assert_eq!((a1, a2, a3, a4), (0.25, 0.25, 0.25, 0.25));
        assert_eq!(x.off_diagonal(), (0.0, 0.0));
        assert!(x.is_normalized());
    }

    #[test]
    fn extract_xstate_singlet() {
        let x = extract_xstate(&psi_minus()).unwrap();
        let (a1, a2, a3, a4) = x.diagonal();
        assert_eq!((a1, a4), (0.0, 0.0));
        assert_eq!((a2, a3), (0.5, 0.5));
        assert_eq!(x.off_diagonal(), (0.0, -0.5));
    }

    #[test]
    fn extract_xstate_rejects_off_pattern_entries() {
        let mut m = maximally_mixed(2).into_matrix();
        m[(0, 1)] = c(1e-6, 0.0);
        m[(1, 0)] = c(1e-6, 0.0);
        let rho = Operator::from_matrix(m).unwrap();
        assert!(matches!(
            extract_xstate(&rho).unwrap_err(),
            Error::NotXForm(_)
        ));
    }

    #[test]
    fn extract_xstate_rejects_complex_b() {
        let mut m = maximally_mixed(2).into_matrix();
        m[(0, 3)] = c(0.0, 1e-6);
        m[(3, 0)] = c(0.0, -1e-6);
        let rho = Operator::from_matrix(m).unwrap();
        assert!(matches!(
            extract_xstate(&rho).unwrap_err(),
            Error::NotXForm(_)
        ));
    }

    #[test]
    fn negativity_of_maximally_mixed_is_zero() {
        let rho = maximally_mixed(2);
        assert_eq!(negativity_eig(&rho).unwrap(), 0.0);
        assert!(negativity_tracenorm(&rho).unwrap().abs() < 1e-14);
    }

    #[test]
    fn negativity_of_bell_state_is_half() {
        // PT eigenvalues of |Φ⁺⟩⟨Φ⁺| are {1/2, 1/2, 1/2, -1/2}
        let rho = bell_phi_plus();
        let pt = partial_transpose_first(&rho).unwrap();
        let mut w = pt.eig_hermitian().unwrap().eigenvalues().to_vec();
        w.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((w[0] + 0.5).abs() < 1e-14);
        for v in &w[1..] {
            assert!((v - 0.5).abs() < 1e-14);
        }
        assert!((negativity_eig(&rho).unwrap() - 0.5).abs() < 1e-14);
        assert!((negativity_tracenorm(&rho).unwrap() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn product_states_have_zero_negativity() {
        let a = Operator::from_matrix(array![
            [c(0.7, 0.0), c(0.1, 0.2)],
            [c(0.1, -0.2), c(0.3, 0.0)]
        ])
        .unwrap();
        let b = Operator::from_matrix(array![
            [c(0.4, 0.0), c(-0.15, 0.1)],
            [c(-0.15, -0.1), c(0.6, 0.0)]
        ])
        .unwrap();
        let rho = kron(&a, &b).unwrap();
        assert_eq!(negativity_eig(&rho).unwrap(), 0.0);
        assert!(negativity_tracenorm(&rho).unwrap() < 1e-12);
    }

    #[test]
    fn partial_transpose_swaps_b1_b2_on_x_states() {
        let x = XState::new(0.3, 0.25, 0.25, 0.2, 0.05, -0.2).unwrap();
        let pt = partial_transpose_first(&x.to_operator()).unwrap();
        let swapped = extract_xstate_loose(&pt);
        assert_eq!(swapped, (0.3, 0.25, 0.25, 0.2, -0.2, 0.05));
    }

    // read raw entries without density validation (PT of a density matrix
    // need not be positive)
    fn extract_xstate_loose(op: &Operator) -> (f64, f64, f64, f64, f64, f64) {
        (
            op.entry(0, 0).re,
            op.entry(1, 1).re,
            op.entry(2, 2).re,
            op.entry(3, 3).re,
            op.entry(0, 3).re,
            op.entry(1, 2).re,
        )
    }

    #[test]
    fn xstate_negativity_zero_without_off_diagonals() {
        let x = XState::new(0.4, 0.3, 0.2, 0.1, 0.0, 0.0)
            .unwrap()
            .normalized()
            .unwrap();
        assert_eq!(xstate_negativity(&x).unwrap(), 0.0);
    }

    #[test]
    fn xstate_negativity_singlet() {
        let x = XState::new(0.0, 0.5, 0.5, 0.0, 0.0, -0.5)
            .unwrap()
            .normalized()
            .unwrap();
        assert!((xstate_negativity(&x).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn xstate_negativity_rejects_unnormalized() {
        let x = XState::new(1.0, 1.0, 1.0, 1.0, 0.0, 0.0).unwrap();
        assert!(matches!(
            xstate_negativity(&x).unwrap_err(),
            Error::UnnormalizedXState { .. }
        ));
    }

    #[test]
    fn xstate_rejects_negative_weights_and_bad_blocks() {
        assert!(XState::new(-0.1, 0.5, 0.5, 0.1, 0.0, 0.0).is_err());
        assert!(XState::new(0.1, 0.5, 0.5, 0.1, 0.5, 0.0).is_err());
        assert!(XState::new(0.5, 0.1, 0.1, 0.5, 0.0, 0.5).is_err());
    }

    #[test]
    fn analytic_staggered_reference_point() {
        // γ=0, B=0, β=4 (T=0.25): D=1, all diagonal weights cosh(1), both
        // off-diagonals -sinh(1)
        let x = analytic_xstate_unnormalized(FieldPattern::Staggered, 0.0, 0.0, 0.25).unwrap();
        let (a1, a2, a3, a4) = x.diagonal();
        let (b1, b2) = x.off_diagonal();
        let ch = 1.0f64.cosh();
        let sh = 1.0f64.sinh();
        for a in [a1, a2, a3, a4] {
            assert!((a - ch).abs() < 1e-14);
        }
        assert!((b1 + sh).abs() < 1e-14);
        assert!((b2 + sh).abs() < 1e-14);
    }

    #[test]
    fn analytic_uniform_gamma_one_has_zero_b1() {
        for b in [0.0, 0.3, -1.7, 2.0] {
            let x = analytic_xstate(FieldPattern::Uniform, 1.0, b, 0.2).unwrap();
            assert_eq!(x.off_diagonal().0, 0.0);
        }
    }

    #[test]
    fn analytic_uniform_xx_low_temperature_negativity() {
        // γ=1, B=0, β=50: negativity = (sinh 25 - 1)/(2 + 2 cosh 25) ≈ 1/2
        let x = analytic_xstate(FieldPattern::Uniform, 1.0, 0.0, 0.02).unwrap();
        let neg = xstate_negativity(&x).unwrap();
        let expected = (25.0f64.sinh() - 1.0) / (2.0 + 2.0 * 25.0f64.cosh());
        assert!((neg - expected).abs() < 1e-12);
        assert!((neg - 0.5).abs() < 1e-6);
    }

    #[test]
    fn analytic_removable_singularity() {
        // D vanishes at γ=1, B=0 for the uniform pattern; the series limit
        // must agree with a nearby regular point
        let at_zero = analytic_xstate(FieldPattern::Uniform, 1.0, 0.0, 0.02).unwrap();
        let near_zero = analytic_xstate(FieldPattern::Uniform, 1.0, 1e-9, 0.02).unwrap();
        let (z1, z2, z3, z4) = at_zero.diagonal();
        let (n1, n2, n3, n4) = near_zero.diagonal();
        for (a, b) in [(z1, n1), (z2, n2), (z3, n3), (z4, n4)] {
            assert!((a - b).abs() < 1e-8);
        }
        let dz = at_zero.off_diagonal();
        let dn = near_zero.off_diagonal();
        assert!((dz.0 - dn.0).abs() < 1e-8 && (dz.1 - dn.1).abs() < 1e-8);
    }

    #[test]
    fn analytic_survives_extreme_parameters() {
        // the normalized form rescales before exponentiating, so very large
        // βD must not produce NaN
        let x = analytic_xstate(FieldPattern::Uniform, 1.0, 100.0, 1e-4).unwrap();
        assert!((x.trace() - 1.0).abs() < 1e-12);
        let neg = xstate_negativity(&x).unwrap();
        assert!(neg.is_finite());
    }

    #[test]
    fn analytic_matches_numerics_elementwise() {
        // the closed form reproduces the two-site thermal reduced matrix
        // element by element, not just at the negativity level
        for pattern in [FieldPattern::Staggered, FieldPattern::Uniform] {
            for (gamma, b, t) in [(1.0, 0.5, 0.2), (0.5, -1.3, 0.2), (1.0 / 3.0, 0.7, 0.02)] {
                let spec = ChainSpec::new(2, gamma, b, pattern).unwrap();
                let rho = gibbs_state(&spec.hamiltonian().unwrap(), t)
                    .unwrap()
                    .into_rho();
                let numeric = extract_xstate(&rho).unwrap();
                let analytic = analytic_xstate(pattern, gamma, b, t).unwrap();
                let (na, xa) = (numeric.diagonal(), analytic.diagonal());
                for (lhs, rhs) in [(na.0, xa.0), (na.1, xa.1), (na.2, xa.2), (na.3, xa.3)] {
                    assert!(
                        (lhs - rhs).abs() < 1e-10,
                        "{pattern} γ={gamma} B={b}: {lhs} vs {rhs}"
                    );
                }
                let (nb, xb) = (numeric.off_diagonal(), analytic.off_diagonal());
                assert!((nb.0 - xb.0).abs() < 1e-10 && (nb.1 - xb.1).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn thermal_pair_negativity_xx_point() {
        let spec = ChainSpec::new(2, 1.0, 0.0, FieldPattern::Uniform).unwrap();
        let neg = thermal_pair_negativity(&spec, 0.02, 1).unwrap();
        assert_eq!(neg.pair, (1, 2));
        assert!((neg.value - 0.5).abs() < 1e-6);
    }

    #[test]
    fn thermal_pair_negativity_vanishes_at_high_temperature() {
        let spec = ChainSpec::new(4, 0.5, 0.8, FieldPattern::Staggered).unwrap();
        let neg = thermal_pair_negativity(&spec, 1e6, 1).unwrap();
        assert!(neg.value < 1e-4);
    }

    #[test]
    fn gamma_zero_patterns_agree() {
        let stag = ChainSpec::new(2, 0.0, 0.5, FieldPattern::Staggered).unwrap();
        let unif = ChainSpec::new(2, 0.0, 0.5, FieldPattern::Uniform).unwrap();
        let a = thermal_pair_negativity(&stag, 0.2, 1).unwrap().value;
        let b = thermal_pair_negativity(&unif, 0.2, 1).unwrap().value;
        assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn staggered_pairs_are_equivalent() {
        // the (+B,-B) pair and the (-B,+B) pair are related by a translation
        // plus a global flip, so every nearest-neighbor pair reports the
        // same negativity
        for t in [0.02, 0.2] {
            let spec = ChainSpec::new(6, 0.5, 0.7, FieldPattern::Staggered).unwrap();
            let first = thermal_pair_negativity(&spec, t, 1).unwrap().value;
            for site in 2..=6 {
                let other = thermal_pair_negativity(&spec, t, site).unwrap().value;
                assert!((first - other).abs() < 1e-10, "pair at site {site}");
            }
        }
    }

    #[test]
    fn frozen_reference_negativities() {
        // values computed with an independent dense-diagonalization script
        // (numpy.linalg.eigh) over the same model definitions
        let cases = [
            (4, 0.5, 0.5, FieldPattern::Staggered, 0.2, 0.137004578445183),
            (4, 0.5, 0.5, FieldPattern::Uniform, 0.2, 0.041532314278776),
            (
                6,
                1.0 / 3.0,
                1.0,
                FieldPattern::Staggered,
                0.02,
                0.124058264837608,
            ),
            (2, 0.5, 0.8, FieldPattern::Uniform, 0.2, 0.016959535928193),
        ];
        for (n, gamma, b, pattern, t, expected) in cases {
            let spec = ChainSpec::new(n, gamma, b, pattern).unwrap();
            let got = thermal_pair_negativity(&spec, t, 1).unwrap().value;
            assert!(
                (got - expected).abs() < 1e-12,
                "N={n} γ={gamma} B={b} {pattern}: {got} vs {expected}"
            );
        }
    }
}
