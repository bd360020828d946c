//! The anisotropic XY spin-1/2 chain in a transverse magnetic field, with
//! either a uniform field B on every site or a staggered field (-1)^(i-1) B,
//! and the local-unitary transformations relating the two.
//!
//! The Hamiltonian on N sites (N even, periodic boundaries) is
//!
//! ```text
//! H = Σ_bonds J [ s_ix s_jx + γ s_iy s_jy ] + Σ_i f_i B s_iz
//! ```
//!
//! with f_i = 1 (uniform) or f_i = (-1)^(i-1) (staggered, +B on site 1). At
//! N = 2 the ring would traverse the single (1,2) bond twice, so a
//! single-bond rule is applied there; see [`Boundary`].

use crate::error::{Error, Result};
use crate::operator::{
    embedded_product, pauli_x, pauli_z, site_operator, spin_x, spin_y, spin_z, Operator, MAX_SITES,
};

/// Spatial pattern of the transverse field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldPattern {
    /// Every site sees the same field B.
    Uniform,
    /// Site i sees (-1)^(i-1) B: +B on odd sites, -B on even sites.
    Staggered,
}

impl FieldPattern {
    /// Field sign at a 1-based site.
    pub fn sign_at(self, site: usize) -> f64 {
        match self {
            FieldPattern::Uniform => 1.0,
            FieldPattern::Staggered => {
                if site % 2 == 1 {
                    1.0
                } else {
                    -1.0
                }
            }
        }
    }

    /// Lowercase name used in CLI arguments and CSV output.
    pub fn name(self) -> &'static str {
        match self {
            FieldPattern::Uniform => "uniform",
            FieldPattern::Staggered => "staggered",
        }
    }
}

impl std::fmt::Display for FieldPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Bond rule closing the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Bonds (i, i+1) for i = 1..N with site N+1 = site 1.
    Periodic,
    /// Exactly one (1, 2) bond; the rule used at N = 2, where the periodic
    /// sum would count the same bond twice.
    SingleBond,
}

/// Parameters of one chain Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainSpec {
    n_sites: usize,
    gamma: f64,
    field: f64,
    coupling: f64,
    field_pattern: FieldPattern,
    boundary: Boundary,
}

impl ChainSpec {
    /// Build a spec with coupling J = 1 and the boundary rule selected by N
    /// (single bond at N = 2, periodic otherwise).
    ///
    /// N must be even and between 2 and 12.
    pub fn new(n_sites: usize, gamma: f64, field: f64, pattern: FieldPattern) -> Result<Self> {
        if !(2..=MAX_SITES).contains(&n_sites) {
            return Err(Error::InvalidChainSpec(format!(
                "n_sites = {n_sites} outside 2..={MAX_SITES}"
            )));
        }
        if !n_sites.is_multiple_of(2) {
            return Err(Error::InvalidChainSpec(format!(
                "n_sites = {n_sites} is odd; staggering is only consistent on even rings"
            )));
        }
        if !gamma.is_finite() || !field.is_finite() {
            return Err(Error::InvalidChainSpec(
                "gamma and field must be finite".into(),
            ));
        }
        let boundary = if n_sites == 2 {
            Boundary::SingleBond
        } else {
            Boundary::Periodic
        };
        Ok(Self {
            n_sites,
            gamma,
            field,
            coupling: 1.0,
            field_pattern: pattern,
            boundary,
        })
    }

    /// Override the exchange coupling J.
    pub fn with_coupling(mut self, coupling: f64) -> Self {
        self.coupling = coupling;
        self
    }

    /// Override the boundary rule. The default from [`ChainSpec::new`]
    /// matches the model's convention; overriding is mainly useful for
    /// testing the N = 2 double-bond distinction.
    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    /// Same spec with a different field magnitude.
    pub fn with_field(mut self, field: f64) -> Self {
        self.field = field;
        self
    }

    /// Same spec with a different anisotropy.
    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    /// Same spec with the other field pattern.
    pub fn with_pattern(mut self, pattern: FieldPattern) -> Self {
        self.field_pattern = pattern;
        self
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn field(&self) -> f64 {
        self.field
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    pub fn field_pattern(&self) -> FieldPattern {
        self.field_pattern
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Hilbert-space dimension 2^N.
    pub fn dim(&self) -> usize {
        1 << self.n_sites
    }

    /// Bond list as 1-based site pairs.
    pub fn bonds(&self) -> Vec<(usize, usize)> {
        match self.boundary {
            Boundary::SingleBond => vec![(1, 2)],
            Boundary::Periodic => (1..=self.n_sites)
                .map(|i| (i, i % self.n_sites + 1))
                .collect(),
        }
    }

    /// Dense Hamiltonian matrix for these parameters.
    pub fn hamiltonian(&self) -> Result<Operator> {
        build_hamiltonian(self)
    }
}

/// Construct H = Σ_bonds J [s_ix s_jx + γ s_iy s_jy] + Σ_i f_i B s_iz.
pub fn build_hamiltonian(spec: &ChainSpec) -> Result<Operator> {
    let n = spec.n_sites();
    let mut h = Operator::zeros(spec.dim())?;
    let sx = spin_x();
    let sy = spin_y();
    let sz = spin_z();
    for (i, j) in spec.bonds() {
        let xx = embedded_product(&[(i, &sx), (j, &sx)], n)?;
        let yy = embedded_product(&[(i, &sy), (j, &sy)], n)?;
        h = &h + &(&(&xx + &(&yy * spec.gamma())) * spec.coupling());
    }
    for i in 1..=n {
        let f = spec.field_pattern().sign_at(i);
        let zi = site_operator(&sz, i, n)?;
        h = &h + &(&zi * (f * spec.field()));
    }
    Ok(h)
}

/// ⊗_i σ_x over all N sites.
///
/// Conjugating either Hamiltonian with this operator flips the sign of the
/// field: U H(γ, B) U = H(γ, -B) for both patterns. It squares to the
/// identity.
pub fn global_x_flip(n_sites: usize) -> Result<Operator> {
    if n_sites == 0 {
        return Err(Error::InvalidShape(
            "chain must have at least one site".into(),
        ));
    }
    let sx = pauli_x();
    let factors: Vec<(usize, &Operator)> = (1..=n_sites).map(|i| (i, &sx)).collect();
    embedded_product(&factors, n_sites)
}

/// σ_x on the even sites {2, 4, …, N}, identity on odd sites.
///
/// This is the sublattice flip that exchanges the two field patterns:
/// conjugating the staggered Hamiltonian gives the uniform one at reversed
/// anisotropy, U H_stag(γ, B) U = H_unif(-γ, B). It flips the z-axis on
/// exactly the sites carrying field -B, so the staggered field becomes
/// uniform while every bond has one flipped end (reversing the sign of the
/// y-y coupling). N must be even; it squares to the identity.
pub fn sublattice_x_flip(n_sites: usize) -> Result<Operator> {
    if n_sites == 0 || !n_sites.is_multiple_of(2) {
        return Err(Error::InvalidChainSpec(format!(
            "sublattice flip needs an even number of sites, got {n_sites}"
        )));
    }
    let sx = pauli_x();
    let factors: Vec<(usize, &Operator)> = (1..=n_sites)
        .filter(|i| i % 2 == 0)
        .map(|i| (i, &sx))
        .collect();
    embedded_product(&factors, n_sites)
}

/// Largest entry of [H, P] where P = ⊗_i σ_z is the global parity operator.
///
/// Both chain Hamiltonians commute with P; a nonzero value flags a
/// symmetry-breaking construction bug.
pub fn z2_commutator_norm(h: &Operator, n_sites: usize) -> Result<f64> {
    let dim = 1usize
        .checked_shl(n_sites as u32)
        .filter(|d| *d <= crate::operator::MAX_DIM)
        .ok_or(Error::DimensionCap {
            dim: usize::MAX,
            max_sites: MAX_SITES,
        })?;
    if h.dim() != dim {
        return Err(Error::DimensionMismatch {
            left: h.dim(),
            right: dim,
        });
    }
    let sz = pauli_z();
    let factors: Vec<(usize, &Operator)> = (1..=n_sites).map(|i| (i, &sz)).collect();
    let parity = embedded_product(&factors, n_sites)?;
    h.commutator_max_norm(&parity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::kron;
    use num_complex::Complex64 as C64;

    #[test]
    fn spec_rejects_odd_and_out_of_range() {
        assert!(ChainSpec::new(3, 0.5, 1.0, FieldPattern::Uniform).is_err());
        assert!(ChainSpec::new(0, 0.5, 1.0, FieldPattern::Uniform).is_err());
        assert!(ChainSpec::new(14, 0.5, 1.0, FieldPattern::Uniform).is_err());
        assert!(ChainSpec::new(2, f64::NAN, 1.0, FieldPattern::Uniform).is_err());
    }

    #[test]
    fn n2_uses_single_bond_by_default() {
        let spec = ChainSpec::new(2, 0.3, 0.7, FieldPattern::Staggered).unwrap();
        assert_eq!(spec.boundary(), Boundary::SingleBond);
        assert_eq!(spec.bonds(), vec![(1, 2)]);
        let spec4 = ChainSpec::new(4, 0.3, 0.7, FieldPattern::Staggered).unwrap();
        assert_eq!(spec4.boundary(), Boundary::Periodic);
        assert_eq!(spec4.bonds(), vec![(1, 2), (2, 3), (3, 4), (4, 1)]);
    }

    #[test]
    fn n2_staggered_matches_two_qubit_form() {
        // H = s1x⊗s2x + γ s1y⊗s2y + B s1z - B s2z
        let gamma = 0.43;
        let b = 1.21;
        let spec = ChainSpec::new(2, gamma, b, FieldPattern::Staggered).unwrap();
        let h = spec.hamiltonian().unwrap();
        let xx = kron(&spin_x(), &spin_x()).unwrap();
        let yy = kron(&spin_y(), &spin_y()).unwrap();
        let z1 = site_operator(&spin_z(), 1, 2).unwrap();
        let z2 = site_operator(&spin_z(), 2, 2).unwrap();
        let expected = &(&xx + &(&yy * gamma)) + &(&(&z1 * b) + &(&z2 * (-b)));
        assert!(h.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn n2_periodic_override_double_counts_the_bond() {
        let spec = ChainSpec::new(2, 0.5, 0.0, FieldPattern::Uniform)
            .unwrap()
            .with_boundary(Boundary::Periodic);
        let single = ChainSpec::new(2, 0.5, 0.0, FieldPattern::Uniform).unwrap();
        let h2 = spec.hamiltonian().unwrap();
        let h1 = single.hamiltonian().unwrap();
        assert!(h2.max_abs_diff(&(&h1 * 2.0)) < 1e-15);
    }

    #[test]
    fn xx_point_spectrum() {
        // N=2, γ=1, B=0: eigenvalues {-1/2, 0, 0, +1/2}
        let spec = ChainSpec::new(2, 1.0, 0.0, FieldPattern::Uniform).unwrap();
        let w = spec
            .hamiltonian()
            .unwrap()
            .eig_hermitian()
            .unwrap()
            .eigenvalues()
            .to_vec();
        let expected = [-0.5, 0.0, 0.0, 0.5];
        for (a, b) in w.iter().zip(expected) {
            assert!((a - b).abs() < 1e-14, "eigenvalue {a} vs {b}");
        }
    }

    #[test]
    fn zero_field_patterns_coincide() {
        for n in [2, 4, 6] {
            let s = ChainSpec::new(n, 0.8, 0.0, FieldPattern::Staggered).unwrap();
            let u = ChainSpec::new(n, 0.8, 0.0, FieldPattern::Uniform).unwrap();
            assert!(
                s.hamiltonian()
                    .unwrap()
                    .max_abs_diff(&u.hamiltonian().unwrap())
                    == 0.0
            );
        }
    }

    #[test]
    fn hamiltonian_is_hermitian_and_z2_symmetric() {
        for (n, gamma, b, pattern) in [
            (2, 0.5, 1.0, FieldPattern::Staggered),
            (4, 0.5, 1.0, FieldPattern::Staggered),
            (2, 1.0, 0.3, FieldPattern::Uniform),
            (4, 1.0, 0.3, FieldPattern::Uniform),
            (6, 0.0, -1.7, FieldPattern::Uniform),
        ] {
            let h = ChainSpec::new(n, gamma, b, pattern)
                .unwrap()
                .hamiltonian()
                .unwrap();
            assert!(h.hermiticity_deviation() < 1e-12);
            assert!(z2_commutator_norm(&h, n).unwrap() < 1e-13);
        }
    }

    #[test]
    fn z2_commutator_detects_violation() {
        // σ_x on one site anticommutes with parity: max entry of [H, P] is 2
        let h = site_operator(&pauli_x(), 1, 2).unwrap();
        let norm = z2_commutator_norm(&h, 2).unwrap();
        assert!((norm - 2.0).abs() < 1e-14);
    }

    #[test]
    fn z2_commutator_rejects_dimension_mismatch() {
        let h = site_operator(&pauli_x(), 1, 2).unwrap();
        assert!(matches!(
            z2_commutator_norm(&h, 3).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
    }

    #[test]
    fn global_flip_shape_and_involution() {
        let u1 = global_x_flip(1).unwrap();
        assert!(u1.max_abs_diff(&pauli_x()) == 0.0);
        let u2 = global_x_flip(2).unwrap();
        // anti-diagonal ones
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { 1.0 } else { 0.0 };
                assert!((u2.entry(i, j) - C64::new(want, 0.0)).norm() == 0.0);
            }
        }
        let sq = u2.dot(&u2);
        assert!(sq.max_abs_diff(&Operator::identity(4).unwrap()) == 0.0);
    }

    #[test]
    fn global_flip_reverses_field_sign() {
        for pattern in [FieldPattern::Staggered, FieldPattern::Uniform] {
            for (gamma, b) in [(0.35, 1.4), (1.0, -0.6), (0.0, 0.9)] {
                let n = 4;
                let u = global_x_flip(n).unwrap();
                let h = ChainSpec::new(n, gamma, b, pattern)
                    .unwrap()
                    .hamiltonian()
                    .unwrap();
                let h_neg = ChainSpec::new(n, gamma, -b, pattern)
                    .unwrap()
                    .hamiltonian()
                    .unwrap();
                let conj = u.dot(&h).dot(&u);
                assert!(conj.max_abs_diff(&h_neg) < 1e-13);
            }
        }
    }

    #[test]
    fn sublattice_flip_maps_staggered_to_uniform() {
        for n in [2usize, 4, 6] {
            for (gamma, b) in [(0.5, 1.1), (1.0, -0.4), (1.0 / 3.0, 0.25)] {
                let u = sublattice_x_flip(n).unwrap();
                let sq = u.dot(&u);
                assert!(sq.max_abs_diff(&Operator::identity(1 << n).unwrap()) == 0.0);
                let h_stag = ChainSpec::new(n, gamma, b, FieldPattern::Staggered)
                    .unwrap()
                    .hamiltonian()
                    .unwrap();
                let h_unif = ChainSpec::new(n, -gamma, b, FieldPattern::Uniform)
                    .unwrap()
                    .hamiltonian()
                    .unwrap();
                let conj = u.dot(&h_stag).dot(&u);
                assert!(
                    conj.max_abs_diff(&h_unif) < 1e-13,
                    "N={n} gamma={gamma} B={b}: {}",
                    conj.max_abs_diff(&h_unif)
                );
            }
        }
    }

    #[test]
    fn sublattice_flip_at_gamma_zero_connects_equal_anisotropy() {
        let n = 4;
        let b = 0.8;
        let u = sublattice_x_flip(n).unwrap();
        let h_stag = ChainSpec::new(n, 0.0, b, FieldPattern::Staggered)
            .unwrap()
            .hamiltonian()
            .unwrap();
        let h_unif = ChainSpec::new(n, 0.0, b, FieldPattern::Uniform)
            .unwrap()
            .hamiltonian()
            .unwrap();
        assert!(u.dot(&h_stag).dot(&u).max_abs_diff(&h_unif) < 1e-13);
    }

    #[test]
    fn sublattice_flip_rejects_odd() {
        assert!(sublattice_x_flip(3).is_err());
        assert!(sublattice_x_flip(0).is_err());
    }

    #[test]
    fn staggered_hamiltonian_translation_covariance() {
        // shifting all sites by one maps the staggering to its negative, so a
        // shift followed by a global flip leaves H_stag invariant
        let n = 6;
        let spec = ChainSpec::new(n, 0.7, 1.3, FieldPattern::Staggered).unwrap();
        let h = spec.hamiltonian().unwrap();
        // permutation matrix for the cyclic shift site i -> i+1 (site N -> 1)
        let dim = 1usize << n;
        let mut perm = Operator::zeros(dim).unwrap().into_matrix();
        for basis in 0..dim {
            // site 1 is the MSB; a cyclic right-shift of the site labels is a
            // rotate-right of the bit string
            let shifted = (basis >> 1) | ((basis & 1) << (n - 1));
            perm[(shifted, basis)] = C64::new(1.0, 0.0);
        }
        let t = Operator::from_matrix(perm).unwrap();
        let u1 = global_x_flip(n).unwrap();
        let moved = u1.dot(&t).dot(&h).dot(&t.adjoint()).dot(&u1);
        assert!(moved.max_abs_diff(&h) < 1e-13);
    }
}
