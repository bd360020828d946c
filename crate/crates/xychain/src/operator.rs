//! Dense complex operators on the 2^N-dimensional Hilbert space of a qubit
//! chain, with Kronecker products, single-site embedding, and Hermitian
//! eigendecomposition.
//!
//! Basis convention: site 1 occupies the most significant bit of the basis
//! index, so for two sites the basis reads {|00⟩, |01⟩, |10⟩, |11⟩} with the
//! first label belonging to site 1.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Largest chain length supported by the dense representation.
pub const MAX_SITES: usize = 12;

/// Largest operator dimension (2^MAX_SITES).
pub const MAX_DIM: usize = 1 << MAX_SITES;

/// Tolerance used when validating Hermiticity of inputs.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Dense square complex matrix acting on the chain Hilbert space.
///
/// The dimension is always a power of two not exceeding [`MAX_DIM`].
#[derive(Debug, Clone)]
pub struct Operator {
    matrix: Array2<C64>,
}

impl Operator {
    /// Wrap a dense matrix, validating that it is square with power-of-two
    /// dimension within the cap.
    pub fn from_matrix(matrix: Array2<C64>) -> Result<Self> {
        let (rows, cols) = matrix.dim();
        if rows != cols {
            return Err(Error::InvalidShape(format!("{rows}x{cols} is not square")));
        }
        if rows == 0 || !rows.is_power_of_two() {
            return Err(Error::InvalidShape(format!(
                "dimension {rows} is not a positive power of two"
            )));
        }
        if rows > MAX_DIM {
            return Err(Error::DimensionCap {
                dim: rows,
                max_sites: MAX_SITES,
            });
        }
        Ok(Self { matrix })
    }

    /// Identity of the given dimension.
    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_matrix(Array2::eye(dim))
    }

    /// Zero operator of the given dimension.
    pub fn zeros(dim: usize) -> Result<Self> {
        Self::from_matrix(Array2::zeros((dim, dim)))
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Number of chain sites this operator acts on (log2 of the dimension).
    pub fn n_sites(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    /// Borrow the underlying matrix.
    pub fn matrix(&self) -> &Array2<C64> {
        &self.matrix
    }

    /// Consume and return the underlying matrix.
    pub fn into_matrix(self) -> Array2<C64> {
        self.matrix
    }

    /// Entry at (row, col).
    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.t().map(|z| z.conj()),
        }
    }

    /// Matrix product. Panics on dimension mismatch; operators combined in a
    /// product must act on the same space.
    pub fn dot(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.dot(&other.matrix),
        }
    }

    /// Trace.
    pub fn trace(&self) -> C64 {
        self.matrix.diag().sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise difference |self - other|.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "max_abs_diff: dimension mismatch");
        self.matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// max |a_ij - conj(a_ji)|, zero for exactly Hermitian matrices.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim();
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let d = (self.matrix[(i, j)] - self.matrix[(j, i)].conj()).norm();
                if d > dev {
                    dev = d;
                }
            }
        }
        dev
    }

    /// Whether the operator is Hermitian within `tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// Largest entrywise magnitude of the commutator [self, other].
    pub fn commutator_max_norm(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let ab = self.matrix.dot(&other.matrix);
        let ba = other.matrix.dot(&self.matrix);
        Ok(ab
            .iter()
            .zip(ba.iter())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max))
    }

    /// Eigendecomposition of a Hermitian operator.
    ///
    /// Eigenvalues are returned in ascending order with orthonormal
    /// eigenvector columns. Inputs failing the Hermiticity check
    /// ([`HERMITICITY_TOL`]) are rejected.
    pub fn eig_hermitian(&self) -> Result<Spectrum> {
        let dev = self.hermiticity_deviation();
        if dev > HERMITICITY_TOL {
            return Err(Error::NotHermitian { deviation: dev });
        }
        // Chain Hamiltonians are real in the computational basis (the y-y
        // coupling contributes i*i terms); route those through the cheaper
        // real-symmetric solver.
        if let Some(real) = self.real_view() {
            let (values, vectors) = real.eigh(UPLO::Lower)?;
            return Ok(Spectrum {
                eigenvalues: values,
                eigenvectors: vectors.map(|x| C64::new(*x, 0.0)),
            });
        }
        let (values, vectors) = self.matrix.eigh(UPLO::Lower)?;
        // the backend hands back the conjugated eigenvector matrix for
        // complex input (row-major storage fed to a column-major solver);
        // undo that so A v_k = w_k v_k holds for the columns
        Ok(Spectrum {
            eigenvalues: values,
            eigenvectors: vectors.map(|z| z.conj()),
        })
    }

    /// Real part as an owned array when every imaginary part is exactly zero.
    pub(crate) fn real_view(&self) -> Option<Array2<f64>> {
        if self.matrix.iter().all(|z| z.im == 0.0) {
            Some(self.matrix.map(|z| z.re))
        } else {
            None
        }
    }
}

impl std::ops::Add<&Operator> for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        Operator {
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl std::ops::Sub<&Operator> for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        Operator {
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

impl std::ops::Mul<f64> for &Operator {
    type Output = Operator;
    fn mul(self, rhs: f64) -> Operator {
        Operator {
            matrix: self.matrix.map(|z| z * rhs),
        }
    }
}

/// Eigendecomposition of a Hermitian operator: ascending real eigenvalues and
/// orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Array1<f64>,
    eigenvectors: Array2<C64>,
}

impl Spectrum {
    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> &Array1<f64> {
        &self.eigenvalues
    }

    /// Eigenvectors as matrix columns, ordered like the eigenvalues.
    pub fn eigenvectors(&self) -> &Array2<C64> {
        &self.eigenvectors
    }

    /// Smallest eigenvalue.
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Rebuild V diag(λ) V†.
    pub fn reconstruct(&self) -> Operator {
        let scaled = scale_columns(&self.eigenvectors, self.eigenvalues.iter().copied());
        let matrix = scaled.dot(&self.eigenvectors.t().map(|z| z.conj()));
        Operator { matrix }
    }
}

/// V with column k multiplied by w_k.
pub(crate) fn scale_columns(v: &Array2<C64>, weights: impl Iterator<Item = f64>) -> Array2<C64> {
    let mut out = v.clone();
    for (mut col, w) in out.columns_mut().into_iter().zip(weights) {
        col.map_inplace(|z| *z *= w);
    }
    out
}

/// Pauli σ_x.
pub fn pauli_x() -> Operator {
    let mut m = Array2::zeros((2, 2));
    m[(0, 1)] = C64::new(1.0, 0.0);
    m[(1, 0)] = C64::new(1.0, 0.0);
    Operator { matrix: m }
}

/// Pauli σ_y.
pub fn pauli_y() -> Operator {
    let mut m = Array2::zeros((2, 2));
    m[(0, 1)] = C64::new(0.0, -1.0);
    m[(1, 0)] = C64::new(0.0, 1.0);
    Operator { matrix: m }
}

/// Pauli σ_z = diag(1, -1).
pub fn pauli_z() -> Operator {
    let mut m = Array2::zeros((2, 2));
    m[(0, 0)] = C64::new(1.0, 0.0);
    m[(1, 1)] = C64::new(-1.0, 0.0);
    Operator { matrix: m }
}

/// Spin-1/2 operator s_x = σ_x / 2.
pub fn spin_x() -> Operator {
    &pauli_x() * 0.5
}

/// Spin-1/2 operator s_y = σ_y / 2.
pub fn spin_y() -> Operator {
    &pauli_y() * 0.5
}

/// Spin-1/2 operator s_z = σ_z / 2.
pub fn spin_z() -> Operator {
    &pauli_z() * 0.5
}

/// Kronecker product a ⊗ b.
///
/// Errors when the product dimension would exceed the 2^12 cap.
pub fn kron(a: &Operator, b: &Operator) -> Result<Operator> {
    let dim = a.dim().saturating_mul(b.dim());
    if dim > MAX_DIM {
        return Err(Error::DimensionCap {
            dim,
            max_sites: MAX_SITES,
        });
    }
    Ok(Operator {
        matrix: ndarray::linalg::kron(&a.matrix, &b.matrix),
    })
}

/// Embed 2x2 operators at the given (1-based, distinct) sites of an N-site
/// chain, tensoring identities everywhere else. Site 1 is the most
/// significant qubit.
pub fn embedded_product(factors: &[(usize, &Operator)], n_sites: usize) -> Result<Operator> {
    if n_sites == 0 {
        return Err(Error::InvalidShape(
            "chain must have at least one site".into(),
        ));
    }
    if n_sites > MAX_SITES {
        return Err(Error::DimensionCap {
            dim: 1usize << n_sites.min(63),
            max_sites: MAX_SITES,
        });
    }
    for &(site, op) in factors {
        if site == 0 || site > n_sites {
            return Err(Error::SiteOutOfRange { site, n_sites });
        }
        if op.dim() != 2 {
            let d = op.dim();
            return Err(Error::InvalidShape(format!(
                "embedded factor at site {site} must be 2x2, got {d}x{d}"
            )));
        }
    }
    let identity = Operator::identity(2)?;
    let mut out = Operator::identity(1)?;
    for site in 1..=n_sites {
        let factor = factors
            .iter()
            .find(|(s, _)| *s == site)
            .map(|(_, op)| *op)
            .unwrap_or(&identity);
        out = kron(&out, factor)?;
    }
    Ok(out)
}

/// I ⊗ … ⊗ op ⊗ … ⊗ I with `op` at 1-based position `site`.
pub fn site_operator(op: &Operator, site: usize, n_sites: usize) -> Result<Operator> {
    embedded_product(&[(site, op)], n_sites)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = Operator::identity(2).unwrap();
        let i4 = kron(&i2, &i2).unwrap();
        assert_eq!(i4.dim(), 4);
        assert!(i4.max_abs_diff(&Operator::identity(4).unwrap()) == 0.0);
    }

    #[test]
    fn kron_sigma_x_sigma_z() {
        let k = kron(&pauli_x(), &pauli_z()).unwrap();
        let mut expected = Array2::zeros((4, 4));
        expected[(0, 2)] = c(1.0, 0.0);
        expected[(1, 3)] = c(-1.0, 0.0);
        expected[(2, 0)] = c(1.0, 0.0);
        expected[(3, 1)] = c(-1.0, 0.0);
        assert!(k.max_abs_diff(&Operator::from_matrix(expected).unwrap()) == 0.0);
    }

    #[test]
    fn kron_trace_is_multiplicative() {
        // random-ish Hermitian 2x2 pair
        let a = Operator::from_matrix(ndarray::array![
            [c(0.7, 0.0), c(0.2, -0.4)],
            [c(0.2, 0.4), c(-1.3, 0.0)]
        ])
        .unwrap();
        let b = Operator::from_matrix(ndarray::array![
            [c(-0.1, 0.0), c(0.9, 0.25)],
            [c(0.9, -0.25), c(0.6, 0.0)]
        ])
        .unwrap();
        let k = kron(&a, &b).unwrap();
        let lhs = k.trace();
        let rhs = a.trace() * b.trace();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn kron_dimension_cap() {
        let big = Operator::identity(MAX_DIM).unwrap();
        let err = kron(&big, &Operator::identity(2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::DimensionCap { .. }));
    }

    #[test]
    fn site_operator_single_site() {
        let s = site_operator(&pauli_z(), 1, 1).unwrap();
        assert!(s.max_abs_diff(&pauli_z()) == 0.0);
    }

    #[test]
    fn site_operator_msb_convention() {
        // site 1 is the most significant qubit: σ_z at site 1 of 2 gives
        // diag(+1, +1, -1, -1)
        let s = site_operator(&pauli_z(), 1, 2).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| s.entry(i, i).re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);
        let s2 = site_operator(&pauli_z(), 2, 2).unwrap();
        let diag2: Vec<f64> = (0..4).map(|i| s2.entry(i, i).re).collect();
        assert_eq!(diag2, vec![1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn site_operator_rejects_out_of_range() {
        let err = site_operator(&pauli_x(), 3, 2).unwrap_err();
        assert!(matches!(
            err,
            Error::SiteOutOfRange {
                site: 3,
                n_sites: 2
            }
        ));
        let err = site_operator(&pauli_x(), 0, 2).unwrap_err();
        assert!(matches!(
            err,
            Error::SiteOutOfRange {
                site: 0,
                n_sites: 2
            }
        ));
    }

    #[test]
    fn disjoint_site_operators_commute() {
        let a = site_operator(&pauli_x(), 1, 3).unwrap();
        let b = site_operator(&pauli_y(), 2, 3).unwrap();
        assert!(a.commutator_max_norm(&b).unwrap() < 1e-14);
    }

    #[test]
    fn eig_identity() {
        let spec = Operator::identity(4).unwrap().eig_hermitian().unwrap();
        for &w in spec.eigenvalues() {
            assert!((w - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn eig_sigma_z_tensor_identity() {
        let op = kron(&pauli_z(), &Operator::identity(2).unwrap()).unwrap();
        let spec = op.eig_hermitian().unwrap();
        let w: Vec<f64> = spec.eigenvalues().to_vec();
        assert!((w[0] + 1.0).abs() < 1e-14 && (w[1] + 1.0).abs() < 1e-14);
        assert!((w[2] - 1.0).abs() < 1e-14 && (w[3] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        // deterministic pseudo-random 8x8 Hermitian matrix
        let n = 8;
        let mut m = Array2::zeros((n, n));
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = c(next(), next());
            }
        }
        let h = Operator::from_matrix(m.clone() + m.t().map(|z| z.conj())).unwrap();
        let spec = h.eig_hermitian().unwrap();
        let rebuild = spec.reconstruct();
        assert!(rebuild.max_abs_diff(&h) < 1e-10 * h.max_abs());
        // eigenvalues ascending
        let w = spec.eigenvalues();
        assert!(w.iter().zip(w.iter().skip(1)).all(|(a, b)| a <= b));
        // orthonormal columns
        let v = spec.eigenvectors();
        let gram = v.t().map(|z| z.conj()).dot(v);
        let eye: Array2<C64> = Array2::eye(n);
        let dev = gram
            .iter()
            .zip(eye.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(dev < 1e-10);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = Operator::from_matrix(ndarray::array![
            [c(0.0, 0.0), c(1.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0)]
        ])
        .unwrap();
        assert!(matches!(
            m.eig_hermitian().unwrap_err(),
            Error::NotHermitian { .. }
        ));
    }

    #[test]
    fn from_matrix_rejects_bad_shapes() {
        let rect: Array2<C64> = Array2::zeros((2, 3));
        assert!(Operator::from_matrix(rect).is_err());
        let odd: Array2<C64> = Array2::zeros((3, 3));
        assert!(Operator::from_matrix(odd).is_err());
    }
}
