//! Dense unitary matrices.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::QsimError;

pub type C64 = Complex<f64>;
pub type Matrix = DMatrix<C64>;
pub type Vector = DVector<C64>;

/// Tolerance for `U·U† = I`.
pub const UNITARY_TOL: f64 = 1e-10;

pub fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "UnitaryDoc", into = "UnitaryDoc")]
pub struct Unitary {
    m: Matrix,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    re: f64,
    im: f64,
}

/// Row-major nested arrays of `{"re", "im"}` entries.
#[derive(Serialize, Deserialize)]
struct UnitaryDoc {
    dimension: usize,
    entries: Vec<Vec<Entry>>,
}

impl From<Unitary> for UnitaryDoc {
    fn from(u: Unitary) -> Self {
        let n = u.dim();
        UnitaryDoc {
            dimension: n,
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| Entry {
                            re: u.m[(i, j)].re,
                            im: u.m[(i, j)].im,
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<UnitaryDoc> for Unitary {
    type Error = QsimError;

    fn try_from(doc: UnitaryDoc) -> Result<Self, QsimError> {
        let n = doc.dimension;
        if doc.entries.len() != n {
            return Err(QsimError::NotSquare {
                rows: doc.entries.len(),
                cols: n,
            });
        }
        let mut m = Matrix::zeros(n, n);
        for (i, row) in doc.entries.iter().enumerate() {
            if row.len() != n {
                return Err(QsimError::NotSquare { rows: n, cols: row.len() });
            }
            for (j, e) in row.iter().enumerate() {
                m[(i, j)] = c(e.re, e.im);
            }
        }
        Unitary::new(m)
    }
}

impl Unitary {
    pub fn new(m: Matrix) -> Result<Self, QsimError> {
        if !m.is_square() {
            return Err(QsimError::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        let dev = deviation(&m);
        if dev > UNITARY_TOL {
            return Err(QsimError::NotUnitary(dev));
        }
        Ok(Self { m })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            m: Matrix::identity(dim, dim),
        }
    }

    /// Diagonal unitary `diag(e^{iθ_k})`.
    pub fn phases(thetas: &[f64]) -> Self {
        let d = Vector::from_iterator(thetas.len(), thetas.iter().map(|&t| C64::from_polar(1.0, t)));
        Self {
            m: Matrix::from_diagonal(&d),
        }
    }

    pub fn diagonal_signs(signs: &[f64]) -> Result<Self, QsimError> {
        let d = Vector::from_iterator(signs.len(), signs.iter().map(|&s| c(s, 0.0)));
        Self::new(Matrix::from_diagonal(&d))
    }

    pub fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            m: Matrix::from_row_slice(2, 2, &[c(h, 0.0), c(h, 0.0), c(h, 0.0), c(-h, 0.0)]),
        }
    }

    pub fn pauli_x() -> Self {
        Self {
            m: Matrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]),
        }
    }

    /// `diag(1, -i)`, taking `|+⟩` to `(|0⟩ - i|1⟩)/√2`.
    pub fn s_dagger() -> Self {
        Self::phases(&[0.0, -std::f64::consts::FRAC_PI_2])
    }

    /// Haar-distributed unitary: QR of a complex Gaussian matrix with the
    /// phases of `R`'s diagonal folded back into `Q`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Self {
        let g = Matrix::from_fn(dim, dim, |_, _| {
            c(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal))
        });
        let qr = g.qr();
        let (mut q, r) = (qr.q(), qr.r());
        for j in 0..dim {
            let d = r[(j, j)];
            let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
            for i in 0..dim {
                q[(i, j)] *= phase;
            }
        }
        Self { m: q }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix {
        self.m
    }

    pub fn adjoint(&self) -> Self {
        Self { m: self.m.adjoint() }
    }

    /// `self · other` (apply `other` first).
    pub fn mul(&self, other: &Unitary) -> Result<Self, QsimError> {
        if self.dim() != other.dim() {
            return Err(QsimError::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(Self { m: &self.m * &other.m })
    }

    /// Kronecker product, `self` on the more significant factor.
    pub fn kron(&self, other: &Unitary) -> Self {
        Self {
            m: self.m.kronecker(&other.m),
        }
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    /// `max |(U U† - I)_{ij}|`.
    pub fn deviation(&self) -> f64 {
        deviation(&self.m)
    }
}

fn deviation(m: &Matrix) -> f64 {
    let p = m * m.adjoint();
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((p[(i, j)] - c(target, 0.0)).norm());
        }
    }
    worst
}
