use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;
use std::fmt;

/// One factor of a Pauli-product observable in the H/V basis.
///
/// `M(n)` is the equatorial observable `cos(n pi/4) X + sin(n pi/4) Y`,
/// Hermitian with eigenvalues +-1; `M(0) = X` and `M(2) = Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliFactor {
    I,
    X,
    Y,
    Z,
    M(u8),
}

impl PauliFactor {
    pub fn matrix(&self) -> Matrix2<Complex64> {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        match self {
            PauliFactor::I => Matrix2::new(one, zero, zero, one),
            PauliFactor::X => Matrix2::new(zero, one, one, zero),
            PauliFactor::Y => Matrix2::new(
                zero,
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                zero,
            ),
            PauliFactor::Z => Matrix2::new(one, zero, zero, -one),
            PauliFactor::M(n) => {
                let theta = *n as f64 * std::f64::consts::FRAC_PI_4;
                Matrix2::new(
                    zero,
                    Complex64::from_polar(1.0, -theta),
                    Complex64::from_polar(1.0, theta),
                    zero,
                )
            }
        }
    }
}

impl fmt::Display for PauliFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PauliFactor::I => write!(f, "I"),
            PauliFactor::X => write!(f, "X"),
            PauliFactor::Y => write!(f, "Y"),
            PauliFactor::Z => write!(f, "Z"),
            PauliFactor::M(n) => write!(f, "M{n}"),
        }
    }
}

/// Tensor product of single-qubit factors, ordered by qubit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliObservable {
    factors: Vec<PauliFactor>,
}

impl PauliObservable {
    pub fn new(factors: Vec<PauliFactor>) -> Self {
        Self { factors }
    }

    /// The same factor on every one of `n` qubits.
    pub fn uniform(factor: PauliFactor, n: usize) -> Self {
        Self::new(vec![factor; n])
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[PauliFactor] {
        &self.factors
    }

    pub fn to_matrix(&self) -> DMatrix<Complex64> {
        let mut full = DMatrix::identity(1, 1);
        for f in &self.factors {
            let m = f.matrix();
            let dynm = DMatrix::from_fn(2, 2, |i, j| m[(i, j)]);
            full = full.kronecker(&dynm);
        }
        full
    }
}

impl fmt::Display for PauliObservable {
    fmt_impl!();
}

macro_rules! fmt_impl {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            for factor in &self.factors {
                write!(f, "{factor}")?;
            }
            Ok(())
        }
    };
}
use fmt_impl;
