//! Dense integer polynomials, just enough for Sylvester resultants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients low to high; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub(crate) fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    /// `None` for the zero polynomial.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub(crate) fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
///
/// For `f` of degree `m` and `g` of degree `n` this equals
/// `lc(f)^n · ∏_{f(α)=0} g(α)`.
pub(crate) fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // n shifted copies of f, then m shifted copies of g, highest degree first
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    determinant(rows)
}

/// Fraction-free Gaussian elimination (Bareiss); every division is exact.
pub(crate) fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}
