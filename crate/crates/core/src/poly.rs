//! Integer polynomials and truncated power series in `q`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

/// A polynomial in `q` with integer coefficients, `coefficients[i]` being
/// the coefficient of `q^i`. Trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coefficients: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(1, 0)
    }

    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut v = vec![0; degree + 1];
        v[degree] = c;
        QPolynomial::new(v)
    }

    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        QPolynomial { coefficients }
    }

    /// `(1 - q)^n`
    pub fn one_minus_q_pow(n: usize) -> Self {
        let base = QPolynomial::new(vec![1, -1]);
        (0..n).fold(QPolynomial::one(), |acc, _| &acc * &base)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.coefficients.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Keeps only the monomials whose degree `d` satisfies `keep(d)`.
    pub fn filter_degrees(&self, keep: impl Fn(usize) -> bool) -> Self {
        QPolynomial::new(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(d, &c)| if keep(d) { c } else { 0 })
                .collect(),
        )
    }

    /// Drops all monomials of degree above `cutoff`.
    pub fn truncate(&self, cutoff: usize) -> Self {
        self.filter_degrees(|d| d <= cutoff)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    pub fn is_palindromic(&self, degree: usize) -> bool {
        (0..=degree).all(|i| self.coefficient(i) == self.coefficient(degree - i))
            && self.degree().is_none_or(|d| d <= degree)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        QPolynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![0i64; self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $f(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// Renders as `1 + 2q - q^2`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (d, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let a = c.unsigned_abs();
            if d == 0 || a != 1 {
                write!(out, "{}", a)?;
            }
            match d {
                0 => {}
                1 => out.push('q'),
                _ => write!(out, "q^{}", d)?,
            }
        }
        f.write_str(&out)
    }
}

/// A power series in `q` known up to degree `cutoff` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coefficients: Vec<i64>,
    cutoff: usize,
}

impl QSeries {
    pub fn from_polynomial(p: &QPolynomial, cutoff: usize) -> Self {
        QSeries {
            coefficients: (0..=cutoff).map(|d| p.coefficient(d)).collect(),
            cutoff,
        }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Coefficients of `q^0 ..= q^cutoff`.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> Option<i64> {
        self.coefficients.get(degree).copied()
    }

    /// Product with a polynomial, kept to the same cutoff.
    pub fn mul_polynomial(&self, p: &QPolynomial) -> QSeries {
        let mut out = vec![0i64; self.cutoff + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, &b) in p.coefficients().iter().enumerate() {
                if i + j <= self.cutoff {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries {
            coefficients: out,
            cutoff: self.cutoff,
        }
    }

    /// Division by `(1 - q)^n`, i.e. `n` successive partial sums.
    pub fn div_one_minus_q_pow(&self, n: usize) -> QSeries {
        let mut c = self.coefficients.clone();
        for _ in 0..n {
            for i in 1..c.len() {
                c[i] += c[i - 1];
            }
        }
        QSeries {
            coefficients: c,
            cutoff: self.cutoff,
        }
    }

    pub fn truncated_polynomial(&self) -> QPolynomial {
        QPolynomial::new(self.coefficients.clone())
    }
}

/// Renders as `1, 4, 9 (cutoff 2)`.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, " (cutoff {})", self.cutoff)
    }
}
