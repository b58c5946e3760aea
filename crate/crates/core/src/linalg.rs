//! Exact linear algebra over Q.
//!
//! Matrices store `BigRational` entries. Elimination clears denominators row
//! by row and runs a fraction-free reduction on integers, first in `i128`
//! with overflow checks and, if that overflows, again on `BigInt`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A linear map `Q^cols -> Q^rows`, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<_> = self.row(r).iter().map(|x| alloc::format!("{x}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_integer_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, Rational::from_integer(BigInt::from(*x)));
            }
        }
        m
    }

    /// Builds a matrix from rational rows of length `cols`.
    pub fn from_rows(rows: &[Vec<Rational>], cols: usize) -> Self {
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.entries[i * cols..(i + 1) * cols].clone_from_slice(r);
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        let e = &mut self.entries[r * self.cols + c];
        *e += v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `self * rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &LinearMap) -> Result<LinearMap> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = LinearMap::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    /// Stacks `blocks` vertically; all must share the column count.
    pub fn vstack(cols: usize, blocks: &[&LinearMap]) -> Result<LinearMap> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = LinearMap::zero(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: b.cols,
                });
            }
            out.entries[r0 * cols..(r0 + b.rows) * cols].clone_from_slice(&b.entries);
            r0 += b.rows;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        reduce(self, false).pivots.len()
    }

    /// Basis of the null space, in the standard form: one vector per free
    /// column, equal to 1 there and 0 at every other free column.
    pub fn kernel(&self) -> Kernel {
        let red = reduce(self, true);
        let mut is_pivot = vec![false; self.cols];
        for &(c, _) in &red.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (r, &(c, _)) in red.pivots.iter().enumerate() {
                let a = &red.rows[r][f];
                if !a.is_zero() {
                    v[c] = Rational::new(-a.clone(), red.rows[r][c].clone());
                }
            }
            basis.push(v);
        }
        Kernel { free, basis }
    }
}

/// Null space basis; coordinates of a kernel vector are its values on `free`.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub free: Vec<usize>,
    pub basis: Vec<Vec<Rational>>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        self.free.iter().map(|&f| v[f].clone()).collect()
    }
}

struct Reduced {
    /// Rows of the echelon form, ordered by pivot.
    rows: Vec<Vec<BigInt>>,
    /// `(column, row)` per pivot, in order.
    pivots: Vec<(usize, usize)>,
}

fn integer_rows(m: &LinearMap) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .filter_map(|r| {
            let row = m.row(r);
            if row.iter().all(Zero::is_zero) {
                return None;
            }
            let l = row
                .iter()
                .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            Some(row.iter().map(|x| x.numer() * (&l / x.denom())).collect())
        })
        .collect()
}

fn reduce(m: &LinearMap, full: bool) -> Reduced {
    let rows = integer_rows(m);
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_i128()).collect())
        .collect();
    if let Some(small) = small {
        if let Some((rows, pivots)) = echelon(small, m.cols, full) {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            return Reduced { rows, pivots };
        }
    }
    let (rows, pivots) = echelon(rows, m.cols, full).expect("BigInt elimination cannot overflow");
    Reduced { rows, pivots }
}

trait Scalar: Clone {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    /// `p * x - f * y`
    fn cross(p: &Self, x: &Self, f: &Self, y: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn div_exact(&self, g: &Self) -> Self;
}

impl Scalar for i128 {
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn cross(p: &Self, x: &Self, f: &Self, y: &Self) -> Option<Self> {
        p.checked_mul(*x)?.checked_sub(f.checked_mul(*y)?)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(p: &Self, x: &Self, f: &Self, y: &Self) -> Option<Self> {
        Some(p * x - f * y)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
}

fn normalize<T: Scalar>(row: &mut [T], from: usize) {
    let mut g = T::nil();
    for x in &row[from..] {
        if !x.is_nil() {
            g = g.gcd_with(x);
            if g.is_unit() {
                return;
            }
        }
    }
    if g.is_nil() {
        return;
    }
    for x in &mut row[from..] {
        if !x.is_nil() {
            *x = x.div_exact(&g);
        }
    }
}

/// Echelon rows ordered by pivot, with `(column, row)` per pivot.
type Echelon<T> = (Vec<Vec<T>>, Vec<(usize, usize)>);

/// Fraction-free elimination with row content removal. With `full`, rows
/// above each pivot are cleared too (reduced echelon form up to row scaling).
fn echelon<T: Scalar>(
    mut rows: Vec<Vec<T>>,
    cols: usize,
    full: bool,
) -> Option<Echelon<T>> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][c].is_nil()) else {
            continue;
        };
        rows.swap(top, p);
        let (head, tail) = rows.split_at_mut(top + 1);
        let pivot_row = &head[top];
        let pv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            if row[c].is_nil() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                row[j] = T::cross(&pv, &row[j], &f, &pivot_row[j])?;
            }
            normalize(row, c);
        }
        if full {
            let (above, rest) = rows.split_at_mut(top);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                if row[c].is_nil() {
                    continue;
                }
                let f = row[c].clone();
                // earlier pivot columns are zero in the pivot row, so the whole row is touched
                for j in 0..cols {
                    row[j] = T::cross(&pv, &row[j], &f, &pivot_row[j])?;
                }
                normalize(row, 0);
            }
        }
        pivots.push((c, top));
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    Some((rows, pivots))
}

/// Homology at the middle of `A --d_in--> B --d_out--> C`.
pub fn homology_dims(d_in: &LinearMap, d_out: &LinearMap) -> Result<usize> {
    if d_in.rows != d_out.cols {
        return Err(Error::DimensionMismatch {
            expected: d_out.cols,
            found: d_in.rows,
        });
    }
    if !d_out.compose(d_in)?.is_zero() {
        return Err(Error::NotAComplex);
    }
    let kernel = d_out.cols - d_out.rank();
    Ok(kernel - d_in.rank())
}

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
