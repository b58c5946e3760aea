//! Integer vectors and unimodular row reduction.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The cocharacter lattice `N = Z^rank` of the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    rank: usize,
}

impl Lattice {
    pub fn new(rank: usize) -> Self {
        Lattice { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

pub(crate) fn content(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

/// Divides out the content. The zero vector is returned unchanged.
pub(crate) fn primitive(v: &[i64]) -> Vec<i64> {
    let g = content(v);
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    let mut acc: i128 = 0;
    for (x, y) in a.iter().zip(b) {
        acc += *x as i128 * *y as i128;
    }
    i64::try_from(acc).map_err(|_| Error::Overflow)
}

fn checked(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// Extended Euclid: returns `(g, x, y)` with `x a + y b = g >= 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

/// Result of unimodular row reduction of the `m x c` matrix whose columns
/// are the given vectors.
///
/// `transform` is `U` in `GL_m(Z)` and `reduced = U * M` is in row echelon
/// form: rows `rank..m` of `reduced` vanish, so rows `rank..m` of `U` are a
/// lattice basis of the integer vectors orthogonal to all columns, and
/// `x -> (U x)[..rank]` identifies `Z^m ∩ span` with `Z^rank`.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    pub transform: Vec<Vec<i64>>,
    pub reduced: Vec<Vec<i64>>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn of_columns(ambient: usize, columns: &[Vec<i64>]) -> Result<Echelon> {
        let c = columns.len();
        let mut a: Vec<Vec<i64>> = (0..ambient)
            .map(|i| columns.iter().map(|col| col[i]).collect())
            .collect();
        let mut u: Vec<Vec<i64>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..c {
            if row == ambient {
                break;
            }
            for i in row + 1..ambient {
                if a[i][col] == 0 {
                    continue;
                }
                let (p, q) = (a[row][col], a[i][col]);
                if p == 0 {
                    a.swap(row, i);
                    u.swap(row, i);
                    continue;
                }
                let (g, x, y) = ext_gcd(p, q);
                let (pg, qg) = (p / g, q / g);
                combine(&mut a, row, i, x, y, -qg, pg)?;
                combine(&mut u, row, i, x, y, -qg, pg)?;
            }
            if a[row][col] != 0 {
                if a[row][col] < 0 {
                    negate(&mut a[row]);
                    negate(&mut u[row]);
                }
                pivots.push(col);
                row += 1;
            }
        }
        Ok(Echelon {
            transform: u,
            reduced: a,
            rank: row,
            pivots,
        })
    }

    /// First `rank` coordinates of `U x`.
    pub fn span_coordinates(&self, x: &[i64]) -> Result<Vec<i64>> {
        self.transform[..self.rank].iter().map(|r| dot(r, x)).collect()
    }

    /// Last `m - rank` coordinates of `U x`: the image in the quotient lattice.
    pub fn quotient_coordinates(&self, x: &[i64]) -> Result<Vec<i64>> {
        self.transform[self.rank..].iter().map(|r| dot(r, x)).collect()
    }

    /// Index of the sublattice generated by the columns inside its saturation,
    /// valid when the columns are linearly independent.
    pub fn index(&self) -> Result<i64> {
        let mut d: i128 = 1;
        for (r, &c) in self.pivots.iter().enumerate() {
            d *= self.reduced[r][c] as i128;
            if d.abs() > i64::MAX as i128 {
                return Err(Error::Overflow);
            }
        }
        Ok(d.abs() as i64)
    }
}

fn combine(
    m: &mut [Vec<i64>],
    r1: usize,
    r2: usize,
    a11: i64,
    a12: i64,
    a21: i64,
    a22: i64,
) -> Result<()> {
    for j in 0..m[r1].len() {
        let (x, y) = (m[r1][j] as i128, m[r2][j] as i128);
        m[r1][j] = checked(a11 as i128 * x + a12 as i128 * y)?;
        m[r2][j] = checked(a21 as i128 * x + a22 as i128 * y)?;
    }
    Ok(())
}

fn negate(v: &mut [i64]) {
    for x in v {
        *x = -*x;
    }
}

/// Rank over Q of a list of integer vectors of length `ambient`.
pub(crate) fn rank_of(ambient: usize, vectors: &[Vec<i64>]) -> Result<usize> {
    Ok(Echelon::of_columns(ambient, vectors)?.rank)
}

/// A nonzero integer vector orthogonal to `rows`, which must have rank `d - 1` in `Z^d`.
pub(crate) fn normal_vector(d: usize, rows: &[Vec<i64>]) -> Result<Option<Vec<i64>>> {
    let e = Echelon::of_columns(d, rows)?;
    if e.rank + 1 != d {
        return Ok(None);
    }
    Ok(Some(primitive(&e.transform[d - 1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn echelon_splits_saturated_span() {
        // span of (2,0,0),(0,2,0): saturation is Z^2 x 0, index 4.
        let cols = vec![vec![2, 0, 0], vec![0, 2, 0]];
        let e = Echelon::of_columns(3, &cols).unwrap();
        assert_eq!(e.rank, 2);
        assert_eq!(e.index().unwrap(), 4);
        assert_eq!(e.quotient_coordinates(&[5, 7, 0]).unwrap(), vec![0]);
        assert_eq!(e.quotient_coordinates(&[0, 0, 3]).unwrap().len(), 1);
    }

    #[test]
    fn normal_of_plane() {
        let n = normal_vector(3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap().unwrap();
        assert_eq!(n.iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![0, 0, 1]);
        assert!(normal_vector(3, &[vec![1, 0, 0], vec![2, 0, 0]]).unwrap().is_none());
    }

    #[test]
    fn unimodular_transform_has_unit_determinant() {
        let cols = vec![vec![3, 5, 7], vec![1, 1, 2]];
        let e = Echelon::of_columns(3, &cols).unwrap();
        let u = &e.transform;
        let det = u[0][0] as i128 * (u[1][1] as i128 * u[2][2] as i128 - u[1][2] as i128 * u[2][1] as i128)
            - u[0][1] as i128 * (u[1][0] as i128 * u[2][2] as i128 - u[1][2] as i128 * u[2][0] as i128)
            + u[0][2] as i128 * (u[1][0] as i128 * u[2][1] as i128 - u[1][1] as i128 * u[2][0] as i128);
        assert_eq!(det.abs(), 1);
        for col in &cols {
            assert_eq!(e.quotient_coordinates(col).unwrap(), vec![0]);
        }
    }
}
