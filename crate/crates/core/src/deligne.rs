//! First page of the Deligne spectral sequence of a smooth toric completion.
//!
//! For `X ⊂ X̄` with boundary divisors the orbit closures of the rays `B`
//! missing from `X`, `E_1^{-k, l} = H^{l - 2k}(D^{(k)})(k)` where `D^{(k)}` is
//! the disjoint union of the `k`-fold intersections. Each stratum is the
//! orbit closure of a cone spanned by `k` boundary rays, a smooth complete
//! toric variety whose Betti numbers are its h-vector.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::koszul::WeightTable;
use crate::poly::QPolynomial;

/// A smooth complete fan and the open subfan of cones avoiding the boundary rays.
#[derive(Clone, Debug)]
pub struct CompletionPair {
    ambient: Fan,
    open_rays: Vec<usize>,
    boundary_rays: Vec<usize>,
    open: Fan,
}

pub fn validate_completion(ambient: Fan, open_rays: &[usize]) -> Result<CompletionPair> {
    let mut sorted = open_rays.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != open_rays.len() || sorted.iter().any(|&r| r >= ambient.rays().len()) {
        return Err(Error::InvalidOpenRays);
    }
    if !ambient.is_smooth() {
        return Err(Error::NotSmooth);
    }
    if !ambient.is_complete() {
        return Err(Error::NotComplete);
    }
    let boundary_rays: Vec<usize> = (0..ambient.rays().len())
        .filter(|r| sorted.binary_search(r).is_err())
        .collect();
    let avoiding: Vec<usize> = (0..ambient.cones().len())
        .filter(|&i| {
            ambient.cone(i).rays().iter().all(|r| sorted.binary_search(r).is_ok())
        })
        .collect();
    let open = ambient.subfan(&avoiding);
    Ok(CompletionPair {
        ambient,
        open_rays: sorted,
        boundary_rays,
        open,
    })
}

impl CompletionPair {
    pub fn ambient(&self) -> &Fan {
        &self.ambient
    }

    /// The subfan of cones avoiding the boundary rays.
    pub fn open(&self) -> &Fan {
        &self.open
    }

    pub fn open_rays(&self) -> &[usize] {
        &self.open_rays
    }

    pub fn boundary_rays(&self) -> &[usize] {
        &self.boundary_rays
    }

    /// `X = X̄`: the table degenerates to its zero column.
    pub fn boundary_empty(&self) -> bool {
        self.boundary_rays.is_empty()
    }

    /// Star quotients of the cones spanned by `k` boundary rays; `k = 0` gives `X̄`.
    pub fn boundary_strata(&self, k: usize) -> Result<Vec<Fan>> {
        if k == 0 {
            return Ok(vec![self.ambient.clone()]);
        }
        self.ambient
            .cones()
            .iter()
            .filter(|c| {
                c.dim() == k && c.rays().iter().all(|r| self.boundary_rays.binary_search(r).is_ok())
            })
            .map(|c| self.ambient.star_quotient(c))
            .collect()
    }
}

/// h-vector of a complete simplicial fan: `Σ h_i q^i = Σ_j f_j q^j (1 - q)^{n - j}`.
pub fn h_vector(fan: &Fan) -> Vec<i64> {
    let n = fan.rank();
    let f = fan.f_vector();
    let h = f.iter().enumerate().fold(QPolynomial::zero(), |acc, (j, &fj)| {
        &acc + &(&QPolynomial::monomial(fj as i64, j) * &QPolynomial::one_minus_q_pow(n - j))
    });
    (0..=n).map(|i| h.coefficient(i)).collect()
}

/// `E_1^{-k, l}`: its dimension, the Tate twist `k` and the weight `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct E1Entry {
    pub column: i64,
    pub row: usize,
    pub dim: usize,
    pub tate_twist: usize,
    pub weight: usize,
}

impl E1Entry {
    /// Total degree `l - k`.
    pub fn total_degree(&self) -> i64 {
        self.row as i64 + self.column
    }
}

/// Dense table over columns `-min(|B|, n)..=0` and rows `0..=2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Table {
    rank: usize,
    columns: usize,
    entries: Vec<E1Entry>,
}

impl E1Table {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of columns, `-(columns - 1)..=0`.
    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn entries(&self) -> &[E1Entry] {
        &self.entries
    }

    pub fn get(&self, column: i64, row: usize) -> Option<&E1Entry> {
        self.entries.iter().find(|e| e.column == column && e.row == row)
    }
}

pub fn e1_table(pair: &CompletionPair) -> Result<E1Table> {
    let n = pair.ambient.rank();
    let columns = pair.boundary_rays.len().min(n) + 1;
    let mut entries = Vec::new();
    for k in 0..columns {
        let hs: Vec<Vec<i64>> = pair.boundary_strata(k)?.iter().map(h_vector).collect();
        for l in 0..=2 * n {
            let dim = if l >= 2 * k && (l - 2 * k) % 2 == 0 {
                let i = (l - 2 * k) / 2;
                let total: i64 = hs.iter().map(|h| h.get(i).copied().unwrap_or(0)).sum();
                usize::try_from(total).map_err(|_| Error::PurityViolation { degree: l - 2 * k, value: total })?
            } else {
                0
            };
            entries.push(E1Entry {
                column: -(k as i64),
                row: l,
                dim,
                tate_twist: k,
                weight: l,
            });
        }
    }
    Ok(E1Table {
        rank: n,
        columns,
        entries,
    })
}

/// Both sides of the Euler identity for weight `2w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightEuler {
    pub weight: usize,
    /// `Σ_k (-1)^{2w - k} dim E_1^{-k, 2w}`.
    pub deligne: i64,
    /// `Σ_k (-1)^k dim Gr^W_{2w} IH^k`.
    pub koszul: i64,
}

impl WeightEuler {
    pub fn holds(&self) -> bool {
        self.deligne == self.koszul
    }
}

/// Per-weight comparison of the E_1 table with the weight table of `X`.
pub fn euler_consistency(table_e1: &E1Table, weights: &WeightTable) -> Result<Vec<WeightEuler>> {
    if weights.rank() != table_e1.rank {
        return Err(Error::DimensionMismatch {
            expected: table_e1.rank,
            found: weights.rank(),
        });
    }
    let mut out = Vec::new();
    for w in 0..=table_e1.rank {
        let deligne = table_e1
            .entries
            .iter()
            .filter(|e| e.row == 2 * w)
            .map(|e| sign(e.total_degree()) * e.dim as i64)
            .sum();
        let koszul = weights
            .entries()
            .iter()
            .filter(|(&(_, l), _)| l == w)
            .map(|(&(k, _), &d)| sign(k as i64) * d as i64)
            .sum();
        out.push(WeightEuler {
            weight: 2 * w,
            deligne,
            koszul,
        });
    }
    Ok(out)
}

/// `(Σ_{E_1} (-1)^{l-k} dim, Σ (-1)^k weight table)`: both equal `χ(X)`.
pub fn sum_rule(table_e1: &E1Table, weights: &WeightTable) -> (i64, i64) {
    let deligne = table_e1
        .entries
        .iter()
        .map(|e| sign(e.total_degree()) * e.dim as i64)
        .sum();
    (deligne, weights.weight_euler_polynomial().eval_at_one())
}

fn sign(degree: i64) -> i64 {
    if degree.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
