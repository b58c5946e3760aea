//! Koszul complexes of piecewise polynomials and the weight table.
//!
//! `C_[l]` in total degree `k` is `PP^{k-l} ⊗ Λ^{2l-k} t*`, with differential
//! `d(x ⊗ e_J) = Σ_s (-1)^s x λ^{j_s} ⊗ e_{J \ j_s}` where `J = {j_0 < j_1 < ...}`.
//! Its cohomology in degree `k` is `Gr^W_{2l} IH^k`, the part on which the
//! Frobenius acts by `p^l`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linalg::{rational, LinearMap, Rational};
use crate::poly::QPolynomial;
use crate::pp::{frobenius_action, module_action, pp_basis, PpSpace};
use crate::sym::binomial;

/// Lexicographically ordered `b`-subsets of `0..n`.
fn subsets(n: usize, b: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, b: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == b {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, b, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, b, 0, &mut Vec::new(), &mut out);
    out
}

/// Piecewise polynomial spaces and coordinate multiplications, built on demand.
struct Modules<'a> {
    fan: &'a Fan,
    spaces: Vec<PpSpace>,
    /// `actions[a][j]`: multiplication by `λ^j`, `PP^a -> PP^{a+1}`.
    actions: Vec<Vec<LinearMap>>,
}

impl<'a> Modules<'a> {
    fn new(fan: &'a Fan) -> Result<Self> {
        if !fan.is_simplicial() {
            return Err(Error::NotSimplicial);
        }
        Ok(Modules {
            fan,
            spaces: Vec::new(),
            actions: Vec::new(),
        })
    }

    fn space(&mut self, a: usize) -> Result<&PpSpace> {
        while self.spaces.len() <= a {
            let k = self.spaces.len();
            self.spaces.push(pp_basis(self.fan, k)?);
        }
        Ok(&self.spaces[a])
    }

    fn actions(&mut self, a: usize) -> Result<&[LinearMap]> {
        self.space(a + 1)?;
        let n = self.fan.rank();
        while self.actions.len() <= a {
            let k = self.actions.len();
            let maps = (0..n)
                .map(|j| {
                    let form: Vec<Rational> = (0..n).map(|i| rational(i64::from(i == j))).collect();
                    module_action(&self.spaces[k], &self.spaces[k + 1], &form)
                })
                .collect::<Result<_>>()?;
            self.actions.push(maps);
        }
        Ok(&self.actions[a])
    }

    fn complex(&mut self, l: usize) -> Result<KoszulComplex> {
        let n = self.fan.rank();
        let lowest = l.max((2 * l).saturating_sub(n));
        let mut terms = Vec::new();
        for k in lowest..=2 * l {
            let a = k - l;
            let b = 2 * l - k;
            let dim = self.space(a)?.dim() * binomial(n, b);
            terms.push(KoszulTerm { degree: k, pp_degree: a, exterior_degree: b, dim });
        }
        let mut differentials = Vec::new();
        for w in terms.windows(2) {
            differentials.push(self.differential(&w[0], &w[1])?);
        }
        for d in differentials.windows(2) {
            if !d[1].compose(&d[0])?.is_zero() {
                return Err(Error::NotAComplex);
            }
        }
        Ok(KoszulComplex {
            weight_index: l,
            terms,
            differentials,
        })
    }

    /// Basis of a term: `e_J`-major, so `x_i ⊗ e_J` has index `J_index * dim PP^a + i`.
    fn differential(&mut self, from: &KoszulTerm, to: &KoszulTerm) -> Result<LinearMap> {
        let n = self.fan.rank();
        let src_pp = self.space(from.pp_degree)?.dim();
        let dst_pp = self.space(to.pp_degree)?.dim();
        let src_sets = subsets(n, from.exterior_degree);
        let dst_sets = subsets(n, to.exterior_degree);
        let dst_index: BTreeMap<&[usize], usize> =
            dst_sets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let actions = self.actions(from.pp_degree)?;
        let mut d = LinearMap::zero(to.dim, from.dim);
        for (ji, set) in src_sets.iter().enumerate() {
            for (s, &j) in set.iter().enumerate() {
                let rest: Vec<usize> = set.iter().copied().filter(|&x| x != j).collect();
                let ti = dst_index[rest.as_slice()];
                let m = &actions[j];
                for r in 0..dst_pp {
                    for c in 0..src_pp {
                        let x = m.get(r, c);
                        if num_traits::Zero::is_zero(x) {
                            continue;
                        }
                        let v = if s % 2 == 0 { x.clone() } else { -x.clone() };
                        d.set(ti * dst_pp + r, ji * src_pp + c, v);
                    }
                }
            }
        }
        Ok(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KoszulTerm {
    /// Total cohomological degree `k`.
    pub degree: usize,
    /// `a = k - l`.
    pub pp_degree: usize,
    /// `b = 2l - k`.
    pub exterior_degree: usize,
    pub dim: usize,
}

/// The weight-`l` subcomplex `C_[l]`, nonzero in degrees `max(l, 2l - n)..=2l`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    weight_index: usize,
    terms: Vec<KoszulTerm>,
    /// `differentials[i]` maps `terms[i]` to `terms[i + 1]`.
    differentials: Vec<LinearMap>,
}

impl KoszulComplex {
    pub fn weight_index(&self) -> usize {
        self.weight_index
    }

    pub fn terms(&self) -> &[KoszulTerm] {
        &self.terms
    }

    pub fn term(&self, k: usize) -> Option<&KoszulTerm> {
        self.terms.iter().find(|t| t.degree == k)
    }

    /// Differential leaving degree `k`, if both ends are in range.
    pub fn differential(&self, k: usize) -> Option<&LinearMap> {
        let i = self.terms.iter().position(|t| t.degree == k)?;
        self.differentials.get(i)
    }

    /// `dim H^k` for every degree carrying a term.
    pub fn cohomology(&self) -> Vec<(usize, usize)> {
        let ranks: Vec<usize> = self.differentials.iter().map(LinearMap::rank).collect();
        self.terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let outgoing = ranks.get(i).copied().unwrap_or(0);
                let incoming = if i == 0 { 0 } else { ranks[i - 1] };
                (t.degree, t.dim - outgoing - incoming)
            })
            .collect()
    }

    /// Frobenius scalar `p^a · p^b` on each term; all equal `p^l`.
    pub fn frobenius_scalars(&self, p: u64) -> Result<Vec<(usize, BigUint)>> {
        self.terms
            .iter()
            .map(|t| {
                let on_pp = frobenius_action(p, t.pp_degree)?.scalar;
                let on_exterior = frobenius_action(p, t.exterior_degree)?.scalar;
                Ok((t.degree, on_pp * on_exterior))
            })
            .collect()
    }
}

pub fn build_koszul(fan: &Fan, l: usize) -> Result<KoszulComplex> {
    Modules::new(fan)?.complex(l)
}

/// `dim Gr^W_{2l} IH^k` for a simplicial fan; absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    rank: usize,
    entries: BTreeMap<(usize, usize), usize>,
}

impl WeightTable {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, k: usize, l: usize) -> usize {
        self.entries.get(&(k, l)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(k, l)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.entries
    }

    /// `dim IH^k` for `k = 0..=2n`.
    pub fn betti(&self) -> Vec<usize> {
        (0..=2 * self.rank)
            .map(|k| self.entries.range((k, 0)..=(k, usize::MAX)).map(|(_, d)| d).sum())
            .collect()
    }

    /// `Σ (-1)^k dim Gr^W_{2l} IH^k q^l`.
    pub fn weight_euler_polynomial(&self) -> QPolynomial {
        self.entries.iter().fold(QPolynomial::zero(), |acc, (&(k, l), &d)| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            &acc + &QPolynomial::monomial(sign * d as i64, l)
        })
    }

    /// Whether every entry lies on the diagonal `2l = k`.
    pub fn is_pure(&self) -> bool {
        self.entries.keys().all(|&(k, l)| 2 * l == k)
    }
}

/// Cohomology of `C_[l]` for `l = 0..=2n`.
pub fn weight_table(fan: &Fan) -> Result<WeightTable> {
    let mut modules = Modules::new(fan)?;
    let mut entries = BTreeMap::new();
    for l in 0..=2 * fan.rank() {
        for (k, d) in modules.complex(l)?.cohomology() {
            if d > 0 {
                entries.insert((k, l), d);
            }
        }
    }
    Ok(WeightTable {
        rank: fan.rank(),
        entries,
    })
}

/// `dim W_k IH^k`: the cokernel of `PP^{k/2 - 1} ⊗ t* -> PP^{k/2}`; zero for odd `k`.
pub fn pure_part(fan: &Fan, k: usize) -> Result<usize> {
    let mut modules = Modules::new(fan)?;
    if k % 2 == 1 {
        return Ok(0);
    }
    let a = k / 2;
    let target = modules.space(a)?.dim();
    if a == 0 {
        return Ok(target);
    }
    let n = fan.rank();
    let source = modules.space(a - 1)?.dim();
    let actions = modules.actions(a - 1)?;
    let mut combined = LinearMap::zero(target, source * n);
    for (j, m) in actions.iter().enumerate() {
        for r in 0..target {
            for c in 0..source {
                combined.set(r, j * source + c, m.get(r, c).clone());
            }
        }
    }
    Ok(target - combined.rank())
}

/// A weight table entry labelled by its Frobenius eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedEntry {
    pub k: usize,
    pub l: usize,
    pub dim: usize,
    pub weight: usize,
    pub eigenvalue: BigUint,
}

pub fn twisted_dims(table: &WeightTable, p: u64) -> Result<Vec<TwistedEntry>> {
    table
        .entries
        .iter()
        .map(|(&(k, l), &dim)| {
            Ok(TwistedEntry {
                k,
                l,
                dim,
                weight: 2 * l,
                eigenvalue: frobenius_action(p, l)?.scalar,
            })
        })
        .collect()
}

/// One cell of a spectral sequence page laid out with `column = 2a`, `row = b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PageCell {
    pub column: usize,
    pub row: usize,
    pub dim: usize,
    /// Frobenius twist `a + b`.
    pub twist: usize,
}

/// `E_2^{2a, b} = PP^a ⊗ Λ^b t*` for `a = 0..=max_a`, `b = 0..=n`.
pub fn e2_table(fan: &Fan, max_a: usize) -> Result<Vec<PageCell>> {
    let mut modules = Modules::new(fan)?;
    let n = fan.rank();
    let mut cells = Vec::new();
    for b in 0..=n {
        for a in 0..=max_a {
            cells.push(PageCell {
                column: 2 * a,
                row: b,
                dim: modules.space(a)?.dim() * binomial(n, b),
                twist: a + b,
            });
        }
    }
    Ok(cells)
}

/// `E_3^{2a, b} = Gr^W_{2(a+b)} IH^{2a+b}`, same layout as [`e2_table`].
pub fn e3_table(table: &WeightTable, max_a: usize) -> Vec<PageCell> {
    let mut cells = Vec::new();
    for b in 0..=table.rank {
        for a in 0..=max_a {
            cells.push(PageCell {
                column: 2 * a,
                row: b,
                dim: table.get(2 * a + b, a + b),
                twist: a + b,
            });
        }
    }
    cells
}
