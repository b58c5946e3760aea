//! Continuous piecewise polynomial functions on simplicial fans.
//!
//! On a maximal cone with rays `v_1..v_d` a function is a polynomial in the
//! ray coordinates `t_1..t_d` of `x = Σ t_i v_i`. Restricting to a face sets
//! the coordinates of the other rays to zero, so continuity across a common
//! face is a 0/1 substitution.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fan::{subfan_ops, Fan};
use crate::linalg::{rational, Kernel, LinearMap, Rational};
use crate::sym::{multiply_by_form, restrict_sym, sym_dim};

/// The polynomial on one maximal cone occupies `len` consecutive unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Block {
    rays: Vec<usize>,
    offset: usize,
    len: usize,
}

/// Degree-`k` piecewise polynomials on a simplicial fan, i.e. `H^{2k}_T`.
#[derive(Clone, Debug)]
pub struct PpSpace {
    degree: usize,
    rank: usize,
    ray_vectors: Vec<Vec<i64>>,
    blocks: Vec<Block>,
    unknowns: usize,
    kernel: Kernel,
}

/// Substitution matrix restricting ray coordinates of `from` to those of its face `to`.
fn face_substitution(from: &[usize], to: &[usize]) -> LinearMap {
    let mut s = LinearMap::zero(from.len(), to.len());
    for (i, r) in from.iter().enumerate() {
        if let Ok(j) = to.binary_search(r) {
            s.set(i, j, rational(1));
        }
    }
    s
}

fn common_rays(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|r| b.binary_search(r).is_ok()).collect()
}

pub fn pp_basis(fan: &Fan, k: usize) -> Result<PpSpace> {
    if !fan.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    let mut blocks = Vec::new();
    let mut offset = 0;
    for (_, c) in fan.maximal_cones() {
        let len = sym_dim(c.dim(), k);
        blocks.push(Block {
            rays: c.rays().to_vec(),
            offset,
            len,
        });
        offset += len;
    }
    let unknowns = offset;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            let face = common_rays(&a.rays, &b.rays);
            let ra = restrict_sym(a.rays.len(), k, &face_substitution(&a.rays, &face))?;
            let rb = restrict_sym(b.rays.len(), k, &face_substitution(&b.rays, &face))?;
            for r in 0..ra.rows() {
                let mut row = alloc::vec![Rational::zero(); unknowns];
                for (c, x) in ra.row(r).iter().enumerate() {
                    row[a.offset + c] = x.clone();
                }
                for (c, x) in rb.row(r).iter().enumerate() {
                    row[b.offset + c] = -x.clone();
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = LinearMap::from_rows(&rows, unknowns).kernel();
    Ok(PpSpace {
        degree: k,
        rank: fan.rank(),
        ray_vectors: fan.rays().to_vec(),
        blocks,
        unknowns,
        kernel,
    })
}

impl PpSpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    /// Basis elements as concatenated per-cone coefficient vectors.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.kernel.basis
    }

    /// Ray indices of the maximal cones, in block order.
    pub fn cones(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.blocks.iter().map(|b| b.rays.as_slice())
    }

    /// Coefficients, in the monomial basis of the cone's ray coordinates, of
    /// the polynomial of `element` on maximal cone number `block`.
    pub fn piece<'a>(&self, element: &'a [Rational], block: usize) -> &'a [Rational] {
        let b = &self.blocks[block];
        &element[b.offset..b.offset + b.len]
    }

    fn same_cones(&self, other: &PpSpace) -> bool {
        self.rank == other.rank
            && self.ray_vectors == other.ray_vectors
            && self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a.rays == b.rays)
    }

    /// Restriction `PP^k(fan) -> PP^k(sub)` for a subfan on the same rays.
    pub fn restriction_to(&self, sub: &PpSpace) -> Result<LinearMap> {
        if self.degree != sub.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                found: sub.degree,
            });
        }
        if self.rank != sub.rank || self.ray_vectors != sub.ray_vectors {
            return Err(Error::IncompatibleRayUniverse);
        }
        let mut maps = Vec::with_capacity(sub.blocks.len());
        for b in &sub.blocks {
            let host = self
                .blocks
                .iter()
                .find(|a| common_rays(&b.rays, &a.rays).len() == b.rays.len())
                .ok_or(Error::IncompatibleRayUniverse)?;
            let r = restrict_sym(host.rays.len(), self.degree, &face_substitution(&host.rays, &b.rays))?;
            maps.push((host, r));
        }
        let mut out = LinearMap::zero(sub.dim(), self.dim());
        let mut v = alloc::vec![Rational::zero(); sub.unknowns];
        for (col, x) in self.basis().iter().enumerate() {
            for (b, (host, r)) in sub.blocks.iter().zip(&maps) {
                let image = r.apply(&x[host.offset..host.offset + host.len])?;
                v[b.offset..b.offset + b.len].clone_from_slice(&image);
            }
            for (row, c) in sub.kernel.coordinates(&v).into_iter().enumerate() {
                out.set(row, col, c);
            }
        }
        Ok(out)
    }
}

/// Multiplication by a global linear form, `PP^k -> PP^{k+1}`.
///
/// `form` is given on the ambient lattice; on a cone it becomes
/// `Σ_i form(v_i) t_i`.
pub fn module_action(source: &PpSpace, target: &PpSpace, form: &[Rational]) -> Result<LinearMap> {
    if form.len() != source.rank {
        return Err(Error::DimensionMismatch {
            expected: source.rank,
            found: form.len(),
        });
    }
    if target.degree != source.degree + 1 {
        return Err(Error::DimensionMismatch {
            expected: source.degree + 1,
            found: target.degree,
        });
    }
    if !source.same_cones(target) {
        return Err(Error::IncompatibleRayUniverse);
    }
    let mut maps = Vec::with_capacity(source.blocks.len());
    for b in &source.blocks {
        let local: Vec<Rational> = b
            .rays
            .iter()
            .map(|&r| {
                let mut acc = Rational::zero();
                for (x, f) in source.ray_vectors[r].iter().zip(form) {
                    if *x != 0 {
                        acc += f * rational(*x);
                    }
                }
                acc
            })
            .collect();
        maps.push(multiply_by_form(b.rays.len(), source.degree, &local)?);
    }
    let mut out = LinearMap::zero(target.dim(), source.dim());
    let mut v = alloc::vec![Rational::zero(); target.unknowns];
    for (col, x) in source.basis().iter().enumerate() {
        for ((s, t), m) in source.blocks.iter().zip(&target.blocks).zip(&maps) {
            let image = m.apply(&x[s.offset..s.offset + s.len])?;
            v[t.offset..t.offset + t.len].clone_from_slice(&image);
        }
        for (row, c) in target.kernel.coordinates(&v).into_iter().enumerate() {
            out.set(row, col, c);
        }
    }
    Ok(out)
}

/// Dimensions and exactness of `0 -> PP(U) -> PP(F1) + PP(F2) -> PP(F1 ∩ F2) -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MayerVietoris {
    pub degree: usize,
    pub union_dim: usize,
    pub sum_dim: usize,
    pub intersection_dim: usize,
    pub injective_left: bool,
    pub exact_middle: bool,
    pub surjective_right: bool,
}

impl MayerVietoris {
    pub fn is_exact(&self) -> bool {
        self.injective_left && self.exact_middle && self.surjective_right
    }
}

pub fn mayer_vietoris_check(f1: &Fan, f2: &Fan, k: usize) -> Result<MayerVietoris> {
    let ops = subfan_ops(f1, f2)?;
    let pu = pp_basis(&ops.union, k)?;
    let p1 = pp_basis(f1, k)?;
    let p2 = pp_basis(f2, k)?;
    let pi = pp_basis(&ops.intersection, k)?;
    let alpha = LinearMap::vstack(pu.dim(), &[&pu.restriction_to(&p1)?, &pu.restriction_to(&p2)?])?;
    let r1 = p1.restriction_to(&pi)?;
    let r2 = p2.restriction_to(&pi)?;
    let (d1, d2) = (p1.dim(), p2.dim());
    let mut beta = LinearMap::zero(pi.dim(), d1 + d2);
    for r in 0..pi.dim() {
        for c in 0..d1 {
            beta.set(r, c, r1.get(r, c).clone());
        }
        for c in 0..d2 {
            beta.set(r, d1 + c, -r2.get(r, c).clone());
        }
    }
    let rank_alpha = alpha.rank();
    let rank_beta = beta.rank();
    let composite_zero = beta.compose(&alpha)?.is_zero();
    Ok(MayerVietoris {
        degree: k,
        union_dim: pu.dim(),
        sum_dim: d1 + d2,
        intersection_dim: pi.dim(),
        injective_left: rank_alpha == pu.dim(),
        exact_middle: composite_zero && d1 + d2 - rank_beta == rank_alpha,
        surjective_right: rank_beta == pi.dim(),
    })
}

/// The toric Frobenius `φ_p` on `PP^k`: multiplication by `p^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAction {
    pub prime_power: u64,
    pub degree: usize,
    pub scalar: BigUint,
}

pub fn frobenius_action(p: u64, k: usize) -> Result<FrobeniusAction> {
    if p < 2 {
        return Err(Error::InvalidPrime(p));
    }
    Ok(FrobeniusAction {
        prime_power: p,
        degree: k,
        scalar: num_traits::pow(BigUint::from(p), k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::builtin_fan;
    use crate::sym::binomial;
    use alloc::vec;
    use proptest::prelude::*;

    /// Hilbert function of the Stanley–Reisner ring: monomials supported on a cone.
    fn stanley_reisner_dim(fan: &Fan, k: usize) -> usize {
        if k == 0 {
            return 1;
        }
        fan.cones()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| binomial(k - 1, c.dim() - 1))
            .sum()
    }

    fn unit_form(n: usize, j: usize) -> Vec<Rational> {
        (0..n).map(|i| rational(i64::from(i == j))).collect()
    }

    #[test]
    fn dims_match_stanley_reisner() {
        for name in ["p1", "p2", "p1xp1", "hirzebruch(2)", "example-prz", "c2-minus-origin", "affine-space(3)", "torus(2)", "p3"] {
            let fan = builtin_fan(name).unwrap();
            for k in 0..=5 {
                assert_eq!(pp_basis(&fan, k).unwrap().dim(), stanley_reisner_dim(&fan, k), "{name} k={k}");
            }
        }
    }

    #[test]
    fn prz_dims() {
        let fan = builtin_fan("example-prz").unwrap();
        let dims: Vec<usize> = (0..=4).map(|k| pp_basis(&fan, k).unwrap().dim()).collect();
        assert_eq!(dims, vec![1, 4, 6, 8, 10]);
        assert_eq!(pp_basis(&builtin_fan("p1").unwrap(), 1).unwrap().dim(), 2);
    }

    #[test]
    fn nonsimplicial_is_rejected() {
        let fan = builtin_fan("cone-over-square").unwrap();
        assert_eq!(pp_basis(&fan, 0).unwrap_err(), Error::NotSimplicial);
    }

    #[test]
    fn linear_forms_from_constants() {
        let fan = builtin_fan("example-prz").unwrap();
        let p0 = pp_basis(&fan, 0).unwrap();
        let p1 = pp_basis(&fan, 1).unwrap();
        let m1 = module_action(&p0, &p1, &unit_form(2, 0)).unwrap();
        let m2 = module_action(&p0, &p1, &unit_form(2, 1)).unwrap();
        assert_eq!((m1.rank(), m2.rank()), (1, 1));
        let both = LinearMap::vstack(4, &[&m1.transpose(), &m2.transpose()]).unwrap();
        assert_eq!(both.rank(), 2);
        let zero = module_action(&p0, &p1, &[rational(0), rational(0)]).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn continuity_holds_on_shared_faces() {
        let fan = builtin_fan("p2").unwrap();
        let pp = pp_basis(&fan, 3).unwrap();
        let cones: Vec<Vec<usize>> = pp.cones().map(<[usize]>::to_vec).collect();
        for x in pp.basis() {
            for i in 0..cones.len() {
                for j in i + 1..cones.len() {
                    let face = common_rays(&cones[i], &cones[j]);
                    let a = restrict_sym(2, 3, &face_substitution(&cones[i], &face)).unwrap();
                    let b = restrict_sym(2, 3, &face_substitution(&cones[j], &face)).unwrap();
                    assert_eq!(a.apply(pp.piece(x, i)).unwrap(), b.apply(pp.piece(x, j)).unwrap());
                }
            }
        }
    }

    #[test]
    fn mayer_vietoris_examples() {
        let fan = builtin_fan("example-prz").unwrap();
        let q1 = fan.subfan(&[fan.find(&[0, 1]).unwrap()]);
        let q3 = fan.subfan(&[fan.find(&[2, 3]).unwrap()]);
        let mv = mayer_vietoris_check(&q1, &q3, 0).unwrap();
        assert_eq!((mv.union_dim, mv.sum_dim, mv.intersection_dim), (1, 2, 1));
        assert!(mv.is_exact());
        assert!(mayer_vietoris_check(&q1, &q1, 2).unwrap().is_exact());

        let p2 = builtin_fan("p2").unwrap();
        let a = p2.subfan(&[p2.find(&[0, 1]).unwrap()]);
        let b = p2.subfan(&[p2.find(&[1, 2]).unwrap()]);
        let mv = mayer_vietoris_check(&a, &b, 2).unwrap();
        assert_eq!((mv.union_dim, mv.sum_dim, mv.intersection_dim), (5, 6, 1));
        assert!(mv.is_exact());
    }

    #[test]
    fn frobenius_scalars() {
        assert_eq!(frobenius_action(2, 0).unwrap().scalar, BigUint::from(1u8));
        assert_eq!(frobenius_action(2, 3).unwrap().scalar, BigUint::from(8u8));
        assert_eq!(frobenius_action(1, 3), Err(Error::InvalidPrime(1)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn multiplication_commutes(a in proptest::collection::vec(-2i64..=2, 2), b in proptest::collection::vec(-2i64..=2, 2), k in 0usize..3) {
            let fan = builtin_fan("hirzebruch(1)").unwrap();
            let s = pp_basis(&fan, k).unwrap();
            let m = pp_basis(&fan, k + 1).unwrap();
            let t = pp_basis(&fan, k + 2).unwrap();
            let fa: Vec<Rational> = a.iter().map(|&x| rational(x)).collect();
            let fb: Vec<Rational> = b.iter().map(|&x| rational(x)).collect();
            let ab = module_action(&m, &t, &fa).unwrap().compose(&module_action(&s, &m, &fb).unwrap()).unwrap();
            let ba = module_action(&m, &t, &fb).unwrap().compose(&module_action(&s, &m, &fa).unwrap()).unwrap();
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn shape_errors() {
        let fan = builtin_fan("p1").unwrap();
        let p0 = pp_basis(&fan, 0).unwrap();
        let p1 = pp_basis(&fan, 1).unwrap();
        assert!(module_action(&p0, &p0, &[rational(1)]).is_err());
        assert!(module_action(&p0, &p1, &[rational(1), rational(1)]).is_err());
    }
}
