//! Double description method for small pointed cones.
//!
//! Inequalities `a . x >= 0` are added one at a time to an initial
//! simplicial cone; extreme rays are combined only across adjacent pairs,
//! adjacency being decided combinatorially from zero sets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{dot, normal_vector, primitive, rank_of};

struct Generator {
    ray: Vec<i64>,
    zeros: BTreeSet<usize>,
}

/// Extreme rays (primitive) of `{x in Q^dim : row . x >= 0 for every row}`.
///
/// The rows must have rank `dim`, which makes the cone pointed. Returns
/// `None` if the rank condition fails.
pub(crate) fn extreme_rays(dim: usize, rows: &[Vec<i64>]) -> Result<Option<Vec<Vec<i64>>>> {
    if dim == 0 {
        return Ok(Some(Vec::new()));
    }
    // greedy choice of `dim` independent rows
    let mut basis: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        chosen.push(r.clone());
        if rank_of(dim, &chosen)? == chosen.len() {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    if basis.len() < dim {
        return Ok(None);
    }

    let mut gens: Vec<Generator> = Vec::with_capacity(dim);
    for &i in &basis {
        let others: Vec<Vec<i64>> = basis
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| rows[j].clone())
            .collect();
        let mut r = normal_vector(dim, &others)?.ok_or(Error::Overflow)?;
        if dot(&rows[i], &r)? < 0 {
            r.iter_mut().for_each(|x| *x = -*x);
        }
        let zeros = basis.iter().copied().filter(|&j| j != i).collect();
        gens.push(Generator { ray: r, zeros });
    }

    for (idx, row) in rows.iter().enumerate() {
        if basis.contains(&idx) {
            continue;
        }
        let values: Vec<i64> = gens
            .iter()
            .map(|g| dot(row, &g.ray))
            .collect::<Result<_>>()?;
        let pos: Vec<usize> = (0..gens.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..gens.len()).filter(|&i| values[i] < 0).collect();
        let mut next: Vec<Generator> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                if !adjacent(&gens, p, q, dim) {
                    continue;
                }
                let (vp, vq) = (values[p] as i128, values[q] as i128);
                let mut ray = Vec::with_capacity(dim);
                for (x, y) in gens[q].ray.iter().zip(&gens[p].ray) {
                    let c = vp * *x as i128 - vq * *y as i128;
                    ray.push(i64::try_from(c).map_err(|_| Error::Overflow)?);
                }
                let ray = primitive(&ray);
                let mut zeros: BTreeSet<usize> =
                    gens[p].zeros.intersection(&gens[q].zeros).copied().collect();
                zeros.insert(idx);
                next.push(Generator { ray, zeros });
            }
        }
        for (i, g) in gens.into_iter().enumerate() {
            if values[i] > 0 {
                next.push(g);
            } else if values[i] == 0 {
                let mut g = g;
                g.zeros.insert(idx);
                next.push(g);
            }
        }
        gens = next;
    }
    let mut out: Vec<Vec<i64>> = gens.into_iter().map(|g| g.ray).collect();
    out.sort();
    out.dedup();
    Ok(Some(out))
}

fn adjacent(gens: &[Generator], p: usize, q: usize, dim: usize) -> bool {
    let common: BTreeSet<usize> = gens[p].zeros.intersection(&gens[q].zeros).copied().collect();
    if common.len() + 2 < dim {
        return false;
    }
    !gens
        .iter()
        .enumerate()
        .any(|(i, g)| i != p && i != q && common.is_subset(&g.zeros))
}

/// Facet normals (primitive, inward) of the cone generated by `rays`, which
/// must span `Q^dim`. Empty when the cone is all of `Q^dim`.
pub(crate) fn facet_normals(dim: usize, rays: &[Vec<i64>]) -> Result<Option<Vec<Vec<i64>>>> {
    extreme_rays(dim, rays)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn square_cone_has_four_facets() {
        let rays = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, -1]];
        let facets = facet_normals(3, &rays).unwrap().unwrap();
        assert_eq!(facets.len(), 4);
        for f in &facets {
            let zeros = rays.iter().filter(|r| dot(f, r).unwrap() == 0).count();
            assert_eq!(zeros, 2);
            assert!(rays.iter().all(|r| dot(f, r).unwrap() >= 0));
        }
    }

    #[test]
    fn quadrant_from_inequalities() {
        let rows = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let rays = extreme_rays(2, &rows).unwrap().unwrap();
        assert_eq!(rays, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn line_gives_no_facets_of_full_rank() {
        // cone((1),(-1)) = Q: dual is {0}.
        let facets = facet_normals(1, &[vec![1], vec![-1]]).unwrap().unwrap();
        assert!(facets.is_empty());
    }

    #[test]
    fn hexagon_cone() {
        let rays = vec![
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![-1, 1, 1],
            vec![-1, 0, 1],
            vec![0, -1, 1],
            vec![1, -1, 1],
        ];
        assert_eq!(facet_normals(3, &rays).unwrap().unwrap().len(), 6);
    }
}
