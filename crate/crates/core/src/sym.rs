//! Graded pieces of polynomial rings and the maps between them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Rational};

/// Monomial basis of the degree-`degree` part of `Q[x_1, ..., x_vars]`.
///
/// Monomials are exponent vectors in descending lexicographic order, so for
/// two variables in degree 2 the basis is `x^2, xy, y^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBasis {
    vars: usize,
    degree: usize,
    monomials: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
}

impl SymBasis {
    pub fn new(vars: usize, degree: usize) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0u32; vars];
        fill(&mut monomials, &mut current, 0, degree as u32);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        SymBasis {
            vars,
            degree,
            monomials,
            index,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn index_of(&self, exponents: &[u32]) -> Option<usize> {
        self.index.get(exponents).copied()
    }
}

fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, left: u32) {
    if var == current.len() {
        if left == 0 {
            out.push(current.clone());
        }
        return;
    }
    if var + 1 == current.len() {
        current[var] = left;
        out.push(current.clone());
        current[var] = 0;
        return;
    }
    for e in (0..=left).rev() {
        current[var] = e;
        fill(out, current, var + 1, left - e);
    }
    current[var] = 0;
}

type Poly = BTreeMap<Vec<u32>, Rational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ca * cb;
            let slot = out.entry(e).or_insert_with(Rational::zero);
            *slot += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Pullback along a linear substitution of coordinates.
///
/// `substitution` is a `ambient_vars x k` matrix expressing each ambient
/// coordinate as a linear form in `k` new coordinates; it induces
/// `Sym^degree(ambient) -> Sym^degree(k)`, `p |-> p(S t)`. Pullback is
/// contravariant: the map induced by `S T` equals `induced(T) * induced(S)`.
pub fn restrict_sym(
    ambient_vars: usize,
    degree: usize,
    substitution: &LinearMap,
) -> Result<LinearMap> {
    if substitution.rows() != ambient_vars {
        return Err(Error::DimensionMismatch {
            expected: ambient_vars,
            found: substitution.rows(),
        });
    }
    let k = substitution.cols();
    let source = SymBasis::new(ambient_vars, degree);
    let target = SymBasis::new(k, degree);
    let images: Vec<Poly> = (0..ambient_vars)
        .map(|i| {
            (0..k)
                .filter(|&j| !substitution.get(i, j).is_zero())
                .map(|j| {
                    let mut e = vec![0u32; k];
                    e[j] = 1;
                    (e, substitution.get(i, j).clone())
                })
                .collect()
        })
        .collect();
    let mut one = Poly::new();
    one.insert(vec![0u32; k], Rational::from_integer(1.into()));
    let mut out = LinearMap::zero(target.len(), source.len());
    for (col, mono) in source.monomials().iter().enumerate() {
        let mut p = one.clone();
        for (i, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                p = poly_mul(&p, &images[i]);
            }
        }
        for (e, c) in p {
            let row = target.index_of(&e).expect("degree is preserved");
            out.set(row, col, c);
        }
    }
    Ok(out)
}

/// Multiplication by a linear form, `Sym^degree -> Sym^(degree + 1)`.
pub fn multiply_by_form(vars: usize, degree: usize, form: &[Rational]) -> Result<LinearMap> {
    if form.len() != vars {
        return Err(Error::DimensionMismatch {
            expected: vars,
            found: form.len(),
        });
    }
    let source = SymBasis::new(vars, degree);
    let target = SymBasis::new(vars, degree + 1);
    let mut out = LinearMap::zero(target.len(), source.len());
    let mut e = vec![0u32; vars];
    for (col, mono) in source.monomials().iter().enumerate() {
        for (i, c) in form.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            e.clone_from(mono);
            e[i] += 1;
            let row = target.index_of(&e).expect("degree + 1");
            out.set(row, col, c.clone());
        }
    }
    Ok(out)
}

/// Number of monomials of `degree` in `vars` variables.
pub fn sym_dim(vars: usize, degree: usize) -> usize {
    if vars == 0 {
        return usize::from(degree == 0);
    }
    binomial(vars + degree - 1, degree)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}
