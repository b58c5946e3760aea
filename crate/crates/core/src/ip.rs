//! Virtual Poincaré polynomials of toric varieties from cone links.
//!
//! Every cone `σ` contributes `∂IP(X_{Lσ}) (1 - q)^{n - dim σ}`, where `Lσ` is
//! its link and `∂ = τ_{>dim/2} ∘ (q - 1)`. The link of a face of `σ` inside
//! `Lσ` is the link of that face in the fan, so one pass over the cones in
//! order of dimension computes every `∂IP(X_{Lσ})` from those of its faces.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fan::{subfan_ops, Cone, Fan};
use crate::poly::{QPolynomial, QSeries};

/// `τ_{>dim/2}((q - 1) ip)`: keeps the monomials `q^j` with `2j > complex_dim`.
pub fn d_ip(ip: &QPolynomial, complex_dim: i64) -> Result<QPolynomial> {
    if complex_dim < 0 {
        return Err(Error::NegativeDimension(complex_dim));
    }
    let shifted = ip * &QPolynomial::new(vec![-1, 1]);
    Ok(shifted.filter_degrees(|j| 2 * j as i64 > complex_dim))
}

/// `∂IP(X_{Lσ})` for every cone, indexed like `fan.cones()`.
fn local_contributions(fan: &Fan) -> Result<Vec<QPolynomial>> {
    let cones = fan.cones();
    let mut g: Vec<QPolynomial> = Vec::with_capacity(cones.len());
    for (i, sigma) in cones.iter().enumerate() {
        if sigma.is_zero() {
            g.push(QPolynomial::one());
            continue;
        }
        let d = sigma.dim();
        let mut link = QPolynomial::zero();
        for f in fan.faces_of(i) {
            if f == i {
                continue;
            }
            let tau = &cones[f];
            link = &link + &(&g[f] * &QPolynomial::one_minus_q_pow(d - 1 - tau.dim()));
        }
        g.push(d_ip(&link, d as i64 - 1)?);
    }
    Ok(g)
}

/// `IP_cld(X_Δ) = Σ_σ ∂IP(X_{Lσ}) (1 - q)^{n - dim σ}`.
pub fn ip_cld(fan: &Fan) -> Result<QPolynomial> {
    let g = local_contributions(fan)?;
    let n = fan.rank();
    Ok(fan
        .cones()
        .iter()
        .zip(&g)
        .fold(QPolynomial::zero(), |acc, (c, gc)| {
            &acc + &(gc * &QPolynomial::one_minus_q_pow(n - c.dim()))
        }))
}

/// `IP_cld(X_Δ) / (1 - q)^n` up to `q^cutoff`; these are the equivariant
/// intersection Betti numbers, so a negative coefficient is an internal error.
pub fn ip_equivariant_series(fan: &Fan, cutoff: usize) -> Result<QSeries> {
    let ip = ip_cld(fan)?;
    let series = QSeries::from_polynomial(&ip, cutoff).div_one_minus_q_pow(fan.rank());
    if let Some((degree, &value)) = series.coefficients().iter().enumerate().find(|(_, &c)| c < 0) {
        return Err(Error::PurityViolation { degree, value });
    }
    Ok(series)
}

/// Intersection Betti numbers of the affine toric variety of `cone`, modulo
/// its torus factor, in degrees `0..dim σ`.
///
/// The variety is the cone over the projective `Y = X_{Lσ}`; its `IH^k` is the
/// primitive part `b_k(Y) - b_{k-2}(Y)` for `k < dim σ` and zero above.
pub fn affine_ih_betti(fan: &Fan, cone: &Cone) -> Result<Vec<usize>> {
    if cone.is_zero() {
        fan.index_of(cone)?;
        return Err(Error::ZeroCone);
    }
    let link = fan.link_fan(cone)?;
    let ip = ip_cld(&link)?;
    let d = cone.dim();
    let mut betti = vec![0usize; d];
    for k in (0..d).step_by(2) {
        let i = k / 2;
        let below = if i == 0 { 0 } else { ip.coefficient(i - 1) };
        let value = ip.coefficient(i) - below;
        betti[k] = usize::try_from(value).map_err(|_| Error::PurityViolation { degree: k, value })?;
    }
    Ok(betti)
}

/// Both sides of `IP(F1 ∪ F2) = IP(F1) + IP(F2) - IP(F1 ∩ F2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Additivity {
    pub union: QPolynomial,
    pub sum: QPolynomial,
    pub union_series: QSeries,
    pub sum_series: QSeries,
}

impl Additivity {
    pub fn holds(&self) -> bool {
        self.union == self.sum && self.union_series == self.sum_series
    }
}

pub fn additivity_check(f1: &Fan, f2: &Fan, cutoff: usize) -> Result<Additivity> {
    let ops = subfan_ops(f1, f2)?;
    let (a, b, i) = (ip_cld(f1)?, ip_cld(f2)?, ip_cld(&ops.intersection)?);
    let sum = &(&a + &b) - &i;
    let n = f1.rank();
    let series = |p: &QPolynomial| QSeries::from_polynomial(p, cutoff).div_one_minus_q_pow(n);
    let union = ip_cld(&ops.union)?;
    Ok(Additivity {
        union_series: series(&union),
        sum_series: series(&sum),
        union,
        sum,
    })
}
