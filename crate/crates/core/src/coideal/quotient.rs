//! The quotient Hopf algebra H//N = H/HN⁺, realized on the ideal HΛ_N.

use super::{invariants_of, CoidealContext};
use crate::error::{Error, Result};
use crate::hopf::{HopfData, Sparse, Sparse2};
use crate::linalg::{Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct QuotientData {
    /// π(e_i) in quotient coordinates, for each basis element of H.
    pub projection: Vec<Vector>,
    pub quotient: HopfData,
    /// HΛ_N; its echelon basis is the basis of the quotient.
    pub section: Subspace,
}

fn nonzero(v: Vector) -> Sparse {
    v.into_iter().enumerate().filter(|(_, s)| !s.is_zero()).collect()
}

impl QuotientData {
    /// π(h) = hΛ_N in quotient coordinates.
    pub fn project(&self, h: &[Scalar]) -> Vector {
        let q = self.quotient.dim();
        let mut out = vec![Scalar::zero(); q];
        for (c, img) in h.iter().zip(&self.projection) {
            crate::linalg::axpy(&mut out, c, img);
        }
        out
    }

    /// π*(f) = f∘π for f ∈ (H//N)*.
    pub fn pull_back(&self, f: &[Scalar]) -> Vector {
        self.projection.iter().map(|img| crate::linalg::dot(f, img)).collect()
    }

    /// Lifts a left coideal subalgebra L̄ of H//N to H^{π*((H//N)*)^{L̄}} ⊇ N.
    pub fn lift(&self, h: &HopfData, lbar: &CoidealContext) -> Result<CoidealContext> {
        let pulled: Vec<Vector> = lbar.b.basis().iter().map(|f| self.pull_back(f)).collect();
        let t = Subspace::span(h.dim(), pulled.iter());
        CoidealContext::from_subspace(h, invariants_of(h, &t)?)
    }

    /// π(L) as a left coideal subalgebra of H//N.
    pub fn push_forward(&self, l: &CoidealContext) -> Result<CoidealContext> {
        let images: Vec<Vector> = l.n.basis().iter().map(|x| self.project(x)).collect();
        CoidealContext::from_subspace(&self.quotient, Subspace::span(self.quotient.dim(), images.iter()))
    }
}

/// H//N for a normal left coideal subalgebra N.
pub fn quotient(h: &HopfData, n: &CoidealContext) -> Result<QuotientData> {
    if !n.is_normal {
        return Err(Error::NotNormal);
    }
    let d = h.dim();
    let lam = &n.big_lambda_n;
    let images: Vec<Vector> = (0..d).map(|i| h.mul(&h.basis(i), lam)).collect();
    let section = Subspace::span(d, images.iter());
    let coords = |v: &[Scalar]| section.coordinates(v).expect("element of HΛ_N");
    let projection: Vec<Vector> = images.iter().map(|v| coords(v)).collect();
    let q = section.dim();
    let basis = section.basis();

    let mut mult: Vec<Sparse> = Vec::with_capacity(q * q);
    for x in basis {
        for y in basis {
            mult.push(nonzero(coords(&h.mul(x, y))));
        }
    }
    let mut comult: Vec<Sparse2> = Vec::with_capacity(q);
    for x in basis {
        let delta = h.comul(x);
        let mut acc = std::collections::BTreeMap::new();
        for j in 0..d {
            for k in 0..d {
                let c = &delta[j * d + k];
                if c.is_zero() {
                    continue;
                }
                for (u, a) in projection[j].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let ca = c * a;
                    for (v, b) in projection[k].iter().enumerate() {
                        if !b.is_zero() {
                            crate::hopf::accumulate(&mut acc, (u, v), &ca * b);
                        }
                    }
                }
            }
        }
        comult.push(acc.into_iter().filter(|(_, s): &(_, Scalar)| !s.is_zero()).map(|((u, v), s)| (u, v, s)).collect());
    }
    let unit = coords(lam);
    let counit: Vector = basis.iter().map(|x| h.eps(x)).collect();
    let antipode: Vec<Sparse> = basis.iter().map(|x| nonzero(coords(&h.mul(&h.antipode(x), lam)))).collect();
    let quotient = HopfData::new(h.order(), mult, comult, unit, counit, antipode)?;
    Ok(QuotientData { projection, quotient, section })
}
