//! Idempotent integrals, the character table and grouplike elements.

use serde::Serialize;

use super::HopfData;
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_columns, scale, sub, wedderburn, zero_vector, Subspace, Vector};
use crate::scalar::Scalar;

/// Λ is the idempotent two-sided integral of H; λ ∈ H* is the integral of H*
/// normalized by ⟨λ, Λ⟩ = 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralPair {
    #[serde(rename = "Lambda")]
    pub big_lambda: Vector,
    pub lambda: Vector,
}

/// Irreducible characters of H with E_0 = Λ and χ_0 = ε.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub central_idempotents: Vec<Vector>,
    pub characters: Vec<Vector>,
    pub degrees: Vec<usize>,
    /// One primitive idempotent in each block, in block order.
    pub primitive_idempotents: Vec<Vector>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Solution space of hx = ε(h)x over basis h, which must be one-dimensional.
fn left_integral_line(h: &HopfData) -> Result<Vector> {
    let d = h.dim();
    let columns: Vec<Vector> = (0..d)
        .map(|j| {
            let ej = h.basis(j);
            (0..d)
                .flat_map(|i| {
                    let prod = h.mul(&h.basis(i), &ej);
                    sub(&prod, &scale(&h.counit()[i], &ej))
                })
                .collect()
        })
        .collect();
    let ker = kernel_of_columns(d, d * d, &columns);
    match ker.dim() {
        0 => Err(Error::NoIntegral),
        1 => Ok(ker.basis()[0].clone()),
        n => Err(Error::NotUnique(n)),
    }
}

pub(super) fn compute_integrals(h: &HopfData) -> Result<IntegralPair> {
    let v = left_integral_line(h)?;
    let e = h.eps(&v);
    if e.is_zero() {
        return Err(Error::NotSemisimple("the integral is annihilated by the counit".into()));
    }
    let big = scale(&e.inv()?, &v);
    for i in 0..h.dim() {
        let b = h.basis(i);
        if h.mul(&big, &b) != scale(&h.counit()[i], &big) {
            return Err(Error::NotSemisimple("the left integral is not a right integral".into()));
        }
    }
    if h.mul(&big, &big) != big {
        return Err(Error::NotSemisimple("the normalized integral is not idempotent".into()));
    }
    let dual = h.dual_ref();
    let w = left_integral_line(dual)?;
    let pairing = h.pair(&w, &big);
    if pairing.is_zero() {
        return Err(Error::NotSemisimple("the dual integral vanishes on Λ".into()));
    }
    let lambda = scale(&pairing.inv()?, &w);
    for i in 0..h.dim() {
        let b = dual.basis(i);
        if dual.mul(&lambda, &b) != scale(&dual.counit()[i], &lambda) {
            return Err(Error::NotSemisimple("the dual integral is not two-sided".into()));
        }
    }
    Ok(IntegralPair { big_lambda: big, lambda })
}

/// Λ and λ of H.
pub fn integrals(h: &HopfData) -> Result<IntegralPair> {
    h.integrals().cloned()
}

/// (1/d)·trace of left multiplication on the left ideal spanned by `ideal`, per basis element.
pub(crate) fn trace_character(
    mul: impl Fn(&[Scalar], &[Scalar]) -> Vector,
    dim: usize,
    ideal: &Subspace,
    degree: usize,
) -> Vector {
    let inv_d = Scalar::ratio(1, degree as i64);
    (0..dim)
        .map(|k| {
            let ek = crate::linalg::unit_vector(dim, k);
            let mut tr = Scalar::zero();
            for (b, p) in ideal.basis().iter().zip(ideal.pivots()) {
                let y = mul(&ek, b);
                tr += &y[*p];
            }
            &tr * &inv_d
        })
        .collect()
}

pub(super) fn compute_character_table(h: &HopfData) -> Result<CharacterTable> {
    let ints = h.integrals()?;
    let mut w = wedderburn(h)?;
    let zero_block = w
        .central_idempotents
        .iter()
        .position(|e| *e == ints.big_lambda)
        .ok_or_else(|| Error::NotSemisimple("Λ is not a central primitive idempotent".into()))?;
    w.move_to_front(zero_block);
    let d = h.dim();
    let characters: Vec<Vector> = w
        .central_idempotents
        .iter()
        .zip(&w.degrees)
        .map(|(e, deg)| {
            let products: Vec<Vector> = (0..d).map(|i| h.mul(&h.basis(i), e)).collect();
            let ideal = Subspace::span(d, products.iter());
            trace_character(|x, y| h.mul(x, y), d, &ideal, *deg)
        })
        .collect();
    let mut regular = zero_vector(d);
    for (chi, deg) in characters.iter().zip(&w.degrees) {
        crate::linalg::axpy(&mut regular, &Scalar::from_integer(*deg as i64), chi);
    }
    if regular != ints.lambda {
        return Err(Error::AxiomFailure("λ differs from the regular character Σ d_i χ_i".into()));
    }
    Ok(CharacterTable {
        central_idempotents: w.central_idempotents,
        characters,
        degrees: w.degrees,
        primitive_idempotents: w.block_primitive_idempotents,
    })
}

/// Irreducible characters, central primitive idempotents and degrees of H.
pub fn character_table(h: &HopfData) -> Result<CharacterTable> {
    h.characters().cloned()
}

/// (p|q)_H = ⟨s(q)p, Λ⟩.
pub fn bilinear_form_h(h: &HopfData, p: &[Scalar], q: &[Scalar]) -> Result<Scalar> {
    let dual = h.dual_ref();
    let prod = dual.mul(&dual.antipode(q), p);
    Ok(h.pair(&prod, &h.integrals()?.big_lambda))
}

/// All grouplike elements of H, read off the one-dimensional representations of H*.
pub fn grouplikes(h: &HopfData) -> Result<Vec<Vector>> {
    let table = h.dual_ref().characters()?;
    let mut out = Vec::new();
    for (chi, deg) in table.characters.iter().zip(&table.degrees) {
        if *deg != 1 {
            continue;
        }
        if h.comul(chi) != h.tensor(chi, chi) || !h.eps(chi).is_one() {
            return Err(Error::AxiomFailure("a character of H* is not grouplike".into()));
        }
        out.push(chi.clone());
    }
    Ok(out)
}
