//! Hit actions between a Hopf algebra and its dual, and the adjoint and
//! coadjoint actions.

use super::HopfData;
use crate::linalg::{dot, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// f ⇀ h = Σ h_1 ⟨f, h_2⟩ for h ∈ X and f ∈ X*.
///
/// Applied to X = H* this is the left action a ⇀ p of H on H*, with
/// ⟨a ⇀ p, a'⟩ = ⟨p, a'a⟩.
pub fn left_hit(x: &HopfData, f: &[Scalar], h: &[Scalar]) -> Vector {
    let mut out = zero_vector(x.dim());
    for (i, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, k, s) in &x.comult_entries()[i] {
            if !f[*k].is_zero() {
                out[*j] += &(&(c * s) * &f[*k]);
            }
        }
    }
    out
}

/// h ↼ f = Σ ⟨f, h_1⟩ h_2 for h ∈ X and f ∈ X*.
///
/// Applied to X = H* this is the right action p ↼ a, with ⟨p ↼ a, a'⟩ = ⟨p, aa'⟩.
pub fn right_hit(x: &HopfData, h: &[Scalar], f: &[Scalar]) -> Vector {
    let mut out = zero_vector(x.dim());
    for (i, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, k, s) in &x.comult_entries()[i] {
            if !f[*j].is_zero() {
                out[*k] += &(&(c * s) * &f[*j]);
            }
        }
    }
    out
}

/// h ad a = Σ h_1 a S(h_2).
pub fn adjoint(h: &HopfData, x: &[Scalar], a: &[Scalar]) -> Vector {
    let d = h.dim();
    let mut out = zero_vector(d);
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, k, s) in &h.comult_entries()[i] {
            let left = h.mul(&h.basis(*j), a);
            let term = h.mul(&left, &h.antipode(&h.basis(*k)));
            crate::linalg::axpy(&mut out, &(c * s), &term);
        }
    }
    out
}

/// Matrix of a ↦ x ad a; column j is x ad e_j, stored as rows of the transpose.
pub fn adjoint_matrix(h: &HopfData, x: &[Scalar]) -> Matrix {
    (0..h.dim()).map(|j| adjoint(h, x, &h.basis(j))).collect()
}

/// h coad p, defined by ⟨h coad p, a⟩ = ⟨p, h ad a⟩.
pub fn coadjoint(h: &HopfData, x: &[Scalar], p: &[Scalar]) -> Vector {
    adjoint_matrix(h, x).iter().map(|col| dot(p, col)).collect()
}
