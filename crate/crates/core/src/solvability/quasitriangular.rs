//! Ingredients of the p^a q^b argument evaluated on a concrete quasitriangular
//! H: grouplikes of D(H), central grouplikes τ⋈1, f_R(τ), f_{R^t}(τ) and the
//! invariants H^{k⟨τ⟩}.

use serde::Serialize;

use crate::coideal::invariants_of;
use crate::error::{Error, Result};
use crate::hopf::{drinfeld_double, f_r, grouplikes, HopfData};
use crate::linalg::{Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauDiagnostic {
    /// A grouplike τ of H*.
    pub tau: Vector,
    /// τ⋈1 is central in D(H).
    pub central_in_double: bool,
    pub f_r: Vector,
    pub f_r_transposed: Vector,
    pub f_r_is_one: bool,
    pub f_r_transposed_is_one: bool,
    /// f_R(τ) is grouplike in H.
    pub f_r_grouplike: bool,
    /// dim H^{k⟨τ⟩}
    pub fixed_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasitriangularDiagnostics {
    pub dim: usize,
    pub prime_factors: Vec<u64>,
    /// dim H has at most two distinct prime factors.
    pub at_most_two_primes: bool,
    pub double_dim: usize,
    pub double_grouplikes: usize,
    pub central_double_grouplikes: usize,
    pub taus: Vec<TauDiagnostic>,
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_central(x: &HopfData, v: &[crate::scalar::Scalar]) -> bool {
    (0..x.dim()).all(|i| {
        let b = x.basis(i);
        x.mul(v, &b) == x.mul(&b, v)
    })
}

/// Requires an attached R-matrix.
pub fn quasitriangular_diagnostics(h: &HopfData) -> Result<QuasitriangularDiagnostics> {
    if h.r_matrix().is_none() {
        return Err(Error::NoRMatrix);
    }
    let d = h.dim();
    let (double, _) = drinfeld_double(h)?;
    let double_gl = grouplikes(&double)?;
    let central_double_grouplikes = double_gl.iter().filter(|g| is_central(&double, g)).count();
    let dual = h.dual_ref();
    let one = h.unit().to_vec();
    let mut taus = Vec::new();
    for tau in grouplikes(dual)? {
        let mut embedded = vec![crate::scalar::Scalar::zero(); d * d];
        for (a, x) in tau.iter().enumerate() {
            for (i, y) in one.iter().enumerate() {
                if !x.is_zero() && !y.is_zero() {
                    embedded[a * d + i] = x * y;
                }
            }
        }
        let fr = f_r(h, &tau, false)?;
        let frt = f_r(h, &tau, true)?;
        let mut powers = vec![dual.unit().to_vec()];
        loop {
            let next = dual.mul(powers.last().expect("nonempty"), &tau);
            if next == powers[0] {
                break;
            }
            powers.push(next);
        }
        let cyclic = Subspace::span(d, powers.iter());
        taus.push(TauDiagnostic {
            central_in_double: is_central(&double, &embedded),
            f_r_is_one: fr == one,
            f_r_transposed_is_one: frt == one,
            f_r_grouplike: h.comul(&fr) == h.tensor(&fr, &fr) && h.eps(&fr).is_one(),
            fixed_dim: invariants_of(h, &cyclic)?.dim(),
            f_r: fr,
            f_r_transposed: frt,
            tau,
        });
    }
    let prime_factors = distinct_prime_factors(d as u64);
    Ok(QuasitriangularDiagnostics {
        dim: d,
        at_most_two_primes: prime_factors.len() <= 2,
        prime_factors,
        double_dim: double.dim(),
        double_grouplikes: double_gl.len(),
        central_double_grouplikes,
        taus,
    })
}
