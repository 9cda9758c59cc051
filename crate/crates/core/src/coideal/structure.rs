//! Left kernels of modules, the Hopf center, the commutator subalgebra and
//! Hopf subalgebras as Hopf algebras in their own right.

use super::{invariants_of, CoidealContext};
use crate::error::{Error, Result};
use crate::hopf::{grouplikes, HopfData, Sparse, Sparse2};
use crate::linalg::{identity_matrix, is_zero_vector, kernel_of_columns, mat_mul, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// ρ(e_i) for the left module given by a left ideal V ⊆ H, in the echelon basis of V.
/// Each matrix is row-major with ρ·v acting on column coordinate vectors.
pub fn left_module_matrices(h: &HopfData, v: &Subspace) -> Vec<Matrix> {
    let m = v.dim();
    (0..h.dim())
        .map(|i| {
            let cols: Vec<Vector> =
                v.basis().iter().map(|b| v.coordinates(&h.mul(&h.basis(i), b)).expect("V is a left ideal")).collect();
            (0..m).map(|r| (0..m).map(|c| cols[c][r].clone()).collect()).collect()
        })
        .collect()
}

pub fn regular_representation(h: &HopfData) -> Vec<Matrix> {
    left_module_matrices(h, &Subspace::full(h.dim()))
}

fn check_representation(h: &HopfData, rho: &[Matrix]) -> Result<usize> {
    let d = h.dim();
    if rho.len() != d {
        return Err(Error::NotARepresentation("one matrix per basis element is required".into()));
    }
    let m = rho[0].len();
    if rho.iter().any(|a| a.len() != m || a.iter().any(|row| row.len() != m)) {
        return Err(Error::NotARepresentation("matrices must be square of equal size".into()));
    }
    let combine = |coeffs: &[Scalar]| -> Matrix {
        let mut out = vec![vec![Scalar::zero(); m]; m];
        for (c, a) in coeffs.iter().zip(rho) {
            if c.is_zero() {
                continue;
            }
            for (orow, arow) in out.iter_mut().zip(a) {
                crate::linalg::axpy(orow, c, arow);
            }
        }
        out
    };
    if combine(h.unit()) != identity_matrix(m) {
        return Err(Error::NotARepresentation("the unit does not act as the identity".into()));
    }
    for i in 0..d {
        for j in 0..d {
            let prod = h.mul(&h.basis(i), &h.basis(j));
            if mat_mul(&rho[i], &rho[j]) != combine(&prod) {
                return Err(Error::NotARepresentation(format!("ρ(e{i})ρ(e{j}) ≠ ρ(e{i}e{j})")));
            }
        }
    }
    Ok(m)
}

/// LKer_V = {h : Σ h_1 ⊗ h_2·v = h ⊗ v for all v ∈ V}.
pub fn lker(h: &HopfData, rho: &[Matrix]) -> Result<Subspace> {
    let m = check_representation(h, rho)?;
    let d = h.dim();
    let block = m * m;
    let columns: Vec<Vector> = (0..d)
        .map(|i| {
            let mut col = vec![Scalar::zero(); d * block];
            for (j, k, s) in &h.comult_entries()[i] {
                for r in 0..m {
                    for c in 0..m {
                        let x = &rho[*k][r][c];
                        if !x.is_zero() {
                            col[j * block + r * m + c] += &(s * x);
                        }
                    }
                }
            }
            for r in 0..m {
                col[i * block + r * m + r] -= &Scalar::one();
            }
            col
        })
        .collect();
    Ok(kernel_of_columns(d, d * block, &columns))
}

/// Largest Hopf subalgebra contained in the center, by refining Z(H) until
/// Δ(V) ⊆ V⊗V and S(V) ⊆ V.
pub fn hopf_center(h: &HopfData) -> Result<Subspace> {
    let d = h.dim();
    let mut v = h.center().clone();
    loop {
        let columns: Vec<Vector> = v
            .basis()
            .iter()
            .map(|b| {
                let delta = h.comul(b);
                let left = crate::hopf::map_tensor_legs(d, &delta, |x| v.residue(x), |x| x.to_vec());
                let right = crate::hopf::map_tensor_legs(d, &delta, |x| x.to_vec(), |x| v.residue(x));
                let anti = v.residue(&h.antipode(b));
                left.into_iter().chain(right).chain(anti).collect()
            })
            .collect();
        let ker = kernel_of_columns(v.dim(), 2 * d * d + d, &columns);
        let next: Vec<Vector> = ker.basis().iter().map(|c| v.from_coordinates(c)).collect();
        let next = Subspace::span(d, next.iter());
        if next == v {
            break;
        }
        v = next;
    }
    for x in v.basis() {
        for y in v.basis() {
            if !v.contains(&h.mul(x, y)) {
                return Err(Error::NotAnAlgebra("Hopf center is not closed under multiplication".into()));
            }
        }
    }
    Ok(v)
}

/// H′ = H^{kG(H*)}, checked to be normal with commutative quotient.
pub fn commutator_subalgebra(h: &HopfData) -> Result<CoidealContext> {
    let g = grouplikes(h.dual_ref())?;
    let t = Subspace::span(h.dim(), g.iter());
    let ctx = CoidealContext::from_subspace(h, invariants_of(h, &t)?)?;
    if !ctx.is_normal {
        return Err(Error::AxiomFailure("commutator subalgebra is not normal".into()));
    }
    if !super::quotient(h, &ctx)?.quotient.is_commutative() {
        return Err(Error::AxiomFailure("H//H′ is not commutative".into()));
    }
    Ok(ctx)
}

/// A Hopf subalgebra K ⊆ H presented on the echelon basis of K.
#[derive(Clone, Debug)]
pub struct SubHopfAlgebra {
    pub hopf: HopfData,
    pub inclusion: Subspace,
}

impl SubHopfAlgebra {
    /// Image in H of an element given in K-coordinates.
    pub fn embed(&self, x: &[Scalar]) -> Vector {
        self.inclusion.from_coordinates(x)
    }

    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        let images: Vec<Vector> = s.basis().iter().map(|x| self.embed(x)).collect();
        Subspace::span(self.inclusion.ambient_dim(), images.iter())
    }
}

pub fn sub_hopf_algebra(h: &HopfData, k: &CoidealContext) -> Result<SubHopfAlgebra> {
    if !k.is_hopf_subalgebra {
        return Err(Error::NotAnAlgebra("not a Hopf subalgebra".into()));
    }
    let d = h.dim();
    let s = &k.n;
    let basis = s.basis();
    let pivots = s.pivots();
    let coords = |v: &[Scalar]| s.coordinates(v).expect("closed");
    let nonzero = |v: Vector| -> Sparse { v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect() };
    let mut mult = Vec::with_capacity(basis.len() * basis.len());
    for x in basis {
        for y in basis {
            mult.push(nonzero(coords(&h.mul(x, y))));
        }
    }
    let comult: Vec<Sparse2> = basis
        .iter()
        .map(|x| {
            let delta = h.comul(x);
            let mut out = Vec::new();
            for (u, pu) in pivots.iter().enumerate() {
                for (v, pv) in pivots.iter().enumerate() {
                    let c = &delta[pu * d + pv];
                    if !c.is_zero() {
                        out.push((u, v, c.clone()));
                    }
                }
            }
            out
        })
        .collect();
    for (x, terms) in basis.iter().zip(&comult) {
        let mut rebuilt = vec![Scalar::zero(); d * d];
        for (u, v, c) in terms {
            let t = h.tensor(&basis[*u], &basis[*v]);
            crate::linalg::axpy(&mut rebuilt, c, &t);
        }
        if !is_zero_vector(&crate::linalg::sub(&rebuilt, &h.comul(x))) {
            return Err(Error::NotAnAlgebra("Δ(K) is not contained in K⊗K".into()));
        }
    }
    let antipode = basis.iter().map(|x| nonzero(coords(&h.antipode(x)))).collect();
    let counit = basis.iter().map(|x| h.eps(x)).collect();
    let hopf = HopfData::new(h.order(), mult, comult, coords(h.unit()), counit, antipode)?;
    Ok(SubHopfAlgebra { hopf, inclusion: s.clone() })
}
