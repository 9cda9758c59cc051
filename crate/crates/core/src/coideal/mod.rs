//! Left coideal subalgebras N ⊆ H, the invariants correspondence N ↔ B = (H*)^N,
//! integrals Λ_N and λ_B, normality, quotients H//N and distinguished coideals.

mod quotient;
mod structure;

pub use quotient::{quotient, QuotientData};
pub use structure::{
    commutator_subalgebra, hopf_center, left_module_matrices, lker, regular_representation, sub_hopf_algebra,
    SubHopfAlgebra,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{adjoint, left_hit, HopfData};
use crate::linalg::{is_zero_vector, kernel_of_columns, scale, sub, Echelon, Subspace, Vector};
use crate::scalar::Scalar;

/// A verified left coideal subalgebra together with its integral data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoidealContext {
    pub generators: Vec<Vector>,
    pub n: Subspace,
    #[serde(rename = "Lambda_N")]
    pub big_lambda_n: Vector,
    /// (H*)^N as a subspace of H*.
    pub b: Subspace,
    pub lambda_b: Vector,
    pub is_normal: bool,
    pub is_hopf_subalgebra: bool,
}

impl CoidealContext {
    pub fn dim(&self) -> usize {
        self.n.dim()
    }

    /// Builds the context of a subspace already known to be a left coideal subalgebra.
    pub fn from_subspace(h: &HopfData, n: Subspace) -> Result<CoidealContext> {
        check_left_coideal_subalgebra(h, &n)?;
        let big_lambda_n = coideal_integral(h, &n)?;
        let dual = h.dual_ref();
        let b = invariants_of(dual, &n)?;
        let lambda_b = left_hit(dual, &big_lambda_n, &h.integrals()?.lambda);
        let mut ctx = CoidealContext {
            generators: Vec::new(),
            n,
            big_lambda_n,
            b,
            lambda_b,
            is_normal: false,
            is_hopf_subalgebra: false,
        };
        let (by_adjoint, by_integral) = normality_tests(h, &ctx);
        if by_adjoint != by_integral {
            return Err(Error::AxiomFailure("normality tests disagree".into()));
        }
        ctx.is_normal = by_adjoint;
        let (by_cocommutativity, direct) = hopf_subalgebra_tests(h, &ctx);
        if by_cocommutativity != direct {
            return Err(Error::AxiomFailure("Hopf subalgebra tests disagree".into()));
        }
        ctx.is_hopf_subalgebra = direct;
        Ok(ctx)
    }

    /// The trivial coideal subalgebra k·1.
    pub fn trivial(h: &HopfData) -> Result<CoidealContext> {
        CoidealContext::from_subspace(h, Subspace::span(h.dim(), [h.unit().to_vec()].iter()))
    }

    /// H itself.
    pub fn whole(h: &HopfData) -> Result<CoidealContext> {
        CoidealContext::from_subspace(h, Subspace::full(h.dim()))
    }

    /// N ∩ L, again a left coideal subalgebra.
    pub fn intersect(&self, h: &HopfData, other: &CoidealContext) -> Result<CoidealContext> {
        CoidealContext::from_subspace(h, self.n.intersect(&other.n)?)
    }
}

/// Right tensor legs (e^j ⊗ id)Δ(v), one per j.
fn right_legs(h: &HopfData, v: &[Scalar]) -> Vec<Vector> {
    let d = h.dim();
    let delta = h.comul(v);
    (0..d).map(|j| delta[j * d..(j + 1) * d].to_vec()).filter(|w| !is_zero_vector(w)).collect()
}

/// Left tensor legs (id ⊗ e^k)Δ(v), one per k.
fn left_legs(h: &HopfData, v: &[Scalar]) -> Vec<Vector> {
    let d = h.dim();
    let delta = h.comul(v);
    (0..d)
        .map(|k| (0..d).map(|j| delta[j * d + k].clone()).collect::<Vector>())
        .filter(|w| !is_zero_vector(w))
        .collect()
}

fn check_left_coideal_subalgebra(h: &HopfData, n: &Subspace) -> Result<()> {
    if n.ambient_dim() != h.dim() {
        return Err(Error::AmbientMismatch { left: n.ambient_dim(), right: h.dim() });
    }
    if !n.contains(h.unit()) {
        return Err(Error::NotAnAlgebra("does not contain 1".into()));
    }
    for x in n.basis() {
        for y in n.basis() {
            if !n.contains(&h.mul(x, y)) {
                return Err(Error::NotAnAlgebra("not closed under multiplication".into()));
            }
        }
        if !right_legs(h, x).iter().all(|w| n.contains(w)) {
            return Err(Error::NotAnAlgebra("not a left coideal".into()));
        }
    }
    Ok(())
}

/// Idempotent two-sided integral of the subalgebra N.
fn coideal_integral(h: &HopfData, n: &Subspace) -> Result<Vector> {
    let m = n.dim();
    let d = h.dim();
    let columns: Vec<Vector> = n
        .basis()
        .iter()
        .map(|bl| n.basis().iter().flat_map(|ni| sub(&h.mul(ni, bl), &scale(&h.eps(ni), bl))).collect())
        .collect();
    let ker = kernel_of_columns(m, m * d, &columns);
    let coeffs = match ker.dim() {
        0 => return Err(Error::NoIntegral),
        1 => ker.basis()[0].clone(),
        k => return Err(Error::NotUnique(k)),
    };
    let v = n.from_coordinates(&coeffs);
    let e = h.eps(&v);
    if e.is_zero() {
        return Err(Error::NoIntegral);
    }
    let lam = scale(&e.inv()?, &v);
    for x in n.basis() {
        if h.mul(&lam, x) != scale(&h.eps(x), &lam) {
            return Err(Error::NotSemisimple("coideal integral is not two-sided".into()));
        }
    }
    if h.mul(&lam, &lam) != lam {
        return Err(Error::NotSemisimple("coideal integral is not idempotent".into()));
    }
    Ok(lam)
}

/// Smallest left coideal subalgebra containing 1 and the generators.
pub fn coideal_closure(h: &HopfData, generators: &[Vector]) -> Result<CoidealContext> {
    let d = h.dim();
    let mut e = Echelon::new(d);
    e.insert(h.unit());
    for g in generators {
        if g.len() != d {
            return Err(Error::AmbientMismatch { left: g.len(), right: d });
        }
        e.insert(g);
    }
    let mut n = e.clone().into_subspace();
    let mut stable = false;
    for _ in 0..=d {
        let before = n.dim();
        let basis = n.basis().to_vec();
        for x in &basis {
            for y in &basis {
                e.insert(&h.mul(x, y));
            }
        }
        for x in &basis {
            for w in right_legs(h, x) {
                e.insert(&w);
            }
        }
        n = e.clone().into_subspace();
        if n.dim() == before {
            stable = true;
            break;
        }
    }
    if !stable {
        return Err(Error::NotAnAlgebra("closure did not stabilize".into()));
    }
    let mut ctx = CoidealContext::from_subspace(h, n)?;
    ctx.generators = generators.to_vec();
    Ok(ctx)
}

/// X^T = {x ∈ X : b ⇀ x = ⟨b,1⟩x for all b ∈ T}, for a subalgebra T of X*.
pub fn invariants_of(x: &HopfData, t: &Subspace) -> Result<Subspace> {
    let d = x.dim();
    let dual = x.dual_ref();
    if t.ambient_dim() != d {
        return Err(Error::AmbientMismatch { left: t.ambient_dim(), right: d });
    }
    if !t.contains(dual.unit()) {
        return Err(Error::NotAnAlgebra("does not contain the unit".into()));
    }
    for a in t.basis() {
        for b in t.basis() {
            if !t.contains(&dual.mul(a, b)) {
                return Err(Error::NotAnAlgebra("not closed under multiplication".into()));
            }
        }
    }
    let columns: Vec<Vector> = (0..d)
        .map(|j| {
            let ej = x.basis(j);
            t.basis().iter().flat_map(|b| sub(&left_hit(x, b, &ej), &scale(&dual.eps(b), &ej))).collect()
        })
        .collect();
    Ok(kernel_of_columns(d, d * t.dim(), &columns))
}

/// Unital subalgebra of X generated by the given subspaces.
pub fn generated_subalgebra(x: &HopfData, spaces: &[&Subspace]) -> Subspace {
    let d = x.dim();
    let mut e = Echelon::new(d);
    e.insert(x.unit());
    for s in spaces {
        for v in s.basis() {
            e.insert(v);
        }
    }
    loop {
        let current = e.clone().into_subspace();
        for a in current.basis() {
            for b in current.basis() {
                e.insert(&x.mul(a, b));
            }
        }
        if e.rank() == current.dim() {
            return current;
        }
    }
}

/// H^{(H*)^N} = N.
pub fn double_invariants_roundtrip(h: &HopfData, ctx: &CoidealContext) -> Result<bool> {
    Ok(invariants_of(h, &ctx.b)? == ctx.n)
}

/// (stable under the adjoint action, Λ_N central in H).
pub fn normality_tests(h: &HopfData, ctx: &CoidealContext) -> (bool, bool) {
    let d = h.dim();
    let by_adjoint = (0..d).all(|i| ctx.n.basis().iter().all(|x| ctx.n.contains(&adjoint(h, &h.basis(i), x))));
    let lam = &ctx.big_lambda_n;
    let by_integral = (0..d).all(|i| h.mul(lam, &h.basis(i)) == h.mul(&h.basis(i), lam));
    (by_adjoint, by_integral)
}

pub fn is_normal(h: &HopfData, ctx: &CoidealContext) -> bool {
    let (a, b) = normality_tests(h, ctx);
    debug_assert_eq!(a, b);
    a
}

/// (Δ(Λ_N) cocommutative, Δ(N) ⊆ N⊗N and S(N) ⊆ N).
pub fn hopf_subalgebra_tests(h: &HopfData, ctx: &CoidealContext) -> (bool, bool) {
    let delta = h.comul(&ctx.big_lambda_n);
    let by_cocommutativity = h.flip(&delta) == delta;
    let direct = ctx
        .n
        .basis()
        .iter()
        .all(|x| left_legs(h, x).iter().all(|w| ctx.n.contains(w)) && ctx.n.contains(&h.antipode(x)));
    (by_cocommutativity, direct)
}

pub fn is_hopf_subalgebra(h: &HopfData, ctx: &CoidealContext) -> bool {
    let (a, b) = hopf_subalgebra_tests(h, ctx);
    debug_assert_eq!(a, b);
    b
}

/// ⟨p, 1⟩ for p ∈ H*.
pub fn pairing_with_one(h: &HopfData, p: &[Scalar]) -> Scalar {
    h.pair(p, h.unit())
}
