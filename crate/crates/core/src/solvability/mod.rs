//! Solvable series of left coideal subalgebras, commuting coideal integrals,
//! injectivity of H → H//N on a coideal, nilpotency, a series search, and the
//! quasitriangular diagnostics used for the p^a q^b instances.

mod quasitriangular;
mod nilpotency;
mod search;

pub use quasitriangular::{quasitriangular_diagnostics, QuasitriangularDiagnostics, TauDiagnostic};
pub use nilpotency::{
    ascending_central_series, check_nilpotent_criterion, nilpotent_implies_solvable_check, NilpotencyCriterion,
    NilpotencyReport,
};
pub use search::{find_solvable_series, SearchOutcome};

use serde::Serialize;

use crate::coideal::{generated_subalgebra, quotient, sub_hopf_algebra, CoidealContext};
use crate::error::{Error, Result};
use crate::hopf::{adjoint, HopfData};
use crate::linalg::{scale, Subspace, Vector};
use crate::scalar::Scalar;

/// The two conditions a step N_i ⊆ N_{i+1} of a solvable series must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// Λ_{N_i} is central in N_{i+1}.
    CentralIntegral,
    /// (a ad b)Λ_{N_i} = ε(a) bΛ_{N_i} for a, b ∈ N_{i+1}.
    AdjointTrivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub central_integral: bool,
    pub adjoint_trivial: bool,
    /// Echelon-basis indices in N_{i+1} of the first failing element or pair.
    pub witness: Option<Vec<usize>>,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.central_integral && self.adjoint_trivial
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Verdict {
    /// Every step passes and the chain runs from k to H.
    SolvableSeries,
    /// Every step passes but the chain does not start at k or end at H.
    ConditionsHold,
    FailsAt {
        step: usize,
        condition: Condition,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub dims: Vec<usize>,
    pub steps: Vec<StepReport>,
    /// Normality of each N_i in H; advisory only.
    pub normal: Vec<bool>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub chain: Vec<CoidealContext>,
}

impl SeriesReport {
    pub fn is_solvable_series(&self) -> bool {
        self.verdict == Verdict::SolvableSeries
    }

    pub fn conditions_hold(&self) -> bool {
        matches!(self.verdict, Verdict::SolvableSeries | Verdict::ConditionsHold)
    }

    pub fn summary(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        let verdict = match &self.verdict {
            Verdict::SolvableSeries => "solvable series".to_string(),
            Verdict::ConditionsHold => "conditions hold, endpoints are not k and H".to_string(),
            Verdict::FailsAt { step, condition } => format!("fails at step {step} ({condition:?})"),
        };
        format!("dims {}: {verdict}", dims.join(" ⊆ "))
    }
}

/// Checks the two step conditions for N ⊆ M.
pub fn check_step(h: &HopfData, n: &CoidealContext, m: &CoidealContext) -> StepReport {
    let lam = &n.big_lambda_n;
    let basis = m.n.basis();
    if let Some(k) = basis.iter().position(|b| h.mul(lam, b) != h.mul(b, lam)) {
        return StepReport { central_integral: false, adjoint_trivial: false, witness: Some(vec![k]) };
    }
    let b_lam: Vec<Vector> = basis.iter().map(|b| h.mul(b, lam)).collect();
    for (ia, a) in basis.iter().enumerate() {
        let eps = h.eps(a);
        for (ib, b) in basis.iter().enumerate() {
            let lhs = h.mul(&adjoint(h, a, b), lam);
            if lhs != scale(&eps, &b_lam[ib]) {
                return StepReport { central_integral: true, adjoint_trivial: false, witness: Some(vec![ia, ib]) };
            }
        }
    }
    StepReport { central_integral: true, adjoint_trivial: true, witness: None }
}

/// Checks each step of N_0 ⊆ … ⊆ N_t.
pub fn check_solvable_series(h: &HopfData, chain: &[CoidealContext]) -> Result<SeriesReport> {
    if chain.is_empty() {
        return Err(Error::ChainNotIncreasing(0));
    }
    for (i, w) in chain.windows(2).enumerate() {
        if !w[1].n.contains_subspace(&w[0].n)? {
            return Err(Error::ChainNotIncreasing(i));
        }
    }
    let steps: Vec<StepReport> = chain.windows(2).map(|w| check_step(h, &w[0], &w[1])).collect();
    let verdict = match steps.iter().position(|s| !s.passed()) {
        Some(step) => {
            let condition =
                if steps[step].central_integral { Condition::AdjointTrivial } else { Condition::CentralIntegral };
            Verdict::FailsAt { step, condition }
        }
        None if chain[0].dim() == 1 && chain[chain.len() - 1].dim() == h.dim() => Verdict::SolvableSeries,
        None => Verdict::ConditionsHold,
    };
    Ok(SeriesReport {
        dims: chain.iter().map(CoidealContext::dim).collect(),
        steps,
        normal: chain.iter().map(|c| c.is_normal).collect(),
        verdict,
        chain: chain.to_vec(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralCommutation {
    /// λ_{B_L}λ_{B_N}
    pub product_ln: Vector,
    /// λ_{B_N}λ_{B_L}
    pub product_nl: Vector,
    pub commute: bool,
    /// Dimension of the algebra B_L B_N generated by B_L ∪ B_N.
    pub generated_dim: usize,
    pub ln_is_integral: bool,
    pub nl_is_integral: bool,
}

impl IntegralCommutation {
    /// Commuting integrals must multiply to an integral of B_L B_N.
    pub fn consistent(&self) -> bool {
        !self.commute || self.ln_is_integral
    }
}

/// Whether p is a nonzero two-sided integral of the subalgebra `b` of X.
pub fn is_integral_of(x: &HopfData, b: &Subspace, p: &[Scalar]) -> bool {
    if !b.contains(p) || p.iter().all(Scalar::is_zero) {
        return false;
    }
    b.basis().iter().all(|y| {
        let e = x.eps(y);
        x.mul(p, y) == scale(&e, p) && x.mul(y, p) == scale(&e, p)
    })
}

/// Compares λ_{B_L}λ_{B_N} with λ_{B_N}λ_{B_L} and tests both against B_L B_N.
pub fn check_integral_commutation(h: &HopfData, l: &CoidealContext, n: &CoidealContext) -> IntegralCommutation {
    let dual = h.dual_ref();
    let product_ln = dual.mul(&l.lambda_b, &n.lambda_b);
    let product_nl = dual.mul(&n.lambda_b, &l.lambda_b);
    let generated = generated_subalgebra(dual, &[&l.b, &n.b]);
    IntegralCommutation {
        commute: product_ln == product_nl,
        generated_dim: generated.dim(),
        ln_is_integral: is_integral_of(dual, &generated, &product_ln),
        nl_is_integral: is_integral_of(dual, &generated, &product_nl),
        product_ln,
        product_nl,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    /// dim (L ∩ HN⁺), the kernel of π restricted to L.
    pub kernel_dim: usize,
    pub injective: bool,
    pub trivial_intersection: bool,
    pub integrals_commute: bool,
    /// dim HN⁺
    pub augmentation_ideal_dim: usize,
}

/// HN⁺, spanned by h(n − ε(n)1).
pub fn augmentation_ideal(h: &HopfData, n: &CoidealContext) -> Subspace {
    let d = h.dim();
    let mut gens = Vec::new();
    for x in n.n.basis() {
        let plus = crate::linalg::sub(x, &scale(&h.eps(x), h.unit()));
        for i in 0..d {
            gens.push(h.mul(&h.basis(i), &plus));
        }
    }
    Subspace::span(d, gens.iter())
}

/// Injectivity of π: H → H//N on L, from L ∩ HN⁺. Fails if the commuting,
/// trivially intersecting case is not injective.
pub fn check_projection_injectivity(h: &HopfData, n: &CoidealContext, l: &CoidealContext) -> Result<ProjectionReport> {
    if !n.is_normal {
        return Err(Error::NotNormal);
    }
    let ideal = augmentation_ideal(h, n);
    let q = quotient(h, n)?;
    if ideal.dim() + q.quotient.dim() != h.dim() {
        return Err(Error::AxiomFailure("dim HN⁺ + dim H//N ≠ dim H".into()));
    }
    let kernel_dim = l.n.intersect(&ideal)?.dim();
    let report = ProjectionReport {
        kernel_dim,
        injective: kernel_dim == 0,
        trivial_intersection: l.n.intersect(&n.n)?.dim() == 1,
        integrals_commute: check_integral_commutation(h, l, n).commute,
        augmentation_ideal_dim: ideal.dim(),
    };
    if report.trivial_intersection && report.integrals_commute && !report.injective {
        return Err(Error::AxiomFailure("π|_L has a kernel although L ∩ N = k and the integrals commute".into()));
    }
    Ok(report)
}

/// Lifts a solvable series of H//N through π to a series N ⊆ N_1 ⊆ … ⊆ H and checks it.
pub fn check_quotient_lifting(
    h: &HopfData,
    n: &CoidealContext,
    quotient_series: &[CoidealContext],
) -> Result<SeriesReport> {
    let q = quotient(h, n)?;
    let below = check_solvable_series(&q.quotient, quotient_series)?;
    if !below.is_solvable_series() {
        return Err(Error::AxiomFailure("the quotient chain is not a solvable series of H//N".into()));
    }
    let lifted = quotient_series.iter().map(|c| q.lift(h, c)).collect::<Result<Vec<_>>>()?;
    if lifted[0].n != n.n || lifted[lifted.len() - 1].dim() != h.dim() {
        return Err(Error::AxiomFailure("the lifted chain does not run from N to H".into()));
    }
    check_solvable_series(h, &lifted)
}

/// For a normal Hopf subalgebra K: a series of K (in K's own coordinates)
/// followed by the lift of a series of H//K, checked as one series of H.
pub fn check_extension_series(
    h: &HopfData,
    k: &CoidealContext,
    k_series: &[CoidealContext],
    quotient_series: &[CoidealContext],
) -> Result<SeriesReport> {
    let sub = sub_hopf_algebra(h, k)?;
    let inner = check_solvable_series(&sub.hopf, k_series)?;
    if !inner.is_solvable_series() {
        return Err(Error::AxiomFailure("the chain of K is not a solvable series of K".into()));
    }
    let upper = check_quotient_lifting(h, k, quotient_series)?;
    let mut chain = k_series
        .iter()
        .map(|c| CoidealContext::from_subspace(h, sub.embed_subspace(&c.n)))
        .collect::<Result<Vec<_>>>()?;
    chain.extend(upper.chain.into_iter().skip(1));
    check_solvable_series(h, &chain)
}
