//! Ascending central series and the central-integral criterion for nilpotency.

use serde::Serialize;

use super::{check_solvable_series, SeriesReport};
use crate::coideal::{hopf_center, quotient, CoidealContext};
use crate::error::{Error, Result};
use crate::hopf::HopfData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyReport {
    /// dim Z_0 = 1, dim Z_1, … up to stabilization or H.
    pub dims: Vec<usize>,
    pub stabilized: bool,
    pub is_nilpotent: bool,
    #[serde(skip)]
    pub chain: Vec<CoidealContext>,
}

/// k = Z_0 ⊆ Z_1 ⊆ … where Z_1 is the Hopf center and Z_{i+1} is the preimage
/// of the Hopf center of H//Z_i.
pub fn ascending_central_series(h: &HopfData) -> Result<NilpotencyReport> {
    let mut chain = vec![CoidealContext::trivial(h)?];
    loop {
        let current = chain.last().expect("nonempty");
        if current.dim() == h.dim() {
            break;
        }
        let q = quotient(h, current)?;
        let center = CoidealContext::from_subspace(&q.quotient, hopf_center(&q.quotient)?)?;
        let next = q.lift(h, &center)?;
        if next.n == current.n {
            break;
        }
        if !next.is_normal {
            return Err(Error::AxiomFailure("a term of the ascending central series is not normal".into()));
        }
        chain.push(next);
    }
    let top = chain.last().expect("nonempty").dim();
    Ok(NilpotencyReport {
        dims: chain.iter().map(CoidealContext::dim).collect(),
        stabilized: top != h.dim(),
        is_nilpotent: top == h.dim(),
        chain,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyCriterion {
    /// Whether N_{i+1}Λ_{N_i} is central in HΛ_{N_i}, per step.
    pub steps: Vec<bool>,
    pub runs_from_k_to_h: bool,
}

impl NilpotencyCriterion {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|s| *s)
    }

    /// The chain certifies that H is nilpotent.
    pub fn certifies_nilpotent(&self) -> bool {
        self.holds() && self.runs_from_k_to_h
    }
}

/// For normal N_0 ⊆ … ⊆ N_t checks nΛ_i·hΛ_i = hΛ_i·nΛ_i for n ∈ N_{i+1} and
/// basis h of H, with Λ_i = Λ_{N_i}.
pub fn check_nilpotent_criterion(h: &HopfData, chain: &[CoidealContext]) -> Result<NilpotencyCriterion> {
    if chain.is_empty() {
        return Err(Error::ChainNotIncreasing(0));
    }
    if chain.iter().any(|c| !c.is_normal) {
        return Err(Error::NotNormal);
    }
    for (i, w) in chain.windows(2).enumerate() {
        if !w[1].n.contains_subspace(&w[0].n)? {
            return Err(Error::ChainNotIncreasing(i));
        }
    }
    let d = h.dim();
    let steps = chain
        .windows(2)
        .map(|w| {
            let lam = &w[0].big_lambda_n;
            let h_lam: Vec<_> = (0..d).map(|j| h.mul(&h.basis(j), lam)).collect();
            w[1].n.basis().iter().all(|n| {
                let n_lam = h.mul(n, lam);
                h_lam.iter().all(|x| h.mul(&n_lam, x) == h.mul(x, &n_lam))
            })
        })
        .collect();
    Ok(NilpotencyCriterion { steps, runs_from_k_to_h: chain[0].dim() == 1 && chain[chain.len() - 1].dim() == d })
}

/// Runs the solvable-series check on a chain certified by the nilpotency criterion.
pub fn nilpotent_implies_solvable_check(h: &HopfData, chain: &[CoidealContext]) -> Result<SeriesReport> {
    if !check_nilpotent_criterion(h, chain)?.certifies_nilpotent() {
        return Err(Error::AxiomFailure("the chain does not certify nilpotency".into()));
    }
    let report = check_solvable_series(h, chain)?;
    if !report.is_solvable_series() {
        return Err(Error::AxiomFailure("a nilpotency chain failed the solvable-series check".into()));
    }
    Ok(report)
}
