//! Semi-decision search for a solvable series from k to H.

use std::collections::HashMap;

use serde::Serialize;

use super::{check_solvable_series, check_step, SeriesReport};
use crate::coideal::{
    coideal_closure, commutator_subalgebra, hopf_center, left_module_matrices, lker, sub_hopf_algebra, CoidealContext,
};
use crate::error::Result;
use crate::hopf::HopfData;
use crate::linalg::{Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum SearchOutcome {
    Found(SeriesReport),
    /// No series was found among the candidates; this is not a proof of non-solvability.
    Undecided {
        candidates: usize,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&SeriesReport> {
        match self {
            SearchOutcome::Found(r) => Some(r),
            SearchOutcome::Undecided { .. } => None,
        }
    }
}

fn push_unique(out: &mut Vec<CoidealContext>, c: CoidealContext) {
    if !out.iter().any(|o| o.n == c.n) {
        out.push(c);
    }
}

/// k, H, closures of the hints, left kernels of the modules Ht_j, the Hopf
/// center, the derived series and pairwise intersections, sorted by dimension.
pub fn candidate_coideals(h: &HopfData, hints: &[Vec<Vector>]) -> Result<Vec<CoidealContext>> {
    let d = h.dim();
    let mut out = Vec::new();
    push_unique(&mut out, CoidealContext::trivial(h)?);
    push_unique(&mut out, CoidealContext::whole(h)?);
    for gens in hints {
        push_unique(&mut out, coideal_closure(h, gens)?);
    }
    for t in &h.characters()?.primitive_idempotents {
        let products: Vec<Vector> = (0..d).map(|i| h.mul(&h.basis(i), t)).collect();
        let module = Subspace::span(d, products.iter());
        let kernel = lker(h, &left_module_matrices(h, &module))?;
        push_unique(&mut out, CoidealContext::from_subspace(h, kernel)?);
    }
    if let Ok(z) = hopf_center(h).and_then(|z| CoidealContext::from_subspace(h, z)) {
        push_unique(&mut out, z);
    }
    for c in derived_series(h) {
        push_unique(&mut out, c);
    }
    let base = out.len();
    for i in 0..base {
        for j in i + 1..base {
            let meet = out[i].intersect(h, &out[j])?;
            push_unique(&mut out, meet);
        }
    }
    out.sort_by_key(CoidealContext::dim);
    Ok(out)
}

/// H ⊇ H′ ⊇ H″ ⊇ …, continuing while each term is a Hopf subalgebra.
fn derived_series(h: &HopfData) -> Vec<CoidealContext> {
    let mut out = Vec::new();
    let Ok(mut current) = commutator_subalgebra(h) else { return out };
    out.push(current.clone());
    let sub_of = |ctx: &CoidealContext| -> Option<CoidealContext> {
        if !ctx.is_hopf_subalgebra || ctx.dim() <= 1 {
            return None;
        }
        let sub = sub_hopf_algebra(h, ctx).ok()?;
        let inner = commutator_subalgebra(&sub.hopf).ok()?;
        if inner.dim() == ctx.dim() {
            return None;
        }
        CoidealContext::from_subspace(h, sub.embed_subspace(&inner.n)).ok()
    };
    while let Some(next) = sub_of(&current) {
        out.push(next.clone());
        current = next;
    }
    out
}

struct Search<'a> {
    h: &'a HopfData,
    candidates: &'a [CoidealContext],
    steps: HashMap<(usize, usize), bool>,
    dead: Vec<bool>,
}

impl Search<'_> {
    fn step(&mut self, i: usize, j: usize) -> bool {
        if let Some(s) = self.steps.get(&(i, j)) {
            return *s;
        }
        let (a, b) = (&self.candidates[i], &self.candidates[j]);
        let ok = b.n.contains_subspace(&a.n).unwrap_or(false) && check_step(self.h, a, b).passed();
        self.steps.insert((i, j), ok);
        ok
    }

    fn extend(&mut self, i: usize) -> Option<Vec<usize>> {
        if self.candidates[i].dim() == self.h.dim() {
            return Some(vec![i]);
        }
        if self.dead[i] {
            return None;
        }
        for j in (0..self.candidates.len()).rev() {
            if self.candidates[j].dim() <= self.candidates[i].dim() || !self.step(i, j) {
                continue;
            }
            if let Some(mut rest) = self.extend(j) {
                rest.insert(0, i);
                return Some(rest);
            }
        }
        self.dead[i] = true;
        None
    }
}

/// Depth-first search over the candidate coideals, largest admissible step first.
pub fn find_solvable_series(h: &HopfData, hints: &[Vec<Vector>]) -> Result<SearchOutcome> {
    let candidates = candidate_coideals(h, hints)?;
    let start = candidates.iter().position(|c| c.dim() == 1).expect("k is a candidate");
    let mut search = Search { h, candidates: &candidates, steps: HashMap::new(), dead: vec![false; candidates.len()] };
    match search.extend(start) {
        Some(path) => {
            let chain: Vec<CoidealContext> = path.iter().map(|i| candidates[*i].clone()).collect();
            let report = check_solvable_series(h, &chain)?;
            debug_assert!(report.is_solvable_series());
            Ok(SearchOutcome::Found(report))
        }
        None => Ok(SearchOutcome::Undecided { candidates: candidates.len() }),
    }
}
