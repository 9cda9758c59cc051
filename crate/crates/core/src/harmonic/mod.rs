//! Harmonic analysis on a left coideal subalgebra N ⊆ H: the embedding
//! γ: N* → H*, the ⋆ action of H* on N*, the Frobenius map F_N with its form
//! (·|·)_N, restriction and induction of characters, and reciprocity.
//!
//! Functionals on N are coordinate vectors on the echelon basis n_0, …, n_{m-1}
//! of N, so p ∈ N* is stored as (p(n_0), …, p(n_{m-1})).

use serde::Serialize;

use crate::coideal::CoidealContext;
use crate::error::{Error, Result};
use crate::hopf::{bilinear_form_h, left_hit, right_hit, trace_character, HopfData};
use crate::linalg::{
    axpy, combine, dot, is_zero_vector, kernel_of_columns, scale, unit_vector, wedderburn, zero_vector, Algebra,
    AlgebraPresentation, Matrix, Subspace, Vector,
};
use crate::scalar::Scalar;

/// Irreducible characters of N and their idempotents, with T_0 = Λ_N and φ_0 = ε|_N.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoidealCharacterData {
    /// Central primitive idempotents T_j of N, as elements of H.
    pub central_idempotents: Vec<Vector>,
    /// φ_j in N-coordinates.
    pub characters: Vec<Vector>,
    pub degrees: Vec<usize>,
    /// A primitive idempotent t_j ∈ N with T_j t_j = t_j, as an element of H.
    pub primitive_idempotents: Vec<Vector>,
}

impl CoidealCharacterData {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Restriction of a functional on H to N together with its expansion in Irr(N).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Restriction {
    pub values: Vector,
    /// ⟨χ, t_j⟩ for each j.
    pub multiplicities: Vec<u64>,
}

/// Both induction algorithms, already checked to agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Induction {
    /// Λ coad γ(φ).
    pub coadjoint: Vector,
    /// Σ_j α_j λ(·(Λ ad t_j)) with α_j = ⟨φ, T_j⟩ / deg_j.
    pub trace: Vector,
}

/// M[i][j] = ⟨χ_i, t_j⟩ = m(φ_j, χ_i|_N) = m(χ_i, φ_j^↑).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocityTable {
    pub multiplicities: Vec<Vec<u64>>,
    pub h_degrees: Vec<usize>,
    pub n_degrees: Vec<usize>,
}

impl ReciprocityTable {
    /// Aligned plain-text rendering, one row per irreducible character of H.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["".to_string(), "deg".to_string()];
        header.extend(self.n_degrees.iter().enumerate().map(|(j, d)| format!("phi{j}({d})")));
        rows.push(header);
        for (i, row) in self.multiplicities.iter().enumerate() {
            let mut r = vec![format!("chi{i}"), self.h_degrees[i].to_string()];
            r.extend(row.iter().map(u64::to_string));
            rows.push(r);
        }
        let widths: Vec<usize> =
            (0..rows[0].len()).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for r in rows {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Three independently computed subspaces that are expected to coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceTriple {
    pub first: Subspace,
    pub second: Subspace,
    pub third: Subspace,
}

impl SubspaceTriple {
    pub fn agree(&self) -> bool {
        self.first == self.second && self.second == self.third
    }

    /// The common subspace, or an error naming the construction.
    pub fn common(self, what: &str) -> Result<Subspace> {
        if self.agree() {
            Ok(self.first)
        } else {
            Err(Error::AxiomFailure(format!("the three descriptions of {what} differ")))
        }
    }
}

/// All harmonic-analysis maps for one pair N ⊆ H, with cached character data.
#[derive(Clone, Debug)]
pub struct CoidealAnalysis<'a> {
    h: &'a HopfData,
    ctx: &'a CoidealContext,
    presentation: AlgebraPresentation,
    chars: CoidealCharacterData,
    /// ⟨λ_B, 1⟩
    scale_b: Scalar,
    /// Column k holds Λ ad e_k.
    big_lambda_ad: Matrix,
}

impl<'a> CoidealAnalysis<'a> {
    pub fn new(h: &'a HopfData, ctx: &'a CoidealContext) -> Result<CoidealAnalysis<'a>> {
        if ctx.n.ambient_dim() != h.dim() {
            return Err(Error::AmbientMismatch { left: ctx.n.ambient_dim(), right: h.dim() });
        }
        let presentation = AlgebraPresentation::of_subalgebra(h, &ctx.n)?;
        let chars = coideal_characters_of(ctx, &presentation)?;
        let scale_b = h.pair(&ctx.lambda_b, h.unit());
        if scale_b.is_zero() {
            return Err(Error::NotSemisimple("⟨λ_B, 1⟩ vanishes".into()));
        }
        let big = &h.integrals()?.big_lambda;
        let big_lambda_ad = crate::hopf::adjoint_matrix(h, big);
        Ok(CoidealAnalysis { h, ctx, presentation, chars, scale_b, big_lambda_ad })
    }

    pub fn hopf(&self) -> &HopfData {
        self.h
    }

    pub fn context(&self) -> &CoidealContext {
        self.ctx
    }

    pub fn characters(&self) -> &CoidealCharacterData {
        &self.chars
    }

    /// ⟨λ_B, 1⟩, which equals dim B.
    pub fn lambda_b_at_one(&self) -> &Scalar {
        &self.scale_b
    }

    fn m(&self) -> usize {
        self.ctx.n.dim()
    }

    fn n_coords(&self, x: &[Scalar]) -> Result<Vector> {
        self.ctx.n.coordinates(x).ok_or_else(|| Error::NotAnAlgebra("element does not lie in N".into()))
    }

    /// x|_N for x ∈ H*.
    pub fn restrict_functional(&self, x: &[Scalar]) -> Vector {
        self.ctx.n.basis().iter().map(|n| self.h.pair(x, n)).collect()
    }

    /// Some x ∈ H* with x|_N = p, supported on the pivot coordinates of N.
    pub fn extend_functional(&self, p: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.h.dim());
        for (c, piv) in p.iter().zip(self.ctx.n.pivots()) {
            out[*piv] = c.clone();
        }
        out
    }

    /// γ*(h) = λ_B ⇀ h, an element of N.
    pub fn gamma_star(&self, x: &[Scalar]) -> Vector {
        left_hit(self.h, &self.ctx.lambda_b, x)
    }

    /// ⟨γ(p), h⟩ = ⟨p, λ_B ⇀ h⟩.
    pub fn gamma(&self, p: &[Scalar]) -> Result<Vector> {
        (0..self.h.dim()).map(|i| Ok(dot(p, &self.n_coords(&self.gamma_star(&self.h.basis(i)))?))).collect()
    }

    /// Matrix of γ with column k = γ(n^k), stored as rows.
    pub fn gamma_matrix(&self) -> Result<Matrix> {
        (0..self.m()).map(|k| self.gamma(&unit_vector(self.m(), k))).collect()
    }

    /// ⟨x ⋆ p, n⟩ = ⟨p, n ↼ x⟩ with n ↼ x = Σ x(n_1) n_2.
    pub fn star_action(&self, x: &[Scalar], p: &[Scalar]) -> Result<Vector> {
        self.ctx.n.basis().iter().map(|n| Ok(dot(p, &self.n_coords(&right_hit(self.h, n, x))?))).collect()
    }

    /// ⟨n ⇀ p, n'⟩ = p(n'n) for n ∈ N and p ∈ N*.
    pub fn hit_on_n_dual(&self, n: &[Scalar], p: &[Scalar]) -> Result<Vector> {
        let c = self.n_coords(n)?;
        Ok((0..self.m()).map(|k| dot(p, &self.presentation.mul(&unit_vector(self.m(), k), &c))).collect())
    }

    /// Im γ, H*λ_B and {x : s(x) ⇀ H ⊆ N}.
    pub fn image_of_gamma_parts(&self) -> Result<SubspaceTriple> {
        let d = self.h.dim();
        let dual = self.h.dual_ref();
        let first = Subspace::span(d, self.gamma_matrix()?.iter());
        let products: Vec<Vector> = (0..d).map(|i| dual.mul(&dual.basis(i), &self.ctx.lambda_b)).collect();
        let second = Subspace::span(d, products.iter());
        let third = self.hit_constraint_space();
        Ok(SubspaceTriple { first, second, third })
    }

    /// Im γ, after checking the three descriptions agree and dim Im γ = dim N.
    pub fn image_of_gamma(&self) -> Result<Subspace> {
        let image = self.image_of_gamma_parts()?.common("Im γ")?;
        if image.dim() != self.m() {
            return Err(Error::AxiomFailure("γ is not injective".into()));
        }
        Ok(image)
    }

    /// {x ∈ H* : s(x) ⇀ e_i ∈ N for every i}.
    fn hit_constraint_space(&self) -> Subspace {
        let d = self.h.dim();
        let dual = self.h.dual_ref();
        let columns: Vec<Vector> = (0..d)
            .map(|j| {
                let sx = dual.antipode(&dual.basis(j));
                (0..d).flat_map(|i| self.ctx.n.residue(&left_hit(self.h, &sx, &self.h.basis(i)))).collect()
            })
            .collect();
        kernel_of_columns(d, d * d, &columns)
    }

    /// F_N(n) = (1/⟨λ_B,1⟩)(n ⇀ λ)|_N.
    pub fn frobenius(&self, n: &[Scalar]) -> Result<Vector> {
        self.n_coords(n)?;
        let dual = self.h.dual_ref();
        let lambda = &self.h.integrals()?.lambda;
        let hit = left_hit(dual, n, lambda);
        Ok(scale(&self.scale_b.inv()?, &self.restrict_functional(&hit)))
    }

    /// F_N⁻¹(p) = (1/⟨λ_B,1⟩) S(γ(p) ⇀ Λ_N), an element of N.
    pub fn frobenius_inverse(&self, p: &[Scalar]) -> Result<Vector> {
        let hit = left_hit(self.h, &self.gamma(p)?, &self.ctx.big_lambda_n);
        let out = scale(&self.scale_b.inv()?, &self.h.antipode(&hit));
        self.n_coords(&out)?;
        Ok(out)
    }

    /// Matrix of F_N in the bases (n_k) and (n^k); row r is the r-th coordinate.
    pub fn frobenius_matrix(&self) -> Result<Matrix> {
        let cols = self.ctx.n.basis().iter().map(|n| self.frobenius(n)).collect::<Result<Vec<_>>>()?;
        Ok(crate::linalg::transpose(&cols))
    }

    /// Matrix of F_N⁻¹ in N-coordinates.
    pub fn frobenius_inverse_matrix(&self) -> Result<Matrix> {
        let cols = (0..self.m())
            .map(|k| self.n_coords(&self.frobenius_inverse(&unit_vector(self.m(), k))?))
            .collect::<Result<Vec<_>>>()?;
        Ok(crate::linalg::transpose(&cols))
    }

    /// (p|q)_N = ⟨q, F_N⁻¹(p)⟩.
    pub fn form(&self, p: &[Scalar], q: &[Scalar]) -> Result<Scalar> {
        Ok(dot(q, &self.n_coords(&self.frobenius_inverse(p)?)?))
    }

    /// The same form written with ⋆: (1/⟨λ_B,1⟩)⟨sγ(p) ⋆ q, Λ_N⟩.
    pub fn form_via_star(&self, p: &[Scalar], q: &[Scalar]) -> Result<Scalar> {
        let dual = self.h.dual_ref();
        let sg = dual.antipode(&self.gamma(p)?);
        let acted = self.star_action(&sg, q)?;
        let value = dot(&acted, &self.n_coords(&self.ctx.big_lambda_n)?);
        value.try_div(&self.scale_b)
    }

    /// ⟨q·s(p), Λ_N⟩ in N*, meaningful when N is a Hopf subalgebra.
    pub fn hopf_subalgebra_form(&self, p: &[Scalar], q: &[Scalar]) -> Result<Scalar> {
        if !self.ctx.is_hopf_subalgebra {
            return Err(Error::NotAnAlgebra("not a Hopf subalgebra".into()));
        }
        let dual = self.h.dual_ref();
        let prod = dual.mul(&self.extend_functional(q), &dual.antipode(&self.extend_functional(p)));
        Ok(self.h.pair(&prod, &self.ctx.big_lambda_n))
    }

    /// Gram matrix of (·|·)_N on the given functionals.
    pub fn gram(&self, functionals: &[Vector]) -> Result<Matrix> {
        functionals.iter().map(|p| functionals.iter().map(|q| self.form(p, q)).collect()).collect()
    }

    /// χ|_N with multiplicities ⟨χ, t_j⟩, which must be non-negative integers
    /// and reproduce χ|_N as Σ_j ⟨χ, t_j⟩ φ_j.
    pub fn restrict(&self, chi: &[Scalar]) -> Result<Restriction> {
        let values = self.restrict_functional(chi);
        let mut multiplicities = Vec::with_capacity(self.chars.len());
        let mut rebuilt = zero_vector(self.m());
        for (t, phi) in self.chars.primitive_idempotents.iter().zip(&self.chars.characters) {
            let c = self.h.pair(chi, t);
            multiplicities.push(non_negative_integer(&c)?);
            axpy(&mut rebuilt, &c, phi);
        }
        if rebuilt != values {
            return Err(Error::NonIntegerMultiplicity("χ|_N is not Σ ⟨χ,t_j⟩φ_j".into()));
        }
        Ok(Restriction { values, multiplicities })
    }

    /// Coefficients α_j with φ = Σ α_j φ_j, given by α_j = ⟨φ, T_j⟩ / deg_j.
    pub fn irreducible_coefficients(&self, phi: &[Scalar]) -> Result<Vector> {
        let alpha: Vector = self
            .chars
            .central_idempotents
            .iter()
            .zip(&self.chars.degrees)
            .map(|(t, deg)| Ok(dot(phi, &self.n_coords(t)?) * Scalar::ratio(1, *deg as i64)))
            .collect::<Result<_>>()?;
        if combine(self.m(), &alpha, &self.chars.characters) != phi {
            return Err(Error::Inconsistent);
        }
        Ok(alpha)
    }

    /// Λ coad γ(φ).
    pub fn induce_by_coadjoint(&self, phi: &[Scalar]) -> Result<Vector> {
        let g = self.gamma(phi)?;
        Ok(self.big_lambda_ad.iter().map(|col| dot(&g, col)).collect())
    }

    /// ⟨φ_j^↑, h⟩ = λ(h·(Λ ad t_j)).
    pub fn induce_irreducible_by_trace(&self, j: usize) -> Result<Vector> {
        let t = &self.chars.primitive_idempotents[j];
        let ad_t = combine(self.h.dim(), t, &self.big_lambda_ad);
        let lambda = &self.h.integrals()?.lambda;
        Ok((0..self.h.dim()).map(|i| self.h.pair(lambda, &self.h.mul(&self.h.basis(i), &ad_t))).collect())
    }

    /// Trace-formula induction extended linearly from Irr(N).
    pub fn induce_by_trace(&self, phi: &[Scalar]) -> Result<Vector> {
        let alpha = self.irreducible_coefficients(phi)?;
        let mut out = zero_vector(self.h.dim());
        for (j, a) in alpha.iter().enumerate() {
            if !a.is_zero() {
                axpy(&mut out, a, &self.induce_irreducible_by_trace(j)?);
            }
        }
        Ok(out)
    }

    /// φ^↑H for φ ∈ R(N), by both algorithms; fails unless they agree, the
    /// result lies in R(H) and ⟨φ^↑,1⟩ = ⟨λ_B,1⟩⟨φ,1⟩.
    pub fn induce(&self, phi: &[Scalar]) -> Result<Induction> {
        let coadjoint = self.induce_by_coadjoint(phi)?;
        let trace = self.induce_by_trace(phi)?;
        if coadjoint != trace {
            return Err(Error::AxiomFailure("the two induction algorithms disagree".into()));
        }
        let table = self.h.characters()?;
        if !Subspace::span(self.h.dim(), table.characters.iter()).contains(&coadjoint) {
            return Err(Error::AxiomFailure("induced functional is not a character combination".into()));
        }
        let one_n = self.n_coords(self.h.unit())?;
        if self.h.pair(&coadjoint, self.h.unit()) != &self.scale_b * &dot(phi, &one_n) {
            return Err(Error::AxiomFailure("degree of the induced character is wrong".into()));
        }
        Ok(Induction { coadjoint, trace })
    }

    /// (χ_i|_N | φ_j)_N, (χ_i | φ_j^↑)_H and ⟨χ_i, t_j⟩.
    pub fn reciprocity_matrices(&self) -> Result<[Matrix; 3]> {
        let table = self.h.characters()?;
        let induced: Vec<Vector> =
            self.chars.characters.iter().map(|phi| Ok(self.induce(phi)?.coadjoint)).collect::<Result<_>>()?;
        let mut by_restriction = Matrix::new();
        let mut by_induction = Matrix::new();
        let mut direct = Matrix::new();
        for chi in &table.characters {
            let res = self.restrict_functional(chi);
            by_restriction.push(self.chars.characters.iter().map(|phi| self.form(&res, phi)).collect::<Result<_>>()?);
            by_induction.push(induced.iter().map(|up| bilinear_form_h(self.h, chi, up)).collect::<Result<_>>()?);
            direct.push(self.chars.primitive_idempotents.iter().map(|t| self.h.pair(chi, t)).collect());
        }
        Ok([by_restriction, by_induction, direct])
    }

    /// The reciprocity table, after checking the three matrices coincide and are
    /// non-negative integers.
    pub fn reciprocity(&self) -> Result<ReciprocityTable> {
        let [a, b, c] = self.reciprocity_matrices()?;
        if a != b || b != c {
            return Err(Error::AxiomFailure("reciprocity matrices differ".into()));
        }
        let multiplicities = c
            .iter()
            .map(|row| row.iter().map(non_negative_integer).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ReciprocityTable {
            multiplicities,
            h_degrees: self.h.characters()?.degrees.clone(),
            n_degrees: self.chars.degrees.clone(),
        })
    }

    /// R(N)^↑H, R(H)λ_B and {x ∈ R(H) : s(x) ⇀ H ⊆ N}, for normal N.
    pub fn induced_image_parts(&self) -> Result<SubspaceTriple> {
        if !self.ctx.is_normal {
            return Err(Error::NotNormal);
        }
        let d = self.h.dim();
        let dual = self.h.dual_ref();
        let table = self.h.characters()?;
        let induced: Vec<Vector> =
            self.chars.characters.iter().map(|phi| Ok(self.induce(phi)?.coadjoint)).collect::<Result<_>>()?;
        let first = Subspace::span(d, induced.iter());
        let products: Vec<Vector> = table.characters.iter().map(|chi| dual.mul(chi, &self.ctx.lambda_b)).collect();
        let second = Subspace::span(d, products.iter());
        let characters = Subspace::span(d, table.characters.iter());
        let third = characters.intersect(&self.hit_constraint_space())?;
        Ok(SubspaceTriple { first, second, third })
    }

    pub fn induced_image(&self) -> Result<Subspace> {
        self.induced_image_parts()?.common("R(N)^↑H")
    }

    /// ⟨φ_j, n T_i⟩ = δ_ij φ_j(n) on the basis of N, and T_i t_j = δ_ij t_j.
    pub fn check_character_data(&self) -> bool {
        let m = self.m();
        let chars = &self.chars;
        let coords: Vec<Vector> = match chars.central_idempotents.iter().map(|t| self.n_coords(t)).collect() {
            Ok(c) => c,
            Err(_) => return false,
        };
        for (i, ti) in coords.iter().enumerate() {
            for k in 0..m {
                let nt = self.presentation.mul(&unit_vector(m, k), ti);
                for (j, phi) in chars.characters.iter().enumerate() {
                    let expected = if i == j { phi[k].clone() } else { Scalar::zero() };
                    if dot(phi, &nt) != expected {
                        return false;
                    }
                }
            }
            for (j, t) in chars.primitive_idempotents.iter().enumerate() {
                let prod = self.h.mul(&chars.central_idempotents[i], t);
                if (i == j && prod != *t) || (i != j && !is_zero_vector(&prod)) {
                    return false;
                }
            }
        }
        true
    }
}

fn non_negative_integer(c: &Scalar) -> Result<u64> {
    c.as_integer().and_then(|n| u64::try_from(n).ok()).ok_or_else(|| Error::NonIntegerMultiplicity(c.to_string()))
}

fn coideal_characters_of(ctx: &CoidealContext, presentation: &AlgebraPresentation) -> Result<CoidealCharacterData> {
    let n = &ctx.n;
    let m = n.dim();
    let mut w = wedderburn(presentation)?;
    let lam = n.coordinates(&ctx.big_lambda_n).ok_or(Error::NoIntegral)?;
    let zero_block = w
        .central_idempotents
        .iter()
        .position(|e| *e == lam)
        .ok_or_else(|| Error::NotSemisimple("Λ_N is not a central primitive idempotent of N".into()))?;
    w.move_to_front(zero_block);
    let characters = w
        .central_idempotents
        .iter()
        .zip(&w.degrees)
        .map(|(e, deg)| {
            let products: Vec<Vector> = (0..m).map(|k| presentation.mul(&unit_vector(m, k), e)).collect();
            let ideal = Subspace::span(m, products.iter());
            trace_character(|x, y| presentation.mul(x, y), m, &ideal, *deg)
        })
        .collect();
    Ok(CoidealCharacterData {
        central_idempotents: w.central_idempotents.iter().map(|e| n.from_coordinates(e)).collect(),
        characters,
        degrees: w.degrees,
        primitive_idempotents: w.block_primitive_idempotents.iter().map(|t| n.from_coordinates(t)).collect(),
    })
}

/// Irreducible characters of N, with T_0 = Λ_N.
pub fn coideal_characters(h: &HopfData, ctx: &CoidealContext) -> Result<CoidealCharacterData> {
    let presentation = AlgebraPresentation::of_subalgebra(h, &ctx.n)?;
    coideal_characters_of(ctx, &presentation)
}

#[cfg(test)]
mod tests;
