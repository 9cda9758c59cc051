use super::*;
use crate::coideal::{coideal_closure, invariants_of};
use crate::hopf::{group_algebra, symmetric3_table, CompositionConvention};
use crate::linalg::{identity_matrix, mat_mul, sub};
use crate::scalar::CyclotomicOrder;

fn ks3() -> HopfData {
    group_algebra(&symmetric3_table(CompositionConvention::RightToLeft), CyclotomicOrder::new(3).unwrap()).unwrap()
}

fn el(h: &HopfData, label: &str) -> Vector {
    h.basis(h.index_of(label).unwrap())
}

fn int(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

/// Deterministic functional with small distinct integer values.
fn sample(d: usize, seed: i64) -> Vector {
    (0..d as i64).map(|i| int((i * 7 + seed * 3) % 5 - 2)).collect()
}

fn noncommuting_pair() -> (HopfData, CoidealContext) {
    let g = ks3();
    let h = g.dual();
    let t = Subspace::span(6, [el(&g, "e"), el(&g, "(12)")].iter());
    let ctx = CoidealContext::from_subspace(&h, invariants_of(&h, &t).unwrap()).unwrap();
    (h, ctx)
}

/// Index of the irreducible character of kS₃ with the given degree and value at (12).
fn s3_character(h: &HopfData, degree: usize, at_transposition: i64) -> usize {
    let table = h.characters().unwrap();
    let t = h.index_of("(12)").unwrap();
    (0..table.len()).find(|&i| table.degrees[i] == degree && table.characters[i][t] == int(at_transposition)).unwrap()
}

#[test]
fn trivial_coideal() {
    let h = ks3();
    let ctx = CoidealContext::trivial(&h).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    assert_eq!(a.characters().characters, vec![vec![int(1)]]);
    let lambda = &h.integrals().unwrap().lambda;
    assert_eq!(a.image_of_gamma().unwrap(), Subspace::span(6, [lambda.clone()].iter()));
    assert_eq!(a.frobenius(h.unit()).unwrap(), vec![int(1)]);
    assert_eq!(a.form(&[int(1)], &[int(1)]).unwrap(), int(1));
    let table = a.reciprocity().unwrap();
    let column: Vec<u64> = table.multiplicities.iter().map(|r| r[0]).collect();
    let degrees: Vec<u64> = h.characters().unwrap().degrees.iter().map(|d| *d as u64).collect();
    assert_eq!(column, degrees);
    assert_eq!(a.induce(&[int(1)]).unwrap().coadjoint, *lambda);
    assert_eq!(a.induced_image().unwrap(), Subspace::span(6, [lambda.clone()].iter()));
}

#[test]
fn whole_algebra() {
    let h = ks3();
    let ctx = CoidealContext::whole(&h).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    assert_eq!(a.image_of_gamma().unwrap(), Subspace::full(6));
    let table = a.reciprocity().unwrap();
    let m = table.multiplicities;
    // the block orders of H and N come from independent splittings but must match up to permutation
    for row in &m {
        assert_eq!(row.iter().sum::<u64>(), 1);
    }
    let chars = h.characters().unwrap();
    assert_eq!(a.induced_image().unwrap(), Subspace::span(6, chars.characters.iter()));
}

#[test]
fn alternating_characters_and_branching() {
    let h = ks3();
    let ctx = coideal_closure(&h, &[el(&h, "(123)")]).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    let chars = a.characters();
    assert_eq!(chars.degrees, vec![1, 1, 1]);
    assert_eq!(chars.characters[0], vec![int(1); 3]);
    assert_eq!(chars.central_idempotents[0], ctx.big_lambda_n);
    assert!(a.check_character_data());

    let two = s3_character(&h, 2, 0);
    let chi2 = &h.characters().unwrap().characters[two];
    let res = a.restrict(chi2).unwrap();
    assert_eq!(res.multiplicities, vec![0, 1, 1]);

    // inducing a nontrivial character of A₃ gives the two-dimensional irreducible
    for j in 1..3 {
        assert_eq!(a.induce(&chars.characters[j]).unwrap().coadjoint, *chi2);
    }
    let table = a.reciprocity().unwrap();
    assert_eq!(table.multiplicities[two], vec![0, 1, 1]);
    assert_eq!(table.multiplicities[s3_character(&h, 1, 1)], vec![1, 0, 0]);
    assert_eq!(table.multiplicities[s3_character(&h, 1, -1)], vec![1, 0, 0]);
}

#[test]
fn gamma_identities() {
    let h = ks3();
    let dual = h.dual_ref();
    let ctx = coideal_closure(&h, &[el(&h, "(123)")]).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    let s = a.lambda_b_at_one().clone();
    assert_eq!(s, int(2));
    let eps_n = a.restrict_functional(dual.unit());
    assert_eq!(a.gamma(&eps_n).unwrap(), ctx.lambda_b);

    for seed in 0..4 {
        let x = sample(6, seed);
        let p = sample(3, seed + 11);
        assert_eq!(dual.mul(&x, &ctx.lambda_b), a.gamma(&a.restrict_functional(&x)).unwrap());
        assert_eq!(a.restrict_functional(&a.gamma(&p).unwrap()), scale(&s, &p));
        assert_eq!(a.gamma(&a.star_action(&x, &p).unwrap()).unwrap(), dual.mul(&x, &a.gamma(&p).unwrap()));
        assert_eq!(a.star_action(&x, &eps_n).unwrap(), a.restrict_functional(&x));
        for n in ctx.n.basis() {
            let lhs = a.gamma(&a.hit_on_n_dual(n, &p).unwrap()).unwrap();
            assert_eq!(lhs, left_hit(dual, n, &a.gamma(&p).unwrap()));
        }
    }
    // the group picture: γ(p) is [G:K] times the extension of p by zero
    let p = sample(3, 5);
    let g = a.gamma(&p).unwrap();
    for (i, v) in g.iter().enumerate() {
        match ctx.n.basis().iter().position(|b| *b == h.basis(i)) {
            Some(k) => assert_eq!(*v, &s * &p[k]),
            None => assert!(v.is_zero()),
        }
    }
    let gm = a.gamma_matrix().unwrap();
    assert_eq!(Subspace::span(6, gm.iter()).dim(), 3);
}

#[test]
fn star_action_is_a_module() {
    let (h, ctx) = noncommuting_pair();
    let dual = h.dual_ref();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    let m = ctx.dim();
    for seed in 0..3 {
        let x = sample(6, seed);
        let y = sample(6, seed + 1);
        let p = sample(m, seed + 2);
        assert_eq!(a.star_action(dual.unit(), &p).unwrap(), p);
        let lhs = a.star_action(&dual.mul(&x, &y), &p).unwrap();
        let rhs = a.star_action(&x, &a.star_action(&y, &p).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn gamma_star_identities() {
    let h = ks3();
    let ctx = coideal_closure(&h, &[el(&h, "(123)")]).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    assert_eq!(a.gamma_star(h.unit()), scale(&int(2), h.unit()));
    for n in ctx.n.basis() {
        assert_eq!(a.gamma_star(n), scale(&int(2), n));
    }
    assert_eq!(a.gamma_star(&h.integrals().unwrap().big_lambda), ctx.big_lambda_n);
    let images: Vec<Vector> = (0..6).map(|i| a.gamma_star(&h.basis(i))).collect();
    assert_eq!(Subspace::span(6, images.iter()), ctx.n);
}

#[test]
fn frobenius_map_and_form() {
    for (h, ctx) in [
        {
            let h = ks3();
            let c = coideal_closure(&h, &[el(&h, "(123)")]).unwrap();
            (h, c)
        },
        noncommuting_pair(),
    ] {
        let a = CoidealAnalysis::new(&h, &ctx).unwrap();
        let m = ctx.dim();
        let f = a.frobenius_matrix().unwrap();
        let finv = a.frobenius_inverse_matrix().unwrap();
        assert_eq!(mat_mul(&f, &finv), identity_matrix(m));
        assert_eq!(mat_mul(&finv, &f), identity_matrix(m));
        // self-adjoint: ⟨F(n_k), n_l⟩ = ⟨F(n_l), n_k⟩
        assert_eq!(f, crate::linalg::transpose(&f));
        let chars = a.characters();
        for (k, t) in chars.central_idempotents.iter().enumerate() {
            let expected = scale(&int(chars.degrees[k] as i64), &chars.characters[k]);
            assert_eq!(a.frobenius(t).unwrap(), expected);
        }
        assert_eq!(a.frobenius(&ctx.big_lambda_n).unwrap(), a.restrict_functional(h.dual_ref().unit()));
        assert_eq!(a.gram(&chars.characters).unwrap(), identity_matrix(chars.len()));
        let basis: Vec<Vector> = (0..m).map(|k| unit_vector(m, k)).collect();
        let gram = a.gram(&basis).unwrap();
        assert_eq!(gram, crate::linalg::transpose(&gram));
        for p in &basis {
            for q in &basis {
                assert_eq!(a.form(p, q).unwrap(), a.form_via_star(p, q).unwrap());
                if ctx.is_hopf_subalgebra {
                    assert_eq!(a.form(p, q).unwrap(), a.hopf_subalgebra_form(p, q).unwrap());
                }
            }
        }
    }
}

#[test]
fn characters_of_a_non_hopf_coideal() {
    let (h, ctx) = noncommuting_pair();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    let chars = a.characters();
    assert_eq!(chars.degrees.iter().map(|d| d * d).sum::<usize>(), 3);
    assert!(a.check_character_data());
    a.reciprocity().unwrap();
    assert!(a.image_of_gamma_parts().unwrap().agree());
    assert!(matches!(a.hopf_subalgebra_form(&vec![int(1); 3], &vec![int(1); 3]), Err(Error::NotAnAlgebra(_))));
}

#[test]
fn restriction_of_the_regular_character() {
    let (h, ctx) = noncommuting_pair();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    let lambda = &h.integrals().unwrap().lambda;
    let chars = a.characters();
    let mut expected = zero_vector(ctx.dim());
    for (phi, deg) in chars.characters.iter().zip(&chars.degrees) {
        axpy(&mut expected, &int(*deg as i64), phi);
    }
    let dim_b = int(ctx.b.dim() as i64);
    assert_eq!(a.restrict_functional(lambda), scale(&dim_b, &expected));
    // Σ_i d_i⟨χ_i, t_j⟩ = dim B·⟨φ_j, 1⟩
    let table = a.reciprocity().unwrap();
    for j in 0..chars.len() {
        let total: u64 = table.multiplicities.iter().zip(&table.h_degrees).map(|(r, d)| r[j] * *d as u64).sum();
        assert_eq!(total, ctx.b.dim() as u64 * chars.degrees[j] as u64);
    }
}

#[test]
fn induction_from_normal_coideal() {
    let h = ks3();
    let dual = h.dual_ref();
    let ctx = coideal_closure(&h, &[el(&h, "(123)")]).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    let eps_n = a.restrict_functional(dual.unit());
    assert_eq!(a.induce(&eps_n).unwrap().coadjoint, ctx.lambda_b);
    for psi in &h.characters().unwrap().characters {
        let up = a.induce(&a.restrict_functional(psi)).unwrap().coadjoint;
        assert_eq!(up, dual.mul(psi, &ctx.lambda_b));
    }
    let image = a.induced_image().unwrap();
    assert_eq!(image.dim(), 2);
}

#[test]
fn non_normal_coideal() {
    let h = ks3();
    let ctx = coideal_closure(&h, &[el(&h, "(12)")]).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    assert!(matches!(a.induced_image(), Err(Error::NotNormal)));
    let big = &h.integrals().unwrap().big_lambda;
    let eps_n = a.restrict_functional(h.dual_ref().unit());
    let expected = crate::hopf::coadjoint(&h, big, &ctx.lambda_b);
    assert_eq!(a.induce(&eps_n).unwrap().coadjoint, expected);
    let table = a.reciprocity().unwrap();
    assert_eq!(table.multiplicities[s3_character(&h, 2, 0)], vec![1, 1]);
    assert!(a.image_of_gamma().is_ok());
    assert!(table.to_text().contains("chi0"));
}

#[test]
fn outside_span_is_rejected() {
    let h = ks3();
    let ctx = CoidealContext::whole(&h).unwrap();
    let a = CoidealAnalysis::new(&h, &ctx).unwrap();
    let table = h.characters().unwrap();
    let inside = sub(&table.characters[0], &table.characters[1]);
    assert!(a.irreducible_coefficients(&inside).is_ok());
    assert!(matches!(a.irreducible_coefficients(&el(&h, "(12)")), Err(Error::Inconsistent)));
}
