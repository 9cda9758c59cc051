use super::*;
use crate::linalg::{add, scale, Subspace};

fn q3() -> CyclotomicOrder {
    CyclotomicOrder::new(3).unwrap()
}

fn ks3() -> HopfData {
    group_algebra(&symmetric3_table(CompositionConvention::RightToLeft), q3()).unwrap()
}

fn kz(n: usize, order: u32) -> HopfData {
    group_algebra(&cyclic_group_table(n), CyclotomicOrder::new(order).unwrap()).unwrap()
}

fn el(h: &HopfData, label: &str) -> Vector {
    h.basis(h.index_of(label).unwrap())
}

#[test]
fn builders_and_duals_pass_verification() {
    for h in [kz(2, 1), ks3(), ks3().dual(), kz(3, 3).dual()] {
        let report = h.verify();
        assert!(report.all_passed(), "{report}");
    }
}

#[test]
fn identity_antipode_fails_first_at_a_three_cycle() {
    let mut h = ks3();
    h.antipode = (0..6).map(|i| vec![(i, Scalar::one())]).collect();
    let report = h.verify();
    let check = report.check("antipode").unwrap();
    assert!(!check.passed);
    // transpositions are involutions, so S = id satisfies the axiom on them
    assert_eq!(check.counterexample, Some(vec![h.index_of("(123)").unwrap()]));
}

#[test]
fn double_dual_is_identity() {
    let h = ks3();
    let mut dd = h.dual().dual();
    dd.r_matrix = h.r_matrix.clone();
    assert_eq!(dd, h);
    assert!(ks3().dual().is_commutative());
    assert!(!ks3().dual().is_cocommutative());
}

#[test]
fn hit_actions_on_functionals() {
    let h = ks3();
    let dual = h.dual_ref();
    let p12 = dual.basis(h.index_of("(12)").unwrap());
    assert_eq!(left_hit(dual, h.unit(), &p12), p12);
    // ⟨p ↼ a, g⟩ = ⟨p, a g⟩ so p_(12) ↼ (123) = p_{(123)^{-1}(12)}
    let a = el(&h, "(123)");
    let moved = right_hit(dual, &p12, &a);
    let target = h.mul(&el(&h, "(132)"), &el(&h, "(12)"));
    assert_eq!(moved, target);
    for g in 0..6 {
        assert_eq!(moved[g], p12[h.mul(&a, &h.basis(g)).iter().position(|x| x.is_one()).unwrap()]);
    }
}

#[test]
fn adjoint_is_conjugation() {
    let h = ks3();
    assert_eq!(adjoint(&h, &el(&h, "(12)"), &el(&h, "(123)")), el(&h, "(132)"));
    assert_eq!(adjoint(&h, h.unit(), &el(&h, "(13)")), el(&h, "(13)"));
}

#[test]
fn group_integrals() {
    let h = ks3();
    let ints = integrals(&h).unwrap();
    assert_eq!(ints.big_lambda, vec![Scalar::ratio(1, 6); 6]);
    let mut expected = vec![Scalar::zero(); 6];
    expected[0] = Scalar::from_integer(6);
    assert_eq!(ints.lambda, expected);
    assert!(h.pair(&ints.lambda, &ints.big_lambda).is_one());
}

#[test]
fn character_tables() {
    let z2 = kz(2, 1);
    let t = character_table(&z2).unwrap();
    assert_eq!(t.degrees, vec![1, 1]);
    assert_eq!(t.characters[0], vec![Scalar::one(), Scalar::one()]);
    assert_eq!(t.characters[1], vec![Scalar::one(), Scalar::from_integer(-1)]);
    assert_eq!(t.central_idempotents[1], vec![Scalar::ratio(1, 2), Scalar::ratio(-1, 2)]);

    let h = ks3();
    let t = character_table(&h).unwrap();
    let mut degrees = t.degrees.clone();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 2]);
    for i in 0..3 {
        for j in 0..3 {
            let form = bilinear_form_h(&h, &t.characters[i], &t.characters[j]).unwrap();
            assert_eq!(form, Scalar::from_integer((i == j) as i64));
            let prod = h.mul(&t.central_idempotents[i], &t.central_idempotents[j]);
            let expected = if i == j { t.central_idempotents[i].clone() } else { vec![Scalar::zero(); 6] };
            assert_eq!(prod, expected);
        }
        assert_eq!(h.mul(&t.primitive_idempotents[i], &t.central_idempotents[i]), t.primitive_idempotents[i]);
    }
}

#[test]
fn coadjoint_of_integral_lands_in_character_algebra() {
    let h = ks3();
    let t = character_table(&h).unwrap();
    let r_h = Subspace::span(6, t.characters.iter());
    let big = &integrals(&h).unwrap().big_lambda;
    for seed in 0..6i64 {
        let x: Vector = (0..6).map(|k| Scalar::from_integer((seed * 7 + k * k * 3) % 5 - 2)).collect();
        let c = coadjoint(&h, big, &x);
        assert!(r_h.contains(&c));
        // h coad (xp) = (h coad x)p for p ∈ R(H)
        let dual = h.dual_ref();
        let p = add(&t.characters[2], &scale(&Scalar::from_integer(seed), &t.characters[1]));
        let g = el(&h, "(13)");
        assert_eq!(coadjoint(&h, &g, &dual.mul(&x, &p)), dual.mul(&coadjoint(&h, &g, &x), &p));
    }
}

#[test]
fn grouplike_counts() {
    assert_eq!(grouplikes(&ks3()).unwrap().len(), 6);
    assert_eq!(grouplikes(&ks3().dual()).unwrap().len(), 2);
    assert_eq!(grouplikes(&kz(3, 3)).unwrap().len(), 3);
}

#[test]
fn double_of_z2() {
    let (d, qt) = drinfeld_double(&kz(2, 1)).unwrap();
    assert_eq!(d.dim(), 4);
    assert!(d.verify().all_passed(), "{}", d.verify());
    assert!(qt.verify(&d).all_passed());
    let eps = d.dual_ref().unit().to_vec();
    assert_eq!(f_r(&d, &eps, false).unwrap(), d.unit());
    for g in grouplikes(&d.dual()).unwrap() {
        let image = f_r(&d, &g, false).unwrap();
        assert_eq!(d.comul(&image), d.tensor(&image, &image));
    }
}

#[test]
fn double_of_s3() {
    let (d, qt) = drinfeld_double(&ks3()).unwrap();
    assert_eq!(d.dim(), 36);
    let report = d.verify();
    assert!(report.all_passed(), "{report}");
    assert!(qt.verify(&d).all_passed());
}

#[test]
fn f_r_requires_a_matrix() {
    assert!(matches!(f_r(&ks3().dual(), &vec![Scalar::zero(); 6], false), Err(Error::NoRMatrix)));
}
