//! Randomized invariants over the field, the algebra and the comodule layer.

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use wha_core::comodule::ComoduleCategory;
use wha_core::wha::{add_into, shared_algebra, Tensor2, WhaElement};
use wha_core::{Conventions, CycloScalar, Rational, WhaAlgebra};

fn scalar(level: u32, coeffs: &[(i64, i64)]) -> CycloScalar {
    let qs: Vec<Rational> = coeffs
        .iter()
        .map(|&(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
        .collect();
    CycloScalar::from_coeffs(level, &qs)
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 0..12)
}

fn algebra(level: u32) -> Arc<WhaAlgebra> {
    shared_algebra(level, Conventions::default()).unwrap()
}

fn element(alg: &WhaAlgebra, terms: &[(usize, i64)]) -> WhaElement {
    let mut x = alg.zero();
    for &(i, c) in terms {
        x.add_term(i % alg.dim(), CycloScalar::from_integer(alg.level(), c));
    }
    x
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..10_000, -3i64..=3), 1..4)
}

fn tensor_product(alg: &WhaAlgebra, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&(a, b), c) in x {
        for (&(d, e), f) in y {
            let cf = c * f;
            for (k, g) in alg.multiply_basis(a, d) {
                for (l, h) in alg.multiply_basis(b, e) {
                    add_into(&mut out, (*k, *l), &cf * &(g * h));
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_is_a_commutative_ring(level in 2u32..=7, a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (scalar(level, &a), scalar(level, &b), scalar(level, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn nonzero_elements_are_invertible(level in 2u32..=7, a in coeffs()) {
        let a = scalar(level, &a);
        prop_assume!(!a.is_zero());
        let b = a.inv().unwrap();
        prop_assert!((&a * &b).is_one());
    }

    #[test]
    fn serialization_round_trips(level in 2u32..=7, a in coeffs()) {
        let a = scalar(level, &a);
        prop_assert_eq!(CycloScalar::from_repr(level, &a.to_repr()).unwrap(), a);
    }

    #[test]
    fn coproduct_is_multiplicative(level in 3u32..=4, x in terms(), y in terms()) {
        let alg = algebra(level);
        let (x, y) = (element(&alg, &x), element(&alg, &y));
        let lhs = alg.comultiply(&alg.multiply(&x, &y).unwrap());
        let rhs = tensor_product(&alg, &alg.comultiply(&x), &alg.comultiply(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_reverses_products(level in 3u32..=5, x in terms(), y in terms()) {
        let alg = algebra(level);
        let (x, y) = (element(&alg, &x), element(&alg, &y));
        let lhs = alg.antipode(&alg.multiply(&x, &y).unwrap());
        let rhs = alg.multiply(&alg.antipode(&y), &alg.antipode(&x)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_gives_source_counital_map(level in 3u32..=5, x in terms()) {
        let alg = algebra(level);
        let x = element(&alg, &x);
        let mut acc = alg.zero();
        for (&(a, b), c) in &alg.comultiply(&x) {
            let s = alg.antipode(&alg.element(a));
            acc = acc.add(&alg.multiply(&s, &alg.element(b)).unwrap().scale(c));
        }
        prop_assert_eq!(acc, alg.counital_source(&x));
    }

    #[test]
    fn counital_maps_are_idempotent(level in 3u32..=5, x in terms()) {
        let alg = algebra(level);
        let x = element(&alg, &x);
        let t = alg.counital_target(&x);
        prop_assert_eq!(alg.counital_target(&t), t);
        let s = alg.counital_source(&x);
        prop_assert_eq!(alg.counital_source(&s), s);
    }

    #[test]
    fn ribbon_form_is_antipode_invariant(level in 3u32..=5, x in terms()) {
        let alg = algebra(level);
        let x = element(&alg, &x);
        prop_assert_eq!(alg.ribbon_form(&alg.antipode(&x)), alg.ribbon_form(&x));
    }

    #[test]
    fn comodule_trace_is_cyclic(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, d in -4i64..=4) {
        // End(V_1 ⊗̂ V_1) at r = 4 is spanned by the identity and the double braiding.
        let cat = ComoduleCategory::new(algebra(4));
        let v = cat.irreducible(1).clone();
        let vv = cat.truncated_tensor(&v, &v);
        let braid = cat.braiding_map(&vv, &vv);
        let double = braid.mul(&braid);
        let id = wha_core::linalg::Matrix::identity(4, vv.dim());
        let int = |n| CycloScalar::from_integer(4, n);
        let f = id.scale(&int(a)).add(&double.scale(&int(b)));
        let g = id.scale(&int(c)).add(&double.scale(&int(d)));
        let gf = cat.comodule_trace(&g.mul(&f), &vv.comodule).unwrap();
        let fg = cat.comodule_trace(&f.mul(&g), &vv.comodule).unwrap();
        prop_assert_eq!(gf, fg);
    }
}
