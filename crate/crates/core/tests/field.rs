mod common;

use common::*;
use downup_core::exactfield::{geometric_sum, quadratic_roots, root_of_unity_order, FieldElement, NumberField};
use proptest::prelude::*;

fn axioms(a: &FieldElement, b: &FieldElement, c: &FieldElement) {
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert!((a - a).is_zero());
    if !a.is_zero() {
        assert!((a * &a.inv().unwrap()).is_one());
    }
}

proptest! {
    #[test]
    fn rational_axioms(a in rational_element(), b in rational_element(), c in rational_element()) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn cyclotomic_axioms(a in cyclotomic_element(), b in cyclotomic_element(), c in cyclotomic_element()) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn geometric_sum_identity(eta in cyclotomic_element(), n in 0u64..12) {
        let one = eta.field().one();
        prop_assert_eq!(&geometric_sum(&eta, n) * &(&eta - &one), &eta.pow(n) - &one);
    }

    #[test]
    fn quadratic_root_relations(a in rational_element(), b in rational_element()) {
        let k = NumberField::cyclotomic3();
        let (a, b) = (k.from_rational(a.to_rational().unwrap()), k.from_rational(b.to_rational().unwrap()));
        if let Ok((l1, l2)) = quadratic_roots(&a, &b) {
            prop_assert_eq!(&l1 + &l2, a);
            prop_assert_eq!(&l1 * &l2, -&b);
        }
    }

    #[test]
    fn order_is_least(a in cyclotomic_element()) {
        prop_assume!(!a.is_zero());
        if let Some(n) = root_of_unity_order(&a).unwrap() {
            prop_assert!(a.pow(n).is_one());
            for k in 1..n {
                prop_assert!(!a.pow(k).is_one());
            }
        }
    }
}

#[test]
fn cyclotomic_orders() {
    let k = NumberField::cyclotomic3();
    let w = k.generator();
    // orders computed by hand from w^2 = -w - 1
    let cases = [(k.one(), 1), (-&k.one(), 2), (w.clone(), 3), (&w * &w, 3), (-&w, 6), (&w + &k.one(), 6)];
    for (a, n) in cases {
        assert_eq!(root_of_unity_order(&a).unwrap(), Some(n), "{a}");
    }
    assert_eq!(root_of_unity_order(&k.from_int(2)).unwrap(), None);
    assert!(root_of_unity_order(&k.zero()).is_err());
    assert_eq!(root_of_unity_order(&(&w * &k.from_int(2))).unwrap(), None);
}

#[test]
fn roots_in_the_right_field() {
    // l^2 + l + 1 has no rational root but splits over Q(zeta_3)
    assert!(quadratic_roots(&q(-1, 1), &q(-1, 1)).is_err());
    let k = NumberField::cyclotomic3();
    let (l1, l2) = quadratic_roots(&k.from_int(-1), &k.from_int(-1)).unwrap();
    assert_eq!(root_of_unity_order(&l1).unwrap(), Some(3));
    assert_eq!(root_of_unity_order(&l2).unwrap(), Some(3));
}
