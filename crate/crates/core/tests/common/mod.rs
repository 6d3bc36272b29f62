#![allow(dead_code)]

use downup_core::exactfield::{FieldElement, NumberField, Rational};
use downup_core::skewalgebra::Params;
use proptest::prelude::*;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn q(n: i64, d: i64) -> FieldElement {
    NumberField::rationals().from_rational(rat(n, d))
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != rat(0, 1))
}

pub fn rational_element() -> impl Strategy<Value = FieldElement> {
    small_rational().prop_map(|r| NumberField::rationals().from_rational(r))
}

/// Elements of Q(zeta_3).
pub fn cyclotomic_element() -> impl Strategy<Value = FieldElement> {
    (small_rational(), small_rational()).prop_map(|(a, b)| NumberField::cyclotomic3().element(&[a, b]))
}

/// Noetherian parameters over Q.
pub fn rational_params() -> impl Strategy<Value = Params> {
    (small_rational(), nonzero_rational(), small_rational()).prop_map(|(a, b, g)| {
        let f = NumberField::rationals();
        Params::new(&f.from_rational(a), &f.from_rational(b), &f.from_rational(g)).unwrap()
    })
}

/// `A_eta` with rational `eta` not in `{0, 1}` and `gamma != 0`.
pub fn type_d_params() -> impl Strategy<Value = Params> {
    (nonzero_rational(), nonzero_rational())
        .prop_filter("eta != 1", |(e, _)| *e != rat(1, 1))
        .prop_map(|(e, g)| {
            let f = NumberField::rationals();
            Params::a_eta(&f.from_rational(e), &f.from_rational(g)).unwrap()
        })
}

/// The three type (d) parameter sets used for module checks.
pub fn type_d_sets() -> Vec<Params> {
    let k = NumberField::cyclotomic3();
    vec![
        Params::from_ints(0, 1, 1).unwrap(),
        Params::from_ints(-1, 2, 1).unwrap(),
        Params::from_ints(3, -2, 1).unwrap(),
        Params::a_eta(&k.generator(), &k.one()).unwrap(),
    ]
}
