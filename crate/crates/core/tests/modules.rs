mod common;

use common::*;
use downup_core::classify::{orbit_iterate, simples_of_dim, OrbitResult, SimplesOfDim};
use downup_core::exactfield::{FieldElement, NumberField};
use downup_core::ext_oracle::hom_dim;
use downup_core::linalg::Matrix;
use downup_core::repmod::{
    dual_module, is_simple, orbit_module, simple_module, torsion_filtration, verify_relations, verma_quotient,
    weight_decomposition, FDModule, ModuleLabel,
};
use downup_core::skewalgebra::Params;
use proptest::prelude::*;

/// `lambda_(-1), lambda_0, ..., lambda_n` by the recurrence.
fn oracle_lambdas(p: &Params, lambda: &FieldElement, n: usize) -> Vec<FieldElement> {
    let mut v = vec![p.field().zero(), lambda.clone()];
    while v.len() < n + 2 {
        let k = v.len();
        v.push(&(&(p.alpha() * &v[k - 1]) + &(p.beta() * &v[k - 2])) + p.gamma());
    }
    v
}

fn simples(p: &Params, max_dim: usize) -> Vec<(FieldElement, FDModule)> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        if let SimplesOfDim::Finite(ls) = simples_of_dim(p, n).unwrap() {
            for l in ls {
                out.push((l.clone(), simple_module(p, &l, max_dim).unwrap()));
            }
        }
    }
    out
}

fn check_module(m: &FDModule) {
    assert!(verify_relations(m).ok, "{m:?}");
    let dual = dual_module(m).unwrap();
    assert!(verify_relations(&dual).ok);
    let back = dual_module(&dual).unwrap();
    assert_eq!((back.d(), back.u()), (m.d(), m.u()));
    let rep = torsion_filtration(m, m.dim(), m.dim());
    assert!(rep.containments_ok);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructed_simples_are_sound(p in rational_params(), n in 1usize..=5) {
        if let SimplesOfDim::Finite(ls) = simples_of_dim(&p, n).unwrap() {
            for l in ls {
                let v = verma_quotient(&p, &l, n).unwrap();
                check_module(&v);
                let m = simple_module(&p, &l, n).unwrap();
                prop_assert_eq!(m.dim(), n);
                prop_assert!(is_simple(&m));
                check_module(&m);
                prop_assert!(hom_dim(&m, &dual_module(&m).unwrap()).unwrap() >= 1);
            }
        }
    }

    #[test]
    fn verma_weights_follow_the_sequence(p in type_d_params(), n in 1usize..=6) {
        if let SimplesOfDim::Finite(ls) = simples_of_dim(&p, n).unwrap() {
            for l in ls {
                let m = verma_quotient(&p, &l, n).unwrap();
                let lam = oracle_lambdas(&p, &l, n);
                let mut want: Vec<_> = (0..n).map(|i| (lam[i + 1].clone(), lam[i].clone())).collect();
                let mut got = weight_decomposition(&m).unwrap().pairs();
                want.sort();
                got.sort();
                prop_assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn nilpotent_modules_are_exhausted(p in rational_params(), n in 1usize..=5) {
        if let SimplesOfDim::Finite(ls) = simples_of_dim(&p, n).unwrap() {
            for l in ls {
                let m = verma_quotient(&p, &l, n).unwrap();
                let rep = torsion_filtration(&m, n - 1, n - 1);
                prop_assert_eq!(*rep.graded.last().unwrap(), n);
                let graded = &rep.graded;
                prop_assert!(graded.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }
}

#[test]
fn weights_are_distinct_and_march_along_the_orbit() {
    for p in type_d_sets() {
        let sigma = p.sigma();
        for (l, m) in simples(&p, 6) {
            let n = m.dim();
            let pairs = weight_decomposition(&m).unwrap().pairs();
            assert_eq!(pairs.len(), n);
            for i in 0..n {
                for j in 0..i {
                    assert_ne!(pairs[i], pairs[j], "{p:?} lambda {l}");
                }
            }
            // ann(v_i) = (x - lambda_(i-1), y - lambda_i): the preimage of the previous one
            let lam = oracle_lambdas(&p, &l, n);
            for i in 0..n {
                let (du, ud) = &pairs[i];
                assert_eq!((ud, du), (&lam[i], &lam[i + 1]));
                let next = sigma.ideal_point_preimage(ud, du);
                assert_eq!(next, (lam[i + 1].clone(), lam[i + 2].clone()));
                assert_eq!(sigma.ideal_point_image(&next.0, &next.1), (ud.clone(), du.clone()));
            }
        }
    }
}

#[test]
fn sigma_n_of_x_generates_the_highest_weight_ideal() {
    for p in type_d_sets() {
        for (l, m) in simples(&p, 6) {
            let n = m.dim() as i64;
            let a = p.sigma().x_power(n);
            // sigma^n(x) = c0 + cx x + cy y must be c (y - lambda) modulo x with c != 0
            assert!(!a.cy.is_zero(), "{p:?} lambda {l}");
            assert_eq!(a.c0, -&(&a.cy * &l));
        }
    }
}

#[test]
fn orbit_modules() {
    let f = NumberField::rationals();
    let k = NumberField::cyclotomic3();
    let cases = [
        (Params::from_ints(-1, -1, 0).unwrap(), (f.one(), f.one())),
        (Params::from_ints(0, 1, 0).unwrap(), (f.from_int(2), f.from_int(-3))),
        (Params::new(&k.from_int(-1), &k.from_int(-1), &k.from_int(3)).unwrap(), (k.from_int(2), k.generator())),
    ];
    for (p, pt) in cases {
        let OrbitResult::Orbit(orbit) = orbit_iterate(&p, &pt, 24).unwrap() else { panic!("finite orbit expected") };
        let m = orbit_module(&p, &pt, &orbit).unwrap();
        check_module(&m);
        assert!(is_simple(&m));
        assert!(!m.d().charpoly().eval(&p.field().zero()).is_zero());
        let got = weight_decomposition(&m).unwrap().pairs();
        let want: Vec<_> = orbit.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn non_orbits_rejected() {
    let f = NumberField::rationals();
    let p = Params::from_ints(-1, -1, 0).unwrap();
    let pt = |a: i64, b: i64| (f.from_int(a), f.from_int(b));
    assert!(orbit_module(&p, &pt(1, 1), &[pt(1, 1), pt(1, -2), pt(-2, 1)]).is_err());
    assert!(orbit_module(&p, &pt(1, 1), &[pt(1, 1), pt(-2, 1)]).is_err());
    let z = Matrix::zeros(&f, 2, 2);
    assert!(FDModule::new(&p, z, Matrix::zeros(&f, 3, 3), ModuleLabel::Raw).is_err());
}
