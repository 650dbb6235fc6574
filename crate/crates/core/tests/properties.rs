//! Property tests for the algebraic invariants of series, modules, Koszul
//! complexes and classes, on small random inputs.

use std::sync::Arc;

use bdfkalc::cli::{parse_spec, JobSpec};
use bdfkalc::grothendieck::{class_of, free_from_series, product, resolution_class, serre_product, KClass};
use bdfkalc::koszul::{betti_table, homology_profile, minimal_resolution_shape, GradedComplex, KoszulComplex};
use bdfkalc::series::eq_on_window;
use bdfkalc::{Characteristic, Degree, GradedModule, Int, ModuleExpr, RingSpec, Series, SupportDescriptor, Window};
use proptest::prelude::*;

fn d(v: &[i64]) -> Degree {
    Degree::from_dense(v)
}

fn ring2() -> Arc<RingSpec> {
    Arc::new(RingSpec::standard(2))
}

fn window33() -> Window {
    Window::single(d(&[3, 3]))
}

fn module(ring: &Arc<RingSpec>, expr: &ModuleExpr, window: &Window) -> GradedModule {
    GradedModule::new(Arc::clone(ring), expr, window.clone()).unwrap()
}

fn degree2(lo: i64, hi: i64) -> impl Strategy<Value = Degree> {
    (lo..=hi, lo..=hi).prop_map(|(a, b)| d(&[a, b]))
}

fn gens2() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..=3, 2), 1..=3)
}

/// Monomial modules over `k[x,y]`: shifted frees, ideals, quotients, and
/// shifts and sums of these.
fn module_expr() -> impl Strategy<Value = ModuleExpr> {
    let leaf = prop_oneof![
        prop::collection::vec(degree2(-1, 2), 1..=3).prop_map(ModuleExpr::Free),
        gens2().prop_map(ModuleExpr::Ideal),
        gens2().prop_map(ModuleExpr::Quotient),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| {
        prop_oneof![
            (inner.clone(), degree2(-1, 1)).prop_map(|(m, by)| ModuleExpr::shift(m, by)),
            prop::collection::vec(inner, 1..=3).prop_map(ModuleExpr::Sum),
        ]
    })
}

/// Sparse windowed series in two coordinates with a single lower bound.
fn series2() -> impl Strategy<Value = Series> {
    (
        prop::collection::vec(degree2(-1, 4), 1..=2),
        degree2(-2, 0),
        prop::collection::vec((degree2(0, 5), -3i64..=3), 0..=5),
    )
        .prop_map(|(ceilings, lower, terms)| {
            let terms: Vec<_> = terms.into_iter().map(|(q, c)| (&lower + &q, Int::from(c))).collect();
            Series::new(Window::new(ceilings), SupportDescriptor::new([lower]), terms).unwrap()
        })
}

fn same(a: &Series, b: &Series) -> bool {
    eq_on_window(a, b, &a.window().intersect(b.window())).unwrap()
}

fn supported(s: &Series) -> bool {
    s.terms().all(|(g, _)| s.support().contains(g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_axioms(a in series2(), b in series2(), c in series2()) {
        prop_assert!(same(&a.mul(&b), &b.mul(&a)));
        prop_assert!(same(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(same(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(same(&a.mul(&Series::one(a.window().clone())), &a));
    }

    #[test]
    fn results_stay_in_their_support(a in series2(), b in series2(), g in degree2(-2, 2)) {
        for s in [a.add(&b), a.mul(&b), a.shift(&g), a.neg()] {
            prop_assert!(supported(&s));
        }
    }

    #[test]
    fn dimension_additivity(gens in gens2()) {
        let ring = ring2();
        let w = window33();
        let ideal = module(&ring, &ModuleExpr::Ideal(gens.clone()), &w);
        let quotient = module(&ring, &ModuleExpr::Quotient(gens), &w);
        for g in w.q_points() {
            prop_assert_eq!(ideal.dimension(&g).unwrap() + quotient.dimension(&g).unwrap(), ring.hilbert_coeff(&g));
        }
    }

    #[test]
    fn shift_multiplies_by_monomial(expr in module_expr(), by in degree2(-1, 2)) {
        let ring = ring2();
        let w = window33();
        let m = module(&ring, &expr, &w);
        let shifted = module(&ring, &ModuleExpr::shift(expr, by.clone()), &w.translate(&by));
        let expected = m.hilbert().shift(&by);
        prop_assert!(eq_on_window(&shifted.hilbert(), &expected, &w.translate(&by)).unwrap());
    }

    #[test]
    fn free_kseries_determined_by_shifts(
        a in prop::collection::vec(degree2(-1, 3), 1..=4),
        b in prop::collection::vec(degree2(-1, 3), 1..=4),
    ) {
        let ring = ring2();
        let w = window33();
        let visible = |s: &[Degree]| {
            let mut v: Vec<Degree> = s.iter().filter(|g| w.contains(g)).cloned().collect();
            v.sort();
            v
        };
        let ka = class_of(&module(&ring, &ModuleExpr::Free(a.clone()), &w));
        let kb = class_of(&module(&ring, &ModuleExpr::Free(b.clone()), &w));
        prop_assert_eq!(ka.eq_on_common_window(&kb), visible(&a) == visible(&b));
        let mut reversed = a.clone();
        reversed.reverse();
        let kr = class_of(&module(&ring, &ModuleExpr::Free(reversed), &w));
        prop_assert!(ka.eq_on_common_window(&kr));
    }

    #[test]
    fn variable_actions_commute(expr in module_expr(), g in degree2(-1, 2)) {
        let ring = ring2();
        let w = Window::single(d(&[3, 3]));
        let m = module(&ring, &expr, &w);
        let xy = m.var_action(1, &(&g + &d(&[1, 0]))).unwrap().mul(&m.var_action(0, &g).unwrap());
        let yx = m.var_action(0, &(&g + &d(&[0, 1]))).unwrap().mul(&m.var_action(1, &g).unwrap());
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn koszul_chain_law_and_finiteness(expr in module_expr(), g in degree2(-1, 3)) {
        let ring = ring2();
        let m = module(&ring, &expr, &window33());
        let k = KoszulComplex::all_variables(&m);
        let top = k.top(&g);
        prop_assert!(top <= 2);
        prop_assert_eq!(k.piece(top + 1, &g).unwrap().dimension(), 0);
        for n in 1..top {
            let composite = k.differential(n, &g).unwrap().mul(&k.differential(n + 1, &g).unwrap());
            prop_assert!(composite.is_zero());
        }
        let p = homology_profile(&k, &g, Characteristic::Zero, true).unwrap();
        prop_assert_eq!(p.chain_euler(), p.homology_euler());
    }

    #[test]
    fn resolution_shape_recovers_class(expr in module_expr()) {
        let ring = ring2();
        let w = window33();
        let m = module(&ring, &expr, &w);
        let table = betti_table(&m, Characteristic::Zero).unwrap();
        let alternating = resolution_class(&minimal_resolution_shape(&table), &w);
        prop_assert!(alternating.eq_on_common_window(&class_of(&m)));
    }

    #[test]
    fn class_of_ring_is_the_unit(expr in module_expr()) {
        let ring = ring2();
        let w = window33();
        let r = module(&ring, &ModuleExpr::ring(), &w);
        let m = module(&ring, &expr, &w);
        let km = class_of(&m);
        prop_assert!(product(&class_of(&r), &km).eq_on_common_window(&km));
        prop_assert!(serre_product(&r, &m, Characteristic::Zero).unwrap().eq_on_common_window(&km));
    }

    #[test]
    fn serre_matches_product_for_supported_left(
        vars in prop::sample::subsequence(vec![0usize, 1], 0..=2),
        by in degree2(0, 1),
        right in module_expr(),
    ) {
        let ring = ring2();
        let w = window33();
        let left_expr = ModuleExpr::Sum(vec![
            ModuleExpr::shift(ModuleExpr::variable_quotient(2, &vars), by),
            ModuleExpr::Free(vec![d(&[1, 0])]),
        ]);
        let left = module(&ring, &left_expr, &w);
        let right = module(&ring, &right, &w);
        let serre = serre_product(&left, &right, Characteristic::Zero).unwrap();
        prop_assert!(serre.eq_on_common_window(&product(&class_of(&left), &class_of(&right))));
    }

    #[test]
    fn effective_round_trip(terms in prop::collection::vec((degree2(-1, 3), 0i64..=3), 0..=5)) {
        let ring = ring2();
        let w = window33();
        let series = Series::polynomial(w.clone(), terms.into_iter().map(|(g, c)| (g, Int::from(c))));
        let class = KClass::new(series, "random effective class");
        let free = free_from_series(&class).unwrap();
        prop_assert!(class_of(&module(&ring, &free, &w)).eq_on_common_window(&class));
    }

    #[test]
    fn class_is_additive(a in module_expr(), b in module_expr(), gens in gens2()) {
        let ring = ring2();
        let w = window33();
        let ka = class_of(&module(&ring, &a, &w));
        let kb = class_of(&module(&ring, &b, &w));
        let sum = class_of(&module(&ring, &ModuleExpr::Sum(vec![a, b]), &w));
        prop_assert!(same(&sum.series, &ka.series.add(&kb.series)));

        let ki = class_of(&module(&ring, &ModuleExpr::Ideal(gens.clone()), &w));
        let kq = class_of(&module(&ring, &ModuleExpr::Quotient(gens), &w));
        let kr = class_of(&module(&ring, &ModuleExpr::ring(), &w));
        prop_assert!(same(&ki.series.add(&kq.series), &kr.series));
    }

    #[test]
    fn job_spec_round_trip(
        expr in module_expr(),
        ceiling in degree2(0, 4),
        command in prop::sample::select(vec!["hilbert", "kseries", "betti", "koszul-verify", "euler-check"]),
        output in prop::sample::select(vec!["json", "csv", "table"]),
        p in prop::sample::select(vec![0u64, 2, 3, 7]),
    ) {
        let text = serde_json::json!({
            "command": command,
            "ring": {"columns": [1, 1]},
            "module": expr,
            "window": [ceiling],
            "output": output,
            "char": p,
        })
        .to_string();
        let job: JobSpec = parse_spec(&text).unwrap();
        let canonical = job.to_json();
        let again = parse_spec(&canonical).unwrap();
        prop_assert_eq!(&again, &job);
        prop_assert_eq!(again.to_json(), canonical);
    }
}
