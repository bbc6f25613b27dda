//! Invariants of Rota-Baxter operators checked over random parameters.

use baxter_core::prelie::{check_pre_lie, prelie_from_rb_weight_minus1};
use baxter_core::rota_baxter::{
    check_rb_algebra, check_rb_bialgebra, check_rb_coalgebra, search_rb_operators, RbSide, SearchOptions,
};
use baxter_core::structures::check_coassociativity;
use baxter_core::yetter_drinfeld::{smash_projection_left, smash_projection_right, YDModuleCoalgebra};
use baxter_core::{builtin, Field, LinearMap, Scalar};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..7, 1i64..5).prop_map(|(n, d)| Field::Rational.parse_scalar(&format!("{n}/{d}")).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn m3(entries: [&Scalar; 9]) -> LinearMap {
    LinearMap::from_entries(Field::Rational, 3, 3, entries.into_iter().cloned().collect()).unwrap()
}

/// `−w·id − P`.
fn complement(p: &LinearMap, w: &Scalar) -> LinearMap {
    LinearMap::identity(p.field(), p.rows()).scale(&-w).sub(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The counitless 3-dimensional families hold for arbitrary rational
    /// parameters, not only integer samples.
    #[test]
    fn counitless_families_hold_over_rationals(a in rational(), b in rational(), c in rational(), d in rational()) {
        let s = builtin("counitless3").unwrap();
        let o = Field::Rational.zero();
        let p1 = m3([&o, &o, &o, &o, &o, &o, &a, &b, &o]);
        let nc = -&c;
        let p2 = m3([&nc, &o, &o, &nc, &nc, &o, &o, &o, &nc]);
        let q = m3([&o, &o, &o, &o, &o, &o, &d, &d, &o]);
        prop_assert!(check_rb_bialgebra(&s, &p1, &q, &o, &d).unwrap().passed());
        prop_assert!(check_rb_bialgebra(&s, &p2, &q, &c, &d).unwrap().passed());
    }

    /// `P` of weight `w` gives `−w·id − P` of weight `w` on both sides.
    #[test]
    fn complement_preserves_weight(c in rational(), d in rational()) {
        let s = builtin("counitless3").unwrap();
        let o = Field::Rational.zero();
        let nc = -&c;
        let p2 = m3([&nc, &o, &o, &nc, &nc, &o, &o, &o, &nc]);
        let q = m3([&o, &o, &o, &o, &o, &o, &d, &d, &o]);
        prop_assert!(check_rb_algebra(&s, &complement(&p2, &c), &c).unwrap().passed());
        prop_assert!(check_rb_coalgebra(&s, &complement(&q, &d), &d).unwrap().passed());
    }

    /// Scaling an operator of weight `w` by `t` gives weight `t·w`.
    #[test]
    fn scaling_scales_the_weight(t in nonzero_rational(), left in any::<bool>()) {
        let ydc = YDModuleCoalgebra::adjoint(&builtin("sweedler4").unwrap()).unwrap();
        let sp = if left { smash_projection_left(&ydc) } else { smash_projection_right(&ydc) }.unwrap();
        let w = Field::Rational.from_i64(-1);
        let scaled = sp.projection.scale(&t);
        prop_assert!(check_rb_coalgebra(&sp.smash, &scaled, &(&t * &w)).unwrap().passed());
    }
}

#[test]
fn smash_projection_complements_have_weight_minus_one() {
    let w = Field::Rational.from_i64(-1);
    for name in ["group:C2", "group:C3", "sweedler4"] {
        let ydc = YDModuleCoalgebra::adjoint(&builtin(name).unwrap()).unwrap();
        for sp in [smash_projection_right(&ydc).unwrap(), smash_projection_left(&ydc).unwrap()] {
            assert!(check_coassociativity(&sp.smash).unwrap().passed(), "{name}");
            let comp = complement(&sp.projection, &w);
            assert!(check_rb_coalgebra(&sp.smash, &comp, &w).unwrap().passed(), "{name}");
            let pl = prelie_from_rb_weight_minus1(&sp.smash, &comp).unwrap();
            assert!(check_pre_lie(pl.field(), pl.dim(), pl.comul()).unwrap().passed(), "{name}");
        }
    }
}

#[test]
fn search_results_are_closed_under_complement() {
    for (name, side) in [
        ("grouplike:2@Fp:3", RbSide::Coalgebra),
        ("divided-power:2@Fp:3", RbSide::Coalgebra),
        ("group:C2@Fp:3", RbSide::Algebra),
        ("dual-group:C2@Fp:2", RbSide::Algebra),
    ] {
        let s = builtin(name).unwrap();
        for w in s.field().elements().unwrap() {
            let r = search_rb_operators(&s, side, &w, &SearchOptions::default()).unwrap();
            for op in &r.operators {
                let comp = complement(op, &w);
                assert!(r.operators.contains(&comp), "{name} {side} weight {w}");
            }
        }
    }
}

#[test]
fn search_is_independent_of_thread_count() {
    let s = builtin("grouplike:3@Fp:2").unwrap();
    let w = s.field().one();
    let run = |threads| {
        let opts = SearchOptions {
            threads,
            ..SearchOptions::default()
        };
        search_rb_operators(&s, RbSide::Coalgebra, &w, &opts).unwrap().operators
    };
    let one = run(1);
    assert!(!one.is_empty());
    for t in [2, 3, 7] {
        assert_eq!(run(t), one, "{t} threads");
    }
}
