//! Property-style invariants: algebraic laws of the exact arithmetic,
//! coordinate round-trips, weight-multiplicity cross-checks, and the
//! Casimir filtration behavior on generalized Verma modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use gvbranch_core::arith::{
    evaluate, parse_poly, poly_gcd, rat_int, MultiPoly, RatFun, Rational, VarSet,
};
use gvbranch_core::fdmod::build_fd_module;
use gvbranch_core::lie::{parse_uea, Gen, UEAElement, Word};
use gvbranch_core::pair::PairContext;
use gvbranch_core::roots::{weyl_dimension, Basis, Weight};
use gvbranch_core::singular::p1_scalar;
use gvbranch_core::verma::GeneralizedVerma;

fn small_poly(vars: &VarSet) -> impl Strategy<Value = MultiPoly> + use<'_> {
    proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..4).prop_map(move |terms| {
        let mut p = MultiPoly::zero(vars);
        for (e1, e2, c) in terms {
            p = p.add(&MultiPoly::monomial(vars, rat_int(c), vec![e1, e2]));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gcd_is_multiplicative_up_to_units(seed in proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 3..9)) {
        let vars = VarSet::new(vec!["x1", "x2"]);
        let chunks: Vec<MultiPoly> = seed
            .chunks(3)
            .map(|ch| {
                let mut p = MultiPoly::zero(&vars);
                for (e1, e2, c) in ch {
                    p = p.add(&MultiPoly::monomial(&vars, rat_int(*c), vec![*e1, *e2]));
                }
                p
            })
            .collect();
        if chunks.len() >= 3 {
            let (a, b, c) = (&chunks[0], &chunks[1], &chunks[2]);
            if !c.is_zero() {
                let lhs = poly_gcd(&a.mul(c), &b.mul(c)).unwrap();
                let rhs = poly_gcd(a, b).unwrap().mul(c).primitive_normalize().0;
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn evaluation_respects_ring_operations(
        fa in proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..4),
        fb in proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..4),
        x in -3i64..4,
        y in -3i64..4,
    ) {
        let vars = VarSet::new(vec!["x1", "x2"]);
        let build = |terms: &[(u32, u32, i64)]| {
            let mut p = MultiPoly::zero(&vars);
            for (e1, e2, c) in terms {
                p = p.add(&MultiPoly::monomial(&vars, rat_int(*c), vec![*e1, *e2]));
            }
            RatFun::from_poly(p)
        };
        let f = build(&fa);
        let g = build(&fb);
        let mut asg = BTreeMap::new();
        asg.insert("x1".to_string(), rat_int(x));
        asg.insert("x2".to_string(), rat_int(y));
        let ev = |h: &RatFun| evaluate(h, &asg).unwrap();
        prop_assert_eq!(ev(&f.add(&g)), ev(&f) + ev(&g));
        prop_assert_eq!(ev(&f.mul(&g)), ev(&f) * ev(&g));
    }

    #[test]
    fn canonical_form_is_idempotent(
        na in proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 1..4),
        da in proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 1..4),
    ) {
        let vars = VarSet::new(vec!["x1", "x2"]);
        let build = |terms: &[(u32, u32, i64)]| {
            let mut p = MultiPoly::zero(&vars);
            for (e1, e2, c) in terms {
                p = p.add(&MultiPoly::monomial(&vars, rat_int(*c), vec![*e1, *e2]));
            }
            p
        };
        let num = build(&na);
        let den = build(&da);
        if !den.is_zero() {
            let f = RatFun::new(num, den).unwrap();
            let again = RatFun::new(f.num().clone(), f.den().clone()).unwrap();
            prop_assert_eq!(f, again);
        }
    }

    #[test]
    fn weight_basis_roundtrip(c1 in -6i64..7, c2 in -6i64..7, c3 in -6i64..7) {
        let ctx = PairContext::builtin_g2_so7().unwrap();
        let rs = ctx.target.system();
        let vars = VarSet::empty();
        let w = Weight::numeric(
            rs.tag(),
            Basis::Fundamental,
            &[rat_int(c1), rat_int(c2), rat_int(c3)],
            &vars,
        );
        let s = rs.convert(&w, Basis::SimpleRoot).unwrap();
        let back = rs.convert(&s, Basis::Fundamental).unwrap();
        prop_assert_eq!(w.coords, back.coords);
        let eps = rs.convert(&s, Basis::Epsilon).unwrap();
        let back2 = rs.convert(&eps, Basis::SimpleRoot).unwrap();
        prop_assert_eq!(s.coords, back2.coords);
    }
}

#[test]
fn small_poly_strategy_compiles() {
    // Keep the helper exercised even though the suites above inline it.
    let vars = VarSet::new(vec!["x1", "x2"]);
    let _ = small_poly(&vars);
}

/// Basis counts equal the Weyl dimension for every dominant weight of
/// coordinate sum at most 2.
#[test]
fn dimension_matches_weyl_formula() {
    let ctx = PairContext::builtin_g2_so7().unwrap();
    let vars = VarSet::empty();
    for a in 0..=2i64 {
        for b in 0..=2i64 {
            for c in 0..=2i64 {
                if a + b + c > 2 {
                    continue;
                }
                let lam = Weight::numeric(
                    ctx.target.system().tag(),
                    Basis::Fundamental,
                    &[rat_int(a), rat_int(b), rat_int(c)],
                    &vars,
                );
                let module = build_fd_module(ctx.target.clone(), &[0, 1, 2], &lam).unwrap();
                let dim = weyl_dimension(ctx.target.system(), &lam).unwrap();
                assert_eq!(rat_int(module.dim() as i64), dim, "{a} {b} {c}");
            }
        }
    }
}

/// The embedded Casimir is central: it commutes with the action of each
/// embedded simple generator on low-degree module vectors.
#[test]
fn casimir_commutes_on_module_vectors() {
    let ctx = PairContext::builtin_g2_so7().unwrap();
    let e = &ctx.embedding;
    let lam = ctx.parse_lambda("x1*w1+w2", &BTreeMap::new()).unwrap();
    let gvm = GeneralizedVerma::new(ctx.parabolic(&[1, 0, 0]).unwrap(), &lam).unwrap();
    let vars = ctx.vars.clone();
    let c1 = gvbranch_core::lie::casimir_quadratic(e.source(), &vars).unwrap();
    let ic1 = e.embed_uea(&c1);
    // A few low-degree vectors.
    let seeds = [
        "g_{-9}",
        "g_{-4}g_{-2}",
        "g_{-1}g_{-3}g_{-2}",
        "g_{-6}g_{-2}g_{-1}",
    ];
    for s in seeds {
        let u = parse_uea(&vars, s).unwrap();
        let v = gvm.act(&u, &gvm.highest_vector());
        for bar_gen in [Gen::E(1), Gen::E(2), Gen::F(1), Gen::F(2)] {
            let mut img = UEAElement::zero(&vars);
            for (idx, c) in e.image_of(bar_gen).iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    img.insert(
                        Word::single(e.target().gen_of(idx)),
                        RatFun::constant(&vars, c.clone()),
                    );
                }
            }
            let a = gvm.act(&ic1, &gvm.act(&img, &v));
            let b = gvm.act(&img, &gvm.act(&ic1, &v));
            assert_eq!(a, b, "casimir fails to commute with {bar_gen:?} on {s}");
        }
    }
}

/// The Casimir acts on a top-level singular constituent by its scalar,
/// modulo the filtration piece generated by the strictly lower-level part
/// of the inducing module.
#[test]
fn casimir_eigenvalue_modulo_lower_levels() {
    let ctx = PairContext::builtin_g2_so7().unwrap();
    let e = &ctx.embedding;
    let lam = ctx.parse_lambda("x1*w1+w2", &BTreeMap::new()).unwrap();
    let gvm = GeneralizedVerma::new(ctx.parabolic(&[1, 0, 0]).unwrap(), &lam).unwrap();
    let bar = gvbranch_core::verma::induced_bar_parabolic(gvm.parabolic(), e).unwrap();
    let cons = gvbranch_core::fdmod::decompose_over_bar_levi(gvm.inducing(), e, &bar.levi_simple())
        .unwrap();
    let c1 = gvbranch_core::lie::casimir_quadratic(e.source(), &ctx.vars).unwrap();
    let ic1 = e.embed_uea(&c1);
    // Lowering images of the subalgebra as 1-letter elements.
    let lowering: Vec<UEAElement> = (1..=e.source().num_positive())
        .map(|k| {
            let mut u = UEAElement::zero(&ctx.vars);
            for (idx, c) in e.image_of(Gen::F(k)).iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    u.insert(
                        Word::single(e.target().gen_of(idx)),
                        RatFun::constant(&ctx.vars, c.clone()),
                    );
                }
            }
            u
        })
        .collect();
    for c in &cons {
        let mu_drop = c.offset[0];
        let fd = gvbranch_core::fdmod::fd_singular_vectors(
            gvm.inducing(),
            e,
            &bar.levi_simple(),
            &c.offset,
        )
        .unwrap();
        let p1 = p1_scalar(e, &c.mu).unwrap();
        for vecc in fd {
            let mut v = gvbranch_core::verma::VermaVector::zero();
            for (sidx, coeff) in &vecc {
                v = v.add(&gvm.top_vector(*sidx, coeff.clone()));
            }
            let acted = gvm.act(&ic1, &v);
            let diff = acted.sub(&v.scale(&p1));
            if diff.is_zero() {
                continue;
            }
            // Span Q_{m-1} restricted to the residue's weight window:
            // start from the degree-zero vectors over inducing components
            // of strictly lower level and close under the lowering images
            // within the window.
            let mut basis: Vec<gvbranch_core::verma::VermaVector> = Vec::new();
            for (sidx, b) in gvm.inducing().basis().iter().enumerate() {
                let drop = e.pr_coords(&b.offset)[0];
                if drop < mu_drop {
                    let one = RatFun::one(&ctx.vars);
                    basis.push(gvm.top_vector(sidx, one));
                }
            }
            let height_cap = diff
                .terms
                .keys()
                .map(|idx| e.pr_coords(&gvm.offset_of(idx)).iter().sum::<i64>())
                .max()
                .unwrap_or(0);
            let within = |w: &gvbranch_core::verma::VermaVector| -> bool {
                w.terms.keys().all(|idx| {
                    let off = e.pr_coords(&gvm.offset_of(idx));
                    off[0] <= mu_drop && off.iter().sum::<i64>() <= height_cap
                })
            };
            let mut frontier = basis.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for f in &frontier {
                    for low in &lowering {
                        let g = gvm.act(low, f);
                        if !g.is_zero() && within(&g) && !in_span_vv(&g, &basis) {
                            basis.push(g.clone());
                            next.push(g);
                        }
                    }
                }
                frontier = next;
            }
            assert!(
                in_span_vv(&diff, &basis),
                "residue at offset {:?} escapes the lower filtration piece",
                c.offset
            );
        }
    }
}

/// Span membership for module vectors over the rational-function field.
fn in_span_vv(
    target: &gvbranch_core::verma::VermaVector,
    basis: &[gvbranch_core::verma::VermaVector],
) -> bool {
    use gvbranch_core::arith::{nullspace, ExactMatrix};
    if basis.is_empty() {
        return target.is_zero();
    }
    let vars = target
        .terms
        .values()
        .next()
        .map(|c| c.vars().clone())
        .unwrap_or_else(VarSet::empty);
    let mut keys: Vec<gvbranch_core::verma::GvmIndex> = Vec::new();
    for v in basis.iter().chain(std::iter::once(target)) {
        for k in v.terms.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    let cols = basis.len() + 1;
    let mut entries = Vec::with_capacity(keys.len() * cols);
    for k in &keys {
        for v in basis {
            entries.push(v.terms.get(k).cloned().unwrap_or_else(|| RatFun::zero(&vars)));
        }
        entries.push(
            target
                .terms
                .get(k)
                .cloned()
                .unwrap_or_else(|| RatFun::zero(&vars)),
        );
    }
    let m = ExactMatrix::new(keys.len(), cols, entries);
    nullspace(&m).iter().any(|k| !k.last().unwrap().is_zero())
}

/// Branching rows for the trivial and full-parabolic edge cases.
#[test]
fn branch_edge_cases() {
    use gvbranch_core::verma::{branch_up_to_degree, Mult};
    let ctx = PairContext::builtin_g2_so7().unwrap();
    let e = &ctx.embedding;
    // Full parabolic, lambda = w3: finite-dimensional branching {0, psi1}.
    let p = ctx.parabolic(&[0, 0, 0]).unwrap();
    let lam = ctx.parse_lambda("w3", &BTreeMap::new()).unwrap();
    let rows = branch_up_to_degree(&p, e, &lam, 4).unwrap();
    let offs: Vec<Vec<i64>> = rows.iter().map(|r| r.offset.clone()).collect();
    assert_eq!(offs, vec![vec![0, 0], vec![2, 1]]);
    assert!(rows.iter().all(|r| r.mult == Mult::Finite(1)));

    // Trivial weight over the full parabolic: a single row at zero.
    let zero = ctx.parse_lambda("0*w1", &BTreeMap::new()).unwrap();
    let rows = branch_up_to_degree(&p, e, &zero, 2).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].offset, vec![0, 0]);

    // (0,0,1) with cutoff 0 keeps both inducing constituents.
    let p = ctx.parabolic(&[0, 0, 1]).unwrap();
    let mut subs = BTreeMap::new();
    subs.insert("x3".to_string(), rat_int(10));
    let lam = ctx.parse_lambda("w2+x3*w3", &subs).unwrap();
    let rows = branch_up_to_degree(&p, e, &lam, 0).unwrap();
    assert_eq!(rows.len(), 2);
    // mu in {11 psi1, 10 psi1 + psi2}: offsets below pr(lambda).
    let offs: Vec<Vec<i64>> = rows.iter().map(|r| r.offset.clone()).collect();
    assert!(offs.contains(&vec![1, 1]));
    assert!(offs.contains(&vec![0, 0]));
}
