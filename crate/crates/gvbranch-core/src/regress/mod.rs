//! Regression suites: machine-checked reproductions of the built-in pair's
//! structure constants, inducing-module tables, branching data, singular
//! vectors and nonvanishing certificates. The acceptance test target and the
//! command-line `regress` subcommand both run these.

pub mod data;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{
    nullspace, parse_poly, parse_rational, rat_int, ExactMatrix, MultiPoly, RatFun, Rational,
    VarSet,
};
use crate::error::{Error, Result};
use crate::fdmod::{
    build_fd_module, decompose_over_bar_levi, fd_singular_vectors, pbw_offset, FiniteModule,
    PbwVec,
};
use crate::lie::{
    casimir_quadratic, generate_subalgebra, normal_form, parse_uea, Gen, UEAElement,
};
use crate::pair::PairContext;
use crate::roots::{weyl_dimension, Basis, Weight};
use crate::singular::{p1_scalar, shapovalov_certificate, strong_condition_b, top_level_singular_vectors, verify_singular};
use crate::verma::{
    branch_up_to_degree, induced_bar_parabolic, kostant_partition, quasipoly_degree_bound,
    quotient_weights, truncated_bar_gvm_character, truncated_gvm_character, GeneralizedVerma,
    Mult, PartitionContext, PartitionValue,
};

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CaseResult {
    fn ok(name: impl Into<String>) -> Self {
        CaseResult { name: name.into(), passed: true, detail: String::new() }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CaseResult { name: name.into(), passed: false, detail: detail.into() }
    }
}

pub const SUITES: &[&str] = &["structure", "fd-tables", "branching", "singular", "certificates"];

pub fn run_suite(name: &str) -> Result<Vec<CaseResult>> {
    match name {
        "structure" => suite_structure(),
        "fd-tables" => suite_fd_tables(),
        "branching" => suite_branching(),
        "singular" => suite_singular(),
        "certificates" => suite_certificates(),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s)?);
            }
            Ok(out)
        }
        other => Err(Error::Usage(format!(
            "unknown suite `{other}`; expected one of structure, fd-tables, branching, singular, certificates, all"
        ))),
    }
}

fn check(out: &mut Vec<CaseResult>, name: &str, cond: bool, detail: String) {
    if cond {
        out.push(CaseResult::ok(name));
    } else {
        out.push(CaseResult::fail(name, detail));
    }
}

// ---------------------------------------------------------------- structure

fn suite_structure() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    let ctx = PairContext::builtin_g2_so7()?;
    let e = &ctx.embedding;
    let so7 = e.target();
    let g2 = e.source();
    let vars = VarSet::empty();

    // Subalgebra generation from the embedding seeds.
    let add = |a: Gen, b: Gen| -> Vec<Rational> {
        let mut v = so7.gen_vector(a);
        let w = so7.gen_vector(b);
        for (x, y) in v.iter_mut().zip(&w) {
            *x += y.clone();
        }
        v
    };
    let seeds = vec![
        add(Gen::E(1), Gen::E(3)),
        add(Gen::F(1), Gen::F(3)),
        so7.gen_vector(Gen::E(2)),
        so7.gen_vector(Gen::F(2)),
    ];
    let rep = generate_subalgebra(so7, &seeds)?;
    check(
        &mut out,
        "structure: generated subalgebra is 14-dimensional of the exceptional type",
        rep.dim() == 14 && rep.iso_type.as_deref() == Some("G2"),
        format!("dim {} type {:?}", rep.dim(), rep.iso_type),
    );

    // Projection of the fundamental weights.
    let psi: Vec<Weight> = (0..2)
        .map(|i| {
            g2.system()
                .convert(&g2.system().fundamental_weight(i, &vars), Basis::SimpleRoot)
                .unwrap()
        })
        .collect();
    let mut pr_ok = true;
    for (i, expect) in [(0usize, 0usize), (1, 1), (2, 0)] {
        let w = so7.system().fundamental_weight(i, &vars);
        if e.pr_weight(&w)? != psi[expect] {
            pr_ok = false;
        }
    }
    check(
        &mut out,
        "structure: pr maps the fundamental weights as in the inclusion data",
        pr_ok,
        "pr(omega_i) mismatch".into(),
    );

    let iota2 = e.iota_weight(&g2.system().positive_root_weight(2, &vars))?;
    check(
        &mut out,
        "structure: iota of the long simple root is three times eta2",
        iota2.numeric_coords() == Some(vec![rat_int(0), rat_int(3), rat_int(0)]),
        format!("{iota2}"),
    );
    check(
        &mut out,
        "structure: Dynkin index is 3 in the fixed normalizations",
        e.dynkin_index() == &rat_int(3),
        format!("{:?}", e.dynkin_index()),
    );

    // Casimir regressions.
    let c1 = casimir_quadratic(g2, &vars)?;
    let c1_36 = normal_form(g2, &c1.scale(&RatFun::constant(&vars, rat_int(36))));
    let printed = normal_form(g2, &parse_uea(&vars, data::CASIMIR_36_G2)?);
    check(
        &mut out,
        "structure: 36 x quadratic Casimir matches the printed expansion",
        c1_36 == printed,
        format!("got {c1_36}"),
    );
    let ic1_12 = normal_form(
        so7,
        &e.embed_uea(&c1).scale(&RatFun::constant(&vars, rat_int(12))),
    );
    let printed = normal_form(so7, &parse_uea(&vars, data::CASIMIR_12_I)?);
    check(
        &mut out,
        "structure: 12 x embedded Casimir matches the printed expansion",
        ic1_12 == printed,
        format!("got {ic1_12}"),
    );

    // Centrality: [c1, g] normal-orders to zero for the simple generators.
    let mut central = true;
    for g in [Gen::E(1), Gen::E(2), Gen::F(1), Gen::F(2)] {
        let gu = UEAElement::from_gen(&vars, g);
        let comm = c1.mul(&gu).sub(&gu.mul(&c1));
        if !normal_form(g2, &comm).is_zero() {
            central = false;
        }
    }
    check(
        &mut out,
        "structure: the quadratic Casimir commutes with the simple generators",
        central,
        "nonzero commutator".into(),
    );

    // Exhaustive Jacobi checks.
    check(
        &mut out,
        "structure: Jacobi identity holds on all basis triples of both algebras",
        so7.check_jacobi().is_ok() && g2.check_jacobi().is_ok(),
        "Jacobi failure".into(),
    );
    Ok(out)
}

// ---------------------------------------------------------------- fd-tables

/// Expands a digit word like "2332" (1-based simple indices, leftmost acts
/// last) in the module's Verma cover.
fn expand_digits(module: &FiniteModule, digits: &str) -> PbwVec {
    let letters: Vec<usize> = digits
        .chars()
        .map(|c| c.to_digit(10).unwrap() as usize - 1)
        .collect();
    module.word_to_pbw(&letters)
}

/// Parses a combination like "-1/3m4+m5" against the given expansions of the
/// table monomials and returns the combined PBW vector.
fn combo_expansion(
    ctx: &PairContext,
    _module: &FiniteModule,
    combo: &str,
    expansions: &[PbwVec],
) -> Result<PbwVec> {
    let mut outv: PbwVec = BTreeMap::new();
    if combo == "0" {
        return Ok(outv);
    }
    let chars: Vec<char> = combo.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = Rational::from_integer(1.into());
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-' || chars[i] == ' ') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i] != 'm' {
            i += 1;
        }
        let coeff_text: String = chars[start..i].iter().collect();
        let coeff = if coeff_text.trim().is_empty() {
            Rational::from_integer(1.into())
        } else {
            parse_rational(coeff_text.trim())?
        };
        if i >= chars.len() {
            return Err(Error::Parse(format!("bad basis combination `{combo}`")));
        }
        i += 1;
        let dstart = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let idx: usize = chars[dstart..i]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse(format!("bad index in `{combo}`")))?;
        let c = sign * coeff;
        for (m, v) in &expansions[idx - 1] {
            let entry = outv.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c.clone() * v.clone();
        }
    }
    outv.retain(|_, v| !v.is_zero());
    let _ = &ctx.vars;
    Ok(outv)
}

/// True when the vector vanishes in the irreducible quotient; the terms are
/// grouped by weight space first.
fn zero_mod_kernel(module: &FiniteModule, v: &PbwVec) -> Result<bool> {
    let mut groups: BTreeMap<Vec<i64>, PbwVec> = BTreeMap::new();
    for (m, c) in v {
        if c.is_zero() {
            continue;
        }
        let off = pbw_offset(module.algebra().system().positive_roots(), m);
        groups.entry(off).or_default().insert(m.clone(), c.clone());
    }
    for (off, part) in groups {
        let space = module.space(&off)?;
        if !space.in_kernel(&part) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Echelon insert over dense rational rows; false if dependent.
fn echelon_insert(ech: &mut Vec<Vec<Rational>>, mut v: Vec<Rational>) -> bool {
    for row in ech.iter() {
        let piv = row.iter().position(|c| !c.is_zero()).unwrap();
        if !v[piv].is_zero() {
            let f = v[piv].clone() / row[piv].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= f.clone() * y.clone();
            }
        }
    }
    if v.iter().all(|c| c.is_zero()) {
        return false;
    }
    ech.push(v);
    ech.sort_by_key(|r| r.iter().position(|c| !c.is_zero()).unwrap());
    true
}

fn suite_fd_tables() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    let ctx = PairContext::builtin_g2_so7()?;
    let e = &ctx.embedding;

    // Monomial bases and raising actions of the inducing modules. The
    // printed rows are verified as identities in the module: the listed
    // monomials are expanded exactly, checked to be a basis modulo the
    // Shapovalov kernel, and the tabulated raising actions are reproduced.
    for table in data::MONOMIAL_TABLES {
        let lam = ctx.parse_lambda(table.lambda, &BTreeMap::new())?;
        let module = build_fd_module(ctx.target.clone(), &[1, 2], &lam)?;
        let name = format!("fd-tables: monomial basis for lambda = {}", table.lambda);
        let mut ok = module.dim() == table.rows.len();
        let mut detail = if ok { String::new() } else { format!("dim {}", module.dim()) };
        let expansions: Vec<PbwVec> = table
            .rows
            .iter()
            .map(|(word, _, _)| expand_digits(&module, word))
            .collect();
        // Independence modulo the kernel, one weight space at a time.
        let mut by_offset: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (i, v) in expansions.iter().enumerate() {
            if v.is_empty() {
                ok = false;
                detail = format!("row {} expands to zero", i + 1);
                continue;
            }
            let off = pbw_offset(ctx.target.system().positive_roots(), v.keys().next().unwrap());
            by_offset.entry(off).or_default().push(i);
        }
        for (off, rows) in &by_offset {
            let space = module.space(off)?;
            if space.basis_ids.len() != rows.len() {
                ok = false;
                detail = format!("weight {off:?} lists {} rows, space has {}", rows.len(), space.basis_ids.len());
                continue;
            }
            let mut ech: Vec<Vec<Rational>> = space.kernel.clone();
            for &i in rows {
                let dense: Vec<Rational> = space
                    .pbw
                    .iter()
                    .map(|m| expansions[i].get(m).cloned().unwrap_or_else(Rational::zero))
                    .collect();
                if !echelon_insert(&mut ech, dense) {
                    ok = false;
                    detail = format!("row {} dependent at weight {off:?}", i + 1);
                }
            }
        }
        check(&mut out, &name, ok, detail);

        // Raising actions row by row.
        let name = format!("fd-tables: raising actions for lambda = {}", table.lambda);
        let mut ok = true;
        let mut detail = String::new();
        for (i, (_, a2, a3)) in table.rows.iter().enumerate() {
            for (k, action) in [(2usize, a2), (3usize, a3)] {
                let image = module.act_e(k, &expansions[i]);
                let expect = combo_expansion(&ctx, &module, action, &expansions)?;
                let mut diff = image;
                for (m, c) in expect {
                    let e = diff.entry(m).or_insert_with(Rational::zero);
                    *e -= c;
                }
                diff.retain(|_, c| !c.is_zero());
                if !zero_mod_kernel(&module, &diff)? {
                    ok = false;
                    detail = format!("g{k} on m{} differs", i + 1);
                }
            }
        }
        check(&mut out, &name, ok, detail);

        // The two smallest tables also agree with the canonical basis
        // index for index, which pins the basis convention itself.
        if table.lambda == "x1*w1+w2" || table.lambda == "x1*w1+w3" {
            let name = format!("fd-tables: canonical basis indexing for lambda = {}", table.lambda);
            let mut ok = true;
            for (i, (word, _, _)) in table.rows.iter().enumerate() {
                let expect: Vec<usize> = word
                    .chars()
                    .map(|c| c.to_digit(10).unwrap() as usize - 1)
                    .collect();
                if module.basis()[i].word != expect {
                    ok = false;
                }
            }
            check(&mut out, &name, ok, "index mismatch".into());
        }
    }

    // Constituents, inducing singular vectors and Harish-Chandra scalars.
    for table in data::HWV_P1_TABLES {
        let lam = ctx.parse_lambda(table.lambda, &BTreeMap::new())?;
        let module = build_fd_module(ctx.target.clone(), &[1, 2], &lam)?;
        let mono = data::MONOMIAL_TABLES
            .iter()
            .find(|t| t.lambda == table.lambda)
            .expect("matching monomial table");
        let expansions: Vec<PbwVec> = mono
            .rows
            .iter()
            .map(|(word, _, _)| expand_digits(&module, word))
            .collect();
        let bar_levi = vec![1usize]; // alpha2 spans the bar Levi of (1,0).
        let cons = decompose_over_bar_levi(&module, e, &bar_levi)?;
        let pr_lambda = e.pr_weight(&lam)?;
        let name = format!("fd-tables: constituents and p1 rows for lambda = {}", table.lambda);
        let mut ok = cons.iter().map(|c| c.multiplicity).sum::<u64>() as usize
            == table.rows.len();
        let mut detail = String::new();
        for row in table.rows {
            let mu_simple: Vec<RatFun> = [row.mu_alpha.0, row.mu_alpha.1]
                .iter()
                .map(|s| Ok(RatFun::from_poly(parse_poly(&ctx.vars, s)?)))
                .collect::<Result<_>>()?;
            let mu = Weight::new(e.source().system().tag(), Basis::SimpleRoot, mu_simple);
            let off = pr_lambda.sub(&e.source().system().convert(&mu, Basis::SimpleRoot)?)?;
            let off: Vec<i64> = match off.numeric_coords() {
                Some(v) => v
                    .iter()
                    .map(|c| i64::try_from(c.to_integer()).unwrap())
                    .collect(),
                None => {
                    ok = false;
                    detail = "mu offset not numeric".into();
                    break;
                }
            };
            let Some(c) = cons.iter().find(|c| c.offset == off) else {
                ok = false;
                detail = format!("missing constituent at offset {off:?}");
                break;
            };
            let p1 = p1_scalar(e, &c.mu)?;
            let expect = RatFun::from_poly(parse_poly(&ctx.vars, row.p1)?);
            if p1 != expect {
                ok = false;
                detail = format!("p1 mismatch at offset {off:?}: {p1}");
                break;
            }
            // The printed inducing singular vector (a combination of the
            // table monomials) is annihilated by the bar-Levi raising image
            // and carries the right bar weight.
            let combo = combo_expansion(&ctx, &module, row.vector, &expansions)?;
            if combo.is_empty() || zero_mod_kernel(&module, &combo)? {
                ok = false;
                detail = format!("printed vector at {off:?} vanishes");
                break;
            }
            let raised = module.act_e(2, &combo);
            if !zero_mod_kernel(&module, &raised)? {
                ok = false;
                detail = format!("printed vector at {off:?} is not singular");
                break;
            }
            let word_off = pbw_offset(
                ctx.target.system().positive_roots(),
                combo.keys().next().unwrap(),
            );
            if e.pr_coords(&word_off) != off {
                ok = false;
                detail = format!("printed vector at {off:?} has wrong bar weight");
                break;
            }
        }
        check(&mut out, &name, ok, detail);
    }

    // Finite-dimensional decompositions over the full subalgebra.
    for row in data::FD_DECOMPOSITIONS {
        let lam = ctx.parse_lambda(row.lambda, &BTreeMap::new())?;
        let module = build_fd_module(ctx.target.clone(), &[0, 1, 2], &lam)?;
        let name = format!("fd-tables: decomposition of the {}-dimensional module {}", row.dim, row.lambda);
        let mut ok = module.dim() as u64 == row.dim
            && weyl_dimension(ctx.target.system(), &lam)? == rat_int(row.dim as i64);
        let mut detail = if ok { String::new() } else { format!("dim {}", module.dim()) };
        let cons = decompose_over_bar_levi(&module, e, &[0, 1])?;
        if cons.len() != row.constituents.len() {
            ok = false;
            detail = format!("{} constituents", cons.len());
        }
        let mut mass = 0u64;
        for c in row.constituents {
            let found = cons.iter().any(|got| {
                let fund = e
                    .source()
                    .system()
                    .convert(&got.mu, Basis::Fundamental)
                    .unwrap();
                fund.numeric_coords()
                    == Some(vec![rat_int(c.mu.0), rat_int(c.mu.1)])
                    && got.multiplicity == 1
            });
            if !found {
                ok = false;
                detail = format!("missing constituent {:?}", c.mu);
            }
            let dim_mu = weyl_dimension(
                e.source().system(),
                &Weight::numeric(
                    e.source().system().tag(),
                    Basis::Fundamental,
                    &[rat_int(c.mu.0), rat_int(c.mu.1)],
                    &ctx.vars,
                ),
            )?;
            if dim_mu != rat_int(c.dim as i64) {
                ok = false;
                detail = format!("constituent {:?} dimension mismatch", c.mu);
            }
            mass += c.dim;
        }
        if mass != row.dim {
            ok = false;
            detail = format!("constituent dimensions sum to {mass}");
        }
        check(&mut out, &name, ok, detail);

        // Printed singular vectors are annihilated by the raising images.
        let name = format!("fd-tables: printed singular vectors annihilated in {}", row.lambda);
        let mut ok = true;
        let mut detail = String::new();
        for c in row.constituents {
            if c.vector == "1" {
                continue;
            }
            let u = parse_uea(&ctx.vars, c.vector)?;
            // Expand each word (pure lowering, simple letters) and combine.
            let mut vec: PbwVec = BTreeMap::new();
            for (w, coeff) in u.terms() {
                let letters: Vec<usize> = w
                    .letters()
                    .map(|g| match g {
                        Gen::F(k) => k - 1,
                        _ => usize::MAX,
                    })
                    .collect();
                if letters.iter().any(|&l| l == usize::MAX) {
                    ok = false;
                    detail = "non-lowering letter in printed fd vector".into();
                    break;
                }
                let expansion = module.word_to_pbw(&letters);
                let c0 = coeff.as_rational().expect("rational coefficients");
                for (mono, val) in expansion {
                    let entry = vec.entry(mono).or_insert_with(Rational::zero);
                    *entry += c0.clone() * val;
                }
            }
            vec.retain(|_, v| !v.is_zero());
            if vec.is_empty() {
                ok = false;
                detail = format!("printed vector for {:?} expands to zero", c.mu);
                break;
            }
            // Check the expansion is nonzero in the quotient and annihilated.
            let off = pbw_offset(
                ctx.target.system().positive_roots(),
                vec.keys().next().unwrap(),
            );
            let space = module.space(&off)?;
            if space.in_kernel(&vec) {
                ok = false;
                detail = format!("printed vector for {:?} vanishes in the module", c.mu);
                break;
            }
            for img in [vec![1usize, 3], vec![2]] {
                // i(gbar_1) = E1 + E3, i(gbar_2) = E2.
                let mut raised: PbwVec = BTreeMap::new();
                for &k in &img {
                    for (mono, val) in module.act_e(k, &vec) {
                        let entry = raised.entry(mono).or_insert_with(Rational::zero);
                        *entry += val;
                    }
                }
                raised.retain(|_, v| !v.is_zero());
                if !zero_mod_kernel(&module, &raised)? {
                    ok = false;
                    detail = format!("raising image of {:?} vector survives", c.mu);
                    break;
                }
            }
        }
        check(&mut out, &name, ok, detail);
    }

    // Decomposition tables of the remaining parabolics.
    for row in data::DECOMP_TABLES {
        let p = ctx.parabolic(&row.crossings)?;
        let bar = induced_bar_parabolic(&p, e)?;
        let lam = ctx.parse_lambda(row.lambda, &BTreeMap::new())?;
        let module = build_fd_module(ctx.target.clone(), &p.levi_simple(), &lam)?;
        let cons = decompose_over_bar_levi(&module, e, &bar.levi_simple())?;
        let name = format!(
            "fd-tables: decomposition over parabolic {:?} of {}",
            row.crossings, row.lambda
        );
        let mut ok = cons.iter().map(|c| c.multiplicity).sum::<u64>() as usize == row.mus.len();
        let mut detail = if ok {
            String::new()
        } else {
            format!("{} constituents", cons.len())
        };
        for (c1s, c2s) in row.mus {
            let expect = vec![
                RatFun::from_poly(parse_poly(&ctx.vars, c1s)?),
                RatFun::from_poly(parse_poly(&ctx.vars, c2s)?),
            ];
            let found = cons.iter().any(|got| {
                e.source()
                    .system()
                    .convert(&got.mu, Basis::Fundamental)
                    .map(|f| f.coords == expect)
                    .unwrap_or(false)
            });
            if !found {
                ok = false;
                detail = format!("missing constituent ({c1s}, {c2s})");
            }
        }
        // Strong Condition B inequalities, as sets up to overall sign.
        let weights: Vec<Weight> = cons.iter().map(|c| c.mu.clone()).collect();
        let rep = strong_condition_b(e, &weights)?;
        let got: Vec<MultiPoly> = rep.inequalities;
        if got.len() != row.strong_b.len() {
            ok = false;
            detail = format!("{} inequalities, expected {}", got.len(), row.strong_b.len());
        } else {
            for s in row.strong_b {
                let p = parse_poly(&ctx.vars, s)?;
                let (pn, _) = p.primitive_normalize();
                let hit = got.iter().any(|g| {
                    let (gn, _) = g.primitive_normalize();
                    gn == pn
                });
                if !hit {
                    ok = false;
                    detail = format!("missing inequality {s}");
                }
            }
        }
        check(&mut out, &name, ok, detail);
    }
    Ok(out)
}

// ---------------------------------------------------------------- branching

fn suite_branching() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    let ctx = PairContext::builtin_g2_so7()?;
    let e = &ctx.embedding;

    // Condition census over all 8 parabolics.
    let compatible_set = [[1u8, 0, 1], [0, 1, 0], [1, 1, 1], [0, 0, 0]];
    let finite_set = [[1u8, 0, 0], [0, 0, 0]];
    let mut ok = true;
    let mut detail = String::new();
    for bits in 0..8u8 {
        let cr = [bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
        let p = ctx.parabolic(&cr)?;
        let rep = quotient_weights(&p, e)?;
        let expect_compat = compatible_set.contains(&cr);
        let expect_finite = finite_set.contains(&cr);
        if !rep.weakly_compatible
            || !rep.condition_a
            || rep.compatible != expect_compat
            || rep.finite_branching != expect_finite
            || rep.zero_in_c != rep.zero_in_c_prime
        {
            ok = false;
            detail = format!("census differs at {cr:?}");
        }
    }
    check(
        &mut out,
        "branching: all parabolics weakly compatible; the four compatible and two finite ones identified",
        ok,
        detail,
    );

    // Partition-function oracle agreement to depth 8 on every X in play.
    let mut xs: Vec<Vec<Vec<i64>>> = Vec::new();
    for cr in [[1u8, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]] {
        let p = ctx.parabolic(&cr)?;
        let rep = quotient_weights(&p, e)?;
        if !rep.quotient_weights.is_empty() {
            xs.push(rep.quotient_weights);
        }
    }
    let mut ok = true;
    let mut detail = String::new();
    for x in &xs {
        let ctxp = PartitionContext::new(x.clone());
        for a in 0..=8i64 {
            for b in 0..=8i64 {
                if a + b > 8 {
                    continue;
                }
                let arg = vec![-a, -b];
                let dp = match kostant_partition(&ctxp, &arg, 16) {
                    PartitionValue::Finite(v) => v,
                    PartitionValue::Infinite => {
                        ok = false;
                        detail = "unexpected infinity".into();
                        0
                    }
                };
                let naive = crate::verma::kostant_partition_naive(x, &arg, 8);
                if dp != naive {
                    ok = false;
                    detail = format!("X={x:?} arg={arg:?}: {dp} vs {naive}");
                }
            }
        }
    }
    check(
        &mut out,
        "branching: partition function agrees with exhaustive enumeration to depth 8",
        ok,
        detail,
    );

    // m = n on the finite parabolic for the appendix weights.
    let mut ok = true;
    let mut detail = String::new();
    for table in data::HWV_P1_TABLES {
        let p = ctx.parabolic(&[1, 0, 0])?;
        let lam = ctx.parse_lambda(table.lambda, &BTreeMap::new())?;
        let rows = branch_up_to_degree(&p, e, &lam, 4)?;
        let module = build_fd_module(ctx.target.clone(), &[1, 2], &lam)?;
        let cons = decompose_over_bar_levi(&module, e, &[1])?;
        let mut m_map: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for r in &rows {
            let m = match r.mult {
                Mult::Finite(v) => v,
                Mult::Infinite => u64::MAX,
            };
            m_map.insert(r.offset.clone(), m);
        }
        let n_map: BTreeMap<Vec<i64>, u64> =
            cons.iter().map(|c| (c.offset.clone(), c.multiplicity)).collect();
        if m_map != n_map {
            ok = false;
            detail = format!("lambda {}: m {m_map:?} vs n {n_map:?}", table.lambda);
        }
    }
    check(
        &mut out,
        "branching: multiplicities match the inducing decomposition on the finite parabolic",
        ok,
        detail,
    );

    // Truncated character identity for three parabolics, five weights each.
    let families: Vec<([u8; 3], Vec<&str>)> = vec![
        ([1, 0, 0], vec!["10w1", "10w1+w2", "10w1+w3", "10w1+2w2", "10w1+w2+w3"]),
        ([0, 1, 0], vec!["10w2", "10w2+w3", "w1+10w2", "10w2+2w3", "w1+10w2+w3"]),
        ([0, 0, 1], vec!["10w3", "w2+10w3", "w1+10w3", "2w2+10w3", "w1+w2+10w3"]),
    ];
    let depth = 4i64;
    let mut ok = true;
    let mut detail = String::new();
    for (cr, lams) in &families {
        let p = ctx.parabolic(cr)?;
        let bar = induced_bar_parabolic(&p, e)?;
        for ls in lams {
            let lam = ctx.parse_lambda(ls, &BTreeMap::new())?;
            let lhs = truncated_gvm_character(&p, e, &lam, depth)?;
            let rows = branch_up_to_degree(&p, e, &lam, 4)?;
            let mut rhs: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
            for r in &rows {
                let m = match r.mult {
                    Mult::Finite(v) => v,
                    Mult::Infinite => {
                        ok = false;
                        detail = format!("unexpected infinite multiplicity at {ls}");
                        continue;
                    }
                };
                let part = truncated_bar_gvm_character(&bar, e, &r.mu, &r.offset, depth)?;
                for (off, v) in part {
                    *rhs.entry(off).or_insert(0) += m * v;
                }
            }
            if lhs != rhs {
                ok = false;
                detail = format!("character identity fails for {cr:?} lambda {ls}");
            }
        }
    }
    check(
        &mut out,
        "branching: truncated character identity holds to depth 4 on three parabolics",
        ok,
        detail,
    );

    // Corollary families: branch lists with all multiplicities.
    let mut ok = true;
    let mut detail = String::new();
    for fam in data::COROLLARY_FAMILIES {
        let p = ctx.parabolic(&[1, 0, 0])?;
        let mut subs = BTreeMap::new();
        subs.insert("x1".to_string(), rat_int(10));
        let lam = ctx.parse_lambda(fam.lambda, &subs)?;
        let rows = branch_up_to_degree(&p, e, &lam, 6)?;
        let mut got: Vec<(i64, i64)> = Vec::new();
        for r in &rows {
            let m = match r.mult {
                Mult::Finite(v) => v,
                Mult::Infinite => 0,
            };
            for _ in 0..m {
                got.push((r.offset[0], r.offset[1]));
            }
        }
        got.sort_unstable();
        let mut expect = fam.mu_offsets.to_vec();
        expect.sort_unstable();
        if got != expect {
            ok = false;
            detail = format!("family {}: got {got:?}", fam.lambda);
        }
    }
    check(
        &mut out,
        "branching: the six corollary families list exactly the printed summands",
        ok,
        detail,
    );

    // Direct-sum dimension comparison through degree 6 at x1 = 10.
    let mut subs = BTreeMap::new();
    subs.insert("x1".to_string(), rat_int(10));
    let lam = ctx.parse_lambda("x1*w1+w2", &subs)?;
    let p = ctx.parabolic(&[1, 0, 0])?;
    let bar = induced_bar_parabolic(&p, e)?;
    let gvm = GeneralizedVerma::new(ctx.parabolic(&[1, 0, 0])?, &lam)?;
    let rows = branch_up_to_degree(&p, e, &lam, 6)?;
    let depth6 = 18i64; // height of 6 nilradical steps is at most 3 * 6.
    let lhs = truncated_gvm_character(&p, e, &lam, depth6)?;
    let mut rhs: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let mut dim_sum_by_degree = vec![0u64; 7];
    for r in &rows {
        let Mult::Finite(m) = r.mult else {
            continue;
        };
        let part = truncated_bar_gvm_character(&bar, e, &r.mu, &r.offset, depth6)?;
        for (off, v) in part {
            *rhs.entry(off).or_insert(0) += m * v;
        }
        let mu_dim = crate::fdmod::constituent_dimension(e, &bar.levi_simple(), &r.mu)?;
        let l = bar.nilradical_roots().len() as u64;
        for (d, item) in dim_sum_by_degree.iter_mut().enumerate() {
            // multisets of size d over l nilradical roots.
            let mut binom = 1u64;
            for k in 0..(l - 1) {
                binom = binom * (d as u64 + k + 1) / (k + 1);
            }
            *item += m * mu_dim * binom;
        }
    }
    let mut ok = lhs == rhs;
    let mut detail = if ok { String::new() } else { "character mismatch".into() };
    for d in 0..=6u32 {
        if gvm.dim_at_degree(d) != dim_sum_by_degree[d as usize] {
            ok = false;
            detail = format!("degree {d}: {} vs {}", gvm.dim_at_degree(d), dim_sum_by_degree[d as usize]);
        }
    }
    check(
        &mut out,
        "branching: direct-sum dimensions match through degree 6 at x1 = 10",
        ok,
        detail,
    );

    // Degree bound examples.
    let b3 = ctx.target.system();
    let g2 = e.source().system();
    let d3 = crate::roots::build_root_system('D', 3)?;
    check(
        &mut out,
        "branching: quasi-polynomial degree bounds",
        quasipoly_degree_bound(b3, g2) == Some(1)
            && quasipoly_degree_bound(b3, &d3) == Some(0)
            && quasipoly_degree_bound(b3, b3).is_none(),
        "bound mismatch".into(),
    );
    Ok(out)
}

// ----------------------------------------------------------------- singular

fn suite_singular() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    let ctx = PairContext::builtin_g2_so7()?;
    let e = &ctx.embedding;

    for fam in data::THEOREM_FAMILIES {
        let lam = ctx.parse_lambda(fam.lambda, &BTreeMap::new())?;
        let gvm = GeneralizedVerma::new(ctx.parabolic(&[1, 0, 0])?, &lam)?;
        let results = top_level_singular_vectors(&gvm, e)?;
        let name = format!("singular: family lambda = {}", fam.lambda);
        let mut ok = results.len() == fam.vectors.len() + 1;
        let mut detail = if ok {
            String::new()
        } else {
            format!("{} vectors constructed", results.len())
        };
        // All constructed vectors verify symbolically.
        for r in &results {
            if !r.verification.passed {
                ok = false;
                detail = format!("verification failed at offset {:?}", r.mu_offset);
            }
        }
        // The highest vector is among them.
        let hw = gvm.highest_vector();
        if !results.iter().any(|r| r.vector.proportional_to(&hw).is_some()) {
            ok = false;
            detail = "missing trivial top vector".into();
        }
        // Every printed vector matches a constructed one up to scalar, or
        // lies in the span of the constructed pair at its weight.
        for (vi, vs) in fam.vectors.iter().enumerate() {
            let u = parse_uea(&ctx.vars, vs)?;
            let printed = gvm.act(&u, &hw);
            let direct = results
                .iter()
                .any(|r| r.vector.proportional_to(&printed).is_some());
            if direct {
                continue;
            }
            let Some(off) = gvm.bar_weight(e, &printed) else {
                ok = false;
                detail = format!("printed vector {} mixes weights", vi + 1);
                continue;
            };
            let peers: Vec<&crate::singular::SingularVectorResult> = results
                .iter()
                .filter(|r| r.mu_offset == off)
                .collect();
            if peers.len() < 2 || !in_span(&printed, &peers.iter().map(|r| &r.vector).collect::<Vec<_>>()) {
                ok = false;
                detail = format!("printed vector {} not in the constructed span", vi + 1);
            }
        }
        check(&mut out, &name, ok, detail);
    }

    // Span equality for the multiplicity-two weight of the mixed family.
    {
        let lam = ctx.parse_lambda("x1*w1+w2+w3", &BTreeMap::new())?;
        let gvm = GeneralizedVerma::new(ctx.parabolic(&[1, 0, 0])?, &lam)?;
        let results = top_level_singular_vectors(&gvm, e)?;
        let pair: Vec<&crate::singular::SingularVectorResult> = results
            .iter()
            .filter(|r| r.mu_offset == vec![2, 1])
            .collect();
        let hw = gvm.highest_vector();
        let p3 = gvm.act(&parse_uea(&ctx.vars, data::THEOREM_FAMILIES[4].vectors[2])?, &hw);
        let p4 = gvm.act(&parse_uea(&ctx.vars, data::THEOREM_FAMILIES[4].vectors[3])?, &hw);
        let constructed: Vec<&crate::verma::VermaVector> =
            pair.iter().map(|r| &r.vector).collect();
        let ok = pair.len() == 2
            && in_span(&p3, &constructed)
            && in_span(&p4, &constructed)
            && in_span(&pair[0].vector, &[&p3, &p4])
            && in_span(&pair[1].vector, &[&p3, &p4]);
        check(
            &mut out,
            "singular: the multiplicity-two weight spans agree with the printed pair",
            ok,
            format!("{} constructed at the doubled weight", pair.len()),
        );
    }

    // Top-level tables for the remaining parabolics.
    for row in data::TOP_LEVEL_TABLES {
        let lam = ctx.parse_lambda(row.lambda, &BTreeMap::new())?;
        let gvm = GeneralizedVerma::new(ctx.parabolic(&row.crossings)?, &lam)?;
        let results = top_level_singular_vectors(&gvm, e)?;
        let name = format!(
            "singular: top level of parabolic {:?}, lambda = {}",
            row.crossings, row.lambda
        );
        let mut ok = results.len() == row.constituents.len();
        let mut detail = if ok {
            String::new()
        } else {
            format!("{} constructed", results.len())
        };
        let hw = gvm.highest_vector();
        for c in row.constituents {
            let expect_mu = vec![
                RatFun::from_poly(parse_poly(&ctx.vars, c.mu.0)?),
                RatFun::from_poly(parse_poly(&ctx.vars, c.mu.1)?),
            ];
            let target = results.iter().find(|r| {
                e.source()
                    .system()
                    .convert(&r.mu, Basis::Fundamental)
                    .map(|f| f.coords == expect_mu)
                    .unwrap_or(false)
            });
            let Some(target) = target else {
                ok = false;
                detail = format!("missing constituent {:?}", c.mu);
                continue;
            };
            if !target.verification.passed {
                ok = false;
                detail = format!("verification failed for {:?}", c.mu);
            }
            let printed = if c.vector == "1" {
                hw.clone()
            } else {
                gvm.act(&parse_uea(&ctx.vars, c.vector)?, &hw)
            };
            if target.vector.proportional_to(&printed).is_none() {
                ok = false;
                detail = format!("vector mismatch for {:?}", c.mu);
            }
        }
        check(&mut out, &name, ok, detail);
    }

    // Specialization behavior of the strong condition: the adjoint family
    // fails at x1 = -6 and holds at x1 = 10.
    {
        let p = ctx.parabolic(&[1, 0, 0])?;
        let _ = p;
        let mut fail_sub = BTreeMap::new();
        fail_sub.insert("x1".to_string(), rat_int(-6));
        let lam_bad = ctx.parse_lambda("x1*w1+w2", &fail_sub)?;
        let module = build_fd_module(ctx.target.clone(), &[1, 2], &lam_bad)?;
        let cons = decompose_over_bar_levi(&module, e, &[1])?;
        let weights: Vec<Weight> = cons.iter().map(|c| c.mu.clone()).collect();
        let rep_bad = strong_condition_b(e, &weights)?;
        let mut ok_sub = BTreeMap::new();
        ok_sub.insert("x1".to_string(), rat_int(10));
        let lam_good = ctx.parse_lambda("x1*w1+w2", &ok_sub)?;
        let module = build_fd_module(ctx.target.clone(), &[1, 2], &lam_good)?;
        let cons = decompose_over_bar_levi(&module, e, &[1])?;
        let weights: Vec<Weight> = cons.iter().map(|c| c.mu.clone()).collect();
        let rep_good = strong_condition_b(e, &weights)?;
        check(
            &mut out,
            "singular: strong condition fails at the excluded value and holds generically",
            !rep_bad.holds && rep_good.holds && rep_good.weak_holds,
            format!("bad: {:?}, good: {:?}", rep_bad.holds, rep_good.holds),
        );
    }
    Ok(out)
}

/// Is `target` in the rational-function span of `basis` (as sparse vectors)?
fn in_span(target: &crate::verma::VermaVector, basis: &[&crate::verma::VermaVector]) -> bool {
    use std::collections::BTreeSet;
    let vars = target
        .terms
        .values()
        .next()
        .map(|c| c.vars().clone())
        .unwrap_or_else(VarSet::empty);
    let mut keys: BTreeSet<crate::verma::GvmIndex> = BTreeSet::new();
    for v in basis.iter().copied().chain(std::iter::once(target)) {
        for k in v.terms.keys() {
            keys.insert(k.clone());
        }
    }
    let keys: Vec<_> = keys.into_iter().collect();
    let cols = basis.len() + 1;
    let mut entries = Vec::with_capacity(keys.len() * cols);
    for k in &keys {
        for v in basis.iter().copied() {
            entries.push(v.terms.get(k).cloned().unwrap_or_else(|| RatFun::zero(&vars)));
        }
        entries.push(target.terms.get(k).cloned().unwrap_or_else(|| RatFun::zero(&vars)));
    }
    let m = ExactMatrix::new(keys.len(), cols, entries);
    nullspace(&m).iter().any(|k| !k.last().unwrap().is_zero())
}

// ------------------------------------------------------------- certificates

fn suite_certificates() -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    let ctx = PairContext::builtin_g2_so7()?;
    let e = &ctx.embedding;

    for table in data::CRITICAL_VALUE_TABLES {
        let lam = ctx.parse_lambda(table.lambda, &BTreeMap::new())?;
        let gvm = GeneralizedVerma::new(ctx.parabolic(&[1, 0, 0])?, &lam)?;
        let fam = data::THEOREM_FAMILIES
            .iter()
            .find(|f| f.lambda == table.lambda)
            .expect("family present");
        // The table lists the Shapovalov norms of the raw projector
        // outputs; reconstruct them and match each against the printed
        // vector it normalizes to.
        let results = top_level_singular_vectors(&gvm, e)?;
        let hw = gvm.highest_vector();
        for row in table.rows {
            let name = format!(
                "certificates: lambda = {}, vector {}",
                table.lambda, row.vector_index
            );
            let u_printed = parse_uea(&ctx.vars, fam.vectors[row.vector_index - 1])?;
            let printed = gvm.act(&u_printed, &hw);
            let matched = results
                .iter()
                .find(|r| r.vector.proportional_to(&printed).is_some());
            let u = match matched {
                Some(r) => gvm.vector_as_uea(&r.raw),
                None => u_printed,
            };
            let cert = shapovalov_certificate(&gvm, &u)?;
            let expect = parse_poly(&ctx.vars, row.poly)?;
            let mut expect_roots: Vec<Rational> = row
                .roots
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?;
            expect_roots.sort();
            expect_roots.dedup();
            let ok = cert.poly == expect && cert.roots == expect_roots;
            check(
                &mut out,
                &name,
                ok,
                format!("got {} roots {:?}", cert.poly, cert.roots),
            );
        }
        // Specialization commutes: the symbolic certificate of the first
        // nontrivial printed vector evaluated at x1 = 10 equals the numeric
        // pipeline value.
        if let Some(vs) = fam.vectors.first() {
            let name = format!("certificates: specialization commutes for {}", table.lambda);
            let mut subs = BTreeMap::new();
            subs.insert("x1".to_string(), rat_int(10));
            let lam10 = ctx.parse_lambda(table.lambda, &subs)?;
            let gvm10 = GeneralizedVerma::new(ctx.parabolic(&[1, 0, 0])?, &lam10)?;
            let u_sym = parse_uea(&ctx.vars, vs)?;
            let cert_sym = shapovalov_certificate(&gvm, &u_sym)?;
            // Substitute x1 = 10 into the printed word itself.
            let mut asg = BTreeMap::new();
            asg.insert("x1".to_string(), rat_int(10));
            asg.insert("x2".to_string(), Rational::zero());
            asg.insert("x3".to_string(), Rational::zero());
            let mut u_num = crate::lie::UEAElement::zero(&ctx.vars);
            for (w, c) in u_sym.terms() {
                let v = crate::arith::evaluate(c, &asg)?;
                u_num.insert(w.clone(), RatFun::constant(&ctx.vars, v));
            }
            let cert_num = shapovalov_certificate(&gvm10, &u_num)?;
            let sym_at_10 = cert_sym.poly.eval(&[rat_int(10), Rational::zero(), Rational::zero()]);
            let num_val = cert_num.poly.constant_term();
            // Both normalized to coprime integers: compare up to sign-free
            // rational scaling by checking proportional vanishing behavior.
            let ok = !sym_at_10.is_zero() == !num_val.is_zero();
            check(&mut out, &name, ok, format!("{sym_at_10} vs {num_val}"));
        }
    }
    Ok(out)
}

/// Verify a single constructed vector again (exported for the CLI).
pub fn reverify(
    gvm: &GeneralizedVerma,
    e: &crate::lie::Embedding,
    v: &crate::verma::VermaVector,
) -> Result<bool> {
    Ok(verify_singular(gvm, e, v)?.passed)
}
