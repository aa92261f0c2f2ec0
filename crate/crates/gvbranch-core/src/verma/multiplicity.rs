use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::cone::quotient_weights;
use super::parabolic::{induced_bar_parabolic, ParabolicSubalgebra};
use super::partition::{PartitionContext, PartitionValue};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::fdmod::{build_fd_module, freudenthal_character, project_character};
use crate::lie::Embedding;
use crate::roots::{rho, weyl_group, Basis, RootSystem, Weight};

/// A branching multiplicity: finite or the tagged infinity of the theorem's
/// divergent case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Mult {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchRow {
    pub mu: Weight,
    /// Offset of mu below pr(lambda) in simple coordinates of the source.
    pub offset: Vec<i64>,
    pub mult: Mult,
}

/// The Borel-level partition context: X = weights of m_- / i(mbar_-), i.e.
/// the multiset difference of the projected negative roots and the bar
/// negative roots.
pub fn borel_partition_context(e: &Embedding) -> Result<PartitionContext> {
    let full = ParabolicSubalgebra::new(
        Arc::new(e.target().clone()),
        &vec![1; e.target().rank()],
    )?;
    let rep = quotient_weights(&full, e)?;
    Ok(PartitionContext::new(rep.quotient_weights))
}

/// m(mu, lambda) through the alternating Kostant-partition formula
/// m = sum_{w in W(levi)} sign(w) P_X(mu - pr(w(lambda + rho_l) - rho_l)).
///
/// Condition A is checked first; mu must be integral dominant for the bar
/// Levi (its central coordinates may be symbolic as long as the difference
/// pr(lambda) - mu is numeric).
pub fn branching_multiplicity(
    p: &ParabolicSubalgebra,
    e: &Embedding,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Mult> {
    let pr_lambda = e.pr_weight(lambda)?;
    let diff = pr_lambda.sub(mu)?;
    let off: Vec<i64> = diff
        .numeric_coords()
        .ok_or_else(|| {
            Error::Usage("pr(lambda) - mu must be numeric for multiplicity queries".into())
        })?
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(i64::try_from(c.to_integer()).expect("small offset"))
            } else {
                Err(Error::Usage("pr(lambda) - mu must be integral".into()))
            }
        })
        .collect::<Result<_>>()?;
    branching_multiplicity_at_offset(p, e, lambda, &off)
}

/// Same as `branching_multiplicity` with mu given as an offset below
/// pr(lambda).
pub fn branching_multiplicity_at_offset(
    p: &ParabolicSubalgebra,
    e: &Embedding,
    lambda: &Weight,
    off: &[i64],
) -> Result<Mult> {
    let rep = quotient_weights(p, e)?;
    if !rep.condition_a {
        return Err(Error::ConditionA);
    }
    let bar = induced_bar_parabolic(p, e)?;
    let bar_rs = e.source().system();
    // mu must be dominant integral on the bar Levi.
    let pr_lambda = e.pr_weight(lambda)?;
    let mu = offset_weight(bar_rs, &pr_lambda, off)?;
    for &j in &bar.levi_simple() {
        let v = bar_rs.coroot_value(&mu, j)?;
        match v.as_rational() {
            Some(r) if r.is_integer() && r >= Rational::zero() => {}
            Some(_) => return Ok(Mult::Finite(0)),
            None => {
                return Err(Error::Usage(
                    "mu has symbolic coordinates on the bar Levi".into(),
                ))
            }
        }
    }
    if rep.zero_in_c {
        // All nonzero multiplicities are infinite; decide support through a
        // bounded representability search over the inducing character.
        let module = build_fd_module(
            p.algebra().clone(),
            &p.levi_simple(),
            lambda,
        )?;
        let ch = freudenthal_character(p.algebra().system(), module.levi(), module.lambda())?;
        let pch = project_character(&ch, e)?;
        let quotient_offsets: Vec<Vec<i64>> = rep
            .quotient_weights
            .iter()
            .map(|w| w.iter().map(|&c| -c).collect())
            .collect();
        let reachable = pch.terms.keys().any(|base| {
            let need: Vec<i64> = off.iter().zip(base).map(|(o, b)| o - b).collect();
            bounded_reach(&quotient_offsets, &need, 64)
        });
        return Ok(if reachable { Mult::Infinite } else { Mult::Finite(0) });
    }
    let ctx = borel_partition_context(e)?;
    let levi = p.levi_simple();
    let vars = lambda.vars().clone();
    let rho_l = rho(p.algebra().system(), &levi, &vars);
    let lam_rho = lambda.add(&p.algebra().system().convert(&rho_l, Basis::Fundamental)?)?;
    let mut acc: i64 = 0;
    for w in weyl_group(p.algebra().system(), &levi) {
        let moved = w.apply(p.algebra().system(), &lam_rho)?;
        let shifted = moved.sub(&p.algebra().system().convert(&rho_l, Basis::SimpleRoot)?)?;
        // arg = mu - pr(shifted) = (pr lambda - off) - pr(shifted):
        // the symbolic part of lambda cancels since w fixes the center.
        let pr_shifted = e.pr_weight(&shifted)?;
        let delta = pr_shifted.sub(&e.pr_weight(lambda)?)?;
        let delta_num = delta.numeric_coords().ok_or_else(|| {
            Error::Usage(
                "branching formula needs the Weyl translates to be numeric offsets".into(),
            )
        })?;
        let arg: Vec<i64> = off
            .iter()
            .zip(&delta_num)
            .map(|(o, d)| {
                debug_assert!(d.is_integer());
                -o - i64::try_from(d.to_integer()).expect("small")
            })
            .collect();
        match ctx.eval(&arg, 64) {
            PartitionValue::Finite(v) => acc += w.sign * v as i64,
            PartitionValue::Infinite => unreachable!("0 outside the cone"),
        }
    }
    if acc < 0 {
        return Err(Error::Internal(format!(
            "negative branching multiplicity {acc} (offset {off:?})"
        )));
    }
    Ok(Mult::Finite(acc as u64))
}

fn bounded_reach(gens: &[Vec<i64>], target: &[i64], fuel: u32) -> bool {
    if target.iter().all(|&c| c == 0) {
        return true;
    }
    if fuel == 0 {
        return false;
    }
    for g in gens {
        let next: Vec<i64> = target.iter().zip(g).map(|(t, x)| t - x).collect();
        if next.iter().map(|&c| c.abs()).sum::<i64>() < target.iter().map(|&c| c.abs()).sum() {
            if bounded_reach(gens, &next, fuel - 1) {
                return true;
            }
        }
    }
    false
}

fn offset_weight(rs: &RootSystem, base: &Weight, off: &[i64]) -> Result<Weight> {
    let vars = base.vars().clone();
    let off_w = Weight::numeric(
        rs.tag(),
        Basis::SimpleRoot,
        &off.iter().map(|&c| crate::arith::rat_int(c)).collect::<Vec<_>>(),
        &vars,
    );
    rs.convert(base, Basis::SimpleRoot)?.sub(&off_w)
}

/// All mu with nonzero multiplicity whose depth below pr(lambda) — measured
/// in symmetric powers of the quotient weights — is at most `cutoff`.
pub fn branch_up_to_degree(
    p: &ParabolicSubalgebra,
    e: &Embedding,
    lambda: &Weight,
    cutoff: u32,
) -> Result<Vec<BranchRow>> {
    let rep = quotient_weights(p, e)?;
    if !rep.condition_a {
        return Err(Error::ConditionA);
    }
    let module = build_fd_module(p.algebra().clone(), &p.levi_simple(), lambda)?;
    let ch = freudenthal_character(p.algebra().system(), module.levi(), module.lambda())?;
    let pch = project_character(&ch, e)?;
    // Candidate offsets: support of Pr Ch V tensored with S^{<= cutoff} of
    // the quotient weights.
    let mut candidates: Vec<Vec<i64>> = pch.terms.keys().cloned().collect();
    let quotient_offsets: Vec<Vec<i64>> = rep
        .quotient_weights
        .iter()
        .map(|w| w.iter().map(|&c| -c).collect())
        .collect();
    let mut frontier = candidates.clone();
    for _ in 0..cutoff {
        let mut next = Vec::new();
        for f in &frontier {
            for q in &quotient_offsets {
                let cand: Vec<i64> = f.iter().zip(q).map(|(a, b)| a + b).collect();
                if !candidates.contains(&cand) {
                    candidates.push(cand.clone());
                    next.push(cand);
                }
            }
        }
        frontier = next;
    }
    candidates.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    let bar_rs = e.source().system();
    let pr_lambda = e.pr_weight(lambda)?;
    let bar = induced_bar_parabolic(p, e)?;
    let mut rows = Vec::new();
    for off in candidates {
        // Quick dominance filter for the bar Levi.
        let mu = offset_weight(bar_rs, &pr_lambda, &off)?;
        let mut dominant = true;
        for &j in &bar.levi_simple() {
            match bar_rs.coroot_value(&mu, j)?.as_rational() {
                Some(r) if r.is_integer() && r >= Rational::zero() => {}
                Some(_) => {
                    dominant = false;
                    break;
                }
                None => {
                    return Err(Error::Usage(
                        "mu has symbolic coordinates on the bar Levi".into(),
                    ))
                }
            }
        }
        if !dominant {
            continue;
        }
        let mult = branching_multiplicity_at_offset(p, e, lambda, &off)?;
        match mult {
            Mult::Finite(0) => {}
            m => rows.push(BranchRow { mu, offset: off, mult: m }),
        }
    }
    Ok(rows)
}

/// The degree bound (dim g - dim gbar - rank g - rank gbar) / 2 for the
/// piecewise quasi-polynomial multiplicity function; None when the pair is
/// degenerate and the bound is not applicable.
pub fn quasipoly_degree_bound(g: &RootSystem, gbar: &RootSystem) -> Option<i64> {
    let dim_g = g.algebra_dim() as i64;
    let dim_gbar = gbar.algebra_dim() as i64;
    let v = dim_g - dim_gbar - g.rank() as i64 - gbar.rank() as i64;
    if v < 0 || v % 2 != 0 {
        return None;
    }
    Some(v / 2)
}

/// Truncated bar-character of the generalized Verma module M_lambda(g, p):
/// Pr(Ch V_lambda(levi)) convolved with the geometric series over the
/// projected opposite-nilradical weights, keeping offsets of height at most
/// `depth`. Offsets are relative to pr(lambda).
pub fn truncated_gvm_character(
    p: &ParabolicSubalgebra,
    e: &Embedding,
    lambda: &Weight,
    depth: i64,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let module = build_fd_module(p.algebra().clone(), &p.levi_simple(), lambda)?;
    let ch = freudenthal_character(p.algebra().system(), module.levi(), module.lambda())?;
    let pch = project_character(&ch, e)?;
    let mut acc: BTreeMap<Vec<i64>, u64> = pch
        .terms
        .iter()
        .filter(|(off, _)| off.iter().sum::<i64>() <= depth)
        .map(|(off, &m)| (off.clone(), m))
        .collect();
    for &k in &p.nilradical_roots() {
        let root = &p.algebra().system().positive_roots()[k - 1];
        let step = e.pr_coords(root);
        acc = convolve_geometric(&acc, &step, depth);
    }
    Ok(acc)
}

/// Truncated bar-character of M_mu(gbar, pbar) shifted to offsets below a
/// common base: mu sits at `mu_offset` below the base.
pub fn truncated_bar_gvm_character(
    bar: &ParabolicSubalgebra,
    e: &Embedding,
    mu: &Weight,
    mu_offset: &[i64],
    depth: i64,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let ch = freudenthal_character(e.source().system(), &bar.levi_simple(), mu)?;
    let mut acc: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (off, &m) in &ch.terms {
        let shifted: Vec<i64> = off.iter().zip(mu_offset).map(|(a, b)| a + b).collect();
        if shifted.iter().sum::<i64>() <= depth {
            *acc.entry(shifted).or_insert(0) += m;
        }
    }
    for &k in &bar.nilradical_roots() {
        let root = e.source().system().positive_roots()[k - 1].clone();
        acc = convolve_geometric(&acc, &root, depth);
    }
    Ok(acc)
}

fn convolve_geometric(
    acc: &BTreeMap<Vec<i64>, u64>,
    step: &[i64],
    depth: i64,
) -> BTreeMap<Vec<i64>, u64> {
    let mut out: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let step_h: i64 = step.iter().sum();
    debug_assert!(step_h > 0);
    for (off, &m) in acc {
        let mut cur = off.clone();
        while cur.iter().sum::<i64>() <= depth {
            *out.entry(cur.clone()).or_insert(0) += m;
            cur = cur.iter().zip(step).map(|(a, b)| a + b).collect();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_embedding_g2_so7;
    use crate::roots::{build_root_system, parse_weight};
    use crate::arith::VarSet;

    #[test]
    fn degree_bounds() {
        let b3 = build_root_system('B', 3).unwrap();
        let g2 = build_root_system('G', 2).unwrap();
        assert_eq!(quasipoly_degree_bound(&b3, &g2), Some(1));
        let d3 = build_root_system('D', 3).unwrap();
        assert_eq!(quasipoly_degree_bound(&b3, &d3), Some(0));
        assert_eq!(quasipoly_degree_bound(&b3, &b3), None);
    }

    #[test]
    fn finite_branching_for_scalar_family() {
        // p(1,0,0), lambda = 10 w1: single branch at pr(lambda).
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        let vars = VarSet::empty();
        let lam = parse_weight(e.target().system(), &vars, "10w1").unwrap();
        let rows = branch_up_to_degree(&p, &e, &lam, 4).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].offset, vec![0, 0]);
        assert_eq!(rows[0].mult, Mult::Finite(1));
    }

    #[test]
    fn three_branches_for_adjoint_family() {
        // p(1,0,0), lambda = 10 w1 + w2: exactly three branches, all 1.
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        let vars = VarSet::empty();
        let lam = parse_weight(e.target().system(), &vars, "10w1+w2").unwrap();
        let rows = branch_up_to_degree(&p, &e, &lam, 6).unwrap();
        let mults: Vec<_> = rows.iter().map(|r| r.mult).collect();
        assert_eq!(mults, vec![Mult::Finite(1); 3]);
        // Offsets: mu in {x1 psi1 + psi2 (top), (x1+1) psi1, (x1-1) psi1 + psi2}
        // = pr(lambda) - {0, psi2 - psi1, psi1} = offsets {(0,0), (1,1), (2,1)}.
        let offs: Vec<_> = rows.iter().map(|r| r.offset.clone()).collect();
        assert!(offs.contains(&vec![0, 0]));
        assert!(offs.contains(&vec![1, 1]));
        assert!(offs.contains(&vec![2, 1]));
    }
}
