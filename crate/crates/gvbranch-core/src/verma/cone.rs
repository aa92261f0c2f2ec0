use num_traits::Zero;
use serde::Serialize;

use super::parabolic::{induced_bar_parabolic, ParabolicSubalgebra};
use crate::arith::{rat_int, Rational};
use crate::error::Result;
use crate::lie::Embedding;

/// Cone and compatibility report for a parabolic relative to the embedding.
#[derive(Debug, Clone, Serialize)]
pub struct ConeReport {
    /// Multiset of bar-weights of the quotient nilradical n_- / N, in simple
    /// coordinates of the source system (negative vectors).
    pub quotient_weights: Vec<Vec<i64>>,
    /// Weights of the opposite bar nilradical.
    pub bar_nil_weights: Vec<Vec<i64>>,
    pub zero_in_c: bool,
    pub zero_in_c_prime: bool,
    pub condition_a: bool,
    pub weakly_compatible: bool,
    pub compatible: bool,
    pub finite_branching: bool,
}

/// Derives the quotient weights (pr of the opposite nilradical weights minus
/// the bar opposite-nilradical weights, as multisets), decides the cone
/// memberships 0 in C and 0 in C', and the weak/strong compatibility of the
/// parabolic with the embedded subalgebra.
pub fn quotient_weights(p: &ParabolicSubalgebra, e: &Embedding) -> Result<ConeReport> {
    let bar = induced_bar_parabolic(p, e)?;
    let bar_rank = e.source().rank();

    // pr images of the opposite-nilradical weights (negative vectors).
    let mut projected: Vec<Vec<i64>> = p
        .nilradical_roots()
        .iter()
        .map(|&k| {
            let pos = &p.algebra().system().positive_roots()[k - 1];
            let neg: Vec<i64> = pos.iter().map(|&c| -c).collect();
            e.pr_coords(&neg)
        })
        .collect();
    let bar_nil: Vec<Vec<i64>> = bar
        .nilradical_roots()
        .iter()
        .map(|&k| {
            e.source().system().positive_roots()[k - 1]
                .iter()
                .map(|&c| -c)
                .collect()
        })
        .collect();
    // Multiset difference.
    let mut quotient: Vec<Vec<i64>> = Vec::new();
    let mut to_remove = bar_nil.clone();
    for w in projected.drain(..) {
        if let Some(pos) = to_remove.iter().position(|v| *v == w) {
            to_remove.remove(pos);
        } else {
            quotient.push(w);
        }
    }
    if !to_remove.is_empty() {
        return Err(crate::error::Error::Internal(
            "bar nilradical weights do not embed into the projected nilradical".into(),
        ));
    }
    quotient.sort();

    let zero_in_c = zero_in_positive_cone(&quotient, bar_rank);
    let full: Vec<Vec<i64>> = {
        let mut v = quotient.clone();
        v.extend(bar_nil.iter().cloned());
        v
    };
    let zero_in_c_prime = zero_in_positive_cone(&full, bar_rank);
    let condition_a = zero_in_c || !zero_in_c_prime;

    // Weak compatibility: exists hbar with alpha(hbar) > 0 on bar-nilradical
    // weights and pr(beta)(hbar) >= 0 on nilradical weights. Compatibility:
    // Levi roots vanish and nilradical weights are strictly positive.
    let nil_pr: Vec<Vec<i64>> = p
        .nilradical_roots()
        .iter()
        .map(|&k| e.pr_coords(&p.algebra().system().positive_roots()[k - 1]))
        .collect();
    let bar_nil_pos: Vec<Vec<i64>> = bar_nil.iter().map(|w| w.iter().map(|&c| -c).collect()).collect();
    let weakly_compatible = {
        let strict: Vec<Vec<i64>> = bar_nil_pos.clone();
        let nonneg: Vec<Vec<i64>> = nil_pr.clone();
        feasible(&strict, &nonneg, &[], bar_rank)
    };
    let compatible = {
        let levi_pr: Vec<Vec<i64>> = p
            .levi_roots()
            .iter()
            .map(|&k| e.pr_coords(&p.algebra().system().positive_roots()[k - 1]))
            .collect();
        feasible(&nil_pr, &[], &levi_pr, bar_rank)
    };
    let finite_branching = quotient.is_empty();

    Ok(ConeReport {
        quotient_weights: quotient,
        bar_nil_weights: bar_nil,
        zero_in_c,
        zero_in_c_prime,
        condition_a,
        weakly_compatible,
        compatible,
        finite_branching,
    })
}

/// Is 0 a nonzero nonnegative rational (equivalently integer) combination of
/// the given vectors? 0 lies in the positive cone iff -x_i belongs to the
/// closed cone of the whole tuple for some i; each membership is a small
/// exact Fourier–Motzkin feasibility problem.
pub(super) fn zero_in_positive_cone_pub(vectors: &[Vec<i64>], dim: usize) -> bool {
    zero_in_positive_cone(vectors, dim)
}

fn zero_in_positive_cone(vectors: &[Vec<i64>], dim: usize) -> bool {
    if vectors.is_empty() {
        return false;
    }
    // 0 is a nontrivial nonnegative combination iff for some i, -x_i is in
    // the closed cone generated by all vectors.
    for (i, x) in vectors.iter().enumerate() {
        let _ = i;
        let target: Vec<Rational> = x.iter().map(|&c| rat_int(-c)).collect();
        if in_closed_cone(vectors, &target, dim) {
            return true;
        }
    }
    false
}

/// Membership of a target in the closed cone of generators, by exact LP
/// feasibility (Fourier–Motzkin over the combination coefficients).
fn in_closed_cone(generators: &[Vec<i64>], target: &[Rational], dim: usize) -> bool {
    // Solve sum_j t_j g_j = target, t_j >= 0. Variables t_j; equalities
    // become two inequalities each.
    let n = generators.len();
    let mut ineqs: Vec<(Vec<Rational>, Rational, bool)> = Vec::new();
    // t_j >= 0.
    for j in 0..n {
        let mut row = vec![Rational::zero(); n];
        row[j] = rat_int(1);
        ineqs.push((row, Rational::zero(), false));
    }
    for d in 0..dim {
        let mut row: Vec<Rational> = (0..n).map(|j| rat_int(generators[j][d])).collect();
        ineqs.push((row.clone(), target[d].clone(), false));
        for r in row.iter_mut() {
            *r = -r.clone();
        }
        ineqs.push((row, -target[d].clone(), false));
    }
    fourier_motzkin(ineqs, n)
}

/// Feasibility of: strict[i] . t > 0 for all strict rows, nonneg[i] . t >= 0,
/// zero[i] . t == 0, over rational t of the given dimension.
fn feasible(strict: &[Vec<i64>], nonneg: &[Vec<i64>], zero: &[Vec<i64>], dim: usize) -> bool {
    let mut ineqs: Vec<(Vec<Rational>, Rational, bool)> = Vec::new();
    let row = |v: &Vec<i64>| -> Vec<Rational> { v.iter().map(|&c| rat_int(c)).collect() };
    for v in strict {
        ineqs.push((row(v), Rational::zero(), true));
    }
    for v in nonneg {
        ineqs.push((row(v), Rational::zero(), false));
    }
    for v in zero {
        ineqs.push((row(v), Rational::zero(), false));
        let mut neg = row(v);
        for c in neg.iter_mut() {
            *c = -c.clone();
        }
        ineqs.push((neg, Rational::zero(), false));
    }
    fourier_motzkin(ineqs, dim)
}

/// Exact Fourier–Motzkin elimination. Each inequality is
/// (coeffs, rhs, strict) meaning coeffs . t > rhs (strict) or >= rhs.
fn fourier_motzkin(mut ineqs: Vec<(Vec<Rational>, Rational, bool)>, dim: usize) -> bool {
    for var in (0..dim).rev() {
        let mut lowers: Vec<(Vec<Rational>, Rational, bool)> = Vec::new();
        let mut uppers: Vec<(Vec<Rational>, Rational, bool)> = Vec::new();
        let mut rest: Vec<(Vec<Rational>, Rational, bool)> = Vec::new();
        for (coeffs, rhs, strict) in ineqs.into_iter() {
            let c = coeffs[var].clone();
            if c.is_zero() {
                rest.push((coeffs, rhs, strict));
            } else if c > Rational::zero() {
                // t_var > (rhs - rest coeffs)/c : lower bound.
                lowers.push((coeffs, rhs, strict));
            } else {
                uppers.push((coeffs, rhs, strict));
            }
        }
        // Combine each lower with each upper.
        for (lc, lr, ls) in &lowers {
            for (uc, ur, us) in &uppers {
                let a = lc[var].clone();
                let b = -uc[var].clone();
                // (lc . t) >= lr with positive a; (uc . t) >= ur with
                // negative coefficient. Eliminate: b * lc + a * uc.
                let mut coeffs: Vec<Rational> = (0..lc.len())
                    .map(|k| b.clone() * lc[k].clone() + a.clone() * uc[k].clone())
                    .collect();
                coeffs[var] = Rational::zero();
                let rhs = b.clone() * lr.clone() + a.clone() * ur.clone();
                rest.push((coeffs, rhs, *ls || *us));
            }
        }
        ineqs = rest;
    }
    // All variables eliminated: rows are 0 . t (.) rhs.
    for (_, rhs, strict) in &ineqs {
        if *strict {
            if !(Rational::zero() > *rhs) {
                return false;
            }
        } else if !(Rational::zero() >= *rhs) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_algebra, build_embedding_g2_so7};
    use std::sync::Arc;

    #[test]
    fn quotient_weights_for_key_parabolics() {
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        // p(0,1,0): quotient weights are -psi1 = -(2,1) and psi1 - psi2 = -(1,1).
        let p = ParabolicSubalgebra::new(so7.clone(), &[0, 1, 0]).unwrap();
        let rep = quotient_weights(&p, &e).unwrap();
        assert_eq!(rep.quotient_weights, vec![vec![-2, -1], vec![-1, -1]]);
        assert!(!rep.finite_branching);
        // p(1,0,0): empty quotient, finite branching.
        let p = ParabolicSubalgebra::new(so7.clone(), &[1, 0, 0]).unwrap();
        let rep = quotient_weights(&p, &e).unwrap();
        assert!(rep.quotient_weights.is_empty());
        assert!(rep.finite_branching);
    }

    #[test]
    fn compatibility_census() {
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(build_algebra('B', 3).unwrap());
        let compatible_set = [vec![1, 0, 1], vec![0, 1, 0], vec![1, 1, 1], vec![0, 0, 0]];
        for bits in 0..8u8 {
            let cr = vec![bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
            let p = ParabolicSubalgebra::new(so7.clone(), &cr).unwrap();
            let rep = quotient_weights(&p, &e).unwrap();
            assert!(rep.weakly_compatible, "{cr:?} must be weakly compatible");
            assert!(rep.condition_a, "{cr:?} satisfies Condition A");
            let expect = compatible_set.iter().any(|c| c == &cr);
            assert_eq!(rep.compatible, expect, "{cr:?} compatibility");
            let finite = cr == vec![1, 0, 0] || cr == vec![0, 0, 0];
            assert_eq!(rep.finite_branching, finite, "{cr:?} finiteness");
        }
    }

    #[test]
    fn condition_a_flags_are_consistent() {
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(build_algebra('B', 3).unwrap());
        for bits in 0..8u8 {
            let cr = vec![bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
            let p = ParabolicSubalgebra::new(so7.clone(), &cr).unwrap();
            let rep = quotient_weights(&p, &e).unwrap();
            // Weak compatibility forces 0 in C <=> 0 in C'.
            assert_eq!(rep.zero_in_c, rep.zero_in_c_prime, "{cr:?}");
        }
    }
}
