use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::Serialize;

/// Context for a vector (Kostant) partition function: the fixed multiset X
/// of integer weight vectors, plus a guarded memo table.
pub struct PartitionContext {
    x: Vec<Vec<i64>>,
    zero_in_cone: bool,
    memo: Mutex<BTreeMap<(usize, Vec<i64>), u64>>,
}

/// A partition count, or the infinity flag when 0 lies in the cone of X and
/// the argument is representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum PartitionValue {
    Finite(u64),
    Infinite,
}

impl PartitionContext {
    pub fn new(x: Vec<Vec<i64>>) -> Self {
        let dim = x.first().map(|v| v.len()).unwrap_or(0);
        let zero_in_cone = super::cone::zero_in_positive_cone_pub(&x, dim);
        PartitionContext { x, zero_in_cone, memo: Mutex::new(BTreeMap::new()) }
    }

    pub fn x(&self) -> &[Vec<i64>] {
        &self.x
    }

    pub fn zero_in_cone(&self) -> bool {
        self.zero_in_cone
    }

    /// Number of ways to write alpha as a nonnegative integer combination of
    /// X, counted by recursion over the tuple; P(0) = 1. When 0 lies in the
    /// cone of X, any representable alpha carries infinite multiplicity: the
    /// search is then bounded by `bound` total parts to certify
    /// representability.
    pub fn eval(&self, alpha: &[i64], bound: u32) -> PartitionValue {
        if self.zero_in_cone {
            if representable(&self.x, alpha, bound) {
                return PartitionValue::Infinite;
            }
            return PartitionValue::Finite(0);
        }
        PartitionValue::Finite(self.count(0, alpha))
    }

    fn count(&self, at: usize, remaining: &[i64]) -> u64 {
        if remaining.iter().all(|&c| c == 0) {
            return 1;
        }
        if at >= self.x.len() {
            return 0;
        }
        let key = (at, remaining.to_vec());
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        // Either skip x[at] or subtract it once and stay.
        let mut total = self.count(at + 1, remaining);
        let next: Vec<i64> = remaining
            .iter()
            .zip(&self.x[at])
            .map(|(r, x)| r - x)
            .collect();
        if plausible(&self.x[at..], &next) {
            total += self.count(at, &next);
        }
        self.memo.lock().unwrap().insert(key, total);
        total
    }
}

/// Quick pruning: a vector reachable by the remaining generators must not
/// have a coordinate of a sign no remaining generator can supply... kept
/// minimal: we only prune when remaining is "beyond" any combination in the
/// all-negative or all-positive sense.
fn plausible(gens: &[Vec<i64>], target: &[i64]) -> bool {
    for d in 0..target.len() {
        if target[d] != 0 {
            let sign = target[d] > 0;
            if !gens.iter().any(|g| (g[d] > 0) == sign && g[d] != 0) {
                return false;
            }
        }
    }
    true
}

/// Bounded search for any nonnegative representation with at most `bound`
/// parts.
fn representable(x: &[Vec<i64>], alpha: &[i64], bound: u32) -> bool {
    if alpha.iter().all(|&c| c == 0) {
        return true;
    }
    if bound == 0 {
        return false;
    }
    for g in x {
        let next: Vec<i64> = alpha.iter().zip(g).map(|(a, b)| a - b).collect();
        if representable(x, &next, bound - 1) {
            return true;
        }
    }
    false
}

/// Convenience wrapper matching the operation signature.
pub fn kostant_partition(ctx: &PartitionContext, alpha: &[i64], bound: u32) -> PartitionValue {
    ctx.eval(alpha, bound)
}

/// Exhaustive enumeration oracle, independent of the DP path: tries all
/// coefficient tuples with entries bounded by `max_coeff`.
pub fn kostant_partition_naive(x: &[Vec<i64>], alpha: &[i64], max_coeff: u32) -> u64 {
    fn rec(x: &[Vec<i64>], alpha: &[i64], at: usize, max_coeff: u32) -> u64 {
        if at == x.len() {
            return u64::from(alpha.iter().all(|&c| c == 0));
        }
        let mut total = 0;
        for t in 0..=max_coeff {
            let next: Vec<i64> = alpha
                .iter()
                .zip(&x[at])
                .map(|(a, b)| a - (t as i64) * b)
                .collect();
            total += rec(x, &next, at + 1, max_coeff);
        }
        total
    }
    rec(x, alpha, 0, max_coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_combination() {
        // X with 0 outside the cone: P(0) = 1.
        let ctx = PartitionContext::new(vec![vec![-2, -1], vec![-1, -1]]);
        assert!(!ctx.zero_in_cone());
        assert_eq!(ctx.eval(&[0, 0], 8), PartitionValue::Finite(1));
    }

    #[test]
    fn quotient_weight_examples() {
        // X = {-psi1, psi1 - psi2} in simple coordinates {(-2,-1), (-1,-1)}.
        let ctx = PartitionContext::new(vec![vec![-2, -1], vec![-1, -1]]);
        // alpha = -psi2 = -(3,2): one way: (-2,-1) + (-1,-1).
        assert_eq!(ctx.eval(&[-3, -2], 8), PartitionValue::Finite(1));
        // alpha = psi1: not representable.
        assert_eq!(ctx.eval(&[2, 1], 8), PartitionValue::Finite(0));
    }

    #[test]
    fn infinity_flag() {
        let ctx = PartitionContext::new(vec![vec![1, 0], vec![-1, 0]]);
        assert!(ctx.zero_in_cone());
        assert_eq!(ctx.eval(&[2, 0], 8), PartitionValue::Infinite);
        assert_eq!(ctx.eval(&[0, 1], 8), PartitionValue::Finite(0));
    }

    #[test]
    fn dp_matches_naive_enumeration() {
        let x = vec![vec![-1, 0], vec![0, -1], vec![-1, -1], vec![-2, -1]];
        let ctx = PartitionContext::new(x.clone());
        for a in 0..=8i64 {
            for b in 0..=8i64 {
                let dp = match ctx.eval(&[-a, -b], 8) {
                    PartitionValue::Finite(v) => v,
                    PartitionValue::Infinite => panic!("unexpected infinity"),
                };
                assert_eq!(dp, kostant_partition_naive(&x, &[-a, -b], 8), "({a},{b})");
            }
        }
    }
}
