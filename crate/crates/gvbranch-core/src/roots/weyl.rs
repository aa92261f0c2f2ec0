use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::system::{half, RootSystem};
use super::weight::{Basis, Weight};
use crate::arith::{rat_int, RatFun, Rational, VarSet};
use crate::error::{Error, Result};

/// An element of a (Levi) Weyl group: a reduced word in simple reflections
/// together with its integer matrix on simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// 0-based indices of simple reflections, leftmost acting last.
    pub word: Vec<usize>,
    /// matrix[i][j]: coefficient of eta_i in the image of eta_j.
    pub matrix: Vec<Vec<i64>>,
    pub sign: i64,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![vec![0i64; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { word: vec![], matrix: m, sign: 1 }
    }

    pub fn apply_simple(&self, coords: &[i64]) -> Vec<i64> {
        let rank = coords.len();
        (0..rank)
            .map(|i| (0..rank).map(|j| self.matrix[i][j] * coords[j]).sum())
            .collect()
    }

    /// Applies to a weight, in simple-root coordinates.
    pub fn apply(&self, rs: &RootSystem, w: &Weight) -> Result<Weight> {
        let s = rs.convert(w, Basis::SimpleRoot)?;
        let vars = s.vars().clone();
        let rank = rs.rank();
        let coords: Vec<RatFun> = (0..rank)
            .map(|i| {
                let mut acc = RatFun::zero(&vars);
                for j in 0..rank {
                    if self.matrix[i][j] != 0 {
                        acc = acc.add(&s.coords[j].scale(&rat_int(self.matrix[i][j])));
                    }
                }
                acc
            })
            .collect();
        Ok(Weight::new(w.system, Basis::SimpleRoot, coords))
    }
}

/// Matrix of the simple reflection s_i on simple-root coordinates:
/// c -> c - <c, eta_i coroot> e_i.
fn reflection_matrix(rs: &RootSystem, i: usize) -> Vec<Vec<i64>> {
    let rank = rs.rank();
    let mut m = vec![vec![0i64; rank]; rank];
    for (d, row) in m.iter_mut().enumerate() {
        row[d] = 1;
    }
    for j in 0..rank {
        m[i][j] -= rs.cartan_matrix()[j][i];
    }
    m
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Full enumeration of the Weyl group generated by the given simple
/// reflections (0-based indices). Identity first; breadth-first by length,
/// lexicographic within a length; each element carries sign = (-1)^length.
pub fn weyl_group(rs: &RootSystem, levi: &[usize]) -> Vec<WeylElement> {
    let mut sorted_levi: Vec<usize> = levi.to_vec();
    sorted_levi.sort_unstable();
    sorted_levi.dedup();
    let refl: Vec<(usize, Vec<Vec<i64>>)> = sorted_levi
        .iter()
        .map(|&i| (i, reflection_matrix(rs, i)))
        .collect();
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let id = WeylElement::identity(rs.rank());
    seen.insert(id.matrix.clone());
    let mut out = vec![id];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let base = out[idx].clone();
            for (i, m) in &refl {
                // New word: s_i * w (acting after w).
                let matrix = mat_mul(m, &base.matrix);
                if seen.insert(matrix.clone()) {
                    let mut word = vec![*i];
                    word.extend(&base.word);
                    out.push(WeylElement { word, matrix, sign: -base.sign });
                    next.push(out.len() - 1);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Half-sum of the positive roots of the Levi generated by the given simple
/// roots. The full set yields the Weyl vector of the algebra.
pub fn rho(rs: &RootSystem, levi: &[usize], vars: &VarSet) -> Weight {
    let rank = rs.rank();
    let mut acc = vec![Rational::zero(); rank];
    for r in rs.levi_positive_roots(levi) {
        for (i, &c) in r.iter().enumerate() {
            acc[i] += rat_int(c);
        }
    }
    let coords = acc.into_iter().map(half).collect::<Vec<_>>();
    Weight::numeric(rs.tag(), Basis::SimpleRoot, &coords, vars)
}

/// Weyl dimension formula for a numeric dominant integral highest weight.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    let vars = VarSet::empty();
    let lam = rs.convert(lambda, Basis::Fundamental)?;
    let coords = lam
        .numeric_coords()
        .ok_or_else(|| Error::NonDominant("weyl_dimension requires numeric weight".into()))?;
    for c in &coords {
        if c < &Rational::zero() || !c.is_integer() {
            return Err(Error::NonDominant(format!("{lam} is not dominant integral")));
        }
    }
    let lam_s = rs
        .numeric_simple(lambda)
        .expect("numeric by the check above");
    let rho_w = rho(rs, &(0..rs.rank()).collect::<Vec<_>>(), &vars);
    let rho_s = rho_w.numeric_coords().unwrap();
    let mut num = Rational::one();
    let mut den = Rational::one();
    for beta in rs.positive_roots() {
        let b: Vec<Rational> = beta.iter().map(|&c| rat_int(c)).collect();
        let sum: Vec<Rational> = lam_s
            .iter()
            .zip(&rho_s)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        num *= rs.form_value(&sum, &b);
        den *= rs.form_value(&rho_s, &b);
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::super::system::build_root_system;
    use super::*;
    use crate::arith::rat;

    #[test]
    fn weyl_group_sizes() {
        let g2 = build_root_system('G', 2).unwrap();
        assert_eq!(weyl_group(&g2, &[0, 1]).len(), 12);
        let b3 = build_root_system('B', 3).unwrap();
        assert_eq!(weyl_group(&b3, &[0, 1, 2]).len(), 48);
        assert_eq!(weyl_group(&b3, &[]).len(), 1);
        assert_eq!(weyl_group(&b3, &[1, 2]).len(), 8);
    }

    #[test]
    fn rho_examples() {
        let vars = VarSet::empty();
        let g2 = build_root_system('G', 2).unwrap();
        // Sum the six positive roots of G2 and halve: 5 a1 + 3 a2.
        let r = rho(&g2, &[0, 1], &vars);
        assert_eq!(r.numeric_coords().unwrap(), vec![rat_int(5), rat_int(3)]);

        let b3 = build_root_system('B', 3).unwrap();
        let r_empty = rho(&b3, &[], &vars);
        assert!(r_empty.is_zero());
        // Levi {eta2, eta3} of p_(1,0,0): (0, 3/2, 2) in simple coordinates.
        let r_levi = rho(&b3, &[1, 2], &vars);
        assert_eq!(
            r_levi.numeric_coords().unwrap(),
            vec![rat_int(0), rat(3, 2), rat_int(2)]
        );
    }

    #[test]
    fn weyl_dimensions() {
        let vars = VarSet::empty();
        let b3 = build_root_system('B', 3).unwrap();
        let w2 = b3.fundamental_weight(1, &vars);
        assert_eq!(weyl_dimension(&b3, &w2).unwrap(), rat_int(21));
        let g2 = build_root_system('G', 2).unwrap();
        let psi1 = g2.fundamental_weight(0, &vars);
        assert_eq!(weyl_dimension(&g2, &psi1).unwrap(), rat_int(7));
        let two_w2 = w2.scale(&rat_int(2));
        assert_eq!(weyl_dimension(&b3, &two_w2).unwrap(), rat_int(168));
    }

    #[test]
    fn simple_reflections_are_involutions_and_braid() {
        for (l, r) in [('B', 3), ('G', 2)] {
            let rs = build_root_system(l, r).unwrap();
            let id = WeylElement::identity(rs.rank());
            for i in 0..rs.rank() {
                let m = reflection_matrix(&rs, i);
                assert_eq!(mat_mul(&m, &m), id.matrix, "s{i}^2 = id in {l}{r}");
            }
            // Braid relations: order of s_i s_j equals the Coxeter number
            // encoded by the Cartan matrix.
            for i in 0..rs.rank() {
                for j in (i + 1)..rs.rank() {
                    let prod = rs.cartan_matrix()[i][j] * rs.cartan_matrix()[j][i];
                    let order = match prod {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => panic!("unexpected Cartan product"),
                    };
                    let m = mat_mul(&reflection_matrix(&rs, i), &reflection_matrix(&rs, j));
                    let mut acc = id.matrix.clone();
                    let mut k = 0;
                    loop {
                        acc = mat_mul(&acc, &m);
                        k += 1;
                        if acc == id.matrix {
                            break;
                        }
                        assert!(k <= 6, "runaway braid order");
                    }
                    assert_eq!(k, order, "braid order of (s{i}, s{j}) in {l}{r}");
                }
            }
        }
    }

    #[test]
    fn nonnumeric_weyl_dimension_is_usage_error() {
        let b3 = build_root_system('B', 3).unwrap();
        let vars = VarSet::new(vec!["x1"]);
        let w = super::super::weight::parse_weight(&b3, &vars, "x1*w1").unwrap();
        assert!(weyl_dimension(&b3, &w).is_err());
    }
}
