//! Crystal combinatorics: elementary crystals for the types that occur as
//! Levi components, tensor products via the signature rule, extraction of
//! highest-weight components, and the string parametrization that indexes
//! the non-commutative monomial bases.

use crate::error::{Error, Result};
use crate::roots::RootSystem;

/// An elementary (fundamental-representation) crystal of one simple type:
/// explicit arrow tables with weights kept in fundamental coordinates of the
/// component.
#[derive(Debug, Clone)]
pub struct ElementaryCrystal {
    pub rank: usize,
    pub size: usize,
    /// weights[b] = fundamental coordinates of element b.
    pub weights: Vec<Vec<i64>>,
    /// f[i][b] = target of the lowering arrow, if any.
    pub f: Vec<Vec<Option<usize>>>,
    /// e[i][b] = inverse arrows.
    pub e: Vec<Vec<Option<usize>>>,
    /// eps[i][b], phi[i][b]: string lengths upward/downward.
    pub eps: Vec<Vec<i64>>,
    pub phi: Vec<Vec<i64>>,
}

impl ElementaryCrystal {
    fn from_arrows(rank: usize, weights: Vec<Vec<i64>>, arrows: &[(usize, usize, usize)]) -> Self {
        let size = weights.len();
        let mut f = vec![vec![None; size]; rank];
        let mut e = vec![vec![None; size]; rank];
        for &(i, from, to) in arrows {
            f[i][from] = Some(to);
            e[i][to] = Some(from);
        }
        let mut eps = vec![vec![0i64; size]; rank];
        let mut phi = vec![vec![0i64; size]; rank];
        for i in 0..rank {
            for b in 0..size {
                let mut k = 0;
                let mut cur = b;
                while let Some(p) = e[i][cur] {
                    k += 1;
                    cur = p;
                }
                eps[i][b] = k;
                let mut k = 0;
                let mut cur = b;
                while let Some(p) = f[i][cur] {
                    k += 1;
                    cur = p;
                }
                phi[i][b] = k;
            }
        }
        ElementaryCrystal { rank, size, weights, f, e, eps, phi }
    }
}

/// Per-type recipes: which tensor of elementary crystals realizes each
/// fundamental weight, and from which highest element.
#[derive(Debug, Clone)]
pub struct CrystalType {
    pub letter: char,
    pub rank: usize,
    pub elementary: Vec<ElementaryCrystal>,
    /// fundamental i -> (elementary ids to tensor, highest element tuple).
    pub fundamentals: Vec<(Vec<usize>, Vec<usize>)>,
}

fn vector_chain(rank: usize, weights: Vec<Vec<i64>>, chain: &[(usize, usize, usize)]) -> ElementaryCrystal {
    ElementaryCrystal::from_arrows(rank, weights, chain)
}

/// The supported component types: A1, A2, B2, B3, G2.
pub fn crystal_type(letter: char, rank: usize) -> Result<CrystalType> {
    let ct = match (letter, rank) {
        ('A', 1) => {
            let v = vector_chain(1, vec![vec![1], vec![-1]], &[(0, 0, 1)]);
            CrystalType {
                letter,
                rank,
                elementary: vec![v],
                fundamentals: vec![(vec![0], vec![0])],
            }
        }
        ('A', 2) => {
            let v = vector_chain(
                2,
                vec![vec![1, 0], vec![-1, 1], vec![0, -1]],
                &[(0, 0, 1), (1, 1, 2)],
            );
            CrystalType {
                letter,
                rank,
                elementary: vec![v],
                fundamentals: vec![(vec![0], vec![0]), (vec![0, 0], vec![0, 1])],
            }
        }
        ('B', 2) => {
            // Local index 0 = long root, 1 = short root. Vector crystal
            // 1 -> 2 -> 0 -> 2bar -> 1bar; spin crystal on sign pairs.
            let v = vector_chain(
                2,
                vec![
                    vec![1, 0],
                    vec![-1, 2],
                    vec![0, 0],
                    vec![1, -2],
                    vec![-1, 0],
                ],
                &[(0, 0, 1), (1, 1, 2), (1, 2, 3), (0, 3, 4)],
            );
            let s = vector_chain(
                2,
                vec![vec![0, 1], vec![1, -1], vec![-1, 1], vec![0, -1]],
                &[(1, 0, 1), (0, 1, 2), (1, 2, 3)],
            );
            CrystalType {
                letter,
                rank,
                elementary: vec![v, s],
                fundamentals: vec![(vec![0], vec![0]), (vec![1], vec![0])],
            }
        }
        ('B', 3) => {
            let v = vector_chain(
                3,
                vec![
                    vec![1, 0, 0],
                    vec![-1, 1, 0],
                    vec![0, -1, 2],
                    vec![0, 0, 0],
                    vec![0, 1, -2],
                    vec![1, -1, 0],
                    vec![-1, 0, 0],
                ],
                &[(0, 0, 1), (1, 1, 2), (2, 2, 3), (2, 3, 4), (1, 4, 5), (0, 5, 6)],
            );
            // Spin: sign triples ordered (+++, ++-, +-+, +--, -++, -+-, --+, ---).
            let spin_weights: Vec<Vec<i64>> = (0..8)
                .map(|m: usize| {
                    let s = [(m & 4) == 0, (m & 2) == 0, (m & 1) == 0];
                    // eps-coords (±1/2) -> fundamental coords of B3:
                    // a1 = e1-e2, a2 = e2-e3 (doubled pairing /1), a3 = 2*e3.
                    let e: Vec<i64> = s.iter().map(|&b| if b { 1 } else { -1 }).collect();
                    vec![(e[0] - e[1]) / 2, (e[1] - e[2]) / 2, e[2]]
                })
                .collect();
            let mut arrows = Vec::new();
            for m in 0..8usize {
                let s = [(m & 4) == 0, (m & 2) == 0, (m & 1) == 0];
                // f3 flips +++ -> ++-: last sign + to -.
                if s[2] {
                    arrows.push((2, m, m | 1));
                }
                // f2: (+-) at positions 2,3 -> (-+).
                if s[1] && !s[2] {
                    arrows.push((1, m, (m & !1) | 2));
                }
                // f1: (+-) at positions 1,2 -> (-+).
                if s[0] && !s[1] {
                    arrows.push((0, m, (m & !2) | 4));
                }
            }
            let s = ElementaryCrystal::from_arrows(3, spin_weights, &arrows);
            CrystalType {
                letter,
                rank,
                elementary: vec![v, s],
                fundamentals: vec![
                    (vec![0], vec![0]),
                    (vec![0, 0], vec![0, 1]),
                    (vec![1], vec![0]),
                ],
            }
        }
        ('G', 2) => {
            // Local index 0 = short root a1, 1 = long root a2. The 7-element
            // crystal 1 ->1 2 ->2 3 ->1 0 ->1 3bar ->2 2bar ->1 1bar.
            let v = vector_chain(
                2,
                vec![
                    vec![1, 0],
                    vec![-1, 1],
                    vec![2, -1],
                    vec![0, 0],
                    vec![-2, 1],
                    vec![1, -1],
                    vec![-1, 0],
                ],
                &[(0, 0, 1), (1, 1, 2), (0, 2, 3), (0, 3, 4), (1, 4, 5), (0, 5, 6)],
            );
            CrystalType {
                letter,
                rank,
                elementary: vec![v],
                fundamentals: vec![(vec![0], vec![0]), (vec![0, 0], vec![0, 1])],
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "crystal for type {letter}{rank} is not built in"
            )))
        }
    };
    Ok(ct)
}

/// A highest-weight crystal realized as a connected component inside a
/// tensor of elementary crystals.
#[derive(Debug, Clone)]
pub struct Crystal {
    pub ctype: CrystalType,
    /// Elementary crystal id per tensor slot.
    pub factors: Vec<usize>,
    /// Elements: tuples of per-slot element ids, highest weight first,
    /// remaining in breadth-first discovery order (deterministic).
    pub elements: Vec<Vec<usize>>,
}

impl Crystal {
    /// Builds B(lambda) for fundamental coordinates `lam` (nonnegative).
    pub fn build(ct: &CrystalType, lam: &[i64]) -> Result<Crystal> {
        let mut factors = Vec::new();
        let mut hw = Vec::new();
        for (i, &a) in lam.iter().enumerate() {
            if a < 0 {
                return Err(Error::NonDominant(format!(
                    "crystal weight has negative coordinate {a}"
                )));
            }
            for _ in 0..a {
                let (fs, hws) = &ct.fundamentals[i];
                factors.extend_from_slice(fs);
                hw.extend_from_slice(hws);
            }
        }
        let mut crystal = Crystal { ctype: ct.clone(), factors, elements: vec![hw.clone()] };
        // Breadth-first closure under all f_i.
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(hw.clone());
        let mut frontier = vec![hw];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for b in &frontier {
                for i in 0..ct.rank {
                    if let Some(c) = crystal.f(i, b) {
                        if seen.insert(c.clone()) {
                            crystal.elements.push(c.clone());
                            next.push(c);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(crystal)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Weight of a tuple in fundamental coordinates of the component.
    pub fn weight(&self, b: &[usize]) -> Vec<i64> {
        let mut acc = vec![0i64; self.ctype.rank];
        for (slot, &el) in b.iter().enumerate() {
            let ec = &self.ctype.elementary[self.factors[slot]];
            for (k, &w) in ec.weights[el].iter().enumerate() {
                acc[k] += w;
            }
        }
        acc
    }

    /// Signature rule: the reduced signature and which slot owns the
    /// leftmost '+' (for f) and the rightmost '-' (for e).
    fn signature(&self, i: usize, b: &[usize]) -> (i64, i64, Option<usize>, Option<usize>) {
        // Stack of (slot, count) of unmatched minus signs... we scan left to
        // right: '-'^eps then '+'^phi per slot; cancel "+ -" adjacencies.
        let mut plus_stack: Vec<(usize, i64)> = Vec::new();
        let mut minus_total: i64 = 0;
        let mut rightmost_minus: Option<usize> = None;
        for (slot, &el) in b.iter().enumerate() {
            let ec = &self.ctype.elementary[self.factors[slot]];
            let mut eps = ec.eps[i][el];
            let phi = ec.phi[i][el];
            // Cancel incoming minuses against stacked pluses.
            while eps > 0 {
                match plus_stack.last_mut() {
                    Some((_, cnt)) => {
                        let cancel = (*cnt).min(eps);
                        *cnt -= cancel;
                        eps -= cancel;
                        if *cnt == 0 {
                            plus_stack.pop();
                        }
                    }
                    None => break,
                }
            }
            if eps > 0 {
                minus_total += eps;
                rightmost_minus = Some(slot);
            }
            if phi > 0 {
                plus_stack.push((slot, phi));
            }
        }
        let plus_total: i64 = plus_stack.iter().map(|&(_, c)| c).sum();
        let leftmost_plus = plus_stack.first().map(|&(s, _)| s);
        (minus_total, plus_total, leftmost_plus, rightmost_minus)
    }

    pub fn eps(&self, i: usize, b: &[usize]) -> i64 {
        self.signature(i, b).0
    }

    pub fn phi(&self, i: usize, b: &[usize]) -> i64 {
        self.signature(i, b).1
    }

    pub fn f(&self, i: usize, b: &[usize]) -> Option<Vec<usize>> {
        let (_, _, slot, _) = self.signature(i, b);
        let slot = slot?;
        let ec = &self.ctype.elementary[self.factors[slot]];
        let target = ec.f[i][b[slot]]?;
        let mut out = b.to_vec();
        out[slot] = target;
        Some(out)
    }

    pub fn e(&self, i: usize, b: &[usize]) -> Option<Vec<usize>> {
        let (_, _, _, slot) = self.signature(i, b);
        let slot = slot?;
        let ec = &self.ctype.elementary[self.factors[slot]];
        let target = ec.e[i][b[slot]]?;
        let mut out = b.to_vec();
        out[slot] = target;
        Some(out)
    }

    /// The adapted string of an element along a reduced word given by local
    /// simple indices: raise maximally in word order; the result must reach
    /// the highest weight element.
    pub fn string(&self, word: &[usize], b: &[usize]) -> Result<Vec<u32>> {
        let mut cur = b.to_vec();
        let mut out = Vec::with_capacity(word.len());
        for &i in word {
            let mut k = 0u32;
            while let Some(up) = self.e(i, &cur) {
                cur = up;
                k += 1;
            }
            out.push(k);
        }
        if cur != self.elements[0] {
            return Err(Error::Internal(
                "adapted string did not terminate at the highest weight".into(),
            ));
        }
        Ok(out)
    }
}

/// The fixed reduced word of the longest element of the Weyl group
/// generated by the given (0-based, sorted) simple indices: the greedy
/// descent that prefers the largest ambient index at every step, which is
/// the word the inducing-module tables are built on. Letters are ambient
/// simple indices.
pub fn lex_min_longest_word(rs: &RootSystem, levi: &[usize]) -> Vec<usize> {
    let positive = rs.levi_positive_roots(levi);
    // Greedy: repeatedly apply the smallest simple reflection that shortens,
    // tracking the set of positive Levi roots still sent negative.
    let mut word = Vec::new();
    // Represent the remaining element by its action on simple coordinates.
    let rank = rs.rank();
    let mut mat: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    let apply = |mat: &Vec<Vec<i64>>, v: &[i64]| -> Vec<i64> {
        (0..rank)
            .map(|i| (0..rank).map(|j| mat[i][j] * v[j]).sum())
            .collect()
    };
    let is_negative =
        |v: &[i64]| v.iter().find(|&&c| c != 0).map(|&c| c < 0).unwrap_or(false);
    let length = |mat: &Vec<Vec<i64>>| -> usize {
        positive
            .iter()
            .filter(|r| is_negative(&apply(mat, r)))
            .count()
    };
    // Start from the longest element: build it as any reduced word first by
    // greedily increasing length, then extract the lex-min word going down.
    let mut w0 = mat.clone();
    loop {
        let cur = length(&w0);
        if cur == positive.len() {
            break;
        }
        let mut grew = false;
        for &i in levi {
            let refl = reflection(rs, i);
            let cand = mat_mul_small(&refl, &w0);
            if length(&cand) > cur {
                w0 = cand;
                grew = true;
                break;
            }
        }
        assert!(grew, "failed to reach the longest element");
    }
    mat = w0;
    loop {
        let cur = length(&mat);
        if cur == 0 {
            break;
        }
        let mut found = false;
        for &i in levi.iter().rev() {
            let refl = reflection(rs, i);
            let cand = mat_mul_small(&refl, &mat);
            if length(&cand) < cur {
                word.push(i);
                mat = cand;
                found = true;
                break;
            }
        }
        assert!(found, "stuck while unwinding the longest element");
    }
    word
}

fn reflection(rs: &RootSystem, i: usize) -> Vec<Vec<i64>> {
    let rank = rs.rank();
    let mut m: Vec<Vec<i64>> = (0..rank)
        .map(|r| (0..rank).map(|c| i64::from(r == c)).collect())
        .collect();
    for j in 0..rank {
        m[i][j] -= rs.cartan_matrix()[j][i];
    }
    m
}

fn mat_mul_small(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;

    #[test]
    fn crystal_sizes_match_weyl_dimension() {
        use crate::arith::rat_int;
        use crate::roots::{weyl_dimension, Basis, Weight};
        let cases = [
            ('A', 2, vec![1i64, 1], 8i64),
            ('B', 2, vec![1, 0], 5),
            ('B', 2, vec![0, 1], 4),
            ('B', 2, vec![1, 1], 16),
            ('B', 3, vec![0, 1, 0], 21),
            ('B', 3, vec![0, 0, 2], 35),
            ('G', 2, vec![1, 0], 7),
            ('G', 2, vec![0, 1], 14),
            ('G', 2, vec![1, 1], 64),
        ];
        for (l, r, lam, expect) in cases {
            let ct = crystal_type(l, r).unwrap();
            let c = Crystal::build(&ct, &lam).unwrap();
            assert_eq!(c.len() as i64, expect, "{l}{r} {lam:?}");
            let rs = build_root_system(l, r).unwrap();
            let vars = crate::arith::VarSet::empty();
            let w = Weight::numeric(
                rs.tag(),
                Basis::Fundamental,
                &lam.iter().map(|&a| rat_int(a)).collect::<Vec<_>>(),
                &vars,
            );
            assert_eq!(weyl_dimension(&rs, &w).unwrap(), rat_int(expect));
        }
    }

    #[test]
    fn reduced_words() {
        let b3 = build_root_system('B', 3).unwrap();
        // so(5) Levi {eta2, eta3}: the alternating word 3232 (0-based 2121).
        assert_eq!(lex_min_longest_word(&b3, &[1, 2]), vec![2, 1, 2, 1]);
        // A1 x A1 Levi {eta1, eta3}.
        assert_eq!(lex_min_longest_word(&b3, &[0, 2]), vec![2, 0]);
        // Empty Levi.
        assert_eq!(lex_min_longest_word(&b3, &[]), Vec::<usize>::new());
    }

    #[test]
    fn strings_of_spinor_module() {
        // so(5) spinor: strings over the short-root-first word (1,0,1,0) in
        // local indices; the monomials are 1, F_s, F_l F_s, F_s F_l F_s.
        let ct = crystal_type('B', 2).unwrap();
        let c = Crystal::build(&ct, &[0, 1]).unwrap();
        let word = [1usize, 0, 1, 0];
        let mut strings: Vec<Vec<u32>> = c
            .elements
            .iter()
            .map(|b| c.string(&word, b).unwrap())
            .collect();
        strings.sort();
        assert_eq!(
            strings,
            vec![
                vec![0, 0, 0, 0],
                vec![1, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![1, 1, 1, 0],
            ]
        );
    }
}
