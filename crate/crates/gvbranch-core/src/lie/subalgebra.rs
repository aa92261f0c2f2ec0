use num_traits::{One, Zero};

use super::algebra::{ChevalleyAlgebra, Gen};
use crate::arith::Rational;
use crate::error::Result;
use crate::roots::build_root_system;

/// Result of closing a span of elements under the bracket.
#[derive(Debug, Clone)]
pub struct SubalgebraReport {
    /// Reduced-echelon basis of the closure, as dense ambient vectors.
    pub basis: Vec<Vec<Rational>>,
    /// Isomorphism type when the closure is simple (or a product of simple
    /// factors) of rank at most 3 regular with respect to the ambient Cartan,
    /// e.g. "G2" or "A1"; products join with `+`.
    pub iso_type: Option<String>,
}

impl SubalgebraReport {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Closes the span of the seed elements under bracket to a fixed point and
/// attempts Cartan-matrix identification of the result.
pub fn generate_subalgebra(
    algebra: &ChevalleyAlgebra,
    seeds: &[Vec<Rational>],
) -> Result<SubalgebraReport> {
    let dim = algebra.dim();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for s in seeds {
        add_to_echelon(&mut basis, s.clone());
    }
    loop {
        let mut grew = false;
        let snapshot = basis.clone();
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                let br = algebra.bracket(&snapshot[i], &snapshot[j]);
                if add_to_echelon(&mut basis, br) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let iso_type = detect_type(algebra, &basis);
    let _ = dim;
    Ok(SubalgebraReport { basis, iso_type })
}

/// Gaussian echelon insert; returns true if the vector enlarged the span.
fn add_to_echelon(basis: &mut Vec<Vec<Rational>>, mut v: Vec<Rational>) -> bool {
    for row in basis.iter() {
        let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
        if !v[pivot].is_zero() {
            let f = v[pivot].clone() / row[pivot].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= f.clone() * y.clone();
            }
        }
    }
    if v.iter().all(|c| c.is_zero()) {
        return false;
    }
    // Normalize leading entry to 1 and reduce earlier rows.
    let pivot = v.iter().position(|c| !c.is_zero()).unwrap();
    let lead = v[pivot].clone();
    for c in v.iter_mut() {
        *c /= lead.clone();
    }
    for row in basis.iter_mut() {
        if !row[pivot].is_zero() {
            let f = row[pivot].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                *x -= f.clone() * y.clone();
            }
        }
    }
    basis.push(v);
    basis.sort_by_key(|r| r.iter().position(|c| !c.is_zero()).unwrap());
    true
}

/// Identifies the closure's type by root-space decomposition relative to the
/// part of the ambient Cartan it contains, then Cartan-matrix matching
/// against the rank <= 3 simple types per connected component.
fn detect_type(algebra: &ChevalleyAlgebra, basis: &[Vec<Rational>]) -> Option<String> {
    let n = algebra.num_positive();
    let rank = algebra.rank();
    let h_range = (2 * n)..(2 * n + rank);
    // Toral part: intersection with the Cartan coordinate subspace. Echelon
    // rows make this easy: a combination lies in the Cartan iff it kills all
    // root-vector coordinates.
    let toral: Vec<Vec<Rational>> = intersect_with_coords(basis, |i| h_range.contains(&i));
    if toral.is_empty() {
        return None;
    }
    // Restriction of each ambient root to the toral subalgebra: for
    // t = sum_j t_j H(j), the eigenvalue on g_beta is <sum_j t_j eta_j, beta>.
    let mut classes: Vec<(Vec<Rational>, Vec<usize>)> = Vec::new();
    for idx in 0..(2 * n) {
        let g = algebra.gen_of(idx);
        let beta: Vec<Rational> = algebra
            .gen_root(g)
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        let value: Vec<Rational> = toral
            .iter()
            .map(|t| {
                let eta: Vec<Rational> = (0..rank)
                    .map(|j| t[2 * n + j].clone())
                    .collect();
                algebra.system().form_value(&eta, &beta)
            })
            .collect();
        if value.iter().all(|v| v.is_zero()) {
            continue;
        }
        match classes.iter_mut().find(|(v, _)| *v == value) {
            Some((_, idxs)) => idxs.push(idx),
            None => classes.push((value, vec![idx])),
        }
    }
    // Root spaces of the subalgebra: intersect with each class span.
    let mut roots: Vec<Vec<Rational>> = Vec::new();
    for (value, idxs) in &classes {
        let inter = intersect_with_coords(basis, |i| idxs.contains(&i));
        match inter.len() {
            0 => {}
            1 => roots.push(value.clone()),
            _ => return None,
        }
    }
    if roots.is_empty() || basis.len() != toral.len() + roots.len() {
        return None;
    }
    // Positive system: lexicographically positive value vectors.
    let positive: Vec<Vec<Rational>> = roots
        .iter()
        .filter(|v| {
            v.iter()
                .find(|c| !c.is_zero())
                .map(|c| c > &Rational::zero())
                .unwrap_or(false)
        })
        .cloned()
        .collect();
    if positive.len() * 2 != roots.len() {
        return None;
    }
    // Simple roots: positive roots that are not sums of two positive roots.
    let is_sum = |v: &Vec<Rational>| -> bool {
        for a in &positive {
            for b in &positive {
                let sum: Vec<Rational> =
                    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect();
                if &sum == v {
                    return true;
                }
            }
        }
        false
    };
    let simples: Vec<Vec<Rational>> = positive.iter().filter(|v| !is_sum(v)).cloned().collect();
    if simples.is_empty() || simples.len() > 3 {
        return None;
    }
    // Cartan matrix via root strings.
    let contains = |v: &Vec<Rational>| roots.contains(v);
    let k = simples.len();
    let mut cartan = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                cartan[i][j] = 2;
                continue;
            }
            let mut p = 0i64;
            loop {
                let v: Vec<Rational> = simples[i]
                    .iter()
                    .zip(&simples[j])
                    .map(|(a, b)| a.clone() - Rational::from_integer((p + 1).into()) * b.clone())
                    .collect();
                if contains(&v) {
                    p += 1;
                } else {
                    break;
                }
            }
            let mut q = 0i64;
            loop {
                let v: Vec<Rational> = simples[i]
                    .iter()
                    .zip(&simples[j])
                    .map(|(a, b)| a.clone() + Rational::from_integer((q + 1).into()) * b.clone())
                    .collect();
                if contains(&v) {
                    q += 1;
                } else {
                    break;
                }
            }
            cartan[i][j] = p - q;
        }
    }
    match_cartan(&cartan)
}

/// Vectors of the span supported on the given coordinate set.
fn intersect_with_coords(
    basis: &[Vec<Rational>],
    keep: impl Fn(usize) -> bool,
) -> Vec<Vec<Rational>> {
    if basis.is_empty() {
        return vec![];
    }
    let dim = basis[0].len();
    // Solve c^T basis restricted to complement coords = 0.
    let bad: Vec<usize> = (0..dim).filter(|&i| !keep(i)).collect();
    // Rows: one per bad coordinate; columns per basis vector.
    let mut rows: Vec<Vec<Rational>> = bad
        .iter()
        .map(|&i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    // Kernel of this small rational matrix.
    let ncols = basis.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = rows[r][j].clone() * f.clone();
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut coef = vec![Rational::zero(); ncols];
        coef[free] = Rational::one();
        for &(r, c) in pivots.iter().rev() {
            coef[c] = -rows[r][free].clone();
        }
        let mut v = vec![Rational::zero(); dim];
        for (b, k) in basis.iter().zip(&coef) {
            if !k.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += k.clone() * y.clone();
                }
            }
        }
        out.push(v);
    }
    out
}

/// Matches a small Cartan matrix against the simple types of rank <= 3, up to
/// simultaneous permutation; falls back to products of A1.
fn match_cartan(c: &[Vec<i64>]) -> Option<String> {
    let k = c.len();
    let candidates: Vec<(char, usize)> = match k {
        1 => vec![('A', 1)],
        2 => vec![('A', 2), ('B', 2), ('G', 2)],
        3 => vec![('A', 3), ('B', 3), ('C', 3)],
        _ => vec![],
    };
    let perms: Vec<Vec<usize>> = permutations(k);
    for (l, r) in candidates {
        let rs = build_root_system(l, r).ok()?;
        let target = rs.cartan_matrix();
        for p in &perms {
            let mut ok = true;
            'outer: for i in 0..k {
                for j in 0..k {
                    if c[p[i]][p[j]] != target[i][j] {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                return Some(format!("{l}{r}"));
            }
        }
    }
    // Product of A1s: diagonal matrix of 2s.
    if (0..k).all(|i| (0..k).all(|j| c[i][j] == if i == j { 2 } else { 0 })) {
        return Some(
            std::iter::repeat("A1")
                .take(k)
                .collect::<Vec<_>>()
                .join("+"),
        );
    }
    None
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..k {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::algebra::build_algebra;
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn sl2_triple_inside_so7() {
        let so7 = build_algebra('B', 3).unwrap();
        let seeds = vec![so7.gen_vector(Gen::E(1)), so7.gen_vector(Gen::F(1))];
        let rep = generate_subalgebra(&so7, &seeds).unwrap();
        assert_eq!(rep.dim(), 3);
        assert_eq!(rep.iso_type.as_deref(), Some("A1"));
    }

    #[test]
    fn single_cartan_element() {
        let so7 = build_algebra('B', 3).unwrap();
        let seeds = vec![so7.gen_vector(Gen::H(1))];
        let rep = generate_subalgebra(&so7, &seeds).unwrap();
        assert_eq!(rep.dim(), 1);
    }

    #[test]
    fn g2_inside_so7_is_14_dimensional() {
        let so7 = build_algebra('B', 3).unwrap();
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
        let rep = generate_subalgebra(&so7, &seeds).unwrap();
        assert_eq!(rep.dim(), 14);
        assert_eq!(rep.iso_type.as_deref(), Some("G2"));
        let _ = rat_int(0);
    }
}
