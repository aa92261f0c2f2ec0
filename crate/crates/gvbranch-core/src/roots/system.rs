use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{rat, rat_int, Rational};
use crate::error::{Error, Result};

/// Identifies a root system by series letter and rank. Two systems with equal
/// tags are interchangeable, which lets weights carry a cheap owner mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SystemTag {
    pub letter: char,
    pub rank: usize,
}

impl fmt::Display for SystemTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Compares root/weight coordinate vectors the way the generator tables are
/// sorted: by total degree first, then reverse lexicographically (so within
/// one degree the lexicographically larger vector comes first).
pub(crate) fn root_cmp(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    tag: SystemTag,
    /// cartan[i][j] = 2 <eta_i, eta_j> / <eta_j, eta_j>.
    cartan: Vec<Vec<i64>>,
    /// Gram matrix of the simple roots.
    form: Vec<Vec<Rational>>,
    /// Positive roots in simple-root coordinates, sorted by `root_cmp`.
    positive: Vec<Vec<i64>>,
    /// Row i = fundamental coordinates of the i-th simple root (= row i of
    /// the transposed Cartan matrix).
    simple_to_fund: Vec<Vec<Rational>>,
    /// Row i = simple coordinates of the i-th fundamental weight.
    fund_to_simple: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn tag(&self) -> SystemTag {
        self.tag
    }

    pub fn rank(&self) -> usize {
        self.tag.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple coordinates, in the generator-table order.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    /// Lie algebra dimension: 2 * (positive roots) + rank.
    pub fn algebra_dim(&self) -> usize {
        2 * self.positive.len() + self.rank()
    }

    /// 1-based index of a positive root given in simple coordinates.
    pub fn positive_root_index(&self, coords: &[i64]) -> Option<usize> {
        self.positive.iter().position(|r| r == coords).map(|i| i + 1)
    }

    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    /// Bilinear form on simple coordinates.
    pub fn form_value(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += ai.clone() * self.form[i][j].clone() * bj.clone();
                }
            }
        }
        acc
    }

    /// Integer pairing <beta, eta_i-coroot> for beta in simple coordinates.
    pub fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().enumerate().map(|(j, &c)| c * self.cartan[j][i]).sum()
    }

    pub fn simple_to_fund_matrix(&self) -> &[Vec<Rational>] {
        &self.simple_to_fund
    }

    pub fn fund_to_simple_matrix(&self) -> &[Vec<Rational>] {
        &self.fund_to_simple
    }

    /// Positive roots of the Levi subsystem generated by the given simple
    /// roots (0-based indices): those supported inside the subset.
    pub fn levi_positive_roots(&self, levi: &[usize]) -> Vec<Vec<i64>> {
        self.positive
            .iter()
            .filter(|r| {
                r.iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || levi.contains(&i))
            })
            .cloned()
            .collect()
    }

    /// Epsilon-coordinate matrix rows: simple root i written in the epsilon
    /// basis. Only defined for type B.
    pub fn simple_to_epsilon(&self) -> Result<Vec<Vec<Rational>>> {
        let n = self.rank();
        match self.tag.letter {
            'B' => {
                let mut rows = vec![vec![Rational::zero(); n]; n];
                for (i, row) in rows.iter_mut().enumerate().take(n - 1) {
                    row[i] = Rational::one();
                    row[i + 1] = -Rational::one();
                }
                rows[n - 1][n - 1] = Rational::one();
                Ok(rows)
            }
            _ => Err(Error::Unsupported(format!(
                "epsilon basis is only provided for type B, not {}",
                self.tag
            ))),
        }
    }

    /// Inverse of `simple_to_epsilon`.
    pub fn epsilon_to_simple(&self) -> Result<Vec<Vec<Rational>>> {
        let fw = self.simple_to_epsilon()?;
        invert(&fw).ok_or_else(|| Error::Internal("epsilon matrix not invertible".into()))
    }
}

/// Simple-root squared lengths per type, in the fixed normalization.
fn simple_lengths(letter: char, rank: usize) -> Result<Vec<i64>> {
    let v = match letter {
        'A' | 'D' | 'E' => vec![2; rank],
        'B' => {
            let mut v = vec![2; rank];
            v[rank - 1] = 1;
            v
        }
        'C' => {
            let mut v = vec![2; rank];
            v[rank - 1] = 4;
            v
        }
        'F' => vec![4, 4, 2, 2],
        'G' => vec![2, 6],
        _ => return Err(Error::Unsupported(format!("unknown type {letter}"))),
    };
    Ok(v)
}

/// Gram matrices of the simple roots per type.
fn gram(letter: char, rank: usize) -> Result<Vec<Vec<Rational>>> {
    let lengths = simple_lengths(letter, rank)?;
    let mut g = vec![vec![Rational::zero(); rank]; rank];
    for i in 0..rank {
        g[i][i] = rat_int(lengths[i]);
    }
    let mut link = |i: usize, j: usize, v: i64| {
        g[i][j] = rat_int(v);
        g[j][i] = rat_int(v);
    };
    match letter {
        'A' | 'B' => {
            for i in 0..rank - 1 {
                link(i, i + 1, -1);
            }
        }
        'C' => {
            for i in 0..rank.saturating_sub(2) {
                link(i, i + 1, -1);
            }
            if rank >= 2 {
                link(rank - 2, rank - 1, -2);
            }
        }
        'D' => {
            for i in 0..rank - 2 {
                link(i, i + 1, -1);
            }
            link(rank - 3, rank - 1, -1);
        }
        'E' => {
            // Bourbaki numbering: node 2 attaches to node 4.
            for &(i, j) in &[(0usize, 2usize), (2, 3), (3, 4), (4, 5)] {
                link(i, j, -1);
            }
            link(1, 3, -1);
            if rank >= 7 {
                link(5, 6, -1);
            }
            if rank >= 8 {
                link(6, 7, -1);
            }
        }
        'F' => {
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
        }
        'G' => {
            link(0, 1, -3);
        }
        _ => unreachable!(),
    }
    Ok(g)
}

fn supported(letter: char, rank: usize) -> bool {
    match letter {
        'A' => rank >= 1,
        'B' => rank >= 2,
        'C' => rank >= 2,
        'D' => rank >= 3,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => false,
    }
}

/// Builds the root system for a simple type. The positive roots are produced
/// by closing the simple roots under root strings and sorted in the
/// generator-table order.
pub fn build_root_system(letter: char, rank: usize) -> Result<RootSystem> {
    if !supported(letter, rank) {
        return Err(Error::Unsupported(format!(
            "root system {letter}{rank} is not supported"
        )));
    }
    let form = gram(letter, rank)?;
    // Cartan matrix from the Gram matrix: C[i][j] = 2 g[i][j] / g[j][j].
    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let v = rat_int(2) * form[i][j].clone() / form[j][j].clone();
            debug_assert!(v.is_integer());
            cartan[i][j] = i64::try_from(v.to_integer()).expect("small entry");
        }
    }

    // Close under root strings, level by level.
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut level: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        })
        .collect();
    let pairing = |beta: &[i64], i: usize| -> i64 {
        beta.iter().enumerate().map(|(j, &c)| c * cartan[j][i]).sum()
    };
    while !level.is_empty() {
        roots.extend(level.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..rank {
                // p = how far the root string extends downward from beta.
                let mut p = 0i64;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !roots.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        level = next;
    }
    roots.sort_by(|a, b| root_cmp(a, b));

    // Fundamental-weight conversion matrices: fundamental coordinates of a
    // weight with simple coordinates c are a = C^T c.
    let ct: Vec<Vec<Rational>> = (0..rank)
        .map(|i| (0..rank).map(|j| rat_int(cartan[i][j])).collect())
        .collect();
    let fund_to_simple =
        invert(&ct).ok_or_else(|| Error::Internal("Cartan matrix not invertible".into()))?;

    Ok(RootSystem {
        tag: SystemTag { letter, rank },
        cartan,
        form,
        positive: roots,
        simple_to_fund: ct,
        fund_to_simple,
    })
}

/// Exact inverse of a small rational matrix (rows of the result express the
/// inverse's rows). None if singular.
pub(crate) fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        inv.swap(c, p);
        let d = a[c][c].clone();
        for j in 0..n {
            a[c][j] /= d.clone();
            inv[c][j] /= d.clone();
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let t = a[c][j].clone() * f.clone();
                    a[r][j] -= t;
                    let t = inv[c][j].clone() * f.clone();
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

pub(crate) fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(a, b)| a.clone() * b.clone())
                .fold(Rational::zero(), |x, y| x + y)
        })
        .collect()
}

/// v^T M, used to push simple coordinates through row-per-source matrices.
pub(crate) fn vec_mat(v: &[Rational], m: &[Vec<Rational>]) -> Vec<Rational> {
    let cols = m[0].len();
    (0..cols)
        .map(|j| {
            v.iter()
                .enumerate()
                .map(|(i, a)| a.clone() * m[i][j].clone())
                .fold(Rational::zero(), |x, y| x + y)
        })
        .collect()
}

pub(crate) fn half(r: Rational) -> Rational {
    r * rat(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_positive_roots_match_generator_table() {
        let b3 = build_root_system('B', 3).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 1],
            vec![0, 1, 2],
            vec![1, 1, 2],
            vec![1, 2, 2],
        ];
        assert_eq!(b3.positive_roots(), expect.as_slice());
    }

    #[test]
    fn g2_positive_roots() {
        let g2 = build_root_system('G', 2).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        assert_eq!(g2.positive_roots(), expect.as_slice());
        assert_eq!(g2.form()[1][1], rat_int(6));
        assert_eq!(g2.form()[0][1], rat_int(-3));
    }

    #[test]
    fn a1_trivial() {
        let a1 = build_root_system('A', 1).unwrap();
        assert_eq!(a1.positive_roots(), &[vec![1]]);
        assert_eq!(a1.cartan_matrix(), &[vec![2]]);
    }

    #[test]
    fn counts_for_various_types() {
        for (l, r, n) in [
            ('A', 3, 6),
            ('B', 3, 9),
            ('C', 3, 9),
            ('D', 4, 12),
            ('F', 4, 24),
            ('G', 2, 6),
            ('B', 2, 4),
            ('D', 3, 6),
        ] {
            let rs = build_root_system(l, r).unwrap();
            assert_eq!(rs.num_positive_roots(), n, "{l}{r}");
        }
    }

    #[test]
    fn unsupported_type_is_capability_error() {
        assert!(build_root_system('H', 3).is_err());
        assert!(build_root_system('E', 5).is_err());
    }
}
