use std::fmt;

use num_traits::{One, Signed, Zero};

use super::field::{ColumnSolver, FieldScalar, Sqrt2};
use crate::arith::{rat, rat_int, Rational};
use crate::error::{Error, Result};
use crate::roots::{build_root_system, Basis, RootSystem, Weight};

/// A Chevalley–Weyl generator: raising/lowering operators indexed by the
/// 1-based positive-root index, Cartan elements by the 1-based simple index.
/// `H(j)` is the dual of the j-th simple root, so `[H(j), g_beta] =
/// <eta_j, beta> g_beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    H(usize),
}

impl Gen {
    pub fn flip(self) -> Gen {
        match self {
            Gen::E(k) => Gen::F(k),
            Gen::F(k) => Gen::E(k),
            Gen::H(j) => Gen::H(j),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(k) => write!(f, "g_{{{k}}}"),
            Gen::F(k) => write!(f, "g_{{-{k}}}"),
            Gen::H(j) => write!(f, "h_{{{j}}}"),
        }
    }
}

/// A semisimple Lie algebra presented by an integer structure-constant table
/// over indexed root-space generators and Cartan duals of the simple roots.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    name: String,
    system: RootSystem,
    /// Sparse bracket table: `table[i][j]` lists (basis index, coefficient)
    /// of [b_i, b_j]; only i < j is stored, the rest follows by antisymmetry.
    table: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl ChevalleyAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.system.num_positive_roots()
    }

    /// Basis size: 2 * positive roots + rank.
    pub fn dim(&self) -> usize {
        2 * self.num_positive() + self.rank()
    }

    /// Internal basis index of a generator. E(1..N) then F(1..N) then H(1..r).
    pub fn index_of(&self, g: Gen) -> usize {
        let n = self.num_positive();
        match g {
            Gen::E(k) => k - 1,
            Gen::F(k) => n + k - 1,
            Gen::H(j) => 2 * n + j - 1,
        }
    }

    pub fn gen_of(&self, index: usize) -> Gen {
        let n = self.num_positive();
        if index < n {
            Gen::E(index + 1)
        } else if index < 2 * n {
            Gen::F(index - n + 1)
        } else {
            Gen::H(index - 2 * n + 1)
        }
    }

    /// The h-weight of a generator on simple coordinates: the root for E/F,
    /// zero for H.
    pub fn gen_root(&self, g: Gen) -> Vec<i64> {
        match g {
            Gen::E(k) => self.system.positive_roots()[k - 1].clone(),
            Gen::F(k) => self.system.positive_roots()[k - 1]
                .iter()
                .map(|&c| -c)
                .collect(),
            Gen::H(_) => vec![0; self.rank()],
        }
    }

    /// Bracket of two basis generators as a sparse vector.
    pub fn bracket_gens(&self, a: Gen, b: Gen) -> Vec<(usize, Rational)> {
        let i = self.index_of(a);
        let j = self.index_of(b);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table[i][j - i - 1].clone(),
            std::cmp::Ordering::Equal => vec![],
            std::cmp::Ordering::Greater => self.table[j][i - j - 1]
                .iter()
                .map(|(k, c)| (*k, -c.clone()))
                .collect(),
        }
    }

    /// Bracket of two elements given as dense coefficient vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let dim = self.dim();
        let mut out = vec![Rational::zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let sparse = if i < j {
                    self.table[i][j - i - 1].clone()
                } else {
                    self.table[j][i - j - 1]
                        .iter()
                        .map(|(k, c)| (*k, -c.clone()))
                        .collect()
                };
                for (k, c) in sparse {
                    out[k] += xi.clone() * yj.clone() * c;
                }
            }
        }
        out
    }

    /// Dense basis vector for one generator.
    pub fn gen_vector(&self, g: Gen) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[self.index_of(g)] = Rational::one();
        v
    }

    /// The value <eta_j, mu> by which H(j) acts on a weight-mu vector; mu in
    /// simple coordinates.
    pub fn cartan_eigenvalue(&self, j: usize, mu: &[Rational]) -> Rational {
        let rank = self.rank();
        let mut eta = vec![Rational::zero(); rank];
        eta[j - 1] = Rational::one();
        self.system.form_value(&eta, mu)
    }

    /// Checks the Jacobi identity on all ordered basis triples. Exhaustive;
    /// used by construction-time verification and tests.
    pub fn check_jacobi(&self) -> Result<()> {
        let dim = self.dim();
        let basis: Vec<Vec<Rational>> = (0..dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); dim];
                v[i] = Rational::one();
                v
            })
            .collect();
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in (j + 1)..dim {
                    let a = self.bracket(&basis[i], &self.bracket(&basis[j], &basis[k]));
                    let b = self.bracket(&basis[j], &self.bracket(&basis[k], &basis[i]));
                    let c = self.bracket(&basis[k], &self.bracket(&basis[i], &basis[j]));
                    for t in 0..dim {
                        if !(a[t].clone() + b[t].clone() + c[t].clone()).is_zero() {
                            return Err(Error::Internal(format!(
                                "Jacobi fails on basis triple ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The coefficients of h_beta = sum_j c_j H(j) for a root beta given in
    /// simple coordinates: c_j is just the j-th simple coordinate.
    pub fn cartan_dual(&self, beta: &[i64]) -> Vec<(usize, Rational)> {
        beta.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (self.index_of(Gen::H(j + 1)), rat_int(c)))
            .collect()
    }
}

/// Builds the Chevalley algebra of a supported simple type. Types A and B
/// come from their defining matrix models; G2 is generated inside so(7)
/// through `build_embedding_g2_so7`.
pub fn build_algebra(letter: char, rank: usize) -> Result<ChevalleyAlgebra> {
    match letter {
        'A' => build_type_a(rank),
        'B' => build_type_b(rank),
        'G' => Ok(super::embedding::build_embedding_g2_so7()?.source().clone()),
        _ => Err(Error::Unsupported(format!(
            "Chevalley algebra for type {letter}{rank} is not built in"
        ))),
    }
}

/// Internal: constructs the table from a concrete realization of the basis
/// as vectors in an ambient space with a bilinear bracket.
pub(super) fn algebra_from_realization<F: FieldScalar>(
    name: &str,
    system: RootSystem,
    basis: &[Vec<F>],
    bracket: impl Fn(&[F], &[F]) -> Vec<F>,
) -> Result<ChevalleyAlgebra> {
    let dim = basis.len();
    debug_assert_eq!(dim, 2 * system.num_positive_roots() + system.rank());
    let solver = ColumnSolver::new(basis);
    if solver.rank() != dim {
        return Err(Error::Internal(format!(
            "{name}: realization basis is not linearly independent"
        )));
    }
    let mut table = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim - i - 1);
        for j in (i + 1)..dim {
            let br = bracket(&basis[i], &basis[j]);
            let coords = solver.solve(&br).ok_or_else(|| {
                Error::Internal(format!("{name}: bracket [{i},{j}] leaves the span"))
            })?;
            let mut sparse = Vec::new();
            for (k, c) in coords.into_iter().enumerate() {
                if !c.fis_zero() {
                    let r = c.to_rational().ok_or_else(|| {
                        Error::Internal(format!("{name}: irrational structure constant"))
                    })?;
                    sparse.push((k, r));
                }
            }
            row.push(sparse);
        }
        table.push(row);
    }
    let algebra = ChevalleyAlgebra { name: name.to_string(), system, table };
    verify_chevalley(&algebra)?;
    Ok(algebra)
}

/// Construction-time sanity: integer root-vector constants, the Cartan
/// bracket normalization [g_b, g_-b] = (2/<b,b>) h_b, and h-eigenvalues.
fn verify_chevalley(a: &ChevalleyAlgebra) -> Result<()> {
    let n = a.num_positive();
    let rank = a.rank();
    for k in 1..=n {
        let beta = a.system().positive_roots()[k - 1].clone();
        // [E_k, F_k] = 2/<b,b> h_b.
        let got = a.bracket_gens(Gen::E(k), Gen::F(k));
        let bb = a.system().form_value(
            &beta.iter().map(|&c| rat_int(c)).collect::<Vec<_>>(),
            &beta.iter().map(|&c| rat_int(c)).collect::<Vec<_>>(),
        );
        let scale = rat_int(2) / bb;
        let mut want: Vec<(usize, Rational)> = a
            .cartan_dual(&beta)
            .into_iter()
            .map(|(i, c)| (i, c * scale.clone()))
            .collect();
        want.sort_by_key(|(i, _)| *i);
        let mut got_s = got.clone();
        got_s.sort_by_key(|(i, _)| *i);
        if got_s != want {
            return Err(Error::Internal(format!(
                "{}: [E{k}, F{k}] violates the Cartan normalization",
                a.name
            )));
        }
        // H(j) eigenvalues.
        for j in 1..=rank {
            let mu: Vec<Rational> = beta.iter().map(|&c| rat_int(c)).collect();
            let want = a.cartan_eigenvalue(j, &mu);
            let got = a.bracket_gens(Gen::H(j), Gen::E(k));
            let expect_idx = a.index_of(Gen::E(k));
            if want.is_zero() {
                if !got.is_empty() {
                    return Err(Error::Internal(format!(
                        "{}: [H{j}, E{k}] should vanish",
                        a.name
                    )));
                }
            } else if got != vec![(expect_idx, want.clone())] {
                return Err(Error::Internal(format!(
                    "{}: [H{j}, E{k}] has wrong eigenvalue",
                    a.name
                )));
            }
        }
    }
    // Root-vector structure constants are integers.
    for i in 0..a.dim() {
        for j in (i + 1)..a.dim() {
            let (gi, gj) = (a.gen_of(i), a.gen_of(j));
            let off_cartan = !matches!((gi, gj), (Gen::E(x), Gen::F(y)) if x == y);
            if !off_cartan {
                continue;
            }
            for (_, c) in a.bracket_gens(gi, gj) {
                if !c.is_integer() {
                    return Err(Error::Internal(format!(
                        "{}: non-integer constant in [{gi}, {gj}]",
                        a.name
                    )));
                }
            }
        }
    }
    Ok(())
}

/// sl(rank+1) in its defining representation.
fn build_type_a(rank: usize) -> Result<ChevalleyAlgebra> {
    let system = build_root_system('A', rank)?;
    let n = rank + 1;
    let unit = |r: usize, c: usize| -> Vec<Rational> {
        let mut m = vec![Rational::zero(); n * n];
        m[r * n + c] = Rational::one();
        m
    };
    // Root eps_i - eps_j in simple coordinates c: i = first nonzero, j = one
    // past the last nonzero.
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let root_to_pair = |coords: &[i64]| -> (usize, usize) {
        let i = coords.iter().position(|&c| c != 0).unwrap();
        let j = coords.iter().rposition(|&c| c != 0).unwrap() + 1;
        (i, j)
    };
    for r in system.positive_roots() {
        let (i, j) = root_to_pair(r);
        basis.push(unit(i, j));
    }
    for r in system.positive_roots() {
        let (i, j) = root_to_pair(r);
        basis.push(unit(j, i));
    }
    for j in 0..rank {
        let mut m = vec![Rational::zero(); n * n];
        m[j * n + j] = Rational::one();
        m[(j + 1) * n + (j + 1)] = -Rational::one();
        basis.push(m);
    }
    let bracket = |x: &[Rational], y: &[Rational]| mat_bracket(x, y, n);
    algebra_from_realization("sl", system, &basis, bracket)
}

/// so(2 rank + 1) in the split symmetric-form model with basis
/// e_1..e_n, e_0, e_-1..e_-n; short-root generators carry sqrt 2.
fn build_type_b(rank: usize) -> Result<ChevalleyAlgebra> {
    let system = build_root_system('B', rank)?;
    let n = rank;
    let size = 2 * n + 1;
    // Position of basis vector e_i for i in -n..=n: plus i -> i-1, 0 -> n,
    // minus i -> n + i.
    let pos = |i: i64| -> usize {
        if i > 0 {
            (i - 1) as usize
        } else if i == 0 {
            n
        } else {
            n + (-i) as usize
        }
    };
    let unit = |r: usize, c: usize, v: Sqrt2| -> Vec<Sqrt2> {
        let mut m = vec![Sqrt2::zero(); size * size];
        m[r * size + c] = v;
        m
    };
    let add = |a: Vec<Sqrt2>, b: Vec<Sqrt2>| -> Vec<Sqrt2> {
        a.iter().zip(&b).map(|(x, y)| x.fadd(y)).collect()
    };
    let eps_matrix = |eps: &[Rational]| -> Vec<Sqrt2> {
        // eps coordinates: patterns e_i - e_j, e_i + e_j, e_i and negatives.
        let nz: Vec<(usize, Rational)> = eps
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let one = Rational::one();
        match nz.len() {
            1 => {
                let (i0, c) = (&nz[0].0 + 1, nz[0].1.clone());
                let i = i0 as i64;
                if c == one {
                    // sqrt2 (e_i (x) e_0^* - e_0 (x) e_{-i}^*)
                    add(
                        unit(pos(i), pos(0), Sqrt2::sqrt2(one.clone())),
                        unit(pos(0), pos(-i), Sqrt2::sqrt2(-one)),
                    )
                } else {
                    // Sign chosen so that [g_{eps_i}, g_{-eps_i}] = +2 h_{eps_i}.
                    add(
                        unit(pos(0), pos(i), Sqrt2::sqrt2(one.clone())),
                        unit(pos(-i), pos(0), Sqrt2::sqrt2(-one)),
                    )
                }
            }
            2 => {
                let (i0, ci) = (nz[0].0 + 1, nz[0].1.clone());
                let (j0, cj) = (nz[1].0 + 1, nz[1].1.clone());
                let (i, j) = (i0 as i64, j0 as i64);
                let neg_one = -one.clone();
                if ci == one && cj == neg_one {
                    // e_i e_j^* - e_-j e_-i^*
                    add(
                        unit(pos(i), pos(j), Sqrt2::one()),
                        unit(pos(-j), pos(-i), Sqrt2::rat(-Rational::one())),
                    )
                } else if ci == neg_one && cj == one {
                    add(
                        unit(pos(j), pos(i), Sqrt2::one()),
                        unit(pos(-i), pos(-j), Sqrt2::rat(-Rational::one())),
                    )
                } else if ci == one && cj == one {
                    // e_i e_{-j}^* - e_j e_{-i}^*
                    add(
                        unit(pos(i), pos(-j), Sqrt2::one()),
                        unit(pos(j), pos(-i), Sqrt2::rat(-Rational::one())),
                    )
                } else {
                    // Sign chosen so that [g_{e_i+e_j}, g_{-e_i-e_j}] = +h_dual.
                    add(
                        unit(pos(-j), pos(i), Sqrt2::one()),
                        unit(pos(-i), pos(j), Sqrt2::rat(-Rational::one())),
                    )
                }
            }
            _ => unreachable!("not a B-type root"),
        }
    };
    let s2e = system.simple_to_epsilon()?;
    let to_eps = |coords: &[i64]| -> Vec<Rational> {
        (0..n)
            .map(|j| {
                coords
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| rat_int(c) * s2e[i][j].clone())
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    };
    let mut basis: Vec<Vec<Sqrt2>> = Vec::new();
    for r in system.positive_roots() {
        basis.push(eps_matrix(&to_eps(r)));
    }
    for r in system.positive_roots() {
        let neg: Vec<i64> = r.iter().map(|&c| -c).collect();
        basis.push(eps_matrix(&to_eps(&neg)));
    }
    // H(j) = dual of eta_j: for j < n it is h_{eps_j} - h_{eps_{j+1}},
    // for j = n it is h_{eps_n}, with h_{eps_i} = e_i e_i^* - e_-i e_-i^*.
    let h_eps = |i: i64| -> Vec<Sqrt2> {
        add(
            unit(pos(i), pos(i), Sqrt2::one()),
            unit(pos(-i), pos(-i), Sqrt2::rat(-Rational::one())),
        )
    };
    for j in 1..=n {
        if j < n {
            let hj = h_eps(j as i64)
                .iter()
                .zip(&h_eps(j as i64 + 1))
                .map(|(a, b)| a.fsub(b))
                .collect();
            basis.push(hj);
        } else {
            basis.push(h_eps(n as i64));
        }
    }
    let bracket = |x: &[Sqrt2], y: &[Sqrt2]| mat_bracket(x, y, size);
    algebra_from_realization("so", system, &basis, bracket)
}

/// Matrix commutator on flattened square matrices.
pub(super) fn mat_bracket<F: FieldScalar>(x: &[F], y: &[F], n: usize) -> Vec<F> {
    let mut out = vec![F::fzero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let xik = &x[i * n + k];
            if !xik.fis_zero() {
                for j in 0..n {
                    let t = xik.fmul(&y[k * n + j]);
                    out[i * n + j] = out[i * n + j].fadd(&t);
                }
            }
            let yik = &y[i * n + k];
            if !yik.fis_zero() {
                for j in 0..n {
                    let t = yik.fmul(&x[k * n + j]);
                    out[i * n + j] = out[i * n + j].fsub(&t);
                }
            }
        }
    }
    out
}

/// Pretty constant: writes a rational as a short factor like `2` or `1/2`.
pub fn pretty_coeff(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else if c.numer().abs() == num_bigint::BigInt::one() {
        format!("{}{}/{}", if c.is_negative() { "-" } else { "" }, 1, c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so7_basic_brackets_match_table_conventions() {
        let so7 = build_algebra('B', 3).unwrap();
        // h1 := [g1, g-1], h2 := [g2, g-2], h3 := 1/2 [g3, g-3].
        let h1 = so7.bracket_gens(Gen::E(1), Gen::F(1));
        assert_eq!(h1, vec![(so7.index_of(Gen::H(1)), rat_int(1))]);
        let h2 = so7.bracket_gens(Gen::E(2), Gen::F(2));
        assert_eq!(h2, vec![(so7.index_of(Gen::H(2)), rat_int(1))]);
        let h3 = so7.bracket_gens(Gen::E(3), Gen::F(3));
        assert_eq!(h3, vec![(so7.index_of(Gen::H(3)), rat_int(2))]);
        // [x, x] = 0 via antisymmetry of the dense bracket.
        let x = so7.gen_vector(Gen::E(4));
        assert!(so7.bracket(&x, &x).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn so7_jacobi_holds() {
        let so7 = build_algebra('B', 3).unwrap();
        so7.check_jacobi().unwrap();
    }

    #[test]
    fn sl2_standard_triple() {
        let a1 = build_algebra('A', 1).unwrap();
        let ef = a1.bracket_gens(Gen::E(1), Gen::F(1));
        assert_eq!(ef, vec![(a1.index_of(Gen::H(1)), rat_int(1))]);
        let he = a1.bracket_gens(Gen::H(1), Gen::E(1));
        assert_eq!(he, vec![(a1.index_of(Gen::E(1)), rat_int(2))]);
    }

    #[test]
    fn weights_of_generators() {
        let so7 = build_algebra('B', 3).unwrap();
        assert_eq!(so7.gen_root(Gen::E(9)), vec![1, 2, 2]);
        assert_eq!(so7.gen_root(Gen::F(6)), vec![-1, -1, -1]);
    }
}
