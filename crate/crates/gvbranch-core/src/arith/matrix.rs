use num_traits::One;

use super::poly::{poly_gcd, MultiPoly, VarSet};
use super::ratfun::RatFun;
use super::Rational;

/// Dense matrix over the rational-function field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    vars: VarSet,
    rows: usize,
    cols: usize,
    entries: Vec<RatFun>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RatFun>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let vars = entries
            .first()
            .map(|e| e.vars().clone())
            .unwrap_or_else(VarSet::empty);
        ExactMatrix { vars, rows, cols, entries }
    }

    pub fn zero(vars: &VarSet, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries: vec![RatFun::zero(vars); rows * cols],
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn identity(vars: &VarSet, n: usize) -> Self {
        let mut m = Self::zero(vars, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = RatFun::one(vars);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &RatFun {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut RatFun {
        &mut self.entries[r * self.cols + c]
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(mats: &[ExactMatrix]) -> ExactMatrix {
        assert!(!mats.is_empty());
        let cols = mats[0].cols;
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for m in mats {
            assert_eq!(m.cols, cols);
            entries.extend(m.entries.iter().cloned());
        }
        ExactMatrix { vars: mats[0].vars.clone(), rows, cols, entries }
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::zero(&self.vars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = self.at(i, k).mul(other.at(k, j));
                    *out.at_mut(i, j) = out.at(i, j).add(&p);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[RatFun]) -> Vec<RatFun> {
        assert_eq!(v.len(), self.cols);
        let vars = self.vars.clone();
        (0..self.rows)
            .map(|i| {
                let mut acc = RatFun::zero(&vars);
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self.at(i, j).mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, k: &RatFun) -> ExactMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.mul(k);
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e = e.add(o);
        }
        out
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        self.add(&other.scale(&RatFun::constant(&other.vars, -Rational::one())))
    }

    /// Commutator AB - BA.
    pub fn commutator(&self, other: &ExactMatrix) -> ExactMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn rank(&self) -> usize {
        let (echelon, pivots) = bareiss_echelon(&self.to_poly_rows());
        let _ = echelon;
        pivots.len()
    }
}

/// Clears denominators row by row and normalizes each row to coprime integer
/// coefficients, returning polynomial rows.
fn to_primitive_poly_rows(m: &ExactMatrix) -> Vec<Vec<MultiPoly>> {
    (0..m.rows())
        .map(|i| {
            let vars = m.at(i, 0).vars().clone();
            let mut lcm = MultiPoly::one(&vars);
            for j in 0..m.cols() {
                let den = m.at(i, j).den();
                let g = poly_gcd(&lcm, den).expect("same vars");
                lcm = lcm.mul(&den.div_exact(&g));
            }
            let mut row: Vec<MultiPoly> = (0..m.cols())
                .map(|j| {
                    let e = m.at(i, j);
                    e.num().mul(&lcm.div_exact(e.den()))
                })
                .collect();
            // Rational content out, sign from first nonzero entry.
            let mut content = MultiPoly::zero(&vars);
            for p in &row {
                let g = poly_gcd(&content, p).expect("same vars");
                content = g;
            }
            if !content.is_zero() {
                for p in row.iter_mut() {
                    *p = p.div_exact(&content);
                }
            }
            row
        })
        .collect()
}

impl ExactMatrix {
    fn to_poly_rows(&self) -> Vec<Vec<MultiPoly>> {
        if self.rows == 0 || self.cols == 0 {
            return vec![];
        }
        to_primitive_poly_rows(self)
    }
}

/// Fraction-free Bareiss forward elimination. Pivoting is deterministic:
/// leftmost nonzero column, smallest row index. Returns the echelon rows and
/// the pivot (row, col) list.
fn bareiss_echelon(rows_in: &[Vec<MultiPoly>]) -> (Vec<Vec<MultiPoly>>, Vec<(usize, usize)>) {
    let mut rows: Vec<Vec<MultiPoly>> = rows_in.to_vec();
    let nrows = rows.len();
    if nrows == 0 {
        return (rows, vec![]);
    }
    let ncols = rows[0].len();
    let vars = if ncols > 0 {
        rows[0][0].vars().clone()
    } else {
        return (rows, vec![]);
    };
    let mut pivots = Vec::new();
    let mut prev_pivot = MultiPoly::one(&vars);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let pivot = rows[r][c].clone();
        // Every row below is updated, including those with a zero entry in
        // the pivot column; the one-step division stays exact only then.
        for i in (r + 1)..nrows {
            let factor = rows[i][c].clone();
            for j in 0..ncols {
                let t = pivot.mul(&rows[i][j]).sub(&factor.mul(&rows[r][j]));
                rows[i][j] = t.div_exact(&prev_pivot);
            }
            debug_assert!(rows[i][c].is_zero());
        }
        pivots.push((r, c));
        prev_pivot = pivot;
        r += 1;
        if r == nrows {
            break;
        }
    }
    (rows, pivots)
}

/// Basis of the right kernel of `m`, via fraction-free elimination.
///
/// Basis vectors have cleared denominators, coprime integer polynomial
/// entries, and the first nonzero entry carries a positive leading
/// coefficient; one vector per free column, in column order.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<RatFun>> {
    if m.rows() == 0 && m.cols() == 0 {
        return vec![];
    }
    let vars = m.vars.clone();
    if m.rows() == 0 {
        // Everything is in the kernel.
        return (0..m.cols())
            .map(|j| {
                let mut v = vec![RatFun::zero(&vars); m.cols()];
                v[j] = RatFun::one(&vars);
                v
            })
            .collect();
    }
    let (ech, pivots) = bareiss_echelon(&m.to_poly_rows());
    let ncols = m.cols();
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![RatFun::zero(&vars); ncols];
        v[free] = RatFun::one(&vars);
        // Back-substitution over the field on the echelon rows.
        for &(r, c) in pivots.iter().rev() {
            let mut acc = RatFun::zero(&vars);
            for j in (c + 1)..ncols {
                if !ech[r][j].is_zero() && !v[j].is_zero() {
                    acc = acc.add(&RatFun::from_poly(ech[r][j].clone()).mul(&v[j]));
                }
            }
            v[c] = acc.div(&RatFun::from_poly(ech[r][c].clone())).unwrap().neg();
        }
        basis.push(normalize_vector(v));
    }
    debug_assert!(basis.iter().all(|v| {
        m.apply(v).iter().all(|e| e.is_zero())
    }));
    basis
}

/// Clears denominators, divides by content, makes the first nonzero entry's
/// leading coefficient positive.
pub fn normalize_vector(v: Vec<RatFun>) -> Vec<RatFun> {
    let vars = v[0].vars().clone();
    let mut lcm = MultiPoly::one(&vars);
    for e in &v {
        let g = poly_gcd(&lcm, e.den()).expect("same vars");
        lcm = lcm.mul(&e.den().div_exact(&g));
    }
    let mut polys: Vec<MultiPoly> = v
        .iter()
        .map(|e| e.num().mul(&lcm.div_exact(e.den())))
        .collect();
    let mut content = MultiPoly::zero(&vars);
    for p in &polys {
        content = poly_gcd(&content, p).expect("same vars");
    }
    if !content.is_zero() {
        for p in polys.iter_mut() {
            *p = p.div_exact(&content);
        }
    }
    if let Some(first) = polys.iter().find(|p| !p.is_zero()) {
        if first.leading_coeff() < Rational::from_integer(0.into()) {
            for p in polys.iter_mut() {
                *p = p.neg();
            }
        }
    }
    polys.into_iter().map(RatFun::from_poly).collect()
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, VarSet};
    use super::*;

    fn v() -> VarSet {
        VarSet::new(vec!["x1"])
    }

    fn rf(s: &str) -> RatFun {
        RatFun::from_poly(parse_poly(&v(), s).unwrap())
    }

    #[test]
    fn identity_has_empty_kernel() {
        let m = ExactMatrix::identity(&v(), 3);
        assert!(nullspace(&m).is_empty());
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let m = ExactMatrix::zero(&v(), 2, 3);
        let basis = nullspace(&m);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn kernel_is_exact() {
        // Rows: [1, x, x^2], [0, 1, x] -> kernel dim 1.
        let m = ExactMatrix::new(
            2,
            3,
            vec![rf("1"), rf("x1"), rf("x1^2"), rf("0"), rf("1"), rf("x1")],
        );
        let basis = nullspace(&m);
        assert_eq!(basis.len(), 1);
        for b in &basis {
            for e in m.apply(b) {
                assert!(e.is_zero());
            }
        }
    }

    #[test]
    fn kernel_matches_dense_field_elimination() {
        // Independent oracle: plain Gaussian elimination over the field.
        let entries = vec![
            rf("1"), rf("2"), rf("3"), rf("x1"),
            rf("2"), rf("4"), rf("6"), rf("2x1"),
            rf("0"), rf("1"), rf("1"), rf("1"),
        ];
        let m = ExactMatrix::new(3, 4, entries);
        let basis = nullspace(&m);
        let oracle_rank = field_rank(&m);
        assert_eq!(basis.len(), m.cols() - oracle_rank);
        for b in &basis {
            assert!(m.apply(b).iter().all(|e| e.is_zero()));
        }
        // Basis vectors are independent: stack them and check rank.
        let rows = basis.len();
        let flat: Vec<RatFun> = basis.iter().flatten().cloned().collect();
        let bm = ExactMatrix::new(rows, m.cols(), flat);
        assert_eq!(field_rank(&bm), rows);
    }

    /// Straightforward field elimination, kept independent of the
    /// fraction-free implementation path.
    fn field_rank(m: &ExactMatrix) -> usize {
        let mut rows: Vec<Vec<RatFun>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.at(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][c].inv().unwrap();
            for j in 0..m.cols() {
                rows[rank][j] = rows[rank][j].mul(&inv);
            }
            for i in 0..rows.len() {
                if i != rank && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for j in 0..m.cols() {
                        let t = rows[rank][j].mul(&f);
                        rows[i][j] = rows[i][j].sub(&t);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}
