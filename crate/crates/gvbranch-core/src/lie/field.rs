use num_traits::{One, Zero};

use crate::arith::Rational;

/// Minimal field interface for the structure-constant solvers: exact
/// rationals and the quadratic extension Q(sqrt 2) used by the odd
/// orthogonal matrix models. Methods carry an `f` prefix to stay clear of
/// the num-traits names.
pub trait FieldScalar: Clone + PartialEq {
    fn fzero() -> Self;
    fn fone() -> Self;
    fn fis_zero(&self) -> bool;
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    fn fdiv(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
    /// The rational part; None if an irrational residue is left.
    fn to_rational(&self) -> Option<Rational>;
}

impl FieldScalar for Rational {
    fn fzero() -> Self {
        Zero::zero()
    }
    fn fone() -> Self {
        One::one()
    }
    fn fis_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn fadd(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn fsub(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn fmul(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }
    fn fdiv(&self, o: &Self) -> Self {
        self.clone() / o.clone()
    }
    fn fneg(&self) -> Self {
        -self.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// a + b sqrt(2) with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl Sqrt2 {
    pub fn rat(a: Rational) -> Self {
        Sqrt2 { a, b: Rational::zero() }
    }

    pub fn sqrt2(b: Rational) -> Self {
        Sqrt2 { a: Rational::zero(), b }
    }

    pub fn zero() -> Self {
        Self::fzero()
    }

    pub fn one() -> Self {
        Self::fone()
    }
}

impl FieldScalar for Sqrt2 {
    fn fzero() -> Self {
        Sqrt2 { a: Rational::zero(), b: Rational::zero() }
    }
    fn fone() -> Self {
        Sqrt2 { a: Rational::one(), b: Rational::zero() }
    }
    fn fis_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn fadd(&self, o: &Self) -> Self {
        Sqrt2 { a: self.a.clone() + o.a.clone(), b: self.b.clone() + o.b.clone() }
    }
    fn fsub(&self, o: &Self) -> Self {
        Sqrt2 { a: self.a.clone() - o.a.clone(), b: self.b.clone() - o.b.clone() }
    }
    fn fmul(&self, o: &Self) -> Self {
        Sqrt2 {
            a: self.a.clone() * o.a.clone()
                + Rational::from_integer(2.into()) * self.b.clone() * o.b.clone(),
            b: self.a.clone() * o.b.clone() + self.b.clone() * o.a.clone(),
        }
    }
    fn fdiv(&self, o: &Self) -> Self {
        // 1/(a + b sqrt2) = (a - b sqrt2) / (a^2 - 2 b^2).
        let norm = o.a.clone() * o.a.clone()
            - Rational::from_integer(2.into()) * o.b.clone() * o.b.clone();
        assert!(!norm.is_zero(), "division by zero in Q(sqrt 2)");
        let conj = Sqrt2 { a: o.a.clone() / norm.clone(), b: -o.b.clone() / norm };
        self.fmul(&conj)
    }
    fn fneg(&self) -> Self {
        Sqrt2 { a: -self.a.clone(), b: -self.b.clone() }
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }
}

/// Solves A x = b for a fixed matrix A (given by columns) against many right
/// hand sides, by precomputing a row transformation T with T A in reduced
/// echelon form. Exact and deterministic.
pub struct ColumnSolver<F: FieldScalar> {
    transform: Vec<Vec<F>>,
    pivots: Vec<(usize, usize)>,
    ncols: usize,
    dim: usize,
}

impl<F: FieldScalar> ColumnSolver<F> {
    /// `columns`: the candidate basis vectors, each of the ambient dimension.
    pub fn new(columns: &[Vec<F>]) -> Self {
        let ncols = columns.len();
        let dim = columns[0].len();
        let mut rows: Vec<Vec<F>> = (0..dim)
            .map(|r| columns.iter().map(|c| c[r].clone()).collect())
            .collect();
        let mut transform: Vec<Vec<F>> = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if r == c { F::fone() } else { F::fzero() })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..dim).find(|&r| !rows[r][c].fis_zero()) else {
                continue;
            };
            rows.swap(p, rank);
            transform.swap(p, rank);
            let inv = F::fone().fdiv(&rows[rank][c]);
            for j in 0..ncols {
                rows[rank][j] = rows[rank][j].fmul(&inv);
            }
            for j in 0..dim {
                transform[rank][j] = transform[rank][j].fmul(&inv);
            }
            for r in 0..dim {
                if r != rank && !rows[r][c].fis_zero() {
                    let f = rows[r][c].clone();
                    for j in 0..ncols {
                        let t = rows[rank][j].fmul(&f);
                        rows[r][j] = rows[r][j].fsub(&t);
                    }
                    for j in 0..dim {
                        let t = transform[rank][j].fmul(&f);
                        transform[r][j] = transform[r][j].fsub(&t);
                    }
                }
            }
            pivots.push((rank, c));
            rank += 1;
        }
        ColumnSolver { transform, pivots, ncols, dim }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of `b` in the column basis; None if `b` is outside the
    /// span. Requires independent columns.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rank(), self.ncols, "columns must be independent");
        let tb: Vec<F> = (0..self.dim)
            .map(|r| {
                let mut acc = F::fzero();
                for j in 0..self.dim {
                    if !self.transform[r][j].fis_zero() && !b[j].fis_zero() {
                        acc = acc.fadd(&self.transform[r][j].fmul(&b[j]));
                    }
                }
                acc
            })
            .collect();
        for t in tb.iter().skip(self.rank()) {
            if !t.fis_zero() {
                return None;
            }
        }
        let mut x = vec![F::fzero(); self.ncols];
        for &(r, c) in &self.pivots {
            x[c] = tb[r].clone();
        }
        Some(x)
    }
}
