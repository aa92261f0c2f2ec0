use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use super::{rat_gcd, rat_to_string, Integer, Rational};
use crate::error::{Error, Result};

/// An ordered list of parameter names, shared by all polynomials that live in
/// the same ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        VarSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn empty() -> Self {
        VarSet(Arc::new(Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

/// Exponent vector, ordered by graded lexicographic comparison: total degree
/// first, then lexicographic with earlier variables weighing more.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exps(pub Vec<u32>);

impl Exps {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn mul(&self, other: &Exps) -> Exps {
        Exps(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; None if any component would go negative.
    fn try_div(&self, other: &Exps) -> Option<Exps> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Exps(out))
    }
}

impl Ord for Exps {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exps {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with rational coefficients over a fixed variable
/// list. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Exps, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Exps(vec![0; vars.len()]), c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::Usage(format!("unknown variable {name}")))?;
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Exps(exps), Rational::one());
        Ok(p)
    }

    pub fn monomial(vars: &VarSet, coeff: Rational, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(Exps(exps), coeff);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.degree() == 0)
    }

    /// The constant term, which is the whole value when `is_constant`.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Exps(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    pub fn check_same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(
                format!("{:?}", self.vars.names()),
                format!("{:?}", other.vars.names()),
            ));
        }
        Ok(())
    }

    fn insert(&mut self, e: Exps, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.clone() * k;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert(ea.mul(eb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Exps, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// gcd of all coefficients, as a positive rational.
    pub fn content(&self) -> Rational {
        let mut g = Rational::zero();
        for c in self.terms.values() {
            g = rat_gcd(&g, c);
        }
        g
    }

    /// Scales so that coefficients are coprime integers and the leading
    /// coefficient is positive. Returns (normalized, factor) with
    /// `self = factor * normalized`. The zero polynomial maps to itself.
    pub fn primitive_normalize(&self) -> (Self, Rational) {
        if self.is_zero() {
            return (self.clone(), Rational::one());
        }
        let mut factor = self.content();
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        (self.scale(&(Rational::one() / factor.clone())), factor)
    }

    /// Exact division; panics if `other` does not divide `self`.
    /// Only used where divisibility is guaranteed by construction.
    pub fn div_exact(&self, other: &Self) -> Self {
        self.try_div_exact(other)
            .expect("div_exact: not divisible")
    }

    pub fn try_div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        let (lde, ldc) = {
            let (e, c) = other.leading().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            let qe = re.try_div(&lde)?;
            let qc = rc / ldc.clone();
            let t = Self::monomial(&self.vars, qc, qe.0);
            rem = rem.sub(&t.mul(other));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Substitutes rational values for all variables.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                for _ in 0..k {
                    t *= values[i].clone();
                }
            }
            acc += t;
        }
        acc
    }

    /// Views the polynomial as univariate in variable `var` with coefficients
    /// in the remaining variables (same VarSet, exponent zeroed at `var`).
    fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(&self.vars); d + 1];
        for (e, c) in &self.terms {
            let k = e.0[var] as usize;
            let mut e2 = e.clone();
            e2.0[var] = 0;
            out[k].insert(e2, c.clone());
        }
        out
    }

    fn from_coeffs(vars: &VarSet, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, q) in &c.terms {
                let mut e2 = e.clone();
                e2.0[var] += k as u32;
                out.insert(e2, q.clone());
            }
        }
        out
    }

    /// True if the polynomial does not involve variable `var`.
    fn free_of(&self, var: usize) -> bool {
        self.terms.keys().all(|e| e.0[var] == 0)
    }

    /// Linear coefficients: Some((constant, per-variable coefficients)) when
    /// total degree <= 1.
    pub fn as_affine(&self) -> Option<(Rational, Vec<Rational>)> {
        if self.total_degree() > 1 {
            return None;
        }
        let mut cst = Rational::zero();
        let mut lin = vec![Rational::zero(); self.vars.len()];
        for (e, c) in &self.terms {
            if e.degree() == 0 {
                cst = c.clone();
            } else {
                let i = e.0.iter().position(|&k| k == 1).unwrap();
                lin[i] = c.clone();
            }
        }
        Some((cst, lin))
    }
}

/// Greatest common divisor, normalized to coprime integer coefficients with
/// positive leading coefficient under graded lex. gcd(0, b) is normalized b.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.check_same_vars(b)?;
    Ok(gcd_rec(a, b, a.vars().len()))
}

/// gcd over the first `nvars` variables (those with index < nvars); all
/// higher variables must not occur.
fn gcd_rec(a: &MultiPoly, b: &MultiPoly, nvars: usize) -> MultiPoly {
    if a.is_zero() {
        return b.primitive_normalize().0;
    }
    if b.is_zero() {
        return a.primitive_normalize().0;
    }
    // Pick the last active variable as the main one.
    let main = (0..nvars).rev().find(|&v| !a.free_of(v) || !b.free_of(v));
    let Some(main) = main else {
        // Both constants.
        return MultiPoly::one(a.vars());
    };
    let (ppa, ca) = primitive_part(a, main, nvars);
    let (ppb, cb) = primitive_part(b, main, nvars);
    let content_gcd = gcd_rec(&ca, &cb, nvars);

    // Primitive pseudo-remainder sequence in the main variable.
    let mut f = ppa;
    let mut g = ppb;
    if f.degree_in(main) < g.degree_in(main) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, main);
        f = g;
        g = if r.is_zero() { r } else { primitive_part(&r, main, nvars).0 };
    }
    content_gcd.mul(&f).primitive_normalize().0
}

/// Splits `p` (nonzero) as content * primitive part w.r.t. `main`.
fn primitive_part(p: &MultiPoly, main: usize, nvars: usize) -> (MultiPoly, MultiPoly) {
    let coeffs = p.coeffs_in(main);
    let mut content = MultiPoly::zero(p.vars());
    for c in &coeffs {
        content = gcd_rec(&content, c, nvars);
    }
    (p.div_exact(&content), content)
}

/// Pseudo-remainder of f by g in variable `main`.
fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, main: usize) -> MultiPoly {
    let dg = g.degree_in(main);
    let gc = g.coeffs_in(main);
    let lead_g = gc[dg as usize].clone();
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(main) >= dg {
        let dr = r.degree_in(main);
        let rc = r.coeffs_in(main);
        let lead_r = rc[dr as usize].clone();
        // r <- lead_g * r - lead_r * x^(dr-dg) * g
        let mut shift = vec![0u32; f.vars().len()];
        shift[main] = dr - dg;
        let shifted = g.mul(&MultiPoly::monomial(f.vars(), Rational::one(), shift));
        r = r.mul(&lead_g).sub(&shifted.mul(&lead_r));
    }
    r
}

impl fmt::Display for MultiPoly {
    /// Paper style: terms in descending graded lex, juxtaposed coefficients,
    /// e.g. `1/12x1^2+2/3x1+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut mon = String::new();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                mon.push_str(&self.vars.names()[i]);
                if k > 1 {
                    mon.push_str(&format!("^{k}"));
                }
            }
            let coeff_abs = rat_to_string(&c.abs());
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if mon.is_empty() {
                write!(f, "{coeff_abs}")?;
            } else if coeff_abs == "1" {
                write!(f, "{mon}")?;
            } else {
                write!(f, "{coeff_abs}{mon}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for MultiPoly {
    /// JSON term list `[{"coeff": "num/den", "exps": [e1, ...]}, ...]` in
    /// descending graded lex order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            exps: &'a [u32],
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            seq.serialize_element(&Term { coeff: rat_to_string(c), exps: &e.0 })?;
        }
        seq.end()
    }
}

/// Rational roots of a univariate polynomial (in the single variable `var`),
/// with multiplicity collapsed; sorted ascending.
pub fn rational_roots(p: &MultiPoly, var: usize) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut q = p.clone();
    if q.is_zero() {
        return roots;
    }
    // Factor out powers of the variable.
    let min_pow = q.terms.keys().map(|e| e.0[var]).min().unwrap_or(0);
    if min_pow > 0 {
        let mut shift = vec![0u32; p.vars().len()];
        shift[var] = min_pow;
        q = q.div_exact(&MultiPoly::monomial(p.vars(), Rational::one(), shift));
        roots.push(Rational::zero());
    }
    let (mut q, _) = q.primitive_normalize();
    loop {
        if q.degree_in(var) == 0 {
            break;
        }
        let coeffs = q.coeffs_in(var);
        let a0 = coeffs[0].constant_term();
        let an = coeffs.last().unwrap().constant_term();
        debug_assert!(!a0.is_zero());
        let mut found = None;
        'search: for p_div in divisors(a0.numer()) {
            for q_div in divisors(an.numer()) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(p_div.clone() * Integer::from(sign), q_div.clone());
                    if eval_univar(&coeffs, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            None => break,
            Some(r) => {
                // Deflate by (x - r) until it no longer divides.
                let mut lin = MultiPoly::constant(q.vars(), -r.clone());
                let mut xe = vec![0u32; q.vars().len()];
                xe[var] = 1;
                lin = lin.add(&MultiPoly::monomial(q.vars(), Rational::one(), xe));
                while let Some(next) = q.try_div_exact(&lin) {
                    q = next;
                    if q.degree_in(var) == 0 {
                        break;
                    }
                    if !eval_univar(&q.coeffs_in(var), &r).is_zero() {
                        break;
                    }
                }
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn eval_univar(coeffs: &[MultiPoly], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.constant_term();
    }
    acc
}

fn divisors(n: &Integer) -> Vec<Integer> {
    let mut n = n.clone();
    if n.is_negative() {
        n = -n;
    }
    assert!(!n.is_zero());
    let mut primes: Vec<(Integer, u32)> = Vec::new();
    let mut d = Integer::from(2);
    while d.clone() * d.clone() <= n {
        let mut k = 0;
        while (n.clone() % d.clone()).is_zero() {
            n /= d.clone();
            k += 1;
        }
        if k > 0 {
            primes.push((d.clone(), k));
        }
        d += 1;
    }
    if n > Integer::one() {
        primes.push((n, 1));
    }
    let mut divs = vec![Integer::one()];
    for (p, k) in primes {
        let prev = divs.clone();
        let mut pw = Integer::one();
        for _ in 0..k {
            pw *= p.clone();
            for d in &prev {
                divs.push(d.clone() * pw.clone());
            }
        }
    }
    divs
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn vars1() -> VarSet {
        VarSet::new(vec!["x1"])
    }

    fn p(vars: &VarSet, s: &str) -> MultiPoly {
        super::super::parse_poly(vars, s).unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        let v = vars1();
        let q = p(&v, "1/12x1^2+2/3x1+1");
        assert_eq!(q.to_string(), "1/12x1^2+2/3x1+1");
        assert_eq!(q.eval(&[rat_int(0)]), rat_int(1));
        assert_eq!(q.eval(&[rat_int(6)]), rat_int(8));
    }

    #[test]
    fn gcd_univariate_from_table() {
        // x1^2+8x1+12 = (x1+2)(x1+6); brute-force root search confirms.
        let v = vars1();
        let quad = p(&v, "x1^2+8x1+12");
        let roots = rational_roots(&quad, 0);
        assert_eq!(roots, vec![rat_int(-6), rat_int(-2)]);
        let lin = p(&v, "x1+2");
        let g = poly_gcd(&quad, &lin).unwrap();
        assert_eq!(g, lin);
    }

    #[test]
    fn gcd_zero_and_coprime() {
        let v = VarSet::new(vec!["x1", "x2"]);
        let a = p(&v, "2x1^2+2x1");
        let z = MultiPoly::zero(&v);
        assert_eq!(poly_gcd(&a, &z).unwrap(), p(&v, "x1^2+x1"));
        let g = poly_gcd(&p(&v, "x1"), &p(&v, "x2")).unwrap();
        assert_eq!(g, MultiPoly::one(&v));
    }

    #[test]
    fn gcd_multivariate() {
        let v = VarSet::new(vec!["x1", "x2"]);
        let c = p(&v, "x1+x2");
        let a = p(&v, "x1^2-x2^2");
        let b = p(&v, "x1^2+2x1x2+x2^2");
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, c);
    }

    #[test]
    fn rational_roots_high_degree() {
        let v = vars1();
        // x1^4 - x1^2 has roots 0, 1, -1 (0 and the pair).
        let q = p(&v, "x1^4-x1^2");
        assert_eq!(rational_roots(&q, 0), vec![rat_int(-1), rat_int(0), rat_int(1)]);
        let q2 = p(&v, "2x1^2+7x1+3");
        assert_eq!(rational_roots(&q2, 0), vec![rat_int(-3), rat(-1, 2)]);
    }

    #[test]
    fn variable_mismatch_is_error() {
        let a = MultiPoly::one(&vars1());
        let b = MultiPoly::one(&VarSet::new(vec!["y"]));
        assert!(poly_gcd(&a, &b).is_err());
    }
}
