use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::parabolic::ParabolicSubalgebra;
use crate::arith::{rat_int, MultiPoly, RatFun, Rational, VarSet};
use crate::error::{Error, Result};
use crate::fdmod::{build_fd_module, FiniteModule};
use crate::lie::{Gen, UEAElement};
use crate::roots::{Basis, Weight};

/// A generalized Verma module: the highest weight, the parabolic crossing
/// pattern, the inducing finite-dimensional Levi module, and a graded basis
/// of exponent vectors over the opposite-nilradical roots tensored with the
/// inducing basis.
pub struct GeneralizedVerma {
    parabolic: ParabolicSubalgebra,
    lambda: Weight,
    inducing: Arc<FiniteModule>,
    /// 1-based positive-root indices of the nilradical, sorted descending,
    /// which is ascending graded lex on the corresponding negative roots;
    /// exponent vectors are indexed against this order.
    nil_roots: Vec<usize>,
}

/// Basis index: exponent vector over the opposite-nilradical roots plus the
/// index of an inducing-module basis vector.
pub type GvmIndex = (Vec<u32>, usize);

/// An element of the module: finitely many canonical basis terms with
/// rational-function coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaVector {
    pub terms: BTreeMap<GvmIndex, RatFun>,
}

impl VermaVector {
    pub fn zero() -> Self {
        VermaVector { terms: BTreeMap::new() }
    }

    pub fn insert(&mut self, idx: GvmIndex, c: RatFun) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, k: &RatFun) -> Self {
        let mut out = VermaVector::zero();
        for (i, c) in &self.terms {
            out.insert(i.clone(), c.mul(k));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonical normalization: integral content-1 coefficients with the
    /// graded-lex-leading term positive. Returns the normalized vector and
    /// the factor such that self = factor * normalized.
    pub fn normalize(&self) -> (Self, RatFun) {
        if self.terms.is_empty() {
            let vars = VarSet::empty();
            return (self.clone(), RatFun::one(&vars));
        }
        let vars = self.terms.values().next().unwrap().vars().clone();
        // Clear denominators and content across all coefficients.
        let mut lcm = MultiPoly::one(&vars);
        for c in self.terms.values() {
            let g = crate::arith::poly_gcd(&lcm, c.den()).expect("same vars");
            lcm = lcm.mul(&c.den().div_exact(&g));
        }
        let polys: Vec<MultiPoly> = self
            .terms
            .values()
            .map(|c| c.num().mul(&lcm.div_exact(c.den())))
            .collect();
        let mut content = MultiPoly::zero(&vars);
        for p in &polys {
            content = crate::arith::poly_gcd(&content, p).expect("same vars");
        }
        // Sign from the leading (first in BTreeMap order) term.
        let lead = &polys[0];
        let mut sign = rat_int(1);
        if lead.div_exact(&content).leading_coeff() < Rational::zero() {
            sign = rat_int(-1);
        }
        let scale = RatFun::new(lcm, content.scale(&sign)).expect("nonzero content");
        let normalized = self.scale(&scale);
        let factor = scale.inv().expect("nonzero scale");
        (normalized, factor)
    }

    /// Proportionality test: self = c * other for a rational-function c.
    pub fn proportional_to(&self, other: &Self) -> Option<RatFun> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let keys: Vec<&GvmIndex> = self.terms.keys().collect();
        let keys2: Vec<&GvmIndex> = other.terms.keys().collect();
        if keys != keys2 {
            return None;
        }
        let (k0, c0) = self.terms.iter().next().unwrap();
        let d0 = &other.terms[k0];
        let ratio = c0.div(d0).ok()?;
        for (k, c) in &self.terms {
            if other.terms[k].mul(&ratio) != *c {
                return None;
            }
        }
        Some(ratio)
    }
}

impl GeneralizedVerma {
    /// Induces from the irreducible Levi module of highest weight lambda.
    pub fn new(parabolic: ParabolicSubalgebra, lambda: &Weight) -> Result<Self> {
        let inducing = Arc::new(build_fd_module(
            parabolic.algebra().clone(),
            &parabolic.levi_simple(),
            lambda,
        )?);
        let mut nil_roots = parabolic.nilradical_roots();
        nil_roots.sort_unstable_by(|a, b| b.cmp(a));
        Ok(GeneralizedVerma {
            parabolic,
            lambda: lambda.clone(),
            inducing,
            nil_roots,
        })
    }

    pub fn parabolic(&self) -> &ParabolicSubalgebra {
        &self.parabolic
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn inducing(&self) -> &Arc<FiniteModule> {
        &self.inducing
    }

    pub fn nil_roots(&self) -> &[usize] {
        &self.nil_roots
    }

    /// The highest-weight vector 1 (x) v_lambda.
    pub fn highest_vector(&self) -> VermaVector {
        let vars = self.lambda.vars().clone();
        let mut v = VermaVector::zero();
        v.insert(
            (vec![0; self.nil_roots.len()], self.inducing.highest_index()),
            RatFun::one(&vars),
        );
        v
    }

    /// Vector with a single inducing-module component at degree zero.
    pub fn top_vector(&self, s: usize, coeff: RatFun) -> VermaVector {
        let mut v = VermaVector::zero();
        v.insert((vec![0; self.nil_roots.len()], s), coeff);
        v
    }

    /// Ambient-weight offset of a basis index below lambda.
    pub fn offset_of(&self, idx: &GvmIndex) -> Vec<i64> {
        let rank = self.parabolic.algebra().rank();
        let mut off = self.inducing.basis()[idx.1].offset.clone();
        debug_assert_eq!(off.len(), rank);
        for (pos, &e) in idx.0.iter().enumerate() {
            let root = &self.parabolic.algebra().system().positive_roots()
                [self.nil_roots[pos] - 1];
            for (i, &c) in root.iter().enumerate() {
                off[i] += c * e as i64;
            }
        }
        off
    }

    /// Total exponent degree of a basis index.
    pub fn degree_of(idx: &GvmIndex) -> u32 {
        idx.0.iter().sum()
    }

    /// Dimension of the degree-d component: multisets of size d over the
    /// opposite-nilradical roots times the inducing dimension.
    pub fn dim_at_degree(&self, d: u32) -> u64 {
        let l = self.nil_roots.len() as u64;
        let d = d as u64;
        if l == 0 {
            return if d == 0 { self.inducing.dim() as u64 } else { 0 };
        }
        // C(d + l - 1, d).
        let mut binom = 1u64;
        for k in 0..(l - 1) {
            binom = binom * (d + k + 1) / (k + 1);
        }
        binom * self.inducing.dim() as u64
    }

    /// Action of an enveloping-algebra element, normal-ordered into the
    /// canonical graded basis.
    pub fn act(&self, u: &UEAElement, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (word, coeff) in u.terms() {
            let letters: Vec<Gen> = word.letters().collect();
            for (idx, c) in &v.terms {
                let mut state = VermaVector::zero();
                state.insert(idx.clone(), c.mul(coeff));
                for g in letters.iter().rev() {
                    state = self.act_gen(*g, &state);
                    if state.is_zero() {
                        break;
                    }
                }
                out = out.add(&state);
            }
        }
        out
    }

    /// Action of a single generator.
    pub fn act_gen(&self, g: Gen, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (idx, c) in &v.terms {
            match g {
                Gen::H(j) => {
                    let val = self.h_eigenvalue(j, idx);
                    out.insert(idx.clone(), c.mul(&val));
                }
                Gen::F(k) if self.nil_position(k).is_some() => {
                    for (mono, s, c2) in self.insert_nil(k, &idx.0, idx.1) {
                        out.insert((mono, s), c.mul(&c2));
                    }
                }
                Gen::F(k) => {
                    for (mono, s, c2) in self.levi_f_through(k, &idx.0, idx.1) {
                        out.insert((mono, s), c.mul(&c2));
                    }
                }
                Gen::E(k) => {
                    for (mono, s, c2) in self.e_through(k, &idx.0, idx.1) {
                        out.insert((mono, s), c.mul(&c2));
                    }
                }
            }
        }
        out
    }

    fn nil_position(&self, k: usize) -> Option<usize> {
        self.nil_roots.iter().position(|&r| r == k)
    }

    fn h_eigenvalue(&self, j: usize, idx: &GvmIndex) -> RatFun {
        let vars = self.lambda.vars().clone();
        let rank = self.parabolic.algebra().rank();
        let off = self.offset_of(idx);
        let rs = self.parabolic.algebra().system();
        // <eta_j, lambda - off>.
        let lam_fund = rs
            .convert(&self.lambda, Basis::Fundamental)
            .expect("same system");
        let lam_pair = lam_fund.coords[j - 1]
            .scale(&(rs.form()[j - 1][j - 1].clone() / rat_int(2)));
        let eta: Vec<Rational> = (0..rank)
            .map(|t| if t == j - 1 { rat_int(1) } else { Rational::zero() })
            .collect();
        let off_r: Vec<Rational> = off.iter().map(|&x| rat_int(x)).collect();
        lam_pair.sub(&RatFun::constant(&vars, rs.form_value(&eta, &off_r)))
    }

    /// F(k) with k in the nilradical: straighten into the exponent vector.
    /// Entries are returned as (exponents, inducing index, coefficient).
    fn insert_nil(&self, k: usize, mono: &[u32], s: usize) -> Vec<(Vec<u32>, usize, RatFun)> {
        let vars = self.lambda.vars().clone();
        let pos_k = self.nil_position(k).expect("nilradical root");
        // First nonzero position.
        match mono.iter().position(|&e| e > 0) {
            None => {
                let mut m = mono.to_vec();
                m[pos_k] = 1;
                vec![(m, s, RatFun::one(&vars))]
            }
            Some(first) if pos_k <= first => {
                let mut m = mono.to_vec();
                m[pos_k] += 1;
                vec![(m, s, RatFun::one(&vars))]
            }
            Some(first) => {
                // F(k) must pass the leading factor F(r), r = nil_roots[first].
                let r = self.nil_roots[first];
                let mut rest = mono.to_vec();
                rest[first] -= 1;
                let mut out: Vec<(Vec<u32>, usize, RatFun)> = Vec::new();
                for (m, s2, c) in self.insert_nil(k, &rest, s) {
                    for (m2, s3, c2) in self.insert_nil(r, &m, s2) {
                        out.push((m2, s3, c.mul(&c2)));
                    }
                }
                for (t, c) in self
                    .parabolic
                    .algebra()
                    .bracket_gens(Gen::F(k), Gen::F(r))
                {
                    let Gen::F(tk) = self.parabolic.algebra().gen_of(t) else {
                        unreachable!("lowering bracket stays lowering")
                    };
                    // The nilradical is an ideal in levi + nilradical, so tk
                    // is again a nilradical root.
                    for (m, s2, c2) in self.insert_nil(tk, &rest, s) {
                        out.push((m, s2, c2.scale(&c)));
                    }
                }
                merge3(out)
            }
        }
    }

    /// Lowering generator of the Levi: commute through the nilradical
    /// monomial onto the inducing module.
    fn levi_f_through(&self, k: usize, mono: &[u32], s: usize) -> Vec<(Vec<u32>, usize, RatFun)> {
        let vars = self.lambda.vars().clone();
        match mono.iter().position(|&e| e > 0) {
            None => {
                // Act on the inducing module.
                let act = self
                    .inducing
                    .action(Gen::F(k))
                    .expect("Levi action available");
                let mut out = Vec::new();
                for r in 0..self.inducing.dim() {
                    let c = act.at(r, s);
                    if !c.is_zero() {
                        out.push((mono.to_vec(), r, c.clone()));
                    }
                }
                out
            }
            Some(first) => {
                let r = self.nil_roots[first];
                let mut rest = mono.to_vec();
                rest[first] -= 1;
                let mut out: Vec<(Vec<u32>, usize, RatFun)> = Vec::new();
                for (m, s2, c) in self.levi_f_through(k, &rest, s) {
                    for (m2, s3, c2) in self.insert_nil(r, &m, s2) {
                        out.push((m2, s3, c.mul(&c2)));
                    }
                }
                for (t, c) in self
                    .parabolic
                    .algebra()
                    .bracket_gens(Gen::F(k), Gen::F(r))
                {
                    let Gen::F(tk) = self.parabolic.algebra().gen_of(t) else {
                        unreachable!()
                    };
                    for (m, s2, c2) in self.insert_nil(tk, &rest, s) {
                        out.push((m, s2, c2.scale(&c)));
                    }
                }
                let _ = vars;
                merge3(out)
            }
        }
    }

    /// Raising generator (Levi or nilradical root): commute rightward; Levi
    /// raising acts on the inducing module, nilradical raising annihilates
    /// it.
    fn e_through(&self, k: usize, mono: &[u32], s: usize) -> Vec<(Vec<u32>, usize, RatFun)> {
        let vars = self.lambda.vars().clone();
        match mono.iter().position(|&e| e > 0) {
            None => {
                if self.nil_position(k).is_some() {
                    return vec![];
                }
                let act = self
                    .inducing
                    .action(Gen::E(k))
                    .expect("Levi action available");
                let mut out = Vec::new();
                for r in 0..self.inducing.dim() {
                    let c = act.at(r, s);
                    if !c.is_zero() {
                        out.push((mono.to_vec(), r, c.clone()));
                    }
                }
                out
            }
            Some(first) => {
                let r = self.nil_roots[first];
                let mut rest = mono.to_vec();
                rest[first] -= 1;
                let mut out: Vec<(Vec<u32>, usize, RatFun)> = Vec::new();
                // E(k) F(r) = F(r) E(k) + [E(k), F(r)].
                for (m, s2, c) in self.e_through(k, &rest, s) {
                    for (m2, s3, c2) in self.insert_nil(r, &m, s2) {
                        out.push((m2, s3, c.mul(&c2)));
                    }
                }
                for (t, c) in self
                    .parabolic
                    .algebra()
                    .bracket_gens(Gen::E(k), Gen::F(r))
                {
                    match self.parabolic.algebra().gen_of(t) {
                        Gen::E(tk) => {
                            for (m, s2, c2) in self.e_through(tk, &rest, s) {
                                out.push((m, s2, c2.scale(&c)));
                            }
                        }
                        Gen::F(tk) => {
                            let terms = if self.nil_position(tk).is_some() {
                                self.insert_nil(tk, &rest, s)
                            } else {
                                self.levi_f_through(tk, &rest, s)
                            };
                            for (m, s2, c2) in terms {
                                out.push((m, s2, c2.scale(&c)));
                            }
                        }
                        Gen::H(j) => {
                            let val = self
                                .h_eigenvalue(j, &(rest.clone(), s))
                                .scale(&c);
                            if !val.is_zero() {
                                out.push((rest.clone(), s, val));
                            }
                        }
                    }
                }
                let _ = vars;
                merge3(out)
            }
        }
    }

    /// Rewrites a module vector as an enveloping-algebra element u with
    /// u . v_lambda equal to the vector: nilradical exponents become the
    /// canonical lowering word, followed by the inducing basis monomial.
    pub fn vector_as_uea(&self, v: &VermaVector) -> UEAElement {
        let vars = self.lambda.vars().clone();
        let mut out = UEAElement::zero(&vars);
        for ((exps, s), c) in &v.terms {
            let mut letters: Vec<Gen> = Vec::new();
            for (pos, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    letters.push(Gen::F(self.nil_roots[pos]));
                }
            }
            for &i in &self.inducing.basis()[*s].word {
                let mut unit = vec![0i64; self.parabolic.algebra().rank()];
                unit[i] = 1;
                let k = self
                    .parabolic
                    .algebra()
                    .system()
                    .positive_root_index(&unit)
                    .expect("simple root");
                letters.push(Gen::F(k));
            }
            out.insert(crate::lie::Word::from_letters(letters), c.clone());
        }
        out
    }

    /// The 𝔥̄-weight of a vector under an embedding: all terms must project
    /// to the same bar weight; returns it, or None for mixed vectors.
    pub fn bar_weight(
        &self,
        e: &crate::lie::Embedding,
        v: &VermaVector,
    ) -> Option<Vec<i64>> {
        let mut seen: Option<Vec<i64>> = None;
        for idx in v.terms.keys() {
            let off = self.offset_of(idx);
            let p = e.pr_coords(&off);
            match &seen {
                None => seen = Some(p),
                Some(q) if *q == p => {}
                _ => return None,
            }
        }
        seen
    }
}

fn merge3(terms: Vec<(Vec<u32>, usize, RatFun)>) -> Vec<(Vec<u32>, usize, RatFun)> {
    let mut map: BTreeMap<(Vec<u32>, usize), RatFun> = BTreeMap::new();
    for (m, s, c) in terms {
        if c.is_zero() {
            continue;
        }
        use std::collections::btree_map::Entry;
        match map.entry((m, s)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
    map.into_iter().map(|((m, s), c)| (m, s, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_algebra, parse_uea};
    use crate::roots::parse_weight;

    fn setup(lambda: &str) -> (GeneralizedVerma, VarSet) {
        let so7 = Arc::new(build_algebra('B', 3).unwrap());
        let vars = VarSet::new(vec!["x1"]);
        let lam = parse_weight(so7.system(), &vars, lambda).unwrap();
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        (GeneralizedVerma::new(p, &lam).unwrap(), vars)
    }

    #[test]
    fn lowering_into_the_nilradical() {
        let (m, vars) = setup("x1*w1");
        let v = m.highest_vector();
        let u = parse_uea(&vars, "g_{-9}").unwrap();
        let out = m.act(&u, &v);
        assert_eq!(out.terms.len(), 1);
        let ((exps, s), c) = out.terms.iter().next().unwrap();
        // g_{-9} has the largest nilradical root, position 0.
        assert_eq!(exps, &vec![1, 0, 0, 0, 0]);
        assert_eq!(*s, 0);
        assert!(c.is_one());
    }

    #[test]
    fn cartan_value_after_round_trip() {
        let (m, vars) = setup("x1*w1");
        let v = m.highest_vector();
        // g9 g-9 . v = [g9, g-9] . v = lambda(h-combination) v.
        let u = parse_uea(&vars, "g_{9}g_{-9}").unwrap();
        let out = m.act(&u, &v);
        assert_eq!(out.terms.len(), 1);
        let ((exps, _), c) = out.terms.iter().next().unwrap();
        assert!(exps.iter().all(|&e| e == 0));
        // [g9, g-9] = h_{e1+e2} = h1 + 2h2 + 2h3 (root (1,2,2));
        // <lambda, e1 + e2> = x1 <w1, e1> = x1.
        assert_eq!(c.to_string(), "x1");
    }

    #[test]
    fn degree_dimensions() {
        let (m, _) = setup("x1*w1 + w2");
        // dim at degree d = 5 * C(d+4, 4).
        assert_eq!(m.dim_at_degree(0), 5);
        assert_eq!(m.dim_at_degree(1), 25);
        assert_eq!(m.dim_at_degree(2), 75);
        assert_eq!(m.dim_at_degree(6), 1050);
    }
}
