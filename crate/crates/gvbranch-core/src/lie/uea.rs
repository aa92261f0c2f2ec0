use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::Serialize;

use super::algebra::{ChevalleyAlgebra, Gen};
use crate::arith::{parse_poly, RatFun, VarSet};
use crate::error::{Error, Result};

/// A formal word in the generators: factors with positive exponents, not
/// auto-normalized. Adjacent equal generators are merged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<(Gen, u32)>);

impl Word {
    pub fn one() -> Self {
        Word(vec![])
    }

    pub fn single(g: Gen) -> Self {
        Word(vec![(g, 1)])
    }

    pub fn from_letters<I: IntoIterator<Item = Gen>>(letters: I) -> Self {
        let mut out: Vec<(Gen, u32)> = Vec::new();
        for g in letters {
            match out.last_mut() {
                Some((last, e)) if *last == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0.iter().flat_map(|&(g, e)| std::iter::repeat(g).take(e as usize))
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters().chain(other.letters()))
    }

    /// Net h-weight of the word in simple coordinates of the algebra.
    pub fn weight(&self, algebra: &ChevalleyAlgebra) -> Vec<i64> {
        let mut acc = vec![0i64; algebra.rank()];
        for (g, e) in &self.0 {
            let r = algebra.gen_root(*g);
            for (i, &c) in r.iter().enumerate() {
                acc[i] += c * (*e as i64);
            }
        }
        acc
    }
}

/// Formal linear combination of generator words with rational-function
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEAElement {
    vars: VarSet,
    terms: BTreeMap<Word, RatFun>,
}

impl UEAElement {
    pub fn zero(vars: &VarSet) -> Self {
        UEAElement { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_term(RatFun::one(vars), Word::one())
    }

    pub fn from_term(coeff: RatFun, word: Word) -> Self {
        let vars = coeff.vars().clone();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        UEAElement { vars, terms }
    }

    pub fn from_gen(vars: &VarSet, g: Gen) -> Self {
        Self::from_term(RatFun::one(vars), Word::single(g))
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFun)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert(&mut self, word: Word, coeff: RatFun) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&coeff);
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
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, k: &RatFun) -> Self {
        let mut out = Self::zero(&self.vars);
        for (w, c) in &self.terms {
            out.insert(w.clone(), c.mul(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.insert(wa.concat(wb), ca.mul(cb));
            }
        }
        out
    }
}

/// Position of a generator in the fixed normal order: lowering operators by
/// descending root index, then Cartan elements, then raising operators by
/// ascending root index.
fn pbw_key(algebra: &ChevalleyAlgebra, g: Gen) -> usize {
    let n = algebra.num_positive();
    match g {
        Gen::F(k) => n - k,
        Gen::H(j) => n + j - 1,
        Gen::E(k) => n + algebra.rank() + k - 1,
    }
}

/// Rewrites an element in the Poincare–Birkhoff–Witt normal form relative to
/// the fixed generator order, using the structure-constant table.
pub fn normal_form(algebra: &ChevalleyAlgebra, u: &UEAElement) -> UEAElement {
    let vars = u.vars().clone();
    let mut out = UEAElement::zero(&vars);
    let mut stack: Vec<(RatFun, Vec<Gen>)> = u
        .terms()
        .map(|(w, c)| (c.clone(), w.letters().collect()))
        .collect();
    while let Some((coeff, word)) = stack.pop() {
        // First adjacent inversion.
        let mut inv = None;
        for i in 0..word.len().saturating_sub(1) {
            if pbw_key(algebra, word[i]) > pbw_key(algebra, word[i + 1]) {
                inv = Some(i);
                break;
            }
        }
        match inv {
            None => out.insert(Word::from_letters(word), coeff),
            Some(i) => {
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                stack.push((coeff.clone(), swapped));
                for (k, c) in algebra.bracket_gens(word[i], word[i + 1]) {
                    let mut shorter: Vec<Gen> = word[..i].to_vec();
                    shorter.push(algebra.gen_of(k));
                    shorter.extend_from_slice(&word[i + 2..]);
                    stack.push((coeff.scale(&c), shorter));
                }
            }
        }
    }
    out
}

/// The transpose anti-automorphism: reverses words and swaps raising with
/// lowering generators; Cartan elements are fixed. An involution.
pub fn transpose_antiautomorphism(u: &UEAElement) -> UEAElement {
    let mut out = UEAElement::zero(u.vars());
    for (w, c) in u.terms() {
        let letters: Vec<Gen> = w.letters().map(Gen::flip).collect();
        out.insert(Word::from_letters(letters.into_iter().rev()), c.clone());
    }
    out
}

impl fmt::Display for UEAElement {
    /// Paper style, e.g. `(-x1-2)g_{-3}g_{-2}-4g_{-4}+2g_{-2}g_{-1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) if !cs.contains('+') && c.as_rational().is_some() => {
                    (true, rest.to_string())
                }
                _ => (false, cs.clone()),
            };
            let needs_parens = !(c.as_rational().is_some()
                || (c.num().terms().count() == 1 && c.den().is_constant()));
            let mag = if needs_parens { format!("({cs})") } else { mag };
            let sign = if needs_parens { false } else { sign };
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
            let mut body = String::new();
            for (g, e) in &w.0 {
                let gs = match g {
                    Gen::E(k) => format!("g_{{{k}}}"),
                    Gen::F(k) => format!("g_{{-{k}}}"),
                    Gen::H(j) => format!("h_{{{j}}}"),
                };
                body.push_str(&gs);
                if *e > 1 {
                    body.push_str(&format!("^{{{e}}}"));
                }
            }
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{body}")?;
            } else {
                write!(f, "{mag}{body}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for UEAElement {
    /// `[{coeff, word: [[genIndex, exp], ...]}, ...]` where genIndex is the
    /// signed root index (negative for lowering) and 0-padded Cartan indices
    /// are encoded as `h<j>` strings... kept simple: signed integers, with
    /// Cartan H(j) encoded as `[0, j]` pairs replaced by index 1000 + j.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            coeff: String,
            word: Vec<(i64, u32)>,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in self.terms.iter().rev() {
            let word = w
                .0
                .iter()
                .map(|(g, e)| {
                    let idx = match g {
                        Gen::E(k) => *k as i64,
                        Gen::F(k) => -(*k as i64),
                        Gen::H(j) => 1000 + *j as i64,
                    };
                    (idx, *e)
                })
                .collect();
            seq.serialize_element(&Term { coeff: c.to_string(), word })?;
        }
        seq.end()
    }
}

/// Parses paper-style expressions such as
/// `(-x1-2)g_{-3}g_{-2} - 4g_{-4} + 2g_{-2}g_{-1}` or `3h1h2+9g-6g6`.
/// Both `g_{-3}` and `g-3` token forms are accepted, with exponents `^2` or
/// `^{2}`.
pub fn parse_uea(vars: &VarSet, input: &str) -> Result<UEAElement> {
    let chars: Vec<char> = input.chars().collect();
    let n = chars.len();
    let mut i = 0;
    let mut out = UEAElement::zero(vars);
    let is_gen_start = |chars: &[char], i: usize| -> bool {
        if i >= chars.len() || (chars[i] != 'g' && chars[i] != 'h') {
            return false;
        }
        let mut j = i + 1;
        if j < chars.len() && chars[j] == '_' {
            j += 1;
        }
        if j < chars.len() && chars[j] == '{' {
            j += 1;
        }
        if j < chars.len() && chars[j] == '-' {
            j += 1;
        }
        j < chars.len() && chars[j].is_ascii_digit()
    };
    while i < n {
        while i < n && (chars[i] == ' ' || chars[i] == '\n') {
            i += 1;
        }
        if i >= n {
            break;
        }
        // Leading sign(s) for this term.
        let mut sign = 1i64;
        while i < n && (chars[i] == '+' || chars[i] == '-' || chars[i] == ' ') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        // Coefficient text: up to a top-level generator start.
        let mut depth = 0usize;
        let cstart = i;
        while i < n {
            let c = chars[i];
            if c == '(' {
                depth += 1;
            } else if c == ')' {
                depth -= 1;
            } else if depth == 0 {
                if (c == '+' || c == '-') && i > cstart {
                    break;
                }
                if is_gen_start(&chars, i) {
                    break;
                }
            }
            i += 1;
        }
        let coeff_text: String = chars[cstart..i].iter().collect::<String>().trim().to_string();
        let coeff_poly = if coeff_text.is_empty() || coeff_text == "*" {
            crate::arith::MultiPoly::one(vars)
        } else {
            parse_poly(vars, &coeff_text)?
        };
        // Generator tokens.
        let mut letters: Vec<(Gen, u32)> = Vec::new();
        loop {
            while i < n && (chars[i] == ' ' || chars[i] == '*' || chars[i] == '\n') {
                i += 1;
            }
            if !is_gen_start(&chars, i) {
                break;
            }
            let kind = chars[i];
            i += 1;
            if i < n && chars[i] == '_' {
                i += 1;
            }
            let braced = i < n && chars[i] == '{';
            if braced {
                i += 1;
            }
            let mut neg = false;
            if i < n && chars[i] == '-' {
                neg = true;
                i += 1;
            }
            let dstart = i;
            while i < n && chars[i].is_ascii_digit() {
                i += 1;
            }
            let idx: usize = chars[dstart..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in `{input}`")))?;
            if braced {
                if i < n && chars[i] == '}' {
                    i += 1;
                } else {
                    return Err(Error::Parse(format!("unclosed generator brace in `{input}`")));
                }
            }
            let mut exp = 1u32;
            if i < n && chars[i] == '^' {
                i += 1;
                let b2 = i < n && chars[i] == '{';
                if b2 {
                    i += 1;
                }
                let estart = i;
                while i < n && chars[i].is_ascii_digit() {
                    i += 1;
                }
                exp = chars[estart..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{input}`")))?;
                if b2 {
                    if i < n && chars[i] == '}' {
                        i += 1;
                    } else {
                        return Err(Error::Parse(format!("unclosed exponent brace in `{input}`")));
                    }
                }
            }
            let g = match (kind, neg) {
                ('g', false) => Gen::E(idx),
                ('g', true) => Gen::F(idx),
                ('h', false) => Gen::H(idx),
                _ => return Err(Error::Parse(format!("negative Cartan index in `{input}`"))),
            };
            letters.push((g, exp));
        }
        let mut coeff = RatFun::from_poly(coeff_poly);
        if sign < 0 {
            coeff = coeff.neg();
        }
        let word = Word::from_letters(
            letters
                .into_iter()
                .flat_map(|(g, e)| std::iter::repeat(g).take(e as usize)),
        );
        out.insert(word, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::algebra::build_algebra;
    use super::*;
    use crate::arith::rat_int;

    fn v1() -> VarSet {
        VarSet::new(vec!["x1"])
    }

    #[test]
    fn parse_and_display() {
        let u = parse_uea(&v1(), "(-x1-2)g_{-3}g_{-2}-4g_{-4}+2g_{-2}g_{-1}").unwrap();
        assert_eq!(u.num_terms(), 3);
        let again = parse_uea(&v1(), &u.to_string()).unwrap();
        assert_eq!(u, again);
        let cas = parse_uea(&VarSet::empty(), "h1^2+3h1h2+9g-6g6").unwrap();
        assert_eq!(cas.num_terms(), 3);
    }

    #[test]
    fn transpose_is_an_involution() {
        let u = parse_uea(&v1(), "g_{-3}g_{-2}+x1g_{-1}h_{2}").unwrap();
        let t = transpose_antiautomorphism(&u);
        let tt = transpose_antiautomorphism(&t);
        assert_eq!(u, tt);
        // tau(g-3 g-2) = g2 g3.
        let w = parse_uea(&v1(), "g_{-3}g_{-2}").unwrap();
        let tw = transpose_antiautomorphism(&w);
        assert_eq!(tw, parse_uea(&v1(), "g_{2}g_{3}").unwrap());
        // tau(h1) = h1.
        let h = parse_uea(&v1(), "h_{1}").unwrap();
        assert_eq!(transpose_antiautomorphism(&h), h);
    }

    #[test]
    fn normal_form_straightens_ef() {
        let a1 = build_algebra('A', 1).unwrap();
        let vars = VarSet::empty();
        // e f = f e + h.
        let u = parse_uea(&vars, "g1g-1").unwrap();
        let nf = normal_form(&a1, &u);
        let expect = parse_uea(&vars, "g-1g1+h1").unwrap();
        assert_eq!(nf, expect);
        // Idempotent on normal forms.
        assert_eq!(normal_form(&a1, &nf), nf);
    }

    #[test]
    fn word_weight() {
        let so7 = build_algebra('B', 3).unwrap();
        let u = Word::from_letters([Gen::F(3), Gen::F(2)]);
        assert_eq!(u.weight(&so7), vec![0, -1, -1]);
        let _ = rat_int(0);
    }
}
