use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::poly::{poly_gcd, MultiPoly, VarSet};
use super::{rat_to_string, Rational};
use crate::error::{Error, Result};

/// Rational function in canonical form: gcd(num, den) = 1 and the denominator
/// has coprime integer coefficients with positive leading coefficient under
/// graded lex. The representation is unique, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        num.check_same_vars(&den)?;
        if den.is_zero() {
            return Err(Error::Usage("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFun { den: MultiPoly::one(num.vars()), num };
        }
        let g = poly_gcd(&num, &den).expect("same vars");
        let num = num.div_exact(&g);
        let den = den.div_exact(&g);
        let (den, factor) = den.primitive_normalize();
        let num = num.scale(&(Rational::one() / factor));
        RatFun { num, den }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.vars());
        RatFun { num: p, den }
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::from_poly(MultiPoly::zero(vars))
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_poly(MultiPoly::one(vars))
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }

    /// The polynomial numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::normalized(self.num.scale(k), self.den.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Usage("division by zero".into()));
        }
        Ok(Self::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one(self.vars()).div(self)
    }
}

/// Exact evaluation at a full assignment of the variables.
pub fn evaluate(f: &RatFun, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
    let names = f.vars().names();
    let mut values = Vec::with_capacity(names.len());
    for n in names {
        let v = assignment
            .get(n)
            .ok_or_else(|| Error::Usage(format!("assignment misses variable {n}")))?;
        values.push(v.clone());
    }
    let den = f.den().eval(&values);
    if den.is_zero() {
        return Err(Error::Pole { factor: f.den().to_string() });
    }
    Ok(f.num().eval(&values) / den)
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(r) = self.as_rational() {
            s.serialize_str(&rat_to_string(&r))
        } else {
            s.serialize_str(&self.to_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, rat_int};
    use super::*;

    fn v() -> VarSet {
        VarSet::new(vec!["x1"])
    }

    fn pf(s: &str) -> MultiPoly {
        parse_poly(&v(), s).unwrap()
    }

    #[test]
    fn canonical_form_idempotent() {
        let f = RatFun::new(pf("2x1^2+2x1"), pf("-4x1-4")).unwrap();
        // (2x1(x1+1)) / (-4(x1+1)) = -x1/2.
        assert_eq!(f.num(), &pf("-1/2x1"));
        assert_eq!(f.den(), &pf("1"));
        let again = RatFun::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn evaluate_examples() {
        let mut asg = BTreeMap::new();
        asg.insert("x1".to_string(), rat_int(-2));
        let f = RatFun::from_poly(pf("x1^2+8x1+12"));
        assert_eq!(evaluate(&f, &asg).unwrap(), rat_int(0));

        let g = RatFun::new(pf("x1"), pf("x1")).unwrap();
        let mut asg5 = BTreeMap::new();
        asg5.insert("x1".to_string(), rat_int(5));
        assert_eq!(evaluate(&g, &asg5).unwrap(), rat_int(1));

        let p1 = RatFun::from_poly(pf("1/12x1^2+2/3x1+1"));
        let mut asg0 = BTreeMap::new();
        asg0.insert("x1".to_string(), rat_int(0));
        assert_eq!(evaluate(&p1, &asg0).unwrap(), rat_int(1));
    }

    #[test]
    fn pole_reports_factor() {
        let f = RatFun::new(pf("1"), pf("x1+2")).unwrap();
        let mut asg = BTreeMap::new();
        asg.insert("x1".to_string(), rat_int(-2));
        match evaluate(&f, &asg) {
            Err(Error::Pole { factor }) => assert_eq!(factor, "x1+2"),
            other => panic!("expected pole, got {other:?}"),
        }
    }
}
