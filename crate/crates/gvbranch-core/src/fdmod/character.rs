use std::collections::BTreeMap;

use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::arith::{rat_int, RatFun, Rational};
use crate::error::{Error, Result};
use crate::roots::{rho, Basis, RootSystem, SystemTag, Weight};

/// A finitely supported weight multiplicity function, stored as integer
/// offsets below a (possibly symbolic) base weight. The weight of a term is
/// `base - offset` with the offset in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub system: SystemTag,
    pub base: Weight,
    pub terms: BTreeMap<Vec<i64>, u64>,
}

impl Character {
    pub fn new(base: Weight) -> Self {
        Character { system: base.system, base, terms: BTreeMap::new() }
    }

    pub fn total_mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, offset: Vec<i64>, mult: u64) {
        if mult == 0 {
            return;
        }
        *self.terms.entry(offset).or_insert(0) += mult;
    }

    /// Subtracts; errors if any multiplicity would go negative.
    pub fn subtract(&mut self, other: &Character, factor: u64) -> Result<()> {
        for (off, m) in &other.terms {
            let have = self.terms.get(off).copied().unwrap_or(0);
            let need = m * factor;
            if have < need {
                return Err(Error::Internal(format!(
                    "character subtraction went negative at offset {off:?}"
                )));
            }
            if have == need {
                self.terms.remove(off);
            } else {
                self.terms.insert(off.clone(), have - need);
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The weight of a stored offset.
    pub fn weight_of(&self, offset: &[i64]) -> Weight {
        let vars = self.base.vars().clone();
        let off = Weight::numeric(
            self.system,
            Basis::SimpleRoot,
            &offset.iter().map(|&c| rat_int(c)).collect::<Vec<_>>(),
            &vars,
        );
        self.base.sub(&off).expect("same system")
    }

    /// Rebases the character against a new base weight; the difference must
    /// be an integer combination of simple roots.
    pub fn rebase(&self, new_base: &Weight, shift: &[i64]) -> Character {
        let mut out = Character::new(new_base.clone());
        for (off, m) in &self.terms {
            let moved: Vec<i64> = off.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.add_term(moved, *m);
        }
        out
    }
}

impl Serialize for Character {
    /// JSON: `[{weight, mult}, ...]`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            weight: Weight,
            mult: u64,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (off, m) in &self.terms {
            seq.serialize_element(&Term { weight: self.weight_of(off), mult: *m })?;
        }
        seq.end()
    }
}

/// Exact weight multiplicities of the irreducible module V_lambda(levi) by
/// the Freudenthal recursion over the Levi root system. The highest weight
/// may carry symbolic central coordinates; only the pairings with Levi roots
/// must be numeric.
pub fn freudenthal_character(
    rs: &RootSystem,
    levi: &[usize],
    lambda: &Weight,
) -> Result<Character> {
    let rank = rs.rank();
    let lam_fund = rs.convert(lambda, Basis::Fundamental)?;
    // Levi fundamental coordinates must be numeric nonnegative integers.
    let mut levi_coords: Vec<Rational> = Vec::new();
    for &i in levi {
        let c = lam_fund.coords[i]
            .as_rational()
            .ok_or_else(|| Error::NonDominant("symbolic coordinate on the Levi part".into()))?;
        if !c.is_integer() || c < Rational::zero() {
            return Err(Error::NonDominant(format!(
                "coordinate {c} on the Levi part is not a nonnegative integer"
            )));
        }
        levi_coords.push(c);
    }
    let positive = rs.levi_positive_roots(levi);
    let rho_l = rho(rs, levi, lambda.vars());
    let rho_s = rho_l.numeric_coords().unwrap();

    // <lambda, v> for v supported on the Levi: use fundamental coordinates.
    let lam_pair = |v: &[Rational]| -> Rational {
        // <lambda, v> = sum_j fund_j(lambda) <eta_j, eta_j>/2 * c_j(v) ...
        // more directly: <lambda, v> = sum_j c_j(v) <lambda, eta_j> and
        // <lambda, eta_j> = fund_j * <eta_j, eta_j> / 2.
        let mut acc = Rational::zero();
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let fund = lam_fund.coords[j]
                .as_rational()
                .expect("off-Levi coordinates never pair with Levi-supported vectors");
            acc += c.clone() * fund * rs.form()[j][j].clone() / rat_int(2);
        }
        acc
    };

    let mut char_out = Character::new(lambda.clone());
    let mut mults: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    mults.insert(vec![0; rank], 1);
    char_out.add_term(vec![0; rank], 1);

    let mut level_offsets: Vec<Vec<i64>> = vec![vec![0; rank]];
    loop {
        // Next level: previous offsets plus one Levi positive simple root.
        let mut next: Vec<Vec<i64>> = Vec::new();
        for off in &level_offsets {
            for &i in levi {
                let mut o = off.clone();
                o[i] += 1;
                if !next.contains(&o) {
                    next.push(o);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut any = false;
        for off in &next {
            let m = freudenthal_at(rs, &positive, &rho_s, &lam_pair, &mults, off);
            if m > 0 {
                mults.insert(off.clone(), m);
                char_out.add_term(off.clone(), m);
                any = true;
            }
        }
        if !any {
            break;
        }
        level_offsets = next;
    }
    Ok(char_out)
}

/// One Freudenthal step: multiplicity at lambda - off given all shallower
/// multiplicities.
fn freudenthal_at(
    rs: &RootSystem,
    positive: &[Vec<i64>],
    rho_s: &[Rational],
    lam_pair: &dyn Fn(&[Rational]) -> Rational,
    mults: &BTreeMap<Vec<i64>, u64>,
    off: &[i64],
) -> u64 {
    let to_rat = |v: &[i64]| -> Vec<Rational> { v.iter().map(|&c| rat_int(c)).collect() };
    let off_r = to_rat(off);
    // Denominator: <l+rho, l+rho> - <mu+rho, mu+rho> = 2 <l+rho, d> - <d, d>.
    let denom = (lam_pair(&off_r) + rs.form_value(rho_s, &off_r)) * rat_int(2)
        - rs.form_value(&off_r, &off_r);
    // Numerator: 2 sum_beta sum_k m(mu + k beta) <mu + k beta, beta>.
    let mut num = Rational::zero();
    for beta in positive {
        let beta_r = to_rat(beta);
        let mut k = 1i64;
        loop {
            let up: Vec<i64> = off.iter().zip(beta).map(|(a, b)| a - k * b).collect();
            if up.iter().any(|&c| c < 0) {
                break;
            }
            if let Some(&m) = mults.get(&up) {
                if m > 0 {
                    // <mu + k beta, beta> with mu = lambda - off:
                    let shift: Vec<Rational> = off
                        .iter()
                        .zip(beta)
                        .map(|(o, b)| rat_int(k * b - o))
                        .collect();
                    let val = lam_pair(&beta_r) + rs.form_value(&shift, &beta_r);
                    num += rat_int(m as i64) * val;
                }
            }
            k += 1;
        }
    }
    num *= rat_int(2);
    if denom.is_zero() {
        // Only possible off the weight support.
        debug_assert!(num.is_zero());
        return 0;
    }
    let q = num / denom;
    debug_assert!(q.is_integer() && q >= Rational::zero());
    u64::try_from(q.to_integer()).unwrap_or(0)
}

/// Weight of a character term as rational-function coordinates in the
/// fundamental basis; helper for display layers.
pub fn term_weight_fund(ch: &Character, rs: &RootSystem, offset: &[i64]) -> Result<Vec<RatFun>> {
    let w = ch.weight_of(offset);
    Ok(rs.convert(&w, Basis::Fundamental)?.coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::VarSet;
    use crate::roots::build_root_system;

    #[test]
    fn g2_seven_dimensional_module() {
        let g2 = build_root_system('G', 2).unwrap();
        let vars = VarSet::empty();
        let psi1 = g2.fundamental_weight(0, &vars);
        let ch = freudenthal_character(&g2, &[0, 1], &psi1).unwrap();
        assert_eq!(ch.total_mass(), 7);
        // Six short-root weights with multiplicity 1 and the zero weight.
        assert_eq!(ch.terms.len(), 7);
        assert!(ch.terms.values().all(|&m| m == 1));
        // Cross-check against the crystal.
        let ct = super::super::crystal::crystal_type('G', 2).unwrap();
        let c = super::super::crystal::Crystal::build(&ct, &[1, 0]).unwrap();
        assert_eq!(c.len() as u64, ch.total_mass());
    }

    #[test]
    fn trivial_module() {
        let g2 = build_root_system('G', 2).unwrap();
        let vars = VarSet::empty();
        let zero = Weight::zero(g2.tag(), Basis::Fundamental, 2, &vars);
        let ch = freudenthal_character(&g2, &[0, 1], &zero).unwrap();
        assert_eq!(ch.total_mass(), 1);
    }

    #[test]
    fn so7_adjoint_module() {
        let b3 = build_root_system('B', 3).unwrap();
        let vars = VarSet::empty();
        let w2 = b3.fundamental_weight(1, &vars);
        let ch = freudenthal_character(&b3, &[0, 1, 2], &w2).unwrap();
        assert_eq!(ch.total_mass(), 21);
        // Zero weight (offset = highest root (1,2,2)) has multiplicity 3.
        assert_eq!(ch.terms.get(&vec![1, 2, 2]), Some(&3));
    }

    #[test]
    fn symbolic_central_coordinate() {
        // Levi {eta2, eta3} of so(7) with lambda = x1 w1 + w2: the natural
        // so(5)-module, 5-dimensional, independent of x1.
        let b3 = build_root_system('B', 3).unwrap();
        let vars = VarSet::new(vec!["x1"]);
        let lam = crate::roots::parse_weight(&b3, &vars, "x1*w1 + w2").unwrap();
        let ch = freudenthal_character(&b3, &[1, 2], &lam).unwrap();
        assert_eq!(ch.total_mass(), 5);
    }
}
