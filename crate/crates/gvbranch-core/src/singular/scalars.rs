use num_traits::Zero;
use serde::Serialize;

use crate::arith::{MultiPoly, RatFun, Rational};
use crate::error::Result;
use crate::lie::{casimir_quadratic, normal_form, Embedding, Gen};
use crate::roots::{rho, weyl_group, Basis, Weight};

/// The scalar by which the quadratic Casimir of the subalgebra acts on a
/// highest-weight module of highest weight mu.
#[derive(Debug, Clone, Serialize)]
pub struct CasimirScalar {
    pub mu: Weight,
    pub value: RatFun,
}

/// Harish-Chandra evaluation of the quadratic Casimir at mu: write the
/// Casimir in normal form, drop every word containing a raising generator,
/// and evaluate the Cartan letters at <alpha_j, mu>.
pub fn p1_scalar(e: &Embedding, mu: &Weight) -> Result<RatFun> {
    let gbar = e.source();
    let vars = mu.vars().clone();
    let c1 = casimir_quadratic(gbar, &vars)?;
    let nf = normal_form(gbar, &c1);
    let rs = gbar.system();
    let mu_s = rs.convert(mu, Basis::SimpleRoot)?;
    let mut acc = RatFun::zero(&vars);
    'terms: for (w, c) in nf.terms() {
        let mut val = c.clone();
        for g in w.letters() {
            match g {
                Gen::E(_) | Gen::F(_) => continue 'terms,
                Gen::H(j) => {
                    // <eta_j, mu>.
                    let mut eta = vec![RatFun::zero(&vars); rs.rank()];
                    eta[j - 1] = RatFun::one(&vars);
                    let eta_w = Weight::new(rs.tag(), Basis::SimpleRoot, eta);
                    let pairing = rs.bilinear(&eta_w, &mu_s)?;
                    val = val.mul(&pairing);
                }
            }
        }
        acc = acc.add(&val);
    }
    Ok(acc)
}

/// Strong and weak Condition B for a list of constituent highest weights.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionBReport {
    /// Strong form: pairwise Casimir scalars differ (generically, for
    /// symbolic weights).
    pub holds: bool,
    /// Pairs (i, j) whose scalars coincide identically.
    pub failing_pairs: Vec<(usize, usize)>,
    /// Nonconstant scalar differences, normalized to coprime integer
    /// coefficients with the sign of p1(later) - p1(earlier): the finite
    /// list of linear "!= 0" requirements on the parameters.
    pub inequalities: Vec<MultiPoly>,
    /// Weak form: no two distinct constituents are linked under the Weyl
    /// group of the subalgebra.
    pub weak_holds: bool,
    /// Pairs linked identically (with the witnessing Weyl word length).
    pub linked_pairs: Vec<(usize, usize)>,
}

pub fn strong_condition_b(e: &Embedding, constituents: &[Weight]) -> Result<ConditionBReport> {
    let mut holds = true;
    let mut failing = Vec::new();
    let mut inequalities: Vec<MultiPoly> = Vec::new();
    let scalars: Vec<RatFun> = constituents
        .iter()
        .map(|mu| p1_scalar(e, mu))
        .collect::<Result<_>>()?;
    for i in 0..constituents.len() {
        for j in (i + 1)..constituents.len() {
            if constituents[i] == constituents[j] {
                // Identical weights occur for multiplicities n > 1 and are
                // exempt from the pairwise-distinct requirement.
                continue;
            }
            let diff = scalars[j].sub(&scalars[i]);
            if diff.is_zero() {
                holds = false;
                failing.push((i, j));
            } else {
                let poly = diff
                    .as_poly()
                    .cloned()
                    .unwrap_or_else(|| diff.num().clone());
                let (normalized, factor) = poly.primitive_normalize();
                let signed = if factor < Rational::zero() {
                    normalized.neg()
                } else {
                    normalized
                };
                if !inequalities.contains(&signed) {
                    inequalities.push(signed);
                }
            }
        }
    }

    // Weak form by linkage: w(mu + rho) - rho = nu for some Weyl element.
    let rs = e.source().system();
    let vars = constituents
        .first()
        .map(|w| w.vars().clone())
        .unwrap_or_else(crate::arith::VarSet::empty);
    let rho_bar = rho(rs, &(0..rs.rank()).collect::<Vec<_>>(), &vars);
    let mut weak_holds = true;
    let mut linked = Vec::new();
    let group = weyl_group(rs, &(0..rs.rank()).collect::<Vec<_>>());
    for i in 0..constituents.len() {
        for j in 0..constituents.len() {
            if i == j || constituents[i] == constituents[j] {
                continue;
            }
            let mu_rho = rs
                .convert(&constituents[i], Basis::SimpleRoot)?
                .add(&rho_bar)?;
            for w in &group {
                if w.word.is_empty() {
                    continue;
                }
                let moved = w.apply(rs, &mu_rho)?.sub(&rho_bar)?;
                let target = rs.convert(&constituents[j], Basis::SimpleRoot)?;
                if moved == target {
                    weak_holds = false;
                    if !linked.contains(&(j, i)) {
                        linked.push((i, j));
                    }
                }
            }
        }
    }
    Ok(ConditionBReport {
        holds,
        failing_pairs: failing,
        inequalities,
        weak_holds,
        linked_pairs: linked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, rat, rat_int, VarSet};
    use crate::lie::build_embedding_g2_so7;

    #[test]
    fn p1_matches_printed_polynomial() {
        // p1 as a polynomial in the fundamental coordinates (m1, m2):
        // 1/12 m1^2 + 1/4 m1 m2 + 1/4 m2^2 + 5/12 m1 + 3/4 m2.
        let e = build_embedding_g2_so7().unwrap();
        let vars = VarSet::new(vec!["m1", "m2"]);
        let g2 = e.source().system();
        let m1 = RatFun::from_poly(parse_poly(&vars, "m1").unwrap());
        let m2 = RatFun::from_poly(parse_poly(&vars, "m2").unwrap());
        let mu = Weight::new(g2.tag(), Basis::Fundamental, vec![m1, m2]);
        let p1 = p1_scalar(&e, &mu).unwrap();
        let expect = RatFun::from_poly(
            parse_poly(&vars, "1/12m1^2+1/4m1m2+1/4m2^2+5/12m1+3/4m2").unwrap(),
        );
        assert_eq!(p1, expect);
    }

    #[test]
    fn p1_special_values() {
        let e = build_embedding_g2_so7().unwrap();
        let vars = VarSet::empty();
        let g2 = e.source().system();
        let zero = Weight::zero(g2.tag(), Basis::Fundamental, 2, &vars);
        assert!(p1_scalar(&e, &zero).unwrap().is_zero());
        // The adjoint weight psi2 gives exactly 1 (Killing normalization).
        let psi2 = g2.fundamental_weight(1, &vars);
        assert_eq!(
            p1_scalar(&e, &psi2).unwrap().as_rational().unwrap(),
            rat_int(1)
        );
        let psi1 = g2.fundamental_weight(0, &vars);
        assert_eq!(
            p1_scalar(&e, &psi1).unwrap().as_rational().unwrap(),
            rat(1, 2)
        );
    }

    #[test]
    fn single_constituent_is_vacuous() {
        let e = build_embedding_g2_so7().unwrap();
        let vars = VarSet::empty();
        let psi1 = e.source().system().fundamental_weight(0, &vars);
        let rep = strong_condition_b(&e, &[psi1]).unwrap();
        assert!(rep.holds);
        assert!(rep.weak_holds);
        assert!(rep.inequalities.is_empty());
    }
}
