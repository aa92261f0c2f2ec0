use serde::Serialize;

use super::scalars::{p1_scalar, strong_condition_b};
use crate::arith::{RatFun, VarSet};
use crate::error::{Error, Result};
use crate::fdmod::{decompose_over_bar_levi, fd_singular_vectors};
use crate::lie::{casimir_quadratic, Embedding, Gen, UEAElement, Word};
use crate::roots::{Basis, Weight};
use crate::verma::{induced_bar_parabolic, GeneralizedVerma, VermaVector};

/// Per-generator annihilation results plus the common bar weight.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    /// (bar simple index 1-based, annihilated exactly).
    pub annihilated: Vec<(usize, bool)>,
    /// The common bar weight offset below pr(lambda), when uniform.
    pub weight_offset: Option<Vec<i64>>,
    pub passed: bool,
}

/// Checks that the image of every simple raising generator of the
/// subalgebra kills the vector, and that all terms share one bar weight.
pub fn verify_singular(
    gvm: &GeneralizedVerma,
    e: &Embedding,
    v: &VermaVector,
) -> Result<VerificationReport> {
    let vars = gvm.lambda().vars().clone();
    let bar_rank = e.source().rank();
    let mut annihilated = Vec::new();
    let mut passed = true;
    for j in 1..=bar_rank {
        let img = image_as_uea(e, Gen::E(j), &vars);
        let out = gvm.act(&img, v);
        let ok = out.is_zero();
        passed &= ok;
        annihilated.push((j, ok));
    }
    let pr_lambda_off = gvm.bar_weight(e, v);
    let weight_offset = pr_lambda_off;
    if weight_offset.is_none() {
        passed = false;
    }
    Ok(VerificationReport { annihilated, weight_offset, passed })
}

/// A target generator image as a 1-letter enveloping-algebra element.
pub fn image_as_uea(e: &Embedding, g: Gen, vars: &VarSet) -> UEAElement {
    let mut u = UEAElement::zero(vars);
    for (idx, c) in e.image_of(g).iter().enumerate() {
        if !c.is_zero() {
            u.insert(
                Word::single(e.target().gen_of(idx)),
                RatFun::constant(vars, c.clone()),
            );
        }
    }
    u
}

use num_traits::Zero;

/// One constructed top-level singular vector with its audit trail.
#[derive(Debug, Clone)]
pub struct SingularVectorResult {
    /// Offset of the target bar weight below pr(lambda).
    pub mu_offset: Vec<i64>,
    pub mu: Weight,
    /// Casimir projector factors applied: (constituent offset, p1 scalar).
    pub projector: Vec<(Vec<i64>, RatFun)>,
    /// Normalized output: coprime integer coefficients, leading term
    /// positive.
    pub vector: VermaVector,
    /// The projector output before normalization; its Shapovalov norm is
    /// what the critical-value tables list.
    pub raw: VermaVector,
    pub verification: VerificationReport,
}

/// Applies the Casimir projector attached to one constituent to the given
/// inducing-module singular vector.
///
/// `constituents` lists the full decomposition (offset, weight,
/// multiplicity) of the inducing module over the bar Levi; the projector
/// runs over the constituents at strictly higher grading level than
/// `mu_offset`, with one factor per constituent copy.
pub fn build_singular_vector(
    gvm: &GeneralizedVerma,
    e: &Embedding,
    constituents: &[(Vec<i64>, Weight, u64)],
    mu_offset: &[i64],
    fd_vector: &[(usize, RatFun)],
) -> Result<SingularVectorResult> {
    let vars = gvm.lambda().vars().clone();
    let bar = induced_bar_parabolic(gvm.parabolic(), e)?;
    let crossed = bar.crossed();
    let level = |off: &[i64]| -> i64 { crossed.iter().map(|&j| off[j]).sum() };
    let mu_level = level(mu_offset);

    // Strong Condition B for the pairs the projector separates.
    let mu_weight = constituents
        .iter()
        .find(|(off, _, _)| off == mu_offset)
        .map(|(_, w, _)| w.clone())
        .ok_or_else(|| Error::Usage("mu is not a constituent of the decomposition".into()))?;
    let mut factors: Vec<(Vec<i64>, Weight, u64)> = constituents
        .iter()
        .filter(|(off, _, _)| level(off) < mu_level)
        .cloned()
        .collect();
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    factors.dedup_by(|a, b| a.0 == b.0);
    for (off, nu, _) in &factors {
        let rep = strong_condition_b(e, &[nu.clone(), mu_weight.clone()])?;
        if !rep.holds {
            let ineq = p1_scalar(e, nu)?.sub(&p1_scalar(e, &mu_weight)?);
            return Err(Error::ConditionB { inequality: format!("p1 difference at offset {off:?} = {ineq}") });
        }
    }

    // Start from 1 (x) fd_vector and apply (i(c1) - p1(nu)) per constituent
    // copy.
    let c1 = casimir_quadratic(e.source(), &vars)?;
    let ic1 = e.embed_uea(&c1);
    let mut v = VermaVector::zero();
    for (s, c) in fd_vector {
        v = v.add(&gvm.top_vector(*s, c.clone()));
    }
    let mut projector = Vec::new();
    for (off, nu, mult) in &factors {
        let p1 = p1_scalar(e, nu)?;
        for _ in 0..*mult {
            let acted = gvm.act(&ic1, &v);
            v = acted.sub(&v.scale(&p1));
            projector.push((off.clone(), p1.clone()));
        }
    }
    if v.is_zero() {
        return Err(Error::Internal(format!(
            "projector annihilated the candidate vector at offset {mu_offset:?}"
        )));
    }
    let (normalized, _) = v.normalize();
    let verification = verify_singular(gvm, e, &normalized)?;
    Ok(SingularVectorResult {
        mu_offset: mu_offset.to_vec(),
        mu: mu_weight,
        projector,
        vector: normalized,
        raw: v,
        verification,
    })
}

/// Full top-level run: decomposes the inducing module over the bar Levi and
/// produces all constructed singular vectors with verification.
pub fn top_level_singular_vectors(
    gvm: &GeneralizedVerma,
    e: &Embedding,
) -> Result<Vec<SingularVectorResult>> {
    let bar = induced_bar_parabolic(gvm.parabolic(), e)?;
    let constituents = decompose_over_bar_levi(gvm.inducing(), e, &bar.levi_simple())?;
    // Strong Condition B across distinct constituent weights.
    let weights: Vec<Weight> = constituents.iter().map(|c| c.mu.clone()).collect();
    let rep = strong_condition_b(e, &weights)?;
    if !rep.holds {
        let pair = rep.failing_pairs[0];
        return Err(Error::ConditionB {
            inequality: format!(
                "constituents {:?} and {:?} share their Casimir scalar",
                constituents[pair.0].offset, constituents[pair.1].offset
            ),
        });
    }
    let pairs: Vec<(Vec<i64>, Weight, u64)> = constituents
        .iter()
        .map(|c| (c.offset.clone(), c.mu.clone(), c.multiplicity))
        .collect();
    let mut out = Vec::new();
    for c in &constituents {
        let fd_vecs = fd_singular_vectors(gvm.inducing(), e, &bar.levi_simple(), &c.offset)?;
        if fd_vecs.len() as u64 != c.multiplicity {
            return Err(Error::Internal(format!(
                "found {} singular vectors at offset {:?}, expected {}",
                fd_vecs.len(),
                c.offset,
                c.multiplicity
            )));
        }
        for fd in fd_vecs {
            out.push(build_singular_vector(gvm, e, &pairs, &c.offset, &fd)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_embedding_g2_so7, parse_uea};
    use crate::roots::parse_weight;
    use crate::verma::ParabolicSubalgebra;
    use std::sync::Arc;

    #[test]
    fn highest_vector_is_singular() {
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        let vars = VarSet::new(vec!["x1"]);
        let lam = parse_weight(e.target().system(), &vars, "x1*w1").unwrap();
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        let gvm = GeneralizedVerma::new(p, &lam).unwrap();
        let hw = gvm.highest_vector();
        let rep = verify_singular(&gvm, &e, &hw).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.weight_offset, Some(vec![0, 0]));
    }

    #[test]
    fn lone_nilradical_descent_fails_verification() {
        // g_{-9} v_lambda for generic lambda is not bar-singular: i(gbar_2)
        // does not annihilate it.
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        let vars = VarSet::new(vec!["x1"]);
        let lam = parse_weight(e.target().system(), &vars, "x1*w1").unwrap();
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        let gvm = GeneralizedVerma::new(p, &lam).unwrap();
        let u = parse_uea(&vars, "g_{-9}").unwrap();
        let v = gvm.act(&u, &gvm.highest_vector());
        let rep = verify_singular(&gvm, &e, &v).unwrap();
        assert!(!rep.passed);
        let failed: Vec<usize> = rep
            .annihilated
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(j, _)| j)
            .collect();
        assert_eq!(failed, vec![2]);
    }

    #[test]
    fn adjoint_family_first_vector_matches_theorem() {
        // lambda = x1 w1 + w2 over p(1,0,0): the first nontrivial singular
        // vector is (-x1-2) g-3 g-2 - 4 g-4 + 2 g-2 g-1 applied to v_lambda.
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        let vars = VarSet::new(vec!["x1"]);
        let lam = parse_weight(e.target().system(), &vars, "x1*w1+w2").unwrap();
        let p = ParabolicSubalgebra::new(so7, &[1, 0, 0]).unwrap();
        let gvm = GeneralizedVerma::new(p, &lam).unwrap();
        let results = top_level_singular_vectors(&gvm, &e).unwrap();
        assert_eq!(results.len(), 3);
        for r in &results {
            assert!(r.verification.passed, "offset {:?}", r.mu_offset);
        }
        let printed = parse_uea(&vars, "(-x1-2)g_{-3}g_{-2}-4g_{-4}+2g_{-2}g_{-1}").unwrap();
        let expected = gvm.act(&printed, &gvm.highest_vector());
        let hit = results
            .iter()
            .any(|r| r.vector.proportional_to(&expected).is_some());
        assert!(hit, "printed v_{{lambda,1}} must appear up to scalar");
    }
}
