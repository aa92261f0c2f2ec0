use num_traits::Zero;

use super::character::{freudenthal_character, Character};
use super::module::FiniteModule;
use crate::arith::{ExactMatrix, RatFun};
use crate::error::{Error, Result};
use crate::lie::Embedding;
use crate::roots::Weight;

/// Pushforward of a character along the embedding's weight projection; the
/// total multiplicity mass is preserved.
pub fn project_character(c: &Character, e: &Embedding) -> Result<Character> {
    let base = e.pr_weight(&c.base)?;
    let mut out = Character::new(base);
    for (off, m) in &c.terms {
        out.add_term(e.pr_coords(off), *m);
    }
    Ok(out)
}

/// One constituent of a decomposition over the induced Levi: the highest
/// weight as an offset below the projected base, and its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub mu: Weight,
    pub offset: Vec<i64>,
    pub multiplicity: u64,
}

/// Decomposes the restriction of the inducing module over the bar Levi by
/// repeated subtraction of bar-Levi characters at bar-maximal weights.
///
/// `bar_levi` lists 0-based simple indices of the source (bar) system. The
/// offsets in the result are relative to pr(lambda).
pub fn decompose_over_bar_levi(
    module: &FiniteModule,
    e: &Embedding,
    bar_levi: &[usize],
) -> Result<Vec<Constituent>> {
    let ch = freudenthal_character(
        module.algebra().system(),
        module.levi(),
        module.lambda(),
    )?;
    let mut p = project_character(&ch, e)?;
    let bar_rs = e.source().system();
    let bar_positive = bar_rs.positive_roots();
    let mut out: Vec<Constituent> = Vec::new();
    while !p.is_zero() {
        // Bar-maximal weights: mu with mu + alpha outside the support for
        // every positive root alpha of the source algebra. Offsets decrease
        // when weights increase, so check offset - alpha.
        let mut maximal: Vec<Vec<i64>> = Vec::new();
        for off in p.terms.keys() {
            let is_max = bar_positive.iter().all(|alpha| {
                let up: Vec<i64> = off.iter().zip(alpha).map(|(o, a)| o - a).collect();
                !p.terms.contains_key(&up)
            });
            if is_max {
                maximal.push(off.clone());
            }
        }
        // Graded-lex largest weight = smallest offset by (height, lex).
        let off = maximal
            .into_iter()
            .min_by(|a, b| {
                let ha: i64 = a.iter().sum();
                let hb: i64 = b.iter().sum();
                ha.cmp(&hb).then_with(|| a.cmp(b))
            })
            .ok_or_else(|| Error::Internal("no maximal weight in nonzero character".into()))?;
        let mult = p.terms[&off];
        let mu = p.weight_of(&off);
        let vmu = freudenthal_character(bar_rs, bar_levi, &mu)?;
        let shifted = vmu.rebase(&p.base, &off);
        p.subtract(&shifted, mult)?;
        out.push(Constituent { mu, offset: off, multiplicity: mult });
    }
    Ok(out)
}

/// The exact singular vectors of the inducing module at a bar-weight mu:
/// the joint kernel of the raising operators i(g_alpha) for the simple
/// positive roots alpha of the bar Levi, restricted to the mu weight space.
///
/// `mu_offset` is relative to pr(lambda), as produced by
/// `decompose_over_bar_levi`. Returns one normalized coordinate vector per
/// independent singular vector, as (basis index, coefficient) pairs.
pub fn fd_singular_vectors(
    module: &FiniteModule,
    e: &Embedding,
    bar_levi: &[usize],
    mu_offset: &[i64],
) -> Result<Vec<Vec<(usize, RatFun)>>> {
    let vars = module.lambda().vars().clone();
    // Basis vectors whose projected offset matches mu.
    let source_ids: Vec<usize> = module
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, b)| e.pr_coords(&b.offset) == mu_offset)
        .map(|(i, _)| i)
        .collect();
    if source_ids.is_empty() {
        return Ok(vec![]);
    }
    // Raising operators: images of the bar-Levi simple generators.
    let mut rows: Vec<ExactMatrix> = Vec::new();
    for &i in bar_levi {
        let img = e.image_of(crate::lie::Gen::E(i + 1)).to_vec();
        let act = module.action_of_element(&img)?;
        // Restrict columns to source_ids; keep all rows (they live in other
        // weight spaces and vanish there anyway unless hit).
        let mut sub = ExactMatrix::zero(&vars, module.dim(), source_ids.len());
        for (cj, &id) in source_ids.iter().enumerate() {
            for r in 0..module.dim() {
                let v = act.at(r, id).clone();
                if !v.is_zero() {
                    *sub.at_mut(r, cj) = v;
                }
            }
        }
        rows.push(sub);
    }
    let stacked = if rows.is_empty() {
        // Empty bar Levi: everything in the weight space is singular.
        ExactMatrix::zero(&vars, 0, source_ids.len())
    } else {
        ExactMatrix::vstack(&rows)
    };
    let kernel = crate::arith::nullspace(&stacked);
    Ok(kernel
        .into_iter()
        .map(|v| {
            source_ids
                .iter()
                .cloned()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect())
}

/// Verifies exactly that a coordinate vector on the module is annihilated by
/// every listed raising image; used by the table regressions.
pub fn annihilated_by(
    module: &FiniteModule,
    e: &Embedding,
    bar_levi: &[usize],
    vector: &[(usize, RatFun)],
) -> Result<bool> {
    let vars = module.lambda().vars().clone();
    let mut dense = vec![RatFun::zero(&vars); module.dim()];
    for (id, c) in vector {
        dense[*id] = c.clone();
    }
    for &i in bar_levi {
        let img = e.image_of(crate::lie::Gen::E(i + 1)).to_vec();
        let act = module.action_of_element(&img)?;
        let out = act.apply(&dense);
        if out.iter().any(|c| !c.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of a constituent V_mu over the bar Levi; helper for mass
/// checks. The central coordinates may be symbolic.
pub fn constituent_dimension(
    e: &Embedding,
    bar_levi: &[usize],
    mu: &Weight,
) -> Result<u64> {
    Ok(freudenthal_character(e.source().system(), bar_levi, mu)?.total_mass())
}

