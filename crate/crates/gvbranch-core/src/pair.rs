//! Reusable computation context for an embedding pair: the shared algebras,
//! the embedding, parsed weights and parabolics.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Deserialize;

use crate::arith::{parse_rational, Rational, VarSet};
use crate::error::{Error, Result};
use crate::lie::{build_algebra, build_embedding, build_embedding_g2_so7, Embedding, Gen};
use crate::roots::{parse_weight, Weight};
use crate::verma::ParabolicSubalgebra;

/// The working context: one embedding, a fixed parameter list, and the
/// shared target algebra handle used by modules and parabolics.
pub struct PairContext {
    pub embedding: Arc<Embedding>,
    pub target: Arc<crate::lie::ChevalleyAlgebra>,
    pub vars: VarSet,
}

impl PairContext {
    /// The built-in pair: G2 embedded in so(7).
    pub fn builtin_g2_so7() -> Result<Self> {
        let embedding = Arc::new(build_embedding_g2_so7()?);
        let target = Arc::new(embedding.target().clone());
        Ok(PairContext {
            embedding,
            target,
            vars: VarSet::new(vec!["x1", "x2", "x3"]),
        })
    }

    /// Loads a generic pair from an embedding description file.
    pub fn from_embedding_json(json: &str) -> Result<Self> {
        let spec: EmbeddingFile = serde_json::from_str(json)
            .map_err(|e| Error::Parse(format!("embedding file: {e}")))?;
        let target = build_algebra(spec.target.letter()?, spec.target.rank)?;
        let mut e_images = Vec::new();
        let mut f_images = Vec::new();
        for j in 1..=spec.source.rank {
            let e_key = format!("e{j}");
            let f_key = format!("f{j}");
            let mk = |terms: &Vec<(i64, String)>| -> Result<Vec<Rational>> {
                let mut v = vec![Rational::zero(); target.dim()];
                for (idx, coeff) in terms {
                    let g = if *idx > 0 {
                        Gen::E(*idx as usize)
                    } else if *idx < 0 {
                        Gen::F((-idx) as usize)
                    } else {
                        return Err(Error::Parse("generator index 0 in embedding file".into()));
                    };
                    v[target.index_of(g)] += parse_rational(coeff)?;
                }
                Ok(v)
            };
            let et = spec
                .images
                .get(&e_key)
                .ok_or_else(|| Error::Parse(format!("embedding file misses {e_key}")))?;
            let ft = spec
                .images
                .get(&f_key)
                .ok_or_else(|| Error::Parse(format!("embedding file misses {f_key}")))?;
            e_images.push(mk(et)?);
            f_images.push(mk(ft)?);
        }
        let name = format!("{}{}", spec.source.kind, spec.source.rank);
        let embedding = Arc::new(build_embedding(
            target,
            spec.source.letter()?,
            spec.source.rank,
            &name,
            e_images,
            f_images,
        )?);
        let target = Arc::new(embedding.target().clone());
        Ok(PairContext {
            embedding,
            target,
            vars: VarSet::new(vec!["x1", "x2", "x3"]),
        })
    }

    /// Parses a highest weight in the CLI grammar over the target system,
    /// e.g. `x1*w1 + w2`, with optional numeric substitutions applied.
    pub fn parse_lambda(
        &self,
        input: &str,
        substitutions: &BTreeMap<String, Rational>,
    ) -> Result<Weight> {
        let w = parse_weight(self.target.system(), &self.vars, input)?;
        if substitutions.is_empty() {
            return Ok(w);
        }
        let coords = w
            .coords
            .iter()
            .map(|c| {
                // Evaluate a coordinate only when the substitutions cover all
                // symbols it actually uses; otherwise keep it symbolic.
                let uses_unset = self.vars.names().iter().any(|n| {
                    !substitutions.contains_key(n)
                        && (c.num().degree_in(self.vars.index_of(n).unwrap()) > 0
                            || c.den().degree_in(self.vars.index_of(n).unwrap()) > 0)
                });
                if uses_unset {
                    Ok(c.clone())
                } else {
                    let mut full = substitutions.clone();
                    for name in self.vars.names() {
                        full.entry(name.clone()).or_insert_with(Rational::zero);
                    }
                    let v = crate::arith::evaluate(c, &full)?;
                    Ok(crate::arith::RatFun::constant(&self.vars, v))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight::new(w.system, w.basis, coords))
    }

    pub fn parabolic(&self, crossings: &[u8]) -> Result<ParabolicSubalgebra> {
        ParabolicSubalgebra::new(self.target.clone(), crossings)
    }
}

#[derive(Deserialize)]
struct EmbeddingFile {
    source: TypeRank,
    target: TypeRank,
    /// "e1", "f1", ... mapped to lists of [signed generator index, coeff].
    images: BTreeMap<String, Vec<(i64, String)>>,
}

#[derive(Deserialize)]
struct TypeRank {
    #[serde(rename = "type")]
    kind: String,
    rank: usize,
}

impl TypeRank {
    fn letter(&self) -> Result<char> {
        self.kind
            .chars()
            .next()
            .map(|c| c.to_ascii_uppercase())
            .ok_or_else(|| Error::Parse("empty type".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_pair_and_embedding_file_agree() {
        let ctx = PairContext::builtin_g2_so7().unwrap();
        assert_eq!(ctx.embedding.source().dim(), 14);
        let json = r#"{
            "source": {"type": "G", "rank": 2},
            "target": {"type": "B", "rank": 3},
            "images": {
                "e1": [[1, "1"], [3, "1"]],
                "f1": [[-1, "1"], [-3, "1"]],
                "e2": [[2, "1"]],
                "f2": [[-2, "1"]]
            }
        }"#;
        let ctx2 = PairContext::from_embedding_json(json).unwrap();
        assert_eq!(ctx2.embedding.dynkin_index(), ctx.embedding.dynkin_index());
    }

    #[test]
    fn lambda_parsing_with_substitution() {
        let ctx = PairContext::builtin_g2_so7().unwrap();
        let mut subs = BTreeMap::new();
        subs.insert("x1".to_string(), crate::arith::rat_int(10));
        let lam = ctx.parse_lambda("x1*w1 + w2", &subs).unwrap();
        assert_eq!(
            lam.coords[0].as_rational().unwrap(),
            crate::arith::rat_int(10)
        );
    }
}
