use num_traits::{One, Zero};

use super::algebra::{algebra_from_realization, ChevalleyAlgebra, Gen};
use super::uea::{UEAElement, Word};
use crate::arith::{rat_int, RatFun, Rational};
use crate::error::{Error, Result};
use crate::roots::{build_root_system, Basis, Weight};

/// An embedding of reductive Lie algebras, carrying the images of all source
/// generators, the weight projection pr and injection iota between the duals
/// of the Cartan subalgebras, and the Dynkin index.
#[derive(Debug, Clone)]
pub struct Embedding {
    source: ChevalleyAlgebra,
    target: ChevalleyAlgebra,
    /// Per source basis index, the image as a dense target vector.
    images: Vec<Vec<Rational>>,
    /// pr on simple coordinates: bar_rank x rank.
    pr: Vec<Vec<Rational>>,
    /// iota on simple coordinates: rank x bar_rank (columns are iota of the
    /// source simple roots).
    iota: Vec<Vec<Rational>>,
    dynkin_index: Rational,
}

impl Embedding {
    pub fn source(&self) -> &ChevalleyAlgebra {
        &self.source
    }

    pub fn target(&self) -> &ChevalleyAlgebra {
        &self.target
    }

    pub fn dynkin_index(&self) -> &Rational {
        &self.dynkin_index
    }

    pub fn image_of(&self, g: Gen) -> &[Rational] {
        &self.images[self.source.index_of(g)]
    }

    pub fn image_of_element(&self, x: &[Rational]) -> Vec<Rational> {
        let dim = self.target.dim();
        let mut out = vec![Rational::zero(); dim];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, v) in self.images[i].iter().enumerate() {
                if !v.is_zero() {
                    out[j] += c.clone() * v.clone();
                }
            }
        }
        out
    }

    /// pr of a target weight; result lives over the source system.
    pub fn pr_weight(&self, w: &Weight) -> Result<Weight> {
        let s = self.target.system().convert(w, Basis::SimpleRoot)?;
        let vars = s.vars().clone();
        let bar_rank = self.source.rank();
        let coords: Vec<RatFun> = (0..bar_rank)
            .map(|i| {
                let mut acc = RatFun::zero(&vars);
                for (j, c) in s.coords.iter().enumerate() {
                    if !c.is_zero() && !self.pr[i][j].is_zero() {
                        acc = acc.add(&c.scale(&self.pr[i][j]));
                    }
                }
                acc
            })
            .collect();
        Ok(Weight::new(self.source.system().tag(), Basis::SimpleRoot, coords))
    }

    /// pr on integer simple coordinates (roots, character offsets).
    pub fn pr_coords(&self, coords: &[i64]) -> Vec<i64> {
        (0..self.source.rank())
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, &c) in coords.iter().enumerate() {
                    acc += self.pr[i][j].clone() * rat_int(c);
                }
                debug_assert!(acc.is_integer());
                i64::try_from(acc.to_integer()).expect("small coordinate")
            })
            .collect()
    }

    /// iota of a source weight; result lives over the target system.
    pub fn iota_weight(&self, w: &Weight) -> Result<Weight> {
        let s = self.source.system().convert(w, Basis::SimpleRoot)?;
        let vars = s.vars().clone();
        let rank = self.target.rank();
        let coords: Vec<RatFun> = (0..rank)
            .map(|k| {
                let mut acc = RatFun::zero(&vars);
                for (j, c) in s.coords.iter().enumerate() {
                    if !c.is_zero() && !self.iota[k][j].is_zero() {
                        acc = acc.add(&c.scale(&self.iota[k][j]));
                    }
                }
                acc
            })
            .collect();
        Ok(Weight::new(self.target.system().tag(), Basis::SimpleRoot, coords))
    }

    /// Expands a source enveloping-algebra element through the embedding.
    /// Purely multilinear substitution; no reordering is performed.
    pub fn embed_uea(&self, u: &UEAElement) -> UEAElement {
        embed_uea(self, u)
    }
}

/// Builds the Lie algebra embedding G2 into so(7) fixed by
/// i(gbar_{+-2}) = g_{+-2}, i(gbar_{+-1}) = g_{+-1} + g_{+-3}, together with
/// the derived projection pr and injection iota.
pub fn build_embedding_g2_so7() -> Result<Embedding> {
    let so7 = super::algebra::build_algebra('B', 3)?;
    let img = |gens: &[(Gen, i64)]| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); so7.dim()];
        for (g, c) in gens {
            v[so7.index_of(*g)] += rat_int(*c);
        }
        v
    };
    let e_images = vec![
        img(&[(Gen::E(1), 1), (Gen::E(3), 1)]),
        img(&[(Gen::E(2), 1)]),
    ];
    let f_images = vec![
        img(&[(Gen::F(1), 1), (Gen::F(3), 1)]),
        img(&[(Gen::F(2), 1)]),
    ];
    build_embedding(so7, 'G', 2, "G2", e_images, f_images)
}

/// Builds an embedding from images of the source's simple generators. The
/// non-simple source root vectors are generated along extraspecial pairs
/// with the +(p+1) normalization; the Cartan images come from the simple
/// sl(2) relations; pr and iota are derived, and everything is verified.
pub fn build_embedding(
    target: ChevalleyAlgebra,
    source_letter: char,
    source_rank: usize,
    source_name: &str,
    e_images: Vec<Vec<Rational>>,
    f_images: Vec<Vec<Rational>>,
) -> Result<Embedding> {
    let src_system = build_root_system(source_letter, source_rank)?;
    if e_images.len() != source_rank || f_images.len() != source_rank {
        return Err(Error::Usage(
            "embedding needs one image per simple generator".into(),
        ));
    }
    let n_bar = src_system.num_positive_roots();
    let mut e_vecs: Vec<Option<Vec<Rational>>> = vec![None; n_bar];
    let mut f_vecs: Vec<Option<Vec<Rational>>> = vec![None; n_bar];
    for j in 0..source_rank {
        let mut unit = vec![0i64; source_rank];
        unit[j] = 1;
        let idx = src_system
            .positive_root_index(&unit)
            .expect("simple roots are positive");
        e_vecs[idx - 1] = Some(e_images[j].clone());
        f_vecs[idx - 1] = Some(f_images[j].clone());
    }
    // Cartan images from [E_j, F_j] = (2/<a_j, a_j>) H_j.
    let mut h_vecs: Vec<Vec<Rational>> = Vec::with_capacity(source_rank);
    for j in 0..source_rank {
        let mut unit = vec![0i64; source_rank];
        unit[j] = 1;
        let idx = src_system.positive_root_index(&unit).unwrap() - 1;
        let br = target.bracket(
            e_vecs[idx].as_ref().unwrap(),
            f_vecs[idx].as_ref().unwrap(),
        );
        let norm = src_system.form()[j][j].clone() / rat_int(2);
        h_vecs.push(br.into_iter().map(|c| c * norm.clone()).collect());
    }
    // Non-simple roots by height along extraspecial pairs.
    let roots = src_system.positive_roots().to_vec();
    let mut order: Vec<usize> = (0..n_bar).collect();
    order.sort_by_key(|&i| roots[i].iter().sum::<i64>());
    for &gi in &order {
        if e_vecs[gi].is_some() {
            continue;
        }
        let gamma = &roots[gi];
        // Smallest simple index with gamma - alpha_i a positive root.
        let mut found = None;
        for i in 0..source_rank {
            let mut rest = gamma.clone();
            rest[i] -= 1;
            if rest.iter().any(|&c| c < 0) {
                continue;
            }
            if let Some(ri) = src_system.positive_root_index(&rest) {
                found = Some((i, ri - 1));
                break;
            }
        }
        let Some((i, rest_idx)) = found else {
            return Err(Error::Internal("root not decomposable".into()));
        };
        // p = max k with (gamma - alpha_i) - k alpha_i a positive root.
        let mut p = 0i64;
        loop {
            let mut probe = roots[rest_idx].clone();
            probe[i] -= p + 1;
            if probe.iter().all(|&c| c >= 0)
                && src_system.positive_root_index(&probe).is_some()
            {
                p += 1;
            } else {
                break;
            }
        }
        let nconst = p + 1;
        let mut unit = vec![0i64; source_rank];
        unit[i] = 1;
        let simple_idx = src_system.positive_root_index(&unit).unwrap() - 1;
        let scale = |v: Vec<Rational>, d: i64| -> Vec<Rational> {
            v.into_iter().map(|c| c / rat_int(d)).collect()
        };
        let e_new = scale(
            target.bracket(
                e_vecs[simple_idx].as_ref().unwrap(),
                e_vecs[rest_idx].as_ref().ok_or_else(|| {
                    Error::Internal("extraspecial recursion out of order".into())
                })?,
            ),
            nconst,
        );
        let f_new = scale(
            target.bracket(
                f_vecs[simple_idx].as_ref().unwrap(),
                f_vecs[rest_idx].as_ref().unwrap(),
            ),
            -nconst,
        );
        e_vecs[gi] = Some(e_new);
        f_vecs[gi] = Some(f_new);
    }
    let mut basis: Vec<Vec<Rational>> = Vec::with_capacity(2 * n_bar + source_rank);
    for v in e_vecs {
        basis.push(v.expect("all raising images generated"));
    }
    for v in f_vecs {
        basis.push(v.expect("all lowering images generated"));
    }
    basis.extend(h_vecs.iter().cloned());
    let so7 = target;
    let g2 = algebra_from_realization(source_name, src_system, &basis, |x, y| {
        so7.bracket(x, y)
    })?;

    // iota(alpha_j) reads off the h-coefficients of the Cartan images.
    let rank = so7.rank();
    let bar_rank = source_rank;
    let h_coeffs = |v: &[Rational]| -> Vec<Rational> {
        (1..=rank)
            .map(|j| v[so7.index_of(Gen::H(j))].clone())
            .collect()
    };
    let iota_cols: Vec<Vec<Rational>> = h_vecs.iter().map(|v| h_coeffs(v)).collect();
    let iota: Vec<Vec<Rational>> = (0..rank)
        .map(|k| (0..bar_rank).map(|j| iota_cols[j][k].clone()).collect())
        .collect();

    // pr = Gbar^{-1} iota^T G on simple coordinates.
    let gbar: Vec<Vec<Rational>> = g2.system().form().to_vec();
    let gbar_inv = crate::roots::invert_matrix(&gbar)
        .ok_or_else(|| Error::Internal("source form not invertible".into()))?;
    let g_mat = so7.system().form();
    let mut pr = vec![vec![Rational::zero(); rank]; bar_rank];
    for (i, row) in pr.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            // entry = sum_j gbar_inv[i][j] * sum_k iota[k][j] * G[k][c]
            let mut acc = Rational::zero();
            for j in 0..bar_rank {
                let mut inner = Rational::zero();
                for k in 0..rank {
                    inner += iota[k][j].clone() * g_mat[k][c].clone();
                }
                acc += gbar_inv[i][j].clone() * inner;
            }
            *entry = acc;
        }
    }

    // Dynkin index from the first simple root: D <a, a> = <iota a, iota a>.
    let mut a1 = vec![Rational::zero(); bar_rank];
    a1[0] = Rational::one();
    let ia1: Vec<Rational> = (0..rank).map(|k| iota[k][0].clone()).collect();
    let dynkin_index =
        so7.system().form_value(&ia1, &ia1) / g2.system().form_value(&a1, &a1);

    let embedding = Embedding {
        images: basis,
        source: g2,
        target: so7,
        pr,
        iota,
        dynkin_index,
    };
    verify_embedding(&embedding)?;
    Ok(embedding)
}

/// Exhaustive homomorphism check on all pairs of source basis elements, plus
/// the pr/iota compatibility D <a, b> = <iota a, iota b>.
fn verify_embedding(e: &Embedding) -> Result<()> {
    let src = e.source();
    let dim = src.dim();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let mut lhs = vec![Rational::zero(); e.target.dim()];
            for (k, c) in src.bracket_gens(src.gen_of(i), src.gen_of(j)) {
                for (t, v) in e.images[k].iter().enumerate() {
                    if !v.is_zero() {
                        lhs[t] += c.clone() * v.clone();
                    }
                }
            }
            let rhs = e.target.bracket(&e.images[i], &e.images[j]);
            if lhs != rhs {
                return Err(Error::Internal(format!(
                    "embedding violates homomorphism on basis pair ({i},{j})"
                )));
            }
        }
    }
    // D <a,b> = <iota a, iota b> on the simple roots of the source.
    let bar_rank = src.rank();
    for a in 0..bar_rank {
        for b in 0..bar_rank {
            let mut ca = vec![Rational::zero(); bar_rank];
            ca[a] = Rational::one();
            let mut cb = vec![Rational::zero(); bar_rank];
            cb[b] = Rational::one();
            let lhs = e.dynkin_index.clone() * src.system().form_value(&ca, &cb);
            let ia: Vec<Rational> = (0..e.target.rank()).map(|k| e.iota[k][a].clone()).collect();
            let ib: Vec<Rational> = (0..e.target.rank()).map(|k| e.iota[k][b].clone()).collect();
            let rhs = e.target.system().form_value(&ia, &ib);
            if lhs != rhs {
                return Err(Error::Internal(
                    "embedding violates the Dynkin-index identity".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Substitutes generator images and expands multilinearly; no normal
/// ordering is performed. Cartan letters map to combinations of target
/// Cartan letters, root letters to combinations of target root letters.
pub fn embed_uea(e: &Embedding, u: &UEAElement) -> UEAElement {
    let vars = u.vars().clone();
    let mut out = UEAElement::zero(&vars);
    for (w, c) in u.terms() {
        // Start from the coefficient and multiply one letter at a time.
        let mut partial: Vec<(RatFun, Vec<Gen>)> = vec![(c.clone(), vec![])];
        for g in w.letters() {
            let image = e.image_of(g);
            let mut next = Vec::new();
            for (pc, pw) in &partial {
                for (t, v) in image.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let mut w2 = pw.clone();
                    w2.push(e.target.gen_of(t));
                    next.push((pc.scale(v), w2));
                }
            }
            partial = next;
        }
        for (pc, pw) in partial {
            out.insert(Word::from_letters(pw), pc);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::VarSet;

    #[test]
    fn g2_embedding_basics() {
        let e = build_embedding_g2_so7().unwrap();
        assert_eq!(e.source().dim(), 14);
        assert_eq!(e.dynkin_index(), &rat_int(3));

        // pr(omega1) = pr(omega3) = psi1, pr(omega2) = psi2.
        let vars = VarSet::empty();
        let b3 = e.target().system();
        let g2 = e.source().system();
        let psi1 = g2.fundamental_weight(0, &vars);
        let psi2 = g2.fundamental_weight(1, &vars);
        let to_simple = |w: &Weight| g2.convert(w, Basis::SimpleRoot).unwrap();
        for (i, psi) in [(0usize, &psi1), (1, &psi2), (2, &psi1)] {
            let w = b3.fundamental_weight(i, &vars);
            let p = e.pr_weight(&w).unwrap();
            assert_eq!(p, to_simple(psi), "pr(omega{})", i + 1);
        }

        // iota(alpha2) = 3 eta2; iota(alpha1) = eta1 + 2 eta3.
        let a2 = g2.positive_root_weight(2, &vars);
        let ia2 = e.iota_weight(&a2).unwrap();
        assert_eq!(
            ia2.numeric_coords().unwrap(),
            vec![rat_int(0), rat_int(3), rat_int(0)]
        );
        let a1 = g2.positive_root_weight(1, &vars);
        let ia1 = e.iota_weight(&a1).unwrap();
        assert_eq!(
            ia1.numeric_coords().unwrap(),
            vec![rat_int(1), rat_int(0), rat_int(2)]
        );
    }

    #[test]
    fn g2_jacobi_and_sl2_triples() {
        let e = build_embedding_g2_so7().unwrap();
        e.source().check_jacobi().unwrap();
    }

    #[test]
    fn embed_uea_examples() {
        let e = build_embedding_g2_so7().unwrap();
        let vars = VarSet::empty();
        // gbar_{-2} maps to g_{-2}.
        let u = UEAElement::from_gen(&vars, Gen::F(2));
        let img = e.embed_uea(&u);
        assert_eq!(img, UEAElement::from_gen(&vars, Gen::F(2)));
        // 1 maps to 1.
        let one = UEAElement::one(&vars);
        assert_eq!(e.embed_uea(&one), one);
        // gbar_{-1} gbar_{-1} expands into 4 words before merging exponents.
        let sq = UEAElement::from_term(
            RatFun::one(&vars),
            Word::from_letters([Gen::F(1), Gen::F(1)]),
        );
        let img = e.embed_uea(&sq);
        // (g-1 + g-3)(g-1 + g-3): words g-1^2, g-1 g-3, g-3 g-1, g-3^2.
        assert_eq!(img.num_terms(), 4);
    }
}
