use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{ChevalleyAlgebra, Embedding, Gen};
use crate::roots::SystemTag;

/// A parabolic subalgebra containing the fixed Borel, described by the 0/1
/// crossing pattern over the simple roots: crossed roots are the weights of
/// the nilradical.
#[derive(Debug, Clone)]
pub struct ParabolicSubalgebra {
    algebra: Arc<ChevalleyAlgebra>,
    crossings: Vec<u8>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParabolicSummary {
    pub system: SystemTag,
    pub crossings: Vec<u8>,
    pub levi_simple: Vec<usize>,
    pub nilradical_size: usize,
}

impl ParabolicSubalgebra {
    pub fn new(algebra: Arc<ChevalleyAlgebra>, crossings: &[u8]) -> Result<Self> {
        if crossings.len() != algebra.rank() {
            return Err(Error::Usage(format!(
                "crossing vector length {} does not match rank {}",
                crossings.len(),
                algebra.rank()
            )));
        }
        if crossings.iter().any(|&c| c > 1) {
            return Err(Error::Usage("crossing entries must be 0 or 1".into()));
        }
        Ok(ParabolicSubalgebra { algebra, crossings: crossings.to_vec() })
    }

    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn crossings(&self) -> &[u8] {
        &self.crossings
    }

    /// 0-based simple indices of the Levi part (uncrossed roots).
    pub fn levi_simple(&self) -> Vec<usize> {
        self.crossings
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// 0-based crossed simple indices.
    pub fn crossed(&self) -> Vec<usize> {
        self.crossings
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// 1-based positive-root indices of the nilradical: positive roots with
    /// a nonzero coefficient on some crossed simple root.
    pub fn nilradical_roots(&self) -> Vec<usize> {
        let crossed = self.crossed();
        self.algebra
            .system()
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| crossed.iter().any(|&i| r[i] != 0))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Positive-root indices of the Levi part.
    pub fn levi_roots(&self) -> Vec<usize> {
        let nil = self.nilradical_roots();
        (1..=self.algebra.num_positive())
            .filter(|k| !nil.contains(k))
            .collect()
    }

    pub fn is_full(&self) -> bool {
        self.crossings.iter().all(|&c| c == 0)
    }

    pub fn summary(&self) -> ParabolicSummary {
        ParabolicSummary {
            system: self.algebra.system().tag(),
            crossings: self.crossings.clone(),
            levi_simple: self.levi_simple(),
            nilradical_size: self.nilradical_roots().len(),
        }
    }
}

/// The induced parabolic of the source algebra: a source simple generator
/// belongs to the bar parabolic exactly when its image lies inside the
/// target parabolic.
pub fn induced_bar_parabolic(
    p: &ParabolicSubalgebra,
    e: &Embedding,
) -> Result<ParabolicSubalgebra> {
    let nil = p.nilradical_roots();
    let bar_rank = e.source().rank();
    let mut crossings = vec![0u8; bar_rank];
    for j in 0..bar_rank {
        let img = e.image_of(Gen::E(j + 1));
        // The image is a combination of target root vectors; it lies in the
        // parabolic iff no nilradical-lowering component appears and every
        // raising component is allowed (raising components always are).
        // For the bar *crossing*, test whether the image of the lowering
        // generator F(j+1) stays inside the parabolic: F-components must
        // avoid the opposite nilradical.
        let img_low = e.image_of(Gen::F(j + 1));
        let mut inside = true;
        for (idx, c) in img_low.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Gen::F(k) = e.target().gen_of(idx) {
                if nil.contains(&k) {
                    inside = false;
                    break;
                }
            }
        }
        let _ = img;
        crossings[j] = u8::from(!inside);
    }
    ParabolicSubalgebra::new(Arc::new(e.source().clone()), &crossings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_algebra, build_embedding_g2_so7};

    #[test]
    fn nilradical_sizes_for_so7() {
        let so7 = Arc::new(build_algebra('B', 3).unwrap());
        let sizes = [
            (vec![0, 0, 0], 0usize),
            (vec![1, 0, 0], 5),
            (vec![0, 1, 0], 7),
            (vec![0, 0, 1], 6),
            (vec![1, 1, 0], 8),
            (vec![1, 0, 1], 8),
            (vec![0, 1, 1], 8),
            (vec![1, 1, 1], 9),
        ];
        for (cr, n) in sizes {
            let p = ParabolicSubalgebra::new(so7.clone(), &cr).unwrap();
            assert_eq!(p.nilradical_roots().len(), n, "{cr:?}");
            assert_eq!(
                p.nilradical_roots().len() + p.levi_roots().len(),
                so7.num_positive()
            );
        }
    }

    #[test]
    fn induced_parabolics_match_inclusion_diagram() {
        let e = build_embedding_g2_so7().unwrap();
        let so7 = Arc::new(e.target().clone());
        // gbar_1 lies in p iff both g1 and g3 do; gbar_2 iff g2 does.
        let cases = [
            (vec![1, 0, 0], vec![1, 0]),
            (vec![0, 0, 0], vec![0, 0]),
            (vec![0, 1, 0], vec![0, 1]),
            (vec![0, 0, 1], vec![1, 0]),
            (vec![1, 0, 1], vec![1, 0]),
            (vec![1, 1, 0], vec![1, 1]),
            (vec![0, 1, 1], vec![1, 1]),
            (vec![1, 1, 1], vec![1, 1]),
        ];
        for (cr, expect) in cases {
            let p = ParabolicSubalgebra::new(so7.clone(), &cr).unwrap();
            let bar = induced_bar_parabolic(&p, &e).unwrap();
            assert_eq!(bar.crossings(), expect.as_slice(), "{cr:?}");
        }
    }
}
