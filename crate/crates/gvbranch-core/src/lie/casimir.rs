use num_traits::Zero;

use super::algebra::ChevalleyAlgebra;
use super::uea::{UEAElement, Word};
use crate::arith::{RatFun, Rational, VarSet};
use crate::error::{Error, Result};
use crate::roots::invert_matrix;

/// The quadratic Casimir element sum_i e_i f_i over Killing-dual bases,
/// expanded in the Chevalley basis. No reordering is applied; use
/// `normal_form` to compare against printed expansions.
pub fn casimir_quadratic(algebra: &ChevalleyAlgebra, vars: &VarSet) -> Result<UEAElement> {
    let dim = algebra.dim();
    // ad matrices.
    let mut ad: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut m = vec![vec![Rational::zero(); dim]; dim];
        let vi = {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::from_integer(1.into());
            v
        };
        for j in 0..dim {
            let mut vj = vec![Rational::zero(); dim];
            vj[j] = Rational::from_integer(1.into());
            let br = algebra.bracket(&vi, &vj);
            for (k, c) in br.into_iter().enumerate() {
                if !c.is_zero() {
                    m[k][j] = c;
                }
            }
        }
        ad.push(m);
    }
    // Killing form K(b_i, b_j) = trace(ad_i ad_j).
    let mut killing = vec![vec![Rational::zero(); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let mut tr = Rational::zero();
            for k in 0..dim {
                for l in 0..dim {
                    if !ad[i][k][l].is_zero() && !ad[j][l][k].is_zero() {
                        tr += ad[i][k][l].clone() * ad[j][l][k].clone();
                    }
                }
            }
            killing[i][j] = tr.clone();
            killing[j][i] = tr;
        }
    }
    let inv = invert_matrix(&killing).ok_or_else(|| {
        Error::Unsupported(format!("{}: Killing form is degenerate", algebra.name()))
    })?;
    // c1 = sum_{i,k} (K^{-1})_{ik} b_i b_k.
    let mut c1 = UEAElement::zero(vars);
    for i in 0..dim {
        for k in 0..dim {
            if inv[i][k].is_zero() {
                continue;
            }
            let word = Word::from_letters([algebra.gen_of(i), algebra.gen_of(k)]);
            c1 = c1.add(&UEAElement::from_term(
                RatFun::constant(vars, inv[i][k].clone()),
                word,
            ));
        }
    }
    Ok(c1)
}

#[cfg(test)]
mod tests {
    use super::super::algebra::build_algebra;
    use super::super::uea::{normal_form, parse_uea};
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn sl2_casimir_is_killing_scaled_standard_element() {
        // Killing duality on sl2 gives c1 = (h^2 + 2h + 4 f e) / 8.
        let a1 = build_algebra('A', 1).unwrap();
        let vars = VarSet::empty();
        let c1 = casimir_quadratic(&a1, &vars).unwrap();
        let nf = normal_form(&a1, &c1);
        let expect = parse_uea(&vars, "h1^2+2h1+4g-1g1")
            .unwrap()
            .scale(&RatFun::constant(&vars, crate::arith::rat(1, 8)));
        assert_eq!(nf, normal_form(&a1, &expect));
        let _ = rat_int(0);
    }
}
