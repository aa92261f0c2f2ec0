use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::system::{RootSystem, SystemTag};
use crate::arith::{MultiPoly, RatFun, Rational, VarSet};
use crate::error::{Error, Result};

/// The coordinate basis a weight is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Basis {
    Fundamental,
    SimpleRoot,
    Epsilon,
}

/// A weight of a root system: rational-function coordinates over a tagged
/// basis. Symbolic coordinates (in the polynomial parameters) are allowed
/// everywhere; conversions are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub system: SystemTag,
    pub basis: Basis,
    pub coords: Vec<RatFun>,
}

impl Weight {
    pub fn new(system: SystemTag, basis: Basis, coords: Vec<RatFun>) -> Self {
        Weight { system, basis, coords }
    }

    pub fn zero(system: SystemTag, basis: Basis, rank: usize, vars: &VarSet) -> Self {
        Weight::new(system, basis, vec![RatFun::zero(vars); rank])
    }

    /// Numeric weight from rationals.
    pub fn numeric(system: SystemTag, basis: Basis, coords: &[Rational], vars: &VarSet) -> Self {
        Weight::new(
            system,
            basis,
            coords
                .iter()
                .map(|c| RatFun::constant(vars, c.clone()))
                .collect(),
        )
    }

    pub fn vars(&self) -> &VarSet {
        self.coords[0].vars()
    }

    pub fn check_system(&self, other: &Weight) -> Result<()> {
        if self.system != other.system {
            return Err(Error::CrossSystem(
                self.system.to_string(),
                other.system.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_system(other)?;
        let a = self.clone();
        let b = other.to_basis_like(&a)?;
        Ok(Weight::new(
            a.system,
            a.basis,
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x.add(y))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Weight {
        Weight::new(
            self.system,
            self.basis,
            self.coords.iter().map(|c| c.neg()).collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Weight {
        Weight::new(
            self.system,
            self.basis,
            self.coords.iter().map(|c| c.scale(k)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// All coordinates as plain rationals, if none is symbolic.
    pub fn numeric_coords(&self) -> Option<Vec<Rational>> {
        self.coords.iter().map(|c| c.as_rational()).collect()
    }

    fn to_basis_like(&self, model: &Weight) -> Result<Weight> {
        if self.basis == model.basis {
            Ok(self.clone())
        } else {
            Err(Error::Usage(format!(
                "mixed weight bases {:?} and {:?}; convert explicitly",
                self.basis, model.basis
            )))
        }
    }
}

impl RootSystem {
    /// Converts a weight into the requested basis.
    pub fn convert(&self, w: &Weight, target: Basis) -> Result<Weight> {
        if w.system != self.tag() {
            return Err(Error::CrossSystem(w.system.to_string(), self.tag().to_string()));
        }
        if w.basis == target {
            return Ok(w.clone());
        }
        // Everything goes through simple-root coordinates.
        let simple = match w.basis {
            Basis::SimpleRoot => w.coords.clone(),
            Basis::Fundamental => apply_rows(self.fund_to_simple_matrix(), &w.coords),
            Basis::Epsilon => apply_rows(&self.epsilon_to_simple()?, &w.coords),
        };
        let out = match target {
            Basis::SimpleRoot => simple,
            Basis::Fundamental => apply_rows(self.simple_to_fund_matrix(), &simple),
            Basis::Epsilon => apply_rows(&self.simple_to_epsilon()?, &simple),
        };
        Ok(Weight::new(w.system, target, out))
    }

    /// Symmetric bilinear form, basis independent.
    pub fn bilinear(&self, a: &Weight, b: &Weight) -> Result<RatFun> {
        a.check_system(b)?;
        let sa = self.convert(a, Basis::SimpleRoot)?;
        let sb = self.convert(b, Basis::SimpleRoot)?;
        let vars = sa.vars().clone();
        let mut acc = RatFun::zero(&vars);
        for (i, x) in sa.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in sb.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                acc = acc.add(&x.mul(y).scale(&self.form()[i][j]));
            }
        }
        Ok(acc)
    }

    /// 2 <w, eta_i> / <eta_i, eta_i>, the i-th fundamental coordinate.
    pub fn coroot_value(&self, w: &Weight, i: usize) -> Result<RatFun> {
        let f = self.convert(w, Basis::Fundamental)?;
        Ok(f.coords[i].clone())
    }

    /// The i-th fundamental weight (simple-root coordinates).
    pub fn fundamental_weight(&self, i: usize, vars: &VarSet) -> Weight {
        let row = &self.fund_to_simple_matrix()[i];
        Weight::new(
            self.tag(),
            Basis::SimpleRoot,
            row.iter()
                .map(|c| RatFun::constant(vars, c.clone()))
                .collect(),
        )
    }

    /// A positive root as a Weight (simple-root coordinates), 1-based index.
    pub fn positive_root_weight(&self, index: usize, vars: &VarSet) -> Weight {
        let r = &self.positive_roots()[index - 1];
        Weight::new(
            self.tag(),
            Basis::SimpleRoot,
            r.iter()
                .map(|&c| RatFun::constant(vars, crate::arith::rat_int(c)))
                .collect(),
        )
    }

    /// Numeric simple coordinates of a weight, failing on symbolic input.
    pub fn numeric_simple(&self, w: &Weight) -> Result<Vec<Rational>> {
        let s = self.convert(w, Basis::SimpleRoot)?;
        s.numeric_coords()
            .ok_or_else(|| Error::NonDominant("symbolic coordinates where numeric required".into()))
    }
}

fn apply_rows(rows: &[Vec<Rational>], coords: &[RatFun]) -> Vec<RatFun> {
    // coords are given per source row; output j = sum_i coords_i * rows[i][j].
    let vars = coords[0].vars().clone();
    let cols = rows[0].len();
    (0..cols)
        .map(|j| {
            let mut acc = RatFun::zero(&vars);
            for (i, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&c.scale(&rows[i][j]));
                }
            }
            acc
        })
        .collect()
}

/// Pretty form like `x1*w1+w2` (fundamental coordinates) used by the CLI and
/// serializers.
pub fn pretty_fundamental(w: &Weight, symbols: (&str, &str)) -> String {
    let (wsym, _) = symbols;
    let mut parts = Vec::new();
    for (i, c) in w.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cs = c.to_string();
        let name = format!("{}{}", wsym, i + 1);
        if cs == "1" {
            parts.push(name);
        } else if cs == "-1" {
            parts.push(format!("-{name}"));
        } else if c.as_rational().is_some() {
            parts.push(format!("{cs}*{name}"));
        } else {
            parts.push(format!("({cs})*{name}"));
        }
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, p) in parts.iter().enumerate() {
        if k > 0 && !p.starts_with('-') {
            out.push('+');
        }
        out.push_str(p);
    }
    out
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Fundamental => "w",
            Basis::SimpleRoot => "a",
            Basis::Epsilon => "e",
        };
        write!(f, "{}", pretty_fundamental(self, (sym, "")))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            system: String,
            basis: &'a Basis,
            coords: Vec<String>,
        }
        Repr {
            system: self.system.to_string(),
            basis: &self.basis,
            coords: self.coords.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

/// Convenience: parse symbolic fundamental coordinates like `x1*w1+w2` over
/// the given system. `w1..wN` denote fundamental weights.
pub fn parse_weight(
    rs: &RootSystem,
    vars: &VarSet,
    input: &str,
) -> Result<Weight> {
    // Reuse the polynomial parser over an extended variable list where the
    // trailing variables are the fundamental-weight markers.
    let mut names: Vec<String> = vars.names().to_vec();
    let rank = rs.rank();
    for i in 1..=rank {
        names.push(format!("w{i}"));
    }
    let ext = VarSet::new(names);
    let poly = crate::arith::parse_poly(&ext, input)?;
    let nv = vars.len();
    let mut coords = vec![MultiPoly::zero(&ext); rank];
    for (e, c) in poly.terms() {
        let widx: Vec<usize> = (0..rank).filter(|&i| e.0[nv + i] > 0).collect();
        if widx.len() != 1 || e.0[nv + widx[0]] != 1 {
            return Err(Error::Parse(format!(
                "`{input}`: each term must be linear in exactly one w-symbol"
            )));
        }
        let mut e2 = e.clone();
        e2.0[nv + widx[0]] = 0;
        coords[widx[0]] = coords[widx[0]].add(&MultiPoly::monomial(&ext, c.clone(), e2.0));
    }
    // Shrink back to the base variable set.
    let out = coords
        .into_iter()
        .map(|p| {
            let mut q = MultiPoly::zero(vars);
            for (e, c) in p.terms() {
                if e.0[nv..].iter().any(|&k| k != 0) {
                    unreachable!();
                }
                q = q.add(&MultiPoly::monomial(vars, c.clone(), e.0[..nv].to_vec()));
            }
            RatFun::from_poly(q)
        })
        .collect();
    Ok(Weight::new(rs.tag(), Basis::Fundamental, out))
}

#[cfg(test)]
mod tests {
    use super::super::system::build_root_system;
    use super::*;
    use crate::arith::{rat_int, VarSet};

    #[test]
    fn basis_roundtrip_and_bilinear() {
        let g2 = build_root_system('G', 2).unwrap();
        let vars = VarSet::empty();
        let a1 = g2.positive_root_weight(1, &vars);
        let a2 = g2.positive_root_weight(2, &vars);
        assert_eq!(g2.bilinear(&a2, &a2).unwrap().as_rational().unwrap(), rat_int(6));
        assert_eq!(g2.bilinear(&a1, &a2).unwrap().as_rational().unwrap(), rat_int(-3));
        // psi1 = 2 a1 + a2, psi2 = 3 a1 + 2 a2.
        let psi1 = g2.fundamental_weight(0, &vars);
        let s = g2.convert(&psi1, Basis::SimpleRoot).unwrap();
        let coords: Vec<Rational> = s.numeric_coords().unwrap();
        assert_eq!(coords, vec![rat_int(2), rat_int(1)]);
        let f = g2.convert(&s, Basis::Fundamental).unwrap();
        assert_eq!(f.numeric_coords().unwrap(), vec![rat_int(1), rat_int(0)]);
    }

    #[test]
    fn epsilon_pairings_in_b3() {
        let b3 = build_root_system('B', 3).unwrap();
        let vars = VarSet::empty();
        for i in 0..3 {
            for j in 0..3 {
                let mut ci = vec![Rational::zero(); 3];
                ci[i] = Rational::from_integer(1.into());
                let mut cj = vec![Rational::zero(); 3];
                cj[j] = Rational::from_integer(1.into());
                let ei = Weight::numeric(b3.tag(), Basis::Epsilon, &ci, &vars);
                let ej = Weight::numeric(b3.tag(), Basis::Epsilon, &cj, &vars);
                let v = b3.bilinear(&ei, &ej).unwrap().as_rational().unwrap();
                assert_eq!(v, if i == j { rat_int(1) } else { rat_int(0) });
            }
        }
        // omega_3 = 1/2 (e1 + e2 + e3).
        let w3 = b3.fundamental_weight(2, &vars);
        let eps = b3.convert(&w3, Basis::Epsilon).unwrap();
        assert_eq!(
            eps.numeric_coords().unwrap(),
            vec![crate::arith::rat(1, 2), crate::arith::rat(1, 2), crate::arith::rat(1, 2)]
        );
    }

    #[test]
    fn parse_weight_symbolic() {
        let b3 = build_root_system('B', 3).unwrap();
        let vars = VarSet::new(vec!["x1"]);
        let w = parse_weight(&b3, &vars, "x1*w1 + w2").unwrap();
        assert_eq!(w.basis, Basis::Fundamental);
        assert_eq!(w.coords[0].to_string(), "x1");
        assert_eq!(w.coords[1].to_string(), "1");
        assert!(w.coords[2].is_zero());
    }
}
