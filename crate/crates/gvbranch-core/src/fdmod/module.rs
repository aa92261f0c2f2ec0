use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use super::crystal::{crystal_type, lex_min_longest_word, Crystal};
use crate::arith::{nullspace, rat_int, ExactMatrix, RatFun, Rational};
use crate::error::{Error, Result};
use crate::lie::{ChevalleyAlgebra, ColumnSolverRat, Gen};
use crate::roots::{Basis, Weight};

/// A Poincare–Birkhoff–Witt monomial in lowering generators: factors
/// (positive-root index, exponent) sorted by descending root index, which is
/// ascending graded lex on the corresponding negative roots.
pub type PbwMono = Vec<(usize, u32)>;

/// Sparse vector over PBW monomials with rational coefficients.
pub type PbwVec = BTreeMap<PbwMono, Rational>;

/// A basis element of the module: a non-commutative monomial word in simple
/// lowering generators (read left to right; the rightmost letter acts
/// first), together with its root offset below the highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisWord {
    /// 0-based ambient simple indices.
    pub word: Vec<usize>,
    /// lambda minus weight, in ambient simple coordinates.
    pub offset: Vec<i64>,
}

/// Weight-space data computed on demand: the PBW monomials spanning the
/// Verma weight space, each basis word expressed in them, the Shapovalov
/// Gram matrix, and a solver expressing arbitrary PBW vectors in the word
/// basis modulo the Shapovalov kernel.
pub struct WeightSpace {
    pub offset: Vec<i64>,
    pub basis_ids: Vec<usize>,
    pub pbw: Vec<PbwMono>,
    pub word_coords: Vec<Vec<Rational>>,
    pub gram: Vec<Vec<Rational>>,
    pub kernel: Vec<Vec<Rational>>,
    solver: ColumnSolverRat,
}

impl WeightSpace {
    /// Coordinates of a PBW vector over the module basis words of this
    /// space, discarding the Shapovalov-kernel component. None if the vector
    /// is not in the span (which would indicate a bug).
    pub fn express(&self, v: &PbwVec) -> Option<Vec<Rational>> {
        let mut dense = vec![Rational::zero(); self.pbw.len()];
        for (m, c) in v {
            let idx = self.pbw.iter().position(|p| p == m)?;
            dense[idx] = c.clone();
        }
        let coords = self.solver.solve(&dense)?;
        Some(coords[..self.basis_ids.len()].to_vec())
    }

    /// True when the PBW vector lies in the Shapovalov kernel, i.e. is zero
    /// in the irreducible quotient.
    pub fn in_kernel(&self, v: &PbwVec) -> bool {
        let mut dense = vec![Rational::zero(); self.pbw.len()];
        for (m, c) in v {
            match self.pbw.iter().position(|p| p == m) {
                Some(idx) => dense[idx] = c.clone(),
                None => return v.values().all(|c| c.is_zero()),
            }
        }
        // <p_i, v> = 0 for all i.
        self.gram.iter().all(|row| {
            row.iter()
                .zip(&dense)
                .map(|(a, b)| a.clone() * b.clone())
                .fold(Rational::zero(), |x, y| x + y)
                .is_zero()
        })
    }
}

/// A finite-dimensional highest-weight module over a Levi subalgebra, with a
/// monomial basis indexed by adapted strings and exact action matrices
/// computed through the Shapovalov form.
pub struct FiniteModule {
    algebra: Arc<ChevalleyAlgebra>,
    levi: Vec<usize>,
    lambda: Weight,
    basis: Vec<BasisWord>,
    /// <eta_j, lambda> for each simple index (symbolic allowed off-Levi).
    eta_pairings: Vec<RatFun>,
    spaces: Mutex<BTreeMap<Vec<i64>, Arc<WeightSpace>>>,
    actions: Mutex<BTreeMap<Gen, Arc<ExactMatrix>>>,
}

impl FiniteModule {
    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisWord] {
        &self.basis
    }

    /// Index of the highest-weight vector (zero offset).
    pub fn highest_index(&self) -> usize {
        self.basis
            .iter()
            .position(|b| b.offset.iter().all(|&c| c == 0))
            .expect("highest weight vector present")
    }

    /// Weight of a basis vector.
    pub fn weight_of(&self, id: usize) -> Weight {
        let vars = self.lambda.vars().clone();
        let off = Weight::numeric(
            self.algebra.system().tag(),
            Basis::SimpleRoot,
            &self.basis[id]
                .offset
                .iter()
                .map(|&c| rat_int(c))
                .collect::<Vec<_>>(),
            &vars,
        );
        self.lambda.sub(&off).expect("same system")
    }

    /// All distinct offsets, in basis order of first appearance.
    pub fn offsets(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for b in &self.basis {
            if !out.contains(&b.offset) {
                out.push(b.offset.clone());
            }
        }
        out
    }

    /// Positive-root index (1-based) of an ambient simple root.
    fn simple_root_index(&self, i: usize) -> usize {
        let mut unit = vec![0i64; self.algebra.rank()];
        unit[i] = 1;
        self.algebra
            .system()
            .positive_root_index(&unit)
            .expect("simple roots are positive roots")
    }

    /// Expands a word of 0-based simple lowering letters into PBW
    /// coordinates (in the Verma module of the Levi). Coefficients are
    /// rational: straightening lowering words never produces Cartan or
    /// raising letters.
    pub fn word_to_pbw(&self, word: &[usize]) -> PbwVec {
        let mut state: PbwVec = BTreeMap::new();
        state.insert(vec![], Rational::from_integer(1.into()));
        for &i in word.iter().rev() {
            let k = self.simple_root_index(i);
            state = self.act_f(k, &state);
        }
        state
    }

    /// Left multiplication by F(k) followed by straightening.
    fn act_f(&self, k: usize, v: &PbwVec) -> PbwVec {
        let mut out: PbwVec = BTreeMap::new();
        for (m, c) in v {
            for (m2, c2) in self.insert_f(k, m) {
                add_term(&mut out, m2, c.clone() * c2);
            }
        }
        out
    }

    /// F(k) * mono in PBW order. The PBW order puts larger root indices
    /// first, so F(k) sits at the front when its index dominates and must
    /// otherwise commute past the leading factor, picking up brackets.
    fn insert_f(&self, k: usize, mono: &PbwMono) -> Vec<(PbwMono, Rational)> {
        match mono.first() {
            Some(&(idx, _)) if idx > k => self.bubble_f(k, mono),
            _ => self.insert_f_front(k, mono),
        }
    }

    /// General bubbling: F(k) * (first factor) with commutator corrections.
    fn bubble_f(&self, k: usize, mono: &PbwMono) -> Vec<(PbwMono, Rational)> {
        let (idx, e) = mono[0];
        debug_assert!(idx > k);
        let rest: PbwMono = if e > 1 {
            let mut r = mono.to_vec();
            r[0] = (idx, e - 1);
            r
        } else {
            mono[1..].to_vec()
        };
        // F(k) F(idx) = F(idx) F(k) + [F(k), F(idx)].
        let mut out: Vec<(PbwMono, Rational)> = Vec::new();
        for (m, c) in self.insert_f(k, &rest) {
            for (m2, c2) in self.insert_f(idx, &m) {
                out.push((m2, c.clone() * c2));
            }
        }
        for (t, c) in self.algebra.bracket_gens(Gen::F(k), Gen::F(idx)) {
            let tg = self.algebra.gen_of(t);
            let Gen::F(tk) = tg else {
                unreachable!("lowering bracket leaves the lowering algebra")
            };
            for (m, c2) in self.insert_f(tk, &rest) {
                out.push((m, c.clone() * c2));
            }
        }
        merge(out)
    }

    /// Prepends F(idx) knowing idx is >= every index in the monomial.
    fn insert_f_front(&self, idx: usize, mono: &PbwMono) -> Vec<(PbwMono, Rational)> {
        debug_assert!(mono.first().map(|&(i, _)| idx >= i).unwrap_or(true));
        let mut m = mono.clone();
        if let Some(first) = m.first_mut() {
            if first.0 == idx {
                first.1 += 1;
                return vec![(m, Rational::from_integer(1.into()))];
            }
        }
        m.insert(0, (idx, 1));
        vec![(m, Rational::from_integer(1.into()))]
    }

    /// <eta_j, lambda - offset>, numeric whenever j is in the Levi support.
    fn eta_pairing_numeric(&self, j: usize, offset: &[i64]) -> Rational {
        let lam = self.eta_pairings[j]
            .as_rational()
            .expect("Levi pairing must be numeric");
        let eta: Vec<Rational> = (0..self.algebra.rank())
            .map(|t| if t == j { Rational::from_integer(1.into()) } else { Rational::zero() })
            .collect();
        let off: Vec<Rational> = offset.iter().map(|&c| rat_int(c)).collect();
        lam - self.algebra.system().form_value(&eta, &off)
    }

    /// E(k) acting on a PBW vector (as vectors of the Levi Verma over
    /// v_lambda). All indices must be Levi roots.
    pub fn act_e(&self, k: usize, v: &PbwVec) -> PbwVec {
        let mut out: PbwVec = BTreeMap::new();
        for (m, c) in v {
            for (m2, c2) in self.e_on_mono(k, m) {
                add_term(&mut out, m2, c.clone() * c2);
            }
        }
        out
    }

    fn e_on_mono(&self, k: usize, mono: &PbwMono) -> Vec<(PbwMono, Rational)> {
        if mono.is_empty() {
            return vec![];
        }
        let (idx, e) = mono[0];
        let rest: PbwMono = if e > 1 {
            let mut r = mono.to_vec();
            r[0] = (idx, e - 1);
            r
        } else {
            mono[1..].to_vec()
        };
        let mut out: Vec<(PbwMono, Rational)> = Vec::new();
        // E(k) F(idx) = F(idx) E(k) + [E(k), F(idx)].
        for (m, c) in self.e_on_mono(k, &rest) {
            for (m2, c2) in self.insert_f(idx, &m) {
                out.push((m2, c.clone() * c2));
            }
        }
        for (t, c) in self.algebra.bracket_gens(Gen::E(k), Gen::F(idx)) {
            match self.algebra.gen_of(t) {
                Gen::E(tk) => {
                    for (m, c2) in self.e_on_mono(tk, &rest) {
                        out.push((m, c.clone() * c2));
                    }
                }
                Gen::F(tk) => {
                    for (m, c2) in self.insert_f(tk, &rest) {
                        out.push((m, c.clone() * c2));
                    }
                }
                Gen::H(j) => {
                    let off = pbw_offset(self.algebra.system().positive_roots(), &rest);
                    let val = self.eta_pairing_numeric(j - 1, &off);
                    if !val.is_zero() {
                        out.push((rest.clone(), c.clone() * val));
                    }
                }
            }
        }
        merge(out)
    }

    /// Shapovalov pairing <p, q> = coefficient of the empty monomial in
    /// tau(p) q . v_lambda.
    fn shapovalov(&self, p: &PbwMono, q: &PbwMono) -> Rational {
        let mut state: PbwVec = BTreeMap::new();
        state.insert(q.clone(), Rational::from_integer(1.into()));
        // tau(p) applies the flipped letters of p in p's reading order.
        for &(idx, e) in p {
            for _ in 0..e {
                state = self.act_e(idx, &state);
                if state.is_empty() {
                    return Rational::zero();
                }
            }
        }
        state.get(&vec![]).cloned().unwrap_or_else(Rational::zero)
    }

    /// The lazily computed weight-space data at an offset.
    pub fn space(&self, offset: &[i64]) -> Result<Arc<WeightSpace>> {
        if let Some(sp) = self.spaces.lock().unwrap().get(offset) {
            return Ok(sp.clone());
        }
        let sp = Arc::new(self.build_space(offset)?);
        self.spaces
            .lock()
            .unwrap()
            .insert(offset.to_vec(), sp.clone());
        Ok(sp)
    }

    fn build_space(&self, offset: &[i64]) -> Result<WeightSpace> {
        let basis_ids: Vec<usize> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, b)| b.offset == offset)
            .map(|(i, _)| i)
            .collect();
        // PBW monomials over the Levi positive roots summing to the offset.
        let levi_roots: Vec<usize> = self
            .algebra
            .system()
            .levi_positive_roots(&self.levi)
            .iter()
            .map(|r| self.algebra.system().positive_root_index(r).unwrap())
            .collect();
        let mut sorted_roots = levi_roots;
        sorted_roots.sort_unstable_by(|a, b| b.cmp(a));
        let mut pbw: Vec<PbwMono> = Vec::new();
        enumerate_monos(
            self.algebra.system().positive_roots(),
            &sorted_roots,
            0,
            offset.to_vec(),
            &mut vec![],
            &mut pbw,
        );
        let gram: Vec<Vec<Rational>> = {
            let mut g = vec![vec![Rational::zero(); pbw.len()]; pbw.len()];
            for i in 0..pbw.len() {
                for j in i..pbw.len() {
                    let v = self.shapovalov(&pbw[i], &pbw[j]);
                    g[i][j] = v.clone();
                    g[j][i] = v;
                }
            }
            g
        };
        let word_coords: Vec<Vec<Rational>> = basis_ids
            .iter()
            .map(|&id| {
                let v = self.word_to_pbw(&self.basis[id].word);
                let mut dense = vec![Rational::zero(); pbw.len()];
                for (m, c) in v {
                    let idx = pbw
                        .iter()
                        .position(|p| *p == m)
                        .expect("word expansion stays in its weight space");
                    dense[idx] = c;
                }
                dense
            })
            .collect();
        // Shapovalov kernel via the exact nullspace of the Gram matrix.
        let kernel: Vec<Vec<Rational>> = {
            let vars = crate::arith::VarSet::empty();
            let entries: Vec<RatFun> = gram
                .iter()
                .flatten()
                .map(|c| RatFun::constant(&vars, c.clone()))
                .collect();
            let m = ExactMatrix::new(pbw.len(), pbw.len(), entries);
            nullspace(&m)
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|e| e.as_rational().expect("numeric kernel"))
                        .collect()
                })
                .collect()
        };
        if word_coords.len() + kernel.len() != pbw.len() {
            return Err(Error::Internal(format!(
                "weight space {offset:?}: basis words ({}) plus kernel ({}) do not fill the Verma space ({})",
                word_coords.len(),
                kernel.len(),
                pbw.len()
            )));
        }
        let mut columns = word_coords.clone();
        columns.extend(kernel.iter().cloned());
        let solver = ColumnSolverRat::new(&columns);
        if solver.rank() != pbw.len() {
            return Err(Error::Internal(format!(
                "weight space {offset:?}: monomial words are dependent modulo the Shapovalov kernel"
            )));
        }
        Ok(WeightSpace { offset: offset.to_vec(), basis_ids, pbw, word_coords, gram, kernel, solver })
    }

    /// Action matrix of a generator on the module basis. Lowering and
    /// raising generators must have Levi roots; Cartan elements act
    /// diagonally by the (possibly symbolic) weights.
    pub fn action(&self, g: Gen) -> Result<Arc<ExactMatrix>> {
        if let Some(m) = self.actions.lock().unwrap().get(&g) {
            return Ok(m.clone());
        }
        let vars = self.lambda.vars().clone();
        let n = self.dim();
        let mut out = ExactMatrix::zero(&vars, n, n);
        match g {
            Gen::H(j) => {
                for (id, b) in self.basis.iter().enumerate() {
                    let eta: Vec<Rational> = (0..self.algebra.rank())
                        .map(|t| if t == j - 1 { rat_int(1) } else { Rational::zero() })
                        .collect();
                    let off: Vec<Rational> =
                        b.offset.iter().map(|&c| rat_int(c)).collect();
                    let shift = self.algebra.system().form_value(&eta, &off);
                    let val = self.eta_pairings[j - 1]
                        .sub(&RatFun::constant(&vars, shift));
                    *out.at_mut(id, id) = val;
                }
            }
            Gen::E(k) | Gen::F(k) => {
                let root = &self.algebra.system().positive_roots()[k - 1];
                if !root
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || self.levi.contains(&i))
                {
                    return Err(Error::Usage(format!(
                        "generator {g} does not belong to the Levi"
                    )));
                }
                for (id, b) in self.basis.iter().enumerate() {
                    let target: Vec<i64> = match g {
                        Gen::E(_) => b.offset.iter().zip(root).map(|(o, r)| o - r).collect(),
                        _ => b.offset.iter().zip(root).map(|(o, r)| o + r).collect(),
                    };
                    if target.iter().any(|&c| c < 0) {
                        continue;
                    }
                    let source = self.word_to_pbw(&self.basis[id].word);
                    let image = match g {
                        Gen::E(_) => self.act_e(k, &source),
                        _ => self.act_f(k, &source),
                    };
                    if image.is_empty() {
                        continue;
                    }
                    let space = self.space(&target)?;
                    if space.basis_ids.is_empty() {
                        debug_assert!(space.in_kernel(&image));
                        continue;
                    }
                    let coords = space.express(&image).ok_or_else(|| {
                        Error::Internal("action image escapes the weight space".into())
                    })?;
                    for (pos, c) in coords.into_iter().enumerate() {
                        if !c.is_zero() {
                            *out.at_mut(space.basis_ids[pos], id) =
                                RatFun::constant(&vars, c);
                        }
                    }
                }
            }
        }
        let arc = Arc::new(out);
        self.actions.lock().unwrap().insert(g, arc.clone());
        Ok(arc)
    }

    /// Dense action of an ambient Lie-algebra element that lies in the Levi:
    /// the matching linear combination of generator actions.
    pub fn action_of_element(&self, x: &[Rational]) -> Result<ExactMatrix> {
        let vars = self.lambda.vars().clone();
        let mut out = ExactMatrix::zero(&vars, self.dim(), self.dim());
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = self.action(self.algebra.gen_of(i))?;
            out = out.add(&m.scale(&RatFun::constant(&vars, c.clone())));
        }
        Ok(out)
    }
}

fn add_term(out: &mut PbwVec, m: PbwMono, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match out.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().clone() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn merge(terms: Vec<(PbwMono, Rational)>) -> Vec<(PbwMono, Rational)> {
    let mut map: PbwVec = BTreeMap::new();
    for (m, c) in terms {
        add_term(&mut map, m, c);
    }
    map.into_iter().collect()
}

/// Offset (in simple coordinates) of a PBW monomial.
pub fn pbw_offset(positive: &[Vec<i64>], mono: &PbwMono) -> Vec<i64> {
    let rank = positive.first().map(|r| r.len()).unwrap_or(0);
    let mut acc = vec![0i64; rank];
    for &(idx, e) in mono {
        for (i, &c) in positive[idx - 1].iter().enumerate() {
            acc[i] += c * e as i64;
        }
    }
    acc
}

/// All PBW monomials over the given roots (descending index order) summing
/// to the target offset.
fn enumerate_monos(
    positive: &[Vec<i64>],
    roots: &[usize],
    at: usize,
    remaining: Vec<i64>,
    acc: &mut PbwMono,
    out: &mut Vec<PbwMono>,
) {
    if remaining.iter().all(|&c| c == 0) {
        out.push(acc.clone());
        return;
    }
    if at >= roots.len() {
        return;
    }
    let root = &positive[roots[at] - 1];
    let max_e = remaining
        .iter()
        .zip(root)
        .filter(|(_, &r)| r > 0)
        .map(|(&rem, &r)| rem / r)
        .min()
        .unwrap_or(0);
    for e in (0..=max_e).rev() {
        let rem: Vec<i64> = remaining
            .iter()
            .zip(root)
            .map(|(&a, &b)| a - e * b)
            .collect();
        if rem.iter().any(|&c| c < 0) {
            continue;
        }
        if e > 0 {
            acc.push((roots[at], e as u32));
        }
        enumerate_monos(positive, roots, at + 1, rem, acc, out);
        if e > 0 {
            acc.pop();
        }
    }
}

/// Builds the finite-dimensional highest-weight module over the Levi
/// generated by the given simple roots (0-based), for a highest weight that
/// is dominant integral on the Levi (numeric there; symbolic central
/// coordinates are carried along).
pub fn build_fd_module(
    algebra: Arc<ChevalleyAlgebra>,
    levi: &[usize],
    lambda: &Weight,
) -> Result<FiniteModule> {
    let rs = algebra.system();
    let rank = rs.rank();
    let lam_fund = rs.convert(lambda, Basis::Fundamental)?;
    let mut sorted_levi: Vec<usize> = levi.to_vec();
    sorted_levi.sort_unstable();
    sorted_levi.dedup();

    // Split the Levi into connected components of the Dynkin diagram.
    let mut remaining: Vec<usize> = sorted_levi.clone();
    let mut components: Vec<Vec<usize>> = Vec::new();
    while let Some(&start) = remaining.first() {
        let mut comp = vec![start];
        remaining.retain(|&x| x != start);
        let mut changed = true;
        while changed {
            changed = false;
            let mut take = Vec::new();
            for &cand in &remaining {
                if comp.iter().any(|&c| rs.cartan_matrix()[c][cand] != 0) {
                    take.push(cand);
                }
            }
            for t in take {
                comp.push(t);
                remaining.retain(|&x| x != t);
                changed = true;
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }

    // Identify each component's type and the map standard index -> ambient.
    struct Component {
        crystal: Crystal,
        /// standard local index -> ambient simple index.
        to_ambient: Vec<usize>,
    }
    let mut comps: Vec<Component> = Vec::new();
    for comp in &components {
        let k = comp.len();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| rs.cartan_matrix()[i][j]).collect())
            .collect();
        let candidates: Vec<(char, usize)> = match k {
            1 => vec![('A', 1)],
            2 => vec![('A', 2), ('B', 2), ('G', 2)],
            3 => vec![('A', 3), ('B', 3), ('C', 3)],
            _ => vec![],
        };
        let mut found = None;
        'outer: for (l, r) in candidates {
            let Ok(std_rs) = crate::roots::build_root_system(l, r) else {
                continue;
            };
            let target = std_rs.cartan_matrix();
            for perm in permutations(k) {
                // perm[standard] = local position in comp.
                let ok = (0..k).all(|i| {
                    (0..k).all(|j| sub[perm[i]][perm[j]] == target[i][j])
                });
                if ok {
                    found = Some((l, r, perm));
                    break 'outer;
                }
            }
        }
        let Some((l, r, perm)) = found else {
            return Err(Error::Unsupported(format!(
                "Levi component {comp:?} has an unsupported type"
            )));
        };
        let to_ambient: Vec<usize> = (0..k).map(|i| comp[perm[i]]).collect();
        let lam_local: Vec<i64> = to_ambient
            .iter()
            .map(|&amb| {
                let c = lam_fund.coords[amb].as_rational().ok_or(()).map_err(|_| {
                    Error::NonDominant("symbolic coordinate on the Levi part".into())
                })?;
                if !c.is_integer() || c < Rational::zero() {
                    return Err(Error::NonDominant(format!(
                        "coordinate {c} on the Levi is not a nonnegative integer"
                    )));
                }
                Ok(i64::try_from(c.to_integer()).expect("small coordinate"))
            })
            .collect::<Result<_>>()?;
        let ct = crystal_type(l, r)?;
        let crystal = Crystal::build(&ct, &lam_local)?;
        comps.push(Component { crystal, to_ambient });
    }

    // The reduced word of the longest Levi Weyl element, lex smallest in
    // ambient indices, with each letter routed to its component.
    let word = lex_min_longest_word(rs, &sorted_levi);
    let routed: Vec<(usize, usize)> = word
        .iter()
        .map(|&amb| {
            for (ci, comp) in comps.iter().enumerate() {
                if let Some(local) = comp.to_ambient.iter().position(|&a| a == amb) {
                    return (ci, local);
                }
            }
            unreachable!("word letter outside the Levi")
        })
        .collect();

    // Enumerate product-crystal elements and their adapted strings.
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for comp in &comps {
        let mut next = Vec::new();
        for t in &tuples {
            for e in 0..comp.crystal.len() {
                let mut t2 = t.clone();
                t2.push(e);
                next.push(t2);
            }
        }
        tuples = next;
    }
    let mut basis: Vec<BasisWord> = Vec::new();
    for tuple in tuples {
        // Raise maximally along the word, per component crystal.
        let mut elems: Vec<Vec<usize>> = tuple
            .iter()
            .enumerate()
            .map(|(ci, &e)| comps[ci].crystal.elements[e].clone())
            .collect();
        let mut string: Vec<u32> = Vec::with_capacity(routed.len());
        for &(ci, local) in &routed {
            let mut k = 0u32;
            while let Some(up) = comps[ci].crystal.e(local, &elems[ci]) {
                elems[ci] = up;
                k += 1;
            }
            string.push(k);
        }
        for (ci, comp) in comps.iter().enumerate() {
            if elems[ci] != comp.crystal.elements[0] {
                return Err(Error::Internal(
                    "adapted string failed to reach the highest element".into(),
                ));
            }
        }
        // Assemble the monomial word and its offset.
        let mut letters: Vec<usize> = Vec::new();
        let mut offset = vec![0i64; rank];
        for (pos, &a) in string.iter().enumerate() {
            let amb = word[pos];
            for _ in 0..a {
                letters.push(amb);
            }
            offset[amb] += a as i64;
        }
        basis.push(BasisWord { word: letters, offset });
    }
    // Sort: ascending graded lex on the weight (negated offset), then word
    // sequence ascending.
    basis.sort_by(|a, b| {
        let na: Vec<i64> = a.offset.iter().map(|&c| -c).collect();
        let nb: Vec<i64> = b.offset.iter().map(|&c| -c).collect();
        crate::roots::root_cmp(&na, &nb).then_with(|| a.word.cmp(&b.word))
    });

    let eta_pairings: Vec<RatFun> = (0..rank)
        .map(|j| {
            lam_fund.coords[j].scale(&(rs.form()[j][j].clone() / rat_int(2)))
        })
        .collect();

    Ok(FiniteModule {
        algebra,
        levi: sorted_levi,
        lambda: lambda.clone(),
        basis,
        eta_pairings,
        spaces: Mutex::new(BTreeMap::new()),
        actions: Mutex::new(BTreeMap::new()),
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..k {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}
