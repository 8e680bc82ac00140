//! Borel orbits in the orthogonal nilpotent families.
//!
//! Two catalogs live here. `TwoNilpotent` covers the square-zero
//! matrices of rank 2s in so_n, indexed by pairs (sigma, tau) with
//! sigma a minimal coset representative and tau a permutation of [2s]
//! whose product with the order reversal is a fixed-point-free
//! involution; for n = 4s the variety splits into two components
//! exchanged by the middle swap m. `ThreeNilpotent` covers the
//! cube-zero rank-two family, indexed by (sigma, level) with the level
//! recording the last nonzero coordinate of the lowest-weight line.
//!
//! Cover moves are combinatorial, but every single (orbit, parabolic)
//! pair is checked against the dimension oracle; any disagreement
//! surfaces as a rule-gap error instead of a silently wrong graph.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{CoverType, GraphEdge, GraphNode, TypedWeakGraph};
use crate::mat::{algebra_basis, nullspace, Algebra, IntMat, OrbitDimOracle};
use crate::weyl::{CosetMove, Perm, WeylGroup};

use super::{simple_relax, word_label};

/// The Weyl group of so_n in its permutation realization, with the
/// letter used for words in orbit labels.
fn orthogonal_weyl(n: usize) -> Result<(WeylGroup, &'static str)> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("need n >= 4, got {n}")));
    }
    if n % 2 == 1 {
        Ok((WeylGroup::type_b(n / 2), "b"))
    } else {
        Ok((WeylGroup::type_d(n / 2), "d"))
    }
}

fn perm_sign(p: &Perm) -> i64 {
    let images = p.images();
    let mut inversions = 0usize;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Permutations tau of [2s] whose product with the order reversal is a
/// fixed-point-free involution. There are (2s-1)!! of them.
pub fn fpf_index(s: usize) -> Vec<Perm> {
    let m = 2 * s;
    let rev = Perm::from_images((1..=m).rev().collect()).expect("reversal");
    WeylGroup::symmetric(m)
        .elements()
        .iter()
        .filter(|tau| {
            let p = rev.compose(tau);
            p.compose(&p).is_identity() && (1..=m).all(|a| p.apply(a) != a)
        })
        .cloned()
        .collect()
}

/// Lexicographically least sign assignment on the given cells (one per
/// row, distinct columns) passing the so-membership, square-zero and
/// rank validators. The cells carry the combinatorial content; signs
/// are a convention, so they are searched rather than trusted.
fn signed_placement(n: usize, cells: &[(usize, usize)], rank: usize) -> Result<IntMat> {
    let k = cells.len();
    for mask in 0u32..(1 << k) {
        let mut x = IntMat::zeros(n);
        for (pos, &(i, j)) in cells.iter().enumerate() {
            let sign = if mask >> (k - 1 - pos) & 1 == 0 { 1 } else { -1 };
            x.set(i, j, sign);
        }
        if Algebra::Orthogonal.member(&x).is_ok() && (&x * &x).is_zero() && x.rank() == rank {
            return Ok(x);
        }
    }
    Err(Error::Validation(format!(
        "no sign assignment on the support {cells:?} passes the so_{n} validators"
    )))
}

/// Orbit index for the square-zero rank-2s family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoNilId {
    pub sigma: Perm,
    pub tau: Perm,
    pub twisted: bool,
}

pub struct TwoNilpotent {
    n: usize,
    s: usize,
    weyl: WeylGroup,
    sym: WeylGroup,
    letter: &'static str,
    sub_gens: Vec<usize>,
    very_even: bool,
    ids: Vec<TwoNilId>,
    index: HashMap<TwoNilId, usize>,
    reps: Vec<IntMat>,
    dims: Vec<usize>,
    oracle: OrbitDimOracle,
}

impl TwoNilpotent {
    pub fn new(n: usize, s: usize) -> Result<TwoNilpotent> {
        if s < 1 || 4 * s > n {
            return Err(Error::InvalidInput(format!(
                "need 1 <= s and 4s <= n, got n = {n}, s = {s}"
            )));
        }
        let (weyl, letter) = orthogonal_weyl(n)?;
        let sym = WeylGroup::symmetric(2 * s);
        let sub_gens: Vec<usize> = (1..=weyl.rank())
            .filter(|&g| {
                let gen = weyl.generator(g);
                (1..=2 * s).all(|a| gen.apply(a) <= 2 * s)
            })
            .collect();
        let very_even = n == 4 * s;
        let oracle = OrbitDimOracle::new(Algebra::Orthogonal, n);
        let mut inner = Vec::new();
        for tau in fpf_index(s) {
            let cells: Vec<(usize, usize)> =
                (1..=2 * s).map(|a| (a, n - 2 * s + tau.apply(a))).collect();
            inner.push((tau, signed_placement(n, &cells, 2 * s)?));
        }
        let twists: &[bool] = if very_even { &[false, true] } else { &[false] };
        let mid = middle_swap(n);
        let mut ids = Vec::new();
        let mut index = HashMap::new();
        let mut reps = Vec::new();
        let mut dims = Vec::new();
        for sigma in weyl.min_coset_reps(&sub_gens) {
            for (tau, u) in &inner {
                for &twisted in twists {
                    let id =
                        TwoNilId { sigma: sigma.clone(), tau: tau.clone(), twisted };
                    let s_mat = sigma.matrix();
                    let mut y = &(&s_mat * u) * &s_mat.transpose();
                    if twisted {
                        y = &(&mid * &y) * &mid;
                    }
                    Algebra::Orthogonal.member(&y)?;
                    if !(&y * &y).is_zero() || y.rank() != 2 * s {
                        return Err(Error::Validation(
                            "conjugated representative failed the validators".into(),
                        ));
                    }
                    dims.push(oracle.borel_orbit_dim(&y)?);
                    index.insert(id.clone(), ids.len());
                    reps.push(y);
                    ids.push(id);
                }
            }
        }
        Ok(TwoNilpotent {
            n,
            s,
            weyl,
            sym,
            letter,
            sub_gens,
            very_even,
            ids,
            index,
            reps,
            dims,
            oracle,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn ids(&self) -> &[TwoNilId] {
        &self.ids
    }

    pub fn representative(&self, idx: usize) -> &IntMat {
        &self.reps[idx]
    }

    pub fn dim(&self, idx: usize) -> usize {
        self.dims[idx]
    }

    pub fn label(&self, idx: usize) -> String {
        let id = &self.ids[idx];
        let body = format!(
            "({}, {})",
            word_label(self.letter, &self.weyl.word(&id.sigma)),
            word_label("s", &self.sym.word(&id.tau))
        );
        if id.twisted {
            format!("m{body}")
        } else {
            body
        }
    }

    /// On the twisted component the diagram swap exchanges the two fork
    /// parabolics, so the combinatorial move for parabolic g is read at
    /// the swapped index.
    fn fork_swap(&self, twisted: bool, g: usize) -> usize {
        let r = self.weyl.rank();
        if twisted && self.very_even {
            if g == r {
                r - 1
            } else if g == r - 1 {
                r
            } else {
                g
            }
        } else {
            g
        }
    }

    /// Weak-order covers from one orbit: (target, parabolic, type), all
    /// type U. Every parabolic is cross-checked against the dimension
    /// oracle, including the ones the rules say do nothing.
    pub fn weak_covers(&self, idx: usize) -> Result<Vec<(usize, usize, CoverType)>> {
        let id = &self.ids[idx];
        let dim = self.dims[idx];
        let mut out = Vec::new();
        for g in 1..=self.weyl.rank() {
            let h = self.fork_swap(id.twisted, g);
            let rule_target = match self.weyl.coset_move(&self.sub_gens, &id.sigma, h) {
                CosetMove::Up(next) => {
                    Some(TwoNilId { sigma: next, tau: id.tau.clone(), twisted: id.twisted })
                }
                CosetMove::Down(_) => None,
                CosetMove::Fixed(j) if j < 2 * self.s => {
                    let s_j = self.sym.generator(j);
                    let s_mirror = self.sym.generator(2 * self.s - j);
                    let twisted_tau = s_j.compose(&id.tau).compose(s_mirror);
                    if twisted_tau != id.tau {
                        Some(TwoNilId {
                            sigma: id.sigma.clone(),
                            tau: twisted_tau,
                            twisted: id.twisted,
                        })
                    } else {
                        None
                    }
                }
                CosetMove::Fixed(_) => None,
            };
            let raised = self.parabolic_dim(idx, g)?;
            match rule_target {
                Some(target_id) => {
                    let target = *self.index.get(&target_id).ok_or_else(|| {
                        Error::Validation(format!(
                            "move from {} lands outside the catalog",
                            self.label(idx)
                        ))
                    })?;
                    if raised == dim + 1 {
                        if self.dims[target] != dim + 1 {
                            return Err(self.rule_gap(idx, g, raised));
                        }
                        out.push((target, g, CoverType::U));
                    } else if raised != dim || self.dims[target] + 1 != dim {
                        return Err(self.rule_gap(idx, g, raised));
                    }
                }
                None => {
                    if raised != dim {
                        return Err(self.rule_gap(idx, g, raised));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn parabolic_dim(&self, idx: usize, g: usize) -> Result<usize> {
        let relax = simple_relax(self.weyl.family(), self.n, g);
        self.oracle.parabolic_orbit_dim(&self.reps[idx], &relax)
    }

    fn rule_gap(&self, idx: usize, g: usize, raised: usize) -> Error {
        Error::RuleGap(format!(
            "orbit {} has dimension {} but parabolic {} gives {}",
            self.label(idx),
            self.dims[idx],
            g,
            raised
        ))
    }

    pub fn weak_graph(&self) -> Result<TypedWeakGraph> {
        let nodes = (0..self.len())
            .map(|idx| GraphNode { id: self.label(idx), dim: self.dims[idx] })
            .collect();
        let mut edges = Vec::new();
        for idx in 0..self.len() {
            for (target, parabolic, kind) in self.weak_covers(idx)? {
                edges.push(GraphEdge {
                    src: self.label(idx),
                    dst: self.label(target),
                    parabolic,
                    kind,
                });
            }
        }
        TypedWeakGraph::new(nodes, edges, if self.very_even { 2 } else { 1 })
    }
}

/// The permutation matrix exchanging the two middle coordinates.
fn middle_swap(n: usize) -> IntMat {
    let half = n / 2;
    let mut images: Vec<usize> = (1..=n).collect();
    images.swap(half - 1, half);
    Perm::from_images(images).expect("swap").matrix()
}

/// Orbit index for the cube-zero rank-two family: a coset-minimal Weyl
/// part and the level i of the representative f_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreeNilId {
    pub sigma: Perm,
    pub level: usize,
}

pub struct ThreeNilpotent {
    n: usize,
    r: usize,
    level_max: usize,
    weyl: WeylGroup,
    letter: &'static str,
    sub_gens: Vec<usize>,
    ids: Vec<ThreeNilId>,
    index: HashMap<ThreeNilId, usize>,
    reps: Vec<IntMat>,
    dims: Vec<usize>,
    oracle: OrbitDimOracle,
}

/// The level-i normal form: two hooks through the corner for i below
/// the middle, a single hook in the odd middle case.
fn level_matrix(n: usize, i: usize) -> IntMat {
    let r = n / 2;
    let mut f = IntMat::zeros(n);
    if n % 2 == 1 && i == r {
        f.set(1, r + 1, 1);
        f.set(r + 1, n, -1);
    } else {
        f.set(1, i + 1, 1);
        f.set(1, n - i, 1);
        f.set(n - i, n, -1);
        f.set(i + 1, n, -1);
    }
    f
}

impl ThreeNilpotent {
    pub fn new(n: usize) -> Result<ThreeNilpotent> {
        let (weyl, letter) = orthogonal_weyl(n)?;
        let r = n / 2;
        let level_max = if n % 2 == 1 { r } else { r - 1 };
        let sub_gens: Vec<usize> =
            (1..=weyl.rank()).filter(|&g| weyl.generator(g).apply(1) == 1).collect();
        let oracle = OrbitDimOracle::new(Algebra::Orthogonal, n);
        let mut ids = Vec::new();
        let mut index = HashMap::new();
        let mut reps = Vec::new();
        let mut dims = Vec::new();
        for sigma in weyl.min_coset_reps(&sub_gens) {
            for level in 1..=level_max {
                let id = ThreeNilId { sigma: sigma.clone(), level };
                let mut s_mat = sigma.matrix();
                if n % 2 == 1 && perm_sign(&sigma) < 0 {
                    s_mat.set(r + 1, r + 1, -1);
                }
                let z = &(&s_mat * &level_matrix(n, level)) * &s_mat.transpose();
                Algebra::Orthogonal.member(&z)?;
                let z2 = &z * &z;
                if z.rank() != 2 || z2.rank() != 1 || !(&z2 * &z).is_zero() {
                    return Err(Error::Validation(
                        "representative failed the cube-zero validators".into(),
                    ));
                }
                let dim = weyl.length(&sigma) + n - 1 - level;
                if oracle.borel_orbit_dim(&z)? != dim {
                    return Err(Error::Validation(format!(
                        "dimension formula disagrees with the oracle at ({}, f{})",
                        word_label(letter, &weyl.word(&sigma)),
                        level
                    )));
                }
                index.insert(id.clone(), ids.len());
                reps.push(z);
                dims.push(dim);
                ids.push(id);
            }
        }
        Ok(ThreeNilpotent {
            n,
            r,
            level_max,
            weyl,
            letter,
            sub_gens,
            ids,
            index,
            reps,
            dims,
            oracle,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ids(&self) -> &[ThreeNilId] {
        &self.ids
    }

    /// Number of levels: r for odd ambient dimension, r - 1 for even.
    pub fn level_max(&self) -> usize {
        self.level_max
    }

    pub fn representative(&self, idx: usize) -> &IntMat {
        &self.reps[idx]
    }

    pub fn dim(&self, idx: usize) -> usize {
        self.dims[idx]
    }

    /// Rank of the orbit as a spherical variety datum: 1 exactly for
    /// the top level in odd ambient dimension, 2 otherwise.
    pub fn orbit_rank(&self, idx: usize) -> usize {
        if self.n % 2 == 1 && self.ids[idx].level == self.r {
            1
        } else {
            2
        }
    }

    pub fn label(&self, idx: usize) -> String {
        let id = &self.ids[idx];
        format!(
            "({}, f{})",
            word_label(self.letter, &self.weyl.word(&id.sigma)),
            id.level
        )
    }

    /// Weak-order covers from one orbit: (target, parabolic, type).
    /// sigma-moves keep the level; level moves drop it by one and are
    /// type N exactly when the orbit rank jumps from 1 to 2. Every
    /// parabolic is cross-checked against the dimension oracle.
    pub fn weak_covers(&self, idx: usize) -> Result<Vec<(usize, usize, CoverType)>> {
        let id = &self.ids[idx];
        let dim = self.dims[idx];
        let odd = self.n % 2 == 1;
        let mut out = Vec::new();
        for g in 1..=self.weyl.rank() {
            let rule_target = match self.weyl.coset_move(&self.sub_gens, &id.sigma, g) {
                CosetMove::Up(next) => {
                    Some((ThreeNilId { sigma: next, level: id.level }, CoverType::U))
                }
                CosetMove::Down(_) => None,
                CosetMove::Fixed(j) => {
                    let fork = !odd && id.level == self.r - 1 && j == self.r;
                    if id.level >= 2 && (j == id.level || fork) {
                        let kind = if odd && id.level == self.r {
                            CoverType::N
                        } else {
                            CoverType::U
                        };
                        Some((
                            ThreeNilId { sigma: id.sigma.clone(), level: id.level - 1 },
                            kind,
                        ))
                    } else {
                        None
                    }
                }
            };
            let relax = simple_relax(self.weyl.family(), self.n, g);
            let raised = self.oracle.parabolic_orbit_dim(&self.reps[idx], &relax)?;
            match rule_target {
                Some((target_id, kind)) => {
                    if raised != dim + 1 {
                        return Err(self.rule_gap(idx, g, raised));
                    }
                    let target = self.index[&target_id];
                    out.push((target, g, kind));
                }
                None => {
                    if raised != dim {
                        return Err(self.rule_gap(idx, g, raised));
                    }
                }
            }
        }
        Ok(out)
    }

    fn rule_gap(&self, idx: usize, g: usize, raised: usize) -> Error {
        Error::RuleGap(format!(
            "orbit {} has dimension {} but parabolic {} gives {}",
            self.label(idx),
            self.dims[idx],
            g,
            raised
        ))
    }

    pub fn weak_graph(&self) -> Result<TypedWeakGraph> {
        let nodes = (0..self.len())
            .map(|idx| GraphNode { id: self.label(idx), dim: self.dims[idx] })
            .collect();
        let mut edges = Vec::new();
        for idx in 0..self.len() {
            for (target, parabolic, kind) in self.weak_covers(idx)? {
                edges.push(GraphEdge {
                    src: self.label(idx),
                    dst: self.label(target),
                    parabolic,
                    kind,
                });
            }
        }
        TypedWeakGraph::new(nodes, edges, 1)
    }
}

/// The standard triple through the level-one representative: x is the
/// corner hook, y its transpose-like partner, h the diagonal bracket.
pub fn standard_triple(n: usize) -> Result<(IntMat, IntMat, IntMat)> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("need n >= 4, got {n}")));
    }
    let mut x = IntMat::zeros(n);
    x.set(1, 2, 1);
    x.set(1, n - 1, 1);
    x.set(2, n, -1);
    x.set(n - 1, n, -1);
    let mut y = IntMat::zeros(n);
    y.set(2, 1, 1);
    y.set(n - 1, 1, 1);
    y.set(n, 2, -1);
    y.set(n, n - 1, -1);
    let h = x.bracket(&y);
    Algebra::Orthogonal.member(&x)?;
    Algebra::Orthogonal.member(&y)?;
    Algebra::Orthogonal.member(&h)?;
    Ok((x, y, h))
}

/// Dimension of the weight-2 eigenspace of ad h on so_n, for the h of
/// the standard triple.
pub fn weight_two_dim(n: usize) -> Result<usize> {
    let (_, _, h) = standard_triple(n)?;
    let basis = algebra_basis(Algebra::Orthogonal, n);
    let columns: Vec<Vec<i64>> = basis
        .iter()
        .map(|b| {
            let mut m = h.bracket(b);
            for (i, j, v) in b.entries() {
                m.set(i, j, m.get(i, j) - 2 * v);
            }
            m.flatten()
        })
        .collect();
    let rows: Vec<Vec<i64>> = (0..n * n)
        .map(|p| columns.iter().map(|c| c[p]).collect())
        .collect();
    Ok(nullspace(&rows, basis.len()).len())
}

/// Exact sample points of the cube-zero so_5 family built from a
/// nilpotent so_3 block C and a kernel vector y of C². Each point is
/// checked against the two defining polynomials
/// X1² + 2·X2·X3 and X1·Y2 − X2·Y3 − X3·Y1
/// in the block coordinates, and against the matrix validators.
/// Returns the number of verified points, at least `count`.
pub fn cube_zero_samples(count: usize) -> Result<usize> {
    let mut verified = 0;
    let mut grid = 1i64;
    while verified < count {
        for s in 1..=grid {
            for t in 1..=grid {
                if s.max(t) < grid {
                    continue;
                }
                let (a, b, c) = (2 * s * t, 2 * t * t, -s * s);
                if a * a + 2 * b * c != 0 {
                    return Err(Error::Validation("block is not nilpotent".into()));
                }
                let mut block = IntMat::zeros(3);
                block.set(1, 1, a);
                block.set(1, 2, b);
                block.set(2, 1, c);
                block.set(2, 3, -b);
                block.set(3, 2, -c);
                block.set(3, 3, -a);
                let sq = &block * &block;
                let kernel = nullspace(
                    &(1..=3).map(|i| (1..=3).map(|j| sq.get(i, j)).collect()).collect::<Vec<_>>(),
                    3,
                );
                if kernel.len() != 2 {
                    return Err(Error::Validation("kernel of the square must be a plane".into()));
                }
                let lam = (1 + (s + t) % 3, 1 + (s * t) % 4);
                let y: Vec<i64> = (0..3)
                    .map(|p| lam.0 * kernel[0][p] + lam.1 * kernel[1][p])
                    .collect();
                if c * y[0] - a * y[1] + b * y[2] != 0 {
                    return Err(Error::Validation(format!(
                        "kernel relation fails at (s, t) = ({s}, {t})"
                    )));
                }
                let mut z = IntMat::zeros(5);
                for i in 1..=3 {
                    for j in 1..=3 {
                        z.set(i + 1, j + 1, block.get(i, j));
                    }
                }
                for p in 0..3 {
                    z.set(1, 4 - p, -y[p]);
                    z.set(2 + p, 5, y[p]);
                }
                Algebra::Orthogonal.member(&z)?;
                let z2 = &z * &z;
                if !(&z2 * &z).is_zero() || z.rank() > 2 || z2.rank() > 1 {
                    return Err(Error::Validation(format!(
                        "assembled point fails the variety validators at (s, t) = ({s}, {t})"
                    )));
                }
                verified += 1;
            }
        }
        grid += 1;
    }
    Ok(verified)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fpf_index_counts_are_double_factorials() {
        assert_eq!(fpf_index(1).len(), 1);
        assert_eq!(fpf_index(2).len(), 3);
        assert_eq!(fpf_index(3).len(), 15);
    }

    #[test]
    fn searched_signs_agree_with_the_pairing_formula() {
        for (n, s) in [(4, 1), (5, 1), (6, 1), (8, 2), (9, 2)] {
            for tau in fpf_index(s) {
                let cells: Vec<(usize, usize)> =
                    (1..=2 * s).map(|a| (a, n - 2 * s + tau.apply(a))).collect();
                let found = signed_placement(n, &cells, 2 * s).unwrap();
                let mut want = IntMat::zeros(n);
                for a in 1..=2 * s {
                    let sign = if a + tau.apply(a) <= 2 * s { 1 } else { -1 };
                    want.set(a, n - 2 * s + tau.apply(a), sign);
                }
                assert_eq!(found, want);
            }
        }
    }

    #[test]
    fn two_nilpotent_counts_and_validators() {
        // Coset count times arc count, doubled when the split applies.
        assert_eq!(TwoNilpotent::new(4, 1).unwrap().len(), 4);
        assert_eq!(TwoNilpotent::new(5, 1).unwrap().len(), 4);
        assert_eq!(TwoNilpotent::new(6, 1).unwrap().len(), 12);
        assert_eq!(TwoNilpotent::new(8, 2).unwrap().len(), 48);
    }

    #[test]
    fn very_even_split_gives_two_mirrored_chains() {
        let cat = TwoNilpotent::new(4, 1).unwrap();
        let g = cat.weak_graph().unwrap();
        assert_eq!(g.nodes().len(), 4);
        let edges: Vec<(String, String, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.src.clone(), e.dst.clone(), e.parabolic))
            .collect();
        assert!(edges.contains(&("(1, 1)".to_string(), "(d2, 1)".to_string(), 2)));
        assert!(edges.contains(&("m(1, 1)".to_string(), "m(d2, 1)".to_string(), 1)));
        assert_eq!(edges.len(), 2);
        assert!(g.certificates().is_empty());
    }

    #[test]
    fn two_nilpotent_graphs_are_all_type_u() {
        for (n, s) in [(5, 1), (6, 1), (8, 2), (9, 2)] {
            let cat = TwoNilpotent::new(n, s).unwrap();
            let g = cat.weak_graph().unwrap();
            assert!(g.edges().iter().all(|e| e.kind == CoverType::U), "(n, s) = ({n}, {s})");
            assert!(g.certificates().is_empty());
        }
    }

    #[test]
    fn three_nilpotent_level_matrices_match_the_hand_squares() {
        let f1 = level_matrix(5, 1);
        let mut want = IntMat::zeros(5);
        want.set(1, 2, 1);
        want.set(1, 4, 1);
        want.set(4, 5, -1);
        want.set(2, 5, -1);
        assert_eq!(f1, want);
        let mut sq = IntMat::zeros(5);
        sq.set(1, 5, -2);
        assert_eq!(&f1 * &f1, sq);
        let f2 = level_matrix(5, 2);
        let mut want = IntMat::zeros(5);
        want.set(1, 3, 1);
        want.set(3, 5, -1);
        assert_eq!(f2, want);
        let mut sq = IntMat::zeros(5);
        sq.set(1, 5, -1);
        assert_eq!(&f2 * &f2, sq);
    }

    #[test]
    fn three_nilpotent_counts_ranks_and_dims() {
        let cat = ThreeNilpotent::new(5).unwrap();
        assert_eq!(cat.len(), 8);
        for idx in 0..cat.len() {
            let id = &cat.ids()[idx];
            assert_eq!(cat.orbit_rank(idx), if id.level == 2 { 1 } else { 2 });
        }
        let cat = ThreeNilpotent::new(6).unwrap();
        assert_eq!(cat.len(), 12);
        assert!((0..cat.len()).all(|idx| cat.orbit_rank(idx) == 2));
        // For n = 4 the coset stabilizer is trivial, so the whole Weyl
        // group indexes orbits at the single level.
        let cat = ThreeNilpotent::new(4).unwrap();
        assert_eq!(cat.len(), 4);
        let g = cat.weak_graph().unwrap();
        assert_eq!(g.edges().len(), 4);
    }

    #[test]
    fn five_dimensional_graph_matches_the_hand_computation() {
        let cat = ThreeNilpotent::new(5).unwrap();
        let g = cat.weak_graph().unwrap();
        assert_eq!(g.nodes().len(), 8);
        assert_eq!(g.edges().len(), 8);
        let n_edges: Vec<(String, String, usize)> = g
            .edges()
            .iter()
            .filter(|e| e.kind == CoverType::N)
            .map(|e| (e.src.clone(), e.dst.clone(), e.parabolic))
            .collect();
        assert_eq!(
            n_edges,
            vec![
                ("(1, f2)".to_string(), "(1, f1)".to_string(), 2),
                ("(b1b2b1, f2)".to_string(), "(b1b2b1, f1)".to_string(), 2),
            ]
        );
        let certified: Vec<(String, Vec<usize>)> =
            g.certificates().into_iter().map(|c| (c.y3, c.chain)).collect();
        assert_eq!(
            certified,
            vec![
                ("(b2b1, f2)".to_string(), vec![]),
                ("(b1b2b1, f2)".to_string(), vec![1]),
            ]
        );
    }

    #[test]
    fn six_dimensional_graph_has_parallel_edges_and_no_certificates() {
        let cat = ThreeNilpotent::new(6).unwrap();
        let g = cat.weak_graph().unwrap();
        assert_eq!(g.nodes().len(), 12);
        assert!(g.edges().iter().all(|e| e.kind == CoverType::U));
        let parallel: Vec<usize> = g
            .edges()
            .iter()
            .filter(|e| e.src == "(1, f2)" && e.dst == "(1, f1)")
            .map(|e| e.parabolic)
            .collect();
        assert_eq!(parallel, vec![2, 3]);
        assert!(g.certificates().is_empty());
    }

    #[test]
    fn seven_dimensional_graph_certificates() {
        let cat = ThreeNilpotent::new(7).unwrap();
        let g = cat.weak_graph().unwrap();
        assert_eq!(g.nodes().len(), 18);
        assert_eq!(g.edges().len(), 23);
        let n_edges: Vec<(String, usize)> = g
            .edges()
            .iter()
            .filter(|e| e.kind == CoverType::N)
            .map(|e| (e.src.clone(), e.parabolic))
            .collect();
        assert_eq!(
            n_edges,
            vec![
                ("(1, f3)".to_string(), 3),
                ("(b1, f3)".to_string(), 3),
                ("(b2b3b2b1, f3)".to_string(), 3),
                ("(b1b2b3b2b1, f3)".to_string(), 3),
            ]
        );
        let certified: Vec<String> = g.certificates().into_iter().map(|c| c.y3).collect();
        assert_eq!(
            certified,
            vec![
                "(b3b2b1, f3)".to_string(),
                "(b2b3b2b1, f3)".to_string(),
                "(b1b2b3b2b1, f3)".to_string(),
            ]
        );
    }

    #[test]
    fn standard_triple_brackets() {
        for n in [5, 6, 7] {
            let (x, y, h) = standard_triple(n).unwrap();
            assert_eq!(x.bracket(&y), h);
            let mut two_x = IntMat::zeros(n);
            for (i, j, v) in x.entries() {
                two_x.set(i, j, 2 * v);
            }
            assert_eq!(h.bracket(&x), two_x);
            let mut minus_two_y = IntMat::zeros(n);
            for (i, j, v) in y.entries() {
                minus_two_y.set(i, j, -2 * v);
            }
            assert_eq!(h.bracket(&y), minus_two_y);
            assert_eq!(weight_two_dim(n).unwrap(), n - 2);
        }
    }

    #[test]
    fn cube_zero_sampling_verifies_the_polynomials() {
        assert!(cube_zero_samples(100).unwrap() >= 100);
    }
}
