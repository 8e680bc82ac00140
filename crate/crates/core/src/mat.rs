//! Exact integer matrices and the rank machinery used everywhere else:
//! fraction-free rank, flag rank tables, rational nullspaces, and the
//! Lie-algebra dimension oracles for Borel and minimal-parabolic orbits.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

type Q = Ratio<i128>;

/// Square integer matrix. Public accessors are 1-based to match the
/// index conventions of flags, root spaces and matrix units.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatWire", into = "MatWire")]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(n: usize) -> Self {
        IntMat { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n);
        for i in 1..=n {
            m.set(i, i, 1);
        }
        m
    }

    /// Matrix unit E_{ij}.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = IntMat::zeros(n);
        m.set(i, j, 1);
        m
    }

    /// Antidiagonal form J: ones at (i, n+1-i).
    pub fn antidiag(n: usize) -> Self {
        let mut m = IntMat::zeros(n);
        for i in 1..=n {
            m.set(i, n + 1 - i, 1);
        }
        m
    }

    /// Antisymmetric form K = [[0, J], [-J, 0]] used for the symplectic
    /// algebra; requires even size.
    pub fn symplectic_form(n: usize) -> Self {
        assert!(n % 2 == 0, "symplectic form needs even size");
        let h = n / 2;
        let mut m = IntMat::zeros(n);
        for i in 1..=h {
            m.set(i, n + 1 - i, 1);
            m.set(n + 1 - i, i, -1);
        }
        m
    }

    /// Permutation matrix P with P e_j = e_{images[j-1]}.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = IntMat::zeros(n);
        for (j, &i) in images.iter().enumerate() {
            m.set(i, j + 1, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix rows must be square".into()));
        }
        Ok(IntMat { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.data[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn trace(&self) -> i64 {
        (1..=self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn scaled(&self, c: i64) -> IntMat {
        IntMat { n: self.n, data: self.data.iter().map(|&v| v * c).collect() }
    }

    /// Commutator [self, other] = self*other - other*self.
    pub fn bracket(&self, other: &IntMat) -> IntMat {
        &(self * other) - &(other * self)
    }

    /// g * self * g^T; valid conjugation whenever g g^T = I (signed
    /// permutations in particular), which is asserted.
    pub fn conjugate_by_orthogonal(&self, g: &IntMat) -> IntMat {
        debug_assert!((&(g * &g.transpose())) == &IntMat::identity(self.n));
        &(g * self) * &g.transpose()
    }

    /// Exact inverse when it exists over the integers.
    pub fn inverse_exact(&self) -> Option<IntMat> {
        let n = self.n;
        let mut m: Vec<Vec<Q>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| Q::from_integer(self.get(i, j) as i128))
                    .chain((1..=n).map(|j| Q::from_integer((i == j) as i128)))
                    .collect()
            })
            .collect();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                return None;
            };
            m.swap(row, p);
            let inv = m[row][col];
            for c in col..2 * n {
                m[row][c] /= inv;
            }
            for r in 0..n {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in col..2 * n {
                        let t = m[row][c] * f;
                        m[r][c] -= t;
                    }
                }
            }
            row += 1;
        }
        let mut out = IntMat::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                let v = m[i - 1][n + j - 1];
                if !v.denom().is_one() {
                    return None;
                }
                out.set(i, j, i64::try_from(*v.numer()).ok()?);
            }
        }
        Some(out)
    }

    /// Least k >= 1 with self^k = 0.
    pub fn nilpotency_order(&self) -> Result<usize> {
        let mut p = self.clone();
        for k in 1..=self.n {
            if p.is_zero() {
                return Ok(k);
            }
            p = &p * self;
        }
        Err(Error::NotNilpotent)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<i64>> =
            (1..=self.n).map(|i| (1..=self.n).map(|j| self.get(i, j)).collect()).collect();
        rank_rows(&rows)
    }

    pub fn flatten(&self) -> Vec<i64> {
        self.data.clone()
    }

    pub fn entries(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                let v = self.get(i, j);
                if v != 0 {
                    out.push((i, j, v));
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f)?;
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| format!("{:3}", self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Add for &IntMat {
    type Output = IntMat;
    fn add(self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n);
        IntMat {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMat {
    type Output = IntMat;
    fn sub(self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n);
        IntMat {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMat {
    type Output = IntMat;
    fn neg(self) -> IntMat {
        self.scaled(-1)
    }
}

impl Mul for &IntMat {
    type Output = IntMat;
    fn mul(self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IntMat::zeros(n);
        for i in 1..=n {
            for k in 1..=n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 1..=n {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        out.add_at(i, j, a * b);
                    }
                }
            }
        }
        out
    }
}

/// Wire format: dense row-major arrays on output, dense or sparse
/// {i, j, val} triples accepted on input.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MatWire {
    Dense(Vec<Vec<i64>>),
    Sparse { n: usize, entries: Vec<SparseEntry> },
}

#[derive(Serialize, Deserialize)]
struct SparseEntry {
    i: usize,
    j: usize,
    val: i64,
}

impl From<IntMat> for MatWire {
    fn from(m: IntMat) -> MatWire {
        let n = m.size();
        MatWire::Dense((1..=n).map(|i| (1..=n).map(|j| m.get(i, j)).collect()).collect())
    }
}

impl TryFrom<MatWire> for IntMat {
    type Error = Error;
    fn try_from(w: MatWire) -> Result<IntMat> {
        match w {
            MatWire::Dense(rows) => {
                let n = rows.len();
                if rows.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidInput("matrix rows must form a square".into()));
                }
                Ok(IntMat { n, data: rows.into_iter().flatten().collect() })
            }
            MatWire::Sparse { n, entries } => {
                let mut m = IntMat::zeros(n);
                for e in entries {
                    if e.i < 1 || e.i > n || e.j < 1 || e.j > n {
                        return Err(Error::InvalidInput(format!(
                            "entry ({},{}) out of range for size {n}",
                            e.i, e.j
                        )));
                    }
                    m.add_at(e.i, e.j, e.val);
                }
                Ok(m)
            }
        }
    }
}

/// Rank of a rectangular integer matrix given as rows. Fraction-free
/// elimination over i128 with a big-integer fallback on overflow.
pub fn rank_rows(rows: &[Vec<i64>]) -> usize {
    match rank_rows_i128(rows) {
        Some(r) => r,
        None => rank_rows_bigint(rows),
    }
}

fn rank_rows_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nr {
            for c in col + 1..nc {
                let a = m[rank][col].checked_mul(m[r][c])?;
                let b = m[r][col].checked_mul(m[rank][c])?;
                // Bareiss: this division is exact.
                m[r][c] = a.checked_sub(b)? / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

fn rank_rows_bigint(rows: &[Vec<i64>]) -> usize {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nr {
            for c in col + 1..nc {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Ranks of the first i columns, for every i, of the matrix given as rows.
fn column_ranks(rows: &[Vec<i64>], ncols: usize) -> Vec<usize> {
    let m = rows.len();
    if m == 0 {
        return vec![0; ncols];
    }
    // Echelon basis of the column space seen so far: (pivot position, vector).
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut out = Vec::with_capacity(ncols);
    for c in 0..ncols {
        let mut v: Vec<Q> = rows.iter().map(|r| Q::from_integer(r[c] as i128)).collect();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p];
                for k in 0..m {
                    let t = b[k] * f;
                    v[k] -= t;
                }
            }
        }
        if let Some(p) = (0..m).find(|&k| !v[k].is_zero()) {
            let inv = v[p];
            for entry in &mut v {
                *entry /= inv;
            }
            basis.push((p, v));
        }
        out.push(basis.len());
    }
    out
}

/// Flag rank table of a matrix x: entry (i, j) is dim(x(V_i) + V_j) for
/// the standard flag V_0 < V_1 < ... < V_n, with i in 1..=n, j in 0..=n.
/// Invariant under conjugation by upper-triangular matrices; entrywise
/// comparison detects degeneration between orbits.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankTable {
    n: usize,
    data: Vec<u32>,
}

impl RankTable {
    pub fn of(x: &IntMat) -> RankTable {
        let n = x.size();
        let mut data = vec![0u32; n * (n + 1)];
        for j in 0..=n {
            // dim(x(V_i) + V_j) = j + rank of rows j+1..n, columns 1..i of x.
            let rows: Vec<Vec<i64>> =
                (j + 1..=n).map(|r| (1..=n).map(|c| x.get(r, c)).collect()).collect();
            let ranks = column_ranks(&rows, n);
            for i in 1..=n {
                data[(i - 1) * (n + 1) + j] = (j + ranks[i - 1]) as u32;
            }
        }
        RankTable { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(i >= 1 && i <= self.n && j <= self.n);
        self.data[(i - 1) * (self.n + 1) + j]
    }

    /// Entrywise >=.
    pub fn dominates(&self, other: &RankTable) -> bool {
        assert_eq!(self.n, other.n);
        self.data.iter().zip(&other.data).all(|(a, b)| a >= b)
    }

    /// Rank table of a matrix supported on the given cells with nonzero
    /// entries, all in distinct rows and distinct columns. Any submatrix
    /// of such a matrix has rank equal to the number of cells it holds.
    pub fn of_placements(n: usize, cells: &[(usize, usize)]) -> RankTable {
        let mut data = vec![0u32; n * (n + 1)];
        for i in 1..=n {
            for j in 0..=n {
                let inside = cells.iter().filter(|&&(r, c)| r > j && c <= i).count();
                data[(i - 1) * (n + 1) + j] = (j + inside) as u32;
            }
        }
        RankTable { n, data }
    }
}

impl fmt::Debug for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f)?;
        for i in 1..=self.n {
            let row: Vec<String> = (0..=self.n).map(|j| format!("{:2}", self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Primitive integer basis of the rational nullspace of the system
/// rows * v = 0 in `ncols` unknowns. Deterministic: one vector per free
/// column, ascending, leading nonzero entry positive.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .filter(|r| r.iter().any(|&v| v != 0))
        .map(|r| r.iter().map(|&v| Q::from_integer(v as i128)).collect())
        .collect();
    let nr = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col];
        for c in col..ncols {
            m[row][c] /= inv;
        }
        for r in 0..nr {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..ncols {
                    let t = m[row][c] * f;
                    m[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nr {
            break;
        }
    }
    let mut basis = Vec::new();
    let pivot_is: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in (0..ncols).filter(|c| !pivot_is.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::from_integer(1);
        for (pr, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[pr][free];
        }
        basis.push(clear_denominators(&v));
    }
    basis
}

fn clear_denominators(v: &[Q]) -> Vec<i64> {
    let mut l: i128 = 1;
    for q in v {
        l = l.lcm(q.denom());
    }
    let mut out: Vec<i128> = v.iter().map(|q| q.numer() * (l / q.denom())).collect();
    let mut g: i128 = 0;
    for &x in &out {
        g = g.gcd(&x);
    }
    if g > 1 {
        for x in &mut out {
            *x /= g;
        }
    }
    if let Some(first) = out.iter().find(|&&x| x != 0) {
        if first.is_negative() {
            for x in &mut out {
                *x = -*x;
            }
        }
    }
    out.into_iter().map(|x| i64::try_from(x).expect("nullspace entry fits i64")).collect()
}

/// The matrix Lie algebras whose nilpotent elements we classify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algebra {
    /// Traceless n x n matrices.
    SpecialLinear,
    /// x^T = K x K for the antisymmetric form K; even size.
    Symplectic,
    /// x^T = -J x J for the antidiagonal symmetric form J.
    Orthogonal,
}

impl Algebra {
    pub fn member(self, x: &IntMat) -> Result<()> {
        let n = x.size();
        match self {
            Algebra::SpecialLinear => {
                if x.trace() != 0 {
                    return Err(Error::NotInAlgebra(format!("trace is {}", x.trace())));
                }
            }
            Algebra::Symplectic => {
                if n % 2 != 0 {
                    return Err(Error::NotInAlgebra("symplectic algebra needs even size".into()));
                }
                let k = IntMat::symplectic_form(n);
                if x.transpose() != &(&k * x) * &k {
                    return Err(Error::NotInAlgebra(
                        "transpose does not match the symplectic relation".into(),
                    ));
                }
            }
            Algebra::Orthogonal => {
                let j = IntMat::antidiag(n);
                if x.transpose() != (&(&j * x) * &j).scaled(-1) {
                    return Err(Error::NotInAlgebra(
                        "transpose does not match the orthogonal relation".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Linear constraints on the n^2 entries cutting out the algebra.
    fn relation_rows(self, n: usize) -> Vec<Vec<i64>> {
        let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
        match self {
            Algebra::SpecialLinear => {
                let mut row = vec![0i64; n * n];
                for a in 1..=n {
                    row[idx(a, a)] = 1;
                }
                vec![row]
            }
            Algebra::Symplectic | Algebra::Orthogonal => {
                let (f, sign) = match self {
                    Algebra::Symplectic => (IntMat::symplectic_form(n), 1),
                    _ => (IntMat::antidiag(n), -1),
                };
                // x_{ji} - sign * (F x F)_{ij} = 0 for all (i, j).
                let mut rows = Vec::with_capacity(n * n);
                for i in 1..=n {
                    for j in 1..=n {
                        let mut row = vec![0i64; n * n];
                        row[idx(j, i)] += 1;
                        for a in 1..=n {
                            let fa = f.get(i, a);
                            if fa == 0 {
                                continue;
                            }
                            for b in 1..=n {
                                let fb = f.get(b, j);
                                if fb != 0 {
                                    row[idx(a, b)] -= sign * fa * fb;
                                }
                            }
                        }
                        rows.push(row);
                    }
                }
                rows
            }
        }
    }
}

/// Dimension oracle for Borel and minimal-parabolic orbits of a nilpotent
/// element, computed as the rank of the bracket map z -> [z, x] on an
/// exact basis of the subalgebra.
pub struct OrbitDimOracle {
    algebra: Algebra,
    n: usize,
    borel: Vec<IntMat>,
    parabolic_cache: Mutex<HashMap<Vec<(usize, usize)>, Vec<IntMat>>>,
}

impl OrbitDimOracle {
    pub fn new(algebra: Algebra, n: usize) -> Self {
        if algebra == Algebra::Symplectic {
            assert!(n % 2 == 0);
        }
        let borel = subalgebra_basis(algebra, n, &[]);
        OrbitDimOracle { algebra, n, borel, parabolic_cache: Mutex::new(HashMap::new()) }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn borel_dim(&self) -> usize {
        self.borel.len()
    }

    pub fn borel_orbit_dim(&self, x: &IntMat) -> Result<usize> {
        self.algebra.member(x)?;
        Ok(bracket_rank(&self.borel, x))
    }

    /// Orbit dimension under the minimal parabolic obtained by adjoining
    /// the negative root space at the given lower-triangular positions.
    pub fn parabolic_orbit_dim(&self, x: &IntMat, relax: &[(usize, usize)]) -> Result<usize> {
        self.algebra.member(x)?;
        let key: Vec<(usize, usize)> = relax.to_vec();
        let mut cache = self.parabolic_cache.lock().unwrap();
        let basis = cache.entry(key).or_insert_with(|| {
            let b = subalgebra_basis(self.algebra, self.n, relax);
            assert_eq!(
                b.len(),
                self.borel.len() + 1,
                "a minimal parabolic must extend the Borel subalgebra by exactly one dimension"
            );
            b
        });
        Ok(bracket_rank(basis, x))
    }
}

/// Basis of the upper-triangular part of the algebra, with the listed
/// strictly-lower positions allowed to be nonzero as well.
fn subalgebra_basis(algebra: Algebra, n: usize, relax: &[(usize, usize)]) -> Vec<IntMat> {
    let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
    let mut rows = algebra.relation_rows(n);
    for i in 1..=n {
        for j in 1..=n {
            if i > j && !relax.contains(&(i, j)) {
                let mut row = vec![0i64; n * n];
                row[idx(i, j)] = 1;
                rows.push(row);
            }
        }
    }
    nullspace(&rows, n * n)
        .into_iter()
        .map(|flat| {
            let mut m = IntMat::zeros(n);
            for a in 1..=n {
                for b in 1..=n {
                    m.set(a, b, flat[idx(a, b)]);
                }
            }
            m
        })
        .collect()
}

/// Basis of the whole algebra as integer matrices.
pub fn algebra_basis(algebra: Algebra, n: usize) -> Vec<IntMat> {
    let idx = |a: usize, b: usize| (a - 1) * n + (b - 1);
    nullspace(&algebra.relation_rows(n), n * n)
        .into_iter()
        .map(|flat| {
            let mut m = IntMat::zeros(n);
            for a in 1..=n {
                for b in 1..=n {
                    m.set(a, b, flat[idx(a, b)]);
                }
            }
            m
        })
        .collect()
}

fn bracket_rank(basis: &[IntMat], x: &IntMat) -> usize {
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.bracket(x).flatten()).collect();
    // Brackets with a sparse x touch few positions; dropping the zero
    // columns shrinks the elimination without changing the rank.
    let nc = rows.first().map_or(0, |r| r.len());
    let live: Vec<usize> = (0..nc).filter(|&c| rows.iter().any(|r| r[c] != 0)).collect();
    let compact: Vec<Vec<i64>> =
        rows.iter().map(|r| live.iter().map(|&c| r[c]).collect()).collect();
    rank_rows(&compact)
}
