//! Root systems of the classical and exceptional types that occur here,
//! with exact inner products. Roots are integer coefficient vectors over
//! the simple roots; long roots are normalised to squared length 2.
//!
//! Numbering: A/B/C are the usual chains with the short root last in B
//! and the long root last in C. D forks at node n-2. E6/E7 attach node 2
//! to node 4 of the chain 1-3-4-5-6(-7). F4 is numbered with the two
//! short simple roots first, so the highest root is 2a1+4a2+3a3+2a4.
//! G2 has the short simple root first.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

type Q = Ratio<i64>;

/// A root written in the basis of simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|&c| -c).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&c| c > 0) && self.0.iter().all(|&c| c >= 0)
    }

    /// Coefficientwise order: self <= other.
    pub fn leq(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = |cs: &[i64]| cs.iter().map(|c| c.to_string()).collect::<String>();
        if self.0.iter().all(|&c| (0..=9).contains(&c)) {
            write!(f, "({})", digits(&self.0))
        } else if self.0.iter().all(|&c| (-9..=0).contains(&c)) {
            let abs: Vec<i64> = self.0.iter().map(|c| -c).collect();
            write!(f, "-({})", digits(&abs))
        } else {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        write!(f, "{s}")
    }
}

/// Parse a type name such as "A5", "D4", "G2", "E7".
pub fn parse_type(s: &str) -> Result<(Series, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(|| Error::Parse("empty type name".into()))?;
    let series = match letter.to_ascii_uppercase() {
        'A' => Series::A,
        'B' => Series::B,
        'C' => Series::C,
        'D' => Series::D,
        'E' => Series::E,
        'F' => Series::F,
        'G' => Series::G,
        other => return Err(Error::Parse(format!("unknown series letter '{other}'"))),
    };
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in type name '{s}'")))?;
    Ok((series, rank))
}

pub struct RootSystem {
    series: Series,
    rank: usize,
    /// cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j), 0-based.
    cartan: Vec<Vec<i64>>,
    /// d[i] = (a_i, a_i) / 2.
    d: Vec<Q>,
    roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let (cartan, d) = cartan_data(series, rank)?;
        for i in 0..rank {
            for j in 0..rank {
                // (a_i, a_j) must be symmetric.
                assert_eq!(d[j] * cartan[i][j], d[i] * cartan[j][i]);
            }
        }
        let mut rs = RootSystem { series, rank, cartan, d, roots: Vec::new() };
        rs.roots = rs.generate_roots();
        Ok(rs)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn type_name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    /// 1-based Cartan pairing <a_i, a_j^vee>.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// 1-based simple root.
    pub fn simple(&self, j: usize) -> Root {
        let mut c = vec![0i64; self.rank];
        c[j - 1] = 1;
        Root(c)
    }

    /// <rho, a_j^vee> for 1-based j; always an integer.
    pub fn pairing_with_simple(&self, rho: &Root, j: usize) -> i64 {
        rho.0.iter().enumerate().map(|(i, &c)| c * self.cartan[i][j - 1]).sum()
    }

    /// Simple reflection s_j applied to rho.
    pub fn reflect_simple(&self, rho: &Root, j: usize) -> Root {
        let p = self.pairing_with_simple(rho, j);
        let mut out = rho.clone();
        out.0[j - 1] -= p;
        out
    }

    pub fn inner(&self, a: &Root, b: &Root) -> Q {
        let mut acc = Q::from_integer(0);
        for (i, &ca) in a.0.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.0.iter().enumerate() {
                if cb != 0 {
                    acc += Q::from_integer(ca * cb) * self.d[j] * self.cartan[i][j];
                }
            }
        }
        acc
    }

    pub fn norm2(&self, a: &Root) -> Q {
        self.inner(a, a)
    }

    pub fn is_long(&self, a: &Root) -> bool {
        self.norm2(a) == Q::from_integer(2)
    }

    fn generate_roots(&self) -> Vec<Root> {
        let mut seen: BTreeSet<Root> = (1..=self.rank).map(|j| self.simple(j)).collect();
        let mut queue: Vec<Root> = seen.iter().cloned().collect();
        while let Some(r) = queue.pop() {
            for j in 1..=self.rank {
                let s = self.reflect_simple(&r, j);
                if seen.insert(s.clone()) {
                    queue.push(s);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// All roots, sorted.
    pub fn all_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots.iter().filter(|r| r.is_positive()).cloned().collect()
    }

    pub fn long_roots(&self) -> Vec<Root> {
        self.roots.iter().filter(|r| self.is_long(r)).cloned().collect()
    }

    pub fn is_root(&self, a: &Root) -> bool {
        self.roots.binary_search(a).is_ok()
    }

    /// The highest root: dominates every positive root coefficientwise.
    pub fn highest_root(&self) -> Root {
        let pos = self.positive_roots();
        let top = pos.iter().max_by_key(|r| r.height()).expect("nonempty root system").clone();
        for r in &pos {
            assert!(r.leq(&top), "root order must have a unique maximum");
        }
        top
    }
}

fn cartan_data(series: Series, rank: usize) -> Result<(Vec<Vec<i64>>, Vec<Q>)> {
    let n = rank;
    let chain = |n: usize| {
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    let q = |num: i64, den: i64| Q::new(num, den);
    match series {
        Series::A => {
            if n < 1 {
                return Err(Error::Unsupported("A needs rank >= 1".into()));
            }
            Ok((chain(n), vec![q(1, 1); n]))
        }
        Series::B => {
            if n < 2 {
                return Err(Error::Unsupported("B needs rank >= 2".into()));
            }
            let mut c = chain(n);
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
            let mut d = vec![q(1, 1); n];
            d[n - 1] = q(1, 2);
            Ok((c, d))
        }
        Series::C => {
            if n < 2 {
                return Err(Error::Unsupported("C needs rank >= 2".into()));
            }
            let mut c = chain(n);
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
            let mut d = vec![q(1, 2); n];
            d[n - 1] = q(1, 1);
            Ok((c, d))
        }
        Series::D => {
            if n < 3 {
                return Err(Error::Unsupported("D needs rank >= 3".into()));
            }
            let mut c = chain(n - 1);
            for row in &mut c {
                row.push(0);
            }
            c.push(vec![0; n]);
            c[n - 1][n - 1] = 2;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            Ok((c, vec![q(1, 1); n]))
        }
        Series::E => {
            if n != 6 && n != 7 {
                return Err(Error::Unsupported("E supports ranks 6 and 7 here".into()));
            }
            // Chain 1-3-4-5-6(-7) with node 2 attached to node 4.
            let mut c = vec![vec![0i64; n]; n];
            for i in 0..n {
                c[i][i] = 2;
            }
            let mut edges: Vec<(usize, usize)> = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n == 7 {
                edges.push((6, 7));
            }
            for (a, b) in edges {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            }
            Ok((c, vec![q(1, 1); n]))
        }
        Series::F => {
            if n != 4 {
                return Err(Error::Unsupported("F has rank 4".into()));
            }
            // Short simple roots first: a1, a2 short; a3, a4 long.
            let mut c = chain(4);
            c[1][2] = -1;
            c[2][1] = -2;
            let d = vec![q(1, 2), q(1, 2), q(1, 1), q(1, 1)];
            Ok((c, d))
        }
        Series::G => {
            if n != 2 {
                return Err(Error::Unsupported("G has rank 2".into()));
            }
            // a1 short, a2 long.
            let c = vec![vec![2, -1], vec![-3, 2]];
            let d = vec![q(1, 3), q(1, 1)];
            Ok((c, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(series: Series, rank: usize) -> RootSystem {
        RootSystem::new(series, rank).unwrap()
    }

    #[test]
    fn root_counts() {
        for n in 1..=7 {
            assert_eq!(rs(Series::A, n).all_roots().len(), n * (n + 1));
        }
        for n in 2..=6 {
            assert_eq!(rs(Series::B, n).all_roots().len(), 2 * n * n);
            assert_eq!(rs(Series::C, n).all_roots().len(), 2 * n * n);
        }
        for n in 3..=6 {
            assert_eq!(rs(Series::D, n).all_roots().len(), 2 * n * (n - 1));
        }
        assert_eq!(rs(Series::G, 2).all_roots().len(), 12);
        assert_eq!(rs(Series::F, 4).all_roots().len(), 48);
        assert_eq!(rs(Series::E, 6).all_roots().len(), 72);
        assert_eq!(rs(Series::E, 7).all_roots().len(), 126);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(Series::A, 3).highest_root(), Root(vec![1, 1, 1]));
        assert_eq!(rs(Series::G, 2).highest_root(), Root(vec![3, 2]));
        assert_eq!(rs(Series::F, 4).highest_root(), Root(vec![2, 4, 3, 2]));
        assert_eq!(rs(Series::E, 7).highest_root(), Root(vec![2, 2, 3, 4, 3, 2, 1]));
        assert_eq!(rs(Series::C, 3).highest_root(), Root(vec![2, 2, 1]));
        assert_eq!(rs(Series::B, 3).highest_root(), Root(vec![1, 2, 2]));
        assert_eq!(rs(Series::D, 4).highest_root(), Root(vec![1, 2, 1, 1]));
    }

    #[test]
    fn long_root_counts() {
        // In the simply laced types every root is long.
        assert_eq!(rs(Series::A, 4).long_roots().len(), 20);
        assert_eq!(rs(Series::E, 7).long_roots().len(), 126);
        assert_eq!(rs(Series::G, 2).long_roots().len(), 6);
        assert_eq!(rs(Series::F, 4).long_roots().len(), 24);
        // B_n: long roots are +-e_i +- e_j.
        assert_eq!(rs(Series::B, 3).long_roots().len(), 2 * 3 * 2);
        // C_n: long roots are +-2e_i.
        assert_eq!(rs(Series::C, 3).long_roots().len(), 6);
    }

    #[test]
    fn g2_positive_roots_are_the_classical_six() {
        let g = rs(Series::G, 2);
        let pos: Vec<Root> = g.positive_roots();
        let expect = [
            Root(vec![0, 1]),
            Root(vec![1, 0]),
            Root(vec![1, 1]),
            Root(vec![2, 1]),
            Root(vec![3, 1]),
            Root(vec![3, 2]),
        ];
        assert_eq!(pos, expect);
        let long: Vec<&Root> = pos.iter().filter(|r| g.is_long(r)).collect();
        assert_eq!(long, [&Root(vec![0, 1]), &Root(vec![3, 1]), &Root(vec![3, 2])]);
    }

    #[test]
    fn f4_positive_long_roots() {
        let f = rs(Series::F, 4);
        let long: Vec<String> =
            f.positive_roots().iter().filter(|r| f.is_long(r)).map(|r| r.to_string()).collect();
        let expect = [
            "(0010)", "(0011)", "(0210)", "(0211)", "(0221)", "(2210)", "(2211)", "(2221)",
            "(2421)", "(2431)", "(2432)",
        ];
        // 12 positive long roots; the sorted coefficient list is frozen.
        assert_eq!(long.len(), 12);
        for e in expect {
            assert!(long.contains(&e.to_string()), "missing {e}");
        }
        assert!(long.contains(&"(0001)".to_string()));
    }

    #[test]
    fn reflections_are_involutions_with_integral_pairings() {
        for (s, n) in [(Series::B, 3), (Series::F, 4), (Series::G, 2), (Series::E, 6)] {
            let r = rs(s, n);
            for rho in r.all_roots() {
                for j in 1..=n {
                    let once = r.reflect_simple(rho, j);
                    assert!(r.is_root(&once));
                    assert_eq!(&r.reflect_simple(&once, j), rho);
                }
            }
        }
    }

    #[test]
    fn inner_products_are_symmetric_and_normalised() {
        for (s, n) in [(Series::B, 4), (Series::C, 4), (Series::F, 4), (Series::G, 2)] {
            let r = rs(s, n);
            for a in r.all_roots() {
                assert!(r.norm2(a) > Q::from_integer(0));
                for b in r.all_roots() {
                    assert_eq!(r.inner(a, b), r.inner(b, a));
                }
            }
            let top = r.highest_root();
            assert!(r.is_long(&top));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Root(vec![2, 4, 3, 1]).to_string(), "(2431)");
        assert_eq!(Root(vec![-1, -2]).to_string(), "-(12)");
        assert_eq!(Root(vec![11, 0]).to_string(), "(11,0)");
    }

    #[test]
    fn parse_type_names() {
        assert_eq!(parse_type("A5").unwrap(), (Series::A, 5));
        assert_eq!(parse_type("g2").unwrap(), (Series::G, 2));
        assert!(parse_type("H3").is_err());
        assert!(parse_type("B").is_err());
    }
}
