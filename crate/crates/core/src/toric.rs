//! Rational cone diagnostics and the torus parametrization of the rank-one
//! degeneracy variety.
//!
//! The cone side answers one question: do the primitive ray generators lie on
//! a common affine hyperplane `{x : λ(x) = 1}`?  For the cones handled here
//! that is the Gorenstein criterion; the check works from ray generators only
//! and never computes a Hilbert basis, so on cones with non-simplicial
//! singularities it tests the necessary ray condition rather than the full
//! property.  Either way the answer ships with an exact certificate: the
//! functional itself, or an integer combination of the rays that sums to zero
//! with nonzero coefficient sum (which no affine hyperplane can accommodate).

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat::rank_rows;

type Q = Ratio<i64>;
type Q128 = Ratio<i128>;

/// Polyhedral cone recorded by its ray generators.
///
/// Generators are stored primitivized: each ray is divided by the gcd of its
/// entries, so scaling a generator by a positive integer yields the same cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatCone {
    rays: Vec<Vec<i64>>,
}

impl RatCone {
    /// Builds a cone from integer ray generators.
    ///
    /// Rejects an empty generator list, a zero generator, and generators of
    /// mixed ambient dimension.
    pub fn new(rays: Vec<Vec<i64>>) -> Result<Self> {
        let ambient = match rays.first() {
            Some(first) if !first.is_empty() => first.len(),
            _ => {
                return Err(Error::DegenerateCone(
                    "a cone needs at least one nonzero generator".into(),
                ))
            }
        };
        let rays = rays
            .into_iter()
            .map(|ray| {
                if ray.len() != ambient {
                    return Err(Error::DegenerateCone(format!(
                        "generator {ray:?} has dimension {}, expected {ambient}",
                        ray.len()
                    )));
                }
                let g = ray.iter().fold(0i64, |acc, &v| acc.gcd(&v));
                if g == 0 {
                    return Err(Error::DegenerateCone("zero generator".into()));
                }
                Ok(ray.into_iter().map(|v| v / g).collect())
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        Ok(RatCone { rays })
    }

    /// Primitive ray generators, in input order.
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn ambient_dim(&self) -> usize {
        self.rays[0].len()
    }

    /// Dimension of the linear span of the generators.
    pub fn dim(&self) -> usize {
        rank_rows(&self.rays)
    }

    /// Decides whether some rational functional evaluates to 1 on every ray
    /// generator, and certifies the answer either way.
    pub fn gorenstein_check(&self) -> GorensteinReport {
        // Feasibility of V·λ = 1 (rows of V the rays).  The system is
        // infeasible exactly when the left kernel of V contains a vector with
        // nonzero coordinate sum: such a c pairs to 0 with V·λ but to Σc ≠ 0
        // with the right-hand side.
        let ambient = self.ambient_dim();
        let coords: Vec<Vec<i64>> = (0..ambient)
            .map(|k| self.rays.iter().map(|ray| ray[k]).collect())
            .collect();
        for c in nullspace_vectors(&coords, self.rays.len()) {
            let sum: i64 = c.iter().sum();
            if sum != 0 {
                let c = if sum < 0 { c.iter().map(|v| -v).collect() } else { c };
                return GorensteinReport {
                    gorenstein: false,
                    witness: GorensteinWitness::AffineDependency(c),
                };
            }
        }
        let lambda = self
            .solve_for_functional()
            .expect("kernel test promised feasibility");
        let denom = lambda
            .iter()
            .fold(1i64, |acc, q| acc.lcm(q.denom()));
        let coeffs: Vec<i64> = lambda
            .iter()
            .map(|q| q.numer() * (denom / q.denom()))
            .collect();
        GorensteinReport {
            gorenstein: true,
            witness: GorensteinWitness::Functional { coeffs, denom },
        }
    }

    /// Solves V·λ = 1 by rational elimination; free coordinates are set to 0.
    fn solve_for_functional(&self) -> Option<Vec<Q>> {
        let ambient = self.ambient_dim();
        let mut m: Vec<Vec<Q>> = self
            .rays
            .iter()
            .map(|ray| {
                ray.iter()
                    .map(|&v| Q::from_integer(v))
                    .chain(std::iter::once(Q::one()))
                    .collect()
            })
            .collect();
        let mut pivot_col_of_row = Vec::new();
        let mut next_row = 0;
        for col in 0..ambient {
            let Some(p) = (next_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(next_row, p);
            let inv = m[next_row][col].recip();
            for v in m[next_row].iter_mut() {
                *v *= inv;
            }
            for r in 0..m.len() {
                if r != next_row && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in 0..=ambient {
                        let delta = f * m[next_row][c];
                        m[r][c] -= delta;
                    }
                }
            }
            pivot_col_of_row.push(col);
            next_row += 1;
        }
        if m[next_row..].iter().any(|row| !row[ambient].is_zero()) {
            return None;
        }
        let mut lambda = vec![Q::zero(); ambient];
        for (row, &col) in pivot_col_of_row.iter().enumerate() {
            lambda[col] = m[row][ambient];
        }
        // Defensive re-check of the claimed functional.
        for ray in &self.rays {
            let val: Q = ray
                .iter()
                .zip(&lambda)
                .map(|(&v, l)| Q::from_integer(v) * l)
                .sum();
            assert!(val.is_one(), "eliminated system lost a constraint");
        }
        Some(lambda)
    }
}

/// Primitive integer basis of the common kernel of the given row functionals.
fn nullspace_vectors(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    crate::mat::nullspace(rows, ncols)
}

/// Outcome of [`RatCone::gorenstein_check`], with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    pub witness: GorensteinWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GorensteinWitness {
    /// Functional with the given integer coefficients over a common positive
    /// denominator; it evaluates to 1 on every primitive ray generator.
    Functional { coeffs: Vec<i64>, denom: i64 },
    /// Integer combination of the generators equal to zero whose coefficient
    /// sum is nonzero, normalized to positive sum.  No functional can be 1 on
    /// all generators at once.
    AffineDependency(Vec<i64>),
}

/// Point of the parametrized surface: a traceless rank-one square-zero
/// 2×2 matrix together with a kernel vector, both rational.
pub struct TorusPoint {
    pub a: [[Q128; 2]; 2],
    pub v: [Q128; 2],
}

/// Evaluates the torus parametrization at exact rational parameters.
///
/// All three parameters must be nonzero (they index a torus).
pub fn torus_point(t1: Q128, t2: Q128, t3: Q128) -> Result<TorusPoint> {
    if t1.is_zero() || t2.is_zero() || t3.is_zero() {
        return Err(Error::InvalidInput(
            "torus parameters must be nonzero".into(),
        ));
    }
    let a = [[t1, -t2], [t1 * t1 / t2, -t1]];
    let v = [t3, t1 * t3 / t2];
    Ok(TorusPoint { a, v })
}

/// Pass/fail tally for [`z_variety_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusReport {
    pub passes: usize,
    pub failures: usize,
}

/// Samples the torus parametrization at `samples` exact rational points and
/// counts how many satisfy the defining equations A² = 0 and A·v = 0.
///
/// The sample stream is a fixed arithmetic grid, so runs are reproducible;
/// the identities are polynomial, so exact arithmetic leaves no tolerance.
pub fn z_variety_check(samples: usize) -> Result<TorusReport> {
    if samples == 0 {
        return Err(Error::InvalidInput("need at least one sample".into()));
    }
    let nonzero = |v: i128, fallback: i128| if v == 0 { fallback } else { v };
    let mut passes = 0;
    let mut failures = 0;
    for k in 0..samples as i128 {
        let t1 = Q128::new(nonzero(k % 9 - 4, 5), k % 3 + 1);
        let t2 = Q128::new(nonzero((k / 2) % 7 - 3, 4), k % 2 + 1);
        let t3 = Q128::new(nonzero((k / 3) % 5 - 2, 3), k % 5 + 1);
        let p = torus_point(t1, t2, t3)?;
        if point_on_variety(&p) {
            passes += 1;
        } else {
            failures += 1;
        }
    }
    Ok(TorusReport { passes, failures })
}

fn point_on_variety(p: &TorusPoint) -> bool {
    let a = &p.a;
    let square = [
        [
            a[0][0] * a[0][0] + a[0][1] * a[1][0],
            a[0][0] * a[0][1] + a[0][1] * a[1][1],
        ],
        [
            a[1][0] * a[0][0] + a[1][1] * a[1][0],
            a[1][0] * a[0][1] + a[1][1] * a[1][1],
        ],
    ];
    let av = [
        a[0][0] * p.v[0] + a[0][1] * p.v[1],
        a[1][0] * p.v[0] + a[1][1] * p.v[1],
    ];
    square.iter().flatten().all(|q| q.is_zero()) && av.iter().all(|q| q.is_zero())
}
