//! Zeroth Poisson homology `HP0(C[V]^G) = C[V]^G / {C[V]^G, C[V]^G}`,
//! computed degree by degree up to a cutoff, with the Molien series as an
//! independent check on the invariant dimensions.

mod bracket;
mod invariants;
mod molien;
mod poly;
mod sparse;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{GaussianRational, MatrixGQ};
use crate::group::FiniteMatrixGroup;

pub use bracket::{poisson_bracket, PoissonStructure};
pub use invariants::{act, invariant_basis, is_invariant, reynolds, reynolds_basis};
pub use molien::{molien_dims, reversed_char_poly};
pub use poly::{monomials_of_degree, Monomial, Poly, MAX_VARS};
pub use sparse::{SparseEchelon, SparseRank};

/// Default degree cutoff for the truncated computation.
pub const DEFAULT_MAX_DEGREE: usize = 24;
/// Trailing all-zero degrees required to call the truncation stable.
pub const STABLE_TAIL: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Hp0Error {
    #[error("Molien coefficient in degree {degree} is not a nonnegative integer")]
    NonIntegerMolien { degree: usize },
    #[error(
        "degree {degree}: Molien series predicts {molien} invariants, Reynolds gives {reynolds}"
    )]
    MolienMismatch {
        degree: usize,
        molien: u64,
        reynolds: u64,
    },
    #[error("degree {degree}: brackets span more than the invariants")]
    BracketOutsideInvariants { degree: usize },
    #[error("det(g - Id) vanishes on part of class {representative} only")]
    ClassDependentDeterminant { representative: usize },
    #[error("cutoff must be at least 2, got {0}")]
    CutoffTooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeDims {
    pub degree: usize,
    pub invariant_dim: usize,
    pub bracket_span_dim: usize,
    pub hp0_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub per_degree: Vec<DegreeDims>,
    pub cumulative_hp0: usize,
    pub cutoff: usize,
    /// Whether the last [`STABLE_TAIL`] degrees all have `hp0_dim = 0`.
    pub stabilized: bool,
}

/// Rank of `{f, g}` over invariant basis pairs with `deg f + deg g = d + 2`.
fn bracket_span_dim(bases: &[Vec<Poly>], d: usize, pi: &PoissonStructure) -> usize {
    const BATCH: usize = 128;
    let mut pairs = Vec::new();
    for a in 1..=(d + 2) / 2 {
        let b = d + 2 - a;
        for i in 0..bases[a].len() {
            let start = if a == b { i + 1 } else { 0 };
            for j in start..bases[b].len() {
                pairs.push((a, i, b, j));
            }
        }
    }
    let mut rank = SparseRank::new();
    for chunk in pairs.chunks(BATCH) {
        let brackets: Vec<Poly> = chunk
            .par_iter()
            .map(|&(a, i, b, j)| pi.bracket(&bases[a][i], &bases[b][j]))
            .collect();
        for br in brackets.iter().filter(|p| !p.is_zero()) {
            rank.insert(br);
        }
    }
    rank.rank()
}

/// Graded dimensions of `HP0` in degrees `0..=max_d`, using `workers`
/// threads for Reynolds averaging and bracket generation.
pub fn hp0_graded_dims(
    group: &FiniteMatrixGroup,
    omega: &MatrixGQ,
    max_d: usize,
    workers: usize,
) -> Result<GradedDims, Hp0Error> {
    if max_d < 2 {
        return Err(Hp0Error::CutoffTooSmall(max_d));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let pi = PoissonStructure::from_form(omega);
        let molien = molien_dims(group, max_d + 1)?;
        let bases: Vec<Vec<Poly>> = (0..=max_d + 1)
            .into_par_iter()
            .map(|d| {
                let basis = reynolds_basis(group, d);
                if basis.len() as u64 != molien[d] {
                    return Err(Hp0Error::MolienMismatch {
                        degree: d,
                        molien: molien[d],
                        reynolds: basis.len() as u64,
                    });
                }
                Ok(basis)
            })
            .collect::<Result<_, _>>()?;
        let per_degree: Vec<DegreeDims> = (0..=max_d)
            .into_par_iter()
            .map(|d| {
                let invariant_dim = bases[d].len();
                let bracket_span_dim = bracket_span_dim(&bases, d, &pi);
                if bracket_span_dim > invariant_dim {
                    return Err(Hp0Error::BracketOutsideInvariants { degree: d });
                }
                Ok(DegreeDims {
                    degree: d,
                    invariant_dim,
                    bracket_span_dim,
                    hp0_dim: invariant_dim - bracket_span_dim,
                })
            })
            .collect::<Result<_, _>>()?;
        let cumulative_hp0 = per_degree.iter().map(|d| d.hp0_dim).sum();
        let stabilized = per_degree.len() >= STABLE_TAIL
            && per_degree[per_degree.len() - STABLE_TAIL..]
                .iter()
                .all(|d| d.hp0_dim == 0);
        Ok(GradedDims {
            per_degree,
            cumulative_hp0,
            cutoff: max_d,
            stabilized,
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvertibleCensus {
    /// Classes (by representative) with `det(g - Id) != 0`.
    pub representatives: Vec<usize>,
    pub count: usize,
}

/// Number of conjugacy classes on which `g - Id` is invertible, with the
/// test evaluated on every member of every class.
pub fn invertible_class_count(group: &FiniteMatrixGroup) -> Result<InvertibleCensus, Hp0Error> {
    let identity = MatrixGQ::identity(group.dimension());
    let invertible = |g: usize| -> bool {
        let det: GaussianRational = (group.matrix(g) - &identity).determinant();
        !det.is_zero()
    };
    let mut representatives = Vec::new();
    for class in group.conjugacy_classes() {
        let flags: Vec<bool> = class.members.iter().map(|&m| invertible(m)).collect();
        if flags.iter().any(|&f| f != flags[0]) {
            return Err(Hp0Error::ClassDependentDeterminant {
                representative: class.representative,
            });
        }
        if flags[0] {
            representatives.push(class.representative);
        }
    }
    Ok(InvertibleCensus {
        count: representatives.len(),
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_paper_group, close_group, omega2};

    #[test]
    fn kleinian_a1_has_one_dimensional_hp0() {
        let z2 = close_group(&[-&MatrixGQ::identity(2)], 10).unwrap();
        let dims = hp0_graded_dims(&z2, &omega2(), 8, 2).unwrap();
        assert_eq!(dims.cumulative_hp0, 1);
        assert_eq!(dims.per_degree[0].hp0_dim, 1);
        assert!(dims.stabilized);
        assert_eq!(invertible_class_count(&z2).unwrap().count, 1);
    }

    #[test]
    fn low_degrees_of_g() {
        let pg = build_paper_group();
        let dims = hp0_graded_dims(&pg.group, &pg.omega, 6, 2).unwrap();
        assert_eq!(dims.per_degree[0].hp0_dim, 1);
        assert_eq!(dims.per_degree[1].hp0_dim, 0);
    }

    #[test]
    fn cutoff_below_two_is_rejected() {
        let pg = build_paper_group();
        assert_eq!(
            hp0_graded_dims(&pg.group, &pg.omega, 1, 1).unwrap_err(),
            Hp0Error::CutoffTooSmall(1)
        );
    }

    #[test]
    fn census_of_g() {
        let pg = build_paper_group();
        let census = invertible_class_count(&pg.group).unwrap();
        assert!(census.representatives.contains(&pg.minus_identity()));
        assert!(!census.representatives.contains(&pg.group.identity()));
    }
}
