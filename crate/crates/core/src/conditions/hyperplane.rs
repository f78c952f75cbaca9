use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::chars::CharacterTable;
use crate::exact::{int, Rational};
use crate::group::REFLECTION_LABELS;
use crate::reflections::ReflectionParameter;

use super::{ConditionContext, ConditionError};

/// Upper bound on zero-dimensional leaves, from `dim HP0 = 10`.
pub const ZERO_DIM_LEAF_BOUND: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HyperplaneLabel {
    /// `sum_s chi(s) c(s) = 0` for the linear character with this table row.
    LinearCharacter(usize),
    /// `c(R_i) = 0`, by slot `0..5`.
    Coordinate(usize),
}

impl fmt::Display for HyperplaneLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LinearCharacter(k) => write!(f, "LinearCharacter({k})"),
            Self::Coordinate(slot) => write!(f, "Coordinate({})", REFLECTION_LABELS[*slot]),
        }
    }
}

impl Serialize for HyperplaneLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hyperplane {
    /// Primitive integer normal with positive first nonzero entry.
    pub normal: [i64; 5],
    pub label: HyperplaneLabel,
}

impl Hyperplane {
    pub fn evaluate(&self, c: &ReflectionParameter) -> Rational {
        self.normal
            .iter()
            .zip(&c.c)
            .fold(Rational::zero(), |acc, (&n, x)| acc + int(n) * x)
    }

    pub fn is_coordinate(&self) -> bool {
        matches!(self.label, HyperplaneLabel::Coordinate(_))
    }
}

/// Divides by the gcd and flips the sign so the first nonzero entry is
/// positive. Panics on the zero vector.
pub fn primitive_normal(v: [i64; 5]) -> [i64; 5] {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    assert!(g != 0, "zero normal vector");
    let first = *v.iter().find(|&&x| x != 0).unwrap();
    let sign = first.signum();
    v.map(|x| sign * x / g)
}

/// Sixteen normals from the linear characters, then the five coordinate
/// hyperplanes.
pub fn hyperplane_set(
    table: &CharacterTable,
    ctx: &ConditionContext,
) -> Result<Vec<Hyperplane>, ConditionError> {
    let mut planes = Vec::with_capacity(21);
    for (k, chi) in table.linear_rows().iter().enumerate() {
        let values = ctx.reflection_values(chi);
        if ctx.minus_identity_value(chi) != 1 || values.iter().product::<i64>() != 1 {
            return Err(ConditionError::SideConditionViolated(k));
        }
        planes.push(Hyperplane {
            normal: primitive_normal(values),
            label: HyperplaneLabel::LinearCharacter(k),
        });
    }
    for slot in 0..5 {
        let mut normal = [0; 5];
        normal[slot] = 1;
        planes.push(Hyperplane {
            normal,
            label: HyperplaneLabel::Coordinate(slot),
        });
    }
    for (a, p) in planes.iter().enumerate() {
        if let Some(q) = planes[a + 1..].iter().find(|q| q.normal == p.normal) {
            return Err(ConditionError::HyperplaneCollision(
                p.label.to_string(),
                q.label.to_string(),
            ));
        }
    }
    Ok(planes)
}

/// `kernel ⊆ plane`: the normal is orthogonal to every basis vector. The
/// zero kernel lies in every hyperplane.
pub fn contains(kernel: &[Vec<Rational>], plane: &Hyperplane) -> bool {
    kernel.iter().all(|v| {
        v.iter()
            .zip(&plane.normal)
            .fold(Rational::zero(), |acc, (x, &n)| acc + x * int(n))
            .is_zero()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Smooth,
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub verdict: Verdict,
    pub hyperplanes_hit: Vec<HyperplaneLabel>,
    pub two_dim_leaves: usize,
    pub zero_dim_leaf_bound: usize,
}

pub fn smoothness(c: &ReflectionParameter, hyperplanes: &[Hyperplane]) -> SmoothnessReport {
    let hit: Vec<&Hyperplane> = hyperplanes
        .iter()
        .filter(|h| h.evaluate(c).is_zero())
        .collect();
    SmoothnessReport {
        verdict: if hit.is_empty() {
            Verdict::Smooth
        } else {
            Verdict::Singular
        },
        two_dim_leaves: hit.iter().filter(|h| h.is_coordinate()).count(),
        hyperplanes_hit: hit.iter().map(|h| h.label).collect(),
        zero_dim_leaf_bound: ZERO_DIM_LEAF_BOUND,
    }
}
