//! Trace conditions on the parameter `c` imposed by a `G`-character, the
//! twenty-one hyperplanes of the singular locus, the exhaustive containment
//! check over all subrepresentation characters, and smoothness queries.

mod classify;
mod hyperplane;

use num_traits::Zero;
use serde::Serialize;

use crate::chars::{CharacterTable, ClassFunction};
use crate::exact::{int, MatrixGQ, MatrixQ, Rational};
use crate::group::PaperGroup;
use crate::reflections::{omega_s, ReflectionClassSet, ReflectionError, ReflectionParameter};

pub use classify::{verify_complemma, ClassificationFailure, ClassificationReport};
pub use hyperplane::{
    contains, hyperplane_set, primitive_normal, smoothness, Hyperplane, HyperplaneLabel,
    SmoothnessReport, Verdict, ZERO_DIM_LEAF_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConditionError {
    #[error("hyperplanes {0} and {1} coincide after canonicalization")]
    HyperplaneCollision(String, String),
    #[error("linear character {0} violates chi(-Id) = 1 or prod chi(s_i) = 1")]
    SideConditionViolated(usize),
    #[error(transparent)]
    Reflection(#[from] ReflectionError),
}

pub const ROW_LABELS: [&str; 6] = ["E0", "E_R1", "E_R2", "E_R3", "E_R4", "E_R5"];

/// Class lookups needed to write down the six equations for any character.
#[derive(Debug, Clone)]
pub struct ConditionContext {
    representatives: [usize; 5],
    slot_class: [usize; 5],
    minus_identity_class: usize,
    /// `(class of s_i s_j, class of -s_i s_j)`.
    product_classes: [[(usize, usize); 5]; 5],
}

impl ConditionContext {
    /// Context using the canonical representatives `R1..R5`.
    pub fn new(pg: &PaperGroup, table: &CharacterTable) -> Self {
        Self::with_representatives(pg, table, pg.reflection_reps)
    }

    /// Context using arbitrary representatives, one per reflection class in
    /// label order.
    pub fn with_representatives(
        pg: &PaperGroup,
        table: &CharacterTable,
        representatives: [usize; 5],
    ) -> Self {
        let g = &pg.group;
        let minus_id = pg.minus_identity();
        let class = |e: usize| table.class_of[e];
        let mut product_classes = [[(0, 0); 5]; 5];
        for (i, &si) in representatives.iter().enumerate() {
            for (j, &sj) in representatives.iter().enumerate() {
                let p = g.mul(si, sj);
                product_classes[i][j] = (class(p), class(g.mul(minus_id, p)));
            }
        }
        Self {
            representatives,
            slot_class: representatives.map(class),
            minus_identity_class: class(minus_id),
            product_classes,
        }
    }

    pub fn representatives(&self) -> [usize; 5] {
        self.representatives
    }

    /// `chi(s_j)` for the five reflection classes.
    pub fn reflection_values(&self, chi: &ClassFunction) -> [i64; 5] {
        self.slot_class.map(|k| chi.at(k))
    }

    pub fn minus_identity_value(&self, chi: &ClassFunction) -> i64 {
        chi.at(self.minus_identity_class)
    }

    /// The 6x5 system: `E0` is `sum_s chi(s) c(s) = 0` grouped by class, and
    /// `E_Ri` is `2 chi(-Id) c_i + sum_{s != +-s_i} chi(s_i s) c(s) = 0`.
    pub fn build_system(&self, chi: &ClassFunction) -> TraceConditionSystem {
        let mut rows = [[0i64; 5]; 6];
        rows[0] = self.slot_class.map(|k| 2 * chi.at(k));
        let diagonal = 2 * chi.at(self.minus_identity_class);
        for (i, row) in rows[1..].iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = if i == j {
                    diagonal
                } else {
                    let (plus, minus) = self.product_classes[i][j];
                    chi.at(plus) + chi.at(minus)
                };
            }
        }
        TraceConditionSystem { rows }
    }
}

/// Integer coefficient matrix of the six linear conditions on `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TraceConditionSystem {
    pub rows: [[i64; 5]; 6],
}

impl TraceConditionSystem {
    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|&x| x == 0)
    }

    pub fn to_matrix(&self) -> MatrixQ {
        MatrixQ::from_fn(6, 5, |r, c| int(self.rows[r][c]))
    }
}

/// Canonical kernel basis of the system over the rationals.
pub fn solution_space(system: &TraceConditionSystem) -> Vec<Vec<Rational>> {
    system.to_matrix().kernel_basis()
}

/// The ten forms `omega_s`, tagged with the label slot of their class.
#[derive(Debug, Clone)]
pub struct ReflectionForms {
    forms: Vec<(usize, usize, MatrixGQ)>,
    omega: MatrixGQ,
}

impl ReflectionForms {
    pub fn new(pg: &PaperGroup, classes: &ReflectionClassSet) -> Result<Self, ConditionError> {
        let mut forms = Vec::with_capacity(10);
        for (slot, members) in classes.members.iter().enumerate() {
            for &s in members {
                forms.push((slot, s, omega_s(pg.group.matrix(s), &pg.omega)?));
            }
        }
        Ok(Self {
            forms,
            omega: pg.omega.clone(),
        })
    }

    /// `sum_s c(s) chi(s) omega_s` over all reflections.
    pub fn weighted_sum(
        &self,
        table: &CharacterTable,
        chi: &ClassFunction,
        c: &ReflectionParameter,
    ) -> MatrixGQ {
        let n = self.omega.rows();
        self.forms
            .iter()
            .fold(MatrixGQ::zeros(n, n), |acc, (slot, s, form)| {
                let weight = &c.c[*slot] * int(table.eval(chi, *s));
                if weight.is_zero() {
                    acc
                } else {
                    &acc + &form.scale(&weight.into())
                }
            })
    }
}

/// Whether `H_c` has the one-dimensional representation `chi` with `V`
/// acting by zero: the defining relation must map to zero, i.e.
/// `sum_s c(s) chi(s) omega_s = 0`.
pub fn one_dim_rep_check(
    forms: &ReflectionForms,
    table: &CharacterTable,
    chi_linear: &ClassFunction,
    c: &ReflectionParameter,
) -> bool {
    forms.weighted_sum(table, chi_linear, c).is_zero()
}
