//! Character table of `G` and enumeration of the characters of
//! subrepresentations of the regular representation.
//!
//! The table is assembled structurally: the linear characters come from the
//! dual of the abelianization, and the one remaining row is the trace of the
//! defining representation. Completeness is then checked through the sum of
//! squared degrees and both orthogonality relations.

mod enumerate;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::group::{class_map, ConjugacyClass, FiniteMatrixGroup};

pub use enumerate::{candidate_count, MultiplicityVector, SubrepCandidates, TOTAL_TUPLES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("abelianization is not elementary abelian of exponent 2")]
    UnsupportedAbelianization,
    #[error("trace of class representative {representative} is not an integer")]
    NonIntegerTrace { representative: usize },
    #[error("character table check failed: {0}")]
    TableInconsistent(String),
}

/// Integer-valued class function, one value per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ClassFunction {
    pub values: Vec<i64>,
}

impl ClassFunction {
    pub fn at(&self, class: usize) -> i64 {
        self.values[class]
    }

    /// `sum_k size_k * self_k * other_k`, i.e. `|G|` times the inner product
    /// for real-valued characters.
    pub fn weighted_dot(&self, other: &Self, class_sizes: &[usize]) -> i64 {
        self.values
            .iter()
            .zip(&other.values)
            .zip(class_sizes)
            .map(|((a, b), &s)| a * b * s as i64)
            .sum()
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_order: usize,
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
    /// Sixteen linear characters followed by the defining character.
    pub rows: Vec<ClassFunction>,
    pub dims: Vec<i64>,
    identity_class: usize,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    pub fn linear_rows(&self) -> &[ClassFunction] {
        &self.rows[..self.rows.len() - 1]
    }

    pub fn defining_row(&self) -> &ClassFunction {
        self.rows.last().expect("table is nonempty")
    }

    /// Value of `chi` at an arbitrary element.
    pub fn eval(&self, chi: &ClassFunction, element: usize) -> i64 {
        chi.at(self.class_of[element])
    }

    /// `sum_i m_i chi_i`.
    pub fn combine(&self, m: &MultiplicityVector) -> ClassFunction {
        let mut values = vec![0i64; self.class_count()];
        for (row, &mult) in self.rows.iter().zip(m.as_slice()) {
            if mult != 0 {
                for (v, x) in values.iter_mut().zip(&row.values) {
                    *v += i64::from(mult) * x;
                }
            }
        }
        ClassFunction { values }
    }

    /// Regular character: `|G|` at the identity, 0 elsewhere.
    pub fn regular_character(&self) -> ClassFunction {
        let mut values = vec![0; self.class_count()];
        values[self.identity_class] = self.group_order as i64;
        ClassFunction { values }
    }
}

fn classes_with_sizes(group: &FiniteMatrixGroup) -> (Vec<ConjugacyClass>, Vec<usize>) {
    let classes = group.conjugacy_classes();
    let class_of = class_map(&classes, group.order());
    (classes, class_of)
}

/// All homomorphisms `G -> {+1, -1}`, indexed by their coordinate vector on a
/// greedily chosen basis of the abelianization (index 0 is trivial).
pub fn linear_characters(group: &FiniteMatrixGroup) -> Result<Vec<ClassFunction>, CharError> {
    let n = group.order();
    let derived = group.structure().commutator_subgroup;
    let mut in_derived = vec![false; n];
    for &d in &derived {
        in_derived[d] = true;
    }
    if (0..n).any(|g| !in_derived[group.mul(g, g)]) {
        return Err(CharError::UnsupportedAbelianization);
    }
    let coset_of: Vec<usize> = (0..n)
        .map(|g| derived.iter().map(|&d| group.mul(g, d)).min().unwrap())
        .collect();

    // Greedy F2-basis of G/[G,G]; `mask[coset]` holds coordinates.
    let mut mask: Vec<Option<u32>> = vec![None; n];
    mask[coset_of[group.identity()]] = Some(0);
    let mut spanned = vec![coset_of[group.identity()]];
    let mut rank = 0u32;
    for g in 0..n {
        if mask[coset_of[g]].is_some() {
            continue;
        }
        let bit = 1u32 << rank;
        rank += 1;
        let current = spanned.clone();
        for c in current {
            let image = coset_of[group.mul(c, g)];
            if mask[image].is_some() {
                return Err(CharError::UnsupportedAbelianization);
            }
            mask[image] = Some(mask[c].unwrap() | bit);
            spanned.push(image);
        }
    }

    let (classes, _) = classes_with_sizes(group);
    Ok((0..1u32 << rank)
        .map(|a| ClassFunction {
            values: classes
                .iter()
                .map(|class| {
                    let coords = mask[coset_of[class.representative]].unwrap();
                    if (coords & a).count_ones().is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                })
                .collect(),
        })
        .collect())
}

/// Trace of the defining matrix representation on each class.
pub fn defining_character(group: &FiniteMatrixGroup) -> Result<ClassFunction, CharError> {
    let (classes, _) = classes_with_sizes(group);
    let values = classes
        .iter()
        .map(|class| {
            let m = group.matrix(class.representative);
            let trace = (0..m.rows()).fold(crate::exact::GaussianRational::zero(), |acc, k| {
                acc + m.get(k, k)
            });
            let non_integer = CharError::NonIntegerTrace {
                representative: class.representative,
            };
            if !trace.im.is_zero() || !trace.re.is_integer() {
                return Err(non_integer);
            }
            trace.re.to_integer().to_i64().ok_or(non_integer)
        })
        .collect::<Result<_, _>>()?;
    Ok(ClassFunction { values })
}

/// Linear characters plus the defining character, with every table
/// invariant checked before returning.
pub fn character_table(group: &FiniteMatrixGroup) -> Result<CharacterTable, CharError> {
    let (classes, class_of) = classes_with_sizes(group);
    let mut rows = linear_characters(group)?;
    rows.push(defining_character(group)?);
    let identity_class = class_of[group.identity()];
    let dims: Vec<i64> = rows.iter().map(|r| r.at(identity_class)).collect();
    let table = CharacterTable {
        group_order: group.order(),
        class_reps: classes.iter().map(|c| c.representative).collect(),
        class_sizes: classes.iter().map(ConjugacyClass::size).collect(),
        class_of,
        rows,
        dims,
        identity_class,
    };
    verify_table(&table)?;
    Ok(table)
}

fn verify_table(table: &CharacterTable) -> Result<(), CharError> {
    let fail = |what: &str| Err(CharError::TableInconsistent(what.to_string()));
    let order = table.group_order as i64;
    if table.rows.len() != table.class_count() {
        return fail("row count differs from class count");
    }
    if table.dims.iter().map(|d| d * d).sum::<i64>() != order {
        return fail("sum of squared degrees differs from |G|");
    }
    for (i, a) in table.rows.iter().enumerate() {
        for (j, b) in table.rows.iter().enumerate() {
            let expected = if i == j { order } else { 0 };
            if a.weighted_dot(b, &table.class_sizes) != expected {
                return fail("row orthogonality");
            }
        }
    }
    for g in 0..table.class_count() {
        for h in 0..table.class_count() {
            let sum: i64 = table.rows.iter().map(|r| r.at(g) * r.at(h)).sum();
            let expected = if g == h {
                order / table.class_sizes[g] as i64
            } else {
                0
            };
            if sum != expected {
                return fail("column orthogonality");
            }
        }
    }
    Ok(())
}
