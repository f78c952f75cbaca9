//! Finite matrix groups: closure from generators, multiplication and inverse
//! tables, conjugacy classes and basic structure.

mod paper;

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use crate::exact::MatrixGQ;

pub use paper::{
    build_paper_group, build_paper_group_with_cap, omega2, quaternion_i, quaternion_j,
    quaternion_k, rotation_rho, swap_sigma, PaperGroup, REFLECTION_LABELS,
};

/// Default bound on the number of elements produced by [`close_group`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("closure produced more than {cap} elements")]
    ClosureExceedsCap { cap: usize },
    #[error("generator {index} is not invertible")]
    NonInvertibleGenerator { index: usize },
    #[error("generator {index} is not square or has the wrong dimension")]
    DimensionMismatch { index: usize },
    #[error("no generators given")]
    EmptyGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub index: usize,
    pub matrix: MatrixGQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Sorted element indices.
    pub members: Vec<usize>,
    /// Smallest member index.
    pub representative: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    pub center: Vec<usize>,
    pub commutator_subgroup: Vec<usize>,
    pub abelianization_order: usize,
}

/// A finite group of invertible matrices with elements in canonical order.
#[derive(Debug, Clone)]
pub struct FiniteMatrixGroup {
    elements: Vec<GroupElement>,
    lookup: HashMap<MatrixGQ, usize>,
    mul_table: Vec<usize>,
    inv_table: Vec<usize>,
    identity: usize,
}

/// Lexicographic order on the flattened entries, each entry compared by
/// [`GaussianRational::canonical_cmp`](crate::exact::GaussianRational::canonical_cmp).
pub fn canonical_cmp(a: &MatrixGQ, b: &MatrixGQ) -> std::cmp::Ordering {
    a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x.canonical_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// Breadth-first closure of `generators` under multiplication.
pub fn close_group(generators: &[MatrixGQ], cap: usize) -> Result<FiniteMatrixGroup, GroupError> {
    let first = generators.first().ok_or(GroupError::EmptyGenerators)?;
    let dim = first.rows();
    for (index, g) in generators.iter().enumerate() {
        if !g.is_square() || g.rows() != dim {
            return Err(GroupError::DimensionMismatch { index });
        }
        if g.determinant().is_zero() {
            return Err(GroupError::NonInvertibleGenerator { index });
        }
    }

    let identity = MatrixGQ::identity(dim);
    let mut seen: HashMap<MatrixGQ, ()> = HashMap::from([(identity.clone(), ())]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = &x * g;
            if !seen.contains_key(&y) {
                if seen.len() >= cap {
                    return Err(GroupError::ClosureExceedsCap { cap });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
    }

    let mut matrices: Vec<MatrixGQ> = seen.into_keys().collect();
    matrices.sort_by(canonical_cmp);
    Ok(FiniteMatrixGroup::from_sorted(matrices))
}

impl FiniteMatrixGroup {
    fn from_sorted(matrices: Vec<MatrixGQ>) -> Self {
        let n = matrices.len();
        let lookup: HashMap<MatrixGQ, usize> = matrices
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let find = |m: &MatrixGQ| -> usize {
            *lookup
                .get(m)
                .expect("element set is closed under multiplication")
        };
        let mut mul_table = Vec::with_capacity(n * n);
        for a in &matrices {
            for b in &matrices {
                mul_table.push(find(&(a * b)));
            }
        }
        let identity = find(&MatrixGQ::identity(matrices[0].rows()));
        let inv_table = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul_table[a * n + b] == identity)
                    .expect("every element of a finite group has an inverse")
            })
            .collect();
        let elements = matrices
            .into_iter()
            .enumerate()
            .map(|(index, matrix)| GroupElement { index, matrix })
            .collect();
        Self {
            elements,
            lookup,
            mul_table,
            inv_table,
            identity,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dimension(&self) -> usize {
        self.elements[0].matrix.rows()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn matrix(&self, index: usize) -> &MatrixGQ {
        &self.elements[index].matrix
    }

    pub fn index_of(&self, matrix: &MatrixGQ) -> Option<usize> {
        self.lookup.get(matrix).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv_table[a]
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Index of `-g`, if it lies in the group.
    pub fn negation(&self, a: usize) -> Option<usize> {
        self.index_of(&-self.matrix(a))
    }

    /// Sorted indices of the subgroup generated by `generators`.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| inside[i]).collect()
    }

    /// Orbits under conjugation, sorted by representative.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| self.conjugate(g, x)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
            });
        }
        classes
    }

    /// `g^T omega g = omega` for every element.
    pub fn preserves_form(&self, omega: &MatrixGQ) -> bool {
        assert!(
            omega.is_square() && omega.rows() == self.dimension(),
            "form has the wrong dimension"
        );
        self.elements
            .iter()
            .all(|g| &(&g.matrix.transpose() * omega) * &g.matrix == *omega)
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn structure(&self) -> GroupStructure {
        let n = self.order();
        let mut commutators: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        commutators.sort_unstable();
        commutators.dedup();
        let commutator_subgroup = self.generated_subgroup(&commutators);
        GroupStructure {
            center: self.center(),
            abelianization_order: n / commutator_subgroup.len(),
            commutator_subgroup,
        }
    }
}

/// Maps each element index to the position of its class in `classes`.
pub fn class_map(classes: &[ConjugacyClass], order: usize) -> Vec<usize> {
    let mut map = vec![usize::MAX; order];
    for (k, class) in classes.iter().enumerate() {
        for &m in &class.members {
            map[m] = k;
        }
    }
    map
}
