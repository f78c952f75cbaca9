//! Symplectic reflections, their fixed spaces and the degenerate forms
//! `omega_s`, the canonical labels `R1..R5` of the reflection classes, and
//! the reflection parameters `c`.

mod parameter;

use num_traits::Zero;

use crate::exact::{GaussianRational, Matrix, MatrixGQ};
use crate::group::{class_map, FiniteMatrixGroup, PaperGroup, REFLECTION_LABELS};

pub use parameter::{ParameterError, ReflectionParameter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReflectionError {
    #[error("element is not a symplectic reflection (rank(g - Id) = {rank})")]
    NotAReflection { rank: usize },
    #[error("the form restricted to the fixed space is degenerate")]
    DegenerateFixedSpace,
    #[error("expected 5 reflection classes of size 2, found {found}")]
    UnexpectedClasses { found: usize },
}

pub type Vector = Vec<GaussianRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticReflection {
    pub element_index: usize,
    /// Basis of `V^s`.
    pub fixed_space: Vec<Vector>,
    /// Basis of the `omega`-orthogonal complement of `V^s`.
    pub perp_space: Vec<Vector>,
    pub omega_s: MatrixGQ,
}

fn minus_identity(g: &MatrixGQ) -> MatrixGQ {
    g - &MatrixGQ::identity(g.rows())
}

pub fn is_reflection(g: &MatrixGQ) -> bool {
    minus_identity(g).rank() == 2
}

/// Elements with `rank(g - Id) = 2`.
pub fn find_reflections(group: &FiniteMatrixGroup) -> Vec<usize> {
    (0..group.order())
        .filter(|&k| is_reflection(group.matrix(k)))
        .collect()
}

/// Whether the reflections are exactly the noncentral involutions.
pub fn reflections_equal_noncentral_involutions(group: &FiniteMatrixGroup) -> bool {
    let center = group.center();
    let involutions: Vec<usize> = (0..group.order())
        .filter(|&g| group.element_order(g) == 2 && !center.contains(&g))
        .collect();
    find_reflections(group) == involutions
}

/// `V^g`, as the kernel of `g - Id`.
pub fn fixed_space(g: &MatrixGQ) -> Vec<Vector> {
    minus_identity(g).kernel_basis()
}

/// `{w : omega(v, w) = 0 for all v in basis}` with `omega(v, w) = v^T omega w`.
pub fn omega_complement(basis: &[Vector], omega: &MatrixGQ) -> Vec<Vector> {
    if basis.is_empty() {
        let id = MatrixGQ::identity(omega.rows());
        return (0..id.rows()).map(|r| id.row(r).to_vec()).collect();
    }
    let rows = basis.iter().map(|v| omega.transpose().mul_vec(v)).collect();
    Matrix::from_rows(rows).kernel_basis()
}

/// The matrix of `omega_s(v, w) = omega(pi v, pi w)` where `pi` projects onto
/// `(V^s)^perp` along `V^s`.
pub fn omega_s(s: &MatrixGQ, omega: &MatrixGQ) -> Result<MatrixGQ, ReflectionError> {
    Ok(reflection_data(s, omega)?.2)
}

fn reflection_data(
    s: &MatrixGQ,
    omega: &MatrixGQ,
) -> Result<(Vec<Vector>, Vec<Vector>, MatrixGQ), ReflectionError> {
    let rank = minus_identity(s).rank();
    if rank != 2 {
        return Err(ReflectionError::NotAReflection { rank });
    }
    let fixed = fixed_space(s);
    let perp = omega_complement(&fixed, omega);
    let n = s.rows();
    // Columns: fixed basis, then complement basis.
    let columns: Vec<&Vector> = fixed.iter().chain(&perp).collect();
    if columns.len() != n {
        return Err(ReflectionError::DegenerateFixedSpace);
    }
    let basis = Matrix::from_fn(n, n, |r, c| columns[c][r].clone());
    let basis_inv = basis
        .inverse()
        .ok_or(ReflectionError::DegenerateFixedSpace)?;
    let keep = Matrix::from_fn(n, n, |r, c| {
        if r == c && r >= fixed.len() {
            GaussianRational::from_int(1)
        } else {
            GaussianRational::zero()
        }
    });
    let projection = &(&basis * &keep) * &basis_inv;
    let form = &(&projection.transpose() * omega) * &projection;
    Ok((fixed, perp, form))
}

pub fn symplectic_reflection(
    group: &FiniteMatrixGroup,
    index: usize,
    omega: &MatrixGQ,
) -> Result<SymplecticReflection, ReflectionError> {
    let (fixed_space, perp_space, omega_s) = reflection_data(group.matrix(index), omega)?;
    Ok(SymplecticReflection {
        element_index: index,
        fixed_space,
        perp_space,
        omega_s,
    })
}

/// The five reflection classes of `G` with labels `R1..R5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionClassSet {
    /// Class index (in `conjugacy_classes` order) of each label.
    pub class_indices: [usize; 5],
    /// Canonical representative element of each label.
    pub representatives: [usize; 5],
    /// Both members of each class.
    pub members: [[usize; 2]; 5],
}

impl ReflectionClassSet {
    pub fn from_paper_group(pg: &PaperGroup) -> Result<Self, ReflectionError> {
        let group = &pg.group;
        let classes = group.conjugacy_classes();
        let map = class_map(&classes, group.order());
        let reflections = find_reflections(group);
        let mut reflection_classes: Vec<usize> = reflections.iter().map(|&r| map[r]).collect();
        reflection_classes.sort_unstable();
        reflection_classes.dedup();
        let sizes_ok = reflection_classes.iter().all(|&k| classes[k].size() == 2);
        if reflection_classes.len() != 5 || !sizes_ok {
            return Err(ReflectionError::UnexpectedClasses {
                found: reflection_classes.len(),
            });
        }
        let class_indices = pg.reflection_reps.map(|r| map[r]);
        let mut distinct = class_indices.to_vec();
        distinct.sort_unstable();
        if distinct != reflection_classes {
            return Err(ReflectionError::UnexpectedClasses { found: 5 });
        }
        let members = class_indices.map(|k| [classes[k].members[0], classes[k].members[1]]);
        Ok(Self {
            class_indices,
            representatives: pg.reflection_reps,
            members,
        })
    }

    pub fn label(&self, slot: usize) -> &'static str {
        REFLECTION_LABELS[slot]
    }

    /// Slot (0..5) of the class containing `element`, if it is a reflection.
    pub fn slot_of(&self, element: usize) -> Option<usize> {
        self.members.iter().position(|m| m.contains(&element))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::MatrixGQ;
    use crate::group::{
        build_paper_group, close_group, omega2, quaternion_i, rotation_rho, swap_sigma,
    };

    #[test]
    fn ten_reflections_in_five_classes() {
        let pg = build_paper_group();
        let refl = find_reflections(&pg.group);
        assert_eq!(refl.len(), 10);
        let set = ReflectionClassSet::from_paper_group(&pg).unwrap();
        let id2 = MatrixGQ::identity(2);
        let id_sigma = pg.group.index_of(&id2.kronecker(&swap_sigma())).unwrap();
        assert!(refl.contains(&id_sigma));
        assert_eq!(set.slot_of(id_sigma), Some(3));
        let i_id = pg.group.index_of(&quaternion_i().kronecker(&id2)).unwrap();
        assert!(!refl.contains(&i_id));
        assert_eq!((pg.group.matrix(i_id) - &MatrixGQ::identity(4)).rank(), 4);
    }

    #[test]
    fn involution_criterion() {
        let pg = build_paper_group();
        assert!(reflections_equal_noncentral_involutions(&pg.group));
        // In Sp2 the central element -Id already has rank(g - Id) = 2, so the
        // reflection set {-Id} differs from the empty set of noncentral involutions.
        let minus = close_group(&[-&MatrixGQ::identity(2)], 10).unwrap();
        assert_eq!(find_reflections(&minus).len(), 1);
        assert!(!reflections_equal_noncentral_involutions(&minus));
        let c4 = close_group(&[rotation_rho()], 10).unwrap();
        assert!(!reflections_equal_noncentral_involutions(&c4));
    }

    #[test]
    fn omega_s_examples() {
        let pg = build_paper_group();
        for s in find_reflections(&pg.group) {
            let refl = symplectic_reflection(&pg.group, s, &pg.omega).unwrap();
            assert_eq!(refl.omega_s.rank(), 2);
            assert_eq!(refl.omega_s.transpose(), -&refl.omega_s);
            let neg = pg.group.negation(s).unwrap();
            let other = omega_s(pg.group.matrix(neg), &pg.omega).unwrap();
            assert_eq!(&refl.omega_s + &other, pg.omega);
            for x in &refl.fixed_space {
                let row = refl.omega_s.transpose().mul_vec(x);
                assert!(row.iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn rotation_in_sp2_is_a_reflection_with_full_form() {
        // In dimension 2 the fixed space is zero and omega_s = omega.
        let form = omega_s(&rotation_rho(), &omega2()).unwrap();
        assert_eq!(form, omega2());
    }

    #[test]
    fn not_a_reflection() {
        let pg = build_paper_group();
        assert_eq!(
            omega_s(&MatrixGQ::identity(4), &pg.omega).unwrap_err(),
            ReflectionError::NotAReflection { rank: 0 }
        );
    }
}
