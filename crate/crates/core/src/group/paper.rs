//! The group `G = Q8 x_{Z/2} D8` acting on `C^2 (x) C^2`.

use crate::exact::{int, GaussianRational, Matrix, MatrixGQ};

use super::{close_group, FiniteMatrixGroup, GroupError, DEFAULT_CLOSURE_CAP};

/// Labels of the five symplectic reflection classes, in the order of
/// [`PaperGroup::reflection_reps`].
pub const REFLECTION_LABELS: [&str; 5] = ["R1", "R2", "R3", "R4", "R5"];

fn m2(entries: [(i64, i64); 4]) -> MatrixGQ {
    Matrix::new(
        2,
        2,
        entries
            .iter()
            .map(|&(re, im)| GaussianRational::new(int(re), int(im)))
            .collect(),
    )
}

/// `diag(i, -i)`.
pub fn quaternion_i() -> MatrixGQ {
    m2([(0, 1), (0, 0), (0, 0), (0, -1)])
}

pub fn quaternion_j() -> MatrixGQ {
    m2([(0, 0), (-1, 0), (1, 0), (0, 0)])
}

pub fn quaternion_k() -> MatrixGQ {
    m2([(0, 0), (0, -1), (0, -1), (0, 0)])
}

/// Rotation by a quarter turn, generating the cyclic part of `D8`.
pub fn rotation_rho() -> MatrixGQ {
    m2([(0, 0), (-1, 0), (1, 0), (0, 0)])
}

/// Coordinate swap, the reflection in `D8`.
pub fn swap_sigma() -> MatrixGQ {
    m2([(0, 0), (1, 0), (1, 0), (0, 0)])
}

/// Standard symplectic form `[[0, 1], [-1, 0]]` on `C^2`.
pub fn omega2() -> MatrixGQ {
    m2([(0, 0), (1, 0), (-1, 0), (0, 0)])
}

#[derive(Debug, Clone)]
pub struct PaperGroup {
    pub group: FiniteMatrixGroup,
    /// `omega2 (x) Id2`, preserved by every element.
    pub omega: MatrixGQ,
    /// Element indices of `I(x)rho, J(x)rho, K(x)rho, Id(x)sigma, Id(x)sigma*rho`.
    pub reflection_reps: [usize; 5],
}

impl PaperGroup {
    /// Index of `-Id`.
    pub fn minus_identity(&self) -> usize {
        self.group
            .negation(self.group.identity())
            .expect("-Id lies in G")
    }
}

/// Builds `G` as the closure of `I(x)Id, J(x)Id, Id(x)rho, Id(x)sigma`.
pub fn build_paper_group() -> PaperGroup {
    build_paper_group_with_cap(DEFAULT_CLOSURE_CAP).expect("G is finite of order 32")
}

/// As [`build_paper_group`], with an explicit closure cap.
pub fn build_paper_group_with_cap(cap: usize) -> Result<PaperGroup, GroupError> {
    let id2 = MatrixGQ::identity(2);
    let generators = [
        quaternion_i().kronecker(&id2),
        quaternion_j().kronecker(&id2),
        id2.kronecker(&rotation_rho()),
        id2.kronecker(&swap_sigma()),
    ];
    let group = close_group(&generators, cap)?;
    let omega = omega2().kronecker(&id2);

    let rho = rotation_rho();
    let sigma = swap_sigma();
    let reps = [
        quaternion_i().kronecker(&rho),
        quaternion_j().kronecker(&rho),
        quaternion_k().kronecker(&rho),
        id2.kronecker(&sigma),
        id2.kronecker(&(&sigma * &rho)),
    ];
    let reflection_reps = reps.map(|m| group.index_of(&m).expect("representative lies in G"));
    Ok(PaperGroup {
        group,
        omega,
        reflection_reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (quaternion_i(), quaternion_j(), quaternion_k());
        let minus_id = -&MatrixGQ::identity(2);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        for m in [&i, &j, &k] {
            assert_eq!(m * m, minus_id);
        }
    }

    #[test]
    fn dihedral_relations() {
        let (rho, sigma) = (rotation_rho(), swap_sigma());
        let id = MatrixGQ::identity(2);
        assert_eq!(&sigma * &sigma, id);
        let rho2 = &rho * &rho;
        assert_eq!(rho2, -&id);
        assert_eq!(&(&sigma * &rho) * &sigma, rho.inverse().unwrap());
    }

    #[test]
    fn paper_group_basics() {
        let pg = build_paper_group();
        assert_eq!(pg.group.order(), 32);
        assert!(pg.group.preserves_form(&pg.omega));
        let minus_id = -&MatrixGQ::identity(4);
        let rho = rotation_rho();
        assert_eq!(MatrixGQ::identity(2).kronecker(&(&rho * &rho)), minus_id);
        assert!(pg.group.index_of(&minus_id).is_some());
        let again = build_paper_group();
        assert_eq!(pg.reflection_reps, again.reflection_reps);
        assert_eq!(pg.group.elements(), again.group.elements());
    }
}
