use sra_core::exact::{Matrix, MatrixGQ};
use sra_core::group::build_paper_group;
use sra_core::reflections::{
    find_reflections, fixed_space, omega_complement, omega_s, symplectic_reflection,
};

fn span_rank(vectors: &[Vec<sra_core::exact::GaussianRational>]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        Matrix::from_rows(vectors.to_vec()).rank()
    }
}

#[test]
fn forms_of_opposite_reflections_sum_to_omega() {
    let pg = build_paper_group();
    let g = &pg.group;
    let refl = find_reflections(g);
    assert_eq!(refl.len(), 10);
    for &s in &refl {
        let minus_s = g.negation(s).unwrap();
        assert!(refl.contains(&minus_s));
        let a = omega_s(g.matrix(s), &pg.omega).unwrap();
        let b = omega_s(g.matrix(minus_s), &pg.omega).unwrap();
        assert_eq!(&a + &b, pg.omega, "reflection {s}");
        assert_eq!(a.rank(), 2);
        assert_eq!(a.transpose(), -&a);
    }
}

#[test]
fn complement_of_fixed_space_is_fixed_space_of_negative() {
    let pg = build_paper_group();
    let g = &pg.group;
    for s in find_reflections(g) {
        let fixed = fixed_space(g.matrix(s));
        assert_eq!(fixed.len(), 2);
        let perp = omega_complement(&fixed, &pg.omega);
        let other = fixed_space(g.matrix(g.negation(s).unwrap()));
        let both: Vec<_> = perp.iter().chain(&other).cloned().collect();
        assert_eq!(span_rank(&perp), 2);
        assert_eq!(span_rank(&other), 2);
        assert_eq!(span_rank(&both), 2, "reflection {s}");
    }
}

#[test]
fn form_vanishes_on_fixed_space() {
    let pg = build_paper_group();
    let g = &pg.group;
    for s in find_reflections(g) {
        let r = symplectic_reflection(g, s, &pg.omega).unwrap();
        for v in &r.fixed_space {
            let col = MatrixGQ::from_fn(4, 1, |i, _| v[i].clone());
            assert!((&r.omega_s * &col).is_zero());
        }
    }
}

#[test]
fn non_reflections_are_rejected() {
    let pg = build_paper_group();
    let err = omega_s(&MatrixGQ::identity(4), &pg.omega).unwrap_err();
    assert_eq!(
        err.to_string(),
        "element is not a symplectic reflection (rank(g - Id) = 0)"
    );
}

#[test]
fn forms_are_conjugation_equivariant() {
    let pg = build_paper_group();
    let g = &pg.group;
    for s in find_reflections(g) {
        let base = omega_s(g.matrix(s), &pg.omega).unwrap();
        for h in 0..g.order() {
            let conj = omega_s(g.matrix(g.conjugate(h, s)), &pg.omega).unwrap();
            let h_inv = g.matrix(g.inv(h));
            assert_eq!(conj, &(&h_inv.transpose() * &base) * h_inv);
        }
    }
}
