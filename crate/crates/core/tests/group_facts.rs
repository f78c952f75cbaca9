use sra_core::exact::MatrixGQ;
use sra_core::group::{
    build_paper_group, close_group, quaternion_i, quaternion_j, quaternion_k, rotation_rho,
    swap_sigma,
};
use sra_core::reflections::{find_reflections, reflections_equal_noncentral_involutions};

#[test]
fn order_classes_and_center() {
    let pg = build_paper_group();
    let g = &pg.group;
    assert_eq!(g.order(), 32);
    let classes = g.conjugacy_classes();
    assert_eq!(classes.len(), 17);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [vec![1, 1], vec![2; 15]].concat());
    let mut center = g.center();
    center.sort_unstable();
    let mut expected = vec![g.identity(), pg.minus_identity()];
    expected.sort_unstable();
    assert_eq!(center, expected);
    assert!(g.preserves_form(&pg.omega));
}

#[test]
fn abelianization_is_elementary_of_order_sixteen() {
    let pg = build_paper_group();
    let s = pg.group.structure();
    assert_eq!(s.abelianization_order, 16);
    assert_eq!(s.commutator_subgroup.len(), 2);
    assert!((0..32).all(|x| s.commutator_subgroup.contains(&pg.group.mul(x, x))));
}

#[test]
fn reflections_are_the_noncentral_involutions() {
    let pg = build_paper_group();
    let g = &pg.group;
    assert!(reflections_equal_noncentral_involutions(g));
    let refl = find_reflections(g);
    assert_eq!(refl.len(), 10);
    let id2 = MatrixGQ::identity(2);
    let (rho, sigma) = (rotation_rho(), swap_sigma());
    let listed = [
        quaternion_i().kronecker(&rho),
        quaternion_j().kronecker(&rho),
        quaternion_k().kronecker(&rho),
        id2.kronecker(&sigma),
        id2.kronecker(&(&sigma * &rho)),
    ];
    let classes = g.conjugacy_classes();
    let mut seen = Vec::new();
    for m in &listed {
        let x = g.index_of(m).unwrap();
        assert!(refl.contains(&x));
        let class = classes.iter().position(|c| c.contains(x)).unwrap();
        assert!(!seen.contains(&class), "two representatives share a class");
        seen.push(class);
        assert!(classes[class].members.iter().all(|y| refl.contains(y)));
    }
}

#[test]
fn closure_does_not_depend_on_generator_order() {
    let id2 = MatrixGQ::identity(2);
    let gens = [
        id2.kronecker(&swap_sigma()),
        quaternion_j().kronecker(&id2),
        id2.kronecker(&rotation_rho()),
        quaternion_i().kronecker(&id2),
    ];
    let other = close_group(&gens, 1000).unwrap();
    let pg = build_paper_group();
    let a: Vec<&MatrixGQ> = other.elements().iter().map(|e| &e.matrix).collect();
    let b: Vec<&MatrixGQ> = pg.group.elements().iter().map(|e| &e.matrix).collect();
    assert_eq!(a, b);
}

#[test]
fn closure_cap_is_reported() {
    let id2 = MatrixGQ::identity(2);
    let err = close_group(
        &[
            quaternion_i().kronecker(&id2),
            id2.kronecker(&rotation_rho()),
        ],
        3,
    )
    .unwrap_err();
    assert_eq!(
        err.to_string(),
        sra_core::group::GroupError::ClosureExceedsCap { cap: 3 }.to_string()
    );
}
