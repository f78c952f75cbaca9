use sra_core::autos::{
    automorphism_group, inner_automorphisms, is_closed, out_action_on_reflections,
    GroupAutomorphism, DEFAULT_SEARCH_CAP,
};
use sra_core::exact::MatrixGQ;
use sra_core::group::{build_paper_group, quaternion_i, quaternion_j, rotation_rho, swap_sigma};
use sra_core::reflections::ReflectionClassSet;

#[test]
fn automorphism_group_of_g() {
    let pg = build_paper_group();
    let g = &pg.group;
    let autos = automorphism_group(g, DEFAULT_SEARCH_CAP, 2).unwrap();
    assert_eq!(autos.len(), 1920);
    assert!(autos.contains(&GroupAutomorphism::identity(32)));
    for a in &autos {
        assert!(a.is_automorphism_of(g));
        assert_eq!(a.apply(g.identity()), g.identity());
    }
    let inner = inner_automorphisms(g);
    assert_eq!(inner.len(), 16);
    assert!(inner.iter().all(|a| autos.binary_search(a).is_ok()));
    assert!(is_closed(&autos));
}

#[test]
fn search_is_independent_of_workers() {
    let pg = build_paper_group();
    let a = automorphism_group(&pg.group, DEFAULT_SEARCH_CAP, 1).unwrap();
    let b = automorphism_group(&pg.group, DEFAULT_SEARCH_CAP, 3).unwrap();
    assert_eq!(a, b);
}

#[test]
fn reflection_action_is_s5_with_inner_kernel() {
    let pg = build_paper_group();
    let classes = ReflectionClassSet::from_paper_group(&pg).unwrap();
    let autos = automorphism_group(&pg.group, DEFAULT_SEARCH_CAP, 2).unwrap();
    let action = out_action_on_reflections(&pg.group, &classes, &autos).unwrap();
    assert_eq!(action.image.len(), 120);
    assert_eq!(action.kernel.len(), 16);
    let mut kernel: Vec<GroupAutomorphism> =
        action.kernel.iter().map(|&k| autos[k].clone()).collect();
    kernel.sort();
    assert_eq!(kernel, inner_automorphisms(&pg.group));
}

#[test]
fn tensor_factor_symmetries_preserve_the_partition() {
    let pg = build_paper_group();
    let g = &pg.group;
    let id2 = MatrixGQ::identity(2);
    let idx = |m: MatrixGQ| g.index_of(&m).unwrap();
    let q8 = g.generated_subgroup(&[
        idx(quaternion_i().kronecker(&id2)),
        idx(quaternion_j().kronecker(&id2)),
    ]);
    let d8 = g.generated_subgroup(&[
        idx(id2.kronecker(&rotation_rho())),
        idx(id2.kronecker(&swap_sigma())),
    ]);
    assert_eq!((q8.len(), d8.len()), (8, 8));
    let classes = ReflectionClassSet::from_paper_group(&pg).unwrap();
    let autos = automorphism_group(g, DEFAULT_SEARCH_CAP, 2).unwrap();
    let action = out_action_on_reflections(g, &classes, &autos).unwrap();
    let mut count = 0;
    for (a, sigma) in autos.iter().zip(&action.per_automorphism) {
        if a.preserves(&q8) && a.preserves(&d8) {
            count += 1;
            assert!(sigma[..3].iter().all(|&s| s < 3), "{sigma:?}");
            assert!(sigma[3..].iter().all(|&s| s >= 3), "{sigma:?}");
        }
    }
    // Out(Q8) x Out(D8) = S3 x Z/2 over the inner automorphisms.
    assert_eq!(count, 16 * 12);
}
