use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sra_core::exact::{GaussianRational, MatrixGQ};
use sra_core::group::{
    build_paper_group, close_group, omega2, quaternion_i, quaternion_j, rotation_rho, swap_sigma,
};
use sra_core::hp0::{
    act, hp0_graded_dims, invariant_basis, is_invariant, molien_dims, monomials_of_degree,
    reynolds_basis, PoissonStructure, Poly,
};

fn random_poly(rng: &mut ChaCha8Rng, degree: u16) -> Poly {
    let mut p = Poly::zero(4);
    for m in monomials_of_degree(4, degree) {
        if rng.gen_bool(0.4) {
            let c = GaussianRational::new(
                sra_core::exact::int(rng.gen_range(-3..=3)),
                sra_core::exact::int(rng.gen_range(-3..=3)),
            );
            p.add_term(m, c);
        }
    }
    p
}

#[test]
fn molien_matches_reynolds_through_degree_twelve() {
    let pg = build_paper_group();
    let molien = molien_dims(&pg.group, 12).unwrap();
    assert_eq!(&molien[..3], &[1, 0, 0]);
    for (d, &expected) in molien.iter().enumerate() {
        assert_eq!(
            reynolds_basis(&pg.group, d).len() as u64,
            expected,
            "degree {d}"
        );
    }
}

#[test]
fn brackets_of_invariants_are_invariant() {
    let pg = build_paper_group();
    let pi = PoissonStructure::from_form(&pg.omega);
    let bases: Vec<Vec<Poly>> = (0..=8)
        .map(|d| invariant_basis(&pg.group, d).unwrap())
        .collect();
    for a in 1..=8 {
        for b in a..=8 {
            if a + b > 12 {
                continue;
            }
            for f in &bases[a] {
                for g in &bases[b] {
                    let br = pi.bracket(f, g);
                    assert!(is_invariant(&pg.group, &br), "degrees {a}, {b}");
                }
            }
        }
    }
}

#[test]
fn bracket_is_equivariant_under_generators() {
    let pg = build_paper_group();
    let pi = PoissonStructure::from_form(&pg.omega);
    let id2 = MatrixGQ::identity(2);
    let generators = [
        quaternion_i().kronecker(&id2),
        quaternion_j().kronecker(&id2),
        id2.kronecker(&rotation_rho()),
        id2.kronecker(&swap_sigma()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let f = random_poly(&mut rng, 2);
        let h = random_poly(&mut rng, 3);
        for m in &generators {
            let g = pg.group.index_of(m).unwrap();
            let lhs = pi.bracket(&act(&pg.group, g, &f), &act(&pg.group, g, &h));
            let rhs = act(&pg.group, g, &pi.bracket(&f, &h));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn bracket_satisfies_jacobi_and_leibniz() {
    let pg = build_paper_group();
    let pi = PoissonStructure::from_form(&pg.omega);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (f, g, h) = (
        random_poly(&mut rng, 2),
        random_poly(&mut rng, 2),
        random_poly(&mut rng, 3),
    );
    let jacobi = pi
        .bracket(&f, &pi.bracket(&g, &h))
        .add(&pi.bracket(&g, &pi.bracket(&h, &f)))
        .add(&pi.bracket(&h, &pi.bracket(&f, &g)));
    assert!(jacobi.is_zero());
    let leibniz = pi
        .bracket(&f, &g.mul(&h))
        .sub(&pi.bracket(&f, &g).mul(&h))
        .sub(&g.mul(&pi.bracket(&f, &h)));
    assert!(leibniz.is_zero());
    assert_eq!(
        pi.bracket(&f, &g),
        pi.bracket(&g, &f).scale(&GaussianRational::from_int(-1))
    );
}

#[test]
fn kleinian_a1_total_is_one() {
    let z2 = close_group(&[-&MatrixGQ::identity(2)], 10).unwrap();
    let dims = hp0_graded_dims(&z2, &omega2(), 12, 1).unwrap();
    assert_eq!(dims.cumulative_hp0, 1);
    assert!(dims.stabilized);
}

#[test]
fn graded_dims_do_not_depend_on_workers() {
    let pg = build_paper_group();
    let one = hp0_graded_dims(&pg.group, &pg.omega, 10, 1).unwrap();
    let three = hp0_graded_dims(&pg.group, &pg.omega, 10, 3).unwrap();
    assert_eq!(one, three);
    assert_eq!(one.per_degree[0].hp0_dim, 1);
    assert_eq!(one.per_degree[1].hp0_dim, 0);
    assert!(one
        .per_degree
        .iter()
        .all(|d| d.hp0_dim + d.bracket_span_dim == d.invariant_dim));
}
