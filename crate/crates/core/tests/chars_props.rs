use sra_core::chars::{character_table, SubrepCandidates, TOTAL_TUPLES};
use sra_core::conditions::ConditionContext;
use sra_core::group::build_paper_group;

#[test]
fn shape_of_the_table() {
    let pg = build_paper_group();
    let t = character_table(&pg.group).unwrap();
    assert_eq!(t.class_count(), 17);
    assert_eq!(t.linear_rows().len(), 16);
    let mut dims = t.dims.clone();
    dims.sort_unstable();
    assert_eq!(dims, [vec![1; 16], vec![4]].concat());
    assert_eq!(t.dims.iter().map(|d| d * d).sum::<i64>(), 32);
}

#[test]
fn row_and_column_orthogonality() {
    let pg = build_paper_group();
    let t = character_table(&pg.group).unwrap();
    let sizes: Vec<i64> = t.class_sizes.iter().map(|&s| s as i64).collect();
    for (a, ra) in t.rows.iter().enumerate() {
        for (b, rb) in t.rows.iter().enumerate() {
            let dot: i64 = (0..17).map(|k| sizes[k] * ra.at(k) * rb.at(k)).sum();
            assert_eq!(dot, if a == b { 32 } else { 0 });
        }
    }
    // Characters are real, so conjugation is the identity.
    for (k, &size) in sizes.iter().enumerate().take(17) {
        for l in 0..17 {
            let dot: i64 = t.rows.iter().map(|r| r.at(k) * r.at(l)).sum();
            let expected = if k == l { 32 / size } else { 0 };
            assert_eq!(dot, expected, "columns {k}, {l}");
        }
    }
}

#[test]
fn reflection_sign_vectors_are_the_even_parity_vectors() {
    let pg = build_paper_group();
    let t = character_table(&pg.group).unwrap();
    let ctx = ConditionContext::new(&pg, &t);
    let mut signs: Vec<[i64; 5]> = t
        .linear_rows()
        .iter()
        .map(|chi| ctx.reflection_values(chi))
        .collect();
    signs.sort_unstable();
    let mut expected: Vec<[i64; 5]> = (0..32u32)
        .map(|bits| std::array::from_fn(|k| if bits >> k & 1 == 1 { -1 } else { 1 }))
        .filter(|v: &[i64; 5]| v.iter().product::<i64>() == 1)
        .collect();
    expected.sort_unstable();
    assert_eq!(signs, expected);
    for chi in t.linear_rows() {
        assert_eq!(ctx.minus_identity_value(chi), 1);
    }
}

#[test]
fn candidate_enumeration_endpoints() {
    let pg = build_paper_group();
    let t = character_table(&pg.group).unwrap();
    let all = SubrepCandidates::new(&t);
    assert_eq!(all.len() as u64, TOTAL_TUPLES - 2);
    assert_eq!(all.len(), 327_678);
    let first = SubrepCandidates::decode(&t, 0);
    assert_eq!(first.as_slice().iter().map(|&x| x as u32).sum::<u32>(), 1);
    let last = SubrepCandidates::decode(&t, TOTAL_TUPLES - 3);
    let full: Vec<u8> = t.dims.iter().map(|&d| d as u8).collect();
    assert_ne!(last.as_slice(), full.as_slice());
    let regular = t.regular_character();
    let full_chi = t.combine(&sra_core::chars::MultiplicityVector::new(full, &t.dims));
    // The excluded top tuple is the regular representation.
    assert_eq!(full_chi, regular);
}
