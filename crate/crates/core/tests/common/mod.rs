//! Seeded samplers and property checks shared by the property suites and
//! the acceptance runner.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sra_core::chars::{candidate_count, CharacterTable, SubrepCandidates};
use sra_core::conditions::{
    hyperplane_set, one_dim_rep_check, smoothness, ConditionContext, ReflectionForms,
};
use sra_core::exact::{rational, Rational};
use sra_core::group::{build_paper_group, PaperGroup};
use sra_core::reflections::{ReflectionClassSet, ReflectionParameter};

pub const SEED: u64 = 0x5eed_2024;

pub struct Fixture {
    pub pg: PaperGroup,
    pub table: CharacterTable,
    pub ctx: ConditionContext,
    pub classes: ReflectionClassSet,
}

pub fn fixture() -> Fixture {
    let pg = build_paper_group();
    let table = sra_core::chars::character_table(&pg.group).unwrap();
    let ctx = ConditionContext::new(&pg, &table);
    let classes = ReflectionClassSet::from_paper_group(&pg).unwrap();
    Fixture {
        pg,
        table,
        ctx,
        classes,
    }
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_bool(0.15) {
        return rational(0, 1);
    }
    rational(rng.gen_range(-12..=12), rng.gen_range(1..=7))
}

pub fn random_parameter(rng: &mut ChaCha8Rng) -> ReflectionParameter {
    ReflectionParameter::new(std::array::from_fn(|_| random_rational(rng)))
}

/// Moves the last coordinate with a nonzero normal entry so that `c` lies
/// on the hyperplane.
pub fn project_onto(c: &ReflectionParameter, normal: &[i64; 5]) -> ReflectionParameter {
    let k = (0..5).rev().find(|&k| normal[k] != 0).unwrap();
    let mut values = c.c.clone();
    let rest: Rational = (0..5)
        .filter(|&j| j != k)
        .map(|j| &values[j] * rational(normal[j], 1))
        .sum();
    values[k] = -rest / rational(normal[k], 1);
    ReflectionParameter::new(values)
}

/// The trace system does not change under any of the 32 ways of replacing
/// representatives by the other member of their class.
pub fn sign_invariance(f: &Fixture, samples: usize) -> Result<(), String> {
    let mut r = rng(1);
    let total = candidate_count(&f.table);
    for _ in 0..samples {
        let index = r.gen_range(0..total);
        let m = SubrepCandidates::decode(&f.table, index);
        let chi = f.table.combine(&m);
        let base = f.ctx.build_system(&chi);
        for signs in 0..32usize {
            let reps: [usize; 5] = std::array::from_fn(|k| f.classes.members[k][signs >> k & 1]);
            let other = ConditionContext::with_representatives(&f.pg, &f.table, reps);
            if other.build_system(&chi) != base {
                return Err(format!("candidate {index} with representatives {reps:?}"));
            }
        }
    }
    Ok(())
}

/// `smoothness(c) = smoothness(lambda c)` for nonzero `lambda`.
pub fn scale_invariance(f: &Fixture, samples: usize) -> Result<(), String> {
    let planes = hyperplane_set(&f.table, &f.ctx).map_err(|e| e.to_string())?;
    let mut r = rng(2);
    for k in 0..samples {
        let mut c = random_parameter(&mut r);
        if k % 3 == 0 {
            c = project_onto(&c, &planes[r.gen_range(0..planes.len())].normal);
        }
        let lambda = loop {
            let x = random_rational(&mut r);
            if x != rational(0, 1) {
                break x;
            }
        };
        if smoothness(&c, &planes) != smoothness(&c.scaled(&lambda), &planes) {
            return Err(format!("c = {c}, lambda = {lambda}"));
        }
    }
    Ok(())
}

/// `one_dim_rep_check` agrees with the normal test on every linear
/// character; half the samples are placed on the hyperplane.
pub fn one_dim_agreement(f: &Fixture, per_character: usize) -> Result<(), String> {
    let forms = ReflectionForms::new(&f.pg, &f.classes).map_err(|e| e.to_string())?;
    let mut r = rng(3);
    let mut on_plane = 0;
    for (k, chi) in f.table.linear_rows().iter().enumerate() {
        let normal = f.ctx.reflection_values(chi);
        for n in 0..per_character {
            let mut c = random_parameter(&mut r);
            if n % 2 == 0 {
                c = project_onto(&c, &normal);
            }
            let dot: Rational = (0..5).map(|j| &c.c[j] * rational(normal[j], 1)).sum();
            let expected = dot == rational(0, 1);
            on_plane += usize::from(expected);
            if one_dim_rep_check(&forms, &f.table, chi, &c) != expected {
                return Err(format!("character {k}, c = {c}"));
            }
        }
    }
    if on_plane < per_character * f.table.linear_rows().len() / 2 {
        return Err("too few samples on the hyperplanes".into());
    }
    Ok(())
}
