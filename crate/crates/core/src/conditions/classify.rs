use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;

use crate::chars::{candidate_count, CharacterTable, MultiplicityVector, SubrepCandidates};

use super::{contains, solution_space, ConditionContext, Hyperplane};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationFailure {
    pub index: u64,
    pub multiplicity: MultiplicityVector,
    pub kernel_dim: usize,
}

/// Outcome of checking every proper nonzero subrepresentation character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub candidates: u64,
    /// Candidates whose solution space lies in at least one hyperplane.
    pub verified: u64,
    pub failures: Vec<ClassificationFailure>,
    /// Number of candidates whose solution space lies in each hyperplane.
    pub per_hyperplane: Vec<(String, u64)>,
    /// Candidates whose six equations all vanish; these would leave `c`
    /// unconstrained.
    pub zero_systems: u64,
}

#[derive(Default)]
struct Tally {
    verified: u64,
    failures: Vec<ClassificationFailure>,
    per_hyperplane: Vec<u64>,
    zero_systems: u64,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.verified += other.verified;
        self.zero_systems += other.zero_systems;
        self.failures.extend(other.failures);
        if self.per_hyperplane.is_empty() {
            self.per_hyperplane = other.per_hyperplane;
        } else {
            for (a, b) in self.per_hyperplane.iter_mut().zip(other.per_hyperplane) {
                *a += b;
            }
        }
        self
    }
}

fn classify_range(
    table: &CharacterTable,
    ctx: &ConditionContext,
    hyperplanes: &[Hyperplane],
    range: Range<u64>,
) -> Tally {
    let mut tally = Tally {
        per_hyperplane: vec![0; hyperplanes.len()],
        ..Tally::default()
    };
    let start = range.start;
    for (offset, (m, chi)) in SubrepCandidates::range(table, range).enumerate() {
        let system = ctx.build_system(&chi);
        if system.is_zero() {
            tally.zero_systems += 1;
        }
        let kernel = solution_space(&system);
        let mut any = false;
        for (count, plane) in tally.per_hyperplane.iter_mut().zip(hyperplanes) {
            if contains(&kernel, plane) {
                *count += 1;
                any = true;
            }
        }
        if any {
            tally.verified += 1;
        } else {
            tally.failures.push(ClassificationFailure {
                index: start + offset as u64,
                multiplicity: m,
                kernel_dim: kernel.len(),
            });
        }
    }
    tally
}

/// Checks that every proper nonzero subrepresentation character yields a
/// solution space inside one of `hyperplanes`. The candidate range is cut
/// into contiguous chunks processed on `workers` threads and merged in
/// chunk order, so the report does not depend on the worker count.
pub fn verify_complemma(
    table: &CharacterTable,
    ctx: &ConditionContext,
    hyperplanes: &[Hyperplane],
    workers: usize,
) -> ClassificationReport {
    const CHUNK: u64 = 4096;
    let total = candidate_count(table);
    let chunks: Vec<Range<u64>> = (0..total.div_ceil(CHUNK))
        .map(|k| k * CHUNK..((k + 1) * CHUNK).min(total))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let partials: Vec<Tally> = pool.install(|| {
        chunks
            .into_par_iter()
            .map(|r| classify_range(table, ctx, hyperplanes, r))
            .collect()
    });
    let tally = partials.into_iter().fold(Tally::default(), Tally::merge);
    ClassificationReport {
        candidates: total,
        verified: tally.verified,
        failures: tally.failures,
        per_hyperplane: hyperplanes
            .iter()
            .map(|h| h.label.to_string())
            .zip(tally.per_hyperplane)
            .collect(),
        zero_systems: tally.zero_systems,
    }
}
