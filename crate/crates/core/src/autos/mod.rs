//! Automorphisms of a finite group given by its multiplication table, and
//! their action on the five reflection classes.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::group::{class_map, FiniteMatrixGroup};
use crate::reflections::ReflectionClassSet;

pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;
/// Largest generating tuple the search accepts.
pub const MAX_GENERATORS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutError {
    #[error("search space {size} exceeds the cap {cap}")]
    SearchSpaceExceeded { size: u128, cap: u64 },
    #[error("no generating tuple with at most {MAX_GENERATORS} elements was found (greedy gave {found})")]
    TooManyGenerators { found: usize },
    #[error(
        "automorphism {automorphism} sends reflection class {slot} outside the reflection classes"
    )]
    ReflectionNotPreserved { automorphism: usize, slot: usize },
    #[error("the kernel of the action on reflection classes has {kernel} elements, the inner automorphisms {inner}")]
    KernelNotInner { kernel: usize, inner: usize },
}

/// A group automorphism stored as a permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupAutomorphism {
    pub perm: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn identity(order: usize) -> Self {
        Self {
            perm: (0..order).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            perm: other.perm.iter().map(|&x| self.perm[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            perm[y] = x;
        }
        Self { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Full check of `perm(xy) = perm(x) perm(y)` on every pair, plus
    /// bijectivity.
    pub fn is_automorphism_of(&self, group: &FiniteMatrixGroup) -> bool {
        let n = group.order();
        if self.perm.len() != n || !is_permutation(&self.perm) {
            return false;
        }
        (0..n).all(|x| {
            (0..n).all(|y| self.perm[group.mul(x, y)] == group.mul(self.perm[x], self.perm[y]))
        })
    }

    /// Whether the automorphism maps `subset` onto itself.
    pub fn preserves(&self, subset: &[usize]) -> bool {
        let set: HashSet<usize> = subset.iter().copied().collect();
        subset.iter().all(|x| set.contains(&self.perm[*x]))
    }
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&y| y < perm.len() && !std::mem::replace(&mut seen[y], true))
}

/// Generating tuple built by scanning elements in index order and keeping
/// each one outside the subgroup generated so far, then dropping any
/// generator the others already generate.
pub fn greedy_generators(group: &FiniteMatrixGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut subgroup = vec![group.identity()];
    for x in 0..group.order() {
        if subgroup.len() == group.order() {
            break;
        }
        if subgroup.binary_search(&x).is_err() {
            gens.push(x);
            subgroup = group.generated_subgroup(&gens);
        }
    }
    let mut k = 0;
    while k < gens.len() {
        let mut rest = gens.clone();
        rest.remove(k);
        if group.generated_subgroup(&rest).len() == group.order() {
            gens = rest;
        } else {
            k += 1;
        }
    }
    gens
}

/// Spanning tree of the Cayley graph: for each element other than the
/// identity, its parent and the generator slot with `x = parent * g`.
fn spanning_tree(group: &FiniteMatrixGroup, gens: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut seen = vec![false; group.order()];
    seen[group.identity()] = true;
    let mut queue = VecDeque::from([group.identity()]);
    let mut edges = Vec::with_capacity(group.order());
    while let Some(x) = queue.pop_front() {
        for (slot, &g) in gens.iter().enumerate() {
            let y = group.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                edges.push((y, x, slot));
                queue.push_back(y);
            }
        }
    }
    edges
}

/// Extends `gens[k] -> images[k]` along the tree and checks that the result
/// is an automorphism.
fn extend(
    group: &FiniteMatrixGroup,
    gens: &[usize],
    tree: &[(usize, usize, usize)],
    images: &[usize],
) -> Option<GroupAutomorphism> {
    let n = group.order();
    let mut perm = vec![usize::MAX; n];
    perm[group.identity()] = group.identity();
    for &(y, parent, slot) in tree {
        perm[y] = group.mul(perm[parent], images[slot]);
    }
    if !is_permutation(&perm) {
        return None;
    }
    let respects = (0..n).all(|x| {
        gens.iter()
            .zip(images)
            .all(|(&g, &h)| perm[group.mul(x, g)] == group.mul(perm[x], h))
    });
    respects.then_some(GroupAutomorphism { perm })
}

/// All automorphisms, sorted by permutation. Candidate images of each
/// generator share its element order and class size. Work is split by the
/// image of the first generator across `workers` threads.
pub fn automorphism_group(
    group: &FiniteMatrixGroup,
    cap: u64,
    workers: usize,
) -> Result<Vec<GroupAutomorphism>, AutError> {
    let gens = greedy_generators(group);
    if gens.is_empty() {
        return Ok(vec![GroupAutomorphism::identity(group.order())]);
    }
    if gens.len() > MAX_GENERATORS {
        return Err(AutError::TooManyGenerators { found: gens.len() });
    }
    let size = (group.order() as u128).pow(gens.len() as u32);
    if size > u128::from(cap) {
        return Err(AutError::SearchSpaceExceeded { size, cap });
    }
    let classes = group.conjugacy_classes();
    let map = class_map(&classes, group.order());
    let signature = |x: usize| (group.element_order(x), classes[map[x]].size());
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let sig = signature(g);
            (0..group.order())
                .filter(|&x| signature(x) == sig)
                .collect()
        })
        .collect();
    let tree = spanning_tree(group, &gens);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let mut autos: Vec<GroupAutomorphism> = pool.install(|| {
        candidates[0]
            .par_iter()
            .flat_map_iter(|&first| {
                let mut found = Vec::new();
                let mut images = vec![first; gens.len()];
                search(group, &gens, &tree, &candidates, 1, &mut images, &mut found);
                found
            })
            .collect()
    });
    autos.sort();
    autos.dedup();
    Ok(autos)
}

fn search(
    group: &FiniteMatrixGroup,
    gens: &[usize],
    tree: &[(usize, usize, usize)],
    candidates: &[Vec<usize>],
    depth: usize,
    images: &mut [usize],
    found: &mut Vec<GroupAutomorphism>,
) {
    if depth == gens.len() {
        if let Some(a) = extend(group, gens, tree, images) {
            found.push(a);
        }
        return;
    }
    for &h in &candidates[depth] {
        images[depth] = h;
        search(group, gens, tree, candidates, depth + 1, images, found);
    }
}

/// Conjugation maps `x -> g x g^-1`, deduplicated and sorted.
pub fn inner_automorphisms(group: &FiniteMatrixGroup) -> Vec<GroupAutomorphism> {
    let n = group.order();
    let mut inner: Vec<GroupAutomorphism> = (0..n)
        .map(|g| GroupAutomorphism {
            perm: (0..n).map(|x| group.conjugate(g, x)).collect(),
        })
        .collect();
    inner.sort();
    inner.dedup();
    inner
}

/// Whether `autos` contains the identity and is closed under composition
/// and inverse.
pub fn is_closed(autos: &[GroupAutomorphism]) -> bool {
    let Some(first) = autos.first() else {
        return false;
    };
    let set: HashSet<&GroupAutomorphism> = autos.iter().collect();
    set.contains(&GroupAutomorphism::identity(first.perm.len()))
        && autos.iter().all(|a| set.contains(&a.inverse()))
        && autos
            .par_iter()
            .all(|a| autos.iter().all(|b| set.contains(&a.compose(b))))
}

/// A permutation of the slots `0..5`.
pub type SlotPermutation = [usize; 5];

/// Action of the automorphisms on the reflection classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionAction {
    /// Slot permutation induced by each automorphism, in input order.
    pub per_automorphism: Vec<SlotPermutation>,
    /// Distinct induced permutations, sorted.
    pub image: Vec<SlotPermutation>,
    /// Indices of the automorphisms acting trivially.
    pub kernel: Vec<usize>,
}

/// Induced permutation on reflection classes for each automorphism. Checks
/// that both members of a class land in the same reflection class and that
/// the kernel is exactly the set of inner automorphisms.
pub fn out_action_on_reflections(
    group: &FiniteMatrixGroup,
    classes: &ReflectionClassSet,
    autos: &[GroupAutomorphism],
) -> Result<ReflectionAction, AutError> {
    let mut per_automorphism = Vec::with_capacity(autos.len());
    for (k, a) in autos.iter().enumerate() {
        let mut sigma = [0; 5];
        for (slot, pair) in classes.members.iter().enumerate() {
            let targets: Vec<Option<usize>> =
                pair.iter().map(|&x| classes.slot_of(a.apply(x))).collect();
            match (targets[0], targets[1]) {
                (Some(s), Some(t)) if s == t => sigma[slot] = s,
                _ => {
                    return Err(AutError::ReflectionNotPreserved {
                        automorphism: k,
                        slot,
                    })
                }
            }
        }
        per_automorphism.push(sigma);
    }
    let mut image = per_automorphism.clone();
    image.sort_unstable();
    image.dedup();
    let kernel: Vec<usize> = (0..autos.len())
        .filter(|&k| per_automorphism[k] == [0, 1, 2, 3, 4])
        .collect();

    let mut kernel_autos: Vec<&GroupAutomorphism> = kernel.iter().map(|&k| &autos[k]).collect();
    kernel_autos.sort();
    let inner = inner_automorphisms(group);
    if kernel_autos.len() != inner.len() || kernel_autos.iter().zip(&inner).any(|(a, b)| *a != b) {
        return Err(AutError::KernelNotInner {
            kernel: kernel_autos.len(),
            inner: inner.len(),
        });
    }
    Ok(ReflectionAction {
        per_automorphism,
        image,
        kernel,
    })
}

/// Cycle notation over labels, fixed points omitted; `()` for the identity.
pub fn cycle_notation(sigma: &SlotPermutation, labels: &[&str; 5]) -> String {
    let mut seen = [false; 5];
    let mut out = String::new();
    for start in 0..5 {
        if seen[start] || sigma[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(labels[x]);
            x = sigma[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn compose_slots(a: &SlotPermutation, b: &SlotPermutation) -> SlotPermutation {
    b.map(|x| a[x])
}

fn slot_closure(gens: &[SlotPermutation]) -> usize {
    let mut seen: HashSet<SlotPermutation> = HashSet::from([[0, 1, 2, 3, 4]]);
    let mut stack = vec![[0, 1, 2, 3, 4]];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = compose_slots(g, &p);
            if seen.insert(q) {
                stack.push(q);
            }
        }
    }
    seen.len()
}

/// Generators of the image, chosen greedily in sorted order.
pub fn image_generators(image: &[SlotPermutation]) -> Vec<SlotPermutation> {
    let mut gens = Vec::new();
    let mut reached = 1;
    for p in image {
        if reached == image.len() {
            break;
        }
        gens.push(*p);
        let size = slot_closure(&gens);
        if size == reached {
            gens.pop();
        } else {
            reached = size;
        }
    }
    gens
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutReport {
    pub aut_order: usize,
    pub inner_order: usize,
    pub out_order: usize,
    pub reflection_action_image_order: usize,
    pub is_full_s5: bool,
    pub closed_under_composition: bool,
    pub kernel_equals_inner: bool,
    pub image_generators: Vec<String>,
}

/// Runs the search, the closure check and the reflection action.
pub fn aut_report(
    group: &FiniteMatrixGroup,
    classes: &ReflectionClassSet,
    cap: u64,
    workers: usize,
    labels: &[&str; 5],
) -> Result<AutReport, AutError> {
    let autos = automorphism_group(group, cap, workers)?;
    let inner_order = inner_automorphisms(group).len();
    let action = out_action_on_reflections(group, classes, &autos)?;
    let generators = image_generators(&action.image);
    Ok(AutReport {
        aut_order: autos.len(),
        inner_order,
        out_order: autos.len() / inner_order,
        reflection_action_image_order: action.image.len(),
        is_full_s5: action.image.len() == 120,
        closed_under_composition: is_closed(&autos),
        // out_action_on_reflections fails with KernelNotInner otherwise
        kernel_equals_inner: true,
        image_generators: generators
            .iter()
            .map(|g| cycle_notation(g, labels))
            .collect(),
    })
}
