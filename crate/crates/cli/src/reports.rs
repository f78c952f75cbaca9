//! One builder per subcommand. Each returns report content without timing;
//! `run` attaches the `meta` block.

use serde_json::{json, Map, Value};

use sra_core::autos::{aut_report, AutError};
use sra_core::chars::{character_table, CharacterTable};
use sra_core::conditions::{
    hyperplane_set, smoothness, verify_complemma, ConditionContext, Verdict,
};
use sra_core::group::{build_paper_group_with_cap, PaperGroup, REFLECTION_LABELS};
use sra_core::hp0::{hp0_graded_dims, invertible_class_count, molien_dims};
use sra_core::reflections::{
    find_reflections, reflections_equal_noncentral_involutions, ReflectionClassSet,
    ReflectionParameter,
};

use crate::{Failure, EXIT_OK, EXIT_SINGULAR, EXIT_VERIFICATION};

/// Reference values quoted from the source results.
mod reference {
    pub const ORDER: usize = 32;
    pub const CLASS_COUNT: usize = 17;
    pub const CENTER_SIZE: usize = 2;
    pub const ABELIANIZATION_ORDER: usize = 16;
    pub const REFLECTION_COUNT: usize = 10;
    pub const REFLECTION_CLASS_COUNT: usize = 5;
    pub const LINEAR_CHARACTERS: usize = 16;
    pub const HYPERPLANES: usize = 21;
    /// Nonzero multiplicity tuples, counting the full regular tuple.
    pub const NONZERO_TUPLES: u64 = 5 * (1 << 16) - 1;
    pub const ZERO_DIM_LEAF_BOUND: usize = 10;
    pub const HP0_DIMENSION: usize = 10;
    pub const INVERTIBLE_CLASS_COUNT: usize = 10;
    pub const OUT_ORDER: usize = 120;
    pub const INNER_ORDER: usize = 16;
}

pub struct Report {
    pub content: Map<String, Value>,
    pub exit_code: i32,
}

/// Collects report fields together with their provenance.
struct Builder {
    content: Map<String, Value>,
    provenance: Map<String, Value>,
}

impl Builder {
    fn new() -> Self {
        Self {
            content: Map::new(),
            provenance: Map::new(),
        }
    }

    fn computed(&mut self, key: &str, value: Value) -> &mut Self {
        self.put(key, value, "computed")
    }

    fn reference(&mut self, key: &str, value: Value) -> &mut Self {
        self.put(key, value, "paper_reference")
    }

    fn input(&mut self, key: &str, value: Value) -> &mut Self {
        self.put(key, value, "input")
    }

    fn note(&mut self, key: &str, value: Value) -> &mut Self {
        self.content.insert(key.into(), value);
        self
    }

    fn put(&mut self, key: &str, value: Value, source: &str) -> &mut Self {
        self.content.insert(key.into(), value);
        self.provenance.insert(key.into(), source.into());
        self
    }

    fn finish(mut self, exit_code: i32) -> Report {
        self.content
            .insert("provenance".into(), Value::Object(self.provenance));
        Report {
            content: self.content,
            exit_code,
        }
    }
}

/// Group, table, condition context and reflection labels, built once.
pub struct Setting {
    pub pg: PaperGroup,
    pub table: CharacterTable,
    pub ctx: ConditionContext,
    pub classes: ReflectionClassSet,
}

impl Setting {
    pub fn build(closure_cap: usize) -> Result<Self, Failure> {
        let pg = build_paper_group_with_cap(closure_cap)
            .map_err(|e| Failure::Usage(format!("group construction: {e}")))?;
        let table = character_table(&pg.group)
            .map_err(|e| Failure::Verification(format!("character table: {e}")))?;
        let ctx = ConditionContext::new(&pg, &table);
        let classes = ReflectionClassSet::from_paper_group(&pg)
            .map_err(|e| Failure::Verification(format!("reflection classes: {e}")))?;
        Ok(Self {
            pg,
            table,
            ctx,
            classes,
        })
    }
}

pub fn facts(s: &Setting) -> Report {
    let g = &s.pg.group;
    let classes = g.conjugacy_classes();
    let structure = g.structure();
    let reflections = find_reflections(g);
    let preserves = g.preserves_form(&s.pg.omega);
    let equal_involutions = reflections_equal_noncentral_involutions(g);
    let reflection_classes: Vec<Value> = (0..5)
        .map(|slot| {
            let rep = s.classes.representatives[slot];
            json!({
                "label": REFLECTION_LABELS[slot],
                "representative_index": rep,
                "representative": g.matrix(rep).to_string(),
                "members": s.classes.members[slot],
            })
        })
        .collect();
    let checks = json!({
        "order": g.order() == reference::ORDER,
        "class_count": classes.len() == reference::CLASS_COUNT,
        "center_size": structure.center.len() == reference::CENTER_SIZE,
        "abelianization_order": structure.abelianization_order == reference::ABELIANIZATION_ORDER,
        "preserves_form": preserves,
        "reflection_count": reflections.len() == reference::REFLECTION_COUNT,
        "reflections_equal_noncentral_involutions": equal_involutions,
    });
    let verified = checks
        .as_object()
        .unwrap()
        .values()
        .all(|v| v.as_bool() == Some(true));

    let mut b = Builder::new();
    b.computed("order", json!(g.order()))
        .computed("class_count", json!(classes.len()))
        .computed(
            "class_sizes",
            json!(classes.iter().map(|c| c.size()).collect::<Vec<_>>()),
        )
        .computed("center_size", json!(structure.center.len()))
        .computed(
            "abelianization_order",
            json!(structure.abelianization_order),
        )
        .computed("preserves_form", json!(preserves))
        .computed("reflection_count", json!(reflections.len()))
        .computed(
            "reflections_equal_noncentral_involutions",
            json!(equal_involutions),
        )
        .computed("reflection_classes", Value::Array(reflection_classes))
        .reference(
            "expected",
            json!({
                "order": reference::ORDER,
                "class_count": reference::CLASS_COUNT,
                "center_size": reference::CENTER_SIZE,
                "abelianization_order": reference::ABELIANIZATION_ORDER,
                "reflection_count": reference::REFLECTION_COUNT,
                "reflection_class_count": reference::REFLECTION_CLASS_COUNT,
            }),
        )
        .computed("checks", checks)
        .computed("verified", json!(verified));
    b.finish(if verified { EXIT_OK } else { EXIT_VERIFICATION })
}

pub fn chartable(s: &Setting) -> Report {
    let g = &s.pg.group;
    let t = &s.table;
    let n = t.class_count();
    let sizes: Vec<i64> = t.class_sizes.iter().map(|&x| x as i64).collect();
    let classes: Vec<Value> = (0..n)
        .map(|k| {
            let rep = t.class_reps[k];
            json!({
                "label": format!("C{k}"),
                "representative_index": rep,
                "representative": g.matrix(rep).to_string(),
                "size": t.class_sizes[k],
                "element_order": g.element_order(rep),
            })
        })
        .collect();
    let rows: Vec<Value> = t
        .rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let label = if k < t.linear_rows().len() {
                format!("chi{k}")
            } else {
                "chi_V".to_string()
            };
            json!({"label": label, "values": r.values})
        })
        .collect();
    let rows_orthogonal = t.rows.iter().enumerate().all(|(a, ra)| {
        t.rows.iter().enumerate().all(|(b, rb)| {
            let dot: i64 = (0..n).map(|k| sizes[k] * ra.at(k) * rb.at(k)).sum();
            dot == if a == b { t.group_order as i64 } else { 0 }
        })
    });
    let columns_orthogonal = (0..n).all(|k| {
        (0..n).all(|l| {
            let dot: i64 = t.rows.iter().map(|r| r.at(k) * r.at(l)).sum();
            dot == if k == l {
                t.group_order as i64 / sizes[k]
            } else {
                0
            }
        })
    });
    let sum_sq: i64 = t.dims.iter().map(|d| d * d).sum();
    let even_signs = t
        .linear_rows()
        .iter()
        .all(|chi| s.ctx.reflection_values(chi).iter().product::<i64>() == 1);
    let verified = rows_orthogonal
        && columns_orthogonal
        && sum_sq == t.group_order as i64
        && t.linear_rows().len() == reference::LINEAR_CHARACTERS
        && t.rows.len() == reference::CLASS_COUNT
        && even_signs;

    let mut b = Builder::new();
    b.computed("classes", Value::Array(classes))
        .computed("rows", Value::Array(rows))
        .computed("dims", json!(t.dims))
        .computed(
            "checks",
            json!({
                "sum_of_squared_dims": sum_sq,
                "rows_orthogonal": rows_orthogonal,
                "columns_orthogonal": columns_orthogonal,
                "reflection_signs_even": even_signs,
            }),
        )
        .reference(
            "expected",
            json!({
                "irreducible_count": reference::CLASS_COUNT,
                "linear_count": reference::LINEAR_CHARACTERS,
                "sum_of_squared_dims": reference::ORDER,
            }),
        )
        .computed("verified", json!(verified));
    b.finish(if verified { EXIT_OK } else { EXIT_VERIFICATION })
}

pub fn classify(s: &Setting, jobs: usize) -> Result<Report, Failure> {
    let planes = hyperplane_set(&s.table, &s.ctx)
        .map_err(|e| Failure::Verification(format!("hyperplanes: {e}")))?;
    let r = verify_complemma(&s.table, &s.ctx, &planes, jobs);
    let per_hyperplane: Map<String, Value> = r
        .per_hyperplane
        .iter()
        .map(|(label, count)| (label.clone(), json!(count)))
        .collect();
    let ok = r.failures.is_empty() && r.verified == r.candidates;
    let mut b = Builder::new();
    b.computed("candidates", json!(r.candidates))
        .computed("verified", json!(r.verified))
        .computed("failures", json!(r.failures))
        .computed("per_hyperplane", Value::Object(per_hyperplane))
        .computed("zero_systems", json!(r.zero_systems))
        .computed("hyperplane_count", json!(planes.len()))
        .reference("reference_hyperplane_count", json!(reference::HYPERPLANES))
        .reference("reference_nonzero_tuples", json!(reference::NONZERO_TUPLES))
        .note(
            "notes",
            json!([
                "reference_nonzero_tuples counts every nonzero multiplicity tuple, \
                 including the full regular representation; candidates excludes it \
                 because its system is identically zero"
            ]),
        );
    Ok(b.finish(if ok { EXIT_OK } else { EXIT_VERIFICATION }))
}

fn smoothness_parts(s: &Setting, c: &ReflectionParameter) -> Result<Builder, Failure> {
    let planes = hyperplane_set(&s.table, &s.ctx)
        .map_err(|e| Failure::Verification(format!("hyperplanes: {e}")))?;
    let r = smoothness(c, &planes);
    let mut b = Builder::new();
    b.input("c", c.to_json())
        .computed("verdict", json!(r.verdict))
        .computed("hyperplanes_hit", json!(r.hyperplanes_hit))
        .computed("two_dim_leaves", json!(r.two_dim_leaves))
        .reference("zero_dim_leaf_bound", json!(reference::ZERO_DIM_LEAF_BOUND));
    Ok(b)
}

pub fn smooth(s: &Setting, c: &ReflectionParameter) -> Result<Report, Failure> {
    let b = smoothness_parts(s, c)?;
    let singular = b.content["verdict"] == json!(Verdict::Singular);
    Ok(b.finish(if singular { EXIT_SINGULAR } else { EXIT_OK }))
}

pub fn leaves(s: &Setting, c: &ReflectionParameter) -> Result<Report, Failure> {
    let mut b = smoothness_parts(s, c)?;
    let zero: Vec<&str> = c
        .zero_slots()
        .iter()
        .map(|&k| REFLECTION_LABELS[k])
        .collect();
    b.computed("vanishing_classes", json!(zero));
    Ok(b.finish(EXIT_OK))
}

pub fn hp0(s: &Setting, max_degree: usize, jobs: usize) -> Result<Report, Failure> {
    let g = &s.pg.group;
    let dims = hp0_graded_dims(g, &s.pg.omega, max_degree, jobs)
        .map_err(|e| Failure::Verification(format!("hp0: {e}")))?;
    let census =
        invertible_class_count(g).map_err(|e| Failure::Verification(format!("hp0: {e}")))?;
    let matches = dims.cumulative_hp0 == reference::HP0_DIMENSION;
    let census_matches = census.count == reference::INVERTIBLE_CLASS_COUNT;
    let mut notes = Vec::new();
    if !dims.stabilized {
        notes.push(format!(
            "inconclusive: hp0_dim is not zero in each of the last 4 degrees up to {max_degree}"
        ));
    }
    if !matches {
        notes.push(format!(
            "cumulative_hp0 = {} differs from the reference value {}",
            dims.cumulative_hp0,
            reference::HP0_DIMENSION
        ));
    }
    if !census_matches {
        notes.push(format!(
            "invertible_class_count = {} differs from the reference value {}",
            census.count,
            reference::INVERTIBLE_CLASS_COUNT
        ));
    }
    let mut b = Builder::new();
    b.computed("cutoff", json!(dims.cutoff))
        .computed("per_degree", json!(dims.per_degree))
        .computed("cumulative_hp0", json!(dims.cumulative_hp0))
        .computed("stabilized", json!(dims.stabilized))
        .computed(
            "status",
            json!(if dims.stabilized {
                "stabilized"
            } else {
                "inconclusive"
            }),
        )
        .reference("reference_hp0_dimension", json!(reference::HP0_DIMENSION))
        .computed("matches_paper", json!(matches))
        .computed("invertible_class_count", json!(census.count))
        .computed(
            "invertible_class_representatives",
            json!(census.representatives),
        )
        .reference(
            "reference_invertible_class_count",
            json!(reference::INVERTIBLE_CLASS_COUNT),
        )
        .computed("invertible_count_matches_paper", json!(census_matches))
        .note("notes", json!(notes));
    Ok(b.finish(EXIT_OK))
}

pub fn molien(s: &Setting, max_degree: usize) -> Result<Report, Failure> {
    let dims = molien_dims(&s.pg.group, max_degree)
        .map_err(|e| Failure::Verification(format!("molien: {e}")))?;
    let mut b = Builder::new();
    b.computed("max_degree", json!(max_degree))
        .computed("dims", json!(dims));
    Ok(b.finish(EXIT_OK))
}

pub fn aut(s: &Setting, search_cap: u64, jobs: usize) -> Result<Report, Failure> {
    let r = aut_report(
        &s.pg.group,
        &s.classes,
        search_cap,
        jobs,
        &REFLECTION_LABELS,
    )
    .map_err(|e| match e {
        AutError::SearchSpaceExceeded { .. } | AutError::TooManyGenerators { .. } => {
            Failure::Usage(format!("aut: {e}"))
        }
        _ => Failure::Verification(format!("aut: {e}")),
    })?;
    let ok = r.is_full_s5
        && r.kernel_equals_inner
        && r.closed_under_composition
        && r.out_order == reference::OUT_ORDER;
    let mut b = Builder::new();
    b.computed("aut_order", json!(r.aut_order))
        .computed("inner_order", json!(r.inner_order))
        .computed("out_order", json!(r.out_order))
        .computed(
            "reflection_action_image_order",
            json!(r.reflection_action_image_order),
        )
        .computed("is_full_s5", json!(r.is_full_s5))
        .computed("kernel_equals_inner", json!(r.kernel_equals_inner))
        .computed(
            "closed_under_composition",
            json!(r.closed_under_composition),
        )
        .computed("image_generators", json!(r.image_generators))
        .reference("reference_out_order", json!(reference::OUT_ORDER))
        .reference("reference_inner_order", json!(reference::INNER_ORDER));
    Ok(b.finish(if ok { EXIT_OK } else { EXIT_VERIFICATION }))
}
