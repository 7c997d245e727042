//! Hypothesis checkers for the saturation criteria on completions and for
//! the construction of saturated systems by adding automorphisms.
//!
//! Reports record each hypothesis outcome next to an independent
//! saturation check; they never assume a conclusion.

use alloc::string::String;
use alloc::vec::Vec;

use crate::fusion::FusionSystem;
use crate::group::{FiniteGroup, Subgroup};
use crate::hom::{AutGroup, GroupMap};
use crate::orbit::{GraphMode, OrbitContext};
use crate::tree::{induce_fusion_tree, theorem_a_check, FusionTree, RootedCompletion, TheoremAReport, TreeOfGroups};
use crate::{Error, Limits, Result};

/// Why a subgroup was examined for centricity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckReason {
    /// The image of `S(v)` for the named vertex.
    VertexSylow(String),
    /// Conjugate to an essential subgroup of the named vertex system.
    Essential(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentricRecord {
    pub subgroup: Subgroup,
    pub reasons: Vec<CheckReason>,
    pub centric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRecord {
    pub subgroup: Subgroup,
    pub vertices: usize,
    pub edges: usize,
    pub is_tree: bool,
}

#[derive(Clone, Debug)]
pub struct TheoremBReport {
    pub root: String,
    pub completion: RootedCompletion,
    pub condition_a: Vec<CentricRecord>,
    pub condition_b: Vec<TreeRecord>,
    pub hypothesis_a: bool,
    pub hypothesis_b: bool,
    /// Independent saturation check of the completion.
    pub saturated: bool,
}

impl TheoremBReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypothesis_a && self.hypothesis_b
    }

    /// Hypotheses imply saturation; `false` only on a discrepancy.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold() || self.saturated
    }
}

pub fn verify_theorem_b(t: &FusionTree, limits: &Limits) -> Result<TheoremBReport> {
    for (v, f) in t.vertex_systems.iter().enumerate() {
        if !f.is_saturated(limits)?.saturated {
            return Err(Error::Precondition(alloc::format!(
                "vertex system at {} is not saturated",
                t.tree.vertices()[v]
            )));
        }
    }
    let c = t.completion(limits)?;
    let f = &c.system;
    let emb = &c.embeddings;
    let mut flagged: Vec<(Subgroup, CheckReason)> = Vec::new();
    for (v, fv) in t.vertex_systems.iter().enumerate() {
        let name = &t.tree.vertices()[v];
        flagged.push((emb.vertex_image(v), CheckReason::VertexSylow(name.clone())));
        for q in fv.subgroups() {
            if fv.status(q, limits)?.essential {
                let mut m: Vec<u32> = q.members().iter().map(|&x| emb.vertices[v][x as usize]).collect();
                m.sort_unstable();
                flagged.push((Subgroup::from_sorted(m), CheckReason::Essential(name.clone())));
            }
        }
    }
    flagged.sort();
    let mut condition_a: Vec<CentricRecord> = Vec::new();
    for (q, why) in flagged {
        match condition_a.last_mut() {
            Some(r) if r.subgroup == q => {
                if !r.reasons.contains(&why) {
                    r.reasons.push(why);
                }
            }
            _ => condition_a.push(CentricRecord {
                centric: f.is_centric(&q)?,
                subgroup: q,
                reasons: alloc::vec![why],
            }),
        }
    }
    let cx = OrbitContext::new(t, &c, limits);
    let mut condition_b = Vec::new();
    for p in f.subgroups() {
        if !f.is_centric(p)? {
            continue;
        }
        let g = cx.build_rep_graph(p, GraphMode::Restricted)?;
        condition_b.push(TreeRecord {
            subgroup: p.clone(),
            vertices: g.vertices.len(),
            edges: g.edges.len(),
            is_tree: g.is_tree(),
        });
    }
    let saturated = f.is_saturated(limits)?.saturated;
    Ok(TheoremBReport {
        root: t.tree.vertices()[c.root()].clone(),
        hypothesis_a: condition_a.iter().all(|r| r.centric),
        hypothesis_b: condition_b.iter().all(|r| r.is_tree),
        condition_a,
        condition_b,
        saturated,
        completion: c,
    })
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub theorem_b: TheoremBReport,
    pub theorem_a: Option<TheoremAReport>,
}

/// Saturation of the fusion system of a tree of groups whose vertex groups
/// have p'-index edge groups toward some root.
pub fn verify_corollary_groups(
    tg: &TreeOfGroups,
    p: u64,
    candidate: Option<(&FiniteGroup, &[GroupMap])>,
    limits: &Limits,
) -> Result<CorollaryReport> {
    if let Err(bad) = tg.index_condition(p) {
        let (e, v) = bad[0];
        return Err(Error::Precondition(alloc::format!(
            "{p} divides |G({}):G({})|; no root has p'-index edges",
            tg.tree.vertices()[v],
            tg.tree.edges()[e].id
        )));
    }
    let ft = induce_fusion_tree(tg, p, limits)?;
    let theorem_b = verify_theorem_b(&ft, limits)?;
    let theorem_a = match candidate {
        Some((g, embs)) => Some(theorem_a_check(tg, p, g, embs, limits)?),
        None => None,
    };
    Ok(CorollaryReport { theorem_b, theorem_a })
}

/// A subgroup of `S` with automorphism tables (in member order) whose
/// images generate the overgroup `Δ` of `Out_{F0}(Q)` in `Out(Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCTarget {
    pub q: Subgroup,
    pub delta_gens: Vec<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub struct TheoremCSpec {
    pub f0: FusionSystem,
    pub targets: Vec<TheoremCTarget>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetRecord {
    pub q: Subgroup,
    pub fully_normalised: bool,
    /// No F0-image of this target lies in another target.
    pub not_contained: bool,
    pub k_order: usize,
    pub delta_order: usize,
    pub k_in_delta: bool,
    pub strongly_p_embedded: bool,
    pub f0_centric: bool,
    /// `None` until the system is built.
    pub f_centric: Option<bool>,
    /// No F-centric subgroup lies properly inside `Q`.
    pub minimal: Option<bool>,
    /// No proper subgroup of `Q` is F0-essential.
    pub no_proper_essential: bool,
}

impl TargetRecord {
    fn invariants_hold(&self) -> bool {
        self.fully_normalised && self.not_contained && self.k_in_delta && self.strongly_p_embedded
    }

    fn first_failure(&self) -> Option<&'static str> {
        [
            (self.fully_normalised, "Q is not fully F0-normalised"),
            (self.not_contained, "an F0-image of Q lies in another target"),
            (self.k_in_delta, "Out_F0(Q) is not contained in the given overgroup"),
            (
                self.strongly_p_embedded,
                "Out_F0(Q) is not strongly p-embedded in the given overgroup",
            ),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, why)| why)
    }

    fn hypotheses_hold(&self) -> bool {
        self.f0_centric && self.f_centric == Some(true) && self.minimal == Some(true) && self.no_proper_essential
    }
}

#[derive(Clone, Debug)]
pub struct TheoremCReport {
    pub f0_saturated: bool,
    pub targets: Vec<TargetRecord>,
    /// First failed invariant as `(target index, reason)`.
    pub rejection: Option<(usize, String)>,
    pub system: Option<FusionSystem>,
    pub contains_f0: Option<bool>,
    pub hypotheses_hold: bool,
    /// Saturation of the built system; computed when every hypothesis holds.
    pub saturated: Option<bool>,
}

impl TheoremCReport {
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold || self.saturated == Some(true)
    }
}

fn target_record(
    f0: &FusionSystem,
    i: usize,
    targets: &[TheoremCTarget],
    limits: &Limits,
) -> Result<(TargetRecord, Vec<GroupMap>)> {
    let t = &targets[i];
    let s = f0.group();
    let q = &t.q;
    f0.index(q)?;
    let aut = AutGroup::full(s, q, limits)?;
    let mut gens = Vec::new();
    let mut maps = Vec::new();
    for d in &t.delta_gens {
        let a = aut.index_of_table(d).ok_or_else(|| {
            Error::InvalidInput(alloc::format!("target {i}: a generator is not an automorphism of Q"))
        })?;
        gens.push(a);
        maps.push(GroupMap::from_table(q.clone(), s.whole(), d.clone()));
    }
    let out = aut.out();
    let delta_aut = aut.group().close(&gens);
    let delta = out.project_subgroup(&delta_aut);
    let k_aut = aut.subgroup_of_tables(f0.aut_tables(q)?)?;
    let k = out.project_subgroup(&k_aut);
    let k_in_delta = k.is_subgroup_of(&delta);
    let strongly_p_embedded = k_in_delta && {
        let dg = out.group().subgroup_as_group(&delta);
        let kk: Vec<u32> = k.members().iter().map(|&x| delta.position(x).unwrap() as u32).collect();
        let kk = dg.try_subgroup(&kk)?;
        dg.is_strongly_p_embedded(&kk, f0.p())
    };
    let mut not_contained = true;
    for (j, other) in targets.iter().enumerate() {
        if j != i && f0.tables(q)?.iter().any(|tb| tb.iter().all(|&y| other.q.contains(y))) {
            not_contained = false;
        }
    }
    let mut no_proper_essential = true;
    for p in f0.subgroups() {
        if p.order() < q.order() && p.is_subgroup_of(q) && f0.status(p, limits)?.essential {
            no_proper_essential = false;
        }
    }
    Ok((
        TargetRecord {
            q: q.clone(),
            fully_normalised: f0.is_fully_normalised(q)?,
            not_contained,
            k_order: k.order(),
            delta_order: delta.order(),
            k_in_delta,
            strongly_p_embedded,
            f0_centric: f0.is_centric(q)?,
            f_centric: None,
            minimal: None,
            no_proper_essential,
        },
        maps,
    ))
}

/// Checks every target, builds `F = ⟨F0, Δ_i⟩` when the targets are
/// admissible, and checks the remaining hypotheses and saturation.
pub fn construct_theorem_c(spec: &TheoremCSpec, limits: &Limits) -> Result<TheoremCReport> {
    let f0 = &spec.f0;
    let f0_saturated = f0.is_saturated(limits)?.saturated;
    let mut targets = Vec::new();
    let mut seeds = f0.push_forward(&(0..f0.group().order() as u32).collect::<Vec<_>>(), &f0.s());
    for i in 0..spec.targets.len() {
        let (r, maps) = target_record(f0, i, &spec.targets, limits)?;
        targets.push(r);
        seeds.extend(maps);
    }
    let rejection = if !f0_saturated {
        Some((usize::MAX, "F0 is not saturated".into()))
    } else {
        targets
            .iter()
            .enumerate()
            .find_map(|(i, r)| r.first_failure().map(|why| (i, String::from(why))))
    };
    let mut report = TheoremCReport {
        f0_saturated,
        rejection,
        targets,
        system: None,
        contains_f0: None,
        hypotheses_hold: false,
        saturated: None,
    };
    if report.rejection.is_some() {
        return Ok(report);
    }
    let f = FusionSystem::generate(f0.group().clone(), f0.p(), &seeds, limits)?;
    for r in &mut report.targets {
        r.f_centric = Some(f.is_centric(&r.q)?);
        let mut minimal = true;
        for p in f.subgroups() {
            if p.order() < r.q.order() && p.is_subgroup_of(&r.q) && f.is_centric(p)? {
                minimal = false;
            }
        }
        r.minimal = Some(minimal);
    }
    report.contains_f0 = Some(f0.is_subsystem_of(&f)?);
    report.hypotheses_hold = report
        .targets
        .iter()
        .all(|r| r.invariants_hold() && r.hypotheses_hold());
    if report.hypotheses_hold {
        report.saturated = Some(f.is_saturated(limits)?.saturated);
    }
    report.system = Some(f);
    Ok(report)
}

/// Automorphism tables of `q` generating all of `Aut(q)`; a convenient
/// overgroup for small targets.
pub fn full_automorphism_generators(s: &FiniteGroup, q: &Subgroup, limits: &Limits) -> Result<Vec<Vec<u32>>> {
    let aut = AutGroup::full(s, q, limits)?;
    let g = aut.group();
    Ok(g.generators_of(&g.whole()).into_iter().map(|a| aut.table(a)).collect())
}
