//! One function per subcommand. Each returns the rendered report in every
//! format it supports together with its exit code.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use fuscat_core::amalgam::{Amalgam, AmalgamWord, Factored, Side};
use fuscat_core::fusion::{Axiom, WitnessKind};
use fuscat_core::group::FiniteGroup;
use fuscat_core::orbit::{GraphMode, OrbitContext, RepGraph, Site};
use fuscat_core::theorems::{construct_theorem_c, verify_corollary_groups, CheckReason};
use fuscat_core::tree::{
    find_completion_embeddings, induce_fusion_tree, theorem_a_check, FusionTree, TheoremAReport, TreeOfGroups,
};
use fuscat_core::{FusionSystem, GroupMap, Limits};

use crate::dot;
use crate::error::{input, CliResult};
use crate::formats::{self, CompletionInput};
use crate::presets;
use crate::report::{self, gens, map_out, status_lines, subgroup, to_json, yes, MapOut, SubgroupOut, SystemOut};

/// A finished command: its exit code and renderings.
pub struct Outcome {
    pub exit: i32,
    pub json: String,
    pub text: String,
    pub dot: Option<String>,
}

impl Outcome {
    fn new<T: Serialize>(verdict: bool, report: &T, text: Vec<String>, dot: Option<String>) -> Outcome {
        let mut text = text.join("\n");
        text.push('\n');
        Outcome {
            exit: if verdict { 0 } else { 1 },
            json: to_json(report),
            text,
            dot,
        }
    }
}

// ---- group-info ----------------------------------------------------------

#[derive(Serialize)]
struct OrderCount {
    order: u32,
    count: usize,
}

#[derive(Serialize)]
struct SylowOut {
    p: u64,
    subgroup: SubgroupOut,
    count: usize,
}

#[derive(Serialize)]
struct GroupInfo {
    command: &'static str,
    verdict: bool,
    name: Option<String>,
    degree: usize,
    order: usize,
    generators: Vec<String>,
    exponent: u32,
    abelian: bool,
    center: SubgroupOut,
    element_orders: Vec<OrderCount>,
    sylow: Vec<SylowOut>,
}

fn prime_divisors(mut n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as u64);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

pub fn group_info(path: &Path, p: Option<u64>, limits: &Limits) -> CliResult<Outcome> {
    let g = formats::load_group_file(path, limits)?;
    let whole = g.whole();
    let primes = match p {
        Some(p) if !fuscat_core::is_prime(p) => return Err(input(format!("{p} is not prime"))),
        Some(p) => vec![p],
        None => prime_divisors(g.order()),
    };
    let mut sylow = Vec::new();
    for &q in &primes {
        let s = g.sylow_subgroup(q)?;
        sylow.push(SylowOut {
            p: q,
            subgroup: subgroup(&g, &s),
            count: g.order() / g.normalizer(&s, &whole).order(),
        });
    }
    let center = g.center(&whole);
    let r = GroupInfo {
        command: "group-info",
        verdict: true,
        name: g.name().map(str::to_string),
        degree: g.degree(),
        order: g.order(),
        generators: g.generators().iter().map(|x| x.cycle_string()).collect(),
        exponent: g.exponent(&whole),
        abelian: center.order() == g.order(),
        center: subgroup(&g, &center),
        element_orders: g
            .order_statistics(&whole)
            .into_iter()
            .map(|(order, count)| OrderCount { order, count })
            .collect(),
        sylow,
    };
    let mut text = vec![
        format!(
            "group {} of degree {}",
            r.name.as_deref().unwrap_or("(unnamed)"),
            r.degree
        ),
        format!("order {}, exponent {}, abelian {}", r.order, r.exponent, yes(r.abelian)),
        format!("centre {}", gens(&r.center)),
    ];
    for s in &r.sylow {
        text.push(format!(
            "Sylow {}-subgroup of order {} ({} conjugates): {}",
            s.p,
            s.subgroup.order,
            s.count,
            gens(&s.subgroup)
        ));
    }
    Ok(Outcome::new(true, &r, text, None))
}

// ---- fusion / saturation -------------------------------------------------

#[derive(Serialize)]
struct FusionReport {
    command: &'static str,
    verdict: bool,
    p: u64,
    source: &'static str,
    seeds: Option<usize>,
    system: SystemOut,
}

fn source(seeds: Option<usize>) -> &'static str {
    if seeds.is_some() {
        "generated"
    } else {
        "group"
    }
}

pub fn fusion(path: &Path, p: Option<u64>, limits: &Limits) -> CliResult<Outcome> {
    let inp = formats::load_system(path, p, limits)?;
    let f = &inp.system;
    let r = FusionReport {
        command: "fusion",
        verdict: true,
        p: f.p(),
        source: source(inp.seeds),
        seeds: inp.seeds,
        system: report::system_out(f, limits)?,
    };
    let mut text = vec![
        f.describe(),
        format!(
            "O_p = {}, constrained {}",
            gens(&r.system.normal.o_p),
            yes(r.system.normal.constrained)
        ),
        format!("{} classes:", r.system.classes.len()),
    ];
    text.extend(status_lines(&r.system.classes));
    Ok(Outcome::new(true, &r, text, None))
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WitnessDetail {
    NotFullyCentralised { conjugate: SubgroupOut },
    NotFullyAutomised { aut_s_order: usize, aut_f_order: usize },
    NoExtension { n_phi: SubgroupOut },
}

#[derive(Serialize)]
struct WitnessOut {
    axiom: &'static str,
    subgroup: SubgroupOut,
    morphism: MapOut,
    detail: WitnessDetail,
    rechecked: bool,
}

#[derive(Serialize)]
struct ClassOut {
    representative: SubgroupOut,
    class_size: usize,
    fully_centralised: bool,
    fully_automised: bool,
    aut_f_order: usize,
    aut_s_order: usize,
}

#[derive(Serialize)]
struct SaturationOut {
    command: &'static str,
    verdict: bool,
    p: u64,
    s_order: usize,
    source: &'static str,
    saturated: bool,
    extension_checks: usize,
    classes: Vec<ClassOut>,
    failures: Vec<WitnessOut>,
}

pub fn saturation(path: &Path, p: Option<u64>, limits: &Limits) -> CliResult<Outcome> {
    let inp = formats::load_system(path, p, limits)?;
    let f = &inp.system;
    let g = f.group();
    let rep = f.is_saturated(limits)?;
    let failures: Vec<WitnessOut> = rep
        .failures
        .iter()
        .map(|w| WitnessOut {
            axiom: match w.axiom {
                Axiom::A => "A",
                Axiom::B => "B",
            },
            subgroup: subgroup(g, &w.subgroup),
            morphism: map_out(g, &w.morphism),
            detail: match &w.kind {
                WitnessKind::NotFullyCentralised { conjugate } => WitnessDetail::NotFullyCentralised {
                    conjugate: subgroup(g, conjugate),
                },
                WitnessKind::NotFullyAutomised {
                    aut_s_order,
                    aut_f_order,
                } => WitnessDetail::NotFullyAutomised {
                    aut_s_order: *aut_s_order,
                    aut_f_order: *aut_f_order,
                },
                WitnessKind::NoExtension { n_phi } => WitnessDetail::NoExtension {
                    n_phi: subgroup(g, n_phi),
                },
            },
            rechecked: w.recheck(f),
        })
        .collect();
    let r = SaturationOut {
        command: "saturation",
        verdict: rep.saturated,
        p: f.p(),
        s_order: g.order(),
        source: source(inp.seeds),
        saturated: rep.saturated,
        extension_checks: rep.extension_checks,
        classes: rep
            .classes
            .iter()
            .map(|c| ClassOut {
                representative: subgroup(g, &c.representative),
                class_size: c.class_size,
                fully_centralised: c.fully_centralised,
                fully_automised: c.fully_automised,
                aut_f_order: c.aut_f_order,
                aut_s_order: c.aut_s_order,
            })
            .collect(),
        failures,
    };
    let mut text = vec![f.describe(), rep.summary()];
    for w in &r.failures {
        text.push(format!(
            "  witness on {}: {} -> {}",
            gens(&w.subgroup),
            w.morphism.generators.join(", "),
            w.morphism.images.join(", ")
        ));
    }
    Ok(Outcome::new(rep.saturated, &r, text, None))
}

// ---- trees ---------------------------------------------------------------

#[derive(Serialize)]
struct SiteOut {
    id: String,
    group_order: usize,
    s_order: usize,
}

#[derive(Serialize)]
struct EdgeOut {
    id: String,
    ends: [String; 2],
    group_order: usize,
    s_order: usize,
}

#[derive(Serialize)]
struct ViolationOut {
    edge: String,
    vertex: String,
    reason: String,
}

#[derive(Serialize)]
struct RootFailure {
    root: String,
    edge: String,
    vertex: String,
}

#[derive(Serialize)]
struct HypothesisH {
    holds: bool,
    root: Option<String>,
    qualifying_roots: Vec<String>,
    /// For each rejected root, the first edge whose mono toward it is not
    /// onto `S(vertex)`.
    failures: Vec<RootFailure>,
}

#[derive(Serialize)]
struct EmbeddingOut {
    vertex: String,
    map: MapOut,
}

#[derive(Serialize)]
struct TheoremAOut {
    group_order: usize,
    embeddings_searched: bool,
    embeddings: Vec<EmbeddingOut>,
    sylow: bool,
    fusion_equal: bool,
}

fn tree_sites(tg: &TreeOfGroups, ft: &FusionTree) -> (Vec<SiteOut>, Vec<EdgeOut>) {
    let t = &tg.tree;
    let vertices = t
        .vertices()
        .iter()
        .enumerate()
        .map(|(v, id)| SiteOut {
            id: id.clone(),
            group_order: tg.vertex_groups[v].order(),
            s_order: ft.vertex_systems[v].group().order(),
        })
        .collect();
    let edges = t
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| EdgeOut {
            id: edge.id.clone(),
            ends: edge.ends.map(|v| t.vertices()[v].clone()),
            group_order: tg.edge_groups[e].order(),
            s_order: ft.edge_systems[e].group().order(),
        })
        .collect();
    (vertices, edges)
}

fn hypothesis_h(ft: &FusionTree) -> HypothesisH {
    let t = &ft.tree;
    let roots = ft.qualifying_roots();
    let mut failures = Vec::new();
    for r in 0..t.vertices().len() {
        if roots.contains(&r) {
            continue;
        }
        let par = t.parents(r);
        let bad = (0..par.len()).find_map(|v| {
            let (e, w) = par[v]?;
            let k = t.side(e, w)?;
            let onto = ft.monos[e][k].image().order() == ft.vertex_systems[w].group().order();
            (!onto).then_some((e, w))
        });
        if let Some((e, w)) = bad {
            failures.push(RootFailure {
                root: t.vertices()[r].clone(),
                edge: t.edges()[e].id.clone(),
                vertex: t.vertices()[w].clone(),
            });
        }
    }
    HypothesisH {
        holds: !roots.is_empty(),
        root: roots.first().map(|&r| t.vertices()[r].clone()),
        qualifying_roots: roots.iter().map(|&r| t.vertices()[r].clone()).collect(),
        failures,
    }
}

fn embedding_out(tg: &TreeOfGroups, g: &FiniteGroup, embs: &[GroupMap]) -> Vec<EmbeddingOut> {
    tg.vertex_groups
        .iter()
        .zip(embs)
        .zip(tg.tree.vertices())
        .map(|((gv, m), id)| {
            let gs = gv.generators_of(&gv.whole());
            EmbeddingOut {
                vertex: id.clone(),
                map: MapOut {
                    generators: gs.iter().map(|&x| report::cycles(gv, x)).collect(),
                    images: gs.iter().map(|&x| report::cycles(g, m.images()[x as usize])).collect(),
                },
            }
        })
        .collect()
}

/// Resolves the candidate completion's embeddings, searching if needed.
/// `Ok(None)` when the search finds nothing.
fn candidate_embeddings(
    tg: &TreeOfGroups,
    c: &CompletionInput,
    limits: &Limits,
) -> CliResult<Option<(Vec<GroupMap>, bool)>> {
    match &c.embeddings {
        Some(e) => Ok(Some((e.clone(), false))),
        None => Ok(find_completion_embeddings(tg, &c.group, limits)?.map(|e| (e, true))),
    }
}

fn theorem_a_out(
    tg: &TreeOfGroups,
    g: &FiniteGroup,
    embs: &[GroupMap],
    searched: bool,
    rep: &TheoremAReport,
) -> TheoremAOut {
    TheoremAOut {
        group_order: rep.group_order,
        embeddings_searched: searched,
        embeddings: embedding_out(tg, g, embs),
        sylow: rep.sylow,
        fusion_equal: rep.fusion_equal,
    }
}

#[derive(Serialize)]
struct FactorizationOut {
    morphisms: usize,
    reproduced: usize,
    longest_chain: usize,
    missing: Option<MapOut>,
}

#[derive(Serialize)]
struct RerootOut {
    root: String,
    equal: bool,
}

#[derive(Serialize)]
struct CompletionOut {
    root: String,
    system: SystemOut,
    edges_redundant: bool,
    trivial_edges_equal: bool,
    factorization: FactorizationOut,
    rerooting: Vec<RerootOut>,
}

#[derive(Serialize)]
struct TreeCompletionReport {
    command: &'static str,
    verdict: bool,
    p: u64,
    vertices: Vec<SiteOut>,
    edges: Vec<EdgeOut>,
    violations: Vec<ViolationOut>,
    hypothesis_h: HypothesisH,
    completion: Option<CompletionOut>,
    theorem_a: Option<TheoremAOut>,
    /// Set when a completion candidate was given but no embeddings exist.
    candidate_failure: Option<String>,
}

pub fn tree_completion(path: &Path, p: Option<u64>, limits: &Limits) -> CliResult<Outcome> {
    let inp = formats::load_tree(path, p, limits)?;
    let tg = &inp.groups;
    let ft = induce_fusion_tree(tg, inp.p, limits)?;
    let (vertices, edges) = tree_sites(tg, &ft);
    let violations: Vec<ViolationOut> = ft
        .validate()
        .into_iter()
        .map(|v| ViolationOut {
            edge: v.edge,
            vertex: v.vertex,
            reason: v.reason,
        })
        .collect();
    let h = hypothesis_h(&ft);
    let mut completion = None;
    let mut root = None;
    if violations.is_empty() && h.holds {
        let c = ft.completion(limits)?;
        root = Some(c.root());
        let fact = ft.factorization(&c)?;
        let g = c.system.group();
        let trivial = ft.with_trivial_edges(limits)?.completion_at(c.root(), limits)?;
        completion = Some(CompletionOut {
            root: ft.tree.vertices()[c.root()].clone(),
            system: report::system_out(&c.system, limits)?,
            edges_redundant: c.edges_redundant,
            trivial_edges_equal: trivial.system.equals(&c.system)?,
            factorization: FactorizationOut {
                morphisms: fact.morphisms,
                reproduced: fact.reproduced,
                longest_chain: fact.longest_chain,
                missing: fact.missing.as_ref().map(|m| map_out(g, m)),
            },
            rerooting: ft
                .rerooting_check(&c, limits)?
                .into_iter()
                .map(|(r, equal)| RerootOut {
                    root: ft.tree.vertices()[r].clone(),
                    equal,
                })
                .collect(),
        });
    }
    let mut theorem_a = None;
    let mut candidate_failure = None;
    if let (Some(cand), Some(_)) = (&inp.completion, &completion) {
        match candidate_embeddings(tg, cand, limits)? {
            Some((embs, searched)) => {
                let rep = theorem_a_check(tg, inp.p, &cand.group, &embs, limits)?;
                theorem_a = Some(theorem_a_out(tg, &cand.group, &embs, searched, &rep));
            }
            None => candidate_failure = Some("no embeddings of the vertex groups commute with the monos".into()),
        }
    }
    let verdict = violations.is_empty()
        && h.holds
        && completion.as_ref().is_some_and(|c| {
            c.edges_redundant
                && c.trivial_edges_equal
                && c.factorization.missing.is_none()
                && c.rerooting.iter().all(|r| r.equal)
        })
        && candidate_failure.is_none()
        && theorem_a.as_ref().is_none_or(|a| a.sylow && a.fusion_equal);
    let orders: Vec<usize> = vertices.iter().map(|v| v.s_order).collect();
    let dot = dot::site_tree(&ft.tree, &orders, root, "tree");
    let r = TreeCompletionReport {
        command: "tree-completion",
        verdict,
        p: inp.p,
        vertices,
        edges,
        violations,
        hypothesis_h: h,
        completion,
        theorem_a,
        candidate_failure,
    };
    let mut text = vec![format!(
        "tree with {} vertices and {} edges at p = {}",
        r.vertices.len(),
        r.edges.len(),
        r.p
    )];
    for v in &r.violations {
        text.push(format!("violation at {}:{}: {}", v.edge, v.vertex, v.reason));
    }
    match &r.hypothesis_h.root {
        Some(root) => text.push(format!(
            "hypothesis (H) holds; roots {}, using {root}",
            r.hypothesis_h.qualifying_roots.join(", ")
        )),
        None => {
            text.push("hypothesis (H) fails".into());
            for f in &r.hypothesis_h.failures {
                text.push(format!("  root {}: mono {}:{} is not onto", f.root, f.edge, f.vertex));
            }
        }
    }
    if let Some(c) = &r.completion {
        text.push(format!(
            "completion on |S| = {}: {} subgroups, {} morphisms, {} classes",
            c.system.s.order,
            c.system.subgroups,
            c.system.morphisms,
            c.system.classes.len()
        ));
        text.extend(status_lines(&c.system.classes));
        text.push(format!(
            "edge systems redundant {}, trivial edges give the same completion {}",
            yes(c.edges_redundant),
            yes(c.trivial_edges_equal)
        ));
        text.push(format!(
            "factorization: {}/{} morphisms reproduced, longest chain {}",
            c.factorization.reproduced, c.factorization.morphisms, c.factorization.longest_chain
        ));
        for rr in &c.rerooting {
            text.push(format!("re-rooted at {}: equal {}", rr.root, yes(rr.equal)));
        }
    }
    if let Some(a) = &r.theorem_a {
        text.push(format!(
            "candidate of order {}: image Sylow {}, fusion equal {}",
            a.group_order,
            yes(a.sylow),
            yes(a.fusion_equal)
        ));
    }
    if let Some(f) = &r.candidate_failure {
        text.push(format!("candidate: {f}"));
    }
    Ok(Outcome::new(verdict, &r, text, Some(dot)))
}

// ---- orbit graphs --------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Restricted,
    Full,
}

#[derive(Serialize)]
struct SiteCount {
    site: String,
    kind: &'static str,
    classes: usize,
}

#[derive(Serialize)]
struct VertexClassOut {
    name: String,
    representative: Vec<String>,
}

#[derive(Serialize)]
struct EdgeClassOut {
    site: String,
    ends: [String; 2],
    representative: Vec<String>,
}

#[derive(Serialize)]
struct PhiOut {
    components: usize,
    completion_classes: usize,
    well_defined: bool,
    injective: bool,
    surjective: bool,
}

#[derive(Serialize)]
struct GraphOut {
    subgroup: SubgroupOut,
    mode: &'static str,
    vertex_count: usize,
    edge_count: usize,
    components: usize,
    is_tree: bool,
    sites: Vec<SiteCount>,
    vertices: Vec<VertexClassOut>,
    edges: Vec<EdgeClassOut>,
}

#[derive(Serialize)]
struct OrbitReport {
    command: &'static str,
    verdict: bool,
    p: u64,
    root: String,
    graph: GraphOut,
    phi: PhiOut,
    component_of_inclusion_matches: bool,
}

fn graph_out(ft: &FusionTree, s: &FiniteGroup, g: &RepGraph) -> GraphOut {
    let t = &ft.tree;
    let p = &g.subgroup;
    let pg = s.generators_of(p);
    let rep = |table: &[u32]| -> Vec<String> {
        pg.iter()
            .map(|&x| report::cycles(s, table[p.position(x).unwrap()]))
            .collect()
    };
    let names = dot::vertex_names(t, g);
    let mut sites = Vec::new();
    for v in 0..t.vertices().len() {
        sites.push(SiteCount {
            site: t.vertices()[v].clone(),
            kind: "vertex",
            classes: g.vertices.iter().filter(|c| c.site == Site::Vertex(v)).count(),
        });
    }
    for e in 0..t.edges().len() {
        sites.push(SiteCount {
            site: t.edges()[e].id.clone(),
            kind: "edge",
            classes: g.edges.iter().filter(|c| c.class.site == Site::Edge(e)).count(),
        });
    }
    GraphOut {
        subgroup: subgroup(s, p),
        mode: match g.mode {
            GraphMode::Full => "full",
            GraphMode::Restricted => "restricted",
        },
        vertex_count: g.vertices.len(),
        edge_count: g.edges.len(),
        components: g.component_count(),
        is_tree: g.is_tree(),
        sites,
        vertices: g
            .vertices
            .iter()
            .zip(&names)
            .map(|(c, n)| VertexClassOut {
                name: n.clone(),
                representative: rep(&c.representative),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|e| EdgeClassOut {
                site: dot::site_name(t, e.class.site).to_string(),
                ends: e.ends.map(|k| names[k].clone()),
                representative: rep(&e.class.representative),
            })
            .collect(),
    }
}

fn graph_lines(g: &GraphOut) -> Vec<String> {
    let mut out = vec![format!(
        "{} graph of {}: {} vertices, {} edges, {} component(s), tree {}",
        g.mode,
        gens(&g.subgroup),
        g.vertex_count,
        g.edge_count,
        g.components,
        yes(g.is_tree)
    )];
    for s in &g.sites {
        out.push(format!("  {} {}: {} class(es)", s.kind, s.site, s.classes));
    }
    out
}

pub fn orbit_graph(path: &Path, p: Option<u64>, sub: &str, mode: Mode, limits: &Limits) -> CliResult<Outcome> {
    let inp = formats::load_tree(path, p, limits)?;
    let ft = induce_fusion_tree(&inp.groups, inp.p, limits)?;
    let c = ft.completion(limits)?;
    let ctx = OrbitContext::new(&ft, &c, limits);
    let s = c.system.group();
    let ps = presets::resolve(sub, s, c.system.subgroups(), inp.p, &inp.presets)?;
    let restricted = ctx.build_rep_graph(&ps, GraphMode::Restricted)?;
    let g = match mode {
        Mode::Restricted => restricted.clone(),
        Mode::Full => ctx.build_rep_graph(&ps, GraphMode::Full)?,
    };
    let matches = ctx.component_of_inclusion(&ps)?.same_labels(&restricted);
    let phi = ctx.phi_p_check(&ps)?;
    let verdict = phi.holds() && matches;
    let dot = dot::rep_graph(&ft.tree, &g, "Rep");
    let r = OrbitReport {
        command: "orbit-graph",
        verdict,
        p: inp.p,
        root: ft.tree.vertices()[c.root()].clone(),
        graph: graph_out(&ft, s, &g),
        phi: PhiOut {
            components: phi.components,
            completion_classes: phi.completion_classes,
            well_defined: phi.well_defined,
            injective: phi.injective,
            surjective: phi.surjective,
        },
        component_of_inclusion_matches: matches,
    };
    let mut text = graph_lines(&r.graph);
    text.push(format!(
        "components of the full graph {} vs completion classes {}: bijection {}",
        r.phi.components,
        r.phi.completion_classes,
        yes(phi.holds())
    ));
    text.push(format!(
        "component of the inclusion equals the restricted graph {}",
        yes(matches)
    ));
    Ok(Outcome::new(verdict, &r, text, Some(dot)))
}

// ---- theorem engines -----------------------------------------------------

#[derive(Serialize)]
struct CentricOut {
    subgroup: SubgroupOut,
    reasons: Vec<String>,
    centric: bool,
}

#[derive(Serialize)]
struct TreeCheckOut {
    subgroup: SubgroupOut,
    vertices: usize,
    edges: usize,
    is_tree: bool,
}

#[derive(Serialize)]
struct TheoremBOut {
    command: &'static str,
    verdict: bool,
    p: u64,
    root: String,
    condition_a: Vec<CentricOut>,
    condition_b: Vec<TreeCheckOut>,
    hypothesis_a: bool,
    hypothesis_b: bool,
    saturated: bool,
    consistent: bool,
    completion: SystemOut,
    theorem_a: Option<TheoremAOut>,
    candidate_failure: Option<String>,
}

/// The DOT rendering holds the restricted graph of every subgroup examined
/// by condition (b).
pub fn theorem_b(path: &Path, p: Option<u64>, limits: &Limits) -> CliResult<Outcome> {
    let inp = formats::load_tree(path, p, limits)?;
    let tg = &inp.groups;
    let mut candidate = None;
    let mut candidate_failure = None;
    if let Some(cand) = &inp.completion {
        match candidate_embeddings(tg, cand, limits)? {
            Some(e) => candidate = Some((cand, e)),
            None => candidate_failure = Some("no embeddings of the vertex groups commute with the monos".into()),
        }
    }
    let rep = verify_corollary_groups(
        tg,
        inp.p,
        candidate.as_ref().map(|(c, (e, _))| (&c.group, e.as_slice())),
        limits,
    )?;
    let b = &rep.theorem_b;
    let s = b.completion.system.group();
    let t = &tg.tree;
    let theorem_a = match (&rep.theorem_a, &candidate) {
        (Some(a), Some((c, (e, searched)))) => Some(theorem_a_out(tg, &c.group, e, *searched, a)),
        _ => None,
    };
    let verdict = b.hypotheses_hold()
        && b.saturated
        && b.consistent()
        && candidate_failure.is_none()
        && theorem_a.as_ref().is_none_or(|a| a.sylow && a.fusion_equal);
    // The graphs behind condition (b), for DOT output.
    let ft = induce_fusion_tree(tg, inp.p, limits)?;
    let ctx = OrbitContext::new(&ft, &b.completion, limits);
    let mut dot = String::new();
    for (i, rec) in b.condition_b.iter().enumerate() {
        let g = ctx.build_rep_graph(&rec.subgroup, GraphMode::Restricted)?;
        dot.push_str(&dot::rep_graph(t, &g, &format!("Rep{i}")));
    }
    let r = TheoremBOut {
        command: "theorem-b",
        verdict,
        p: inp.p,
        root: b.root.clone(),
        condition_a: b
            .condition_a
            .iter()
            .map(|c| CentricOut {
                subgroup: subgroup(s, &c.subgroup),
                reasons: c
                    .reasons
                    .iter()
                    .map(|r| match r {
                        CheckReason::VertexSylow(v) => format!("Sylow of {v}"),
                        CheckReason::Essential(v) => format!("essential in {v}"),
                    })
                    .collect(),
                centric: c.centric,
            })
            .collect(),
        condition_b: b
            .condition_b
            .iter()
            .map(|c| TreeCheckOut {
                subgroup: subgroup(s, &c.subgroup),
                vertices: c.vertices,
                edges: c.edges,
                is_tree: c.is_tree,
            })
            .collect(),
        hypothesis_a: b.hypothesis_a,
        hypothesis_b: b.hypothesis_b,
        saturated: b.saturated,
        consistent: b.consistent(),
        completion: report::system_out(&b.completion.system, limits)?,
        theorem_a,
        candidate_failure,
    };
    let mut text = vec![format!("root {}, completion on |S| = {}", r.root, r.completion.s.order)];
    text.push(format!("condition (a), centric subgroups: {}", yes(r.hypothesis_a)));
    for c in &r.condition_a {
        text.push(format!(
            "  {} [{}] centric {}",
            gens(&c.subgroup),
            c.reasons.join("; "),
            yes(c.centric)
        ));
    }
    text.push(format!(
        "condition (b), orbit graphs are trees: {}",
        yes(r.hypothesis_b)
    ));
    for c in &r.condition_b {
        text.push(format!(
            "  {}: {} vertices, {} edges, tree {}",
            gens(&c.subgroup),
            c.vertices,
            c.edges,
            yes(c.is_tree)
        ));
    }
    text.push(format!(
        "completion saturated {}, consistent {}",
        yes(r.saturated),
        yes(r.consistent)
    ));
    if let Some(a) = &r.theorem_a {
        text.push(format!(
            "candidate of order {}: image Sylow {}, fusion equal {}",
            a.group_order,
            yes(a.sylow),
            yes(a.fusion_equal)
        ));
    }
    if let Some(f) = &r.candidate_failure {
        text.push(format!("candidate: {f}"));
    }
    Ok(Outcome::new(verdict, &r, text, Some(dot)))
}

#[derive(Serialize)]
struct TargetOut {
    q: SubgroupOut,
    fully_normalised: bool,
    not_contained: bool,
    k_order: usize,
    delta_order: usize,
    k_in_delta: bool,
    strongly_p_embedded: bool,
    f0_centric: bool,
    f_centric: Option<bool>,
    minimal: Option<bool>,
    no_proper_essential: bool,
}

#[derive(Serialize)]
struct RejectionOut {
    target: usize,
    reason: String,
}

#[derive(Serialize)]
struct CompareOut {
    against: String,
    /// Table equality, when both systems live on the same group.
    equal: Option<bool>,
    isomorphic: bool,
}

#[derive(Serialize)]
struct TheoremCOut {
    command: &'static str,
    verdict: bool,
    p: u64,
    s: SubgroupOut,
    f0_saturated: bool,
    targets: Vec<TargetOut>,
    rejection: Option<RejectionOut>,
    contains_f0: Option<bool>,
    hypotheses_hold: bool,
    saturated: Option<bool>,
    consistent: bool,
    system: Option<SystemOut>,
    comparisons: Vec<CompareOut>,
}

fn compare(f: &FusionSystem, other: &FusionSystem, against: String, limits: &Limits) -> CliResult<CompareOut> {
    let same_group = f.p() == other.p() && f.group().elements() == other.group().elements();
    let equal = if same_group { Some(f.equals(other)?) } else { None };
    let isomorphic = equal == Some(true) || f.isomorphism_to(other, limits)?.is_some();
    Ok(CompareOut {
        against,
        equal,
        isomorphic,
    })
}

pub fn theorem_c(path: &Path, limits: &Limits) -> CliResult<Outcome> {
    let inp = formats::load_theorem_c(path, limits)?;
    let f0 = &inp.spec.f0;
    let rep = construct_theorem_c(&inp.spec, limits)?;
    let s = f0.group();
    let mut comparisons = Vec::new();
    if let Some(f) = &rep.system {
        if let Some(tp) = &inp.compare_tree {
            let t = formats::load_tree(tp, Some(f.p()), limits)?;
            let ft = induce_fusion_tree(&t.groups, t.p, limits)?;
            let c = ft.completion(limits)?;
            comparisons.push(compare(
                f,
                &c.system,
                format!("completion of {}", display_name(tp)),
                limits,
            )?);
        }
        if let Some(g) = &inp.compare_group {
            let sg = g.sylow_subgroup(f.p())?;
            let fg = FusionSystem::of_group(g, &sg, f.p(), limits)?;
            let name = g.name().unwrap_or("group").to_string();
            comparisons.push(compare(f, &fg, format!("Sylow fusion of {name}"), limits)?);
        }
    }
    let verdict = rep.rejection.is_none()
        && rep.hypotheses_hold
        && rep.saturated == Some(true)
        && rep.consistent()
        && comparisons.iter().all(|c| c.equal.unwrap_or(c.isomorphic));
    let r = TheoremCOut {
        command: "theorem-c",
        verdict,
        p: f0.p(),
        s: subgroup(s, &s.whole()),
        f0_saturated: rep.f0_saturated,
        targets: rep
            .targets
            .iter()
            .map(|t| TargetOut {
                q: subgroup(s, &t.q),
                fully_normalised: t.fully_normalised,
                not_contained: t.not_contained,
                k_order: t.k_order,
                delta_order: t.delta_order,
                k_in_delta: t.k_in_delta,
                strongly_p_embedded: t.strongly_p_embedded,
                f0_centric: t.f0_centric,
                f_centric: t.f_centric,
                minimal: t.minimal,
                no_proper_essential: t.no_proper_essential,
            })
            .collect(),
        rejection: rep.rejection.as_ref().map(|(i, why)| RejectionOut {
            target: *i,
            reason: why.clone(),
        }),
        contains_f0: rep.contains_f0,
        hypotheses_hold: rep.hypotheses_hold,
        saturated: rep.saturated,
        consistent: rep.consistent(),
        system: rep.system.as_ref().map(|f| report::system_out(f, limits)).transpose()?,
        comparisons,
    };
    let mut text = vec![format!("F0 on |S| = {}, saturated {}", r.s.order, yes(r.f0_saturated))];
    for (i, t) in r.targets.iter().enumerate() {
        text.push(format!(
            "target {i}: Q = {}, |Out_F0(Q)| = {}, |Delta| = {}, strongly p-embedded {}",
            gens(&t.q),
            t.k_order,
            t.delta_order,
            yes(t.strongly_p_embedded)
        ));
    }
    if let Some(rj) = &r.rejection {
        text.push(format!("rejected at target {}: {}", rj.target, rj.reason));
    }
    if let Some(sys) = &r.system {
        text.push(format!(
            "F: {} morphisms, hypotheses hold {}, saturated {}",
            sys.morphisms,
            yes(r.hypotheses_hold),
            yes(r.saturated == Some(true))
        ));
        text.extend(status_lines(&sys.classes));
    }
    for c in &r.comparisons {
        let eq = c.equal.map_or("n/a", yes);
        text.push(format!(
            "against {}: equal {eq}, isomorphic {}",
            c.against,
            yes(c.isomorphic)
        ));
    }
    Ok(Outcome::new(verdict, &r, text, None))
}

fn display_name(p: &Path) -> String {
    p.file_name()
        .map_or_else(|| p.display().to_string(), |n| n.to_string_lossy().into_owned())
}

// ---- amalgams ------------------------------------------------------------

/// Parameters of `amalgam-check`.
#[derive(Clone, Debug)]
pub struct AmalgamParams {
    pub max_len: usize,
    pub chain_len: usize,
    pub samples: usize,
    pub seed: u64,
    pub sample_word_len: usize,
}

#[derive(Serialize)]
struct AlternatingOut {
    max_len: usize,
    words: usize,
    by_length: Vec<usize>,
    holds: bool,
    failure: Option<Vec<String>>,
}

#[derive(Serialize)]
struct ChainFailure {
    x: SubgroupOut,
    g: Vec<String>,
}

#[derive(Serialize)]
struct ChainOut {
    max_len: usize,
    subgroups: usize,
    factorisations: usize,
    checked: usize,
    vacuous: usize,
    last_exempt: usize,
    /// Non-vacuous cases where the last chain group leaves `C`; allowed
    /// exactly when `last_exempt` applies.
    last_outside_c: usize,
    holds: bool,
    failure: Option<ChainFailure>,
}

#[derive(Serialize)]
struct SampleOut {
    pairs: usize,
    seed: u64,
    max_word_len: usize,
    holds: bool,
    failure: Option<[Vec<String>; 2]>,
}

#[derive(Serialize)]
struct AmalgamReport {
    command: &'static str,
    verdict: bool,
    a_order: usize,
    b_order: usize,
    c_order: usize,
    alternating: AlternatingOut,
    chain: ChainOut,
    sample: SampleOut,
}

type Word = Vec<(Side, u32)>;

fn letter(am: &Amalgam, (s, x): (Side, u32)) -> String {
    let tag = match s {
        Side::A => "a",
        Side::B => "b",
    };
    format!("{tag}:{}", report::cycles(am.group(s), x))
}

fn letters(am: &Amalgam, w: &[(Side, u32)]) -> Vec<String> {
    w.iter().map(|&l| letter(am, l)).collect()
}

fn random_word(am: &Amalgam, rng: &mut ChaCha8Rng, max: usize) -> Word {
    let n = rng.gen_range(0..=max);
    (0..n)
        .map(|_| {
            let s = if rng.gen_bool(0.5) { Side::A } else { Side::B };
            (s, rng.gen_range(0..am.group(s).order() as u32))
        })
        .collect()
}

fn sample_ok(am: &Amalgam, u: &[(Side, u32)], v: &[(Side, u32)]) -> fuscat_core::Result<bool> {
    let nu = am.normal_form(u)?;
    let nv = am.normal_form(v)?;
    let joined: Word = u.iter().chain(v).copied().collect();
    let whole: AmalgamWord = am.normal_form(&joined)?;
    let id = am.identity();
    Ok(whole == am.multiply(&nu, &nv) && am.multiply(&nu, &am.invert(&nu)) == id)
}

pub fn amalgam_check(path: &Path, params: &AmalgamParams, limits: &Limits) -> CliResult<Outcome> {
    let am = formats::load_amalgam(path, limits)?;
    let alt = am.alternating_products_check(params.max_len, limits)?;

    if params.chain_len > limits.max_word_len {
        return Err(fuscat_core::Error::GuardExceeded {
            what: "word length",
            limit: limits.max_word_len,
            detail: "conjugation chains".into(),
        }
        .into());
    }
    let ga = am.group(Side::A);
    let c_lattice = am.c().subgroup_lattice(limits)?;
    let xs: Vec<_> = c_lattice
        .iter()
        .map(|h| {
            let mut m: Vec<u32> = h.members().iter().map(|&y| am.c_into(Side::A, y)).collect();
            m.sort_unstable();
            ga.try_subgroup(&m)
        })
        .collect::<fuscat_core::Result<_>>()?;
    let gs: Vec<Factored> = (1..=params.chain_len).flat_map(|n| am.factorisations(n)).collect();
    let jobs: Vec<(usize, usize)> = (0..xs.len()).flat_map(|i| (0..gs.len()).map(move |j| (i, j))).collect();
    let results: Vec<fuscat_core::Result<(bool, bool, bool, bool)>> = jobs
        .par_iter()
        .map(|&(i, j)| {
            let r = am.conjugation_chain(&xs[i], &gs[j])?;
            Ok((
                r.holds(),
                r.vacuous,
                r.last_exempt && !r.vacuous,
                !r.vacuous && !r.all_in_c,
            ))
        })
        .collect();
    let mut chain = ChainOut {
        max_len: params.chain_len,
        subgroups: xs.len(),
        factorisations: gs.len(),
        checked: 0,
        vacuous: 0,
        last_exempt: 0,
        last_outside_c: 0,
        holds: true,
        failure: None,
    };
    for (k, r) in results.into_iter().enumerate() {
        let (holds, vacuous, exempt, outside) = r?;
        chain.checked += 1;
        chain.vacuous += vacuous as usize;
        chain.last_exempt += exempt as usize;
        chain.last_outside_c += outside as usize;
        if !holds && chain.failure.is_none() {
            let (i, j) = jobs[k];
            chain.holds = false;
            chain.failure = Some(ChainFailure {
                x: subgroup(ga, &xs[i]),
                g: letters(&am, &gs[j].letters()),
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let pairs: Vec<(Word, Word)> = (0..params.samples)
        .map(|_| {
            let u = random_word(&am, &mut rng, params.sample_word_len);
            let v = random_word(&am, &mut rng, params.sample_word_len);
            (u, v)
        })
        .collect();
    let oks: Vec<fuscat_core::Result<bool>> = pairs.par_iter().map(|(u, v)| sample_ok(&am, u, v)).collect();
    let mut sample = SampleOut {
        pairs: pairs.len(),
        seed: params.seed,
        max_word_len: params.sample_word_len,
        holds: true,
        failure: None,
    };
    for (k, ok) in oks.into_iter().enumerate() {
        if !ok? && sample.failure.is_none() {
            sample.holds = false;
            sample.failure = Some([letters(&am, &pairs[k].0), letters(&am, &pairs[k].1)]);
        }
    }

    let alternating = AlternatingOut {
        max_len: params.max_len,
        words: alt.words,
        by_length: alt.by_length.clone(),
        holds: alt.holds(),
        failure: alt.failure.as_ref().map(|w| letters(&am, w)),
    };
    let verdict = alternating.holds && chain.holds && sample.holds;
    let r = AmalgamReport {
        command: "amalgam-check",
        verdict,
        a_order: ga.order(),
        b_order: am.group(Side::B).order(),
        c_order: am.c().order(),
        alternating,
        chain,
        sample,
    };
    let text = vec![
        format!("amalgam of orders {} and {} over {}", r.a_order, r.b_order, r.c_order),
        format!(
            "alternating products up to length {}: {} words, holds {}",
            r.alternating.max_len,
            r.alternating.words,
            yes(r.alternating.holds)
        ),
        format!(
            "conjugation chains up to length {}: {} cases ({} vacuous, {} with the last group exempt), holds {}",
            r.chain.max_len,
            r.chain.checked,
            r.chain.vacuous,
            r.chain.last_exempt,
            yes(r.chain.holds)
        ),
        format!(
            "normal-form multiplicativity on {} random pairs (seed {}): holds {}",
            r.sample.pairs,
            r.sample.seed,
            yes(r.sample.holds)
        ),
    ];
    Ok(Outcome::new(verdict, &r, text, None))
}
