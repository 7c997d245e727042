//! P-orbit graphs of a rooted tree of fusion systems.
//!
//! Everything is computed in the coordinates of `S(v*)`: a site (vertex or
//! edge) is represented by the image of its group under the root
//! embeddings, so every inclusion `S(e) -> S(v)` is literal containment.
//! A class at site `s` is an orbit of `Hom(P, S(s))` under post-composition
//! with `F(s)`-isomorphisms, represented by its least image table.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::fusion::FusionSystem;
use crate::group::{FiniteGroup, Subgroup};
use crate::hom::{homomorphisms, GroupMap, HomSearch};
use crate::tree::{FusionTree, RootedCompletion};
use crate::{Error, Limits, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Site {
    Vertex(usize),
    Edge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphMode {
    /// All injective maps `P -> S(s)`.
    Full,
    /// Only maps lying in the completion.
    Restricted,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RepClass {
    pub site: Site,
    /// Least member of the class, as images of the members of `P`.
    pub representative: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepEdge {
    pub class: RepClass,
    /// Indices into [`RepGraph::vertices`], in the order of the tree edge's ends.
    pub ends: [usize; 2],
}

/// A P-orbit graph. Vertices are sorted by (site, representative), edges
/// likewise; parallel edges and loops are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepGraph {
    pub subgroup: Subgroup,
    pub mode: GraphMode,
    pub vertices: Vec<RepClass>,
    pub edges: Vec<RepEdge>,
}

impl RepGraph {
    pub fn vertex_index(&self, c: &RepClass) -> Option<usize> {
        self.vertices.binary_search(c).ok()
    }

    pub fn edge_index(&self, c: &RepClass) -> Option<usize> {
        self.edges.binary_search_by(|e| e.class.cmp(c)).ok()
    }

    /// Component id per vertex, numbered by least vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.ends[0]].push(e.ends[1]);
            adj[e.ends[1]].push(e.ends[0]);
        }
        let mut comp = alloc::vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    /// Connected with `|V| = |E| + 1`.
    pub fn is_tree(&self) -> bool {
        self.vertices.len() == self.edges.len() + 1 && self.component_count() == 1
    }

    /// Induced subgraph on the given vertices, keeping only the given edges
    /// whose ends both survive.
    pub fn subgraph(&self, vertices: &BTreeSet<usize>, edges: &BTreeSet<usize>) -> RepGraph {
        let renum: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = edges
            .iter()
            .filter_map(|&i| {
                let e = &self.edges[i];
                Some(RepEdge {
                    class: e.class.clone(),
                    ends: [*renum.get(&e.ends[0])?, *renum.get(&e.ends[1])?],
                })
            })
            .collect();
        RepGraph {
            subgroup: self.subgroup.clone(),
            mode: self.mode,
            vertices: vertices.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges,
        }
    }

    /// The vertex set and edge set as class sets, for label-level comparison.
    pub fn labels(&self) -> (BTreeSet<&RepClass>, BTreeSet<(&RepClass, &RepClass, &RepClass)>) {
        let v = self.vertices.iter().collect();
        let e = self
            .edges
            .iter()
            .map(|e| (&e.class, &self.vertices[e.ends[0]], &self.vertices[e.ends[1]]))
            .collect();
        (v, e)
    }

    /// Equality of the labelled graphs, ignoring the mode flag.
    pub fn same_labels(&self, other: &RepGraph) -> bool {
        self.labels() == other.labels()
    }
}

struct SiteData {
    image: Subgroup,
    /// `F(s)` in root coordinates, keyed by domain.
    maps: BTreeMap<Subgroup, Vec<Vec<u32>>>,
}

/// Precomputed site data for one rooted completion.
pub struct OrbitContext<'a> {
    tree: &'a FusionTree,
    completion: &'a RootedCompletion,
    vertices: Vec<SiteData>,
    edges: Vec<SiteData>,
    limits: Limits,
}

/// Outcome of checking that components of the full graph correspond to
/// classes in the completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub components: usize,
    pub completion_classes: usize,
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl PhiReport {
    pub fn holds(&self) -> bool {
        self.well_defined && self.injective && self.surjective
    }
}

/// A restriction map between orbit graphs, by vertex and edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMap {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    /// Edges go to edges with matching ends.
    pub is_homomorphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionRecord {
    pub p: Subgroup,
    pub q: Subgroup,
    pub image_vertices: usize,
    pub image_edges: usize,
    pub fixed_vertices: usize,
    pub fixed_edges: usize,
    pub equal: bool,
}

fn site_data(f: &FusionSystem, emb: &[u32], image: Subgroup, target: &Subgroup) -> SiteData {
    let mut maps: BTreeMap<Subgroup, Vec<Vec<u32>>> = BTreeMap::new();
    for m in f.push_forward(emb, target) {
        let d = m.domain().clone();
        maps.entry(d).or_default().push(m.into_images());
    }
    for v in maps.values_mut() {
        v.sort();
    }
    SiteData { image, maps }
}

fn compose(alpha: &[u32], dom_of_gamma: &Subgroup, gamma: &[u32]) -> Vec<u32> {
    alpha
        .iter()
        .map(|&y| gamma[dom_of_gamma.position(y).expect("image lies in gamma's domain")])
        .collect()
}

fn image_of(t: &[u32]) -> Subgroup {
    let mut m = t.to_vec();
    m.sort_unstable();
    m.dedup();
    Subgroup::from_sorted(m)
}

impl<'a> OrbitContext<'a> {
    pub fn new(tree: &'a FusionTree, completion: &'a RootedCompletion, limits: &Limits) -> OrbitContext<'a> {
        let emb = &completion.embeddings;
        let target = completion.system.s();
        let vertices = (0..tree.tree.vertices().len())
            .map(|v| site_data(&tree.vertex_systems[v], &emb.vertices[v], emb.vertex_image(v), &target))
            .collect();
        let edges = (0..tree.tree.edges().len())
            .map(|e| site_data(&tree.edge_systems[e], &emb.edges[e], emb.edge_image(e), &target))
            .collect();
        OrbitContext {
            tree,
            completion,
            vertices,
            edges,
            limits: limits.clone(),
        }
    }

    pub fn completion(&self) -> &FusionSystem {
        &self.completion.system
    }

    fn group(&self) -> &FiniteGroup {
        self.completion.system.group()
    }

    fn site(&self, s: Site) -> &SiteData {
        match s {
            Site::Vertex(v) => &self.vertices[v],
            Site::Edge(e) => &self.edges[e],
        }
    }

    /// Least table in the class of `alpha` at site `s`.
    pub fn canonical(&self, s: Site, alpha: &[u32]) -> Vec<u32> {
        let q = image_of(alpha);
        self.site(s)
            .maps
            .get(&q)
            .into_iter()
            .flatten()
            .map(|g| compose(alpha, &q, g))
            .min()
            .unwrap_or_else(|| alpha.to_vec())
    }

    /// Injective maps `P -> S(s)`, all of them or those in the completion.
    fn homs_into(&self, p: &Subgroup, s: Site, mode: GraphMode) -> Result<Vec<Vec<u32>>> {
        let x = &self.site(s).image;
        Ok(match mode {
            GraphMode::Restricted => self
                .completion
                .system
                .tables(p)?
                .iter()
                .filter(|t| t.iter().all(|&y| x.contains(y)))
                .cloned()
                .collect(),
            GraphMode::Full => {
                let g = self.group();
                let search = HomSearch::injective(&self.limits);
                homomorphisms(g, p, g, x, &search)?
                    .into_iter()
                    .map(GroupMap::into_images)
                    .collect()
            }
        })
    }

    /// The classes of `Hom(P, S(s))` (or of `Hom_{F_T}(P, S(s))`).
    pub fn rep_classes(&self, p: &Subgroup, s: Site, mode: GraphMode) -> Result<Vec<RepClass>> {
        self.completion.system.index(p)?;
        let reps: BTreeSet<Vec<u32>> = self
            .homs_into(p, s, mode)?
            .iter()
            .map(|a| self.canonical(s, a))
            .collect();
        Ok(reps
            .into_iter()
            .map(|r| RepClass {
                site: s,
                representative: r,
            })
            .collect())
    }

    pub fn build_rep_graph(&self, p: &Subgroup, mode: GraphMode) -> Result<RepGraph> {
        let mut vertices = Vec::new();
        for v in 0..self.vertices.len() {
            vertices.extend(self.rep_classes(p, Site::Vertex(v), mode)?);
        }
        let mut edges = Vec::new();
        for (e, edge) in self.tree.tree.edges().iter().enumerate() {
            for class in self.rep_classes(p, Site::Edge(e), mode)? {
                let mut ends = [0usize; 2];
                for (k, &v) in edge.ends.iter().enumerate() {
                    let end = RepClass {
                        site: Site::Vertex(v),
                        representative: self.canonical(Site::Vertex(v), &class.representative),
                    };
                    ends[k] = vertices
                        .binary_search(&end)
                        .map_err(|_| Error::InvalidTree("edge class has no end vertex".into()))?;
                }
                edges.push(RepEdge { class, ends });
            }
        }
        Ok(RepGraph {
            subgroup: p.clone(),
            mode,
            vertices,
            edges,
        })
    }

    /// Vertex index of the class of the inclusion `P -> S(v*)`.
    pub fn inclusion_vertex(&self, g: &RepGraph) -> Option<usize> {
        let root = self.completion.root();
        g.vertex_index(&RepClass {
            site: Site::Vertex(root),
            representative: self.canonical(Site::Vertex(root), g.subgroup.members()),
        })
    }

    /// The component of the inclusion class inside the full graph.
    pub fn component_of_inclusion(&self, p: &Subgroup) -> Result<RepGraph> {
        let full = self.build_rep_graph(p, GraphMode::Full)?;
        let start = self
            .inclusion_vertex(&full)
            .ok_or_else(|| Error::InvalidInput("inclusion class missing".into()))?;
        let comp = full.components();
        let vs: BTreeSet<usize> = (0..full.vertices.len()).filter(|&v| comp[v] == comp[start]).collect();
        let es: BTreeSet<usize> = (0..full.edges.len()).collect();
        Ok(full.subgraph(&vs, &es))
    }

    /// Least table in the completion class of `alpha`.
    fn completion_canonical(&self, alpha: &[u32]) -> Result<Vec<u32>> {
        let f = &self.completion.system;
        let q = image_of(alpha);
        Ok(f.tables(&q)?
            .iter()
            .map(|g| compose(alpha, &q, g))
            .min()
            .unwrap_or_else(|| alpha.to_vec()))
    }

    /// Checks the component-to-class correspondence on the full graph.
    pub fn phi_p_check(&self, p: &Subgroup) -> Result<PhiReport> {
        let g = self.build_rep_graph(p, GraphMode::Full)?;
        self.phi_p_check_graph(&g)
    }

    /// As [`Self::phi_p_check`] on a given (possibly altered) full graph.
    pub fn phi_p_check_graph(&self, g: &RepGraph) -> Result<PhiReport> {
        let comp = g.components();
        let ncomp = g.component_count();
        let mut class_of: Vec<Option<Vec<u32>>> = alloc::vec![None; ncomp];
        let mut well_defined = true;
        for (v, c) in g.vertices.iter().enumerate() {
            let k = self.completion_canonical(&c.representative)?;
            match &class_of[comp[v]] {
                None => class_of[comp[v]] = Some(k),
                Some(old) if *old != k => well_defined = false,
                Some(_) => {}
            }
        }
        let hit: BTreeSet<Vec<u32>> = class_of.iter().flatten().cloned().collect();
        let injective = hit.len() == ncomp;
        let s = self.completion.system.s();
        let gp = self.group();
        let all: BTreeSet<Vec<u32>> = homomorphisms(gp, &g.subgroup, gp, &s, &HomSearch::injective(&self.limits))?
            .iter()
            .map(|m| self.completion_canonical(m.images()))
            .collect::<Result<_>>()?;
        Ok(PhiReport {
            components: ncomp,
            completion_classes: all.len(),
            well_defined,
            injective,
            surjective: all == hit,
        })
    }

    /// Sends the class of `φ` in `graph(Q)` to the class of `φ|_P` at the
    /// same site in `graph(P)`.
    pub fn restrict_rep(&self, from: &RepGraph, to: &RepGraph) -> Result<GraphMap> {
        let (q, p) = (&from.subgroup, &to.subgroup);
        if !p.is_subgroup_of(q) {
            return Err(Error::InvalidInput("restriction needs P ≤ Q".into()));
        }
        let restrict = |c: &RepClass| -> RepClass {
            let t: Vec<u32> = p
                .members()
                .iter()
                .map(|&x| c.representative[q.position(x).unwrap()])
                .collect();
            RepClass {
                site: c.site,
                representative: self.canonical(c.site, &t),
            }
        };
        let mut vertex_map = Vec::with_capacity(from.vertices.len());
        for c in &from.vertices {
            vertex_map.push(
                to.vertex_index(&restrict(c))
                    .ok_or_else(|| Error::InvalidInput("restricted class missing from target graph".into()))?,
            );
        }
        let mut edge_map = Vec::with_capacity(from.edges.len());
        let mut is_homomorphism = true;
        for e in &from.edges {
            let i = to
                .edge_index(&restrict(&e.class))
                .ok_or_else(|| Error::InvalidInput("restricted class missing from target graph".into()))?;
            if to.edges[i].ends != [vertex_map[e.ends[0]], vertex_map[e.ends[1]]] {
                is_homomorphism = false;
            }
            edge_map.push(i);
        }
        Ok(GraphMap {
            vertex_map,
            edge_map,
            is_homomorphism,
        })
    }

    /// The subgraph of classes fixed by `[φ] -> [ψ φ]` for every `ψ`
    /// (automorphism tables of `P`, applied before `φ`).
    pub fn aut_action_fixed_points(&self, g: &RepGraph, psis: &[Vec<u32>]) -> RepGraph {
        let p = &g.subgroup;
        let fixed = |c: &RepClass| {
            psis.iter().all(|psi| {
                let t: Vec<u32> = psi.iter().map(|&y| c.representative[p.position(y).unwrap()]).collect();
                self.canonical(c.site, &t) == c.representative
            })
        };
        let vs = (0..g.vertices.len()).filter(|&v| fixed(&g.vertices[v])).collect();
        let es = (0..g.edges.len()).filter(|&e| fixed(&g.edges[e].class)).collect();
        g.subgraph(&vs, &es)
    }

    /// For every `P ⊴ Q` with `P` centric in the completion and the
    /// restricted graph of `P` a tree: the restriction image of the graph
    /// of `Q` equals the subgraph fixed by `Aut_Q(P)`.
    pub fn restriction_fixed_point_check(&self) -> Result<Vec<RestrictionRecord>> {
        let f = &self.completion.system;
        let s = self.group();
        let mut out = Vec::new();
        let graphs: Vec<RepGraph> = f
            .subgroups()
            .iter()
            .map(|p| self.build_rep_graph(p, GraphMode::Restricted))
            .collect::<Result<_>>()?;
        for (i, p) in f.subgroups().iter().enumerate() {
            if !f.is_centric(p)? || !graphs[i].is_tree() {
                continue;
            }
            for (j, q) in f.subgroups().iter().enumerate() {
                if !p.is_subgroup_of(q) || !s.is_normal(p, q) {
                    continue;
                }
                let m = self.restrict_rep(&graphs[j], &graphs[i])?;
                let psis: Vec<Vec<u32>> = q
                    .members()
                    .iter()
                    .map(|&g| p.members().iter().map(|&x| s.conj(x, g)).collect())
                    .collect();
                let fixed = self.aut_action_fixed_points(&graphs[i], &psis);
                let iv: BTreeSet<usize> = m.vertex_map.iter().copied().collect();
                let ie: BTreeSet<usize> = m.edge_map.iter().copied().collect();
                let image = graphs[i].subgraph(&iv, &ie);
                out.push(RestrictionRecord {
                    p: p.clone(),
                    q: q.clone(),
                    image_vertices: image.vertices.len(),
                    image_edges: image.edges.len(),
                    fixed_vertices: fixed.vertices.len(),
                    fixed_edges: fixed.edges.len(),
                    equal: m.is_homomorphism && image.same_labels(&fixed),
                });
            }
        }
        Ok(out)
    }
}
