//! Trees of groups and of fusion systems, and their completions.
//!
//! Every tree is finite. Vertices are kept sorted by id, so "least vertex"
//! means least id. An incidence `(e, v)` is addressed by the edge index and
//! the side `k ∈ {0, 1}` with `tree.edges()[e].ends[k] == v`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::fusion::FusionSystem;
use crate::group::{FiniteGroup, Subgroup};
use crate::hom::{homomorphisms, GroupMap, HomSearch};
use crate::{p_part, Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: [usize; 2],
}

/// A finite tree with named vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiteTree {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl SiteTree {
    /// Builds and validates a tree. Edges are `(id, v, w)`.
    pub fn new(mut vertices: Vec<String>, edges: &[(String, String, String)]) -> Result<SiteTree> {
        vertices.sort();
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTree("vertex ids must be nonempty and distinct".into()));
        }
        let find = |v: &str| {
            vertices
                .binary_search_by(|x| x.as_str().cmp(v))
                .map_err(|_| Error::InvalidTree(alloc::format!("unknown vertex {v}")))
        };
        let mut out = Vec::with_capacity(edges.len());
        let mut ids = BTreeSet::new();
        for (id, v, w) in edges {
            if !ids.insert(id.clone()) {
                return Err(Error::InvalidTree(alloc::format!("duplicate edge id {id}")));
            }
            let (a, b) = (find(v)?, find(w)?);
            if a == b {
                return Err(Error::InvalidTree(alloc::format!("edge {id} is a loop")));
            }
            out.push(Edge {
                id: id.clone(),
                ends: [a, b],
            });
        }
        let t = SiteTree { vertices, edges: out };
        if t.edges.len() + 1 != t.vertices.len() || t.parents(0).iter().filter(|p| p.is_none()).count() != 1 {
            return Err(Error::InvalidTree("graph is not a tree".into()));
        }
        Ok(t)
    }

    pub fn single(id: &str) -> SiteTree {
        SiteTree {
            vertices: alloc::vec![id.into()],
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Side of edge `e` on which `v` sits.
    pub fn side(&self, e: usize, v: usize) -> Option<usize> {
        self.edges[e].ends.iter().position(|&x| x == v)
    }

    /// For every vertex, the first step `(edge, next vertex)` toward `root`
    /// (`None` at the root and at unreachable vertices).
    pub fn parents(&self, root: usize) -> Vec<Option<(usize, usize)>> {
        let n = self.vertices.len();
        let mut par = alloc::vec![None; n];
        let mut seen = alloc::vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (e, edge) in self.edges.iter().enumerate() {
                if let Some(k) = edge.ends.iter().position(|&x| x == v) {
                    let w = edge.ends[1 - k];
                    if !seen[w] {
                        seen[w] = true;
                        par[w] = Some((e, v));
                        queue.push_back(w);
                    }
                }
            }
        }
        par
    }

    /// Vertices in breadth-first order from `root`.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let par = self.parents(root);
        let mut order = alloc::vec![root];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in 0..self.vertices.len() {
                if par[w].is_some_and(|(_, u)| u == v) {
                    order.push(w);
                }
            }
            i += 1;
        }
        order
    }
}

/// A tree of finite groups. `monos[e][k]` maps all of `edge_groups[e]`
/// into `vertex_groups[ends[k]]`.
#[derive(Clone, Debug)]
pub struct TreeOfGroups {
    pub tree: SiteTree,
    pub vertex_groups: Vec<FiniteGroup>,
    pub edge_groups: Vec<FiniteGroup>,
    pub monos: Vec<[GroupMap; 2]>,
}

impl TreeOfGroups {
    pub fn new(
        tree: SiteTree,
        vertex_groups: Vec<FiniteGroup>,
        edge_groups: Vec<FiniteGroup>,
        monos: Vec<[GroupMap; 2]>,
    ) -> Result<TreeOfGroups> {
        if vertex_groups.len() != tree.vertices().len()
            || edge_groups.len() != tree.edges().len()
            || monos.len() != tree.edges().len()
        {
            return Err(Error::InvalidTree("group data does not match the tree".into()));
        }
        let t = TreeOfGroups {
            tree,
            vertex_groups,
            edge_groups,
            monos,
        };
        for (e, pair) in t.monos.iter().enumerate() {
            for (k, m) in pair.iter().enumerate() {
                let v = t.tree.edges()[e].ends[k];
                let (src, dst) = (&t.edge_groups[e], &t.vertex_groups[v]);
                if m.domain().order() != src.order()
                    || m.images().iter().any(|&y| y as usize >= dst.order())
                    || !m.is_homomorphism(src, dst)
                    || !m.is_injective()
                {
                    return Err(Error::InvalidTree(alloc::format!(
                        "mono {}:{} is not an injective homomorphism",
                        t.tree.edges()[e].id,
                        t.tree.vertices()[v]
                    )));
                }
            }
        }
        Ok(t)
    }

    /// The first edge toward some root where `p` divides `|G(v):G(e)|`, for
    /// every candidate root; `Ok(root)` for the least root where none does.
    pub fn index_condition(&self, p: u64) -> core::result::Result<usize, Vec<(usize, usize)>> {
        let mut violations = Vec::new();
        for root in 0..self.tree.vertices().len() {
            let par = self.tree.parents(root);
            let bad = (0..par.len()).find_map(|v| {
                let (e, _) = par[v]?;
                let idx = self.vertex_groups[v].order() / self.edge_groups[e].order();
                (p_part(idx, p) > 1).then_some((e, v))
            });
            match bad {
                None => return Ok(root),
                Some(x) => violations.push(x),
            }
        }
        Err(violations)
    }
}

/// A tree of fusion systems. `monos[e][k]` maps `S(e)` (all elements of
/// the edge system's group) into `S(ends[k])`.
#[derive(Clone, Debug)]
pub struct FusionTree {
    pub tree: SiteTree,
    pub vertex_systems: Vec<FusionSystem>,
    pub edge_systems: Vec<FusionSystem>,
    pub monos: Vec<[GroupMap; 2]>,
}

/// A defect found by [`FusionTree::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub edge: String,
    pub vertex: String,
    pub reason: String,
}

/// Embeddings of every site group into `S(v*)` as element tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEmbeddings {
    pub root: usize,
    pub vertices: Vec<Vec<u32>>,
    pub edges: Vec<Vec<u32>>,
}

impl RootEmbeddings {
    pub fn vertex_image(&self, v: usize) -> Subgroup {
        sorted_subgroup(self.vertices[v].clone())
    }

    pub fn edge_image(&self, e: usize) -> Subgroup {
        sorted_subgroup(self.edges[e].clone())
    }
}

fn sorted_subgroup(mut m: Vec<u32>) -> Subgroup {
    m.sort_unstable();
    Subgroup::from_sorted(m)
}

/// The completion `F_T` on `S(v*)` together with the embeddings.
#[derive(Clone, Debug)]
pub struct RootedCompletion {
    pub embeddings: RootEmbeddings,
    pub system: FusionSystem,
    /// Regenerating with the edge systems as extra seeds changed nothing.
    pub edges_redundant: bool,
}

impl RootedCompletion {
    pub fn root(&self) -> usize {
        self.embeddings.root
    }
}

/// Outcome of the chain factorization check of the completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub morphisms: usize,
    pub reproduced: usize,
    pub longest_chain: usize,
    /// A completion morphism with no chain, if any.
    pub missing: Option<GroupMap>,
}

impl FusionTree {
    pub fn new(
        tree: SiteTree,
        vertex_systems: Vec<FusionSystem>,
        edge_systems: Vec<FusionSystem>,
        monos: Vec<[GroupMap; 2]>,
    ) -> Result<FusionTree> {
        if vertex_systems.len() != tree.vertices().len()
            || edge_systems.len() != tree.edges().len()
            || monos.len() != tree.edges().len()
        {
            return Err(Error::InvalidTree("fusion data does not match the tree".into()));
        }
        let p = vertex_systems[0].p();
        if vertex_systems.iter().chain(&edge_systems).any(|f| f.p() != p) {
            return Err(Error::InvalidTree("sites use different primes".into()));
        }
        Ok(FusionTree {
            tree,
            vertex_systems,
            edge_systems,
            monos,
        })
    }

    pub fn p(&self) -> u64 {
        self.vertex_systems[0].p()
    }

    /// Every mono must be an injective homomorphism `S(e) -> S(v)` that
    /// carries each `F(e)`-morphism to an `F(v)`-morphism, injectively.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (e, pair) in self.monos.iter().enumerate() {
            for (k, m) in pair.iter().enumerate() {
                let v = self.tree.edges()[e].ends[k];
                let fe = &self.edge_systems[e];
                let fv = &self.vertex_systems[v];
                let bad = |reason: &str| Violation {
                    edge: self.tree.edges()[e].id.clone(),
                    vertex: self.tree.vertices()[v].clone(),
                    reason: reason.into(),
                };
                if m.images().len() != fe.group().order()
                    || m.images().iter().any(|&y| y as usize >= fv.group().order())
                {
                    out.push(bad("table has the wrong shape"));
                    continue;
                }
                if !m.is_homomorphism(fe.group(), fv.group()) {
                    out.push(bad("not a homomorphism"));
                    continue;
                }
                if !m.is_injective() {
                    out.push(bad("not injective"));
                    continue;
                }
                let mut images = BTreeSet::new();
                let mut count = 0usize;
                let mut missing = false;
                for beta in fe.push_forward(m.images(), &fv.s()) {
                    count += 1;
                    if !fv.contains(&beta) {
                        missing = true;
                    }
                    images.insert(beta);
                }
                if missing {
                    out.push(bad("an edge morphism does not map into the vertex system"));
                } else if images.len() != count {
                    out.push(bad("induced map on hom sets is not injective"));
                }
            }
        }
        out
    }

    fn check_valid(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidTree(alloc::format!(
                "mono {}:{}: {}",
                v.edge,
                v.vertex,
                v.reason
            ))),
        }
    }

    fn qualifies(&self, root: usize) -> bool {
        let par = self.tree.parents(root);
        (0..par.len()).all(|v| match par[v] {
            None => true,
            Some((e, _)) => self.edge_systems[e].group().order() == self.vertex_systems[v].group().order(),
        })
    }

    /// The least vertex satisfying Hypothesis (H): every edge mono along
    /// the first edge toward it is surjective.
    pub fn hypothesis_h(&self) -> Option<usize> {
        (0..self.tree.vertices().len()).find(|&r| self.qualifies(r))
    }

    /// All vertices satisfying (H).
    pub fn qualifying_roots(&self) -> Vec<usize> {
        (0..self.tree.vertices().len()).filter(|&r| self.qualifies(r)).collect()
    }

    /// Embeddings `S(v) -> S(v*)`, composing inverted surjective monos
    /// along root paths.
    pub fn root_embeddings(&self, root: usize) -> Result<RootEmbeddings> {
        if !self.qualifies(root) {
            return Err(Error::NoRoot(alloc::format!(
                "vertex {} does not satisfy (H)",
                self.tree.vertices()[root]
            )));
        }
        let n = self.tree.vertices().len();
        let par = self.tree.parents(root);
        let mut vert: Vec<Vec<u32>> = alloc::vec![Vec::new(); n];
        let mut edges: Vec<Vec<u32>> = alloc::vec![Vec::new(); self.tree.edges().len()];
        vert[root] = (0..self.vertex_systems[root].group().order() as u32).collect();
        for v in self.tree.bfs_order(root).into_iter().skip(1) {
            let (e, w) = par[v].expect("non-root vertices have a parent");
            let kv = self.tree.side(e, v).unwrap();
            let into_v = &self.monos[e][kv];
            let into_w = &self.monos[e][1 - kv];
            // e -> S(v*) through w.
            let emb_e: Vec<u32> = into_w.images().iter().map(|&y| vert[w][y as usize]).collect();
            let mut t = alloc::vec![0u32; into_v.images().len()];
            for (x, &y) in into_v.images().iter().enumerate() {
                t[y as usize] = emb_e[x];
            }
            vert[v] = t;
            edges[e] = emb_e;
        }
        let emb = RootEmbeddings {
            root,
            vertices: vert,
            edges,
        };
        for (e, edge) in self.tree.edges().iter().enumerate() {
            let [a, b] = edge.ends;
            if emb.vertex_image(a).intersection(&emb.vertex_image(b)) != emb.edge_image(e) {
                return Err(Error::InvalidTree(alloc::format!(
                    "S(v) ∩ S(w) differs from S(e) at edge {}",
                    edge.id
                )));
            }
        }
        Ok(emb)
    }

    /// The completion at the least root satisfying (H).
    pub fn completion(&self, limits: &Limits) -> Result<RootedCompletion> {
        let root = self
            .hypothesis_h()
            .ok_or_else(|| Error::NoRoot("no vertex satisfies (H)".into()))?;
        self.completion_at(root, limits)
    }

    pub fn completion_at(&self, root: usize, limits: &Limits) -> Result<RootedCompletion> {
        self.check_valid()?;
        let emb = self.root_embeddings(root)?;
        let target = self.vertex_systems[root].group().clone();
        let whole = target.whole();
        let mut seeds = Vec::new();
        for (v, f) in self.vertex_systems.iter().enumerate() {
            seeds.extend(f.push_forward(&emb.vertices[v], &whole));
        }
        let system = FusionSystem::generate(target.clone(), self.p(), &seeds, limits)?;
        let mut more = seeds;
        for (e, f) in self.edge_systems.iter().enumerate() {
            more.extend(f.push_forward(&emb.edges[e], &whole));
        }
        let with_edges = FusionSystem::generate(target, self.p(), &more, limits)?;
        let edges_redundant = with_edges.equals(&system)?;
        Ok(RootedCompletion {
            embeddings: emb,
            system,
            edges_redundant,
        })
    }

    /// Every completion morphism is a chain of vertex-system morphisms
    /// along adjacent vertices. Breadth-first search over states
    /// (accumulated map, current vertex), starting from inclusions.
    pub fn factorization(&self, c: &RootedCompletion) -> Result<FactorizationReport> {
        let f = &c.system;
        let emb = &c.embeddings;
        let n = self.tree.vertices().len();
        let images: Vec<Subgroup> = (0..n).map(|v| emb.vertex_image(v)).collect();
        // F(v) in root coordinates, keyed by (vertex, domain).
        let mut local: BTreeMap<(usize, Subgroup), Vec<Vec<u32>>> = BTreeMap::new();
        for v in 0..n {
            for m in self.vertex_systems[v].push_forward(&emb.vertices[v], &f.s()) {
                let (d, t) = (m.domain().clone(), m.into_images());
                local.entry((v, d)).or_default().push(t);
            }
        }
        let mut neighbours: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for e in self.tree.edges() {
            neighbours[e.ends[0]].push(e.ends[1]);
            neighbours[e.ends[1]].push(e.ends[0]);
        }
        let mut report = FactorizationReport {
            morphisms: f.morphism_count(),
            reproduced: 0,
            longest_chain: 0,
            missing: None,
        };
        for p in f.subgroups() {
            let mut seen: BTreeSet<(Vec<u32>, usize)> = BTreeSet::new();
            let mut depth: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            let mut queue: VecDeque<(Vec<u32>, usize, usize)> = VecDeque::new();
            for v in 0..n {
                if p.is_subgroup_of(&images[v]) && seen.insert((p.members().to_vec(), v)) {
                    queue.push_back((p.members().to_vec(), v, 0));
                }
            }
            while let Some((t, v, d)) = queue.pop_front() {
                depth.entry(t.clone()).or_insert(d);
                let q = sorted_subgroup(t.clone());
                for alpha in local.get(&(v, q.clone())).into_iter().flatten() {
                    let next: Vec<u32> = t.iter().map(|&y| alpha[q.position(y).unwrap()]).collect();
                    if seen.insert((next.clone(), v)) {
                        queue.push_back((next, v, d + 1));
                    }
                }
                for &w in &neighbours[v] {
                    if q.is_subgroup_of(&images[w]) && seen.insert((t.clone(), w)) {
                        queue.push_back((t.clone(), w, d));
                    }
                }
            }
            for t in f.tables(p)? {
                match depth.get(t) {
                    Some(&d) => {
                        report.reproduced += 1;
                        report.longest_chain = report.longest_chain.max(d);
                    }
                    None if report.missing.is_none() => {
                        report.missing = Some(GroupMap::from_table(p.clone(), f.s(), t.clone()));
                    }
                    None => {}
                }
            }
        }
        Ok(report)
    }

    /// For every other qualifying root `r`, the completion at `r` carried
    /// into `S(v*)` along the embedding of `S(r)` equals the completion at
    /// `v*`.
    pub fn rerooting_check(&self, c: &RootedCompletion, limits: &Limits) -> Result<Vec<(usize, bool)>> {
        let mut out = Vec::new();
        for r in self.qualifying_roots() {
            if r == c.root() {
                continue;
            }
            let other = self.completion_at(r, limits)?;
            let iso = &c.embeddings.vertices[r];
            let moved = other.system.transport(c.system.group(), iso, limits)?;
            out.push((r, moved.equals(&c.system)?));
        }
        Ok(out)
    }

    /// The same tree with every edge system replaced by the trivial one.
    pub fn with_trivial_edges(&self, limits: &Limits) -> Result<FusionTree> {
        let edges = self
            .edge_systems
            .iter()
            .map(|f| FusionSystem::trivial(f.group().clone(), f.p(), limits))
            .collect::<Result<Vec<_>>>()?;
        Ok(FusionTree {
            tree: self.tree.clone(),
            vertex_systems: self.vertex_systems.clone(),
            edge_systems: edges,
            monos: self.monos.clone(),
        })
    }
}

/// How induced trees pick the Sylow conjugators `g_ev`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugatorChoice {
    Least,
    Greatest,
}

/// The tree of fusion systems induced by a tree of groups: canonical
/// Sylow subgroups, monos twisted by the least conjugator into `S(v)`,
/// and the group fusion systems at every site.
pub fn induce_fusion_tree(tg: &TreeOfGroups, p: u64, limits: &Limits) -> Result<FusionTree> {
    induce_fusion_tree_with(tg, p, ConjugatorChoice::Least, limits)
}

pub fn induce_fusion_tree_with(
    tg: &TreeOfGroups,
    p: u64,
    choice: ConjugatorChoice,
    limits: &Limits,
) -> Result<FusionTree> {
    let vs: Vec<Subgroup> = tg
        .vertex_groups
        .iter()
        .map(|g| g.sylow_subgroup(p))
        .collect::<Result<_>>()?;
    let es: Vec<Subgroup> = tg
        .edge_groups
        .iter()
        .map(|g| g.sylow_subgroup(p))
        .collect::<Result<_>>()?;
    let vertex_systems = tg
        .vertex_groups
        .iter()
        .zip(&vs)
        .map(|(g, s)| FusionSystem::of_group(g, s, p, limits))
        .collect::<Result<Vec<_>>>()?;
    let edge_systems = tg
        .edge_groups
        .iter()
        .zip(&es)
        .map(|(g, s)| FusionSystem::of_group(g, s, p, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut monos = Vec::with_capacity(tg.monos.len());
    for (e, pair) in tg.monos.iter().enumerate() {
        let mut out: Vec<GroupMap> = Vec::with_capacity(2);
        for (k, m) in pair.iter().enumerate() {
            let v = tg.tree.edges()[e].ends[k];
            let gv = &tg.vertex_groups[v];
            let sv = &vs[v];
            let q: Vec<u32> = es[e].members().iter().map(|&x| m.images()[x as usize]).collect();
            let q = sorted_subgroup(q);
            let trans = gv.transporter(&q, sv);
            let g = match choice {
                ConjugatorChoice::Least => trans.first(),
                ConjugatorChoice::Greatest => trans.last(),
            }
            .copied()
            .ok_or_else(|| Error::NotSylow("edge Sylow does not conjugate into S(v)".into()))?;
            let table: Vec<u32> = es[e]
                .members()
                .iter()
                .map(|&x| sv.position(gv.conj(m.images()[x as usize], g)).unwrap() as u32)
                .collect();
            let dom = edge_systems[e].s();
            out.push(GroupMap::from_table(dom, vertex_systems[v].s(), table));
        }
        let b = out.pop().unwrap();
        let a = out.pop().unwrap();
        monos.push([a, b]);
    }
    FusionTree::new(tg.tree.clone(), vertex_systems, edge_systems, monos)
}

/// Result of checking Theorem A against a finite completion candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremAReport {
    pub root: String,
    pub s_order: usize,
    pub group_order: usize,
    /// The image of `S(v*)` is a Sylow p-subgroup of the candidate.
    pub sylow: bool,
    /// `F_{S(v*)}(G)` equals the completion `F_T`.
    pub fusion_equal: bool,
}

impl TheoremAReport {
    pub fn holds(&self) -> bool {
        self.sylow && self.fusion_equal
    }
}

/// Checks that `embeddings` (one per vertex, `G(v) -> G`) commute with
/// the edge monos.
pub fn check_commuting(tg: &TreeOfGroups, g: &FiniteGroup, embeddings: &[GroupMap]) -> Result<()> {
    if embeddings.len() != tg.vertex_groups.len() {
        return Err(Error::InvalidInput("one embedding per vertex is required".into()));
    }
    for (v, m) in embeddings.iter().enumerate() {
        let src = &tg.vertex_groups[v];
        if m.images().len() != src.order()
            || m.images().iter().any(|&y| y as usize >= g.order())
            || !m.is_homomorphism(src, g)
        {
            return Err(Error::NotAHomomorphism(alloc::format!(
                "embedding of {} is not a homomorphism",
                tg.tree.vertices()[v]
            )));
        }
    }
    for (e, edge) in tg.tree.edges().iter().enumerate() {
        let [a, b] = edge.ends;
        for x in 0..tg.edge_groups[e].order() {
            let ya = embeddings[a].images()[tg.monos[e][0].images()[x] as usize];
            let yb = embeddings[b].images()[tg.monos[e][1].images()[x] as usize];
            if ya != yb {
                return Err(Error::InvalidInput(alloc::format!(
                    "embeddings do not commute with the monos of edge {}",
                    edge.id
                )));
            }
        }
    }
    Ok(())
}

pub fn theorem_a_check(
    tg: &TreeOfGroups,
    p: u64,
    g: &FiniteGroup,
    embeddings: &[GroupMap],
    limits: &Limits,
) -> Result<TheoremAReport> {
    check_commuting(tg, g, embeddings)?;
    let ft = induce_fusion_tree(tg, p, limits)?;
    let c = ft.completion(limits)?;
    let root = c.root();
    let s_root = tg.vertex_groups[root].sylow_subgroup(p)?;
    // S(v*) element k is member k of the Sylow subgroup of G(v*).
    let img: Vec<u32> = s_root
        .members()
        .iter()
        .map(|&x| embeddings[root].images()[x as usize])
        .collect();
    let image = sorted_subgroup(img.clone());
    let injective = image.order() == s_root.order();
    let sylow = injective && image.order() == p_part(g.order(), p);
    let fusion_equal = if sylow {
        let fg = FusionSystem::of_group(g, &image, p, limits)?;
        // fg lives on `image` as its own group: member j of `image`.
        let mut back = alloc::vec![0u32; image.order()];
        for (k, &y) in img.iter().enumerate() {
            back[image.position(y).unwrap()] = k as u32;
        }
        fg.transport(c.system.group(), &back, limits)?.equals(&c.system)?
    } else {
        false
    };
    Ok(TheoremAReport {
        root: tg.tree.vertices()[root].clone(),
        s_order: s_root.order(),
        group_order: g.order(),
        sylow,
        fusion_equal,
    })
}

/// Searches injective homomorphisms `G(v) -> G` commuting with all edge
/// monos. Vertices are assigned in breadth-first order from the least
/// vertex; the first solution in canonical order is returned.
pub fn find_completion_embeddings(
    tg: &TreeOfGroups,
    g: &FiniteGroup,
    limits: &Limits,
) -> Result<Option<Vec<GroupMap>>> {
    let order = tg.tree.bfs_order(0);
    let par = tg.tree.parents(0);
    let mut assigned: Vec<Option<GroupMap>> = alloc::vec![None; order.len()];
    let found = search_embeddings(tg, g, &order, &par, 0, &mut assigned, limits)?;
    Ok(found.then(|| assigned.into_iter().map(|m| m.unwrap()).collect()))
}

fn search_embeddings(
    tg: &TreeOfGroups,
    g: &FiniteGroup,
    order: &[usize],
    par: &[Option<(usize, usize)>],
    k: usize,
    assigned: &mut Vec<Option<GroupMap>>,
    limits: &Limits,
) -> Result<bool> {
    if k == order.len() {
        return Ok(true);
    }
    let v = order[k];
    let gv = &tg.vertex_groups[v];
    let mut fixed: Vec<(u32, u32)> = Vec::new();
    if let Some((e, w)) = par[v] {
        let kv = tg.tree.side(e, v).unwrap();
        let ge = &tg.edge_groups[e];
        let emb_w = assigned[w].as_ref().expect("parent assigned first");
        for c in ge.generators_of(&ge.whole()) {
            let x = tg.monos[e][kv].images()[c as usize];
            let y = emb_w.images()[tg.monos[e][1 - kv].images()[c as usize] as usize];
            fixed.push((x, y));
        }
    }
    let search = HomSearch {
        injective: true,
        fixed: &fixed,
        max_results: limits.max_homs,
        max_candidates: limits.max_candidates,
    };
    let cands = match homomorphisms(gv, &gv.whole(), g, &g.whole(), &search) {
        Ok(c) => c,
        // Inconsistent forced images mean no extension exists.
        Err(Error::InvalidInput(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    for m in cands {
        assigned[v] = Some(m);
        if search_embeddings(tg, g, order, par, k + 1, assigned, limits)? {
            return Ok(true);
        }
    }
    assigned[v] = None;
    Ok(false)
}

#[cfg(test)]
mod tests;
