//! The JSON input files. Permutations are 1-based, either as image arrays
//! (`[2, 1, 3, 4]`) or as cycle strings (`"(1 2)(3 4)"`, commas allowed).
//! A group reference is an inline group object or a path, resolved against
//! the directory of the file that mentions it.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use fuscat_core::amalgam::Amalgam;
use fuscat_core::group::FiniteGroup;
use fuscat_core::theorems::{full_automorphism_generators, TheoremCSpec, TheoremCTarget};
use fuscat_core::tree::{SiteTree, TreeOfGroups};
use fuscat_core::{FusionSystem, GroupMap, Limits, Perm, Subgroup};

use crate::error::{input, CliError, CliResult};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PermSpec {
    Images(Vec<u32>),
    Cycles(String),
}

impl PermSpec {
    pub fn to_perm(&self, degree: usize) -> CliResult<Perm> {
        match self {
            PermSpec::Images(v) => {
                if v.len() != degree {
                    return Err(input(format!(
                        "permutation {v:?} has {} points, expected {degree}",
                        v.len()
                    )));
                }
                Ok(Perm::from_one_based(v)?)
            }
            PermSpec::Cycles(s) => parse_cycles(s, degree),
        }
    }
}

/// Parses `"(1 2 3)(4 5)"` or `"(1,2,3)(4,5)"`; `"()"` is the identity.
pub fn parse_cycles(s: &str, degree: usize) -> CliResult<Perm> {
    let bad = || input(format!("malformed cycle string {s:?}"));
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let points = body[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect::<CliResult<Vec<u32>>>()?;
        if points.iter().any(|&x| x == 0 || x as usize > degree) {
            return Err(input(format!(
                "cycle string {s:?} mentions a point outside 1..={degree}"
            )));
        }
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[end + 1..].trim_start();
    }
    let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
    Ok(Perm::from_cycles(degree, &refs)?)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<PermSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupSpec),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedSpec {
    pub domain: Vec<PermSpec>,
    pub images: Vec<PermSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    pub group: GroupRef,
    #[serde(rename = "S", default)]
    pub s: Option<Vec<PermSpec>>,
    #[serde(default)]
    pub p: Option<u64>,
    pub seeds: Vec<SeedSpec>,
    #[serde(default)]
    pub subgroups: BTreeMap<String, Vec<PermSpec>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoSpec {
    pub images: Vec<PermSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompletionSpec {
    pub group: GroupRef,
    /// Images of each vertex group's generators; searched for when absent.
    #[serde(default)]
    pub embeddings: Option<BTreeMap<String, Vec<PermSpec>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeFile {
    #[serde(default)]
    pub p: Option<u64>,
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
    pub vertex_groups: BTreeMap<String, GroupRef>,
    pub edge_groups: BTreeMap<String, GroupRef>,
    pub monos: BTreeMap<String, MonoSpec>,
    #[serde(default)]
    pub subgroups: BTreeMap<String, Vec<PermSpec>>,
    #[serde(default)]
    pub completion: Option<CompletionSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmalgamFile {
    pub a: GroupRef,
    pub b: GroupRef,
    pub c: GroupRef,
    /// Images of `c`'s generators in `a` and in `b`.
    pub into_a: Vec<PermSpec>,
    pub into_b: Vec<PermSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum F0Spec {
    /// `"trivial"` or `"group"`.
    Named(String),
    Seeds {
        seeds: Vec<SeedSpec>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum DeltaSpec {
    /// `"full"`: all of `Aut(Q)`.
    Named(String),
    /// Each entry lists the images of the target's generators.
    Lifts(Vec<Vec<PermSpec>>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSpec {
    #[serde(rename = "Q")]
    pub q: Vec<PermSpec>,
    pub delta: DeltaSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareSpec {
    /// A tree file whose completion should equal the constructed system.
    #[serde(default)]
    pub tree: Option<String>,
    /// A group whose Sylow fusion system should be isomorphic to it.
    #[serde(default)]
    pub group: Option<GroupRef>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremCFile {
    pub group: GroupRef,
    pub p: u64,
    #[serde(rename = "S", default)]
    pub s: Option<Vec<PermSpec>>,
    pub f0: F0Spec,
    pub targets: Vec<TargetSpec>,
    #[serde(default)]
    pub compare: Option<CompareSpec>,
}

pub fn read_value(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, v: Value) -> CliResult<T> {
    serde_json::from_value(v).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn perms(specs: &[PermSpec], degree: usize) -> CliResult<Vec<Perm>> {
    specs.iter().map(|s| s.to_perm(degree)).collect()
}

/// Element indices of `g` for the given permutations.
pub fn elements(g: &FiniteGroup, specs: &[PermSpec], what: &str) -> CliResult<Vec<u32>> {
    perms(specs, g.degree())?
        .iter()
        .map(|p| {
            g.index_of(p)
                .ok_or_else(|| input(format!("{what}: {} is not an element", p.cycle_string())))
        })
        .collect()
}

pub fn group_from_spec(spec: &GroupSpec, limits: &Limits) -> CliResult<FiniteGroup> {
    let gens = perms(&spec.generators, spec.degree)?;
    let g = FiniteGroup::generate(spec.degree, gens, limits)?;
    Ok(match &spec.name {
        Some(n) => g.with_name(n.clone()),
        None => g,
    })
}

pub fn load_group(r: &GroupRef, base: &Path, limits: &Limits) -> CliResult<FiniteGroup> {
    match r {
        GroupRef::Inline(spec) => group_from_spec(spec, limits),
        GroupRef::Path(p) => {
            let path = base.join(p);
            let spec: GroupSpec = parse(&path, read_value(&path)?)?;
            group_from_spec(&spec, limits)
        }
    }
}

/// A fusion system read from a group file (`F_S(G)`) or a seed file.
pub struct SystemInput {
    pub group: FiniteGroup,
    /// `S` as a subgroup of `group`; the system lives on it as a group.
    pub s: Subgroup,
    pub system: FusionSystem,
    pub seeds: Option<usize>,
    pub presets: BTreeMap<String, Vec<PermSpec>>,
}

fn sylow_or_given(g: &FiniteGroup, s: Option<&[PermSpec]>, p: u64) -> CliResult<Subgroup> {
    let s = match s {
        Some(gens) => g.subgroup_generated_by(&perms(gens, g.degree())?)?,
        None => g.sylow_subgroup(p)?,
    };
    if !fuscat_core::is_p_power(s.order(), p) {
        return Err(input(format!("S has order {}, not a power of {p}", s.order())));
    }
    Ok(s)
}

fn resolve_p(file: Option<u64>, flag: Option<u64>) -> CliResult<u64> {
    let p = flag
        .or(file)
        .ok_or_else(|| input("no prime given: pass --p or set \"p\" in the file"))?;
    if !fuscat_core::is_prime(p) {
        return Err(input(format!("{p} is not prime")));
    }
    Ok(p)
}

/// Reads a plain group file, ignoring any prime.
pub fn load_group_file(path: &Path, limits: &Limits) -> CliResult<FiniteGroup> {
    let v = read_value(path)?;
    if v.get("seeds").is_some() {
        let f: SeedFile = parse(path, v)?;
        return load_group(&f.group, &base_dir(path), limits);
    }
    let spec: GroupSpec = parse(path, v)?;
    group_from_spec(&spec, limits)
}

pub fn load_system(path: &Path, p_flag: Option<u64>, limits: &Limits) -> CliResult<SystemInput> {
    let v = read_value(path)?;
    if v.get("seeds").is_none() {
        let spec: GroupSpec = parse(path, v)?;
        let group = group_from_spec(&spec, limits)?;
        let p = resolve_p(None, p_flag)?;
        let s = group.sylow_subgroup(p)?;
        let system = FusionSystem::of_group(&group, &s, p, limits)?;
        return Ok(SystemInput {
            group,
            s,
            system,
            seeds: None,
            presets: BTreeMap::new(),
        });
    }
    let f: SeedFile = parse(path, v)?;
    let group = load_group(&f.group, &base_dir(path), limits)?;
    let p = resolve_p(f.p, p_flag)?;
    let s = sylow_or_given(&group, f.s.as_deref(), p)?;
    let sg = group.subgroup_as_group(&s);
    let whole = sg.whole();
    let mut maps = Vec::new();
    for (i, seed) in f.seeds.iter().enumerate() {
        let what = format!("seed {i}");
        let dom = elements(&sg, &seed.domain, &what)?;
        let img = elements(&sg, &seed.images, &what)?;
        if dom.len() != img.len() {
            return Err(input(format!("{what}: domain and images differ in length")));
        }
        let m = GroupMap::from_generator_images(&sg, &dom, &sg, whole.clone(), &img)?;
        if !m.is_injective() {
            return Err(input(format!("{what} is not injective")));
        }
        maps.push(m);
    }
    let system = FusionSystem::generate(sg, p, &maps, limits)?;
    Ok(SystemInput {
        group,
        s,
        system,
        seeds: Some(maps.len()),
        presets: f.subgroups,
    })
}

pub struct CompletionInput {
    pub group: FiniteGroup,
    /// Given embeddings, or `None` to search.
    pub embeddings: Option<Vec<GroupMap>>,
}

pub struct TreeInput {
    pub groups: TreeOfGroups,
    pub p: u64,
    pub presets: BTreeMap<String, Vec<PermSpec>>,
    pub completion: Option<CompletionInput>,
}

fn edge_list(edges: &[Vec<String>]) -> CliResult<Vec<(String, String, String)>> {
    edges
        .iter()
        .enumerate()
        .map(|(k, e)| match e.as_slice() {
            [v, w] => Ok((format!("e{}", k + 1), v.clone(), w.clone())),
            [v, w, id] => Ok((id.clone(), v.clone(), w.clone())),
            _ => Err(input(format!("edge {} must be [v, w] or [v, w, id]", k + 1))),
        })
        .collect()
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, key: &str, what: &str) -> CliResult<&'a T> {
    map.get(key).ok_or_else(|| input(format!("missing {what} for {key:?}")))
}

fn check_keys<T>(map: &BTreeMap<String, T>, known: &[String], what: &str) -> CliResult<()> {
    match map.keys().find(|k| !known.contains(k)) {
        Some(k) => Err(input(format!("unknown {what} {k:?}"))),
        None => Ok(()),
    }
}

pub fn load_tree(path: &Path, p_flag: Option<u64>, limits: &Limits) -> CliResult<TreeInput> {
    let v = read_value(path)?;
    let f: TreeFile = parse(path, v)?;
    let base = base_dir(path);
    let p = resolve_p(f.p, p_flag)?;
    let edges = edge_list(&f.edges)?;
    let tree = SiteTree::new(f.vertices.clone(), &edges)?;
    check_keys(&f.vertex_groups, tree.vertices(), "vertex")?;
    let edge_ids: Vec<String> = tree.edges().iter().map(|e| e.id.clone()).collect();
    check_keys(&f.edge_groups, &edge_ids, "edge")?;
    let vertex_groups = tree
        .vertices()
        .iter()
        .map(|v| load_group(lookup(&f.vertex_groups, v, "vertex group")?, &base, limits))
        .collect::<CliResult<Vec<_>>>()?;
    let edge_groups = edge_ids
        .iter()
        .map(|e| load_group(lookup(&f.edge_groups, e, "edge group")?, &base, limits))
        .collect::<CliResult<Vec<_>>>()?;
    let mut mono_keys = Vec::new();
    let mut monos = Vec::new();
    for (k, edge) in tree.edges().iter().enumerate() {
        let ge = &edge_groups[k];
        let gens: Vec<u32> = ge.generators().iter().map(|g| ge.index_of(g).unwrap()).collect();
        let mut pair = Vec::new();
        for &v in &edge.ends {
            let vid = &tree.vertices()[v];
            let key = format!("{}:{}", edge.id, vid);
            let spec = lookup(&f.monos, &key, "mono")?;
            let gv = &vertex_groups[v];
            let img = elements(gv, &spec.images, &format!("mono {key}"))?;
            if img.len() != gens.len() {
                return Err(input(format!(
                    "mono {key}: {} images for {} generators",
                    img.len(),
                    gens.len()
                )));
            }
            pair.push(GroupMap::from_generator_images(ge, &gens, gv, gv.whole(), &img)?);
            mono_keys.push(key);
        }
        let b = pair.pop().unwrap();
        let a = pair.pop().unwrap();
        monos.push([a, b]);
    }
    check_keys(&f.monos, &mono_keys, "mono")?;
    let groups = TreeOfGroups::new(tree, vertex_groups, edge_groups, monos)?;
    let completion = match &f.completion {
        None => None,
        Some(c) => {
            let g = load_group(&c.group, &base, limits)?;
            let embeddings = match &c.embeddings {
                None => None,
                Some(m) => {
                    check_keys(m, groups.tree.vertices(), "embedding")?;
                    let mut out = Vec::new();
                    for (v, gv) in groups.tree.vertices().iter().zip(&groups.vertex_groups) {
                        let gens: Vec<u32> = gv.generators().iter().map(|x| gv.index_of(x).unwrap()).collect();
                        let img = elements(&g, lookup(m, v, "embedding")?, &format!("embedding of {v}"))?;
                        if img.len() != gens.len() {
                            return Err(input(format!("embedding of {v}: wrong number of images")));
                        }
                        out.push(GroupMap::from_generator_images(gv, &gens, &g, g.whole(), &img)?);
                    }
                    Some(out)
                }
            };
            Some(CompletionInput { group: g, embeddings })
        }
    };
    Ok(TreeInput {
        groups,
        p,
        presets: f.subgroups,
        completion,
    })
}

/// An amalgam from an amalgam file or from a tree file with one edge.
pub fn load_amalgam(path: &Path, limits: &Limits) -> CliResult<Amalgam> {
    let v = read_value(path)?;
    if v.get("vertices").is_some() {
        let t = load_tree(path, Some(v.get("p").and_then(Value::as_u64).unwrap_or(2)), limits)?;
        return Ok(Amalgam::from_tree(&t.groups)?);
    }
    let f: AmalgamFile = parse(path, v)?;
    let base = base_dir(path);
    let a = load_group(&f.a, &base, limits)?;
    let b = load_group(&f.b, &base, limits)?;
    let c = load_group(&f.c, &base, limits)?;
    let gens: Vec<u32> = c.generators().iter().map(|x| c.index_of(x).unwrap()).collect();
    let mut monos = Vec::new();
    for (g, imgs, what) in [(&a, &f.into_a, "into_a"), (&b, &f.into_b, "into_b")] {
        let img = elements(g, imgs, what)?;
        if img.len() != gens.len() {
            return Err(input(format!(
                "{what}: {} images for {} generators",
                img.len(),
                gens.len()
            )));
        }
        monos.push(GroupMap::from_generator_images(&c, &gens, g, g.whole(), &img)?);
    }
    Ok(Amalgam::new(a, b, c, &monos[0], &monos[1])?)
}

pub struct TheoremCInput {
    pub spec: TheoremCSpec,
    pub compare_tree: Option<PathBuf>,
    pub compare_group: Option<FiniteGroup>,
}

pub fn load_theorem_c(path: &Path, limits: &Limits) -> CliResult<TheoremCInput> {
    let v = read_value(path)?;
    let f: TheoremCFile = parse(path, v)?;
    let base = base_dir(path);
    let group = load_group(&f.group, &base, limits)?;
    let p = resolve_p(Some(f.p), None)?;
    let s = sylow_or_given(&group, f.s.as_deref(), p)?;
    let sg = group.subgroup_as_group(&s);
    let f0 = match &f.f0 {
        F0Spec::Named(n) if n == "trivial" => FusionSystem::trivial(sg.clone(), p, limits)?,
        F0Spec::Named(n) if n == "group" => FusionSystem::of_group(&group, &s, p, limits)?,
        F0Spec::Named(n) => return Err(input(format!("unknown f0 {n:?}; use \"trivial\", \"group\" or seeds"))),
        F0Spec::Seeds { seeds } => {
            let mut maps = Vec::new();
            for (i, seed) in seeds.iter().enumerate() {
                let what = format!("f0 seed {i}");
                let dom = elements(&sg, &seed.domain, &what)?;
                let img = elements(&sg, &seed.images, &what)?;
                maps.push(GroupMap::from_generator_images(&sg, &dom, &sg, sg.whole(), &img)?);
            }
            FusionSystem::generate(sg.clone(), p, &maps, limits)?
        }
    };
    let mut targets = Vec::new();
    for (i, t) in f.targets.iter().enumerate() {
        let what = format!("target {i}");
        let gens = elements(&sg, &t.q, &what)?;
        let q = sg.close(&gens);
        let delta_gens = match &t.delta {
            DeltaSpec::Named(n) if n == "full" => full_automorphism_generators(&sg, &q, limits)?,
            DeltaSpec::Named(n) => return Err(input(format!("{what}: unknown delta {n:?}; use \"full\" or lifts"))),
            DeltaSpec::Lifts(lifts) => {
                let mut out = Vec::new();
                for l in lifts {
                    let img = elements(&sg, l, &what)?;
                    if img.len() != gens.len() {
                        return Err(input(format!(
                            "{what}: a lift lists {} images for {} generators",
                            img.len(),
                            gens.len()
                        )));
                    }
                    let m = GroupMap::from_generator_images(&sg, &gens, &sg, sg.whole(), &img)
                        .map_err(|e| input(format!("{what}: {e}")))?;
                    out.push(m.into_images());
                }
                out
            }
        };
        targets.push(TheoremCTarget { q, delta_gens });
    }
    let (compare_tree, compare_group) = match &f.compare {
        None => (None, None),
        Some(c) => (
            c.tree.as_ref().map(|t| base.join(t)),
            c.group.as_ref().map(|g| load_group(g, &base, limits)).transpose()?,
        ),
    };
    Ok(TheoremCInput {
        spec: TheoremCSpec { f0, targets },
        compare_tree,
        compare_group,
    })
}
