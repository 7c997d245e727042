//! Homomorphisms between subgroups, automorphism groups and quotients.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::group::{FiniteGroup, Subgroup};
use crate::{p_part, Error, Limits, Perm, Result};

const UNSET: u32 = u32::MAX;

/// A homomorphism from a subgroup of one group to a subgroup of another
/// (possibly the same) group, stored as a total element map.
///
/// `images[k]` is the image of `domain.members()[k]`. The ordering is the
/// global canonical ordering: domain, then codomain, then images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupMap {
    domain: Subgroup,
    codomain: Subgroup,
    images: Vec<u32>,
}

impl GroupMap {
    /// Wraps a table without checking the homomorphism property.
    pub fn from_table(domain: Subgroup, codomain: Subgroup, images: Vec<u32>) -> GroupMap {
        debug_assert_eq!(domain.order(), images.len());
        GroupMap {
            domain,
            codomain,
            images,
        }
    }

    /// Builds and validates a map given by the images of every domain member.
    pub fn checked(
        src: &FiniteGroup,
        domain: Subgroup,
        dst: &FiniteGroup,
        codomain: Subgroup,
        images: Vec<u32>,
        require_injective: bool,
    ) -> Result<GroupMap> {
        if images.len() != domain.order() {
            return Err(Error::NotAHomomorphism("table length differs from domain order".into()));
        }
        let m = GroupMap::from_table(domain, codomain, images);
        if m.images.iter().any(|&y| !m.codomain.contains(y)) {
            return Err(Error::NotAHomomorphism("image outside codomain".into()));
        }
        if !m.is_homomorphism(src, dst) {
            return Err(Error::NotAHomomorphism("table does not respect products".into()));
        }
        if require_injective && !m.is_injective() {
            return Err(Error::NotInjective("two elements share an image".into()));
        }
        Ok(m)
    }

    /// Extends generator images to a homomorphism on `⟨gens⟩`, failing if
    /// the assignment is inconsistent.
    pub fn from_generator_images(
        src: &FiniteGroup,
        gens: &[u32],
        dst: &FiniteGroup,
        codomain: Subgroup,
        imgs: &[u32],
    ) -> Result<GroupMap> {
        if gens.len() != imgs.len() {
            return Err(Error::NotAHomomorphism("generator/image count mismatch".into()));
        }
        let mut table = alloc::vec![UNSET; src.order()];
        if !extend(src, dst, gens, imgs, &mut table) {
            return Err(Error::NotAHomomorphism("generator images violate a relation".into()));
        }
        let domain = src.close(gens);
        let images: Vec<u32> = domain.members().iter().map(|&x| table[x as usize]).collect();
        if images.iter().any(|&y| !codomain.contains(y)) {
            return Err(Error::NotAHomomorphism("image outside codomain".into()));
        }
        Ok(GroupMap::from_table(domain, codomain, images))
    }

    pub fn identity(h: &Subgroup) -> GroupMap {
        GroupMap::from_table(h.clone(), h.clone(), h.members().to_vec())
    }

    pub fn inclusion(p: &Subgroup, q: &Subgroup) -> GroupMap {
        GroupMap::from_table(p.clone(), q.clone(), p.members().to_vec())
    }

    /// `c_g` restricted to `p`, landing in `q` (caller guarantees `P^g <= Q`).
    pub fn conjugation(group: &FiniteGroup, g: u32, p: &Subgroup, q: &Subgroup) -> GroupMap {
        let images = p.members().iter().map(|&x| group.conj(x, g)).collect();
        GroupMap::from_table(p.clone(), q.clone(), images)
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &Subgroup {
        &self.codomain
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> Option<u32> {
        self.domain.position(x).map(|k| self.images[k])
    }

    /// The image `Pφ`, sorted. For a homomorphism this is a subgroup.
    pub fn image(&self) -> Subgroup {
        let mut m = self.images.clone();
        m.sort_unstable();
        m.dedup();
        Subgroup::from_sorted(m)
    }

    pub fn is_injective(&self) -> bool {
        self.image().order() == self.images.len()
    }

    pub fn is_homomorphism(&self, src: &FiniteGroup, dst: &FiniteGroup) -> bool {
        let d = self.domain.members();
        for (i, &a) in d.iter().enumerate() {
            for (j, &b) in d.iter().enumerate() {
                let Some(k) = self.domain.position(src.mul(a, b)) else {
                    return false;
                };
                if self.images[k] != dst.mul(self.images[i], self.images[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction to a subgroup `r` of the domain.
    pub fn restrict(&self, r: &Subgroup) -> Option<GroupMap> {
        let mut images = Vec::with_capacity(r.order());
        for &x in r.members() {
            images.push(self.apply(x)?);
        }
        Some(GroupMap::from_table(r.clone(), self.codomain.clone(), images))
    }

    /// `self` followed by `next`; `None` unless the image of `self` lies in
    /// the domain of `next`.
    pub fn then(&self, next: &GroupMap) -> Option<GroupMap> {
        let mut images = Vec::with_capacity(self.images.len());
        for &y in &self.images {
            images.push(next.apply(y)?);
        }
        Some(GroupMap::from_table(self.domain.clone(), next.codomain.clone(), images))
    }

    /// Inverse of an injective map, as a map from the image onto the domain.
    pub fn inverse(&self) -> Option<GroupMap> {
        let mut pairs: Vec<(u32, u32)> = self
            .images
            .iter()
            .copied()
            .zip(self.domain.members().iter().copied())
            .collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        let dom = Subgroup::from_sorted(pairs.iter().map(|p| p.0).collect());
        Some(GroupMap::from_table(
            dom,
            self.domain.clone(),
            pairs.into_iter().map(|p| p.1).collect(),
        ))
    }

    pub fn with_codomain(mut self, codomain: Subgroup) -> GroupMap {
        self.codomain = codomain;
        self
    }
}

/// BFS extension of `gens -> imgs` over the Cayley graph. Fills `table`
/// (indexed by source element) and reports consistency.
fn extend(src: &FiniteGroup, dst: &FiniteGroup, gens: &[u32], imgs: &[u32], table: &mut [u32]) -> bool {
    table[0] = 0;
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        let fx = table[x as usize];
        for (&g, &h) in gens.iter().zip(imgs) {
            let y = src.mul(x, g);
            let fy = dst.mul(fx, h);
            let slot = &mut table[y as usize];
            if *slot == UNSET {
                *slot = fy;
                queue.push_back(y);
            } else if *slot != fy {
                return false;
            }
        }
    }
    true
}

/// Parameters for [`homomorphisms`].
#[derive(Clone, Debug)]
pub struct HomSearch<'a> {
    pub injective: bool,
    /// Forced `(source element, image)` pairs.
    pub fixed: &'a [(u32, u32)],
    pub max_results: usize,
    pub max_candidates: usize,
}

impl<'a> HomSearch<'a> {
    pub fn injective(limits: &Limits) -> HomSearch<'static> {
        HomSearch {
            injective: true,
            fixed: &[],
            max_results: limits.max_homs,
            max_candidates: limits.max_candidates,
        }
    }
}

/// All homomorphisms `dom -> cod` (optionally only injective ones, and
/// optionally with some images forced), sorted canonically.
///
/// Generators of `dom` are assigned one at a time; after each assignment
/// the partial map is extended over the generated subgroup and pruned on
/// any relation conflict, order mismatch or (when requested) collision.
pub fn homomorphisms(
    src: &FiniteGroup,
    dom: &Subgroup,
    dst: &FiniteGroup,
    cod: &Subgroup,
    search: &HomSearch<'_>,
) -> Result<Vec<GroupMap>> {
    for &(x, y) in search.fixed {
        if !dom.contains(x) || !cod.contains(y) {
            return Err(Error::InvalidInput("fixed pair outside domain or codomain".into()));
        }
    }
    if search.injective && dom.order() > cod.order() {
        return Ok(Vec::new());
    }
    // Generators: forced sources first, then a greedy completion.
    let mut gens: Vec<u32> = Vec::new();
    let mut forced: Vec<Option<u32>> = Vec::new();
    let mut span = src.trivial();
    for &(x, y) in search.fixed {
        if !span.contains(x) {
            gens.push(x);
            forced.push(Some(y));
            span = src.close(&gens);
        }
    }
    let mut rest: Vec<u32> = dom.members().to_vec();
    rest.sort_by(|&a, &b| src.elem_order(b).cmp(&src.elem_order(a)).then(a.cmp(&b)));
    for x in rest {
        if span.order() == dom.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            forced.push(None);
            span = src.close(&gens);
        }
    }
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .zip(&forced)
        .map(|(&g, f)| match f {
            Some(y) => alloc::vec![*y],
            None => cod
                .members()
                .iter()
                .copied()
                .filter(|&y| {
                    let (og, oy) = (src.elem_order(g), dst.elem_order(y));
                    if search.injective {
                        og == oy
                    } else {
                        og % oy == 0
                    }
                })
                .collect(),
        })
        .collect();

    let mut state = Search {
        src,
        dst,
        gens: &gens,
        candidates: &candidates,
        injective: search.injective,
        assignment: Vec::new(),
        tried: 0,
        max_candidates: search.max_candidates,
        out: Vec::new(),
        max_results: search.max_results,
        table: alloc::vec![UNSET; src.order()],
    };
    state.descend()?;
    let mut out: Vec<GroupMap> = state
        .out
        .into_iter()
        .map(|table| {
            let images = dom.members().iter().map(|&x| table[x as usize]).collect();
            GroupMap::from_table(dom.clone(), cod.clone(), images)
        })
        .filter(|m| search.fixed.iter().all(|&(x, y)| m.apply(x) == Some(y)))
        .collect();
    out.sort();
    Ok(out)
}

struct Search<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: &'a [u32],
    candidates: &'a [Vec<u32>],
    injective: bool,
    assignment: Vec<u32>,
    tried: usize,
    max_candidates: usize,
    out: Vec<Vec<u32>>,
    max_results: usize,
    table: Vec<u32>,
}

impl Search<'_> {
    fn descend(&mut self) -> Result<()> {
        let k = self.assignment.len();
        if k == self.gens.len() {
            self.table.iter_mut().for_each(|t| *t = UNSET);
            let ok = extend(self.src, self.dst, self.gens, &self.assignment, &mut self.table);
            debug_assert!(ok);
            if self.out.len() >= self.max_results {
                return Err(Error::guard("homomorphism count", self.max_results, "hom enumeration"));
            }
            self.out.push(self.table.clone());
            return Ok(());
        }
        for i in 0..self.candidates[k].len() {
            self.tried += 1;
            if self.tried > self.max_candidates {
                return Err(Error::guard(
                    "candidate assignments",
                    self.max_candidates,
                    "hom enumeration",
                ));
            }
            self.assignment.push(self.candidates[k][i]);
            if self.partial_ok() {
                self.descend()?;
            }
            self.assignment.pop();
        }
        Ok(())
    }

    fn partial_ok(&mut self) -> bool {
        let k = self.assignment.len();
        self.table.iter_mut().for_each(|t| *t = UNSET);
        if !extend(self.src, self.dst, &self.gens[..k], &self.assignment, &mut self.table) {
            return false;
        }
        if self.injective {
            let mut imgs: Vec<u32> = self.table.iter().copied().filter(|&t| t != UNSET).collect();
            let n = imgs.len();
            imgs.sort_unstable();
            imgs.dedup();
            if imgs.len() != n {
                return false;
            }
        }
        true
    }
}

/// Automorphisms of a subgroup, as a permutation group on the positions of
/// its members, with the inner automorphisms marked.
#[derive(Clone, Debug)]
pub struct AutGroup {
    base: Subgroup,
    group: FiniteGroup,
    inner: Subgroup,
}

impl AsRef<FiniteGroup> for AutGroup {
    fn as_ref(&self) -> &FiniteGroup {
        &self.group
    }
}

impl AutGroup {
    /// The full automorphism group of `base <= ambient`.
    pub fn full(ambient: &FiniteGroup, base: &Subgroup, limits: &Limits) -> Result<AutGroup> {
        if base.order() > limits.max_order {
            return Err(Error::guard("group order", limits.max_order, "automorphisms"));
        }
        let search = HomSearch::injective(limits);
        let maps = homomorphisms(ambient, base, ambient, base, &search)?;
        Self::from_tables(ambient, base, maps.iter().map(|m| m.images()))
    }

    /// The group formed by the given automorphism tables (which must be
    /// closed under composition).
    pub fn from_tables<'a>(
        ambient: &FiniteGroup,
        base: &Subgroup,
        tables: impl IntoIterator<Item = &'a [u32]>,
    ) -> Result<AutGroup> {
        let degree = base.order();
        let mut perms: Vec<Perm> = Vec::new();
        for t in tables {
            perms.push(Self::perm_for(base, t)?);
        }
        let inner_perms: Vec<Perm> = base
            .members()
            .iter()
            .map(|&g| {
                let t: Vec<u32> = base.members().iter().map(|&x| ambient.conj(x, g)).collect();
                Self::perm_for(base, &t).expect("inner automorphism")
            })
            .collect();
        let group = closed_group(degree, perms)?;
        let mut inner: Vec<u32> = Vec::new();
        for p in &inner_perms {
            inner.push(
                group
                    .index_of(p)
                    .ok_or_else(|| Error::InvalidInput("automorphism set does not contain Inn".into()))?,
            );
        }
        inner.sort_unstable();
        inner.dedup();
        Ok(AutGroup {
            base: base.clone(),
            group,
            inner: Subgroup::from_sorted(inner),
        })
    }

    fn perm_for(base: &Subgroup, table: &[u32]) -> Result<Perm> {
        let images = table
            .iter()
            .map(|&y| {
                base.position(y)
                    .map(|k| k as u32)
                    .ok_or_else(|| Error::NotAHomomorphism("automorphism leaves its base".into()))
            })
            .collect::<Result<Vec<u32>>>()?;
        Perm::from_images(images)
    }

    pub fn base(&self) -> &Subgroup {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn inner(&self) -> &Subgroup {
        &self.inner
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Element index of the automorphism with the given table, if present.
    pub fn index_of_table(&self, table: &[u32]) -> Option<u32> {
        let p = Self::perm_for(&self.base, table).ok()?;
        self.group.index_of(&p)
    }

    /// The automorphism at element index `a`, as a table on the base.
    pub fn table(&self, a: u32) -> Vec<u32> {
        let p = self.group.element(a);
        (0..self.base.order() as u32)
            .map(|k| self.base.members()[p.apply(k) as usize])
            .collect()
    }

    pub fn map(&self, a: u32) -> GroupMap {
        GroupMap::from_table(self.base.clone(), self.base.clone(), self.table(a))
    }

    /// The subgroup formed by a set of tables (closed under composition).
    pub fn subgroup_of_tables<'a>(&self, tables: impl IntoIterator<Item = &'a [u32]>) -> Result<Subgroup> {
        let mut idx = Vec::new();
        for t in tables {
            idx.push(
                self.index_of_table(t)
                    .ok_or_else(|| Error::InvalidInput("table is not an automorphism in this group".into()))?,
            );
        }
        Ok(self.group.close(&idx))
    }

    /// `Out = Aut / Inn`.
    pub fn out(&self) -> QuotientGroup {
        QuotientGroup::new(&self.group, &self.inner).expect("Inn is normal in Aut")
    }

    /// `true` if `sub` (a subgroup of this group) is a Sylow p-subgroup.
    pub fn is_sylow(&self, sub: &Subgroup, p: u64) -> bool {
        crate::is_p_power(sub.order(), p) && sub.order() == p_part(self.order(), p)
    }
}

/// Builds a group from a set of permutations that is already closed.
fn closed_group(degree: usize, mut perms: Vec<Perm>) -> Result<FiniteGroup> {
    perms.sort();
    perms.dedup();
    let gens = perms.clone();
    // Generation from the set itself reproduces it exactly when closed.
    let g = FiniteGroup::generate(
        degree,
        gens,
        &Limits {
            max_order: perms.len().max(1),
            ..Limits::default()
        },
    )
    .map_err(|_| Error::InvalidInput("automorphism set is not closed".into()))?;
    if g.order() != perms.len() {
        return Err(Error::InvalidInput("automorphism set is not closed".into()));
    }
    let whole = g.whole();
    let small: Vec<Perm> = g.generators_of(&whole).iter().map(|&x| g.element(x).clone()).collect();
    FiniteGroup::generate(degree, small, &Limits::default())
}

/// `G / N` for a normal subgroup `N`, realised as the regular permutation
/// representation on cosets so that it is again a [`FiniteGroup`].
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    kernel: Subgroup,
    reps: Vec<u32>,
    projection: Vec<u32>,
    group: FiniteGroup,
    coset_element: Vec<u32>,
}

impl AsRef<FiniteGroup> for QuotientGroup {
    fn as_ref(&self) -> &FiniteGroup {
        &self.group
    }
}

impl QuotientGroup {
    pub fn new(ambient: &FiniteGroup, kernel: &Subgroup) -> Result<QuotientGroup> {
        if !ambient.is_normal(kernel, &ambient.whole()) {
            return Err(Error::NotASubgroup("kernel is not normal".into()));
        }
        let n = ambient.order();
        let mut projection = alloc::vec![UNSET; n];
        let mut reps = Vec::new();
        for x in 0..n as u32 {
            if projection[x as usize] != UNSET {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &k in kernel.members() {
                projection[ambient.mul(k, x) as usize] = c;
            }
        }
        let m = reps.len();
        let action = |a: u32| -> Perm {
            Perm::from_images((0..m).map(|j| projection[ambient.mul(reps[j], a) as usize]).collect())
                .expect("coset action is a permutation")
        };
        let gens: Vec<Perm> = ambient
            .generators_of(&ambient.whole())
            .into_iter()
            .map(action)
            .collect();
        let group = FiniteGroup::generate(m, gens, &Limits::default())?;
        let coset_element = reps
            .iter()
            .map(|&r| group.index_of(&action(r)).expect("coset action lies in the quotient"))
            .collect();
        Ok(QuotientGroup {
            kernel: kernel.clone(),
            reps,
            projection,
            group,
            coset_element,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Least element of each coset, in coset order.
    pub fn representatives(&self) -> &[u32] {
        &self.reps
    }

    /// Image of an ambient element as an element of [`Self::group`].
    pub fn project(&self, x: u32) -> u32 {
        self.coset_element[self.projection[x as usize] as usize]
    }

    pub fn project_subgroup(&self, h: &Subgroup) -> Subgroup {
        let imgs: Vec<u32> = h.members().iter().map(|&x| self.project(x)).collect();
        self.group.close(&imgs)
    }

    /// Product of cosets `i` and `j` (indices into [`Self::representatives`]).
    pub fn coset_mul(&self, ambient: &FiniteGroup, i: usize, j: usize) -> usize {
        self.projection[ambient.mul(self.reps[i], self.reps[j]) as usize] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// Brute-force oracle: every bijection fixing the identity that
    /// respects products.
    fn aut_count_oracle(g: &FiniteGroup) -> usize {
        let n = g.order();
        let mut count = 0;
        let mut perm: Vec<u32> = (0..n as u32).collect();
        fn rec(g: &FiniteGroup, k: usize, perm: &mut Vec<u32>, count: &mut usize) {
            let n = perm.len();
            if k == n {
                let ok = (0..n as u32).all(|a| {
                    (0..n as u32).all(|b| perm[g.mul(a, b) as usize] == g.mul(perm[a as usize], perm[b as usize]))
                });
                if ok {
                    *count += 1;
                }
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                if k > 0 || perm[0] == 0 {
                    rec(g, k + 1, perm, count);
                }
                perm.swap(k, i);
            }
        }
        rec(g, 0, &mut perm, &mut count);
        count
    }

    #[test]
    fn automorphism_counts() {
        let lim = Limits::default();
        let v4 = catalog::klein_four();
        let c4 = catalog::cyclic(4);
        let d8 = catalog::d8();
        assert_eq!(aut_count_oracle(&v4), 6);
        assert_eq!(aut_count_oracle(&c4), 2);
        assert_eq!(aut_count_oracle(&d8), 8);
        assert_eq!(AutGroup::full(&v4, &v4.whole(), &lim).unwrap().order(), 6);
        assert_eq!(AutGroup::full(&c4, &c4.whole(), &lim).unwrap().order(), 2);
        let a = AutGroup::full(&d8, &d8.whole(), &lim).unwrap();
        assert_eq!(a.order(), 8);
        assert_eq!(a.inner().order(), 4);
        assert_eq!(a.out().order(), 2);
    }

    #[test]
    fn inner_order_is_index_of_center() {
        let lim = Limits::default();
        let s4 = catalog::sym(4);
        for h in s4.subgroup_lattice(&lim).unwrap() {
            let a = AutGroup::full(&s4, &h, &lim).unwrap();
            assert_eq!(a.inner().order(), h.order() / s4.center(&h).order());
        }
    }

    #[test]
    fn homomorphism_enumeration() {
        let lim = Limits::default();
        let s4 = catalog::sym(4);
        let psl = catalog::psl32();
        let inj = homomorphisms(&s4, &s4.whole(), &psl, &psl.whole(), &HomSearch::injective(&lim)).unwrap();
        // 14 subgroups isomorphic to Sym(4), each hit by |Aut(Sym(4))| = 24 embeddings.
        assert_eq!(inj.len(), 336);
        assert!(inj.windows(2).all(|w| w[0] < w[1]));
        for m in inj.iter().take(5) {
            assert!(m.is_homomorphism(&s4, &psl) && m.is_injective());
        }
        let all = homomorphisms(
            &s4,
            &s4.whole(),
            &s4,
            &s4.whole(),
            &HomSearch {
                injective: false,
                fixed: &[],
                max_results: 1000,
                max_candidates: 1_000_000,
            },
        )
        .unwrap();
        // Oracle: every pair of generator images, checked by extension.
        let gens = s4.generators_of(&s4.whole());
        let mut count = 0;
        fn rec(s4: &FiniteGroup, gens: &[u32], acc: &mut Vec<u32>, count: &mut usize) {
            if acc.len() == gens.len() {
                if GroupMap::from_generator_images(s4, gens, s4, s4.whole(), acc).is_ok() {
                    *count += 1;
                }
                return;
            }
            for y in 0..s4.order() as u32 {
                acc.push(y);
                rec(s4, gens, acc, count);
                acc.pop();
            }
        }
        rec(&s4, &gens, &mut Vec::new(), &mut count);
        assert_eq!(all.len(), count);
    }

    #[test]
    fn map_algebra() {
        let d8 = catalog::d8();
        let w = d8.whole();
        let g = 3u32;
        let c = GroupMap::conjugation(&d8, g, &w, &w);
        let ci = c.inverse().unwrap();
        assert_eq!(c.then(&ci).unwrap(), GroupMap::identity(&w));
        let z = d8.center(&w);
        let r = c.restrict(&z).unwrap();
        assert_eq!(r.images(), z.members());
        assert!(GroupMap::checked(&d8, w.clone(), &d8, w.clone(), alloc::vec![0; 8], true).is_err());
    }

    #[test]
    fn quotient_structure() {
        let s4 = catalog::sym(4);
        let v = s4
            .subgroup_lattice(&Limits::default())
            .unwrap()
            .into_iter()
            .find(|h| h.order() == 4 && s4.is_normal(h, &s4.whole()))
            .unwrap();
        let q = QuotientGroup::new(&s4, &v).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.group().order(), 6);
        // Multiplication of cosets agrees with the permutation representation.
        for i in 0..6 {
            for j in 0..6 {
                let k = q.coset_mul(&s4, i, j);
                let (ri, rj, rk) = (q.representatives()[i], q.representatives()[j], q.representatives()[k]);
                assert_eq!(q.group().mul(q.project(ri), q.project(rj)), q.project(rk));
            }
        }
        assert!(QuotientGroup::new(&s4, &s4.sylow_subgroup(2).unwrap()).is_err());
    }
}
