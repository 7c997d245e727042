//! Fusion systems on a finite p-group, stored extensionally.
//!
//! The Sylow group `S` is held as a [`FiniteGroup`] of its own, so a
//! subgroup of `S` is a set of element indices of that group and a
//! morphism is an image table. For every subgroup `P` only `Hom_F(P, S)` is
//! stored; `Hom_F(P, Q)` is the subset whose image lies in `Q`, which is
//! exactly closure under post-composition with inclusions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::group::{FiniteGroup, Subgroup};
use crate::hom::{AutGroup, GroupMap, QuotientGroup};
use crate::{is_p_power, is_prime, p_part, Error, Limits, Result};

mod normal;
mod saturation;
mod status;
mod suite;

pub use normal::NormalStructure;
pub use saturation::{Axiom, SaturationReport, SaturationWitness, WitnessKind};
pub use status::SubgroupStatus;
pub use suite::{CentricFamilyRecord, StructuralReport};

#[derive(Clone, Debug)]
pub struct FusionSystem {
    p: u64,
    s: FiniteGroup,
    lattice: Vec<Subgroup>,
    lookup: BTreeMap<Subgroup, usize>,
    /// `homs[i]`: sorted image tables of `Hom_F(lattice[i], S)`.
    homs: Vec<Vec<Vec<u32>>>,
    seeds: Vec<GroupMap>,
}

impl FusionSystem {
    /// The trivial system `F_S(S)` on a p-group.
    pub fn trivial(s: FiniteGroup, p: u64, limits: &Limits) -> Result<FusionSystem> {
        Self::generate(s, p, &[], limits)
    }

    /// `⟨Hom_S ∪ seeds⟩_S`: the least fusion system on `s` containing the
    /// seeds. Seeds are maps between subgroups of `s` (indices of `s`).
    pub fn generate(s: FiniteGroup, p: u64, seeds: &[GroupMap], limits: &Limits) -> Result<FusionSystem> {
        let mut f = Self::empty(s, p, limits)?;
        let mut init: Vec<BTreeSet<Vec<u32>>> = f.inner_tables();
        for seed in seeds {
            let i = f.check_map(seed)?;
            init[i].insert(seed.images().to_vec());
        }
        f.homs = f.close(init, limits)?;
        f.seeds = seeds.to_vec();
        Ok(f)
    }

    /// `F_S(G)` for a Sylow p-subgroup `s` of `g`.
    pub fn of_group(g: &FiniteGroup, s: &Subgroup, p: u64, limits: &Limits) -> Result<FusionSystem> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(alloc::format!("{p} is not prime")));
        }
        g.check_subgroup(s)?;
        if !is_p_power(s.order(), p) || s.order() != p_part(g.order(), p) {
            return Err(Error::NotSylow(alloc::format!(
                "order {} is not the {p}-part of {}",
                s.order(),
                g.order()
            )));
        }
        if g.order() > limits.max_order {
            return Err(Error::guard("group order", limits.max_order, "transporter scan"));
        }
        let mut f = Self::empty(g.subgroup_as_group(s), p, limits)?;
        let mut homs = Vec::with_capacity(f.lattice.len());
        let mut total = 0usize;
        for sub in &f.lattice {
            let amb = Subgroup::from_sorted(sub.members().iter().map(|&k| s.members()[k as usize]).collect());
            let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
            for t in g.transporter(&amb, s) {
                set.insert(
                    amb.members()
                        .iter()
                        .map(|&x| s.position(g.conj(x, t)).expect("transporter lands in S") as u32)
                        .collect(),
                );
            }
            total += set.len();
            if total > limits.max_morphisms {
                return Err(Error::guard("stored morphisms", limits.max_morphisms, "group fusion"));
            }
            homs.push(set.into_iter().collect());
        }
        f.homs = homs;
        Ok(f)
    }

    fn empty(s: FiniteGroup, p: u64, limits: &Limits) -> Result<FusionSystem> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(alloc::format!("{p} is not prime")));
        }
        if !is_p_power(s.order(), p) {
            return Err(Error::InvalidInput(alloc::format!(
                "S has order {}, not a power of {p}",
                s.order()
            )));
        }
        let lattice = s.subgroup_lattice(limits)?;
        let lookup = lattice.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        Ok(FusionSystem {
            p,
            s,
            lattice,
            lookup,
            homs: Vec::new(),
            seeds: Vec::new(),
        })
    }

    fn inner_tables(&self) -> Vec<BTreeSet<Vec<u32>>> {
        self.lattice
            .iter()
            .map(|h| {
                (0..self.s.order() as u32)
                    .map(|g| h.members().iter().map(|&x| self.s.conj(x, g)).collect())
                    .collect()
            })
            .collect()
    }

    /// Validates a map into `S` and returns the lattice index of its domain.
    fn check_map(&self, m: &GroupMap) -> Result<usize> {
        let i = self.index(m.domain())?;
        if m.images().iter().any(|&y| y as usize >= self.s.order()) {
            return Err(Error::InvalidInput("image outside S".into()));
        }
        if !m.is_homomorphism(&self.s, &self.s) {
            return Err(Error::NotAHomomorphism("seed does not respect products".into()));
        }
        if !m.is_injective() {
            return Err(Error::NotInjective("seed is not injective".into()));
        }
        Ok(i)
    }

    /// Worklist closure under restriction to maximal subgroups, inversion
    /// of isomorphisms and composition. Inclusions are implicit in the
    /// storage. Any processing order reaches the same least fixpoint.
    fn close(&self, init: Vec<BTreeSet<Vec<u32>>>, limits: &Limits) -> Result<Vec<Vec<Vec<u32>>>> {
        let n = self.lattice.len();
        let maximal = self.maximal_subgroups();
        let mut sets: Vec<BTreeSet<Vec<u32>>> = alloc::vec![BTreeSet::new(); n];
        // by_image[j]: (domain index, table) with image lattice[j].
        let mut by_image: Vec<Vec<(usize, Vec<u32>)>> = alloc::vec![Vec::new(); n];
        let mut queue: Vec<(usize, Vec<u32>)> = Vec::new();
        let mut total = 0usize;

        let mut insert = |i: usize,
                          t: Vec<u32>,
                          sets: &mut Vec<BTreeSet<Vec<u32>>>,
                          by_image: &mut Vec<Vec<(usize, Vec<u32>)>>,
                          queue: &mut Vec<(usize, Vec<u32>)>|
         -> Result<()> {
            if sets[i].contains(&t) {
                return Ok(());
            }
            total += 1;
            if total > limits.max_morphisms {
                let (big, _) = sets.iter().enumerate().max_by_key(|(_, s)| s.len()).unwrap();
                return Err(Error::guard(
                    "stored morphisms",
                    limits.max_morphisms,
                    alloc::format!(
                        "largest hom set is Hom(P, S) for P of order {} with {} maps",
                        self.lattice[big].order(),
                        sets[big].len()
                    ),
                ));
            }
            let j = self.image_index(&t);
            by_image[j].push((i, t.clone()));
            sets[i].insert(t.clone());
            queue.push((i, t));
            Ok(())
        };

        for (i, set) in init.into_iter().enumerate() {
            for t in set {
                insert(i, t, &mut sets, &mut by_image, &mut queue)?;
            }
        }
        while let Some((i, t)) = queue.pop() {
            let dom = &self.lattice[i];
            let j = self.image_index(&t);
            let img = &self.lattice[j];
            for &r in &maximal[i] {
                let rt: Vec<u32> = self.lattice[r]
                    .members()
                    .iter()
                    .map(|&x| t[dom.position(x).unwrap()])
                    .collect();
                insert(r, rt, &mut sets, &mut by_image, &mut queue)?;
            }
            let mut inv = alloc::vec![0u32; t.len()];
            for (k, &y) in t.iter().enumerate() {
                inv[img.position(y).unwrap()] = dom.members()[k];
            }
            insert(j, inv, &mut sets, &mut by_image, &mut queue)?;
            let after: Vec<Vec<u32>> = sets[j].iter().cloned().collect();
            for psi in after {
                let c: Vec<u32> = t.iter().map(|&y| psi[img.position(y).unwrap()]).collect();
                insert(i, c, &mut sets, &mut by_image, &mut queue)?;
            }
            let before: Vec<(usize, Vec<u32>)> = by_image[i].clone();
            for (k, chi) in before {
                let c: Vec<u32> = chi.iter().map(|&y| t[dom.position(y).unwrap()]).collect();
                insert(k, c, &mut sets, &mut by_image, &mut queue)?;
            }
        }
        Ok(sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    fn maximal_subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.lattice.len();
        let mut below: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..i {
                if self.lattice[j].order() < self.lattice[i].order() && self.lattice[j].is_subgroup_of(&self.lattice[i])
                {
                    below[i].push(j);
                }
            }
        }
        (0..n)
            .map(|i| {
                below[i]
                    .iter()
                    .copied()
                    .filter(|&j| {
                        !below[i].iter().any(|&k| {
                            k != j && self.lattice[j].order() < self.lattice[k].order() && below[k].contains(&j)
                        })
                    })
                    .collect()
            })
            .collect()
    }

    fn image_index(&self, table: &[u32]) -> usize {
        let mut m = table.to_vec();
        m.sort_unstable();
        self.lookup[&Subgroup::from_sorted(m)]
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `S` as a group in its own right.
    pub fn group(&self) -> &FiniteGroup {
        &self.s
    }

    pub fn s(&self) -> Subgroup {
        self.s.whole()
    }

    /// Subgroups of `S` in canonical order.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.lattice
    }

    pub fn index(&self, p: &Subgroup) -> Result<usize> {
        self.lookup
            .get(p)
            .copied()
            .ok_or_else(|| Error::NotASubgroup("not a subgroup of S".into()))
    }

    pub fn seeds(&self) -> &[GroupMap] {
        &self.seeds
    }

    pub fn morphism_count(&self) -> usize {
        self.homs.iter().map(Vec::len).sum()
    }

    /// Image tables of `Hom_F(P, S)`.
    pub fn tables(&self, p: &Subgroup) -> Result<&[Vec<u32>]> {
        Ok(&self.homs[self.index(p)?])
    }

    /// `Hom_F(P, Q)` in canonical order.
    pub fn hom_set(&self, p: &Subgroup, q: &Subgroup) -> Result<Vec<GroupMap>> {
        self.index(q)?;
        Ok(self
            .tables(p)?
            .iter()
            .filter(|t| t.iter().all(|&y| q.contains(y)))
            .map(|t| GroupMap::from_table(p.clone(), q.clone(), t.clone()))
            .collect())
    }

    pub fn contains(&self, m: &GroupMap) -> bool {
        match self.tables(m.domain()) {
            Ok(ts) => ts.binary_search_by(|t| t.as_slice().cmp(m.images())).is_ok(),
            Err(_) => false,
        }
    }

    /// Tables of `Aut_F(P)`.
    pub fn aut_tables(&self, p: &Subgroup) -> Result<Vec<&[u32]>> {
        Ok(self
            .tables(p)?
            .iter()
            .filter(|t| t.iter().all(|&y| p.contains(y)))
            .map(Vec::as_slice)
            .collect())
    }

    pub fn aut_group(&self, p: &Subgroup) -> Result<AutGroup> {
        AutGroup::from_tables(&self.s, p, self.aut_tables(p)?)
    }

    /// `Out_F(P) = Aut_F(P) / Inn(P)`.
    pub fn out_group(&self, p: &Subgroup) -> Result<QuotientGroup> {
        Ok(self.aut_group(p)?.out())
    }

    /// `Aut_S(P)` inside the given `Aut_F(P)`.
    pub fn aut_s(&self, aut: &AutGroup) -> Subgroup {
        let p = aut.base();
        let n = self.s.normalizer(p, &self.s.whole());
        let tables: Vec<Vec<u32>> = n
            .members()
            .iter()
            .map(|&g| p.members().iter().map(|&x| self.s.conj(x, g)).collect())
            .collect();
        aut.subgroup_of_tables(tables.iter().map(Vec::as_slice))
            .expect("Aut_S(P) lies in Aut_F(P)")
    }

    /// `P^F`, the F-conjugates of `P`, in canonical order.
    pub fn f_class(&self, p: &Subgroup) -> Result<Vec<Subgroup>> {
        let mut out: BTreeSet<Subgroup> = BTreeSet::new();
        for t in self.tables(p)? {
            out.insert(self.lattice[self.image_index(t)].clone());
        }
        Ok(out.into_iter().collect())
    }

    /// Some F-isomorphism `P -> Q`, the least one, if they are F-conjugate.
    pub fn iso(&self, p: &Subgroup, q: &Subgroup) -> Result<Option<GroupMap>> {
        if p.order() != q.order() {
            return Ok(None);
        }
        Ok(self.hom_set(p, q)?.into_iter().next())
    }

    /// The F-conjugacy classes of subgroups, each sorted, listed by least member.
    pub fn classes(&self) -> Vec<Vec<Subgroup>> {
        let mut seen = alloc::vec![false; self.lattice.len()];
        let mut out = Vec::new();
        for (i, h) in self.lattice.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let cls = self.f_class(h).expect("lattice member");
            for c in &cls {
                seen[self.lookup[c]] = true;
            }
            out.push(cls);
        }
        out
    }

    /// Table-by-table equality; errors if the underlying groups differ.
    pub fn equals(&self, other: &FusionSystem) -> Result<bool> {
        if self.p != other.p || self.s.elements() != other.s.elements() {
            return Err(Error::MismatchedGroups(
                "fusion systems live on different groups".into(),
            ));
        }
        Ok(self.homs == other.homs)
    }

    /// `true` when every morphism of `self` lies in `other` (same `S`).
    pub fn is_subsystem_of(&self, other: &FusionSystem) -> Result<bool> {
        if self.p != other.p || self.s.elements() != other.s.elements() {
            return Err(Error::MismatchedGroups(
                "fusion systems live on different groups".into(),
            ));
        }
        Ok(self
            .homs
            .iter()
            .zip(&other.homs)
            .all(|(a, b)| a.iter().all(|t| b.binary_search(t).is_ok())))
    }

    /// Every morphism, as `(domain index, table)`, in canonical order.
    pub fn all_tables(&self) -> impl Iterator<Item = (usize, &[u32])> {
        self.homs
            .iter()
            .enumerate()
            .flat_map(|(i, ts)| ts.iter().map(move |t| (i, t.as_slice())))
    }

    /// Regenerates from the full table; equal to `self` for a closed system.
    pub fn regenerate(&self, limits: &Limits) -> Result<FusionSystem> {
        let seeds: Vec<GroupMap> = self
            .all_tables()
            .map(|(i, t)| GroupMap::from_table(self.lattice[i].clone(), self.s(), t.to_vec()))
            .collect();
        FusionSystem::generate(self.s.clone(), self.p, &seeds, limits)
    }

    /// The system carried along an isomorphism `S -> target` given as an
    /// element table (`iso[x]` is the image of element `x`).
    pub fn transport(&self, target: &FiniteGroup, iso: &[u32], limits: &Limits) -> Result<FusionSystem> {
        if iso.len() != self.s.order() || target.order() != self.s.order() {
            return Err(Error::MismatchedGroups("transport needs an isomorphism".into()));
        }
        let mut f = Self::empty(target.clone(), self.p, limits)?;
        let mut homs: Vec<Vec<Vec<u32>>> = alloc::vec![Vec::new(); f.lattice.len()];
        for (i, t) in self.all_tables() {
            let dom = &self.lattice[i];
            let mut pairs: Vec<(u32, u32)> = dom
                .members()
                .iter()
                .zip(t)
                .map(|(&x, &y)| (iso[x as usize], iso[y as usize]))
                .collect();
            pairs.sort_unstable();
            let new_dom = Subgroup::from_sorted(pairs.iter().map(|p| p.0).collect());
            let k = f.index(&new_dom)?;
            homs[k].push(pairs.into_iter().map(|p| p.1).collect());
        }
        for h in &mut homs {
            h.sort();
        }
        f.homs = homs;
        Ok(f)
    }

    /// The maps `φ` of `self` sent along an injective `emb: S -> T`, as
    /// seeds `Pemb -> T` (indices of the target group, codomain `target`).
    pub fn push_forward(&self, emb: &[u32], target: &Subgroup) -> Vec<GroupMap> {
        self.all_tables()
            .map(|(i, t)| {
                let dom = &self.lattice[i];
                let mut pairs: Vec<(u32, u32)> = dom
                    .members()
                    .iter()
                    .zip(t)
                    .map(|(&x, &y)| (emb[x as usize], emb[y as usize]))
                    .collect();
                pairs.sort_unstable();
                let d = Subgroup::from_sorted(pairs.iter().map(|p| p.0).collect());
                GroupMap::from_table(d, target.clone(), pairs.into_iter().map(|p| p.1).collect())
            })
            .collect()
    }

    /// A short description, used in reports.
    pub fn describe(&self) -> String {
        alloc::format!(
            "fusion system at p = {} on a group of order {} ({} subgroups, {} morphisms)",
            self.p,
            self.s.order(),
            self.lattice.len(),
            self.morphism_count()
        )
    }
}

#[cfg(test)]
mod tests;
