use alloc::vec::Vec;

use super::FusionSystem;
use crate::group::Subgroup;
use crate::{Error, Limits, Result};

/// Normal subgroups of a fusion system and the derived invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalStructure {
    pub o_p: Subgroup,
    pub constrained: bool,
    pub normal_subgroups: Vec<Subgroup>,
}

impl FusionSystem {
    /// For each subgroup `P ≤ N_S(Q)` (by lattice index of `S`), the tables
    /// of `φ ∈ Hom_F(P, N_S(Q))` that extend to some `φ̄ ∈ Hom_F(PQ, S)`
    /// with `Qφ̄ = Q`. Subgroups outside `N_S(Q)` get an empty list.
    fn normalizer_filter(&self, q: &Subgroup) -> Result<(Subgroup, Vec<Vec<Vec<u32>>>)> {
        let s = &self.s;
        let n = s.normalizer(q, &s.whole());
        let mut out = Vec::with_capacity(self.lattice.len());
        for p in &self.lattice {
            if !p.is_subgroup_of(&n) {
                out.push(Vec::new());
                continue;
            }
            let pq = s.join(p, q);
            let exts: Vec<&Vec<u32>> = self
                .tables(&pq)?
                .iter()
                .filter(|t| q.members().iter().all(|&x| q.contains(t[pq.position(x).unwrap()])))
                .collect();
            let kept: Vec<Vec<u32>> = self
                .tables(p)?
                .iter()
                .filter(|t| t.iter().all(|&y| n.contains(y)))
                .filter(|t| {
                    exts.iter().any(|e| {
                        p.members()
                            .iter()
                            .zip(t.iter())
                            .all(|(&x, &y)| e[pq.position(x).unwrap()] == y)
                    })
                })
                .cloned()
                .collect();
            out.push(kept);
        }
        Ok((n, out))
    }

    /// `N_F(Q)`, a fusion system on `N_S(Q)` (as a group in its own right:
    /// element `k` is member `k` of `N_S(Q)`).
    pub fn normalizer_subsystem(&self, q: &Subgroup, limits: &Limits) -> Result<FusionSystem> {
        self.index(q)?;
        let (n, kept) = self.normalizer_filter(q)?;
        let mut f = FusionSystem::empty(self.s.subgroup_as_group(&n), self.p, limits)?;
        let mut homs: Vec<Vec<Vec<u32>>> = alloc::vec![Vec::new(); f.lattice.len()];
        for (i, tables) in kept.into_iter().enumerate() {
            if tables.is_empty() {
                continue;
            }
            let dom: Vec<u32> = self.lattice[i]
                .members()
                .iter()
                .map(|&x| n.position(x).unwrap() as u32)
                .collect();
            let k = f.index(&Subgroup::from_sorted(dom))?;
            homs[k] = tables
                .into_iter()
                .map(|t| t.into_iter().map(|y| n.position(y).unwrap() as u32).collect())
                .collect();
            homs[k].sort();
        }
        f.homs = homs;
        if !f.regenerate(limits)?.equals(&f)? {
            return Err(Error::InvalidInput("normalizer subsystem is not closed".into()));
        }
        Ok(f)
    }

    /// `Q` is normal in `F` when `N_F(Q) = F`.
    pub fn is_normal_subgroup(&self, q: &Subgroup) -> Result<bool> {
        let (n, kept) = self.normalizer_filter(q)?;
        if n.order() != self.s.order() {
            return Ok(false);
        }
        Ok(kept.iter().zip(&self.homs).all(|(a, b)| a.len() == b.len()))
    }

    pub fn normal_structure(&self) -> Result<NormalStructure> {
        let mut normal = Vec::new();
        for q in &self.lattice {
            if self.is_normal_subgroup(q)? {
                normal.push(q.clone());
            }
        }
        let mut o_p = self.s.trivial();
        for q in &normal {
            o_p = self.s.join(&o_p, q);
        }
        if !normal.contains(&o_p) {
            return Err(Error::InvalidInput("product of normal subgroups is not normal".into()));
        }
        let mut constrained = false;
        for q in &normal {
            if self.is_centric(q)? {
                constrained = true;
                break;
            }
        }
        Ok(NormalStructure {
            o_p,
            constrained,
            normal_subgroups: normal,
        })
    }
}
