use alloc::vec::Vec;

use super::FusionSystem;
use crate::group::Subgroup;
use crate::hom::{homomorphisms, HomSearch};
use crate::{Limits, Result};

/// The general facts every saturated system must satisfy, checked on one
/// system. Each field lists the offending subgroups; empty means it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    /// Fully centralised `P` for which `P C_S(P)` is not centric.
    pub centraliser_join_not_centric: Vec<Subgroup>,
    /// Pairs `P ≤ Q` with `P` centric and `Q` not.
    pub overgroup_not_centric: Vec<(Subgroup, Subgroup)>,
    pub alperin_family: Vec<Subgroup>,
    pub alperin_regenerates: bool,
    pub centric_family: CentricFamilyRecord,
    /// Fully normalised `Q` whose normaliser system is not saturated.
    pub unsaturated_normalisers: Vec<Subgroup>,
    pub normalisers_checked: usize,
    /// Normal `Q` missing from some centric radical `R`, as `(Q, R)`.
    pub normal_outside_radical: Vec<(Subgroup, Subgroup)>,
    /// `Q` inside and invariant under `Aut_F(R)` for every `R` of the
    /// Alperin family, yet not normal.
    pub converse_failures: Vec<Subgroup>,
    /// `Q` inside every fully normalised essential subgroup but not normal.
    /// Informational: containment alone does not force normality (the
    /// centre of `D8` in `Sym(4)` is the smallest example), so this is not
    /// part of [`StructuralReport::holds`].
    pub containment_only_not_normal: Vec<Subgroup>,
}

/// The centric-family criterion: if the centric subgroups form a
/// conjugation family and the axioms hold on them, the system is saturated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentricFamilyRecord {
    pub centric_count: usize,
    pub is_family: bool,
    pub axioms_on_centrics: bool,
    pub saturated: bool,
}

impl CentricFamilyRecord {
    pub fn consistent(&self) -> bool {
        let premise = self.is_family && self.axioms_on_centrics;
        (!premise || self.saturated) && (!self.saturated || self.axioms_on_centrics)
    }
}

impl StructuralReport {
    pub fn holds(&self) -> bool {
        self.centraliser_join_not_centric.is_empty()
            && self.overgroup_not_centric.is_empty()
            && self.alperin_regenerates
            && self.centric_family.consistent()
            && self.unsaturated_normalisers.is_empty()
            && self.normal_outside_radical.is_empty()
            && self.converse_failures.is_empty()
    }
}

impl FusionSystem {
    /// Runs every structural check. Meant for saturated systems; on an
    /// unsaturated one the failures are reported, not raised.
    pub fn structural_checks(&self, limits: &Limits) -> Result<StructuralReport> {
        let s = &self.s;
        let whole = s.whole();
        let status = self.all_status(limits)?;

        let mut centraliser_join_not_centric = Vec::new();
        for st in &status {
            if st.fully_centralised {
                let r = s.join(&st.subgroup, &s.centralizer(&st.subgroup, &whole));
                if !self.is_centric(&r)? {
                    centraliser_join_not_centric.push(st.subgroup.clone());
                }
            }
        }

        let mut overgroup_not_centric = Vec::new();
        for a in status.iter().filter(|st| st.centric) {
            for b in &status {
                if a.subgroup.is_subgroup_of(&b.subgroup) && !b.centric {
                    overgroup_not_centric.push((a.subgroup.clone(), b.subgroup.clone()));
                }
            }
        }

        let alperin_family = self.alperin_family(limits)?;
        let alperin_regenerates = self.is_conjugation_family(&alperin_family, limits)?;

        let centrics: Vec<Subgroup> = status
            .iter()
            .filter(|st| st.centric)
            .map(|st| st.subgroup.clone())
            .collect();
        let saturated = self.is_saturated(limits)?.saturated;
        let centric_family = CentricFamilyRecord {
            centric_count: centrics.len(),
            is_family: self.is_conjugation_family(&centrics, limits)?,
            axioms_on_centrics: self.check_axioms_on(&centrics, limits)?.saturated,
            saturated,
        };

        let mut unsaturated_normalisers = Vec::new();
        let mut normalisers_checked = 0;
        for st in status.iter().filter(|st| st.fully_normalised) {
            normalisers_checked += 1;
            let n = self.normalizer_subsystem(&st.subgroup, limits)?;
            if !n.is_saturated(limits)?.saturated {
                unsaturated_normalisers.push(st.subgroup.clone());
            }
        }

        let normal = self.normal_structure()?.normal_subgroups;
        let mut normal_outside_radical = Vec::new();
        for q in &normal {
            for st in status.iter().filter(|st| st.centric && st.radical) {
                if !q.is_subgroup_of(&st.subgroup) {
                    normal_outside_radical.push((q.clone(), st.subgroup.clone()));
                }
            }
        }
        let essentials: Vec<&Subgroup> = status
            .iter()
            .filter(|st| st.fully_normalised && st.essential)
            .map(|st| &st.subgroup)
            .collect();
        let mut converse_failures = Vec::new();
        let mut containment_only_not_normal = Vec::new();
        if saturated {
            for q in status.iter().map(|st| &st.subgroup).filter(|q| !normal.contains(q)) {
                if essentials.iter().all(|r| q.is_subgroup_of(r)) {
                    containment_only_not_normal.push(q.clone());
                }
                let mut invariant = true;
                for r in &alperin_family {
                    invariant &= q.is_subgroup_of(r)
                        && self
                            .aut_tables(r)?
                            .iter()
                            .all(|t| q.members().iter().all(|&x| q.contains(t[r.position(x).unwrap()])));
                }
                if invariant {
                    converse_failures.push(q.clone());
                }
            }
        }

        Ok(StructuralReport {
            centraliser_join_not_centric,
            overgroup_not_centric,
            alperin_family,
            alperin_regenerates,
            centric_family,
            unsaturated_normalisers,
            normalisers_checked,
            normal_outside_radical,
            converse_failures,
            containment_only_not_normal,
        })
    }

    /// The least isomorphism `S -> S'` carrying `self` onto `other`, if the
    /// two systems are isomorphic.
    pub fn isomorphism_to(&self, other: &FusionSystem, limits: &Limits) -> Result<Option<Vec<u32>>> {
        if self.p != other.p
            || self.s.order() != other.s.order()
            || self.lattice.len() != other.lattice.len()
            || self.morphism_count() != other.morphism_count()
        {
            return Ok(None);
        }
        let isos = homomorphisms(
            &self.s,
            &self.s.whole(),
            &other.s,
            &other.s.whole(),
            &HomSearch::injective(limits),
        )?;
        for iso in isos {
            let moved = self.transport(&other.s, iso.images(), limits)?;
            if moved.homs == other.homs {
                return Ok(Some(iso.into_images()));
            }
        }
        Ok(None)
    }
}
