use alloc::vec::Vec;

use super::FusionSystem;
use crate::group::Subgroup;
use crate::hom::GroupMap;
use crate::{p_part, Error, Limits, Result};

/// The local flags of one subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupStatus {
    pub subgroup: Subgroup,
    pub fully_normalised: bool,
    pub fully_centralised: bool,
    pub fully_automised: bool,
    pub centric: bool,
    pub radical: bool,
    pub essential: bool,
    pub f_class: Vec<Subgroup>,
    pub aut_f_order: usize,
    pub out_f_order: usize,
}

impl FusionSystem {
    pub fn status(&self, p: &Subgroup, limits: &Limits) -> Result<SubgroupStatus> {
        let s = &self.s;
        let whole = s.whole();
        let class = self.f_class(p)?;
        let n_p = s.normalizer(p, &whole).order();
        let c_p = s.centralizer(p, &whole).order();
        let fully_normalised = class.iter().all(|r| s.normalizer(r, &whole).order() <= n_p);
        let fully_centralised = class.iter().all(|r| s.centralizer(r, &whole).order() <= c_p);
        let centric = class.iter().all(|r| s.centralizer(r, &whole).is_subgroup_of(r));
        let aut = self.aut_group(p)?;
        let aut_s = self.aut_s(&aut);
        let fully_automised = aut_s.order() == p_part(aut.order(), self.p);
        let out = aut.out();
        let og = out.group();
        let radical = og.p_core(self.p)?.is_trivial();
        let essential = centric && og.strongly_p_embedded_subgroup(self.p, limits)?.is_some();
        Ok(SubgroupStatus {
            subgroup: p.clone(),
            fully_normalised,
            fully_centralised,
            fully_automised,
            centric,
            radical,
            essential,
            f_class: class,
            aut_f_order: aut.order(),
            out_f_order: out.order(),
        })
    }

    /// Status of every subgroup, in lattice order.
    pub fn all_status(&self, limits: &Limits) -> Result<Vec<SubgroupStatus>> {
        self.lattice.iter().map(|p| self.status(p, limits)).collect()
    }

    pub fn is_centric(&self, p: &Subgroup) -> Result<bool> {
        let whole = self.s.whole();
        Ok(self
            .f_class(p)?
            .iter()
            .all(|r| self.s.centralizer(r, &whole).is_subgroup_of(r)))
    }

    pub fn is_fully_normalised(&self, p: &Subgroup) -> Result<bool> {
        let whole = self.s.whole();
        let n = self.s.normalizer(p, &whole).order();
        Ok(self
            .f_class(p)?
            .iter()
            .all(|r| self.s.normalizer(r, &whole).order() <= n))
    }

    pub fn is_fully_centralised(&self, p: &Subgroup) -> Result<bool> {
        let whole = self.s.whole();
        let c = self.s.centralizer(p, &whole).order();
        Ok(self
            .f_class(p)?
            .iter()
            .all(|r| self.s.centralizer(r, &whole).order() <= c))
    }

    /// The canonically least fully normalised member of `P^F`.
    pub fn fully_normalised_representative(&self, p: &Subgroup) -> Result<Subgroup> {
        let whole = self.s.whole();
        let class = self.f_class(p)?;
        let best = class
            .iter()
            .map(|r| self.s.normalizer(r, &whole).order())
            .max()
            .expect("class contains P");
        Ok(class
            .into_iter()
            .find(|r| self.s.normalizer(r, &whole).order() == best)
            .expect("maximum is attained"))
    }

    /// `N_φ = {g ∈ N_S(P) | φ⁻¹ c_g φ ∈ Aut_S(Pφ)}` for `φ ∈ Hom_F(P, S)`.
    pub fn n_phi(&self, phi: &GroupMap) -> Result<Subgroup> {
        if !self.contains(phi) {
            return Err(Error::NotInFusionSystem("n_phi of a foreign map".into()));
        }
        let s = &self.s;
        let whole = s.whole();
        let p = phi.domain();
        let q = phi.image();
        let inv = phi.inverse().expect("fusion maps are injective");
        let mut aut_s_q: Vec<Vec<u32>> = s
            .normalizer(&q, &whole)
            .members()
            .iter()
            .map(|&h| q.members().iter().map(|&y| s.conj(y, h)).collect())
            .collect();
        aut_s_q.sort();
        aut_s_q.dedup();
        let members: Vec<u32> = s
            .normalizer(p, &whole)
            .members()
            .iter()
            .copied()
            .filter(|&g| {
                let t: Vec<u32> = q
                    .members()
                    .iter()
                    .map(|&y| phi.apply(s.conj(inv.apply(y).unwrap(), g)).unwrap())
                    .collect();
                aut_s_q.binary_search(&t).is_ok()
            })
            .collect();
        s.try_subgroup(&members)
    }
}
