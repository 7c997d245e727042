use alloc::string::String;
use alloc::vec::Vec;

use super::FusionSystem;
use crate::group::Subgroup;
use crate::hom::GroupMap;
use crate::{is_p_power, p_part, Limits, Result};

/// Which saturation axiom a witness violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// Fully normalised implies fully centralised and fully automised.
    A,
    /// Maps onto fully centralised subgroups extend to `N_φ`.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// `P` is fully normalised; `morphism` is an F-isomorphism onto
    /// `conjugate`, which has a strictly larger centralizer.
    NotFullyCentralised { conjugate: Subgroup },
    /// `P` is fully normalised; `morphism` is a p-element of `Aut_F(P)`
    /// outside `Aut_S(P)` that normalises it, so `Aut_S(P)` is not Sylow.
    NotFullyAutomised { aut_s_order: usize, aut_f_order: usize },
    /// `Pφ` is fully centralised but no map in `Hom_F(N_φ, S)` restricts
    /// to `φ = morphism`.
    NoExtension { n_phi: Subgroup },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationWitness {
    pub subgroup: Subgroup,
    pub axiom: Axiom,
    pub kind: WitnessKind,
    pub morphism: GroupMap,
}

/// Per-class data recorded for the fully normalised representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub representative: Subgroup,
    pub class_size: usize,
    pub fully_centralised: bool,
    pub fully_automised: bool,
    pub aut_f_order: usize,
    pub aut_s_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub saturated: bool,
    pub failures: Vec<SaturationWitness>,
    pub classes: Vec<ClassRecord>,
    /// Number of `φ` examined for the extension axiom.
    pub extension_checks: usize,
}

impl SaturationWitness {
    /// Re-derives the failure from the morphism table alone.
    pub fn recheck(&self, f: &FusionSystem) -> bool {
        let s = f.group();
        let whole = s.whole();
        let p = &self.subgroup;
        if !f.contains(&self.morphism) || self.morphism.domain() != p {
            return false;
        }
        match &self.kind {
            WitnessKind::NotFullyCentralised { conjugate } => {
                f.is_fully_normalised(p).unwrap_or(false)
                    && self.morphism.image() == *conjugate
                    && s.centralizer(conjugate, &whole).order() > s.centralizer(p, &whole).order()
            }
            WitnessKind::NotFullyAutomised { .. } => {
                let Ok(aut) = f.aut_group(p) else { return false };
                let Some(a) = aut.index_of_table(self.morphism.images()) else {
                    return false;
                };
                let t = f.aut_s(&aut);
                let g = aut.group();
                let mut gens = g.generators_of(&t);
                gens.push(a);
                let bigger = g.close(&gens);
                f.is_fully_normalised(p).unwrap_or(false) && !t.contains(a) && is_p_power(bigger.order(), f.p())
            }
            WitnessKind::NoExtension { n_phi } => {
                let Ok(n) = f.n_phi(&self.morphism) else { return false };
                n == *n_phi
                    && f.is_fully_centralised(&self.morphism.image()).unwrap_or(false)
                    && f.tables(&n).is_ok_and(|ts| {
                        !ts.iter().any(|t| {
                            p.members()
                                .iter()
                                .zip(self.morphism.images())
                                .all(|(&x, &y)| t[n.position(x).unwrap()] == y)
                        })
                    })
            }
        }
    }
}

impl FusionSystem {
    /// Checks both saturation axioms for every subgroup of `S`.
    pub fn is_saturated(&self, limits: &Limits) -> Result<SaturationReport> {
        let all = self.lattice.clone();
        self.check_axioms_on(&all, limits)
    }

    /// Checks the axioms only for the given subgroups: (a) for each of them
    /// that is fully normalised, (b) for each map out of them.
    pub fn check_axioms_on(&self, subgroups: &[Subgroup], _limits: &Limits) -> Result<SaturationReport> {
        let s = &self.s;
        let whole = s.whole();
        let mut failures = Vec::new();
        let mut classes = Vec::new();
        let mut extension_checks = 0;
        for p in subgroups {
            let idx = self.index(p)?;
            if self.is_fully_normalised(p)? {
                let class = self.f_class(p)?;
                let c_p = s.centralizer(p, &whole).order();
                let bigger = class.iter().find(|r| s.centralizer(r, &whole).order() > c_p).cloned();
                if let Some(r) = &bigger {
                    let iso = self.iso(p, r)?.expect("class member is conjugate");
                    failures.push(SaturationWitness {
                        subgroup: p.clone(),
                        axiom: Axiom::A,
                        kind: WitnessKind::NotFullyCentralised { conjugate: r.clone() },
                        morphism: iso,
                    });
                }
                let aut = self.aut_group(p)?;
                let t = self.aut_s(&aut);
                let automised = t.order() == p_part(aut.order(), self.p);
                if !automised {
                    let g = aut.group();
                    let n = g.normalizer(&t, &g.whole());
                    let a = n
                        .members()
                        .iter()
                        .copied()
                        .find(|&x| !t.contains(x) && t.contains(g.pow(x, self.p as usize)))
                        .expect("a non-Sylow p-subgroup grows inside its normalizer");
                    failures.push(SaturationWitness {
                        subgroup: p.clone(),
                        axiom: Axiom::A,
                        kind: WitnessKind::NotFullyAutomised {
                            aut_s_order: t.order(),
                            aut_f_order: aut.order(),
                        },
                        morphism: aut.map(a).with_codomain(whole.clone()),
                    });
                }
                if self.fully_normalised_representative(p)? == *p {
                    classes.push(ClassRecord {
                        representative: p.clone(),
                        class_size: class.len(),
                        fully_centralised: bigger.is_none(),
                        fully_automised: automised,
                        aut_f_order: aut.order(),
                        aut_s_order: t.order(),
                    });
                }
            }
            for t in &self.homs[idx] {
                let phi = GroupMap::from_table(p.clone(), whole.clone(), t.clone());
                if !self.is_fully_centralised(&phi.image())? {
                    continue;
                }
                extension_checks += 1;
                let n = self.n_phi(&phi)?;
                if n == *p {
                    continue;
                }
                let ok = self.tables(&n)?.iter().any(|ext| {
                    p.members()
                        .iter()
                        .zip(t)
                        .all(|(&x, &y)| ext[n.position(x).unwrap()] == y)
                });
                if !ok {
                    failures.push(SaturationWitness {
                        subgroup: p.clone(),
                        axiom: Axiom::B,
                        kind: WitnessKind::NoExtension { n_phi: n },
                        morphism: phi,
                    });
                }
            }
        }
        Ok(SaturationReport {
            saturated: failures.is_empty(),
            failures,
            classes,
            extension_checks,
        })
    }

    /// `⟨Aut_F(P) | P ∈ X⟩_S == F`.
    pub fn is_conjugation_family(&self, xs: &[Subgroup], limits: &Limits) -> Result<bool> {
        let mut seeds = Vec::new();
        for p in xs {
            for t in self.aut_tables(p)? {
                seeds.push(GroupMap::from_table(p.clone(), p.clone(), t.to_vec()));
            }
        }
        let g = FusionSystem::generate(self.s.clone(), self.p, &seeds, limits)?;
        g.equals(self)
    }

    /// `{S}` together with every fully normalised essential subgroup.
    pub fn alperin_family(&self, limits: &Limits) -> Result<Vec<Subgroup>> {
        let mut out = Vec::new();
        for p in &self.lattice {
            if p.order() == self.s.order() {
                out.push(p.clone());
                continue;
            }
            let st = self.status(p, limits)?;
            if st.fully_normalised && st.essential {
                out.push(p.clone());
            }
        }
        Ok(out)
    }
}

impl SaturationReport {
    /// One line per failure, for text output.
    pub fn summary(&self) -> String {
        if self.saturated {
            return alloc::format!(
                "saturated ({} classes, {} extension checks)",
                self.classes.len(),
                self.extension_checks
            );
        }
        let mut out = alloc::format!("not saturated: {} failure(s)", self.failures.len());
        for w in &self.failures {
            out.push_str(&alloc::format!(
                "\n  axiom {:?} at subgroup of order {}: {:?}",
                w.axiom,
                w.subgroup.order(),
                w.kind
            ));
        }
        out
    }
}
