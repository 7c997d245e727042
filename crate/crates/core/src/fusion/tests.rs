use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::*;
use crate::{catalog, Perm};

fn lim() -> Limits {
    Limits::default()
}

fn sub(g: &FiniteGroup, cycles: &[&[&[u32]]]) -> Subgroup {
    let perms: Vec<Perm> = cycles
        .iter()
        .map(|c| Perm::from_cycles(g.degree(), c).unwrap())
        .collect();
    g.subgroup_generated_by(&perms).unwrap()
}

fn sym4_system() -> FusionSystem {
    let g = catalog::sym(4);
    let s = g.sylow_subgroup(2).unwrap();
    FusionSystem::of_group(&g, &s, 2, &lim()).unwrap()
}

fn psl_system() -> FusionSystem {
    let g = catalog::psl32();
    let s = g.sylow_subgroup(2).unwrap();
    FusionSystem::of_group(&g, &s, 2, &lim()).unwrap()
}

/// The outer-automorphism system on `D8`: one automorphism swapping the
/// two Klein fours.
fn outer_system() -> FusionSystem {
    let d8 = catalog::d8();
    let aut = AutGroup::full(&d8, &d8.whole(), &lim()).unwrap();
    let a = (0..aut.order() as u32).find(|&a| !aut.inner().contains(a)).unwrap();
    FusionSystem::generate(d8.clone(), 2, &[aut.map(a)], &lim()).unwrap()
}

fn normal_klein(f: &FusionSystem) -> Subgroup {
    sub(f.group(), &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]])
}

/// Naive closure oracle: rounds over all pairs until nothing new appears.
fn closure_oracle(s: &FiniteGroup, seeds: &[(Subgroup, Vec<u32>)]) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let lattice = s.subgroup_lattice(&lim()).unwrap();
    let mut maps: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    for p in &lattice {
        for g in 0..s.order() as u32 {
            maps.insert((
                p.members().to_vec(),
                p.members().iter().map(|&x| s.conj(x, g)).collect(),
            ));
        }
    }
    for (d, t) in seeds {
        maps.insert((d.members().to_vec(), t.clone()));
    }
    loop {
        let cur: Vec<(Vec<u32>, Vec<u32>)> = maps.iter().cloned().collect();
        let before = maps.len();
        for (d, t) in &cur {
            let at = |x: u32| t[d.binary_search(&x).unwrap()];
            for r in &lattice {
                if r.members().iter().all(|x| d.binary_search(x).is_ok()) {
                    maps.insert((r.members().to_vec(), r.members().iter().map(|&x| at(x)).collect()));
                }
            }
            let mut pairs: Vec<(u32, u32)> = t.iter().copied().zip(d.iter().copied()).collect();
            pairs.sort_unstable();
            maps.insert((pairs.iter().map(|p| p.0).collect(), pairs.iter().map(|p| p.1).collect()));
            for (d2, t2) in &cur {
                if t.iter().all(|y| d2.binary_search(y).is_ok()) {
                    let c = t.iter().map(|y| t2[d2.binary_search(y).unwrap()]).collect();
                    maps.insert((d.clone(), c));
                }
            }
        }
        if maps.len() == before {
            return maps;
        }
    }
}

fn as_set(f: &FusionSystem) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    f.all_tables()
        .map(|(i, t)| (f.subgroups()[i].members().to_vec(), t.to_vec()))
        .collect()
}

#[test]
fn trivial_system_is_conjugation() {
    let d8 = catalog::d8();
    let f = FusionSystem::trivial(d8.clone(), 2, &lim()).unwrap();
    assert_eq!(as_set(&f), closure_oracle(&d8, &[]));
    for p in f.subgroups() {
        for q in f.subgroups() {
            let expect: BTreeSet<Vec<u32>> = d8
                .transporter(p, q)
                .into_iter()
                .map(|g| p.members().iter().map(|&x| d8.conj(x, g)).collect())
                .collect();
            let got: BTreeSet<Vec<u32>> = f.hom_set(p, q).unwrap().into_iter().map(|m| m.into_images()).collect();
            assert_eq!(got, expect);
        }
    }
}

#[test]
fn generation_matches_oracle_and_group_fusion() {
    let f = sym4_system();
    let s = f.group().clone();
    let v = normal_klein(&f);
    let aut_v = AutGroup::full(&s, &v, &lim()).unwrap();
    assert_eq!(aut_v.order(), 6);
    let seeds: Vec<GroupMap> = (0..6).map(|a| aut_v.map(a)).collect();
    let g = FusionSystem::generate(s.clone(), 2, &seeds, &lim()).unwrap();
    assert!(g.equals(&f).unwrap());
    let raw: Vec<(Subgroup, Vec<u32>)> = seeds
        .iter()
        .map(|m| (m.domain().clone(), m.images().to_vec()))
        .collect();
    assert_eq!(as_set(&g), closure_oracle(&s, &raw));
    // Closure is idempotent.
    assert!(f.regenerate(&lim()).unwrap().equals(&f).unwrap());
}

#[test]
fn outer_automorphism_system() {
    let f = outer_system();
    let d8 = f.group().clone();
    assert_eq!(f.aut_tables(&d8.whole()).unwrap().len(), 8);
    let raw: Vec<(Subgroup, Vec<u32>)> = f
        .seeds()
        .iter()
        .map(|m| (m.domain().clone(), m.images().to_vec()))
        .collect();
    assert_eq!(as_set(&f), closure_oracle(&d8, &raw));
}

#[test]
fn group_fusion_classes() {
    let f = sym4_system();
    assert_eq!(f.subgroups().len(), 10);
    assert_eq!(f.classes().len(), 7);
    // Oracle: classes under literal Sym(4)-conjugation of subgroups of S.
    let g = catalog::sym(4);
    let s = g.sylow_subgroup(2).unwrap();
    let amb: Vec<Subgroup> = g
        .subgroup_lattice(&lim())
        .unwrap()
        .into_iter()
        .filter(|h| h.is_subgroup_of(&s))
        .collect();
    let mut reps: Vec<Subgroup> = Vec::new();
    for h in &amb {
        if !reps.iter().any(|r| (0..24).any(|x| g.conjugate_subgroup(r, x) == *h)) {
            reps.push(h.clone());
        }
    }
    assert_eq!(reps.len(), 7);

    let d = FusionSystem::of_group(&catalog::d8(), &catalog::d8().whole(), 2, &lim()).unwrap();
    let t = FusionSystem::trivial(catalog::d8(), 2, &lim()).unwrap();
    assert!(d.equals(&t).unwrap());
    assert!(!f
        .equals(&FusionSystem::trivial(f.group().clone(), 2, &lim()).unwrap())
        .unwrap());
}

#[test]
fn psl_klein_fours_fully_automised() {
    let f = psl_system();
    let kleins: Vec<&Subgroup> = f
        .subgroups()
        .iter()
        .filter(|h| h.order() == 4 && f.group().exponent(h) == 2)
        .collect();
    assert_eq!(kleins.len(), 2);
    for v in kleins {
        let st = f.status(v, &lim()).unwrap();
        assert_eq!(st.aut_f_order, 6);
        assert!(st.fully_automised && st.essential);
    }
}

#[test]
fn hom_set_examples() {
    let f = sym4_system();
    let s = f.group();
    let one = s.trivial();
    assert_eq!(f.hom_set(&one, &one).unwrap().len(), 1);
    let v = normal_klein(&f);
    assert_eq!(f.hom_set(&v, &v).unwrap().len(), 6);
    let t = FusionSystem::trivial(catalog::d8(), 2, &lim()).unwrap();
    let z = t.group().center(&t.s());
    let maps = t.hom_set(&z, &t.s()).unwrap();
    assert_eq!(maps.len(), 1);
    assert_eq!(maps[0], GroupMap::inclusion(&z, &t.s()));
    assert!(f.hom_set(&Subgroup::from_sorted(alloc::vec![0, 99]), &v).is_err());
}

#[test]
fn status_examples() {
    let f = sym4_system();
    let s = f.group();
    let v = normal_klein(&f);
    let st = f.status(&v, &lim()).unwrap();
    assert!(st.centric && st.radical && st.essential && st.fully_normalised);
    let c4 = f
        .subgroups()
        .iter()
        .find(|h| h.order() == 4 && s.exponent(h) == 4)
        .unwrap();
    let st = f.status(c4, &lim()).unwrap();
    assert!(st.centric && !st.essential);
    for sys in [sym4_system(), outer_system(), psl_system()] {
        let st = sys.status(&sys.s(), &lim()).unwrap();
        assert!(st.fully_normalised && st.fully_centralised && st.centric);
        for st in sys.all_status(&lim()).unwrap() {
            assert!(!st.essential || st.centric);
        }
    }
}

#[test]
fn n_phi_examples() {
    let f = sym4_system();
    let s = f.group().clone();
    let whole = s.whole();
    for p in f.subgroups() {
        let n = s.normalizer(p, &whole);
        assert_eq!(f.n_phi(&GroupMap::inclusion(p, &whole)).unwrap(), n);
        for g in 0..s.order() as u32 {
            assert_eq!(f.n_phi(&GroupMap::conjugation(&s, g, p, &whole)).unwrap(), n);
        }
    }
    // A transposition-type subgroup mapped onto the other one.
    let t = f
        .subgroups()
        .iter()
        .find(|h| {
            h.order() == 2 && {
                let x = s.element(h.members()[1]);
                (0..4).filter(|&i| x.apply(i) != i).count() == 2
            }
        })
        .unwrap()
        .clone();
    let maps = f.hom_set(&t, &whole).unwrap();
    let other = maps.iter().find(|m| m.image() != t).expect("fused partner");
    let n = f.n_phi(other).unwrap();
    assert_eq!(n.order(), 4);
    assert_eq!(s.exponent(&n), 2);
    assert!(t.is_subgroup_of(&n));
}

#[test]
fn saturation_examples() {
    for f in [
        sym4_system(),
        psl_system(),
        FusionSystem::trivial(catalog::d8(), 2, &lim()).unwrap(),
    ] {
        let r = f.is_saturated(&lim()).unwrap();
        assert!(r.saturated, "{}", r.summary());
    }
    let f = outer_system();
    let r = f.is_saturated(&lim()).unwrap();
    assert!(!r.saturated);
    let w = r
        .failures
        .iter()
        .find(|w| w.subgroup == f.s() && matches!(w.kind, WitnessKind::NotFullyAutomised { .. }))
        .expect("S is not fully automised");
    assert_eq!(
        w.kind,
        WitnessKind::NotFullyAutomised {
            aut_s_order: 4,
            aut_f_order: 8
        }
    );
    for w in &r.failures {
        assert!(w.recheck(&f), "{w:?}");
    }
}

#[test]
fn conjugation_families() {
    let f = sym4_system();
    let all = f.subgroups().to_vec();
    assert!(f.is_conjugation_family(&all, &lim()).unwrap());
    let v = normal_klein(&f);
    assert!(f.is_conjugation_family(&[v.clone(), f.s()], &lim()).unwrap());
    assert!(!f.is_conjugation_family(&[f.s()], &lim()).unwrap());
    assert_eq!(f.alperin_family(&lim()).unwrap(), alloc::vec![v, f.s()]);
}

#[test]
fn normalizer_subsystems() {
    let f = sym4_system();
    let ns = f.normalizer_subsystem(&f.s(), &lim()).unwrap();
    let triv = FusionSystem::trivial(f.group().clone(), 2, &lim()).unwrap();
    assert!(ns.equals(&triv).unwrap());
    let v = normal_klein(&f);
    assert!(f.normalizer_subsystem(&v, &lim()).unwrap().equals(&f).unwrap());
    assert!(f
        .normalizer_subsystem(&f.group().trivial(), &lim())
        .unwrap()
        .equals(&f)
        .unwrap());
}

#[test]
fn normal_structures() {
    let f = sym4_system();
    let n = f.normal_structure().unwrap();
    assert_eq!(n.o_p, normal_klein(&f));
    assert!(n.constrained);
    let p = psl_system().normal_structure().unwrap();
    assert!(p.o_p.is_trivial());
    assert!(!p.constrained);
    let t = FusionSystem::trivial(catalog::d8(), 2, &lim()).unwrap();
    let n = t.normal_structure().unwrap();
    assert_eq!(n.o_p, t.s());
    assert!(n.constrained);
}

#[test]
fn rejects_bad_input() {
    let d8 = catalog::d8();
    let w = d8.whole();
    let bad = GroupMap::from_table(w.clone(), w.clone(), alloc::vec![0; 8]);
    assert!(FusionSystem::generate(d8.clone(), 2, &[bad], &lim()).is_err());
    let s4 = catalog::sym(4);
    assert!(matches!(
        FusionSystem::of_group(&s4, &s4.whole(), 2, &lim()),
        Err(Error::NotSylow(_))
    ));
    let small = Limits {
        max_morphisms: 10,
        ..lim()
    };
    assert!(FusionSystem::trivial(d8, 2, &small).unwrap_err().is_guard());
}

#[test]
fn transport_round_trip() {
    let f = sym4_system();
    // Conjugating S by an element of S is an automorphism of S.
    let s = f.group();
    let g = 3u32;
    let iso: Vec<u32> = (0..s.order() as u32).map(|x| s.conj(x, g)).collect();
    let t = f.transport(s, &iso, &lim()).unwrap();
    assert!(t.equals(&f).unwrap());
}

#[test]
fn structural_checks_on_saturated_systems() {
    for f in [sym4_system(), psl_system()] {
        let r = f.structural_checks(&lim()).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.centric_family.is_family && r.centric_family.saturated);
        assert!(r.normalisers_checked > 0);
    }
    // The Sym(4) family is S plus the normal Klein four.
    let r = sym4_system().structural_checks(&lim()).unwrap();
    assert_eq!(r.alperin_family.iter().map(|p| p.order()).collect::<Vec<_>>(), [4, 8]);
    // Containment in the essentials alone is not enough for normality.
    assert_eq!(r.containment_only_not_normal.len(), 3);
}

#[test]
fn structural_checks_flag_the_outer_system() {
    let f = outer_system();
    let r = f.structural_checks(&lim()).unwrap();
    assert!(!r.centric_family.saturated);
    assert!(r.centric_family.consistent());
}

#[test]
fn isomorphism_between_systems() {
    let f = sym4_system();
    let s = f.group();
    let aut = AutGroup::full(s, &s.whole(), &lim()).unwrap();
    let a = (0..aut.order() as u32).find(|&a| !aut.inner().contains(a)).unwrap();
    let moved = f.transport(s, &aut.table(a), &lim()).unwrap();
    assert!(!moved.equals(&f).unwrap());
    let iso = f.isomorphism_to(&moved, &lim()).unwrap().unwrap();
    assert!(f.transport(s, &iso, &lim()).unwrap().equals(&moved).unwrap());
    assert!(f.isomorphism_to(&psl_system(), &lim()).unwrap().is_none());
    let t = FusionSystem::trivial(s.clone(), 2, &lim()).unwrap();
    assert!(t.isomorphism_to(&f, &lim()).unwrap().is_none());
}
