use fuscat_core::amalgam::{Amalgam, Side};
use fuscat_core::catalog::{psl32, twisted_sym4_tree};
use fuscat_core::orbit::{GraphMode, OrbitContext, Site};
use fuscat_core::tree::induce_fusion_tree;
use fuscat_core::{FiniteGroup, FusionSystem, Limits, Perm};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_laws(a in perm(6), b in perm(6), c in perm(6)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        let one = Perm::from_one_based(&a.one_based()).unwrap();
        prop_assert_eq!(one, a);
    }

    #[test]
    fn subgroup_structure(xs in proptest::collection::vec(0u32..168, 1..3)) {
        let g = psl32();
        let h = g.close(&xs);
        prop_assert_eq!(g.order() % h.order(), 0);
        let n = g.normalizer(&h, &g.whole());
        let c = g.centralizer(&h, &g.whole());
        prop_assert!(h.is_subgroup_of(&n));
        prop_assert!(c.is_subgroup_of(&n));
        prop_assert!(g.is_normal(&h, &n));
        for &x in &xs {
            prop_assert_eq!(g.conjugate_subgroup(&h, x).order(), h.order());
        }
    }

    #[test]
    fn group_fusion_is_saturated(gens in proptest::collection::vec(perm(5), 1..3), p in prop_oneof![Just(2u64), Just(3u64)]) {
        let lim = Limits::default();
        let g = FiniteGroup::generate(5, gens, &lim).unwrap();
        let s = g.sylow_subgroup(p).unwrap();
        let f = FusionSystem::of_group(&g, &s, p, &lim).unwrap();
        let r = f.is_saturated(&lim).unwrap();
        prop_assert!(r.saturated, "{}", r.summary());
        // The Alperin family generates.
        let fam = f.alperin_family(&lim).unwrap();
        prop_assert!(f.is_conjugation_family(&fam, &lim).unwrap());
    }

    #[test]
    fn normal_form_is_multiplicative(
        u in proptest::collection::vec((any::<bool>(), 0u32..24), 0..6),
        v in proptest::collection::vec((any::<bool>(), 0u32..24), 0..6),
    ) {
        let a = Amalgam::from_tree(&twisted_sym4_tree()).unwrap();
        let side = |b: bool| if b { Side::A } else { Side::B };
        let u: Vec<_> = u.into_iter().map(|(b, x)| (side(b), x)).collect();
        let v: Vec<_> = v.into_iter().map(|(b, x)| (side(b), x)).collect();
        let nu = a.normal_form(&u).unwrap();
        let nv = a.normal_form(&v).unwrap();
        let mut uv = u.clone();
        uv.extend(&v);
        prop_assert_eq!(a.normal_form(&uv).unwrap(), a.multiply(&nu, &nv));
        prop_assert_eq!(a.normal_form(&a.letters(&nu)).unwrap(), nu.clone());
        prop_assert_eq!(a.multiply(&a.invert(&nu), &nu), a.identity());
    }
}

#[test]
fn class_representatives_are_stable() {
    let lim = Limits::default();
    let ft = induce_fusion_tree(&twisted_sym4_tree(), 2, &lim).unwrap();
    let c = ft.completion(&lim).unwrap();
    let cx = OrbitContext::new(&ft, &c, &lim);
    let f = &c.system;
    for p in f.subgroups() {
        for site in [Site::Vertex(0), Site::Vertex(1), Site::Edge(0)] {
            let classes = cx.rep_classes(p, site, GraphMode::Full).unwrap();
            let mut reps = Vec::new();
            for class in &classes {
                let r = &class.representative;
                assert_eq!(&cx.canonical(site, r), r);
                reps.push(r.clone());
            }
            // Recounting from the representatives alone gives the same classes.
            reps.sort();
            reps.dedup();
            assert_eq!(reps.len(), classes.len());
        }
    }
}

#[test]
fn fixed_points_of_automisers_are_subtrees() {
    let lim = Limits::default();
    let ft = induce_fusion_tree(&twisted_sym4_tree(), 2, &lim).unwrap();
    let c = ft.completion(&lim).unwrap();
    let cx = OrbitContext::new(&ft, &c, &lim);
    let f = &c.system;
    let s = f.group();
    for p in f.subgroups() {
        let g = cx.build_rep_graph(p, GraphMode::Restricted).unwrap();
        assert!(g.subgraph(&(0..g.vertices.len()).collect(), &(0..g.edges.len()).collect()) == g);
        if !g.is_tree() {
            continue;
        }
        let n = s.normalizer(p, &s.whole());
        let psis: Vec<Vec<u32>> = n
            .members()
            .iter()
            .map(|&x| p.members().iter().map(|&y| s.conj(y, x)).collect())
            .collect();
        let fixed = cx.aut_action_fixed_points(&g, &psis);
        assert!(!fixed.vertices.is_empty());
        assert!(fixed.is_tree());
    }
}
