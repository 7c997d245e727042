use super::*;
use crate::catalog::{cyclic, d8, psl32, sym, twisted_sym4_kleins, twisted_sym4_tree};

fn lim() -> Limits {
    Limits::default()
}

fn single(g: FiniteGroup) -> TreeOfGroups {
    TreeOfGroups::new(SiteTree::single("v"), alloc::vec![g], Vec::new(), Vec::new()).unwrap()
}

/// Path `a - e - b` where both monos are given as tables.
fn path(a: FiniteGroup, e: FiniteGroup, b: FiniteGroup, ma: Vec<u32>, mb: Vec<u32>) -> TreeOfGroups {
    let tree = SiteTree::new(
        alloc::vec!["v1".into(), "v2".into()],
        &[("e".into(), "v1".into(), "v2".into())],
    )
    .unwrap();
    let m1 = GroupMap::from_table(e.whole(), a.whole(), ma);
    let m2 = GroupMap::from_table(e.whole(), b.whole(), mb);
    TreeOfGroups::new(tree, alloc::vec![a, b], alloc::vec![e], alloc::vec![[m1, m2]]).unwrap()
}

#[test]
fn site_tree_rejects_non_trees() {
    let v = |xs: &[&str]| xs.iter().map(|s| String::from(*s)).collect::<Vec<_>>();
    let e = |a: &str, b: &str, c: &str| (String::from(a), String::from(b), String::from(c));
    assert!(SiteTree::new(v(&["a", "b", "c"]), &[e("x", "a", "b")]).is_err());
    assert!(SiteTree::new(v(&["a", "b"]), &[e("x", "a", "b"), e("y", "b", "a")]).is_err());
    assert!(SiteTree::new(v(&["a", "a"]), &[]).is_err());
    assert!(SiteTree::new(v(&["a"]), &[e("x", "a", "a")]).is_err());
    assert!(SiteTree::new(
        v(&["a", "b", "c", "d"]),
        &[e("x", "a", "b"), e("y", "a", "b"), e("z", "c", "d")]
    )
    .is_err());
    let t = SiteTree::new(v(&["c", "a", "b"]), &[e("x", "a", "b"), e("y", "c", "b")]).unwrap();
    assert_eq!(t.vertices(), &["a", "b", "c"]);
    assert_eq!(t.bfs_order(0), alloc::vec![0, 1, 2]);
    assert_eq!(t.parents(0)[2], Some((1, 1)));
}

#[test]
fn single_vertex() {
    let ft = induce_fusion_tree(&single(sym(4)), 2, &lim()).unwrap();
    assert!(ft.validate().is_empty());
    assert_eq!(ft.hypothesis_h(), Some(0));
    let c = ft.completion(&lim()).unwrap();
    assert_eq!(c.embeddings.vertices[0], (0..8).collect::<Vec<u32>>());
    assert!(c.system.equals(&ft.vertex_systems[0]).unwrap());
    let g = sym(4);
    let id = GroupMap::identity(&g.whole());
    let r = theorem_a_check(&single(g.clone()), 2, &g, &[id], &lim()).unwrap();
    assert!(r.holds());
}

#[test]
fn twisted_tree_completes_to_psl() {
    let tg = twisted_sym4_tree();
    let ft = induce_fusion_tree(&tg, 2, &lim()).unwrap();
    assert!(ft.validate().is_empty());
    assert_eq!(ft.qualifying_roots(), alloc::vec![0, 1]);
    assert_eq!(ft.hypothesis_h(), Some(0));
    let c = ft.completion(&lim()).unwrap();
    assert!(c.edges_redundant);
    let emb = &c.embeddings;
    assert_eq!(emb.vertex_image(0), emb.vertex_image(1));
    assert_eq!(emb.edge_image(0).order(), 8);

    let g = psl32();
    let embs = find_completion_embeddings(&tg, &g, &lim())
        .unwrap()
        .expect("PSL(3,2) receives the amalgam");
    let r = theorem_a_check(&tg, 2, &g, &embs, &lim()).unwrap();
    assert!(r.sylow && r.fusion_equal, "{r:?}");

    // The completion is not the fusion system of Sym(4): one more class of
    // Klein fours is essential.
    assert!(!c.system.equals(&ft.vertex_systems[0]).unwrap());
    assert!(c.system.is_saturated(&lim()).unwrap().saturated);

    let fac = ft.factorization(&c).unwrap();
    assert_eq!(fac.missing, None);
    assert_eq!(fac.reproduced, fac.morphisms);

    for (_, same) in ft.rerooting_check(&c, &lim()).unwrap() {
        assert!(same);
    }
    let trivial = ft.with_trivial_edges(&lim()).unwrap().completion(&lim()).unwrap();
    assert!(trivial.system.equals(&c.system).unwrap());

    let other = induce_fusion_tree_with(&tg, 2, ConjugatorChoice::Greatest, &lim()).unwrap();
    assert!(other.completion(&lim()).unwrap().system.equals(&c.system).unwrap());

    // Each Klein four is normal on its own side only.
    let [v1, v2] = twisted_sym4_kleins(&tg);
    assert_ne!(v1, v2);
    let gv = &tg.vertex_groups[0];
    let img = |k: usize, h: &Subgroup| {
        let m: Vec<u32> = h
            .members()
            .iter()
            .map(|&x| tg.monos[0][k].images()[x as usize])
            .collect();
        gv.try_subgroup(&m).unwrap()
    };
    assert!(gv.is_normal(&img(0, &v1), &gv.whole()));
    assert!(!gv.is_normal(&img(1, &v1), &gv.whole()));
    assert!(gv.is_normal(&img(1, &v2), &gv.whole()));
}

#[test]
fn collapsed_embedding_is_rejected() {
    let tg = twisted_sym4_tree();
    let g = sym(4);
    let id = GroupMap::identity(&g.whole());
    let trivial = GroupMap::from_table(g.whole(), g.whole(), alloc::vec![0; 24]);
    assert!(theorem_a_check(&tg, 2, &g, &[id, trivial], &lim()).is_err());
}

#[test]
fn corrupted_mono_is_named() {
    let tg = twisted_sym4_tree();
    let mut ft = induce_fusion_tree(&tg, 2, &lim()).unwrap();
    let m = &ft.monos[0][1];
    let mut t = m.images().to_vec();
    t.swap(1, 2);
    ft.monos[0][1] = GroupMap::from_table(m.domain().clone(), m.codomain().clone(), t);
    let v = ft.validate();
    assert_eq!(v.len(), 1);
    assert_eq!((v[0].edge.as_str(), v[0].vertex.as_str()), ("e", "v2"));
    assert!(ft.completion(&lim()).is_err());
}

#[test]
fn hypothesis_h_on_dihedral_path() {
    // D8 - C4 - C4: only the D8 end qualifies.
    let d = d8();
    let c4 = d
        .subgroup_lattice(&lim())
        .unwrap()
        .into_iter()
        .find(|h| h.order() == 4 && d.exponent(h) == 4)
        .unwrap();
    let cg = d.subgroup_as_group(&c4);
    let tg = path(
        d.clone(),
        cg.clone(),
        cg.clone(),
        c4.members().to_vec(),
        (0..4).collect(),
    );
    let ft = induce_fusion_tree(&tg, 2, &lim()).unwrap();
    assert!(ft.validate().is_empty());
    assert_eq!(ft.qualifying_roots(), alloc::vec![0]);
    assert_eq!(tg.index_condition(2), Ok(0));
    let c = ft.completion(&lim()).unwrap();
    assert_eq!(c.embeddings.vertex_image(1), c4);
    assert!(c.system.equals(&FusionSystem::trivial(d, 2, &lim()).unwrap()).unwrap());
}

#[test]
fn index_condition_matches_h() {
    // C6 - C2 - C2 at p = 2.
    let c6 = cyclic(6);
    let two = c6
        .subgroup_lattice(&lim())
        .unwrap()
        .into_iter()
        .find(|h| h.order() == 2)
        .unwrap();
    let c2 = c6.subgroup_as_group(&two);
    let tg = path(c6, c2.clone(), c2.clone(), two.members().to_vec(), alloc::vec![0, 1]);
    let ft = induce_fusion_tree(&tg, 2, &lim()).unwrap();
    for f in ft.vertex_systems.iter().chain(&ft.edge_systems) {
        assert_eq!(f.group().order(), 2);
        assert!(f
            .equals(&FusionSystem::trivial(f.group().clone(), 2, &lim()).unwrap())
            .unwrap());
    }
    assert_eq!(ft.qualifying_roots(), alloc::vec![0, 1]);
    assert_eq!(tg.index_condition(2), Ok(0));
    // At p = 3 the index 3 obstructs rooting at v2, and (H) agrees.
    let ft3 = induce_fusion_tree(&tg, 3, &lim()).unwrap();
    assert_eq!(tg.index_condition(3), Ok(0));
    assert_eq!(ft3.qualifying_roots(), alloc::vec![0]);
}

#[test]
fn trivial_sites_and_identity_paths() {
    let d = d8();
    let f = FusionSystem::trivial(d.clone(), 2, &lim()).unwrap();
    let tree = SiteTree::new(
        alloc::vec!["a".into(), "b".into(), "c".into()],
        &[
            ("x".into(), "a".into(), "b".into()),
            ("y".into(), "b".into(), "c".into()),
        ],
    )
    .unwrap();
    let id = || GroupMap::identity(&d.whole());
    let ft = FusionTree::new(
        tree,
        alloc::vec![f.clone(), f.clone(), f.clone()],
        alloc::vec![f.clone(), f.clone()],
        alloc::vec![[id(), id()], [id(), id()]],
    )
    .unwrap();
    assert!(ft.validate().is_empty());
    let c = ft.completion(&lim()).unwrap();
    for v in 0..3 {
        assert_eq!(c.embeddings.vertices[v], (0..8).collect::<Vec<u32>>());
    }
    assert!(c.system.equals(&f).unwrap());
}
