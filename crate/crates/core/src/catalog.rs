//! Small named groups used by the examples, presets and tests.

use alloc::vec::Vec;

use crate::hom::{AutGroup, GroupMap};
use crate::tree::{SiteTree, TreeOfGroups};
use crate::{FiniteGroup, Limits, Perm, Subgroup};

fn named(degree: usize, gens: Vec<Perm>, name: &str) -> FiniteGroup {
    FiniteGroup::generate(degree, gens, &Limits::default())
        .expect("catalog groups are small")
        .with_name(name)
}

fn cycle(degree: usize, points: &[u32]) -> Perm {
    Perm::from_cycles(degree, &[points]).expect("valid cycle")
}

/// `Sym(n)` on `n` points, generated by `(1 2)` and `(1 2 .. n)`.
pub fn sym(n: usize) -> FiniteGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[1, 2]));
        let all: Vec<u32> = (1..=n as u32).collect();
        gens.push(cycle(n, &all));
    }
    named(n.max(1), gens, &alloc::format!("Sym({n})"))
}

/// `Alt(n)`, generated by the 3-cycles `(1 2 k)`.
pub fn alt(n: usize) -> FiniteGroup {
    let gens = (3..=n as u32).map(|k| cycle(n, &[1, 2, k])).collect();
    named(n.max(1), gens, &alloc::format!("Alt({n})"))
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> FiniteGroup {
    let gens = if n >= 2 {
        let all: Vec<u32> = (1..=n as u32).collect();
        alloc::vec![cycle(n, &all)]
    } else {
        Vec::new()
    };
    named(n.max(1), gens, &alloc::format!("C{n}"))
}

/// Dihedral group of order 8 as `⟨(1 2 3 4), (1 3)⟩`.
pub fn d8() -> FiniteGroup {
    named(4, alloc::vec![cycle(4, &[1, 2, 3, 4]), cycle(4, &[1, 3])], "D8")
}

/// The regular Klein four group on 4 points.
pub fn klein_four() -> FiniteGroup {
    let a = Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
    let b = Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
    named(4, alloc::vec![a, b], "V4")
}

/// `PSL(3,2)` acting on the 7 points of the Fano plane.
pub fn psl32() -> FiniteGroup {
    let a = Perm::from_one_based(&[2, 4, 6, 3, 1, 7, 5]).unwrap();
    let b = Perm::from_one_based(&[1, 3, 2, 4, 5, 7, 6]).unwrap();
    named(7, alloc::vec![a, b], "PSL(3,2)")
}

/// Two copies of `Sym(4)` glued along a Sylow 2-subgroup `D8`, where the
/// second gluing is twisted by an outer automorphism of `D8`. The normal
/// Klein four of the first copy is then not normal in the second one.
///
/// The edge group is `D8` as a group of its own; its first mono is the
/// inclusion and the second is the least non-inner automorphism followed
/// by the inclusion.
pub fn twisted_sym4_tree() -> TreeOfGroups {
    let g = sym(4);
    let s = g.sylow_subgroup(2).expect("Sym(4) has a Sylow 2-subgroup");
    let d = g.subgroup_as_group(&s).with_name("D8");
    let alpha = outer_automorphism(&d);
    let incl: Vec<u32> = s.members().to_vec();
    let twisted: Vec<u32> = alpha.iter().map(|&k| s.members()[k as usize]).collect();
    let tree = SiteTree::new(
        alloc::vec!["v1".into(), "v2".into()],
        &[("e".into(), "v1".into(), "v2".into())],
    )
    .expect("two vertices and one edge");
    let m1 = GroupMap::from_table(d.whole(), g.whole(), incl);
    let m2 = GroupMap::from_table(d.whole(), g.whole(), twisted);
    TreeOfGroups::new(tree, alloc::vec![g.clone(), g], alloc::vec![d], alloc::vec![[m1, m2]])
        .expect("monos are injective homomorphisms")
}

/// Table of the least automorphism of `d` that is not inner.
pub fn outer_automorphism(d: &FiniteGroup) -> Vec<u32> {
    let aut = AutGroup::full(d, &d.whole(), &Limits::default()).expect("small group");
    let a = (0..aut.order() as u32)
        .find(|&a| !aut.inner().contains(a))
        .expect("group has an outer automorphism");
    aut.table(a)
}

/// The two Klein fours of the edge group of [`twisted_sym4_tree`]: the
/// first is normal in the first vertex group, the second in the second.
pub fn twisted_sym4_kleins(tg: &TreeOfGroups) -> [Subgroup; 2] {
    let g = &tg.vertex_groups[0];
    let d = &tg.edge_groups[0];
    let normal_klein = g
        .subgroup_lattice(&Limits::default())
        .expect("small group")
        .into_iter()
        .find(|h| h.order() == 4 && g.is_normal(h, &g.whole()))
        .expect("Sym(4) has a normal Klein four");
    let pull = |k: usize| {
        let m = tg.monos[0][k].images();
        let mut v: Vec<u32> = (0..d.order() as u32)
            .filter(|&x| normal_klein.contains(m[x as usize]))
            .collect();
        v.sort_unstable();
        d.try_subgroup(&v).expect("preimage of a subgroup")
    };
    [pull(0), pull(1)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(sym(1).order(), 1);
        assert_eq!(sym(3).order(), 6);
        assert_eq!(sym(4).order(), 24);
        assert_eq!(alt(4).order(), 12);
        assert_eq!(alt(5).order(), 60);
        assert_eq!(cyclic(6).order(), 6);
        assert_eq!(klein_four().order(), 4);
        assert_eq!(psl32().order(), 168);
    }
}
