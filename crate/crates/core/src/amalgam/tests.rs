use alloc::collections::BTreeSet;

use super::*;
use crate::catalog::{psl32, twisted_sym4_tree};
use crate::tree::find_completion_embeddings;
use crate::Perm;

fn am() -> Amalgam {
    Amalgam::from_tree(&twisted_sym4_tree()).unwrap()
}

fn elem(g: &FiniteGroup, cycles: &[&[u32]]) -> u32 {
    g.index_of(&Perm::from_cycles(g.degree(), cycles).unwrap()).unwrap()
}

#[test]
fn transversals() {
    let a = am();
    for s in [Side::A, Side::B] {
        assert_eq!(a.transversal(s).len(), 3);
        assert_eq!(a.transversal(s)[0], 0);
    }
}

#[test]
fn small_normal_forms() {
    let a = am();
    let c = a.c_image(Side::A).members()[3];
    let w = a.normal_form(&[(Side::A, c)]).unwrap();
    assert_eq!((w.len(), a.c_into(Side::A, w.prefix)), (0, c));

    let x = elem(a.group(Side::A), &[&[1, 2, 3]]);
    let y = elem(a.group(Side::B), &[&[1, 2, 3]]);
    let z = elem(a.group(Side::A), &[&[1, 3, 2]]);
    let w2 = a.normal_form(&[(Side::A, x), (Side::B, y)]).unwrap();
    assert_eq!(w2.len(), 2);
    assert!(!a.in_c(&w2));
    let w3 = a.normal_form(&[(Side::A, x), (Side::B, y), (Side::A, z)]).unwrap();
    assert_eq!(w3.len(), 3);
    assert_eq!(a.normal_form(&[(Side::A, x), (Side::B, y), (Side::A, z)]).unwrap(), w3);
    for (s, t) in &w3.factors {
        assert!(a.transversal(*s).contains(t));
    }
    assert!(a.normal_form(&[(Side::B, 99)]).is_err());
}

#[test]
fn normal_forms_of_short_products_are_distinct_elements() {
    // Oracle by coset counting: |C| (1 + 2(i-1) + 2(i-1)^2) with i = 3.
    let a = am();
    let mut seen = BTreeSet::new();
    let (na, nb) = (a.group(Side::A).order() as u32, a.group(Side::B).order() as u32);
    for x in 0..na {
        for y in 0..nb {
            seen.insert(a.normal_form(&[(Side::A, x), (Side::B, y)]).unwrap());
            seen.insert(a.normal_form(&[(Side::B, y), (Side::A, x)]).unwrap());
        }
    }
    assert_eq!(seen.len(), 8 * (1 + 2 * 2 + 2 * 4));
}

#[test]
fn group_laws() {
    let a = am();
    let words: Vec<AmalgamWord> = [
        alloc::vec![(Side::A, 5), (Side::B, 7), (Side::A, 19)],
        alloc::vec![(Side::B, 23), (Side::A, 1)],
        alloc::vec![(Side::A, 11)],
        alloc::vec![(Side::B, 2), (Side::A, 17), (Side::B, 9), (Side::A, 4)],
    ]
    .iter()
    .map(|r| a.normal_form(r).unwrap())
    .collect();
    for u in &words {
        assert_eq!(a.multiply(u, &a.invert(u)), a.identity());
        for v in &words {
            let mut raw = a.letters(u);
            raw.extend(a.letters(v));
            assert_eq!(a.multiply(u, v), a.normal_form(&raw).unwrap());
            for w in &words {
                assert_eq!(a.multiply(&a.multiply(u, v), w), a.multiply(u, &a.multiply(v, w)));
            }
        }
    }
}

#[test]
fn evaluation_respects_normal_form() {
    let tg = twisted_sym4_tree();
    let a = Amalgam::from_tree(&tg).unwrap();
    let g = psl32();
    let embs = find_completion_embeddings(&tg, &g, &Limits::default())
        .unwrap()
        .unwrap();
    let raw = alloc::vec![(Side::A, 5), (Side::B, 7), (Side::A, 19), (Side::B, 3)];
    let direct = raw.iter().fold(0, |acc, &(s, x)| {
        let e = if s == Side::A { &embs[0] } else { &embs[1] };
        g.mul(acc, e.images()[x as usize])
    });
    let w = a.normal_form(&raw).unwrap();
    assert_eq!(a.evaluate(&w, &g, &embs[0], &embs[1]), direct);
    assert_eq!(a.evaluate(&a.identity(), &g, &embs[0], &embs[1]), 0);
}

#[test]
fn alternating_products_leave_c() {
    let a = am();
    let lim = Limits::default();
    let r1 = a.alternating_products_check(1, &lim).unwrap();
    assert!(r1.holds());
    assert_eq!(r1.words, 32);
    let r3 = a.alternating_products_check(3, &lim).unwrap();
    assert!(r3.holds());
    assert_eq!(r3.by_length, alloc::vec![0, 32, 512, 8192]);
    assert!(a.alternating_products_check(7, &lim).is_err());
}

#[test]
fn chain_examples() {
    let a = am();
    let ga = a.group(Side::A);
    let z = ga.center(a.c_image(Side::A));
    // g in A: nothing to check.
    let r = a
        .conjugation_chain(
            &z,
            &Factored {
                a0: 5,
                pairs: Vec::new(),
                b_inf: None,
            },
        )
        .unwrap();
    assert!(r.conj_in_a && r.vacuous && r.chain.len() == 1);

    // An order three subgroup pushed through a B-letter lies in neither side.
    let x = ga.close(&[elem(ga, &[&[1, 2, 3]])]);
    let b = (0..24).find(|&b| !a.c_image(Side::B).contains(b)).unwrap();
    let r = a
        .conjugation_chain(
            &x,
            &Factored {
                a0: 0,
                pairs: Vec::new(),
                b_inf: Some(b),
            },
        )
        .unwrap();
    assert!(!r.conj_in_a && !r.conj_in_b && r.vacuous && r.holds());

    // The centre through every g with s ≤ 1.
    for len in 1..=3 {
        for g in a.factorisations(len) {
            assert!(a.conjugation_chain(&z, &g).unwrap().holds());
        }
    }
    let bad = Factored {
        a0: 0,
        pairs: alloc::vec![(0, 0)],
        b_inf: None,
    };
    assert!(a.conjugation_chain(&z, &bad).is_err());
}

#[test]
fn last_chain_group_may_leave_c() {
    // g = b_1 a_1: X^g lies in A for every X ≤ C with X^{b_1} ≤ C, but the
    // last chain group is X^g itself, which need not lie in C.
    let a = am();
    let ga = a.group(Side::A);
    let lattice = ga.subgroup_lattice(&Limits::default()).unwrap();
    let mut found = false;
    for x in lattice.iter().filter(|h| h.is_subgroup_of(a.c_image(Side::A))) {
        for g in a.factorisations(3) {
            let r = a.conjugation_chain(x, &g).unwrap();
            assert!(r.holds());
            if !r.vacuous && !r.all_in_c {
                assert!(r.last_exempt);
                found = true;
            }
        }
    }
    assert!(found);
}

#[test]
fn factorisation_counts() {
    let a = am();
    assert_eq!(a.factorisations(1).len(), 24);
    assert_eq!(a.factorisations(2).len(), 24 * 24);
    assert_eq!(a.factorisations(3).len(), 24 * 16 * 16);
}
