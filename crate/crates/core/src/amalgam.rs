//! Normal forms in an amalgamated free product `A *_C B` of finite groups.
//!
//! An element is written uniquely as `c t_1 ... t_n` with `c ∈ C` and the
//! `t_i` non-identity right-coset representatives of `C` in `A` or `B`,
//! alternating in side. Representatives are the least element of each
//! coset `Cx`.

use alloc::vec::Vec;

use crate::group::{FiniteGroup, Subgroup};
use crate::hom::GroupMap;
use crate::tree::TreeOfGroups;
use crate::{Error, Limits, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmalgamWord {
    /// Element of `C`.
    pub prefix: u32,
    pub factors: Vec<(Side, u32)>,
}

impl AmalgamWord {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

struct SideData {
    group: FiniteGroup,
    mono: Vec<u32>,
    image: Subgroup,
    /// For each element `x`: `(c, t)` with `x = mono(c) t`.
    split: Vec<(u32, u32)>,
    transversal: Vec<u32>,
}

pub struct Amalgam {
    c: FiniteGroup,
    sides: [SideData; 2],
}

fn side_data(c: &FiniteGroup, group: FiniteGroup, mono: &GroupMap) -> Result<SideData> {
    if mono.images().len() != c.order() || !mono.is_homomorphism(c, &group) || !mono.is_injective() {
        return Err(Error::NotAHomomorphism(
            "amalgam mono must be an injective homomorphism".into(),
        ));
    }
    let image = mono.image();
    let mut pre = alloc::vec![u32::MAX; group.order()];
    for (k, &y) in mono.images().iter().enumerate() {
        pre[y as usize] = k as u32;
    }
    let mut split = alloc::vec![(0u32, 0u32); group.order()];
    let mut transversal = Vec::new();
    for x in 0..group.order() as u32 {
        let t = image.members().iter().map(|&h| group.mul(h, x)).min().unwrap();
        if t == x {
            transversal.push(t);
        }
        let c = group.mul(x, group.inv(t));
        split[x as usize] = (pre[c as usize], t);
    }
    Ok(SideData {
        group,
        mono: mono.images().to_vec(),
        image,
        split,
        transversal,
    })
}

fn idx(s: Side) -> usize {
    match s {
        Side::A => 0,
        Side::B => 1,
    }
}

/// One factorisation `a_0 b_1 a_1 ... b_s a_s b_∞` of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub a0: u32,
    pub pairs: Vec<(u32, u32)>,
    pub b_inf: Option<u32>,
}

impl Factored {
    pub fn letters(&self) -> Vec<(Side, u32)> {
        let mut out = alloc::vec![(Side::A, self.a0)];
        for &(b, a) in &self.pairs {
            out.push((Side::B, b));
            out.push((Side::A, a));
        }
        if let Some(b) = self.b_inf {
            out.push((Side::B, b));
        }
        out
    }
}

/// Outcome of following `X` through a factorisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub conj_in_a: bool,
    pub conj_in_b: bool,
    /// `X_0, Y_1, X_1, ...` as far as each step stays defined (side, subgroup).
    pub chain: Vec<(Side, Subgroup)>,
    /// Every chain group lies in `C` (the last one only when required, see
    /// `last_exempt`) and the chain reached the end.
    pub chain_in_c: bool,
    /// `X^g ≤ A` while `g` ends on the `A` side up to `C`; then the last
    /// group `X_s = X^{g b_∞⁻¹}` is only known to lie in `A`.
    pub last_exempt: bool,
    /// Every chain group, including the last, lies in `C`.
    pub all_in_c: bool,
    /// `g ∈ A` or `X^g` lies in neither vertex group.
    pub vacuous: bool,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.vacuous || self.chain_in_c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlternatingReport {
    pub words: usize,
    pub by_length: Vec<usize>,
    /// First failing word, as raw letters.
    pub failure: Option<Vec<(Side, u32)>>,
}

impl AlternatingReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

impl Amalgam {
    pub fn new(
        a: FiniteGroup,
        b: FiniteGroup,
        c: FiniteGroup,
        mono_a: &GroupMap,
        mono_b: &GroupMap,
    ) -> Result<Amalgam> {
        let sa = side_data(&c, a, mono_a)?;
        let sb = side_data(&c, b, mono_b)?;
        Ok(Amalgam { c, sides: [sa, sb] })
    }

    /// The amalgam of a two-vertex tree of groups; side `A` is the first
    /// vertex.
    pub fn from_tree(tg: &TreeOfGroups) -> Result<Amalgam> {
        if tg.tree.vertices().len() != 2 {
            return Err(Error::InvalidTree("an amalgam needs exactly one edge".into()));
        }
        let [m0, m1] = &tg.monos[0];
        let (ma, mb) = if tg.tree.edges()[0].ends[0] == 0 {
            (m0, m1)
        } else {
            (m1, m0)
        };
        Amalgam::new(
            tg.vertex_groups[0].clone(),
            tg.vertex_groups[1].clone(),
            tg.edge_groups[0].clone(),
            ma,
            mb,
        )
    }

    pub fn group(&self, s: Side) -> &FiniteGroup {
        &self.sides[idx(s)].group
    }

    pub fn c(&self) -> &FiniteGroup {
        &self.c
    }

    /// Image of `C` in the given side.
    pub fn c_image(&self, s: Side) -> &Subgroup {
        &self.sides[idx(s)].image
    }

    pub fn transversal(&self, s: Side) -> &[u32] {
        &self.sides[idx(s)].transversal
    }

    pub fn c_into(&self, s: Side, c: u32) -> u32 {
        self.sides[idx(s)].mono[c as usize]
    }

    pub fn identity(&self) -> AmalgamWord {
        AmalgamWord {
            prefix: 0,
            factors: Vec::new(),
        }
    }

    /// Left-multiplies a normal form by a letter of side `s`.
    fn prepend(&self, s: Side, x: u32, w: &mut AmalgamWord) {
        let d = &self.sides[idx(s)];
        let mut y = d.group.mul(x, d.mono[w.prefix as usize]);
        let absorb = matches!(w.factors.first(), Some(&(fs, _)) if fs == s);
        if absorb {
            y = d.group.mul(y, w.factors[0].1);
            w.factors.remove(0);
        }
        let (c, t) = d.split[y as usize];
        w.prefix = c;
        if t != 0 {
            w.factors.insert(0, (s, t));
        }
    }

    fn check_letter(&self, s: Side, x: u32) -> Result<()> {
        if x as usize >= self.group(s).order() {
            return Err(Error::InvalidInput(alloc::format!("element {x} is not in side {s:?}")));
        }
        Ok(())
    }

    /// Normal form of a product of letters.
    pub fn normal_form(&self, raw: &[(Side, u32)]) -> Result<AmalgamWord> {
        let mut w = self.identity();
        for &(s, x) in raw.iter().rev() {
            self.check_letter(s, x)?;
            self.prepend(s, x, &mut w);
        }
        Ok(w)
    }

    /// Letters of a word, with the prefix as an `A` letter.
    pub fn letters(&self, w: &AmalgamWord) -> Vec<(Side, u32)> {
        let mut out = alloc::vec![(Side::A, self.c_into(Side::A, w.prefix))];
        out.extend_from_slice(&w.factors);
        out
    }

    pub fn multiply(&self, u: &AmalgamWord, v: &AmalgamWord) -> AmalgamWord {
        let mut w = v.clone();
        for &(s, x) in self.letters(u).iter().rev() {
            self.prepend(s, x, &mut w);
        }
        w
    }

    pub fn invert(&self, u: &AmalgamWord) -> AmalgamWord {
        let mut w = self.identity();
        for &(s, x) in &self.letters(u) {
            self.prepend(s, self.group(s).inv(x), &mut w);
        }
        w
    }

    pub fn in_c(&self, w: &AmalgamWord) -> bool {
        w.factors.is_empty()
    }

    /// The element of side `s` equal to `w`, if there is one.
    pub fn as_element(&self, w: &AmalgamWord, s: Side) -> Option<u32> {
        let c = self.c_into(s, w.prefix);
        match w.factors.as_slice() {
            [] => Some(c),
            [(fs, t)] if *fs == s => Some(self.group(s).mul(c, *t)),
            _ => None,
        }
    }

    /// `x^w = w⁻¹ x w` for a letter `x`.
    pub fn conjugate_letter(&self, s: Side, x: u32, w: &AmalgamWord) -> AmalgamWord {
        let mut out = w.clone();
        self.prepend(s, x, &mut out);
        self.multiply(&self.invert(w), &out)
    }

    /// Value in a finite group receiving both sides.
    pub fn evaluate(&self, w: &AmalgamWord, g: &FiniteGroup, emb_a: &GroupMap, emb_b: &GroupMap) -> u32 {
        self.letters(w).iter().fold(0, |acc, &(s, x)| {
            let e = if s == Side::A { emb_a } else { emb_b };
            g.mul(acc, e.images()[x as usize])
        })
    }

    fn outside_c(&self, s: Side) -> Vec<u32> {
        let img = self.c_image(s);
        (0..self.group(s).order() as u32)
            .filter(|&x| !img.contains(x))
            .collect()
    }

    /// Every alternating product of elements outside `C`, up to `max_len`
    /// letters, is outside `C`, outside the opposite group when it starts
    /// and ends on the same side, outside both groups otherwise, and has a
    /// normal form of the same length.
    pub fn alternating_products_check(&self, max_len: usize, limits: &Limits) -> Result<AlternatingReport> {
        if max_len > limits.max_word_len {
            return Err(Error::guard("word length", limits.max_word_len, "alternating products"));
        }
        let outs = [self.outside_c(Side::A), self.outside_c(Side::B)];
        for o in &outs {
            if o.len() > limits.max_word_letters {
                return Err(Error::guard(
                    "letters per side",
                    limits.max_word_letters,
                    "alternating products",
                ));
            }
        }
        let mut report = AlternatingReport {
            by_length: alloc::vec![0; max_len + 1],
            ..Default::default()
        };
        // Words are grown by prepending; `last` is the side of the final letter.
        let mut stack: Vec<(Vec<(Side, u32)>, AmalgamWord)> = Vec::new();
        for s in [Side::A, Side::B] {
            for &x in &outs[idx(s)] {
                let mut w = self.identity();
                self.prepend(s, x, &mut w);
                stack.push((alloc::vec![(s, x)], w));
            }
        }
        while let Some((letters, w)) = stack.pop() {
            let n = letters.len();
            report.words += 1;
            report.by_length[n] += 1;
            let first = letters[0].0;
            let last = letters[n - 1].0;
            let ok = !self.in_c(&w)
                && w.len() == n
                && if first == last {
                    self.as_element(&w, first.other()).is_none()
                } else {
                    self.as_element(&w, Side::A).is_none() && self.as_element(&w, Side::B).is_none()
                };
            if !ok && report.failure.is_none() {
                report.failure = Some(letters.clone());
            }
            if n < max_len {
                let s = first.other();
                for &x in &outs[idx(s)] {
                    let mut v = w.clone();
                    self.prepend(s, x, &mut v);
                    let mut l = Vec::with_capacity(n + 1);
                    l.push((s, x));
                    l.extend_from_slice(&letters);
                    stack.push((l, v));
                }
            }
        }
        Ok(report)
    }

    fn check_factored(&self, g: &Factored) -> Result<()> {
        let (ca, cb) = (self.c_image(Side::A), self.c_image(Side::B));
        self.check_letter(Side::A, g.a0)?;
        for &(b, a) in &g.pairs {
            self.check_letter(Side::A, a)?;
            self.check_letter(Side::B, b)?;
            if ca.contains(a) || cb.contains(b) {
                return Err(Error::InvalidInput("inner factors must lie outside C".into()));
            }
        }
        if let Some(b) = g.b_inf {
            self.check_letter(Side::B, b)?;
        }
        Ok(())
    }

    /// Decides whether `X^g` lies in `A` or `B` by normal forms, and
    /// follows `X_0 = X^{a_0}, Y_1 = X_0^{b_1}, X_1 = Y_1^{a_1}, ...`
    /// through `C` for as long as each step is defined.
    pub fn conjugation_chain(&self, x: &Subgroup, g: &Factored) -> Result<ChainReport> {
        self.check_factored(g)?;
        let ga = self.group(Side::A);
        ga.check_subgroup(x)?;
        let gw = self.normal_form(&g.letters())?;
        let gens = ga.generators_of(x);
        let conj: Vec<AmalgamWord> = gens.iter().map(|&h| self.conjugate_letter(Side::A, h, &gw)).collect();
        let conj_in_a = conj.iter().all(|w| self.as_element(w, Side::A).is_some());
        let conj_in_b = conj.iter().all(|w| self.as_element(w, Side::B).is_some());
        let g_in_a = self.as_element(&gw, Side::A).is_some();
        let vacuous = g_in_a || !(conj_in_a || conj_in_b);

        let mut chain: Vec<(Side, Subgroup)> = Vec::new();
        let mut cur = ga.conjugate_subgroup(x, g.a0);
        chain.push((Side::A, cur.clone()));
        let mut side = Side::A;
        let mut complete = true;
        let steps: Vec<(Side, u32)> = g
            .pairs
            .iter()
            .flat_map(|&(b, a)| [(Side::B, b), (Side::A, a)])
            .collect();
        for (s, y) in steps {
            match self.transfer(side, &cur, s) {
                Some(moved) => {
                    cur = self.group(s).conjugate_subgroup(&moved, y);
                    side = s;
                    chain.push((s, cur.clone()));
                }
                None => {
                    complete = false;
                    break;
                }
            }
        }
        let b_inf_in_c = g.b_inf.is_none_or(|b| self.c_image(Side::B).contains(b));
        let last_exempt = conj_in_a && !conj_in_b && b_inf_in_c && !g.pairs.is_empty();
        let in_c: Vec<bool> = chain.iter().map(|(s, h)| h.is_subgroup_of(self.c_image(*s))).collect();
        let all_in_c = complete && in_c.iter().all(|&b| b);
        let upto = if last_exempt { in_c.len() - 1 } else { in_c.len() };
        let chain_in_c = complete && in_c[..upto].iter().all(|&b| b);
        Ok(ChainReport {
            conj_in_a,
            conj_in_b,
            chain,
            chain_in_c,
            last_exempt,
            all_in_c,
            vacuous,
        })
    }

    /// Moves a subgroup of `C`'s image on one side to the other side.
    fn transfer(&self, from: Side, h: &Subgroup, to: Side) -> Option<Subgroup> {
        if from == to {
            return Some(h.clone());
        }
        if !h.is_subgroup_of(self.c_image(from)) {
            return None;
        }
        let d = &self.sides[idx(from)];
        let mut m: Vec<u32> = h
            .members()
            .iter()
            .map(|&y| self.c_into(to, d.split[y as usize].0))
            .collect();
        m.sort_unstable();
        Some(Subgroup::from_sorted(m))
    }

    /// All factorisations with `1 + 2s + [b_∞]` letters equal to `len`.
    pub fn factorisations(&self, len: usize) -> Vec<Factored> {
        let all_a: Vec<u32> = (0..self.group(Side::A).order() as u32).collect();
        let all_b: Vec<u32> = (0..self.group(Side::B).order() as u32).collect();
        let (oa, ob) = (self.outside_c(Side::A), self.outside_c(Side::B));
        if len == 0 {
            return Vec::new();
        }
        let s = (len - 1) / 2;
        let tail = (len - 1) % 2 == 1;
        let mut out: Vec<Factored> = all_a
            .iter()
            .map(|&a0| Factored {
                a0,
                pairs: Vec::new(),
                b_inf: None,
            })
            .collect();
        for _ in 0..s {
            let mut next = Vec::with_capacity(out.len() * ob.len() * oa.len());
            for f in &out {
                for &b in &ob {
                    for &a in &oa {
                        let mut g = f.clone();
                        g.pairs.push((b, a));
                        next.push(g);
                    }
                }
            }
            out = next;
        }
        if tail {
            out = out
                .into_iter()
                .flat_map(|f| {
                    all_b.iter().map(move |&b| Factored {
                        b_inf: Some(b),
                        ..f.clone()
                    })
                })
                .collect();
        }
        out
    }
}

#[cfg(test)]
mod tests;
