//! Finite permutation groups and their subgroups.
//!
//! A [`FiniteGroup`] enumerates all of its elements, sorted
//! lexicographically by image array; an element is then just its index
//! (`u32`) in that list. The identity is always index 0. A [`Subgroup`] is
//! a sorted set of element indices relative to one group, so it carries no
//! pointer back to its parent; every operation takes the parent explicitly.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{is_prime, p_part, Error, Limits, Perm, Result};

/// Groups up to this order get a precomputed Cayley table.
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: Option<String>,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
}

/// A subgroup, stored as the sorted indices of its members in the parent.
///
/// Equality is equality of member sets. The ordering is by order first and
/// then by member list, which is the canonical lattice order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<u32>,
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    /// Wraps an already sorted, closed member list.
    pub(crate) fn from_sorted(members: Vec<u32>) -> Subgroup {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of `x` in the member list.
    #[inline]
    pub fn position(&self, x: u32) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.len() <= other.members.len() && self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self.members.iter().copied().filter(|&x| other.contains(x)).collect(),
        }
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` on `degree` points.
    pub fn generate(degree: usize, generators: Vec<Perm>, limits: &Limits) -> Result<FiniteGroup> {
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= limits.max_order {
                        return Err(Error::guard("group order", limits.max_order, "element enumeration"));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::from_sorted_elements(
            degree,
            generators,
            seen.into_iter().collect(),
        ))
    }

    /// Convenience wrapper: 1-based image arrays and default limits.
    pub fn from_images(degree: usize, generators: &[&[u32]]) -> Result<FiniteGroup> {
        let gens = generators
            .iter()
            .map(|g| Perm::from_one_based(g))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(degree, gens, &Limits::default())
    }

    fn from_sorted_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> FiniteGroup {
        let n = elements.len();
        let table = if n <= TABLE_LIMIT {
            let mut t = alloc::vec![0u32; n * n];
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    let c = a.then(b);
                    t[i * n + j] = elements.binary_search(&c).expect("closed") as u32;
                }
            }
            Some(t)
        } else {
            None
        };
        let mut g = FiniteGroup {
            name: None,
            degree,
            generators,
            elements,
            inverses: Vec::new(),
            orders: Vec::new(),
            table,
        };
        g.inverses = (0..n)
            .map(|i| g.index_of(&g.elements[i].inverse()).expect("closed"))
            .collect();
        g.orders = (0..n as u32)
            .map(|i| {
                let mut k = 1;
                let mut x = i;
                while x != 0 {
                    x = g.mul(x, i);
                    k += 1;
                }
                k
            })
            .collect();
        g
    }

    /// The subgroup `h` as a group in its own right, on the same points.
    ///
    /// Since elements are the same permutations and sorted the same way,
    /// member `k` of `h` becomes element `k` of the result.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let elements: Vec<Perm> = h.members.iter().map(|&x| self.elements[x as usize].clone()).collect();
        let gens = self
            .generators_of(h)
            .iter()
            .map(|&x| self.elements[x as usize].clone())
            .collect();
        let mut g = Self::from_sorted_elements(self.degree, gens, elements);
        g.name = self.name.clone();
        g
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, x: u32) -> &Perm {
        &self.elements[x as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.elements.binary_search(p).ok().map(|i| i as u32)
    }

    pub const IDENTITY: u32 = 0;

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => {
                let c = self.elements[a as usize].then(&self.elements[b as usize]);
                self.index_of(&c).expect("closed")
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `x^g = g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, x: u32, k: usize) -> u32 {
        let mut r = Self::IDENTITY;
        for _ in 0..k {
            r = self.mul(r, x);
        }
        r
    }

    pub fn elem_order(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order() as u32).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(alloc::vec![Self::IDENTITY])
    }

    /// The subgroup generated by the given elements.
    pub fn close(&self, gens: &[u32]) -> Subgroup {
        let mut mark = alloc::vec![false; self.order()];
        mark[0] = true;
        let mut queue = VecDeque::from([Self::IDENTITY]);
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !mark[y as usize] {
                    mark[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_sorted(
            mark.iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| i as u32)
                .collect(),
        )
    }

    /// The subgroup generated by permutations of this group's degree.
    pub fn subgroup_generated_by(&self, perms: &[Perm]) -> Result<Subgroup> {
        let mut gens = Vec::with_capacity(perms.len());
        for p in perms {
            if p.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    expected: self.degree,
                    found: p.degree(),
                });
            }
            gens.push(
                self.index_of(p)
                    .ok_or_else(|| Error::NotASubgroup(alloc::format!("{p} is not in the group")))?,
            );
        }
        Ok(self.close(&gens))
    }

    /// Validates that `members` is a subgroup and wraps it.
    pub fn try_subgroup(&self, members: &[u32]) -> Result<Subgroup> {
        let mut m: Vec<u32> = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.first() != Some(&Self::IDENTITY) || m.iter().any(|&x| x as usize >= self.order()) {
            return Err(Error::NotASubgroup("missing identity or foreign element".into()));
        }
        let h = Subgroup::from_sorted(m);
        for &a in &h.members {
            for &b in &h.members {
                if !h.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup("not closed under products".into()));
                }
            }
        }
        Ok(h)
    }

    /// A small generating set, chosen greedily from high-order members.
    pub fn generators_of(&self, h: &Subgroup) -> Vec<u32> {
        let mut cands: Vec<u32> = h.members.clone();
        cands.sort_by(|&a, &b| self.elem_order(b).cmp(&self.elem_order(a)).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for x in cands {
            if cur.order() == h.order() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.close(&gens);
            }
        }
        gens
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: u32) -> Subgroup {
        let mut m: Vec<u32> = h.members.iter().map(|&x| self.conj(x, g)).collect();
        m.sort_unstable();
        Subgroup::from_sorted(m)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = self.generators_of(a);
        gens.extend(self.generators_of(b));
        self.close(&gens)
    }

    pub fn is_normal(&self, h: &Subgroup, in_group: &Subgroup) -> bool {
        let gens = self.generators_of(h);
        in_group
            .members
            .iter()
            .all(|&g| gens.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    /// Every subgroup, duplicate free, in canonical order.
    pub fn subgroup_lattice(&self, limits: &Limits) -> Result<Vec<Subgroup>> {
        if self.order() > limits.max_order {
            return Err(Error::guard("group order", limits.max_order, "subgroup lattice"));
        }
        // Cyclic subgroups with one generator each; every subgroup is a
        // join of cyclic ones.
        let mut cyclic: Vec<(u32, Subgroup)> = Vec::new();
        let mut seen_cyclic: BTreeSet<Subgroup> = BTreeSet::new();
        for x in 1..self.order() as u32 {
            let c = self.close(&[x]);
            if seen_cyclic.insert(c.clone()) {
                cyclic.push((x, c));
            }
        }
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        let mut list: Vec<(Subgroup, Vec<u32>)> = Vec::new();
        let triv = self.trivial();
        found.insert(triv.clone());
        list.push((triv, Vec::new()));
        let mut i = 0;
        while i < list.len() {
            let (h, gens) = list[i].clone();
            for (x, _) in &cyclic {
                if h.contains(*x) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(*x);
                let j = self.close(&g2);
                if !found.contains(&j) {
                    if found.len() >= limits.max_subgroups {
                        return Err(Error::guard("subgroup count", limits.max_subgroups, "subgroup lattice"));
                    }
                    found.insert(j.clone());
                    list.push((j, g2));
                }
            }
            i += 1;
        }
        Ok(found.into_iter().collect())
    }

    /// The canonical Sylow `p`-subgroup: least in lattice order among all
    /// subgroups of order the `p`-part of `|G|`.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(alloc::format!("{p} is not prime")));
        }
        let target = p_part(self.order(), p);
        let mut cur = self.trivial();
        while cur.order() < target {
            let n = self.normalizer(&cur, &self.whole());
            let x = n
                .members
                .iter()
                .copied()
                .find(|&x| !cur.contains(x) && cur.contains(self.pow(x, p as usize)))
                .expect("Sylow growth step exists while |P| < p-part");
            let mut gens = self.generators_of(&cur);
            gens.push(x);
            cur = self.close(&gens);
        }
        // All Sylow subgroups are conjugate; pick the least.
        let mut best = cur.clone();
        for g in 0..self.order() as u32 {
            let c = self.conjugate_subgroup(&cur, g);
            if c < best {
                best = c;
            }
        }
        Ok(best)
    }

    pub fn is_sylow(&self, s: &Subgroup, p: u64) -> bool {
        s.order() == p_part(self.order(), p)
    }

    /// `N_H(P)` for `P`, `H` subgroups of this group.
    pub fn normalizer(&self, p: &Subgroup, within: &Subgroup) -> Subgroup {
        let gens = self.generators_of(p);
        Subgroup::from_sorted(
            within
                .members
                .iter()
                .copied()
                .filter(|&g| gens.iter().all(|&x| p.contains(self.conj(x, g))))
                .collect(),
        )
    }

    /// `C_H(P)`.
    pub fn centralizer(&self, p: &Subgroup, within: &Subgroup) -> Subgroup {
        let gens = self.generators_of(p);
        Subgroup::from_sorted(
            within
                .members
                .iter()
                .copied()
                .filter(|&g| gens.iter().all(|&x| self.mul(x, g) == self.mul(g, x)))
                .collect(),
        )
    }

    pub fn center(&self, p: &Subgroup) -> Subgroup {
        self.centralizer(p, p)
    }

    /// `(N_G(P), C_G(P), Z(P))`.
    pub fn local_data(&self, p: &Subgroup) -> Result<(Subgroup, Subgroup, Subgroup)> {
        self.check_subgroup(p)?;
        let g = self.whole();
        Ok((self.normalizer(p, &g), self.centralizer(p, &g), self.center(p)))
    }

    /// The elements `g` with `P^g <= Q`, in canonical order.
    pub fn transporter(&self, p: &Subgroup, q: &Subgroup) -> Vec<u32> {
        if p.order() > q.order() {
            return Vec::new();
        }
        let gens = self.generators_of(p);
        (0..self.order() as u32)
            .filter(|&g| gens.iter().all(|&x| q.contains(self.conj(x, g))))
            .collect()
    }

    pub(crate) fn check_subgroup(&self, p: &Subgroup) -> Result<()> {
        if p.members.first() != Some(&Self::IDENTITY) || p.members.last().is_some_and(|&x| x as usize >= self.order()) {
            return Err(Error::NotASubgroup("member index outside the group".into()));
        }
        Ok(())
    }

    /// Translates element `x` of `self` into `other` (same permutation).
    pub fn translate(&self, x: u32, other: &FiniteGroup) -> Option<u32> {
        other.index_of(self.element(x))
    }

    /// Translates a subgroup of `self` into a subgroup of `other`.
    pub fn translate_subgroup(&self, h: &Subgroup, other: &FiniteGroup) -> Option<Subgroup> {
        let mut m = Vec::with_capacity(h.order());
        for &x in &h.members {
            m.push(self.translate(x, other)?);
        }
        m.sort_unstable();
        Some(Subgroup::from_sorted(m))
    }

    /// `O_p(G)`: the intersection of all Sylow p-subgroups.
    pub fn p_core(&self, p: u64) -> Result<Subgroup> {
        let s = self.sylow_subgroup(p)?;
        let mut core = s.clone();
        for g in 0..self.order() as u32 {
            if core.is_trivial() {
                break;
            }
            core = core.intersection(&self.conjugate_subgroup(&s, g));
        }
        Ok(core)
    }

    /// `H < G`, `H` contains a Sylow p-subgroup of `G`, `p` divides `|H|`,
    /// and `H ∩ H^g` is a p'-group for every `g ∉ H`.
    pub fn is_strongly_p_embedded(&self, h: &Subgroup, p: u64) -> bool {
        let pp = p_part(self.order(), p);
        if h.order() == self.order() || pp == 1 || p_part(h.order(), p) != pp {
            return false;
        }
        (0..self.order() as u32)
            .filter(|&g| !h.contains(g))
            .all(|g| p_part(h.intersection(&self.conjugate_subgroup(h, g)).order(), p) == 1)
    }

    /// The least strongly p-embedded subgroup in lattice order, if any.
    pub fn strongly_p_embedded_subgroup(&self, p: u64, limits: &Limits) -> Result<Option<Subgroup>> {
        let pp = p_part(self.order(), p);
        if pp == 1 {
            return Ok(None);
        }
        Ok(self
            .subgroup_lattice(limits)?
            .into_iter()
            .filter(|h| p_part(h.order(), p) == pp)
            .find(|h| self.is_strongly_p_embedded(h, p)))
    }

    /// Order and exponent, used as a cheap fingerprint.
    pub fn exponent(&self, h: &Subgroup) -> u32 {
        h.members.iter().fold(1u32, |acc, &x| lcm(acc, self.elem_order(x)))
    }

    /// Counts elements of each order, sorted by order.
    pub fn order_statistics(&self, h: &Subgroup) -> Vec<(u32, usize)> {
        let mut m: BTreeMap<u32, usize> = BTreeMap::new();
        for &x in &h.members {
            *m.entry(self.elem_order(x)).or_default() += 1;
        }
        m.into_iter().collect()
    }
}

impl AsRef<FiniteGroup> for FiniteGroup {
    fn as_ref(&self) -> &FiniteGroup {
        self
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// Independent lattice oracle: every subset closed under products that
    /// contains the identity. Built by growing subsets one element at a
    /// time through closure, with no reliance on cyclic joins.
    fn lattice_oracle(g: &FiniteGroup) -> BTreeSet<Vec<u32>> {
        let mut out: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut frontier: Vec<Vec<u32>> = alloc::vec![alloc::vec![0]];
        out.insert(alloc::vec![0]);
        while let Some(h) = frontier.pop() {
            for x in 0..g.order() as u32 {
                if h.contains(&x) {
                    continue;
                }
                let mut set: BTreeSet<u32> = h.iter().copied().collect();
                set.insert(x);
                loop {
                    let cur: Vec<u32> = set.iter().copied().collect();
                    let mut grew = false;
                    for &a in &cur {
                        for &b in &cur {
                            if set.insert(g.mul(a, b)) {
                                grew = true;
                            }
                        }
                    }
                    if !grew {
                        break;
                    }
                }
                let v: Vec<u32> = set.into_iter().collect();
                if out.insert(v.clone()) {
                    frontier.push(v);
                }
            }
        }
        out
    }

    #[test]
    fn generate_examples() {
        let triv = FiniteGroup::generate(4, Vec::new(), &Limits::default()).unwrap();
        assert_eq!(triv.order(), 1);
        assert_eq!(catalog::d8().order(), 8);
        assert_eq!(catalog::sym(4).order(), 24);
        assert_eq!(catalog::psl32().order(), 168);
    }

    #[test]
    fn generate_guard_and_degree() {
        let lim = Limits {
            max_order: 10,
            ..Limits::default()
        };
        let gens = alloc::vec![
            Perm::from_cycles(4, &[&[1, 2]]).unwrap(),
            Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap()
        ];
        assert!(FiniteGroup::generate(4, gens, &lim).unwrap_err().is_guard());
        let bad = alloc::vec![Perm::identity(3)];
        assert!(matches!(
            FiniteGroup::generate(4, bad, &Limits::default()),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn lattice_counts_match_oracle() {
        for (g, expect) in [
            (catalog::cyclic(1), 1usize),
            (catalog::d8(), 10),
            (catalog::sym(4), 30),
            (catalog::sym(3), 6),
            (catalog::alt(4), 10),
        ] {
            let lat = g.subgroup_lattice(&Limits::default()).unwrap();
            assert_eq!(lat.len(), expect);
            let oracle = lattice_oracle(&g);
            let ours: BTreeSet<Vec<u32>> = lat.iter().map(|h| h.members().to_vec()).collect();
            assert_eq!(ours, oracle);
            assert!(lat.windows(2).all(|w| w[0] < w[1]));
            assert!(lat[0].is_trivial());
            assert_eq!(lat.last().unwrap().order(), g.order());
        }
    }

    #[test]
    fn sylow_examples() {
        let s4 = catalog::sym(4);
        let s2 = s4.sylow_subgroup(2).unwrap();
        assert_eq!(s2.order(), 8);
        assert_eq!(s4.exponent(&s2), 4);
        assert_eq!(s4.sylow_subgroup(3).unwrap().order(), 3);
        assert!(s4.sylow_subgroup(5).unwrap().is_trivial());
        // Canonical = first in lattice order among Sylows.
        let lat = s4.subgroup_lattice(&Limits::default()).unwrap();
        assert_eq!(&s2, lat.iter().find(|h| h.order() == 8).unwrap());
        assert_eq!(catalog::psl32().sylow_subgroup(2).unwrap().order(), 8);
    }

    #[test]
    fn local_data_examples() {
        let d8 = catalog::d8();
        let z = d8.center(&d8.whole());
        assert_eq!(z.order(), 2);
        let (n, c, _) = d8.local_data(&z).unwrap();
        assert_eq!(n.order(), 8);
        assert_eq!(c.order(), 8);

        let s4 = catalog::sym(4);
        let v = s4
            .subgroup_generated_by(&[
                Perm::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
                Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap(),
            ])
            .unwrap();
        let (n, c, zv) = s4.local_data(&v).unwrap();
        assert_eq!(n.order(), 24);
        assert_eq!(c, v);
        assert_eq!(zv, v);
        let t = s4
            .subgroup_generated_by(&[Perm::from_cycles(4, &[&[1, 3]]).unwrap()])
            .unwrap();
        assert_eq!(s4.local_data(&t).unwrap().0.order(), 4);
    }

    #[test]
    fn transporter_examples() {
        let s4 = catalog::sym(4);
        let cyc = |c: &[&[u32]]| s4.subgroup_generated_by(&[Perm::from_cycles(4, c).unwrap()]).unwrap();
        let t13 = cyc(&[&[1, 3]]);
        let t24 = cyc(&[&[2, 4]]);
        let d = cyc(&[&[1, 2], &[3, 4]]);
        assert!(!s4.transporter(&t13, &t24).is_empty());
        assert!(s4.transporter(&t13, &d).is_empty());
        let whole = s4.whole();
        assert_eq!(s4.transporter(&whole, &whole).len(), 24);
        for h in s4.subgroup_lattice(&Limits::default()).unwrap() {
            let (n, c, _) = s4.local_data(&h).unwrap();
            assert_eq!(s4.transporter(&h, &h).len(), n.order());
            assert!(c.is_subgroup_of(&n));
            assert!(s4.is_normal(&c, &n));
        }
    }

    #[test]
    fn strongly_embedded_examples() {
        let lim = Limits::default();
        let s3 = catalog::sym(3);
        let t = s3
            .subgroup_generated_by(&[Perm::from_cycles(3, &[&[1, 2]]).unwrap()])
            .unwrap();
        assert!(s3.is_strongly_p_embedded(&t, 2));
        assert!(!s3.is_strongly_p_embedded(&s3.whole(), 2));
        let s4 = catalog::sym(4);
        assert!(!s4.is_strongly_p_embedded(&s4.sylow_subgroup(2).unwrap(), 2));
        assert!(s3.strongly_p_embedded_subgroup(2, &lim).unwrap().is_some());
        assert!(catalog::cyclic(2)
            .strongly_p_embedded_subgroup(2, &lim)
            .unwrap()
            .is_none());
        assert!(catalog::d8().strongly_p_embedded_subgroup(2, &lim).unwrap().is_none());
        // Alt(5) at p = 2: the normalizer of a Sylow 2 (Alt(4)) is strongly embedded.
        assert!(catalog::alt(5).strongly_p_embedded_subgroup(2, &lim).unwrap().is_some());
    }

    #[test]
    fn p_core_examples() {
        let s4 = catalog::sym(4);
        assert_eq!(s4.p_core(2).unwrap().order(), 4);
        assert!(s4.p_core(3).unwrap().is_trivial());
        assert!(catalog::psl32().p_core(2).unwrap().is_trivial());
        let d8 = catalog::d8();
        assert_eq!(d8.p_core(2).unwrap(), d8.whole());
    }
}
