use rayon::prelude::*;

use super::Group;
use crate::error::{Error, Result};
use crate::subset::SubgroupSet;

impl Group {
    pub fn trivial_subgroup(&self) -> SubgroupSet {
        SubgroupSet::trivial(self.order())
    }

    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet::full(self.order())
    }

    /// The smallest subgroup containing `gens`.
    pub fn closure<I: IntoIterator<Item = usize>>(&self, gens: I) -> SubgroupSet {
        let gens: Vec<usize> = gens.into_iter().filter(|&g| g != 0).collect();
        self.extend_closure(&self.trivial_subgroup(), &[], &gens)
    }

    /// `<base, extra>` where `base` is a subgroup generated by `base_gens`.
    ///
    /// The result is grown as a union of right cosets `base·c`; a coset is
    /// added whenever `c·s` falls outside the current set for a generator `s`.
    pub fn extend_closure(
        &self,
        base: &SubgroupSet,
        base_gens: &[usize],
        extra: &[usize],
    ) -> SubgroupSet {
        let extra: Vec<usize> = extra
            .iter()
            .copied()
            .filter(|&g| !base.contains(g))
            .collect();
        if extra.is_empty() {
            return base.clone();
        }
        let base_elems = base.to_vec();
        let gens: Vec<usize> = base_gens.iter().chain(extra.iter()).copied().collect();
        let mut set = base.clone();
        let mut reps = vec![0usize];
        let mut i = 0;
        while i < reps.len() {
            let c = reps[i];
            i += 1;
            for &s in &gens {
                let t = self.mul(c, s);
                if !set.contains(t) {
                    for &h in &base_elems {
                        set.insert(self.mul(h, t));
                    }
                    reps.push(t);
                }
            }
        }
        set
    }

    /// Canonical short generating set: repeatedly adjoin the element of
    /// largest order not yet generated, smallest id first.
    pub fn subgroup_generators(&self, h: &SubgroupSet) -> Vec<usize> {
        let mut elems: Vec<(usize, usize)> = h
            .iter()
            .skip(1)
            .map(|x| (self.order_of_element(x), x))
            .collect();
        elems.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        self.greedy_generators(elems.into_iter().map(|(_, x)| x))
    }

    pub(crate) fn greedy_generators<I: IntoIterator<Item = usize>>(&self, elems: I) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for g in elems {
            if !current.contains(g) {
                current = self.extend_closure(&current, &gens, &[g]);
                gens.push(g);
            }
        }
        gens
    }

    pub fn is_subgroup(&self, h: &SubgroupSet) -> bool {
        if h.universe() != self.order() || !h.contains(0) {
            return false;
        }
        let elems = h.to_vec();
        elems
            .iter()
            .all(|&a| h.contains(self.inv(a)) && elems.iter().all(|&b| h.contains(self.mul(a, b))))
    }

    pub fn centralizer_of_element(&self, g: usize) -> SubgroupSet {
        let n = self.order();
        let mut out = SubgroupSet::empty(n);
        for h in 0..n {
            if self.commute(g, h) {
                out.insert(h);
            }
        }
        out
    }

    /// `C_G(H)`, intersecting the centralizers of a generating set of `H`.
    pub fn centralizer(&self, h: &SubgroupSet) -> SubgroupSet {
        let gens = self.subgroup_generators(h);
        self.centralizer_of_elements(&gens)
    }

    /// Elements commuting with every element of `elems`.
    pub fn centralizer_of_elements(&self, elems: &[usize]) -> SubgroupSet {
        let n = self.order();
        let hits: Vec<usize> = (0..n)
            .into_par_iter()
            .filter(|&x| elems.iter().all(|&g| self.commute(g, x)))
            .collect();
        SubgroupSet::from_elements(n, hits)
    }

    /// `C_G(H)` by the definition: every element of `H` is tested.
    pub fn centralizer_by_scan(&self, h: &SubgroupSet) -> SubgroupSet {
        let elems = h.to_vec();
        let n = self.order();
        let mut out = SubgroupSet::empty(n);
        for x in 0..n {
            if elems.iter().all(|&g| self.commute(g, x)) {
                out.insert(x);
            }
        }
        out
    }

    pub fn center(&self) -> SubgroupSet {
        let gens = self.generators().to_vec();
        self.centralizer_of_elements(&gens)
    }

    pub fn is_abelian_subgroup(&self, h: &SubgroupSet) -> bool {
        let gens = self.subgroup_generators(h);
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// `g⁻¹ H g`.
    pub fn conjugate_subgroup(&self, h: &SubgroupSet, g: usize) -> SubgroupSet {
        SubgroupSet::from_elements(self.order(), h.iter().map(|x| self.conjugate(x, g)))
    }

    pub fn is_normal(&self, h: &SubgroupSet) -> bool {
        let hg = self.subgroup_generators(h);
        self.generators()
            .iter()
            .all(|&g| hg.iter().all(|&x| h.contains(self.conjugate(x, g))))
    }

    /// The join `<H ∪ K>`.
    pub fn join(&self, h: &SubgroupSet, k: &SubgroupSet) -> SubgroupSet {
        if k.is_subset(h) {
            return h.clone();
        }
        if h.is_subset(k) {
            return k.clone();
        }
        let hg = self.subgroup_generators(h);
        let kg = self.subgroup_generators(k);
        self.extend_closure(h, &hg, &kg)
    }

    /// Restricts the table to a subgroup, re-indexing its elements in
    /// ascending id order. Returns the group and the embedding `new id -> old id`.
    pub fn subgroup_as_group(&self, h: &SubgroupSet) -> Result<(Group, Vec<usize>)> {
        if h.universe() != self.order() || !h.contains(0) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        let embed = h.to_vec();
        let mut index = vec![u32::MAX; self.order()];
        for (i, &g) in embed.iter().enumerate() {
            index[g] = i as u32;
        }
        let m = embed.len();
        // verify closure while filling
        let bad = (0..m)
            .into_par_iter()
            .find_any(|&i| (0..m).any(|j| index[self.mul(embed[i], embed[j])] == u32::MAX));
        if let Some(i) = bad {
            return Err(Error::NotASubgroup(format!(
                "not closed under multiplication by {}",
                embed[i]
            )));
        }
        let sub = Group::from_rule(m, |i, j| index[self.mul(embed[i], embed[j])] as usize)?;
        let sub = match &self.labels {
            Some(l) => sub.with_labels(embed.iter().map(|&g| l[g].clone()).collect()),
            None => sub,
        };
        Ok((sub, embed))
    }

    /// Maps a subgroup of `self` given by an embedding back to a
    /// subgroup of the ambient group.
    pub fn lift(&self, embed: &[usize], sub: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_elements(self.order(), sub.iter().map(|i| embed[i]))
    }
}
