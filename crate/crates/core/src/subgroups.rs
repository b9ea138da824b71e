//! Exhaustive subgroup enumeration by cyclic extension.
//!
//! Seeds with every cyclic subgroup, then repeatedly joins each known
//! subgroup with each cyclic subgroup it does not contain, until nothing new
//! appears. This is the brute-force reference the faster methods are checked
//! against.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::subset::SubgroupSet;

#[derive(Debug, Clone)]
pub struct SubgroupInventory {
    /// Canonically ordered: by order, then lexicographic on element lists.
    pub subgroups: Vec<SubgroupSet>,
    pub limits: Limits,
}

impl SubgroupInventory {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubgroupSet> {
        self.subgroups.iter()
    }

    pub fn contains(&self, h: &SubgroupSet) -> bool {
        self.subgroups.binary_search(h).is_ok()
    }
}

/// One generator per cyclic subgroup, in ascending id order of the first
/// generator met.
pub fn cyclic_subgroups(g: &Group) -> Vec<(usize, SubgroupSet)> {
    let n = g.order();
    let mut covered = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if covered[x] {
            continue;
        }
        let powers = g.powers(x);
        let k = powers.len();
        for (e, &y) in powers.iter().enumerate() {
            if num_integer::gcd(e, k) == 1 {
                covered[y] = true;
            }
        }
        out.push((x, SubgroupSet::from_elements(n, powers)));
    }
    out
}

pub fn all_subgroups(g: &Group, limits: &Limits) -> Result<SubgroupInventory> {
    Limits::guard(
        "group order for subgroup enumeration",
        g.order(),
        limits.order_bound,
    )?;
    let cyclics = cyclic_subgroups(g);
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    let mut frontier: Vec<(SubgroupSet, Vec<usize>)> = Vec::new();
    for (x, c) in &cyclics {
        if seen.insert(c.clone()) {
            let gens = if *x == 0 { vec![] } else { vec![*x] };
            frontier.push((c.clone(), gens));
        }
    }
    Limits::guard("subgroup count", seen.len(), limits.count_bound)?;
    while !frontier.is_empty() {
        limits.check_deadline()?;
        let found: Vec<Vec<(SubgroupSet, Vec<usize>)>> = frontier
            .par_iter()
            .map(|(h, gens)| {
                if h.is_full() {
                    return Vec::new();
                }
                let mut local: Vec<(SubgroupSet, Vec<usize>)> = Vec::new();
                for (x, _) in &cyclics {
                    if h.contains(*x) {
                        continue;
                    }
                    let j = g.extend_closure(h, gens, &[*x]);
                    if !local.iter().any(|(k, _)| *k == j) {
                        let mut jg = gens.clone();
                        jg.push(*x);
                        local.push((j, jg));
                    }
                }
                local
            })
            .collect();
        let mut next = Vec::new();
        for (j, jg) in found.into_iter().flatten() {
            if !seen.contains(&j) {
                seen.insert(j.clone());
                Limits::guard("subgroup count", seen.len(), limits.count_bound)?;
                next.push((j, jg));
            }
        }
        frontier = next;
    }
    let mut subgroups: Vec<SubgroupSet> = seen.into_iter().collect();
    subgroups.sort();
    Ok(SubgroupInventory {
        subgroups,
        limits: *limits,
    })
}

/// Intersection of two subgroups.
pub fn meet(h: &SubgroupSet, k: &SubgroupSet) -> SubgroupSet {
    h.intersection(k)
}

/// `<H ∪ K>`.
pub fn join(g: &Group, h: &SubgroupSet, k: &SubgroupSet) -> SubgroupSet {
    g.join(h, k)
}

/// Errors unless `h` is a subgroup of `g`.
pub fn require_subgroup(g: &Group, h: &SubgroupSet) -> Result<()> {
    if g.is_subgroup(h) {
        Ok(())
    } else {
        Err(Error::NotASubgroup(format!("{h:?}")))
    }
}
