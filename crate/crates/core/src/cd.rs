//! Chermak–Delgado measure and lattice.
//!
//! The measure of `H ≤ G` is `|H|·|C_G(H)|`; the lattice is the set of
//! subgroups attaining the maximum. Every member satisfies
//! `C_G(C_G(H)) = H`, so it is an intersection of element centralizers.
//! Maximizing over the intersection-closed family generated by the element
//! centralizers is therefore exact, and that family stays small even when the
//! full subgroup lattice is out of reach. The all-subgroups maximization is
//! kept as an oracle.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Characteristic, Group};
use crate::limits::Limits;
use crate::subgroups::all_subgroups;
use crate::subset::SubgroupSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Maximize over intersections of element centralizers.
    ClosureFamily,
    /// Maximize over every subgroup.
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Pass,
    Fail,
    Unknown,
}

impl From<bool> for Check {
    fn from(b: bool) -> Self {
        if b {
            Check::Pass
        } else {
            Check::Fail
        }
    }
}

impl From<Characteristic> for Check {
    fn from(c: Characteristic) -> Self {
        match c {
            Characteristic::Yes => Check::Pass,
            Characteristic::No => Check::Fail,
            Characteristic::Unknown => Check::Unknown,
        }
    }
}

pub type PropertyChecks = BTreeMap<String, Check>;

#[derive(Debug, Clone)]
pub struct CDReport {
    pub group_order: usize,
    pub max_measure: u128,
    /// Canonically ordered members.
    pub members: Vec<SubgroupSet>,
    /// The minimum member `M(G)`.
    pub cd_subgroup: SubgroupSet,
    /// The maximum member.
    pub top: SubgroupSet,
    pub is_chain: bool,
    pub chain_length: Option<usize>,
    pub method: Method,
    /// How many candidate subgroups were maximized over.
    pub candidates: usize,
    pub property_checks: PropertyChecks,
}

impl CDReport {
    pub fn member_set(&self) -> HashSet<&SubgroupSet> {
        self.members.iter().collect()
    }

    pub fn all_checks_pass(&self) -> bool {
        self.property_checks.values().all(|c| *c != Check::Fail)
    }
}

pub fn cd_measure(g: &Group, h: &SubgroupSet) -> u128 {
    h.order() as u128 * g.centralizer(h).order() as u128
}

/// Element centralizers, computed once per cyclic subgroup since
/// `C(x) = C(y)` whenever `<x> = <y>`.
pub struct CentralizerCache {
    rep: Vec<u32>,
    centralizers: Vec<SubgroupSet>,
}

impl CentralizerCache {
    pub fn new(g: &Group, limits: &Limits) -> Result<Self> {
        let n = g.order();
        let mut rep = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if rep[x] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(x);
            let powers = g.powers(x);
            let k = powers.len();
            for (e, &y) in powers.iter().enumerate() {
                if num_integer::gcd(e, k) == 1 {
                    rep[y] = idx;
                }
            }
        }
        limits.check_deadline()?;
        let centralizers: Vec<SubgroupSet> = reps
            .par_iter()
            .map(|&x| g.centralizer_of_element(x))
            .collect();
        limits.check_deadline()?;
        Ok(Self { rep, centralizers })
    }

    pub fn of_element(&self, x: usize) -> &SubgroupSet {
        &self.centralizers[self.rep[x] as usize]
    }

    /// `C_G(H)` as the intersection of cached centralizers of generators.
    pub fn of_subgroup(&self, g: &Group, h: &SubgroupSet) -> SubgroupSet {
        let gens = g.subgroup_generators(h);
        let mut out = g.whole();
        for x in gens {
            out.intersect_with(self.of_element(x));
        }
        out
    }

    /// Distinct element centralizers, in order of first appearance.
    pub fn distinct(&self) -> Vec<&SubgroupSet> {
        let mut seen = HashSet::new();
        self.centralizers
            .iter()
            .filter(|c| seen.insert(*c))
            .collect()
    }
}

fn is_prime(n: usize) -> bool {
    crate::field::is_prime(n as u64)
}

/// Every intersection of element centralizers (with `G` as the empty
/// intersection), saturated to a fixed point. Canonically ordered.
pub fn centralizer_closed_family(g: &Group, limits: &Limits) -> Result<Vec<SubgroupSet>> {
    let cache = CentralizerCache::new(g, limits)?;
    let mut family = closure_family_with(g, &cache, limits)?;
    family.sort();
    Ok(family)
}

fn closure_family_with(
    g: &Group,
    cache: &CentralizerCache,
    limits: &Limits,
) -> Result<Vec<SubgroupSet>> {
    let n = g.order();
    let whole = g.whole();
    let mut generators: Vec<&SubgroupSet> = cache.distinct();
    if !generators.iter().any(|c| c.is_full()) {
        generators.push(&whole);
    }
    let center = generators
        .iter()
        .fold(g.whole(), |acc, c| acc.intersection(c));
    let gen_elems: Vec<Vec<u32>> = generators
        .iter()
        .map(|c| c.iter().map(|x| x as u32).collect())
        .collect();

    let mut seen: HashSet<Vec<u32>> = gen_elems.iter().cloned().collect();
    let mut members: Vec<SubgroupSet> = generators.iter().map(|c| (*c).clone()).collect();
    Limits::guard(
        "centralizer family size",
        members.len(),
        limits.family_bound,
    )?;

    let mut i = 0;
    while i < members.len() {
        if i % 1024 == 0 {
            limits.check_deadline()?;
        }
        let h = members[i].clone();
        i += 1;
        if h.is_full() || h.is_trivial() {
            continue;
        }
        if is_prime(h.order()) {
            // only 1 and H lie below H
            if !h.is_subset(&center) && seen.insert(vec![0]) {
                members.push(g.trivial_subgroup());
            }
            continue;
        }
        let h_elems: Vec<u32> = h.iter().map(|x| x as u32).collect();
        let children: Vec<Vec<u32>> = gen_elems
            .par_iter()
            .zip(generators.par_iter())
            .filter_map(|(c_elems, c)| {
                let k: Vec<u32> = if c_elems.len() < h_elems.len() {
                    c_elems
                        .iter()
                        .copied()
                        .filter(|&x| h.contains(x as usize))
                        .collect()
                } else {
                    h_elems
                        .iter()
                        .copied()
                        .filter(|&x| c.contains(x as usize))
                        .collect()
                };
                (k.len() < h_elems.len()).then_some(k)
            })
            .collect();
        for k in children {
            if !seen.contains(&k) {
                members.push(SubgroupSet::from_elements(n, k.iter().map(|&x| x as usize)));
                seen.insert(k);
                Limits::guard(
                    "centralizer family size",
                    members.len(),
                    limits.family_bound,
                )?;
            }
        }
    }
    Ok(members)
}

fn is_chain(members: &[SubgroupSet]) -> bool {
    // canonical order sorts by size, so a chain is increasing in that order
    members.windows(2).all(|w| w[0].is_subset(&w[1]))
}

/// The Chermak–Delgado lattice by the chosen method, with its property
/// checks evaluated.
pub fn cd_lattice(g: &Group, method: Method, limits: &Limits) -> Result<CDReport> {
    let (max_measure, members, candidates) = match method {
        Method::ClosureFamily => {
            let cache = CentralizerCache::new(g, limits)?;
            let family = closure_family_with(g, &cache, limits)?;
            let measures: Vec<u128> = family
                .par_iter()
                .map(|h| h.order() as u128 * cache.of_subgroup(g, h).order() as u128)
                .collect();
            collect_max(family, measures)
        }
        Method::BruteForce => {
            let inventory = all_subgroups(g, limits)?;
            let measures: Vec<u128> = inventory
                .subgroups
                .par_iter()
                .map(|h| h.order() as u128 * g.centralizer_by_scan(h).order() as u128)
                .collect();
            collect_max(inventory.subgroups, measures)
        }
    };
    limits.check_deadline()?;
    let mut report = assemble(g, method, max_measure, members, candidates);
    report.property_checks = verify_cd_properties(g, &report, limits);
    Ok(report)
}

fn collect_max(family: Vec<SubgroupSet>, measures: Vec<u128>) -> (u128, Vec<SubgroupSet>, usize) {
    let candidates = family.len();
    let max = measures.iter().copied().max().unwrap_or(0);
    let mut members: Vec<SubgroupSet> = family
        .into_iter()
        .zip(measures)
        .filter_map(|(h, m)| (m == max).then_some(h))
        .collect();
    members.sort();
    (max, members, candidates)
}

fn assemble(
    g: &Group,
    method: Method,
    max_measure: u128,
    members: Vec<SubgroupSet>,
    candidates: usize,
) -> CDReport {
    let cd_subgroup = members.iter().fold(g.whole(), |acc, h| acc.intersection(h));
    let top = members
        .iter()
        .fold(g.trivial_subgroup(), |acc, h| g.join(&acc, h));
    let chain = is_chain(&members);
    CDReport {
        group_order: g.order(),
        max_measure,
        chain_length: chain.then(|| members.len() - 1),
        is_chain: chain,
        cd_subgroup,
        top,
        members,
        method,
        candidates,
        property_checks: PropertyChecks::new(),
    }
}

/// Runs both methods and fails if they disagree on `m(G)` or the members.
pub fn cd_lattice_cross_validated(g: &Group, limits: &Limits) -> Result<CDReport> {
    let fast = cd_lattice(g, Method::ClosureFamily, limits)?;
    let oracle = cd_lattice(g, Method::BruteForce, limits)?;
    if fast.max_measure != oracle.max_measure || fast.members != oracle.members {
        return Err(Error::MethodDisagreement(format!(
            "closure family m={} with {} member(s), oracle m={} with {} member(s)",
            fast.max_measure,
            fast.members.len(),
            oracle.max_measure,
            oracle.members.len()
        )));
    }
    Ok(fast)
}

/// The minimum member `M(G)`.
pub fn cd_subgroup(report: &CDReport) -> &SubgroupSet {
    &report.cd_subgroup
}

/// Evaluates the lattice-theoretic properties of a computed CD lattice:
/// sublattice closure, the modular law, centralizer duality, and the shape
/// of `M(G)`.
pub fn verify_cd_properties(g: &Group, report: &CDReport, limits: &Limits) -> PropertyChecks {
    let members = &report.members;
    let is_member = |h: &SubgroupSet| members.binary_search(h).is_ok();
    let mut checks = PropertyChecks::new();
    let mut put = |name: &str, c: Check| {
        checks.insert(name.to_string(), c);
    };

    put(
        "members_attain_max",
        members
            .iter()
            .all(|h| cd_measure(g, h) == report.max_measure)
            .into(),
    );
    put(
        "measure_at_least_order",
        (report.max_measure >= g.order() as u128).into(),
    );

    let joins: Vec<Vec<SubgroupSet>> = members
        .iter()
        .map(|x| members.iter().map(|y| g.join(x, y)).collect())
        .collect();
    let index = |h: &SubgroupSet| members.binary_search(h).ok();
    let mut sublattice = true;
    for (i, x) in members.iter().enumerate() {
        for (j, y) in members.iter().enumerate() {
            sublattice &= is_member(&x.intersection(y)) && is_member(&joins[i][j]);
        }
    }
    put("sublattice", sublattice.into());

    let mut modular = sublattice;
    if sublattice {
        'outer: for (xi, x) in members.iter().enumerate() {
            for z in members.iter().filter(|z| x.is_subset(z)) {
                for (yi, y) in members.iter().enumerate() {
                    let lhs = g.join(x, &y.intersection(z));
                    let rhs = joins[xi][yi].intersection(z);
                    if lhs != rhs {
                        modular = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    put("modular", modular.into());

    let duals: Vec<SubgroupSet> = members.iter().map(|h| g.centralizer(h)).collect();
    put("duality_closed", duals.iter().all(is_member).into());
    put(
        "duality_involution",
        members
            .iter()
            .zip(&duals)
            .all(|(h, c)| g.centralizer(c) == *h)
            .into(),
    );
    let mut antitone = true;
    for (i, h) in members.iter().enumerate() {
        for (j, k) in members.iter().enumerate() {
            if h.is_subset(k) && !duals[j].is_subset(&duals[i]) {
                antitone = false;
            }
        }
    }
    put("duality_antitone", antitone.into());

    let m = &report.cd_subgroup;
    put(
        "cd_subgroup_is_minimum",
        (index(m).is_some() && members.iter().all(|h| m.is_subset(h))).into(),
    );
    put(
        "top_is_maximum",
        (index(&report.top).is_some() && members.iter().all(|h| h.is_subset(&report.top))).into(),
    );
    put("cd_subgroup_abelian", g.is_abelian_subgroup(m).into());
    put(
        "cd_subgroup_contains_center",
        g.center().is_subset(m).into(),
    );
    put(
        "cd_subgroup_characteristic",
        g.is_characteristic(m, limits.automorphism_bound).into(),
    );
    checks
}
