//! Frobenius actions and Frobenius groups.
//!
//! For a normal subgroup `N` with complement `A`, the four conditions below
//! are equivalent, and `G` is a Frobenius group when they hold with both `N`
//! and `A` nontrivial:
//!
//! 1. conjugation by `A` on `N` fixes no nonidentity pair;
//! 2. `A ∩ A^g = 1` for every `g ∉ A`;
//! 3. `C_G(a) ≤ A` for every `1 ≠ a ∈ A`;
//! 4. `C_G(n) ≤ N` for every `1 ≠ n ∈ N`.
//!
//! Each is evaluated on its own so their agreement is itself a check.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::cd::{cd_lattice, CDReport, Method};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::subset::SubgroupSet;

#[derive(Debug, Clone)]
pub struct FrobeniusWitness {
    pub kernel: SubgroupSet,
    pub complement: SubgroupSet,
    /// Conditions 1–4 in order.
    pub condition_results: [bool; 4],
    pub is_frobenius: bool,
}

impl FrobeniusWitness {
    pub fn conditions_agree(&self) -> bool {
        self.condition_results
            .iter()
            .all(|&c| c == self.condition_results[0])
    }
}

fn check_complement(g: &Group, n: &SubgroupSet, a: &SubgroupSet) -> Result<()> {
    if !g.is_subgroup(n) || !g.is_subgroup(a) {
        return Err(Error::NotAComplement("N and A must be subgroups".into()));
    }
    if !g.is_normal(n) {
        return Err(Error::NotAComplement("N is not normal".into()));
    }
    if !n.intersection(a).is_trivial() {
        return Err(Error::NotAComplement(format!(
            "N ∩ A has order {}",
            n.intersection(a).order()
        )));
    }
    if n.order() * a.order() != g.order() {
        return Err(Error::NotAComplement(format!(
            "|N||A| = {} but |G| = {}",
            n.order() * a.order(),
            g.order()
        )));
    }
    Ok(())
}

/// One element per cyclic subgroup of `h`, identity excluded.
fn cyclic_reps(g: &Group, h: &SubgroupSet) -> Vec<usize> {
    let mut covered = SubgroupSet::trivial(g.order());
    let mut out = Vec::new();
    for x in h.iter().skip(1) {
        if covered.contains(x) {
            continue;
        }
        out.push(x);
        let powers = g.powers(x);
        let k = powers.len();
        for (e, &y) in powers.iter().enumerate() {
            if e.gcd(&k) == 1 {
                covered.insert(y);
            }
        }
    }
    out
}

pub fn frobenius_conditions(
    g: &Group,
    kernel: &SubgroupSet,
    complement: &SubgroupSet,
) -> Result<FrobeniusWitness> {
    check_complement(g, kernel, complement)?;
    let a_elems: Vec<usize> = complement.iter().skip(1).collect();
    let n_elems: Vec<usize> = kernel.iter().skip(1).collect();

    let c1 = a_elems
        .par_iter()
        .all(|&a| n_elems.iter().all(|&x| g.conjugate(x, a) != x));

    let c2 = (0..g.order())
        .into_par_iter()
        .filter(|&x| !complement.contains(x))
        .all(|x| {
            a_elems
                .iter()
                .all(|&a| !complement.contains(g.conjugate(a, x)))
        });

    let outside_a: Vec<usize> = (0..g.order())
        .filter(|&x| !complement.contains(x))
        .collect();
    let c3 = a_elems
        .par_iter()
        .all(|&a| outside_a.iter().all(|&x| !g.commute(a, x)));

    // C(n) = C(n^k) when <n> = <n^k>
    let outside_n: Vec<usize> = (0..g.order()).filter(|&x| !kernel.contains(x)).collect();
    let c4 = cyclic_reps(g, kernel)
        .par_iter()
        .all(|&x| outside_n.iter().all(|&y| !g.commute(x, y)));

    let condition_results = [c1, c2, c3, c4];
    let nontrivial = !kernel.is_trivial() && !complement.is_trivial();
    Ok(FrobeniusWitness {
        kernel: kernel.clone(),
        complement: complement.clone(),
        condition_results,
        is_frobenius: nontrivial && condition_results.iter().all(|&c| c),
    })
}

/// Searches `target` for an element whose stabilizer in `acting` under
/// conjugation is trivial. `Ok(None)` means no regular orbit exists, which
/// for a faithful coprime abelian action contradicts the regular-orbit
/// theorem and is reported rather than raised.
pub fn regular_orbit_search(
    g: &Group,
    acting: &SubgroupSet,
    target: &SubgroupSet,
) -> Result<Option<usize>> {
    if !g.is_subgroup(acting) || !g.is_subgroup(target) {
        return Err(Error::NotASubgroup(
            "acting and target must be subgroups".into(),
        ));
    }
    if !g.is_abelian_subgroup(acting) {
        return Err(Error::NotAbelian("acting subgroup".into()));
    }
    if acting.order().gcd(&target.order()) != 1 {
        return Err(Error::NotCoprime {
            a: acting.order() as u64,
            b: target.order() as u64,
        });
    }
    let target_gens = g.subgroup_generators(target);
    let acting_elems: Vec<usize> = acting.iter().skip(1).collect();
    if acting_elems.iter().any(|&a| {
        target_gens
            .iter()
            .any(|&x| !target.contains(g.conjugate(x, a)))
    }) {
        return Err(Error::InvalidAction(
            "acting subgroup does not normalize the target".into(),
        ));
    }
    let kernel_size = acting_elems
        .iter()
        .filter(|&&a| target_gens.iter().all(|&x| g.commute(a, x)))
        .count();
    if kernel_size > 0 {
        return Err(Error::ActionNotFaithful(kernel_size));
    }
    Ok(target
        .iter()
        .find(|&x| acting_elems.iter().all(|&a| !g.commute(a, x))))
}

/// `CD(N)` computed inside `N` as a group, with members mapped back into `G`.
pub fn cd_lattice_within(
    g: &Group,
    sub: &SubgroupSet,
    method: Method,
    limits: &Limits,
) -> Result<CDReport> {
    if sub.is_full() {
        return cd_lattice(g, method, limits);
    }
    let (h, embed) = g.subgroup_as_group(sub)?;
    let inner = cd_lattice(&h, method, limits)?;
    let lift = |s: &SubgroupSet| g.lift(&embed, s);
    Ok(CDReport {
        members: inner
            .members
            .iter()
            .map(lift)
            .collect::<Vec<_>>()
            .tap_sort(),
        cd_subgroup: lift(&inner.cd_subgroup),
        top: lift(&inner.top),
        ..inner
    })
}

trait TapSort {
    fn tap_sort(self) -> Self;
}

impl TapSort for Vec<SubgroupSet> {
    fn tap_sort(mut self) -> Self {
        self.sort();
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem6Report {
    pub checks: BTreeMap<String, bool>,
    #[serde(skip)]
    pub group_report: CDReport,
    #[serde(skip)]
    pub kernel_report: CDReport,
}

impl Theorem6Report {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&b| b)
    }
}

/// Checks `CD(G) = CD(N)` for a Frobenius group together with the facts its
/// argument rests on.
pub fn verify_theorem6(
    g: &Group,
    kernel: &SubgroupSet,
    complement: &SubgroupSet,
    method: Method,
    limits: &Limits,
) -> Result<Theorem6Report> {
    let witness = frobenius_conditions(g, kernel, complement)?;
    let (n_group, embed) = g.subgroup_as_group(kernel)?;
    let z_n = g.lift(&embed, &n_group.center());
    let (n, a) = (kernel.order(), complement.order());
    let group_report = cd_lattice(g, method, limits)?;
    let kernel_report = cd_lattice_within(g, kernel, method, limits)?;
    let m_g_of_n = kernel.order() as u128 * g.centralizer(kernel).order() as u128;

    let mut checks = BTreeMap::new();
    let mut put = |k: &str, v: bool| {
        checks.insert(k.to_string(), v);
    };
    put("frobenius", witness.is_frobenius);
    put("kernel_order_1_mod_complement", n % a == 1);
    put("kernel_center_order_1_mod_complement", z_n.order() % a == 1);
    put("center_trivial", g.center().is_trivial());
    put("kernel_nilpotent", n_group.is_nilpotent());
    put(
        "kernel_measure_exceeds_order",
        m_g_of_n == (n * z_n.order()) as u128 && m_g_of_n > g.order() as u128,
    );
    put(
        "trivial_not_member",
        !group_report.members.iter().any(|h| h.is_trivial()),
    );
    put(
        "whole_not_member",
        !group_report.members.iter().any(|h| h.is_full()),
    );
    put("cd_equal", group_report.members == kernel_report.members);
    put(
        "measures_agree",
        group_report.max_measure == kernel_report.max_measure
            && group_report
                .members
                .iter()
                .all(|h| g.centralizer(h).intersection(kernel) == g.centralizer(h)),
    );
    Ok(Theorem6Report {
        checks,
        group_report,
        kernel_report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        cyclic, dihedral, direct_product, semidirect_product_parts, zm_group, ActionSpec,
    };

    fn s3_parts() -> (Group, SubgroupSet, SubgroupSet) {
        let g = zm_group(3, 2, 2).unwrap();
        let n = g.closure([g.named("a").unwrap()]);
        let a = g.closure([g.named("b").unwrap()]);
        (g, n, a)
    }

    #[test]
    fn s3_is_frobenius() {
        let (g, n, a) = s3_parts();
        let w = frobenius_conditions(&g, &n, &a).unwrap();
        assert_eq!(w.condition_results, [true; 4]);
        assert!(w.is_frobenius);
    }

    #[test]
    fn z6_is_not() {
        let g = cyclic(6).unwrap();
        let w = frobenius_conditions(&g, &g.closure([2]), &g.closure([3])).unwrap();
        assert_eq!(w.condition_results, [false; 4]);
        assert!(!w.is_frobenius);
    }

    #[test]
    fn f21_is_frobenius() {
        let sp = semidirect_product_parts(
            &cyclic(7).unwrap(),
            &cyclic(3).unwrap(),
            &ActionSpec {
                images: vec![vec![2]],
            },
        )
        .unwrap();
        let w = frobenius_conditions(&sp.group, &sp.normal, &sp.complement).unwrap();
        assert_eq!(w.condition_results, [true; 4]);
        assert_eq!(
            regular_orbit_search(&sp.group, &sp.complement, &sp.normal).unwrap(),
            Some(3)
        );
    }

    #[test]
    fn complement_preconditions() {
        let (g, n, a) = s3_parts();
        assert!(matches!(
            frobenius_conditions(&g, &a, &n),
            Err(Error::NotAComplement(_))
        ));
        assert!(matches!(
            frobenius_conditions(&g, &n, &g.trivial_subgroup()),
            Err(Error::NotAComplement(_))
        ));
    }

    #[test]
    fn regular_orbits() {
        let (g, n, a) = s3_parts();
        let x = regular_orbit_search(&g, &a, &n).unwrap().unwrap();
        assert!(n.contains(x) && x != 0);
        // trivial acting group: every element qualifies, the first is 0
        assert_eq!(
            regular_orbit_search(&g, &g.trivial_subgroup(), &n).unwrap(),
            Some(0)
        );
        assert!(matches!(
            regular_orbit_search(&g, &n, &n),
            Err(Error::NotCoprime { .. })
        ));
        let z = direct_product(&cyclic(3).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert!(matches!(
            regular_orbit_search(&z, &z.closure([1]), &z.closure([2])),
            Err(Error::ActionNotFaithful(1))
        ));
    }

    #[test]
    fn within_and_theorem6_small() {
        let g = dihedral(10).unwrap();
        let n = g.closure([g.named("r").unwrap()]);
        let a = g.closure([g.named("s").unwrap()]);
        let r = cd_lattice_within(&g, &n, Method::BruteForce, &Limits::default()).unwrap();
        assert_eq!(r.members, vec![n.clone()]);
        assert_eq!(r.max_measure, 25);
        let t6 = verify_theorem6(&g, &n, &a, Method::ClosureFamily, &Limits::default()).unwrap();
        assert!(t6.passed(), "{:?}", t6.checks);
        let whole =
            cd_lattice_within(&g, &g.whole(), Method::BruteForce, &Limits::default()).unwrap();
        assert_eq!(whole.members, r.members);
    }
}
