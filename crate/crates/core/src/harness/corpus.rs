//! Instance lists for the verification suites.

use crate::constructors::GroupSpec;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subset::SubgroupSet;

fn z(n: usize) -> GroupSpec {
    GroupSpec::cyclic(n)
}

fn sd(a: GroupSpec, b: GroupSpec, action: &[&[usize]]) -> GroupSpec {
    GroupSpec::semidirect(a, b, action.iter().map(|v| v.to_vec()).collect())
}

/// `Z2 × Z2` with generators `[2, 1]`.
fn v4() -> GroupSpec {
    GroupSpec::product(z(2), z(2))
}

/// `Z3 × Z3` with generators `[3, 1]`.
fn z3z3() -> GroupSpec {
    GroupSpec::product(z(3), z(3))
}

/// A normal subgroup with a complement, read off from how the group was
/// built.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub normal: SubgroupSet,
    pub complement: SubgroupSet,
}

impl Factorization {
    pub fn of(spec: &GroupSpec, g: &Group) -> Result<Self> {
        let n = g.order();
        let named = |name: &str| g.closure(g.named(name));
        let (normal, complement) = match spec {
            GroupSpec::Zm { .. } => (named("a"), named("b")),
            GroupSpec::Dihedral { .. } => (named("r"), named("s")),
            GroupSpec::Semidirect { b, .. } => {
                let nb = b.build()?.order();
                (
                    SubgroupSet::from_elements(n, (0..n).step_by(nb)),
                    SubgroupSet::from_elements(n, 0..nb),
                )
            }
            GroupSpec::ScalarExt { .. } => {
                let e = g.order_of_element(1);
                (
                    SubgroupSet::from_elements(n, (0..n).step_by(e)),
                    g.closure([1]),
                )
            }
            _ if g.is_abelian() => (g.whole(), g.trivial_subgroup()),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "no known normal subgroup and complement for {}",
                    spec.name()
                )))
            }
        };
        Ok(Self { normal, complement })
    }
}

/// A subgroup named by generators: entries are element names, optionally
/// with a power (`"a^2"`), and the center can be thrown in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRecipe {
    pub generators: Vec<String>,
    pub with_center: bool,
}

impl SubgroupRecipe {
    pub fn named(names: &[&str]) -> Self {
        Self {
            generators: names.iter().map(|s| s.to_string()).collect(),
            with_center: false,
        }
    }

    pub fn with_center(mut self) -> Self {
        self.with_center = true;
        self
    }

    pub fn resolve(&self, g: &Group) -> Result<SubgroupSet> {
        let mut gens = Vec::new();
        for word in &self.generators {
            let (name, power) = match word.split_once('^') {
                Some((n, p)) => (
                    n,
                    p.parse::<u64>()
                        .map_err(|_| Error::InvalidParameter(format!("bad power in {word}")))?,
                ),
                None => (word.as_str(), 1),
            };
            let x = g
                .named(name)
                .ok_or_else(|| Error::InvalidParameter(format!("no element named {name}")))?;
            gens.push(g.pow(x, power));
        }
        if self.with_center {
            gens.extend(g.subgroup_generators(&g.center()));
        }
        Ok(g.closure(gens))
    }
}

/// `(A, B, action)` with `A`, `B` abelian of coprime orders: each `A` gets
/// faithful and non-faithful actions.
pub fn theorem3_instances() -> Vec<(GroupSpec, GroupSpec, Vec<Vec<usize>>)> {
    let v = |a: &[&[usize]]| a.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    vec![
        (z(5), z(4), v(&[&[2]])),
        (z(5), z(2), v(&[&[4]])),
        (z(5), z(4), v(&[&[4]])),
        (z(5), z(4), v(&[&[1]])),
        (z(7), z(3), v(&[&[2]])),
        (z(7), z(6), v(&[&[3]])),
        (z(7), z(6), v(&[&[2]])),
        (z(7), z(2), v(&[&[1]])),
        (z(9), z(2), v(&[&[8]])),
        (z(9), z(8), v(&[&[8]])),
        (z(9), z(4), v(&[&[8]])),
        (z3z3(), z(4), v(&[&[1, 6]])),
        (z3z3(), z(2), v(&[&[6, 2]])),
        (z3z3(), z(8), v(&[&[1, 6]])),
        (z3z3(), z(4), v(&[&[6, 2]])),
        (z3z3(), v4(), v(&[&[6, 2], &[1, 3]])),
    ]
}

/// Groups with their standard Frobenius factorization.
pub fn frobenius_groups() -> Vec<GroupSpec> {
    vec![
        GroupSpec::zm(3, 2, 2),
        GroupSpec::dihedral(10),
        GroupSpec::dihedral(14),
        sd(z(7), z(3), &[&[2]]),
        sd(z(5), z(4), &[&[2]]),
        sd(z(11), z(5), &[&[3]]),
        sd(v4(), z(3), &[&[1, 3]]),
        sd(z3z3(), z(4), &[&[1, 6]]),
        sd(z(9), z(2), &[&[8]]),
        GroupSpec::zm(7, 6, 3),
    ]
}

/// Normal subgroup and complement pairs with whether they form a
/// Frobenius group.
pub fn complement_triples() -> Vec<(GroupSpec, bool)> {
    let mut out: Vec<(GroupSpec, bool)> =
        frobenius_groups().into_iter().map(|g| (g, true)).collect();
    out.extend([
        (sd(z(3), z(2), &[&[1]]), false),
        (GroupSpec::dihedral(8), false),
        (sd(z(5), z(4), &[&[4]]), false),
        (sd(z(7), z(6), &[&[2]]), false),
        (sd(z3z3(), v4(), &[&[6, 2], &[1, 3]]), false),
        (GroupSpec::zm(5, 4, 4), false),
        (GroupSpec::ScalarExt { p: 3, lambda: 2 }, false),
    ]);
    out
}

/// Faithful coprime actions of abelian complements on their kernels.
pub fn regular_orbit_instances() -> Vec<GroupSpec> {
    let mut out = frobenius_groups();
    out.extend([
        sd(z(7), z(6), &[&[3]]),
        sd(z(13), z(4), &[&[5]]),
        sd(z(13), z(6), &[&[4]]),
        sd(z3z3(), v4(), &[&[6, 2], &[1, 3]]),
        sd(z3z3(), z(2), &[&[6, 2]]),
        sd(z(5), z(2), &[&[4]]),
        GroupSpec::zm(5, 4, 2),
    ]);
    out
}

/// `p`-groups with an abelian subgroup of index `p`, on both sides of
/// `|P : Z(P)| > p²`.
pub fn index_p_instances() -> Vec<(GroupSpec, SubgroupRecipe)> {
    let r = || SubgroupRecipe::named(&["r"]);
    vec![
        (GroupSpec::dihedral(16), r()),
        (GroupSpec::dihedral(8), r()),
        (GroupSpec::dihedral(32), r()),
        (GroupSpec::Quaternion8 {}, SubgroupRecipe::named(&["i"])),
        (z(8), SubgroupRecipe::named(&["a^2"])),
        (
            GroupSpec::HeisenbergGf { p: 3 },
            SubgroupRecipe::named(&["x1", "xt"]).with_center(),
        ),
    ]
}

/// Short names used by the chain census.
pub fn by_name(name: &str) -> Option<GroupSpec> {
    Some(match name {
        "Z6" => z(6),
        "S3" => GroupSpec::zm(3, 2, 2),
        "Q8" => GroupSpec::Quaternion8 {},
        "D4" => GroupSpec::dihedral(8),
        "D5" => GroupSpec::dihedral(10),
        "D7" => GroupSpec::dihedral(14),
        "F21" => sd(z(7), z(3), &[&[2]]),
        "F20" => sd(z(5), z(4), &[&[2]]),
        "A4" => sd(v4(), z(3), &[&[1, 3]]),
        "S4" => GroupSpec::Symmetric { k: 4 },
        "D8" => GroupSpec::dihedral(16),
        _ => return None,
    })
}

/// Known answers to "is `CD(G)` a single subgroup" for the named groups.
pub fn expected_single_member(spec: &GroupSpec) -> Option<bool> {
    let singles = ["Z6", "S3", "D5", "F21"];
    let multiples = ["Q8", "D4"];
    if singles.iter().any(|n| by_name(n).as_ref() == Some(spec)) {
        Some(true)
    } else if multiples.iter().any(|n| by_name(n).as_ref() == Some(spec)) {
        Some(false)
    } else {
        None
    }
}

pub fn chain_corpus() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = [
        "Z6", "S3", "Q8", "D4", "D5", "D7", "F21", "F20", "A4", "S4", "D8",
    ]
    .iter()
    .filter_map(|n| by_name(n))
    .collect();
    out.extend(
        theorem3_instances()
            .into_iter()
            .map(|(a, b, act)| GroupSpec::semidirect(a, b, act)),
    );
    out.push(sd(z(7), z(6), &[&[2]]));
    out.push(GroupSpec::zm(5, 4, 4));
    out
}

/// Every small group used anywhere in the suites, plus a few extra shapes.
pub fn full_corpus() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = (1..=12).map(z).collect();
    out.extend([
        GroupSpec::Quaternion8 {},
        GroupSpec::dihedral(12),
        GroupSpec::dihedral(18),
        GroupSpec::dihedral(24),
        GroupSpec::Symmetric { k: 3 },
        GroupSpec::Symmetric { k: 4 },
        GroupSpec::Symmetric { k: 5 },
        GroupSpec::product(v4(), z(2)),
        GroupSpec::product(GroupSpec::Quaternion8 {}, z(2)),
        GroupSpec::product(GroupSpec::Quaternion8 {}, z(3)),
        GroupSpec::product(GroupSpec::dihedral(8), z(2)),
        GroupSpec::product(GroupSpec::zm(3, 2, 2), z(3)),
        GroupSpec::product(GroupSpec::zm(3, 2, 2), GroupSpec::zm(3, 2, 2)),
        GroupSpec::zm(9, 2, 8),
        GroupSpec::zm(7, 3, 2),
        GroupSpec::zm(13, 4, 5),
        GroupSpec::zm(21, 2, 20),
    ]);
    out.extend(chain_corpus());
    out.extend(frobenius_groups());
    out.extend(complement_triples().into_iter().map(|(s, _)| s));
    out.extend(index_p_instances().into_iter().map(|(s, _)| s));
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(s.clone()));
    out
}
