//! Constructors for the group families used throughout the crate.
//!
//! Element ids follow the lexicographic order of each family's natural
//! parameter tuple, so the identity always lands on id 0.

mod heisenberg;
mod spec;

use num_integer::Integer;

pub use heisenberg::{
    heisenberg_gf, scalar_automorphism_extension, scalar_automorphism_extension_parts, Heisenberg,
    ScalarExtension,
};
pub use spec::GroupSpec;

use crate::error::{Error, Result};
use crate::field::pow_mod;
use crate::group::Group;
use crate::subset::SubgroupSet;

pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclic order must be positive".into(),
        ));
    }
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        })
        .collect();
    let gens = if n > 1 { vec![1] } else { vec![] };
    Ok(Group::from_rule(n, |a, b| (a + b) % n)?
        .with_labels(labels)
        .with_named(vec![("a".into(), 1 % n)])
        .with_generators(gens)
        .with_spec(GroupSpec::cyclic(n)))
}

/// Dihedral group of order `order = 2m`, elements `r^i s^j` at id `2i + j`.
pub fn dihedral(order: usize) -> Result<Group> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "dihedral order must be even and at least 4, got {order}"
        )));
    }
    let m = order / 2;
    let labels = (0..order)
        .map(|id| {
            let (i, j) = (id / 2, id % 2);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (0, 1) => "s".to_string(),
                (i, 0) => format!("r^{i}"),
                (i, _) => format!("r^{i}s"),
            }
        })
        .collect();
    let g = Group::from_rule(order, |x, y| {
        let (i, j) = (x / 2, x % 2);
        let (k, l) = (y / 2, y % 2);
        let k = if j == 1 { (m - k) % m } else { k };
        2 * ((i + k) % m) + (j + l) % 2
    })?;
    Ok(g.with_labels(labels)
        .with_named(vec![("r".into(), 2), ("s".into(), 1)])
        .with_generators(vec![2, 1])
        .with_spec(GroupSpec::dihedral(order)))
}

/// Ids: 1, −1, i, −i, j, −j, k, −k.
pub fn quaternion8() -> Result<Group> {
    // unit products: index 0..4 = 1, i, j, k; returns (sign flip, unit)
    fn unit_mul(x: usize, y: usize) -> (bool, usize) {
        match (x, y) {
            (0, u) | (u, 0) => (false, u),
            (a, b) if a == b => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let g = Group::from_rule(8, |x, y| {
        let (flip, u) = unit_mul(x / 2, y / 2);
        let neg = (x % 2 == 1) ^ (y % 2 == 1) ^ flip;
        2 * u + neg as usize
    })?;
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ok(g.with_labels(labels)
        .with_named(vec![("i".into(), 2), ("j".into(), 4), ("k".into(), 6)])
        .with_generators(vec![2, 4])
        .with_spec(GroupSpec::Quaternion8 {}))
}

/// Symmetric group on `k ≤ 5` points; permutations in lexicographic order of
/// their one-line notation, product `(στ)(x) = σ(τ(x))`.
pub fn symmetric(k: usize) -> Result<Group> {
    if k == 0 || k > 5 {
        return Err(Error::InvalidParameter(format!(
            "symmetric degree must be in 1..=5, got {k}"
        )));
    }
    let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
    // lexicographic successors
    loop {
        let mut p = perms.last().unwrap().clone();
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        perms.push(p);
    }
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let n = perms.len();
    let g = Group::from_rule(n, |a, b| {
        let comp: Vec<usize> = (0..k).map(|x| perms[a][perms[b][x]]).collect();
        index(&comp)
    })?;
    let labels = perms
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join("")
        })
        .collect();
    let mut gens = Vec::new();
    if k >= 2 {
        let mut t: Vec<usize> = (0..k).collect();
        t.swap(0, 1);
        gens.push(index(&t));
    }
    if k >= 3 {
        let c: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
        gens.push(index(&c));
    }
    Ok(g.with_labels(labels)
        .with_generators(gens)
        .with_spec(GroupSpec::Symmetric { k }))
}

/// `G × H` with `(g, h)` at id `g·|H| + h`.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let m = h.order();
    let prod = Group::from_rule(g.order() * m, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })?;
    let labels = (0..prod.order())
        .map(|x| format!("({},{})", g.label(x / m), h.label(x % m)))
        .collect();
    let gens = g
        .generators()
        .iter()
        .map(|&x| x * m)
        .chain(h.generators().iter().copied())
        .collect();
    let prod = prod.with_labels(labels).with_generators(gens);
    Ok(match (g.spec(), h.spec()) {
        (Some(a), Some(b)) => prod.with_spec(GroupSpec::product(a.clone(), b.clone())),
        _ => prod,
    })
}

/// Least `k ≥ 1` with `r^k ≡ 1 (mod m)`.
pub fn multiplicative_order(r: u64, m: u64) -> Result<u64> {
    if m == 0 || r.gcd(&m) != 1 {
        return Err(Error::NotCoprime { a: r, b: m });
    }
    let mut k = 1;
    let mut x = r % m;
    while x != 1 % m {
        x = x * (r % m) % m;
        k += 1;
    }
    Ok(k)
}

/// Checks the ZM conditions, naming the first one violated.
pub fn check_zm_parameters(m: u64, n: u64, r: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidZmParameters(
            "m and n must be positive".into(),
        ));
    }
    let r_minus_1 = (r % m + m - 1) % m;
    if m.gcd(&r_minus_1) != 1 {
        return Err(Error::InvalidZmParameters("gcd(m, r-1) != 1".into()));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::InvalidZmParameters("gcd(m, n) != 1".into()));
    }
    if pow_mod(r, n, m) != 1 % m {
        return Err(Error::InvalidZmParameters("r^n != 1 (mod m)".into()));
    }
    Ok(())
}

/// `ZM(m,n,r) = <a, b | a^m = b^n = 1, b⁻¹ab = a^r>` on `a^i b^j` at id `i·n + j`.
pub fn zm_group(m: u64, n: u64, r: u64) -> Result<Group> {
    check_zm_parameters(m, n, r)?;
    let order = (m * n) as usize;
    let (mu, nu) = (m as usize, n as usize);
    // b^j a^k = a^{k s^j} b^j with s = r⁻¹ mod m
    let s = pow_mod(r, n - 1, m) as usize;
    let mut s_pow = vec![1 % mu; nu];
    for j in 1..nu {
        s_pow[j] = s_pow[j - 1] * s % mu;
    }
    let g = Group::from_rule(order, |x, y| {
        let (i, j) = (x / nu, x % nu);
        let (k, l) = (y / nu, y % nu);
        ((i + k * s_pow[j]) % mu) * nu + (j + l) % nu
    })?;
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x / nu, x % nu);
            let part = |sym: &str, e: usize| match e {
                0 => String::new(),
                1 => sym.to_string(),
                e => format!("{sym}^{e}"),
            };
            let s = format!("{}{}", part("a", i), part("b", j));
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect();
    let a = if mu > 1 { nu } else { 0 };
    let b = if nu > 1 { 1 } else { 0 };
    let gens = [a, b].into_iter().filter(|&x| x != 0).collect();
    Ok(g.with_labels(labels)
        .with_named(vec![("a".into(), a), ("b".into(), b)])
        .with_generators(gens)
        .with_spec(GroupSpec::zm(m, n, r)))
}

/// Action of an abelian group `B` on an abelian group `A`: `images[i][j]` is
/// the image of `A.generators()[j]` under `B.generators()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSpec {
    pub images: Vec<Vec<usize>>,
}

impl ActionSpec {
    /// Every generator of `b` acts trivially.
    pub fn trivial(a: &Group, b: &Group) -> Self {
        Self {
            images: vec![a.generators().to_vec(); b.generators().len()],
        }
    }
}

/// `A ⋊ B` with normal copy of `A` and complement `B`.
#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    pub group: Group,
    pub normal: SubgroupSet,
    pub complement: SubgroupSet,
    /// `automorphisms[b][a]` is `b·a·b⁻¹` computed in `A`.
    pub automorphisms: Vec<Vec<usize>>,
}

/// Extends generator images to a map on all of `a`, checking it is an
/// automorphism.
fn extend_to_automorphism(a: &Group, images: &[usize]) -> Option<Vec<usize>> {
    let gens = a.generators();
    if images.len() != gens.len() || images.iter().any(|&x| x >= a.order()) {
        return None;
    }
    let n = a.order();
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let e = queue[i];
        i += 1;
        for (k, &s) in gens.iter().enumerate() {
            let t = a.mul(e, s);
            let v = a.mul(phi[e], images[k]);
            if phi[t] == usize::MAX {
                phi[t] = v;
                queue.push(t);
            } else if phi[t] != v {
                return None;
            }
        }
    }
    let mut seen = vec![false; n];
    for &v in &phi {
        if v == usize::MAX || std::mem::replace(&mut seen[v], true) {
            return None;
        }
    }
    Some(phi)
}

pub fn semidirect_product(a: &Group, b: &Group, action: &ActionSpec) -> Result<Group> {
    Ok(semidirect_product_parts(a, b, action)?.group)
}

pub fn semidirect_product_parts(
    a: &Group,
    b: &Group,
    action: &ActionSpec,
) -> Result<SemidirectProduct> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian("acted-on group".into()));
    }
    if !b.is_abelian() {
        return Err(Error::NotAbelian("acting group".into()));
    }
    if a.order().gcd(&b.order()) != 1 {
        return Err(Error::NotCoprimeOrders {
            a: a.order(),
            b: b.order(),
        });
    }
    let bgens = b.generators();
    if action.images.len() != bgens.len() {
        return Err(Error::InvalidAction(format!(
            "expected images for {} generator(s) of B, got {}",
            bgens.len(),
            action.images.len()
        )));
    }
    let mut gen_auts = Vec::with_capacity(bgens.len());
    for (i, imgs) in action.images.iter().enumerate() {
        let phi = extend_to_automorphism(a, imgs).ok_or_else(|| {
            Error::InvalidAction(format!(
                "images {imgs:?} for generator {i} of B do not define an automorphism of A"
            ))
        })?;
        gen_auts.push(phi);
    }
    // ψ(e·h_i) = ψ(e) ∘ φ_i must be consistent over all of B
    let (na, nb) = (a.order(), b.order());
    let mut psi: Vec<Option<Vec<usize>>> = vec![None; nb];
    psi[0] = Some((0..na).collect());
    let mut queue = vec![0];
    let mut qi = 0;
    while qi < queue.len() {
        let e = queue[qi];
        qi += 1;
        for (i, &h) in bgens.iter().enumerate() {
            let t = b.mul(e, h);
            let pe = psi[e].as_ref().unwrap();
            let composed: Vec<usize> = (0..na).map(|x| pe[gen_auts[i][x]]).collect();
            match &psi[t] {
                None => {
                    psi[t] = Some(composed);
                    queue.push(t);
                }
                Some(existing) if *existing != composed => {
                    return Err(Error::InvalidAction(format!(
                        "relation of B violated at element {t}"
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let automorphisms: Vec<Vec<usize>> = psi.into_iter().map(|p| p.unwrap()).collect();
    let group = Group::from_rule(na * nb, |x, y| {
        let (p, k) = (x / nb, x % nb);
        let (q, l) = (y / nb, y % nb);
        a.mul(p, automorphisms[k][q]) * nb + b.mul(k, l)
    })?;
    let labels = (0..na * nb)
        .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
        .collect();
    let gens = a
        .generators()
        .iter()
        .map(|&x| x * nb)
        .chain(bgens.iter().copied())
        .collect();
    let mut group = group.with_labels(labels).with_generators(gens);
    if let (Some(sa), Some(sb)) = (a.spec(), b.spec()) {
        group = group.with_spec(GroupSpec::semidirect(
            sa.clone(),
            sb.clone(),
            action.images.clone(),
        ));
    }
    let n = na * nb;
    Ok(SemidirectProduct {
        normal: SubgroupSet::from_elements(n, (0..na).map(|x| x * nb)),
        complement: SubgroupSet::from_elements(n, 0..nb),
        group,
        automorphisms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families_validate() {
        let groups = [
            cyclic(1).unwrap(),
            cyclic(7).unwrap(),
            dihedral(10).unwrap(),
            quaternion8().unwrap(),
            symmetric(3).unwrap(),
            symmetric(4).unwrap(),
            zm_group(5, 4, 2).unwrap(),
            direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap()).unwrap(),
        ];
        for g in &groups {
            g.validate().unwrap();
        }
        assert_eq!(symmetric(5).unwrap().order(), 120);
    }

    #[test]
    fn dihedral_10() {
        let g = dihedral(10).unwrap();
        assert_eq!(g.order(), 10);
        assert!(!g.is_abelian());
        assert!(g.center().is_trivial());
        assert!(dihedral(7).is_err());
    }

    #[test]
    fn quaternion_facts() {
        let q = quaternion8().unwrap();
        assert_eq!(q.center().order(), 2);
        let involutions = (0..8).filter(|&x| q.order_of_element(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn zm_examples() {
        let s3 = zm_group(3, 2, 2).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(s3.center().is_trivial());
        let g = zm_group(5, 4, 2).unwrap();
        assert_eq!(g.order(), 20);
        assert!(g.center().is_trivial());
        // b⁻¹ a b = a^r
        let (a, b) = (g.named("a").unwrap(), g.named("b").unwrap());
        assert_eq!(g.conjugate(a, b), g.pow(a, 2));
    }

    #[test]
    fn zm_rejections_name_the_condition() {
        let err = zm_group(4, 2, 3).unwrap_err();
        assert_eq!(err, Error::InvalidZmParameters("gcd(m, r-1) != 1".into()));
        assert!(matches!(
            zm_group(6, 2, 5),
            Err(Error::InvalidZmParameters(_))
        ));
        assert_eq!(
            zm_group(7, 2, 2).unwrap_err(),
            Error::InvalidZmParameters("r^n != 1 (mod m)".into())
        );
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(1, 9).unwrap(), 1);
        assert_eq!(multiplicative_order(2, 3).unwrap(), 2);
        assert_eq!(multiplicative_order(2, 5).unwrap(), 4);
        assert_eq!(multiplicative_order(3, 7).unwrap(), 6);
        assert!(matches!(
            multiplicative_order(2, 4),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn zm_center_is_b_to_the_d() {
        for m in 1u64..=40 {
            for n in 1..=(200 / m) {
                for r in 1..m.max(2) {
                    if check_zm_parameters(m, n, r).is_err() {
                        continue;
                    }
                    let g = zm_group(m, n, r).unwrap();
                    let d = multiplicative_order(r, m).unwrap();
                    let b = g.named("b").unwrap();
                    assert_eq!(g.center(), g.closure([g.pow(b, d)]), "ZM({m},{n},{r})");
                }
            }
        }
    }

    #[test]
    fn semidirect_trivial_action_is_direct_product() {
        let (a, b) = (cyclic(5).unwrap(), cyclic(4).unwrap());
        let g = semidirect_product(&a, &b, &ActionSpec::trivial(&a, &b)).unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.table(), direct_product(&a, &b).unwrap().table());
    }

    #[test]
    fn frobenius_21() {
        let (a, b) = (cyclic(7).unwrap(), cyclic(3).unwrap());
        let sp = semidirect_product_parts(
            &a,
            &b,
            &ActionSpec {
                images: vec![vec![2]],
            },
        )
        .unwrap();
        let g = &sp.group;
        assert_eq!(g.order(), 21);
        g.validate().unwrap();
        assert!(g.is_normal(&sp.normal));
        assert!(sp.normal.intersection(&sp.complement).is_trivial());
        assert_eq!(g.join(&sp.normal, &sp.complement), g.whole());
        // b a b⁻¹ = a²
        let (x, y) = (3usize, 1usize);
        assert_eq!(g.mul(g.mul(y, x), g.inv(y)), g.mul(x, x));
    }

    #[test]
    fn semidirect_rejections() {
        let (z5, z2) = (cyclic(5).unwrap(), cyclic(2).unwrap());
        let err = semidirect_product(
            &z5,
            &z2,
            &ActionSpec {
                images: vec![vec![0]],
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
        // x ↦ x² has order 4, incompatible with a generator of order 2
        let err = semidirect_product(
            &z5,
            &z2,
            &ActionSpec {
                images: vec![vec![2]],
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
        let z10 = cyclic(10).unwrap();
        let err = semidirect_product(
            &z5,
            &z10,
            &ActionSpec {
                images: vec![vec![1]],
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotCoprimeOrders { .. }));
        let s3 = symmetric(3).unwrap();
        assert!(matches!(
            semidirect_product(
                &s3,
                &cyclic(5).unwrap(),
                &ActionSpec {
                    images: vec![vec![0, 1]]
                }
            ),
            Err(Error::NotAbelian(_))
        ));
    }

    #[test]
    fn semidirect_properties_on_z3xz3() {
        let z3 = cyclic(3).unwrap();
        let a = direct_product(&z3, &z3).unwrap();
        assert_eq!(a.generators(), &[3, 1]);
        // order-4 element [[0,-1],[1,0]]: (1,0) ↦ (0,1), (0,1) ↦ (-1,0)
        let sp = semidirect_product_parts(
            &a,
            &cyclic(4).unwrap(),
            &ActionSpec {
                images: vec![vec![1, 6]],
            },
        )
        .unwrap();
        sp.group.validate().unwrap();
        assert!(sp.group.is_normal(&sp.normal));
        assert!(sp.normal.intersection(&sp.complement).is_trivial());
        assert_eq!(sp.normal.order() * sp.complement.order(), sp.group.order());
    }
}
