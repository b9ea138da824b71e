//! Unitriangular 3×3 matrices with entries `a, b ∈ GF(p²)` and `c ∈ GF(p)`,
//! and their extension by the scalar automorphism `(a, b, c) ↦ (λa, λ²b, λc)`.

use super::{multiplicative_order, GroupSpec};
use crate::error::{Error, Result};
use crate::field::{FieldElement, Gf};
use crate::group::Group;
use crate::subset::SubgroupSet;

/// Coordinates of the group of matrices
///
/// ```text
/// | 1 a b |
/// | 0 1 c |
/// | 0 0 1 |
/// ```
///
/// where `(a, b, c)·(a', b', c') = (a + a', b + b' + a·c', c + c')`.
/// Ids are lexicographic in the coefficient tuple `(a₀, a₁, b₀, b₁, c)`.
#[derive(Debug, Clone, Copy)]
pub struct Heisenberg {
    pub p: u64,
    pub big: Gf,
    pub small: Gf,
}

impl Heisenberg {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self {
            p,
            big: Gf::quadratic(p)?,
            small: Gf::prime(p)?,
        })
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(5)
    }

    pub fn encode(&self, a: FieldElement, b: FieldElement, c: FieldElement) -> usize {
        let q = (self.p * self.p) as usize;
        (self.big.index_of(a) * q + self.big.index_of(b)) * self.p as usize + self.small.index_of(c)
    }

    pub fn decode(&self, id: usize) -> (FieldElement, FieldElement, FieldElement) {
        let p = self.p as usize;
        let c = id % p;
        let rest = id / p;
        let q = p * p;
        let (b, a) = (rest % q, rest / q);
        let field = |idx: usize| self.big.element2((idx / p) as u64, (idx % p) as u64);
        (field(a), field(b), self.small.element(c as u64))
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        let (a, b, c) = self.decode(x);
        let (a2, b2, c2) = self.decode(y);
        let c2_big = c2.embed(self.big);
        self.encode(a + a2, b + b2 + a * c2_big, c + c2)
    }

    /// `{(a, b, 0)}`, abelian of index p.
    pub fn abelian_subgroup(&self) -> SubgroupSet {
        let p = self.p as usize;
        SubgroupSet::from_elements(self.order(), (0..self.order()).filter(|id| id % p == 0))
    }

    /// `{(0, b, 0)}`.
    pub fn center_subgroup(&self) -> SubgroupSet {
        let p = self.p as usize;
        let q = p * p;
        SubgroupSet::from_elements(self.order(), (0..q).map(|b| b * p))
    }

    /// `(λa, λ²b, λc)`.
    pub fn scale(&self, id: usize, lambda: u64) -> usize {
        let (a, b, c) = self.decode(id);
        let l = self.big.element(lambda);
        self.encode(l * a, l * l * b, self.small.element(lambda) * c)
    }

    fn generators(&self) -> Vec<usize> {
        let (zero, one) = (self.big.zero(), self.big.one());
        let t = self.big.t().expect("quadratic field");
        vec![
            self.encode(one, zero, self.small.zero()),
            self.encode(t, zero, self.small.zero()),
            self.encode(zero, zero, self.small.one()),
        ]
    }
}

/// The group of order p⁵ over GF(p²) ⊃ GF(p).
pub fn heisenberg_gf(p: u64) -> Result<Group> {
    let h = Heisenberg::new(p)?;
    let g = Group::from_rule(h.order(), |x, y| h.multiply(x, y))?;
    let labels = (0..h.order())
        .map(|id| {
            let (a, b, c) = h.decode(id);
            format!("({a},{b},{c})")
        })
        .collect();
    let gens = h.generators();
    Ok(g.with_labels(labels)
        .with_named(vec![
            ("x1".into(), gens[0]),
            ("xt".into(), gens[1]),
            ("y".into(), gens[2]),
        ])
        .with_generators(gens)
        .with_spec(GroupSpec::HeisenbergGf { p }))
}

/// `P ⋊ <x>` with kernel, complement and the checked properties of `x`.
#[derive(Debug, Clone)]
pub struct ScalarExtension {
    pub group: Group,
    pub kernel: SubgroupSet,
    pub complement: SubgroupSet,
    /// The id of `x`.
    pub x: usize,
    pub order_of_x: usize,
    pub fixed_point_free: bool,
    /// Image of each kernel id (as an element of `P`) under the automorphism.
    pub automorphism: Vec<usize>,
}

impl ScalarExtension {
    /// Id in the extension of a kernel element given by its id in `P`.
    pub fn embed_kernel(&self, q: usize) -> usize {
        q * self.order_of_x
    }
}

pub fn scalar_automorphism_extension(p_group: &Group, lambda: u64) -> Result<Group> {
    Ok(scalar_automorphism_extension_parts(p_group, lambda)?.group)
}

/// Builds `P ⋊ <x>` where `x⁻¹ g x = (λa, λ²b, λc)` for `g = (a, b, c)`.
/// Ids are `q·e + k` for `q·x^k`, `e` the order of `x`.
pub fn scalar_automorphism_extension_parts(
    p_group: &Group,
    lambda: u64,
) -> Result<ScalarExtension> {
    let Some(GroupSpec::HeisenbergGf { p }) = p_group.spec() else {
        return Err(Error::InvalidParameter(
            "scalar extension needs a heisenberg_gf group".into(),
        ));
    };
    let p = *p;
    let h = Heisenberg::new(p)?;
    let lambda = lambda % p;
    if lambda == 0 {
        return Err(Error::InvalidLambda("lambda must be a unit mod p".into()));
    }
    if lambda == 1 {
        return Err(Error::InvalidLambda(
            "lambda = 1 gives the identity automorphism".into(),
        ));
    }
    let e = multiplicative_order(lambda, p)? as usize;
    let n = p_group.order();
    let phi: Vec<usize> = (0..n).map(|g| h.scale(g, lambda)).collect();

    // homomorphism against generators plus bijectivity
    let gens = p_group.generators();
    for g in 0..n {
        for &s in gens {
            if phi[p_group.mul(g, s)] != p_group.mul(phi[g], phi[s]) {
                return Err(Error::InvalidLambda(format!(
                    "scaling is not a homomorphism at ({g}, {s})"
                )));
            }
        }
    }
    let mut seen = vec![false; n];
    if phi.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
        return Err(Error::InvalidLambda("scaling is not bijective".into()));
    }

    let mut powers = vec![(0..n).collect::<Vec<usize>>()];
    for k in 1..=e {
        let prev = &powers[k - 1];
        powers.push(prev.iter().map(|&g| phi[g]).collect());
    }
    if powers[e].iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::InvalidLambda("automorphism order mismatch".into()));
    }
    powers.truncate(e);
    let fixed_point_free = powers[1..]
        .iter()
        .all(|pw| pw.iter().enumerate().skip(1).all(|(i, &v)| i != v));

    // x^k q x^-k = φ^{-k}(q)
    let mut conj = Vec::with_capacity(n * e);
    for k in 0..e {
        conj.extend(powers[(e - k) % e].iter().map(|&v| v as u16));
    }
    let group = Group::split_extension(p_group.clone(), e, conj)?;
    let total = n * e;
    let labels: Vec<String> = (0..total)
        .map(|id| {
            let (q, k) = (id / e, id % e);
            match k {
                0 => p_group.label(q),
                1 => format!("{}x", p_group.label(q)),
                k => format!("{}x^{k}", p_group.label(q)),
            }
        })
        .collect();
    let mut all_gens: Vec<usize> = gens.iter().map(|&g| g * e).collect();
    all_gens.push(1);
    let group = group
        .with_labels(labels)
        .with_named(vec![("x".into(), 1)])
        .with_generators(all_gens)
        .with_spec(GroupSpec::ScalarExt { p, lambda });
    Ok(ScalarExtension {
        kernel: SubgroupSet::from_elements(total, (0..n).map(|q| q * e)),
        complement: SubgroupSet::from_elements(total, 0..e),
        group,
        x: 1,
        order_of_x: e,
        fixed_point_free,
        automorphism: phi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_3() {
        let g = heisenberg_gf(3).unwrap();
        assert_eq!(g.order(), 243);
        g.validate().unwrap();
        let h = Heisenberg::new(3).unwrap();
        assert_eq!(g.center(), h.center_subgroup());
        assert_eq!(g.center().order(), 9);
        let a = h.abelian_subgroup();
        assert_eq!(a.order(), 81);
        assert!(g.is_subgroup(&a));
        assert!(g.is_abelian_subgroup(&a));
        assert_eq!(g.centralizer(&a), a);
        assert!(g.is_nilpotent());
    }

    #[test]
    fn encode_decode_roundtrip() {
        let h = Heisenberg::new(5).unwrap();
        for id in (0..h.order()).step_by(37) {
            let (a, b, c) = h.decode(id);
            assert_eq!(h.encode(a, b, c), id);
        }
        assert_eq!(h.encode(h.big.zero(), h.big.zero(), h.small.zero()), 0);
    }

    #[test]
    fn automorphism_law_on_generators() {
        let h = Heisenberg::new(7).unwrap();
        let (f2, f1) = (h.big, h.small);
        let x = h.encode(f2.one(), f2.zero(), f1.zero());
        let y = h.encode(f2.zero(), f2.zero(), f1.one());
        assert_eq!(
            h.scale(h.multiply(x, y), 2),
            h.multiply(h.scale(x, 2), h.scale(y, 2))
        );
    }

    #[test]
    fn lambda_rejections() {
        let p3 = heisenberg_gf(3).unwrap();
        assert!(matches!(
            scalar_automorphism_extension(&p3, 1),
            Err(Error::InvalidLambda(_))
        ));
        assert!(matches!(
            scalar_automorphism_extension(&p3, 3),
            Err(Error::InvalidLambda(_))
        ));
        let z = crate::constructors::cyclic(3).unwrap();
        assert!(scalar_automorphism_extension(&z, 2).is_err());
    }

    #[test]
    fn p3_lambda2_is_not_fixed_point_free() {
        // λ² = 1 mod 3, so x fixes every (0, b, 0)
        let p3 = heisenberg_gf(3).unwrap();
        let ext = scalar_automorphism_extension_parts(&p3, 2).unwrap();
        assert_eq!(ext.order_of_x, 2);
        assert!(!ext.fixed_point_free);
        assert_eq!(ext.group.order(), 486);
        ext.group.validate().unwrap();
        let g = &ext.group;
        for q in 0..243 {
            let moved = g.conjugate(ext.embed_kernel(q), ext.x);
            assert_eq!(moved, ext.embed_kernel(ext.automorphism[q]));
        }
    }
}
