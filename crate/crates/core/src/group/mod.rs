//! Finite groups given by multiplication tables.
//!
//! Elements are ids `0..n` with the identity fixed at `0`. Small and medium
//! groups carry a dense Cayley table; a split extension `N ⋊ <x>` can instead
//! reference the dense table of `N` plus the conjugation action of `x`, which
//! keeps groups of order ~50k within a few hundred megabytes.

mod automorphism;
mod series;
mod subgroup;

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use automorphism::{
    automorphism_generators, automorphisms_small, for_each_automorphism, Characteristic,
};

use crate::constructors::GroupSpec;
use crate::error::{Axiom, Error, Result};
use crate::limits::Limits;

/// Largest order a dense table can hold (entries are stored as `u16`).
pub const MAX_DENSE_ORDER: usize = 1 << 16;

const ASSOCIATIVITY_SAMPLES: usize = 200_000;

#[derive(Clone)]
enum Multiplication {
    Dense(Arc<[u16]>),
    Split(Arc<SplitTable>),
}

/// Multiplication of `N ⋊ <x>` on ids `q * period + k` standing for `q·x^k`.
struct SplitTable {
    kernel: Group,
    period: usize,
    /// `conj[k * |N| + q]` is the id of `x^k q x^-k`.
    conj: Box<[u16]>,
}

#[derive(Clone)]
pub struct Group {
    order: usize,
    mult: Multiplication,
    inverse: Arc<[u32]>,
    labels: Option<Arc<[String]>>,
    named: Vec<(String, usize)>,
    generators: Arc<OnceLock<Vec<usize>>>,
    spec: Option<GroupSpec>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order)
            .field("spec", &self.spec)
            .finish_non_exhaustive()
    }
}

impl Group {
    /// Validates a Cayley table and builds a group from it.
    ///
    /// If the identity is not at id 0 the table is relabeled by swapping it
    /// with 0. Associativity is checked exhaustively up to order 512 and on a
    /// fixed pseudo-random sample of triples above that.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Group> {
        Self::from_cayley_table_with(table, Limits::default().associativity_bound)
    }

    pub fn from_cayley_table_with(
        table: &[Vec<usize>],
        associativity_bound: usize,
    ) -> Result<Group> {
        let n = table.len();
        let shape = |i: usize, j: usize| Error::NotAGroup {
            axiom: Axiom::Shape,
            witness: [i, j, n],
        };
        if n == 0 {
            return Err(shape(0, 0));
        }
        Limits::guard("dense table order", n, MAX_DENSE_ORDER)?;
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(shape(i, row.len()));
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Err(shape(i, j));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(Error::NotAGroup {
                axiom: Axiom::Identity,
                witness: [0, 0, 0],
            })?;
        // swap ids `identity` and 0
        let relabel = |g: usize| {
            if g == identity {
                0
            } else if g == 0 {
                identity
            } else {
                g
            }
        };
        let mut flat = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u16;
            }
        }
        let group = Self::from_dense_unchecked(n, flat)?;
        group.validate_with(associativity_bound)?;
        Ok(group)
    }

    /// Builds a group from a flat row-major table whose group axioms are
    /// guaranteed by construction. Only inverses are derived.
    pub(crate) fn from_dense_unchecked(n: usize, flat: Vec<u16>) -> Result<Group> {
        Limits::guard("dense table order", n, MAX_DENSE_ORDER)?;
        debug_assert_eq!(flat.len(), n * n);
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            let row = &flat[a * n..(a + 1) * n];
            if let Some(b) = row.iter().position(|&v| v == 0) {
                inverse[a] = b as u32;
            }
        }
        if let Some(a) = inverse.iter().position(|&v| v == u32::MAX) {
            return Err(Error::NotAGroup {
                axiom: Axiom::Inverse,
                witness: [a, 0, 0],
            });
        }
        Ok(Group {
            order: n,
            mult: Multiplication::Dense(flat.into()),
            inverse: inverse.into(),
            labels: None,
            named: Vec::new(),
            generators: Arc::new(OnceLock::new()),
            spec: None,
        })
    }

    /// Fills a dense table from a multiplication rule on ids.
    pub(crate) fn from_rule<F>(n: usize, rule: F) -> Result<Group>
    where
        F: Fn(usize, usize) -> usize + Sync,
    {
        Limits::guard("dense table order", n, MAX_DENSE_ORDER)?;
        let mut flat = vec![0u16; n * n];
        flat.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = rule(a, b) as u16;
            }
        });
        Self::from_dense_unchecked(n, flat)
    }

    /// `kernel ⋊ <x>` where `conj[k][q]` is the id of `x^k q x^-k` and `x`
    /// has order `period`.
    pub(crate) fn split_extension(kernel: Group, period: usize, conj: Vec<u16>) -> Result<Group> {
        let kn = kernel.order();
        debug_assert_eq!(conj.len(), kn * period);
        let n = kn * period;
        let table = SplitTable {
            kernel,
            period,
            conj: conj.into_boxed_slice(),
        };
        let inverse: Vec<u32> = (0..n)
            .into_par_iter()
            .map(|g| table.inv(g) as u32)
            .collect();
        Ok(Group {
            order: n,
            mult: Multiplication::Split(Arc::new(table)),
            inverse: inverse.into(),
            labels: None,
            named: Vec::new(),
            generators: Arc::new(OnceLock::new()),
            spec: None,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mult {
            Multiplication::Dense(t) => t[a * self.order + b] as usize,
            Multiplication::Split(s) => s.mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `x⁻¹ g x`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.inv(x), self.mul(g, x))
    }

    /// `g⁻¹ x⁻¹ g x`.
    #[inline]
    pub fn commutator(&self, g: usize, x: usize) -> usize {
        self.mul(self.inv(g), self.conjugate(g, x))
    }

    pub fn pow(&self, g: usize, mut k: u64) -> usize {
        let mut base = g;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn order_of_element(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Powers `g^0, g^1, ...` up to the order of `g`.
    pub fn powers(&self, g: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = g;
        while x != 0 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels.into());
        self
    }

    /// Looks up an element the constructor gave a name, such as `a` and `b`
    /// in a ZM group.
    pub fn named(&self, name: &str) -> Option<usize> {
        self.named
            .iter()
            .find_map(|(n, g)| (n == name).then_some(*g))
    }

    pub fn named_elements(&self) -> &[(String, usize)] {
        &self.named
    }

    pub(crate) fn with_named(mut self, named: Vec<(String, usize)>) -> Self {
        self.named = named;
        self
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub(crate) fn with_spec(mut self, spec: GroupSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    pub(crate) fn with_generators(self, gens: Vec<usize>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(gens);
        Self {
            generators: Arc::new(cell),
            ..self
        }
    }

    /// A generating sequence: the one the constructor supplied, or else a
    /// greedy scan in id order keeping each element not yet generated.
    pub fn generators(&self) -> &[usize] {
        self.generators
            .get_or_init(|| self.greedy_generators(0..self.order))
    }

    /// Row-major copy of the full table. Only sensible for small groups.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.mult, Multiplication::Dense(_))
    }

    /// Checks identity, inverses, the Latin property and associativity.
    pub fn validate(&self) -> Result<()> {
        self.validate_with(Limits::default().associativity_bound)
    }

    pub fn validate_with(&self, associativity_bound: usize) -> Result<()> {
        let n = self.order;
        let fail = |axiom, witness| Err(Error::NotAGroup { axiom, witness });
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return fail(Axiom::Identity, [0, g, 0]);
            }
            let h = self.inv(g);
            if self.mul(g, h) != 0 || self.mul(h, g) != 0 {
                return fail(Axiom::Inverse, [g, h, 0]);
            }
        }
        let latin = (0..n).into_par_iter().find_map_first(|a| {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = self.mul(a, b);
                if std::mem::replace(&mut row_seen[r], true) {
                    return Some([a, b, r]);
                }
                let c = self.mul(b, a);
                if std::mem::replace(&mut col_seen[c], true) {
                    return Some([b, a, c]);
                }
            }
            None
        });
        if let Some(w) = latin {
            return fail(Axiom::Latin, w);
        }
        let assoc = |&(a, b, c): &(usize, usize, usize)| {
            self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
        };
        let witness = if n <= associativity_bound {
            (0..n).into_par_iter().find_map_first(|a| {
                (0..n)
                    .flat_map(|b| (0..n).map(move |c| (a, b, c)))
                    .find(assoc)
            })
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cd1a);
            (0..ASSOCIATIVITY_SAMPLES)
                .map(|_| {
                    (
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    )
                })
                .find(assoc)
        };
        match witness {
            Some((a, b, c)) => fail(Axiom::Associativity, [a, b, c]),
            None => Ok(()),
        }
    }
}

impl SplitTable {
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        let e = self.period;
        let kn = self.kernel.order();
        let (p, k) = (a / e, a % e);
        let (q, l) = (b / e, b % e);
        let moved = self.conj[k * kn + q] as usize;
        self.kernel.mul(p, moved) * e + (k + l) % e
    }

    fn inv(&self, a: usize) -> usize {
        let e = self.period;
        let kn = self.kernel.order();
        let (p, k) = (a / e, a % e);
        let back = (e - k) % e;
        let moved = self.conj[back * kn + self.kernel.inv(p)] as usize;
        moved * e + back
    }
}
