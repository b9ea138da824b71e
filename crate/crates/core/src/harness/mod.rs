//! Mechanical checks of the quantitative claims on concrete groups.
//!
//! Each check returns a [`VerificationOutcome`] whose `expected` facts come
//! from the claimed formula and whose `actual` facts come from the engine.
//! Expected subgroups are built by `closure` from named generators, so they
//! do not depend on how a constructor numbers its elements.

pub mod corpus;

use std::collections::BTreeMap;
use std::time::Instant;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::cd::{cd_lattice, cd_lattice_cross_validated, CDReport, Check, Method};
use crate::constructors::{
    check_zm_parameters, heisenberg_gf, multiplicative_order, scalar_automorphism_extension_parts,
    semidirect_product_parts, zm_group, ActionSpec, GroupSpec, Heisenberg,
};
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_conditions, regular_orbit_search, verify_theorem6};
use crate::group::Group;
use crate::limits::Limits;
use crate::subset::SubgroupSet;

pub use corpus::{Factorization, SubgroupRecipe};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupSummary {
    pub order: usize,
    pub generators: Vec<usize>,
}

impl SubgroupSummary {
    pub fn of(g: &Group, h: &SubgroupSet) -> Self {
        Self {
            order: h.order(),
            generators: g.subgroup_generators(h),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Fact {
    Integer(u128),
    Flag(bool),
    Subgroups(Vec<SubgroupSummary>),
}

impl Fact {
    pub fn subgroups(g: &Group, hs: &[SubgroupSet]) -> Self {
        Fact::Subgroups(hs.iter().map(|h| SubgroupSummary::of(g, h)).collect())
    }
}

impl From<bool> for Fact {
    fn from(b: bool) -> Self {
        Fact::Flag(b)
    }
}

impl From<u128> for Fact {
    fn from(v: u128) -> Self {
        Fact::Integer(v)
    }
}

impl From<usize> for Fact {
    fn from(v: usize) -> Self {
        Fact::Integer(v as u128)
    }
}

pub type Facts = BTreeMap<String, Fact>;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationOutcome {
    pub claim_id: String,
    pub instance: GroupSpec,
    pub expected: Facts,
    pub actual: Facts,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerificationOutcome {
    fn new(
        claim_id: &str,
        instance: GroupSpec,
        expected: Facts,
        actual: Facts,
        started: Instant,
    ) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            instance,
            passed: expected == actual,
            expected,
            actual,
            runtime_ms: Some(started.elapsed().as_millis() as u64),
        }
    }

    /// Names of facts whose expected and actual values differ.
    pub fn mismatches(&self) -> Vec<&str> {
        let mut keys: Vec<&str> = self
            .expected
            .keys()
            .chain(self.actual.keys())
            .map(String::as_str)
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.retain(|k| self.expected.get(*k) != self.actual.get(*k));
        keys
    }
}

struct FactBuilder(Facts);

impl FactBuilder {
    fn new() -> Self {
        Self(Facts::new())
    }

    fn put(&mut self, key: &str, fact: impl Into<Fact>) -> &mut Self {
        self.0.insert(key.to_string(), fact.into());
        self
    }

    fn done(&mut self) -> Facts {
        std::mem::take(&mut self.0)
    }
}

/// CD lattice by the closure family, confirmed by the exhaustive oracle when
/// the group is within the enumeration guard.
pub fn checked_cd(g: &Group, limits: &Limits) -> Result<CDReport> {
    if g.order() <= limits.order_bound {
        cd_lattice_cross_validated(g, limits)
    } else {
        cd_lattice(g, Method::ClosureFamily, limits)
    }
}

fn properties_hold(report: &CDReport) -> bool {
    report.property_checks.values().all(|c| *c != Check::Fail)
}

/// `G = A ⋊ B` with `A`, `B` abelian of coprime orders:
/// `m(G) = |A|²|C_B(A)|²` and `CD(G) = {A·C_B(A)}`.
pub fn verify_theorem3(
    a: &GroupSpec,
    b: &GroupSpec,
    action: &[Vec<usize>],
    limits: &Limits,
) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let sp = semidirect_product_parts(
        &a.build()?,
        &b.build()?,
        &ActionSpec {
            images: action.to_vec(),
        },
    )?;
    let g = &sp.group;
    let c_b = g.centralizer(&sp.normal).intersection(&sp.complement);
    let target = g.join(&sp.normal, &c_b);
    let side = (sp.normal.order() * c_b.order()) as u128;
    let expected = FactBuilder::new()
        .put("m", side * side)
        .put("cd", Fact::subgroups(g, &[target]))
        .put("properties", true)
        .done();
    let report = checked_cd(g, limits)?;
    let actual = FactBuilder::new()
        .put("m", report.max_measure)
        .put("cd", Fact::subgroups(g, &report.members))
        .put("properties", properties_hold(&report))
        .done();
    let instance = GroupSpec::semidirect(a.clone(), b.clone(), action.to_vec());
    Ok(VerificationOutcome::new(
        "theorem3", instance, expected, actual, started,
    ))
}

/// `m(ZM(m,n,r)) = m²n²/d²` and `CD = {<a, b^d>}` with `d = ord_m(r)`.
pub fn verify_corollary4(m: u64, n: u64, r: u64, limits: &Limits) -> Result<VerificationOutcome> {
    let started = Instant::now();
    check_zm_parameters(m, n, r)?;
    let g = zm_group(m, n, r)?;
    let d = multiplicative_order(r, m)?;
    let (a, b) = (g.named("a").unwrap_or(0), g.named("b").unwrap_or(0));
    let b_d = g.pow(b, d);
    let target = g.closure([a, b_d]);
    let formula = (m as u128 * m as u128 * n as u128 * n as u128) / (d as u128 * d as u128);
    let expected = FactBuilder::new()
        .put("m", formula)
        .put("cd", Fact::subgroups(&g, &[target]))
        .put("center", Fact::subgroups(&g, &[g.closure([b_d])]))
        .put("chain_length_zero", true)
        .put("properties", true)
        .done();
    let report = checked_cd(&g, limits)?;
    let actual = FactBuilder::new()
        .put("m", report.max_measure)
        .put("cd", Fact::subgroups(&g, &report.members))
        .put("center", Fact::subgroups(&g, &[g.center()]))
        .put("chain_length_zero", report.chain_length == Some(0))
        .put("properties", properties_hold(&report))
        .done();
    Ok(VerificationOutcome::new(
        "corollary4",
        GroupSpec::zm(m, n, r),
        expected,
        actual,
        started,
    ))
}

/// Every valid `(m, n, r)` with `mn ≤ bound`, ordered by `(m, n, r)`. For
/// `m = 1` only `r = 1` is listed; otherwise `r` runs over `2..m`.
pub fn zm_triples(bound: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for m in 1..=bound {
        for n in 1..=bound / m {
            let rs: Vec<u64> = if m == 1 { vec![1] } else { (2..m).collect() };
            for r in rs {
                if check_zm_parameters(m, n, r).is_ok() {
                    out.push((m, n, r));
                }
            }
        }
    }
    out
}

pub fn scan_zm(bound: u64, limits: &Limits) -> Result<Vec<VerificationOutcome>> {
    zm_triples(bound)
        .par_iter()
        .map(|&(m, n, r)| verify_corollary4(m, n, r, limits))
        .collect()
}

fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|&p| n.is_multiple_of(p))?;
    let mut k = n;
    while k.is_multiple_of(p) {
        k /= p;
    }
    (k == 1).then_some(p)
}

/// For a `p`-group `P` with abelian `A` of index `p`: `CD(P) = {A}` exactly
/// when `|P : Z(P)| > p²`. Both sides are evaluated independently.
pub fn verify_prop7(
    spec: &GroupSpec,
    a: &SubgroupRecipe,
    limits: &Limits,
) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let g = spec.build()?;
    let p = prime_power_base(g.order()).ok_or(Error::NotPGroup(g.order()))?;
    let a = a.resolve(&g)?;
    if !g.is_abelian_subgroup(&a) {
        return Err(Error::NotAbelian("A".into()));
    }
    let index = g.order() / a.order();
    if index != p {
        return Err(Error::NotIndexP { index, expected: p });
    }
    let center_index = g.order() / g.center().order();
    let report = checked_cd(&g, limits)?;

    let mut expected = FactBuilder::new();
    expected
        .put("cd_is_a", center_index > p * p)
        .put("properties", true);
    let mut actual = FactBuilder::new();
    actual
        .put("cd_is_a", report.members == [a.clone()])
        .put("properties", properties_hold(&report));
    if !g.is_abelian() {
        let c = g.centralizer(&a);
        expected
            .put("a_self_centralizing", true)
            .put("measure_of_a", (a.order() as u128).pow(2));
        actual
            .put("a_self_centralizing", c == a)
            .put("measure_of_a", a.order() as u128 * c.order() as u128);
    }
    Ok(VerificationOutcome::new(
        "prop7",
        spec.clone(),
        expected.done(),
        actual.done(),
        started,
    ))
}

/// The four complement conditions agree, and agree with the expected
/// Frobenius status.
pub fn verify_prop5(spec: &GroupSpec, expect_frobenius: bool) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let g = spec.build()?;
    let f = Factorization::of(spec, &g)?;
    let w = frobenius_conditions(&g, &f.normal, &f.complement)?;
    let expected = FactBuilder::new()
        .put("conditions_agree", true)
        .put("frobenius", expect_frobenius)
        .done();
    let actual = FactBuilder::new()
        .put("conditions_agree", w.conditions_agree())
        .put("frobenius", w.is_frobenius)
        .done();
    Ok(VerificationOutcome::new(
        "prop5",
        spec.clone(),
        expected,
        actual,
        started,
    ))
}

/// A faithful coprime action of an abelian group has a regular orbit.
pub fn verify_corollary2(spec: &GroupSpec) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let g = spec.build()?;
    let f = Factorization::of(spec, &g)?;
    let found = regular_orbit_search(&g, &f.complement, &f.normal)?;
    let stabilizer_trivial =
        found.is_some_and(|x| f.complement.iter().filter(|&a| g.commute(a, x)).count() == 1);
    let expected = FactBuilder::new()
        .put("regular_orbit", true)
        .put("stabilizer_trivial", true)
        .done();
    let actual = FactBuilder::new()
        .put("regular_orbit", found.is_some())
        .put("stabilizer_trivial", stabilizer_trivial)
        .done();
    Ok(VerificationOutcome::new(
        "corollary2",
        spec.clone(),
        expected,
        actual,
        started,
    ))
}

/// For a Frobenius group `NA`, `CD(G) = CD(N)` along with the facts the
/// argument uses.
pub fn verify_theorem6_outcome(spec: &GroupSpec, limits: &Limits) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let g = spec.build()?;
    let f = Factorization::of(spec, &g)?;
    let method = if g.order() <= limits.order_bound {
        Method::BruteForce
    } else {
        Method::ClosureFamily
    };
    let t6 = verify_theorem6(&g, &f.normal, &f.complement, method, limits)?;
    let mut expected = FactBuilder::new();
    let mut actual = FactBuilder::new();
    for (k, &v) in &t6.checks {
        expected.put(k, true);
        actual.put(k, v);
    }
    expected.put("cd", Fact::subgroups(&g, &t6.kernel_report.members));
    actual.put("cd", Fact::subgroups(&g, &t6.group_report.members));
    Ok(VerificationOutcome::new(
        "theorem6",
        spec.clone(),
        expected.done(),
        actual.done(),
        started,
    ))
}

/// Names of the four complement conditions, in order.
pub const FROBENIUS_CONDITIONS: [&str; 4] = [
    "action_fixed_point_free",
    "complement_trivial_intersection",
    "complement_centralizers",
    "kernel_centralizers",
];

/// The order-`3·7⁵` Frobenius group with non-abelian kernel.
pub fn verify_example_sec3(limits: &Limits) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let (p, lambda) = (7u64, 2u64);
    let h = Heisenberg::new(p)?;
    let pg = heisenberg_gf(p)?;
    limits.check_deadline()?;
    let a = h.abelian_subgroup();
    let ext = scalar_automorphism_extension_parts(&pg, lambda)?;
    let g = &ext.group;
    limits.check_deadline()?;

    let p5 = (p as u128).pow(5);
    let a_order = (p as u128).pow(4);
    let mut expected = FactBuilder::new();
    expected
        .put("p_order", p5)
        .put("p_center_order", (p * p) as u128)
        .put("a_abelian", true)
        .put("a_index", p as u128)
        .put("x_order", 3usize)
        .put("x_fixed_point_free", true)
        .put("g_order", 3 * p5)
        .put("frobenius", true)
        .put("cd_p_is_a", true)
        .put("cd_g_is_a", true)
        .put("cd_g_equals_cd_p", true)
        .put("centralizer_of_a_order", a_order)
        .put("m_g", a_order * a_order);
    for name in FROBENIUS_CONDITIONS {
        expected.put(name, true);
    }

    let report_p = cd_lattice(&pg, Method::ClosureFamily, limits)?;
    limits.check_deadline()?;
    let report_g = cd_lattice(g, Method::ClosureFamily, limits)?;
    limits.check_deadline()?;
    let w = frobenius_conditions(g, &ext.kernel, &ext.complement)?;
    let to_g = |s: &SubgroupSet| {
        SubgroupSet::from_elements(g.order(), s.iter().map(|q| ext.embed_kernel(q)))
    };
    let a_in_g = to_g(&a);
    let lifted: Vec<SubgroupSet> = report_p.members.iter().map(to_g).collect();

    let mut actual = FactBuilder::new();
    actual
        .put("p_order", pg.order())
        .put("p_center_order", pg.center().order())
        .put(
            "a_abelian",
            pg.is_subgroup(&a) && pg.is_abelian_subgroup(&a),
        )
        .put("a_index", pg.order() / a.order())
        .put("x_order", g.order_of_element(ext.x))
        .put("x_fixed_point_free", ext.fixed_point_free)
        .put("g_order", g.order())
        .put("frobenius", w.is_frobenius)
        .put("cd_p_is_a", report_p.members == [a.clone()])
        .put("cd_g_is_a", report_g.members == [a_in_g.clone()])
        .put("cd_g_equals_cd_p", lifted == report_g.members)
        .put("centralizer_of_a_order", g.centralizer(&a_in_g).order())
        .put("m_g", report_g.max_measure);
    for (name, ok) in FROBENIUS_CONDITIONS.iter().zip(w.condition_results) {
        actual.put(name, ok);
    }
    Ok(VerificationOutcome::new(
        "example_sec3",
        GroupSpec::ScalarExt { p, lambda },
        expected.done(),
        actual.done(),
        started,
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainRow {
    pub name: String,
    pub instance: GroupSpec,
    pub order: usize,
    pub max_measure: u128,
    pub members: usize,
    pub is_chain: bool,
    pub chain_length: Option<usize>,
    /// The group splits as abelian normal by abelian of coprime order.
    pub coprime_abelian_split: bool,
    /// The group is Frobenius with abelian kernel.
    pub frobenius_abelian_kernel: bool,
    /// False when a sufficient condition holds but the lattice is not a
    /// single subgroup.
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainSummary {
    pub rows: Vec<ChainRow>,
    pub all_consistent: bool,
}

/// Tabulates which groups have a one-member CD lattice and checks the two
/// sufficient conditions against the table.
pub fn verify_cd_chain_classes(corpus: &[GroupSpec], limits: &Limits) -> Result<ChainSummary> {
    let rows: Vec<ChainRow> = corpus
        .par_iter()
        .map(|spec| census_row(spec, limits))
        .collect::<Result<_>>()?;
    Ok(ChainSummary {
        all_consistent: rows.iter().all(|r| r.consistent),
        rows,
    })
}

/// One census row: the CD lattice of `spec` and which sufficient conditions apply.
pub fn census_row(spec: &GroupSpec, limits: &Limits) -> Result<ChainRow> {
    let g = spec.build()?;
    let report = checked_cd(&g, limits)?;
    let (split, frob) = match Factorization::of(spec, &g) {
        Ok(f) => {
            let abelian_parts =
                g.is_abelian_subgroup(&f.normal) && g.is_abelian_subgroup(&f.complement);
            let coprime = f.normal.order().gcd(&f.complement.order()) == 1;
            let frob = abelian_parts.then(|| frobenius_conditions(&g, &f.normal, &f.complement));
            let frob = matches!(frob, Some(Ok(w)) if w.is_frobenius);
            (abelian_parts && coprime, frob)
        }
        Err(_) => (false, false),
    };
    let single = report.members.len() == 1;
    Ok(ChainRow {
        name: spec.name(),
        instance: spec.clone(),
        order: g.order(),
        max_measure: report.max_measure,
        members: report.members.len(),
        is_chain: report.is_chain,
        chain_length: report.chain_length,
        coprime_abelian_split: split,
        frobenius_abelian_kernel: frob,
        consistent: single || !(split || frob),
    })
}

/// Runs the CD property checks on `spec` and reports each as a fact.
/// `Unknown` counts as holding.
pub fn verify_properties(spec: &GroupSpec, limits: &Limits) -> Result<VerificationOutcome> {
    let started = Instant::now();
    let g = spec.build()?;
    let report = checked_cd(&g, limits)?;
    let mut expected = FactBuilder::new();
    let mut actual = FactBuilder::new();
    for (k, c) in &report.property_checks {
        expected.put(k, true);
        actual.put(k, *c != Check::Fail);
    }
    Ok(VerificationOutcome::new(
        "cd_properties",
        spec.clone(),
        expected.done(),
        actual.done(),
        started,
    ))
}

/// Named groups of verification, as selected by `cdlat verify --suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Theorem3,
    Corollary4,
    Prop5,
    Corollary2,
    Theorem6,
    Prop7,
    ChainClasses,
    Properties,
    ExampleSec3,
}

impl Suite {
    pub const FAST: [Suite; 8] = [
        Suite::Theorem3,
        Suite::Corollary4,
        Suite::Prop5,
        Suite::Corollary2,
        Suite::Theorem6,
        Suite::Prop7,
        Suite::ChainClasses,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem3 => "theorem3",
            Suite::Corollary4 => "corollary4",
            Suite::Prop5 => "prop5",
            Suite::Corollary2 => "corollary2",
            Suite::Theorem6 => "theorem6",
            Suite::Prop7 => "prop7",
            Suite::ChainClasses => "chain-classes",
            Suite::Properties => "properties",
            Suite::ExampleSec3 => "example-sec3",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::FAST
            .into_iter()
            .chain([Suite::ExampleSec3])
            .find(|x| x.name() == s)
    }

    /// Runs the suite. `zm_bound` bounds `mn` for the ZM family.
    pub fn run(self, zm_bound: u64, limits: &Limits) -> Result<Vec<VerificationOutcome>> {
        match self {
            Suite::Theorem3 => corpus::theorem3_instances()
                .par_iter()
                .map(|(a, b, act)| verify_theorem3(a, b, act, limits))
                .collect(),
            Suite::Corollary4 => scan_zm(zm_bound, limits),
            Suite::Prop5 => corpus::complement_triples()
                .par_iter()
                .map(|(spec, frob)| verify_prop5(spec, *frob))
                .collect(),
            Suite::Corollary2 => corpus::regular_orbit_instances()
                .par_iter()
                .map(verify_corollary2)
                .collect(),
            Suite::Theorem6 => corpus::frobenius_groups()
                .par_iter()
                .map(|spec| verify_theorem6_outcome(spec, limits))
                .collect(),
            Suite::Prop7 => corpus::index_p_instances()
                .par_iter()
                .map(|(spec, a)| verify_prop7(spec, a, limits))
                .collect(),
            Suite::ChainClasses => chain_outcomes(limits),
            Suite::Properties => corpus::full_corpus()
                .par_iter()
                .map(|spec| verify_properties(spec, limits))
                .collect(),
            Suite::ExampleSec3 => Ok(vec![verify_example_sec3(limits)?]),
        }
    }
}

fn chain_outcomes(limits: &Limits) -> Result<Vec<VerificationOutcome>> {
    let started = Instant::now();
    let summary = verify_cd_chain_classes(&corpus::chain_corpus(), limits)?;
    Ok(summary
        .rows
        .into_iter()
        .map(|row| {
            let mut expected = FactBuilder::new();
            let mut actual = FactBuilder::new();
            expected.put("consistent", true);
            actual.put("consistent", row.consistent);
            if let Some(single) = corpus::expected_single_member(&row.instance) {
                expected.put("single_member", single);
                actual.put("single_member", row.members == 1);
            }
            VerificationOutcome::new(
                "chain_classes",
                row.instance,
                expected.done(),
                actual.done(),
                started,
            )
        })
        .collect())
}
