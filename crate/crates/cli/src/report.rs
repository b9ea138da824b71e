//! Serialized forms of reports: JSON, DOT, and plain text.

use std::collections::BTreeMap;
use std::fmt::Write;

use cdlat_core::cd::{CDReport, Check, Method};
use cdlat_core::harness::ChainRow;
use cdlat_core::{Group, GroupSpec, SubgroupSet};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct MemberJson {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<usize>>,
    pub generators: Vec<usize>,
}

impl MemberJson {
    pub fn new(g: &Group, h: &SubgroupSet, elements_limit: usize) -> Self {
        Self {
            order: h.order(),
            elements: (h.order() <= elements_limit).then(|| h.to_vec()),
            generators: g.subgroup_generators(h),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CdJson {
    pub order: usize,
    pub max_measure: u128,
    pub members: Vec<MemberJson>,
    pub cd_subgroup: MemberJson,
    pub is_chain: bool,
    pub chain_length: Option<usize>,
    pub property_checks: BTreeMap<String, Check>,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::ClosureFamily => "closure",
        Method::BruteForce => "oracle",
    }
}

impl CdJson {
    pub fn new(g: &Group, r: &CDReport, elements_limit: usize, runtime_ms: Option<u64>) -> Self {
        Self {
            order: r.group_order,
            max_measure: r.max_measure,
            members: r
                .members
                .iter()
                .map(|h| MemberJson::new(g, h, elements_limit))
                .collect(),
            cd_subgroup: MemberJson::new(g, &r.cd_subgroup, elements_limit),
            is_chain: r.is_chain,
            chain_length: r.chain_length,
            property_checks: r.property_checks.clone(),
            method: method_name(r.method),
            runtime_ms,
        }
    }
}

/// Covering pairs `(i, j)`: `members[i] < members[j]` with nothing between.
pub fn covering_edges(members: &[SubgroupSet]) -> Vec<(usize, usize)> {
    let below = |a: &SubgroupSet, b: &SubgroupSet| a != b && a.is_subset(b);
    let mut edges = Vec::new();
    for (i, x) in members.iter().enumerate() {
        for (j, y) in members.iter().enumerate() {
            if below(x, y) && !members.iter().any(|z| below(x, z) && below(z, y)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Hasse diagram of the members under inclusion, smaller subgroups at the
/// bottom.
pub fn to_dot(g: &Group, r: &CDReport) -> String {
    let mut out = String::from("digraph cd {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, h) in r.members.iter().enumerate() {
        let gens = g.subgroup_generators(h);
        let _ = writeln!(
            out,
            "  n{i} [label=\"order={}, m={}\", tooltip=\"generators {:?}\"];",
            h.order(),
            r.max_measure,
            gens
        );
    }
    for (i, j) in covering_edges(&r.members) {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

fn labels(g: &Group, elems: &[usize]) -> String {
    elems
        .iter()
        .map(|&x| g.label(x))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn to_text(g: &Group, r: &CDReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order        {}", r.group_order);
    let _ = writeln!(out, "m(G)         {}", r.max_measure);
    let _ = writeln!(out, "method       {}", method_name(r.method));
    let _ = writeln!(out, "candidates   {}", r.candidates);
    let shape = match r.chain_length {
        Some(l) => format!("chain of length {l}"),
        None => "not a chain".to_string(),
    };
    let _ = writeln!(out, "members      {} ({shape})", r.members.len());
    for h in &r.members {
        let gens = g.subgroup_generators(h);
        let _ = writeln!(out, "  order {:>6}  <{}>", h.order(), labels(g, &gens));
    }
    let m = g.subgroup_generators(&r.cd_subgroup);
    let _ = writeln!(
        out,
        "M(G)         order {} <{}>",
        r.cd_subgroup.order(),
        labels(g, &m)
    );
    for (k, v) in &r.property_checks {
        let v = match v {
            Check::Pass => "pass",
            Check::Fail => "FAIL",
            Check::Unknown => "unknown",
        };
        let _ = writeln!(out, "  {k:<30} {v}");
    }
    out
}

#[derive(Debug, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub center_order: usize,
    pub abelian: bool,
    pub generators: Vec<usize>,
    pub named: BTreeMap<String, usize>,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

impl GroupSummary {
    pub fn new(g: &Group, dump_table: bool) -> Self {
        Self {
            order: g.order(),
            center_order: g.center().order(),
            abelian: g.is_abelian(),
            generators: g.generators().to_vec(),
            named: g.named_elements().iter().cloned().collect(),
            labels: (0..g.order()).map(|x| g.label(x)).collect(),
            table: dump_table.then(|| g.table()),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order        {}", self.order);
        let _ = writeln!(out, "center order {}", self.center_order);
        let _ = writeln!(out, "abelian      {}", self.abelian);
        let _ = writeln!(out, "generators   {:?}", self.generators);
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i:>6}  {l}");
        }
        if let Some(t) = &self.table {
            for row in t {
                let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
        out
    }
}

/// A census row, or the reason it was skipped.
#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ScanRow {
    Done(ChainRow),
    Skipped {
        name: String,
        instance: GroupSpec,
        skipped: String,
    },
}

pub fn scan_text(rows: &[ScanRow]) -> String {
    let mut out = format!(
        "{:<28} {:>7} {:>14} {:>8} {:>6} {:>6}\n",
        "group", "order", "m(G)", "members", "chain", "length"
    );
    for row in rows {
        match row {
            ScanRow::Done(r) => {
                let len = r.chain_length.map_or("-".to_string(), |l| l.to_string());
                let _ = writeln!(
                    out,
                    "{:<28} {:>7} {:>14} {:>8} {:>6} {:>6}",
                    r.name, r.order, r.max_measure, r.members, r.is_chain, len
                );
            }
            ScanRow::Skipped { name, skipped, .. } => {
                let _ = writeln!(out, "{name:<28} skipped: {skipped}");
            }
        }
    }
    out
}
