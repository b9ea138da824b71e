//! Automorphism search for small groups by backtracking over generator images.

use std::ops::ControlFlow;

use super::Group;
use crate::error::Result;
use crate::limits::Limits;
use crate::subset::SubgroupSet;

/// Outcome of a characteristic-subgroup test. `Unknown` is returned above
/// the automorphism size guard instead of an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Characteristic {
    Yes,
    No,
    Unknown,
}

/// Generating sequence chosen greedily: each step adjoins the element whose
/// closure with the current subgroup is largest (ties to the smallest id).
fn growth_generators(g: &Group) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut current = g.trivial_subgroup();
    while !current.is_full() {
        let mut best: Option<(usize, SubgroupSet)> = None;
        for x in 0..g.order() {
            if current.contains(x) {
                continue;
            }
            let next = g.extend_closure(&current, &gens, &[x]);
            if best.as_ref().is_none_or(|(_, b)| next.order() > b.order()) {
                best = Some((x, next));
            }
        }
        let (x, next) = best.expect("a proper subgroup misses some element");
        gens.push(x);
        current = next;
    }
    gens
}

/// Breadth-first words for the chain `H_1 ≤ H_2 ≤ ...` with
/// `H_j = <g_1..g_j>`. Each entry is `(element, parent, generator index)`
/// with `element = parent · g_index`; entries of `H_j` precede the rest.
struct WordChain {
    entries: Vec<(usize, usize, usize)>,
    /// `ends[j]` is the number of entries lying in `H_{j+1}`.
    ends: Vec<usize>,
}

impl WordChain {
    fn new(g: &Group, gens: &[usize]) -> Self {
        let mut seen = g.trivial_subgroup();
        let mut entries = vec![(0, 0, usize::MAX)];
        let mut ends = Vec::with_capacity(gens.len());
        for j in 0..gens.len() {
            // re-sweep everything found so far with generators 0..=j
            let mut i = 0;
            while i < entries.len() {
                let e = entries[i].0;
                for (k, &s) in gens[..=j].iter().enumerate() {
                    let t = g.mul(e, s);
                    if seen.insert(t) {
                        entries.push((t, e, k));
                    }
                }
                i += 1;
            }
            ends.push(entries.len());
        }
        Self { entries, ends }
    }
}

/// Calls `visit` with every automorphism as an image array. Stops early if
/// `visit` breaks.
pub fn for_each_automorphism<F>(g: &Group, limit: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    Limits::guard("automorphism search order", g.order(), limit)?;
    let gens = growth_generators(g);
    let chain = WordChain::new(g, &gens);
    let orders: Vec<usize> = (0..g.order()).map(|x| g.order_of_element(x)).collect();
    let mut image = vec![usize::MAX; g.order()];
    image[0] = 0;
    let gen_invs: Vec<usize> = gens.iter().map(|&x| g.inv(x)).collect();
    let mut images = vec![0usize; gens.len()];
    let _ = search(
        g,
        &gens,
        &gen_invs,
        &chain,
        &orders,
        0,
        &mut images,
        &mut image,
        &mut visit,
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn search<F>(
    g: &Group,
    gens: &[usize],
    gen_invs: &[usize],
    chain: &WordChain,
    orders: &[usize],
    depth: usize,
    images: &mut [usize],
    image: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if depth == gens.len() {
        return visit(image);
    }
    let target_order = orders[gens[depth]];
    let start = if depth == 0 { 1 } else { chain.ends[depth - 1] };
    let end = chain.ends[depth];
    for cand in 0..g.order() {
        if orders[cand] != target_order {
            continue;
        }
        images[depth] = cand;
        if extend(g, gens, gen_invs, chain, depth, start, end, images, image) {
            let flow = search(
                g,
                gens,
                gen_invs,
                chain,
                orders,
                depth + 1,
                images,
                image,
                visit,
            );
            for &(e, _, _) in &chain.entries[start..end] {
                image[e] = usize::MAX;
            }
            flow?;
        }
    }
    ControlFlow::Continue(())
}

/// Defines the map on `H_{depth+1}` from its words, checking each relation
/// `φ(e·g_k) = φ(e)·φ(g_k)` as soon as both sides are defined, then
/// injectivity through the kernel. Leaves `image` unchanged on failure.
#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Group,
    gens: &[usize],
    gen_invs: &[usize],
    chain: &WordChain,
    depth: usize,
    start: usize,
    end: usize,
    images: &[usize],
    image: &mut [usize],
) -> bool {
    let entries = &chain.entries[start..end];
    for (i, &(e, parent, k)) in entries.iter().enumerate() {
        let v = g.mul(image[parent], images[k]);
        image[e] = v;
        let consistent = (0..=depth).all(|k| {
            let after = image[g.mul(e, gens[k])];
            let before = image[g.mul(e, gen_invs[k])];
            (after == usize::MAX || after == g.mul(v, images[k]))
                && (before == usize::MAX || v == g.mul(before, images[k]))
        });
        if !consistent {
            for &(f, _, _) in &entries[..=i] {
                image[f] = usize::MAX;
            }
            return false;
        }
    }
    // Old entries were checked against generators 0..depth-1 only.
    let old_ok = chain.entries[..start].iter().all(|&(e, _, _)| {
        let after = image[g.mul(e, gens[depth])];
        after != usize::MAX && after == g.mul(image[e], images[depth])
    });
    if old_ok && entries.iter().all(|&(e, _, _)| image[e] != 0) {
        return true;
    }
    for &(e, _, _) in entries {
        image[e] = usize::MAX;
    }
    false
}

/// All automorphisms of `g` as image arrays, in search order.
pub fn automorphisms_small(g: &Group, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_automorphism(g, limit, |phi| {
        out.push(phi.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// A generating set of `Aut(G)` built down the stabilizer chain of the
/// search generators `g_0, g_1, ...`: level `i` contributes automorphisms
/// fixing `g_0..g_{i-1}` that move `g_i` around its orbit. Levels run from
/// the deepest up so each orbit is known under the stabilizer found so far,
/// and a candidate outside the orbit rules out its whole orbit.
pub fn automorphism_generators(g: &Group, limit: usize) -> Result<Vec<Vec<usize>>> {
    Limits::guard("automorphism search order", g.order(), limit)?;
    let n = g.order();
    let gens = growth_generators(g);
    let chain = WordChain::new(g, &gens);
    let orders: Vec<usize> = (0..n).map(|x| g.order_of_element(x)).collect();
    let gen_invs: Vec<usize> = gens.iter().map(|&x| g.inv(x)).collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for level in (0..gens.len()).rev() {
        // 0 unknown, 1 in the orbit of g_level, 2 outside it
        let mut status = vec![0u8; n];
        mark_orbit(gens[level], &out, &mut status, 1);
        for cand in 0..n {
            if status[cand] != 0 || orders[cand] != orders[gens[level]] {
                continue;
            }
            let mut images = gens.clone();
            images[level] = cand;
            let mut image = vec![usize::MAX; n];
            image[0] = 0;
            let prefix_ok = (0..=level).all(|d| {
                let start = if d == 0 { 1 } else { chain.ends[d - 1] };
                extend(
                    g,
                    &gens,
                    &gen_invs,
                    &chain,
                    d,
                    start,
                    chain.ends[d],
                    &images,
                    &mut image,
                )
            });
            let mut found = None;
            if prefix_ok {
                let _ = search(
                    g,
                    &gens,
                    &gen_invs,
                    &chain,
                    &orders,
                    level + 1,
                    &mut images,
                    &mut image,
                    &mut |phi: &[usize]| {
                        found = Some(phi.to_vec());
                        ControlFlow::Break(())
                    },
                );
            }
            match found {
                Some(phi) => {
                    out.push(phi);
                    mark_orbit(gens[level], &out, &mut status, 1);
                }
                None => mark_orbit(cand, &out, &mut status, 2),
            }
        }
    }
    Ok(out)
}

fn mark_orbit(start: usize, perms: &[Vec<usize>], status: &mut [u8], mark: u8) {
    status[start] = mark;
    let mut queue = vec![start];
    while let Some(x) = queue.pop() {
        for p in perms {
            let y = p[x];
            if status[y] != mark {
                status[y] = mark;
                queue.push(y);
            }
        }
    }
}

impl Group {
    pub fn automorphisms_small(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        automorphisms_small(self, limit)
    }

    /// Tests `h` against a generating set of `Aut(G)`; `Unknown` above the
    /// order guard.
    pub fn is_characteristic(&self, h: &SubgroupSet, limit: usize) -> Characteristic {
        if h.is_trivial() || h.is_full() {
            return Characteristic::Yes;
        }
        let Ok(auts) = automorphism_generators(self, limit) else {
            return Characteristic::Unknown;
        };
        let gens = self.subgroup_generators(h);
        if auts
            .iter()
            .all(|phi| gens.iter().all(|&x| h.contains(phi[x])))
        {
            Characteristic::Yes
        } else {
            Characteristic::No
        }
    }
}
