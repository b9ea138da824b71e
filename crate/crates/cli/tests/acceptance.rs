//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any criterion fails or overruns its time budget.
//!
//! Every derived value is recomputed here by the table-only reference in
//! `support`, independently of the library's search code.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use cdlat_core::frobenius::regular_orbit_search;
use cdlat_core::harness::corpus::{
    by_name, complement_triples, full_corpus, index_p_instances, regular_orbit_instances,
    theorem3_instances,
};
use cdlat_core::harness::{
    verify_corollary2, verify_corollary4, verify_example_sec3, verify_prop5, verify_prop7,
    verify_properties, verify_theorem3, verify_theorem6_outcome, zm_triples, Factorization,
    VerificationOutcome,
};
use cdlat_core::{cd_lattice, Group, GroupSpec, Limits, Method, SubgroupSet};
use rayon::prelude::*;
use support::{mult_order, Elems, Naive};

type Outcome = Result<String, String>;

fn elems(h: &SubgroupSet) -> Elems {
    h.iter().collect()
}

fn naive(g: &Group) -> Naive {
    Naive::new(g.table())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(o: &VerificationOutcome) -> Result<(), String> {
    ensure(o.passed, || {
        format!(
            "{} on {} mismatched {:?}",
            o.claim_id,
            o.instance.name(),
            o.mismatches()
        )
    })
}

fn build(spec: &GroupSpec) -> Result<Group, String> {
    spec.build().map_err(|e| format!("{}: {e}", spec.name()))
}

fn zm_family() -> Outcome {
    let limits = Limits::default();
    let triples = zm_triples(200);
    triples.par_iter().try_for_each(|&(m, n, r)| {
        let o = verify_corollary4(m, n, r, &limits).map_err(|e| e.to_string())?;
        passed(&o)?;
        let g = build(&GroupSpec::zm(m, n, r))?;
        let nv = naive(&g);
        let d = mult_order(r, m) as usize;
        let a = g.named("a").unwrap_or(0);
        let b = g.named("b").unwrap_or(0);
        let b_d = (1..d).fold(b, |x, _| nv.t[x][b]);
        let (measure, members) = nv.cd();
        let (m, n, d) = (m as u128, n as u128, d as u128);
        ensure(measure == m * m * n * n / (d * d), || {
            format!("ZM({m},{n},{r}): m = {measure}")
        })?;
        ensure(members == [nv.closure(&[a, b_d])], || {
            format!("ZM({m},{n},{r}): CD is not <a, b^d>")
        })
    })?;
    Ok(format!("{} triples with mn <= 200", triples.len()))
}

fn coprime_semidirect() -> Outcome {
    let limits = Limits::default();
    let instances = theorem3_instances();
    let mut kinds = std::collections::BTreeMap::<String, (bool, bool)>::new();
    for (a, b, action) in &instances {
        let o = verify_theorem3(a, b, action, &limits).map_err(|e| e.to_string())?;
        passed(&o)?;
        let spec = GroupSpec::semidirect(a.clone(), b.clone(), action.clone());
        let g = build(&spec)?;
        let f = Factorization::of(&spec, &g).map_err(|e| e.to_string())?;
        let nv = naive(&g);
        let (n, c) = (elems(&f.normal), elems(&f.complement));
        let c_b: Elems = nv.centralizer(&n).intersection(&c).copied().collect();
        let entry = kinds.entry(a.name()).or_default();
        if c_b.len() == 1 {
            entry.0 = true;
        } else {
            entry.1 = true;
        }
        let gens: Vec<usize> = n.iter().chain(&c_b).copied().collect();
        let target = nv.closure(&gens);
        let side = (n.len() * c_b.len()) as u128;
        let (measure, members) = nv.cd();
        ensure(measure == side * side, || {
            format!("{}: m = {measure}", spec.name())
        })?;
        ensure(members == [target], || {
            format!("{}: CD is not A C_B(A)", spec.name())
        })?;
    }
    ensure(instances.len() >= 8, || {
        format!("only {} instances", instances.len())
    })?;
    for name in ["Z5", "Z7", "Z9", "Z3xZ3"] {
        ensure(kinds.get(name) == Some(&(true, true)), || {
            format!("{name} lacks a faithful or a non-faithful action")
        })?;
    }
    Ok(format!(
        "{} instances over Z5, Z7, Z9, Z3xZ3",
        instances.len()
    ))
}

fn frobenius_kernels() -> Outcome {
    let mut corpus: Vec<GroupSpec> = ["S3", "D5", "D7", "F21", "F20"]
        .iter()
        .map(|n| by_name(n).unwrap())
        .collect();
    corpus.push(GroupSpec::semidirect(
        GroupSpec::cyclic(11),
        GroupSpec::cyclic(5),
        vec![vec![3]],
    ));
    for spec in &corpus {
        passed(&verify_theorem6_outcome(spec, &Limits::default()).map_err(|e| e.to_string())?)?;
        let g = build(spec)?;
        let f = Factorization::of(spec, &g).map_err(|e| e.to_string())?;
        let nv = naive(&g);
        let (kernel, idx) = nv.restrict(&elems(&f.normal));
        let a = f.complement.order();
        let name = spec.name();
        let (_, g_members) = nv.cd();
        let (_, n_members) = kernel.cd();
        let lifted: Vec<Elems> = n_members
            .iter()
            .map(|h| h.iter().map(|&i| idx[i]).collect())
            .collect();
        ensure(g_members == lifted, || format!("{name}: CD(G) != CD(N)"))?;
        ensure(nv.center().len() == 1, || {
            format!("{name}: Z(G) is not trivial")
        })?;
        ensure(idx.len() % a == 1, || {
            format!("{name}: |N| is not 1 mod |A|")
        })?;
        ensure(kernel.center().len() % a == 1, || {
            format!("{name}: |Z(N)| is not 1 mod |A|")
        })?;
        ensure(kernel.is_nilpotent(), || {
            format!("{name}: N is not nilpotent")
        })?;
    }
    Ok(format!("{} Frobenius groups", corpus.len()))
}

fn complement_conditions() -> Outcome {
    let triples = complement_triples();
    let mut non_frobenius = 0;
    for (spec, frob) in &triples {
        passed(&verify_prop5(spec, *frob).map_err(|e| e.to_string())?)?;
        let g = build(spec)?;
        let f = Factorization::of(spec, &g).map_err(|e| e.to_string())?;
        let conds = naive(&g).frobenius_conditions(&elems(&f.normal), &elems(&f.complement));
        ensure(conds.iter().all(|&c| c == *frob), || {
            format!("{}: conditions {conds:?}, expected all {frob}", spec.name())
        })?;
        non_frobenius += usize::from(!frob);
    }
    let z6 = GroupSpec::semidirect(GroupSpec::cyclic(3), GroupSpec::cyclic(2), vec![vec![1]]);
    ensure(triples.iter().any(|(s, f)| *s == z6 && !f), || {
        "Z6 = Z3.Z2 missing".into()
    })?;
    Ok(format!(
        "{} triples, {non_frobenius} not Frobenius",
        triples.len()
    ))
}

fn regular_orbits() -> Outcome {
    let instances = regular_orbit_instances();
    ensure(instances.len() >= 10, || {
        format!("only {} instances", instances.len())
    })?;
    for spec in &instances {
        passed(&verify_corollary2(spec).map_err(|e| e.to_string())?)?;
        let g = build(spec)?;
        let f = Factorization::of(spec, &g).map_err(|e| e.to_string())?;
        let nv = naive(&g);
        let (n, a) = (elems(&f.normal), elems(&f.complement));
        let kernel = a
            .iter()
            .filter(|&&x| n.iter().all(|&y| nv.commute(x, y)))
            .count();
        ensure(kernel == 1, || {
            format!("{}: action not faithful", spec.name())
        })?;
        ensure(support::gcd(n.len(), a.len()) == 1, || {
            format!("{}: not coprime", spec.name())
        })?;
        let x = regular_orbit_search(&g, &f.complement, &f.normal)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{}: no regular orbit", spec.name()))?;
        let stabilizer = a.iter().filter(|&&y| nv.commute(x, y)).count();
        ensure(n.contains(&x) && stabilizer == 1, || {
            format!(
                "{}: element {x} has stabilizer of order {stabilizer}",
                spec.name()
            )
        })?;
    }
    Ok(format!("{} faithful coprime actions", instances.len()))
}

fn index_p() -> Outcome {
    let limits = Limits::default();
    let recipes = index_p_instances();
    let recipe = |spec: &GroupSpec| {
        recipes
            .iter()
            .find(|(s, _)| s == spec)
            .map(|(_, r)| r.clone())
            .ok_or_else(|| format!("{} not in corpus", spec.name()))
    };
    let mut lines = Vec::new();
    for (spec, p, expect_single) in [
        (GroupSpec::dihedral(16), 2, true),
        (GroupSpec::dihedral(8), 2, false),
        (GroupSpec::HeisenbergGf { p: 3 }, 3, true),
    ] {
        let r = recipe(&spec)?;
        passed(&verify_prop7(&spec, &r, &limits).map_err(|e| e.to_string())?)?;
        let g = build(&spec)?;
        let a = elems(&r.resolve(&g).map_err(|e| e.to_string())?);
        let nv = naive(&g);
        ensure(a.len() * p == nv.n, || {
            format!("{}: A is not of index p", spec.name())
        })?;
        let center_index = nv.n / nv.center().len();
        ensure((center_index > p * p) == expect_single, || {
            format!("{}: |P:Z| = {center_index}", spec.name())
        })?;
        let (_, members) = nv.cd();
        ensure((members == [a.clone()]) == expect_single, || {
            format!("{}: CD(P) = {{A}} is {}", spec.name(), !expect_single)
        })?;
        lines.push(format!("{} |P:Z|={center_index}", spec.name()));
    }
    Ok(lines.join(", "))
}

fn stretch_example() -> Outcome {
    let o = verify_example_sec3(&Limits::default()).map_err(|e| e.to_string())?;
    passed(&o)?;
    use cdlat_core::harness::Fact::Integer;
    for (key, value) in [
        ("p_order", 16807),
        ("p_center_order", 49),
        ("g_order", 50421),
        ("centralizer_of_a_order", 2401),
        ("m_g", 5_764_801),
    ] {
        ensure(o.actual.get(key) == Some(&Integer(value)), || {
            format!("{key} = {:?}", o.actual.get(key))
        })?;
    }
    Ok("order 50421, CD(G) = {A}, m(G) = 5764801".into())
}

fn corpus_up_to_200() -> Result<Vec<(GroupSpec, Group)>, String> {
    full_corpus()
        .into_iter()
        .map(|s| build(&s).map(|g| (s, g)))
        .filter(|r| r.as_ref().map_or(true, |(_, g)| g.order() <= 200))
        .collect()
}

fn method_equivalence() -> Outcome {
    let limits = Limits::default();
    let corpus = corpus_up_to_200()?;
    corpus.par_iter().try_for_each(|(spec, g)| {
        let name = spec.name();
        let fast = cd_lattice(g, Method::ClosureFamily, &limits).map_err(|e| e.to_string())?;
        let oracle = cd_lattice(g, Method::BruteForce, &limits).map_err(|e| e.to_string())?;
        let (measure, members) = naive(g).cd();
        let as_elems = |hs: &[SubgroupSet]| hs.iter().map(elems).collect::<Vec<_>>();
        ensure(
            fast.max_measure == measure && oracle.max_measure == measure,
            || {
                format!(
                    "{name}: m = {} / {} / {measure}",
                    fast.max_measure, oracle.max_measure
                )
            },
        )?;
        let mut sorted = members.clone();
        sorted.sort();
        let mut f = as_elems(&fast.members);
        f.sort();
        let mut o = as_elems(&oracle.members);
        o.sort();
        ensure(f == sorted && o == sorted, || {
            format!("{name}: member sets differ")
        })
    })?;
    Ok(format!("{} groups of order <= 200", corpus.len()))
}

/// Lattice laws checked directly on the member sets.
fn naive_properties(nv: &Naive, members: &[Elems]) -> Result<(), String> {
    let contains = |h: &Elems| members.contains(h);
    let join = |h: &Elems, k: &Elems| {
        let gens: Vec<usize> = h.iter().chain(k).copied().collect();
        nv.closure(&gens)
    };
    let meet = |h: &Elems, k: &Elems| h.intersection(k).copied().collect::<Elems>();
    for h in members {
        for k in members {
            ensure(contains(&join(h, k)) && contains(&meet(h, k)), || {
                "not a sublattice".into()
            })?;
        }
        let c = nv.centralizer(h);
        ensure(contains(&c) && nv.centralizer(&c) == *h, || {
            "duality fails".into()
        })?;
        for k in members {
            if h.is_subset(k) && !nv.centralizer(k).is_subset(&c) {
                return Err("duality is not inclusion reversing".into());
            }
        }
    }
    for x in members {
        for y in members {
            for z in members {
                if x.is_subset(z) && join(x, &meet(y, z)) != meet(&join(x, y), z) {
                    return Err("modular law fails".into());
                }
            }
        }
    }
    let bottom = members.iter().min_by_key(|h| h.len()).unwrap();
    ensure(members.iter().all(|h| bottom.is_subset(h)), || {
        "no minimum member".into()
    })?;
    ensure(
        bottom
            .iter()
            .all(|&x| bottom.iter().all(|&y| nv.commute(x, y))),
        || "M(G) is not abelian".into(),
    )?;
    ensure(nv.center().is_subset(bottom), || "M(G) misses Z(G)".into())
}

fn property_suite() -> Outcome {
    let limits = Limits::default();
    let corpus = corpus_up_to_200()?;
    corpus.par_iter().try_for_each(|(spec, g)| {
        passed(&verify_properties(spec, &limits).map_err(|e| e.to_string())?)?;
        let nv = naive(g);
        let (_, members) = nv.cd();
        naive_properties(&nv, &members).map_err(|e| format!("{}: {e}", spec.name()))
    })?;
    Ok(format!("{} lattices", corpus.len()))
}

fn determinism() -> Outcome {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_cdlat"))
            .args(["--threads", threads, "verify"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("verify at {threads} threads exited with {}", out.status)
        })?;
        Ok::<_, String>(out.stdout)
    };
    let one = run("1")?;
    let eight = run("8")?;
    ensure(!one.is_empty(), || "empty output".into())?;
    ensure(one == eight, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", one.len()))
}

struct Criterion {
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            title: "ZM family formula",
            budget: secs(30),
            run: zm_family,
        },
        Criterion {
            title: "coprime abelian semidirect products",
            budget: secs(30),
            run: coprime_semidirect,
        },
        Criterion {
            title: "Frobenius groups share the kernel's lattice",
            budget: secs(10),
            run: frobenius_kernels,
        },
        Criterion {
            title: "complement conditions agree",
            budget: secs(5),
            run: complement_conditions,
        },
        Criterion {
            title: "regular orbits",
            budget: secs(5),
            run: regular_orbits,
        },
        Criterion {
            title: "abelian subgroups of index p",
            budget: secs(60),
            run: index_p,
        },
        Criterion {
            title: "order 50421 Frobenius group",
            budget: secs(1800),
            run: stretch_example,
        },
        Criterion {
            title: "closure family agrees with the oracle",
            budget: secs(120),
            run: method_equivalence,
        },
        Criterion {
            title: "lattice properties",
            budget: secs(60),
            run: property_suite,
        },
        Criterion {
            title: "thread-count determinism",
            budget: secs(600),
            run: determinism,
        },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = started.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > c.budget {
                Err(format!("{detail}; over the {:?} budget", c.budget))
            } else {
                Ok(detail)
            }
        });
        let (tag, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!(
            "[{tag}] {:>2} {}: {detail} ({:.1} s)",
            i + 1,
            c.title,
            elapsed.as_secs_f64()
        );
    }
    if failures > 0 {
        println!("{failures} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
