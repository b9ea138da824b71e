use cdlat_core::constructors::{dihedral, quaternion8, symmetric, zm_group};
use cdlat_core::harness::{verify_corollary4, zm_triples};
use cdlat_core::{all_subgroups, cd_lattice, Group, Limits, Method};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

fn groups() -> Vec<Group> {
    vec![
        symmetric(4).unwrap(),
        dihedral(16).unwrap(),
        quaternion8().unwrap(),
        zm_group(7, 6, 3).unwrap(),
        zm_group(5, 4, 2).unwrap(),
    ]
}

fn relabel(g: &Group, perm: &[usize]) -> Group {
    let n = g.order();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a]][perm[b]] = perm[g.mul(a, b)];
        }
    }
    Group::from_cayley_table(&table).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lattice_survives_relabeling(index in 0usize..5, seed in any::<u64>()) {
        let g = &groups()[index];
        let n = g.order();
        // a permutation of 0..n fixing the identity, driven by the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for i in (2..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(i, 1 + (s as usize) % i);
        }
        let h = relabel(g, &perm);
        let limits = Limits::default();
        let before = cd_lattice(g, Method::ClosureFamily, &limits).unwrap();
        let after = cd_lattice(&h, Method::ClosureFamily, &limits).unwrap();
        prop_assert_eq!(before.max_measure, after.max_measure);
        let mut moved: Vec<Vec<usize>> = before
            .members
            .iter()
            .map(|m| {
                let mut v: Vec<usize> = m.iter().map(|x| perm[x]).collect();
                v.sort();
                v
            })
            .collect();
        let mut got: Vec<Vec<usize>> = after.members.iter().map(|m| m.to_vec()).collect();
        moved.sort();
        got.sort();
        prop_assert_eq!(moved, got);
    }

    #[test]
    fn closure_is_the_smallest_subgroup(
        index in 0usize..5,
        picks in subsequence((1usize..24).collect::<Vec<_>>(), 0..4),
    ) {
        let g = &groups()[index];
        let gens: Vec<usize> = picks.into_iter().filter(|&x| x < g.order()).collect();
        let c = g.closure(gens.iter().copied());
        prop_assert!(g.is_subgroup(&c));
        let inv = all_subgroups(g, &Limits::default()).unwrap();
        let smallest = inv
            .iter()
            .filter(|h| gens.iter().all(|&x| h.contains(x)))
            .fold(g.whole(), |acc, h| acc.intersection(h));
        prop_assert_eq!(c, smallest);
    }

    #[test]
    fn zm_formula_holds(triple in select(zm_triples(200))) {
        let (m, n, r) = triple;
        let o = verify_corollary4(m, n, r, &Limits::default()).unwrap();
        prop_assert!(o.passed, "ZM({},{},{}): {:?}", m, n, r, o.mismatches());
    }
}
