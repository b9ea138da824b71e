//! Reference computations that use nothing but the raw Cayley table.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub type Elems = BTreeSet<usize>;

pub struct Naive {
    pub n: usize,
    pub t: Vec<Vec<usize>>,
}

impl Naive {
    pub fn new(table: Vec<Vec<usize>>) -> Self {
        Self {
            n: table.len(),
            t: table,
        }
    }

    /// Restriction of the table to a subgroup, renumbered in ascending order.
    pub fn restrict(&self, h: &Elems) -> (Naive, Vec<usize>) {
        let elems: Vec<usize> = h.iter().copied().collect();
        let pos = |x: usize| elems.binary_search(&x).unwrap();
        let t = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.t[a][b])).collect())
            .collect();
        (Naive::new(t), elems)
    }

    pub fn closure(&self, gens: &[usize]) -> Elems {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.t[x][s];
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.n).filter(|&i| seen[i]).collect()
    }

    pub fn order_of(&self, x: usize) -> usize {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.t[y][x];
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.t[a][b] == self.t[b][a]
    }

    pub fn centralizer(&self, h: &Elems) -> Elems {
        (0..self.n)
            .filter(|&g| h.iter().all(|&x| self.commute(g, x)))
            .collect()
    }

    pub fn center(&self) -> Elems {
        self.centralizer(&(0..self.n).collect())
    }

    /// Every subgroup: start from the cyclic ones and join with cyclic
    /// subgroups until nothing new appears.
    pub fn subgroups(&self) -> Vec<Elems> {
        let cyclic: Vec<(usize, Elems)> = {
            let mut seen = HashSet::new();
            (0..self.n)
                .map(|x| (x, self.closure(&[x])))
                .filter(|(_, c)| seen.insert(c.clone()))
                .collect()
        };
        let mut all: HashSet<Elems> = cyclic.iter().map(|(_, c)| c.clone()).collect();
        let mut frontier: Vec<(Elems, Vec<usize>)> =
            cyclic.iter().map(|(x, c)| (c.clone(), vec![*x])).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (h, gens) in &frontier {
                for (x, _) in &cyclic {
                    if h.contains(x) {
                        continue;
                    }
                    let mut g2 = gens.clone();
                    g2.push(*x);
                    let j = self.closure(&g2);
                    if all.insert(j.clone()) {
                        next.push((j, g2));
                    }
                }
            }
            frontier = next;
        }
        let mut v: Vec<Elems> = all.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    /// `(m(G), CD(G))` by maximizing over every subgroup.
    pub fn cd(&self) -> (u128, Vec<Elems>) {
        let subs = self.subgroups();
        let measures: Vec<u128> = subs
            .iter()
            .map(|h| h.len() as u128 * self.centralizer(h).len() as u128)
            .collect();
        let m = *measures.iter().max().unwrap();
        let members = subs
            .into_iter()
            .zip(measures)
            .filter(|(_, v)| *v == m)
            .map(|(h, _)| h)
            .collect();
        (m, members)
    }

    pub fn is_normal(&self, h: &Elems) -> bool {
        (0..self.n).all(|g| {
            let gi = (0..self.n).find(|&y| self.t[g][y] == 0).unwrap();
            h.iter().all(|&x| h.contains(&self.t[self.t[gi][x]][g]))
        })
    }

    /// Nilpotent iff elements of coprime orders commute.
    pub fn is_nilpotent(&self) -> bool {
        let orders: Vec<usize> = (0..self.n).map(|x| self.order_of(x)).collect();
        (0..self.n)
            .all(|a| (0..self.n).all(|b| gcd(orders[a], orders[b]) != 1 || self.commute(a, b)))
    }

    /// The four complement conditions, each from its definition.
    pub fn frobenius_conditions(&self, n: &Elems, a: &Elems) -> [bool; 4] {
        let inv = |g: usize| (0..self.n).find(|&y| self.t[g][y] == 0).unwrap();
        let conj = |x: usize, g: usize| self.t[self.t[inv(g)][x]][g];
        let c1 = a
            .iter()
            .filter(|&&x| x != 0)
            .all(|&x| n.iter().filter(|&&y| y != 0).all(|&y| conj(y, x) != y));
        let c2 = (0..self.n).filter(|g| !a.contains(g)).all(|g| {
            a.iter()
                .filter(|&&x| x != 0)
                .all(|&x| !a.contains(&conj(x, g)))
        });
        let c3 = a
            .iter()
            .filter(|&&x| x != 0)
            .all(|&x| self.centralizer(&[x].into()).is_subset(a));
        let c4 = n
            .iter()
            .filter(|&&x| x != 0)
            .all(|&x| self.centralizer(&[x].into()).is_subset(n));
        [c1, c2, c3, c4]
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn mult_order(r: u64, m: u64) -> u64 {
    let mut k = 1;
    let mut x = r % m;
    while x != 1 % m {
        x = x * r % m;
        k += 1;
    }
    k
}
