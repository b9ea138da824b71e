use super::Group;
use crate::error::{Error, Result};
use crate::subset::SubgroupSet;

impl Group {
    /// `1 = Z₀ ≤ Z₁ ≤ ...` until the series stops growing.
    ///
    /// `Z_{i+1}` is the set of `g` with `[g, x] ∈ Z_i` for every generator `x`
    /// of the group, which is the preimage of the center of `G/Z_i`.
    pub fn upper_central_series(&self) -> Vec<SubgroupSet> {
        let gens = self.generators().to_vec();
        let mut series = vec![self.trivial_subgroup()];
        loop {
            let last = series.last().expect("series is nonempty");
            let n = self.order();
            let mut next = SubgroupSet::empty(n);
            for g in 0..n {
                if last.contains(g) || gens.iter().all(|&x| last.contains(self.commutator(g, x))) {
                    next.insert(g);
                }
            }
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series()
            .last()
            .is_some_and(|z| z.is_full())
    }

    /// `G/N` for a normal subgroup `N`, with cosets numbered by their
    /// smallest element. Returns the quotient and the map `G -> G/N`.
    pub fn quotient_map_small(&self, normal: &SubgroupSet) -> Result<(Group, Vec<usize>)> {
        if !self.is_subgroup(normal) || !self.is_normal(normal) {
            return Err(Error::NotASubgroup(
                "quotient needs a normal subgroup".into(),
            ));
        }
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset[g] == usize::MAX {
                let idx = reps.len();
                reps.push(g);
                for h in normal {
                    coset[self.mul(g, h)] = idx;
                }
            }
        }
        let q = reps.len();
        let quotient = Group::from_rule(q, |i, j| coset[self.mul(reps[i], reps[j])])?;
        Ok((quotient, coset))
    }
}
