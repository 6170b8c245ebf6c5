//! Squarefree monomial ideals.
//!
//! A squarefree monomial is identified with its support, a set of variable
//! indices. A monomial prime is generated by a set of variables, and contains
//! a squarefree ideal iff it meets every generator's support.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    num_vars: usize,
    generators: Vec<Vec<usize>>,
}

/// The prime generated by a set of variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    num_vars: usize,
    vars: Vec<usize>,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn meets(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn normalize(set: impl IntoIterator<Item = usize>, num_vars: usize) -> Result<Vec<usize>> {
    let s: BTreeSet<usize> = set.into_iter().collect();
    if let Some(&v) = s.iter().next_back() {
        if v >= num_vars {
            return Err(Error::IndexOutOfRange {
                index: v,
                range: "variable",
            });
        }
    }
    Ok(s.into_iter().collect())
}

/// Inclusion-minimal antichain of the given supports.
pub fn minimalize(num_vars: usize, gens: impl IntoIterator<Item = Vec<usize>>) -> Result<SquarefreeIdeal> {
    let mut sets: Vec<Vec<usize>> = gens
        .into_iter()
        .map(|g| normalize(g, num_vars))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter()
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| is_subset(k, &s)) {
            kept.push(s);
        }
    }
    kept.sort();
    Ok(SquarefreeIdeal {
        num_vars,
        generators: kept,
    })
}

impl SquarefreeIdeal {
    pub fn new(num_vars: usize, gens: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        minimalize(num_vars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Vec::is_empty)
    }

    /// Whether the squarefree monomial with the given support lies in the ideal.
    pub fn contains_monomial(&self, support: &[usize]) -> bool {
        let s: Vec<usize> = support.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        self.generators.iter().any(|g| is_subset(g, &s))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(IdealJson {
            num_vars: self.num_vars,
            generators: self.generators.clone(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: IdealJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(j.num_vars, j.generators)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    #[serde(rename = "numVars")]
    num_vars: usize,
    generators: Vec<Vec<usize>>,
}

impl MonomialPrime {
    pub fn new(num_vars: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        Ok(MonomialPrime {
            num_vars,
            vars: normalize(vars, num_vars)?,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.vars.binary_search(&v).is_ok()
    }

    /// Variables not in the prime.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.num_vars).filter(|v| !self.contains_var(*v)).collect()
    }
}

/// All minimal primes, i.e. the inclusion-minimal hitting sets of the
/// generator supports, sorted lexicographically.
pub fn minimal_primes(ideal: &SquarefreeIdeal) -> Vec<MonomialPrime> {
    if ideal.is_unit() {
        return Vec::new();
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    hitting_sets(&ideal.generators, &mut chosen, &mut found);
    found
        .into_iter()
        .map(|vars| MonomialPrime {
            num_vars: ideal.num_vars,
            vars,
        })
        .collect()
}

fn every_choice_private(gens: &[Vec<usize>], chosen: &[usize]) -> bool {
    // each chosen variable must be the only chosen one in some generator
    chosen.iter().all(|&v| {
        gens.iter().any(|g| {
            g.binary_search(&v).is_ok() && chosen.iter().all(|&w| w == v || g.binary_search(&w).is_err())
        })
    })
}

fn hitting_sets(gens: &[Vec<usize>], chosen: &mut Vec<usize>, found: &mut BTreeSet<Vec<usize>>) {
    // adding variables only removes private generators, so prune early
    if !every_choice_private(gens, chosen) {
        return;
    }
    let unhit = gens.iter().find(|g| !g.iter().any(|v| chosen.contains(v)));
    match unhit {
        None => {
            let mut s = chosen.clone();
            s.sort_unstable();
            found.insert(s);
        }
        Some(g) => {
            for &v in g {
                chosen.push(v);
                hitting_sets(gens, chosen, found);
                chosen.pop();
            }
        }
    }
}

/// True iff `p` contains every generator of `ideal`.
pub fn contains_ideal(p: &MonomialPrime, ideal: &SquarefreeIdeal) -> Result<bool> {
    if p.num_vars != ideal.num_vars {
        return Err(Error::DimensionMismatch {
            expected: ideal.num_vars,
            found: p.num_vars,
        });
    }
    Ok(ideal.generators.iter().all(|g| meets(g, &p.vars)))
}

/// The prime generated by the union of both variable sets.
pub fn sum_prime(p: &MonomialPrime, q: &MonomialPrime) -> Result<MonomialPrime> {
    if p.num_vars != q.num_vars {
        return Err(Error::DimensionMismatch {
            expected: p.num_vars,
            found: q.num_vars,
        });
    }
    MonomialPrime::new(p.num_vars, p.vars.iter().chain(&q.vars).copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&[usize]]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(n, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn prime(n: usize, vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(n, vars.iter().copied()).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[0], &[0, 1]]).generators(), &[vec![0]]);
        assert!(ideal(3, &[]).is_zero());
        assert!(SquarefreeIdeal::new(2, vec![vec![2]]).is_err());
    }

    #[test]
    fn minimal_prime_examples() {
        let ps = minimal_primes(&ideal(4, &[&[0, 1], &[2, 3]]));
        let vars: Vec<&[usize]> = ps.iter().map(|p| p.vars()).collect();
        assert_eq!(vars, vec![&[0, 2][..], &[0, 3], &[1, 2], &[1, 3]]);
        let ps = minimal_primes(&ideal(1, &[&[0]]));
        assert_eq!(ps, vec![prime(1, &[0])]);
        assert_eq!(minimal_primes(&ideal(2, &[])), vec![prime(2, &[])]);
        assert!(minimal_primes(&ideal(2, &[&[]])).is_empty());
    }

    #[test]
    fn disjoint_pairs_give_power_of_two() {
        let gens: Vec<Vec<usize>> = (0..9).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let ps = minimal_primes(&SquarefreeIdeal::new(18, gens).unwrap());
        assert_eq!(ps.len(), 512);
        assert!(ps.iter().all(|p| p.vars().len() == 9));
    }

    #[test]
    fn containment_and_sums() {
        let i = ideal(3, &[&[0, 1], &[2]]);
        assert!(contains_ideal(&prime(3, &[0, 1, 2]), &i).unwrap());
        assert!(!contains_ideal(&prime(3, &[]), &i).unwrap());
        assert!(contains_ideal(&prime(3, &[1, 2]), &i).unwrap());
        assert!(contains_ideal(&prime(4, &[0]), &i).is_err());
        let s = sum_prime(&prime(3, &[0, 1]), &prime(3, &[1, 2])).unwrap();
        assert_eq!(s.vars(), &[0, 1, 2]);
        let p = prime(3, &[1]);
        assert_eq!(sum_prime(&p, &p).unwrap(), p);
    }

    #[test]
    fn json_roundtrip() {
        let i = ideal(5, &[&[0, 3], &[1, 2, 4]]);
        let v = i.to_json();
        assert_eq!(v["numVars"], 5);
        assert_eq!(SquarefreeIdeal::from_json(&v).unwrap(), i);
    }

    fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
        (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
    }

    /// Monomials as exponent vectors of total degree at most `d`.
    fn monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![0; n]];
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &out {
                for i in 0..n {
                    let mut e = m.clone();
                    e[i] += 1;
                    next.push(e);
                }
            }
            out.extend(next);
            out.sort();
            out.dedup();
        }
        out
    }

    fn divides_support(gen: &[usize], exps: &[usize]) -> bool {
        gen.iter().all(|&v| exps[v] > 0)
    }

    fn small_ideal(max_vars: usize, max_gen: usize) -> impl Strategy<Value = SquarefreeIdeal> {
        (2usize..=max_vars).prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::btree_set(0..n, 1..=max_gen), 0..7).prop_map(move |gs| {
                SquarefreeIdeal::new(n, gs.into_iter().map(|s| s.into_iter().collect())).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn containment_matches_divisibility(i in small_ideal(7, 3)) {
            let n = i.num_vars();
            let mons = monomials(n, 3);
            for vars in all_subsets(n) {
                let p = MonomialPrime::new(n, vars.clone()).unwrap();
                // every monomial of I of degree <= 3 is divisible by a variable of P
                let brute = mons.iter().all(|m| {
                    !i.generators().iter().any(|g| divides_support(g, m))
                        || vars.iter().any(|&v| m[v] > 0)
                });
                prop_assert_eq!(contains_ideal(&p, &i).unwrap(), brute);
            }
        }

        #[test]
        fn minimal_primes_are_exactly_minimal_hitting_sets(i in small_ideal(12, 4)) {
            let n = i.num_vars();
            let ps = minimal_primes(&i);
            for (a, b) in ps.iter().zip(ps.iter().skip(1)) {
                prop_assert!(a < b);
            }
            for a in &ps {
                for b in &ps {
                    prop_assert!(a == b || !is_subset(a.vars(), b.vars()));
                }
            }
            for vars in all_subsets(n) {
                let p = MonomialPrime::new(n, vars.clone()).unwrap();
                let hits = contains_ideal(&p, &i).unwrap();
                let above = ps.iter().any(|q| is_subset(q.vars(), &vars));
                prop_assert_eq!(hits, above);
            }
        }

        #[test]
        fn disjoint_blocks_count(k in 1usize..=4, d in 1usize..=3) {
            let gens: Vec<Vec<usize>> = (0..k).map(|b| (b * d..(b + 1) * d).collect()).collect();
            let i = SquarefreeIdeal::new(k * d, gens).unwrap();
            prop_assert_eq!(minimal_primes(&i).len(), d.pow(k as u32));
        }
    }
}
