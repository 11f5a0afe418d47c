//! Test-only oracles. Nothing here calls into the routines it is used to
//! check: group arithmetic is redone on raw coordinate vectors, subgroups are
//! sets of coordinate vectors closed by naive saturation.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use amalgam_bases::{FinAbGroup, GroupElement, Homomorphism, PointedGroup, Span};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Coords = Vec<u64>;
pub type ElementSet = BTreeSet<Coords>;

pub fn grp(m: &[u64]) -> FinAbGroup {
    FinAbGroup::new(m.to_vec()).unwrap()
}

pub fn el(g: &FinAbGroup, c: &[i64]) -> GroupElement {
    g.element(c).unwrap()
}

pub fn pointed(m: &[u64], c: &[i64]) -> PointedGroup {
    let g = grp(m);
    let x = el(&g, c);
    PointedGroup::new(g, x).unwrap()
}

pub fn naive_add(moduli: &[u64], a: &[u64], b: &[u64]) -> Coords {
    a.iter()
        .zip(b)
        .zip(moduli)
        .map(|((x, y), m)| (x + y) % m)
        .collect()
}

pub fn naive_elements(moduli: &[u64]) -> Vec<Coords> {
    let mut out = vec![vec![]];
    for &m in moduli {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Closure of a set of elements under addition (finite groups need no
/// negation: every element has finite order).
pub fn naive_closure(moduli: &[u64], gens: &[Coords]) -> ElementSet {
    let zero = vec![0; moduli.len()];
    let mut set: ElementSet = BTreeSet::from([zero]);
    let mut frontier: Vec<Coords> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = naive_add(moduli, &x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn naive_order(moduli: &[u64], x: &[u64]) -> u64 {
    let zero = vec![0; moduli.len()];
    let mut acc = x.to_vec();
    let mut n = 1;
    while acc != zero {
        acc = naive_add(moduli, &acc, x);
        n += 1;
    }
    n
}

/// Every subgroup, found as the closures of all subsets of size at most two,
/// then saturated under pairwise sums until nothing new appears.
pub fn subset_closure_subgroups(moduli: &[u64]) -> HashSet<ElementSet> {
    let elems = naive_elements(moduli);
    let mut found: HashSet<ElementSet> = HashSet::new();
    for (i, a) in elems.iter().enumerate() {
        found.insert(naive_closure(moduli, std::slice::from_ref(a)));
        for b in &elems[i + 1..] {
            found.insert(naive_closure(moduli, &[a.clone(), b.clone()]));
        }
    }
    loop {
        let list: Vec<ElementSet> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let mut sum = ElementSet::new();
                for x in a {
                    for y in b {
                        sum.insert(naive_add(moduli, x, y));
                    }
                }
                if found.insert(sum) {
                    grew = true;
                }
            }
        }
        if !grew {
            return found;
        }
    }
}

pub fn as_set<'a>(elems: impl Iterator<Item = GroupElement> + 'a) -> ElementSet {
    elems.map(|e| e.coords().to_vec()).collect()
}

pub fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

/// Number of partitions of `n`, by the standard recurrence on largest part.
pub fn partition_count(n: u32) -> u64 {
    fn p(n: u32, max: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|k| p(n - k, k)).sum()
    }
    p(n, n)
}

/// All groups `Z/m₁ × … × Z/m_r` (moduli from 2..=8, rank ≤ 3) of order at
/// most `max_order`, in many non-canonical factorizations.
pub fn factored_groups(max_order: u64) -> Vec<FinAbGroup> {
    let mut out = Vec::new();
    fn go(prefix: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<FinAbGroup>) {
        if !prefix.is_empty() {
            out.push(FinAbGroup::new(prefix.clone()).unwrap());
        }
        if prefix.len() == 3 {
            return;
        }
        for m in 2..=8u64 {
            if order * m <= max {
                prefix.push(m);
                go(prefix, order * m, max, out);
                prefix.pop();
            }
        }
    }
    go(&mut Vec::new(), 1, max_order, &mut out);
    out
}

pub fn random_group<R: Rng>(rng: &mut R, max_order: u64) -> FinAbGroup {
    loop {
        let rank = rng.gen_range(1..=3);
        let moduli: Vec<u64> = (0..rank).map(|_| rng.gen_range(2..=8)).collect();
        if moduli.iter().product::<u64>() <= max_order {
            return FinAbGroup::new(moduli).unwrap();
        }
    }
}

pub fn random_element<R: Rng>(rng: &mut R, g: &FinAbGroup) -> GroupElement {
    let c: Vec<i64> = g
        .moduli()
        .iter()
        .map(|&m| rng.gen_range(0..m) as i64)
        .collect();
    g.element(&c).unwrap()
}

/// A uniformly random homomorphism: each generator goes to a random element
/// killed by its modulus.
pub fn random_hom<R: Rng>(rng: &mut R, dom: &FinAbGroup, cod: &FinAbGroup) -> Homomorphism {
    let all = naive_elements(cod.moduli());
    let images = dom
        .moduli()
        .iter()
        .map(|&m| {
            let torsion: Vec<&Coords> = all
                .iter()
                .filter(|y| y.iter().zip(cod.moduli()).all(|(&c, &q)| (c * m) % q == 0))
                .collect();
            cod.element_exact(torsion.choose(rng).unwrap()).unwrap()
        })
        .collect();
    Homomorphism::new(dom.clone(), cod.clone(), images).unwrap()
}

/// A random span with source, left and right targets of order ≤ `max_order`
/// and both points nonzero.
pub fn random_span<R: Rng>(rng: &mut R, max_order: u64) -> Span {
    loop {
        let g = random_group(rng, max_order);
        let x = random_element(rng, &g);
        if x.is_zero() {
            continue;
        }
        let source = PointedGroup::new(g.clone(), x).unwrap();
        let k = random_group(rng, max_order);
        let l = random_group(rng, max_order);
        let f = random_hom(rng, &g, &k);
        let h = random_hom(rng, &g, &l);
        if let Ok(span) = Span::from_legs(source, f, h) {
            return span;
        }
    }
}
