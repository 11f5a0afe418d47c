//! Subgroups of finite abelian groups: generation, enumeration, sums and
//! membership.
//!
//! A [`Subgroup`] carries its full element set as a sorted list of element
//! indices. Since indices are mixed-radix with the first coordinate most
//! significant, that list is also the lexicographically sorted element list,
//! and it is the canonical identity used for equality and deduplication.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::group::{check_bound, FinAbGroup, GroupElement};

/// Default cap on the group order for exhaustive enumeration.
pub const DEFAULT_BOUND: u64 = 256;

#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: FinAbGroup,
    generators: Vec<GroupElement>,
    members: Vec<u64>,
}

impl Subgroup {
    /// The trivial subgroup `{0}`.
    pub fn trivial(parent: FinAbGroup) -> Self {
        Subgroup {
            parent,
            generators: Vec::new(),
            members: vec![0],
        }
    }

    /// Builds a subgroup from a sorted, closed set of element indices,
    /// choosing generators greedily in index order.
    pub(crate) fn from_members(parent: FinAbGroup, members: Vec<u64>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut span = Subgroup::trivial(parent);
        for &m in &members {
            if !span.contains_index(m) {
                span = span.extended(m);
            }
        }
        debug_assert_eq!(span.members, members, "member set is not a subgroup");
        span
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.parent
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.members.iter().map(|&i| self.parent.element_at(i))
    }

    pub(crate) fn indices(&self) -> &[u64] {
        &self.members
    }

    #[inline]
    pub(crate) fn contains_index(&self, i: u64) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool> {
        self.parent.check(x)?;
        Ok(self.contains_index(self.parent.index_of(x)))
    }

    pub fn is_proper(&self) -> bool {
        self.order() < self.parent.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// `true` when every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.members.iter().all(|&i| other.contains_index(i))
    }

    /// `self + ⟨x⟩`, built coset by coset: `S ∪ (S + x) ∪ (S + 2x) ∪ …`
    /// until a multiple of `x` falls back into `S`.
    fn extended(&self, x: u64) -> Subgroup {
        let mut members = self.members.clone();
        let mut shift = x;
        while !self.contains_index(shift) {
            members.extend(
                self.members
                    .iter()
                    .map(|&s| self.parent.add_index(s, shift)),
            );
            shift = self.parent.add_index(shift, x);
        }
        members.sort_unstable();
        let mut generators = self.generators.clone();
        generators.push(self.parent.element_at(x));
        Subgroup {
            parent: self.parent.clone(),
            generators,
            members,
        }
    }

    fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch {
                left: self.parent.to_string(),
                right: other.parent.to_string(),
            });
        }
        Ok(())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Smaller subgroups first, ties broken by the sorted element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parent
            .cmp(&other.parent)
            .then(self.members.len().cmp(&other.members.len()))
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Display for Subgroup {
    /// `<x, y, …>` over the stored generators; `<0>` for the trivial subgroup.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "<0>");
        }
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// The subgroup of `group` generated by `gens`.
pub fn generate(group: &FinAbGroup, gens: &[GroupElement]) -> Result<Subgroup> {
    let mut span = Subgroup::trivial(group.clone());
    for x in gens {
        group.check(x)?;
        let i = group.index_of(x);
        if !span.contains_index(i) {
            span = span.extended(i);
        }
    }
    Ok(span)
}

/// Every subgroup of `group`, each exactly once, sorted by order and then by
/// element list.
///
/// Starts from `{0}` and repeatedly extends each subgroup found by one
/// element outside it. Refuses groups larger than `bound`.
pub fn all_subgroups(group: &FinAbGroup, bound: u64) -> Result<Vec<Subgroup>> {
    check_bound(group, bound)?;
    let n = group.order();
    let trivial = Subgroup::trivial(group.clone());
    let mut seen: HashSet<Vec<u64>> = HashSet::from([trivial.members.clone()]);
    let mut found = vec![trivial.clone()];
    let mut queue = VecDeque::from([trivial]);
    let mut covered = vec![false; n as usize];
    while let Some(s) = queue.pop_front() {
        covered.iter_mut().for_each(|c| *c = false);
        for &m in &s.members {
            covered[m as usize] = true;
        }
        for x in 0..n {
            if covered[x as usize] {
                continue;
            }
            // every element of x + S extends S to the same subgroup
            for &m in &s.members {
                covered[group.add_index(m, x) as usize] = true;
            }
            let t = s.extended(x);
            if seen.insert(t.members.clone()) {
                found.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// `H + K = {h + k}`.
pub fn subgroup_sum(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.same_parent(k)?;
    let mut span = h.clone();
    for x in k.generators() {
        let i = h.parent.index_of(x);
        if !span.contains_index(i) {
            span = span.extended(i);
        }
    }
    Ok(span)
}

/// Intersection `H ∩ K`.
pub fn subgroup_intersection(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.same_parent(k)?;
    let members = h
        .members
        .iter()
        .copied()
        .filter(|&i| k.contains_index(i))
        .collect();
    Ok(Subgroup::from_members(h.parent.clone(), members))
}
