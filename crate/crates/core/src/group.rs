//! Finite abelian groups `Z/m₁ × … × Z/m_r`, their elements, and pointed groups.
//!
//! Groups keep the factorization the caller wrote down. The canonical
//! invariant-factor form is available through
//! [`FinAbGroup::canonical_invariant_factors`] but is never applied silently,
//! so elements and witnesses stay in the caller's coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, IntMatrix};
use crate::subgroups::Subgroup;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// An element of a finite abelian group, as a tuple of reduced residues.
///
/// Elements are ordered lexicographically by coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }
}

impl fmt::Display for GroupElement {
    /// `(a1,a2,...)`, or the bare residue for rank-one groups.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A finite abelian group given as a direct product of cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinAbGroup {
    moduli: Vec<u64>,
    order: u64,
}

impl FinAbGroup {
    /// `Z/m₁ × … × Z/m_r`. Every modulus must be at least 2; the empty list
    /// is the trivial group.
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        let mut order: u64 = 1;
        for &m in &moduli {
            if m < 2 {
                return Err(Error::InvalidModulus(m));
            }
            order = order.checked_mul(m).ok_or(Error::Overflow)?;
        }
        Ok(FinAbGroup { moduli, order })
    }

    pub fn trivial() -> Self {
        FinAbGroup {
            moduli: Vec::new(),
            order: 1,
        }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// The `i`-th standard generator `eᵢ`.
    pub fn basis(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        GroupElement(c)
    }

    /// Builds an element from arbitrary integers, reducing each coordinate.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        self.check_rank(coords.len())?;
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| (x as i128).rem_euclid(m as i128) as u64)
                .collect(),
        ))
    }

    /// Builds an element from residues that must already be reduced.
    pub fn element_exact(&self, coords: &[u64]) -> Result<GroupElement> {
        let x = GroupElement(coords.to_vec());
        self.check(&x)?;
        Ok(x)
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found,
            });
        }
        Ok(())
    }

    /// Verifies that `x` is a reduced element of this group.
    pub fn check(&self, x: &GroupElement) -> Result<()> {
        self.check_rank(x.rank())?;
        for (index, (&value, &modulus)) in x.0.iter().zip(&self.moduli).enumerate() {
            if value >= modulus {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    value,
                    modulus,
                });
            }
        }
        Ok(())
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check_rank(x.rank())?;
        self.check_rank(y.rank())?;
        Ok(GroupElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.moduli)
                .map(|((&a, &b), &m)| ((a as u128 + b as u128) % m as u128) as u64)
                .collect(),
        ))
    }

    pub fn neg(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check_rank(x.rank())?;
        Ok(GroupElement(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| (m - a % m) % m)
                .collect(),
        ))
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.add(x, &self.neg(y)?)
    }

    /// `n · x`, for any integer `n`.
    pub fn scalar_mul(&self, n: i64, x: &GroupElement) -> Result<GroupElement> {
        self.check_rank(x.rank())?;
        Ok(GroupElement(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| {
                    let n = (n as i128).rem_euclid(m as i128) as u128;
                    ((n * a as u128) % m as u128) as u64
                })
                .collect(),
        ))
    }

    /// Least `n ≥ 1` with `n · x = 0`.
    pub fn element_order(&self, x: &GroupElement) -> Result<u64> {
        self.check_rank(x.rank())?;
        Ok(x.0
            .iter()
            .zip(&self.moduli)
            .fold(1, |acc, (&a, &m)| lcm(acc, m / gcd(m, a))))
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// Invariant factors `d₁ | d₂ | …` (each ≥ 2). Two groups are isomorphic
    /// exactly when these lists agree.
    pub fn canonical_invariant_factors(&self) -> Vec<u64> {
        if self.moduli.is_empty() {
            return Vec::new();
        }
        let diag: Vec<i64> = self.moduli.iter().map(|&m| m as i64).collect();
        let n = diag.len();
        // entries never exceed the group order, which fits in u64
        let snf = smith_normal_form(&IntMatrix::diagonal(n, n, &diag))
            .expect("SNF of a diagonal matrix of moduli");
        snf.diagonal()
            .into_iter()
            .filter(|&d| d != 1)
            .map(|d| d as u64)
            .collect()
    }

    /// The same group rewritten as `Z/d₁ × … × Z/d_k` in invariant-factor form.
    pub fn canonical(&self) -> FinAbGroup {
        FinAbGroup::new(self.canonical_invariant_factors()).expect("invariant factors are >= 2")
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.canonical_invariant_factors() == other.canonical_invariant_factors()
    }

    /// The `p`-primary part as an abstract group: `Z/p^{v_p(mᵢ)}` for each
    /// factor divisible by `p`.
    pub fn primary_part(&self, p: u64) -> Result<FinAbGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let moduli = self
            .moduli
            .iter()
            .map(|&m| p.pow(valuation(m, p)))
            .filter(|&q| q > 1)
            .collect();
        FinAbGroup::new(moduli)
    }

    /// The subgroup of elements whose order is a power of `p` (the unique
    /// maximal `p`-subgroup), enumerated inside `self`.
    pub fn primary_component(&self, p: u64, bound: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        check_bound(self, bound)?;
        let mut members = Vec::new();
        for i in 0..self.order {
            let x = self.element_at(i);
            let o = self.element_order(&x)?;
            if o == 1 || prime_power_decompose(o).is_some_and(|(q, _)| q == p) {
                members.push(i);
            }
        }
        Ok(Subgroup::from_members(self.clone(), members))
    }

    /// Mixed-radix index of `x`, first coordinate most significant.
    pub(crate) fn index_of(&self, x: &GroupElement) -> u64 {
        x.0.iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&a, &m)| acc * m + a)
    }

    pub(crate) fn element_at(&self, mut index: u64) -> GroupElement {
        let mut c = vec![0; self.rank()];
        for (slot, &m) in c.iter_mut().zip(&self.moduli).rev() {
            *slot = index % m;
            index /= m;
        }
        GroupElement(c)
    }

    pub(crate) fn add_index(&self, mut a: u64, mut b: u64) -> u64 {
        let mut out = 0;
        let mut place = 1;
        for &m in self.moduli.iter().rev() {
            let s = (a % m + b % m) % m;
            out += s * place;
            place *= m;
            a /= m;
            b /= m;
        }
        out
    }

    pub(crate) fn neg_index(&self, mut a: u64) -> u64 {
        let mut out = 0;
        let mut place = 1;
        for &m in self.moduli.iter().rev() {
            out += ((m - a % m) % m) * place;
            place *= m;
            a /= m;
        }
        out
    }
}

pub(crate) fn check_bound(group: &FinAbGroup, bound: u64) -> Result<()> {
    if group.order() > bound {
        return Err(Error::BoundExceeded {
            order: group.order(),
            bound,
        });
    }
    Ok(())
}

impl fmt::Display for FinAbGroup {
    /// `Z/m1 x Z/m2 x …`; the trivial group prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{m}")?;
        }
        Ok(())
    }
}

/// A group together with a distinguished nonzero element `g`.
///
/// The trivial group has no nonzero element, so it admits no pointed group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedGroup {
    group: FinAbGroup,
    g: GroupElement,
}

impl PointedGroup {
    pub fn new(group: FinAbGroup, g: GroupElement) -> Result<Self> {
        group.check(&g)?;
        if g.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(PointedGroup { group, g })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn point(&self) -> &GroupElement {
        &self.g
    }

    /// Order of the distinguished element.
    pub fn point_order(&self) -> u64 {
        self.group
            .element_order(&self.g)
            .expect("point belongs to its group")
    }
}

impl fmt::Display for PointedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.group, self.g)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in `n`.
fn valuation(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let e = valuation(n, d);
            n /= d.pow(e);
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, e))` with `n = pᵉ` and `e ≥ 1`, or `None` (including `n = 1`).
pub fn prime_power_decompose(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Partitions of `n` with parts in nonincreasing order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One group per isomorphism class of abelian groups of order `n`.
///
/// Each group is written in primary form: primes ascending, and within a
/// prime the prime-power factors ascending. The list is sorted by invariant
/// factors, cyclic group first.
pub fn abelian_groups_of_order(n: u64) -> Vec<FinAbGroup> {
    assert!(n >= 1, "group order must be positive");
    let mut classes: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &classes {
            for partition in partitions(e) {
                let mut moduli = prefix.clone();
                moduli.extend(partition.iter().rev().map(|&k| p.pow(k)));
                next.push(moduli);
            }
        }
        classes = next;
    }
    let mut groups: Vec<FinAbGroup> = classes
        .into_iter()
        .map(|m| FinAbGroup::new(m).expect("prime powers are >= 2"))
        .collect();
    groups.sort_by_cached_key(|g| {
        let f = g.canonical_invariant_factors();
        (f.len(), f)
    });
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(m: &[u64]) -> FinAbGroup {
        FinAbGroup::new(m.to_vec()).unwrap()
    }

    fn el(g: &FinAbGroup, c: &[i64]) -> GroupElement {
        g.element(c).unwrap()
    }

    #[test]
    fn addition() {
        let g = grp(&[4, 2]);
        assert_eq!(g.add(&el(&g, &[3, 1]), &el(&g, &[1, 1])).unwrap(), g.zero());
        assert_eq!(
            g.add(&el(&g, &[1, 0]), &el(&g, &[1, 1])).unwrap(),
            el(&g, &[2, 1])
        );
        let x = el(&g, &[3, 1]);
        assert_eq!(g.add(&x, &g.zero()).unwrap(), x);
    }

    #[test]
    fn negation_and_scaling() {
        let z6 = grp(&[6]);
        assert_eq!(z6.neg(&el(&z6, &[2])).unwrap(), el(&z6, &[4]));
        assert_eq!(z6.scalar_mul(3, &el(&z6, &[2])).unwrap(), z6.zero());
        let g = grp(&[4, 2]);
        assert_eq!(g.scalar_mul(2, &el(&g, &[1, 1])).unwrap(), el(&g, &[2, 0]));
        assert_eq!(g.scalar_mul(-1, &el(&g, &[1, 1])).unwrap(), el(&g, &[3, 1]));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let g = grp(&[4, 2]);
        let z = grp(&[4]).zero();
        assert!(matches!(
            g.add(&g.zero(), &z),
            Err(Error::RankMismatch { .. })
        ));
        assert!(matches!(g.neg(&z), Err(Error::RankMismatch { .. })));
        assert!(matches!(
            g.element_exact(&[4, 0]),
            Err(Error::CoordinateOutOfRange { .. })
        ));
    }

    #[test]
    fn element_orders() {
        assert_eq!(grp(&[8]).element_order(&el(&grp(&[8]), &[1])).unwrap(), 8);
        assert_eq!(grp(&[12]).element_order(&el(&grp(&[12]), &[3])).unwrap(), 4);
        let g = grp(&[2, 4]);
        assert_eq!(g.element_order(&el(&g, &[1, 1])).unwrap(), 4);
        assert_eq!(g.element_order(&g.zero()).unwrap(), 1);
    }

    #[test]
    fn invariant_factors() {
        assert_eq!(grp(&[2, 3]).canonical_invariant_factors(), vec![6]);
        assert_eq!(grp(&[2, 4]).canonical_invariant_factors(), vec![2, 4]);
        assert_eq!(grp(&[4, 6]).canonical_invariant_factors(), vec![2, 12]);
        assert_eq!(
            FinAbGroup::trivial().canonical_invariant_factors(),
            Vec::<u64>::new()
        );
        assert!(grp(&[4, 3]).is_isomorphic(&grp(&[12])));
    }

    #[test]
    fn primary_components() {
        let z12 = grp(&[12]);
        let c = z12.primary_component(2, 256).unwrap();
        let got: Vec<_> = c.elements().collect();
        let want: Vec<_> = [0, 3, 6, 9].iter().map(|&x| el(&z12, &[x])).collect();
        assert_eq!(got, want);
        assert_eq!(
            z12.primary_part(2).unwrap().canonical_invariant_factors(),
            vec![4]
        );
        assert!(z12.primary_component(5, 256).unwrap().is_trivial());
        let v4 = grp(&[2, 2]);
        assert!(!v4.primary_component(2, 256).unwrap().is_proper());
        assert!(matches!(
            z12.primary_component(4, 256),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_decompose(8), Some((2, 3)));
        assert_eq!(prime_power_decompose(6), None);
        assert_eq!(prime_power_decompose(1), None);
        assert_eq!(prime_power_decompose(97), Some((97, 1)));
    }

    #[test]
    fn groups_of_small_orders() {
        let four = abelian_groups_of_order(4);
        assert_eq!(four, vec![grp(&[4]), grp(&[2, 2])]);
        assert_eq!(abelian_groups_of_order(1), vec![FinAbGroup::trivial()]);
        let twelve = abelian_groups_of_order(12);
        assert_eq!(twelve, vec![grp(&[4, 3]), grp(&[2, 2, 3])]);
    }

    #[test]
    fn pointed_group_rejects_zero() {
        assert!(matches!(
            PointedGroup::new(grp(&[4]), grp(&[4]).zero()),
            Err(Error::ZeroPoint)
        ));
        assert!(matches!(
            PointedGroup::new(FinAbGroup::trivial(), GroupElement(vec![])),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn modulus_below_two_is_rejected() {
        assert!(matches!(
            FinAbGroup::new(vec![4, 1]),
            Err(Error::InvalidModulus(1))
        ));
    }

    #[test]
    fn index_arithmetic_matches_coordinates() {
        let g = grp(&[3, 4, 2]);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let sum = g.add(&g.element_at(a), &g.element_at(b)).unwrap();
                assert_eq!(g.index_of(&sum), g.add_index(a, b));
            }
            assert_eq!(
                g.index_of(&g.neg(&g.element_at(a)).unwrap()),
                g.neg_index(a)
            );
        }
    }

    #[test]
    fn display() {
        assert_eq!(grp(&[4, 2]).to_string(), "Z/4 x Z/2");
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
        let g = grp(&[4, 2]);
        assert_eq!(el(&g, &[1, 1]).to_string(), "(1,1)");
        assert_eq!(el(&grp(&[8]), &[3]).to_string(), "3");
    }
}
