//! Deciding whether a pointed group `(G, g)` is an h-amalgamation basis.
//!
//! Two independent deciders are provided:
//!
//! * [`is_base_bruteforce`] enumerates the subgroup lattice and looks for
//!   proper subgroups `H`, `K` with `g ∈ H + K` but `g ∉ H` and `g ∉ K`.
//! * [`is_base_structural`] checks that the order of `g` is a prime power
//!   `pᵐ` and that the `p`-primary component of `G` is cyclic.
//!
//! The two must agree on every input. [`enumerate_bases`] and [`selftest`]
//! sweep every pointed group up to a given order and treat any disagreement
//! as a defect.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    abelian_groups_of_order, prime_power_decompose, FinAbGroup, GroupElement, PointedGroup,
};
use crate::subgroups::{all_subgroups, subgroup_sum, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Structural,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bruteforce => "bruteforce",
            Method::Structural => "structural",
            Method::Both => "both",
        })
    }
}

/// Why a verdict came out the way it did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detail {
    /// Proper subgroups with `g ∈ H + K`, `g ∉ H`, `g ∉ K`.
    Violation {
        h: Subgroup,
        k: Subgroup,
    },
    /// Every pair of proper subgroups was checked.
    NoViolation,
    OrderNotPrimePower {
        order: u64,
    },
    /// The `p`-component has these invariant factors (more than one).
    ComponentNotCyclic {
        p: u64,
        component: Vec<u64>,
    },
    /// The `p`-component is cyclic of order `pⁿ`.
    CyclicComponent {
        p: u64,
        n: u32,
    },
}

impl fmt::Display for Detail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Detail::Violation { h, k } => {
                write!(f, "g lies in H+K but in neither H={h} nor K={k}")
            }
            Detail::NoViolation => write!(f, "no violating pair of proper subgroups"),
            Detail::OrderNotPrimePower { order } => {
                write!(f, "order of g is {order}, not a prime power")
            }
            Detail::ComponentNotCyclic { p, component } => {
                let c = FinAbGroup::new(component.clone()).map_err(|_| fmt::Error)?;
                write!(f, "{p}-component {c} is not cyclic")
            }
            Detail::CyclicComponent { p, n } => {
                write!(
                    f,
                    "p={p} n={n}: {p}-component is cyclic of order {}",
                    p.pow(*n)
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseVerdict {
    pub is_base: bool,
    pub method: Method,
    pub detail: Detail,
}

impl BaseVerdict {
    /// Machine-readable form, with `is_base` first.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&VerdictJson::from(self)).expect("verdict serializes")
    }
}

impl fmt::Display for BaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.is_base { "is" } else { "is not" };
        write!(
            f,
            "{word} an h-amalgamation basis ({}): {}",
            self.method, self.detail
        )
    }
}

#[derive(Serialize)]
struct SubgroupJson<'a> {
    generators: &'a [GroupElement],
    elements: Vec<GroupElement>,
}

impl<'a> From<&'a Subgroup> for SubgroupJson<'a> {
    fn from(s: &'a Subgroup) -> Self {
        SubgroupJson {
            generators: s.generators(),
            elements: s.elements().collect(),
        }
    }
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    #[serde(rename = "H")]
    h: SubgroupJson<'a>,
    #[serde(rename = "K")]
    k: SubgroupJson<'a>,
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    is_base: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    component: Option<&'a [u64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson<'a>>,
    method: Method,
}

impl<'a> From<&'a BaseVerdict> for VerdictJson<'a> {
    fn from(v: &'a BaseVerdict) -> Self {
        let mut out = VerdictJson {
            is_base: v.is_base,
            p: None,
            n: None,
            reason: None,
            order: None,
            component: None,
            witness: None,
            method: v.method,
        };
        match &v.detail {
            Detail::Violation { h, k } => {
                out.witness = Some(WitnessJson {
                    h: h.into(),
                    k: k.into(),
                })
            }
            Detail::NoViolation => {}
            Detail::OrderNotPrimePower { order } => {
                out.reason = Some("order_not_prime_power");
                out.order = Some(*order);
            }
            Detail::ComponentNotCyclic { p, component } => {
                out.reason = Some("component_not_cyclic");
                out.p = Some(*p);
                out.component = Some(component);
            }
            Detail::CyclicComponent { p, n } => {
                out.p = Some(*p);
                out.n = Some(*n);
            }
        }
        out
    }
}

/// Subgroup-lattice decider for a fixed group; the lattice is enumerated
/// once and reused for every choice of `g`.
pub struct BruteForceDecider {
    group: FinAbGroup,
    proper: Vec<Subgroup>,
}

impl BruteForceDecider {
    pub fn new(group: &FinAbGroup, bound: u64) -> Result<Self> {
        let proper = all_subgroups(group, bound)?
            .into_iter()
            .filter(Subgroup::is_proper)
            .collect();
        Ok(BruteForceDecider {
            group: group.clone(),
            proper,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Looks for the first violating pair `H ≤ K` in canonical order. Only the
    /// direction `g ∈ H + K ⇒ g ∈ H ∨ g ∈ K` needs checking.
    pub fn decide(&self, g: &GroupElement) -> Result<BaseVerdict> {
        let pg = PointedGroup::new(self.group.clone(), g.clone())?;
        let grp = pg.group();
        let gi = grp.index_of(pg.point());
        let avoiding: Vec<&Subgroup> = self
            .proper
            .iter()
            .filter(|s| !s.contains_index(gi))
            .collect();
        for (i, h) in avoiding.iter().enumerate() {
            // g ∈ H + K  ⟺  (g − H) ∩ K ≠ ∅
            let shifted: Vec<u64> = h
                .indices()
                .iter()
                .map(|&x| grp.add_index(gi, grp.neg_index(x)))
                .collect();
            for k in &avoiding[i + 1..] {
                if shifted.iter().any(|&y| k.contains_index(y)) {
                    return Ok(BaseVerdict {
                        is_base: false,
                        method: Method::Bruteforce,
                        detail: Detail::Violation {
                            h: (*h).clone(),
                            k: (*k).clone(),
                        },
                    });
                }
            }
        }
        Ok(BaseVerdict {
            is_base: true,
            method: Method::Bruteforce,
            detail: Detail::NoViolation,
        })
    }
}

/// Decides by enumerating all pairs of proper subgroups of `G`.
pub fn is_base_bruteforce(pg: &PointedGroup, bound: u64) -> Result<BaseVerdict> {
    BruteForceDecider::new(pg.group(), bound)?.decide(pg.point())
}

/// Decides from the order of `g` and the shape of the matching primary
/// component, without enumeration.
pub fn is_base_structural(pg: &PointedGroup) -> BaseVerdict {
    let order = pg.point_order();
    let detail = match prime_power_decompose(order) {
        None => Detail::OrderNotPrimePower { order },
        Some((p, _)) => {
            let component = pg
                .group()
                .primary_part(p)
                .expect("p comes from a factorization")
                .canonical_invariant_factors();
            match component.as_slice() {
                [q] => Detail::CyclicComponent {
                    p,
                    n: prime_power_decompose(*q)
                        .expect("component order is a power of p")
                        .1,
                },
                _ => Detail::ComponentNotCyclic { p, component },
            }
        }
    };
    BaseVerdict {
        is_base: matches!(detail, Detail::CyclicComponent { .. }),
        method: Method::Structural,
        detail,
    }
}

/// Necessary condition: the order of `g` is a prime power.
pub fn is_prime_power_order_necessary(pg: &PointedGroup) -> bool {
    prime_power_decompose(pg.point_order()).is_some()
}

/// Re-validates a bruteforce witness: both proper, `g ∈ H + K`, `g ∉ H`,
/// `g ∉ K`.
pub fn witness_is_valid(pg: &PointedGroup, h: &Subgroup, k: &Subgroup) -> bool {
    let g = pg.point();
    let check = || -> Result<bool> {
        Ok(h.parent() == pg.group()
            && k.parent() == pg.group()
            && h.is_proper()
            && k.is_proper()
            && !h.contains(g)?
            && !k.contains(g)?
            && subgroup_sum(h, k)?.contains(g)?)
    };
    check().unwrap_or(false)
}

fn combine(pg: &PointedGroup, brute: BaseVerdict, structural: BaseVerdict) -> Result<BaseVerdict> {
    if brute.is_base != structural.is_base {
        return Err(Error::DeciderDisagreement {
            group: pg.group().to_string(),
            g: pg.point().to_string(),
            bruteforce: brute.is_base,
            structural: structural.is_base,
        });
    }
    let detail = if structural.is_base {
        structural.detail
    } else {
        brute.detail
    };
    Ok(BaseVerdict {
        is_base: structural.is_base,
        method: Method::Both,
        detail,
    })
}

/// Runs the requested decider(s). With [`Method::Both`] a disagreement is an
/// error; the verdict reports `(p, n)` when positive and the subgroup
/// witness when negative.
pub fn is_base(pg: &PointedGroup, method: Method, bound: u64) -> Result<BaseVerdict> {
    match method {
        Method::Bruteforce => is_base_bruteforce(pg, bound),
        Method::Structural => Ok(is_base_structural(pg)),
        Method::Both => combine(pg, is_base_bruteforce(pg, bound)?, is_base_structural(pg)),
    }
}

/// One cell of the base table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseRow {
    pub group: FinAbGroup,
    pub g: GroupElement,
    pub verdict: BaseVerdict,
}

fn groups_up_to(max_order: u64) -> Vec<FinAbGroup> {
    (2..=max_order).flat_map(abelian_groups_of_order).collect()
}

fn nonzero_elements(group: &FinAbGroup) -> impl Iterator<Item = GroupElement> + '_ {
    group.elements().skip(1)
}

/// Every pointed group `(G, g)` with `2 ≤ |G| ≤ max_order`, one `G` per
/// isomorphism class, decided by `method`.
///
/// Rows are ordered by group order, then invariant factors, then `g`
/// lexicographically. Groups are evaluated in parallel.
pub fn enumerate_bases(max_order: u64, method: Method, bound: u64) -> Result<Vec<BaseRow>> {
    if method != Method::Structural && max_order > bound {
        return Err(Error::BoundExceeded {
            order: max_order,
            bound,
        });
    }
    let groups = groups_up_to(max_order);
    let per_group: Vec<Vec<BaseRow>> = groups
        .par_iter()
        .map(|group| -> Result<Vec<BaseRow>> {
            let brute = match method {
                Method::Structural => None,
                _ => Some(BruteForceDecider::new(group, bound)?),
            };
            nonzero_elements(group)
                .map(|g| {
                    let pg = PointedGroup::new(group.clone(), g.clone())?;
                    let verdict = match (&brute, method) {
                        (None, _) => is_base_structural(&pg),
                        (Some(b), Method::Bruteforce) => b.decide(&g)?,
                        (Some(b), _) => combine(&pg, b.decide(&g)?, is_base_structural(&pg))?,
                    };
                    Ok(BaseRow {
                        group: group.clone(),
                        g,
                        verdict,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(per_group.into_iter().flatten().collect())
}

/// A cell where the deciders disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub group: FinAbGroup,
    pub g: GroupElement,
    pub bruteforce: bool,
    pub structural: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelftestReport {
    pub groups: usize,
    pub cells: usize,
    pub bases: usize,
    pub witnesses_checked: usize,
    pub disagreements: Vec<Disagreement>,
    /// Negative bruteforce verdicts whose witness failed re-validation, or
    /// positive verdicts with a non-prime-power order.
    pub invalid: Vec<(FinAbGroup, GroupElement)>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.invalid.is_empty()
    }
}

/// Runs both deciders on every cell up to `max_order` and collects every
/// disagreement instead of stopping at the first.
pub fn selftest(max_order: u64, bound: u64) -> Result<SelftestReport> {
    if max_order > bound {
        return Err(Error::BoundExceeded {
            order: max_order,
            bound,
        });
    }
    let groups = groups_up_to(max_order);
    let partial: Vec<SelftestReport> = groups
        .par_iter()
        .map(|group| -> Result<SelftestReport> {
            let brute = BruteForceDecider::new(group, bound)?;
            let mut r = SelftestReport {
                groups: 1,
                ..Default::default()
            };
            for g in nonzero_elements(group) {
                let pg = PointedGroup::new(group.clone(), g.clone())?;
                let b = brute.decide(&g)?;
                let s = is_base_structural(&pg);
                r.cells += 1;
                if b.is_base {
                    r.bases += 1;
                    if !is_prime_power_order_necessary(&pg) {
                        r.invalid.push((group.clone(), g.clone()));
                    }
                }
                if let Detail::Violation { h, k } = &b.detail {
                    r.witnesses_checked += 1;
                    if !witness_is_valid(&pg, h, k) {
                        r.invalid.push((group.clone(), g.clone()));
                    }
                }
                if b.is_base != s.is_base {
                    r.disagreements.push(Disagreement {
                        group: group.clone(),
                        g,
                        bruteforce: b.is_base,
                        structural: s.is_base,
                    });
                }
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    Ok(partial
        .into_iter()
        .fold(SelftestReport::default(), |mut acc, r| {
            acc.groups += r.groups;
            acc.cells += r.cells;
            acc.bases += r.bases;
            acc.witnesses_checked += r.witnesses_checked;
            acc.disagreements.extend(r.disagreements);
            acc.invalid.extend(r.invalid);
            acc
        }))
}

/// CSV with header `group,g,is_base,detail`.
pub fn write_csv<W: Write>(rows: &[BaseRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["group", "g", "is_base", "detail"])?;
    for row in rows {
        w.write_record([
            row.group.to_string(),
            row.g.to_string(),
            row.verdict.is_base.to_string(),
            row.verdict.detail.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// One JSON object per row: `{"group", "g", "verdict"}`.
pub fn write_jsonl<W: Write>(rows: &[BaseRow], mut out: W) -> Result<()> {
    #[derive(Serialize)]
    struct Row<'a> {
        group: String,
        g: &'a GroupElement,
        verdict: VerdictJson<'a>,
    }
    for row in rows {
        let line = serde_json::to_string(&Row {
            group: row.group.to_string(),
            g: &row.g,
            verdict: (&row.verdict).into(),
        })?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}
