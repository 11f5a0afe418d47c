//! Amalgamation of spans of pointed homomorphisms.
//!
//! A span `(K, k) ←f– (G, g) –h→ (L, l)` can be completed to a commuting
//! square of pointed homomorphisms iff `l ∉ h(ker f)` and `k ∉ f(ker h)`.
//! The completion, when it exists, is the pushout
//! `D = (K ⊕ L) / {(f(a), −h(a)) : a ∈ G}` with `d` the class of `(k, 0)`.

use serde::Serialize;

use crate::error::Result;
use crate::group::{FinAbGroup, GroupElement, PointedGroup};
use crate::hom::{Homomorphism, Span};
use crate::snf::quotient_invariants;

/// Which kernel a non-amalgamability witness was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `a ∈ ker f` with `h(a) = l`.
    Left,
    /// `a ∈ ker h` with `f(a) = k`.
    Right,
}

/// A concrete element of `G` that blocks amalgamation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kernel: Side,
    pub element: GroupElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Amalgamability {
    Amalgamable,
    Blocked(Witness),
}

impl Amalgamability {
    pub fn holds(&self) -> bool {
        matches!(self, Amalgamability::Amalgamable)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Amalgamability::Amalgamable => None,
            Amalgamability::Blocked(w) => Some(w),
        }
    }
}

/// Checks `l ∉ h(ker f)` and `k ∉ f(ker h)` by scanning both kernels, which
/// are enumerated by brute force within `bound`.
pub fn amalgamability_condition(span: &Span, bound: u64) -> Result<Amalgamability> {
    let legs = [
        (Side::Left, span.left(), span.right(), span.right_target()),
        (Side::Right, span.right(), span.left(), span.left_target()),
    ];
    for (side, killer, other, other_target) in legs {
        for a in killer.kernel(bound)?.elements() {
            if &other.apply(&a)? == other_target.point() {
                return Ok(Amalgamability::Blocked(Witness {
                    kernel: side,
                    element: a,
                }));
            }
        }
    }
    Ok(Amalgamability::Amalgamable)
}

/// The pushout of a span, with both coprojections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamResult {
    /// `d ≠ 0`.
    pub amalgamable: bool,
    /// `D = (K ⊕ L)/H` in invariant-factor coordinates.
    pub amalgam: FinAbGroup,
    /// Class of `(k, 0)`.
    pub d: GroupElement,
    /// `f′: K → D`, `x ↦ class(x, 0)`.
    pub left_map: Homomorphism,
    /// `h′: L → D`, `y ↦ class(0, y)`.
    pub right_map: Homomorphism,
    /// Set when the span does not amalgamate.
    pub witness: Option<Witness>,
}

impl AmalgamResult {
    /// `(D, d)` when it is a pointed group.
    pub fn pointed(&self) -> Option<PointedGroup> {
        PointedGroup::new(self.amalgam.clone(), self.d.clone()).ok()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Amalgam<'a> {
            invariant_factors: &'a [u64],
        }
        #[derive(Serialize)]
        struct Out<'a> {
            amalgamable: bool,
            #[serde(rename = "D")]
            amalgam: Amalgam<'a>,
            d: &'a GroupElement,
            left_images: &'a [GroupElement],
            right_images: &'a [GroupElement],
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<&'a Witness>,
        }
        serde_json::to_string(&Out {
            amalgamable: self.amalgamable,
            amalgam: Amalgam {
                invariant_factors: self.amalgam.moduli(),
            },
            d: &self.d,
            left_images: self.left_map.images(),
            right_images: self.right_map.images(),
            witness: self.witness.as_ref(),
        })
        .expect("amalgam result serializes")
    }
}

/// Builds `(K ⊕ L)/H` with `H` generated by `(f(eᵢ), −h(eᵢ))` over the
/// standard generators of `G`.
///
/// Failure to amalgamate is a value: the result has `amalgamable = false`
/// and carries a kernel witness (found by scanning kernels within `bound`).
pub fn pushout(span: &Span, bound: u64) -> Result<AmalgamResult> {
    let (f, h) = (span.left(), span.right());
    let (k_group, l_group) = (f.codomain(), h.codomain());
    let ambient: Vec<u64> = k_group
        .moduli()
        .iter()
        .chain(l_group.moduli())
        .copied()
        .collect();
    let split = k_group.rank();

    let relations = (0..span.source().group().rank())
        .map(|i| {
            let e = span.source().group().basis(i);
            let fe = f.apply(&e)?;
            let he = l_group.neg(&h.apply(&e)?)?;
            Ok(fe.coords().iter().chain(he.coords()).copied().collect())
        })
        .collect::<Result<Vec<Vec<u64>>>>()?;
    let quotient = quotient_invariants(&ambient, &relations)?;
    let amalgam = FinAbGroup::new(quotient.invariant_factors().to_vec())?;

    let embed = |offset: usize, x: &GroupElement| -> Result<GroupElement> {
        let mut v = vec![0; ambient.len()];
        v[offset..offset + x.rank()].copy_from_slice(x.coords());
        amalgam.element_exact(&quotient.project(&v)?)
    };
    let left_images = (0..k_group.rank())
        .map(|i| embed(0, &k_group.basis(i)))
        .collect::<Result<Vec<_>>>()?;
    let right_images = (0..l_group.rank())
        .map(|j| embed(split, &l_group.basis(j)))
        .collect::<Result<Vec<_>>>()?;
    let left_map = Homomorphism::new(k_group.clone(), amalgam.clone(), left_images)?;
    let right_map = Homomorphism::new(l_group.clone(), amalgam.clone(), right_images)?;

    let d = embed(0, span.left_target().point())?;
    let amalgamable = !d.is_zero();
    let witness = if amalgamable {
        None
    } else {
        amalgamability_condition(span, bound)?.witness().cloned()
    };
    Ok(AmalgamResult {
        amalgamable,
        amalgam,
        d,
        left_map,
        right_map,
        witness,
    })
}

/// Exhaustively checks that the square commutes on all of `G`, that
/// `f′(k) = h′(l) = d ≠ 0`, and that both maps are well-defined pointed
/// homomorphisms into `(D, d)`.
pub fn verify_square(span: &Span, result: &AmalgamResult) -> bool {
    let Some(target) = result.pointed() else {
        return false;
    };
    if !result.amalgamable {
        return false;
    }
    let (fp, hp) = (&result.left_map, &result.right_map);
    let well_defined = [(fp, span.left().codomain()), (hp, span.right().codomain())]
        .into_iter()
        .all(|(m, dom)| {
            m.domain() == dom
                && Homomorphism::new(
                    m.domain().clone(),
                    m.codomain().clone(),
                    m.images().to_vec(),
                )
                .is_ok()
        });
    if !well_defined {
        return false;
    }
    if !fp.is_pointed(span.left_target(), &target) || !hp.is_pointed(span.right_target(), &target) {
        return false;
    }
    let g = span.source().group();
    g.elements().all(|x| {
        let lhs = span.left().apply(&x).and_then(|y| fp.apply(&y));
        let rhs = span.right().apply(&x).and_then(|y| hp.apply(&y));
        matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
    })
}
