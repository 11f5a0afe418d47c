//! Homomorphisms between finite abelian groups, stored by the images of the
//! standard generators, and spans of pointed homomorphisms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cli::parse::parse_group;
use crate::error::{Error, Result};
use crate::group::{check_bound, FinAbGroup, GroupElement, PointedGroup};
use crate::subgroups::{generate, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    images: Vec<GroupElement>,
}

impl Homomorphism {
    /// Validates `mᵢ · images[i] = 0` in the codomain for every generator.
    pub fn new(
        domain: FinAbGroup,
        codomain: FinAbGroup,
        images: Vec<GroupElement>,
    ) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(Error::RankMismatch {
                expected: domain.rank(),
                found: images.len(),
            });
        }
        for (generator, (image, &modulus)) in images.iter().zip(domain.moduli()).enumerate() {
            codomain.check(image)?;
            if !codomain.scalar_mul(modulus as i64, image)?.is_zero() {
                return Err(Error::NotWellDefined {
                    generator,
                    modulus,
                    image: image.to_string(),
                    codomain: codomain.to_string(),
                });
            }
        }
        Ok(Homomorphism {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(group: &FinAbGroup) -> Self {
        let images = (0..group.rank()).map(|i| group.basis(i)).collect();
        Homomorphism {
            domain: group.clone(),
            codomain: group.clone(),
            images,
        }
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// `f(x) = Σ xᵢ · images[i]`.
    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        self.domain.check(x)?;
        let mut acc = self.codomain.zero();
        for (&xi, image) in x.coords().iter().zip(&self.images) {
            let term = self.codomain.scalar_mul(xi as i64, image)?;
            acc = self.codomain.add(&acc, &term)?;
        }
        Ok(acc)
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn after(&self, inner: &Homomorphism) -> Result<Homomorphism> {
        if inner.codomain != self.domain {
            return Err(Error::ParentMismatch {
                left: inner.codomain.to_string(),
                right: self.domain.to_string(),
            });
        }
        let images = inner
            .images
            .iter()
            .map(|y| self.apply(y))
            .collect::<Result<_>>()?;
        Ok(Homomorphism {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        })
    }

    /// `{x : f(x) = 0}`, by scanning the domain.
    pub fn kernel(&self, bound: u64) -> Result<Subgroup> {
        check_bound(&self.domain, bound)?;
        let members = (0..self.domain.order())
            .filter(|&i| {
                self.apply(&self.domain.element_at(i))
                    .map(|y| y.is_zero())
                    .unwrap_or(false)
            })
            .collect();
        Ok(Subgroup::from_members(self.domain.clone(), members))
    }

    /// `f(G)`, generated by the images of the standard generators.
    pub fn image(&self) -> Result<Subgroup> {
        generate(&self.codomain, &self.images)
    }

    /// `f(S)` for a subgroup `S` of the domain.
    pub fn push_forward(&self, s: &Subgroup) -> Result<Subgroup> {
        if s.parent() != &self.domain {
            return Err(Error::ParentMismatch {
                left: s.parent().to_string(),
                right: self.domain.to_string(),
            });
        }
        let images = s
            .generators()
            .iter()
            .map(|x| self.apply(x))
            .collect::<Result<Vec<_>>>()?;
        generate(&self.codomain, &images)
    }

    /// Whether `f` sends the point of `src` to the point of `dst`.
    pub fn is_pointed(&self, src: &PointedGroup, dst: &PointedGroup) -> bool {
        src.group() == &self.domain
            && dst.group() == &self.codomain
            && self.apply(src.point()).is_ok_and(|y| &y == dst.point())
    }
}

/// `compose(outer, inner)(x) = outer(inner(x))`.
pub fn compose(outer: &Homomorphism, inner: &Homomorphism) -> Result<Homomorphism> {
    outer.after(inner)
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} [", self.domain, self.codomain)?;
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "e{i}↦{y}")?;
        }
        write!(f, "]")
    }
}

/// A diagram `(K, k) ←f– (G, g) –h→ (L, l)` of pointed homomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    source: PointedGroup,
    left: Homomorphism,
    left_target: PointedGroup,
    right: Homomorphism,
    right_target: PointedGroup,
}

impl Span {
    pub fn new(
        source: PointedGroup,
        left: Homomorphism,
        k: GroupElement,
        right: Homomorphism,
        l: GroupElement,
    ) -> Result<Self> {
        let left_target = PointedGroup::new(left.codomain().clone(), k)?;
        let right_target = PointedGroup::new(right.codomain().clone(), l)?;
        for (leg, hom, target) in [
            ("left", &left, &left_target),
            ("right", &right, &right_target),
        ] {
            if hom.domain() != source.group() {
                return Err(Error::ParentMismatch {
                    left: hom.domain().to_string(),
                    right: source.group().to_string(),
                });
            }
            let actual = hom.apply(source.point())?;
            if &actual != target.point() {
                return Err(Error::NotPointed {
                    leg,
                    actual: actual.to_string(),
                    expected: target.point().to_string(),
                });
            }
        }
        Ok(Span {
            source,
            left,
            left_target,
            right,
            right_target,
        })
    }

    /// A span whose targets' points are the images of the source point.
    /// Fails with [`Error::ZeroPoint`] if either image is zero.
    pub fn from_legs(
        source: PointedGroup,
        left: Homomorphism,
        right: Homomorphism,
    ) -> Result<Self> {
        let k = left.apply(source.point())?;
        let l = right.apply(source.point())?;
        Span::new(source, left, k, right, l)
    }

    pub fn source(&self) -> &PointedGroup {
        &self.source
    }

    pub fn left(&self) -> &Homomorphism {
        &self.left
    }

    pub fn right(&self) -> &Homomorphism {
        &self.right
    }

    pub fn left_target(&self) -> &PointedGroup {
        &self.left_target
    }

    pub fn right_target(&self) -> &PointedGroup {
        &self.right_target
    }

    /// The same span with its legs exchanged.
    pub fn swapped(&self) -> Span {
        Span {
            source: self.source.clone(),
            left: self.right.clone(),
            left_target: self.right_target.clone(),
            right: self.left.clone(),
            right_target: self.left_target.clone(),
        }
    }

    pub fn to_file(&self) -> SpanFile {
        let coords = |x: &GroupElement| x.coords().iter().map(|&c| c as i64).collect::<Vec<i64>>();
        let leg = |hom: &Homomorphism, target: &PointedGroup| LegFile {
            codomain: hom.codomain().to_string(),
            point: coords(target.point()),
            images: hom.images().iter().map(coords).collect(),
        };
        SpanFile {
            source: SourceFile {
                group: self.source.group().to_string(),
                g: coords(self.source.point()),
            },
            left: leg(&self.left, &self.left_target),
            right: leg(&self.right, &self.right_target),
        }
    }

    pub fn from_json(text: &str) -> Result<Span> {
        serde_json::from_str::<SpanFile>(text)?.into_span()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("span serializes")
    }
}

/// On-disk span: groups as literals, elements as coordinate arrays.
///
/// ```json
/// {
///   "source": {"group": "Z/2", "g": [1]},
///   "left":   {"codomain": "Z/4", "k": [2], "images": [[2]]},
///   "right":  {"codomain": "Z/2", "l": [1], "images": [[1]]}
/// }
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanFile {
    pub source: SourceFile,
    pub left: LegFile,
    #[serde(with = "right_leg")]
    pub right: LegFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceFile {
    pub group: String,
    pub g: Vec<i64>,
}

/// One leg of a span file. The point is spelled `k` on the left leg and `l`
/// on the right leg.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegFile {
    pub codomain: String,
    #[serde(rename = "k")]
    pub point: Vec<i64>,
    pub images: Vec<Vec<i64>>,
}

mod right_leg {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::LegFile;

    #[derive(Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    struct RightLeg {
        codomain: String,
        l: Vec<i64>,
        images: Vec<Vec<i64>>,
    }

    pub fn serialize<S: Serializer>(leg: &LegFile, s: S) -> Result<S::Ok, S::Error> {
        RightLeg {
            codomain: leg.codomain.clone(),
            l: leg.point.clone(),
            images: leg.images.clone(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LegFile, D::Error> {
        let r = RightLeg::deserialize(d)?;
        Ok(LegFile {
            codomain: r.codomain,
            point: r.l,
            images: r.images,
        })
    }
}

impl SpanFile {
    pub fn into_span(self) -> Result<Span> {
        let group = parse_group(&self.source.group)?;
        let g = group.element(&self.source.g)?;
        let source = PointedGroup::new(group, g)?;
        let leg = |file: &LegFile| -> Result<(Homomorphism, GroupElement)> {
            let codomain = parse_group(&file.codomain)?;
            let images = file
                .images
                .iter()
                .map(|c| codomain.element(c))
                .collect::<Result<Vec<_>>>()?;
            let point = codomain.element(&file.point)?;
            Ok((
                Homomorphism::new(source.group().clone(), codomain, images)?,
                point,
            ))
        };
        let (left, k) = leg(&self.left)?;
        let (right, l) = leg(&self.right)?;
        Span::new(source, left, k, right, l)
    }
}
