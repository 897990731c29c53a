//! The degree-halving correspondence κ for real even, quaternionic and
//! octonionic flag manifolds.
//!
//! Each halving space carries a complex fixed-point space (a Grassmannian or a
//! partial flag manifold). On Schubert bases κ is
//!
//! * real even: `σ_{DI} ↦ 2^{|I|} σ_I` (`DI` the doubled index),
//! * quaternionic: `σ_I ↦ 2^{|I|} σ_I`,
//! * octonionic (`Fl(O^3)` only): `σ_w ↦ σ_w^H` on `Fl(H^3)`.
//!
//! Because `|K| = |I| + |J|` on every term of `σ_I σ_J`, the 2-powers are
//! multiplicative and the structure constants of the halving space are exactly
//! the complex ones. For a dimension-matching problem the 2-powers on both
//! sides cancel against κ of the point class, so the signed real count is the
//! complex intersection number; we report its absolute value, fixing the
//! orientation of real fundamental classes so that κ-multiplicities are
//! positive.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flag::{flag_chern_class, FlagClass, FlagDescriptor};
use crate::grassmann::{
    chern_class, degeneracy_count, Bundle, GrassmannClass, GrassmannianDescriptor,
};
use crate::indexing::{OrderedSetPartition, Partition, Permutation};
use crate::schur::add_into;
use crate::serial::DecimalInt;

/// A Schubert index in whichever form the space uses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassIndex {
    Partition(Partition),
    Osp(OrderedSetPartition),
    Permutation(Permutation),
}

impl fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassIndex::Partition(p) => write!(f, "{p}"),
            ClassIndex::Osp(i) => write!(f, "{i}"),
            ClassIndex::Permutation(w) => write!(f, "{w}"),
        }
    }
}

impl Serialize for ClassIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClassIndex::Partition(p) => p.serialize(s),
            ClassIndex::Osp(i) => i.serialize(s),
            ClassIndex::Permutation(w) => w.serialize(s),
        }
    }
}

/// An index as it appears in JSON, before the space decides what it means.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawIndex {
    Nested(Vec<Vec<u32>>),
    Flat(Vec<u32>),
}

impl From<&ClassIndex> for RawIndex {
    fn from(index: &ClassIndex) -> Self {
        match index {
            ClassIndex::Partition(p) => RawIndex::Flat(p.parts().to_vec()),
            ClassIndex::Osp(i) => RawIndex::Nested(i.blocks().to_vec()),
            ClassIndex::Permutation(w) => RawIndex::Flat(w.one_line().to_vec()),
        }
    }
}

/// A complex Grassmannian or partial flag manifold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FixedPointSpace {
    Grassmannian(GrassmannianDescriptor),
    Flag(FlagDescriptor),
}

impl FixedPointSpace {
    /// Complex dimension.
    pub fn dimension(&self) -> u64 {
        match self {
            FixedPointSpace::Grassmannian(g) => g.dimension(),
            FixedPointSpace::Flag(f) => f.dimension(),
        }
    }

    pub fn indices(&self) -> Vec<ClassIndex> {
        match self {
            FixedPointSpace::Grassmannian(g) => g
                .partitions()
                .into_iter()
                .map(ClassIndex::Partition)
                .collect(),
            FixedPointSpace::Flag(f) => f.indices().into_iter().map(ClassIndex::Osp).collect(),
        }
    }

    pub fn point_index(&self) -> ClassIndex {
        match self {
            FixedPointSpace::Grassmannian(g) => ClassIndex::Partition(g.top_partition()),
            FixedPointSpace::Flag(f) => ClassIndex::Osp(f.point_index()),
        }
    }

    /// Complex codimension `|I|`.
    pub fn degree(&self, index: &ClassIndex) -> Result<u64> {
        self.check(index)?;
        Ok(match index {
            ClassIndex::Partition(p) => p.size(),
            ClassIndex::Osp(i) => i.length(),
            ClassIndex::Permutation(_) => unreachable!("checked"),
        })
    }

    pub fn check(&self, index: &ClassIndex) -> Result<()> {
        match (self, index) {
            (FixedPointSpace::Grassmannian(g), ClassIndex::Partition(p)) => g.check(p),
            (FixedPointSpace::Flag(f), ClassIndex::Osp(i)) => f.check(i),
            _ => Err(self.mismatch(index)),
        }
    }

    fn mismatch(&self, index: &impl fmt::Display) -> Error {
        Error::IndexKindMismatch {
            index: index.to_string(),
            space: self.to_string(),
        }
    }

    /// Interpret a JSON index: partitions on Grassmannians, OSPs or
    /// permutations (minimal coset representatives) on flags.
    pub fn parse_index(&self, raw: &RawIndex) -> Result<ClassIndex> {
        let index = match (self, raw) {
            (FixedPointSpace::Grassmannian(_), RawIndex::Flat(parts)) => {
                ClassIndex::Partition(Partition::new(parts.clone())?)
            }
            (FixedPointSpace::Grassmannian(_), RawIndex::Nested(b)) if b.is_empty() => {
                ClassIndex::Partition(Partition::empty())
            }
            (FixedPointSpace::Flag(_), RawIndex::Nested(blocks)) => {
                ClassIndex::Osp(OrderedSetPartition::new(blocks.clone())?)
            }
            (FixedPointSpace::Flag(f), RawIndex::Flat(one_line)) => {
                let w = Permutation::new(one_line.clone())?;
                ClassIndex::Osp(OrderedSetPartition::from_permutation(&w, f.dims())?)
            }
            _ => return Err(self.mismatch(&format!("{raw:?}"))),
        };
        self.check(&index)?;
        Ok(index)
    }
}

impl fmt::Display for FixedPointSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedPointSpace::Grassmannian(g) => write!(f, "{g}"),
            FixedPointSpace::Flag(d) => write!(f, "{d}"),
        }
    }
}

/// A class on a complex fixed-point space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexClass {
    Grassmann(GrassmannClass),
    Flag(FlagClass),
}

impl ComplexClass {
    pub fn zero(space: &FixedPointSpace) -> Self {
        match space {
            FixedPointSpace::Grassmannian(g) => ComplexClass::Grassmann(GrassmannClass::zero(*g)),
            FixedPointSpace::Flag(f) => ComplexClass::Flag(FlagClass::zero(f.clone())),
        }
    }

    pub fn one(space: &FixedPointSpace) -> Self {
        match space {
            FixedPointSpace::Grassmannian(g) => ComplexClass::Grassmann(GrassmannClass::one(*g)),
            FixedPointSpace::Flag(f) => ComplexClass::Flag(FlagClass::one(f.clone())),
        }
    }

    pub fn from_terms(
        space: &FixedPointSpace,
        terms: impl IntoIterator<Item = (ClassIndex, BigInt)>,
    ) -> Result<Self> {
        let mut partitions = Vec::new();
        let mut osps = Vec::new();
        for (index, c) in terms {
            space.check(&index)?;
            match index {
                ClassIndex::Partition(p) => partitions.push((p, c)),
                ClassIndex::Osp(i) => osps.push((i, c)),
                ClassIndex::Permutation(_) => unreachable!("checked"),
            }
        }
        Ok(match space {
            FixedPointSpace::Grassmannian(g) => {
                ComplexClass::Grassmann(GrassmannClass::from_terms(*g, partitions)?)
            }
            FixedPointSpace::Flag(f) => ComplexClass::Flag(FlagClass::from_terms(f.clone(), osps)?),
        })
    }

    pub fn schubert(space: &FixedPointSpace, index: &ClassIndex) -> Result<Self> {
        Self::from_terms(space, [(index.clone(), BigInt::one())])
    }

    pub fn space(&self) -> FixedPointSpace {
        match self {
            ComplexClass::Grassmann(a) => FixedPointSpace::Grassmannian(a.space()),
            ComplexClass::Flag(a) => FixedPointSpace::Flag(a.space().clone()),
        }
    }

    pub fn terms(&self) -> Vec<(ClassIndex, BigInt)> {
        match self {
            ComplexClass::Grassmann(a) => a
                .terms()
                .map(|(p, c)| (ClassIndex::Partition(p.clone()), c.clone()))
                .collect(),
            ComplexClass::Flag(a) => a
                .terms()
                .map(|(i, c)| (ClassIndex::Osp(i.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn coeff(&self, index: &ClassIndex) -> BigInt {
        match (self, index) {
            (ComplexClass::Grassmann(a), ClassIndex::Partition(p)) => a.coeff(p),
            (ComplexClass::Flag(a), ClassIndex::Osp(i)) => a.coeff(i),
            _ => BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ComplexClass::Grassmann(a) => a.is_zero(),
            ComplexClass::Flag(a) => a.is_zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (ComplexClass::Grassmann(a), ComplexClass::Grassmann(b)) => {
                Ok(ComplexClass::Grassmann(a.add(b)?))
            }
            (ComplexClass::Flag(a), ComplexClass::Flag(b)) => Ok(ComplexClass::Flag(a.add(b)?)),
            _ => Err(self.space_mismatch(other)),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        match self {
            ComplexClass::Grassmann(a) => ComplexClass::Grassmann(a.scale(c)),
            ComplexClass::Flag(a) => ComplexClass::Flag(a.scale(c)),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (ComplexClass::Grassmann(a), ComplexClass::Grassmann(b)) => {
                Ok(ComplexClass::Grassmann(a.multiply(b)?))
            }
            (ComplexClass::Flag(a), ComplexClass::Flag(b)) => {
                Ok(ComplexClass::Flag(a.multiply(b)?))
            }
            _ => Err(self.space_mismatch(other)),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.space()), |acc, _| {
            acc.multiply(self).expect("same space")
        })
    }

    pub fn integrate(&self) -> BigInt {
        match self {
            ComplexClass::Grassmann(a) => a.integrate(),
            ComplexClass::Flag(a) => a.integrate(),
        }
    }

    fn space_mismatch(&self, other: &Self) -> Error {
        Error::SpaceMismatch {
            left: self.space().to_string(),
            right: other.space().to_string(),
        }
    }
}

impl fmt::Display for ComplexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexClass::Grassmann(a) => write!(f, "{a}"),
            ComplexClass::Flag(a) => write!(f, "{a}"),
        }
    }
}

impl Serialize for ComplexClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ComplexClass::Grassmann(a) => a.serialize(s),
            ComplexClass::Flag(a) => a.serialize(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalvingKind {
    RealEven,
    Quaternionic,
    Octonionic,
}

/// A halving space together with its complex fixed-point space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalvingSpace {
    kind: HalvingKind,
    fixed: FixedPointSpace,
}

fn halve_dims(what: &str, dims: &[u32]) -> Result<Vec<u32>> {
    if dims.iter().any(|d| d % 2 != 0) {
        return Err(Error::InvalidSpace(format!(
            "real even {what} needs even dimensions, got {dims:?}"
        )));
    }
    Ok(dims.iter().map(|d| d / 2).collect())
}

impl HalvingSpace {
    /// `Gr_k(R^n)` with `k`, `n` even; fixed points `Gr_{k/2}(C^{n/2})`.
    pub fn real_even_grassmannian(k: u32, n: u32) -> Result<Self> {
        let half = halve_dims("grassmannian", &[k, n])?;
        Ok(Self {
            kind: HalvingKind::RealEven,
            fixed: FixedPointSpace::Grassmannian(GrassmannianDescriptor::new(half[0], half[1])?),
        })
    }

    /// `Fl_{2D}(R^{2n})` given by the (even) real dimensions; fixed points `Fl_D(C^n)`.
    pub fn real_even_flag(dims: &[u32]) -> Result<Self> {
        let half = halve_dims("flag", dims)?;
        Ok(Self {
            kind: HalvingKind::RealEven,
            fixed: FixedPointSpace::Flag(FlagDescriptor::new(half)?),
        })
    }

    pub fn quaternionic_grassmannian(k: u32, n: u32) -> Result<Self> {
        Ok(Self {
            kind: HalvingKind::Quaternionic,
            fixed: FixedPointSpace::Grassmannian(GrassmannianDescriptor::new(k, n)?),
        })
    }

    pub fn quaternionic_flag(dims: &[u32]) -> Result<Self> {
        Ok(Self {
            kind: HalvingKind::Quaternionic,
            fixed: FixedPointSpace::Flag(FlagDescriptor::new(dims.to_vec())?),
        })
    }

    /// `Fl(O^3)`, the only octonionic flag manifold.
    pub fn octonionic_flag() -> Self {
        Self {
            kind: HalvingKind::Octonionic,
            fixed: FixedPointSpace::Flag(FlagDescriptor::complete(3)),
        }
    }

    pub fn kind(&self) -> HalvingKind {
        self.kind
    }

    /// The complex space whose Schubert calculus computes this one. For the
    /// octonionic flag this is `Fl(C^3)`, reached through `Fl(H^3)`.
    pub fn fixed(&self) -> &FixedPointSpace {
        &self.fixed
    }

    /// Real dimension.
    pub fn real_dimension(&self) -> u64 {
        let scale = if self.kind == HalvingKind::Octonionic {
            8
        } else {
            4
        };
        scale * self.fixed.dimension()
    }

    /// Real codimension of the Schubert variety of `index`.
    pub fn real_codimension(&self, index: &ClassIndex) -> Result<u64> {
        let scale = if self.kind == HalvingKind::Octonionic {
            8
        } else {
            4
        };
        Ok(scale * self.fixed.degree(&self.to_fixed(index)?)?)
    }

    /// Pull an index of this space back to the complex fixed-point index.
    pub fn to_fixed(&self, index: &ClassIndex) -> Result<ClassIndex> {
        let fixed = match (self.kind, index) {
            (HalvingKind::RealEven, ClassIndex::Partition(p)) => {
                ClassIndex::Partition(p.halve().map_err(|_| Error::NotADoubleIndex {
                    index: p.to_string(),
                })?)
            }
            (HalvingKind::RealEven, ClassIndex::Osp(i)) => ClassIndex::Osp(i.halve()?),
            (HalvingKind::Quaternionic, ClassIndex::Partition(_) | ClassIndex::Osp(_)) => {
                index.clone()
            }
            (HalvingKind::Octonionic, ClassIndex::Permutation(w)) if w.lies_in(3) => {
                ClassIndex::Osp(OrderedSetPartition::from_permutation(
                    &w.extended(3),
                    &[1, 1, 1],
                )?)
            }
            _ => {
                return Err(Error::IndexKindMismatch {
                    index: index.to_string(),
                    space: self.to_string(),
                })
            }
        };
        self.fixed.check(&fixed)?;
        Ok(fixed)
    }

    /// Push a complex fixed-point index forward (doubling in the real case).
    pub fn from_fixed(&self, index: &ClassIndex) -> Result<ClassIndex> {
        self.fixed.check(index)?;
        Ok(match (self.kind, index) {
            (HalvingKind::RealEven, ClassIndex::Partition(p)) => ClassIndex::Partition(p.double()),
            (HalvingKind::RealEven, ClassIndex::Osp(i)) => ClassIndex::Osp(i.double()),
            (HalvingKind::Octonionic, ClassIndex::Osp(i)) => {
                ClassIndex::Permutation(i.to_permutation())
            }
            _ => index.clone(),
        })
    }

    pub fn check(&self, index: &ClassIndex) -> Result<()> {
        self.to_fixed(index).map(|_| ())
    }

    pub fn indices(&self) -> Vec<ClassIndex> {
        self.fixed
            .indices()
            .iter()
            .map(|i| self.from_fixed(i).expect("fixed-point index"))
            .collect()
    }

    pub fn point_index(&self) -> ClassIndex {
        self.from_fixed(&self.fixed.point_index())
            .expect("fixed-point index")
    }

    /// Interpret a JSON index against this space (real flags accept OSPs of
    /// the real ground set or permutations of it; the octonionic flag takes
    /// permutations of 3 letters).
    pub fn parse_index(&self, raw: &RawIndex) -> Result<ClassIndex> {
        let index = match (self.kind, &self.fixed, raw) {
            (HalvingKind::Octonionic, _, RawIndex::Flat(one_line)) => {
                ClassIndex::Permutation(Permutation::new(one_line.clone())?)
            }
            (HalvingKind::RealEven, FixedPointSpace::Flag(f), _) => {
                let real = FixedPointSpace::Flag(FlagDescriptor::new(
                    f.dims().iter().map(|d| 2 * d).collect(),
                )?);
                real.parse_index(raw)?
            }
            (HalvingKind::RealEven, FixedPointSpace::Grassmannian(g), _) => {
                let real = FixedPointSpace::Grassmannian(GrassmannianDescriptor::new(
                    2 * g.k(),
                    2 * g.n(),
                )?);
                real.parse_index(raw)?
            }
            (HalvingKind::Quaternionic, fixed, _) => fixed.parse_index(raw)?,
            _ => {
                return Err(Error::IndexKindMismatch {
                    index: format!("{raw:?}"),
                    space: self.to_string(),
                })
            }
        };
        self.check(&index)?;
        Ok(index)
    }
}

impl fmt::Display for HalvingSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, &self.fixed) {
            (HalvingKind::RealEven, FixedPointSpace::Grassmannian(g)) => {
                write!(f, "Gr_{}(R^{})", 2 * g.k(), 2 * g.n())
            }
            (HalvingKind::RealEven, FixedPointSpace::Flag(d)) => {
                let dims: Vec<u32> = d.dims().iter().map(|x| 2 * x).collect();
                write!(f, "Fl_{:?}(R^{})", dims, 2 * d.n())
            }
            (HalvingKind::Quaternionic, FixedPointSpace::Grassmannian(g)) => {
                write!(f, "Gr_{}(H^{})", g.k(), g.n())
            }
            (HalvingKind::Quaternionic, FixedPointSpace::Flag(d)) => {
                write!(f, "Fl_{:?}(H^{})", d.dims(), d.n())
            }
            (HalvingKind::Octonionic, _) => write!(f, "Fl(O^3)"),
        }
    }
}

/// Integer combination of Schubert classes of a halving space.
#[derive(Clone, PartialEq, Eq)]
pub struct HalvingClass {
    space: HalvingSpace,
    terms: BTreeMap<ClassIndex, BigInt>,
}

impl HalvingClass {
    pub fn zero(space: HalvingSpace) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: HalvingSpace) -> Self {
        let unit = ComplexClass::one(space.fixed());
        Self::from_fixed_basis(space, &unit).expect("unit lives on the fixed space")
    }

    pub fn schubert(space: HalvingSpace, index: &ClassIndex) -> Result<Self> {
        Self::from_terms(space, [(index.clone(), BigInt::one())])
    }

    pub fn from_terms(
        space: HalvingSpace,
        terms: impl IntoIterator<Item = (ClassIndex, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(space);
        for (index, c) in terms {
            out.space.check(&index)?;
            add_into(&mut out.terms, index, c);
        }
        Ok(out)
    }

    /// Same coefficients, indices pushed forward from the fixed space (no 2-powers).
    pub fn from_fixed_basis(space: HalvingSpace, class: &ComplexClass) -> Result<Self> {
        let terms = class
            .terms()
            .into_iter()
            .map(|(i, c)| Ok((space.from_fixed(&i)?, c)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(space, terms)
    }

    /// Same coefficients, indices pulled back to the fixed space (no 2-powers).
    pub fn to_fixed_basis(&self) -> ComplexClass {
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| (self.space.to_fixed(i).expect("validated index"), c.clone()));
        ComplexClass::from_terms(self.space.fixed(), terms).expect("validated indices")
    }

    pub fn space(&self) -> &HalvingSpace {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ClassIndex, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &ClassIndex) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                left: self.space.to_string(),
                right: other.space.to_string(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            add_into(&mut out.terms, i.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (i, a) in &self.terms {
            add_into(&mut out.terms, i.clone(), a * c);
        }
        out
    }

    /// Structure constants of a halving space equal those of its fixed-point
    /// space: halve, multiply, double back.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let product = self.to_fixed_basis().multiply(&other.to_fixed_basis())?;
        Self::from_fixed_basis(self.space.clone(), &product)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.space.clone()), |acc, _| {
            acc.multiply(self).expect("same space")
        })
    }

    /// Coefficient of the point class.
    pub fn integrate(&self) -> BigInt {
        self.coeff(&self.space.point_index())
    }
}

impl fmt::Display for HalvingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::schur::write_terms(f, self.terms.iter(), "σ")
    }
}

impl fmt::Debug for HalvingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.space)
    }
}

#[derive(Serialize, Deserialize)]
struct IndexTerm {
    index: RawIndex,
    coeff: DecimalInt,
}

impl Serialize for HalvingClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<IndexTerm> = self
            .terms
            .iter()
            .map(|(i, c)| IndexTerm {
                index: i.into(),
                coeff: DecimalInt(c.clone()),
            })
            .collect();
        let mut st = s.serialize_struct("HalvingClass", 2)?;
        st.serialize_field(
            "space",
            &crate::problem::SpaceDescriptor::Halving(self.space.clone()),
        )?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for HalvingClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            space: crate::problem::SpaceDescriptor,
            terms: Vec<IndexTerm>,
        }
        let raw = Raw::deserialize(d)?;
        let crate::problem::SpaceDescriptor::Halving(space) = raw.space else {
            return Err(D::Error::custom("not a halving space"));
        };
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok((space.parse_index(&t.index)?, t.coeff.0)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        HalvingClass::from_terms(space, terms).map_err(D::Error::custom)
    }
}

/// Result of κ: a complex class, or for the octonionic flag a quaternionic one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KappaImage {
    Complex(ComplexClass),
    Quaternionic(HalvingClass),
}

impl fmt::Display for KappaImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KappaImage::Complex(c) => write!(f, "{c}"),
            KappaImage::Quaternionic(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for KappaImage {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            KappaImage::Complex(c) => c.serialize(s),
            KappaImage::Quaternionic(c) => c.serialize(s),
        }
    }
}

fn two_pow(e: u64) -> BigInt {
    BigInt::one() << e as usize
}

/// κ on a class, extended linearly from the Schubert basis.
pub fn kappa(a: &HalvingClass) -> KappaImage {
    let space = a.space();
    if space.kind() == HalvingKind::Octonionic {
        let target = HalvingSpace::quaternionic_flag(&[1, 1, 1]).expect("valid dims");
        let terms = a
            .terms()
            .map(|(i, c)| (space.to_fixed(i).expect("validated index"), c.clone()));
        return KappaImage::Quaternionic(
            HalvingClass::from_terms(target, terms).expect("fixed-point indices"),
        );
    }
    let fixed = space.fixed();
    let terms = a.terms().map(|(i, c)| {
        let image = space.to_fixed(i).expect("validated index");
        let degree = fixed.degree(&image).expect("fixed-point index");
        (image, c * two_pow(degree))
    });
    KappaImage::Complex(ComplexClass::from_terms(fixed, terms).expect("fixed-point indices"))
}

/// Product of two real double classes.
pub fn real_double_multiply(a: &HalvingClass, b: &HalvingClass) -> Result<HalvingClass> {
    for x in [a, b] {
        if x.space().kind() != HalvingKind::RealEven {
            return Err(Error::InvalidSpace(format!(
                "{} is not a real even space",
                x.space()
            )));
        }
    }
    a.multiply(b)
}

/// `c_j(S_i)` on a complex space; on a Grassmannian bundle 1 is `S` and bundle 2 the trivial `C^n`.
pub fn complex_chern_class(space: &FixedPointSpace, i: usize, j: u32) -> Result<ComplexClass> {
    match space {
        FixedPointSpace::Flag(f) => Ok(ComplexClass::Flag(flag_chern_class(f, i, j)?)),
        FixedPointSpace::Grassmannian(g) => match i {
            1 => Ok(ComplexClass::Grassmann(chern_class(Bundle::Sub, j, *g)?)),
            2 if j <= g.n() => Ok(if j == 0 {
                ComplexClass::one(space)
            } else {
                ComplexClass::zero(space)
            }),
            2 => Err(Error::DegreeOutOfRange {
                degree: j,
                rank: g.n(),
            }),
            _ => Err(Error::IndexOutOfRange {
                what: "bundle",
                index: i as u32,
                max: 2,
            }),
        },
    }
}

/// `p_j(S_i)` of a real even (or quaternionic) space in its Schubert basis:
/// the polynomial of `c_j(S_i)` with every index doubled.
pub fn pontryagin_class(space: &HalvingSpace, i: usize, j: u32) -> Result<HalvingClass> {
    if space.kind() == HalvingKind::Octonionic {
        return Err(Error::InvalidSpace(format!(
            "no tautological flag bundles tracked on {space}"
        )));
    }
    HalvingClass::from_fixed_basis(space.clone(), &complex_chern_class(space.fixed(), i, j)?)
}

/// `κ p_j(S_i) = 2^j c_j(S_i)` on the fixed-point space.
pub fn kappa_char_class(space: &HalvingSpace, i: usize, j: u32) -> Result<ComplexClass> {
    if space.kind() == HalvingKind::Octonionic {
        return Err(Error::InvalidSpace(format!(
            "no tautological flag bundles tracked on {space}"
        )));
    }
    Ok(complex_chern_class(space.fixed(), i, j)?.scale(&two_pow(j as u64)))
}

/// `∫ Π σ_{I_j}^{m_j}` over a halving space, computed on the fixed-point space.
pub fn intersection_number(
    space: &HalvingSpace,
    conditions: &[(ClassIndex, u32)],
) -> Result<BigInt> {
    let mut degree = 0u64;
    for (index, count) in conditions {
        degree += space.real_codimension(index)? * *count as u64;
    }
    if degree != space.real_dimension() {
        return Err(Error::DimensionMismatch {
            degree,
            dimension: space.real_dimension(),
        });
    }
    let fixed = space.fixed();
    let mut product = ComplexClass::one(fixed);
    for (index, count) in conditions {
        let class = ComplexClass::schubert(fixed, &space.to_fixed(index)?)?;
        product = product.multiply(&class.pow(*count))?;
    }
    Ok(product.integrate())
}

/// Cohomological lower bound for a double Schubert problem on a real even
/// space: the absolute value of the signed real count, which equals the
/// complex count of the halved problem.
pub fn real_lower_bound(space: &HalvingSpace, conditions: &[(ClassIndex, u32)]) -> Result<BigInt> {
    if space.kind() != HalvingKind::RealEven {
        return Err(Error::InvalidSpace(format!(
            "{space} is not a real even space"
        )));
    }
    Ok(intersection_number(space, conditions)?.abs())
}

/// Generic solution count of a quaternionic Schubert problem.
pub fn quaternionic_count(
    space: &HalvingSpace,
    conditions: &[(ClassIndex, u32)],
) -> Result<BigInt> {
    if space.kind() != HalvingKind::Quaternionic {
        return Err(Error::InvalidSpace(format!(
            "{space} is not a quaternionic space"
        )));
    }
    intersection_number(space, conditions)
}

/// Lower bound for the number of `V ∈ Gr_{2k}(R^{2n})` where `m` generic maps
/// `V -> R^{2n}/V` all drop rank by `corank` (even). Halving turns this into the
/// tautological degeneracy count on `Gr_k(C^n)` with rank bound `k - corank/2`.
pub fn real_degeneracy_lower_bound(space: &HalvingSpace, corank: u32, maps: u32) -> Result<BigInt> {
    let FixedPointSpace::Grassmannian(g) = space.fixed() else {
        return Err(Error::InvalidSpace(format!(
            "{space} is not a Grassmannian"
        )));
    };
    if space.kind() != HalvingKind::RealEven {
        return Err(Error::InvalidSpace(format!(
            "{space} is not a real even space"
        )));
    }
    if !corank.is_multiple_of(2) {
        return Err(Error::NotADoubleIndex {
            index: format!("corank {corank}"),
        });
    }
    let half = corank / 2;
    if half > g.k().min(g.l()) {
        return Err(Error::InvalidSpace(format!(
            "corank {corank} exceeds the rank of the map on {space}"
        )));
    }
    let rho = g.k() - half;
    // report a mismatch in real units
    match degeneracy_count(*g, g.k(), g.l(), rho, maps) {
        Err(Error::DimensionMismatch { degree, dimension }) => Err(Error::DimensionMismatch {
            degree: 4 * degree,
            dimension: 4 * dimension,
        }),
        other => Ok(other?.abs()),
    }
}
