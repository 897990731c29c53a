//! The cohomology ring of the complex Grassmannian `Gr_k(C^n)` in the Schubert
//! basis.
//!
//! Sign conventions: the Schubert basis is primary. Chern classes of the
//! tautological bundles are
//!
//! * `c_i(Q) = σ_(i)`
//! * `c_i(S) = (-1)^i σ_(1^i)`
//!
//! so that `c(S) c(Q) = 1`. A class quoted elsewhere as "`2c_1` of the
//! tautological bundle" is `2σ_(1)` here when `c_1` is read as `c_1(Q) = -c_1(S)`,
//! and `-2σ_(1)` when read literally as `c_1(S)`. Even powers agree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::indexing::Partition;
use crate::ring::{determinant, RingElement};
use crate::schur::{
    add_into, basis_product, partition_terms_from_json, partition_terms_to_json, write_terms,
    ShapeBound,
};

/// `Gr_k(C^n)`. Degenerate cases `k = 0` and `k = n` (a point) are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannianDescriptor {
    k: u32,
    n: u32,
}

impl GrassmannianDescriptor {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::InvalidSpace(format!(
                "Gr_{k}(C^{n}) needs 0 <= k <= n and n >= 1"
            )));
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Codimension `n - k`, the number of columns of the box.
    pub fn l(&self) -> u32 {
        self.n - self.k
    }

    /// Complex dimension `k (n - k)`.
    pub fn dimension(&self) -> u64 {
        self.k as u64 * self.l() as u64
    }

    /// The point class `σ_(l^k)`.
    pub fn top_partition(&self) -> Partition {
        Partition::rectangle(self.k, self.l())
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits_in(self.k, self.l())
    }

    pub fn check(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::BoxOverflow {
                partition: lambda.parts().to_vec(),
                rows: self.k,
                cols: self.l(),
            })
        }
    }

    /// Every Schubert index of the space.
    pub fn partitions(&self) -> Vec<Partition> {
        Partition::all_in_box(self.k, self.l())
    }
}

impl fmt::Display for GrassmannianDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr_{}(C^{})", self.k, self.n)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename = "complex_grassmannian")]
struct GrassmannianJson {
    k: u32,
    n: u32,
}

impl Serialize for GrassmannianDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GrassmannianJson {
            k: self.k,
            n: self.n,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GrassmannianDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GrassmannianJson::deserialize(d)?;
        Self::new(j.k, j.n).map_err(serde::de::Error::custom)
    }
}

/// An integer combination of Schubert classes `σ_λ`, `λ ⊆ k x l`.
#[derive(Clone, PartialEq, Eq)]
pub struct GrassmannClass {
    space: GrassmannianDescriptor,
    terms: BTreeMap<Partition, BigInt>,
}

impl GrassmannClass {
    pub fn zero(space: GrassmannianDescriptor) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: GrassmannianDescriptor) -> Self {
        Self::schubert(space, &Partition::empty()).expect("empty partition fits every box")
    }

    /// The Schubert class `σ_λ`.
    pub fn schubert(space: GrassmannianDescriptor, lambda: &Partition) -> Result<Self> {
        Self::from_terms(space, [(lambda.clone(), BigInt::one())])
    }

    /// `σ_(p)`, zero for `p < 0` or `p > l`.
    pub fn special(space: GrassmannianDescriptor, p: i64) -> Self {
        if p < 0 || p > space.l() as i64 || (p > 0 && space.k == 0) {
            return Self::zero(space);
        }
        Self::schubert(space, &Partition::row(p as u32)).expect("checked against the box")
    }

    pub fn from_terms(
        space: GrassmannianDescriptor,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(space);
        for (lambda, c) in terms {
            space.check(&lambda)?;
            add_into(&mut out.terms, lambda, c);
        }
        Ok(out)
    }

    pub fn space(&self) -> GrassmannianDescriptor {
        self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of every term, if the class is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|d| d == first).then_some(first)
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
        for (l, c) in &other.terms {
            add_into(&mut out.terms, l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.space);
        for (l, a) in &self.terms {
            add_into(&mut out.terms, l.clone(), a * c);
        }
        out
    }

    /// Product: LR expansion truncated to the `k x l` box.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let dim = self.space.dimension();
        let bound = ShapeBound::rectangle(self.space.k, self.space.l());
        let mut out = Self::zero(self.space);
        for (lambda, ca) in &self.terms {
            for (mu, cb) in &other.terms {
                if lambda.size() + mu.size() > dim {
                    continue;
                }
                let coeff = ca * cb;
                for (nu, c) in basis_product(lambda, mu, &bound) {
                    add_into(&mut out.terms, nu, &coeff * BigInt::from(c));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.space), |acc, _| {
            acc.multiply(self).expect("same space")
        })
    }

    /// Coefficient of the point class `σ_(l^k)`. Only the top-degree part of an
    /// inhomogeneous class contributes; classes of lower degree integrate to zero.
    pub fn integrate(&self) -> BigInt {
        self.coeff(&self.space.top_partition())
    }
}

/// `σ_λ · σ_μ` on `space`.
pub fn gr_multiply(a: &GrassmannClass, b: &GrassmannClass) -> Result<GrassmannClass> {
    a.multiply(b)
}

/// `∫ a` over the Grassmannian.
pub fn gr_integrate(a: &GrassmannClass) -> BigInt {
    a.integrate()
}

/// The Poincaré dual index `λ∨`: the complement of `λ` in the box, rotated.
pub fn poincare_dual(lambda: &Partition, space: GrassmannianDescriptor) -> Result<Partition> {
    lambda.complement(space.k, space.l())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bundle {
    /// Tautological subbundle `S`, rank `k`.
    Sub,
    /// Tautological quotient bundle `Q`, rank `n - k`.
    Quot,
}

impl Bundle {
    pub fn rank(self, space: GrassmannianDescriptor) -> u32 {
        match self {
            Bundle::Sub => space.k,
            Bundle::Quot => space.l(),
        }
    }
}

/// `c_i` of a tautological bundle in the Schubert basis.
pub fn chern_class(
    bundle: Bundle,
    i: u32,
    space: GrassmannianDescriptor,
) -> Result<GrassmannClass> {
    let rank = bundle.rank(space);
    if i > rank {
        return Err(Error::DegreeOutOfRange { degree: i, rank });
    }
    if i == 0 {
        return Ok(GrassmannClass::one(space));
    }
    // outside the k x l box the class vanishes (only possible when k or l is 0)
    let (lambda, sign) = match bundle {
        Bundle::Quot => (Partition::row(i), 1),
        Bundle::Sub => (
            Partition::column(i),
            if i.is_multiple_of(2) { 1 } else { -1 },
        ),
    };
    if !space.contains(&lambda) {
        return Ok(GrassmannClass::zero(space));
    }
    Ok(GrassmannClass::schubert(space, &lambda)?.scale(&BigInt::from(sign)))
}

/// `[c_0, c_1, .., c_rank]` of a tautological bundle.
pub fn total_chern_class(bundle: Bundle, space: GrassmannianDescriptor) -> Vec<GrassmannClass> {
    (0..=bundle.rank(space))
        .map(|i| chern_class(bundle, i, space).expect("degree within rank"))
        .collect()
}

/// Chern classes `c_0, .., c_dim` of the virtual bundle `F - E`, i.e. of `c(F) / c(E)`.
pub fn virtual_chern_classes(
    space: GrassmannianDescriptor,
    target: Bundle,
    source: Bundle,
) -> Vec<GrassmannClass> {
    let top = space.dimension() as usize;
    let cf = total_chern_class(target, space);
    let ce = total_chern_class(source, space);
    // inverse series of c(E): inv_0 = 1, inv_p = -Σ_{i=1..p} c_i(E) inv_{p-i}
    let mut inv: Vec<GrassmannClass> = vec![GrassmannClass::one(space)];
    for p in 1..=top {
        let mut acc = GrassmannClass::zero(space);
        for i in 1..=p.min(ce.len() - 1) {
            acc = acc
                .sub(&ce[i].multiply(&inv[p - i]).expect("same space"))
                .expect("same space");
        }
        inv.push(acc);
    }
    (0..=top)
        .map(|p| {
            (0..=p.min(cf.len() - 1)).fold(GrassmannClass::zero(space), |acc, i| {
                acc.add(&cf[i].multiply(&inv[p - i]).expect("same space"))
                    .expect("same space")
            })
        })
        .collect()
}

/// Giambelli: `det(σ_{λ_i + j - i})` evaluated inside the ring.
pub fn giambelli(lambda: &Partition, space: GrassmannianDescriptor) -> Result<GrassmannClass> {
    space.check(lambda)?;
    let l = lambda.len();
    let matrix: Vec<Vec<GrassmannClass>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    GrassmannClass::special(space, lambda.part(i) as i64 + j as i64 - i as i64)
                })
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, &GrassmannClass::one(space)))
}

/// Thom-Porteous: the class of `{rank ≤ ρ}` for a generic map `E -> F` with
/// `rank E = e`, `rank F = f` is `det(c_{f-ρ+j-i}(F - E))` of size `(e-ρ) x (e-ρ)`.
/// `virtual_chern[i]` must hold `c_i(F - E)` for every degree that occurs.
pub fn thom_porteous(
    space: GrassmannianDescriptor,
    e: u32,
    f: u32,
    rho: u32,
    virtual_chern: &[GrassmannClass],
) -> Result<GrassmannClass> {
    if rho > e.min(f) {
        return Err(Error::InvalidSpace(format!(
            "rank bound {rho} exceeds min(e, f) = {}",
            e.min(f)
        )));
    }
    let size = (e - rho) as usize;
    let entry = |i: usize, j: usize| -> Result<GrassmannClass> {
        let degree = (f - rho) as i64 + j as i64 - i as i64;
        if degree < 0 {
            return Ok(GrassmannClass::zero(space));
        }
        let c = virtual_chern
            .get(degree as usize)
            .ok_or(Error::MissingChernDegree(degree as u32))?;
        if c.space() != space {
            return Err(Error::SpaceMismatch {
                left: space.to_string(),
                right: c.space().to_string(),
            });
        }
        Ok(c.clone())
    };
    let matrix = (0..size)
        .map(|i| (0..size).map(|j| entry(i, j)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(determinant(&matrix, &GrassmannClass::one(space)))
}

/// The Thom-Porteous class of the tautological map `S -> Q` dropping to rank `ρ`.
/// Requires `e = k` and `f = n - k`.
pub fn tautological_porteous_class(
    space: GrassmannianDescriptor,
    e: u32,
    f: u32,
    rho: u32,
) -> Result<GrassmannClass> {
    if e != space.k || f != space.l() {
        return Err(Error::InvalidSpace(format!(
            "Hom(S, Q) on {space} has ranks ({}, {}), got ({e}, {f})",
            space.k,
            space.l()
        )));
    }
    let c = virtual_chern_classes(space, Bundle::Quot, Bundle::Sub);
    thom_porteous(space, e, f, rho, &c)
}

/// Number of points where `m` generic translates of the tautological degeneracy
/// locus `{rank(S -> Q) ≤ ρ}` meet: `∫ [locus]^m`.
pub fn degeneracy_count(
    space: GrassmannianDescriptor,
    e: u32,
    f: u32,
    rho: u32,
    m: u32,
) -> Result<BigInt> {
    if rho > e.min(f) {
        return Err(Error::InvalidSpace(format!(
            "rank bound {rho} exceeds min(e, f) = {}",
            e.min(f)
        )));
    }
    let degree = m as u64 * (e - rho) as u64 * (f - rho) as u64;
    if degree != space.dimension() {
        return Err(Error::DimensionMismatch {
            degree,
            dimension: space.dimension(),
        });
    }
    let class = tautological_porteous_class(space, e, f, rho)?;
    Ok(class.pow(m).integrate())
}

impl RingElement for GrassmannClass {
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other).expect("determinant entries share a space")
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other).expect("determinant entries share a space")
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.multiply(other)
            .expect("determinant entries share a space")
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for GrassmannClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), "σ")
    }
}

impl fmt::Debug for GrassmannClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.space)
    }
}

impl Serialize for GrassmannClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GrassmannClass", 2)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("terms", &partition_terms_to_json(&self.terms))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GrassmannClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            space: GrassmannianDescriptor,
            #[serde(deserialize_with = "partition_terms_from_json")]
            terms: BTreeMap<Partition, BigInt>,
        }
        let raw = Raw::deserialize(d)?;
        GrassmannClass::from_terms(raw.space, raw.terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn gr(k: u32, n: u32) -> GrassmannianDescriptor {
        GrassmannianDescriptor::new(k, n).unwrap()
    }

    fn sigma(space: GrassmannianDescriptor, parts: &[u32]) -> GrassmannClass {
        GrassmannClass::schubert(space, &p(parts)).unwrap()
    }

    #[test]
    fn multiply_examples_on_gr24() {
        let g = gr(2, 4);
        let expected = sigma(g, &[2]).add(&sigma(g, &[1, 1])).unwrap();
        assert_eq!(sigma(g, &[1]).multiply(&sigma(g, &[1])).unwrap(), expected);
        assert!(sigma(g, &[2])
            .multiply(&sigma(g, &[1, 1]))
            .unwrap()
            .is_zero());
        assert!(sigma(g, &[2, 2])
            .multiply(&sigma(g, &[1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn space_mismatch_is_reported() {
        let err = sigma(gr(2, 4), &[1])
            .multiply(&sigma(gr(2, 5), &[1]))
            .unwrap_err();
        assert!(matches!(err, Error::SpaceMismatch { .. }));
    }

    #[test]
    fn integrals() {
        assert_eq!(sigma(gr(4, 8), &[2, 2]).pow(4).integrate(), BigInt::from(6));
        assert_eq!(sigma(gr(2, 4), &[1]).pow(4).integrate(), BigInt::from(2));
        // σ_(1,1)^2 = σ_(2,2) already fills Gr_2(C^4); a fourth power has degree 8 > 4
        assert_eq!(sigma(gr(2, 4), &[1, 1]).pow(2), sigma(gr(2, 4), &[2, 2]));
        assert!(sigma(gr(2, 4), &[1, 1]).pow(4).integrate().is_zero());
        assert!(GrassmannClass::one(gr(2, 4)).integrate().is_zero());
    }

    #[test]
    fn poincare_dual_examples() {
        let g = gr(2, 4);
        assert_eq!(poincare_dual(&p(&[2, 2]), g).unwrap(), p(&[]));
        assert_eq!(poincare_dual(&p(&[1]), g).unwrap(), p(&[2, 1]));
        assert_eq!(poincare_dual(&p(&[2]), g).unwrap(), p(&[2]));
        assert_eq!(sigma(g, &[2]).pow(2).integrate(), BigInt::one());
        assert!(matches!(
            poincare_dual(&p(&[3]), g),
            Err(Error::BoxOverflow { .. })
        ));
    }

    #[test]
    fn chern_class_examples() {
        let g = gr(2, 4);
        assert_eq!(chern_class(Bundle::Quot, 1, g).unwrap(), sigma(g, &[1]));
        assert_eq!(
            chern_class(Bundle::Sub, 0, g).unwrap(),
            GrassmannClass::one(g)
        );
        assert_eq!(chern_class(Bundle::Sub, 2, g).unwrap(), sigma(g, &[1, 1]));
        assert_eq!(
            chern_class(Bundle::Sub, 1, g).unwrap(),
            sigma(g, &[1]).scale(&BigInt::from(-1))
        );
        assert!(matches!(
            chern_class(Bundle::Sub, 3, g),
            Err(Error::DegreeOutOfRange { degree: 3, rank: 2 })
        ));
    }

    #[test]
    fn whitney_sum_vanishes() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            let g = gr(k, n);
            let cs = total_chern_class(Bundle::Sub, g);
            let cq = total_chern_class(Bundle::Quot, g);
            for p in 1..=n as usize {
                let mut acc = GrassmannClass::zero(g);
                for i in 0..=p.min(cs.len() - 1) {
                    if p - i < cq.len() {
                        acc = acc.add(&cs[i].multiply(&cq[p - i]).unwrap()).unwrap();
                    }
                }
                assert!(acc.is_zero(), "{g}, degree {p}: {acc}");
            }
        }
    }

    #[test]
    fn giambelli_examples() {
        let g = gr(2, 4);
        assert_eq!(giambelli(&p(&[1, 1]), g).unwrap(), sigma(g, &[1, 1]));
        assert_eq!(giambelli(&p(&[2]), g).unwrap(), sigma(g, &[2]));
        assert_eq!(giambelli(&p(&[2, 2]), g).unwrap(), sigma(g, &[2, 2]));
        assert!(matches!(
            giambelli(&p(&[3]), g),
            Err(Error::BoxOverflow { .. })
        ));
    }

    #[test]
    fn porteous_examples() {
        let g = gr(2, 4);
        let class = tautological_porteous_class(g, 2, 2, 1).unwrap();
        assert_eq!(class, sigma(g, &[1]).scale(&BigInt::from(2)));
        let c = virtual_chern_classes(g, Bundle::Quot, Bundle::Sub);
        assert_eq!(
            thom_porteous(g, 2, 2, 2, &c).unwrap(),
            GrassmannClass::one(g)
        );
        // e = f = 1, ρ = 0 on P^1: c_1(Q) - c_1(S)
        let p1 = gr(1, 2);
        let c = virtual_chern_classes(p1, Bundle::Quot, Bundle::Sub);
        let expected = chern_class(Bundle::Quot, 1, p1)
            .unwrap()
            .sub(&chern_class(Bundle::Sub, 1, p1).unwrap())
            .unwrap();
        assert_eq!(thom_porteous(p1, 1, 1, 0, &c).unwrap(), expected);
        assert!(matches!(
            thom_porteous(g, 2, 2, 0, &c[..1]),
            Err(Error::MissingChernDegree(_))
        ));
    }

    #[test]
    fn degeneracy_counts() {
        let g = gr(2, 4);
        assert_eq!(degeneracy_count(g, 2, 2, 1, 4).unwrap(), BigInt::from(32));
        assert!(matches!(
            degeneracy_count(g, 2, 2, 1, 3),
            Err(Error::DimensionMismatch {
                degree: 3,
                dimension: 4
            })
        ));
        assert!(matches!(
            degeneracy_count(g, 2, 2, 2, 5),
            Err(Error::DimensionMismatch { .. })
        ));
        let point = gr(0, 3);
        assert_eq!(degeneracy_count(point, 0, 3, 0, 7).unwrap(), BigInt::one());
    }

    #[test]
    fn json_shape() {
        let g = gr(2, 4);
        let c = sigma(g, &[1]).scale(&BigInt::from(2));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"space":{"type":"complex_grassmannian","k":2,"n":4},"terms":[{"partition":[1],"coeff":"2"}]}"#
        );
        let back: GrassmannClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"space":{"type":"complex_grassmannian","k":2,"n":4},"terms":[{"partition":[3],"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<GrassmannClass>(bad).is_err());
    }
}
