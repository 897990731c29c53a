//! Schubert calculus on partial flag manifolds `Fl_D(C^n)` through Schubert
//! polynomials.
//!
//! A Schubert class of `Fl_D(C^n)` is indexed by an ordered set partition with
//! block sizes `D`, equivalently by its minimal-length coset representative
//! (the blocks, sorted, concatenated). Products are computed in the polynomial
//! ring: multiply Schubert polynomials, expand the result in the Schubert basis
//! of a large enough symmetric group, then keep only the coset representatives
//! of `S_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannClass, GrassmannianDescriptor};
use crate::indexing::{OrderedSetPartition, Permutation};
use crate::poly::{Monomial, SparsePolynomial};
use crate::schur::add_into;
use crate::serial::DecimalInt;

/// `Fl_D(C^n)` with `D = (d_1, .., d_m)`, all `d_j ≥ 1`, `n = Σ d_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagDescriptor {
    dims: Vec<u32>,
}

impl FlagDescriptor {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidSpace(format!(
                "flag dimensions {dims:?} must be nonempty and positive"
            )));
        }
        Ok(Self { dims })
    }

    /// The complete flag manifold `Fl(C^n)`.
    pub fn complete(n: u32) -> Self {
        Self {
            dims: vec![1; n.max(1) as usize],
        }
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn n(&self) -> u32 {
        self.dims.iter().sum()
    }

    /// `Σ_{i<j} d_i d_j`.
    pub fn dimension(&self) -> u64 {
        let mut total = 0u64;
        for i in 0..self.dims.len() {
            for j in i + 1..self.dims.len() {
                total += self.dims[i] as u64 * self.dims[j] as u64;
            }
        }
        total
    }

    /// Partial sums `s_1, .., s_{m-1}`; the only allowed descents of a coset representative.
    pub fn descent_positions(&self) -> Vec<usize> {
        self.dims[..self.dims.len() - 1]
            .iter()
            .scan(0usize, |acc, &d| {
                *acc += d as usize;
                Some(*acc)
            })
            .collect()
    }

    /// `s_i = d_1 + .. + d_i` (1-based), the rank of the `i`-th tautological bundle.
    pub fn partial_sum(&self, i: usize) -> u32 {
        self.dims[..i].iter().sum()
    }

    pub fn is_coset_rep(&self, w: &Permutation) -> bool {
        let n = self.n() as usize;
        if !w.lies_in(n) {
            return false;
        }
        let allowed = self.descent_positions();
        w.extended(n).descents().iter().all(|d| allowed.contains(d))
    }

    pub fn check(&self, index: &OrderedSetPartition) -> Result<()> {
        if index.block_sizes() == self.dims {
            Ok(())
        } else {
            Err(Error::IndexKindMismatch {
                index: index.to_string(),
                space: self.to_string(),
            })
        }
    }

    /// Every Schubert index of the space.
    pub fn indices(&self) -> Vec<OrderedSetPartition> {
        OrderedSetPartition::all(&self.dims)
    }

    pub fn point_index(&self) -> OrderedSetPartition {
        OrderedSetPartition::longest(&self.dims)
    }
}

impl fmt::Display for FlagDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fl_{:?}(C^{})", self.dims, self.n())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename = "complex_flag")]
struct FlagJson {
    dims: Vec<u32>,
}

impl Serialize for FlagDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FlagJson {
            dims: self.dims.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FlagDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FlagJson::deserialize(d)?;
        Self::new(j.dims).map_err(serde::de::Error::custom)
    }
}

/// `∂_i p = (p - s_i p) / (x_i - x_{i+1})`.
pub fn divided_difference(i: usize, p: &SparsePolynomial) -> SparsePolynomial {
    p.divided_difference(i)
}

/// Apply `∂_{a_1} ∘ .. ∘ ∂_{a_l}` for the word `a_1 .. a_l` (rightmost first).
pub fn divided_difference_word(word: &[usize], p: &SparsePolynomial) -> SparsePolynomial {
    word.iter()
        .rev()
        .fold(p.clone(), |acc, &i| acc.divided_difference(i))
}

/// A Schubert polynomial `S_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertPolynomial {
    perm: Permutation,
    poly: SparsePolynomial,
}

impl SchubertPolynomial {
    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn polynomial(&self) -> &SparsePolynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> SparsePolynomial {
        self.poly
    }
}

/// The staircase monomial `x_1^{n-1} x_2^{n-2} .. x_{n-1}` = `S_{w0}` in `S_n`.
pub fn staircase(n: usize) -> SparsePolynomial {
    let exps: Vec<u32> = (1..n).rev().map(|e| e as u32).collect();
    SparsePolynomial::monomial(&exps)
}

/// `S_w = ∂_{w^{-1} w0} S_{w0}`, using a reduced word of `w^{-1} w0`.
pub fn schubert_polynomial(w: &Permutation) -> SchubertPolynomial {
    let n = w.size();
    let v = w.inverse().compose(&Permutation::longest(n));
    let poly = divided_difference_word(&v.reduced_word(), &staircase(n));
    SchubertPolynomial {
        perm: w.clone(),
        poly,
    }
}

/// Same as [`schubert_polynomial`] along a caller-chosen reduced word of `w^{-1} w0`.
pub fn schubert_polynomial_with_word(
    w: &Permutation,
    word: &[usize],
) -> Result<SchubertPolynomial> {
    let n = w.size();
    let v = w.inverse().compose(&Permutation::longest(n));
    let product = word.iter().try_fold(Permutation::identity(n), |acc, &i| {
        (1..n)
            .contains(&i)
            .then(|| acc.compose(&Permutation::simple(i, n)))
    });
    if word.len() as u64 != v.length() || product.as_ref() != Some(&v) {
        return Err(Error::InvalidPermutation(
            word.iter().map(|&i| i as u32).collect(),
        ));
    }
    Ok(SchubertPolynomial {
        perm: w.clone(),
        poly: divided_difference_word(word, &staircase(n)),
    })
}

/// Memoized Schubert polynomials keyed by the trimmed permutation, computed by
/// the transition recursion
/// `S_w = x_r S_v + Σ_{q<r, l(v t_qr) = l(w)} S_{v t_qr}`
/// where `r` is the last descent of `w`, `s` the last position after `r` with
/// `w(s) < w(r)`, and `v = w t_rs`.
///
/// Entries are inserted only once fully computed, so concurrent readers never
/// see a partial polynomial.
#[derive(Default)]
pub struct SchubertTable {
    cache: RwLock<HashMap<Permutation, Arc<SparsePolynomial>>>,
}

impl SchubertTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide shared table.
    pub fn global() -> &'static SchubertTable {
        static TABLE: OnceLock<SchubertTable> = OnceLock::new();
        TABLE.get_or_init(SchubertTable::new)
    }

    pub fn get(&self, w: &Permutation) -> Arc<SparsePolynomial> {
        let w = w.trimmed();
        if let Some(p) = self.cache.read().expect("schubert table poisoned").get(&w) {
            return p.clone();
        }
        let poly = Arc::new(self.compute(&w));
        self.cache
            .write()
            .expect("schubert table poisoned")
            .entry(w)
            .or_insert(poly)
            .clone()
    }

    fn compute(&self, w: &Permutation) -> SparsePolynomial {
        let Some(&r) = w.descents().last() else {
            return SparsePolynomial::one();
        };
        let wr = w.apply(r);
        let s = (r + 1..=w.size())
            .filter(|&j| w.apply(j) < wr)
            .max()
            .expect("a descent at r has a smaller value after it");
        let v = w.swap_positions(r, s);
        let mut out = &SparsePolynomial::var(r) * &self.get(&v);
        let vr = v.apply(r);
        for q in 1..r {
            let vq = v.apply(q);
            if vq < vr && !(q + 1..r).any(|j| (vq..vr).contains(&v.apply(j)) && v.apply(j) != vq) {
                out = &out + &self.get(&v.swap_positions(q, r));
            }
        }
        out
    }
}

/// Expand `p` in the Schubert basis of `S_n` by triangular elimination: the
/// lexicographically smallest monomial of `S_w` is `x^{code(w)}` with
/// coefficient 1, so repeatedly subtracting `c S_w` for the smallest remaining
/// monomial `c x^α` (with `code(w) = α`) terminates.
pub fn expand_in_schubert_basis(
    p: &SparsePolynomial,
    n: usize,
) -> Result<BTreeMap<Permutation, BigInt>> {
    for (m, _) in p.terms() {
        let outside = m
            .exponents()
            .iter()
            .enumerate()
            .any(|(i, &e)| e as usize + i + 1 > n);
        if outside {
            return Err(Error::SupportOutsideStaircase {
                exponents: m.exponents().to_vec(),
                n: n as u32,
            });
        }
    }
    let table = SchubertTable::global();
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.min_term() {
        let (m, c) = (m.clone(), c.clone());
        let w = Permutation::from_code(m.exponents());
        rest = &rest - &table.get(&w).scale(&c);
        assert!(
            rest.coeff(&m).is_zero(),
            "leading monomial of S_{w} is not its code monomial"
        );
        out.insert(w.extended(n), c);
    }
    Ok(out)
}

/// Smallest `m ≥ n` such that every monomial of `p` lies under the staircase of `S_m`.
pub fn ambient_size(p: &SparsePolynomial, n: usize) -> usize {
    p.terms()
        .flat_map(|(m, _)| {
            m.exponents()
                .iter()
                .enumerate()
                .map(|(i, &e)| e as usize + i + 1)
                .collect::<Vec<_>>()
        })
        .fold(n, usize::max)
}

/// An integer combination of Schubert classes of `Fl_D(C^n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FlagClass {
    space: FlagDescriptor,
    terms: BTreeMap<OrderedSetPartition, BigInt>,
}

impl FlagClass {
    pub fn zero(space: FlagDescriptor) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: FlagDescriptor) -> Self {
        let id = OrderedSetPartition::identity(space.dims());
        Self::schubert(space, &id).expect("identity has the right block sizes")
    }

    pub fn schubert(space: FlagDescriptor, index: &OrderedSetPartition) -> Result<Self> {
        Self::from_terms(space, [(index.clone(), BigInt::one())])
    }

    /// The class indexed by a minimal coset representative.
    pub fn from_permutation(space: FlagDescriptor, w: &Permutation) -> Result<Self> {
        let index = OrderedSetPartition::from_permutation(w, space.dims())?;
        Self::schubert(space, &index)
    }

    pub fn from_terms(
        space: FlagDescriptor,
        terms: impl IntoIterator<Item = (OrderedSetPartition, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(space);
        for (index, c) in terms {
            out.space.check(&index)?;
            add_into(&mut out.terms, index, c);
        }
        Ok(out)
    }

    pub fn space(&self) -> &FlagDescriptor {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrderedSetPartition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &OrderedSetPartition) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_default()
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

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (i, a) in &self.terms {
            add_into(&mut out.terms, i.clone(), a * c);
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let dim = self.space.dimension();
        let mut out = Self::zero(self.space.clone());
        for (i, ca) in &self.terms {
            for (j, cb) in &other.terms {
                if i.length() + j.length() > dim {
                    continue;
                }
                let coeff = ca * cb;
                for (k, c) in basis_product(&self.space, i, j) {
                    add_into(&mut out.terms, k, &coeff * c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.space.clone()), |acc, _| {
            acc.multiply(self).expect("same space")
        })
    }

    /// Coefficient of the point class (the longest coset representative).
    pub fn integrate(&self) -> BigInt {
        self.coeff(&self.space.point_index())
    }

    /// `Σ c_I S_{w(I)}` as a polynomial.
    pub fn to_polynomial(&self) -> SparsePolynomial {
        let table = SchubertTable::global();
        self.terms
            .iter()
            .fold(SparsePolynomial::zero(), |acc, (i, c)| {
                &acc + &table.get(&i.to_permutation()).scale(c)
            })
    }

    /// The same class on `Fl_(k,l)` through the Grassmannian dictionary.
    pub fn from_grassmann(class: &GrassmannClass) -> Self {
        let g = class.space();
        let space = FlagDescriptor {
            dims: vec![g.k(), g.l()],
        };
        let mut out = Self::zero(space);
        for (lambda, c) in class.terms() {
            let index = OrderedSetPartition::from_partition(lambda, g.k(), g.l())
                .expect("class terms fit the box");
            add_into(&mut out.terms, index, c.clone());
        }
        out
    }

    /// Inverse of [`FlagClass::from_grassmann`]; needs two blocks.
    pub fn to_grassmann(&self) -> Result<GrassmannClass> {
        if self.space.dims.len() != 2 {
            return Err(Error::InvalidSpace(format!(
                "{} is not a Grassmannian",
                self.space
            )));
        }
        let g = GrassmannianDescriptor::new(self.space.dims[0], self.space.n())?;
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| Ok((i.to_partition()?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        GrassmannClass::from_terms(g, terms)
    }
}

/// Structure constants `σ_I σ_J = Σ_K c^K_{IJ} σ_K` on `space`.
fn basis_product(
    space: &FlagDescriptor,
    i: &OrderedSetPartition,
    j: &OrderedSetPartition,
) -> Vec<(OrderedSetPartition, BigInt)> {
    let table = SchubertTable::global();
    let product = &*table.get(&i.to_permutation()) * &*table.get(&j.to_permutation());
    let n = space.n() as usize;
    let m = ambient_size(&product, n);
    let expansion = expand_in_schubert_basis(&product, m).expect("ambient size covers the support");
    expansion
        .into_iter()
        .filter(|(w, _)| space.is_coset_rep(w))
        .map(|(w, c)| {
            let w = w.trimmed().extended(n);
            (
                OrderedSetPartition::from_permutation(&w, space.dims())
                    .expect("coset representative"),
                c,
            )
        })
        .collect()
}

/// `a · b` on a flag manifold.
pub fn flag_multiply(a: &FlagClass, b: &FlagClass) -> Result<FlagClass> {
    a.multiply(b)
}

/// `∫ a`: coefficient of the point class.
pub fn flag_integrate(a: &FlagClass) -> BigInt {
    a.integrate()
}

/// The degree-one class `σ_{s_r}`; `r` must be one of the partial sums `s_i`.
pub fn divisor_class(space: &FlagDescriptor, r: usize) -> Result<FlagClass> {
    if !space.descent_positions().contains(&r) {
        return Err(Error::IndexOutOfRange {
            what: "divisor",
            index: r as u32,
            max: space.n().saturating_sub(1),
        });
    }
    FlagClass::from_permutation(space.clone(), &Permutation::simple(r, space.n() as usize))
}

/// Monk's rule: `σ_{s_r} σ_w = Σ σ_{w t_ab}` over `a ≤ r < b` with
/// `l(w t_ab) = l(w) + 1`, keeping terms in `S_n`.
pub fn monk_multiply(r: usize, a: &FlagClass) -> Result<FlagClass> {
    let space = a.space().clone();
    divisor_class(&space, r)?;
    let n = space.n() as usize;
    let mut out = FlagClass::zero(space.clone());
    for (index, c) in a.terms() {
        let w = index.to_permutation();
        for lo in 1..=r {
            for hi in r + 1..=n {
                let (wa, wb) = (w.apply(lo), w.apply(hi));
                if wa < wb && !(lo + 1..hi).any(|j| wa < w.apply(j) && w.apply(j) < wb) {
                    let next = w.swap_positions(lo, hi);
                    debug_assert!(space.is_coset_rep(&next));
                    let next = OrderedSetPartition::from_permutation(&next, space.dims())?;
                    add_into(&mut out.terms, next, c.clone());
                }
            }
        }
    }
    Ok(out)
}

/// `c_j(S_i)` for the `i`-th tautological subbundle (rank `s_i`):
/// `(-1)^j e_j(x_1, .., x_{s_i})` expanded in the Schubert basis.
pub fn flag_chern_class(space: &FlagDescriptor, i: usize, j: u32) -> Result<FlagClass> {
    if i == 0 || i > space.dims().len() {
        return Err(Error::IndexOutOfRange {
            what: "bundle",
            index: i as u32,
            max: space.dims().len() as u32,
        });
    }
    let rank = space.partial_sum(i);
    if j > rank {
        return Err(Error::DegreeOutOfRange { degree: j, rank });
    }
    let e = elementary_symmetric(j as usize, rank as usize);
    let sign = BigInt::from(if j.is_multiple_of(2) { 1 } else { -1 });
    let n = space.n() as usize;
    let expansion = expand_in_schubert_basis(&e, ambient_size(&e, n))?;
    let mut out = FlagClass::zero(space.clone());
    for (w, c) in expansion {
        if space.is_coset_rep(&w) {
            let index =
                OrderedSetPartition::from_permutation(&w.trimmed().extended(n), space.dims())?;
            add_into(&mut out.terms, index, &c * &sign);
        }
    }
    Ok(out)
}

/// `e_j(x_1, .., x_m)`.
pub fn elementary_symmetric(j: usize, m: usize) -> SparsePolynomial {
    fn rec(start: usize, left: usize, m: usize, exps: &mut Vec<u32>, out: &mut SparsePolynomial) {
        if left == 0 {
            out.add_term(Monomial::new(exps.clone()), BigInt::one());
            return;
        }
        for v in start..m {
            if m - v < left {
                break;
            }
            exps[v] = 1;
            rec(v + 1, left - 1, m, exps, out);
            exps[v] = 0;
        }
    }
    let mut out = SparsePolynomial::zero();
    rec(0, j, m, &mut vec![0; m], &mut out);
    out
}

impl crate::ring::RingElement for FlagClass {
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other).expect("same space")
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other).expect("same space")
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("same space")
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for FlagClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::schur::write_terms(f, self.terms.iter(), "σ")
    }
}

impl fmt::Debug for FlagClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.space)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct OspTerm {
    pub osp: OrderedSetPartition,
    pub coeff: DecimalInt,
}

impl Serialize for FlagClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<OspTerm> = self
            .terms
            .iter()
            .map(|(i, c)| OspTerm {
                osp: i.clone(),
                coeff: DecimalInt(c.clone()),
            })
            .collect();
        let mut st = s.serialize_struct("FlagClass", 2)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FlagClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            space: FlagDescriptor,
            terms: Vec<OspTerm>,
        }
        let raw = Raw::deserialize(d)?;
        FlagClass::from_terms(raw.space, raw.terms.into_iter().map(|t| (t.osp, t.coeff.0)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(one_line: &[u32]) -> Permutation {
        Permutation::new(one_line.to_vec()).unwrap()
    }

    fn x(i: usize) -> SparsePolynomial {
        SparsePolynomial::var(i)
    }

    #[test]
    fn schubert_polynomial_examples() {
        assert_eq!(
            schubert_polynomial(&Permutation::identity(3)).into_polynomial(),
            SparsePolynomial::one()
        );
        assert_eq!(
            schubert_polynomial(&Permutation::longest(3)).into_polynomial(),
            SparsePolynomial::monomial(&[2, 1])
        );
        assert_eq!(schubert_polynomial(&w(&[2, 1, 3])).into_polynomial(), x(1));
        assert_eq!(
            schubert_polynomial(&w(&[1, 3, 2])).into_polynomial(),
            &x(1) + &x(2)
        );
    }

    #[test]
    fn explicit_word_must_be_reduced_for_the_right_element() {
        let s1 = w(&[2, 1, 3]);
        // w^{-1} w0 = [3,1,2] = s2 s1
        assert_eq!(
            schubert_polynomial_with_word(&s1, &[2, 1])
                .unwrap()
                .into_polynomial(),
            x(1)
        );
        assert!(schubert_polynomial_with_word(&s1, &[1, 2]).is_err());
        assert!(schubert_polynomial_with_word(&s1, &[2]).is_err());
        assert!(schubert_polynomial_with_word(&s1, &[2, 1, 1, 1]).is_err());
    }

    #[test]
    fn transition_table_matches_divided_differences() {
        let table = SchubertTable::new();
        for n in 1..=5 {
            for perm in Permutation::all(n) {
                assert_eq!(
                    *table.get(&perm),
                    schubert_polynomial(&perm).into_polynomial(),
                    "w = {perm}"
                );
            }
        }
    }

    #[test]
    fn code_monomial_is_lex_smallest() {
        let table = SchubertTable::new();
        for perm in Permutation::all(6) {
            let poly = table.get(&perm);
            let (m, c) = poly.min_term().unwrap();
            assert_eq!(m.exponents(), perm.code().as_slice(), "w = {perm}");
            assert!(c.is_one());
        }
    }

    #[test]
    fn expansion_examples() {
        let e = expand_in_schubert_basis(&x(1), 3).unwrap();
        assert_eq!(e, BTreeMap::from([(w(&[2, 1, 3]), BigInt::one())]));
        let p = &x(1).pow(2) + &(&x(1) * &x(2));
        let e = expand_in_schubert_basis(&p, 3).unwrap();
        assert_eq!(
            e,
            BTreeMap::from([
                (w(&[3, 1, 2]), BigInt::one()),
                (w(&[2, 3, 1]), BigInt::one())
            ])
        );
        assert!(expand_in_schubert_basis(&SparsePolynomial::zero(), 3)
            .unwrap()
            .is_empty());
        assert!(matches!(
            expand_in_schubert_basis(&x(1).pow(3), 3),
            Err(Error::SupportOutsideStaircase { .. })
        ));
        assert!(matches!(
            expand_in_schubert_basis(&x(3), 3),
            Err(Error::SupportOutsideStaircase { .. })
        ));
    }

    #[test]
    fn flag_products_on_fl3() {
        let fl3 = FlagDescriptor::complete(3);
        let a = FlagClass::from_permutation(fl3.clone(), &w(&[2, 1, 3])).unwrap();
        let b = FlagClass::from_permutation(fl3.clone(), &w(&[1, 3, 2])).unwrap();
        let expected = FlagClass::from_permutation(fl3.clone(), &w(&[3, 1, 2]))
            .unwrap()
            .add(&FlagClass::from_permutation(fl3.clone(), &w(&[2, 3, 1])).unwrap())
            .unwrap();
        assert_eq!(a.multiply(&b).unwrap(), expected);
        assert_eq!(a.multiply(&FlagClass::one(fl3.clone())).unwrap(), a);
        // σ_{s1} σ_{s2} σ_{s1} = σ_{s1}(σ_{312} + σ_{231}) = σ_{w0}
        assert_eq!(
            a.multiply(&b).unwrap().multiply(&a).unwrap().integrate(),
            BigInt::one()
        );
        assert!(FlagClass::one(fl3).integrate().is_zero());
    }

    #[test]
    fn monk_examples() {
        let fl3 = FlagDescriptor::complete(3);
        let b = FlagClass::from_permutation(fl3.clone(), &w(&[1, 3, 2])).unwrap();
        let a = divisor_class(&fl3, 1).unwrap();
        assert_eq!(monk_multiply(1, &b).unwrap(), a.multiply(&b).unwrap());
        assert_eq!(monk_multiply(1, &FlagClass::one(fl3.clone())).unwrap(), a);
        let g = FlagDescriptor::new(vec![2, 2]).unwrap();
        assert!(monk_multiply(1, &FlagClass::one(g)).is_err());
    }

    #[test]
    fn grassmann_as_flag() {
        let g = GrassmannianDescriptor::new(2, 4).unwrap();
        let lambda = crate::Partition::new(vec![2, 1]).unwrap();
        let dual = crate::Partition::new(vec![1]).unwrap();
        let a = FlagClass::from_grassmann(&GrassmannClass::schubert(g, &lambda).unwrap());
        let b = FlagClass::from_grassmann(&GrassmannClass::schubert(g, &dual).unwrap());
        let prod = a.multiply(&b).unwrap();
        assert_eq!(prod.integrate(), BigInt::one());
        assert_eq!(prod.len(), 1);
        assert_eq!(
            prod.to_grassmann().unwrap(),
            GrassmannClass::schubert(g, &g.top_partition()).unwrap()
        );
    }

    #[test]
    fn chern_classes_of_flag_bundles() {
        let fl3 = FlagDescriptor::complete(3);
        // c_1(S_1) = -x1 = -σ_{s1}
        let c11 = flag_chern_class(&fl3, 1, 1).unwrap();
        assert_eq!(
            c11,
            FlagClass::from_permutation(fl3.clone(), &w(&[2, 1, 3]))
                .unwrap()
                .scale(&BigInt::from(-1))
        );
        // S_3 is trivial of rank 3 on Fl(C^3)
        for j in 1..=3 {
            assert!(flag_chern_class(&fl3, 3, j).unwrap().is_zero(), "j = {j}");
        }
        assert!(flag_chern_class(&fl3, 1, 2).is_err());
        assert!(flag_chern_class(&fl3, 4, 1).is_err());
    }

    #[test]
    fn json_shape() {
        let fl = FlagDescriptor::new(vec![1, 2]).unwrap();
        let c = FlagClass::from_permutation(fl, &w(&[2, 1, 3])).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"space":{"type":"complex_flag","dims":[1,2]},"terms":[{"osp":[[2],[1,3]],"coeff":"1"}]}"#
        );
        let back: FlagClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
