//! Schur functions: Littlewood-Richardson coefficients by tableau enumeration,
//! products in the Schur basis, Pieri rules, Jacobi-Trudi determinants, and a
//! brute-force Schur polynomial used as an independent oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::indexing::Partition;
use crate::poly::{Monomial, SparsePolynomial};
use crate::ring::{determinant, RingElement};
use crate::serial::DecimalInt;

/// Upper bounds on row lengths while growing a shape.
#[derive(Debug, Clone, Default)]
pub(crate) struct ShapeBound {
    /// At most this many rows.
    pub rows: Option<usize>,
    /// At most this many columns.
    pub cols: Option<u32>,
    /// Stay inside this diagram.
    pub inside: Option<Partition>,
}

impl ShapeBound {
    pub fn unbounded() -> Self {
        Self::default()
    }

    pub fn rectangle(rows: u32, cols: u32) -> Self {
        Self {
            rows: Some(rows as usize),
            cols: Some(cols),
            inside: None,
        }
    }

    fn cap(&self, row: usize) -> u32 {
        if self.rows.is_some_and(|k| row >= k) {
            return 0;
        }
        let mut cap = self.cols.unwrap_or(u32::MAX);
        if let Some(nu) = &self.inside {
            cap = cap.min(nu.part(row));
        }
        cap
    }

    fn admits(&self, lambda: &Partition) -> bool {
        (0..lambda.len()).all(|r| lambda.part(r) <= self.cap(r))
    }
}

/// Enumerate Littlewood-Richardson tableaux of content `mu` on top of `lambda`,
/// one letter at a time. Letter `i` is placed as a horizontal strip of `mu_i`
/// boxes; the lattice condition on the reverse reading word becomes
/// `#i in rows <= r  <=  #(i-1) in rows < r` for every row `r`.
/// Returns, for every reachable outer shape `nu`, the number of tableaux
/// (which is `c^nu_{lambda mu}`).
pub(crate) fn lr_expand(
    lambda: &Partition,
    mu: &Partition,
    bound: &ShapeBound,
) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !bound.admits(lambda) {
        return out;
    }
    let shape = lambda.parts().to_vec();
    add_letter(0, &shape, &[], mu.parts(), bound, &mut out);
    out
}

fn add_letter(
    letter: usize,
    shape: &[u32],
    prev_counts: &[u32],
    content: &[u32],
    bound: &ShapeBound,
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == content.len() {
        *out.entry(Partition::from_sorted(shape.to_vec()))
            .or_insert(0) += 1;
        return;
    }
    let mut base = shape.to_vec();
    base.push(0);
    let mut counts = vec![0u32; base.len()];
    let mut strip = StripSearch {
        base: &base,
        prev_counts,
        constrained: letter > 0,
        bound,
        counts: &mut counts,
    };
    strip.place(0, content[letter], 0, 0, &mut |counts| {
        let mut next: Vec<u32> = base.iter().zip(counts).map(|(b, a)| b + a).collect();
        while next.last() == Some(&0) {
            next.pop();
        }
        let next_counts = &counts[..next.len()];
        add_letter(letter + 1, &next, next_counts, content, bound, out);
    });
}

struct StripSearch<'a> {
    base: &'a [u32],
    prev_counts: &'a [u32],
    constrained: bool,
    bound: &'a ShapeBound,
    counts: &'a mut Vec<u32>,
}

impl StripSearch<'_> {
    /// Choose how many boxes of the current letter go into row `row` and below.
    /// `placed` is the number already placed in rows above, `prev_above` the number
    /// of previous-letter boxes in rows above.
    fn place(
        &mut self,
        row: usize,
        remaining: u32,
        placed: u32,
        prev_above: u32,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if remaining == 0 {
            for c in &mut self.counts[row..] {
                *c = 0;
            }
            emit(self.counts);
            return;
        }
        if row == self.base.len() {
            return;
        }
        let len = self.base[row];
        let mut max = remaining;
        if row > 0 {
            max = max.min(self.base[row - 1] - len);
        }
        max = max.min(self.bound.cap(row).saturating_sub(len));
        if self.constrained {
            max = max.min(prev_above.saturating_sub(placed));
        }
        let prev_here = self.prev_counts.get(row).copied().unwrap_or(0);
        for a in (0..=max).rev() {
            self.counts[row] = a;
            self.place(
                row + 1,
                remaining - a,
                placed + a,
                prev_above + prev_here,
                emit,
            );
        }
        self.counts[row] = 0;
    }
}

/// `c^nu_{lambda mu}`: the number of LR tableaux of shape `nu / lambda` and content `mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return BigInt::zero();
    }
    let bound = ShapeBound {
        inside: Some(nu.clone()),
        ..ShapeBound::default()
    };
    lr_expand(lambda, mu, &bound)
        .get(nu)
        .map_or_else(BigInt::zero, |&c| BigInt::from(c))
}

/// A finite integer combination of Schur functions. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    /// The single Schur function `s_lambda`.
    pub fn basis(lambda: Partition) -> Self {
        Self::from_terms([(lambda, BigInt::one())])
    }

    /// Complete homogeneous `h_p = s_(p)`; zero for negative `p`.
    pub fn complete(p: i64) -> Self {
        match p {
            p if p < 0 => Self::zero(),
            0 => Self::one(),
            p => Self::basis(Partition::row(p as u32)),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        add_into(&mut self.terms, lambda, c);
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

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, a)| (l.clone(), a * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }

    /// Product in the ring of symmetric functions.
    pub fn multiply(&self, other: &Self) -> Self {
        schur_multiply(self, other)
    }

    /// Expand into a polynomial in `n` variables using the tableau oracle.
    pub fn to_polynomial(&self, n: usize) -> SparsePolynomial {
        self.terms
            .iter()
            .fold(SparsePolynomial::zero(), |acc, (l, c)| {
                &acc + &oracle_schur_polynomial(l, n).scale(c)
            })
    }
}

pub(crate) fn add_into<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Product of Schur expansions, bilinearly extending the LR rule.
pub fn schur_multiply(a: &SchurExpansion, b: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (lambda, ca) in &a.terms {
        for (mu, cb) in &b.terms {
            let coeff = ca * cb;
            for (nu, c) in basis_product(lambda, mu, &ShapeBound::unbounded()) {
                out.add_term(nu, &coeff * BigInt::from(c));
            }
        }
    }
    out
}

/// `s_lambda * s_mu` restricted by `bound`. The smaller factor is used as the content.
pub(crate) fn basis_product(
    lambda: &Partition,
    mu: &Partition,
    bound: &ShapeBound,
) -> BTreeMap<Partition, u64> {
    if mu.size() <= lambda.size() {
        lr_expand(lambda, mu, bound)
    } else {
        lr_expand(mu, lambda, bound)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    /// Horizontal strip: multiplication by `h_p`.
    Row,
    /// Vertical strip: multiplication by `e_p`.
    Column,
}

/// Pieri rule: `s_lambda * h_p` (row) or `s_lambda * e_p` (column), by direct
/// enumeration of strips.
pub fn pieri(lambda: &Partition, p: u32, kind: StripKind) -> SchurExpansion {
    match kind {
        StripKind::Row => SchurExpansion::from_terms(
            horizontal_strips(lambda, p)
                .into_iter()
                .map(|nu| (nu, BigInt::one())),
        ),
        StripKind::Column => SchurExpansion::from_terms(
            horizontal_strips(&lambda.conjugate(), p)
                .into_iter()
                .map(|nu| (nu.conjugate(), BigInt::one())),
        ),
    }
}

fn horizontal_strips(lambda: &Partition, p: u32) -> Vec<Partition> {
    fn rec(
        lambda: &Partition,
        row: usize,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        let base = lambda.part(row);
        if row > lambda.len() {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let upper = if row == 0 {
            base + left
        } else {
            lambda.part(row - 1).min(base + left)
        };
        for len in base..=upper {
            cur.push(len);
            rec(lambda, row + 1, left - (len - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, p, &mut Vec::new(), &mut out);
    out
}

/// `det(h_{lambda_i + j - i})` expanded in the Schur basis.
pub fn jacobi_trudi(lambda: &Partition) -> SchurExpansion {
    let l = lambda.len();
    let matrix: Vec<Vec<SchurExpansion>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| SchurExpansion::complete(lambda.part(i) as i64 + j as i64 - i as i64))
                .collect()
        })
        .collect();
    determinant(&matrix, &SchurExpansion::one())
}

/// `s_lambda(x_1, .., x_n)` as the generating function of semistandard tableaux
/// of shape `lambda` with entries in `1..=n`.
pub fn oracle_schur_polynomial(lambda: &Partition, n: usize) -> SparsePolynomial {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (0..lambda.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<u32>> = (0..lambda.len())
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();
    let mut out = SparsePolynomial::zero();
    let mut content = vec![0u32; n];
    fill_ssyt(&cells, 0, n as u32, &mut filling, &mut content, &mut out);
    out
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    idx: usize,
    n: u32,
    filling: &mut Vec<Vec<u32>>,
    content: &mut Vec<u32>,
    out: &mut SparsePolynomial,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        out.add_term(Monomial::new(content.clone()), BigInt::one());
        return;
    };
    let left = if c > 0 { filling[r][c - 1] } else { 1 };
    let above = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=n {
        filling[r][c] = v;
        content[v as usize - 1] += 1;
        fill_ssyt(cells, idx + 1, n, filling, content, out);
        content[v as usize - 1] -= 1;
    }
}

impl RingElement for SchurExpansion {
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.multiply(other)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), "s")
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn write_terms<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a BigInt)>,
    symbol: &str,
) -> fmt::Result {
    use num_traits::Signed;
    let mut any = false;
    for (k, c) in terms {
        let abs = c.abs();
        match (any, c.is_negative()) {
            (false, true) => write!(f, "-")?,
            (true, true) => write!(f, " - ")?,
            (true, false) => write!(f, " + ")?,
            (false, false) => {}
        }
        if !abs.is_one() {
            write!(f, "{abs}*")?;
        }
        write!(f, "{symbol}{k}")?;
        any = true;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct PartitionTerm {
    partition: Partition,
    coeff: DecimalInt,
}

#[derive(Serialize, Deserialize)]
struct SchurJson {
    terms: Vec<PartitionTerm>,
}

pub(crate) fn partition_terms_to_json(
    terms: &BTreeMap<Partition, BigInt>,
) -> Vec<impl Serialize + '_> {
    terms
        .iter()
        .map(|(l, c)| PartitionTerm {
            partition: l.clone(),
            coeff: DecimalInt(c.clone()),
        })
        .collect()
}

pub(crate) fn partition_terms_from_json<'de, D: Deserializer<'de>>(
    d: D,
) -> Result<BTreeMap<Partition, BigInt>, D::Error> {
    let terms = Vec::<PartitionTerm>::deserialize(d)?;
    let mut out = BTreeMap::new();
    for t in terms {
        add_into(&mut out, t.partition, t.coeff.0);
    }
    Ok(out)
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SchurExpansion", 1)?;
        st.serialize_field("terms", &partition_terms_to_json(&self.terms))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = SchurJson::deserialize(d)?;
        Ok(Self::from_terms(
            json.terms.into_iter().map(|t| (t.partition, t.coeff.0)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[u32]) -> SchurExpansion {
        SchurExpansion::basis(p(parts))
    }

    fn sum(items: &[&[u32]]) -> SchurExpansion {
        items
            .iter()
            .fold(SchurExpansion::zero(), |acc, l| acc.add(&s(l)))
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[]), &p(&[1])), BigInt::one());
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), BigInt::one());
        assert_eq!(
            lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])),
            BigInt::from(2)
        );
        assert!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 2])).is_zero());
        assert!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 1, 1])).is_zero());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(s(&[1]).multiply(&s(&[1])), sum(&[&[2], &[1, 1]]));
        assert_eq!(s(&[3, 1]).multiply(&SchurExpansion::one()), s(&[3, 1]));
        assert_eq!(s(&[2]).multiply(&s(&[1, 1])), sum(&[&[3, 1], &[2, 1, 1]]));
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri(&p(&[1]), 1, StripKind::Row), sum(&[&[2], &[1, 1]]));
        assert_eq!(pieri(&p(&[]), 3, StripKind::Row), s(&[3]));
        assert_eq!(
            pieri(&p(&[2]), 2, StripKind::Column),
            sum(&[&[3, 1], &[2, 1, 1]])
        );
    }

    #[test]
    fn pieri_agrees_with_multiplication() {
        for size in 0..=4 {
            for lambda in Partition::all_of_size(size) {
                for k in 1..=3 {
                    assert_eq!(
                        pieri(&lambda, k, StripKind::Row),
                        s(lambda.parts()).multiply(&s(&[k]))
                    );
                    assert_eq!(
                        pieri(&lambda, k, StripKind::Column),
                        s(lambda.parts()).multiply(&SchurExpansion::basis(Partition::column(k)))
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(jacobi_trudi(&p(&[1])), s(&[1]));
        assert_eq!(jacobi_trudi(&p(&[1, 1])), s(&[1, 1]));
        assert_eq!(jacobi_trudi(&p(&[2, 2])), s(&[2, 2]));
        assert_eq!(jacobi_trudi(&p(&[])), SchurExpansion::one());
    }

    #[test]
    fn oracle_examples() {
        let x = SparsePolynomial::var;
        assert_eq!(oracle_schur_polynomial(&p(&[1]), 2), &x(1) + &x(2));
        assert!(oracle_schur_polynomial(&p(&[1, 1]), 1).is_zero());
        let expected = &(&x(1).pow(2) + &(&x(1) * &x(2))) + &x(2).pow(2);
        assert_eq!(oracle_schur_polynomial(&p(&[2]), 2), expected);
        assert_eq!(oracle_schur_polynomial(&p(&[]), 3), SparsePolynomial::one());
    }

    #[test]
    fn bounded_expansion_truncates() {
        let in_box = lr_expand(&p(&[1]), &p(&[1]), &ShapeBound::rectangle(2, 2));
        assert_eq!(in_box.len(), 2);
        let out_of_box = lr_expand(&p(&[2]), &p(&[1, 1]), &ShapeBound::rectangle(2, 2));
        assert!(out_of_box.is_empty());
    }

    #[test]
    fn json_uses_decimal_strings() {
        let e = sum(&[&[2], &[1, 1], &[1, 1]]);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"partition":[1,1],"coeff":"2"},{"partition":[2],"coeff":"1"}]}"#
        );
        let back: SchurExpansion = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }
}
