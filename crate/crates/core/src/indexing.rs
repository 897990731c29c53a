//! Index sets for Schubert classes: partitions, ordered set partitions and
//! permutations, together with the doubling maps that relate a real even
//! (or quaternionic) Schubert index to its complex counterpart.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so two partitions are equal iff their parts are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The `rows x cols` rectangle `(cols^rows)`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        Self::from_sorted(vec![cols; rows as usize])
    }

    /// Single row `(p)`.
    pub fn row(p: u32) -> Self {
        Self::from_sorted(vec![p])
    }

    /// Single column `(1^p)`.
    pub fn column(p: u32) -> Self {
        Self::from_sorted(vec![1; p as usize])
    }

    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let conj = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count() as u32)
            .collect();
        Self::from_sorted(conj)
    }

    pub fn fits_in(&self, rows: u32, cols: u32) -> bool {
        self.len() <= rows as usize && self.part(0) <= cols
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    fn check_box(&self, rows: u32, cols: u32) -> Result<()> {
        if self.fits_in(rows, cols) {
            Ok(())
        } else {
            Err(Error::BoxOverflow {
                partition: self.parts.clone(),
                rows,
                cols,
            })
        }
    }

    /// Complement of the diagram inside the `rows x cols` box, rotated by 180 degrees.
    pub fn complement(&self, rows: u32, cols: u32) -> Result<Self> {
        self.check_box(rows, cols)?;
        let parts = (0..rows as usize)
            .rev()
            .map(|i| cols - self.part(i))
            .collect();
        Ok(Self::from_sorted(parts))
    }

    /// Subdivide every box into a 2x2 block: `(a1, a2, ..) -> (2a1, 2a1, 2a2, 2a2, ..)`.
    pub fn double(&self) -> Self {
        Self::from_sorted(self.parts.iter().flat_map(|&p| [2 * p, 2 * p]).collect())
    }

    /// Inverse of [`Partition::double`].
    pub fn halve(&self) -> Result<Self> {
        let not_double = || Error::NotADouble {
            partition: self.parts.clone(),
        };
        if !self.parts.len().is_multiple_of(2) {
            return Err(not_double());
        }
        self.parts
            .chunks(2)
            .map(|pair| {
                if pair[0] == pair[1] && pair[0] % 2 == 0 {
                    Ok(pair[0] / 2)
                } else {
                    Err(not_double())
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_sorted)
    }

    pub fn is_double(&self) -> bool {
        self.halve().is_ok()
    }

    /// All partitions of `n`, in the canonical order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions fitting in the `rows x cols` box, in the canonical order.
    pub fn all_in_box(rows: u32, cols: u32) -> Vec<Partition> {
        fn rec(row: u32, rows: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row == rows {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(row + 1, rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

/// Canonical order: by size, then lexicographically by parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// An ordered list of disjoint blocks covering `{1, .., N}`. Blocks are kept
/// sorted internally; empty blocks are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<u32>>,
}

/// `r(i, k) = #{l in I_1 ∪ .. ∪ I_i : l <= k}` for every block prefix `i` and
/// ground element `k`, stored 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFunction {
    values: Vec<Vec<u32>>,
}

impl RankFunction {
    pub fn get(&self, i: usize, k: usize) -> u32 {
        self.values[i - 1][k - 1]
    }

    pub fn blocks(&self) -> usize {
        self.values.len()
    }

    pub fn ground_size(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x as usize > n {
                return Err(Error::InvalidOsp(format!(
                    "element {x} outside the ground set 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::InvalidOsp(format!("element {x} appears twice")));
            }
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Self { blocks })
    }

    /// The identity-ordered OSP `({1..s1}, {s1+1..s2}, ..)` for block sizes `dims`.
    pub fn identity(dims: &[u32]) -> Self {
        let mut next = 1;
        let blocks = dims
            .iter()
            .map(|&d| {
                let b: Vec<u32> = (next..next + d).collect();
                next += d;
                b
            })
            .collect();
        Self { blocks }
    }

    /// The OSP of maximal length for block sizes `dims`: the first block takes the
    /// largest elements, the last block the smallest.
    pub fn longest(dims: &[u32]) -> Self {
        let mut top: u32 = dims.iter().sum();
        let blocks = dims
            .iter()
            .map(|&d| {
                let b: Vec<u32> = (top - d + 1..=top).collect();
                top -= d;
                b
            })
            .collect();
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    pub fn block_sizes(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.len() as u32).collect()
    }

    /// Inter-block inversion count `#{(a, b) : a ∈ I_i, b ∈ I_j, i < j, a > b}`.
    pub fn length(&self) -> u64 {
        let mut total = 0u64;
        for (i, bi) in self.blocks.iter().enumerate() {
            for bj in &self.blocks[i + 1..] {
                for &a in bi {
                    total += bj.iter().take_while(|&&b| b < a).count() as u64;
                }
            }
        }
        total
    }

    /// `r(i, k)` with `i` a 1-based block index and `k` a ground element.
    pub fn rank(&self, i: u32, k: u32) -> Result<u32> {
        let m = self.blocks.len() as u32;
        let n = self.ground_size();
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange {
                what: "block",
                index: i,
                max: m,
            });
        }
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                what: "ground element",
                index: k,
                max: n,
            });
        }
        Ok(self.blocks[..i as usize]
            .iter()
            .map(|b| b.iter().take_while(|&&x| x <= k).count() as u32)
            .sum())
    }

    pub fn rank_function(&self) -> RankFunction {
        let n = self.ground_size() as usize;
        let mut owner = vec![0usize; n + 1];
        for (j, b) in self.blocks.iter().enumerate() {
            for &x in b {
                owner[x as usize] = j;
            }
        }
        let values = (0..self.blocks.len())
            .map(|i| {
                let mut acc = 0;
                (1..=n)
                    .map(|k| {
                        if owner[k] <= i {
                            acc += 1;
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        RankFunction { values }
    }

    /// Replace each `i ∈ I_j` by the pair `2i-1, 2i`.
    pub fn double(&self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().flat_map(|&i| [2 * i - 1, 2 * i]).collect())
            .collect();
        Self { blocks }
    }

    /// Inverse of [`OrderedSetPartition::double`].
    pub fn halve(&self) -> Result<Self> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                if b.len() % 2 != 0 {
                    return None;
                }
                b.chunks(2)
                    .map(|p| (p[0] % 2 == 1 && p[1] == p[0] + 1).then_some(p[1] / 2))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotADoubleIndex {
                index: self.to_string(),
            })?;
        Ok(Self { blocks })
    }

    pub fn is_double(&self) -> bool {
        self.halve().is_ok()
    }

    /// Minimal-length coset representative: the blocks, each sorted, concatenated
    /// in one-line notation. Its length equals [`OrderedSetPartition::length`].
    pub fn to_permutation(&self) -> Permutation {
        Permutation {
            one_line: self.blocks.iter().flatten().copied().collect(),
        }
    }

    /// Cut the one-line notation of `w` into consecutive blocks of sizes `dims`.
    /// Fails unless `w` is increasing within each block.
    pub fn from_permutation(w: &Permutation, dims: &[u32]) -> Result<Self> {
        let total: u32 = dims.iter().sum();
        let w = w.extended(total as usize);
        if w.size() != total as usize {
            return Err(Error::InvalidOsp(format!(
                "permutation {w} does not lie in S_{total}"
            )));
        }
        let mut blocks = Vec::with_capacity(dims.len());
        let mut start = 0usize;
        for &d in dims {
            let block = w.one_line[start..start + d as usize].to_vec();
            if block.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::InvalidOsp(format!(
                    "permutation {w} is not a minimal coset representative for block sizes {dims:?}"
                )));
            }
            blocks.push(block);
            start += d as usize;
        }
        Ok(Self { blocks })
    }

    /// Grassmannian dictionary: `λ ⊆ k x l` maps to the two-block OSP whose first
    /// block is `{λ_k + 1, λ_{k-1} + 2, .., λ_1 + k}`.
    pub fn from_partition(lambda: &Partition, k: u32, l: u32) -> Result<Self> {
        lambda.check_box(k, l)?;
        let first: Vec<u32> = (1..=k).map(|i| lambda.part((k - i) as usize) + i).collect();
        let second: Vec<u32> = (1..=k + l).filter(|x| !first.contains(x)).collect();
        Ok(Self {
            blocks: vec![first, second],
        })
    }

    /// Inverse of [`OrderedSetPartition::from_partition`]; requires exactly two blocks.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.blocks.len() != 2 {
            return Err(Error::InvalidOsp(format!(
                "{self} has {} blocks, the Grassmannian dictionary needs 2",
                self.blocks.len()
            )));
        }
        let first = &self.blocks[0];
        let k = first.len();
        let parts = (0..k).rev().map(|j| first[j] - (j as u32 + 1)).collect();
        Ok(Partition::from_sorted(parts))
    }

    /// All OSPs with the given block sizes.
    pub fn all(dims: &[u32]) -> Vec<Self> {
        fn rec(
            dims: &[u32],
            rest: &BTreeSet<u32>,
            cur: &mut Vec<Vec<u32>>,
            out: &mut Vec<OrderedSetPartition>,
        ) {
            let Some((&d, tail)) = dims.split_first() else {
                out.push(OrderedSetPartition {
                    blocks: cur.clone(),
                });
                return;
            };
            let avail: Vec<u32> = rest.iter().copied().collect();
            for subset in combinations(&avail, d as usize) {
                let mut next = rest.clone();
                for x in &subset {
                    next.remove(x);
                }
                cur.push(subset);
                rec(tail, &next, cur, out);
                cur.pop();
            }
        }
        let n: u32 = dims.iter().sum();
        let mut out = Vec::new();
        rec(dims, &(1..=n).collect(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

fn combinations(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<u32>> = combinations(&items[1..], k - 1)
        .into_iter()
        .map(|mut c| {
            c.insert(0, items[0]);
            c
        })
        .collect();
    with.extend(combinations(&items[1..], k));
    with
}

/// Ordered by length, then by blocks.
impl Ord for OrderedSetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.blocks.cmp(&other.blocks))
    }
}

impl PartialOrd for OrderedSetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, b) in self.blocks.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (i, x) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for OrderedSetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrderedSetPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<u32>>::deserialize(d)?;
        OrderedSetPartition::new(blocks).map_err(serde::de::Error::custom)
    }
}

/// A permutation of `{1, .., n}` in one-line notation. Points beyond `n` are
/// treated as fixed, so `[2,1]` and `[2,1,3]` describe the same element of
/// `S_∞` (compare with [`Permutation::trimmed`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn new(one_line: impl Into<Vec<u32>>) -> Result<Self> {
        let one_line = one_line.into();
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x as usize > n || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::InvalidPermutation(one_line));
            }
        }
        Ok(Self { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            one_line: (1..=n as u32).collect(),
        }
    }

    /// The longest element `w0 = [n, n-1, .., 1]`.
    pub fn longest(n: usize) -> Self {
        Self {
            one_line: (1..=n as u32).rev().collect(),
        }
    }

    /// Simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        let mut w = Self::identity(n.max(i + 1));
        w.one_line.swap(i - 1, i);
        w
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for 1-based `i`; fixed beyond the stored range.
    pub fn apply(&self, i: usize) -> u32 {
        self.one_line.get(i - 1).copied().unwrap_or(i as u32)
    }

    /// Inversion count.
    pub fn length(&self) -> u64 {
        let w = &self.one_line;
        let mut inv = 0u64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.one_line.len()];
        for (i, &x) in self.one_line.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Self { one_line: inv }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.size().max(other.size());
        Self {
            one_line: (1..=n)
                .map(|i| self.apply(other.apply(i) as usize))
                .collect(),
        }
    }

    /// Right multiplication by the transposition `t_{ab}`: swaps positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut w = self.extended(a.max(b));
        w.one_line.swap(a - 1, b - 1);
        w
    }

    /// Pad with fixed points up to size `n` (no-op if already at least `n`).
    pub fn extended(&self, n: usize) -> Self {
        let mut one_line = self.one_line.clone();
        for i in one_line.len()..n {
            one_line.push(i as u32 + 1);
        }
        Self { one_line }
    }

    /// Drop trailing fixed points; the canonical representative in `S_∞`.
    pub fn trimmed(&self) -> Self {
        let mut one_line = self.one_line.clone();
        while let Some(&last) = one_line.last() {
            if last as usize == one_line.len() {
                one_line.pop();
            } else {
                break;
            }
        }
        Self { one_line }
    }

    /// True iff `w` fixes every point beyond `n`.
    pub fn lies_in(&self, n: usize) -> bool {
        self.trimmed().size() <= n
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.one_line
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}`, trailing zeros dropped.
    pub fn code(&self) -> Vec<u32> {
        let w = &self.one_line;
        let mut code: Vec<u32> = (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count() as u32)
            .collect();
        while code.last() == Some(&0) {
            code.pop();
        }
        code
    }

    /// The unique permutation with the given Lehmer code.
    pub fn from_code(code: &[u32]) -> Self {
        let n = code
            .iter()
            .enumerate()
            .map(|(i, &c)| i + c as usize + 1)
            .max()
            .unwrap_or(0);
        let mut avail: Vec<u32> = (1..=n as u32).collect();
        let mut one_line = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0) as usize;
            one_line.push(avail.remove(c));
        }
        Self { one_line }
    }

    /// A reduced word `a_1 .. a_l` with `w = s_{a_1} ∘ .. ∘ s_{a_l}`, peeling off
    /// right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.descents().last() {
            word.push(i);
            w.one_line.swap(i - 1, i);
        }
        word.reverse();
        word
    }

    /// A reduced word obtained by peeling off left descents (generally different from
    /// [`Permutation::reduced_word`]).
    pub fn reduced_word_left(&self) -> Vec<usize> {
        let inv = self.inverse();
        let mut word = inv.reduced_word();
        word.reverse();
        word
    }

    /// All reduced words of `w`.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        let descents = self.descents();
        if descents.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in descents {
            let mut v = self.clone();
            v.one_line.swap(i - 1, i);
            for mut word in v.all_reduced_words() {
                word.push(i);
                out.push(word);
            }
        }
        out
    }

    /// All permutations of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(n: usize, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation {
                    one_line: cur.clone(),
                });
                return;
            }
            for x in 1..=n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x as u32);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let one_line = Vec::<u32>::deserialize(d)?;
        Permutation::new(one_line).map_err(serde::de::Error::custom)
    }
}
