//! Elements of the symmetric group `S_n` and the hyperoctahedral group `B_n`
//! in window (one-line) notation, with Coxeter length, descent sets and the
//! left parabolic decomposition `w = (_J w)(^J w)`.
//!
//! Type A generators are `s_1, …, s_{n-1}` (adjacent transpositions); type B
//! adds `s_0 = [-1, 2, …, n]`. A signed permutation is stored only through its
//! window; the extended map on `[-n, n]` is derived on demand.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
}

impl Kind {
    /// Smallest generator index for this family.
    pub fn first_generator(self) -> usize {
        match self {
            Kind::A => 1,
            Kind::B => 0,
        }
    }

    /// Order of the group of rank `n`, if it fits in a `u128`.
    pub fn group_order(self, n: usize) -> u128 {
        let fact: u128 = (1..=n as u128).product();
        match self {
            Kind::A => fact,
            Kind::B => fact << n,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::A => f.write_str("A"),
            Kind::B => f.write_str("B"),
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            other => Err(Error::Parse(format!("unknown group kind {other:?}"))),
        }
    }
}

/// Largest rank an [`IndexSet`] can describe (generators fit in a `u64`).
pub const MAX_INDEX_RANK: usize = 64;

/// A set of generator indices, `⊆ [1, n-1]` for type A and `⊆ [0, n-1]` for
/// type B, stored as a bitmask (bit `i` stands for `s_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet {
    kind: Kind,
    n: usize,
    bits: u64,
}

impl IndexSet {
    pub fn new(kind: Kind, n: usize, members: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut set = Self::empty(kind, n)?;
        for m in members {
            set.check_index(m)?;
            set.bits |= 1 << m;
        }
        Ok(set)
    }

    pub fn empty(kind: Kind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if n > MAX_INDEX_RANK {
            return Err(Error::OutOfRange {
                value: n as i64,
                n: MAX_INDEX_RANK,
            });
        }
        Ok(IndexSet { kind, n, bits: 0 })
    }

    /// Every generator index of the group.
    pub fn full(kind: Kind, n: usize) -> Result<Self> {
        let mut set = Self::empty(kind, n)?;
        set.bits = Self::universe_bits(kind, n);
        Ok(set)
    }

    pub fn from_bits(kind: Kind, n: usize, bits: u64) -> Result<Self> {
        let mut set = Self::empty(kind, n)?;
        let stray = bits & !Self::universe_bits(kind, n);
        if stray != 0 {
            return Err(Error::InvalidIndex {
                kind,
                n,
                index: stray.trailing_zeros() as i64,
            });
        }
        set.bits = bits;
        Ok(set)
    }

    /// Bitmask of all valid generator indices.
    pub fn universe_bits(kind: Kind, n: usize) -> u64 {
        let below_n = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        match kind {
            Kind::A => below_n & !1,
            Kind::B => below_n,
        }
    }

    /// Parses a comma-separated list of indices; the empty string is `∅`.
    pub fn parse(kind: Kind, n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::empty(kind, n);
        }
        let members = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, n, members)
    }

    fn check_index(&self, i: i64) -> Result<()> {
        let lo = self.kind.first_generator() as i64;
        if i < lo || i >= self.n as i64 {
            return Err(Error::InvalidIndex {
                kind: self.kind,
                n: self.n,
                index: i,
            });
        }
        Ok(())
    }

    /// All subsets of the generator range, in increasing bitmask order.
    pub fn all(kind: Kind, n: usize) -> Result<impl Iterator<Item = IndexSet>> {
        let universe = Self::universe_bits(kind, n);
        Self::empty(kind, n)?;
        let shift = kind.first_generator();
        let count = 1u64 << (universe.count_ones());
        Ok((0..count).map(move |k| IndexSet {
            kind,
            n,
            bits: k << shift,
        }))
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: i64) -> bool {
        (0..64).contains(&i) && self.bits & (1 << i) != 0
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64usize).filter(move |&i| self.bits & (1 << i) != 0)
    }

    pub fn with(&self, i: i64) -> Result<Self> {
        self.check_index(i)?;
        Ok(IndexSet {
            bits: self.bits | (1 << i),
            ..*self
        })
    }

    pub fn without(&self, i: i64) -> Self {
        if (0..64).contains(&i) {
            IndexSet {
                bits: self.bits & !(1 << i),
                ..*self
            }
        } else {
            *self
        }
    }

    pub fn union(&self, other: &IndexSet) -> Self {
        IndexSet {
            bits: self.bits | other.bits,
            ..*self
        }
    }

    /// Complement inside the generator range.
    pub fn complement(&self) -> Self {
        IndexSet {
            bits: !self.bits & Self::universe_bits(self.kind, self.n),
            ..*self
        }
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Whether `u` lies in the parabolic subgroup generated by `{s_j : j ∈ self}`.
    ///
    /// `s_i` links positions `i` and `i+1` (and `s_0` links `1` with `-1`), so
    /// membership means every value stays in the block of its position, with
    /// sign changes only allowed inside the block that is linked to `0`.
    pub fn contains_element<E: GroupElement>(&self, u: &E) -> bool {
        let n = u.rank();
        if n != self.n {
            return false;
        }
        let mut block = vec![1usize; n + 1];
        for i in 2..=n {
            block[i] = if self.contains(i as i64 - 1) {
                block[i - 1]
            } else {
                i
            };
        }
        let signed_block_ok = |i: usize| self.contains(0) && block[i] == 1;
        (1..=n).all(|i| {
            let v = u.value(i as i64);
            let a = v.unsigned_abs() as usize;
            block[a] == block[i] && (v > 0 || signed_block_ok(i))
        })
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Common interface to both families of Coxeter groups.
pub trait GroupElement: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    const KIND: Kind;

    fn rank(&self) -> usize;

    /// The window `[σ(1), …, σ(n)]`.
    fn window(&self) -> &[i32];

    fn identity(n: usize) -> Self;

    fn from_window(window: Vec<i32>) -> Result<Self>;

    /// `σ(i)` for `i` in the domain (`[1, n]` for type A, `[-n, n]` for type B).
    fn value(&self, i: i64) -> i64;

    /// Multiplies by `s_i` on the right in place (acts on positions).
    fn right_multiply_generator(&mut self, i: usize);

    /// Whether `s_i` is a right descent.
    fn has_right_descent(&self, i: usize) -> bool;

    fn length(&self) -> u64;

    fn inverse(&self) -> Self;

    fn generator(n: usize, i: usize) -> Result<Self> {
        let mut g = Self::identity(n);
        if i < Self::KIND.first_generator() || i >= n {
            return Err(Error::InvalidIndex {
                kind: Self::KIND,
                n,
                index: i as i64,
            });
        }
        g.right_multiply_generator(i);
        Ok(g)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let window = (1..=self.rank() as i64)
            .map(|i| self.value(other.value(i)) as i32)
            .collect();
        Self::from_window(window)
    }

    fn right_descents(&self) -> IndexSet {
        let n = self.rank();
        let bits = (Self::KIND.first_generator()..n)
            .filter(|&i| self.has_right_descent(i))
            .fold(0u64, |acc, i| acc | 1 << i);
        IndexSet {
            kind: Self::KIND,
            n,
            bits,
        }
    }

    fn left_descents(&self) -> IndexSet {
        self.inverse().right_descents()
    }

    fn is_identity(&self) -> bool {
        self.window()
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }
}

fn check_set_for<E: GroupElement>(w: &E, set: &IndexSet) -> Result<()> {
    if set.kind() != E::KIND {
        return Err(Error::KindMismatch {
            expected: E::KIND,
            found: set.kind(),
        });
    }
    if set.rank() != w.rank() {
        return Err(Error::RankMismatch(w.rank(), set.rank()));
    }
    Ok(())
}

/// Splits `w = u · v` with `u ∈ W_J` and `v ∈ ^J W` (no left descent in `J`).
///
/// Left descents of `v` are right descents of `v⁻¹`, so the greedy stripping
/// works on the inverse window, where each step is a single position swap.
pub fn left_parabolic_decompose<E: GroupElement>(w: &E, j: &IndexSet) -> Result<(E, E)> {
    check_set_for(w, j)?;
    let mut inv = w.inverse();
    loop {
        let Some(i) = j.members().find(|&i| inv.has_right_descent(i)) else {
            break;
        };
        inv.right_multiply_generator(i);
    }
    let quotient_part = inv.inverse();
    let parabolic_part = w.compose(&inv)?;
    Ok((parabolic_part, quotient_part))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub fn is_minimal_coset_rep<E: GroupElement>(w: &E, set: &IndexSet, side: Side) -> Result<bool> {
    check_set_for(w, set)?;
    let descents = match side {
        Side::Right => w.right_descents(),
        Side::Left => w.left_descents(),
    };
    Ok(descents.is_disjoint(set))
}

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationA {
    window: Vec<i32>,
}

/// A signed permutation of `[-n, n]`, stored through its window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationB {
    window: Vec<i32>,
}

fn validate_window(window: &[i32], signed: bool) -> Result<()> {
    let n = window.len();
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut seen = vec![false; n + 1];
    for &v in window {
        if v == 0 && signed {
            return Err(Error::ZeroEntry);
        }
        let a = v.unsigned_abs() as usize;
        if (!signed && v < 1) || a == 0 || a > n {
            return Err(Error::OutOfRange { value: v as i64, n });
        }
        if seen[a] {
            return Err(Error::Duplicate(a as i64));
        }
        seen[a] = true;
    }
    Ok(())
}

impl GroupElement for PermutationA {
    const KIND: Kind = Kind::A;

    fn rank(&self) -> usize {
        self.window.len()
    }

    fn window(&self) -> &[i32] {
        &self.window
    }

    fn identity(n: usize) -> Self {
        PermutationA {
            window: (1..=n as i32).collect(),
        }
    }

    fn from_window(window: Vec<i32>) -> Result<Self> {
        validate_window(&window, false)?;
        Ok(PermutationA { window })
    }

    fn value(&self, i: i64) -> i64 {
        self.window[(i - 1) as usize] as i64
    }

    fn right_multiply_generator(&mut self, i: usize) {
        self.window.swap(i - 1, i);
    }

    fn has_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.window.len() && self.window[i - 1] > self.window[i]
    }

    fn length(&self) -> u64 {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn inverse(&self) -> Self {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            window[(v - 1) as usize] = i as i32 + 1;
        }
        PermutationA { window }
    }
}

impl PermutationA {
    /// Embeds `S_n ⊂ B_n` (all-positive window).
    pub fn to_signed(&self) -> PermutationB {
        PermutationB {
            window: self.window.clone(),
        }
    }
}

impl GroupElement for PermutationB {
    const KIND: Kind = Kind::B;

    fn rank(&self) -> usize {
        self.window.len()
    }

    fn window(&self) -> &[i32] {
        &self.window
    }

    fn identity(n: usize) -> Self {
        PermutationB {
            window: (1..=n as i32).collect(),
        }
    }

    fn from_window(window: Vec<i32>) -> Result<Self> {
        validate_window(&window, true)?;
        Ok(PermutationB { window })
    }

    fn value(&self, i: i64) -> i64 {
        match i.cmp(&0) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => self.window[(i - 1) as usize] as i64,
            std::cmp::Ordering::Less => -(self.window[(-i - 1) as usize] as i64),
        }
    }

    fn right_multiply_generator(&mut self, i: usize) {
        if i == 0 {
            self.window[0] = -self.window[0];
        } else {
            self.window.swap(i - 1, i);
        }
    }

    fn has_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            !self.window.is_empty() && self.window[0] < 0
        } else {
            i < self.window.len() && self.window[i - 1] > self.window[i]
        }
    }

    /// Half the number of inversions of the extended map on `[-n, n] \ {0}`,
    /// where each self-symmetric pair `(-j, j)` is counted twice.
    fn length(&self) -> u64 {
        let n = self.rank() as i64;
        let ext: Vec<(i64, i64)> = (-n..=n)
            .filter(|&i| i != 0)
            .map(|i| (i, self.value(i)))
            .collect();
        let mut count = 0u64;
        for (k, &(i, vi)) in ext.iter().enumerate() {
            for &(j, vj) in &ext[k + 1..] {
                if vi > vj {
                    count += if i == -j { 2 } else { 1 };
                }
            }
        }
        count / 2
    }

    fn inverse(&self) -> Self {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            window[(v.unsigned_abs() - 1) as usize] = if v > 0 { pos } else { -pos };
        }
        PermutationB { window }
    }
}

impl PermutationB {
    /// Coxeter length through `inv + neg + nsp`; agrees with [`GroupElement::length`].
    pub fn length_by_statistics(&self) -> u64 {
        let w = &self.window;
        let mut count = w.iter().filter(|&&v| v < 0).count() as u64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
                if w[i] + w[j] < 0 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether every entry is positive, i.e. the element lies in `S_n`.
    pub fn to_unsigned(&self) -> Option<PermutationA> {
        self.window.iter().all(|&v| v > 0).then(|| PermutationA {
            window: self.window.clone(),
        })
    }
}

/// An element of either family, as produced by the window parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    A(PermutationA),
    B(PermutationB),
}

impl Element {
    pub fn kind(&self) -> Kind {
        match self {
            Element::A(_) => Kind::A,
            Element::B(_) => Kind::B,
        }
    }

    pub fn window(&self) -> &[i32] {
        match self {
            Element::A(w) => w.window(),
            Element::B(w) => w.window(),
        }
    }
}

/// Parses comma-separated window text such as `"-2,4,3,-1"`.
pub fn parse_window(kind: Kind, text: &str, expected_rank: Option<usize>) -> Result<Element> {
    let window = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(expected) = expected_rank {
        if window.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: window.len(),
            });
        }
    }
    match kind {
        Kind::A => PermutationA::from_window(window).map(Element::A),
        Kind::B => PermutationB::from_window(window).map(Element::B),
    }
}

fn write_window(f: &mut fmt::Formatter<'_>, w: &[i32]) -> fmt::Result {
    let items: Vec<String> = w.iter().map(|v| v.to_string()).collect();
    write!(f, "[{}]", items.join(","))
}

impl fmt::Display for PermutationA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(f, &self.window)
    }
}

impl fmt::Display for PermutationB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(f, &self.window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn a(w: &[i32]) -> PermutationA {
        PermutationA::from_window(w.to_vec()).unwrap()
    }

    fn b(w: &[i32]) -> PermutationB {
        PermutationB::from_window(w.to_vec()).unwrap()
    }

    fn all_a(n: usize) -> Vec<PermutationA> {
        crate::enumerate::elements::<PermutationA>(n).collect()
    }

    fn all_b(n: usize) -> Vec<PermutationB> {
        crate::enumerate::elements::<PermutationB>(n).collect()
    }

    fn set(kind: Kind, n: usize, m: &[i64]) -> IndexSet {
        IndexSet::new(kind, n, m.iter().copied()).unwrap()
    }

    #[test]
    fn parses_worked_examples() {
        let e = parse_window(Kind::A, "4,2,1,5,3", None).unwrap();
        assert_eq!(e.window(), &[4, 2, 1, 5, 3]);
        let e = parse_window(Kind::B, "-2,4,3,-1", None).unwrap();
        assert_eq!(e.kind(), Kind::B);
        assert_eq!(e.window().len(), 4);
    }

    #[test]
    fn parse_rejects_bad_windows() {
        assert_eq!(
            parse_window(Kind::A, "1,1,2", None),
            Err(Error::Duplicate(1))
        );
        assert_eq!(
            parse_window(Kind::B, "1,-1", None),
            Err(Error::Duplicate(1))
        );
        assert_eq!(parse_window(Kind::B, "0,1", None), Err(Error::ZeroEntry));
        assert!(matches!(
            parse_window(Kind::A, "1,4,2", None),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            parse_window(Kind::A, "-1,2", None),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            parse_window(Kind::A, "1,2", Some(3)),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        ));
        assert!(matches!(
            parse_window(Kind::A, "1,x", None),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn compose_and_inverse() {
        assert_eq!(
            a(&[2, 1, 3]).compose(&a(&[1, 3, 2])).unwrap(),
            a(&[2, 3, 1])
        );
        assert_eq!(a(&[2, 3, 1]).inverse(), a(&[3, 1, 2]));
        assert_eq!(b(&[-1, 2]).inverse(), b(&[-1, 2]));
        assert_eq!(
            a(&[1, 2]).compose(&a(&[1, 2, 3])),
            Err(Error::RankMismatch(2, 3))
        );
        for w in all_b(3) {
            assert_eq!(w.compose(&PermutationB::identity(3)).unwrap(), w);
            assert!(w.compose(&w.inverse()).unwrap().is_identity());
            for i in -3..=3 {
                assert_eq!(w.value(-i), -w.value(i));
            }
        }
    }

    #[test]
    fn lengths() {
        assert_eq!(a(&[4, 2, 1, 5, 3]).length(), 5);
        assert_eq!(PermutationA::identity(5).length(), 0);
        assert_eq!(PermutationB::identity(4).length(), 0);
        assert_eq!(b(&[1, -2]).length(), 3);
        for n in 1..=5 {
            for w in all_b(n) {
                assert_eq!(w.length(), w.length_by_statistics(), "{w}");
            }
        }
    }

    #[test]
    fn descents() {
        assert_eq!(
            a(&[4, 2, 1, 5, 3]).right_descents(),
            set(Kind::A, 5, &[1, 2, 4])
        );
        assert!(PermutationA::identity(4).right_descents().is_empty());
        assert_eq!(b(&[-1, 2]).right_descents(), set(Kind::B, 2, &[0]));
        assert_eq!(a(&[2, 3, 1]).left_descents(), set(Kind::A, 3, &[1]));
        assert!(PermutationB::identity(3).left_descents().is_empty());
    }

    #[test]
    fn left_descents_match_both_characterisations() {
        fn check<E: GroupElement>(w: &E) {
            let n = w.rank();
            let by_length = (E::KIND.first_generator()..n)
                .filter(|&i| E::generator(n, i).unwrap().compose(w).unwrap().length() < w.length())
                .fold(0u64, |acc, i| acc | 1 << i);
            assert_eq!(w.left_descents().bits(), by_length, "{w:?}");
            assert_eq!(w.left_descents(), w.inverse().right_descents());
            if *w == w.inverse() {
                assert_eq!(w.left_descents(), w.right_descents());
            }
        }
        for n in 1..=5 {
            all_a(n).iter().for_each(check);
            all_b(n).iter().for_each(check);
        }
    }

    fn bfs_word_lengths<E: GroupElement + std::hash::Hash>(n: usize) -> HashMap<E, u64> {
        let gens: Vec<E> = (E::KIND.first_generator()..n)
            .map(|i| E::generator(n, i).unwrap())
            .collect();
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(E::identity(n), 0);
        queue.push_back(E::identity(n));
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for g in &gens {
                let next = w.compose(g).unwrap();
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn length_is_minimal_word_length() {
        for n in 1..=6 {
            let dist = bfs_word_lengths::<PermutationA>(n);
            assert_eq!(dist.len() as u128, Kind::A.group_order(n));
            for (w, d) in dist {
                assert_eq!(w.length(), d);
            }
        }
        for n in 1..=4 {
            let dist = bfs_word_lengths::<PermutationB>(n);
            assert_eq!(dist.len() as u128, Kind::B.group_order(n));
            for (w, d) in dist {
                assert_eq!(w.length(), d);
            }
        }
    }

    #[test]
    fn decomposition_edge_cases() {
        let w = a(&[3, 1, 4, 2]);
        let (u, v) = left_parabolic_decompose(&w, &IndexSet::empty(Kind::A, 4).unwrap()).unwrap();
        assert!(u.is_identity());
        assert_eq!(v, w);
        let (u, v) = left_parabolic_decompose(&w, &IndexSet::full(Kind::A, 4).unwrap()).unwrap();
        assert_eq!(u, w);
        assert!(v.is_identity());
        // [2,1,3] has no left descent at 2, so it is already its own representative.
        let (u, v) = left_parabolic_decompose(&a(&[2, 1, 3]), &set(Kind::A, 3, &[2])).unwrap();
        assert!(u.is_identity());
        assert_eq!(v, a(&[2, 1, 3]));
        assert!(matches!(
            left_parabolic_decompose(&w, &IndexSet::empty(Kind::B, 4).unwrap()),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn decomposition_matches_brute_force_coset_minimum() {
        // Minimal-length element of W_J w found by closing {w} under left multiplication by s_j.
        fn check<E: GroupElement + std::hash::Hash>(n: usize) {
            let elements: Vec<E> = crate::enumerate::elements::<E>(n).collect();
            for j in IndexSet::all(E::KIND, n).unwrap() {
                let gens: Vec<E> = j.members().map(|i| E::generator(n, i).unwrap()).collect();
                for w in &elements {
                    let mut coset = std::collections::HashSet::new();
                    let mut stack = vec![w.clone()];
                    coset.insert(w.clone());
                    while let Some(x) = stack.pop() {
                        for g in &gens {
                            let y = g.compose(&x).unwrap();
                            if coset.insert(y.clone()) {
                                stack.push(y);
                            }
                        }
                    }
                    let min = coset.iter().min_by_key(|x| x.length()).unwrap();
                    let (u, v) = left_parabolic_decompose(w, &j).unwrap();
                    assert_eq!(&v, min);
                    assert_eq!(u.compose(&v).unwrap(), *w);
                    assert!(j.contains_element(&u));
                    assert_eq!(w.length(), u.length() + v.length());
                    assert!(v.left_descents().is_disjoint(&j));
                }
            }
        }
        check::<PermutationA>(4);
        check::<PermutationB>(3);
    }

    #[test]
    fn decomposition_is_additive_exhaustively() {
        for n in 1..=5 {
            for j in IndexSet::all(Kind::A, n).unwrap() {
                for w in all_a(n) {
                    let (u, v) = left_parabolic_decompose(&w, &j).unwrap();
                    assert_eq!(w.length(), u.length() + v.length());
                    assert_eq!(u.compose(&v).unwrap(), w);
                    assert!(is_minimal_coset_rep(&v, &j, Side::Left).unwrap());
                }
            }
        }
    }

    #[test]
    fn minimal_coset_reps() {
        let one = set(Kind::A, 3, &[1]);
        assert!(is_minimal_coset_rep(&PermutationA::identity(3), &one, Side::Right).unwrap());
        assert!(!is_minimal_coset_rep(&a(&[2, 1, 3]), &one, Side::Right).unwrap());
        assert!(is_minimal_coset_rep(&a(&[1, 3, 2]), &one, Side::Right).unwrap());
        assert!(!is_minimal_coset_rep(&a(&[2, 3, 1]), &one, Side::Left).unwrap());
        assert!(is_minimal_coset_rep(&a(&[3, 1, 2]), &one, Side::Left).unwrap());
    }

    #[test]
    fn index_sets() {
        assert!(IndexSet::new(Kind::A, 4, [0]).is_err());
        assert!(IndexSet::new(Kind::A, 4, [4]).is_err());
        assert!(IndexSet::new(Kind::B, 4, [0, 3]).is_ok());
        assert_eq!(IndexSet::parse(Kind::B, 4, "").unwrap().len(), 0);
        assert_eq!(
            IndexSet::parse(Kind::B, 4, "0, 2").unwrap(),
            set(Kind::B, 4, &[0, 2])
        );
        assert_eq!(IndexSet::all(Kind::A, 5).unwrap().count(), 16);
        assert_eq!(IndexSet::all(Kind::B, 5).unwrap().count(), 32);
        assert_eq!(IndexSet::all(Kind::A, 1).unwrap().count(), 1);
        assert_eq!(set(Kind::A, 6, &[1, 2, 5]).to_string(), "{1,2,5}");
        assert_eq!(set(Kind::A, 4, &[1]).complement(), set(Kind::A, 4, &[2, 3]));
    }

    #[test]
    fn parabolic_membership() {
        let j = set(Kind::B, 3, &[0, 2]);
        assert!(j.contains_element(&b(&[-1, 3, 2])));
        assert!(!j.contains_element(&b(&[1, -2, 3])));
        assert!(!j.contains_element(&b(&[2, 1, 3])));
        let j = set(Kind::A, 3, &[1]);
        assert!(j.contains_element(&a(&[2, 1, 3])));
        assert!(!j.contains_element(&a(&[1, 3, 2])));
    }
}
