//! Enumeration of `S_n` and `B_n` and the signed generating functions
//! `Σ (-1)^{ℓ(σ)} [χ(σ)] x^{L(σ)}` over their parabolic quotients.
//!
//! A full sweep walks the group depth-first in lexicographic window order,
//! updating length, odd length, descents and chessboard parity as each
//! position is filled. [`DescentClassTable`] buckets the sweep by
//! (descent set, chessboard class); since `σ ∈ W^I ⟺ D(σ) ∩ I = ∅`, every
//! quotient sum is then a sum of table cells.

use std::thread;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Element, GroupElement, IndexSet, Kind, PermutationA, PermutationB};
use crate::odd::ChessboardClass;
use crate::poly::IntPolynomial;

/// Largest ranks the sweeps will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_rank_a: usize,
    pub max_rank_b: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rank_a: 11,
            max_rank_b: 8,
        }
    }
}

impl Limits {
    pub fn check(&self, kind: Kind, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let limit = match kind {
            Kind::A => self.max_rank_a,
            Kind::B => self.max_rank_b,
        };
        if n > limit {
            return Err(Error::ResourceLimit { kind, n, limit });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Restrict {
    All,
    /// `C_n = C_{n,+} ∪ C_{n,-}`.
    Chessboard,
    Plus,
    Minus,
}

/// Which elements enter a sum and whether they are weighted by `χ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightSpec {
    restrict: Restrict,
    apply_chi: bool,
}

impl WeightSpec {
    pub const ALL: WeightSpec = WeightSpec {
        restrict: Restrict::All,
        apply_chi: false,
    };
    pub const PLUS: WeightSpec = WeightSpec {
        restrict: Restrict::Plus,
        apply_chi: false,
    };
    pub const MINUS: WeightSpec = WeightSpec {
        restrict: Restrict::Minus,
        apply_chi: false,
    };
    pub const CHESSBOARD: WeightSpec = WeightSpec {
        restrict: Restrict::Chessboard,
        apply_chi: false,
    };
    pub const CHESSBOARD_CHI: WeightSpec = WeightSpec {
        restrict: Restrict::Chessboard,
        apply_chi: true,
    };

    pub fn new(restrict: Restrict, apply_chi: bool) -> Result<Self> {
        if apply_chi && restrict == Restrict::All {
            return Err(Error::ChiWithoutChessboard);
        }
        Ok(WeightSpec {
            restrict,
            apply_chi,
        })
    }

    pub fn restrict(&self) -> Restrict {
        self.restrict
    }

    pub fn apply_chi(&self) -> bool {
        self.apply_chi
    }

    /// Multiplier for elements of the given class (0 excludes them).
    pub fn class_weight(&self, class: ChessboardClass) -> i64 {
        let included = match self.restrict {
            Restrict::All => true,
            Restrict::Chessboard => class != ChessboardClass::NotChessboard,
            Restrict::Plus => class == ChessboardClass::Plus,
            Restrict::Minus => class == ChessboardClass::Minus,
        };
        match (included, self.apply_chi) {
            (false, _) => 0,
            (true, false) => 1,
            (true, true) => class.chi().unwrap_or(0) as i64,
        }
    }
}

/// Per-element data produced by a sweep.
#[derive(Debug, Clone, Copy)]
pub struct ElementStats<'a> {
    pub window: &'a [i32],
    pub length: u32,
    pub odd_length: u32,
    /// Right descent set as a bitmask over generator indices.
    pub descents: u64,
    pub class: ChessboardClass,
}

impl ElementStats<'_> {
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Candidate values for one window entry, in increasing order.
fn value_range(kind: Kind, n: usize) -> Vec<i32> {
    let n = n as i32;
    match kind {
        Kind::A => (1..=n).collect(),
        Kind::B => (-n..=-1).chain(1..=n).collect(),
    }
}

struct Walker<'v, F> {
    kind: Kind,
    n: usize,
    /// Candidates for the first position (one partition of the group).
    firsts: Vec<i32>,
    values: Vec<i32>,
    window: Vec<i32>,
    used: Vec<bool>,
    visit: &'v mut F,
}

impl<F: FnMut(&ElementStats)> Walker<'_, F> {
    fn descend(
        &mut self,
        pos: usize,
        length: u32,
        odd: u32,
        descents: u64,
        plus: bool,
        minus: bool,
    ) {
        if pos == self.n {
            let class = if plus {
                ChessboardClass::Plus
            } else if minus {
                ChessboardClass::Minus
            } else {
                ChessboardClass::NotChessboard
            };
            (self.visit)(&ElementStats {
                window: &self.window,
                length,
                odd_length: odd,
                descents,
                class,
            });
            return;
        }
        let signed = self.kind == Kind::B;
        let count = if pos == 0 {
            self.firsts.len()
        } else {
            self.values.len()
        };
        for idx in 0..count {
            let v = if pos == 0 {
                self.firsts[idx]
            } else {
                self.values[idx]
            };
            let a = v.unsigned_abs() as usize;
            if self.used[a] {
                continue;
            }
            let (mut dl, mut dodd) = (0u32, 0u32);
            for (q, &u) in self.window[..pos].iter().enumerate() {
                let hits = (u > v) as u32 + (signed && u + v < 0) as u32;
                dl += hits;
                if (pos - q) % 2 == 1 {
                    dodd += hits;
                }
            }
            if v < 0 {
                dl += 1;
                // position pos + 1 is odd
                if pos.is_multiple_of(2) {
                    dodd += 1;
                }
            }
            let mut d = descents;
            if pos > 0 && self.window[pos - 1] > v {
                d |= 1 << pos;
            }
            if pos == 0 && v < 0 {
                d |= 1;
            }
            let even = (pos as i32 + 1 + v).rem_euclid(2) == 0;
            self.used[a] = true;
            self.window.push(v);
            self.descend(
                pos + 1,
                length + dl,
                odd + dodd,
                d,
                plus && even,
                minus && !even,
            );
            self.window.pop();
            self.used[a] = false;
        }
    }
}

/// Visits, in lexicographic order, every element whose first window entry is
/// in `first_values` (every element if `None`).
pub fn sweep<F: FnMut(&ElementStats)>(
    kind: Kind,
    n: usize,
    first_values: Option<&[i32]>,
    visit: &mut F,
) {
    let values = value_range(kind, n);
    let firsts = match first_values {
        Some(f) => values.iter().copied().filter(|v| f.contains(v)).collect(),
        None => values.clone(),
    };
    let mut walker = Walker {
        kind,
        n,
        firsts,
        values,
        window: Vec::with_capacity(n),
        used: vec![false; n + 1],
        visit,
    };
    walker.descend(0, 0, 0, 0, true, true);
}

/// Runs `visit` over the whole group, split into `partitions` disjoint sweeps
/// keyed on the first window entry. Each partition folds into its own
/// accumulator; accumulators are merged in partition order.
pub fn partitioned_sweep<T, I, V, M>(
    kind: Kind,
    n: usize,
    partitions: usize,
    init: I,
    visit: V,
    merge: M,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, &ElementStats) + Sync,
    M: Fn(&mut T, T),
{
    let firsts = value_range(kind, n);
    let parts = partitions.clamp(1, firsts.len());
    let groups: Vec<Vec<i32>> = (0..parts)
        .map(|p| firsts.iter().copied().skip(p).step_by(parts).collect())
        .collect();
    let run = |group: &Vec<i32>| {
        let mut acc = init();
        sweep(kind, n, Some(group), &mut |s: &ElementStats| {
            visit(&mut acc, s)
        });
        acc
    };
    let results: Vec<T> = if parts == 1 {
        vec![run(&groups[0])]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = groups.iter().map(|g| scope.spawn(move || run(g))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    let mut iter = results.into_iter();
    let mut total = iter.next().expect("at least one partition");
    for r in iter {
        merge(&mut total, r);
    }
    total
}

/// Upper bound (exclusive) on the exponents of `x` that can occur.
fn degree_stride(n: usize) -> usize {
    n * n + 1
}

fn descent_index(kind: Kind, bits: u64) -> usize {
    (bits >> kind.first_generator()) as usize
}

fn descent_slots(kind: Kind, n: usize) -> usize {
    1 << (n - kind.first_generator())
}

/// Signed odd-length polynomials bucketed by (right descent set, chessboard class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentClassTable {
    kind: Kind,
    n: usize,
    stride: usize,
    /// `(descent_index * 3 + class) * stride + exponent`
    coeffs: Vec<i64>,
    counts: Vec<u64>,
}

impl DescentClassTable {
    fn empty(kind: Kind, n: usize) -> Self {
        let cells = descent_slots(kind, n) * 3;
        let stride = degree_stride(n);
        DescentClassTable {
            kind,
            n,
            stride,
            coeffs: vec![0; cells * stride],
            counts: vec![0; cells],
        }
    }

    fn add(&mut self, s: &ElementStats) {
        let cell = descent_index(self.kind, s.descents) * 3 + s.class.index();
        self.counts[cell] += 1;
        self.coeffs[cell * self.stride + s.odd_length as usize] += s.sign();
    }

    fn merge(&mut self, other: DescentClassTable) {
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs) {
            *a += b;
        }
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
    }

    /// One sweep of the group split over `partitions` worker threads.
    pub fn build(kind: Kind, n: usize, partitions: usize, limits: &Limits) -> Result<Self> {
        limits.check(kind, n)?;
        Ok(partitioned_sweep(
            kind,
            n,
            partitions,
            || Self::empty(kind, n),
            |t, s| t.add(s),
            |t, o| t.merge(o),
        ))
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn total_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn cell_count(&self, descents: &IndexSet, class: ChessboardClass) -> u64 {
        self.counts[descent_index(self.kind, descents.bits()) * 3 + class.index()]
    }

    pub fn cell(&self, descents: &IndexSet, class: ChessboardClass) -> IntPolynomial {
        let cell = descent_index(self.kind, descents.bits()) * 3 + class.index();
        IntPolynomial::from_i64s(&self.coeffs[cell * self.stride..(cell + 1) * self.stride])
    }

    fn check_set(&self, set: &IndexSet) -> Result<()> {
        if set.kind() != self.kind {
            return Err(Error::KindMismatch {
                expected: self.kind,
                found: set.kind(),
            });
        }
        if set.rank() != self.n {
            return Err(Error::RankMismatch(self.n, set.rank()));
        }
        Ok(())
    }

    /// Collapses classes by `weight`, giving one coefficient row per descent set.
    fn weighted_rows(&self, weight: &WeightSpec) -> Vec<i64> {
        let slots = descent_slots(self.kind, self.n);
        let mut rows = vec![0i64; slots * self.stride];
        for d in 0..slots {
            for class in ChessboardClass::ALL {
                let w = weight.class_weight(class);
                if w == 0 {
                    continue;
                }
                let src = (d * 3 + class.index()) * self.stride;
                for k in 0..self.stride {
                    rows[d * self.stride + k] += w * self.coeffs[src + k];
                }
            }
        }
        rows
    }

    /// Sum over the quotient `W^I = {σ : D(σ) ∩ I = ∅}`.
    pub fn gf_quotient(&self, set: &IndexSet, weight: &WeightSpec) -> Result<IntPolynomial> {
        self.check_set(set)?;
        let rows = self.weighted_rows(weight);
        let forbidden = descent_index(self.kind, set.bits());
        let mut acc = vec![0i64; self.stride];
        for d in (0..descent_slots(self.kind, self.n)).filter(|d| d & forbidden == 0) {
            for (a, b) in acc
                .iter_mut()
                .zip(&rows[d * self.stride..(d + 1) * self.stride])
            {
                *a += b;
            }
        }
        Ok(IntPolynomial::from_i64s(&acc))
    }

    /// Quotient sums for every index set at once, indexed like
    /// [`IndexSet::all`]. The sum over `W^I` is the subset sum of the cells
    /// over `D ⊆ complement(I)`, computed with a zeta transform.
    pub fn all_quotients(&self, weight: &WeightSpec) -> Vec<IntPolynomial> {
        let slots = descent_slots(self.kind, self.n);
        let stride = self.stride;
        let mut rows = self.weighted_rows(weight);
        let mut bit = 1;
        while bit < slots {
            for s in 0..slots {
                if s & bit != 0 {
                    let (lo, hi) = rows.split_at_mut(s * stride);
                    let from = &lo[(s ^ bit) * stride..((s ^ bit) + 1) * stride];
                    for (a, b) in hi[..stride].iter_mut().zip(from) {
                        *a += b;
                    }
                }
            }
            bit <<= 1;
        }
        let full = slots - 1;
        (0..slots)
            .map(|i| {
                let c = full & !i;
                IntPolynomial::from_i64s(&rows[c * stride..(c + 1) * stride])
            })
            .collect()
    }
}

/// Signed sums bucketed by (descent set, position of a fixed value, class),
/// for sums over `{σ ∈ W^I : σ(a) = v}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinnedValueTable {
    kind: Kind,
    n: usize,
    value: i32,
    stride: usize,
    /// `((descent_index * n + (a - 1)) * 3 + class) * stride + exponent`
    coeffs: Vec<i64>,
}

impl PinnedValueTable {
    pub fn build(
        kind: Kind,
        n: usize,
        value: i32,
        partitions: usize,
        limits: &Limits,
    ) -> Result<Self> {
        limits.check(kind, n)?;
        if !value_range(kind, n).contains(&value) {
            return Err(Error::InvalidFilter(format!(
                "value {value} outside the window range"
            )));
        }
        let stride = degree_stride(n);
        let len = descent_slots(kind, n) * n * 3 * stride;
        let coeffs = partitioned_sweep(
            kind,
            n,
            partitions,
            || vec![0i64; len],
            |acc, s| {
                let pos = s.window.iter().position(|&x| x == value);
                if let Some(pos) = pos {
                    let cell = (descent_index(kind, s.descents) * n + pos) * 3 + s.class.index();
                    acc[cell * stride + s.odd_length as usize] += s.sign();
                }
            },
            |acc, other| acc.iter_mut().zip(other).for_each(|(a, b)| *a += b),
        );
        Ok(PinnedValueTable {
            kind,
            n,
            value,
            stride,
            coeffs,
        })
    }

    pub fn value(&self) -> i32 {
        self.value
    }

    /// Sum over `{σ ∈ W^I : σ(position) = value}`.
    pub fn gf_quotient(
        &self,
        set: &IndexSet,
        weight: &WeightSpec,
        position: usize,
    ) -> Result<IntPolynomial> {
        if set.kind() != self.kind || set.rank() != self.n {
            return Err(Error::KindMismatch {
                expected: self.kind,
                found: set.kind(),
            });
        }
        if position == 0 || position > self.n {
            return Err(Error::InvalidFilter(format!(
                "position {position} outside [1, {}]",
                self.n
            )));
        }
        let forbidden = descent_index(self.kind, set.bits());
        let mut acc = vec![0i64; self.stride];
        for d in (0..descent_slots(self.kind, self.n)).filter(|d| d & forbidden == 0) {
            for class in ChessboardClass::ALL {
                let w = weight.class_weight(class);
                if w == 0 {
                    continue;
                }
                let cell = (d * self.n + position - 1) * 3 + class.index();
                for (a, b) in acc
                    .iter_mut()
                    .zip(&self.coeffs[cell * self.stride..(cell + 1) * self.stride])
                {
                    *a += w * b;
                }
            }
        }
        Ok(IntPolynomial::from_i64s(&acc))
    }
}

/// Direct re-enumeration of `Σ_{σ ∈ W^I, σ(a) = v}` without any table.
fn direct_sum(
    set: &IndexSet,
    weight: &WeightSpec,
    pin: Option<(usize, i32)>,
    limits: &Limits,
) -> Result<IntPolynomial> {
    let (kind, n) = (set.kind(), set.rank());
    limits.check(kind, n)?;
    let mut acc = vec![0i64; degree_stride(n)];
    sweep(kind, n, None, &mut |s: &ElementStats| {
        if s.descents & set.bits() != 0 {
            return;
        }
        if let Some((a, v)) = pin {
            if s.window[a - 1] != v {
                return;
            }
        }
        acc[s.odd_length as usize] += weight.class_weight(s.class) * s.sign();
    });
    Ok(IntPolynomial::from_i64s(&acc))
}

/// Signed generating function over the quotient, by direct enumeration.
pub fn gf_quotient_direct(
    set: &IndexSet,
    weight: &WeightSpec,
    limits: &Limits,
) -> Result<IntPolynomial> {
    direct_sum(set, weight, None, limits)
}

/// Same as [`gf_quotient_direct`] but only over elements with `σ(position) = value`.
pub fn gf_quotient_filtered(
    set: &IndexSet,
    weight: &WeightSpec,
    position: usize,
    value: i32,
    limits: &Limits,
) -> Result<IntPolynomial> {
    let n = set.rank();
    if position == 0 || position > n {
        return Err(Error::InvalidFilter(format!(
            "position {position} outside [1, {n}]"
        )));
    }
    if !value_range(set.kind(), n).contains(&value) {
        return Err(Error::InvalidFilter(format!(
            "value {value} outside the window range"
        )));
    }
    direct_sum(set, weight, Some((position, value)), limits)
}

/// Lexicographic successor among windows with distinct absolute values.
fn next_window(window: &mut [i32], signed: bool) -> bool {
    let n = window.len();
    let n_i = n as i32;
    for p in (0..n).rev() {
        let mut used = vec![false; n + 1];
        for &x in &window[..p] {
            used[x.unsigned_abs() as usize] = true;
        }
        let lo = if signed { -n_i } else { 1 };
        let bigger = (window[p] + 1..=n_i)
            .filter(|&u| u != 0 && u >= lo)
            .find(|&u| !used[u.unsigned_abs() as usize]);
        if let Some(u) = bigger {
            window[p] = u;
            used[u.unsigned_abs() as usize] = true;
            let mut free: Vec<i32> = (1..=n_i).filter(|&x| !used[x as usize]).collect();
            if signed {
                free.reverse();
                free.iter_mut().for_each(|x| *x = -*x);
            }
            window[p + 1..].copy_from_slice(&free);
            return true;
        }
    }
    false
}

/// Every element of the rank-`n` group, in lexicographic window order.
pub fn elements<E: GroupElement>(n: usize) -> impl Iterator<Item = E> {
    let signed = E::KIND == Kind::B;
    let first: Vec<i32> = if signed {
        (1..=n as i32).rev().map(|x| -x).collect()
    } else {
        (1..=n as i32).collect()
    };
    let mut current = Some(first);
    std::iter::from_fn(move || {
        let w = current.take()?;
        let mut next = w.clone();
        if next_window(&mut next, signed) {
            current = Some(next);
        }
        Some(E::from_window(w).expect("enumerated windows are valid"))
    })
}

/// Streams the group of the given kind and rank.
pub fn enumerate_group(
    kind: Kind,
    n: usize,
    limits: &Limits,
) -> Result<Box<dyn Iterator<Item = Element>>> {
    limits.check(kind, n)?;
    Ok(match kind {
        Kind::A => Box::new(elements::<PermutationA>(n).map(Element::A)),
        Kind::B => Box::new(elements::<PermutationB>(n).map(Element::B)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::odd::{chessboard_class, odd_length_a, odd_length_b};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn set(kind: Kind, n: usize, m: &[i64]) -> IndexSet {
        IndexSet::new(kind, n, m.iter().copied()).unwrap()
    }

    #[test]
    fn group_sizes_and_order() {
        let lim = Limits::default();
        assert_eq!(enumerate_group(Kind::A, 3, &lim).unwrap().count(), 6);
        assert_eq!(enumerate_group(Kind::B, 2, &lim).unwrap().count(), 8);
        let b1: Vec<Vec<i32>> = enumerate_group(Kind::B, 1, &lim)
            .unwrap()
            .map(|e| e.window().to_vec())
            .collect();
        assert_eq!(b1, vec![vec![-1], vec![1]]);
        for n in 1..=5 {
            let ws: Vec<Vec<i32>> = elements::<PermutationB>(n)
                .map(|w| w.window().to_vec())
                .collect();
            assert_eq!(ws.len() as u128, Kind::B.group_order(n));
            assert!(ws.windows(2).all(|p| p[0] < p[1]));
        }
        assert!(matches!(
            enumerate_group(Kind::B, 9, &lim),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn sweep_matches_reference_statistics() {
        for n in 1..=6 {
            let expected: Vec<PermutationA> = elements(n).collect();
            let mut i = 0;
            sweep(Kind::A, n, None, &mut |s: &ElementStats| {
                let w = &expected[i];
                assert_eq!(s.window, w.window());
                assert_eq!(s.length as u64, w.length());
                assert_eq!(s.odd_length as u64, odd_length_a(w));
                assert_eq!(s.descents, w.right_descents().bits());
                assert_eq!(s.class, chessboard_class(w));
                i += 1;
            });
            assert_eq!(i, expected.len());
        }
        for n in 1..=5 {
            let expected: Vec<PermutationB> = elements(n).collect();
            let mut i = 0;
            sweep(Kind::B, n, None, &mut |s: &ElementStats| {
                let w = &expected[i];
                assert_eq!(s.window, w.window());
                assert_eq!(s.length as u64, w.length());
                assert_eq!(s.odd_length as u64, odd_length_b(w));
                assert_eq!(s.descents, w.right_descents().bits());
                assert_eq!(s.class, chessboard_class(w));
                i += 1;
            });
            assert_eq!(i, expected.len());
        }
    }

    #[test]
    fn small_tables() {
        let lim = Limits::default();
        let t = DescentClassTable::build(Kind::A, 1, 1, &lim).unwrap();
        let none = set(Kind::A, 1, &[]);
        assert_eq!(t.cell(&none, ChessboardClass::Plus), IntPolynomial::one());
        assert_eq!(t.total_count(), 1);

        let t = DescentClassTable::build(Kind::A, 2, 1, &lim).unwrap();
        assert_eq!(
            t.cell(&set(Kind::A, 2, &[]), ChessboardClass::Plus),
            IntPolynomial::one()
        );
        assert_eq!(
            t.cell(&set(Kind::A, 2, &[1]), ChessboardClass::Minus),
            p(&[0, -1])
        );
        assert_eq!(
            t.cell_count(&set(Kind::A, 2, &[1]), ChessboardClass::Plus),
            0
        );

        // [-1]: 1 + (-1) = 0 is even, so it is a Plus element with descent 0.
        let t = DescentClassTable::build(Kind::B, 1, 1, &lim).unwrap();
        assert_eq!(
            t.cell(&set(Kind::B, 1, &[]), ChessboardClass::Plus),
            IntPolynomial::one()
        );
        assert_eq!(
            t.cell(&set(Kind::B, 1, &[0]), ChessboardClass::Plus),
            p(&[0, -1])
        );
        assert_eq!(
            t.cell(&set(Kind::B, 1, &[0]), ChessboardClass::Minus),
            IntPolynomial::zero()
        );
    }

    #[test]
    fn table_invariants() {
        let lim = Limits::default();
        for (kind, max) in [(Kind::A, 7), (Kind::B, 5)] {
            for n in 1..=max {
                let t = DescentClassTable::build(kind, n, 3, &lim).unwrap();
                assert_eq!(t.total_count() as u128, kind.group_order(n));
                let whole = t
                    .gf_quotient(&IndexSet::empty(kind, n).unwrap(), &WeightSpec::ALL)
                    .unwrap();
                if n >= 2 {
                    assert_eq!(whole.eval(&1.into()), 0.into(), "{kind}{n}");
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let lim = Limits::default();
        let five = set(Kind::A, 5, &[]);
        let expected = &IntPolynomial::one_minus_x_pow(2) * &IntPolynomial::one_minus_x_pow(4);
        assert_eq!(
            gf_quotient_direct(&five, &WeightSpec::ALL, &lim).unwrap(),
            expected
        );
        for n in 1..=6 {
            let full = IndexSet::full(Kind::A, n).unwrap();
            assert_eq!(
                gf_quotient_direct(&full, &WeightSpec::ALL, &lim).unwrap(),
                IntPolynomial::one()
            );
        }
        assert_eq!(
            gf_quotient_direct(&set(Kind::B, 2, &[0]), &WeightSpec::ALL, &lim).unwrap(),
            p(&[1, 0, -1])
        );
        assert_eq!(
            WeightSpec::new(Restrict::All, true),
            Err(Error::ChiWithoutChessboard)
        );
    }

    #[test]
    fn table_agrees_with_direct_enumeration() {
        let lim = Limits::default();
        let weights = [
            WeightSpec::ALL,
            WeightSpec::PLUS,
            WeightSpec::MINUS,
            WeightSpec::CHESSBOARD,
            WeightSpec::CHESSBOARD_CHI,
        ];
        for (kind, max) in [(Kind::A, 6), (Kind::B, 4)] {
            for n in 1..=max {
                let t = DescentClassTable::build(kind, n, 2, &lim).unwrap();
                for w in &weights {
                    let all = t.all_quotients(w);
                    for (i, s) in IndexSet::all(kind, n).unwrap().enumerate() {
                        let direct = gf_quotient_direct(&s, w, &lim).unwrap();
                        assert_eq!(t.gf_quotient(&s, w).unwrap(), direct, "{kind}{n} {s} {w:?}");
                        assert_eq!(all[i], direct);
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_nesting_by_counts() {
        let lim = Limits::default();
        let t = DescentClassTable::build(Kind::A, 5, 1, &lim).unwrap();
        let count = |s: &IndexSet| -> u64 {
            IndexSet::all(Kind::A, 5)
                .unwrap()
                .filter(|d| d.is_disjoint(s))
                .map(|d| {
                    ChessboardClass::ALL
                        .iter()
                        .map(|&c| t.cell_count(&d, c))
                        .sum::<u64>()
                })
                .sum()
        };
        for small in IndexSet::all(Kind::A, 5).unwrap() {
            for big in IndexSet::all(Kind::A, 5).unwrap() {
                if small.bits() & !big.bits() == 0 {
                    assert!(count(&big) <= count(&small));
                }
            }
        }
    }

    #[test]
    fn partition_count_does_not_change_tables() {
        let lim = Limits::default();
        let one = DescentClassTable::build(Kind::B, 4, 1, &lim).unwrap();
        for parts in [2, 3, 8, 100] {
            assert_eq!(
                DescentClassTable::build(Kind::B, 4, parts, &lim).unwrap(),
                one
            );
        }
    }

    #[test]
    fn filtered_sums() {
        let lim = Limits::default();
        let empty = set(Kind::A, 5, &[]);
        assert_eq!(
            gf_quotient_filtered(&empty, &WeightSpec::ALL, 3, 5, &lim).unwrap(),
            IntPolynomial::zero()
        );
        assert_eq!(
            gf_quotient_filtered(&empty, &WeightSpec::ALL, 3, 1, &lim).unwrap(),
            IntPolynomial::zero()
        );
        for a in 1..=5 {
            let total = (1..=5).fold(IntPolynomial::zero(), |acc, v| {
                acc + gf_quotient_filtered(&empty, &WeightSpec::ALL, a, v, &lim).unwrap()
            });
            assert_eq!(
                total,
                gf_quotient_direct(&empty, &WeightSpec::ALL, &lim).unwrap()
            );
        }
        assert!(gf_quotient_filtered(&empty, &WeightSpec::ALL, 0, 1, &lim).is_err());
        assert!(gf_quotient_filtered(&empty, &WeightSpec::ALL, 1, 6, &lim).is_err());
    }

    #[test]
    fn pinned_table_agrees_with_direct() {
        let lim = Limits::default();
        for n in 2..=5 {
            for v in [1, n as i32] {
                let t = PinnedValueTable::build(Kind::A, n, v, 2, &lim).unwrap();
                for s in IndexSet::all(Kind::A, n).unwrap() {
                    for a in 1..=n {
                        for w in [WeightSpec::ALL, WeightSpec::PLUS] {
                            assert_eq!(
                                t.gf_quotient(&s, &w, a).unwrap(),
                                gf_quotient_filtered(&s, &w, a, v, &lim).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}
