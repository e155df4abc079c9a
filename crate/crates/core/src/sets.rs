//! Structure of generator index sets: connected components, `m̃`,
//! compressed sets and the odd-component shifts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{IndexSet, Kind};

/// Maximal integer intervals `[a_i, b_i]` with `a_{i+1} - b_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct IntervalDecomposition {
    pub intervals: Vec<(usize, usize)>,
}

impl IntervalDecomposition {
    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.intervals.iter().map(|&(a, b)| b - a + 1)
    }

    /// The component containing `0`, if any (type B's `J_0`).
    pub fn zero_component(&self) -> Option<(usize, usize)> {
        self.intervals.first().copied().filter(|&(a, _)| a == 0)
    }

    /// All components except `J_0`.
    pub fn nonzero_components(&self) -> &[(usize, usize)] {
        match self.zero_component() {
            Some(_) => &self.intervals[1..],
            None => &self.intervals,
        }
    }
}

pub fn connected_components(set: &IndexSet) -> IntervalDecomposition {
    let mut intervals: Vec<(usize, usize)> = Vec::new();
    for i in set.members() {
        match intervals.last_mut() {
            Some((_, b)) if *b + 1 == i => *b = i,
            _ => intervals.push((i, i)),
        }
    }
    IntervalDecomposition { intervals }
}

/// The components whose halves feed `m̃` and the multinomial: every component
/// for type A, every component but `J_0` for type B.
pub fn counted_components(set: &IndexSet) -> Vec<(usize, usize)> {
    let comps = connected_components(set);
    match set.kind() {
        Kind::A => comps.intervals,
        Kind::B => comps.nonzero_components().to_vec(),
    }
}

/// `⌊(|I_k| + 1) / 2⌋` for each counted component.
pub fn multinomial_parts(set: &IndexSet) -> Vec<u64> {
    counted_components(set)
        .iter()
        .map(|&(a, b)| ((b - a + 2) / 2) as u64)
        .collect()
}

pub fn m_tilde(set: &IndexSet) -> u64 {
    multinomial_parts(set).iter().sum()
}

/// `I = [1, a_s - 1] \ {a_1, …, a_{s-1}}` for some even `a_1 < … < a_s`.
///
/// The cut points are exactly the non-members of `[1, max I + 1]`.
pub fn is_compressed(set: &IndexSet) -> bool {
    let Some(top) = set.members().last() else {
        return false;
    };
    (1..=top + 1)
        .filter(|&i| !set.contains(i as i64))
        .all(|i| i % 2 == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    Right,
    Left,
}

/// Moves an odd-size component one step.
///
/// Right: component `[i, i+2k]`, requires `i+2k+2 ∉ I`; returns
/// `(I \ {i}) ∪ {i+2k+1}`. Left: component `[i+1, i+2k+1]`, requires
/// `i ≥ 1` and `i-1 ∉ I`; returns `(I \ {i+2k+1}) ∪ {i}`.
pub fn shifted_set(
    set: &IndexSet,
    component: (usize, usize),
    direction: ShiftDirection,
) -> Result<IndexSet> {
    let (lo, hi) = component;
    if !connected_components(set).intervals.contains(&component) {
        return Err(Error::ShiftPrecondition(format!(
            "[{lo},{hi}] is not a component of {set}"
        )));
    }
    if (hi - lo + 1) % 2 == 0 {
        return Err(Error::ShiftPrecondition(format!(
            "[{lo},{hi}] has even size"
        )));
    }
    match direction {
        ShiftDirection::Right => {
            if lo == 0 {
                return Err(Error::ShiftPrecondition("component starts at 0".into()));
            }
            if set.contains(hi as i64 + 2) {
                return Err(Error::ShiftPrecondition(format!(
                    "{} is in the set",
                    hi + 2
                )));
            }
            set.without(lo as i64).with(hi as i64 + 1).map_err(|_| {
                Error::ShiftPrecondition(format!("{} is outside the generator range", hi + 1))
            })
        }
        ShiftDirection::Left => {
            if lo < 2 {
                return Err(Error::ShiftPrecondition("no room on the left".into()));
            }
            if set.contains(lo as i64 - 2) {
                return Err(Error::ShiftPrecondition(format!(
                    "{} is in the set",
                    lo - 2
                )));
            }
            set.without(hi as i64)
                .with(lo as i64 - 1)
                .map_err(|e| Error::ShiftPrecondition(e.to_string()))
        }
    }
}
