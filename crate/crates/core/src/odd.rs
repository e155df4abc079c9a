//! The odd length statistic `L` on `S_n` and `B_n`, its `oinv + oneg + onsp`
//! decomposition, chessboard classes and the character `χ`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{
    left_parabolic_decompose, GroupElement, IndexSet, Kind, PermutationA, PermutationB,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChessboardClass {
    /// `i + σ(i)` even for every `i`.
    Plus,
    /// `i + σ(i)` odd for every `i`.
    Minus,
    NotChessboard,
}

impl ChessboardClass {
    pub const ALL: [ChessboardClass; 3] = [
        ChessboardClass::Plus,
        ChessboardClass::Minus,
        ChessboardClass::NotChessboard,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn chi(self) -> Option<i32> {
        match self {
            ChessboardClass::Plus => Some(1),
            ChessboardClass::Minus => Some(-1),
            ChessboardClass::NotChessboard => None,
        }
    }
}

impl fmt::Display for ChessboardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChessboardClass::Plus => "plus",
            ChessboardClass::Minus => "minus",
            ChessboardClass::NotChessboard => "none",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OddStatsB {
    pub oinv: u64,
    pub oneg: u64,
    pub onsp: u64,
}

impl OddStatsB {
    pub fn total(&self) -> u64 {
        self.oinv + self.oneg + self.onsp
    }
}

/// Inversions `(i, j)`, `i < j`, whose positions have opposite parity.
pub fn odd_length_a(w: &PermutationA) -> u64 {
    let v = w.window();
    let mut count = 0;
    for i in 0..v.len() {
        for j in (i + 1..v.len()).step_by(2) {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

/// `Σ_{I ⊆ [n-1]} (-1)^{|I|} 2^{n-2-|I|} ℓ(σ^I)`, evaluated exactly.
///
/// `σ^I` has no right descents in `I` and is the inverse of the left quotient
/// part of `σ^{-1}`. Summing the left quotient parts of `σ` instead gives
/// `L(σ^{-1})`.
///
/// The sum is accumulated doubled (weights `2^{n-1-|I|}`) so every term is an
/// integer; an odd doubled total is reported as a parity violation.
pub fn odd_length_a_alternating(w: &PermutationA) -> Result<u64> {
    let n = w.rank();
    let inverse = w.inverse();
    let mut doubled = BigInt::from(0);
    for set in IndexSet::all(Kind::A, n)? {
        let (_, rep) = left_parabolic_decompose(&inverse, &set)?;
        let term = BigInt::from(rep.length()) << (n - 1 - set.len());
        if set.len() % 2 == 0 {
            doubled += term;
        } else {
            doubled -= term;
        }
    }
    let (half, rem) = doubled.div_rem(&BigInt::from(2));
    if rem != BigInt::from(0) {
        return Err(Error::ParityViolation(doubled.to_string()));
    }
    u64::try_from(half).map_err(|e| Error::ParityViolation(e.to_string()))
}

/// Half the number of opposite-parity inversions of the extended map on `[-n, n]`.
pub fn odd_length_b(w: &PermutationB) -> u64 {
    let n = w.rank() as i64;
    let ext: Vec<i64> = (-n..=n).map(|i| w.value(i)).collect();
    let mut count = 0u64;
    for i in 0..ext.len() {
        for j in (i + 1..ext.len()).step_by(2) {
            if ext[i] > ext[j] {
                count += 1;
            }
        }
    }
    count / 2
}

pub fn odd_stats_b(w: &PermutationB) -> OddStatsB {
    let v = w.window();
    let mut stats = OddStatsB::default();
    for (i, &x) in v.iter().enumerate() {
        // position i + 1 is odd
        if x < 0 && i % 2 == 0 {
            stats.oneg += 1;
        }
        for j in (i + 1..v.len()).step_by(2) {
            if x > v[j] {
                stats.oinv += 1;
            }
            if x + v[j] < 0 {
                stats.onsp += 1;
            }
        }
    }
    stats
}

/// Parity test `i + σ(i)` over the window (signed values for type B).
pub fn chessboard_class_of(window: &[i32]) -> ChessboardClass {
    let parity = |i: usize| (i as i64 + 1 + window[i] as i64).rem_euclid(2);
    match window.len() {
        0 => ChessboardClass::Plus,
        n => {
            let first = parity(0);
            if (1..n).all(|i| parity(i) == first) {
                if first == 0 {
                    ChessboardClass::Plus
                } else {
                    ChessboardClass::Minus
                }
            } else {
                ChessboardClass::NotChessboard
            }
        }
    }
}

pub fn chessboard_class<E: GroupElement>(w: &E) -> ChessboardClass {
    chessboard_class_of(w.window())
}

pub fn chi<E: GroupElement>(w: &E) -> Result<i32> {
    chessboard_class(w).chi().ok_or(Error::NotChessboard)
}
