//! Closed product formulas for the signed odd-length generating functions.
//!
//! Every multinomial here is taken in `q = x²`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{IndexSet, Kind};
use crate::poly::IntPolynomial;
use crate::qseries::q_multinomial;
use crate::sets::{is_compressed, m_tilde, multinomial_parts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formula {
    ChessboardPlus,
    ChessboardMinus,
    ConjA,
    SnQuotient,
    SnFull,
    BAscending,
    ConjB,
}

impl Formula {
    pub const ALL: [Formula; 7] = [
        Formula::ChessboardPlus,
        Formula::ChessboardMinus,
        Formula::ConjA,
        Formula::SnQuotient,
        Formula::SnFull,
        Formula::BAscending,
        Formula::ConjB,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Formula::ChessboardPlus => "chessboard-plus",
            Formula::ChessboardMinus => "chessboard-minus",
            Formula::ConjA => "conjA",
            Formula::SnQuotient => "sn-quotient",
            Formula::SnFull => "sn-full",
            Formula::BAscending => "b-ascending",
            Formula::ConjB => "conjB",
        }
    }

    /// Group family whose index sets the formula takes.
    pub fn kind(self) -> Kind {
        match self {
            Formula::BAscending | Formula::ConjB => Kind::B,
            _ => Kind::A,
        }
    }

    pub fn takes_set(self) -> bool {
        !matches!(self, Formula::SnFull | Formula::BAscending)
    }

    /// Evaluates the formula at rank `n`; `set` defaults to `∅`.
    pub fn evaluate(self, n: usize, set: Option<&IndexSet>) -> Result<IntPolynomial> {
        let empty = IndexSet::empty(self.kind(), n)?;
        let set = set.unwrap_or(&empty);
        match self {
            Formula::ChessboardPlus => closed_chessboard_plus(n, set),
            Formula::ChessboardMinus => closed_chessboard_minus(n, set),
            Formula::ConjA => closed_conj_a(n, set),
            Formula::SnQuotient => closed_sn_quotient(n, set),
            Formula::SnFull => closed_sn_full(n),
            Formula::BAscending => closed_b_ascending(n),
            Formula::ConjB => closed_conj_b(n, set),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown formula {s:?}")))
    }
}

fn check_set(kind: Kind, n: usize, set: &IndexSet) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if set.kind() != kind {
        return Err(Error::KindMismatch {
            expected: kind,
            found: set.kind(),
        });
    }
    if set.rank() != n {
        return Err(Error::RankMismatch(n, set.rank()));
    }
    Ok(())
}

/// `∏_{k=lo}^{hi} (1 - x^{step·k})`, empty products being `1`.
fn one_minus_product(lo: u64, hi: u64, step: u64) -> IntPolynomial {
    IntPolynomial::product((lo..=hi).map(|k| IntPolynomial::one_minus_x_pow((step * k) as usize)))
}

/// The multinomial `[m̃; ⌊(|I_1|+1)/2⌋, …]` in `x²`.
fn component_multinomial(set: &IndexSet) -> IntPolynomial {
    let parts: Vec<i64> = multinomial_parts(set).iter().map(|&p| p as i64).collect();
    let total = parts.iter().sum::<i64>() as u64;
    q_multinomial(total, &parts)
        .expect("parts sum to their total")
        .dilate(2)
}

/// Signed sum over even chessboard elements `C_{n,+}^I`.
pub fn closed_chessboard_plus(n: usize, set: &IndexSet) -> Result<IntPolynomial> {
    check_set(Kind::A, n, set)?;
    let mt = m_tilde(set);
    Ok(&component_multinomial(set) * &one_minus_product(mt + 1, (n as u64 - 1) / 2, 2))
}

/// Signed sum over odd chessboard elements `C_{2m,-}^I`.
pub fn closed_chessboard_minus(n: usize, set: &IndexSet) -> Result<IntPolynomial> {
    check_set(Kind::A, n, set)?;
    if n % 2 == 1 {
        return Err(Error::OddRank(n));
    }
    if is_compressed(set) && set.contains(n as i64 - 1) {
        return Ok(IntPolynomial::zero());
    }
    Ok(-closed_chessboard_plus(n, set)?.shift(n / 2))
}

/// χ-weighted signed sum over `C_n^I`.
pub fn closed_conj_a(n: usize, set: &IndexSet) -> Result<IntPolynomial> {
    check_set(Kind::A, n, set)?;
    let m = n as u64 / 2;
    let mt = m_tilde(set);
    let mult = component_multinomial(set);
    if n % 2 == 1 {
        return Ok(&mult * &one_minus_product(mt + 1, m, 2));
    }
    if m == mt {
        return Ok(mult);
    }
    let tail = &mult * &one_minus_product(mt + 1, m - 1, 2);
    Ok(&IntPolynomial::one_plus_x_pow(m as usize) * &tail)
}

/// Signed sum over the whole quotient `S_n^I`.
///
/// The even-rank branch with `m ≠ m̃` carries the factor `1 - x^m`, the sum
/// of the two chessboard classes.
pub fn closed_sn_quotient(n: usize, set: &IndexSet) -> Result<IntPolynomial> {
    check_set(Kind::A, n, set)?;
    let mt = m_tilde(set);
    let base = &component_multinomial(set) * &one_minus_product(mt + 1, (n as u64 - 1) / 2, 2);
    if n % 2 == 1 || n as u64 == 2 * mt {
        Ok(base)
    } else {
        Ok(&IntPolynomial::one_minus_x_pow(n / 2) * &base)
    }
}

/// Signed sum over all of `S_n`.
pub fn closed_sn_full(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let m = (n / 2) as u64;
    if n % 2 == 1 {
        Ok(one_minus_product(1, m, 2))
    } else {
        Ok(&IntPolynomial::one_minus_x_pow(m as usize) * &one_minus_product(1, m - 1, 2))
    }
}

/// Signed sum over `B_n^{[n-1]}`: `∏_{j=1}^{⌈n/2⌉} (1 - x^{2j-1})`.
pub fn closed_b_ascending(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(IntPolynomial::product(
        (1..=n.div_ceil(2)).map(|j| IntPolynomial::one_minus_x_pow(2 * j - 1)),
    ))
}

/// Signed sum over `B_n^J`:
/// `∏_{j=a+1}^{n} (1 - x^j) / ∏_{i=1}^{m̃} (1 - x^{2i}) · [m̃; …]_{x²}`
/// with `a = min([0, n] \ J)` and `J_0` left out of `m̃`.
pub fn closed_conj_b(n: usize, set: &IndexSet) -> Result<IntPolynomial> {
    check_set(Kind::B, n, set)?;
    let a = (0..=n).find(|&i| !set.contains(i as i64)).unwrap_or(n);
    let numerator = &one_minus_product(a as u64 + 1, n as u64, 1) * &component_multinomial(set);
    let denominator = one_minus_product(1, m_tilde(set), 2);
    numerator.div_exact(&denominator)
}
