//! Signed generating functions of the odd length statistic over parabolic
//! quotients of the symmetric group `S_n` and the hyperoctahedral group `B_n`.
//!
//! * [`group`]: permutations, signed permutations, length, descents,
//!   parabolic decomposition.
//! * [`odd`]: the odd length `L`, its type-B decomposition, chessboard
//!   classes and `χ`.
//! * [`poly`], [`qseries`], [`sets`], [`closed`]: exact polynomials,
//!   q-multinomials, index-set structure and the closed product formulas.
//! * [`enumerate`]: group sweeps and quotient sums.
//! * [`verify`]: the identity catalog checked against enumeration.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod closed;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod odd;
pub mod poly;
pub mod qseries;
pub mod sets;
pub mod verify;

pub use error::{Error, Result};
pub use group::{GroupElement, IndexSet, Kind, PermutationA, PermutationB};
pub use poly::IntPolynomial;
