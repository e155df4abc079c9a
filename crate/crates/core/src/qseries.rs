//! q-integers, q-factorials, Gaussian binomials and q-multinomials.
//!
//! Multinomials are built as products of q-binomials from the q-Pascal
//! recurrence, so every intermediate value stays a polynomial.

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `[n]_q = 1 + q + … + q^{n-1}`.
pub fn q_bracket(n: u64) -> IntPolynomial {
    IntPolynomial::from_i64s(&vec![1; n as usize])
}

/// `[n]_q! = [1]_q [2]_q ⋯ [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: u64) -> IntPolynomial {
    IntPolynomial::product((1..=n).map(q_bracket))
}

/// Gaussian binomial `[n choose k]_q`, zero outside `0 ≤ k ≤ n`.
pub fn q_binomial(n: u64, k: u64) -> IntPolynomial {
    if k > n {
        return IntPolynomial::zero();
    }
    let k = k.min(n - k) as usize;
    // row[j] = [m choose j]_q, advanced with [m,j] = [m-1,j-1] + q^j [m-1,j]
    let mut row = vec![IntPolynomial::one()];
    for m in 1..=n as usize {
        let width = m.min(k) + 1;
        let mut next = Vec::with_capacity(width);
        for j in 0..width {
            let mut entry = if j > 0 {
                row[j - 1].clone()
            } else {
                IntPolynomial::zero()
            };
            if j < row.len() && j < m {
                entry += &row[j].shift(j);
            }
            next.push(entry);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `[n; parts]_q = [n]_q! / ∏ [parts_i]_q!`.
pub fn q_multinomial(n: u64, parts: &[i64]) -> Result<IntPolynomial> {
    if let Some(&bad) = parts.iter().find(|&&p| p < 0) {
        return Err(Error::NegativePart(bad));
    }
    if parts.iter().sum::<i64>() != n as i64 {
        return Err(Error::PartsSum {
            n,
            parts: parts.to_vec(),
        });
    }
    let mut running = 0u64;
    let mut out = IntPolynomial::one();
    for &p in parts {
        running += p as u64;
        out = &out * &q_binomial(running, p as u64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert_eq!(q_multinomial(2, &[1, 1]).unwrap(), p(&[1, 1]));
        assert_eq!(q_multinomial(4, &[2, 2]).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_multinomial(5, &[5]).unwrap(), IntPolynomial::one());
        assert_eq!(q_multinomial(0, &[]).unwrap(), IntPolynomial::one());
        assert_eq!(q_bracket(3), p(&[1, 1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0), IntPolynomial::one());
        assert!(matches!(
            q_multinomial(3, &[1, 1]),
            Err(Error::PartsSum { .. })
        ));
        assert_eq!(q_multinomial(1, &[2, -1]), Err(Error::NegativePart(-1)));
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        for n in 0..=9 {
            for k in 0..=n {
                let expected = q_factorial(n)
                    .div_exact(&(&q_factorial(k) * &q_factorial(n - k)))
                    .unwrap();
                assert_eq!(q_binomial(n, k), expected, "[{n} choose {k}]");
            }
        }
    }

    proptest! {
        #[test]
        fn multinomial_invariants(parts in prop::collection::vec(0i64..4, 0..5), seed in any::<u64>()) {
            let n = parts.iter().sum::<i64>() as u64;
            let m = q_multinomial(n, &parts).unwrap();
            let mut shuffled = parts.clone();
            let len = shuffled.len();
            if len > 1 {
                shuffled.rotate_left((seed as usize) % len);
                shuffled.swap(0, (seed as usize / 7) % len);
            }
            prop_assert_eq!(&q_multinomial(n, &shuffled).unwrap(), &m);
            let mut pair_products = 0usize;
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    pair_products += (parts[i] * parts[j]) as usize;
                }
            }
            prop_assert_eq!(m.degree(), Some(pair_products));
            prop_assert!(m.coeffs().iter().all(|c| c > &0.into()));
            let quotient = parts
                .iter()
                .fold(q_factorial(n), |acc, &p| acc.div_exact(&q_factorial(p as u64)).unwrap());
            prop_assert_eq!(quotient, m);
        }

        #[test]
        fn pascal_recurrence(n in 1u64..14, k in 1u64..14) {
            prop_assume!(k <= n);
            let lhs = q_binomial(n, k);
            let rhs = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k as usize);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
