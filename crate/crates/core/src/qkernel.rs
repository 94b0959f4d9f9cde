//! q-integers, q-factorials, q-binomials, q-Pochhammer symbols and the
//! q-Stirling numbers of both kinds, as exact polynomials in `q`.
//!
//! Out-of-range indices give the zero polynomial so that sums over `k`
//! truncate themselves. A `base` argument `c` means the quantity is taken
//! with `q` replaced by `q^c`.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::{BiPoly, RatFunc};

/// Process-wide memo table. Values are computed outside the lock; concurrent
/// writers of the same key store identical values.
struct Memo<K, V> {
    cell: OnceLock<RwLock<HashMap<K, V>>>,
}

impl<K: Eq + Hash + Copy, V: Clone> Memo<K, V> {
    const fn new() -> Self {
        Memo {
            cell: OnceLock::new(),
        }
    }

    fn get_or_compute(&self, key: K, compute: impl FnOnce() -> V) -> V {
        let map = self.cell.get_or_init(Default::default);
        if let Some(v) = map.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = compute();
        map.write().unwrap().insert(key, v.clone());
        v
    }
}

static Q_BINOMIAL: Memo<(u32, u32), BiPoly> = Memo::new();
static STIRLING2: Memo<(u32, u32, u32), BiPoly> = Memo::new();
static STIRLING1: Memo<(u32, u32), BiPoly> = Memo::new();

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: u32) -> BiPoly {
    q_int_base(n, 1)
}

/// `[n]` in base `q^c`: `1 + q^c + ... + q^(c(n-1))`.
pub fn q_int_base(n: u32, c: u32) -> BiPoly {
    BiPoly::from_terms((0..n).map(|j| (j * c, 0, 1)))
}

pub fn q_factorial(n: u32) -> BiPoly {
    q_factorial_base(n, 1)
}

pub fn q_factorial_base(n: u32, c: u32) -> BiPoly {
    (1..=n).map(|j| q_int_base(j, c)).product()
}

/// Gaussian binomial coefficient via the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn q_binomial(n: i64, k: i64) -> BiPoly {
    if n < 0 || k < 0 || k > n {
        return BiPoly::zero();
    }
    let (n, k) = (n as u32, k as u32);
    if k == 0 || k == n {
        return BiPoly::one();
    }
    Q_BINOMIAL.get_or_compute((n, k), || {
        let left = q_binomial(n as i64 - 1, k as i64 - 1);
        let right = q_binomial(n as i64 - 1, k as i64).mul_q_pow(k);
        &left + &right
    })
}

pub fn q_binomial_base(n: i64, k: i64, c: u32) -> BiPoly {
    q_binomial(n, k).scale_q(c)
}

/// `(a; q^c)_n = prod_{j<n} (1 - q^(c j) a)`.
pub fn q_pochhammer(a: &BiPoly, n: u32, c: u32) -> BiPoly {
    let one = BiPoly::one();
    (0..n).map(|j| &one - &a.mul_q_pow(c * j)).product()
}

/// [`q_pochhammer`] for a rational-function argument.
pub fn q_pochhammer_rat(a: &RatFunc, n: u32, c: u32) -> RatFunc {
    let one = RatFunc::one();
    let mut acc = RatFunc::one();
    for j in 0..n {
        let factor = &one - &a.mul_poly(&BiPoly::monomial(1, c * j, 0));
        acc = &acc * &factor;
    }
    acc
}

/// q-Stirling number of the second kind `S[n, k]` in base `q^c`, from
/// `S[n, k] = S[n-1, k-1] + [k] S[n-1, k]`.
pub fn stirling2_q(n: u32, k: i64, c: u32) -> BiPoly {
    if k < 0 || k > n as i64 {
        return BiPoly::zero();
    }
    let k = k as u32;
    if k == n {
        return BiPoly::one();
    }
    if k == 0 {
        return BiPoly::zero();
    }
    STIRLING2.get_or_compute((n, k, c), || {
        let left = stirling2_q(n - 1, k as i64 - 1, c);
        let right = &q_int_base(k, c) * &stirling2_q(n - 1, k as i64, c);
        &left + &right
    })
}

/// q-Stirling number of the first kind, from
/// `s[n+1, k] = s[n, k-1] - [n] s[n, k]`.
pub fn stirling1_q(n: u32, k: i64) -> BiPoly {
    if k < 0 || k > n as i64 {
        return BiPoly::zero();
    }
    let k = k as u32;
    if k == n {
        return BiPoly::one();
    }
    if k == 0 {
        return BiPoly::zero();
    }
    STIRLING1.get_or_compute((n, k), || {
        let left = stirling1_q(n - 1, k as i64 - 1);
        let right = &q_int(n - 1) * &stirling1_q(n - 1, k as i64);
        &left - &right
    })
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binomial_poly(n: i64, k: i64) -> BiPoly {
    BiPoly::constant(binomial(n, k))
}

/// Both sides of `(q-1)^(n-k) S[n,k] = sum_i (-1)^(n-i) C(n,i) [i, k]` with
/// an ordinary outer binomial and a Gaussian inner one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingIdentityCheck {
    pub n: u32,
    pub k: u32,
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    pub equal: bool,
}

pub fn stirling_binomial_check(n: u32, k: u32) -> StirlingIdentityCheck {
    let q_minus_one: BiPoly = &BiPoly::q() - &BiPoly::one();
    let lhs = &q_minus_one.pow(n.saturating_sub(k)) * &stirling2_q(n, k as i64, 1);
    let rhs: BiPoly = (0..=n)
        .map(|i| {
            let term = &binomial_poly(n as i64, i as i64) * &q_binomial(i as i64, k as i64);
            if (n - i) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    let equal = lhs == rhs;
    StirlingIdentityCheck {
        n,
        k,
        lhs,
        rhs,
        equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(0), BiPoly::zero());
        assert_eq!(q_int(1), BiPoly::one());
        assert_eq!(q_int(3), p("1 + q + q^2"));
        assert_eq!(q_int_base(2, 3), p("1 + q^3"));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0), BiPoly::one());
        assert_eq!(q_factorial(2), p("1 + q"));
        assert_eq!(q_factorial(3), p("1 + 2*q + 2*q^2 + q^3"));
    }

    #[test]
    fn q_binomials() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), BiPoly::one());
        }
        assert_eq!(q_binomial(2, 1), p("1 + q"));
        assert_eq!(q_binomial(4, 2), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(q_binomial(3, 5), BiPoly::zero());
        assert_eq!(q_binomial(3, -1), BiPoly::zero());
    }

    #[test]
    fn pochhammer_symbols() {
        let x = BiPoly::x();
        assert_eq!(q_pochhammer(&x, 0, 1), BiPoly::one());
        assert_eq!(q_pochhammer(&x, 2, 1), p("1 - (1 + q)*x + q*x^2"));
        assert_eq!(q_pochhammer(&x, 2, 2), p("1 - (1 + q^2)*x + q^2*x^2"));
        let xr = RatFunc::from(x.clone());
        assert_eq!(
            q_pochhammer_rat(&xr, 3, 1),
            RatFunc::from(q_pochhammer(&x, 3, 1))
        );
    }

    #[test]
    fn stirling_second_kind() {
        for n in 0..6 {
            assert_eq!(stirling2_q(n, n as i64, 1), BiPoly::one());
        }
        assert_eq!(stirling2_q(3, 2, 1), p("2 + q"));
        assert_eq!(stirling2_q(4, 2, 1), p("3 + 3*q + q^2"));
        assert_eq!(stirling2_q(3, 2, 2), p("2 + q^2"));
        assert_eq!(stirling2_q(3, 4, 1), BiPoly::zero());
        assert_eq!(stirling2_q(3, 0, 1), BiPoly::zero());
        assert_eq!(stirling2_q(0, 0, 1), BiPoly::one());
    }

    #[test]
    fn stirling_first_kind() {
        for n in 0..6 {
            assert_eq!(stirling1_q(n, n as i64), BiPoly::one());
        }
        assert_eq!(stirling1_q(2, 1), BiPoly::constant(-1));
        assert_eq!(stirling1_q(3, 1), p("1 + q"));
    }

    #[test]
    fn ordinary_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn stirling_identity_examples() {
        let c = stirling_binomial_check(2, 1);
        assert_eq!(c.lhs, p("q - 1"));
        assert!(c.equal);
        let c = stirling_binomial_check(4, 4);
        assert_eq!((c.lhs.clone(), c.equal), (BiPoly::one(), true));
        let c = stirling_binomial_check(3, 1);
        assert_eq!(c.lhs, p("(q - 1)^2"));
        assert!(c.equal);
    }
}
