//! The weighted Motzkin triangle
//!
//! ```text
//! a(0, k) = [k = 0]
//! a(n, k) = a(n-1, k-1) + s(k) a(n-1, k) + t(k) a(n-1, k+1)
//! ```
//!
//! whose first column `a(n, 0)` is a moment sequence with Hankel
//! determinants `prod_{i=1}^{n-1} prod_{k<i} t(k)`.

use std::fmt;

use thiserror::Error;

use crate::families;
use crate::qkernel::{q_binomial, q_int, q_pochhammer};
use crate::ring::{BiPoly, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotzkinError {
    #[error("need {needed} values of {which}, have {have}")]
    InsufficientCoefficients {
        which: &'static str,
        needed: usize,
        have: usize,
    },
}

/// Diagonal weights `s(k)` and sub-diagonal weights `t(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct JacobiCoefficients {
    pub s: Vec<RatFunc>,
    pub t: Vec<RatFunc>,
}

impl JacobiCoefficients {
    pub fn new(s: Vec<RatFunc>, t: Vec<RatFunc>) -> Self {
        JacobiCoefficients { s, t }
    }

    pub fn from_polys(s: Vec<BiPoly>, t: Vec<BiPoly>) -> Self {
        JacobiCoefficients {
            s: s.into_iter().map(RatFunc::from).collect(),
            t: t.into_iter().map(RatFunc::from).collect(),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.s.iter().chain(&self.t).all(RatFunc::is_polynomial)
    }

    fn require(&self, s_len: usize, t_len: usize) -> Result<(), MotzkinError> {
        if self.s.len() < s_len {
            return Err(MotzkinError::InsufficientCoefficients {
                which: "s",
                needed: s_len,
                have: self.s.len(),
            });
        }
        if self.t.len() < t_len {
            return Err(MotzkinError::InsufficientCoefficients {
                which: "t",
                needed: t_len,
                have: self.t.len(),
            });
        }
        Ok(())
    }
}

/// Lower-triangular table `a(n, k)`, `0 <= k <= n <= depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotzkinTable {
    rows: Vec<Vec<RatFunc>>,
}

impl MotzkinTable {
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn entry(&self, n: usize, k: usize) -> &RatFunc {
        &self.rows[n][k]
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.rows
    }

    /// The moment sequence `a(n, 0)`.
    pub fn column0(&self) -> Vec<RatFunc> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    /// Entries as polynomials when every entry has denominator 1.
    pub fn poly_rows(&self) -> Option<Vec<Vec<BiPoly>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(RatFunc::to_poly).collect())
            .collect()
    }
}

impl fmt::Display for MotzkinTable {
    /// One row per line: `n: a(n,0) | a(n,1) | ... | a(n,n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{n}: {}", cells.join(" | "))?;
        }
        Ok(())
    }
}

pub fn build_table(
    coeffs: &JacobiCoefficients,
    n_max: usize,
) -> Result<MotzkinTable, MotzkinError> {
    coeffs.require(n_max, n_max.saturating_sub(1))?;
    let mut rows: Vec<Vec<RatFunc>> = vec![vec![RatFunc::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let mut acc = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    RatFunc::zero()
                };
                if k < n {
                    acc = &acc + &(&coeffs.s[k] * &prev[k]);
                }
                if k + 1 < n {
                    acc = &acc + &(&coeffs.t[k] * &prev[k + 1]);
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    Ok(MotzkinTable { rows })
}

/// `prod_{i=1}^{n-1} prod_{k=0}^{i-1} t(k) = prod_{k=0}^{n-2} t(k)^(n-1-k)`.
pub fn product_formula(coeffs: &JacobiCoefficients, n: usize) -> Result<RatFunc, MotzkinError> {
    coeffs.require(0, n.saturating_sub(1))?;
    let mut acc = RatFunc::one();
    for k in 0..n.saturating_sub(1) {
        acc = &acc * &coeffs.t[k].pow((n - 1 - k) as u32);
    }
    Ok(acc)
}

/// The three moment sequences with explicit Jacobi coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalInstance {
    /// Rogers–Szegő polynomials `r_n(x)`.
    RogersSzego,
    /// `(x; q)_n`.
    Pochhammer,
    /// q-Hermite polynomials `H_n(x)`.
    Hermite,
}

impl ClassicalInstance {
    pub const ALL: [ClassicalInstance; 3] = [
        ClassicalInstance::RogersSzego,
        ClassicalInstance::Pochhammer,
        ClassicalInstance::Hermite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalInstance::RogersSzego => "rs",
            ClassicalInstance::Pochhammer => "poch",
            ClassicalInstance::Hermite => "hermite",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == name)
    }

    pub fn s(self, k: u32) -> RatFunc {
        let x = BiPoly::x();
        match self {
            ClassicalInstance::RogersSzego => RatFunc::from((&x + &BiPoly::one()).mul_q_pow(k)),
            ClassicalInstance::Pochhammer => {
                // q^k + q^(k-1) x (1 - q^k (1 + q)), over a common factor q.
                let inner = &BiPoly::one() - &(&BiPoly::one() + &BiPoly::q()).mul_q_pow(k);
                let num = &BiPoly::monomial(1, k + 1, 0) + &(&x * &inner).mul_q_pow(k);
                RatFunc::new(num, BiPoly::q()).unwrap()
            }
            ClassicalInstance::Hermite => RatFunc::from(x.mul_q_pow(k)),
        }
    }

    pub fn t(self, k: u32) -> RatFunc {
        let x = BiPoly::x();
        let one = BiPoly::one();
        match self {
            ClassicalInstance::RogersSzego => {
                // q^k x (q^(k+1) - 1)
                let f = &BiPoly::monomial(1, k + 1, 0) - &one;
                RatFunc::from((&x * &f).mul_q_pow(k))
            }
            ClassicalInstance::Pochhammer => {
                // q^(2k) (1 - q^(k+1)) x (1 - q^k x)
                let a = &one - &BiPoly::monomial(1, k + 1, 0);
                let b = &one - &BiPoly::monomial(1, k, 1);
                RatFunc::from((&(&a * &x) * &b).mul_q_pow(2 * k))
            }
            ClassicalInstance::Hermite => RatFunc::from(-q_int(k + 1).mul_q_pow(k)),
        }
    }

    pub fn coefficients(self, len: usize) -> JacobiCoefficients {
        JacobiCoefficients {
            s: (0..len as u32).map(|k| self.s(k)).collect(),
            t: (0..len as u32).map(|k| self.t(k)).collect(),
        }
    }

    /// The known closed form of `a(n, k)`.
    pub fn closed_form(self, n: u32, k: u32) -> BiPoly {
        if k > n {
            return BiPoly::zero();
        }
        let binom = q_binomial(n as i64, k as i64);
        let tail = match self {
            ClassicalInstance::RogersSzego => families::rogers_szego_sum(n - k),
            ClassicalInstance::Pochhammer => q_pochhammer(&BiPoly::monomial(1, k, 1), n - k, 1),
            ClassicalInstance::Hermite => families::q_hermite_recurrence(n - k),
        };
        &binom * &tail
    }
}

/// Does the triangle generated from the instance's coefficients match its
/// closed form entry by entry up to `n_max`?
pub fn closed_form_check(instance: ClassicalInstance, n_max: usize) -> bool {
    let coeffs = instance.coefficients(n_max.max(1));
    let table = build_table(&coeffs, n_max).expect("enough coefficients");
    table.rows.iter().enumerate().all(|(n, row)| {
        row.iter()
            .enumerate()
            .all(|(k, a)| a.to_poly().as_ref() == Some(&instance.closed_form(n as u32, k as u32)))
    })
}
