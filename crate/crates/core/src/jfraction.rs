//! Recovering Jacobi coefficients from a moment sequence.
//!
//! With `D_k = det(m_{i+j})_{i,j<k}` and `E_k` the same minor with its last
//! column replaced by `m_{i+k}`, the monic orthogonal polynomials have
//! subleading coefficient `-E_k / D_k`, which gives
//!
//! ```text
//! s(k) = E_{k+1}/D_{k+1} - E_k/D_k
//! t(k) = D_{k+2} D_k / D_{k+1}^2
//! ```

use rayon::prelude::*;
use thiserror::Error;

use crate::hankel::det_rat;
use crate::motzkin::{build_table, JacobiCoefficients, MotzkinError};
use crate::ring::{BiPoly, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JFractionError {
    #[error("need {needed} moments, have {have}")]
    InsufficientMoments { needed: usize, have: usize },
    #[error("Hankel minor of order {order} vanishes")]
    DegenerateMoments { order: usize },
    #[error("moment m_0 must be 1")]
    NotNormalized,
    #[error(transparent)]
    Coefficients(#[from] MotzkinError),
}

/// Moments `m_0, m_1, ...` with `m_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    moments: Vec<RatFunc>,
}

impl MomentSequence {
    pub fn new(moments: Vec<RatFunc>) -> Result<Self, JFractionError> {
        match moments.first() {
            Some(m0) if m0 != &RatFunc::one() => Err(JFractionError::NotNormalized),
            _ => Ok(MomentSequence { moments }),
        }
    }

    pub fn from_polys(moments: &[BiPoly]) -> Result<Self, JFractionError> {
        Self::new(moments.iter().map(RatFunc::from).collect())
    }

    pub fn moments(&self) -> &[RatFunc] {
        &self.moments
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }
}

fn minor(m: &[RatFunc], k: usize, last_shift: usize) -> RatFunc {
    let rows: Vec<Vec<RatFunc>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let idx = if j + 1 == k { i + last_shift } else { i + j };
                    m[idx].clone()
                })
                .collect()
        })
        .collect();
    det_rat(&rows)
}

/// `s(0..depth)` and `t(0..depth-1)`; needs moments `m_0 ..= m_{2 depth - 1}`.
pub fn extract(
    moments: &MomentSequence,
    depth: usize,
) -> Result<JacobiCoefficients, JFractionError> {
    let m = &moments.moments;
    let needed = 2 * depth;
    if m.len() < needed {
        return Err(JFractionError::InsufficientMoments {
            needed,
            have: m.len(),
        });
    }
    if depth == 0 {
        return Ok(JacobiCoefficients::default());
    }
    // d[k] = D_k and e[k] = E_k for 0 <= k <= depth.
    let (d, e): (Vec<RatFunc>, Vec<RatFunc>) = (0..=depth)
        .into_par_iter()
        .map(|k| {
            if k == 0 {
                (RatFunc::one(), RatFunc::zero())
            } else {
                (minor(m, k, k - 1), minor(m, k, k))
            }
        })
        .unzip();
    if let Some(order) = (1..=depth).find(|&k| d[k].is_zero()) {
        return Err(JFractionError::DegenerateMoments { order });
    }
    let ratio = |k: usize| e[k].checked_div(&d[k]).expect("nonzero minor");
    let s = (0..depth).map(|k| &ratio(k + 1) - &ratio(k)).collect();
    let t = (0..depth - 1)
        .map(|k| {
            (&d[k + 2] * &d[k])
                .checked_div(&d[k + 1].pow(2))
                .expect("nonzero minor")
        })
        .collect();
    Ok(JacobiCoefficients::new(s, t))
}

/// Regenerates moments from the first `depth` values of `s` and `depth - 1`
/// values of `t` (later ones set to zero) and extracts them back.
pub fn roundtrip_check(coeffs: &JacobiCoefficients, depth: usize) -> Result<bool, JFractionError> {
    if coeffs.s.len() < depth {
        return Err(MotzkinError::InsufficientCoefficients {
            which: "s",
            needed: depth,
            have: coeffs.s.len(),
        }
        .into());
    }
    let t_len = depth.saturating_sub(1);
    if coeffs.t.len() < t_len {
        return Err(MotzkinError::InsufficientCoefficients {
            which: "t",
            needed: t_len,
            have: coeffs.t.len(),
        }
        .into());
    }
    let n_max = (2 * depth).saturating_sub(1);
    let mut padded =
        JacobiCoefficients::new(coeffs.s[..depth].to_vec(), coeffs.t[..t_len].to_vec());
    padded.s.resize(n_max, RatFunc::zero());
    padded.t.resize(n_max.saturating_sub(1), RatFunc::zero());
    let table = build_table(&padded, n_max)?;
    let back = extract(&MomentSequence::new(table.column0())?, depth)?;
    Ok(back.s == coeffs.s[..depth] && back.t == coeffs.t[..t_len])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyId, FamilyKind, Route};
    use crate::motzkin::ClassicalInstance;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn moments_of(kind: FamilyKind, len: usize) -> MomentSequence {
        let seq = generate(FamilyId::plain(kind), len - 1, Route::ClosedForm);
        MomentSequence::from_polys(&seq.values).unwrap()
    }

    #[test]
    fn depth_two_examples() {
        let c = extract(&moments_of(FamilyKind::RogersSzego, 4), 2).unwrap();
        assert_eq!(c.s[0], r("x + 1"));
        assert_eq!(c.t[0], r("x*(q - 1)"));
        let c = extract(&moments_of(FamilyKind::Pochhammer, 4), 2).unwrap();
        assert_eq!(c.s[0], r("1 - x"));
        assert_eq!(c.t[0], r("(1 - q)*x*(1 - x)"));
        let c = extract(&moments_of(FamilyKind::QHermite, 4), 2).unwrap();
        assert_eq!(c.s[0], r("x"));
        assert_eq!(c.t[0], r("-1"));
    }

    #[test]
    fn instances_recover_their_coefficients() {
        for inst in ClassicalInstance::ALL {
            let table = build_table(&inst.coefficients(9), 9).unwrap();
            let got = extract(&MomentSequence::new(table.column0()).unwrap(), 5).unwrap();
            for k in 0..5u32 {
                assert_eq!(got.s[k as usize], inst.s(k), "{} s({k})", inst.name());
            }
            for k in 0..4u32 {
                assert_eq!(got.t[k as usize], inst.t(k), "{} t({k})", inst.name());
            }
        }
    }

    #[test]
    fn roundtrips() {
        let simple = JacobiCoefficients::new(vec![RatFunc::zero(); 4], vec![RatFunc::one(); 3]);
        assert!(roundtrip_check(&simple, 4).unwrap());
        let rs = ClassicalInstance::RogersSzego.coefficients(4);
        assert!(roundtrip_check(&rs, 4).unwrap());
        let rational = JacobiCoefficients::new(
            vec![r("(x)/(1 - q)"), r("q"), r("(1)/(x)")],
            vec![r("(1 + x)/(q)"), r("(x)/(1 + q)")],
        );
        assert!(roundtrip_check(&rational, 3).unwrap());
    }

    #[test]
    fn degenerate_and_short_inputs() {
        let c = JacobiCoefficients::new(vec![RatFunc::one(); 2], vec![RatFunc::zero()]);
        assert_eq!(
            roundtrip_check(&c, 2),
            Err(JFractionError::DegenerateMoments { order: 2 })
        );
        let m = moments_of(FamilyKind::Phi, 3);
        assert_eq!(
            extract(&m, 2),
            Err(JFractionError::InsufficientMoments { needed: 4, have: 3 })
        );
        assert_eq!(
            MomentSequence::new(vec![r("2")]),
            Err(JFractionError::NotNormalized)
        );
    }
}
