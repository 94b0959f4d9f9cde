//! Polynomial families and their construction routes.
//!
//! Every family can be built two independent ways: from an explicit sum or
//! product ([`Route::ClosedForm`]) and from a recurrence or by iterating an
//! operator on the constant 1 ([`Route::RecurrenceOrOperator`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::motzkin::{build_table, ClassicalInstance};
use crate::operators::{epsilon, q_derivative};
use crate::qkernel::{
    binomial_poly, q_binomial, q_int, q_pochhammer, q_pochhammer_rat, stirling1_q, stirling2_q,
};
use crate::ring::{BiPoly, QImage, RatFunc, XImage};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// `φ_n(x) = Σ S[n,k] x^k`
    Phi,
    /// `Φ_n(x) = Σ q^C(k,2) S[n,k] x^k`
    BigPhi,
    RogersSzego,
    QHermite,
    /// `ψ_n(x, c) = (x^c + xD)^n 1`
    Psi,
    /// `Ψ_n(x, c) = (x^c ε + xD)^n 1`
    BigPsi,
    /// `<x>_n = Π (x - [j])`
    FallingFactorial,
    /// `(x; q)_n`
    Pochhammer,
    /// `φ_n` at `q = 1`
    ClassicalBell,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::Phi,
        FamilyKind::BigPhi,
        FamilyKind::RogersSzego,
        FamilyKind::QHermite,
        FamilyKind::Psi,
        FamilyKind::BigPsi,
        FamilyKind::FallingFactorial,
        FamilyKind::Pochhammer,
        FamilyKind::ClassicalBell,
    ];

    /// Command-line name (case-sensitive).
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Phi => "phi",
            FamilyKind::BigPhi => "Phi",
            FamilyKind::RogersSzego => "rs",
            FamilyKind::QHermite => "hermite",
            FamilyKind::Psi => "psi",
            FamilyKind::BigPsi => "Psi",
            FamilyKind::FallingFactorial => "ffact",
            FamilyKind::Pochhammer => "poch",
            FamilyKind::ClassicalBell => "bell",
        }
    }

    pub fn takes_c(self) -> bool {
        matches!(self, FamilyKind::Psi | FamilyKind::BigPsi)
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its integer parameter `c` (1 for families without one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub c: u32,
}

impl FamilyId {
    /// `c` is forced to 1 for families that do not take it.
    ///
    /// # Panics
    /// If `c == 0` for a family that takes it.
    pub fn new(kind: FamilyKind, c: u32) -> Self {
        if kind.takes_c() {
            assert!(c >= 1, "family parameter c must be at least 1");
            FamilyId { kind, c }
        } else {
            FamilyId { kind, c: 1 }
        }
    }

    pub fn plain(kind: FamilyKind) -> Self {
        FamilyId::new(kind, 1)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.takes_c() {
            write!(f, "{}(c={})", self.kind, self.c)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    ClosedForm,
    RecurrenceOrOperator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    pub family: FamilyId,
    pub values: Vec<BiPoly>,
}

impl PolySequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Members `0..=n_max` of the family along the chosen route.
pub fn generate(family: FamilyId, n_max: usize, route: Route) -> PolySequence {
    let n_max = n_max as u32;
    let c = family.c;
    let values = match (family.kind, route) {
        (FamilyKind::Phi, Route::ClosedForm) => (0..=n_max).map(phi_sum).collect(),
        (FamilyKind::Phi, Route::RecurrenceOrOperator) => {
            iterate_from_one(n_max, |p| (p + &q_derivative(p)).mul_x_pow(1))
        }
        (FamilyKind::BigPhi, Route::ClosedForm) => (0..=n_max).map(big_phi_sum).collect(),
        (FamilyKind::BigPhi, Route::RecurrenceOrOperator) => {
            iterate_from_one(n_max, |p| (&epsilon(p) + &q_derivative(p)).mul_x_pow(1))
        }
        (FamilyKind::RogersSzego, Route::ClosedForm) => (0..=n_max).map(rogers_szego_sum).collect(),
        (FamilyKind::RogersSzego, Route::RecurrenceOrOperator) => rogers_szego_recurrence(n_max),
        (FamilyKind::QHermite, Route::ClosedForm) => {
            let coeffs = ClassicalInstance::Hermite.coefficients(n_max as usize);
            build_table(&coeffs, n_max as usize)
                .expect("coefficients cover the depth")
                .column0()
                .into_iter()
                .map(|m| m.into_poly().expect("polynomial weights"))
                .collect()
        }
        (FamilyKind::QHermite, Route::RecurrenceOrOperator) => q_hermite_sequence(n_max),
        (FamilyKind::Psi, Route::ClosedForm) => (0..=n_max).map(|n| psi_sum(n, c)).collect(),
        (FamilyKind::Psi, Route::RecurrenceOrOperator) => {
            iterate_from_one(n_max, |p| &p.mul_x_pow(c) + &q_derivative(p).mul_x_pow(1))
        }
        (FamilyKind::BigPsi, Route::ClosedForm) => (0..=n_max).map(|n| big_psi_sum(n, c)).collect(),
        (FamilyKind::BigPsi, Route::RecurrenceOrOperator) => iterate_from_one(n_max, |p| {
            &epsilon(p).mul_x_pow(c) + &q_derivative(p).mul_x_pow(1)
        }),
        (FamilyKind::FallingFactorial, Route::ClosedForm) => (0..=n_max)
            .map(|n| (0..=n).map(|k| stirling1_q(n, k as i64).mul_x_pow(k)).sum())
            .collect(),
        (FamilyKind::FallingFactorial, Route::RecurrenceOrOperator) => {
            let mut out = vec![BiPoly::one()];
            for j in 0..n_max {
                let factor = &BiPoly::x() - &q_int(j);
                let next = out.last().unwrap() * &factor;
                out.push(next);
            }
            out
        }
        (FamilyKind::Pochhammer, Route::ClosedForm) => (0..=n_max)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let term = q_binomial(n as i64, k as i64)
                            .mul_q_pow(choose2(k))
                            .mul_x_pow(k);
                        if k % 2 == 1 {
                            -term
                        } else {
                            term
                        }
                    })
                    .sum()
            })
            .collect(),
        (FamilyKind::Pochhammer, Route::RecurrenceOrOperator) => {
            let x = BiPoly::x();
            (0..=n_max).map(|n| q_pochhammer(&x, n, 1)).collect()
        }
        (FamilyKind::ClassicalBell, route) => {
            generate(FamilyId::plain(FamilyKind::Phi), n_max as usize, route)
                .values
                .iter()
                .map(BiPoly::at_q_one)
                .collect()
        }
    };
    PolySequence { family, values }
}

/// The n-th member along the closed-form route.
pub fn member(family: FamilyId, n: usize) -> BiPoly {
    generate(family, n, Route::ClosedForm).values.pop().unwrap()
}

fn iterate_from_one(n_max: u32, step: impl Fn(&BiPoly) -> BiPoly) -> Vec<BiPoly> {
    let mut out = vec![BiPoly::one()];
    for _ in 0..n_max {
        let next = step(out.last().unwrap());
        out.push(next);
    }
    out
}

fn choose2(k: u32) -> u32 {
    k * k.saturating_sub(1) / 2
}

fn phi_sum(n: u32) -> BiPoly {
    (0..=n)
        .map(|k| stirling2_q(n, k as i64, 1).mul_x_pow(k))
        .sum()
}

fn big_phi_sum(n: u32) -> BiPoly {
    (0..=n)
        .map(|k| {
            stirling2_q(n, k as i64, 1)
                .mul_q_pow(choose2(k))
                .mul_x_pow(k)
        })
        .sum()
}

fn psi_sum(n: u32, c: u32) -> BiPoly {
    let bracket_c = q_int(c);
    (0..=n)
        .map(|k| &stirling2_q(n, k as i64, c).mul_x_pow(k * c) * &bracket_c.pow(n - k))
        .sum()
}

/// `Σ S[n,k,q^c] x^(kc) q^(c C(k,2)) [c]^(n-k)`. The weight is taken in base
/// `q^c`; with a base-`q` weight the sum disagrees with `(x^c ε + xD)^n 1`
/// as soon as `c > 1`.
fn big_psi_sum(n: u32, c: u32) -> BiPoly {
    let bracket_c = q_int(c);
    (0..=n)
        .map(|k| {
            let term = stirling2_q(n, k as i64, c)
                .mul_q_pow(c * choose2(k))
                .mul_x_pow(k * c);
            &term * &bracket_c.pow(n - k)
        })
        .sum()
}

/// `r_n(x) = Σ [n, k] x^k`.
pub fn rogers_szego_sum(n: u32) -> BiPoly {
    (0..=n)
        .map(|k| q_binomial(n as i64, k as i64).mul_x_pow(k))
        .sum()
}

/// `r_n = (x + 1) r_(n-1) + (q^(n-1) - 1) x r_(n-2)`.
fn rogers_szego_recurrence(n_max: u32) -> Vec<BiPoly> {
    let x = BiPoly::x();
    let x_plus_one = &x + &BiPoly::one();
    let mut out = vec![BiPoly::one()];
    for n in 1..=n_max {
        let mut next = &x_plus_one * &out[n as usize - 1];
        if n >= 2 {
            let f = &BiPoly::monomial(1, n - 1, 0) - &BiPoly::one();
            next += &(&(&f * &x) * &out[n as usize - 2]);
        }
        out.push(next);
    }
    out
}

/// `H_n = x H_(n-1) - [n-1] H_(n-2)`, `H_0 = 1`, `H_1 = x`.
fn q_hermite_sequence(n_max: u32) -> Vec<BiPoly> {
    let x = BiPoly::x();
    let mut out = vec![BiPoly::one()];
    for n in 1..=n_max {
        let mut next = &x * &out[n as usize - 1];
        if n >= 2 {
            next -= &(&q_int(n - 1) * &out[n as usize - 2]);
        }
        out.push(next);
    }
    out
}

pub fn q_hermite_recurrence(n: u32) -> BiPoly {
    q_hermite_sequence(n).pop().unwrap()
}

fn one_minus_q() -> BiPoly {
    &BiPoly::one() - &BiPoly::q()
}

fn alternating_binomial_sum(n: u32, mut term: impl FnMut(u32) -> BiPoly) -> BiPoly {
    (0..=n)
        .map(|i| {
            let t = &binomial_poly(n as i64, i as i64) * &term(i);
            if i % 2 == 1 {
                -t
            } else {
                t
            }
        })
        .sum()
}

/// Direct value against its alternating-binomial representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationCheck {
    pub lhs: BiPoly,
    pub rhs: RatFunc,
    pub equal: bool,
}

/// Compare a member with `(1-q)^(-n) Σ_i C(n,i) (-1)^i g_i` where `g_i` is
/// `r_i((q-1)x)` (phi), `((1-q)x; q)_i` (Phi) or their base-`q^c` analogues
/// in `x^c` (psi, Psi).
///
/// # Panics
/// For families other than phi, Phi, psi and Psi.
pub fn representation_check(family: FamilyId, n: usize) -> RepresentationCheck {
    let n = n as u32;
    let c = family.c;
    let x_c = BiPoly::monomial(1, 0, c);
    let q_minus_one = -one_minus_q();
    let sum = match family.kind {
        FamilyKind::Phi | FamilyKind::Psi => {
            let image = XImage::Value(RatFunc::from(&q_minus_one * &x_c));
            alternating_binomial_sum(n, |i| {
                rogers_szego_sum(i)
                    .scale_q(c)
                    .substitute(&QImage::Keep, &image)
                    .into_poly()
                    .expect("polynomial image")
            })
        }
        FamilyKind::BigPhi | FamilyKind::BigPsi => {
            let arg = &one_minus_q() * &x_c;
            alternating_binomial_sum(n, |i| q_pochhammer(&arg, i, c))
        }
        other => panic!("no alternating-binomial representation for {other}"),
    };
    let rhs = RatFunc::new(sum, one_minus_q().pow(n)).unwrap();
    let lhs = member(family, n as usize);
    let equal = rhs.to_poly().as_ref() == Some(&lhs);
    RepresentationCheck { lhs, rhs, equal }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub lhs: RatFunc,
    pub rhs: RatFunc,
    pub equal: bool,
}

/// Express member `n + 1` through members `0..=n`:
///
/// * phi: `x Σ C(n,k) q^k φ_k(x/q)`
/// * Phi: `x Σ C(n,k) q^k Φ_k(x)`
/// * psi: `x^c Σ C(n,k) q^(kc) ψ_k(x/q, c) [c]^(n-k)`
/// * Psi: `x^c Σ C(n,k) [c]^(n-k) q^(kc) Ψ_k(x, c)`
///
/// # Panics
/// For families other than phi, Phi, psi and Psi.
pub fn recurrence_check(family: FamilyId, n: usize) -> RecurrenceCheck {
    let seq = generate(family, n + 1, Route::ClosedForm).values;
    let c = family.c;
    let n32 = n as u32;
    let bracket_c = q_int(c);
    let mut rhs = RatFunc::zero();
    for (k, value) in seq.iter().take(n + 1).enumerate() {
        let k32 = k as u32;
        let (arg, q_step) = match family.kind {
            FamilyKind::Phi => (value.dilate(-1), k32),
            FamilyKind::BigPhi => (RatFunc::from(value), k32),
            FamilyKind::Psi => (value.dilate(-1), k32 * c),
            FamilyKind::BigPsi => (RatFunc::from(value), k32 * c),
            other => panic!("no member recurrence for {other}"),
        };
        let weight =
            &binomial_poly(n as i64, k as i64) * &bracket_c.pow(n32 - k32).mul_q_pow(q_step);
        rhs = &rhs + &arg.mul_poly(&weight);
    }
    let rhs = rhs.mul_poly(&BiPoly::monomial(1, 0, c));
    let lhs = RatFunc::from(seq[n + 1].clone());
    let equal = lhs == rhs;
    RecurrenceCheck { lhs, rhs, equal }
}

/// `φ_n = x(1 + D) φ_(n-1)` against the closed form.
pub fn phi_step_check(n: usize) -> bool {
    let seq = generate(FamilyId::plain(FamilyKind::Phi), n, Route::ClosedForm).values;
    (1..=n).all(|m| {
        let prev = &seq[m - 1];
        (prev + &q_derivative(prev)).mul_x_pow(1) == seq[m]
    })
}

/// `Φ_n = (xε + xD) Φ_(n-1)` against the closed form.
pub fn big_phi_step_check(n: usize) -> bool {
    let seq = generate(FamilyId::plain(FamilyKind::BigPhi), n, Route::ClosedForm).values;
    (1..=n).all(|m| {
        let prev = &seq[m - 1];
        (&epsilon(prev) + &q_derivative(prev)).mul_x_pow(1) == seq[m]
    })
}

/// `(x^c + xD)` applied to the explicit ψ sum at `n - 1` gives the sum at `n`.
pub fn psi_sum_step_check(n: usize, c: u32) -> bool {
    (1..=n as u32).all(|m| {
        let prev = psi_sum(m - 1, c);
        &prev.mul_x_pow(c) + &q_derivative(&prev).mul_x_pow(1) == psi_sum(m, c)
    })
}

/// `<x>_n = (1 + (q-1)x)^n / (q-1)^n · (1/(1 + (q-1)x); q)_n` as an identity of
/// rational functions.
pub fn falling_factorial_bridge_check(n: usize) -> bool {
    let n32 = n as u32;
    let q_minus_one = -one_minus_q();
    let base = &BiPoly::one() + &(&q_minus_one * &BiPoly::x());
    let arg = RatFunc::new(BiPoly::one(), base.clone()).unwrap();
    let rhs = q_pochhammer_rat(&arg, n32, 1)
        .mul_poly(&base.pow(n32))
        .checked_div(&RatFunc::from(q_minus_one.pow(n32)))
        .unwrap();
    let direct = generate(
        FamilyId::plain(FamilyKind::FallingFactorial),
        n,
        Route::ClosedForm,
    )
    .values
    .pop()
    .unwrap();
    rhs == RatFunc::from(direct)
}

/// `(x; q)_(n+1) = (1 - x)(qx; q)_n`.
pub fn pochhammer_shift_check(n: usize) -> bool {
    let x = BiPoly::x();
    let lhs = q_pochhammer(&x, n as u32 + 1, 1);
    let rhs = &(&BiPoly::one() - &x) * &q_pochhammer(&x.mul_q_pow(1), n as u32, 1);
    lhs == rhs
}

/// `Σ_k S(n,k) x^k` with classical Stirling numbers, independent of the q-kernel.
pub fn classical_bell_oracle(n: u32) -> BiPoly {
    let n = n as usize;
    let mut table = vec![vec![BigInt::from(0); n + 1]; n + 1];
    table[0][0] = BigInt::from(1);
    for i in 1..=n {
        for k in 1..=i {
            table[i][k] = &table[i - 1][k - 1] + &table[i - 1][k] * BigInt::from(k);
        }
    }
    BiPoly::from_terms((0..=n).map(|k| (0, k as u32, table[n][k].clone())))
}
