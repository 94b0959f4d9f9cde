//! Linear operators on polynomials in `x`: the q-derivative `D`, the dilation
//! `ε: f(x) -> f(qx)` with its inverse, and multiplication by powers of `x`.

use crate::qkernel::q_int;
use crate::ring::{BiPoly, QImage, RatFunc, XImage};

/// `D x^n = [n] x^(n-1)`, applied termwise.
pub fn q_derivative(p: &BiPoly) -> BiPoly {
    if p.rows.len() <= 1 {
        return BiPoly::zero();
    }
    let rows = p.rows[1..]
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let bracket = q_int(i as u32 + 1);
            row.mul(&bracket.rows[0])
        })
        .collect();
    BiPoly::from_rows(rows)
}

/// `D f = (f(x) - f(qx)) / ((1 - q) x)`, evaluated by exact division.
pub fn q_derivative_quotient(p: &BiPoly) -> BiPoly {
    let diff = p - &epsilon(p);
    let divisor: BiPoly = &(&BiPoly::one() - &BiPoly::q()) * &BiPoly::x();
    diff.exact_div(&divisor)
        .expect("f(x) - f(qx) is divisible by (1 - q) x")
}

/// The quotient form of `D` on a rational function.
pub fn q_derivative_rat(f: &RatFunc) -> RatFunc {
    let shifted = f
        .substitute(
            &QImage::Keep,
            &XImage::Value(RatFunc::from(&BiPoly::q() * &BiPoly::x())),
        )
        .expect("dilation keeps denominators nonzero");
    let divisor = RatFunc::from(&(&BiPoly::one() - &BiPoly::q()) * &BiPoly::x());
    (f - &shifted).checked_div(&divisor).unwrap()
}

/// `ε f(x) = f(qx)`.
pub fn epsilon(p: &BiPoly) -> BiPoly {
    p.dilate(1)
        .into_poly()
        .expect("forward dilation is polynomial")
}

/// `ε⁻¹ f(x) = f(x/q)`.
pub fn epsilon_inverse(p: &BiPoly) -> RatFunc {
    p.dilate(-1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

pub fn dilate(p: &BiPoly, direction: Direction) -> RatFunc {
    match direction {
        Direction::Forward => RatFunc::from(epsilon(p)),
        Direction::Inverse => epsilon_inverse(p),
    }
}

/// Operator expressions built from the primitive operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearOp {
    Identity,
    D,
    Epsilon,
    EpsilonInverse,
    MulXPower(u32),
    Sum(Vec<LinearOp>),
    /// `Compose([A, B, C])` is `A ∘ B ∘ C`: `C` acts first.
    Compose(Vec<LinearOp>),
}

impl LinearOp {
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        match self {
            LinearOp::Identity => f.clone(),
            LinearOp::D => match f.to_poly() {
                Some(p) => RatFunc::from(q_derivative(&p)),
                None => q_derivative_rat(f),
            },
            LinearOp::Epsilon => dilate_rat(f, 1),
            LinearOp::EpsilonInverse => dilate_rat(f, -1),
            LinearOp::MulXPower(c) => f.mul_poly(&BiPoly::monomial(1, 0, *c)),
            LinearOp::Sum(parts) => parts
                .iter()
                .fold(RatFunc::zero(), |acc, op| &acc + &op.apply(f)),
            LinearOp::Compose(parts) => {
                parts.iter().rev().fold(f.clone(), |acc, op| op.apply(&acc))
            }
        }
    }

    pub fn apply_poly(&self, p: &BiPoly) -> RatFunc {
        self.apply(&RatFunc::from(p))
    }

    /// `op^n` applied to the constant 1.
    pub fn iterate_on_one(&self, n: u32) -> RatFunc {
        (0..n).fold(RatFunc::one(), |acc, _| self.apply(&acc))
    }
}

fn dilate_rat(f: &RatFunc, k: i32) -> RatFunc {
    if let Some(p) = f.to_poly() {
        return p.dilate(k);
    }
    let num = f.numerator().dilate(k);
    let den = f.denominator().dilate(k);
    num.checked_div(&den).unwrap()
}

/// Checks `ε x D ε⁻¹ = x D` and `D x = 1 + q x D` on `x^0 .. x^n_max`.
pub fn commutation_check(n_max: u32) -> bool {
    let x_d = LinearOp::Compose(vec![LinearOp::MulXPower(1), LinearOp::D]);
    let conjugated = LinearOp::Compose(vec![
        LinearOp::Epsilon,
        LinearOp::MulXPower(1),
        LinearOp::D,
        LinearOp::EpsilonInverse,
    ]);
    (0..=n_max).all(|n| {
        let mono = BiPoly::monomial(1, 0, n);
        let conj_ok = conjugated.apply_poly(&mono) == x_d.apply_poly(&mono);
        let lhs = q_derivative(&mono.mul_x_pow(1));
        let rhs = &mono + &q_derivative(&mono).mul_x_pow(1).mul_q_pow(1);
        conj_ok && lhs == rhs
    })
}
