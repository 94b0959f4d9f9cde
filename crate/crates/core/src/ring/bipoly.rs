use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use super::RingError;

/// Exact polynomial in the indeterminates `q` and `x` with arbitrary-precision
/// integer coefficients.
///
/// Stored as a polynomial in `x` whose coefficients are dense polynomials in
/// `q`: `rows[e]` is the coefficient of `x^e`. Rows are trimmed so the top
/// row is never zero; the zero polynomial has no rows. This representation is
/// canonical, so derived equality and hashing are structural.
///
/// The canonical monomial order puts higher powers of `x` first and, for equal
/// powers of `x`, lower powers of `q` first. Rendering, [`BiPoly::terms`] and
/// [`BiPoly::leading_coefficient`] all follow it.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    pub(crate) rows: Vec<QPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// `c * q^e_q * x^e_x`.
    pub fn monomial(c: impl Into<BigInt>, e_q: u32, e_x: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![QPoly::zero(); e_x as usize + 1];
        rows[e_x as usize] = QPoly::monomial(c, e_q as usize);
        BiPoly { rows }
    }

    /// Build from `(e_q, e_x, coefficient)` triples; repeated exponent pairs
    /// are summed and zero results dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (e_q, e_x, c) in terms {
            let (e_q, e_x) = (e_q as usize, e_x as usize);
            if rows.len() <= e_x {
                rows.resize(e_x + 1, Vec::new());
            }
            let row = &mut rows[e_x];
            if row.len() <= e_q {
                row.resize(e_q + 1, BigInt::zero());
            }
            row[e_q] += c.into();
        }
        Self::from_rows(rows.into_iter().map(QPoly::from_vec).collect())
    }

    pub(crate) fn from_rows(rows: Vec<QPoly>) -> Self {
        let mut p = BiPoly { rows };
        p.trim();
        p
    }

    /// Wrap a polynomial in `q` alone.
    pub(crate) fn from_qpoly(p: QPoly) -> Self {
        Self::from_rows(vec![p])
    }

    fn trim(&mut self) {
        while self.rows.last().is_some_and(QPoly::is_zero) {
            self.rows.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_one()
    }

    /// True when the polynomial does not involve `x` or `q`.
    pub fn is_constant(&self) -> bool {
        self.rows.len() <= 1 && self.rows.first().is_none_or(|r| r.coeffs.len() <= 1)
    }

    /// Degree in `x`; `None` for zero.
    pub fn degree_x(&self) -> Option<u32> {
        self.rows.len().checked_sub(1).map(|d| d as u32)
    }

    /// Degree in `q`; `None` for zero.
    pub fn degree_q(&self) -> Option<u32> {
        self.rows
            .iter()
            .filter_map(QPoly::degree)
            .max()
            .map(|d| d as u32)
    }

    pub fn coefficient(&self, e_q: u32, e_x: u32) -> BigInt {
        self.rows
            .get(e_x as usize)
            .and_then(|r| r.coeffs.get(e_q as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms as `(e_q, e_x, coefficient)` in canonical order.
    pub fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut out = Vec::new();
        for (e_x, row) in self.rows.iter().enumerate().rev() {
            for (e_q, c) in row.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out.push((e_q as u32, e_x as u32, c.clone()));
                }
            }
        }
        out
    }

    pub fn term_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.coeffs.iter().filter(|c| !c.is_zero()).count())
            .sum()
    }

    /// Coefficient of the first term in canonical order.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        let top = self.rows.last()?;
        top.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Lowest powers of `q` and `x` that divide every term.
    pub(crate) fn monomial_valuation(&self) -> Option<(usize, usize)> {
        let vx = self.rows.iter().position(|r| !r.is_zero())?;
        let vq = self.rows.iter().filter_map(QPoly::valuation).min()?;
        Some((vq, vx))
    }

    /// Single-term polynomial (`c q^a x^b`)?
    pub(crate) fn as_monomial(&self) -> Option<(&BigInt, usize, usize)> {
        if self.term_count() != 1 {
            return None;
        }
        let e_x = self.rows.len() - 1;
        let row = &self.rows[e_x];
        let e_q = row.valuation()?;
        Some((&row.coeffs[e_q], e_q, e_x))
    }

    /// Multiply by the integer `c`.
    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// Multiply by `x^e`.
    pub fn mul_x_pow(&self, e: u32) -> BiPoly {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut rows = vec![QPoly::zero(); e as usize];
        rows.extend(self.rows.iter().cloned());
        BiPoly { rows }
    }

    /// Multiply by `q^e`.
    pub fn mul_q_pow(&self, e: u32) -> BiPoly {
        BiPoly {
            rows: self.rows.iter().map(|r| r.shift(e as usize)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `q -> q^c`; `c = 0` specialises `q -> 1`.
    pub fn scale_q(&self, c: u32) -> BiPoly {
        BiPoly::from_rows(
            self.rows
                .iter()
                .map(|r| r.scale_exponents(c as usize))
                .collect(),
        )
    }

    /// The specialisation `q -> 1`.
    pub fn at_q_one(&self) -> BiPoly {
        self.scale_q(0)
    }

    /// Exact quotient `self / divisor` in `Z[q, x]`.
    pub fn exact_div(&self, divisor: &BiPoly) -> Result<BiPoly, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        self.try_div(divisor).ok_or(RingError::NotDivisible)
    }

    /// Like [`exact_div`](Self::exact_div) but `None` on any failure.
    pub fn try_div(&self, divisor: &BiPoly) -> Option<BiPoly> {
        let db = divisor.rows.len().checked_sub(1)?;
        if self.is_zero() {
            return Some(BiPoly::zero());
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        let da = self.rows.len() - 1;
        if da < db {
            return None;
        }
        if db == 0 {
            let d = &divisor.rows[0];
            let rows = self
                .rows
                .iter()
                .map(|r| r.exact_div(d))
                .collect::<Option<Vec<_>>>()?;
            return Some(BiPoly { rows });
        }
        let lead = &divisor.rows[db];
        let mut rem = self.rows.clone();
        let mut quot = vec![QPoly::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            if rem[i + db].is_zero() {
                continue;
            }
            let qc = rem[i + db].exact_div(lead)?;
            for (j, d) in divisor.rows.iter().enumerate() {
                let prod = qc.mul(d);
                rem[i + j].sub_assign_ref(&prod);
            }
            quot[i] = qc;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        Some(BiPoly::from_rows(quot))
    }

    /// True when the leading coefficient is negative.
    pub(crate) fn is_negative_leading(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_negative())
    }

    /// The associate with positive leading coefficient.
    pub fn normalize_sign(self) -> BiPoly {
        if self.is_negative_leading() {
            -self
        } else {
            self
        }
    }

    /// Integer value when constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        self.is_constant().then(|| self.rows[0].coeffs[0].clone())
    }

    pub fn product<'a>(items: impl IntoIterator<Item = &'a BiPoly>) -> BiPoly {
        let mut acc = BiPoly::one();
        for p in items {
            acc = &acc * p;
        }
        acc
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(c)
    }
}

impl From<BigInt> for BiPoly {
    fn from(c: BigInt) -> Self {
        BiPoly::constant(c)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        if self.rows.len() < rhs.rows.len() {
            self.rows.resize(rhs.rows.len(), QPoly::zero());
        }
        for (a, b) in self.rows.iter_mut().zip(&rhs.rows) {
            a.add_assign_ref(b);
        }
        self.trim();
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        if self.rows.len() < rhs.rows.len() {
            self.rows.resize(rhs.rows.len(), QPoly::zero());
        }
        for (a, b) in self.rows.iter_mut().zip(&rhs.rows) {
            a.sub_assign_ref(b);
        }
        self.trim();
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![QPoly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                rows[i + j].add_mul_assign(a, b);
            }
        }
        BiPoly::from_rows(rows)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            rows: self.rows.iter().map(QPoly::neg).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        let mut acc = BiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| &acc * &p)
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::one()
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn additive_inverse() {
        assert!((&p("x") + &p("-x")).is_zero());
    }

    #[test]
    fn binomial_square() {
        assert_eq!(&p("1 + x") * &p("1 + x"), p("1 + 2*x + x^2"));
    }

    #[test]
    fn pochhammer_two_expansion() {
        assert_eq!(&p("1 - x") * &p("1 - q*x"), p("1 - x - q*x + q*x^2"));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p("1 - q^2").exact_div(&p("1 - q")).unwrap(), p("1 + q"));
        assert_eq!(
            p("1 + 2*x + x^2").exact_div(&p("1 + x")).unwrap(),
            p("1 + x")
        );
        assert_eq!(
            p("1 + q + x").exact_div(&p("1 + x")),
            Err(RingError::NotDivisible)
        );
        assert_eq!(
            p("x").exact_div(&BiPoly::zero()),
            Err(RingError::DivisionByZero)
        );
    }

    #[test]
    fn leading_coefficient_follows_order() {
        // x-degree first, then the lowest power of q.
        assert_eq!(
            p("3*q^2*x - 5*x + 7").leading_coefficient(),
            Some(&BigInt::from(-5))
        );
        assert_eq!(p("-1 + q").normalize_sign(), p("1 - q"));
    }

    #[test]
    fn q_scaling_and_specialisation() {
        assert_eq!(p("1 + q + q^2").scale_q(2), p("1 + q^2 + q^4"));
        assert_eq!(p("x + q*x").at_q_one(), p("2*x"));
    }

    #[test]
    fn construction_order_does_not_matter() {
        let a = BiPoly::from_terms([(1, 2, 3), (0, 0, 1), (2, 1, -4)]);
        let b = BiPoly::from_terms([(2, 1, -4), (1, 2, 3), (0, 0, 1), (5, 5, 0)]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
    }
}
