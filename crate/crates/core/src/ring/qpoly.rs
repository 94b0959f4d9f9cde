//! Dense univariate polynomials in `q` over the integers.
//!
//! These are the coefficient ring of [`BiPoly`](super::BiPoly) when it is
//! viewed as a polynomial in `x`. Index `i` of the coefficient vector holds
//! the coefficient of `q^i`; trailing zeros are always trimmed so the zero
//! polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct QPoly {
    pub(crate) coeffs: Vec<BigInt>,
}

impl QPoly {
    pub(crate) fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub(crate) fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        QPoly { coeffs }
    }

    pub(crate) fn from_vec(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub(crate) fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub(crate) fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub(crate) fn add_assign_ref(&mut self, other: &QPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.trim();
    }

    pub(crate) fn sub_assign_ref(&mut self, other: &QPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        self.trim();
    }

    /// `self += a * b` without materialising the product.
    pub(crate) fn add_mul_assign(&mut self, a: &QPoly, b: &QPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    self.coeffs[i + j] += ai * bj;
                }
            }
        }
        self.trim();
    }

    pub(crate) fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        out.add_mul_assign(self, other);
        out
    }

    pub(crate) fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub(crate) fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^e`.
    pub(crate) fn shift(&self, e: usize) -> QPoly {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Exact division; `None` when `divisor` does not divide `self` in `Z[q]`.
    pub(crate) fn exact_div(&self, divisor: &QPoly) -> Option<QPoly> {
        let db = divisor.degree()?;
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        if divisor.coeffs.len() == 1 {
            return self.div_integer(&divisor.coeffs[0]);
        }
        let da = self.degree()?;
        if da < db {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &qc * d;
                }
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPoly::from_vec(quot))
    }

    pub(crate) fn div_integer(&self, d: &BigInt) -> Option<QPoly> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (qc, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(qc);
        }
        Some(QPoly { coeffs: out })
    }

    /// gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub(crate) fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub(crate) fn primitive_part(&self) -> QPoly {
        let g = self.integer_content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        self.div_integer(&g).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `divisor` (degree of divisor > 0 or constant).
    fn pseudo_rem(&self, divisor: &QPoly) -> QPoly {
        let db = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let mut next = r.scale(lead);
            next.sub_assign_ref(&divisor.scale(&lr).shift(dr - db));
            r = next;
        }
        r
    }

    /// A greatest common divisor in `Z[q]`. The sign is unspecified; callers
    /// normalise at the bivariate level.
    pub(crate) fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let content = self.integer_content().gcd(&other.integer_content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // Common power of q can be split off cheaply.
        let v = a.valuation().unwrap().min(b.valuation().unwrap());
        if v > 0 {
            a = QPoly::from_vec(a.coeffs[v..].to_vec());
            b = QPoly::from_vec(b.coeffs[v..].to_vec());
        }
        loop {
            if b.degree() == Some(0) {
                return QPoly::monomial(content, v);
            }
            if a.exact_div(&b).is_some() {
                break;
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            a = b;
            b = r.primitive_part();
        }
        let mut g = b.primitive_part();
        if g.leading().is_some_and(|c| c.is_negative()) {
            g = g.neg();
        }
        g.scale(&content).shift(v)
    }

    /// Substitute `q -> q^c`.
    pub(crate) fn scale_exponents(&self, c: usize) -> QPoly {
        if c == 1 || self.is_zero() {
            return self.clone();
        }
        if c == 0 {
            return QPoly::constant(self.coeffs.iter().sum());
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * c + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i * c] = a.clone();
        }
        QPoly { coeffs }
    }
}
