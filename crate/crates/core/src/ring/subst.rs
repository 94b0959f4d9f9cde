//! Substitution of the indeterminates.

use super::{BiPoly, RatFunc, RingError};

/// Image of `q` under a substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QImage {
    Keep,
    /// `q -> q^c`, applied by exponent scaling. `Power(0)` is `q -> 1`.
    Power(u32),
    Value(RatFunc),
}

/// Image of `x` under a substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XImage {
    Keep,
    Value(RatFunc),
}

fn horner(coeffs: &[RatFunc], at: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * at) + c;
    }
    acc
}

impl BiPoly {
    /// Image of the polynomial under the given substitution. A polynomial has
    /// no denominator to vanish, so this cannot fail.
    pub fn substitute(&self, q: &QImage, x: &XImage) -> RatFunc {
        let rows: Vec<RatFunc> = match q {
            QImage::Keep => self
                .rows
                .iter()
                .map(|r| RatFunc::from(BiPoly::from_qpoly(r.clone())))
                .collect(),
            QImage::Power(c) => self
                .rows
                .iter()
                .map(|r| RatFunc::from(BiPoly::from_qpoly(r.scale_exponents(*c as usize))))
                .collect(),
            QImage::Value(v) => self
                .rows
                .iter()
                .map(|r| {
                    let cs: Vec<RatFunc> = r
                        .coeffs
                        .iter()
                        .map(|c| RatFunc::from(BiPoly::constant(c.clone())))
                        .collect();
                    horner(&cs, v)
                })
                .collect(),
        };
        match x {
            XImage::Keep => {
                let mut acc = RatFunc::zero();
                for (e, r) in rows.iter().enumerate() {
                    acc = &acc + &r.mul_poly(&BiPoly::monomial(1, 0, e as u32));
                }
                acc
            }
            XImage::Value(v) => horner(&rows, v),
        }
    }

    /// `x -> q^k x`. For `k >= 0` the result is a polynomial; negative `k`
    /// introduces a power of `q` in the denominator.
    pub fn dilate(&self, k: i32) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let step = k.unsigned_abs() as usize;
        let top = self.rows.len() - 1;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(e, r)| {
                if k >= 0 {
                    r.shift(step * e)
                } else {
                    r.shift(step * (top - e))
                }
            })
            .collect();
        let num = BiPoly::from_rows(rows);
        if k >= 0 {
            RatFunc::from(num)
        } else {
            RatFunc::new(num, BiPoly::monomial(1, (step * top) as u32, 0)).unwrap()
        }
    }
}

impl RatFunc {
    /// Image under the substitution; fails when the image of the
    /// denominator vanishes identically.
    pub fn substitute(&self, q: &QImage, x: &XImage) -> Result<RatFunc, RingError> {
        let num = self.numerator().substitute(q, x);
        let den = self.denominator().substitute(q, x);
        if den.is_zero() {
            return Err(RingError::SubstitutionSingular);
        }
        num.checked_div(&den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }
    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn q_power_scaling() {
        let out = p("1 + q + q^2").substitute(&QImage::Power(2), &XImage::Keep);
        assert_eq!(out, RatFunc::from(p("1 + q^2 + q^4")));
    }

    #[test]
    fn x_over_q() {
        let xq = XImage::Value(r("(x)/(q)"));
        let out = p("x + x^2").substitute(&QImage::Keep, &xq);
        assert_eq!(out, r("(q*x + x^2)/(q^2)"));
        assert_eq!(p("x + x^2").dilate(-1), out);
    }

    #[test]
    fn classical_specialisation() {
        let out = p("(1 + q)*x").substitute(&QImage::Power(0), &XImage::Keep);
        assert_eq!(out, RatFunc::from(p("2*x")));
    }

    #[test]
    fn general_rational_images() {
        // q -> 1/q on [2] x gives (1 + q) x / q.
        let out = p("(1 + q)*x").substitute(&QImage::Value(r("(1)/(q)")), &XImage::Keep);
        assert_eq!(out, r("(x + q*x)/(q)"));
        let out = p("1 + x").substitute(&QImage::Keep, &XImage::Value(r("(q - 1)*x")));
        assert_eq!(out, r("1 - x + q*x"));
    }

    #[test]
    fn singular_substitution() {
        let f = r("(1)/(x - 1)");
        let at_one = XImage::Value(RatFunc::one());
        assert_eq!(
            f.substitute(&QImage::Keep, &at_one),
            Err(RingError::SubstitutionSingular)
        );
    }

    #[test]
    fn dilation_forward() {
        assert_eq!(p("1 + x").dilate(1), r("1 + q*x"));
        assert_eq!(p("x^2").dilate(-1), r("(x^2)/(q^2)"));
    }
}
