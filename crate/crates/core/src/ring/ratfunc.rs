use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{BiPoly, RingError};

/// A reduced fraction of two [`BiPoly`] values.
///
/// Always kept in lowest terms with a denominator whose leading coefficient
/// (in canonical monomial order) is positive, so structural equality is
/// equality in the fraction field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant()
            && den
                .as_integer()
                .is_some_and(|c| c.magnitude() == &1u32.into())
        {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        Self::with_sign(num, den)
    }

    fn with_sign(num: BiPoly, den: BiPoly) -> Self {
        if den.is_negative_leading() {
            RatFunc {
                num: -num,
                den: -den,
            }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: BiPoly::one(),
            den: BiPoly::one(),
        }
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn to_poly(&self) -> Option<BiPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn into_poly(self) -> Option<BiPoly> {
        if self.den.is_one() {
            Some(self.num)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<RatFunc, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::with_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, RingError> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        // Powers of a reduced fraction stay reduced.
        Self::with_sign(self.num.pow(e), self.den.pow(e))
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &BiPoly) -> RatFunc {
        if self.den.is_one() {
            return RatFunc::from(&self.num * p);
        }
        let g = p.gcd(&self.den);
        let p = p.exact_div(&g).expect("gcd divides");
        let den = self.den.exact_div(&g).expect("gcd divides");
        Self::with_sign(&self.num * &p, den)
    }
}

impl From<BiPoly> for RatFunc {
    fn from(num: BiPoly) -> Self {
        RatFunc {
            num,
            den: BiPoly::one(),
        }
    }
}

impl From<&BiPoly> for RatFunc {
    fn from(num: &BiPoly) -> Self {
        RatFunc::from(num.clone())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

fn add_impl(a: &RatFunc, b: &RatFunc, subtract: bool) -> RatFunc {
    let combine = |x: &BiPoly, y: &BiPoly| if subtract { x - y } else { x + y };
    if a.den.is_one() && b.den.is_one() {
        return RatFunc::from(combine(&a.num, &b.num));
    }
    if a.den == b.den {
        return RatFunc::reduce(combine(&a.num, &b.num), a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let a_cof = b.den.exact_div(&g).expect("gcd divides");
    let b_cof = a.den.exact_div(&g).expect("gcd divides");
    let num = combine(&(&a.num * &a_cof), &(&b.num * &b_cof));
    RatFunc::reduce(num, &a.den * &a_cof)
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, false)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, true)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel so the product of reduced fractions stays reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFunc::with_sign(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
