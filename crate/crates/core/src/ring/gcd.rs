//! Greatest common divisors in `Z[q, x]`.
//!
//! The polynomial is treated as univariate in `x` over `Z[q]`: contents are
//! split off with univariate gcds in `Z[q]` and the primitive parts are run
//! through a primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;

use super::qpoly::QPoly;
use super::BiPoly;

impl BiPoly {
    /// A greatest common divisor, normalised to a positive leading
    /// coefficient. `gcd(0, b)` is `b` up to sign.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.clone().normalize_sign();
        }
        if other.is_zero() {
            return self.clone().normalize_sign();
        }
        if let Some((c, e_q, e_x)) = other.as_monomial() {
            return monomial_gcd(self, c, e_q, e_x);
        }
        if let Some((c, e_q, e_x)) = self.as_monomial() {
            return monomial_gcd(other, c, e_q, e_x);
        }
        if self.try_div(other).is_some() {
            return other.clone().normalize_sign();
        }
        if other.try_div(self).is_some() {
            return self.clone().normalize_sign();
        }

        let ca = content(self);
        let cb = content(other);
        let gc = ca.gcd(&cb);
        let pa = divide_rows(self, &ca);
        let pb = divide_rows(other, &cb);
        let g = if pa.rows.len() == 1 || pb.rows.len() == 1 {
            BiPoly::one()
        } else {
            primitive_prs(pa, pb)
        };
        (&BiPoly::from_qpoly(gc) * &g).normalize_sign()
    }

    /// Least common multiple with positive leading coefficient.
    pub fn lcm(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let g = self.gcd(other);
        let cof = self.exact_div(&g).expect("gcd divides");
        (&cof * other).normalize_sign()
    }
}

fn monomial_gcd(p: &BiPoly, c: &BigInt, e_q: usize, e_x: usize) -> BiPoly {
    let (vq, vx) = p.monomial_valuation().expect("nonzero");
    let mut g = c.clone();
    for row in &p.rows {
        g = g.gcd(&row.integer_content());
    }
    BiPoly::monomial(g, e_q.min(vq) as u32, e_x.min(vx) as u32)
}

/// gcd in `Z[q]` of the coefficients of `p` as a polynomial in `x`.
fn content(p: &BiPoly) -> QPoly {
    let mut g = QPoly::zero();
    for row in p.rows.iter().filter(|r| !r.is_zero()) {
        g = g.gcd(row);
        if g.degree() == Some(0) && g.coeffs[0].magnitude() == &1u32.into() {
            break;
        }
    }
    g
}

fn divide_rows(p: &BiPoly, c: &QPoly) -> BiPoly {
    BiPoly::from_rows(
        p.rows
            .iter()
            .map(|r| r.exact_div(c).expect("content divides every row"))
            .collect(),
    )
}

fn primitive_part(p: &BiPoly) -> BiPoly {
    let c = content(p);
    divide_rows(p, &c)
}

/// Pseudo-remainder of `a` by `b` as polynomials in `x` over `Z[q]`.
fn pseudo_rem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.rows.len() - 1;
    let lb = &b.rows[db];
    let mut r = a.rows.clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next: Vec<QPoly> = r.iter().map(|row| row.mul(lb)).collect();
        for (j, brow) in b.rows.iter().enumerate() {
            next[dr - db + j].sub_assign_ref(&brow.mul(&lr));
        }
        while next.last().is_some_and(QPoly::is_zero) {
            next.pop();
        }
        debug_assert!(next.len() <= dr);
        r = next;
    }
    BiPoly::from_rows(r)
}

fn primitive_prs(mut a: BiPoly, mut b: BiPoly) -> BiPoly {
    if a.rows.len() < b.rows.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if a.try_div(&b).is_some() {
            return b;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            return b;
        }
        if r.rows.len() == 1 {
            return BiPoly::one();
        }
        a = b;
        b = primitive_part(&r);
    }
}
