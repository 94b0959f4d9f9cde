//! Hankel matrices over `Z[q, x]` and their exact determinants.

use thiserror::Error;

use crate::qkernel::binomial_poly;
use crate::ring::{BiPoly, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    #[error("sequence has {have} terms, need {needed}")]
    InsufficientSequence { needed: usize, have: usize },
}

/// Square matrix of polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<BiPoly>,
}

impl PolyMatrix {
    /// # Panics
    /// If the rows do not form a square matrix.
    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim * dim)
            .map(|i| {
                if i / dim == i % dim {
                    BiPoly::one()
                } else {
                    BiPoly::zero()
                }
            })
            .collect();
        PolyMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BiPoly>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[_]>::to_vec)
            .collect()
    }

    /// Constant along anti-diagonals?
    pub fn is_hankel(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim)
                .all(|j| i == 0 || j + 1 == self.dim || self.get(i, j) == self.get(i - 1, j + 1))
        })
    }
}

/// `entry(i, j) = seq[i + j + shift]` for `0 <= i, j < n`.
pub fn hankel_matrix(seq: &[BiPoly], n: usize, shift: usize) -> Result<PolyMatrix, HankelError> {
    let needed = if n == 0 { 0 } else { 2 * (n - 1) + shift + 1 };
    if seq.len() < needed {
        return Err(HankelError::InsufficientSequence {
            needed,
            have: seq.len(),
        });
    }
    let entries = (0..n * n)
        .map(|k| seq[k / n + k % n + shift].clone())
        .collect();
    Ok(PolyMatrix { dim: n, entries })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DetAlgorithm {
    #[default]
    Bareiss,
    Cofactor,
}

impl std::str::FromStr for DetAlgorithm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bareiss" => Ok(DetAlgorithm::Bareiss),
            "cofactor" => Ok(DetAlgorithm::Cofactor),
            other => Err(format!("unknown determinant algorithm `{other}`")),
        }
    }
}

pub fn det(m: &PolyMatrix, algorithm: DetAlgorithm) -> BiPoly {
    match algorithm {
        DetAlgorithm::Bareiss => bareiss_det(m),
        DetAlgorithm::Cofactor => cofactor_det(m),
    }
}

/// Fraction-free single-step elimination. Every division is exact; a failed
/// division means a bug and panics.
pub fn bareiss_det(m: &PolyMatrix) -> BiPoly {
    let n = m.dim;
    if n == 0 {
        return BiPoly::one();
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = BiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = cross
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Laplace expansion along the first row. Exponential; intended as an
/// independent check on small matrices.
pub fn cofactor_det(m: &PolyMatrix) -> BiPoly {
    let cols: Vec<usize> = (0..m.dim).collect();
    expand(m, 0, &cols)
}

fn expand(m: &PolyMatrix, row: usize, cols: &[usize]) -> BiPoly {
    match cols.len() {
        0 => BiPoly::one(),
        1 => m.get(row, cols[0]).clone(),
        _ => {
            let mut acc = BiPoly::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let entry = m.get(row, c);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                let term = entry * &expand(m, row + 1, &rest);
                if pos % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

/// `det(seq[i + j + shift])_{i,j<n}`.
pub fn hankel_det(
    seq: &[BiPoly],
    n: usize,
    shift: usize,
    algorithm: DetAlgorithm,
) -> Result<BiPoly, HankelError> {
    Ok(det(&hankel_matrix(seq, n, shift)?, algorithm))
}

/// `b_n = Σ_k C(n, k) a_k`.
pub fn binomial_transform(seq: &[BiPoly]) -> Vec<BiPoly> {
    (0..seq.len())
        .map(|n| {
            seq[..=n]
                .iter()
                .enumerate()
                .map(|(k, a)| &binomial_poly(n as i64, k as i64) * a)
                .sum()
        })
        .collect()
}

/// `det(x^(i+j) a_(i+j)) = x^(n(n-1)) det(a_(i+j))` for the given `n`.
pub fn scaling_check(seq: &[BiPoly], n: usize) -> Result<bool, HankelError> {
    let scaled: Vec<BiPoly> = seq
        .iter()
        .enumerate()
        .map(|(k, a)| a.mul_x_pow(k as u32))
        .collect();
    let lhs = hankel_det(&scaled, n, 0, DetAlgorithm::Bareiss)?;
    let rhs =
        hankel_det(seq, n, 0, DetAlgorithm::Bareiss)?.mul_x_pow((n * n.saturating_sub(1)) as u32);
    Ok(lhs == rhs)
}

/// Determinant of a matrix of rational functions: each column is scaled by
/// the lcm of its denominators, the polynomial determinant is taken by
/// elimination, and the scale is divided back out.
///
/// # Panics
/// If the rows do not form a square matrix.
pub fn det_rat(rows: &[Vec<RatFunc>]) -> RatFunc {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut scale = BiPoly::one();
    let mut cleared = vec![vec![BiPoly::zero(); n]; n];
    for j in 0..n {
        let l = rows
            .iter()
            .fold(BiPoly::one(), |acc, r| acc.lcm(r[j].denominator()));
        for i in 0..n {
            let cell = &rows[i][j];
            let cof = l.exact_div(cell.denominator()).expect("lcm is a multiple");
            cleared[i][j] = cell.numerator() * &cof;
        }
        scale = &scale * &l;
    }
    let d = bareiss_det(&PolyMatrix::from_rows(cleared));
    RatFunc::new(d, scale).expect("denominators are nonzero")
}
