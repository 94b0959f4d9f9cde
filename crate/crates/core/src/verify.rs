//! Catalog of closed-form Hankel determinant evaluations and a suite runner.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::families::{generate, FamilyId, FamilyKind, Route};
use crate::hankel::{binomial_transform, hankel_det, DetAlgorithm};
use crate::qkernel::{binomial, q_factorial, q_factorial_base, q_int, q_pochhammer};
use crate::ring::BiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    T1a,
    T1b,
    T2a,
    T2b,
    L3,
    L4a,
    L4b,
    Psi,
    PsiShift,
    QFact,
    S1,
    Psi2,
    Psi2Shift,
    Herm,
    Radoux,
}

impl IdentityId {
    /// Catalog order.
    pub const ALL: [IdentityId; 15] = [
        IdentityId::T1a,
        IdentityId::T1b,
        IdentityId::T2a,
        IdentityId::T2b,
        IdentityId::L3,
        IdentityId::L4a,
        IdentityId::L4b,
        IdentityId::Psi,
        IdentityId::PsiShift,
        IdentityId::QFact,
        IdentityId::S1,
        IdentityId::Psi2,
        IdentityId::Psi2Shift,
        IdentityId::Herm,
        IdentityId::Radoux,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::T1a => "T1a",
            IdentityId::T1b => "T1b",
            IdentityId::T2a => "T2a",
            IdentityId::T2b => "T2b",
            IdentityId::L3 => "L3",
            IdentityId::L4a => "L4a",
            IdentityId::L4b => "L4b",
            IdentityId::Psi => "PSI",
            IdentityId::PsiShift => "PSIshift",
            IdentityId::QFact => "QFACT",
            IdentityId::S1 => "S1",
            IdentityId::Psi2 => "PSI2",
            IdentityId::Psi2Shift => "PSI2shift",
            IdentityId::Herm => "HERM",
            IdentityId::Radoux => "RADOUX",
        }
    }

    pub fn takes_c(self) -> bool {
        matches!(
            self,
            IdentityId::Psi | IdentityId::PsiShift | IdentityId::Psi2 | IdentityId::Psi2Shift
        )
    }

    fn shift(self) -> usize {
        match self {
            IdentityId::T1b
            | IdentityId::T2b
            | IdentityId::L4b
            | IdentityId::PsiShift
            | IdentityId::Psi2Shift => 1,
            _ => 0,
        }
    }

    /// Sequence whose Hankel determinants the identity evaluates; `None`
    /// for the q-factorials, which are not one of the named families.
    fn family(self, c: u32) -> Option<FamilyId> {
        let kind = match self {
            IdentityId::T1a | IdentityId::T1b => FamilyKind::Phi,
            IdentityId::T2a | IdentityId::T2b => FamilyKind::BigPhi,
            IdentityId::L3 => FamilyKind::RogersSzego,
            IdentityId::L4a | IdentityId::L4b => FamilyKind::Pochhammer,
            IdentityId::Psi | IdentityId::PsiShift => FamilyKind::Psi,
            IdentityId::QFact => return None,
            IdentityId::S1 => FamilyKind::FallingFactorial,
            IdentityId::Psi2 | IdentityId::Psi2Shift => FamilyKind::BigPsi,
            IdentityId::Herm => FamilyKind::QHermite,
            IdentityId::Radoux => FamilyKind::ClassicalBell,
        };
        Some(FamilyId::new(kind, c))
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One checked instance: the computed determinant against the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub n: usize,
    pub c: u32,
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    pub equal: bool,
    pub elapsed: Duration,
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.equal { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} n={}", self.id, self.n)?;
        if self.id.takes_c() {
            write!(f, " c={}", self.c)?;
        }
        write!(f, " | lhs: {} | rhs: {}", self.lhs, self.rhs)
    }
}

fn choose(n: usize, k: usize) -> u32 {
    u32::try_from(binomial(n as i64, k as i64)).expect("exponent fits in u32")
}

fn x_pow(e: u32) -> BiPoly {
    BiPoly::monomial(1, 0, e)
}

fn q_pow(e: u32) -> BiPoly {
    BiPoly::monomial(1, e, 0)
}

fn product(n: usize, f: impl Fn(u32) -> BiPoly) -> BiPoly {
    (0..n as u32).map(f).product()
}

fn sign(negative: bool, p: BiPoly) -> BiPoly {
    if negative {
        -p
    } else {
        p
    }
}

fn sequence(id: IdentityId, c: u32, len: usize) -> Vec<BiPoly> {
    match id.family(c) {
        Some(family) => generate(family, len - 1, Route::ClosedForm).values,
        None => (0..len as u32).map(q_factorial).collect(),
    }
}

fn det_of(seq: &[BiPoly], n: usize, shift: usize) -> BiPoly {
    hankel_det(seq, n, shift, DetAlgorithm::Bareiss).expect("sequence long enough")
}

/// Closed form for the identity. The shift relations are stated against the
/// unshifted determinant, which is passed in.
fn closed_form(id: IdentityId, n: usize, c: u32, unshifted: &BiPoly) -> BiPoly {
    let one_minus_q = &BiPoly::one() - &BiPoly::q();
    let c2 = choose(n, 2);
    let c3 = choose(n, 3);
    let facts = || product(n, q_factorial);
    match id {
        IdentityId::T1a => &(&x_pow(c2) * &q_pow(c3)) * &facts(),
        IdentityId::T1b => &(&x_pow(choose(n + 1, 2)) * &q_pow(choose(n + 1, 3))) * &facts(),
        IdentityId::T2a | IdentityId::T2b => {
            let (ex, eq) = if id == IdentityId::T2a {
                (c2, 2 * c3)
            } else {
                (choose(n + 1, 2), 2 * choose(n + 1, 3))
            };
            let a = &one_minus_q * &BiPoly::x();
            let prod = product(n, |j| &q_factorial(j) * &q_pochhammer(&a, j, 1));
            &(&x_pow(ex) * &q_pow(eq)) * &prod
        }
        IdentityId::L3 => {
            let q_minus_one = -one_minus_q.clone();
            &(&(&x_pow(c2) * &q_pow(c3)) * &q_minus_one.pow(c2)) * &facts()
        }
        IdentityId::L4a | IdentityId::L4b => {
            let (eq, extra) = if id == IdentityId::L4a {
                (2 * c3, 0)
            } else {
                (2 * c3 + c2, 1)
            };
            let x = BiPoly::x();
            let prod = product(n, |j| &q_factorial(j) * &q_pochhammer(&x, j + extra, 1));
            &(&(&q_pow(eq) * &one_minus_q.pow(c2)) * &x_pow(c2)) * &prod
        }
        IdentityId::Psi => {
            let prod = product(n, |j| q_factorial_base(j, c));
            &(&(&q_int(c).pow(c2) * &x_pow(c * c2)) * &q_pow(c * c3)) * &prod
        }
        IdentityId::PsiShift => &(&x_pow(n as u32 * c) * &q_pow(c * c2)) * unshifted,
        IdentityId::QFact => {
            let e = u32::try_from(n * n.saturating_sub(1) * (2 * n).saturating_sub(1) / 6)
                .expect("exponent fits in u32");
            &q_pow(e) * &product(n, |j| q_factorial(j).pow(2))
        }
        IdentityId::S1 => {
            let falling = |j: u32| -> BiPoly { (0..j).map(|i| &BiPoly::x() - &q_int(i)).product() };
            let prod = product(n, |j| &q_factorial(j) * &falling(j));
            sign(c2 % 2 == 1, &q_pow(2 * c3) * &prod)
        }
        IdentityId::Psi2 => {
            let a = &one_minus_q * &x_pow(c);
            let prod = product(n, |j| &q_factorial_base(j, c) * &q_pochhammer(&a, j, c));
            &(&(&q_int(c).pow(c2) * &x_pow(c * c2)) * &q_pow(2 * c * c3)) * &prod
        }
        IdentityId::Psi2Shift => &(&x_pow(n as u32 * c) * &q_pow(2 * c * c2)) * unshifted,
        IdentityId::Herm => sign(c2 % 2 == 1, &q_pow(c3) * &facts()),
        IdentityId::Radoux => {
            let prod = product(n, |j| BiPoly::from(factorial(j)));
            &x_pow(c2) * &prod
        }
    }
}

fn factorial(j: u32) -> i64 {
    (1..=j as i64).product()
}

/// Evaluate one catalog entry. `c` is ignored (reported as 1) for entries
/// without a parameter.
///
/// # Panics
/// If `n == 0` or `c == 0`.
pub fn check_identity(id: IdentityId, n: usize, c: u32) -> IdentityCase {
    assert!(n >= 1, "dimension must be positive");
    assert!(c >= 1, "parameter c must be positive");
    let c = if id.takes_c() { c } else { 1 };
    let start = Instant::now();
    let shift = id.shift();
    let seq = sequence(id, c, 2 * n - 1 + shift);
    let lhs = det_of(&seq, n, shift);
    let unshifted = if shift == 1 && matches!(id, IdentityId::PsiShift | IdentityId::Psi2Shift) {
        det_of(&seq, n, 0)
    } else {
        BiPoly::zero()
    };
    let rhs = closed_form(id, n, c, &unshifted);
    let equal = lhs == rhs;
    IdentityCase {
        id,
        n,
        c,
        lhs,
        rhs,
        equal,
        elapsed: start.elapsed(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<IdentityCase>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct CaseRecord<'a> {
    id: &'a str,
    n: usize,
    c: u32,
    lhs: String,
    rhs: String,
    equal: bool,
    millis: u64,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    suite: &'a str,
    cases: Vec<CaseRecord<'a>>,
    summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, cases: Vec<IdentityCase>) -> Self {
        let passed = cases.iter().filter(|c| c.equal).count();
        let summary = Summary {
            passed,
            failed: cases.len() - passed,
        };
        VerificationReport {
            suite: suite.into(),
            cases,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// JSON report. Without `timings` every `millis` is 0 so that repeated
    /// runs are byte-identical.
    pub fn to_json(&self, timings: bool) -> String {
        let record = ReportRecord {
            suite: &self.suite,
            cases: self
                .cases
                .iter()
                .map(|case| CaseRecord {
                    id: case.id.tag(),
                    n: case.n,
                    c: case.c,
                    lhs: case.lhs.to_string(),
                    rhs: case.rhs.to_string(),
                    equal: case.equal,
                    millis: if timings {
                        case.elapsed.as_millis() as u64
                    } else {
                        0
                    },
                })
                .collect(),
            summary: self.summary,
        };
        serde_json::to_string_pretty(&record).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            out.push_str(&case.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            self.suite, self.summary.passed, self.summary.failed
        ));
        out
    }
}

/// All `(id, n, c)` cases for `n = 1..=n_max`, in catalog order, then `n`,
/// then `c` in the order given. Entries without a parameter run once per `n`.
pub fn run_suite(
    suite: &str,
    ids: &[IdentityId],
    n_max: usize,
    c_values: &[u32],
) -> VerificationReport {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    let mut jobs = Vec::new();
    for &id in &ids {
        for n in 1..=n_max {
            if id.takes_c() {
                jobs.extend(c_values.iter().map(|&c| (id, n, c)));
            } else {
                jobs.push((id, n, 1));
            }
        }
    }
    let cases = jobs
        .into_par_iter()
        .map(|(id, n, c)| check_identity(id, n, c))
        .collect();
    VerificationReport::new(suite, cases)
}

/// The shifted determinant for phi or Phi obtained three ways: directly,
/// through the member recurrence plus binomial-transform and scaling
/// invariance, and through the stated factor times the unshifted
/// determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRouteCheck {
    pub n: usize,
    pub direct: BiPoly,
    pub via_recurrence: BiPoly,
    pub via_factor: BiPoly,
    /// Member recurrence reproduced `x b_k = a_(k+1)` with `b` the binomial transform.
    pub recurrence_holds: bool,
}

impl ShiftRouteCheck {
    pub fn consistent(&self) -> bool {
        self.recurrence_holds
            && self.direct == self.via_recurrence
            && self.direct == self.via_factor
    }
}

/// # Panics
/// For families other than phi and Phi, or `n == 0`.
pub fn shift_route_check(kind: FamilyKind, n: usize) -> ShiftRouteCheck {
    assert!(n >= 1);
    let seq = generate(FamilyId::plain(kind), 2 * n, Route::ClosedForm).values;
    // a_k = q^k phi_k(x/q) or q^k Phi_k(x); b = binomial transform of a should
    // satisfy x b_k = seq_(k+1).
    let a: Vec<BiPoly> = seq[..2 * n]
        .iter()
        .enumerate()
        .map(|(k, v)| match kind {
            FamilyKind::Phi => v
                .dilate(-1)
                .mul_poly(&q_pow(k as u32))
                .into_poly()
                .expect("degree k member scales to a polynomial"),
            FamilyKind::BigPhi => v.mul_q_pow(k as u32),
            other => panic!("no shift route for {other}"),
        })
        .collect();
    let b = binomial_transform(&a);
    let recurrence_holds = b
        .iter()
        .enumerate()
        .all(|(k, bk)| bk.mul_x_pow(1) == seq[k + 1]);

    let direct = det_of(&seq, n, 1);
    let unshifted = det_of(&seq, n, 0);
    let scale = n as u32 * (n as u32 - 1);
    // det(b) = det(a) = q^(n(n-1)) det(base sequence), and det(seq shifted) = x^n det(b).
    let lift = &x_pow(n as u32) * &q_pow(scale);
    let via_recurrence = match kind {
        FamilyKind::Phi => unshifted
            .dilate(-1)
            .mul_poly(&lift)
            .into_poly()
            .expect("q^(n(n-1)) clears the dilation"),
        _ => &lift * &unshifted,
    };
    let factor_q = match kind {
        FamilyKind::Phi => choose(n, 2),
        _ => 2 * choose(n, 2),
    };
    let via_factor = &(&x_pow(n as u32) * &q_pow(factor_q)) * &unshifted;
    ShiftRouteCheck {
        n,
        direct,
        via_recurrence,
        via_factor,
        recurrence_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        let case = check_identity(IdentityId::T1a, 2, 1);
        assert_eq!((case.lhs.clone(), case.equal), (p("x"), true));
        let case = check_identity(IdentityId::T1b, 2, 1);
        assert_eq!((case.lhs.clone(), case.equal), (p("q*x^3"), true));
        let case = check_identity(IdentityId::T2b, 2, 1);
        assert_eq!(case.lhs, p("q^2*x^3*(1 - (1 - q)*x)"));
        assert!(case.equal);
        let case = check_identity(IdentityId::L4a, 2, 1);
        assert_eq!(case.lhs, p("(1 - q)*x*(1 - x)"));
        assert!(case.equal);
        assert_eq!(check_identity(IdentityId::QFact, 2, 1).lhs, p("q"));
        assert_eq!(check_identity(IdentityId::S1, 2, 1).lhs, p("-x"));
        assert_eq!(check_identity(IdentityId::Herm, 2, 1).lhs, p("-1"));
        for c in 1..=3 {
            let case = check_identity(IdentityId::Psi, 2, c);
            assert_eq!(case.lhs, &q_int(c) * &x_pow(c));
            assert!(case.equal);
        }
    }

    #[test]
    fn one_by_one_is_first_term() {
        for id in IdentityId::ALL {
            let case = check_identity(id, 1, 2);
            assert!(case.equal, "{case}");
        }
    }

    #[test]
    fn suite_ordering_and_counts() {
        let report = run_suite("all", &IdentityId::ALL, 1, &[1]);
        assert_eq!(report.cases.len(), 15);
        assert!(report.all_passed());
        let report = run_suite("T1a", &[IdentityId::T1a], 4, &[1]);
        assert_eq!(
            report.summary,
            Summary {
                passed: 4,
                failed: 0
            }
        );
        let report = run_suite("PSI", &[IdentityId::Psi], 3, &[1, 2]);
        let order: Vec<(usize, u32)> = report.cases.iter().map(|c| (c.n, c.c)).collect();
        assert_eq!(order, vec![(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]);
        for case in report.cases.iter().filter(|c| c.c == 1) {
            assert_eq!(case.lhs, check_identity(IdentityId::T1a, case.n, 1).lhs);
        }
    }

    #[test]
    fn tags_parse() {
        for id in IdentityId::ALL {
            assert_eq!(id.tag().parse::<IdentityId>(), Ok(id));
        }
        assert!("T9".parse::<IdentityId>().is_err());
    }

    #[test]
    fn shift_routes_agree() {
        for n in 1..=4 {
            assert!(shift_route_check(FamilyKind::Phi, n).consistent());
            assert!(shift_route_check(FamilyKind::BigPhi, n).consistent());
        }
    }

    #[test]
    fn json_shape() {
        let report = run_suite("T1a", &[IdentityId::T1a], 2, &[1]);
        let v: serde_json::Value = serde_json::from_str(&report.to_json(false)).unwrap();
        assert_eq!(v["suite"], "T1a");
        assert_eq!(v["cases"][1]["lhs"], "x");
        assert_eq!(v["cases"][1]["millis"], 0);
        assert_eq!(v["summary"]["passed"], 2);
    }
}
