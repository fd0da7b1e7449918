//! Which known result settles "rational cuspidal implies free or nearly
//! free" for a given odd degree `d` and minimal relation degree `r`.
//!
//! Write `d = p_1^{k_1} ... p_m^{k_m}` with `p_1^{k_1}` the largest prime
//! power factor, `e_1 = d / p_1^{k_1}`, `d' = (d - 1)/2` and
//! `r_0 = (d - e_1)/2`. Then, for a rational cuspidal curve:
//!
//! * `r <= 1`: nearly free;
//! * `m = 1`: settled for prime powers;
//! * `r <= d'` always, and `r = d'` forces free or nearly free;
//! * `r <= r_0` forces free or nearly free;
//!
//! leaving the gap `r_0 < r < d'`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classify::{classify, mdr_bound_check, Classification, Verdict};
use crate::error::{Error, Result};
use crate::poly::CurveContext;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationProfile {
    pub d: i64,
    /// `(p, k)` by increasing `p`.
    pub factors: Vec<(i64, u32)>,
    pub m: usize,
    /// The largest prime power `p_1^{k_1}` dividing exactly.
    pub p1k1: i64,
    pub e1: i64,
    pub d_prime: i64,
    /// `(d - e_1)/2`, only when `m >= 2`.
    pub r0: Option<i64>,
}

fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Factorization data for odd `d >= 3`.
pub fn profile(d: i64) -> Result<FactorizationProfile> {
    if d < 3 {
        return Err(Error::DegreeTooSmall(d));
    }
    if d % 2 == 0 {
        return Err(Error::EvenDegree(d));
    }
    let factors = factorize(d);
    let powers: Vec<i64> = factors.iter().map(|&(p, k)| p.pow(k)).collect();
    let p1k1 = *powers.iter().max().expect("d > 1 has a prime factor");
    if powers.iter().filter(|&&q| q == p1k1).count() > 1 {
        return Err(Error::InternalInconsistency(format!(
            "largest prime power factor of {d} is not unique"
        )));
    }
    let e1 = d / p1k1;
    let m = factors.len();
    Ok(FactorizationProfile {
        d,
        m,
        p1k1,
        e1,
        d_prime: (d - 1) / 2,
        r0: (m >= 2).then(|| (d - e1) / 2),
        factors,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverageStatus {
    /// Even degree: settled before.
    CoveredEven,
    /// `mdr <= 1`.
    CoveredMdrSmall,
    /// `d` a prime power.
    CoveredPrimePower,
    /// `mdr = d'`.
    CoveredThmA,
    /// `mdr <= r_0`.
    CoveredThmB,
    /// `mdr <= r_0` with `d = 3 p^k`.
    CoveredThmBi,
    /// `mdr <= r_0` with `d = 5 p^k`, `p^k > 3`.
    CoveredThmBii,
    /// `mdr > d'`: impossible for a rational cuspidal curve.
    ExceedsThmABound,
    /// `r_0 < mdr < d'`.
    Open,
}

impl CoverageStatus {
    pub fn name(self) -> &'static str {
        match self {
            CoverageStatus::CoveredEven => "CoveredEven",
            CoverageStatus::CoveredMdrSmall => "CoveredMdrSmall",
            CoverageStatus::CoveredPrimePower => "CoveredPrimePower",
            CoverageStatus::CoveredThmA => "CoveredThmA",
            CoverageStatus::CoveredThmB => "CoveredThmB",
            CoverageStatus::CoveredThmBi => "CoveredThmB_i",
            CoverageStatus::CoveredThmBii => "CoveredThmB_ii",
            CoverageStatus::ExceedsThmABound => "ExceedsThmABound",
            CoverageStatus::Open => "Open",
        }
    }

    pub fn is_covered(self) -> bool {
        !matches!(self, CoverageStatus::Open | CoverageStatus::ExceedsThmABound)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageVerdict {
    pub d: i64,
    pub r: i64,
    pub status: CoverageStatus,
    /// `[r_0 + 1, d' - 1]` when nonempty.
    pub gap: Option<(i64, i64)>,
    pub citation: &'static str,
}

fn prime_power_base(n: i64) -> Option<i64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

fn gap_of(p: &FactorizationProfile) -> Option<(i64, i64)> {
    let r0 = p.r0?;
    (r0 + 1 < p.d_prime).then_some((r0 + 1, p.d_prime - 1))
}

/// The decision ladder for `(d, r)`.
pub fn coverage(d: i64, r: i64) -> Result<CoverageVerdict> {
    if r < 0 {
        return Err(Error::NotApplicable(format!("mdr = {r} is negative")));
    }
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let verdict = |status, gap, citation| Ok(CoverageVerdict { d, r, status, gap, citation });
    if d % 2 == 0 {
        return verdict(CoverageStatus::CoveredEven, None, "even degree, settled in earlier work");
    }
    let p = profile(d)?;
    let gap = gap_of(&p);
    if r <= 1 {
        return verdict(CoverageStatus::CoveredMdrSmall, gap, "mdr(f) <= 1 implies nearly free");
    }
    let Some(r0) = p.r0 else {
        return verdict(CoverageStatus::CoveredPrimePower, None, "d a prime power, settled in earlier work");
    };
    if r > p.d_prime {
        return verdict(CoverageStatus::ExceedsThmABound, gap, "rational cuspidal of odd degree forces mdr(f) <= d'");
    }
    if r == p.d_prime {
        return verdict(CoverageStatus::CoveredThmA, gap, "mdr(f) = d' forces free or nearly free");
    }
    if r <= r0 {
        let cofactor = |c: i64| (d % c == 0).then(|| d / c).and_then(|q| prime_power_base(q).map(|_| q));
        if cofactor(3).is_some_and(|q| q > 3) {
            return verdict(CoverageStatus::CoveredThmBi, gap, "mdr(f) <= r0 with d = 3p^k");
        }
        if cofactor(5).is_some_and(|q| q > 3) {
            return verdict(CoverageStatus::CoveredThmBii, gap, "mdr(f) <= r0 with d = 5p^k, p^k > 3");
        }
        return verdict(CoverageStatus::CoveredThmB, gap, "mdr(f) <= r0 forces free or nearly free");
    }
    verdict(CoverageStatus::Open, gap, "r0 < mdr(f) < d': not settled")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionTable {
    pub d_max: i64,
    /// Odd degrees with a nonempty gap, and the gap.
    pub entries: Vec<(i64, (i64, i64))>,
    /// Smallest `mdr` left open by the table, i.e. `min (r_0 + 1)`.
    pub min_uncovered_mdr: Option<i64>,
}

/// All odd `d <= d_max` whose gap `[r_0 + 1, d' - 1]` is nonempty.
pub fn exception_table(d_max: i64) -> ExceptionTable {
    let entries: Vec<(i64, (i64, i64))> = (3..=d_max)
        .step_by(2)
        .filter_map(|d| {
            let p = profile(d).expect("odd d >= 3");
            gap_of(&p).map(|g| (d, g))
        })
        .collect();
    let min_uncovered_mdr = entries.iter().map(|(_, (lo, _))| *lo).min();
    ExceptionTable { d_max, entries, min_uncovered_mdr }
}

/// `ceil(3d/7)`, a lower bound for `r_0` whenever `d != 15` is odd with at
/// least two distinct prime factors.
pub fn remark_bound(d: i64) -> Result<i64> {
    let p = profile(d)?;
    let Some(r0) = p.r0 else {
        return Err(Error::NotApplicable(format!("{d} is a prime power")));
    };
    if d == 15 {
        return Err(Error::NotApplicable("d = 15 has e1 = 3 > d/7".into()));
    }
    let bound = (3 * d + 6) / 7;
    if r0 < bound {
        return Err(Error::InternalInconsistency(format!("r0 = {r0} < ceil(3d/7) = {bound} for d = {d}")));
    }
    Ok(bound)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub classification: Classification,
    pub coverage: CoverageVerdict,
    /// A failed mdr bound, which means the cuspidal assertion is wrong.
    pub bound_violation: Option<String>,
    /// The curve is free or nearly free.
    pub confirms: bool,
    /// Asserted rational cuspidal yet neither free nor nearly free.
    pub counterexample_candidate: bool,
}

/// Classifies a curve asserted rational cuspidal and names the result that
/// covers its `(d, mdr)`.
pub fn conjecture_report(ctx: &CurveContext) -> Result<ConjectureReport> {
    if !ctx.assume_rational_cuspidal {
        return Err(Error::NotApplicable("curve is not asserted rational cuspidal".into()));
    }
    let classification = classify(ctx)?;
    report_for(ctx, classification)
}

pub fn report_for(ctx: &CurveContext, classification: Classification) -> Result<ConjectureReport> {
    let coverage = coverage(ctx.degree(), classification.r as i64)?;
    let bound_violation = match mdr_bound_check(ctx, &classification) {
        Ok(_) => None,
        Err(Error::BoundViolated(what)) => Some(what),
        Err(e) => return Err(e),
    };
    let confirms = classification.verdict != Verdict::Neither;
    Ok(ConjectureReport {
        classification,
        coverage,
        bound_violation,
        confirms,
        counterexample_candidate: !confirms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{make_context, parse_poly};
    use alloc::vec;

    #[test]
    fn profiles() {
        let p = profile(15).unwrap();
        assert_eq!(p.factors, vec![(3, 1), (5, 1)]);
        assert_eq!((p.p1k1, p.e1, p.r0, p.d_prime), (5, 3, Some(6), 7));
        let p = profile(35).unwrap();
        assert_eq!((p.p1k1, p.e1, p.r0, p.d_prime), (7, 5, Some(15), 17));
        let p = profile(63).unwrap();
        assert_eq!((p.p1k1, p.e1, p.r0, p.d_prime), (9, 7, Some(28), 31));
        assert_eq!(gap_of(&p), Some((29, 30)));
        assert_eq!(profile(25).unwrap().r0, None);
        assert_eq!(profile(8), Err(Error::EvenDegree(8)));
        assert_eq!(profile(1), Err(Error::DegreeTooSmall(1)));
    }

    #[test]
    fn ladder_examples() {
        let v = coverage(35, 16).unwrap();
        assert_eq!(v.status, CoverageStatus::Open);
        assert_eq!(v.gap, Some((16, 16)));
        assert_eq!(coverage(15, 7).unwrap().status, CoverageStatus::CoveredThmA);
        assert_eq!(coverage(15, 6).unwrap().status, CoverageStatus::CoveredThmBi);
        assert_eq!(coverage(25, 10).unwrap().status, CoverageStatus::CoveredPrimePower);
        assert_eq!(coverage(85, 41).unwrap().status, CoverageStatus::Open);
        assert_eq!(coverage(85, 40).unwrap().status, CoverageStatus::CoveredThmBii);
        assert_eq!(coverage(63, 28).unwrap().status, CoverageStatus::CoveredThmB);
        assert_eq!(coverage(35, 18).unwrap().status, CoverageStatus::ExceedsThmABound);
        assert_eq!(coverage(35, 1).unwrap().status, CoverageStatus::CoveredMdrSmall);
        assert_eq!(coverage(12, 5).unwrap().status, CoverageStatus::CoveredEven);
    }

    #[test]
    fn ladder_is_total_and_open_matches_gap() {
        for d in (3..=301).step_by(2) {
            let p = profile(d).unwrap();
            for r in 0..=p.d_prime {
                let v = coverage(d, r).unwrap();
                let in_gap = gap_of(&p).is_some_and(|(lo, hi)| (lo..=hi).contains(&r));
                assert_eq!(v.status == CoverageStatus::Open, in_gap && r > 1, "d = {d}, r = {r}");
                assert_ne!(v.status, CoverageStatus::ExceedsThmABound);
            }
        }
    }

    #[test]
    fn table_small_degrees_empty() {
        assert!(exception_table(33).entries.is_empty());
        assert!(exception_table(34).entries.is_empty());
        assert!(exception_table(3).entries.is_empty());
    }

    #[test]
    fn remark_bound_examples() {
        assert_eq!(remark_bound(35), Ok(15));
        assert_eq!(remark_bound(21), Ok(9));
        assert!(matches!(remark_bound(15), Err(Error::NotApplicable(_))));
        assert!(matches!(remark_bound(27), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn conjecture_reports() {
        let cusp = make_context(parse_poly("y^2*z - x^3").unwrap(), true).unwrap();
        let rep = conjecture_report(&cusp).unwrap();
        assert_eq!(rep.classification.verdict, Verdict::NearlyFree);
        assert_eq!(rep.coverage.status, CoverageStatus::CoveredMdrSmall);
        assert!(rep.confirms);

        let even = make_context(parse_poly("x^4 + y^3*z").unwrap(), true).unwrap();
        assert_eq!(conjecture_report(&even).unwrap().coverage.status, CoverageStatus::CoveredEven);

        // a smooth quartic mislabeled as cuspidal
        let bogus = make_context(parse_poly("x^4 + y^4 + z^4").unwrap(), true).unwrap();
        let rep = conjecture_report(&bogus).unwrap();
        assert!(rep.counterexample_candidate);
        assert!(!rep.confirms);

        let unflagged = make_context(parse_poly("y^2*z - x^3").unwrap(), false).unwrap();
        assert!(matches!(conjecture_report(&unflagged), Err(Error::NotApplicable(_))));
    }
}
