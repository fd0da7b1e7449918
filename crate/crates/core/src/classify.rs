//! Free / nearly free classification.
//!
//! The verdict comes from `nu(f)`; the Tjurina criterion
//! `tau = tau(d, r)` (free) or `tau = tau(d, r) - 1` (nearly free) is
//! recomputed independently and any disagreement is an error.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::defect::{defect_profile, DefectProfile};
use crate::error::{Error, Result};
use crate::jacobian::{mdr, tjurina};
use crate::poly::CurveContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Free,
    NearlyFree,
    Neither,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Free => "Free",
            Verdict::NearlyFree => "NearlyFree",
            Verdict::Neither => "Neither",
        }
    }

    pub fn from_name(s: &str) -> Option<Verdict> {
        match s {
            "Free" => Some(Verdict::Free),
            "NearlyFree" => Some(Verdict::NearlyFree),
            "Neither" => Some(Verdict::Neither),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Exponents `(d1, d2)`, present unless the verdict is `Neither`.
    pub exponents: Option<(usize, usize)>,
    pub degree: i64,
    pub tau: usize,
    pub r: usize,
    pub nu: usize,
    pub tau_dr: i64,
    pub profile: DefectProfile,
    pub notes: Vec<String>,
}

/// `tau(d, r) = (d - 1)^2 - r (d - 1 - r)`.
pub fn tau_formula(d: i64, r: i64) -> i64 {
    (d - 1) * (d - 1) - r * (d - 1 - r)
}

/// Classifies `f` from its already computed invariants.
pub fn classify_from(
    degree: i64,
    r: usize,
    tau: usize,
    profile: DefectProfile,
) -> Result<Classification> {
    let nu = profile.nu;
    let tau_dr = tau_formula(degree, r as i64);
    let (verdict, exponents) = match nu {
        0 => (Verdict::Free, Some((r, (degree - 1) as usize - r))),
        1 => (Verdict::NearlyFree, Some((r, degree as usize - r))),
        _ => (Verdict::Neither, None),
    };
    let by_tau = if tau as i64 == tau_dr {
        Verdict::Free
    } else if tau as i64 == tau_dr - 1 {
        Verdict::NearlyFree
    } else {
        Verdict::Neither
    };
    if by_tau != verdict {
        return Err(Error::InternalInconsistency(format!(
            "nu = {nu} gives {} but tau = {tau}, tau(d, r) = {tau_dr} gives {}",
            verdict.name(),
            by_tau.name()
        )));
    }
    let mut notes = Vec::new();
    if r == 0 {
        notes.push(String::from(
            "mdr(f) = 0: C is a union of lines through one point",
        ));
    }
    if tau as i64 > tau_dr {
        notes.push(format!("tau = {tau} exceeds tau(d, r) = {tau_dr}"));
    }
    if r as i64 * 2 > degree && verdict == Verdict::Neither {
        notes.push(format!("mdr = {r} > d/2, outside the free/nearly free range"));
    }
    let c = Classification { verdict, exponents, degree, tau, r, nu, tau_dr, profile, notes };
    c.check_exponent_relations()?;
    Ok(c)
}

/// Full classification of `C: f = 0`.
pub fn classify(ctx: &CurveContext) -> Result<Classification> {
    let r = mdr(ctx);
    let tau = tjurina(ctx)?;
    let profile = defect_profile(ctx)?;
    classify_from(ctx.degree(), r, tau, profile)
}

impl Classification {
    /// Exponent identities: `d1 + d2 = d - 1`, `tau = (d-1)^2 - d1 d2` when
    /// free; `d1 + d2 = d`, `tau = (d-1)^2 - d1 (d2 - 1) - 1` when nearly free.
    pub fn check_exponent_relations(&self) -> Result<()> {
        let d = self.degree;
        let Some((d1, d2)) = self.exponents else {
            return Ok(());
        };
        let (d1, d2) = (d1 as i64, d2 as i64);
        let (sum, tau) = match self.verdict {
            Verdict::Free => (d - 1, (d - 1) * (d - 1) - d1 * d2),
            Verdict::NearlyFree => (d, (d - 1) * (d - 1) - d1 * (d2 - 1) - 1),
            Verdict::Neither => return Ok(()),
        };
        if d1 + d2 != sum || tau != self.tau as i64 || d1 != self.r as i64 {
            return Err(Error::InternalInconsistency(format!(
                "exponents ({d1}, {d2}) do not match d = {d}, tau = {}, mdr = {}",
                self.tau, self.r
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// `(description, holds)` for each bound that applies.
    pub checks: Vec<(String, bool)>,
    /// For odd `d` with the cuspidal flag: whether `mdr = (d - 1)/2`.
    pub at_cuspidal_bound: Option<bool>,
}

/// Checks `mdr <= (d-1)/2` (free), `mdr <= d/2` (nearly free) and, for an
/// odd-degree curve asserted rational cuspidal, `mdr <= (d-1)/2`.
pub fn check_mdr_bounds(d: i64, r: usize, verdict: Verdict, cuspidal: bool) -> Result<BoundReport> {
    let r = r as i64;
    let mut checks = Vec::new();
    match verdict {
        Verdict::Free => checks.push((format!("free: mdr = {r} <= (d-1)/2"), 2 * r < d)),
        Verdict::NearlyFree => checks.push((format!("nearly free: mdr = {r} <= d/2"), 2 * r <= d)),
        Verdict::Neither => {}
    }
    let mut at_cuspidal_bound = None;
    if cuspidal && d % 2 == 1 {
        let d_prime = (d - 1) / 2;
        checks.push((format!("rational cuspidal, odd d: mdr = {r} <= d' = {d_prime}"), r <= d_prime));
        at_cuspidal_bound = Some(r == d_prime);
    }
    if let Some((what, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::BoundViolated(what.clone()));
    }
    Ok(BoundReport { checks, at_cuspidal_bound })
}

pub fn mdr_bound_check(ctx: &CurveContext, c: &Classification) -> Result<BoundReport> {
    check_mdr_bounds(ctx.degree(), c.r, c.verdict, ctx.assume_rational_cuspidal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{make_context, parse_poly};
    use alloc::vec;

    fn ctx(s: &str, cusp: bool) -> CurveContext {
        make_context(parse_poly(s).unwrap(), cusp).unwrap()
    }

    #[test]
    fn tau_formula_values() {
        assert_eq!(tau_formula(3, 1), 3);
        assert_eq!(tau_formula(5, 2), 12);
        for d in 2..20 {
            assert_eq!(tau_formula(d, 0), (d - 1) * (d - 1));
        }
    }

    #[test]
    fn tau_formula_symmetry() {
        for d in 2..=100 {
            for r in 0..d {
                assert_eq!(tau_formula(d, r), tau_formula(d, d - 1 - r));
            }
        }
    }

    #[test]
    fn triangle_is_free() {
        let c = classify(&ctx("x*y*z", false)).unwrap();
        assert_eq!(c.verdict, Verdict::Free);
        assert_eq!(c.exponents, Some((1, 1)));
        assert_eq!(c.tau, 3);
    }

    #[test]
    fn cusp_is_nearly_free() {
        let c = classify(&ctx("y^2*z - x^3", true)).unwrap();
        assert_eq!(c.verdict, Verdict::NearlyFree);
        assert_eq!(c.exponents, Some((1, 2)));
        assert_eq!(c.tau, 2);
    }

    #[test]
    fn smooth_quartic_is_neither() {
        let c = classify(&ctx("x^4 + y^4 + z^4", false)).unwrap();
        assert_eq!(c.verdict, Verdict::Neither);
        assert_eq!(c.tau, 0);
        assert!(c.nu > 1);
        assert_eq!(c.exponents, None);
    }

    #[test]
    fn concurrent_lines_note() {
        let c = classify(&ctx("x^3 - y^3", false)).unwrap();
        assert_eq!(c.verdict, Verdict::Free);
        assert_eq!(c.exponents, Some((0, 2)));
        assert!(c.notes[0].contains("lines through one point"));
    }

    #[test]
    fn inconsistent_invariants_rejected() {
        let profile = DefectProfile::from_values(3, vec![0, 0, 0, 0]).unwrap();
        // nu = 0 claims free, but tau = 2 < tau(3, 1) = 3
        let err = classify_from(3, 1, 2, profile).unwrap_err();
        assert!(matches!(err, Error::InternalInconsistency(_)));
    }

    #[test]
    fn bound_checks() {
        let c = ctx("x*y*z", false);
        let cl = classify(&c).unwrap();
        let rep = mdr_bound_check(&c, &cl).unwrap();
        assert_eq!(rep.checks.len(), 1);
        assert!(rep.checks[0].1);

        let c = ctx("y^2*z - x^3", true);
        let cl = classify(&c).unwrap();
        let rep = mdr_bound_check(&c, &cl).unwrap();
        assert_eq!(rep.checks.len(), 2);
        assert_eq!(rep.at_cuspidal_bound, Some(true));

        let err = check_mdr_bounds(7, 4, Verdict::Free, false).unwrap_err();
        assert!(matches!(err, Error::BoundViolated(_)));
        assert!(check_mdr_bounds(7, 4, Verdict::Neither, true).is_err());
    }
}
