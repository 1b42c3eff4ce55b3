//! Runs named claims over every enumerated square-free solution up to a
//! size bound.
//!
//! Each claim has hypotheses; solutions outside them are skipped rather
//! than counted as passes. Claims marked as not asserted are open:
//! their outcomes are reported, and a failure there is a finding, not an
//! error.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{enumerate_with, EnumerateOptions};
use crate::error::{Error, Result};
use crate::retract::{
    check_abelian_collapse, check_epimorphism, check_fixed_point_orbit, check_orbit_identity,
    check_orbit_preservation, check_trivial_orbit_agreement, multipermutation_level, quotient,
    rho_classes, strong_level,
};
use crate::solution::Solution;
use crate::structure::check_defining_relations;
use crate::twisted::{
    check_cyclic_condition, check_cyclic_generators, check_full_cyclic_condition, check_key2,
    check_theorem_cyclic1, find_gtu_decomposition,
};

/// Default largest `n` for sweeps.
pub const SWEEP_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Claim {
    /// Non-trivial, abelian `G_r`: some `ρ`-class has two points.
    #[serde(rename = "abelian_collapse")]
    AbelianCollapse,
    /// Abelian `G_r`: iterating `Ret_ρ` reaches a trivial solution.
    #[serde(rename = "strong_retract_abelian")]
    StrongRetractAbelian,
    /// `n ≥ 2`: at least two orbits.
    #[serde(rename = "rump_decomposable")]
    RumpDecomposable,
    #[serde(rename = "lemma_permutat")]
    LemmaPermutat,
    /// Abelian `G_r`: each `σ_i` is the identity on the orbit of `i`.
    #[serde(rename = "corollary_identity")]
    OrbitIdentity,
    /// Cyclic generators: strongly retractable, and a twisted union for `n ≥ 2`.
    #[serde(rename = "cyclic1")]
    Cyclic1,
    /// `n ≥ 2`: multipermutation level below `n`. Reported only.
    #[serde(rename = "conjecture_I_bound")]
    LevelBelowSize,
    /// `n ≥ 2` and retractable: some twisted-union split exists. Reported only.
    #[serde(rename = "gtu_universality")]
    GtuUniversality,
    #[serde(rename = "cyclic_condition")]
    CyclicCondition,
    #[serde(rename = "full_cyclic_condition")]
    FullCyclicCondition,
    /// `ρ` is compatible with `r`.
    #[serde(rename = "rho_compatible")]
    RhoCompatible,
    /// The generator map onto the `ρ`-quotient is equivariant.
    #[serde(rename = "rho_equivariant")]
    RhoEquivariant,
    /// The `ρ`-quotient has matching orbits.
    #[serde(rename = "rho_orbits")]
    RhoOrbits,
    /// Abelian `G_r`: a fixed point forces a fixed orbit.
    #[serde(rename = "fixed_point_orbit")]
    FixedPointOrbit,
    #[serde(rename = "trivial_orbit_agreement")]
    TrivialOrbitAgreement,
    /// Cyclic generators: `σ` within an orbit are conjugate.
    #[serde(rename = "orbit_conjugacy")]
    OrbitConjugacy,
    #[serde(rename = "defining_relations")]
    DefiningRelations,
}

impl Claim {
    pub const ALL: [Claim; 17] = [
        Claim::AbelianCollapse,
        Claim::StrongRetractAbelian,
        Claim::RumpDecomposable,
        Claim::LemmaPermutat,
        Claim::OrbitIdentity,
        Claim::Cyclic1,
        Claim::LevelBelowSize,
        Claim::GtuUniversality,
        Claim::CyclicCondition,
        Claim::FullCyclicCondition,
        Claim::RhoCompatible,
        Claim::RhoEquivariant,
        Claim::RhoOrbits,
        Claim::FixedPointOrbit,
        Claim::TrivialOrbitAgreement,
        Claim::OrbitConjugacy,
        Claim::DefiningRelations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::AbelianCollapse => "abelian_collapse",
            Claim::StrongRetractAbelian => "strong_retract_abelian",
            Claim::RumpDecomposable => "rump_decomposable",
            Claim::LemmaPermutat => "lemma_permutat",
            Claim::OrbitIdentity => "corollary_identity",
            Claim::Cyclic1 => "cyclic1",
            Claim::LevelBelowSize => "conjecture_I_bound",
            Claim::GtuUniversality => "gtu_universality",
            Claim::CyclicCondition => "cyclic_condition",
            Claim::FullCyclicCondition => "full_cyclic_condition",
            Claim::RhoCompatible => "rho_compatible",
            Claim::RhoEquivariant => "rho_equivariant",
            Claim::RhoOrbits => "rho_orbits",
            Claim::FixedPointOrbit => "fixed_point_orbit",
            Claim::TrivialOrbitAgreement => "trivial_orbit_agreement",
            Claim::OrbitConjugacy => "orbit_conjugacy",
            Claim::DefiningRelations => "defining_relations",
        }
    }

    /// Open claims are reported, not asserted.
    pub fn is_asserted(self) -> bool {
        !matches!(self, Claim::LevelBelowSize | Claim::GtuUniversality)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

/// Restricts the swept population before claim hypotheses apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    #[default]
    All,
    Abelian,
    Cyclic,
}

impl Filter {
    pub fn accepts(self, s: &Solution) -> bool {
        match self {
            Filter::All => true,
            Filter::Abelian => s.iyb_group().is_abelian(),
            Filter::Cyclic => check_cyclic_generators(s),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Filter> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Filter::All),
            "abelian" => Ok(Filter::Abelian),
            "cyclic" => Ok(Filter::Cyclic),
            _ => Err(Error::Parse(format!("unknown filter {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

/// Verdict of one claim on one solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ClaimOutcome {
    fn pass() -> Self {
        ClaimOutcome {
            outcome: Outcome::Pass,
            detail: None,
        }
    }

    fn skip(why: &str) -> Self {
        ClaimOutcome {
            outcome: Outcome::Skip,
            detail: Some(why.into()),
        }
    }

    fn fail(why: String) -> Self {
        ClaimOutcome {
            outcome: Outcome::Fail,
            detail: Some(why),
        }
    }

    fn from_bool(ok: bool, why: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(why())
        }
    }

    fn from_verdict<W: fmt::Debug>(v: std::result::Result<(), W>) -> Self {
        match v {
            Ok(()) => Self::pass(),
            Err(w) => Self::fail(format!("{w:?}")),
        }
    }
}

/// Evaluates a claim on a single solution, honoring its hypotheses.
pub fn evaluate_claim(claim: Claim, s: &Solution) -> Result<ClaimOutcome> {
    if !s.is_square_free() {
        return Ok(ClaimOutcome::skip("not square-free"));
    }
    let abelian = || s.iyb_group().is_abelian();
    Ok(match claim {
        Claim::AbelianCollapse => {
            if !abelian() {
                ClaimOutcome::skip("G_r not abelian")
            } else if s.is_trivial() {
                ClaimOutcome::skip("trivial")
            } else {
                ClaimOutcome::from_bool(check_abelian_collapse(s)?, || {
                    "every rho-class is a singleton".into()
                })
            }
        }
        Claim::StrongRetractAbelian => {
            if !abelian() {
                ClaimOutcome::skip("G_r not abelian")
            } else {
                ClaimOutcome::from_bool(strong_level(s)?.is_some(), || {
                    "Ret_rho stalls on a non-trivial solution".into()
                })
            }
        }
        Claim::RumpDecomposable => {
            if s.n() < 2 {
                ClaimOutcome::skip("n < 2")
            } else {
                let m = s.orbits().num_classes();
                ClaimOutcome::from_bool(m >= 2, || format!("{m} orbit(s)"))
            }
        }
        Claim::LemmaPermutat => ClaimOutcome::from_verdict(s.check_lemma_permutat()),
        Claim::OrbitIdentity => {
            if !abelian() {
                ClaimOutcome::skip("G_r not abelian")
            } else {
                ClaimOutcome::from_verdict(check_orbit_identity(s))
            }
        }
        Claim::Cyclic1 => {
            if !check_cyclic_generators(s) {
                ClaimOutcome::skip("generators not cyclic")
            } else {
                ClaimOutcome::from_bool(check_theorem_cyclic1(s)?, || {
                    "not strongly retractable or no twisted-union split".into()
                })
            }
        }
        Claim::LevelBelowSize => {
            if s.n() < 2 {
                ClaimOutcome::skip("n < 2")
            } else {
                match multipermutation_level(s)? {
                    Some(m) => ClaimOutcome::from_bool(m < s.n(), || format!("level {m}")),
                    None => ClaimOutcome::fail("not retractable".into()),
                }
            }
        }
        Claim::GtuUniversality => {
            if s.n() < 2 {
                ClaimOutcome::skip("n < 2")
            } else if multipermutation_level(s)?.is_none() {
                ClaimOutcome::skip("not retractable")
            } else {
                ClaimOutcome::from_bool(find_gtu_decomposition(s)?.is_some(), || {
                    "no twisted-union split".into()
                })
            }
        }
        Claim::CyclicCondition => ClaimOutcome::from_verdict(check_cyclic_condition(s)),
        Claim::FullCyclicCondition => ClaimOutcome::from_verdict(check_full_cyclic_condition(s)),
        Claim::RhoCompatible => match quotient(s, &rho_classes(s)) {
            Ok(_) => ClaimOutcome::pass(),
            Err(e @ Error::IncompatiblePartition { .. }) => ClaimOutcome::fail(e.to_string()),
            Err(e) => return Err(e),
        },
        Claim::RhoEquivariant => ClaimOutcome::from_verdict(check_epimorphism(s)?),
        Claim::RhoOrbits => ClaimOutcome::from_bool(check_orbit_preservation(s)?, || {
            "orbit structure not preserved".into()
        }),
        Claim::FixedPointOrbit => {
            if !abelian() {
                ClaimOutcome::skip("G_r not abelian")
            } else {
                ClaimOutcome::from_verdict(check_fixed_point_orbit(s))
            }
        }
        Claim::TrivialOrbitAgreement => {
            ClaimOutcome::from_verdict(check_trivial_orbit_agreement(s))
        }
        Claim::OrbitConjugacy => {
            if !check_cyclic_generators(s) {
                ClaimOutcome::skip("generators not cyclic")
            } else {
                ClaimOutcome::from_verdict(check_key2(s)?)
            }
        }
        Claim::DefiningRelations => ClaimOutcome::from_verdict(check_defining_relations(s)?),
    })
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub claim: Claim,
    pub n_max: usize,
    pub filter: Filter,
    /// Sweep one canonical form per class instead of every labeled solution.
    pub up_to_iso: bool,
    pub threads: usize,
    pub cap: usize,
}

impl SweepOptions {
    pub fn new(claim: Claim, n_max: usize) -> SweepOptions {
        SweepOptions {
            claim,
            n_max,
            filter: Filter::All,
            up_to_iso: false,
            threads: 1,
            cap: SWEEP_CAP,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub total: usize,
    pub filtered_out: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeTally {
    pub n: usize,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionVerdict {
    pub n: usize,
    /// 1-based `σ` image table.
    pub sigma: Vec<Vec<usize>>,
    #[serde(flatten)]
    pub outcome: ClaimOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub claim: Claim,
    pub asserted: bool,
    pub n_max: usize,
    pub filter: Filter,
    pub up_to_iso: bool,
    pub summary: Tally,
    pub per_n: Vec<SizeTally>,
    pub verdicts: Vec<SolutionVerdict>,
    pub counterexamples: Vec<SolutionVerdict>,
}

impl SweepReport {
    /// True unless an asserted claim has a counterexample.
    pub fn holds(&self) -> bool {
        !self.asserted || self.counterexamples.is_empty()
    }
}

pub fn sweep(opts: &SweepOptions) -> Result<SweepReport> {
    if opts.n_max > opts.cap {
        return Err(Error::CapExceeded {
            what: format!("sweep up to n = {}", opts.n_max),
            cap: opts.cap,
        });
    }
    let mut summary = Tally::default();
    let mut per_n = Vec::new();
    let mut verdicts = Vec::new();
    for n in 1..=opts.n_max {
        let enum_opts = EnumerateOptions {
            up_to_iso: opts.up_to_iso,
            threads: opts.threads,
            cap: opts.cap.max(opts.n_max),
        };
        let mut tally = Tally::default();
        for s in enumerate_with(n, &enum_opts)? {
            tally.total += 1;
            if !opts.filter.accepts(&s) {
                tally.filtered_out += 1;
                continue;
            }
            let outcome = evaluate_claim(opts.claim, &s)?;
            match outcome.outcome {
                Outcome::Pass => tally.passed += 1,
                Outcome::Fail => tally.failed += 1,
                Outcome::Skip => tally.skipped += 1,
            }
            verdicts.push(SolutionVerdict {
                n,
                sigma: s.sigmas().iter().map(|p| p.to_one_based()).collect(),
                outcome,
            });
        }
        summary.total += tally.total;
        summary.filtered_out += tally.filtered_out;
        summary.passed += tally.passed;
        summary.failed += tally.failed;
        summary.skipped += tally.skipped;
        per_n.push(SizeTally { n, tally });
    }
    let counterexamples = verdicts
        .iter()
        .filter(|v| v.outcome.outcome == Outcome::Fail)
        .cloned()
        .collect();
    Ok(SweepReport {
        claim: opts.claim,
        asserted: opts.claim.is_asserted(),
        n_max: opts.n_max,
        filter: opts.filter,
        up_to_iso: opts.up_to_iso,
        summary,
        per_n,
        verdicts,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
            assert_eq!(
                serde_json::to_string(&c).unwrap(),
                format!("\"{}\"", c.name())
            );
        }
        assert!("nope".parse::<Claim>().is_err());
    }

    #[test]
    fn small_sweep() {
        let r = sweep(&SweepOptions::new(Claim::RumpDecomposable, 3)).unwrap();
        assert!(r.holds());
        assert_eq!(r.per_n[0].tally.skipped, 1);
        assert_eq!(r.summary.failed, 0);
    }

    #[test]
    fn sweep_cap() {
        assert!(sweep(&SweepOptions::new(Claim::TrivialOrbitAgreement, 7)).is_err());
    }

    #[test]
    fn hypotheses_are_skips() {
        let t = Solution::trivial(3);
        assert_eq!(
            evaluate_claim(Claim::AbelianCollapse, &t).unwrap().outcome,
            Outcome::Skip
        );
        assert_eq!(
            evaluate_claim(Claim::StrongRetractAbelian, &t)
                .unwrap()
                .outcome,
            Outcome::Pass
        );
    }
}
