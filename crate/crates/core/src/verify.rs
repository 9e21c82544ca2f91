//! Suites of cross-checks between the formulas, the decision procedures and
//! brute force.

use std::fmt;

use num_bigint::BigUint;

use crate::census::{fd_eq_ud_condition, is_fd_eq_ud};
use crate::decide::{delay_analysis, sardinas_patterson};
use crate::enumerate::{
    bounded_delay_probe, census_with_cap, classify, fold_parallel, safe_bound,
    two_factorization_search, universe_size, Mode, ProbeVerdict, Universe, DEFAULT_UNIVERSE_CAP,
};
use crate::error::{Error, Result};
use crate::kraft::{infinite_delay_witness, is_feasible, ud_nonprefix_witness};
use crate::words::{Alphabet, Code, LengthProfile};

/// Profiles checked when no suite file is given.
pub const BUILTIN_SUITE: &[&[usize]] = &[
    &[1, 1],
    &[1, 2],
    &[1, 3],
    &[2, 2],
    &[2, 3],
    &[1, 1, 1],
    &[1, 1, 2],
    &[1, 2, 2],
    &[1, 2, 3],
    &[1, 2, 4],
    &[1, 3, 3],
    &[2, 2, 2],
    &[2, 2, 3],
    &[2, 2, 4],
    &[2, 3, 3],
    &[2, 2, 2, 2],
    &[1, 2, 3, 3],
    &[1, 2, 3, 4],
    &[2, 2, 3, 3],
];

/// Universes at most this large also get the per-code oracle comparison.
pub const DEFAULT_ORACLE_CAP: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suite {
    pub profiles: Vec<LengthProfile>,
}

impl Suite {
    pub fn builtin() -> Suite {
        Suite {
            profiles: BUILTIN_SUITE
                .iter()
                .map(|l| LengthProfile::from_lengths(l).expect("valid built-in profile"))
                .collect(),
        }
    }

    /// One comma-separated length sequence per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Suite> {
        let mut profiles = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lengths = parse_lengths(line).map_err(|message| Error::Syntax {
                line: i + 1,
                message,
            })?;
            profiles.push(LengthProfile::from_lengths(&lengths)?);
        }
        Ok(Suite { profiles })
    }
}

/// `"2,3,3"` as a length sequence.
pub fn parse_lengths(text: &str) -> std::result::Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(format!("expected a positive length, found {t:?}")),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub profile: LengthProfile,
    pub n: u32,
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "pass" } else { "FAIL" };
        write!(
            f,
            "{mark} {} n={} {}: {}",
            self.profile, self.n, self.check, self.detail
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub alphabet_max: u32,
    pub universe_cap: u64,
    pub oracle_cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            alphabet_max: 3,
            universe_cap: DEFAULT_UNIVERSE_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Disagreements between the decision procedures and the brute-force oracles
/// over one universe.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleTally {
    pub codes: u64,
    pub ud_disagreements: u64,
    pub delay_disagreements: u64,
    pub first_disagreement: Option<Code>,
}

impl OracleTally {
    fn merge(mut self, other: OracleTally) -> OracleTally {
        self.codes += other.codes;
        self.ud_disagreements += other.ud_disagreements;
        self.delay_disagreements += other.delay_disagreements;
        self.first_disagreement = self.first_disagreement.or(other.first_disagreement);
        self
    }

    pub fn agree(&self) -> bool {
        self.ud_disagreements == 0 && self.delay_disagreements == 0
    }
}

/// Does `delay_analysis` match `bounded_delay_probe` at the safe bound?
/// Non-injective codes have no delay and match trivially.
pub fn delay_agrees(c: &Code) -> bool {
    let (Ok(report), Ok(probe)) = (delay_analysis(c), bounded_delay_probe(c, safe_bound(c))) else {
        return !c.is_injective();
    };
    match probe.verdict {
        ProbeVerdict::Finite => report.finite && report.delay == probe.delay,
        ProbeVerdict::Infinite => !report.finite,
        ProbeVerdict::Unknown => false,
    }
}

/// Does `sardinas_patterson` match `two_factorization_search` at the safe
/// bound?
pub fn ud_agrees(c: &Code) -> bool {
    sardinas_patterson(c).is_unique() == two_factorization_search(c, safe_bound(c)).is_none()
}

pub fn oracle_tally(universe: &Universe) -> OracleTally {
    fold_parallel(
        universe,
        OracleTally::default(),
        |t, c| {
            t.codes += 1;
            let ud_ok = ud_agrees(c);
            let delay_ok = delay_agrees(c);
            t.ud_disagreements += !ud_ok as u64;
            t.delay_disagreements += !delay_ok as u64;
            if !(ud_ok && delay_ok) && t.first_disagreement.is_none() {
                t.first_disagreement = Some(c.clone());
            }
        },
        OracleTally::merge,
    )
}

fn outcome(
    profile: &LengthProfile,
    n: u32,
    check: &'static str,
    passed: bool,
    detail: String,
) -> CheckOutcome {
    CheckOutcome {
        profile: profile.clone(),
        n,
        check,
        passed,
        detail,
    }
}

fn show(v: &Option<BigUint>) -> String {
    v.as_ref().map_or("-".into(), |v| v.to_string())
}

/// All checks for one profile at one alphabet size. Universes above the cap
/// are skipped.
pub fn check_profile(
    profile: &LengthProfile,
    n: u32,
    opts: &VerifyOptions,
) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let total = universe_size(&profile.lengths(), n);
    if total > BigUint::from(opts.universe_cap) {
        return Ok(out);
    }
    let report = census_with_cap(profile, n, Mode::Both, opts.universe_cap)?;
    let detail = format!(
        "pr={} fd={} ud={}",
        report.pr,
        show(&report.fd),
        show(&report.ud)
    );
    out.push(outcome(
        profile,
        n,
        "formula-vs-enumeration",
        report.discrepancies.is_empty(),
        if report.discrepancies.is_empty() {
            detail.clone()
        } else {
            report
                .discrepancies
                .iter()
                .map(|d| {
                    format!(
                        "{}: formula {} vs enumeration {}",
                        d.quantity, d.formula, d.enumeration
                    )
                })
                .collect::<Vec<_>>()
                .join("; ")
        },
    ));

    let (pr, fd, ud) = (
        &report.pr,
        report.fd.clone().unwrap_or_default(),
        report.ud.clone().unwrap_or_default(),
    );
    out.push(outcome(
        profile,
        n,
        "pr<=fd<=ud",
        *pr <= fd && fd <= ud,
        detail,
    ));

    if is_feasible(profile, n) {
        let constant = profile.is_constant();
        out.push(outcome(
            profile,
            n,
            "pr=ud iff constant",
            (*pr == ud) == constant,
            format!("pr={pr} ud={ud} constant={constant}"),
        ));
        let condition = is_fd_eq_ud(profile, n)?;
        out.push(outcome(
            profile,
            n,
            "fd=ud iff condition",
            (fd == ud) == condition,
            format!("fd={fd} ud={ud} condition={condition}"),
        ));

        let alphabet = Alphabet::new(n as usize)?;
        if !constant {
            let (passed, detail) = match ud_nonprefix_witness(profile, alphabet) {
                Ok(c) => {
                    let class = classify(&c);
                    (
                        class.ud && !class.prefix,
                        format!("{c} ud={} prefix={}", class.ud, class.prefix),
                    )
                }
                Err(e) => (false, e.to_string()),
            };
            out.push(outcome(profile, n, "ud-nonprefix witness", passed, detail));
        }
        if !fd_eq_ud_condition(profile) {
            let (passed, detail) = match infinite_delay_witness(profile, alphabet) {
                Ok((c, construction)) => {
                    let class = classify(&c);
                    (
                        class.ud && !class.finite_delay,
                        format!(
                            "{c} ({}) ud={} finite_delay={}",
                            construction.case.name(),
                            class.ud,
                            class.finite_delay
                        ),
                    )
                }
                Err(e) => (false, e.to_string()),
            };
            out.push(outcome(
                profile,
                n,
                "infinite-delay witness",
                passed,
                detail,
            ));
        }
    }

    if total <= BigUint::from(opts.oracle_cap) {
        let universe = Universe::for_lengths(
            &profile.lengths(),
            Alphabet::new(n as usize)?,
            opts.oracle_cap,
        )?;
        let t = oracle_tally(&universe);
        let mut detail = format!(
            "{} codes, {} ud and {} delay disagreements",
            t.codes, t.ud_disagreements, t.delay_disagreements
        );
        if let Some(c) = &t.first_disagreement {
            detail.push_str(&format!(", first at {c}"));
        }
        out.push(outcome(profile, n, "oracle agreement", t.agree(), detail));
    }

    Ok(out)
}

/// Every check of every profile for `n = 2..=alphabet_max`.
pub fn run(suite: &Suite, opts: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for profile in &suite.profiles {
        for n in 2..=opts.alphabet_max {
            out.extend(check_profile(profile, n, opts)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suites() {
        let suite = Suite::parse("# profiles\n2,3,3\n\n1, 2 # pair\n").unwrap();
        assert_eq!(suite.profiles.len(), 2);
        assert_eq!(suite.profiles[1].lengths(), vec![1, 2]);
        assert!(Suite::parse("").unwrap().profiles.is_empty());
        assert!(matches!(
            Suite::parse("2,x").unwrap_err(),
            Error::Syntax { line: 1, .. }
        ));
        assert!(Suite::parse("2,0").is_err());
    }

    #[test]
    fn single_profile_suite_passes() {
        let suite = Suite::parse("2,3,3").unwrap();
        let opts = VerifyOptions {
            alphabet_max: 2,
            ..VerifyOptions::default()
        };
        let outcomes = run(&suite, &opts).unwrap();
        assert!(outcomes.iter().all(|o| o.passed), "{outcomes:#?}");
        assert!(outcomes.iter().any(|o| o.check == "oracle agreement"));
    }
}
