//! Closed-form counts, the lower bound on `|UD_n(L)| / |PR_n(L)|`, and the
//! predicates telling when `PR_n(L) = UD_n(L)` and `FD_n(L) = UD_n(L)`.
//!
//! Both predicates only depend on the shape of `L`; they take `n` because
//! they are stated for non-empty `UD_n(L)`, and an infeasible profile is
//! reported as an error rather than answered vacuously.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumerate::{census_with_cap, Mode, DEFAULT_UNIVERSE_CAP};
use crate::error::{Error, Result};
use crate::kraft::{count_prefix_codes, pow, require_feasible};
use crate::words::LengthProfile;

/// `|PR_n((a, b))| = n^{a+b} - n^{max(a,b)}`.
pub fn count_pr_pair(a: usize, b: usize, n: u32) -> BigUint {
    pow(n, a + b) - pow(n, a.max(b))
}

/// `(|UD_n((2,3,3))|, |PR_n((2,3,3))|)` from their closed forms.
///
/// Splitting on the first word: `n(n-1)` choices `xy` with `x != y` each
/// leave `n^3(n^3-1) - 2(n+1)` uniquely decodable completions, and `n`
/// choices `xx` each leave `(n^3-1)(n^3-2) - 2(n-1)`. Their sum expands to
/// `n(n-1)(n^6 + n^5 + n^4 - 2n^2 - 4n - 6)`.
pub fn count_233(n: u32) -> (BigUint, BigUint) {
    let n = BigInt::from(n);
    let p = |k: u32| n.pow(k);
    let base: BigInt = &n * (&n - 1);
    let ud: BigInt = &base * (p(6) + p(5) + p(4) - 2 * p(2) - 4 * &n - 6);
    let pr: BigInt = &base * (p(6) + p(5) - p(4) - 2 * p(3) - p(2));
    (
        ud.to_biguint().expect("positive for n >= 2"),
        pr.to_biguint().expect("positive for n >= 2"),
    )
}

fn clamp(v: BigInt) -> BigUint {
    v.to_biguint().unwrap_or_default()
}

/// `(|UD_n(L)|, |PR_n(L)|)` for `L = (a,…,a,b)` with `m - 1` copies of `a`
/// and `a | b`.
///
/// A falling factorial running past zero, or a negative last factor, means
/// the set is empty and yields zero.
pub fn count_all_a_then_b(n: u32, m: usize, a: usize, b: usize) -> Result<(BigUint, BigUint)> {
    if m < 2 {
        return Err(Error::Argument(format!("need m >= 2 words, got {m}")));
    }
    if a == 0 || !b.is_multiple_of(a) {
        return Err(Error::Argument(format!(
            "closed form requires a | b, got a={a}, b={b}"
        )));
    }
    let na = BigInt::from(pow(n, a));
    let mut falling = BigInt::one();
    for k in 0..m - 1 {
        let factor = &na - k;
        if factor <= BigInt::zero() {
            falling = BigInt::zero();
            break;
        }
        falling *= factor;
    }
    let nb = BigInt::from(pow(n, b));
    let others = BigInt::from(m - 1);
    let ud_last = &nb - others.pow((b / a) as u32);
    let pr_last = &nb - &others * BigInt::from(pow(n, b - a));
    Ok((clamp(&falling * ud_last), clamp(&falling * pr_last)))
}

/// `|UD_n(L)|` when one of the closed forms applies: `L = (2,3,3)`, `L`
/// constant, or `L = (a,…,a,b)` with `a | b`.
pub fn closed_form_ud(profile: &LengthProfile, n: u32) -> Option<BigUint> {
    if profile.lengths() == [2, 3, 3] {
        return Some(count_233(n).0);
    }
    if profile.is_constant() {
        return Some(count_prefix_codes(profile, n).count);
    }
    match (profile.values(), profile.multiplicities()) {
        (&[a, b], &[_, 1]) if b.is_multiple_of(a) => count_all_a_then_b(n, profile.total(), a, b)
            .ok()
            .map(|(ud, _)| ud),
        _ => None,
    }
}

/// Lower bound on the UD/PR ratio, checked against counts
/// when they are available.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// `1 + r_a r_b / |PR_n((a,b))|`.
    pub lower_bound: BigRational,
    pub pr_count: BigUint,
    pub ud_count: Option<BigUint>,
    pub ratio: Option<BigRational>,
    pub satisfied: Option<bool>,
}

/// The bound for two distinct values `a`, `b` of a feasible non-constant
/// profile. `ud_count` comes from a closed form, else from enumeration when
/// the universe is at most `cap` codes, else it is absent.
pub fn ratio_lower_bound_with_cap(
    profile: &LengthProfile,
    n: u32,
    a: usize,
    b: usize,
    cap: u64,
) -> Result<BoundReport> {
    if profile.is_constant() {
        return Err(Error::Argument(format!(
            "{profile} is constant; the bound needs two values"
        )));
    }
    if a == b || profile.index_of(a).is_none() || profile.index_of(b).is_none() {
        return Err(Error::Argument(format!(
            "a={a} and b={b} must be two different values of {profile}"
        )));
    }
    require_feasible(profile, n)?;
    let rab = BigInt::from(profile.multiplicity(a) * profile.multiplicity(b));
    let lower_bound =
        BigRational::one() + BigRational::new(rab, BigInt::from(count_pr_pair(a, b, n)));
    let pr_count = count_prefix_codes(profile, n).count;
    let ud_count = closed_form_ud(profile, n).or_else(|| {
        census_with_cap(profile, n, Mode::Enumeration, cap)
            .ok()
            .and_then(|report| report.ud)
    });
    let ratio = ud_count
        .as_ref()
        .map(|ud| BigRational::new(BigInt::from(ud.clone()), BigInt::from(pr_count.clone())));
    let satisfied = ratio.as_ref().map(|r| r >= &lower_bound);
    Ok(BoundReport {
        lower_bound,
        pr_count,
        ud_count,
        ratio,
        satisfied,
    })
}

pub fn ratio_lower_bound(
    profile: &LengthProfile,
    n: u32,
    a: usize,
    b: usize,
) -> Result<BoundReport> {
    ratio_lower_bound_with_cap(profile, n, a, b, DEFAULT_UNIVERSE_CAP)
}

/// `PR_n(L) = UD_n(L)` iff `L` is constant.
pub fn is_pr_eq_ud(profile: &LengthProfile, n: u32) -> Result<bool> {
    require_feasible(profile, n)?;
    Ok(profile.is_constant())
}

/// `L` has length at most two, or is `(a,…,a,b)` up to order with `a | b`
/// (constant sequences included). Independent of the alphabet.
pub fn fd_eq_ud_condition(profile: &LengthProfile) -> bool {
    if profile.total() <= 2 || profile.is_constant() {
        return true;
    }
    match (profile.values(), profile.multiplicities()) {
        // values are sorted, so the lone word is the longest one
        (&[a, b], &[_, 1]) => b.is_multiple_of(a),
        _ => false,
    }
}

/// `FD_n(L) = UD_n(L)` iff [`fd_eq_ud_condition`] holds.
pub fn is_fd_eq_ud(profile: &LengthProfile, n: u32) -> Result<bool> {
    require_feasible(profile, n)?;
    Ok(fd_eq_ud_condition(profile))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(lengths: &[usize]) -> LengthProfile {
        LengthProfile::from_lengths(lengths).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn pair_counts() {
        assert_eq!(count_pr_pair(2, 3, 2), big(24));
        assert_eq!(count_pr_pair(1, 2, 2), big(4));
        assert_eq!(count_pr_pair(1, 1, 2), big(2));
    }

    #[test]
    fn closed_forms_233() {
        assert_eq!(count_233(2), (big(180), big(120)));
        assert_eq!(count_233(3), (big(6102), big(4968)));
        assert_eq!(count_233(4).0, big(63864));
        for n in 2..8 {
            assert_eq!(
                count_233(n).1,
                count_prefix_codes(&profile(&[2, 3, 3]), n).count
            );
        }
    }

    #[test]
    fn closed_forms_a_then_b() {
        assert_eq!(count_all_a_then_b(2, 2, 1, 2).unwrap(), (big(6), big(4)));
        assert_eq!(count_all_a_then_b(3, 3, 1, 2).unwrap().0, big(30));
        assert_eq!(count_all_a_then_b(2, 3, 1, 2).unwrap().0, big(0));
        assert_eq!(count_all_a_then_b(2, 3, 2, 4).unwrap().0, big(144));
        assert!(count_all_a_then_b(2, 3, 2, 3).is_err());
        // more words of length a than there are such words
        assert_eq!(count_all_a_then_b(2, 4, 1, 2).unwrap(), (big(0), big(0)));
    }

    #[test]
    fn a_then_b_degenerates_to_constant() {
        for (n, m, a) in [(2, 2, 1), (2, 3, 2), (3, 4, 2), (2, 5, 3)] {
            let ud = count_all_a_then_b(n, m, a, a).unwrap().0;
            assert_eq!(ud, count_prefix_codes(&profile(&vec![a; m]), n).count);
        }
    }

    #[test]
    fn bounds() {
        let report = ratio_lower_bound(&profile(&[2, 3, 3]), 2, 2, 3).unwrap();
        assert_eq!(report.lower_bound, ratio(13, 12));
        assert_eq!(report.ratio, Some(ratio(180, 120)));
        assert_eq!(report.satisfied, Some(true));

        let report = ratio_lower_bound(&profile(&[2, 3, 3]), 3, 3, 2).unwrap();
        assert_eq!(report.lower_bound, ratio(109, 108));
        assert_eq!(report.ratio, Some(ratio(6102, 4968)));
        assert_eq!(report.satisfied, Some(true));

        assert!(ratio_lower_bound(&profile(&[2, 2]), 2, 2, 2).is_err());
        assert!(ratio_lower_bound(&profile(&[2, 3, 3]), 2, 2, 4).is_err());
    }

    #[test]
    fn bound_without_closed_form_enumerates() {
        let report = ratio_lower_bound(&profile(&[1, 2, 3]), 2, 1, 3).unwrap();
        assert!(report.ud_count.is_some());
        assert_eq!(report.satisfied, Some(true));
        let report = ratio_lower_bound_with_cap(&profile(&[1, 2, 3]), 2, 1, 3, 10).unwrap();
        assert_eq!(report.ud_count, None);
        assert_eq!(report.satisfied, None);
    }

    #[test]
    fn pr_eq_ud() {
        assert!(is_pr_eq_ud(&profile(&[2, 2, 2]), 2).unwrap());
        assert!(!is_pr_eq_ud(&profile(&[2, 3, 3]), 2).unwrap());
        assert!(is_pr_eq_ud(&profile(&[1, 1, 2]), 2).is_err());
        assert!(is_pr_eq_ud(&profile(&[4]), 2).unwrap());
    }

    #[test]
    fn fd_eq_ud() {
        assert!(is_fd_eq_ud(&profile(&[2, 2, 4]), 2).unwrap());
        assert!(!is_fd_eq_ud(&profile(&[2, 2, 3]), 2).unwrap());
        assert!(is_fd_eq_ud(&profile(&[1, 2]), 2).unwrap());
        assert!(!is_fd_eq_ud(&profile(&[1, 2, 2]), 2).unwrap());
        assert!(!is_fd_eq_ud(&profile(&[1, 2, 4]), 2).unwrap());
        assert!(is_fd_eq_ud(&profile(&[1, 1, 1]), 3).unwrap());
        assert!(is_fd_eq_ud(&profile(&[1, 1, 2]), 2).is_err());
    }
}
