//! Kraft–McMillan feasibility, Kraft's construction procedure and exact
//! counts of prefix codes.
//!
//! Every count is an arbitrary-precision integer and every Kraft sum an
//! exact rational.
//!
//! Constructions list code words by ascending length; within one length,
//! forced words come first (in the order the construction names them) and
//! the remaining slots are filled with the lexicographically smallest
//! eligible words. Use [`Code::arrange_to`] to place them in a particular
//! length order.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::census::fd_eq_ud_condition;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Code, LengthProfile, Word};

pub(crate) fn pow(n: u32, exp: usize) -> BigUint {
    BigUint::from(n).pow(exp as u32)
}

/// `Σ r_ν · n^{-ν}` over the profile.
pub fn kraft_sum(profile: &LengthProfile, n: u32) -> BigRational {
    let max = profile.max_len();
    let numer: BigUint = profile
        .values()
        .iter()
        .zip(profile.multiplicities())
        .map(|(&v, &r)| BigUint::from(r) * pow(n, max - v))
        .sum();
    BigRational::new(BigInt::from(numer), BigInt::from(pow(n, max)))
}

/// A uniquely decodable (equivalently, a prefix) code with these lengths
/// exists iff the Kraft sum is at most one.
pub fn is_feasible(profile: &LengthProfile, n: u32) -> bool {
    kraft_sum(profile, n) <= BigRational::one()
}

pub(crate) fn require_feasible(profile: &LengthProfile, n: u32) -> Result<()> {
    let sum = kraft_sum(profile, n);
    if sum > BigRational::one() {
        Err(Error::Infeasible(sum))
    } else {
        Ok(())
    }
}

/// Kraft's procedure, counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KraftTrace {
    pub profile: LengthProfile,
    /// `N_i`: words of length `ν_i` with no shorter code word as a prefix.
    /// Entries after the first shortfall may be negative.
    pub available: Vec<BigInt>,
    /// `|PR_n(L)|`.
    pub count: BigUint,
}

fn factorial(r: usize) -> BigUint {
    (1..=r).map(BigUint::from).product()
}

/// `N_1 = n^{ν_1}`, `N_{i+1} = n^{ν_{i+1}-ν_i}(N_i - r_{ν_i})` for a profile.
pub(crate) fn available_words(profile: &LengthProfile, n: u32) -> Vec<BigInt> {
    let values = profile.values();
    let mut available = Vec::with_capacity(values.len());
    let mut current = BigInt::from(pow(n, values[0]));
    for i in 0..values.len() {
        available.push(current.clone());
        if i + 1 < values.len() {
            current = BigInt::from(pow(n, values[i + 1] - values[i]))
                * (current - profile.multiplicities()[i]);
        }
    }
    available
}

/// `|PR_n(L)| = Π C(N_i, r_{ν_i}) · r_{ν_i}!`, zero for infeasible profiles.
pub fn count_prefix_codes(profile: &LengthProfile, n: u32) -> KraftTrace {
    let available = available_words(profile, n);
    let mut count = BigUint::one();
    for (avail, &r) in available.iter().zip(profile.multiplicities()) {
        if avail < &BigInt::from(r) {
            count = BigUint::zero();
            break;
        }
        let avail = avail.to_biguint().expect("non-negative");
        count *= binomial(avail, BigUint::from(r)) * factorial(r);
    }
    KraftTrace {
        profile: profile.clone(),
        available,
        count,
    }
}

/// The `count` lexicographically smallest words of length `len` that have no
/// word of `blocked` as a prefix and are not in `excluded`.
fn smallest_eligible(
    alphabet: Alphabet,
    len: usize,
    blocked: &HashSet<Vec<u8>>,
    excluded: &HashSet<Vec<u8>>,
    count: usize,
) -> Vec<Word> {
    fn walk(
        n: u8,
        len: usize,
        current: &mut Vec<u8>,
        blocked: &HashSet<Vec<u8>>,
        excluded: &HashSet<Vec<u8>>,
        count: usize,
        out: &mut Vec<Word>,
    ) {
        for s in 0..n {
            if out.len() == count {
                return;
            }
            current.push(s);
            if !blocked.contains(current.as_slice()) {
                if current.len() == len {
                    if !excluded.contains(current.as_slice()) {
                        out.push(Word::new(current.clone()));
                    }
                } else {
                    walk(n, len, current, blocked, excluded, count, out);
                }
            }
            current.pop();
        }
    }
    let mut out = Vec::with_capacity(count);
    if count > 0 {
        walk(
            alphabet.size() as u8,
            len,
            &mut Vec::with_capacity(len),
            blocked,
            excluded,
            count,
            &mut out,
        );
    }
    out
}

/// Words forced into, and excluded from, the code at one length.
#[derive(Default)]
struct Stage {
    forced: Vec<Word>,
    excluded: HashSet<Vec<u8>>,
}

/// Kraft's procedure: pick the words of each length in ascending order of
/// length, never extending an earlier code word.
fn staged_construction(
    profile: &LengthProfile,
    alphabet: Alphabet,
    mut stage: impl FnMut(usize) -> Stage,
) -> Result<Code> {
    let mut blocked: HashSet<Vec<u8>> = HashSet::new();
    let mut words = Vec::with_capacity(profile.total());
    for (&len, &r) in profile.values().iter().zip(profile.multiplicities()) {
        let Stage {
            forced,
            mut excluded,
        } = stage(len);
        if forced.len() > r {
            return Err(Error::Construction {
                length: len,
                message: format!("{} forced words but only {r} slots", forced.len()),
            });
        }
        for w in &forced {
            if (1..=len).any(|k| blocked.contains(&w.symbols()[..k])) {
                return Err(Error::Construction {
                    length: len,
                    message: format!("forced word {w} extends an earlier code word"),
                });
            }
            blocked.insert(w.symbols().to_vec());
            excluded.insert(w.symbols().to_vec());
        }
        let fill = r - forced.len();
        let fillers = smallest_eligible(alphabet, len, &blocked, &excluded, fill);
        if fillers.len() < fill {
            return Err(Error::Construction {
                length: len,
                message: format!("needed {fill} more words, only {} eligible", fillers.len()),
            });
        }
        for w in forced.into_iter().chain(fillers) {
            blocked.insert(w.symbols().to_vec());
            words.push(w);
        }
    }
    Code::new(alphabet, words)
}

/// Kraft's procedure choosing the lexicographically smallest eligible words.
pub fn canonical_prefix_code(profile: &LengthProfile, alphabet: Alphabet) -> Result<Code> {
    require_feasible(profile, alphabet.size() as u32)?;
    staged_construction(profile, alphabet, |_| Stage::default())
}

/// The anchor word `0^{len-1}1`.
pub fn anchor_word(len: usize) -> Word {
    let mut symbols = vec![0; len];
    symbols[len - 1] = 1;
    Word::new(symbols)
}

/// Prefix codes with profile `L` containing both anchors `0^{a-1}1` and
/// `0^{b-1}1`, counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredFamily {
    pub profile: LengthProfile,
    pub a: usize,
    pub b: usize,
    /// Positions of `a` and `b` among the distinct values.
    pub index_a: usize,
    pub index_b: usize,
    pub anchor_a: Word,
    pub anchor_b: Word,
    pub count: BigUint,
}

fn anchor_indices(profile: &LengthProfile, a: usize, b: usize) -> Result<(usize, usize)> {
    if a >= b {
        return Err(Error::Argument(format!(
            "anchored lengths need a < b, got a={a}, b={b}"
        )));
    }
    match (profile.index_of(a), profile.index_of(b)) {
        (Some(i), Some(j)) => Ok((i, j)),
        _ => Err(Error::Argument(format!(
            "anchored lengths {a} and {b} must both occur in {profile}"
        ))),
    }
}

/// `|PR_{n,a,b}(L)| = r_a r_b / (n^b (N_{i_a} - 1)) · |PR_n(L)|`.
///
/// A prefix code containing `0^{b-1}1` cannot contain any `0^ν` with
/// `ν < b`, so this counts every prefix code holding both anchors.
pub fn count_anchored_prefix_codes(
    profile: &LengthProfile,
    n: u32,
    a: usize,
    b: usize,
) -> Result<AnchoredFamily> {
    let (index_a, index_b) = anchor_indices(profile, a, b)?;
    let trace = count_prefix_codes(profile, n);
    let count = if trace.count.is_zero() {
        BigUint::zero()
    } else {
        let numer = BigUint::from(profile.multiplicity(a) * profile.multiplicity(b)) * &trace.count;
        let avail_a = trace.available[index_a].to_biguint().expect("feasible");
        let denom = pow(n, b) * (avail_a - 1u32);
        let (q, rem) = numer.div_rem(&denom);
        debug_assert!(rem.is_zero(), "anchored count is an integer");
        q
    };
    Ok(AnchoredFamily {
        profile: profile.clone(),
        a,
        b,
        index_a,
        index_b,
        anchor_a: anchor_word(a),
        anchor_b: anchor_word(b),
        count,
    })
}

/// One member of `PR_{n,a,b}(L)`.
///
/// Zero words `0^ν` are avoided below length `b`, or below `zero_word_length`
/// when it is given, in which case `0^{zero_word_length}` is forced in as a
/// code word. Without a forced zero word, zero words of length `>= b` stay
/// eligible.
pub fn anchored_prefix_code(
    profile: &LengthProfile,
    alphabet: Alphabet,
    a: usize,
    b: usize,
    zero_word_length: Option<usize>,
) -> Result<Code> {
    anchor_indices(profile, a, b)?;
    if let Some(z) = zero_word_length {
        if z < b || profile.index_of(z).is_none() {
            return Err(Error::Argument(format!(
                "zero word length {z} must be a value of {profile} not below b={b}"
            )));
        }
    }
    require_feasible(profile, alphabet.size() as u32)?;
    let avoid_below = zero_word_length.unwrap_or(b);
    staged_construction(profile, alphabet, |len| {
        let mut stage = Stage::default();
        if len == a {
            stage.forced.push(anchor_word(a));
        }
        if len == b {
            stage.forced.push(anchor_word(b));
        }
        if Some(len) == zero_word_length {
            stage.forced.push(Word::repeat(0, len));
        }
        if len < avoid_below {
            stage.excluded.insert(vec![0; len]);
        }
        stage
    })
}

fn two_smallest_values(profile: &LengthProfile) -> Result<(usize, usize)> {
    match profile.values() {
        [a, b, ..] => Ok((*a, *b)),
        _ => Err(Error::Argument(format!(
            "{profile} is constant: every uniquely decodable code with constant lengths is a prefix code"
        ))),
    }
}

/// A uniquely decodable code with profile `L` that is not a prefix code: the
/// reverse of an anchored prefix code on the two smallest values.
pub fn ud_nonprefix_witness(profile: &LengthProfile, alphabet: Alphabet) -> Result<Code> {
    let (a, b) = two_smallest_values(profile)?;
    Ok(anchored_prefix_code(profile, alphabet, a, b, None)?.reversed())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessCase {
    /// More than one word has the second smallest length.
    RbMany,
    /// One word of the second smallest length, at least three distinct lengths.
    ThreeValues,
    /// `L = (a,…,a,b)` with `a ∤ b`.
    TwoValues,
}

impl WitnessCase {
    pub fn name(self) -> &'static str {
        match self {
            WitnessCase::RbMany => "rb-many",
            WitnessCase::ThreeValues => "three-values",
            WitnessCase::TwoValues => "two-values",
        }
    }
}

/// Parameters of an infinite-delay construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteDelayConstruction {
    pub case: WitnessCase,
    pub a: usize,
    pub b: usize,
    /// `(b - a) mod a`, in `1..a` (two-values case only).
    pub eta: Option<usize>,
    /// `(b - a) div a` (two-values case only).
    pub q: Option<usize>,
}

/// A uniquely decodable code with profile `L` and infinite delay.
///
/// Fails when `L` has length at most two or is of the form `(a,…,a,b)` with
/// `a | b`: then every uniquely decodable code has finite delay.
pub fn infinite_delay_witness(
    profile: &LengthProfile,
    alphabet: Alphabet,
) -> Result<(Code, InfiniteDelayConstruction)> {
    let n = alphabet.size() as u32;
    if fd_eq_ud_condition(profile) {
        return Err(Error::Argument(format!(
            "{profile} has length at most 2 or is (a,…,a,b) with a | b \
             (after reordering); every uniquely decodable code with these lengths has finite delay"
        )));
    }
    require_feasible(profile, n)?;
    let (a, b) = two_smallest_values(profile)?;
    let rb = profile.multiplicity(b);
    if rb > 1 {
        let code = anchored_prefix_code(profile, alphabet, a, b, Some(b))?.reversed();
        let construction = InfiniteDelayConstruction {
            case: WitnessCase::RbMany,
            a,
            b,
            eta: None,
            q: None,
        };
        return Ok((code, construction));
    }
    if profile.distinct() >= 3 {
        let zero = profile.values()[2];
        let code = anchored_prefix_code(profile, alphabet, a, b, Some(zero))?.reversed();
        let construction = InfiniteDelayConstruction {
            case: WitnessCase::ThreeValues,
            a,
            b,
            eta: None,
            q: None,
        };
        return Ok((code, construction));
    }

    // L = (a,…,a,b) with a ∤ b, hence a >= 2 and 0 < eta < a.
    let (q, eta) = (b - a).div_rem(&a);
    let ra = profile.multiplicity(a);
    let slots = pow(n, a);
    assert!(
        ra >= 2 && BigUint::from(ra) < slots,
        "Kraft inequality leaves room for {ra} words of length {a}"
    );
    let ones = Word::repeat(1, a);
    let zeros = Word::repeat(0, a);
    let mut forbidden_symbols = vec![1; a - eta];
    forbidden_symbols.extend(std::iter::repeat_n(0, eta));
    let long = ones.concat(&Word::repeat(0, b - a));

    let mut excluded: HashSet<Vec<u8>> = HashSet::new();
    for w in [&ones, &zeros] {
        excluded.insert(w.symbols().to_vec());
    }
    excluded.insert(forbidden_symbols);
    let fillers = smallest_eligible(alphabet, a, &HashSet::new(), &excluded, ra - 2);
    debug_assert_eq!(fillers.len(), ra - 2);

    let mut words = vec![ones, zeros];
    words.extend(fillers);
    words.push(long);
    let code = Code::new(alphabet, words)?;
    let construction = InfiniteDelayConstruction {
        case: WitnessCase::TwoValues,
        a,
        b,
        eta: Some(eta),
        q: Some(q),
    };
    Ok((code, construction))
}
