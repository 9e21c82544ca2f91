//! Exhaustive enumeration and brute-force oracles.
//!
//! The universe of a length sequence `(a_1, …, a_m)` over `n` letters is
//! every sequence of words with those lengths, `Π n^{a_i}` codes, including
//! the ones that repeat a word. It is walked in lexicographic order of the
//! concatenated symbols, which is a mixed-radix count; any index range can
//! be decoded directly, so the census splits the universe across threads
//! and sums the per-range tallies.
//!
//! [`two_factorization_search`] and [`bounded_delay_probe`] work on explicit
//! pairs of factorizations and compare the concatenated words letter by
//! letter. They serve as independent checks of
//! [`sardinas_patterson`](crate::decide::sardinas_patterson) and
//! [`delay_analysis`](crate::decide::delay_analysis).

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::census::{closed_form_ud, fd_eq_ud_condition};
use crate::decide::{delay_analysis, is_prefix_code, proper_suffix_set, sardinas_patterson};
use crate::error::{Error, Result};
use crate::kraft::{count_prefix_codes, pow};
use crate::words::{Alphabet, Code, LengthProfile, Word};

/// Largest universe enumerated unless the caller raises the cap.
pub const DEFAULT_UNIVERSE_CAP: u64 = 1_000_000;

/// `Π n^{a_i}`.
pub fn universe_size(lengths: &[usize], n: u32) -> BigUint {
    pow(n, lengths.iter().sum())
}

/// Every code with a given length sequence.
#[derive(Debug, Clone)]
pub struct Universe {
    alphabet: Alphabet,
    lengths: Vec<usize>,
    total: u64,
}

impl Universe {
    /// Codes whose `i`-th word has length `lengths[i]`.
    pub fn for_lengths(lengths: &[usize], alphabet: Alphabet, cap: u64) -> Result<Self> {
        if lengths.is_empty() || lengths.contains(&0) {
            return Err(Error::Argument("code word lengths must be positive".into()));
        }
        let total = universe_size(lengths, alphabet.size() as u32);
        match total.to_u64() {
            Some(t) if t <= cap => Ok(Universe {
                alphabet,
                lengths: lengths.to_vec(),
                total: t,
            }),
            _ => Err(Error::UniverseTooLarge {
                total: total.to_string(),
                cap,
            }),
        }
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// The code at position `index` in enumeration order.
    pub fn code_at(&self, mut index: u64) -> Code {
        let n = self.alphabet.size() as u64;
        let letters: usize = self.lengths.iter().sum();
        let mut symbols = vec![0u8; letters];
        for s in symbols.iter_mut().rev() {
            *s = (index % n) as u8;
            index /= n;
        }
        let mut words = Vec::with_capacity(self.lengths.len());
        let mut start = 0;
        for &len in &self.lengths {
            words.push(Word::new(symbols[start..start + len].to_vec()));
            start += len;
        }
        Code::new(self.alphabet, words).expect("lengths are positive")
    }

    pub fn iter(&self) -> impl Iterator<Item = Code> + '_ {
        self.range(0, self.total)
    }

    pub fn range(&self, start: u64, end: u64) -> impl Iterator<Item = Code> + '_ {
        (start..end.min(self.total)).map(move |i| self.code_at(i))
    }
}

/// The universe of a profile, with its lengths in ascending order.
pub fn enumerate_codes(profile: &LengthProfile, alphabet: Alphabet, cap: u64) -> Result<Universe> {
    Universe::for_lengths(&profile.lengths(), alphabet, cap)
}

/// Which classes a code belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub injective: bool,
    pub prefix: bool,
    pub ud: bool,
    pub finite_delay: bool,
    pub delay: Option<usize>,
}

pub fn classify(c: &Code) -> Classification {
    let injective = c.is_injective();
    let prefix = is_prefix_code(c);
    let ud = sardinas_patterson(c).is_unique();
    let (finite_delay, delay) = match injective.then(|| delay_analysis(c)) {
        Some(Ok(report)) => (report.finite, report.delay),
        _ => (false, None),
    };
    Classification {
        injective,
        prefix,
        ud,
        finite_delay,
        delay,
    }
}

/// Class sizes over some range of a universe.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: u64,
    pub injective: u64,
    pub pr: u64,
    pub fd: u64,
    pub ud: u64,
}

impl Tally {
    pub fn add(&mut self, c: &Classification) {
        self.total += 1;
        self.injective += c.injective as u64;
        self.pr += c.prefix as u64;
        self.fd += c.finite_delay as u64;
        self.ud += c.ud as u64;
    }

    pub fn merge(self, other: Tally) -> Tally {
        Tally {
            total: self.total + other.total,
            injective: self.injective + other.injective,
            pr: self.pr + other.pr,
            fd: self.fd + other.fd,
            ud: self.ud + other.ud,
        }
    }
}

/// Apply `f` to every code of `universe`, split into contiguous ranges over
/// the available cores, and merge the results in range order.
pub fn fold_parallel<T, F, M>(universe: &Universe, init: T, f: F, merge: M) -> T
where
    T: Clone + Send,
    F: Fn(&mut T, &Code) + Sync,
    M: Fn(T, T) -> T,
{
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()) as u64;
    let total = universe.len();
    let chunk = total.div_ceil(workers.max(1)).max(1);
    if workers <= 1 || total < 4096 {
        let mut acc = init;
        for code in universe.iter() {
            f(&mut acc, &code);
        }
        return acc;
    }
    let parts: Vec<T> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..total)
            .step_by(chunk as usize)
            .map(|start| {
                let mut acc = init.clone();
                let f = &f;
                scope.spawn(move || {
                    for code in universe.range(start, start + chunk) {
                        f(&mut acc, &code);
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    parts.into_iter().fold(init, merge)
}

/// Classify every code of a universe.
pub fn tally(universe: &Universe) -> Tally {
    fold_parallel(
        universe,
        Tally::default(),
        |t, c| t.add(&classify(c)),
        Tally::merge,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Formula,
    Enumeration,
    Both,
}

/// A formula disagreeing with enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub quantity: &'static str,
    pub formula: BigUint,
    pub enumeration: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub profile: LengthProfile,
    pub n: u32,
    pub total: BigUint,
    pub pr: BigUint,
    pub fd: Option<BigUint>,
    pub ud: Option<BigUint>,
    pub source: Mode,
    pub discrepancies: Vec<Discrepancy>,
}

struct FormulaCounts {
    pr: BigUint,
    fd: Option<BigUint>,
    ud: Option<BigUint>,
}

fn formula_counts(profile: &LengthProfile, n: u32) -> FormulaCounts {
    let pr = count_prefix_codes(profile, n).count;
    if pr == BigUint::default() {
        // UD_n(L) is empty exactly when PR_n(L) is.
        return FormulaCounts {
            fd: Some(pr.clone()),
            ud: Some(pr.clone()),
            pr,
        };
    }
    let ud = closed_form_ud(profile, n);
    let fd = if profile.is_constant() {
        Some(pr.clone())
    } else if fd_eq_ud_condition(profile) {
        ud.clone()
    } else {
        None
    };
    FormulaCounts { pr, fd, ud }
}

/// Count `PR_n(L)`, `FD_n(L)` and `UD_n(L)` by formula, by enumeration, or
/// both (and compare).
///
/// Formula mode leaves a count absent when no closed form covers it.
pub fn census_with_cap(
    profile: &LengthProfile,
    n: u32,
    mode: Mode,
    cap: u64,
) -> Result<CensusReport> {
    let total = universe_size(&profile.lengths(), n);
    let formula = (mode != Mode::Enumeration).then(|| formula_counts(profile, n));
    let enumerated = match mode {
        Mode::Formula => None,
        _ => {
            let alphabet = Alphabet::new(n as usize)?;
            Some(tally(&enumerate_codes(profile, alphabet, cap)?))
        }
    };

    let report = match (formula, enumerated) {
        (Some(f), None) => CensusReport {
            profile: profile.clone(),
            n,
            total,
            pr: f.pr,
            fd: f.fd,
            ud: f.ud,
            source: Mode::Formula,
            discrepancies: Vec::new(),
        },
        (None, Some(t)) => CensusReport {
            profile: profile.clone(),
            n,
            total,
            pr: t.pr.into(),
            fd: Some(t.fd.into()),
            ud: Some(t.ud.into()),
            source: Mode::Enumeration,
            discrepancies: Vec::new(),
        },
        (Some(f), Some(t)) => {
            let mut discrepancies = Vec::new();
            let mut compare = |quantity, formula: Option<&BigUint>, counted: u64| {
                if let Some(formula) = formula {
                    if *formula != BigUint::from(counted) {
                        discrepancies.push(Discrepancy {
                            quantity,
                            formula: formula.clone(),
                            enumeration: counted.into(),
                        });
                    }
                }
            };
            compare("pr", Some(&f.pr), t.pr);
            compare("fd", f.fd.as_ref(), t.fd);
            compare("ud", f.ud.as_ref(), t.ud);
            CensusReport {
                profile: profile.clone(),
                n,
                total,
                pr: t.pr.into(),
                fd: Some(t.fd.into()),
                ud: Some(t.ud.into()),
                source: Mode::Both,
                discrepancies,
            }
        }
        (None, None) => unreachable!(),
    };
    Ok(report)
}

pub fn census(profile: &LengthProfile, n: u32, mode: Mode) -> Result<CensusReport> {
    census_with_cap(profile, n, mode, DEFAULT_UNIVERSE_CAP)
}

/// A word with two different factorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub word: Word,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Length bound past which a search for ambiguity can stop.
///
/// Two partial factorizations that agree so far differ by a dangling word,
/// a non-empty proper suffix of a code word (the set `S`). A shortest
/// ambiguous word never shows the same dangling word twice, or the segment
/// between the repeats could be cut out. Every step lengthens the leading
/// side by less than the longest word, so the word is at most
/// `(|S| + 1) · max |v_i|` letters long.
pub fn safe_bound(c: &Code) -> usize {
    (proper_suffix_set(c).len() + 1) * c.max_word_len()
}

/// Breadth-first search for a word of at most `length_bound` letters with
/// two distinct factorizations.
///
/// Configurations are pairs of partial factorizations whose concatenations
/// are prefix-comparable; each configuration is visited at most once per
/// dangling difference. With `length_bound >= safe_bound(c)`, `None` proves
/// the code uniquely decodable.
pub fn two_factorization_search(c: &Code, length_bound: usize) -> Option<Ambiguity> {
    let words = c.words();
    if let Some((i, j)) = c.first_duplicate() {
        return Some(Ambiguity {
            word: words[i].clone(),
            first: vec![i],
            second: vec![j],
        });
    }

    struct Config {
        first: Vec<usize>,
        second: Vec<usize>,
        first_word: Word,
        second_word: Word,
    }

    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Config> = VecDeque::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if u.is_proper_prefix_of(v)
                && v.len() <= length_bound
                && seen.insert(v.suffix_from(u.len()))
            {
                queue.push_back(Config {
                    first: vec![i],
                    second: vec![j],
                    first_word: u.clone(),
                    second_word: v.clone(),
                });
            }
        }
    }

    while let Some(cfg) = queue.pop_front() {
        let first_behind = cfg.first_word.len() < cfg.second_word.len();
        for (k, w) in words.iter().enumerate() {
            let mut next = Config {
                first: cfg.first.clone(),
                second: cfg.second.clone(),
                first_word: cfg.first_word.clone(),
                second_word: cfg.second_word.clone(),
            };
            if first_behind {
                next.first.push(k);
                next.first_word.push_word(w);
            } else {
                next.second.push(k);
                next.second_word.push_word(w);
            }
            let (short, long) = if next.first_word.len() <= next.second_word.len() {
                (&next.first_word, &next.second_word)
            } else {
                (&next.second_word, &next.first_word)
            };
            if long.len() > length_bound || !short.is_prefix_of(long) {
                continue;
            }
            if short.len() == long.len() {
                return Some(Ambiguity {
                    word: next.first_word.clone(),
                    first: next.first,
                    second: next.second,
                });
            }
            if seen.insert(long.suffix_from(short.len())) {
                queue.push_back(next);
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeVerdict {
    Finite,
    Infinite,
    /// The bound cut the search short before either outcome was certain.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelayProbe {
    pub verdict: ProbeVerdict,
    pub delay: Option<usize>,
    /// Finite: two factorizations with different first words achieving the
    /// longest agreement. Infinite: the factorizations at the point where a
    /// dangling difference repeated or both sides ended together.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

struct ProbeState {
    best: Option<(usize, Vec<usize>, Vec<usize>)>,
    infinite: Option<(Vec<usize>, Vec<usize>)>,
    truncated: bool,
}

impl ProbeState {
    fn record(&mut self, agreement: usize, first: &[usize], second: &[usize]) {
        if self.best.as_ref().is_none_or(|(b, _, _)| agreement > *b) {
            self.best = Some((agreement, first.to_vec(), second.to_vec()));
        }
    }
}

/// Letters on which `u` and `v` agree.
fn agreement(u: &[u8], v: &[u8]) -> usize {
    u.iter().zip(v).take_while(|(a, b)| a == b).count()
}

#[allow(clippy::too_many_arguments)]
fn probe(
    words: &[Word],
    first: &mut Vec<usize>,
    first_word: &mut Vec<u8>,
    second: &mut Vec<usize>,
    second_word: &mut Vec<u8>,
    path: &mut Vec<Vec<u8>>,
    t_max: usize,
    state: &mut ProbeState,
) {
    if state.infinite.is_some() {
        return;
    }
    let (short, long) = if first_word.len() <= second_word.len() {
        (&*first_word, &*second_word)
    } else {
        (&*second_word, &*first_word)
    };
    // The shorter side may end here; its prefix sharing with the longer
    // side is then its whole length.
    state.record(short.len(), first, second);
    if short.len() == long.len() {
        state.infinite = Some((first.clone(), second.clone()));
        return;
    }
    let dangling = long[short.len()..].to_vec();
    if path.contains(&dangling) {
        state.infinite = Some((first.clone(), second.clone()));
        return;
    }
    if long.len() > t_max {
        state.truncated = true;
        return;
    }
    path.push(dangling);
    let first_behind = first_word.len() < second_word.len();
    for (k, w) in words.iter().enumerate() {
        let (side, side_word, other_word) = if first_behind {
            (&mut *first, &mut *first_word, &*second_word)
        } else {
            (&mut *second, &mut *second_word, &*first_word)
        };
        let old_len = side_word.len();
        side.push(k);
        side_word.extend_from_slice(w.symbols());
        let shared = agreement(side_word, other_word);
        let comparable = shared == side_word.len().min(other_word.len());
        if comparable {
            probe(
                words,
                first,
                first_word,
                second,
                second_word,
                path,
                t_max,
                state,
            );
        } else {
            state.record(shared, first, second);
        }
        let (side, side_word) = if first_behind {
            (&mut *first, &mut *first_word)
        } else {
            (&mut *second, &mut *second_word)
        };
        side.pop();
        side_word.truncate(old_len);
        if state.infinite.is_some() {
            break;
        }
    }
    path.pop();
}

/// Brute-force deciphering delay.
///
/// Explores every pair of factorizations with different first words while
/// they agree letter by letter, without merging configurations. The delay is
/// one more than the longest agreement found. A dangling difference repeating
/// along one exploration path, or both sides ending on the same letter, means
/// the agreement can go on forever. With `t_max >= safe_bound(c)` the verdict
/// is never `Unknown`.
pub fn bounded_delay_probe(c: &Code, t_max: usize) -> Result<DelayProbe> {
    if let Some((i, j)) = c.first_duplicate() {
        return Err(Error::DuplicateWords(i, j));
    }
    let words = c.words();
    let mut state = ProbeState {
        best: None,
        infinite: None,
        truncated: false,
    };
    'pairs: for i in 0..words.len() {
        for j in i + 1..words.len() {
            let (u, v) = (words[i].symbols(), words[j].symbols());
            let shared = agreement(u, v);
            if shared < u.len().min(v.len()) {
                state.record(shared, &[i], &[j]);
                continue;
            }
            probe(
                words,
                &mut vec![i],
                &mut u.to_vec(),
                &mut vec![j],
                &mut v.to_vec(),
                &mut Vec::new(),
                t_max,
                &mut state,
            );
            if state.infinite.is_some() {
                break 'pairs;
            }
        }
    }

    Ok(if let Some(witness) = state.infinite {
        DelayProbe {
            verdict: ProbeVerdict::Infinite,
            delay: None,
            witness: Some(witness),
        }
    } else if state.truncated {
        DelayProbe {
            verdict: ProbeVerdict::Unknown,
            delay: None,
            witness: None,
        }
    } else {
        let (delay, witness) = match state.best {
            Some((best, first, second)) => (best + 1, Some((first, second))),
            None => (0, None),
        };
        DelayProbe {
            verdict: ProbeVerdict::Finite,
            delay: Some(delay),
            witness,
        }
    })
}

/// Does the infinite word starting with `prefix` admit, up to `prefix.len()`
/// letters, a factorization beginning with word `first`? Partial last words
/// are allowed.
pub fn covers_prefix(c: &Code, first: usize, prefix: &Word) -> bool {
    let target = prefix.symbols();
    let w = c.word(first).symbols();
    let k = w.len().min(target.len());
    if w[..k] != target[..k] {
        return false;
    }
    // positions reachable by whole words; a word overhanging the end counts
    let mut reachable: BTreeSet<usize> = BTreeSet::new();
    let mut stack = vec![w.len()];
    while let Some(pos) = stack.pop() {
        if pos >= target.len() {
            return true;
        }
        if !reachable.insert(pos) {
            continue;
        }
        for v in c.words() {
            let v = v.symbols();
            let k = v.len().min(target.len() - pos);
            if v[..k] == target[pos..pos + k] {
                stack.push(pos + v.len());
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, words: &[&str]) -> Code {
        Code::from_glyphs(n, words).unwrap()
    }

    fn profile(lengths: &[usize]) -> LengthProfile {
        LengthProfile::from_lengths(lengths).unwrap()
    }

    fn alphabet(n: usize) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    #[test]
    fn enumerates_small_universes() {
        let u = enumerate_codes(&profile(&[1, 1]), alphabet(2), DEFAULT_UNIVERSE_CAP).unwrap();
        let codes: Vec<Code> = u.iter().collect();
        assert_eq!(
            codes,
            vec![
                code(2, &["0", "0"]),
                code(2, &["0", "1"]),
                code(2, &["1", "0"]),
                code(2, &["1", "1"])
            ]
        );
        assert_eq!(
            enumerate_codes(&profile(&[2, 3, 3]), alphabet(2), 1000)
                .unwrap()
                .len(),
            256
        );
        assert_eq!(
            enumerate_codes(&profile(&[2, 3, 3]), alphabet(3), 10_000)
                .unwrap()
                .len(),
            6561
        );
    }

    #[test]
    fn enumeration_is_distinct_and_ordered() {
        let u = Universe::for_lengths(&[2, 1, 2], alphabet(3), 1000).unwrap();
        let codes: Vec<Code> = u.iter().collect();
        let mut symbols: Vec<Vec<u8>> = codes
            .iter()
            .map(|c| c.concat(&[0, 1, 2]).symbols().to_vec())
            .collect();
        assert!(symbols.windows(2).all(|w| w[0] < w[1]));
        symbols.dedup();
        assert_eq!(symbols.len(), 243);
        assert!(codes.iter().all(|c| c.lengths() == [2, 1, 2]));
    }

    #[test]
    fn refuses_large_universes() {
        let err = enumerate_codes(&profile(&[10, 11]), alphabet(2), 1000).unwrap_err();
        assert_eq!(
            err,
            Error::UniverseTooLarge {
                total: "2097152".into(),
                cap: 1000
            }
        );
    }

    #[test]
    fn classifications() {
        let c = classify(&code(2, &["10", "100", "000"]));
        assert!(c.injective && !c.prefix && c.ud && !c.finite_delay);
        let c = classify(&code(2, &["01", "001", "000"]));
        assert!(c.injective && c.prefix && c.ud && c.finite_delay);
        assert!(c.delay.unwrap() <= 3);
        let c = classify(&code(2, &["0", "0"]));
        assert!(!c.injective && !c.ud && !c.finite_delay);
    }

    #[test]
    fn censuses() {
        let r = census(&profile(&[2, 3, 3]), 2, Mode::Both).unwrap();
        assert_eq!((r.pr, r.ud.unwrap()), (120u32.into(), 180u32.into()));
        assert!(r.discrepancies.is_empty());
        assert!(r.fd.is_some());

        let r = census(&profile(&[1, 2]), 2, Mode::Enumeration).unwrap();
        assert_eq!(
            (r.pr, r.fd.unwrap(), r.ud.unwrap()),
            (4u32.into(), 6u32.into(), 6u32.into())
        );

        let r = census(&profile(&[2, 2]), 2, Mode::Formula).unwrap();
        assert_eq!(r.pr, 12u32.into());
        assert_eq!(r.fd, Some(12u32.into()));
        assert_eq!(r.ud, Some(12u32.into()));

        let r = census(&profile(&[1, 2, 3]), 2, Mode::Formula).unwrap();
        assert_eq!(r.ud, None);
        assert_eq!(r.fd, None);
    }

    #[test]
    fn search_finds_ambiguity() {
        let found = two_factorization_search(&code(2, &["0", "01", "10"]), 6).unwrap();
        assert_eq!(found.word, Word::new(vec![0, 1, 0]));
        assert_eq!(found.first, vec![0, 2]);
        assert_eq!(found.second, vec![1, 0]);
        let c = code(2, &["10", "100", "000"]);
        assert_eq!(two_factorization_search(&c, safe_bound(&c)), None);
        let c = code(2, &["0", "10", "11"]);
        assert_eq!(two_factorization_search(&c, safe_bound(&c)), None);
    }

    #[test]
    fn search_respects_bound() {
        // 01·0 = 0·10 needs three letters
        assert_eq!(
            two_factorization_search(&code(2, &["0", "01", "10"]), 2),
            None
        );
    }

    #[test]
    fn probe_values() {
        let p = bounded_delay_probe(&code(2, &["0", "10", "11"]), 10).unwrap();
        assert_eq!((p.verdict, p.delay), (ProbeVerdict::Finite, Some(2)));

        let c = code(2, &["10", "100", "000"]);
        let p = bounded_delay_probe(&c, safe_bound(&c)).unwrap();
        assert_eq!(p.verdict, ProbeVerdict::Infinite);
        let (first, second) = p.witness.unwrap();
        assert_eq!((first[0], second[0]), (0, 1));

        let p = bounded_delay_probe(&code(2, &["10"]), 5).unwrap();
        assert_eq!((p.verdict, p.delay), (ProbeVerdict::Finite, Some(0)));

        assert!(bounded_delay_probe(&code(2, &["1", "1"]), 5).is_err());
    }

    #[test]
    fn probe_reports_unknown_below_bound() {
        // 0·110 and 01·110 agree on four letters' worth of lookahead
        let c = code(2, &["0", "01", "110"]);
        assert_eq!(
            bounded_delay_probe(&c, 1).unwrap().verdict,
            ProbeVerdict::Unknown
        );
        assert_eq!(
            bounded_delay_probe(&c, safe_bound(&c)).unwrap().delay,
            Some(4)
        );
    }

    #[test]
    fn prefix_coverage() {
        let c = code(2, &["10", "100", "000"]);
        let u = Word::new(vec![1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert!(covers_prefix(&c, 0, &u));
        assert!(covers_prefix(&c, 1, &u));
        assert!(!covers_prefix(&c, 2, &u));
    }
}
