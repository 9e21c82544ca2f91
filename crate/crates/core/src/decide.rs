//! Decision procedures on a single code.
//!
//! * [`is_prefix_code`]: no word is an initial segment of another.
//! * [`sardinas_patterson`]: unique decodability via the dangling-suffix
//!   sets `D_0, D_1, …`.
//! * [`factorize`]: the unique factorization of a word over a UD code.
//! * [`ambiguity_graph`] and [`delay_analysis`]: finite versus infinite
//!   deciphering delay, and the exact delay when it is finite.
//!
//! Word positions are 0-based throughout.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::words::{Code, Word};

/// True iff no word of `c` is a prefix of a word at another position.
///
/// Repeated words fail this, since a word is a prefix of itself.
pub fn is_prefix_code(c: &Code) -> bool {
    let words = c.words();
    words.iter().enumerate().all(|(i, u)| {
        words
            .iter()
            .enumerate()
            .all(|(j, v)| i == j || !u.is_prefix_of(v))
    })
}

/// The set `S` of non-empty proper suffixes of the code words.
pub fn proper_suffix_set(c: &Code) -> BTreeSet<Word> {
    c.words().iter().flat_map(Word::proper_suffixes).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Unique,
    NotUnique,
}

/// How the sequence of rounds stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The last recorded round is empty.
    EmptySet,
    /// The last recorded round equals round `repeats`.
    Cycle { repeats: usize },
}

/// A full Sardinas–Patterson run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpTrace {
    /// `rounds[0]` is the set of code words; every round up to termination
    /// is recorded, including the terminating one.
    pub rounds: Vec<BTreeSet<Word>>,
    pub verdict: Verdict,
    /// First round `i >= 1` that meets `D_0`, with the smallest shared word.
    pub violation: Option<(usize, Word)>,
    pub termination: Termination,
    /// Positions of the first repeated word, if the code is not injective.
    pub duplicate: Option<(usize, usize)>,
}

impl SpTrace {
    pub fn is_unique(&self) -> bool {
        self.verdict == Verdict::Unique
    }
}

fn next_round(code_words: &BTreeSet<Word>, previous: &BTreeSet<Word>) -> BTreeSet<Word> {
    let mut next = BTreeSet::new();
    for x in previous {
        for c in code_words {
            // x·w = c
            if x.is_proper_prefix_of(c) {
                next.insert(c.suffix_from(x.len()));
            }
            // c·w = x
            if c.is_proper_prefix_of(x) {
                next.insert(x.suffix_from(c.len()));
            }
        }
    }
    next
}

/// Run the Sardinas–Patterson test.
///
/// Rounds are iterated until one is empty or repeats an earlier round. All
/// rounds after the first are sets of proper suffixes of code words, so a
/// repeat must occur within `2^|S|` rounds.
pub fn sardinas_patterson(c: &Code) -> SpTrace {
    let code_words: BTreeSet<Word> = c.words().iter().cloned().collect();
    let mut rounds = vec![code_words.clone()];
    let mut seen: HashMap<BTreeSet<Word>, usize> = HashMap::new();
    seen.insert(code_words.clone(), 0);
    let mut violation = None;

    let termination = loop {
        let next = next_round(&code_words, rounds.last().unwrap());
        let index = rounds.len();
        if violation.is_none() {
            if let Some(w) = next.intersection(&code_words).next() {
                violation = Some((index, w.clone()));
            }
        }
        let empty = next.is_empty();
        let repeated = seen.get(&next).copied();
        seen.entry(next.clone()).or_insert(index);
        rounds.push(next);
        if empty {
            break Termination::EmptySet;
        }
        if let Some(j) = repeated {
            break Termination::Cycle { repeats: j };
        }
    };

    let duplicate = c.first_duplicate();
    let verdict = if duplicate.is_none() && violation.is_none() {
        Verdict::Unique
    } else {
        Verdict::NotUnique
    };
    SpTrace {
        rounds,
        verdict,
        violation,
        termination,
        duplicate,
    }
}

pub fn is_uniquely_decodable(c: &Code) -> bool {
    sardinas_patterson(c).is_unique()
}

/// The factorization of `u` into code words, as word positions.
///
/// Returns `Ok(None)` when `u` is not a concatenation of code words, and an
/// error when `c` is not uniquely decodable.
pub fn factorize(c: &Code, u: &Word) -> Result<Option<Vec<usize>>> {
    if !is_uniquely_decodable(c) {
        return Err(Error::NotUniquelyDecodable);
    }
    let symbols = u.symbols();
    // last[k]: the word ending a factorization of the first k letters.
    let mut last: Vec<Option<usize>> = vec![None; symbols.len() + 1];
    let mut reachable = vec![false; symbols.len() + 1];
    reachable[0] = true;
    for k in 0..symbols.len() {
        if !reachable[k] {
            continue;
        }
        for (i, w) in c.words().iter().enumerate() {
            let end = k + w.len();
            if end <= symbols.len() && !reachable[end] && symbols[k..end] == *w.symbols() {
                reachable[end] = true;
                last[end] = Some(i);
            }
        }
    }
    if !reachable[symbols.len()] {
        return Ok(None);
    }
    let mut indices = Vec::new();
    let mut k = symbols.len();
    while k > 0 {
        let i = last[k].unwrap();
        indices.push(i);
        k -= c.word(i).len();
    }
    indices.reverse();
    Ok(Some(indices))
}

/// Which of the two partial factorizations currently covers more letters.
///
/// `First` is the factorization that began with the shorter initial word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Leader {
    First,
    Second,
}

impl Leader {
    fn swapped(self) -> Leader {
        match self {
            Leader::First => Leader::Second,
            Leader::Second => Leader::First,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DanglingState {
    /// Letters the leading factorization covers beyond the trailing one.
    pub dangling: Word,
    pub leader: Leader,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    State(usize),
    /// The trailing side consumed exactly the dangling word: both sides end
    /// at the same letter.
    CatchUp,
}

/// The trailing side appends code word `word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub from: usize,
    pub word: usize,
    pub target: Target,
    /// Letters added to the common prefix of the two sides. These are the
    /// first `advance` letters of the source state's dangling word.
    pub advance: usize,
}

/// Two distinct first words, `shorter` a proper prefix of `longer`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialPair {
    pub shorter: usize,
    pub longer: usize,
    pub state: usize,
}

/// States reachable while two factorizations with different first words
/// keep agreeing letter by letter.
///
/// States are numbered in breadth-first discovery order, so following
/// `parent` links from any state gives a shortest path from an initial pair.
#[derive(Debug, Clone)]
pub struct AmbiguityGraph {
    pub states: Vec<DanglingState>,
    pub transitions: Vec<Transition>,
    pub initial: Vec<InitialPair>,
    /// Outgoing transition indices per state, in code-word order.
    pub outgoing: Vec<Vec<usize>>,
    parent: Vec<Parent>,
}

#[derive(Debug, Clone, Copy)]
enum Parent {
    Initial(usize),
    Transition(usize),
}

fn require_distinct_words(c: &Code) -> Result<()> {
    match c.first_duplicate() {
        Some((i, j)) => Err(Error::DuplicateWords(i, j)),
        None => Ok(()),
    }
}

pub fn ambiguity_graph(c: &Code) -> Result<AmbiguityGraph> {
    require_distinct_words(c)?;
    let words = c.words();
    let mut index: HashMap<DanglingState, usize> = HashMap::new();
    let mut graph = AmbiguityGraph {
        states: Vec::new(),
        transitions: Vec::new(),
        initial: Vec::new(),
        outgoing: Vec::new(),
        parent: Vec::new(),
    };
    let mut queue = VecDeque::new();

    let mut intern = |graph: &mut AmbiguityGraph,
                      queue: &mut VecDeque<usize>,
                      state: DanglingState,
                      parent: Parent| {
        *index.entry(state.clone()).or_insert_with(|| {
            let id = graph.states.len();
            graph.states.push(state);
            graph.outgoing.push(Vec::new());
            graph.parent.push(parent);
            queue.push_back(id);
            id
        })
    };

    for (i, v) in words.iter().enumerate() {
        for (j, w) in words.iter().enumerate() {
            if v.is_proper_prefix_of(w) {
                let state = DanglingState {
                    dangling: w.suffix_from(v.len()),
                    leader: Leader::Second,
                };
                let pair = graph.initial.len();
                let id = intern(&mut graph, &mut queue, state, Parent::Initial(pair));
                graph.initial.push(InitialPair {
                    shorter: i,
                    longer: j,
                    state: id,
                });
            }
        }
    }

    while let Some(from) = queue.pop_front() {
        let DanglingState { dangling, leader } = graph.states[from].clone();
        for (k, w) in words.iter().enumerate() {
            let (target, advance) = if dangling == *w {
                (Target::CatchUp, dangling.len())
            } else if dangling.is_proper_prefix_of(w) {
                let next = DanglingState {
                    dangling: w.suffix_from(dangling.len()),
                    leader: leader.swapped(),
                };
                let t = graph.transitions.len();
                (
                    Target::State(intern(&mut graph, &mut queue, next, Parent::Transition(t))),
                    dangling.len(),
                )
            } else if w.is_proper_prefix_of(&dangling) {
                let next = DanglingState {
                    dangling: dangling.suffix_from(w.len()),
                    leader,
                };
                let t = graph.transitions.len();
                (
                    Target::State(intern(&mut graph, &mut queue, next, Parent::Transition(t))),
                    w.len(),
                )
            } else {
                continue;
            };
            graph.outgoing[from].push(graph.transitions.len());
            graph.transitions.push(Transition {
                from,
                word: k,
                target,
                advance,
            });
        }
    }
    Ok(graph)
}

impl AmbiguityGraph {
    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn has_catch_up(&self) -> bool {
        self.transitions.iter().any(|t| t.target == Target::CatchUp)
    }

    fn successors(&self, s: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outgoing[s]
            .iter()
            .filter_map(|&t| match self.transitions[t].target {
                Target::State(to) => Some((t, to)),
                Target::CatchUp => None,
            })
    }

    /// Shortest cycle through `s`, as transition indices, if any.
    fn shortest_cycle_through(&self, s: usize) -> Option<Vec<usize>> {
        let mut via: Vec<Option<usize>> = vec![None; self.states.len()];
        let mut queue = VecDeque::new();
        for (t, to) in self.successors(s) {
            if to == s {
                return Some(vec![t]);
            }
            if via[to].is_none() {
                via[to] = Some(t);
                queue.push_back(to);
            }
        }
        while let Some(x) = queue.pop_front() {
            for (t, to) in self.successors(x) {
                if to == s {
                    let mut path = vec![t];
                    let mut cur = x;
                    while cur != s {
                        let back = via[cur].unwrap();
                        path.push(back);
                        cur = self.transitions[back].from;
                    }
                    path.reverse();
                    return Some(path);
                }
                if to != s && via[to].is_none() {
                    via[to] = Some(t);
                    queue.push_back(to);
                }
            }
        }
        None
    }

    /// Initial pair and transitions along the breadth-first tree path to `s`.
    fn path_to(&self, s: usize) -> (usize, Vec<usize>) {
        let mut path = Vec::new();
        let mut cur = s;
        loop {
            match self.parent[cur] {
                Parent::Initial(pair) => {
                    path.reverse();
                    return (pair, path);
                }
                Parent::Transition(t) => {
                    path.push(t);
                    cur = self.transitions[t].from;
                }
            }
        }
    }

    fn advance_letters(&self, t: usize) -> Word {
        let tr = &self.transitions[t];
        self.states[tr.from].dangling.prefix(tr.advance)
    }
}

/// Why a code has infinite delay.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// The two factorizations agree forever along a cycle of the graph.
    Cycle,
    /// The two factorizations end together: the code is not uniquely
    /// decodable, and the ambiguous word is repeated forever.
    CatchUp,
}

/// An infinite word `preamble · period^ω` with two factorizations whose
/// first code words are `first_words.0` and `first_words.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteWitness {
    pub preamble: Word,
    pub period: Word,
    pub first_words: (usize, usize),
    pub kind: WitnessKind,
}

impl InfiniteWitness {
    /// The first `len` letters of the infinite word.
    pub fn prefix(&self, len: usize) -> Word {
        let mut symbols: Vec<u8> = self.preamble.symbols().iter().copied().take(len).collect();
        let period = self.period.symbols();
        while symbols.len() < len {
            let k = (symbols.len() - self.preamble.len()) % period.len();
            symbols.push(period[k]);
        }
        Word::new(symbols)
    }

    /// Shortest preamble and primitive period describing the same word.
    pub fn normalized(&self) -> (Word, Word) {
        let mut period = self.period.primitive_root().symbols().to_vec();
        let mut preamble = self.preamble.symbols().to_vec();
        while let (Some(&p), Some(&q)) = (preamble.last(), period.last()) {
            if p != q {
                break;
            }
            preamble.pop();
            period.rotate_right(1);
        }
        (Word::new(preamble), Word::new(period))
    }

    /// Rendered as `preamble(period)^∞`, e.g. `1(0)^∞`.
    pub fn render(&self) -> String {
        let preamble = if self.preamble.is_empty() {
            String::new()
        } else {
            self.preamble.to_string()
        };
        format!("{preamble}({})^∞", self.period)
    }
}

/// Outcome of the deciphering-delay analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelayReport {
    pub finite: bool,
    pub delay: Option<usize>,
    pub witness: Option<InfiniteWitness>,
}

/// Decide whether `c` has finite deciphering delay, and compute it.
///
/// The delay is `1 + max lcp(u, u')` over factorizable words `u`, `u'` whose
/// first code words differ, and `0` when no such pair exists. The maximum
/// collects the common prefix of incomparable word pairs, and for pairs
/// where one word prefixes the other, the longest agreement along the
/// ambiguity graph, including the final partial match where the two sides
/// diverge.
pub fn delay_analysis(c: &Code) -> Result<DelayReport> {
    let graph = ambiguity_graph(c)?;
    if let Some(witness) = infinite_witness(c, &graph) {
        return Ok(DelayReport {
            finite: false,
            delay: None,
            witness: Some(witness),
        });
    }

    let words = c.words();
    // best[s]: letters of agreement still obtainable from state s.
    let mut best: Vec<Option<usize>> = vec![None; graph.states.len()];
    fn longest(
        graph: &AmbiguityGraph,
        words: &[Word],
        s: usize,
        best: &mut Vec<Option<usize>>,
    ) -> usize {
        if let Some(v) = best[s] {
            return v;
        }
        let d = &graph.states[s].dangling;
        let mut value = words
            .iter()
            .filter(|w| !w.is_prefix_of(d) && !d.is_prefix_of(w))
            .map(|w| w.common_prefix_len(d))
            .max()
            .unwrap_or(0);
        for (t, to) in graph.successors(s) {
            value = value.max(graph.transitions[t].advance + longest(graph, words, to, best));
        }
        best[s] = Some(value);
        value
    }

    let mut agreement: Option<usize> = None;
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            if !u.is_prefix_of(v) && !v.is_prefix_of(u) {
                agreement = agreement.max(Some(u.common_prefix_len(v)));
            }
        }
    }
    for pair in &graph.initial {
        let reach = words[pair.shorter].len() + longest(&graph, words, pair.state, &mut best);
        agreement = agreement.max(Some(reach));
    }
    Ok(DelayReport {
        finite: true,
        delay: Some(agreement.map_or(0, |a| a + 1)),
        witness: None,
    })
}

fn infinite_witness(c: &Code, graph: &AmbiguityGraph) -> Option<InfiniteWitness> {
    let assemble = |pair: usize, path: &[usize]| {
        let init = &graph.initial[pair];
        let mut preamble = c.word(init.shorter).clone();
        for &t in path {
            preamble.push_word(&graph.advance_letters(t));
        }
        (preamble, (init.shorter, init.longer))
    };

    // Catch-up transitions are listed in breadth-first order of their source.
    if let Some(t) = graph
        .transitions
        .iter()
        .position(|t| t.target == Target::CatchUp)
    {
        let (pair, mut path) = graph.path_to(graph.transitions[t].from);
        path.push(t);
        let (word, first_words) = assemble(pair, &path);
        return Some(InfiniteWitness {
            preamble: Word::empty(),
            period: word,
            first_words,
            kind: WitnessKind::CatchUp,
        });
    }

    let (s, cycle) =
        (0..graph.states.len()).find_map(|s| graph.shortest_cycle_through(s).map(|cy| (s, cy)))?;
    let (pair, path) = graph.path_to(s);
    let (preamble, first_words) = assemble(pair, &path);
    let mut period = Word::empty();
    for &t in &cycle {
        period.push_word(&graph.advance_letters(t));
    }
    Some(InfiniteWitness {
        preamble,
        period,
        first_words,
        kind: WitnessKind::Cycle,
    })
}

pub fn has_finite_delay(c: &Code) -> Result<bool> {
    Ok(delay_analysis(c)?.finite)
}
