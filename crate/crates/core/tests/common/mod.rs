//! Brute-force oracles working on plain strings, sharing no code with the
//! library's decision procedures.

#![allow(dead_code)]

use std::collections::BTreeSet;

const GLYPHS: &[u8] = b"0123456789";

pub fn all_words(len: usize, n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| (0..n).map(move |s| format!("{w}{}", GLYPHS[s] as char)))
            .collect();
    }
    out
}

/// Every code with the given length sequence, as strings.
pub fn universe(lengths: &[usize], n: usize) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = vec![Vec::new()];
    for &len in lengths {
        let words = all_words(len, n);
        out = out
            .into_iter()
            .flat_map(|code| {
                words.iter().map(move |w| {
                    let mut c = code.clone();
                    c.push(w.clone());
                    c
                })
            })
            .collect();
    }
    out
}

pub fn is_injective(code: &[String]) -> bool {
    code.iter().collect::<BTreeSet<_>>().len() == code.len()
}

pub fn is_prefix(code: &[String]) -> bool {
    code.iter().enumerate().all(|(i, u)| {
        code.iter()
            .enumerate()
            .all(|(j, v)| i == j || !v.starts_with(u.as_str()))
    })
}

fn proper_suffix_count(code: &[String]) -> usize {
    code.iter()
        .flat_map(|w| (1..w.len()).map(move |k| &w[k..]))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Length bound beyond which a shortest ambiguous word cannot lie.
pub fn length_bound(code: &[String]) -> usize {
    (proper_suffix_count(code) + 1) * code.iter().map(String::len).max().unwrap_or(0)
}

/// Number of factorizations of every prefix of `text`, capped at 2.
fn factorization_counts(code: &[String], text: &str) -> Vec<u8> {
    let mut ways = vec![0u8; text.len() + 1];
    ways[0] = 1;
    for end in 1..=text.len() {
        let mut total = 0u8;
        for w in code {
            if w.len() <= end && &text[end - w.len()..end] == w.as_str() {
                total = total.saturating_add(ways[end - w.len()]).min(2);
            }
        }
        ways[end] = total;
    }
    ways
}

/// Uniquely decodable iff no word up to the length bound has two
/// factorizations, found by extending factorizable words letter by letter.
pub fn is_ud(code: &[String]) -> bool {
    if !is_injective(code) {
        return false;
    }
    let bound = length_bound(code);
    let mut frontier: Vec<String> = code.to_vec();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    while let Some(text) = frontier.pop() {
        if text.len() > bound || !seen.insert(text.clone()) {
            continue;
        }
        if *factorization_counts(code, &text).last().unwrap() > 1 {
            return false;
        }
        for w in code {
            frontier.push(format!("{text}{w}"));
        }
    }
    true
}

/// Deciphering delay from every complete factorization up to `limit`
/// letters: one more than the longest common prefix of two such words
/// with different first code words. `None` when that prefix reaches
/// `threshold`.
pub fn delay(code: &[String], limit: usize, threshold: usize) -> Option<usize> {
    let mut tagged: Vec<(String, usize)> = Vec::new();
    let mut stack: Vec<(String, usize)> = code
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    while let Some((text, first)) = stack.pop() {
        if text.len() > limit {
            continue;
        }
        for w in code {
            stack.push((format!("{text}{w}"), first));
        }
        tagged.push((text, first));
    }
    tagged.sort();
    tagged.dedup();
    let lcp = |a: &str, b: &str| a.bytes().zip(b.bytes()).take_while(|(x, y)| x == y).count();
    // In sorted order the best partner of an entry is the nearest following
    // entry with a different first word.
    let mut next_different = vec![None; tagged.len()];
    for i in (0..tagged.len().saturating_sub(1)).rev() {
        next_different[i] = if tagged[i + 1].1 != tagged[i].1 {
            Some(i + 1)
        } else {
            next_different[i + 1]
        };
    }
    let best = (0..tagged.len())
        .filter_map(|i| next_different[i].map(|j| lcp(&tagged[i].0, &tagged[j].0)))
        .max();
    match best {
        Some(b) if b >= threshold => None,
        Some(b) => Some(b + 1),
        None => Some(0),
    }
}

/// Delay oracle with its bounds set from [`length_bound`].
pub fn delay_oracle(code: &[String]) -> Option<usize> {
    let max = code.iter().map(String::len).max().unwrap();
    let bound = length_bound(code);
    delay(code, bound + 2 * max, bound + max)
}

/// `(|PR|, |UD|)` over a universe.
pub fn class_counts(lengths: &[usize], n: usize) -> (u64, u64) {
    let mut pr = 0;
    let mut ud = 0;
    for code in universe(lengths, n) {
        if is_injective(&code) && is_prefix(&code) {
            pr += 1;
        }
        if is_ud(&code) {
            ud += 1;
        }
    }
    (pr, ud)
}

pub fn anchor(len: usize) -> String {
    format!("{}1", "0".repeat(len - 1))
}

/// Prefix codes containing both anchors `0^(a-1)1` and `0^(b-1)1`.
pub fn anchored_count(lengths: &[usize], n: usize, a: usize, b: usize) -> u64 {
    universe(lengths, n)
        .into_iter()
        .filter(|c| {
            is_injective(c) && is_prefix(c) && c.contains(&anchor(a)) && c.contains(&anchor(b))
        })
        .count() as u64
}

pub fn strings(code: &udcodes::Code) -> Vec<String> {
    code.words().iter().map(|w| w.to_string()).collect()
}
