//! Uniquely decodable, prefix and finite-delay codes with prescribed word
//! lengths.
//!
//! A *code* is an ordered sequence of non-empty words over the alphabet
//! `{0, …, n-1}`. Given a sequence of lengths `L`, the crate decides which of
//! three nested classes a code belongs to, counts each class exactly, builds
//! codes separating them, and checks all of that by exhaustive enumeration.
//!
//! - [`words`]: words, codes, length profiles and the code file format.
//! - [`decide`]: Sardinas–Patterson, factorization and deciphering delay.
//! - [`kraft`]: Kraft sums, prefix code counts and constructions.
//! - [`census`]: closed-form counts and class-equality predicates.
//! - [`enumerate`]: brute-force universes, tallies and oracles.
//! - [`verify`]: suites of cross-checks.
//! - [`cli`]: the command-line front end.
//!
//! ```
//! use udcodes::{census, Code, LengthProfile, Mode};
//!
//! let code = Code::from_glyphs(2, &["10", "100", "000"]).unwrap();
//! assert!(udcodes::is_uniquely_decodable(&code));
//! assert!(!udcodes::is_prefix_code(&code));
//! assert!(!udcodes::has_finite_delay(&code).unwrap());
//!
//! let report = census(&LengthProfile::from_lengths(&[2, 3, 3]).unwrap(), 2, Mode::Both).unwrap();
//! assert_eq!(report.pr.to_string(), "120");
//! assert_eq!(report.ud.unwrap().to_string(), "180");
//! ```

pub mod census;
pub mod cli;
pub mod decide;
pub mod enumerate;
pub mod error;
pub mod kraft;
pub mod verify;
pub mod words;

pub use census::{
    closed_form_ud, count_233, count_all_a_then_b, count_pr_pair, fd_eq_ud_condition, is_fd_eq_ud,
    is_pr_eq_ud, ratio_lower_bound, ratio_lower_bound_with_cap, BoundReport,
};
pub use decide::{
    ambiguity_graph, delay_analysis, factorize, has_finite_delay, is_prefix_code,
    is_uniquely_decodable, proper_suffix_set, sardinas_patterson, AmbiguityGraph, DelayReport,
    InfiniteWitness, SpTrace, Verdict,
};
pub use enumerate::{
    bounded_delay_probe, census, census_with_cap, classify, enumerate_codes, safe_bound,
    two_factorization_search, CensusReport, Classification, DelayProbe, Mode, ProbeVerdict,
    Universe, DEFAULT_UNIVERSE_CAP,
};
pub use error::{Error, Result};
pub use kraft::{
    anchored_prefix_code, canonical_prefix_code, count_anchored_prefix_codes, count_prefix_codes,
    infinite_delay_witness, is_feasible, kraft_sum, ud_nonprefix_witness, AnchoredFamily,
    KraftTrace,
};
pub use words::{reverse_code, reverse_word, Alphabet, Code, LengthProfile, Word};

// The guide's snippets run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/words-and-codes.md")]
    mod words_and_codes {}
    #[doc = include_str!("../../../book/src/unique-decodability.md")]
    mod unique_decodability {}
    #[doc = include_str!("../../../book/src/deciphering-delay.md")]
    mod deciphering_delay {}
    #[doc = include_str!("../../../book/src/kraft.md")]
    mod kraft {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
