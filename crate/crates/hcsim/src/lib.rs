//! Higher Criticism similarity of word-frequency tables.
//!
//! `hcsim` measures how closely two word-frequency tables resemble each
//! other. Every term in a shared vocabulary gets an exact two-sided binomial
//! P-value under the null hypothesis that occurrences of that term are
//! allocated between the two tables at a fixed rate estimated
//! leave-one-term-out. The Higher Criticism statistic then combines the
//! batch of P-values into a single score: small scores mean the tables look
//! alike, large scores mean a (possibly sparse) set of terms is used at
//! clearly different rates. The maximizing order statistic yields a
//! threshold, and the terms whose P-values fall at or below it form the
//! discriminating set.
//!
//! On top of that primitive the crate provides:
//!
//! - [`ingest`] — tokenization, term counting, vocabulary construction;
//! - [`binom`] — the exact binomial test and per-term P-value batches;
//! - [`hc`] — the Higher Criticism statistic, threshold, and
//!   discriminating set;
//! - [`similarity`] — HC similarity plus cosine and power-divergence
//!   baselines;
//! - [`attribution`] — document-vs-corpus scoring, leave-one-out rank
//!   calibration, and author selection;
//! - [`diagnostics`] — variance-stabilized rate diagnostics and a
//!   rare/weak synthetic-corpus simulator.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); disable the
//! default `std` feature for embedded or wasm targets. All operations are
//! pure functions over immutable inputs and are safe to evaluate
//! concurrently.
//!
//! ```
//! use hcsim::ingest::{count_terms, tokenize_terms, build_vocabulary, TokenizerConfig};
//! use hcsim::similarity::hc_sim;
//! use hcsim::hc::HcVariant;
//!
//! let cfg = TokenizerConfig::default();
//! let t1 = count_terms(tokenize_terms("the cat sat on the mat", &cfg).unwrap(), None);
//! let t2 = count_terms(tokenize_terms("the dog sat on the log", &cfg).unwrap(), None);
//! let vocab = build_vocabulary(&[&t1, &t2], 10).unwrap();
//! let sim = hc_sim(&t1, &t2, &vocab, 0.5, HcVariant::Star).unwrap();
//! assert!(sim.score().is_finite());
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
mod math;

pub mod attribution;
pub mod binom;
pub mod diagnostics;
pub mod hc;
pub mod ingest;
pub mod similarity;

pub use error::{Error, Result};
