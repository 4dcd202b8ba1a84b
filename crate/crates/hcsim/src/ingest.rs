//! Turning raw documents into term-frequency tables over a controlled
//! vocabulary.
//!
//! Tokenization is deliberately simple and reproducible: text is split on
//! any non-alphabetic character and lowercased by default. N-grams of the
//! requested orders are formed over the filtered token stream and joined
//! with a single underscore, so every term stays a plain string.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Joiner between the words of an n-gram term.
pub const NGRAM_JOINER: char = '_';

/// Tokenizer settings.
///
/// Stop-listed and too-short tokens are dropped *before* n-grams are
/// formed, so a bigram may span a removed token. Stop-list matching happens
/// after case folding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenizerConfig {
    pub lowercase: bool,
    /// N-gram orders to emit; must be non-empty, every order >= 1.
    pub ngram_orders: BTreeSet<usize>,
    pub stop_list: Option<BTreeSet<String>>,
    /// Minimum token length in characters; must be >= 1.
    pub min_token_len: usize,
}

impl Default for TokenizerConfig {
    fn default() -> Self {
        TokenizerConfig {
            lowercase: true,
            ngram_orders: BTreeSet::from([1]),
            stop_list: None,
            min_token_len: 1,
        }
    }
}

impl TokenizerConfig {
    fn validate(&self) -> Result<()> {
        if self.ngram_orders.is_empty() {
            return Err(Error::invalid("ngram_orders must be non-empty"));
        }
        if self.ngram_orders.contains(&0) {
            return Err(Error::invalid("ngram orders must be >= 1"));
        }
        if self.min_token_len == 0 {
            return Err(Error::invalid("min_token_len must be >= 1"));
        }
        Ok(())
    }
}

/// A term -> count map with a cached total.
///
/// Terms may be stored with an explicit zero count (projection inserts
/// them); the total always equals the sum of all counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrequencyTable {
    counts: BTreeMap<String, u64>,
    total: u64,
}

impl FrequencyTable {
    pub fn new() -> Self {
        FrequencyTable::default()
    }

    /// Count of `term`, zero if absent.
    pub fn count(&self, term: &str) -> u64 {
        self.counts.get(term).copied().unwrap_or(0)
    }

    /// Sum of all counts.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of stored terms (zero-count entries included).
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Adds `count` occurrences of `term`.
    pub fn add(&mut self, term: impl Into<String>, count: u64) {
        *self.counts.entry(term.into()).or_insert(0) += count;
        self.total += count;
    }

    /// Term-wise addition of another table.
    pub fn add_table(&mut self, other: &FrequencyTable) {
        for (term, &count) in other.iter() {
            *self.counts.entry(term.clone()).or_insert(0) += count;
        }
        self.total += other.total;
    }

    /// Iterates `(term, count)` in lexicographic term order.
    pub fn iter(&self) -> impl Iterator<Item = (&String, &u64)> {
        self.counts.iter()
    }

    /// Sum of counts restricted to `vocab`.
    pub fn total_over(&self, vocab: &Vocabulary) -> u64 {
        vocab.terms().map(|t| self.count(t)).sum()
    }
}

impl<S: Into<String>> FromIterator<(S, u64)> for FrequencyTable {
    fn from_iter<I: IntoIterator<Item = (S, u64)>>(iter: I) -> Self {
        let mut table = FrequencyTable::new();
        for (term, count) in iter {
            table.add(term, count);
        }
        table
    }
}

/// An ordered list of unique terms; its length is the vocabulary size N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vocabulary {
    terms: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl Vocabulary {
    /// Builds a vocabulary from terms in the given order, silently dropping
    /// duplicates after their first occurrence.
    pub fn from_terms<I, S>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Vec::new();
        let mut index = BTreeMap::new();
        for term in terms {
            let term = term.into();
            if !index.contains_key(&term) {
                index.insert(term.clone(), out.len());
                out.push(term);
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyInput("vocabulary has no terms"));
        }
        Ok(Vocabulary { terms: out, index })
    }

    /// The first `n` unique terms of a listing, e.g. an external word-list
    /// file read line by line. Returns all of them (with a warning) when
    /// fewer than `n` are available.
    pub fn from_listed_terms<I, S>(listed: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if n == 0 {
            return Err(Error::invalid("vocabulary size must be >= 1"));
        }
        let mut taken = Vec::new();
        let mut seen = BTreeSet::new();
        for term in listed {
            let term = term.into();
            if seen.insert(term.clone()) {
                taken.push(term);
                if taken.len() == n {
                    break;
                }
            }
        }
        if taken.len() < n {
            log::warn!(
                "vocabulary list has only {} distinct terms of {n} requested",
                taken.len()
            );
        }
        Vocabulary::from_terms(taken)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, term: &str) -> bool {
        self.index.contains_key(term)
    }

    /// Terms in vocabulary order.
    pub fn terms(&self) -> impl Iterator<Item = &String> {
        self.terms.iter()
    }
}

/// Splits `text` into terms: alphabetic runs, optionally lowercased, with
/// stop-listed and short tokens removed, then n-grams of each configured
/// order in document order (orders ascending).
pub fn tokenize_terms(text: &str, cfg: &TokenizerConfig) -> Result<Vec<String>> {
    cfg.validate()?;
    let mut words: Vec<String> = Vec::new();
    let mut current = String::new();
    for ch in text.chars().chain(core::iter::once(' ')) {
        if ch.is_alphabetic() {
            if cfg.lowercase {
                current.extend(ch.to_lowercase());
            } else {
                current.push(ch);
            }
        } else if !current.is_empty() {
            let keep = current.chars().count() >= cfg.min_token_len
                && cfg
                    .stop_list
                    .as_ref()
                    .is_none_or(|stop| !stop.contains(&current));
            if keep {
                words.push(core::mem::take(&mut current));
            } else {
                current.clear();
            }
        }
    }

    let mut terms = Vec::new();
    for &order in &cfg.ngram_orders {
        if order == 1 {
            terms.extend(words.iter().cloned());
        } else if words.len() >= order {
            for window in words.windows(order) {
                let mut gram = String::with_capacity(
                    window.iter().map(|w| w.len() + 1).sum::<usize>(),
                );
                for (i, w) in window.iter().enumerate() {
                    if i > 0 {
                        gram.push(NGRAM_JOINER);
                    }
                    gram.push_str(w);
                }
                terms.push(gram);
            }
        }
    }
    Ok(terms)
}

/// Counts term multiplicities. With a vocabulary, out-of-vocabulary terms
/// are discarded and the total covers in-vocabulary occurrences only.
pub fn count_terms<I, S>(terms: I, vocab: Option<&Vocabulary>) -> FrequencyTable
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut table = FrequencyTable::new();
    for term in terms {
        let term = term.into();
        if vocab.is_none_or(|v| v.contains(&term)) {
            table.add(term, 1);
        }
    }
    table
}

/// The `n` terms with the largest summed counts across `tables`, ties
/// broken lexicographically. Returns all available terms (with a warning)
/// when fewer than `n` distinct terms exist.
pub fn build_vocabulary(tables: &[&FrequencyTable], n: usize) -> Result<Vocabulary> {
    if n == 0 {
        return Err(Error::invalid("vocabulary size must be >= 1"));
    }
    let mut summed: BTreeMap<&str, u64> = BTreeMap::new();
    for table in tables {
        for (term, &count) in table.iter() {
            if count > 0 {
                *summed.entry(term).or_insert(0) += count;
            }
        }
    }
    if summed.len() < n {
        log::warn!(
            "only {} distinct terms available for a vocabulary of {n}",
            summed.len()
        );
    }
    let mut ranked: Vec<(&str, u64)> = summed.into_iter().collect();
    // Descending by count; the BTreeMap source already yields ties in
    // lexicographic order and the sort is stable.
    ranked.sort_by(|a, b| b.1.cmp(&a.1));
    Vocabulary::from_terms(ranked.into_iter().take(n).map(|(t, _)| t))
}

/// Restriction of `table` to `vocab`: in-vocabulary terms keep their
/// counts, vocabulary terms absent from the table appear with count 0, and
/// the total is recomputed.
pub fn project_table(table: &FrequencyTable, vocab: &Vocabulary) -> FrequencyTable {
    let mut out = FrequencyTable::new();
    for term in vocab.terms() {
        out.add(term.clone(), table.count(term));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(orders: &[usize]) -> TokenizerConfig {
        TokenizerConfig {
            ngram_orders: orders.iter().copied().collect(),
            ..TokenizerConfig::default()
        }
    }

    #[test]
    fn tokenize_empty_text() {
        assert!(tokenize_terms("", &TokenizerConfig::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn tokenize_lowercases_and_splits_on_non_alphabetic() {
        let terms = tokenize_terms("The cat sat", &TokenizerConfig::default()).unwrap();
        assert_eq!(terms, ["the", "cat", "sat"]);
        let terms = tokenize_terms("it's 42 a-b!", &TokenizerConfig::default()).unwrap();
        assert_eq!(terms, ["it", "s", "a", "b"]);
    }

    #[test]
    fn tokenize_emits_ngrams_after_unigrams() {
        let terms = tokenize_terms("a b c", &cfg(&[1, 2])).unwrap();
        assert_eq!(terms, ["a", "b", "c", "a_b", "b_c"]);
    }

    #[test]
    fn stop_list_applies_before_ngram_formation() {
        let config = TokenizerConfig {
            stop_list: Some(BTreeSet::from([String::from("the")])),
            ngram_orders: BTreeSet::from([2]),
            ..TokenizerConfig::default()
        };
        let terms = tokenize_terms("a the b", &config).unwrap();
        assert_eq!(terms, ["a_b"]);
    }

    #[test]
    fn min_token_len_filters_short_tokens() {
        let config = TokenizerConfig {
            min_token_len: 2,
            ..TokenizerConfig::default()
        };
        assert_eq!(tokenize_terms("a an and", &config).unwrap(), ["an", "and"]);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut config = TokenizerConfig::default();
        config.ngram_orders.clear();
        assert!(tokenize_terms("x", &config).is_err());
        let config = TokenizerConfig {
            min_token_len: 0,
            ..TokenizerConfig::default()
        };
        assert!(tokenize_terms("x", &config).is_err());
    }

    #[test]
    fn count_terms_basic() {
        let t = count_terms(["a", "b", "a"], None);
        assert_eq!(t.count("a"), 2);
        assert_eq!(t.count("b"), 1);
        assert_eq!(t.total(), 3);
    }

    #[test]
    fn count_terms_projects_onto_vocab() {
        let vocab = Vocabulary::from_terms(["a"]).unwrap();
        let t = count_terms(["a", "b", "a"], Some(&vocab));
        assert_eq!(t.count("a"), 2);
        assert_eq!(t.count("b"), 0);
        assert_eq!(t.total(), 2);
    }

    #[test]
    fn count_terms_empty() {
        let t = count_terms(core::iter::empty::<String>(), None);
        assert!(t.is_empty());
        assert_eq!(t.total(), 0);
    }

    #[test]
    fn vocabulary_top_frequency_with_ties() {
        let t1: FrequencyTable = [("a", 5), ("b", 3)].into_iter().collect();
        let t2: FrequencyTable = [("b", 4), ("c", 1)].into_iter().collect();
        let vocab = build_vocabulary(&[&t1, &t2], 2).unwrap();
        let terms: Vec<_> = vocab.terms().cloned().collect();
        assert_eq!(terms, ["b", "a"]);

        // tie between b and c at 3: lexicographic order wins
        let t3: FrequencyTable = [("c", 3), ("b", 3), ("a", 9)].into_iter().collect();
        let vocab = build_vocabulary(&[&t3], 2).unwrap();
        let terms: Vec<_> = vocab.terms().cloned().collect();
        assert_eq!(terms, ["a", "b"]);
    }

    #[test]
    fn vocabulary_shortfall_returns_all_terms() {
        let t: FrequencyTable = [("a", 1), ("b", 2)].into_iter().collect();
        let vocab = build_vocabulary(&[&t], 10).unwrap();
        assert_eq!(vocab.len(), 2);
    }

    #[test]
    fn vocabulary_from_listed_terms_takes_prefix() {
        let vocab = Vocabulary::from_listed_terms(["the", "of", "and"], 2).unwrap();
        let terms: Vec<_> = vocab.terms().cloned().collect();
        assert_eq!(terms, ["the", "of"]);
    }

    #[test]
    fn project_examples() {
        let vocab = Vocabulary::from_terms(["a", "c"]).unwrap();
        let t: FrequencyTable = [("a", 2), ("b", 1)].into_iter().collect();
        let p = project_table(&t, &vocab);
        assert_eq!(p.count("a"), 2);
        assert_eq!(p.count("c"), 0);
        assert_eq!(p.total(), 2);

        let empty = FrequencyTable::new();
        let vocab_a = Vocabulary::from_terms(["a"]).unwrap();
        let p = project_table(&empty, &vocab_a);
        assert_eq!(p.count("a"), 0);
        assert_eq!(p.total(), 0);

        let vocab_abc = Vocabulary::from_terms(["a", "b", "c"]).unwrap();
        let t: FrequencyTable = [("a", 1), ("b", 1), ("c", 1)].into_iter().collect();
        assert_eq!(project_table(&t, &vocab_abc), t);
    }
}
