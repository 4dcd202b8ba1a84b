//! The Higher Criticism statistic, its maximizing threshold, and the
//! discriminating term set.
//!
//! Given N P-values sorted ascending, HC maximizes the standardized gap
//! between the empirical and uniform quantiles,
//!
//! ```text
//! z_i = sqrt(N) * (i/N - pi_(i)) / sqrt((i/N) * (1 - i/N)),
//! ```
//!
//! over `1 <= i <= floor(alpha * N)` (the star variant) or over the subset
//! of those indices with `pi_(i) >= 1/N` (the dagger variant, preferred at
//! small sample sizes). The index `i = N` is always excluded: its
//! standardizer vanishes. The P-value at the maximizer is the HC threshold;
//! records at or below it form the discriminating set.

use alloc::string::String;
use alloc::vec::Vec;

use crate::binom::PValueRecord;
use crate::math;
use crate::{Error, Result};

/// Which index set the maximization runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcVariant {
    /// All indices `1 <= i <= floor(alpha * N)`.
    Star,
    /// Only indices whose P-value is at least `1/N`.
    Dagger,
}

/// Result of a Higher Criticism maximization.
#[derive(Clone, Debug, PartialEq)]
pub struct HcResult {
    /// The HC statistic: the maximal standardized deviation. May be
    /// negative when every P-value exceeds its uniform quantile.
    pub score: f64,
    /// One-based rank of the maximizer among the sorted P-values.
    pub i_star: usize,
    /// The P-value at the maximizer, `pi_(i_star)`.
    pub threshold: f64,
    pub alpha: f64,
    pub variant: HcVariant,
    /// Number of P-values tested (the N of the standardization).
    pub n_tested: usize,
}

/// Computes the HC statistic of a batch of P-values.
///
/// `alpha` must lie in `(0, 1]` with `floor(alpha * N) >= 1`; ties among
/// equal P-values each occupy their own rank, and the smallest maximizing
/// index wins. The dagger variant fails with
/// [`Error::NoAdmissibleIndex`] when every candidate P-value lies below
/// `1/N`.
pub fn compute_hc(pvalues: &[f64], alpha: f64, variant: HcVariant) -> Result<HcResult> {
    if pvalues.is_empty() {
        return Err(Error::EmptyInput("no P-values to combine"));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::invalid(format_args!("alpha = {alpha} outside (0, 1]")));
    }
    if let Some(bad) = pvalues.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::invalid(format_args!("P-value {bad} outside [0, 1]")));
    }
    let n = pvalues.len();
    let i_max = (math::floor(alpha * n as f64) as usize).min(n - 1);
    if i_max < 1 {
        return Err(Error::invalid(format_args!(
            "floor(alpha * N) < 1 for alpha = {alpha}, N = {n}"
        )));
    }

    let mut sorted = pvalues.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);

    let n_f = n as f64;
    let sqrt_n = math::sqrt(n_f);
    let min_admissible = 1.0 / n_f;
    let mut best: Option<(f64, usize)> = None;
    for (idx, &p) in sorted.iter().enumerate().take(i_max) {
        if variant == HcVariant::Dagger && p < min_admissible {
            continue;
        }
        let i = idx + 1;
        let t = i as f64 / n_f;
        let z = sqrt_n * (t - p) / math::sqrt(t * (1.0 - t));
        if best.is_none_or(|(zb, _)| z > zb) {
            best = Some((z, i));
        }
    }
    let (score, i_star) = best.ok_or(Error::NoAdmissibleIndex(n))?;
    Ok(HcResult {
        score,
        i_star,
        threshold: sorted[i_star - 1],
        alpha,
        variant,
        n_tested: n,
    })
}

/// A term selected by the HC threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminatingTerm {
    pub term: String,
    pub pi: f64,
    /// +1 when the first table holds the excess, -1 for the second, 0 at
    /// exact balance.
    pub direction: i8,
}

/// The terms whose P-value falls at or below the HC threshold.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiscriminatingSet {
    pub terms: Vec<DiscriminatingTerm>,
}

impl DiscriminatingSet {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, term: &str) -> bool {
        self.terms.iter().any(|t| t.term == term)
    }
}

/// Selects every record with `pi <= hc.threshold`, in record order.
///
/// `hc` must have been computed from these records' P-values; equal
/// P-values tied at the threshold are all included.
pub fn discriminating_set(records: &[PValueRecord], hc: &HcResult) -> DiscriminatingSet {
    DiscriminatingSet {
        terms: records
            .iter()
            .filter(|r| r.pi <= hc.threshold)
            .map(|r| DiscriminatingTerm {
                term: r.term.clone(),
                pi: r.pi,
                direction: r.direction,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid_scores_zero() {
        let n = 20;
        let pvals: Vec<f64> = (1..=n).map(|i| i as f64 / n as f64).collect();
        let hc = compute_hc(&pvals, 0.5, HcVariant::Star).unwrap();
        assert_eq!(hc.score, 0.0);
    }

    #[test]
    fn four_point_example() {
        let pvals = [0.01, 0.2, 0.3, 0.9];
        let hc = compute_hc(&pvals, 0.5, HcVariant::Star).unwrap();
        // z_1 = 2 * 0.24 / sqrt(0.1875) ~ 1.1085, z_2 = 2 * 0.30 / 0.5 = 1.2
        assert!((hc.score - 1.2).abs() < 1e-12, "score = {}", hc.score);
        assert_eq!(hc.i_star, 2);
        assert_eq!(hc.threshold, 0.2);
        assert_eq!(hc.n_tested, 4);
    }

    #[test]
    fn score_may_be_negative_and_index_n_is_excluded() {
        let pvals = [0.9, 0.95];
        let hc = compute_hc(&pvals, 1.0, HcVariant::Star).unwrap();
        let expected = 2f64.sqrt() * (0.5 - 0.9) / 0.5;
        assert!((hc.score - expected).abs() < 1e-12);
        assert_eq!(hc.i_star, 1);
    }

    #[test]
    fn dagger_skips_small_pvalues() {
        // N = 4, 1/N = 0.25: rank 1 is admissible for star only.
        let pvals = [0.001, 0.3, 0.77, 0.9];
        let star = compute_hc(&pvals, 1.0, HcVariant::Star).unwrap();
        let dagger = compute_hc(&pvals, 1.0, HcVariant::Dagger).unwrap();
        assert_eq!(star.i_star, 1);
        assert_eq!(dagger.i_star, 2);
        assert_eq!(dagger.threshold, 0.3);
        assert!(star.score >= dagger.score);
    }

    #[test]
    fn dagger_with_no_admissible_index_fails() {
        let pvals = [0.01, 0.02, 0.3, 0.4];
        let err = compute_hc(&pvals, 0.5, HcVariant::Dagger).unwrap_err();
        assert!(matches!(err, Error::NoAdmissibleIndex(4)));
    }

    #[test]
    fn input_validation() {
        assert!(compute_hc(&[], 0.3, HcVariant::Star).is_err());
        assert!(compute_hc(&[0.5, 0.5], 0.0, HcVariant::Star).is_err());
        assert!(compute_hc(&[0.5, 0.5], 1.2, HcVariant::Star).is_err());
        assert!(compute_hc(&[0.5, 1.5], 0.5, HcVariant::Star).is_err());
        assert!(compute_hc(&[0.5, f64::NAN], 0.5, HcVariant::Star).is_err());
        // floor(alpha * N) < 1
        assert!(compute_hc(&[0.5, 0.6], 0.3, HcVariant::Star).is_err());
        // N = 1 leaves no admissible index below N
        assert!(compute_hc(&[0.5], 1.0, HcVariant::Star).is_err());
    }

    #[test]
    fn all_ones_select_every_tied_term() {
        let pvals = [1.0; 5];
        let hc = compute_hc(&pvals, 0.9, HcVariant::Star).unwrap();
        assert_eq!(hc.threshold, 1.0);
        let records: Vec<PValueRecord> = (0..5)
            .map(|i| PValueRecord {
                term: alloc::format!("t{i}"),
                x: 1,
                n_w: 2,
                p_w: 0.5,
                pi: 1.0,
                direction: 0,
            })
            .collect();
        let delta = discriminating_set(&records, &hc);
        assert_eq!(delta.len(), 5);
    }

    #[test]
    fn threshold_selects_prefix_of_sorted_pvalues() {
        let pvals = [0.01, 0.2, 0.3, 0.9];
        let hc = compute_hc(&pvals, 0.5, HcVariant::Star).unwrap();
        let records: Vec<PValueRecord> = pvals
            .iter()
            .enumerate()
            .map(|(i, &pi)| PValueRecord {
                term: alloc::format!("t{i}"),
                x: 1,
                n_w: 4,
                p_w: 0.5,
                pi,
                direction: 1,
            })
            .collect();
        let delta = discriminating_set(&records, &hc);
        assert_eq!(delta.len(), 2);
        assert!(delta.contains("t0") && delta.contains("t1"));
    }
}
