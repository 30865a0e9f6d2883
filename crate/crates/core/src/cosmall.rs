//! Classification of cosmall and `P`-cosmall roots.
//!
//! A positive root `α ∉ R⁺_P` is `P`-cosmall when it is a maximal root of
//! the degree class of its own coroot. Two independent routes are shipped:
//!
//! - the definitional test, which searches for a dominating root `γ > α`
//!   with `γ∨ + ZΔ∨_P ≤ α∨ + ZΔ∨_P` and reports it as a machine-checkable
//!   witness when found; and
//! - the `Δ(α) ∩ Δ_P = ∅` criterion, valid for cosmall `α`, which is the
//!   fast path.
//!
//! The verification suite never lets the two disagree. With `P = B`
//! (empty `Δ_P`) "`P`-cosmall" specializes to "cosmall"; every simple or
//! long root is cosmall, and in a simply laced system every root is.

use serde::{Deserialize, Serialize};

use crate::degrees::Degree;
use crate::error::{Error, Result};
use crate::rootsys::{root_lt, DynkinType, ParabolicSubset, Root, RootSystem};

/// Verdicts for one root relative to a parabolic subset, with a dominating
/// witness for each negative verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosmallReport {
    pub dynkin: DynkinType,
    pub parabolic: ParabolicSubset,
    pub root: Root,
    pub is_cosmall: bool,
    /// `Δ(α)` as ascending simple indices.
    pub delta_set: Vec<usize>,
    pub is_p_cosmall: bool,
    /// For `is_cosmall = false`: a root `γ > α` with `γ∨ ≤ α∨`.
    pub cosmall_witness: Option<Root>,
    /// For `is_p_cosmall = false`: a root `γ > α` whose coroot class is
    /// `≤` that of `α` in `H₂(X)`.
    pub p_cosmall_witness: Option<Root>,
}

/// A counterexample to the short-cosmall property checked by
/// [`RootSystem::check_short_cosmall_delta`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortCosmallViolation {
    pub alpha: Root,
    /// Index of the offending simple root `β ∈ Δ(α)` with `β ≤ α`.
    pub beta_index: usize,
}

impl RootSystem {
    /// Search the positive roots (in lexicographic order) for a strict
    /// dominator of `alpha` whose projected coroot is bounded by `bound`.
    fn dominating_witness(&self, alpha: &Root, p: &ParabolicSubset, bound: &Degree) -> Option<Root> {
        let free = bound.free_indices();
        for gamma in self.positive_roots() {
            if !root_lt(alpha, gamma) {
                continue;
            }
            let idx = self.root_index(gamma).expect("positive root is in the table");
            let coroot = self.coroot_by_index(idx).coeffs();
            if free
                .iter()
                .zip(bound.coeffs())
                .all(|(&i, &b)| coroot[i - 1] <= b)
            {
                // γ > α ≥ 0 forces supp(γ) ⊇ supp(α) ⊄ Δ_P, so γ ∉ R⁺_P.
                debug_assert!(!self.in_parabolic_span(gamma, p));
                return Some(gamma.clone());
            }
        }
        None
    }

    /// Is `α` cosmall, i.e. a maximal root of `α∨` with `Δ_P = ∅`?
    /// A negative verdict comes with the lex-smallest dominating root
    /// `γ > α` with `γ∨ ≤ α∨`.
    pub fn is_cosmall(&self, alpha: &Root) -> Result<(bool, Option<Root>)> {
        self.require_positive(alpha)?;
        let p = ParabolicSubset::empty();
        let bound = self.coroot_degree(alpha, &p)?;
        match self.dominating_witness(alpha, &p, &bound) {
            Some(gamma) => Ok((false, Some(gamma))),
            None => Ok((true, None)),
        }
    }

    fn require_outside_parabolic(&self, alpha: &Root, p: &ParabolicSubset) -> Result<()> {
        self.require_positive(alpha)?;
        if self.in_parabolic_span(alpha, p) {
            return Err(Error::RootInParabolicSpan(alpha.literal()));
        }
        Ok(())
    }

    /// The definitional `P`-cosmall test: `α` must be one of the maximal
    /// roots of the degree `α∨ + ZΔ∨_P`. Negative verdicts carry the
    /// lex-smallest dominating witness.
    pub fn is_p_cosmall_definitional(
        &self,
        alpha: &Root,
        p: &ParabolicSubset,
    ) -> Result<(bool, Option<Root>)> {
        self.require_outside_parabolic(alpha, p)?;
        let bound = self.coroot_degree(alpha, p)?;
        match self.dominating_witness(alpha, p, &bound) {
            Some(gamma) => Ok((false, Some(gamma))),
            None => Ok((true, None)),
        }
    }

    /// The `Δ(α) ∩ Δ_P = ∅` criterion. It presupposes a cosmall root and
    /// rejects anything else, so that a `true` answer always means
    /// `P`-cosmall; [`RootSystem::is_p_cosmall`] composes both checks.
    pub fn is_p_cosmall_criterion(&self, alpha: &Root, p: &ParabolicSubset) -> Result<bool> {
        self.require_outside_parabolic(alpha, p)?;
        let (cosmall, _) = self.is_cosmall(alpha)?;
        if !cosmall {
            return Err(Error::NotCosmall(alpha.literal()));
        }
        Ok(self.delta_set(alpha)?.iter().all(|&i| !p.contains(i)))
    }

    /// Convenience wrapper: cosmall and `Δ(α) ∩ Δ_P = ∅`. Agrees with the
    /// definitional test on every input.
    pub fn is_p_cosmall(&self, alpha: &Root, p: &ParabolicSubset) -> Result<bool> {
        self.require_outside_parabolic(alpha, p)?;
        let (cosmall, _) = self.is_cosmall(alpha)?;
        Ok(cosmall && self.delta_set(alpha)?.iter().all(|&i| !p.contains(i)))
    }

    /// Full report for one root: cosmallness, `Δ(α)`, the `P`-cosmall
    /// verdict (computed definitionally), and witnesses for the negatives.
    pub fn cosmall_report(&self, alpha: &Root, p: &ParabolicSubset) -> Result<CosmallReport> {
        self.require_outside_parabolic(alpha, p)?;
        let (is_cosmall, cosmall_witness) = self.is_cosmall(alpha)?;
        let (is_p_cosmall, p_cosmall_witness) = self.is_p_cosmall_definitional(alpha, p)?;
        Ok(CosmallReport {
            dynkin: *self.dynkin(),
            parabolic: p.clone(),
            root: alpha.clone(),
            is_cosmall,
            delta_set: self.delta_set(alpha)?,
            is_p_cosmall,
            cosmall_witness,
            p_cosmall_witness,
        })
    }

    /// Check that for every *short* cosmall root `α` and every
    /// `β ∈ Δ(α)`, `β ≰ α` in dominance order. Returns the first
    /// violation, if any exists.
    pub fn check_short_cosmall_delta(&self) -> Option<ShortCosmallViolation> {
        for alpha in self.positive_roots() {
            if !self.is_short(alpha).expect("table root") {
                continue;
            }
            let (cosmall, _) = self.is_cosmall(alpha).expect("positive root");
            if !cosmall {
                continue;
            }
            for i in self.delta_set(alpha).expect("positive root") {
                let beta = self.simple_root(i).expect("index from delta_set");
                if crate::rootsys::root_leq(&beta, alpha) {
                    return Some(ShortCosmallViolation {
                        alpha: alpha.clone(),
                        beta_index: i,
                    });
                }
            }
        }
        None
    }
}
