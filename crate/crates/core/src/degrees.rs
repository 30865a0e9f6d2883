//! The degree lattice `H₂(X) = ZΔ∨/ZΔ∨_P`, maximal roots of a degree, and
//! greedy decompositions.
//!
//! A degree is a vector of coroot coefficients indexed by the simple roots
//! *not* in `Δ_P`, i.e. the image of a coroot-lattice element in the
//! quotient, ordered coefficientwise. Every degree carries its
//! `(type, Δ_P)` context and cross-context arithmetic is rejected rather
//! than silently coerced.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{root_lt, Coroot, DynkinType, ParabolicSubset, Root, RootSystem};

/// An effective degree in `H₂(X) = ZΔ∨/ZΔ∨_P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Degree {
    dynkin: DynkinType,
    parabolic: ParabolicSubset,
    coeffs: Vec<i64>,
}

impl Degree {
    /// The zero degree, the identity for addition.
    pub fn zero(rs: &RootSystem, p: &ParabolicSubset) -> Result<Degree> {
        let free = Degree::checked_free_indices(rs, p)?;
        Ok(Degree {
            dynkin: *rs.dynkin(),
            parabolic: p.clone(),
            coeffs: vec![0; free.len()],
        })
    }

    /// Build from coefficients over `Δ∖Δ_P` in increasing index order.
    /// Only effective degrees (all coefficients `≥ 0`) are allowed.
    pub fn from_coeffs(rs: &RootSystem, p: &ParabolicSubset, coeffs: Vec<i64>) -> Result<Degree> {
        let free = Degree::checked_free_indices(rs, p)?;
        if coeffs.len() != free.len() {
            return Err(Error::ContextMismatch(format!(
                "degree needs {} coefficients for Delta \\ Delta_P, got {}",
                free.len(),
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|&c| c < 0) {
            let literal = coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            return Err(Error::BadLiteral {
                input: literal,
                reason: "degrees must be effective (all coefficients >= 0)".to_string(),
            });
        }
        Ok(Degree {
            dynkin: *rs.dynkin(),
            parabolic: p.clone(),
            coeffs,
        })
    }

    /// Parse a comma-separated literal over the free indices; the empty
    /// string is the zero degree of an empty coordinate list.
    pub fn parse(rs: &RootSystem, p: &ParabolicSubset, s: &str) -> Result<Degree> {
        let free = Degree::checked_free_indices(rs, p)?;
        let s = s.trim();
        let coeffs: Vec<i64> = if s.is_empty() {
            vec![0; free.len()]
        } else {
            s.split(',')
                .map(|tok| {
                    tok.trim().parse::<i64>().map_err(|_| Error::BadLiteral {
                        input: s.to_string(),
                        reason: format!("`{}` is not an integer", tok.trim()),
                    })
                })
                .collect::<Result<_>>()?
        };
        Degree::from_coeffs(rs, p, coeffs)
    }

    fn checked_free_indices(rs: &RootSystem, p: &ParabolicSubset) -> Result<Vec<usize>> {
        if let Some(i) = p.members().find(|&i| i > rs.rank()) {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: rs.rank(),
            });
        }
        Ok(p.complement(rs.rank()))
    }

    pub fn dynkin(&self) -> &DynkinType {
        &self.dynkin
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The simple indices the coefficients refer to, ascending.
    pub fn free_indices(&self) -> Vec<usize> {
        self.parabolic.complement(self.dynkin.rank())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn same_context(&self, other: &Degree) -> bool {
        self.dynkin == other.dynkin && self.parabolic == other.parabolic
    }

    fn require_same_context(&self, other: &Degree) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "({}, Delta_P = {}) vs ({}, Delta_P = {})",
                self.dynkin, self.parabolic, other.dynkin, other.parabolic
            )))
        }
    }

    /// Coefficientwise comparison on the `Δ∖Δ_P` coordinates.
    pub fn leq(&self, other: &Degree) -> Result<bool> {
        self.require_same_context(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Degree) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    pub fn plus(&self, other: &Degree) -> Result<Degree> {
        self.require_same_context(other)?;
        Ok(Degree {
            dynkin: self.dynkin,
            parabolic: self.parabolic.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `self − other`, defined only when the result stays effective.
    pub fn minus(&self, other: &Degree) -> Result<Degree> {
        self.require_same_context(other)?;
        if !other.leq_unchecked(self) {
            return Err(Error::ContextMismatch(
                "subtraction would leave the effective cone".to_string(),
            ));
        }
        Ok(Degree {
            dynkin: self.dynkin,
            parabolic: self.parabolic.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn literal(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

/// A greedy decomposition `(α_1, …, α_k)` of a degree: each `α_i` is a
/// maximal root of the residual degree left by the earlier parts. The
/// multiset of parts does not depend on tie-breaking; this implementation
/// always peels the lexicographically smallest maximal root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyDecomposition {
    parts: Vec<Root>,
}

impl GreedyDecomposition {
    pub fn parts(&self) -> &[Root] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl RootSystem {
    fn require_degree_context(&self, d: &Degree) -> Result<()> {
        if d.dynkin() == self.dynkin() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "degree was built for {} but the root system is {}",
                d.dynkin(),
                self.dynkin()
            )))
        }
    }

    /// Image of a coroot in the quotient `ZΔ∨/ZΔ∨_P`: drop the
    /// `Δ_P`-indexed coordinates.
    pub fn project(&self, c: &Coroot, p: &ParabolicSubset) -> Result<Degree> {
        let free = Degree::checked_free_indices(self, p)?;
        if c.coeffs().len() != self.rank() {
            return Err(Error::ContextMismatch(format!(
                "coroot has {} coefficients, rank is {}",
                c.coeffs().len(),
                self.rank()
            )));
        }
        Ok(Degree {
            dynkin: *self.dynkin(),
            parabolic: p.clone(),
            coeffs: free.iter().map(|&i| c.coeffs()[i - 1]).collect(),
        })
    }

    /// Shorthand for the degree of the curve class attached to a root:
    /// the image of `α∨` in `H₂(X)`.
    pub fn coroot_degree(&self, alpha: &Root, p: &ParabolicSubset) -> Result<Degree> {
        self.project(&self.coroot(alpha)?, p)
    }

    /// The maximal roots of `d`: the dominance-order maxima of
    /// `{α ∈ R⁺∖R⁺_P | α∨ + ZΔ∨_P ≤ d}`, sorted lexicographically.
    /// Empty exactly when `d = 0`.
    pub fn maximal_roots(&self, d: &Degree) -> Result<Vec<Root>> {
        self.require_degree_context(d)?;
        let p = d.parabolic();
        let free = d.free_indices();
        let mut candidates: Vec<&Root> = Vec::new();
        for alpha in self.positive_roots() {
            if self.in_parabolic_span(alpha, p) {
                continue;
            }
            let idx = self.root_index(alpha).expect("positive root is in the table");
            let coroot = self.coroot_by_index(idx).coeffs();
            if free
                .iter()
                .zip(d.coeffs())
                .all(|(&i, &bound)| coroot[i - 1] <= bound)
            {
                candidates.push(alpha);
            }
        }
        Ok(candidates
            .iter()
            .filter(|alpha| !candidates.iter().any(|gamma| root_lt(alpha, gamma)))
            .map(|alpha| (*alpha).clone())
            .collect())
    }

    /// Peel maximal roots off `d` until none remain, always choosing the
    /// lexicographically smallest maximal root. The zero degree yields the
    /// empty sequence.
    pub fn greedy_decomposition(&self, d: &Degree) -> Result<GreedyDecomposition> {
        self.require_degree_context(d)?;
        let mut parts = Vec::new();
        let mut residual = d.clone();
        loop {
            let maxima = self.maximal_roots(&residual)?;
            let Some(alpha) = maxima.into_iter().next() else {
                break;
            };
            let step = self.coroot_degree(&alpha, d.parabolic())?;
            residual = residual.minus(&step)?;
            parts.push(alpha);
        }
        Ok(GreedyDecomposition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    fn root(coeffs: &[i64]) -> Root {
        Root::new(coeffs.to_vec())
    }

    fn deg(r: &RootSystem, p: &ParabolicSubset, coeffs: &[i64]) -> Degree {
        Degree::from_coeffs(r, p, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn projection_examples() {
        let b2 = rs("B2");
        let none = ParabolicSubset::empty();
        // Empty parabolic: the identity map on coefficient vectors.
        let e1 = root(&[1, 1]);
        let c = b2.coroot(&e1).unwrap();
        assert_eq!(b2.project(&c, &none).unwrap().coeffs(), &[2, 1]);
        // Delta_P = {2}: drop the second coordinate.
        let p2 = ParabolicSubset::parse("2", 2).unwrap();
        assert_eq!(b2.project(&c, &p2).unwrap().coeffs(), &[2]);
        // A root inside R+_P projects to zero.
        let p1 = ParabolicSubset::parse("1", 2).unwrap();
        assert!(b2.coroot_degree(&root(&[1, 0]), &p1).unwrap().is_zero());
    }

    #[test]
    fn degree_order_examples() {
        let b2 = rs("B2");
        let none = ParabolicSubset::empty();
        let zero = Degree::zero(&b2, &none).unwrap();
        let d21 = deg(&b2, &none, &[2, 1]);
        let d11 = deg(&b2, &none, &[1, 1]);
        let d20 = deg(&b2, &none, &[2, 0]);
        assert!(zero.leq(&d21).unwrap());
        assert!(d11.leq(&d21).unwrap());
        assert!(!d20.leq(&d11).unwrap() && !d11.leq(&d20).unwrap());
    }

    #[test]
    fn cross_context_comparison_is_rejected() {
        let b2 = rs("B2");
        let none = ParabolicSubset::empty();
        let p1 = ParabolicSubset::parse("1", 2).unwrap();
        let a = deg(&b2, &none, &[1, 1]);
        let b = deg(&b2, &p1, &[1]);
        assert!(matches!(a.leq(&b), Err(Error::ContextMismatch(_))));
        let c2 = rs("C2");
        let c = deg(&c2, &none, &[1, 1]);
        assert!(a.leq(&c).is_err());
        assert!(c2.maximal_roots(&a).is_err());
    }

    #[test]
    fn maximal_roots_examples() {
        let b2 = rs("B2");
        let none = ParabolicSubset::empty();
        // d = θ∨: the highest root is its own maximal root.
        let d = deg(&b2, &none, &[1, 1]);
        assert_eq!(b2.maximal_roots(&d).unwrap(), vec![root(&[1, 2])]);
        // d = (2,1) = (e1)∨: the candidates are all γ with γ∨ ≤ (2,1) and
        // the unique dominance maximum among them is e1+e2.
        let d = deg(&b2, &none, &[2, 1]);
        assert_eq!(b2.maximal_roots(&d).unwrap(), vec![root(&[1, 2])]);
        // No positive root has α∨ ≤ 0.
        let zero = Degree::zero(&b2, &none).unwrap();
        assert!(b2.maximal_roots(&zero).unwrap().is_empty());
    }

    #[test]
    fn greedy_examples() {
        let b2 = rs("B2");
        let none = ParabolicSubset::empty();
        let zero = Degree::zero(&b2, &none).unwrap();
        assert!(b2.greedy_decomposition(&zero).unwrap().is_empty());
        // Peel e1+e2 (residual (1,0)), then β_1.
        let d = deg(&b2, &none, &[2, 1]);
        let g = b2.greedy_decomposition(&d).unwrap();
        assert_eq!(g.parts(), &[root(&[1, 2]), root(&[1, 0])]);
    }

    #[test]
    fn simply_laced_coroot_degrees_peel_in_one_step() {
        let a3 = rs("A3");
        for p in ParabolicSubset::enumerate_all(3) {
            for alpha in a3.positive_roots() {
                if a3.in_parabolic_span(alpha, &p) {
                    continue;
                }
                let d = a3.coroot_degree(alpha, &p).unwrap();
                assert_eq!(a3.greedy_decomposition(&d).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn peeling_is_sound() {
        for t in ["B3", "C3", "G2"] {
            let r = rs(t);
            let theta = r.highest_root().clone();
            for p in ParabolicSubset::enumerate_all(r.rank()) {
                let bound = r.coroot_degree(&theta, &p).unwrap();
                let bound = bound.plus(&bound).unwrap();
                for d in enumerate_degrees(&r, &p, &bound) {
                    let g = r.greedy_decomposition(&d).unwrap();
                    let mut total = Degree::zero(&r, &p).unwrap();
                    for part in g.parts() {
                        assert!(part.is_positive() && !r.in_parabolic_span(part, &p));
                        total = total.plus(&r.coroot_degree(part, &p).unwrap()).unwrap();
                    }
                    assert!(total.leq(&d).unwrap());
                    let residual = d.minus(&total).unwrap();
                    assert!(r.maximal_roots(&residual).unwrap().is_empty());
                }
            }
        }
    }

    /// All effective degrees bounded by `bound`, coefficientwise.
    fn enumerate_degrees(r: &RootSystem, p: &ParabolicSubset, bound: &Degree) -> Vec<Degree> {
        let mut out = vec![vec![]];
        for &b in bound.coeffs() {
            let mut next = Vec::new();
            for prefix in &out {
                for v in 0..=b {
                    let mut ext = prefix.clone();
                    ext.push(v);
                    next.push(ext);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|coeffs| Degree::from_coeffs(r, p, coeffs).unwrap())
            .collect()
    }

    /// Explore every tie-breaking choice of maximal root; collect the
    /// multisets of parts each leaf produces.
    fn all_greedy_multisets(
        r: &RootSystem,
        d: &Degree,
        acc: &mut Vec<Root>,
        out: &mut BTreeSet<Vec<Root>>,
    ) {
        let maxima = r.maximal_roots(d).unwrap();
        if maxima.is_empty() {
            let mut parts = acc.clone();
            parts.sort();
            out.insert(parts);
            return;
        }
        for alpha in maxima {
            let step = r.coroot_degree(&alpha, d.parabolic()).unwrap();
            let residual = d.minus(&step).unwrap();
            acc.push(alpha);
            all_greedy_multisets(r, &residual, acc, out);
            acc.pop();
        }
    }

    #[test]
    fn greedy_multiset_is_independent_of_tie_breaking() {
        for t in ["A2", "B2", "C3", "G2"] {
            let r = rs(t);
            let theta = r.highest_root().clone();
            for p in ParabolicSubset::enumerate_all(r.rank()) {
                let bound = r.coroot_degree(&theta, &p).unwrap();
                let bound = bound.plus(&bound).unwrap();
                for d in enumerate_degrees(&r, &p, &bound) {
                    let mut sets = BTreeSet::new();
                    all_greedy_multisets(&r, &d, &mut Vec::new(), &mut sets);
                    assert_eq!(sets.len(), 1, "{t}: d={d} P={p}", p = d.parabolic());
                    // The lex tie-break is one of the explored orders.
                    let mut greedy: Vec<Root> =
                        r.greedy_decomposition(&d).unwrap().parts().to_vec();
                    greedy.sort();
                    assert!(sets.contains(&greedy));
                }
            }
        }
    }

    #[test]
    fn degree_literals() {
        let b3 = rs("B3");
        let p = ParabolicSubset::parse("2", 3).unwrap();
        let d = Degree::parse(&b3, &p, "2,1").unwrap();
        assert_eq!(d.free_indices(), vec![1, 3]);
        assert_eq!(d.literal(), "2,1");
        assert!(Degree::parse(&b3, &p, "2,1,1").is_err());
        assert!(Degree::parse(&b3, &p, "-1,0").is_err());
        let full = ParabolicSubset::parse("1,2,3", 3).unwrap();
        assert!(Degree::parse(&b3, &full, "").unwrap().is_zero());
    }

    proptest! {
        // The coefficientwise comparison is a partial order.
        #[test]
        fn degree_leq_is_a_partial_order(
            a in proptest::collection::vec(0i64..5, 3),
            b in proptest::collection::vec(0i64..5, 3),
            c in proptest::collection::vec(0i64..5, 3),
        ) {
            let r = rs("B3");
            let p = ParabolicSubset::empty();
            let da = deg(&r, &p, &a);
            let db = deg(&r, &p, &b);
            let dc = deg(&r, &p, &c);
            prop_assert!(da.leq(&da).unwrap());
            if da.leq(&db).unwrap() && db.leq(&da).unwrap() {
                prop_assert_eq!(&da, &db);
            }
            if da.leq(&db).unwrap() && db.leq(&dc).unwrap() {
                prop_assert!(da.leq(&dc).unwrap());
            }
        }
    }
}
