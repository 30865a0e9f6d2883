//! Curve neighborhoods of Schubert classes, as pure Weyl-group data.
//!
//! The degree-`d` neighborhood of the point class is represented by the
//! minimal coset representative of the Hecke product
//! `s_{α_1} · s_{α_2} · … · s_{α_k}` over a greedy decomposition
//! `(α_1, …, α_k)` of `d`; the neighborhood of `X(w)` is then the class of
//! the Hecke product of `w` with that element. An independent route
//! recursively peels one maximal root at a time,
//! `(w, d) ↦ (w · s_α, d − α∨)`, and must land on the same class for every
//! choice of maximal root; the verification suite checks exactly that.

use std::collections::HashSet;

use crate::degrees::Degree;
use crate::error::Result;
use crate::rootsys::{DynkinType, ParabolicSubset, RootSystem};
use crate::weyl::WeylElement;

/// A Schubert class `X(w)`, canonicalized so that `rep` is the minimal
/// representative of its coset in `W/W_P`. Its dimension is the length of
/// the representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchubertClass {
    dynkin: DynkinType,
    parabolic: ParabolicSubset,
    rep: WeylElement,
}

impl SchubertClass {
    pub fn rep(&self) -> &WeylElement {
        &self.rep
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    pub fn dynkin(&self) -> &DynkinType {
        &self.dynkin
    }

    /// `dim X(w) = l(w)` for the minimal representative.
    pub fn dimension(&self, rs: &RootSystem) -> usize {
        rs.length(&self.rep)
    }
}

impl RootSystem {
    /// The class of `X(w)` in `G/P`: reduce `w` to its minimal coset
    /// representative.
    pub fn schubert_class(&self, w: &WeylElement, p: &ParabolicSubset) -> SchubertClass {
        SchubertClass {
            dynkin: *self.dynkin(),
            parabolic: p.clone(),
            rep: self.min_coset_rep(w, p),
        }
    }

    /// The element of `W^P` representing the degree-`d` neighborhood of the
    /// point class: the Hecke product of the reflections of the greedy
    /// parts of `d`, folded left to right and reduced to the minimal coset
    /// representative. The zero degree gives the identity.
    pub fn point_neighborhood(&self, d: &Degree) -> Result<WeylElement> {
        let parts = self.greedy_decomposition(d)?;
        let mut acc = WeylElement::identity(self.rank());
        for alpha in parts.parts() {
            let s = self.reflection(alpha)?;
            acc = self.hecke_product(&acc, &s);
        }
        Ok(self.min_coset_rep(&acc, d.parabolic()))
    }

    /// The degree-`d` curve neighborhood of `X(w)`: the class of the Hecke
    /// product of `w` with the point-neighborhood element. Always contains
    /// `X(w)` in Bruhat order and is monotone in `d`.
    pub fn curve_neighborhood(&self, w: &WeylElement, d: &Degree) -> Result<SchubertClass> {
        let z = self.point_neighborhood(d)?;
        Ok(self.schubert_class(&self.hecke_product(w, &z), d.parabolic()))
    }

    /// Independent route: peel one maximal root `α` of the residual degree
    /// at a time, replacing `(w, d)` by `(w · s_α, d − α∨)`, until no
    /// maximal root remains. Ties are broken by the lexicographically
    /// smallest maximal root; the result never depends on the choice.
    pub fn curve_neighborhood_recursive(
        &self,
        w: &WeylElement,
        d: &Degree,
    ) -> Result<SchubertClass> {
        let mut cur = w.clone();
        let mut residual = d.clone();
        loop {
            let maxima = self.maximal_roots(&residual)?;
            let Some(alpha) = maxima.into_iter().next() else {
                return Ok(self.schubert_class(&cur, d.parabolic()));
            };
            cur = self.hecke_product(&cur, &self.reflection(&alpha)?);
            residual = residual.minus(&self.coroot_degree(&alpha, d.parabolic())?)?;
        }
    }

    /// Run the peeling recursion down *every* choice of maximal root and
    /// collect the distinct final classes. A singleton set certifies
    /// choice-independence on this input.
    pub fn curve_neighborhood_all_choices(
        &self,
        w: &WeylElement,
        d: &Degree,
    ) -> Result<HashSet<SchubertClass>> {
        fn go(
            rs: &RootSystem,
            w: &WeylElement,
            d: &Degree,
            out: &mut HashSet<SchubertClass>,
        ) -> Result<()> {
            let maxima = rs.maximal_roots(d)?;
            if maxima.is_empty() {
                out.insert(rs.schubert_class(w, d.parabolic()));
                return Ok(());
            }
            for alpha in maxima {
                let next = rs.hecke_product(w, &rs.reflection(&alpha)?);
                let residual = d.minus(&rs.coroot_degree(&alpha, d.parabolic())?)?;
                go(rs, &next, &residual, out)?;
            }
            Ok(())
        }
        let mut out = HashSet::new();
        go(self, w, d, &mut out)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;
    use crate::weyl::Word;

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
    fn zero_degree_gives_the_identity() {
        let b2 = rs("B2");
        for p in ParabolicSubset::enumerate_all(2) {
            let zero = Degree::zero(&b2, &p).unwrap();
            assert!(b2.point_neighborhood(&zero).unwrap().is_identity());
        }
    }

    #[test]
    fn b2_saturating_degree_reaches_the_longest_element() {
        // Greedy((2,1)) = (e1+e2, β_1); the Hecke fold of the two
        // reflections fills out the whole group.
        let b2 = rs("B2");
        let none = ParabolicSubset::empty();
        let d = deg(&b2, &none, &[2, 1]);
        let z = b2.point_neighborhood(&d).unwrap();
        assert_eq!(z, b2.longest_element());
        // Cross-check the fold by hand: s_{e1+e2} · s_{β1}.
        let s_theta = b2.reflection(&root(&[1, 2])).unwrap();
        let s1 = b2.reflection(&root(&[1, 0])).unwrap();
        assert_eq!(b2.hecke_product(&s_theta, &s1), z);
    }

    #[test]
    fn p_cosmall_coroot_degree_gives_the_reflection_class() {
        for t in ["A3", "B3", "C3"] {
            let r = rs(t);
            for p in ParabolicSubset::enumerate_all(r.rank()) {
                for alpha in r.positive_roots() {
                    if r.in_parabolic_span(alpha, &p) {
                        continue;
                    }
                    if !r.is_p_cosmall_definitional(alpha, &p).unwrap().0 {
                        continue;
                    }
                    let d = r.coroot_degree(alpha, &p).unwrap();
                    let z = r.point_neighborhood(&d).unwrap();
                    let s = r.reflection(alpha).unwrap();
                    assert_eq!(z, r.min_coset_rep(&s, &p), "{t}: {alpha}");
                }
            }
        }
    }

    #[test]
    fn neighborhood_of_degree_zero_is_the_class_itself() {
        let a2 = rs("A2");
        let p = ParabolicSubset::parse("2", 2).unwrap();
        let w = a2.evaluate_word(&Word::parse("2 1", 2).unwrap()).unwrap();
        let zero = Degree::zero(&a2, &p).unwrap();
        let nbhd = a2.curve_neighborhood(&w, &zero).unwrap();
        assert_eq!(nbhd, a2.schubert_class(&w, &p));
    }

    #[test]
    fn neighborhood_of_identity_is_the_point_neighborhood() {
        let b2 = rs("B2");
        let none = ParabolicSubset::empty();
        let id = WeylElement::identity(2);
        for coeffs in [[0, 1], [1, 0], [1, 1], [2, 1], [2, 2]] {
            let d = deg(&b2, &none, &coeffs);
            let nbhd = b2.curve_neighborhood(&id, &d).unwrap();
            assert_eq!(nbhd.rep(), &b2.point_neighborhood(&d).unwrap());
        }
    }

    #[test]
    fn the_whole_space_absorbs_every_degree() {
        let b2 = rs("B2");
        let w0 = b2.longest_element();
        for p in ParabolicSubset::enumerate_all(2) {
            let theta_deg = b2.coroot_degree(b2.highest_root(), &p).unwrap();
            let bound = theta_deg.plus(&theta_deg).unwrap();
            for d in degrees_upto(&b2, &p, &bound) {
                let nbhd = b2.curve_neighborhood(&w0, &d).unwrap();
                assert_eq!(nbhd.rep(), &b2.min_coset_rep(&w0, &p));
            }
        }
    }

    #[test]
    fn recursion_agrees_with_the_hecke_formula_on_b2() {
        let b2 = rs("B2");
        for p in ParabolicSubset::enumerate_all(2) {
            let theta_deg = b2.coroot_degree(b2.highest_root(), &p).unwrap();
            let bound = theta_deg.plus(&theta_deg).unwrap();
            for w_word in all_words(&b2) {
                let w = b2.evaluate_word(&w_word).unwrap();
                for d in degrees_upto(&b2, &p, &bound) {
                    let a = b2.curve_neighborhood(&w, &d).unwrap();
                    let b = b2.curve_neighborhood_recursive(&w, &d).unwrap();
                    assert_eq!(a, b);
                    let all = b2.curve_neighborhood_all_choices(&w, &d).unwrap();
                    assert_eq!(all.len(), 1);
                    assert!(all.contains(&a));
                }
            }
        }
    }

    #[test]
    fn growth_and_monotonicity_on_small_systems() {
        for t in ["A2", "B2"] {
            let r = rs(t);
            for p in ParabolicSubset::enumerate_all(r.rank()) {
                let theta_deg = r.coroot_degree(r.highest_root(), &p).unwrap();
                let bound = theta_deg.plus(&theta_deg).unwrap();
                for w_word in all_words(&r) {
                    let w = r.evaluate_word(&w_word).unwrap();
                    let base = r.schubert_class(&w, &p);
                    let degrees = degrees_upto(&r, &p, &bound);
                    for d in &degrees {
                        let nbhd = r.curve_neighborhood(&w, d).unwrap();
                        // X(w) ⊆ Γ_d(X(w)).
                        assert!(r.bruhat_leq(base.rep(), nbhd.rep()));
                        assert!(r.length(nbhd.rep()) >= r.length(base.rep()));
                        // Monotone in d.
                        for d2 in &degrees {
                            if d.leq(d2).unwrap() {
                                let bigger = r.curve_neighborhood(&w, d2).unwrap();
                                assert!(r.bruhat_leq(nbhd.rep(), bigger.rep()));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twice_the_highest_coroot_saturates_outside_type_c() {
        for t in ["A2", "A3", "B2", "B3", "C2", "D3", "D4", "G2"] {
            let r = rs(t);
            let w0 = r.longest_element();
            for p in ParabolicSubset::enumerate_all(r.rank()) {
                let theta_deg = r.coroot_degree(r.highest_root(), &p).unwrap();
                let bound = theta_deg.plus(&theta_deg).unwrap();
                let z = r.point_neighborhood(&bound).unwrap();
                assert_eq!(z, r.min_coset_rep(&w0, &p), "{t}, P = {p}");
            }
        }
    }

    #[test]
    fn type_c_saturates_only_at_rank_many_copies() {
        // In C_l (l >= 3) the greedy parts of k·θ∨ are k copies of 2e_1,
        // and each Hecke factor s_{2e_i} only flips one more sign, so the
        // point neighborhood reaches the whole space first at k = l.
        let c3 = rs("C3");
        let none = ParabolicSubset::empty();
        let theta_deg = c3.coroot_degree(c3.highest_root(), &none).unwrap();
        let twice = theta_deg.plus(&theta_deg).unwrap();
        let z2 = c3.point_neighborhood(&twice).unwrap();
        assert_eq!(c3.length(&z2), 8);
        assert_ne!(z2, c3.longest_element());
        let thrice = twice.plus(&theta_deg).unwrap();
        let z3 = c3.point_neighborhood(&thrice).unwrap();
        assert_eq!(z3, c3.longest_element());
    }

    /// One word per group element, by breadth-first closure — a
    /// small-rank test helper covering the whole group.
    fn all_words(r: &RootSystem) -> Vec<Word> {
        let mut seen = std::collections::HashSet::new();
        let mut queue = std::collections::VecDeque::new();
        let id = WeylElement::identity(r.rank());
        seen.insert(id.clone());
        queue.push_back((id, Vec::new()));
        let mut out = Vec::new();
        while let Some((w, word)) = queue.pop_front() {
            out.push(Word::new(word.clone()));
            for i in 1..=r.rank() {
                let next = w.compose(&r.simple_reflection(i).unwrap());
                if seen.insert(next.clone()) {
                    let mut v = word.clone();
                    v.push(i);
                    queue.push_back((next, v));
                }
            }
        }
        out
    }

    fn degrees_upto(r: &RootSystem, p: &ParabolicSubset, bound: &Degree) -> Vec<Degree> {
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
}
