//! Weyl group elements, lengths, reduced words, the Hecke product, Bruhat
//! order, and minimal coset representatives modulo a parabolic subgroup.
//!
//! An element is stored in canonical form as the integer matrix of its
//! action on the simple-root basis (row `i` is the image of `β_{i+1}`), so
//! equality is matrix equality and no word normalization is ever needed.
//! Words are derived artifacts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{ParabolicSubset, Root, RootSystem};

/// A Weyl group element as its matrix action on the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    // Row-major; row i holds the coefficients of w(β_{i+1}).
    rows: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut rows = vec![0i64; rank * rank];
        for i in 0..rank {
            rows[i * rank + i] = 1;
        }
        WeylElement { rank, rows }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    fn row(&self, i: usize) -> &[i64] {
        &self.rows[i * self.rank..(i + 1) * self.rank]
    }

    /// Image of a coefficient vector under the action.
    pub fn apply(&self, coeffs: &[i64]) -> Vec<i64> {
        assert_eq!(coeffs.len(), self.rank, "rank mismatch");
        let mut out = vec![0i64; self.rank];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for (o, r) in out.iter_mut().zip(self.row(i)) {
                    *o += c * r;
                }
            }
        }
        out
    }

    /// Image of a root. The action permutes the root system, so the result
    /// of applying an element to a root of the same system is again a root.
    pub fn apply_root(&self, r: &Root) -> Root {
        Root::new(self.apply(r.coeffs()))
    }

    /// Group composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut rows = Vec::with_capacity(self.rank * self.rank);
        for i in 0..self.rank {
            rows.extend(self.apply(other.row(i)));
        }
        WeylElement {
            rank: self.rank,
            rows,
        }
    }

    // Sign of w(β_{i+1}): roots have uniformly signed coefficients, so the
    // first nonzero entry decides.
    fn row_is_negative(&self, i: usize) -> bool {
        self.row(i)
            .iter()
            .find(|&&c| c != 0)
            .map(|&c| c < 0)
            .unwrap_or(false)
    }
}

/// A word in the simple reflections, as 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parse a whitespace-separated word such as `"1 2 1"`; the empty
    /// string is the empty word.
    pub fn parse(s: &str, rank: usize) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let i: usize = tok.parse().map_err(|_| Error::BadLiteral {
                input: s.to_string(),
                reason: format!("`{tok}` is not a simple-root index"),
            })?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            letters.push(i);
        }
        Ok(Word { letters })
    }

    pub fn literal(&self) -> String {
        self.letters
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

impl RootSystem {
    fn check_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(i - 1)
    }

    fn check_element(&self, w: &WeylElement) {
        assert_eq!(w.rank(), self.rank(), "element from a different rank");
    }

    /// The simple reflection `s_{β_i}`.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        let i0 = self.check_index(i)?;
        let l = self.rank();
        let mut w = WeylElement::identity(l);
        // s_i(β_j) = β_j − ⟨β_j, β_i∨⟩ β_i.
        for j in 0..l {
            w.rows[j * l + i0] -= self.cartan(i0 + 1, j + 1);
        }
        Ok(w)
    }

    /// The reflection `s_α(x) = x − ⟨x, α∨⟩ α` for any root `α`.
    pub fn reflection(&self, alpha: &Root) -> Result<WeylElement> {
        let idx = self
            .root_index(alpha)
            .ok_or_else(|| Error::RootNotInSystem(alpha.literal()))?;
        let l = self.rank();
        let mut rows = Vec::with_capacity(l * l);
        for j in 0..l {
            let mut unit = vec![0i64; l];
            unit[j] = 1;
            let k = self.pairing_coeffs(&unit, idx);
            for (x, &a) in unit.iter_mut().zip(alpha.coeffs()) {
                *x -= k * a;
            }
            rows.extend(unit);
        }
        Ok(WeylElement { rank: l, rows })
    }

    /// Right multiplication by a simple reflection: `w ↦ w s_i`.
    pub(crate) fn right_multiply(&self, w: &WeylElement, i: usize) -> WeylElement {
        self.check_element(w);
        let i0 = i - 1;
        let l = self.rank();
        let mut out = w.clone();
        // (w s_i)(β_j) = w(β_j) − ⟨β_j, β_i∨⟩ w(β_i).
        for j in 0..l {
            let c = self.cartan(i, j + 1);
            if c != 0 {
                for k in 0..l {
                    out.rows[j * l + k] -= c * w.rows[i0 * l + k];
                }
            }
        }
        out
    }

    /// `l(w s_i) < l(w)`, read off from the sign of `w(β_i)`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> Result<bool> {
        let i0 = self.check_index(i)?;
        self.check_element(w);
        Ok(w.row_is_negative(i0))
    }

    /// Length = number of positive roots sent to negative roots; equals the
    /// minimal number of simple reflections multiplying to `w`.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.check_element(w);
        self.positive_roots()
            .iter()
            .filter(|r| {
                let img = w.apply(r.coeffs());
                img.iter().find(|&&c| c != 0).map(|&c| c < 0).unwrap_or(false)
            })
            .count()
    }

    /// The inversion set `{α ∈ R⁺ | w(α) ∈ R⁻}`.
    pub fn inversions(&self, w: &WeylElement) -> Vec<Root> {
        self.check_element(w);
        self.positive_roots()
            .iter()
            .filter(|r| w.apply_root(r).is_negative())
            .cloned()
            .collect()
    }

    /// Deterministic reduced word: repeatedly strip the smallest right
    /// descent (`w ↦ w s_i`), collecting letters from the right end of the
    /// word inward.
    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        self.check_element(w);
        let mut letters = Vec::new();
        let mut cur = w.clone();
        loop {
            let descent = (1..=self.rank()).find(|&i| cur.row_is_negative(i - 1));
            match descent {
                Some(i) => {
                    letters.push(i);
                    cur = self.right_multiply(&cur, i);
                }
                None => break,
            }
        }
        debug_assert!(cur.is_identity());
        letters.reverse();
        Word::new(letters)
    }

    /// Evaluate a word as a product of simple reflections (group product;
    /// the word need not be reduced).
    pub fn evaluate_word(&self, word: &Word) -> Result<WeylElement> {
        let mut w = WeylElement::identity(self.rank());
        for &i in word.letters() {
            self.check_index(i)?;
            w = self.right_multiply(&w, i);
        }
        Ok(w)
    }

    /// One Hecke step: `u · s_i = u s_i` if that is longer, else `u`.
    pub fn hecke_step(&self, u: &WeylElement, i: usize) -> Result<WeylElement> {
        let i0 = self.check_index(i)?;
        self.check_element(u);
        if u.row_is_negative(i0) {
            Ok(u.clone())
        } else {
            Ok(self.right_multiply(u, i))
        }
    }

    /// The Hecke (Demazure) product `u · v`: fold the Hecke step over a
    /// reduced word of `v`, left to right. The result is independent of the
    /// chosen reduced word.
    pub fn hecke_product(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let mut acc = u.clone();
        for &i in self.reduced_word(v).letters() {
            acc = self.hecke_step(&acc, i).expect("index from reduced word");
        }
        acc
    }

    /// The unique shortest element of the coset `w W_P`. It maps every
    /// positive root of `R⁺_P` to a positive root.
    pub fn min_coset_rep(&self, w: &WeylElement, p: &ParabolicSubset) -> WeylElement {
        self.check_element(w);
        let mut cur = w.clone();
        loop {
            let descent = p.members().find(|&i| cur.row_is_negative(i - 1));
            match descent {
                Some(i) => cur = self.right_multiply(&cur, i),
                None => return cur,
            }
        }
    }

    /// Bruhat order via the subword property, evaluated against the fixed
    /// reduced word of `w` by the right-descent lifting rule.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        self.check_element(u);
        self.check_element(w);
        if self.length(u) > self.length(w) {
            return false;
        }
        let word = self.reduced_word(w);
        let mut x = u.clone();
        for &i in word.letters().iter().rev() {
            if x.row_is_negative(i - 1) {
                x = self.right_multiply(&x, i);
            }
        }
        x.is_identity()
    }

    /// Membership in the parabolic subgroup `W_P`: every inversion of `w`
    /// must lie in `R⁺_P`.
    pub fn in_wp(&self, w: &WeylElement, p: &ParabolicSubset) -> bool {
        self.check_element(w);
        self.positive_roots().iter().all(|r| {
            if w.apply_root(r).is_negative() {
                self.in_parabolic_span(r, p)
            } else {
                true
            }
        })
    }

    /// The longest element, built by greedy ascent from the identity.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = WeylElement::identity(self.rank());
        loop {
            let ascent = (1..=self.rank()).find(|&i| !w.row_is_negative(i - 1));
            match ascent {
                Some(i) => w = self.right_multiply(&w, i),
                None => return w,
            }
        }
    }
}
