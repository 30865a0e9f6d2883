//! Root systems over the simple-root basis.
//!
//! A root is an integer coefficient vector over the simple roots
//! `β_1, …, β_l`. The full root table is generated by closing the simple
//! roots under all simple reflections, which is driven entirely by the
//! Cartan matrix, so the classical families and the exceptional types `F4`
//! and `G2` are handled by one code path.
//!
//! Conventions, fixed once and used everywhere:
//!
//! - squared lengths are normalized integers: short roots have squared
//!   length 1 where two lengths occur (3 for the long roots of `G2`,
//!   2 otherwise), and every root of a simply laced system has squared
//!   length 2 and counts as long;
//! - `cartan[i][j] = ⟨β_j, β_i∨⟩`;
//! - simple-root indices are 1-based in every public interface;
//! - all emitted root lists are sorted lexicographically on coefficient
//!   vectors (the derived `Ord` on [`Root`]); the componentwise dominance
//!   order of the root lattice is the separate [`root_leq`].
//!
//! For the classical families the simple roots are realized in the
//! standard basis `e_1, …, e_l` as `β_i = e_i − e_{i+1}`, with the last
//! simple root `e_l` (type B), `2e_l` (type C), or `e_{l−1} + e_l`
//! (type D). Type A with `r` simple roots lives in `R^{r+1}`. This
//! realization is only a conversion layer for display; all arithmetic
//! stays in the simple-root basis.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The supported Dynkin families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    F4,
    G2,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::F4 => 'F',
            Family::G2 => 'G',
        }
    }

    /// True for the families A, B, C, D.
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A Dynkin type: family plus rank (the number of simple roots).
///
/// Rank constraints: `A_l` needs `l ≥ 1`, `B_l` and `C_l` need `l ≥ 2`,
/// `D_l` needs `l ≥ 3`, and `F4`/`G2` have fixed rank. Note that type A is
/// indexed by its number of simple roots, so `A3` has simple roots
/// `β_1, β_2, β_3` and is realized inside `R^4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidRank {
            family: family.to_string(),
            rank,
            reason: reason.to_string(),
        };
        match family {
            Family::A if rank < 1 => return Err(invalid("type A needs rank >= 1")),
            Family::B | Family::C if rank < 2 => {
                return Err(invalid("types B and C need rank >= 2"))
            }
            Family::D if rank < 3 => return Err(invalid("type D needs rank >= 3")),
            Family::F4 if rank != 4 => return Err(invalid("F4 has rank exactly 4")),
            Family::G2 if rank != 2 => return Err(invalid("G2 has rank exactly 2")),
            _ => {}
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        self.family.is_classical()
    }

    /// True when all roots have one length (types A and D here).
    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D)
    }

    /// Dimension of the standard `e_i` realization (classical types only).
    pub fn ambient_dim(&self) -> Result<usize> {
        match self.family {
            Family::A => Ok(self.rank + 1),
            Family::B | Family::C | Family::D => Ok(self.rank),
            _ => Err(Error::NonClassicalTable(self.to_string())),
        }
    }

    /// Cartan matrix with entries `cartan[i][j] = ⟨β_j, β_i∨⟩` (0-based here).
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut m = vec![vec![0i64; l]; l];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |m: &mut Vec<Vec<i64>>, upto: usize| {
            for i in 0..upto {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        };
        match self.family {
            Family::A => chain(&mut m, l - 1),
            Family::B => {
                chain(&mut m, l - 1);
                // β_l = e_l is short: ⟨β_{l-1}, β_l∨⟩ = -2.
                m[l - 1][l - 2] = -2;
            }
            Family::C => {
                chain(&mut m, l - 1);
                // β_l = 2e_l is long: ⟨β_l, β_{l-1}∨⟩ = -2.
                m[l - 2][l - 1] = -2;
            }
            Family::D => {
                chain(&mut m, l - 2);
                m[l - 1][l - 3] = -1;
                m[l - 3][l - 1] = -1;
            }
            Family::F4 => {
                chain(&mut m, 3);
                m[2][1] = -2;
            }
            Family::G2 => {
                m[0][1] = -3;
                m[1][0] = -1;
            }
        }
        m
    }

    /// Normalized squared lengths of the simple roots.
    fn simple_squared_lengths(&self) -> Vec<i64> {
        let l = self.rank;
        match self.family {
            Family::A | Family::D => vec![2; l],
            Family::B => {
                let mut v = vec![2; l];
                v[l - 1] = 1;
                v
            }
            Family::C => {
                let mut v = vec![1; l];
                v[l - 1] = 2;
                v
            }
            Family::F4 => vec![2, 2, 1, 1],
            Family::G2 => vec![1, 3],
        }
    }

    /// The Dynkin type whose roots are this type's coroots (B and C swap).
    pub fn dual(&self) -> DynkinType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            other => other,
        };
        DynkinType {
            family,
            rank: self.rank,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadDynkinLiteral(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'F' => Family::F4,
            'G' => Family::G2,
            _ => return Err(bad()),
        };
        DynkinType::new(family, rank)
    }
}

impl TryFrom<String> for DynkinType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DynkinType> for String {
    fn from(d: DynkinType) -> String {
        d.to_string()
    }
}

fn coeffs_str(coeffs: &[i64]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|_| Error::BadLiteral {
                input: s.to_string(),
                reason: format!("`{}` is not an integer", tok.trim()),
            })
        })
        .collect()
}

/// A root, stored as integer coefficients over the simple-root basis.
///
/// The derived `Ord` is lexicographic and is used only for deterministic
/// ordering of output; the dominance order of the root lattice is
/// [`root_leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// All coefficients `≥ 0` and not all zero.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c != 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c != 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    /// 1-based indices of the nonzero coefficients.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
    }

    /// Comma-separated literal, e.g. `1,2` for `β_1 + 2β_2`.
    pub fn literal(&self) -> String {
        coeffs_str(&self.coeffs)
    }

    /// Parse a comma-separated literal of the given rank. Membership in a
    /// concrete root system is checked separately by the operations.
    pub fn parse_literal(s: &str, rank: usize) -> Result<Root> {
        let coeffs = parse_int_list(s)?;
        if coeffs.len() != rank {
            return Err(Error::BadLiteral {
                input: s.to_string(),
                reason: format!("expected {} coefficients, got {}", rank, coeffs.len()),
            });
        }
        Ok(Root::new(coeffs))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

/// `a ≤ b` in the dominance order: every coefficient of `b − a` is `≥ 0`.
pub fn root_leq(a: &Root, b: &Root) -> bool {
    assert_eq!(a.rank(), b.rank(), "roots from different ranks");
    a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x <= y)
}

/// Strict dominance: `a ≤ b` and `a ≠ b`.
pub fn root_lt(a: &Root, b: &Root) -> bool {
    a != b && root_leq(a, b)
}

/// A coroot `α∨ = 2α/(α,α)`, as integer coefficients over the simple
/// coroots `β_1∨, …, β_l∨`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coroot {
    coeffs: Vec<i64>,
}

impl Coroot {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn literal(&self) -> String {
        coeffs_str(&self.coeffs)
    }
}

impl fmt::Display for Coroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

/// The subset `Δ_P ⊆ Δ` of simple roots defining a parabolic subgroup,
/// stored as 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParabolicSubset {
    members: BTreeSet<usize>,
}

impl ParabolicSubset {
    pub fn new(members: impl IntoIterator<Item = usize>, rank: usize) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        for &i in &members {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
        }
        Ok(ParabolicSubset { members })
    }

    pub fn empty() -> Self {
        ParabolicSubset {
            members: BTreeSet::new(),
        }
    }

    /// Parse a comma-separated list of simple indices; the empty string is
    /// the empty subset (so `P = B`).
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let ints = parse_int_list(s)?;
        let mut members = BTreeSet::new();
        for v in ints {
            if v <= 0 || v as usize > rank {
                return Err(Error::IndexOutOfRange {
                    index: v.max(0) as usize,
                    rank,
                });
            }
            members.insert(v as usize);
        }
        Ok(ParabolicSubset { members })
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(&index)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Ascending list of the simple indices not in the subset.
    pub fn complement(&self, rank: usize) -> Vec<usize> {
        (1..=rank).filter(|i| !self.members.contains(i)).collect()
    }

    /// All `2^rank` subsets, for exhaustive sweeps.
    pub fn enumerate_all(rank: usize) -> Vec<ParabolicSubset> {
        let mut out = Vec::with_capacity(1 << rank);
        for mask in 0u32..(1 << rank) {
            let members = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0);
            out.push(ParabolicSubset {
                members: members.collect(),
            });
        }
        out
    }

    pub fn literal(&self) -> String {
        self.members
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.literal())
    }
}

/// An immutable table of all roots of a Dynkin type, with pairing data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    positives: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    coroots: Vec<Coroot>,
    sq: Vec<i64>,
    max_sq: i64,
    highest: Root,
}

impl RootSystem {
    /// Generate the full root table by closing the simple roots under all
    /// simple reflections.
    pub fn new(dynkin: DynkinType) -> Self {
        let l = dynkin.rank();
        let cartan = dynkin.cartan_matrix();
        let simple_sq = dynkin.simple_squared_lengths();

        // Reflection closure. Simple reflections preserve lengths, so each
        // root inherits the squared length of the simple root whose orbit
        // it lies in.
        let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..l {
            let mut v = vec![0i64; l];
            v[i] = 1;
            seen.insert(v.clone(), simple_sq[i]);
            queue.push(v);
        }
        while let Some(v) = queue.pop() {
            let sq = seen[&v];
            for i in 0..l {
                let pairing: i64 = (0..l).map(|j| cartan[i][j] * v[j]).sum();
                let mut w = v.clone();
                w[i] -= pairing;
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), sq);
                    queue.push(w);
                }
            }
        }

        let mut roots: Vec<Root> = seen.keys().cloned().map(Root::new).collect();
        roots.sort();
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs.clone(), k))
            .collect();
        let sq: Vec<i64> = roots.iter().map(|r| seen[&r.coeffs]).collect();
        let max_sq = sq.iter().copied().max().expect("nonempty root system");

        // α∨ = Σ_i c_i (β_i, β_i)/(α, α) β_i∨; the divisions are exact.
        let coroots: Vec<Coroot> = roots
            .iter()
            .zip(&sq)
            .map(|(r, &d)| {
                let coeffs = r
                    .coeffs
                    .iter()
                    .zip(&simple_sq)
                    .map(|(&c, &di)| {
                        let num = c * di;
                        assert_eq!(num % d, 0, "coroot coefficients must be integral");
                        num / d
                    })
                    .collect();
                Coroot { coeffs }
            })
            .collect();

        let positives: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        let maxima: Vec<&Root> = positives
            .iter()
            .filter(|r| !positives.iter().any(|s| root_lt(r, s)))
            .collect();
        assert_eq!(maxima.len(), 1, "irreducible system has a unique highest root");
        let highest = maxima[0].clone();

        RootSystem {
            dynkin,
            cartan,
            roots,
            positives,
            index,
            coroots,
            sq,
            max_sq,
            highest,
        }
    }

    /// Build from a type literal such as `"B4"`.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(RootSystem::new(s.parse()?))
    }

    pub fn dynkin(&self) -> &DynkinType {
        &self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    /// `cartan(i, j) = ⟨β_j, β_i∨⟩`, with 1-based indices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// All roots, sorted lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// The positive roots, sorted lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positives
    }

    pub fn num_positive(&self) -> usize {
        self.positives.len()
    }

    pub fn contains(&self, r: &Root) -> bool {
        r.rank() == self.rank() && self.index.contains_key(&r.coeffs)
    }

    pub(crate) fn root_index(&self, r: &Root) -> Option<usize> {
        if r.rank() == self.rank() {
            self.index.get(&r.coeffs).copied()
        } else {
            None
        }
    }

    fn require_root(&self, r: &Root) -> Result<usize> {
        self.root_index(r)
            .ok_or_else(|| Error::RootNotInSystem(r.literal()))
    }

    pub(crate) fn require_positive(&self, r: &Root) -> Result<usize> {
        let idx = self.require_root(r)?;
        if !r.is_positive() {
            return Err(Error::RootNotPositive(r.literal()));
        }
        Ok(idx)
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        let mut coeffs = vec![0i64; self.rank()];
        coeffs[i - 1] = 1;
        Ok(Root::new(coeffs))
    }

    /// The unique root dominating all positive roots.
    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    /// Normalized squared length class of a root.
    pub fn squared_length(&self, r: &Root) -> Result<i64> {
        Ok(self.sq[self.require_root(r)?])
    }

    /// A root is short when a strictly longer root exists in the system.
    /// In a simply laced system every root is long.
    pub fn is_short(&self, r: &Root) -> Result<bool> {
        Ok(self.squared_length(r)? < self.max_sq)
    }

    pub fn is_long(&self, r: &Root) -> Result<bool> {
        Ok(self.squared_length(r)? == self.max_sq)
    }

    /// The coroot `α∨ = 2α/(α,α)` over the simple-coroot basis.
    pub fn coroot(&self, r: &Root) -> Result<Coroot> {
        Ok(self.coroots[self.require_root(r)?].clone())
    }

    pub(crate) fn coroot_by_index(&self, idx: usize) -> &Coroot {
        &self.coroots[idx]
    }

    /// `⟨x, β∨⟩` for an arbitrary lattice vector `x` and a root `β`.
    pub(crate) fn pairing_coeffs(&self, x: &[i64], beta_idx: usize) -> i64 {
        let a = &self.coroots[beta_idx].coeffs;
        let mut acc = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai != 0 {
                let s: i64 = self.cartan[i].iter().zip(x).map(|(c, v)| c * v).sum();
                acc += ai * s;
            }
        }
        acc
    }

    /// `⟨α, β∨⟩` for roots `α, β`.
    pub fn pairing(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        self.require_root(alpha)?;
        let b = self.require_root(beta)?;
        Ok(self.pairing_coeffs(&alpha.coeffs, b))
    }

    /// The largest `k ≥ 0` with `α + kβ` still a root, together with the
    /// endpoint `α + kβ`. The endpoint is never shorter than `α`.
    pub fn root_string_reach(&self, alpha: &Root, beta: &Root) -> Result<(u32, Root)> {
        self.require_root(alpha)?;
        self.require_root(beta)?;
        if alpha == beta || *alpha == beta.negated() {
            return Err(Error::ProportionalRoots(alpha.literal(), beta.literal()));
        }
        let mut k = 0u32;
        let mut end = alpha.clone();
        loop {
            let next = Root::new(
                end.coeffs
                    .iter()
                    .zip(&beta.coeffs)
                    .map(|(a, b)| a + b)
                    .collect(),
            );
            if self.contains(&next) {
                k += 1;
                end = next;
            } else {
                return Ok((k, end));
            }
        }
    }

    /// `Δ(α) = {β ∈ Δ | α + β ∈ R}`, returned as ascending 1-based indices.
    pub fn delta_set(&self, alpha: &Root) -> Result<Vec<usize>> {
        self.require_positive(alpha)?;
        let mut out = Vec::new();
        for i in 1..=self.rank() {
            let mut v = alpha.coeffs.clone();
            v[i - 1] += 1;
            if self.index.contains_key(&v) {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// True when the support of `α` lies inside `Δ_P`, i.e. `α ∈ R_P`.
    pub fn in_parabolic_span(&self, alpha: &Root, p: &ParabolicSubset) -> bool {
        alpha.support().all(|i| p.contains(i))
    }

    /// Validate a coefficient vector as a root of this system.
    pub fn root_from_coeffs(&self, coeffs: Vec<i64>) -> Result<Root> {
        let r = Root::new(coeffs);
        self.require_root(&r)?;
        Ok(r)
    }

    /// Parse and validate a root literal like `"1,2"`.
    pub fn parse_root(&self, s: &str) -> Result<Root> {
        let r = Root::parse_literal(s, self.rank())?;
        self.require_root(&r)?;
        Ok(r)
    }

    /// Coordinates of a root in the standard `e_i` realization
    /// (classical types only).
    pub fn e_coords(&self, r: &Root) -> Result<Vec<i64>> {
        self.require_root(r)?;
        let dim = self.dynkin.ambient_dim()?;
        let l = self.rank();
        let mut out = vec![0i64; dim];
        for (i, &c) in r.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // β_{i+1} in e-coordinates.
            match self.dynkin.family {
                Family::A => {
                    out[i] += c;
                    out[i + 1] -= c;
                }
                Family::B => {
                    out[i] += c;
                    if i + 1 < l {
                        out[i + 1] -= c;
                    }
                }
                Family::C => {
                    if i + 1 < l {
                        out[i] += c;
                        out[i + 1] -= c;
                    } else {
                        out[i] += 2 * c;
                    }
                }
                Family::D => {
                    if i + 1 < l {
                        out[i] += c;
                        out[i + 1] -= c;
                    } else {
                        out[l - 2] += c;
                        out[l - 1] += c;
                    }
                }
                _ => unreachable!("ambient_dim rejected non-classical types"),
            }
        }
        Ok(out)
    }

    /// Display label in the `e_i` realization, e.g. `e1-e3` or `2e1`.
    pub fn e_label(&self, r: &Root) -> Result<String> {
        Ok(crate::table::e_label_from_coords(&self.e_coords(r)?))
    }
}
