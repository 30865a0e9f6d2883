//! Per-type summary tables of cosmall roots for the classical families.
//!
//! Each table lists the simple roots, the long/short split where two
//! lengths occur, and every cosmall root with its description in the
//! standard `e_i` realization, its simple-root expansion, and `Δ(α)`.
//! Everything is rank-instantiated: index sets are concrete, never
//! symbolic, and an index that would fall outside `1..=rank` is simply
//! not a member.
//!
//! Two independent generators are provided. [`RootSystem::table`] computes
//! everything from first principles (root enumeration, the cosmall
//! definition, the `Δ(α)` definition). [`table_closed_form`] instantiates
//! the known closed-form index patterns for each family without ever
//! enumerating a root system. The verification suite requires the two to
//! agree exactly.
//!
//! All row and list orderings are lexicographic on simple-root coefficient
//! vectors, so emitted tables are stable and diffable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{DynkinType, Family, RootSystem};

/// One cosmall root row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// Display label in the `e_i` realization, e.g. `e1-e3` or `2e1`.
    pub root: String,
    /// Coordinates in the standard basis `e_1..e_l`.
    pub coords_e: Vec<i64>,
    /// Coefficients over the simple roots `β_1..β_rank`.
    pub coords_simple: Vec<i64>,
    /// `Δ(α)` as ascending simple indices.
    pub delta_set: Vec<usize>,
}

/// The full table for one classical type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub dynkin: String,
    pub rank: usize,
    /// The simple roots in the `e_i` realization, in index order.
    pub simple: Vec<String>,
    /// Labels of the long positive roots (all of them, when one length).
    pub long: Vec<String>,
    /// Labels of the short positive roots (empty when one length).
    pub short: Vec<String>,
    pub cosmall: Vec<TableRow>,
}

/// Format `e`-coordinates as a label: `e1-e3`, `e2`, `2e1`, `e1+e2`.
pub(crate) fn e_label_from_coords(coords: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("e{}", i + 1));
    }
    out
}

impl RootSystem {
    /// Emit the table for this (classical) type from first principles:
    /// the cosmall set and each `Δ(α)` are computed from their
    /// definitions on the generated root table.
    pub fn table(&self) -> Result<Table> {
        self.dynkin().ambient_dim()?;
        let mut simple = Vec::new();
        for i in 1..=self.rank() {
            simple.push(self.e_label(&self.simple_root(i)?)?);
        }
        let mut long = Vec::new();
        let mut short = Vec::new();
        for alpha in self.positive_roots() {
            if self.is_long(alpha)? {
                long.push(self.e_label(alpha)?);
            } else {
                short.push(self.e_label(alpha)?);
            }
        }
        let mut cosmall = Vec::new();
        for alpha in self.positive_roots() {
            if !self.is_cosmall(alpha)?.0 {
                continue;
            }
            cosmall.push(TableRow {
                root: self.e_label(alpha)?,
                coords_e: self.e_coords(alpha)?,
                coords_simple: alpha.coeffs().to_vec(),
                delta_set: self.delta_set(alpha)?,
            });
        }
        Ok(Table {
            dynkin: self.dynkin().to_string(),
            rank: self.rank(),
            simple,
            long,
            short,
            cosmall,
        })
    }
}

// ---------------------------------------------------------------------
// Closed-form generator: instantiates the per-family index patterns
// without enumerating a root system.
// ---------------------------------------------------------------------

struct RowBuilder {
    rank: usize,
    dim: usize,
}

impl RowBuilder {
    // Simple coefficients: `ones` and `twos` are inclusive 1-based index
    // ranges (empty when start > end), `extra` adds single +1 entries.
    fn coeffs(&self, ones: (usize, usize), twos: (usize, usize), extra: &[usize]) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        let (a, b) = ones;
        for i in a..=b.min(self.rank) {
            v[i - 1] += 1;
        }
        let (a, b) = twos;
        for i in a..=b.min(self.rank) {
            v[i - 1] += 2;
        }
        for &i in extra {
            v[i - 1] += 1;
        }
        v
    }

    fn e_vec(&self, entries: &[(usize, i64)]) -> Vec<i64> {
        let mut v = vec![0i64; self.dim];
        for &(i, c) in entries {
            v[i - 1] += c;
        }
        v
    }

    fn row(
        &self,
        e_entries: &[(usize, i64)],
        coords_simple: Vec<i64>,
        delta: &[i64],
    ) -> TableRow {
        let coords_e = self.e_vec(e_entries);
        // Out-of-range indices are not members of Δ(α).
        let mut delta_set: Vec<usize> = delta
            .iter()
            .filter(|&&i| i >= 1 && i <= self.rank as i64)
            .map(|&i| i as usize)
            .collect();
        delta_set.sort_unstable();
        delta_set.dedup();
        TableRow {
            root: e_label_from_coords(&coords_e),
            coords_e,
            coords_simple,
            delta_set,
        }
    }
}

fn remove(delta: Vec<i64>, banned: i64) -> Vec<i64> {
    delta.into_iter().filter(|&x| x != banned).collect()
}

/// Emit the table for a classical type by instantiating the closed-form
/// index patterns at the given rank. Independent of [`RootSystem::table`];
/// the two must agree on every type.
pub fn table_closed_form(dynkin: &DynkinType) -> Result<Table> {
    let rank = dynkin.rank();
    let dim = dynkin.ambient_dim()?;
    let b = RowBuilder { rank, dim };
    let l = dim; // index patterns run over e_1..e_l; for type A, l = rank + 1

    // (row, is_long); the cosmall flag is tracked separately below.
    let mut positives: Vec<(TableRow, bool)> = Vec::new();
    let mut cosmall: Vec<TableRow> = Vec::new();

    match dynkin.family() {
        Family::A => {
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    let row = b.row(
                        &[(i, 1), (j, -1)],
                        b.coeffs((i, j - 1), (1, 0), &[]),
                        &[i as i64 - 1, j as i64],
                    );
                    positives.push((row.clone(), true));
                    cosmall.push(row);
                }
            }
        }
        Family::B => {
            // Long: e_i − e_j and e_i + e_j; short: e_i. Cosmall: the long
            // roots together with e_l = β_l.
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    let diff = b.row(
                        &[(i, 1), (j, -1)],
                        b.coeffs((i, j - 1), (1, 0), &[]),
                        &[i as i64 - 1, j as i64],
                    );
                    positives.push((diff.clone(), true));
                    cosmall.push(diff);
                    let sum = b.row(
                        &[(i, 1), (j, 1)],
                        b.coeffs((i, j - 1), (j, l), &[]),
                        &remove(vec![i as i64 - 1, j as i64 - 1], i as i64),
                    );
                    positives.push((sum.clone(), true));
                    cosmall.push(sum);
                }
            }
            for i in 1..=l {
                let single = b.row(
                    &[(i, 1)],
                    b.coeffs((i, l), (1, 0), &[]),
                    &[l as i64 - 1],
                );
                if i == l {
                    cosmall.push(single.clone());
                }
                positives.push((single, false));
            }
        }
        Family::C => {
            // Long: 2e_i; short: e_i − e_j and e_i + e_j. Cosmall: 2e_i
            // and the short differences e_i − e_j.
            for i in 1..=l {
                let double = b.row(
                    &[(i, 2)],
                    b.coeffs((1, 0), (i, l - 1), &[l]),
                    &[i as i64 - 1],
                );
                positives.push((double.clone(), true));
                cosmall.push(double);
            }
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    let diff = b.row(
                        &[(i, 1), (j, -1)],
                        b.coeffs((i, j - 1), (1, 0), &[]),
                        &[i as i64 - 1, j as i64],
                    );
                    positives.push((diff.clone(), false));
                    cosmall.push(diff);
                    let sum = b.row(
                        &[(i, 1), (j, 1)],
                        b.coeffs((i, j - 1), (j, l - 1), &[l]),
                        &[],
                    );
                    positives.push((sum, false));
                }
            }
        }
        Family::D => {
            // Everything is cosmall. The fork at the end of the diagram
            // makes three special patterns: the root β_{l−1} = e_{l−1}−e_l,
            // the roots e_i − e_{l−1} sitting just before the fork (both
            // antennas extend them), and the sums e_i + e_l through β_l.
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    let delta: Vec<i64> = if (i, j) == (l - 1, l) {
                        vec![i as i64 - 1]
                    } else if j == l - 1 {
                        vec![i as i64 - 1, l as i64 - 1, l as i64]
                    } else {
                        vec![i as i64 - 1, j as i64]
                    };
                    let diff = b.row(
                        &[(i, 1), (j, -1)],
                        b.coeffs((i, j - 1), (1, 0), &[]),
                        &delta,
                    );
                    positives.push((diff.clone(), true));
                    cosmall.push(diff);
                }
            }
            for i in 1..=l - 1 {
                let sum = b.row(
                    &[(i, 1), (l, 1)],
                    b.coeffs((i, l - 2), (1, 0), &[l]),
                    &remove(vec![i as i64 - 1, l as i64 - 1], i as i64),
                );
                positives.push((sum.clone(), true));
                cosmall.push(sum);
            }
            for i in 1..=l - 2 {
                for j in i + 1..=l - 1 {
                    let sum = b.row(
                        &[(i, 1), (j, 1)],
                        b.coeffs((i, j - 1), (j, l - 2), &[l - 1, l]),
                        &remove(vec![i as i64 - 1, j as i64 - 1], i as i64),
                    );
                    positives.push((sum.clone(), true));
                    cosmall.push(sum);
                }
            }
        }
        _ => return Err(Error::NonClassicalTable(dynkin.to_string())),
    }

    positives.sort_by(|a, b| a.0.coords_simple.cmp(&b.0.coords_simple));
    cosmall.sort_by(|a, b| a.coords_simple.cmp(&b.coords_simple));

    let simple = (1..=rank)
        .map(|i| {
            let mut unit = vec![0i64; rank];
            unit[i - 1] = 1;
            let row = positives
                .iter()
                .find(|(r, _)| r.coords_simple == unit)
                .expect("simple roots appear among the positive rows");
            row.0.root.clone()
        })
        .collect();
    let long = positives
        .iter()
        .filter(|(_, is_long)| *is_long)
        .map(|(r, _)| r.root.clone())
        .collect();
    let short = positives
        .iter()
        .filter(|(_, is_long)| !*is_long)
        .map(|(r, _)| r.root.clone())
        .collect();

    Ok(Table {
        dynkin: dynkin.to_string(),
        rank,
        simple,
        long,
        short,
        cosmall,
    })
}

impl Table {
    /// Aligned plain-text rendering. Simply laced types have no long/short
    /// split to display.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("type: {}\n", self.dynkin));
        let simples = self
            .simple
            .iter()
            .enumerate()
            .map(|(i, s)| format!("b{} = {}", i + 1, s))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("simple: {simples}\n"));
        if !self.short.is_empty() {
            out.push_str(&format!("long: {}\n", self.long.join(", ")));
            out.push_str(&format!("short: {}\n", self.short.join(", ")));
        }
        out.push_str("cosmall:\n");
        let root_w = self
            .cosmall
            .iter()
            .map(|r| r.root.len())
            .max()
            .unwrap_or(4)
            .max("root".len());
        let simple_w = self
            .cosmall
            .iter()
            .map(|r| r.coords_simple.len() * 2)
            .max()
            .unwrap_or(6)
            .max("simple".len());
        out.push_str(&format!(
            "  {:root_w$}  {:simple_w$}  delta\n",
            "root", "simple"
        ));
        for row in &self.cosmall {
            let coeffs = row
                .coords_simple
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let delta = row
                .delta_set
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!(
                "  {:root_w$}  {:simple_w$}  {{{delta}}}\n",
                row.root, coeffs
            ));
        }
        out
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn computed(t: &str) -> Table {
        RootSystem::parse(t).unwrap().table().unwrap()
    }

    fn closed(t: &str) -> Table {
        table_closed_form(&t.parse().unwrap()).unwrap()
    }

    #[test]
    fn b2_table_frozen() {
        let t = computed("B2");
        assert_eq!(t.dynkin, "B2");
        assert_eq!(t.simple, vec!["e1-e2", "e2"]);
        assert_eq!(t.long, vec!["e1-e2", "e1+e2"]);
        assert_eq!(t.short, vec!["e2", "e1"]);
        let rows: Vec<(&str, &[i64], &[usize])> = t
            .cosmall
            .iter()
            .map(|r| (r.root.as_str(), r.coords_simple.as_slice(), r.delta_set.as_slice()))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("e2", &[0, 1][..], &[1][..]),
                ("e1-e2", &[1, 0][..], &[2][..]),
                ("e1+e2", &[1, 2][..], &[][..]),
            ]
        );
    }

    #[test]
    fn d4_fork_rows_follow_the_definition() {
        // The rows ending just before the fork pick up both antennas.
        let t = computed("D4");
        let find = |label: &str| {
            t.cosmall
                .iter()
                .find(|r| r.root == label)
                .unwrap_or_else(|| panic!("row {label}"))
        };
        assert_eq!(find("e1-e3").delta_set, vec![3, 4]);
        assert_eq!(find("e2-e3").delta_set, vec![1, 3, 4]);
        // The two antenna roots themselves extend only through the node.
        assert_eq!(find("e3-e4").delta_set, vec![2]);
        assert_eq!(find("e3+e4").delta_set, vec![2]);
        // e1+e2 is the highest root.
        assert_eq!(find("e1+e2").delta_set, Vec::<usize>::new());
    }

    #[test]
    fn closed_form_matches_first_principles_everywhere() {
        for l in 1..=5 {
            let t = format!("A{l}");
            assert_eq!(computed(&t), closed(&t), "{t}");
        }
        for l in 2..=5 {
            for f in ["B", "C"] {
                let t = format!("{f}{l}");
                assert_eq!(computed(&t), closed(&t), "{t}");
            }
        }
        for l in 3..=5 {
            let t = format!("D{l}");
            assert_eq!(computed(&t), closed(&t), "{t}");
        }
    }

    #[test]
    fn tables_reject_non_classical_types() {
        assert!(RootSystem::parse("F4").unwrap().table().is_err());
        assert!(table_closed_form(&"G2".parse().unwrap()).is_err());
    }

    #[test]
    fn table_rows_are_self_consistent() {
        for t in ["A3", "B3", "C4", "D4"] {
            let r = RootSystem::parse(t).unwrap();
            let table = r.table().unwrap();
            assert_eq!(table.rank, r.rank());
            for row in &table.cosmall {
                let alpha = r.root_from_coeffs(row.coords_simple.clone()).unwrap();
                assert!(r.is_cosmall(&alpha).unwrap().0);
                assert_eq!(row.delta_set, r.delta_set(&alpha).unwrap());
                assert_eq!(row.coords_e, r.e_coords(&alpha).unwrap());
                assert_eq!(row.root, r.e_label(&alpha).unwrap());
            }
            // Every computed-cosmall root has a row.
            let n = r
                .positive_roots()
                .iter()
                .filter(|a| r.is_cosmall(a).unwrap().0)
                .count();
            assert_eq!(table.cosmall.len(), n);
            // Long/short lists partition the positive roots by length class.
            assert_eq!(
                table.long.len() + table.short.len(),
                r.positive_roots().len()
            );
        }
    }

    #[test]
    fn text_rendering_is_stable() {
        let text = computed("B2").to_text();
        let expected = "\
type: B2
simple: b1 = e1-e2, b2 = e2
long: e1-e2, e1+e2
short: e2, e1
cosmall:
  root   simple  delta
  e2     0,1     {1}
  e1-e2  1,0     {2}
  e1+e2  1,2     {}
";
        assert_eq!(text, expected);
    }

    #[test]
    fn json_round_trip() {
        let t = computed("C3");
        let json = serde_json::to_string(&t).unwrap();
        let back: Table = serde_json::from_str(&json).unwrap();
        assert_eq!(t, back);
    }
}
