//! Cross-module invariant sweeps that are too heavy for inline unit tests.

use std::collections::BTreeSet;

use curvenbhd::{Degree, ParabolicSubset, Root, RootSystem};

fn degrees_upto(rs: &RootSystem, p: &ParabolicSubset, bound: &Degree) -> Vec<Degree> {
    let mut stack = vec![Vec::new()];
    for &b in bound.coeffs() {
        let mut next = Vec::new();
        for prefix in &stack {
            for v in 0..=b {
                let mut ext = prefix.clone();
                ext.push(v);
                next.push(ext);
            }
        }
        stack = next;
    }
    stack
        .into_iter()
        .map(|coeffs| Degree::from_coeffs(rs, p, coeffs).unwrap())
        .collect()
}

fn all_greedy_multisets(
    rs: &RootSystem,
    d: &Degree,
    acc: &mut Vec<Root>,
    out: &mut BTreeSet<Vec<Root>>,
) {
    let maxima = rs.maximal_roots(d).unwrap();
    if maxima.is_empty() {
        let mut parts = acc.clone();
        parts.sort();
        out.insert(parts);
        return;
    }
    for alpha in maxima {
        let step = rs.coroot_degree(&alpha, d.parabolic()).unwrap();
        let residual = d.minus(&step).unwrap();
        acc.push(alpha);
        all_greedy_multisets(rs, &residual, acc, out);
        acc.pop();
    }
}

#[test]
fn greedy_multisets_unique_for_every_effective_degree_up_to_rank_4() {
    // Every tie-breaking order of maximal-root choices yields the same
    // multiset of parts; exhaustive over all parabolic subsets and all
    // effective degrees bounded by twice the highest coroot class.
    for t in ["A4", "B4", "C4", "D4", "F4", "G2"] {
        let rs = RootSystem::parse(t).unwrap();
        for p in ParabolicSubset::enumerate_all(rs.rank()) {
            let theta = rs.coroot_degree(rs.highest_root(), &p).unwrap();
            let bound = theta.plus(&theta).unwrap();
            for d in degrees_upto(&rs, &p, &bound) {
                let mut sets = BTreeSet::new();
                all_greedy_multisets(&rs, &d, &mut Vec::new(), &mut sets);
                assert_eq!(
                    sets.len(),
                    1,
                    "{t}: multiple greedy multisets for d = {} with P = {}",
                    d.literal(),
                    d.parabolic()
                );
                let mut greedy: Vec<Root> =
                    rs.greedy_decomposition(&d).unwrap().parts().to_vec();
                greedy.sort();
                assert!(sets.contains(&greedy));
            }
        }
    }
}

#[test]
fn minimal_coset_representatives_keep_parabolic_roots_positive() {
    // The representative of w W_P maps every root of R+_P to a positive
    // root, for every w built from reflections and every P.
    for t in ["B3", "D4"] {
        let rs = RootSystem::parse(t).unwrap();
        for p in ParabolicSubset::enumerate_all(rs.rank()) {
            for alpha in rs.positive_roots() {
                let w = rs.reflection(alpha).unwrap();
                let rep = rs.min_coset_rep(&w, &p);
                for gamma in rs.positive_roots() {
                    if rs.in_parabolic_span(gamma, &p) {
                        assert!(rep.apply_root(gamma).is_positive());
                    }
                }
            }
        }
    }
}
