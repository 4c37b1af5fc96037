//! Exhaustive enumeration of small graphs, labeled or up to isomorphism.

use std::collections::BTreeMap;

use super::refine::{cells, refine};
use super::{Graph, GraphError};

/// Largest order accepted by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 7;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The graph whose edge set is bit `i` of `mask` for the `i`-th lexicographic pair.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn graph_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(pair_count(n) <= 64, "mask needs at most 11 vertices");
    let mut mask = 0;
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                mask |= 1 << i;
            }
            i += 1;
        }
    }
    mask
}

/// Labeled graphs on `n` vertices with masks in `range`; restartable and splittable.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn total(n: usize) -> u64 {
        1u64 << pair_count(n)
    }

    pub fn range(n: usize, start: u64, end: u64) -> Result<Self, GraphError> {
        if n > MAX_ENUMERATION_ORDER {
            return Err(GraphError::TooLarge { n, limit: MAX_ENUMERATION_ORDER });
        }
        Ok(LabeledGraphs {
            n,
            next: start,
            end: end.min(Self::total(n)),
        })
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;
    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = graph_from_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }
}

/// Canonical form: the smallest mask over all relabelings that order vertices
/// by their equitable-refinement cell. Two graphs are isomorphic iff their
/// forms agree. Needs at most 11 vertices.
pub fn canonical_form(g: &Graph) -> u64 {
    canonical_labeling(g).0
}

/// The canonical mask and a relabeling `v -> relabel[v]` achieving it.
pub fn canonical_labeling(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.vertex_count();
    let colors = refine(g, &vec![0; n]);
    let cell_list = cells(&colors);
    // order[k] = vertex placed at position k
    let mut order: Vec<usize> = cell_list.iter().flatten().copied().collect();
    let bounds: Vec<(usize, usize)> = {
        let mut start = 0;
        cell_list
            .iter()
            .map(|c| {
                let b = (start, start + c.len());
                start += c.len();
                b
            })
            .collect()
    };
    let mut best: Option<(u64, Vec<usize>)> = None;
    permute_cells(g, &bounds, 0, &mut order, &mut best);
    let (mask, order) = best.unwrap();
    let mut relabel = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        relabel[v] = pos;
    }
    (mask, relabel)
}

fn mask_of_order(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut mask = 0;
    let mut i = 0;
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(order[a], order[b]) {
                mask |= 1 << i;
            }
            i += 1;
        }
    }
    mask
}

fn permute_cells(
    g: &Graph,
    bounds: &[(usize, usize)],
    cell: usize,
    order: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<usize>)>,
) {
    if cell == bounds.len() {
        let m = mask_of_order(g, order);
        if best.as_ref().is_none_or(|(b, _)| m < *b) {
            *best = Some((m, order.clone()));
        }
        return;
    }
    let (lo, hi) = bounds[cell];
    permute_range(g, bounds, cell, lo, hi, order, best);
}

fn permute_range(
    g: &Graph,
    bounds: &[(usize, usize)],
    cell: usize,
    k: usize,
    hi: usize,
    order: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<usize>)>,
) {
    if k + 1 >= hi {
        permute_cells(g, bounds, cell + 1, order, best);
        return;
    }
    for j in k..hi {
        order.swap(k, j);
        permute_range(g, bounds, cell, k + 1, hi, order, best);
        order.swap(k, j);
    }
}

/// One canonically labeled representative per isomorphism class on `n`
/// vertices, sorted by canonical mask. Built by adding a vertex to each class
/// on `n - 1` vertices in every possible way.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::TooLarge { n, limit: MAX_ENUMERATION_ORDER });
    }
    let mut reps: Vec<Graph> = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &reps {
            for subset in 0u64..1 << (k - 1) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..k - 1).filter(|&v| subset >> v & 1 == 1).map(|v| (v, k - 1)));
                let h = Graph::from_edges(k, &edges).unwrap();
                let (mask, _) = canonical_labeling(&h);
                next.entry(mask).or_insert_with(|| graph_from_mask(k, mask));
            }
        }
        reps = next.into_values().collect();
    }
    Ok(reps)
}

/// All graphs on `n` vertices, either labeled or one per isomorphism class.
pub fn enumerate_all_graphs(n: usize, deduplicate: bool) -> Result<Vec<Graph>, GraphError> {
    if deduplicate {
        nonisomorphic_graphs(n)
    } else {
        Ok(LabeledGraphs::range(n, 0, u64::MAX)?.collect())
    }
}

/// Every isomorphism class of graph on `1..=max_order` vertices, smallest first.
pub fn small_graph_corpus(max_order: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(nonisomorphic_graphs(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_isomorphism() {
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(n).unwrap().len(), c, "n={n}");
        }
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_all_graphs(3, false).unwrap().len(), 8);
        assert_eq!(enumerate_all_graphs(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_all_graphs(1, true).unwrap().len(), 1);
        assert!(enumerate_all_graphs(8, false).is_err());
        let split: usize = (0..4)
            .map(|k| LabeledGraphs::range(4, k * 16, (k + 1) * 16).unwrap().count())
            .sum();
        assert_eq!(split, 64);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let relabel = [3, 0, 4, 1, 2];
        assert_eq!(canonical_form(&g), canonical_form(&g.relabeled(&relabel)));
        let (mask, rl) = canonical_labeling(&g);
        assert_eq!(graph_mask(&g.relabeled(&rl)), mask);
        assert_ne!(canonical_form(&Graph::path(4)), canonical_form(&Graph::star(3)));
    }
}
