//! Label-invariant equitable refinement of vertex colorings.

use super::Graph;

/// Refines `colors` until every two vertices of a color have the same number
/// of neighbors of each color.
///
/// New colors are ranks of `(old color, neighbor color counts)`, so the result
/// commutes with relabeling and never merges cells. Colors are `0..k`.
pub fn refine(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut current = rank(colors);
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    loop {
        let k = current.iter().max().map_or(0, |m| m + 1);
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0; k];
                for &w in &neighbors[v] {
                    counts[current[w]] += 1;
                }
                (current[v], counts)
            })
            .collect();
        let next = rank(&signatures);
        let k_next = next.iter().max().map_or(0, |m| m + 1);
        current = next;
        if k_next == k {
            return current;
        }
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter().map(|k| distinct.binary_search(k).unwrap()).collect()
}

/// Gives `v` a color of its own, placed just before the rest of its old cell.
pub fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let keys: Vec<(usize, bool)> = colors.iter().enumerate().map(|(w, &c)| (c, w != v)).collect();
    rank(&keys)
}

/// The cells of a coloring, indexed by color, each sorted.
pub fn cells(colors: &[usize]) -> Vec<Vec<usize>> {
    let k = colors.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        out[c].push(v);
    }
    out
}

pub fn is_discrete(colors: &[usize]) -> bool {
    colors.iter().max().is_none_or(|&m| m + 1 == colors.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_separates_center() {
        let c = refine(&Graph::star(4), &[0; 5]);
        assert_eq!(cells(&c), vec![vec![1, 2, 3, 4], vec![0]]);
    }

    #[test]
    fn regular_graphs_stay_unit() {
        let c = refine(&Graph::cycle(6).unwrap(), &[0; 6]);
        assert_eq!(cells(&c).len(), 1);
        let ind = refine(&Graph::cycle(6).unwrap(), &individualize(&c, 0));
        // distance classes from vertex 0
        assert_eq!(cells(&ind).len(), 4);
    }

    #[test]
    fn path_is_refined_by_distance_to_ends() {
        let c = refine(&Graph::path(5), &[0; 5]);
        let mut found = cells(&c);
        found.sort();
        assert_eq!(found, vec![vec![0, 4], vec![1, 3], vec![2]]);
        let d = refine(&Graph::path(5), &individualize(&c, 4));
        assert!(is_discrete(&d));
    }
}
