//! Graph automorphism groups by refinement and individualization.

use crate::graph::refine::{cells, individualize, is_discrete, refine};
use crate::graph::Graph;
use crate::perm::{orbits_of, Permutation, PermutationGroup};

use super::SymmetryError;

pub const DEFAULT_VERTEX_LIMIT: usize = 64;

struct PathNode {
    colors: Vec<usize>,
    target: usize,
    chosen: usize,
}

fn shape(colors: &[usize]) -> Vec<usize> {
    cells(colors).iter().map(Vec::len).collect()
}

/// `Aut(g)` as a permutation group on the vertices.
pub fn automorphism_group(g: &Graph) -> Result<PermutationGroup, SymmetryError> {
    automorphism_group_with_limit(g, DEFAULT_VERTEX_LIMIT)
}

pub fn automorphism_group_with_limit(g: &Graph, limit: usize) -> Result<PermutationGroup, SymmetryError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(SymmetryError::TooLarge { n, limit });
    }
    Ok(colored_automorphism_group(g, &vec![0; n]))
}

/// Automorphisms of `g` that also preserve the vertex coloring `colors`.
///
/// The leftmost branch of the search tree (always individualizing the least
/// vertex of the first non-singleton cell) gives a base `b_1..b_k`. Levels are
/// processed deepest first: for each vertex `w` of `b_i`'s cell that is not yet
/// in the orbit of `b_i`, the subtree below `w` is searched for a leaf whose
/// induced map is an automorphism. Only verified automorphisms are kept.
pub fn colored_automorphism_group(g: &Graph, colors: &[usize]) -> PermutationGroup {
    let n = g.vertex_count();
    let mut path: Vec<PathNode> = Vec::new();
    let mut current = refine(g, colors);
    while !is_discrete(&current) {
        let cell_list = cells(&current);
        let target = cell_list.iter().position(|c| c.len() > 1).unwrap();
        let chosen = cell_list[target][0];
        let next = refine(g, &individualize(&current, chosen));
        path.push(PathNode { colors: current, target, chosen });
        current = next;
    }
    let leaf = current;
    let shapes: Vec<Vec<usize>> = path
        .iter()
        .map(|p| shape(&p.colors))
        .chain(std::iter::once(shape(&leaf)))
        .collect();
    let search = Search { g, colors, path: &path, shapes: &shapes, leaf: &leaf };

    let mut generators: Vec<Permutation> = Vec::new();
    for i in (0..path.len()).rev() {
        let node = &path[i];
        let cell = &cells(&node.colors)[node.target];
        for &w in cell {
            let orbit_of_base = orbit_containing(n, &generators, node.chosen);
            if orbit_of_base.contains(&w) {
                continue;
            }
            let start = refine(g, &individualize(&node.colors, w));
            if let Some(p) = search.descend(i + 1, start) {
                generators.push(p);
            }
        }
    }
    PermutationGroup::new(n, generators).expect("generators share the graph's degree")
}

fn orbit_containing(n: usize, gens: &[Permutation], x: usize) -> Vec<usize> {
    orbits_of(n, gens).into_iter().find(|o| o.contains(&x)).unwrap()
}

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    path: &'a [PathNode],
    shapes: &'a [Vec<usize>],
    leaf: &'a [usize],
}

impl Search<'_> {
    fn descend(&self, level: usize, colors: Vec<usize>) -> Option<Permutation> {
        if shape(&colors) != self.shapes[level] {
            return None;
        }
        if level == self.path.len() {
            // Vertex with leaf color k on the left maps to the vertex with color k here.
            let mut at_color = vec![0; colors.len()];
            for (v, &c) in colors.iter().enumerate() {
                at_color[c] = v;
            }
            let images: Vec<usize> = self.leaf.iter().map(|&c| at_color[c]).collect();
            let respects_colors = (0..images.len()).all(|v| self.colors[images[v]] == self.colors[v]);
            if respects_colors && self.g.is_automorphism(&images) {
                return Permutation::from_images(images).ok();
            }
            return None;
        }
        let target = self.path[level].target;
        for &u in &cells(&colors)[target] {
            let next = refine(self.g, &individualize(&colors, u));
            if let Some(p) = self.descend(level + 1, next) {
                return Some(p);
            }
        }
        None
    }
}

/// Every automorphism, by checking all `n!` permutations. Independent of the
/// search above; only for `n <= 8`.
pub fn brute_force_automorphisms(g: &Graph) -> Result<Vec<Permutation>, SymmetryError> {
    let n = g.vertex_count();
    if n > 8 {
        return Err(SymmetryError::TooLarge { n, limit: 8 });
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut check = |images: &[usize]| {
        if g.is_automorphism(images) {
            out.push(Permutation::from_images(images.to_vec()).unwrap());
        }
    };
    check(&images);
    // Heap's algorithm
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            check(&images);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::asymmetric_witness;
    use num_bigint::BigUint;

    fn order(g: &Graph) -> BigUint {
        automorphism_group(g).unwrap().order()
    }

    #[test]
    fn families() {
        for n in 1..=7 {
            let fact: u32 = (1..=n as u32).product();
            assert_eq!(order(&Graph::complete(n)), BigUint::from(fact));
            assert_eq!(order(&Graph::empty(n)), BigUint::from(fact));
        }
        assert_eq!(order(&Graph::star(4)), BigUint::from(24u32));
        assert_eq!(order(&Graph::cycle(7).unwrap()), BigUint::from(14u32));
        assert_eq!(order(&Graph::path(6)), BigUint::from(2u32));
        assert_eq!(order(&Graph::empty(0)), BigUint::from(1u32));
    }

    #[test]
    fn asymmetric_witnesses() {
        for m in [1, 6, 7, 8, 10] {
            assert!(automorphism_group(&asymmetric_witness(m).unwrap()).unwrap().is_trivial());
        }
        assert_eq!(brute_force_automorphisms(&asymmetric_witness(6).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn petersen() {
        // Kneser graph K(5,2)
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let mut edges = Vec::new();
        for (a, p) in pairs.iter().enumerate() {
            for (b, q) in pairs.iter().enumerate().skip(a + 1) {
                if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(order(&g), BigUint::from(120u32));
    }

    #[test]
    fn size_limit() {
        assert!(automorphism_group_with_limit(&Graph::empty(10), 5).is_err());
        assert!(brute_force_automorphisms(&Graph::empty(9)).is_err());
    }
}
