//! Witness graphs: small asymmetric graphs, unions of their copies, and the
//! four-orbit uniform graph.

use super::{Graph, GraphError};

/// The connected asymmetric graph of order 6 with the smallest edge mask
/// (bit `i` = `i`-th pair in lexicographic order), found by exhaustive search.
const ASYMMETRIC_SIX: [(usize, usize); 6] = [(0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (2, 3)];

/// A connected graph of order `m` with trivial automorphism group.
///
/// `m = 1` is a single vertex, `m = 6` is frozen search output, and `m >= 7`
/// is the spider with legs of lengths 1, 2 and `m - 4`. No asymmetric graph
/// has order 2 through 5.
pub fn asymmetric_witness(m: usize) -> Result<Graph, GraphError> {
    match m {
        1 => Ok(Graph::empty(1)),
        2..=5 | 0 => Err(GraphError::InvalidParameter(format!(
            "no asymmetric graph of order {m}"
        ))),
        6 => Graph::from_edges(6, &ASYMMETRIC_SIX),
        _ => {
            // center 0; legs 0-1, 0-2-3, 0-4-...-(m-1)
            let mut edges = vec![(0, 1), (0, 2), (2, 3), (0, 4)];
            edges.extend((5..m).map(|v| (v - 1, v)));
            Graph::from_edges(m, &edges)
        }
    }
}

/// `r` disjoint copies of [`asymmetric_witness`]`(m)`; copy `j` holds vertices `j*m..(j+1)*m`.
pub fn construct_example1(r: usize, m: usize) -> Result<Graph, GraphError> {
    if r < 2 {
        return Err(GraphError::InvalidParameter(format!("need r >= 2 copies, got {r}")));
    }
    let part = asymmetric_witness(m)?;
    Ok(Graph::disjoint_union(&vec![part; r]).0)
}

/// Vertex names of [`construct_figure1`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Figure1Layout {
    pub n: usize,
}

impl Figure1Layout {
    pub fn a(&self, i: usize) -> usize {
        i
    }
    pub fn b(&self, i: usize) -> usize {
        self.n + i
    }
    pub fn c(&self, i: usize) -> usize {
        2 * self.n + i
    }
    pub fn d(&self, i: usize) -> usize {
        3 * self.n + i
    }
    pub fn x(&self) -> usize {
        4 * self.n
    }
    pub fn y(&self) -> usize {
        4 * self.n + 1
    }
}

/// The uniform graph on `4n + 2` vertices whose automorphism group is
/// `S_n^(3) ⊕ S_n ⊕ I_2`.
///
/// Triangles `a_i b_i c_i`; `x` is joined to every `c_i` and `d_i`, `y` to
/// every `b_i`, and `x` to `y`.
pub fn construct_figure1(n: usize) -> Result<Graph, GraphError> {
    construct_figure1_variant(n, true)
}

/// [`construct_figure1`], optionally without the edge `x y`.
pub fn construct_figure1_variant(n: usize, with_xy_edge: bool) -> Result<Graph, GraphError> {
    if n < 5 {
        return Err(GraphError::InvalidParameter(format!("need n >= 5, got {n}")));
    }
    let l = Figure1Layout { n };
    let mut edges = Vec::new();
    for i in 0..n {
        edges.extend([(l.a(i), l.b(i)), (l.b(i), l.c(i)), (l.a(i), l.c(i))]);
        edges.extend([(l.c(i), l.x()), (l.d(i), l.x()), (l.b(i), l.y())]);
    }
    if with_xy_edge {
        edges.push((l.x(), l.y()));
    }
    Graph::from_edges(4 * n + 2, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_shapes() {
        assert_eq!(asymmetric_witness(1).unwrap().vertex_count(), 1);
        for m in [0, 2, 3, 4, 5] {
            assert!(asymmetric_witness(m).is_err());
        }
        for m in 6..12 {
            let g = asymmetric_witness(m).unwrap();
            assert_eq!(g.vertex_count(), m);
            assert!(g.is_connected());
        }
        let two = construct_example1(2, 6).unwrap();
        assert_eq!((two.vertex_count(), two.edge_count()), (12, 12));
        assert_eq!(construct_example1(2, 1).unwrap().edge_count(), 0);
        assert!(construct_example1(1, 6).is_err());
    }

    #[test]
    fn figure1_counts() {
        let g = construct_figure1(5).unwrap();
        assert_eq!(g.vertex_count(), 22);
        assert_eq!(g.edge_count(), 6 * 5 + 1);
        let l = Figure1Layout { n: 5 };
        assert_eq!(g.degree(l.x()), 11);
        assert_eq!(g.degree(l.y()), 6);
        assert_eq!(construct_figure1_variant(5, false).unwrap().edge_count(), 30);
        assert!(construct_figure1(4).is_err());
    }
}
