//! The seven-vertex worked example used by the translation tests and the
//! shipped `fig-example` fixture files.
//!
//! Vertices 0..6; edges carry the letters a..k in the canonical edge order
//! listed below. Its line graph has eleven vertices, and the set
//! {b, g, h, i, j, k} is a zero-forcing set for it.

use crate::forcing::Colouring;
use crate::graph::{Graph, LineGraphMap};

/// Edge letters in canonical (lexicographic) edge order.
pub const EDGE_LETTERS: [char; 11] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'i', 'j', 'k', 'h'];

/// The worked-example graph.
pub fn figure_example() -> Graph {
    Graph::new(
        7,
        &[
            (0, 1), // a
            (1, 2), // b
            (1, 3), // c
            (1, 4), // d
            (1, 5), // e
            (2, 3), // f
            (2, 6), // g
            (3, 4), // i
            (3, 5), // j
            (4, 5), // k
            (5, 6), // h
        ],
    )
    .expect("fixture edge list is valid")
}

fn letter_id(g: &Graph, letter: char) -> usize {
    EDGE_LETTERS
        .iter()
        .position(|&c| c == letter)
        .map(|id| {
            debug_assert!(id < g.edge_count());
            id
        })
        .expect("known edge letter")
}

/// The zero-forcing set {b, g, h, i, j, k} of the line graph, as line-vertex
/// indices.
pub fn figure_example_forcing_set(g: &Graph) -> Colouring {
    ['b', 'g', 'h', 'i', 'j', 'k']
        .iter()
        .map(|&c| letter_id(g, c))
        .collect()
}

/// The force order of the worked example on the line graph:
/// g -> f, f -> c, i -> d, h -> e, e -> a.
pub fn figure_example_forces(g: &Graph) -> Vec<(usize, usize)> {
    [('g', 'f'), ('f', 'c'), ('i', 'd'), ('h', 'e'), ('e', 'a')]
        .iter()
        .map(|&(v, w)| (letter_id(g, v), letter_id(g, w)))
        .collect()
}

/// Line-graph map of the worked example.
pub fn figure_example_line(g: &Graph) -> LineGraphMap {
    crate::graph::line_graph(g)
}
