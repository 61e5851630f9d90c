//! The colour-change process: closures, zero-forcing sets, exact Z by
//! subset search, and extraction of zero-forcing chains from a run.
//!
//! A black vertex with exactly one white neighbour forces that neighbour
//! black. A set is zero-forcing when repeated application blackens the
//! whole graph; Z(G) is the least size of such a set.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A black/white vertex colouring, stored as the set of black vertices.
pub type Colouring = BTreeSet<usize>;

/// A complete record of one forcing process: the initial black set, the
/// forces in the order they were applied, and the resulting closure.
///
/// Each vertex forces at most once (after the force its neighbourhood has no
/// white vertex left) and is forced at most once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingRun {
    pub initial: Colouring,
    pub forces: Vec<(usize, usize)>,
    #[serde(rename = "final")]
    pub final_black: Colouring,
}

impl ForcingRun {
    /// True when the closure blackened every vertex of a graph on `n`
    /// vertices.
    pub fn is_complete(&self, n: usize) -> bool {
        self.final_black.len() == n
    }

    /// DOT rendering: black vertices filled, each force drawn as an arrow
    /// annotated with its 1-based step number.
    pub fn to_dot(&self, g: &Graph) -> String {
        let mut out = String::from("digraph forcing {\n  edge [dir=none];\n");
        for v in 0..g.vertex_count() {
            let fill = if self.initial.contains(&v) {
                ", style=filled, fillcolor=black, fontcolor=white"
            } else if self.final_black.contains(&v) {
                ", style=filled, fillcolor=gray"
            } else {
                ""
            };
            writeln!(out, "  v{v} [label=\"{v}\"{fill}];").unwrap();
        }
        let forced: BTreeSet<(usize, usize)> = self
            .forces
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        for &(u, v) in g.edges() {
            if !forced.contains(&(u, v)) {
                writeln!(out, "  v{u} -> v{v};").unwrap();
            }
        }
        for (i, &(v, w)) in self.forces.iter().enumerate() {
            writeln!(out, "  v{v} -> v{w} [dir=forward, label=\"{}\"];", i + 1).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn check_vertices(g: &Graph, s: &Colouring) -> Result<()> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// Applies the colour-change rule until no force is possible.
///
/// Tie-break: at each step the forcer is the black vertex of lowest index
/// that has a unique white neighbour. The closure itself is independent of
/// this choice; fixing it makes traces and chains reproducible.
pub fn forcing_closure(g: &Graph, initial: &Colouring) -> Result<ForcingRun> {
    let order: Vec<usize> = (0..g.vertex_count()).collect();
    forcing_closure_with_order(g, initial, &order)
}

/// [`forcing_closure`] with an explicit scan priority over vertices; at
/// each step the forcer is the earliest vertex in `order` that can force.
/// Used by the confluence tests.
pub fn forcing_closure_with_order(
    g: &Graph,
    initial: &Colouring,
    order: &[usize],
) -> Result<ForcingRun> {
    check_vertices(g, initial)?;
    let mut black = vec![false; g.vertex_count()];
    for &v in initial {
        black[v] = true;
    }
    let mut forces = Vec::new();
    'outer: loop {
        for &v in order {
            if !black[v] {
                continue;
            }
            let mut white = g.neighbors(v).iter().filter(|&&w| !black[w]);
            if let (Some(&w), None) = (white.next(), white.next()) {
                black[w] = true;
                forces.push((v, w));
                continue 'outer;
            }
        }
        break;
    }
    let final_black = (0..g.vertex_count()).filter(|&v| black[v]).collect();
    Ok(ForcingRun {
        initial: initial.clone(),
        forces,
        final_black,
    })
}

/// Validates an explicit force sequence and assembles the run it induces.
/// Each step must name a black forcer whose unique white neighbour is the
/// forced vertex.
pub fn replay_forcing(g: &Graph, initial: &Colouring, forces: &[(usize, usize)]) -> Result<ForcingRun> {
    check_vertices(g, initial)?;
    let mut black = vec![false; g.vertex_count()];
    for &v in initial {
        black[v] = true;
    }
    for &(v, w) in forces {
        for x in [v, w] {
            if x >= g.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: g.vertex_count(),
                });
            }
        }
        let legal = black[v]
            && !black[w]
            && g.has_edge(v, w)
            && g.neighbors(v).iter().all(|&u| black[u] || u == w);
        if !legal {
            return Err(Error::IllegalForce(v, w));
        }
        black[w] = true;
    }
    let final_black = (0..g.vertex_count()).filter(|&v| black[v]).collect();
    Ok(ForcingRun {
        initial: initial.clone(),
        forces: forces.to_vec(),
        final_black,
    })
}

/// True iff the closure of `s` blackens every vertex.
pub fn is_zero_forcing_set(g: &Graph, s: &Colouring) -> bool {
    match forcing_closure(g, s) {
        Ok(run) => run.is_complete(g.vertex_count()),
        Err(_) => false,
    }
}

/// Mask-based closure reachability used by the subset search; order-free.
fn closure_covers(adj: &[u64], mut black: u64, all: u64) -> bool {
    loop {
        let mut progressed = false;
        let mut scan = black;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let white = adj[v] & !black;
            if white != 0 && white & (white - 1) == 0 {
                black |= white;
                progressed = true;
            }
        }
        if black == all {
            return true;
        }
        if !progressed {
            return false;
        }
    }
}

/// Exact zero-forcing number with a minimum witness.
///
/// Searches each connected component separately (the parameter is additive
/// over components) by enumerating candidate sets in increasing size, and
/// returns the lexicographically least minimum witness. `budget` caps the
/// size of any single component.
pub fn exact_zero_forcing(g: &Graph, budget: usize) -> Result<(usize, Colouring)> {
    let budget = budget.min(64);
    let mut total = 0;
    let mut witness = Colouring::new();
    for comp in g.connected_components() {
        if comp.len() > budget {
            return Err(Error::BudgetExceeded {
                what: "exact zero forcing",
                size: comp.len(),
                budget,
            });
        }
        let sub = g.induced(&comp);
        let local = component_zero_forcing(&sub);
        total += local.len();
        witness.extend(local.iter().map(|&i| comp[i]));
    }
    Ok((total, witness))
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum zero-forcing set of a connected graph, by size-increasing subset
/// enumeration; first (lexicographically least) hit wins.
fn component_zero_forcing(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let adj = g.adjacency_masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 1..n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if closure_covers(&adj, mask, all) {
                return combo;
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    // the full vertex set always forces
    (0..n).collect()
}

/// The zero-forcing chains of a complete run: the disjoint induced paths
/// obtained by following forcer -> forced links from each initially black
/// vertex.
///
/// Chains that contain a force are ordered by the step of their first force
/// (so the chain of the very first force comes first); single-vertex chains
/// come last, ordered by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    /// Index of the chain containing `v`, if any.
    pub fn chain_of(&self, v: usize) -> Option<usize> {
        self.chains.iter().position(|c| c.contains(&v))
    }

    pub fn heads(&self) -> impl Iterator<Item = usize> + '_ {
        self.chains.iter().map(|c| c[0])
    }
}

pub fn extract_chains(g: &Graph, run: &ForcingRun) -> Result<ChainDecomposition> {
    if !run.is_complete(g.vertex_count()) {
        return Err(Error::IncompleteRun);
    }
    let n = g.vertex_count();
    let mut next = vec![None; n];
    let mut first_force = vec![usize::MAX; n]; // per chain head, filled below
    let mut forced = vec![false; n];
    for &(v, w) in &run.forces {
        next[v] = Some(w);
        forced[w] = true;
    }
    let mut chains = Vec::new();
    for &head in &run.initial {
        debug_assert!(!forced[head], "initially black vertices are never forced");
        let mut chain = vec![head];
        let mut cur = head;
        while let Some(w) = next[cur] {
            chain.push(w);
            cur = w;
        }
        if chain.len() > 1 {
            let pos = run
                .forces
                .iter()
                .position(|&(v, _)| v == head)
                .expect("head of a multi-vertex chain performs its first force");
            first_force[head] = pos;
        }
        chains.push(chain);
    }
    chains.sort_by_key(|c| {
        if c.len() > 1 {
            (0, first_force[c[0]], c[0])
        } else {
            (1, c[0], c[0])
        }
    });
    Ok(ChainDecomposition { chains })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::graph::line_graph;

    fn set(vs: &[usize]) -> Colouring {
        vs.iter().copied().collect()
    }

    #[test]
    fn closure_on_cycle_with_adjacent_pair() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let run = forcing_closure(&c4, &set(&[0, 1])).unwrap();
        assert_eq!(run.forces.len(), 2);
        assert!(run.is_complete(4));
    }

    #[test]
    fn triangle_with_one_black_is_stuck() {
        let k3 = generate(&FamilySpec::Complete { n: 3 }).unwrap();
        let run = forcing_closure(&k3, &set(&[0])).unwrap();
        assert!(run.forces.is_empty());
        assert_eq!(run.final_black, run.initial);
    }

    #[test]
    fn zero_forcing_set_tests() {
        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        assert!(is_zero_forcing_set(&p4, &set(&[0])));

        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        assert!(!is_zero_forcing_set(&c4, &set(&[0])));
        assert!(is_zero_forcing_set(&c4, &set(&[0, 1, 2, 3])));
    }

    #[test]
    fn exact_values_on_named_graphs() {
        let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(exact_zero_forcing(&k5, 24).unwrap().0, 4);

        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        assert_eq!(exact_zero_forcing(&c6, 24).unwrap().0, 2);

        let star4 = generate(&FamilySpec::Star { leaves: 4 }).unwrap();
        assert_eq!(exact_zero_forcing(&star4, 24).unwrap().0, 3);
    }

    #[test]
    fn exact_zero_forcing_witness_is_lex_least_and_valid() {
        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let (z, w) = exact_zero_forcing(&c6, 24).unwrap();
        assert_eq!(z, 2);
        assert_eq!(w, set(&[0, 1]));
        assert!(is_zero_forcing_set(&c6, &w));
    }

    #[test]
    fn empty_graph_has_zero_forcing_number_zero() {
        let g = Graph::empty(0);
        let (z, w) = exact_zero_forcing(&g, 24).unwrap();
        assert_eq!(z, 0);
        assert!(w.is_empty());
    }

    #[test]
    fn additive_over_components() {
        let c3 = generate(&FamilySpec::Cycle { n: 3 }).unwrap();
        let padded = crate::graph::add_isolated(&c3, 2);
        assert_eq!(exact_zero_forcing(&padded, 24).unwrap().0, 2 + 2);
    }

    #[test]
    fn budget_is_enforced() {
        let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        assert!(matches!(
            exact_zero_forcing(&k5, 4),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn replay_rejects_illegal_forces() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        // vertex 0 is black but has two white neighbours to start with
        assert!(matches!(
            replay_forcing(&c4, &set(&[0]), &[(0, 1)]),
            Err(Error::IllegalForce(0, 1))
        ));
        let run = replay_forcing(&c4, &set(&[0, 1]), &[(1, 2), (0, 3)]).unwrap();
        assert!(run.is_complete(4));
    }

    #[test]
    fn chains_on_path_and_all_black() {
        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let run = forcing_closure(&p4, &set(&[0])).unwrap();
        let chains = extract_chains(&p4, &run).unwrap();
        assert_eq!(chains.chains, vec![vec![0, 1, 2, 3]]);

        let all: Colouring = (0..4).collect();
        let run = forcing_closure(&p4, &all).unwrap();
        let chains = extract_chains(&p4, &run).unwrap();
        assert_eq!(chains.chains.len(), 4);
        assert!(chains.chains.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn incomplete_run_is_rejected() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let run = forcing_closure(&c4, &set(&[0])).unwrap();
        assert!(matches!(
            extract_chains(&c4, &run),
            Err(Error::IncompleteRun)
        ));
    }

    #[test]
    fn closure_of_line_graph_forcing_set() {
        // worked-example line graph: the given set blackens all 11 vertices
        let g = crate::fixtures::figure_example();
        let lgm = line_graph(&g);
        let z = crate::fixtures::figure_example_forcing_set(&g);
        let run = forcing_closure(lgm.line(), &z).unwrap();
        assert!(run.is_complete(11));
    }
}
