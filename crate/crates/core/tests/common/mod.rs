//! Shared corpus for the acceptance and property suites: every named
//! family at small sizes plus 500 seeded random graphs on 3..=6 vertices.

use brushforce::families::{generate, FamilySpec};
use brushforce::graph::Graph;
use brushforce::report::random_graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RANDOM_SAMPLES: usize = 500;
pub const CORPUS_SEED: u64 = 0x5eed_f04c;

pub fn corpus() -> Vec<(String, Graph)> {
    let mut graphs = Vec::new();
    let mut push = |spec: FamilySpec| {
        graphs.push((spec.to_string(), generate(&spec).unwrap()));
    };
    for n in 3..=5 {
        push(FamilySpec::Complete { n });
    }
    for n in 2..=8 {
        push(FamilySpec::Path { n });
    }
    for n in 3..=8 {
        push(FamilySpec::Cycle { n });
    }
    for leaves in 2..=6 {
        push(FamilySpec::Star { leaves });
    }
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        push(FamilySpec::CompleteBipartite { m, n });
    }
    for (rows, cycle) in [(2, 3), (3, 4)] {
        push(FamilySpec::Prism { rows, cycle });
    }
    for count in 1..=3 {
        push(FamilySpec::ChainedCycles { count, len: 6 });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for i in 0..RANDOM_SAMPLES {
        let n = rng.gen_range(3..=6);
        let p = rng.gen_range(0.1..=0.9);
        graphs.push((format!("random-{i}"), random_graph(&mut rng, n, p)));
    }
    graphs
}

pub fn connected_corpus() -> Vec<(String, Graph)> {
    corpus()
        .into_iter()
        .filter(|(_, g)| g.vertex_count() > 0 && g.edge_count() > 0 && g.is_connected())
        .collect()
}
