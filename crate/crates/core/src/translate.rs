//! Constructive translations of line-graph certificates into certificates
//! for the base graph, each verified by replay:
//!
//! 1. a zero-forcing set of L(G) yields a brushing script for G using one
//!    brush per chain and at most one brush per edge, so B(G) <= b(G) <=
//!    Z(L(G));
//! 2. a zero-forcing set of L(G) yields a zero-forcing set for G of at most
//!    the same size, so Z(G) <= Z(L(G));
//! 3. a cleaning script for L(G) yields a cleaning script for G with at
//!    most the same number of brushes, in either model, so B(G) <= B(L(G))
//!    and b(G) <= b(L(G)).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::brushing::{simulate, BrushConfig, BrushScript, FiringStep, Model};
use crate::error::{Error, Result};
use crate::forcing::{
    extract_chains, forcing_closure, replay_forcing, ChainDecomposition, Colouring, ForcingRun,
};
use crate::graph::{Graph, LineGraphMap};

/// Where and when a chain's brush entered the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainUsage {
    pub chain: usize,
    /// Vertex of G where the brush was introduced.
    pub vertex: usize,
    /// Index of the introducing step in the trace.
    pub step: usize,
}

/// One presentation step of the first translation: either new brushes
/// appear at a vertex (one per listed chain) or a vertex fires.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceStep {
    Introduce { vertex: usize, chains: Vec<usize> },
    Fire { vertex: usize },
}

/// Witness produced by [`brushing_from_line_forcing`]: the chain
/// decomposition that drove it, the flattened cleaning script (all brushes
/// placed up front), the chain-by-chain brush introductions, and the
/// step-by-step trace.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BrushingFromForcing {
    pub chains: ChainDecomposition,
    pub script: BrushScript,
    pub chain_usage: Vec<ChainUsage>,
    pub trace: Vec<TraceStep>,
}

impl BrushingFromForcing {
    pub fn firing_order(&self) -> Vec<usize> {
        self.trace
            .iter()
            .filter_map(|s| match s {
                TraceStep::Fire { vertex } => Some(*vertex),
                _ => None,
            })
            .collect()
    }
}

fn require_connected_with_edge(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Endpoint shared by two incident edges.
fn shared_vertex(e1: (usize, usize), e2: (usize, usize)) -> usize {
    if e1.0 == e2.0 || e1.0 == e2.1 {
        e1.0
    } else {
        debug_assert!(e1.1 == e2.0 || e1.1 == e2.1);
        e1.1
    }
}

/// Endpoint of `e1` not on `e2`.
fn exclusive_vertex(e1: (usize, usize), e2: (usize, usize)) -> usize {
    if e1.0 == e2.0 || e1.0 == e2.1 {
        e1.1
    } else {
        e1.0
    }
}

struct BrushBuilder<'a> {
    g: &'a Graph,
    lazy: bool,
    pending: Vec<Vec<usize>>,
    brushes: Vec<usize>,
    fired: Vec<bool>,
    placement: BrushConfig,
    firings: Vec<FiringStep>,
    trace: Vec<TraceStep>,
    chain_usage: Vec<ChainUsage>,
}

impl<'a> BrushBuilder<'a> {
    fn new(g: &'a Graph, lazy: bool) -> Self {
        BrushBuilder {
            g,
            lazy,
            pending: vec![Vec::new(); g.vertex_count()],
            brushes: vec![0; g.vertex_count()],
            fired: vec![false; g.vertex_count()],
            placement: BrushConfig::new(),
            firings: Vec::new(),
            trace: Vec::new(),
            chain_usage: Vec::new(),
        }
    }

    fn introduce(&mut self, v: usize, chains: Vec<usize>) {
        if chains.is_empty() {
            return;
        }
        let step = self.trace.len();
        for &k in &chains {
            self.brushes[v] += 1;
            *self.placement.entry(v).or_insert(0) += 1;
            self.chain_usage.push(ChainUsage {
                chain: k,
                vertex: v,
                step,
            });
        }
        self.trace.push(TraceStep::Introduce { vertex: v, chains });
    }

    fn fire(&mut self, v: usize) -> Result<()> {
        debug_assert!(!self.fired[v]);
        let dirty: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !self.fired[u])
            .collect();
        let queued = std::mem::take(&mut self.pending[v]);
        let to_introduce = if self.lazy {
            let need = dirty.len().saturating_sub(self.brushes[v]);
            queued.into_iter().take(need).collect::<Vec<_>>()
        } else {
            queued
        };
        self.introduce(v, to_introduce);
        if self.brushes[v] < dirty.len() {
            return Err(Error::ConstructionStalled(format!(
                "vertex {v} holds {} brushes but has {} dirty edges",
                self.brushes[v],
                dirty.len()
            )));
        }
        self.brushes[v] = 0;
        let mut routing = BTreeMap::new();
        for &u in &dirty {
            self.brushes[u] += 1;
            routing.insert(u, 1);
        }
        self.fired[v] = true;
        self.firings.push(FiringStep { vertex: v, routing });
        self.trace.push(TraceStep::Fire { vertex: v });
        Ok(())
    }

    fn fire_if_unfired(&mut self, v: usize) -> Result<()> {
        if !self.fired[v] {
            self.fire(v)?;
        }
        Ok(())
    }
}

/// First translation, from a zero-forcing set of the line graph.
///
/// Runs the closure with the default tie-break; use
/// [`brushing_from_line_forcing_run`] to drive the construction with an
/// explicit forcing run instead.
pub fn brushing_from_line_forcing(
    lgm: &LineGraphMap,
    black: &Colouring,
    lazy: bool,
) -> Result<BrushingFromForcing> {
    let run = forcing_closure(lgm.line(), black)?;
    brushing_from_line_forcing_run(lgm, &run, lazy)
}

/// First translation driven by an explicit forcing run on the line graph.
///
/// Follows the chains: a chain whose head becomes active while the chain is
/// still unused gets its brush on the endpoint of the head edge away from
/// the chain (the first force is the first instance); whenever the active
/// line vertex is adjacent to the head of an unused chain, that chain's
/// brush is placed on the shared endpoint; each force fires the two
/// endpoints of the active edge that have not fired yet; leftover chains
/// are single vertices and are cleaned head by head; finally every
/// remaining vertex fires on the brushes it received. With `lazy`, brushes
/// are only introduced when the host could not fire without them, which can
/// leave some chains without a brush (and the total below |Z|).
pub fn brushing_from_line_forcing_run(
    lgm: &LineGraphMap,
    run: &ForcingRun,
    lazy: bool,
) -> Result<BrushingFromForcing> {
    let g = lgm.base();
    let line = lgm.line();
    require_connected_with_edge(g)?;
    let run = replay_forcing(line, &run.initial, &run.forces)?;
    if !run.is_complete(line.vertex_count()) {
        return Err(Error::NotZeroForcingSet);
    }
    let chains = extract_chains(line, &run)?;
    let heads: Vec<usize> = chains.heads().collect();
    let mut used = vec![false; chains.chains.len()];
    let mut b = BrushBuilder::new(g, lazy);

    let assign = |b: &mut BrushBuilder, used: &mut Vec<bool>, k: usize, v: usize| {
        used[k] = true;
        if b.fired[v] {
            // the head's edge was already cleaned from the other side; the
            // brush is introduced anyway (and never moves again)
            if !lazy {
                b.introduce(v, vec![k]);
            }
        } else {
            b.pending[v].push(k);
        }
    };

    let mut chain_of_head = vec![usize::MAX; line.vertex_count()];
    for (k, &h) in heads.iter().enumerate() {
        chain_of_head[h] = k;
    }
    for &(x, y) in &run.forces {
        let ex = lgm.edge_of_vertex(x);
        let ey = lgm.edge_of_vertex(y);
        let meet = shared_vertex(ex, ey);
        let away = exclusive_vertex(ex, ey);
        // a head activating before any earlier active vertex touched it
        // still carries its chain's brush, on the endpoint it leaves behind
        // (the first force is the first instance of this)
        let own = chain_of_head[x];
        if own != usize::MAX && !used[own] {
            assign(&mut b, &mut used, own, away);
        }
        for k in 0..chains.chains.len() {
            if !used[k] && line.has_edge(heads[k], x) {
                let host = shared_vertex(ex, lgm.edge_of_vertex(heads[k]));
                assign(&mut b, &mut used, k, host);
            }
        }
        b.fire_if_unfired(away)?;
        b.fire_if_unfired(meet)?;
    }

    // leftover chains are single, initially black line vertices
    for k in 0..chains.chains.len() {
        if used[k] {
            continue;
        }
        let (v1, v2) = lgm.edge_of_vertex(heads[k]);
        assign(&mut b, &mut used, k, v1);
        for k2 in 0..chains.chains.len() {
            if !used[k2] && line.has_edge(heads[k2], heads[k]) {
                let host = shared_vertex(lgm.edge_of_vertex(heads[k]), lgm.edge_of_vertex(heads[k2]));
                assign(&mut b, &mut used, k2, host);
            }
        }
        b.fire_if_unfired(v1)?;
        b.fire_if_unfired(v2)?;
    }

    // every edge is now clean; unfired vertices fire on received brushes
    for v in 0..g.vertex_count() {
        b.fire_if_unfired(v)?;
    }

    Ok(BrushingFromForcing {
        chains,
        script: BrushScript {
            placement: b.placement,
            firings: b.firings,
        },
        chain_usage: b.chain_usage,
        trace: b.trace,
    })
}

/// Second translation, from a zero-forcing set of the line graph to a
/// zero-forcing set of the base graph of at most the same size.
pub fn forcing_set_from_line_forcing(lgm: &LineGraphMap, black: &Colouring) -> Result<Colouring> {
    let run = forcing_closure(lgm.line(), black)?;
    forcing_set_from_line_forcing_run(lgm, &run)
}

/// Second translation driven by an explicit forcing run on the line graph.
///
/// At each force of edge {a,b} on edge {b,c}: if the forcer heads a still
/// unused chain, the far endpoint `a` joins the set; every white vertex of
/// G adjacent to `a` or `b` (other than a, b, c) joins the set and retires
/// the chain of its connecting edge; then `a` forces `b` and `b` forces `c`
/// in G. Unused chains at the end are single edges, cleaned by the same
/// rule with at most one more vertex each.
pub fn forcing_set_from_line_forcing_run(
    lgm: &LineGraphMap,
    run: &ForcingRun,
) -> Result<Colouring> {
    let g = lgm.base();
    let line = lgm.line();
    require_connected_with_edge(g)?;
    let run = replay_forcing(line, &run.initial, &run.forces)?;
    if !run.is_complete(line.vertex_count()) {
        return Err(Error::NotZeroForcingSet);
    }
    let chains = extract_chains(line, &run)?;
    let mut chain_of = vec![usize::MAX; line.vertex_count()];
    for (k, chain) in chains.chains.iter().enumerate() {
        for &lv in chain {
            chain_of[lv] = k;
        }
    }
    let mut used = vec![false; chains.chains.len()];
    let mut black_g = vec![false; g.vertex_count()];
    let mut set = Colouring::new();

    let add = |set: &mut Colouring, black_g: &mut Vec<bool>, v: usize| {
        set.insert(v);
        black_g[v] = true;
    };

    // white vertices around {a, b} excluding `skip`, ascending
    let around = |black_g: &[bool], a: usize, b: usize, skip: &[usize]| -> Vec<usize> {
        let mut ws: Vec<usize> = g
            .neighbors(a)
            .iter()
            .chain(g.neighbors(b).iter())
            .copied()
            .filter(|&u| !black_g[u] && !skip.contains(&u))
            .collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    };

    for &(x, y) in &run.forces {
        let ex = lgm.edge_of_vertex(x);
        let ey = lgm.edge_of_vertex(y);
        let b_v = shared_vertex(ex, ey);
        let a_v = exclusive_vertex(ex, ey);
        let c_v = exclusive_vertex(ey, ex);
        if run.initial.contains(&x) && !used[chain_of[x]] {
            add(&mut set, &mut black_g, a_v);
            used[chain_of[x]] = true;
        }
        for u in around(&black_g, a_v, b_v, &[a_v, b_v, c_v]) {
            add(&mut set, &mut black_g, u);
            for host in [a_v, b_v] {
                if let Some(lv) = lgm.vertex_of_edge(host, u) {
                    used[chain_of[lv]] = true;
                }
            }
        }
        // when {a,b,c} is a triangle of G, a white c blocks a's force of b;
        // c is the endpoint of the black line vertex {a,c} and joins the
        // set from that chain
        if !black_g[b_v] && !black_g[c_v] && g.has_edge(a_v, c_v) {
            add(&mut set, &mut black_g, c_v);
            if let Some(lv) = lgm.vertex_of_edge(a_v, c_v) {
                used[chain_of[lv]] = true;
            }
        }
        black_g[b_v] = true;
        black_g[c_v] = true;
    }

    for k in 0..chains.chains.len() {
        if used[k] {
            continue;
        }
        let (a_v, b_v) = lgm.edge_of_vertex(chains.chains[k][0]);
        for u in around(&black_g, a_v, b_v, &[a_v, b_v]) {
            add(&mut set, &mut black_g, u);
            for host in [a_v, b_v] {
                if let Some(lv) = lgm.vertex_of_edge(host, u) {
                    used[chain_of[lv]] = true;
                }
            }
        }
        used[k] = true;
        if !black_g[a_v] && !black_g[b_v] {
            add(&mut set, &mut black_g, a_v);
        }
        black_g[a_v] = true;
        black_g[b_v] = true;
    }

    Ok(set)
}

/// Classification of one line-graph firing: `clean_incident` counts the
/// already-clean line edges at the vertex when it fired (0 means no brush
/// had reached it, so its whole budget was placed initially).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineFiringClass {
    pub line_vertex: usize,
    pub clean_incident: usize,
}

/// Witness produced by [`brushing_from_line_brushing`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BrushingFromLineBrushing {
    pub script: BrushScript,
    pub classification: Vec<LineFiringClass>,
    pub model: Model,
}

/// Third translation: a cleaning script for L(G) yields one for G with at
/// most the same number of brushes, under the same model.
///
/// Walks the line firing order: when an edge fires fresh (no clean incident
/// line edge), its endpoints are still dirty in G and at least one of them
/// fires now; when it fires with a clean incident line edge, its own edge
/// is already clean in G and the remaining endpoint fires now or later.
/// Each G firing is funded by its deficit only. The walk's free choices
/// (which endpoint first, whether to defer an endpoint whose edge is
/// already clean) are resolved by a small branch-and-bound minimizing the
/// brush total, seeded with the degree-based choice of the line script's
/// accounting; on graphs past the search threshold only the seed walk is
/// used.
pub fn brushing_from_line_brushing(
    lgm: &LineGraphMap,
    line_script: &BrushScript,
    model: Model,
) -> Result<BrushingFromLineBrushing> {
    let g = lgm.base();
    let line = lgm.line();
    require_connected_with_edge(g)?;
    if g.edge_count() == 1 {
        return Err(Error::SingleEdge);
    }
    let sim = simulate(line, line_script, model)?;
    if !sim.cleaned {
        return Err(Error::InvalidLineScript(match sim.stall_point {
            Some(i) => format!("stalls at firing {i}"),
            None => "does not fire every vertex".into(),
        }));
    }

    let mut line_fired = vec![false; line.vertex_count()];
    let mut classification = Vec::new();
    let mut steps = Vec::with_capacity(line_script.firings.len());
    for step in &line_script.firings {
        let lv = step.vertex;
        let clean_incident = line
            .neighbors(lv)
            .iter()
            .filter(|&&u| line_fired[u])
            .count();
        classification.push(LineFiringClass {
            line_vertex: lv,
            clean_incident,
        });
        line_fired[lv] = true;
        steps.push(lgm.edge_of_vertex(lv));
    }

    let heuristic = heuristic_walk(g, &steps, model);
    let best = if g.vertex_count() <= 24 {
        let mut search = WalkSearch {
            g,
            steps: &steps,
            model,
            best: heuristic,
            memo: std::collections::HashMap::new(),
        };
        search.run();
        search.best
    } else {
        heuristic
    };
    let script = script_from_steps(g, &best.firings);

    Ok(BrushingFromLineBrushing {
        script,
        classification,
        model,
    })
}

#[derive(Clone)]
struct Walk {
    total: usize,
    firings: Vec<FiringStep>,
}

/// Minimal funding needed to fire `v` now, and the resulting state with the
/// chosen per-edge routing (`extra[i]` brushes beyond one on the i-th dirty
/// edge).
fn fire_vertex(
    g: &Graph,
    fired: u64,
    brushes: &[u8],
    v: usize,
    extra: &[usize],
) -> (u64, Vec<u8>, usize, FiringStep) {
    let dirty: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| fired & (1 << u) == 0)
        .collect();
    let deficit = dirty.len().saturating_sub(brushes[v] as usize);
    let mut next = brushes.to_vec();
    next[v] = 0;
    let mut routing = BTreeMap::new();
    for (i, &u) in dirty.iter().enumerate() {
        let count = 1 + extra.get(i).copied().unwrap_or(0);
        next[u] += count as u8;
        routing.insert(u, count);
    }
    (
        fired | (1 << v),
        next,
        deficit,
        FiringStep { vertex: v, routing },
    )
}

/// Fires every not-yet-fired endpoint at its step, smaller-degree endpoint
/// first, one brush per edge; the literal reading of the line script's
/// accounting, valid in both models.
fn heuristic_walk(g: &Graph, steps: &[(usize, usize)], _model: Model) -> Walk {
    let mut fired = 0u64;
    let mut brushes = vec![0u8; g.vertex_count()];
    let mut walk = Walk {
        total: 0,
        firings: Vec::with_capacity(g.vertex_count()),
    };
    let mut fire = |v: usize, fired: &mut u64, brushes: &mut Vec<u8>, walk: &mut Walk| {
        if *fired & (1 << v) == 0 {
            let (f, br, cost, step) = fire_vertex(g, *fired, brushes, v, &[]);
            *fired = f;
            *brushes = br;
            walk.total += cost;
            walk.firings.push(step);
        }
    };
    for &(a, b) in steps {
        let (hi, lo) = if g.degree(a) >= g.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        fire(lo, &mut fired, &mut brushes, &mut walk);
        fire(hi, &mut fired, &mut brushes, &mut walk);
    }
    for v in 0..g.vertex_count() {
        fire(v, &mut fired, &mut brushes, &mut walk);
    }
    walk
}

/// Rebuilds the placement map implied by a firing sequence: each firing is
/// funded by its deficit at that moment.
fn script_from_steps(g: &Graph, firings: &[FiringStep]) -> BrushScript {
    let mut brushes = vec![0usize; g.vertex_count()];
    let mut placement = BrushConfig::new();
    for step in firings {
        let needed: usize = step.routing.values().sum();
        if needed > brushes[step.vertex] {
            *placement.entry(step.vertex).or_insert(0) += needed - brushes[step.vertex];
        }
        brushes[step.vertex] = 0;
        for (&u, &c) in &step.routing {
            brushes[u] += c;
        }
    }
    BrushScript {
        placement,
        firings: firings.to_vec(),
    }
}

/// Branch-and-bound over the walk's legal choices. At a fresh edge one or
/// both endpoints fire (either order); at an already-clean edge the
/// remaining endpoint fires now or is deferred (deferred vertices end with
/// all incident edges clean and fire for free at the end). Under the
/// unrestricted model a firing may also split its excess brushes over the
/// dirty edges.
struct WalkSearch<'a> {
    g: &'a Graph,
    steps: &'a [(usize, usize)],
    model: Model,
    best: Walk,
    memo: std::collections::HashMap<(usize, u64, Vec<u8>), usize>,
}

impl WalkSearch<'_> {
    fn run(&mut self) {
        let brushes = vec![0u8; self.g.vertex_count()];
        let mut firings = Vec::with_capacity(self.g.vertex_count());
        self.rec(0, 0, &brushes, 0, &mut firings);
    }

    /// All firing variants of `v`: one brush per dirty edge, plus (in the
    /// unrestricted model) every split of the excess across those edges.
    fn fire_options(
        &self,
        fired: u64,
        brushes: &[u8],
        v: usize,
    ) -> Vec<(u64, Vec<u8>, usize, FiringStep)> {
        let dirty_count = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&u| fired & (1 << u) == 0)
            .count();
        let excess = (brushes[v] as usize).saturating_sub(dirty_count);
        let splits: Vec<Vec<usize>> =
            if self.model == Model::Unrestricted && excess > 0 && dirty_count > 0 {
                excess_splits(excess, dirty_count)
            } else {
                vec![vec![0; dirty_count]]
            };
        splits
            .into_iter()
            .map(|extra| fire_vertex(self.g, fired, brushes, v, &extra))
            .collect()
    }

    fn rec(
        &mut self,
        idx: usize,
        fired: u64,
        brushes: &[u8],
        spent: usize,
        firings: &mut Vec<FiringStep>,
    ) {
        if spent >= self.best.total {
            return;
        }
        if idx == self.steps.len() {
            let mut complete = firings.clone();
            for v in 0..self.g.vertex_count() {
                if fired & (1 << v) == 0 {
                    complete.push(FiringStep {
                        vertex: v,
                        routing: BTreeMap::new(),
                    });
                }
            }
            self.best = Walk {
                total: spent,
                firings: complete,
            };
            return;
        }
        let key = (idx, fired, brushes.to_vec());
        if let Some(&seen) = self.memo.get(&key) {
            if seen <= spent {
                return;
            }
        }
        self.memo.insert(key, spent);

        let (a, b) = self.steps[idx];
        if fired & (1 << a) != 0 || fired & (1 << b) != 0 {
            self.rec(idx + 1, fired, brushes, spent, firings);
            for v in [a, b] {
                if fired & (1 << v) == 0 {
                    for (f, br, cost, step) in self.fire_options(fired, brushes, v) {
                        firings.push(step);
                        self.rec(idx + 1, f, &br, spent + cost, firings);
                        firings.pop();
                    }
                }
            }
        } else {
            for seq in [[a, b], [b, a]] {
                for (f1, br1, c1, step1) in self.fire_options(fired, brushes, seq[0]) {
                    firings.push(step1);
                    self.rec(idx + 1, f1, &br1, spent + c1, firings);
                    for (f2, br2, c2, step2) in self.fire_options(f1, &br1, seq[1]) {
                        firings.push(step2);
                        self.rec(idx + 1, f2, &br2, spent + c1 + c2, firings);
                        firings.pop();
                    }
                    firings.pop();
                }
            }
        }
    }
}

/// All ways to spread `excess` extra brushes over `parts` dirty edges.
fn excess_splits(excess: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; parts];
    fn rec(cur: &mut Vec<usize>, idx: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(cur.clone());
            return;
        }
        for c in 0..=left {
            cur[idx] = c;
            rec(cur, idx + 1, left - c, out);
        }
    }
    rec(&mut cur, 0, excess, &mut out);
    out
}

/// DOT rendering of a first-translation trace: one graph block per step;
/// newly introduced brushes are marked with a `+`.
pub fn witness_trace_dot(g: &Graph, witness: &BrushingFromForcing) -> String {
    let mut brushes = vec![0usize; g.vertex_count()];
    let mut new_brushes = vec![0usize; g.vertex_count()];
    let mut fired = vec![false; g.vertex_count()];
    let mut out = String::new();
    for (i, step) in witness.trace.iter().enumerate() {
        new_brushes.iter_mut().for_each(|c| *c = 0);
        let caption = match step {
            TraceStep::Introduce { vertex, chains } => {
                brushes[*vertex] += chains.len();
                new_brushes[*vertex] = chains.len();
                format!("({}) add {} brush(es) at {}", i + 1, chains.len(), vertex)
            }
            TraceStep::Fire { vertex } => {
                let dirty: Vec<usize> = g
                    .neighbors(*vertex)
                    .iter()
                    .copied()
                    .filter(|&u| !fired[u])
                    .collect();
                brushes[*vertex] = 0;
                for &u in &dirty {
                    brushes[u] += 1;
                }
                fired[*vertex] = true;
                format!("({}) vertex {} fires", i + 1, vertex)
            }
        };
        writeln!(out, "graph step{} {{", i + 1).unwrap();
        writeln!(out, "  label=\"{caption}\";").unwrap();
        for v in 0..g.vertex_count() {
            let mut label = format!("{v}");
            if brushes[v] > 0 {
                label.push_str(&format!(" ({}", brushes[v]));
                if new_brushes[v] > 0 {
                    label.push_str(&format!(", +{}", new_brushes[v]));
                }
                label.push(')');
            }
            let style = if fired[v] { "dashed" } else { "solid" };
            writeln!(out, "  v{v} [label=\"{label}\", style={style}];").unwrap();
        }
        for &(u, v) in g.edges() {
            let style = if fired[u] || fired[v] { "dashed" } else { "solid" };
            writeln!(out, "  v{u} -- v{v} [style={style}];").unwrap();
        }
        out.push_str("}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brushing::{exact_brushing, exact_restricted_brushing, ExcessRule};
    use crate::families::{generate, FamilySpec};
    use crate::fixtures;
    use crate::forcing::{exact_zero_forcing, is_zero_forcing_set};
    use crate::graph::line_graph;

    #[test]
    fn worked_example_reproduces_published_trace() {
        let g = fixtures::figure_example();
        let lgm = line_graph(&g);
        let black = fixtures::figure_example_forcing_set(&g);
        let forces = fixtures::figure_example_forces(&g);
        let run = replay_forcing(lgm.line(), &black, &forces).unwrap();
        let w = brushing_from_line_forcing_run(&lgm, &run, false).unwrap();

        // chains g->f->c, i->d, h->e->a, then the three single chains
        let id = |c: char| fixtures::EDGE_LETTERS.iter().position(|&x| x == c).unwrap();
        assert_eq!(w.chains.chains[0], vec![id('g'), id('f'), id('c')]);
        assert_eq!(w.chains.chains[1], vec![id('i'), id('d')]);
        assert_eq!(w.chains.chains[2], vec![id('h'), id('e'), id('a')]);
        let singles: std::collections::BTreeSet<usize> =
            w.chains.chains[3..].iter().map(|c| c[0]).collect();
        assert_eq!(singles, [id('b'), id('k'), id('j')].into_iter().collect());

        // eleven steps; firing order 7,3,4,5,6,2,1 in the original labels
        assert_eq!(w.trace.len(), 11);
        assert_eq!(w.firing_order(), vec![6, 2, 3, 4, 5, 1, 0]);

        // brush introductions at (step, vertex, count) matching the diagrams
        let intros: Vec<(usize, usize, usize)> = w
            .trace
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match s {
                TraceStep::Introduce { vertex, chains } => Some((i, *vertex, chains.len())),
                _ => None,
            })
            .collect();
        assert_eq!(intros, vec![(0, 6, 2), (2, 2, 1), (4, 3, 2), (6, 4, 1)]);

        // six brushes, replay cleans under the one-brush-per-edge model
        assert_eq!(w.script.total_brushes(), 6);
        let sim = simulate(&g, &w.script, Model::Restricted).unwrap();
        assert!(sim.cleaned);
        assert_eq!(sim.max_brushes_on_edge, 1);
    }

    #[test]
    fn square_from_its_own_line_graph() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let lgm = line_graph(&c4);
        let (z, zset) = exact_zero_forcing(lgm.line(), 24).unwrap();
        assert_eq!(z, 2);
        let w = brushing_from_line_forcing(&lgm, &zset, false).unwrap();
        assert_eq!(w.script.total_brushes(), 2);
        assert!(simulate(&c4, &w.script, Model::Restricted).unwrap().cleaned);
    }

    #[test]
    fn single_edge_gets_one_brush() {
        let k2 = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let lgm = line_graph(&k2);
        let black: Colouring = [0].into_iter().collect();
        let w = brushing_from_line_forcing(&lgm, &black, false).unwrap();
        assert_eq!(w.script.total_brushes(), 1);
        assert!(simulate(&k2, &w.script, Model::Restricted).unwrap().cleaned);
    }

    #[test]
    fn preconditions_are_enforced() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let lgm = line_graph(&c4);
        // one black line vertex cannot force the 4-cycle line graph
        let black: Colouring = [0].into_iter().collect();
        assert!(matches!(
            brushing_from_line_forcing(&lgm, &black, false),
            Err(Error::NotZeroForcingSet)
        ));

        let two = crate::graph::add_isolated(&generate(&FamilySpec::Path { n: 2 }).unwrap(), 1);
        let lgm = line_graph(&two);
        let black: Colouring = [0].into_iter().collect();
        assert!(matches!(
            brushing_from_line_forcing(&lgm, &black, false),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn forcing_translation_on_star_and_path() {
        // star K_{1,3}: line graph is a triangle with minimum sets of size 2
        let star = generate(&FamilySpec::Star { leaves: 3 }).unwrap();
        let lgm = line_graph(&star);
        let (z, zset) = exact_zero_forcing(lgm.line(), 24).unwrap();
        assert_eq!(z, 2);
        let s = forcing_set_from_line_forcing(&lgm, &zset).unwrap();
        assert!(s.len() <= 2);
        assert!(is_zero_forcing_set(&star, &s));
        assert_eq!(exact_zero_forcing(&star, 24).unwrap().0, 2); // tight here

        // P_3: one endpoint of the line edge suffices
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let lgm = line_graph(&p3);
        let black: Colouring = [0].into_iter().collect();
        let s = forcing_set_from_line_forcing(&lgm, &black).unwrap();
        assert_eq!(s.len(), 1);
        assert!(is_zero_forcing_set(&p3, &s));
    }

    #[test]
    fn forcing_translation_on_worked_example() {
        let g = fixtures::figure_example();
        let lgm = line_graph(&g);
        let black = fixtures::figure_example_forcing_set(&g);
        let forces = fixtures::figure_example_forces(&g);
        let run = replay_forcing(lgm.line(), &black, &forces).unwrap();
        let s = forcing_set_from_line_forcing_run(&lgm, &run).unwrap();
        assert!(s.len() <= 6);
        assert!(is_zero_forcing_set(&g, &s));
    }

    #[test]
    fn line_brushing_translation_on_cycle() {
        // L(C_5) = C_5; a 2-brush line script becomes a 2-brush script
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let lgm = line_graph(&c5);
        let (bl, line_script) = exact_brushing(lgm.line(), 8, 12, ExcessRule::Distribute).unwrap();
        assert_eq!(bl, 2);
        let w = brushing_from_line_brushing(&lgm, &line_script, Model::Unrestricted).unwrap();
        assert!(w.script.total_brushes() <= 2);
        assert!(simulate(&c5, &w.script, Model::Unrestricted).unwrap().cleaned);
    }

    #[test]
    fn line_brushing_translation_on_star() {
        // L(K_{1,3}) = K_3 with B = 2; the star itself needs 2
        let star = generate(&FamilySpec::Star { leaves: 3 }).unwrap();
        let lgm = line_graph(&star);
        let (bl, line_script) = exact_brushing(lgm.line(), 8, 12, ExcessRule::Distribute).unwrap();
        assert_eq!(bl, 2);
        let w = brushing_from_line_brushing(&lgm, &line_script, Model::Unrestricted).unwrap();
        assert!(w.script.total_brushes() <= 2);
        assert!(simulate(&star, &w.script, Model::Unrestricted).unwrap().cleaned);
        let (b_star, _) = exact_brushing(&star, 8, 12, ExcessRule::Distribute).unwrap();
        assert_eq!(b_star, 2); // the bound is tight here
    }

    #[test]
    fn line_brushing_rejects_single_edge_and_bad_scripts() {
        let k2 = generate(&FamilySpec::Path { n: 2 }).unwrap();
        let lgm = line_graph(&k2);
        let script = BrushScript {
            placement: BrushConfig::from([(0, 1)]),
            firings: vec![FiringStep {
                vertex: 0,
                routing: BTreeMap::new(),
            }],
        };
        assert!(matches!(
            brushing_from_line_brushing(&lgm, &script, Model::Unrestricted),
            Err(Error::SingleEdge)
        ));

        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let lgm = line_graph(&p4);
        let empty = BrushScript {
            placement: BrushConfig::new(),
            firings: Vec::new(),
        };
        assert!(matches!(
            brushing_from_line_brushing(&lgm, &empty, Model::Unrestricted),
            Err(Error::InvalidLineScript(_))
        ));
    }

    #[test]
    fn restricted_model_translation() {
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        let lgm = line_graph(&p5);
        let (bl, line_script) = exact_restricted_brushing(lgm.line(), 10).unwrap();
        let w = brushing_from_line_brushing(&lgm, &line_script, Model::Restricted).unwrap();
        assert!(w.script.total_brushes() <= bl);
        let sim = simulate(&p5, &w.script, Model::Restricted).unwrap();
        assert!(sim.cleaned);
        assert!(sim.max_brushes_on_edge <= 1);
    }
}
