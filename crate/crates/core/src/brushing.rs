//! Graph cleaning with brushes: firing simulation for both models, exact
//! brushing numbers by search, and the scripted strategies for prisms and
//! chained six-cycles.
//!
//! Every edge and vertex starts dirty. A vertex may fire once it holds at
//! least as many brushes as it has incident dirty edges; firing cleans the
//! vertex and all those edges, sending brushes along them. In the
//! unrestricted model each dirty edge takes at least one brush and excess
//! brushes may be split over the edges or kept back (kept brushes leave
//! play); in the restricted model each edge is traversed by exactly one
//! brush. An isolated vertex needs one brush of its own to be cleaned.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::Graph;

/// The two cleaning models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Model {
    /// B(G): any number of brushes may traverse an edge.
    Unrestricted,
    /// b(G): exactly one brush traverses each edge.
    Restricted,
}

/// How a firing vertex may dispose of brushes beyond one per dirty edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcessRule {
    /// Excess brushes may be routed along any dirty incident edges.
    Distribute,
    /// Excess brushes stay at the fired vertex and leave play.
    Stay,
}

/// Initial brush placement: vertex -> brush count.
pub type BrushConfig = BTreeMap<usize, usize>;

/// One firing: the vertex and, per dirty incident edge (keyed by the other
/// endpoint), how many brushes traverse it. Brushes not routed stay at the
/// vertex and leave play.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiringStep {
    pub vertex: usize,
    pub routing: BTreeMap<usize, usize>,
}

/// A full cleaning script: initial placement plus firings in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrushScript {
    pub placement: BrushConfig,
    pub firings: Vec<FiringStep>,
}

impl BrushScript {
    pub fn total_brushes(&self) -> usize {
        self.placement.values().sum()
    }
}

/// Per-firing bookkeeping gathered during a replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub vertex: usize,
    /// Incident dirty edges at firing time.
    pub dirty_degree: usize,
    /// Incident already-clean edges at firing time.
    pub clean_incident: usize,
    /// Brushes retained at the vertex, now out of play.
    pub discarded: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationResult {
    /// All vertices (and hence all edges) clean.
    pub cleaned: bool,
    /// First firing index whose precondition failed, if any.
    pub stall_point: Option<usize>,
    pub max_brushes_on_edge: usize,
    pub steps: Vec<StepReport>,
}

struct CleaningState {
    brushes: Vec<usize>,
    fired: Vec<bool>,
}

impl CleaningState {
    fn new(g: &Graph, placement: &BrushConfig) -> Result<Self> {
        let mut brushes = vec![0usize; g.vertex_count()];
        for (&v, &c) in placement {
            if v >= g.vertex_count() {
                return Err(Error::MalformedScript(format!(
                    "placement on unknown vertex {v}"
                )));
            }
            brushes[v] += c;
        }
        Ok(CleaningState {
            brushes,
            fired: vec![false; g.vertex_count()],
        })
    }

    fn dirty_neighbors<'a>(&'a self, g: &'a Graph, v: usize) -> impl Iterator<Item = usize> + 'a {
        g.neighbors(v).iter().copied().filter(|&u| !self.fired[u])
    }
}

/// Replays `script` on `g` under `model`.
///
/// Structural problems (unknown vertices, double firings, routing that
/// misses a dirty edge or touches a clean one, more than one brush per edge
/// in the restricted model) are errors; a firing whose brush precondition
/// fails is reported as a stall instead, so tests can assert where a broken
/// script dies.
pub fn simulate(g: &Graph, script: &BrushScript, model: Model) -> Result<SimulationResult> {
    let mut st = CleaningState::new(g, &script.placement)?;
    let mut result = SimulationResult {
        cleaned: false,
        stall_point: None,
        max_brushes_on_edge: 0,
        steps: Vec::with_capacity(script.firings.len()),
    };
    for (i, step) in script.firings.iter().enumerate() {
        let v = step.vertex;
        if v >= g.vertex_count() {
            return Err(Error::MalformedScript(format!("firing unknown vertex {v}")));
        }
        if st.fired[v] {
            return Err(Error::MalformedScript(format!("vertex {v} fired twice")));
        }
        let dirty: Vec<usize> = st.dirty_neighbors(g, v).collect();
        for (&u, &c) in &step.routing {
            if !g.has_edge(v, u) {
                return Err(Error::MalformedScript(format!(
                    "routing from {v} along non-edge to {u}"
                )));
            }
            if st.fired[u] {
                return Err(Error::MalformedScript(format!(
                    "routing from {v} along already-clean edge to {u}"
                )));
            }
            if c == 0 {
                return Err(Error::MalformedScript(format!(
                    "zero brushes routed from {v} to {u}"
                )));
            }
            if model == Model::Restricted && c > 1 {
                return Err(Error::MalformedScript(format!(
                    "{c} brushes on edge {{{v}, {u}}} in the one-brush-per-edge model"
                )));
            }
        }
        if let Some(&u) = dirty.iter().find(|u| !step.routing.contains_key(u)) {
            return Err(Error::MalformedScript(format!(
                "firing {v} leaves dirty edge {{{v}, {u}}} without a brush"
            )));
        }
        let routed: usize = step.routing.values().sum();
        // an isolated vertex is only cleaned by a brush of its own
        let required = if g.degree(v) == 0 { 1 } else { routed };
        if st.brushes[v] < required {
            result.stall_point = Some(i);
            return Ok(result);
        }
        let discarded = st.brushes[v] - routed;
        st.brushes[v] = 0;
        for (&u, &c) in &step.routing {
            st.brushes[u] += c;
            result.max_brushes_on_edge = result.max_brushes_on_edge.max(c);
        }
        st.fired[v] = true;
        result.steps.push(StepReport {
            vertex: v,
            dirty_degree: dirty.len(),
            clean_incident: g.degree(v) - dirty.len(),
            discarded,
        });
    }
    result.cleaned = st.fired.iter().all(|&f| f);
    Ok(result)
}

/// Lower bound on both brushing numbers from degrees alone, summed over
/// components: a component of minimum degree >= 2 cannot be cleaned with
/// fewer than two brushes (its first firing already needs two), and every
/// other component still needs one.
pub fn brushing_lower_bound(g: &Graph) -> usize {
    g.connected_components()
        .iter()
        .map(|comp| {
            let min_deg = comp.iter().map(|&v| g.degree(v)).min().unwrap_or(0);
            if min_deg >= 2 {
                2
            } else {
                1
            }
        })
        .sum()
}

fn merge_scripts(total: &mut BrushScript, part: BrushScript) {
    for (v, c) in part.placement {
        *total.placement.entry(v).or_insert(0) += c;
    }
    total.firings.extend(part.firings);
}

fn isolated_script(v: usize) -> BrushScript {
    BrushScript {
        placement: BrushConfig::from([(v, 1)]),
        firings: vec![FiringStep {
            vertex: v,
            routing: BTreeMap::new(),
        }],
    }
}

/// Exact restricted brushing number b(G) with a witness script.
///
/// Uses the vertex-ordering characterization: b equals half the minimum
/// total imbalance over orderings, where a vertex's imbalance is the
/// absolute difference between its later and earlier neighbours. The
/// minimum is found by dynamic programming over vertex subsets of each
/// component; the witness fires the optimal ordering, placing each vertex's
/// deficit up front. `budget` caps the component size.
pub fn exact_restricted_brushing(g: &Graph, budget: usize) -> Result<(usize, BrushScript)> {
    let budget = budget.min(24);
    let mut value = 0;
    let mut script = BrushScript {
        placement: BrushConfig::new(),
        firings: Vec::new(),
    };
    for comp in g.connected_components() {
        if comp.len() == 1 {
            value += 1;
            merge_scripts(&mut script, isolated_script(comp[0]));
            continue;
        }
        if comp.len() > budget {
            return Err(Error::BudgetExceeded {
                what: "exact restricted brushing",
                size: comp.len(),
                budget,
            });
        }
        let sub = g.induced(&comp);
        let (cost, ordering) = min_imbalance_ordering(&sub);
        value += cost;
        merge_scripts(&mut script, ordering_script(g, &comp, &ordering));
    }
    Ok((value, script))
}

/// Minimum over orderings of the sum of max(0, later - earlier), found by
/// subset DP over suffixes; returns the cost and the lexicographically
/// least optimal ordering (local indices).
fn min_imbalance_ordering(g: &Graph) -> (usize, Vec<usize>) {
    let m = g.vertex_count();
    debug_assert!((1..=24).contains(&m));
    let full: usize = (1 << m) - 1;
    let place_cost = |placed: usize, v: usize| {
        let earlier = g
            .neighbors(v)
            .iter()
            .filter(|&&u| placed & (1 << u) != 0)
            .count();
        (g.degree(v) - earlier).saturating_sub(earlier) as u32
    };
    // best[S] = cheapest completion once the vertices of S are placed
    let mut best = vec![u32::MAX; full + 1];
    best[full] = 0;
    for placed in (0..full).rev() {
        for v in 0..m {
            if placed & (1 << v) != 0 {
                continue;
            }
            let with_v = best[placed | (1 << v)].saturating_add(place_cost(placed, v));
            if with_v < best[placed] {
                best[placed] = with_v;
            }
        }
    }
    let mut ordering = Vec::with_capacity(m);
    let mut placed = 0usize;
    while placed != full {
        for v in 0..m {
            if placed & (1 << v) != 0 {
                continue;
            }
            if place_cost(placed, v) + best[placed | (1 << v)] == best[placed] {
                ordering.push(v);
                placed |= 1 << v;
                break;
            }
        }
    }
    (best[0] as usize, ordering)
}

/// Witness script for an ordering of one component: each vertex starts with
/// its deficit and fires in order, sending one brush to every later
/// neighbour.
fn ordering_script(g: &Graph, comp: &[usize], ordering: &[usize]) -> BrushScript {
    let mut placement = BrushConfig::new();
    let mut firings = Vec::new();
    let position: BTreeMap<usize, usize> = ordering
        .iter()
        .enumerate()
        .map(|(pos, &v)| (comp[v], pos))
        .collect();
    for &local in ordering {
        let v = comp[local];
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|u| position[u] > position[&v])
            .collect();
        let earlier = g.degree(v) - later.len();
        let deficit = later.len().saturating_sub(earlier);
        if deficit > 0 {
            placement.insert(v, deficit);
        }
        firings.push(FiringStep {
            vertex: v,
            routing: later.into_iter().map(|u| (u, 1)).collect(),
        });
    }
    BrushScript { placement, firings }
}

/// All weak compositions of `total` into `parts` parts, lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
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
    rec(&mut cur, 0, total, &mut out);
    out
}

/// Independent oracle for b(G): direct search over initial placements and
/// firing sequences under the one-brush-per-edge rule, no imbalance theory.
/// `max_n` caps component size, `brush_cap` the candidate totals tried.
pub fn exact_restricted_brushing_direct(
    g: &Graph,
    max_n: usize,
    brush_cap: usize,
) -> Result<usize> {
    let mut value = 0;
    for comp in g.connected_components() {
        if comp.len() == 1 {
            value += 1;
            continue;
        }
        if comp.len() > max_n.min(16) {
            return Err(Error::BudgetExceeded {
                what: "direct restricted brushing search",
                size: comp.len(),
                budget: max_n.min(16),
            });
        }
        let sub = g.induced(&comp);
        let mut found = None;
        'totals: for k in 0..=brush_cap {
            for placement in compositions(k, sub.vertex_count()) {
                if restricted_search(&sub, &placement) {
                    found = Some(k);
                    break 'totals;
                }
            }
        }
        match found {
            Some(k) => value += k,
            None => {
                return Err(Error::BudgetExceeded {
                    what: "direct restricted brushing search (brush cap)",
                    size: brush_cap + 1,
                    budget: brush_cap,
                })
            }
        }
    }
    Ok(value)
}

fn restricted_search(g: &Graph, placement: &[usize]) -> bool {
    let n = g.vertex_count();
    let full: u32 = (1 << n) - 1;
    let mut failed: HashSet<(u32, Vec<u8>)> = HashSet::new();
    let brushes: Vec<u8> = placement.iter().map(|&c| c as u8).collect();
    fn rec(g: &Graph, fired: u32, brushes: &[u8], full: u32, failed: &mut HashSet<(u32, Vec<u8>)>) -> bool {
        if fired == full {
            return true;
        }
        let key = (fired, brushes.to_vec());
        if failed.contains(&key) {
            return false;
        }
        for v in 0..g.vertex_count() {
            if fired & (1 << v) != 0 {
                continue;
            }
            let dirty: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| fired & (1 << u) == 0)
                .collect();
            if (brushes[v] as usize) < dirty.len() {
                continue;
            }
            let mut next = brushes.to_vec();
            next[v] = 0; // one brush per dirty edge, the rest leave play
            for &u in &dirty {
                next[u] += 1;
            }
            if rec(g, fired | (1 << v), &next, full, failed) {
                return true;
            }
        }
        failed.insert(key);
        false
    }
    rec(g, 0, &brushes, full, &mut failed)
}

/// Exact brushing number B(G) with a witness script.
///
/// Iterates candidate totals k = 0, 1, ...; for each, enumerates placements
/// of k brushes and searches firing sequences, branching over every way of
/// distributing excess brushes across the dirty incident edges (discarding
/// is never better than routing, so discard branches are pruned; under
/// [`ExcessRule::Stay`] excess is forced to stay instead). States are
/// memoized on the fired set and brush vector. The restricted solver
/// provides an upper bound: if every k below b(G) fails, that value and its
/// witness are returned directly.
pub fn exact_brushing(
    g: &Graph,
    max_n: usize,
    brush_cap: usize,
    rule: ExcessRule,
) -> Result<(usize, BrushScript)> {
    let mut value = 0;
    let mut script = BrushScript {
        placement: BrushConfig::new(),
        firings: Vec::new(),
    };
    for comp in g.connected_components() {
        if comp.len() == 1 {
            value += 1;
            merge_scripts(&mut script, isolated_script(comp[0]));
            continue;
        }
        if comp.len() > max_n.min(16) {
            return Err(Error::BudgetExceeded {
                what: "exact brushing search",
                size: comp.len(),
                budget: max_n.min(16),
            });
        }
        let sub = g.induced(&comp);
        // the restricted value caps the search: its witness also cleans in
        // this model, so some total <= b exists and the sweep stops there
        let restricted = if comp.len() <= 24 {
            Some(exact_restricted_brushing(&sub, 24)?.0)
        } else {
            None
        };
        let stop = restricted.unwrap_or(brush_cap).min(brush_cap);
        let mut found = None;
        'totals: for k in 0..=stop {
            for placement in compositions(k, sub.vertex_count()) {
                if let Some(firings) = unrestricted_search(&sub, &placement, rule) {
                    let placement_map = placement
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c > 0)
                        .map(|(v, &c)| (comp[v], c))
                        .collect();
                    let firings = firings
                        .into_iter()
                        .map(|st| FiringStep {
                            vertex: comp[st.vertex],
                            routing: st.routing.into_iter().map(|(u, c)| (comp[u], c)).collect(),
                        })
                        .collect();
                    found = Some((
                        k,
                        BrushScript {
                            placement: placement_map,
                            firings,
                        },
                    ));
                    break 'totals;
                }
            }
        }
        let (k, comp_script) = found.ok_or(Error::BudgetExceeded {
            what: "exact brushing search (brush cap)",
            size: brush_cap + 1,
            budget: brush_cap,
        })?;
        value += k;
        merge_scripts(&mut script, comp_script);
    }
    Ok((value, script))
}

/// Depth-first search for a cleaning sequence from a fixed placement;
/// returns the firing steps (local indices) of the first one found.
fn unrestricted_search(g: &Graph, placement: &[usize], rule: ExcessRule) -> Option<Vec<FiringStep>> {
    let n = g.vertex_count();
    let full: u32 = (1 << n) - 1;
    let mut failed: HashSet<(u32, Vec<u8>)> = HashSet::new();
    let brushes: Vec<u8> = placement.iter().map(|&c| c as u8).collect();
    let mut path = Vec::new();

    fn rec(
        g: &Graph,
        fired: u32,
        brushes: &[u8],
        full: u32,
        rule: ExcessRule,
        failed: &mut HashSet<(u32, Vec<u8>)>,
        path: &mut Vec<FiringStep>,
    ) -> bool {
        if fired == full {
            return true;
        }
        let key = (fired, brushes.to_vec());
        if failed.contains(&key) {
            return false;
        }
        for v in 0..g.vertex_count() {
            if fired & (1 << v) != 0 {
                continue;
            }
            let dirty: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| fired & (1 << u) == 0)
                .collect();
            let avail = brushes[v] as usize;
            if avail < dirty.len() {
                continue;
            }
            let excess = avail - dirty.len();
            let splits = match rule {
                ExcessRule::Distribute if !dirty.is_empty() => compositions(excess, dirty.len()),
                _ => vec![vec![0; dirty.len()]],
            };
            for split in splits {
                let mut next = brushes.to_vec();
                next[v] = 0;
                let mut routing = BTreeMap::new();
                for (i, &u) in dirty.iter().enumerate() {
                    let count = 1 + split[i];
                    next[u] += count as u8;
                    routing.insert(u, count);
                }
                path.push(FiringStep { vertex: v, routing });
                if rec(g, fired | (1 << v), &next, full, rule, failed, path) {
                    return true;
                }
                path.pop();
            }
        }
        failed.insert(key);
        false
    }

    if rec(g, 0, &brushes, full, rule, &mut failed, &mut path) {
        Some(path)
    } else {
        None
    }
}

/// The scripted cleaning of the prism `P_rows x C_cycle` with `cycle + 2`
/// brushes: all brushes start on one outer-ring vertex; each firing routes
/// one brush per dirty edge and sends the whole excess to the next ring
/// vertex clockwise, or down the spoke once its ring is finished. Each ring
/// is swept in turn, the bundle spiralling inwards.
pub fn prism_strategy(rows: usize, cycle: usize) -> Result<BrushScript> {
    let g = generate(&FamilySpec::Prism { rows, cycle })?;
    let s = cycle;
    let mut placement = BrushConfig::new();
    placement.insert(0, s + 2);
    let mut st = CleaningState::new(&g, &placement)?;
    let mut firings = Vec::new();
    for layer in 0..rows {
        let start = (s - (layer % s)) % s;
        for t in 0..s {
            let j = (start + t) % s;
            let v = layer * s + j;
            let dirty: Vec<usize> = st.dirty_neighbors(&g, v).collect();
            let mut routing: BTreeMap<usize, usize> =
                dirty.iter().map(|&u| (u, 1)).collect();
            let excess = st.brushes[v].saturating_sub(dirty.len());
            if excess > 0 {
                let clockwise = layer * s + (j + 1) % s;
                let spoke = (layer + 1) * s + j;
                let target = if routing.contains_key(&clockwise) {
                    Some(clockwise)
                } else if layer + 1 < rows && routing.contains_key(&spoke) {
                    Some(spoke)
                } else {
                    None // final vertex: leftovers leave play
                };
                if let Some(u) = target {
                    *routing.get_mut(&u).unwrap() += excess;
                }
            }
            let routed: usize = routing.values().sum();
            debug_assert!(st.brushes[v] >= routed);
            st.brushes[v] = 0;
            for (&u, &c) in &routing {
                st.brushes[u] += c;
            }
            st.fired[v] = true;
            firings.push(FiringStep { vertex: v, routing });
        }
    }
    Ok(BrushScript { placement, firings })
}

/// The two-brush cleaning of `count` chained six-cycles: both brushes start
/// on the first anchor and travel around each cycle's two arcs, meeting at
/// the next anchor (cut vertex) with exactly the two brushes it needs.
/// One brush per edge throughout.
pub fn chained_cycle_strategy(count: usize) -> Result<BrushScript> {
    let len = 6;
    let g = generate(&FamilySpec::ChainedCycles { count, len })?;
    let anchor = |i: usize| crate::families::chain_anchor(i, len);
    let arc1 = len / 2;
    let mut order = vec![anchor(0)];
    for i in 0..count {
        let base = 1 + i * (len - 1);
        for t in (0..arc1 - 1).chain(arc1..len - 1) {
            order.push(base + t); // both arcs, skipping the anchor slot
        }
        order.push(anchor(i + 1));
    }
    let mut placement = BrushConfig::new();
    placement.insert(anchor(0), 2);
    let mut st = CleaningState::new(&g, &placement)?;
    let mut firings = Vec::new();
    for v in order {
        let routing: BTreeMap<usize, usize> =
            st.dirty_neighbors(&g, v).map(|u| (u, 1)).collect();
        let routed: usize = routing.values().sum();
        debug_assert!(st.brushes[v] >= routed);
        st.brushes[v] = 0;
        for (&u, &c) in &routing {
            st.brushes[u] += c;
        }
        st.fired[v] = true;
        firings.push(FiringStep { vertex: v, routing });
    }
    Ok(BrushScript { placement, firings })
}

/// DOT rendering of a script replay: one graph block per state, clean edges
/// dashed, clean vertices hollow (dashed outline), brush counts in labels.
pub fn script_trace_dot(g: &Graph, script: &BrushScript, model: Model) -> Result<String> {
    let sim = simulate(g, script, model)?;
    let mut st = CleaningState::new(g, &script.placement)?;
    let mut out = String::new();
    let render = |st: &CleaningState, name: &str, caption: &str, out: &mut String| {
        writeln!(out, "graph {name} {{").unwrap();
        writeln!(out, "  label=\"{caption}\";").unwrap();
        for v in 0..g.vertex_count() {
            let brushes = if st.brushes[v] > 0 {
                format!(" ({})", st.brushes[v])
            } else {
                String::new()
            };
            let style = if st.fired[v] { "dashed" } else { "solid" };
            writeln!(out, "  v{v} [label=\"{v}{brushes}\", style={style}];").unwrap();
        }
        for &(u, v) in g.edges() {
            let style = if st.fired[u] || st.fired[v] {
                "dashed"
            } else {
                "solid"
            };
            writeln!(out, "  v{u} -- v{v} [style={style}];").unwrap();
        }
        out.push_str("}\n");
    };
    render(&st, "state0", "initial configuration", &mut out);
    let upto = sim.stall_point.unwrap_or(script.firings.len());
    for (i, step) in script.firings.iter().take(upto).enumerate() {
        st.brushes[step.vertex] = 0;
        for (&u, &c) in &step.routing {
            st.brushes[u] += c;
        }
        st.fired[step.vertex] = true;
        let name = format!("state{}", i + 1);
        let caption = format!("after firing {}", step.vertex);
        render(&st, &name, &caption, &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::graph::add_isolated;

    fn script(placement: &[(usize, usize)], firings: &[(usize, &[(usize, usize)])]) -> BrushScript {
        BrushScript {
            placement: placement.iter().copied().collect(),
            firings: firings
                .iter()
                .map(|&(v, routing)| FiringStep {
                    vertex: v,
                    routing: routing.iter().copied().collect(),
                })
                .collect(),
        }
    }

    #[test]
    fn two_brushes_clean_a_square() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let s = script(
            &[(0, 2)],
            &[
                (0, &[(1, 1), (3, 1)]),
                (1, &[(2, 1)]),
                (3, &[(2, 1)]),
                (2, &[]),
            ],
        );
        let sim = simulate(&c4, &s, Model::Restricted).unwrap();
        assert!(sim.cleaned);
        assert_eq!(sim.max_brushes_on_edge, 1);
    }

    #[test]
    fn underfunded_star_stalls_at_step_zero() {
        let star = generate(&FamilySpec::Star { leaves: 4 }).unwrap();
        let s = script(
            &[(0, 2)],
            &[(0, &[(1, 1), (2, 1), (3, 1), (4, 1)])],
        );
        let sim = simulate(&star, &s, Model::Unrestricted).unwrap();
        assert!(!sim.cleaned);
        assert_eq!(sim.stall_point, Some(0));
    }

    #[test]
    fn malformed_scripts_are_rejected() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        // routing along a non-edge
        let s = script(&[(0, 2)], &[(0, &[(2, 1), (1, 1)])]);
        assert!(matches!(
            simulate(&c4, &s, Model::Unrestricted),
            Err(Error::MalformedScript(_))
        ));
        // leaving a dirty edge unbrushed
        let s = script(&[(0, 2)], &[(0, &[(1, 2)])]);
        assert!(matches!(
            simulate(&c4, &s, Model::Unrestricted),
            Err(Error::MalformedScript(_))
        ));
        // two brushes on an edge under the restricted model
        let s = script(&[(0, 3)], &[(0, &[(1, 2), (3, 1)])]);
        assert!(matches!(
            simulate(&c4, &s, Model::Restricted),
            Err(Error::MalformedScript(_))
        ));
    }

    #[test]
    fn isolated_vertex_needs_its_own_brush() {
        let g = add_isolated(&generate(&FamilySpec::Path { n: 2 }).unwrap(), 1);
        let no_brush = script(&[(0, 1)], &[(0, &[(1, 1)]), (1, &[]), (2, &[])]);
        let sim = simulate(&g, &no_brush, Model::Restricted).unwrap();
        assert_eq!(sim.stall_point, Some(2));

        let with_brush = script(&[(0, 1), (2, 1)], &[(0, &[(1, 1)]), (1, &[]), (2, &[])]);
        assert!(simulate(&g, &with_brush, Model::Restricted).unwrap().cleaned);
    }

    #[test]
    fn restricted_values_on_named_graphs() {
        let cases = [
            (FamilySpec::Cycle { n: 6 }, 2),
            (FamilySpec::Complete { n: 4 }, 4),
            (FamilySpec::Star { leaves: 4 }, 2),
            (FamilySpec::Path { n: 5 }, 1),
        ];
        for (spec, expected) in cases {
            let g = generate(&spec).unwrap();
            let (val, witness) = exact_restricted_brushing(&g, 10).unwrap();
            assert_eq!(val, expected, "b({spec})");
            let sim = simulate(&g, &witness, Model::Restricted).unwrap();
            assert!(sim.cleaned, "witness for {spec} must replay clean");
            assert_eq!(witness.total_brushes(), val);
        }
    }

    // brute-force enumeration of all orderings; independent of the subset DP
    fn half_min_imbalance_by_enumeration(g: &Graph) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.vertex_count())
            .into_iter()
            .map(|ord| {
                let pos: Vec<usize> = {
                    let mut p = vec![0; ord.len()];
                    for (i, &v) in ord.iter().enumerate() {
                        p[v] = i;
                    }
                    p
                };
                (0..g.vertex_count())
                    .map(|v| {
                        let later = g.neighbors(v).iter().filter(|&&u| pos[u] > pos[v]).count();
                        let earlier = g.degree(v) - later;
                        later.saturating_sub(earlier)
                    })
                    .sum::<usize>()
            })
            .min()
            .unwrap_or(0)
    }

    #[test]
    fn ordering_dp_matches_factorial_enumeration() {
        for spec in [
            FamilySpec::Cycle { n: 5 },
            FamilySpec::Complete { n: 4 },
            FamilySpec::Star { leaves: 4 },
            FamilySpec::CompleteBipartite { m: 2, n: 3 },
        ] {
            let g = generate(&spec).unwrap();
            let (val, _) = exact_restricted_brushing(&g, 10).unwrap();
            assert_eq!(val, half_min_imbalance_by_enumeration(&g), "{spec}");
        }
    }

    #[test]
    fn direct_search_oracle() {
        assert_eq!(
            exact_restricted_brushing_direct(
                &generate(&FamilySpec::Cycle { n: 4 }).unwrap(),
                7,
                10
            )
            .unwrap(),
            2
        );
        assert_eq!(
            exact_restricted_brushing_direct(
                &generate(&FamilySpec::Path { n: 5 }).unwrap(),
                7,
                10
            )
            .unwrap(),
            1
        );
        assert_eq!(
            exact_restricted_brushing_direct(
                &generate(&FamilySpec::Path { n: 2 }).unwrap(),
                7,
                10
            )
            .unwrap(),
            1
        );
    }

    #[test]
    fn brushing_values_on_named_graphs() {
        let cases = [
            (FamilySpec::Complete { n: 4 }, 4),
            (FamilySpec::Complete { n: 5 }, 6),
            (FamilySpec::Star { leaves: 5 }, 3),
        ];
        for (spec, expected) in cases {
            let g = generate(&spec).unwrap();
            let (val, witness) = exact_brushing(&g, 8, 12, ExcessRule::Distribute).unwrap();
            assert_eq!(val, expected, "B({spec})");
            let sim = simulate(&g, &witness, Model::Unrestricted).unwrap();
            assert!(sim.cleaned);
            assert_eq!(witness.total_brushes(), val);
        }
    }

    #[test]
    fn model_dominance_on_small_graphs() {
        for spec in [
            FamilySpec::Complete { n: 5 },
            FamilySpec::Star { leaves: 4 },
            FamilySpec::Cycle { n: 6 },
            FamilySpec::CompleteBipartite { m: 2, n: 3 },
        ] {
            let g = generate(&spec).unwrap();
            let (big_b, _) = exact_brushing(&g, 8, 12, ExcessRule::Distribute).unwrap();
            let (small_b, _) = exact_restricted_brushing(&g, 10).unwrap();
            assert!(big_b <= small_b, "B <= b fails on {spec}");
        }
    }

    #[test]
    fn stay_rule_matches_restricted_value() {
        // with excess forced to stay, each edge carries one brush, so the
        // search reproduces b
        for spec in [FamilySpec::Complete { n: 4 }, FamilySpec::Star { leaves: 4 }] {
            let g = generate(&spec).unwrap();
            let (stay, _) = exact_brushing(&g, 8, 12, ExcessRule::Stay).unwrap();
            let (b, _) = exact_restricted_brushing(&g, 10).unwrap();
            assert_eq!(stay, b, "{spec}");
        }
    }

    #[test]
    fn prism_script_cleans_with_cycle_plus_two() {
        for (r, s) in [(3, 4), (1, 3), (4, 4)] {
            let g = generate(&FamilySpec::Prism { rows: r, cycle: s }).unwrap();
            let strat = prism_strategy(r, s).unwrap();
            assert_eq!(strat.total_brushes(), s + 2);
            let sim = simulate(&g, &strat, Model::Unrestricted).unwrap();
            assert!(sim.cleaned, "prism {r}x{s} strategy must clean");
        }
    }

    #[test]
    fn chained_cycle_script_cleans_with_two() {
        for k in [1, 2, 5] {
            let g = generate(&FamilySpec::ChainedCycles { count: k, len: 6 }).unwrap();
            let strat = chained_cycle_strategy(k).unwrap();
            assert_eq!(strat.total_brushes(), 2);
            let sim = simulate(&g, &strat, Model::Restricted).unwrap();
            assert!(sim.cleaned, "chained cycles k={k} strategy must clean");
            assert_eq!(sim.max_brushes_on_edge, 1);
        }
    }

    #[test]
    fn lower_bound_from_degrees() {
        assert_eq!(
            brushing_lower_bound(&generate(&FamilySpec::Cycle { n: 6 }).unwrap()),
            2
        );
        assert_eq!(
            brushing_lower_bound(&generate(&FamilySpec::Path { n: 4 }).unwrap()),
            1
        );
        let chains = generate(&FamilySpec::ChainedCycles { count: 3, len: 6 }).unwrap();
        assert_eq!(brushing_lower_bound(&chains), 2);
    }

    #[test]
    fn script_json_round_trip() {
        let s = script(&[(0, 2)], &[(0, &[(1, 1), (3, 1)])]);
        let text = serde_json::to_string(&s).unwrap();
        let back: BrushScript = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
