use brushforce::graph::{line_graph, Graph};

// walk cost of a line ordering with free endpoint choices (min over all),
// lazy single-endpoint policy with optional both-endpoint firing
fn walk_costs(g: &Graph, order: &[usize], lgm: &brushforce::graph::LineGraphMap) -> usize {
    // state: fired set (bitmask), brushes per vertex; explore endpoint choices
    fn rec(g: &Graph, lgm: &brushforce::graph::LineGraphMap, order: &[usize], idx: usize,
           fired: u32, brushes: &[i32], spent: usize, best: &mut usize) {
        if spent >= *best { return; }
        if idx == order.len() {
            *best = spent; // cleanup vertices all have clean edges + received brushes
            return;
        }
        let (a, b) = lgm.edge_of_vertex(order[idx]);
        let clean = fired & (1 << a) != 0 || fired & (1 << b) != 0;
        if clean {
            // may skip, or fire any unfired endpoint now
            rec(g, lgm, order, idx + 1, fired, brushes, spent, best);
            for v in [a, b] {
                if fired & (1 << v) == 0 {
                    let (nf, nb, cost) = fire(g, fired, brushes, v);
                    rec(g, lgm, order, idx + 1, nf, &nb, spent + cost, best);
                }
            }
        } else {
            // must clean edge {a,b}: fire a, or b, or both (both orders)
            for seq in [vec![a], vec![b], vec![a, b], vec![b, a]] {
                let mut f = fired; let mut br = brushes.to_vec(); let mut s = spent;
                for &v in &seq {
                    let (nf, nb, cost) = fire(g, f, &br, v);
                    f = nf; br = nb; s += cost;
                }
                rec(g, lgm, order, idx + 1, f, &br, s, best);
            }
        }
    }
    fn fire(g: &Graph, fired: u32, brushes: &[i32], v: usize) -> (u32, Vec<i32>, usize) {
        let mut nb = brushes.to_vec();
        let dirty: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| fired & (1 << u) == 0).collect();
        let deficit = (dirty.len() as i32 - nb[v]).max(0) as usize;
        nb[v] = 0;
        for &u in &dirty { nb[u] += 1; }
        (fired | (1 << v), nb, deficit)
    }
    let mut best = usize::MAX;
    rec(g, lgm, order, 0, 0, &vec![0i32; g.vertex_count()], 0, &mut best);
    best
}

fn line_cost(line: &Graph, order: &[usize]) -> usize {
    let pos: std::collections::HashMap<usize, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    (0..line.vertex_count()).map(|v| {
        let later = line.neighbors(v).iter().filter(|&&u| pos[&u] > pos[&v]).count();
        later.saturating_sub(line.degree(v) - later)
    }).sum()
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 { return vec![vec![]]; }
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

fn main() {
    let g = Graph::new(6, &[(0,1),(0,4),(0,5),(1,3),(2,5),(3,5)]).unwrap();
    let lgm = line_graph(&g);
    let line = lgm.line();
    let mut best_overall = usize::MAX;
    let mut witness_order = None;
    for order in perms(line.vertex_count()) {
        if line_cost(line, &order) != 3 { continue; }
        let w = walk_costs(&g, &order, &lgm);
        if w < best_overall {
            best_overall = w;
            witness_order = Some(order.clone());
        }
    }
    println!("best walk over ALL optimal line orderings: {best_overall}");
    if let Some(o) = witness_order {
        let pretty: Vec<String> = o.iter().map(|&lv| { let (a,b)=lgm.edge_of_vertex(lv); format!("{{{a},{b}}}") }).collect();
        println!("achieved by: {}", pretty.join(", "));
    }
}
