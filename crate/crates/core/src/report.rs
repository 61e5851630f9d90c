//! Parameter reports: exact or witness-bounded values of the six tracked
//! parameters for one graph, verdicts for the line-graph inequalities, and
//! a seeded random hunt that looks for violations (none should exist).

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::brushing::{
    exact_brushing, exact_restricted_brushing, simulate, ExcessRule, Model,
};
use crate::error::{Error, Result};
use crate::families::Parameter;
use crate::forcing::exact_zero_forcing;
use crate::graph::{line_graph, Graph};
use crate::translate::brushing_from_line_forcing;

/// Search budgets. Over-budget parameters degrade to witness bounds or are
/// skipped, never silently wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Max component size for the exact zero-forcing search.
    pub zero_forcing_max: usize,
    /// Max component size for the restricted-brushing ordering search.
    pub restricted_max: usize,
    /// Max component size for the exact brushing search.
    pub brushing_max: usize,
    /// Max brush total tried by the exact brushing search.
    pub brushing_cap: usize,
    /// Max component size for the direct restricted-brushing oracle.
    pub direct_max: usize,
    /// Max brush total tried by the direct oracle.
    pub direct_cap: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            zero_forcing_max: 24,
            restricted_max: 10,
            brushing_max: 8,
            brushing_cap: 12,
            direct_max: 7,
            direct_cap: 10,
        }
    }
}

impl Budgets {
    /// Defaults, overridden by `BRUSHFORCE_BUDGET_Z`,
    /// `BRUSHFORCE_BUDGET_SMALL_B`, `BRUSHFORCE_BUDGET_B_N` and
    /// `BRUSHFORCE_BUDGET_B_CAP` when set.
    pub fn from_env() -> Self {
        let mut b = Budgets::default();
        let read = |name: &str| std::env::var(name).ok().and_then(|v| v.parse().ok());
        if let Some(v) = read("BRUSHFORCE_BUDGET_Z") {
            b.zero_forcing_max = v;
        }
        if let Some(v) = read("BRUSHFORCE_BUDGET_SMALL_B") {
            b.restricted_max = v;
        }
        if let Some(v) = read("BRUSHFORCE_BUDGET_B_N") {
            b.brushing_max = v;
        }
        if let Some(v) = read("BRUSHFORCE_BUDGET_B_CAP") {
            b.brushing_cap = v;
        }
        b
    }
}

/// How a reported value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EntryKind {
    Exact,
    /// A replayed witness proves the true value is at most this.
    UpperWitness,
    /// A proof (degree argument or layer bound) shows at least this.
    LowerBound,
    SkippedBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamEntry {
    pub parameter: Parameter,
    pub value: Option<usize>,
    pub kind: EntryKind,
}

impl ParamEntry {
    fn skipped(parameter: Parameter) -> Self {
        ParamEntry {
            parameter,
            value: None,
            kind: EntryKind::SkippedBudget,
        }
    }

    /// An upper bound on the true value, when the entry provides one.
    fn upper(&self) -> Option<usize> {
        match self.kind {
            EntryKind::Exact | EntryKind::UpperWitness => self.value,
            _ => None,
        }
    }

    /// A lower bound on the true value, when the entry provides one.
    fn lower(&self) -> Option<usize> {
        match self.kind {
            EntryKind::Exact | EntryKind::LowerBound => self.value,
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    Pass,
    Violation,
    /// The available entry kinds cannot settle the comparison.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub inequality: String,
    pub status: VerdictStatus,
}

/// Exact or witness-bounded values of Z, B, b and their line-graph
/// counterparts, with verdicts for the inequalities relating them. The
/// verdicts add `isolated` to the right-hand sides: isolated vertices raise
/// the left parameters by one each while leaving the line graph unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamReport {
    pub vertices: usize,
    pub edges: usize,
    pub isolated: usize,
    pub entries: Vec<ParamEntry>,
    pub verdicts: Vec<Verdict>,
}

impl ParamReport {
    pub fn entry(&self, p: Parameter) -> &ParamEntry {
        self.entries
            .iter()
            .find(|e| e.parameter == p)
            .expect("all six parameters are always present")
    }

    pub fn has_violation(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.status == VerdictStatus::Violation)
    }

    /// Plain-text table used by the CLI.
    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "graph: {} vertices, {} edges, {} isolated",
            self.vertices, self.edges, self.isolated
        )
        .unwrap();
        for e in &self.entries {
            let value = match e.value {
                Some(v) => v.to_string(),
                None => "-".into(),
            };
            let kind = match e.kind {
                EntryKind::Exact => "exact",
                EntryKind::UpperWitness => "upper witness",
                EntryKind::LowerBound => "lower bound",
                EntryKind::SkippedBudget => "skipped (budget)",
            };
            writeln!(out, "  {:<5} = {:<4} ({kind})", e.parameter.to_string(), value).unwrap();
        }
        for v in &self.verdicts {
            let status = match v.status {
                VerdictStatus::Pass => "PASS",
                VerdictStatus::Violation => "VIOLATION",
                VerdictStatus::Inconclusive => "inconclusive",
            };
            writeln!(out, "  {:<20} {status}", v.inequality).unwrap();
        }
        out
    }
}

/// Upper witness for b (and hence B) from the first translation: per
/// component, a minimum zero-forcing set of the line graph is translated
/// into a cleaning script and replayed. Needs every component line graph
/// within the zero-forcing budget.
fn translation_upper_bound(g: &Graph, budgets: &Budgets) -> Option<usize> {
    let mut total = 0;
    for comp in g.connected_components() {
        if comp.len() == 1 {
            total += 1;
            continue;
        }
        let sub = g.induced(&comp);
        let lgm = line_graph(&sub);
        if lgm.line().vertex_count() > budgets.zero_forcing_max {
            return None;
        }
        let (_, zset) = exact_zero_forcing(lgm.line(), budgets.zero_forcing_max).ok()?;
        let witness = brushing_from_line_forcing(&lgm, &zset, false).ok()?;
        let sim = simulate(&sub, &witness.script, Model::Restricted).ok()?;
        if !sim.cleaned {
            return None;
        }
        total += witness.script.total_brushes();
    }
    Some(total)
}

fn zero_forcing_entry(g: &Graph, parameter: Parameter, budget: usize) -> ParamEntry {
    match exact_zero_forcing(g, budget) {
        Ok((v, _)) => ParamEntry {
            parameter,
            value: Some(v),
            kind: EntryKind::Exact,
        },
        Err(_) => ParamEntry::skipped(parameter),
    }
}

/// Computes the full report for `g`.
pub fn report(g: &Graph, budgets: &Budgets) -> ParamReport {
    let lgm = line_graph(g);
    let line = lgm.line();

    let z = zero_forcing_entry(g, Parameter::ZeroForcing, budgets.zero_forcing_max);
    let z_line = zero_forcing_entry(line, Parameter::ZeroForcingLine, budgets.zero_forcing_max);

    let translated = translation_upper_bound(g, budgets);
    let small_b = match exact_restricted_brushing(g, budgets.restricted_max) {
        Ok((v, _)) => ParamEntry {
            parameter: Parameter::RestrictedBrushing,
            value: Some(v),
            kind: EntryKind::Exact,
        },
        Err(_) => match translated {
            Some(v) => ParamEntry {
                parameter: Parameter::RestrictedBrushing,
                value: Some(v),
                kind: EntryKind::UpperWitness,
            },
            None => ParamEntry::skipped(Parameter::RestrictedBrushing),
        },
    };
    let big_b = match exact_brushing(g, budgets.brushing_max, budgets.brushing_cap, ExcessRule::Distribute)
    {
        Ok((v, _)) => ParamEntry {
            parameter: Parameter::Brushing,
            value: Some(v),
            kind: EntryKind::Exact,
        },
        Err(_) => match small_b.upper().or(translated) {
            // B <= b, so either exact b or the translated witness bounds it
            Some(v) => ParamEntry {
                parameter: Parameter::Brushing,
                value: Some(v),
                kind: EntryKind::UpperWitness,
            },
            None => ParamEntry::skipped(Parameter::Brushing),
        },
    };

    let small_b_line = match exact_restricted_brushing(line, budgets.restricted_max) {
        Ok((v, _)) => ParamEntry {
            parameter: Parameter::RestrictedBrushingLine,
            value: Some(v),
            kind: EntryKind::Exact,
        },
        Err(_) => ParamEntry::skipped(Parameter::RestrictedBrushingLine),
    };
    let big_b_line = match exact_brushing(
        line,
        budgets.brushing_max,
        budgets.brushing_cap,
        ExcessRule::Distribute,
    ) {
        Ok((v, _)) => ParamEntry {
            parameter: Parameter::BrushingLine,
            value: Some(v),
            kind: EntryKind::Exact,
        },
        Err(_) => match small_b_line.upper() {
            Some(v) => ParamEntry {
                parameter: Parameter::BrushingLine,
                value: Some(v),
                kind: EntryKind::UpperWitness,
            },
            None => ParamEntry::skipped(Parameter::BrushingLine),
        },
    };

    let isolated = g.isolated_count();
    let entries = vec![z, big_b, small_b, z_line, big_b_line, small_b_line];
    let verdicts = build_verdicts(&entries, isolated);

    ParamReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        isolated,
        entries,
        verdicts,
    }
}

fn build_verdicts(entries: &[ParamEntry], isolated: usize) -> Vec<Verdict> {
    let get = |p: Parameter| entries.iter().find(|e| e.parameter == p).copied().unwrap();
    let compare = |name: String, lhs: ParamEntry, rhs: ParamEntry, slack: usize| {
        // sound directions only: an upper bound on the left at most a lower
        // bound on the right proves the inequality; a lower bound on the
        // left above an upper bound on the right refutes it
        let proves = matches!((lhs.upper(), rhs.lower()), (Some(l), Some(r)) if l <= r + slack);
        let refutes = matches!((lhs.lower(), rhs.upper()), (Some(l), Some(r)) if l > r + slack);
        let status = if proves {
            VerdictStatus::Pass
        } else if refutes {
            VerdictStatus::Violation
        } else {
            VerdictStatus::Inconclusive
        };
        Verdict {
            inequality: name,
            status,
        }
    };
    let k = |base: &str| {
        if isolated > 0 {
            format!("{base} + {isolated}")
        } else {
            base.to_string()
        }
    };
    vec![
        compare(
            "B <= b".into(),
            get(Parameter::Brushing),
            get(Parameter::RestrictedBrushing),
            0,
        ),
        compare(
            format!("b <= {}", k("Z(L)")),
            get(Parameter::RestrictedBrushing),
            get(Parameter::ZeroForcingLine),
            isolated,
        ),
        compare(
            format!("Z <= {}", k("Z(L)")),
            get(Parameter::ZeroForcing),
            get(Parameter::ZeroForcingLine),
            isolated,
        ),
        compare(
            format!("B <= {}", k("B(L)")),
            get(Parameter::Brushing),
            get(Parameter::BrushingLine),
            isolated,
        ),
        compare(
            format!("b <= {}", k("b(L)")),
            get(Parameter::RestrictedBrushing),
            get(Parameter::RestrictedBrushingLine),
            isolated,
        ),
    ]
}

/// Seeded Erdos-Renyi sample.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HuntConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub p_min: f64,
    pub p_max: f64,
    pub samples: usize,
    pub seed: u64,
    pub budgets: Budgets,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub graph: Graph,
    pub report: ParamReport,
}

/// Aggregate of a random hunt. `violations` is expected to stay empty; any
/// entry carries the full graph and report for independent re-checking.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HuntResult {
    pub examined: usize,
    pub violations: Vec<ViolationRecord>,
    /// Largest observed Z(L) - B gap with a graph attaining it.
    pub max_gap: Option<(usize, Graph)>,
    /// Graphs (both sides exact) attaining B = Z(L).
    pub equality_brushing_vs_line_forcing: usize,
    /// Graphs attaining Z = Z(L).
    pub equality_forcing_vs_line_forcing: usize,
    /// Graphs attaining B = B(L).
    pub equality_brushing_vs_line_brushing: usize,
}

pub fn hunt(config: &HuntConfig) -> Result<HuntResult> {
    if config.n_min > config.n_max || config.p_min > config.p_max {
        return Err(Error::Parse("empty hunt range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut result = HuntResult {
        examined: 0,
        violations: Vec::new(),
        max_gap: None,
        equality_brushing_vs_line_forcing: 0,
        equality_forcing_vs_line_forcing: 0,
        equality_brushing_vs_line_brushing: 0,
    };
    for _ in 0..config.samples {
        let n = rng.gen_range(config.n_min..=config.n_max);
        let p = if config.p_min == config.p_max {
            config.p_min
        } else {
            rng.gen_range(config.p_min..=config.p_max)
        };
        let g = random_graph(&mut rng, n, p);
        let rep = report(&g, &config.budgets);
        result.examined += 1;
        if rep.has_violation() {
            result.violations.push(ViolationRecord {
                graph: g.clone(),
                report: rep.clone(),
            });
            continue;
        }
        let exact = |p: Parameter| {
            let e = rep.entry(p);
            (e.kind == EntryKind::Exact).then_some(e.value).flatten()
        };
        if let (Some(z_l), Some(b)) = (exact(Parameter::ZeroForcingLine), exact(Parameter::Brushing))
        {
            let gap = z_l.saturating_sub(b);
            if result.max_gap.as_ref().map_or(true, |(g0, _)| gap > *g0) {
                result.max_gap = Some((gap, g.clone()));
            }
            if b == z_l {
                result.equality_brushing_vs_line_forcing += 1;
            }
        }
        if let (Some(z), Some(z_l)) = (
            exact(Parameter::ZeroForcing),
            exact(Parameter::ZeroForcingLine),
        ) {
            if z == z_l {
                result.equality_forcing_vs_line_forcing += 1;
            }
        }
        if let (Some(b), Some(b_l)) = (exact(Parameter::Brushing), exact(Parameter::BrushingLine)) {
            if b == b_l {
                result.equality_brushing_vs_line_brushing += 1;
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::graph::add_isolated;

    #[test]
    fn report_on_complete_graph() {
        let g = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        let rep = report(&g, &Budgets::default());
        assert_eq!(rep.entry(Parameter::ZeroForcing).value, Some(4));
        assert_eq!(rep.entry(Parameter::Brushing).value, Some(6));
        assert_eq!(rep.entry(Parameter::RestrictedBrushing).value, Some(6));
        assert!(!rep.has_violation());
        // B(L(K_5)) is over the default search budget, so that comparison
        // may stay inconclusive; the others must pass outright
        for v in &rep.verdicts {
            if v.inequality == "B <= B(L)" {
                assert_ne!(v.status, VerdictStatus::Violation);
            } else {
                assert_eq!(v.status, VerdictStatus::Pass, "{}", v.inequality);
            }
        }
    }

    #[test]
    fn report_on_path() {
        let g = generate(&FamilySpec::Path { n: 4 }).unwrap();
        let rep = report(&g, &Budgets::default());
        for p in [
            Parameter::ZeroForcing,
            Parameter::Brushing,
            Parameter::RestrictedBrushing,
        ] {
            assert_eq!(rep.entry(p).value, Some(1), "{p}");
            assert_eq!(rep.entry(p).kind, EntryKind::Exact);
        }
        assert!(!rep.has_violation());
    }

    #[test]
    fn report_with_isolated_vertices_uses_slack() {
        let g = add_isolated(&generate(&FamilySpec::Cycle { n: 3 }).unwrap(), 2);
        let rep = report(&g, &Budgets::default());
        assert_eq!(rep.isolated, 2);
        assert_eq!(rep.entry(Parameter::ZeroForcing).value, Some(4));
        assert_eq!(rep.entry(Parameter::ZeroForcingLine).value, Some(2));
        assert!(!rep.has_violation());
    }

    #[test]
    fn over_budget_falls_back_to_witness() {
        // tiny budgets force the translated upper witness path
        let budgets = Budgets {
            restricted_max: 2,
            brushing_max: 2,
            ..Budgets::default()
        };
        let g = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let rep = report(&g, &budgets);
        let b = rep.entry(Parameter::Brushing);
        assert_eq!(b.kind, EntryKind::UpperWitness);
        assert_eq!(b.value, Some(2)); // Z(L(C_6)) = 2 brushes suffice
        assert!(!rep.has_violation());
    }

    #[test]
    fn hunt_is_deterministic_and_clean() {
        let config = HuntConfig {
            n_min: 3,
            n_max: 5,
            p_min: 0.2,
            p_max: 0.8,
            samples: 25,
            seed: 7,
            budgets: Budgets::default(),
        };
        let a = hunt(&config).unwrap();
        let b = hunt(&config).unwrap();
        assert_eq!(a.examined, 25);
        assert!(a.violations.is_empty());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn empty_hunt() {
        let config = HuntConfig {
            n_min: 3,
            n_max: 4,
            p_min: 0.5,
            p_max: 0.5,
            samples: 0,
            seed: 1,
            budgets: Budgets::default(),
        };
        let r = hunt(&config).unwrap();
        assert_eq!(r.examined, 0);
        assert!(r.violations.is_empty());
    }
}
