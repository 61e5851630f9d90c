use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};

use brushforce::brushing::{
    exact_brushing, exact_restricted_brushing, simulate, BrushScript, ExcessRule, Model,
};
use brushforce::families::{generate, FamilySpec};
use brushforce::forcing::{
    exact_zero_forcing, forcing_closure, is_zero_forcing_set, replay_forcing, Colouring,
    ForcingRun,
};
use brushforce::graph::{line_graph, Graph, LineGraphMap};
use brushforce::report::{hunt as run_hunt, report as run_report, Budgets, HuntConfig};
use brushforce::translate::{
    brushing_from_line_brushing, brushing_from_line_forcing_run, forcing_set_from_line_forcing_run,
    witness_trace_dot,
};

pub enum ExitStatus {
    Ok,
    ViolationOrFailedReplay,
}

/// Family spec when the input contains a `:`, otherwise a JSON file path.
fn load_graph(input: &str) -> Result<Graph> {
    if input.contains(':') {
        let spec: FamilySpec = input
            .parse()
            .with_context(|| format!("parsing family spec `{input}`"))?;
        Ok(generate(&spec)?)
    } else {
        let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
        serde_json::from_str(&text).with_context(|| format!("parsing graph JSON from {input}"))
    }
}

pub fn gen(spec: &str) -> Result<ExitStatus> {
    let g = load_graph(spec)?;
    println!("{}", serde_json::to_string(&g)?);
    Ok(ExitStatus::Ok)
}

pub fn report(input: &str, budgets: &Budgets, json_only: bool) -> Result<ExitStatus> {
    let g = load_graph(input)?;
    let rep = run_report(&g, budgets);
    if json_only {
        println!("{}", serde_json::to_string_pretty(&rep)?);
    } else {
        print!("{}", rep.table());
        println!("{}", serde_json::to_string(&rep)?);
    }
    Ok(if rep.has_violation() {
        ExitStatus::ViolationOrFailedReplay
    } else {
        ExitStatus::Ok
    })
}

/// Parses `--black`: comma-separated line-vertex ids or `u-v` edge pairs.
fn parse_black(lgm: &LineGraphMap, text: &str) -> Result<Colouring> {
    let mut set = Colouring::new();
    for token in text.split(',').filter(|t| !t.is_empty()) {
        if let Some((u, v)) = token.split_once('-') {
            let u: usize = u.trim().parse().context("bad edge endpoint")?;
            let v: usize = v.trim().parse().context("bad edge endpoint")?;
            let lv = lgm
                .vertex_of_edge(u, v)
                .ok_or_else(|| anyhow!("{{{u}, {v}}} is not an edge of the graph"))?;
            set.insert(lv);
        } else {
            let lv: usize = token.trim().parse().context("bad line-vertex id")?;
            if lv >= lgm.line().vertex_count() {
                bail!("line vertex {lv} out of range");
            }
            set.insert(lv);
        }
    }
    Ok(set)
}

pub struct TranslateArgs {
    pub input: String,
    pub thm: u8,
    pub black: Option<String>,
    pub run: Option<PathBuf>,
    pub script: Option<PathBuf>,
    pub model: String,
    pub lazy: bool,
    pub out_dir: PathBuf,
    pub budgets: Budgets,
}

/// Forcing run on the line graph: from an explicit run file, an explicit
/// black set, or a minimum zero-forcing set found by search.
fn line_forcing_run(lgm: &LineGraphMap, args: &TranslateArgs) -> Result<ForcingRun> {
    if let Some(path) = &args.run {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let raw: ForcingRun = serde_json::from_str(&text).context("parsing forcing-run JSON")?;
        return Ok(replay_forcing(lgm.line(), &raw.initial, &raw.forces)?);
    }
    let black = match &args.black {
        Some(text) => parse_black(lgm, text)?,
        None => {
            let (_, set) = exact_zero_forcing(lgm.line(), args.budgets.zero_forcing_max)?;
            set
        }
    };
    Ok(forcing_closure(lgm.line(), &black)?)
}

fn write_outputs(dir: &Path, prefix: &str, witness_json: String, dot: String) -> Result<()> {
    fs::create_dir_all(dir)?;
    let json_path = dir.join(format!("{prefix}-witness.json"));
    let dot_path = dir.join(format!("{prefix}-trace.dot"));
    fs::write(&json_path, witness_json)?;
    fs::write(&dot_path, dot)?;
    println!("wrote {} and {}", json_path.display(), dot_path.display());
    Ok(())
}

pub fn translate(args: TranslateArgs) -> Result<ExitStatus> {
    let g = load_graph(&args.input)?;
    let lgm = line_graph(&g);
    let model = match args.model.as_str() {
        "B" => Model::Unrestricted,
        "b" => Model::Restricted,
        other => bail!("unknown model `{other}` (expected B or b)"),
    };
    match args.thm {
        1 => {
            let run = line_forcing_run(&lgm, &args)?;
            let z_size = run.initial.len();
            let witness = brushing_from_line_forcing_run(&lgm, &run, args.lazy)?;
            let sim = simulate(&g, &witness.script, Model::Restricted)?;
            let total = witness.script.total_brushes();
            println!("chains:");
            for (i, chain) in witness.chains.chains.iter().enumerate() {
                let rendered: Vec<String> = chain
                    .iter()
                    .map(|&lv| {
                        let (u, v) = lgm.edge_of_vertex(lv);
                        format!("{{{u},{v}}}")
                    })
                    .collect();
                println!("  {}: {}", i + 1, rendered.join(" -> "));
            }
            println!(
                "{total} brushes from a size-{z_size} line forcing set; replay cleaned: {}",
                sim.cleaned
            );
            write_outputs(
                &args.out_dir,
                "thm1",
                serde_json::to_string_pretty(&witness)?,
                witness_trace_dot(&g, &witness),
            )?;
            Ok(if sim.cleaned && total <= z_size {
                ExitStatus::Ok
            } else {
                ExitStatus::ViolationOrFailedReplay
            })
        }
        2 => {
            let run = line_forcing_run(&lgm, &args)?;
            let z_size = run.initial.len();
            let set = forcing_set_from_line_forcing_run(&lgm, &run)?;
            let ok = set.len() <= z_size && is_zero_forcing_set(&g, &set);
            println!(
                "forcing set of size {} from a size-{z_size} line forcing set; verified: {ok}",
                set.len()
            );
            let run_g = forcing_closure(&g, &set)?;
            write_outputs(
                &args.out_dir,
                "thm2",
                serde_json::to_string_pretty(&run_g)?,
                run_g.to_dot(&g),
            )?;
            Ok(if ok {
                ExitStatus::Ok
            } else {
                ExitStatus::ViolationOrFailedReplay
            })
        }
        3 => {
            let line_script: BrushScript = match &args.script {
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str(&text).context("parsing brush-script JSON")?
                }
                None => match model {
                    Model::Unrestricted => {
                        exact_brushing(
                            lgm.line(),
                            args.budgets.brushing_max,
                            args.budgets.brushing_cap,
                            ExcessRule::Distribute,
                        )?
                        .1
                    }
                    Model::Restricted => {
                        exact_restricted_brushing(lgm.line(), args.budgets.restricted_max)?.1
                    }
                },
            };
            let line_total = line_script.total_brushes();
            let witness = brushing_from_line_brushing(&lgm, &line_script, model)?;
            let sim = simulate(&g, &witness.script, model)?;
            let total = witness.script.total_brushes();
            println!(
                "{total} brushes from a {line_total}-brush line script; replay cleaned: {}",
                sim.cleaned
            );
            write_outputs(
                &args.out_dir,
                "thm3",
                serde_json::to_string_pretty(&witness)?,
                brushforce::brushing::script_trace_dot(&g, &witness.script, model)?,
            )?;
            Ok(if sim.cleaned && total <= line_total {
                ExitStatus::Ok
            } else {
                ExitStatus::ViolationOrFailedReplay
            })
        }
        other => bail!("unknown translation {other} (expected 1, 2 or 3)"),
    }
}

pub fn hunt(
    n_min: usize,
    n_max: usize,
    p_min: f64,
    p_max: f64,
    samples: usize,
    seed: u64,
    budgets: &Budgets,
) -> Result<ExitStatus> {
    let config = HuntConfig {
        n_min,
        n_max,
        p_min,
        p_max,
        samples,
        seed,
        budgets: *budgets,
    };
    let result = run_hunt(&config)?;
    println!("{}", serde_json::to_string_pretty(&result)?);
    Ok(if result.violations.is_empty() {
        ExitStatus::Ok
    } else {
        ExitStatus::ViolationOrFailedReplay
    })
}

pub fn export(input: &str, format: &str, out: Option<&Path>) -> Result<ExitStatus> {
    let g = load_graph(input)?;
    let rendered = match format {
        "dot" => g.to_dot(),
        "json" => format!("{}\n", serde_json::to_string(&g)?),
        other => bail!("unknown format `{other}` (expected dot or json)"),
    };
    match out {
        Some(path) => fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(ExitStatus::Ok)
}
