//! Script replay against a state file, per model.

use anyhow::{bail, Context, Result};
use fliptwist::double_pants::{replay_hexagon, HomologicalDoublePants};
use fliptwist::graph::{parse_graph, to_text};
use fliptwist::hexagon::{HexLabeling, Mode};
use fliptwist::script::MoveScript;
use fliptwist::torus::TorusState;
use std::path::Path;

pub fn run(model: &str, state: &Path, script: &Path, json: Option<&Path>) -> Result<i32> {
    let state_text = std::fs::read_to_string(state)
        .with_context(|| format!("reading state file {}", state.display()))?;
    let script_text = std::fs::read_to_string(script)
        .with_context(|| format!("reading script file {}", script.display()))?;
    let script = MoveScript::parse(&script_text)?;
    let (final_text, final_json) = match model {
        "graph" => {
            let g = parse_graph(&state_text)?;
            let out = g.replay(&script)?;
            let text = to_text(&out);
            (
                text.clone(),
                serde_json::json!({ "schema": 1, "model": "graph", "state": text }),
            )
        }
        "homology" => {
            let dp = HomologicalDoublePants::from_json(&state_text)?;
            let out = dp.replay(&script)?;
            let classes: std::collections::BTreeMap<u32, Vec<i64>> = out
                .classes()
                .iter()
                .map(|(&l, c)| (l, c.coords().to_vec()))
                .collect();
            (
                out.to_json(),
                serde_json::json!({ "schema": 1, "model": "homology", "classes": classes }),
            )
        }
        "hexagon" => {
            let labeling = parse_hexagon_state(&state_text)?;
            let out = replay_hexagon(&labeling, &script)?;
            let line = format!("{} {}", out.mode(), out.to_compact());
            (
                line.clone(),
                serde_json::json!({ "schema": 1, "model": "hexagon", "state": line }),
            )
        }
        "torus" => {
            let st = TorusState::parse(&state_text)?;
            let out = st.replay(&script)?;
            let text = out.to_text();
            (
                text.clone(),
                serde_json::json!({ "schema": 1, "model": "torus", "state": text }),
            )
        }
        other => bail!("unknown model {other:?}; expected graph, homology, hexagon or torus"),
    };
    print!("{final_text}");
    if !final_text.ends_with('\n') {
        println!();
    }
    if let Some(path) = json {
        std::fs::write(path, serde_json::to_string_pretty(&final_json)? + "\n")?;
    }
    Ok(0)
}

/// Hexagon state: one line, `<mode> <comma-joined labels>`.
pub fn parse_hexagon_state(text: &str) -> Result<HexLabeling> {
    let line = text
        .lines()
        .map(|l| match l.split_once('#') {
            Some((head, _)) => head.trim(),
            None => l.trim(),
        })
        .find(|l| !l.is_empty())
        .context("empty hexagon state file")?;
    let (mode, labels) = line
        .split_once(char::is_whitespace)
        .context("expected `<mode> <l,l,l,l,l,l>`")?;
    let mode: Mode = mode.trim().parse()?;
    Ok(HexLabeling::from_compact(labels.trim(), mode)?)
}
