//! Census subcommand: graph types, labeled orbits, hexagon orbits.

use anyhow::{bail, Context, Result};
use fliptwist::graph::{enumerate_graph_types, labeled_orbits, to_dot, to_text};
use fliptwist::hexagon::{enumerate_orbits, Mode};
use fliptwist::SurfaceSig;
use std::path::Path;

pub fn run(
    kind: &str,
    args: &[String],
    json: Option<&Path>,
    dot: Option<&Path>,
    bound: u32,
) -> Result<i32> {
    let payload = match kind {
        "graphs" => {
            let sig = parse_sig(args)?;
            let types = enumerate_graph_types(sig, bound)?;
            if let Some(path) = dot {
                let mut out = String::new();
                for (i, g) in types.values().enumerate() {
                    out.push_str(&to_dot(g, &format!("type{i}")));
                }
                std::fs::write(path, out)?;
            }
            serde_json::json!({
                "schema": 1,
                "kind": "graphs",
                "genus": sig.genus(),
                "holes": sig.holes(),
                "type_count": types.len(),
                "types": types.values().map(to_text).collect::<Vec<_>>(),
            })
        }
        "labeled-orbits" => {
            let sig = parse_sig(args)?;
            let census = labeled_orbits(sig, bound)?;
            if let Some(path) = dot {
                let mut out = String::new();
                for (i, o) in census.orbits.iter().enumerate() {
                    out.push_str(&to_dot(&o.representative, &format!("orbit{i}")));
                }
                std::fs::write(path, out)?;
            }
            serde_json::json!({
                "schema": 1,
                "kind": "labeled-orbits",
                "genus": sig.genus(),
                "holes": sig.holes(),
                "state_count": census.state_count,
                "orbit_count": census.orbit_count(),
                "orbits": census.orbits.iter().map(|o| serde_json::json!({
                    "size": o.size,
                    "representative": to_text(&o.representative),
                })).collect::<Vec<_>>(),
            })
        }
        "hexagon" => {
            let mode: Mode = args
                .first()
                .context("hexagon census needs a mode: strict or labeled")?
                .parse()?;
            let census = enumerate_orbits(mode);
            serde_json::json!({
                "schema": 1,
                "kind": "hexagon",
                "mode": mode.to_string(),
                "state_count": census.state_count,
                "orbit_count": census.orbit_count(),
                "orbits": census.orbits.iter().map(|o| serde_json::json!({
                    "size": o.size,
                    "representative": o.representative.to_compact(),
                    "invariant": o.invariant.to_string(),
                })).collect::<Vec<_>>(),
            })
        }
        other => bail!("unknown census kind {other:?}; expected graphs, labeled-orbits or hexagon"),
    };
    let text = serde_json::to_string_pretty(&payload)? + "\n";
    print!("{text}");
    if let Some(path) = json {
        std::fs::write(path, text)?;
    }
    Ok(0)
}

fn parse_sig(args: &[String]) -> Result<SurfaceSig> {
    if args.len() != 2 {
        bail!("expected `<genus> <holes>`");
    }
    let genus: u32 = args[0].parse().context("bad genus")?;
    let holes: u32 = args[1].parse().context("bad hole count")?;
    Ok(SurfaceSig::new(genus, holes)?)
}
