//! Text serialization of labeled pants graphs, and DOT emission.
//!
//! Format, one item per line:
//!
//! ```text
//! v0: 0 1 2        # vertex and its half-edge slots
//! v1: 3 4 5
//! e1: 0 1          # curve label, slot pair
//! e2: 2 5
//! L1: 4            # boundary mark, slot
//! ```

use super::{Attachment, HalfEdge, LabeledPantsGraph};
use crate::{Error, Result, SurfaceSig};
use std::collections::BTreeMap;

pub fn to_text(g: &LabeledPantsGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        out.push_str(&format!("v{}: {} {} {}\n", v, 3 * v, 3 * v + 1, 3 * v + 2));
    }
    for (a, b, label) in g.edges() {
        out.push_str(&format!("e{label}: {a} {b}\n"));
    }
    for (slot, mark) in g.legs() {
        out.push_str(&format!("L{mark}: {slot}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<LabeledPantsGraph> {
    let mut vertices: BTreeMap<usize, Vec<HalfEdge>> = BTreeMap::new();
    let mut edges: Vec<(u32, HalfEdge, HalfEdge)> = Vec::new();
    let mut legs: Vec<(u32, HalfEdge)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let stripped = match raw.split_once('#') {
            Some((head, _)) => head,
            None => raw,
        };
        let s = stripped.trim();
        if s.is_empty() {
            continue;
        }
        let (head, rest) = s.split_once(':').ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected `name: ...`, got {s:?}"),
        })?;
        let nums: Vec<usize> = rest
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad number {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        let head = head.trim();
        let parse_id = |prefix: char| -> Result<u32> {
            head[1..].parse::<u32>().map_err(|_| Error::Parse {
                line,
                msg: format!("bad {prefix}-id {head:?}"),
            })
        };
        match head.chars().next() {
            Some('v') => {
                if nums.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: "a vertex lists exactly 3 half-edges".into(),
                    });
                }
                let v = parse_id('v')? as usize;
                if nums != [3 * v, 3 * v + 1, 3 * v + 2] {
                    return Err(Error::Parse {
                        line,
                        msg: format!(
                            "vertex {v} must own slots {},{},{}",
                            3 * v,
                            3 * v + 1,
                            3 * v + 2
                        ),
                    });
                }
                vertices.insert(v, nums);
            }
            Some('e') => {
                if nums.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "an edge lists exactly 2 half-edges".into(),
                    });
                }
                edges.push((parse_id('e')?, nums[0], nums[1]));
            }
            Some('L') => {
                if nums.len() != 1 {
                    return Err(Error::Parse {
                        line,
                        msg: "a leg lists exactly 1 half-edge".into(),
                    });
                }
                legs.push((parse_id('L')?, nums[0]));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown item {head:?}"),
                })
            }
        }
    }
    let pants = vertices.len();
    let n = legs.len();
    // derive the signature: pants = 2g - 2 + n
    let two_g = (pants + 2).checked_sub(n).ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("{pants} pants with {n} legs match no surface"),
    })?;
    if two_g % 2 != 0 {
        return Err(Error::Parse {
            line: 0,
            msg: format!("{pants} pants with {n} legs match no surface"),
        });
    }
    let sig = SurfaceSig::new(two_g as u32 / 2, n as u32).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })?;
    let slots = 3 * pants;
    let mut attachments: Vec<Option<Attachment>> = vec![None; slots];
    let mut labels: Vec<Option<u32>> = vec![None; slots];
    let occupy = |attachments: &mut Vec<Option<Attachment>>, slot: usize, a: Attachment| {
        if slot >= attachments.len() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("half-edge {slot} out of range"),
            });
        }
        if attachments[slot].is_some() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("half-edge {slot} used twice"),
            });
        }
        attachments[slot] = Some(a);
        Ok(())
    };
    for (label, a, b) in edges {
        occupy(&mut attachments, a, Attachment::Paired(b))?;
        occupy(&mut attachments, b, Attachment::Paired(a))?;
        labels[a] = Some(label);
        labels[b] = Some(label);
    }
    for (mark, slot) in legs {
        occupy(&mut attachments, slot, Attachment::Leg(mark))?;
    }
    if let Some(slot) = attachments.iter().position(Option::is_none) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("half-edge {slot} is neither paired nor a leg"),
        });
    }
    LabeledPantsGraph::from_parts(
        sig,
        attachments.into_iter().map(Option::unwrap).collect(),
        labels,
    )
}

/// DOT rendering: pants are circles, legs are boxes, edge labels are curve
/// labels (a loop shows as a self-edge).
pub fn to_dot(g: &LabeledPantsGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  p{v} [shape=circle];\n"));
    }
    for (_, mark) in g.legs() {
        out.push_str(&format!("  L{mark} [shape=box];\n"));
    }
    for (a, b, label) in g.edges() {
        out.push_str(&format!(
            "  p{} -- p{} [label=\"{}\"];\n",
            LabeledPantsGraph::vertex_of(a),
            LabeledPantsGraph::vertex_of(b),
            label
        ));
    }
    for (slot, mark) in g.legs() {
        out.push_str(&format!(
            "  p{} -- L{};\n",
            LabeledPantsGraph::vertex_of(slot),
            mark
        ));
    }
    out.push_str("}\n");
    out
}
