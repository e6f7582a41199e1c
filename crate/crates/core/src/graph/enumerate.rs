//! Exhaustive enumeration of graph types and labeled orbits, and the
//! breadth-first search for label-swapping flip words.

use super::canon::{certificate_with, Flavor};
use super::{certificate, Attachment, FlipChoice, LabeledPantsGraph, MoveKind, MoveRecord};
use crate::{Error, Result, SurfaceSig};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

/// Default cap on the number of pants for exhaustive enumeration.
pub const DEFAULT_BOUND: u32 = 6;

/// All leg-marked trivalent graph types for the signature, by exhaustive
/// enumeration modulo isomorphism. Types come back keyed by their unlabeled
/// certificate, with an arbitrary labeling `1..m` on the representative.
///
/// Two phases keep the search polynomial in the mark count: slot pairings
/// are enumerated with anonymous legs and deduplicated mark-blind, then each
/// leg-anonymous type receives every mark assignment, deduplicated again.
/// The naive single phase would pay the full `n!` factor on every pairing.
pub fn enumerate_graph_types(
    sig: SurfaceSig,
    bound: u32,
) -> Result<BTreeMap<Vec<u8>, LabeledPantsGraph>> {
    if sig.pants_count() > bound {
        return Err(Error::BoundExceeded {
            pants: sig.pants_count(),
            bound,
        });
    }
    let slots = 3 * sig.pants_count() as usize;
    let n = sig.holes();
    let mut att: Vec<Option<Attachment>> = vec![None; slots];
    let mut anonymous: BTreeMap<Vec<u8>, LabeledPantsGraph> = BTreeMap::new();

    fn rec(
        sig: SurfaceSig,
        att: &mut Vec<Option<Attachment>>,
        legs_placed: u32,
        legs_total: u32,
        edges_left: u32,
        frontier: usize,
        anonymous: &mut BTreeMap<Vec<u8>, LabeledPantsGraph>,
    ) {
        let Some(slot) = att.iter().position(Option::is_none) else {
            // complete pairing: placeholder marks and labels in slot order;
            // keep the structure if it is a connected valid graph
            let attachments: Vec<Attachment> = att.iter().map(|a| a.unwrap()).collect();
            let mut labels = vec![None; attachments.len()];
            let mut next = 1u32;
            for (s, a) in attachments.iter().enumerate() {
                if let Attachment::Paired(o) = *a {
                    if s < o {
                        labels[s] = Some(next);
                        labels[o] = Some(next);
                        next += 1;
                    }
                }
            }
            if let Ok(g) = LabeledPantsGraph::from_parts(sig, attachments, labels) {
                let cert = certificate_with(
                    &g,
                    Flavor {
                        labels: false,
                        marks: false,
                    },
                );
                anonymous.entry(cert).or_insert(g);
            }
            return;
        };
        // symmetry reduction: slots within a vertex are interchangeable and
        // vertex ids are arbitrary, so only canonical placements are
        // generated — legs fill a prefix of their vertex's slots, a loop
        // occupies two adjacent slots, and pairings may reach at most one
        // vertex beyond the highest vertex touched so far (vertices appear
        // in first-touch order)
        let frontier = frontier.max(slot / 3);
        let leg_prefix_ok = slot % 3 == 0 || matches!(att[slot - 1], Some(Attachment::Leg(_)));
        if legs_placed < legs_total && leg_prefix_ok {
            // marks increase with slot order; real assignments come later
            att[slot] = Some(Attachment::Leg(legs_placed + 1));
            rec(
                sig,
                att,
                legs_placed + 1,
                legs_total,
                edges_left,
                frontier,
                anonymous,
            );
            att[slot] = None;
        }
        if edges_left > 0 {
            for other in slot + 1..att.len() {
                if att[other].is_some() {
                    continue;
                }
                let ov = other / 3;
                if ov == slot / 3 && other != slot + 1 {
                    continue;
                }
                if ov > frontier + 1 {
                    break;
                }
                att[slot] = Some(Attachment::Paired(other));
                att[other] = Some(Attachment::Paired(slot));
                rec(
                    sig,
                    att,
                    legs_placed,
                    legs_total,
                    edges_left - 1,
                    frontier.max(ov),
                    anonymous,
                );
                att[slot] = None;
                att[other] = None;
            }
        }
    }

    rec(sig, &mut att, 0, n, sig.curve_count(), 0, &mut anonymous);

    let mut types: BTreeMap<Vec<u8>, LabeledPantsGraph> = BTreeMap::new();
    for rep in anonymous.values() {
        for perm in all_mark_bijections(n) {
            let g = rep.with_marks_permuted(&perm).expect("marks permute");
            types
                .entry(certificate(&g, false))
                .or_insert_with(|| g.clone());
        }
    }
    Ok(types)
}

fn all_mark_bijections(n: u32) -> Vec<BTreeMap<u32, u32>> {
    let mut out = Vec::new();
    let mut perm: Vec<u32> = (1..=n).collect();
    fn rec(perm: &mut Vec<u32>, k: usize, out: &mut Vec<BTreeMap<u32, u32>>) {
        if k == perm.len() {
            out.push((1..).zip(perm.iter().copied()).collect());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, out);
            perm.swap(k, i);
        }
    }
    rec(&mut perm, 0, &mut out);
    out
}

/// One orbit of labeled states under flips and S-moves.
#[derive(Debug, Clone)]
pub struct GraphOrbit {
    pub size: usize,
    pub representative: LabeledPantsGraph,
}

/// The orbit partition of all labeled states.
#[derive(Debug, Clone)]
pub struct OrbitCensus {
    pub sig: SurfaceSig,
    pub state_count: usize,
    pub orbits: Vec<GraphOrbit>,
}

impl OrbitCensus {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// Every flip neighbor of a state: both choices on every non-loop curve.
/// S-moves and loop flips fix the state, so they never appear here.
fn flip_neighbors(g: &LabeledPantsGraph) -> Vec<(MoveRecord, LabeledPantsGraph)> {
    let mut out = Vec::new();
    for (a, b, label) in g.edges() {
        if LabeledPantsGraph::vertex_of(a) == LabeledPantsGraph::vertex_of(b) {
            continue;
        }
        for choice in [FlipChoice::A, FlipChoice::B] {
            let next = g.flip(label, Some(choice)).expect("valid flip");
            out.push((
                MoveRecord {
                    kind: MoveKind::Flip,
                    label,
                    choice: Some(choice),
                },
                next,
            ));
        }
    }
    out
}

fn all_label_bijections(m: u32) -> Vec<BTreeMap<u32, u32>> {
    let mut out = Vec::new();
    let mut perm: Vec<u32> = (1..=m).collect();
    fn rec(perm: &mut Vec<u32>, k: usize, out: &mut Vec<BTreeMap<u32, u32>>) {
        if k == perm.len() {
            out.push((1..).zip(perm.iter().copied()).collect());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, out);
            perm.swap(k, i);
        }
    }
    rec(&mut perm, 0, &mut out);
    out
}

/// Union-find closure of all `(type, labeling)` states under flips (both
/// choices, every non-loop curve) and S-moves.
pub fn labeled_orbits(sig: SurfaceSig, bound: u32) -> Result<OrbitCensus> {
    let types = enumerate_graph_types(sig, bound)?;
    // all labeled states, keyed by labeled certificate
    let mut states: BTreeMap<Vec<u8>, LabeledPantsGraph> = BTreeMap::new();
    for rep in types.values() {
        for relabel in all_label_bijections(sig.curve_count()) {
            let g = rep.with_relabeling(&relabel)?;
            states.entry(certificate(&g, true)).or_insert(g);
        }
    }
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut orbits = Vec::new();
    for (cert, start) in &states {
        if seen.contains(cert) {
            continue;
        }
        let mut members = BTreeSet::new();
        members.insert(cert.clone());
        let mut queue = VecDeque::new();
        queue.push_back(start.clone());
        let mut representative = (cert.clone(), start.clone());
        while let Some(g) = queue.pop_front() {
            for (_, next) in flip_neighbors(&g) {
                let c = certificate(&next, true);
                if members.insert(c.clone()) {
                    if c < representative.0 {
                        representative = (c, next.clone());
                    }
                    queue.push_back(next);
                }
            }
        }
        for c in &members {
            seen.insert(c.clone());
        }
        orbits.push(GraphOrbit {
            size: members.len(),
            representative: representative.1,
        });
    }
    orbits.sort_by_key(|o| certificate(&o.representative, true));
    Ok(OrbitCensus {
        sig,
        state_count: states.len(),
        orbits,
    })
}

/// Breadth-first search for a shortest flip word whose replay lands on the
/// same labeled certificate with `l1` and `l2` exchanged. Returns `None` if
/// no word of length at most `max_depth` works.
pub fn find_label_swap(
    g: &LabeledPantsGraph,
    l1: u32,
    l2: u32,
    max_depth: usize,
) -> Result<Option<Vec<MoveRecord>>> {
    find_label_swap_with_stats(g, l1, l2, max_depth).map(|(word, _)| word)
}

/// Same search, also reporting how many distinct states were visited.
pub fn find_label_swap_with_stats(
    g: &LabeledPantsGraph,
    l1: u32,
    l2: u32,
    max_depth: usize,
) -> Result<(Option<Vec<MoveRecord>>, usize)> {
    if l1 == l2 {
        g.edge_of_label(l1)?;
        return Ok((Some(Vec::new()), 1));
    }
    let target = certificate(&g.with_labels_swapped(l1, l2)?, true);
    let start_cert = certificate(g, true);
    if start_cert == target {
        return Ok((Some(Vec::new()), 1));
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(start_cert);
    let mut queue: VecDeque<(LabeledPantsGraph, Vec<MoveRecord>)> = VecDeque::new();
    queue.push_back((g.clone(), Vec::new()));
    while let Some((state, word)) = queue.pop_front() {
        if word.len() >= max_depth {
            continue;
        }
        for (mv, next) in flip_neighbors(&state) {
            let c = certificate(&next, true);
            let mut w = word.clone();
            w.push(mv);
            if c == target {
                return Ok((Some(w), seen.len() + 1));
            }
            if seen.insert(c) {
                queue.push_back((next, w));
            }
        }
    }
    let explored = seen.len();
    Ok((None, explored))
}

/// Exhaustive check that no flip word of length at most `max_len` swaps the
/// two labels; independent of the BFS above (plain depth-first enumeration
/// of all words, no visited pruning).
pub fn no_swap_within(g: &LabeledPantsGraph, l1: u32, l2: u32, max_len: usize) -> Result<bool> {
    let target = certificate(&g.with_labels_swapped(l1, l2)?, true);
    fn rec(
        state: &LabeledPantsGraph,
        target: &[u8],
        remaining: usize,
        memo: &mut HashMap<(Vec<u8>, usize), bool>,
    ) -> bool {
        if certificate(state, true) == target {
            return false;
        }
        if remaining == 0 {
            return true;
        }
        let key = (certificate(state, true), remaining);
        if let Some(&ok) = memo.get(&key) {
            return ok;
        }
        let ok = flip_neighbors(state)
            .into_iter()
            .all(|(_, next)| rec(&next, target, remaining - 1, memo));
        memo.insert(key, ok);
        ok
    }
    let mut memo = HashMap::new();
    Ok(rec(g, &target, max_len, &mut memo))
}
