//! Canonical certificates for labeled pants graphs.
//!
//! Two graphs get equal certificates exactly when some vertex bijection maps
//! one to the other fixing every leg mark, and — when labels are respected —
//! every curve label. The graphs here stay tiny (at most the enumeration
//! bound of pants), so the certificate is the minimum encoding over all
//! vertex orderings compatible with a vertex-invariant refinement; no
//! sophisticated canonical-labeling machinery is warranted.

use super::{Attachment, LabeledPantsGraph};

/// What the certificate distinguishes. The public surface always respects
/// leg marks; the mark-blind flavor exists for the type enumerator, which
/// dedupes leg-anonymous structures before assigning marks.
#[derive(Clone, Copy)]
pub(super) struct Flavor {
    pub labels: bool,
    pub marks: bool,
}

fn mark_token(mark: u32, flavor: Flavor) -> u32 {
    if flavor.marks {
        mark
    } else {
        0
    }
}

/// One vertex's isomorphism-invariant signature: the sorted multiset of its
/// slot descriptors.
fn vertex_signature(g: &LabeledPantsGraph, v: usize, flavor: Flavor) -> Vec<(u8, u32)> {
    let mut sig = Vec::with_capacity(3);
    for slot in 3 * v..3 * v + 3 {
        match g.attachment(slot) {
            Attachment::Leg(mark) => sig.push((0u8, mark_token(mark, flavor))),
            Attachment::Paired(other) => {
                let label = if flavor.labels {
                    g.label_at(slot).unwrap()
                } else {
                    0
                };
                if LabeledPantsGraph::vertex_of(other) == v {
                    sig.push((1, label));
                } else {
                    sig.push((2, label));
                }
            }
        }
    }
    sig.sort();
    sig
}

/// One placed vertex's code row: the sorted descriptors of its three slots.
/// Backward edges carry the partner's position, so a row depends only on the
/// placements made before it — the key to prefix pruning.
type Row = [(u8, u32, u32); 3];

fn row_of(g: &LabeledPantsGraph, v: usize, pos_of: &[Option<u32>], flavor: Flavor) -> Row {
    let mut toks = [(0u8, 0u32, 0u32); 3];
    for (i, slot) in (3 * v..3 * v + 3).enumerate() {
        toks[i] = match g.attachment(slot) {
            Attachment::Leg(mark) => (0, mark_token(mark, flavor), 0),
            Attachment::Paired(other) => {
                let label = if flavor.labels {
                    g.label_at(slot).unwrap()
                } else {
                    0
                };
                let u = LabeledPantsGraph::vertex_of(other);
                if u == v {
                    (1, label, 0)
                } else if let Some(q) = pos_of[u] {
                    (2, q, label)
                } else {
                    (3, 0, 0)
                }
            }
        };
    }
    toks.sort();
    toks
}

fn rows_to_bytes(groups: &[Vec<usize>], rows: &[Row], flavor: Flavor) -> Vec<u8> {
    let byte = |x: u32| -> u8 {
        debug_assert!(
            x < 255,
            "encoding overflow; graphs this large are out of scope"
        );
        x as u8
    };
    let mut out = Vec::with_capacity(3 + groups.len() + rows.len() * 9);
    out.push(byte(rows.len() as u32));
    out.push(flavor.labels as u8);
    out.push(byte(groups.len() as u32));
    for gr in groups {
        out.push(byte(gr.len() as u32));
    }
    for row in rows {
        for &(k, a, b) in row {
            out.extend([k, byte(a), byte(b)]);
        }
    }
    out
}

/// Canonical certificate. Equal certificates are equivalent to isomorphism
/// (mark-fixing, and label-preserving when `respect_labels`).
pub fn certificate(g: &LabeledPantsGraph, respect_labels: bool) -> Vec<u8> {
    certificate_with(
        g,
        Flavor {
            labels: respect_labels,
            marks: true,
        },
    )
}

/// Iteratively refined vertex classes: start from the slot-descriptor
/// signatures and split by the multiset of (slot kind, neighbor class) until
/// stable. Refinement is isomorphism-invariant, so the candidate orderings
/// below stay sound; it exists to keep the ordering product small on
/// leg-free graphs where the raw signatures are uniform.
fn refined_classes(g: &LabeledPantsGraph, flavor: Flavor) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut keys: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            vertex_signature(g, v, flavor)
                .into_iter()
                .map(|(a, b)| ((a as u64) << 32) | b as u64)
                .collect()
        })
        .collect();
    let rank = |keys: &[Vec<u64>]| -> Vec<u64> {
        let sorted: std::collections::BTreeMap<&Vec<u64>, u64> = keys
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .zip(0..)
            .collect();
        keys.iter().map(|k| sorted[k]).collect()
    };
    let mut colors = rank(&keys);
    for _ in 0..n {
        for v in 0..n {
            let mut neighbor_part: Vec<u64> = (3 * v..3 * v + 3)
                .map(|slot| match g.attachment(slot) {
                    Attachment::Leg(_) => u64::MAX,
                    Attachment::Paired(other) => colors[LabeledPantsGraph::vertex_of(other)],
                })
                .collect();
            neighbor_part.sort();
            keys[v] = std::iter::once(colors[v]).chain(neighbor_part).collect();
        }
        let next = rank(&keys);
        if next == colors {
            break;
        }
        colors = next;
    }
    let mut classes: std::collections::BTreeMap<u64, Vec<usize>> =
        std::collections::BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    classes.into_values().collect()
}

pub(super) fn certificate_with(g: &LabeledPantsGraph, flavor: Flavor) -> Vec<u8> {
    // candidate orderings list class members in every order, classes in
    // fixed refinement order; the minimum row sequence wins. Candidates are
    // tried in ascending row order and branches whose next row already
    // exceeds the incumbent's are cut, so symmetric orderings collapse after
    // one greedy descent.
    let groups: Vec<Vec<usize>> = refined_classes(g, flavor);
    let n = g.vertex_count();
    struct Search<'a> {
        g: &'a LabeledPantsGraph,
        flavor: Flavor,
        groups: &'a [Vec<usize>],
        pos_of: Vec<Option<u32>>,
        rows: Vec<Row>,
        best: Option<Vec<Row>>,
    }
    impl Search<'_> {
        /// `tight` means the rows placed so far equal the incumbent's prefix.
        fn dfs(&mut self, gi: usize, remaining: &mut Vec<usize>, tight: bool) {
            if remaining.is_empty() {
                if gi == self.groups.len() {
                    match &self.best {
                        None => self.best = Some(self.rows.clone()),
                        Some(b) if !tight && self.rows < *b => self.best = Some(self.rows.clone()),
                        _ => {}
                    }
                    return;
                }
                let mut rem = self.groups[gi].clone();
                self.dfs(gi + 1, &mut rem, tight);
                return;
            }
            let p = self.rows.len();
            let mut candidates: Vec<(Row, usize)> = remaining
                .iter()
                .map(|&v| (row_of(self.g, v, &self.pos_of, self.flavor), v))
                .collect();
            candidates.sort();
            for (row, v) in candidates {
                let tight_next = match (&self.best, tight) {
                    (Some(b), true) => match row.cmp(&b[p]) {
                        std::cmp::Ordering::Greater => continue,
                        std::cmp::Ordering::Equal => true,
                        std::cmp::Ordering::Less => false,
                    },
                    _ => false,
                };
                let idx = remaining.iter().position(|&x| x == v).unwrap();
                remaining.swap_remove(idx);
                self.pos_of[v] = Some(p as u32);
                self.rows.push(row);
                self.dfs(gi, remaining, tight_next);
                self.rows.pop();
                self.pos_of[v] = None;
                remaining.push(v);
            }
        }
    }
    let mut search = Search {
        g,
        flavor,
        groups: &groups,
        pos_of: vec![None; n],
        rows: Vec::with_capacity(n),
        best: None,
    };
    // greedy seed: one descent always picking the smallest next row, so the
    // full search below starts with a strong incumbent and prunes hard
    for group in &groups {
        let mut rem = group.clone();
        while !rem.is_empty() {
            let (row, v) = rem
                .iter()
                .map(|&v| (row_of(g, v, &search.pos_of, flavor), v))
                .min()
                .unwrap();
            rem.retain(|&x| x != v);
            search.pos_of[v] = Some(search.rows.len() as u32);
            search.rows.push(row);
        }
    }
    search.best = Some(std::mem::take(&mut search.rows));
    search.pos_of = vec![None; n];
    search.rows = Vec::with_capacity(n);
    search.dfs(0, &mut Vec::new(), true);
    rows_to_bytes(
        &groups,
        &search.best.expect("at least one ordering"),
        flavor,
    )
}
