//! Pants decompositions as leg-marked trivalent graphs.
//!
//! A pants decomposition of `S_{g,n}` is modeled by its dual graph: one
//! trivalent vertex per pair of pants, one internal edge per curve (loops
//! allowed for self-folded pants), and one marked leg per boundary hole.
//! Curves carry labels `1..m`.
//!
//! This is a faithful quotient, not an isotopy-class model: a move word found
//! here is necessary evidence for a curve-level statement, and every
//! quantitative claim verified on it (orbit counts, swap-word lengths)
//! concerns the quotient. Flips that change a curve without changing the
//! combinatorial type — flips of a curve inside a handle — act as recorded
//! identities, as do S-moves.
//!
//! Half-edge layout: vertex `v` owns the half-edge slots `3v, 3v+1, 3v+2`,
//! so trivalence is structural. Each slot is either paired with another slot
//! (forming an internal edge) or carries a boundary mark (a leg).

mod canon;
mod enumerate;
mod text;

pub use canon::certificate;
pub use enumerate::{
    enumerate_graph_types, find_label_swap, find_label_swap_with_stats, labeled_orbits,
    no_swap_within, GraphOrbit, OrbitCensus, DEFAULT_BOUND,
};
pub use text::{parse_graph, to_dot, to_text};

use crate::{Error, Result, SurfaceSig};
use std::collections::BTreeMap;

/// Index of a half-edge slot; the owning vertex is `slot / 3`.
pub type HalfEdge = usize;

/// What a half-edge slot is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attachment {
    /// Paired with another slot: together they form an internal edge (a curve).
    Paired(HalfEdge),
    /// Unpaired: a boundary leg carrying this mark.
    Leg(u32),
}

/// The two ways a flip can re-partition the four outer half-edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlipChoice {
    A,
    B,
}

impl std::fmt::Display for FlipChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FlipChoice::A => "A",
            FlipChoice::B => "B",
        })
    }
}

/// One recorded move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    Flip,
    SMove,
}

/// A move with enough detail to replay it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub label: u32,
    /// Present exactly for flips of non-loop curves.
    pub choice: Option<FlipChoice>,
}

impl std::fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.kind, self.choice) {
            (MoveKind::Flip, Some(c)) => write!(f, "flip {} {}", self.label, c),
            (MoveKind::Flip, None) => write!(f, "flip {}", self.label),
            (MoveKind::SMove, _) => write!(f, "s_move {}", self.label),
        }
    }
}

/// A labeled pants decomposition in the trivalent-graph model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPantsGraph {
    sig: SurfaceSig,
    attachments: Vec<Attachment>,
    /// Curve label carried by each paired slot (both slots of an edge agree);
    /// `None` for legs.
    labels: Vec<Option<u32>>,
}

impl LabeledPantsGraph {
    /// Builds a graph from raw parts and validates every invariant.
    pub fn from_parts(
        sig: SurfaceSig,
        attachments: Vec<Attachment>,
        labels: Vec<Option<u32>>,
    ) -> Result<Self> {
        let g = LabeledPantsGraph {
            sig,
            attachments,
            labels,
        };
        g.validate()?;
        Ok(g)
    }

    /// The standard decomposition: `g` self-folded pants (handles) attached
    /// to a chain of pants carrying the `n` legs.
    ///
    /// Label convention (fixed so fixtures are reproducible): handle loops
    /// first, `1..=g` in handle order; then the handle connector edges in
    /// handle order; then the chain edges left to right.
    pub fn standard(sig: SurfaceSig) -> Self {
        let g = sig.genus() as usize;
        let n = sig.holes() as usize;
        let pants = sig.pants_count() as usize;
        let chain = pants - g; // g - 2 + n
        let mut att: Vec<Option<Attachment>> = vec![None; 3 * pants];
        let mut next_label = 1u32;
        let pair = |att: &mut Vec<Option<Attachment>>, a: HalfEdge, b: HalfEdge| {
            att[a] = Some(Attachment::Paired(b));
            att[b] = Some(Attachment::Paired(a));
        };

        let mut labels_for: Vec<(HalfEdge, u32)> = Vec::new();
        // handles occupy vertices 0..g: slots (3h, 3h+1) form the loop,
        // slot 3h+2 is the connector stub
        for h in 0..g {
            pair(&mut att, 3 * h, 3 * h + 1);
            labels_for.push((3 * h, next_label));
            next_label += 1;
        }

        if chain == 0 {
            // g + n == 2: the two stubs attach to each other
            match (g, n) {
                (2, 0) => pair(&mut att, 2, 5),
                (1, 1) => att[2] = Some(Attachment::Leg(1)),
                _ => unreachable!("2g + n > 2 with g + n == 2 leaves (2,0) and (1,1)"),
            }
            if g == 2 {
                labels_for.push((2, next_label));
            }
        } else {
            // chain vertices occupy g..g+chain-1, linked slot 2 -> slot 0
            for i in 0..chain.saturating_sub(1) {
                pair(&mut att, 3 * (g + i) + 2, 3 * (g + i + 1));
            }
            // free slots of the chain, in chain order
            let mut free: Vec<HalfEdge> = Vec::new();
            for i in 0..chain {
                let base = 3 * (g + i);
                match (chain, i) {
                    (1, _) => free.extend([base, base + 1, base + 2]),
                    (_, 0) => free.extend([base, base + 1]),
                    (_, i) if i == chain - 1 => free.extend([base + 1, base + 2]),
                    _ => free.push(base + 1),
                }
            }
            debug_assert_eq!(free.len(), g + n);
            // handle connectors first, then legs
            for (h, &slot) in free.iter().take(g).enumerate() {
                pair(&mut att, 3 * h + 2, slot);
            }
            for (mark0, &slot) in free.iter().skip(g).enumerate() {
                att[slot] = Some(Attachment::Leg(mark0 as u32 + 1));
            }
            // connector labels in handle order, then chain edges left to right
            for h in 0..g {
                labels_for.push((3 * h + 2, next_label));
                next_label += 1;
            }
            for i in 0..chain.saturating_sub(1) {
                labels_for.push((3 * (g + i) + 2, next_label));
                next_label += 1;
            }
        }

        let attachments: Vec<Attachment> = att.into_iter().map(Option::unwrap).collect();
        let mut labels = vec![None; attachments.len()];
        for (slot, label) in labels_for {
            let Attachment::Paired(other) = attachments[slot] else {
                unreachable!()
            };
            labels[slot] = Some(label);
            labels[other] = Some(label);
        }
        let g = LabeledPantsGraph {
            sig,
            attachments,
            labels,
        };
        debug_assert!(g.validate().is_ok(), "standard graph invalid: {g:?}");
        g
    }

    pub fn sig(&self) -> SurfaceSig {
        self.sig
    }

    pub fn vertex_count(&self) -> usize {
        self.attachments.len() / 3
    }

    pub fn vertex_of(slot: HalfEdge) -> usize {
        slot / 3
    }

    pub fn attachment(&self, slot: HalfEdge) -> Attachment {
        self.attachments[slot]
    }

    pub fn label_at(&self, slot: HalfEdge) -> Option<u32> {
        self.labels[slot]
    }

    /// Internal edges as `(lower slot, upper slot, label)`, sorted by label.
    pub fn edges(&self) -> Vec<(HalfEdge, HalfEdge, u32)> {
        let mut out = Vec::new();
        for (slot, att) in self.attachments.iter().enumerate() {
            if let Attachment::Paired(other) = *att {
                if slot < other {
                    out.push((slot, other, self.labels[slot].unwrap()));
                }
            }
        }
        out.sort_by_key(|&(_, _, l)| l);
        out
    }

    /// Legs as `(slot, mark)`, sorted by mark.
    pub fn legs(&self) -> Vec<(HalfEdge, u32)> {
        let mut out = Vec::new();
        for (slot, att) in self.attachments.iter().enumerate() {
            if let Attachment::Leg(mark) = *att {
                out.push((slot, mark));
            }
        }
        out.sort_by_key(|&(_, m)| m);
        out
    }

    /// The slot pair of the curve with this label.
    pub fn edge_of_label(&self, label: u32) -> Result<(HalfEdge, HalfEdge)> {
        for (slot, l) in self.labels.iter().enumerate() {
            if *l == Some(label) {
                let Attachment::Paired(other) = self.attachments[slot] else {
                    unreachable!()
                };
                return Ok((slot.min(other), slot.max(other)));
            }
        }
        Err(Error::UnknownLabel(label))
    }

    /// Is the labeled curve a loop, i.e. does it live inside a handle?
    pub fn is_loop(&self, label: u32) -> Result<bool> {
        let (a, b) = self.edge_of_label(label)?;
        Ok(Self::vertex_of(a) == Self::vertex_of(b))
    }

    /// Flip the labeled curve.
    ///
    /// For a non-loop curve a re-pairing `choice` is required: with the flip
    /// edge joining `u` (other slots `α < β`) and `v` (other slots `γ < δ`),
    /// choice `A` regroups the attachments as `u:{α,γ}, v:{β,δ}` and choice
    /// `B` as `u:{α,δ}, v:{β,γ}`. For a loop curve the flip must carry no
    /// choice and acts as the identity (the replacement curve fills the same
    /// handle).
    pub fn flip(&self, label: u32, choice: Option<FlipChoice>) -> Result<LabeledPantsGraph> {
        let (a, b) = self.edge_of_label(label)?;
        let (u, v) = (Self::vertex_of(a), Self::vertex_of(b));
        if u == v {
            return match choice {
                Some(_) => Err(Error::LoopFlipChoice(label)),
                None => Ok(self.clone()),
            };
        }
        let Some(choice) = choice else {
            return Err(Error::MissingFlipChoice(label));
        };
        let others = |vertex: usize, skip: HalfEdge| -> (HalfEdge, HalfEdge) {
            let s: Vec<HalfEdge> = (3 * vertex..3 * vertex + 3)
                .filter(|&s| s != skip)
                .collect();
            (s[0], s[1])
        };
        let (_alpha, beta) = others(u, a);
        let (gamma, delta) = others(v, b);
        let mut next = self.clone();
        match choice {
            FlipChoice::A => next.swap_attachments(beta, gamma),
            FlipChoice::B => next.swap_attachments(beta, delta),
        }
        debug_assert!(next.validate().is_ok());
        Ok(next)
    }

    /// Exchange what is plugged into two slots: the curves (or legs) attached
    /// there move, keeping their labels/marks.
    fn swap_attachments(&mut self, s: HalfEdge, t: HalfEdge) {
        match (self.attachments[s], self.attachments[t]) {
            (Attachment::Paired(p), _) if p == t => {
                // s and t are two ends of one edge: re-plugging swaps nothing
            }
            (Attachment::Paired(p), Attachment::Paired(q)) => {
                let (ls, lt) = (self.labels[s], self.labels[t]);
                self.attachments[s] = Attachment::Paired(q);
                self.attachments[q] = Attachment::Paired(s);
                self.labels[s] = lt;
                self.attachments[t] = Attachment::Paired(p);
                self.attachments[p] = Attachment::Paired(t);
                self.labels[t] = ls;
            }
            (Attachment::Paired(p), Attachment::Leg(mark)) => {
                let ls = self.labels[s];
                self.attachments[t] = Attachment::Paired(p);
                self.attachments[p] = Attachment::Paired(t);
                self.labels[t] = ls;
                self.attachments[s] = Attachment::Leg(mark);
                self.labels[s] = None;
            }
            (Attachment::Leg(mark), Attachment::Paired(q)) => {
                let lt = self.labels[t];
                self.attachments[s] = Attachment::Paired(q);
                self.attachments[q] = Attachment::Paired(s);
                self.labels[s] = lt;
                self.attachments[t] = Attachment::Leg(mark);
                self.labels[t] = None;
            }
            (Attachment::Leg(m1), Attachment::Leg(m2)) => {
                self.attachments[s] = Attachment::Leg(m2);
                self.attachments[t] = Attachment::Leg(m1);
            }
        }
    }

    /// S-move on the curve inside a handle: the replacement again fills the
    /// handle, so the graph and labeling are unchanged. Errors unless the
    /// curve is a loop.
    pub fn s_move(&self, label: u32) -> Result<LabeledPantsGraph> {
        if !self.is_loop(label)? {
            return Err(Error::NotALoop(label));
        }
        Ok(self.clone())
    }

    /// Clone with two curve labels exchanged.
    pub fn with_labels_swapped(&self, l1: u32, l2: u32) -> Result<LabeledPantsGraph> {
        self.edge_of_label(l1)?;
        self.edge_of_label(l2)?;
        let mut next = self.clone();
        for l in next.labels.iter_mut() {
            *l = match *l {
                Some(x) if x == l1 => Some(l2),
                Some(x) if x == l2 => Some(l1),
                other => other,
            };
        }
        Ok(next)
    }

    /// Clone with labels reassigned by the map (must be a bijection on the
    /// current label set).
    pub fn with_relabeling(&self, map: &BTreeMap<u32, u32>) -> Result<LabeledPantsGraph> {
        let mut next = self.clone();
        for l in next.labels.iter_mut() {
            if let Some(x) = *l {
                *l = Some(*map.get(&x).ok_or(Error::UnknownLabel(x))?);
            }
        }
        next.validate()?;
        Ok(next)
    }

    /// Clone with boundary marks reassigned by the map (must be a bijection
    /// on 1..=n).
    pub fn with_marks_permuted(&self, map: &BTreeMap<u32, u32>) -> Result<LabeledPantsGraph> {
        let mut next = self.clone();
        for a in next.attachments.iter_mut() {
            if let Attachment::Leg(m) = a {
                *m = *map
                    .get(m)
                    .ok_or_else(|| Error::GraphInvariant(format!("no image for mark {m}")))?;
            }
        }
        next.validate()?;
        Ok(next)
    }

    /// Replays a move script; graph flips and S-moves only.
    pub fn replay(&self, script: &crate::script::MoveScript) -> Result<LabeledPantsGraph> {
        use crate::script::{FlipArgs, Move};
        let mut state = self.clone();
        for (index, (_, mv)) in script.moves.iter().enumerate() {
            let res = match mv {
                Move::Flip {
                    label,
                    args: FlipArgs::None,
                } => state.flip(*label, None),
                Move::Flip {
                    label,
                    args: FlipArgs::Choice(c),
                } => state.flip(*label, Some(*c)),
                Move::SMove { label } => state.s_move(*label),
                other => Err(Error::IllegalMove {
                    index: index + 1,
                    msg: format!("move `{other}` does not apply to the graph model"),
                }),
            };
            state = res.map_err(|e| match e {
                Error::IllegalMove { .. } => e,
                e => Error::IllegalMove {
                    index: index + 1,
                    msg: e.to_string(),
                },
            })?;
        }
        Ok(state)
    }

    /// Checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::GraphInvariant(msg));
        let pants = self.sig.pants_count() as usize;
        let m = self.sig.curve_count() as usize;
        let n = self.sig.holes() as usize;
        if self.attachments.len() != 3 * pants {
            return fail(format!(
                "expected {} slots for {} pants, got {}",
                3 * pants,
                pants,
                self.attachments.len()
            ));
        }
        if self.labels.len() != self.attachments.len() {
            return fail("labels and attachments disagree in length".into());
        }
        let mut edge_count = 0usize;
        let mut marks = std::collections::BTreeSet::new();
        let mut label_set = std::collections::BTreeSet::new();
        for (slot, att) in self.attachments.iter().enumerate() {
            match *att {
                Attachment::Paired(other) => {
                    if other == slot {
                        return fail(format!("slot {slot} paired with itself"));
                    }
                    if self.attachments.get(other) != Some(&Attachment::Paired(slot)) {
                        return fail(format!("pairing of slot {slot} is not an involution"));
                    }
                    let Some(label) = self.labels[slot] else {
                        return fail(format!("paired slot {slot} lacks a label"));
                    };
                    if self.labels[other] != Some(label) {
                        return fail(format!(
                            "slots {slot},{other} of one edge disagree on label"
                        ));
                    }
                    if slot < other {
                        edge_count += 1;
                        if !label_set.insert(label) {
                            return fail(format!("label {label} used twice"));
                        }
                    }
                }
                Attachment::Leg(mark) => {
                    if self.labels[slot].is_some() {
                        return fail(format!("leg slot {slot} carries a curve label"));
                    }
                    if !marks.insert(mark) {
                        return fail(format!("boundary mark {mark} used twice"));
                    }
                }
            }
        }
        if edge_count != m {
            return fail(format!("expected {m} curves, got {edge_count}"));
        }
        let want_marks: std::collections::BTreeSet<u32> = (1..=n as u32).collect();
        if marks != want_marks {
            return fail(format!("boundary marks {marks:?}, expected 1..={n}"));
        }
        let want_labels: std::collections::BTreeSet<u32> = (1..=m as u32).collect();
        if label_set != want_labels {
            return fail(format!("labels {label_set:?}, expected 1..={m}"));
        }
        // connectivity over vertices through internal edges
        if pants > 0 {
            let mut seen = vec![false; pants];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for slot in 3 * v..3 * v + 3 {
                    if let Attachment::Paired(other) = self.attachments[slot] {
                        let w = Self::vertex_of(other);
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
            if seen.iter().any(|&s| !s) {
                return fail("graph is disconnected".into());
            }
        }
        Ok(())
    }
}
