//! The genus-2 labeling machine.
//!
//! A hexagonal double decomposition of the closed genus-2 surface carries six
//! curves arranged around a hexagon; consecutive sides meet once, all other
//! pairs are disjoint. This module works purely with the labels on the six
//! hexagon positions. The move set is exactly what the curve-level theory
//! realizes: a rotation and a reflection of the hexagon (giving the dihedral
//! group of order 12), plus — in labeled mode — the three switches that
//! exchange the labels of opposite sides.
//!
//! Position order is `[a1, b3, a2, b1, a3, b2]`; the reference labeling is
//! `[1, 4, 2, 5, 3, 6]`.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Labeling regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Labels `{1,2,3}` stay on one decomposition and `{4,5,6}` on the other:
    /// one alternation class of positions carries `{1,2,3}`, the other `{4,5,6}`.
    Strict,
    /// All six labels are interchangeable; switches are allowed.
    Labeled,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Labeled => "labeled",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Mode::Strict),
            "labeled" => Ok(Mode::Labeled),
            other => Err(Error::InvalidLabeling(format!(
                "unknown mode {other:?}, expected strict or labeled"
            ))),
        }
    }
}

/// An assignment of the labels 1..6 to the six hexagon positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexLabeling {
    positions: [u8; 6],
    mode: Mode,
}

impl HexLabeling {
    pub fn new(positions: [u8; 6], mode: Mode) -> Result<Self> {
        let mut seen = [false; 7];
        for &l in &positions {
            if !(1..=6).contains(&l) || seen[l as usize] {
                return Err(Error::InvalidLabeling(format!(
                    "positions must carry the labels 1..6 exactly once, got {positions:?}"
                )));
            }
            seen[l as usize] = true;
        }
        let h = HexLabeling { positions, mode };
        if mode == Mode::Strict && !h.is_strict() {
            return Err(Error::InvalidLabeling(format!(
                "{positions:?} does not keep 1,2,3 on one alternation class"
            )));
        }
        Ok(h)
    }

    /// The reference labeling `[1,4,2,5,3,6]`.
    pub fn reference(mode: Mode) -> Self {
        HexLabeling::new([1, 4, 2, 5, 3, 6], mode).unwrap()
    }

    fn is_strict(&self) -> bool {
        let even: BTreeSet<u8> = [0, 2, 4].iter().map(|&p| self.positions[p]).collect();
        let low: BTreeSet<u8> = [1, 2, 3].into_iter().collect();
        let high: BTreeSet<u8> = [4, 5, 6].into_iter().collect();
        even == low || even == high
    }

    pub fn positions(&self) -> &[u8; 6] {
        &self.positions
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Cyclic shift by one position: `[1,4,2,5,3,6] -> [6,1,4,2,5,3]`.
    pub fn rotate(&self) -> HexLabeling {
        let p = &self.positions;
        HexLabeling {
            positions: [p[5], p[0], p[1], p[2], p[3], p[4]],
            mode: self.mode,
        }
    }

    /// Reversal of the position array: `[1,4,2,5,3,6] -> [6,3,5,2,4,1]`.
    pub fn reflect(&self) -> HexLabeling {
        let p = &self.positions;
        HexLabeling {
            positions: [p[5], p[4], p[3], p[2], p[1], p[0]],
            mode: self.mode,
        }
    }

    /// Exchange the labels of opposite sides `k` and `k+3` (`k` in 1..=3).
    /// Forbidden in strict mode.
    pub fn switch(&self, k: u8) -> Result<HexLabeling> {
        if self.mode == Mode::Strict {
            return Err(Error::SwitchInStrictMode);
        }
        if !(1..=3).contains(&k) {
            return Err(Error::InvalidLabeling(format!(
                "switch index {k} out of range 1..=3"
            )));
        }
        let mut p = self.positions;
        p.swap(k as usize - 1, k as usize + 2);
        Ok(HexLabeling {
            positions: p,
            mode: self.mode,
        })
    }

    /// The label sequence read around the hexagon, canonical under all six
    /// rotations and reversal.
    pub fn cyclic_order(&self) -> CyclicOrder {
        CyclicOrder::of(&self.positions)
    }

    /// The three unordered pairs of labels on opposite sides.
    pub fn opposite_pairing(&self) -> OppositePairing {
        let p = &self.positions;
        let mut pairs = [
            sorted_pair(p[0], p[3]),
            sorted_pair(p[1], p[4]),
            sorted_pair(p[2], p[5]),
        ];
        pairs.sort();
        OppositePairing { pairs }
    }

    /// The complete orbit invariant for the labeling's mode.
    pub fn orbit_invariant(&self) -> OrbitInvariant {
        match self.mode {
            Mode::Strict => OrbitInvariant::Cyclic(self.cyclic_order()),
            Mode::Labeled => OrbitInvariant::Pairing(self.opposite_pairing()),
        }
    }

    /// The label permutation turning `self` into `other` (same curve set):
    /// `sigma(label at position p of self) = label at position p of other`.
    pub fn label_permutation_to(&self, other: &HexLabeling) -> BTreeMap<u8, u8> {
        self.positions
            .iter()
            .zip(&other.positions)
            .map(|(&a, &b)| (a, b))
            .collect()
    }

    /// Comma-joined position array, e.g. `1,4,2,5,3,6`.
    pub fn to_compact(&self) -> String {
        self.positions
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_compact(s: &str, mode: Mode) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 6 {
            return Err(Error::InvalidLabeling(format!(
                "expected 6 comma-joined labels, got {s:?}"
            )));
        }
        let mut p = [0u8; 6];
        for (i, t) in parts.iter().enumerate() {
            p[i] = t
                .trim()
                .parse::<u8>()
                .map_err(|_| Error::InvalidLabeling(format!("bad label {t:?} in {s:?}")))?;
        }
        HexLabeling::new(p, mode)
    }
}

fn sorted_pair(a: u8, b: u8) -> (u8, u8) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Canonical representative of a label sequence under rotation and reversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicOrder {
    canonical: [u8; 6],
}

impl CyclicOrder {
    fn of(seq: &[u8; 6]) -> Self {
        let mut best = *seq;
        let mut consider = |cand: [u8; 6]| {
            if cand < best {
                best = cand;
            }
        };
        let mut rev = *seq;
        rev.reverse();
        for k in 0..6 {
            let mut r = [0u8; 6];
            let mut v = [0u8; 6];
            for i in 0..6 {
                r[i] = seq[(i + k) % 6];
                v[i] = rev[(i + k) % 6];
            }
            consider(r);
            consider(v);
        }
        CyclicOrder { canonical: best }
    }

    pub fn canonical(&self) -> &[u8; 6] {
        &self.canonical
    }
}

impl std::fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.canonical.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Partition of the six labels into the three opposite-side pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OppositePairing {
    pairs: [(u8, u8); 3],
}

impl OppositePairing {
    pub fn pairs(&self) -> &[(u8, u8); 3] {
        &self.pairs
    }
}

impl std::fmt::Display for OppositePairing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        Ok(())
    }
}

/// Mode-dependent complete orbit invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitInvariant {
    Cyclic(CyclicOrder),
    Pairing(OppositePairing),
}

impl std::fmt::Display for OrbitInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrbitInvariant::Cyclic(c) => write!(f, "{c}"),
            OrbitInvariant::Pairing(p) => write!(f, "{p}"),
        }
    }
}

/// One orbit of the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexOrbit {
    pub size: usize,
    pub representative: HexLabeling,
    pub invariant: OrbitInvariant,
}

/// Full orbit census for a mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexCensus {
    pub mode: Mode,
    pub state_count: usize,
    pub orbits: Vec<HexOrbit>,
}

impl HexCensus {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

fn all_labelings(mode: Mode) -> Vec<HexLabeling> {
    let mut out = Vec::new();
    let mut labels = [1u8, 2, 3, 4, 5, 6];
    permute(&mut labels, 0, &mut |p| {
        if let Ok(h) = HexLabeling::new(*p, mode) {
            out.push(h);
        }
    });
    out.sort();
    out
}

fn permute(arr: &mut [u8; 6], k: usize, visit: &mut impl FnMut(&[u8; 6])) {
    if k == arr.len() {
        visit(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute(arr, k + 1, visit);
        arr.swap(k, i);
    }
}

fn neighbors(h: &HexLabeling) -> Vec<HexLabeling> {
    let mut out = vec![h.rotate(), h.reflect()];
    if h.mode() == Mode::Labeled {
        for k in 1..=3 {
            out.push(h.switch(k).unwrap());
        }
    }
    out
}

/// BFS closure of every valid labeling under the mode's move set.
///
/// Orbits come back sorted by their lexicographically minimal representative;
/// sizes and invariants are byproducts of the closure.
pub fn enumerate_orbits(mode: Mode) -> HexCensus {
    let all = all_labelings(mode);
    let mut seen: BTreeSet<HexLabeling> = BTreeSet::new();
    let mut orbits = Vec::new();
    for &start in &all {
        if seen.contains(&start) {
            continue;
        }
        let mut queue = vec![start];
        let mut members = BTreeSet::new();
        members.insert(start);
        while let Some(h) = queue.pop() {
            for n in neighbors(&h) {
                if members.insert(n) {
                    queue.push(n);
                }
            }
        }
        let representative = *members.iter().next().unwrap();
        for m in &members {
            seen.insert(*m);
        }
        orbits.push(HexOrbit {
            size: members.len(),
            invariant: representative.orbit_invariant(),
            representative,
        });
    }
    orbits.sort_by_key(|o| o.representative);
    HexCensus {
        mode,
        state_count: all.len(),
        orbits,
    }
}

/// Does the orbit partition coincide exactly with the mode's invariant
/// classes? Checks that members of one orbit share the orbit's invariant and
/// that distinct orbits have distinct invariants.
pub fn invariant_partition_coincides(mode: Mode) -> bool {
    let mut by_invariant: BTreeMap<OrbitInvariant, BTreeSet<HexLabeling>> = BTreeMap::new();
    for h in all_labelings(mode) {
        by_invariant
            .entry(h.orbit_invariant())
            .or_default()
            .insert(h);
    }
    let census = enumerate_orbits(mode);
    if by_invariant.len() != census.orbit_count() {
        return false;
    }
    census.orbits.iter().all(|o| {
        by_invariant
            .get(&o.invariant)
            .is_some_and(|class| class.len() == o.size && class.contains(&o.representative))
    })
}
