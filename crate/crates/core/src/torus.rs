//! Exact curve model inside a handle (one-holed torus).
//!
//! Isotopy classes of essential, non-boundary-parallel curves in a one-holed
//! torus correspond to primitive integer pairs `(p, q)` up to sign, so the
//! three-twist label swap can be verified on the nose here rather than just
//! on homology classes.

use crate::{Error, Result, Sign};
use serde::{Deserialize, Serialize};

/// A primitive slope up to sign. Canonical representative: `p > 0`, or
/// `p == 0` and `q == 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slope {
    p: i64,
    q: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::GraphInvariant(format!(
                "slope ({p},{q}) is not primitive"
            )));
        }
        Ok(Self::canonical(p, q))
    }

    fn canonical(p: i64, q: i64) -> Self {
        if p < 0 || (p == 0 && q < 0) {
            Slope { p: -p, q: -q }
        } else {
            Slope { p, q }
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl std::str::FromStr for Slope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s.split_once('/').ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("slope must look like p/q, got {s:?}"),
        })?;
        let parse = |t: &str| {
            t.trim().parse::<i64>().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad integer {t:?} in slope"),
            })
        };
        Slope::new(parse(p)?, parse(q)?)
    }
}

/// Geometric intersection number of two slopes: `|p s.q - q s.p|`.
pub fn intersection(a: &Slope, b: &Slope) -> u64 {
    (a.p * b.q - a.q * b.p).unsigned_abs()
}

fn det(a: &Slope, b: &Slope) -> i64 {
    a.p * b.q - a.q * b.p
}

/// Dehn twist of `target` along `along`, in the given direction.
pub fn twist_slope(along: &Slope, dir: Sign, target: &Slope) -> Slope {
    let k = dir.as_i64() * det(target, along);
    Slope::canonical(target.p + k * along.p, target.q + k * along.q)
}

/// One move of the two-curve tracking used by the swap search: a twist along
/// the curve currently carrying `label`, applied to both tracked curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistMove {
    pub label: u32,
    pub dir: Sign,
}

/// The tracked state of a handle: the curve labeled 1 and the curve labeled 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HandlePair {
    pub first: Slope,
    pub second: Slope,
}

impl HandlePair {
    /// The standard start state: `1/0` labeled 1 and `0/1` labeled 2.
    pub fn standard() -> Self {
        HandlePair {
            first: Slope::new(1, 0).unwrap(),
            second: Slope::new(0, 1).unwrap(),
        }
    }

    pub fn get(&self, label: u32) -> Result<Slope> {
        match label {
            1 => Ok(self.first),
            2 => Ok(self.second),
            l => Err(Error::UnknownLabel(l)),
        }
    }

    pub fn apply(&self, mv: TwistMove) -> Result<HandlePair> {
        let along = self.get(mv.label)?;
        Ok(HandlePair {
            first: twist_slope(&along, mv.dir, &self.first),
            second: twist_slope(&along, mv.dir, &self.second),
        })
    }

    fn is_swapped(&self) -> bool {
        self.first == Slope::new(0, 1).unwrap() && self.second == Slope::new(1, 0).unwrap()
    }
}

/// Searches the 16 three-twist words (patterns 1-2-1 and 2-1-2, each twist in
/// either direction, along the current curve with that label) for one taking
/// `(1/0, 0/1)` to `(0/1, 1/0)` up to sign.
pub fn find_handle_swap() -> Option<Vec<TwistMove>> {
    for pattern in [[1u32, 2, 1], [2, 1, 2]] {
        for dirs in all_sign_words(3) {
            let word: Vec<TwistMove> = pattern
                .iter()
                .zip(&dirs)
                .map(|(&label, &dir)| TwistMove { label, dir })
                .collect();
            let mut st = HandlePair::standard();
            let mut ok = true;
            for mv in &word {
                st = match st.apply(*mv) {
                    Ok(s) => s,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                };
            }
            if ok && st.is_swapped() {
                return Some(word);
            }
        }
    }
    None
}

/// Exhaustively checks that no word of length at most `max_len` over the
/// move alphabet (either label, either direction) achieves the swap.
pub fn no_swap_within(max_len: usize) -> bool {
    fn rec(st: HandlePair, remaining: usize) -> bool {
        if st.is_swapped() {
            return false;
        }
        if remaining == 0 {
            return true;
        }
        for label in [1, 2] {
            for dir in Sign::ALL {
                let nxt = st.apply(TwistMove { label, dir }).unwrap();
                if !rec(nxt, remaining - 1) {
                    return false;
                }
            }
        }
        true
    }
    // words of every length from 1 to max_len are covered by the recursion
    // because the swap test runs at every node, not only at the leaves
    rec(HandlePair::standard(), max_len)
}

/// The truncated codomain of an S-move: all slopes `t` with
/// `intersection(c, t) == 1` whose canonical representative has both
/// coordinates in `0..=bound`, sorted.
pub fn s_move_slope(c: &Slope, bound: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for p in 0..=bound {
        for q in 0..=bound {
            if gcd(p, q) != 1 {
                continue;
            }
            let t = Slope::canonical(p, q);
            if intersection(c, &t) == 1 {
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

/// A labeled family of slopes in one handle, for script replay.
/// Serializes one curve per line: `<label>: p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusState {
    slopes: std::collections::BTreeMap<u32, Slope>,
}

impl TorusState {
    pub fn new(slopes: std::collections::BTreeMap<u32, Slope>) -> Self {
        TorusState { slopes }
    }

    /// The handle start state `1: 1/0`, `2: 0/1`.
    pub fn standard_handle() -> Self {
        let pair = HandlePair::standard();
        TorusState {
            slopes: [(1, pair.first), (2, pair.second)].into_iter().collect(),
        }
    }

    pub fn slope(&self, label: u32) -> Result<Slope> {
        self.slopes
            .get(&label)
            .copied()
            .ok_or(Error::UnknownLabel(label))
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.slopes.keys().copied()
    }

    /// Twist every tracked slope along the curve currently labeled `label`.
    pub fn twist(&mut self, label: u32, dir: Sign) -> Result<()> {
        let along = self.slope(label)?;
        for s in self.slopes.values_mut() {
            *s = twist_slope(&along, dir, s);
        }
        Ok(())
    }

    /// Replays a script of twist moves, reporting the index of any move that
    /// does not apply to this model.
    pub fn replay(&self, script: &crate::script::MoveScript) -> Result<TorusState> {
        let mut state = self.clone();
        for (index, (_, mv)) in script.moves.iter().enumerate() {
            match mv {
                crate::script::Move::Twist { label, dir } => {
                    state.twist(*label, *dir).map_err(|e| Error::IllegalMove {
                        index: index + 1,
                        msg: e.to_string(),
                    })?;
                }
                other => {
                    return Err(Error::IllegalMove {
                        index: index + 1,
                        msg: format!("move `{other}` does not apply to the torus model"),
                    })
                }
            }
        }
        Ok(state)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (label, slope) in &self.slopes {
            out.push_str(&format!("{label}: {slope}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<TorusState> {
        let mut slopes = std::collections::BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = match raw.split_once('#') {
                Some((head, _)) => head,
                None => raw,
            }
            .trim();
            if s.is_empty() {
                continue;
            }
            let (label, slope) = s.split_once(':').ok_or_else(|| Error::Parse {
                line,
                msg: format!("expected `<label>: p/q`, got {s:?}"),
            })?;
            let label: u32 = label.trim().parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad label {label:?}"),
            })?;
            let slope: Slope = slope.trim().parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line, msg },
                e => e,
            })?;
            if slopes.insert(label, slope).is_some() {
                return Err(Error::Parse {
                    line,
                    msg: format!("label {label} listed twice"),
                });
            }
        }
        Ok(TorusState { slopes })
    }
}

pub(crate) fn all_sign_words(len: usize) -> Vec<Vec<Sign>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                Sign::ALL.iter().map(move |&s| {
                    let mut w2 = w.clone();
                    w2.push(s);
                    w2
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(intersection(&sl(1, 0), &sl(0, 1)), 1);
        assert_eq!(intersection(&sl(1, 0), &sl(1, 0)), 0);
        assert_eq!(intersection(&sl(2, 1), &sl(1, 1)), 1);
    }

    #[test]
    fn canonicalization() {
        assert_eq!(sl(-1, 2), sl(1, -2));
        assert_eq!(sl(0, -1), sl(0, 1));
        assert!(Slope::new(2, 4).is_err());
        assert!(Slope::new(0, 3).is_err());
    }

    #[test]
    fn slope_strings() {
        assert_eq!(sl(2, -1).to_string(), "2/-1");
        assert_eq!("1/0".parse::<Slope>().unwrap(), sl(1, 0));
        assert!("x/0".parse::<Slope>().is_err());
    }

    #[test]
    fn twist_examples() {
        // one of the two directions takes 0/1 to 1/1 along 1/0
        let t = twist_slope(&sl(1, 0), Sign::Minus, &sl(0, 1));
        assert_eq!(t, sl(1, 1));
        let t = twist_slope(&sl(1, 0), Sign::Plus, &sl(0, 1));
        assert_eq!(t, sl(1, -1));
        // a twist fixes its own slope
        assert_eq!(twist_slope(&sl(2, 1), Sign::Plus, &sl(2, 1)), sl(2, 1));
        // and preserves intersection with the twisting slope
        for dir in Sign::ALL {
            let r = twist_slope(&sl(1, 0), dir, &sl(1, 3));
            assert_eq!(
                intersection(&sl(1, 0), &r),
                intersection(&sl(1, 0), &sl(1, 3))
            );
        }
    }

    #[test]
    fn handle_swap_witness() {
        let word = find_handle_swap().expect("three-twist swap exists");
        assert_eq!(word.len(), 3);
        // first witness in search order: pattern 1-2-1, all directions +
        assert_eq!(
            word,
            vec![
                TwistMove {
                    label: 1,
                    dir: Sign::Plus
                },
                TwistMove {
                    label: 2,
                    dir: Sign::Plus
                },
                TwistMove {
                    label: 1,
                    dir: Sign::Plus
                },
            ]
        );
        // replay keeps the two tracked curves intersecting once throughout
        let mut st = HandlePair::standard();
        for mv in &word {
            st = st.apply(*mv).unwrap();
            assert_eq!(intersection(&st.first, &st.second), 1);
        }
        assert_eq!(st.first, sl(0, 1));
        assert_eq!(st.second, sl(1, 0));
    }

    #[test]
    fn no_short_swap() {
        assert!(no_swap_within(2));
    }

    #[test]
    fn torus_state_replay_swaps_labels() {
        let st = TorusState::standard_handle();
        let script = crate::script::MoveScript::parse("twist 1 +\ntwist 2 +\ntwist 1 +\n").unwrap();
        let out = st.replay(&script).unwrap();
        assert_eq!(out.slope(1).unwrap(), sl(0, 1));
        assert_eq!(out.slope(2).unwrap(), sl(1, 0));
        // round trip through the text format
        let reparsed = TorusState::parse(&out.to_text()).unwrap();
        assert_eq!(reparsed, out);
        // non-twist moves are rejected with their index
        let bad = crate::script::MoveScript::parse("twist 1 +\nrotate\n").unwrap();
        assert!(matches!(
            st.replay(&bad),
            Err(Error::IllegalMove { index: 2, .. })
        ));
    }

    #[test]
    fn s_move_enumeration() {
        assert_eq!(s_move_slope(&sl(1, 0), 1), vec![sl(0, 1), sl(1, 1)]);
        assert_eq!(s_move_slope(&sl(0, 1), 1), vec![sl(1, 0), sl(1, 1)]);
        for t in s_move_slope(&sl(2, 1), 3) {
            assert_eq!(intersection(&sl(2, 1), &t), 1);
        }
    }

    mod property_tests {
        use super::*;
        use crate::homology::{self, CurveClass};
        use proptest::prelude::*;

        fn slope() -> impl Strategy<Value = Slope> {
            (-6i64..=6, -6i64..=6).prop_filter_map("primitive", |(p, q)| Slope::new(p, q).ok())
        }

        fn embed(s: &Slope) -> CurveClass {
            CurveClass::new(vec![s.p(), s.q()]).unwrap()
        }

        proptest! {
            // the twist action is unimodular: it preserves intersections
            #[test]
            fn twist_preserves_intersections(a in slope(), x in slope(), y in slope(), dir in prop::sample::select(vec![Sign::Plus, Sign::Minus])) {
                let tx = twist_slope(&a, dir, &x);
                let ty = twist_slope(&a, dir, &y);
                prop_assert_eq!(intersection(&tx, &ty), intersection(&x, &y));
            }

            // twisting preserves primitivity (the canonical constructor
            // would reject a non-primitive pair)
            #[test]
            fn twist_preserves_primitivity(a in slope(), x in slope(), dir in prop::sample::select(vec![Sign::Plus, Sign::Minus])) {
                let t = twist_slope(&a, dir, &x);
                prop_assert!(Slope::new(t.p(), t.q()).is_ok());
            }

            // embedding a handle into a genus-1 lattice intertwines the two
            // twist actions
            #[test]
            fn twist_commutes_with_homology(a in slope(), x in slope(), dir in prop::sample::select(vec![Sign::Plus, Sign::Minus])) {
                let lhs = embed(&twist_slope(&a, dir, &x));
                let rhs = homology::twist(&embed(&a), dir, &embed(&x));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
