//! Integer and mod-2 homology of the closed surface: the rank-`2g`
//! symplectic lattice, curve classes up to sign, Dehn twists as
//! transvections, and Lagrangian planes of pants decompositions.
//!
//! Basis order is `e_1, f_1, ..., e_g, f_g` with `<e_i, f_i> = 1` and all
//! other basis pairings zero. Curves are unoriented, so a class is stored as
//! the lexicographically positive representative of `{v, -v}`; every
//! operation here is compatible with that quotient.

use crate::{Error, Result, Sign};
use serde::{Deserialize, Serialize};

/// The standard symplectic lattice `H_1` of a closed genus-`g` surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticLattice {
    genus: u32,
}

impl SymplecticLattice {
    pub fn new(genus: u32) -> Self {
        SymplecticLattice { genus }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus as usize
    }

    /// Basis class `e_i` (1-indexed).
    pub fn e(&self, i: u32) -> CurveClass {
        assert!(i >= 1 && i <= self.genus);
        let mut v = vec![0; self.rank()];
        v[2 * (i as usize - 1)] = 1;
        CurveClass::new(v).unwrap()
    }

    /// Basis class `f_i` (1-indexed).
    pub fn f(&self, i: u32) -> CurveClass {
        assert!(i >= 1 && i <= self.genus);
        let mut v = vec![0; self.rank()];
        v[2 * (i as usize - 1) + 1] = 1;
        CurveClass::new(v).unwrap()
    }

    /// The pairing matrix `J` in the chosen basis: block diagonal with
    /// `[[0, 1], [-1, 0]]` blocks.
    pub fn pairing_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0; n]; n];
        for i in 0..self.genus as usize {
            m[2 * i][2 * i + 1] = 1;
            m[2 * i + 1][2 * i] = -1;
        }
        m
    }
}

/// The symplectic pairing of two raw coordinate vectors.
pub(crate) fn pair_raw(x: &[i64], y: &[i64]) -> i64 {
    debug_assert_eq!(x.len(), y.len());
    debug_assert_eq!(x.len() % 2, 0);
    let mut s = 0;
    for i in (0..x.len()).step_by(2) {
        s += x[i] * y[i + 1] - x[i + 1] * y[i];
    }
    s
}

pub(crate) fn canonical_sign(v: &[i64]) -> Vec<i64> {
    for &a in v {
        if a > 0 {
            return v.to_vec();
        }
        if a < 0 {
            return v.iter().map(|a| -a).collect();
        }
    }
    v.to_vec()
}

/// The homology class of an unoriented curve: an integer vector up to sign.
///
/// The zero vector represents a homologically trivial (separating) curve and
/// can only be built through [`CurveClass::trivial`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveClass {
    coords: Vec<i64>,
}

impl CurveClass {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().all(|&a| a == 0) {
            return Err(Error::TrivialClass);
        }
        Ok(CurveClass {
            coords: canonical_sign(&coords),
        })
    }

    /// The class of a separating curve.
    pub fn trivial(genus: u32) -> Self {
        CurveClass {
            coords: vec![0; 2 * genus as usize],
        }
    }

    pub(crate) fn from_raw(coords: Vec<i64>) -> Self {
        CurveClass {
            coords: canonical_sign(&coords),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

impl std::fmt::Display for CurveClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A mod-2 homology class; well defined for unoriented curves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Z2Class {
    bits: Vec<bool>,
}

impl Z2Class {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

/// `x^T J y` on stored representatives. The sign depends on the chosen
/// representatives; the absolute value does not.
pub fn pairing(x: &CurveClass, y: &CurveClass) -> Result<i64> {
    if x.rank() != y.rank() {
        return Err(Error::DimensionMismatch {
            left: x.rank(),
            right: y.rank(),
        });
    }
    Ok(pair_raw(x.coords(), y.coords()))
}

/// The transvection `x + dir * <x, c> * c`, i.e. the action of a Dehn twist
/// along `c` on homology, reduced to the canonical sign representative.
pub fn twist(along: &CurveClass, dir: Sign, x: &CurveClass) -> CurveClass {
    let k = dir.as_i64() * pair_raw(x.coords(), along.coords());
    let v: Vec<i64> = x
        .coords()
        .iter()
        .zip(along.coords())
        .map(|(a, c)| a + k * c)
        .collect();
    CurveClass::from_raw(v)
}

/// The class of the curve produced by flipping inside a pair of pants whose
/// other two boundary classes are `b1` and `b2`: `±(s1*b1 + s2*b2)`.
///
/// The result may be trivial (the flip can produce a separating curve).
pub fn flip_class(b1: &CurveClass, b2: &CurveClass, s1: Sign, s2: Sign) -> CurveClass {
    let v: Vec<i64> = b1
        .coords()
        .iter()
        .zip(b2.coords())
        .map(|(a, b)| s1.as_i64() * a + s2.as_i64() * b)
        .collect();
    CurveClass::from_raw(v)
}

/// Coordinate-wise reduction mod 2; independent of the sign representative.
pub fn z2_reduce(x: &CurveClass) -> Z2Class {
    Z2Class {
        bits: x.coords().iter().map(|a| a.rem_euclid(2) == 1).collect(),
    }
}

/// A rank-`g` isotropic sublattice spanned by curve classes of a pants
/// decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianPlane {
    generators: Vec<CurveClass>,
}

impl LagrangianPlane {
    /// Builds a plane from exactly `g` generators, rejecting rank-deficient
    /// or non-isotropic generator lists.
    pub fn new(lattice: &SymplecticLattice, generators: Vec<CurveClass>) -> Result<Self> {
        if generators.len() != lattice.genus() as usize {
            return Err(Error::WrongGeneratorCount {
                got: generators.len(),
                genus: lattice.genus(),
            });
        }
        for g in &generators {
            if g.rank() != lattice.rank() {
                return Err(Error::DimensionMismatch {
                    left: g.rank(),
                    right: lattice.rank(),
                });
            }
        }
        let rows: Vec<Vec<i64>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        if rational_rank(&rows) != generators.len() {
            return Err(Error::DependentGenerators);
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if pairing(&generators[i], &generators[j])? != 0 {
                    return Err(Error::NotIsotropic);
                }
            }
        }
        Ok(LagrangianPlane { generators })
    }

    pub fn generators(&self) -> &[CurveClass] {
        &self.generators
    }

    /// Integer row span equality, via Hermite normal forms.
    pub fn same_span(&self, other: &LagrangianPlane) -> bool {
        let a: Vec<Vec<i64>> = self
            .generators
            .iter()
            .map(|g| g.coords().to_vec())
            .collect();
        let b: Vec<Vec<i64>> = other
            .generators
            .iter()
            .map(|g| g.coords().to_vec())
            .collect();
        hermite_normal_form(&a) == hermite_normal_form(&b)
    }
}

/// Two Lagrangian planes are in general position when they intersect in 0 and
/// jointly span the whole lattice; for rank-`g` isotropic planes both hold
/// exactly when the stacked `2g x 2g` generator matrix has determinant `±1`.
pub fn general_position(a: &LagrangianPlane, b: &LagrangianPlane) -> Result<bool> {
    let n = a.generators.len() + b.generators.len();
    let mut rows = Vec::with_capacity(n);
    for g in a.generators.iter().chain(&b.generators) {
        if g.rank() != n {
            return Err(Error::DimensionMismatch {
                left: g.rank(),
                right: n,
            });
        }
        rows.push(g.coords().to_vec());
    }
    Ok(integer_det(&rows).map(|d| d.abs() == 1).unwrap_or(false))
}

/// Rank over the rationals by fraction-free elimination.
#[allow(clippy::needless_range_loop)] // rows are read and written across indices
pub(crate) fn rational_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&a| a as i128).collect())
        .collect();
    let (nr, nc) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut col = 0;
    while rank < nr && col < nc {
        let Some(p) = (rank..nr).find(|&r| m[r][col] != 0) else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nr {
            let (a, b) = (m[rank][col], m[r][col]);
            if b != 0 {
                for c in col..nc {
                    m[r][c] = m[r][c] * a - m[rank][c] * b;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Exact integer determinant of a square matrix (Bareiss). `None` if the
/// matrix is not square.
pub(crate) fn integer_det(rows: &[Vec<i64>]) -> Option<i128> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&a| a as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Some(0);
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Some(sign * m[n - 1][n - 1])
}

/// Row-style Hermite normal form (for integer row-span comparison).
#[allow(clippy::needless_range_loop)] // rows are read and written across indices
pub(crate) fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&a| a as i128).collect())
        .collect();
    if m.is_empty() {
        return m;
    }
    let nc = m[0].len();
    let mut row = 0;
    for col in 0..nc {
        // gcd out the column below `row`
        loop {
            let mut piv: Option<usize> = None;
            for r in row..m.len() {
                if m[r][col] != 0 && piv.is_none_or(|p| m[r][col].abs() < m[p][col].abs()) {
                    piv = Some(r);
                }
            }
            let Some(p) = piv else { break };
            m.swap(row, p);
            let mut done = true;
            for r in row + 1..m.len() {
                let q = m[r][col] / m[row][col];
                if q != 0 {
                    for c in 0..nc {
                        m[r][c] -= q * m[row][c];
                    }
                }
                if m[r][col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[row][col] != 0 {
            if m[row][col] < 0 {
                for c in 0..nc {
                    m[row][c] = -m[row][c];
                }
            }
            // reduce entries above the pivot
            for r in 0..row {
                let q = m[r][col].div_euclid(m[row][col]);
                if q != 0 {
                    for c in 0..nc {
                        m[r][c] -= q * m[row][c];
                    }
                }
            }
            row += 1;
            if row == m.len() {
                break;
            }
        }
    }
    m.truncate(row);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat2() -> SymplecticLattice {
        SymplecticLattice::new(2)
    }

    #[test]
    fn standard_pairings() {
        let l = lat2();
        assert_eq!(pairing(&l.e(1), &l.f(1)).unwrap().abs(), 1);
        assert_eq!(pairing(&l.e(1), &l.e(2)).unwrap(), 0);
        // (e1 + e2, f1 - f2) pairs to 1*1 + 1*(-1) = 0
        let x = CurveClass::new(vec![1, 0, 1, 0]).unwrap();
        let y = CurveClass::new(vec![0, 1, 0, -1]).unwrap();
        assert_eq!(pairing(&x, &y).unwrap(), 0);
    }

    #[test]
    fn pairing_dimension_mismatch() {
        let a = CurveClass::new(vec![1, 0]).unwrap();
        let b = CurveClass::new(vec![1, 0, 0, 0]).unwrap();
        assert!(matches!(
            pairing(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn twist_examples() {
        let l = lat2();
        // twist(e1, +, f1) = f1 - e1, canonical representative e1 - f1
        let t = twist(&l.e(1), Sign::Plus, &l.f(1));
        assert_eq!(t.coords(), &[1, -1, 0, 0]);
        // a twist fixes its own curve
        let c = CurveClass::new(vec![1, 2, 0, 3]).unwrap();
        assert_eq!(twist(&c, Sign::Plus, &c), c);
        assert_eq!(twist(&c, Sign::Minus, &c), c);
        // and fixes anything disjoint from it
        assert_eq!(twist(&l.e(1), Sign::Plus, &l.e(2)), l.e(2));
    }

    #[test]
    fn twist_fixes_trivial() {
        let z = CurveClass::trivial(2);
        let c = lat2().e(1);
        assert_eq!(twist(&c, Sign::Plus, &z), z);
    }

    #[test]
    fn flip_class_examples() {
        let l = lat2();
        let s = flip_class(&l.e(1), &l.e(2), Sign::Plus, Sign::Plus);
        assert_eq!(s.coords(), &[1, 0, 1, 0]);
        let d = flip_class(&l.e(1), &l.e(2), Sign::Plus, Sign::Minus);
        assert_eq!(d.coords(), &[1, 0, -1, 0]);
        // a flip may produce a separating curve
        let z = flip_class(&l.e(1), &l.e(1), Sign::Plus, Sign::Minus);
        assert!(z.is_trivial());
        // mod 2 the sign choice is invisible
        assert_eq!(z2_reduce(&s), z2_reduce(&d));
    }

    #[test]
    fn z2_examples() {
        let l = lat2();
        assert_eq!(z2_reduce(&l.e(1)).bits(), &[true, false, false, false]);
        let x = CurveClass::new(vec![-1, 0, 0, 0]).unwrap();
        assert_eq!(z2_reduce(&x).bits(), &[true, false, false, false]);
        let y = CurveClass::new(vec![1, 2, 0, 0]).unwrap();
        assert_eq!(z2_reduce(&y).bits(), &[true, false, false, false]);
    }

    #[test]
    fn zero_class_needs_flag() {
        assert_eq!(CurveClass::new(vec![0, 0]), Err(Error::TrivialClass));
        assert!(CurveClass::trivial(1).is_trivial());
    }

    #[test]
    fn general_position_examples() {
        let l = lat2();
        let ea = LagrangianPlane::new(&l, vec![l.e(1), l.e(2)]).unwrap();
        let fb = LagrangianPlane::new(&l, vec![l.f(1), l.f(2)]).unwrap();
        assert!(general_position(&ea, &fb).unwrap());
        let shared = LagrangianPlane::new(&l, vec![l.e(1), l.f(2)]).unwrap();
        assert!(!general_position(&ea, &shared).unwrap());
    }

    #[test]
    fn lagrangian_ctor_rejects_bad_input() {
        let l = lat2();
        let dep =
            LagrangianPlane::new(&l, vec![l.e(1), CurveClass::new(vec![2, 0, 0, 0]).unwrap()]);
        assert_eq!(dep, Err(Error::DependentGenerators));
        let crossing = LagrangianPlane::new(&l, vec![l.e(1), l.f(1)]);
        assert_eq!(crossing, Err(Error::NotIsotropic));
        let short = LagrangianPlane::new(&l, vec![l.e(1)]);
        assert!(matches!(short, Err(Error::WrongGeneratorCount { .. })));
    }

    #[test]
    fn span_preserved_by_twist_along_member() {
        let l = lat2();
        let p = LagrangianPlane::new(&l, vec![l.e(1), l.e(2)]).unwrap();
        let c = CurveClass::new(vec![1, 0, -1, 0]).unwrap(); // e1 - e2, inside the plane
        let gens: Vec<CurveClass> = p
            .generators()
            .iter()
            .map(|g| twist(&c, Sign::Plus, g))
            .collect();
        let q = LagrangianPlane::new(&l, gens).unwrap();
        assert!(p.same_span(&q));
    }

    #[test]
    fn det_and_hnf_helpers() {
        assert_eq!(integer_det(&[vec![2, 0], vec![0, 3]]), Some(6));
        assert_eq!(integer_det(&[vec![1, 2], vec![2, 4]]), Some(0));
        let a = hermite_normal_form(&[vec![1, 0], vec![0, 1]]);
        let b = hermite_normal_form(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(a, b);
    }

    mod property_tests {
        use super::*;
        use proptest::prelude::*;

        fn coords() -> impl Strategy<Value = Vec<i64>> {
            prop::collection::vec(-4i64..=4, 4)
                .prop_filter("nonzero", |v| v.iter().any(|&a| a != 0))
        }

        fn class() -> impl Strategy<Value = CurveClass> {
            coords().prop_map(|v| CurveClass::new(v).unwrap())
        }

        proptest! {
            // a transvection preserves the symplectic form
            #[test]
            fn twist_preserves_form(c in class(), x in class(), y in class(), dir in prop::sample::select(vec![Sign::Plus, Sign::Minus])) {
                let tx = twist(&c, dir, &x);
                let ty = twist(&c, dir, &y);
                prop_assert_eq!(
                    pairing(&tx, &ty).unwrap().abs(),
                    pairing(&x, &y).unwrap().abs()
                );
            }

            // twisting back undoes the twist
            #[test]
            fn twist_inverse(c in class(), x in class(), dir in prop::sample::select(vec![Sign::Plus, Sign::Minus])) {
                let back = twist(&c, dir.flip(), &twist(&c, dir, &x));
                prop_assert_eq!(back, x);
            }

            // the mod-2 class of any flip result equals the mod-2 class of
            // the replaced boundary, whenever all three are mod-2 nontrivial
            #[test]
            fn z2_flip_invariance(b1 in class(), b2 in class(), s1 in prop::sample::select(vec![Sign::Plus, Sign::Minus]), s2 in prop::sample::select(vec![Sign::Plus, Sign::Minus])) {
                let third: Vec<i64> = b1.coords().iter().zip(b2.coords()).map(|(a, b)| a + b).collect();
                let odd = |v: &[i64]| v.iter().any(|a| a.rem_euclid(2) == 1);
                prop_assume!(odd(b1.coords()) && odd(b2.coords()) && odd(&third));
                let third = CurveClass::new(third).unwrap();
                prop_assert_eq!(z2_reduce(&flip_class(&b1, &b2, s1, s2)), z2_reduce(&third));
            }

            // twisting along a member of a Lagrangian plane fixes its span
            #[test]
            fn twist_fixes_plane_span(k1 in -2i64..=2, k2 in -2i64..=2, dir in prop::sample::select(vec![Sign::Plus, Sign::Minus])) {
                prop_assume!((k1, k2) != (0, 0));
                let l = SymplecticLattice::new(2);
                let plane = LagrangianPlane::new(&l, vec![l.e(1), l.e(2)]).unwrap();
                let member: Vec<i64> = vec![k1, 0, k2, 0];
                let c = CurveClass::new(member).unwrap();
                let gens: Vec<CurveClass> =
                    plane.generators().iter().map(|g| twist(&c, dir, g)).collect();
                let image = LagrangianPlane::new(&l, gens).unwrap();
                prop_assert!(plane.same_span(&image));
            }
        }
    }
}
