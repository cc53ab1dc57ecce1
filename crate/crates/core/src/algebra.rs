//! Arithmetic in `R2 = F2[x]/<x^3 - x>`, the F2-valued trace, coordinates
//! relative to the basis `{e1 = 1+u^2, e2 = u^2, e3 = u+u^2}`, and bit-packed
//! F2 vectors and matrices.

use std::fmt;
use std::ops::{Add, BitXor, BitXorAssign, Mul};
use std::str::FromStr;

use crate::{Error, Result};

/// An element `a + b·u + c·u²` of `R2`, packed as `a | b << 1 | c << 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct R2Element(u8);

const fn poly_mul(x: u8, y: u8) -> u8 {
    // Schoolbook product in F2[u], degrees 0..=4.
    let mut prod = 0u8;
    let mut i = 0;
    while i < 3 {
        if (x >> i) & 1 == 1 {
            prod ^= y << i;
        }
        i += 1;
    }
    // u^3 = u, u^4 = u^2
    let mut reduced = prod & 0b111;
    if prod & 0b1000 != 0 {
        reduced ^= 0b010;
    }
    if prod & 0b1_0000 != 0 {
        reduced ^= 0b100;
    }
    reduced
}

const MUL_TABLE: [[u8; 8]; 8] = {
    let mut table = [[0u8; 8]; 8];
    let mut x = 0;
    while x < 8 {
        let mut y = 0;
        while y < 8 {
            table[x][y] = poly_mul(x as u8, y as u8);
            y += 1;
        }
        x += 1;
    }
    table
};

impl R2Element {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(0b001);
    pub const U: Self = Self(0b010);
    pub const U2: Self = Self(0b100);
    /// `e1 = 1 + u²`
    pub const E1: Self = Self(0b101);
    /// `e2 = u²`
    pub const E2: Self = Self(0b100);
    /// `e3 = u + u²`
    pub const E3: Self = Self(0b110);
    pub const BASIS: [Self; 3] = [Self::E1, Self::E2, Self::E3];

    pub const fn new(a: bool, b: bool, c: bool) -> Self {
        Self(a as u8 | (b as u8) << 1 | (c as u8) << 2)
    }

    /// Builds an element from its 3-bit packed encoding; higher bits are ignored.
    pub const fn from_bits(bits: u8) -> Self {
        Self(bits & 0b111)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn a(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn b(self) -> bool {
        (self.0 >> 1) & 1 == 1
    }

    pub const fn c(self) -> bool {
        (self.0 >> 2) & 1 == 1
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// All 8 elements in increasing encoding order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..8u8).map(Self)
    }
}

impl fmt::Debug for R2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for R2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<&str> = [(self.a(), "1"), (self.b(), "u"), (self.c(), "u^2")]
            .into_iter()
            .filter_map(|(on, s)| on.then_some(s))
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl Add for R2Element {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        r2_add(self, rhs)
    }
}

impl Mul for R2Element {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        r2_mul(self, rhs)
    }
}

pub fn r2_add(x: R2Element, y: R2Element) -> R2Element {
    R2Element(x.0 ^ y.0)
}

pub fn r2_mul(x: R2Element, y: R2Element) -> R2Element {
    R2Element(MUL_TABLE[x.0 as usize][y.0 as usize])
}

/// The F2-valued trace `a + b·u + c·u² ↦ c`.
pub fn trace(x: R2Element) -> bool {
    x.c()
}

/// Coordinates `(g1, g2, g3)` with `x = g1·e1 + g2·e2 + g3·e3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct BasisCoordinates {
    pub g1: bool,
    pub g2: bool,
    pub g3: bool,
}

impl BasisCoordinates {
    pub const fn new(g1: bool, g2: bool, g3: bool) -> Self {
        Self { g1, g2, g3 }
    }
}

pub fn to_basis_coords(x: R2Element) -> BasisCoordinates {
    // a = g1, b = g3, c = g1 + g2 + g3
    let g1 = x.a();
    let g3 = x.b();
    let g2 = x.c() ^ g1 ^ g3;
    BasisCoordinates { g1, g2, g3 }
}

pub fn from_basis_coords(g: BasisCoordinates) -> R2Element {
    [g.g1, g.g2, g.g3]
        .into_iter()
        .zip(R2Element::BASIS)
        .filter(|(on, _)| *on)
        .fold(R2Element::ZERO, |acc, (_, e)| acc + e)
}

/// `(τ(x·e1), τ(x·e2), τ(x·e3))`, computed from the ring products.
pub fn trace_triple(x: R2Element) -> (bool, bool, bool) {
    (
        trace(x * R2Element::E1),
        trace(x * R2Element::E2),
        trace(x * R2Element::E3),
    )
}

/// The same triple via coordinates: `(g1, g2 + g3, g2)`.
pub fn trace_triple_from_coords(g: BasisCoordinates) -> (bool, bool, bool) {
    (g.g1, g.g2 ^ g.g3, g.g2)
}

/// A vector in `R2^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct R2Vector(pub Vec<R2Element>);

impl R2Vector {
    pub fn zeros(len: usize) -> Self {
        Self(vec![R2Element::ZERO; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[R2Element] {
        &self.0
    }

    /// Packs entry `i` into bits `3i..3i+3`.
    pub fn encoding(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, x)| acc | (x.bits() as u64) << (3 * i))
    }

    pub fn from_encoding(len: usize, code: u64) -> Self {
        Self(
            (0..len)
                .map(|i| R2Element::from_bits((code >> (3 * i)) as u8))
                .collect(),
        )
    }
}

impl fmt::Display for R2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `Σ_{i=1..m} x_i·y_i` in `R2`.
pub fn r2_dot(x: &R2Vector, y: &R2Vector) -> Result<R2Element> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.0
        .iter()
        .zip(&y.0)
        .fold(R2Element::ZERO, |acc, (&a, &b)| acc + a * b))
}

/// A bit-packed vector over F2. Bit `i` lives in word `i / 64`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Vector of length `len <= 64` whose coordinate `i` is bit `i` of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64, "mask vectors hold at most 64 coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == 64 {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            v.words[0] = mask & keep;
        }
        v
    }

    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= 64, "vector too long for a u64 mask");
        self.words.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// `Supp(self) ⊆ Supp(other)`.
    pub fn is_covered_by(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn concat(parts: &[&BinaryVector]) -> Self {
        let len = parts.iter().map(|p| p.len).sum();
        let mut out = Self::zeros(len);
        let mut offset = 0;
        for p in parts {
            for i in 0..p.len {
                if p.get(i) {
                    out.set(offset + i, true);
                }
            }
            offset += p.len;
        }
        out
    }

    pub fn slice(&self, start: usize, len: usize) -> Self {
        let mut out = Self::zeros(len);
        for i in 0..len {
            out.set(i, self.get(start + i));
        }
        out
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    /// Parses a string of `0`/`1` characters, coordinate 1 first.
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidArgument(format!("not a bit string: {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(&bits))
    }
}

impl BitXorAssign<&BinaryVector> for BinaryVector {
    fn bitxor_assign(&mut self, rhs: &BinaryVector) {
        assert_eq!(self.len, rhs.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &BinaryVector {
    type Output = BinaryVector;
    fn bitxor(self, rhs: &BinaryVector) -> BinaryVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

/// A dense F2 matrix stored as bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BinaryVector>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BinaryVector::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BinaryVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Parses rows given as bit strings; all rows must have equal length.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<BinaryVector>>>()?;
        let cols = rows.first().map_or(0, BinaryVector::len);
        Self::from_rows(cols, rows)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn rows(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BinaryVector {
        &self.rows[i]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        self.rows[r].set(c, bit);
    }

    pub fn column(&self, c: usize) -> BinaryVector {
        let bits: Vec<bool> = self.rows.iter().map(|r| r.get(c)).collect();
        BinaryVector::from_bits(&bits)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// Vertical concatenation `[self; other]`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self {
            cols: self.cols,
            rows,
        })
    }

    /// Reduced row echelon form; pivots are taken left to right and the
    /// pivot row is the topmost remaining row with a one in that column.
    /// Returns the reduced matrix and its pivot columns.
    pub fn row_reduce(&self) -> (Self, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    *row ^= &pivot;
                }
            }
            pivots.push(col);
            next += 1;
        }
        (
            Self {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    /// The nonzero rows of the reduced echelon form: a basis of the row space.
    pub fn row_basis(&self) -> Vec<BinaryVector> {
        let (reduced, pivots) = self.row_reduce();
        reduced.rows.into_iter().take(pivots.len()).collect()
    }
}

/// Rank over F2 via Gaussian elimination.
pub fn f2_rank(m: &BinaryMatrix) -> usize {
    m.row_reduce().1.len()
}

/// `M·Mᵀ = 0` over F2: every pair of rows, including a row with itself, has
/// an even number of common ones.
pub fn f2_gram_is_zero(m: &BinaryMatrix) -> bool {
    let rows = m.rows();
    (0..rows.len()).all(|i| (i..rows.len()).all(|j| !rows[i].dot(&rows[j])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> R2Element {
        // "abc" coefficient string
        let b: Vec<bool> = s.chars().map(|c| c == '1').collect();
        R2Element::new(b[0], b[1], b[2])
    }

    #[test]
    fn addition_examples() {
        assert_eq!(R2Element::U + R2Element::U, R2Element::ZERO);
        assert_eq!(el("110") + el("011"), el("101"));
        for x in R2Element::all() {
            assert_eq!(R2Element::ZERO + x, x);
        }
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(R2Element::U * R2Element::U2, R2Element::U);
        assert_eq!(R2Element::U2 * R2Element::U2, R2Element::U2);
        // (1+u)(1+u^2) = 1 + u + u^2 + u^3 = 1 + u^2
        assert_eq!(el("110") * el("101"), el("101"));
    }

    #[test]
    fn multiplication_matches_unreduced_polynomials() {
        // Reduce the full product modulo x^3 - x by repeated substitution.
        for x in 0..8u32 {
            for y in 0..8u32 {
                let mut p = 0u32;
                for i in 0..3 {
                    if (x >> i) & 1 == 1 {
                        p ^= y << i;
                    }
                }
                for deg in (3..5).rev() {
                    if (p >> deg) & 1 == 1 {
                        p ^= 1 << deg;
                        p ^= 1 << (deg - 2);
                    }
                }
                let got = R2Element::from_bits(x as u8) * R2Element::from_bits(y as u8);
                assert_eq!(got.bits() as u32, p);
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in R2Element::all() {
            assert_eq!(x * R2Element::ONE, x);
            for y in R2Element::all() {
                assert_eq!(x * y, y * x);
                assert_eq!(x + y, y + x);
                for z in R2Element::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        assert!(trace(R2Element::U2));
        assert!(!trace(R2Element::ZERO));
        assert!(!trace(el("110")));
    }

    #[test]
    fn trace_is_linear_and_nondegenerate_on_ideals() {
        for x in R2Element::all() {
            for y in R2Element::all() {
                assert_eq!(trace(x + y), trace(x) ^ trace(y));
            }
            if !x.is_zero() {
                assert!(R2Element::all().any(|y| trace(x * y)));
            }
        }
        assert!(R2Element::all().any(trace));
    }

    #[test]
    fn basis_coordinate_examples() {
        assert_eq!(
            to_basis_coords(R2Element::U2),
            BasisCoordinates::new(false, true, false)
        );
        assert_eq!(
            to_basis_coords(R2Element::U),
            BasisCoordinates::new(false, true, true)
        );
        assert_eq!(
            to_basis_coords(R2Element::ONE),
            BasisCoordinates::new(true, true, false)
        );
    }

    #[test]
    fn basis_round_trip() {
        for x in R2Element::all() {
            let g = to_basis_coords(x);
            assert_eq!(from_basis_coords(g), x);
            assert_eq!(x.a(), g.g1);
            assert_eq!(x.b(), g.g3);
            assert_eq!(x.c(), g.g1 ^ g.g2 ^ g.g3);
        }
    }

    #[test]
    fn trace_triple_routes_agree() {
        assert_eq!(trace_triple(R2Element::E1), (true, false, false));
        assert_eq!(trace_triple(R2Element::U), (false, false, true));
        assert_eq!(trace_triple(R2Element::ZERO), (false, false, false));
        for x in R2Element::all() {
            assert_eq!(
                trace_triple(x),
                trace_triple_from_coords(to_basis_coords(x))
            );
        }
    }

    #[test]
    fn dot_examples() {
        let x = R2Vector(vec![R2Element::U]);
        let y = R2Vector(vec![R2Element::U2]);
        assert_eq!(r2_dot(&x, &y).unwrap(), R2Element::U);
        assert_eq!(r2_dot(&x, &R2Vector::zeros(1)).unwrap(), R2Element::ZERO);
        let x = R2Vector(vec![el("110"), R2Element::U2]);
        let y = R2Vector(vec![R2Element::U2, R2Element::U2]);
        assert_eq!(r2_dot(&x, &y).unwrap(), R2Element::U);
        assert!(matches!(
            r2_dot(&x, &R2Vector::zeros(3)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(f2_rank(&BinaryMatrix::identity(3)), 3);
        assert_eq!(f2_rank(&BinaryMatrix::zeros(3, 4)), 0);
        let m = BinaryMatrix::parse_rows(&["1100", "0110", "1010"]).unwrap();
        assert_eq!(f2_rank(&m), 2);
        let (reduced, pivots) = m.row_reduce();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(reduced.row(0).to_string(), "1010");
        assert_eq!(reduced.row(1).to_string(), "0110");
        assert!(reduced.row(2).is_zero());
    }

    #[test]
    fn gram_examples() {
        assert!(f2_gram_is_zero(
            &BinaryMatrix::parse_rows(&["1111"]).unwrap()
        ));
        assert!(!f2_gram_is_zero(
            &BinaryMatrix::parse_rows(&["111"]).unwrap()
        ));
        assert!(f2_gram_is_zero(
            &BinaryMatrix::parse_rows(&["1100", "0011"]).unwrap()
        ));
        assert!(!f2_gram_is_zero(
            &BinaryMatrix::parse_rows(&["1100", "0110"]).unwrap()
        ));
    }

    #[test]
    fn shape_errors() {
        let a = BinaryMatrix::zeros(2, 3);
        let b = BinaryMatrix::zeros(2, 4);
        assert!(a.add(&b).is_err());
        assert!(a.stack(&b).is_err());
        assert!(BinaryMatrix::parse_rows(&["10", "101"]).is_err());
    }

    #[test]
    fn vector_display_and_masks() {
        let v: BinaryVector = "10110".parse().unwrap();
        assert_eq!(v.weight(), 3);
        assert_eq!(v.to_mask(), 0b01101);
        assert_eq!(BinaryVector::from_mask(5, 0b01101), v);
        assert_eq!(v.support(), vec![0, 2, 3]);
        let w: BinaryVector = "10100".parse().unwrap();
        assert!(w.is_covered_by(&v));
        assert!(!v.is_covered_by(&w));
        assert_eq!(BinaryVector::concat(&[&w, &v]).to_string(), "1010010110");
        assert_eq!(v.slice(1, 3).to_string(), "011");
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = BinaryMatrix> {
            (1usize..8, 1usize..70).prop_flat_map(|(r, c)| {
                prop::collection::vec(prop::collection::vec(any::<bool>(), c), r).prop_map(
                    move |rows| {
                        BinaryMatrix::from_rows(
                            c,
                            rows.iter().map(|b| BinaryVector::from_bits(b)).collect(),
                        )
                        .unwrap()
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn rank_invariants(m in matrix()) {
                let r = f2_rank(&m);
                prop_assert!(r <= m.num_rows().min(m.num_cols()));
                let (reduced, _) = m.row_reduce();
                prop_assert_eq!(f2_rank(&reduced), r);
                prop_assert_eq!(f2_rank(&m.stack(&m).unwrap()), r);
            }

            #[test]
            fn rank_counts_row_space(m in matrix()) {
                // log2 of the number of distinct row combinations
                let mut seen = std::collections::BTreeSet::new();
                for sel in 0u32..(1 << m.num_rows()) {
                    let mut acc = BinaryVector::zeros(m.num_cols());
                    for (i, row) in m.rows().iter().enumerate() {
                        if (sel >> i) & 1 == 1 {
                            acc ^= row;
                        }
                    }
                    seen.insert(acc);
                }
                prop_assert_eq!(seen.len(), 1usize << f2_rank(&m));
            }
        }
    }
}
