//! Simplicial complexes `Δ_L ⊆ F2^m` generated by a single subset, their
//! complements, the boolean function `φ(α|L)`, character sums and the
//! multi-facet generating function.
//!
//! Vectors of `F2^m` are encoded as integers with coordinate 1 in the least
//! significant bit.

use std::fmt;

use crate::algebra::BinaryVector;
use crate::{Error, Result};

/// Largest ambient size whose vectors fit the integer encoding.
pub const MAX_AMBIENT: usize = 63;

/// A subset of `[m] = {1, …, m}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetSpec {
    ambient: usize,
    mask: u64,
}

impl SubsetSpec {
    /// Builds a subset from 1-based member indices.
    pub fn new(ambient: usize, members: &[usize]) -> Result<Self> {
        check_ambient(ambient)?;
        let mut mask = 0u64;
        for &i in members {
            if i == 0 || i > ambient {
                return Err(Error::IndexOutOfRange { index: i, ambient });
            }
            mask |= 1 << (i - 1);
        }
        Ok(Self { ambient, mask })
    }

    pub fn from_mask(ambient: usize, mask: u64) -> Result<Self> {
        check_ambient(ambient)?;
        if mask >> ambient != 0 {
            return Err(Error::IndexOutOfRange {
                index: 64 - mask.leading_zeros() as usize,
                ambient,
            });
        }
        Ok(Self { ambient, mask })
    }

    pub fn empty(ambient: usize) -> Result<Self> {
        Self::from_mask(ambient, 0)
    }

    pub fn full(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(Self {
            ambient,
            mask: full_mask(ambient),
        })
    }

    /// Parses `"1,3,4"` or `"-"` (the empty set).
    pub fn parse(ambient: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "-" {
            return Self::empty(ambient);
        }
        let members = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::SubsetSyntax(text.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, &members)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, index: usize) -> bool {
        index >= 1 && index <= self.ambient && (self.mask >> (index - 1)) & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        (1..=self.ambient).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// Indicator vector, e.g. `(1, 0, 1)` for `{1,3}` in `[3]`.
    pub fn indicator(&self) -> BinaryVector {
        BinaryVector::from_mask(self.ambient, self.mask)
    }
}

impl fmt::Display for SubsetSpec {
    /// Subset syntax: `"1,3"` or `"-"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.members().iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for SubsetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}⊆[{}]", self.ambient)
    }
}

fn check_ambient(ambient: usize) -> Result<()> {
    if ambient > MAX_AMBIENT {
        return Err(Error::AmbientTooLarge {
            ambient,
            max: MAX_AMBIENT,
        });
    }
    Ok(())
}

fn full_mask(ambient: usize) -> u64 {
    if ambient == 64 {
        u64::MAX
    } else {
        (1u64 << ambient) - 1
    }
}

/// `Δ_L`, or `F2^m \ Δ_L` when `complemented`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexSpec {
    pub generator: SubsetSpec,
    pub complemented: bool,
}

impl ComplexSpec {
    pub fn plain(generator: SubsetSpec) -> Self {
        Self {
            generator,
            complemented: false,
        }
    }

    pub fn complement(generator: SubsetSpec) -> Self {
        Self {
            generator,
            complemented: true,
        }
    }

    pub fn ambient(&self) -> usize {
        self.generator.ambient
    }

    pub fn contains_mask(&self, v: u64) -> bool {
        let inside = v & !self.generator.mask == 0;
        inside != self.complemented
    }

    /// Members as integer encodings, strictly increasing.
    pub fn member_masks(&self) -> Vec<u64> {
        let gen = self.generator.mask;
        if self.complemented {
            (0..=full_mask(self.ambient()))
                .filter(|v| v & !gen != 0)
                .collect()
        } else {
            // Submasks of `gen` in increasing order.
            let mut out = Vec::with_capacity(1 << self.generator.size());
            let mut sub = 0u64;
            loop {
                out.push(sub);
                if sub == gen {
                    break;
                }
                sub = ((sub | !gen).wrapping_add(1)) & gen;
            }
            out
        }
    }
}

/// Maximal elements of a simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetFamily {
    ambient: usize,
    facets: Vec<SubsetSpec>,
}

impl FacetFamily {
    /// Cap on the number of facets; inclusion-exclusion visits every subset.
    pub const MAX_FACETS: usize = 24;

    pub fn new(ambient: usize, facets: Vec<SubsetSpec>) -> Result<Self> {
        check_ambient(ambient)?;
        if facets.is_empty() {
            return Err(Error::InvalidArgument("facet family is empty".into()));
        }
        if facets.len() > Self::MAX_FACETS {
            return Err(Error::InvalidArgument(format!(
                "{} facets exceed the cap of {}",
                facets.len(),
                Self::MAX_FACETS
            )));
        }
        for f in &facets {
            if f.ambient != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: f.ambient,
                });
            }
        }
        for (i, a) in facets.iter().enumerate() {
            for (j, b) in facets.iter().enumerate() {
                if i != j && a.is_subset_of(b) {
                    return Err(Error::NotMaximal {
                        inner: a.to_string(),
                        outer: b.to_string(),
                    });
                }
            }
        }
        Ok(Self { ambient, facets })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[SubsetSpec] {
        &self.facets
    }

    /// Union of `Δ_F` over the facets, in increasing encoding order.
    pub fn member_masks(&self) -> Vec<u64> {
        (0..=full_mask(self.ambient))
            .filter(|v| self.facets.iter().any(|f| v & !f.mask == 0))
            .collect()
    }
}

pub fn enumerate_members(c: &ComplexSpec) -> Vec<BinaryVector> {
    let m = c.ambient();
    c.member_masks()
        .into_iter()
        .map(|v| BinaryVector::from_mask(m, v))
        .collect()
}

/// `φ(α|L) = Π_{i∈L}(1 − α_i)`: true iff `Supp(α) ∩ L = ∅`; `φ(α|∅) = 1`.
pub fn phi(alpha: &BinaryVector, l: &SubsetSpec) -> bool {
    phi_mask(alpha.to_mask(), l.mask)
}

pub(crate) fn phi_mask(alpha: u64, l: u64) -> bool {
    alpha & l == 0
}

/// `Σ_{t∈c}(−1)^{α·t}` by the closed forms `2^{|L|}φ(α|L)` and
/// `2^m δ_{0,α} − 2^{|L|}φ(α|L)`.
pub fn char_sum(c: &ComplexSpec, alpha: &BinaryVector) -> Result<i64> {
    if alpha.len() != c.ambient() {
        return Err(Error::LengthMismatch {
            left: c.ambient(),
            right: alpha.len(),
        });
    }
    Ok(char_sum_mask(c, alpha.to_mask()))
}

pub(crate) fn char_sum_mask(c: &ComplexSpec, alpha: u64) -> i64 {
    let plain = if phi_mask(alpha, c.generator.mask) {
        1i64 << c.generator.size()
    } else {
        0
    };
    if c.complemented {
        let full = if alpha == 0 { 1i64 << c.ambient() } else { 0 };
        full - plain
    } else {
        plain
    }
}

pub fn complex_size(c: &ComplexSpec) -> u64 {
    let plain = 1u64 << c.generator.size();
    if c.complemented {
        (1u64 << c.ambient()) - plain
    } else {
        plain
    }
}

/// Evaluates `H_Δ(y) = Σ_{∅≠S⊆F}(−1)^{|S|+1} Π_{i∈∩S}(1 + y_i)` for the
/// complex with facet family `F`. `point[i]` is `y_{i+1}`.
pub fn generating_function_eval(f: &FacetFamily, point: &[i64]) -> Result<i64> {
    if point.len() != f.ambient {
        return Err(Error::LengthMismatch {
            left: f.ambient,
            right: point.len(),
        });
    }
    let count = f.facets.len();
    let mut total = 0i64;
    for sel in 1u32..(1 << count) {
        let inter = f
            .facets
            .iter()
            .enumerate()
            .filter(|(i, _)| (sel >> i) & 1 == 1)
            .fold(full_mask(f.ambient), |acc, (_, s)| acc & s.mask);
        let term: i64 = (0..f.ambient)
            .filter(|i| (inter >> i) & 1 == 1)
            .map(|i| 1 + point[i])
            .product();
        if sel.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(m: usize, members: &[usize]) -> SubsetSpec {
        SubsetSpec::new(m, members).unwrap()
    }

    fn strings(c: &ComplexSpec) -> Vec<String> {
        enumerate_members(c).iter().map(|v| v.to_string()).collect()
    }

    fn dot_sign(alpha: u64, t: u64) -> i64 {
        if (alpha & t).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn subset_syntax() {
        let s = SubsetSpec::parse(4, "1,3,4").unwrap();
        assert_eq!(s.members(), vec![1, 3, 4]);
        assert_eq!(s.to_string(), "1,3,4");
        assert_eq!(SubsetSpec::parse(3, "-").unwrap().size(), 0);
        assert_eq!(SubsetSpec::parse(3, "-").unwrap().to_string(), "-");
        assert!(matches!(
            SubsetSpec::parse(3, "1,4"),
            Err(Error::IndexOutOfRange {
                index: 4,
                ambient: 3
            })
        ));
        assert!(matches!(
            SubsetSpec::parse(3, "0"),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            SubsetSpec::parse(3, "a"),
            Err(Error::SubsetSyntax(_))
        ));
        assert!(matches!(
            SubsetSpec::parse(3, ""),
            Err(Error::SubsetSyntax(_))
        ));
        assert!(SubsetSpec::new(64, &[]).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            strings(&ComplexSpec::plain(subset(2, &[1, 2]))),
            ["00", "10", "01", "11"]
        );
        assert_eq!(
            strings(&ComplexSpec::complement(subset(2, &[1]))),
            ["01", "11"]
        );
        assert_eq!(strings(&ComplexSpec::plain(subset(3, &[]))), ["000"]);
    }

    #[test]
    fn phi_examples() {
        let zero = BinaryVector::zeros(3);
        assert!(phi(&zero, &subset(3, &[1, 2, 3])));
        let any: BinaryVector = "111".parse().unwrap();
        assert!(phi(&any, &subset(3, &[])));
        let alpha: BinaryVector = "100".parse().unwrap();
        assert!(phi(&alpha, &subset(3, &[2, 3])));
        assert!(!phi(&alpha, &subset(3, &[1])));
    }

    #[test]
    fn char_sum_examples() {
        let a00: BinaryVector = "00".parse().unwrap();
        assert_eq!(
            char_sum(&ComplexSpec::plain(subset(2, &[1, 2])), &a00).unwrap(),
            4
        );
        let a01: BinaryVector = "01".parse().unwrap();
        assert_eq!(
            char_sum(&ComplexSpec::complement(subset(2, &[1])), &a01).unwrap(),
            -2
        );
        let a100: BinaryVector = "100".parse().unwrap();
        assert_eq!(
            char_sum(&ComplexSpec::complement(subset(3, &[])), &a100).unwrap(),
            -1
        );
        assert!(char_sum(&ComplexSpec::plain(subset(2, &[])), &a100).is_err());
    }

    #[test]
    fn complex_size_examples() {
        assert_eq!(complex_size(&ComplexSpec::plain(subset(4, &[1, 2]))), 4);
        assert_eq!(
            complex_size(&ComplexSpec::complement(subset(4, &[1, 2]))),
            12
        );
        assert_eq!(
            complex_size(&ComplexSpec::complement(subset(3, &[1, 2, 3]))),
            0
        );
    }

    #[test]
    fn members_are_sorted_distinct_and_downward_closed() {
        for m in 0..=5usize {
            for l in 0..(1u64 << m) {
                let gen = SubsetSpec::from_mask(m, l).unwrap();
                for c in [ComplexSpec::plain(gen), ComplexSpec::complement(gen)] {
                    let members = c.member_masks();
                    assert_eq!(members.len() as u64, complex_size(&c));
                    assert!(members.windows(2).all(|w| w[0] < w[1]));
                    assert!(members.iter().all(|&v| c.contains_mask(v)));
                    if !c.complemented {
                        for &v in &members {
                            // every w with Supp(w) ⊆ Supp(v)
                            let mut w = v;
                            loop {
                                assert!(c.contains_mask(w));
                                if w == 0 {
                                    break;
                                }
                                w = (w - 1) & v;
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generating_function_examples() {
        for m in 0..=4usize {
            for l in 0..(1u64 << m) {
                let f = FacetFamily::new(m, vec![SubsetSpec::from_mask(m, l).unwrap()]).unwrap();
                assert_eq!(
                    generating_function_eval(&f, &vec![1; m]).unwrap(),
                    1 << l.count_ones()
                );
            }
        }
        let f = FacetFamily::new(2, vec![subset(2, &[1]), subset(2, &[2])]).unwrap();
        assert_eq!(generating_function_eval(&f, &[1, 1]).unwrap(), 3);
        assert_eq!(f.member_masks(), vec![0b00, 0b01, 0b10]);
        let f = FacetFamily::new(3, vec![subset(3, &[])]).unwrap();
        assert_eq!(generating_function_eval(&f, &[5, -1, 7]).unwrap(), 1);
    }

    #[test]
    fn facet_family_rejects_non_maximal() {
        let err = FacetFamily::new(3, vec![subset(3, &[1]), subset(3, &[1, 2])]).unwrap_err();
        assert!(matches!(err, Error::NotMaximal { .. }));
        assert!(FacetFamily::new(3, vec![subset(3, &[1]), subset(3, &[1])]).is_err());
        assert!(FacetFamily::new(3, vec![]).is_err());
        assert!(FacetFamily::new(3, vec![subset(2, &[1])]).is_err());
    }

    #[test]
    fn generating_function_matches_character_sums() {
        // all families of at most two maximal facets, m <= 4, points in {±1}^m
        for m in 0..=4usize {
            let subsets: Vec<u64> = (0..(1u64 << m)).collect();
            let mut families: Vec<Vec<u64>> = subsets.iter().map(|&s| vec![s]).collect();
            for &a in &subsets {
                for &b in &subsets {
                    if a < b && a & !b != 0 && b & !a != 0 {
                        families.push(vec![a, b]);
                    }
                }
            }
            for fam in families {
                let facets = fam
                    .iter()
                    .map(|&s| SubsetSpec::from_mask(m, s).unwrap())
                    .collect();
                let f = FacetFamily::new(m, facets).unwrap();
                let members = f.member_masks();
                for alpha in 0..(1u64 << m) {
                    let point: Vec<i64> = (0..m)
                        .map(|i| if (alpha >> i) & 1 == 1 { -1 } else { 1 })
                        .collect();
                    let direct: i64 = members.iter().map(|&t| dot_sign(alpha, t)).sum();
                    assert_eq!(generating_function_eval(&f, &point).unwrap(), direct);
                }
            }
        }
    }
}
