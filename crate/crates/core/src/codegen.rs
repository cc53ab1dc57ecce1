//! Defining sets `D = e1·D1 + e2·D2 + e3·D3 ⊆ R2^m`, their subfield images
//! `D⁽²⁾ = {(d1, d2+d3, d2)}`, the binary subfield code they define, and exact
//! weight distributions by enumeration of all `2^{3m}` messages.
//!
//! A message is a triple `(α, β, γ) ∈ (F2^m)³`, encoded as the integer
//! `α | β << m | γ << 2m`; the codeword coordinate at `(d1, δ, d2) ∈ D⁽²⁾` is
//! `α·d1 + β·δ + γ·d2`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::algebra::{
    from_basis_coords, to_basis_coords, trace_triple, BasisCoordinates, BinaryMatrix, BinaryVector,
    R2Vector,
};
use crate::simplicial::{char_sum_mask, complex_size, ComplexSpec};
use crate::{Error, Result};

/// Largest ambient size accepted for enumeration (`2^15` messages).
pub const MAX_ENUM_AMBIENT: usize = 5;

/// Largest ambient size for which message triples fit a `u64`.
pub const MAX_AMBIENT: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DefiningSetSpec {
    ambient: usize,
    pub d1: ComplexSpec,
    pub d2: ComplexSpec,
    pub d3: ComplexSpec,
    /// Use `R2^m \ (e1·D1 + e2·D2 + e3·D3)` instead.
    pub global_complement: bool,
}

impl DefiningSetSpec {
    pub fn new(
        d1: ComplexSpec,
        d2: ComplexSpec,
        d3: ComplexSpec,
        global_complement: bool,
    ) -> Result<Self> {
        let ambient = d1.ambient();
        for d in [&d2, &d3] {
            if d.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: d.ambient(),
                });
            }
        }
        if ambient > MAX_AMBIENT {
            return Err(Error::AmbientTooLarge {
                ambient,
                max: MAX_AMBIENT,
            });
        }
        if global_complement && (d1.complemented || d2.complemented || d3.complemented) {
            return Err(Error::ComplementedWithGlobal);
        }
        Ok(Self {
            ambient,
            d1,
            d2,
            d3,
            global_complement,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// `|D|`.
    pub fn size(&self) -> u64 {
        let product = complex_size(&self.d1) * complex_size(&self.d2) * complex_size(&self.d3);
        if self.global_complement {
            (1u64 << (3 * self.ambient)) - product
        } else {
            product
        }
    }

    fn contains_components(&self, d1: u64, d2: u64, d3: u64) -> bool {
        let inner =
            self.d1.contains_mask(d1) && self.d2.contains_mask(d2) && self.d3.contains_mask(d3);
        inner != self.global_complement
    }
}

/// `e1·d1 + e2·d2 + e3·d3` for component vectors given as masks.
pub fn combine_components(ambient: usize, d1: u64, d2: u64, d3: u64) -> R2Vector {
    R2Vector(
        (0..ambient)
            .map(|i| {
                from_basis_coords(BasisCoordinates::new(
                    (d1 >> i) & 1 == 1,
                    (d2 >> i) & 1 == 1,
                    (d3 >> i) & 1 == 1,
                ))
            })
            .collect(),
    )
}

/// Inverse of [`combine_components`].
pub fn split_components(x: &R2Vector) -> (u64, u64, u64) {
    x.entries()
        .iter()
        .enumerate()
        .fold((0, 0, 0), |(a, b, c), (i, &e)| {
            let g = to_basis_coords(e);
            (
                a | (g.g1 as u64) << i,
                b | (g.g2 as u64) << i,
                c | (g.g3 as u64) << i,
            )
        })
}

fn check_enumerable(ambient: usize) -> Result<()> {
    if ambient > MAX_ENUM_AMBIENT {
        return Err(Error::AmbientTooLarge {
            ambient,
            max: MAX_ENUM_AMBIENT,
        });
    }
    Ok(())
}

/// Enumerates `D`: D1 outermost, then D2, then D3, each in increasing
/// encoding order. With a global complement, `R2^m \ D` in increasing
/// [`R2Vector::encoding`] order.
pub fn build_defining_set(spec: &DefiningSetSpec) -> Result<Vec<R2Vector>> {
    let m = spec.ambient;
    check_enumerable(m)?;
    if spec.global_complement {
        return Ok((0..1u64 << (3 * m))
            .map(|code| R2Vector::from_encoding(m, code))
            .filter(|x| {
                let (a, b, c) = split_components(x);
                spec.contains_components(a, b, c)
            })
            .collect());
    }
    let (m1, m2, m3) = (
        spec.d1.member_masks(),
        spec.d2.member_masks(),
        spec.d3.member_masks(),
    );
    let mut out = Vec::with_capacity(m1.len() * m2.len() * m3.len());
    let mut seen = HashSet::with_capacity(out.capacity());
    for &a in &m1 {
        for &b in &m2 {
            for &c in &m3 {
                let x = combine_components(m, a, b, c);
                if !seen.insert(x.encoding()) {
                    return Err(Error::NotInjective(x.to_string()));
                }
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// `D⁽²⁾` as an ordered list of vectors in `F2^{3m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldDefiningSet {
    ambient: usize,
    points: Vec<BinaryVector>,
}

impl SubfieldDefiningSet {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn points(&self) -> &[BinaryVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Applies `x ↦ (τ(x·e1), τ(x·e2), τ(x·e3))` coordinatewise, placing the three
/// blocks side by side.
pub fn subfield_defining_set(d: &[R2Vector]) -> Result<SubfieldDefiningSet> {
    let ambient = d.first().map_or(0, R2Vector::len);
    let mut points = Vec::with_capacity(d.len());
    for x in d {
        if x.len() != ambient {
            return Err(Error::LengthMismatch {
                left: ambient,
                right: x.len(),
            });
        }
        let mut p = BinaryVector::zeros(3 * ambient);
        for (i, &e) in x.entries().iter().enumerate() {
            let (t1, t2, t3) = trace_triple(e);
            p.set(i, t1);
            p.set(ambient + i, t2);
            p.set(2 * ambient + i, t3);
        }
        points.push(p);
    }
    Ok(SubfieldDefiningSet { ambient, points })
}

/// The `m × |D|` generator matrix over `R2` whose columns are the elements of `D`.
pub fn defining_set_generator(ambient: usize, d: &[R2Vector]) -> Vec<R2Vector> {
    (0..ambient)
        .map(|i| R2Vector(d.iter().map(|x| x.entries()[i]).collect()))
        .collect()
}

/// Writes a matrix over `R2` as `e1·G1 + e2·G2 + e3·G3` with binary `Gi`.
pub fn split_r2_matrix(rows: &[R2Vector]) -> Result<(BinaryMatrix, BinaryMatrix, BinaryMatrix)> {
    let cols = rows.first().map_or(0, R2Vector::len);
    let mut g = [
        BinaryMatrix::zeros(rows.len(), cols),
        BinaryMatrix::zeros(rows.len(), cols),
        BinaryMatrix::zeros(rows.len(), cols),
    ];
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::LengthMismatch {
                left: cols,
                right: row.len(),
            });
        }
        for (c, &x) in row.entries().iter().enumerate() {
            let coords = to_basis_coords(x);
            g[0].set(r, c, coords.g1);
            g[1].set(r, c, coords.g2);
            g[2].set(r, c, coords.g3);
        }
    }
    let [g1, g2, g3] = g;
    Ok((g1, g2, g3))
}

/// `[G1; G2 + G3; G2]`.
pub fn generator_matrix_subfield(
    g1: &BinaryMatrix,
    g2: &BinaryMatrix,
    g3: &BinaryMatrix,
) -> Result<BinaryMatrix> {
    let middle = g2.add(g3).map_err(|_| Error::ShapeMismatch {
        left: g2.shape(),
        right: g3.shape(),
    })?;
    g1.stack(&middle)?.stack(g2)
}

/// The codeword `(α·d1 + β·δ + γ·d2)_{(d1, δ, d2) ∈ D⁽²⁾}`, one column at a time.
pub fn codeword(
    alpha: &BinaryVector,
    beta: &BinaryVector,
    gamma: &BinaryVector,
    d2: &SubfieldDefiningSet,
) -> Result<BinaryVector> {
    let m = d2.ambient;
    for v in [alpha, beta, gamma] {
        if v.len() != m {
            return Err(Error::LengthMismatch {
                left: m,
                right: v.len(),
            });
        }
    }
    let message = BinaryVector::concat(&[alpha, beta, gamma]);
    let mut word = BinaryVector::zeros(d2.len());
    for (j, p) in d2.points.iter().enumerate() {
        word.set(j, message.dot(p));
    }
    Ok(word)
}

/// Exact map from Hamming weight to number of codewords.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    n: usize,
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    /// Zero counts are dropped.
    pub fn new(n: usize, counts: impl IntoIterator<Item = (usize, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in counts {
            if c > 0 {
                *map.entry(w).or_insert(0) += c;
            }
        }
        Self { n, counts: map }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `log2(total)` when the total is a power of two.
    pub fn dimension(&self) -> Option<u32> {
        let t = self.total();
        t.is_power_of_two().then(|| t.trailing_zeros())
    }

    /// `(weight, count)` pairs, ascending by weight.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&w, &c)| (w, c))
    }

    pub fn nonzero_weights(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.keys().copied().filter(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.nonzero_weights().last()
    }
}

/// Smallest positive weight with a positive count.
pub fn min_distance(dist: &WeightDistribution) -> Result<usize> {
    dist.nonzero_weights().next().ok_or(Error::TrivialCode)
}

/// `[n, k, d]` and the distribution of a binary code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSummary {
    pub n: usize,
    pub k: u32,
    pub d: usize,
    pub dist: WeightDistribution,
}

/// A constructed subfield code: `D`, `D⁽²⁾`, and the `3m × n` generator whose
/// columns are the points of `D⁽²⁾`.
#[derive(Clone, Debug)]
pub struct SubfieldCode {
    spec: DefiningSetSpec,
    defining_set: Vec<R2Vector>,
    subfield: SubfieldDefiningSet,
    generator: BinaryMatrix,
}

impl SubfieldCode {
    pub fn build(spec: &DefiningSetSpec) -> Result<Self> {
        let defining_set = build_defining_set(spec)?;
        let subfield = subfield_defining_set(&defining_set)?;
        let m = spec.ambient;
        let n = subfield.len();
        let mut rows = vec![BinaryVector::zeros(n); 3 * m];
        for (j, p) in subfield.points.iter().enumerate() {
            for (r, row) in rows.iter_mut().enumerate() {
                if p.get(r) {
                    row.set(j, true);
                }
            }
        }
        let generator = BinaryMatrix::from_rows(n, rows)?;
        Ok(Self {
            spec: *spec,
            defining_set,
            subfield,
            generator,
        })
    }

    pub fn spec(&self) -> &DefiningSetSpec {
        &self.spec
    }

    pub fn defining_set(&self) -> &[R2Vector] {
        &self.defining_set
    }

    pub fn subfield_set(&self) -> &SubfieldDefiningSet {
        &self.subfield
    }

    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.subfield.len()
    }

    /// Weight of the codeword of every message, indexed by message encoding.
    ///
    /// The message space is split into blocks of consecutive encodings; each
    /// block is walked in Gray-code order, so one generator row is added per
    /// step. Blocks are independent and may run on any number of workers.
    pub fn message_weights(&self) -> Vec<u32> {
        let bits = 3 * self.spec.ambient;
        let total = 1usize << bits;
        let low = bits.min(10);
        let block = 1usize << low;
        let rows: Vec<&[u64]> = self.generator.rows().iter().map(|r| r.words()).collect();
        let width = rows.first().map_or(0, |r| r.len());
        let mut out = vec![0u32; total];
        out.par_chunks_mut(block)
            .enumerate()
            .for_each(|(b, chunk)| {
                let prefix = b << low;
                let mut acc = vec![0u64; width];
                for (r, row) in rows.iter().enumerate() {
                    if (prefix >> r) & 1 == 1 {
                        acc.iter_mut().zip(row.iter()).for_each(|(a, w)| *a ^= w);
                    }
                }
                for i in 0..block {
                    let gray = i ^ (i >> 1);
                    chunk[gray] = acc.iter().map(|w| w.count_ones()).sum();
                    let next = i + 1;
                    if next < block {
                        let flip = next.trailing_zeros() as usize;
                        acc.iter_mut()
                            .zip(rows[flip].iter())
                            .for_each(|(a, w)| *a ^= w);
                    }
                }
            });
        out
    }

    /// Collapses message weights to the code: every count is divided by the
    /// kernel size, `|ker| = #{messages of weight 0}`.
    pub fn summary_from_weights(&self, weights: &[u32]) -> Result<CodeSummary> {
        let n = self.length();
        if n == 0 {
            return Err(Error::Degenerate("empty defining set (n = 0)".into()));
        }
        let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
        for &w in weights {
            *hist.entry(w as usize).or_insert(0) += 1;
        }
        let kernel = hist[&0];
        debug_assert!(kernel.is_power_of_two());
        debug_assert!(hist.values().all(|c| c % kernel == 0));
        let k = (weights.len() as u64 / kernel).trailing_zeros();
        let dist = WeightDistribution::new(n, hist.into_iter().map(|(w, c)| (w, c / kernel)));
        let d =
            min_distance(&dist).map_err(|_| Error::Degenerate("trivial code (k = 0)".into()))?;
        Ok(CodeSummary { n, k, d, dist })
    }

    pub fn summary(&self) -> Result<CodeSummary> {
        self.summary_from_weights(&self.message_weights())
    }

    /// Every distinct codeword, enumerated from a row-reduced basis of the
    /// generator. Fails when the code has more than `cap` codewords.
    pub fn codewords(&self, cap: u64) -> Result<Vec<BinaryVector>> {
        span(&self.generator.row_basis(), self.length(), cap)
    }
}

/// All `2^r` combinations of `basis` rows (assumed independent).
pub fn span(basis: &[BinaryVector], len: usize, cap: u64) -> Result<Vec<BinaryVector>> {
    let size = 1u64.checked_shl(basis.len() as u32).unwrap_or(u64::MAX);
    if size > cap {
        return Err(Error::CodeTooLarge { size, cap });
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut acc = BinaryVector::zeros(len);
    out.push(acc.clone());
    for i in 1..size {
        acc ^= &basis[i.trailing_zeros() as usize];
        out.push(acc.clone());
    }
    Ok(out)
}

pub fn weight_distribution_bruteforce(spec: &DefiningSetSpec) -> Result<CodeSummary> {
    SubfieldCode::build(spec)?.summary()
}

/// The weight of the codeword of `(α, β, γ)` from character sums:
/// `|D|/2 − ½·S1(α)·S2(β+γ)·S3(β)`; with a global complement the full-space
/// sum `2^{3m}·δ` replaces the product and the product is subtracted from it.
pub fn weight_via_charsum(
    alpha: &BinaryVector,
    beta: &BinaryVector,
    gamma: &BinaryVector,
    spec: &DefiningSetSpec,
) -> Result<u64> {
    let m = spec.ambient;
    for v in [alpha, beta, gamma] {
        if v.len() != m {
            return Err(Error::LengthMismatch {
                left: m,
                right: v.len(),
            });
        }
    }
    Ok(weight_via_charsum_masks(
        alpha.to_mask(),
        beta.to_mask(),
        gamma.to_mask(),
        spec,
    ))
}

pub(crate) fn weight_via_charsum_masks(
    alpha: u64,
    beta: u64,
    gamma: u64,
    spec: &DefiningSetSpec,
) -> u64 {
    let product = char_sum_mask(&spec.d1, alpha) as i128
        * char_sum_mask(&spec.d2, beta ^ gamma) as i128
        * char_sum_mask(&spec.d3, beta) as i128;
    let n = spec.size() as i128;
    let twice = if spec.global_complement {
        let full = if alpha == 0 && beta == 0 && gamma == 0 {
            1i128 << (3 * spec.ambient)
        } else {
            0
        };
        n - (full - product)
    } else {
        n - product
    };
    debug_assert!(twice >= 0 && twice % 2 == 0);
    (twice / 2) as u64
}

/// Splits a message encoding into `(α, β, γ)` masks.
pub fn split_message(ambient: usize, message: u64) -> (u64, u64, u64) {
    let low = (1u64 << ambient) - 1;
    (
        message & low,
        (message >> ambient) & low,
        (message >> (2 * ambient)) & low,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{f2_rank, R2Element};
    use crate::simplicial::SubsetSpec;

    fn plain(m: usize, s: &[usize]) -> ComplexSpec {
        ComplexSpec::plain(SubsetSpec::new(m, s).unwrap())
    }

    fn comp(m: usize, s: &[usize]) -> ComplexSpec {
        ComplexSpec::complement(SubsetSpec::new(m, s).unwrap())
    }

    fn v(s: &str) -> BinaryVector {
        s.parse().unwrap()
    }

    #[test]
    fn defining_set_examples() {
        let spec =
            DefiningSetSpec::new(plain(1, &[1]), plain(1, &[]), plain(1, &[]), false).unwrap();
        let d = build_defining_set(&spec).unwrap();
        assert_eq!(
            d,
            vec![
                R2Vector(vec![R2Element::ZERO]),
                R2Vector(vec![R2Element::E1])
            ]
        );

        let spec = DefiningSetSpec::new(plain(1, &[]), plain(1, &[]), plain(1, &[]), true).unwrap();
        let d = build_defining_set(&spec).unwrap();
        assert_eq!(d.len(), 7);
        assert!(d.iter().all(|x| !x.entries()[0].is_zero()));
        assert_eq!(spec.size(), 7);
    }

    #[test]
    fn defining_set_sizes_match_products() {
        let m = 2;
        for l in 0..4u64 {
            for mm in 0..4u64 {
                for n in 0..4u64 {
                    for pattern in 0..16u8 {
                        let mk = |mask, c: bool| {
                            let s = SubsetSpec::from_mask(m, mask).unwrap();
                            if c {
                                ComplexSpec::complement(s)
                            } else {
                                ComplexSpec::plain(s)
                            }
                        };
                        let global = pattern & 8 != 0;
                        let res = DefiningSetSpec::new(
                            mk(l, pattern & 1 != 0),
                            mk(mm, pattern & 2 != 0),
                            mk(n, pattern & 4 != 0),
                            global,
                        );
                        if global && pattern & 7 != 0 {
                            assert_eq!(res.unwrap_err(), Error::ComplementedWithGlobal);
                            continue;
                        }
                        let spec = res.unwrap();
                        let d = build_defining_set(&spec).unwrap();
                        assert_eq!(d.len() as u64, spec.size());
                        let distinct: HashSet<_> = d.iter().map(R2Vector::encoding).collect();
                        assert_eq!(distinct.len(), d.len());
                        let sub = subfield_defining_set(&d).unwrap();
                        let distinct: HashSet<_> = sub.points().iter().cloned().collect();
                        assert_eq!(distinct.len(), d.len());
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let spec =
            DefiningSetSpec::new(plain(6, &[]), plain(6, &[]), plain(6, &[]), false).unwrap();
        assert!(matches!(
            build_defining_set(&spec),
            Err(Error::AmbientTooLarge { ambient: 6, .. })
        ));
        assert!(DefiningSetSpec::new(plain(2, &[]), plain(3, &[]), plain(2, &[]), false).is_err());
    }

    #[test]
    fn subfield_examples() {
        let s = subfield_defining_set(&[R2Vector(vec![R2Element::E1])]).unwrap();
        assert_eq!(s.points()[0].to_string(), "100");
        let s = subfield_defining_set(&[R2Vector(vec![R2Element::U])]).unwrap();
        assert_eq!(s.points()[0].to_string(), "001");
        let s = subfield_defining_set(&[R2Vector::zeros(2)]).unwrap();
        assert_eq!(s.points()[0], BinaryVector::zeros(6));
        assert!(subfield_defining_set(&[R2Vector::zeros(2), R2Vector::zeros(1)]).is_err());
    }

    #[test]
    fn generator_examples() {
        let (g1, g2, g3) = split_r2_matrix(&[R2Vector(vec![R2Element::U])]).unwrap();
        assert_eq!(
            (g1.get(0, 0), g2.get(0, 0), g3.get(0, 0)),
            (false, true, true)
        );
        let g = generator_matrix_subfield(&g1, &g2, &g3).unwrap();
        assert_eq!(g.column(0).to_string(), "001");

        let id: Vec<R2Vector> = (0..2)
            .map(|i| {
                let mut r = R2Vector::zeros(2);
                r.0[i] = R2Element::E1;
                r
            })
            .collect();
        let (g1, g2, g3) = split_r2_matrix(&id).unwrap();
        let g = generator_matrix_subfield(&g1, &g2, &g3).unwrap();
        assert_eq!(g.column(0).to_string(), "100000");
        assert_eq!(g.column(1).to_string(), "010000");

        let z = BinaryMatrix::zeros(2, 3);
        let g = generator_matrix_subfield(&z, &z, &z).unwrap();
        assert_eq!(g.shape(), (6, 3));
        assert!(g.rows().iter().all(BinaryVector::is_zero));
        assert!(generator_matrix_subfield(&z, &BinaryMatrix::zeros(2, 4), &z).is_err());
    }

    #[test]
    fn codeword_examples() {
        let spec =
            DefiningSetSpec::new(plain(3, &[1]), plain(3, &[2]), plain(3, &[3]), false).unwrap();
        let code = SubfieldCode::build(&spec).unwrap();
        let zero = BinaryVector::zeros(3);
        let w = codeword(&zero, &zero, &zero, code.subfield_set()).unwrap();
        assert!(w.is_zero());
        let w = codeword(&v("100"), &zero, &zero, code.subfield_set()).unwrap();
        assert_eq!(w.weight(), 4);
        assert!(codeword(&v("10"), &zero, &zero, code.subfield_set()).is_err());
    }

    #[test]
    fn codeword_is_linear() {
        let spec =
            DefiningSetSpec::new(comp(2, &[1]), plain(2, &[1, 2]), comp(2, &[]), false).unwrap();
        let code = SubfieldCode::build(&spec).unwrap();
        let d2 = code.subfield_set();
        let word = |msg: u64| {
            let (a, b, c) = split_message(2, msg);
            codeword(
                &BinaryVector::from_mask(2, a),
                &BinaryVector::from_mask(2, b),
                &BinaryVector::from_mask(2, c),
                d2,
            )
            .unwrap()
        };
        for x in 0..64u64 {
            for y in 0..64u64 {
                assert_eq!(&word(x) ^ &word(y), word(x ^ y));
            }
        }
    }

    #[test]
    fn bruteforce_examples() {
        let spec =
            DefiningSetSpec::new(plain(3, &[1]), plain(3, &[2]), plain(3, &[3]), false).unwrap();
        let s = weight_distribution_bruteforce(&spec).unwrap();
        assert_eq!((s.n, s.k, s.d), (8, 3, 4));
        assert_eq!(s.dist, WeightDistribution::new(8, [(0, 1), (4, 7)]));

        let spec =
            DefiningSetSpec::new(comp(2, &[1]), plain(2, &[]), plain(2, &[]), false).unwrap();
        let s = weight_distribution_bruteforce(&spec).unwrap();
        assert_eq!((s.n, s.k), (2, 2));
        assert_eq!(s.dist, WeightDistribution::new(2, [(0, 1), (1, 2), (2, 1)]));

        let spec = DefiningSetSpec::new(comp(2, &[]), comp(2, &[]), comp(2, &[]), false).unwrap();
        let s = weight_distribution_bruteforce(&spec).unwrap();
        assert_eq!((s.n, s.k, s.d), (27, 6, 12));
    }

    #[test]
    fn bruteforce_degenerate_inputs() {
        let spec =
            DefiningSetSpec::new(comp(2, &[1, 2]), plain(2, &[]), plain(2, &[]), false).unwrap();
        assert!(matches!(
            weight_distribution_bruteforce(&spec),
            Err(Error::Degenerate(_))
        ));
        let spec =
            DefiningSetSpec::new(plain(2, &[]), plain(2, &[]), plain(2, &[]), false).unwrap();
        assert!(matches!(
            weight_distribution_bruteforce(&spec),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(
            min_distance(&WeightDistribution::new(8, [(0, 1), (4, 7)])).unwrap(),
            4
        );
        assert_eq!(
            min_distance(&WeightDistribution::new(2, [(0, 1), (1, 2), (2, 1)])).unwrap(),
            1
        );
        assert_eq!(
            min_distance(&WeightDistribution::new(2, [(0, 1)])),
            Err(Error::TrivialCode)
        );
    }

    #[test]
    fn charsum_examples() {
        let spec =
            DefiningSetSpec::new(plain(3, &[1]), plain(3, &[2]), plain(3, &[3]), false).unwrap();
        let zero = BinaryVector::zeros(3);
        assert_eq!(weight_via_charsum(&zero, &zero, &zero, &spec).unwrap(), 0);
        assert_eq!(
            weight_via_charsum(&v("100"), &zero, &zero, &spec).unwrap(),
            4
        );

        let spec = DefiningSetSpec::new(plain(2, &[1, 2]), plain(2, &[1, 2]), plain(2, &[]), true)
            .unwrap();
        for msg in 1..64u64 {
            let (a, b, c) = split_message(2, msg);
            let w = weight_via_charsum_masks(a, b, c, &spec);
            assert!(w == 24 || w == 32, "weight {w}");
        }
    }

    #[test]
    fn message_weights_match_codewords_and_charsums() {
        for pattern in 0..9u8 {
            let m = 2;
            let mk = |s: &[usize], c: bool| if c { comp(m, s) } else { plain(m, s) };
            let global = pattern == 8;
            let spec = DefiningSetSpec::new(
                mk(&[1], !global && pattern & 1 != 0),
                mk(&[2], !global && pattern & 2 != 0),
                mk(&[], !global && pattern & 4 != 0),
                global,
            )
            .unwrap();
            let code = SubfieldCode::build(&spec).unwrap();
            let weights = code.message_weights();
            for (msg, &w) in weights.iter().enumerate() {
                let (a, b, c) = split_message(m, msg as u64);
                let (a, b, c) = (
                    BinaryVector::from_mask(m, a),
                    BinaryVector::from_mask(m, b),
                    BinaryVector::from_mask(m, c),
                );
                let word = codeword(&a, &b, &c, code.subfield_set()).unwrap();
                assert_eq!(word.weight() as u32, w);
                assert_eq!(weight_via_charsum(&a, &b, &c, &spec).unwrap(), w as u64);
            }
            let s = code.summary_from_weights(&weights).unwrap();
            assert_eq!(s.k as usize, f2_rank(code.generator()));
            assert_eq!(s.dist.total(), 1 << s.k);
        }
    }

    #[test]
    fn generator_routes_agree() {
        let spec =
            DefiningSetSpec::new(comp(3, &[2]), plain(3, &[1, 3]), comp(3, &[3]), false).unwrap();
        let code = SubfieldCode::build(&spec).unwrap();
        let g = defining_set_generator(3, code.defining_set());
        let (g1, g2, g3) = split_r2_matrix(&g).unwrap();
        assert_eq!(
            &generator_matrix_subfield(&g1, &g2, &g3).unwrap(),
            code.generator()
        );
    }

    #[test]
    fn span_respects_cap() {
        let basis = vec![v("100"), v("010")];
        assert_eq!(span(&basis, 3, 4).unwrap().len(), 4);
        assert!(matches!(
            span(&basis, 3, 3),
            Err(Error::CodeTooLarge { size: 4, cap: 3 })
        ));
    }
}
