//! Closed-form predictions for the nine defining-set families, the Griesmer
//! bound, and minimality and self-orthogonality tests.
//!
//! Families 1-8 differ in which of `D1 = Δ_L`, `D2 = Δ_M`, `D3 = Δ_N` are
//! replaced by their complements; family 9 is the complement in `R2^m` of the
//! family-1 defining set.
//!
//! Predicted weights are carried as *twice* the weight so that the factors
//! `2^{-1}` appearing in the tables stay in integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::BinaryVector;
use crate::codegen::{DefiningSetSpec, WeightDistribution};
use crate::simplicial::{ComplexSpec, SubsetSpec};
use crate::{Error, Result};

/// Cap on code size for [`exact_minimality`].
pub const MINIMALITY_CAP: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId(u8);

impl FamilyId {
    pub fn new(value: u8) -> Result<Self> {
        if (1..=9).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::InvalidFamily(value))
        }
    }

    pub fn all() -> impl Iterator<Item = Self> {
        (1..=9).map(Self)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// `(L complemented, M complemented, N complemented, global complement)`.
    pub fn pattern(self) -> (bool, bool, bool, bool) {
        match self.0 {
            1 => (false, false, false, false),
            2 => (true, false, false, false),
            3 => (false, true, false, false),
            4 => (false, false, true, false),
            5 => (true, true, false, false),
            6 => (true, false, true, false),
            7 => (false, true, true, false),
            8 => (true, true, true, false),
            9 => (false, false, false, true),
            _ => unreachable!("family id validated on construction"),
        }
    }

    pub fn from_pattern(l: bool, m: bool, n: bool, global: bool) -> Result<Self> {
        if global && (l || m || n) {
            return Err(Error::ComplementedWithGlobal);
        }
        Ok(FamilyId::all()
            .find(|f| f.pattern() == (l, m, n, global))
            .expect("every pattern maps to a family"))
    }

    pub fn defining_set(
        self,
        l: SubsetSpec,
        m: SubsetSpec,
        n: SubsetSpec,
    ) -> Result<DefiningSetSpec> {
        let (cl, cm, cn, global) = self.pattern();
        let mk = |s, c| {
            if c {
                ComplexSpec::complement(s)
            } else {
                ComplexSpec::plain(s)
            }
        };
        DefiningSetSpec::new(mk(l, cl), mk(m, cm), mk(n, cn), global)
    }

    /// Families whose printed statement claims the Griesmer bound is met.
    pub fn claims_griesmer(self) -> bool {
        matches!(self.0, 1..=4 | 9)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `(|L|, |M|, |N|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cardinalities {
    pub l: u32,
    pub m: u32,
    pub n: u32,
}

impl Cardinalities {
    pub fn new(l: u32, m: u32, n: u32) -> Self {
        Self { l, m, n }
    }

    pub fn of(l: &SubsetSpec, m: &SubsetSpec, n: &SubsetSpec) -> Self {
        Self::new(l.size() as u32, m.size() as u32, n.size() as u32)
    }

    pub fn sum(&self) -> u32 {
        self.l + self.m + self.n
    }

    pub fn max(&self) -> u32 {
        self.l.max(self.m).max(self.n)
    }

    pub fn min(&self) -> u32 {
        self.l.min(self.m).min(self.n)
    }

    fn check(&self, ambient: u32) -> Result<()> {
        if self.max() > ambient {
            return Err(Error::InvalidArgument(format!(
                "cardinalities ({}, {}, {}) exceed m = {ambient}",
                self.l, self.m, self.n
            )));
        }
        if ambient as usize > crate::codegen::MAX_AMBIENT {
            return Err(Error::AmbientTooLarge {
                ambient: ambient as usize,
                max: crate::codegen::MAX_AMBIENT,
            });
        }
        Ok(())
    }
}

/// One instantiated row of a weight table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    /// Twice the Hamming weight.
    pub twice_weight: i128,
    pub count: i128,
}

impl TableRow {
    fn new(twice_weight: i128, count: i128) -> Self {
        Self {
            twice_weight,
            count,
        }
    }

    /// `"13"` or `"27/2"`.
    pub fn weight_display(&self) -> String {
        if self.twice_weight % 2 == 0 {
            (self.twice_weight / 2).to_string()
        } else {
            format!("{}/2", self.twice_weight)
        }
    }
}

fn p2(e: u32) -> i128 {
    1i128 << e
}

/// `(n, k)` as printed in the family's parameter statement.
fn length_and_dimension(f: FamilyId, ambient: u32, s: Cardinalities) -> (i128, u32) {
    let big = p2(ambient);
    let (a, b, c) = (p2(s.l), p2(s.m), p2(s.n));
    match f.0 {
        1 => (a * b * c, s.sum()),
        2 => ((big - a) * b * c, ambient + s.m + s.n),
        3 => ((big - b) * a * c, ambient + s.l + s.n),
        4 => ((big - c) * a * b, ambient + s.l + s.m),
        5 => ((big - a) * (big - b) * c, 2 * ambient + s.n),
        6 => ((big - a) * (big - c) * b, 2 * ambient + s.m),
        7 => ((big - b) * (big - c) * a, 2 * ambient + s.l),
        8 => ((big - a) * (big - b) * (big - c), 3 * ambient),
        9 => (big * big * big - a * b * c, 3 * ambient),
        _ => unreachable!(),
    }
}

/// All rows of the family's weight table, instantiated verbatim: the leading
/// `(0, 1)` row included, zero-count rows kept, equal weights not merged.
pub fn predicted_rows(f: FamilyId, ambient: u32, s: Cardinalities) -> Result<Vec<TableRow>> {
    s.check(ambient)?;
    let big = p2(ambient);
    let (a, b, c) = (p2(s.l), p2(s.m), p2(s.n));
    // 2^{m - |X|}
    let (qa, qb, qc) = (big / a, big / b, big / c);
    let (n, _) = length_and_dimension(f, ambient, s);
    let r = TableRow::new;
    let mut rows = vec![r(0, 1)];
    match f.0 {
        1 => rows.push(r(a * b * c, a * b * c - 1)),
        2 => {
            rows.push(r((big - a) * b * c, big * b * c - qa));
            rows.push(r(big * b * c, qa - 1));
        }
        3 => {
            rows.push(r((big - b) * a * c, big * a * c - qb));
            rows.push(r(big * a * c, qb - 1));
        }
        4 => {
            rows.push(r((big - c) * a * b, big * a * b - qc));
            rows.push(r(big * a * b, qc - 1));
        }
        5 => {
            rows.push(r((big - a) * (big - b) * c, big * big * c - qa * qb));
            rows.push(r((big - b) * big * c, qa - 1));
            rows.push(r((big - a) * big * c, qb - 1));
            rows.push(r((big - a - b) * big * c, qa * qb - qa - qb + 1));
        }
        6 => {
            rows.push(r((big - a) * (big - c) * b, big * big * b - qa * qc));
            rows.push(r((big - c) * big * b, qa - 1));
            rows.push(r((big - a) * big * b, qc - 1));
            rows.push(r((big - a - c) * big * b, qa * qc - qa - qc + 1));
        }
        7 => {
            rows.push(r((big - b) * (big - c) * a, big * big * a - qb * qc));
            rows.push(r((big - b) * big * a, qc - 1));
            rows.push(r((big - c) * big * a, qb - 1));
            rows.push(r((big - b - c) * big * a, qb * qc - qc - qb + 1));
        }
        8 => {
            let cube = big * big * big;
            rows.push(r(n, cube - qa * qb * qc));
            rows.push(r(big * (big - b) * (big - c), qa - 1));
            rows.push(r(big * (big - a) * (big - c), qb - 1));
            rows.push(r(big * (big - a) * (big - b), qc - 1));
            rows.push(r(big * (big - a) * (big - b - c), qb * qc - qb - qc + 1));
            rows.push(r(big * (big - b) * (big - a - c), qa * qc - qa - qc + 1));
            rows.push(r(big * (big - c) * (big - a - b), qa * qb - qa - qb + 1));
            rows.push(r(
                n + a * b * c,
                qa * qb * qc - qb * qc - qa * qc - qa * qb + qa + qb + qc - 1,
            ));
        }
        9 => {
            let cube = big * big * big;
            let q = qa * qb * qc;
            rows.push(r(cube, q - 1));
            rows.push(r(cube - a * b * c, cube - q));
        }
        _ => unreachable!(),
    }
    Ok(rows)
}

/// The family's table instantiated and cleaned: zero-count rows dropped and
/// rows of equal weight merged.
pub fn predicted_weight_table(
    f: FamilyId,
    ambient: u32,
    s: Cardinalities,
) -> Result<WeightDistribution> {
    let (n, _) = length_and_dimension(f, ambient, s);
    if n <= 0 {
        return Err(Error::Degenerate(format!("family {f} has length {n}")));
    }
    let mut merged: BTreeMap<usize, u64> = BTreeMap::new();
    for (i, row) in predicted_rows(f, ambient, s)?.into_iter().enumerate() {
        if row.count == 0 {
            continue;
        }
        if row.count < 0 {
            return Err(Error::Degenerate(format!(
                "row with weight {} has negative count {}",
                row.weight_display(),
                row.count
            )));
        }
        if row.twice_weight % 2 != 0 {
            return Err(Error::NonIntegralWeight {
                twice: row.twice_weight,
            });
        }
        if i > 0 && row.twice_weight == 0 {
            return Err(Error::Degenerate(
                "a nonzero message has predicted weight 0 (d = 0)".into(),
            ));
        }
        *merged.entry((row.twice_weight / 2) as usize).or_insert(0) += row.count as u64;
    }
    let dist = WeightDistribution::new(n as usize, merged);
    if dist.nonzero_weights().next().is_none() {
        return Err(Error::Degenerate(format!(
            "family {f} predicts the trivial code"
        )));
    }
    Ok(dist)
}

/// The printed parameter triple, except that `d` is the smallest weight of
/// the instantiated table; see [`printed_min_distance`] for the printed `d`.
pub fn predicted_parameters(
    f: FamilyId,
    ambient: u32,
    s: Cardinalities,
) -> Result<(usize, u32, usize)> {
    let table = predicted_weight_table(f, ambient, s)?;
    let (n, k) = length_and_dimension(f, ambient, s);
    let d = table
        .nonzero_weights()
        .next()
        .expect("table has a nonzero weight");
    Ok((n as usize, k, d))
}

/// The minimum distance exactly as the family's parameter statement prints
/// it, as twice the value. In family 8 the third length factor is read as
/// `2^m − 2^{|N|}`.
pub fn printed_min_distance(f: FamilyId, ambient: u32, s: Cardinalities) -> Result<i128> {
    s.check(ambient)?;
    let big = p2(ambient);
    let (a, b, c) = (p2(s.l), p2(s.m), p2(s.n));
    let (n, _) = length_and_dimension(f, ambient, s);
    Ok(match f.0 {
        1..=4 => n,
        5 => (big - a - b) * big * c,
        6 => (big - a - c) * big * b,
        7 => (big - b - c) * big * a,
        8 => {
            let lo = s.min();
            n - (big - p2(lo)) * p2(s.sum() - lo)
        }
        9 => big * big * big - a * b * c,
        _ => unreachable!(),
    })
}

/// Everything the closed forms say about one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremPrediction {
    pub n: usize,
    pub k: u32,
    pub d: usize,
    pub table: WeightDistribution,
    /// Twice the printed minimum distance.
    pub printed_d_twice: i128,
    pub griesmer_claimed: bool,
    /// `None` for family 8, which claims no optimality condition.
    pub optimality_condition: Option<bool>,
}

impl TheoremPrediction {
    pub fn new(f: FamilyId, ambient: u32, s: Cardinalities) -> Result<Self> {
        let table = predicted_weight_table(f, ambient, s)?;
        let (n, k, d) = predicted_parameters(f, ambient, s)?;
        Ok(Self {
            n,
            k,
            d,
            table,
            printed_d_twice: printed_min_distance(f, ambient, s)?,
            griesmer_claimed: f.claims_griesmer(),
            optimality_condition: optimality_condition(f, ambient, s).ok(),
        })
    }

    /// Whether the printed minimum distance equals the table's.
    pub fn printed_d_agrees(&self) -> bool {
        self.printed_d_twice == 2 * self.d as i128
    }
}

/// `Σ_{i=0}^{k−1} ⌈d / 2^i⌉`.
pub fn griesmer_sum(k: u32, d: u64) -> u64 {
    (0..k)
        .map(|i| {
            if i >= 64 {
                1
            } else {
                let q = 1u64 << i;
                d.div_ceil(q)
            }
        })
        .sum()
}

pub fn is_griesmer_code(n: u64, k: u32, d: u64) -> bool {
    griesmer_sum(k, d) == n
}

/// True when no `[n, k, d+1]` binary code can exist by the Griesmer bound.
/// False means undecided, not "not optimal".
pub fn distance_optimal_by_griesmer(n: u64, k: u32, d: u64) -> bool {
    griesmer_sum(k, d + 1) > n
}

/// The family's sufficient condition for distance optimality. Families
/// 1-4 and 9 meet the Griesmer bound unconditionally; family 8 states none.
pub fn optimality_condition(f: FamilyId, ambient: u32, s: Cardinalities) -> Result<bool> {
    let lhs = 1u64 << s.sum();
    let base = 2 * (ambient as u64).saturating_sub(1);
    match f.0 {
        1..=4 | 9 => Ok(true),
        5 => Ok(lhs <= base + s.n as u64),
        6 => Ok(lhs <= base + s.m as u64),
        7 => Ok(lhs <= base + s.l as u64),
        8 => Err(Error::NotClaimed(8)),
        _ => unreachable!(),
    }
}

/// Ashikhmin-Barg: `wt_min / wt_max > 1/2` implies minimality.
pub fn ashikhmin_barg_minimal(dist: &WeightDistribution) -> Result<bool> {
    let lo = dist.nonzero_weights().next().ok_or(Error::TrivialCode)?;
    let hi = dist.max_weight().ok_or(Error::TrivialCode)?;
    Ok(2 * lo > hi)
}

/// True iff no nonzero codeword's support contains the support of a
/// different nonzero codeword. `codewords` must be the whole code.
pub fn exact_minimality(codewords: &[BinaryVector]) -> Result<bool> {
    if codewords.len() as u64 > MINIMALITY_CAP {
        return Err(Error::CodeTooLarge {
            size: codewords.len() as u64,
            cap: MINIMALITY_CAP,
        });
    }
    let mut by_weight: BTreeMap<usize, Vec<&BinaryVector>> = BTreeMap::new();
    for c in codewords {
        let w = c.weight();
        if w > 0 {
            by_weight.entry(w).or_default().push(c);
        }
    }
    // Equal-weight containment forces equality, so only lighter words can be
    // covered.
    let classes: Vec<&Vec<&BinaryVector>> = by_weight.values().collect();
    for (i, heavier) in classes.iter().enumerate() {
        for lighter in &classes[..i] {
            for u in heavier.iter() {
                if lighter.iter().any(|v| v.is_covered_by(u)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every nonzero weight divisible by 4 (sufficient for self-orthogonality).
pub fn self_orth_mod4(dist: &WeightDistribution) -> bool {
    dist.nonzero_weights().all(|w| w % 4 == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table10 {
    pub minimal_sufficient: bool,
    pub self_orth_sufficient: bool,
}

/// The family's row of sufficient conditions for minimality and
/// self-orthogonality, evaluated as stated.
pub fn table10_conditions(f: FamilyId, ambient: u32, s: Cardinalities) -> Table10 {
    let m = ambient as i64;
    let le = |x: u32| (x as i64) <= m - 2;
    let (minimal, self_orth) = match f.0 {
        1 => (true, s.sum() >= 3),
        2 => (le(s.l), s.m + s.n >= 3),
        3 => (le(s.m), s.l + s.n >= 3),
        4 => (le(s.n), s.l + s.m >= 3),
        5 => (le(s.l.max(s.m)), s.n >= 3),
        6 => (le(s.l.max(s.n)), s.m >= 3),
        7 => (le(s.m.max(s.n)), s.l >= 3),
        8 => (le(s.max()), s.l > 0 && s.m > 0 && s.n > 0),
        9 => ((s.sum() as i64) <= 3 * m - 2, s.sum() >= 3),
        _ => unreachable!(),
    };
    Table10 {
        minimal_sufficient: minimal,
        self_orth_sufficient: self_orth,
    }
}

/// Property flags for one analysed code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyFlags {
    pub griesmer_equal: bool,
    pub distance_optimal_by_griesmer: bool,
    pub minimal_exact: Option<bool>,
    pub minimal_ab_sufficient: bool,
    pub self_orth_exact: bool,
    pub self_orth_mod4: bool,
}
