//! Per-partition statistics: norm, part count, odd/even-indexed part sums,
//! their conjugate versions, crank and Durfee square.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constraint::ConstraintSpec;
use crate::enumerate::for_each_by_norm;
use crate::error::{unknown, Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum StatisticId {
    Norm,
    NumParts,
    OddIndexSum,
    EvenIndexSum,
    OddIndexSumOfConjugate,
    EvenIndexSumOfConjugate,
    Crank,
    Durfee,
}

impl StatisticId {
    pub const ALL: [StatisticId; 8] = [
        StatisticId::Norm,
        StatisticId::NumParts,
        StatisticId::OddIndexSum,
        StatisticId::EvenIndexSum,
        StatisticId::OddIndexSumOfConjugate,
        StatisticId::EvenIndexSumOfConjugate,
        StatisticId::Crank,
        StatisticId::Durfee,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            StatisticId::Norm => "norm",
            StatisticId::NumParts => "parts",
            StatisticId::OddIndexSum => "o",
            StatisticId::EvenIndexSum => "e",
            StatisticId::OddIndexSumOfConjugate => "o-conj",
            StatisticId::EvenIndexSumOfConjugate => "e-conj",
            StatisticId::Crank => "crank",
            StatisticId::Durfee => "durfee",
        }
    }

    pub fn value(self, p: &Partition) -> i64 {
        let u = |x: u64| x as i64;
        match self {
            StatisticId::Norm => u(p.norm()),
            StatisticId::NumParts => p.len() as i64,
            StatisticId::OddIndexSum => u(odd_index_sum(p)),
            StatisticId::EvenIndexSum => u(even_index_sum(p)),
            StatisticId::OddIndexSumOfConjugate => u(odd_index_sum(&p.conjugate())),
            StatisticId::EvenIndexSumOfConjugate => u(even_index_sum(&p.conjugate())),
            StatisticId::Crank => crank(p),
            StatisticId::Durfee => durfee(p) as i64,
        }
    }

    /// Contribution of a part of size `part` at a 1-based position of the
    /// given parity, for statistics that are sums of per-part terms.
    ///
    /// The conjugate statistics count cells in odd (resp. even) columns,
    /// which is `ceil(part/2)` (resp. `floor(part/2)`) per row.
    pub fn part_charge(self, part: u32, odd_position: bool) -> Result<u64> {
        let x = u64::from(part);
        Ok(match self {
            StatisticId::Norm => x,
            StatisticId::NumParts => 1,
            StatisticId::OddIndexSum => if odd_position { x } else { 0 },
            StatisticId::EvenIndexSum => if odd_position { 0 } else { x },
            StatisticId::OddIndexSumOfConjugate => x.div_ceil(2),
            StatisticId::EvenIndexSumOfConjugate => x / 2,
            StatisticId::Crank | StatisticId::Durfee => return Err(Error::NotAdditive(self.tag())),
        })
    }
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for StatisticId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatisticId::ALL
            .into_iter()
            .find(|st| st.tag() == s)
            .ok_or_else(|| unknown("statistic", s))
    }
}

impl TryFrom<String> for StatisticId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<StatisticId> for String {
    fn from(s: StatisticId) -> Self {
        s.tag().to_string()
    }
}

/// `λ1 + λ3 + λ5 + ...`
pub fn odd_index_sum(p: &Partition) -> u64 {
    p.parts().iter().step_by(2).map(|&x| u64::from(x)).sum()
}

/// `λ2 + λ4 + λ6 + ...`
pub fn even_index_sum(p: &Partition) -> u64 {
    p.parts().iter().skip(1).step_by(2).map(|&x| u64::from(x)).sum()
}

/// Largest part when 1 is not a part; otherwise the number of parts
/// exceeding the count of ones, minus the count of ones.
/// The empty partition has crank 0.
pub fn crank(p: &Partition) -> i64 {
    let parts = p.parts();
    let ones = parts.iter().filter(|&&x| x == 1).count() as i64;
    if ones == 0 {
        return p.largest().map_or(0, i64::from);
    }
    let above = parts.iter().filter(|&&x| i64::from(x) > ones).count() as i64;
    above - ones
}

/// Side of the largest square fitting in the Ferrers diagram.
pub fn durfee(p: &Partition) -> u32 {
    p.parts()
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x as usize > i)
        .count() as u32
}

pub fn parity(n: u64) -> u32 {
    (n % 2) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn holds(self, value: i64, bound: i64) -> bool {
        match self {
            Relation::Eq => value == bound,
            Relation::Le => value <= bound,
            Relation::Ge => value >= bound,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

/// Number of partitions of `n` whose crank satisfies `relation` against `bound`.
pub fn count_crank_class(n: u32, relation: Relation, bound: i64) -> u64 {
    let mut count = 0;
    for_each_by_norm(&ConstraintSpec::unrestricted(), n, |parts| {
        if relation.holds(crank_of_parts(parts), bound) {
            count += 1;
        }
    });
    count
}

pub(crate) fn crank_of_parts(parts: &[u32]) -> i64 {
    let ones = parts.iter().rev().take_while(|&&x| x == 1).count() as i64;
    if ones == 0 {
        return parts.first().map_or(0, |&x| i64::from(x));
    }
    parts.iter().take_while(|&&x| i64::from(x) > ones).count() as i64 - ones
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn index_sums() {
        assert_eq!(odd_index_sum(&p(&[4, 2, 1])), 5);
        assert_eq!(odd_index_sum(&Partition::empty()), 0);
        assert_eq!(odd_index_sum(&p(&[9])), 9);
        assert_eq!(even_index_sum(&p(&[4, 2, 1])), 2);
        assert_eq!(even_index_sum(&p(&[5, 3, 2, 2])), 5);
        assert_eq!(even_index_sum(&Partition::empty()), 0);
    }

    #[test]
    fn crank_examples() {
        assert_eq!(crank(&p(&[4])), 4);
        assert_eq!(crank(&p(&[2, 1])), 0);
        assert_eq!(crank(&p(&[1, 1, 1, 1])), -4);
        assert_eq!(crank(&Partition::empty()), 0);
        assert_eq!(crank(&p(&[1])), -1);
        for q in [p(&[3, 3, 1, 1]), p(&[5, 2, 1]), p(&[1, 1])] {
            assert_eq!(crank(&q), crank_of_parts(q.parts()));
        }
    }

    #[test]
    fn crank_classes() {
        assert_eq!(count_crank_class(4, Relation::Ge, 0), 3);
        assert_eq!(count_crank_class(0, Relation::Ge, 0), 1);
        assert_eq!(count_crank_class(1, Relation::Le, -1), 1);
        // n = 1: one negative-crank partition, no positive one
        assert_eq!(count_crank_class(1, Relation::Ge, 1), 0);
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(durfee(&p(&[4, 4, 2, 1, 1])), 2);
        assert_eq!(durfee(&Partition::empty()), 0);
        assert_eq!(durfee(&p(&[7])), 1);
        assert_eq!(durfee(&p(&[3, 3, 3])), 3);
    }

    #[test]
    fn parity_values() {
        assert_eq!(parity(0), 0);
        assert_eq!(parity(1), 1);
        assert_eq!(parity(2), 0);
    }

    #[test]
    fn tags_round_trip() {
        for st in StatisticId::ALL {
            assert_eq!(st.tag().parse::<StatisticId>().unwrap(), st);
        }
        assert!("rank".parse::<StatisticId>().is_err());
    }

    #[test]
    fn conjugate_charges_match_direct() {
        let q = p(&[5, 3, 3, 1]);
        let charge = |st: StatisticId| -> u64 {
            q.parts()
                .iter()
                .enumerate()
                .map(|(i, &x)| st.part_charge(x, i % 2 == 0).unwrap())
                .sum()
        };
        for st in [
            StatisticId::Norm,
            StatisticId::OddIndexSum,
            StatisticId::EvenIndexSum,
            StatisticId::OddIndexSumOfConjugate,
            StatisticId::EvenIndexSumOfConjugate,
        ] {
            assert_eq!(charge(st) as i64, st.value(&q), "{st}");
        }
        assert!(StatisticId::Crank.part_charge(3, true).is_err());
    }
}
