//! Integer partitions and Ferrers-diagram arithmetic.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
///
/// The empty sequence is the unique partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates `values` and wraps them as a partition.
    pub fn new(values: &[i64]) -> Result<Self> {
        let malformed = |reason| Error::MalformedPartition { values: values.to_vec(), reason };
        let mut parts = Vec::with_capacity(values.len());
        for (i, &v) in values.iter().enumerate() {
            if v <= 0 {
                return Err(malformed("parts must be strictly positive"));
            }
            if i > 0 && v > values[i - 1] {
                return Err(malformed("parts must be weakly decreasing"));
            }
            parts.push(u32::try_from(v).map_err(|_| malformed("part exceeds u32"))?);
        }
        Ok(Self { parts })
    }

    /// Wraps parts that the caller already knows to be a valid partition.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn norm(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Reflects the Ferrers diagram across its main diagonal.
    pub fn conjugate(&self) -> Self {
        let width = self.largest().unwrap_or(0) as usize;
        let mut cols = vec![0u32; width];
        for &row in &self.parts {
            for c in &mut cols[..row as usize] {
                *c += 1;
            }
        }
        Self { parts: cols }
    }

    /// Row-wise sum of two Ferrers diagrams; rows past the shorter one are copied.
    pub fn pointwise_add(&self, other: &Self) -> Self {
        let (long, short) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut parts = long.parts.clone();
        for (p, &q) in parts.iter_mut().zip(&short.parts) {
            *p += q;
        }
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "pointwise sum lost monotonicity");
        Self { parts }
    }

    /// ASCII rendering of the Ferrers diagram, one row per line.
    pub fn ferrers(&self) -> String {
        let mut out = String::new();
        for &row in &self.parts {
            let line = vec!["*"; row as usize].join(" ");
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// The norm-minimal member of the set of partitions into exactly `parts`
/// parts, smallest part at least `smallest`, consecutive gaps at least `gap`:
/// `((M-1)m+k, (M-2)m+k, ..., m+k, k)`.
pub fn min_partition(parts: u32, smallest: u32, gap: u32) -> Partition {
    assert!(parts >= 1 && smallest >= 1, "min_partition needs M >= 1 and k >= 1");
    let rows = (0..parts).rev().map(|i| i * gap + smallest).collect();
    Partition { parts: rows }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        Self::new(&values)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts such as `4,4,2,1,1`; an empty string or `()`
/// is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if body.trim().is_empty() {
            return Ok(Self::empty());
        }
        let values = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| crate::error::invalid("partition", format!("`{}` is not an integer", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&values)
    }
}
