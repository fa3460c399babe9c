//! Declarative membership predicates for sets of partitions.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, unknown, Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(self, n: usize) -> bool {
        match self {
            Parity::Even => n.is_multiple_of(2),
            Parity::Odd => n % 2 == 1,
        }
    }
}

/// Every part must reduce into `allowed` modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Residues {
    pub modulus: u32,
    pub allowed: Vec<u32>,
}

impl Residues {
    pub fn admits(&self, part: u32) -> bool {
        self.allowed.contains(&(part % self.modulus))
    }
}

/// A closed record of the constraint kinds used to carve out partition sets.
///
/// Gaps are `λ_i - λ_{i+1}` between consecutive parts. Absent optional fields
/// impose nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConstraintSpec {
    pub min_gap: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_gap: Option<u32>,
    pub min_smallest: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_smallest: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_parts: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_parts: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts_parity: Option<Parity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residues: Option<Residues>,
}

impl Default for ConstraintSpec {
    fn default() -> Self {
        Self {
            min_gap: 0,
            max_gap: None,
            min_smallest: 1,
            max_smallest: None,
            exact_parts: None,
            max_parts: None,
            parts_parity: None,
            residues: None,
        }
    }
}

/// Integer parameters for the parameterized presets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PresetParams {
    pub parts: Option<u32>,
    pub smallest: Option<u32>,
    pub gap: Option<u32>,
    pub l: Option<u32>,
}

impl ConstraintSpec {
    /// All partitions.
    pub fn unrestricted() -> Self {
        Self::default()
    }

    /// Partitions into distinct parts.
    pub fn distinct() -> Self {
        Self { min_gap: 1, ..Self::default() }
    }

    pub fn distinct_even() -> Self {
        Self { parts_parity: Some(Parity::Even), ..Self::distinct() }
    }

    pub fn distinct_odd() -> Self {
        Self { parts_parity: Some(Parity::Odd), ..Self::distinct() }
    }

    /// Distinct parts, exactly `l` of them.
    pub fn distinct_count(l: u32) -> Self {
        Self { exact_parts: Some(l), ..Self::distinct() }
    }

    /// Gaps at least 2.
    pub fn rogers_ramanujan_1() -> Self {
        Self { min_gap: 2, ..Self::default() }
    }

    /// Gaps at least 2 and no part equal to 1.
    pub fn rogers_ramanujan_2() -> Self {
        Self { min_gap: 2, min_smallest: 2, ..Self::default() }
    }

    /// Exactly `parts` parts, smallest at least `smallest`, gaps at least `gap`.
    pub fn exact(parts: u32, smallest: u32, gap: u32) -> Self {
        Self { min_gap: gap, min_smallest: smallest, exact_parts: Some(parts), ..Self::default() }
    }

    /// Like [`ConstraintSpec::exact`] but with at most `parts` parts.
    pub fn at_most(parts: Option<u32>, smallest: u32, gap: u32) -> Self {
        Self { min_gap: gap, min_smallest: smallest, max_parts: parts, ..Self::default() }
    }

    /// Gaps in {0,1,2} and smallest part at most 2.
    pub fn small_gaps() -> Self {
        Self { max_gap: Some(2), max_smallest: Some(2), ..Self::default() }
    }

    pub fn parts_mod5_pm1() -> Self {
        Self { residues: Some(Residues { modulus: 5, allowed: vec![1, 4] }), ..Self::default() }
    }

    pub fn parts_mod5_pm2() -> Self {
        Self { residues: Some(Residues { modulus: 5, allowed: vec![2, 3] }), ..Self::default() }
    }

    pub fn odd_parts() -> Self {
        Self { residues: Some(Residues { modulus: 2, allowed: vec![1] }), ..Self::default() }
    }

    /// Looks up a named preset. `PMkm` reads `parts`, `smallest`, `gap`
    /// from `params`; `Dl` reads `l`.
    pub fn preset(name: &str, params: &PresetParams) -> Result<Self> {
        let need = |v: Option<u32>, what: &str| {
            v.ok_or_else(|| invalid("preset parameters", format!("`{name}` needs {what}")))
        };
        Ok(match name {
            "U" => Self::unrestricted(),
            "D" => Self::distinct(),
            "D_e" => Self::distinct_even(),
            "D_o" => Self::distinct_odd(),
            "Dl" | "D_l" => Self::distinct_count(need(params.l, "l")?),
            "RR1" => Self::rogers_ramanujan_1(),
            "RR2" => Self::rogers_ramanujan_2(),
            "PMkm" => Self::exact(need(params.parts, "M")?, need(params.smallest, "k")?, need(params.gap, "m")?),
            "PleMkm" => Self::at_most(params.parts, need(params.smallest, "k")?, need(params.gap, "m")?),
            "K" => Self::small_gaps(),
            "C1hat" => Self::parts_mod5_pm1(),
            "C2hat" => Self::parts_mod5_pm2(),
            "odd" => Self::odd_parts(),
            _ => return Err(unknown("set", name)),
        })
    }

    /// True iff `p` satisfies every active field.
    pub fn member(&self, p: &Partition) -> bool {
        let parts = p.parts();
        let n = parts.len();
        if let Some(m) = self.exact_parts {
            if n != m as usize {
                return false;
            }
        }
        if let Some(m) = self.max_parts {
            if n > m as usize {
                return false;
            }
        }
        if let Some(par) = self.parts_parity {
            if !par.matches(n) {
                return false;
            }
        }
        if let Some(&last) = parts.last() {
            if last < self.min_smallest || self.max_smallest.is_some_and(|s| last > s) {
                return false;
            }
        }
        for w in parts.windows(2) {
            let gap = w[0] - w[1];
            if gap < self.min_gap || self.max_gap.is_some_and(|g| gap > g) {
                return false;
            }
        }
        match &self.residues {
            Some(r) => parts.iter().all(|&x| r.admits(x)),
            None => true,
        }
    }

    pub fn admits_empty(&self) -> bool {
        self.member(&Partition::empty())
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.min_smallest == 0 {
            return Err(invalid("constraint", "min_smallest must be positive"));
        }
        if let Some(r) = &self.residues {
            if r.modulus == 0 {
                return Err(invalid("constraint", "residue modulus must be positive"));
            }
        }
        Ok(())
    }
}

/// Parses a preset name (parameter-free presets only) or inline JSON.
impl FromStr for ConstraintSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let spec: Self = if s.starts_with('{') {
            serde_json::from_str(s).map_err(|e| invalid("constraint JSON", e.to_string()))?
        } else {
            Self::preset(s, &PresetParams::default())?
        };
        spec.validate()?;
        Ok(spec)
    }
}
