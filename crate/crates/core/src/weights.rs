//! Weight functions attached to partitions, and the four-letter decoration
//! of Ferrers diagrams.
//!
//! Every weight here factors over the diagram as
//! `tail(λ_ν) · Π_{i<ν} gap(λ_i - λ_{i+1})`, with a separate value for the
//! empty partition. The census engine relies on that shape.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, unknown, Error, Result};
use crate::partition::Partition;
use crate::statistics::{even_index_sum, odd_index_sum, parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum WeightId {
    Unit,
    /// `(λ_ν + 1 - k) · Π (λ_i - λ_{i+1} + 1 - m)`.
    Omega { k: u32, m: u32 },
    /// `Π (λ_i - λ_{i+1} - 1)`.
    Tilde1,
    /// `(λ_ν - 2) · Π (λ_i - λ_{i+1} - 1)`.
    Tilde2,
    /// `2^{par(λ_ν)} · Π 2^{par(λ_i - λ_{i+1})}`.
    Hat1,
    /// `(-1)^ν`.
    Sign,
}

impl WeightId {
    /// Value on the empty partition.
    ///
    /// Tilde1 is 0 there and Tilde2 is 1, so that on gap-2 partitions
    /// `ω_{1,2} = ω_{2,2} + ω̃_1` and `ω̃_2 = ω_{2,2} - ω̃_1` hold for the
    /// empty partition too.
    pub fn empty_value(self) -> i64 {
        match self {
            WeightId::Tilde1 => 0,
            _ => 1,
        }
    }

    pub(crate) fn tail_factor(self, last: u32) -> i64 {
        let x = i64::from(last);
        match self {
            WeightId::Unit | WeightId::Tilde1 => 1,
            WeightId::Omega { k, .. } => x + 1 - i64::from(k),
            WeightId::Tilde2 => x - 2,
            WeightId::Hat1 => 1 << (last % 2),
            WeightId::Sign => -1,
        }
    }

    pub(crate) fn gap_factor(self, gap: u32) -> i64 {
        let d = i64::from(gap);
        match self {
            WeightId::Unit => 1,
            WeightId::Omega { m, .. } => d + 1 - i64::from(m),
            WeightId::Tilde1 | WeightId::Tilde2 => d - 1,
            WeightId::Hat1 => 1 << (gap % 2),
            WeightId::Sign => -1,
        }
    }

    pub fn tag(self) -> String {
        match self {
            WeightId::Unit => "unit".into(),
            WeightId::Omega { k, m } => format!("omega:{k},{m}"),
            WeightId::Tilde1 => "tilde1".into(),
            WeightId::Tilde2 => "tilde2".into(),
            WeightId::Hat1 => "hat1".into(),
            WeightId::Sign => "sign".into(),
        }
    }
}

impl fmt::Display for WeightId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for WeightId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "unit" => WeightId::Unit,
            "tilde1" => WeightId::Tilde1,
            "tilde2" => WeightId::Tilde2,
            "hat1" => WeightId::Hat1,
            "sign" => WeightId::Sign,
            _ => {
                let Some(args) = s.strip_prefix("omega:") else {
                    return Err(unknown("weight", s));
                };
                let bad = || invalid("weight", format!("`{s}` should look like omega:k,m"));
                let (k, m) = args.split_once(',').ok_or_else(bad)?;
                WeightId::Omega {
                    k: k.trim().parse().map_err(|_| bad())?,
                    m: m.trim().parse().map_err(|_| bad())?,
                }
            }
        })
    }
}

impl TryFrom<String> for WeightId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<WeightId> for String {
    fn from(w: WeightId) -> Self {
        w.tag()
    }
}

/// Evaluates `w` on `p`. Weights are total: outside their natural domain
/// factors may be zero or negative.
pub fn weight(w: WeightId, p: &Partition) -> i64 {
    let parts = p.parts();
    let Some(&last) = parts.last() else {
        return w.empty_value();
    };
    let gaps = || parts.windows(2).map(|pair| i64::from(pair[0] - pair[1]));
    let last = i64::from(last);
    match w {
        WeightId::Unit => 1,
        WeightId::Omega { k, m } => {
            let (k, m) = (i64::from(k), i64::from(m));
            (last + 1 - k) * gaps().map(|d| d + 1 - m).product::<i64>()
        }
        WeightId::Tilde1 => gaps().map(|d| d - 1).product(),
        WeightId::Tilde2 => (last - 2) * gaps().map(|d| d - 1).product::<i64>(),
        WeightId::Hat1 => {
            let exponent = parity(last as u64) + gaps().map(|d| parity(d as u64)).sum::<u32>();
            1 << exponent
        }
        WeightId::Sign => {
            if parts.len().is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    }
}

/// `ω_{1,2}(p) == ω_{2,2}(p) + ω̃_1(p)`; meaningful for gap-2 partitions.
pub fn weight_identity_check(p: &Partition) -> bool {
    weight(WeightId::Omega { k: 1, m: 2 }, p) == weight(WeightId::Omega { k: 2, m: 2 }, p) + weight(WeightId::Tilde1, p)
}

/// Letter counts of the four-decorated Ferrers diagram: odd rows read
/// `abab...`, even rows read `cdcd...`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecorationCount {
    pub a_count: u32,
    pub b_count: u32,
    pub c_count: u32,
    pub d_count: u32,
}

impl DecorationCount {
    pub fn exponents(&self) -> [u32; 4] {
        [self.a_count, self.b_count, self.c_count, self.d_count]
    }
}

pub fn decoration(p: &Partition) -> DecorationCount {
    let mut dc = DecorationCount::default();
    for (i, &row) in p.parts().iter().enumerate() {
        let (hi, lo) = (row.div_ceil(2), row / 2);
        if i % 2 == 0 {
            dc.a_count += hi;
            dc.b_count += lo;
        } else {
            dc.c_count += hi;
            dc.d_count += lo;
        }
    }
    debug_assert_eq!(u64::from(dc.a_count + dc.b_count), odd_index_sum(p));
    debug_assert_eq!(u64::from(dc.c_count + dc.d_count), even_index_sum(p));
    dc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    fn factored(w: WeightId, q: &Partition) -> i64 {
        match q.parts().last() {
            None => w.empty_value(),
            Some(&last) => {
                w.tail_factor(last) * q.parts().windows(2).map(|g| w.gap_factor(g[0] - g[1])).product::<i64>()
            }
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(WeightId::Omega { k: 1, m: 2 }, &p(&[5, 2])), 4);
        assert_eq!(weight(WeightId::Omega { k: 2, m: 2 }, &p(&[4])), 3);
        assert_eq!(weight(WeightId::Tilde1, &p(&[6])), 1);
        assert_eq!(weight(WeightId::Hat1, &p(&[1, 1])), 2);
        assert_eq!(weight(WeightId::Hat1, &p(&[2])), 1);
        assert_eq!(weight(WeightId::Tilde2, &p(&[1])), -1);
        assert_eq!(weight(WeightId::Sign, &p(&[3, 2, 1])), -1);
    }

    #[test]
    fn empty_values() {
        let e = Partition::empty();
        assert_eq!(weight(WeightId::Unit, &e), 1);
        assert_eq!(weight(WeightId::Omega { k: 1, m: 2 }, &e), 1);
        assert_eq!(weight(WeightId::Omega { k: 0, m: 0 }, &e), 1);
        assert_eq!(weight(WeightId::Tilde1, &e), 0);
        assert_eq!(weight(WeightId::Tilde2, &e), 1);
        assert_eq!(weight(WeightId::Hat1, &e), 1);
        assert_eq!(weight(WeightId::Sign, &e), 1);
    }

    #[test]
    fn decomposition_examples() {
        assert!(weight_identity_check(&p(&[5, 2])));
        assert!(weight_identity_check(&p(&[9])));
        assert!(weight_identity_check(&p(&[4, 1])));
        assert_eq!(weight(WeightId::Omega { k: 2, m: 2 }, &p(&[4, 1])), 0);
        assert_eq!(weight(WeightId::Tilde1, &p(&[4, 1])), 2);
    }

    #[test]
    fn factored_form_agrees() {
        let samples = [p(&[]), p(&[1]), p(&[7, 4, 4, 1]), p(&[9, 6, 2]), p(&[3, 3, 2, 2])];
        let ws = [
            WeightId::Unit,
            WeightId::Omega { k: 0, m: 0 },
            WeightId::Omega { k: 3, m: 1 },
            WeightId::Tilde1,
            WeightId::Tilde2,
            WeightId::Hat1,
            WeightId::Sign,
        ];
        for q in &samples {
            for w in ws {
                assert_eq!(weight(w, q), factored(w, q), "{w} on {q}");
            }
        }
    }

    #[test]
    fn decorations() {
        assert_eq!(decoration(&p(&[4, 3])).exponents(), [2, 2, 2, 1]);
        assert_eq!(decoration(&Partition::empty()).exponents(), [0, 0, 0, 0]);
        assert_eq!(decoration(&p(&[1])).exponents(), [1, 0, 0, 0]);
    }

    #[test]
    fn tags() {
        for w in [WeightId::Unit, WeightId::Omega { k: 2, m: 3 }, WeightId::Tilde1, WeightId::Tilde2, WeightId::Hat1, WeightId::Sign] {
            assert_eq!(w.tag().parse::<WeightId>().unwrap(), w);
        }
        assert!("omega:1".parse::<WeightId>().is_err());
        assert!("heavy".parse::<WeightId>().is_err());
    }
}
