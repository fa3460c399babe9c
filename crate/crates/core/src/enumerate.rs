//! Explicit enumeration of constrained partitions, by norm or by another
//! statistic with a finiteness certificate.

use crate::constraint::ConstraintSpec;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::statistics::StatisticId;

/// Calls `visit` on the parts of every member of `spec` with norm `n`, in
/// lexicographically decreasing order.
pub fn for_each_by_norm<F: FnMut(&[u32])>(spec: &ConstraintSpec, n: u32, mut visit: F) {
    let mut buf = Vec::with_capacity(n as usize);
    descend(spec, n, None, &mut buf, &mut visit);
}

fn descend<F: FnMut(&[u32])>(
    spec: &ConstraintSpec,
    remaining: u32,
    prev: Option<u32>,
    buf: &mut Vec<u32>,
    visit: &mut F,
) {
    if remaining == 0 && tail_ok(spec, buf) {
        visit(buf);
    }
    if remaining == 0 {
        return;
    }
    let count = buf.len() as u32;
    if spec.exact_parts.is_some_and(|m| count >= m) || spec.max_parts.is_some_and(|m| count >= m) {
        return;
    }
    let (lo, hi) = match prev {
        None => (spec.min_smallest, remaining),
        Some(p) => {
            let Some(hi) = p.checked_sub(spec.min_gap) else { return };
            let lo = spec.max_gap.map_or(0, |g| p.saturating_sub(g)).max(spec.min_smallest);
            (lo, hi.min(remaining))
        }
    };
    for x in (lo..=hi).rev() {
        if spec.residues.as_ref().is_some_and(|r| !r.admits(x)) {
            continue;
        }
        buf.push(x);
        descend(spec, remaining - x, Some(x), buf, visit);
        buf.pop();
    }
}

// Gap, residue and lower smallest-part constraints hold by construction.
fn tail_ok(spec: &ConstraintSpec, parts: &[u32]) -> bool {
    let n = parts.len();
    if spec.exact_parts.is_some_and(|m| n != m as usize) {
        return false;
    }
    if spec.parts_parity.is_some_and(|par| !par.matches(n)) {
        return false;
    }
    match (parts.last(), spec.max_smallest) {
        (Some(&last), Some(s)) => last <= s,
        _ => true,
    }
}

/// All members of `spec` with norm `n`, lexicographically decreasing.
pub fn enumerate_by_norm(spec: &ConstraintSpec, n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_by_norm(spec, n, |parts| out.push(Partition::from_parts_unchecked(parts.to_vec())));
    out
}

/// Largest norm a member of `spec` can have when `stat` equals `value`.
///
/// Since `E(π) <= O(π)` for every partition, `|π| <= 2 O(π)`; the same holds
/// after conjugation. For distinct parts the conjugate has gaps at most 1 and
/// smallest part 1, which gives `|π| <= 3 E(π') + 1`.
pub fn norm_bound(spec: &ConstraintSpec, stat: StatisticId, value: u32) -> Result<u32> {
    let v = value;
    match stat {
        StatisticId::Norm => Ok(v),
        StatisticId::OddIndexSum | StatisticId::OddIndexSumOfConjugate => Ok(2 * v),
        StatisticId::EvenIndexSumOfConjugate if spec.min_gap >= 1 => Ok(3 * v + 1),
        StatisticId::EvenIndexSumOfConjugate => Err(Error::NoFinitenessCertificate {
            stat: stat.tag(),
            reason: "needs distinct parts; (1^k) has e-conj 0 for every k otherwise",
        }),
        StatisticId::EvenIndexSum => Err(Error::NoFinitenessCertificate {
            stat: stat.tag(),
            reason: "(λ2+i, λ2, ...) share one value for every i > 0",
        }),
        StatisticId::NumParts | StatisticId::Crank | StatisticId::Durfee => {
            Err(Error::NoFinitenessCertificate { stat: stat.tag(), reason: "level sets are infinite" })
        }
    }
}

/// All members of `spec` with `stat` equal to `value`, ordered by norm and
/// then lexicographically decreasing.
pub fn enumerate_by_statistic(spec: &ConstraintSpec, stat: StatisticId, value: u32) -> Result<Vec<Partition>> {
    let bound = norm_bound(spec, stat, value)?;
    let mut out = Vec::new();
    for n in 0..=bound {
        for_each_by_norm(spec, n, |parts| {
            let p = Partition::from_parts_unchecked(parts.to_vec());
            if stat.value(&p) == i64::from(value) {
                out.push(p);
            }
        });
    }
    Ok(out)
}
