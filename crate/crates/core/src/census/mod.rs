//! The Frobenius groups with perfect order classes up to a bound, built from
//! the classified families and cross-checked by brute force.

mod render;

use std::fmt;
use std::thread;

use crate::classifier::{pierpont_family_params, theorem_a_check, Justification, RANK_TWO_CYCLIC};
use crate::error::{Error, Result};
use crate::group::{
    is_fixed_point_free, order_census_bruteforce, realize_frobenius, SemidirectProduct,
};
use crate::order_classes::{frobenius_spec_census, is_poc};
use crate::spec::{ComplementSpec, FrobeniusSpec, HomocyclicKernel};

pub use render::{CensusRenderer, JsonRenderer, MarkdownRenderer, RendererRegistry, TsvRenderer};

/// Largest order up to which the classified families are known to give
/// every Frobenius group with perfect order classes.
pub const PROVED_COMPLETE_TO: u64 = 15_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CensusRow {
    pub order: u64,
    pub kernel: HomocyclicKernel,
    pub complement: ComplementSpec,
    pub family: Justification,
    pub structure_string: String,
}

impl CensusRow {
    fn new(kernel: HomocyclicKernel, complement: ComplementSpec, family: Justification) -> Self {
        let spec = FrobeniusSpec { kernel, complement };
        CensusRow {
            order: spec.order(),
            kernel,
            complement,
            family,
            structure_string: spec.structure_string(),
        }
    }

    pub fn spec(&self) -> FrobeniusSpec {
        FrobeniusSpec {
            kernel: self.kernel,
            complement: self.complement,
        }
    }
}

/// Non-cyclic families `(p, r, complement, tag)`. `C3 x| C16` over `F_7^2`
/// is absent: it has no fixed-point-free realization.
const NON_ABELIAN_FAMILIES: [(u64, u32, ComplementSpec, Justification); 5] = [
    (5, 2, ComplementSpec::SL2_3, Justification::ThmD),
    (
        5,
        2,
        ComplementSpec::Metacyclic(3, 8, 2),
        Justification::ThmD,
    ),
    (
        17,
        2,
        ComplementSpec::Metacyclic(9, 32, 8),
        Justification::ThmD,
    ),
    (
        3,
        4,
        ComplementSpec::Metacyclic(5, 16, 4),
        Justification::ThmD,
    ),
    (11, 2, ComplementSpec::SL2_5, Justification::ThmB),
];

/// Rows of the families up to `max_order`, sorted by order and then by
/// structure string.
pub fn enumerate(max_order: u64) -> Vec<CensusRow> {
    let mut rows = Vec::new();
    for (p, k) in pierpont_family_params(max_order) {
        let kernel = HomocyclicKernel { p, k, r: 1 };
        rows.push(CensusRow::new(
            kernel,
            ComplementSpec::Cyclic(p - 1),
            Justification::ThmC,
        ));
    }
    let mut push_scaled = |p: u64, r: u32, h: ComplementSpec, tag: Justification| {
        for k in 1.. {
            let kernel = HomocyclicKernel { p, k, r };
            let Some(order) = p.checked_pow(k * r).and_then(|n| n.checked_mul(h.order())) else {
                break;
            };
            if order > max_order {
                break;
            }
            rows.push(CensusRow::new(kernel, h, tag));
        }
    };
    for (p, n) in RANK_TWO_CYCLIC {
        push_scaled(p, 2, ComplementSpec::Cyclic(n), Justification::ThmC);
    }
    for (p, r, h, tag) in NON_ABELIAN_FAMILIES {
        push_scaled(p, r, h, tag);
    }
    rows.sort_by(|a, b| (a.order, &a.structure_string).cmp(&(b.order, &b.structure_string)));
    rows
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    /// Order above the brute-force limit.
    Skipped,
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckEntry {
    pub row: CensusRow,
    pub status: CheckStatus,
}

impl fmt::Display for CrosscheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.row.structure_string;
        match &self.status {
            CheckStatus::Passed => write!(f, "{}\t{s}\tpass", self.row.order),
            CheckStatus::Skipped => write!(f, "{}\t{s}\tskipped", self.row.order),
            CheckStatus::Failed(why) => write!(f, "{}\t{s}\tFAIL: {why}", self.row.order),
        }
    }
}

/// Realizes each row of order at most `limit`, then confirms the action is
/// fixed-point-free, the brute-force census equals the symbolic one, the
/// census has perfect order classes, and the conditions of Theorem A hold.
/// Rows are checked in parallel; the report keeps the input order.
pub fn crosscheck(rows: &[CensusRow], limit: u64) -> Vec<CrosscheckEntry> {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(rows.len().max(1));
    let mut statuses: Vec<Option<CheckStatus>> = vec![None; rows.len()];
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..rows.len())
                        .step_by(workers)
                        .map(|i| (i, check_row(&rows[i], limit)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, s) in h.join().expect("crosscheck worker panicked") {
                statuses[i] = Some(s);
            }
        }
    });
    rows.iter()
        .zip(statuses)
        .map(|(row, s)| CrosscheckEntry {
            row: row.clone(),
            status: s.expect("every row checked"),
        })
        .collect()
}

fn check_row(row: &CensusRow, limit: u64) -> CheckStatus {
    if row.order > limit {
        return CheckStatus::Skipped;
    }
    match try_check_row(row, limit) {
        Ok(()) => CheckStatus::Passed,
        Err(e) => CheckStatus::Failed(e.to_string()),
    }
}

fn try_check_row(row: &CensusRow, limit: u64) -> Result<()> {
    let spec = row.spec();
    let fail = |msg: String| Err(Error::Realization(msg));
    let Some(action) = realize_frobenius(&spec)? else {
        return fail(format!(
            "no fixed-point-free realization of {}",
            row.structure_string
        ));
    };
    if !is_fixed_point_free(&action)? {
        return fail("realized action has fixed points".into());
    }
    let group = SemidirectProduct::new(spec.kernel, &action, limit)?;
    let brute = order_census_bruteforce(&group, limit)?;
    let symbolic = frobenius_spec_census(&spec)?;
    if brute != symbolic {
        return fail(format!(
            "brute-force census {brute} differs from symbolic {symbolic}"
        ));
    }
    if !is_poc(&brute) {
        return fail(format!("census {brute} lacks perfect order classes"));
    }
    let a = theorem_a_check(&spec)?;
    if !a.poc {
        return fail(format!(
            "Theorem A conditions fail: {}",
            a.details.join("; ")
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(rows: &[CensusRow]) -> Vec<u64> {
        rows.iter().map(|r| r.order).collect()
    }

    #[test]
    fn small_bounds() {
        assert_eq!(orders(&enumerate(100)), vec![6, 18, 20, 42, 54, 72, 100]);
        assert!(enumerate(5).is_empty());
        assert_eq!(enumerate(6)[0].structure_string, "C3:C2");
    }

    #[test]
    fn full_census_size() {
        let rows = enumerate(15_000);
        assert_eq!(rows.len(), 39);
        assert_eq!(rows.iter().filter(|r| r.order == 600).count(), 3);
        assert_eq!(rows.iter().filter(|r| r.order == 15_000).count(), 3);
    }

    #[test]
    fn crosscheck_small_rows() {
        let rows = enumerate(1000);
        let report = crosscheck(&rows, 1000);
        for e in &report {
            assert_eq!(e.status, CheckStatus::Passed, "{e}");
        }
        assert!(crosscheck(&[], 10).is_empty());
    }
}
