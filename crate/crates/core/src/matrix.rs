//! The inclusion matrix C_pq and summation-matrix diagnostics.
//!
//! Row m of C_pq has entries `c_{m,n} = k_{m-n} P_n / Q_m` for n <= m and
//! zeros beyond, so that the q-means of any sequence are C_pq applied to
//! its p-means. The diagnostics grade the three regularity conditions for
//! an arbitrary lower-triangular summation matrix: uniformly bounded row
//! absolute sums, columns tending to zero, and row sums tending to one.

use alloc::vec::Vec;

use crate::comparison::ComparisonCoefficients;
use crate::error::{Error, Result};
use crate::kernel::{
    boundedness_probe, limit_probe_toward, BoundednessProbe, ConvergenceDiagnostic, GrowthParams,
    ProbeParams, Scalar, SequencePrefix, Verdict,
};
use crate::means::NorlundMethod;

/// One row of a lower-triangular summation matrix: entries at columns
/// `0..=index`, zero beyond.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InclusionMatrixRow {
    index: usize,
    entries: Vec<Scalar>,
}

impl InclusionMatrixRow {
    /// Panics unless exactly `index + 1` entries are given.
    pub fn from_entries(index: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), index + 1, "row m must carry entries 0..=m");
        InclusionMatrixRow { index, entries }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Entry at column n, zero above the diagonal.
    pub fn entry(&self, n: usize) -> Scalar {
        if n <= self.index {
            self.entries[n].clone()
        } else {
            Scalar::zero()
        }
    }

    pub fn row_sum(&self) -> Scalar {
        self.entries.iter().sum()
    }

    pub fn abs_row_sum(&self) -> Scalar {
        self.entries.iter().map(Scalar::abs).sum()
    }
}

/// Builds row m of C_pq. `k` must be the comparison coefficients of (p, q).
pub fn inclusion_matrix_row(
    p: &NorlundMethod,
    q: &NorlundMethod,
    k: &ComparisonCoefficients,
    m: usize,
) -> Result<InclusionMatrixRow> {
    let available = p.horizon().min(q.horizon()).min(k.horizon());
    if m > available {
        return Err(Error::HorizonTooShort {
            needed: m,
            available,
        });
    }
    let q_m = q.weights.prefix_sum(m);
    if q_m.is_zero() {
        return Err(Error::ZeroPrefixSum {
            symbol: 'Q',
            index: m,
        });
    }
    let pp = p.weights.prefix_sums();
    let entries = (0..=m)
        .map(|n| k.coefficient(m - n) * &pp[n] / q_m)
        .collect();
    Ok(InclusionMatrixRow::from_entries(m, entries))
}

/// Rows 0..=`up_to` of C_pq.
pub fn inclusion_matrix(
    p: &NorlundMethod,
    q: &NorlundMethod,
    k: &ComparisonCoefficients,
    up_to: usize,
) -> Result<Vec<InclusionMatrixRow>> {
    (0..=up_to).map(|m| inclusion_matrix_row(p, q, k, m)).collect()
}

fn check_rows(rows: &[InclusionMatrixRow]) -> Result<usize> {
    if rows.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    for (expected, row) in rows.iter().enumerate() {
        if row.index() != expected {
            return Err(Error::MatrixRowsNotContiguous {
                expected,
                found: row.index(),
            });
        }
    }
    Ok(rows.len() - 1)
}

/// Applies the matrix: `t_m = sum_n c_{m,n} s_n`, exact.
pub fn apply_matrix(rows: &[InclusionMatrixRow], s: &SequencePrefix) -> Result<SequencePrefix> {
    let top = check_rows(rows)?;
    if s.horizon() < top {
        return Err(Error::HorizonTooShort {
            needed: top,
            available: s.horizon(),
        });
    }
    let out = rows
        .iter()
        .map(|row| row.entries().iter().zip(s.iter()).map(|(c, v)| c * v).sum())
        .collect();
    Ok(SequencePrefix::new(out))
}

/// Finite-horizon profiles and verdicts for the three regularity
/// conditions of a triangular summation matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SstReport {
    /// Per-row sums of |c_{m,n}|.
    pub row_abs_sums: SequencePrefix,
    /// Per-row |row sum - 1|.
    pub row_sum_deviation: SequencePrefix,
    /// Tail diagnostics toward 0, one per probed column.
    pub columns: Vec<ColumnDiagnostic>,
    /// Growth probe over `row_abs_sums` (condition: bounded rows).
    pub row_bound: BoundednessProbe,
    /// Aggregate verdict over probed columns (condition: columns vanish).
    pub columns_vanish: Verdict,
    /// Verdict for row sums approaching 1; exact zeros short-circuit.
    pub row_sums_normalized: Verdict,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColumnDiagnostic {
    pub column: usize,
    pub diagnostic: ConvergenceDiagnostic,
}

/// Runs the three-condition diagnostics on rows 0..=M.
///
/// Columns are probed on their post-diagonal tail, so only columns with at
/// least `window + 1` values below the diagonal participate.
pub fn sst_diagnostics(
    rows: &[InclusionMatrixRow],
    probe: &ProbeParams,
    growth: &GrowthParams,
) -> Result<SstReport> {
    let top = check_rows(rows)?;

    let row_abs_sums = SequencePrefix::new(rows.iter().map(|r| r.abs_row_sum()).collect());
    let one = Scalar::one();
    let row_sum_deviation =
        SequencePrefix::new(rows.iter().map(|r| (r.row_sum() - &one).abs()).collect());

    let row_bound = boundedness_probe(&row_abs_sums, growth)?;

    let window = probe.effective_window(top + 1)?;
    let column_params = ProbeParams {
        window: Some(window),
        ..probe.clone()
    };
    let zero = Scalar::zero();
    let mut columns = Vec::new();
    let mut columns_vanish = Verdict::ConvergingEvidence;
    if top >= window {
        for n in 0..=top - window {
            let column = SequencePrefix::from_fn(top - n, |i| rows[n + i].entry(n));
            let diagnostic = limit_probe_toward(&column, &zero, &column_params)?;
            match diagnostic.verdict {
                Verdict::DivergingEvidence => columns_vanish = Verdict::DivergingEvidence,
                Verdict::Inconclusive if columns_vanish == Verdict::ConvergingEvidence => {
                    columns_vanish = Verdict::Inconclusive
                }
                _ => {}
            }
            columns.push(ColumnDiagnostic { column: n, diagnostic });
        }
    } else {
        columns_vanish = Verdict::Inconclusive;
    }

    let row_sums_normalized = if row_sum_deviation.iter().all(Scalar::is_zero) {
        Verdict::ConvergingEvidence
    } else {
        limit_probe_toward(&row_sum_deviation, &zero, probe)?.verdict
    };

    Ok(SstReport {
        row_abs_sums,
        row_sum_deviation,
        columns,
        row_bound,
        columns_vanish,
        row_sums_normalized,
    })
}
