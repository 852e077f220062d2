//! Kendall's tau-a rank correlation.
//!
//! tau = 2/(n(n-1)) * sum_{i<j} sgn(x_i - x_j) sgn(y_i - y_j), with sgn(0) = 0
//! so ties contribute nothing and no tie-corrected denominator is applied.
//!
//! `kendall_tau` counts concordant and discordant pairs in O(n log n) with a
//! merge sort; `kendall_tau_oracle` is the literal O(n^2) double loop. Both
//! reduce to the same integer (concordant - discordant) divided by n(n-1)/2,
//! so they agree bit for bit. Sign comparisons are exact by default; the
//! optional tie tolerance exists for sensitivity analysis only and values
//! within it count as tied.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Two equally long sequences of finite observations, n >= 2.
#[derive(Debug, Clone, Copy)]
pub struct PairedSample<'a, T> {
    xs: &'a [T],
    ys: &'a [T],
}

impl<'a, T: Scalar> PairedSample<'a, T> {
    pub fn new(xs: &'a [T], ys: &'a [T]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch { xs: xs.len(), ys: ys.len() });
        }
        if xs.len() < 2 {
            return Err(Error::TooFewPoints { n: xs.len() });
        }
        for (index, v) in xs.iter().chain(ys).enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { index: index % xs.len() });
            }
        }
        Ok(PairedSample { xs, ys })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    fn total_pairs(&self) -> u64 {
        let n = self.len() as u64;
        n * (n - 1) / 2
    }
}

fn cmp<T: Scalar>(a: T, b: T) -> Ordering {
    a.partial_cmp(&b).expect("finite values compare")
}

/// Merge-count evaluation. Sort by (x, y), count pairs tied in x, in y and in
/// both, then count strict y-inversions among the sorted sequence; those are
/// exactly the discordant pairs, and concordant pairs follow by exclusion.
pub fn kendall_tau<T: Scalar>(sample: &PairedSample<T>) -> T {
    let n = sample.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        cmp(sample.xs[a], sample.xs[b]).then_with(|| cmp(sample.ys[a], sample.ys[b]))
    });

    let tied = |run: u64| run * (run - 1) / 2;

    let mut tied_x = 0u64;
    let mut tied_xy = 0u64;
    let mut x_run = 1u64;
    let mut xy_run = 1u64;
    for w in order.windows(2) {
        let (prev, curr) = (w[0], w[1]);
        if sample.xs[curr] == sample.xs[prev] {
            x_run += 1;
            if sample.ys[curr] == sample.ys[prev] {
                xy_run += 1;
            } else {
                tied_xy += tied(xy_run);
                xy_run = 1;
            }
        } else {
            tied_x += tied(x_run);
            x_run = 1;
            tied_xy += tied(xy_run);
            xy_run = 1;
        }
    }
    tied_x += tied(x_run);
    tied_xy += tied(xy_run);

    let mut ys_sorted: Vec<T> = order.iter().map(|&i| sample.ys[i]).collect();
    let discordant = count_strict_inversions(&mut ys_sorted);

    let mut tied_y = 0u64;
    let mut y_run = 1u64;
    for w in ys_sorted.windows(2) {
        if w[1] == w[0] {
            y_run += 1;
        } else {
            tied_y += tied(y_run);
            y_run = 1;
        }
    }
    tied_y += tied(y_run);

    let total = sample.total_pairs();
    // signed: with fully tied columns the concordant count hits zero from below
    let concordant =
        total as i64 - tied_x as i64 - tied_y as i64 + tied_xy as i64 - discordant as i64;
    let net = concordant - discordant as i64;
    T::from_i64(net).expect("pair count fits") / T::from_u64(total).expect("pair count fits")
}

/// Bottom-up merge sort counting pairs i < j with vals[i] > vals[j]. Within
/// runs of equal x the y values arrive already ascending, so x-tied pairs can
/// never register as inversions.
fn count_strict_inversions<T: Scalar>(vals: &mut [T]) -> u64 {
    let n = vals.len();
    let mut buf = vals.to_vec();
    let mut inversions = 0u64;
    let mut width = 1;
    while width < n {
        let mut start = 0;
        while start < n {
            let mid = (start + width).min(n);
            let end = (start + 2 * width).min(n);
            let (mut i, mut j, mut k) = (start, mid, start);
            while i < mid || j < end {
                if i < mid && (j >= end || vals[i] <= vals[j]) {
                    buf[k] = vals[i];
                    i += 1;
                } else {
                    // vals[j] jumps over the rest of the left run
                    inversions += (mid - i) as u64;
                    buf[k] = vals[j];
                    j += 1;
                }
                k += 1;
            }
            vals[start..end].copy_from_slice(&buf[start..end]);
            start = end;
        }
        width *= 2;
    }
    inversions
}

/// The defining double loop, kept as the independent reference.
pub fn kendall_tau_oracle<T: Scalar>(sample: &PairedSample<T>) -> T {
    let n = sample.len();
    let mut net = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let sx = sign(sample.xs[i], sample.xs[j]);
            let sy = sign(sample.ys[i], sample.ys[j]);
            net += (sx * sy) as i64;
        }
    }
    T::from_i64(net).expect("pair count fits")
        / T::from_u64(sample.total_pairs()).expect("pair count fits")
}

fn sign<T: Scalar>(a: T, b: T) -> i8 {
    match cmp(a, b) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// Pairwise evaluation with differences within `tolerance` treated as ties.
/// A zero tolerance reproduces `kendall_tau` exactly.
pub fn kendall_tau_with_tolerance<T: Scalar>(sample: &PairedSample<T>, tolerance: T) -> T {
    let tol = tolerance.max(T::zero());
    let n = sample.len();
    let mut net = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let sx = sign_with_tol(sample.xs[i], sample.xs[j], tol);
            let sy = sign_with_tol(sample.ys[i], sample.ys[j], tol);
            net += (sx * sy) as i64;
        }
    }
    T::from_i64(net).expect("pair count fits")
        / T::from_u64(sample.total_pairs()).expect("pair count fits")
}

fn sign_with_tol<T: Scalar>(a: T, b: T, tol: T) -> i8 {
    let d = a - b;
    if d.abs() <= tol {
        0
    } else if d > T::zero() {
        1
    } else {
        -1
    }
}
