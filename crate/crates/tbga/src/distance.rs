//! Exact and randomized minimum-distance computation for CSS, subsystem, and
//! classical codes.
//!
//! Exhaustive search walks the kernel span in Gray-code order over GF(2)
//! (mixed-radix odometer for odd characteristic) with incremental weight
//! updates. The randomized search is an information-set scan: per trial a
//! seeded column permutation is applied to a kernel basis, the basis is
//! Gaussian-reduced, and light reduced rows (optionally pairwise sums) are
//! tested against the degeneracy row space. Per-trial seeds derive from
//! (seed, trial index), so results are identical under any schedule.

use crate::error::{Error, Result};
use crate::matrix::{b2_rref, bp_rref, words_for, FMatrix, RowSpace};
use crate::rng::SplitMix64;

/// Distance value; `Infinite` encodes a trivial admissible set (k = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(w) => Some(w),
            Distance::Infinite => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(w) => write!(f, "{w}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMode {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone)]
pub struct DistanceResult {
    pub distance: Distance,
    pub mode: DistanceMode,
    pub trials: u64,
    /// A minimum-weight vector attaining the value, re-verified on return.
    pub witness: Option<Vec<u8>>,
}

/// Default exhaustive-enumeration budget: at most 2^26 vectors.
pub const DEFAULT_BUDGET_LOG2: u32 = 26;

/// Options for the randomized information-set search.
#[derive(Debug, Clone, Copy, Default)]
pub struct RandomOptions {
    /// Also scan all pairwise sums of reduced rows in each trial.
    pub scan_pairs: bool,
}

/// Exact check that p^dim <= 2^budget_log2, in integer arithmetic.
pub fn within_budget(p: u8, dim: usize, budget_log2: u32) -> bool {
    if budget_log2 >= 127 {
        return true;
    }
    let limit: u128 = 1u128 << budget_log2;
    let mut total: u128 = 1;
    for _ in 0..dim {
        total = match total.checked_mul(p as u128) {
            Some(t) if t <= limit => t,
            _ => return false,
        };
    }
    true
}

fn needed_log2(p: u8, dim: usize) -> u32 {
    let mut total: u128 = 1;
    for step in 0..dim {
        total = match total.checked_mul(p as u128) {
            Some(t) => t,
            // overflowed u128: bound from below by bits consumed so far
            None => return (127 + (dim - step) * (p as usize).ilog2() as usize) as u32,
        };
    }
    if total.is_power_of_two() {
        total.ilog2()
    } else {
        total.ilog2() + 1
    }
}

fn budget_check(p: u8, dim: usize, budget_log2: u32) -> Result<()> {
    if !within_budget(p, dim, budget_log2) {
        return Err(Error::BudgetExceeded {
            needed_log2: needed_log2(p, dim),
            budget_log2,
        });
    }
    Ok(())
}

/// Is the admissible set empty, i.e. kernel(of) fully inside `exclude`?
fn admissible_empty(kernel: &FMatrix, exclude: Option<&RowSpace>) -> bool {
    match exclude {
        None => kernel.rows() == 0,
        Some(space) => (0..kernel.rows())
            .all(|i| space.contains(&kernel.row_entries(i)).expect("same length")),
    }
}

// ---------------------------------------------------------------------------
// exact enumeration

struct SearchHit {
    weight: u32,
    order_key: (u64, u64), // (worker, step): deterministic tie-break
    witness: Vec<u8>,
}

fn better(a: &Option<SearchHit>, w: u32, key: (u64, u64)) -> bool {
    match a {
        None => true,
        Some(h) => w < h.weight || (w == h.weight && key < h.order_key),
    }
}

/// GF(2) Gray-code walk over the span of `basis`, fixing the high `prefix`
/// bits (`prefix` selects which of the trailing `split` basis rows start on).
fn b2_walk(
    basis: &[Vec<u64>],
    cols: usize,
    exclude: Option<&RowSpace>,
    split: usize,
    prefix: u64,
) -> Option<SearchHit> {
    let dim = basis.len();
    let low = dim - split;
    let wpr = words_for(cols);
    let mut cur = vec![0u64; wpr];
    for j in 0..split {
        if (prefix >> j) & 1 == 1 {
            for (x, y) in cur.iter_mut().zip(&basis[low + j]) {
                *x ^= y;
            }
        }
    }
    let mut best: Option<SearchHit> = None;
    let mut scratch = vec![0u64; wpr];
    let steps: u64 = 1u64 << low;
    let mut consider = |cur: &[u64], step: u64, best: &mut Option<SearchHit>| {
        let w: u32 = cur.iter().map(|x| x.count_ones()).sum();
        if w == 0 {
            return false;
        }
        let key = (prefix, step);
        if !better(best, w, key) {
            return false;
        }
        if let Some(space) = exclude {
            scratch.copy_from_slice(cur);
            if space.contains_packed_scratch(&mut scratch) {
                return false;
            }
        }
        *best = Some(SearchHit {
            weight: w,
            order_key: key,
            witness: unpack_bits(cur, cols),
        });
        w == 1
    };
    // step 0 covers the pure-prefix vector
    if consider(&cur, 0, &mut best) {
        return best;
    }
    for step in 1..steps {
        let j = step.trailing_zeros() as usize;
        for (x, y) in cur.iter_mut().zip(&basis[j]) {
            *x ^= y;
        }
        if consider(&cur, step, &mut best) {
            break;
        }
    }
    best
}

/// Odd characteristic: mixed-radix odometer over coefficient vectors for the
/// trailing `split` digits fixed to `prefix` (base-p digits).
fn bp_walk(
    p: u8,
    basis: &[Vec<u8>],
    exclude: Option<&RowSpace>,
    split: usize,
    prefix: u64,
) -> Option<SearchHit> {
    let f = crate::field::PrimeField::new(p as u64).expect("valid modulus");
    let dim = basis.len();
    let low = dim - split;
    let cols = basis.first().map_or(0, |r| r.len());
    let mut cur = vec![0u8; cols];
    let mut weight: i64 = 0;
    let add_row = |cur: &mut [u8], weight: &mut i64, row: &[u8]| {
        for (i, &v) in row.iter().enumerate() {
            if v != 0 {
                let before = cur[i];
                cur[i] = f.add(before, v);
                *weight += (cur[i] != 0) as i64 - (before != 0) as i64;
            }
        }
    };
    let mut pf = prefix;
    for j in 0..split {
        let digit = (pf % p as u64) as u8;
        pf /= p as u64;
        for _ in 0..digit {
            add_row(&mut cur, &mut weight, &basis[low + j]);
        }
    }
    let mut digits = vec![0u8; low];
    let mut best: Option<SearchHit> = None;
    let mut scratch = vec![0u8; cols];
    let mut steps: u64 = 1;
    for _ in 0..low {
        steps = steps.saturating_mul(p as u64);
    }
    for step in 0..steps {
        if step > 0 {
            // increment the odometer; each carried digit adds its basis row
            let mut j = 0;
            loop {
                add_row(&mut cur, &mut weight, &basis[j]);
                digits[j] += 1;
                if digits[j] == p {
                    digits[j] = 0;
                    j += 1;
                } else {
                    break;
                }
            }
        }
        let w = weight as u32;
        if w == 0 {
            continue;
        }
        let key = (prefix, step);
        if !better(&best, w, key) {
            continue;
        }
        if let Some(space) = exclude {
            scratch.copy_from_slice(&cur);
            if space.contains_bytes_scratch(&mut scratch) {
                continue;
            }
        }
        best = Some(SearchHit {
            weight: w,
            order_key: key,
            witness: cur.clone(),
        });
        if w == 1 {
            break;
        }
    }
    best
}

fn unpack_bits(words: &[u64], cols: usize) -> Vec<u8> {
    (0..cols)
        .map(|c| ((words[c / 64] >> (c % 64)) & 1) as u8)
        .collect()
}

fn merge_hits(a: Option<SearchHit>, b: Option<SearchHit>) -> Option<SearchHit> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if (y.weight, y.order_key) < (x.weight, x.order_key) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

#[cfg(feature = "parallel")]
fn run_split<F>(workers: u64, body: F) -> Option<SearchHit>
where
    F: Fn(u64) -> Option<SearchHit> + Sync + Send,
{
    use rayon::prelude::*;
    (0..workers)
        .into_par_iter()
        .map(body)
        .reduce(|| None, merge_hits)
}

#[cfg(not(feature = "parallel"))]
fn run_split<F>(workers: u64, body: F) -> Option<SearchHit>
where
    F: Fn(u64) -> Option<SearchHit> + Sync + Send,
{
    (0..workers).map(body).fold(None, merge_hits)
}

/// Minimum weight over span(kernel of `of`) excluding `exclude` (or just the
/// zero vector when `exclude` is `None`).
fn min_weight_kernel(
    of: &FMatrix,
    exclude: Option<&FMatrix>,
    budget_log2: u32,
) -> Result<DistanceResult> {
    let kernel = of.nullspace();
    let dim = kernel.rows();
    let p = of.field().modulus();
    budget_check(p, dim, budget_log2)?;
    let space = exclude.map(RowSpace::new);
    if admissible_empty(&kernel, space.as_ref()) {
        return Ok(DistanceResult {
            distance: Distance::Infinite,
            mode: DistanceMode::Exact,
            trials: 0,
            witness: None,
        });
    }
    let hit = if p == 2 {
        let basis: Vec<Vec<u64>> = (0..dim)
            .map(|i| kernel.packed_row(i).expect("binary").to_vec())
            .collect();
        // split off high digits for parallel workers once the walk is long
        let split = if dim >= 18 { (dim - 16).min(8) } else { 0 };
        let cols = kernel.cols();
        run_split(1u64 << split, |prefix| {
            b2_walk(&basis, cols, space.as_ref(), split, prefix)
        })
    } else {
        let basis: Vec<Vec<u8>> = (0..dim).map(|i| kernel.row_entries(i)).collect();
        let split = if dim >= 11 { (dim - 9).min(5) } else { 0 };
        let mut workers = 1u64;
        for _ in 0..split {
            workers *= p as u64;
        }
        run_split(workers, |prefix| {
            bp_walk(p, &basis, space.as_ref(), split, prefix)
        })
    };
    let hit = hit.expect("admissible set is nonempty");
    Ok(DistanceResult {
        distance: Distance::Finite(hit.weight),
        mode: DistanceMode::Exact,
        trials: 0,
        witness: Some(hit.witness),
    })
}

/// Verifies a returned witness independently: in the kernel, outside the
/// excluded space, weight equal to the claimed distance.
fn verify_witness(of: &FMatrix, exclude: Option<&FMatrix>, res: &DistanceResult) {
    if let (Distance::Finite(w), Some(wit)) = (res.distance, &res.witness) {
        let image = of.mul_vec(wit).expect("length matches");
        assert!(image.iter().all(|&x| x == 0), "witness not in kernel");
        assert_eq!(
            wit.iter().filter(|&&x| x != 0).count() as u32,
            w,
            "witness weight mismatch"
        );
        if let Some(m) = exclude {
            assert!(
                !RowSpace::new(m).contains(wit).expect("length matches"),
                "witness is degenerate"
            );
        }
    }
}

/// Exact d_Z: minimum weight over kernel(H_X) \ rowspace(H_Z).
pub fn exact_dz(hx: &FMatrix, hz: &FMatrix, budget_log2: u32) -> Result<DistanceResult> {
    let res = min_weight_kernel(hx, Some(hz), budget_log2)?;
    verify_witness(hx, Some(hz), &res);
    Ok(res)
}

/// Exact d_X: roles of the two matrices swapped.
pub fn exact_dx(hx: &FMatrix, hz: &FMatrix, budget_log2: u32) -> Result<DistanceResult> {
    exact_dz(hz, hx, budget_log2)
}

/// Distance of the classical code with parity-check matrix `h` (the dual
/// viewpoint): minimum weight of a nonzero kernel vector.
pub fn classical_dual_distance(h: &FMatrix, budget_log2: u32) -> Result<DistanceResult> {
    let res = min_weight_kernel(h, None, budget_log2)?;
    verify_witness(h, None, &res);
    Ok(res)
}

/// Subsystem-code d_Z for gauge matrices (G_X, G_Z): minimum weight over
/// kernel(G_X) \ rowspace(G_Z). Rows need not be orthogonal.
pub fn subsystem_dz(gx: &FMatrix, gz: &FMatrix, budget_log2: u32) -> Result<DistanceResult> {
    if gx.cols() != gz.cols() {
        return Err(Error::DimensionMismatch {
            expected: gx.cols(),
            got: gz.cols(),
        });
    }
    let res = min_weight_kernel(gx, Some(gz), budget_log2)?;
    verify_witness(gx, Some(gz), &res);
    Ok(res)
}

// ---------------------------------------------------------------------------
// randomized information-set search

struct TrialState<'s> {
    p: u8,
    cols: usize,
    basis_bits: Option<&'s [Vec<u64>]>,
    basis_bytes: Option<&'s [Vec<u8>]>,
    space: &'s RowSpace,
    scan_pairs: bool,
}

fn one_trial(st: &TrialState<'_>, seed: u64, trial: u64) -> Option<(u32, u64, Vec<u8>)> {
    let mut rng = SplitMix64::for_stream(seed, trial);
    let mut perm: Vec<usize> = (0..st.cols).collect();
    rng.shuffle(&mut perm);
    // inverse permutation to map reduced rows back to original coordinates
    let mut inv = vec![0usize; st.cols];
    for (i, &c) in perm.iter().enumerate() {
        inv[c] = i;
    }
    let mut best: Option<(u32, Vec<u8>)> = None;
    if st.p == 2 {
        let basis = st.basis_bits.expect("binary basis");
        let mut rows: Vec<Vec<u64>> = basis
            .iter()
            .map(|r| {
                let mut out = vec![0u64; words_for(st.cols)];
                for (i, &c) in perm.iter().enumerate() {
                    if (r[c / 64] >> (c % 64)) & 1 == 1 {
                        out[i / 64] |= 1u64 << (i % 64);
                    }
                }
                out
            })
            .collect();
        let npiv = b2_rref(&mut rows, st.cols).len();
        rows.truncate(npiv);
        let mut scratch = vec![0u64; words_for(st.cols)];
        let mut consider = |permuted: &[u64], best: &mut Option<(u32, Vec<u8>)>| {
            let w: u32 = permuted.iter().map(|x| x.count_ones()).sum();
            if w == 0 || best.as_ref().is_some_and(|(bw, _)| w >= *bw) {
                return;
            }
            // back to original coordinates
            let mut orig = vec![0u64; words_for(st.cols)];
            for c in 0..st.cols {
                if (permuted[inv[c] / 64] >> (inv[c] % 64)) & 1 == 1 {
                    orig[c / 64] |= 1u64 << (c % 64);
                }
            }
            scratch.copy_from_slice(&orig);
            if st.space.contains_packed_scratch(&mut scratch) {
                return;
            }
            *best = Some((w, unpack_bits(&orig, st.cols)));
        };
        for r in &rows {
            consider(r, &mut best);
        }
        if st.scan_pairs {
            for i in 0..rows.len() {
                for j in i + 1..rows.len() {
                    let sum: Vec<u64> = rows[i]
                        .iter()
                        .zip(&rows[j])
                        .map(|(a, b)| a ^ b)
                        .collect();
                    consider(&sum, &mut best);
                }
            }
        }
    } else {
        let f = crate::field::PrimeField::new(st.p as u64).expect("valid");
        let basis = st.basis_bytes.expect("byte basis");
        let mut rows: Vec<Vec<u8>> = basis
            .iter()
            .map(|r| perm.iter().map(|&c| r[c]).collect())
            .collect();
        let npiv = bp_rref(f, &mut rows).len();
        rows.truncate(npiv);
        let consider = |permuted: &[u8], best: &mut Option<(u32, Vec<u8>)>| {
            let w = permuted.iter().filter(|&&x| x != 0).count() as u32;
            if w == 0 || best.as_ref().is_some_and(|(bw, _)| w >= *bw) {
                return;
            }
            let mut orig = vec![0u8; st.cols];
            for c in 0..st.cols {
                orig[c] = permuted[inv[c]];
            }
            let mut scratch = orig.clone();
            if st.space.contains_bytes_scratch(&mut scratch) {
                return;
            }
            *best = Some((w, orig));
        };
        for r in &rows {
            consider(r, &mut best);
        }
        if st.scan_pairs {
            for i in 0..rows.len() {
                for j in i + 1..rows.len() {
                    for c in 1..st.p {
                        let sum: Vec<u8> = rows[i]
                            .iter()
                            .zip(&rows[j])
                            .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                            .collect();
                        consider(&sum, &mut best);
                    }
                }
            }
        }
    }
    best.map(|(w, v)| (w, trial, v))
}

fn merge_trial(
    a: Option<(u32, u64, Vec<u8>)>,
    b: Option<(u32, u64, Vec<u8>)>,
) -> Option<(u32, u64, Vec<u8>)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if (y.0, y.1) < (x.0, x.1) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

fn random_upper_impl(
    hx: &FMatrix,
    hz: &FMatrix,
    trials: u64,
    seed: u64,
    opts: RandomOptions,
    force_sequential: bool,
) -> DistanceResult {
    let kernel = hx.nullspace();
    let space = RowSpace::new(hz);
    let upper = DistanceResult {
        distance: Distance::Infinite,
        mode: DistanceMode::UpperBound,
        trials,
        witness: None,
    };
    if trials == 0 || admissible_empty(&kernel, Some(&space)) {
        return upper;
    }
    let p = hx.field().modulus();
    let (bits, bytes): (Option<Vec<Vec<u64>>>, Option<Vec<Vec<u8>>>) = if p == 2 {
        (
            Some(
                (0..kernel.rows())
                    .map(|i| kernel.packed_row(i).expect("binary").to_vec())
                    .collect(),
            ),
            None,
        )
    } else {
        (
            None,
            Some((0..kernel.rows()).map(|i| kernel.row_entries(i)).collect()),
        )
    };
    let st = TrialState {
        p,
        cols: kernel.cols(),
        basis_bits: bits.as_deref(),
        basis_bytes: bytes.as_deref(),
        space: &space,
        scan_pairs: opts.scan_pairs,
    };
    let best = run_trials(&st, trials, seed, force_sequential);
    match best {
        Some((w, _, wit)) => {
            let res = DistanceResult {
                distance: Distance::Finite(w),
                mode: DistanceMode::UpperBound,
                trials,
                witness: Some(wit),
            };
            verify_witness(hx, Some(hz), &res);
            res
        }
        None => upper,
    }
}

#[cfg(feature = "parallel")]
fn run_trials(
    st: &TrialState<'_>,
    trials: u64,
    seed: u64,
    force_sequential: bool,
) -> Option<(u32, u64, Vec<u8>)> {
    use rayon::prelude::*;
    if force_sequential {
        return (0..trials)
            .map(|t| one_trial(st, seed, t))
            .fold(None, merge_trial);
    }
    (0..trials)
        .into_par_iter()
        .map(|t| one_trial(st, seed, t))
        .reduce(|| None, merge_trial)
}

#[cfg(not(feature = "parallel"))]
fn run_trials(
    st: &TrialState<'_>,
    trials: u64,
    seed: u64,
    _force_sequential: bool,
) -> Option<(u32, u64, Vec<u8>)> {
    (0..trials)
        .map(|t| one_trial(st, seed, t))
        .fold(None, merge_trial)
}

/// Randomized upper bound on d_Z. Deterministic for fixed (seed, trials) and
/// monotone non-increasing in the trial count.
pub fn random_dz_upper(
    hx: &FMatrix,
    hz: &FMatrix,
    trials: u64,
    seed: u64,
    opts: RandomOptions,
) -> DistanceResult {
    random_upper_impl(hx, hz, trials, seed, opts, false)
}

/// Sequential reference path of [`random_dz_upper`]; same result, one thread.
pub fn random_dz_upper_seq(
    hx: &FMatrix,
    hz: &FMatrix,
    trials: u64,
    seed: u64,
    opts: RandomOptions,
) -> DistanceResult {
    random_upper_impl(hx, hz, trials, seed, opts, true)
}

/// Randomized upper bound on d_X (swapped roles).
pub fn random_dx_upper(
    hx: &FMatrix,
    hz: &FMatrix,
    trials: u64,
    seed: u64,
    opts: RandomOptions,
) -> DistanceResult {
    random_upper_impl(hz, hx, trials, seed, opts, false)
}
