//! Scalar bisection and line-search helpers shared by the fast-path solvers.
//!
//! Everything here operates on plain closures; the geometric reasoning that
//! justifies monotonicity or local unimodality lives at the call sites.

/// Locate the boundary of a monotone predicate on `[lo, hi]` by bisection.
///
/// Pre: `p(lo) != p(hi)` and `p` flips exactly once. Returns the midpoint of
/// the final bracket, which is within `tol` of the flip.
pub(crate) fn predicate_boundary(
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
    p: impl Fn(f64) -> bool,
) -> f64 {
    let side = p(lo);
    let (mut lo, mut hi) = (lo, hi);
    let mut iters = 0;
    while hi - lo > tol && iters < max_iter {
        let mid = 0.5 * (lo + hi);
        if p(mid) == side {
            lo = mid;
        } else {
            hi = mid;
        }
        iters += 1;
    }
    0.5 * (lo + hi)
}

/// Golden-section maximization on `[a, b]`; returns `(argmax, max)`.
///
/// Exact for unimodal `f`; otherwise converges to some local maximum, which
/// is all the sweep refinements need (the surrounding grid isolates basins).
pub(crate) fn golden_max(a: f64, b: f64, iters: usize, f: impl Fn(f64) -> f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

pub(crate) fn golden_min(a: f64, b: f64, iters: usize, f: impl Fn(f64) -> f64) -> (f64, f64) {
    let (t, v) = golden_max(a, b, iters, |t| -f(t));
    (t, -v)
}

/// How many of the best local-extremum cells a sweep refines. Refining a few
/// cells instead of one keeps distinct near-optimal basins honest without a
/// measurable cost.
const REFINE_CELLS: usize = 8;

/// Sample `f` on `n` points of the cyclic interval `[lo, hi)`, refine every
/// local maximum cell by golden section, and return `(argmax, max)`.
pub(crate) fn cyclic_sweep_max(
    lo: f64,
    hi: f64,
    n: usize,
    iters: usize,
    f: impl Fn(f64) -> f64,
) -> (f64, f64) {
    let n = n.max(4);
    let step = (hi - lo) / n as f64;
    let ts: alloc::vec::Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
    let vs: alloc::vec::Vec<f64> = ts.iter().map(|&t| f(t)).collect();

    let mut cells: alloc::vec::Vec<(f64, usize)> = (0..n)
        .filter(|&i| {
            let prev = vs[(i + n - 1) % n];
            let next = vs[(i + 1) % n];
            vs[i] >= prev && vs[i] >= next
        })
        .map(|i| (vs[i], i))
        .collect();
    cells.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
    cells.truncate(REFINE_CELLS);

    let mut best = (ts[0], vs[0]);
    for &(v, i) in &cells {
        if v > best.1 {
            best = (ts[i], v);
        }
        let (t, fv) = golden_max(ts[i] - step, ts[i] + step, iters, &f);
        if fv > best.1 {
            best = (t, fv);
        }
    }
    best
}

pub(crate) fn cyclic_sweep_min(
    lo: f64,
    hi: f64,
    n: usize,
    iters: usize,
    f: impl Fn(f64) -> f64,
) -> (f64, f64) {
    let (t, v) = cyclic_sweep_max(lo, hi, n, iters, |t| -f(t));
    (t, -v)
}

/// Non-cyclic variant on the closed interval `[lo, hi]` (n+1 samples,
/// endpoints included), minimizing. Used for per-edge parameter sweeps.
pub(crate) fn segment_sweep_min(
    lo: f64,
    hi: f64,
    n: usize,
    iters: usize,
    f: impl Fn(f64) -> f64,
) -> (f64, f64) {
    let n = n.max(2);
    let step = (hi - lo) / n as f64;
    let ts: alloc::vec::Vec<f64> = (0..=n).map(|i| lo + step * i as f64).collect();
    let vs: alloc::vec::Vec<f64> = ts.iter().map(|&t| f(t)).collect();

    let mut cells: alloc::vec::Vec<(f64, usize)> = (0..=n)
        .filter(|&i| {
            let left_ok = i == 0 || vs[i] <= vs[i - 1];
            let right_ok = i == n || vs[i] <= vs[i + 1];
            left_ok && right_ok
        })
        .map(|i| (vs[i], i))
        .collect();
    cells.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(core::cmp::Ordering::Equal));
    cells.truncate(REFINE_CELLS);

    let mut best = (ts[0], vs[0]);
    for &(v, i) in &cells {
        if v < best.1 {
            best = (ts[i], v);
        }
        let a = if i == 0 { lo } else { ts[i - 1] };
        let b = if i == n { hi } else { ts[i + 1] };
        let (t, fv) = golden_min(a, b, iters, &f);
        if fv < best.1 {
            best = (t, fv);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_boundary_finds_threshold() {
        let b = predicate_boundary(0.0, 1.0, 1e-12, 200, |t| t < 0.3125);
        assert!((b - 0.3125).abs() < 1e-11);
    }

    #[test]
    fn golden_finds_parabola_vertex() {
        let (t, v) = golden_max(-1.0, 2.0, 80, |t| 1.0 - (t - 0.7) * (t - 0.7));
        // Argument precision at a smooth maximum is limited to about the
        // square root of machine epsilon; the value itself is exact.
        assert!((t - 0.7).abs() < 1e-6);
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cyclic_sweep_handles_wraparound_maximum() {
        // Maximum at t = 0.05, close to the seam of the cyclic interval.
        let f = |t: f64| (core::f64::consts::PI * (t - 0.05)).cos().abs();
        let (t, v) = cyclic_sweep_max(0.0, 1.0, 64, 80, f);
        assert!((v - 1.0).abs() < 1e-10);
        assert!((t - 0.05).abs() < 1e-5 || (t - 1.05).abs() < 1e-5);
    }

    #[test]
    fn segment_sweep_checks_endpoints() {
        let (t, v) = segment_sweep_min(0.0, 1.0, 16, 60, |t| t * t + 0.25 * t);
        assert_eq!(t, 0.0);
        assert_eq!(v, 0.0);
    }
}
