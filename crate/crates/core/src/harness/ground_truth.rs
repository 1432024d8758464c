use crate::functions::TestFunction;
use crate::geometry::{Point2, Rect, Segment};
use crate::grm::{INV_PHI, INV_PHI_SQ};

/// Minimum of `f` over the `(grid_n + 1)^2` lattice spanning `region`,
/// corners included. For an `M`-Lipschitz function the lattice value is at
/// most `M * diam / grid_n` above the true minimum over the region.
pub fn brute_force_min(f: &TestFunction, region: &Rect, grid_n: usize) -> (Point2, f64) {
    let n = grid_n.max(2);
    let mut best = (region.center, f64::INFINITY);
    for i in 0..=n {
        let x = region.min_x() + region.width() * (i as f64 / n as f64);
        for j in 0..=n {
            let y = region.min_y() + region.height() * (j as f64 / n as f64);
            let p = Point2::new(x, y);
            let v = f.eval(p);
            if v < best.1 {
                best = (p, v);
            }
        }
    }
    best
}

/// Minimum of `f` over `grid_n + 1` equally spaced points of `segment`,
/// returned as `(parameter, value)`.
pub fn brute_force_segment_min(f: &TestFunction, segment: &Segment, grid_n: usize) -> (f64, f64) {
    let n = grid_n.max(2);
    (0..=n)
        .map(|i| {
            let t = i as f64 / n as f64;
            (t, f.eval(segment.at(t)))
        })
        .fold((0.0, f64::INFINITY), |best, cur| {
            if cur.1 < best.1 {
                cur
            } else {
                best
            }
        })
}

/// Minimum of a function that is convex along `segment`: lattice search,
/// then value-based golden-section refinement inside the bracketing cells.
pub fn segment_min(f: &TestFunction, segment: &Segment, grid_n: usize) -> f64 {
    let n = grid_n.max(2);
    let (t_best, v_best) = brute_force_segment_min(f, segment, n);
    let h = 1.0 / n as f64;
    let (mut lo, mut hi) = ((t_best - h).max(0.0), (t_best + h).min(1.0));
    let g = |t: f64| f.eval(segment.at(t));
    let mut s = lo + (hi - lo) * INV_PHI_SQ;
    let mut t = lo + (hi - lo) * INV_PHI;
    let (mut fs, mut ft) = (g(s), g(t));
    for _ in 0..200 {
        if fs < ft {
            hi = t;
            t = s;
            ft = fs;
            s = lo + (hi - lo) * INV_PHI_SQ;
            fs = g(s);
        } else {
            lo = s;
            s = t;
            fs = ft;
            t = lo + (hi - lo) * INV_PHI;
            ft = g(t);
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    v_best.min(fs).min(ft).min(g(0.5 * (lo + hi)))
}
