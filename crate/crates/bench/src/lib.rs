//! Shared fixtures for the benchmarks.

use dichotomy_core::functions::separable_quadratic;
use dichotomy_core::{Point2, Rect, Segment, TestFunction};

pub fn bench_function() -> TestFunction {
    separable_quadratic(
        "bench",
        2.0,
        1.0,
        Point2::new(0.37, 0.61),
        Rect::unit_square(),
    )
}

pub fn bench_segment() -> Segment {
    Segment::new(Point2::new(0.0, 0.61), Point2::new(1.0, 0.61)).expect("non-degenerate")
}
