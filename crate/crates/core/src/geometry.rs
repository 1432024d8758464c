//! Plane geometry used by the searches: points, segments and axis-aligned
//! rectangles described by a center and two half-extents.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A directed segment `p0 -> p1`. Searches along it run in the parameter
/// space `[0, 1]`, where `0` maps to `p0` and `1` maps to `p1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub p0: Point2,
    pub p1: Point2,
}

impl Segment {
    pub fn new(p0: Point2, p1: Point2) -> Result<Self, Error> {
        if !p0.is_finite() || !p1.is_finite() || p0 == p1 {
            return Err(Error::DegenerateSegment);
        }
        Ok(Self { p0, p1 })
    }

    pub fn length(&self) -> f64 {
        self.p0.distance(&self.p1)
    }

    /// Point at parameter `t` (not clamped).
    pub fn at(&self, t: f64) -> Point2 {
        Point2 {
            x: self.p0.x + t * (self.p1.x - self.p0.x),
            y: self.p0.y + t * (self.p1.y - self.p0.y),
        }
    }

    pub fn sub_segment(&self, t0: f64, t1: f64) -> Segment {
        Segment {
            p0: self.at(t0),
            p1: self.at(t1),
        }
    }

    pub fn is_axis_aligned(&self) -> bool {
        self.p0.x == self.p1.x || self.p0.y == self.p1.y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub center: Point2,
    pub half_width: f64,
    pub half_height: f64,
}

impl Rect {
    pub fn new(center: Point2, half_width: f64, half_height: f64) -> Result<Self, Error> {
        if !center.is_finite()
            || !(half_width > 0.0 && half_width.is_finite())
            || !(half_height > 0.0 && half_height.is_finite())
        {
            return Err(Error::InvalidParameter(format!(
                "rectangle needs a finite center and positive half-extents, got center {center}, \
                 half extents {half_width} x {half_height}"
            )));
        }
        Ok(Self {
            center,
            half_width,
            half_height,
        })
    }

    pub fn square(center: Point2, half_side: f64) -> Result<Self, Error> {
        Self::new(center, half_side, half_side)
    }

    /// Rectangle spanning `[x0, x1] x [y0, y1]`.
    pub fn from_bounds(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self, Error> {
        Self::new(
            Point2::new((x0 + x1) / 2.0, (y0 + y1) / 2.0),
            (x1 - x0) / 2.0,
            (y1 - y0) / 2.0,
        )
    }

    pub fn unit_square() -> Self {
        Self {
            center: Point2::new(0.5, 0.5),
            half_width: 0.5,
            half_height: 0.5,
        }
    }

    pub fn min_x(&self) -> f64 {
        self.center.x - self.half_width
    }

    pub fn max_x(&self) -> f64 {
        self.center.x + self.half_width
    }

    pub fn min_y(&self) -> f64 {
        self.center.y - self.half_height
    }

    pub fn max_y(&self) -> f64 {
        self.center.y + self.half_height
    }

    pub fn width(&self) -> f64 {
        2.0 * self.half_width
    }

    pub fn height(&self) -> f64 {
        2.0 * self.half_height
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    pub fn is_square(&self) -> bool {
        self.half_width == self.half_height
    }

    pub fn contains(&self, p: &Point2) -> bool {
        p.x >= self.min_x() && p.x <= self.max_x() && p.y >= self.min_y() && p.y <= self.max_y()
    }

    /// Containment with an absolute tolerance on every side.
    pub fn contains_with_slack(&self, p: &Point2, slack: f64) -> bool {
        p.x >= self.min_x() - slack
            && p.x <= self.max_x() + slack
            && p.y >= self.min_y() - slack
            && p.y <= self.max_y() + slack
    }
}

/// Nearest point of `r` to `p`.
pub fn clamp_point(p: Point2, r: &Rect) -> Point2 {
    Point2 {
        x: p.x.clamp(r.min_x(), r.max_x()),
        y: p.y.clamp(r.min_y(), r.max_y()),
    }
}
