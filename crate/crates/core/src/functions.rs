//! Convex test functions with declared Lipschitz constants.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Point2, Rect, Segment};

type Eval = dyn Fn(Point2) -> f64 + Send + Sync;

/// A convex function on a rectangular domain together with the constants
/// the budgets need: `m` bounds the value slope, `l` the gradient slope and
/// `mu`, when present, the strong-convexity curvature.
#[derive(Clone)]
pub struct TestFunction {
    pub id: String,
    eval: Arc<Eval>,
    pub m: f64,
    pub l: f64,
    pub mu: Option<f64>,
    pub domain: Rect,
    pub analytic_min: Option<(Point2, f64)>,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("id", &self.id)
            .field("m", &self.m)
            .field("l", &self.l)
            .field("mu", &self.mu)
            .field("domain", &self.domain)
            .field("analytic_min", &self.analytic_min)
            .finish_non_exhaustive()
    }
}

impl TestFunction {
    pub fn new<F>(
        id: impl Into<String>,
        eval: F,
        m: f64,
        l: f64,
        mu: Option<f64>,
        domain: Rect,
    ) -> Self
    where
        F: Fn(Point2) -> f64 + Send + Sync + 'static,
    {
        Self {
            id: id.into(),
            eval: Arc::new(eval),
            m,
            l,
            mu,
            domain,
            analytic_min: None,
        }
    }

    pub fn with_min(mut self, at: Point2, value: f64) -> Self {
        self.analytic_min = Some((at, value));
        self
    }

    pub fn eval(&self, p: Point2) -> f64 {
        (self.eval)(p)
    }

    /// Side length of the domain; the domain is expected to be square.
    pub fn side(&self) -> f64 {
        self.domain.width()
    }

    /// The one-dimensional restriction `t -> f(segment(t))`, `t` in `[0, 1]`.
    pub fn along(&self, segment: Segment) -> impl Fn(f64) -> f64 + '_ {
        move |t| self.eval(segment.at(t))
    }

    /// Horizontal midline of the domain, the default line for 1-D runs.
    pub fn midline(&self) -> Segment {
        let d = &self.domain;
        Segment {
            p0: Point2::new(d.min_x(), d.center.y),
            p1: Point2::new(d.max_x(), d.center.y),
        }
    }
}

/// Central-difference gradient with step `h`.
pub fn numeric_gradient(f: &TestFunction, p: Point2, h: f64) -> (f64, f64) {
    let gx = (f.eval(Point2::new(p.x + h, p.y)) - f.eval(Point2::new(p.x - h, p.y))) / (2.0 * h);
    let gy = (f.eval(Point2::new(p.x, p.y + h)) - f.eval(Point2::new(p.x, p.y - h))) / (2.0 * h);
    (gx, gy)
}

fn corners(r: &Rect) -> [Point2; 4] {
    [
        Point2::new(r.min_x(), r.min_y()),
        Point2::new(r.min_x(), r.max_y()),
        Point2::new(r.max_x(), r.min_y()),
        Point2::new(r.max_x(), r.max_y()),
    ]
}

/// `cx (x - x0)^2 + cy (y - y0)^2` on `domain`, with exact constants.
///
/// The gradient norm is convex, so its maximum over the domain is attained
/// at a corner.
pub fn separable_quadratic(
    id: impl Into<String>,
    cx: f64,
    cy: f64,
    center: Point2,
    domain: Rect,
) -> TestFunction {
    let m = corners(&domain)
        .iter()
        .map(|c| (2.0 * cx * (c.x - center.x)).hypot(2.0 * cy * (c.y - center.y)))
        .fold(0.0, f64::max);
    let l = 2.0 * cx.max(cy);
    let mu = 2.0 * cx.min(cy);
    let min_at = crate::geometry::clamp_point(center, &domain);
    let value = cx * (min_at.x - center.x).powi(2) + cy * (min_at.y - center.y).powi(2);
    TestFunction::new(
        id,
        move |p: Point2| cx * (p.x - center.x).powi(2) + cy * (p.y - center.y).powi(2),
        m,
        l,
        (mu > 0.0).then_some(mu),
        domain,
    )
    .with_min(min_at, value)
}

/// `c (x - x0)^2` on the unit square: a one-dimensional function seen
/// through the 2-D interface.
pub fn quadratic_x(id: impl Into<String>, c: f64, x0: f64) -> TestFunction {
    let m = 2.0 * c * x0.max(1.0 - x0);
    TestFunction::new(
        id,
        move |p: Point2| c * (p.x - x0).powi(2),
        m,
        2.0 * c,
        None,
        Rect::unit_square(),
    )
    .with_min(Point2::new(x0, 0.5), 0.0)
}

/// `ln(e^x + e^y)` on the unit square.
pub fn log_sum_exp() -> TestFunction {
    TestFunction::new(
        "lse",
        |p: Point2| {
            let hi = p.x.max(p.y);
            hi + (-(p.x - p.y).abs()).exp().ln_1p()
        },
        1.0,
        0.5,
        None,
        Rect::unit_square(),
    )
    .with_min(Point2::new(0.0, 0.0), std::f64::consts::LN_2)
}

/// Convex negation of a concave preference bump on `[1, 4]^2` with its
/// peak at `(2.3, 2.7)`. Minimizing it maximizes the preference
/// `1 - 0.5 (x - 2.3)^2 - (y - 2.7)^2`.
pub fn preference_surface() -> TestFunction {
    let domain = Rect::from_bounds(1.0, 4.0, 1.0, 4.0).expect("static domain");
    let q = separable_quadratic("pref", 0.5, 1.0, Point2::new(2.3, 2.7), domain);
    let (at, value) = q.analytic_min.expect("quadratic has a minimum");
    let (m, l, mu) = (q.m, q.l, q.mu);
    TestFunction::new("pref", move |p| q.eval(p) - 1.0, m, l, mu, domain).with_min(at, value - 1.0)
}

pub fn builtin_functions() -> Vec<TestFunction> {
    let unit = Rect::unit_square();
    vec![
        separable_quadratic("quad", 1.0, 1.0, Point2::new(0.3, 0.6), unit),
        separable_quadratic("aniso", 4.0, 1.0, Point2::new(0.5, 0.5), unit),
        log_sum_exp(),
        quadratic_x("quad-x", 1.0, 0.3),
        preference_surface(),
    ]
}

/// Builtin ids plus the random families accepted by [`resolve`].
pub fn builtin_ids() -> Vec<String> {
    let mut ids: Vec<String> = builtin_functions().into_iter().map(|f| f.id).collect();
    ids.push("random-quad".into());
    ids.push("random-quad-x".into());
    ids
}

pub fn builtin(id: &str) -> Option<TestFunction> {
    builtin_functions().into_iter().find(|f| f.id == id)
}

/// Random separable quadratic on the unit square with curvatures in
/// `[0.5, 2]` per axis and its minimizer in `[0.05, 0.95]^2`.
pub fn random_quadratic(seed: u64) -> TestFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cx = rng.gen_range(0.5..=2.0);
    let cy = rng.gen_range(0.5..=2.0);
    let center = Point2::new(rng.gen_range(0.05..=0.95), rng.gen_range(0.05..=0.95));
    separable_quadratic("random-quad", cx, cy, center, Rect::unit_square())
}

/// Random `c (x - x0)^2` with `c` in `[0.5, 2]` and `x0` in `[0, 1]`.
pub fn random_quadratic_x(seed: u64) -> TestFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = rng.gen_range(0.5..=2.0);
    let x0 = rng.gen_range(0.0..=1.0);
    quadratic_x("random-quad-x", c, x0)
}

/// Resolves a builtin id or a random family member for `seed`.
pub fn resolve(id: &str, seed: u64) -> Option<TestFunction> {
    match id {
        "random-quad" => Some(random_quadratic(seed)),
        "random-quad-x" => Some(random_quadratic_x(seed)),
        _ => builtin(id),
    }
}
