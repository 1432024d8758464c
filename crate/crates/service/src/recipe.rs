//! Mapping from search coordinates to drink recipes.
//!
//! Both coordinates live on a logarithmic scale over `[1, 4]`: the first
//! sets the citric-acid mass fraction `0.05% * 3^x`, the second the sugar
//! mass fraction `2% * 2^y`.

use dichotomy_core::{Point2, Rect};
use serde::{Deserialize, Serialize};

use crate::error::ServiceError;

pub const CITRIC_BASE_PCT: f64 = 0.05;
pub const SUGAR_BASE_PCT: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Recipe {
    pub citric_acid_pct: f64,
    pub sugar_pct: f64,
}

pub fn recipe_domain() -> Rect {
    Rect::from_bounds(1.0, 4.0, 1.0, 4.0).expect("static domain")
}

pub fn point_to_recipe(p: Point2) -> Result<Recipe, ServiceError> {
    if !recipe_domain().contains(&p) {
        return Err(ServiceError::InvalidInput(format!(
            "point {p} is outside the recipe domain [1, 4] x [1, 4]"
        )));
    }
    Ok(Recipe {
        citric_acid_pct: CITRIC_BASE_PCT * 3f64.powf(p.x),
        sugar_pct: SUGAR_BASE_PCT * 2f64.powf(p.y),
    })
}

impl Recipe {
    /// Inverse of [`point_to_recipe`].
    pub fn to_point(&self) -> Point2 {
        Point2::new(
            (self.citric_acid_pct / CITRIC_BASE_PCT).ln() / 3f64.ln(),
            (self.sugar_pct / SUGAR_BASE_PCT).log2(),
        )
    }
}
