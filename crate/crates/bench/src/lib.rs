//! Shared inputs for the criterion benchmarks.

use dedekind::enumeration::enumerate_halfplane;
use dedekind::modular::DedekindSymbol;
use dedekind::rational::{int, ratio};
use dedekind::render::{Model, RenderConfig, Viewport};

/// Every circle with curvature at most `n_max` centred in `[0, 1)`, as symbols.
pub fn unit_window_symbols(n_max: i64) -> Vec<DedekindSymbol> {
    enumerate_halfplane(n_max, &int(0), &int(1))
        .expect("valid window")
        .iter()
        .map(|item| item.to_symbol())
        .collect()
}

pub fn half_plane_config(n_max: i64) -> RenderConfig {
    RenderConfig {
        model: Model::HalfPlane,
        viewport: Viewport::new(int(-2), int(2), int(0), ratio(3, 2)).expect("nonempty"),
        width_px: 800,
        stroke_width: 0.5,
        n_max,
    }
}
