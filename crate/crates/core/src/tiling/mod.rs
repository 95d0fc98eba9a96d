//! Plane-tiling certificates.
//!
//! Two independent kinds of evidence are produced and checked:
//!
//! * a boundary-word factorization `A·B·C·Â·B̂·Ĉ` (Beauquier-Nivat), which
//!   proves that translated copies tile the plane, and
//! * an exact cover of a `w × h` torus by copies of the tile, possibly
//!   rotated or reflected, which lifts to a periodic tiling of the plane.
//!
//! Failure to find either within the search bounds means "unknown", not
//! "does not tile".

mod bn;
mod torus;

pub use bn::{bn_factorize, verify_bn, BnFactorization};
pub(crate) use torus::Torus;
pub use torus::{
    sheared_torus_cover, torus_cover, torus_search, verify_torus, OrientationMode, Placement,
    TorusTiling,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Polygon;

/// Default largest torus side tried by [`tile_any`].
pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TilingCertificate {
    Translation(BnFactorization),
    Periodic(TorusTiling),
}

impl TilingCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            TilingCertificate::Translation(_) => "translation",
            TilingCertificate::Periodic(_) => "periodic",
        }
    }

    pub fn verify(&self, polygon: &Polygon) -> bool {
        match self {
            TilingCertificate::Translation(f) => verify_bn(polygon.steps(), f),
            TilingCertificate::Periodic(t) => verify_torus(polygon, t),
        }
    }

    /// One-line human summary.
    pub fn describe(&self) -> String {
        match self {
            TilingCertificate::Translation(f) => {
                format!("translation (u={:?}, v={:?})", f.u, f.v)
            }
            TilingCertificate::Periodic(t) => {
                let mut used: Vec<u8> = t.placements.iter().map(|p| p.orientation).collect();
                used.sort_unstable();
                used.dedup();
                let shear = if t.shear == 0 {
                    String::new()
                } else {
                    format!(" shear {}", t.shear)
                };
                format!(
                    "periodic {}x{}{} torus, {} placements, orientations {:?}",
                    t.width,
                    t.height,
                    shear,
                    t.placements.len(),
                    used
                )
            }
        }
    }
}

/// Tries a factorization first and falls back to a torus search allowing all
/// eight orientations.
pub fn tile_any(polygon: &Polygon, max_dim: usize) -> Option<TilingCertificate> {
    if let Some(f) = bn_factorize(polygon.steps()) {
        return Some(TilingCertificate::Translation(f));
    }
    match torus_search(polygon, max_dim, OrientationMode::All8) {
        Ok(Some(t)) => Some(TilingCertificate::Periodic(t)),
        _ => None,
    }
}
