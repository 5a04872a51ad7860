//! Exact slope arithmetic, cusp geometry, Seifert and graph manifold data,
//! census ingestion and census-level analytics for exceptional Dehn
//! fillings of one-cusped hyperbolic 3-manifolds.

pub mod analytics;
pub mod census;
pub mod cusp;
pub mod description;
pub mod graph;
pub mod homology;
pub mod seifert;
pub mod slope;
pub mod taxonomy;

pub use census::{load_census, Census, FillingRecord, ManifoldRecord};
pub use cusp::CuspTranslations;
pub use description::{parse_description, render_description, ManifoldDescription};
pub use seifert::SeifertData;
pub use slope::{BasisChange, Slope};
pub use taxonomy::TypeLabel;
