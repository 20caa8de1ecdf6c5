pub mod bipoly;
pub mod circle;
pub mod error;
pub mod expr;
pub mod intfactor;
pub mod json;
pub mod realalg;
pub mod resultant;
pub mod ring;
pub mod sturm;
pub mod upoly;
