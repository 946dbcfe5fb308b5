//! The inventory of Lorentz and Poincaré r-matrices with their pieces,
//! subordination claims and twist recipes.

mod entries;
mod recipe;

pub use entries::{
    abelian_factor, all_entries, b_helpers, dump_all, entry, jordanian_factors,
    lorentz_complex_pieces, lorentz_r, param, poincare_r, tilde9_r, CatalogEntry, Claim, EntryId,
    Expected, Piece, PieceKind, Plan,
};
pub use recipe::{FactorKind, FactorRecipe, Series, TensorTerm};
