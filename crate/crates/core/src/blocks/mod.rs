//! Block spaces of world sheets, sewing, and a character-theoretic cross-check.
mod oracle;
mod record;
mod sewing;
mod space;

pub use oracle::{character, character_oracle, coadjoint_character, dual_character, normalized_integral, product_character};
pub use record::{block_record, BlockRecord};
pub use sewing::{self_sew, sew_genus0, SelfSewReport, SewingReport};
pub use space::{block_space, genus0_blocks, BlockResult, Insertion, Orientation, WorldSheetSpec};

#[cfg(test)]
mod tests;
