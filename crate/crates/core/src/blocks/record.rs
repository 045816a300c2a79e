use serde::Serialize;

use super::oracle::character_oracle;
use super::space::{block_space, Insertion, WorldSheetSpec};
use crate::error::Result;
use crate::lyubashenko::LyubashenkoCoend;

/// Serializable summary of a block query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockRecord {
    pub algebra: String,
    pub genus: usize,
    pub insertions: Vec<Insertion>,
    pub dimension: usize,
    /// `None` when the oracle does not apply, e.g. for non-semisimple algebras.
    pub oracle_dimension: Option<usize>,
    #[serde(rename = "match")]
    pub matched: bool,
}

pub fn block_record(spec: &WorldSheetSpec, l: &LyubashenkoCoend) -> Result<BlockRecord> {
    let b = block_space(spec, l)?;
    let oracle = character_oracle(spec.algebra(), spec).ok();
    Ok(BlockRecord {
        algebra: spec.algebra().name().to_string(),
        genus: spec.genus(),
        insertions: b.insertion_signature,
        dimension: b.dimension,
        oracle_dimension: oracle,
        matched: oracle.is_none_or(|o| o == b.dimension),
    })
}
