//! Ground sets, families and Venn regions.

mod family;
mod mask;
mod regions;

pub use family::Family;
pub use mask::{ground_bits, splits, splits_bits, SubsetMask, MAX_GROUND};
pub use regions::{
    family_from_regions, region_layout_order, venn_decompose, Arrangement2, RegionVector,
    VennDecomposition, MAX_VENN_SETS,
};

pub(crate) use regions::all_permutations;
