//! Exact engine for base-3 representations over the digits {0,1,2,3}.

pub mod cylinder;
pub mod repr;
pub mod rewrite;
pub mod string;

pub use cylinder::{cylinder_interval, cylinder_overlap, Cylinder};
pub use repr::{
    admissible_prefixes, classify_cardinality, count_admissible_prefixes,
    enumerate_representations, ReprCardinality,
};
pub use rewrite::{apply_rewrite, rewrite_sites, RewriteRule, RewriteSite, RULES};
pub use string::{parse, Digit, DigitString};
