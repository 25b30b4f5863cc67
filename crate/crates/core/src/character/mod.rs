//! Character values `χ^λ[ν]` of the symmetric group.
//!
//! Straight shapes go through [`ClassEvaluator`], which removes rim hooks on
//! beta-sets and memoizes per class. Skew and disconnected shapes use a direct
//! border-strip recursion ([`mn_skew_char`]).

mod decompose;
mod mn;
mod skew;
mod table;

pub use decompose::{frobenius_two_row, giambelli_durfee2, jacobi_trudi_rows, GiambelliTerms, SkewCombination};
pub use mn::{mn_char, rim_hook_tableaux_count, ClassEvaluator};
pub(crate) use skew::border_strips;
pub use skew::{mn_skew_char, SkewShape};
pub use table::{char_rows, char_table, has_shared_table, install_table, shared_table, CharTable};
