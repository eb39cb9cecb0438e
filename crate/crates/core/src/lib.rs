//! Codes for permutations, flagged ribbon functions and the
//! equidistribution of sorted codes over descent classes.
//!
//! ```
//! use permcode::{s_code, Permutation};
//!
//! let p: Permutation = "31542".parse().unwrap();
//! assert_eq!(s_code(&p).to_string(), "32010");
//! ```

pub mod codes;
pub mod error;
pub mod flagged;
pub mod lequiv;
pub mod perm;
pub mod poly;
pub mod trees;
pub mod verify;

pub use codes::{
    generic_decode, generic_encode, inv_code, inv_decode, is_acceptable, lehmer_code,
    lehmer_decode, maj_code, maj_decode, s_code, s_decode, tau_i, tau_m, tau_s, Acceptability,
    CodeFamily, SubDiagonalCode, TauPermutation,
};
pub use error::{Error, Result};
pub use flagged::{h_flagged, h_product, ribbon_determinant, ribbon_flagged};
pub use lequiv::{class_max, class_min, l_adjacent, l_class, LClass};
pub use perm::{
    coarser_class, compositions_of, descent_class, shifted_shuffle, shuffle, standardize,
    Composition, Permutation, Word,
};
pub use poly::{Monomial, Polynomial};
pub use trees::{perm_to_tree, tree_to_perm, LabeledTree, PlaneTree, TreeSeries};
pub use verify::{verify, Check, VerificationReport, VerifyConfig};
