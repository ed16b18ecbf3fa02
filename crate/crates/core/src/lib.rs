//! Stack sorting, reversal, and the bijection `P: Av(231) → Av(132)`.
//!
//! Permutations are one-line words over `1..=n`. Operators are words in `S`
//! (stack sorting) and `R` (reversal) with the leftmost letter applied last.
//! Preimages under `S` are computed through decreasing binary trees; the
//! [`analysis`] module checks, exhaustively up to a size bound, that
//! `S ∘ A` and `S ∘ R ∘ A` sort equally many permutations and that
//! `Φ_A(θ) = λ_{A(θ)} ∘ θ` carries one set onto the other.
//!
//! ```
//! use stacksort::{apply_p, perm, OperatorExpr};
//!
//! let a: OperatorExpr = "S∘R∘S".parse().unwrap();
//! assert_eq!(a.apply(&perm![2, 1, 3]), perm![1, 2, 3]);
//! assert_eq!(apply_p(&perm![1, 3, 2]).unwrap(), perm![2, 3, 1]);
//! ```

pub mod analysis;
pub mod bijection;
pub mod error;
pub mod operators;
pub mod pattern;
pub mod perm;
pub mod preimage;
pub mod series;
pub mod stats;
pub mod tree;
pub mod wilf;

pub use analysis::{
    count_sorted, sorted_set, sorted_set_budgeted, sorted_set_by_filter, verify_respects_p,
    verify_theorem, Counterexample, ReportKind, StatCheck, VerificationReport, DEFAULT_NODE_BUDGET,
};
pub use bijection::{apply_p, apply_p_inverse, lambda_of, phi, Relabeling};
pub use error::{Error, Result};
pub use operators::{Op, OperatorExpr};
pub use pattern::{avoids, avoids_all, contains, enumerate, enumerate_avoiders};
pub use perm::Permutation;
pub use preimage::{
    apply_s, canonical_tree, count_preimages_s, in_image_s, preimages_s, star_expansions,
    trees_with_postorder,
};
pub use series::PowerSeries;
pub use stats::{rzeil, stats, zeil, StatVector, Statistic};
pub use tree::{post_order, tin, DecreasingTree, TreeShape};
pub use wilf::{
    check_class_gf, check_wilf_pair, classify_patterns, lambda_family, p_bijects_classes,
    rho_family, series_f, wedge_pattern,
};
