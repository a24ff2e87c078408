//! Exact Kazhdan–Lusztig machinery for the type-Bₙ Iwahori–Hecke algebra with
//! unequal parameters in the asymptotic regime b > (n−1)a > 0.
//!
//! The crate computes, over exact Laurent-polynomial arithmetic:
//!
//! * the Kazhdan–Lusztig bases C′, C and the dual basis D, together with the
//!   structure constants h and the left/right/two-sided cell partitions;
//! * the generalized Robinson–Schensted correspondence on signed permutations
//!   and the bipartition combinatorics behind it;
//! * seminormal matrix representations, Schur elements and the table of
//!   leading matrix coefficients;
//! * the a-function, both from the h-tensor and from the closed shape formula,
//!   the distinguished involutions, and the γ-constants;
//! * the asymptotic ring J and its matrix-block decomposition;
//! * machine verification of the conjectural properties P1–P15, cell
//!   cross-checks and the dominance-ideal comparison.
//!
//! See the `book/` directory for a guided tour; its code snippets are compiled
//! as doctests below so the guide cannot drift from the API.

pub mod afun;
pub mod gamma;
pub mod jring;
pub mod kl;
pub mod linalg;
pub mod perm;
pub mod seminormal;
pub mod tableau;
pub mod verify;

// Compile the book's code snippets as doctests so the guide stays in sync
// with the API; `cargo test --doc` runs every chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/signed-permutations.md")]
    mod signed_permutations {}
    #[doc = include_str!("../../../book/src/rs.md")]
    mod rs {}
    #[doc = include_str!("../../../book/src/kl-basis.md")]
    mod kl_basis {}
    #[doc = include_str!("../../../book/src/a-function.md")]
    mod a_function {}
    #[doc = include_str!("../../../book/src/seminormal.md")]
    mod seminormal_chapter {}
    #[doc = include_str!("../../../book/src/jring.md")]
    mod jring_chapter {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
