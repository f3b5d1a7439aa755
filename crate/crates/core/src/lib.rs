//! Boolean functions as Zhegalkin polynomials, with a small differential
//! and integral calculus over GF(2).
//!
//! * [`ZhegalkinPoly`]: canonical ANF with ring operations, cofactors and
//!   truth-table conversion through the binary Möbius transform.
//! * [`ZhegalkinPoly::partial`], [`SecantElement`], [`differential`]: the
//!   secants `∂_i`, the secant space they span, and `df = Σ ∂_i(f) d_i`.
//! * [`KForm`]: k-forms with the (commutative) wedge product and the
//!   exterior derivative, which squares to zero.
//! * [`integrate`]: integrals over the Hamming cube and its faces, and the
//!   check `∫_{H^n} dω = ∫_{∂H^n} ω`.
//!
//! ```
//! use zhegalkin::{expr_to_anf, parse_form, integrate::stokes_check};
//!
//! let or = expr_to_anf("x1 | x2", 2)?;
//! assert_eq!(or.to_string(), "x1 + x2 + x1*x2");
//! assert_eq!(or.partial(1)?.to_string(), "1 + x2");
//!
//! let omega = parse_form("(x2)*d{1}", 2)?;
//! let report = stokes_check(&omega)?;
//! assert!(report.pass);
//! # Ok::<(), zhegalkin::Error>(())
//! ```

pub mod anf;
pub mod cube;
pub mod error;
pub mod expr;
pub mod forms;
pub mod integrate;
pub mod secant;
pub mod table;
pub mod text;

pub use anf::{Monomial, ZhegalkinPoly};
pub use cube::{all_faces, cube_vertices, face_vertices, Face, Vertex, MAX_ARITY};
pub use error::{Error, ParseError, Result};
pub use expr::{expr_to_anf, parse_expr, Expr};
pub use forms::{index_sets, slot_count, IndexSet, KForm};
pub use integrate::{
    integrate_boundary, integrate_face, integrate_monomial_form, integrate_top, stokes_check,
    stokes_sweep, StokesReport, Support, SweepMode, SweepSummary,
};
pub use secant::{differential, pair, SecantElement};
pub use table::{bench_transform, moebius_transform, BenchReport, TruthTable, MAX_TABLE_ARITY};
pub use text::{parse_anf, parse_form, parse_secant, parse_table};

// The guide's code listings run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/secants.md")]
    mod secants {}
    #[doc = include_str!("../../../book/src/forms.md")]
    mod forms {}
    #[doc = include_str!("../../../book/src/integration.md")]
    mod integration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
