// SPDX-License-Identifier: Apache-2.0

//! NPN Boolean matching through canonical forms.
//!
//! Two single-output, completely specified functions are NPN-equivalent when
//! one becomes the other under some input permutation, input negation and
//! output negation. [`canon::canonical_form`] maps every member of an
//! equivalence class to the same representative: the member whose
//! Boolean-difference-and-cofactor (DC) signature vector is largest. The
//! search is guided by the signatures themselves, by symmetric and
//! independent variables, and falls back to branching only on ties.
//!
//! [`oracle`] holds exhaustive reference implementations for small arities
//! and [`cli`] the `npn-dc` command-line front end.
//!
//! ```
//! use npn_dc::{canonical_form, match_functions, Mode, TruthTable};
//!
//! # fn main() -> npn_dc::Result<()> {
//! let f = TruthTable::from_hex("e8", 3)?; // majority
//! let r = canonical_form(&f, Mode::Dc)?;
//! assert_eq!(f.apply_transform(&r.transform())?, r.canonical_table);
//!
//! let g = TruthTable::from_hex("d4", 3)?; // majority with x1 inverted
//! let t = match_functions(&f, &g, Mode::Dc)?.expect("equivalent");
//! assert_eq!(f.apply_transform(&t)?, g);
//! # Ok(())
//! # }
//! ```

pub mod analysis;
pub mod canon;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod random;
pub mod signature;
pub mod truthtable;

pub use canon::{canonical_form, match_functions, Candidate, CanonResult};
pub use error::{Error, Result};
pub use signature::{DcValue, Mode};
pub use truthtable::{Cube, Literal, NpTransform, TruthTable};
