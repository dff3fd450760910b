//! Exact arithmetic and combinatorics for 3-interval exchange transformations.
//!
//! A 3-interval exchange transformation (3iet) cuts an interval into three
//! pieces of lengths α, β, γ and permutes them by translation. Coding the
//! orbit of a point by which piece it visits yields a biinfinite ternary
//! word; when α+β and β+γ are linearly independent over Q the word is
//! aperiodic and is called a 3iet word. This crate provides the
//! transformations themselves, the word and morphism combinatorics on top of
//! them, and the integer matrix monoid E(3,N) that the incidence matrices of
//! 3iet-preserving morphisms live in.
//!
//! Every quantity is represented exactly: interval parameters are elements
//! a + b√d of a real quadratic field with arbitrary-precision rational
//! coordinates, and matrices carry arbitrary-precision integers. No floating
//! point is used anywhere, so interval membership at boundary points is
//! decided exactly.
//!
//! Module map:
//!
//! * [`qfield`] - the number type [`QuadExt`] with parsing, formatting,
//!   exact sign, and the rational-independence test.
//! * [`wordmorph`] - words and index-anchored windows over {A,B,C}, free
//!   monoid morphisms, incidence matrices, Parikh vectors, and the concrete
//!   morphisms ξ and φ_k.
//! * [`iet3`] - the transformations, orbit coding, the periodicity decision,
//!   the reflected system, and the derived transformation used to check that
//!   φ_k preserves 3iet words.
//! * [`e3n`] - the monoid E(3,N): membership, units, the matrix families M_k
//!   and M̃_k, and an exhaustive factorization search.
//! * [`harness`] - end-to-end verification procedures emitting reproducible
//!   reports.
//!
//! All values are immutable and all operations are pure, so everything here
//! may be shared freely across threads.

pub mod e3n;
pub mod harness;
pub mod iet3;
pub mod qfield;
pub mod wordmorph;

pub use e3n::{FactorPair, IntMatrix3, SignedMatrix3};
pub use iet3::{ClosureConvention, DerivedIet, IetParams, OrbitPoint};
pub use qfield::{QuadExt, Rational};
pub use wordmorph::{Letter, Morphism, Window, Word};
