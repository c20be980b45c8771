//! A graded commutative-algebra engine: Gröbner bases over prime fields and
//! Q, subquotient module arithmetic, blow-up algebra invariants (fiber cones,
//! analytic spread, reduction numbers, superficial elements), Tor-length
//! polynomials, and machine checks of the statements they feed.

pub mod blowup;
pub mod error;
pub mod field;
pub mod freemod;
pub mod groebner;
pub mod linalg;
pub mod modalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ringspec;
pub mod torpoly;
pub mod verdict;

pub use error::{Error, Result};
