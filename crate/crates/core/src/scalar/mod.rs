//! Exact scalar arithmetic: rationals, Gaussian rationals Q(i), and the
//! radical ring spanned by square roots of squarefree positive integers.
//!
//! All values are immutable after construction and all operations are pure.

mod gauss;
pub mod gaussint;
mod radical;
mod rat;

pub use gauss::GaussRat;
pub use radical::{rat_sqrt_lift, squarefree_split, Radical, Sign};
pub use rat::Rat;
