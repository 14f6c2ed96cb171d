//! Small exact polynomial-system solver: lex Buchberger, elimination,
//! shape-position point counting, and the special-bidiagonal censuses.

mod census;
mod multipoly;

pub use census::{
    bidiagonal_impossibility_n4, count_points, count_points_with_retries, even_special_census,
    jacobi_charpoly, odd_special_census, verify_on_variety, CensusReport, CountReport,
    ImpossibilityReport, PatternCase,
};
pub use multipoly::{
    buchberger, eliminant, is_zero_dimensional, reduce, s_poly, MultiPoly, SolverBudget,
};
