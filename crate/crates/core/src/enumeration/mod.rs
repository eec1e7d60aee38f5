//! Exact counting machinery: Bell and Fibonacci numbers, the invertibility
//! triangle and its three independent evaluation routes (boundary
//! recurrence, convolution recurrence, matrix solve), convolved Fibonacci
//! numbers, and truncated-series verification of the generating-function
//! identities. All arithmetic is arbitrary precision; nothing rounds.

mod counts;
mod matrix;
mod series;

pub use counts::{
    bell, bell_sequence, convolution_triangle, convolved_fibonacci, fibonacci,
    fibonacci_sequence, totals_by_convolution, CountTable,
};
pub use matrix::{
    convolution_matrix, inverse_matrix, neumann_check, rhs_vector, solve_counts, LowerTriangular,
};
pub use series::{
    count_generating_function, functional_equation_check, kernel_equation_check,
    kernel_root_series, refined_generating_function, BivariateSeries, Series, SeriesError,
};

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
