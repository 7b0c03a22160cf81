//! Instance generators: SAT reductions, exponential-size families, random
//! bounded instances, and a brute-force SAT oracle.

mod cnf;
mod random;
mod reductions;

pub use cnf::{brute_sat, parse_dimacs, random_cnf, Cnf};
pub use random::{random_instance, MAX_POINTS};
pub use reductions::{expfamily, satgen, ExpFamily, SatTarget};
