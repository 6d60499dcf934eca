//! Generating tree, counting recurrence and functional equation for
//! pop-stacked permutations.

mod functional;
mod recurrence;
mod tree;

pub use functional::{check_functional_equation, FunctionalEquationReport, MAX_ORDER};
pub use recurrence::{
    addition_cost, count_popstacked, count_popstacked_with, count_table, direct_table, CountTable, Counts,
};
pub use tree::{expand, generate_tree, parent, StateKey};
