//! Scanline words, the run-word automata and their generating functions.

mod dfa;
mod gf;
mod word;

pub use dfa::{build_ak, minimized_recurrence_report, state_count, Dfa, MinimizedRow, StateLabel};
pub use gf::{count_words, count_words_upto, dfa_to_gf};
pub use word::{scanline, scanline_inverse, Word};
