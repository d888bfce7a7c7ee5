//! Solver and cross-checker for Wythoff's game played to a terminal set.
//!
//! The queen moves toward `(0,0)` and the game ends once it enters
//! `{(x, y) : x + y ≤ t}`. With `t = 0` this is classical Wythoff; with `t = 2`
//! the P-positions are shifted Wythoff pairs controlled by a 0/1 function built
//! from Hofstadter's G-sequence.
//!
//! * [`beatty`]: exact lower and upper Wythoff sequences.
//! * [`hofstadter`]: the G-sequence and both evaluations of the shift function `g`.
//! * [`rules`]: positions, rulesets, and move generation.
//! * [`solver`]: retrograde outcome and Grundy tables.
//! * [`closedform`]: closed-form P-position sets.
//! * [`verify`]: exhaustive cross-checks of closed forms against the solver.
//! * [`cli`]: the `wythoff` command-line front end.

pub mod beatty;
pub mod cli;
pub mod closedform;
pub mod hofstadter;
pub mod rules;
pub mod solver;
pub mod verify;

pub use beatty::{lower_wythoff, upper_wythoff, SequenceError, SequenceIndex};
pub use rules::{Convention, Position, Ruleset, SumPosition};
pub use solver::{Outcome, SolverError};
