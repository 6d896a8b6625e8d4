use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::invariants::{is_unlink, InvariantError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Unknotting {
    Exact(u32),
    /// No switch set of size at most `n - 1` worked; the budget ran out.
    AtLeast(u32),
}

impl fmt::Display for Unknotting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unknotting::Exact(n) => write!(f, "{n}"),
            Unknotting::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

/// Fewest crossing switches in `word` whose result closes to an unlink,
/// trying every subset of each size in turn, up to `budget` switches.
///
/// The unlink test is the HOMFLYPT certificate of [`is_unlink`].
pub fn unknotting_number(word: &BraidWord, budget: u32) -> Result<Unknotting, InvariantError> {
    let c = word.crossings();
    for m in 0..=(budget as usize).min(c) {
        let found = (0..c).combinations(m).par_bridge().map(|switch| {
            let mut gens = word.gens().to_vec();
            for k in switch {
                gens[k] = gens[k].inverse();
            }
            let w = BraidWord::new(word.strands(), gens).expect("same indices");
            is_unlink(&w)
        });
        if found.find_any(|r| !matches!(r, Ok(false))).transpose()?.is_some() {
            return Ok(Unknotting::Exact(m as u32));
        }
    }
    Ok(Unknotting::AtLeast(budget.min(c as u32) + 1))
}
