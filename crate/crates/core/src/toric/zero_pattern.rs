use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{dim_err, Error, Result};
use crate::poly::Poly;

/// Largest ambient dimension for which patterns are enumerated exhaustively.
pub const MAX_PATTERN_VARS: usize = 24;

/// A set of coordinates (0-based) set to zero, all others nonzero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZeroPattern {
    pub zero_vars: BTreeSet<usize>,
}

impl ZeroPattern {
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        ZeroPattern { zero_vars: indices.into_iter().collect() }
    }

    /// A generator is compatible with the pattern unless exactly one of its
    /// terms survives. For `t^u − t^v` this means both monomials vanish or
    /// neither does.
    pub fn is_consistent(&self, gens: &[Poly]) -> bool {
        let mask = self.zero_vars.iter().fold(0u64, |m, &i| m | (1 << i));
        gens.iter().all(|g| consistent_mask(&supports(g), mask))
    }
}

fn supports(g: &Poly) -> Vec<u64> {
    g.terms()
        .map(|(e, _)| {
            e.0.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .collect()
}

fn consistent_mask(term_supports: &[u64], mask: u64) -> bool {
    term_supports.iter().filter(|&&s| s & mask == 0).count() != 1
}

/// Inclusion-minimal zero patterns containing `forced` that are compatible
/// with every generator.
///
/// Generators must have at most two terms with non-negative exponents. For
/// pure binomials the result is exact: a pattern is compatible iff some point
/// of the variety has exactly that zero set.
pub fn zero_pattern_set(gens: &[Poly], ambient: usize, forced: usize) -> Result<Vec<ZeroPattern>> {
    if forced >= ambient {
        return Err(Error::Input(format!("forced variable {forced} outside 0..{ambient}")));
    }
    if ambient > MAX_PATTERN_VARS {
        return Err(Error::Input(format!(
            "{ambient} variables exceed the exhaustive pattern limit of {MAX_PATTERN_VARS}"
        )));
    }
    for g in gens {
        if g.nvars() != ambient {
            return Err(dim_err(format!("generator in {} variables, expected {ambient}", g.nvars())));
        }
        if g.num_terms() > 2 || !g.has_nonnegative_exponents() {
            return Err(Error::Input(format!("{} is not a binomial", g.display_with("t"))));
        }
    }
    let sups: Vec<Vec<u64>> = gens.iter().map(supports).collect();
    let forced_bit = 1u64 << forced;
    let others: Vec<usize> = (0..ambient).filter(|&i| i != forced).collect();
    let mut candidates: Vec<u64> = (0u64..1 << others.len())
        .map(|sub| {
            others
                .iter()
                .enumerate()
                .filter(|(k, _)| sub >> k & 1 == 1)
                .fold(forced_bit, |m, (_, &i)| m | (1 << i))
        })
        .collect();
    candidates.sort_by_key(|m| (m.count_ones(), *m));
    let mut minimal: Vec<u64> = Vec::new();
    for mask in candidates {
        if minimal.iter().any(|&m| (m & mask) == m) {
            continue;
        }
        if sups.iter().all(|s| consistent_mask(s, mask)) {
            minimal.push(mask);
        }
    }
    Ok(minimal
        .into_iter()
        .map(|m| ZeroPattern::from_indices((0..ambient).filter(|&i| m >> i & 1 == 1)))
        .collect())
}
