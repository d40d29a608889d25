//! Compact command-line notation for free products, e.g. `C2*C3*F1` or
//! `[S2:-2]*[S2:-2]`.
//!
//! Factors are separated by `*`:
//!
//! * `Cn`: cyclic group of order `n`
//! * `Sn`: symmetric group on `n` points
//! * `Dn`: dihedral group of order `2n` (`n ≥ 3`)
//! * `Fr`: free group of rank `r` (ranks add up)
//! * `[name:rho]`: abstract one-ended factor with exact `ρ`, e.g. `[S2:-2]`
//! * `1`: the trivial group (ignored)

use thiserror::Error;

use crate::free_product::{Factor, FreeProductError, Presentation};
use crate::perm::FinitePermGroup;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotationError {
    #[error("cannot parse factor {0:?}")]
    BadFactor(String),
    #[error("group {0} exceeds the order bound {1}")]
    TooLarge(String, usize),
    #[error(transparent)]
    FreeProduct(#[from] FreeProductError),
}

fn parse_size(s: &str, token: &str) -> Result<usize, NotationError> {
    s.parse()
        .map_err(|_| NotationError::BadFactor(token.to_owned()))
}

/// Parses the notation, refusing named groups of order above `max_order`.
pub fn parse_presentation(text: &str, max_order: usize) -> Result<Presentation, NotationError> {
    let mut factors = Vec::new();
    let mut rank = 0u64;
    for raw in text.split('*') {
        let token = raw.trim();
        let bad = || NotationError::BadFactor(token.to_owned());
        if token == "1" {
            continue;
        }
        if let Some(inner) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let (name, rho) = inner.rsplit_once(':').ok_or_else(bad)?;
            let rho: Rational = rho.parse().map_err(|_| bad())?;
            if name.trim().is_empty() {
                return Err(bad());
            }
            factors.push(Factor::new_abstract(name.trim(), rho, true));
            continue;
        }
        let (head, tail) = token.split_at(token.chars().next().map_or(0, char::len_utf8));
        let n = parse_size(tail, token)?;
        let group = match head {
            "F" => {
                rank += n as u64;
                continue;
            }
            "C" if n >= 1 => FinitePermGroup::cyclic(n),
            "S" if n >= 1 => {
                if (1..=n).product::<usize>() > max_order {
                    return Err(NotationError::TooLarge(token.to_owned(), max_order));
                }
                FinitePermGroup::symmetric(n)
            }
            "D" if n >= 3 => FinitePermGroup::dihedral(n),
            _ => return Err(bad()),
        };
        if group.order() > max_order {
            return Err(NotationError::TooLarge(token.to_owned(), max_order));
        }
        if !group.is_trivial() {
            factors.push(Factor::finite(token, group));
        }
    }
    Ok(Presentation::new(factors, rank)?)
}
