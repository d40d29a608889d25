//! Isomorphism-class labels for small finite groups.
//!
//! A label is the group order plus its sorted multiset of element orders.
//! Non-isomorphic groups can share that invariant (`C4 × C4` and `C2 × Q8`
//! are the smallest pair), so a classifier keeps one representative per
//! class and settles collisions with a brute-force isomorphism search.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::perm::{FinitePermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IsoLabel {
    pub order: usize,
    /// `(element order, how many elements have it)`, ascending.
    pub element_orders: Vec<(usize, usize)>,
    /// Distinguishes classes sharing the invariant above, numbered in order
    /// of first appearance.
    pub variant: usize,
}

impl fmt::Display for IsoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let profile = self
            .element_orders
            .iter()
            .map(|(o, c)| format!("{o}^{c}"))
            .join(" ");
        write!(f, "|{}|[{}]", self.order, profile)?;
        if self.variant > 0 {
            write!(f, "#{}", self.variant)?;
        }
        Ok(())
    }
}

impl IsoLabel {
    /// A conventional name where the invariant alone pins the group down
    /// (cyclic groups, the Klein four-group, `S3`), otherwise the label.
    pub fn short_name(&self) -> String {
        let has = |o: usize| self.element_orders.iter().any(|&(x, _)| x == o);
        match self.order {
            n if has(n) => format!("C{n}"),
            4 => "C2xC2".to_owned(),
            6 => "S3".to_owned(),
            _ => self.to_string(),
        }
    }
}

/// Group order and element-order profile.
type Invariant = (usize, Vec<(usize, usize)>);

/// Assigns labels so that two groups get the same label iff they are
/// isomorphic.
#[derive(Default)]
pub struct IsoClassifier {
    classes: BTreeMap<Invariant, Vec<FinitePermGroup>>,
}

impl IsoClassifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn label(&mut self, group: &FinitePermGroup) -> IsoLabel {
        let key = (group.order(), group.element_order_profile());
        let reps = self.classes.entry(key.clone()).or_default();
        let variant = match reps.iter().position(|r| are_isomorphic(r, group)) {
            Some(v) => v,
            None => {
                reps.push(group.clone());
                reps.len() - 1
            }
        };
        IsoLabel {
            order: key.0,
            element_orders: key.1,
            variant,
        }
    }
}

/// Searches for a bijective homomorphism `a → b` by trying every assignment
/// of generators of `a` to elements of `b` of matching order.
pub fn are_isomorphic(a: &FinitePermGroup, b: &FinitePermGroup) -> bool {
    if a.order() != b.order() || a.element_order_profile() != b.element_order_profile() {
        return false;
    }
    let choices: Vec<Vec<&Permutation>> = a
        .generators()
        .iter()
        .map(|g| {
            let o = g.order();
            b.elements().iter().filter(|x| x.order() == o).collect()
        })
        .collect();
    choices.into_iter().multi_cartesian_product().any(|images| {
        let images: Vec<Permutation> = images.into_iter().cloned().collect();
        if !a.is_homomorphism(&images) {
            return false;
        }
        let all = a.extend_along_words(&images);
        all.iter().collect::<HashSet<_>>().len() == a.order()
    })
}
