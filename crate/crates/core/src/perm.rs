//! Permutations, finite permutation groups given by generators, and
//! homomorphisms from such groups into symmetric groups.
//!
//! Points are 0-based in memory and 1-based on the wire. Products are read
//! left to right: `g.then(h)` applies `g` first, so groups act on the right.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::Limits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image sequence {0:?} is not a bijection of 1..={len}", len = .0.len())]
    NotBijection(Vec<usize>),
    #[error("permutation degree must be positive")]
    ZeroDegree,
    #[error("generators have mixed degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("group order exceeds the configured bound {0}")]
    OrderBound(usize),
    #[error("action degree {k} exceeds the configured bound {bound}")]
    DegreeBound { k: usize, bound: usize },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("generator images do not define a homomorphism")]
    NotHomomorphism,
    #[error("point {point} is outside 1..={k}")]
    PointOutOfRange { point: usize, k: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijection(
                    images.iter().map(|x| x + 1).collect(),
                ));
            }
        }
        Ok(Permutation(images.into_iter().map(|x| x as u32).collect()))
    }

    /// From the 1-based image sequence used by the JSON schema.
    pub fn from_one_based(images: &[usize]) -> Result<Self, PermError> {
        if images.contains(&0) {
            return Err(PermError::NotBijection(images.to_vec()));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
            .map_err(|_| PermError::NotBijection(images.to_vec()))
    }

    /// From disjoint cycles written with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for c in cycles {
            for (i, &p) in c.iter().enumerate() {
                let q = c[(i + 1) % c.len()];
                if p == 0 || p > degree || q == 0 || q > degree {
                    return Err(PermError::PointOutOfRange {
                        point: p.max(q),
                        k: degree,
                    });
                }
                images[p - 1] = q - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// `c⁻¹ · self · c`, i.e. `self` with points relabelled by `c`.
    pub fn conjugate_by(&self, c: &Permutation) -> Permutation {
        c.inverse().then(self).then(c)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "({})", c.iter().map(|x| x + 1).join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(&images).map_err(serde::de::Error::custom)
    }
}

/// All permutations of `0..k` in lexicographic order of image sequences.
pub fn symmetric_elements(k: usize) -> Vec<Permutation> {
    (0..k as u32).permutations(k).map(Permutation).collect()
}

/// One image per generator: a candidate homomorphism into `Sym(k)`.
pub type Action = Vec<Permutation>;

/// A finite permutation group with its full element list.
///
/// Elements are sorted by image sequence, so the identity comes first. Each
/// element records its breadth-first parent: `elements[i] =
/// elements[parent].then(generators[gen])`, from which a shortest generator
/// word can be read off.
#[derive(Clone)]
pub struct FinitePermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    parents: Vec<Option<(usize, usize)>>,
    // Indices in breadth-first order; parents always precede children.
    bfs_order: Vec<usize>,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for FinitePermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.order())
            .finish()
    }
}

impl PartialEq for FinitePermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators
    }
}

impl Eq for FinitePermGroup {}

impl FinitePermGroup {
    /// Closes `generators` under composition, refusing groups larger than
    /// `max_order`.
    pub fn closure(generators: Vec<Permutation>, max_order: usize) -> Result<Self, PermError> {
        let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch(degree, g.degree()));
        }
        let id = Permutation::identity(degree);
        let mut found: HashMap<Permutation, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elems = vec![id];
        let mut parents = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (j, s) in generators.iter().enumerate() {
                let next = elems[i].then(s);
                if found.contains_key(&next) {
                    continue;
                }
                if elems.len() == max_order {
                    return Err(PermError::OrderBound(max_order));
                }
                found.insert(next.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(next);
                parents.push(Some((i, j)));
            }
        }

        // Re-index in lexicographic order.
        let mut sorted: Vec<usize> = (0..elems.len()).collect();
        sorted.sort_by(|&a, &b| elems[a].cmp(&elems[b]));
        let mut new_pos = vec![0; elems.len()];
        for (new, &old) in sorted.iter().enumerate() {
            new_pos[old] = new;
        }
        let elements: Vec<Permutation> = sorted.iter().map(|&o| elems[o].clone()).collect();
        let parents = sorted
            .iter()
            .map(|&o| parents[o].map(|(p, g)| (new_pos[p], g)))
            .collect();
        let bfs_order = (0..elems.len()).map(|o| new_pos[o]).collect();
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        Ok(FinitePermGroup {
            degree,
            generators,
            elements,
            parents,
            bfs_order,
            index,
        })
    }

    /// The subgroup formed by `elements`, which must be closed. Generators
    /// are picked greedily in element order.
    pub fn from_closed_elements(
        degree: usize,
        elements: &[Permutation],
        max_order: usize,
    ) -> Result<Self, PermError> {
        let mut group = FinitePermGroup::closure(vec![Permutation::identity(degree)], max_order)?;
        let mut gens: Vec<Permutation> = Vec::new();
        for e in elements {
            if !group.contains(e) {
                gens.push(e.clone());
                group = FinitePermGroup::closure(gens.clone(), max_order)?;
            }
        }
        Ok(group)
    }

    pub fn cyclic(n: usize) -> Self {
        let images = (0..n).map(|i| (i + 1) % n).collect();
        Self::closure(
            vec![Permutation::from_images(images).expect("cycle")],
            usize::MAX,
        )
        .expect("cyclic group")
    }

    /// Symmetric group on `n` points, generated by `(1 2)` and `(1 2 … n)`.
    pub fn symmetric(n: usize) -> Self {
        if n <= 2 {
            return Self::cyclic(n);
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle = (0..n).map(|i| (i + 1) % n).collect();
        Self::closure(
            vec![
                Permutation::from_images(swap).expect("swap"),
                Permutation::from_images(cycle).expect("cycle"),
            ],
            usize::MAX,
        )
        .expect("symmetric group")
    }

    /// Dihedral group of order `2n` acting on the `n`-gon (`n ≥ 3`).
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3, "dihedral groups need n >= 3");
        let rot = (0..n).map(|i| (i + 1) % n).collect();
        let refl = (0..n).map(|i| (n - i) % n).collect();
        Self::closure(
            vec![
                Permutation::from_images(rot).expect("rotation"),
                Permutation::from_images(refl).expect("reflection"),
            ],
            usize::MAX,
        )
        .expect("dihedral group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Generator indices whose product, left to right, is element `i`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = i;
        while let Some((p, g)) = self.parents[cur] {
            word.push(g);
            cur = p;
        }
        word.reverse();
        word
    }

    pub fn evaluate_word(&self, word: &[usize]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(self.degree), |acc, &g| {
                acc.then(&self.generators[g])
            })
    }

    /// Sorted multiset of element orders, as `(order, count)` pairs.
    pub fn element_order_profile(&self) -> Vec<(usize, usize)> {
        let mut orders: Vec<usize> = self.elements.iter().map(Permutation::order).collect();
        orders.sort_unstable();
        orders
            .into_iter()
            .dedup_with_count()
            .map(|(c, o)| (o, c))
            .collect()
    }

    fn check_images(&self, action: &[Permutation]) -> Result<usize, PermError> {
        if action.len() != self.generators.len() {
            return Err(PermError::ImageCount {
                expected: self.generators.len(),
                got: action.len(),
            });
        }
        let k = action[0].degree();
        if let Some(p) = action.iter().find(|p| p.degree() != k) {
            return Err(PermError::DegreeMismatch(k, p.degree()));
        }
        Ok(k)
    }

    /// Images of every element under the map defined by extending `action`
    /// along the stored words.
    pub fn extend_along_words(&self, action: &[Permutation]) -> Vec<Permutation> {
        let k = action[0].degree();
        let mut images = vec![Permutation::identity(k); self.order()];
        for &i in &self.bfs_order {
            if let Some((p, g)) = self.parents[i] {
                images[i] = images[p].then(&action[g]);
            }
        }
        images
    }

    /// Whether the generator images extend to a homomorphism.
    ///
    /// With `φ` extended along the stored words, `φ` is a homomorphism iff
    /// `φ(x·s) = φ(x)·φ(s)` for every element `x` and generator `s`: every
    /// `h` is a word in the generators, so the full product rule follows by
    /// induction on its length.
    pub fn is_homomorphism(&self, action: &[Permutation]) -> bool {
        if self.check_images(action).is_err() {
            return false;
        }
        let images = self.extend_along_words(action);
        self.respects_cayley_edges(action, &images)
    }

    fn respects_cayley_edges(&self, action: &[Permutation], images: &[Permutation]) -> bool {
        self.elements.iter().enumerate().all(|(i, x)| {
            self.generators.iter().zip(action).all(|(s, phi_s)| {
                let xs = self.index[&x.then(s)];
                images[xs] == images[i].then(phi_s)
            })
        })
    }

    /// The exhaustive check `φ(g)·φ(h) = φ(gh)` over all pairs of elements.
    /// Quadratic in the order; an independent cross-check of
    /// [`FinitePermGroup::is_homomorphism`].
    pub fn is_homomorphism_full_table(&self, action: &[Permutation]) -> bool {
        if self.check_images(action).is_err() {
            return false;
        }
        let words: Vec<Vec<usize>> = (0..self.order()).map(|i| self.word(i)).collect();
        let k = action[0].degree();
        let images: Vec<Permutation> = words
            .iter()
            .map(|w| {
                w.iter()
                    .fold(Permutation::identity(k), |acc, &g| acc.then(&action[g]))
            })
            .collect();
        (0..self.order()).all(|a| {
            (0..self.order()).all(|b| {
                let ab = self.index[&self.elements[a].then(&self.elements[b])];
                images[a].then(&images[b]) == images[ab]
            })
        })
    }

    fn require_homomorphism(&self, action: &[Permutation]) -> Result<Vec<Permutation>, PermError> {
        self.check_images(action)?;
        let images = self.extend_along_words(action);
        if !self.respects_cayley_edges(action, &images) {
            return Err(PermError::NotHomomorphism);
        }
        Ok(images)
    }

    /// Orbits of `{0..k}` under the image of the action, each sorted and
    /// listed by smallest point.
    pub fn act_orbits(&self, action: &[Permutation]) -> Result<Vec<Vec<usize>>, PermError> {
        self.require_homomorphism(action)?;
        Ok(orbits(action, action[0].degree()))
    }

    /// Elements whose image fixes `p`.
    pub fn point_stabilizer(
        &self,
        action: &[Permutation],
        p: usize,
        max_order: usize,
    ) -> Result<FinitePermGroup, PermError> {
        let images = self.require_homomorphism(action)?;
        let k = action[0].degree();
        if p >= k {
            return Err(PermError::PointOutOfRange { point: p + 1, k });
        }
        let fixed: Vec<Permutation> = self
            .elements
            .iter()
            .zip(&images)
            .filter(|(_, img)| img.apply(p) == p)
            .map(|(e, _)| e.clone())
            .collect();
        FinitePermGroup::from_closed_elements(self.degree, &fixed, max_order)
    }

    /// Every homomorphism into `Sym(k)`, sorted by image tuple.
    ///
    /// Backtracks over generator images whose order divides the generator's
    /// order. After assigning the first `j` images, the partial map must
    /// already be a homomorphism on the subgroup generated by the first `j`
    /// generators, which prunes most branches early.
    pub fn enumerate_actions(&self, k: usize, limits: &Limits) -> Result<Vec<Action>, PermError> {
        if k == 0 {
            return Err(PermError::ZeroDegree);
        }
        if k > limits.max_degree {
            return Err(PermError::DegreeBound {
                k,
                bound: limits.max_degree,
            });
        }
        let sym = symmetric_elements(k);
        let candidates: Vec<Vec<Permutation>> = self
            .generators
            .iter()
            .map(|g| {
                let o = g.order();
                sym.iter().filter(|p| o % p.order() == 0).cloned().collect()
            })
            .collect();
        let prefixes: Vec<PrefixSubgroup> = (1..=self.generators.len())
            .map(|j| PrefixSubgroup::new(self, j))
            .collect();

        let mut out: Vec<Action> = candidates[0]
            .par_iter()
            .flat_map_iter(|first| {
                let mut found = Vec::new();
                let mut partial = vec![first.clone()];
                backtrack(&candidates, &prefixes, &mut partial, &mut found);
                found
            })
            .collect();
        out.sort();
        debug_assert!(out.iter().all(|a| self.is_homomorphism(a)));
        Ok(out)
    }
}

/// Elements of the subgroup generated by the first `len` generators, with a
/// breadth-first spanning tree over those generators.
struct PrefixSubgroup {
    gens: Vec<Permutation>,
    // (element, parent slot, generator) in BFS order; slot 0 is the identity.
    tree: Vec<(Permutation, usize, usize)>,
    slot: HashMap<Permutation, usize>,
}

impl PrefixSubgroup {
    fn new(group: &FinitePermGroup, len: usize) -> Self {
        let id = Permutation::identity(group.degree);
        let mut tree = vec![(id.clone(), 0, usize::MAX)];
        let mut slot = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < tree.len() {
            for (j, s) in group.generators[..len].iter().enumerate() {
                let next = tree[i].0.then(s);
                if !slot.contains_key(&next) {
                    slot.insert(next.clone(), tree.len());
                    tree.push((next, i, j));
                }
            }
            i += 1;
        }
        PrefixSubgroup {
            gens: group.generators[..len].to_vec(),
            tree,
            slot,
        }
    }

    fn accepts(&self, partial: &[Permutation]) -> bool {
        debug_assert_eq!(partial.len(), self.gens.len());
        let k = partial[0].degree();
        let mut images = vec![Permutation::identity(k); self.tree.len()];
        for i in 1..self.tree.len() {
            let (_, p, g) = self.tree[i];
            images[i] = images[p].then(&partial[g]);
        }
        self.tree.iter().enumerate().all(|(i, (x, _, _))| {
            self.gens
                .iter()
                .zip(partial)
                .all(|(s, phi_s)| images[self.slot[&x.then(s)]] == images[i].then(phi_s))
        })
    }
}

fn backtrack(
    candidates: &[Vec<Permutation>],
    prefixes: &[PrefixSubgroup],
    partial: &mut Vec<Permutation>,
    found: &mut Vec<Action>,
) {
    let depth = partial.len();
    if !prefixes[depth - 1].accepts(partial) {
        return;
    }
    if depth == candidates.len() {
        found.push(partial.clone());
        return;
    }
    for c in &candidates[depth] {
        partial.push(c.clone());
        backtrack(candidates, prefixes, partial, found);
        partial.pop();
    }
}

/// Orbits of `{0..k}` under the group generated by `perms`.
pub fn orbits(perms: &[Permutation], k: usize) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; k];
    let mut out = Vec::new();
    for start in 0..k {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[start] = id;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for p in perms {
                let y = p.apply(x);
                if label[y] == usize::MAX {
                    label[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Whether `perms` act transitively on `{0..k}`.
pub fn is_transitive(perms: &[Permutation], k: usize) -> bool {
    k > 0 && orbits(perms, k).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    fn cyc(n: usize) -> FinitePermGroup {
        FinitePermGroup::cyclic(n)
    }

    /// Naive closure: multiply everything by everything until nothing new.
    fn brute_closure(gens: &[Permutation]) -> BTreeSet<Permutation> {
        let mut set: BTreeSet<Permutation> = gens.iter().cloned().collect();
        set.insert(Permutation::identity(gens[0].degree()));
        loop {
            let products: Vec<_> = set
                .iter()
                .flat_map(|a| set.iter().map(move |b| a.then(b)))
                .collect();
            let before = set.len();
            set.extend(products);
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn permutation_basics() {
        let x = p(&[2, 3, 1]);
        assert_eq!(x.order(), 3);
        assert_eq!(x.to_string(), "(1 2 3)");
        assert_eq!(x.then(&x.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::from_one_based(&[]).is_err());
        assert_eq!(
            Permutation::from_cycles(6, &[&[1, 2], &[3, 4], &[5, 6]]).unwrap(),
            p(&[2, 1, 4, 3, 6, 5])
        );
        // `then` applies the left factor first.
        let a = p(&[2, 1, 3]);
        let b = p(&[1, 3, 2]);
        assert_eq!(a.then(&b).apply(0), 2);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            FinitePermGroup::closure(vec![p(&[2, 1])], 2000)
                .unwrap()
                .order(),
            2
        );
        assert_eq!(
            FinitePermGroup::closure(vec![p(&[2, 3, 1])], 2000)
                .unwrap()
                .order(),
            3
        );
        let gens = vec![p(&[2, 1, 3]), p(&[2, 3, 1])];
        let s3 = FinitePermGroup::closure(gens.clone(), 2000).unwrap();
        let oracle = brute_closure(&gens);
        assert_eq!(oracle.len(), 6);
        assert_eq!(
            s3.elements().iter().cloned().collect::<BTreeSet<_>>(),
            oracle
        );
        assert_eq!(s3.elements()[0], Permutation::identity(3));
    }

    #[test]
    fn closure_errors() {
        assert_eq!(
            FinitePermGroup::closure(vec![], 10).unwrap_err(),
            PermError::NoGenerators
        );
        assert_eq!(
            FinitePermGroup::closure(vec![p(&[2, 1]), p(&[1, 2, 3])], 10).unwrap_err(),
            PermError::DegreeMismatch(2, 3)
        );
        let s4 = vec![p(&[2, 1, 3, 4]), p(&[2, 3, 4, 1])];
        assert_eq!(
            FinitePermGroup::closure(s4.clone(), 23).unwrap_err(),
            PermError::OrderBound(23)
        );
        assert_eq!(FinitePermGroup::closure(s4, 24).unwrap().order(), 24);
    }

    #[test]
    fn stored_words_evaluate_to_elements() {
        for g in [
            FinitePermGroup::symmetric(4),
            FinitePermGroup::dihedral(5),
            cyc(7),
        ] {
            for (i, e) in g.elements().iter().enumerate() {
                assert_eq!(&g.evaluate_word(&g.word(i)), e);
            }
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let g = FinitePermGroup::symmetric(4);
        let again = FinitePermGroup::closure(g.elements().to_vec(), 2000).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn named_groups() {
        assert_eq!(FinitePermGroup::symmetric(3).order(), 6);
        assert_eq!(FinitePermGroup::symmetric(5).order(), 120);
        assert_eq!(FinitePermGroup::dihedral(4).order(), 8);
        assert_eq!(cyc(1).order(), 1);
    }

    #[test]
    fn orbit_examples() {
        let c2 = cyc(2);
        let c3 = cyc(3);
        assert_eq!(
            c2.act_orbits(&[Permutation::identity(3)]).unwrap(),
            vec![vec![0], vec![1], vec![2]]
        );
        let free2 = Permutation::from_cycles(6, &[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        assert_eq!(
            c2.act_orbits(&[free2]).unwrap(),
            vec![vec![0, 1], vec![2, 3], vec![4, 5]]
        );
        let free3 = Permutation::from_cycles(6, &[&[1, 3, 5], &[2, 4, 6]]).unwrap();
        assert_eq!(
            c3.act_orbits(&[free3]).unwrap(),
            vec![vec![0, 2, 4], vec![1, 3, 5]]
        );
        assert_eq!(
            c3.act_orbits(&[p(&[2, 1])]).unwrap_err(),
            PermError::NotHomomorphism
        );
    }

    #[test]
    fn stabilizer_examples() {
        let c2 = cyc(2);
        let trivial = c2
            .point_stabilizer(&[Permutation::identity(3)], 1, 2000)
            .unwrap();
        assert_eq!(trivial.order(), 2);
        assert_eq!(
            c2.point_stabilizer(&[p(&[2, 1])], 0, 2000).unwrap().order(),
            1
        );

        let s3 = FinitePermGroup::symmetric(3);
        let natural = s3.generators().to_vec();
        let stab = s3.point_stabilizer(&natural, 0, 2000).unwrap();
        let oracle: Vec<_> = s3.elements().iter().filter(|e| e.apply(0) == 0).collect();
        assert_eq!(oracle.len(), 2);
        assert_eq!(stab.order(), 2);
        assert!(oracle.iter().all(|e| stab.contains(e)));
        assert_eq!(
            c2.point_stabilizer(&[p(&[2, 1])], 5, 2000).unwrap_err(),
            PermError::PointOutOfRange { point: 6, k: 2 }
        );
    }

    #[test]
    fn homomorphism_examples() {
        let c2 = cyc(2);
        let c3 = cyc(3);
        assert!(c3.is_homomorphism(&[Permutation::identity(5)]));
        assert!(!c3.is_homomorphism(&[p(&[2, 1])]));
        assert!(c2.is_homomorphism(&[p(&[2, 1, 4, 3])]));
        assert!(!c2.is_homomorphism(&[]));
        let s3 = FinitePermGroup::symmetric(3);
        // Both generators to the same transposition breaks the relations.
        assert!(!s3.is_homomorphism(&[p(&[2, 1]), p(&[2, 1])]));
        assert!(!s3.is_homomorphism_full_table(&[p(&[2, 1]), p(&[2, 1])]));
        // The sign map.
        assert!(s3.is_homomorphism(&[p(&[2, 1]), p(&[1, 2])]));
    }

    #[test]
    fn enumerate_action_counts() {
        let lim = Limits::default();
        let c2 = cyc(2);
        assert_eq!(c2.enumerate_actions(2, &lim).unwrap().len(), 2);
        assert_eq!(cyc(3).enumerate_actions(2, &lim).unwrap().len(), 1);

        // Oracle: every image in Sym(3) tested against the full table.
        let brute: Vec<_> = symmetric_elements(3)
            .into_iter()
            .map(|x| vec![x])
            .filter(|a| c2.is_homomorphism_full_table(a))
            .collect();
        assert_eq!(brute.len(), 4);
        assert_eq!(c2.enumerate_actions(3, &lim).unwrap(), brute);
    }

    #[test]
    fn enumerate_matches_unpruned_search() {
        let lim = Limits::default();
        let s3 = FinitePermGroup::symmetric(3);
        for k in 1..=4 {
            let sym = symmetric_elements(k);
            let brute: Vec<Action> = sym
                .iter()
                .cartesian_product(sym.iter())
                .map(|(a, b)| vec![a.clone(), b.clone()])
                .filter(|a| s3.is_homomorphism_full_table(a))
                .collect();
            assert_eq!(s3.enumerate_actions(k, &lim).unwrap(), brute, "k = {k}");
        }
    }

    #[test]
    fn enumerate_bounds() {
        let lim = Limits {
            max_degree: 3,
            ..Limits::default()
        };
        assert_eq!(
            cyc(2).enumerate_actions(4, &lim).unwrap_err(),
            PermError::DegreeBound { k: 4, bound: 3 }
        );
        assert_eq!(
            cyc(2).enumerate_actions(0, &lim).unwrap_err(),
            PermError::ZeroDegree
        );
    }

    #[test]
    fn worker_count_does_not_change_enumeration() {
        let g = FinitePermGroup::dihedral(4);
        let one = Limits {
            workers: 1,
            ..Limits::default()
        };
        let many = Limits {
            workers: 4,
            ..Limits::default()
        };
        let a = one.install(|| g.enumerate_actions(5, &one).unwrap());
        let b = many.install(|| g.enumerate_actions(5, &many).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&[p(&[2, 3, 1])], 3));
        assert!(!is_transitive(&[p(&[2, 1, 3])], 3));
        assert!(is_transitive(&[], 1));
    }
}
