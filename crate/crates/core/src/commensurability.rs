//! Obstructions to abstract commensurability of free products, and a
//! search for explicit common finite-index subgroups.
//!
//! The obstruction runs one way only: it can prove two groups are not
//! commensurable, never that they are. Positive answers come from
//! [`witness_search`], which exhibits a pair of covers with isomorphic
//! fundamental groups.

use std::fmt;

use itertools::iproduct;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covers::{
    enumerate_covers_up_to, kurosh, ActionDatum, CoverError, Equality, KuroshForm, KuroshKey,
};
use crate::free_product::Presentation;
use crate::iso::IsoClassifier;
use crate::perm::PermError;
use crate::rational::Rational;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every factor of `H` a proper finite-index subgroup of the matching
    /// factor of `G`.
    Theorem,
    /// Only some factors need to be proper subgroups.
    Weakened,
    /// `χ_ρ` normalised by `1 − m − s`; allows free letters and unequal
    /// factor counts.
    RatioExtended,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Theorem => "theorem",
            Mode::Weakened => "weakened",
            Mode::RatioExtended => "ratio-extended",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("{side} has free rank {rank}; mode {mode} needs a product of factors only")]
    FreeRank { side: Side, rank: u64, mode: Mode },
    #[error("{side} has {m} factors; mode {mode} needs more than one")]
    TooFewFactors { side: Side, m: usize, mode: Mode },
    #[error("factor counts differ ({g} vs {h}); mode {mode} compares equal counts only")]
    FactorCountMismatch { g: usize, h: usize, mode: Mode },
    #[error("factor {name} of {side} is finite; mode {mode} needs abstract one-ended factors")]
    FiniteFactor {
        side: Side,
        name: String,
        mode: Mode,
    },
    #[error("factor {name} of {side} has ρ = 0; the invariant must be nonzero")]
    ZeroRho { side: Side, name: String },
    #[error("factor {name} of {side} is not asserted to be one-ended")]
    NotOneEnded { side: Side, name: String },
    #[error("{side} has m + s = {total} < 2")]
    Degenerate { side: Side, total: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    G,
    H,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::G => "G",
            Side::H => "H",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub mode: Mode,
    pub chi_g: Rational,
    pub chi_h: Rational,
    /// Normalised values compared in ratio-extended mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_g: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_h: Option<Rational>,
    /// Hypotheses the verdict rests on; none of them is checked.
    pub hypotheses_asserted: Vec<String>,
    pub derivation: Vec<String>,
    /// True when the criterion goes beyond equal factor counts with no
    /// free letters.
    pub extension: bool,
}

fn check_factors(p: &Presentation, side: Side, mode: Mode) -> Result<(), ObstructionError> {
    for f in p.factors() {
        if f.is_finite() {
            return Err(ObstructionError::FiniteFactor {
                side,
                name: f.name.clone(),
                mode,
            });
        }
        if !f.one_ended_asserted() {
            return Err(ObstructionError::NotOneEnded {
                side,
                name: f.name.clone(),
            });
        }
    }
    Ok(())
}

fn hypotheses(g: &Presentation, h: &Presentation, mode: Mode) -> Vec<String> {
    let mut out = Vec::new();
    for (side, p) in [(Side::G, g), (Side::H, h)] {
        for f in p.factors() {
            out.push(format!(
                "{side}: factor {} is one-ended (asserted by input)",
                f.name
            ));
        }
    }
    out.push("all factors lie in one family closed under finite-index subgroups".into());
    out.push("ρ is multiplicative on that family: ρ(K) = [L:K]·ρ(L)".into());
    match mode {
        Mode::Theorem => {
            out.push("ρ is nonzero on every member of the family".into());
            out.push(
                "each factor of H is a proper finite-index subgroup of the matching factor of G"
                    .into(),
            );
        }
        Mode::Weakened => {
            out.push("ρ is nonzero on every member of the family".into());
            out.push(
                "some factor of H is a proper finite-index subgroup of the matching factor of G"
                    .into(),
            );
        }
        Mode::RatioExtended => {}
    }
    out
}

/// Decides whether the index arithmetic rules out a common finite-index
/// subgroup of `g` and `h`.
///
/// In `theorem` and `weakened` mode both sides are `m > 1` one-ended factors
/// with no free part. A common subgroup of index `k` in `G` and `k′` in `H`
/// with `n` one-ended factors and free rank `r` satisfies
/// `k = (1 − r − n)/(1 − m) = k′`, so `k·χ_ρ(G) = k·χ_ρ(H)`: distinct values
/// obstruct. `ratio-extended` mode uses the same identity with free letters,
/// `k·(1 − m − s) = 1 − r − n`, and compares `χ_ρ/(1 − m − s)` across sides.
pub fn obstruction_check(
    g: &Presentation,
    h: &Presentation,
    mode: Mode,
) -> Result<ObstructionReport, ObstructionError> {
    let chi_g = g.chi_rho();
    let chi_h = h.chi_rho();
    let mut derivation = vec![
        format!(
            "χ_ρ(G) = 1 − {} − {} + Σρ = {chi_g}",
            g.free_rank(),
            g.factor_count()
        ),
        format!(
            "χ_ρ(H) = 1 − {} − {} + Σρ = {chi_h}",
            h.free_rank(),
            h.factor_count()
        ),
    ];
    match mode {
        Mode::Theorem | Mode::Weakened => {
            for (side, p) in [(Side::G, g), (Side::H, h)] {
                if p.free_rank() != 0 {
                    return Err(ObstructionError::FreeRank {
                        side,
                        rank: p.free_rank(),
                        mode,
                    });
                }
                if p.factor_count() <= 1 {
                    return Err(ObstructionError::TooFewFactors {
                        side,
                        m: p.factor_count(),
                        mode,
                    });
                }
            }
            if g.factor_count() != h.factor_count() {
                return Err(ObstructionError::FactorCountMismatch {
                    g: g.factor_count(),
                    h: h.factor_count(),
                    mode,
                });
            }
            for (side, p) in [(Side::G, g), (Side::H, h)] {
                check_factors(p, side, mode)?;
                if let Some(f) = p.factors().iter().find(|f| f.rho().is_zero()) {
                    return Err(ObstructionError::ZeroRho {
                        side,
                        name: f.name.clone(),
                    });
                }
            }
            let m = g.factor_count() as i64;
            derivation.push(format!(
                "a common subgroup of index k in G and k′ in H, with n one-ended factors and free rank r, has k = (1 − r − n)/(1 − m) = k′ where m = {m}"
            ));
            derivation.push(
                "so k·χ_ρ(G) = χ_ρ(common subgroup) = k·χ_ρ(H), which needs χ_ρ(G) = χ_ρ(H)".into(),
            );
            let verdict = if chi_g != chi_h {
                derivation.push(format!(
                    "χ_ρ(G) = {chi_g} ≠ {chi_h} = χ_ρ(H): no common finite-index subgroup"
                ));
                Verdict::Obstructed
            } else {
                derivation.push(format!(
                    "χ_ρ(G) = χ_ρ(H) = {chi_g}: the index arithmetic is silent"
                ));
                Verdict::Inconclusive
            };
            Ok(ObstructionReport {
                verdict,
                mode,
                hypotheses_asserted: hypotheses(g, h, mode),
                chi_g,
                chi_h,
                ratio_g: None,
                ratio_h: None,
                derivation,
                extension: false,
            })
        }
        Mode::RatioExtended => {
            let mut ratios = Vec::new();
            for (side, p) in [(Side::G, g), (Side::H, h)] {
                let total = p.factor_count() as u64 + p.free_rank();
                if total < 2 {
                    return Err(ObstructionError::Degenerate { side, total });
                }
                check_factors(p, side, mode)?;
                let denom = Rational::from_integer(1 - total as i64);
                let ratio = p.chi_rho().checked_div(&denom).expect("1 − m − s < 0");
                derivation.push(format!(
                    "{side}: χ_ρ/(1 − m − s) = {} / {denom} = {ratio}",
                    p.chi_rho()
                ));
                ratios.push(ratio);
            }
            derivation.push(
                "a common subgroup with n one-ended factors and free rank r has index k = (1 − r − n)/(1 − m − s) on each side, so χ_ρ(common)/(1 − r − n) equals both normalised values".into(),
            );
            let verdict = if ratios[0] != ratios[1] {
                derivation.push("normalised values differ: no common finite-index subgroup".into());
                Verdict::Obstructed
            } else {
                derivation.push("normalised values agree: the index arithmetic is silent".into());
                Verdict::Inconclusive
            };
            let ratio_h = ratios.pop();
            let ratio_g = ratios.pop();
            Ok(ObstructionReport {
                verdict,
                mode,
                hypotheses_asserted: hypotheses(g, h, mode),
                chi_g,
                chi_h,
                ratio_g,
                ratio_h,
                derivation,
                extension: true,
            })
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("k_max must be positive")]
    ZeroIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSide {
    /// Index of the enumerated cover in its base.
    pub k: usize,
    pub datum: ActionDatum,
    pub kurosh: KuroshForm,
    /// Further index taken inside the cover's free fundamental group; 1 for
    /// a direct match.
    pub extra_index: u64,
    /// `k · extra_index`.
    pub total_index: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum WitnessRoute {
    /// The two covers have isomorphic fundamental groups.
    Direct,
    /// Both covers are free, of ranks `r₁, r₂ ≥ 2`; passing to index-`j`
    /// subgroups (rank `j(r − 1) + 1`) reaches a common rank.
    FreeClosure {
        rank_g: u64,
        rank_h: u64,
        common_rank: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub g: WitnessSide,
    pub h: WitnessSide,
    pub route: WitnessRoute,
    /// Isomorphism type of the common subgroup.
    pub common: KuroshKey,
    /// `total_index_g · χ_ρ(G)` and `total_index_h · χ_ρ(H)`, each against
    /// `χ_ρ` of the common subgroup.
    pub consistency: [Equality<Rational>; 2],
}

/// Smallest common rank reachable from free groups of ranks `r1, r2 ≥ 2` by
/// finite-index subgroups, with the two indices: `(r, j1, j2)` where
/// `r − 1 = lcm(r1 − 1, r2 − 1) = j1(r1 − 1) = j2(r2 − 1)`.
pub fn free_closure(r1: u64, r2: u64) -> Option<(u64, u64, u64)> {
    if r1 < 2 || r2 < 2 {
        return None;
    }
    let l = (r1 - 1).lcm(&(r2 - 1));
    Some((l + 1, l / (r1 - 1), l / (r2 - 1)))
}

struct Entry {
    k: usize,
    datum: ActionDatum,
    kurosh: KuroshForm,
    key: KuroshKey,
}

fn side(e: &Entry, extra: u64) -> WitnessSide {
    WitnessSide {
        k: e.k,
        datum: e.datum.clone(),
        kurosh: e.kurosh.clone(),
        extra_index: extra,
        total_index: e.k as u64 * extra,
    }
}

fn consistency(
    g: &Presentation,
    h: &Presentation,
    w_g: &WitnessSide,
    w_h: &WitnessSide,
    common: &KuroshKey,
) -> [Equality<Rational>; 2] {
    let chi = common.chi_rho();
    [
        Equality::new(
            Rational::from_integer(w_g.total_index as i64) * g.chi_rho(),
            chi.clone(),
        ),
        Equality::new(
            Rational::from_integer(w_h.total_index as i64) * h.chi_rho(),
            chi,
        ),
    ]
}

/// Looks for finite-index subgroups of `g` and `h` that are isomorphic.
///
/// Enumerates covers of both sides up to index `k_max` and compares Kurosh
/// forms (factor isomorphism types with indices erased, plus free rank);
/// the first match in order of `(k_g, k_h, position)` wins. Failing that,
/// two free covers of ranks at least two are matched through further free
/// subgroups.
pub fn witness_search(
    g: &Presentation,
    h: &Presentation,
    k_max: usize,
    limits: &Limits,
) -> Result<Option<Witness>, WitnessError> {
    if k_max == 0 {
        return Err(WitnessError::ZeroIndex);
    }
    if k_max > limits.max_degree {
        return Err(CoverError::from(PermError::DegreeBound {
            k: k_max,
            bound: limits.max_degree,
        })
        .into());
    }
    let mut classifier = IsoClassifier::new();
    let mut collect = |p: &Presentation| -> Result<Vec<Entry>, WitnessError> {
        let by_k = enumerate_covers_up_to(p, k_max, limits)?;
        Ok(by_k
            .into_values()
            .flatten()
            .map(|c| {
                let kf = kurosh(&c, &mut classifier);
                Entry {
                    k: c.k(),
                    key: kf.key(),
                    kurosh: kf,
                    datum: c.datum,
                }
            })
            .collect())
    };
    let gs = collect(g)?;
    let hs = collect(h)?;

    let direct = iproduct!(gs.iter().enumerate(), hs.iter().enumerate())
        .filter(|((_, a), (_, b))| a.key == b.key)
        .min_by_key(|((i, a), (j, b))| (a.k, b.k, *i, *j))
        .map(|((i, _), (j, _))| (i, j));
    if let Some((i, j)) = direct {
        let (wg, wh) = (side(&gs[i], 1), side(&hs[j], 1));
        let common = gs[i].key.clone();
        return Ok(Some(Witness {
            consistency: consistency(g, h, &wg, &wh, &common),
            g: wg,
            h: wh,
            route: WitnessRoute::Direct,
            common,
        }));
    }

    let free = |es: &[Entry]| -> Vec<usize> {
        es.iter()
            .enumerate()
            .filter(|(_, e)| e.key.is_free() && e.key.free_rank >= 2)
            .map(|(i, _)| i)
            .collect()
    };
    let best = iproduct!(free(&gs), free(&hs))
        .filter_map(|(i, j)| {
            let (r, j1, j2) = free_closure(gs[i].key.free_rank, hs[j].key.free_rank)?;
            Some((side(&gs[i], j1), side(&hs[j], j2), r, i, j))
        })
        .min_by_key(|(wg, wh, _, i, j)| (wg.total_index, wh.total_index, *i, *j));
    Ok(best.map(|(wg, wh, r, _, _)| {
        let common = KuroshKey {
            labels: Vec::new(),
            free_rank: r,
        };
        Witness {
            consistency: consistency(g, h, &wg, &wh, &common),
            route: WitnessRoute::FreeClosure {
                rank_g: wg.kurosh.free_rank,
                rank_h: wh.kurosh.free_rank,
                common_rank: r,
            },
            g: wg,
            h: wh,
            common,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_product::Factor;
    use crate::perm::FinitePermGroup;

    fn s(name: &str, rho: i64) -> Factor {
        Factor::new_abstract(name, Rational::from_integer(rho), true)
    }

    fn c(n: usize) -> Factor {
        Factor::finite(format!("C{n}"), FinitePermGroup::cyclic(n))
    }

    fn pres(factors: Vec<Factor>, r: u64) -> Presentation {
        Presentation::new(factors, r).unwrap()
    }

    #[test]
    fn surface_products_are_obstructed() {
        let g = pres(vec![s("S2", -2), s("S2", -2)], 0);
        let h = pres(vec![s("S3", -4), s("S3", -4)], 0);
        let rep = obstruction_check(&g, &h, Mode::Theorem).unwrap();
        assert_eq!(rep.verdict, Verdict::Obstructed);
        assert_eq!(rep.chi_g, Rational::from_integer(-5));
        assert_eq!(rep.chi_h, Rational::from_integer(-9));
        assert!(!rep.extension);
        assert!(rep
            .hypotheses_asserted
            .iter()
            .any(|h| h.contains("S3 is one-ended")));

        let swapped = obstruction_check(&h, &g, Mode::Theorem).unwrap();
        assert_eq!(swapped.verdict, rep.verdict);
        assert_eq!((swapped.chi_g, swapped.chi_h), (rep.chi_h, rep.chi_g));
    }

    #[test]
    fn equal_chi_is_inconclusive() {
        let g = pres(vec![s("S2", -2), s("S2", -2)], 0);
        let rep = obstruction_check(&g, &g, Mode::Theorem).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        // Same χ_ρ from different factors.
        let h = pres(vec![s("A", -1), s("B", -3)], 0);
        assert_eq!(
            obstruction_check(&g, &h, Mode::Weakened).unwrap().verdict,
            Verdict::Inconclusive
        );
    }

    #[test]
    fn hypothesis_errors() {
        let g = pres(vec![s("S2", -2), s("S2", -2)], 0);
        let zero = pres(vec![s("Z", 0), s("S2", -2)], 0);
        assert_eq!(
            obstruction_check(&zero, &g, Mode::Theorem).unwrap_err(),
            ObstructionError::ZeroRho {
                side: Side::G,
                name: "Z".into()
            }
        );
        let finite = pres(vec![c(2), c(3)], 0);
        assert!(matches!(
            obstruction_check(&g, &finite, Mode::Theorem),
            Err(ObstructionError::FiniteFactor { side: Side::H, .. })
        ));
        let one = pres(vec![s("S2", -2)], 0);
        assert!(matches!(
            obstruction_check(&one, &one, Mode::Theorem),
            Err(ObstructionError::TooFewFactors { .. })
        ));
        let three = pres(vec![s("S2", -2), s("S2", -2), s("S2", -2)], 0);
        assert!(matches!(
            obstruction_check(&g, &three, Mode::Theorem),
            Err(ObstructionError::FactorCountMismatch { g: 2, h: 3, .. })
        ));
        let loops = pres(vec![s("S2", -2), s("S2", -2)], 1);
        assert!(matches!(
            obstruction_check(&g, &loops, Mode::Weakened),
            Err(ObstructionError::FreeRank { .. })
        ));
        let unasserted = pres(
            vec![
                Factor::new_abstract("X", Rational::from_integer(-2), false),
                s("S2", -2),
            ],
            0,
        );
        assert!(matches!(
            obstruction_check(&g, &unasserted, Mode::Theorem),
            Err(ObstructionError::NotOneEnded { .. })
        ));
    }

    #[test]
    fn ratio_extended() {
        let g = pres(vec![s("S2", -2), s("S2", -2)], 0);
        let h = pres(vec![s("S2", -2)], 1);
        let rep = obstruction_check(&g, &h, Mode::RatioExtended).unwrap();
        // (−5)/(−1) vs (−3)/(−1).
        assert_eq!(rep.ratio_g, Some(Rational::from_integer(5)));
        assert_eq!(rep.ratio_h, Some(Rational::from_integer(3)));
        assert_eq!(rep.verdict, Verdict::Obstructed);
        assert!(rep.extension);

        // G vs its index-3 subgroup from the symbolic cover bookkeeping.
        let sub = pres(vec![s("P1", -2), s("P2", -4), s("P3", -6)], 1);
        let rep = obstruction_check(&g, &sub, Mode::RatioExtended).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);

        assert!(matches!(
            obstruction_check(&pres(vec![s("S2", -2)], 0), &g, Mode::RatioExtended),
            Err(ObstructionError::Degenerate {
                side: Side::G,
                total: 1
            })
        ));
        // Finite factors make the fiber count non-intrinsic: C2∗C3 contains F2.
        assert!(matches!(
            obstruction_check(
                &pres(vec![c(2), c(3)], 0),
                &Presentation::free(2),
                Mode::RatioExtended
            ),
            Err(ObstructionError::FiniteFactor { .. })
        ));
    }

    #[test]
    fn free_closure_arithmetic() {
        assert_eq!(free_closure(2, 2), Some((2, 1, 1)));
        assert_eq!(free_closure(2, 3), Some((3, 2, 1)));
        assert_eq!(free_closure(3, 4), Some((7, 3, 2)));
        assert_eq!(free_closure(1, 4), None);
        for r1 in 2..12u64 {
            for r2 in 2..12u64 {
                let (r, j1, j2) = free_closure(r1, r2).unwrap();
                assert_eq!((r - 1) % (r1 - 1), 0);
                assert_eq!((r - 1) % (r2 - 1), 0);
                assert_eq!(j1 * (r1 - 1) + 1, r);
                assert_eq!(j2 * (r2 - 1) + 1, r);
            }
        }
    }

    #[test]
    fn witness_c2c2_and_infinite_cyclic() {
        let g = pres(vec![c(2), c(2)], 0);
        let h = Presentation::free(1);
        let w = witness_search(&g, &h, 3, &Limits::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.route, WitnessRoute::Direct);
        assert_eq!((w.g.k, w.h.k), (2, 1));
        assert_eq!(
            w.common,
            KuroshKey {
                labels: vec![],
                free_rank: 1
            }
        );
        assert!(w.consistency.iter().all(|e| e.passed));
    }

    #[test]
    fn witness_via_free_closure() {
        let w = witness_search(
            &Presentation::free(2),
            &Presentation::free(3),
            1,
            &Limits::default(),
        )
        .unwrap()
        .unwrap();
        assert_eq!(
            w.route,
            WitnessRoute::FreeClosure {
                rank_g: 2,
                rank_h: 3,
                common_rank: 3
            }
        );
        assert_eq!((w.g.total_index, w.h.total_index), (2, 1));
        assert!(w.consistency.iter().all(|e| e.passed));
    }

    #[test]
    fn c3c3_sits_in_c2c3_at_index_two() {
        let g = pres(vec![c(2), c(3)], 0);
        let h = pres(vec![c(3), c(3)], 0);
        let w = witness_search(&g, &h, 2, &Limits::default())
            .unwrap()
            .unwrap();
        assert_eq!((w.g.k, w.h.k), (2, 1));
        assert_eq!(w.common.labels.len(), 2);
        assert!(w.common.labels.iter().all(|l| l.order == 3));
        assert_eq!(w.common.free_rank, 0);
    }

    #[test]
    fn no_witness_between_c2c2_and_c3c3() {
        // Torsion in a subgroup is conjugate into the factors, so no
        // subgroup of C2∗C2 has elements of order 3.
        let g = pres(vec![c(2), c(2)], 0);
        let h = pres(vec![c(3), c(3)], 0);
        assert!(witness_search(&g, &h, 3, &Limits::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn witness_errors() {
        let abs = pres(vec![s("S2", -2), s("S2", -2)], 0);
        assert!(matches!(
            witness_search(&abs, &abs, 2, &Limits::default()),
            Err(WitnessError::Cover(CoverError::AbstractFactor(_)))
        ));
        let g = pres(vec![c(2), c(2)], 0);
        assert!(matches!(
            witness_search(&g, &g, 9, &Limits::default()),
            Err(WitnessError::Cover(CoverError::Perm(
                PermError::DegreeBound { .. }
            )))
        ));
        assert_eq!(
            witness_search(&g, &g, 0, &Limits::default()).unwrap_err(),
            WitnessError::ZeroIndex
        );
    }
}
