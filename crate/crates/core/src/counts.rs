//! Totals over all choices of marked points.
//!
//! For `l` tangency edges the count is the sum, over one interior point per
//! edge, of the multiplicity of the unique maximal path avoiding them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::mu;
use crate::error::Error;
use crate::geometry::{interior_edge_points, BoundaryEdge, LatticePoint, NewtonTriangle};
use crate::path::{build_maximal_path, MarkedConfig};
use crate::real::{mu_real, theorem_sign_sequence, Sign, SignSequence};

/// One marked selection and its path multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelectionResult {
    pub marked: Vec<LatticePoint>,
    pub mu: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_real: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub degree: i64,
    pub edges: Vec<BoundaryEdge>,
    pub per_selection: Vec<SelectionResult>,
    pub total_complex: u64,
    pub total_real: Option<u64>,
    pub sign_sequence: Option<SignSequence>,
}

impl CountReport {
    /// Whether the totals agree with the per-selection lines.
    pub fn is_consistent(&self) -> bool {
        let complex: u64 = self.per_selection.iter().map(|s| s.mu).sum();
        let real: Option<u64> = self.per_selection.iter().map(|s| s.mu_real).sum();
        complex == self.total_complex && real == self.total_real
    }

    /// No closed-form value is known for this number of lines.
    pub fn is_unverified(&self) -> bool {
        known_value(self.degree, self.edges.len()).is_none()
    }
}

fn validate_edges(degree: i64, edges: &[BoundaryEdge]) -> Result<(), Error> {
    if degree < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: degree });
    }
    if edges.len() > 3 {
        return Err(Error::TooManyEdges(edges.len()));
    }
    for (i, e) in edges.iter().enumerate() {
        if edges[..i].contains(e) {
            return Err(Error::DuplicateEdge(*e));
        }
    }
    Ok(())
}

/// Every choice of one interior point per edge, in lexicographic order of
/// the per-edge λ-ordered interiors.
pub fn marked_selections(degree: i64, edges: &[BoundaryEdge]) -> Result<Vec<MarkedConfig>, Error> {
    validate_edges(degree, edges)?;
    let t = NewtonTriangle::new(degree)?;
    let mut selections: Vec<Vec<(BoundaryEdge, LatticePoint)>> = vec![Vec::new()];
    for &edge in edges {
        let interior = interior_edge_points(t, edge);
        selections = selections
            .into_iter()
            .flat_map(|prefix| {
                interior.iter().map(move |&p| {
                    let mut next = prefix.clone();
                    next.push((edge, p));
                    next
                })
            })
            .collect();
    }
    selections
        .into_iter()
        .map(|m| MarkedConfig::new(degree, m))
        .collect()
}

fn evaluate(
    degree: i64,
    edges: &[BoundaryEdge],
    signs: Option<&SignSequence>,
) -> Result<CountReport, Error> {
    let selections = marked_selections(degree, edges)?;
    if let Some(s) = signs {
        let expected = NewtonTriangle::new(degree)?.full_path_length() - edges.len();
        if s.len() != expected {
            return Err(Error::LengthMismatch { expected, got: s.len() });
        }
    }
    // Collecting an indexed parallel iterator keeps selection order.
    let per_selection = selections
        .par_iter()
        .map(|cfg| {
            let path = build_maximal_path(cfg);
            let mu_real = signs.map(|s| mu_real(&path, s)).transpose()?;
            Ok(SelectionResult {
                marked: cfg.marked_points(),
                mu: mu(&path),
                mu_real,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let total_complex = per_selection.iter().map(|s| s.mu).sum();
    let total_real = signs.map(|_| per_selection.iter().filter_map(|s| s.mu_real).sum());
    Ok(CountReport {
        degree,
        edges: edges.to_vec(),
        per_selection,
        total_complex,
        total_real,
        sign_sequence: signs.cloned(),
    })
}

/// `N_d(l)` for tangency to the given distinct edges.
pub fn complex_count(degree: i64, edges: &[BoundaryEdge]) -> Result<CountReport, Error> {
    evaluate(degree, edges, None)
}

/// Complex total plus the signed total for `signs`.
pub fn real_count(
    degree: i64,
    edges: &[BoundaryEdge],
    signs: &SignSequence,
) -> Result<CountReport, Error> {
    evaluate(degree, edges, Some(signs))
}

/// Closed forms: 1 curve through `d(d+3)/2` points, `2(d−1)` for one line,
/// `4(d−1)²` for two. Nothing for three lines.
pub fn known_value(degree: i64, lines: usize) -> Option<u64> {
    if degree < 2 {
        return None;
    }
    let k = 2 * (degree as u64 - 1);
    match lines {
        0 => Some(1),
        1 => Some(k),
        2 => Some(k * k),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    pub degree: i64,
    pub complex: CountReport,
    pub real: CountReport,
    pub equal: bool,
    /// Every selection has `μ = μℝ = 4`.
    pub all_four: bool,
}

/// Two lines (hypotenuse and vertical axis) with the theorem sign sequence.
pub fn maximality_report(degree: i64) -> Result<MaximalityReport, Error> {
    let edges = [BoundaryEdge::Hypotenuse, BoundaryEdge::Vertical];
    let signs = theorem_sign_sequence(degree)?;
    let real = real_count(degree, &edges, &signs)?;
    let complex = complex_count(degree, &edges)?;
    let all_four = real
        .per_selection
        .iter()
        .all(|s| s.mu == 4 && s.mu_real == Some(4));
    Ok(MaximalityReport {
        degree,
        equal: real.total_real == Some(complex.total_complex),
        complex,
        real,
        all_four,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Every sequence in `(ℤ₂²)ⁿ`; needs `4ⁿ ≤ budget`.
    Exhaustive,
    /// Hill climbing by single-sign changes from random starts; `budget`
    /// caps the number of evaluated sequences.
    RandomRestart { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub best: SignSequence,
    pub total_real: u64,
    pub total_complex: u64,
    pub evaluated: u64,
}

/// Looks for a sign sequence maximizing the real count.
pub fn sign_search(
    degree: i64,
    edges: &[BoundaryEdge],
    strategy: SearchStrategy,
    budget: u64,
) -> Result<SearchResult, Error> {
    validate_edges(degree, edges)?;
    let len = NewtonTriangle::new(degree)?.full_path_length() - edges.len();
    let paths: Vec<_> = marked_selections(degree, edges)?
        .iter()
        .map(build_maximal_path)
        .collect();
    let total_complex: u64 = paths.iter().map(mu).sum();
    let score = |s: &SignSequence| -> Result<u64, Error> {
        paths.iter().map(|p| mu_real(p, s)).sum()
    };

    match strategy {
        SearchStrategy::Exhaustive => {
            let space = 2u32
                .checked_mul(len as u32)
                .and_then(|bits| 1u64.checked_shl(bits))
                .filter(|&n| n <= budget);
            let Some(space) = space else {
                return Err(Error::BudgetExceeded {
                    space: format!("4^{len}"),
                    budget,
                });
            };
            let mut best: Option<(u64, SignSequence)> = None;
            for code in 0..space {
                let seq = SignSequence(
                    (0..len)
                        .map(|i| Sign::from_index(((code >> (2 * i)) & 3) as u8))
                        .collect(),
                );
                let total = score(&seq)?;
                if best.as_ref().is_none_or(|(b, _)| total > *b) {
                    best = Some((total, seq));
                }
                if total == total_complex {
                    break;
                }
            }
            let (total_real, best) = best.expect("space is nonempty");
            Ok(SearchResult {
                best,
                total_real,
                total_complex,
                evaluated: space.min(budget),
            })
        }
        SearchStrategy::RandomRestart { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut evaluated = 0u64;
            let mut best: Option<(u64, SignSequence)> = None;
            'restarts: while evaluated < budget {
                let mut current =
                    SignSequence((0..len).map(|_| Sign::from_index(rng.gen_range(0..4))).collect());
                let mut current_score = score(&current)?;
                evaluated += 1;
                loop {
                    if best.as_ref().is_none_or(|(b, _)| current_score > *b) {
                        best = Some((current_score, current.clone()));
                    }
                    if current_score == total_complex {
                        break 'restarts;
                    }
                    let mut improved = false;
                    'moves: for i in 0..len {
                        for s in Sign::ALL {
                            if s == current.0[i] {
                                continue;
                            }
                            if evaluated >= budget {
                                break 'restarts;
                            }
                            let mut candidate = current.clone();
                            candidate.0[i] = s;
                            let candidate_score = score(&candidate)?;
                            evaluated += 1;
                            if candidate_score > current_score {
                                current = candidate;
                                current_score = candidate_score;
                                improved = true;
                                break 'moves;
                            }
                        }
                    }
                    if !improved {
                        break;
                    }
                }
            }
            let (total_real, best) = best.unwrap_or_else(|| (0, SignSequence::constant(Sign::PP, len)));
            Ok(SearchResult {
                best,
                total_real,
                total_complex,
                evaluated,
            })
        }
    }
}
