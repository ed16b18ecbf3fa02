//! Sets of permutations sorted by `S ∘ A`, and exhaustive finite checks of
//! the bijection `Φ_A` between the sets sorted by `S ∘ A` and `S ∘ R ∘ A`.
//!
//! Results are "verified up to the given size", never more.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijection::{apply_p, lambda_of, phi};
use crate::error::Result;
use crate::operators::{Op, OperatorExpr};
use crate::pattern::{avoids, enumerate, enumerate_avoiders};
use crate::perm::Permutation;
use crate::stats::{stats, StatVector, Statistic};
use crate::tree::tin;

/// Upper bound on stored counterexamples per report.
pub const MAX_COUNTEREXAMPLES: usize = 20;

/// Default cap on permutations generated while inverting an operator on a
/// single permutation.
pub const DEFAULT_NODE_BUDGET: usize = 50_000_000;

fn pattern_231() -> Permutation {
    Permutation::from_vec_unchecked(vec![2, 3, 1])
}

/// All `θ` of size `n` sorted by `S ∘ A`, i.e. with `A(θ)` avoiding 231.
///
/// Built as the disjoint union of `A⁻¹(π)` over `π ∈ Av_n(231)`.
pub fn sorted_set(a: &OperatorExpr, n: usize) -> Vec<Permutation> {
    sorted_set_budgeted(a, n, usize::MAX).expect("unbounded budget")
}

pub fn sorted_set_budgeted(a: &OperatorExpr, n: usize, budget: usize) -> Result<Vec<Permutation>> {
    let targets: Vec<Permutation> = enumerate_avoiders(&[pattern_231()], n).collect();
    let fibers: Vec<Vec<Permutation>> = targets
        .par_iter()
        .map(|pi| a.preimages_budgeted(pi, budget))
        .collect::<Result<_>>()?;
    let mut out: Vec<Permutation> = fibers.into_iter().flatten().collect();
    out.sort_unstable();
    Ok(out)
}

/// [`sorted_set`] by filtering all `n!` permutations.
pub fn sorted_set_by_filter(a: &OperatorExpr, n: usize) -> Vec<Permutation> {
    let all: Vec<Permutation> = enumerate(n).collect();
    let pat = pattern_231();
    all.into_par_iter()
        .filter(|theta| avoids(&a.apply(theta), &pat))
        .collect()
}

/// Sizes of [`sorted_set`] for `n = 1..=n_max`.
pub fn count_sorted(a: &OperatorExpr, n_max: usize) -> Vec<usize> {
    (1..=n_max).map(|n| sorted_set(a, n).len()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    /// Counting, bijection and statistics between the two sorted sets.
    Theorem,
    /// Fiber-by-fiber compatibility of `Φ_A` with `P`.
    RespectsP,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub theta: Option<Permutation>,
    pub image: Option<Permutation>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: ReportKind,
    pub operator: OperatorExpr,
    pub size: usize,
    /// Number of permutations sorted by `S ∘ A` (fiber total for
    /// [`ReportKind::RespectsP`]).
    pub count_sa: usize,
    /// Number sorted by `S ∘ R ∘ A` (image fiber total for
    /// [`ReportKind::RespectsP`]).
    pub count_sra: usize,
    pub equidistributed_stats: Vec<StatCheck>,
    pub phi_bijective: bool,
    pub phi_pointwise_preserved: Vec<StatCheck>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.count_sa == self.count_sra
            && self.phi_bijective
            && self.equidistributed_stats.iter().all(|c| c.pass)
            && self.phi_pointwise_preserved.iter().all(|c| c.pass)
            && self.counterexamples.is_empty()
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.phi_pointwise_preserved
            .iter()
            .chain(&self.equidistributed_stats)
            .find(|c| c.name == name)
            .map(|c| c.pass)
    }
}

#[derive(Default)]
struct Collector {
    counterexamples: Vec<Counterexample>,
}

impl Collector {
    fn push(
        &mut self,
        check: &str,
        theta: Option<&Permutation>,
        image: Option<&Permutation>,
        detail: String,
    ) {
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                check: check.to_string(),
                theta: theta.cloned(),
                image: image.cloned(),
                detail,
            });
        }
    }
}

/// Statistics expected to be preserved by `Φ_A` for this operator.
pub fn preserved_statistics(a: &OperatorExpr) -> Vec<Statistic> {
    let mut list = Statistic::SHAPE_DETERMINED.to_vec();
    if a.ends_with_s() {
        list.push(Statistic::Zeil);
    }
    if a.has_s_r_s_suffix() {
        list.push(Statistic::Rzeil);
    }
    list
}

struct PhiRow {
    theta: Permutation,
    image: std::result::Result<Permutation, String>,
    before: StatVector,
    after: Option<StatVector>,
}

/// Exhaustive check at size `n`: equal counts, `Φ_A` a bijection between
/// the two sorted sets, pointwise preservation of the statistics from
/// [`preserved_statistics`], and their equidistribution.
pub fn verify_theorem(a: &OperatorExpr, n: usize, budget: usize) -> Result<VerificationReport> {
    let ra = a.after(Op::R);
    let set_a = sorted_set_budgeted(a, n, budget)?;
    let set_ra = sorted_set_budgeted(&ra, n, budget)?;
    let statistics = preserved_statistics(a);
    let mut found = Collector::default();

    if set_a.len() != set_ra.len() {
        found.push(
            "counts",
            None,
            None,
            format!(
                "{} sorted by S∘A, {} sorted by S∘R∘A",
                set_a.len(),
                set_ra.len()
            ),
        );
    }

    let rows: Vec<PhiRow> = set_a
        .par_iter()
        .map(|theta| {
            let image = phi(a, theta).map_err(|e| e.to_string());
            let after = image.as_ref().ok().map(stats);
            PhiRow {
                theta: theta.clone(),
                image,
                before: stats(theta),
                after,
            }
        })
        .collect();

    let mut pointwise: Vec<StatCheck> = statistics
        .iter()
        .map(|s| StatCheck {
            name: s.name().to_string(),
            pass: true,
        })
        .collect();
    let mut images = Vec::with_capacity(rows.len());
    for row in &rows {
        match (&row.image, &row.after) {
            (Ok(image), Some(after)) => {
                for (check, stat) in pointwise.iter_mut().zip(&statistics) {
                    let (x, y) = (stat.project(&row.before), stat.project(after));
                    if x != y {
                        check.pass = false;
                        found.push(
                            stat.name(),
                            Some(&row.theta),
                            Some(image),
                            format!("{x} became {y}"),
                        );
                    }
                }
                images.push(image.clone());
            }
            (Err(e), _) => {
                found.push("phi_defined", Some(&row.theta), None, e.clone());
            }
            (Ok(_), None) => unreachable!("statistics are computed for every image"),
        }
    }

    images.sort_unstable();
    let phi_bijective = images.len() == set_a.len() && images == set_ra;
    if !phi_bijective {
        if let Some(w) = images.windows(2).find(|w| w[0] == w[1]) {
            found.push("phi_bijective", None, Some(&w[0]), "image hit twice".into());
        }
        if let Some(stray) = images.iter().find(|p| set_ra.binary_search(p).is_err()) {
            found.push(
                "phi_bijective",
                None,
                Some(stray),
                "image not sorted by S∘R∘A".into(),
            );
        }
        if let Some(missed) = set_ra.iter().find(|p| images.binary_search(p).is_err()) {
            found.push(
                "phi_bijective",
                None,
                Some(missed),
                "not reached by Φ_A".into(),
            );
        }
        if found.counterexamples.is_empty() {
            found.push("phi_bijective", None, None, "image set differs".into());
        }
    }

    let before_stats: Vec<StatVector> = rows.iter().map(|r| r.before.clone()).collect();
    let target_stats: Vec<StatVector> = set_ra.par_iter().map(stats).collect();
    let mut equidistributed = Vec::with_capacity(statistics.len());
    for stat in &statistics {
        let mut left: Vec<String> = before_stats.iter().map(|s| stat.project(s)).collect();
        let mut right: Vec<String> = target_stats.iter().map(|s| stat.project(s)).collect();
        left.sort_unstable();
        right.sort_unstable();
        let pass = left == right;
        if !pass {
            found.push(stat.name(), None, None, "distributions differ".into());
        }
        equidistributed.push(StatCheck {
            name: stat.name().to_string(),
            pass,
        });
    }

    Ok(VerificationReport {
        kind: ReportKind::Theorem,
        operator: a.clone(),
        size: n,
        count_sa: set_a.len(),
        count_sra: set_ra.len(),
        equidistributed_stats: equidistributed,
        phi_bijective,
        phi_pointwise_preserved: pointwise,
        counterexamples: found.counterexamples,
    })
}

struct FiberOutcome {
    fiber: usize,
    target: usize,
    bijective: bool,
    problems: Vec<Counterexample>,
    sends_to_p: bool,
    tree_relabeled: bool,
}

/// For every `π ∈ Av_n(231)` in the image of `A` and every `θ ∈ A⁻¹(π)`:
/// `A(Φ_A(θ)) = P(π)`, `T_in(Φ_A(θ)) = λ_π(T_in(θ))`, and `Φ_A` maps
/// `A⁻¹(π)` onto `A⁻¹(P(π))` bijectively.
pub fn verify_respects_p(a: &OperatorExpr, n: usize, budget: usize) -> Result<VerificationReport> {
    let targets: Vec<Permutation> = enumerate_avoiders(&[pattern_231()], n).collect();
    let outcomes: Vec<FiberOutcome> = targets
        .par_iter()
        .map(|pi| fiber_outcome(a, pi, budget))
        .collect::<Result<_>>()?;

    let mut found = Collector::default();
    let mut count_sa = 0;
    let mut count_sra = 0;
    let mut bijective = true;
    let mut sends_to_p = true;
    let mut tree_relabeled = true;
    for o in outcomes {
        count_sa += o.fiber;
        count_sra += o.target;
        bijective &= o.bijective;
        sends_to_p &= o.sends_to_p;
        tree_relabeled &= o.tree_relabeled;
        for c in o.problems {
            found.push(&c.check, c.theta.as_ref(), c.image.as_ref(), c.detail);
        }
    }
    if count_sa != count_sra {
        found.push(
            "counts",
            None,
            None,
            format!("fibers total {count_sa} vs {count_sra}"),
        );
    }

    Ok(VerificationReport {
        kind: ReportKind::RespectsP,
        operator: a.clone(),
        size: n,
        count_sa,
        count_sra,
        equidistributed_stats: Vec::new(),
        phi_bijective: bijective,
        phi_pointwise_preserved: vec![
            StatCheck {
                name: "image_is_p".into(),
                pass: sends_to_p,
            },
            StatCheck {
                name: "tin_relabeled".into(),
                pass: tree_relabeled,
            },
        ],
        counterexamples: found.counterexamples,
    })
}

fn fiber_outcome(a: &OperatorExpr, pi: &Permutation, budget: usize) -> Result<FiberOutcome> {
    let fiber = a.preimages_budgeted(pi, budget)?;
    let mut outcome = FiberOutcome {
        fiber: fiber.len(),
        target: 0,
        bijective: true,
        problems: Vec::new(),
        sends_to_p: true,
        tree_relabeled: true,
    };
    if fiber.is_empty() {
        return Ok(outcome);
    }
    let p_pi = apply_p(pi)?;
    let lambda = lambda_of(pi)?;
    let target = a.preimages_budgeted(&p_pi, budget)?;
    outcome.target = target.len();

    let mut images = Vec::with_capacity(fiber.len());
    for theta in &fiber {
        let image = phi(a, theta)?;
        if a.apply(&image) != p_pi {
            outcome.sends_to_p = false;
            outcome.problems.push(Counterexample {
                check: "image_is_p".into(),
                theta: Some(theta.clone()),
                image: Some(image.clone()),
                detail: format!("A(Φ_A(θ)) = {}, P(π) = {p_pi}", a.apply(&image)),
            });
        }
        if tin(&image) != lambda.on_tree(&tin(theta)) {
            outcome.tree_relabeled = false;
            outcome.problems.push(Counterexample {
                check: "tin_relabeled".into(),
                theta: Some(theta.clone()),
                image: Some(image.clone()),
                detail: format!("π = {pi}"),
            });
        }
        images.push(image);
    }
    images.sort_unstable();
    if images != target {
        outcome.bijective = false;
        outcome.problems.push(Counterexample {
            check: "phi_bijective".into(),
            theta: None,
            image: None,
            detail: format!("Φ_A(A⁻¹({pi})) differs from A⁻¹({p_pi})"),
        });
    }
    Ok(outcome)
}
