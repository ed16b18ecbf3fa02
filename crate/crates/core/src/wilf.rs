//! Pattern families `λ_n`, `ρ_n`, the wedge patterns `λ_k ⊕ (1 ⊖ ρ_{n-k-1})`,
//! and finite checks of the class bijections and Wilf-equivalences they
//! give rise to.
//!
//! Every check here runs up to an explicit size bound and is labelled
//! accordingly; nothing is claimed beyond that bound.

use serde::{Deserialize, Serialize};

use crate::bijection::apply_p;
use crate::error::{Error, Result};
use crate::pattern::{avoids_all, contains, enumerate_avoiders};
use crate::perm::Permutation;
use crate::series::PowerSeries;

/// Default size bound for class-bijection checks.
pub const DEFAULT_BOUND: usize = 8;

fn families(n: usize) -> (Permutation, Permutation) {
    let one = Permutation::identity(1);
    let mut lambda = Permutation::empty();
    let mut rho = Permutation::empty();
    for _ in 0..n {
        let next_lambda = one.skew_sum(&rho);
        let next_rho = lambda.direct_sum(&one);
        lambda = next_lambda;
        rho = next_rho;
    }
    (lambda, rho)
}

/// `λ_0 = ε`, `λ_{n+1} = 1 ⊖ ρ_n`.
pub fn lambda_family(n: usize) -> Permutation {
    families(n).0
}

/// `ρ_0 = ε`, `ρ_{n+1} = λ_n ⊕ 1`.
pub fn rho_family(n: usize) -> Permutation {
    families(n).1
}

/// `λ_k ⊕ (1 ⊖ ρ_{n-k-1})` for `0 ≤ k ≤ n-1`; `ε` when `n = 0`.
pub fn wedge_pattern(n: usize, k: usize) -> Result<Permutation> {
    if n == 0 {
        return Ok(Permutation::empty());
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let tail = Permutation::identity(1).skew_sum(&rho_family(n - k - 1));
    Ok(lambda_family(k).direct_sum(&tail))
}

pub fn wedge_patterns(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::empty()];
    }
    (0..n).map(|k| wedge_pattern(n, k).unwrap()).collect()
}

/// `π = α ⊕ β` with both parts nonempty.
pub fn is_sum_decomposable(pi: &Permutation) -> bool {
    let mut running_max = 0;
    for (i, &v) in pi
        .values()
        .iter()
        .enumerate()
        .take(pi.len().saturating_sub(1))
    {
        running_max = running_max.max(v);
        if running_max == i + 1 {
            return true;
        }
    }
    false
}

/// `π = α ⊖ β` with both parts nonempty.
pub fn is_skew_decomposable(pi: &Permutation) -> bool {
    let n = pi.len();
    let mut running_min = usize::MAX;
    for (i, &v) in pi.values().iter().enumerate().take(n.saturating_sub(1)) {
        running_min = running_min.min(v);
        if running_min == n - i {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassBijection {
    pub pattern: Permutation,
    /// Every `σ ∈ Av(231)` with `|σ| ≤ bound` was checked.
    pub bound: usize,
    pub holds: bool,
    /// Smallest (by size, then lexicographically) `σ` for which
    /// `σ ⊇ π` and `P(σ) ⊇ P(π)` disagree.
    pub witness: Option<Permutation>,
}

/// Whether `σ` contains `π` exactly when `P(σ)` contains `P(π)`, over all
/// `σ ∈ Av(231)` up to `bound`.
pub fn p_bijects_classes(pi: &Permutation, bound: usize) -> Result<ClassBijection> {
    let p_pi = apply_p(pi)?;
    let b231 = [Permutation::from_vec_unchecked(vec![2, 3, 1])];
    for size in 0..=bound {
        for sigma in enumerate_avoiders(&b231, size) {
            let p_sigma = apply_p(&sigma)?;
            if contains(&sigma, pi) != contains(&p_sigma, &p_pi) {
                return Ok(ClassBijection {
                    pattern: pi.clone(),
                    bound,
                    holds: false,
                    witness: Some(sigma),
                });
            }
        }
    }
    Ok(ClassBijection {
        pattern: pi.clone(),
        bound,
        holds: true,
        witness: None,
    })
}

/// Every `π ∈ Av_n(231)` passing [`p_bijects_classes`] at `bound`.
pub fn classify_patterns(n: usize, bound: usize) -> Vec<Permutation> {
    let b231 = [Permutation::from_vec_unchecked(vec![2, 3, 1])];
    enumerate_avoiders(&b231, n)
        .filter(|pi| {
            p_bijects_classes(pi, bound)
                .map(|r| r.holds)
                .unwrap_or(false)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub bound: usize,
    pub found: Vec<Permutation>,
    pub wedge_patterns: Vec<Permutation>,
    pub matches_wedges: bool,
    /// Non-wedge candidates with the `σ` that rules them out.
    pub rejected: Vec<ClassBijection>,
}

pub fn classify(n: usize, bound: usize) -> Classification {
    let b231 = [Permutation::from_vec_unchecked(vec![2, 3, 1])];
    let mut found = Vec::new();
    let mut rejected = Vec::new();
    for pi in enumerate_avoiders(&b231, n) {
        let check = p_bijects_classes(&pi, bound).expect("pattern avoids 231");
        if check.holds {
            found.push(pi);
        } else {
            rejected.push(check);
        }
    }
    let mut wedges = wedge_patterns(n);
    wedges.sort();
    Classification {
        n,
        bound,
        matches_wedges: found == wedges,
        found,
        wedge_patterns: wedges,
        rejected,
    }
}

/// `F_1 = 1`, `F_{n+1} = 1 / (1 - t F_n)`, truncated at `t^order`.
pub fn series_f(n: usize, order: usize) -> Result<PowerSeries> {
    if n == 0 {
        return Err(Error::SizeTooSmall(0));
    }
    let one = PowerSeries::one(order);
    let mut f = one.clone();
    for _ in 1..n {
        f = one.sub(&f.shift())?.reciprocal()?;
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub k: usize,
    pub pattern: Permutation,
    /// `counts[m] = |Av_m(231, pattern)|`.
    pub counts: Vec<u64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGfReport {
    pub n: usize,
    pub order: usize,
    pub series: Vec<i128>,
    pub classes: Vec<ClassCounts>,
    pub passed: bool,
}

pub fn class_counts(basis: &[Permutation], order: usize) -> Vec<u64> {
    (0..=order)
        .map(|m| enumerate_avoiders(basis, m).count() as u64)
        .collect()
}

/// Compares the coefficients of `F_n` with brute-force counts of
/// `Av(231, wedge(n, k))` for every `k`.
pub fn check_class_gf(n: usize, order: usize) -> Result<ClassGfReport> {
    let series = series_f(n, order)?;
    let b231 = Permutation::from_vec_unchecked(vec![2, 3, 1]);
    let classes: Vec<ClassCounts> = (0..n)
        .map(|k| {
            let pattern = wedge_pattern(n, k)?;
            let counts = class_counts(&[b231.clone(), pattern.clone()], order);
            let matches = counts
                .iter()
                .zip(series.coefficients())
                .all(|(&c, &s)| c as i128 == s);
            Ok(ClassCounts {
                k,
                pattern,
                counts,
                matches,
            })
        })
        .collect::<Result<_>>()?;
    let passed = classes.iter().all(|c| c.matches);
    Ok(ClassGfReport {
        n,
        order,
        series: series.coefficients().to_vec(),
        classes,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfPairReport {
    pub n: usize,
    pub k: usize,
    pub source: Permutation,
    pub target: Permutation,
    /// `k = n - k - 1`: the class is mapped to itself.
    pub self_paired: bool,
    pub order: usize,
    pub source_counts: Vec<u64>,
    pub target_counts: Vec<u64>,
    /// `σ ↦ R(P(σ))` maps each size-`m` slice of the source class onto the
    /// target class, injectively, for all `m ≤ order`.
    pub bijective: bool,
    pub witness: Option<Permutation>,
}

pub fn check_wilf_pair(n: usize, k: usize, order: usize) -> Result<WilfPairReport> {
    if n == 0 {
        return Err(Error::SizeTooSmall(0));
    }
    let source = wedge_pattern(n, k)?;
    let target = wedge_pattern(n, n - k - 1)?;
    let b231 = Permutation::from_vec_unchecked(vec![2, 3, 1]);
    let source_basis = [b231.clone(), source.clone()];
    let target_basis = [b231, target.clone()];

    let mut source_counts = Vec::with_capacity(order + 1);
    let mut target_counts = Vec::with_capacity(order + 1);
    let mut bijective = true;
    let mut witness = None;
    for m in 0..=order {
        let class: Vec<Permutation> = enumerate_avoiders(&source_basis, m).collect();
        let expected: Vec<Permutation> = enumerate_avoiders(&target_basis, m).collect();
        let mut images = Vec::with_capacity(class.len());
        for sigma in &class {
            let image = apply_p(sigma)?.reverse();
            if witness.is_none() && !avoids_all(&image, &target_basis) {
                witness = Some(sigma.clone());
            }
            images.push(image);
        }
        images.sort_unstable();
        if images != expected {
            bijective = false;
        }
        source_counts.push(class.len() as u64);
        target_counts.push(expected.len() as u64);
    }
    Ok(WilfPairReport {
        n,
        k,
        source,
        target,
        self_paired: 2 * k + 1 == n,
        order,
        source_counts,
        target_counts,
        bijective: bijective && witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfSummary {
    pub classification: Classification,
    pub pairs: Vec<WilfPairReport>,
    /// Indices `k` whose pair `{k, n-k-1}` already appeared for a smaller
    /// `k`, or which are paired with themselves.
    pub redundant: Vec<usize>,
    pub passed: bool,
}

pub fn wilf_summary(n: usize, bound: usize, order: usize) -> Result<WilfSummary> {
    let classification = classify(n, bound);
    let pairs: Vec<WilfPairReport> = (0..n)
        .map(|k| check_wilf_pair(n, k, order))
        .collect::<Result<_>>()?;
    let redundant = (0..n).filter(|&k| n - k - 1 <= k).collect();
    let passed = classification.matches_wedges && pairs.iter().all(|p| p.bijective);
    Ok(WilfSummary {
        classification,
        pairs,
        redundant,
        passed,
    })
}
