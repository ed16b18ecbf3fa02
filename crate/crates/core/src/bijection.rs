//! The bijection `P: Av(231) → Av(132)`, its relabelings `λ_π`, and the
//! induced maps `Φ_A`.
//!
//! A 231-avoider is `α ⊕ (1 ⊖ β)` around its maximum, and
//! `P(α ⊕ (1 ⊖ β)) = (P(α) ⊕ 1) ⊖ P(β)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::OperatorExpr;
use crate::perm::{max_position, Permutation};
use crate::tree::DecreasingTree;

/// A permutation read as a map on values, `x ↦ λ(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Relabeling(Permutation);

impl Relabeling {
    pub fn new(map: Permutation) -> Self {
        Relabeling(map)
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0.at(x)
    }

    /// `λ ∘ θ`: relabels the values of `θ`, positions unchanged.
    pub fn on_permutation(&self, theta: &Permutation) -> Permutation {
        self.0.compose(theta)
    }

    pub fn on_tree(&self, t: &DecreasingTree) -> DecreasingTree {
        t.relabel(&|x| self.apply(x))
    }
}

fn contains_231(pi: &Permutation) -> Error {
    Error::ContainsPattern {
        perm: pi.clone(),
        pattern: "2 3 1",
    }
}

/// `P(π)` for `π ∈ Av(231)`; anything else is rejected.
pub fn apply_p(pi: &Permutation) -> Result<Permutation> {
    let mut out = Vec::with_capacity(pi.len());
    if !p_into(pi.values(), 0, &mut out) {
        return Err(contains_231(pi));
    }
    Ok(Permutation::from_vec_unchecked(out))
}

// `word` holds the values `base+1 ..= base+len`. Appends P(word) on the same
// value range; returns false if the word is not a 231-avoider.
fn p_into(word: &[usize], base: usize, out: &mut Vec<usize>) -> bool {
    let Some(m) = max_position(word) else {
        return true;
    };
    let (alpha, beta) = (&word[..m], &word[m + 1..]);
    let a = alpha.len();
    let b = beta.len();
    if alpha.iter().any(|&v| v > base + a) {
        return false;
    }
    // P(α) ⊕ 1 sits above P(β): shift it up by b.
    if !p_into(alpha, base, out) {
        return false;
    }
    let start = out.len() - a;
    for v in &mut out[start..] {
        *v += b;
    }
    out.push(base + a + b + 1);
    let start = out.len();
    if !p_into(beta, base + a, out) {
        return false;
    }
    for v in &mut out[start..] {
        *v -= a;
    }
    true
}

/// `P⁻¹(σ)` for `σ ∈ Av(132)`, inverting `σ = (γ ⊕ 1) ⊖ δ`.
pub fn apply_p_inverse(sigma: &Permutation) -> Result<Permutation> {
    let mut out = Vec::with_capacity(sigma.len());
    if !p_inverse_into(sigma.values(), 0, &mut out) {
        return Err(Error::ContainsPattern {
            perm: sigma.clone(),
            pattern: "1 3 2",
        });
    }
    Ok(Permutation::from_vec_unchecked(out))
}

fn p_inverse_into(word: &[usize], base: usize, out: &mut Vec<usize>) -> bool {
    let Some(m) = max_position(word) else {
        return true;
    };
    let (gamma, delta) = (&word[..m], &word[m + 1..]);
    let g = gamma.len();
    let d = delta.len();
    if delta.iter().any(|&v| v > base + d) {
        return false;
    }
    // P⁻¹(γ) ⊕ (1 ⊖ P⁻¹(δ)): γ moves to the bottom, δ above the new maximum.
    let start = out.len();
    if !p_inverse_into(gamma, base + d, out) {
        return false;
    }
    for v in &mut out[start..] {
        *v -= d;
    }
    out.push(base + g + d + 1);
    let start = out.len();
    if !p_inverse_into(delta, base, out) {
        return false;
    }
    for v in &mut out[start..] {
        *v += g;
    }
    true
}

/// `λ_π`, defined by `P(π) = λ_π ∘ π`.
pub fn lambda_of(pi: &Permutation) -> Result<Relabeling> {
    let image = apply_p(pi)?;
    let mut map = vec![0; pi.len()];
    for (&x, &y) in pi.values().iter().zip(image.values()) {
        map[x - 1] = y;
    }
    Ok(Relabeling(Permutation::from_vec_unchecked(map)))
}

/// `Φ_A(θ) = λ_{A(θ)} ∘ θ`, defined when `S ∘ A` sorts `θ`.
pub fn phi(a: &OperatorExpr, theta: &Permutation) -> Result<Permutation> {
    let image = a.apply(theta);
    let lambda = lambda_of(&image)?;
    Ok(lambda.on_permutation(theta))
}
