//! Extension of piecewise polynomial data from a union of coordinate
//! varieties, and division of polynomials vanishing on such a union.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomideal::{associated_monomials, ideal_membership, TypeLambda};
use crate::poly::SparsePoly;
use crate::subset::{binomial, minimal_elements, Subset};

/// One polynomial per component of a type. On component `i` the function
/// is `x ↦ h_i(π_i(x))`, i.e. `h_i` with the variables of `λ_i` set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePoly {
    lambda: TypeLambda,
    pieces: Vec<SparsePoly>,
}

impl PiecewisePoly {
    /// Checks counts and variable numbers; compatibility is checked by
    /// [`check_compatible`] and by [`extend_inclusion_exclusion`].
    pub fn new(lambda: TypeLambda, pieces: Vec<SparsePoly>) -> Result<Self> {
        if pieces.len() != lambda.len() {
            return Err(Error::input(format!(
                "{} pieces for {} components",
                pieces.len(),
                lambda.len()
            )));
        }
        if let Some(p) = pieces.iter().find(|p| p.nvars() != lambda.ambient()) {
            return Err(Error::input(format!(
                "piece in {} variables on a type in {} variables",
                p.nvars(),
                lambda.ambient()
            )));
        }
        Ok(PiecewisePoly { lambda, pieces })
    }

    pub fn lambda(&self) -> &TypeLambda {
        &self.lambda
    }

    pub fn pieces(&self) -> &[SparsePoly] {
        &self.pieces
    }

    /// `h_i` on the components listed in `indices` (all of them agree there
    /// when the data is compatible).
    fn restricted(&self, representative: usize, indices: Subset) -> SparsePoly {
        let vars = indices
            .iter()
            .fold(Subset::EMPTY, |a, i| a.union(self.lambda.components()[i]));
        self.pieces[representative]
            .substitute_zero(vars)
            .expect("type variables are in range")
    }

    fn first_conflict(&self) -> Option<(usize, usize)> {
        let s = self.pieces.len();
        (0..s)
            .flat_map(|i| (i + 1..s).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let both = Subset::singleton(i).with(j);
                self.restricted(i, both) != self.restricted(j, both)
            })
    }
}

/// The pieces agree, for every pair `i < j`, on `L_i ∩ L_j`.
pub fn check_compatible(lambda: &TypeLambda, pieces: &[SparsePoly]) -> Result<bool> {
    let data = PiecewisePoly::new(lambda.clone(), pieces.to_vec())?;
    Ok(data.first_conflict().is_none())
}

/// `H = Σ_{∅ ≠ I} (-1)^{#I+1} h ∘ π_I`, where `h ∘ π_I` is evaluated with
/// the piece of the smallest index in `I`.
pub fn extend_inclusion_exclusion(data: &PiecewisePoly) -> Result<SparsePoly> {
    extend_with_representatives(data, |i| i.min().expect("nonempty"))
}

/// Inclusion-exclusion extension with a caller-chosen representative piece
/// (which must belong to `I`) for each index set `I`.
pub fn extend_with_representatives(
    data: &PiecewisePoly,
    mut representative: impl FnMut(Subset) -> usize,
) -> Result<SparsePoly> {
    if let Some((i, j)) = data.first_conflict() {
        return Err(Error::precondition(format!(
            "pieces {} and {} disagree on the intersection of their components",
            i + 1,
            j + 1
        )));
    }
    let s = data.pieces.len();
    let mut h = SparsePoly::zero(data.lambda.ambient());
    for i in Subset::nonempty_subsets(s) {
        let r = representative(i);
        if !i.contains(r) {
            return Err(Error::input(format!("representative {} not in {i}", r + 1)));
        }
        let term = data.restricted(r, i);
        h = if i.len() % 2 == 1 { h.add(&term)? } else { h.sub(&term)? };
    }
    Ok(h)
}

/// `f = f1 · x_v + g` with `g = f(x_v = 0)`.
pub fn lemma_easy_split(f: &SparsePoly, v: usize) -> Result<(SparsePoly, SparsePoly)> {
    if v >= f.nvars() {
        return Err(Error::input(format!("variable index {} out of range", v + 1)));
    }
    let g = f.substitute_zero(Subset::singleton(v))?;
    let f1 = f.sub(&g)?.variable_quotient(v)?;
    Ok((f1, g))
}

/// `f = Σ_σ f_σ x^σ` over transversals `σ` of a type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Total degree of the divided polynomial (`None` for zero).
    pub degree: Option<u32>,
    pub entries: BTreeMap<Subset, SparsePoly>,
}

impl Decomposition {
    /// `Σ_σ f_σ x^σ`.
    pub fn recombine(&self, nvars: usize) -> SparsePoly {
        self.entries.iter().fold(SparsePoly::zero(nvars), |acc, (&sigma, c)| {
            acc.add(&c.mul_monomial(sigma).expect("sigma in range")).expect("same nvars")
        })
    }

    fn push(&mut self, sigma: Subset, coeff: SparsePoly) {
        if coeff.is_zero() {
            return;
        }
        let merged = match self.entries.remove(&sigma) {
            Some(old) => old.add(&coeff).expect("same nvars"),
            None => coeff,
        };
        if !merged.is_zero() {
            self.entries.insert(sigma, merged);
        }
    }
}

/// Divide `f`, which must vanish on the union of `Λ`'s components, by the
/// associated square-free monomials.
///
/// The recursion splits off `x_v` for the smallest variable `v` of the first
/// component. The quotient vanishes on the components without `x_v` (fewer
/// components); the remainder `f(x_v = 0)` vanishes on the components with
/// `x_v` removed (one dimension less), unless some component is the
/// hyperplane `x_v = 0`, which forces the remainder to be zero. A single
/// component is handled by splitting on each of its variables in turn.
///
/// With `fold_to_minimal`, each entry whose `σ` is not a minimal generator
/// is moved onto the first minimal generator `σ' ⊆ σ`, its coefficient
/// multiplied by `x^{σ∖σ'}`.
pub fn divide_on_crossings(lambda: &TypeLambda, f: &SparsePoly, fold_to_minimal: bool) -> Result<Decomposition> {
    if f.nvars() != lambda.ambient() {
        return Err(Error::input(format!(
            "polynomial in {} variables on a type in {} variables",
            f.nvars(),
            lambda.ambient()
        )));
    }
    let ideal = associated_monomials(lambda);
    if !ideal_membership(f, &ideal)? {
        return Err(Error::precondition("not in ideal: the polynomial does not vanish on every component"));
    }
    let mut out = Decomposition { degree: f.degree(), entries: BTreeMap::new() };
    divide_rec(lambda.components(), f, Subset::EMPTY, &mut out)?;
    if fold_to_minimal {
        let raw = std::mem::take(&mut out.entries);
        for (sigma, c) in raw {
            let base = ideal
                .generators()
                .iter()
                .copied()
                .find(|g| g.is_subset(sigma))
                .expect("every entry is a transversal");
            out.push(base, c.mul_monomial(sigma.difference(base))?);
        }
    }
    Ok(out)
}

fn divide_rec(components: &[Subset], f: &SparsePoly, prefix: Subset, out: &mut Decomposition) -> Result<()> {
    if f.is_zero() {
        return Ok(());
    }
    let Some(&first) = components.first() else {
        out.push(prefix, f.clone());
        return Ok(());
    };
    if components.len() == 1 {
        let mut g = f.clone();
        for v in first.iter() {
            let (fv, rest) = lemma_easy_split(&g, v)?;
            out.push(prefix.with(v), fv);
            g = rest;
        }
        if !g.is_zero() {
            return Err(Error::precondition("remainder does not vanish on the component"));
        }
        return Ok(());
    }
    let v = first.min().expect("components are nonempty");
    let (f1, g) = lemma_easy_split(f, v)?;
    let without_v: Vec<Subset> = components.iter().copied().filter(|l| !l.contains(v)).collect();
    divide_rec(&without_v, &f1, prefix.with(v), out)?;
    if components.iter().any(|l| *l == Subset::singleton(v)) {
        if !g.is_zero() {
            return Err(Error::precondition("remainder does not vanish on the hyperplane"));
        }
        return Ok(());
    }
    divide_rec(&restrict_to_hyperplane(components, v), &g, prefix, out)
}

/// `{λ_i ∖ {v}}` with duplicates and non-minimal members removed, in input
/// order of first occurrence.
fn restrict_to_hyperplane(components: &[Subset], v: usize) -> Vec<Subset> {
    let reduced: Vec<Subset> = components.iter().map(|l| l.without(v)).collect();
    let minimal = minimal_elements(reduced.iter().copied());
    let mut out: Vec<Subset> = Vec::new();
    for l in reduced {
        if minimal.contains(&l) && !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

/// Differentiability classes lost when approximating maps into a target of
/// dimension `n` from a source of dimension `m`: `m (C(n, ⌊n/2⌋) − 1)` in
/// general and `m (n − 1)` when the target is a normal crossing divisor.
pub fn loss_constant(m: u64, n: u64, divisor: bool) -> Result<u128> {
    if m < 1 || n < 1 {
        return Err(Error::input("dimensions must be at least 1"));
    }
    let overflow = || Error::resource("loss constant overflows");
    let factor = if divisor {
        u128::from(n - 1)
    } else {
        binomial(n, n / 2).ok_or_else(overflow)? - 1
    };
    u128::from(m).checked_mul(factor).ok_or_else(overflow)
}
