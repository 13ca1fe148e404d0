//! Germ-level tests: recognising monomial singularities from their tangent
//! data, and invariants of types.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::families::{extremality, load_signature, LevelCheck, LinearFamily, DEFAULT_PERMUTATION_BUDGET};
use crate::monomideal::TypeLambda;
use crate::subset::Subset;

/// The arithmetic shadow of a germ `X = X_1 ∪ ⋯ ∪ X_s` at a point: the
/// tangent spaces `T_i` of its components and the dimensions of the germ
/// intersections `X_I`.
///
/// Components are assumed nonsingular; nothing here can check that.
/// Index sets without an explicit entry take the dimension of the tangent
/// intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermDescriptor {
    tangents: LinearFamily,
    germ_dims: BTreeMap<Subset, usize>,
}

impl GermDescriptor {
    /// Requires `germ_dims({i}) = dim T_i` and `germ_dims` nonincreasing as
    /// `I` grows.
    pub fn new(tangents: LinearFamily, germ_dims: impl IntoIterator<Item = (Subset, usize)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (i, d) in germ_dims {
            tangents.check_index_set(i)?;
            if table.insert(i, d).is_some() {
                return Err(Error::input(format!("index set {i} listed twice")));
            }
        }
        let out = GermDescriptor { tangents, germ_dims: table };
        for (&i, &d) in &out.germ_dims {
            if i.len() == 1 {
                let t = out.tangents.members()[i.min().expect("singleton")].dim();
                if d != t {
                    return Err(Error::input(format!("component {i} has dimension {d} but its tangent space {t}")));
                }
            }
            let s = out.tangents.len();
            for j in 0..s {
                let (small, big) = if i.contains(j) { (i.without(j), i) } else { (i, i.with(j)) };
                if !small.is_empty() && out.germ_dim(big) > out.germ_dim(small) {
                    return Err(Error::input(format!(
                        "intersection dimension grows from {small} ({}) to {big} ({})",
                        out.germ_dim(small),
                        out.germ_dim(big)
                    )));
                }
            }
        }
        Ok(out)
    }

    pub fn ambient(&self) -> usize {
        self.tangents.ambient()
    }

    pub fn tangents(&self) -> &LinearFamily {
        &self.tangents
    }

    /// Explicit entries only.
    pub fn listed(&self) -> &BTreeMap<Subset, usize> {
        &self.germ_dims
    }

    pub fn germ_dim(&self, i: Subset) -> usize {
        self.germ_dims
            .get(&i)
            .copied()
            .unwrap_or_else(|| self.tangents.levels().meet_dim(i))
    }

    /// The coordinate model of a type, whose germ intersections are its
    /// tangent intersections.
    pub fn of_type(lambda: &TypeLambda) -> Self {
        GermDescriptor { tangents: LinearFamily::from_type(lambda), germ_dims: BTreeMap::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularityWitness {
    /// The tangent cone is not extremal.
    NonExtremal(LevelCheck),
    /// `dim X_I ≠ dim T_I`.
    Mismatch { set: Subset, germ: usize, tangent: usize },
}

/// A germ with nonsingular components is a monomial singularity iff its
/// tangent cone is extremal and every intersection `X_I` has the dimension
/// of `T_I`. On failure the first violated condition is returned,
/// extremality first and then index sets by size and lexicographically.
pub fn is_monomial_singularity(descriptor: &GermDescriptor) -> (bool, Option<SingularityWitness>) {
    if let Some(c) = extremality(&descriptor.tangents).first_failure() {
        return (false, Some(SingularityWitness::NonExtremal(c)));
    }
    let mut listed: Vec<(Subset, usize)> = descriptor.germ_dims.iter().map(|(&i, &d)| (i, d)).collect();
    listed.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(&b.0)));
    let data = descriptor.tangents.levels();
    for (set, germ) in listed {
        let tangent = data.meet_dim(set);
        if germ != tangent {
            return (false, Some(SingularityWitness::Mismatch { set, germ, tangent }));
        }
    }
    (true, None)
}

/// Number of components of a pure-dimensional type.
pub fn multiplicity(lambda: &TypeLambda) -> Result<usize> {
    let r = lambda.components()[0].len();
    if lambda.components().iter().any(|l| l.len() != r) {
        return Err(Error::precondition("multiplicity needs components of equal dimension"));
    }
    Ok(lambda.len())
}

/// Canonical form of a type's load signature: the lexicographically least
/// signature entry list over all renamings of the components compatible
/// with a sort by per-component invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeInvariant {
    pub ambient: usize,
    pub members: usize,
    pub entries: Vec<(Subset, usize)>,
}

pub fn type_invariant(lambda: &TypeLambda) -> Result<TypeInvariant> {
    type_invariant_with_budget(lambda, DEFAULT_PERMUTATION_BUDGET)
}

pub fn type_invariant_with_budget(lambda: &TypeLambda, budget: u64) -> Result<TypeInvariant> {
    let family = LinearFamily::from_type(lambda);
    let sig = load_signature(&family)?;
    let s = lambda.len();
    // Component i: its dimension, then the sorted (#I, w(I)) over I ∋ i.
    let profile = |i: usize| {
        let mut col: Vec<(usize, usize)> = sig.entries().filter(|(k, _)| k.contains(i)).map(|(k, d)| (k.len(), d)).collect();
        col.sort_unstable();
        (lambda.component_dim(i), col)
    };
    let mut order: Vec<usize> = (0..s).collect();
    let profiles: Vec<_> = (0..s).map(profile).collect();
    order.sort_by(|&a, &b| profiles[a].cmp(&profiles[b]));
    // Groups of equal profile occupy consecutive new labels.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if profiles[g[0]] == profiles[i] => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let mut perm = vec![0usize; s];
    let mut best: Option<Vec<(Subset, usize)>> = None;
    let mut visited = 0u64;
    let mut arrangement: Vec<Vec<usize>> = groups.clone();
    loop {
        visited += 1;
        if visited > budget {
            return Err(Error::resource(format!("canonical form search exceeded budget of {budget}")));
        }
        let mut label = 0;
        for g in &arrangement {
            for &i in g {
                perm[i] = label;
                label += 1;
            }
        }
        let entries: Vec<(Subset, usize)> = sig.permuted(&perm).entries().collect();
        if best.as_ref().map_or(true, |b| entries < *b) {
            best = Some(entries);
        }
        if !advance(&mut arrangement) {
            break;
        }
    }
    Ok(TypeInvariant { ambient: lambda.ambient(), members: s, entries: best.expect("at least one arrangement") })
}

/// Step the rightmost group that has a next permutation, resetting the
/// groups after it. `false` once every combination has been produced.
fn advance(groups: &mut [Vec<usize>]) -> bool {
    for g in groups.iter_mut().rev() {
        if next_permutation(g) {
            return true;
        }
        g.sort_unstable();
    }
    false
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Same ambient dimension and equal invariants.
pub fn types_equivalent(a: &TypeLambda, b: &TypeLambda) -> Result<bool> {
    if a.ambient() != b.ambient() || a.len() != b.len() {
        return Ok(false);
    }
    Ok(type_invariant(a)? == type_invariant(b)?)
}
