//! Finite families of linear subspaces of `Q^m`.
//!
//! For a family `L_1, …, L_s` and a nonempty index set `I` write `L_I` for
//! the intersection of the members in `I`, and `L^(p)` for the sum of all
//! `L_I` with `#I = p` (with `L^(s+1) = 0`). Inside each `L_I` with `#I = p`
//! sit `V_I = L^(p+1) ∩ L_I` and a supplement `W_I` of it. These spaces
//! decide whether the family is linearly a family of coordinate varieties
//! (it is *extremal*), and their dimensions classify extremal families up to
//! linear isomorphism.
//!
//! Only the index sets with `L_I ≠ 0` are ever materialised: they form a
//! down-closed collection found by depth-first search, and every other
//! `L_I`, `V_I`, `W_I` is zero.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactla::{extend_to_basis, sum_all, Matrix, Subspace, Vector};
use crate::monomideal::TypeLambda;
use crate::subset::{binomial, Subset, MAX_ELEMENTS};

/// Default budget for permutation searches.
pub const DEFAULT_PERMUTATION_BUDGET: u64 = 1_000_000;

/// An ordered family `L_1, …, L_s` of subspaces of `Q^m`, no member
/// containing another.
#[derive(Clone)]
pub struct LinearFamily {
    ambient: usize,
    members: Vec<Subspace>,
    levels: OnceLock<LevelData>,
}

impl PartialEq for LinearFamily {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.members == other.members
    }
}

impl Eq for LinearFamily {}

impl std::fmt::Debug for LinearFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearFamily")
            .field("ambient", &self.ambient)
            .field("members", &self.members)
            .finish()
    }
}

impl LinearFamily {
    /// Validate and build a family. Members must share the ambient space and
    /// form an antichain under inclusion.
    pub fn new(ambient: usize, members: Vec<Subspace>) -> Result<Self> {
        Self::check_shape(ambient, &members)?;
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate() {
                if i != j && b.contains(a) {
                    return Err(Error::input(format!(
                        "member {} is contained in member {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self::unchecked(ambient, members))
    }

    /// Like [`LinearFamily::new`], but members contained in another are
    /// dropped (the first of several equal members is kept).
    pub fn minimalized(ambient: usize, members: Vec<Subspace>) -> Result<Self> {
        Self::check_shape(ambient, &members)?;
        let keep: Vec<Subspace> = members
            .iter()
            .enumerate()
            .filter(|&(i, a)| {
                !members.iter().enumerate().any(|(j, b)| {
                    j != i && b.contains(a) && (a != b || j < i)
                })
            })
            .map(|(_, a)| a.clone())
            .collect();
        Ok(Self::unchecked(ambient, keep))
    }

    fn check_shape(ambient: usize, members: &[Subspace]) -> Result<()> {
        if members.is_empty() {
            return Err(Error::input("a family needs at least one member"));
        }
        if members.len() >= MAX_ELEMENTS {
            return Err(Error::resource(format!("at most {} members", MAX_ELEMENTS - 1)));
        }
        if let Some(s) = members.iter().find(|s| s.ambient() != ambient) {
            return Err(Error::input(format!(
                "member of Q^{} in a family of Q^{ambient}",
                s.ambient()
            )));
        }
        Ok(())
    }

    fn unchecked(ambient: usize, members: Vec<Subspace>) -> Self {
        LinearFamily { ambient, members, levels: OnceLock::new() }
    }

    /// The coordinate varieties `{x_j = 0 : j ∈ λ_i}` of a type.
    pub fn from_type(lambda: &TypeLambda) -> Self {
        let m = lambda.ambient();
        Self::unchecked(
            m,
            lambda.components().iter().map(|&l| Subspace::coordinate(m, l)).collect(),
        )
    }

    /// Image `f(L_1), …, f(L_s)` under an invertible `m × m` matrix.
    pub fn image(&self, f: &Matrix) -> Result<Self> {
        if f.nrows() != self.ambient || f.ncols() != self.ambient || !f.is_invertible() {
            return Err(Error::input("image requires an invertible matrix of the ambient size"));
        }
        let members = self.members.iter().map(|l| l.image(f)).collect::<Result<_>>()?;
        Ok(Self::unchecked(self.ambient, members))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    /// Reordered family whose `k`-th member is `self.members[order[k]]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len() || order.iter().any(|&i| i >= self.len() || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::input("not a permutation of the members"));
        }
        Ok(Self::unchecked(self.ambient, order.iter().map(|&i| self.members[i].clone()).collect()))
    }

    fn all_indices(&self) -> Subset {
        Subset::full(self.len())
    }

    pub(crate) fn check_index_set(&self, i: Subset) -> Result<()> {
        if i.is_empty() {
            return Err(Error::input("index set must be nonempty"));
        }
        if !i.is_subset(self.all_indices()) {
            return Err(Error::input(format!("index set {i} outside 1..={}", self.len())));
        }
        Ok(())
    }

    pub fn levels(&self) -> &LevelData {
        self.levels.get_or_init(|| LevelData::compute(self))
    }
}

/// Cached `L_I`, `L^(p)`, `V_I` and `W_I` of a family.
#[derive(Clone, Debug)]
pub struct LevelData {
    ambient: usize,
    s: usize,
    /// `L_I` for every `I` with `L_I ≠ 0`.
    meets: HashMap<u64, Subspace>,
    /// `level[p - 1] = L^(p)` for `p = 1..=s+1`.
    level: Vec<Subspace>,
    /// Basis of `W_I` (rows of `L_I`'s canonical basis) for every `I` with
    /// `L_I ≠ 0`.
    supplements: BTreeMap<Subset, Vec<Vector>>,
}

impl LevelData {
    fn compute(family: &LinearFamily) -> Self {
        let m = family.ambient;
        let s = family.len();
        let mut meets: HashMap<u64, Subspace> = HashMap::new();
        let mut stack: Vec<Subset> = Vec::new();
        for (i, l) in family.members.iter().enumerate() {
            if !l.is_zero() {
                meets.insert(Subset::singleton(i).bits(), l.clone());
                stack.push(Subset::singleton(i));
            }
        }
        while let Some(idx) = stack.pop() {
            let here = meets[&idx.bits()].clone();
            let top = idx.max().expect("nonempty index set");
            for j in top + 1..s {
                let next = here.intersect(&family.members[j]).expect("shared ambient");
                if !next.is_zero() {
                    let key = idx.with(j);
                    meets.insert(key.bits(), next);
                    stack.push(key);
                }
            }
        }

        let mut by_size: Vec<Vec<Subset>> = vec![Vec::new(); s + 2];
        for &bits in meets.keys() {
            let i = Subset::from_bits(bits);
            by_size[i.len()].push(i);
        }
        for v in &mut by_size {
            v.sort();
        }
        let level: Vec<Subspace> = (1..=s + 1)
            .map(|p| sum_all(m, by_size[p].iter().map(|i| &meets[&i.bits()])).expect("shared ambient"))
            .collect();

        let mut supplements = BTreeMap::new();
        for p in 1..=s {
            for &i in &by_size[p] {
                let li = &meets[&i.bits()];
                let mut held = level[p].intersect(li).expect("shared ambient");
                let mut chosen = Vec::new();
                for row in li.basis() {
                    if !held.contains_vector(row) {
                        held = held
                            .sum(&Subspace::canonicalize(std::slice::from_ref(row), m).expect("row length"))
                            .expect("shared ambient");
                        chosen.push(row.clone());
                    }
                }
                supplements.insert(i, chosen);
            }
        }
        LevelData { ambient: m, s, meets, level, supplements }
    }

    /// `L_I`; zero when the intersection is trivial.
    pub fn meet(&self, i: Subset) -> Subspace {
        self.meets.get(&i.bits()).cloned().unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    pub fn meet_dim(&self, i: Subset) -> usize {
        self.meets.get(&i.bits()).map_or(0, Subspace::dim)
    }

    /// `L^(p)` for `1 ≤ p ≤ s + 1`.
    pub fn level(&self, p: usize) -> &Subspace {
        &self.level[p - 1]
    }

    /// Index sets with `L_I ≠ 0`, sorted.
    pub fn nonzero_meets(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.meets.keys().map(|&b| Subset::from_bits(b)).collect();
        v.sort();
        v
    }

    /// `Σ_{#J = #I, J ≠ I} L_J ∩ L_I`.
    ///
    /// Each `L_J ∩ L_I = L_{I ∪ J}` lies in some `L_{I ∪ {j}}` with `j ∉ I`,
    /// and each of those occurs for a suitable `J` when `#I < s`, so the sum
    /// reduces to `Σ_{j ∉ I} L_{I ∪ {j}}`.
    pub fn overlap_sum(&self, i: Subset) -> Subspace {
        let parts: Vec<&Subspace> = (0..self.s)
            .filter(|&j| !i.contains(j))
            .filter_map(|j| self.meets.get(&i.with(j).bits()))
            .collect();
        sum_all(self.ambient, parts).expect("shared ambient")
    }

    /// `V_I = L^(p+1) ∩ L_I`.
    pub fn v_space(&self, i: Subset) -> Subspace {
        match self.meets.get(&i.bits()) {
            Some(li) => self.level(i.len() + 1).intersect(li).expect("shared ambient"),
            None => Subspace::zero(self.ambient),
        }
    }

    /// Basis of the chosen supplement `W_I` of `V_I` in `L_I`.
    pub fn supplement_basis(&self, i: Subset) -> &[Vector] {
        self.supplements.get(&i).map_or(&[], Vec::as_slice)
    }
}

pub fn component_intersection(family: &LinearFamily, i: Subset) -> Result<Subspace> {
    family.check_index_set(i)?;
    Ok(family.levels().meet(i))
}

/// `L^(p) = Σ_{#I = p} L_I`, with `L^(s+1) = 0`.
pub fn level_space(family: &LinearFamily, p: usize) -> Result<Subspace> {
    if p == 0 || p > family.len() + 1 {
        return Err(Error::input(format!("level {p} outside 1..={}", family.len() + 1)));
    }
    Ok(family.levels().level(p).clone())
}

/// Both sides of the dimension inequality at one level `p`:
/// `lhs = dim L^(p)` and
/// `rhs = dim L^(p+1) + Σ_{#I=p} (dim L_I − dim Σ_{#J=p, J≠I} L_J ∩ L_I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelCheck {
    pub level: usize,
    pub lhs: usize,
    pub rhs: usize,
}

impl LevelCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Per-level certificate of the extremality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremality {
    pub levels: Vec<LevelCheck>,
}

impl Extremality {
    pub fn is_extremal(&self) -> bool {
        self.levels.iter().all(LevelCheck::holds)
    }

    pub fn first_failure(&self) -> Option<LevelCheck> {
        self.levels.iter().copied().find(|c| !c.holds())
    }
}

pub fn extremality(family: &LinearFamily) -> Extremality {
    let data = family.levels();
    let s = family.len();
    let mut per_level = vec![0usize; s + 1];
    for i in data.nonzero_meets() {
        per_level[i.len()] += data.meet_dim(i) - data.overlap_sum(i).dim();
    }
    let levels = (1..=s)
        .map(|p| LevelCheck {
            level: p,
            lhs: data.level(p).dim(),
            rhs: data.level(p + 1).dim() + per_level[p],
        })
        .collect();
    Extremality { levels }
}

pub fn is_extremal(family: &LinearFamily) -> bool {
    extremality(family).is_extremal()
}

/// The deterministic supplement `W_I`: rows of `L_I`'s canonical basis are
/// added greedily to a basis of `V_I`.
pub fn supplement_w(family: &LinearFamily, i: Subset) -> Result<Subspace> {
    family.check_index_set(i)?;
    Subspace::canonicalize(family.levels().supplement_basis(i), family.ambient)
}

/// A basis of `Q^m` together with the blocks spanning each nonzero `W_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub vectors: Vec<Vector>,
    /// `(I, range)`: `vectors[range]` is the chosen basis of `W_I`. The
    /// vectors after the last block complete the basis of `Q^m`.
    pub blocks: Vec<(Subset, Range<usize>)>,
}

impl AdaptedBasis {
    pub fn block(&self, i: Subset) -> &[Vector] {
        self.blocks
            .iter()
            .find(|(k, _)| *k == i)
            .map_or(&[], |(_, r)| &self.vectors[r.clone()])
    }
}

/// `B` is a basis of `Q^m` and, for each member, the elements of `B` lying
/// in it span it.
pub fn verify_adapted(family: &LinearFamily, basis: &[Vector]) -> bool {
    let m = family.ambient;
    if basis.len() != m || basis.iter().any(|v| v.len() != m) {
        return false;
    }
    if Subspace::canonicalize(basis, m).map(|s| s.dim()) != Ok(m) {
        return false;
    }
    family
        .members
        .iter()
        .all(|l| basis.iter().filter(|b| l.contains_vector(b)).count() == l.dim())
}

/// Order in which `W` blocks are laid out: larger index sets first.
fn block_order(a: &Subset, b: &Subset) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

/// Concatenate the `W_I` bases (larger `I` first), complete to a basis of
/// `Q^m`, and check the result. `None` when the construction fails, which
/// happens exactly when the family is not extremal.
pub fn adapted_basis(family: &LinearFamily) -> Option<AdaptedBasis> {
    let data = family.levels();
    let mut keys: Vec<Subset> = data.supplements.keys().copied().collect();
    keys.sort_by(block_order);
    let mut vectors = Vec::new();
    let mut blocks = Vec::new();
    for i in keys {
        let w = data.supplement_basis(i);
        if w.is_empty() {
            continue;
        }
        let start = vectors.len();
        vectors.extend(w.iter().cloned());
        blocks.push((i, start..vectors.len()));
    }
    let vectors = extend_to_basis(&vectors, family.ambient).ok()?;
    verify_adapted(family, &vectors).then_some(AdaptedBasis { vectors, blocks })
}

/// One entry of the load: `dim(L_{I_1} + ⋯ + L_{I_r})`.
pub fn load_of_collection(family: &LinearFamily, collection: &[Subset]) -> Result<usize> {
    if collection.is_empty() {
        return Err(Error::input("a load entry needs at least one index set"));
    }
    for (k, &i) in collection.iter().enumerate() {
        family.check_index_set(i)?;
        if collection[..k].contains(&i) {
            return Err(Error::input(format!("index set {i} repeated in collection")));
        }
    }
    let data = family.levels();
    let parts: Vec<Subspace> = collection.iter().map(|&i| data.meet(i)).collect();
    Ok(sum_all(family.ambient, &parts)?.dim())
}

/// The map `I ↦ dim W_I` of an extremal family. Entries with `dim W_I = 0`
/// are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoadSignature {
    s: usize,
    w: BTreeMap<Subset, usize>,
}

impl LoadSignature {
    pub fn new(s: usize, entries: impl IntoIterator<Item = (Subset, usize)>) -> Result<Self> {
        let mut w = BTreeMap::new();
        for (i, d) in entries {
            if i.is_empty() || !i.is_subset(Subset::full(s)) {
                return Err(Error::input(format!("index set {i} outside 1..={s}")));
            }
            if d > 0 && w.insert(i, d).is_some() {
                return Err(Error::input(format!("index set {i} repeated")));
            }
        }
        Ok(LoadSignature { s, w })
    }

    pub fn members(&self) -> usize {
        self.s
    }

    pub fn get(&self, i: Subset) -> usize {
        self.w.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero entries in canonical subset order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.w.iter().map(|(&i, &d)| (i, d))
    }

    pub fn total(&self) -> usize {
        self.w.values().sum()
    }

    /// Signature after renaming member `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> LoadSignature {
        LoadSignature { s: self.s, w: self.w.iter().map(|(i, &d)| (i.map(perm), d)).collect() }
    }

    /// `Σ_{J ⊇ I_k for some k} w(J)`: the load entry this signature predicts
    /// for a collection.
    pub fn upset_sum(&self, collection: &[Subset]) -> usize {
        self.w
            .iter()
            .filter(|(j, _)| collection.iter().any(|i| i.is_subset(**j)))
            .map(|(_, &d)| d)
            .sum()
    }
}

fn signature_unchecked(family: &LinearFamily) -> LoadSignature {
    let data = family.levels();
    LoadSignature {
        s: family.len(),
        w: data
            .supplements
            .iter()
            .filter(|(_, b)| !b.is_empty())
            .map(|(&i, b)| (i, b.len()))
            .collect(),
    }
}

fn require_extremal(family: &LinearFamily, what: &str) -> Result<()> {
    match extremality(family).first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::precondition(format!(
            "{what} requires an extremal family (level {}: {} vs {})",
            c.level, c.lhs, c.rhs
        ))),
    }
}

pub fn load_signature(family: &LinearFamily) -> Result<LoadSignature> {
    require_extremal(family, "load signature")?;
    Ok(signature_unchecked(family))
}

/// Invariant of member `i` unchanged by reordering: its dimension, the
/// sorted dimensions of its pairwise intersections, and the sorted
/// `(#I, w(I))` over signature entries containing it.
fn member_profile(family: &LinearFamily, sig: &LoadSignature, i: usize) -> (usize, Vec<usize>, Vec<(usize, usize)>) {
    let data = family.levels();
    let mut pairs: Vec<usize> = (0..family.len())
        .filter(|&j| j != i)
        .map(|j| data.meet_dim(Subset::singleton(i).with(j)))
        .collect();
    pairs.sort_unstable();
    let mut column: Vec<(usize, usize)> =
        sig.entries().filter(|(k, _)| k.contains(i)).map(|(k, d)| (k.len(), d)).collect();
    column.sort_unstable();
    (family.members[i].dim(), pairs, column)
}

/// Search for a renaming `π` of members with `w_F(I) = w_G(π(I))` for all
/// `I`. Candidates for `π(i)` are restricted to members of `G` with the same
/// profile. Returns the first match in lexicographic order.
fn match_signatures(
    left: &LoadSignature,
    right: &LoadSignature,
    candidates: &[Vec<usize>],
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    let s = left.members();
    if left.w.len() != right.w.len() || left.total() != right.total() {
        return Ok(None);
    }
    // Entries of `left` checked once their largest member is placed.
    let mut by_top: Vec<Vec<(Subset, usize)>> = vec![Vec::new(); s];
    for (i, d) in left.entries() {
        by_top[i.max().expect("nonempty")].push((i, d));
    }
    let mut perm = vec![usize::MAX; s];
    let mut used = vec![false; s];
    let mut visited = 0u64;

    fn go(
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visited: &mut u64,
        budget: u64,
        candidates: &[Vec<usize>],
        by_top: &[Vec<(Subset, usize)>],
        right: &LoadSignature,
    ) -> Result<bool> {
        if k == perm.len() {
            return Ok(true);
        }
        for &j in &candidates[k] {
            if used[j] {
                continue;
            }
            *visited += 1;
            if *visited > budget {
                return Err(Error::resource(format!("permutation search exceeded budget of {budget}")));
            }
            perm[k] = j;
            if by_top[k].iter().all(|&(i, d)| right.get(i.map(perm)) == d) {
                used[j] = true;
                if go(k + 1, perm, used, visited, budget, candidates, by_top, right)? {
                    return Ok(true);
                }
                used[j] = false;
            }
        }
        perm[k] = usize::MAX;
        Ok(false)
    }

    let found = go(0, &mut perm, &mut used, &mut visited, budget, candidates, &by_top, right)?;
    Ok(found.then_some(perm))
}

/// Decide whether two extremal families are linearly isomorphic.
///
/// With `reorder = false` the member order is fixed and the answer is the
/// identity permutation or `None`. With `reorder = true`, `Some(π)` means
/// `G`'s member `π(i)` corresponds to `F`'s member `i`. Families of
/// different ambient dimension or length are never equivalent.
pub fn families_equivalent(
    f: &LinearFamily,
    g: &LinearFamily,
    reorder: bool,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if f.ambient != g.ambient || f.len() != g.len() {
        return Ok(None);
    }
    let sf = load_signature(f)?;
    let sg = load_signature(g)?;
    let s = f.len();
    if sf == sg {
        return Ok(Some((0..s).collect()));
    }
    if !reorder {
        return Ok(None);
    }
    let pf: Vec<_> = (0..s).map(|i| member_profile(f, &sf, i)).collect();
    let pg: Vec<_> = (0..s).map(|i| member_profile(g, &sg, i)).collect();
    let candidates: Vec<Vec<usize>> =
        pf.iter().map(|p| (0..s).filter(|&j| pg[j] == *p).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    match_signatures(&sf, &sg, &candidates, budget)
}

/// A linear isomorphism `f` of `Q^m` with `f(F.L_i) = G.L_i` for every
/// `i`, sending matching blocks of the two adapted bases onto each other.
pub fn build_isomorphism(f: &LinearFamily, g: &LinearFamily) -> Result<Matrix> {
    if f.ambient != g.ambient || f.len() != g.len() {
        return Err(Error::precondition(format!(
            "families of {} subspaces of Q^{} and {} subspaces of Q^{}",
            f.len(),
            f.ambient,
            g.len(),
            g.ambient
        )));
    }
    if load_signature(f)? != load_signature(g)? {
        return Err(Error::precondition("loads differ"));
    }
    let bf = adapted_basis(f).ok_or_else(|| Error::precondition("no adapted basis for the source"))?;
    let bg = adapted_basis(g).ok_or_else(|| Error::precondition("no adapted basis for the target"))?;
    debug_assert_eq!(bf.blocks, bg.blocks);
    let source = Matrix::from_columns(&bf.vectors)?;
    let target = Matrix::from_columns(&bg.vectors)?;
    let inv = source.inverse().expect("adapted basis is a basis");
    let iso = target.mul(&inv)?;
    for (a, b) in f.members.iter().zip(&g.members) {
        if a.image(&iso)? != *b {
            return Err(Error::precondition("constructed map does not match the families"));
        }
    }
    Ok(iso)
}

/// Coordinates given by the adapted basis turn each member into a
/// coordinate variety: `λ_i` lists the basis vectors outside `L_i`.
pub fn coordinate_model(family: &LinearFamily) -> Result<TypeLambda> {
    require_extremal(family, "coordinate model")?;
    let basis = adapted_basis(family)
        .ok_or_else(|| Error::precondition("extremal family without adapted basis"))?;
    let components = family
        .members
        .iter()
        .map(|l| {
            basis
                .vectors
                .iter()
                .enumerate()
                .filter(|(_, b)| !l.contains_vector(b))
                .map(|(k, _)| k)
                .collect::<Subset>()
        })
        .collect();
    TypeLambda::new(family.ambient, components)
}

/// `C(m, ⌊m/2⌋)`: the largest possible number of members of an extremal
/// family in `Q^m`.
pub fn sperner_bound(m: usize) -> Result<u128> {
    if m < 1 {
        return Err(Error::input("ambient dimension must be at least 1"));
    }
    binomial(m as u64, (m / 2) as u64).ok_or_else(|| Error::resource("binomial overflow"))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactla::integer;

    pub(crate) fn span(m: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::canonicalize(
            &rows.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect::<Vec<_>>(),
            m,
        )
        .unwrap()
    }

    fn fam(m: usize, members: &[&[&[i64]]]) -> LinearFamily {
        LinearFamily::new(m, members.iter().map(|r| span(m, r)).collect()).unwrap()
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_one_based(v, 64).unwrap()
    }

    fn axes2() -> LinearFamily {
        fam(2, &[&[&[1, 0]], &[&[0, 1]]])
    }

    pub(crate) fn f3gen() -> LinearFamily {
        fam(3, &[&[&[1, 0, 0]], &[&[0, 1, 0]], &[&[1, 1, 1]]])
    }

    pub(crate) fn f3cop() -> LinearFamily {
        fam(3, &[&[&[1, 0, 0]], &[&[0, 1, 0]], &[&[1, 1, 0]]])
    }

    fn line_plane() -> LinearFamily {
        fam(3, &[&[&[1, 0, 0]], &[&[0, 1, 0], &[0, 0, 1]]])
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| integer(x)).collect()
    }

    #[test]
    fn validation() {
        assert!(LinearFamily::new(2, vec![]).is_err());
        let e1 = span(2, &[&[1, 0]]);
        assert!(LinearFamily::new(2, vec![e1.clone(), Subspace::full(2)]).is_err());
        assert!(LinearFamily::new(2, vec![e1.clone(), e1.clone()]).is_err());
        assert!(LinearFamily::new(2, vec![span(3, &[&[1, 0, 0]])]).is_err());
        let m = LinearFamily::minimalized(2, vec![e1.clone(), Subspace::full(2), e1.clone()]).unwrap();
        assert_eq!(m.members(), &[Subspace::full(2)]);
        let m = LinearFamily::minimalized(2, vec![e1.clone(), e1.clone()]).unwrap();
        assert_eq!(m.members(), &[e1]);
    }

    #[test]
    fn component_intersection_examples() {
        assert!(component_intersection(&axes2(), s(&[1, 2])).unwrap().is_zero());
        let f = f3gen();
        assert_eq!(component_intersection(&f, s(&[2])).unwrap(), f.members()[1]);
        assert!(component_intersection(&f, s(&[1, 3])).unwrap().is_zero());
        assert!(component_intersection(&f, Subset::EMPTY).is_err());
        assert!(component_intersection(&f, s(&[4])).is_err());
    }

    #[test]
    fn level_space_examples() {
        assert_eq!(level_space(&f3gen(), 1).unwrap(), Subspace::full(3));
        assert!(level_space(&f3gen(), 4).unwrap().is_zero());
        assert_eq!(level_space(&f3cop(), 1).unwrap(), span(3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert!(level_space(&f3gen(), 0).is_err());
        assert!(level_space(&f3gen(), 5).is_err());
    }

    #[test]
    fn extremality_examples() {
        assert!(is_extremal(&f3gen()));
        let cert = extremality(&f3cop());
        assert_eq!(cert.first_failure(), Some(LevelCheck { level: 1, lhs: 2, rhs: 3 }));
        assert!(is_extremal(&axes2()));
        let single = fam(3, &[&[&[1, 2, 3]]]);
        assert!(is_extremal(&single));
    }

    #[test]
    fn supplement_examples() {
        assert_eq!(supplement_w(&axes2(), s(&[1])).unwrap(), axes2().members()[0]);
        assert!(supplement_w(&axes2(), s(&[1, 2])).unwrap().is_zero());
        assert_eq!(supplement_w(&f3gen(), s(&[3])).unwrap(), span(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn adapted_basis_examples() {
        assert_eq!(adapted_basis(&axes2()).unwrap().vectors, vec![v(&[1, 0]), v(&[0, 1])]);
        let b = adapted_basis(&f3gen()).unwrap();
        assert_eq!(b.vectors, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 1])]);
        assert!(verify_adapted(&f3gen(), &b.vectors));
        assert!(adapted_basis(&f3cop()).is_none());
        assert!(!verify_adapted(&f3cop(), &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]));
    }

    #[test]
    fn load_examples() {
        assert_eq!(load_of_collection(&axes2(), &[s(&[1]), s(&[2])]).unwrap(), 2);
        let f = line_plane();
        assert_eq!(load_of_collection(&f, &[s(&[1, 2])]).unwrap(), 0);
        assert_eq!(load_of_collection(&f3cop(), &[s(&[1]), s(&[2]), s(&[3])]).unwrap(), 2);
        assert!(load_of_collection(&f3cop(), &[]).is_err());
        assert!(load_of_collection(&f3cop(), &[s(&[1]), s(&[1])]).is_err());
    }

    #[test]
    fn signature_examples() {
        let w = load_signature(&axes2()).unwrap();
        assert_eq!((w.get(s(&[1])), w.get(s(&[2])), w.get(s(&[1, 2]))), (1, 1, 0));
        let w = load_signature(&f3gen()).unwrap();
        for i in Subset::nonempty_subsets(3) {
            assert_eq!(w.get(i), usize::from(i.len() == 1));
        }
        let w = load_signature(&line_plane()).unwrap();
        assert_eq!((w.get(s(&[1])), w.get(s(&[2])), w.get(s(&[1, 2]))), (1, 2, 0));
        assert!(matches!(load_signature(&f3cop()), Err(Error::Precondition(_))));
    }

    #[test]
    fn equivalence_examples() {
        let f = line_plane();
        let g = fam(3, &[&[&[0, 1, 0], &[0, 0, 1]], &[&[1, 0, 0]]]);
        let budget = DEFAULT_PERMUTATION_BUDGET;
        assert_eq!(families_equivalent(&f, &g, false, budget).unwrap(), None);
        assert_eq!(families_equivalent(&f, &g, true, budget).unwrap(), Some(vec![1, 0]));
        assert_eq!(families_equivalent(&f, &f, false, budget).unwrap(), Some(vec![0, 1]));
        let axes3 = fam(3, &[&[&[1, 0, 0]], &[&[0, 1, 0]], &[&[0, 0, 1]]]);
        assert_eq!(families_equivalent(&f3gen(), &axes3, false, budget).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(families_equivalent(&f, &axes3, true, budget).unwrap(), None);
        assert!(families_equivalent(&f3cop(), &axes3, false, budget).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        assert_eq!(build_isomorphism(&axes2(), &axes2()).unwrap(), Matrix::identity(2));
        let f = fam(2, &[&[&[1, 0]], &[&[1, 1]]]);
        let iso = build_isomorphism(&f, &axes2()).unwrap();
        assert_eq!(iso.apply(&v(&[1, 0])).unwrap(), v(&[1, 0]));
        assert_eq!(iso.apply(&v(&[1, 1])).unwrap(), v(&[0, 1]));
        let axes3 = fam(3, &[&[&[1, 0, 0]], &[&[0, 1, 0]], &[&[0, 0, 1]]]);
        assert!(matches!(build_isomorphism(&line_plane(), &axes3), Err(Error::Precondition(_))));
    }

    #[test]
    fn coordinate_model_examples() {
        let t = coordinate_model(&axes2()).unwrap();
        assert_eq!(t.components(), &[s(&[2]), s(&[1])]);
        let t = coordinate_model(&f3gen()).unwrap();
        assert_eq!(t.components(), &[s(&[2, 3]), s(&[1, 3]), s(&[1, 2])]);
        let t = coordinate_model(&line_plane()).unwrap();
        assert_eq!(t.components(), &[s(&[2, 3]), s(&[1])]);
        assert!(coordinate_model(&f3cop()).is_err());
    }

    #[test]
    fn sperner_bound_examples() {
        assert_eq!(sperner_bound(4).unwrap(), 6);
        assert_eq!(sperner_bound(1).unwrap(), 1);
        assert_eq!(sperner_bound(5).unwrap(), 10);
        assert!(sperner_bound(0).is_err());
    }
}
