//! Square-free monomial ideals and unions of coordinate varieties.
//!
//! A type `Λ = {λ_1, …, λ_s}` describes the union of the coordinate
//! varieties `{x_j = 0 : j ∈ λ_i}`. Its vanishing ideal is generated by the
//! square-free monomials `x^σ` with `σ` a minimal transversal of `Λ`, and
//! conversely the prime components of a square-free monomial ideal are the
//! minimal transversals of its generators.

use crate::error::{Error, Result};
use crate::poly::{Monomial, SparsePoly};
use crate::subset::{is_antichain, minimal_elements, Subset, MAX_ELEMENTS};

/// Largest ground set [`minimal_transversals`] will enumerate.
pub const TRANSVERSAL_ENUMERATION_LIMIT: usize = 20;

fn check_ambient(ambient: usize) -> Result<()> {
    if ambient == 0 {
        return Err(Error::input("ambient dimension must be at least 1"));
    }
    if ambient > MAX_ELEMENTS {
        return Err(Error::resource(format!("at most {MAX_ELEMENTS} variables are supported")));
    }
    Ok(())
}

fn check_sets(ambient: usize, sets: &[Subset], what: &str) -> Result<()> {
    if sets.is_empty() {
        return Err(Error::input(format!("at least one {what} is required")));
    }
    for &l in sets {
        if l.is_empty() {
            return Err(Error::input(format!("empty {what}")));
        }
        if !l.is_subset(Subset::full(ambient)) {
            return Err(Error::input(format!("{what} {l} uses a variable beyond x{ambient}")));
        }
    }
    if !is_antichain(sets) {
        return Err(Error::input(format!("{what}s must be pairwise incomparable")));
    }
    Ok(())
}

/// The type of a monomial singularity: an antichain of nonempty sets of
/// vanishing variables, kept in the order given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeLambda {
    ambient: usize,
    components: Vec<Subset>,
}

impl TypeLambda {
    pub fn new(ambient: usize, components: Vec<Subset>) -> Result<Self> {
        check_ambient(ambient)?;
        check_sets(ambient, &components, "component")?;
        Ok(TypeLambda { ambient, components })
    }

    /// Build from 1-based variable lists such as `[[1], [2, 3]]`.
    pub fn from_lists(ambient: usize, components: &[Vec<usize>]) -> Result<Self> {
        check_ambient(ambient)?;
        let sets = components
            .iter()
            .map(|c| Subset::from_one_based(c, ambient))
            .collect::<Result<Vec<_>>>()?;
        TypeLambda::new(ambient, sets)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn components(&self) -> &[Subset] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Same components, sorted into canonical order.
    pub fn sorted(&self) -> TypeLambda {
        let mut components = self.components.clone();
        components.sort();
        TypeLambda { ambient: self.ambient, components }
    }

    /// Dimension of component `i`.
    pub fn component_dim(&self, i: usize) -> usize {
        self.ambient - self.components[i].len()
    }
}

/// A square-free monomial ideal, held by its minimal generators in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareFreeIdeal {
    ambient: usize,
    generators: Vec<Subset>,
}

impl SquareFreeIdeal {
    /// Generators must already be minimal (pairwise incomparable).
    pub fn new(ambient: usize, mut generators: Vec<Subset>) -> Result<Self> {
        check_ambient(ambient)?;
        check_sets(ambient, &generators, "generator")?;
        generators.sort();
        Ok(SquareFreeIdeal { ambient, generators })
    }

    /// Generated by the given monomials, redundant ones discarded.
    pub fn generated_by(ambient: usize, monomials: impl IntoIterator<Item = Subset>) -> Result<Self> {
        SquareFreeIdeal::new(ambient, minimal_elements(monomials))
    }

    pub fn from_lists(ambient: usize, generators: &[Vec<usize>]) -> Result<Self> {
        check_ambient(ambient)?;
        let sets = generators
            .iter()
            .map(|c| Subset::from_one_based(c, ambient))
            .collect::<Result<Vec<_>>>()?;
        SquareFreeIdeal::new(ambient, sets)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Subset] {
        &self.generators
    }

    /// A monomial lies in the ideal iff its support contains a generator.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        let support = m.support();
        self.generators.iter().any(|g| g.is_subset(support))
    }
}

/// Number of one-variable-per-component products before duplicates and
/// redundant products are removed (saturating).
pub fn raw_product_count(lambda: &TypeLambda) -> u128 {
    lambda
        .components
        .iter()
        .fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
}

/// Generators of the vanishing ideal of the union of `Λ`'s components.
///
/// Products are built one component at a time and pruned to their minimal
/// elements after every step; a product extending a non-minimal partial
/// product is always absorbed by one extending a minimal one.
pub fn associated_monomials(lambda: &TypeLambda) -> SquareFreeIdeal {
    let mut partial = vec![Subset::EMPTY];
    for &l in &lambda.components {
        let next = partial.iter().flat_map(|&p| l.iter().map(move |v| p.with(v)));
        partial = minimal_elements(next);
    }
    SquareFreeIdeal { ambient: lambda.ambient, generators: partial }
}

/// Primes `(x_j : j ∈ P_k)` whose intersection is the ideal, one `P_k` per
/// entry, incomparable and sorted.
///
/// Recursion on the number of variable occurrences in the generators:
/// * every generator a single variable: the ideal is itself prime;
/// * a variable `x_v` common to all generators `x_v f_k`:
///   `I = (x_v) ∩ (f_1, …, f_p)`;
/// * otherwise, with `x_v` taken from a generator of two or more variables
///   and `I = (x_v f_1, …, x_v f_p, g_1, …, g_q)`:
///   `I = (x_v, g_1, …, g_q) ∩ (f_1, …, f_p, g_1, …, g_q)`.
pub fn prime_decomposition(ideal: &SquareFreeIdeal) -> Vec<Subset> {
    fn go(gens: &[Subset], out: &mut Vec<Subset>) {
        if gens.iter().all(|g| g.len() == 1) {
            out.push(gens.iter().fold(Subset::EMPTY, |a, &g| a.union(g)));
            return;
        }
        let common = gens.iter().fold(gens[0], |a, &g| a.intersection(g));
        if let Some(v) = common.min() {
            out.push(Subset::singleton(v));
            let rest: Vec<Subset> = gens.iter().map(|g| g.without(v)).collect();
            go(&rest, out);
            return;
        }
        let v = gens
            .iter()
            .find(|g| g.len() >= 2)
            .and_then(|g| Subset::min(*g))
            .expect("some generator has two variables");
        let (with_v, without_v): (Vec<Subset>, Vec<Subset>) = gens.iter().partition(|g| g.contains(v));
        let left = minimal_elements(without_v.iter().copied().chain([Subset::singleton(v)]));
        let right = minimal_elements(with_v.iter().map(|g| g.without(v)).chain(without_v.iter().copied()));
        go(&left, out);
        go(&right, out);
    }
    let mut primes = Vec::new();
    go(&ideal.generators, &mut primes);
    minimal_elements(primes)
}

/// All inclusion-minimal subsets of `{0, …, m-1}` meeting every member of
/// `sets`, by exhaustive enumeration.
pub fn minimal_transversals(sets: &[Subset], m: usize) -> Result<Vec<Subset>> {
    if m > TRANSVERSAL_ENUMERATION_LIMIT {
        return Err(Error::resource(format!(
            "transversal enumeration limited to {TRANSVERSAL_ENUMERATION_LIMIT} variables"
        )));
    }
    check_sets(m.max(1), sets, "set")?;
    let hits = |t: Subset| sets.iter().all(|s| s.meets(t));
    let mut out: Vec<Subset> = (0u64..(1u64 << m))
        .map(Subset::from_bits)
        .filter(|&t| hits(t) && t.iter().all(|i| !hits(t.without(i))))
        .collect();
    out.sort();
    Ok(out)
}

/// The union of coordinate varieties cut out by the ideal.
pub fn zero_set(ideal: &SquareFreeIdeal) -> TypeLambda {
    TypeLambda { ambient: ideal.ambient, components: prime_decomposition(ideal) }
}

/// Termwise test: every term's support must contain a generator.
pub fn ideal_membership(f: &SparsePoly, ideal: &SquareFreeIdeal) -> Result<bool> {
    if f.nvars() != ideal.ambient {
        return Err(Error::input(format!(
            "polynomial in {} variables tested against an ideal in {} variables",
            f.nvars(),
            ideal.ambient
        )));
    }
    Ok(f.terms().all(|(m, _)| ideal.contains_monomial(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::integer;
    use crate::families::sperner_bound;

    fn s(v: &[usize]) -> Subset {
        Subset::from_one_based(v, 64).unwrap()
    }

    fn ty(m: usize, comps: &[&[usize]]) -> TypeLambda {
        TypeLambda::from_lists(m, &comps.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn ideal(m: usize, gens: &[&[usize]]) -> SquareFreeIdeal {
        SquareFreeIdeal::from_lists(m, &gens.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn type_validation() {
        assert!(TypeLambda::from_lists(3, &[vec![]]).is_err());
        assert!(TypeLambda::from_lists(3, &[vec![1], vec![1, 2]]).is_err());
        assert!(TypeLambda::from_lists(3, &[vec![4]]).is_err());
        assert!(TypeLambda::from_lists(3, &[]).is_err());
        assert!(TypeLambda::from_lists(0, &[vec![1]]).is_err());
        assert_eq!(ty(3, &[&[1], &[2, 3]]).component_dim(1), 1);
    }

    #[test]
    fn associated_monomial_examples() {
        assert_eq!(associated_monomials(&ty(3, &[&[1], &[2, 3]])).generators(), &[s(&[1, 2]), s(&[1, 3])]);
        assert_eq!(associated_monomials(&ty(1, &[&[1]])).generators(), &[s(&[1])]);
        assert_eq!(associated_monomials(&ty(2, &[&[1], &[2]])).generators(), &[s(&[1, 2])]);
        assert_eq!(raw_product_count(&ty(3, &[&[1], &[2, 3]])), 2);
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(prime_decomposition(&ideal(3, &[&[1, 2], &[1, 3]])), vec![s(&[1]), s(&[2, 3])]);
        assert_eq!(prime_decomposition(&ideal(1, &[&[1]])), vec![s(&[1])]);
        assert_eq!(prime_decomposition(&ideal(2, &[&[1, 2]])), vec![s(&[1]), s(&[2])]);
        // Third case of the recursion: no common variable.
        assert_eq!(
            prime_decomposition(&ideal(4, &[&[1, 2], &[3, 4]])),
            vec![s(&[1, 3]), s(&[1, 4]), s(&[2, 3]), s(&[2, 4])]
        );
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(minimal_transversals(&[s(&[1, 2]), s(&[1, 3])], 3).unwrap(), vec![s(&[1]), s(&[2, 3])]);
        assert_eq!(minimal_transversals(&[s(&[1])], 1).unwrap(), vec![s(&[1])]);
        assert_eq!(minimal_transversals(&[s(&[1, 2])], 2).unwrap(), vec![s(&[1]), s(&[2])]);
        assert!(matches!(minimal_transversals(&[s(&[1])], 21), Err(Error::Resource(_))));
        assert!(minimal_transversals(&[s(&[1]), s(&[1, 2])], 2).is_err());
    }

    #[test]
    fn zero_set_examples() {
        assert_eq!(zero_set(&ideal(3, &[&[1, 2], &[1, 3]])), ty(3, &[&[1], &[2, 3]]));
        assert_eq!(zero_set(&ideal(2, &[&[1]])), ty(2, &[&[1]]));
        assert_eq!(zero_set(&ideal(2, &[&[1, 2]])), ty(2, &[&[1], &[2]]));
    }

    #[test]
    fn membership_examples() {
        let i = ideal(4, &[&[1, 2], &[1, 3]]);
        let f = SparsePoly::from_terms(4, [(vec![2, 1, 0, 0], integer(1)), (vec![1, 0, 1, 1], integer(1))]).unwrap();
        assert!(ideal_membership(&f, &i).unwrap());
        let g = SparsePoly::from_terms(4, [(vec![0, 1, 1, 0], integer(1))]).unwrap();
        assert!(!ideal_membership(&g, &i).unwrap());
        assert!(ideal_membership(&SparsePoly::zero(4), &i).unwrap());
        assert!(ideal_membership(&SparsePoly::zero(3), &i).is_err());
    }

    /// Every antichain of nonempty subsets of `{0..m-1}`.
    fn all_antichains(m: usize) -> Vec<Vec<Subset>> {
        let universe: Vec<Subset> = Subset::nonempty_subsets(m).collect();
        let mut out = Vec::new();
        fn go(universe: &[Subset], k: usize, cur: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
            if k == universe.len() {
                if !cur.is_empty() {
                    out.push(cur.clone());
                }
                return;
            }
            go(universe, k + 1, cur, out);
            let u = universe[k];
            if cur.iter().all(|c| !c.is_subset(u) && !u.is_subset(*c)) {
                cur.push(u);
                go(universe, k + 1, cur, out);
                cur.pop();
            }
        }
        go(&universe, 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn exhaustive_small_corpus() {
        // Dedekind numbers minus the two antichains {} and {∅}.
        let counts: Vec<usize> = (1..=4).map(|m| all_antichains(m).len()).collect();
        assert_eq!(counts, vec![1, 4, 18, 166]);
        for m in 1..=4 {
            let bound = sperner_bound(m).unwrap() as usize;
            for gens in all_antichains(m) {
                assert!(gens.len() <= bound);
                let i = SquareFreeIdeal::new(m, gens.clone()).unwrap();
                let oracle = minimal_transversals(&gens, m).unwrap();
                assert_eq!(prime_decomposition(&i), oracle);
                assert_eq!(minimal_transversals(&oracle, m).unwrap(), i.generators());
                assert_eq!(&associated_monomials(&zero_set(&i)), &i);
                let t = TypeLambda::new(m, gens).unwrap();
                assert_eq!(zero_set(&associated_monomials(&t)), t.sorted());
            }
        }
    }

    #[test]
    fn variable_outside_generators_is_a_non_zero_divisor() {
        for m in 1..=4 {
            for gens in all_antichains(m) {
                let i = SquareFreeIdeal::new(m, gens.clone()).unwrap();
                let used = gens.iter().fold(Subset::EMPTY, |a, &g| a.union(g));
                for v in (0..m).filter(|&v| !used.contains(v)) {
                    for mu in (0u64..1 << m).map(Subset::from_bits) {
                        let mu_m = Monomial::from_subset(m, mu);
                        let mut e = mu_m.exps().to_vec();
                        e[v] += 1;
                        if i.contains_monomial(&Monomial::new(e)) {
                            assert!(i.contains_monomial(&mu_m));
                        }
                    }
                }
            }
        }
    }
}
