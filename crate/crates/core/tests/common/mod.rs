#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use moncross::exactla::{integer, rational, Matrix, Rational, Subspace, Vector};
use moncross::families::LinearFamily;
use moncross::monomideal::{associated_monomials, TypeLambda};
use moncross::poly::SparsePoly;
use moncross::subset::{binomial, minimal_elements, Subset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every nonempty antichain of nonempty subsets of `{0..m-1}`.
pub fn all_antichains(m: usize) -> Vec<Vec<Subset>> {
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
    let universe: Vec<Subset> = Subset::nonempty_subsets(m).collect();
    let mut out = Vec::new();
    go(&universe, 0, &mut Vec::new(), &mut out);
    out
}

/// Antichains of at most `max_s` members, sorted canonically.
pub fn antichains_up_to(m: usize, max_s: usize) -> Vec<Vec<Subset>> {
    fn go(universe: &[Subset], k: usize, max_s: usize, cur: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_s {
            return;
        }
        for j in k..universe.len() {
            let u = universe[j];
            if cur.iter().all(|c| !c.is_subset(u) && !u.is_subset(*c)) {
                cur.push(u);
                go(universe, j + 1, max_s, cur, out);
                cur.pop();
            }
        }
    }
    let universe: Vec<Subset> = Subset::nonempty_subsets(m).collect();
    let mut out = Vec::new();
    go(&universe, 0, max_s, &mut Vec::new(), &mut out);
    out
}

pub fn random_subset(rng: &mut impl Rng, m: usize) -> Subset {
    loop {
        let s = Subset::from_bits(rng.gen_range(1..(1u64 << m)));
        if !s.is_empty() {
            return s;
        }
    }
}

/// A random antichain in input order. Half the time it is a random number
/// of `k`-subsets for one `k`, which reaches the largest antichains.
pub fn random_antichain(rng: &mut impl Rng, m: usize, max_s: usize) -> Vec<Subset> {
    let mut out: Vec<Subset> = if rng.gen_bool(0.5) {
        let k = rng.gen_range(1..=m);
        let mut level: Vec<Subset> = Subset::nonempty_subsets(m).filter(|s| s.len() == k).collect();
        level.shuffle(rng);
        let n = rng.gen_range(1..=level.len().min(max_s));
        level.truncate(n);
        level
    } else {
        let draws = rng.gen_range(1..=max_s);
        let mut picked: Vec<Subset> = Vec::new();
        for _ in 0..draws {
            let s = random_subset(rng, m);
            if picked.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
                picked.push(s);
            }
        }
        picked
    };
    out.shuffle(rng);
    out
}

pub fn random_type(rng: &mut impl Rng, m: usize, max_s: usize) -> TypeLambda {
    TypeLambda::new(m, random_antichain(rng, m, max_s)).unwrap()
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let n = rng.gen_range(-4i64..=4);
    if rng.gen_bool(0.2) {
        rational(n, rng.gen_range(1i64..=3))
    } else {
        integer(n)
    }
}

pub fn random_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let q = random_rational(rng);
        if q != integer(0) {
            return q;
        }
    }
}

pub fn random_vector(rng: &mut impl Rng, m: usize) -> Vector {
    (0..m).map(|_| random_rational(rng)).collect()
}

pub fn random_invertible(rng: &mut impl Rng, m: usize) -> Matrix {
    loop {
        let rows: Vec<Vector> = (0..m).map(|_| random_vector(rng, m)).collect();
        let t = Matrix::from_rows(rows).unwrap();
        if t.is_invertible() {
            return t;
        }
    }
}

/// A random subspace spanned by up to `m` random vectors, biased towards
/// sparse vectors so that intersections are often nonzero.
pub fn random_subspace(rng: &mut impl Rng, m: usize) -> Subspace {
    let k = rng.gen_range(0..=m);
    let vectors: Vec<Vector> = (0..k)
        .map(|_| {
            (0..m)
                .map(|_| if rng.gen_bool(0.5) { integer(0) } else { random_rational(rng) })
                .collect()
        })
        .collect();
    Subspace::canonicalize(&vectors, m).unwrap()
}

/// A family of `s` random nonzero proper subspaces of `Q^m` (`m ≥ 2`), no
/// one containing another.
pub fn random_family(rng: &mut impl Rng, m: usize, s: usize) -> LinearFamily {
    'outer: loop {
        let mut members: Vec<Subspace> = Vec::new();
        let mut tries = 0;
        while members.len() < s {
            tries += 1;
            if tries > 200 {
                continue 'outer;
            }
            let l = random_subspace(rng, m);
            if l.is_zero() || l.dim() == m {
                continue;
            }
            if members.iter().all(|a| !a.contains(&l) && !l.contains(a)) {
                members.push(l);
            }
        }
        return LinearFamily::new(m, members).unwrap();
    }
}

pub fn random_poly(rng: &mut impl Rng, n: usize, max_deg: u32, max_terms: usize) -> SparsePoly {
    let terms = rng.gen_range(1..=max_terms.max(1));
    SparsePoly::from_terms(
        n,
        (0..terms).map(|_| {
            let deg = rng.gen_range(0..=max_deg);
            let mut exps = vec![0u32; n];
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            (exps, random_nonzero(rng))
        }),
    )
    .unwrap()
}

/// `Σ_σ c_σ x^σ` over the associated monomials of `Λ`, with random
/// coefficients of degree at most `max_deg − #σ`.
pub fn random_ideal_element(rng: &mut impl Rng, lambda: &TypeLambda, max_deg: u32) -> SparsePoly {
    let n = lambda.ambient();
    let mut f = SparsePoly::zero(n);
    let gens = associated_monomials(lambda);
    let usable: Vec<Subset> = gens.generators().iter().copied().filter(|g| g.len() as u32 <= max_deg).collect();
    for (k, &g) in usable.iter().enumerate() {
        if k > 0 && rng.gen_bool(0.3) {
            continue;
        }
        let c = random_poly(rng, n, max_deg - g.len() as u32, 4);
        f = f.add(&c.mul_monomial(g).unwrap()).unwrap();
    }
    f
}

pub fn sperner(m: usize) -> usize {
    binomial(m as u64, (m / 2) as u64).unwrap() as usize
}

/// `Σ_{#J = p, J ≠ I} L_J ∩ L_I`, summed literally over all `J`.
pub fn literal_overlap_sum(family: &LinearFamily, i: Subset) -> Subspace {
    let s = family.len();
    let m = family.ambient();
    let mut acc = Subspace::zero(m);
    for j in Subset::nonempty_subsets(s).filter(|j| j.len() == i.len() && *j != i) {
        acc = acc.sum(&literal_meet(family, j).intersect(&literal_meet(family, i)).unwrap()).unwrap();
    }
    acc
}

pub fn literal_meet(family: &LinearFamily, i: Subset) -> Subspace {
    i.iter()
        .fold(Subspace::full(family.ambient()), |a, k| a.intersect(&family.members()[k]).unwrap())
}

/// `L^(p)`, summed literally over all `#I = p`.
pub fn literal_level(family: &LinearFamily, p: usize) -> Subspace {
    let m = family.ambient();
    Subset::nonempty_subsets(family.len())
        .filter(|i| i.len() == p)
        .fold(Subspace::zero(m), |a, i| a.sum(&literal_meet(family, i)).unwrap())
}

pub fn minimal(sets: &[Subset]) -> Vec<Subset> {
    minimal_elements(sets.iter().copied())
}
