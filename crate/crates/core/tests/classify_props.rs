mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use moncross::classify::{is_monomial_singularity, type_invariant, types_equivalent, GermDescriptor, SingularityWitness};
use moncross::families::{coordinate_model, LinearFamily};
use moncross::monomideal::TypeLambda;
use moncross::subset::Subset;

use common::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Some renaming of the variables carries one set of components onto the
/// other.
fn brute_force_equivalent(a: &TypeLambda, b: &TypeLambda) -> bool {
    if a.ambient() != b.ambient() || a.len() != b.len() {
        return false;
    }
    let target = b.sorted();
    permutations(a.ambient()).iter().any(|p| {
        let moved = TypeLambda::new(a.ambient(), a.components().iter().map(|l| l.map(p)).collect()).unwrap();
        moved.sorted() == target
    })
}

fn shuffled(r: &mut impl Rng, t: &TypeLambda) -> TypeLambda {
    let mut perm: Vec<usize> = (0..t.ambient()).collect();
    perm.shuffle(r);
    let mut comps: Vec<Subset> = t.components().iter().map(|l| l.map(&perm)).collect();
    comps.shuffle(r);
    TypeLambda::new(t.ambient(), comps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn coordinate_descriptors_are_monomial(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.gen_range(1..=6);
        let t = random_type(&mut r, m, sperner(m));
        prop_assert_eq!(is_monomial_singularity(&GermDescriptor::of_type(&t)), (true, None));
    }

    #[test]
    fn equivalence_matches_variable_relabeling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.gen_range(1..=4);
        let s = r.gen_range(1..=sperner(m).min(4));
        let a = random_type(&mut r, m, s);
        let b = if r.gen_bool(0.5) { shuffled(&mut r, &a) } else { random_type(&mut r, m, s) };
        let c = if r.gen_bool(0.5) { shuffled(&mut r, &b) } else { random_type(&mut r, m, s) };
        for (x, y) in [(&a, &b), (&b, &c), (&a, &c)] {
            prop_assert_eq!(types_equivalent(x, y).unwrap(), brute_force_equivalent(x, y));
            prop_assert_eq!(types_equivalent(x, y).unwrap(), types_equivalent(y, x).unwrap());
        }
        prop_assert!(types_equivalent(&a, &a).unwrap());
        if types_equivalent(&a, &b).unwrap() && types_equivalent(&b, &c).unwrap() {
            prop_assert!(types_equivalent(&a, &c).unwrap());
        }
    }

    #[test]
    fn invariant_survives_linear_images(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.gen_range(1..=5);
        let t = random_type(&mut r, m, sperner(m).min(6));
        let image = LinearFamily::from_type(&t).image(&random_invertible(&mut r, m)).unwrap();
        let model = coordinate_model(&image).unwrap();
        prop_assert_eq!(type_invariant(&model).unwrap(), type_invariant(&t).unwrap());
    }

    #[test]
    fn one_wrong_dimension_is_reported(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = r.gen_range(2..=5);
        let t = random_type(&mut r, m, sperner(m).min(5));
        let tangents = LinearFamily::from_type(&t).image(&random_invertible(&mut r, m)).unwrap();
        let data = tangents.levels();
        let mut sets: Vec<Subset> = Subset::nonempty_subsets(t.len()).filter(|i| i.len() >= 2).collect();
        sets.shuffle(&mut r);
        let mut tested = false;
        for i in sets {
            let tangent = data.meet_dim(i);
            if tangent == 0 {
                continue;
            }
            let table: Vec<(Subset, usize)> = Subset::nonempty_subsets(t.len())
                .map(|j| (j, if j == i { tangent - 1 } else { data.meet_dim(j) }))
                .collect();
            let Ok(d) = GermDescriptor::new(tangents.clone(), table) else { continue };
            prop_assert_eq!(
                is_monomial_singularity(&d),
                (false, Some(SingularityWitness::Mismatch { set: i, germ: tangent - 1, tangent }))
            );
            tested = true;
            break;
        }
        prop_assume!(tested);
    }
}
