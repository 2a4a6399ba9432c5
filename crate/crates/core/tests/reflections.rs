//! Reflection maps on every small involutive non-degenerate solution.

use itertools::Itertools;
use stybe_core::algebra::{enumerate_near_braces, Level};
use stybe_core::reflection::{central_maps, tau_equivariant_maps, verify_reflection, ReflectionMap, ReflectionMode};
use stybe_core::ybe::{enumerate_solutions, solution_from_structure, Rule, SetSolution, SolutionFilter};
use stybe_core::Error;

fn involutive_non_degenerate(n: usize) -> Vec<SetSolution> {
    let f = SolutionFilter {
        involutive: true,
        non_degenerate: true,
    };
    enumerate_solutions(n, f, false).unwrap()
}

fn passes(sol: &SetSolution, k: &ReflectionMap, mode: ReflectionMode) -> bool {
    verify_reflection(sol, k, mode).unwrap().passed()
}

#[test]
fn direct_and_second_component_forms_agree_on_every_map() {
    for n in 1..=3 {
        for sol in involutive_non_degenerate(n) {
            for t in (0..n).map(|_| 0..n).multi_cartesian_product() {
                let k = ReflectionMap::new(t).unwrap();
                assert_eq!(
                    passes(&sol, &k, ReflectionMode::Direct),
                    passes(&sol, &k, ReflectionMode::Cc1),
                    "{sol:?} {k:?}"
                );
            }
            assert!(passes(&sol, &ReflectionMap::identity(n), ReflectionMode::Cc1));
        }
    }
}

#[test]
fn equivariant_maps_are_reflections() {
    for n in 1..=4 {
        for sol in involutive_non_degenerate(n) {
            let maps = tau_equivariant_maps(&sol);
            assert!(maps.contains(&ReflectionMap::identity(n)));
            for k in maps {
                assert!(passes(&sol, &k, ReflectionMode::Direct), "{sol:?} {k:?}");
            }
        }
    }
}

#[test]
fn central_tau_maps_of_braces_are_reflections() {
    for n in 1..=6 {
        for nb in enumerate_near_braces(n, Level::LeftBrace, true).unwrap() {
            let sol = solution_from_structure(&nb, Rule::Rump).unwrap();
            let maps = central_maps(&sol, &nb).unwrap();
            assert!(!maps.is_empty());
            for k in maps {
                assert!(passes(&sol, &k, ReflectionMode::Direct), "{nb:?} {k:?}");
            }
        }
    }
}

#[test]
fn second_component_form_refuses_degenerate_input() {
    let sol = SetSolution::from_fns(2, |_, _| 0, |_, _| 0);
    let res = verify_reflection(&sol, &ReflectionMap::identity(2), ReflectionMode::Cc1);
    assert!(matches!(res, Err(Error::Hypothesis(_))));
}
