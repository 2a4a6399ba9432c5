//! Set-level verdicts against their matrix counterparts on random maps.

use proptest::prelude::*;
use stybe_core::algebra::OpTable;
use stybe_core::matrix::PolyMatrix;
use stybe_core::quantum::check_reflection_constant;
use stybe_core::reflection::{verify_reflection, ReflectionMap, ReflectionMode};
use stybe_core::rmatrix::linearize;
use stybe_core::ybe::{verify_braid, SetSolution};

fn solution(n: usize, cells: Vec<usize>) -> SetSolution {
    let sigma = OpTable::new(n, cells[..n * n].to_vec()).unwrap();
    let tau = OpTable::new(n, cells[n * n..].to_vec()).unwrap();
    SetSolution::new(sigma, tau).unwrap()
}

fn arb_solution() -> impl Strategy<Value = SetSolution> {
    (1usize..=3).prop_flat_map(|n| prop::collection::vec(0..n, 2 * n * n).prop_map(move |c| solution(n, c)))
}

fn arb_solution_and_map() -> impl Strategy<Value = (SetSolution, ReflectionMap)> {
    (1usize..=3).prop_flat_map(|n| {
        (prop::collection::vec(0..n, 2 * n * n), prop::collection::vec(0..n, n))
            .prop_map(move |(c, k)| (solution(n, c), ReflectionMap::new(k).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn braid_relation_agrees_with_matrix_form(sol in arb_solution()) {
        let n = sol.size();
        let lin = linearize(&sol);
        let space = [n, n, n];
        let r12 = lin.r_check.embed(&[0, 1], &space).unwrap();
        let r23 = lin.r_check.embed(&[1, 2], &space).unwrap();
        let matrix = &(&r12 * &r23) * &r12 == &(&r23 * &r12) * &r23;
        prop_assert_eq!(verify_braid(&sol).passed, matrix);
        let squared = &lin.r_check * &lin.r_check == PolyMatrix::identity(&[n, n]);
        prop_assert_eq!(sol.is_involutive(), squared);
    }

    #[test]
    fn reflection_relation_agrees_with_matrix_form((sol, k) in arb_solution_and_map()) {
        let lin = linearize(&sol);
        let set = verify_reflection(&sol, &k, ReflectionMode::Direct).unwrap().passed();
        let matrix = check_reflection_constant(&lin, &k).unwrap().passed();
        prop_assert_eq!(set, matrix);
    }
}
