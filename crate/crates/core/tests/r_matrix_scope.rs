//! Scope of the Baxterized identities and the link between the reflection
//! equation and the reflection-algebra relations.

use proptest::prelude::*;
use stybe_core::matrix::{Poly, PolyMatrix, Var};
use stybe_core::quantum::{
    check_reflection_algebra, check_reflection_equation, dress_reflection, reflection_matrix, DressParams,
    SeriesOperator,
};
use stybe_core::reflection::tau_equivariant_maps;
use stybe_core::report::Verdict;
use stybe_core::rmatrix::{check_basic_properties, linearize};
use stybe_core::ybe::{enumerate_solutions, SetSolution, SolutionFilter};

#[test]
fn degenerate_involutive_solution_breaks_crossing_unitarity() {
    // ř = id is involutive and satisfies the braid relation but is degenerate.
    let lin = linearize(&SetSolution::from_fns(2, |x, _| x, |y, _| y));
    assert!(lin.source.is_involutive() && !lin.source.is_non_degenerate());
    let rep = check_basic_properties(&lin);
    assert_eq!(rep.ybe.status, Verdict::Pass);
    assert_eq!(rep.unitarity.status, Verdict::Pass);
    assert_eq!(rep.crossing_unitarity.status, Verdict::Fail);
    assert!(rep.crossing_unitarity.witness.is_some());
}

fn small_solutions() -> Vec<SetSolution> {
    let f = SolutionFilter {
        involutive: true,
        non_degenerate: true,
    };
    (1..=3)
        .flat_map(|n| enumerate_solutions(n, f, false).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// A dressed operator passing the braid-form reflection equation also
    /// passes every reflection-algebra order; corrupted ones may fail both.
    #[test]
    fn reflection_equation_implies_algebra(
        pick in 0usize..15,
        theta in -2i64..=2,
        k_pick in 0usize..8,
        corrupt in prop::option::of((0usize..9, 0usize..9, -3i64..=3)),
    ) {
        let sols = small_solutions();
        let lin = linearize(&sols[pick % sols.len()]);
        let n = lin.n;
        let maps = tau_equivariant_maps(&lin.source);
        let k0 = reflection_matrix(&maps[k_pick % maps.len()]);
        let d = dress_reflection(&lin, &DressParams { k0, theta: Poly::int(theta) }).unwrap();
        let mut k = d.k;
        if let Some((r, c, v)) = corrupt {
            let (r, c) = (r % (n * n), c % (n * n));
            let old = k.get_or_zero(r, c);
            k.set(r, c, &old + &(&Poly::var(Var::Mu) * &Poly::int(v)));
        }
        let re = check_reflection_equation(&lin, &k).unwrap();
        let ra = check_reflection_algebra(&lin, &SeriesOperator::from_mu(&k, 4)).unwrap();
        if re.passed() {
            prop_assert!(ra.passed, "{:?}", ra);
        }
        if corrupt.is_none() && k0_is_identity(maps[k_pick % maps.len()].table()) {
            prop_assert!(re.passed());
        }
    }
}

fn k0_is_identity(t: &[usize]) -> bool {
    t.iter().enumerate().all(|(i, &v)| i == v)
}

#[test]
fn identity_k0_dressing_matches_closed_form_everywhere() {
    for sol in small_solutions() {
        let lin = linearize(&sol);
        let d = dress_reflection(&lin, &DressParams::identity(lin.n)).unwrap();
        let mu = Poly::var(Var::Mu);
        let p = lin.permutation();
        let expect = &lin.identity().scale(&(&Poly::one() + &(&mu * &mu)))
            + &(&(&p * &lin.r_check) * &p).scale(&(&mu * &Poly::int(2)));
        assert_eq!(d.k, expect);
        assert_eq!(
            PolyMatrix::identity(&[lin.n, lin.n]),
            SeriesOperator::from_mu(&d.k, 2).coeffs()[0]
        );
    }
}
