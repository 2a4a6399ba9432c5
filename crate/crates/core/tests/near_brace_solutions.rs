//! Which near braces give braid solutions through the near rule
//! `σ_a(b) = a∘b − a∘0 + 1`, `τ_b(a) = σ_a(b)⁻¹∘a∘b`.
//!
//! Every singular near brace on at most four elements does; the
//! non-singular ones of size four do not. The acceptance suite checks the
//! unrefined statement, which therefore fails.

use stybe_core::algebra::{enumerate_near_braces, verify_structure, Level, NearBrace};
use stybe_core::ybe::{solution_from_structure, verify_braid, Rule};

fn split(n: usize) -> (Vec<NearBrace>, Vec<NearBrace>) {
    enumerate_near_braces(n, Level::NearBrace, false)
        .unwrap()
        .into_iter()
        .partition(|nb| verify_structure(nb, Level::SingularNearBrace).valid)
}

#[test]
fn singular_near_braces_give_solutions() {
    for n in 1..=4 {
        let (singular, _) = split(n);
        assert!(!singular.is_empty());
        for nb in singular {
            let sol = solution_from_structure(&nb, Rule::Near).unwrap();
            assert!(verify_braid(&sol).passed, "{nb:?}");
            if nb.add().commutativity_witness().is_none() {
                assert!(sol.is_involutive(), "{nb:?}");
            }
        }
    }
}

#[test]
fn non_singular_near_braces_fail_at_size_four() {
    for n in 1..=3 {
        assert!(split(n).1.is_empty(), "n={n}");
    }
    let (_, rest) = split(4);
    assert!(!rest.is_empty());
    for nb in rest {
        let report = verify_braid(&solution_from_structure(&nb, Rule::Near).unwrap());
        assert!(!report.passed);
        assert!(report.direct.witness.is_some());
    }
}
