//! Acceptance suite: one test per release criterion, each printing a
//! single PASS/FAIL line (run with `--nocapture` to see them).
//!
//! Everything here is black-box over the public API, and every expected
//! value is either exact algebra or an independently computed oracle.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use ldiag_core::{
    black_weight_word, black_word_projection, deformed_product, deformed_product_at,
    enumerate_by_weight, mqsym_oracle_product, quasi_shuffle, stuffle_check, verify_hopf_axioms,
    Axiom, DiagramSum, HopfStructure, SplitVariant, WeightMatrix,
};

fn deck_up_to(w: u64) -> Vec<WeightMatrix> {
    (0..=w)
        .flat_map(|n| enumerate_by_weight(n).expect("weight under the default bound"))
        .collect()
}

fn report(number: u8, name: &str, failure: Option<String>) {
    match &failure {
        None => println!("criterion {number} ({name}): PASS"),
        Some(reason) => println!("criterion {number} ({name}): FAIL - {reason}"),
    }
    if let Some(reason) = failure {
        panic!("criterion {number} ({name}) failed: {reason}");
    }
}

#[test]
fn criterion_1_symbolic_associativity() {
    let mut failure = None;

    // Exhaustive over every triple from the weight <= 2 deck (a superset
    // of the triples of total weight <= 2).
    let small = deck_up_to(2);
    'exhaustive: for a in &small {
        for b in &small {
            for c in &small {
                let (x, y, z) = (
                    DiagramSum::basis(a.clone()),
                    DiagramSum::basis(b.clone()),
                    DiagramSum::basis(c.clone()),
                );
                let left = deformed_product(&deformed_product(&x, &y), &z);
                let right = deformed_product(&x, &deformed_product(&y, &z));
                if left != right {
                    failure = Some(format!("exhaustive triple {a:?}, {b:?}, {c:?}"));
                    break 'exhaustive;
                }
            }
        }
    }

    // 200 seeded-random triples with each factor of weight 3.
    if failure.is_none() {
        let heavy = enumerate_by_weight(3).expect("weight under the default bound");
        let mut rng = ChaCha8Rng::seed_from_u64(0xD1A6);
        for _ in 0..200 {
            let a = heavy.choose(&mut rng).unwrap();
            let b = heavy.choose(&mut rng).unwrap();
            let c = heavy.choose(&mut rng).unwrap();
            let (x, y, z) = (
                DiagramSum::basis(a.clone()),
                DiagramSum::basis(b.clone()),
                DiagramSum::basis(c.clone()),
            );
            let left = deformed_product(&deformed_product(&x, &y), &z);
            let right = deformed_product(&x, &deformed_product(&y, &z));
            if left != right {
                failure = Some(format!("random triple {a:?}, {b:?}, {c:?}"));
                break;
            }
        }
    }

    report(1, "symbolic associativity", failure);
}

#[test]
fn criterion_2_specialization_at_zero_is_concatenation() {
    let deck = deck_up_to(3);
    let mut failure = None;
    'pairs: for a in &deck {
        for b in &deck {
            let at_zero = deformed_product_at(
                &DiagramSum::basis(a.clone()),
                &DiagramSum::basis(b.clone()),
                0,
                0,
            );
            if at_zero != DiagramSum::basis(a.concat(b)) {
                failure = Some(format!("pair {a:?}, {b:?}"));
                break 'pairs;
            }
        }
    }
    report(2, "specialization (0,0) = concatenation", failure);
}

#[test]
fn criterion_3_specialization_at_one_is_quasi_symmetric_product() {
    let deck = deck_up_to(3);
    let mut failure = None;
    'pairs: for a in &deck {
        for b in &deck {
            let fast = deformed_product_at(
                &DiagramSum::basis(a.clone()),
                &DiagramSum::basis(b.clone()),
                1,
                1,
            );
            let oracle = mqsym_oracle_product(a, b);
            if fast != oracle {
                failure = Some(format!("pair {a:?}, {b:?}"));
                break 'pairs;
            }
        }
    }
    report(3, "specialization (1,1) = matrix quasi-symmetric product", failure);
}

#[test]
fn criterion_4_polyzeta_product_law() {
    let deck = deck_up_to(3);
    let mut failure = None;

    // (a) algebraic: the column-sum word projection intertwines the
    // (1,1) product with the quasi-shuffle.
    'pairs: for a in &deck {
        for b in &deck {
            let prod = deformed_product_at(
                &DiagramSum::basis(a.clone()),
                &DiagramSum::basis(b.clone()),
                1,
                1,
            );
            let projected = black_word_projection(&prod);
            let direct = quasi_shuffle(&black_weight_word(a), &black_weight_word(b));
            if projected.as_ref() != Some(&direct) {
                failure = Some(format!("projection mismatch on {a:?}, {b:?}"));
                break 'pairs;
            }
        }
    }

    // (b) numeric: the truncated stuffle residual against the converged
    // product decays like 1/N.
    if failure.is_none() {
        let r = stuffle_check(2, 3, 100_000);
        if r > 1e-4 {
            failure = Some(format!("residual at N=1e5 is {r:.3e} > 1e-4"));
        }
    }
    if failure.is_none() {
        let ratio = stuffle_check(2, 3, 1_000) / stuffle_check(2, 3, 10_000);
        if !(5.0..=20.0).contains(&ratio) {
            failure = Some(format!("decay ratio {ratio:.3} outside [5, 20]"));
        }
    }

    report(4, "polyzeta product law, algebraic and numeric", failure);
}

#[test]
fn criterion_5_hopf_axioms_at_both_endpoints() {
    let deck = deck_up_to(3);
    let mut failure = None;
    for h in [
        HopfStructure::ldiag(),
        HopfStructure::new(0, 0, 0, SplitVariant::White).expect("t = 0 is valid"),
        HopfStructure::mqsym(),
    ] {
        let r = verify_hopf_axioms(&deck, &h);
        if !r.all_passed() {
            let detail: Vec<String> = r
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{} ({:?})", c.axiom, c.counterexample))
                .collect();
            failure = Some(format!("{h:?}: {}", detail.join("; ")));
            break;
        }
    }
    report(5, "Hopf axioms at (0,0,0) and (1,1,1)", failure);
}

#[test]
fn criterion_6_cocommutativity_contract() {
    let deck = deck_up_to(3);
    let mut failure = None;

    let split = verify_hopf_axioms(&deck, &HopfStructure::ldiag());
    if !split.cocommutative {
        failure = Some(format!(
            "subset coproduct not cocommutative: {:?}",
            split.cocommutativity_witness
        ));
    }

    if failure.is_none() {
        let cut = verify_hopf_axioms(&deck, &HopfStructure::mqsym());
        if cut.cocommutative {
            failure = Some("cut coproduct reported cocommutative".to_string());
        } else if cut.cocommutativity_witness.as_deref() != Some("d = [1 2]") {
            failure = Some(format!(
                "unexpected witness {:?}",
                cut.cocommutativity_witness
            ));
        }
    }

    report(6, "cocommutativity contract of the two coproducts", failure);
}

#[test]
fn criterion_7_morphism_squares() {
    let deck = deck_up_to(3);
    let mut failure = None;
    'pairs: for a in &deck {
        for b in &deck {
            let joined = a.concat(b);
            if joined.monomial() != a.monomial().mul(&b.monomial()) {
                failure = Some(format!("degree monomial on {a:?}, {b:?}"));
                break 'pairs;
            }
            if joined.unlabel() != a.unlabel().concat(&b.unlabel()) {
                failure = Some(format!("unlabelling on {a:?}, {b:?}"));
                break 'pairs;
            }
            if joined.unlabel().monomial() != joined.monomial() {
                failure = Some(format!("monomial through unlabelling on {a:?}, {b:?}"));
                break 'pairs;
            }
        }
    }
    report(7, "morphisms commute with concatenation", failure);
}

#[test]
fn criterion_8_free_monoid_factorization() {
    let mut failure = None;

    // Factor-then-concatenate is the identity on the weight <= 4 deck.
    let wide: Vec<WeightMatrix> = (0..=4)
        .flat_map(|n| enumerate_by_weight(n).expect("weight under the default bound"))
        .collect();
    for d in &wide {
        let rebuilt = d
            .factor_irreducibles()
            .into_iter()
            .fold(WeightMatrix::empty(), |acc, f| acc.concat(&f));
        if rebuilt != *d {
            failure = Some(format!("rebuild mismatch on {d:?}"));
            break;
        }
    }

    // Factorization recovers the sequence of any concatenation of
    // irreducibles from the weight <= 3 deck.
    if failure.is_none() {
        let irreducibles: Vec<WeightMatrix> = deck_up_to(3)
            .into_iter()
            .filter(|d| d.is_irreducible())
            .collect();
        'words: for a in &irreducibles {
            for b in &irreducibles {
                let pair = a.concat(b);
                if pair.factor_irreducibles() != vec![a.clone(), b.clone()] {
                    failure = Some(format!("pair sequence on {a:?}, {b:?}"));
                    break 'words;
                }
                for c in &irreducibles {
                    let triple = pair.concat(c);
                    if triple.factor_irreducibles() != vec![a.clone(), b.clone(), c.clone()] {
                        failure = Some(format!("triple sequence on {a:?}, {b:?}, {c:?}"));
                        break 'words;
                    }
                }
            }
        }
    }

    report(8, "free monoid factorization", failure);
}

#[test]
fn criterion_9_enumeration_soundness() {
    let mut failure = None;

    // Independent oracle: a packed matrix of weight n is a multiset of n
    // cells (the lines); enumerate all multisets over every shape and
    // filter to packed. Shares nothing with the per-cell composition
    // recursion in the library.
    fn by_line_multisets(n: u64) -> std::collections::BTreeSet<WeightMatrix> {
        use itertools::Itertools;
        let mut out = std::collections::BTreeSet::new();
        if n == 0 {
            out.insert(WeightMatrix::empty());
            return out;
        }
        let n_us = n as usize;
        for p in 1..=n_us {
            for q in 1..=n_us {
                for lines in (0..p * q).combinations_with_replacement(n_us) {
                    let mut entries = vec![0u64; p * q];
                    for cell in lines {
                        entries[cell] += 1;
                    }
                    if let Ok(m) = WeightMatrix::from_flat(p, q, entries) {
                        out.insert(m);
                    }
                }
            }
        }
        out
    }

    for n in 0..=4u64 {
        let fast = enumerate_by_weight(n).expect("weight under the default bound");
        let oracle = by_line_multisets(n);
        if fast.len() != oracle.len() || !fast.iter().all(|d| oracle.contains(d)) {
            failure = Some(format!(
                "weight {n}: {} enumerated vs {} by line multisets",
                fast.len(),
                oracle.len()
            ));
            break;
        }
        if fast.windows(2).any(|w| w[0] >= w[1]) {
            failure = Some(format!("weight {n}: output not strictly sorted"));
            break;
        }
    }

    if failure.is_none() && enumerate_by_weight(2).unwrap().len() != 5 {
        failure = Some("weight-2 count is not 5".to_string());
    }

    report(9, "enumeration soundness", failure);
}

// The axiom checker must also refuse to certify a broken structure;
// otherwise criteria 5 and 6 could pass vacuously.
#[test]
fn axiom_checker_rejects_mixed_parameter_points() {
    let deck = deck_up_to(2);
    let mixed = HopfStructure::new(0, 0, 1, SplitVariant::Black).expect("t = 1 is valid");
    let r = verify_hopf_axioms(&deck, &mixed);
    assert!(!r.all_passed());
    let compat = r
        .checks
        .iter()
        .find(|c| c.axiom == Axiom::BialgebraCompatibility)
        .expect("compatibility is always checked");
    assert!(!compat.passed);
    assert!(compat.counterexample.is_some());
}
