mod common;

use std::collections::BTreeSet;

use common::*;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_additive::atlas::{
    canonical_form, classify_collection, dim2_fixture, emit_report, enumerate_smooth_fano_dim2, summarize,
    ClassifyOptions, ReportFormat, ReportOptions,
};
use toric_additive::families::{interval, projective_space_polytope, pseudo_del_pezzo_polytope};
use toric_additive::formats::{parse_collection_text, write_collection_text};
use toric_additive::invariants::{anticanonical_degree, betti_numbers, invariant_record, picard_number, specialized_betti_checks};
use toric_additive::{classify_polytope, AdditiveOptions, IntMatrix, Polytope};

/// A unimodular `n x n` matrix from random elementary row operations.
fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for _ in 0..rng.gen_range(1..10) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        match rng.gen_range(0..3) {
            0 if i != j => m.swap(i, j),
            1 => m[i].iter_mut().for_each(|x| *x = -*x),
            _ if i != j => {
                let c = rng.gen_range(-2..=2);
                let src = m[j].clone();
                m[i].iter_mut().zip(src).for_each(|(x, y)| *x += c * y);
            }
            _ => {}
        }
    }
    let refs: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64_rows(&refs).unwrap()
}

#[test]
fn poincare_symmetry() {
    for (name, p) in smooth_fano_fixtures() {
        let h = betti_numbers(&p).unwrap();
        let n = p.dim();
        assert_eq!(h.len(), n + 1, "{name}");
        assert_eq!((h[0], h[n]), (1, 1), "{name}");
        for i in 0..=n {
            assert_eq!(h[i], h[n - i], "{name}: {h:?}");
        }
    }
}

#[test]
fn general_betti_formula_matches_closed_forms() {
    for (name, p) in smooth_fano_fixtures() {
        match specialized_betti_checks(&p).unwrap() {
            Some(mismatches) => assert!(mismatches.is_empty(), "{name}: {mismatches:?}"),
            None => assert!(p.dim() < 2 || p.dim() > 4, "{name}"),
        }
    }
}

#[test]
fn picard_number_is_second_betti_number() {
    for (name, p) in smooth_fano_fixtures() {
        let fan = p.dual().unwrap().normal_fan();
        assert_eq!(picard_number(&fan).unwrap() as i64, betti_numbers(&p).unwrap()[1], "{name}");
    }
}

#[test]
fn degree_is_a_lattice_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, p) in smooth_fano_fixtures() {
        let d = anticanonical_degree(&p).unwrap();
        for _ in 0..10 {
            let q = p.transform(&random_unimodular(&mut rng, p.dim())).unwrap();
            assert_eq!(anticanonical_degree(&q).unwrap(), d, "{name}");
        }
    }
}

#[test]
fn degree_examples() {
    // (-K)^n of P^n is (n+1)^n
    for n in 1..=5usize {
        let expected = BigInt::from(n as i64 + 1).pow(n as u32);
        assert_eq!(anticanonical_degree(&projective_space_polytope(n).unwrap()).unwrap(), expected);
    }
}

#[test]
fn table_rows() {
    let p4 = invariant_record(&projective_space_polytope(4).unwrap()).unwrap();
    assert_eq!((p4.degree, p4.betti_even[1], p4.betti_even[2], p4.f_vector[4], p4.f_vector[1]), (625, 1, 1, 5, 5));
    let pent = pseudo_del_pezzo_polytope(2).unwrap();
    let r = invariant_record(&pent.free_sum(&pent).unwrap()).unwrap();
    assert_eq!((r.degree, r.betti_even[1], r.betti_even[2], r.f_vector[4], r.f_vector[1]), (294, 6, 11, 25, 10));
    let pdp4 = invariant_record(&pseudo_del_pezzo_polytope(4).unwrap()).unwrap();
    assert_eq!((pdp4.degree, pdp4.betti_even[1], pdp4.betti_even[2], pdp4.f_vector[4], pdp4.f_vector[1]), (307, 5, 11, 23, 9));
}

#[test]
fn canonical_form_is_a_lattice_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, p) in smooth_fano_fixtures() {
        let form = canonical_form(&p).unwrap();
        for _ in 0..100 {
            let q = p.transform(&random_unimodular(&mut rng, p.dim())).unwrap();
            assert_eq!(canonical_form(&q).unwrap(), form, "{name}");
        }
    }
}

#[test]
fn canonical_forms_separate_classes() {
    let fixtures = smooth_fano_fixtures();
    let mut collisions = Vec::new();
    for (i, (a, p)) in fixtures.iter().enumerate() {
        for (b, q) in &fixtures[i + 1..] {
            if canonical_form(p).unwrap() == canonical_form(q).unwrap() {
                collisions.push((a.as_str(), b.as_str()));
            }
        }
    }
    // the plane is listed both as a database entry and as a family member
    assert_eq!(collisions, [("grdb2-5", "P2")]);
}

#[test]
fn classification_is_order_independent() {
    let mut input: Vec<(String, Polytope)> = smooth_fano_fixtures();
    let (base, base_summary) = classify_collection(&input, &ClassifyOptions::default()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for jobs in [1, 3] {
        input.shuffle(&mut rng);
        let (records, summary) = classify_collection(&input, &ClassifyOptions { jobs, ..Default::default() }).unwrap();
        assert_eq!(records, base);
        assert_eq!(summary, base_summary);
    }
}

#[test]
fn dim2_uniquely_additive_classes() {
    let (records, _) = classify_collection(&dim2_fixture(), &ClassifyOptions::default()).unwrap();
    let unique: BTreeSet<_> = records
        .iter()
        .filter(|r| r.is_uniquely_additive)
        .map(|r| canonical_form(&Polytope::new(toric_additive::Side::N, &r.vertices).unwrap()).unwrap())
        .collect();
    let seg = interval();
    let expected: BTreeSet<_> = [pseudo_del_pezzo_polytope(2).unwrap(), seg.free_sum(&seg).unwrap()]
        .iter()
        .map(|p| canonical_form(p).unwrap())
        .collect();
    assert_eq!(unique, expected);
}

/// Free sums of intervals and pseudo del Pezzo polytopes of dimension `n`.
fn unique_candidates(n: usize) -> Vec<Polytope> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut blocks: Vec<(usize, Polytope)> = vec![(1, interval())];
    for k in (2..=n).step_by(2) {
        blocks.push((k, pseudo_del_pezzo_polytope(k).unwrap()));
    }
    // multisets of blocks with nondecreasing block index
    fn rec(blocks: &[(usize, Polytope)], start: usize, left: usize, acc: Option<Polytope>, out: &mut Vec<Polytope>) {
        if left == 0 {
            out.push(acc.unwrap());
            return;
        }
        for (i, (k, b)) in blocks.iter().enumerate().skip(start) {
            if *k <= left {
                let next = match &acc {
                    None => b.clone(),
                    Some(a) => a.free_sum(b).unwrap(),
                };
                rec(blocks, i, left - k, Some(next), out);
            }
        }
    }
    rec(&blocks, 0, n, None, &mut out);
    out
}

#[test]
fn uniquely_additive_free_sums() {
    for (n, count) in [(1, 1), (2, 2), (3, 2), (4, 4)] {
        let candidates = unique_candidates(n);
        assert_eq!(candidates.len(), count, "dim {n}");
        let forms: BTreeSet<_> = candidates.iter().map(|p| canonical_form(p).unwrap()).collect();
        assert_eq!(forms.len(), count, "dim {n}");
        for p in &candidates {
            assert!(p.is_smooth_fano().unwrap());
            let r = classify_polytope(p, &AdditiveOptions::default()).unwrap();
            assert_eq!(r.is_uniquely_additive, Some(true), "dim {n}: {:?}", p.vertices());
        }
    }
}

#[test]
fn enumeration_matches_fixture_file() {
    let text = std::fs::read_to_string(workspace_root().join("fixtures/smooth_fano_dim2.txt")).unwrap();
    let parsed = parse_collection_text(&text);
    assert!(parsed.diagnostics.is_empty());
    assert_eq!(parsed.polytopes, dim2_fixture());
    assert_eq!(enumerate_smooth_fano_dim2().len(), 5);
    let fixture = dim2_fixture();
    assert_eq!(write_collection_text(fixture.iter().map(|(i, p)| (i.as_str(), p))), text);
}

#[test]
fn reports_are_consistent_across_formats() {
    let (records, summary) = classify_collection(&smooth_fano_fixtures(), &ClassifyOptions::default()).unwrap();
    let (all, by_dim) = summarize(&records);
    assert_eq!(all, summary);
    assert_eq!(by_dim.iter().map(|d| d.total).sum::<usize>(), all.total);
    for d in &by_dim {
        assert_eq!(d.total, d.not_additive + d.additive_not_unique + d.uniquely_additive);
    }
    let csv = emit_report(&records, &ReportOptions { format: ReportFormat::Csv, additive_only: false });
    let last = csv.lines().last().unwrap();
    assert_eq!(last, format!("{},{},{},{}", all.total, all.not_additive, all.additive_not_unique, all.uniquely_additive));
    let json = emit_report(&records, &ReportOptions { format: ReportFormat::Json, additive_only: true });
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["records"].as_array().unwrap().len(), all.additive());
    assert_eq!(doc["summary"]["total"], all.total);
}
