use gsft_core::certificate::Certificate;
use gsft_core::equivalence::{
    box_construct, diamond_normalize, nzc_by_powers, nzc_check, verify_chain, verify_sse,
    SSEWitness, Semiring,
};
use gsft_core::groups::{make_group, GroupRef, GroupSpec};
use gsft_core::intlinalg::smith_normal_form;
use gsft_core::invariants::{
    det_i_minus, det_poly, extend_traces, kappa_series_equal, trace_data, trace_series,
};
use gsft_core::oracle::{periodic_weights, skew_fixed_count, LabeledGraph, DEFAULT_BUDGET};
use gsft_core::parse::{parse_matrix, render_matrix};
use gsft_core::polymat::{bar, tilde};
use gsft_core::{GRElem, GRPoly, MatGR, MatGRPoly, Matrix, Ring};
use num_bigint::BigInt;
use proptest::prelude::*;

fn groups() -> Vec<GroupSpec> {
    vec![
        GroupSpec::trivial(),
        GroupSpec::cyclic(2),
        GroupSpec::cyclic(3),
        GroupSpec::cyclic(4),
        GroupSpec::Product {
            factors: vec![GroupSpec::cyclic(2), GroupSpec::cyclic(2)],
        },
        GroupSpec::Dihedral { n: 3 },
    ]
}

fn abelian_groups() -> Vec<GroupSpec> {
    groups()
        .into_iter()
        .filter(|g| !matches!(g, GroupSpec::Dihedral { .. }))
        .collect()
}

fn elem(g: &GroupRef, coeffs: &[i64]) -> GRElem {
    let mut v = vec![BigInt::from(0); g.order()];
    for (k, c) in coeffs.iter().enumerate() {
        v[k % g.order()] += *c;
    }
    GRElem::from_coeffs(g, v)
}

/// Square matrix over `ℤ₊G`; each entry takes up to two group terms.
fn arb_matrix(specs: Vec<GroupSpec>, max_n: usize) -> impl Strategy<Value = MatGR> {
    (prop::sample::select(specs), 1..=max_n).prop_flat_map(|(spec, n)| {
        let g = make_group(&spec).unwrap();
        let m = g.order();
        prop::collection::vec(prop::collection::vec(0i64..3, m), n * n).prop_map(move |cells| {
            let g = g.clone();
            Matrix::from_fn(n, n, GRElem::zero(&g), |i, j| {
                let c: Vec<i64> = cells[i * n + j]
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| if (i + j + k) % 2 == 0 { c } else { c / 2 })
                    .collect();
                elem(&g, &c)
            })
        })
    })
}

/// NZC matrix over `ℤ₊G[t]`: constant terms only above the diagonal.
fn arb_nzc(specs: Vec<GroupSpec>) -> impl Strategy<Value = MatGRPoly> {
    (prop::sample::select(specs), 1usize..=3).prop_flat_map(|(spec, n)| {
        let g = make_group(&spec).unwrap();
        let m = g.order();
        prop::collection::vec(prop::collection::vec(0i64..2, 4 * m), n * n).prop_map(move |cells| {
            let g = g.clone();
            Matrix::from_fn(n, n, GRPoly::zero(&g), |i, j| {
                let cell = &cells[i * n + j];
                let lo = if i < j { 0 } else { 1 };
                GRPoly::from_terms(
                    &g,
                    (lo..=3).map(|d| (d, elem(&g, &cell[d * m..(d + 1) * m]))),
                )
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn trace_recursion_matches_powers(a in arb_matrix(groups(), 3)) {
        let count = 2 * a.group().order() * a.rows();
        let td = trace_data(&a).unwrap();
        let fast = extend_traces(&td, count);
        let mut p = a.clone();
        for (k, t) in fast.iter().enumerate() {
            prop_assert_eq!(t, &p.trace(), "k = {}", k + 1);
            p = p.mul(&a);
        }
        prop_assert_eq!(trace_series(&a, count).unwrap(), fast);
    }

    #[test]
    fn oracles_agree_with_traces(a in arb_matrix(groups(), 2), n in 1usize..=6) {
        let graph = LabeledGraph::from_matrix(&a).unwrap();
        let trace = a.pow(n).trace();
        prop_assert_eq!(periodic_weights(&graph, n, DEFAULT_BUDGET).unwrap(), trace.clone());
        let skew = skew_fixed_count(&graph, n, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(&skew, &tilde(&a).pow(n).trace());
        let m = BigInt::from(a.group().order());
        prop_assert_eq!(skew, m * trace.coeff(a.group().identity()));
    }

    #[test]
    fn lifts_are_ring_maps(a in arb_matrix(groups(), 3), b in arb_matrix(groups(), 3)) {
        prop_assume!(a.rows() == b.rows() && a.group().spec() == b.group().spec());
        let b = Matrix::from_fn(b.rows(), b.cols(), GRElem::zero(a.group()), |i, j| {
            GRElem::from_coeffs(a.group(), b.get(i, j).coeffs().to_vec())
        });
        prop_assert_eq!(tilde(&a.mul(&b)), tilde(&a).mul(&tilde(&b)));
        prop_assert_eq!(bar(&a.mul(&b)), bar(&a).mul(&bar(&b)));
    }

    #[test]
    fn nzc_agrees_with_powers(a in arb_matrix(groups(), 3), shift in 0usize..2) {
        // constant terms anywhere, so both outcomes occur
        let p = a.map(GRPoly::zero(a.group()), |x| {
            GRPoly::constant(x.clone()).add(&GRPoly::monomial(x.clone(), shift + 1))
        });
        prop_assert_eq!(nzc_check(&p).unwrap(), nzc_by_powers(&p).unwrap());
    }

    #[test]
    fn diamond_preserves_det(a in arb_nzc(abelian_groups())) {
        let d = diamond_normalize(&a, false).unwrap();
        prop_assert!(verify_chain(&d.chain).valid);
        prop_assert_eq!(det_i_minus(&a).unwrap(), det_poly(&d.diamond).unwrap());
        let n = a.rows();
        prop_assert!(d.diamond.rows() <= n * a.degree().unwrap_or(1).max(1));
    }

    #[test]
    fn sse_step_preserves_kappa(
        r in arb_matrix(groups(), 2),
        cols in prop::collection::vec(prop::collection::vec(0i64..3, 6), 1..=2),
    ) {
        let g = r.group().clone();
        let s = Matrix::from_fn(r.rows(), cols.len(), GRElem::zero(&g), |i, j| elem(&g, &cols[j][i * 3..i * 3 + 3]));
        let (rr, ss) = (r.mul(&s), s.transpose());
        // A = R·S, B = S·R with R = r·s (n×k) and S = sᵀ (k×n)
        let a = rr.mul(&ss);
        let b = ss.mul(&rr);
        let cmp = kappa_series_equal(&a, &b).unwrap();
        prop_assert!(cmp.equal);
        let w = SSEWitness { semiring: Semiring::NonnegGroupRing, steps: vec![(rr.to_poly(), ss.to_poly())] };
        prop_assert!(verify_sse(&a.to_poly(), &b.to_poly(), &w).valid);
    }

    #[test]
    fn matrices_round_trip_through_text(a in arb_nzc(groups())) {
        let text = render_matrix(&a);
        prop_assert_eq!(parse_matrix(a.group(), &text).unwrap(), a);
    }

    #[test]
    fn snf_factors(rows in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 1..=4)) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let a = Matrix::<BigInt>::from_i64(&refs);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal_matrix());
        for w in s.diagonal.windows(2) {
            prop_assert!(w[0] == BigInt::from(0) && w[1] == BigInt::from(0) || (&w[1] % &w[0]) == BigInt::from(0));
        }
    }
}

/// Every emitted chain replays, and changing any single entry of either end
/// breaks it.
#[test]
fn perturbed_box_certificates_fail() {
    let c2 = make_group(&GroupSpec::cyclic(2)).unwrap();
    let a = parse_matrix(&c2, "[[g*t^2, t + t^2], [2*t, 0]]").unwrap();
    let (_, chain) = box_construct(&a).unwrap();
    assert!(verify_chain(&chain).valid);
    let bump = GRPoly::from_int(&c2, 1);
    for end in [false, true] {
        let m = if end { &chain.end } else { &chain.start };
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let mut bad = chain.clone();
                let target = if end { &mut bad.end } else { &mut bad.start };
                let v = target.get(i, j).add(&bump);
                target.set(i, j, v);
                let cert = Certificate::from_chain(&bad);
                assert!(!cert.verify().unwrap().valid, "entry ({i},{j}) end={end}");
            }
        }
    }
}
