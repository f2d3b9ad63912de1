use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::partitions::partitions_of;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn elem(basis: Basis, parts: &[usize]) -> SymFunc {
    SymFunc::basis_element(basis, p(parts))
}

fn sf(basis: Basis, terms: &[(&[usize], i64)]) -> SymFunc {
    SymFunc::from_terms(basis, terms.iter().map(|(l, c)| (p(l), q(*c))))
}

/// Non-negative integer matrices with prescribed row and column sums.
fn count_matrices(rows: &[usize], cols: &[usize], max_entry: usize) -> usize {
    fn rec(rows: &[usize], cols: &mut Vec<usize>, max_entry: usize) -> usize {
        let Some((&r, rest)) = rows.split_first() else {
            return usize::from(cols.iter().all(|&c| c == 0));
        };
        fn fill(j: usize, left: usize, rest: &[usize], cols: &mut Vec<usize>, max_entry: usize) -> usize {
            if j == cols.len() {
                return if left == 0 { rec(rest, cols, max_entry) } else { 0 };
            }
            let mut total = 0;
            for v in 0..=left.min(cols[j]).min(max_entry) {
                cols[j] -= v;
                total += fill(j + 1, left - v, rest, cols, max_entry);
                cols[j] += v;
            }
            total
        }
        fill(0, r, rest, cols, max_entry)
    }
    rec(rows, &mut cols.to_vec(), max_entry)
}

/// Ordered set partitions (B_1, …, B_l) of the blocks of λ with Σ_{i∈B_j} λ_i = μ_j.
fn count_ordered_set_partitions(lambda: &[usize], mu: &[usize]) -> usize {
    fn rec(lambda: &[usize], bins: &mut Vec<usize>) -> usize {
        let Some((&x, rest)) = lambda.split_first() else {
            return usize::from(bins.iter().all(|&b| b == 0));
        };
        let mut total = 0;
        for j in 0..bins.len() {
            if bins[j] >= x {
                bins[j] -= x;
                total += rec(rest, bins);
                bins[j] += x;
            }
        }
        total
    }
    rec(lambda, &mut mu.to_vec())
}

#[test]
fn h_and_e_in_monomials() {
    assert_eq!(elem(Basis::H, &[1]).convert(Basis::M), elem(Basis::M, &[1]));
    assert_eq!(elem(Basis::H, &[2]).convert(Basis::M), sf(Basis::M, &[(&[2], 1), (&[1, 1], 1)]));
    assert_eq!(elem(Basis::E, &[2]).convert(Basis::M), elem(Basis::M, &[1, 1]));
}

#[test]
fn transition_rows_match_matrix_counts() {
    for d in 0..=6 {
        for lam in partitions_of(d) {
            let h = SymFunc::<BigRational>::basis_element(Basis::H, lam.clone()).convert(Basis::M);
            let e = SymFunc::<BigRational>::basis_element(Basis::E, lam.clone()).convert(Basis::M);
            let pp = SymFunc::<BigRational>::basis_element(Basis::P, lam.clone()).convert(Basis::M);
            for mu in partitions_of(d) {
                let l = count_matrices(lam.parts(), mu.parts(), usize::MAX);
                let m = count_matrices(lam.parts(), mu.parts(), 1);
                let r = count_ordered_set_partitions(lam.parts(), mu.parts());
                assert_eq!(h.coeff(&mu), q(l as i64), "L {lam} {mu}");
                assert_eq!(e.coeff(&mu), q(m as i64), "M {lam} {mu}");
                assert_eq!(pp.coeff(&mu), q(r as i64), "R {lam} {mu}");
            }
        }
    }
}

#[test]
fn conversions_round_trip() {
    for d in 0..=6 {
        for lam in partitions_of(d) {
            for a in Basis::ALL {
                let f = SymFunc::<BigRational>::basis_element(a, lam.clone());
                for b in Basis::ALL {
                    assert_eq!(f.convert(b).convert(a), f, "{a} -> {b} on {lam}");
                }
            }
        }
    }
}

#[test]
fn products() {
    let one = SymFunc::one(Basis::M);
    let f = sf(Basis::M, &[(&[2, 1], 3), (&[1], -2)]);
    assert_eq!(one.multiply(&f), f);
    let m1 = elem(Basis::M, &[1]);
    let expected = sf(Basis::M, &[(&[2], 1), (&[1, 1], 2)]);
    assert_eq!(m1.multiply(&m1), expected);
    assert_eq!(m1.multiply(&elem(Basis::H, &[1])), expected);
}

#[test]
fn schur_products_agree_with_power_sums() {
    for d1 in 0..=3 {
        for d2 in 0..=3 {
            for a in partitions_of(d1) {
                for b in partitions_of(d2) {
                    let lr = elem(Basis::S, a.parts()).multiply(&elem(Basis::S, b.parts()));
                    let via_p = elem(Basis::P, &[])
                        .multiply(&elem(Basis::S, a.parts()).convert(Basis::P))
                        .multiply(&elem(Basis::S, b.parts()).convert(Basis::P))
                        .convert(Basis::S);
                    assert_eq!(lr, via_p, "{a} * {b}");
                }
            }
        }
    }
}

#[test]
fn hall_pairing() {
    assert_eq!(elem(Basis::P, &[2]).hall_inner(&elem(Basis::P, &[2])), q(2));
    for d in 0..=6 {
        let parts = partitions_of(d);
        for a in &parts {
            for b in &parts {
                let delta = q(i64::from(a == b));
                let m = elem(Basis::M, a.parts());
                let h = elem(Basis::H, b.parts());
                assert_eq!(m.convert(Basis::P).hall_inner(&h.convert(Basis::E)), delta);
                let sa = elem(Basis::S, a.parts()).convert(Basis::M);
                let sb = elem(Basis::S, b.parts()).convert(Basis::H);
                assert_eq!(sa.hall_inner(&sb), delta);
                let pa = elem(Basis::P, a.parts());
                let pb = elem(Basis::P, b.parts());
                let z = if a == b { BigRational::from_integer(a.z_factor()) } else { q(0) };
                assert_eq!(pa.hall_inner(&pb), z);
            }
        }
    }
}

#[test]
fn coproduct_and_antipode() {
    let d1 = SymFunc::<BigRational>::one(Basis::M).coproduct();
    assert_eq!(d1, TensorSymFunc::tensor(&SymFunc::one(Basis::M), &SymFunc::one(Basis::M)));
    let dh2 = elem(Basis::H, &[2]).coproduct();
    let mut expected = TensorSymFunc::zero(Basis::H, Basis::H);
    expected.add_term(p(&[2]), p(&[]), q(1));
    expected.add_term(p(&[1]), p(&[1]), q(1));
    expected.add_term(p(&[]), p(&[2]), q(1));
    assert_eq!(dh2, expected);
    assert_eq!(elem(Basis::H, &[2, 1]).antipode().convert(Basis::E), elem(Basis::E, &[2, 1]).neg());
}

#[test]
fn hopf_axioms() {
    for d in 0..=5 {
        for lam in partitions_of(d) {
            for basis in [Basis::M, Basis::H, Basis::S] {
                let f = SymFunc::<BigRational>::basis_element(basis, lam.clone());
                let df = f.coproduct();
                let left = df.coproduct_left();
                let right = df.coproduct_right();
                assert_eq!(left, right, "coassociativity on {basis}{lam}");
                for a in (0..=d).flat_map(partitions_of) {
                    for b in partitions_of(d - a.size()) {
                        let g = SymFunc::basis_element(Basis::S, a.clone());
                        let h = SymFunc::basis_element(Basis::M, b.clone());
                        assert_eq!(df.pair(&g, &h), f.hall_inner(&g.multiply(&h)), "{lam} {a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn involutions() {
    for d in 0..=6 {
        for lam in partitions_of(d) {
            for basis in Basis::ALL {
                let f = SymFunc::<BigRational>::basis_element(basis, lam.clone());
                assert_eq!(f.omega().omega(), f);
                assert_eq!(f.antipode().antipode(), f);
                assert_eq!(f.omega().hall_inner(&f.omega()), f.hall_inner(&f));
            }
            let h = SymFunc::<BigRational>::basis_element(Basis::H, lam.clone());
            let sign = if d % 2 == 0 { q(1) } else { q(-1) };
            assert_eq!(h.antipode(), SymFunc::basis_element(Basis::E, lam.clone()).convert(Basis::H).scale(&sign));
        }
    }
}

#[test]
fn theta_and_psi() {
    assert_eq!(theta_flat(&p(&[3, 1]), &p(&[3, 1])), BigInt::from(1));
    assert_eq!(theta_flat(&p(&[2, 1]), &p(&[1])), BigInt::from(2));
    assert_eq!(theta_flat(&p(&[2]), &p(&[1, 1])), BigInt::from(0));
    for d in 0..=7 {
        for lam in partitions_of(d) {
            for e in 0..=d {
                for mu in partitions_of(e) {
                    assert_eq!(theta_flat(&lam, &mu), theta_flat_oracle(&lam, &mu), "{lam}/{mu}");
                    assert_eq!(psi_flat(&lam, &mu), psi_flat_oracle(&lam, &mu), "{lam}/{mu}");
                }
            }
        }
    }
}

#[test]
fn skew_functions() {
    for d in 0..=6 {
        for lam in partitions_of(d) {
            let full: SymFunc = skew_h(&lam, &Partition::empty());
            assert_eq!(full, SymFunc::basis_element(Basis::H, lam.clone()).convert(Basis::M));
            for e in 0..=d {
                for mu in partitions_of(e) {
                    let h: SymFunc = skew_h(&lam, &mu);
                    assert_eq!(h, skew_h_by_f::<BigRational>(&lam, &mu).convert(Basis::M), "{lam}/{mu}");
                    let e_skew: SymFunc = skew_e(&lam, &mu);
                    assert_eq!(e_skew, skew_e_by_f::<BigRational>(&lam, &mu).convert(Basis::M), "{lam}/{mu}");
                    let sign = if (d - e) % 2 == 0 { q(1) } else { q(-1) };
                    assert_eq!(e_skew, h.antipode().scale(&sign), "{lam}/{mu}");
                }
            }
        }
    }
}

#[test]
fn adjacent_column_tableaux_example() {
    let lam = p(&[5, 5, 3, 2]);
    let mu = p(&[3, 2, 1, 1]);
    let chains = adjacent_column_tableaux(&lam, &mu, &[2, 2, 3, 1]);
    let mut weights: Vec<BigInt> = chains.iter().map(|c| adjacent_column_weight(c)).collect();
    weights.sort();
    assert_eq!(weights, [2, 2, 4, 4].map(BigInt::from));
    assert_eq!(flat::phi_weight_flat(&lam, &lam, &[]), BigInt::from(1));
}

#[test]
fn phi_weights_match_transition_route() {
    for d in 0..=5 {
        for lam in partitions_of(d) {
            for e in 0..=d {
                for mu in partitions_of(e) {
                    let f = f_coefficients(&lam, &mu);
                    for nu in partitions_of(d - e) {
                        let pn = SymFunc::<BigRational>::basis_element(Basis::P, nu.clone()).convert(Basis::M);
                        let mut expected = q(0);
                        for (sigma, c) in &f {
                            expected += pn.coeff(sigma) * BigRational::from_integer(c.clone());
                        }
                        let got = flat::phi_weight_flat(&lam, &mu, nu.parts());
                        assert_eq!(BigRational::from_integer(got), expected, "{lam}/{mu} at {nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn characters() {
    for d in 1..=6 {
        let row = Partition::row(d);
        let col = row.conjugate();
        for nu in partitions_of(d) {
            assert_eq!(mn_character(&row, &nu), BigInt::from(1));
            assert_eq!(mn_character(&col, &nu), BigInt::from(nu.sign()));
        }
        for lam in partitions_of(d) {
            let ones = Partition::new(vec![1; d]).unwrap();
            assert_eq!(mn_character(&lam, &ones), lam.standard_tableaux_count());
        }
    }
    assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), BigInt::from(2));
}

#[test]
fn schur_functions_match_jacobi_trudi() {
    for d in 0..=6 {
        for lam in partitions_of(d) {
            let l = lam.len();
            let mut jt = SymFunc::<BigRational>::zero(Basis::H);
            for perm in crate::cyclotomic::signed_permutations(l) {
                let (sigma, sign) = perm;
                let mut parts = Vec::new();
                let mut ok = true;
                for i in 0..l {
                    let v = lam.part(i) as i64 - i as i64 + sigma[i] as i64;
                    if v < 0 {
                        ok = false;
                        break;
                    }
                    parts.push(v as usize);
                }
                if ok {
                    jt.add_term(Partition::from_unsorted(parts), q(sign));
                }
            }
            assert_eq!(SymFunc::basis_element(Basis::S, lam.clone()).convert(Basis::H), jt, "{lam}");
        }
    }
}

#[test]
fn straightening() {
    assert_eq!(schur_straighten(&[3, 4]), None);
    assert_eq!(schur_straighten(&[2, 1, 2]), None);
    assert_eq!(schur_straighten(&[1, 2]), None);
    assert_eq!(schur_straighten(&[0, 2]), Some((-1, p(&[1, 1]))));
    assert_eq!(schur_straighten(&[2, 1, 0]), Some((1, p(&[2, 1]))));
}

#[test]
fn monomials_in_schur() {
    assert_eq!(monomial_in_schur::<BigRational>(&p(&[1])), elem(Basis::S, &[1]));
    assert_eq!(monomial_in_schur::<BigRational>(&p(&[2, 1])), sf(Basis::S, &[(&[2, 1], 1), (&[1, 1, 1], -2)]));
    for d in 0..=6 {
        for lam in partitions_of(d) {
            let raising: SymFunc = monomial_in_schur(&lam);
            assert_eq!(raising, monomial_by_inverse_kostka(&lam), "{lam}");
            assert_eq!(raising, elem(Basis::M, lam.parts()).convert(Basis::S), "{lam}");
        }
    }
}

#[test]
fn json_round_trip() {
    let f = SymFunc::from_terms(
        Basis::M,
        [(p(&[2, 1]), BigRational::new(BigInt::from(3), BigInt::from(4))), (p(&[]), q(-1))],
    );
    let v = f.to_json();
    assert_eq!(
        v.to_string(),
        r#"{"basis":"m","terms":[{"den":1,"num":-1,"partition":[]},{"den":4,"num":3,"partition":[2,1]}]}"#
    );
    assert_eq!(SymFunc::from_json(&v).unwrap(), f);
}

#[test]
fn restriction_to_finitely_many_variables() {
    let e3 = elem(Basis::E, &[3]);
    assert!(e3.restrict_vars(2).is_zero());
    assert_eq!(elem(Basis::H, &[2]).restrict_vars(1), elem(Basis::M, &[2]));
}

#[test]
fn float_scalars() {
    let f = SymFunc::<f64>::basis_element(Basis::H, p(&[2, 1]));
    let back = f.convert(Basis::P).convert(Basis::H);
    assert!((back.coeff(&p(&[2, 1])) - 1.0).abs() < 1e-12);
}
