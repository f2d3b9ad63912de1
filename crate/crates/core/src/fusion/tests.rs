use super::*;

fn ctx(n: usize, k: usize) -> Context {
    Context::new(n, k).unwrap()
}

fn w(c: Context, parts: &[usize]) -> AlcoveWeight {
    AlcoveWeight::new(c, parts.to_vec()).unwrap()
}

#[test]
fn single_row_examples() {
    let c = ctx(2, 1);
    assert_eq!(n_count(c, &[1], &[1], &w(c, &[2])).unwrap(), BigInt::from(1));
    assert_eq!(n_count(c, &[2], &[2], &w(c, &[2])).unwrap(), BigInt::from(1));
    assert_eq!(n_count(c, &[1], &[1], &w(c, &[1])).unwrap(), BigInt::from(0));
    assert_eq!(n_verlinde(c, &w(c, &[1]), &w(c, &[1]), &w(c, &[2])).unwrap(), BigInt::from(1));
}

#[test]
fn top_weight_is_the_unit() {
    for (n, k) in [(2, 2), (3, 2), (4, 3)] {
        let c = ctx(n, k);
        let top = AlcoveWeight::top(c);
        for l in enumerate_alcove(c) {
            for m in enumerate_alcove(c) {
                let expect = if l == m { 1 } else { 0 };
                assert_eq!(n_count(c, l.parts(), top.parts(), &m).unwrap(), BigInt::from(expect));
                let dual = if l.star() == m { l.quantum_dim() } else { BigInt::zero() };
                assert_eq!(n_verlinde(c, &l, &m, &top).unwrap(), dual);
            }
        }
    }
}

#[test]
fn three_routes_agree() {
    for (n, k) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
        let report = FusionContext::new(ctx(n, k)).route_report();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn direct_verlinde_matches_the_table() {
    let c = ctx(3, 2);
    let fc = FusionContext::new(c);
    for l in fc.alcove() {
        for m in fc.alcove() {
            for v in fc.alcove() {
                assert_eq!(n_verlinde(c, l, m, v).unwrap(), fc.n(l, m, v));
            }
        }
    }
}

#[test]
fn reduction_multiplier_counts_residue_classes() {
    let c = ctx(2, 2);
    assert_eq!(reduction_multiplier(c, &[2, 1]).unwrap(), BigInt::from(1));
    assert_eq!(reduction_multiplier(c, &[3, 1]).unwrap(), BigInt::from(2));
    assert_eq!(reduction_multiplier(c, &[4, 2]).unwrap(), BigInt::from(2));
    assert_eq!(reduction_multiplier(c, &[2, 2]).unwrap(), BigInt::from(1));
    let nu = w(c, &[2, 2]);
    let lam = w(c, &[1, 1]);
    assert_eq!(n_reduce(c, &lam, &[3, 1], &nu).unwrap(), n_count(c, lam.parts(), &[3, 1], &nu).unwrap());
}

#[test]
fn symmetry_and_frobenius_suites_pass() {
    for (n, k) in [(3, 2), (4, 3), (2, 1), (5, 2)] {
        let fc = FusionContext::new(ctx(n, k));
        let s = fc.symmetry_suite();
        assert!(s.passed(), "{s}");
        let f = fc.frobenius_suite();
        assert!(f.passed(), "{f}");
    }
}

#[test]
fn s_matrix_small_case() {
    let fc = FusionContext::new(ctx(2, 1));
    let s = fc.s_matrix();
    let int = |x: &CycloQ| x.to_integer().unwrap();
    let got: Vec<Vec<BigInt>> = s.iter().map(|row| row.iter().map(int).collect()).collect();
    let expect: Vec<Vec<BigInt>> = vec![vec![(-1).into(), 1.into()], vec![1.into(), 1.into()]];
    assert_eq!(got, expect);
}

#[test]
fn modular_relations() {
    for (n, k) in [(2, 1), (3, 1), (4, 1), (5, 1), (3, 2), (4, 2)] {
        let report = FusionContext::new(ctx(n, k)).modular_report();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn table_serialisation_round_trips() {
    let fc = FusionContext::new(ctx(2, 1));
    let table = fc.coeff_table();
    assert_eq!(table.len(), 4);
    let text = table.to_json_string();
    assert_eq!(CoeffTable::from_json(&text).unwrap(), table);
    assert_eq!(table.to_csv().lines().count(), 5);
    assert!(table.to_csv().contains("\"1\",\"1\",\"2\",0,1"));
    let mut bad = CoeffTable::new(ctx(2, 1), "N");
    assert!(bad.insert(vec![1], vec![2], vec![2], BigInt::from(1)).is_err());
}
