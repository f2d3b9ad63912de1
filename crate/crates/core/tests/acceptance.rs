use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use cylsym::affine::CylindricShape;
use cylsym::cyclotomic::field_axiom_report;
use cylsym::cylindric::{
    antipode_check, coalgebra_report, coproduct_cyl_check, duality_check, enumerate_crpp, oracle_report, phi_cyl,
    psi_cyl, psi_cyl_oracle, route_report, shapes, theta_cyl, theta_cyl_oracle, CrppKind, Filling,
};
use cylsym::fusion::FusionContext;
use cylsym::grassmannian::{
    boxed_shapes, cyl_schur, cyl_schur_by_ribbons, gw_ribbon, mcnamara_expand, mcnamara_report, nonskew_orthogonality,
    GwContext,
};
use cylsym::partitions::enumerate_alcove;
use cylsym::symfun::flat::{adjacent_column_tableaux, adjacent_column_weight};
use cylsym::{AlcoveWeight, Basis, Context, Partition, Report, SymFuncQ};

type Outcome = Result<Vec<String>, String>;

fn ctx(n: usize, k: usize) -> Context {
    Context::new(n, k).expect("valid context")
}

fn w(c: Context, parts: &[usize]) -> AlcoveWeight {
    AlcoveWeight::new(c, parts.to_vec()).expect("alcove weight")
}

fn require(report: Report, notes: &mut Vec<String>) -> Result<(), String> {
    let line = report.to_string();
    if report.passed() {
        notes.push(line);
        Ok(())
    } else {
        Err(format!("{line}: {}", report.failures.first().cloned().unwrap_or_default()))
    }
}

fn expect(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn strip_oracles() -> Outcome {
    let mut notes = Vec::new();
    let c = ctx(2, 1);
    expect(theta_cyl(&w(c, &[1]), 1, &w(c, &[1])) == BigInt::from(1), "theta (1)/1/(1) != 1")?;
    let c = ctx(2, 2);
    expect(theta_cyl(&w(c, &[2, 1]), 1, &w(c, &[2, 1])) == BigInt::from(3), "theta (2,1)/1/(2,1) != 3")?;
    for (n, k) in [(2, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3)] {
        let c = ctx(n, k);
        let mut report = Report::new(format!("theta/psi n={n} k={k}"));
        for (l, d, m) in shapes(c, 3) {
            let (t, to) = (theta_cyl(&l, d, &m), theta_cyl_oracle(&l, d, &m));
            report.check(t == to, || format!("theta {l}/{d}/{m}: {t} vs {to}"));
            let (p, po) = (psi_cyl(&l, d, &m), psi_cyl_oracle(&l, d, &m));
            report.check(p == po, || format!("psi {l}/{d}/{m}: {p} vs {po}"));
        }
        require(report, &mut notes)?;
        require(oracle_report(c, 3), &mut notes)?;
    }
    Ok(notes)
}

fn fusion_routes() -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
        let fc = FusionContext::new(ctx(n, k));
        require(fc.route_report(), &mut notes)?;
        require(fc.symmetry_suite(), &mut notes)?;
        require(fc.frobenius_suite(), &mut notes)?;
    }
    Ok(notes)
}

fn worked_examples() -> Outcome {
    let q = |v: i64| num_rational::BigRational::from_integer(BigInt::from(v));
    let m21 = SymFuncQ::basis_element(Basis::M, Partition::from_unsorted(vec![2, 1])).convert(Basis::S);
    let expected = SymFuncQ::from_terms(
        Basis::S,
        [(Partition::from_unsorted(vec![2, 1]), q(1)), (Partition::from_unsorted(vec![1, 1, 1]), q(-2))],
    );
    expect(m21 == expected, format!("M(2,1) = {m21:?}"))?;

    let lam = Partition::from_unsorted(vec![5, 5, 3, 2]);
    let mu = Partition::from_unsorted(vec![3, 2, 1, 1]);
    let chains = adjacent_column_tableaux(&lam, &mu, &[2, 2, 3, 1]);
    let mut weights: Vec<BigInt> = chains.iter().map(|c| adjacent_column_weight(c)).collect();
    weights.sort();
    expect(weights == [2, 2, 4, 4].map(BigInt::from), format!("adjacent column weights {weights:?}"))?;

    let c = ctx(4, 3);
    let mu = w(c, &[2, 2, 1]);
    let first = phi_cyl(&w(c, &[2, 1, 1]), 1, &mu);
    let second = phi_cyl(&w(c, &[4, 2, 1]), 1, &mu);
    expect(first == BigInt::from(2) && second == BigInt::from(1), format!("phi values {first}, {second}"))?;

    let shape = CylindricShape::new(w(c, &[4, 3, 2]), 1, w(c, &[2, 2, 1])).map_err(|e| e.to_string())?;
    let target = CylindricShape::new(w(c, &[4, 3, 3]), 1, w(c, &[3, 2, 1])).map_err(|e| e.to_string())?;
    let fillings = enumerate_crpp(&shape, &Filling::Weight(vec![4, 3, 1]), CrppKind::General);
    expect(!fillings.is_empty(), "no CRPP of weight (4,3,1)")?;
    for pi in &fillings {
        let dual = pi.vee().map_err(|e| e.to_string())?;
        expect(dual.shape() == target && dual.weight() == vec![1, 3, 4], format!("vee of {pi} is {dual}"))?;
    }
    Ok(vec![format!("{} fillings reflected", fillings.len())])
}

fn cylindric_h_routes() -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in [(2, 2), (3, 2)] {
        require(route_report(ctx(n, k), 2), &mut notes)?;
    }
    require(route_report(ctx(4, 3), 1), &mut notes)?;
    Ok(notes)
}

fn hopf_identities() -> Outcome {
    let mut notes = Vec::new();
    let c = ctx(3, 2);
    let mut report = Report::new("antipode and coproduct n=3 k=2");
    for (l, d, m) in shapes(c, 1) {
        report.check(antipode_check(&l, d, &m), || format!("antipode {l}/{d}/{m}"));
        report.absorb(coproduct_cyl_check(&l, d, &m, 5));
    }
    require(report, &mut notes)?;
    require(coalgebra_report(&FusionContext::new(c), 1, 5), &mut notes)?;
    Ok(notes)
}

fn vee_duality() -> Outcome {
    let c = ctx(4, 3);
    let mut report = Report::new("vee duality n=4 k=3");
    for (l, d, m) in shapes(c, 1) {
        report.check(duality_check(&l, d, &m), || format!("{l}/{d}/{m}"));
    }
    let mut notes = Vec::new();
    require(report, &mut notes)?;
    Ok(notes)
}

fn gw_routes() -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in [(4, 2), (5, 2), (6, 3)] {
        let gw = GwContext::new(ctx(n, k)).map_err(|e| e.to_string())?;
        let mut report = Report::new(format!("d <= 2 entries Gr({k},{n})"));
        for e in gw.table().entries().filter(|e| e.d <= 2) {
            report.check(e.value.is_positive(), || format!("{e:?}"));
        }
        require(report, &mut notes)?;
        require(gw.route_report(), &mut notes)?;
        require(gw.symmetry_report().map_err(|e| e.to_string())?, &mut notes)?;
    }
    Ok(notes)
}

fn cylindric_schur_routes() -> Outcome {
    let mut notes = Vec::new();
    let c = ctx(5, 2);
    let mut report = Report::new("quantum Kostka vs ribbon route Gr(2,5)");
    for (l, d, m) in boxed_shapes(c, 2) {
        let kostka = cyl_schur(&l, d, &m);
        let ribbons = cyl_schur_by_ribbons(&l, d, &m).convert(Basis::M);
        report.check(kostka == ribbons, || format!("{l}/{d}/{m}"));
    }
    require(report, &mut notes)?;
    let c = ctx(4, 2);
    let gw = GwContext::new(c).map_err(|e| e.to_string())?;
    require(mcnamara_report(&gw, 2).map_err(|e| e.to_string())?, &mut notes)?;
    let mut report = Report::new("expansion coefficients vs ribbon invariants Gr(2,4)");
    for (l, d, m) in boxed_shapes(c, 2) {
        for ((nu, _), coeff) in mcnamara_expand(&gw, &l, d, &m) {
            let ribbon = gw_ribbon(&m, &nu, &l);
            report.check(coeff == ribbon && !coeff.is_zero(), || format!("{l}/{d}/{m} at {nu}: {coeff} vs {ribbon}"));
        }
    }
    require(report, &mut notes)?;
    Ok(notes)
}

fn orthogonality() -> Outcome {
    let mut notes = Vec::new();
    require(nonskew_orthogonality(ctx(4, 2), 2).map_err(|e| e.to_string())?, &mut notes)?;
    Ok(notes)
}

fn cyclotomic_layer() -> Outcome {
    let mut notes = Vec::new();
    require(field_axiom_report(12, 8, 2024), &mut notes)?;
    for (n, k) in [(2, 2), (3, 2), (4, 2), (3, 3), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1)] {
        let c = ctx(n, k);
        if enumerate_alcove(c).is_empty() {
            return Err(format!("empty alcove n={n} k={k}"));
        }
        require(FusionContext::new(c).modular_report(), &mut notes)?;
    }
    Ok(notes)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("strip statistics match their oracles", strip_oracles),
        ("fusion coefficients agree across routes", fusion_routes),
        ("worked examples", worked_examples),
        ("cylindric h expansions agree across routes", cylindric_h_routes),
        ("Hopf identities", hopf_identities),
        ("vee duality", vee_duality),
        ("Gromov-Witten invariants agree across routes", gw_routes),
        ("cylindric Schur routes and non-skew expansion", cylindric_schur_routes),
        ("non-skew orthogonality", orthogonality),
        ("cyclotomic field and modular data", cyclotomic_layer),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(notes) => {
                println!("PASS criterion {}: {name} ({secs:.2}s)", i + 1);
                for note in notes {
                    println!("    {note}");
                }
            }
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
