use cylsym::fusion::{CoeffTable, FusionContext};
use cylsym::grassmannian::GwContext;
use cylsym::Context;

fn load(name: &str) -> CoeffTable {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    CoeffTable::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn fusion_table_matches_golden_file() {
    let golden = load("fusion_n3_k2.json");
    let fc = FusionContext::new(Context::new(3, 2).unwrap());
    assert_eq!(fc.coeff_table(), golden);
    assert_eq!(golden.to_json_string(), std::fs::read_to_string(format!("{}/tests/golden/fusion_n3_k2.json", env!("CARGO_MANIFEST_DIR"))).unwrap());
}

#[test]
fn gw_table_matches_golden_file_by_both_routes() {
    let golden = load("gw_n4_k2.json");
    assert_eq!(golden.value_key(), "C");
    let gw = GwContext::new(Context::new(4, 2).unwrap()).unwrap();
    assert_eq!(gw.table(), &golden);
    assert_eq!(gw.ribbon_table(), &golden);
    assert_eq!(golden.get(&[2, 2], &[2, 2], &[]), 1.into());
    assert_eq!(golden.get(&[2, 1], &[2, 1], &[2]), 1.into());
}
