//! Seeded outputs frozen to files. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use hansen_core::io::GraphJson;
use hansen_core::*;

fn check_golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn random_split_2_2_half_seed_42() {
    let (g, cert) = random_split(2, 2, 0.5, 42).unwrap();
    let json = serde_json::to_string_pretty(&GraphJson::from_parts(&g, Some(&cert), None)).unwrap();
    check_golden("random_split_2_2_0.5_42.json", &(json + "\n"));
}

#[test]
fn verify_random_split_3_3_half_seed_7() {
    let (g, cert) = random_split(3, 3, 0.5, 7).unwrap();
    let report = verify_main_theorem(&g, &cert, DEFAULT_FACE_BUDGET).unwrap();
    assert!(report.identities.all());
    let json = serde_json::json!({
        "graph": GraphJson::from_parts(&g, Some(&cert), None),
        "report": report,
    });
    check_golden(
        "verify_3_3_0.5_7.json",
        &(serde_json::to_string_pretty(&json).unwrap() + "\n"),
    );
}
