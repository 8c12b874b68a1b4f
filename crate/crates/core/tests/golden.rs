//! The regenerated tables must match the checked-in golden copies. After an
//! intended change, rewrite them with `dpcascade catalog --regenerate
//! crates/core/golden --write`.

use std::path::Path;

use dpcascade::tables::regenerate_tables;

#[test]
fn tables_match_golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    let report = regenerate_tables(&dir, false).unwrap();
    assert_eq!(report.len(), 7);
    for s in &report {
        assert_eq!(s.status, "same", "{} differs from its golden copy", s.file);
    }
}

#[test]
fn only_known_discrepancies() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    for s in regenerate_tables(&dir, false).unwrap() {
        let allowed = match s.file.as_str() {
            // printed l=k+2 index 2(k+1) against the computed 2(k+2)
            "index_of_connectedness.txt" => s.discrepancies.len() == 8,
            // the printed odd l=k+2 numerator, m = 1..6
            "hilbert_models.txt" => {
                s.discrepancies.len() == 6 && s.discrepancies.iter().all(|d| d.contains("printed series"))
            }
            _ => s.discrepancies.is_empty(),
        };
        assert!(allowed, "{}: {:?}", s.file, s.discrepancies);
    }
}
