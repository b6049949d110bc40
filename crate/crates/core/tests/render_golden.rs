mod common;

use std::fs;

/// Set `UPDATE_GOLDEN=1` to rewrite the stored outputs.
#[test]
fn renderings_match_golden_files() {
    let dir = common::golden_dir();
    let update = std::env::var("UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    for (name, bytes) in common::render_fixtures() {
        let path = dir.join(name);
        if update {
            fs::write(&path, &bytes).unwrap();
            continue;
        }
        let stored = fs::read(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(stored == bytes, "{name} differs from golden copy");
    }
}

#[test]
fn renderings_are_deterministic() {
    assert_eq!(common::render_fixtures(), common::render_fixtures());
}
