#![no_main]

use libfuzzer_sys::fuzz_target;
use matroid_depth::format::parse_tree;
use matroid_depth::{Field, MatrixTree};

// A decodable tree must decode to a matrix whose own encoding decodes back to it.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(t) = parse_tree(text, Field::gf2()) else {
        return;
    };
    let Ok(a) = t.decode() else {
        return;
    };
    if a.rows() <= 10 {
        let again = MatrixTree::encode(&a).unwrap();
        assert_eq!(again.decode().unwrap(), a);
    }
    for &v in t.nodes().keys() {
        let _ = t.drop_column_leaves(v).unwrap().decode().unwrap();
        let _ = t.prune(&[v]).unwrap().decode().unwrap();
    }
});
