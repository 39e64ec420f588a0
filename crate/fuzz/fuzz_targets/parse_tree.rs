#![no_main]

use libfuzzer_sys::fuzz_target;
use matroid_depth::format::{parse_tree, write_tree};
use matroid_depth::Field;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for p in [2, 3] {
        let field = Field::new(p).unwrap();
        if let Ok(t) = parse_tree(text, field) {
            assert_eq!(parse_tree(&write_tree(&t), field).as_ref(), Ok(&t));
        }
    }
});
