#![no_main]

use libfuzzer_sys::fuzz_target;
use linepush::Configuration;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(c) = Configuration::parse_grid(text) else { return };
    // formatting is a fixpoint after one parse
    let shown = c.format_grid();
    let again = Configuration::parse_grid(&shown).expect("formatted grid parses");
    assert!(again.label_equal(&c));
    assert_eq!(again.format_grid(), shown);
});
