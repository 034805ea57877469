#![no_main]

use libfuzzer_sys::fuzz_target;
use linepush::puzzle::PuzzleInstance;

fuzz_target!(|data: &[u8]| {
    // keep the solvability check in validate() cheap
    if data.len() > 512 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = PuzzleInstance::parse("fuzz", text) {
        let back = PuzzleInstance::parse("fuzz", &p.to_text()).expect("written puzzle parses");
        assert_eq!(back.kind, p.kind);
        assert!(back.start.label_equal(&p.start) && back.goal.label_equal(&p.goal));
    }
});
