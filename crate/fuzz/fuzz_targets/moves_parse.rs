#![no_main]

use libfuzzer_sys::fuzz_target;
use linepush::PushSequence;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = text.parse::<PushSequence>() {
        let shown = s.to_string();
        assert_eq!(shown.parse::<PushSequence>().unwrap(), s);
        assert_eq!(shown.len(), s.len());
    }
});
