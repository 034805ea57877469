#![no_main]

use libfuzzer_sys::fuzz_target;
use linepush::{invert_sequence, is_compact, Configuration, PushSequence};

// grid, then a NUL byte, then moves
fuzz_target!(|data: &[u8]| {
    let Some(split) = data.iter().position(|&b| b == 0) else { return };
    let (Ok(grid), Ok(moves)) = (std::str::from_utf8(&data[..split]), std::str::from_utf8(&data[split + 1..])) else {
        return;
    };
    let (Ok(c), Ok(s)) = (grid.parse::<Configuration>(), moves.parse::<PushSequence>()) else { return };
    if c.area() > 4096 || s.len() > 256 {
        return;
    }
    let end = c.apply(&s);
    assert_eq!(end.len(), c.len());
    assert!(end.area() <= c.area());
    if is_compact(&c) {
        let back = invert_sequence(&c, &s).expect("compact pushes invert");
        assert_eq!(end.apply(&back), c);
    }
});
