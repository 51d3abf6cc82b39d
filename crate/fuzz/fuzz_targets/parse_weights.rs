#![no_main]

use ehf_core::io::parse_weights;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(w) = parse_weights(text, n as usize) {
        assert_eq!(w.len(), n as usize);
    }
});
