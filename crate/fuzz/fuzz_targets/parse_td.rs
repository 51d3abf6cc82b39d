#![no_main]

use ehf_core::io::{parse_td, write_td};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((td, n)) = parse_td(text) {
        let (back, n2) = parse_td(&write_td(&td, n)).expect("written td re-parses");
        assert_eq!(n, n2);
        assert_eq!(back.bags(), td.bags());
    }
});
