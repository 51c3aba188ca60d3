#![no_main]

use libfuzzer_sys::fuzz_target;
use splinedim::cellcomplex::{complex_violations, load_complex_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = load_complex_json(text);
        let _ = complex_violations(text);
    }
});
