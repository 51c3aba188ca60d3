#![no_main]

use libfuzzer_sys::fuzz_target;
use splinedim::invsys::load_points_json;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = load_points_json(text);
    }
});
