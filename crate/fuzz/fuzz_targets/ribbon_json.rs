#![no_main]

use libfuzzer_sys::fuzz_target;

// The JSON mirror of the .bg format.
fuzz_target!(|data: &[u8]| {
    brauer::harness::check_ribbon_json(data);
});
