#![no_main]

use libfuzzer_sys::fuzz_target;

// Parse, then drive the whole invariant pipeline over GF(2) on small graphs;
// the internal oracle cross-checks turn math bugs into panics.
fuzz_target!(|data: &[u8]| {
    brauer::harness::check_pipeline(data);
});
