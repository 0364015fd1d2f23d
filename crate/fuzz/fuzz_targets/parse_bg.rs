#![no_main]

use libfuzzer_sys::fuzz_target;

// The .bg text parser: anything that parses must survive the text and JSON
// round trips and satisfy the face identities.
fuzz_target!(|data: &[u8]| {
    brauer::harness::check_parse_bg(data);
});
