#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| hurwitz_fuzz::checks::ext_elt(data));
