//! The coefficient-list parser must never panic, and anything it accepts
//! must survive a format/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use weilforge::textio::{format_int_poly, parse_int_poly};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poly) = parse_int_poly(text) {
        let printed = format_int_poly(&poly);
        let again = parse_int_poly(&printed).expect("formatted polynomial re-parses");
        assert_eq!(poly, again, "round trip changed the polynomial");
    }
});
