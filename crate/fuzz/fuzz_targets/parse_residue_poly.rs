//! The "coefficients mod m" parser must never panic (in particular it must
//! pre-validate the modulus rather than let construction assert), and
//! accepted inputs must round trip exactly.

#![no_main]

use libfuzzer_sys::fuzz_target;
use weilforge::textio::{format_residue_poly, parse_residue_poly};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poly) = parse_residue_poly(text) {
        let printed = format_residue_poly(&poly);
        let again = parse_residue_poly(&printed).expect("formatted polynomial re-parses");
        assert_eq!(poly, again, "round trip changed the polynomial");
    }
});
