//! Cache lines come from disk and are therefore untrusted. The parser must
//! never panic, accepted lines must re-serialize to themselves, and the
//! parsed pair must carry the structural facts the cache relies on.

#![no_main]

use libfuzzer_sys::fuzz_target;
use weilforge::textio::{format_base_cache_line, parse_base_cache_line};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((n, g2, g3)) = parse_base_cache_line(text) {
        assert_eq!(g2.modulus(), 2);
        assert_eq!(g3.modulus(), 3);
        assert_eq!(g2.degree(), Some(n));
        assert_eq!(g3.degree(), Some(n));
        let printed = format_base_cache_line(n, &g2, &g3);
        let (n2, h2, h3) = parse_base_cache_line(&printed).expect("formatted line re-parses");
        assert_eq!((n, g2, g3), (n2, h2, h3), "round trip changed the line");
    }
});
