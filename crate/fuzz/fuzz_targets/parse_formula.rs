#![no_main]

use libfuzzer_sys::fuzz_target;
use rnmx::formula::{parse, Signature, Style};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for sig in [Signature::Ipl, Signature::S4] {
        // Never panics; anything accepted must survive a print/parse round trip.
        if let Ok(f) = parse(text, sig) {
            for style in [Style::Ascii, Style::Unicode] {
                let printed = f.print(style);
                assert_eq!(parse(&printed, sig).as_ref(), Ok(&f), "{printed}");
            }
        }
    }
});
