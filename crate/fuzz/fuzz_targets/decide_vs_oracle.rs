#![no_main]

use libfuzzer_sys::fuzz_target;
use rnmx::decision::cross_check;
use rnmx::formula::{parse, Signature, SubformulaClosure};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = parse(text, Signature::Ipl) else {
        return;
    };
    // Keep tables small enough for the fuzzer's time budget.
    if SubformulaClosure::of(&f).len() > 12 {
        return;
    }
    let report = cross_check(&f).expect("small formulas fit the table limits");
    assert!(report.agree, "{f}: {report:?}");
});
