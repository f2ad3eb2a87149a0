#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // NUL-separated argv; the exit code contract must hold for any input.
    if data.len() > 256 {
        return;
    }
    let args = data
        .split(|&b| b == 0)
        .map(|a| String::from_utf8_lossy(a).into_owned());
    let out = rnmx_cli::run(std::iter::once("rnmx".to_owned()).chain(args));
    assert!((0..=3).contains(&out.code), "exit code {}", out.code);
});
