#![no_main]

use jtm_core::SplitProtocol;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(SplitProtocol::SubjectLists { train, validation, test }) = SplitProtocol::parse(text) {
        assert!(train.is_disjoint(&test));
        assert!(train.is_disjoint(&validation));
        assert!(validation.is_disjoint(&test));
    }
});
