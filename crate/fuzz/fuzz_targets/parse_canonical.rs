#![no_main]

use jtm_core::{parse_canonical, serialize_canonical};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(seq) = parse_canonical(data) else { return };
    assert!(seq.frame_count() >= 2);
    for f in seq.frames() {
        assert_eq!(f.joints.len(), seq.joint_count());
    }
    // anything accepted must survive a round trip unchanged
    let text = serialize_canonical(&seq);
    let back = parse_canonical(text.as_bytes()).expect("serialized output must parse");
    assert_eq!(serialize_canonical(&back), text);
});
