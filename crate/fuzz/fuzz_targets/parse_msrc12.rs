#![no_main]

use jtm_core::{default_layout_20, parse_canonical, parse_msrc12_stream, serialize_canonical, SkeletonLayout};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let short = SkeletonLayout::from_names(["left_hand", "right_hand", "head"]).unwrap();
    for layout in [default_layout_20(), short] {
        let Ok(seq) = parse_msrc12_stream(data, &layout) else { continue };
        assert_eq!(seq.joint_count(), layout.len());
        assert!(seq.frames().iter().all(|f| f.joints.iter().all(|p| p.is_finite())));
        let text = serialize_canonical(&seq);
        assert_eq!(serialize_canonical(&parse_canonical(text.as_bytes()).unwrap()), text);
    }
});
