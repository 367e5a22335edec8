fn main() {
    let report = gm_core::example::run_example(&gm_core::example::Goldens::bundled(), None).unwrap();
    print!("{report}");
}
