fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
    let header = std::path::Path::new(&crate_dir).join("include/hecke_fusion.h");

    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        cpp_compat: true,
        include_guard: Some("HECKE_FUSION_H".into()),
        documentation: true,
        ..Default::default()
    };

    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(&header);
        }
        // Keep the build usable even if header generation breaks; the
        // committed header stays in place.
        Err(e) => println!("cargo:warning=header generation skipped: {e}"),
    }

    println!("cargo:rerun-if-changed=src/lib.rs");
}
