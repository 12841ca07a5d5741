//! Regenerate the JSON state fixtures under data/states from the built-in
//! catalog of example states. Run from the workspace root:
//! cargo run -p spinor-invariants --example regenerate_fixtures

use spinor_invariants::state::examples::all_catalog_states;

fn main() {
    let dir = std::path::Path::new("data/states");
    std::fs::create_dir_all(dir).unwrap();
    for (name, entry) in all_catalog_states() {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, entry.state.to_json()).unwrap();
        println!("wrote {}", path.display());
    }
}
