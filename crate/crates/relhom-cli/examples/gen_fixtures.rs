//! Regenerate the shipped fixture workspaces from the builtin catalog.

fn main() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    for name in ["kx2", "a2", "a3rad2"] {
        let w = relhom::catalog::builtin_workspace(name).unwrap();
        let text = relhom::workspace::save_workspace(&w).unwrap();
        std::fs::write(format!("{root}/{name}.json"), text).unwrap();
        println!("wrote fixtures/{name}.json");
    }
}
