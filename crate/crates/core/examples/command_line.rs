//! Drives the command line front end in-process on a bundled spec.
//!
//! ```bash
//! cargo run -p level-zero --example command_line
//! ```

use level_zero::cli::{cmd_decompose, cmd_dual, RunOptions};
use level_zero::GroupSpec;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/specs/sl2.json");
    let spec = GroupSpec::parse(&std::fs::read_to_string(path).unwrap()).unwrap();
    let report = cmd_decompose(&spec, &RunOptions::new(8)).unwrap();
    println!("{}", report.text);
    println!("exit code {}", report.exit_code());
    println!("{}", cmd_dual(&spec).unwrap().text);
}
