//! Parse a `.fol` document from text, run an analysis command and emit both
//! the human-readable and the JSON report.
//!
//! ```sh
//! cargo run -p folia --example parse_and_report
//! ```

use folia::dsl;
use folia::report::{render_text, run_analysis, Command, Options};

const SOURCE: &str = "\
# a pencil of lines through two points of the plane
ring projective x0 x1 x2;
form w = x0*dx1 - x1*dx0;
point axis = (0, 0, 1);
";

fn main() {
    let doc = dsl::parse(SOURCE).unwrap();
    println!("canonical echo:\n{}", doc);

    let (report, exit_code) = run_analysis(&doc, Command::Compare, &Options::default());
    println!("text report:\n{}", render_text(&report));
    println!("exit code: {}", exit_code);
    println!("json report:");
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
