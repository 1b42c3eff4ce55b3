//! Reading and writing solution documents, and validating raw tables.

use ybe::json::{parse_doc, read_solution, write_solution};
use ybe::solution::validate_table;

fn main() -> ybe::Result<()> {
    let sigma_form = r#"{"n":3,"sigma":[[1,2,3],[1,2,3],[2,1,3]]}"#;
    let s = read_solution(sigma_form)?;
    println!(
        "read {} points, written back: {}",
        s.n(),
        write_solution(&s)
    );

    let r_form = r#"{"n":2,"r":[[[1,1],[2,1]],[[1,2],[2,2]]]}"#;
    println!("r form is trivial: {}", read_solution(r_form)?.is_trivial());

    let broken = r#"{"n":3,"sigma":[[1,3,2],[3,2,1],[1,2,3]]}"#;
    let report = validate_table(&parse_doc(broken)?.to_table()?);
    println!("broken: {}", serde_json::to_string(&report).unwrap());
    println!("error: {}", read_solution(broken).unwrap_err());
    Ok(())
}
