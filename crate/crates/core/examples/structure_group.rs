//! Words in the structure group, evaluated as pairs `(a, σ_a)`.

use ybe::corpus::s4;
use ybe::structure::{check_defining_relations, eval_word, gen, project_word, Word};

fn main() -> ybe::Result<()> {
    let s = s4();
    for i in 0..s.n() {
        let g = gen(&s, i)?;
        println!("x{} = ({:?}, {})", i + 1, g.vec, g.perm);
    }
    for text in ["x1 x3", "x3 x2", "x1^2 x4^-1", "x2 x2^-1"] {
        let w: Word = text.parse()?;
        let e = eval_word(&s, &w)?;
        println!(
            "{w} -> vec {:?}, perm {}, projection {}",
            e.vec,
            e.perm,
            project_word(&s, &w)?
        );
    }
    println!(
        "defining relations hold: {}",
        check_defining_relations(&s)?.is_ok()
    );
    Ok(())
}
