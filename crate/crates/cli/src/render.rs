//! ASCII pictures of class catalogs in two and three variables.

use toral::congruence::{points_of_degree, BoundedClassCatalog, ExponentVector};

/// Class index `i` as a single glyph: `0-9`, then `a-z`, then `A-Z`.
fn glyph(i: usize) -> char {
    const GLYPHS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    GLYPHS.get(i).map_or('#', |&b| b as char)
}

fn label(catalog: &BoundedClassCatalog, u: &ExponentVector, limit: u64) -> char {
    if let Some(i) = catalog.class_of(u) {
        glyph(i)
    } else if catalog.is_monomial(u) {
        'K'
    } else if u.degree() as u64 > limit {
        '?'
    } else {
        '∞'
    }
}

/// Degrees shown and the degree up to which points are classified.
fn window(catalog: &BoundedClassCatalog) -> (u64, u64) {
    use toral::congruence::Certificate;
    match catalog.certificate() {
        Certificate::CompleteAtDegree(d) => (d + 1, u64::MAX),
        Certificate::Incomplete { max_degree, .. } => (max_degree.min(9), max_degree),
    }
}

/// Each lattice point labelled by the index of its bounded class, `∞` for
/// unbounded, `K` for the monomial class and `?` beyond the catalog budget.
/// Two variables give a grid (`s` to the right, `t` up); three give one
/// triangle per total degree. Other dimensions yield a notice.
pub fn render_ascii(catalog: &BoundedClassCatalog) -> String {
    let (show, limit) = window(catalog);
    let mut out = String::new();
    match catalog.dim() {
        2 => {
            let side = show as i64 + 1;
            for t in (0..side).rev() {
                out.push_str(&format!("{t:>3} |"));
                for s in 0..side {
                    out.push(' ');
                    out.push(label(catalog, &ExponentVector::new(vec![s, t]), limit));
                }
                out.push('\n');
            }
            out.push_str("    +");
            out.push_str(&"--".repeat(side as usize));
            out.push('\n');
            out.push_str("      ");
            out.push_str(&(0..side).map(|s| (s % 10).to_string()).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
        3 => {
            for d in 0..=show {
                out.push_str(&format!("degree {d}:\n"));
                // row x = d, d-1, …, 0; within a row y increases
                let pts = points_of_degree(3, d);
                for x in (0..=d as i64).rev() {
                    let row: Vec<String> = pts
                        .iter()
                        .filter(|p| p.coords()[0] == x)
                        .rev()
                        .map(|p| label(catalog, p, limit).to_string())
                        .collect();
                    out.push_str(&" ".repeat(x as usize));
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
            }
        }
        q => out.push_str(&format!("rendering is only available for 2 or 3 variables (got {q})\n")),
    }
    out
}
