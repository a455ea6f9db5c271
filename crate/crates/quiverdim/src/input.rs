//! Quiver presentation files and algebra selection.
//!
//! ```toml
//! [quiver]
//! vertices = ["0", "1", "2"]
//! arrows = [
//!   { name = "x", from = "0", to = "1" },
//!   { name = "y", from = "1", to = "2" },
//! ]
//!
//! [relations]
//! words = "application"   # "x y" means x first, then y; "composition" reverses
//! list = [
//!   [[1, "x y"]],
//! ]
//!
//! [order]                 # optional
//! vertices = ["0", "1", "2"]
//!
//! [cap]                   # required when the quiver has oriented cycles
//! length = 4
//! ```
//!
//! Coefficients are integers or strings `"n/d"`.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use quiverdim_core::algebra::{build_algebra, Algebra, Relation};
use quiverdim_core::catalog::{self, parse_scalar};
use quiverdim_core::field::Field;
use quiverdim_core::quiver::Quiver;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    quiver: QuiverSection,
    relations: Option<RelationsSection>,
    order: Option<OrderSection>,
    cap: Option<CapSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverSection {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowEntry {
    name: String,
    from: String,
    to: String,
}

#[derive(Debug, Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum WordOrder {
    Application,
    Composition,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationsSection {
    words: WordOrder,
    #[serde(default)]
    list: Vec<Vec<(Coeff, String)>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderSection {
    vertices: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CapSection {
    length: usize,
}

/// Parse a presentation file's contents.
pub fn parse_algebra<F: Field>(text: &str) -> Result<Algebra<F>> {
    let f: QuiverFile = toml::from_str(text)?;
    let mut q = Quiver::new(f.quiver.vertices.iter())?;
    for a in &f.quiver.arrows {
        q.add_arrow_by_name(&a.name, &a.from, &a.to)?;
    }
    if let Some(o) = &f.order {
        let seq = o.vertices.iter().map(|v| q.vertex_index(v)).collect::<Result<Vec<_>, _>>()?;
        q.set_order(&seq)?;
    }
    let mut rels = Vec::new();
    if let Some(r) = &f.relations {
        for (k, terms) in r.list.iter().enumerate() {
            let mut parsed = Vec::with_capacity(terms.len());
            let mut short = false;
            for (c, word) in terms {
                let c: F = match c {
                    Coeff::Int(n) => F::from_i64(*n),
                    Coeff::Text(s) => parse_scalar(s)?,
                };
                let mut names: Vec<&str> = word.split_whitespace().collect();
                if r.words == WordOrder::Composition {
                    names.reverse();
                }
                let p = q.path_from_application_order(&names).with_context(|| format!("relation {}", k + 1))?;
                short |= p.len() < 2;
                parsed.push((c, p));
            }
            let rel = Relation::new(parsed);
            rels.push(if short { rel.permit_short() } else { rel });
        }
    }
    Ok(build_algebra(q, rels, f.cap.map(|c| c.length))?)
}

pub fn load_file<F: Field>(path: &Path) -> Result<Algebra<F>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_algebra(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Exactly one of a catalog name or a file.
pub fn select<F: Field>(catalog: Option<&str>, file: Option<&Path>) -> Result<(String, Algebra<F>)> {
    match (catalog, file) {
        (Some(c), None) => Ok((c.to_string(), catalog::by_name(c)?)),
        (None, Some(p)) => Ok((p.display().to_string(), load_file(p)?)),
        (Some(_), Some(_)) => bail!("give either --catalog or --file, not both"),
        (None, None) => Err(anyhow!("an algebra is required: --catalog NAME or --file PATH")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiverdim_core::field::Q;

    const A3_ZERO: &str = r#"
[quiver]
vertices = ["0", "1", "2"]
arrows = [
  { name = "x", from = "0", to = "1" },
  { name = "y", from = "1", to = "2" },
  { name = "z", from = "0", to = "2" },
]

[relations]
words = "composition"
list = [[[1, "y x"]]]
"#;

    #[test]
    fn matches_catalog() {
        let a = parse_algebra::<Q>(A3_ZERO).unwrap();
        let b = catalog::example_8_1::<Q>().unwrap();
        assert_eq!(a.dim(), b.dim());
        assert_eq!(a.piece_dims(), b.piece_dims());
    }

    #[test]
    fn inhomogeneous_relation() {
        let text = A3_ZERO.replace(r#"[[[1, "y x"]]]"#, r#"[[[1, "y x"], ["-1/2", "z"]]]"#);
        let a = parse_algebra::<Q>(&text).unwrap();
        assert_eq!(a.dim(), 6);
        let arrow = |n: &str| a.arrow_elem(a.quiver().arrow_index(n).unwrap()).clone();
        let (x, y, z) = (arrow("x"), arrow("y"), arrow("z"));
        let yx = [a.mul(&y, &x), a.mul(&x, &y)].into_iter().find(|p| !p.is_zero()).unwrap();
        assert_eq!(yx, z.scale(&Q::new(1, 2)));
    }

    #[test]
    fn errors_name_the_problem() {
        let bad = A3_ZERO.replace("\"y x\"", "\"x y\"");
        let e = parse_algebra::<Q>(&bad).unwrap_err();
        assert!(format!("{e:#}").contains("do not compose"), "{e:#}");
        assert!(parse_algebra::<Q>("[quiver]\nvertices = [\"a\"]\nbogus = 1\n").is_err());
    }
}
