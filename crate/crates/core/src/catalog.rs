//! Named algebras: linear and Dynkin quivers, tensor powers, canonical
//! algebras, the three worked examples and the one-parameter family.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{build_algebra, tensor_algebra, Algebra, AlgebraError, Relation};
use crate::field::Field;
use crate::linalg::{solve, Matrix};
use crate::quiver::{DynkinType, Path, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown catalog entry {0}")]
    Unknown(String),
}

impl From<QuiverError> for CatalogError {
    fn from(e: QuiverError) -> Self {
        CatalogError::Algebra(AlgebraError::Quiver(e))
    }
}

type Result<T> = core::result::Result<T, CatalogError>;

fn ordered(mut q: Quiver) -> Quiver {
    if let Some(order) = q.topological_order() {
        q.set_order(&order).expect("topological order is compatible");
    }
    q
}

/// The linear quiver `0 -> 1 -> ... -> m-1` (the algebra `B_m`).
pub fn linear_a<F: Field>(m: usize) -> Result<Algebra<F>> {
    if m == 0 {
        return Err(CatalogError::InvalidParams("linear_a needs m >= 1".into()));
    }
    let mut q = Quiver::with_vertex_count(m);
    for i in 0..m - 1 {
        q.add_arrow(&format!("a{i}"), i, i + 1)?;
    }
    Ok(build_algebra(ordered(q), vec![], None)?)
}

/// Edges of the standard labelling: `A_n` a chain, `D_n` with arms `0` and
/// `1` at vertex `2`, `E_n` a chain `0..n-2` with vertex `n-1` attached at `2`.
pub fn dynkin_edges(t: DynkinType) -> Option<Vec<(usize, usize)>> {
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    Some(match t {
        DynkinType::A(n) => chain(n),
        DynkinType::D(n) => {
            let mut e = vec![(0, 2), (1, 2)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            e
        }
        DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => {
            let n = t.rank().expect("dynkin");
            let mut e = chain(n - 1);
            e.push((2, n - 1));
            e
        }
        DynkinType::NonDynkin => return None,
    })
}

/// Path algebra of a Dynkin quiver. `orientation` has one character per edge
/// of [`dynkin_edges`]: `+` keeps the listed direction, `-` reverses it.
/// An empty string means all `+`.
pub fn dynkin<F: Field>(t: DynkinType, orientation: &str) -> Result<Algebra<F>> {
    let edges = dynkin_edges(t).ok_or_else(|| CatalogError::InvalidParams("not a Dynkin type".into()))?;
    let n = t.rank().expect("dynkin");
    let signs: Vec<char> = if orientation.is_empty() { vec!['+'; edges.len()] } else { orientation.chars().collect() };
    if signs.len() != edges.len() || signs.iter().any(|c| *c != '+' && *c != '-') {
        return Err(CatalogError::InvalidParams(format!("orientation needs {} characters from +/-", edges.len())));
    }
    let mut q = Quiver::with_vertex_count(n);
    for (k, ((a, b), s)) in edges.iter().zip(&signs).enumerate() {
        let (s, t) = if *s == '+' { (*a, *b) } else { (*b, *a) };
        q.add_arrow(&format!("a{k}"), s, t)?;
    }
    Ok(build_algebra(ordered(q), vec![], None)?)
}

/// `B_m^{⊗n}`; vertices are digit strings such as `01`.
pub fn b_power<F: Field>(m: usize, n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Ok(build_algebra(Quiver::with_vertex_count(1), vec![], None)?);
    }
    let b = linear_a::<F>(m)?;
    let mut acc = b.clone();
    for _ in 1..n {
        acc = tensor_algebra(&acc, &b)?;
    }
    Ok(acc)
}

pub fn kronecker<F: Field>() -> Result<Algebra<F>> {
    let mut q = Quiver::with_vertex_count(2);
    q.add_arrow("a", 0, 1)?;
    q.add_arrow("b", 0, 1)?;
    Ok(build_algebra(ordered(q), vec![], None)?)
}

/// A point of the projective line: `None` is infinity.
pub type Point<F> = Option<F>;

/// Default points `∞, 0, 1, 2, ...`.
pub fn default_points<F: Field>(n: usize) -> Vec<Point<F>> {
    (0..n).map(|i| if i == 0 { None } else { Some(F::from_i64(i as i64 - 1)) }).collect()
}

/// Coordinates `(u, v)` of the linear form vanishing at the point:
/// `∞ -> u`, `λ -> v - λu`.
fn form<F: Field>(p: &Point<F>) -> (F, F) {
    match p {
        None => (F::one(), F::zero()),
        Some(l) => (l.neg(), F::one()),
    }
}

fn check_canonical_params<F: Field>(weights: &[usize], points: &[Point<F>]) -> Result<()> {
    if weights.len() < 2 {
        return Err(CatalogError::InvalidParams("at least two weights".into()));
    }
    if weights.iter().any(|&w| w < 2) {
        return Err(CatalogError::InvalidParams("weights must be >= 2".into()));
    }
    if points.len() != weights.len() {
        return Err(CatalogError::InvalidParams("one point per weight".into()));
    }
    for i in 0..points.len() {
        if points[..i].contains(&points[i]) {
            return Err(CatalogError::InvalidParams("points must be distinct".into()));
        }
    }
    Ok(())
}

/// `(α, β)` with `y_i = α y_1 + β y_2`.
fn express<F: Field>(points: &[Point<F>], i: usize) -> (F, F) {
    let (u1, v1) = form(&points[0]);
    let (u2, v2) = form(&points[1]);
    let (ui, vi) = form(&points[i]);
    let m = Matrix::from_rows(vec![vec![u1, u2], vec![v1, v2]]);
    let rhs = Matrix::from_rows(vec![vec![ui], vec![vi]]);
    let x = solve(&m, &rhs).expect("shape").expect("distinct points give independent forms");
    (x.get(0, 0).clone(), x.get(1, 0).clone())
}

/// The canonical algebra: source `s`, sink `c`, arm vertices `i.j`
/// (`1 <= j < r_i`), arms `X_i`, relations `X_i^{r_i} = α y_1 + β y_2`
/// for `i >= 3` with `y_1 = X_1^{r_1}`, `y_2 = X_2^{r_2}`.
pub fn canonical<F: Field>(weights: &[usize], points: Option<Vec<Point<F>>>) -> Result<Algebra<F>> {
    let points = points.unwrap_or_else(|| default_points(weights.len()));
    check_canonical_params(weights, &points)?;
    let mut names = vec!["s".to_string()];
    for (i, &r) in weights.iter().enumerate() {
        for j in 1..r {
            names.push(format!("{}.{}", i + 1, j));
        }
    }
    names.push("c".into());
    let mut q = Quiver::new(names)?;
    let sink = q.vertex_count() - 1;
    let mut arms: Vec<Vec<usize>> = Vec::new();
    for (i, &r) in weights.iter().enumerate() {
        let mut prev = 0;
        let mut arm = Vec::new();
        for j in 1..=r {
            let next = if j == r { sink } else { q.vertex_index(&format!("{}.{}", i + 1, j))? };
            arm.push(q.add_arrow(&format!("X{}_{}", i + 1, j), prev, next)?);
            prev = next;
        }
        arms.push(arm);
    }
    let q = ordered(q);
    let mut rels = Vec::new();
    for i in 2..weights.len() {
        let (al, be) = express(&points, i);
        let path = |k: usize| q.path_from_ids(arms[k].clone());
        let terms = vec![(F::one(), path(i)?), (al.neg(), path(0)?), (be.neg(), path(1)?)];
        rels.push(Relation::new(terms));
    }
    Ok(build_algebra(q, rels, None)?)
}

/// The algebra of the second collection: `0 => 1` (arrows `u`, `v`),
/// `a_i: 1 -> i.1`, chains `i.1 -> ... -> i.(r_i - 1)`, relations `a_i y_i = 0`.
pub fn bar_canonical<F: Field>(weights: &[usize], points: Option<Vec<Point<F>>>) -> Result<Algebra<F>> {
    let points = points.unwrap_or_else(|| default_points(weights.len()));
    check_canonical_params(weights, &points)?;
    let mut names = vec!["0".to_string(), "1".to_string()];
    for (i, &r) in weights.iter().enumerate() {
        for j in 1..r {
            names.push(format!("{}.{}", i + 1, j));
        }
    }
    let mut q = Quiver::new(names)?;
    let u = q.add_arrow("u", 0, 1)?;
    let v = q.add_arrow("v", 0, 1)?;
    let mut a = Vec::new();
    for (i, &r) in weights.iter().enumerate() {
        let first = q.vertex_index(&format!("{}.1", i + 1))?;
        a.push(q.add_arrow(&format!("a{}", i + 1), 1, first)?);
        for j in 1..r - 1 {
            let s = q.vertex_index(&format!("{}.{}", i + 1, j))?;
            let t = q.vertex_index(&format!("{}.{}", i + 1, j + 1))?;
            q.add_arrow(&format!("b{}_{}", i + 1, j), s, t)?;
        }
    }
    let q = ordered(q);
    let mut rels = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let (cu, cv) = form(p);
        let mut terms: Vec<(F, Path)> = Vec::new();
        if !cu.is_zero() {
            terms.push((cu, q.path_from_ids(vec![u, a[i]])?));
        }
        if !cv.is_zero() {
            terms.push((cv, q.path_from_ids(vec![v, a[i]])?));
        }
        rels.push(Relation::new(terms));
    }
    Ok(build_algebra(q, rels, None)?)
}

fn three_vertex(arrows: &[(&str, usize, usize)]) -> Result<Quiver> {
    let mut q = Quiver::with_vertex_count(3);
    for (n, s, t) in arrows {
        q.add_arrow(n, *s, *t)?;
    }
    Ok(q)
}

/// `x: 0 -> 1`, `y: 1 -> 2`, `z: 0 -> 2` with `yx = 0`.
pub fn example_8_1<F: Field>() -> Result<Algebra<F>> {
    intro_family(F::zero())
}

/// The oriented triangle `x: 0 -> 1`, `y: 1 -> 2`, `z: 2 -> 0` with `zy = xz = 0`.
pub fn example_8_2<F: Field>() -> Result<Algebra<F>> {
    let q = three_vertex(&[("x", 0, 1), ("y", 1, 2), ("z", 2, 0)])?;
    let rels = vec![Relation::written(&q, &[(F::one(), "z y")])?, Relation::written(&q, &[(F::one(), "x z")])?];
    Ok(build_algebra(q, rels, Some(4))?)
}

/// `x: 0 -> 1`, `y: 1 -> 0` with `xy = 0`.
pub fn example_8_3<F: Field>() -> Result<Algebra<F>> {
    let mut q = Quiver::with_vertex_count(2);
    q.add_arrow("x", 0, 1)?;
    q.add_arrow("y", 1, 0)?;
    let rels = vec![Relation::written(&q, &[(F::one(), "x y")])?];
    Ok(build_algebra(q, rels, Some(4))?)
}

/// Fibre at `t` of the family with one relation `yx - tz = 0`.
pub fn intro_family<F: Field>(t: F) -> Result<Algebra<F>> {
    let q = ordered(three_vertex(&[("x", 0, 1), ("y", 1, 2), ("z", 0, 2)])?);
    let rel = Relation::written(&q, &[(F::one(), "y x"), (t.neg(), "z")])?.permit_short();
    Ok(build_algebra(q, vec![rel], None)?)
}

/// `1 -> 2 -> ... -> n` (arrows `d1, d2, ...`) with `d^2 = 0`.
pub fn linear_square_zero<F: Field>(n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(CatalogError::InvalidParams("n >= 1".into()));
    }
    let mut q = Quiver::new((1..=n).map(|i| i.to_string()))?;
    for i in 0..n - 1 {
        q.add_arrow(&format!("d{}", i + 1), i, i + 1)?;
    }
    let q = ordered(q);
    let mut rels = Vec::new();
    for i in 0..n.saturating_sub(2) {
        rels.push(Relation::new(vec![(F::one(), q.path_from_ids(vec![i, i + 1])?)]));
    }
    Ok(build_algebra(q, rels, None)?)
}

/// Relation-free path algebra from an arrow list `s>t,s>t,...`; vertices are
/// named by their labels in order of first appearance.
pub fn path_algebra<F: Field>(arrows: &str) -> Result<Algebra<F>> {
    let mut names: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for e in arrows.split(',') {
        let (s, t) = e.split_once('>').ok_or_else(|| CatalogError::InvalidParams(format!("arrow {e} is not s>t")))?;
        let mut idx = |v: &str| {
            let v = v.trim();
            match names.iter().position(|n| n == v) {
                Some(i) => i,
                None => {
                    names.push(v.to_string());
                    names.len() - 1
                }
            }
        };
        let (s, t) = (idx(s), idx(t));
        edges.push((s, t));
    }
    let mut q = Quiver::new(names)?;
    for (k, (s, t)) in edges.into_iter().enumerate() {
        q.add_arrow(&format!("a{k}"), s, t)?;
    }
    if q.has_oriented_cycle() {
        return Err(CatalogError::InvalidParams("path: quiver has a cycle".into()));
    }
    Ok(build_algebra(ordered(q), Vec::new(), None)?)
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| CatalogError::InvalidParams(format!("bad integer {x}")))).collect()
}

/// Parse a scalar `n` or `n/d`.
pub fn parse_scalar<F: Field>(s: &str) -> Result<F> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: i64 = n.trim().parse().map_err(|_| CatalogError::InvalidParams(format!("bad scalar {s}")))?;
    let d: i64 = d.trim().parse().map_err(|_| CatalogError::InvalidParams(format!("bad scalar {s}")))?;
    F::from_ratio(n, d).ok_or_else(|| CatalogError::InvalidParams(format!("zero denominator in {s}")))
}

fn parse_points<F: Field>(s: &str) -> Result<Vec<Point<F>>> {
    s.split(',')
        .map(|p| {
            let p = p.trim();
            if p == "inf" || p == "∞" {
                Ok(None)
            } else {
                parse_scalar(p).map(Some)
            }
        })
        .collect()
}

/// Look up a catalog entry written `name` or `name:params`:
///
/// `linear_a:m`, `dynkin:D4` or `dynkin:E6:+-+--`, `b_power:m,n`, `kronecker`,
/// `canonical:2,2,2` or `canonical:2,2,2;inf,0,1`, `bar_canonical:...`,
/// `example_8_1`, `example_8_2`, `example_8_3`, `intro_family:t`,
/// `linear_square_zero:n`, `path:1>0,2>0` (relation-free, vertices named by
/// the labels). Factors joined by `*` give the tensor product.
pub fn by_name<F: Field>(spec: &str) -> Result<Algebra<F>> {
    if spec.contains('*') {
        let mut parts = spec.split('*');
        let mut acc = by_name(parts.next().unwrap_or(""))?;
        for p in parts {
            acc = tensor_algebra(&acc, &by_name(p)?)?;
        }
        return Ok(acc);
    }
    let spec = spec.trim();
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let need = |what: &str| -> Result<()> {
        if params.is_empty() {
            Err(CatalogError::InvalidParams(format!("{name} needs {what}")))
        } else {
            Ok(())
        }
    };
    match name.trim() {
        "linear_a" | "B" => {
            need("m")?;
            linear_a(parse_usize_list(params)?[0])
        }
        "dynkin" => {
            need("a type such as D4")?;
            let (ty, orient) = params.split_once(':').unwrap_or((params, ""));
            let t = DynkinType::parse(ty).ok_or_else(|| CatalogError::InvalidParams(format!("bad type {ty}")))?;
            dynkin(t, orient)
        }
        "b_power" => {
            need("m,n")?;
            let v = parse_usize_list(params)?;
            if v.len() != 2 {
                return Err(CatalogError::InvalidParams("b_power:m,n".into()));
            }
            b_power(v[0], v[1])
        }
        "kronecker" => kronecker(),
        "canonical" | "bar_canonical" => {
            need("weights")?;
            let (w, p) = match params.split_once(';') {
                Some((w, p)) => (w, Some(parse_points(p)?)),
                None => (params, None),
            };
            let w = parse_usize_list(w)?;
            if name == "canonical" {
                canonical(&w, p)
            } else {
                bar_canonical(&w, p)
            }
        }
        "example_8_1" => example_8_1(),
        "example_8_2" => example_8_2(),
        "example_8_3" => example_8_3(),
        "intro_family" => {
            need("t")?;
            intro_family(parse_scalar(params)?)
        }
        "linear_square_zero" => {
            need("n")?;
            linear_square_zero(parse_usize_list(params)?[0])
        }
        "path" => {
            need("arrows s>t")?;
            path_algebra(params)
        }
        other => Err(CatalogError::Unknown(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::radical_degree;
    use crate::field::Q;
    use crate::quiver::{classify_underlying, quiver_length};

    #[test]
    fn examples_dimensions() {
        let a = example_8_1::<Q>().unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(radical_degree(&a), 1);
        assert_eq!(quiver_length(a.quiver()).unwrap(), 2);
        let b = example_8_2::<Q>().unwrap();
        assert_eq!(b.dim(), 7);
        let c = example_8_3::<Q>().unwrap();
        assert_eq!(c.dim(), 5);
    }

    #[test]
    fn path_and_tensor_specs() {
        let c = by_name::<Q>("path:1>0,2>0 * path:0>1,0>2").unwrap();
        assert_eq!(c.vertex_count(), 9);
        assert_eq!(c.dim(), 25);
        assert!(c.quiver().vertex_index("10").is_ok());
        let e = by_name::<Q>("linear_a:3 * linear_a:2").unwrap();
        assert_eq!(e.dim(), 18);
        assert_eq!(e.quiver().vertex_name(1), "01");
    }

    #[test]
    fn intro_family_fibres() {
        let a1 = intro_family(Q::one()).unwrap();
        assert_eq!(a1.dim(), 6);
        assert_eq!(radical_degree(&a1), 2);
        let a0 = intro_family(Q::zero()).unwrap();
        assert_eq!(a0.piece_dims(), example_8_1::<Q>().unwrap().piece_dims());
    }

    #[test]
    fn linear_radical_degree() {
        for m in 1..6 {
            assert_eq!(radical_degree(&linear_a::<Q>(m).unwrap()), m - 1);
        }
    }

    #[test]
    fn dynkin_shapes() {
        for t in [DynkinType::A(5), DynkinType::D(4), DynkinType::D(6), DynkinType::E6, DynkinType::E7, DynkinType::E8] {
            let a = dynkin::<Q>(t, "").unwrap();
            assert_eq!(classify_underlying(a.quiver()).kind, t);
        }
        let e6 = dynkin::<Q>(DynkinType::E6, "+-+-+").unwrap();
        assert_eq!(classify_underlying(e6.quiver()).kind, DynkinType::E6);
        assert!(dynkin::<Q>(DynkinType::E6, "++").is_err());
    }

    #[test]
    fn b_powers() {
        assert_eq!(b_power::<Q>(2, 3).unwrap().dim(), 27);
        assert_eq!(b_power::<Q>(3, 2).unwrap().dim(), 36);
        let b = b_power::<Q>(2, 2).unwrap();
        assert_eq!(b.quiver().vertices(), ["00", "01", "10", "11"]);
    }

    #[test]
    fn canonical_shapes() {
        let a = canonical::<Q>(&[2, 2, 2], None).unwrap();
        assert_eq!(a.vertex_count(), 5);
        // paths s -> c: 3 arms modulo one relation
        assert_eq!(a.piece_dim(4, 0), 2);
        let b = canonical::<Q>(&[2, 3, 4], None).unwrap();
        assert_eq!(b.vertex_count(), 8);
        assert_eq!(b.piece_dim(7, 0), 2);
        assert!(canonical::<Q>(&[2, 1, 2], None).is_err());
        assert!(canonical::<Q>(&[2, 2, 2], Some(vec![None, None, Some(Q::one())])).is_err());
        let bar = bar_canonical::<Q>(&[2, 2, 2], None).unwrap();
        assert_eq!(bar.vertex_count(), 5);
        assert_eq!((bar.dim(), a.dim()), (13, 13));
    }

    #[test]
    fn square_zero_family() {
        let a = linear_square_zero::<Q>(4).unwrap();
        assert_eq!(a.dim(), 4 + 3);
        assert_eq!(a.quiver().vertices(), ["1", "2", "3", "4"]);
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name::<Q>("b_power:2,2").unwrap().dim(), 9);
        assert_eq!(by_name::<Q>("intro_family:1/2").unwrap().dim(), 6);
        assert_eq!(by_name::<Q>("canonical:2,2,2;inf,0,1").unwrap().vertex_count(), 5);
        assert!(matches!(by_name::<Q>("nope"), Err(CatalogError::Unknown(_))));
    }
}
