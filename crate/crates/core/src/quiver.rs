//! Finite quivers, paths and Dynkin classification.
//!
//! Paths are stored in application order: `arrows[0]` is applied first.
//! Written products follow the usual convention `pq` = "first `q`, then `p`",
//! so the path `y x` (written) is stored as `[x, y]`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("arrow {0} violates the vertex order")]
    OrderViolation(String),
    #[error("vertex order is not a permutation of the vertices")]
    BadOrder,
    #[error("arrows {0} and {1} do not compose")]
    NotComposable(String, String),
    #[error("quiver has an oriented cycle")]
    OrientedCycle,
    #[error("vertex {0} is not a {1}")]
    NotSourceOrSink(String, &'static str),
    #[error("empty path needs an explicit vertex")]
    EmptyPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    /// `order[v]` is the rank of vertex `v`.
    order: Option<Vec<usize>>,
}

/// A path from `source` to `target`; `arrows` in application order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · rhs`: first `rhs`, then `self`. `None` if not composable.
    pub fn compose(&self, rhs: &Path) -> Option<Path> {
        if rhs.target != self.source {
            return None;
        }
        let mut arrows = rhs.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { source: rhs.source, target: self.target, arrows })
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    /// Written right to left, `e_v` for trivial paths.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.arrows.is_empty() {
            return write!(f, "e_{}", self.quiver.vertices[self.path.source]);
        }
        for (i, a) in self.path.arrows.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.quiver.arrows[*a].name)?;
        }
        Ok(())
    }
}

impl Quiver {
    pub fn new<S: ToString>(vertices: impl IntoIterator<Item = S>) -> Result<Quiver, QuiverError> {
        let vertices: Vec<String> = vertices.into_iter().map(|v| v.to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(QuiverError::DuplicateLabel(v.clone()));
            }
        }
        Ok(Quiver { vertices, arrows: Vec::new(), order: None })
    }

    /// Vertices named `0..n`.
    pub fn with_vertex_count(n: usize) -> Quiver {
        Quiver::new((0..n).map(|i| i.to_string())).expect("distinct labels")
    }

    pub fn add_arrow(&mut self, name: &str, source: usize, target: usize) -> Result<usize, QuiverError> {
        if source >= self.vertices.len() {
            return Err(QuiverError::UnknownVertex(source.to_string()));
        }
        if target >= self.vertices.len() {
            return Err(QuiverError::UnknownVertex(target.to_string()));
        }
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(QuiverError::DuplicateLabel(name.to_string()));
        }
        if let Some(order) = &self.order {
            if order[source] >= order[target] {
                return Err(QuiverError::OrderViolation(name.to_string()));
            }
        }
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn add_arrow_by_name(&mut self, name: &str, source: &str, target: &str) -> Result<usize, QuiverError> {
        let s = self.vertex_index(source)?;
        let t = self.vertex_index(target)?;
        self.add_arrow(name, s, t)
    }

    /// Declare a linear order (vertices listed from smallest to largest).
    pub fn set_order(&mut self, sequence: &[usize]) -> Result<(), QuiverError> {
        let n = self.vertices.len();
        let mut rank = vec![usize::MAX; n];
        if sequence.len() != n {
            return Err(QuiverError::BadOrder);
        }
        for (r, &v) in sequence.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(QuiverError::BadOrder);
            }
            rank[v] = r;
        }
        if let Some(a) = self.arrows.iter().find(|a| rank[a.source] >= rank[a.target]) {
            return Err(QuiverError::OrderViolation(a.name.clone()));
        }
        self.order = Some(rank);
        Ok(())
    }

    pub fn order(&self) -> Option<&[usize]> {
        self.order.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| QuiverError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| QuiverError::UnknownArrow(name.to_string()))
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Path from arrow names in application order (first applied first).
    pub fn path_from_application_order(&self, names: &[&str]) -> Result<Path, QuiverError> {
        let ids = names.iter().map(|n| self.arrow_index(n)).collect::<Result<Vec<_>, _>>()?;
        self.path_from_ids(ids)
    }

    /// Path written as a product, e.g. `"y x"` = first `x` then `y`.
    pub fn path_written(&self, word: &str) -> Result<Path, QuiverError> {
        let mut names: Vec<&str> = word.split_whitespace().collect();
        names.reverse();
        self.path_from_application_order(&names)
    }

    pub fn path_from_ids(&self, ids: Vec<usize>) -> Result<Path, QuiverError> {
        let Some(&first) = ids.first() else {
            return Err(QuiverError::EmptyPath);
        };
        for w in ids.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(QuiverError::NotComposable(self.arrows[w[0]].name.clone(), self.arrows[w[1]].name.clone()));
            }
        }
        let last = *ids.last().expect("nonempty");
        Ok(Path { source: self.arrows[first].source, target: self.arrows[last].target, arrows: ids })
    }

    /// Vertices in an order where every arrow goes forward, or `None` with a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            out.push(v);
            for a in self.arrows_from(v) {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        (out.len() == n).then_some(out)
    }

    pub fn has_oriented_cycle(&self) -> bool {
        self.topological_order().is_none()
    }

    /// Underlying undirected graph is connected (the empty quiver is not).
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex sets of the connected components of the underlying graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for a in &self.arrows {
                    let w = if a.source == v {
                        a.target
                    } else if a.target == v {
                        a.source
                    } else {
                        continue;
                    };
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Full subquiver on the given vertices (in the given order).
    pub fn full_subquiver(&self, verts: &[usize]) -> Quiver {
        let mut q = Quiver::new(verts.iter().map(|&v| self.vertices[v].clone())).expect("distinct");
        for a in &self.arrows {
            if let (Some(s), Some(t)) = (verts.iter().position(|&v| v == a.source), verts.iter().position(|&v| v == a.target)) {
                q.add_arrow(&a.name, s, t).expect("valid");
            }
        }
        q
    }

    /// Number of paths (including trivial ones); `None` with an oriented cycle.
    pub fn path_count(&self) -> Option<usize> {
        let order = self.topological_order()?;
        // paths ending at v
        let mut ending = vec![1usize; self.vertices.len()];
        for &v in &order {
            for a in self.arrows_into(v) {
                ending[v] += ending[self.arrows[a].source];
            }
        }
        Some(ending.iter().sum())
    }
}

/// All paths of length `<= cap`, grouped by `(source, target, length)`.
pub fn enumerate_paths(q: &Quiver, cap: usize) -> BTreeMap<(usize, usize, usize), Vec<Path>> {
    let mut out: BTreeMap<(usize, usize, usize), Vec<Path>> = BTreeMap::new();
    let mut frontier: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    for len in 0..=cap {
        for p in &frontier {
            out.entry((p.source, p.target, len)).or_default().push(p.clone());
        }
        if len == cap {
            break;
        }
        let mut next = Vec::new();
        for p in &frontier {
            for a in q.arrows_from(p.target) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                next.push(Path { source: p.source, target: q.arrows[a].target, arrows });
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out
}

/// Maximal length of a path; error with an oriented cycle.
pub fn quiver_length(q: &Quiver) -> Result<usize, QuiverError> {
    let order = q.topological_order().ok_or(QuiverError::OrientedCycle)?;
    let mut longest = vec![0usize; q.vertex_count()];
    for &v in &order {
        for a in q.arrows_into(v) {
            longest[v] = longest[v].max(longest[q.arrows[a].source] + 1);
        }
    }
    Ok(longest.into_iter().max().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectAt {
    Source,
    Sink,
}

/// Reverse every arrow at `v`, which must be a source or sink as requested.
pub fn reflect(q: &Quiver, v: usize, dir: ReflectAt) -> Result<Quiver, QuiverError> {
    if v >= q.vertex_count() {
        return Err(QuiverError::UnknownVertex(v.to_string()));
    }
    let ok = match dir {
        ReflectAt::Source => q.arrows_into(v).next().is_none(),
        ReflectAt::Sink => q.arrows_from(v).next().is_none(),
    };
    if !ok {
        let what = if dir == ReflectAt::Source { "source" } else { "sink" };
        return Err(QuiverError::NotSourceOrSink(q.vertices[v].clone(), what));
    }
    let mut out = Quiver { vertices: q.vertices.clone(), arrows: Vec::new(), order: None };
    for a in &q.arrows {
        let (s, t) = if a.source == v || a.target == v { (a.target, a.source) } else { (a.source, a.target) };
        out.arrows.push(Arrow { name: a.name.clone(), source: s, target: t });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    NonDynkin,
}

impl DynkinType {
    pub fn coxeter_number(self) -> Option<usize> {
        match self {
            DynkinType::A(n) => Some(n + 1),
            DynkinType::D(n) => Some(2 * (n - 1)),
            DynkinType::E6 => Some(12),
            DynkinType::E7 => Some(18),
            DynkinType::E8 => Some(30),
            DynkinType::NonDynkin => None,
        }
    }

    pub fn rank(self) -> Option<usize> {
        match self {
            DynkinType::A(n) | DynkinType::D(n) => Some(n),
            DynkinType::E6 => Some(6),
            DynkinType::E7 => Some(7),
            DynkinType::E8 => Some(8),
            DynkinType::NonDynkin => None,
        }
    }

    pub fn is_dynkin(self) -> bool {
        self != DynkinType::NonDynkin
    }

    /// Parse `A3`, `D4`, `E6`, ... (case-insensitive).
    pub fn parse(s: &str) -> Option<DynkinType> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = tail.parse().ok()?;
        match (head.to_ascii_uppercase().as_str(), n) {
            ("A", n) if n >= 1 => Some(DynkinType::A(n)),
            ("D", n) if n >= 4 => Some(DynkinType::D(n)),
            ("E", 6) => Some(DynkinType::E6),
            ("E", 7) => Some(DynkinType::E7),
            ("E", 8) => Some(DynkinType::E8),
            _ => None,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
            DynkinType::NonDynkin => write!(f, "non-Dynkin"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinReport {
    /// Type of the underlying graph; `NonDynkin` unless connected and Dynkin.
    pub kind: DynkinType,
    pub coxeter: Option<usize>,
    pub connected: bool,
    /// Type of each connected component, in component order.
    pub components: Vec<DynkinType>,
}

impl DynkinReport {
    /// Every component is a Dynkin diagram.
    pub fn is_disjoint_dynkin(&self) -> bool {
        !self.components.is_empty() && self.components.iter().all(|t| t.is_dynkin())
    }
}

fn classify_connected(q: &Quiver, verts: &[usize]) -> DynkinType {
    let n = verts.len();
    let local = |v: usize| verts.iter().position(|&w| w == v);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = 0;
    for a in &q.arrows {
        let (Some(s), Some(t)) = (local(a.source), local(a.target)) else { continue };
        if s == t || adj[s].contains(&t) {
            return DynkinType::NonDynkin;
        }
        adj[s].push(t);
        adj[t].push(s);
        edges += 1;
    }
    if edges + 1 != n {
        return DynkinType::NonDynkin;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => DynkinType::A(n),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    loop {
                        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [] => break len,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => break usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] if *k != usize::MAX => DynkinType::D(k + 3),
                [1, 2, 2] => DynkinType::E6,
                [1, 2, 3] => DynkinType::E7,
                [1, 2, 4] => DynkinType::E8,
                _ => DynkinType::NonDynkin,
            }
        }
        _ => DynkinType::NonDynkin,
    }
}

/// Classify the underlying undirected graph.
pub fn classify_underlying(q: &Quiver) -> DynkinReport {
    let comps = q.components();
    let components: Vec<DynkinType> = comps.iter().map(|c| classify_connected(q, c)).collect();
    let connected = comps.len() == 1;
    let kind = if connected { components[0] } else { DynkinType::NonDynkin };
    DynkinReport { kind, coxeter: kind.coxeter_number(), connected, components }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear(n: usize) -> Quiver {
        let mut q = Quiver::with_vertex_count(n);
        for i in 0..n.saturating_sub(1) {
            q.add_arrow(&alloc::format!("a{i}"), i, i + 1).unwrap();
        }
        q
    }

    #[test]
    fn paths_of_linear_a3() {
        let paths = enumerate_paths(&linear(3), 5);
        assert_eq!(paths.values().map(Vec::len).sum::<usize>(), 6);
        let single = enumerate_paths(&Quiver::with_vertex_count(1), 3);
        assert_eq!(single.values().map(Vec::len).sum::<usize>(), 1);
    }

    #[test]
    fn paths_of_two_cycle() {
        let mut q = Quiver::with_vertex_count(2);
        q.add_arrow("x", 0, 1).unwrap();
        q.add_arrow("y", 1, 0).unwrap();
        let paths = enumerate_paths(&q, 3);
        let mut shown: Vec<String> = paths.values().flatten().map(|p| alloc::format!("{}", p.display(&q))).collect();
        shown.sort();
        assert_eq!(shown, ["e_0", "e_1", "x", "x y", "x y x", "y", "y x", "y x y"]);
    }

    #[test]
    fn lengths() {
        assert_eq!(quiver_length(&linear(4)).unwrap(), 3);
        assert_eq!(quiver_length(&Quiver::with_vertex_count(1)).unwrap(), 0);
        let mut q = linear(3);
        q.add_arrow("z", 0, 2).unwrap();
        assert_eq!(quiver_length(&q).unwrap(), 2);
        q.add_arrow("w", 2, 0).unwrap();
        assert_eq!(quiver_length(&q), Err(QuiverError::OrientedCycle));
    }

    #[test]
    fn written_paths_compose_right_to_left() {
        let mut q = linear(3);
        q.add_arrow("z", 0, 2).unwrap();
        let p = q.path_written("a1 a0").unwrap();
        assert_eq!((p.source, p.target), (0, 2));
        assert_eq!(p.arrows, [0, 1]);
        assert!(q.path_written("a0 a1").is_err());
    }

    #[test]
    fn reflections() {
        let q = linear(3);
        let r = reflect(&q, 2, ReflectAt::Sink).unwrap();
        assert_eq!(r.arrows()[1].source, 2);
        assert_eq!(r.arrows()[1].target, 1);
        assert!(reflect(&q, 1, ReflectAt::Sink).is_err());
        assert_eq!(reflect(&r, 2, ReflectAt::Source).unwrap(), q);
    }

    #[test]
    fn classification() {
        let r = classify_underlying(&linear(4));
        assert_eq!((r.kind, r.coxeter), (DynkinType::A(4), Some(5)));
        let mut star = Quiver::with_vertex_count(4);
        for i in 1..4 {
            star.add_arrow(&alloc::format!("a{i}"), 0, i).unwrap();
        }
        let r = classify_underlying(&star);
        assert_eq!((r.kind, r.coxeter), (DynkinType::D(4), Some(6)));
        let mut kr = Quiver::with_vertex_count(2);
        kr.add_arrow("a", 0, 1).unwrap();
        kr.add_arrow("b", 0, 1).unwrap();
        assert_eq!(classify_underlying(&kr).kind, DynkinType::NonDynkin);
        let mut two = linear(2);
        two.vertices.push("x".into());
        let r = classify_underlying(&two);
        assert!(!r.connected && r.is_disjoint_dynkin());
        assert_eq!(r.components, [DynkinType::A(2), DynkinType::A(1)]);
    }

    #[test]
    fn path_count_matches_enumeration() {
        let mut q = linear(3);
        q.add_arrow("z", 0, 2).unwrap();
        assert_eq!(q.path_count(), Some(7));
    }
}
