//! Certified lower and upper bounds for Rouquier and diagonal dimension.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{radical_degree, Algebra};
use crate::collection::{end_algebra, kronecker_certificate, DObject, ExcCollection};
use crate::field::Field;
use crate::module::ModuleError;
use crate::resolution::{default_cap, gldim};
use crate::script::{run_script_on, Command, Script, ScriptError};
use crate::serre::ls_us_estimate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Rdim,
    Ddim,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Rdim => "Rdim",
            Quantity::Ddim => "Ddim",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub value: usize,
    pub certificate: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsLedger {
    pub quantity: Quantity,
    pub lower: Bound,
    pub upper: Option<Bound>,
    /// Facts used, in the order they were applied.
    pub facts: Vec<String>,
}

impl BoundsLedger {
    fn new(quantity: Quantity) -> Self {
        BoundsLedger { quantity, lower: Bound { value: 0, certificate: String::from("trivial") }, upper: None, facts: Vec::new() }
    }

    fn raise(&mut self, value: usize, certificate: impl Into<String>) {
        if value > self.lower.value {
            self.lower = Bound { value, certificate: certificate.into() };
        }
    }

    fn cut(&mut self, value: usize, certificate: impl Into<String>) {
        if self.upper.as_ref().is_none_or(|u| value < u.value) {
            self.upper = Some(Bound { value, certificate: certificate.into() });
        }
    }

    fn fact(&mut self, s: &str) {
        if !self.facts.iter().any(|f| f == s) {
            self.facts.push(String::from(s));
        }
    }

    pub fn exact(&self) -> Option<usize> {
        self.upper.as_ref().filter(|u| u.value == self.lower.value).map(|u| u.value)
    }

    pub fn is_consistent(&self) -> bool {
        self.upper.as_ref().is_none_or(|u| self.lower.value <= u.value)
    }

    /// `1` or `[1,2]`; an unknown upper bound prints as `inf`.
    pub fn interval(&self) -> String {
        match (&self.upper, self.exact()) {
            (_, Some(v)) => v.to_string(),
            (Some(u), None) => format!("[{},{}]", self.lower.value, u.value),
            (None, None) => format!("[{},inf]", self.lower.value),
        }
    }
}

impl fmt::Display for BoundsLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} = {}", self.quantity, self.interval())?;
        writeln!(f, "  lower {}: {}", self.lower.value, self.lower.certificate)?;
        match &self.upper {
            Some(u) => writeln!(f, "  upper {}: {}", u.value, u.certificate)?,
            None => writeln!(f, "  upper: none")?,
        }
        for x in &self.facts {
            writeln!(f, "  uses: {x}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("invalid slice partition: {0}")]
    InvalidSlices(String),
    #[error("invalid decomposition: {0}")]
    InvalidGroups(String),
    #[error("declared blocks fail the block test: {0}")]
    NotBlocks(String),
    #[error("script: {0}")]
    Script(#[from] ScriptError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Clone)]
pub struct RdimHints<F> {
    /// Scripts starting from all projectives; a Dynkin hereditary end gives 0.
    pub scripts: Vec<Script>,
    pub kronecker: Option<(DObject<F>, DObject<F>)>,
    /// Vertex partition into slices with arrows going weakly forward.
    pub slices: Option<Vec<Vec<usize>>>,
    /// Full exceptional collection split into groups, each Dynkin hereditary.
    pub groups: Option<Vec<Vec<DObject<F>>>>,
    /// Serre steps for the LS ≠ US witness.
    pub serre_steps: usize,
    pub cap: Option<usize>,
}

impl<F> Default for RdimHints<F> {
    fn default() -> Self {
        RdimHints { scripts: Vec::new(), kronecker: None, slices: None, groups: None, serre_steps: 12, cap: None }
    }
}

#[derive(Debug, Clone)]
pub struct DdimHints<F> {
    /// Full exceptional collection and its block sizes.
    pub blocks: Option<(Vec<DObject<F>>, Vec<usize>)>,
    /// `A ≅ factors[0] ⊗ factors[1] ⊗ ...`
    pub factors: Vec<Algebra<F>>,
    /// Scripts reaching a hereditary endomorphism algebra.
    pub scripts: Vec<Script>,
    pub cap: Option<usize>,
}

impl<F> Default for DdimHints<F> {
    fn default() -> Self {
        DdimHints { blocks: None, factors: Vec::new(), scripts: Vec::new(), cap: None }
    }
}

/// Verify a slice partition; returns the number of slices minus one.
pub fn check_slices<F: Field>(a: &Algebra<F>, slices: &[Vec<usize>]) -> Result<usize, BoundsError> {
    let n = a.vertex_count();
    let mut slice_of = vec![usize::MAX; n];
    for (i, s) in slices.iter().enumerate() {
        for &v in s {
            if v >= n || slice_of[v] != usize::MAX {
                return Err(BoundsError::InvalidSlices(format!("vertex {v} missing from the algebra or listed twice")));
            }
            slice_of[v] = i;
        }
    }
    if let Some(v) = slice_of.iter().position(|&s| s == usize::MAX) {
        return Err(BoundsError::InvalidSlices(format!("vertex {} not covered", a.quiver().vertex_name(v))));
    }
    let q = a.quiver();
    for ar in q.arrows() {
        if slice_of[ar.source] > slice_of[ar.target] {
            return Err(BoundsError::InvalidSlices(format!("arrow {} goes backward", ar.name)));
        }
    }
    for (i, s) in slices.iter().enumerate() {
        let sub = q.full_subquiver(s);
        let report = crate::quiver::classify_underlying(&sub);
        if !report.is_disjoint_dynkin() {
            return Err(BoundsError::InvalidSlices(format!("slice {i} is not a disjoint union of Dynkin quivers")));
        }
        // no path leaves a slice and comes back, so eAe only sees paths inside it
        let dim: usize = s.iter().flat_map(|&u| s.iter().map(move |&v| (u, v))).map(|(u, v)| a.piece_dim(u, v)).sum();
        if sub.path_count() != Some(dim) {
            return Err(BoundsError::InvalidSlices(format!("slice {i} carries relations")));
        }
    }
    Ok(slices.len().saturating_sub(1))
}

/// The script starts from every projective and ends in a Dynkin hereditary
/// endomorphism algebra; returns its type.
fn script_reaches_dynkin<F: Field>(a: &Algebra<F>, s: &Script) -> Result<Option<String>, BoundsError> {
    let full = s.commands.iter().find_map(|(_, c)| match c {
        Command::Collection(names) => Some(names.len() == a.vertex_count()),
        _ => None,
    });
    if full != Some(true) {
        return Ok(None);
    }
    let r = run_script_on(a, s)?;
    Ok(match end_algebra(a, &r.collection) {
        Ok(e) if e.hereditary && e.shape.is_disjoint_dynkin() => Some(e.shape.kind.to_string()),
        _ => None,
    })
}

fn script_reaches_hereditary<F: Field>(a: &Algebra<F>, s: &Script) -> Result<bool, BoundsError> {
    let full = s.commands.iter().any(|(_, c)| matches!(c, Command::Collection(names) if names.len() == a.vertex_count()));
    if !full {
        return Ok(false);
    }
    let r = run_script_on(a, s)?;
    Ok(end_algebra(a, &r.collection).is_ok_and(|e| e.hereditary))
}

fn check_groups<F: Field>(a: &Algebra<F>, groups: &[Vec<DObject<F>>]) -> Result<usize, BoundsError> {
    let all: Vec<DObject<F>> = groups.iter().flatten().cloned().collect();
    if all.len() != a.vertex_count() {
        return Err(BoundsError::InvalidGroups(format!("{} objects for {} vertices", all.len(), a.vertex_count())));
    }
    let c = ExcCollection::new(a, all);
    if !c.is_exceptional() {
        return Err(BoundsError::InvalidGroups(String::from("not an exceptional collection")));
    }
    for (i, g) in groups.iter().enumerate() {
        let sub = ExcCollection::new(a, g.clone());
        match end_algebra(a, &sub) {
            Ok(e) if e.hereditary && e.shape.is_disjoint_dynkin() => {}
            _ => return Err(BoundsError::InvalidGroups(format!("group {i} is not Dynkin hereditary"))),
        }
    }
    Ok(groups.len().saturating_sub(1))
}

fn check_blocks<F: Field>(a: &Algebra<F>, objects: &[DObject<F>], sizes: &[usize]) -> Result<usize, BoundsError> {
    if sizes.iter().sum::<usize>() != objects.len() || sizes.contains(&0) {
        return Err(BoundsError::NotBlocks(String::from("block sizes do not partition the collection")));
    }
    if objects.len() != a.vertex_count() {
        return Err(BoundsError::NotBlocks(format!("{} objects for {} vertices", objects.len(), a.vertex_count())));
    }
    let c = ExcCollection::new(a, objects.to_vec());
    if !c.is_exceptional() {
        return Err(BoundsError::NotBlocks(String::from("not an exceptional collection")));
    }
    let mut p = 0;
    for &s in sizes {
        if !c.is_block(p, p + s - 1) {
            return Err(BoundsError::NotBlocks(format!("positions {}..{} are not orthogonal", p, p + s - 1)));
        }
        p += s;
    }
    Ok(sizes.len() - 1)
}

pub fn ddim_bounds<F: Field>(a: &Algebra<F>, hints: &DdimHints<F>) -> Result<BoundsLedger, BoundsError> {
    let mut l = BoundsLedger::new(Quantity::Ddim);
    let cap = hints.cap.unwrap_or_else(|| default_cap(a));
    if !a.is_semisimple() {
        l.raise(1, "not semisimple");
        l.fact("Ddim(A) ≥ 1 for A not semisimple");
    }
    match gldim(a, cap) {
        Ok(g) => {
            l.cut(g, format!("gldim = {g}"));
            l.fact("Ddim(A) ≤ gldim(A)");
        }
        Err(ModuleError::CapExceeded(_)) => {}
        Err(e) => return Err(e.into()),
    }
    let d = radical_degree(a);
    l.cut(d, format!("R^{} = 0", d + 1));
    l.fact("R^{d+1} = 0 ⇒ Ddim(A) ≤ d");
    if let Some((objs, sizes)) = &hints.blocks {
        let n = check_blocks(a, objs, sizes)?;
        let labels: Vec<&str> = objs.iter().map(|o| o.label.as_str()).collect();
        l.cut(n, format!("full exceptional collection ({}) in {} blocks", labels.join(", "), n + 1));
        l.fact("full exceptional collection of n+1 blocks ⇒ Ddim ≤ n");
    }
    if !hints.factors.is_empty() {
        let mut sum = 0;
        for f in &hints.factors {
            match ddim_bounds(f, &DdimHints { cap: hints.cap, ..Default::default() })?.upper {
                Some(u) => sum += u.value,
                None => {
                    sum = usize::MAX;
                    break;
                }
            }
        }
        if sum != usize::MAX {
            l.cut(sum, format!("sum over {} tensor factors", hints.factors.len()));
            l.fact("Ddim(A ⊗ B) ≤ Ddim(A) + Ddim(B)");
        }
    }
    for s in &hints.scripts {
        if script_reaches_hereditary(a, s)? {
            l.cut(1, "derived equivalent to a hereditary algebra (mutation script)");
            l.fact("Ddim is a derived invariant; Ddim ≤ gldim = 1 for hereditary algebras");
        }
    }
    Ok(l)
}

pub fn rdim_bounds<F: Field>(a: &Algebra<F>, hints: &RdimHints<F>) -> Result<BoundsLedger, BoundsError> {
    let mut l = BoundsLedger::new(Quantity::Rdim);
    let cap = hints.cap.unwrap_or_else(|| default_cap(a));

    // lower bounds
    let hint = hints.kronecker.as_ref().map(|(x, y)| (x, y));
    if let Some(c) = kronecker_certificate(a, hint) {
        l.raise(1, format!("Kronecker pair ({}, {}) with Hom = k^2 in degree 0", c.first, c.second));
        l.fact("an exceptional pair with Hom^• = k^2[0] generates Perf of the Kronecker algebra, Rdim 1");
        l.fact("Rdim is monotone on admissible subcategories");
    }
    if l.lower.value < 1 && a.quiver().is_connected() && hints.serre_steps >= 6 {
        if let Ok(e) = ls_us_estimate(a, hints.serre_steps, cap) {
            if let (Some(ls), Some(us)) = (e.ls_fit(4), e.us_fit(4)) {
                if ls.limit() != us.limit() {
                    l.raise(
                        1,
                        format!(
                            "connected, LS = {} ≠ US = {} (exact periodic regression of sup_m, inf_m for m ≤ {})",
                            ls.limit(),
                            us.limit(),
                            hints.serre_steps
                        ),
                    );
                    l.fact("Rdim = 0 ⇒ LSdim = USdim (connected category)");
                }
            }
        }
    }

    // upper bounds
    if let Some(slices) = &hints.slices {
        let n = check_slices(a, slices)?;
        l.cut(n, format!("{} slices, each relation-free disjoint Dynkin", n + 1));
        l.fact("semi-orthogonal decomposition into n+1 pieces of Rdim 0 ⇒ Rdim ≤ n");
    } else if check_slices(a, &[(0..a.vertex_count()).collect()]).is_ok() {
        l.cut(0, "relation-free Dynkin quiver");
        l.fact("Rdim(kΔ) = 0 for Δ Dynkin");
    }
    for s in &hints.scripts {
        if let Some(t) = script_reaches_dynkin(a, s)? {
            l.cut(0, format!("mutation script reaches the path algebra of {t}"));
            l.fact("Rdim is a derived invariant; Rdim(kΔ) = 0 for Δ Dynkin");
        }
    }
    if let Some(groups) = &hints.groups {
        let n = check_groups(a, groups)?;
        let desc: Vec<String> = groups.iter().map(|g| format!("<{}>", g.iter().map(|o| o.label.as_str()).collect::<Vec<_>>().join(","))).collect();
        l.cut(n, format!("decomposition ({}) into Dynkin hereditary pieces", desc.join(", ")));
        l.fact("semi-orthogonal decomposition into n+1 pieces of Rdim 0 ⇒ Rdim ≤ n");
    }
    let dd = ddim_bounds(a, &DdimHints { cap: hints.cap, ..Default::default() })?;
    if let Some(u) = dd.upper {
        l.cut(u.value, format!("Ddim ≤ {} ({})", u.value, u.certificate));
        l.fact("Rdim ≤ Ddim");
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::collection::module_object;
    use crate::field::Q;
    use crate::module::simple;

    #[test]
    fn dynkin_is_zero() {
        let a = catalog::linear_a::<Q>(3).unwrap();
        let r = rdim_bounds(&a, &RdimHints::default()).unwrap();
        assert_eq!(r.exact(), Some(0));
        let d = ddim_bounds(&a, &DdimHints::default()).unwrap();
        assert_eq!(d.exact(), Some(1));
    }

    #[test]
    fn example_8_2_intervals() {
        let a = catalog::example_8_2::<Q>().unwrap();
        let s2 = module_object(&a, "S2", &simple(&a, 2).unwrap(), 10).unwrap();
        let (p0, p1) = (DObject::projective(&a, 0), DObject::projective(&a, 1));
        let hints = RdimHints { groups: Some(vec![vec![s2.clone()], vec![p0.clone(), p1.clone()]]), ..Default::default() };
        let r = rdim_bounds(&a, &hints).unwrap();
        assert_eq!(r.exact(), Some(1), "{r}");
        let d = ddim_bounds(&a, &DdimHints { blocks: Some((vec![s2, p0, p1], vec![1, 1, 1])), ..Default::default() }).unwrap();
        assert_eq!(d.interval(), "[1,2]");
    }

    #[test]
    fn bad_slices_rejected() {
        let a = catalog::linear_a::<Q>(3).unwrap();
        assert!(matches!(check_slices(&a, &[vec![2], vec![0, 1]]), Err(BoundsError::InvalidSlices(_))));
        assert!(matches!(check_slices(&a, &[vec![0, 1]]), Err(BoundsError::InvalidSlices(_))));
        assert_eq!(check_slices(&a, &[vec![0], vec![1, 2]]).unwrap(), 1);
        let b = catalog::example_8_1::<Q>().unwrap();
        assert!(check_slices(&b, &[vec![0, 1, 2]]).is_err());
    }
}
