//! One function per subcommand; each returns a [`Report`].

use anyhow::{anyhow, bail, Context, Result};
use quiverdim_core::algebra::{radical_degree, Algebra};
use quiverdim_core::bounds::{ddim_bounds, rdim_bounds, DdimHints, RdimHints};
use quiverdim_core::collection::{module_object, DObject};
use quiverdim_core::field::{Field, Q};
use quiverdim_core::module::{injective, simple};
use quiverdim_core::psi::{self, GradedVectorSpace, PsiError};
use quiverdim_core::quiver::{classify_underlying, quiver_length};
use quiverdim_core::resolution::{default_cap, gldim};
use quiverdim_core::script::{run_script, run_script_on, Script};
use quiverdim_core::serre::{bimodule_tensor_power, fcy_certificate, fcy_check, fit_periodic_affine, ls_us_estimate, nilpotence_degree};

use crate::report::{Report, Row};

pub(crate) fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cap_or_default<F: Field>(a: &Algebra<F>, cap: Option<usize>) -> usize {
    cap.unwrap_or_else(|| default_cap(a))
}

/// Whether `a` is the path algebra of its quiver (no relations take effect).
pub fn is_relation_free<F: Field>(a: &Algebra<F>) -> bool {
    a.quiver().path_count() == Some(a.dim())
}

pub fn cmd_algebra<F: Field>(name: &str, a: &Algebra<F>, cap: Option<usize>) -> Report {
    let q = a.quiver();
    let mut r = Report::new(format!("algebra {name}"));
    r.push(Row::info(name, "vertices", q.vertices().join(" ")));
    let arrows = q.arrows().iter().map(|x| format!("{}:{}>{}", x.name, q.vertex_name(x.source), q.vertex_name(x.target)));
    r.push(Row::info(name, "arrows", join(arrows)));
    r.push(Row::info(name, "dim", a.dim().to_string()));
    r.push(Row::info(name, "relations", a.relations().len().to_string()));
    r.push(Row::info(name, "length l(Q)", quiver_length(q).map_or_else(|_| String::from("inf (oriented cycle)"), |l| l.to_string())));
    r.push(Row::info(name, "underlying graph", classify_underlying(q).kind.to_string()));
    let cartan = a.piece_dims().iter().map(|row| join(row.iter())).collect::<Vec<_>>().join(" / ");
    r.push(Row::info(name, "dim e_u A e_v (rows u)", cartan));
    r.push(Row::info(name, "radical degree", radical_degree(a).to_string()));
    let c = cap_or_default(a, cap);
    r.push(Row::info(name, "gldim", gldim(a, c).map_or_else(|e| e.to_string(), |g| g.to_string())));
    r
}

#[derive(Debug, Clone, Default)]
pub struct SerreExpect {
    pub ls: Option<String>,
    pub us: Option<String>,
}

pub fn cmd_serre_dim<F: Field>(name: &str, a: &Algebra<F>, steps: usize, cap: Option<usize>, expect: &SerreExpect) -> Result<Report> {
    let c = cap_or_default(a, cap);
    let e = ls_us_estimate(a, steps, c)?;
    let mut r = Report::new(format!("serre-dim {name}"));
    r.push(Row::info(name, "sup_m", join(e.traces.iter().map(|t| t.sup))));
    r.push(Row::info(name, "inf_m", join(e.traces.iter().map(|t| t.inf))));
    r.push(Row::info(name, "-sup_m/m", join(&e.ls)));
    r.push(Row::info(name, "-inf_m/m", join(&e.us)));
    if let Some((n, m)) = e.certificate {
        r.note(format!("S^{n}(P_v) ≅ P_v[{m}] for every vertex v"));
    }
    let fit_text = |f: Option<quiverdim_core::serre::AffineFit>| match f {
        Some(f) => (f.limit().to_string(), format!("period {} from m = {}", f.period, f.start)),
        None => (String::from("?"), String::from("no exact periodic fit")),
    };
    // an fCY certificate pins both limits exactly
    let (ls, ls_how, us, us_how) = match e.exact() {
        Some(x) => (x.to_string(), String::from("fCY certificate"), x.to_string(), String::from("fCY certificate")),
        None => {
            let (l, lh) = fit_text(e.ls_fit(4));
            let (u, uh) = fit_text(e.us_fit(4));
            (l, lh, u, uh)
        }
    };
    r.note(format!("LS: {ls_how}; US: {us_how}"));
    for (q, val, want) in [("LSdim", ls, &expect.ls), ("USdim", us, &expect.us)] {
        r.push(match want {
            Some(w) => Row::exact(name, q, w.clone(), "command line", val),
            None => Row::info(name, q, val),
        });
    }
    Ok(r)
}

pub fn cmd_fcy<F: Field>(name: &str, a: &Algebra<F>, max_n: usize, cap: Option<usize>) -> Report {
    let c = cap_or_default(a, cap);
    let mut r = Report::new(format!("fcy {name}"));
    let least = fcy_certificate(a, max_n, 2 * max_n, c);
    r.push(Row::info(name, "least (n,m) with S^n ≅ [m]", least.map_or_else(|| format!("none with n ≤ {max_n}"), |(n, m)| format!("({n},{m})"))));
    let shape = classify_underlying(a.quiver());
    if let (Some(h), true) = (shape.kind.coxeter_number(), is_relation_free(a)) {
        let got = if h <= max_n { fcy_check(a, h, c).map_or_else(|| String::from("no"), |m| format!("({h},{m})")) } else { format!("h > {max_n}") };
        r.push(Row::exact(name, "S^h ≅ [h-2]", format!("({h},{})", h - 2), "Coxeter number of a Dynkin quiver", got));
    }
    r
}

pub fn cmd_nilpotence<F: Field>(name: &str, a: &Algebra<F>, cap: usize, power: Option<usize>) -> Report {
    let mut r = Report::new(format!("nilpotence {name}"));
    match quiver_length(a.quiver()) {
        Ok(l) => {
            let d = bimodule_tensor_power(a, l + 2).dim();
            r.push(Row::exact(name, format!("dim (A*)^(⊗{})", l + 2), "0", "A* is nilpotent of order at most l(Q)+2", d.to_string()));
            let least = nilpotence_degree(a, l + 2);
            r.push(Row::info(name, "least r with (A*)^⊗r = 0", least.map_or_else(|| String::from("none"), |x| x.to_string())));
        }
        Err(_) => {
            let least = nilpotence_degree(a, cap);
            r.push(Row::info(name, "least r with (A*)^⊗r = 0", least.map_or_else(|| format!("none ≤ {cap}"), |x| x.to_string())));
        }
    }
    if let Some(n) = power {
        r.push(Row::info(name, format!("dim (A*)^(⊗{n})"), bimodule_tensor_power(a, n).dim().to_string()));
    }
    r
}

/// Run a script, on its own `algebra` line or on `a` when given.
pub fn cmd_mutate<F: Field>(source: &str, text: &str, a: Option<&Algebra<F>>) -> Result<Report> {
    let script = Script::parse(text)?;
    let (alg_name, report) = match a {
        Some(a) => (String::from("(given)"), run_script_on(a, &script)?),
        None => (script.algebra_spec().unwrap_or("").to_string(), run_script::<F>(&script)?.1),
    };
    let mut r = Report::new(format!("mutate {source}"));
    for c in &report.checks {
        r.push(Row::exact(alg_name.clone(), format!("line {}: {}", c.line, c.what), c.expected.clone(), source, c.computed.clone()));
    }
    r.push(Row::info(alg_name, "final collection", report.labels.join(" ")));
    Ok(r)
}

/// `P<v>`, `S<v>` or `I<v>`, optionally followed by `[k]`.
pub fn parse_object<F: Field>(a: &Algebra<F>, spec: &str, cap: usize) -> Result<DObject<F>> {
    let spec = spec.trim();
    let (body, shift) = match spec.split_once('[') {
        Some((b, rest)) => {
            let k = rest.strip_suffix(']').ok_or_else(|| anyhow!("unclosed shift in {spec}"))?;
            (b, k.parse::<i32>().with_context(|| format!("bad shift in {spec}"))?)
        }
        None => (spec, 0),
    };
    let mut chars = body.chars();
    let kind = chars.next().ok_or_else(|| anyhow!("empty object"))?;
    let v = a.quiver().vertex_index(chars.as_str())?;
    let obj = match kind {
        'P' => DObject::projective(a, v),
        'S' => module_object(a, body, &simple(a, v)?, cap)?,
        'I' => module_object(a, body, &injective(a, v)?, cap)?,
        _ => bail!("object {spec} must start with P, S or I"),
    };
    Ok(if shift == 0 { obj } else { obj.shift(shift) })
}

/// `S2|P0,P1`: groups separated by `|`, objects by `,`.
pub fn parse_groups<F: Field>(a: &Algebra<F>, spec: &str, cap: usize) -> Result<Vec<Vec<DObject<F>>>> {
    spec.split('|').map(|g| g.split(',').map(|o| parse_object(a, o, cap)).collect()).collect()
}

/// `0,1;2,3`: vertex names, slices separated by `;`.
pub fn parse_slices<F: Field>(a: &Algebra<F>, spec: &str) -> Result<Vec<Vec<usize>>> {
    spec.split(';').map(|s| s.split(',').map(|v| Ok(a.quiver().vertex_index(v.trim())?)).collect()).collect()
}

#[derive(Debug, Clone, Default)]
pub struct BoundsArgs {
    pub slices: Option<String>,
    pub groups: Option<String>,
    pub blocks: Option<String>,
    pub kronecker: Option<String>,
    pub scripts: Vec<String>,
    pub factors: Vec<String>,
    pub steps: usize,
    pub expect_rdim: Option<String>,
    pub expect_ddim: Option<String>,
}

pub fn cmd_bounds<F: Field>(name: &str, a: &Algebra<F>, args: &BoundsArgs, cap: Option<usize>) -> Result<Report> {
    let c = cap_or_default(a, cap);
    let scripts = args.scripts.iter().map(|s| Script::parse(s)).collect::<Result<Vec<_>, _>>()?;
    let mut rh = RdimHints::<F> { scripts: scripts.clone(), serre_steps: args.steps, cap, ..Default::default() };
    if let Some(s) = &args.slices {
        rh.slices = Some(parse_slices(a, s)?);
    }
    if let Some(g) = &args.groups {
        rh.groups = Some(parse_groups(a, g, c)?);
    }
    if let Some(k) = &args.kronecker {
        let (x, y) = k.split_once(',').ok_or_else(|| anyhow!("--kronecker wants X,Y"))?;
        rh.kronecker = Some((parse_object(a, x, c)?, parse_object(a, y, c)?));
    }
    let mut dh = DdimHints::<F> { scripts, cap, ..Default::default() };
    if let Some(b) = &args.blocks {
        let groups = parse_groups(a, b, c)?;
        let sizes = groups.iter().map(Vec::len).collect();
        dh.blocks = Some((groups.into_iter().flatten().collect(), sizes));
    }
    dh.factors = args.factors.iter().map(|f| quiverdim_core::catalog::by_name(f)).collect::<Result<_, _>>()?;
    let rd = rdim_bounds(a, &rh)?;
    let dd = ddim_bounds(a, &dh)?;
    let mut r = Report::new(format!("bounds {name}"));
    for (ledger, want) in [(&rd, &args.expect_rdim), (&dd, &args.expect_ddim)] {
        let q = ledger.quantity.to_string();
        r.push(match want {
            Some(w) if w.starts_with('[') => Row::open(name, q, w.clone(), "command line", ledger.interval()),
            Some(w) => Row::exact(name, q, w.clone(), "command line", ledger.interval()),
            None => Row::info(name, q, ledger.interval()),
        });
        for line in ledger.to_string().lines().skip(1) {
            r.note(format!("{}: {}", ledger.quantity, line.trim()));
        }
    }
    Ok(r)
}

pub fn cmd_psi(spec: &str, m: usize, max_i: usize, max_k: usize) -> Result<Report> {
    let v = GradedVectorSpace::parse(spec)?;
    let label = format!("V = {v}");
    let mut r = Report::new(format!("psi {spec}"));
    if v.dim() < 2 {
        let first = psi::first_exactness_failure(&v, max_i)?;
        r.push(Row::info(&label, "first non-exact (A_i)", first.map_or_else(|| String::from("none"), |i| i.to_string())));
        r.note("dim V < 2: the sequences need not be exact");
        return Ok(r);
    }
    for i in 1..=max_i {
        let e = psi::verify_exact(&v, i)?;
        let computed =
            format!("{}{}", if e.passed() { "exact" } else { "NOT exact" }, if e.oracle { " (checked against the definition)" } else { "" });
        r.push(Row::holds(&label, format!("(A_{i})"), "exact", "trace-kernel exact sequences", computed, e.passed()));
    }
    for k in 1..=max_k {
        match psi::kw_bounds(&v, k) {
            Ok(b) => {
                let show = |(lo, hi): (i32, i32)| format!("[{lo},{hi}]");
                r.push(Row::exact(&label, format!("deg ψ_{}", 2 * k - 1), show(b.odd_expected), "closed form ±kw", show(b.odd)));
                r.push(Row::exact(&label, format!("deg ψ_{}", 2 * k), show(b.even_expected), "closed form ±kw", show(b.even)));
            }
            Err(PsiError::TooLarge(_)) => r.note(format!("ψ_{} beyond the explicit cap", 2 * k)),
            Err(e) => return Err(e.into()),
        }
    }
    let d = psi::av_dims(&v, m)?;
    let sups: Vec<i32> = d.powers.iter().map(|p| p.sup).collect();
    let infs: Vec<i32> = d.powers.iter().map(|p| p.inf).collect();
    r.push(Row::info(&label, "sup_m", join(&sups)));
    r.push(Row::info(&label, "inf_m", join(&infs)));
    let closed: Vec<(i32, i32)> = (1..=m).map(|k| psi::av_closed_form(&v, k)).collect();
    let ok = closed.iter().zip(sups.iter().zip(&infs)).all(|(c, (s, i))| c.0 == *s && c.1 == *i);
    r.push(Row::holds(&label, "sup_m, inf_m", "closed forms", "closed form of the Serre powers", if ok { "match" } else { "differ" }, ok));
    let lim = |xs: &[i32]| fit_periodic_affine(xs, 4).map_or_else(|| String::from("?"), |f| f.limit().to_string());
    let w = v.width() as i64;
    r.push(Row::exact(
        &label,
        "(LSdim, USdim)",
        format!("({},{})", Q::from_i64(1 - w), Q::from_i64(1 + w)),
        "(1-w, 1+w) for dim V ≥ 2",
        format!("({},{})", lim(&sups), lim(&infs)),
    ));
    r.push(Row::info(&label, format!("estimates at m={m}"), format!("({},{})", d.ls_estimates[m - 1], d.us_estimates[m - 1])));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiverdim_core::catalog;

    #[test]
    fn objects_parse() {
        let a = catalog::example_8_2::<Q>().unwrap();
        let s = parse_object(&a, "S2[1]", 10).unwrap();
        assert_eq!(s.label, "S2[1]");
        assert!(parse_object(&a, "X0", 10).is_err());
        assert!(parse_object(&a, "P9", 10).is_err());
        assert_eq!(parse_groups(&a, "S2|P0,P1", 10).unwrap().iter().map(Vec::len).collect::<Vec<_>>(), [1, 2]);
    }

    #[test]
    fn psi_graded_report() {
        let r = cmd_psi("-1:1,0:1,1:1", 8, 3, 2).unwrap();
        assert_eq!(r.exit_code(), 0, "{}", r.to_markdown());
        assert!(r.rows.iter().any(|x| x.quantity == "(LSdim, USdim)" && x.computed == "(-1,3)"));
    }

    #[test]
    fn fcy_d4() {
        let a = catalog::by_name::<Q>("dynkin:D4").unwrap();
        let r = cmd_fcy("dynkin:D4", &a, 12, None);
        assert_eq!(r.exit_code(), 0);
        assert!(r.rows.iter().any(|x| x.computed == "(6,4)"));
    }
}
