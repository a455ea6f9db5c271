//! Acceptance checks, one line per criterion plus one per clause.
//!
//! Runs without the libtest harness so the lines are always printed. The run
//! fails iff the set of failing clauses differs from `KNOWN_RED`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use quiverdim::commands::parse_groups;
use quiverdim::tables;
use quiverdim_core::algebra::{Algebra, Elem};
use quiverdim_core::bounds::{ddim_bounds, rdim_bounds, DdimHints, RdimHints};
use quiverdim_core::catalog;
use quiverdim_core::collection::{check_kronecker_pair, end_algebra, hom_complex, kronecker_certificate};
use quiverdim_core::complex::PerfectComplex;
use quiverdim_core::field::{Field, Fp, Q};
use quiverdim_core::linalg::Matrix;
use quiverdim_core::module::{injective, module_iso, projective, RightModule};
use quiverdim_core::psi::{av_dims, first_exactness_failure, kw_bounds, verify_exact, GradedVectorSpace, PsiError};
use quiverdim_core::quiver::{quiver_length, DynkinType};
use quiverdim_core::random;
use quiverdim_core::resolution::{default_cap, gldim, min_resolution};
use quiverdim_core::script::{run_script, Script};
use quiverdim_core::serre::{
    bimodule_tensor_power, fcy_certificate, fcy_check, fit_periodic_affine, ls_us_estimate, projective_orbits, serre_apply, serre_iterate,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Clauses that fail by design; see the project notes for each.
const KNOWN_RED: [&str; 4] = ["1a", "5a", "7c", "9d"];

const SEED: u64 = 0x5eed_2024;

struct Clause {
    id: &'static str,
    ok: bool,
    detail: String,
}

fn clause(id: &'static str, ok: bool, detail: impl Into<String>) -> Clause {
    Clause { id, ok, detail: detail.into() }
}

type Criterion = fn() -> Vec<Clause>;

fn main() {
    let criteria: [(u32, &str, u64, Criterion); 12] = [
        (1, "Coxeter fCY table", 60, c1),
        (2, "Serre dimensions of B_m^n", 300, c2),
        (3, "first example: S(M), orbit formulas", 30, c3),
        (4, "second example", 60, c4),
        (5, "third example", 30, c5),
        (6, "nilpotence of the Serre bimodule", 120, c6),
        (7, "mutation scripts", 60, c7),
        (8, "intro family", 60, c8),
        (9, "psi calculus", 120, c9),
        (10, "canonical algebras", 300, c10),
        (11, "randomized property suites", 300, c11),
        (12, "prime field agrees with rationals", 300, c12),
    ];
    let mut failing = BTreeSet::new();
    for (n, name, budget, f) in criteria {
        let t = Instant::now();
        let mut clauses = f();
        let dt = t.elapsed();
        if dt > Duration::from_secs(budget) {
            clauses.push(clause("time", false, format!("{:.1}s over the {budget}s budget", dt.as_secs_f64())));
        }
        let ok = clauses.iter().all(|c| c.ok);
        println!("criterion {n:>2} {}: {name} ({:.2}s)", if ok { "pass" } else { "FAIL" }, dt.as_secs_f64());
        for c in &clauses {
            let red = KNOWN_RED.contains(&c.id);
            let tag = match (c.ok, red) {
                (true, _) => "pass",
                (false, true) => "FAIL (known)",
                (false, false) => "FAIL",
            };
            println!("    [{}] {tag}: {}", c.id, c.detail);
            if !c.ok {
                failing.insert(if c.id == "time" { format!("{n}time") } else { c.id.to_string() });
            }
        }
    }
    let known: BTreeSet<String> = KNOWN_RED.iter().map(|s| s.to_string()).collect();
    println!("failing clauses: {failing:?}");
    if failing != known {
        println!("expected exactly the known failures {known:?}");
        std::process::exit(1);
    }
    println!("acceptance: failures match the known set");
}

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn cat(name: &str) -> Algebra<Q> {
    catalog::by_name::<Q>(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn script(name: &str) -> Script {
    let path = format!("{}/../../scripts/{name}", env!("CARGO_MANIFEST_DIR"));
    Script::parse(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

type Row1 = (DynkinType, Option<(usize, i32)>, bool);

fn c1() -> Vec<Clause> {
    let (mut literal, mut shift, mut least) = (Vec::new(), Vec::new(), Vec::new());
    for t in tables::COXETER_TYPES {
        let a = catalog::dynkin::<Q>(t, "").unwrap();
        let h = t.coxeter_number().unwrap();
        let cap = default_cap(&a);
        let cert = fcy_certificate(&a, h, h, cap);
        literal.push((t, cert, cert == Some((h, h as i32 - 2))));
        let m = fcy_check(&a, h, cap);
        shift.push((t, m, m == Some(h as i32 - 2)));
        // the least pair must generate (h, h-2)
        let ok = cert.is_some_and(|(n, m)| h % n == 0 && m * (h / n) as i32 == h as i32 - 2);
        least.push((t, ok));
    }
    let show = |v: &[Row1]| {
        v.iter().map(|(t, c, _)| format!("{t}:{}", c.map_or("none".into(), |(n, m)| format!("({n},{m})")))).collect::<Vec<_>>().join(" ")
    };
    vec![
        clause("1a", literal.iter().all(|x| x.2), format!("fcy_certificate = (h, h-2): {}", show(&literal))),
        clause(
            "1b",
            shift.iter().all(|x| x.2),
            format!(
                "S^h(P_v) ≅ P_v[h-2] for all v: {}",
                shift.iter().map(|(t, m, _)| format!("{t}:{}", m.map_or("none".into(), |m| m.to_string()))).collect::<Vec<_>>().join(" ")
            ),
        ),
        clause("1c", least.iter().all(|x| x.1), "least certificate divides (h, h-2) with equal ratio"),
    ]
}

fn c2() -> Vec<Clause> {
    let mut out = Vec::new();
    for (id, m, n) in [("2a", 2usize, 1usize), ("2b", 2, 2), ("2c", 2, 3), ("2d", 3, 1), ("2e", 3, 2)] {
        let a = catalog::b_power::<Q>(m, n).unwrap();
        let e = ls_us_estimate(&a, m + 1, default_cap(&a)).unwrap();
        let want = q((n * (m - 1)) as i64, (m + 1) as i64);
        let mut ok = e.exact() == Some(want.clone());
        if (m, n) == (2, 3) {
            ok &= e.certificate == Some((3, 3));
        }
        out.push(clause(
            id,
            ok,
            format!("B{m}^{n}: certificate {:?}, Sdim {} (want {want})", e.certificate, e.exact().map_or("none".into(), |x| x.to_string())),
        ));
    }
    out
}

/// `z` acting as the identity between the two outer vertices.
fn module_m(a: &Algebra<Q>) -> RightModule<Q> {
    let qv = a.quiver();
    let mut arrows = Vec::new();
    for ar in qv.arrows() {
        let dims = [1usize, 0, 1];
        let mut mat = Matrix::<Q>::zeros(dims[ar.source], dims[ar.target]);
        if ar.name == "z" {
            mat.set(0, 0, Q::one());
        }
        arrows.push(mat);
    }
    RightModule::new(a, vec![1, 0, 1], arrows).unwrap()
}

/// Top nonzero cohomology `(degree, module)` of a complex.
fn top<F: Field>(a: &Algebra<F>, x: &PerfectComplex<F>) -> Option<(i32, RightModule<F>)> {
    let h = x.to_complex(a).homology(a);
    let d = h.sup()?;
    Some((d, h.modules[&d].clone()))
}

fn concentrated<F: Field>(a: &Algebra<F>, x: &PerfectComplex<F>, degree: i32, m: &RightModule<F>) -> bool {
    let h = x.to_complex(a).homology(a);
    h.inf() == Some(degree) && h.sup() == Some(degree) && module_iso(a, &h.modules[&degree], m).is_yes()
}

fn c3() -> Vec<Clause> {
    let a = catalog::example_8_1::<Q>().unwrap();
    let cap = default_cap(&a);
    let m = module_m(&a);
    let sm = serre_apply(&a, &min_resolution(&a, &m, cap).unwrap(), cap).unwrap();
    let mut out = vec![clause("3a", concentrated(&a, &sm, -2, &m), "S(M) ≅ M[2]")];

    let orbits = projective_orbits(&a, 7, cap).unwrap();
    let (i0, i1, i2) = (injective(&a, 0).unwrap(), injective(&a, 1).unwrap(), injective(&a, 2).unwrap());
    let p1 = projective(&a, 1).unwrap();
    let top_is = |x: &PerfectComplex<Q>, d: i32, want: &RightModule<Q>| top(&a, x).is_some_and(|(e, h)| e == d && module_iso(&a, &h, want).is_yes());
    let mut bad = Vec::new();
    for mm in 1..=7usize {
        let k = (mm / 2) as i32;
        let even = mm % 2 == 0;
        let s = |v: usize| &orbits[v][mm - 1];
        let p0_ok = if even { top_is(s(0), -(k - 1), &i2) } else { top_is(s(0), -k, &i0) };
        let p1_ok = if even { concentrated(&a, s(1), -k, &p1) } else { concentrated(&a, s(1), -k, &i1) };
        let p2_ok = if even { top_is(s(2), -k, &i0) } else { top_is(s(2), -k, &i2) };
        for (v, ok) in [(0, p0_ok), (1, p1_ok), (2, p2_ok)] {
            if !ok {
                bad.push(format!("S^{mm}(P{v})"));
            }
        }
    }
    out.push(clause("3b", bad.is_empty(), format!("orbit formulas for m ≤ 7; mismatches: {bad:?}")));

    let traces = serre_iterate(&a, 7, cap).unwrap();
    let sups: Vec<(usize, i32)> = traces.iter().filter(|t| t.step % 2 == 1).map(|t| (t.step, t.sup)).collect();
    let ok = sups.iter().all(|&(mm, s)| s == -(((mm - 1) / 2) as i32));
    out.push(clause("3c", ok, format!("odd-m sup = -floor((m-1)/2): {sups:?}")));
    out
}

fn c4() -> Vec<Clause> {
    let a = catalog::example_8_2::<Q>().unwrap();
    let cap = default_cap(&a);
    let t = &serre_iterate(&a, 5, cap).unwrap()[4];
    let g = gldim(&a, 8).unwrap();
    let groups = parse_groups(&a, "S2|P0,P1", cap).unwrap();
    let r = rdim_bounds(&a, &RdimHints { groups: Some(groups.clone()), ..Default::default() }).unwrap();
    let d = ddim_bounds(&a, &DdimHints { blocks: Some((groups.into_iter().flatten().collect(), vec![1, 1, 1])), ..Default::default() }).unwrap();
    let r_ok = r.lower.value == 1 && r.upper.as_ref().map(|b| b.value) == Some(1);
    let d_ok = d.lower.value == 1 && d.upper.as_ref().map(|b| b.value) == Some(2) && d.interval() == "[1,2]";
    vec![
        clause("4a", t.sup == 0 && t.inf <= -12, format!("m = 5: sup {}, inf {}", t.sup, t.inf)),
        clause("4b", g == 3, format!("gldim {g}")),
        clause("4c", r_ok, format!("Rdim {}", r.interval())),
        clause("4d", d_ok, format!("Ddim {}", d.interval())),
    ]
}

fn c5() -> Vec<Clause> {
    let a = catalog::example_8_3::<Q>().unwrap();
    let cap = default_cap(&a);
    let orbits = projective_orbits(&a, 6, cap).unwrap();
    let mut ranges = Vec::new();
    let mut literal = true;
    for n in 1..=6usize {
        let h = orbits[1][n - 1].homology_dims(&a);
        // H_i = H^{-i}
        let got: BTreeSet<i32> = h.iter().filter(|(_, d)| d.iter().any(|&x| x > 0)).map(|(&deg, _)| -deg).collect();
        let want: BTreeSet<i32> = (0..=2 * n as i32).collect();
        literal &= got == want;
        ranges.push(format!("n={n}: H_i ≠ 0 for i in {:?}..={:?}", got.first(), got.last()));
    }
    let p0 = projective(&a, 0).unwrap();
    let fixed = (1..=6).all(|n| concentrated(&a, &orbits[0][n - 1], 0, &p0));
    let e = ls_us_estimate(&a, tables::SERRE_STEPS, cap).unwrap();
    let (ls, us) = (e.ls_fit(4).map(|f| f.limit()), e.us_fit(4).map(|f| f.limit()));
    vec![
        clause("5a", literal, format!("H_i(S^n(P1)) ≠ 0 exactly for 0 ≤ i ≤ 2n; computed {}", ranges.join("; "))),
        clause("5b", fixed, "S^n(P0) ≅ P0 for n ≤ 6"),
        clause("5c", ls == Some(Q::zero()) && us == Some(Q::from_i64(2)), format!("ls/us fits {ls:?} {us:?}")),
    ]
}

fn c6() -> Vec<Clause> {
    let mut bad = Vec::new();
    for name in ["b_power:2,1", "b_power:2,2", "b_power:3,1", "example_8_1", "canonical:2,2,2"] {
        let a = cat(name);
        let l = quiver_length(a.quiver()).unwrap();
        if !bimodule_tensor_power(&a, l + 2).is_zero() {
            bad.push(format!("{name} at l+2 = {}", l + 2));
        }
    }
    let mut gamma = Vec::new();
    for n in [3usize, 4] {
        let a = catalog::linear_square_zero::<Q>(n).unwrap();
        gamma.push((n, bimodule_tensor_power(&a, n).dim()));
    }
    vec![
        clause("6a", bad.is_empty(), format!("power l(Q)+2 vanishes on ordered catalog algebras; nonzero: {bad:?}")),
        clause("6b", gamma.iter().all(|&(_, d)| d > 0), format!("square-zero linear quivers, dim of power n: {gamma:?}")),
    ]
}

fn c7() -> Vec<Clause> {
    let (a, r) = run_script::<Q>(&script("d4.mut")).unwrap();
    let e = end_algebra(&a, &r.collection).unwrap();
    let d4 = r.passed() && e.shape.kind == DynkinType::D(4) && e.total_dim == 9;

    let (a, r) = run_script::<Q>(&script("e6.mut")).unwrap();
    let e = end_algebra(&a, &r.collection).unwrap();
    let strong = r.collection.is_strong();

    let (a, k) = run_script::<Q>(&script("kronecker-in-b2cubed.mut")).unwrap();
    let objs = k.collection.objects();
    let kr = k.passed() && hom_complex(&a, &objs[0].complex, &objs[5].complex) == [(0, 2)].into() && check_kronecker_pair(&a, &objs[0], &objs[5]);
    vec![
        clause("7a", d4, "d4: strong, D4 shaped, total dimension 9"),
        clause("7b", strong && e.shape.kind == DynkinType::E6 && e.hereditary, format!("e6: strong {strong}, shape {}", e.shape.kind)),
        clause("7c", e.total_dim == 18, format!("e6: total dimension 18; computed {}", e.total_dim)),
        clause("7d", kr, "kronecker-in-b2cubed: Hom^•(E1,E2) = k^2 in degree 0"),
    ]
}

fn c8() -> Vec<Clause> {
    let a1 = catalog::intro_family::<Q>(Q::one()).unwrap();
    let all = Script::parse("collection 0 1 2\n").unwrap();
    let r1 = rdim_bounds(&a1, &RdimHints { scripts: vec![all.clone()], ..Default::default() }).unwrap();
    let rep = quiverdim_core::script::run_script_on(&a1, &all).unwrap();
    let shape = end_algebra(&a1, &rep.collection).unwrap().shape.kind;
    let e1 = ls_us_estimate(&a1, tables::SERRE_STEPS, default_cap(&a1)).unwrap();

    let a0 = catalog::intro_family::<Q>(Q::zero()).unwrap();
    let r0 = rdim_bounds(&a0, &RdimHints::default()).unwrap();
    let e0 = ls_us_estimate(&a0, tables::SERRE_STEPS, default_cap(&a0)).unwrap();
    let odd_ok = e0.ls.iter().enumerate().map(|(i, x)| (i as i64 + 1, x)).filter(|(m, _)| m % 2 == 1).all(|(m, x)| *x == q(m - 1, 2 * m));
    let ls_fit = e0.ls_fit(4).map(|f| f.limit());
    let infs: Vec<i32> = e0.traces.iter().take(7).map(|t| t.inf).collect();
    let inf_ok = infs.iter().enumerate().all(|(i, &x)| x == -(2 * (i as i32 + 1) - 2));
    let us7 = fit_periodic_affine(&infs, 2).map(|f| f.limit());
    vec![
        clause("8a", r1.exact() == Some(0) && shape == DynkinType::A(3), format!("t=1: Rdim {} via end algebra of type {shape}", r1.interval())),
        clause("8b", e1.exact() == Some(q(1, 2)), format!("t=1: ls = us = {:?}", e1.exact().map(|x| x.to_string()))),
        clause("8c", r0.exact() == Some(1), format!("t=0: Rdim {}", r0.interval())),
        clause("8d", odd_ok && ls_fit == Some(q(1, 2)), format!("t=0: ls_m = (m-1)/(2m) at odd m, limit {ls_fit:?}")),
        clause("8e", inf_ok && us7 == Some(Q::from_i64(2)), format!("t=0: inf_m for m ≤ 7 {infs:?}, us limit {us7:?}")),
    ]
}

fn c9() -> Vec<Clause> {
    const M: usize = 8;
    let (mut exact, mut kw, mut dims, mut est) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for spec in ["0:2", "0:3", "0:1,1:1", "-1:1,0:1,1:1"] {
        let v = GradedVectorSpace::parse(spec).unwrap();
        let w = v.width() as i64;
        // (A_i) is stated for i ≥ 1
        if !(1..=6).all(|i| verify_exact(&v, i).unwrap().passed()) {
            exact.push(spec);
        }
        if !(1..=3).all(|k| kw_bounds(&v, k).unwrap().passed()) {
            kw.push(spec);
        }
        let d = av_dims(&v, M).unwrap();
        let ls_fit = fit_periodic_affine(&d.powers.iter().map(|p| p.sup).collect::<Vec<_>>(), 2).map(|f| f.limit());
        let us_fit = fit_periodic_affine(&d.powers.iter().map(|p| p.inf).collect::<Vec<_>>(), 2).map(|f| f.limit());
        if !(d.ls == Q::from_i64(1 - w) && d.us == Q::from_i64(1 + w) && ls_fit == Some(d.ls.clone()) && us_fit == Some(d.us.clone())) {
            dims.push(spec);
        }
        let tol = q(2 * w, M as i64);
        let err = |x: &Q, y: &Q| {
            let e = x.sub(y);
            if e.signum() < 0 {
                e.neg()
            } else {
                e
            }
        };
        let (el, eu) = (err(&d.ls_estimates[M - 1], &d.ls), err(&d.us_estimates[M - 1], &d.us));
        let within = |e: &Q| e.sub(&tol).signum() <= 0;
        est.push((spec, within(&el) && within(&eu), format!("{spec}: errors {el}, {eu} vs {tol}")));
    }
    let one = GradedVectorSpace::parse("0:1").unwrap();
    let neg = matches!(verify_exact(&one, 3), Err(PsiError::Hypothesis(1))) && first_exactness_failure(&one, 6).unwrap() == Some(2);
    vec![
        clause("9a", exact.is_empty(), format!("(A_i) exact for 1 ≤ i ≤ 6; failures {exact:?}")),
        clause("9b", kw.is_empty(), format!("kw_bounds k = 1..3; failures {kw:?}")),
        clause("9c", dims.is_empty(), format!("av_dims = (1-w, 1+w) and matching fits; failures {dims:?}")),
        clause(
            "9d",
            est.iter().all(|e| e.1),
            format!("estimators within 2w/m at m = 8: {}", est.iter().map(|e| e.2.as_str()).collect::<Vec<_>>().join("; ")),
        ),
        clause("9e", neg, "dim V = 1 rejected, unchecked run first fails at i = 2"),
    ]
}

fn c10() -> Vec<Clause> {
    let mut out = Vec::new();
    for (ids, name) in [(["10a", "10b", "10c"], "canonical:2,2,2"), (["10d", "10e", "10f"], "canonical:2,3,4")] {
        let a = cat(name);
        let g = gldim(&a, 6).unwrap();
        let kc = kronecker_certificate(&a, None);
        let r = rdim_bounds(&a, &RdimHints { serre_steps: 0, ..Default::default() }).unwrap();
        out.push(clause(
            ids[0],
            g == 2 && kc.is_some() && r.lower.value >= 1,
            format!("{name}: gldim {g}, Kronecker pair {:?}, Rdim {}", kc.map(|k| (k.first, k.second)), r.interval()),
        ));
        let e = ls_us_estimate(&a, 10, default_cap(&a)).unwrap();
        let drift: Vec<(i32, i32)> = e.traces.iter().map(|t| (t.sup + t.step as i32, t.inf + t.step as i32)).collect();
        out.push(clause(ids[1], drift.iter().all(|&(s, i)| s.abs() <= 6 && i.abs() <= 6), format!("{name}: (sup_m + m, inf_m + m) = {drift:?}")));
        let (lo, hi) = (q(2, 5), q(8, 5));
        let inside = |x: &Q| x.sub(&lo).signum() >= 0 && x.sub(&hi).signum() <= 0;
        let (ls, us) = (&e.ls[9], &e.us[9]);
        out.push(clause(ids[2], inside(ls) && inside(us), format!("{name}: estimators at m = 10: {ls}, {us}")));
    }
    out
}

fn source(rng: &mut ChaCha8Rng) -> impl FnMut(u64) -> u64 + '_ {
    move |n| rng.gen_range(0..n)
}

fn c11() -> Vec<Clause> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let examples: Vec<Algebra<Q>> = ["example_8_1", "example_8_2", "example_8_3"].iter().map(|n| cat(n)).collect();

    let (mut duality_bad, mut homs) = (0, 0);
    for k in 0..50 {
        let a = &examples[k % 3];
        let mut next = source(&mut rng);
        let x = random::complex(a, 3, 2, &mut next).minimalize(a);
        let y = random::complex(a, 3, 2, &mut next).minimalize(a);
        let sx = serre_apply(a, &x, default_cap(a)).unwrap();
        let lhs = hom_complex(a, &x, &y);
        let rhs: std::collections::BTreeMap<i32, usize> = hom_complex(a, &y, &sx).into_iter().map(|(n, d)| (-n, d)).collect();
        homs += lhs.values().sum::<usize>();
        duality_bad += usize::from(lhs != rhs);
    }

    let pool: Vec<Algebra<Q>> = ["example_8_1", "example_8_2", "example_8_3", "b_power:2,2", "canonical:2,2,2"].iter().map(|n| cat(n)).collect();
    let (mut minimal_bad, mut ranks, mut removed) = (0, 0, 0);
    for k in 0..100 {
        let a = &pool[k % pool.len()];
        let mut next = source(&mut rng);
        let c = random::complex(a, 4, 3, &mut next);
        let m = c.minimalize(a);
        ranks += c.total_rank();
        removed += c.total_rank() - m.total_rank();
        minimal_bad += usize::from(!(c.is_complex(a) && m.is_minimal(a) && c.homology_dims(a) == m.homology_dims(a)));
    }

    let mut assoc_bad = Vec::new();
    for name in [
        "linear_a:1",
        "linear_a:2",
        "linear_a:3",
        "linear_a:4",
        "linear_a:5",
        "linear_a:6",
        "dynkin:D4",
        "dynkin:D5",
        "dynkin:E6",
        "b_power:2,1",
        "b_power:2,2",
        "b_power:2,3",
        "b_power:3,1",
        "b_power:3,2",
        "kronecker",
        "canonical:2,2,2",
        "canonical:2,3,4",
        "bar_canonical:2,2,2",
        "example_8_1",
        "example_8_2",
        "example_8_3",
        "intro_family:0",
        "intro_family:1",
        "linear_square_zero:3",
        "linear_square_zero:4",
    ] {
        if !associative(&cat(name)) {
            assoc_bad.push(name);
        }
    }
    vec![
        clause("11a", duality_bad == 0, format!("Serre duality on 50 random pairs (total Hom dimension {homs}): {duality_bad} failures")),
        clause(
            "11b",
            minimal_bad == 0,
            format!("minimalization on 100 random complexes (total rank {ranks}, {removed} cancelled): {minimal_bad} failures"),
        ),
        clause("11c", assoc_bad.is_empty(), format!("associativity and idempotents on the catalog; failures {assoc_bad:?}")),
    ]
}

fn associative<F: Field>(a: &Algebra<F>) -> bool {
    let n = a.dim();
    let one = (0..a.vertex_count()).fold(Elem::zero(), |acc, v| acc.add(&Elem::basis(a.idempotent(v))));
    let idem = (0..a.vertex_count()).all(|v| {
        (0..a.vertex_count()).all(|w| {
            let p = a.mul(&Elem::basis(a.idempotent(v)), &Elem::basis(a.idempotent(w)));
            p == if v == w { Elem::basis(a.idempotent(v)) } else { Elem::zero() }
        })
    });
    idem && (0..n).all(|i| {
        let x = Elem::basis(i);
        a.mul(&one, &x) == x
            && a.mul(&x, &one) == x
            && (0..n).all(|j| (0..n).all(|k| a.mul(a.basis_product(i, j), &Elem::basis(k)) == a.mul(&x, a.basis_product(j, k))))
    })
}

fn c12() -> Vec<Clause> {
    let mut out = Vec::new();
    for (id, table) in [("12a", "coxeter"), ("12b", "bmn"), ("12c", "examples-8")] {
        let computed = |r: quiverdim::report::Report| r.rows.into_iter().map(|r| (r.algebra, r.quantity, r.computed)).collect::<Vec<_>>();
        let qr = computed(tables::reproduce::<Q>(table).unwrap());
        let fr = computed(tables::reproduce::<Fp<32003>>(table).unwrap());
        out.push(clause(id, qr == fr, format!("{table}: {} rows agree over F_32003", qr.len())));
    }
    out
}
