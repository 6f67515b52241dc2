//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or overruns its time budget.

use std::time::{Duration, Instant};

use clap::Parser;
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::Value;
use skewtab_core::asymptotics::{
    band_constants, c1, c2, c3, family_report, hook_integral, integrate_region, PiecewiseLinear,
    StableShape,
};
use skewtab_core::bounds::{bounds_report, main_sandwich};
use skewtab_core::exact::{
    brute_force_count, catalan, dual_hook_products, euler_number, factorials, hlf_count,
    is_rectangle, jacobi_trudi_count, lr_coefficient, rv_hook_identity_check, schur_principal,
    FactorialKind,
};
use skewtab_core::excited::{
    enumerate_excited, macmahon_superfactorial, macmahon_xi, nhlf_count, proctor_xi,
    proctor_xi_superfactorial, slim_xi_checks, xi_determinant,
};
use skewtab_core::shapes::{connected_skew_shapes, partitions_of, subpartitions};
use skewtab_core::{binomial, Caps, Partition, ShapeFamily, SkewShape};

type Outcome = Result<String, String>;

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn golden_example() -> Outcome {
    let s = SkewShape::from_parts(&[4, 4, 3, 2], &[2, 1]).map_err(|e| e.to_string())?;
    let cli = skewtab::Cli::try_parse_from(["skewtab", "count", "4,4,3,2/2,1"]).unwrap();
    let out = skewtab::run(&cli);
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    check(
        v["e"] == "3060" && v["F"] == "1260" && v["xi"] == "5",
        || format!("count printed {}", out.stdout.trim()),
    )?;
    let rep = bounds_report(&s);
    let expected = [
        ("rank-factorial", 864u64),
        ("hp", 672),
        ("chain", 16800),
        ("skew-lr", 241920),
        ("naive-hlf", 1260),
        ("xi-times-f", 6300),
    ];
    for (name, value) in expected {
        let row = rep.row(name).ok_or_else(|| format!("missing row {name}"))?;
        check(row.value == int(value), || format!("{name} = {}", row.value))?;
    }
    check(rep.exact == big(3060) && rep.xi == big(5), || "e or ξ differs".into())?;
    let sandwich = main_sandwich(&s);
    check(sandwich == (int(1260), int(6300)), || format!("sandwich {sandwich:?}"))?;
    Ok("e=3060 F=1260 xi=5 rank=864 chain=16800 hp=672 lr=241920 sandwich=(1260,6300)".into())
}

fn oracle_sweep() -> Outcome {
    let caps = Caps::default();
    let corpus = connected_skew_shapes(8);
    for s in &corpus {
        let e = jacobi_trudi_count(s);
        let brute = brute_force_count(s, &caps).map_err(|e| e.to_string())?;
        let nhlf = nhlf_count(s, &caps).map_err(|e| e.to_string())?;
        check(brute == e && nhlf == e, || format!("{s}: jt {e}, brute {brute}, nhlf {nhlf}"))?;
        let n = enumerate_excited(s, &caps).map_err(|e| e.to_string())?.len();
        let xi = xi_determinant(s);
        check(xi == big(n as u64), || format!("{s}: det {xi}, enumerated {n}"))?;
    }
    Ok(format!("{} connected shapes, 0 discrepancies", corpus.len()))
}

fn bound_soundness() -> Outcome {
    let corpus = connected_skew_shapes(8);
    for s in &corpus {
        let rep = bounds_report(s);
        if let Some(row) = rep.rows.iter().find(|r| !r.holds) {
            return Err(format!("{s}: {} = {} vs e = {}", row.name, row.value, rep.exact));
        }
    }
    Ok(format!("{} shapes x 6 bounds, 0 failures", corpus.len()))
}

fn closed_form_xi() -> Outcome {
    let caps = Caps::default();
    for k in [2usize, 4] {
        let s = ShapeFamily::ThickRibbon { k, r: k }.generate().map_err(|e| e.to_string())?;
        let n = enumerate_excited(&s, &caps).map_err(|e| e.to_string())?.len() as u64;
        let p = proctor_xi(k).map_err(|e| e.to_string())?;
        check(p == big(n), || format!("thick ribbon k={k}: {p} vs {n}"))?;
    }
    for k in [1usize, 2] {
        let s = ShapeFamily::InvertedThickHook { k }.generate().map_err(|e| e.to_string())?;
        let n = enumerate_excited(&s, &caps).map_err(|e| e.to_string())?.len() as u64;
        check(macmahon_xi(k) == big(n), || format!("box k={k}: {n} diagrams"))?;
    }
    for k in 1..=8 {
        check(macmahon_xi(k) == macmahon_superfactorial(k), || format!("box k={k}"))?;
        if k % 2 == 0 {
            let p = proctor_xi(k).map_err(|e| e.to_string())?;
            let sf = proctor_xi_superfactorial(k).map_err(|e| e.to_string())?;
            check(sf == Some(p), || format!("thick ribbon superfactorial k={k}"))?;
        }
    }
    Ok("enumeration k in {2,4} and {1,2}; product = superfactorial for k <= 8".into())
}

fn square_formula() -> Outcome {
    for k in 1..=5 {
        let e = jacobi_trudi_count(&SkewShape::straight(Partition::rectangle(k, k)));
        let phi = |m| factorials(FactorialKind::Superfactorial, m);
        let lhs = e * phi(2 * k - 1);
        let rhs = factorials(FactorialKind::Factorial, k * k) * phi(k - 1) * phi(k - 1);
        check(lhs == rhs, || format!("k={k}"))?;
    }
    Ok("k = 1..5 exact".into())
}

fn zigzag() -> Outcome {
    let caps = Caps::default();
    for k in 1..=7 {
        let s = ShapeFamily::Zigzag { k }.generate().map_err(|e| e.to_string())?;
        let e = jacobi_trudi_count(&s);
        let euler = euler_number(2 * k + 1, &caps).map_err(|e| e.to_string())?;
        check(e == euler, || format!("k={k}: e {e} vs E {euler}"))?;
        let n = enumerate_excited(&s, &caps).map_err(|e| e.to_string())?.len() as u64;
        check(xi_determinant(&s) == big(n) && catalan(k) == big(n), || {
            format!("k={k}: {n} diagrams vs C_k = {}", catalan(k))
        })?;
    }
    Ok("e = E_{2k+1}, xi = C_k for k = 1..7".into())
}

fn thick_ribbon_certification() -> Outcome {
    let fam = ShapeFamily::ThickRibbon { k: 2, r: 2 };
    let band = band_constants(&fam).ok_or("no band")?;
    check((band.lower - -0.3237).abs() < 5e-5 && (band.upper - -0.0621).abs() < 5e-5, || {
        format!("band ({}, {})", band.lower, band.upper)
    })?;
    let mut cs = Vec::new();
    for k in (2..=12).step_by(2) {
        let rep = family_report(&fam, k).map_err(|e| e.to_string())?;
        check(rep.sandwich, || format!("k={k}: sandwich fails"))?;
        cs.push(format!("{:.4}", rep.c));
    }
    Ok(format!(
        "band ({:.4}, {:.4}); c_k for k=2..12: {}",
        band.lower,
        band.upper,
        cs.join(" ")
    ))
}

fn quadrature() -> Outcome {
    let grid = 512;
    let err = |e: skewtab_core::Error| e.to_string();
    let unit = StableShape::rectangle(1.0, 1.0).map_err(err)?;
    let two = StableShape::rectangle(2.0, 2.0).map_err(err)?;
    let kappa = StableShape::new(
        PiecewiseLinear::constant(2.0, 2.0).map_err(err)?,
        PiecewiseLinear::new(vec![(0.0, 1.0), (1.0, 1.0), (1.0, 0.0), (2.0, 0.0)]).map_err(err)?,
    )
    .map_err(err)?;
    let i_unit = hook_integral(&unit, grid).map_err(err)?.value;
    let i_kappa = hook_integral(&kappa, grid).map_err(err)?.value;
    let i_two = hook_integral(&two, grid).map_err(err)?.value;
    let got = [i_unit, (i_kappa - i_unit) / 2.0, i_two - i_kappa];
    let quoted = [-0.1137, 0.6712, 1.0891];
    let closed = [c1(), c2(), c3()];
    for i in 0..3 {
        check((got[i] - quoted[i]).abs() < 1e-4 && (got[i] - closed[i]).abs() < 1e-4, || {
            format!("c{} = {} (closed form {})", i + 1, got[i], closed[i])
        })?;
    }
    for (shift, expected) in [(0.0, c1()), (1.0, c2()), (2.0, c3())] {
        let q = integrate_region(&unit, |x, y| (shift + x + y).ln(), grid).map_err(err)?;
        check((q.value - expected).abs() < 1e-4, || format!("log({shift}+x+y): {}", q.value))?;
    }
    Ok(format!("c1={:.6} c2={:.6} c3={:.6}", got[0], got[1], got[2]))
}

fn slim_suite() -> Outcome {
    let s = SkewShape::from_parts(&[7, 6, 5], &[2, 1]).map_err(|e| e.to_string())?;
    check(xi_determinant(&s) == big(8), || "xi((7,6,5)/(2,1)) != 8".into())?;
    for l in 1..=8usize {
        let expected = big(2).pow(u32::try_from(l * (l - 1) / 2).unwrap());
        check(schur_principal(&Partition::staircase(l), l) == expected, || format!("l={l}"))?;
    }
    let lambda = Partition::rectangle(200, 203);
    let mu = Partition::new(vec![2, 1]).map_err(|e| e.to_string())?;
    let rep = slim_xi_checks(&lambda, &mu).map_err(|e| e.to_string())?;
    let ratio = skewtab_core::asymptotics::ln_rational(&rep.ratio).exp();
    check((ratio - 1.0).abs() <= 0.1, || format!("slim ratio {ratio}"))?;
    Ok(format!("xi=8, staircase values l<=8, slim ratio {}", rep.ratio))
}

fn dual_hooks_and_rv() -> Outcome {
    let mut partitions = 0;
    for n in 1..=12 {
        for nu in partitions_of(n) {
            let (h, h_star) = dual_hook_products(&nu);
            check(h <= h_star && (h == h_star) == is_rectangle(&nu), || format!("{nu}"))?;
            partitions += 1;
        }
    }
    let mut shapes = 0;
    for rows in 1..=12usize {
        for cols in 1..=12 / rows {
            let tau = Partition::rectangle(rows, cols);
            for sigma in subpartitions(&tau) {
                let (s, t) = (sigma.size() as u64, tau.size() as u64);
                if s + t > 12 {
                    continue;
                }
                let identity = rv_hook_identity_check(&sigma, rows, cols).map_err(|e| e.to_string())?;
                check(identity, || format!("hook identity for {sigma} in {tau}"))?;
                let shape = ShapeFamily::RegevVershik { sigma: sigma.clone(), rows, cols }
                    .generate()
                    .map_err(|e| e.to_string())?;
                let lower = binomial(s + t, s) * hlf_count(&sigma) * hlf_count(&tau);
                check(jacobi_trudi_count(&shape) >= lower, || format!("{sigma} in {tau}"))?;
                shapes += 1;
            }
        }
    }
    Ok(format!("{partitions} partitions, {shapes} constructed shapes"))
}

fn lr_consistency() -> Outcome {
    let caps = Caps::default();
    let mut pairs = 0;
    for size in 1..=8 {
        for lambda in partitions_of(size) {
            for mu in subpartitions(&lambda) {
                let s = SkewShape::new(lambda.clone(), mu.clone()).map_err(|e| e.to_string())?;
                let mut sum = big(0);
                for nu in partitions_of(s.size()) {
                    sum += lr_coefficient(&lambda, &mu, &nu, &caps).map_err(|e| e.to_string())?
                        * hlf_count(&nu);
                }
                check(sum == jacobi_trudi_count(&s), || format!("{s}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs (lambda, mu)"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "golden example values", budget: secs(1), run: golden_example },
        Criterion { name: "oracle equivalence sweep", budget: secs(300), run: oracle_sweep },
        Criterion { name: "bound soundness sweep", budget: secs(300), run: bound_soundness },
        Criterion { name: "closed-form xi", budget: secs(300), run: closed_form_xi },
        Criterion { name: "square formula", budget: secs(300), run: square_formula },
        Criterion { name: "zigzag identities", budget: secs(300), run: zigzag },
        Criterion { name: "thick ribbon certification", budget: secs(120), run: thick_ribbon_certification },
        Criterion { name: "quadrature constants", budget: secs(10), run: quadrature },
        Criterion { name: "slim-shape suite", budget: secs(300), run: slim_suite },
        Criterion { name: "dual hooks and complement construction", budget: secs(300), run: dual_hooks_and_rv },
        Criterion { name: "LR consistency", budget: secs(300), run: lr_consistency },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(detail) if elapsed <= c.budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over budget {:?}", c.budget)),
            Err(why) => ("FAIL", why),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{:2}] {} ({:.3}s): {detail}", i + 1, c.name, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
