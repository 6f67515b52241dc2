//! Verification sweeps: independent computations checked against each
//! other over a corpus of small shapes and over family instances.
//!
//! Every check is a [`Case`]. Cases run on a rayon pool and their results
//! are collected in construction order, so the report does not depend on
//! the number of threads.

use std::collections::BTreeSet;

use clap::ValueEnum;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use skewtab_core::asymptotics::family_report;
use skewtab_core::bounds::{bounds_report, compare_check};
use skewtab_core::exact::{
    brute_force_count, catalan, dual_hook_products, euler_number, factorials, hlf_count,
    is_rectangle, jacobi_trudi_count, lr_coefficient, ribbon_count, rv_hook_identity_check,
    schur_principal, FactorialKind,
};
use skewtab_core::excited::{
    enumerate_excited, is_excited_diagram, macmahon_superfactorial, macmahon_xi, nhlf_count,
    paths_from_diagram, proctor_xi, proctor_xi_superfactorial, xi_bounds, xi_determinant,
};
use skewtab_core::shapes::{partitions_of, skew_shapes, subpartitions};
use skewtab_core::{binomial, Caps, Error, Partition, ShapeFamily, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    /// Jacobi–Trudi, brute force, excited-diagram formula and ribbon count.
    Counting,
    /// ξ by determinant against enumeration, and the ξ upper bounds.
    Xi,
    /// Excited diagrams against non-intersecting path families.
    Paths,
    /// Every bound against the exact count.
    Bounds,
    /// Product formulas for ξ and e on special families.
    ClosedForms,
    /// Exact sandwich on thick ribbons and the band constants.
    Families,
    /// Dual hooks, the rectangle-complement construction, Schur values.
    Identities,
    /// Littlewood–Richardson expansion of skew counts.
    Lr,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::Counting,
        Group::Xi,
        Group::Paths,
        Group::Bounds,
        Group::ClosedForms,
        Group::Families,
        Group::Identities,
        Group::Lr,
    ];
}

/// Why a case failed. Cap errors are kept apart from wrong answers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub message: String,
    pub resource: bool,
}

type Check = Box<dyn Fn() -> Result<(), Error> + Send + Sync>;

pub struct Case {
    pub group: String,
    pub label: String,
    check: Check,
}

impl Case {
    pub fn new(
        group: impl Into<String>,
        label: impl Into<String>,
        check: impl Fn() -> Result<(), Error> + Send + Sync + 'static,
    ) -> Case {
        Case {
            group: group.into(),
            label: label.into(),
            check: Box::new(check),
        }
    }

    fn run(&self) -> Option<Failure> {
        (self.check)().err().map(|e| Failure {
            case: self.label.clone(),
            resource: e.is_resource(),
            message: e.to_string(),
        })
    }
}

/// Sweep parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifySuite {
    /// Largest `|λ|` in the shape corpus.
    pub max_size: usize,
    /// Largest family parameter for the family groups.
    pub max_k: usize,
    pub groups: Vec<Group>,
    pub caps: Caps,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub group: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_size: usize,
    pub max_k: usize,
    pub groups: Vec<GroupSummary>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Failure> {
        self.groups.iter().flat_map(|g| &g.failures)
    }
}

/// Failures listed per group in the report; the count is always exact.
const LISTED_FAILURES: usize = 20;

fn mismatch(what: &str, a: impl std::fmt::Display, b: impl std::fmt::Display) -> Error {
    Error::Numeric(format!("{what}: {a} != {b}"))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), Error> {
    if ok {
        Ok(())
    } else {
        Err(Error::Numeric(what()))
    }
}

impl VerifySuite {
    pub fn cases(&self) -> Vec<Case> {
        let corpus = skew_shapes(self.max_size);
        let mut cases = Vec::new();
        for &g in &self.groups {
            match g {
                Group::Counting => counting(&corpus, self.caps, &mut cases),
                Group::Xi => xi(&corpus, self.caps, &mut cases),
                Group::Paths => paths(&corpus, self.caps, &mut cases),
                Group::Bounds => bounds(&corpus, &mut cases),
                Group::ClosedForms => closed_forms(self.caps, &mut cases),
                Group::Families => families(self.max_k, &mut cases),
                Group::Identities => identities(&mut cases),
                Group::Lr => lr(self.max_size, self.caps, &mut cases),
            }
        }
        cases
    }

    /// Runs the suite plus `extra` cases on `pool`.
    pub fn run(&self, extra: Vec<Case>, pool: &rayon::ThreadPool) -> VerifyReport {
        let mut cases = self.cases();
        cases.extend(extra);
        let results: Vec<Option<Failure>> = pool.install(|| cases.par_iter().map(Case::run).collect());
        let mut groups: Vec<GroupSummary> = Vec::new();
        for (case, result) in cases.iter().zip(results) {
            let summary = match groups.iter_mut().position(|s| s.group == case.group) {
                Some(i) => &mut groups[i],
                None => {
                    groups.push(GroupSummary {
                        group: case.group.clone(),
                        checked: 0,
                        failed: 0,
                        failures: Vec::new(),
                    });
                    groups.last_mut().expect("just pushed")
                }
            };
            summary.checked += 1;
            if let Some(f) = result {
                summary.failed += 1;
                if summary.failures.len() < LISTED_FAILURES {
                    summary.failures.push(f);
                }
            }
        }
        VerifyReport {
            max_size: self.max_size,
            max_k: self.max_k,
            passed: groups.iter().all(|g| g.failed == 0),
            groups,
        }
    }
}

fn name(g: Group) -> String {
    g.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn counting(corpus: &[SkewShape], caps: Caps, cases: &mut Vec<Case>) {
    for s in corpus {
        let s = s.clone();
        cases.push(Case::new(name(Group::Counting), s.to_string(), move || {
            let e = jacobi_trudi_count(&s);
            let brute = brute_force_count(&s, &caps)?;
            if brute != e {
                return Err(mismatch("brute force vs Jacobi–Trudi", brute, e));
            }
            let nhlf = nhlf_count(&s, &caps)?;
            if nhlf != e {
                return Err(mismatch("excited-diagram formula vs Jacobi–Trudi", nhlf, e));
            }
            match ribbon_count(&s) {
                Some(r) if r != e => Err(mismatch("ribbon count vs Jacobi–Trudi", r, e)),
                _ => Ok(()),
            }
        }));
    }
}

fn xi(corpus: &[SkewShape], caps: Caps, cases: &mut Vec<Case>) {
    for s in corpus {
        let s = s.clone();
        cases.push(Case::new(name(Group::Xi), s.to_string(), move || {
            let diagrams = enumerate_excited(&s, &caps)?;
            let xi = xi_determinant(&s);
            if xi != BigUint::from(diagrams.len()) {
                return Err(mismatch("determinant vs enumeration", &xi, diagrams.len()));
            }
            ensure(diagrams.iter().all(|d| is_excited_diagram(&s, d)), || {
                "enumeration produced an invalid diagram".into()
            })?;
            let b = xi_bounds(&s);
            ensure(b.two_power >= xi && b.polynomial >= xi, || {
                format!("ξ = {xi} exceeds 2^(n-k) = {} or the polynomial bound {}", b.two_power, b.polynomial)
            })
        }));
    }
}

fn paths(corpus: &[SkewShape], caps: Caps, cases: &mut Vec<Case>) {
    for s in corpus {
        let s = s.clone();
        cases.push(Case::new(name(Group::Paths), s.to_string(), move || {
            let diagrams = enumerate_excited(&s, &caps)?;
            let mut seen = BTreeSet::new();
            for d in &diagrams {
                let fam = paths_from_diagram(&s, d)?;
                let complement: Vec<_> = s
                    .outer()
                    .cells()
                    .into_iter()
                    .filter(|c| !d.contains(c))
                    .collect();
                ensure(fam.support() == complement, || {
                    "path support differs from the diagram complement".into()
                })?;
                seen.insert(fam.paths);
            }
            ensure(seen.len() == diagrams.len(), || "two diagrams share a path family".into())
        }));
    }
}

fn bounds(corpus: &[SkewShape], cases: &mut Vec<Case>) {
    for s in corpus {
        let s = s.clone();
        cases.push(Case::new(name(Group::Bounds), s.to_string(), move || {
            let rep = bounds_report(&s);
            if let Some(row) = rep.rows.iter().find(|r| !r.holds) {
                return Err(Error::Numeric(format!("{} bound fails", row.name)));
            }
            ensure(rep.hp.ceiling <= rep.exact, || "rounded HP bound exceeds e".into())?;
            ensure(compare_check(&s).verdict() != Some(false), || {
                "rank-product comparison fails".into()
            })
        }));
    }
}

fn closed_forms(caps: Caps, cases: &mut Vec<Case>) {
    let g = name(Group::ClosedForms);
    for k in [2usize, 4] {
        cases.push(Case::new(g.clone(), format!("thick ribbon product, k = {k}"), move || {
            let s = ShapeFamily::ThickRibbon { k, r: k }.generate()?;
            let n = enumerate_excited(&s, &caps)?.len();
            let p = proctor_xi(k)?;
            ensure(p == BigUint::from(n), || format!("product {p} vs {n} diagrams"))
        }));
    }
    for k in [1usize, 2] {
        cases.push(Case::new(g.clone(), format!("box product, k = {k}"), move || {
            let s = ShapeFamily::InvertedThickHook { k }.generate()?;
            let n = enumerate_excited(&s, &caps)?.len();
            let p = macmahon_xi(k);
            ensure(p == BigUint::from(n), || format!("product {p} vs {n} diagrams"))
        }));
    }
    for k in 1..=8usize {
        cases.push(Case::new(g.clone(), format!("superfactorial forms, k = {k}"), move || {
            if k % 2 == 0 {
                let p = proctor_xi(k)?;
                let sf = proctor_xi_superfactorial(k)?;
                ensure(sf.as_ref() == Some(&p), || format!("{p} vs {sf:?}"))?;
            }
            let (a, b) = (macmahon_xi(k), macmahon_superfactorial(k));
            ensure(a == b, || format!("{a} vs {b}"))
        }));
    }
    for k in 1..=5usize {
        cases.push(Case::new(g.clone(), format!("square, k = {k}"), move || {
            let e = jacobi_trudi_count(&SkewShape::straight(Partition::rectangle(k, k)));
            let phi = |m| factorials(FactorialKind::Superfactorial, m);
            let lhs = e * phi(2 * k - 1);
            let rhs = factorials(FactorialKind::Factorial, k * k) * phi(k - 1) * phi(k - 1);
            ensure(lhs == rhs, || format!("{lhs} vs {rhs}"))
        }));
    }
    for k in 1..=7usize {
        cases.push(Case::new(g.clone(), format!("zigzag, k = {k}"), move || {
            let s = ShapeFamily::Zigzag { k }.generate()?;
            let (e, euler) = (jacobi_trudi_count(&s), euler_number(2 * k + 1, &caps)?);
            ensure(e == euler, || format!("e = {e} vs E = {euler}"))?;
            let (xi, c) = (xi_determinant(&s), catalan(k));
            ensure(xi == c, || format!("ξ = {xi} vs C_k = {c}"))
        }));
    }
    cases.push(Case::new(g, "slim shape (7,6,5)/(2,1)", || {
        let xi = xi_determinant(&SkewShape::from_parts(&[7, 6, 5], &[2, 1])?);
        ensure(xi == BigUint::from(8u8), || format!("ξ = {xi}"))
    }));
}

fn families(max_k: usize, cases: &mut Vec<Case>) {
    for k in (2..=max_k).step_by(2) {
        cases.push(Case::new(name(Group::Families), format!("thick-ribbon:k={k}"), move || {
            let rep = family_report(&ShapeFamily::ThickRibbon { k, r: k }, k)?;
            ensure(rep.sandwich, || "F ≤ e ≤ ξF fails".into())?;
            let band = rep.band.expect("thick ribbons have band constants");
            ensure(band.contains(rep.c), || format!("c_k = {} outside the band", rep.c))
        }));
    }
}

fn identities(cases: &mut Vec<Case>) {
    let g = name(Group::Identities);
    for n in 1..=12usize {
        cases.push(Case::new(g.clone(), format!("dual hooks, n = {n}"), move || {
            for nu in partitions_of(n) {
                let (h, h_star) = dual_hook_products(&nu);
                ensure(h <= h_star, || format!("H > H* for {nu}"))?;
                ensure((h == h_star) == is_rectangle(&nu), || format!("equality case {nu}"))?;
            }
            Ok(())
        }));
    }
    for l in 1..=8usize {
        cases.push(Case::new(g.clone(), format!("staircase Schur value, l = {l}"), move || {
            let v = schur_principal(&Partition::staircase(l), l);
            let expected = BigUint::from(2u8).pow(u32::try_from(l * (l - 1) / 2).expect("small"));
            ensure(v == expected, || format!("{v} vs {expected}"))
        }));
    }
    for rows in 1..=12usize {
        for cols in 1..=12 / rows {
            let tau = Partition::rectangle(rows, cols);
            for sigma in subpartitions(&tau) {
                if sigma.size() + tau.size() > 12 {
                    continue;
                }
                let label = format!("complement construction, σ = {sigma} in {rows}x{cols}");
                let tau = tau.clone();
                cases.push(Case::new(g.clone(), label, move || {
                    ensure(rv_hook_identity_check(&sigma, rows, cols)?, || {
                        "hook multisets differ".into()
                    })?;
                    let s = ShapeFamily::RegevVershik { sigma: sigma.clone(), rows, cols }.generate()?;
                    let (st, t) = (sigma.size() as u64, tau.size() as u64);
                    let lower = binomial(st + t, st) * hlf_count(&sigma) * hlf_count(&tau);
                    let e = jacobi_trudi_count(&s);
                    ensure(e >= lower, || format!("e = {e} below {lower}"))
                }));
            }
        }
    }
}

fn lr(max_size: usize, caps: Caps, cases: &mut Vec<Case>) {
    for size in 1..=max_size {
        for lambda in partitions_of(size) {
            let lambda = lambda.clone();
            cases.push(Case::new(name(Group::Lr), format!("λ = {lambda}"), move || {
                for mu in subpartitions(&lambda) {
                    let s = SkewShape::new(lambda.clone(), mu.clone())?;
                    let mut sum = BigUint::from(0u8);
                    for nu in partitions_of(s.size()) {
                        sum += lr_coefficient(&lambda, &mu, &nu, &caps)? * hlf_count(&nu);
                    }
                    let e = jacobi_trudi_count(&s);
                    if sum != e {
                        return Err(mismatch(&format!("LR expansion of {s}"), sum, e));
                    }
                }
                Ok(())
            }));
        }
    }
}
