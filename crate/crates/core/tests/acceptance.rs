//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ktwist::orders::{
    closed_form_order, g2_polynomial_list, g2_sixfold, sp_images_conjecture, sp_images_thom,
    GroupFamily, GroupSpec,
};
use ktwist::rootrep::{Family, RootSystem};
use ktwist::scalar::binomial;
use ktwist::spinc::{boundary_check, char_numbers};
use ktwist::tate::complex::{build_complex, TateComplex, TateSpec};
use ktwist::tate::homology::{homology, koszul_reference, HomologyTable};
use ktwist::tate::lemmas::unit_lemmas;
use ktwist::tate::presets::{preset, Preset, PresetName, X3Image};
use ktwist::tate::relation::Assignment;
use ktwist::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn group(f: GroupFamily, p: u32, k: i64) -> Result<GroupSpec, String> {
    GroupSpec::new(f, p, k).map_err(err)
}

fn tor(
    p: &Preset<BigInt>,
    rule: Assignment,
    bound: usize,
) -> Result<HomologyTable<BigInt>, String> {
    Ok(homology(
        &build_complex(p.spec(rule).map_err(err)?, bound).map_err(err)?,
    ))
}

fn lettered(name: PresetName, k: i64) -> Result<Preset<BigInt>, String> {
    preset(name, k, Some(vec![BigInt::from(k)]), X3Image::default()).map_err(err)
}

fn g2_triple() -> Outcome {
    for k in 1..=200 {
        let closed = closed_form_order(&group(GroupFamily::G2, 2, k)?).map_err(err)?;
        let six = g2_sixfold(k).map_err(err)?.gcd();
        let poly = g2_polynomial_list(k).map_err(err)?.gcd();
        ensure(closed == six && six == poly, || {
            format!("k={k}: closed {closed}, sixfold {six}, polynomials {poly}")
        })?;
    }
    Ok("k=1..200".into())
}

fn sp_routes() -> Outcome {
    for n in 1..=5 {
        for k in 1..=100 {
            let thom = sp_images_thom(n, k).map_err(err)?.gcd();
            let conj = sp_images_conjecture(n, k).map_err(err)?.gcd();
            ensure(thom == conj, || {
                format!("n={n} k={k}: Thom {thom}, product formula {conj}")
            })?;
        }
    }
    Ok("n=1..5, k=1..100".into())
}

fn isomorphisms() -> Outcome {
    for k in 1..=200 {
        let c = |f, p| closed_form_order(&group(f, p, k)?).map_err(err);
        ensure(
            c(GroupFamily::SpinOdd, 2)? == c(GroupFamily::Sp, 2)?,
            || format!("Spin(5) vs Sp(2) at k={k}"),
        )?;
        ensure(
            c(GroupFamily::SpinEven, 2)? == c(GroupFamily::SU, 3)?,
            || format!("Spin(6) vs SU(4) at k={k}"),
        )?;
    }
    Ok("Spin(5)=Sp(2), Spin(6)=SU(4), k=1..200".into())
}

fn koszul_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6f737a);
    for n in 1..=5 {
        for _ in 0..100 {
            let c = common::random_images(&mut rng, n, 50);
            let bound = n + 1;
            let h = homology(&build_complex(TateSpec::koszul(c.clone()), bound).map_err(err)?);
            let want = koszul_reference(&c, bound).map_err(err)?;
            ensure(h == want, || format!("c={c:?}: got\n{h}want\n{want}"))?;
        }
    }
    Ok("n=1..5, 100 vectors each, entries in [-50, 50]".into())
}

fn preset_structures() -> Outcome {
    for name in [
        PresetName::G2,
        PresetName::F4Core,
        PresetName::SpinR3,
        PresetName::SpinR4,
    ] {
        for k in 1..=12 {
            let p = lettered(name, k)?;
            let h = tor(&p, Assignment::Lowest, 6)?;
            let pattern = p
                .expected
                .as_ref()
                .ok_or("preset without expected pattern")?;
            let want = pattern.table(6);
            ensure(h == want, || format!("{name} k={k}: got\n{h}want\n{want}"))?;
        }
    }
    Ok("g2, f4core, spinR3, spinR4 at k=1..12, bound 6".into())
}

fn negative_control() -> Outcome {
    let mut hits = Vec::new();
    for k in 1..=12 {
        let good = tor(&lettered(PresetName::E7Core, k)?, Assignment::Lowest, 6)?;
        let cyclic = good.concentrated_in_degree_zero()
            && good.degrees[0].free_rank == 0
            && good.degrees[0].torsion.len() <= 1;
        ensure(cyclic, || {
            format!("e7core k={k} is not cyclic in degree 0:\n{good}")
        })?;
        if tor(&lettered(PresetName::E7Rejected, k)?, Assignment::Lowest, 6)?.has_higher_torsion() {
            hits.push(k);
        }
    }
    ensure(!hits.is_empty(), || {
        "rejected relation never produced higher torsion".into()
    })?;
    Ok(format!(
        "rejected relation has higher torsion at k={hits:?}"
    ))
}

fn lemmas() -> Outcome {
    for k in 1..=10_000u64 {
        let g = unit_lemmas(k).map_err(err)?;
        ensure(g.iter().all(|x| *x == BigInt::from(1)), || {
            format!("k={k}: {g:?}")
        })?;
    }
    Ok("k=1..10000".into())
}

fn spinc_numbers() -> Outcome {
    for k in 0..=100i64 {
        let (cp, pn) = char_numbers::<i64>(k).map_err(err)?;
        ensure(cp == 4 * k * k + 12 * k + 9 && pn == 8 * k + 4, || {
            format!("k={k}: ({cp}, {pn})")
        })?;
    }
    for k in (1..=999).step_by(2) {
        let b = boundary_check::<i64>(k).map_err(err)?;
        ensure(b == 0, || format!("boundary at k={k} is {b}"))?;
    }
    Ok("k=0..100 numbers, odd k<=999 boundary".into())
}

fn spot_values() -> Outcome {
    let g2 = RootSystem::new(Family::G, 2).map_err(err)?;
    for (w, d) in [([1, 0], 7i64), ([0, 1], 14), ([1, 1], 64)] {
        let got: i64 = g2.weyl_dim(&g2.weight(&w).map_err(err)?).map_err(err)?;
        ensure(got == d, || format!("G2 {w:?}: {got} != {d}"))?;
    }
    for n in 1..=6usize {
        let a = RootSystem::new(Family::A, n).map_err(err)?;
        for k in 0..=20i64 {
            let mut w = vec![0; n];
            w[0] = k;
            let got: BigInt = a.weyl_dim(&a.weight(&w).map_err(err)?).map_err(err)?;
            let want: BigInt = binomial(n as u64 + k as u64, n as u64);
            ensure(got == want, || format!("A{n} at {k}w1: {got} != {want}"))?;
        }
    }
    Ok("G2 (7, 14, 64); A_n at k*w1 for n<=6, k<=20".into())
}

fn d_squared_zero<T: ktwist::Scalar>(cx: &TateComplex<T>) -> Result<(), String> {
    for d in 2..=cx.degree_bound() {
        let p = &cx.boundary_matrix(d - 1).map_err(err)? * &cx.boundary_matrix(d).map_err(err)?;
        ensure(p.is_zero(), || format!("d^2 != 0 at degree {d}"))?;
    }
    Ok(())
}

fn structural() -> Outcome {
    let mut checked = 0;
    for name in PresetName::ALL {
        for k in 1..=12 {
            let p = lettered(name, k)?;
            d_squared_zero(
                &build_complex(p.spec(Assignment::Lowest).map_err(err)?, 6).map_err(err)?,
            )?;
            let lo = tor(&p, Assignment::Lowest, 6)?;
            let hi = tor(&p, Assignment::Highest, 6)?;
            ensure(lo == hi, || {
                format!("{name} k={k}: assignment changes homology")
            })?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7461_7465);
    for i in 0..500 {
        let spec = common::random_consistent_spec(&mut rng, 4, 2, 20);
        let cx = build_complex(spec, 5).map_err(err)?;
        d_squared_zero(&cx).map_err(|e| format!("random spec {i}: {e}"))?;
    }
    Ok(format!("{checked} preset complexes, 500 random specs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("G2 triple agreement", g2_triple, Duration::from_secs(5)),
        ("Sp route agreement", sp_routes, Duration::from_secs(10)),
        (
            "exceptional isomorphisms",
            isomorphisms,
            Duration::from_secs(1),
        ),
        ("Koszul oracle", koszul_oracle, Duration::from_secs(30)),
        (
            "preset Tor structures",
            preset_structures,
            Duration::from_secs(120),
        ),
        (
            "E7 negative control",
            negative_control,
            Duration::from_secs(60),
        ),
        ("unit lemmas", lemmas, Duration::from_secs(5)),
        ("Spin^c numbers", spinc_numbers, Duration::from_secs(1)),
        (
            "representation spot values",
            spot_values,
            Duration::from_secs(1),
        ),
        ("structural invariants", structural, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let over = if elapsed > *budget {
            format!(" (over {}s budget)", budget.as_secs())
        } else {
            String::new()
        };
        match outcome {
            Ok(detail) => println!(
                "PASS [{:>2}] {name}: exact, {detail}; {elapsed:.2?}{over}",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {why}; {elapsed:.2?}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
