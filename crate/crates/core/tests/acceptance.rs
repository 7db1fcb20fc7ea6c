//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use affsim_core::classes::oracle::{all_subspaces, eigen_one_members, invariant_flats, RawSpace};
use affsim_core::classes::{affine_class_count, all_matrices, brute_force_affine_classes, enumerate_linear_classes, predicted_affine_classes};
use affsim_core::{
    build_conjugator, decide_similar, fitting_split, invariant_factors, sample, tau, tau_vector, Error, FieldSpec,
    LinearProfile, Poly, Subspace, Vector,
};
use common::{all_affine_maps, prime, rng};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:.1?}, limit {limit:?}"))
}

fn ac1_exhaustive_f2() -> Outcome {
    let start = Instant::now();
    let space = RawSpace::new(2, 2);
    let group = space.affine_group();
    let maps = all_affine_maps(2, 2);
    ensure(maps.len() == 64, || format!("{} maps", maps.len()))?;
    let mut similar = 0;
    for (rf, f) in &maps {
        for (rg, g) in &maps {
            let decided = decide_similar(f, g).map_err(|e| e.to_string())?.is_similar();
            let brute = space.search_conjugator(&group, rf, rg).is_some();
            ensure(decided == brute, || format!("disagree on {f} vs {g}: decided {decided}, brute {brute}"))?;
            similar += decided as usize;
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("4096 pairs, {} conjugators, {similar} similar pairs, {:.1?}", group.len(), start.elapsed()))
}

fn ac2_sampled_f3() -> Outcome {
    let start = Instant::now();
    let space = RawSpace::new(2, 3);
    let group = space.affine_group();
    let maps = all_affine_maps(2, 3);
    let mut r = rng(2);
    let mut similar = 0;
    let pairs = 10_000;
    for i in 0..pairs {
        let (rf, f) = &maps[r.gen_range(0..maps.len())];
        let (rg, g) = match i % 3 {
            0 => maps[r.gen_range(0..maps.len())].clone(),
            1 => {
                let h = &group[r.gen_range(0..group.len())];
                let rg = space.conjugate(h, rf);
                let g = maps[space.map_code(&rg)].1.clone();
                (rg, g)
            }
            _ => {
                // same linear part, random translation
                let idx = space.map_code(rf) - space.map_code(rf) % 9 + r.gen_range(0..9);
                maps[idx].clone()
            }
        };
        let decided = decide_similar(f, &g).map_err(|e| e.to_string())?.is_similar();
        let brute = space.search_conjugator(&group, rf, &rg).is_some();
        ensure(decided == brute, || format!("disagree on {f} vs {g}: decided {decided}, brute {brute}"))?;
        similar += decided as usize;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{pairs} pairs, {} conjugators, {similar} similar, {:.1?}", group.len(), start.elapsed()))
}

fn ac3_witnesses() -> Outcome {
    let start = Instant::now();
    let configs = [(prime(2), 4), (prime(3), 4), (prime(5), 4), (FieldSpec::rationals(), 3)];
    let mut r = rng(3);
    let mut total = 0;
    for (field, max_n) in configs {
        for _ in 0..1000 {
            let n = r.gen_range(1..=max_n);
            let f = sample::affine_map(&mut r, field, n);
            let h0 = sample::affine_isomorphism(&mut r, field, n);
            let g = h0.conjugate(&f).map_err(|e| e.to_string())?;
            let w = build_conjugator(&f, &g).map_err(|e| format!("{f} vs {g}: {e}"))?;
            let h = w.as_map();
            ensure(h.conjugate(&f).map_err(|e| e.to_string())? == g, || format!("witness fails on {f}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} conjugate pairs verified over F_2, F_3, F_5, Q, {:.1?}", start.elapsed()))
}

/// AC4 and AC5 share one exhaustive flat sweep.
struct FlatSweep {
    maps: usize,
    minimal_flats: usize,
    rho_failure: Option<String>,
    direction_failure: Option<String>,
    elapsed: Duration,
}

fn flat_sweep() -> Result<FlatSweep, String> {
    let start = Instant::now();
    let mut sweep = FlatSweep { maps: 0, minimal_flats: 0, rho_failure: None, direction_failure: None, elapsed: Duration::ZERO };
    for (n, p) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let space = RawSpace::new(n, p as u32);
        let subspaces = all_subspaces(space);
        for (raw, f) in all_affine_maps(n, p) {
            let flats = invariant_flats(space, &raw, &subspaces);
            let t = tau(&f).map_err(|e| e.to_string())?;
            let min = flats.iter().map(|fl| fl.dim).min().ok_or("no invariant flat")?;
            if min != t && sweep.rho_failure.is_none() {
                sweep.rho_failure = Some(format!("{f}: least invariant flat has dim {min}, tau {t}"));
            }
            let v1 = eigen_one_members(space, &raw.linear);
            for fl in flats.iter().filter(|fl| fl.dim == t) {
                sweep.minimal_flats += 1;
                let inside = subspaces[fl.subspace].basis.iter().all(|v| v1[space.tuple_code(v)]);
                if !inside && sweep.direction_failure.is_none() {
                    sweep.direction_failure = Some(format!("{f}: minimal flat direction leaves V1"));
                }
            }
            sweep.maps += 1;
        }
    }
    sweep.elapsed = start.elapsed();
    Ok(sweep)
}

fn ac4_rho_equals_tau(sweep: &Result<FlatSweep, String>) -> Outcome {
    let s = sweep.as_ref().map_err(Clone::clone)?;
    if let Some(f) = &s.rho_failure {
        return Err(f.clone());
    }
    ensure(s.elapsed < Duration::from_secs(120), || format!("took {:.1?}", s.elapsed))?;
    Ok(format!("{} maps over F_2 (n <= 3) and F_3 (n <= 2), {:.1?}", s.maps, s.elapsed))
}

fn ac5_minimal_flat_direction(sweep: &Result<FlatSweep, String>) -> Outcome {
    let s = sweep.as_ref().map_err(Clone::clone)?;
    if let Some(f) = &s.direction_failure {
        return Err(f.clone());
    }
    Ok(format!("{} invariant flats of dimension tau, all directions inside V1", s.minimal_flats))
}

fn ac6_tau_bound_and_base_points() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=3 {
        let points: Vec<Vector> = RawSpace::new(n, 2)
            .all_tuples(n)
            .map(|t| Vector::from_i64(prime(2), &t.iter().map(|&x| x as i64).collect::<Vec<_>>()))
            .collect();
        for (_, f) in all_affine_maps(n, 2) {
            let n1 = fitting_split(f.linear()).map_err(|e| e.to_string())?.n1;
            let t = tau(&f).map_err(|e| e.to_string())?;
            ensure(t <= n1, || format!("{f}: tau {t} > n1 {n1}"))?;
            for a in &points {
                let ta = tau_vector(&f.displacement(a), f.linear()).map_err(|e| e.to_string())?;
                ensure(ta == t, || format!("{f}: base point {a} gives {ta}, origin gives {t}"))?;
            }
            checked += 1;
        }
    }
    let mut r = rng(6);
    let mut sampled = 0;
    for field in [prime(5), prime(7), prime(101), FieldSpec::rationals()] {
        for _ in 0..50 {
            let n = r.gen_range(1..=4);
            let f = sample::affine_map(&mut r, field, n);
            let profile = LinearProfile::new(f.linear()).map_err(|e| e.to_string())?;
            let t = tau(&f).map_err(|e| e.to_string())?;
            ensure(t <= profile.n1(), || format!("{f}: tau {t} > n1 {}", profile.n1()))?;
            for _ in 0..100 {
                let a = sample::vector(&mut r, field, n);
                let ta = profile.tau_of(&f.displacement(&a)).map_err(|e| e.to_string())?;
                ensure(ta == t, || format!("{f}: base point {a} gives {ta}, origin gives {t}"))?;
            }
            sampled += 1;
        }
    }
    Ok(format!(
        "{checked} maps over F_2 (n <= 3) at every base point, {sampled} sampled maps at 100 random base points, {:.1?}",
        start.elapsed()
    ))
}

fn ac7_simple_representatives() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    for (n, p) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3)] {
        let field = prime(p);
        let points: Vec<Vector> = RawSpace::new(n, p as u32)
            .all_tuples(n)
            .map(|t| Vector::from_i64(field, &t.iter().map(|&x| x as i64).collect::<Vec<_>>()))
            .collect();
        for m in all_matrices(field, n).map_err(|e| e.to_string())? {
            let profile = LinearProfile::new(&m).map_err(|e| e.to_string())?;
            let nil = m.minus_identity();
            let image = Subspace::image(&nil);
            for b in &points {
                let s = profile.simple_representative(b).map_err(|e| format!("{m} {b}: {e}"))?;
                let t = s.tau;
                let expected = profile.tau_of(b).map_err(|e| e.to_string())?;
                ensure(t == expected, || format!("{m} {b}: representative depth {t}, tau {expected}"))?;
                ensure(nil.pow(t).mul_vec(&s.vector).is_zero(), || format!("{m} {b}: N^tau a != 0"))?;
                ensure(t == 0 || !nil.pow(t - 1).mul_vec(&s.vector).is_zero(), || {
                    format!("{m} {b}: N^(tau-1) a = 0")
                })?;
                ensure(image.contains(&(b - &s.vector)).unwrap_or(false), || format!("{m} {b}: left the coset"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} maps over F_2 and F_3 (n <= 3), {:.1?}", start.elapsed()))
}

fn ac8_class_counts() -> Outcome {
    let start = Instant::now();
    let count = |n, p, inv| brute_force_affine_classes(n, p, inv).map(|t| t.len()).map_err(|e| e.to_string());
    for (n, p, inv, expected) in [(1, 2, true, 2), (1, 3, true, 3), (2, 2, true, 5), (1, 3, false, 4), (1, 5, true, 5), (1, 7, true, 7)] {
        let got = count(n, p, inv)?;
        ensure(got == expected, || format!("n={n} p={p} invertible_only={inv}: {got} classes, expected {expected}"))?;
    }
    let mut linear_classes = 0;
    for (n, p) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)] {
        for inv in [true, false] {
            let brute = brute_force_affine_classes(n, p, inv).map_err(|e| e.to_string())?;
            let total: usize = brute.classes.iter().map(|c| c.orbit_size.unwrap_or(0)).sum();
            let maps = (p as usize).pow((n * n + n) as u32);
            let invertible_maps = all_affine_maps(n, p).iter().filter(|(_, f)| f.linear().is_invertible()).count();
            ensure(total == if inv { invertible_maps } else { maps }, || format!("orbit sizes sum to {total}"))?;
            for (m, factors) in enumerate_linear_classes(n, p).map_err(|e| e.to_string())? {
                if inv && !m.is_invertible() {
                    continue;
                }
                let formula = affine_class_count(&m).map_err(|e| e.to_string())?;
                let observed = brute.classes.iter().filter(|c| c.linear_invariant == factors).count();
                ensure(formula == observed, || {
                    format!("n={n} p={p}: class {factors} has {observed} affine classes, formula says {formula}")
                })?;
                linear_classes += 1;
            }
            let predicted = predicted_affine_classes(n, p, inv).map_err(|e| e.to_string())?;
            ensure(predicted.agrees_with(&brute), || format!("n={n} p={p}: predicted table differs"))?;
        }
    }
    Ok(format!("AGL(1,2)=2 AGL(1,3)=3 AGL(2,2)=5 all(1,3)=4; formula matches in {linear_classes} per-linear-class checks, {:.1?}", start.elapsed()))
}

fn ac9_linear_backbone() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for p in [2u64, 3] {
        let field = prime(p);
        let space = RawSpace::new(2, p as u32);
        let gl = space.general_linear_group();
        let raw: Vec<Vec<u32>> = space.all_matrices().collect();
        let factors: Vec<_> = raw
            .iter()
            .map(|e| invariant_factors(&affsim_core::classes::raw_matrix(field, 2, e)))
            .collect::<Result<_, Error>>()
            .map_err(|e| e.to_string())?;
        for (a, fa) in raw.iter().zip(&factors) {
            for (b, fb) in raw.iter().zip(&factors) {
                let brute = space.matrices_conjugate(&gl, a, b);
                ensure((fa == fb) == brute, || format!("F_{p}: {a:?} vs {b:?}: factors equal {}, brute {brute}", fa == fb))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs of 2x2 matrices over F_2 and F_3, {:.1?}", start.elapsed()))
}

fn ac10_exact_algebra() -> Outcome {
    let start = Instant::now();
    let fields = [prime(2), prime(3), prime(5), prime(7), prime(101), prime(2_147_483_647), FieldSpec::rationals()];
    let mut r = rng(10);
    let rounds = 25_000;
    let mut checks = 0;
    for i in 0..rounds {
        let field = fields[i % fields.len()];
        let small = field.modulus().is_none();

        // Bezout recheck
        let deg_a = r.gen_range(0..if small { 4 } else { 6 });
        let deg_b = r.gen_range(0..if small { 4 } else { 6 });
        let a = Poly::new(field, (0..=deg_a).map(|_| sample::scalar(&mut r, field)).collect());
        let b = Poly::new(field, (0..=deg_b).map(|_| sample::scalar(&mut r, field)).collect());
        match Poly::egcd(&a, &b) {
            Ok(bz) => {
                ensure(&(&bz.r * &a) + &(&bz.s * &b) == bz.gcd, || format!("Bezout fails for {a}, {b}"))?;
                ensure(bz.gcd.is_monic() && bz.gcd.divides(&a) && bz.gcd.divides(&b), || format!("gcd of {a}, {b}"))?;
            }
            Err(Error::BothZero) => ensure(a.is_zero() && b.is_zero(), || "spurious BothZero".into())?,
            Err(e) => return Err(e.to_string()),
        }

        let rows = r.gen_range(1..=if small { 4 } else { 6 });
        let cols = r.gen_range(1..=if small { 4 } else { 6 });
        let m = if r.gen_bool(0.5) {
            sample::matrix(&mut r, field, rows, cols)
        } else {
            // low rank: product of thinner factors
            let k = r.gen_range(0..=rows.min(cols));
            &sample::matrix(&mut r, field, rows, k) * &sample::matrix(&mut r, field, k, cols)
        };

        // RREF idempotence and transform
        let red = m.rref();
        ensure(red.reduced.rref().reduced == red.reduced, || format!("rref not idempotent on {m}"))?;
        ensure(&red.transform * &m == red.reduced && red.transform.is_invertible(), || format!("bad transform on {m}"))?;

        // rank + nullity = columns
        let kernel = m.kernel_basis();
        ensure(red.rank + kernel.len() == cols, || format!("dimension formula fails on {m}"))?;
        ensure(kernel.iter().all(|v| m.mul_vec(v).is_zero()), || format!("kernel vector not killed by {m}"))?;

        // solve postconditions
        let x = sample::vector(&mut r, field, cols);
        let rhs = m.mul_vec(&x);
        let y = m.solve(&rhs).map_err(|e| format!("consistent system rejected: {e}"))?;
        ensure(m.mul_vec(&y) == rhs, || format!("solve postcondition fails on {m}"))?;
        let any = sample::vector(&mut r, field, rows);
        let consistent = Subspace::image(&m).contains(&any).map_err(|e| e.to_string())?;
        match m.solve(&any) {
            Ok(z) => ensure(consistent && m.mul_vec(&z) == any, || format!("bad solution on {m}"))?,
            Err(Error::NoSolution) => ensure(!consistent, || format!("solvable system rejected on {m}"))?,
            Err(e) => return Err(e.to_string()),
        }
        checks += 4;
    }
    Ok(format!("{checks} randomized checks over 7 fields, {:.1?}", start.elapsed()))
}

fn run(id: &str, title: &str, check: impl FnOnce() -> Outcome) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match outcome {
        Ok(detail) => {
            println!("[PASS] {id} {title}: {detail}");
            true
        }
        Err(detail) => {
            println!("[FAIL] {id} {title}: {detail}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= run("AC1", "similarity decision vs brute force, F_2 n=2 exhaustive", ac1_exhaustive_f2);
    ok &= run("AC2", "similarity decision vs brute force, F_3 n=2 sampled", ac2_sampled_f3);
    ok &= run("AC3", "conjugator witnesses verify", ac3_witnesses);
    let sweep = catch_unwind(flat_sweep).unwrap_or_else(|_| Err("flat sweep panicked".into()));
    ok &= run("AC4", "least invariant flat dimension equals tau", || ac4_rho_equals_tau(&sweep));
    ok &= run("AC5", "least invariant flats point along V1", || ac5_minimal_flat_direction(&sweep));
    ok &= run("AC6", "tau <= n1 and base-point invariance", ac6_tau_bound_and_base_points);
    ok &= run("AC7", "simple representatives have exact depth tau", ac7_simple_representatives);
    ok &= run("AC8", "affine class counts", ac8_class_counts);
    ok &= run("AC9", "invariant factors vs brute-force matrix conjugacy", ac9_linear_backbone);
    ok &= run("AC10", "exact algebra randomized checks", ac10_exact_algebra);
    if ok {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
