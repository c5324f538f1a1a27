//! Acceptance checks. Prints one line per criterion and exits nonzero if any
//! of them fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ternary_bounds::asymptotics::{
    optimal_omega_cw, quartic, tau_lower_cw, tau_lower_ggv, tau_simple_bounds, verify_optimizers,
    GRID_POINTS,
};
use ternary_bounds::bounds::{BoundsEngine, Provenance, TableOptions};
use ternary_bounds::constructions::{
    coset_scan_construction, default_inner_codes, even_zeros_code, phi_shift_construction,
    random_binary_code, signed_binary_code, support_construction, ShiftStrategy,
};
use ternary_bounds::counting::{constant_weight_sphere, pair_count_poly};
use ternary_bounds::search::{
    exact_T, greedy_binary_code, greedy_gv_code, plotkin_witness_check, GreedyOrder, SearchConfig,
};
use ternary_bounds::{build_table, BinaryCode, BinaryWord, TernaryCode, TernaryWord};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---- independent oracles ----

fn all_words(n: usize) -> Vec<Vec<i8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                [-1i8, 0, 1].into_iter().map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

fn d1(x: &[i8], y: &[i8]) -> usize {
    x.iter().zip(y).map(|(a, b)| (a - b).unsigned_abs() as usize).sum()
}

fn words_of(code: &TernaryCode) -> Vec<Vec<i8>> {
    code.iter().map(TernaryWord::to_i8_vec).collect()
}

fn min_d1(words: &[Vec<i8>]) -> Option<usize> {
    let mut best = None;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let d = d1(&words[i], &words[j]);
            best = Some(best.map_or(d, |b: usize| b.min(d)));
        }
    }
    best
}

fn meets(code: &TernaryCode, d: u32) -> bool {
    min_d1(&words_of(code)).map_or(true, |m| m >= d as usize)
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    (a + b - 1u32) / b
}

// ---- criteria ----

fn criterion_1() -> Check {
    let table = build_table(5, 4, &TableOptions::default()).map_err(|e| e.to_string())?;
    let expected = [2u32, 5, 14, 41, 122];
    for (i, &v) in expected.iter().enumerate() {
        let n = i + 1;
        ensure!(BigUint::from(3u32).pow(n as u32) / 2u32 + 1u32 == BigUint::from(v), "bad oracle");
        let e = table.get(n, 2).ok_or("missing cell")?;
        ensure!(e.is_exact(), "T({n},2) not exact: {e}");
        ensure!(e.lower.value == BigUint::from(v), "T({n},2) = {} != {v}", e.lower.value);
        ensure!(
            e.lower.provenance == Provenance::EvenZeros,
            "T({n},2) lower provenance {}",
            e.lower_provenance()
        );
        let up_ok = match e.upper.provenance {
            Provenance::Mix => true,
            Provenance::BaseCase => n == 1,
            _ => false,
        };
        ensure!(up_ok, "T({n},2) upper provenance {}", e.upper_provenance());
        let code = even_zeros_code(n).map_err(|e| e.to_string())?;
        ensure!(code.len() == v as usize && meets(&code, 2), "even-zeros witness wrong at n={n}");
    }
    Ok("T(n,2) = 2, 5, 14, 41, 122 exact".into())
}

fn criterion_2() -> Check {
    let table = build_table(3, 6, &TableOptions::default()).map_err(|e| e.to_string())?;
    let cfg = SearchConfig::default();
    let mut exact = BTreeMap::new();
    for n in 1..=3usize {
        for d in 1..=2 * n as u32 {
            let out = exact_T(n, d, &cfg).map_err(|e| e.to_string())?;
            let v = out.exact().ok_or(format!("T({n},{d}) search did not finish"))?;
            ensure!(meets(&out.witness, d) && out.witness.len() == v, "bad witness T({n},{d})");
            let e = table.get(n, d).ok_or("missing cell")?;
            let v_big = BigUint::from(v);
            ensure!(e.lower.value <= v_big && v_big <= e.upper.value, "T({n},{d}) = {v} outside {e}");
            exact.insert((n, d), v);
        }
    }
    ensure!(exact[&(1, 1)] == 3 && exact[&(1, 2)] == 2, "T(1,.) wrong");
    ensure!(exact[&(2, 2)] == 5, "T(2,2) = {}", exact[&(2, 2)]);
    Ok(format!("{} cells agree, T(1,1..2) = 3,2, T(2,2) = 5", exact.len()))
}

fn criterion_3() -> Check {
    let mut pairs = 0usize;
    for n in 0..=4 {
        let words = all_words(n);
        let mut census = vec![0u64; 2 * n + 1];
        for x in &words {
            for y in &words {
                census[d1(x, y)] += 1;
                pairs += 1;
            }
        }
        let poly = pair_count_poly(n);
        for (w, &c) in census.iter().enumerate() {
            ensure!(poly.get(w) == BigUint::from(c), "m({n},{w}) = {} != {c}", poly.get(w));
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn criterion_4() -> Check {
    let mut cells = 0;
    for n in 0..=5 {
        let words = all_words(n);
        for w in 0..=n {
            let shell: Vec<&Vec<i8>> =
                words.iter().filter(|x| x.iter().filter(|&&s| s != 0).count() == w).collect();
            let centre = shell[0];
            let mut census = vec![0u64; 2 * n + 1];
            for y in &shell {
                census[d1(centre, y)] += 1;
            }
            for (dist, &c) in census.iter().enumerate() {
                ensure!(dist % 2 == 0 || c == 0, "odd distance {dist} inside shell");
                let got = constant_weight_sphere(n, w, dist);
                ensure!(got == BigUint::from(c), "S({n},{w},{dist}) = {got} != {c}");
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} sphere counts"))
}

fn criterion_5() -> Check {
    let cfg = SearchConfig::default();
    let mut cells = 0;
    for n in 1..=3usize {
        for d in n as u32 + 1..=2 * n as u32 {
            let v = exact_T(n, d, &cfg).map_err(|e| e.to_string())?.exact().ok_or("unfinished")?;
            let bound = d as usize / (d as usize - n);
            ensure!(v <= bound, "T({n},{d}) = {v} > {bound}");
            cells += 1;
        }
    }
    let t22 = exact_T(2, 2, &cfg).map_err(|e| e.to_string())?.exact().ok_or("unfinished")?;
    let diag = (2.0 * 2.0 + 0.5 + (2.0f64 * 2.0 + 0.25).sqrt()).floor() as usize;
    ensure!(diag == 6 && t22 == 5, "T(2,2) = {t22}, diagonal bound {diag}");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let n = rng.gen_range(1..=6usize);
        let size = rng.gen_range(1..=20usize.min(3usize.pow(n as u32)));
        let mut words: Vec<Vec<i8>> = Vec::new();
        while words.len() < size {
            let w: Vec<i8> = (0..n).map(|_| rng.gen_range(-1i8..=1)).collect();
            if !words.contains(&w) {
                words.push(w);
            }
        }
        let d = min_d1(&words).unwrap_or(0);
        let m = words.len();
        let s: usize = words.iter().flat_map(|x| words.iter().map(move |y| d1(x, y))).sum();
        let zero_sq: usize = (0..n)
            .map(|i| words.iter().filter(|w| w[i] == 0).count().pow(2))
            .sum();
        let (lo, hi) = (m * (m - 1) * d, n * m * m - zero_sq);
        ensure!(lo <= s && s <= hi, "trial {trial}: {lo} <= {s} <= {hi} fails");
        let code = TernaryCode::from_words(
            n,
            words.iter().map(|w| TernaryWord::new(w).unwrap()),
        )
        .map_err(|e| e.to_string())?;
        let r = plotkin_witness_check(&code, d as u32).map_err(|e| e.to_string())?;
        ensure!(
            r.direct_sum == s as u128
                && r.pair_lower == lo as u128
                && r.column_upper == hi as u128
                && r.identity_holds()
                && r.chain_holds(),
            "trial {trial}: report disagrees with direct computation"
        );
    }
    Ok(format!("{cells} cells with d > n, T(2,2) = 5 <= 6, 1000 random codes"))
}

fn criterion_6() -> Check {
    let mut engine = BoundsEngine::new(3, 6, &TableOptions::default()).map_err(|e| e.to_string())?;
    let cfg = SearchConfig::default();
    let mut checked = 0;
    for n in 1..=3usize {
        let words = all_words(n);
        for d in 1..=2 * n as u32 {
            let v = exact_T(n, d, &cfg).map_err(|e| e.to_string())?.exact().ok_or("unfinished")?;
            let v = BigUint::from(v);
            // average ball volume from a direct count
            let within: usize = words
                .iter()
                .flat_map(|x| words.iter().map(move |y| d1(x, y)))
                .filter(|&k| k < d as usize)
                .count();
            let gv = ceil_div(&BigUint::from(9u32).pow(n as u32), &BigUint::from(within));
            let mut cw_best = BigUint::from(0u32);
            for w in 1..=n {
                let shell: Vec<&Vec<i8>> =
                    words.iter().filter(|x| x.iter().filter(|&&s| s != 0).count() == w).collect();
                let ball = shell.iter().filter(|y| d1(shell[0], y) < d as usize).count();
                cw_best = cw_best.max(ceil_div(&BigUint::from(shell.len()), &BigUint::from(ball)));
            }
            let cands = engine.lower_candidates(n, d);
            for (value, prov) in cands {
                match prov {
                    Provenance::GeneralizedGv => {
                        ensure!(value == gv, "GGV({n},{d}) = {value}, direct count gives {gv}");
                    }
                    Provenance::ConstantWeightGv { .. } => {
                        ensure!(value == cw_best, "CW-GV({n},{d}) = {value}, direct {cw_best}");
                    }
                    _ => continue,
                }
                ensure!(value <= v, "{prov:?} at ({n},{d}) gives {value} > T = {v}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} GV-type bounds below exact values"))
}

fn criterion_7() -> Check {
    let checks = verify_optimizers(GRID_POINTS);
    let worst = checks.iter().map(|c| c.gap()).fold(0.0, f64::max);
    if let Some(c) = checks.iter().find(|c| !c.passed()) {
        return Err(format!(
            "{} at delta {}: closed form {} vs grid {}",
            c.family, c.delta, c.closed_form, c.grid
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_residual = 0.0f64;
    for _ in 0..100 {
        let delta: f64 = rng.gen_range(0.0..1.0);
        let r = quartic(delta, optimal_omega_cw(delta)).abs();
        worst_residual = worst_residual.max(r);
    }
    ensure!(worst_residual < 1e-12, "quartic residual {worst_residual:e}");
    let w0 = optimal_omega_cw(0.0);
    ensure!((w0 - 2.0 / 3.0).abs() < 1e-9, "omega(0) = {w0}");
    let t0 = tau_lower_cw(0.0, w0).map_err(|e| e.to_string())?.value;
    ensure!((t0 - 1.0).abs() < 1e-9, "tau(0) = {t0}");
    Ok(format!(
        "{} optimizer checks, worst gap {worst:.2e}, worst residual {worst_residual:.2e}",
        checks.len()
    ))
}

fn criterion_8() -> Check {
    let value = |d: f64| -> Result<(f64, f64), String> {
        let b = tau_simple_bounds(d).map_err(|e| e.to_string())?.tau_lower_binary;
        let g = tau_lower_ggv(d).map_err(|e| e.to_string())?.value;
        Ok((b, g))
    };
    let (b85, g85) = value(0.85)?;
    ensure!((b85 - 0.0103).abs() < 1e-3, "tau_lower_binary(0.85) = {b85}");
    ensure!((g85 - 0.0012).abs() < 1e-3, "tau_lower_ggv(0.85) = {g85}");
    ensure!(b85 > g85, "no crossover at 0.85: {b85} <= {g85}");
    let (b20, g20) = value(0.2)?;
    ensure!(g20 > b20, "ordering not reversed at 0.2: {g20} <= {b20}");

    let out = Command::new(env!("CARGO_BIN_EXE_tbounds"))
        .args(["asym", "--from", "0.01", "--to", "0.99", "--step", "0.01", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "asym exited with {}", out.status);
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let header = rdr.headers().map_err(|e| e.to_string())?.clone();
    let mut rows = 0;
    for rec in rdr.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        for (name, field) in header.iter().zip(rec.iter()) {
            match field.parse::<f64>() {
                Ok(x) => ensure!(x.is_finite() && x >= 0.0, "{name} = {field} in row {rows}"),
                Err(_) => ensure!(
                    !field.to_ascii_lowercase().contains("nan"),
                    "{name} = {field} in row {rows}"
                ),
            }
        }
        rows += 1;
    }
    ensure!(rows == 99, "{rows} curve rows");
    Ok(format!(
        "0.85: binary {b85:.5} > ggv {g85:.5}; 0.2: ggv {g20:.4} > binary {b20:.4}; {rows}x{} csv",
        header.len()
    ))
}

fn criterion_9() -> Check {
    let mut built = 0;
    let check = |code: &TernaryCode, d: u32, what: &str| -> Result<(), String> {
        ensure!(meets(code, d), "{what}: min d1 below {d}");
        Ok(())
    };
    for n in 1..=6usize {
        check(&even_zeros_code(n).map_err(|e| e.to_string())?, 2, "even-zeros")?;
        built += 1;
        for d in 1..=2 * n as u32 {
            let e = |e: ternary_bounds::Error| format!("n={n} d={d}: {e}");
            for order in [GreedyOrder::Lexicographic, GreedyOrder::Shuffled(n as u64)] {
                check(&greedy_gv_code(n, d, order).map_err(e)?, d, "greedy")?;
            }
            let half = greedy_binary_code(n, d.div_ceil(2)).map_err(e)?;
            check(&signed_binary_code(&half).map_err(e)?, d, "signed-binary")?;
            let outer = greedy_binary_code(n, d).map_err(e)?;
            let inner = default_inner_codes(n, d).map_err(e)?;
            check(&support_construction(&outer, &inner, d).map_err(e)?, d, "support")?;
            let (coset, _) = coset_scan_construction(&outer, &inner, d).map_err(e)?;
            check(&coset, d, "coset-scan")?;
            let b = greedy_binary_code(2 * n, d).map_err(e)?;
            let shifted = phi_shift_construction(&b, ShiftStrategy::Exhaustive).map_err(e)?;
            check(&shifted.code, d, "phi-shift")?;
            built += 6;
        }
    }

    let bin = |ws: &[&[u8]], len: usize| {
        BinaryCode::from_words(len, ws.iter().map(|w| BinaryWord::new(w).unwrap())).unwrap()
    };
    let outer = bin(&[&[0, 0, 0], &[1, 1, 1]], 3);
    let mut inner = BTreeMap::new();
    inner.insert(0, bin(&[&[]], 0));
    inner.insert(3, bin(&[&[0, 0, 0], &[1, 1, 0]], 3));
    let example = support_construction(&outer, &inner, 3).map_err(|e| e.to_string())?;
    let md = min_d1(&words_of(&example));
    ensure!(example.len() == 3 && md >= Some(3), "example: size {} min d1 {md:?}", example.len());

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for seed in 0..20u64 {
        let n = rng.gen_range(1..=5usize);
        let size = rng.gen_range(1..=40usize.min(1 << (2 * n)));
        let b = random_binary_code(2 * n, size, seed).map_err(|e| e.to_string())?;
        let r = phi_shift_construction(&b, ShiftStrategy::Exhaustive).map_err(|e| e.to_string())?;
        let want = ceil_div(
            &(BigUint::from(size) * BigUint::from(3u32).pow(n as u32)),
            &BigUint::from(4u32).pow(n as u32),
        );
        ensure!(
            r.guaranteed == want && BigUint::from(r.code.len()) >= want,
            "seed {seed}: {} words, guaranteed {want}",
            r.code.len()
        );
        let dh = b.min_hamming_distance().finite().unwrap_or(0);
        check(&r.code, dh, "random phi-shift")?;
    }
    Ok(format!("{built} constructions, support example size 3, 20 shifted codes"))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Check, Duration); 9] = [
        (1, criterion_1, Duration::from_secs(5)),
        (2, criterion_2, Duration::from_secs(30)),
        (3, criterion_3, Duration::from_secs(10)),
        (4, criterion_4, Duration::from_secs(30)),
        (5, criterion_5, Duration::from_secs(60)),
        (6, criterion_6, Duration::from_secs(60)),
        (7, criterion_7, Duration::from_secs(20)),
        (8, criterion_8, Duration::from_secs(60)),
        (9, criterion_9, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (k, f, limit) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("criterion {k}: PASS ({:.2}s) {msg}", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {k}: FAIL ({:.2}s) {msg}", took.as_secs_f64());
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
