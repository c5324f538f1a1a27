use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigUint;
use ternary_bounds::asymptotics::{self, AsymptoticPoint, Family as CurveFamily, GRID_POINTS};
use ternary_bounds::bounds::{build_table, TableOptions};
use ternary_bounds::codebook::{self, Codebook};
use ternary_bounds::constructions::{
    coset_scan_construction, default_inner_codes, even_zeros_code, phi_shift_construction,
    signed_binary_code, support_construction, support_construction_size, ShiftStrategy,
    EXHAUSTIVE_SHIFT_LIMIT,
};
use ternary_bounds::counting::{
    avg_ball_volume, binomial, constant_weight_sphere, pair_count_poly, pow, shell_size,
};
use ternary_bounds::search::{
    best_binary_code, exact_A, exact_T, exact_T_constant_weight, greedy_binary_code,
    greedy_gv_code, plotkin_witness_check, GreedyOrder, SearchConfig,
};
use ternary_bounds::{BinaryCode, MinDistance, TernaryCode};

use crate::output::{Cell, Table};
use crate::{
    AsymArgs, ConstructArgs, CountKind, CountsArgs, ExactArgs, Family, MetricArg, OrderArg,
    Outcome, TableArgs, VerifyArgs,
};

fn ok(table: Table) -> Outcome {
    Outcome {
        table,
        failure: None,
    }
}

fn write_codebook(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write codebook {}", path.display()))
}

fn read_codebook(path: &Path) -> Result<Codebook> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read codebook {}", path.display()))?;
    codebook::parse(&text).with_context(|| format!("malformed codebook {}", path.display()))
}

fn search_config(budget: u64, symmetry: bool) -> Result<SearchConfig> {
    let mut cfg = SearchConfig::from_env()?.with_budget(budget);
    cfg.symmetry = symmetry;
    Ok(cfg)
}

pub fn table(a: &TableArgs) -> Result<Outcome> {
    let cfg = search_config(a.budget, true)?;
    let opts = TableOptions {
        search: a.search.then_some(cfg),
        hamming_search: (!a.no_hamming_search).then_some(cfg),
    };
    let t = build_table(a.nmax, a.dmax, &opts)?;
    let mut out = Table::new([
        "n",
        "d",
        "lower",
        "upper",
        "exact",
        "lower_provenance",
        "upper_provenance",
    ]);
    for e in t.entries() {
        out.push(vec![
            e.n.into(),
            e.d.into(),
            e.lower.value.clone().into(),
            e.upper.value.clone().into(),
            e.is_exact().into(),
            e.lower_provenance().into(),
            e.upper_provenance().into(),
        ]);
    }
    Ok(ok(out))
}

pub fn exact(a: &ExactArgs) -> Result<Outcome> {
    let cfg = search_config(a.budget, !a.no_symmetry)?;
    let (space, lower, upper, nodes, witness) = match (a.metric, a.weight) {
        (MetricArg::Hamming, Some(_)) => bail!("--weight applies only to the d1 metric"),
        (MetricArg::Hamming, None) => {
            let out = exact_A(a.q, a.n, a.d, &cfg)?;
            let text = codebook::qary_to_text(a.q, a.n, &out.witness);
            (format!("hamming q={}", a.q), out.lower, out.upper, out.nodes, text)
        }
        (MetricArg::D1, Some(w)) => {
            let out = exact_T_constant_weight(a.n, w, a.d, &cfg)?;
            let text = codebook::ternary_to_text(&out.witness);
            (format!("d1 weight={w}"), out.lower, out.upper, out.nodes, text)
        }
        (MetricArg::D1, None) => {
            let out = exact_T(a.n, a.d, &cfg)?;
            let text = codebook::ternary_to_text(&out.witness);
            ("d1".to_string(), out.lower, out.upper, out.nodes, text)
        }
    };
    if let Some(path) = &a.witness {
        write_codebook(path, &witness)?;
    }
    let mut t = Table::new(["space", "n", "d", "lower", "upper", "status", "nodes"]);
    t.push(vec![
        space.into(),
        a.n.into(),
        a.d.into(),
        lower.into(),
        upper.into(),
        if lower == upper { "exact" } else { "interval" }.into(),
        nodes.into(),
    ]);
    Ok(ok(t))
}

fn input_binary(path: &Option<std::path::PathBuf>) -> Result<Option<BinaryCode>> {
    path.as_deref()
        .map(|p| read_codebook(p)?.into_binary().context("construction input"))
        .transpose()
}

/// `|{y : sum |y_i| <= r}|`, the largest d1 ball of radius `r` in `Q^n`
/// (the zero word is its center).
fn largest_ball(n: usize, r: usize) -> BigUint {
    (0..=n.min(r)).map(|k| binomial(n, k) * pow(2, k)).sum()
}

pub fn construct(a: &ConstructArgs, seed: u64) -> Result<Outcome> {
    let (n, d) = (a.n, a.d);
    let inner_cfg = SearchConfig::default().with_budget(200_000);
    let (code, bound_name, bound): (TernaryCode, String, BigUint) = match a.family {
        Family::EvenZeros => {
            let c = even_zeros_code(n)?;
            if d > 2 {
                bail!("even-zeros has minimum distance 2; requested d = {d}");
            }
            (c, "(3^n+1)/2".into(), (pow(3, n) + 1u32) / 2u32)
        }
        Family::Greedy => {
            let order = match a.order {
                OrderArg::Lex => GreedyOrder::Lexicographic,
                OrderArg::Shuffled => GreedyOrder::Shuffled(seed),
            };
            let c = greedy_gv_code(n, d, order)?;
            let r = d.saturating_sub(1) as usize;
            let bound = num_integer::Integer::div_ceil(&pow(3, n), &largest_ball(n, r));
            (c, format!("ceil(3^n/|B(0,{r})|)"), bound)
        }
        Family::SignedBinary => {
            let b = match input_binary(&a.input)? {
                Some(b) => b,
                None => best_binary_code(n, d.div_ceil(2), &inner_cfg)?,
            };
            let c = signed_binary_code(&b)?;
            (c, "|b|".into(), BigUint::from(b.len()))
        }
        Family::Support | Family::CosetScan => {
            let outer = match input_binary(&a.input)? {
                Some(b) => b,
                None => greedy_binary_code(n, d)?,
            };
            let inner = default_inner_codes(outer.word_len(), d)?;
            if a.family == Family::Support {
                let size = support_construction_size(&outer, &inner);
                let c = support_construction(&outer, &inner, d)?;
                (c, "sum_w A_w |inner(w)|".into(), BigUint::from(size))
            } else {
                let m = outer.word_len();
                let total: BigUint = (0..=m)
                    .map(|w| binomial(m, w) * BigUint::from(inner[&w].len()))
                    .sum();
                let avg = num_integer::Integer::div_ceil(
                    &(BigUint::from(outer.len()) * total),
                    &pow(2, m),
                );
                let (c, _shift) = coset_scan_construction(&outer, &inner, d)?;
                (c, "coset average".into(), avg)
            }
        }
        Family::PhiShift => {
            let b = match input_binary(&a.input)? {
                Some(b) => b,
                None => best_binary_code(2 * n, d, &inner_cfg)?,
            };
            let strategy = if a.trials == 0 && b.word_len() <= EXHAUSTIVE_SHIFT_LIMIT {
                ShiftStrategy::Exhaustive
            } else {
                ShiftStrategy::Randomized {
                    trials: a.trials.max(1),
                    seed,
                }
            };
            let r = phi_shift_construction(&b, strategy)?;
            (r.code, "ceil(|b| 3^n / 4^n)".into(), r.guaranteed)
        }
    };
    if let Some(path) = &a.witness {
        write_codebook(path, &codebook::ternary_to_text(&code))?;
    }
    let md = code.min_d1_distance();
    let meets = BigUint::from(code.len()) >= bound;
    let mut t = Table::new([
        "family",
        "n",
        "d",
        "size",
        "min_distance",
        "distance_ok",
        "bound",
        "bound_value",
        "meets_bound",
    ]);
    let family = clap::ValueEnum::to_possible_value(&a.family)
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    t.push(vec![
        family.into(),
        code.word_len().into(),
        d.into(),
        code.len().into(),
        md.to_string().into(),
        md.at_least(d).into(),
        bound_name.into(),
        bound.into(),
        meets.into(),
    ]);
    let failure = (!md.at_least(d)).then(|| format!("constructed code has minimum distance {md}"));
    Ok(Outcome { table: t, failure })
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let book = read_codebook(&a.code)?;
    let mut t = Table::new(["metric", "n", "size", "min_distance", "required", "ok"]);
    let (metric, n, md) = match &book {
        Codebook::Ternary(c) => ("d1".to_string(), c.word_len(), c.min_d1_distance()),
        Codebook::Hamming { q, n, words } => {
            let mut md = MinDistance::Unbounded;
            for (i, x) in words.iter().enumerate() {
                for y in &words[i + 1..] {
                    let dist = x.iter().zip(y).filter(|(a, b)| a != b).count() as u32;
                    if md.finite().map_or(true, |m| dist < m) {
                        md = MinDistance::Finite(dist);
                    }
                }
            }
            (format!("hamming q={q}"), *n, md)
        }
    };
    let passed = md.at_least(a.d);
    t.push(vec![
        metric.into(),
        n.into(),
        book.word_count().into(),
        md.to_string().into(),
        a.d.into(),
        passed.into(),
    ]);
    if let (Codebook::Ternary(c), true) = (&book, passed && !book_is_empty(&book)) {
        let r = plotkin_witness_check(c, a.d)?;
        t.header.extend(
            ["pair_sum", "pair_lower", "column_upper", "plotkin_chain"].map(String::from),
        );
        let row = t.rows.last_mut().expect("one row");
        row.push(Cell::Int(BigUint::from(r.direct_sum)));
        row.push(Cell::Int(BigUint::from(r.pair_lower)));
        row.push(Cell::Int(BigUint::from(r.column_upper)));
        row.push(Cell::Bool(r.identity_holds() && r.chain_holds()));
    }
    let failure = (!passed).then(|| {
        format!(
            "{} has minimum distance {md}, below the required {}",
            a.code.display(),
            a.d
        )
    });
    Ok(Outcome { table: t, failure })
}

fn book_is_empty(b: &Codebook) -> bool {
    b.word_count() == 0
}

pub fn counts(a: &CountsArgs) -> Result<Outcome> {
    let n = a.n;
    let t = match a.kind {
        CountKind::Pairs => {
            let poly = pair_count_poly(n);
            let mut t = Table::new(["n", "w", "pairs"]);
            for w in 0..=2 * n {
                t.push(vec![n.into(), w.into(), poly.get(w).into()]);
            }
            t
        }
        CountKind::Shell => {
            let Some(w) = a.w else {
                bail!("--kind shell needs --w");
            };
            if w > n {
                bail!("shell weight {w} exceeds length {n}");
            }
            let mut t = Table::new(["n", "w", "distance", "words", "shell_size"]);
            for dist in 0..=2 * n {
                t.push(vec![
                    n.into(),
                    w.into(),
                    dist.into(),
                    constant_weight_sphere(n, w, dist).into(),
                    shell_size(n, w).into(),
                ]);
            }
            t
        }
        CountKind::Ball => {
            let poly = pair_count_poly(n);
            let mut t = Table::new(["n", "radius", "pairs_within", "average_ball", "gv_bound"]);
            for r in 0..=2 * n {
                let within = poly.cumulative(r);
                let gv = num_integer::Integer::div_ceil(&pow(9, n), &within);
                t.push(vec![
                    n.into(),
                    r.into(),
                    within.into(),
                    avg_ball_volume(n, r).to_string().into(),
                    gv.into(),
                ]);
            }
            t
        }
    };
    Ok(ok(t))
}

pub fn asym(a: &AsymArgs) -> Result<Outcome> {
    if a.verify_optimizers {
        let checks = asymptotics::verify_optimizers(GRID_POINTS);
        let mut t = Table::new(["check", "delta", "closed_form", "grid_sup", "gap", "status"]);
        let mut failed = 0;
        for c in &checks {
            if !c.passed() {
                failed += 1;
            }
            t.push(vec![
                c.family.into(),
                c.delta.into(),
                c.closed_form.into(),
                c.grid.into(),
                c.gap().into(),
                if c.passed() { "pass" } else { "fail" }.into(),
            ]);
        }
        let failure = (failed > 0).then(|| format!("{failed} optimizer checks failed"));
        return Ok(Outcome { table: t, failure });
    }
    let families: Vec<CurveFamily> = if a.families.is_empty() {
        CurveFamily::ALL.to_vec()
    } else {
        a.families
            .iter()
            .map(|s| {
                CurveFamily::from_name(s.trim())
                    .with_context(|| format!("unknown family `{s}`"))
            })
            .collect::<Result<_>>()?
    };
    let deltas = asymptotics::delta_grid(a.from, a.to, a.step)?;
    let points = asymptotics::curve_export(&deltas)?;
    let mut header = vec!["delta".to_string()];
    for f in &families {
        header.push(f.name().to_string());
        header.extend(f.optimizer_columns().iter().map(|s| s.to_string()));
    }
    let mut t = Table::new(header);
    for p in &points {
        t.push(curve_row(p, &families));
    }
    Ok(ok(t))
}

fn curve_row(p: &AsymptoticPoint, families: &[CurveFamily]) -> Vec<Cell> {
    let mut row = vec![Cell::Float(p.delta)];
    for &f in families {
        row.push(Cell::Float(p.value(f)));
        row.extend(p.optimizers(f).into_iter().map(Cell::Text));
    }
    row
}
