//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Random-string averages run up to n = 2560 by default; set
//! `PLST_ACCEPTANCE_FULL=1` for the whole range up to 10240.

mod common;

use std::time::{Duration, Instant};

use plst::corpus::{self, CorpusSpec, Family, Mode};
use plst::experiment::{self, CountRow, Options};
use plst::index::compute_re_sign;
use plst::matching::{p_match, p_match_fast, p_match_traced, Variant};
use plst::pv::{prev_encode, Alphabet, PStr, PvStr};
use plst::trie::{closure_excess_count, naive_pmatch};
use plst::{decide, locate, Plst, Stats};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
    /// Failures whose cause has been pinned down and is asserted below.
    explained: bool,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
            explained: false,
        }
    }
}

/// Texts gathered along the way for the size-bound and label checks.
#[derive(Default)]
struct Collected {
    stats: Vec<Stats>,
    small_texts: Vec<PStr>,
}

impl Collected {
    fn add_text(&mut self, text: &PStr) {
        if text.len() <= 300 {
            self.small_texts.push(text.clone());
        }
    }
}

// Type 1 / Type 2 counts per row: (n, constant, p-string).
type Row = (usize, (usize, usize), (usize, usize));

const FIBONACCI: [Row; 11] = [
    (90, (178, 12), (177, 12)),
    (145, (285, 12), (285, 13)),
    (234, (466, 15), (465, 15)),
    (378, (751, 15), (751, 16)),
    (611, (1220, 18), (1219, 18)),
    (988, (1971, 18), (1971, 19)),
    (1598, (3194, 21), (3193, 21)),
    (2585, (5165, 21), (5165, 22)),
    (4182, (8362, 24), (8361, 24)),
    (6766, (13527, 24), (13552, 25)),
    (10947, (21892, 27), (21918, 27)),
];

const THUE_MORSE: [Row; 10] = [
    (17, (28, 10), (29, 6)),
    (33, (56, 14), (57, 8)),
    (65, (112, 18), (113, 10)),
    (129, (224, 22), (225, 12)),
    (257, (448, 26), (449, 14)),
    (513, (896, 30), (897, 16)),
    (1025, (1792, 34), (1793, 18)),
    (2049, (3584, 38), (3585, 20)),
    (4097, (7168, 42), (7169, 22)),
    (8193, (14336, 46), (14337, 24)),
];

const PERIOD_DOUBLING: [Row; 10] = [
    (17, (30, 7), (31, 9)),
    (33, (64, 11), (61, 11)),
    (65, (126, 13), (127, 15)),
    (129, (256, 17), (253, 17)),
    (257, (510, 19), (511, 21)),
    (513, (1024, 23), (1021, 23)),
    (1025, (2046, 25), (2047, 27)),
    (2049, (4096, 29), (4093, 29)),
    (4097, (8190, 31), (8191, 33)),
    (8193, (16384, 35), (16381, 35)),
];

// Mean Type 1 / Type 2 counts: (n, constant, p-string).
type MeanRow = (usize, (f64, f64), (f64, f64));

const RANDOM: [MeanRow; 11] = [
    (10, (16.98, 6.04), (16.93, 5.23)),
    (20, (35.66, 12.78), (35.72, 12.27)),
    (40, (74.58, 27.25), (74.53, 26.22)),
    (80, (153.61, 56.82), (153.48, 56.04)),
    (160, (312.37, 115.55), (312.45, 115.24)),
    (320, (631.40, 234.55), (631.27, 235.32)),
    (640, (1270.34, 477.29), (1270.47, 475.34)),
    (1280, (2549.35, 956.18), (2549.39, 957.03)),
    (2560, (5108.37, 1923.62), (5108.48, 1922.97)),
    (5120, (10227.48, 3845.35), (10227.29, 3853.97)),
    (10240, (20466.49, 7710.50), (20466.14, 7704.25)),
];

fn expected(rows: &[Row], n: usize, mode: Mode) -> (usize, usize) {
    let row = rows.iter().find(|r| r.0 == n).expect("row for n");
    match mode {
        Mode::Constant => row.1,
        Mode::Parameter => row.2,
    }
}

fn word_rows(family: Family, col: &mut Collected) -> Vec<CountRow> {
    let rows = experiment::count_rows(family, &Options::default()).unwrap();
    for r in &rows {
        col.stats.push(r.stats);
    }
    for k in experiment::word_indices(family).unwrap() {
        for mode in Mode::BOTH {
            let text = CorpusSpec {
                family,
                param: k,
                mode,
                seed: 0,
            }
            .generate()
            .with_sentinel();
            col.add_text(&text);
        }
    }
    rows
}

/// Compares table rows exactly; returns the mismatching cells.
fn compare(rows: &[CountRow], table: &[Row]) -> Vec<String> {
    let mut bad = Vec::new();
    for r in rows {
        let want = expected(table, r.stats.n, r.mode);
        let got = (r.stats.type1, r.stats.type2);
        if got != want {
            bad.push(format!(
                "n={} {}: got {}/{} want {}/{}",
                r.stats.n,
                r.mode.name(),
                got.0,
                got.1,
                want.0,
                want.1
            ));
        }
    }
    if rows.len() != 2 * table.len() {
        bad.push(format!("{} rows, want {}", rows.len(), 2 * table.len()));
    }
    bad
}

fn criterion_1(col: &mut Collected) -> Outcome {
    let started = Instant::now();
    let rows = word_rows(Family::Fibonacci, col);
    let bad = compare(&rows, &FIBONACCI);
    let secs = started.elapsed().as_secs_f64();
    if bad.is_empty() {
        return Outcome::new(secs < 120.0, format!("22 rows exact in {secs:.1}s"));
    }
    // The only cells allowed to differ are the two whose listed Type 1 count
    // exceeds 2n, which no index can reach (at most n leaves, n - 1
    // branching nodes and the root).
    let impossible: Vec<&Row> = FIBONACCI.iter().filter(|r| r.2 .0 > 2 * r.0).collect();
    let explained = impossible.len() == 2
        && bad.len() == 2
        && rows.iter().all(|r| {
            let want = expected(&FIBONACCI, r.stats.n, r.mode);
            let over = want.0 > 2 * r.stats.n;
            (r.stats.type1 == want.0 || over) && r.stats.type2 == want.1
        });
    Outcome {
        pass: false,
        detail: format!(
            "{} of 44 cells differ [{}]; listed values exceed the 2n bound on Type 1 nodes; {secs:.1}s",
            bad.len(),
            bad.join("; ")
        ),
        explained,
    }
}

fn criterion_2(col: &mut Collected) -> Outcome {
    let started = Instant::now();
    let mut bad = compare(&word_rows(Family::ThueMorse, col), &THUE_MORSE);
    bad.extend(compare(
        &word_rows(Family::PeriodDoubling, col),
        &PERIOD_DOUBLING,
    ));
    let secs = started.elapsed().as_secs_f64();
    Outcome::new(
        bad.is_empty() && secs < 300.0,
        if bad.is_empty() {
            format!("40 rows exact in {secs:.1}s")
        } else {
            bad.join("; ")
        },
    )
}

fn criterion_3(col: &mut Collected, full: bool) -> Outcome {
    let cap = if full { 10240 } else { 2560 };
    let opts = Options::default();
    let mut worst = (0.0f64, String::new());
    let mut pass = true;
    for &(n, c, p) in RANDOM.iter().filter(|r| r.0 <= cap) {
        for (mode, want) in [(Mode::Constant, c), (Mode::Parameter, p)] {
            let trials = experiment::random_trials(n, mode, &opts).unwrap();
            col.stats.extend(&trials);
            if n <= 300 {
                for t in 0..opts.trials {
                    let seed = experiment::random_seed(opts.seed, n, t);
                    col.add_text(&corpus::random_pstring(n - 1, 2, mode, seed).with_sentinel());
                }
            }
            let row = experiment::summarize(n, mode, &trials);
            let tol = if n >= 160 { 0.05 } else { 0.15 };
            for (got, want, what) in [
                (row.type1_mean, want.0, "type1"),
                (row.type2_mean, want.1, "type2"),
            ] {
                let rel = (got - want).abs() / want;
                if rel > tol {
                    pass = false;
                }
                if rel > worst.0 {
                    worst = (
                        rel,
                        format!("n={n} {} {what}: {got:.2} vs {want:.2}", mode.name()),
                    );
                }
            }
        }
    }
    Outcome::new(
        pass,
        format!(
            "n <= {cap}, 100 trials each; largest relative deviation {:.2}% at {}",
            worst.0 * 100.0,
            worst.1
        ),
    )
}

struct MatchRun {
    pairs: usize,
    discrepancies: usize,
    max_follow_ratio: f64,
    follow_violations: usize,
}

fn matching_pairs(col: &mut Collected) -> MatchRun {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let alphabet = common::mixed_alphabet();
    let mut run = MatchRun {
        pairs: 0,
        discrepancies: 0,
        max_follow_ratio: 0.0,
        follow_violations: 0,
    };
    for _ in 0..200 {
        let pool = common::random_pool(&mut rng);
        let len = rng.gen_range(1..=300);
        let letters = common::random_letters(&mut rng, len, &pool);
        let text = alphabet.encode(&letters).with_sentinel();
        col.add_text(&text);
        let plst = Plst::build(&text).unwrap();
        col.stats.push(plst.stats());
        for _ in 0..60 {
            let m = rng.gen_range(1..=20);
            let pat = if rng.gen_bool(0.5) && m <= len {
                let i = rng.gen_range(0..=len - m);
                common::rename_params(&mut rng, &letters[i..i + m])
            } else {
                common::random_letters(&mut rng, m, &pool)
            };
            let p = alphabet.encode(&pat);
            let naive = naive_pmatch(&text, &p);
            let pv = prev_encode(&p);
            let (fast, trace) = p_match_traced(&plst, &pv, Plst::ROOT, Variant::FastLinks);
            let ok = locate(&plst, &p).unwrap().occurrences == naive
                && decide(&plst, &p).unwrap().matched == !naive.is_empty()
                && p_match(&plst, &pv, Plst::ROOT) == fast
                && p_match_fast(&plst, &pv, Plst::ROOT) == fast;
            run.pairs += 1;
            if !ok {
                run.discrepancies += 1;
            }
            if fast.is_some() {
                let ratio = trace.link_follows as f64 / m as f64;
                run.max_follow_ratio = run.max_follow_ratio.max(ratio);
                if trace.link_follows > 2 * m {
                    run.follow_violations += 1;
                }
            }
        }
    }
    run
}

fn criterion_4(run: &MatchRun, secs: f64) -> Outcome {
    Outcome::new(
        run.pairs >= 10_000 && run.discrepancies == 0 && secs < 120.0,
        format!(
            "{} pairs, {} discrepancies, {secs:.1}s",
            run.pairs, run.discrepancies
        ),
    )
}

fn criterion_5() -> Outcome {
    let a = Alphabet::with_params(b"uvxy");
    let text = a.encode(b"auvaubuavbv$");
    let occ = locate(&Plst::build(&text).unwrap(), &a.encode(b"xayby"))
        .unwrap()
        .occurrences;
    let prev = prev_encode(&a.encode(b"uvvvauuvb"));
    let re = compute_re_sign(&PvStr::parse("0 a c b 4 0").unwrap(), 2);
    let pass = occ == vec![3, 7] && prev == PvStr::parse("0 0 1 1 a 5 1 4 b").unwrap() && re == 3;
    Outcome::new(
        pass,
        format!("occurrences {occ:?}, prev(uvvvauuvb) = {prev}, Re(0acb40) = {re}"),
    )
}

fn criterion_6(col: &mut Collected) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let alphabet = common::mixed_alphabet();
    for _ in 0..1000 {
        let pool = common::random_pool(&mut rng);
        let len = rng.gen_range(1..=400);
        let text = alphabet
            .encode(&common::random_letters(&mut rng, len, &pool))
            .with_sentinel();
        col.add_text(&text);
        col.stats.push(Plst::build(&text).unwrap().stats());
    }
    let violations = col
        .stats
        .iter()
        .filter(|s| !(s.type1 <= 2 * s.n && s.type2 < 2 * s.n && s.ref_text_len <= s.n))
        .count();
    Outcome::new(
        violations == 0,
        format!(
            "{} indexes checked, {violations} violations",
            col.stats.len()
        ),
    )
}

fn pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    sxy / (sxx * syy).sqrt()
}

/// Seconds per query for each pattern. Rounds visit every pattern in turn
/// and the minimum is kept, so a stall of the machine hits one sample only.
fn time_queries(plst: &Plst, patterns: &[PvStr]) -> Vec<f64> {
    let mut best = vec![f64::INFINITY; patterns.len()];
    for _ in 0..9 {
        for (p, best) in patterns.iter().zip(&mut best) {
            let mut reps = 0u32;
            let started = Instant::now();
            while started.elapsed() < Duration::from_millis(10) {
                let (hit, _) = p_match_traced(plst, p, Plst::ROOT, Variant::FastLinks);
                assert!(hit.is_some());
                reps += 1;
            }
            *best = best.min(started.elapsed().as_secs_f64() / reps as f64);
        }
    }
    best
}

fn criterion_7(run: &MatchRun) -> Outcome {
    let text = CorpusSpec {
        family: Family::Fibonacci,
        param: 21,
        mode: Mode::Parameter,
        seed: 0,
    }
    .generate()
    .with_sentinel();
    let plst = Plst::build(&text).unwrap();
    let ms: Vec<usize> = [10, 100, 500]
        .into_iter()
        .chain((1..=10).map(|i| i * 1000))
        .collect();
    // Substrings of the text starting at a fixed offset.
    let patterns: Vec<PvStr> = ms
        .iter()
        .map(|&m| prev_encode(&text[100..100 + m]))
        .collect();
    let worst_ratio = ms
        .iter()
        .zip(&patterns)
        .map(|(&m, p)| {
            let (_, trace) = p_match_traced(&plst, p, Plst::ROOT, Variant::FastLinks);
            trace.link_follows as f64 / m as f64
        })
        .fold(0.0, f64::max);
    let times = time_queries(&plst, &patterns);
    let xs: Vec<f64> = ms.iter().map(|&m| m as f64).collect();
    let r = pearson(&xs, &times);
    Outcome::new(
        run.follow_violations == 0 && worst_ratio <= 2.0 && r >= 0.98,
        format!(
            "max follows/m {:.2} over random pairs, {:.2} on n=10947; time~m correlation {r:.4}; {:.1}us at m=10000",
            run.max_follow_ratio,
            worst_ratio,
            times.last().unwrap() * 1e6
        ),
    )
}

fn criterion_8(col: &Collected) -> Outcome {
    let mut edges_bad = 0;
    for text in &col.small_texts {
        edges_bad += common::label_discrepancies(text);
    }
    Outcome::new(
        edges_bad == 0,
        format!(
            "{} indexes with n <= 300, {edges_bad} discrepancies",
            col.small_texts.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let a = Alphabet::with_params(b"wxyz");
    let plst = Plst::build(&a.encode(b"xyabzwabzxbz$")).unwrap();
    let t_prime = plst.ref_text().concatenated();
    let mut nonempty = 0;
    for family in [Family::Fibonacci, Family::ThueMorse, Family::PeriodDoubling] {
        let rows = experiment::count_rows(family, &Options::default()).unwrap();
        nonempty += rows.iter().filter(|r| r.stats.ref_text_len != 0).count();
    }
    Outcome::new(
        t_prime.len() == 6 && t_prime == PvStr::parse("a b 0 0 4 9").unwrap() && nonempty == 0,
        format!(
            "T' = {t_prime} (length {}), {nonempty} word-family texts with nonempty T'",
            t_prime.len()
        ),
    )
}

/// R² of the least-squares fit `y = a + b x + c x²`.
fn quadratic_r2(xs: &[f64], ys: &[f64]) -> f64 {
    let mut m = [[0.0f64; 4]; 3];
    for (&x, &y) in xs.iter().zip(ys) {
        let row = [1.0, x, x * x];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += row[i] * row[j];
            }
            m[i][3] += row[i] * y;
        }
    }
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        m.swap(col, pivot);
        let pivot_row = m[col];
        for (r, row) in m.iter_mut().enumerate() {
            if r != col {
                let f = row[col] / pivot_row[col];
                for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x -= f * p;
                }
            }
        }
    }
    let coef: Vec<f64> = (0..3).map(|i| m[i][3] / m[i][i]).collect();
    let mean = ys.iter().sum::<f64>() / ys.len() as f64;
    let ss_tot: f64 = ys.iter().map(|y| (y - mean).powi(2)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| (y - (coef[0] + coef[1] * x + coef[2] * x * x)).powi(2))
        .sum();
    1.0 - ss_res / ss_tot
}

fn criterion_10() -> Outcome {
    let t3 = closure_excess_count(&corpus::appendix_tn(3)).unwrap();
    let ns: Vec<usize> = (2..=8).collect();
    let excess: Vec<f64> = ns
        .iter()
        .map(|&n| closure_excess_count(&corpus::appendix_tn(n)).unwrap() as f64)
        .collect();
    let xs: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    let r2 = quadratic_r2(&xs, &excess);
    Outcome::new(
        t3 == 12 && r2 >= 0.999,
        format!("excess(T3) = {t3}; excess for n=2..8 {excess:?}; quadratic R^2 = {r2:.6}"),
    )
}

fn main() {
    // `cargo test` passes harness flags such as `--list`; nothing to list.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let full = std::env::var("PLST_ACCEPTANCE_FULL").is_ok_and(|v| v == "1");
    let mut col = Collected::default();
    let mut results = Vec::new();
    let mut report = |id: usize, o: Outcome| {
        println!(
            "criterion {id}: {} ({})",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        results.push((id, o));
    };

    report(1, criterion_1(&mut col));
    report(2, criterion_2(&mut col));
    report(3, criterion_3(&mut col, full));
    let started = Instant::now();
    let run = matching_pairs(&mut col);
    report(4, criterion_4(&run, started.elapsed().as_secs_f64()));
    report(5, criterion_5());
    report(6, criterion_6(&mut col));
    report(7, criterion_7(&run));
    report(8, criterion_8(&col));
    report(9, criterion_9());
    report(10, criterion_10());

    let passed = results.iter().filter(|(_, o)| o.pass).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    let unexplained: Vec<usize> = results
        .iter()
        .filter(|(_, o)| !o.pass && !o.explained)
        .map(|(id, _)| *id)
        .collect();
    if !unexplained.is_empty() {
        eprintln!("unexplained failures: {unexplained:?}");
        std::process::exit(1);
    }
}
