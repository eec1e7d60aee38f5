//! Named verification suites: each one runs the desk-scale checks for one
//! of the characterization or enumeration results, printing one pass/fail
//! line per property and a counterexample on failure.

use std::collections::BTreeMap;

use patience_core::enumeration::{
    bell_sequence, convolution_matrix, convolution_triangle, convolved_fibonacci,
    functional_equation_check, inverse_matrix, kernel_equation_check, kernel_root_series,
    neumann_check, solve_counts, totals_by_convolution, BigUint, CountTable, Series, SeriesError,
};
use patience_core::geometry::{crossings, exhaustive_iterates, shadow_diagram};
use patience_core::patience::{
    extended_patience_sort, has_unique_preimage, patience_sort, preimages,
};
use patience_core::patterns::{
    avoids, avoids_word, is_layered, is_strongly_monotone, parse_pattern, rows_monotone,
    GenPattern,
};
use patience_core::perm::{Permutation, PileConfig};

use crate::oracle::lis_dp;
use crate::sweep::{sweep_count, sweep_find_violation, sweep_fold};

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl Check {
    fn pass(label: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass: true,
            detail: None,
        }
    }

    fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass: false,
            detail: Some(detail.into()),
        }
    }

    fn verdict(label: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Check::pass(label)
        } else {
            Check::fail(label, detail)
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub header: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = format!("suite {} — {}\n", self.suite, self.header);
        for c in &self.checks {
            if c.pass {
                out.push_str(&format!("PASS {}\n", c.label));
            } else {
                out.push_str(&format!(
                    "FAIL {} ({})\n",
                    c.label,
                    c.detail.as_deref().unwrap_or("no detail")
                ));
            }
        }
        out
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "thm2.2", "cor2.4", "prop3.1", "prop3.2", "cor3.4", "thm3.5", "thm3.6", "thm3.7", "thm3.9",
    "series",
];

/// Runs the named suite with the given exhaustive bound; `None` for an
/// unknown name.
pub fn run_suite(name: &str, bound: usize) -> Option<SuiteReport> {
    match name {
        "thm2.2" => Some(suite_thm22(bound)),
        "cor2.4" => Some(suite_cor24(bound)),
        "prop3.1" => Some(suite_prop31(bound)),
        "prop3.2" => Some(suite_prop32(bound)),
        "cor3.4" => Some(suite_cor34(bound)),
        "thm3.5" => Some(suite_thm35(bound)),
        "thm3.6" => Some(suite_thm36(bound)),
        "thm3.7" => Some(suite_thm37(bound)),
        "thm3.9" => Some(suite_thm39(bound)),
        "series" => Some(suite_series(bound)),
        _ => None,
    }
}

fn pat(text: &str) -> GenPattern {
    parse_pattern(text).expect("suite pattern parses")
}

fn word_str(w: &[u32]) -> String {
    if w.is_empty() {
        "(empty)".into()
    } else {
        w.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn perm(w: &[u32]) -> Permutation {
    Permutation::from_slice(w).expect("sweep word")
}

/// Checks `pred` on every permutation of every `S_n`, `n <= bound`.
fn forall_perms(
    label: impl Into<String>,
    bound: usize,
    pred: impl Fn(&[u32]) -> bool + Sync,
) -> Check {
    for n in 0..=bound {
        if let Some(w) = sweep_find_violation(n, &pred) {
            return Check::fail(
                label,
                format!("counterexample at n = {n}: {}", word_str(&w)),
            );
        }
    }
    Check::pass(label)
}

/// Distinct pile configurations of `S_n` with their class sizes.
fn configuration_classes(n: usize) -> BTreeMap<PileConfig, u64> {
    sweep_fold(
        n,
        BTreeMap::new,
        |mut acc: BTreeMap<PileConfig, u64>, w| {
            *acc.entry(patience_sort(&perm(w))).or_insert(0) += 1;
            acc
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )
}

pub fn suite_thm22(bound: usize) -> SuiteReport {
    let barred = pat("3-!1-42");
    let dashed = pat("3-!1-4-2");
    let unbarred = pat("23-1");
    let bells = bell_sequence(bound);
    let mut checks = Vec::new();

    checks.push(forall_perms(
        format!("S_n(3-!1-42) = S_n(3-!1-4-2) = S_n(23-1) pointwise for n <= {bound}"),
        bound,
        |w| {
            let a = avoids_word(w, &barred);
            a == avoids_word(w, &dashed) && a == avoids_word(w, &unbarred)
        },
    ));

    let mut bell_check = Check::pass(format!("|S_n(3-!1-42)| = B_n for n <= {bound}"));
    for n in 0..=bound {
        let c = sweep_count(n, |w| avoids_word(w, &barred));
        if BigUint::from(c) != bells[n] {
            bell_check = Check::fail(
                format!("|S_n(3-!1-42)| = B_n for n <= {bound}"),
                format!("n = {n}: counted {c}, Bell triangle gives {}", bells[n]),
            );
            break;
        }
    }
    checks.push(bell_check);

    let class_cap = bound.min(8);
    let mut class_check = Check::pass(format!(
        "number of distinct pile configurations is B_n for n <= {class_cap}"
    ));
    for n in 0..=class_cap {
        let classes = configuration_classes(n);
        if BigUint::from(classes.len() as u64) != bells[n] {
            class_check = Check::fail(
                format!("number of distinct pile configurations is B_n for n <= {class_cap}"),
                format!("n = {n}: {} classes, want {}", classes.len(), bells[n]),
            );
            break;
        }
    }
    checks.push(class_check);

    let class_cap2 = bound.min(7);
    checks.push(forall_perms(
        format!("each sorting-equivalence class holds exactly one 3-!1-42 avoider, its RPW, for n <= {class_cap2}"),
        class_cap2,
        |w| {
            let rpw = patience_sort(&perm(w)).reverse_patience_word();
            let w_avoids = avoids_word(w, &barred);
            // the RPW always avoids; any other member must not
            avoids(&rpw, &barred) && (w_avoids == (rpw.as_slice() == w))
        },
    ));

    SuiteReport {
        suite: "thm2.2",
        header: format!(
            "avoiding the barred pattern 3-!1-42 coincides with avoiding 3-!1-4-2 and 23-1, \
             and the avoiders are counted by the Bell numbers (bound {bound})"
        ),
        checks,
    }
}

pub fn suite_cor24(bound: usize) -> SuiteReport {
    let q = [pat("31-!4-2"), pat("3-1-!4-2"), pat("3-12")];
    let classic_front = pat("!2-4-1-3");
    let classic_back = pat("2-4-1-!3");
    let block_front = pat("!2-41-3");
    let block_back = pat("2-41-!3");
    let barred_314 = pat("3-!1-42");
    let bells = bell_sequence(bound);
    let mut checks = Vec::new();

    checks.push(forall_perms(
        format!("S_n(31-!4-2) = S_n(3-1-!4-2) = S_n(3-12) pointwise for n <= {bound}"),
        bound,
        |w| {
            let a = avoids_word(w, &q[0]);
            a == avoids_word(w, &q[1]) && a == avoids_word(w, &q[2])
        },
    ));

    // The printed four-way equality of the companion family fails under the
    // every-occurrence-extends semantics (231 separates the front- and
    // back-barred forms); what does hold is the reverse-complement duality
    // within each form.
    checks.push(forall_perms(
        format!(
            "w avoids !2-4-1-3 iff reverse-complement(w) avoids 2-4-1-!3, and likewise \
             for !2-41-3 against 2-41-!3, n <= {bound}"
        ),
        bound,
        |w| {
            let rc = perm(w).reverse().complement();
            avoids_word(w, &classic_front) == avoids(&rc, &classic_back)
                && avoids_word(w, &block_front) == avoids(&rc, &block_back)
        },
    ));

    let label =
        format!("|S_n(!2-4-1-3)| = |S_n(31-!4-2)| = |S_n(3-!1-42)| = B_n for n <= {bound}");
    let mut count_check = Check::pass(&*label);
    for n in 0..=bound {
        let (c1, c2, c3) = sweep_fold(
            n,
            || (0u64, 0u64, 0u64),
            |(a, b, c), w| {
                (
                    a + u64::from(avoids_word(w, &classic_front)),
                    b + u64::from(avoids_word(w, &q[0])),
                    c + u64::from(avoids_word(w, &barred_314)),
                )
            },
            |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2),
        );
        if c1 != c2 || c2 != c3 || BigUint::from(c1) != bells[n] {
            count_check = Check::fail(
                &*label,
                format!("n = {n}: counts {c1}, {c2}, {c3}, Bell {}", bells[n]),
            );
            break;
        }
    }
    checks.push(count_check);

    checks.push(forall_perms(
        format!("w avoids 3-!1-42 iff inverse(w) avoids !2-4-1-3, n <= {bound}"),
        bound,
        |w| avoids_word(w, &barred_314) == avoids(&perm(w).inverse(), &classic_front),
    ));

    SuiteReport {
        suite: "cor2.4",
        header: format!(
            "the companion barred patterns 31-!4-2 and !2-4-1-3: unbarred equivalents, \
             reverse-complement duality, inverse transport, and Bell-number counts \
             (bound {bound})"
        ),
        checks,
    }
}

fn monotone_pattern(k: usize, increasing: bool) -> GenPattern {
    let digits: Vec<String> = if increasing {
        (1..=k).map(|d| d.to_string()).collect()
    } else {
        (1..=k).rev().map(|d| d.to_string()).collect()
    };
    pat(&digits.join("-"))
}

pub fn suite_prop31(bound: usize) -> SuiteReport {
    let mut checks = Vec::new();
    // single-digit pattern letters cap the monotone pattern length at 9
    let cap = bound.min(8);

    let mut count_check = Check::pass(format!(
        "|{{w : <= k piles}}| = |S_n(1-2-..-(k+1))| and |{{w : all piles <= k cards}}| = \
         |S_n((k+1)-..-2-1)| for n <= {cap}, all k"
    ));
    'outer: for n in 0..=cap {
        let (pile_hist, depth_hist) = sweep_fold(
            n,
            || (vec![0u64; n + 1], vec![0u64; n + 1]),
            |(mut piles, mut depth), w| {
                let r = patience_sort(&perm(w));
                piles[r.pile_count()] += 1;
                depth[r.max_pile_len()] += 1;
                (piles, depth)
            },
            |(mut a1, mut a2), (b1, b2)| {
                for (x, y) in a1.iter_mut().zip(b1) {
                    *x += y;
                }
                for (x, y) in a2.iter_mut().zip(b2) {
                    *x += y;
                }
                (a1, a2)
            },
        );
        for k in 1..=n {
            let incr = monotone_pattern(k + 1, true);
            let decr = monotone_pattern(k + 1, false);
            let by_piles: u64 = pile_hist[..=k].iter().sum();
            let by_incr = sweep_count(n, |w| avoids_word(w, &incr));
            let by_depth: u64 = depth_hist[..=k].iter().sum();
            let by_decr = sweep_count(n, |w| avoids_word(w, &decr));
            if by_piles != by_incr || by_depth != by_decr {
                count_check = Check::fail(
                    count_check.label.clone(),
                    format!(
                        "n = {n}, k = {k}: piles {by_piles} vs increasing-avoiders {by_incr}, \
                         depths {by_depth} vs decreasing-avoiders {by_decr}"
                    ),
                );
                break 'outer;
            }
        }
    }
    checks.push(count_check);

    checks.push(forall_perms(
        format!("pile count equals the longest increasing subsequence length for n <= {cap}"),
        cap,
        |w| patience_sort(&perm(w)).pile_count() == lis_dp(w),
    ));

    SuiteReport {
        suite: "prop3.1",
        header: format!(
            "monotone-pattern avoidance versus pile statistics: pile-count and pile-depth \
             bounds match the avoidance counts, and pile count is the longest increasing \
             subsequence length (bound {bound})"
        ),
        checks,
    }
}

fn piles_hold_successive_values(r: &PileConfig) -> bool {
    r.piles()
        .iter()
        .all(|p| (p.bottom() - p.top()) as usize + 1 == p.len())
}

pub fn suite_prop32(bound: usize) -> SuiteReport {
    let barred = pat("3-!1-42");
    // the classical companion; the blocked form !2-41-3 admits strictly more
    // avoiders from n = 5 on and fails this characterization
    let companion = pat("!2-4-1-3");
    let mut checks = Vec::new();

    checks.push(forall_perms(
        format!("w avoids 3-!1-42 iff RPW(R(w)) = w, n <= {bound}"),
        bound,
        |w| {
            let fixed = patience_sort(&perm(w)).reverse_patience_word().as_slice() == w;
            avoids_word(w, &barred) == fixed
        },
    ));

    checks.push(forall_perms(
        format!("w avoids !2-4-1-3 iff every pile of R(w) holds successive values, n <= {bound}"),
        bound,
        |w| {
            let succ = piles_hold_successive_values(&patience_sort(&perm(w)));
            avoids_word(w, &companion) == succ
        },
    ));

    SuiteReport {
        suite: "prop3.2",
        header: format!(
            "reverse patience words are exactly the 3-!1-42 avoiders; !2-4-1-3 avoiders are \
             exactly the permutations whose piles hold successive values (bound {bound})"
        ),
        checks,
    }
}

pub fn suite_cor34(bound: usize) -> SuiteReport {
    let barred = pat("3-!1-42");
    let companion = pat("!2-41-3");
    let mut checks = Vec::new();

    checks.push(forall_perms(
        format!("w is layered iff it avoids both 3-!1-42 and !2-41-3, n <= {bound}"),
        bound,
        |w| (avoids_word(w, &barred) && avoids_word(w, &companion)) == is_layered(&perm(w)),
    ));

    let label = format!("layered permutations number 2^(n-1) for 1 <= n <= {bound}");
    let mut count_check = Check::pass(&*label);
    for n in 1..=bound {
        let c = sweep_count(n, |w| is_layered(&perm(w)));
        if c != 1u64 << (n - 1) {
            count_check = Check::fail(&*label, format!("n = {n}: {c}"));
            break;
        }
    }
    checks.push(count_check);

    SuiteReport {
        suite: "cor3.4",
        header: format!(
            "layered permutations are exactly the simultaneous avoiders of 3-!1-42 and \
             !2-41-3 (bound {bound})"
        ),
        checks,
    }
}

pub fn suite_thm35(bound: usize) -> SuiteReport {
    let barred = pat("3-!1-42");
    let second = pat("31-!4-2");
    let mut checks = Vec::new();

    checks.push(forall_perms(
        format!(
            "w avoids {{3-!1-42, 31-!4-2}} iff w is an RPW whose shadow diagram has no \
             crossings, n <= {bound}"
        ),
        bound,
        |w| {
            let in_set = avoids_word(w, &barred) && avoids_word(w, &second);
            let q = perm(w);
            let fixed = patience_sort(&q).reverse_patience_word() == q;
            let no_cross = crossings(&shadow_diagram(&q)).is_empty();
            in_set == (fixed && no_cross)
        },
    ));

    checks.push(forall_perms(
        format!(
            "for avoiders of {{3-!1-42, 31-!4-2}} the bottom rows of both pile \
             configurations increase, n <= {bound}"
        ),
        bound,
        |w| {
            if !(avoids_word(w, &barred) && avoids_word(w, &second)) {
                return true;
            }
            let pair = extended_patience_sort(&perm(w));
            let bottoms_up = |c: &PileConfig| {
                c.piles().windows(2).all(|p| p[0].bottom() < p[1].bottom())
            };
            bottoms_up(pair.insertion()) && bottoms_up(pair.recording())
        },
    ));

    SuiteReport {
        suite: "thm3.5",
        header: format!(
            "non-crossing 0-th iterate shadow diagrams: characterized by avoiding 3-!1-42 \
             and 31-!4-2 (bound {bound})"
        ),
        checks,
    }
}

fn all_iterates_crossing_free(q: &Permutation) -> bool {
    exhaustive_iterates(q)
        .iter()
        .all(|d| crossings(d).is_empty())
}

pub fn suite_thm36(bound: usize) -> SuiteReport {
    let mut checks = Vec::new();

    checks.push(forall_perms(
        format!(
            "every iterate is crossing-free iff all rows of both pile configurations \
             increase left to right, n <= {bound}"
        ),
        bound,
        |w| {
            let q = perm(w);
            all_iterates_crossing_free(&q) == rows_monotone(&extended_patience_sort(&q))
        },
    ));

    checks.push(forall_perms(
        format!("crossing-free at every iterate implies a strongly monotone configuration, n <= {bound}"),
        bound,
        |w| {
            let q = perm(w);
            !all_iterates_crossing_free(&q) || is_strongly_monotone(&patience_sort(&q))
        },
    ));

    let witness: Permutation = "45312".parse().expect("witness");
    let strongly = is_strongly_monotone(&patience_sort(&witness));
    let cr = crossings(&shadow_diagram(&witness));
    let polygonal_pair = cr.len() >= 2 && cr.iter().all(|c| c.lines == (1, 2));
    checks.push(Check::verdict(
        "the converse fails: 45312 is strongly monotone yet its diagram has a polygonal \
         crossing pair",
        strongly && polygonal_pair,
        format!("strongly monotone: {strongly}, crossings: {}", cr.len()),
    ));

    SuiteReport {
        suite: "thm3.6",
        header: format!(
            "crossing-free at every iterate is equivalent to monotone rows in both pile \
             configurations; strong monotonicity is necessary but not sufficient (bound {bound})"
        ),
        checks,
    }
}

pub fn suite_thm37(bound: usize) -> SuiteReport {
    let pats = [pat("3-!1-42"), pat("3-!1-24")];
    let totals = CountTable::build(bound);
    let mut checks = Vec::new();

    let label =
        format!("R has a unique preimage iff RPW(R) avoids 3-!1-42 and 3-!1-24, n <= {bound}");
    let mut iff_check = Check::pass(&*label);
    let label2 = format!("the preimage generator sizes match the class sizes, n <= {bound}");
    let mut size_check = Check::pass(&*label2);
    let label3 = format!("unique-preimage configurations are counted by f(n), n <= {bound}");
    let mut count_check = Check::pass(&*label3);

    'outer: for n in 0..=bound {
        let classes = configuration_classes(n);
        let mut unique = 0u64;
        for (r, &size) in &classes {
            if has_unique_preimage(r) != (size == 1) {
                iff_check = Check::fail(
                    &*label,
                    format!(
                        "n = {n}, configuration of {}: pattern test {}, class size {size}",
                        word_str(r.reverse_patience_word().as_slice()),
                        has_unique_preimage(r)
                    ),
                );
                break 'outer;
            }
            let gen = preimages(r).expect("bound within oracle range");
            let all_sort_back = gen.iter().all(|q| patience_sort(q) == *r);
            if gen.len() as u64 != size || !all_sort_back {
                size_check = Check::fail(
                    &*label2,
                    format!(
                        "n = {n}, configuration of {}: generated {}, class size {size}",
                        word_str(r.reverse_patience_word().as_slice()),
                        gen.len()
                    ),
                );
                break 'outer;
            }
            unique += u64::from(size == 1);
        }
        if BigUint::from(unique) != totals.totals()[n] {
            count_check = Check::fail(
                &*label3,
                format!("n = {n}: {unique} unique, f({n}) = {}", totals.totals()[n]),
            );
            break;
        }
        let avoiders = sweep_count(n, |w| pats.iter().all(|p| avoids_word(w, p)));
        if BigUint::from(avoiders) != totals.totals()[n] {
            count_check = Check::fail(
                &*label3,
                format!(
                    "n = {n}: {avoiders} avoiders of both patterns, f({n}) = {}",
                    totals.totals()[n]
                ),
            );
            break;
        }
    }
    checks.push(iff_check);
    checks.push(size_check);
    checks.push(count_check);

    SuiteReport {
        suite: "thm3.7",
        header: format!(
            "invertibility: a pile configuration determines its preimage uniquely exactly \
             when its RPW avoids 3-!1-42 and 3-!1-24, enumerated by f(n) (bound {bound})"
        ),
        checks,
    }
}

pub fn suite_thm39(bound: usize) -> SuiteReport {
    let mut checks = Vec::new();

    let a = convolution_matrix(8);
    let a_expected: [&[u64]; 8] = [
        &[0],
        &[0, 0],
        &[1, 0, 0],
        &[1, 1, 0, 0],
        &[2, 2, 1, 0, 0],
        &[3, 5, 3, 1, 0, 0],
        &[5, 10, 9, 4, 1, 0, 0],
        &[8, 20, 22, 14, 5, 1, 0, 0],
    ];
    let a_ok = a_expected.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &v)| a.entry(i, j) == BigUint::from(v))
    });
    checks.push(Check::verdict(
        "the 8x8 truncation of the coefficient matrix matches its ground-truth entries",
        a_ok,
        "entry mismatch",
    ));

    let inv = inverse_matrix(8);
    let inv_expected: [&[u64]; 8] = [
        &[1],
        &[0, 1],
        &[1, 0, 1],
        &[1, 1, 0, 1],
        &[3, 2, 1, 0, 1],
        &[7, 6, 3, 1, 0, 1],
        &[21, 16, 10, 4, 1, 0, 1],
        &[66, 50, 30, 15, 5, 1, 0, 1],
    ];
    let inv_ok = inv_expected.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &v)| inv.entry(i, j) == BigUint::from(v))
    });
    checks.push(Check::verdict(
        "the 8x8 truncation of the resolvent matrix matches its ground-truth entries",
        inv_ok,
        "entry mismatch",
    ));

    let len = bound.max(30);
    let t1 = CountTable::build(len);
    let t2 = totals_by_convolution(len);
    let t3 = solve_counts(len + 1);
    checks.push(Check::verdict(
        format!("boundary recurrence, convolution recurrence and matrix solve agree on f(0..={len})"),
        t1.totals() == &t2[..] && t1.totals() == &t3[..],
        "routes disagree",
    ));

    let c = convolution_triangle(30);
    let c_ok = (0..=30usize).all(|k| {
        (0..k.saturating_sub(1)).all(|m| c[k][m] == convolved_fibonacci(k, m))
    });
    checks.push(Check::verdict(
        "the convolution-recurrence triangle equals the convolved Fibonacci numbers for k <= 30",
        c_ok,
        "triangle mismatch",
    ));

    checks.push(Check::verdict(
        "the resolvent equals the truncated geometric series of the matrix, which drops \
         two diagonals per power",
        neumann_check(8, 4) && neumann_check(16, 8),
        "expansion mismatch",
    ));

    SuiteReport {
        suite: "thm3.9",
        header: format!(
            "the matrix identity for the invertibility counts: convolved Fibonacci \
             coefficients, resolvent ground truth, and the triple route agreement (bound {bound})"
        ),
        checks,
    }
}

pub fn suite_series(bound: usize) -> SuiteReport {
    let phi_order = bound.max(2);
    let kernel_order = bound.saturating_sub(2).max(4);
    let mut checks = Vec::new();

    let radicand = Series::from_integers(&[1, 2, 5], phi_order.max(12));
    let sqrt_ok = radicand
        .sqrt()
        .map(|r| r.mul(&r) == radicand)
        .unwrap_or(false);
    checks.push(Check::verdict(
        format!(
            "series square root contract: sqrt(1+2x+5x^2)^2 = 1+2x+5x^2 to degree {}",
            phi_order.max(12)
        ),
        sqrt_ok,
        "square root failed",
    ));

    let s0_ok = kernel_root_series(8)
        .map(|s| s.coeff(0).eq(&num_rational_zero()) && s.coeff(1).eq(&num_rational_zero()))
        .unwrap_or(false);
    checks.push(Check::verdict(
        "the root series s(x) vanishes to second order at 0, so s(x)/x composes into F",
        s0_ok,
        "nonzero leading coefficients",
    ));

    checks.push(Check::verdict(
        format!("bivariate functional equation holds to total degree {phi_order}"),
        functional_equation_check(phi_order),
        "coefficient mismatch",
    ));

    match kernel_equation_check(kernel_order) {
        Ok(true) => checks.push(Check::pass(format!(
            "kernel identity x + 1 + s(x)F(x) - F(s(x)/x) = 0 holds to degree {kernel_order}"
        ))),
        Ok(false) => checks.push(Check::fail(
            format!("kernel identity holds to degree {kernel_order}"),
            "coefficient mismatch",
        )),
        Err(SeriesError::CompositionNotWellDefined) => checks.push(Check::fail(
            format!("kernel identity holds to degree {kernel_order}"),
            "composition not well defined: inner series has a nonzero constant term",
        )),
        Err(e) => checks.push(Check::fail(
            format!("kernel identity holds to degree {kernel_order}"),
            e.to_string(),
        )),
    }

    SuiteReport {
        suite: "series",
        header: format!(
            "truncated-series verification of the generating-function identities \
             (functional equation to degree {phi_order}, kernel identity to degree {kernel_order})"
        ),
        checks,
    }
}

fn num_rational_zero() -> patience_core::enumeration::BigRational {
    use patience_core::enumeration::BigRational;
    BigRational::from_integer(0.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_bounds() {
        for name in SUITE_NAMES {
            let report = run_suite(name, 5).unwrap();
            assert!(
                report.all_pass(),
                "suite {name} failed:\n{}",
                report.render()
            );
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("thm9.9", 5).is_none());
    }

    #[test]
    fn report_rendering_marks_failures() {
        let report = SuiteReport {
            suite: "thm2.2",
            header: "demo".into(),
            checks: vec![
                Check::pass("good"),
                Check::fail("bad", "counterexample at n = 3: 2,3,1"),
            ],
        };
        let text = report.render();
        assert!(text.contains("PASS good"));
        assert!(text.contains("FAIL bad (counterexample at n = 3: 2,3,1)"));
        assert!(!report.all_pass());
    }
}
