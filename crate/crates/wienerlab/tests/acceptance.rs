//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its elapsed time (visible under `--nocapture`). Every tolerance is exact
//! integer equality and every time budget is asserted.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wienerlab::*;

fn finish(number: u32, name: &str, started: Instant, budget_secs: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    assert!(
        elapsed < budget_secs,
        "criterion {number} ({name}) exceeded its {budget_secs}s budget: {elapsed:.2}s"
    );
    println!("acceptance {number} ({name}): PASS in {elapsed:.2}s");
}

/// 10^4 seeded random (tree, leaf pair) instances with 5 <= n <= 60:
/// the leaf-relocation delta formula matches direct recomputation exactly.
#[test]
fn criterion_1_delta_exactness_leaf() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..10_000 {
        let n = rng.gen_range(5..=60);
        let t = random_tree(n, &mut rng);
        let leaves = t.leaves().unwrap();
        let x = leaves[rng.gen_range(0..leaves.len())];
        let mut y = leaves[rng.gen_range(0..leaves.len())];
        while y == x {
            y = leaves[rng.gen_range(0..leaves.len())];
        }
        let predicted = predicted_leaf_delta(&leaf_path(&t, x, y).unwrap());
        let moved = relocate_leaf(&t, x, y).unwrap();
        let actual = moved.wiener_edge_decomposition() - t.wiener_edge_decomposition();
        assert_eq!(predicted, actual, "round {round}: tree\n{}", t.to_text());
    }
    finish(1, "delta exactness, leaf relocation", started, 10.0);
}

fn check_context_deltas(t: &Tree) -> usize {
    let before_edge = t.wiener_edge_decomposition();
    let mut checked = 0;
    for ctx in find_special_contexts(t).unwrap().contexts {
        checked += 1;
        let full = predicted_broom_delta_full(&ctx, t.order());
        let reduced = predicted_broom_delta_reduced(ctx.t1, ctx.t2, ctx.p, t.order());
        let actual = relocate_broom(t, &ctx).unwrap().wiener_edge_decomposition() - before_edge;
        assert_eq!(full, reduced, "full vs reduced on\n{}", t.to_text());
        assert_eq!(full, actual, "predicted vs actual on\n{}", t.to_text());
    }
    checked
}

/// Every triple broom with 12 <= n <= 40 and every context found in 10^3
/// seeded random trees: Eq-style full form == reduced form == W(after) -
/// W(before); the worked B(12,2,2,2) -> B(12,5,2) instance yields exactly -7.
#[test]
fn criterion_2_delta_exactness_broom() {
    let started = Instant::now();

    let t = triple_broom(12, 2, 2, 2).unwrap();
    assert_eq!(t.wiener_pairwise(), 214);
    assert_eq!(t.wiener_edge_decomposition(), 214);
    let scan = find_special_contexts(&t).unwrap();
    assert_eq!(scan.contexts.len(), 1);
    let ctx = &scan.contexts[0];
    let after = relocate_broom(&t, ctx).unwrap();
    assert_eq!(after.wiener_pairwise(), 207);
    assert_eq!(after.wiener_edge_decomposition(), 207);
    assert_eq!(after.canonical_form(), double_broom(12, 5, 2).unwrap().canonical_form());
    assert_eq!(predicted_broom_delta_full(ctx, 12), -7);
    assert_eq!(predicted_broom_delta_reduced(ctx.t1, ctx.t2, ctx.p, 12), -7);

    let mut contexts_checked = 0;
    for n in 12..=40usize {
        for d in 5..=n - 3 {
            let g = n - d;
            for a in 1..=g - 2 {
                for b in 1..=g - a - 1 {
                    let c = g - a - b;
                    contexts_checked += check_context_deltas(&triple_broom(n, a, b, c).unwrap());
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1_000 {
        let n = rng.gen_range(5..=60);
        contexts_checked += check_context_deltas(&random_tree(n, &mut rng));
    }
    assert!(contexts_checked > 10_000, "scan exercised {contexts_checked} contexts");
    finish(2, "delta exactness, broom relocation", started, 30.0);
}

/// wiener_pairwise == wiener_edge_decomposition on all free trees with
/// n <= 10 and on 10^4 seeded random trees with n <= 200.
#[test]
fn criterion_3_wiener_oracle_agreement() {
    let started = Instant::now();
    let mut exhaustive = 0;
    for n in 1..=10 {
        for t in free_trees(n, 16).unwrap() {
            exhaustive += 1;
            assert_eq!(t.wiener_pairwise(), t.wiener_edge_decomposition(), "{}", t.to_text());
        }
    }
    assert_eq!(exhaustive, 201); // 106 classes at n = 10 plus all smaller orders
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=200);
        let t = random_tree(n, &mut rng);
        assert_eq!(t.wiener_pairwise(), t.wiener_edge_decomposition(), "{}", t.to_text());
    }
    finish(3, "wiener oracle agreement", started, 20.0);
}

/// For every n <= 60 and every feasible leaf total, the balanced split
/// strictly beats every split with |a-b| >= 2; spot values at n = 10.
#[test]
fn criterion_4_balanced_double_broom() {
    let started = Instant::now();
    assert_eq!(BroomSpec::double(10, 2, 3).unwrap().wiener(), 139);
    assert_eq!(double_broom(10, 2, 3).unwrap().wiener_pairwise(), 139);
    assert_eq!(BroomSpec::double(10, 1, 4).unwrap().wiener(), 131);
    assert_eq!(double_broom(10, 1, 4).unwrap().wiener_pairwise(), 131);

    for n in 4..=60usize {
        for d in 3..=n - 1 {
            let g = n - d + 1;
            let balanced = BroomSpec::double(n, g / 2, g - g / 2).unwrap().wiener();
            for a in 1..g {
                let b = g - a;
                let w = BroomSpec::double(n, a, b).unwrap().wiener();
                if a.abs_diff(b) >= 2 {
                    assert!(
                        w < balanced,
                        "B({n},{a},{b}) = {w} does not lose to balanced {balanced}"
                    );
                } else {
                    assert_eq!(w, balanced);
                }
            }
            // The optimizer returns the balanced winner and re-checks itself.
            let (a, b, w) = best_double_broom(n, d).unwrap();
            assert_eq!((a, b, w), (g / 2, g - g / 2, balanced));
        }
    }
    finish(4, "balanced double broom", started, 10.0);
}

/// At n = d+4+4*floor(sqrt((d-1)/2)) the best triple broom strictly beats
/// the best double broom, for d in {100, 500, 1634}.
#[test]
fn criterion_5_proposition_regime() {
    let started = Instant::now();
    for d in [100usize, 500, 1634] {
        let n = proposition_bound(d) as usize;
        let (_, _, wd) = best_double_broom(n, d).unwrap();
        let (_, _, _, wt) = best_triple_broom(n, d).unwrap();
        assert!(wt > wd, "d={d}, n={n}: triple {wt} must beat double {wd}");
        let cmp = compare_brooms(n, d).unwrap();
        assert_eq!(cmp.winner, Winner::Triple);
        assert_eq!(cmp.regime, Regime::Proposition);
    }
    finish(5, "proposition regime", started, 5.0);
}

/// At n = d-2+4*floor(sqrt((d-1)/2)) the best double broom is at least every
/// triple broom, for d in {100, 500, 1634}.
#[test]
fn criterion_6_theorem_consistency() {
    let started = Instant::now();
    for d in [100usize, 500, 1634] {
        let n = theorem_bound(d) as usize;
        let (_, _, wd) = best_double_broom(n, d).unwrap();
        let (_, _, _, wt) = best_triple_broom(n, d).unwrap();
        assert!(wd >= wt, "d={d}, n={n}: double {wd} must cover triple {wt}");
        assert_eq!(compare_brooms(n, d).unwrap().winner, Winner::Double);
    }
    finish(6, "theorem consistency", started, 5.0);
}

/// Over all (n,d) cells with n <= 12, every argmax tree has (a) all leaves at
/// eccentricity d and (b) |t1-t2| <= 1 in every special context. Also emits
/// the per-cell report table the full characterization is replaced by.
#[test]
fn criterion_7_argmax_structural_lemmas() {
    let started = Instant::now();
    let mut leaves_checked = 0u64;
    let mut contexts_checked = 0u64;
    println!("n,d,max_wiener,num_argmax,all_double_broom,c");
    for n in 3..=12usize {
        for record in extremal_all_cells(n, 16).unwrap() {
            println!(
                "{},{},{},{},{},{}",
                record.n,
                record.d,
                record.max_wiener,
                record.num_argmax(),
                record.all_double_broom,
                record.c
            );
            for entry in &record.argmax {
                let t = &entry.tree;
                for leaf in t.leaves().unwrap() {
                    leaves_checked += 1;
                    assert_eq!(
                        t.eccentricity(leaf).unwrap(),
                        record.d,
                        "leaf {leaf} of argmax in cell ({n},{})\n{}",
                        record.d,
                        t.to_text()
                    );
                }
                if n >= 5 {
                    for ctx in find_special_contexts(t).unwrap().contexts {
                        contexts_checked += 1;
                        assert!(
                            ctx.t1.abs_diff(ctx.t2) <= 1,
                            "unbalanced context in cell ({n},{})\n{}",
                            record.d,
                            t.to_text()
                        );
                    }
                }
            }
        }
    }
    assert!(leaves_checked > 0 && contexts_checked > 0);
    finish(7, "argmax structural lemmas at desk scale", started, 60.0);
}

/// Exact threshold and bound arithmetic at the paper-scale constants.
#[test]
fn criterion_8_threshold_bound_arithmetic() {
    let started = Instant::now();
    assert_eq!(okok_bounds(1636).unwrap(), (28, 29));
    assert_eq!(offpath_bound(1636), 56);
    assert_eq!((theorem_bound(9), proposition_bound(9)), (15, 21));
    assert_eq!((theorem_bound(1634), proposition_bound(1634)), (1744, 1750));
    for p in 2..=111 {
        assert!(f_increasing_at(p, 1636), "f not increasing at p={p}");
        assert!(g_increasing_at(p, 1636), "g not increasing at p={p}");
    }
    finish(8, "threshold and bound arithmetic", started, 1.0);
}

/// Free-tree counts: 2, 3, 6, 11, 23, 47, 106 for n = 4..10, cross-checked
/// for n <= 8 by exhaustive Pruefer enumeration with canonical dedup, and
/// 19320 classes at n = 16.
#[test]
fn criterion_9_enumeration_counts() {
    let started = Instant::now();
    let expected = [2usize, 3, 6, 11, 23, 47, 106];
    for (i, n) in (4..=10usize).enumerate() {
        assert_eq!(free_trees(n, 16).unwrap().count(), expected[i], "count at n={n}");
    }
    // Independent oracle: all n^(n-2) labeled trees, deduplicated.
    for n in 2..=8usize {
        let mut classes = HashSet::new();
        let mut seq = vec![0usize; n - 2];
        loop {
            classes.insert(prufer_decode(n, &seq).unwrap().canonical_form());
            let mut pos = seq.len();
            while pos > 0 {
                seq[pos - 1] += 1;
                if seq[pos - 1] < n {
                    break;
                }
                seq[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
        assert_eq!(
            classes.len(),
            FREE_TREE_COUNTS[n - 1],
            "Pruefer dedup disagrees at n={n}"
        );
    }
    assert_eq!(free_trees(16, 16).unwrap().count(), 19320);
    finish(9, "enumeration counts", started, 60.0);
}
