//! One line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use linepush::compaction::{
    brute_force_search, counterexample, diagonal_config, realize_partition, solve_box, BoxOutcome, BoxSpec, Budget,
    SearchOutcome,
};
use linepush::oracles::{closed_sequence_parity, enumerate_group};
use linepush::perm::{
    classify, core_geometry, induced_permutation, is_solvable, shape_group, solve_permutation, CoreGeometry, Parity,
    Permutation,
};
use linepush::{canonical_form, invert_push, CanonicalShape, Configuration, Direction};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

enum Status {
    Pass,
    Partial,
}

type Check = std::result::Result<(Status, String), String>;
type Criterion = (&'static str, fn() -> Check);

fn pass(detail: impl Into<String>) -> Check {
    Ok((Status::Pass, detail.into()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn push_semantics() -> Check {
    let mut checked = 0;
    for c in small_configurations(4, 4) {
        for d in Direction::ALL {
            let got = c.push(d);
            let want = reference_push(&c, d);
            ensure(got.label_equal(&want), || format!("{d} on\n{c}\ngave\n{got}\nexpected\n{want}"))?;
            let (dw, dh) = (c.width().abs_diff(got.width()), c.height().abs_diff(got.height()));
            let area_ok = got.area() == c.area()
                || (dw == 1 && dh == 0 && got.area() + c.height() == c.area())
                || (dh == 1 && dw == 0 && got.area() + c.width() == c.area());
            ensure(area_ok, || format!("{d} on\n{c}\nchanged the box to {}x{}", got.width(), got.height()))?;
            checked += 1;
        }
    }
    pass(format!("{checked} pushes agree with the naive stepper"))
}

fn anchor() -> Check {
    let k = CanonicalShape::from_rows(&[3, 2]).unwrap().labeled();
    let p = induced_permutation(&k, &"RULD".parse().unwrap()).map_err(|e| e.to_string())?;
    let cycles = p.cycles();
    ensure(cycles.len() == 1 && cycles[0].len() == 5, || format!("cycles {cycles:?}"))?;
    pass(format!("RULD is the 5-cycle {p}"))
}

fn reversibility() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let c = random_compact(&mut rng, 12);
        for d in Direction::ALL {
            let back = invert_push(&c, d).map_err(|e| format!("{d} on\n{c}: {e}"))?;
            ensure(c.push(d).apply(&back) == c, || format!("{d} on\n{c} does not invert"))?;
        }
    }
    pass("1000 configurations, 4000 inversions")
}

fn parity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=10);
        let k = random_shape(&mut rng, n).labeled();
        let walk = random_moves(&mut rng, 20);
        let (_, back) = canonical_form(&k.apply(&walk)).map_err(|e| e.to_string())?;
        let closed = walk.then(&back);
        let p = closed_sequence_parity(&k, &closed).map_err(|e| e.to_string())?;
        ensure(p.cells == Parity::Even && p.tokens == Parity::Even, || {
            format!("{closed} on\n{k}\ngave {p:?}")
        })?;
    }
    pass("10000 closed sequences, all even")
}

fn group_orders() -> Check {
    let cases: [(&[usize], u128); 10] = [
        (&[3, 3], 1),
        (&[2, 2, 2], 1),
        (&[2, 1], 3),
        (&[3, 3, 2], 7),
        (&[3, 1], 12),
        (&[4, 1], 60),
        (&[4, 2], 60),
        (&[3, 1, 1], 60),
        (&[5, 2], 2520),
        (&[3, 3, 1], 2520),
    ];
    let mut found = Vec::new();
    for (rows, want) in cases {
        let k = CanonicalShape::from_rows(rows).unwrap().labeled();
        let e = enumerate_group(&k, 10_000_000).map_err(|e| e.to_string())?;
        let predicted = classify(&k).map_err(|e| e.to_string())?.order();
        ensure(e.complete && e.order() as u128 == predicted && predicted == want, || {
            format!("rows {rows:?}: enumerated {}, predicted {predicted}, expected {want}", e.order())
        })?;
        found.push(format!("{rows:?}={want}"));
    }
    pass(found.join(" "))
}

fn core_immobility() -> Check {
    let mut elements = 0;
    for n in 1..=7 {
        for shape in CanonicalShape::all(n) {
            let g = shape_group(&shape).map_err(|e| e.to_string())?;
            let core = g.core_indices();
            for gen in g.generators() {
                ensure(core.iter().all(|&i| gen.permutation.fixes(i)), || format!("{shape} {}", gen.name()))?;
            }
            let e = enumerate_group(g.reference(), 10_000_000).map_err(|e| e.to_string())?;
            for (p, _) in &e.elements {
                ensure(core.iter().all(|&i| p.fixes(i)), || format!("{shape}: {p} moves the core"))?;
            }
            elements += e.order();
        }
    }
    let counted = CoreGeometry::from_counts(10, 9, 7, 6);
    let shape = CanonicalShape::new(vec![9, 9, 9, 9, 9, 9, 9, 8, 7, 6]).unwrap();
    let measured = core_geometry(&shape.labeled()).map_err(|e| e.to_string())?;
    ensure(counted.core_cells.len() == 12 && measured == counted, || {
        format!("core {} cells, measured {:?}", counted.core_cells.len(), measured)
    })?;
    pass(format!("{elements} enumerated elements fix their cores; 10x9 example has 12 core cells"))
}

fn compaction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut specs = vec![BoxSpec { a: 3, b: 2 }, BoxSpec { a: 4, b: 2 }, BoxSpec { a: 3, b: 3 }];
    specs.extend([BoxSpec { a: 2, b: 3 }, BoxSpec { a: 2, b: 4 }]);
    for k in 1..=12 {
        specs.push(BoxSpec { a: k, b: 1 });
        specs.push(BoxSpec { a: 1, b: k });
    }
    for &spec in &specs {
        for _ in 0..100 {
            let c = random_sparse(&mut rng, spec.tokens());
            match solve_box(&c, spec).map_err(|e| e.to_string())? {
                BoxOutcome::Found(s) if spec.matches(&c.apply(&s)) => {}
                other => return Err(format!("{}x{}: {other:?} on\n{c}", spec.a, spec.b)),
            }
        }
    }
    pass(format!("{} box sizes x 100 sparse configurations", specs.len()))
}

fn counterexample_refuted() -> Check {
    let c = counterexample(4, 3).map_err(|e| e.to_string())?;
    let spec = BoxSpec { a: 4, b: 3 };
    let began = Instant::now();
    match brute_force_search(&c, |x| spec.matches(x), Budget::default(), false) {
        SearchOutcome::Refuted { states } => {
            pass(format!("{states} reachable configurations, no 4x3 box ({:.2?})", began.elapsed()))
        }
        SearchOutcome::Exhausted { states, depth } => Ok((
            Status::Partial,
            format!("budget reached after {states} states; no witness up to depth {depth}"),
        )),
        SearchOutcome::Found(s) => Err(format!("witness {s}")),
    }
}

fn universality() -> Check {
    let diag = diagonal_config(6).map_err(|e| e.to_string())?;
    let shapes = CanonicalShape::all(6);
    ensure(shapes.len() == 11, || format!("{} partitions", shapes.len()))?;
    for shape in &shapes {
        let s = realize_partition(6, shape).map_err(|e| format!("{shape}: {e}"))?;
        let (k, _) = canonical_form(&diag.apply(&s)).map_err(|e| e.to_string())?;
        ensure(k.same_shape(&shape.unlabeled('#')), || format!("{shape} not reached"))?;
    }
    pass("11 partitions of 6")
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        all.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    all
}

fn decision() -> Check {
    let mut instances = 0;
    let mut solved = 0;
    for n in 1..=7 {
        let perms = permutations_of(n);
        for shape in CanonicalShape::all(n) {
            let k = shape.labeled();
            let e = enumerate_group(&k, 10_000_000).map_err(|e| e.to_string())?;
            for images in &perms {
                let p = Permutation::from_images(images.clone()).unwrap();
                let mut labels = vec!['?'; n];
                for i in 0..n {
                    labels[p.apply(i)] = k.labels()[i];
                }
                let goal: Configuration = k.with_labels(labels);
                let reachable = e.contains(&p);
                let v = is_solvable(&k, &goal);
                ensure(v.solvable == reachable, || format!("{shape} {p}: oracle {reachable}, verdict {v:?}"))?;
                if reachable {
                    let s = solve_permutation(&k, &goal).map_err(|e| format!("{shape} {p}: {e}"))?;
                    ensure(k.apply(&s).label_equal(&goal), || format!("{shape} {p}: {s} misses"))?;
                    solved += 1;
                }
                instances += 1;
            }
        }
    }
    pass(format!("{instances} goals decided, {solved} solved and verified"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("push semantics", push_semantics),
        ("RULD five-cycle", anchor),
        ("reversibility", reversibility),
        ("parity of closed sequences", parity),
        ("group orders", group_orders),
        ("core immobility", core_immobility),
        ("compaction into small boxes", compaction),
        ("4x3 counterexample", counterexample_refuted),
        ("universality of n=6", universality),
        ("decision and solver completeness", decision),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let began = Instant::now();
        let (tag, detail) = match check() {
            Ok((Status::Pass, d)) => ("PASS", d),
            Ok((Status::Partial, d)) => ("PARTIAL", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {name}: {detail} [{:.1?}]", began.elapsed());
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
