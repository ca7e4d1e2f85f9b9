//! Clustering and scoring checked against exhaustive enumeration, brute-force
//! permutation search, and an independent entropy-table implementation.

mod common;

use common::{random_components, rng};
use rand::Rng;
use spca_core::cluster::{accuracy, kmeans_columns, kmeans_unit_sphere, nmi, LabelVector};
use spca_core::numkit::Matrix;
use std::collections::HashMap;

/// Within-cluster sum of squares for a fixed assignment, centers at means.
fn wcss(cols: &[Vec<f64>], labels: &[usize], k: usize) -> Option<f64> {
    let dim = cols[0].len();
    let mut sums = vec![vec![0.0; dim]; k];
    let mut counts = vec![0usize; k];
    for (j, col) in cols.iter().enumerate() {
        counts[labels[j]] += 1;
        for d in 0..dim {
            sums[labels[j]][d] += col[d];
        }
    }
    if counts.iter().any(|&c| c == 0) {
        return None;
    }
    let mut total = 0.0;
    for (j, col) in cols.iter().enumerate() {
        let c = labels[j];
        for d in 0..dim {
            let mean = sums[c][d] / counts[c] as f64;
            total += (col[d] - mean) * (col[d] - mean);
        }
    }
    Some(total)
}

#[test]
fn kmeans_matches_exhaustive_assignment_enumeration() {
    for seed in [31, 32, 33, 34, 35] {
        let mut r = rng(seed);
        let points = random_components(2, 8, &mut r);
        let cols: Vec<Vec<f64>> = (0..8).map(|j| points.matrix().col(j)).collect();

        let mut best = f64::INFINITY;
        for mask in 0u32..(1 << 8) {
            let labels: Vec<usize> = (0..8).map(|j| ((mask >> j) & 1) as usize).collect();
            if let Some(obj) = wcss(&cols, &labels, 2) {
                best = best.min(obj);
            }
        }

        let out = kmeans_unit_sphere(&points, 2, 32, 1234).unwrap();
        assert!(
            (out.objective - best).abs() <= 1e-10,
            "seed {seed}: kmeans objective {} vs exhaustive best {best}",
            out.objective
        );
    }
}

#[test]
fn kmeans_history_is_nonincreasing_on_random_instances() {
    let mut r = rng(360);
    for trial in 0..10 {
        let m = 2 + trial % 3;
        let n = 10 + trial;
        let raw = Matrix::gaussian(m, n, &mut r).unwrap();
        let out = kmeans_columns(&raw, 3, 5, 1000 + trial as u64).unwrap();
        for w in out.objective_history.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "trial {trial}: history rose");
        }
        assert!(out.labels.empty_clusters().is_empty());
    }
}

#[test]
fn kmeans_survives_identical_points() {
    let raw = Matrix::from_fn(2, 4, |i, _| if i == 0 { 1.0 } else { 0.0 }).unwrap();
    let out = kmeans_columns(&raw, 2, 3, 0).unwrap();
    assert!(out.objective <= 1e-24);
    assert_eq!(out.labels.len(), 4);
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn heap(a: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if size == 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..size {
            heap(a, size - 1, out);
            if size % 2 == 1 {
                a.swap(0, size - 1);
            } else {
                a.swap(i, size - 1);
            }
        }
    }
    let mut base: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    heap(&mut base, k, &mut out);
    out
}

fn brute_force_accuracy(pred: &LabelVector, truth: &LabelVector) -> f64 {
    let k = pred.num_clusters().max(truth.num_clusters());
    let mut best = 0usize;
    for perm in permutations(k) {
        let hits = pred
            .labels()
            .iter()
            .zip(truth.labels())
            .filter(|(&p, &t)| perm[p] == t)
            .count();
        best = best.max(hits);
    }
    best as f64 / pred.len() as f64
}

#[test]
fn accuracy_matches_brute_force_permutation_search() {
    let mut r = rng(370);
    for trial in 0..50 {
        let n = 6 + trial % 7;
        let kp = 2 + trial % 3;
        let kt = 2 + (trial / 3) % 3;
        let pred = LabelVector::new((0..n).map(|_| r.random_range(0..kp)).collect(), kp).unwrap();
        let truth = LabelVector::new((0..n).map(|_| r.random_range(0..kt)).collect(), kt).unwrap();
        let fast = accuracy(&pred, &truth).unwrap();
        let slow = brute_force_accuracy(&pred, &truth);
        assert!(
            (fast - slow).abs() <= 1e-15,
            "trial {trial}: assignment {fast} vs brute force {slow}"
        );
    }
}

#[test]
fn accuracy_on_larger_random_case_matches_brute_force() {
    let mut r = rng(371);
    for _ in 0..10 {
        let pred = LabelVector::new((0..10).map(|_| r.random_range(0..4)).collect(), 4).unwrap();
        let truth = LabelVector::new((0..10).map(|_| r.random_range(0..4)).collect(), 4).unwrap();
        assert_eq!(
            accuracy(&pred, &truth).unwrap(),
            brute_force_accuracy(&pred, &truth)
        );
    }
}

/// Independent NMI via hash-map contingency tables and direct probability
/// sums.
fn nmi_oracle(pred: &[usize], truth: &[usize]) -> f64 {
    let n = pred.len() as f64;
    let mut joint: HashMap<(usize, usize), f64> = HashMap::new();
    let mut pm: HashMap<usize, f64> = HashMap::new();
    let mut tm: HashMap<usize, f64> = HashMap::new();
    for (&p, &t) in pred.iter().zip(truth) {
        *joint.entry((p, t)).or_default() += 1.0;
        *pm.entry(p).or_default() += 1.0;
        *tm.entry(t).or_default() += 1.0;
    }
    let h = |m: &HashMap<usize, f64>| -> f64 { m.values().map(|&c| -(c / n) * (c / n).ln()).sum() };
    let (hp, ht) = (h(&pm), h(&tm));
    if hp == 0.0 && ht == 0.0 {
        return 1.0;
    }
    if hp == 0.0 || ht == 0.0 {
        return 0.0;
    }
    let mut info = 0.0;
    for (&(p, t), &c) in &joint {
        info += (c / n) * ((c / n) / ((pm[&p] / n) * (tm[&t] / n))).ln();
    }
    (info / (hp * ht).sqrt()).clamp(0.0, 1.0)
}

#[test]
fn nmi_matches_entropy_table_oracle() {
    // Hand case: the fully crossed 2x2 table carries zero information.
    let pred = LabelVector::from_labels(vec![0, 1, 0, 1]).unwrap();
    let truth = LabelVector::from_labels(vec![0, 0, 1, 1]).unwrap();
    assert!(nmi(&pred, &truth).unwrap().abs() <= 1e-15);

    let mut r = rng(380);
    for trial in 0..20 {
        let n = 12 + trial;
        let kp = 2 + trial % 3;
        let kt = 2 + (trial / 2) % 4;
        let pred_raw: Vec<usize> = (0..n).map(|_| r.random_range(0..kp)).collect();
        let truth_raw: Vec<usize> = (0..n).map(|_| r.random_range(0..kt)).collect();
        let pred = LabelVector::new(pred_raw.clone(), kp).unwrap();
        let truth = LabelVector::new(truth_raw.clone(), kt).unwrap();
        let fast = nmi(&pred, &truth).unwrap();
        let slow = nmi_oracle(&pred_raw, &truth_raw);
        assert!(
            (fast - slow).abs() <= 1e-12,
            "trial {trial}: nmi {fast} vs oracle {slow}"
        );
    }
}

#[test]
fn scores_are_invariant_under_relabeling() {
    let mut r = rng(390);
    for _ in 0..30 {
        let n = 15;
        let k = 4;
        let pred_raw: Vec<usize> = (0..n).map(|_| r.random_range(0..k)).collect();
        let truth_raw: Vec<usize> = (0..n).map(|_| r.random_range(0..k)).collect();
        let perm = &permutations(k)[r.random_range(0..24)];
        let pred = LabelVector::new(pred_raw.clone(), k).unwrap();
        let truth = LabelVector::new(truth_raw.clone(), k).unwrap();
        let pred_relabeled =
            LabelVector::new(pred_raw.iter().map(|&p| perm[p]).collect(), k).unwrap();
        assert!(
            (accuracy(&pred, &truth).unwrap() - accuracy(&pred_relabeled, &truth).unwrap()).abs()
                <= 1e-12
        );
        assert!(
            (nmi(&pred, &truth).unwrap() - nmi(&pred_relabeled, &truth).unwrap()).abs() <= 1e-12
        );
    }
}

#[test]
fn perfect_match_scores_one_on_both_metrics() {
    let mut r = rng(391);
    for _ in 0..10 {
        let labels: Vec<usize> = (0..20).map(|_| r.random_range(0..3)).collect();
        // Guarantee at least two distinct clusters.
        let mut labels = labels;
        labels[0] = 0;
        labels[1] = 1;
        let perm = &permutations(3)[r.random_range(0..6)];
        let truth = LabelVector::new(labels.clone(), 3).unwrap();
        let pred = LabelVector::new(labels.iter().map(|&p| perm[p]).collect(), 3).unwrap();
        assert_eq!(accuracy(&pred, &truth).unwrap(), 1.0);
        // Entropy sums accumulate rounding, so identity lands within a few
        // ulps of 1 rather than exactly on it.
        assert!((nmi(&pred, &truth).unwrap() - 1.0).abs() <= 1e-12);
    }
}
