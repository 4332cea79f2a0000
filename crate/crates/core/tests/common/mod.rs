//! Published tables shared by the integration tests.
#![allow(dead_code)]

use planar_kinematics::cyclic_points::FixedPointLabel;

/// Aperiodic k-subsets of Z/n up to rotation, rows k = 2..6, columns n = 3..24.
pub const LYNDON: [[u128; 22]; 5] = [
    [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11],
    [0, 1, 2, 3, 5, 7, 9, 12, 15, 18, 22, 26, 30, 35, 40, 45, 51, 57, 63, 70, 77, 84],
    [0, 0, 1, 2, 5, 8, 14, 20, 30, 40, 55, 70, 91, 112, 140, 168, 204, 240, 285, 330, 385, 440],
    [0, 0, 0, 1, 3, 7, 14, 25, 42, 66, 99, 143, 200, 273, 364, 476, 612, 775, 969, 1197, 1463, 1771],
    [0, 0, 0, 0, 1, 3, 9, 20, 42, 75, 132, 212, 333, 497, 728, 1026, 1428, 1932, 2583, 3384, 4389, 5598],
];

/// Number of k = 5 solutions for n = 6..24 once defective classes are removed.
pub const K5_SOLUTIONS: [usize; 19] =
    [1, 3, 7, 14, 25, 42, 65, 99, 143, 200, 273, 364, 474, 612, 775, 969, 1197, 1463, 1768];

/// Defective fixed points listed for (k, n).
pub fn defective_table() -> Vec<(usize, u64, Vec<Vec<u64>>)> {
    vec![
        (5, 12, vec![vec![1, 4, 7, 8, 12]]),
        (5, 18, vec![vec![1, 6, 10, 12, 18], vec![1, 7, 9, 13, 18]]),
        (5, 24, vec![vec![1, 8, 13, 16, 24], vec![1, 9, 12, 17, 24], vec![2, 8, 14, 16, 24]]),
        (
            5,
            30,
            vec![vec![1, 10, 16, 20, 30], vec![1, 11, 15, 21, 30], vec![2, 10, 17, 20, 30], vec![2, 12, 15, 22, 30]],
        ),
        (6, 30, vec![vec![1, 7, 13, 19, 20, 30]]),
    ]
}

pub fn label(n: u64, exps: &[u64]) -> FixedPointLabel {
    FixedPointLabel::new(n, exps).expect("valid label")
}

/// m^(2)_n for n = 4..10.
pub const M2: [u64; 7] = [2, 5, 14, 42, 132, 429, 1430];
/// m^(3)_n for n = 5..9.
pub const M3: [u64; 5] = [5, 42, 462, 6006, 87516];

/// Tropical value histogram for k = 3, n = 6.
pub const HIST_36: [(i64, usize); 3] = [(1, 16), (2, 10), (6, 1)];
/// Tropical value histogram for k = 3, n = 7.
pub const HIST_37: [(i64, usize); 10] =
    [(1, 21), (2, 38), (3, 32), (4, 8), (5, 14), (6, 2), (8, 6), (11, 3), (12, 2), (25, 2)];
/// Tropical value histogram for k = 3, n = 8.
#[rustfmt::skip]
pub const HIST_38: [(i64, usize); 36] = [
    (1, 23), (2, 42), (3, 46), (4, 57), (5, 64), (6, 47), (7, 26), (8, 18), (9, 52), (10, 26), (11, 11), (12, 20),
    (14, 18), (15, 6), (16, 8), (17, 10), (18, 8), (20, 10), (21, 10), (24, 4), (25, 10), (26, 6), (28, 2), (30, 7),
    (32, 2), (33, 2), (40, 4), (42, 2), (49, 4), (54, 2), (57, 2), (75, 2), (77, 2), (93, 1), (98, 2), (169, 1),
];

pub const F_R36: [usize; 6] = [1, 14, 47, 60, 27, 1];
pub const F_R37: [usize; 8] = [1, 28, 178, 483, 661, 456, 128, 1];
pub const F_R38: [usize; 10] = [1, 48, 486, 2122, 5030, 7048, 5895, 2750, 557, 1];
pub const F_PI36: [usize; 6] = [1, 27, 60, 47, 14, 1];
