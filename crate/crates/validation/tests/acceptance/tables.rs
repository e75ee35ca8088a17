//! Reference values, transcribed verbatim.

/// Levels of the columns of the second-order depth table.
pub const SECOND_ORDER_LEVELS: [usize; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 20];

/// Optimal second-order depth with `S = K - 1`, rows `K = 4..=10`.
pub const SECOND_ORDER_DEPTHS: [(usize, [usize; 10]); 7] = [
    (4, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    (5, [4, 1, 2, 2, 2, 2, 2, 2, 2, 2]),
    (6, [5, 2, 2, 3, 3, 3, 3, 3, 3, 3]),
    (7, [6, 6, 3, 3, 3, 4, 4, 4, 4, 4]),
    (8, [7, 7, 7, 4, 4, 4, 4, 5, 5, 5]),
    (9, [8, 8, 8, 5, 5, 5, 5, 5, 6, 6]),
    (10, [9, 9, 9, 9, 6, 6, 6, 6, 6, 7]),
];

/// A cell of the full-model design table: either a single depth, or an
/// intermediate depth with its weight, the remainder sitting on `S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DesignCell {
    Single(usize),
    Weighted(usize, f64),
}

use DesignCell::{Single as D, Weighted as W};

/// Full-model designs for `K = 4..=10`, `3 <= S <= K`, columns `v = 2..=8`.
pub const FULL_DESIGNS: [(usize, usize, [DesignCell; 7]); 35] = [
    (
        4,
        3,
        [W(1, 0.900), W(1, 0.937), D(1), D(1), D(1), D(1), D(1)],
    ),
    (4, 4, [W(2, 0.857), D(2), D(2), D(2), D(2), D(2), D(2)]),
    (5, 3, [D(1), D(1), D(1), D(1), D(1), D(1), D(1)]),
    (5, 4, [W(2, 0.800), D(2), D(2), D(2), D(2), D(2), D(2)]),
    (
        5,
        5,
        [W(2, 0.833), W(2, 0.667), D(3), D(3), D(3), D(3), D(3)],
    ),
    (6, 3, [D(1), D(1), D(1), D(1), D(1), D(1), D(1)]),
    (6, 4, [W(2, 0.732), D(2), D(2), D(2), D(2), D(2), D(2)]),
    (
        6,
        5,
        [W(2, 0.802), W(2, 0.832), D(3), D(3), D(3), D(3), D(3)],
    ),
    (
        6,
        6,
        [W(3, 0.732), W(3, 0.789), D(3), D(4), D(4), D(4), D(4)],
    ),
    (7, 3, [D(1), D(1), D(1), D(1), D(1), D(1), D(1)]),
    (7, 4, [W(1, 0.836), D(2), D(2), D(2), D(2), D(2), D(2)]),
    (
        7,
        5,
        [W(2, 0.756), W(2, 0.952), D(3), D(3), D(3), D(3), D(3)],
    ),
    (
        7,
        6,
        [W(2, 0.728), W(3, 0.755), D(3), D(3), D(4), D(4), D(4)],
    ),
    (
        7,
        7,
        [W(3, 0.697), W(4, 0.322), D(4), D(4), D(4), D(5), D(5)],
    ),
    (8, 3, [D(1), D(1), D(1), D(1), D(1), D(1), D(1)]),
    (8, 4, [W(1, 0.832), D(2), D(2), D(2), D(2), D(2), D(2)]),
    (8, 5, [W(2, 0.707), D(2), D(3), D(3), D(3), D(3), D(3)]),
    (
        8,
        6,
        [W(2, 0.687), W(3, 0.675), D(3), D(3), D(4), D(4), D(4)],
    ),
    (
        8,
        7,
        [W(3, 0.643), W(4, 0.105), D(4), D(4), D(4), D(5), D(5)],
    ),
    (
        8,
        8,
        [W(3, 0.644), D(4), W(5, 0.425), D(5), D(5), D(5), D(5)],
    ),
    (9, 3, [D(1), D(1), D(1), D(1), D(1), D(1), D(1)]),
    (9, 4, [W(1, 0.819), D(2), D(2), D(2), D(2), D(2), D(2)]),
    (
        9,
        5,
        [W(2, 0.659), D(2), W(2, 0.999), D(3), D(3), D(3), D(3)],
    ),
    (
        9,
        6,
        [W(2, 0.645), W(3, 0.559), D(3), D(3), D(4), D(4), D(4)],
    ),
    (9, 7, [W(3, 0.594), D(4), D(4), D(4), D(4), D(5), D(5)]),
    (
        9,
        8,
        [W(3, 0.598), D(4), W(5, 0.113), D(5), D(5), D(5), D(5)],
    ),
    (9, 9, [W(4, 0.577), D(5), D(5), D(6), D(6), D(6), D(6)]),
    (10, 3, [D(1), D(1), D(1), D(1), D(1), D(1), D(1)]),
    (10, 4, [W(1, 0.800), D(2), D(2), D(2), D(2), D(2), D(2)]),
    (
        10,
        5,
        [W(2, 0.615), D(2), W(2, 0.997), D(3), D(3), D(3), D(3)],
    ),
    (
        10,
        6,
        [W(2, 0.604), W(3, 0.418), D(3), D(3), D(4), D(4), D(4)],
    ),
    (
        10,
        7,
        [W(3, 0.551), D(4), D(4), D(4), D(4), W(4, 0.996), D(5)],
    ),
    (10, 8, [W(3, 0.556), D(4), D(5), D(5), D(5), D(5), D(5)]),
    (10, 9, [W(4, 0.533), D(5), D(5), D(6), D(6), D(6), D(6)]),
    (10, 10, [W(4, 0.538), D(5), D(6), D(6), D(7), D(7), D(7)]),
];

/// Normalized variance `V(d)/p` of the full-profile designs (`S = K`), by
/// `(K, v)`, for `d = 1..=K`, with the depths printed as highlighted ones.
pub const FULL_PROFILE_VARIANCE: [(usize, usize, &[f64], &[usize]); 49] = [
    (4, 2, &[0.875, 1.0, 0.875, 1.0], &[2, 4]),
    (4, 3, &[0.813, 1.0, 0.938, 1.0], &[2]),
    (4, 4, &[0.793, 1.0, 0.953, 0.983], &[2]),
    (4, 5, &[0.783, 1.0, 0.962, 0.98], &[2]),
    (4, 6, &[0.777, 1.0, 0.968, 0.98], &[2]),
    (4, 7, &[0.773, 1.0, 0.973, 0.981], &[2]),
    (4, 8, &[0.77, 1.0, 0.976, 0.982], &[2]),
    (5, 2, &[0.76, 1.0, 0.96, 0.88, 1.0], &[2, 5]),
    (5, 3, &[0.723, 1.0, 1.0, 0.954, 1.0], &[2, 5]),
    (5, 4, &[0.689, 0.967, 1.0, 0.952, 0.987], &[3]),
    (5, 5, &[0.666, 0.951, 1.0, 0.961, 0.981], &[3]),
    (5, 6, &[0.653, 0.941, 1.0, 0.968, 0.98], &[3]),
    (5, 7, &[0.644, 0.934, 1.0, 0.972, 0.981], &[3]),
    (5, 8, &[0.638, 0.929, 1.0, 0.976, 0.982], &[3]),
    (6, 2, &[0.701, 0.983, 1.0, 0.906, 0.855, 1.0], &[3, 6]),
    (6, 3, &[0.624, 0.921, 1.0, 0.968, 0.932, 1.0], &[3, 6]),
    (6, 4, &[0.591, 0.895, 1.0, 0.993, 0.963, 0.997], &[3]),
    (6, 5, &[0.576, 0.882, 0.997, 1.0, 0.972, 0.992], &[4]),
    (6, 6, &[0.56, 0.865, 0.987, 1.0, 0.976, 0.989], &[4]),
    (6, 7, &[0.55, 0.854, 0.981, 1.0, 0.979, 0.988], &[4]),
    (6, 8, &[0.543, 0.846, 0.977, 1.0, 0.982, 0.988], &[4]),
    (
        7,
        2,
        &[0.615, 0.917, 1.0, 0.956, 0.879, 0.863, 1.0],
        &[3, 7],
    ),
    (7, 3, &[0.553, 0.86, 0.988, 1.0, 0.963, 0.941, 1.0], &[4, 7]),
    (7, 4, &[0.519, 0.822, 0.965, 1.0, 0.981, 0.962, 0.997], &[4]),
    (7, 5, &[0.498, 0.8, 0.952, 1.0, 0.992, 0.974, 0.993], &[4]),
    (7, 6, &[0.487, 0.787, 0.944, 1.0, 0.999, 0.983, 0.995], &[4]),
    (7, 7, &[0.479, 0.777, 0.937, 0.997, 1.0, 0.985, 0.994], &[5]),
    (7, 8, &[0.471, 0.768, 0.929, 0.994, 1.0, 0.987, 0.993], &[5]),
    (
        8,
        2,
        &[0.559, 0.872, 1.0, 1.0, 0.945, 0.884, 0.884, 1.0],
        &[3, 8],
    ),
    (
        8,
        3,
        &[0.49, 0.792, 0.948, 1.0, 0.99, 0.958, 0.948, 1.0],
        &[4],
    ),
    (
        8,
        4,
        &[0.462, 0.759, 0.924, 0.993, 1.0, 0.98, 0.969, 1.0],
        &[5, 8],
    ),
    (
        8,
        5,
        &[0.442, 0.732, 0.902, 0.981, 1.0, 0.988, 0.977, 0.995],
        &[5],
    ),
    (
        8,
        6,
        &[0.429, 0.716, 0.889, 0.974, 1.0, 0.994, 0.982, 0.994],
        &[5],
    ),
    (
        8,
        7,
        &[0.421, 0.706, 0.88, 0.97, 1.0, 0.997, 0.987, 0.995],
        &[5],
    ),
    (
        8,
        8,
        &[0.415, 0.698, 0.874, 0.96, 1.0, 1.0, 0.991, 0.996],
        &[5],
    ),
    (
        9,
        2,
        &[0.504, 0.811, 0.962, 1.0, 0.969, 0.91, 0.868, 0.883, 1.0],
        &[4, 9],
    ),
    (
        9,
        3,
        &[0.437, 0.726, 0.894, 0.972, 1.0, 0.969, 0.946, 0.946, 1.0],
        &[5],
    ),
    (
        9,
        4,
        &[0.414, 0.696, 0.872, 0.965, 1.0, 0.994, 0.977, 0.971, 1.0],
        &[5],
    ),
    (
        9,
        5,
        &[0.397, 0.674, 0.853, 0.953, 0.995, 1.0, 0.989, 0.981, 1.0],
        &[6],
    ),
    (
        9,
        6,
        &[0.384, 0.657, 0.836, 0.94, 0.989, 1.0, 0.992, 0.985, 0.996],
        &[6],
    ),
    (
        9,
        7,
        &[0.376, 0.645, 0.825, 0.932, 0.985, 1.0, 0.995, 0.988, 0.995],
        &[6],
    ),
    (
        9,
        8,
        &[0.37, 0.637, 0.817, 0.927, 0.982, 1.0, 0.997, 0.99, 0.996],
        &[6],
    ),
    (
        10,
        2,
        &[
            0.462, 0.763, 0.932, 1.0, 0.997, 0.956, 0.905, 0.874, 0.896, 1.0,
        ],
        &[4, 10],
    ),
    (
        10,
        3,
        &[
            0.395, 0.669, 0.843, 0.938, 1.0, 0.972, 0.953, 0.938, 0.947, 1.0,
        ],
        &[5],
    ),
    (
        10,
        4,
        &[
            0.374, 0.642, 0.822, 0.929, 0.981, 1.0, 0.987, 0.974, 0.972, 1.0,
        ],
        &[6],
    ),
    (
        10,
        5,
        &[
            0.359, 0.622, 0.803, 0.917, 0.977, 1.0, 1.0, 0.989, 0.985, 1.0,
        ],
        &[6],
    ),
    (
        10,
        6,
        &[
            0.348, 0.606, 0.786, 0.903, 0.968, 0.996, 1.0, 0.993, 0.988, 0.998,
        ],
        &[7],
    ),
    (
        10,
        7,
        &[
            0.34, 0.594, 0.774, 0.892, 0.961, 0.993, 1.0, 0.995, 0.99, 0.997,
        ],
        &[7],
    ),
    (
        10,
        8,
        &[
            0.335, 0.586, 0.765, 0.885, 0.956, 0.99, 1.0, 0.996, 0.991, 0.996,
        ],
        &[7],
    ),
];
