//! Hand-transcribed factor sets.

/// Vertex (part, level) of K_18 with parts of size 6.
pub type Pv = (usize, usize);

/// Seven 9-cycle factors of K_18, each two 9-cycles.
pub const K18_NINE_FACTORS: [[[Pv; 9]; 2]; 7] = [
    [
        [(0, 0), (1, 1), (2, 2), (2, 0), (0, 1), (1, 2), (1, 3), (2, 4), (0, 5)],
        [(0, 2), (2, 1), (1, 0), (1, 5), (0, 4), (2, 3), (2, 5), (1, 4), (0, 3)],
    ],
    [
        [(0, 0), (2, 5), (2, 4), (2, 0), (1, 5), (1, 4), (1, 3), (0, 2), (0, 1)],
        [(1, 0), (1, 1), (1, 2), (2, 3), (2, 1), (2, 2), (0, 3), (0, 4), (0, 5)],
    ],
    [
        [(0, 0), (0, 4), (1, 4), (2, 4), (2, 2), (0, 2), (1, 2), (1, 0), (2, 0)],
        [(0, 1), (0, 3), (2, 3), (1, 3), (1, 5), (0, 5), (2, 5), (2, 1), (1, 1)],
    ],
    [
        [(0, 0), (1, 0), (1, 4), (1, 2), (2, 2), (2, 3), (2, 4), (0, 4), (0, 2)],
        [(0, 1), (2, 1), (2, 0), (2, 5), (1, 5), (1, 1), (1, 3), (0, 3), (0, 5)],
    ],
    [
        [(0, 0), (1, 2), (2, 5), (0, 4), (1, 0), (2, 3), (0, 2), (1, 4), (2, 1)],
        [(0, 1), (1, 3), (2, 0), (0, 5), (1, 1), (2, 4), (0, 3), (1, 5), (2, 2)],
    ],
    [
        [(0, 0), (1, 3), (2, 2), (0, 4), (1, 1), (2, 0), (0, 2), (1, 5), (2, 4)],
        [(0, 1), (1, 4), (2, 3), (0, 5), (1, 2), (2, 1), (0, 3), (1, 0), (2, 5)],
    ],
    [
        [(0, 0), (1, 5), (2, 1), (0, 4), (1, 3), (2, 5), (0, 2), (1, 1), (2, 3)],
        [(0, 1), (1, 0), (2, 2), (0, 5), (1, 4), (2, 0), (0, 3), (1, 2), (2, 4)],
    ],
];

pub const K18_SIX_FACTOR: [[Pv; 6]; 3] = [
    [(0, 0), (1, 4), (2, 2), (2, 5), (1, 1), (0, 3)],
    [(0, 1), (1, 5), (2, 3), (2, 0), (1, 2), (0, 4)],
    [(0, 2), (1, 0), (2, 4), (2, 1), (1, 3), (0, 5)],
];

pub const K18_ONE_FACTOR: [[Pv; 2]; 9] = [
    [(0, 0), (2, 2)],
    [(0, 1), (2, 3)],
    [(0, 2), (2, 4)],
    [(0, 3), (2, 5)],
    [(0, 4), (2, 0)],
    [(0, 5), (2, 1)],
    [(1, 0), (1, 3)],
    [(1, 1), (1, 4)],
    [(1, 2), (1, 5)],
];

/// Four-cycle pieces of K_12 on parts 0, 1 that are not difference graphs.
pub const K12_C: [[Pv; 4]; 3] = [
    [(0, 0), (1, 2), (1, 1), (0, 5)],
    [(0, 1), (1, 3), (1, 0), (0, 4)],
    [(0, 2), (1, 4), (1, 5), (0, 3)],
];

pub const K12_D: [[Pv; 4]; 3] = [
    [(0, 0), (1, 5), (1, 3), (0, 4)],
    [(0, 1), (1, 0), (1, 1), (0, 2)],
    [(0, 3), (1, 2), (1, 4), (0, 5)],
];

/// Inside 6-cycles of parts 0 and 1, as level sequences.
pub const K12_E: [[usize; 6]; 2] = [[0, 1, 3, 4, 5, 2], [0, 2, 3, 4, 1, 5]];

/// Inside matchings of parts 0 and 1, as level pairs.
pub const K12_F: [[(usize, usize); 3]; 2] = [[(0, 3), (1, 5), (2, 4)], [(0, 4), (1, 3), (2, 5)]];

pub type K6Factors = [[(usize, usize); 3]; 5];

/// Three 1-factorizations of K_6 used to pair the six parts and to finish each level.
pub const K6_F: K6Factors = [
    [(0, 1), (2, 3), (4, 5)],
    [(0, 5), (1, 2), (3, 4)],
    [(0, 2), (1, 4), (3, 5)],
    [(0, 3), (1, 5), (2, 4)],
    [(0, 4), (1, 3), (2, 5)],
];

pub const K6_F_STAR: K6Factors = [
    [(0, 1), (2, 3), (4, 5)],
    [(0, 3), (1, 4), (2, 5)],
    [(0, 4), (1, 2), (3, 5)],
    [(0, 5), (1, 3), (2, 4)],
    [(0, 2), (1, 5), (3, 4)],
];

pub const K6_F_PRIME: K6Factors = [
    [(0, 5), (1, 2), (3, 4)],
    [(0, 3), (1, 4), (2, 5)],
    [(0, 1), (2, 4), (3, 5)],
    [(0, 2), (1, 3), (4, 5)],
    [(0, 4), (1, 5), (2, 3)],
];
