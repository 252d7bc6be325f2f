//! Frozen fixture tables. Every drawn graph and coloring used by the crate
//! is transcribed here exactly once.

use crate::coloring::Color;
use crate::graph::Vertex;

/// H₃: `w` has degree 2; `t*` is the top row, `b*` the bottom row.
pub const H3_NAMES: [&str; 7] = ["w", "t0", "t1", "t2", "b0", "b1", "b2"];
pub const H3_W: Vertex = 0;
pub const H3_EDGES: [(Vertex, Vertex); 10] = [
    (0, 1),
    (0, 4),
    (1, 4),
    (1, 2),
    (2, 3),
    (3, 6),
    (6, 5),
    (5, 4),
    (2, 6),
    (5, 3),
];
/// Colors of the six non-`w` vertices (`H3_COLORS[v - 1]`).
pub const H3_COLORS: [Color; 6] = [4, 3, 1, 3, 4, 2];

pub const K33_COLORS: [Color; 6] = [1, 2, 3, 4, 4, 4];
pub const K33_DESIGNATED: [Vertex; 4] = [0, 1, 2, 3];

/// Prism K₂□K₃ as G(3,1): x0 x1 x2 y0 y1 y2.
pub const PRISM3_COLORS: [Color; 6] = [1, 2, 3, 3, 1, 2];
pub const PRISM3_DESIGNATED: [Vertex; 3] = [0, 1, 2];

/// Petersen as G(5,2): x0..x4 y0..y4.
pub const PETERSEN_COLORS: [Color; 10] = [3, 4, 2, 1, 2, 2, 2, 3, 3, 4];
pub const PETERSEN_DESIGNATED: [Vertex; 4] = [0, 4, 3, 9];

pub const G1_NAMES: [&str; 10] = ["g", "h", "i", "j", "k", "l", "m", "n", "o", "p"];
pub const G1_EDGES: [(Vertex, Vertex); 15] = [
    (0, 1),
    (0, 2),
    (0, 6),
    (1, 3),
    (1, 7),
    (2, 4),
    (2, 8),
    (3, 5),
    (3, 9),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 8),
    (7, 9),
    (8, 9),
];
pub const G1_COLORS: [Color; 10] = [1, 4, 2, 2, 3, 1, 2, 2, 4, 3];
pub const G1_DESIGNATED: [Vertex; 4] = [0, 2, 4, 8];

/// The 48-vertex five-colored example: six four-vertex blocks plus four
/// five-vertex pendant gadgets `u v w x y`.
pub const EXAMPLE48_NAMES: [&str; 48] = [
    "a", "b", "c", "d", "a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2", "a3", "b3", "c3", "d3", "a4",
    "b4", "c4", "d4", "a5", "b5", "c5", "d5", "a6", "b6", "c6", "d6", "u", "v", "w", "x", "y", "u1",
    "v1", "w1", "x1", "y1", "u2", "v2", "w2", "x2", "y2", "u3", "v3", "w3", "x3", "y3",
];
pub const EXAMPLE48_EDGES: [(Vertex, Vertex); 72] = [
    (0, 1), (0, 4), (0, 28), (1, 2), (1, 5), (2, 3), (2, 38), (3, 6), (3, 24), (4, 5), (4, 8),
    (5, 9), (6, 7), (6, 11), (7, 12), (7, 20), (8, 9), (8, 43), (9, 10), (10, 11), (10, 33),
    (11, 16), (12, 13), (12, 14), (13, 14), (13, 19), (14, 15), (15, 18), (15, 19), (16, 17),
    (16, 18), (17, 18), (17, 19), (20, 21), (20, 22), (21, 22), (21, 27), (22, 23), (23, 26),
    (23, 27), (24, 25), (24, 26), (25, 26), (25, 27), (28, 29), (28, 30), (29, 31), (29, 32),
    (30, 31), (30, 32), (31, 32), (33, 34), (33, 35), (34, 36), (34, 37), (35, 36), (35, 37),
    (36, 37), (38, 39), (38, 40), (39, 41), (39, 42), (40, 41), (40, 42), (41, 42), (43, 44),
    (43, 45), (44, 46), (44, 47), (45, 46), (45, 47), (46, 47),
];
pub const EXAMPLE48_COLORS: [Color; 48] = [
    4, 2, 3, 2, 2, 1, 1, 2, 5, 2, 3, 2, 5, 2, 4, 2, 5, 2, 3, 1, 4, 2, 3, 2, 4, 2, 5, 1, 3, 1, 1, 2,
    5, 2, 1, 1, 4, 5, 5, 1, 1, 2, 4, 4, 1, 1, 2, 3,
];
/// c1 (type A), then u, u1, u2, u3 (type B).
pub const EXAMPLE48_DESIGNATED: [Vertex; 5] = [6, 28, 33, 38, 43];
