//! Published match counts and result tallies used to reconcile the bundled
//! dataset.

use confed_elo::{Confederation, Entity};

use Confederation::*;

/// Editions covered by the pair table.
pub const EDITIONS: [u16; 18] = [
    1954, 1958, 1962, 1966, 1970, 1974, 1978, 1982, 1986, 1990, 1994, 1998, 2002, 2006, 2010, 2014, 2018, 2022,
];

/// Inter-confederation final-tournament matches per pair and edition,
/// last group round excluded.
pub const PAIR_COUNTS: [((Confederation, Confederation), [u32; 18]); 10] = [
    ((Afc, Caf), [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 2, 3, 2, 3]),
    ((Afc, Concacaf), [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 1, 0, 0, 1, 1]),
    ((Afc, Conmebol), [0, 0, 0, 1, 1, 0, 0, 0, 2, 1, 1, 1, 1, 0, 4, 2, 2, 5]),
    ((Afc, Uefa), [2, 0, 0, 2, 1, 0, 2, 2, 2, 3, 3, 5, 9, 4, 4, 3, 6, 6]),
    ((Caf, Concacaf), [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 2, 2, 0, 0]),
    ((Caf, Conmebol), [0, 0, 0, 0, 1, 0, 0, 1, 1, 2, 2, 2, 2, 2, 4, 1, 1, 0]),
    ((Caf, Uefa), [0, 0, 0, 0, 1, 2, 1, 3, 4, 4, 4, 9, 9, 6, 6, 6, 7, 12]),
    ((Concacaf, Conmebol), [1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 2, 1, 1, 2, 2, 3, 2, 1]),
    ((Concacaf, Uefa), [1, 2, 1, 2, 3, 2, 1, 4, 5, 4, 4, 4, 4, 5, 4, 7, 4, 7]),
    ((Conmebol, Uefa), [7, 9, 11, 9, 7, 13, 11, 9, 10, 9, 8, 12, 11, 8, 9, 12, 11, 8]),
];

/// Two-legged play-off ties per edition.
pub const PLAYOFF_TIES: [u32; 18] = [0, 0, 6, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0];
/// Single-leg play-offs per edition.
pub const PLAYOFF_SINGLE: [u32; 18] = [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1];

pub const GRAND_TOTAL: u32 = 464;

/// Row and column order of the result tables.
pub const TALLY_ORDER: [Entity; 6] = [
    Entity::Confed(Afc),
    Entity::Confed(Caf),
    Entity::Confed(Concacaf),
    Entity::Confed(Conmebol),
    Entity::Confed(Uefa),
    Entity::Seeded,
];

/// Wins of the row over the column, and draws, without seeding.
pub const TALLIES_S0: [[(u32, u32); 5]; 5] = [
    [(0, 0), (6, 5), (2, 3), (3, 4), (9, 12)],
    [(5, 5), (0, 0), (2, 2), (2, 2), (16, 19)],
    [(6, 3), (2, 2), (2, 0), (4, 4), (10, 16)],
    [(17, 4), (15, 2), (14, 4), (15, 1), (77, 31)],
    [(41, 12), (41, 19), (38, 16), (68, 31), (173, 30)],
];

pub const TALLIES_S1: [[(u32, u32); 6]; 6] = [
    [(0, 0), (6, 5), (2, 3), (2, 4), (8, 12), (2, 0)],
    [(5, 5), (0, 0), (2, 2), (1, 2), (15, 16), (2, 3)],
    [(6, 3), (2, 2), (2, 0), (4, 3), (9, 14), (1, 3)],
    [(9, 4), (6, 2), (4, 3), (2, 0), (18, 14), (2, 3)],
    [(36, 12), (34, 16), (29, 14), (28, 14), (110, 14), (42, 26)],
    [(13, 0), (16, 3), (19, 3), (21, 3), (86, 26), (24, 5)],
];

pub const TALLIES_S2: [[(u32, u32); 6]; 6] = [
    [(0, 0), (6, 5), (2, 3), (2, 4), (6, 10), (4, 2)],
    [(5, 5), (0, 0), (1, 0), (1, 2), (12, 16), (6, 5)],
    [(3, 3), (1, 0), (0, 0), (2, 1), (3, 7), (2, 4)],
    [(9, 4), (6, 2), (4, 1), (2, 0), (15, 6), (5, 13)],
    [(28, 10), (25, 16), (16, 7), (19, 6), (56, 9), (49, 27)],
    [(24, 2), (26, 5), (16, 4), (32, 13), (107, 27), (73, 15)],
];

/// Decisive matches and draws in the whole sample.
pub const TALLY_TOTAL: (u32, u32) = (568, 129);
