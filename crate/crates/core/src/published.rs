//! Values as originally published for `f(x) = x²`, transcribed verbatim
//! (including misprints). Used to annotate table output with the printed
//! value wherever it differs from the computed one.

/// One printed row of the structural table, `i = 1..=35`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralRow {
    pub i: usize,
    pub in_degree: usize,
    /// Printed under the header `i - d⁻(v_i)` but the column holds
    /// `f(i) - d⁻(v_i)` values.
    pub out_degree_root: u64,
    pub jaconian_set: &'static [usize],
    pub max_degree: usize,
    pub dist_v1: usize,
}

const fn row(
    i: usize,
    in_degree: usize,
    out_degree_root: u64,
    jaconian_set: &'static [usize],
    max_degree: usize,
    dist_v1: usize,
) -> StructuralRow {
    StructuralRow {
        i,
        in_degree,
        out_degree_root,
        jaconian_set,
        max_degree,
        dist_v1,
    }
}

const J3_5: &[usize] = &[3, 4, 5];
const J4_5: &[usize] = &[4, 5];
const J5: &[usize] = &[5];
const J6_11: &[usize] = &[6, 7, 8, 9, 10, 11];

pub const STRUCTURAL_TABLE: [StructuralRow; 35] = [
    row(1, 0, 1, &[1], 0, 0),
    row(2, 1, 3, &[1, 2], 1, 1),
    row(3, 1, 8, &[2], 2, 2),
    row(4, 2, 14, &[2], 3, 2),
    row(5, 3, 22, &[2], 4, 2),
    row(6, 3, 33, &[2, 3, 4, 5], 4, 3),
    row(7, 4, 45, J3_5, 5, 3),
    row(8, 5, 59, J3_5, 6, 3),
    row(9, 6, 73, J3_5, 7, 3),
    row(10, 7, 93, J3_5, 8, 3),
    row(11, 8, 113, J3_5, 9, 3),
    row(12, 8, 136, J4_5, 10, 4),
    row(13, 9, 160, J4_5, 11, 4),
    row(14, 10, 186, J4_5, 12, 4),
    row(15, 11, 214, J4_5, 13, 4),
    row(16, 12, 244, J4_5, 14, 4),
    row(17, 13, 276, J4_5, 15, 4),
    row(18, 14, 310, J4_5, 16, 4),
    row(19, 14, 347, J5, 17, 5),
    row(20, 15, 385, J5, 18, 5),
    row(21, 16, 425, J5, 19, 5),
    row(22, 17, 467, J5, 20, 5),
    row(23, 18, 511, J5, 21, 5),
    row(24, 19, 557, J5, 22, 5),
    row(25, 20, 605, J5, 23, 5),
    row(26, 21, 655, J5, 24, 5),
    row(27, 22, 707, J5, 25, 5),
    row(28, 22, 762, &[5, 6, 7, 8, 9, 10, 11], 25, 6),
    row(29, 23, 818, J6_11, 26, 6),
    row(30, 24, 876, J6_11, 27, 6),
    row(31, 25, 939, J6_11, 28, 6),
    row(32, 26, 998, J6_11, 29, 6),
    row(33, 27, 1062, J6_11, 30, 6),
    row(34, 28, 1128, J6_11, 31, 6),
    row(35, 29, 1196, J6_11, 32, 6),
];

/// Colour weights as run-length pairs `(count, weight)`, read left to right.
pub type Runs = &'static [(usize, usize)];

/// Printed minimum- and maximum-sum colour weights, `i = 1..=20`.
pub const WEIGHT_TABLE: [(Runs, Runs); 20] = [
    (&[(1, 1)], &[(1, 1)]),
    (&[(2, 1)], &[(2, 1)]),
    (&[(1, 2), (1, 1)], &[(1, 1), (1, 2)]),
    (&[(1, 2), (2, 1)], &[(2, 1), (1, 2)]),
    (&[(1, 2), (3, 1)], &[(3, 1), (1, 2)]),
    (&[(2, 2), (2, 1)], &[(2, 1), (2, 2)]),
    (&[(2, 2), (3, 1)], &[(3, 1), (2, 2)]),
    (&[(2, 2), (4, 1)], &[(4, 1), (2, 2)]),
    (&[(2, 2), (5, 1)], &[(5, 1), (2, 2)]),
    (&[(2, 2), (6, 1)], &[(6, 1), (2, 2)]),
    (&[(2, 2), (7, 1)], &[(7, 1), (2, 2)]),
    (&[(1, 3), (1, 2), (7, 1)], &[(7, 1), (1, 2), (1, 3)]),
    (&[(1, 3), (1, 2), (8, 1)], &[(8, 1), (1, 2), (1, 3)]),
    (&[(1, 3), (1, 2), (9, 1)], &[(9, 1), (1, 2), (1, 3)]),
    (&[(1, 3), (1, 2), (10, 1)], &[(10, 1), (1, 2), (1, 3)]),
    (&[(1, 3), (1, 2), (11, 1)], &[(11, 1), (1, 2), (1, 3)]),
    (&[(1, 3), (1, 2), (12, 1)], &[(12, 1), (1, 2), (1, 3)]),
    (&[(1, 3), (1, 2), (13, 1)], &[(13, 1), (1, 2), (1, 3)]),
    (&[(1, 3), (2, 2), (12, 1)], &[(12, 1), (2, 2), (1, 3)]),
    (&[(1, 3), (2, 2), (13, 1)], &[(13, 1), (2, 2), (1, 3)]),
];

pub fn expand(runs: Runs) -> Vec<usize> {
    runs.iter()
        .flat_map(|&(count, weight)| std::iter::repeat_n(weight, count))
        .collect()
}

/// A printed fraction `numerator/denominator`, not necessarily reduced.
pub type Printed = (i128, i128);

/// One printed row of the chromatic-sum table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticRow {
    pub i: usize,
    pub chi_minus: u64,
    pub chi_plus: u64,
    pub mu_minus: Printed,
    pub mu_plus: Printed,
    pub var_minus: Printed,
    pub var_plus: Printed,
}

const fn crow(
    i: usize,
    chi_minus: u64,
    chi_plus: u64,
    mu_minus: Printed,
    mu_plus: Printed,
    var: Printed,
) -> ChromaticRow {
    ChromaticRow {
        i,
        chi_minus,
        chi_plus,
        mu_minus,
        mu_plus,
        var_minus: var,
        var_plus: var,
    }
}

pub const CHROMATIC_TABLE: [ChromaticRow; 20] = [
    crow(1, 1, 1, (1, 1), (1, 1), (0, 1)),
    crow(2, 3, 3, (3, 2), (3, 2), (1, 4)),
    crow(3, 4, 5, (4, 3), (5, 3), (2, 9)),
    crow(4, 7, 9, (7, 4), (9, 4), (11, 16)),
    crow(5, 11, 14, (11, 5), (14, 5), (34, 25)),
    crow(6, 13, 17, (13, 6), (17, 6), (41, 36)),
    crow(7, 18, 24, (18, 7), (24, 7), (96, 49)),
    crow(8, 24, 32, (24, 8), (32, 8), (192, 64)),
    crow(9, 31, 41, (31, 9), (41, 9), (344, 81)),
    crow(10, 39, 51, (39, 10), (51, 10), (469, 100)),
    crow(11, 48, 62, (48, 11), (62, 11), (886, 121)),
    crow(12, 49, 71, (49, 12), (71, 12), (1091, 144)),
    crow(13, 59, 84, (59, 13), (84, 13), (1602, 169)),
    crow(14, 70, 98, (70, 14), (98, 14), (2268, 196)),
    crow(15, 82, 113, (82, 15), (113, 15), (3116, 225)),
    crow(16, 95, 129, (95, 16), (129, 16), (4175, 256)),
    crow(17, 104, 146, (109, 17), (146, 17), (5476, 289)),
    crow(18, 119, 164, (124, 18), (164, 18), (7852, 324)),
    crow(19, 122, 177, (127, 19), (177, 19), (7716, 361)),
    crow(20, 138, 197, (143, 20), (197, 20), (9771, 20)),
];

/// Printed braided example `K_7 ⊕_3 K_5`: (μ⁻, μ⁺, σ²⁻, σ²⁺).
pub const BRAIDED_EXAMPLE: (Printed, Printed, Printed, Printed) =
    ((31, 9), (41, 9), (344, 81), (614, 81));
