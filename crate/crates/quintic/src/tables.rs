//! Reference tables transcribed from the published statements, kept as data
//! so computed objects can be diffed against them (`pentarray --check-paper`,
//! the acceptance suite). Transcription typos that were corrected are noted
//! next to the affected entry.

/// A labelled integer table, rows as printed.
#[derive(Debug, Clone, Copy)]
pub struct Table {
    pub label: &'static str,
    pub rows: &'static [&'static [i64]],
}

/// `B_1`, printed as its transpose (one row per column of the array).
pub const B1_TRANSPOSE: Table = Table {
    label: "pentamidiation array B_1 (transposed)",
    rows: &[&[1, 3, 4, 2, 1, 0], &[0, 1, -2, 4, -3, 1]],
};

/// `B_2`, printed as its transpose.
pub const B2_TRANSPOSE: Table = Table {
    label: "pentamidiation array B_2 (transposed)",
    rows: &[
        &[1, 6, 17, 28, 30, 22, 12, 4, 1, 0, 0],
        &[0, 1, 1, 2, 3, 5, -3, 2, -1, 1, 0],
        &[0, 0, 1, -4, 12, -22, 30, -28, 17, -6, 1],
    ],
};

pub const A2: Table = Table {
    label: "Hecke matrix A_2",
    rows: &[&[1, 0, 0], &[22, 5, -22], &[0, 0, 1]],
};

pub const A3: Table = Table {
    label: "Hecke matrix A_3",
    rows: &[&[1, 0, 0, 0], &[264, 25, 0, 24], &[24, 0, 25, -264], &[0, 0, 0, 1]],
};

pub const A4: Table = Table {
    label: "Hecke matrix A_4",
    rows: &[
        &[1, 0, 0, 0, 0],
        &[1356, 115, 10, 10, -8],
        &[1462, 110, 15, -110, 1462],
        &[8, 10, -10, 115, -1356],
        &[0, 0, 0, 0, 1],
    ],
};

pub const A5: Table = Table {
    label: "Hecke matrix A_5",
    rows: &[
        &[1, 0, 0, 0, 0, 0],
        &[4603, 410, 35, 5, -5, 1],
        &[25494, 2360, 235, -20, 270, -2272],
        &[2272, 270, 20, 235, -2360, 25494],
        &[1, 5, 5, -35, 410, -4603],
        &[0, 0, 0, 0, 0, 1],
    ],
};

pub const A6: Table = Table {
    label: "Hecke matrix A_6",
    rows: &[
        &[1, 0, 0, 0, 0, 0, 0],
        &[12228, 1126, 102, 9, -2, 1, 0],
        &[232494, 21353, 1931, 177, 94, -647, 1626],
        &[108772, 8994, 688, 71, -688, 8994, -108772],
        &[1626, 647, 94, -177, 1931, -21353, 232494],
        &[0, 1, 2, 9, -102, 1126, -12228],
        &[0, 0, 0, 0, 0, 0, 1],
    ],
};

/// Printed Hecke matrix `A_d` for `2 <= d <= 6` (`A_1` is the identity).
pub fn printed_hecke(d: usize) -> Option<Table> {
    match d {
        2 => Some(A2),
        3 => Some(A3),
        4 => Some(A4),
        5 => Some(A5),
        6 => Some(A6),
        _ => None,
    }
}

/// Printed pentamidiation array `B_d` (transposed) for `d <= 2`.
pub fn printed_pent_array(d: usize) -> Option<Table> {
    match d {
        1 => Some(B1_TRANSPOSE),
        2 => Some(B2_TRANSPOSE),
        _ => None,
    }
}

// Homogeneous-polynomial vectors (a_0..a_d) for sum a_k A^(5k) B^(5(d-k)).

pub const E4_VECTOR: [i64; 5] = [1, 228, 494, -228, 1];
/// The printed vector omits the zero coefficient of `A^15 B^15`.
pub const E6_VECTOR: [i64; 7] = [1, -522, -10005, 0, -10005, 522, 1];
pub const E4_Q5_VECTOR: [i64; 5] = [1, -12, 14, 12, 1];
/// Printed with `B^20 A^5` for the second term; the homogeneous form needs `B^25 A^5`.
pub const E6_Q5_VECTOR: [i64; 7] = [1, -18, 75, 0, 75, 18, 1];

/// `E_4(q^(1/5))` as `b_r A^r B^(20-r)`, `r = 0..=20`.
pub const E4_FIFTH_ROOT: [i64; 21] = [
    1, 240, 2160, 6720, 17520, 30228, 57840, 60960, 79920, 41520, 60494, -41520, 79920, -60960,
    57840, -30228, 17520, -6720, 2160, -240, 1,
];

/// `E_6(q^(1/5))` as `b_r A^r B^(30-r)`, `r = 0..=30`.
pub const E6_FIFTH_ROOT: [i64; 31] = [
    1, -504, -16632, -122976, -532728, -1575522, -4049640, -8205120, -15203160, -22425480,
    -31510005, -32502960, -37633680, -21450240, -26046720, 0, -26046720, 21450240, -37633680,
    32502960, -31510005, 22425480, -15203160, 8205120, -4049640, 1575522, -532728, 122976, -16632,
    504, 1,
];

/// `sum p(25n+24) q^n = sum c 5^e q^j (q^5;q^5)^(6j+6) / (q;q)^(6j+7)`, entries `(e, c)`.
pub const P25_COEFFS: [(u32, i64); 5] = [(2, 63), (5, 52), (7, 63), (10, 6), (12, 1)];

/// The degree-40 factor `sum c_j A^(40-5j) B^(5j)` (overall factor 25).
pub const P25_INTERMEDIATE: [i64; 9] = [63, -3728, 27861, -25404, 21285, 25404, 27861, 3728, 63];

/// Initial coefficients `a_{1,0}..a_{5,0}` of the degree-40 factor in the tau multisection.
pub const TAU_P0: [i64; 5] = [1, 44, 722, 5192, 13195];

/// Recurrence matrix for the tau multisection, entries `(num, den)`.
pub const TAU_MATRIX: [[(i64, i64); 5]; 5] = [
    [(893, 1), (-88, 1), (9, 1), (-1, 1), (1, 5)],
    [(66352, 1), (-5702, 1), (506, 1), (-49, 1), (44, 5)],
    [(1081476, 1), (-103301, 1), (9503, 1), (-887, 1), (722, 5)],
    [(7778056, 1), (-740071, 1), (72578, 1), (-6992, 1), (5192, 5)],
    [(19767160, 1), (-1881110, 1), (183530, 1), (-19520, 1), (2639, 1)],
];

/// The same recurrence before the factor 5 is extracted.
pub const TAU_STEP: [[i64; 5]; 5] = [
    [4465, -440, 45, -5, 1],
    [-331760, 28510, -2530, 245, -44],
    [5407380, -516505, 47515, -4435, 722],
    [-38890280, 3700355, -362890, 34960, -5192],
    [98835800, -9405550, 917650, -97600, 13195],
];

/// Printed `f_n(t)` coefficient lists, `n = 1..=8` except the pole at `n = 4`.
pub const KANEKO: [(u32, &[i64]); 7] = [
    (1, &[1, 7]),
    (2, &[1, 39, -26]),
    (3, &[1, 171, 247, -57]),
    (5, &[1, -465, -10385, -2945, -8370, 682]),
    (6, &[1, -333, -17390, -54390, 26640, -64158, 3774]),
    (7, &[1, -301, -36421, -310245, 10535, -422303, 283843, -12857]),
    (8, &[1, -294, -101528, -1798692, -2747430, -387933, -2086028, 740544, -26999]),
];

/// `q^(r/5) sum sigma_3(5n+r) q^n` as `(r, [(A-exponent, coeff)])`.
pub const SIGMA3_DISSECTION: [(i64, &[(usize, i64)]); 4] = [
    (1, &[(16, 73), (11, -173), (6, 241), (1, 1)]),
    (2, &[(2, 9), (7, 254), (12, 333), (17, -28)]),
    (3, &[(18, 9), (13, -254), (8, 333), (3, 28)]),
    (4, &[(4, 73), (9, 173), (14, 241), (19, -1)]),
];

/// `q^(r/5) sum tau(5n+r) q^n` as `(r, [(A-exponent, coeff)])`, total degree 60.
/// The residue-3 display prints `A^13 B^47 B^41`; read as `A^13 B^47`.
pub const TAU_DISSECTION: [(i64, &[(usize, i64)]); 4] = [
    (
        1,
        &[
            (1, 1), (6, -6083), (11, 716495), (16, -14213080), (21, 83214230), (26, -21441266),
            (31, -426443402), (36, -41743460), (41, 22164065), (46, 2946185), (51, 66539),
            (56, -1472),
        ],
    ),
    (
        2,
        &[
            (2, -24), (7, -15928), (12, 104720), (17, -2608430), (22, 71302530),
            (27, -377079066), (32, 86337768), (37, 179092490), (42, 37021490), (47, 2846410),
            (52, 76164), (57, -252),
        ],
    ),
    (
        3,
        &[
            (3, 252), (8, 76164), (13, -2846410), (18, 37021490), (23, -179092490),
            (28, 86337768), (33, 377079066), (38, 71302530), (43, 2608430), (48, 104720),
            (53, 15928), (58, -24),
        ],
    ),
    (
        4,
        &[
            (4, -1472), (9, -66539), (14, 2946185), (19, -22164065), (24, -41743460),
            (29, 426443402), (34, -21441266), (39, -83214230), (44, -14213080), (49, -716495),
            (54, -6083), (59, -1),
        ],
    ),
];

/// Target of the Schwarzian computation, as a degree-4 vector in `A^5, B^5`.
pub const SCHWARZ_TARGET: [i64; 5] = [1, -12, 134, 12, 1];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for d in 2..=6 {
            let t = printed_hecke(d).unwrap();
            assert_eq!(t.rows.len(), d + 1);
            assert!(t.rows.iter().all(|r| r.len() == d + 1));
        }
        assert_eq!(B2_TRANSPOSE.rows.iter().map(|r| r.len()).max(), Some(11));
        for (r, terms) in TAU_DISSECTION {
            assert!(terms.iter().all(|(k, _)| (*k as i64) % 5 == r));
        }
    }

    #[test]
    fn fifth_root_tables_are_palindromic_up_to_sign() {
        // b_{20-r} = (-1)^r b_r for E4, b_{30-r} = (-1)^r b_r for E6
        for r in 0..=20 {
            let s = if r % 2 == 0 { 1 } else { -1 };
            assert_eq!(E4_FIFTH_ROOT[20 - r], s * E4_FIFTH_ROOT[r]);
        }
        for r in 0..=30 {
            let s = if r % 2 == 0 { 1 } else { -1 };
            assert_eq!(E6_FIFTH_ROOT[30 - r], s * E6_FIFTH_ROOT[r]);
        }
    }
}
