//! Multiplicity tables as published, used as comparison targets.

/// Rows a_1..a_11, columns d = 1..=20.
pub const H0_X1: [[u64; 20]; 11] = [
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 2, 1, 1, 1, 1, 1],
    [0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 2, 1, 2, 1],
    [0, 1, 0, 1, 0, 1, 0, 2, 1, 2, 1, 2, 1, 2, 2, 3, 2, 3, 2, 3],
    [0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3],
    [0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3],
    [0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3],
    [0, 0, 0, 1, 1, 1, 2, 1, 1, 2, 2, 2, 3, 3, 2, 3, 3, 3, 4, 4],
    [1, 0, 1, 1, 2, 1, 3, 2, 3, 3, 4, 3, 5, 4, 5, 5, 6, 5, 7, 6],
    [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10],
    [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10],
];

/// Rows a_1..a_11, columns d = 1..=20.
pub const H0_X2: [[u64; 20]; 11] = [
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1, 2, 1, 2, 1],
    [1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 2, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 2, 1, 2, 1, 2, 1, 2, 2, 3, 2, 3, 2, 3],
    [0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3],
    [0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3],
    [0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3],
    [0, 0, 0, 1, 1, 1, 2, 1, 1, 2, 2, 2, 3, 3, 2, 3, 3, 3, 4, 4],
    [1, 0, 1, 1, 2, 1, 3, 2, 3, 3, 4, 3, 5, 4, 5, 5, 6, 5, 7, 6],
    [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10],
    [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10],
];

/// Rows a_1..a_11, columns d = 0..=10.
pub const SYM_W9_W2: [[u64; 11]; 11] = [
    [1, 0, 1, 0, 9, 5, 85, 137, 637, 1385, 4210],
    [0, 1, 0, 4, 6, 57, 145, 594, 1565, 4716, 11616],
    [0, 0, 0, 5, 6, 57, 145, 594, 1562, 4716, 11619],
    [0, 0, 3, 1, 34, 71, 387, 1010, 3473, 8843, 24274],
    [0, 0, 0, 8, 20, 118, 374, 1324, 3761, 10814, 27442],
    [0, 0, 0, 8, 19, 117, 367, 1317, 3743, 10796, 27391],
    [0, 0, 0, 8, 19, 117, 367, 1317, 3743, 10796, 27391],
    [0, 0, 1, 5, 32, 123, 447, 1470, 4398, 12171, 31680],
    [0, 1, 0, 13, 41, 234, 725, 2646, 7486, 21564, 54810],
    [0, 0, 3, 13, 80, 306, 1187, 3783, 11569, 31765, 83234],
    [0, 0, 3, 13, 80, 306, 1187, 3783, 11569, 31765, 83234],
];

/// Rows a_1..a_11, columns d = 0..=10.
pub const SYM_W9_W3: [[u64; 11]; 11] = [
    [1, 0, 1, 0, 9, 5, 85, 137, 637, 1385, 4210],
    [0, 0, 0, 5, 6, 57, 145, 594, 1562, 4716, 11619],
    [0, 1, 0, 4, 6, 57, 145, 594, 1565, 4716, 11616],
    [0, 0, 3, 1, 34, 71, 387, 1010, 3473, 8843, 24274],
    [0, 0, 0, 8, 20, 118, 374, 1324, 3761, 10814, 27442],
    [0, 0, 0, 8, 19, 117, 367, 1317, 3743, 10796, 27391],
    [0, 0, 0, 8, 19, 117, 367, 1317, 3743, 10796, 27391],
    [0, 0, 1, 5, 32, 123, 447, 1470, 4398, 12171, 31680],
    [0, 1, 0, 13, 41, 234, 725, 2646, 7486, 21564, 54810],
    [0, 0, 3, 13, 80, 306, 1187, 3783, 11569, 31765, 83234],
    [0, 0, 3, 13, 80, 306, 1187, 3783, 11569, 31765, 83234],
];

/// Rows a_1..a_11, columns d = 0..=10.
pub const SYM_W9: [[u64; 11]; 11] = [
    [1, 0, 1, 0, 4, 2, 34, 40, 183, 332, 922],
    [0, 0, 0, 2, 3, 22, 53, 184, 433, 1140, 2501],
    [0, 0, 0, 2, 3, 22, 53, 184, 433, 1140, 2501],
    [0, 0, 2, 0, 18, 28, 146, 308, 980, 2120, 5284],
    [0, 0, 0, 4, 10, 46, 140, 408, 1047, 2612, 5922],
    [0, 0, 0, 5, 9, 50, 133, 417, 1030, 2643, 5878],
    [0, 0, 0, 5, 9, 50, 133, 417, 1030, 2643, 5878],
    [0, 0, 1, 2, 17, 48, 165, 454, 1230, 2928, 6863],
    [0, 1, 0, 7, 20, 100, 260, 843, 2060, 5267, 11772],
    [0, 0, 2, 8, 39, 130, 431, 1200, 3200, 7740, 17928],
    [0, 0, 2, 8, 39, 130, 431, 1200, 3200, 7740, 17928],
];

/// Rows a_1..a_11, columns d = 0..=10.
pub const SYM_W2: [[u64; 11]; 11] = [
    [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 0, 0, 1, 0, 1, 1, 2, 0],
    [0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 1],
    [0, 0, 1, 0, 1, 0, 2, 0, 3, 1, 4],
    [0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

/// Rows a_1..a_11, columns d = 0..=10.
pub const SYM_W3: [[u64; 11]; 11] = [
    [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 1],
    [0, 1, 0, 0, 0, 1, 0, 1, 1, 2, 0],
    [0, 0, 1, 0, 1, 0, 2, 0, 3, 1, 4],
    [0, 0, 0, 1, 0, 1, 1, 2, 1, 3, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 3],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

/// Which published multiplicity table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableId {
    H0X1,
    H0X2,
    SymW9W2,
    SymW9W3,
    SymW9,
    SymW2,
    SymW3,
}

impl TableId {
    pub const ALL: [TableId; 7] = [
        TableId::H0X1,
        TableId::H0X2,
        TableId::SymW9W2,
        TableId::SymW9W3,
        TableId::SymW9,
        TableId::SymW2,
        TableId::SymW3,
    ];

    pub fn caption(self) -> &'static str {
        match self {
            TableId::H0X1 => "Decomposition of H^0(X_1,K^d)",
            TableId::H0X2 => "Decomposition of H^0(X_2,K^d)",
            TableId::SymW9W2 => "Decomposition of S^d(W_9+W_2)",
            TableId::SymW9W3 => "Decomposition of S^d(W_9+W_3)",
            TableId::SymW9 => "Decomposition of S^dW_9",
            TableId::SymW2 => "Decomposition of S^dW_2",
            TableId::SymW3 => "Decomposition of S^dW_3",
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            TableId::H0X1 => "h0_x1",
            TableId::H0X2 => "h0_x2",
            TableId::SymW9W2 => "sym_w9_w2",
            TableId::SymW9W3 => "sym_w9_w3",
            TableId::SymW9 => "sym_w9",
            TableId::SymW2 => "sym_w2",
            TableId::SymW3 => "sym_w3",
        }
    }

    /// Smallest d in the table.
    pub fn first_d(self) -> u32 {
        match self {
            TableId::H0X1 | TableId::H0X2 => 1,
            _ => 0,
        }
    }

    pub fn num_columns(self) -> usize {
        match self {
            TableId::H0X1 | TableId::H0X2 => 20,
            _ => 11,
        }
    }

    /// Published multiplicities (a_1..a_11) at degree d.
    pub fn column(self, d: u32) -> Option<[u64; 11]> {
        let j = d.checked_sub(self.first_d())? as usize;
        if j >= self.num_columns() {
            return None;
        }
        Some(std::array::from_fn(|i| match self {
            TableId::H0X1 => H0_X1[i][j],
            TableId::H0X2 => H0_X2[i][j],
            TableId::SymW9W2 => SYM_W9_W2[i][j],
            TableId::SymW9W3 => SYM_W9_W3[i][j],
            TableId::SymW9 => SYM_W9[i][j],
            TableId::SymW2 => SYM_W2[i][j],
            TableId::SymW3 => SYM_W3[i][j],
        }))
    }
}
