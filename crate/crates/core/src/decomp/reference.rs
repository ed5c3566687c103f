//! Known decomposition matrices for `3 ≤ n ≤ 9`, used as golden data.
//!
//! The first column at `n = 5` is labelled `5` (the peak composition of
//! the empty peak set); the source table prints it as `3`.

/// Row labels, column labels and entries, labels written as concatenated parts.
pub struct ReferenceTable {
    pub n: usize,
    pub rows: &'static [&'static str],
    pub cols: &'static [&'static str],
    pub entries: &'static [&'static [u64]],
}

const N3: ReferenceTable = ReferenceTable {
    n: 3,
    rows: &["3", "21"],
    cols: &["3", "21"],
    entries: &[&[1, 0], &[0, 1]],
};

const N4: ReferenceTable = ReferenceTable {
    n: 4,
    rows: &["4", "31"],
    cols: &["4", "31", "22"],
    entries: &[&[1, 0, 0], &[0, 1, 1]],
};

const N5: ReferenceTable = ReferenceTable {
    n: 5,
    rows: &["5", "41", "32"],
    cols: &["5", "41", "32", "23", "221"],
    entries: &[&[1, 0, 0, 0, 0], &[0, 1, 1, 1, 0], &[0, 0, 1, 0, 1]],
};

const N6: ReferenceTable = ReferenceTable {
    n: 6,
    rows: &["6", "51", "42", "321"],
    cols: &["6", "51", "42", "33", "321", "24", "231", "222"],
    entries: &[
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 1, 1, 0, 1, 0, 0],
        &[0, 0, 1, 1, 1, 0, 1, 1],
        &[0, 0, 0, 0, 1, 0, 0, 1],
    ],
};

const N7: ReferenceTable = ReferenceTable {
    n: 7,
    rows: &["7", "61", "52", "43", "421"],
    cols: &["7", "61", "52", "43", "421", "34", "331", "322", "25", "241", "232", "223", "2221"],
    entries: &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0],
        &[0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 2],
        &[0, 0, 0, 0, 1, 0, 1, 2, 0, 0, 1, 1, 2],
    ],
};

const N8: ReferenceTable = ReferenceTable {
    n: 8,
    rows: &["8", "71", "62", "53", "521", "431"],
    cols: &[
        "8", "71", "62", "53", "521", "44", "431", "422", "35", "341", "332", "323", "3221", "26", "251", "242",
        "233", "2321", "224", "2231", "2222",
    ],
    entries: &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 0, 0],
        &[0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 2, 1, 2, 0, 0, 1, 1, 2, 0, 2, 2],
        &[0, 0, 0, 0, 1, 0, 1, 2, 0, 1, 2, 2, 2, 0, 0, 1, 1, 2, 1, 2, 2],
        &[0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 2, 1, 4, 0, 0, 0, 1, 2, 0, 2, 4],
    ],
};

const N9: ReferenceTable = ReferenceTable {
    n: 9,
    rows: &["9", "81", "72", "63", "621", "54", "531", "432"],
    cols: &[
        "9", "81", "72", "63", "621", "54", "531", "522", "45", "441", "432", "423", "4221", "36", "351", "342",
        "333", "3321", "324", "3231", "3222", "27", "261", "252", "243", "2421", "234", "2331", "2322", "225",
        "2241", "2232", "2223", "22221",
    ],
    entries: &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 2, 1, 2, 0, 1, 2, 2, 2, 1, 2, 2, 0, 0, 1, 1, 2, 1, 2, 2, 0, 2, 2, 2, 0],
        &[0, 0, 0, 0, 1, 0, 1, 2, 0, 1, 2, 2, 2, 0, 1, 2, 2, 2, 2, 2, 2, 0, 0, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 0],
        &[0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 2, 0, 2, 2, 0, 0, 0, 1, 0, 0, 2, 2, 0, 0, 2, 0, 2],
        &[0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 3, 2, 4, 0, 0, 2, 3, 6, 1, 6, 8, 0, 0, 0, 1, 2, 1, 4, 6, 0, 2, 6, 4, 4],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 1, 2, 0, 2, 4, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 2],
    ],
};

const TABLES: [&ReferenceTable; 7] = [&N3, &N4, &N5, &N6, &N7, &N8, &N9];

pub fn reference_table(n: usize) -> Option<&'static ReferenceTable> {
    TABLES.iter().copied().find(|t| t.n == n)
}

impl ReferenceTable {
    pub fn entry(&self, row: &str, col: &str) -> Option<u64> {
        let r = self.rows.iter().position(|&x| x == row)?;
        let c = self.cols.iter().position(|&x| x == col)?;
        Some(self.entries[r][c])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_rectangular() {
        for t in TABLES {
            assert_eq!(t.entries.len(), t.rows.len());
            assert!(t.entries.iter().all(|r| r.len() == t.cols.len()), "n = {}", t.n);
        }
        assert_eq!(reference_table(9).unwrap().entry("531", "3321"), Some(6));
        assert_eq!(reference_table(8).unwrap().entry("431", "3221"), Some(4));
    }
}
