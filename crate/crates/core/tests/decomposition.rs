use peakalg::algebra::rat;
use peakalg::combinatorics::strict_partitions;
use peakalg::decomp::{
    carter_matrix, decomposition_matrix, peak_histogram, poly_to_fundamental, reference_table, schur_q, theta_expand,
};

#[test]
fn matrices_match_reference_tables() {
    for n in 3..=9 {
        let m = decomposition_matrix(n).unwrap();
        let t = reference_table(n).unwrap();
        assert_eq!(m.row_labels(), t.rows, "n = {n}");
        assert_eq!(m.col_labels(), t.cols, "n = {n}");
        for (r, row) in t.rows.iter().enumerate() {
            for (c, col) in t.cols.iter().enumerate() {
                assert_eq!(m.entry_by_label(row, col), Some(t.entries[r][c]), "n = {n}, [{row}, {col}]");
            }
        }
        assert_eq!(carter_matrix(n).unwrap(), m, "n = {n}");
    }
}

#[test]
fn schur_q_is_the_tableau_sum() {
    for n in 1..=8 {
        for lambda in strict_partitions(n) {
            let q = schur_q(&lambda, n).unwrap();
            assert!(q.is_symmetric(), "{lambda}");
            let coeffs = theta_expand(&poly_to_fundamental(&q, n).unwrap()).unwrap();
            let hist: std::collections::BTreeMap<_, _> =
                peak_histogram(&lambda).into_iter().map(|(p, c)| (p, rat(c as i64))).collect();
            assert_eq!(coeffs, hist, "{lambda}");
        }
    }
}
