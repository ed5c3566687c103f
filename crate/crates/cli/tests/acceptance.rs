//! Acceptance criteria AC-1 … AC-14. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails. Every comparison is exact
//! (rational or integer equality); the tolerance is pinned at zero.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use peakalg::algebra::{rank, rat, ratio, Polynomial, Rational, SparseVec};
use peakalg::combinatorics::{
    compositions, odd_compositions, odd_partitions, peak_compositions, peak_sets, Composition, IndexSet,
};
use peakalg::decomp::{carter_matrix, decomposition_matrix, reference_table};
use peakalg::hecke_clifford::{
    build_iso, build_module, clifford::is_even, clifford_multiply, endomorphism_dim, frobenius_res,
    frobenius_res_from_series, intertwines, minimal_idempotent, radical_dimension_report, simple_module,
    verify_relations,
};
use peakalg::io::MatrixJson;
use peakalg::peak::{
    expand_in_t, hl_q, hl_q_matrix, hl_q_two_row, log_sigma_tilde, log_sigma_tilde_closed_form, peak_dimension,
    pi_class, s_tilde, theta_fun, theta_minus1, theta_q, theta_spectrum, theta_via_internal_product,
};
use peakalg::sym::{coproduct, pairing, NsfBasis, NsfElement, NsfTensor, QsymElement};
use rand::{rngs::StdRng, Rng, SeedableRng};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: peakalg::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

/// Golden tables through the command-line interface, entry by entry.
fn ac1() -> Outcome {
    for n in 3..=9 {
        let out = Command::new(env!("CARGO_BIN_EXE_peakalg"))
            .args(["decomp", "matrix", "--n", &n.to_string(), "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("n = {n}: exit status {}", out.status))?;
        let m: MatrixJson = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let t = reference_table(n).ok_or("missing reference table")?;
        ensure(m.rows == t.rows && m.cols == t.cols, || format!("n = {n}: labels differ"))?;
        for (r, row) in t.rows.iter().enumerate() {
            for (c, col) in t.cols.iter().enumerate() {
                ensure(m.entries[r][c] == t.entries[r][c], || {
                    format!("n = {n}, [{row}, {col}]: got {}, expected {}", m.entries[r][c], t.entries[r][c])
                })?;
            }
        }
    }
    // spot checks copied by hand from the printed tables
    for (n, row, col, want) in [(9, "531", "3321", 6), (8, "431", "3221", 4), (7, "421", "322", 2), (9, "531", "3222", 8)] {
        let got = lib(decomposition_matrix(n))?.entry_by_label(row, col);
        ensure(got == Some(want), || format!("n = {n}, [{row}, {col}]: got {got:?}, expected {want}"))?;
    }
    Ok(())
}

fn ac2() -> Outcome {
    let mut fib = vec![0u64, 1, 1];
    for k in 3..=14 {
        fib.push(fib[k - 1] + fib[k - 2]);
    }
    for n in 1..=14 {
        let (a, b, c) = (peak_dimension(n), peak_sets(n).len() as u64, odd_compositions(n).len() as u64);
        ensure(a == fib[n] && b == fib[n] && c == fib[n], || format!("n = {n}: {a}, {b}, {c} vs f_n = {}", fib[n]))?;
    }
    for n in 1..=9 {
        let index: std::collections::HashMap<Composition, usize> =
            compositions(n).into_iter().enumerate().map(|(k, i)| (i, k)).collect();
        let images: Vec<SparseVec<Rational>> = compositions(n)
            .into_iter()
            .map(|i| {
                let x = theta_minus1(&NsfElement::ribbon(i));
                SparseVec::from_pairs(x.to_r().terms().iter().map(|(j, c)| (index[j], c.clone())))
            })
            .collect();
        let r = rank(&images) as u64;
        ensure(r == fib[n], || format!("n = {n}: rank {r} vs f_n = {}", fib[n]))?;
    }
    Ok(())
}

fn ac3() -> Outcome {
    for n in 1..=6 {
        for i in compositions(n) {
            let r = NsfElement::ribbon(i.clone());
            let closed = theta_minus1(&r);
            let substituted = theta_q(&r, &rat(-1));
            let internal = lib(theta_via_internal_product(&r))?;
            ensure(closed.same_as(&substituted), || format!("{i}: closed form vs substitution"))?;
            ensure(closed.same_as(&internal), || format!("{i}: closed form vs internal product"))?;
        }
    }
    Ok(())
}

fn ac4() -> Outcome {
    for n in 1..=5 {
        for i in compositions(n) {
            lib(verify_relations(&lib(build_module(&i))?)).map_err(|e| format!("{i}: {e}"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(20);
    for _ in 0..20 {
        let des = IndexSet::from_bits(6, rng.gen_range(0..32u64));
        let i = lib(Composition::from_descents(&des, 6))?;
        lib(verify_relations(&lib(build_module(&i))?)).map_err(|e| format!("{i}: {e}"))?;
    }
    Ok(())
}

fn ac5() -> Outcome {
    for n in 1..=8 {
        for i in compositions(n) {
            let theta = lib(theta_fun(&i.peak_set(), n))?;
            ensure(frobenius_res(&i) == theta, || format!("{i}: closed form"))?;
            if n <= 5 {
                let series = lib(frobenius_res_from_series(&lib(build_module(&i))?))?;
                ensure(series == theta, || format!("{i}: composition series"))?;
            }
        }
    }
    Ok(())
}

fn ac6() -> Outcome {
    for n in 1..=5 {
        for i in compositions(n) {
            let d = lib(endomorphism_dim(&i))?;
            let want = 1usize << i.valleys().len();
            ensure(d == want, || format!("{i}: {d} vs {want}"))?;
        }
    }
    Ok(())
}

fn ac7() -> Outcome {
    for n in 1..=6 {
        for i in peak_compositions(n) {
            let e = lib(minimal_idempotent(&i))?;
            ensure(clifford_multiply(&e, &e) == e && is_even(&e), || format!("{i}: idempotent"))?;
            let s = lib(simple_module(&i))?;
            let want = 1usize << (n - (i.peak_set().len() + 1) / 2);
            ensure(s.is_stable(), || format!("{i}: not stable"))?;
            ensure(s.dim() == want, || format!("{i}: dimension {} vs {want}", s.dim()))?;
            if n <= 4 {
                ensure(s.is_cyclic_from_every_basis_vector(), || format!("{i}: not cyclic"))?;
            }
        }
    }
    Ok(())
}

fn ac8() -> Outcome {
    for n in 1..=5 {
        let all = compositions(n);
        let modules = all.iter().map(|i| lib(build_module(i))).collect::<Result<Vec<_>, _>>()?;
        for (a, i) in all.iter().enumerate() {
            for (b, j) in all.iter().enumerate() {
                let f = lib(build_iso(i, j))?;
                ensure(f.is_some() == (i.peak_set() == j.peak_set()), || format!("({i}, {j}): wrong verdict"))?;
                if let Some(f) = f {
                    ensure(f.is_invertible() && intertwines(&f, &modules[a], &modules[b]), || {
                        format!("({i}, {j}): not an isomorphism")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn ac9() -> Outcome {
    for (n, want) in [(2usize, 0usize), (3, 0), (4, 128)] {
        let r = lib(radical_dimension_report(n))?;
        // 2^n n! - Σ_P 2^{2n-(|P|+1)}, summed here independently
        let total: usize = (1..=n).product::<usize>() << n;
        let simple: usize = peak_sets(n).iter().map(|p| 1usize << (2 * n - p.len() - 1)).sum();
        ensure(total - simple == want, || format!("n = {n}: formula {}", total - simple))?;
        ensure(r.formula == want.into(), || format!("n = {n}: reported formula {}", r.formula))?;
        ensure(r.computed == Some(want), || format!("n = {n}: computed {:?}", r.computed))?;
    }
    Ok(())
}

fn ac10() -> Outcome {
    for n in 1..=8 {
        ensure(log_sigma_tilde(n).same_as(&log_sigma_tilde_closed_form(n)), || format!("n = {n}"))?;
    }
    let t = lib(expand_in_t(&log_sigma_tilde(3), 3))?;
    let get = |s: &str| t.get(&comp(s)).cloned().unwrap_or_else(|| rat(0));
    ensure(get("3") == rat(-2), || format!("T_(3) coefficient {}", get("3")))?;
    ensure(get("1,1,1") == ratio(2, 3), || format!("T_(1)^3 coefficient {}", get("1,1,1")))?;
    ensure(t.len() == 2, || format!("unexpected terms {t:?}"))
}

fn pi(n: usize, e: &[usize]) -> NsfElement {
    pi_class(&IndexSet::new(n, e.iter().copied()).unwrap(), n).unwrap()
}

fn ac11() -> Outcome {
    for n in 1..=8 {
        let (cols, m) = lib(hl_q_matrix(n))?;
        ensure(m.is_invertible(), || format!("n = {n}: singular"))?;
        for c in 0..cols.len() {
            ensure(m.get(c, c) != rat(0), || format!("n = {n}: zero diagonal at {}", cols[c]))?;
            for r in c + 1..cols.len() {
                ensure(m.get(r, c) == rat(0), || format!("n = {n}: entry below diagonal at ({r}, {c})"))?;
            }
        }
        // Q_(n) = 2Π_∅, Q_(n-1,1) = 2(Π_{n-1} + Π_∅), Q_(k,n-k) = 4(Π_k + Π_{k+1} + Π_∅)
        let q_n = lib(hl_q(&Composition::row(n)))?;
        ensure(q_n.same_as(&pi(n, &[]).scale(&rat(2))), || format!("Q_({n})"))?;
        ensure(q_n.same_as(&s_tilde(n)), || format!("Q_({n}) vs S~_{n}"))?;
        if n >= 3 {
            let q = lib(hl_q(&lib(Composition::new(vec![n - 1, 1]))?))?;
            ensure(q.same_as(&pi(n, &[n - 1]).add(&pi(n, &[])).scale(&rat(2))), || format!("Q_({},1)", n - 1))?;
        }
        for k in 2..=n.saturating_sub(2) {
            let q = lib(hl_q_two_row(k, n - k))?;
            let want = pi(n, &[k]).add(&pi(n, &[k + 1])).add(&pi(n, &[])).scale(&rat(4));
            ensure(q.same_as(&want), || format!("Q_({k},{})", n - k))?;
            ensure(lib(hl_q(&lib(Composition::new(vec![k, n - k]))?))?.same_as(&want), || format!("hl_q({k},{})", n - k))?;
        }
    }
    Ok(())
}

fn ac12() -> Outcome {
    for n in 1..=7 {
        let p = lib(theta_spectrum(n))?;
        let mut roots: BTreeSet<Rational> = odd_partitions(n).iter().map(|l| rat(1i64 << l.len())).collect();
        // QSym_n has dimension 2^{n-1} and ϑ has rank f_n, so 0 is an eigenvalue iff 2^{n-1} > f_n
        if (1u64 << (n - 1)) > peak_dimension(n) {
            roots.insert(rat(0));
        }
        let want = Polynomial::from_roots(&roots.into_iter().collect::<Vec<_>>());
        ensure(p.is_squarefree(), || format!("n = {n}: not squarefree"))?;
        ensure(p == want, || format!("n = {n}: {p:?} vs {want:?}"))?;
    }
    Ok(())
}

fn ac13() -> Outcome {
    for k_size in 0..=5 {
        for k in compositions(k_size) {
            let delta = coproduct(&NsfElement::ribbon(k.clone())).to_r();
            for a in 0..=k_size {
                for i in compositions(a) {
                    for j in compositions(k_size - a) {
                        let left = delta.coefficient(&i, &j);
                        let product = QsymElement::fundamental(i.clone()).product(&QsymElement::fundamental(j.clone()));
                        let right = pairing(&product, &NsfElement::ribbon(k.clone()));
                        ensure(left == right, || format!("K = {k}, I = {i}, J = {j}: {left} vs {right}"))?;
                    }
                }
            }
        }
    }
    for n in 0..=6 {
        let mut want = NsfTensor::zero(NsfBasis::S);
        for i in 0..=n {
            want = want.add(&NsfTensor::pure(&s_tilde(i), &s_tilde(n - i)));
        }
        let got = coproduct(&s_tilde(n));
        ensure(got.to_r() == want.to_r(), || format!("Δ(S~_{n})"))?;
    }
    Ok(())
}

fn ac14() -> Outcome {
    for n in 1..=9 {
        let (a, b) = (lib(carter_matrix(n))?, lib(decomposition_matrix(n))?);
        ensure(a == b, || format!("n = {n}: tableau and Pfaffian routes differ"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 14] = [
        ("AC-1", "golden decomposition tables via CLI, n = 3..9", ac1),
        ("AC-2", "Fibonacci dimensions n <= 14, rank of theta n <= 9", ac2),
        ("AC-3", "three routes to theta(R_I) agree, n <= 6", ac3),
        ("AC-4", "module relations, n <= 5 and 20 random at n = 6", ac4),
        ("AC-5", "Frobenius characteristic, closed form n <= 8, series n <= 5", ac5),
        ("AC-6", "endomorphism dimension 2^|V|, n <= 5", ac6),
        ("AC-7", "simple modules n <= 6, cyclicity n <= 4", ac7),
        ("AC-8", "isomorphism iff equal peak sets, n <= 5", ac8),
        ("AC-9", "radical dimension n = 2, 3, 4", ac9),
        ("AC-10", "log of sigma-tilde vs T^I closed form, n <= 8", ac10),
        ("AC-11", "Q_I basis triangular, two-row values, n <= 8", ac11),
        ("AC-12", "spectrum of theta on QSym_n, n <= 7", ac12),
        ("AC-13", "Hopf duality |K| <= 5, coproduct of S-tilde n <= 6", ac13),
        ("AC-14", "tableau route equals Pfaffian route, n <= 9", ac14),
    ];
    let mut failures = 0;
    for (id, what, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("{id:<6} PASS  {what} [exact, tolerance 0] ({secs:.1}s)"),
            Err(msg) => {
                failures += 1;
                println!("{id:<6} FAIL  {what} [exact, tolerance 0] ({secs:.1}s): {msg}");
            }
        }
    }
    println!("acceptance: {} of 14 criteria passed", 14 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
