//! Built-in consistency checks. `quick` uses small sizes; `full` goes up to
//! the sizes of the reference tables.

use std::fmt::Write as _;
use std::time::Instant;

use peakalg::combinatorics::{compositions, fibonacci, odd_compositions, peak_compositions, peak_sets};
use peakalg::decomp::{carter_matrix, decomposition_matrix, reference_table};
use peakalg::hecke_clifford::{
    build_iso, build_module, check_triangularity, clifford_multiply, frobenius_res, frobenius_res_from_series,
    minimal_idempotent, radical_dimension_report, simple_module, verify_relations,
};
use peakalg::peak::{log_sigma_tilde, log_sigma_tilde_closed_form, peak_dimension, theta_fun, theta_minus1, theta_q,
    theta_via_internal_product};
use peakalg::algebra::rat;
use peakalg::sym::NsfElement;
use peakalg::{Error, Result};

use crate::Level;

struct Sizes {
    theta: usize,
    modules: usize,
    simples: usize,
    decomp: usize,
    radical: usize,
    log: usize,
}

fn sizes(level: Level) -> Sizes {
    match level {
        Level::Quick => Sizes { theta: 4, modules: 3, simples: 4, decomp: 6, radical: 3, log: 5 },
        Level::Full => Sizes { theta: 6, modules: 5, simples: 6, decomp: 9, radical: 4, log: 8 },
    }
}

fn check_theta(max: usize) -> Result<bool> {
    for n in 1..=max {
        for i in compositions(n) {
            let r = NsfElement::ribbon(i);
            let closed = theta_minus1(&r);
            if !closed.same_as(&theta_q(&r, &rat(-1))) || !closed.same_as(&theta_via_internal_product(&r)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_fibonacci(max: usize) -> bool {
    (1..=max).all(|n| {
        let f = fibonacci(n);
        peak_dimension(n) == f && peak_sets(n).len() as u64 == f && odd_compositions(n).len() as u64 == f
    })
}

fn check_modules(max: usize) -> Result<bool> {
    for n in 1..=max {
        for i in compositions(n) {
            let m = build_module(&i)?;
            let theta = theta_fun(&i.peak_set(), n)?;
            if verify_relations(&m).is_err()
                || check_triangularity(&m).is_err()
                || frobenius_res(&i) != theta
                || frobenius_res_from_series(&m)? != theta
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_isomorphisms(max: usize) -> Result<bool> {
    for n in 1..=max {
        let all = compositions(n);
        for i in &all {
            for j in &all {
                if build_iso(i, j)?.is_some() != (i.peak_set() == j.peak_set()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn check_simples(max: usize) -> Result<bool> {
    for n in 1..=max {
        for i in peak_compositions(n) {
            let e = minimal_idempotent(&i)?;
            let s = simple_module(&i)?;
            if clifford_multiply(&e, &e) != e || !s.is_stable() || s.dim() != 1 << (n - (i.peak_set().len() + 1) / 2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_decomposition(max: usize) -> Result<bool> {
    for n in 3..=max {
        let m = decomposition_matrix(n)?;
        let t = reference_table(n).ok_or_else(|| Error::internal(format!("no reference table for n = {n}")))?;
        if m.row_labels() != t.rows || m.col_labels() != t.cols || m.entries.iter().zip(t.entries).any(|(a, b)| a != b) {
            return Ok(false);
        }
        if carter_matrix(n)? != m {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_radical(max: usize) -> Result<bool> {
    for n in 2..=max {
        let r = radical_dimension_report(n)?;
        if r.computed.map(Into::into) != Some(r.formula) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_log(max: usize) -> bool {
    (1..=max).all(|n| log_sigma_tilde(n).same_as(&log_sigma_tilde_closed_form(n)))
}

/// Runs every check; the report has one line per check.
pub fn run(level: Level) -> Result<String> {
    let s = sizes(level);
    let checks: Vec<(String, Box<dyn Fn() -> Result<bool>>)> = vec![
        (format!("theta routes agree, n <= {}", s.theta), Box::new(move || check_theta(s.theta))),
        ("Fibonacci dimensions, n <= 14".into(), Box::new(|| Ok(check_fibonacci(14)))),
        (format!("module relations and characteristics, n <= {}", s.modules), Box::new(move || check_modules(s.modules))),
        (format!("isomorphism classification, n <= {}", s.modules.min(4)), Box::new(move || check_isomorphisms(s.modules.min(4)))),
        (format!("simple modules, n <= {}", s.simples), Box::new(move || check_simples(s.simples))),
        (format!("decomposition matrices, n <= {}", s.decomp), Box::new(move || check_decomposition(s.decomp))),
        (format!("radical dimension, n <= {}", s.radical), Box::new(move || check_radical(s.radical))),
        (format!("log of sigma, n <= {}", s.log), Box::new(move || Ok(check_log(s.log)))),
    ];
    let mut report = String::new();
    let mut failed = Vec::new();
    for (name, check) in checks {
        let start = Instant::now();
        let ok = check()?;
        let _ = writeln!(report, "{} {name} ({:.2}s)", if ok { "ok    " } else { "FAILED" }, start.elapsed().as_secs_f64());
        if !ok {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        Ok(report)
    } else {
        eprint!("{report}");
        Err(Error::internal(format!("selftest failed: {}", failed.join("; "))))
    }
}
