//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test -p lglab --test acceptance --
//! --nocapture` to see the lines.

use std::time::Instant;

use lgcore::brieskorn::{connection_matrix, spectrum_qh, BrieskornLattice};
use lgcore::cu_linalg::{basicu_check, smith_normal_form, UPoly, UPolyMatrix};
use lgcore::groebner::milnor_algebra;
use lgcore::linalg::charpoly;
use lgcore::oracles::{
    hypersurface_euler, hypersurface_euler_recursion, kouchnirenko_mu, predicted_ranks_section5,
    NewtonData, NondegeneracyVerdict,
};
use lgcore::polyalg::{parse_poly, ExactPoly, Sign};
use lgcore::twisted_derham::{
    fiber_cohomology_dims, fiber_dims_ladder, koszul_dims, torsion_growth_verdict,
    TorsionVerdict, TruncatedComplex,
};
use lgcore::{rat, rat_int, Rat};
use lglab::corpus::{parse_corpus, CorpusEntry, Expectation, STANDARD_CORPUS};

use num_traits::{One, Zero};

fn corpus_entries() -> Vec<CorpusEntry> {
    parse_corpus(STANDARD_CORPUS).expect("bundled corpus parses")
}

fn entry_poly(entry: &CorpusEntry) -> ExactPoly {
    let vars: Vec<&str> = entry.vars.iter().map(String::as_str).collect();
    parse_poly(&entry.poly, &vars).expect("corpus polynomial parses")
}

fn lattice_entries() -> Vec<CorpusEntry> {
    corpus_entries()
        .into_iter()
        .filter(|e| e.expect == Expectation::Report)
        .collect()
}

fn verdict_line(criterion: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("criterion {criterion} ({name}): {status} {detail}");
    assert!(pass, "criterion {criterion} ({name}) failed: {detail}");
}

/// The five fixed evaluation points.
fn samples() -> Vec<Rat> {
    vec![rat_int(0), rat_int(1), rat_int(-1), rat_int(2), rat(7, 3)]
}

#[test]
fn criterion_1_zero_function_pathology() {
    let start = Instant::now();
    let f = ExactPoly::zero(1);
    let ladder = [2u32, 4, 6, 8];
    let at_zero: Vec<usize> = ladder
        .iter()
        .map(|&d| fiber_cohomology_dims(&f, Sign::Plus, d, &rat_int(0))[1])
        .collect();
    let strictly_increasing = at_zero.windows(2).all(|w| w[0] < w[1]);
    let mut nonzero_vanish = true;
    for u_o in [rat_int(1), rat_int(-1), rat_int(2)] {
        for &d in &ladder {
            nonzero_vanish &= fiber_cohomology_dims(&f, Sign::Plus, d, &u_o)[1] == 0;
        }
    }
    let verdict = torsion_growth_verdict(&f, &[2, 3, 4], &ladder);
    let is_torsion = matches!(verdict, TorsionVerdict::TorsionGrowth { .. });
    let elapsed = start.elapsed().as_secs_f64();
    verdict_line(
        1,
        "zero-function u-torsion pathology",
        strictly_increasing && nonzero_vanish && is_torsion && elapsed < 1.0,
        &format!(
            "H^1 at 0: {at_zero:?}, nonzero samples vanish: {nonzero_vanish}, verdict \
             torsion-growth: {is_torsion}, {elapsed:.2}s"
        ),
    );
}

#[test]
fn criterion_2_fiber_constancy_and_freeness() {
    let start = Instant::now();
    let samples = samples();
    let mut failures = Vec::new();
    for entry in lattice_entries() {
        let f = entry_poly(&entry);
        let base = f.total_degree().max(2);
        let ladder = [base, base + 2, base + 4, base + 6];
        let report = fiber_dims_ladder(&f, Sign::Plus, &ladder, &samples);
        if !report.all_stabilized() {
            failures.push(format!("{}: dims did not stabilize", entry.name));
            continue;
        }
        let last = report.dims.last().unwrap();
        if !last.windows(2).all(|w| w[0] == w[1]) {
            failures.push(format!("{}: dims differ across samples: {last:?}", entry.name));
        }
        let tc = TruncatedComplex::build(&f, 2, base, Sign::Plus);
        let modules = tc.module_reports();
        for (k, m) in modules.iter().enumerate() {
            if !m.is_free() {
                failures.push(format!(
                    "{}: torsion in degree {k}: {:?}",
                    entry.name,
                    m.torsion.iter().map(UPoly::to_text).collect::<Vec<_>>()
                ));
            }
        }
        let verdict = basicu_check(&samples, last, &modules);
        if !verdict.consistent || !verdict.discrepancies.is_empty() {
            failures.push(format!(
                "{}: basicu discrepancies {:?}",
                entry.name, verdict.discrepancies
            ));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    verdict_line(
        2,
        "fiber-dimension constancy equals SNF freeness",
        failures.is_empty() && elapsed < 30.0,
        &format!("{} entries, failures: {failures:?}, {elapsed:.1}s", lattice_entries().len()),
    );
}

#[test]
fn criterion_3_rank_formula() {
    let mut checked = 0;
    let mut failures = Vec::new();
    for entry in lattice_entries() {
        let f = entry_poly(&entry);
        let nd = NewtonData::analyze(&f);
        if !nd.is_convenient()
            || !matches!(nd.verdict(), NondegeneracyVerdict::Nondegenerate { .. })
        {
            continue;
        }
        checked += 1;
        let newton = kouchnirenko_mu(&nd).expect("convenient nondegenerate");
        let mu = milnor_algebra(&f).expect("isolated").mu();
        let n = f.nvars();
        let base = f.total_degree().max(2);
        let report = fiber_dims_ladder(&f, Sign::Plus, &[base, base + 2, base + 4, base + 6], &[rat_int(0)]);
        let stabilized_top = report
            .stabilized_dims(0)
            .map(|dims| dims[n])
            .unwrap_or(usize::MAX);
        if !(stabilized_top == mu && mu == newton) {
            failures.push(format!(
                "{}: H^n = {stabilized_top}, mu = {mu}, newton = {newton}",
                entry.name
            ));
        }
    }
    verdict_line(
        3,
        "H^n dimension = Groebner mu = Kouchnirenko mu",
        failures.is_empty() && checked >= 10,
        &format!("{checked} convenient nondegenerate entries, failures: {failures:?}"),
    );
}

#[test]
fn criterion_4_connection_pole_order() {
    let mut failures = Vec::new();
    for entry in lattice_entries() {
        let f = entry_poly(&entry);
        match connection_matrix(&f, 6, entry.assume_tame) {
            Ok((a, stabilized)) => {
                if !stabilized {
                    failures.push(format!("{}: no stabilization certificate", entry.name));
                }
                // Entries are honest polynomials in u with degree headroom.
                for i in 0..a.rows {
                    for j in 0..a.cols {
                        if a.at(i, j).degree().unwrap_or(0) > 4 {
                            failures.push(format!(
                                "{}: entry ({i},{j}) degree {} exceeds N-2",
                                entry.name,
                                a.at(i, j).degree().unwrap_or(0)
                            ));
                        }
                    }
                }
            }
            Err(e) => failures.push(format!("{}: {e}", entry.name)),
        }
    }
    verdict_line(
        4,
        "connection matrix polynomial with certificate at N=6",
        failures.is_empty(),
        &format!("{} entries, failures: {failures:?}", lattice_entries().len()),
    );
}

#[test]
fn criterion_5_spectrum_vs_connection_eigenvalues() {
    let names = ["A1", "A2", "A3", "A4", "A5", "D4", "E6", "E7", "E8"];
    let entries = corpus_entries();
    // Fix the global shift on A1 first.
    let mut shift: Option<Rat> = None;
    let mut failures = Vec::new();
    for name in names {
        let entry = entries
            .iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("corpus entry {name}"));
        let f = entry_poly(entry);
        let weights = entry.weights.clone().expect("corpus weights");
        let sp = spectrum_qh(&f, &weights).expect("quasi-homogeneous");
        let bl = BrieskornLattice::build(&f, 6, entry.assume_tame).expect("lattice");
        let a1 = bl.connection_linear_part();
        if shift.is_none() {
            // mu(A1) = 1: the single eigenvalue determines the constant.
            assert_eq!(bl.rank(), 1, "A1 anchors the shift");
            shift = Some(a1.at(0, 0).clone() - &sp.alphas[0]);
        }
        let s = shift.clone().unwrap();
        let expected: Vec<Rat> = sp.alphas.iter().map(|a| a.clone() + &s).collect();
        // Exact: charpoly(A1) = prod (t - alpha_i - shift).
        let cp = charpoly(&a1);
        let mut product = vec![Rat::one()];
        for r in &expected {
            let mut next = vec![Rat::zero(); product.len() + 1];
            for (k, c) in product.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            product = next;
        }
        if cp != product {
            failures.push(format!("{name}: eigenvalues differ from spectrum + shift"));
        }
    }
    let s = shift.expect("anchored");
    verdict_line(
        5,
        "connection eigenvalues = spectrum + global constant",
        failures.is_empty() && s == rat_int(2),
        &format!("shift fixed on A1: {s}, failures: {failures:?}"),
    );
}

#[test]
fn criterion_6_pairing_perfectness() {
    let mut failures = Vec::new();
    for entry in lattice_entries() {
        let f = entry_poly(&entry);
        let bl = match BrieskornLattice::build(&f, 6, entry.assume_tame) {
            Ok(bl) => bl,
            Err(e) => {
                failures.push(format!("{}: {e}", entry.name));
                continue;
            }
        };
        let mu = bl.rank();
        let g = bl.gram();
        if g.det().is_zero() {
            failures.push(format!("{}: det G = 0", entry.name));
        }
        for i in 0..mu {
            for j in 0..mu {
                if g.at(i, j) != g.at(j, i) {
                    failures.push(format!("{}: G not symmetric", entry.name));
                }
            }
        }
        if let Some(weights) = &entry.weights {
            let sp = spectrum_qh(&f, weights).expect("corpus weights are exact");
            let n = rat_int(f.nvars() as i64);
            for i in 0..mu {
                for j in 0..mu {
                    if !g.at(i, j).is_zero()
                        && sp.alphas[i].clone() + &sp.alphas[j] != n
                    {
                        failures.push(format!(
                            "{}: nonzero G_{{{i}{j}}} off the pairing grid",
                            entry.name
                        ));
                    }
                }
            }
        }
    }
    verdict_line(
        6,
        "residue pairing symmetric, nondegenerate, on the spectrum grid",
        failures.is_empty(),
        &format!("{} entries, failures: {failures:?}", lattice_entries().len()),
    );
}

#[test]
fn criterion_7_section5_predictions() {
    let cubic = predicted_ranks_section5(2, 3).expect("plane cubic");
    let cubic_ok = cubic.ranks[2..=4] == [1, 2, 1];
    let quartic = predicted_ranks_section5(3, 4).expect("K3 quartic");
    // The middle Betti number 22 of the quartic surface feeds the middle
    // rank prediction (degree k with k - 2 = 2).
    let quartic_ok = quartic.rank(4) == 22;
    let euler_ok = (1..=4usize).all(|n| {
        (1..=6usize).all(|d| {
            n < 2 || hypersurface_euler(n, d) == hypersurface_euler_recursion(n, d)
        })
    });
    verdict_line(
        7,
        "hypersurface rank predictions with independent Euler recursion",
        cubic_ok && quartic_ok && euler_ok,
        &format!(
            "cubic ranks {:?}, quartic middle rank {}, euler routes agree: {euler_ok}",
            &cubic.ranks[2..=4],
            quartic.rank(4)
        ),
    );
}

#[test]
fn criterion_8_snf_randomized() {
    let mut state = 0x1234_5678_9abc_def0u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut failures = 0;
    for _ in 0..100 {
        let rows = 1 + (next() % 6) as usize;
        let cols = 1 + (next() % 6) as usize;
        let mut m = UPolyMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if next() % 2 == 0 {
                    let deg = (next() % 4) as usize;
                    let coeffs: Vec<Rat> =
                        (0..=deg).map(|_| rat_int((next() % 9) as i64 - 4)).collect();
                    m.set(i, j, UPoly::from_coeffs(coeffs));
                }
            }
        }
        let snf = smith_normal_form(&m);
        let ok = snf.u.mul(&m).mul(&snf.v) == snf.s
            && snf.u.mul(&snf.u_inv) == UPolyMatrix::identity(rows)
            && snf.v.mul(&snf.v_inv) == UPolyMatrix::identity(cols)
            && snf
                .invariant_factors()
                .windows(2)
                .all(|w| w[0].divides(&w[1]))
            && snf.invariant_factors().iter().all(UPoly::is_monic);
        if !ok {
            failures += 1;
        }
    }
    verdict_line(
        8,
        "randomized Smith normal form identities",
        failures == 0,
        &format!("100 matrices, {failures} failures"),
    );
}

#[test]
fn criterion_9_koszul_dimension_criterion() {
    let mut failures = Vec::new();
    for entry in lattice_entries() {
        let f = entry_poly(&entry);
        let n = f.nvars();
        let report = match koszul_dims(&f) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: {e}", entry.name));
                continue;
            }
        };
        let mu = milnor_algebra(&f).expect("isolated").mu();
        let mut expected = vec![0usize; n + 1];
        expected[n] = mu;
        if report.dims != expected {
            failures.push(format!(
                "{}: koszul dims {:?} != {:?}",
                entry.name, report.dims, expected
            ));
        }
        if !report.vanishing_verified {
            failures.push(format!("{}: truncated vanishing unverified", entry.name));
        }
    }
    verdict_line(
        9,
        "Koszul dimensions match the Milnor-sum prediction",
        failures.is_empty(),
        &format!("{} entries, failures: {failures:?}", lattice_entries().len()),
    );
}
