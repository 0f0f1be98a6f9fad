//! Acceptance run: every criterion exhaustively at its stated bound, one
//! PASS/FAIL line each. Exits nonzero if any criterion fails.

mod oracle;

use std::process::ExitCode;
use std::time::Instant;

use unipotent_pieces::classes::{enumerate_classes, GroupDatum, LieType};
use unipotent_pieces::filtration::upsilon_char1;
use unipotent_pieces::partitions::enumerate_partitions;
use unipotent_pieces::verify::{find, Counterexample};

type Criterion = (u32, &'static str, fn() -> Result<usize, String>);

fn checks(list: &[(&str, u32)]) -> Result<usize, String> {
    let mut total = 0;
    for &(name, n) in list {
        let check = find(name).ok_or_else(|| format!("no check named {name}"))?;
        total += check.run(n).map_err(|e: Counterexample| e.to_string())?;
    }
    Ok(total)
}

fn spot(what: &str, got: usize, want: usize) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: {got} classes, expected {want}"))
    }
}

fn bijection() -> Result<usize, String> {
    spot("Sp(4) char 2", enumerate_classes(&GroupDatum::char_two_group(LieType::C, 2)).len(), 5)?;
    spot("sp(4) char 2", enumerate_classes(&GroupDatum::char_two_lie(LieType::C, 2)).len(), 5)?;
    spot("Sp(4) char 1", enumerate_classes(&GroupDatum::char_one(LieType::C, 2)).len(), 4)?;
    checks(&[("class-count", 6), ("gamma-bijection", 6), ("degenerate-tags", 6)])
}

fn containments() -> Result<usize, String> {
    checks(&[("containments", 7)])
}

fn closure_order() -> Result<usize, String> {
    checks(&[("closure-partial-order", 6), ("closure-vs-springer", 6), ("partial-sums", 6), ("parity", 6)])
}

fn projection() -> Result<usize, String> {
    checks(&[("phi-image", 6), ("phi-bound", 6), ("phi-minimal", 6)])
}

fn commutation() -> Result<usize, String> {
    checks(&[("commutation", 6)])
}

fn main_theorem() -> Result<usize, String> {
    checks(&[("sigma-equals-psi", 6), ("sigma-preimage", 6), ("piece-count", 6)])
}

fn filtration() -> Result<usize, String> {
    checks(&[("upsilon-equality", 5), ("upsilon-steps", 5), ("upsilon-separates", 5), ("upsilon-char1", 5)])
}

fn special() -> Result<usize, String> {
    checks(&[("special-pieces", 6)])
}

fn upsilon_oracle() -> Result<usize, String> {
    let mut count = 0;
    for size in 1..=10 {
        for lambda in enumerate_partitions(size) {
            if !oracle::orthogonal_admissible(lambda.parts()) {
                continue;
            }
            let u = upsilon_char1(&lambda);
            let (m, f) = oracle::graded_dimensions(lambda.parts());
            if (u.m, u.f.clone()) != (m, f.clone()) {
                return Err(format!("{lambda}: formula gives {u}, linear algebra gives m={m} f={f:?}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

const CRITERIA: &[Criterion] = &[
    (1, "class count and γ bijection, n ≤ 6", bijection),
    (2, "Λ¹ ⊂ Λ²(group) ⊂ Λ²(Lie), n ≤ 7", containments),
    (3, "closure order = label order; partial sums and parity, n ≤ 6", closure_order),
    (4, "Φ: image, identity on Λ¹, upper bound, minimality, n ≤ 6", projection),
    (5, "γ¹ ∘ Ψ = Φ ∘ γ, n ≤ 6", commutation),
    (6, "pieces Σ = Ψ-fibers, γ(Σ) = Φ⁻¹, piece count, n ≤ 6", main_theorem),
    (7, "Υ(c) = Υ(Ψ(c)) and per-step m, f_m, n ≤ 5", filtration),
    (8, "special pieces are unions of pieces, n ≤ 6", special),
    (9, "char-1 Υ formula = linear-algebra filtration, |λ| ≤ 10", upsilon_oracle),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for &(id, about, run) in CRITERIA {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(cases) => println!("PASS  criterion {id}: {about} ({cases} cases, {secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {id}: {about} ({secs:.2}s)\n      {why}");
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
