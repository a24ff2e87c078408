//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible under `cargo test --test acceptance -- --nocapture`).
//!
//! Everything runs exhaustively at ranks 2 and 3 in the generic regime, with
//! the integer regime (b, a) = (n, 1) as a secondary sweep; rank-4 pieces are
//! limited to combinatorics and representation relations, except the optional
//! rank-4 a-function agreement behind `--ignored`.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use num_bigint::BigInt;

use hecke::afun::{a_formula_from_shape, AfunTable};
use hecke::gamma::LaurentElt;
use hecke::jring::{self, JElement, JRing};
use hecke::kl::{idx, CellSide, HElt, KlContext, WeightFunction};
use hecke::perm::{GroupTable, SignedPerm};
use hecke::seminormal::SeminormalRep;
use hecke::tableau::{d_lambda, rs_correspondence, rs_inverse, Bipartition};
use hecke::verify::{type_a_facts_at, Status, Verifier};

static V2: OnceLock<Verifier> = OnceLock::new();
static V3: OnceLock<Verifier> = OnceLock::new();

fn v2() -> &'static Verifier {
    V2.get_or_init(|| Verifier::new(2, WeightFunction::generic(2)))
}

fn v3() -> &'static Verifier {
    V3.get_or_init(|| Verifier::new(3, WeightFunction::generic(3)))
}

fn criterion(number: u32, description: &str, ok: bool, detail: String) {
    println!(
        "criterion {number:2}: {}: {description}{}",
        if ok { "pass" } else { "FAIL" },
        if detail.is_empty() {
            String::new()
        } else {
            format!(" ({detail})")
        }
    );
    assert!(ok, "criterion {number} failed: {description}: {detail}");
}

fn suite_passes(v: &Verifier, ids: &[&str]) -> (bool, String) {
    let mut failed = Vec::new();
    for id in ids {
        let rep = v.check(id);
        if rep.status != Status::Pass {
            failed.push(format!("{id}: {:?}", rep.witnesses));
        }
    }
    (failed.is_empty(), failed.join("; "))
}

#[test]
fn criterion_01_b2_left_cells() {
    let t0 = Instant::now();
    let v = v2();
    let cells = v.ctx.cells(CellSide::Left);
    let g = &v.group;
    let mut got: Vec<Vec<u32>> = cells.cells.clone();
    got.iter_mut().for_each(|c| c.sort_unstable());
    got.sort();
    let mut expect: Vec<Vec<u32>> = [
        vec!["e"],
        vec!["s1"],
        vec!["t", "s1 t"],
        vec!["t s1", "s1 t s1"],
        vec!["t s1 t"],
        vec!["t s1 t s1"],
    ]
    .iter()
    .map(|cell| cell.iter().map(|w| idx(g, w)).collect::<Vec<u32>>())
    .collect();
    expect.iter_mut().for_each(|c| c.sort_unstable());
    expect.sort();
    let elapsed = t0.elapsed();
    criterion(
        1,
        "B₂ left cells match the published six-cell list",
        got == expect && elapsed.as_secs() < 1,
        format!("{} ms", elapsed.as_millis()),
    );
}

#[test]
fn criterion_02_b2_delta_n_table() {
    let t0 = Instant::now();
    let v = v2();
    let g = &v.group;
    let gv = |i: i32, j: i32| hecke::gamma::GammaVec::new(&[i, j]);
    let cases = [
        ("e", gv(0, 0), 1),
        ("s1", gv(0, 1), 1),
        ("t", gv(1, 0), 1),
        ("s1 t s1", gv(1, 0), 1),
        ("t s1 t", gv(2, -1), -1),
        ("t s1 t s1", gv(2, 2), 1),
    ];
    let mut ok = true;
    for (w, delta, n) in cases {
        let z = idx(g, w);
        ok &= v.afun.delta(z) == &delta && v.afun.n_z(z) == &BigInt::from(n);
    }
    let elapsed = t0.elapsed();
    criterion(
        2,
        "B₂ Δ/n table reproduces the published values from P*_{1,z}",
        ok && elapsed.as_secs() < 1,
        format!("{} ms", elapsed.as_millis()),
    );
}

#[test]
fn criterion_03_a_function_agreement() {
    let t0 = Instant::now();
    let (ok2, w2) = suite_passes(v2(), &["AFUN"]);
    let (ok3, w3) = suite_passes(v3(), &["AFUN"]);
    // The cell-pruned per-element scan agrees with the unpruned oracle of
    // record (exhaustive at rank 2, seeded elements at rank 3).
    let mut pruned_ok = true;
    for &z in v2().ctx.carrier() {
        pruned_ok &= &hecke::afun::a_bruteforce_pruned(&v2().ctx, z) == v2().afun.a(z);
    }
    {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x61707275);
        for _ in 0..8 {
            let z = v3().ctx.carrier()[rng.gen_range(0..48)];
            pruned_ok &= &hecke::afun::a_bruteforce_pruned(&v3().ctx, z) == v3().afun.a(z);
        }
    }
    let elapsed = t0.elapsed();
    criterion(
        3,
        "a_formula equals a_bruteforce on all of W₂ and W₃ (exact, zero tolerance)",
        ok2 && ok3 && pruned_ok && elapsed.as_secs() <= 600,
        format!("{} ms; {}", elapsed.as_millis(), [w2, w3].join(" ")),
    );
}

/// Optional rank-4 sweep (budget ≤ 2 h); run with `--ignored`.
#[test]
#[ignore]
fn criterion_03_optional_rank4() {
    let t0 = Instant::now();
    let group = Arc::new(GroupTable::new(4));
    let ctx = KlContext::new(group.clone(), WeightFunction::generic(4));
    let afun = AfunTable::build(&ctx);
    let mut ok = true;
    for &z in ctx.carrier() {
        let formula =
            a_formula_from_shape(ctx.weights(), &hecke::tableau::shape_of(group.element(z)));
        ok &= &formula == afun.a(z);
    }
    criterion(
        3,
        "optional rank-4 a-function agreement (all 384 elements)",
        ok && t0.elapsed().as_secs() <= 7200,
        format!("{} s", t0.elapsed().as_secs()),
    );
}

#[test]
fn criterion_04_lusztig_properties() {
    let ids: Vec<&str> = (1..=15)
        .map(|i| Box::leak(format!("P{i}").into_boxed_str()) as &str)
        .collect();
    let (ok2, w2) = suite_passes(v2(), &ids);
    let (ok3, w3) = suite_passes(v3(), &ids);
    criterion(
        4,
        "P1–P14 exhaustive at ranks 2 and 3; P15 exhaustive at 2, ≥10⁵ seeded samples at 3",
        ok2 && ok3,
        [w2, w3].join(" "),
    );
}

#[test]
fn criterion_05_distinguished_involutions() {
    let mut ok = true;
    let mut detail = Vec::new();
    for (v, expected) in [(v2(), 6usize), (v3(), 20usize)] {
        let d = v.afun.distinguished();
        let involutions: Vec<u32> = v
            .ctx
            .carrier()
            .iter()
            .copied()
            .filter(|&z| v.group.mul(z, z) == v.group.identity())
            .collect();
        ok &= d.len() == expected && d == involutions;
        let cells = v.ctx.cells(CellSide::Left);
        for cell in &cells.cells {
            ok &= cell.iter().filter(|z| d.contains(z)).count() == 1;
        }
        detail.push(format!("rank {}: |𝒟| = {}", v.group.rank(), d.len()));
    }
    criterion(
        5,
        "𝒟 equals the involution set (6 and 20) and hits each left cell once",
        ok,
        detail.join(", "),
    );
}

#[test]
fn criterion_06_leading_coefficients() {
    // Structure constraints (c ∈ {0,±1}, unique support, bijection onto W)
    // are asserted during table construction; here the relations and the
    // published B₂ values are swept.
    let mut ok = true;
    let mut detail = Vec::new();
    for v in [v2(), v3()] {
        let lcs = &v.lcs;
        let g = &v.group;
        let mut total = 0usize;
        for li in 0..lcs.num_labels() {
            total += lcs.t_set(li).len();
            for i in 0..lcs.d(li) {
                for j in 0..lcs.d(li) {
                    for lj in 0..lcs.num_labels() {
                        for k in 0..lcs.d(lj) {
                            for l in 0..lcs.d(lj) {
                                let s = lcs.schur_relation(li, i, j, lj, k, l);
                                let expect = i64::from(li == lj && i == k && j == l);
                                ok &= s == expect;
                            }
                        }
                    }
                }
            }
        }
        ok &= total == g.len();
        for y in 0..g.len() as u32 {
            for w in 0..g.len() as u32 {
                ok &= lcs.second_orthogonality(y, w) == i64::from(y == w);
            }
        }
        detail.push(format!("rank {}: Σ|𝔗_λ| = {total}", g.rank()));
    }
    // Published B₂ table.
    let v = v2();
    let li = v
        .lcs
        .label_index(&Bipartition::parse("(1|1)").unwrap())
        .unwrap();
    let g = &v.group;
    ok &= v.lcs.leading_coeff(idx(g, "t"), li, 1, 1) == 1;
    ok &= v.lcs.leading_coeff(idx(g, "s1 t s1"), li, 0, 0) == 1;
    ok &= v.lcs.leading_coeff(idx(g, "t s1"), li, 1, 0) == -1;
    ok &= v.lcs.leading_coeff(idx(g, "s1 t"), li, 0, 1) == -1;
    criterion(
        6,
        "leading coefficients: {0,±1} with unique support, Schur + second orthogonality exact, B₂ values match",
        ok,
        detail.join(", "),
    );
}

#[test]
fn criterion_07_hoefsmit_construction() {
    let mut ok = true;
    // Quadratic and braid relations for every shape at rank 4.
    let n = 4;
    let group = Arc::new(GroupTable::new(n));
    let weights = WeightFunction::generic(n);
    for label in Bipartition::all(n as u32) {
        let rep = SeminormalRep::build(&group, &weights, &label);
        ok &= check_relations(&group, &weights, &rep);
    }
    // B₂ matrices match the published display on the nose.
    let v = v2();
    let rep = SeminormalRep::build(
        &v.group,
        v.ctx.weights(),
        &Bipartition::parse("(1|1)").unwrap(),
    );
    let t = v.group.right_mul(0, 0);
    let s1 = v.group.right_mul(0, 1);
    let mono = |i: i32, j: i32| LaurentElt::monomial(hecke::gamma::GammaVec::new(&[i, j]), 1);
    ok &= rep.matrix(t).entry(0, 0) == &mono(1, 0);
    ok &= rep.matrix(t).entry(1, 1) == &-&mono(-1, 0);
    let ms = rep.matrix(s1);
    let vdiff = &mono(0, 1) - &mono(0, -1);
    ok &= rep.den_of(ms) == &mono(2, 0) + &LaurentElt::one(2);
    ok &= ms.entry(0, 0) == &vdiff;
    ok &= ms.entry(1, 1) == &(&mono(2, 0) * &vdiff);
    ok &= ms.entry(0, 1) == &(&LaurentElt::one(2) + &mono(2, -2));
    ok &= ms.entry(1, 0) == &(&LaurentElt::one(2) + &mono(2, 2));
    // α from the Schur valuation equals the closed form at ranks ≤ 3, and the
    // T/C/D images are congruent mod 𝔭 after scaling by e^α.
    let (oka2, wa2) = suite_passes(v2(), &["ALPHA"]);
    let (oka3, wa3) = suite_passes(v3(), &["ALPHA"]);
    ok &= oka2 && oka3;
    for v in [v2(), v3()] {
        ok &= tcd_congruence(v);
    }
    criterion(
        7,
        "seminormal construction: relations at rank ≤ 4, exact B₂ match, Schur valuations, T≡C≡D mod 𝔭",
        ok,
        [wa2, wa3].join(" "),
    );
}

fn check_relations(group: &GroupTable, weights: &WeightFunction, rep: &SeminormalRep) -> bool {
    let n = group.rank();
    let dim = weights.dim();
    let gen = |k: usize| group.right_mul(0, k as u8);
    // Quadratic: num² − (v_s − v_s⁻¹)·num·den − den²·I = 0.
    for k in 0..n {
        let m = rep.matrix(gen(k));
        let den = rep.den_of(m);
        let mut sq = vec![LaurentElt::zero(dim); rep.d * rep.d];
        for i in 0..rep.d {
            for l in 0..rep.d {
                let a = m.entry(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rep.d {
                    let b = m.entry(l, j);
                    if !b.is_zero() {
                        sq[i * rep.d + j] = &sq[i * rep.d + j] + &(a * b);
                    }
                }
            }
        }
        let diff = &weights.v(k as u8) - &weights.v_inv(k as u8);
        for i in 0..rep.d {
            for j in 0..rep.d {
                let mut x = sq[i * rep.d + j].clone();
                x = &x - &(&(&diff * m.entry(i, j)) * &den);
                if i == j {
                    x = &x - &(&den * &den);
                }
                if !x.is_zero() {
                    return false;
                }
            }
        }
    }
    // Braid and commuting relations, compared as cross-multiplied ratios.
    for i in 0..n {
        for j in i + 1..n {
            let (lhs, rhs): (Vec<usize>, Vec<usize>) = if i == 0 && j == 1 {
                (vec![0, 1, 0, 1], vec![1, 0, 1, 0])
            } else if j == i + 1 {
                (vec![i, j, i], vec![j, i, j])
            } else {
                (vec![i, j], vec![j, i])
            };
            let prod = |word: &[usize]| {
                let mut e = group.identity();
                let mut mats = Vec::new();
                for &k in word {
                    mats.push(rep.matrix(gen(k)).clone());
                    e = group.right_mul(e, k as u8);
                }
                let mut m: HElt = HElt::from([(group.identity(), LaurentElt::one(dim))]);
                let _ = &mut m;
                let mut acc = mats[0].clone();
                for f in &mats[1..] {
                    // plain matmul over shared denominators
                    let mut num = vec![LaurentElt::zero(dim); rep.d * rep.d];
                    for r in 0..rep.d {
                        for k2 in 0..rep.d {
                            let a = &acc.num[r * rep.d + k2];
                            if a.is_zero() {
                                continue;
                            }
                            for c in 0..rep.d {
                                let b = &f.num[k2 * rep.d + c];
                                if !b.is_zero() {
                                    num[r * rep.d + c] = &num[r * rep.d + c] + &(a * b);
                                }
                            }
                        }
                    }
                    acc = hecke::seminormal::RepMatrix {
                        d: rep.d,
                        num,
                        den_pows: acc
                            .den_pows
                            .iter()
                            .zip(&f.den_pows)
                            .map(|(x, y)| x + y)
                            .collect(),
                    };
                }
                acc
            };
            let a = prod(&lhs);
            let b = prod(&rhs);
            let da = rep.den_of(&a);
            let db = rep.den_of(&b);
            for r in 0..rep.d {
                for c in 0..rep.d {
                    if (a.entry(r, c) * &db) != (b.entry(r, c) * &da) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// e^α·𝔛(T_w), e^α·𝔛(C_w), e^α·𝔛(D_w) lie in the valuation ring with equal
/// constant terms, entrywise, for every element and shape.
fn tcd_congruence(v: &Verifier) -> bool {
    let dim = v.ctx.dim();
    for (li, _) in v.lcs.labels.iter().enumerate() {
        let rep = &v.lcs.reps[li];
        let alpha = &v.lcs.alphas[li];
        for &w in v.ctx.carrier() {
            let t_img = rep.image(&HElt::from([(w, LaurentElt::one(dim))]));
            let c_img = rep.image(&v.ctx.c_elt(w));
            let d_img = rep.image(&v.ctx.d_elt(w));
            for (m, _) in [(&t_img, "T"), (&c_img, "C"), (&d_img, "D")] {
                let (den_exp, _) = rep.den_valuation(m);
                for e in &m.num {
                    if !e.is_zero() && (e.min_exp().unwrap() + alpha) < den_exp {
                        return false;
                    }
                }
            }
            // equal constant terms entrywise: compare leading data at the
            // critical exponent den_exp − α.
            let ct = |m: &hecke::seminormal::RepMatrix, i: usize, j: usize| {
                let (den_exp, den_lead) = rep.den_valuation(m);
                let target = &den_exp - alpha;
                // entry ct·den_lead⁻¹, cross-multiplied to avoid rationals
                (m.entry(i, j).coeff(&target), den_lead)
            };
            for i in 0..rep.d {
                for j in 0..rep.d {
                    let (a, da) = ct(&t_img, i, j);
                    let (b, db) = ct(&c_img, i, j);
                    let (c, dc) = ct(&d_img, i, j);
                    if &a * &db != &b * &da || &a * &dc != &c * &da {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn criterion_08_rs_bijection() {
    let mut ok = true;
    for n in 1..=4usize {
        let mut images = std::collections::HashSet::new();
        for w in SignedPerm::enumerate(n) {
            let (a, b) = rs_correspondence(&w);
            ok &= a.shape() == b.shape();
            ok &= a.second.size() as usize == w.t_length();
            ok &= rs_inverse(&a, &b).unwrap() == w;
            images.insert((a, b));
        }
        let total: usize = Bipartition::all(n as u32)
            .iter()
            .map(|s| d_lambda(s).pow(2))
            .sum();
        let order = 2usize.pow(n as u32) * (1..=n).product::<usize>();
        ok &= images.len() == order && total == order;
    }
    criterion(
        8,
        "Robinson–Schensted bijection, round trip, ℓ_t law and Σd² = 2ⁿn! up to rank 4",
        ok,
        String::new(),
    );
}

#[test]
fn criterion_09_jring() {
    let mut ok = true;
    let mut detail = Vec::new();
    for v in [v2(), v3()] {
        let sample = if v.group.rank() <= 2 { 0 } else { 10_000 };
        let report = jring::verify_block_structure(&v.ctx, &v.afun, &v.lcs, sample);
        ok &= report.ok();
        let mut sizes: Vec<usize> = report.block_sizes.iter().map(|(_, s)| *s).collect();
        let total: usize = sizes.iter().sum();
        sizes.sort_unstable();
        if v.group.rank() == 2 {
            ok &= sizes == vec![1, 1, 1, 1, 4];
        } else {
            ok &= sizes == vec![1, 1, 1, 1, 4, 4, 9, 9, 9, 9] && total == 48;
        }
        detail.push(format!(
            "rank {}: blocks sum {total}, {} triples",
            v.group.rank(),
            report.associativity_triples_checked
        ));
    }
    // t_{s₀s₁s₀}² = −t_{s₀s₁s₀}.
    let v = v2();
    let ring = JRing::new(&v.group, &v.afun);
    let tst = idx(&v.group, "t s1 t");
    ok &= ring.mul(&JElement::basis(tst), &JElement::basis(tst))
        == JElement::term(tst, BigInt::from(-1));
    criterion(
        9,
        "J-ring block decomposition, matrix units, identity and associativity",
        ok,
        detail.join(", "),
    );
}

#[test]
fn criterion_10_monotonicity() {
    let (ok2, w2) = suite_passes(v2(), &["MONO"]);
    let (ok3, w3) = suite_passes(v3(), &["MONO"]);
    // The monotonicity report and the P4/P11 pair imply one another at these
    // ranks; the three verdicts must agree.
    let mut consistent = true;
    for v in [v2(), v3()] {
        let statuses: Vec<Status> = ["P4", "P11", "MONO"]
            .iter()
            .map(|id| v.check(id).status)
            .collect();
        consistent &= statuses.iter().all(|s| *s == statuses[0]);
    }
    criterion(
        10,
        "α is antitone along ≤_LR with equality only within a cell; edges obey the t-length law",
        ok2 && ok3 && consistent,
        [w2, w3].join(" "),
    );
}

#[test]
fn criterion_11_djm_ideals() {
    let t0 = Instant::now();
    let (ok2, w2) = suite_passes(v2(), &["DJM"]);
    let (ok3, w3) = suite_passes(v3(), &["DJM"]);
    let elapsed = t0.elapsed();
    criterion(
        11,
        "Dipper–James–Murphy ideals: containment over A, equal ranks, ideal closure, every bipartition",
        ok2 && ok3 && elapsed.as_secs() <= 600,
        format!("{} ms; {}", elapsed.as_millis(), [w2, w3].join(" ")),
    );
}

#[test]
fn criterion_12_cell_cross_check() {
    let (ok2, w2) = suite_passes(v2(), &["CELLS-RS"]);
    let (ok3, w3) = suite_passes(v3(), &["CELLS-RS"]);
    // ʲ𝔗_λ columns are left cells, rows are right cells; the cell count is
    // Σ_λ d_λ (6 at rank 2, 20 at rank 3).
    let mut ok = ok2 && ok3;
    ok &= v2().ctx.cells(CellSide::Left).num_cells() == 6;
    ok &= v3().ctx.cells(CellSide::Left).num_cells() == 20;
    for v in [v2(), v3()] {
        let left = v.ctx.cells(CellSide::Left);
        let right = v.ctx.cells(CellSide::Right);
        for li in 0..v.lcs.num_labels() {
            let d = v.lcs.d(li);
            for j in 0..d {
                let column: Vec<u32> = (0..d).map(|i| v.lcs.w_of(li, i, j)).collect();
                let cell = left.cell_of(column[0]);
                ok &=
                    column.iter().all(|&w| left.cell_of(w) == cell) && left.cells[cell].len() == d;
            }
            for i in 0..d {
                let row: Vec<u32> = (0..d).map(|j| v.lcs.w_of(li, i, j)).collect();
                let cell = right.cell_of(row[0]);
                ok &= row.iter().all(|&w| right.cell_of(w) == cell) && right.cells[cell].len() == d;
            }
        }
    }
    criterion(
        12,
        "KL cells = recording-tableau classes = (ℓ_t, b, Q) classes; 𝔗-columns/rows are the cells",
        ok,
        [w2, w3].join(" "),
    );
}

// ---------------------------------------------------------------------------
// Secondary sweeps outside the numbered list.
// ---------------------------------------------------------------------------

#[test]
fn integer_regime_sweep() {
    // (b, a) = (n, 1) satisfies b > (n−1)a; key checks repeat there.
    for n in [2usize, 3] {
        let v = Verifier::new(n, WeightFunction::integer(n, n as i32, 1).unwrap());
        for id in [
            "P1", "P4", "P13", "AFUN", "ALPHA", "CELLS-RS", "MONO", "JRING",
        ] {
            let rep = v.check(id);
            assert_eq!(
                rep.status,
                Status::Pass,
                "integer regime {id} at rank {n}: {:?}",
                rep.witnesses
            );
        }
    }
    println!("secondary    : pass: integer regime (b,a) = (n,1) at ranks 2 and 3");
}

#[test]
fn type_a_facts_rank4() {
    let group = Arc::new(GroupTable::new(4));
    let rep = type_a_facts_at(group, &WeightFunction::generic(4));
    assert_eq!(rep.status, Status::Pass, "{:?}", rep.witnesses);
    println!(
        "secondary    : pass: symmetric-group facts inside B₄ (cells, σ_ν*, a = n(ν), dominance)"
    );
}

#[test]
fn duality_and_tau_route_rank3() {
    // τ(C_w·D_{y⁻¹}) = δ_{wy} and the trace route to h, on seeded pairs.
    use rand::{Rng, SeedableRng};
    let v = v3();
    let g = &v.group;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x64747233);
    for _ in 0..12 {
        let w = v.ctx.carrier()[rng.gen_range(0..48)];
        let y = v.ctx.carrier()[rng.gen_range(0..48)];
        let prod = v.ctx.t_mul(&v.ctx.c_elt(w), &v.ctx.d_elt(g.inverse(y)));
        let tr = v.ctx.tau(&prod);
        if w == y {
            assert!(tr.is_one());
        } else {
            assert!(tr.is_zero());
        }
        let z = v.ctx.carrier()[rng.gen_range(0..48)];
        assert_eq!(v.ctx.h_structure_tau(w, y, z), v.ctx.h_structure(w, y, z));
        // P* is invariant under simultaneous inversion.
        assert_eq!(
            v.ctx.kl_star_polynomial(y, w),
            v.ctx.kl_star_polynomial(g.inverse(y), g.inverse(w))
        );
    }
    println!("secondary    : pass: duality matrix, trace route and P* inversion at rank 3");
}

#[test]
fn h_recomposition_spot_checks_rank3() {
    // Σ_z h_{x,y,z}·C′_z equals C′_x·C′_y on seeded random pairs at rank 3.
    use rand::{Rng, SeedableRng};
    let v = v3();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x68726563);
    for _ in 0..25 {
        let x = v.ctx.carrier()[rng.gen_range(0..48)];
        let y = v.ctx.carrier()[rng.gen_range(0..48)];
        let direct = v.ctx.t_mul(v.ctx.cprime_elt(x), v.ctx.cprime_elt(y));
        let mut recomposed: HElt = HElt::new();
        for (z, c) in v.ctx.h_row(x, y) {
            for (&w, k) in v.ctx.cprime_elt(z) {
                let term = &(k * &c);
                let entry = recomposed.entry(w).or_insert_with(|| LaurentElt::zero(2));
                *entry = &*entry + term;
            }
        }
        recomposed.retain(|_, c| !c.is_zero());
        assert_eq!(direct, recomposed);
    }
    println!("secondary    : pass: h recomposition on seeded random pairs at rank 3");
}
