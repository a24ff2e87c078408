//! The asymptotic ring J: free abelian group on {t_w} with multiplication
//! t_x·t_y = Σ_z γ_{x,y,z⁻¹}·t_z, its identity Σ_{z∈𝒟} n_z·t_z and the
//! matrix-unit decomposition into blocks M_{d_λ}(Z).
//!
//! J is built over the γ tensor computed from the h structure constants; the
//! star-product prediction from the leading-coefficient table serves as a
//! consistency oracle, not as the ground truth.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::afun::AfunTable;
use crate::kl::{CellSide, KlContext};
use crate::perm::GroupTable;
use crate::seminormal::LeadingCoeffTable;

/// A finitely supported integer combination of basis symbols t_w.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct JElement {
    terms: BTreeMap<u32, BigInt>,
}

impl JElement {
    pub fn zero() -> Self {
        JElement::default()
    }

    pub fn basis(w: u32) -> Self {
        Self::term(w, BigInt::from(1))
    }

    pub fn term(w: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        JElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: u32) -> BigInt {
        self.terms.get(&w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn add_term(&mut self, w: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        JElement {
            terms: self.terms.iter().map(|(&w, c)| (w, -c)).collect(),
        }
    }
}

/// The ring structure over a frozen a-function table.
pub struct JRing<'a> {
    pub group: &'a GroupTable,
    pub afun: &'a AfunTable,
}

impl<'a> JRing<'a> {
    pub fn new(group: &'a GroupTable, afun: &'a AfunTable) -> Self {
        JRing { group, afun }
    }

    /// Bilinear extension of t_x·t_y = Σ_z γ_{x,y,z⁻¹}·t_z.
    pub fn mul(&self, x: &JElement, y: &JElement) -> JElement {
        let mut out = JElement::zero();
        for (u, cu) in x.terms() {
            for (v, cv) in y.terms() {
                let scale = cu * cv;
                for (z, g) in self.afun.gamma_row(u, v) {
                    out.add_term(*z, &(g * &scale));
                }
            }
        }
        out
    }

    /// 1_J = Σ_{z∈𝒟} n_z·t_z.
    pub fn identity(&self) -> JElement {
        let mut out = JElement::zero();
        for z in self.afun.distinguished() {
            out.add_term(z, self.afun.n_z(z));
        }
        out
    }

    /// E^{ij}_λ = c^{ij}_{w,λ}·t_w for w = w_λ(i,j); block-local matrix units.
    pub fn matrix_units(&self, table: &LeadingCoeffTable, li: usize) -> Vec<Vec<JElement>> {
        let d = table.d(li);
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let w = table.w_of(li, i, j);
                        JElement::term(w, BigInt::from(table.sign_of(li, i, j)))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn render(&self, x: &JElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (w, c)) in x.terms().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if abs != BigInt::from(1) {
                out.push_str(&format!("{abs}·"));
            }
            out.push_str(&format!("t[{}]", self.group.element(w).render_word()));
        }
        out
    }
}

impl fmt::Display for JElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·t{w}")?;
        }
        Ok(())
    }
}

/// Findings of the block-structure verification.
#[derive(Serialize, Debug)]
pub struct BlockReport {
    pub rank: usize,
    /// (label, d_λ²) per block, in label order.
    pub block_sizes: Vec<(String, usize)>,
    pub violations: Vec<String>,
    pub associativity_triples_checked: usize,
}

impl BlockReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Confirms J = ⊕_λ J_λ with J_λ ≅ M_{d_λ}(Z): the γ-support rule against
/// the cell partition, the matrix-unit relations, the two-sided identity and
/// associativity (exhaustive at rank 2, sampled above with a fixed seed).
pub fn verify_block_structure(
    ctx: &KlContext,
    afun: &AfunTable,
    table: &LeadingCoeffTable,
    sample_triples: usize,
) -> BlockReport {
    let group = ctx.group();
    let ring = JRing::new(group, afun);
    let mut violations = Vec::new();
    let left = ctx.cells(CellSide::Left);

    // Support rule: γ_{x,y,z} ≠ 0 iff x ∼_L y⁻¹, y ∼_L z⁻¹, z ∼_L x⁻¹.
    for &x in ctx.carrier() {
        for &y in ctx.carrier() {
            for &z in ctx.carrier() {
                let g = afun.gamma(x, y, z);
                let rule = left.same_cell(x, group.inverse(y))
                    && left.same_cell(y, group.inverse(z))
                    && left.same_cell(z, group.inverse(x));
                if g.is_zero() == rule {
                    violations.push(format!(
                        "support rule fails at ({}, {}, {}): γ = {g}",
                        group.element(x),
                        group.element(y),
                        group.element(z)
                    ));
                }
            }
        }
    }

    // Matrix units: E^{ij}E^{kl} = δ_{jk}E^{il}, blockwise exhaustive.
    let mut block_sizes = Vec::new();
    let mut sum_of_diagonal_units = JElement::zero();
    for li in 0..table.num_labels() {
        let d = table.d(li);
        block_sizes.push((table.labels[li].render(), d * d));
        let units = ring.matrix_units(table, li);
        for i in 0..d {
            sum_of_diagonal_units = sum_of_diagonal_units.add(&units[i][i]);
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let prod = ring.mul(&units[i][j], &units[k][l]);
                        let expect = if j == k {
                            units[i][l].clone()
                        } else {
                            JElement::zero()
                        };
                        if prod != expect {
                            violations.push(format!(
                                "matrix-unit relation fails in block {} at ({i},{j})·({k},{l})",
                                table.labels[li]
                            ));
                        }
                    }
                }
            }
        }
        // Blocks sit inside single two-sided cells and exhaust them.
        let tset = table.t_set(li);
        let two = ctx.cells(CellSide::TwoSided);
        for pair in tset.windows(2) {
            if !two.same_cell(pair[0], pair[1]) {
                violations.push(format!(
                    "block {} splits across two-sided cells",
                    table.labels[li]
                ));
            }
        }
    }

    // Identity.
    let one = ring.identity();
    if ring.mul(&one, &one) != one {
        violations.push("1_J·1_J ≠ 1_J".into());
    }
    if sum_of_diagonal_units != one {
        violations.push("Σ E^{ii} over all blocks differs from 1_J".into());
    }
    for &w in ctx.carrier() {
        let t = JElement::basis(w);
        if ring.mul(&one, &t) != t || ring.mul(&t, &one) != t {
            violations.push(format!("identity fails on t[{}]", group.element(w)));
        }
    }

    // t_z² = n_z·t_z on 𝒟.
    for z in afun.distinguished() {
        let t = JElement::basis(z);
        let sq = ring.mul(&t, &t);
        if sq != JElement::term(z, afun.n_z(z).clone()) {
            violations.push(format!("t_z² ≠ n_z·t_z at {}", group.element(z)));
        }
    }

    // Associativity.
    let n = ctx.carrier().len();
    let mut checked = 0usize;
    if n <= 8 {
        for &x in ctx.carrier() {
            for &y in ctx.carrier() {
                for &z in ctx.carrier() {
                    if !assoc_ok(&ring, x, y, z) {
                        violations.push(format!(
                            "associativity fails at ({}, {}, {})",
                            group.element(x),
                            group.element(y),
                            group.element(z)
                        ));
                    }
                    checked += 1;
                }
            }
        }
    } else {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6a72696e67);
        for _ in 0..sample_triples {
            let x = ctx.carrier()[rng.gen_range(0..n)];
            let y = ctx.carrier()[rng.gen_range(0..n)];
            let z = ctx.carrier()[rng.gen_range(0..n)];
            if !assoc_ok(&ring, x, y, z) {
                violations.push(format!(
                    "associativity fails at ({}, {}, {})",
                    group.element(x),
                    group.element(y),
                    group.element(z)
                ));
            }
            checked += 1;
        }
    }

    BlockReport {
        rank: group.rank(),
        block_sizes,
        violations,
        associativity_triples_checked: checked,
    }
}

fn assoc_ok(ring: &JRing, x: u32, y: u32, z: u32) -> bool {
    let (tx, ty, tz) = (JElement::basis(x), JElement::basis(y), JElement::basis(z));
    ring.mul(&ring.mul(&tx, &ty), &tz) == ring.mul(&tx, &ring.mul(&ty, &tz))
}
