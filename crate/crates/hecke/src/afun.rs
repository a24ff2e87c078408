//! The a-function, Δ, n_z, the distinguished involutions and the γ-constants.
//!
//! Two independent routes to a(z) coexist: the brute-force route reads the
//! whole h-tensor and takes the lex-maximal negated valuation, clamped at 0;
//! the closed-form route reads the Robinson–Schensted shape of z and needs
//! the asymptotic weight regime.  Their agreement on all of Wₙ is the core
//! acceptance check of the crate.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::gamma::{GammaVec, LaurentElt};
use crate::kl::{CellSide, KlContext, WeightFunction};
use crate::perm::SignedPerm;
use crate::tableau::{shape_of, Bipartition};

/// Per-element data: a(z), Δ(z), n_z and membership in 𝒟 = {a = Δ}.
#[derive(Clone, Debug)]
pub struct AfunRow {
    pub a: GammaVec,
    pub delta: GammaVec,
    pub n_z: BigInt,
    pub distinguished: bool,
}

/// The a-function table over a frozen context, plus the γ tensor.
pub struct AfunTable {
    dim: usize,
    rows: HashMap<u32, AfunRow>,
    /// γ_{x,y,z} keyed by (x, y, z); zero entries are not stored.
    gamma: HashMap<(u32, u32, u32), BigInt>,
    /// Nonzero γ's grouped by (x, y) for the J-ring product.
    gamma_by_xy: HashMap<(u32, u32), Vec<(u32, BigInt)>>,
}

impl AfunTable {
    /// Builds the table from the full h tensor (the unpruned scan is the
    /// oracle of record; the pruned per-element variant is cross-checked
    /// against it in the verification suite).
    pub fn build(ctx: &KlContext) -> Self {
        let dim = ctx.dim();
        let group = ctx.group();
        let h = ctx.h_all();
        let zero = GammaVec::zero(dim);

        // a(z) = max(0, max over (x,y) of −min-exponent of h_{x,y,z}).
        let mut best: HashMap<u32, GammaVec> = HashMap::new();
        for row in h.values() {
            for (z, c) in row {
                let cand = -c.min_exp().expect("stored h values are nonzero");
                best.entry(*z)
                    .and_modify(|b| {
                        if cand > *b {
                            *b = cand.clone();
                        }
                    })
                    .or_insert(cand);
            }
        }

        let mut rows = HashMap::new();
        for &z in ctx.carrier() {
            let a = best
                .get(&z)
                .filter(|g| **g > zero)
                .cloned()
                .unwrap_or_else(|| zero.clone());
            // Δ(z) and n_z from the lex-maximal term of P*_{1,z}.
            let p = ctx.kl_star_polynomial(group.identity(), z);
            assert!(!p.is_zero(), "P*_{{1,z}} never vanishes");
            let top = p.max_exp().unwrap().clone();
            let n_z = p.coeff(&top);
            let delta = -&top;
            let distinguished = a == delta;
            rows.insert(
                z,
                AfunRow {
                    a,
                    delta,
                    n_z,
                    distinguished,
                },
            );
        }

        // γ_{x,y,w⁻¹} = constant term of e^{a(w)}·h_{x,y,w}.  The J-product
        // row keeps the key w (its coefficient there is exactly γ_{x,y,w⁻¹});
        // the symmetric tensor entry goes to the inverted key.
        let mut gamma = HashMap::new();
        let mut gamma_by_xy: HashMap<(u32, u32), Vec<(u32, BigInt)>> = HashMap::new();
        for (&(x, y), row) in h {
            for (w, c) in row {
                let aw = &rows[w].a;
                let target = -aw;
                debug_assert!(
                    c.min_exp().unwrap() >= &target,
                    "h valuation below −a(z) contradicts the definition of a"
                );
                let ct = c.coeff(&target);
                if !ct.is_zero() {
                    gamma.insert((x, y, group.inverse(*w)), ct.clone());
                    gamma_by_xy.entry((x, y)).or_default().push((*w, ct));
                }
            }
        }
        for v in gamma_by_xy.values_mut() {
            v.sort_by_key(|(z, _)| *z);
        }

        AfunTable {
            dim,
            rows,
            gamma,
            gamma_by_xy,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, z: u32) -> &AfunRow {
        &self.rows[&z]
    }

    pub fn a(&self, z: u32) -> &GammaVec {
        &self.rows[&z].a
    }

    pub fn delta(&self, z: u32) -> &GammaVec {
        &self.rows[&z].delta
    }

    pub fn n_z(&self, z: u32) -> &BigInt {
        &self.rows[&z].n_z
    }

    /// γ_{x,y,z}, zero when the triple carries no constant term.
    pub fn gamma(&self, x: u32, y: u32, z: u32) -> BigInt {
        self.gamma
            .get(&(x, y, z))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn gamma_support(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.gamma.iter()
    }

    /// Nonzero γ_{x,y,·} for the J-ring product t_x·t_y = Σ γ_{x,y,z⁻¹}·t_z;
    /// entries here are already indexed by z (the inverse is folded in).
    pub fn gamma_row(&self, x: u32, y: u32) -> &[(u32, BigInt)] {
        static EMPTY: Vec<(u32, BigInt)> = Vec::new();
        self.gamma_by_xy
            .get(&(x, y))
            .map(|v| v.as_slice())
            .unwrap_or(&EMPTY)
    }

    /// 𝒟 = {z : a(z) = Δ(z)}, by definition; the involution characterisation
    /// is an acceptance check, not an input.
    pub fn distinguished(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .rows
            .iter()
            .filter(|(_, r)| r.distinguished)
            .map(|(&z, _)| z)
            .collect();
        d.sort_unstable();
        d
    }
}

/// a(w) from the Robinson–Schensted shape (ν₁,ν₂) of w:
/// b·|ν₂| + a·(n(ν₁) + 2n(ν₂*) − n(ν₂)).  Requires the asymptotic regime.
pub fn a_formula(weights: &WeightFunction, w: &SignedPerm) -> GammaVec {
    assert!(
        weights.is_asymptotic(),
        "the closed-form a-function requires b > (n−1)a > 0"
    );
    a_formula_from_shape(weights, &shape_of(w))
}

pub fn a_formula_from_shape(weights: &WeightFunction, shape: &Bipartition) -> GammaVec {
    let n1 = shape.first.n_stat() as i32;
    let n2 = shape.second.n_stat() as i32;
    let n2c = shape.second.conjugate().n_stat() as i32;
    weights.combine(shape.second.size() as i32, n1 + 2 * n2c - n2)
}

/// The a-values alone, computed by streaming over pairs without retaining
/// the h tensor; used where the full table would not fit comfortably.
pub fn a_values_streaming(ctx: &KlContext) -> HashMap<u32, GammaVec> {
    let zero = GammaVec::zero(ctx.dim());
    let mut best: HashMap<u32, GammaVec> = HashMap::new();
    for &x in ctx.carrier() {
        for &y in ctx.carrier() {
            let prod = ctx.t_mul(ctx.cprime_elt(x), ctx.cprime_elt(y));
            for (z, c) in ctx.cprime_expand(&prod) {
                let cand = -c.min_exp().expect("expanded coefficients are nonzero");
                best.entry(z)
                    .and_modify(|b| {
                        if cand > *b {
                            *b = cand.clone();
                        }
                    })
                    .or_insert(cand);
            }
        }
    }
    ctx.carrier()
        .iter()
        .map(|&z| {
            let a = best.get(&z).filter(|g| **g > zero).cloned().unwrap_or_else(|| zero.clone());
            (z, a)
        })
        .collect()
}

/// Per-element a(z) by the pruned scan: only pairs with z ≤_R x and z ≤_L y
/// can contribute, since h_{x,y,z} ≠ 0 forces these preorder relations.
pub fn a_bruteforce_pruned(ctx: &KlContext, z: u32) -> GammaVec {
    let dim = ctx.dim();
    let left = ctx.cells(CellSide::Left);
    let right = ctx.cells(CellSide::Right);
    let zero = GammaVec::zero(dim);
    let mut best = zero.clone();
    for &x in ctx.carrier() {
        if !right.leq_elements(z, x) {
            continue;
        }
        for &y in ctx.carrier() {
            if !left.leq_elements(z, y) {
                continue;
            }
            for (w, c) in ctx.h_row(x, y) {
                if w != z {
                    continue;
                }
                let cand = -c.min_exp().expect("nonzero");
                if cand > best {
                    best = cand;
                }
            }
        }
    }
    best.max(zero)
}

/// Constant term of e^{α}·x for a Laurent element known to satisfy
/// e^{α}x ∈ A_{≥0}: the coefficient at exponent −α.
pub fn shifted_constant_term(x: &LaurentElt, alpha: &GammaVec) -> BigInt {
    x.coeff(&-alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kl::idx;
    use crate::perm::GroupTable;
    use std::sync::Arc;

    fn b2_afun() -> (Arc<GroupTable>, KlContext, AfunTable) {
        let table = Arc::new(GroupTable::new(2));
        let ctx = KlContext::new(table.clone(), WeightFunction::generic(2));
        let af = AfunTable::build(&ctx);
        (table, ctx, af)
    }

    fn gv(i: i32, j: i32) -> GammaVec {
        GammaVec::new(&[i, j])
    }

    #[test]
    fn b2_delta_n_table_matches_published_values() {
        let (g, _ctx, af) = b2_afun();
        let cases = [
            ("e", gv(0, 0), 1),
            ("s1", gv(0, 1), 1),
            ("t", gv(1, 0), 1),
            ("s1 t s1", gv(1, 0), 1),
            ("t s1 t", gv(2, -1), -1),
            ("t s1 t s1", gv(2, 2), 1),
        ];
        for (w, delta, n) in cases {
            let z = idx(&g, w);
            assert_eq!(af.delta(z), &delta, "Δ({w})");
            assert_eq!(af.n_z(z), &BigInt::from(n), "n({w})");
        }
    }

    #[test]
    fn b2_a_values() {
        let (g, _ctx, af) = b2_afun();
        assert_eq!(af.a(idx(&g, "e")), &gv(0, 0));
        assert_eq!(af.a(idx(&g, "t")), &gv(1, 0));
        assert_eq!(af.a(idx(&g, "t s1 t")), &gv(2, -1));
        assert_eq!(af.a(idx(&g, "t s1 t s1")), &gv(2, 2));
    }

    #[test]
    fn formula_equals_bruteforce_rank2() {
        let (g, ctx, af) = b2_afun();
        for &z in ctx.carrier() {
            assert_eq!(
                &a_formula(ctx.weights(), g.element(z)),
                af.a(z),
                "a at {}",
                g.element(z)
            );
        }
    }

    #[test]
    fn pruned_scan_agrees_with_full_scan() {
        let (_g, ctx, af) = b2_afun();
        for &z in ctx.carrier() {
            assert_eq!(&a_bruteforce_pruned(&ctx, z), af.a(z));
        }
    }

    #[test]
    fn streaming_scan_agrees_with_table() {
        let (_g, ctx, af) = b2_afun();
        let streamed = a_values_streaming(&ctx);
        for &z in ctx.carrier() {
            assert_eq!(&streamed[&z], af.a(z));
        }
    }

    #[test]
    fn a_and_delta_invariant_under_inverse() {
        let (g, ctx, af) = b2_afun();
        for &z in ctx.carrier() {
            let zi = g.inverse(z);
            assert_eq!(af.a(z), af.a(zi));
            assert_eq!(af.delta(z), af.delta(zi));
            assert_eq!(af.n_z(z), af.n_z(zi));
        }
    }

    #[test]
    fn distinguished_set_b2() {
        let (g, ctx, af) = b2_afun();
        let d = af.distinguished();
        assert_eq!(d.len(), 6);
        let expect: Vec<u32> = ["e", "s1", "t", "s1 t s1", "t s1 t", "t s1 t s1"]
            .iter()
            .map(|w| idx(&g, w))
            .collect();
        let mut expect = expect;
        expect.sort_unstable();
        assert_eq!(d, expect);
        // Exactly one distinguished element per left cell.
        let cells = ctx.cells(CellSide::Left);
        for cell in &cells.cells {
            let count = cell.iter().filter(|&&z| af.row(z).distinguished).count();
            assert_eq!(count, 1, "cell {cell:?}");
        }
    }

    #[test]
    fn gamma_examples() {
        let (g, ctx, af) = b2_afun();
        // γ_{d,d,d} = n_d for the distinguished involution tst.
        let tst = idx(&g, "t s1 t");
        assert_eq!(af.gamma(tst, tst, tst), BigInt::from(-1));
        // Cross-block triples vanish: s1 and t never share a block.
        let s1 = idx(&g, "s1");
        let t = idx(&g, "t");
        for &z in ctx.carrier() {
            assert!(af.gamma(s1, t, z).is_zero());
        }
        // Full tensor lives in {0,±1} and has Σ d_λ³ = 12 nonzero entries.
        let mut count = 0;
        for (_, v) in af.gamma_support() {
            assert!(v == &BigInt::from(1) || v == &BigInt::from(-1));
            count += 1;
        }
        assert_eq!(count, 12);
    }

    #[test]
    fn a_is_zero_only_at_identity() {
        let (g, ctx, af) = b2_afun();
        for &z in ctx.carrier() {
            let is_zero = af.a(z) == &GammaVec::zero(2);
            assert_eq!(is_zero, z == g.identity());
        }
    }
}
