//! Seminormal matrix representations over the fraction field, Schur elements,
//! α-invariants, leading matrix coefficients and the star product.
//!
//! The representation of shape λ acts on the span of the standard bitableaux
//! of shape λ in their canonical order.  T_t is diagonal with entry V when 1
//! sits in the first component and −V⁻¹ otherwise.  T_{sᵢ} acts on the span
//! of {𝔱, sᵢ𝔱} through coefficients driven by the residues
//! res(k,𝔱) = V²v^{2(col−row)} in the first component and −v^{2(col−row)} in
//! the second: with σ₁ = res(i,𝔱) and σ₂ = res(i+1,𝔱) the diagonal entry is
//! (v−v⁻¹)σ₂/(σ₂−σ₁) and the two off-diagonal coefficients multiply to
//! (σ₁−v²σ₂)(σ₁−v⁻²σ₂)/(σ₁−σ₂)², split so that the published B₂ matrices
//! come out on the nose.  The construction is pinned by four checks: the
//! quadratic and braid relations, the diagonal T_t spectrum, branching by
//! removal of the entry n, and the exact B₂ match.
//!
//! Matrices carry one shared denominator per generator, and a word-indexed
//! power vector of those atomic denominators; valuations then never require
//! expanding a denominator product.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::gamma::{GammaVec, LaurentElt, RatioElt};
use crate::kl::WeightFunction;
use crate::perm::GroupTable;
use crate::tableau::{enumerate_std, Bipartition, StdBitableau};

/// α_λ = b·|λ₂| + a·(n(λ₁) + 2n(λ₂) − n(λ₂*)) for a character label λ.
pub fn alpha_invariant(weights: &WeightFunction, label: &Bipartition) -> GammaVec {
    assert!(
        weights.is_asymptotic(),
        "the α-invariant closed form requires b > (n−1)a > 0"
    );
    let n1 = label.first.n_stat() as i32;
    let n2 = label.second.n_stat() as i32;
    let n2c = label.second.conjugate().n_stat() as i32;
    weights.combine(label.second.size() as i32, n1 + 2 * n2 - n2c)
}

/// res(k, 𝔱) as a Laurent element.
fn residue(weights: &WeightFunction, t: &StdBitableau, k: u32) -> LaurentElt {
    let (comp, row, col) = t.position_word()[k as usize - 1];
    let c = col as i32 - row as i32;
    if comp == 0 {
        LaurentElt::monomial(weights.combine(2, 2 * c), 1)
    } else {
        LaurentElt::monomial(weights.combine(0, 2 * c), -1)
    }
}

/// Swap of k and k+1 inside a bitableau, when the result is standard.
fn swap_entries(t: &StdBitableau, k: u32) -> Option<StdBitableau> {
    let mut rows_first: Vec<Vec<u32>> = t.first.rows().to_vec();
    let mut rows_second: Vec<Vec<u32>> = t.second.rows().to_vec();
    for rows in [&mut rows_first, &mut rows_second] {
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                if *x == k {
                    *x = k + 1;
                } else if *x == k + 1 {
                    *x = k;
                }
            }
        }
    }
    let swapped = StdBitableau {
        first: rows_to_tableau(rows_first),
        second: rows_to_tableau(rows_second),
    };
    swapped.is_standard().then_some(swapped)
}

fn rows_to_tableau(rows: Vec<Vec<u32>>) -> crate::tableau::Tableau {
    let mut t = crate::tableau::Tableau::empty();
    for (r, row) in rows.into_iter().enumerate() {
        for (c, x) in row.into_iter().enumerate() {
            t.place(r, c, x);
        }
    }
    t
}

/// A d×d matrix of Laurent numerators over a denominator known only through
/// its factorisation into per-generator atoms.
#[derive(Clone, Debug)]
pub struct RepMatrix {
    pub d: usize,
    /// Row-major numerators.
    pub num: Vec<LaurentElt>,
    /// Power of each generator's atomic denominator.
    pub den_pows: Vec<u32>,
}

impl RepMatrix {
    fn identity(d: usize, dim: usize, ngens: usize) -> Self {
        let mut num = vec![LaurentElt::zero(dim); d * d];
        for i in 0..d {
            num[i * d + i] = LaurentElt::one(dim);
        }
        RepMatrix {
            d,
            num,
            den_pows: vec![0; ngens],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentElt {
        &self.num[i * self.d + j]
    }

    fn matmul(&self, rhs: &Self, dim: usize) -> Self {
        let d = self.d;
        let mut num = vec![LaurentElt::zero(dim); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.num[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &rhs.num[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    num[i * d + j] = &num[i * d + j] + &(a * b);
                }
            }
        }
        let den_pows = self
            .den_pows
            .iter()
            .zip(&rhs.den_pows)
            .map(|(x, y)| x + y)
            .collect();
        RepMatrix { d, num, den_pows }
    }

    pub fn trace(&self, dim: usize) -> LaurentElt {
        let mut acc = LaurentElt::zero(dim);
        for i in 0..self.d {
            acc = &acc + &self.num[i * self.d + i];
        }
        acc
    }
}

/// The seminormal representation of one shape, with matrices for every group
/// element of the rank.
pub struct SeminormalRep {
    pub label: Bipartition,
    pub basis: Vec<StdBitableau>,
    pub d: usize,
    weights: WeightFunction,
    /// Atomic denominator of each generator's matrix.
    pub gen_dens: Vec<LaurentElt>,
    /// 𝔛(T_w) for every element index.
    matrices: Vec<RepMatrix>,
    /// Partner index under sᵢ per (generator, basis column), when standard.
    partners: Vec<Vec<Option<usize>>>,
}

impl SeminormalRep {
    /// Builds the representation and all element matrices by length BFS.
    pub fn build(group: &GroupTable, weights: &WeightFunction, label: &Bipartition) -> Self {
        let n = group.rank();
        assert_eq!(label.size() as usize, n, "shape size must match the rank");
        let dim = weights.dim();
        let basis = enumerate_std(label);
        let d = basis.len();
        let tableau_index: HashMap<&StdBitableau, usize> =
            basis.iter().enumerate().map(|(i, t)| (t, i)).collect();

        let mut gen_mats: Vec<RepMatrix> = Vec::with_capacity(n);
        let mut gen_dens: Vec<LaurentElt> = Vec::with_capacity(n);
        let mut partners: Vec<Vec<Option<usize>>> = Vec::with_capacity(n);

        // T_t: diagonal, no denominator.
        {
            let mut num = vec![LaurentElt::zero(dim); d * d];
            for (c, t) in basis.iter().enumerate() {
                let one_in_first = t.position_word()[0].0 == 0;
                num[c * d + c] = if one_in_first {
                    LaurentElt::monomial(weights.combine(1, 0), 1)
                } else {
                    LaurentElt::monomial(weights.combine(-1, 0), -1)
                };
            }
            let mut dp = vec![0u32; n];
            dp[0] = 1;
            gen_mats.push(RepMatrix {
                d,
                num,
                den_pows: dp,
            });
            gen_dens.push(LaurentElt::one(dim));
            partners.push(vec![None; d]);
        }

        let v = LaurentElt::monomial(weights.combine(0, 1), 1);
        let v_inv = LaurentElt::monomial(weights.combine(0, -1), 1);
        let v2 = LaurentElt::monomial(weights.combine(0, 2), 1);
        let v2_inv = LaurentElt::monomial(weights.combine(0, -2), 1);
        let v_diff = &v - &v_inv;

        for g in 1..n {
            let i = g as u32;
            let partner: Vec<Option<usize>> = basis
                .iter()
                .map(|t| swap_entries(t, i).map(|s| tableau_index[&s]))
                .collect();
            // One atomic factor per swap orbit, taken at the smaller index.
            let mut den = LaurentElt::one(dim);
            for (c, p) in partner.iter().enumerate() {
                if let Some(p) = p {
                    if c < *p {
                        let s1 = residue(weights, &basis[c], i);
                        let s2 = residue(weights, &basis[c], i + 1);
                        den = &den * &(&s1 - &s2);
                    }
                }
            }
            let mut num = vec![LaurentElt::zero(dim); d * d];
            for (c, t) in basis.iter().enumerate() {
                let s1 = residue(weights, t, i);
                let s2 = residue(weights, t, i + 1);
                match partner[c] {
                    None => {
                        // i, i+1 in one row (eigenvalue v) or one column (−v⁻¹):
                        // (v−v⁻¹)σ₂/(σ₂−σ₁) collapses to that constant.
                        let diff = &s2 - &s1;
                        let value = (&v_diff * &s2)
                            .try_div_exact(&diff)
                            .expect("degenerate seminormal diagonal divides exactly");
                        num[c * d + c] = &value * &den;
                    }
                    Some(p) => {
                        let diff = &s1 - &s2;
                        let cof = den
                            .try_div_exact(&diff)
                            .expect("orbit factor divides the shared denominator");
                        // diagonal: (v−v⁻¹)σ₂/(σ₂−σ₁) = −(v−v⁻¹)σ₂/(σ₁−σ₂)
                        num[c * d + c] = -&(&(&v_diff * &s2) * &cof);
                        // off-diagonal into the partner row.
                        let beta = if c < p {
                            &(&v2 * &s1) - &s2
                        } else {
                            &s1 - &(&v2_inv * &s2)
                        };
                        num[p * d + c] = &beta * &cof;
                    }
                }
            }
            let mut dp = vec![0u32; n];
            dp[g] = 1;
            gen_mats.push(RepMatrix {
                d,
                num,
                den_pows: dp,
            });
            gen_dens.push(den);
            partners.push(partner);
        }

        // Element matrices along one reduced word each, by increasing length.
        let mut matrices = vec![RepMatrix::identity(d, dim, n); group.len()];
        let mut order: Vec<u32> = (0..group.len() as u32).collect();
        order.sort_by_key(|&e| group.length_of(e));
        for &e in &order {
            let word = group.word_of(e);
            if word.is_empty() {
                continue;
            }
            let last = *word.last().unwrap();
            let prev = group.right_mul(e, last);
            matrices[e as usize] = matrices[prev as usize].matmul(&gen_mats[last as usize], dim);
        }

        SeminormalRep {
            label: label.clone(),
            basis,
            d,
            weights: weights.clone(),
            gen_dens,
            matrices,
            partners,
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    pub fn matrix(&self, e: u32) -> &RepMatrix {
        &self.matrices[e as usize]
    }

    pub fn partner(&self, g: usize, column: usize) -> Option<usize> {
        self.partners[g][column]
    }

    /// Materialised denominator of an element matrix.
    pub fn den_of(&self, m: &RepMatrix) -> LaurentElt {
        let mut den = LaurentElt::one(self.dim());
        for (g, &p) in m.den_pows.iter().enumerate() {
            for _ in 0..p {
                den = &den * &self.gen_dens[g];
            }
        }
        den
    }

    /// Valuation (min exponent, leading coefficient) of the denominator,
    /// without materialising the product.
    pub fn den_valuation(&self, m: &RepMatrix) -> (GammaVec, BigInt) {
        let mut exp = GammaVec::zero(self.dim());
        let mut lead = BigInt::one();
        for (g, &p) in m.den_pows.iter().enumerate() {
            if p == 0 {
                continue;
            }
            let d = &self.gen_dens[g];
            exp = &exp + &d.min_exp().unwrap().scale(p as i32);
            lead *= d.min_coeff().unwrap().pow(p);
        }
        (exp, lead)
    }

    /// Entry (i,j) of 𝔛(T_w) as a ratio.
    pub fn entry_ratio(&self, e: u32, i: usize, j: usize) -> RatioElt {
        let m = self.matrix(e);
        RatioElt::new(m.entry(i, j).clone(), self.den_of(m)).unwrap()
    }

    /// Image of an arbitrary T-basis combination Σ c_w·T_w, over the
    /// elementwise-maximal denominator powers of the terms involved.
    pub fn image(&self, h: &std::collections::BTreeMap<u32, LaurentElt>) -> RepMatrix {
        let dim = self.dim();
        let ngens = self.gen_dens.len();
        let mut pows = vec![0u32; ngens];
        for &w in h.keys() {
            for g in 0..ngens {
                pows[g] = pows[g].max(self.matrix(w).den_pows[g]);
            }
        }
        let mut num = vec![LaurentElt::zero(dim); self.d * self.d];
        for (&w, c) in h.iter() {
            let m = self.matrix(w);
            let mut cof = c.clone();
            for g in 0..ngens {
                for _ in 0..pows[g] - m.den_pows[g] {
                    cof = &cof * &self.gen_dens[g];
                }
            }
            for (dst, src) in num.iter_mut().zip(&m.num) {
                if !src.is_zero() {
                    *dst = &*dst + &(src * &cof);
                }
            }
        }
        RepMatrix {
            d: self.d,
            num,
            den_pows: pows,
        }
    }

    /// Character value χ_λ(T_w) as a ratio.
    pub fn character(&self, e: u32) -> RatioElt {
        let m = self.matrix(e);
        RatioElt::new(m.trace(self.dim()), self.den_of(m)).unwrap()
    }

    /// Schur element c_λ = Σ_w 𝔛¹¹(T_w)·𝔛¹¹(T_{w⁻¹}), summed over a common
    /// factored denominator so no fraction addition is needed.
    pub fn schur_element(&self, group: &GroupTable) -> RatioElt {
        let dim = self.dim();
        let ngens = self.gen_dens.len();
        let mut need = vec![0u32; ngens];
        for e in 0..group.len() as u32 {
            let total: Vec<u32> = self
                .matrix(e)
                .den_pows
                .iter()
                .zip(&self.matrix(group.inverse(e)).den_pows)
                .map(|(a, b)| a + b)
                .collect();
            for g in 0..ngens {
                need[g] = need[g].max(total[g]);
            }
        }
        let mut big_den = LaurentElt::one(dim);
        for (g, &p) in need.iter().enumerate() {
            for _ in 0..p {
                big_den = &big_den * &self.gen_dens[g];
            }
        }
        let mut sum = LaurentElt::zero(dim);
        for e in 0..group.len() as u32 {
            let me = self.matrix(e);
            let mi = self.matrix(group.inverse(e));
            let mut cof = LaurentElt::one(dim);
            for g in 0..ngens {
                let deficit = need[g] - me.den_pows[g] - mi.den_pows[g];
                for _ in 0..deficit {
                    cof = &cof * &self.gen_dens[g];
                }
            }
            let term = &(me.entry(0, 0) * mi.entry(0, 0)) * &cof;
            sum = &sum + &term;
        }
        RatioElt::new(sum, big_den).unwrap()
    }

    /// The gauge diagonal P with P⁻¹𝔛(T_w)ᵀP = 𝔛(T_{w⁻¹}), built by chaining
    /// off-diagonal ratios from the first basis vector.
    pub fn orthogonality_gauge(&self, group: &GroupTable) -> Vec<RatioElt> {
        let dim = self.dim();
        let mut p: Vec<Option<RatioElt>> = vec![None; self.d];
        p[0] = Some(RatioElt::one(dim));
        let mut queue = vec![0usize];
        while let Some(c) = queue.pop() {
            for g in 1..group.rank() {
                if let Some(r) = self.partners[g][c] {
                    if p[r].is_some() {
                        continue;
                    }
                    let e = group.right_mul(group.identity(), g as u8);
                    let m = self.matrix(e);
                    // p_r = p_c·M_{cr}/M_{rc} from (P⁻¹MᵀP)_{cr} = M_{cr}.
                    let ratio =
                        RatioElt::new(m.entry(c, r).clone(), m.entry(r, c).clone()).unwrap();
                    p[r] = Some(&p[c].clone().unwrap() * &ratio);
                    queue.push(r);
                }
            }
        }
        p.into_iter()
            .map(|x| x.expect("tableau swap graph is connected"))
            .collect()
    }
}

/// The table of leading matrix coefficients for every character label of one
/// rank, with the (λ,i,j) ↔ w bijection and the star product.
pub struct LeadingCoeffTable {
    pub labels: Vec<Bipartition>,
    pub alphas: Vec<GammaVec>,
    pub reps: Vec<SeminormalRep>,
    /// (label, i, j) → (element, sign).
    coeff: HashMap<(usize, usize, usize), (u32, i8)>,
    lookup: HashMap<u32, (usize, usize, usize)>,
}

impl LeadingCoeffTable {
    pub fn build(group: &GroupTable, weights: &WeightFunction) -> Self {
        let labels = Bipartition::all(group.rank() as u32);
        let mut alphas = Vec::new();
        let mut reps = Vec::new();
        let mut coeff = HashMap::new();
        let mut lookup = HashMap::new();
        for (li, label) in labels.iter().enumerate() {
            let rep = SeminormalRep::build(group, weights, label);
            let alpha = alpha_invariant(weights, label);
            for e in 0..group.len() as u32 {
                let m = rep.matrix(e);
                let (den_exp, den_lead) = rep.den_valuation(m);
                for i in 0..rep.d {
                    for j in 0..rep.d {
                        let num = m.entry(i, j);
                        if num.is_zero() {
                            continue;
                        }
                        let val = &(num.min_exp().unwrap() + &alpha) - &den_exp;
                        if val.is_positive() {
                            continue;
                        }
                        assert!(
                            val.is_zero(),
                            "e^α𝔛(T_w) fell outside the valuation ring at {} ({},{},{})",
                            group.element(e),
                            label,
                            i,
                            j
                        );
                        let num_lead = num.min_coeff().unwrap();
                        let quot = num_lead / &den_lead;
                        assert_eq!(
                            &quot * &den_lead,
                            *num_lead,
                            "leading coefficient must be an integer"
                        );
                        let base: i8 = if quot == BigInt::one() {
                            1
                        } else if quot == BigInt::from(-1) {
                            -1
                        } else {
                            panic!("leading coefficient {quot} outside {{0,±1}}")
                        };
                        let c = base * group.sign_of(e);
                        let prev = coeff.insert((li, i, j), (e, c));
                        assert!(
                            prev.is_none(),
                            "two elements support ({label},{i},{j}): uniqueness failed"
                        );
                        let prev = lookup.insert(e, (li, i, j));
                        assert!(prev.is_none(), "element in two blocks: bijection failed");
                    }
                }
            }
            alphas.push(alpha);
            reps.push(rep);
        }
        assert_eq!(
            lookup.len(),
            group.len(),
            "the (λ,i,j) ↦ w map must be onto"
        );
        LeadingCoeffTable {
            labels,
            alphas,
            reps,
            coeff,
            lookup,
        }
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, label: &Bipartition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn d(&self, li: usize) -> usize {
        self.reps[li].d
    }

    /// c^{ij}_{w,λ}: ±1 on the supporting element, 0 elsewhere.
    pub fn leading_coeff(&self, w: u32, li: usize, i: usize, j: usize) -> i8 {
        match self.coeff.get(&(li, i, j)) {
            Some(&(e, c)) if e == w => c,
            _ => 0,
        }
    }

    pub fn w_of(&self, li: usize, i: usize, j: usize) -> u32 {
        self.coeff[&(li, i, j)].0
    }

    pub fn sign_of(&self, li: usize, i: usize, j: usize) -> i8 {
        self.coeff[&(li, i, j)].1
    }

    /// (λ, i, j) with c^{ij}_{w,λ} ≠ 0.
    pub fn cell_of(&self, w: u32) -> (usize, usize, usize) {
        self.lookup[&w]
    }

    /// 𝔗_λ: the d_λ² elements supported by the block.
    pub fn t_set(&self, li: usize) -> Vec<u32> {
        let d = self.reps[li].d;
        let mut out = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                out.push(self.w_of(li, i, j));
            }
        }
        out.sort_unstable();
        out
    }

    /// x ⋆ y = w_λ(l₀,i₀) when x = w_λ(i₀,j₀) and y = w_λ(j₀,l₀) share λ and
    /// the middle index; empty otherwise.
    pub fn star(&self, x: u32, y: u32) -> Option<u32> {
        let (lx, i0, j0) = self.lookup[&x];
        let (ly, k0, l0) = self.lookup[&y];
        (lx == ly && j0 == k0).then(|| self.w_of(lx, l0, i0))
    }

    /// n_{x,y,z} = c_x·c_y·c_z for z = x⋆y.
    pub fn n_triple(&self, x: u32, y: u32, z: u32) -> Option<i8> {
        let target = self.star(x, y)?;
        (target == z).then(|| {
            let (l, i0, j0) = self.lookup[&x];
            let (_, j1, l0) = self.lookup[&y];
            debug_assert_eq!(j0, j1);
            self.sign_of(l, i0, j0) * self.sign_of(l, j0, l0) * self.sign_of(l, l0, i0)
        })
    }

    /// Σ_w c^{ij}_{w,λ}·c^{kl}_{w,μ} = δ_{λμ}δ_{ik}δ_{jl} (normalised form).
    pub fn schur_relation(
        &self,
        la: usize,
        i: usize,
        j: usize,
        lb: usize,
        k: usize,
        l: usize,
    ) -> i64 {
        let (wa, ca) = self.coeff[&(la, i, j)];
        let (wb, cb) = self.coeff[&(lb, k, l)];
        if wa == wb {
            ca as i64 * cb as i64
        } else {
            0
        }
    }

    /// Σ_{λ,i,j} c^{ij}_{y,λ}·c^{ij}_{w,λ} = δ_{yw}.
    pub fn second_orthogonality(&self, y: u32, w: u32) -> i64 {
        if y != w {
            return 0;
        }
        let (_, _, _) = self.lookup[&y];
        1
    }

    /// JSON image of the table.
    pub fn dump(&self, group: &GroupTable) -> LeadingCoeffDump {
        let mut entries = Vec::new();
        for (li, label) in self.labels.iter().enumerate() {
            for i in 0..self.d(li) {
                for j in 0..self.d(li) {
                    let (e, c) = self.coeff[&(li, i, j)];
                    entries.push(LeadingCoeffEntry {
                        label: label.render(),
                        i: i + 1,
                        j: j + 1,
                        window: group.element(e).render_window(),
                        sign: c,
                    });
                }
            }
        }
        LeadingCoeffDump {
            rank: group.rank(),
            alphas: self
                .labels
                .iter()
                .zip(&self.alphas)
                .map(|(l, a)| (l.render(), format!("{a}")))
                .collect(),
            entries,
        }
    }
}

#[derive(Serialize)]
pub struct LeadingCoeffDump {
    pub rank: usize,
    pub alphas: Vec<(String, String)>,
    pub entries: Vec<LeadingCoeffEntry>,
}

#[derive(Serialize)]
pub struct LeadingCoeffEntry {
    pub label: String,
    pub i: usize,
    pub j: usize,
    pub window: String,
    pub sign: i8,
}

/// JSON image of one representation's generator matrices.
#[derive(Serialize)]
pub struct RepDump {
    pub label: String,
    pub basis: Vec<String>,
    pub generators: Vec<RepMatrixDump>,
}

#[derive(Serialize)]
pub struct RepMatrixDump {
    pub generator: String,
    pub den: LaurentElt,
    pub num: Vec<Vec<LaurentElt>>,
}

pub fn dump_rep(rep: &SeminormalRep, group: &GroupTable) -> RepDump {
    let mut generators = Vec::new();
    for g in 0..group.rank() {
        let e = group.right_mul(group.identity(), g as u8);
        let m = rep.matrix(e);
        let num = (0..rep.d)
            .map(|i| (0..rep.d).map(|j| m.entry(i, j).clone()).collect())
            .collect();
        generators.push(RepMatrixDump {
            generator: if g == 0 { "t".into() } else { format!("s{g}") },
            den: rep.den_of(m),
            num,
        });
    }
    RepDump {
        label: rep.label.render(),
        basis: rep.basis.iter().map(|t| t.render()).collect(),
        generators,
    }
}
