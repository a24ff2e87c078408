//! The Kazhdan–Lusztig engine: C′/C/D bases, structure constants, the
//! symmetrizing trace and the cell partitions, over any weight function with
//! values in an ordered Zᵏ.
//!
//! C′ is computed by induction on length: for sy > y one forms C′_s·C′_y and
//! subtracts bar-invariant corrections M^s_{z,y}·C′_z until every
//! non-leading T-coefficient lies in A_{<0}.  Bar-invariance plus the degree
//! bound characterise the basis uniquely, so the correction loop needs no
//! closed formula for M: the unique bar-invariant element matching the
//! non-negative part of a coefficient is subtracted at each step.
//!
//! A context can be built on any standard parabolic subset of the generators;
//! products of basis elements of the parabolic subalgebra never leave it, so
//! restricting the carrier set is all that parabolic Kazhdan–Lusztig theory
//! requires here.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use crate::gamma::{GammaError, GammaVec, LaurentElt};
use crate::perm::{Gen, GroupTable, SignedPerm};

/// Weight function on the generators: b for t and a for every sᵢ.
#[derive(Clone, Debug)]
pub struct WeightFunction {
    n: usize,
    dim: usize,
    b: GammaVec,
    a: GammaVec,
}

impl WeightFunction {
    /// The generic regime Γ = Z² with b = (1,0) and a = (0,1); lexicographic
    /// order makes b dominate (n−1)a for every n.
    pub fn generic(n: usize) -> Self {
        WeightFunction {
            n,
            dim: 2,
            b: GammaVec::new(&[1, 0]),
            a: GammaVec::new(&[0, 1]),
        }
    }

    /// Integer weights in Γ = Z.  Requires b, a > 0; the asymptotic condition
    /// b > (n−1)a is recorded, not enforced.
    pub fn integer(n: usize, b: i32, a: i32) -> Result<Self, GammaError> {
        if b <= 0 || a <= 0 {
            return Err(GammaError::Parse(format!(
                "weights must be positive, got b={b}, a={a}"
            )));
        }
        Ok(WeightFunction {
            n,
            dim: 1,
            b: GammaVec::new(&[b]),
            a: GammaVec::new(&[a]),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn b(&self) -> &GammaVec {
        &self.b
    }

    pub fn a(&self) -> &GammaVec {
        &self.a
    }

    /// b > (n−1)·a in the chosen order?
    pub fn is_asymptotic(&self) -> bool {
        self.b > self.a.scale(self.n as i32 - 1) && self.a > GammaVec::zero(self.dim)
    }

    pub fn weight(&self, g: Gen) -> &GammaVec {
        if g == 0 {
            &self.b
        } else {
            &self.a
        }
    }

    /// v_s = e^{L(s)}.
    pub fn v(&self, g: Gen) -> LaurentElt {
        LaurentElt::monomial(self.weight(g).clone(), 1)
    }

    pub fn v_inv(&self, g: Gen) -> LaurentElt {
        LaurentElt::monomial(-self.weight(g), 1)
    }

    /// b·i + a·j as an element of Γ.
    pub fn combine(&self, i: i32, j: i32) -> GammaVec {
        &self.b.scale(i) + &self.a.scale(j)
    }

    pub fn describe(&self) -> String {
        if self.dim == 2 {
            "generic-k2".to_string()
        } else {
            format!("integer b={},a={}", self.b.exps()[0], self.a.exps()[0])
        }
    }
}

/// An element of the Hecke algebra in the T-basis: a sparse map from element
/// indices to Laurent coefficients.
pub type HElt = BTreeMap<u32, LaurentElt>;

/// The full table of structure constants, keyed by (x, y) with sparse rows
/// over z.
pub type HTensor = HashMap<(u32, u32), Vec<(u32, LaurentElt)>>;

fn helt_add_term(h: &mut HElt, w: u32, c: &LaurentElt) {
    if c.is_zero() {
        return;
    }
    match h.get_mut(&w) {
        Some(existing) => {
            let sum = &*existing + c;
            if sum.is_zero() {
                h.remove(&w);
            } else {
                *existing = sum;
            }
        }
        None => {
            h.insert(w, c.clone());
        }
    }
}

/// Which side multiplication by C′_s happens on when building cell edges.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CellSide {
    Left,
    Right,
    TwoSided,
}

/// A partition of the carrier into cells, with the induced order.
#[derive(Clone, Debug)]
pub struct CellPartition {
    pub side: CellSide,
    /// Cells listed by their minimal member index; members sorted.
    pub cells: Vec<Vec<u32>>,
    cell_of: HashMap<u32, usize>,
    /// `leq[i][j]` holds iff cell i ≤ cell j in the preorder.
    leq: Vec<Vec<bool>>,
    /// Element-level edges (y, z) meaning C′_z appears in a product with C′_y.
    pub edges: Vec<(u32, u32)>,
}

impl CellPartition {
    pub fn cell_of(&self, w: u32) -> usize {
        self.cell_of[&w]
    }

    pub fn same_cell(&self, x: u32, y: u32) -> bool {
        self.cell_of[&x] == self.cell_of[&y]
    }

    /// x ≤ y in the preorder (reachability through the edge graph).
    pub fn leq_elements(&self, x: u32, y: u32) -> bool {
        self.leq_cells(self.cell_of[&x], self.cell_of[&y])
    }

    pub fn leq_cells(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }
}

/// Memoised Kazhdan–Lusztig data for one rank, weight function and standard
/// parabolic generator subset.
pub struct KlContext {
    group: Arc<GroupTable>,
    weights: WeightFunction,
    gens: Vec<Gen>,
    carrier: Vec<u32>,
    in_carrier: Vec<bool>,
    /// Carrier sorted by decreasing length, for back-substitution sweeps.
    carrier_desc: Vec<u32>,
    longest: u32,
    cprime: HashMap<u32, HElt>,
    mu: HashMap<(Gen, u32), BTreeMap<u32, LaurentElt>>,
    left_cells: CellPartition,
    right_cells: CellPartition,
    twosided_cells: CellPartition,
    h_tensor: OnceLock<HTensor>,
    dual: OnceLock<HashMap<u32, HElt>>,
}

impl KlContext {
    /// Builds the context for the full group.
    pub fn new(group: Arc<GroupTable>, weights: WeightFunction) -> Self {
        let gens: Vec<Gen> = (0..group.rank() as Gen).collect();
        Self::new_parabolic(group, weights, &gens)
    }

    /// Builds the context for the standard parabolic subgroup generated by
    /// `gens`.  The warm-up computes every C′ expansion, the M corrections
    /// and the three cell partitions; afterwards the context is read-only.
    pub fn new_parabolic(group: Arc<GroupTable>, weights: WeightFunction, gens: &[Gen]) -> Self {
        assert_eq!(
            group.rank(),
            weights.rank(),
            "weight function rank mismatch"
        );
        let carrier = group.parabolic_elements(gens);
        let mut in_carrier = vec![false; group.len()];
        for &e in &carrier {
            in_carrier[e as usize] = true;
        }
        let mut carrier_desc = carrier.clone();
        carrier_desc.sort_by_key(|&e| std::cmp::Reverse(group.length_of(e)));
        let longest = carrier_desc[0];

        let mut ctx = KlContext {
            group,
            weights,
            gens: gens.to_vec(),
            carrier,
            in_carrier,
            carrier_desc,
            longest,
            cprime: HashMap::new(),
            mu: HashMap::new(),
            left_cells: CellPartition {
                side: CellSide::Left,
                cells: Vec::new(),
                cell_of: HashMap::new(),
                leq: Vec::new(),
                edges: Vec::new(),
            },
            right_cells: CellPartition {
                side: CellSide::Right,
                cells: Vec::new(),
                cell_of: HashMap::new(),
                leq: Vec::new(),
                edges: Vec::new(),
            },
            twosided_cells: CellPartition {
                side: CellSide::TwoSided,
                cells: Vec::new(),
                cell_of: HashMap::new(),
                leq: Vec::new(),
                edges: Vec::new(),
            },
            h_tensor: OnceLock::new(),
            dual: OnceLock::new(),
        };
        ctx.build_cprime();
        ctx.build_cells();
        ctx
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn carrier(&self) -> &[u32] {
        &self.carrier
    }

    pub fn contains(&self, e: u32) -> bool {
        self.in_carrier[e as usize]
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    /// Longest element of the parabolic.
    pub fn longest(&self) -> u32 {
        self.longest
    }

    fn sign(&self, e: u32) -> i8 {
        self.group.sign_of(e)
    }

    // -- T-basis arithmetic -------------------------------------------------

    pub fn t_mul_gen_left(&self, g: Gen, h: &HElt) -> HElt {
        let mut out = HElt::new();
        let vs = self.weights.v(g);
        let vs_inv = self.weights.v_inv(g);
        let diff = &vs - &vs_inv;
        for (&w, c) in h {
            let gw = self.group.left_mul(w, g);
            helt_add_term(&mut out, gw, c);
            if self.group.length_of(gw) < self.group.length_of(w) {
                helt_add_term(&mut out, w, &(c * &diff));
            }
        }
        out
    }

    pub fn t_mul_gen_right(&self, h: &HElt, g: Gen) -> HElt {
        let mut out = HElt::new();
        let vs = self.weights.v(g);
        let vs_inv = self.weights.v_inv(g);
        let diff = &vs - &vs_inv;
        for (&w, c) in h {
            let wg = self.group.right_mul(w, g);
            helt_add_term(&mut out, wg, c);
            if self.group.length_of(wg) < self.group.length_of(w) {
                helt_add_term(&mut out, w, &(c * &diff));
            }
        }
        out
    }

    /// T_u·h for a single basis element T_u.
    pub fn t_basis_mul_left(&self, u: u32, h: &HElt) -> HElt {
        let mut out = h.clone();
        for &g in self.group.word_of(u).iter().rev() {
            out = self.t_mul_gen_left(g, &out);
        }
        out
    }

    /// Generic product of two T-basis expansions.
    pub fn t_mul(&self, a: &HElt, b: &HElt) -> HElt {
        let mut out = HElt::new();
        for (&u, c) in a {
            let part = self.t_basis_mul_left(u, b);
            for (w, k) in part {
                helt_add_term(&mut out, w, &(&k * c));
            }
        }
        out
    }

    /// bar(T_w) = T_{w⁻¹}⁻¹ expanded over the T-basis.
    pub fn bar_t(&self, w: u32) -> HElt {
        let mut out = HElt::from([(self.group.identity(), LaurentElt::one(self.dim()))]);
        for &g in self.group.word_of(w) {
            // multiply on the right by T_g⁻¹ = T_g − (v_g − v_g⁻¹)T_1
            let mut next = self.t_mul_gen_right(&out, g);
            let diff = &self.weights.v(g) - &self.weights.v_inv(g);
            for (w2, c) in &out {
                helt_add_term(&mut next, *w2, &-&(c * &diff));
            }
            out = next;
        }
        out
    }

    /// The bar involution on the algebra.
    pub fn bar(&self, h: &HElt) -> HElt {
        let mut out = HElt::new();
        for (&w, c) in h {
            let barc = c.bar();
            for (w2, k) in self.bar_t(w) {
                helt_add_term(&mut out, w2, &(&k * &barc));
            }
        }
        out
    }

    /// The symmetrizing trace: coefficient of T_1.
    pub fn tau(&self, h: &HElt) -> LaurentElt {
        h.get(&self.group.identity())
            .cloned()
            .unwrap_or_else(|| LaurentElt::zero(self.dim()))
    }

    // -- the C′ basis --------------------------------------------------------

    fn build_cprime(&mut self) {
        let id = self.group.identity();
        self.cprime
            .insert(id, HElt::from([(id, LaurentElt::one(self.dim()))]));
        let carrier = self.carrier.clone();
        for &w in &carrier {
            if w == id {
                continue;
            }
            let s = self
                .gens
                .iter()
                .copied()
                .find(|&g| {
                    self.group.length_of(self.group.left_mul(w, g)) < self.group.length_of(w)
                })
                .expect("non-identity element of the parabolic has a left descent in it");
            let y = self.group.left_mul(w, s);
            let (cw, m) = self.product_and_correct(s, y);
            self.cprime.insert(w, cw);
            self.mu.insert((s, y), m);
        }
    }

    /// Expands C′_s·C′_y, subtracting bar-invariant corrections; returns the
    /// corrected element (equal to C′_{sy}) and the map z ↦ M^s_{z,y}.
    fn product_and_correct(&self, s: Gen, y: u32) -> (HElt, BTreeMap<u32, LaurentElt>) {
        let sy = self.group.left_mul(y, s);
        debug_assert!(self.group.length_of(sy) > self.group.length_of(y));
        let cy = &self.cprime[&y];
        // C′_s·C′_y = T_s·C′_y + v_s⁻¹·C′_y
        let mut f = self.t_mul_gen_left(s, cy);
        let vs_inv = self.weights.v_inv(s);
        for (&w, c) in cy {
            helt_add_term(&mut f, w, &(c * &vs_inv));
        }
        let mut m_out = BTreeMap::new();
        // Correct the longest offending coefficient first; a correction at z
        // only perturbs strictly shorter elements (and may switch on terms
        // that were zero a moment ago), so the scan is redone each round.
        loop {
            let offender = f
                .iter()
                .filter(|&(&z, c)| z != sy && !c.in_a_lt0())
                .max_by_key(|&(&z, _)| self.group.length_of(z))
                .map(|(&z, c)| (z, c.bar_symmetrize_nonneg()));
            let Some((z, m)) = offender else { break };
            debug_assert!(!m.is_zero());
            let cz = &self.cprime[&z];
            for (&w2, c2) in cz {
                helt_add_term(&mut f, w2, &-&(c2 * &m));
            }
            let prev = m_out.insert(z, m);
            debug_assert!(prev.is_none(), "an element never needs two corrections");
        }
        debug_assert!(f.get(&sy).is_some_and(|c| c.is_one()));
        (f, m_out)
    }

    /// The T-basis expansion of C′_w.
    pub fn cprime_elt(&self, w: u32) -> &HElt {
        &self.cprime[&w]
    }

    /// P*_{y,w}: the coefficient of T_y in C′_w (zero unless y ≤ w).
    pub fn kl_star_polynomial(&self, y: u32, w: u32) -> LaurentElt {
        self.cprime[&w]
            .get(&y)
            .cloned()
            .unwrap_or_else(|| LaurentElt::zero(self.dim()))
    }

    /// M^s_{z,y}, the bar-invariant correction coefficient.  Preconditions
    /// sz < z < y < sy are the caller's contract; outside the support the
    /// value is zero.
    pub fn mu_element(&mut self, s: Gen, z: u32, y: u32) -> LaurentElt {
        let sy = self.group.left_mul(y, s);
        assert!(
            self.group.length_of(sy) > self.group.length_of(y),
            "mu_element requires sy > y"
        );
        let sz = self.group.left_mul(z, s);
        assert!(
            self.group.length_of(sz) < self.group.length_of(z),
            "mu_element requires sz < z"
        );
        if !self.mu.contains_key(&(s, y)) {
            let (_, m) = self.product_and_correct(s, y);
            self.mu.insert((s, y), m);
        }
        self.mu[&(s, y)]
            .get(&z)
            .cloned()
            .unwrap_or_else(|| LaurentElt::zero(self.dim()))
    }

    fn mu_map(&self, s: Gen, y: u32) -> BTreeMap<u32, LaurentElt> {
        match self.mu.get(&(s, y)) {
            Some(m) => m.clone(),
            None => self.product_and_correct(s, y).1,
        }
    }

    /// C_w = ε_w·j(C′_w): coefficient of T_y is ε_yε_w·bar(P*_{y,w}).
    pub fn c_elt(&self, w: u32) -> HElt {
        let sw = self.sign(w);
        self.cprime[&w]
            .iter()
            .map(|(&y, p)| {
                let c = if self.sign(y) * sw < 0 {
                    -&p.bar()
                } else {
                    p.bar()
                };
                (y, c)
            })
            .collect()
    }

    /// D_y = T_y + Σ_{w>y} bar(P*_{w·w₀, y·w₀})·T_w, dual to C under τ.
    pub fn d_elt(&self, y: u32) -> HElt {
        self.duals()[&y].clone()
    }

    fn duals(&self) -> &HashMap<u32, HElt> {
        self.dual.get_or_init(|| {
            let w0 = self.longest;
            let mut out = HashMap::new();
            for &y in &self.carrier {
                let yw0 = self.group.mul(y, w0);
                let mut d = HElt::new();
                for &w in &self.carrier {
                    let ww0 = self.group.mul(w, w0);
                    if w == y {
                        helt_add_term(&mut d, w, &LaurentElt::one(self.dim()));
                    } else {
                        let p = self.kl_star_polynomial(ww0, yw0);
                        helt_add_term(&mut d, w, &p.bar());
                    }
                }
                out.insert(y, d);
            }
            out
        })
    }

    /// Expansion of an arbitrary element in the C′ basis, by back-substitution
    /// against the unitriangular change of basis.
    pub fn cprime_expand(&self, h: &HElt) -> Vec<(u32, LaurentElt)> {
        let mut rem = h.clone();
        let mut out = Vec::new();
        for &z in &self.carrier_desc {
            let Some(c) = rem.get(&z).cloned() else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            for (&w, k) in &self.cprime[&z] {
                helt_add_term(&mut rem, w, &-&(k * &c));
            }
            out.push((z, c));
        }
        assert!(
            rem.is_empty(),
            "element not in the span of the parabolic C′ basis"
        );
        out.reverse();
        out
    }

    /// Expansion in the C basis.
    pub fn c_expand(&self, h: &HElt) -> Vec<(u32, LaurentElt)> {
        let mut rem = h.clone();
        let mut out = Vec::new();
        for &z in &self.carrier_desc {
            let Some(c) = rem.get(&z).cloned() else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            for (w, k) in self.c_elt(z) {
                helt_add_term(&mut rem, w, &-&(&k * &c));
            }
            out.push((z, c));
        }
        assert!(
            rem.is_empty(),
            "element not in the span of the parabolic C basis"
        );
        out.reverse();
        out
    }

    /// h_{x,y,·}: the structure constants of C′_x·C′_y, sparse over z.
    pub fn h_row(&self, x: u32, y: u32) -> Vec<(u32, LaurentElt)> {
        if let Some(t) = self.h_tensor.get() {
            if let Some(row) = t.get(&(x, y)) {
                return row.clone();
            }
        }
        let prod = self.t_mul(&self.cprime[&x], &self.cprime[&y]);
        self.cprime_expand(&prod)
    }

    /// A single structure constant h_{x,y,z}.
    pub fn h_structure(&self, x: u32, y: u32, z: u32) -> LaurentElt {
        self.h_row(x, y)
            .into_iter()
            .find(|(w, _)| *w == z)
            .map(|(_, c)| c)
            .unwrap_or_else(|| LaurentElt::zero(self.dim()))
    }

    /// h_{x,y,z} through the trace: ε_xε_yε_z·τ(C_x·C_y·D_{z⁻¹}).  Kept as an
    /// independent route for cross-checking the product-and-expand path.
    pub fn h_structure_tau(&self, x: u32, y: u32, z: u32) -> LaurentElt {
        let prod = self.t_mul(&self.c_elt(x), &self.c_elt(y));
        let d = self.d_elt(self.group.inverse(z));
        // τ(P·D) = Σ_u P_u·D_{u⁻¹} because τ(T_u T_v) = δ_{v,u⁻¹}.
        let mut acc = LaurentElt::zero(self.dim());
        for (&u, c) in &prod {
            if let Some(k) = d.get(&self.group.inverse(u)) {
                acc = &acc + &(c * k);
            }
        }
        let s = self.sign(x) * self.sign(y) * self.sign(z);
        if s < 0 {
            -&acc
        } else {
            acc
        }
    }

    /// The full h tensor, computed once and shared.
    pub fn h_all(&self) -> &HTensor {
        self.h_tensor.get_or_init(|| {
            let mut out = HashMap::new();
            for &x in &self.carrier {
                for &y in &self.carrier {
                    let prod = self.t_mul(&self.cprime[&x], &self.cprime[&y]);
                    out.insert((x, y), self.cprime_expand(&prod));
                }
            }
            out
        })
    }

    // -- cells ---------------------------------------------------------------

    /// Support of C′_s·C′_y over the C′ basis, from the correction data.
    fn left_product_support(&self, s: Gen, y: u32) -> Vec<u32> {
        let sy = self.group.left_mul(y, s);
        if self.group.length_of(sy) < self.group.length_of(y) {
            return vec![y];
        }
        let mut sup = vec![sy];
        for (&z, m) in self.mu_map(s, y).iter() {
            if !m.is_zero() {
                sup.push(z);
            }
        }
        sup
    }

    /// Support of C′_y·C′_s over the C′ basis, by direct expansion.
    fn right_product_support(&self, y: u32, s: Gen) -> Vec<u32> {
        let ys = self.group.right_mul(y, s);
        if self.group.length_of(ys) < self.group.length_of(y) {
            return vec![y];
        }
        let mut prod = self.t_mul_gen_right(&self.cprime[&y], s);
        let vs_inv = self.weights.v_inv(s);
        for (&w, c) in &self.cprime[&y] {
            helt_add_term(&mut prod, w, &(c * &vs_inv));
        }
        self.cprime_expand(&prod)
            .into_iter()
            .map(|(z, _)| z)
            .collect()
    }

    fn build_cells(&mut self) {
        let mut left_edges = Vec::new();
        let mut right_edges = Vec::new();
        for &y in &self.carrier.clone() {
            for &s in &self.gens.clone() {
                for z in self.left_product_support(s, y) {
                    left_edges.push((y, z));
                }
                for z in self.right_product_support(y, s) {
                    right_edges.push((y, z));
                }
            }
        }
        left_edges.sort_unstable();
        left_edges.dedup();
        right_edges.sort_unstable();
        right_edges.dedup();
        let mut both = left_edges.clone();
        both.extend_from_slice(&right_edges);
        both.sort_unstable();
        both.dedup();
        self.left_cells = self.partition_from_edges(CellSide::Left, left_edges);
        self.right_cells = self.partition_from_edges(CellSide::Right, right_edges);
        self.twosided_cells = self.partition_from_edges(CellSide::TwoSided, both);
    }

    fn partition_from_edges(&self, side: CellSide, edges: Vec<(u32, u32)>) -> CellPartition {
        let pos: HashMap<u32, usize> = self
            .carrier
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        let mut graph = DiGraph::<u32, ()>::new();
        let nodes: Vec<_> = self.carrier.iter().map(|&e| graph.add_node(e)).collect();
        for &(y, z) in &edges {
            if y != z {
                graph.add_edge(nodes[pos[&y]], nodes[pos[&z]], ());
            }
        }
        let sccs = petgraph::algo::tarjan_scc(&graph);
        let mut cells: Vec<Vec<u32>> = sccs
            .iter()
            .map(|comp| {
                let mut cell: Vec<u32> = comp.iter().map(|&ix| graph[ix]).collect();
                cell.sort_unstable();
                cell
            })
            .collect();
        cells.sort_by_key(|cell| cell[0]);
        let mut cell_of = HashMap::new();
        for (i, cell) in cells.iter().enumerate() {
            for &e in cell {
                cell_of.insert(e, i);
            }
        }
        // Reachability on the condensation: cell i ≤ cell j iff some element
        // of i is reachable from some element of j.
        let k = cells.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
        for &(y, z) in &edges {
            let (cy, cz) = (cell_of[&y], cell_of[&z]);
            if cy != cz {
                adj[cy].push(cz);
            }
        }
        let mut leq = vec![vec![false; k]; k];
        for j in 0..k {
            // DFS downward from cell j.
            let mut stack = vec![j];
            while let Some(c) = stack.pop() {
                if leq[c][j] {
                    continue;
                }
                leq[c][j] = true;
                for &next in &adj[c] {
                    stack.push(next);
                }
            }
        }
        CellPartition {
            side,
            cells,
            cell_of,
            leq,
            edges,
        }
    }

    pub fn cells(&self, side: CellSide) -> &CellPartition {
        match side {
            CellSide::Left => &self.left_cells,
            CellSide::Right => &self.right_cells,
            CellSide::TwoSided => &self.twosided_cells,
        }
    }

    /// Trace of C_w on the left-cell module with basis {c_x | x ∈ cell}:
    /// χ(C_w) = ε_w·Σ_{x∈cell} h_{w,x,x}.
    pub fn cell_character_c(&self, cell: &[u32], w: u32) -> LaurentElt {
        let mut acc = LaurentElt::zero(self.dim());
        for &x in cell {
            acc = &acc + &self.h_structure(w, x, x);
        }
        if self.sign(w) < 0 {
            -&acc
        } else {
            acc
        }
    }

    /// Trace of T_w on the left-cell module, through the C-basis expansion.
    pub fn cell_character_t(&self, cell: &[u32], w: u32) -> LaurentElt {
        let t = HElt::from([(w, LaurentElt::one(self.dim()))]);
        let mut acc = LaurentElt::zero(self.dim());
        for (u, coeff) in self.c_expand(&t) {
            let tr = self.cell_character_c(cell, u);
            acc = &acc + &(&coeff * &tr);
        }
        acc
    }

    // -- JSON dumps -----------------------------------------------------------

    /// Serialisable dump of the P* table and, optionally, the h tensor.
    pub fn dump_tables(&self, with_h: bool) -> KlTables {
        let win = |e: u32| self.group.element(e).render_window();
        let mut pstar = Vec::new();
        for &w in &self.carrier {
            for (&y, p) in &self.cprime[&w] {
                pstar.push(PolyEntry {
                    y: win(y),
                    w: win(w),
                    poly: p.clone(),
                });
            }
        }
        pstar.sort_by(|a, b| (&a.w, &a.y).cmp(&(&b.w, &b.y)));
        let mut h = Vec::new();
        if with_h {
            for &x in &self.carrier {
                for &y in &self.carrier {
                    for (z, c) in self.h_row(x, y) {
                        h.push(HEntry {
                            x: win(x),
                            y: win(y),
                            z: win(z),
                            poly: c,
                        });
                    }
                }
            }
            h.sort_by(|a, b| (&a.x, &a.y, &a.z).cmp(&(&b.x, &b.y, &b.z)));
        }
        KlTables {
            rank: self.group.rank(),
            regime: self.weights.describe(),
            pstar,
            h,
        }
    }
}

/// JSON image of the memoised tables, exponent-vector keyed monomial lists.
#[derive(Serialize, Deserialize)]
pub struct KlTables {
    pub rank: usize,
    pub regime: String,
    pub pstar: Vec<PolyEntry>,
    pub h: Vec<HEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct PolyEntry {
    pub y: String,
    pub w: String,
    pub poly: LaurentElt,
}

#[derive(Serialize, Deserialize)]
pub struct HEntry {
    pub x: String,
    pub y: String,
    pub z: String,
    pub poly: LaurentElt,
}

/// Convenience: index of a word like `t s1 t` in a group table.
pub fn idx(table: &GroupTable, word: &str) -> u32 {
    table.index_of(&SignedPerm::parse_word(table.rank(), word).unwrap())
}

/// The coefficient ±1 as a Laurent constant, for tests and expansions.
pub fn int_const(dim: usize, k: i64) -> LaurentElt {
    LaurentElt::constant(dim, BigInt::from(k))
}
