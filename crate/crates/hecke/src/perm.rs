//! The Coxeter group Wₙ of type Bₙ realised as signed permutations.
//!
//! An element is stored through its window [w(1),…,w(n)], a list of nonzero
//! integers whose absolute values permute 1..n.  Generators act on the right:
//! w·t negates the first window entry and w·sᵢ swaps entries i and i+1.  As a
//! function on ±1..±n this is composition (xy)(i) = x(y(i)).
//!
//! Besides the group operations the module provides the two length statistics
//! (Coxeter length and t-length), reduced words, the Bruhat–Chevalley order,
//! longest elements of standard parabolic subgroups, and the coset
//! decomposition w = a_w·a_l·σ_w·b_w⁻¹ along the symmetric subgroup.

use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::gamma::GammaError;

/// Generator index: 0 is t, i ≥ 1 is the transposition sᵢ.
pub type Gen = u8;

/// A word in the generators, evaluated right to left onto windows.
pub type GenWord = Vec<Gen>;

/// A signed permutation of rank n, stored as its window.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignedPerm {
    window: SmallVec<[i8; 8]>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i8).collect(),
        }
    }

    /// Builds an element from a window, validating the signed-permutation
    /// property.
    pub fn from_window(window: &[i8]) -> Result<Self, GammaError> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &w in window {
            let a = w.unsigned_abs() as usize;
            if w == 0 || a > n || seen[a] {
                return Err(GammaError::Parse(format!("invalid window {window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm {
            window: SmallVec::from_slice(window),
        })
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i8] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &w)| w == i as i8 + 1)
    }

    /// The image of i under the window map, for i ∈ ±1..±n.
    pub fn apply(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        let img = self.window[a - 1] as i32;
        if i < 0 {
            -img
        } else {
            img
        }
    }

    /// Composition (self·rhs)(i) = self(rhs(i)).
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        SignedPerm {
            window: (1..=self.rank() as i32)
                .map(|i| self.apply(rhs.apply(i)) as i8)
                .collect(),
        }
    }

    pub fn inv(&self) -> Self {
        let mut window = SmallVec::from_elem(0i8, self.rank());
        for (i, &w) in self.window.iter().enumerate() {
            let a = w.unsigned_abs() as usize;
            window[a - 1] = if w < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
        }
        SignedPerm { window }
    }

    /// Right multiplication by a single generator.
    pub fn right_mul_gen(&self, g: Gen) -> Self {
        let mut w = self.clone();
        if g == 0 {
            w.window[0] = -w.window[0];
        } else {
            let i = g as usize;
            assert!(
                i < self.rank(),
                "generator s{i} out of range for rank {}",
                self.rank()
            );
            w.window.swap(i - 1, i);
        }
        w
    }

    pub fn left_mul_gen(&self, g: Gen) -> Self {
        let mut w = self.clone();
        if g == 0 {
            for e in w.window.iter_mut() {
                if e.unsigned_abs() == 1 {
                    *e = -*e;
                }
            }
        } else {
            let i = g as i8;
            for e in w.window.iter_mut() {
                if e.unsigned_abs() == i as u8 {
                    *e += e.signum();
                } else if e.unsigned_abs() == i as u8 + 1 {
                    *e -= e.signum();
                }
            }
        }
        w
    }

    /// Coxeter length via the type-B inversion statistic
    /// ℓ(w) = #{i<j : w(i) > w(j)} + Σ_{w(i)<0} |w(i)|.
    pub fn length(&self) -> usize {
        let mut len = 0usize;
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if self.window[i] > self.window[j] {
                    len += 1;
                }
            }
            if self.window[i] < 0 {
                len += (-self.window[i]) as usize;
            }
        }
        len
    }

    /// Number of occurrences of t in any reduced word, i.e. the count of
    /// negative window entries.
    pub fn t_length(&self) -> usize {
        self.window.iter().filter(|&&w| w < 0).count()
    }

    /// ℓ(w·g) < ℓ(w)?
    pub fn has_right_descent(&self, g: Gen) -> bool {
        if g == 0 {
            self.window[0] < 0
        } else {
            let i = g as usize;
            self.window[i - 1] > self.window[i]
        }
    }

    pub fn has_left_descent(&self, g: Gen) -> bool {
        self.inv().has_right_descent(g)
    }

    pub fn right_descents(&self, ngens: usize) -> Vec<Gen> {
        (0..ngens as Gen)
            .filter(|&g| self.has_right_descent(g))
            .collect()
    }

    /// Evaluates a generator word, left to right, starting from the identity.
    pub fn from_word(n: usize, word: &[Gen]) -> Self {
        let mut w = Self::identity(n);
        for &g in word {
            assert!(
                (g as usize) < n,
                "generator index {g} out of range for rank {n}"
            );
            w = w.right_mul_gen(g);
        }
        w
    }

    /// One reduced word for this element, of length ℓ(w).
    pub fn to_reduced_word(&self) -> GenWord {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        'outer: while !w.is_identity() {
            for g in 0..self.rank() as Gen {
                if w.has_right_descent(g) {
                    w = w.right_mul_gen(g);
                    word.push(g);
                    continue 'outer;
                }
            }
            unreachable!("non-identity element without right descent");
        }
        word.reverse();
        word
    }

    /// Bruhat–Chevalley order by the descent recursion: with ys < y,
    /// x ≤ y iff (xs ≤ ys when xs < x) and otherwise (x ≤ ys).
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let mut x = self.clone();
        let mut y = other.clone();
        loop {
            if x == y {
                return true;
            }
            if x.length() >= y.length() {
                return false;
            }
            let s = (0..x.rank() as Gen)
                .find(|&g| y.has_right_descent(g))
                .expect("non-identity element without right descent");
            y = y.right_mul_gen(s);
            if x.has_right_descent(s) {
                x = x.right_mul_gen(s);
            }
        }
    }

    /// Longest element of the standard parabolic subgroup generated by
    /// `subset`; greedily multiplying by ascent generators terminates there.
    pub fn longest_element(n: usize, subset: &[Gen]) -> Self {
        let mut w = Self::identity(n);
        'outer: loop {
            for &g in subset {
                if !w.has_right_descent(g) {
                    w = w.right_mul_gen(g);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// The element a_l = t(s₁t)(s₂s₁t)⋯(s_{l−1}⋯s₁t), of length l(l+1)/2 and
    /// t-length l.  Its window negates the first l entries: [−1,…,−l,l+1,…,n].
    pub fn a_element(n: usize, l: usize) -> Self {
        assert!(l <= n, "a_element index {l} out of range for rank {n}");
        let mut word = Vec::new();
        for j in 0..l {
            for i in (1..=j).rev() {
                word.push(i as Gen);
            }
            word.push(0);
        }
        Self::from_word(n, &word)
    }

    /// Minimal-length representative of the right coset w·⟨subset⟩.
    pub fn min_coset_rep(&self, subset: &[Gen]) -> Self {
        let mut w = self.clone();
        'outer: loop {
            for &g in subset {
                if w.has_right_descent(g) {
                    w = w.right_mul_gen(g);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// The unique decomposition w = a_w·a_l·σ_w·b_w⁻¹ with l = ℓ_t(w),
    /// σ_w in the Young subgroup 𝔖_{l,n−l} and a_w, b_w distinguished coset
    /// representatives of 𝔖_{l,n−l} in 𝔖ₙ.
    pub fn coset_decompose(&self) -> CosetDecomposition {
        let n = self.rank();
        let l = self.t_length();
        let sym: Vec<Gen> = (1..n as Gen).collect();
        // Strip the symmetric-group part on the right.
        let c = self.min_coset_rep(&sym);
        let sigma_full = c.inv().mul(self);
        let a_w = c.mul(&Self::a_element(n, l).inv());
        // Split σ along the right cosets of the Young subgroup.
        let young: Vec<Gen> = (1..n as Gen).filter(|&g| g as usize != l).collect();
        let b_w = sigma_full.inv().min_coset_rep(&young);
        let sigma_w = b_w.inv().mul(&sigma_full.inv()).inv();
        CosetDecomposition {
            a_w,
            l,
            sigma_w,
            b_w,
        }
    }

    /// All 2ⁿ·n! elements of Wₙ.
    pub fn enumerate(n: usize) -> Vec<Self> {
        assert!(
            (1..=7).contains(&n),
            "rank {n} out of the supported enumeration range"
        );
        let mut out = Vec::new();
        let mut perm: Vec<i8> = (1..=n as i8).collect();
        permute_signed(&mut perm, 0, &mut out);
        out.sort_by_key(|w| (w.length(), w.window.clone()));
        out
    }

    /// All involutions z² = 1 of Wₙ.
    pub fn involutions(n: usize) -> Vec<Self> {
        Self::enumerate(n)
            .into_iter()
            .filter(|w| w.mul(w).is_identity())
            .collect()
    }

    /// Window text form, e.g. `[2,-1,3]`.
    pub fn render_window(&self) -> String {
        let body: Vec<String> = self.window.iter().map(|w| w.to_string()).collect();
        format!("[{}]", body.join(","))
    }

    /// Word text form, e.g. `t s1 s2`; the identity renders as `e`.
    pub fn render_word(&self) -> String {
        let word = self.to_reduced_word();
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter()
            .map(|&g| {
                if g == 0 {
                    "t".to_string()
                } else {
                    format!("s{g}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `[2,-1,3]`.
    pub fn parse_window(s: &str) -> Result<Self, GammaError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| {
                GammaError::Parse(format!("window must look like [2,-1,3], got `{s}`"))
            })?;
        let entries: Result<Vec<i8>, _> =
            inner.split(',').map(|p| p.trim().parse::<i8>()).collect();
        let entries = entries.map_err(|e| GammaError::Parse(format!("bad window entry: {e}")))?;
        Self::from_window(&entries)
    }

    /// Parses `t s1 s2` (or `e` for the identity) at a given rank.
    pub fn parse_word(n: usize, s: &str) -> Result<Self, GammaError> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut word = Vec::new();
        for tok in s.split_whitespace() {
            let g = if tok == "t" || tok == "s0" {
                0
            } else if let Some(rest) = tok.strip_prefix('s') {
                rest.parse::<Gen>()
                    .map_err(|e| GammaError::Parse(format!("bad generator `{tok}`: {e}")))?
            } else {
                return Err(GammaError::Parse(format!("bad generator `{tok}`")));
            };
            if g as usize >= n {
                return Err(GammaError::Parse(format!(
                    "generator `{tok}` out of range for rank {n}"
                )));
            }
            word.push(g);
        }
        Ok(Self::from_word(n, &word))
    }
}

fn permute_signed(perm: &mut Vec<i8>, k: usize, out: &mut Vec<SignedPerm>) {
    let n = perm.len();
    if k == n {
        // Attach all sign patterns to this underlying permutation.
        for mask in 0..(1u32 << n) {
            let window: SmallVec<[i8; 8]> = perm
                .iter()
                .enumerate()
                .map(|(i, &p)| if mask >> i & 1 == 1 { -p } else { p })
                .collect();
            out.push(SignedPerm { window });
        }
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute_signed(perm, k + 1, out);
        perm.swap(k, i);
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_window())
    }
}

/// The four factors of w = a_w·a_l·σ_w·b_w⁻¹.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    pub a_w: SignedPerm,
    pub l: usize,
    pub sigma_w: SignedPerm,
    pub b_w: SignedPerm,
}

impl CosetDecomposition {
    pub fn recompose(&self, n: usize) -> SignedPerm {
        self.a_w
            .mul(&SignedPerm::a_element(n, self.l))
            .mul(&self.sigma_w)
            .mul(&self.b_w.inv())
    }
}

/// Precomputed multiplication, length and Bruhat data for one rank.
///
/// Elements are indexed by their position in a canonical enumeration sorted by
/// (length, window); index 0 is the identity.  All Kazhdan–Lusztig machinery
/// works on these indices.
pub struct GroupTable {
    n: usize,
    elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, u32>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
    inv: Vec<u32>,
    length: Vec<u32>,
    tlen: Vec<u32>,
    word: Vec<GenWord>,
    bruhat: Vec<Vec<u64>>,
}

impl GroupTable {
    pub fn new(n: usize) -> Self {
        assert!(
            (1..=5).contains(&n),
            "group tables are built for ranks 1..=5 only (requested {n})"
        );
        let elements = SignedPerm::enumerate(n);
        let count = elements.len();
        let index: HashMap<SignedPerm, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let mut right = vec![vec![0u32; n]; count];
        let mut left = vec![vec![0u32; n]; count];
        let mut inv = vec![0u32; count];
        let mut length = vec![0u32; count];
        let mut tlen = vec![0u32; count];
        for (i, w) in elements.iter().enumerate() {
            for g in 0..n as Gen {
                right[i][g as usize] = index[&w.right_mul_gen(g)];
                left[i][g as usize] = index[&w.left_mul_gen(g)];
            }
            inv[i] = index[&w.inv()];
            length[i] = w.length() as u32;
            tlen[i] = w.t_length() as u32;
        }
        let word: Vec<GenWord> = elements.iter().map(|w| w.to_reduced_word()).collect();

        // Bruhat rows by the descent recursion, elements in length order.
        let words_per_row = count.div_ceil(64);
        let mut bruhat = vec![vec![0u64; words_per_row]; count];
        for y in 0..count {
            if length[y] == 0 {
                bruhat[y][0] = 1;
                continue;
            }
            let s = (0..n)
                .find(|&g| elements[y].has_right_descent(g as Gen))
                .unwrap();
            let ys = right[y][s] as usize;
            let mut row = vec![0u64; words_per_row];
            for x in 0..count {
                let xs = right[x][s] as usize;
                let src = if length[xs] < length[x] { xs } else { x };
                if bruhat[ys][src / 64] >> (src % 64) & 1 == 1 {
                    row[x / 64] |= 1 << (x % 64);
                }
            }
            row[y / 64] |= 1 << (y % 64);
            bruhat[y] = row;
        }

        GroupTable {
            n,
            elements,
            index,
            right,
            left,
            inv,
            length,
            tlen,
            word,
            bruhat,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, i: u32) -> &SignedPerm {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn index_of(&self, w: &SignedPerm) -> u32 {
        self.index[w]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn longest(&self) -> u32 {
        (self.len() - 1) as u32
    }

    pub fn right_mul(&self, e: u32, g: Gen) -> u32 {
        self.right[e as usize][g as usize]
    }

    pub fn left_mul(&self, e: u32, g: Gen) -> u32 {
        self.left[e as usize][g as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut e = a;
        for &g in &self.word[b as usize] {
            e = self.right_mul(e, g);
        }
        e
    }

    pub fn inverse(&self, e: u32) -> u32 {
        self.inv[e as usize]
    }

    pub fn length_of(&self, e: u32) -> u32 {
        self.length[e as usize]
    }

    pub fn t_length_of(&self, e: u32) -> u32 {
        self.tlen[e as usize]
    }

    pub fn sign_of(&self, e: u32) -> i8 {
        if self.length[e as usize].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn word_of(&self, e: u32) -> &GenWord {
        &self.word[e as usize]
    }

    pub fn bruhat_leq_idx(&self, x: u32, y: u32) -> bool {
        self.bruhat[y as usize][x as usize / 64] >> (x % 64) & 1 == 1
    }

    /// Indices of all elements of the standard parabolic subgroup generated
    /// by `gens`, in the canonical (length, window) order.
    pub fn parabolic_elements(&self, gens: &[Gen]) -> Vec<u32> {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut queue = vec![0u32];
        while let Some(e) = queue.pop() {
            for &g in gens {
                let f = self.right_mul(e, g);
                if !seen[f as usize] {
                    seen[f as usize] = true;
                    queue.push(f);
                }
            }
        }
        (0..self.len() as u32)
            .filter(|&e| seen[e as usize])
            .collect()
    }
}
