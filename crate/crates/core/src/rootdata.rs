//! Root systems and η-symmetric Chevalley bases for the simple Lie algebras.
//!
//! Roots are stored as integer coordinate vectors on the simple-root basis,
//! with Bourbaki node numbering and the bilinear form normalized so short
//! roots have squared length 2 (so the symmetrizers `d_i = (α_i,α_i)/2` lie in
//! `{1,2,3}`).  Structure constant signs come from Carter's extraspecial-pair
//! scheme; the root vectors are then rescaled as `x_α^± = √(d_α)·e_α^±`, which
//! makes the constants η satisfy
//!
//! ```text
//! η_{α,β} = -η_{β,α} = η_{-β,-α} = η_{-α,α+β}
//! ```
//!
//! and keeps the pairing `(x_α^+, x_α^-) = 1` exact.  Everything is validated
//! post-construction: Jacobi on all basis triples, the four η-equalities, the
//! invariance of the bilinear form, and the Chevalley involution ω being an
//! automorphism.

use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

/// A simple type such as `B3` or `G2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LieType {
    pub family: char,
    pub rank: usize,
}

#[derive(thiserror::Error, Debug)]
pub enum RootDataError {
    #[error("cannot parse Lie type {0:?}: expected e.g. A2, B3, G2")]
    Parse(String),
    #[error("invalid rank {rank} for family {family}")]
    Rank { family: char, rank: usize },
}

impl LieType {
    pub fn new(family: char, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(RootDataError::Rank { family, rank })
        }
    }
}

impl std::str::FromStr for LieType {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| RootDataError::Parse(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::Parse(s.to_string()))?;
        LieType::new(family, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

pub type Coords = Vec<i64>;

/// Positive roots, Cartan data and the integral bilinear form.
pub struct RootSystem {
    pub lt: LieType,
    pub rank: usize,
    /// Cartan matrix c_{ij} = (α_i, α_j)/d_i.
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizers d_i with short roots at 1.
    pub d: Vec<i64>,
    /// Gram matrix (α_i, α_j) = d_i c_{ij}.
    pub gram: Vec<Vec<i64>>,
    /// Positive roots on the simple-root basis, sorted by (height, lex).
    pub positive: Vec<Coords>,
    index: HashMap<Coords, usize>,
}

fn dynkin_edges(lt: LieType) -> Vec<(usize, usize)> {
    let n = lt.rank;
    match lt.family {
        'A' | 'B' | 'C' | 'F' | 'G' => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        'D' => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        'E' => {
            // Bourbaki: branch node 2 hangs off node 4 of the chain 1-3-4-5-6(...).
            let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if n >= 7 {
                e.push((5, 6));
            }
            if n >= 8 {
                e.push((6, 7));
            }
            e
        }
        _ => unreachable!(),
    }
}

fn symmetrizers(lt: LieType) -> Vec<i64> {
    let n = lt.rank;
    match lt.family {
        'A' | 'D' | 'E' => vec![1; n],
        'B' => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        'C' => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        'F' => vec![2, 2, 1, 1],
        'G' => vec![1, 3],
        _ => unreachable!(),
    }
}

impl RootSystem {
    pub fn build(lt: LieType) -> Rc<Self> {
        let n = lt.rank;
        let d = symmetrizers(lt);
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = 2 * d[i];
        }
        for (i, j) in dynkin_edges(lt) {
            let v = -d[i].max(d[j]);
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                assert_eq!(gram[i][j] % d[i], 0);
                cartan[i][j] = gram[i][j] / d[i];
            }
        }

        // Close the simple roots under root strings, height by height.
        let mut roots: Vec<Coords> = Vec::new();
        let mut seen: HashMap<Coords, usize> = HashMap::new();
        for i in 0..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            seen.insert(c.clone(), 0);
            roots.push(c);
        }
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    // ⟨β, α_i^∨⟩ = Σ_j β_j c_{ij}
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                    // p = largest k with β - k·α_i still a root.
                    let mut p = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        let neg: Coords = probe.iter().map(|x| -x).collect();
                        if seen.contains_key(&probe) || seen.contains_key(&neg) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !seen.contains_key(&up) {
                            seen.insert(up.clone(), 0);
                            roots.push(up.clone());
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        // Height-major order; ties broken so that α_1 < α_2 < … (descending
        // lex on coordinates puts the lower-numbered simple root first).
        roots.sort_by(|a, b| {
            let (ha, hb) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let index: HashMap<Coords, usize> =
            roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        Rc::new(RootSystem {
            lt,
            rank: n,
            cartan,
            d,
            gram,
            positive: roots,
            index,
        })
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.positive[idx].iter().sum()
    }

    /// Bilinear form on weight-lattice coordinate vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// (α_i, λ) for a coordinate vector λ.
    pub fn inner_simple(&self, i: usize, lam: &[i64]) -> i64 {
        (0..self.rank).map(|j| self.gram[i][j] * lam[j]).sum()
    }

    pub fn pos_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Coords = coords.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    /// Symmetrizer of a positive root: (γ,γ)/2.
    pub fn d_root(&self, idx: usize) -> i64 {
        let g = &self.positive[idx];
        let v = self.inner(g, g);
        debug_assert_eq!(v % 2, 0);
        v / 2
    }

    pub fn simple_index(&self, i: usize) -> usize {
        let mut c = vec![0i64; self.rank];
        c[i] = 1;
        self.index[&c]
    }

    /// Largest k with β - k·μ still a root (μ, β positive roots).
    fn string_p(&self, beta: usize, mu: usize) -> i64 {
        let mut probe = self.positive[beta].clone();
        let m = &self.positive[mu];
        let mut p = 0;
        loop {
            for i in 0..self.rank {
                probe[i] -= m[i];
            }
            if probe.iter().all(|&x| x == 0) || !self.is_root(&probe) {
                return p;
            }
            p += 1;
        }
    }
}

/// A root with a sign: `neg == false` for x^+_{positive[idx]}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SRoot {
    pub idx: usize,
    pub neg: bool,
}

impl SRoot {
    pub fn pos(idx: usize) -> Self {
        SRoot { idx, neg: false }
    }
    pub fn neg(idx: usize) -> Self {
        SRoot { idx, neg: true }
    }
    pub fn opposite(self) -> Self {
        SRoot {
            idx: self.idx,
            neg: !self.neg,
        }
    }
}

/// Basis element of g: root vectors and the Cartan generators ξ_i = [x_i^+, x_i^-].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GElem {
    Neg(usize),
    Cart(usize),
    Pos(usize),
}

/// A Lie-algebra element as a sparse combination of basis elements.
pub type GVec = BTreeMap<GElem, Scalar>;

pub fn gvec_add(into: &mut GVec, term: GElem, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    let slot = into.entry(term).or_insert_with(Scalar::zero);
    *slot += &coeff;
    if slot.is_zero() {
        into.remove(&term);
    }
}

pub fn gvec_scale(x: &GVec, k: &Scalar) -> GVec {
    let mut out = GVec::new();
    for (g, c) in x {
        gvec_add(&mut out, *g, c * k);
    }
    out
}

pub fn gvec_sum(xs: &[GVec]) -> GVec {
    let mut out = GVec::new();
    for x in xs {
        for (g, c) in x {
            gvec_add(&mut out, *g, c.clone());
        }
    }
    out
}

/// Chevalley basis with η-symmetric rescaling and the invariant form.
pub struct ChevalleyData {
    pub rs: Rc<RootSystem>,
    /// Integer Chevalley constants on pairs of positive roots whose sum is a
    /// positive root, both orders.
    pos_n: HashMap<(usize, usize), i64>,
}

impl ChevalleyData {
    pub fn build(rs: Rc<RootSystem>) -> Rc<Self> {
        let mut cd = ChevalleyData {
            rs: rs.clone(),
            pos_n: HashMap::new(),
        };
        let np = rs.num_positive();
        // Process sums in increasing height; `positive` is height-sorted.
        for gamma in 0..np {
            if rs.height(gamma) < 2 {
                continue;
            }
            let gc = rs.positive[gamma].clone();
            let mut special: Vec<(usize, usize)> = Vec::new();
            for xi in 0..np {
                let diff: Coords = (0..rs.rank).map(|k| gc[k] - rs.positive[xi][k]).collect();
                if let Some(eta) = rs.pos_index(&diff) {
                    if xi < eta {
                        special.push((xi, eta));
                    }
                }
            }
            assert!(!special.is_empty(), "non-simple root without special pair");
            let (a, b) = special[0];
            let p = rs.string_p(b, a);
            cd.pos_n.insert((a, b), p + 1);
            cd.pos_n.insert((b, a), -(p + 1));
            let n_ab = p + 1;
            for &(xi, eta) in &special[1..] {
                // Jacobi-derived relation among constants of the four roots
                // (ξ, η, -α, -β) with ξ+η = α+β = γ.
                let mut t = 0i64;
                let ema: Coords = (0..rs.rank)
                    .map(|k| rs.positive[eta][k] - rs.positive[a][k])
                    .collect();
                if rs.is_root(&ema) {
                    let n1 = cd.nconst(SRoot::pos(eta), SRoot::neg(a));
                    let n2 = cd.nconst_coords(&ema, &SRootCoords::neg(&rs.positive[b]));
                    t += n1 * n2;
                }
                let emb: Coords = (0..rs.rank)
                    .map(|k| rs.positive[eta][k] - rs.positive[b][k])
                    .collect();
                if rs.is_root(&emb) {
                    let n1 = cd.nconst(SRoot::pos(eta), SRoot::neg(b));
                    let n2 = cd.nconst_coords(&SRootCoords::neg(&rs.positive[a]).coords, &SRootCoords::plain(&emb));
                    t += n1 * n2;
                }
                let d_gamma = rs.d_root(gamma);
                let d_xi = rs.d_root(xi);
                let num = -d_gamma * t;
                let den = d_xi * n_ab;
                assert_eq!(num % den, 0, "non-integral structure constant");
                let val = num / den;
                let pv = rs.string_p(eta, xi);
                assert_eq!(val.abs(), pv + 1, "structure constant magnitude mismatch");
                cd.pos_n.insert((xi, eta), val);
                cd.pos_n.insert((eta, xi), -val);
            }
        }
        Rc::new(cd)
    }

    /// Coordinates of a signed root.
    fn coords(&self, s: SRoot) -> Coords {
        let base = &self.rs.positive[s.idx];
        if s.neg {
            base.iter().map(|x| -x).collect()
        } else {
            base.clone()
        }
    }

    fn sroot_of(&self, coords: &[i64]) -> Option<SRoot> {
        if let Some(i) = self.rs.pos_index(coords) {
            return Some(SRoot::pos(i));
        }
        let neg: Coords = coords.iter().map(|x| -x).collect();
        self.rs.pos_index(&neg).map(SRoot::neg)
    }

    /// Chevalley constant N_{μ,ν} for arbitrary signed roots with μ+ν a root.
    pub fn nconst(&self, a: SRoot, b: SRoot) -> i64 {
        match (a.neg, b.neg) {
            (false, false) => self.pos_n[&(a.idx, b.idx)],
            (true, true) => -self.pos_n[&(a.idx, b.idx)],
            (false, true) => {
                let mu = a.idx;
                let nu = b.idx;
                let sc: Coords = (0..self.rs.rank)
                    .map(|k| self.rs.positive[mu][k] - self.rs.positive[nu][k])
                    .collect();
                let s = self.sroot_of(&sc).expect("nconst: sum is not a root");
                if !s.neg {
                    // (3) with (μ, -ν, -σ): N = -(d_σ/d_μ)·N⁺(ν, σ)
                    let num = -self.rs.d_root(s.idx) * self.pos_n[&(nu, s.idx)];
                    let den = self.rs.d_root(mu);
                    assert_eq!(num % den, 0);
                    num / den
                } else {
                    // (3) with (μ, -ν, τ), τ = ν-μ: N = (d_τ/d_ν)·N⁺(τ, μ)
                    let num = self.rs.d_root(s.idx) * self.pos_n[&(s.idx, mu)];
                    let den = self.rs.d_root(nu);
                    assert_eq!(num % den, 0);
                    num / den
                }
            }
            (true, false) => -self.nconst(b, a),
        }
    }

    fn nconst_coords(&self, a: &[i64], b: &SRootCoords) -> i64 {
        let sa = self.sroot_of(a).expect("not a root");
        let sb = self.sroot_of(&b.coords).expect("not a root");
        self.nconst(sa, sb)
    }

    /// η-constant of the rescaled basis: [x_μ, x_ν] = η̂_{μ,ν}·x_{μ+ν}.
    pub fn eta(&self, a: SRoot, b: SRoot) -> Scalar {
        let sum: Coords = {
            let ca = self.coords(a);
            let cb = self.coords(b);
            (0..self.rs.rank).map(|k| ca[k] + cb[k]).collect()
        };
        let s = self.sroot_of(&sum).expect("eta: sum must be a root");
        let n = self.nconst(a, b);
        let da = self.rs.d_root(a.idx) as u64;
        let db = self.rs.d_root(b.idx) as u64;
        let ds = self.rs.d_root(s.idx) as u64;
        Scalar::sqrt_ratio(da * db, ds) * Scalar::from_int(n)
    }

    fn root_vec(&self, s: SRoot) -> GElem {
        if s.neg {
            GElem::Neg(s.idx)
        } else {
            GElem::Pos(s.idx)
        }
    }

    /// ξ_α = Σ_i k_i ξ_i for α = Σ_i k_i α_i; satisfies [x_α^+, x_α^-] = ξ_α.
    pub fn xi_of_root(&self, idx: usize) -> GVec {
        let mut out = GVec::new();
        for (i, &k) in self.rs.positive[idx].iter().enumerate() {
            gvec_add(&mut out, GElem::Cart(i), Scalar::from_int(k));
        }
        out
    }

    pub fn bracket_basis(&self, x: GElem, y: GElem) -> GVec {
        let mut out = GVec::new();
        match (x, y) {
            (GElem::Cart(_), GElem::Cart(_)) => {}
            (GElem::Cart(i), g) => {
                let (s, sign) = match g {
                    GElem::Pos(a) => (SRoot::pos(a), 1),
                    GElem::Neg(a) => (SRoot::neg(a), -1),
                    _ => unreachable!(),
                };
                let v = sign * self.rs.inner_simple(i, &self.rs.positive[s.idx]);
                gvec_add(&mut out, g, Scalar::from_int(v));
            }
            (g, GElem::Cart(i)) => {
                let inner = self.bracket_basis(GElem::Cart(i), g);
                for (h, c) in inner {
                    gvec_add(&mut out, h, -c);
                }
            }
            (gx, gy) => {
                let sa = match gx {
                    GElem::Pos(a) => SRoot::pos(a),
                    GElem::Neg(a) => SRoot::neg(a),
                    _ => unreachable!(),
                };
                let sb = match gy {
                    GElem::Pos(a) => SRoot::pos(a),
                    GElem::Neg(a) => SRoot::neg(a),
                    _ => unreachable!(),
                };
                let ca = self.coords(sa);
                let cb = self.coords(sb);
                let sum: Coords = (0..self.rs.rank).map(|k| ca[k] + cb[k]).collect();
                if sum.iter().all(|&v| v == 0) {
                    // [x_α^+, x_α^-] = ξ_α.
                    let sign = if sa.neg { -1 } else { 1 };
                    for (g, c) in self.xi_of_root(sa.idx) {
                        gvec_add(&mut out, g, c * Scalar::from_int(sign));
                    }
                } else if let Some(s) = self.sroot_of(&sum) {
                    gvec_add(&mut out, self.root_vec(s), self.eta(sa, sb));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &GVec, y: &GVec) -> GVec {
        let mut out = GVec::new();
        for (gx, cx) in x {
            for (gy, cy) in y {
                for (g, c) in self.bracket_basis(*gx, *gy) {
                    gvec_add(&mut out, g, c * (cx * cy));
                }
            }
        }
        out
    }

    /// Chevalley involution ω: ξ_i ↦ -ξ_i, x_α^± ↦ -x_α^∓.
    pub fn omega(&self, x: &GVec) -> GVec {
        let mut out = GVec::new();
        for (g, c) in x {
            let h = match *g {
                GElem::Pos(a) => GElem::Neg(a),
                GElem::Neg(a) => GElem::Pos(a),
                GElem::Cart(i) => GElem::Cart(i),
            };
            gvec_add(&mut out, h, -c);
        }
        out
    }

    /// Invariant form with (x_α^+, x_α^-) = 1, (ξ_i, ξ_j) = (α_i, α_j).
    pub fn form_basis(&self, x: GElem, y: GElem) -> Scalar {
        match (x, y) {
            (GElem::Pos(a), GElem::Neg(b)) | (GElem::Neg(a), GElem::Pos(b)) if a == b => {
                Scalar::one()
            }
            (GElem::Cart(i), GElem::Cart(j)) => Scalar::from_int(self.rs.gram[i][j]),
            _ => Scalar::zero(),
        }
    }

    pub fn form(&self, x: &GVec, y: &GVec) -> Scalar {
        let mut s = Scalar::zero();
        for (gx, cx) in x {
            for (gy, cy) in y {
                s += &(self.form_basis(*gx, *gy) * (cx * cy));
            }
        }
        s
    }

    pub fn basis(&self) -> Vec<GElem> {
        let mut b = Vec::new();
        for a in 0..self.rs.num_positive() {
            b.push(GElem::Neg(a));
        }
        for i in 0..self.rs.rank {
            b.push(GElem::Cart(i));
        }
        for a in 0..self.rs.num_positive() {
            b.push(GElem::Pos(a));
        }
        b
    }

    /// b_α = x_α^+ - x_α^- (fixed space of ω).
    pub fn b_alpha(&self, a: usize) -> GVec {
        let mut v = GVec::new();
        gvec_add(&mut v, GElem::Pos(a), Scalar::one());
        gvec_add(&mut v, GElem::Neg(a), -Scalar::one());
        v
    }

    /// y_α = x_α^+ + x_α^- ((-1)-eigenspace of ω, together with the Cartan).
    pub fn y_alpha(&self, a: usize) -> GVec {
        let mut v = GVec::new();
        gvec_add(&mut v, GElem::Pos(a), Scalar::one());
        gvec_add(&mut v, GElem::Neg(a), Scalar::one());
        v
    }

    /// Weight of a basis element on the root lattice.
    pub fn weight(&self, g: GElem) -> Coords {
        match g {
            GElem::Pos(a) => self.rs.positive[a].clone(),
            GElem::Neg(a) => self.rs.positive[a].iter().map(|x| -x).collect(),
            GElem::Cart(_) => vec![0; self.rs.rank],
        }
    }

    // ---- exhaustive structural validations -------------------------------

    /// Jacobi identity over all basis triples; returns the number of failures.
    pub fn check_jacobi(&self) -> usize {
        let basis = self.basis();
        let mut bad = 0;
        let single = |g: GElem| {
            let mut v = GVec::new();
            gvec_add(&mut v, g, Scalar::one());
            v
        };
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let bij = self.bracket_basis(basis[i], basis[j]);
                for k in (j + 1)..basis.len() {
                    let x = single(basis[i]);
                    let y = single(basis[j]);
                    let z = single(basis[k]);
                    let t1 = self.bracket(&bij, &z);
                    let t2 = self.bracket(&self.bracket(&y, &z), &x);
                    let t3 = self.bracket(&self.bracket(&z, &x), &y);
                    let total = gvec_sum(&[t1, t2, t3]);
                    if !total.is_empty() {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// The four η-equalities on every applicable ordered pair of positive
    /// roots; returns the number of failures.
    pub fn check_eta_symmetries(&self) -> usize {
        let np = self.rs.num_positive();
        let mut bad = 0;
        for a in 0..np {
            for b in 0..np {
                if a == b {
                    continue;
                }
                let sum: Coords = (0..self.rs.rank)
                    .map(|k| self.rs.positive[a][k] + self.rs.positive[b][k])
                    .collect();
                if self.rs.pos_index(&sum).is_none() {
                    continue;
                }
                let e = self.eta(SRoot::pos(a), SRoot::pos(b));
                let e_swap = self.eta(SRoot::pos(b), SRoot::pos(a));
                let e_negs = self.eta(SRoot::neg(b), SRoot::neg(a));
                let sum_idx = self.rs.pos_index(&sum).unwrap();
                let e_shift = self.eta(SRoot::neg(a), SRoot::pos(sum_idx));
                if e != -e_swap.clone() || e != e_negs || e != e_shift {
                    bad += 1;
                }
            }
        }
        bad
    }

    /// Invariance ([x,y],z) = (x,[y,z]) over all basis triples.
    pub fn check_form_invariance(&self) -> usize {
        let basis = self.basis();
        let single = |g: GElem| {
            let mut v = GVec::new();
            gvec_add(&mut v, g, Scalar::one());
            v
        };
        let mut bad = 0;
        for &x in &basis {
            for &y in &basis {
                let xy = self.bracket_basis(x, y);
                for &z in &basis {
                    let lhs = self.form(&xy, &single(z));
                    let rhs = self.form(&single(x), &self.bracket_basis(y, z));
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// ω is an involutive automorphism.
    pub fn check_omega(&self) -> usize {
        let basis = self.basis();
        let single = |g: GElem| {
            let mut v = GVec::new();
            gvec_add(&mut v, g, Scalar::one());
            v
        };
        let mut bad = 0;
        for &x in &basis {
            let tw = self.omega(&self.omega(&single(x)));
            if tw != single(x) {
                bad += 1;
            }
            for &y in &basis {
                let lhs = self.omega(&self.bracket_basis(x, y));
                let rhs = self.bracket(&self.omega(&single(x)), &self.omega(&single(y)));
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        bad
    }
}

/// Internal helper: coordinates with optional negation.
struct SRootCoords {
    coords: Coords,
}

impl SRootCoords {
    fn plain(c: &[i64]) -> Self {
        SRootCoords { coords: c.to_vec() }
    }
    fn neg(c: &[i64]) -> Self {
        SRootCoords {
            coords: c.iter().map(|x| -x).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn positive_root_counts() {
        // |Φ+| per type: n(n+1)/2 for A_n, n² for B_n/C_n, n(n-1) for D_n,
        // 6 for G2, 24 for F4, 36 for E6.
        for (t, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C2", 4),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
        ] {
            let rs = RootSystem::build(lt(t));
            assert_eq!(rs.num_positive(), count, "{}", t);
        }
    }

    #[test]
    fn b2_gram_matrix() {
        let rs = RootSystem::build(lt("B2"));
        assert_eq!(rs.d, vec![2, 1]);
        assert_eq!(rs.gram[0][1], -2);
        assert_eq!(rs.gram[0][0], 4);
        assert_eq!(rs.gram[1][1], 2);
    }

    #[test]
    fn g2_gram_matrix() {
        let rs = RootSystem::build(lt("G2"));
        assert_eq!(rs.d, vec![1, 3]);
        assert_eq!(rs.gram[0][1], -3);
        assert_eq!(rs.gram[1][1], 6);
    }

    #[test]
    fn a2_eta_simple_pair_is_one() {
        let cd = ChevalleyData::build(RootSystem::build(lt("A2")));
        let i0 = cd.rs.simple_index(0);
        let i1 = cd.rs.simple_index(1);
        assert_eq!(cd.eta(SRoot::pos(i0), SRoot::pos(i1)), Scalar::one());
    }

    /// Independent cross-check of the bracket table: the adjoint action must
    /// be a Lie homomorphism, verified through dense matrix arithmetic.
    #[test]
    fn a2_b2_adjoint_oracle() {
        for t in ["A2", "B2"] {
            let cd = ChevalleyData::build(RootSystem::build(lt(t)));
            let basis = cd.basis();
            let dim = basis.len();
            let pos_of: HashMap<GElem, usize> =
                basis.iter().enumerate().map(|(k, g)| (*g, k)).collect();
            let ad = |g: GElem| -> Vec<Vec<Scalar>> {
                let mut m = vec![vec![Scalar::zero(); dim]; dim];
                for (col, h) in basis.iter().enumerate() {
                    for (out, c) in cd.bracket_basis(g, *h) {
                        m[pos_of[&out]][col] = c;
                    }
                }
                m
            };
            let mats: Vec<_> = basis.iter().map(|g| ad(*g)).collect();
            for (i, x) in basis.iter().enumerate() {
                for (j, y) in basis.iter().enumerate() {
                    // [ad x, ad y] == ad [x,y]
                    let mut expect = vec![vec![Scalar::zero(); dim]; dim];
                    for (g, c) in cd.bracket_basis(*x, *y) {
                        let m = ad(g);
                        for r in 0..dim {
                            for s in 0..dim {
                                expect[r][s] += &(m[r][s].clone() * c.clone());
                            }
                        }
                    }
                    for r in 0..dim {
                        for s in 0..dim {
                            let mut v = Scalar::zero();
                            for k in 0..dim {
                                v += &(mats[i][r][k].clone() * mats[j][k][s].clone());
                                v -= &(mats[j][r][k].clone() * mats[i][k][s].clone());
                            }
                            assert_eq!(v, expect[r][s], "{t}: ad mismatch");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn b2_full_validation() {
        let cd = ChevalleyData::build(RootSystem::build(lt("B2")));
        assert_eq!(cd.check_jacobi(), 0);
        assert_eq!(cd.check_eta_symmetries(), 0);
        assert_eq!(cd.check_form_invariance(), 0);
        assert_eq!(cd.check_omega(), 0);
    }

    #[test]
    fn g2_full_validation() {
        let cd = ChevalleyData::build(RootSystem::build(lt("G2")));
        assert_eq!(cd.check_jacobi(), 0);
        assert_eq!(cd.check_eta_symmetries(), 0);
        assert_eq!(cd.check_form_invariance(), 0);
        assert_eq!(cd.check_omega(), 0);
    }

    #[test]
    fn xi_bracket_matches_pairing() {
        let cd = ChevalleyData::build(RootSystem::build(lt("B3")));
        for i in 0..cd.rs.rank {
            for a in 0..cd.rs.num_positive() {
                let out = cd.bracket_basis(GElem::Cart(i), GElem::Pos(a));
                let want = cd.rs.inner_simple(i, &cd.rs.positive[a]);
                if want == 0 {
                    assert!(out.is_empty());
                } else {
                    assert_eq!(out[&GElem::Pos(a)], Scalar::from_int(want));
                }
            }
        }
    }
}
