//! A low-degree fragment of the Yangian in Drinfeld presentation, and the
//! check suites for the coideal embedding of the twisted algebra.
//!
//! The fragment extends `U(g)` by the degree-one generators `ξ_{i,1}` and
//! `x_{i,1}^±` treated as symbols that may appear at most once, rightmost in a
//! monomial. Commutators of a symbol with a degree-zero generator are given by
//! the closed defining relations; mixed-index products `[x_{i,1}^±, x_{j,0}^±]`
//! with `i ≠ j` have no closed normal form and are kept opaque, resolved only
//! through the exchange identity
//! `P^±_{ij} + P^±_{ji} = ±½(α_i,α_j){x_i^±, x_j^±}`.
//! Any operation that would leave this fragment (two symbols meeting, an
//! opaque factor multiplied by a non-scalar) is a hard panic, so every passing
//! check is a proof that the computation stayed inside the fragment.

use crate::current::CurrentAlgebra;
use crate::pbw::{tensor_elem, tensor_square, Algebra, PbwElement, Word};
use crate::report::{run_item, CheckItem, Mutation};
use crate::rootdata::{ChevalleyData, GElem};
use crate::scalar::Scalar;
use num::BigRational;
use std::collections::BTreeMap;
use std::rc::Rc;

/// Degree-one generator symbols.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Sym {
    Xi1(usize),
    Xp1(usize),
    Xm1(usize),
}

/// Opaque mixed commutator `P^±_{ij} = [x_{i,1}^±, x_{j,0}^±]`, stored with
/// `i < j` after applying the exchange identity.
type OpaqueKey = (bool, usize, usize);

#[derive(Clone)]
pub struct Fragment {
    pub classical: PbwElement,
    /// word · symbol, symbol rightmost.
    pub symbol: BTreeMap<(Word, Sym), Scalar>,
    pub opaque: BTreeMap<OpaqueKey, Scalar>,
}

impl Fragment {
    pub fn zero() -> Self {
        Fragment {
            classical: PbwElement::zero(),
            symbol: BTreeMap::new(),
            opaque: BTreeMap::new(),
        }
    }

    pub fn from_classical(e: PbwElement) -> Self {
        let mut f = Self::zero();
        f.classical = e;
        f
    }

    pub fn symbol_term(s: Sym) -> Self {
        let mut f = Self::zero();
        f.symbol.insert((Word::new(), s), Scalar::one());
        f
    }

    pub fn is_zero(&self) -> bool {
        self.classical.is_zero()
            && self.symbol.values().all(|c| c.is_zero())
            && self.opaque.values().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Fragment) -> Fragment {
        let mut out = self.clone();
        out.classical = out.classical.add(&other.classical);
        for (k, c) in &other.symbol {
            let e = out.symbol.entry(k.clone()).or_insert_with(Scalar::zero);
            *e = e.clone() + c.clone();
        }
        for (k, c) in &other.opaque {
            let e = out.opaque.entry(*k).or_insert_with(Scalar::zero);
            *e = e.clone() + c.clone();
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Fragment {
        Fragment {
            classical: self.classical.scale(k),
            symbol: self
                .symbol
                .iter()
                .map(|(key, c)| (key.clone(), c.clone() * k.clone()))
                .collect(),
            opaque: self
                .opaque
                .iter()
                .map(|(key, c)| (*key, c.clone() * k.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Fragment) -> Fragment {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// If the element is a scalar multiple of the identity, return it.
    fn as_scalar(&self) -> Option<Scalar> {
        if !self.symbol.values().all(|c| c.is_zero()) || !self.opaque.values().all(|c| c.is_zero())
        {
            return None;
        }
        let mut k = Scalar::zero();
        for (w, c) in &self.classical.terms {
            if w.is_empty() {
                k = c.clone();
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(k)
    }
}

/// Computation engine for the fragment over a fixed simple Lie algebra.
pub struct FragEngine {
    pub ca: CurrentAlgebra,
    pub cd: Rc<ChevalleyData>,
}

impl FragEngine {
    pub fn new(cd: Rc<ChevalleyData>) -> Self {
        FragEngine {
            ca: CurrentAlgebra::new(cd.clone(), 0),
            cd,
        }
    }

    fn alg(&self) -> &Algebra {
        &self.ca.alg
    }

    pub fn xp(&self, a: usize) -> PbwElement {
        self.ca.gen(GElem::Pos(a), 0)
    }
    pub fn xm(&self, a: usize) -> PbwElement {
        self.ca.gen(GElem::Neg(a), 0)
    }
    pub fn xi(&self, i: usize) -> PbwElement {
        self.ca.gen(GElem::Cart(i), 0)
    }
    /// ξ_α = [x_α^+, x_α^-] for an arbitrary positive root.
    pub fn xi_root(&self, a: usize) -> PbwElement {
        self.ca.from_gvec(&self.cd.xi_of_root(a), 0)
    }
    fn simple(&self, i: usize) -> usize {
        self.cd.rs.simple_index(i)
    }
    fn pairing(&self, i: usize, j: usize) -> i64 {
        self.cd.rs.gram[i][j]
    }
    /// (α, α_i) for a positive root α with index `a`.
    fn root_pairing(&self, a: usize, i: usize) -> i64 {
        let coords = &self.cd.rs.positive[a];
        (0..self.cd.rs.rank).map(|k| coords[k] * self.pairing(k, i)).sum()
    }
    /// The simple-root index of a generator, if it is a simple root vector.
    fn as_simple(&self, a: usize) -> Option<usize> {
        let coords = &self.cd.rs.positive[a];
        if coords.iter().sum::<i64>() == 1 {
            coords.iter().position(|&k| k == 1)
        } else {
            None
        }
    }

    fn push_opaque(&self, out: &mut Fragment, plus: bool, i: usize, j: usize, c: Scalar) {
        if i < j {
            let e = out.opaque.entry((plus, i, j)).or_insert_with(Scalar::zero);
            *e = e.clone() + c;
        } else {
            // P^±_{ij} = −P^±_{ji} ± ½(α_i,α_j){x_i^±, x_j^±}
            let e = out.opaque.entry((plus, j, i)).or_insert_with(Scalar::zero);
            *e = e.clone() - c.clone();
            let (xi, xj) = if plus {
                (self.xp(self.simple(i)), self.xp(self.simple(j)))
            } else {
                (self.xm(self.simple(i)), self.xm(self.simple(j)))
            };
            let sign = if plus { 1 } else { -1 };
            let k = c * Scalar::from_ratio(sign * self.pairing(i, j), 2);
            out.classical = out
                .classical
                .add(&self.alg().anticommutator(&xi, &xj).scale(&k));
        }
    }

    /// `[S, g]` for a degree-zero generator `g` (by table index in `ca`).
    fn sym_bracket(&self, s: Sym, gi: u32) -> Fragment {
        let (g, _z) = self.ca.info.elems[gi as usize];
        let mut out = Fragment::zero();
        match (s, g) {
            (Sym::Xi1(_), GElem::Cart(_)) => {}
            (Sym::Xi1(i), GElem::Pos(a)) => {
                let j = self.as_simple(a).expect("fragment overflow: ξ_{i,1} met a non-simple root vector");
                let k = Scalar::from_int(self.pairing(i, j));
                out = out.add(&Fragment::symbol_term(Sym::Xp1(j)).scale(&k));
                let ac = self.alg().anticommutator(&self.xi(i), &self.xp(self.simple(j)));
                out.classical = out.classical.add(&ac.scale(&(k.clone() * Scalar::half())));
            }
            (Sym::Xi1(i), GElem::Neg(a)) => {
                let j = self.as_simple(a).expect("fragment overflow: ξ_{i,1} met a non-simple root vector");
                let k = Scalar::from_int(-self.pairing(i, j));
                out = out.add(&Fragment::symbol_term(Sym::Xm1(j)).scale(&k));
                let ac = self.alg().anticommutator(&self.xi(i), &self.xm(self.simple(j)));
                out.classical = out.classical.add(&ac.scale(&(k.clone() * Scalar::half())));
            }
            (Sym::Xp1(i), GElem::Cart(j)) => {
                out = out.add(
                    &Fragment::symbol_term(Sym::Xp1(i)).scale(&Scalar::from_int(-self.pairing(j, i))),
                );
            }
            (Sym::Xm1(i), GElem::Cart(j)) => {
                out = out.add(
                    &Fragment::symbol_term(Sym::Xm1(i)).scale(&Scalar::from_int(self.pairing(j, i))),
                );
            }
            (Sym::Xp1(i), GElem::Neg(a)) => {
                let j = self.as_simple(a).expect("fragment overflow: x_{i,1}^+ met a non-simple root vector");
                if i == j {
                    out = out.add(&Fragment::symbol_term(Sym::Xi1(i)));
                }
            }
            (Sym::Xm1(i), GElem::Pos(a)) => {
                let j = self.as_simple(a).expect("fragment overflow: x_{i,1}^- met a non-simple root vector");
                if i == j {
                    out = out.add(&Fragment::symbol_term(Sym::Xi1(i)).scale(&-Scalar::one()));
                }
            }
            (Sym::Xp1(i), GElem::Pos(a)) => {
                let j = self.as_simple(a).expect("fragment overflow: x_{i,1}^+ met a non-simple root vector");
                if i == j {
                    let sq = self.alg().mul(&self.xp(a), &self.xp(a));
                    out.classical = sq.scale(&Scalar::from_int(self.cd.rs.d[i]));
                } else {
                    self.push_opaque(&mut out, true, i, j, Scalar::one());
                }
            }
            (Sym::Xm1(i), GElem::Neg(a)) => {
                let j = self.as_simple(a).expect("fragment overflow: x_{i,1}^- met a non-simple root vector");
                if i == j {
                    let sq = self.alg().mul(&self.xm(a), &self.xm(a));
                    out.classical = sq.scale(&Scalar::from_int(-self.cd.rs.d[i]));
                } else {
                    self.push_opaque(&mut out, false, i, j, Scalar::one());
                }
            }
        }
        out
    }

    /// `S · v` for a normal-ordered degree-zero word `v`.
    fn sym_times_word(&self, s: Sym, v: &[u32]) -> Fragment {
        if v.is_empty() {
            return Fragment::symbol_term(s);
        }
        let g = v[0];
        let rest = &v[1..];
        // S·g·rest = [S,g]·rest + g·(S·rest)
        let rest_elem = Fragment::from_classical(
            self.alg()
                .product(&[&PbwElement::monomial(rest.iter().copied().collect(), Scalar::one())]),
        );
        let part1 = self.mul(&self.sym_bracket(s, g), &rest_elem);
        let part2 = self.mul(
            &Fragment::from_classical(PbwElement::gen(g)),
            &self.sym_times_word(s, rest),
        );
        part1.add(&part2)
    }

    pub fn mul(&self, a: &Fragment, b: &Fragment) -> Fragment {
        let mut out = Fragment::zero();
        // classical × classical
        out.classical = self.alg().mul(&a.classical, &b.classical);
        // classical × symbol: straighten the words, keep the symbol rightmost
        for ((w, s), cb) in &b.symbol {
            if cb.is_zero() {
                continue;
            }
            let left =
                self.alg().mul(&a.classical, &PbwElement::monomial(w.clone(), Scalar::one()));
            for (u, cu) in &left.terms {
                let e = out.symbol.entry((u.clone(), *s)).or_insert_with(Scalar::zero);
                *e = e.clone() + cu * cb;
            }
        }
        // symbol × classical: move the symbol through each word on the right
        for ((w, s), ca) in &a.symbol {
            if ca.is_zero() {
                continue;
            }
            for (v, cv) in &b.classical.terms {
                let moved = self.sym_times_word(*s, v);
                let prefixed = self.mul(
                    &Fragment::from_classical(PbwElement::monomial(w.clone(), Scalar::one())),
                    &moved,
                );
                out = out.add(&prefixed.scale(&(ca.clone() * cv.clone())));
            }
            for ((_, _), cb) in &b.symbol {
                assert!(cb.is_zero(), "fragment overflow: two degree-one symbols multiplied");
            }
            assert!(
                b.opaque.values().all(|c| c.is_zero()),
                "fragment overflow: symbol times opaque"
            );
        }
        // opaque factors survive only scalar multiplication
        if !a.opaque.values().all(|c| c.is_zero()) {
            let k = b
                .as_scalar()
                .expect("fragment overflow: opaque element multiplied by a non-scalar");
            for (key, c) in &a.opaque {
                let e = out.opaque.entry(*key).or_insert_with(Scalar::zero);
                *e = e.clone() + c.clone() * k.clone();
            }
        }
        if !b.opaque.values().all(|c| c.is_zero()) {
            let k = a
                .as_scalar()
                .expect("fragment overflow: opaque element multiplied by a non-scalar");
            for (key, c) in &b.opaque {
                let e = out.opaque.entry(*key).or_insert_with(Scalar::zero);
                *e = e.clone() + c.clone() * k.clone();
            }
        }
        out
    }

    pub fn commutator(&self, a: &Fragment, b: &Fragment) -> Fragment {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn anticommutator(&self, a: &Fragment, b: &Fragment) -> Fragment {
        self.mul(a, b).add(&self.mul(b, a))
    }

    // ---- images of the twisted generators -------------------------------

    pub fn phi_b0(&self, i: usize) -> Fragment {
        let a = self.simple(i);
        Fragment::from_classical(self.xp(a).sub(&self.xm(a)))
    }

    pub fn phi_h1(&self, i: usize, mutation: Option<&Mutation>) -> Fragment {
        let t = Mutation::applies(mutation, "hi1-embedding").unwrap_or_else(Scalar::one);
        let mut f = Fragment::symbol_term(Sym::Xi1(i)).scale(&Scalar::from_int(2));
        let xi = self.xi(i);
        f.classical = f.classical.sub(&self.alg().mul(&xi, &xi));
        f.classical = f.classical.add(&self.sum_xplus_sq(i).scale(&t));
        f
    }

    /// Σ_{α∈Φ+} (α,α_i) (x_α^+)².
    fn sum_xplus_sq(&self, i: usize) -> PbwElement {
        let mut acc = PbwElement::zero();
        for a in 0..self.cd.rs.num_positive() {
            let k = Scalar::from_int(self.root_pairing(a, i));
            acc = acc.add(&self.alg().mul(&self.xp(a), &self.xp(a)).scale(&k));
        }
        acc
    }

    pub fn phi_b1(&self, i: usize) -> Fragment {
        let mut f = Fragment::symbol_term(Sym::Xp1(i)).add(&Fragment::symbol_term(Sym::Xm1(i)));
        let si = self.simple(i);
        let mut cls = PbwElement::zero();
        for a in 0..self.cd.rs.num_positive() {
            let br = self.alg().commutator(&self.xp(si), &self.xp(a));
            cls = cls.add(&self.alg().anticommutator(&br, &self.xp(a)));
        }
        cls = cls.scale(&Scalar::half());
        cls = cls.sub(
            &self
                .alg()
                .anticommutator(&self.xp(si), &self.xi(i))
                .scale(&Scalar::half()),
        );
        f.classical = cls;
        f
    }
}

fn frag_detail(fam: &[(Fragment, usize)]) -> (bool, String) {
    let count: usize = fam.iter().map(|(_, n)| n).sum();
    match fam.iter().find(|(f, _)| !f.is_zero()) {
        None => (true, format!("{count} instances, residual 0")),
        Some((f, _)) => (
            false,
            format!(
                "{count} instances, residual: {} classical terms, {} symbol terms, {} opaque terms",
                f.classical.len(),
                f.symbol.values().filter(|c| !c.is_zero()).count(),
                f.opaque.values().filter(|c| !c.is_zero()).count()
            ),
        ),
    }
}

/// Check the defining relations of the twisted algebra on the images of the
/// generators, together with the enveloping-algebra lemmas used to establish
/// them.
pub fn check_embedding(cd: &Rc<ChevalleyData>, mutation: Option<&Mutation>) -> Vec<CheckItem> {
    let eng = FragEngine::new(cd.clone());
    let n = cd.rs.rank;
    let np = cd.rs.num_positive();
    let mut items = Vec::new();

    items.push(run_item("HBrel", "HBrel", || {
        let mut fam = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = eng.commutator(&eng.phi_h1(i, mutation), &eng.phi_b0(j));
                let rhs = eng.phi_b1(j).scale(&Scalar::from_int(2 * eng.pairing(i, j)));
                fam.push((lhs.sub(&rhs), 1));
            }
        }
        frag_detail(&fam)
    }));

    items.push(run_item("bbi=j", "bbi=j", || {
        let mut fam = Vec::new();
        for i in 0..n {
            let b0 = eng.phi_b0(i);
            let lhs = eng.commutator(&b0, &eng.phi_b1(i));
            let sq = eng.mul(&b0, &b0);
            let rhs = eng
                .phi_h1(i, mutation)
                .sub(&sq.scale(&Scalar::from_ratio(eng.pairing(i, i), 2)));
            fam.push((lhs.sub(&rhs), 1));
        }
        frag_detail(&fam)
    }));

    items.push(run_item("bbinej", "bbinej", || {
        let mut fam = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let lhs = eng
                    .commutator(&eng.phi_b1(i), &eng.phi_b0(j))
                    .sub(&eng.commutator(&eng.phi_b0(i), &eng.phi_b1(j)));
                let rhs = eng
                    .anticommutator(&eng.phi_b0(i), &eng.phi_b0(j))
                    .scale(&Scalar::from_ratio(eng.pairing(i, j), 2));
                fam.push((lhs.sub(&rhs), 1));
            }
        }
        frag_detail(&fam)
    }));

    let alg = eng.alg();

    items.push(run_item("helper1", "helper1", || {
        let mut fam = Vec::new();
        for i in 0..n {
            let si = eng.simple(i);
            let lhs_outer = eng.xp(si).sub(&eng.xm(si));
            let mut sum = PbwElement::zero();
            for a in 0..np {
                let br = alg.commutator(&eng.xp(si), &eng.xp(a));
                sum = sum.add(&alg.anticommutator(&br, &eng.xp(a)));
            }
            let lhs = alg.commutator(&lhs_outer, &sum);
            let mut rhs = PbwElement::zero();
            for a in 0..np {
                if a == si {
                    continue;
                }
                let k = Scalar::from_int(2 * eng.root_pairing(a, i));
                rhs = rhs.add(&alg.mul(&eng.xp(a), &eng.xp(a)).scale(&k));
            }
            fam.push((Fragment::from_classical(lhs.sub(&rhs)), 1));
        }
        frag_detail(&fam)
    }));

    items.push(run_item("helper2", "helper2", || {
        let mut fam = Vec::new();
        let hook = |i: usize, j: usize| -> PbwElement {
            let si = eng.simple(i);
            let sj = eng.simple(j);
            let mut sum = PbwElement::zero();
            for a in 0..np {
                let br = alg.commutator(&eng.xp(sj), &eng.xp(a));
                sum = sum.add(&alg.anticommutator(&br, &eng.xp(a)));
            }
            alg.commutator(&eng.xp(si).sub(&eng.xm(si)), &sum)
        };
        for i in 0..n {
            for j in 0..n {
                if i >= j {
                    continue;
                }
                let si = eng.simple(i);
                let sj = eng.simple(j);
                let lhs = hook(i, j).add(&hook(j, i));
                let mut rhs = PbwElement::zero();
                rhs = rhs.add(&alg.anticommutator(
                    &alg.commutator(&eng.xp(si), &eng.xi(j)),
                    &eng.xp(sj),
                ));
                rhs = rhs.add(&alg.anticommutator(
                    &alg.commutator(&eng.xp(sj), &eng.xi(i)),
                    &eng.xp(si),
                ));
                rhs = rhs.add(&alg.anticommutator(
                    &alg.commutator(&eng.xp(si), &eng.xp(sj)),
                    &eng.xi(j),
                ));
                rhs = rhs.add(&alg.anticommutator(
                    &alg.commutator(&eng.xp(sj), &eng.xp(si)),
                    &eng.xi(i),
                ));
                fam.push((Fragment::from_classical(lhs.sub(&rhs)), 1));
            }
        }
        frag_detail(&fam)
    }));

    items.push(run_item("plusplus-exchange", "+++=+-+", || {
        // x_α^+ [x_α^+, x_j^+] = [x_{α+α_j}^+, x_j^-] x_{α+α_j}^+  and the
        // mirrored product, with the convention x_γ^± = 0 off the root system.
        let mut fam = Vec::new();
        for j in 0..n {
            let sj = eng.simple(j);
            for a in 0..np {
                let mut sum_coords = cd.rs.positive[a].clone();
                sum_coords[j] += 1;
                let (lhs1, lhs2) = {
                    let br = alg.commutator(&eng.xp(a), &eng.xp(sj));
                    (alg.mul(&eng.xp(a), &br), alg.mul(&br, &eng.xp(a)))
                };
                let (rhs1, rhs2) = match cd.rs.pos_index(&sum_coords) {
                    Some(s) => {
                        let br = alg.commutator(&eng.xp(s), &eng.xm(sj));
                        (alg.mul(&br, &eng.xp(s)), alg.mul(&eng.xp(s), &br))
                    }
                    None => (PbwElement::zero(), PbwElement::zero()),
                };
                fam.push((Fragment::from_classical(lhs1.sub(&rhs1)), 1));
                fam.push((Fragment::from_classical(lhs2.sub(&rhs2)), 1));
            }
        }
        frag_detail(&fam)
    }));

    // The three-block double sum over positive roots that closes the
    // commutativity of the images of the level-one Cartan generators.
    let block = |a: usize, b: usize| -> PbwElement {
        let (xa, xb) = (eng.xp(a), eng.xp(b));
        let (ya, yb) = (eng.xm(a), eng.xm(b));
        let mut t = PbwElement::zero();
        // block 1
        let br = alg.commutator(&yb, &xa);
        t = t.add(&alg.product(&[&br, &xb, &xa]));
        t = t.add(&alg.product(&[&xa, &br, &xb]));
        let br = alg.commutator(&xb, &xa);
        t = t.add(&alg.product(&[&yb, &br, &xa]));
        t = t.add(&alg.product(&[&xa, &yb, &br]));
        // block 2 (subtracted)
        let br = alg.commutator(&ya, &xb);
        t = t.sub(&alg.product(&[&br, &xa, &xb]));
        t = t.sub(&alg.product(&[&xb, &br, &xa]));
        let br = alg.commutator(&xa, &xb);
        t = t.sub(&alg.product(&[&ya, &br, &xb]));
        t = t.sub(&alg.product(&[&xb, &ya, &br]));
        // block 3
        t = t.add(&alg.product(&[&xa, &br, &xb]));
        t = t.add(&alg.product(&[&xa, &xb, &br]));
        t = t.add(&alg.product(&[&br, &xb, &xa]));
        t = t.add(&alg.product(&[&xb, &br, &xa]));
        t
    };

    items.push(run_item("hh-cancellation", "helper4", || {
        let mut fam = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i >= j {
                    continue;
                }
                let mut total = PbwElement::zero();
                for a in 0..np {
                    for b in 0..np {
                        let k = Scalar::from_int(
                            eng.root_pairing(a, i) * eng.root_pairing(b, j),
                        );
                        if !k.is_zero() {
                            total = total.add(&block(a, b).scale(&k));
                        }
                    }
                }
                fam.push((Fragment::from_classical(total), 1));
            }
        }
        frag_detail(&fam)
    }));

    items.push(run_item("hh-diagonal", "helper4", || {
        let mut fam = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i >= j {
                    continue;
                }
                let mut diag = PbwElement::zero();
                for a in 0..np {
                    let k =
                        Scalar::from_int(eng.root_pairing(a, i) * eng.root_pairing(a, j));
                    if !k.is_zero() {
                        diag = diag.add(&block(a, a).scale(&k));
                    }
                }
                fam.push((Fragment::from_classical(diag), 1));
            }
        }
        frag_detail(&fam)
    }));

    items.push(run_item("J-identification", "hi1-J", || {
        // 2v_i − ½[ξ_i, C_k] + ½ Σ (α,α_i) b_α²  =  −ξ_i² + Σ (α,α_i)(x_α^+)²
        let mut fam = Vec::new();
        let ck = {
            let mut acc = PbwElement::zero();
            for a in 0..np {
                let b = eng.xp(a).sub(&eng.xm(a));
                acc = acc.add(&alg.mul(&b, &b));
            }
            acc.scale(&-Scalar::half())
        };
        for i in 0..n {
            let mut v = PbwElement::zero();
            for a in 0..np {
                let k = Scalar::from_ratio(eng.root_pairing(a, i), 4);
                v = v.add(&alg.anticommutator(&eng.xp(a), &eng.xm(a)).scale(&k));
            }
            let xi = eng.xi(i);
            v = v.sub(&alg.mul(&xi, &xi).scale(&Scalar::half()));
            let mut lhs = v.scale(&Scalar::from_int(2));
            lhs = lhs.sub(&alg.commutator(&xi, &ck).scale(&Scalar::half()));
            for a in 0..np {
                let b = eng.xp(a).sub(&eng.xm(a));
                let k = Scalar::from_ratio(eng.root_pairing(a, i), 2);
                lhs = lhs.add(&alg.mul(&b, &b).scale(&k));
            }
            let rhs = eng.sum_xplus_sq(i).sub(&alg.mul(&xi, &xi));
            fam.push((Fragment::from_classical(lhs.sub(&rhs)), 1));
        }
        frag_detail(&fam)
    }));

    items
}

fn invert_gram(g: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = g.len();
    let q = |k: i64| BigRational::from_integer(k.into());
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        q(g[i][j])
                    } else if j - n == i {
                        q(1)
                    } else {
                        q(0)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| m[r][col] != q(0))
            .expect("gram matrix is invertible");
        m.swap(col, piv);
        let inv = q(1) / m[col][col].clone();
        for j in 0..2 * n {
            m[col][j] = m[col][j].clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && m[r][col] != q(0) {
                let f = m[r][col].clone();
                for j in 0..2 * n {
                    m[r][j] = m[r][j].clone() - f.clone() * m[col][j].clone();
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Two-tensor Casimir identities for the symmetric-pair decomposition, plus
/// the explicit coproduct of the image of the level-one Cartan generator.
pub fn check_casimir(cd: &Rc<ChevalleyData>) -> Vec<CheckItem> {
    let eng = FragEngine::new(cd.clone());
    let base = eng.ca.alg.clone();
    let alg2 = Rc::new(tensor_square(base.clone()));
    let n = cd.rs.rank;
    let np = cd.rs.num_positive();
    let ginv = invert_gram(&cd.rs.gram);
    let mut items = Vec::new();

    let omega_k = {
        let mut acc = PbwElement::zero();
        for a in 0..np {
            let b = eng.xp(a).sub(&eng.xm(a));
            acc = acc.add(&tensor_elem(&alg2, &b, &b));
        }
        acc.scale(&-Scalar::half())
    };
    let omega_p = {
        let mut acc = PbwElement::zero();
        for a in 0..np {
            let y = eng.xp(a).add(&eng.xm(a));
            acc = acc.add(&tensor_elem(&alg2, &y, &y));
        }
        acc = acc.scale(&Scalar::half());
        for i in 0..n {
            for j in 0..n {
                let k = Scalar::from_rational(ginv[i][j].clone());
                acc = acc.add(&tensor_elem(&alg2, &eng.xi(i), &eng.xi(j)).scale(&k));
            }
        }
        acc
    };
    let omega_g = {
        let mut acc = PbwElement::zero();
        for a in 0..np {
            acc = acc.add(&tensor_elem(&alg2, &eng.xp(a), &eng.xm(a)));
            acc = acc.add(&tensor_elem(&alg2, &eng.xm(a), &eng.xp(a)));
        }
        for i in 0..n {
            for j in 0..n {
                let k = Scalar::from_rational(ginv[i][j].clone());
                acc = acc.add(&tensor_elem(&alg2, &eng.xi(i), &eng.xi(j)).scale(&k));
            }
        }
        acc
    };

    items.push(run_item("omega-decomposition", "Omega", || {
        let r = omega_g.sub(&omega_k.add(&omega_p));
        (r.is_zero(), format!("residual {} terms", r.len()))
    }));

    // one copy of each Lie algebra basis element
    let basis: Vec<PbwElement> = cd.basis().iter().map(|g| eng.ca.gen(*g, 0)).collect();
    let unit = PbwElement::unit();

    items.push(run_item("omega-invariance", "Omega", || {
        let mut bad = 0;
        for x in &basis {
            let dx = tensor_elem(&alg2, x, &unit).add(&tensor_elem(&alg2, &unit, x));
            if !alg2.commutator(&dx, &omega_g).is_zero() {
                bad += 1;
            }
        }
        (bad == 0, format!("{} basis elements, {} failures", basis.len(), bad))
    }));

    items.push(run_item("omega-pair-exchange", "lem:omega", || {
        // For x in the (−1)-eigenspace: [x⊗1, Ω_p] + [1⊗x, Ω_k] = 0 and the
        // mirrored identity.
        let mut p_basis: Vec<PbwElement> = (0..np).map(|a| eng.xp(a).add(&eng.xm(a))).collect();
        for i in 0..n {
            p_basis.push(eng.xi(i));
        }
        let mut bad = 0;
        for x in &p_basis {
            let xl = tensor_elem(&alg2, x, &unit);
            let xr = tensor_elem(&alg2, &unit, x);
            let one = alg2.commutator(&xl, &omega_p).add(&alg2.commutator(&xr, &omega_k));
            let two = alg2.commutator(&xl, &omega_k).add(&alg2.commutator(&xr, &omega_p));
            if !one.is_zero() || !two.is_zero() {
                bad += 1;
            }
        }
        (bad == 0, format!("{} eigenspace elements, {} failures", p_basis.len(), bad))
    }));

    items.push(run_item("coprohi1", "coprohi1", || {
        // The classical residual of the coproduct formula for the image of the
        // level-one Cartan generator; the degree-one symbols cancel verbatim.
        let delta = |e: &PbwElement| -> PbwElement {
            let mut out = PbwElement::zero();
            for (w, c) in &e.terms {
                let factors: Vec<PbwElement> = w
                    .iter()
                    .map(|&g| {
                        let x = PbwElement::gen(g);
                        tensor_elem(&alg2, &x, &unit).add(&tensor_elem(&alg2, &unit, &x))
                    })
                    .collect();
                let refs: Vec<&PbwElement> = factors.iter().collect();
                out = out.add(&alg2.product(&refs).scale(c));
            }
            out
        };
        let mut fam = Vec::new();
        for i in 0..n {
            let xi = eng.xi(i);
            let c_i = eng.sum_xplus_sq(i).sub(&base.mul(&xi, &xi));
            let mut lhs = delta(&c_i);
            lhs = lhs.add(&tensor_elem(&alg2, &xi, &xi).scale(&Scalar::from_int(2)));
            for a in 0..np {
                let k = Scalar::from_int(2 * eng.root_pairing(a, i));
                lhs = lhs.sub(&tensor_elem(&alg2, &eng.xm(a), &eng.xp(a)).scale(&k));
            }
            let mut rhs = tensor_elem(&alg2, &c_i, &unit).add(&tensor_elem(&alg2, &unit, &c_i));
            for a in 0..np {
                let k = Scalar::from_int(2 * eng.root_pairing(a, i));
                let b = eng.xp(a).sub(&eng.xm(a));
                rhs = rhs.add(&tensor_elem(&alg2, &b, &eng.xp(a)).scale(&k));
            }
            fam.push((Fragment::from_classical(lhs.sub(&rhs)), 1));
        }
        frag_detail(&fam)
    }));

    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::rootdata::RootSystem;

    fn chev(t: &str) -> Rc<ChevalleyData> {
        ChevalleyData::build(RootSystem::build(t.parse().unwrap()))
    }

    #[test]
    fn a2_embedding_suite() {
        let cd = chev("A2");
        for item in check_embedding(&cd, None) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }

    #[test]
    fn b2_embedding_suite() {
        let cd = chev("B2");
        for item in check_embedding(&cd, None) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }

    #[test]
    fn a2_casimir_suite() {
        let cd = chev("A2");
        for item in check_casimir(&cd) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }

    #[test]
    fn mutated_hi1_fails_hbrel_for_a2() {
        let cd = chev("A2");
        let m = Mutation::parse("hi1-embedding:0").unwrap();
        let items = check_embedding(&cd, Some(&m));
        let hb = items.iter().find(|i| i.id == "HBrel").unwrap();
        assert_eq!(hb.status, Status::Fail, "{}", hb.detail);
    }

    #[test]
    fn a1_embedding_suite() {
        let cd = chev("A1");
        for item in check_embedding(&cd, None) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }
}
