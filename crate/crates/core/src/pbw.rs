//! Generic PBW straightening engine.
//!
//! An `Algebra` is a filtered associative algebra presented by an ordered
//! table of generators together with a commutator rule: for any two
//! generators `a > b` in table order, the rule returns the normal form of
//! `[a, b]`.  Normal-form monomials are non-decreasing words of generator
//! indices; straightening repeatedly swaps adjacent inversions, inserting the
//! commutator.  Termination is by the usual measure (filtration degree, then
//! word length, then inversion count), which every rule used in this crate
//! respects: commutators strictly drop the degree-length pair.

use crate::scalar::Scalar;
use smallvec::SmallVec;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

pub type Word = SmallVec<[u32; 8]>;

#[derive(Clone, Debug)]
pub struct GenInfo {
    pub name: String,
    /// Filtration degree of the generator.
    pub degree: u32,
    /// Weight on the root lattice of the underlying root system.
    pub weight: Vec<i64>,
}

#[derive(Debug, Default)]
pub struct GeneratorTable {
    pub gens: Vec<GenInfo>,
    /// Number of coordinates in a weight vector.
    pub weight_len: usize,
}

impl GeneratorTable {
    pub fn new(gens: Vec<GenInfo>, weight_len: usize) -> Rc<Self> {
        for g in &gens {
            assert_eq!(g.weight.len(), weight_len);
        }
        Rc::new(GeneratorTable { gens, weight_len })
    }
}

/// Commutator rules: `bracket` is only queried with `hi > lo` and must return
/// a normal-form element of strictly smaller (degree, length) than the word
/// `[hi, lo]`.
pub trait BracketRules {
    fn bracket(&self, alg: &Algebra, hi: u32, lo: u32) -> PbwElement;
}

/// A normal-form element: scalar combination of sorted monomials.
#[derive(Clone, PartialEq)]
pub struct PbwElement {
    pub terms: BTreeMap<Word, Scalar>,
}

impl PbwElement {
    pub fn zero() -> Self {
        PbwElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        PbwElement::monomial(Word::new(), Scalar::one())
    }

    pub fn gen(idx: u32) -> Self {
        let mut w = Word::new();
        w.push(idx);
        PbwElement::monomial(w, Scalar::one())
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        PbwElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c.clone());
        }
        out
    }

    pub fn neg(&self) -> PbwElement {
        PbwElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> PbwElement {
        if k.is_zero() {
            return PbwElement::zero();
        }
        PbwElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * k))
                .collect(),
        }
    }

    /// Number of monomials; used as a residual summary in reports.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})·{:?}", c, w.as_slice())?;
        }
        Ok(())
    }
}

/// Syntax tree for raw (unordered) expressions; `Algebra::normal_form`
/// evaluates it.  Mostly useful for confluence testing.
#[derive(Clone)]
pub enum Expr {
    Gen(u32),
    Unit,
    Scaled(Scalar, Box<Expr>),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
}

pub struct Algebra {
    pub table: Rc<GeneratorTable>,
    rules: Rc<dyn BracketRules>,
    pair_memo: RefCell<HashMap<(u32, u32), PbwElement>>,
    word_memo: RefCell<HashMap<Word, PbwElement>>,
}

impl Algebra {
    pub fn new(table: Rc<GeneratorTable>, rules: Rc<dyn BracketRules>) -> Self {
        Algebra {
            table,
            rules,
            pair_memo: RefCell::new(HashMap::new()),
            word_memo: RefCell::new(HashMap::new()),
        }
    }

    /// Normal form of the commutator of two single generators with `hi > lo`.
    pub fn basic_bracket(&self, hi: u32, lo: u32) -> PbwElement {
        assert!(hi > lo);
        if let Some(hit) = self.pair_memo.borrow().get(&(hi, lo)) {
            return hit.clone();
        }
        let val = self.rules.bracket(self, hi, lo);
        self.pair_memo
            .borrow_mut()
            .insert((hi, lo), val.clone());
        val
    }

    /// Straighten an arbitrary word of generator indices.
    pub fn straighten(&self, w: &[u32]) -> PbwElement {
        // Fast path: already sorted.
        if w.windows(2).all(|p| p[0] <= p[1]) {
            return PbwElement::monomial(Word::from_slice(w), Scalar::one());
        }
        let key = Word::from_slice(w);
        if let Some(hit) = self.word_memo.borrow().get(&key) {
            return hit.clone();
        }
        // First adjacent inversion.
        let k = w.windows(2).position(|p| p[0] > p[1]).unwrap();
        let mut swapped = Word::from_slice(w);
        swapped.swap(k, k + 1);
        let mut out = self.straighten(&swapped);
        let br = self.basic_bracket(w[k], w[k + 1]);
        for (m, c) in &br.terms {
            let mut spliced = Word::new();
            spliced.extend_from_slice(&w[..k]);
            spliced.extend_from_slice(m);
            spliced.extend_from_slice(&w[k + 2..]);
            out = out.add(&self.straighten(&spliced).scale(c));
        }
        self.word_memo.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn mul(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                let c = ca * cb;
                for (m, k) in self.straighten(&w).terms {
                    out.add_term(m, &(k * c.clone()));
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[&PbwElement]) -> PbwElement {
        let mut acc = PbwElement::unit();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn commutator(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn anticommutator(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        self.mul(a, b).add(&self.mul(b, a))
    }

    pub fn normal_form(&self, e: &Expr) -> PbwElement {
        match e {
            Expr::Gen(i) => PbwElement::gen(*i),
            Expr::Unit => PbwElement::unit(),
            Expr::Scaled(k, inner) => self.normal_form(inner).scale(k),
            Expr::Sum(parts) => {
                let mut acc = PbwElement::zero();
                for p in parts {
                    acc = acc.add(&self.normal_form(p));
                }
                acc
            }
            Expr::Prod(parts) => {
                let mut acc = PbwElement::unit();
                for p in parts {
                    acc = self.mul(&acc, &self.normal_form(p));
                }
                acc
            }
        }
    }

    /// Weight of a monomial (sum of generator weights).
    pub fn weight(&self, w: &[u32]) -> Vec<i64> {
        let mut out = vec![0i64; self.table.weight_len];
        for &g in w {
            for (k, v) in self.table.gens[g as usize].weight.iter().enumerate() {
                out[k] += v;
            }
        }
        out
    }

    /// Filtration degree of a monomial.
    pub fn degree(&self, w: &[u32]) -> u32 {
        w.iter().map(|&g| self.table.gens[g as usize].degree).sum()
    }

    /// Keep only the terms whose monomial satisfies the predicate.
    pub fn filter_terms<F: Fn(&[u32]) -> bool>(&self, e: &PbwElement, keep: F) -> PbwElement {
        PbwElement {
            terms: e
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

/// Doubled generator table for the tensor square `A ⊗ A`: left copies come
/// before right copies, and cross pairs commute.
pub struct TensorRules {
    pub base: Rc<Algebra>,
    pub n: u32,
}

impl BracketRules for TensorRules {
    fn bracket(&self, alg: &Algebra, hi: u32, lo: u32) -> PbwElement {
        let n = self.n;
        if hi < n && lo < n {
            inject(alg, &self.base.basic_bracket(hi, lo), 0)
        } else if hi >= n && lo >= n {
            inject(alg, &self.base.basic_bracket(hi - n, lo - n), n)
        } else {
            PbwElement::zero()
        }
    }
}

fn inject(_alg: &Algebra, e: &PbwElement, offset: u32) -> PbwElement {
    PbwElement {
        terms: e
            .terms
            .iter()
            .map(|(w, c)| {
                let shifted: Word = w.iter().map(|&g| g + offset).collect();
                (shifted, c.clone())
            })
            .collect(),
    }
}

/// Build the tensor square of an algebra.  At construction every cross pair
/// `(a⊗1)(1⊗b) = (1⊗b)(a⊗1)` is checked exhaustively.
pub fn tensor_square(base: Rc<Algebra>) -> Algebra {
    let n = base.table.gens.len() as u32;
    let mut gens = Vec::with_capacity(2 * n as usize);
    for side in ["L", "R"] {
        for g in &base.table.gens {
            gens.push(GenInfo {
                name: format!("{}⊗{}", side, g.name),
                degree: g.degree,
                weight: g.weight.clone(),
            });
        }
    }
    let table = GeneratorTable::new(gens, base.table.weight_len);
    let alg = Algebra::new(
        table,
        Rc::new(TensorRules {
            base: base.clone(),
            n,
        }),
    );
    for a in 0..n {
        for b in 0..n {
            let left = alg.mul(&PbwElement::gen(a), &PbwElement::gen(n + b));
            let right = alg.mul(&PbwElement::gen(n + b), &PbwElement::gen(a));
            assert_eq!(left, right, "tensor cross pair does not commute");
        }
    }
    alg
}

/// `x ⊗ y` inside a tensor-square algebra built by [`tensor_square`].
pub fn tensor_elem(alg2: &Algebra, x: &PbwElement, y: &PbwElement) -> PbwElement {
    let n = (alg2.table.gens.len() / 2) as u32;
    let mut out = PbwElement::zero();
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            let mut w: Word = wx.clone();
            w.extend(wy.iter().map(|&g| g + n));
            out.add_term(w, &(cx * cy));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{ChevalleyData, GElem, RootSystem};
    use crate::current::lie_algebra_ug;

    fn ug(t: &str) -> (Algebra, Rc<ChevalleyData>) {
        let cd = ChevalleyData::build(RootSystem::build(t.parse().unwrap()));
        (lie_algebra_ug(&cd), cd)
    }

    #[test]
    fn sl2_basic_relations() {
        let (alg, _cd) = ug("A1");
        // Table order is x^- < ξ < x^+ (indices 0, 1, 2).
        let f = PbwElement::gen(0);
        let h = PbwElement::gen(1);
        let e = PbwElement::gen(2);
        assert_eq!(alg.commutator(&e, &f), h);
        assert_eq!(alg.commutator(&h, &e), e.scale(&Scalar::from_int(2)));
        assert_eq!(alg.commutator(&h, &f), f.scale(&Scalar::from_int(-2)));
        // ef = fe + h.
        let ef = alg.mul(&e, &f);
        let fe = alg.mul(&f, &e);
        assert_eq!(ef.sub(&fe), h);
    }

    #[test]
    fn associativity_random_words() {
        // Confluence: products of the same factors associated differently must
        // agree.  Deterministic pseudo-random words over U(g).
        for t in ["A2", "B2"] {
            let (alg, _cd) = ug(t);
            let ngen = alg.table.gens.len() as u32;
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..100 {
                let len = 3 + (next() % 3) as usize;
                let word: Vec<u32> = (0..len).map(|_| (next() % ngen as u64) as u32).collect();
                let gens: Vec<PbwElement> = word.iter().map(|&g| PbwElement::gen(g)).collect();
                // Left fold vs right fold vs split at a random point.
                let mut left = PbwElement::unit();
                for g in &gens {
                    left = alg.mul(&left, g);
                }
                let mut right = PbwElement::unit();
                for g in gens.iter().rev() {
                    right = alg.mul(g, &right);
                }
                assert_eq!(left, right);
                let cut = 1 + (next() % (len as u64 - 1)) as usize;
                let mut a = PbwElement::unit();
                for g in &gens[..cut] {
                    a = alg.mul(&a, g);
                }
                let mut b = PbwElement::unit();
                for g in &gens[cut..] {
                    b = alg.mul(&b, g);
                }
                assert_eq!(left, alg.mul(&a, &b));
            }
        }
    }

    #[test]
    fn weights_additive_under_mul() {
        let (alg, cd) = ug("B2");
        // Every monomial of x_θ^+ · x_1^- has weight θ - α_1.
        let np = cd.rs.num_positive();
        let hi = PbwElement::gen((np + cd.rs.rank + np - 1) as u32);
        let lo = PbwElement::gen(0);
        let prod = alg.mul(&hi, &lo);
        let want: Vec<i64> = {
            let top = &cd.rs.positive[np - 1];
            let bottom = &cd.rs.positive[np - 1 - (np - 1)];
            (0..cd.rs.rank).map(|k| top[k] - bottom[k]).collect()
        };
        for w in prod.terms.keys() {
            assert_eq!(alg.weight(w), want);
        }
    }

    #[test]
    fn tensor_square_cross_commutes() {
        let (alg, _cd) = ug("A2");
        let alg = Rc::new(alg);
        let alg2 = tensor_square(alg.clone());
        let a = PbwElement::gen(2);
        let b = PbwElement::gen(5);
        let ab = tensor_elem(&alg2, &a, &b);
        let left = alg2.mul(&tensor_elem(&alg2, &a, &PbwElement::unit()),
                            &tensor_elem(&alg2, &PbwElement::unit(), &b));
        assert_eq!(ab, left);
    }

    #[test]
    fn expr_normal_form_matches_mul() {
        let (alg, _cd) = ug("A1");
        let e = Expr::Prod(vec![Expr::Gen(2), Expr::Gen(0), Expr::Gen(1)]);
        let direct = alg.product(&[&PbwElement::gen(2), &PbwElement::gen(0), &PbwElement::gen(1)]);
        assert_eq!(alg.normal_form(&e), direct);
    }

    #[test]
    fn filtration_degree_never_increases() {
        let (alg, _cd) = ug("B2");
        let ngen = alg.table.gens.len() as u32;
        for a in 0..ngen {
            for b in 0..a {
                let lhs_deg = alg.degree(&[a, b]);
                for w in alg.basic_bracket(a, b).terms.keys() {
                    assert!(alg.degree(w) < lhs_deg || w.len() < 2);
                    assert!(alg.degree(w) <= lhs_deg);
                }
            }
        }
        // exercise GElem import
        let _ = GElem::Cart(0);
    }
}
