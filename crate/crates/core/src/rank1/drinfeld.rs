//! Rank-one Yangian in Drinfeld presentation, realized on the PBW engine with
//! the exact nonlinear straightening rules, together with the twisted
//! subalgebra generators and the generating-series checks.
//!
//! Generator indices are capped at a configurable budget; a bracket that would
//! escape the budget panics, so every passing check certifies the budget was
//! sufficient (the filtration degree of a normal form never exceeds that of
//! the input, which bounds all indices by the total degree of the expression).

use crate::pbw::{tensor_elem, tensor_square, Algebra, BracketRules, GenInfo, GeneratorTable, PbwElement, Word};
use crate::report::{run_item, CheckItem};
use crate::scalar::Scalar;
use crate::series::{Ring, Series};
use std::rc::Rc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Cls {
    Neg,
    Cart,
    Pos,
}

struct R1Rules {
    rmax: u32,
}

impl R1Rules {
    fn split(&self, idx: u32) -> (Cls, u32) {
        let n = self.rmax + 1;
        match idx / n {
            0 => (Cls::Neg, idx % n),
            1 => (Cls::Cart, idx % n),
            _ => (Cls::Pos, idx % n),
        }
    }
    fn idx(&self, c: Cls, r: u32) -> u32 {
        assert!(r <= self.rmax, "generator index budget exceeded (need index {r})");
        let n = self.rmax + 1;
        match c {
            Cls::Neg => r,
            Cls::Cart => n + r,
            Cls::Pos => 2 * n + r,
        }
    }
    fn gen(&self, c: Cls, r: u32) -> PbwElement {
        PbwElement::gen(self.idx(c, r))
    }

    /// `[ξ_r, x_s^±]` with `sign = ±1`.
    fn xi_x(&self, alg: &Algebra, r: u32, s: u32, sign: i64) -> PbwElement {
        let c = if sign > 0 { Cls::Pos } else { Cls::Neg };
        if r == 0 {
            return self.gen(c, s).scale(&Scalar::from_int(2 * sign));
        }
        let a = self.gen(Cls::Cart, r - 1);
        let rec = alg.commutator(&a, &self.gen(c, s + 1));
        let ac = alg.anticommutator(&a, &self.gen(c, s));
        rec.add(&ac.scale(&Scalar::from_int(sign)))
    }

    /// `[x_r^±, x_s^±]` for `r > s`, `sign = ±1`.
    fn x_x(&self, alg: &Algebra, r: u32, s: u32, sign: i64) -> PbwElement {
        let c = if sign > 0 { Cls::Pos } else { Cls::Neg };
        if r == s + 1 {
            let x = self.gen(c, s);
            return alg.mul(&x, &x).scale(&Scalar::from_int(sign));
        }
        let rec = alg.commutator(&self.gen(c, r - 1), &self.gen(c, s + 1));
        let ac = alg.anticommutator(&self.gen(c, r - 1), &self.gen(c, s));
        rec.add(&ac.scale(&Scalar::from_int(sign)))
    }
}

impl BracketRules for R1Rules {
    fn bracket(&self, alg: &Algebra, hi: u32, lo: u32) -> PbwElement {
        let (ch, rh) = self.split(hi);
        let (cl, rl) = self.split(lo);
        match (ch, cl) {
            (Cls::Cart, Cls::Cart) => PbwElement::zero(),
            (Cls::Pos, Cls::Neg) => self.gen(Cls::Cart, rh + rl),
            (Cls::Cart, Cls::Neg) => self.xi_x(alg, rh, rl, -1),
            (Cls::Pos, Cls::Cart) => self.xi_x(alg, rl, rh, 1).scale(&-Scalar::one()),
            (Cls::Pos, Cls::Pos) => self.x_x(alg, rh, rl, 1),
            (Cls::Neg, Cls::Neg) => self.x_x(alg, rh, rl, -1),
            _ => unreachable!("table order is x^- < ξ < x^+"),
        }
    }
}

/// The rank-one Yangian with generator indices `0..=rmax`, plus the twisted
/// generators `b_r` (for `r ≤ bmax`) and `h_t` built from them.
pub struct Rank1 {
    pub alg: Rc<Algebra>,
    pub rmax: u32,
    pub b: Vec<PbwElement>,
    pub h: Vec<PbwElement>,
}

impl Rank1 {
    pub fn new(rmax: u32, bmax: u32) -> Self {
        let mut gens = Vec::new();
        for (name, w) in [("x-", -1i64), ("xi", 0), ("x+", 1)] {
            for r in 0..=rmax {
                gens.push(GenInfo {
                    name: format!("{name}{r}"),
                    degree: r,
                    weight: vec![w],
                });
            }
        }
        let table = GeneratorTable::new(gens, 1);
        let alg = Rc::new(Algebra::new(table, Rc::new(R1Rules { rmax })));
        let mut y = Rank1 {
            alg,
            rmax,
            b: Vec::new(),
            h: Vec::new(),
        };
        // b_0 = x_0^+ − x_0^-,  h_1 = 2ξ_1 − ξ_0² + 2(x_0^+)²,
        // b_{r+1} = ¼ [h_1, b_r],
        // h_t = [b_0, b_t] + Σ_{a+b=t−1} b_a b_b  (coefficients of
        // [b_0, b(u)] + b(u)² = h(u) − 1).
        let b0 = y.xp(0).sub(&y.xm(0));
        let h1 = y
            .xi(1)
            .scale(&Scalar::from_int(2))
            .sub(&y.alg.mul(&y.xi(0), &y.xi(0)))
            .add(&y.alg.mul(&y.xp(0), &y.xp(0)).scale(&Scalar::from_int(2)));
        y.b.push(b0);
        for r in 0..bmax {
            let next = y.alg.commutator(&h1, &y.b[r as usize]).scale(&Scalar::from_ratio(1, 4));
            y.b.push(next);
        }
        for t in 0..=bmax {
            let mut ht = y.alg.commutator(&y.b[0], &y.b[t as usize]);
            for a in 0..t as i64 {
                let bb = t as i64 - 1 - a;
                if bb >= 0 {
                    ht = ht.add(&y.alg.mul(&y.b[a as usize], &y.b[bb as usize]));
                }
            }
            y.h.push(ht);
        }
        // the recursion must reproduce h_1
        assert!(y.h[1].sub(&h1).is_zero(), "h recursion disagrees at level one");
        y
    }

    pub fn xp(&self, r: u32) -> PbwElement {
        assert!(r <= self.rmax);
        PbwElement::gen(2 * (self.rmax + 1) + r)
    }
    pub fn xm(&self, r: u32) -> PbwElement {
        assert!(r <= self.rmax);
        PbwElement::gen(r)
    }
    pub fn xi(&self, r: u32) -> PbwElement {
        assert!(r <= self.rmax);
        PbwElement::gen(self.rmax + 1 + r)
    }
    /// ξ̃_1 = ξ_1 − ½ ξ_0².
    pub fn xitilde(&self) -> PbwElement {
        self.xi(1)
            .sub(&self.alg.mul(&self.xi(0), &self.xi(0)).scale(&Scalar::half()))
    }
    /// `h_t` with the conventions `h_{−1} = 1`, `h_even = 0` imposed.
    pub fn h_ext(&self, t: i64) -> PbwElement {
        if t == -1 {
            PbwElement::unit()
        } else if t < -1 || t % 2 == 0 {
            PbwElement::zero()
        } else {
            self.h[t as usize].clone()
        }
    }

    pub fn weight_of(&self, w: &[u32]) -> i64 {
        self.alg.weight(w)[0]
    }

    fn has_neg(&self, w: &[u32]) -> bool {
        w.iter().any(|&g| g <= self.rmax)
    }
    fn has_pos(&self, w: &[u32]) -> bool {
        w.iter().any(|&g| g >= 2 * (self.rmax + 1))
    }
}

/// Coefficient ring: the algebra itself.
pub struct AlgRing {
    pub alg: Rc<Algebra>,
}

impl Ring for AlgRing {
    type El = PbwElement;
    fn zero(&self) -> PbwElement {
        PbwElement::zero()
    }
    fn one(&self) -> PbwElement {
        PbwElement::unit()
    }
    fn add(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        a.add(b)
    }
    fn neg(&self, a: &PbwElement) -> PbwElement {
        a.neg()
    }
    fn mul(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        self.alg.mul(a, b)
    }
    fn scale(&self, a: &PbwElement, c: &Scalar) -> PbwElement {
        a.scale(c)
    }
    fn is_zero(&self, a: &PbwElement) -> bool {
        a.is_zero()
    }
}

type ASeries = Series<AlgRing>;

fn commutator_series(ring: &AlgRing, x: &PbwElement, s: &ASeries) -> ASeries {
    Series {
        coeffs: s.coeffs.iter().map(|c| ring.alg.commutator(x, c)).collect(),
    }
}

/// Coproduct on the rank-one Yangian, memoized per generator.
pub struct Rank1Delta {
    pub alg2: Rc<Algebra>,
    images: Vec<PbwElement>,
}

impl Rank1Delta {
    pub fn new(y: &Rank1, dmax: u32) -> Self {
        let alg2 = Rc::new(tensor_square(y.alg.clone()));
        let unit = PbwElement::unit();
        let prim = |x: &PbwElement| {
            tensor_elem(&alg2, x, &unit).add(&tensor_elem(&alg2, &unit, x))
        };
        let n = y.rmax + 1;
        let mut images = vec![PbwElement::zero(); (3 * n) as usize];
        // level 0 and the explicit level-1 formulas
        images[y.rmax as usize + 1] = prim(&y.xi(0));
        images[0_usize] = prim(&y.xm(0));
        images[2 * n as usize] = prim(&y.xp(0));
        images[y.rmax as usize + 2] = prim(&y.xi(1))
            .add(&tensor_elem(&alg2, &y.xi(0), &y.xi(0)))
            .sub(&tensor_elem(&alg2, &y.xm(0), &y.xp(0)).scale(&Scalar::from_int(2)));
        images[1] = prim(&y.xm(1)).add(&tensor_elem(&alg2, &y.xm(0), &y.xi(0)));
        images[2 * n as usize + 1] =
            prim(&y.xp(1)).add(&tensor_elem(&alg2, &y.xi(0), &y.xp(0)));
        // Δ(ξ̃_1), then the recursions x_{r+1}^± = ±½[ξ̃_1, x_r^±] and
        // ξ_m = [x_1^+, x_{m−1}^-].
        let dxi0 = images[y.rmax as usize + 1].clone();
        let dxitilde = images[y.rmax as usize + 2]
            .clone()
            .sub(&alg2.mul(&dxi0, &dxi0).scale(&Scalar::half()));
        for r in 1..dmax {
            let dp = alg2
                .commutator(&dxitilde, &images[2 * n as usize + r as usize])
                .scale(&Scalar::half());
            images[2 * n as usize + r as usize + 1] = dp;
            let dm = alg2
                .commutator(&dxitilde, &images[r as usize])
                .scale(&-Scalar::half());
            images[r as usize + 1] = dm;
        }
        let dxp1 = images[2 * n as usize + 1].clone();
        for m in 2..=dmax {
            images[y.rmax as usize + 1 + m as usize] =
                alg2.commutator(&dxp1, &images[m as usize - 1]);
        }
        Rank1Delta { alg2, images }
    }

    pub fn apply(&self, e: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (w, c) in &e.terms {
            let factors: Vec<&PbwElement> = w.iter().map(|&g| &self.images[g as usize]).collect();
            out = out.add(&self.alg2.product(&factors).scale(c));
        }
        out
    }

    /// Weight carried by the right tensor factor of a monomial.
    pub fn right_weight(&self, y: &Rank1, w: &[u32]) -> i64 {
        let n = 3 * (y.rmax + 1);
        w.iter()
            .filter(|&&g| g >= n)
            .map(|&g| y.alg.weight(&[g - n])[0])
            .sum()
    }
}

fn series_eq_upto(ring: &AlgRing, a: &ASeries, b: &ASeries, order: usize) -> Option<usize> {
    (0..=order).find(|&r| !ring.is_zero(&ring.sub(&a.coeff(ring, r), &b.coeff(ring, r))))
}

fn rank_over_k(mut rows: Vec<Vec<Scalar>>) -> usize {
    let mut rank = 0;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut col = 0;
    while col < ncols && rank < rows.len() {
        if let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            rows.swap(rank, p);
            let inv = rows[rank][col].inv();
            for j in col..ncols {
                rows[rank][j] = rows[rank][j].clone() * inv.clone();
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for j in col..ncols {
                        let t = rows[rank][j].clone() * f.clone();
                        rows[r][j] = rows[r][j].clone() - t;
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

/// The full rank-one suite: defining relations of the twisted subalgebra,
/// generating-series identities, estimates, and the lattice-separation rank
/// check.
pub fn check_rank1(series_order: usize, est_order: usize) -> Vec<CheckItem> {
    let rmax = (series_order as u32 + 2).max(12);
    let bmax = series_order as u32 - 1;
    let wmax = bmax as i64 - 1;
    let y = Rank1::new(rmax, bmax);
    let alg = y.alg.clone();
    let mut items = Vec::new();

    let detail_pe = |r: &PbwElement, count: usize| -> (bool, String) {
        if r.is_zero() {
            (true, format!("{count} instances, residual 0"))
        } else {
            (false, format!("{count} instances, residual {} monomials", r.len()))
        }
    };

    items.push(run_item("ty0", "ty0", || {
        let mut resid = PbwElement::zero();
        let mut count = 0;
        for r in (1..=wmax).step_by(2) {
            for s in (1..=(wmax - r).max(0)).step_by(2) {
                count += 1;
                let c = alg.commutator(&y.h[r as usize], &y.h[s as usize]);
                if resid.is_zero() {
                    resid = c;
                }
            }
        }
        detail_pe(&resid, count)
    }));

    items.push(run_item("h-even-vanish", "ty0", || {
        let mut resid = PbwElement::zero();
        let mut count = 0;
        for t in (0..=bmax as usize).step_by(2) {
            count += 1;
            if resid.is_zero() {
                resid = y.h[t].clone();
            }
        }
        detail_pe(&resid, count)
    }));

    items.push(run_item("ty1", "ty1", || {
        // [h_{r+1}, b_s] − [h_{r−1}, b_{s+2}] = 2{h_{r−1}, b_{s+1}} + [h_{r−1}, b_s]
        let mut resid = PbwElement::zero();
        let mut count = 0;
        for r in (0..=(wmax - 1)).step_by(2) {
            for s in 0..=(wmax - 1 - r) {
                count += 1;
                let lhs = alg
                    .commutator(&y.h_ext(r + 1), &y.b[s as usize])
                    .sub(&alg.commutator(&y.h_ext(r - 1), &y.b[s as usize + 2]));
                let rhs = alg
                    .anticommutator(&y.h_ext(r - 1), &y.b[s as usize + 1])
                    .scale(&Scalar::from_int(2))
                    .add(&alg.commutator(&y.h_ext(r - 1), &y.b[s as usize]));
                if resid.is_zero() {
                    resid = lhs.sub(&rhs);
                }
            }
        }
        detail_pe(&resid, count)
    }));

    items.push(run_item("ty2", "ty2", || {
        // [b_{r+1}, b_s] − [b_r, b_{s+1}] = {b_r, b_s} − 2(−1)^s h_{r+s+1}
        let mut resid = PbwElement::zero();
        let mut count = 0;
        for r in 0..=wmax {
            for s in 0..=(wmax - r) {
                count += 1;
                let lhs = alg
                    .commutator(&y.b[r as usize + 1], &y.b[s as usize])
                    .sub(&alg.commutator(&y.b[r as usize], &y.b[s as usize + 1]));
                let sgn = if s % 2 == 0 { -2 } else { 2 };
                let rhs = alg
                    .anticommutator(&y.b[r as usize], &y.b[s as usize])
                    .add(&y.h_ext(r + s + 1).scale(&Scalar::from_int(sgn)));
                if resid.is_zero() {
                    resid = lhs.sub(&rhs);
                }
            }
        }
        detail_pe(&resid, count)
    }));

    items.push(run_item("add-rel", "eq:add-rel", || {
        let h1 = &y.h[1];
        let b1 = &y.b[1];
        let inner = alg.commutator(h1, b1);
        let mid = alg.commutator(b1, &inner);
        let lhs = alg.commutator(h1, &mid);
        let b1sq = alg.mul(b1, b1);
        let rhs = alg.commutator(&b1sq, h1).scale(&Scalar::from_int(4));
        detail_pe(&lhs.sub(&rhs), 1)
    }));

    items.push(run_item("bi1bi2", "bi1bi2", || {
        let lhs = alg.commutator(&y.b[1], &y.b[2]);
        let rhs = alg.mul(&y.b[1], &y.b[1]).neg().sub(&y.h[3]);
        detail_pe(&lhs.sub(&rhs), 1)
    }));

    // ---- generating series identities ----------------------------------
    let ring = AlgRing { alg: alg.clone() };
    let no = series_order; // internal order; comparisons go to no−1
    let mk = |f: &dyn Fn(usize) -> PbwElement, unit_term: bool| -> ASeries {
        let mut s = ASeries::zero(&ring, no);
        if unit_term {
            s.coeffs[0] = PbwElement::unit();
        }
        for r in 0..no {
            s.coeffs[r + 1] = f(r);
        }
        s
    };
    let xi_u = mk(&|r| y.xi(r as u32), true);
    let xp_u = mk(&|r| y.xp(r as u32), false);
    let xm_u = mk(&|r| y.xm(r as u32), false);
    let b_u = mk(&|r| y.b[r].clone(), false);
    let h_u = {
        let mut s = ASeries::zero(&ring, no);
        s.coeffs[0] = PbwElement::unit();
        for t in (1..no).step_by(2) {
            s.coeffs[t + 1] = y.h[t].clone();
        }
        s
    };
    let cmp = no - 1;
    let one = ASeries::one(&ring, no);
    let const_series = |x: &PbwElement| -> ASeries {
        let mut s = ASeries::zero(&ring, no);
        s.coeffs[0] = x.clone();
        s
    };
    let series_item = |name: &'static str, anchor: &'static str, lhs: ASeries, rhs: ASeries| {
        run_item(name, anchor, || match series_eq_upto(&ring, &lhs, &rhs, cmp) {
            None => (true, format!("orders 0..={cmp} agree")),
            Some(k) => (false, format!("first mismatch at order {k}")),
        })
    };

    items.push(series_item(
        "xi+xi-",
        "xi+xi-",
        commutator_series(&ring, &y.xp(0), &xm_u),
        xi_u.sub(&ring, &one),
    ));
    items.push(series_item(
        "xixi-",
        "xixi-",
        commutator_series(&ring, &y.xm(0), &xm_u),
        xm_u.mul(&ring, &xm_u),
    ));
    items.push(series_item(
        "xixj1-plus",
        "xixj1",
        commutator_series(&ring, &y.xitilde(), &xp_u),
        xp_u.mul_by_u(&ring)
            .sub(&ring, &const_series(&y.xp(0)))
            .scale(&ring, &Scalar::from_int(2)),
    ));
    items.push(series_item(
        "xixj1-minus",
        "xixj1",
        commutator_series(&ring, &y.xitilde(), &xm_u),
        xm_u.mul_by_u(&ring)
            .sub(&ring, &const_series(&y.xm(0)))
            .scale(&ring, &Scalar::from_int(-2)),
    ));
    items.push(series_item(
        "xiuxi0",
        "xiuxi0",
        {
            // [ξ(u), x_0^-] computed coefficientwise on the left slot
            ASeries {
                coeffs: xi_u
                    .coeffs
                    .iter()
                    .map(|c| alg.commutator(c, &y.xm(0)))
                    .collect(),
            }
        },
        {
            let a = xi_u.mul(&ring, &xm_u);
            let b = xm_u.mul(&ring, &xi_u);
            a.add(&ring, &b).neg(&ring)
        },
    ));
    items.push(series_item(
        "hbcom1",
        "hbcom1",
        commutator_series(&ring, &y.h[1], &b_u),
        b_u.mul_by_u(&ring)
            .sub(&ring, &const_series(&y.b[0]))
            .scale(&ring, &Scalar::from_int(4)),
    ));
    items.push(series_item(
        "bi0biu",
        "bi0biu",
        commutator_series(&ring, &y.b[0], &b_u),
        h_u.sub(&ring, &one).sub(&ring, &b_u.mul(&ring, &b_u)),
    ));

    // ---- estimates ------------------------------------------------------
    let e = est_order;
    let xi_neg = xi_u.negate_arg(&ring);
    let resid_h = h_u.sub(&ring, &xi_u.mul(&ring, &xi_neg));
    items.push(run_item("h-est-weak", "eq:h-est", || {
        let mut bad = 0;
        for r in 0..=e {
            for (w, c) in &resid_h.coeffs[r].terms {
                if !c.is_zero() && y.weight_of(w) < 1 {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("orders ≤ {e}, {bad} monomials outside the positive cone"))
    }));
    items.push(run_item("h-est-strong", "conj", || {
        let mut bad = 0;
        for r in 0..=e {
            for (w, c) in &resid_h.coeffs[r].terms {
                if !c.is_zero() && (y.has_neg(w) || !y.has_pos(w)) {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("orders ≤ {e}, {bad} monomials outside the Borel positive cone"))
    }));

    let half_anti = {
        let a = xp_u.mul(&ring, &xi_neg).add(&ring, &xi_neg.mul(&ring, &xp_u));
        a.scale(&ring, &Scalar::half())
    };
    let resid_b = b_u.sub(&ring, &half_anti.add(&ring, &xm_u.negate_arg(&ring)));
    items.push(run_item("b-est-weak", "eq:b-est-intro", || {
        let mut bad = 0;
        for r in 0..=e {
            for (w, c) in &resid_b.coeffs[r].terms {
                if !c.is_zero() && y.weight_of(w) < 2 {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("orders ≤ {e}, {bad} monomials below the shifted cone"))
    }));
    items.push(run_item("b-est", "eq:b-est", || {
        let mut bad = 0;
        for r in 0..=e {
            for (w, c) in &resid_b.coeffs[r].terms {
                if !c.is_zero() && (y.has_neg(w) || y.weight_of(w) < 2) {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("orders ≤ {e}, {bad} monomials outside the shifted cone"))
    }));

    // ---- coproduct estimates --------------------------------------------
    let delta = Rank1Delta::new(&y, (e as u32 + 2).min(rmax));
    let ring2 = AlgRing { alg: delta.alg2.clone() };
    // work at order e + 1 so that Δ-images are only needed for the
    // generators actually constructed
    let ne = e + 1;
    let dmap = |s: &ASeries| -> Series<AlgRing> {
        Series {
            coeffs: s.coeffs[..=ne].iter().map(|c| delta.apply(c)).collect(),
        }
    };
    let tensor_series = |a: &ASeries, b: &ASeries| -> Series<AlgRing> {
        let mut out = Series::zero(&ring2, ne);
        for r in 0..=ne {
            for k in 0..=r {
                out.coeffs[r] = out.coeffs[r].add(&tensor_elem(
                    &delta.alg2,
                    &a.coeffs[k],
                    &b.coeffs[r - k],
                ));
            }
        }
        out
    };

    items.push(run_item("delta-consistency", "copro-efh", || {
        let mut bad = 0;
        for r in 0..=3u32 {
            for s in 0..=3u32 {
                let lhs = delta.alg2.commutator(
                    &delta.apply(&y.xp(r)),
                    &delta.apply(&y.xm(s)),
                );
                if !lhs.sub(&delta.apply(&y.xi(r + s))).is_zero() {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("16 pairs, {bad} failures"))
    }));

    let dh = dmap(&h_u);
    let resid_dh = dh.sub(&ring2, &tensor_series(&h_u, &xi_u.mul(&ring, &xi_neg)));
    items.push(run_item("h-co-est", "eq:h-co-est", || {
        let mut bad = 0;
        for r in 0..=e {
            for (w, c) in &resid_dh.coeffs[r].terms {
                if !c.is_zero() && delta.right_weight(&y, w) < 1 {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("orders ≤ {e}, {bad} monomials with non-positive right weight"))
    }));

    let db = dmap(&b_u);
    let resid_db = db
        .sub(&ring2, &tensor_series(&b_u, &xi_neg))
        .sub(&ring2, &tensor_series(&one, &b_u));
    items.push(run_item("b-co-est", "eq:b-co-est", || {
        let mut bad = 0;
        for r in 0..=e {
            for (w, c) in &resid_db.coeffs[r].terms {
                if !c.is_zero() && delta.right_weight(&y, w) < 1 {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("orders ≤ {e}, {bad} monomials with non-positive right weight"))
    }));

    // ---- lattice separation (finite instantiation) ----------------------
    items.push(run_item("cap-separation", "lem:cap=0", || {
        // Products of at most four twisted generators with total degree ≤ 4:
        // no nonzero combination is supported entirely on positive weights.
        let gens: Vec<(PbwElement, u32)> = vec![
            (y.b[0].clone(), 0),
            (y.b[1].clone(), 1),
            (y.b[2].clone(), 2),
            (y.b[3].clone(), 3),
            (y.b[4].clone(), 4),
            (y.h[1].clone(), 1),
            (y.h[3].clone(), 3),
        ];
        let mut products: Vec<PbwElement> = vec![PbwElement::unit()];
        let mut frontier: Vec<(PbwElement, u32)> = vec![(PbwElement::unit(), 0)];
        for _ in 0..4 {
            let mut next = Vec::new();
            for (p, d) in &frontier {
                for (g, gd) in &gens {
                    if d + gd <= 4 {
                        let q = alg.mul(p, g);
                        products.push(q.clone());
                        next.push((q, d + gd));
                    }
                }
            }
            frontier = next;
        }
        // dense matrix over the union of monomials
        let mut cols: Vec<Word> = Vec::new();
        {
            let mut seen = std::collections::BTreeSet::new();
            for p in &products {
                for w in p.terms.keys() {
                    if seen.insert(w.clone()) {
                        cols.push(w.clone());
                    }
                }
            }
        }
        let col_index: std::collections::BTreeMap<&Word, usize> =
            cols.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let rows: Vec<Vec<Scalar>> = products
            .iter()
            .map(|p| {
                let mut row = vec![Scalar::zero(); cols.len()];
                for (w, c) in &p.terms {
                    row[col_index[w]] = c.clone();
                }
                row
            })
            .collect();
        let full = rank_over_k(rows.clone());
        let kept: Vec<usize> = (0..cols.len())
            .filter(|&k| y.weight_of(&cols[k]) <= 0)
            .collect();
        let restricted: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| kept.iter().map(|&k| r[k].clone()).collect())
            .collect();
        let part = rank_over_k(restricted);
        (
            full == part,
            format!(
                "{} products, rank {} vs rank {} on non-positive weights",
                products.len(),
                full,
                part
            ),
        )
    }));

    // ---- anti-involution ------------------------------------------------
    items.push(run_item("tau-copro", "eq:tau-copro", || {
        // 𝔗 swaps x^± and fixes ξ, reverses products; Δ∘𝔗 = (𝔗⊗𝔗)∘Δ^op.
        let n = y.rmax + 1;
        let tau_gen = |g: u32| -> u32 {
            if g < n {
                g + 2 * n
            } else if g < 2 * n {
                g
            } else {
                g - 2 * n
            }
        };
        let tau = |e: &PbwElement, a: &Algebra| -> PbwElement {
            let mut out = PbwElement::zero();
            for (w, c) in &e.terms {
                let factors: Vec<PbwElement> =
                    w.iter().rev().map(|&g| PbwElement::gen(tau_gen(g))).collect();
                let refs: Vec<&PbwElement> = factors.iter().collect();
                out = out.add(&a.product(&refs).scale(c));
            }
            out
        };
        let tau2 = |e: &PbwElement| -> PbwElement {
            let m = 3 * n;
            let mut out = PbwElement::zero();
            for (w, c) in &e.terms {
                // swap the tensor factors (Δ^op), apply 𝔗 to each side,
                // reversing each side's word
                let left: Vec<u32> = w.iter().filter(|&&g| g < m).copied().collect();
                let right: Vec<u32> = w.iter().filter(|&&g| g >= m).map(|&g| g - m).collect();
                let mut factors: Vec<PbwElement> = Vec::new();
                for &g in right.iter().rev() {
                    factors.push(PbwElement::gen(tau_gen(g)));
                }
                for &g in left.iter().rev() {
                    factors.push(PbwElement::gen(tau_gen(g) + m));
                }
                let refs: Vec<&PbwElement> = factors.iter().collect();
                out = out.add(&delta.alg2.product(&refs).scale(c));
            }
            out
        };
        let mut bad = 0;
        for r in 0..=3u32 {
            for g in [y.xp(r), y.xm(r), y.xi(r)] {
                let lhs = delta.apply(&tau(&g, &y.alg));
                let rhs = tau2(&delta.apply(&g));
                if !lhs.sub(&rhs).is_zero() {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("12 generators, {bad} failures"))
    }));

    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn sl2_defining_relations_small() {
        let y = Rank1::new(8, 5);
        // [x_1^+, x_0^-] = ξ_1, [ξ_1, ξ_3] = 0, [x_1^+, x_0^+] = (x_0^+)²
        assert!(y
            .alg
            .commutator(&y.xp(1), &y.xm(0))
            .sub(&y.xi(1))
            .is_zero());
        assert!(y.alg.commutator(&y.xi(1), &y.xi(3)).is_zero());
        let sq = y.alg.mul(&y.xp(0), &y.xp(0));
        assert!(y.alg.commutator(&y.xp(1), &y.xp(0)).sub(&sq).is_zero());
    }

    #[test]
    fn twisted_generators_have_parity() {
        let y = Rank1::new(8, 5);
        assert!(y.h[0].is_zero());
        assert!(y.h[2].is_zero());
        assert!(y.h[4].is_zero());
        assert!(!y.h[1].is_zero());
        assert!(!y.h[3].is_zero());
    }

    #[test]
    #[ignore = "full acceptance window; run explicitly"]
    fn full_rank1_suite_acceptance_window() {
        let t0 = std::time::Instant::now();
        for item in check_rank1(10, 8) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
        eprintln!("full window took {:?}", t0.elapsed());
    }

    #[test]
    fn full_rank1_suite_small_window() {
        // scaled-down window to keep the unit test quick
        for item in check_rank1(6, 4) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }
}
