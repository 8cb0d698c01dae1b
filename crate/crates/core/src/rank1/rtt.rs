//! The RTT realization of the gl(2) Yangian and its fixed-point subalgebra.
//!
//! Generators are the modes `t_ij^(r)` for `1 ≤ i,j ≤ 2` and `1 ≤ r ≤ B`.
//! The straightening rule is the closed-form commutator
//!
//! ```text
//! [t_ij^(r), t_kl^(s)] = Σ_{a=1}^{min(r,s)} ( t_kj^(a−1) t_il^(r+s−a) − t_kj^(r+s−a) t_il^(a−1) )
//! ```
//!
//! with `t_ij^(0) = δ_ij`; modes beyond the budget `B` are truncated to zero,
//! so all identities are checked in a nilpotent quotient and only coefficients
//! of total mode ≤ B are meaningful.  An independent recursive oracle for the
//! same commutator cross-checks the closed form on a window of pairs.

use crate::pbw::{tensor_elem, tensor_square, Algebra, BracketRules, GenInfo, GeneratorTable, PbwElement};
use crate::report::{run_item, CheckItem};
use crate::scalar::Scalar;
use crate::series::{Ring, Series};
use num::BigRational;
use std::rc::Rc;

use super::drinfeld::AlgRing;

/// Mode budget and index arithmetic shared by rules and engine.
#[derive(Clone, Copy)]
pub struct Layout {
    pub bmax: u32,
}

impl Layout {
    /// `t_ij^(r)` for `r ≥ 1`; generators are ordered by `(i, j, r)`.
    pub fn idx(&self, i: usize, j: usize, r: u32) -> u32 {
        debug_assert!((1..=2).contains(&i) && (1..=2).contains(&j) && r >= 1);
        (((i - 1) * 2 + (j - 1)) as u32) * self.bmax + (r - 1)
    }
    pub fn split(&self, g: u32) -> (usize, usize, u32) {
        let ij = g / self.bmax;
        (ij as usize / 2 + 1, ij as usize % 2 + 1, g % self.bmax + 1)
    }
    /// `t_ij^(r)` as an element, honoring `t^(0) = δ` and the budget cut.
    pub fn t(&self, i: usize, j: usize, r: u32) -> PbwElement {
        if r == 0 {
            if i == j {
                PbwElement::unit()
            } else {
                PbwElement::zero()
            }
        } else if r > self.bmax {
            PbwElement::zero()
        } else {
            PbwElement::gen(self.idx(i, j, r))
        }
    }
}

struct RttRules {
    lay: Layout,
}

impl BracketRules for RttRules {
    fn bracket(&self, alg: &Algebra, hi: u32, lo: u32) -> PbwElement {
        let (i, j, r) = self.lay.split(hi);
        let (k, l, s) = self.lay.split(lo);
        let mut out = PbwElement::zero();
        for a in 1..=r.min(s) {
            let p = alg.mul(&self.lay.t(k, j, a - 1), &self.lay.t(i, l, r + s - a));
            let q = alg.mul(&self.lay.t(k, j, r + s - a), &self.lay.t(i, l, a - 1));
            out = out.add(&p.sub(&q));
        }
        out
    }
}

pub struct Rtt {
    pub alg: Rc<Algebra>,
    pub lay: Layout,
}

impl Rtt {
    pub fn new(bmax: u32) -> Self {
        let lay = Layout { bmax };
        let mut gens = Vec::new();
        for i in 1..=2usize {
            for j in 1..=2usize {
                for r in 1..=bmax {
                    gens.push(GenInfo {
                        name: format!("t{i}{j}({r})"),
                        degree: r - 1,
                        weight: vec![j as i64 - i as i64],
                    });
                }
            }
        }
        let table = GeneratorTable::new(gens, 1);
        let alg = Rc::new(Algebra::new(table, Rc::new(RttRules { lay })));
        Rtt { alg, lay }
    }

    /// Independent oracle: `[t_ij^(r), t_kl^(s)]` by downward recursion in `r`,
    /// from `(u−v)[t_ij(u),t_kl(v)] = t_kj(u)t_il(v) − t_kj(v)t_il(u)`.
    pub fn bracket_oracle(&self, i: usize, j: usize, r: u32, k: usize, l: usize, s: u32) -> PbwElement {
        if r == 0 || s == 0 {
            return PbwElement::zero();
        }
        let rec = self.bracket_oracle(i, j, r - 1, k, l, s + 1);
        let p = self.alg.mul(&self.lay.t(k, j, r - 1), &self.lay.t(i, l, s));
        let q = self.alg.mul(&self.lay.t(k, j, s), &self.lay.t(i, l, r - 1));
        rec.add(&p.sub(&q))
    }

    /// `t_ij(u) = δ_ij + Σ_r t_ij^(r) u^{-r}` truncated at the given order.
    pub fn t_series(&self, ring: &AlgRing, i: usize, j: usize, order: usize) -> Series<AlgRing> {
        let mut s = Series::zero(ring, order);
        s.coeffs[0] = self.lay.t(i, j, 0);
        for r in 1..=order {
            s.coeffs[r] = self.lay.t(i, j, r as u32);
        }
        s
    }
}

/// All named series of the two Gauss decompositions plus the fixed-point
/// generators, at a common truncation order.
pub struct GaussData {
    pub order: usize,
    pub t: [[Series<AlgRing>; 2]; 2],
    pub s: [[Series<AlgRing>; 2]; 2],
    pub d1: Series<AlgRing>,
    pub d2: Series<AlgRing>,
    pub e: Series<AlgRing>,
    pub f: Series<AlgRing>,
    pub sd1: Series<AlgRing>,
    pub sd2: Series<AlgRing>,
    pub se: Series<AlgRing>,
    pub sf: Series<AlgRing>,
}

impl GaussData {
    pub fn new(rtt: &Rtt, ring: &AlgRing, order: usize) -> Self {
        let t = [
            [rtt.t_series(ring, 1, 1, order), rtt.t_series(ring, 1, 2, order)],
            [rtt.t_series(ring, 2, 1, order), rtt.t_series(ring, 2, 2, order)],
        ];
        // s_ij(u) = t_1i(−u) t_1j(u) + t_2i(−u) t_2j(u)
        let smat = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let a = t[0][i].negate_arg(ring).mul(ring, &t[0][j]);
                let b = t[1][i].negate_arg(ring).mul(ring, &t[1][j]);
                a.add(ring, &b)
            })
        });
        let smat: [[Series<AlgRing>; 2]; 2] = smat;
        // Gauss: t11 = D1, t12 = D1 E, t21 = F D1, t22 = D2 + F D1 E
        let d1 = t[0][0].clone();
        let d1_inv = d1.invert(ring, &Scalar::one());
        let e = d1_inv.mul(ring, &t[0][1]);
        let f = t[1][0].mul(ring, &d1_inv);
        let d2 = t[1][1].sub(ring, &f.mul(ring, &d1).mul(ring, &e));
        // twisted Gauss: s11 = d1, s12 = d1 e, s21 = f d1, s22 = d2 + f d1 e
        let sd1 = smat[0][0].clone();
        let sd1_inv = sd1.invert(ring, &Scalar::one());
        let se = sd1_inv.mul(ring, &smat[0][1]);
        let sf = smat[1][0].mul(ring, &sd1_inv);
        let sd2 = smat[1][1].sub(ring, &sf.mul(ring, &sd1).mul(ring, &se));
        GaussData {
            order,
            t,
            s: smat,
            d1,
            d2,
            e,
            f,
            sd1,
            sd2,
            se,
            sf,
        }
    }
}

/// Bivariate truncated series in `u^{-1}, v^{-1}`: `coeffs[p][q]` multiplies
/// `u^{-p} v^{-q}`.  Only used for the quaternary relation and the symmetry.
pub struct BiSeries {
    pub coeffs: Vec<Vec<PbwElement>>,
}

impl BiSeries {
    pub fn zero(n: usize) -> Self {
        BiSeries {
            coeffs: vec![vec![PbwElement::zero(); n + 1]; n + 1],
        }
    }
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
    /// Embed `a(u) b(v)` for univariate `a`, `b`.
    pub fn outer(ring: &AlgRing, a: &Series<AlgRing>, b: &Series<AlgRing>, n: usize) -> Self {
        let mut out = Self::zero(n);
        for p in 0..=n {
            for q in 0..=n {
                out.coeffs[p][q] = ring.mul(&a.coeff(ring, p), &b.coeff(ring, q));
            }
        }
        out
    }
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for p in 0..=n {
            for q in 0..=n {
                out.coeffs[p][q] = self.coeffs[p][q].add(&other.coeffs[p][q]);
            }
        }
        out
    }
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    pub fn neg(&self) -> Self {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.neg()).collect())
                .collect(),
        }
    }
    /// Multiply by `u`; the top row in `p` is lost, so callers compare only
    /// coefficients with `p < order`.
    pub fn mul_u(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for p in 0..n {
            for q in 0..=n {
                out.coeffs[p][q] = self.coeffs[p + 1][q].clone();
            }
        }
        out
    }
    /// Multiply by `v`; the top row in `q` is lost.
    pub fn mul_v(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for p in 0..=n {
            for q in 0..n {
                out.coeffs[p][q] = self.coeffs[p][q + 1].clone();
            }
        }
        out
    }
    /// First `(p, q)` with `p, q ≤ cap` where the two differ.
    pub fn eq_upto(&self, other: &Self, cap: usize) -> Option<(usize, usize)> {
        for p in 0..=cap {
            for q in 0..=cap {
                if !self.coeffs[p][q].sub(&other.coeffs[p][q]).is_zero() {
                    return Some((p, q));
                }
            }
        }
        None
    }
}

fn comm_bi(ring: &AlgRing, a: &Series<AlgRing>, b: &Series<AlgRing>, n: usize) -> BiSeries {
    let ab = BiSeries::outer(ring, a, b, n);
    let mut ba = BiSeries::zero(n);
    for p in 0..=n {
        for q in 0..=n {
            ba.coeffs[p][q] = ring.mul(&b.coeff(ring, q), &a.coeff(ring, p));
        }
    }
    ab.sub(&ba)
}

/// The gl(2) RTT suite: closed form vs oracle, the quaternary reflection
/// relation, the symmetry, determinants, and coproduct group-likeness.
pub fn check_rtt(order: usize) -> Vec<CheckItem> {
    let modes = 2 * order as u32 + 2;
    let rtt = Rtt::new(modes);
    let ring = AlgRing { alg: rtt.alg.clone() };
    let mut items = Vec::new();

    items.push(run_item("rtt-closed-vs-oracle", "eq:RTT", || {
        let win = 8u32;
        let mut bad = 0;
        let mut count = 0;
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    for l in 1..=2 {
                        for r in 1..=win {
                            for s in 1..=(win - r).max(1) {
                                if r + s > win {
                                    continue;
                                }
                                count += 1;
                                let closed = rtt.alg.commutator(
                                    &rtt.lay.t(i, j, r),
                                    &rtt.lay.t(k, l, s),
                                );
                                let oracle = rtt.bracket_oracle(i, j, r, k, l, s);
                                if !closed.sub(&oracle).is_zero() {
                                    bad += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        (bad == 0, format!("{count} pairs with mode sum ≤ {win}, {bad} mismatches"))
    }));

    let n = order;
    let gd = GaussData::new(&rtt, &ring, n);
    // two extra orders for the bivariate checks, which lose two coefficient
    // rows to the (u²−v²) and 2u prefactors
    let gdq = GaussData::new(&rtt, &ring, n + 2);

    items.push(run_item("s-quaternary", "quater u", || {
        // (u²−v²)[s_ij(u), s_kl(v)] =
        //   (u+v)(s_kj(u)s_il(v) − s_kj(v)s_il(u))
        //   − (u−v)(s_ik(u)s_jl(v) − s_ki(v)s_lj(u))
        //   + s_ki(u)s_jl(v) − s_ki(v)s_jl(u)
        let s = &gdq.s;
        let nq = n + 2;
        let mut bad = 0;
        let mut count = 0;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        count += 1;
                        let c = comm_bi(&ring, &s[i][j], &s[k][l], nq);
                        let lhs = c.mul_u().mul_u().sub(&c.mul_v().mul_v());
                        let fwd = |a: usize, b: usize, cc: usize, d: usize| {
                            BiSeries::outer(&ring, &s[a][b], &s[cc][d], nq)
                        };
                        let rev = |a: usize, b: usize, cc: usize, d: usize| {
                            // s_ab(v) s_cd(u) as a function of (p in u, q in v)
                            let mut out = BiSeries::zero(nq);
                            for p in 0..=nq {
                                for q in 0..=nq {
                                    out.coeffs[p][q] = ring.mul(
                                        &s[a][b].coeff(&ring, q),
                                        &s[cc][d].coeff(&ring, p),
                                    );
                                }
                            }
                            out
                        };
                        let term1 = {
                            let d = fwd(k, j, i, l).sub(&rev(k, j, i, l));
                            d.mul_u().add(&d.mul_v())
                        };
                        let term2 = {
                            let d = fwd(i, k, j, l).sub(&rev(k, i, l, j));
                            d.mul_u().sub(&d.mul_v())
                        };
                        let term3 = fwd(k, i, j, l).sub(&rev(k, i, j, l));
                        let rhs = term1.sub(&term2).add(&term3);
                        if lhs.eq_upto(&rhs, n).is_some() {
                            bad += 1;
                        }
                    }
                }
            }
        }
        (bad == 0, format!("{count} index quadruples to bi-order {n}, {bad} failures"))
    }));

    items.push(run_item("s-symmetry", "sym u", || {
        // 2u·s_ji(−u) = 2u·s_ij(u) + s_ij(u) − s_ij(−u)
        let mut bad = 0;
        for i in 0..2 {
            for j in 0..2 {
                let sij = &gdq.s[i][j];
                let sijm = sij.negate_arg(&ring);
                let sjim = gdq.s[j][i].negate_arg(&ring);
                let lhs = sjim.mul_by_u(&ring).scale(&ring, &Scalar::from_int(2));
                let rhs = sij
                    .mul_by_u(&ring)
                    .scale(&ring, &Scalar::from_int(2))
                    .add(&ring, &sij.sub(&ring, &sijm));
                if (0..=n).any(|r| {
                    !ring.is_zero(&ring.sub(&lhs.coeff(&ring, r), &rhs.coeff(&ring, r)))
                }) {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("4 entries to order {n}, {bad} failures"))
    }));

    // quantum determinant: qdet(u) = t11(u) t22(u−1) − t21(u) t12(u−1)
    let one_rat = BigRational::from_integer(1.into());
    let shift = |s: &Series<AlgRing>| s.shift_arg(&ring, &-one_rat.clone());
    let qdet = gd.t[0][0]
        .mul(&ring, &shift(&gd.t[1][1]))
        .sub(&ring, &gd.t[1][0].mul(&ring, &shift(&gd.t[0][1])));

    items.push(run_item("qdet-gauss", "eq:qdet", || {
        let rhs = gd.d1.mul(&ring, &shift(&gd.d2));
        match (0..=n).find(|&r| {
            !ring.is_zero(&ring.sub(&qdet.coeff(&ring, r), &rhs.coeff(&ring, r)))
        }) {
            None => (true, format!("orders 0..={n} agree")),
            Some(r) => (false, format!("first mismatch at order {r}")),
        }
    }));

    items.push(run_item("qdet-central", "eq:qdet", || {
        let mut bad = 0;
        let mut count = 0;
        for i in 1..=2 {
            for j in 1..=2 {
                for r in 1..=n as u32 {
                    count += 1;
                    let g = rtt.lay.t(i, j, r);
                    if (0..=n).any(|m| !rtt.alg.commutator(&g, &qdet.coeff(&ring, m)).is_zero()) {
                        bad += 1;
                    }
                }
            }
        }
        (bad == 0, format!("{count} generators to order {n}, {bad} non-commuting"))
    }));

    // S-determinant: sdet(u) = s11(−u) s22(u−1) − s12(−u) s12(u−1)
    let sdet = gd.s[0][0]
        .negate_arg(&ring)
        .mul(&ring, &shift(&gd.s[1][1]))
        .sub(&ring, &gd.s[0][1].negate_arg(&ring).mul(&ring, &shift(&gd.s[0][1])));

    items.push(run_item("sdet-gauss", "eq:sdet", || {
        let rhs = gd.sd1.mul(&ring, &shift(&gd.sd2));
        match (0..=n).find(|&r| {
            !ring.is_zero(&ring.sub(&sdet.coeff(&ring, r), &rhs.coeff(&ring, r)))
        }) {
            None => (true, format!("orders 0..={n} agree")),
            Some(r) => (false, format!("first mismatch at order {r}")),
        }
    }));

    items.push(run_item("sdet-qdet", "eq:s=qdet", || {
        // sdet(u) = qdet(u) qdet(−u+1) = qdet(u) qdet(−(u−1))
        let q2 = qdet.shift_arg(&ring, &one_rat).negate_arg(&ring);
        let rhs = qdet.mul(&ring, &q2);
        match (0..=n).find(|&r| {
            !ring.is_zero(&ring.sub(&sdet.coeff(&ring, r), &rhs.coeff(&ring, r)))
        }) {
            None => (true, format!("orders 0..={n} agree")),
            Some(r) => (false, format!("first mismatch at order {r}")),
        }
    }));

    items.push(run_item("sdet-even", "eq:sdet", || {
        // sdet(u + ½) is even in u
        let half = BigRational::new(1.into(), 2.into());
        let sh = sdet.shift_arg(&ring, &half);
        let diff = sh.sub(&ring, &sh.negate_arg(&ring));
        match (0..=n).find(|&r| !ring.is_zero(&diff.coeff(&ring, r))) {
            None => (true, format!("orders 0..={n} agree")),
            Some(r) => (false, format!("odd part appears at order {r}")),
        }
    }));

    // ---- coproducts ------------------------------------------------------
    let alg2 = Rc::new(tensor_square(rtt.alg.clone()));
    let ring2 = AlgRing { alg: alg2.clone() };
    let ngen = 4 * modes;
    let delta_gen = |g: u32| -> PbwElement {
        // Δ(t_ij^(r)) = Σ_a Σ_{p+q=r} t_ia^(p) ⊗ t_aj^(q)
        let (i, j, r) = rtt.lay.split(g);
        let mut out = PbwElement::zero();
        for a in 1..=2usize {
            for p in 0..=r {
                out = out.add(&tensor_elem(
                    &alg2,
                    &rtt.lay.t(i, a, p),
                    &rtt.lay.t(a, j, r - p),
                ));
            }
        }
        out
    };
    let delta = |e: &PbwElement| -> PbwElement {
        let mut out = PbwElement::zero();
        for (w, c) in &e.terms {
            let factors: Vec<PbwElement> = w.iter().map(|&g| delta_gen(g)).collect();
            let refs: Vec<&PbwElement> = factors.iter().collect();
            out = out.add(&alg2.product(&refs).scale(c));
        }
        out
    };
    let _ = ngen;

    items.push(run_item("delta-homomorphism", "eq:copro-R1", || {
        // Δ respects the straightening rule on a window of generator pairs
        let mut bad = 0;
        let mut count = 0;
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    for l in 1..=2 {
                        for r in 1..=2u32 {
                            for s in 1..=2u32 {
                                count += 1;
                                let a = rtt.lay.t(i, j, r);
                                let b = rtt.lay.t(k, l, s);
                                let lhs = alg2.commutator(&delta(&a), &delta(&b));
                                let rhs = delta(&rtt.alg.commutator(&a, &b));
                                if !lhs.sub(&rhs).is_zero() {
                                    bad += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        (bad == 0, format!("{count} pairs, {bad} failures"))
    }));

    items.push(run_item("qdet-grouplike", "eq:copro-R1", || {
        // Δ(qdet^(r)) = Σ_{p+q=r} qdet^(p) ⊗ qdet^(q)
        let mut bad = 0;
        for r in 0..=n {
            let lhs = delta(&qdet.coeff(&ring, r));
            let mut rhs = PbwElement::zero();
            for p in 0..=r {
                rhs = rhs.add(&tensor_elem(
                    &alg2,
                    &qdet.coeff(&ring, p),
                    &qdet.coeff(&ring, r - p),
                ));
            }
            if !lhs.sub(&rhs).is_zero() {
                bad += 1;
            }
        }
        (bad == 0, format!("orders 0..={n}, {bad} failures"))
    }));

    items.push(run_item("s-coprod", "s-copro", || {
        // Δ(s_ij(u)) = Σ_{a,b} s_ab(u) ⊗ t_ai(−u) t_bj(u)
        let ts2: Vec<Vec<Series<AlgRing>>> = (1..=2)
            .map(|i| {
                (1..=2)
                    .map(|j| {
                        let mut s = Series::zero(&ring2, n);
                        s.coeffs[0] = rtt.lay.t(i, j, 0);
                        for r in 1..=n {
                            // right tensor slot
                            s.coeffs[r] = tensor_elem(
                                &alg2,
                                &PbwElement::unit(),
                                &rtt.lay.t(i, j, r as u32),
                            );
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        let lift_left = |s: &Series<AlgRing>| -> Series<AlgRing> {
            Series {
                coeffs: s
                    .coeffs
                    .iter()
                    .map(|c| tensor_elem(&alg2, c, &PbwElement::unit()))
                    .collect(),
            }
        };
        let mut bad = 0;
        for i in 0..2usize {
            for j in 0..2usize {
                let lhs = Series::<AlgRing> {
                    coeffs: gd.s[i][j].coeffs.iter().map(|c| delta(c)).collect(),
                };
                let mut rhs = Series::zero(&ring2, n);
                for a in 0..2usize {
                    for b in 0..2usize {
                        let tail = ts2[a][i]
                            .negate_arg(&ring2)
                            .mul(&ring2, &ts2[b][j]);
                        let term = lift_left(&gd.s[a][b]).mul(&ring2, &tail);
                        rhs = rhs.add(&ring2, &term);
                    }
                }
                if (0..=n).any(|r| {
                    !ring2.is_zero(&ring2.sub(&lhs.coeff(&ring2, r), &rhs.coeff(&ring2, r)))
                }) {
                    bad += 1;
                }
            }
        }
        (bad == 0, format!("4 entries to order {n}, {bad} failures"))
    }));

    items.push(run_item("sdet-grouplike", "eq:copro-R2", || {
        // Δ(sdet^(r)) = Σ_{p+q=r} sdet^(p) ⊗ sdet^(q)
        let mut bad = 0;
        for r in 0..=n {
            let lhs = delta(&sdet.coeff(&ring, r));
            let mut rhs = PbwElement::zero();
            for p in 0..=r {
                rhs = rhs.add(&tensor_elem(
                    &alg2,
                    &sdet.coeff(&ring, p),
                    &sdet.coeff(&ring, r - p),
                ));
            }
            if !lhs.sub(&rhs).is_zero() {
                bad += 1;
            }
        }
        (bad == 0, format!("orders 0..={n}, {bad} failures"))
    }));

    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn closed_form_matches_oracle_small() {
        let rtt = Rtt::new(8);
        for (i, j, r, k, l, s) in [
            (1, 1, 1, 2, 2, 1),
            (1, 2, 2, 2, 1, 1),
            (2, 1, 3, 1, 2, 2),
            (1, 1, 2, 1, 2, 3),
        ] {
            let a = rtt.alg.commutator(&rtt.lay.t(i, j, r), &rtt.lay.t(k, l, s));
            let b = rtt.bracket_oracle(i, j, r, k, l, s);
            assert!(a.sub(&b).is_zero(), "mismatch at t{i}{j}({r}), t{k}{l}({s})");
        }
    }

    #[test]
    fn rtt_suite_small_window() {
        for item in check_rtt(4) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }
}
