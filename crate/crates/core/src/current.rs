//! Truncated current algebras `U(g[z]/z^{D+1})` on the PBW engine, the
//! twisted generators
//!
//! ```text
//! 𝗁_{i,2r+1} = 2ξ_i z^{2r+1},    𝖻_{i,r} = (x_i^+ − (−1)^r x_i^-) z^r,
//! ```
//!
//! and the two classical check suites: the full presentation of the fixed-point
//! current algebra and the chain of identities that derives the closed
//! commutation rules from the minimalistic generators.

use crate::pbw::{Algebra, BracketRules, GenInfo, GeneratorTable, PbwElement, Word};
use crate::report::{run_item, CheckItem, Mutation};
use crate::rootdata::{ChevalleyData, GElem};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::rc::Rc;

/// Shared layout of a truncated current algebra.
pub struct CurrentInfo {
    pub cd: Rc<ChevalleyData>,
    pub zmax: u32,
    /// Table-position → (basis element, z-power).
    pub elems: Vec<(GElem, u32)>,
    pub index: HashMap<(GElem, u32), u32>,
}

struct CurrentRules {
    info: Rc<CurrentInfo>,
}

impl BracketRules for CurrentRules {
    fn bracket(&self, _alg: &Algebra, hi: u32, lo: u32) -> PbwElement {
        let (g1, z1) = self.info.elems[hi as usize];
        let (g2, z2) = self.info.elems[lo as usize];
        let z = z1 + z2;
        if z > self.info.zmax {
            // Quotient by the ideal z^{zmax+1}·g[z].
            return PbwElement::zero();
        }
        let mut out = PbwElement::zero();
        for (g, c) in self.info.cd.bracket_basis(g1, g2) {
            let idx = self.info.index[&(g, z)];
            let mut w = Word::new();
            w.push(idx);
            out.add_term(w, &c);
        }
        out
    }
}

pub struct CurrentAlgebra {
    pub info: Rc<CurrentInfo>,
    pub alg: Rc<Algebra>,
}

impl CurrentAlgebra {
    pub fn new(cd: Rc<ChevalleyData>, zmax: u32) -> Self {
        // Class order: negative root vectors < Cartan < positive root vectors;
        // within a class by root height/index, then z-power.
        let mut elems: Vec<(GElem, u32)> = Vec::new();
        for g in cd.basis() {
            for z in 0..=zmax {
                elems.push((g, z));
            }
        }
        let index: HashMap<(GElem, u32), u32> = elems
            .iter()
            .enumerate()
            .map(|(k, e)| (*e, k as u32))
            .collect();
        let gens: Vec<GenInfo> = elems
            .iter()
            .map(|(g, z)| GenInfo {
                name: format!("{:?}@z^{}", g, z),
                degree: *z,
                weight: cd.weight(*g),
            })
            .collect();
        let table = GeneratorTable::new(gens, cd.rs.rank);
        let info = Rc::new(CurrentInfo {
            cd,
            zmax,
            elems,
            index,
        });
        let alg = Rc::new(Algebra::new(
            table,
            Rc::new(CurrentRules { info: info.clone() }),
        ));
        CurrentAlgebra { info, alg }
    }

    pub fn gen(&self, g: GElem, z: u32) -> PbwElement {
        PbwElement::gen(self.info.index[&(g, z)])
    }

    pub fn from_gvec(&self, v: &crate::rootdata::GVec, z: u32) -> PbwElement {
        let mut out = PbwElement::zero();
        for (g, c) in v {
            let mut w = Word::new();
            w.push(self.info.index[&(*g, z)]);
            out.add_term(w, c);
        }
        out
    }

    /// 𝗁_{i,r} for odd r ≥ 1.
    pub fn h(&self, i: usize, r: u32) -> PbwElement {
        assert!(r % 2 == 1, "h is only defined at odd levels");
        self.gen(GElem::Cart(i), r).scale(&Scalar::from_int(2))
    }

    /// 𝗁_{i,r} extended by the conventions 𝗁_{i,-1} = 1 and 𝗁_{i,even} = 0.
    pub fn h_ext(&self, i: usize, r: i64) -> PbwElement {
        if r == -1 {
            PbwElement::unit()
        } else if r < -1 || r % 2 == 0 {
            PbwElement::zero()
        } else {
            self.h(i, r as u32)
        }
    }

    /// 𝖻_{i,r} = (x_i^+ − (−1)^r x_i^-) z^r.
    pub fn b(&self, i: usize, r: u32) -> PbwElement {
        let a = self.info.cd.rs.simple_index(i);
        let sign = if r % 2 == 0 { -1 } else { 1 };
        self.gen(GElem::Pos(a), r)
            .add(&self.gen(GElem::Neg(a), r).scale(&Scalar::from_int(sign)))
    }

    /// The twisted involution ω̌: x z^r ↦ (−1)^r ω(x) z^r, as an algebra map.
    pub fn apply_omega(&self, e: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (w, c) in &e.terms {
            let factors: Vec<PbwElement> = w
                .iter()
                .map(|&gi| {
                    let (g, z) = self.info.elems[gi as usize];
                    let mut v = PbwElement::zero();
                    for (h, k) in self.info.cd.omega(&{
                        let mut gv = crate::rootdata::GVec::new();
                        crate::rootdata::gvec_add(&mut gv, g, Scalar::one());
                        gv
                    }) {
                        let sign = if z % 2 == 0 { 1 } else { -1 };
                        let mut word = Word::new();
                        word.push(self.info.index[&(h, z)]);
                        v.add_term(word, &(k * Scalar::from_int(sign)));
                    }
                    v
                })
                .collect();
            let refs: Vec<&PbwElement> = factors.iter().collect();
            out = out.add(&self.alg.product(&refs).scale(c));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.info.cd.rs.rank
    }

    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.info.cd.rs.gram[i][j]
    }
}

/// Convenience: U(g) is the z-degree-0 current algebra.
pub fn lie_algebra_ug(cd: &Rc<ChevalleyData>) -> Algebra {
    let ca = CurrentAlgebra::new(cd.clone(), 0);
    Rc::try_unwrap(ca.alg).ok().expect("fresh algebra is unshared")
}

fn residual_detail(e: &PbwElement, instances: usize) -> (bool, String) {
    if e.is_zero() {
        (true, format!("{instances} instances, residual 0"))
    } else {
        (false, format!("{instances} instances, residual has {} monomials", e.len()))
    }
}

/// Accumulates residuals of many instances of one relation family.
struct Family {
    residual: PbwElement,
    count: usize,
}

impl Family {
    fn new() -> Self {
        Family {
            residual: PbwElement::zero(),
            count: 0,
        }
    }
    /// Record one instance; keeps the first nonzero residual.
    fn push(&mut self, r: PbwElement) {
        self.count += 1;
        if self.residual.is_zero() && !r.is_zero() {
            self.residual = r;
        }
    }
    fn done(self) -> (bool, String) {
        residual_detail(&self.residual, self.count)
    }
}

/// Check the full presentation of the fixed-point current algebra inside the
/// truncation `U(g[z]/z^{D+1})`, instantiated at all index tuples whose two
/// sides are exactly representable at z-degree ≤ D.
pub fn check_presentation(cd: &Rc<ChevalleyData>, d: u32, mutation: Option<&Mutation>) -> Vec<CheckItem> {
    let ca = CurrentAlgebra::new(cd.clone(), d);
    let n = ca.rank();
    let alg = ca.alg.clone();
    let mut items = Vec::new();

    items.push(run_item("tchhf", "tchhf", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                for r in (1..=d as i64).step_by(2) {
                    for s in (1..=d as i64 - r).step_by(2) {
                        fam.push(alg.commutator(&ca.h(i, r as u32), &ca.h(j, s as u32)));
                    }
                }
            }
        }
        fam.done()
    }));

    items.push(run_item("tchbf", "tchbf", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                for r in (1..=d as i64).step_by(2) {
                    for s in 0..=(d as i64 - r) {
                        let lhs = alg.commutator(&ca.h(i, r as u32), &ca.b(j, s as u32));
                        let rhs = ca
                            .b(j, (r + s) as u32)
                            .scale(&Scalar::from_int(2 * ca.pairing(i, j)));
                        fam.push(lhs.sub(&rhs));
                    }
                }
            }
        }
        fam.done()
    }));

    items.push(run_item("tcbbf", "tcbbf", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                for r in 0..d as i64 {
                    for s in 0..=(d as i64 - r - 1) {
                        let lhs = alg
                            .commutator(&ca.b(i, r as u32 + 1), &ca.b(j, s as u32))
                            .sub(&alg.commutator(&ca.b(i, r as u32), &ca.b(j, s as u32 + 1)));
                        let rhs = if i == j {
                            let sgn = ((-1i64).pow(r as u32 % 2) + (-1i64).pow(s as u32 % 2)) * -1;
                            ca.h_ext(i, r + s + 1).scale(&Scalar::from_int(sgn))
                        } else {
                            PbwElement::zero()
                        };
                        fam.push(lhs.sub(&rhs));
                    }
                }
            }
        }
        fam.done()
    }));

    // Serre relations at z-degree 0, split by Cartan entry.
    let ad = |x: &PbwElement, y: &PbwElement, times: usize| {
        let mut acc = y.clone();
        for _ in 0..times {
            acc = alg.commutator(x, &acc);
        }
        acc
    };
    items.push(run_item("tcfSerre0f", "tcfSerre0f", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && cd.rs.cartan[i][j] == 0 {
                    fam.push(alg.commutator(&ca.b(i, 0), &ca.b(j, 0)));
                }
            }
        }
        fam.done()
    }));
    items.push(run_item("tcfSerre1f", "tcfSerre1f", || {
        let mut fam = Family::new();
        let coeff = Mutation::applies(mutation, "tcfSerre1f").unwrap_or_else(|| Scalar::from_int(-1));
        for i in 0..n {
            for j in 0..n {
                if i != j && cd.rs.cartan[i][j] == -1 {
                    let lhs = ad(&ca.b(i, 0), &ca.b(j, 0), 2);
                    let rhs = ca.b(j, 0).scale(&(coeff.clone() * Scalar::from_int(cd.rs.d[i])));
                    fam.push(lhs.sub(&rhs));
                }
            }
        }
        fam.done()
    }));
    items.push(run_item("tcfSerre2f", "tcfSerre2f", || {
        let mut fam = Family::new();
        let coeff = Mutation::applies(mutation, "tcfSerre2f").unwrap_or_else(|| Scalar::from_int(-4));
        for i in 0..n {
            for j in 0..n {
                if i != j && cd.rs.cartan[i][j] == -2 {
                    let lhs = ad(&ca.b(i, 0), &ca.b(j, 0), 3);
                    let rhs = alg
                        .commutator(&ca.b(i, 0), &ca.b(j, 0))
                        .scale(&(coeff.clone() * Scalar::from_int(cd.rs.d[i])));
                    fam.push(lhs.sub(&rhs));
                }
            }
        }
        fam.done()
    }));
    items.push(run_item("tcfSerre3f", "tcfSerre3f", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && cd.rs.cartan[i][j] == -3 {
                    let lhs = ad(&ca.b(i, 0), &ca.b(j, 0), 4);
                    let di = cd.rs.d[i];
                    let rhs = ad(&ca.b(i, 0), &ca.b(j, 0), 2)
                        .scale(&Scalar::from_int(-10 * di))
                        .add(&ca.b(j, 0).scale(&Scalar::from_int(-9 * di * di)));
                    fam.push(lhs.sub(&rhs));
                }
            }
        }
        fam.done()
    }));

    // ω̌ fixes the twisted generators and is an algebra involution.
    items.push(run_item("omega-fixed", "eq:omega-check", || {
        let mut fam = Family::new();
        for i in 0..n {
            for r in 0..=d {
                fam.push(ca.apply_omega(&ca.b(i, r)).sub(&ca.b(i, r)));
            }
            for r in (1..=d as i64).step_by(2) {
                fam.push(ca.apply_omega(&ca.h(i, r as u32)).sub(&ca.h(i, r as u32)));
            }
            // involution on a sample product
            let p = alg.mul(&ca.b(i, 0), &ca.b(i, 1.min(d)));
            fam.push(ca.apply_omega(&ca.apply_omega(&p)).sub(&p));
        }
        fam.done()
    }));

    // Weight symmetry of the generators: the ±α_i components of 𝖻_{i,r} have
    // coefficients of equal magnitude.
    items.push(run_item("weight-symmetry", "by-def", || {
        let mut ok = true;
        let mut count = 0;
        for i in 0..n {
            for r in 0..=d {
                let b = ca.b(i, r);
                count += 1;
                let mut mags: Vec<Scalar> = Vec::new();
                for (w, c) in &b.terms {
                    let _ = w;
                    mags.push(c.clone());
                }
                if mags.len() != 2 {
                    ok = false;
                } else {
                    let same = mags[0] == mags[1] || mags[0] == -mags[1].clone();
                    ok &= same;
                }
            }
        }
        (ok, format!("{count} generators checked"))
    }));

    items
}

/// Identity chain from the minimalistic generators to the closed commutation
/// rules, instantiated in `U(g[z]/z^{W+1})` with `W = max(D, 8)` so the whole
/// ℓ ≤ 8 induction window of the final three families is exact.
pub fn check_derivation_chain(cd: &Rc<ChevalleyData>, d: u32) -> Vec<CheckItem> {
    let w = d.max(8);
    let ca = CurrentAlgebra::new(cd.clone(), w);
    let n = ca.rank();
    let alg = ca.alg.clone();
    let mut items = Vec::new();

    // bhdef: the recursions 𝖻_{i,r+1} = ½(α_i,α_i)^{-1}[𝗁_{i,1},𝖻_{i,r}] and
    // 𝗁_{i,2r+1} = [𝖻_{i,0},𝖻_{i,2r+1}] reproduce the defined generators.
    items.push(run_item("bhdef", "bhdef", || {
        let mut fam = Family::new();
        for i in 0..n {
            let aii = ca.pairing(i, i);
            for r in 0..w {
                let lhs = alg
                    .commutator(&ca.h(i, 1), &ca.b(i, r))
                    .scale(&Scalar::from_ratio(1, 2 * aii));
                fam.push(lhs.sub(&ca.b(i, r + 1)));
            }
            for r in (1..=w as i64).step_by(2) {
                let lhs = alg.commutator(&ca.b(i, 0), &ca.b(i, r as u32));
                fam.push(lhs.sub(&ca.h(i, r as u32)));
            }
        }
        fam.done()
    }));

    items.push(run_item("bi0bi1=hi1", "bi0bi1=hi1", || {
        let mut fam = Family::new();
        for i in 0..n {
            fam.push(alg.commutator(&ca.b(i, 0), &ca.b(i, 1)).sub(&ca.h(i, 1)));
        }
        fam.done()
    }));

    items.push(run_item("bbhelper", "bbhelper", || {
        let mut fam = Family::new();
        for i in 0..n {
            for r in 0..=(w as i64 - 1) / 2 {
                for s in 0..=r {
                    let lhs = alg.commutator(&ca.b(i, (r + s + 1) as u32), &ca.b(i, (r - s) as u32));
                    let sgn = (-1i64).pow(((r + s + 1) % 2) as u32);
                    fam.push(lhs.sub(&ca.h(i, (2 * r + 1) as u32).scale(&Scalar::from_int(sgn))));
                }
            }
        }
        fam.done()
    }));

    items.push(run_item("extra-verified", "extra-verified", || {
        let mut fam = Family::new();
        for i in 0..n {
            let inner = alg.commutator(&ca.h(i, 1), &ca.b(i, 1));
            let mid = alg.commutator(&ca.b(i, 1), &inner);
            fam.push(alg.commutator(&ca.h(i, 1), &mid));
        }
        fam.done()
    }));

    items.push(run_item("hi1bjr", "hi1bjr", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                for r in 0..w {
                    let lhs = alg.commutator(&ca.h(i, 1), &ca.b(j, r));
                    let rhs = ca.b(j, r + 1).scale(&Scalar::from_int(2 * ca.pairing(i, j)));
                    fam.push(lhs.sub(&rhs));
                }
            }
        }
        fam.done()
    }));

    items.push(run_item("bi0bi2=0", "bi0bi2=0", || {
        let mut fam = Family::new();
        for i in 0..n {
            fam.push(alg.commutator(&ca.b(i, 0), &ca.b(i, 2)));
        }
        fam.done()
    }));

    items.push(run_item("bi1bi2=hi3", "bi1bi2=hi3", || {
        let mut fam = Family::new();
        for i in 0..n {
            let lhs = alg.commutator(&ca.b(i, 1), &ca.b(i, 2));
            fam.push(lhs.add(&ca.h(i, 3)));
        }
        fam.done()
    }));

    items.push(run_item("bibi-shift", "bibi-shift", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for r in 0..w as i64 {
                    for s in 0..=(w as i64 - r - 1) {
                        let lhs = alg
                            .commutator(&ca.b(i, r as u32 + 1), &ca.b(j, s as u32))
                            .sub(&alg.commutator(&ca.b(i, r as u32), &ca.b(j, s as u32 + 1)));
                        fam.push(lhs);
                    }
                }
            }
        }
        fam.done()
    }));

    items.push(run_item("hi3bjr", "hi3bjr", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for r in 0..=(w as i64 - 3) {
                    let lhs = alg.commutator(&ca.h(i, 3), &ca.b(j, r as u32));
                    let rhs = ca
                        .b(j, (r + 3) as u32)
                        .scale(&Scalar::from_int(2 * ca.pairing(i, j)));
                    fam.push(lhs.sub(&rhs));
                }
            }
        }
        fam.done()
    }));

    items.push(run_item("bi2bi2bj0", "bi2bi2bj0", || {
        let mut fam = Family::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || cd.rs.cartan[i][j] != -1 {
                    continue;
                }
                let di = cd.rs.d[i];
                for s in 0..=w {
                    let inner = alg.commutator(&ca.b(i, 0), &ca.b(j, s));
                    let lhs = alg.commutator(&ca.b(i, 0), &inner);
                    fam.push(lhs.sub(&ca.b(j, s).scale(&Scalar::from_int(-di))));
                }
                let inner = alg.commutator(&ca.b(i, 2), &ca.b(j, 0));
                let lhs = alg.commutator(&ca.b(i, 2), &inner);
                fam.push(lhs.sub(&ca.b(j, 4).scale(&Scalar::from_int(-di))));
            }
        }
        fam.done()
    }));

    // 𝗁_{i,r} for the closing families, defined through the recursion.
    let hh = |i: usize, r: u32| -> PbwElement {
        if r == 0 {
            panic!("h_0 undefined");
        }
        alg.commutator(&ca.b(i, 0), &ca.b(i, r))
    };

    items.push(run_item("hi4", "hi4", || {
        let mut fam = Family::new();
        for i in 0..n {
            fam.push(alg.commutator(&ca.h(i, 1), &ca.h(i, 3)));
            fam.push(hh(i, 4));
            fam.push(alg.commutator(&ca.b(i, 1), &ca.b(i, 3)));
        }
        fam.done()
    }));

    items.push(run_item("todo1", "todo1", || {
        let mut fam = Family::new();
        for i in 0..n {
            for r in 1..=7u32 {
                for s in 1..=(8 - r) {
                    fam.push(alg.commutator(&hh(i, r), &hh(i, s)));
                }
            }
            for p in 1..=4u32 {
                fam.push(hh(i, 2 * p));
            }
        }
        fam.done()
    }));

    items.push(run_item("todo2", "todo2", || {
        let mut fam = Family::new();
        for i in 0..n {
            let aii = ca.pairing(i, i);
            for r in 1..=7u32 {
                for s in 0..=(8 - r - 1) {
                    let lhs = alg.commutator(&hh(i, r), &ca.b(i, s));
                    // 𝗁 vanishes at even levels, so the right side uses the
                    // extended convention through the recursion value itself:
                    let rhs = if r % 2 == 1 {
                        ca.b(i, r + s).scale(&Scalar::from_int(2 * aii))
                    } else {
                        PbwElement::zero()
                    };
                    fam.push(lhs.sub(&rhs));
                }
            }
        }
        fam.done()
    }));

    items.push(run_item("todo3", "todo3", || {
        let mut fam = Family::new();
        for i in 0..n {
            for r in 0..=8u32 {
                for s in 0..=(8 - r) {
                    if r + s == 0 {
                        continue;
                    }
                    let lhs = alg.commutator(&ca.b(i, r), &ca.b(i, s));
                    let sgn = (-1i64).pow(r % 2);
                    let rhs = if (r + s) % 2 == 1 {
                        ca.h(i, r + s).scale(&Scalar::from_int(sgn))
                    } else {
                        PbwElement::zero()
                    };
                    fam.push(lhs.sub(&rhs));
                }
            }
        }
        fam.done()
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
    fn a1_presentation_and_chain() {
        let cd = chev("A1");
        for item in check_presentation(&cd, 6, None) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
        for item in check_derivation_chain(&cd, 6) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }

    #[test]
    fn b2_presentation() {
        let cd = chev("B2");
        for item in check_presentation(&cd, 5, None) {
            assert_eq!(item.status, Status::Pass, "{}: {}", item.id, item.detail);
        }
    }

    #[test]
    fn mutated_serre_fails_for_c2() {
        let cd = chev("C2");
        let m = Mutation::parse("tcfSerre2f:-5").unwrap();
        let items = check_presentation(&cd, 2, Some(&m));
        let serre2 = items.iter().find(|i| i.id == "tcfSerre2f").unwrap();
        assert_eq!(serre2.status, Status::Fail);
        // and everything else still passes
        for item in items.iter().filter(|i| i.id != "tcfSerre2f") {
            assert_eq!(item.status, Status::Pass, "{}", item.id);
        }
    }

    #[test]
    fn g2_serre3_holds() {
        let cd = chev("G2");
        let items = check_presentation(&cd, 3, None);
        let serre3 = items.iter().find(|i| i.id == "tcfSerre3f").unwrap();
        assert_eq!(serre3.status, Status::Pass, "{}", serre3.detail);
    }
}
