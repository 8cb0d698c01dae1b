//! Acceptance gate: one test per top-level criterion, each printing a single
//! pass/fail line.  Run with `cargo test --test acceptance -- --nocapture` to
//! see the lines; each test also asserts its criterion.

use std::rc::Rc;
use std::time::{Duration, Instant};

use tyv::current::{check_derivation_chain, check_presentation};
use tyv::fragment::{check_casimir, check_embedding};
use tyv::rank1::bridge::check_bridge;
use tyv::rank1::drinfeld::check_rank1;
use tyv::rank1::rtt::check_rtt;
use tyv::report::{CheckItem, Mutation, Status};
use tyv::rootdata::{ChevalleyData, LieType, RootSystem};

fn cd_for(t: &str) -> Rc<ChevalleyData> {
    let lt: LieType = t.parse().unwrap();
    ChevalleyData::build(RootSystem::build(lt))
}

fn all_pass(items: &[CheckItem]) -> bool {
    items.iter().all(|i| i.status == Status::Pass)
}

fn failing(items: &[CheckItem]) -> Vec<String> {
    items
        .iter()
        .filter(|i| i.status != Status::Pass)
        .map(|i| format!("{} ({})", i.id, i.detail))
        .collect()
}

fn verdict(name: &str, ok: bool, elapsed: Duration, budget: Duration) {
    let within = elapsed <= budget;
    println!(
        "criterion {name}: {} ({:.1?} of {:.0?} budget)",
        if ok && within { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    assert!(ok, "criterion {name}: checks failed");
    assert!(within, "criterion {name}: exceeded time budget ({elapsed:?})");
}

const CLASSICAL_TYPES: [&str; 9] = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"];
const EMBEDDING_TYPES: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"];

#[test]
fn criterion_1_root_data() {
    let start = Instant::now();
    let mut ok = true;
    for t in CLASSICAL_TYPES {
        let cd = cd_for(t);
        if cd.check_jacobi() > 0 || cd.check_eta_symmetries() > 0 {
            println!("  root data failure for {t}");
            ok = false;
        }
    }
    verdict(
        "1 root-data",
        ok,
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_2_classical() {
    let start = Instant::now();
    let mut ok = true;
    for t in CLASSICAL_TYPES {
        let t0 = Instant::now();
        let cd = cd_for(t);
        let mut items = check_presentation(&cd, 6, None);
        items.extend(check_derivation_chain(&cd, 6));
        if !all_pass(&items) {
            println!("  classical {t} failing: {:?}", failing(&items));
            ok = false;
        }
        if t0.elapsed() > Duration::from_secs(60) {
            println!("  classical {t} over per-type budget: {:?}", t0.elapsed());
            ok = false;
        }
    }
    verdict(
        "2 classical",
        ok,
        start.elapsed(),
        Duration::from_secs(60 * CLASSICAL_TYPES.len() as u64),
    );
}

#[test]
fn criterion_3_embedding() {
    let start = Instant::now();
    let mut ok = true;
    for t in EMBEDDING_TYPES {
        let t0 = Instant::now();
        let cd = cd_for(t);
        let mut items = check_embedding(&cd, None);
        items.extend(check_casimir(&cd));
        if !all_pass(&items) {
            println!("  embedding {t} failing: {:?}", failing(&items));
            ok = false;
        }
        if t0.elapsed() > Duration::from_secs(120) {
            println!("  embedding {t} over per-type budget: {:?}", t0.elapsed());
            ok = false;
        }
    }
    verdict(
        "3 embedding",
        ok,
        start.elapsed(),
        Duration::from_secs(120 * EMBEDDING_TYPES.len() as u64),
    );
}

#[test]
fn criterion_4_rank1_drinfeld() {
    let start = Instant::now();
    let items = check_rank1(10, 8);
    let ok = all_pass(&items);
    if !ok {
        println!("  rank1 failing: {:?}", failing(&items));
    }
    verdict(
        "4 rank1-drinfeld",
        ok,
        start.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_5_rtt() {
    let start = Instant::now();
    let mut items = check_rtt(6);
    items.extend(check_bridge(6));
    let ok = all_pass(&items);
    if !ok {
        println!("  rtt failing: {:?}", failing(&items));
    }
    verdict("5 rtt", ok, start.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_6_negative_controls() {
    let start = Instant::now();
    let mut ok = true;

    let m = Mutation::parse("tcfSerre2f:-5").unwrap();
    let cd = cd_for("C2");
    let items = check_presentation(&cd, 6, Some(&m));
    let flipped = items
        .iter()
        .filter(|i| i.status == Status::Fail)
        .map(|i| i.id.clone())
        .collect::<Vec<_>>();
    if !flipped.contains(&"tcfSerre2f".to_string()) {
        println!("  control 1 did not flip tcfSerre2f (flipped: {flipped:?})");
        ok = false;
    }
    if items.iter().any(|i| i.status == Status::Error) {
        println!("  control 1 raised an error");
        ok = false;
    }

    let m = Mutation::parse("hi1-embedding:0").unwrap();
    let cd = cd_for("A2");
    let items = check_embedding(&cd, Some(&m));
    let flipped = items
        .iter()
        .filter(|i| i.status == Status::Fail)
        .map(|i| i.id.clone())
        .collect::<Vec<_>>();
    if !flipped.contains(&"HBrel".to_string()) {
        println!("  control 2 did not flip HBrel (flipped: {flipped:?})");
        ok = false;
    }

    verdict(
        "6 negative-controls",
        ok,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_7_cross_engine() {
    // Shared rank-1 facts, verified independently in the rewriting engine and
    // in the RTT engine, must agree pass/pass.
    let start = Instant::now();
    let drinfeld = check_rank1(8, 6);
    let bridge = check_bridge(6);
    let get = |items: &[CheckItem], id: &str| -> Status {
        items
            .iter()
            .find(|i| i.id == id)
            .unwrap_or_else(|| panic!("missing item {id}"))
            .status
    };
    // (drinfeld-side id, rtt/bridge-side id) pairs asserting the same fact:
    // the defining relations, the twisted generators, and the parity of h.
    let pairs = [
        ("ty0", "cross-engine"),
        ("ty1", "cross-engine"),
        ("ty2", "cross-engine"),
        ("h-even-vanish", "cross-engine"),
        ("bi0biu", "drinfeld-relations"),
        ("xi+xi-", "drinfeld-relations"),
        ("xixi-", "drinfeld-relations"),
    ];
    let mut ok = true;
    for (a, b) in pairs {
        let (sa, sb) = (get(&drinfeld, a), get(&bridge, b));
        if sa != Status::Pass || sb != Status::Pass {
            println!("  disagreement: {a}={sa:?} vs {b}={sb:?}");
            ok = false;
        }
    }
    verdict(
        "7 cross-engine",
        ok,
        start.elapsed(),
        Duration::from_secs(300),
    );
}
