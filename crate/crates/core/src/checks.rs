//! Self-checks run by `wittzeta check <suite>`.
//!
//! Each suite recomputes an identity at desk scale from a fixed seed and
//! reports whether it held. Instance counts are smaller than the integration
//! tests so that `check all` stays interactive.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arithgeom::{
    base_change, brute_sym_count, euler_product_zeta, point_counts, rational_reconstruct,
    sym_power_counts, sym_zeta, zeta, zeta_from_counts, zeta_generating_series, PointCounts,
    VarietySpec,
};
use crate::error::Result;
use crate::lambda::{macdonald_poincare, sigma_int, specialize, BettiVector};
use crate::ringcore::{EnumerationBudget, GhostRing, IntPolynomial, Integer};
use crate::witt::{ghost_inverse, WittVector};

pub const SUITES: &[&str] = &[
    "witt-axioms",
    "newton",
    "sym-projective",
    "sym-plane",
    "generating-series",
    "oracle",
    "multiplicativity",
    "macdonald",
    "two-route",
];

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

/// The builtin example varieties.
pub fn builtin_specs() -> Vec<(&'static str, VarietySpec)> {
    let e = VarietySpec::elliptic(5, 1, 0).expect("nonsingular");
    vec![
        ("A1/F2", VarietySpec::affine(1, 2)),
        ("P1/F2", VarietySpec::projective(1, 2)),
        ("P2/F2", VarietySpec::projective(2, 2)),
        ("E/F5", e.clone()),
        ("ExE/F5", VarietySpec::product(vec![e.clone(), e]).expect("same q")),
    ]
}

fn random_int(rng: &mut ChaCha8Rng, bound: i64) -> Integer {
    BigInt::from(rng.gen_range(-bound..=bound))
}

fn random_witt(rng: &mut ChaCha8Rng, n: usize) -> WittVector<Integer> {
    let tail = (0..n).map(|_| random_int(rng, 5)).collect();
    WittVector::from_tail(BigInt::from(1), tail).expect("unit constant")
}

fn random_nested(rng: &mut ChaCha8Rng, outer: usize, inner: usize) -> WittVector<WittVector<Integer>> {
    let one = WittVector::one(&BigInt::from(1), inner);
    let tail = (0..outer).map(|_| random_witt(rng, inner)).collect();
    WittVector::from_tail(one, tail).expect("unit constant")
}

fn axioms<A: GhostRing>(t: &mut Tally, a: &A, b: &A, c: &A) {
    let zero = a.zero_like();
    let one = a.one_like();
    t.check(a.add(b).add(c) == a.add(&b.add(c)), || format!("(a+b)+c for {a:?}, {b:?}, {c:?}"));
    t.check(a.mul(b).mul(c) == a.mul(&b.mul(c)), || format!("(ab)c for {a:?}, {b:?}, {c:?}"));
    t.check(a.add(b) == b.add(a), || format!("a+b for {a:?}, {b:?}"));
    t.check(a.mul(b) == b.mul(a), || format!("ab for {a:?}, {b:?}"));
    t.check(a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c)), || format!("a(b+c) for {a:?}"));
    t.check(a.add(&zero) == *a && a.mul(&one) == *a, || format!("units for {a:?}"));
    t.check(a.add(&a.neg()) == zero, || format!("a-a for {a:?}"));
}

fn witt_axioms(seed: u64) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    for _ in 0..60 {
        let (a, b, c) = (random_witt(&mut rng, 8), random_witt(&mut rng, 8), random_witt(&mut rng, 8));
        axioms(&mut t, &a, &b, &c);
        let gh = a.witt_mul(&b).ghost();
        t.check(gh == a.ghost().mul(&b.ghost()), || format!("ghost(ab) for {a:?}, {b:?}"));
    }
    for _ in 0..10 {
        let a = random_nested(&mut rng, 4, 4);
        let b = random_nested(&mut rng, 4, 4);
        let c = random_nested(&mut rng, 4, 4);
        axioms(&mut t, &a, &b, &c);
        t.check(a.witt_add(&b).ghost() == a.ghost().add(&b.ghost()), || {
            format!("ghost(a+b) for {a:?}, {b:?}")
        });
    }
    t
}

fn newton(seed: u64) -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    for _ in 0..60 {
        let a = random_witt(&mut rng, 8);
        t.check(ghost_inverse(&a.ghost())? == a, || format!("round trip of {a:?}"));
        let tail: Vec<IntPolynomial> = (0..8)
            .map(|_| IntPolynomial::new((0..3).map(|_| random_int(&mut rng, 4)).collect()))
            .collect();
        let p = WittVector::from_tail(IntPolynomial::constant(BigInt::from(1)), tail)?;
        t.check(ghost_inverse(&p.ghost())? == p, || format!("round trip of {p:?}"));
    }
    for _ in 0..10 {
        let a = random_nested(&mut rng, 4, 4);
        t.check(ghost_inverse(&a.ghost())? == a, || format!("round trip of {a:?}"));
    }
    Ok(t)
}

fn sym_projective(budget: EnumerationBudget) -> Result<Tally> {
    let mut t = Tally::new();
    for q in [2u64, 3, 5] {
        for n in 0..=6u32 {
            let s = sym_zeta(&VarietySpec::projective(1, q), n as usize, 12, budget)?;
            let p = zeta(&VarietySpec::projective(n, q), 12, budget)?;
            t.check(s == p, || format!("Sym^{n} P1 over F_{q}"));
            let a = sym_zeta(&VarietySpec::affine(1, q), n as usize, 12, budget)?;
            let expect = zeta(&VarietySpec::affine(n, q), 12, budget)?;
            t.check(a == expect, || format!("Sym^{n} A1 over F_{q}"));
        }
    }
    Ok(t)
}

fn sym_plane(budget: EnumerationBudget) -> Result<Tally> {
    let mut t = Tally::new();
    for q in [2i64, 3] {
        let s = sym_zeta(&VarietySpec::projective(2, q as u64), 2, 12, budget)?;
        let rf = rational_reconstruct(&s, 6)?;
        // (1-t)(1-qt)(1-q^2 t)^2(1-q^3 t)(1-q^4 t)
        let mut den = IntPolynomial::from_i64s(&[1]);
        for c in [1, q, q * q, q * q, q.pow(3), q.pow(4)] {
            den = GhostRing::mul(&den, &IntPolynomial::from_i64s(&[1, -c]));
        }
        t.check(rf.den == den && rf.num == IntPolynomial::from_i64s(&[1]), || {
            format!("Sym^2 P2 over F_{q} reconstructs to {rf}")
        });
    }
    let c = point_counts(&VarietySpec::projective(2, 2), 2, budget)?;
    let n1 = sym_power_counts(&c, 2, 1)?;
    t.check(n1.counts[0] == BigInt::from(35), || format!("N_1(Sym^2 P2/F2) = {}", n1.counts[0]));
    Ok(t)
}

fn generating_series(budget: EnumerationBudget) -> Result<Tally> {
    let mut t = Tally::new();
    for (name, spec) in builtin_specs() {
        let g = zeta_generating_series(&spec, 4, 3, budget)?;
        for n in 0..=4 {
            let s = sym_zeta(&spec, n, 3, budget)?;
            t.check(*g.coeff(n) == s, || format!("u^{n} coefficient for {name}"));
        }
    }
    Ok(t)
}

fn oracle(budget: EnumerationBudget) -> Result<Tally> {
    let mut t = Tally::new();
    let specs = [
        VarietySpec::elliptic(5, 1, 0)?,
        VarietySpec::equations(2, &["x", "y"], &["y^2 + y + x^3 + x"])?,
    ];
    for spec in &specs {
        let c = point_counts(spec, 6, budget)?;
        for n in 0..=3 {
            let s = sym_power_counts(&c, n, 2)?;
            for r in 1..=2 {
                let b = brute_sym_count(spec, n, r, budget)?;
                t.check(*s.get(r) == b, || format!("Sym^{n} over F_q^{r} of {spec:?}"));
            }
        }
    }
    Ok(t)
}

fn multiplicativity(budget: EnumerationBudget) -> Result<Tally> {
    let mut t = Tally::new();
    let e = VarietySpec::elliptic(5, 1, 0)?;
    let ee = VarietySpec::product(vec![e.clone(), e.clone()])?;
    let ze = zeta(&e, 8, budget)?;
    t.check(zeta(&ee, 8, budget)? == ze.witt_mul(&ze), || "Z(ExE) = Z(E) * Z(E)".into());
    for (name, spec) in builtin_specs() {
        let c = point_counts(&spec, 24, budget)?;
        let z = zeta_from_counts(&c, 24)?;
        for r in 1..=3 {
            let bc = zeta_from_counts(&base_change(&c, r)?, 8)?;
            t.check(z.frobenius(r)?.truncate(8)? == bc, || format!("F_{r} for {name}"));
        }
    }
    Ok(t)
}

fn macdonald(seed: u64) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    for _ in 0..40 {
        let len = rng.gen_range(1..=7);
        let b = BettiVector((0..len).map(|_| BigInt::from(rng.gen_range(0..=5))).collect());
        let m = macdonald_poincare(&b, 6);
        let gh = m.ghost();
        for n in 1..=6 {
            let expect = IntPolynomial::new(
                (0..len * n)
                    .map(|k| {
                        if k % n != 0 {
                            return BigInt::from(0);
                        }
                        let i = k / n;
                        if i % 2 == 1 { -&b.0[i] } else { b.0[i].clone() }
                    })
                    .collect(),
            );
            t.check(*gh.get(n) == expect, || format!("gh_{n} for {b:?}"));
        }
        let chi = b.euler_characteristic();
        t.check(specialize(&m, &BigInt::from(1)) == sigma_int(&chi, 6), || {
            format!("z = 1 specialization for {b:?}")
        });
    }
    t
}

fn two_route(budget: EnumerationBudget) -> Result<Tally> {
    let mut t = Tally::new();
    for (name, spec) in builtin_specs() {
        let c = point_counts(&spec, 8, budget)?;
        t.check(zeta_from_counts(&c, 8)? == euler_product_zeta(&c, 8)?, || name.to_string());
    }
    let p = PointCounts::point(3, 8);
    t.check(zeta_from_counts(&p, 8)? == euler_product_zeta(&p, 8)?, || "point".into());
    Ok(t)
}

/// Runs one suite, or all of them for `"all"`. Unknown names are `None`.
pub fn run_suite(name: &str, budget: EnumerationBudget) -> Option<Result<Vec<CheckResult>>> {
    if name == "all" {
        let mut all = Vec::new();
        for s in SUITES {
            match run_suite(s, budget)? {
                Ok(r) => all.extend(r),
                Err(e) => return Some(Err(e)),
            }
        }
        return Some(Ok(all));
    }
    const SEED: u64 = 0x5eed;
    let tally = match name {
        "witt-axioms" => Ok(witt_axioms(SEED)),
        "newton" => newton(SEED),
        "sym-projective" => sym_projective(budget),
        "sym-plane" => sym_plane(budget),
        "generating-series" => generating_series(budget),
        "oracle" => oracle(budget),
        "multiplicativity" => multiplicativity(budget),
        "macdonald" => Ok(macdonald(SEED)),
        "two-route" => two_route(budget),
        _ => return None,
    };
    Some(tally.map(|t| {
        vec![CheckResult {
            suite: name.to_string(),
            passed: t.failure.is_none(),
            cases: t.cases,
            failure: t.failure,
        }]
    }))
}
