//! Acceptance suite: one line per criterion, with the time limit each must meet.
//! Runs without the libtest harness so every line is printed, pass or fail.

use std::collections::{BTreeMap, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use schubert_core::flag::{divisor_class, flag_multiply, monk_multiply};
use schubert_core::grassmann::{degeneracy_count, giambelli, tautological_porteous_class};
use schubert_core::halving::{
    kappa, kappa_char_class, pontryagin_class, quaternionic_count, real_degeneracy_lower_bound,
    real_double_multiply, real_lower_bound,
};
use schubert_core::schur::{jacobi_trudi, oracle_schur_polynomial, schur_multiply};
use schubert_core::{
    ClassIndex, ComplexClass, FlagClass, FlagDescriptor, GrassmannClass, GrassmannianDescriptor,
    HalvingClass, HalvingSpace, KappaImage, Partition, SchurExpansion, SparsePolynomial,
};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome, u64);

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn gr(k: u32, n: u32) -> GrassmannianDescriptor {
    GrassmannianDescriptor::new(k, n).unwrap()
}

fn sigma(g: GrassmannianDescriptor, parts: &[u32]) -> GrassmannClass {
    GrassmannClass::schubert(g, &p(parts)).unwrap()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complex(image: KappaImage) -> ComplexClass {
    match image {
        KappaImage::Complex(c) => c,
        KappaImage::Quaternionic(q) => panic!("expected a complex image, got {q:?}"),
    }
}

fn integral(g: GrassmannianDescriptor, parts: &[u32], power: u32) -> BigInt {
    sigma(g, parts).pow(power).integrate()
}

fn criterion_1() -> Outcome {
    let v = integral(gr(4, 8), &[2, 2], 4);
    check(v == BigInt::from(6), || {
        format!("∫σ(2,2)^4 on Gr_4(C^8) = {v}, expected 6")
    })?;
    Ok(format!("∫σ(2,2)^4 on Gr_4(C^8) = {v}"))
}

fn criterion_2() -> Outcome {
    let real = HalvingSpace::real_even_grassmannian(4, 8).unwrap();
    let bound = real_lower_bound(&real, &[(ClassIndex::Partition(p(&[2, 2])), 4)]).unwrap();
    let v = integral(gr(2, 4), &[1, 1], 4);
    let mut failures = Vec::new();
    if v != BigInt::from(2) {
        failures.push(format!("∫σ(1,1)^4 on Gr_2(C^4) = {v}, expected 2"));
    }
    if bound != BigInt::from(2) {
        failures.push(format!(
            "real lower bound on Gr_4(R^8) = {bound}, expected 2"
        ));
    }
    if failures.is_empty() {
        Ok(format!("∫σ(1,1)^4 = {v}; real lower bound {bound}"))
    } else {
        Err(format!(
            "{} (real lower bound for D(1) = (2,2) is {bound}; ∫σ(1)^4 = {})",
            failures.join("; "),
            integral(gr(2, 4), &[1], 4)
        ))
    }
}

fn criterion_3() -> Outcome {
    let real = HalvingSpace::real_even_grassmannian(8, 16).unwrap();
    let b = real_lower_bound(&real, &[(ClassIndex::Partition(p(&[2, 2]).double()), 4)]).unwrap();
    check(b == BigInt::from(6), || {
        format!("real lower bound on Gr_8(R^16) = {b}, expected 6")
    })?;
    Ok(format!(
        "real lower bound on Gr_8(R^16) with four D(2,2) conditions = {b}"
    ))
}

fn criterion_4() -> Outcome {
    let quat = HalvingSpace::quaternionic_grassmannian(2, 4).unwrap();
    let c = quaternionic_count(&quat, &[(ClassIndex::Partition(p(&[1])), 4)]).unwrap();
    check(c == BigInt::from(2), || {
        format!("lines in HP^3 meeting four lines: {c}, expected 2")
    })?;
    Ok(format!(
        "quaternionic lines meeting four lines in HP^3 = {c}"
    ))
}

fn criterion_5() -> Outcome {
    let g = gr(2, 4);
    let class = tautological_porteous_class(g, 2, 2, 1).unwrap();
    let want = sigma(g, &[1]).scale(&BigInt::from(2));
    check(class == want, || {
        format!("Porteous class {class:?}, expected 2σ(1)")
    })?;
    let count = degeneracy_count(g, 2, 2, 1, 4).unwrap();
    check(count == BigInt::from(32), || {
        format!("degeneracy count {count}, expected 32")
    })?;
    let real = HalvingSpace::real_even_grassmannian(4, 8).unwrap();
    let bound = real_degeneracy_lower_bound(&real, 2, 4).unwrap();
    check(bound == BigInt::from(32), || {
        format!("real degeneracy bound {bound}, expected 32")
    })?;
    Ok(format!("class 2σ(1), count {count}, real bound {bound}"))
}

// Schur expansion of a symmetric polynomial, read off from the oracle alone by
// peeling the lex-largest dominant monomial. Only dominant coefficients are kept.
struct Peeler {
    n: usize,
    cache: HashMap<Partition, BTreeMap<Vec<u32>, BigInt>>,
}

impl Peeler {
    fn dominant(&mut self, nu: &Partition) -> &BTreeMap<Vec<u32>, BigInt> {
        let n = self.n;
        self.cache
            .entry(nu.clone())
            .or_insert_with(|| dominant_part(&oracle_schur_polynomial(nu, n), n))
    }

    fn expand(&mut self, mut f: BTreeMap<Vec<u32>, BigInt>) -> BTreeMap<Partition, BigInt> {
        let mut out = BTreeMap::new();
        while let Some((top, c)) = f.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let nu = p(&top.iter().copied().filter(|&e| e > 0).collect::<Vec<_>>());
            for (m, k) in self.dominant(&nu).clone() {
                let e = f.entry(m.clone()).or_insert_with(BigInt::zero);
                *e -= &c * k;
                if e.is_zero() {
                    f.remove(&m);
                }
            }
            out.insert(nu, c);
        }
        out
    }
}

fn padded(m: &[u32], n: usize) -> Vec<u32> {
    let mut v = m.to_vec();
    v.resize(n, 0);
    v
}

fn is_dominant(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn dominant_part(f: &SparsePolynomial, n: usize) -> BTreeMap<Vec<u32>, BigInt> {
    f.terms()
        .map(|(m, c)| (padded(m.exponents(), n), c.clone()))
        .filter(|(e, _)| is_dominant(e))
        .collect()
}

// dominant coefficients of a·b without forming the full product
fn dominant_product(
    a: &SparsePolynomial,
    b: &SparsePolynomial,
    degree: u32,
    n: usize,
) -> BTreeMap<Vec<u32>, BigInt> {
    let bmap: HashMap<Vec<u32>, &BigInt> = b
        .terms()
        .map(|(m, c)| (padded(m.exponents(), n), c))
        .collect();
    let targets: Vec<Vec<u32>> = Partition::all_of_size(degree)
        .into_iter()
        .filter(|nu| nu.len() <= n)
        .map(|nu| padded(nu.parts(), n))
        .collect();
    let mut out = BTreeMap::new();
    for (m, ca) in a.terms() {
        let alpha = padded(m.exponents(), n);
        for t in &targets {
            if alpha.iter().zip(t).all(|(x, y)| x <= y) {
                let beta: Vec<u32> = t.iter().zip(&alpha).map(|(y, x)| y - x).collect();
                if let Some(cb) = bmap.get(&beta) {
                    *out.entry(t.clone()).or_insert_with(BigInt::zero) += ca * *cb;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn criterion_6() -> Outcome {
    let parts: Vec<Partition> = (0..=5).flat_map(Partition::all_of_size).collect();
    let mut peelers: HashMap<usize, Peeler> = HashMap::new();
    let mut identities = 0usize;
    for lambda in &parts {
        for mu in &parts {
            // ℓ(ν) ≤ ℓ(λ) + ℓ(μ) for every ν that can occur, so this many variables is faithful
            let n = (lambda.len() + mu.len()).max(1);
            let peeler = peelers.entry(n).or_insert_with(|| Peeler {
                n,
                cache: HashMap::new(),
            });
            let prod = dominant_product(
                &oracle_schur_polynomial(lambda, n),
                &oracle_schur_polynomial(mu, n),
                (lambda.size() + mu.size()) as u32,
                n,
            );
            let oracle = peeler.expand(prod);
            let fast = schur_multiply(
                &SchurExpansion::basis(lambda.clone()),
                &SchurExpansion::basis(mu.clone()),
            );
            for nu in Partition::all_of_size((lambda.size() + mu.size()) as u32) {
                if nu.len() > n {
                    check(fast.coeff(&nu).is_zero(), || {
                        format!("s{lambda} s{mu} has s{nu} beyond {n} rows")
                    })?;
                    continue;
                }
                let want = oracle.get(&nu).cloned().unwrap_or_default();
                check(fast.coeff(&nu) == want, || {
                    format!(
                        "coefficient of s{nu} in s{lambda} s{mu}: {} vs oracle {want}",
                        fast.coeff(&nu)
                    )
                })?;
                identities += 1;
            }
        }
    }
    check(identities >= 400, || {
        format!("only {identities} identities checked")
    })?;
    Ok(format!(
        "{} products, {identities} coefficient identities",
        parts.len() * parts.len()
    ))
}

fn random_class(
    g: GrassmannianDescriptor,
    parts: &[Partition],
    rng: &mut StdRng,
) -> GrassmannClass {
    let terms = (0..rng.gen_range(1..=3)).map(|_| {
        (
            parts[rng.gen_range(0..parts.len())].clone(),
            BigInt::from(rng.gen_range(-3i64..=3)),
        )
    });
    GrassmannClass::from_terms(g, terms).unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut triples = 0;
    for g in [gr(2, 5), gr(3, 6)] {
        let parts = g.partitions();
        for _ in 0..500 {
            let (a, b, c) = (
                random_class(g, &parts, &mut rng),
                random_class(g, &parts, &mut rng),
                random_class(g, &parts, &mut rng),
            );
            let ab = a.multiply(&b).unwrap();
            check(ab == b.multiply(&a).unwrap(), || format!("ab ≠ ba on {g}"))?;
            check(
                ab.multiply(&c).unwrap() == a.multiply(&b.multiply(&c).unwrap()).unwrap(),
                || format!("(ab)c ≠ a(bc) on {g}"),
            )?;
            triples += 1;
        }
    }
    let g = gr(3, 6);
    let parts = g.partitions();
    let mut pairs = 0;
    for a in &parts {
        for b in &parts {
            if a.size() + b.size() != g.dimension() {
                continue;
            }
            let v = sigma(g, a.parts())
                .multiply(&sigma(g, b.parts()))
                .unwrap()
                .integrate();
            let want = if *b == a.complement(3, 3).unwrap() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            check(v == want, || format!("∫σ{a}σ{b} = {v}, expected {want}"))?;
            pairs += 1;
        }
    }
    Ok(format!(
        "{triples} random triples, {pairs} complementary pairs in the 3x3 box"
    ))
}

fn criterion_8() -> Outcome {
    let g = gr(3, 6);
    let boxed = Partition::all_in_box(3, 3);
    for lambda in &boxed {
        let det = giambelli(lambda, g).unwrap();
        check(det == GrassmannClass::schubert(g, lambda).unwrap(), || {
            format!("Giambelli determinant for {lambda} is {det:?}")
        })?;
    }
    let mut jt = 0;
    for size in 0..=8 {
        for lambda in Partition::all_of_size(size) {
            let det = jacobi_trudi(&lambda);
            check(det == SchurExpansion::basis(lambda.clone()), || {
                format!("Jacobi-Trudi for {lambda} gives {det:?}")
            })?;
            jt += 1;
        }
    }
    Ok(format!(
        "Giambelli on all {} partitions in the 3x3 box, Jacobi-Trudi on {jt} partitions",
        boxed.len()
    ))
}

fn criterion_9() -> Outcome {
    let mut monk = 0;
    let mut constants = 0;
    for n in [3u32, 4] {
        let space = FlagDescriptor::complete(n);
        let indices = space.indices();
        for r in 1..n as usize {
            let d = divisor_class(&space, r).unwrap();
            for w in &indices {
                let s = FlagClass::schubert(space.clone(), w).unwrap();
                check(
                    flag_multiply(&d, &s).unwrap() == monk_multiply(r, &s).unwrap(),
                    || format!("Monk fails for r = {r}, {w}"),
                )?;
                monk += 1;
            }
        }
        if n == 4 {
            for u in &indices {
                for v in &indices {
                    let prod = flag_multiply(
                        &FlagClass::schubert(space.clone(), u).unwrap(),
                        &FlagClass::schubert(space.clone(), v).unwrap(),
                    )
                    .unwrap();
                    for (w, c) in prod.terms() {
                        check(*c > BigInt::zero(), || {
                            format!("coefficient of {w} in {u}·{v} is {c}")
                        })?;
                        constants += 1;
                    }
                }
            }
        }
    }
    let g = gr(2, 4);
    let mut grass = 0;
    for a in g.partitions() {
        for b in g.partitions() {
            let (sa, sb) = (sigma(g, a.parts()), sigma(g, b.parts()));
            let via_flag = flag_multiply(
                &FlagClass::from_grassmann(&sa),
                &FlagClass::from_grassmann(&sb),
            )
            .unwrap();
            check(
                via_flag.to_grassmann().unwrap() == sa.multiply(&sb).unwrap(),
                || format!("flag and Grassmannian products differ for {a}·{b}"),
            )?;
            grass += 1;
        }
    }
    Ok(format!("{monk} Monk products, {constants} nonzero S_4 constants all positive, {grass} (2,2) products"))
}

fn criterion_10() -> Outcome {
    let mut pairs = 0;
    for space in [
        HalvingSpace::real_even_grassmannian(4, 8).unwrap(),
        HalvingSpace::real_even_flag(&[2, 2, 2]).unwrap(),
    ] {
        let indices = space.indices();
        for i in &indices {
            for j in &indices {
                let a = HalvingClass::schubert(space.clone(), i).unwrap();
                let b = HalvingClass::schubert(space.clone(), j).unwrap();
                let lhs = complex(kappa(&real_double_multiply(&a, &b).unwrap()));
                let rhs = complex(kappa(&a)).multiply(&complex(kappa(&b))).unwrap();
                check(lhs == rhs, || {
                    format!("κ({i}·{j}) ≠ κ({i})κ({j}) on {space}")
                })?;
                pairs += 1;
            }
        }
    }
    // x = p_1 on Gr_2(R^12), y = c_1 on the fixed CP^5
    let space = HalvingSpace::real_even_grassmannian(2, 12).unwrap();
    let x = pontryagin_class(&space, 1, 1).unwrap();
    let two_y = kappa_char_class(&space, 1, 1).unwrap();
    let y = schubert_core::halving::complex_chern_class(space.fixed(), 1, 1).unwrap();
    for i in 0..=5u32 {
        let lhs = complex(kappa(&x.pow(i)));
        check(lhs == two_y.pow(i), || format!("κ(x^{i}) ≠ (κ x)^{i}"))?;
        check(
            lhs == y.pow(i).scale(&(BigInt::one() << i as usize)),
            || format!("κ(x^{i}) ≠ 2^{i} y^{i}"),
        )?;
        check(!lhs.is_zero(), || format!("κ(x^{i}) vanishes"))?;
    }
    Ok(format!(
        "{pairs} basis pairs multiplicative, κ(x^i) = 2^i y^i for i ≤ 5"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "Gr_4(C^8) four-plane count", criterion_1, 1),
        (2, "Gr_2(C^4) count and real bound", criterion_2, 1),
        (3, "Gr_8(R^16) real lower bound", criterion_3, 1),
        (4, "quaternionic lines in HP^3", criterion_4, 1),
        (5, "Thom-Porteous and degeneracy", criterion_5, 1),
        (6, "LR vs tableau oracle", criterion_6, 60),
        (7, "ring axioms and duality", criterion_7, 60),
        (8, "Giambelli and Jacobi-Trudi", criterion_8, 30),
        (9, "flag consistency", criterion_9, 120),
        (10, "kappa homomorphism", criterion_10, 30),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (status, detail) = match outcome {
            Ok(d) if elapsed < limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {}s limit", limit.as_secs())),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {status}  {name} [{:.3}s / {}s]: {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
