//! Built-in oracle suites. Every suite goes through a pluggable
//! Littlewood-Richardson function so a deliberately broken one can be
//! injected to check that the suites catch it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::flag::{schubert_polynomial, FlagClass, FlagDescriptor};
use crate::grassmann::{GrassmannClass, GrassmannianDescriptor};
use crate::indexing::{OrderedSetPartition, Partition, Permutation};
use crate::poly::SparsePolynomial;
use crate::ring::{determinant, RingElement};
use crate::schur::{lr_coefficient, oracle_schur_polynomial};

pub type LrFn = fn(&Partition, &Partition, &Partition) -> BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

/// Deliberate faults for mutation testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Negate every nonzero LR coefficient.
    LrSign,
}

fn negated_lr(l: &Partition, m: &Partition, n: &Partition) -> BigInt {
    -lr_coefficient(l, m, n)
}

impl Fault {
    fn lr(self) -> LrFn {
        match self {
            Fault::LrSign => negated_lr,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{:<24} ok    {} cases", self.name, self.cases),
            Some(e) => write!(f, "{:<24} FAIL  after {} cases: {e}", self.name, self.cases),
        }
    }
}

/// Run the suites for `level`, optionally with a fault injected.
pub fn run(level: Level, fault: Option<Fault>) -> Vec<SuiteResult> {
    let lr = fault.map_or(lr_coefficient as LrFn, Fault::lr);
    let mut out = vec![
        lr_vs_tableaux(lr, "gr24-lr-vs-tableaux", Partition::all_in_box(2, 2)),
        duality(lr, 2, 4),
        associativity(lr, 2, 4),
    ];
    if level == Level::Full {
        let small = (0..=4).flat_map(Partition::all_of_size).collect();
        out.push(lr_vs_tableaux(lr, "lr-size4-vs-tableaux", small));
        out.push(flag_s4());
        out.push(flag_vs_grassmann(lr, 2, 4));
        out.push(giambelli_3x3(lr));
    }
    out
}

struct Suite {
    name: &'static str,
    cases: usize,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0 }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> Result<(), String> {
        self.cases += 1;
        if ok {
            Ok(())
        } else {
            Err(describe())
        }
    }

    fn finish(self, r: Result<(), String>) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            failure: r.err(),
        }
    }
}

/// `σ_λ σ_μ` inside the `k x l` box through the supplied LR function.
fn boxed_product(
    lr: LrFn,
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    l: u32,
) -> BTreeMap<Partition, BigInt> {
    Partition::all_of_size((lambda.size() + mu.size()) as u32)
        .into_iter()
        .filter(|nu| nu.fits_in(k, l))
        .filter_map(|nu| {
            let c = lr(lambda, mu, &nu);
            (!c.is_zero()).then_some((nu, c))
        })
        .collect()
}

/// `s_λ s_μ = Σ c^ν s_ν` as polynomials in enough variables, for all pairs from `parts`.
fn lr_vs_tableaux(lr: LrFn, name: &'static str, parts: Vec<Partition>) -> SuiteResult {
    let mut suite = Suite::new(name);
    let r = (|| {
        for lambda in &parts {
            for mu in &parts {
                let n = lambda.len() + mu.len();
                let lhs = &oracle_schur_polynomial(lambda, n) * &oracle_schur_polynomial(mu, n);
                let rhs = Partition::all_of_size((lambda.size() + mu.size()) as u32)
                    .into_iter()
                    .fold(SparsePolynomial::zero(), |acc, nu| {
                        let c = lr(lambda, mu, &nu);
                        if c.is_zero() {
                            acc
                        } else {
                            &acc + &oracle_schur_polynomial(&nu, n).scale(&c)
                        }
                    });
                suite.check(lhs == rhs, || {
                    format!("s{lambda} * s{mu} disagrees with the tableau oracle")
                })?;
            }
        }
        Ok(())
    })();
    suite.finish(r)
}

/// `∫ σ_λ σ_μ = δ_{μ, λ^∨}` on complementary degrees.
fn duality(lr: LrFn, k: u32, n: u32) -> SuiteResult {
    let mut suite = Suite::new("gr24-duality");
    let l = n - k;
    let top = Partition::rectangle(k, l);
    let parts = Partition::all_in_box(k, l);
    let r = (|| {
        for lambda in &parts {
            for mu in &parts {
                if lambda.size() + mu.size() != top.size() {
                    continue;
                }
                let got = boxed_product(lr, lambda, mu, k, l)
                    .remove(&top)
                    .unwrap_or_default();
                let dual = lambda.complement(k, l).expect("fits");
                let want = if *mu == dual {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                suite.check(got == want, || {
                    format!("∫σ{lambda}σ{mu} = {got}, expected {want}")
                })?;
            }
        }
        Ok(())
    })();
    suite.finish(r)
}

fn boxed_class_product(
    lr: LrFn,
    a: &BTreeMap<Partition, BigInt>,
    b: &BTreeMap<Partition, BigInt>,
    k: u32,
    l: u32,
) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            for (z, c) in boxed_product(lr, x, y, k, l) {
                *out.entry(z).or_default() += c * cx * cy;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Commutativity and associativity of basis triples; agreement with the library product.
fn associativity(lr: LrFn, k: u32, n: u32) -> SuiteResult {
    let mut suite = Suite::new("gr24-ring-axioms");
    let l = n - k;
    let space = GrassmannianDescriptor::new(k, n).expect("valid");
    let parts = Partition::all_in_box(k, l);
    let basis = |p: &Partition| BTreeMap::from([(p.clone(), BigInt::one())]);
    let r = (|| {
        for a in &parts {
            for b in &parts {
                let ab = boxed_product(lr, a, b, k, l);
                suite.check(ab == boxed_product(lr, b, a, k, l), || {
                    format!("σ{a}σ{b} is not commutative")
                })?;
                let reference = GrassmannClass::schubert(space, a)
                    .and_then(|x| x.multiply(&GrassmannClass::schubert(space, b)?))
                    .expect("valid classes");
                let reference: BTreeMap<_, _> = reference
                    .terms()
                    .map(|(p, c)| (p.clone(), c.clone()))
                    .collect();
                suite.check(ab == reference, || {
                    format!("σ{a}σ{b} disagrees with the ring product")
                })?;
                for c in &parts {
                    let left = boxed_class_product(lr, &ab, &basis(c), k, l);
                    let right =
                        boxed_class_product(lr, &basis(a), &boxed_product(lr, b, c, k, l), k, l);
                    suite.check(left == right, || {
                        format!("(σ{a}σ{b})σ{c} != σ{a}(σ{b}σ{c})")
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish(r)
}

/// `c_{uv}^w` against the constant term of `∂_w (S_u S_v)` on all of `S_4`.
fn flag_s4() -> SuiteResult {
    let mut suite = Suite::new("s4-flag-vs-operators");
    let space = FlagDescriptor::complete(4);
    let perms = Permutation::all(4);
    let r = (|| {
        for u in &perms {
            for v in &perms {
                let product = FlagClass::from_permutation(space.clone(), u)
                    .and_then(|a| a.multiply(&FlagClass::from_permutation(space.clone(), v)?))
                    .expect("valid classes");
                let poly = schubert_polynomial(u).into_polynomial()
                    * schubert_polynomial(v).into_polynomial();
                for w in &perms {
                    if w.length() != u.length() + v.length() {
                        continue;
                    }
                    let mut word = w.reduced_word();
                    word.reverse();
                    let want = word
                        .iter()
                        .fold(poly.clone(), |p, &i| p.divided_difference(i))
                        .constant_term();
                    let index = OrderedSetPartition::from_permutation(w, space.dims())
                        .expect("S_4 element");
                    let got = product.coeff(&index);
                    suite.check(got == want, || {
                        format!("c_{{{u},{v}}}^{w} = {got}, expected {want}")
                    })?;
                }
            }
        }
        Ok(())
    })();
    suite.finish(r)
}

/// Two-step flag products against LR products through the dictionary.
fn flag_vs_grassmann(lr: LrFn, k: u32, n: u32) -> SuiteResult {
    let mut suite = Suite::new("flag-vs-grassmann");
    let l = n - k;
    let space = FlagDescriptor::new(vec![k, l]).expect("valid");
    let parts = Partition::all_in_box(k, l);
    let r = (|| {
        for a in &parts {
            for b in &parts {
                let osp =
                    |p: &Partition| OrderedSetPartition::from_partition(p, k, l).expect("fits");
                let product = FlagClass::schubert(space.clone(), &osp(a))
                    .and_then(|x| x.multiply(&FlagClass::schubert(space.clone(), &osp(b))?))
                    .expect("valid classes");
                let want: BTreeMap<_, _> = boxed_product(lr, a, b, k, l)
                    .into_iter()
                    .map(|(p, c)| (osp(&p), c))
                    .collect();
                let got: BTreeMap<_, _> = product
                    .terms()
                    .map(|(i, c)| (i.clone(), c.clone()))
                    .collect();
                suite.check(got == want, || format!("flag σ{a}σ{b} disagrees with LR"))?;
            }
        }
        Ok(())
    })();
    suite.finish(r)
}

/// Classes of `Gr_3(C^6)` multiplied through the supplied LR function.
#[derive(Clone)]
struct BoxRing {
    terms: BTreeMap<Partition, BigInt>,
    lr: LrFn,
}

impl RingElement for BoxRing {
    fn ring_add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            *terms.entry(p.clone()).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms, lr: self.lr }
    }
    fn ring_sub(&self, other: &Self) -> Self {
        let neg = Self {
            terms: other.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
            lr: self.lr,
        };
        self.ring_add(&neg)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        Self {
            terms: boxed_class_product(self.lr, &self.terms, &other.terms, 3, 3),
            lr: self.lr,
        }
    }
    fn ring_is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `det(σ_{λ_i + j - i}) = σ_λ` for every λ in the 3x3 box.
fn giambelli_3x3(lr: LrFn) -> SuiteResult {
    let mut suite = Suite::new("giambelli-3x3");
    let special = |p: i64| BoxRing {
        terms: if (0..=3).contains(&p) {
            BTreeMap::from([(Partition::row(p as u32), BigInt::one())])
        } else {
            BTreeMap::new()
        },
        lr,
    };
    let r = (|| {
        for lambda in Partition::all_in_box(3, 3) {
            let len = lambda.len();
            let matrix: Vec<Vec<BoxRing>> = (0..len)
                .map(|i| {
                    (0..len)
                        .map(|j| special(lambda.part(i) as i64 + j as i64 - i as i64))
                        .collect()
                })
                .collect();
            let det = determinant(&matrix, &special(0));
            let want = BTreeMap::from([(lambda.clone(), BigInt::one())]);
            suite.check(det.terms == want, || {
                format!("Giambelli determinant for {lambda} is wrong")
            })?;
        }
        Ok(())
    })();
    suite.finish(r)
}
