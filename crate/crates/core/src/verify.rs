//! Property batteries run by the command-line `verify` subcommand.

use crate::dtl::{crossing, permutation_morphism, planar_matchings, Diagram, DiagramSum, SymmetrizerCache};
use crate::error::{Error, Result};
use crate::frobenius::{
    alpha, bar_natan, builtin_algebra, handle_element, is_strongly_separable, iterated_comul, iterated_comul_with, Algebra,
    AlgebraElement, Bracketing, Builtin, TensorElement,
};
use crate::idempotents::{boundary_sequence, enumerate_classes, idempotent_battery, matching_of_walk, walk_of, ArcPartition, PlanarMatching};
use crate::invariants::{
    b3xs1_on_words, apply_table, cyclic_toric_cap, handlebody_invariant, invariant_b3xs1, invariant_s2xb2, normal_form_with, parse_word,
    rank_one_dw, rank_one_tables, s2xb2_on_words, s2xb2_presentation, sphere_skein_normal_form, Sphere, SphereGenerator, SphereSkein,
};
use crate::linalg::{determinant, EchelonBasis};
use crate::report::Report;
use crate::scalar::{binomial, Rational, Scalar, Subring};
use crate::solidtorus::{
    annulus_cap, capping_constant, capping_constant_formula, capping_constant_recursive, gram_matrix, kirby_closed_form, kirby_copair,
    kirby_gram, kirby_symmetrizer, von_szily_check, zigzag_holds,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Frobenius,
    Dtl,
    Idempotents,
    Kirby,
    Invariants,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "frobenius" => Suite::Frobenius,
            "dtl" => Suite::Dtl,
            "idempotents" => Suite::Idempotents,
            "kirby" => Suite::Kirby,
            "invariants" => Suite::Invariants,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

pub fn run_suite(suite: Suite, max_n: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Frobenius => frobenius_suite(&mut rng),
        Suite::Dtl => dtl_suite(max_n, &mut rng),
        Suite::Idempotents => idempotent_suite(max_n),
        Suite::Kirby => kirby_suite(max_n),
        Suite::Invariants => invariant_suite(max_n, &mut rng),
    }
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let c = Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    &c * &Scalar::alpha_pow(rng.gen_range(-2..=2))
}

fn random_element(alg: &Algebra, rng: &mut ChaCha8Rng) -> AlgebraElement {
    AlgebraElement::new(alg, (0..alg.rank()).map(|_| random_scalar(rng)).collect()).expect("rank")
}

pub fn builtin_list() -> Vec<Algebra> {
    let mut out = vec![alpha(), bar_natan()];
    for which in [Builtin::Beta(3), Builtin::Beta(4), Builtin::Trivial(Scalar::alpha()), Builtin::Trivial(Scalar::int(2))] {
        out.push(builtin_algebra(which).expect("builtin"));
    }
    out
}

fn frobenius_suite(rng: &mut ChaCha8Rng) -> Report {
    let mut r = Report::new();
    for alg in builtin_list() {
        for (name, ok) in alg.axiom_report() {
            r.check(format!("{}: {name}", alg.name()), ok);
        }
        for k in 0..=4 {
            let one = AlgebraElement::one(&alg);
            let same = iterated_comul_with(&one, k, Bracketing::Left) == iterated_comul_with(&one, k, Bracketing::Right);
            r.check(format!("{}: bracketing of Δ^{k}", alg.name()), same);
        }
        for t in 0..8 {
            let a = random_element(&alg, rng);
            let b = random_element(&alg, rng);
            let ab = a.mul(&b).expect("same algebra");
            let lhs = ab.comul();
            let rhs = TensorElement::product_of(&alg, &[a.clone(), AlgebraElement::one(&alg)])
                .and_then(|left| left.slotwise_mul(&b.comul()))
                .map(|v| v == lhs)
                .unwrap_or(false);
            r.check(format!("{}: Δ(ab) = (a⊗1)Δ(b), sample {t}", alg.name()), rhs);
            let counit_law = lhs.mul_slots(0, 1).multi_mul() == ab.mul(&handle_element(&alg)).expect("same algebra");
            r.check(format!("{}: m∘Δ(ab) = H·ab, sample {t}", alg.name()), counit_law);
        }
    }
    r.check("alpha strongly separable", is_strongly_separable(&alpha()).0);
    r.check("bar_natan not strongly separable", !is_strongly_separable(&bar_natan()).0);
    let x = AlgebraElement::basis(&alpha(), 1);
    r.check("alpha: Δ(x) = x⊗x + a 1⊗1", x.comul() == {
        let mut t = TensorElement::monomial(&alpha(), vec![1, 1], Scalar::one());
        t.add_term(vec![0, 0], Scalar::alpha());
        t
    });
    r.check("alpha: ε∘Δ^3 of 1 vanishes", iterated_comul(&AlgebraElement::one(&alpha()), 3).counit_all().is_zero());
    r
}

fn random_diagram(bottom: usize, top: usize, rank: usize, rng: &mut ChaCha8Rng) -> Diagram {
    let all = planar_matchings((bottom + top) / 2);
    let arcs = &all[rng.gen_range(0..all.len())];
    let decos = arcs.iter().map(|&p| (p, rng.gen_range(0..rank) as u8)).collect();
    Diagram::new(bottom, top, decos).expect("planar")
}

fn random_sum(alg: &Algebra, bottom: usize, top: usize, rng: &mut ChaCha8Rng) -> DiagramSum {
    let mut s = DiagramSum::zero(alg, bottom, top);
    for _ in 0..3 {
        s.add_term(random_diagram(bottom, top, alg.rank(), rng), random_scalar(rng));
    }
    s
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(m - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, m - 1);
            out.push(q);
        }
    }
    out
}

/// Symmetrizer laws for `m ≤ max_sym`, with the full permutation sum for `m ≤ max_full`.
pub fn symmetrizer_laws(max_sym: usize, max_full: usize) -> Report {
    let mut r = Report::new();
    let alg = alpha();
    let cache = SymmetrizerCache::new(&alg);
    for m in 1..=max_sym {
        let sym = cache.get(m).expect("cached");
        r.check(format!("Sym_{m} idempotent"), sym.compose(sym).as_ref() == Ok(sym));
        let mut absorbs = true;
        let mut killed = true;
        for i in 1..m {
            let p = crossing(&alg, i, m).expect("crossing");
            absorbs &= p.compose(sym).as_ref() == Ok(sym) && sym.compose(&p).as_ref() == Ok(sym);
            let cap = DiagramSum::from_diagram(&alg, Diagram::cap_at(m, i - 1, 0).expect("cap")).expect("cap");
            killed &= cap.compose(sym).map(|v| v.is_zero()).unwrap_or(false);
        }
        r.check(format!("Sym_{m} absorbs crossings"), absorbs);
        r.check(format!("Sym_{m} killed by caps"), killed);
        if m <= max_full {
            let perms = permutations(m);
            let mut total = DiagramSum::zero(&alg, m, m);
            for p in &perms {
                total = total.add(&permutation_morphism(&alg, p).expect("perm")).expect("same shape");
            }
            let full = total.scale(&Scalar::rational(Rational::new(BigInt::one(), BigInt::from(perms.len()))));
            r.check(format!("Sym_{m} = (1/{m}!) Σ P_σ"), &full == sym);
        }
    }
    r
}

fn dtl_suite(max_n: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut r = symmetrizer_laws(6, 4);
    for alg in [alpha(), bar_natan()] {
        let mut assoc = true;
        let mut mirror = true;
        let mut text = true;
        for _ in 0..20 {
            let (a, b, c, d) = (rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
            let b = if (a + b) % 2 == 1 { b + 1 } else { b };
            let c = if (b + c) % 2 == 1 { c + 1 } else { c };
            let d = if (c + d) % 2 == 1 { d + 1 } else { d };
            let f = random_sum(&alg, a, b, rng);
            let g = random_sum(&alg, b, c, rng);
            let h = random_sum(&alg, c, d, rng);
            let left = h.compose(&g).and_then(|hg| hg.compose(&f));
            let right = g.compose(&f).and_then(|gf| h.compose(&gf));
            assoc &= left.is_ok() && left == right;
            mirror &= f.mirror().mirror() == f;
            for dg in f.terms().keys() {
                text &= dg.to_string().parse::<Diagram>().as_ref() == Ok(dg);
            }
        }
        r.check(format!("{}: composition associative (random)", alg.name()), assoc);
        r.check(format!("{}: mirror is an involution", alg.name()), mirror);
        r.check(format!("{}: diagram text round trip", alg.name()), text);
    }
    for n in 1..=max_n.min(4) {
        r.check(format!("span rank of dTL(0,{}) is C({},{})", 2 * n, 2 * n, n), span_rank(n) == binomial(2 * n as u64, n as u64));
    }
    r
}

/// Rank of the tensor images of all basis-decorated planar matchings `0 -> 2n` over `alpha`.
pub fn span_rank(n: usize) -> BigInt {
    let alg = alpha();
    let mut ech = EchelonBasis::new();
    for arcs in planar_matchings(n) {
        for mask in 0..(1u64 << n) {
            let decos = arcs.iter().enumerate().map(|(i, &p)| (p, ((mask >> i) & 1) as u8)).collect();
            let d = Diagram::new(0, 2 * n, decos).expect("planar");
            ech.insert(DiagramSum::from_diagram(&alg, d).expect("valid").embed_tensor().into_terms());
        }
    }
    BigInt::from(ech.rank())
}

fn idempotent_suite(max_n: usize) -> Report {
    let mut r = Report::new();
    for n in 1..=max_n {
        for m in PlanarMatching::all(n) {
            let b = idempotent_battery(&m);
            r.check(format!("idempotents of {m}"), b.passed());
            for f in b.failures() {
                r.check(format!("  {}", f.name), false);
            }
        }
        let walks = enumerate_classes(n);
        let half = binomial(2 * n as u64, n as u64) / BigInt::from(2);
        r.check(format!("|W+_{}| = C({},{})/2", 2 * n, 2 * n, n), BigInt::from(walks.len()) == half);
        let mut rt = true;
        for w in &walks {
            rt &= matching_of_walk(w).map(|p| walk_of(&boundary_sequence(&p)).as_ref() == Ok(w)).unwrap_or(false);
        }
        r.check(format!("walk round trip for n={n}"), rt);
        let mut realizable = true;
        for m in PlanarMatching::all(n) {
            for p in ArcPartition::all(&m) {
                realizable &= walk_of(&boundary_sequence(&p)).map(|w| walks.contains(&w)).unwrap_or(false);
            }
        }
        r.check(format!("every partition of n={n} has a returning walk"), realizable);
    }
    r
}

fn diag_2_2a(n: usize) -> bool {
    let g = gram_matrix(n);
    let half = g.len() / 2;
    g.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, v)| {
            if i != j {
                v.is_zero()
            } else if i < half {
                *v == Scalar::int(2)
            } else {
                *v == &Scalar::int(2) * &Scalar::alpha()
            }
        })
    })
}

fn kirby_suite(max_n: usize) -> Report {
    let mut r = Report::new();
    let x = AlgebraElement::basis(&alpha(), 1);
    let one = AlgebraElement::one(&alpha());
    for n in 1..=max_n {
        let closed = kirby_closed_form(n);
        let copair = kirby_copair(n);
        r.check(format!("ω_{}: copairing = closed form", 2 * n), copair.tensor == closed.tensor);
        if n <= 4 {
            r.check(format!("ω_{}: symmetrizer = closed form", 2 * n), kirby_symmetrizer(n).tensor == closed.tensor);
        }
        if n <= 3 {
            let g = kirby_gram(&alpha(), n).map(|k| k.tensor == closed.tensor).unwrap_or(false);
            r.check(format!("ω_{}: Gram route = closed form", 2 * n), g);
            r.check(format!("zig-zag on the class basis, n={n}"), zigzag_holds(n));
        }
        r.check(format!("ω_{}: no odd strata", 2 * n), closed.tensor.terms().keys().all(|z| z.iter().map(|&e| e as usize).sum::<usize>() % 2 == 0));
        r.check(format!("Gram matrix n={n} is diag(2, 2a)"), diag_2_2a(n));
        r.check(format!("Gram determinant n={n} is a Laurent unit"), determinant(&gram_matrix(n)).is_unit(Subring::Laurent));
        let prev = kirby_closed_form(n - 1).tensor;
        let k = 2 * n;
        let mut zero_ok = true;
        let mut x_ok = true;
        for i in 1..=k {
            let pos = (i, i % k + 1);
            zero_ok &= annulus_cap(&copair, pos, &one)
                .map(|c| c.tensor.is_zero() && c.dtl.map(|d| d.embed_tensor().is_zero()).unwrap_or(false))
                .unwrap_or(false);
            x_ok &= annulus_cap(&copair, pos, &x)
                .map(|c| c.tensor == prev && c.dtl.map(|d| d.embed_tensor() == prev).unwrap_or(false))
                .unwrap_or(false);
        }
        r.check(format!("ω_{}: undotted annulus caps vanish", 2 * n), zero_ok);
        r.check(format!("ω_{}: x annulus caps give ω_{}", 2 * n, 2 * n - 2), x_ok);
        let t = capping_constant_formula(n);
        r.check(format!("t_{} = {}", 2 * n, t), capping_constant(n).as_ref() == Some(&t) && capping_constant_recursive(n) == t);
    }
    let mut vs = true;
    for a in 0..=8 {
        for b in 0..=8 {
            vs &= von_szily_check(a, b);
        }
    }
    r.check("von Szily identity for a, b ≤ 8", vs);
    r.check("bar_natan pairing singular at n=1", matches!(kirby_gram(&bar_natan(), 1), Err(Error::SingularPairing)));
    r
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Sphere> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| if rng.gen_bool(0.5) { Sphere::S } else { Sphere::D }).collect()
}

/// Normal forms of random words agree across leftmost, rightmost and random rewriting orders.
pub fn confluence_check(count: usize, max_len: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chooser = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    (0..count).all(|_| {
        let x = SphereSkein::word(random_word(&mut rng, max_len));
        let left = sphere_skein_normal_form(&x);
        let right = normal_form_with(&x, &mut |n| n - 1);
        let random = normal_form_with(&x, &mut |n| chooser.gen_range(0..n));
        left == right && left == random && left.is_normal()
    })
}

fn invariant_suite(max_n: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut r = Report::new();
    let one = Scalar::one();
    for k in 0..=max_n.max(1) {
        let table = invariant_s2xb2(SphereGenerator::SPow(2 * k), &one).expect("unit");
        let pres = handlebody_invariant(&s2xb2_presentation(&vec![Sphere::S; 2 * k]), &one, 2).expect("valid");
        let formula = &Scalar::rational(Rational::new(binomial(2 * k as u64, k as u64), BigInt::one() << (2 * k)))
            * &Scalar::alpha_pow(-(k as i64));
        r.check(format!("S²×B²: S^{} table = presentation = formula", 2 * k), table == pres && pres == formula);
    }
    r.check("S²×B²: S ↦ 0", invariant_s2xb2(SphereGenerator::SPow(1), &one).map(|v| v.is_zero()).unwrap_or(false));
    r.check("S²×B²: D ↦ 0", invariant_s2xb2(SphereGenerator::D, &one).map(|v| v.is_zero()).unwrap_or(false));
    let y = Scalar::alpha();
    r.check("S²×B²: ∅ ↦ ev²", invariant_s2xb2(SphereGenerator::Empty, &y).ok() == Some(&y * &y));
    let mut words_ok = true;
    for len in 0..=6 {
        for bits in 0..(1u32 << len) {
            let w: Vec<Sphere> = (0..len).map(|i| if (bits >> i) & 1 == 1 { Sphere::D } else { Sphere::S }).collect();
            let x = SphereSkein::word(w);
            let s2 = s2xb2_on_words(&x, &one).ok() == apply_table(&x, &|g| invariant_s2xb2(g, &one)).ok();
            let b3 = Some(b3xs1_on_words(&x)) == apply_table(&x, &|g| Ok(invariant_b3xs1(g))).ok();
            words_ok &= s2 && b3;
        }
    }
    r.check("word evaluations factor through the trace reduction (length ≤ 6)", words_ok);
    r.check(
        "B³×S¹: ∅ ↦ 1, S^3 ↦ 0, D ↦ 1",
        invariant_b3xs1(SphereGenerator::Empty).is_one()
            && invariant_b3xs1(SphereGenerator::SPow(3)).is_zero()
            && invariant_b3xs1(SphereGenerator::D).is_one(),
    );
    r.check("cyclic toric cap (2,1) = 2", cyclic_toric_cap(2, 1).ok() == Some(Scalar::int(2)));
    r.check("cyclic toric cap (1,1) rejected", matches!(cyclic_toric_cap(1, 1), Err(Error::OddProduct(1))));
    let seed = rng.gen();
    r.check("sphere rewriting confluent on random words", confluence_check(1000, 8, seed));
    let dds = SphereSkein::term(parse_word("SSS").expect("word"), -Scalar::alpha()).add(&SphereSkein::word(vec![Sphere::S]));
    r.check("DDS resolves to -aSSS + S", sphere_skein_normal_form(&"DDS".parse().expect("word")) == dds);
    let ddd = SphereSkein::term(parse_word("SSD").expect("word"), -Scalar::alpha()).add(&SphereSkein::word(vec![Sphere::D]));
    r.check("DDD resolves to -aSSD + D", sphere_skein_normal_form(&"DDD".parse().expect("word")) == ddd);
    let forms: Vec<SphereSkein> = (0..=10).map(|k| sphere_skein_normal_form(&SphereSkein::s_pow(k))).collect();
    let distinct = (0..forms.len()).all(|i| (i + 1..forms.len()).all(|j| forms[i] != forms[j]));
    r.check("S^0..S^10 pairwise distinct", distinct);
    for u in [Scalar::one(), Scalar::alpha(), Scalar::frac(-3, 2)] {
        let t = rank_one_tables(&u).expect("unit");
        r.extend(t.battery());
        let mut dw = true;
        for (k, h) in [(0usize, 1u64), (1, 2), (2, 4)] {
            dw &= t.closed_value(k).as_rational() == Some(rank_one_dw(h));
        }
        r.check(format!("rank one u={u}: handle values = ½|H₃|"), dw);
    }
    r.check("rank_one_dw(1) = 1/2", rank_one_dw(1) == Rational::new(BigInt::one(), BigInt::from(2)));
    r.check("rank one rejects u = 0", rank_one_tables(&Scalar::zero()).is_err());
    let mut euler = true;
    for _ in 0..20 {
        let w = random_word(rng, 4);
        let pres = s2xb2_presentation(&w);
        let y = random_scalar(rng);
        if y.is_zero() {
            continue;
        }
        let chi = rng.gen_range(-3..=3);
        let lhs = handlebody_invariant(&pres, &y, chi);
        let rhs = handlebody_invariant(&pres, &one, chi).map(|v| &v * &y.pow(chi).expect("unit"));
        euler &= lhs.is_ok() && lhs == rhs;
    }
    r.check("Euler rescaling y^χ on random inputs", euler);
    let trivial = builtin_algebra(Builtin::Trivial(Scalar::int(3))).expect("unit");
    r.check("rank-one Kirby color exists", kirby_gram(&trivial, 1).is_ok());
    r
}
