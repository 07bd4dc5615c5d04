//! Shared helpers for integration tests: deterministic generation of valid
//! Lie algebras by exact basis change of the built-in cases.

use hn4::catalog;
use hn4::exact::{Matrix4, Rational, Vector4};
use hn4::hnstruct::HNStructure;
use hn4::liealg::LieAlgebra;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=3)).unwrap()
}

/// Product of a unit lower- and a unit upper-triangular matrix: always
/// invertible, with generic rational entries.
pub fn unipotent_conjugator(rng: &mut ChaCha8Rng) -> Matrix4 {
    let mut lower = Matrix4::identity();
    let mut upper = Matrix4::identity();
    for i in 0..4 {
        for j in 0..4 {
            if i > j {
                lower.set(i, j, small_rational(rng));
            } else if i < j {
                upper.set(i, j, small_rational(rng));
            }
        }
    }
    lower.compose(&upper)
}

/// An invertible matrix commuting with the whole standard triple (a right
/// quaternion multiplication in the basis the triple acts on). Conjugating
/// an algebra by it preserves integrability of the standard structure.
pub fn commuting_conjugator(rng: &mut ChaCha8Rng) -> Matrix4 {
    loop {
        let (a, b, c, d) = (
            small_rational(rng),
            small_rational(rng),
            small_rational(rng),
            small_rational(rng),
        );
        if a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() {
            continue;
        }
        let m = Matrix4::from_columns([
            Vector4::new([a.clone(), b.clone(), c.clone(), -&d]),
            Vector4::new([-&b, a.clone(), -&d, -&c]),
            Vector4::new([-&c, d.clone(), a.clone(), b.clone()]),
            Vector4::new([d.clone(), c.clone(), -&b, a.clone()]),
        ]);
        let h = HNStructure::standard();
        for alpha in 0..3 {
            assert_eq!(
                m.compose(h.j(alpha)),
                h.j(alpha).compose(&m),
                "conjugator must commute with J{}",
                alpha + 1
            );
        }
        return m;
    }
}

/// The isomorphic algebra with bracket `(x, y) -> P^-1 [P x, P y]`.
pub fn conjugate(alg: &LieAlgebra, p: &Matrix4) -> LieAlgebra {
    let p_inv = p.inverse().expect("conjugator is invertible");
    let mut brackets = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let image = alg.bracket(&p.apply(&Vector4::basis(i)), &p.apply(&Vector4::basis(j)));
            let value = p_inv.apply(&image);
            let terms: Vec<(Rational, usize)> = (0..4)
                .filter(|&k| !value[k].is_zero())
                .map(|k| (value[k].clone(), k))
                .collect();
            if !terms.is_empty() {
                brackets.push(((i, j), terms));
            }
        }
    }
    LieAlgebra::from_brackets(&brackets)
}

/// A deterministic corpus of valid algebras: `per_case` generic conjugates
/// and `per_case` triple-commuting conjugates of every catalog case. The
/// flag marks conjugates that preserve integrability of the standard triple.
pub fn fuzzed_algebras(seed: u64, per_case: usize) -> Vec<(String, LieAlgebra, bool)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for (name, _) in catalog::list_cases() {
        let base = catalog::get_case(name).unwrap().algebra;
        for round in 0..per_case {
            let generic = conjugate(&base, &unipotent_conjugator(&mut rng));
            out.push((format!("{name}/generic{round}"), generic, false));
            let commuting = conjugate(&base, &commuting_conjugator(&mut rng));
            out.push((format!("{name}/commuting{round}"), commuting, true));
        }
    }
    out
}
