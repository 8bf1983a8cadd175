//! Structural invariants of Wronskians and their computed zero sets over
//! random small partitions.

use hermite_wronskian::polyalg::{check_duality, wronskian_of_partition};
use hermite_wronskian::rootfind::{
    count_imaginary_roots_exact, count_real_roots_exact, find_roots, symmetrize_roots, RootSet,
};
use hermite_wronskian::{BigPoly, Partition};
use num_traits::Zero;
use proptest::prelude::*;
use rug::{Complex, Float, Integer};

const PREC: u32 = 256;

fn to_float(c: &impl ToString) -> Float {
    Float::with_val(PREC, c.to_string().parse::<Integer>().unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..6, 0..5).prop_map(|parts| Partition::new(parts).unwrap())
}

/// `d(d+1)/2`, `d` = #odd - #even among `λ_i + n - i`.
fn origin_oracle(parts: &[u32]) -> usize {
    let n = parts.len();
    let d: i64 = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| if (p as usize + n - 1 - i) % 2 == 1 { 1 } else { -1 })
        .sum();
    (d * (d + 1) / 2) as usize
}

/// Expands `lc · z^m · ∏ (z - r)^mult` and returns the largest coefficient
/// error relative to the largest coefficient of `p`.
fn vieta_error(p: &BigPoly, rs: &RootSet) -> f64 {
    let prec = PREC;
    let mut acc = vec![Complex::with_val(prec, 1)];
    let mut factors: Vec<Complex> = vec![Complex::new(prec); rs.origin_multiplicity];
    for r in &rs.roots {
        factors.extend(std::iter::repeat_n(r.z.clone(), r.mult));
    }
    for z in factors {
        let mut next = vec![Complex::new(prec); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= Complex::with_val(prec, c * &z);
        }
        acc = next;
    }
    let lc = to_float(p.leading().unwrap());
    let big = p
        .coeffs()
        .iter()
        .map(|c| to_float(c).abs())
        .fold(Float::with_val(prec, 0), |a, b| if b > a { b } else { a });
    let mut worst = 0.0f64;
    for (j, c) in p.coeffs().iter().enumerate() {
        let want = to_float(c);
        let got = Complex::with_val(prec, &acc[j] * &lc);
        let err = Complex::with_val(prec, got - want);
        worst = worst.max((Float::with_val(prec, err.abs_ref()) / &big).to_f64());
    }
    worst
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn degree_parity_and_origin(lam in partition()) {
        let w = wronskian_of_partition(&lam).unwrap();
        let weight = lam.weight().unwrap() as usize;
        prop_assert_eq!(w.degree(), Some(weight));
        for (j, c) in w.coeffs().iter().enumerate() {
            prop_assert!(c.is_zero() || j % 2 == weight % 2);
        }
        let parts = lam.integer_parts().unwrap();
        prop_assert_eq!(w.valuation(), Some(origin_oracle(&parts)));
    }

    #[test]
    fn duality_constant_exists(lam in partition()) {
        prop_assert!(check_duality(&lam).is_ok());
    }

    #[test]
    fn roots_reconstruct_the_polynomial(lam in partition()) {
        let w = wronskian_of_partition(&lam).unwrap();
        let rs = find_roots(&w, 30).unwrap();
        let rs = symmetrize_roots(&rs, true).unwrap();
        prop_assert_eq!(rs.total_multiplicity(), lam.weight().unwrap() as usize);
        let err = vieta_error(&w, &rs);
        prop_assert!(err < 1e-25, "{}: {}", lam, err);
    }

    #[test]
    fn classification_agrees_with_exact_counts(lam in partition()) {
        let w = wronskian_of_partition(&lam).unwrap();
        prop_assume!(!lam.is_empty());
        let rs = symmetrize_roots(&find_roots(&w, 30).unwrap(), true).unwrap();
        let c = rs.classify();
        let at_origin = usize::from(rs.origin_multiplicity > 0);
        prop_assert_eq!(c.real + at_origin, count_real_roots_exact(&w).unwrap());
        let im = count_imaginary_roots_exact(&w).unwrap();
        prop_assert_eq!((c.imaginary, c.imaginary_upper), (im.total, im.upper));
    }
}

#[test]
fn root_finding_is_deterministic() {
    let w = wronskian_of_partition(&"6,4,4,1".parse().unwrap()).unwrap();
    let a = find_roots(&w, 40).unwrap();
    let b = find_roots(&w, 40).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_json_value(), b.to_json_value());
}

#[test]
fn empty_partition_is_constant() {
    let w = wronskian_of_partition(&Partition::empty()).unwrap();
    assert_eq!(w, BigPoly::one());
    let rs = find_roots(&w, 30).unwrap();
    assert!(rs.roots.is_empty() && rs.origin_multiplicity == 0);
}
