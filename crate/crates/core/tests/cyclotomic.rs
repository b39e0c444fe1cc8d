use std::sync::Arc;

use dimfermat_core::cyclotomic::{cyclotomic_polynomial, totient};
use dimfermat_core::{make_field, CycloElem, CycloField};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Naive integer polynomial product, ascending coefficients.
fn int_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn as_i64(v: Vec<BigInt>) -> Vec<i64> {
    v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
}

#[test]
fn phi_n_times_proper_divisors_is_t_n_minus_1() {
    for n in 1..=40u32 {
        let phi = as_i64(cyclotomic_polynomial(n).unwrap());
        assert_eq!(phi.len() as u32 - 1, totient(n), "degree of Phi_{n}");
        assert_eq!(*phi.last().unwrap(), 1, "monic");
        let mut prod = phi;
        for d in (1..n).filter(|d| n % d == 0) {
            prod = int_mul(&prod, &as_i64(cyclotomic_polynomial(d).unwrap()));
        }
        let mut expect = vec![0i64; n as usize + 1];
        expect[0] = -1;
        expect[n as usize] = 1;
        assert_eq!(prod, expect, "n = {n}");
    }
}

#[test]
fn frozen_small_moduli() {
    assert_eq!(as_i64(cyclotomic_polynomial(1).unwrap()), vec![-1, 1]);
    assert_eq!(as_i64(cyclotomic_polynomial(3).unwrap()), vec![1, 1, 1]);
    assert_eq!(as_i64(cyclotomic_polynomial(6).unwrap()), vec![1, -1, 1]);
    assert_eq!(make_field(6).unwrap().modulus().len(), 3);
    assert!(make_field(0).is_err());
}

#[test]
fn field_examples() {
    let f3 = make_field(3).unwrap();
    let z = f3.root_of_unity(1);
    assert!((&(&z * &z) + &z + f3.one()).is_zero());
    let f6 = make_field(6).unwrap();
    assert!((&f6.root_of_unity(1) * &f6.root_of_unity(5)).is_one());
    assert_eq!(f6.root_of_unity(3), -f6.one());
    let x = f6.from_coeffs(&[BigRational::new(3.into(), 7.into()), BigRational::from_integer((-2).into())]);
    assert_eq!(&f6.one() * &x, x);
}

#[test]
fn roots_are_primitive() {
    for n in [1u32, 2, 3, 4, 5, 6, 8, 12, 24, 30] {
        let f = make_field(n).unwrap();
        let z = f.root_of_unity(1);
        assert!(z.pow(n as u64).is_one(), "zeta^n = 1 for n = {n}");
        for k in 1..n {
            assert!(!z.pow(k as u64).is_one(), "zeta_{n}^{k} != 1");
        }
    }
}

#[test]
fn embedded_roots_satisfy_their_cyclotomic_polynomial() {
    for n in [12u32, 24, 30] {
        let f = make_field(n).unwrap();
        for d in (1..=n).filter(|d| n % d == 0) {
            let w = f.root_of_unity((n / d) as i64);
            let phi_d = cyclotomic_polynomial(d).unwrap();
            let mut acc = f.zero();
            for (k, c) in phi_d.into_iter().enumerate() {
                acc += &(&w.pow(k as u64) * &f.from_integer(c));
            }
            assert!(acc.is_zero(), "Phi_{d}(zeta_{n}^{}) = 0", n / d);
        }
    }
}

fn elem(field: &Arc<CycloField>, v: &[(i64, i64)]) -> CycloElem {
    let coeffs: Vec<BigRational> = v.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect();
    field.from_coeffs(&coeffs)
}

fn small_elem() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..=20, 1i64..=9), 1..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_property(n in prop::sample::select(vec![3u32, 5, 6, 8, 12, 24, 30]), a in small_elem()) {
        let f = make_field(n).unwrap();
        let x = elem(&f, &a);
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn ring_axioms(n in prop::sample::select(vec![3u32, 8, 12, 30]), a in small_elem(), b in small_elem(), c in small_elem()) {
        let f = make_field(n).unwrap();
        let (x, y, z) = (elem(&f, &a), elem(&f, &b), elem(&f, &c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(x.to_text(), x.clone().to_text());
    }
}
