use fkverma::Cyc;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn cyc() -> impl Strategy<Value = Cyc> {
    (rational(), rational()).prop_map(|(a, b)| Cyc::new(a, b))
}

proptest! {
    #[test]
    fn ring_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Cyc::zero(), a.clone());
        prop_assert_eq!(&a * &Cyc::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in cyc()) {
        match a.inv() {
            Ok(i) => prop_assert!((&a * &i).is_one()),
            Err(_) => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn conjugation_is_an_automorphism(a in cyc(), b in cyc()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(Cyc::from(a.norm()), &a * &a.conj());
    }

    #[test]
    fn text_round_trip(a in cyc()) {
        let back: Cyc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn json_round_trip(a in cyc()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: Cyc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn zeta_powers_are_periodic(k in -20i64..20) {
        prop_assert_eq!(Cyc::zeta_pow(k), Cyc::zeta_pow(k + 3));
        prop_assert!((&(&Cyc::zeta_pow(k) + &Cyc::zeta_pow(k + 1)) + &Cyc::zeta_pow(k + 2)).is_zero());
    }
}

#[test]
fn examples() {
    let z = Cyc::zeta();
    assert_eq!(&z * &z, Cyc::from_ints(-1, -1));
    assert_eq!(
        "1/2 - 3*z".parse::<Cyc>().unwrap(),
        Cyc::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer((-3).into()),
        )
    );
    assert!(Cyc::zero().inv().is_err());
    assert!("2*w".parse::<Cyc>().is_err());
}
