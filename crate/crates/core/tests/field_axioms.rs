use dickson_core::rings::{ExtField, FiniteField, PrimeField, Ring, Sample};
use dickson_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check_axioms<F: FiniteField + Sample>(field: &F, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let (a, b, c) = (
            field.sample(&mut rng),
            field.sample(&mut rng),
            field.sample(&mut rng),
        );
        let d = field.describe();
        assert_eq!(
            field.add(&field.add(&a, &b), &c),
            field.add(&a, &field.add(&b, &c)),
            "{d}"
        );
        assert_eq!(
            field.mul(&field.mul(&a, &b), &c),
            field.mul(&a, &field.mul(&b, &c)),
            "{d}"
        );
        assert_eq!(field.add(&a, &b), field.add(&b, &a), "{d}");
        assert_eq!(field.mul(&a, &b), field.mul(&b, &a), "{d}");
        assert_eq!(
            field.mul(&a, &field.add(&b, &c)),
            field.add(&field.mul(&a, &b), &field.mul(&a, &c)),
            "{d}"
        );
        assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
        if field.is_zero(&a) {
            assert_eq!(field.inv(&a), Err(Error::DivisionByZero));
        } else {
            assert!(field.is_one(&field.mul(&a, &field.inv(&a).unwrap())), "{d}");
        }
    }
}

#[test]
fn axioms_on_random_triples() {
    check_axioms(&PrimeField::new(7).unwrap(), 1);
    check_axioms(&PrimeField::new(31).unwrap(), 2);
    check_axioms(&ExtField::new(2, 4).unwrap(), 3);
    check_axioms(&ExtField::new(3, 3).unwrap(), 4);
}

/// `a^(q-1) = 1` for every nonzero element of every field with `q ≤ 3^5`.
#[test]
fn fermat_exhaustive_up_to_243() {
    let mut fields = 0;
    for q in 2..=243u64 {
        let Ok(field) = ExtField::of_order(q) else {
            continue;
        };
        fields += 1;
        assert_eq!(field.order(), q);
        let nonzero = field.elements().skip(1);
        assert!(
            nonzero
                .map(|a| field.pow(&a, q - 1))
                .all(|v| field.is_one(&v)),
            "q = {q}"
        );
        if field.degree() == 1 {
            let fp = PrimeField::new(q).unwrap();
            assert!((1..q).all(|a| fp.pow(&a, q - 1) == 1), "p = {q}");
        }
    }
    // 53 primes and 15 higher prime powers up to 243
    assert_eq!(fields, 53 + 15);
}
