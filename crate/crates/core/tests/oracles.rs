use dichotomy_core::functions::{builtin, random_quadratic};
use dichotomy_core::noise::{make_noise, NoiseKind, NoiseModel};
use dichotomy_core::{Oracle, Point2, Preference, SyntheticOracle};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unit_point() -> impl Strategy<Value = Point2> {
    (0.0f64..=1.0, 0.0f64..=1.0).prop_map(|(x, y)| Point2::new(x, y))
}

proptest! {
    #[test]
    fn noiseless_answer_is_sign_of_difference(seed in 0u64..1000, p in unit_point(), q in unit_point()) {
        let f = random_quadratic(seed);
        let mut o = SyntheticOracle::noiseless(f.clone());
        let ans = o.compare(p, q).unwrap();
        prop_assert_eq!(ans == Preference::Second, f.eval(p) >= f.eval(q));
    }

    #[test]
    fn noiseless_answers_are_antisymmetric(seed in 0u64..1000, p in unit_point(), q in unit_point()) {
        let f = random_quadratic(seed);
        prop_assume!(f.eval(p) != f.eval(q));
        let mut o = SyntheticOracle::noiseless(f);
        let pq = o.compare(p, q).unwrap();
        let qp = o.compare(q, p).unwrap();
        prop_assert_eq!(pq, qp.opposite());
    }
}

#[test]
fn noise_never_exceeds_its_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for kind in [
        NoiseKind::Zero,
        NoiseKind::UniformBounded,
        NoiseKind::AdversarialFlip,
    ] {
        let delta = 1e-3;
        let mut source = make_noise(NoiseModel {
            kind,
            delta,
            seed: 99,
        })
        .unwrap();
        let max = (0..1_000_000)
            .map(|_| source.sample(rng.gen_range(-2e-3..2e-3)).abs())
            .fold(0.0, f64::max);
        assert!(max <= delta, "{kind:?}: {max}");
    }
}

#[test]
fn identical_models_replay_identically() {
    let f = builtin("quad").unwrap();
    let model = NoiseModel::uniform(0.05, 1234);
    let mut a = SyntheticOracle::new(f.clone(), model).unwrap();
    let mut b = SyntheticOracle::new(f, model).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let stream: Vec<(Point2, Point2)> = (0..5_000)
        .map(|_| {
            let mut pt = || Point2::new(rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
            (pt(), pt())
        })
        .collect();
    let ans_a: Vec<Preference> = stream
        .iter()
        .map(|(p, q)| a.compare(*p, *q).unwrap())
        .collect();
    let ans_b: Vec<Preference> = stream
        .iter()
        .map(|(p, q)| b.compare(*p, *q).unwrap())
        .collect();
    assert_eq!(ans_a, ans_b);
    assert_eq!(a.queries_made(), stream.len() as u64);
    assert_eq!(b.queries_made(), stream.len() as u64);
}

#[test]
fn fresh_noise_per_repeated_pair() {
    // With noise comparable to the gap, the same pair must not always get
    // the same answer.
    let f = builtin("quad-x").unwrap();
    let mut o = SyntheticOracle::new(f, NoiseModel::uniform(0.1, 5)).unwrap();
    let (p, q) = (Point2::new(0.31, 0.5), Point2::new(0.32, 0.5));
    let answers: Vec<Preference> = (0..200).map(|_| o.compare(p, q).unwrap()).collect();
    assert!(answers.contains(&Preference::First) && answers.contains(&Preference::Second));
}
