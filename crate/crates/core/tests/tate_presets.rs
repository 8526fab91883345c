use ktwist::tate::complex::build_complex;
use ktwist::tate::homology::homology;
use ktwist::tate::presets::{preset, PresetName, X3Image};
use ktwist::tate::relation::Assignment;
use num_bigint::BigInt;

const BOUND: usize = 6;

fn check(name: PresetName, ks: std::ops::RangeInclusive<i64>) {
    for k in ks {
        let p = preset::<BigInt>(name, k, None, X3Image::default()).unwrap();
        let h = homology(&build_complex(p.spec(Assignment::Lowest).unwrap(), BOUND).unwrap());
        let want = p.expected.as_ref().unwrap().table(BOUND);
        assert_eq!(h, want, "{name} k={k}\n{h}");
    }
}

#[test]
fn g2_is_exterior_on_one() {
    check(PresetName::G2, 1..=20);
}

#[test]
fn f4_core_concentrated_in_degree_zero() {
    check(PresetName::F4Core, 1..=20);
}

#[test]
fn e7_core_concentrated_in_degree_zero() {
    check(PresetName::E7Core, 1..=12);
}

#[test]
fn e8_core_concentrated_in_degree_zero() {
    check(PresetName::E8Core, 1..=12);
}

#[test]
fn spin_r3_is_exterior_on_one() {
    check(PresetName::SpinR3, 1..=20);
}

#[test]
fn spin_r4_is_exterior_on_two() {
    check(PresetName::SpinR4, 1..=12);
}

#[test]
fn rejected_e7_relation_has_higher_torsion() {
    let hits: Vec<i64> = (1..=12)
        .filter(|&k| {
            let p = preset::<BigInt>(PresetName::E7Rejected, k, None, X3Image::default()).unwrap();
            homology(&build_complex(p.spec(Assignment::Lowest).unwrap(), BOUND).unwrap())
                .has_higher_torsion()
        })
        .collect();
    assert!(!hits.is_empty());
}
