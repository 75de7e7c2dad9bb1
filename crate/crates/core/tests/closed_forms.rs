use kocalc_core::catalog::{self, expected_table, Exceptional, SpaceId};
use kocalc_core::ko_table;

fn check(id: SpaceId) {
    let space = catalog::space(&id).unwrap();
    let labels: Vec<String> = space.twist_labels().iter().map(|s| s.to_string()).collect();
    for (twisted, label) in labels.iter().enumerate() {
        let computed = ko_table(&space, Some(label)).unwrap();
        let expected = expected_table(&id, twisted == 1).unwrap();
        assert!(
            computed.same_groups(&expected),
            "{id} twist {label}: computed {computed:?}, expected {expected:?}"
        );
    }
}

#[test]
fn projective_spaces() {
    (1..=16).for_each(|n| check(SpaceId::ProjectiveSpace(n)));
}

#[test]
fn grassmannians() {
    for m in 1..=5 {
        for n in m..=10 - m {
            check(SpaceId::Grassmannian(m, n));
            check(SpaceId::Grassmannian(n, m));
        }
    }
}

#[test]
fn symplectic_grassmannians() {
    (1..=8).for_each(|n| check(SpaceId::SymplecticGrassmannian(n)));
}

#[test]
fn quadrics() {
    (3..=12).for_each(|n| check(SpaceId::Quadric(n)));
}

#[test]
fn spinor_varieties() {
    (2..=9).for_each(|n| check(SpaceId::Spinor(n)));
}

#[test]
fn exceptional_spaces() {
    check(SpaceId::Exceptional(Exceptional::EIII));
    check(SpaceId::Exceptional(Exceptional::EVII));
}

#[test]
fn point() {
    check(SpaceId::Point);
}
