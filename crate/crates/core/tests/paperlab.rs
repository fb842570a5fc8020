mod common;

use common::Naive;
use toticay::domsolve::{Budget, DomMode};
use toticay::numtheory::factorize;
use toticay::paperlab::{
    classify_instance, paper_certificates, predicted_params, run_verification, Claim, Family,
    ParamField, Scope, Verdict,
};

fn pairs(c: &toticay::paperlab::Certificate) -> Vec<(u64, u64)> {
    c.set.vertices().iter().map(|x| (x.u, x.v)).collect()
}

fn code(mode: DomMode) -> char {
    match mode {
        DomMode::Dominating => 'd',
        DomMode::Total => 't',
        DomMode::Connected => 'c',
    }
}

#[test]
fn whole_graph_certificates_agree_with_the_oracle() {
    for (p, m) in [(2, 16), (3, 9), (3, 15), (3, 18), (5, 35), (2, 12), (3, 6), (7, 49)] {
        let naive = Naive::new(p, m);
        for c in paper_certificates(p, &factorize(m).unwrap()) {
            for claim in c.claims.iter().filter(|cl| cl.scope == Scope::Graph) {
                assert!(
                    naive.dominates(&pairs(&c), code(claim.mode)),
                    "({p},{m}) {} {:?}",
                    c.name,
                    claim.mode
                );
            }
        }
    }
}

#[test]
fn named_certificates() {
    let get = |p, m, name: &str| {
        let cs = paper_certificates(p, &factorize(m).unwrap());
        let c = cs.into_iter().find(|c| c.name == name).expect(name);
        let mut v = pairs(&c);
        v.sort();
        v
    };
    assert_eq!(get(2, 16, "D"), vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    assert_eq!(get(3, 15, "T"), vec![(0, 0), (0, 1), (1, 6), (1, 10), (2, 2)]);
    assert_eq!(get(3, 18, "C"), vec![(0, 0), (0, 1), (0, 3), (1, 3), (1, 4), (2, 2), (2, 5)]);
    assert!(paper_certificates(5, &factorize(12).unwrap()).is_empty());
}

#[test]
fn classification_examples() {
    let tag = classify_instance(3, &factorize(15).unwrap());
    assert_eq!(tag.family, Family::TwoPrime);
    assert!(tag.all_exponents_one && tag.has_three() && !tag.m_even);
    let tag = classify_instance(2, &factorize(30).unwrap());
    assert_eq!(tag.family, Family::ThreePrime);
    assert!(tag.p_is_two && tag.all_exponents_one);
    assert_eq!(classify_instance(5, &factorize(12).unwrap()).family, Family::Uncovered);
}

#[test]
fn predictions_satisfy_the_sandwich_as_intervals() {
    for p in [2u64, 3, 5, 7, 11] {
        for m in 2..=500 {
            let Ok(pp) = predicted_params(p, &factorize(m).unwrap()) else { continue };
            if let (Some((lo, _)), Some((_, Some(hi_t)))) = (pp.gamma.range(), pp.gamma_t.range()) {
                assert!(lo <= hi_t, "({p},{m})");
            }
            let forced = p == 2 && m % 2 == 0;
            assert_eq!(pp.gamma_c.claim == Claim::Nonexistent, forced, "({p},{m})");
        }
    }
}

#[test]
fn verification_examples() {
    let r = run_verification(2, 16, Budget::default()).unwrap();
    assert!(r.fields.iter().all(|f| f.verdict == Verdict::Match));

    let r = run_verification(3, 15, Budget::default()).unwrap();
    assert_eq!(r.exit_code(), 0);
    assert!(r.certificates.iter().all(|c| c.holds()));

    let r = run_verification(5, 12, Budget::default()).unwrap();
    assert!(r.fields.iter().all(|f| f.verdict == Verdict::Uncovered));
    assert!(r.field(ParamField::Diam).predicted.is_none());
}

#[test]
fn remark_bound_at_k_one() {
    for m in [12, 36] {
        let r = run_verification(2, m, Budget::default()).unwrap();
        let rm = r.remark.as_ref().expect("remark applies");
        assert_eq!((rm.k, rm.bound), (1, 8));
        assert_eq!(rm.gamma_t, Verdict::Consistent);
    }
    assert!(run_verification(2, 18, Budget::default()).unwrap().remark.is_none());
}
