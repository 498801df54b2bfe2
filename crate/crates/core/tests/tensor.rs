use weylflow::exactmath::{GaussRat, Rat};
use weylflow::fock::{parse_state, ModeWindow, State};
use weylflow::grading::{classify, RegionTag};
use weylflow::tensor::*;

#[test]
fn central_charge_examples() {
    assert_eq!(tensor_central_charge(&[GaussRat::zero(), GaussRat::zero()]), GaussRat::from_int(4));
    assert_eq!(tensor_central_charge(&[GaussRat::frac(1, 2), GaussRat::frac(1, 2)]), GaussRat::from_int(-2));
    assert_eq!(tensor_central_charge(&[]), GaussRat::zero());
}

#[test]
fn classify_examples() {
    let tag = |mus: &[GaussRat]| tensor_classify(mus).unwrap().tag;
    assert_eq!(tag(&[GaussRat::frac(1, 3), GaussRat::frac(1, 2)]), RegionTag::OmegaVoa);
    assert_eq!(tag(&[GaussRat::frac(1, 3), GaussRat::from_int(2)]), RegionTag::NotOmegaGenerated);
    assert_eq!(tag(&[GaussRat::i(), GaussRat::frac(1, 2)]), RegionTag::StripConfOmega);
    assert!(tensor_classify(&[]).is_none());
    let mu = GaussRat::complex(1, 4, 1, 2);
    assert_eq!(tensor_classify(std::slice::from_ref(&mu)).unwrap(), classify(&mu));
}

#[test]
fn vacuum_mode_is_identity() {
    let w = parse_tensor("a(-2)a*(0)|0>(x)a*(-1)|0>").unwrap().expand();
    let one = TensorState::vacuum(2).expand();
    assert_eq!(tensor_mode(&one, -1, &w), w);
    for p in [-3, -2, 0, 1] {
        assert!(tensor_mode(&one, p, &w).is_zero());
    }
}

#[test]
fn weight_additivity() {
    let mus = [GaussRat::frac(1, 3), GaussRat::complex(1, 4, 1, 4)];
    for key in tensor_basis(&mus, &Rat::from(2), ModeWindow::symmetric(2)).unwrap() {
        let w = TensorVec::monomial(key.clone());
        let t = TensorState::new(key.iter().map(|m| State::monomial(m.clone())).collect());
        let weight = t.weight(&mus).unwrap();
        assert_eq!(tensor_virasoro(&mus, 0, &w), w.scaled(&weight), "{w}");
    }
}

#[test]
fn rank_two_brackets() {
    let mus = [GaussRat::frac(1, 2), GaussRat::frac(2, 5)];
    assert_eq!(tensor_virasoro_check(&mus, &Rat::one(), ModeWindow::symmetric(2), -2, 2).unwrap(), None);
}

#[test]
fn grammar_round_trip() {
    let t = parse_tensor("a(-1)|0>(x)(a*(0)|0> + 2*a*(-1)|0>)").unwrap();
    assert_eq!(t.factors[1], parse_state("a*(0)|0> + 2*a*(-1)|0>").unwrap());
    assert_eq!(parse_tensor(&t.to_string()).unwrap(), t);
    let err = parse_tensor("|0>(x)a(1)|0>").unwrap_err();
    assert_eq!(err.position, 6);
}
