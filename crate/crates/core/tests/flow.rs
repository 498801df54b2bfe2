use weylflow::exactmath::GaussRat;
use weylflow::flow::*;
use weylflow::fock::{parse_state, State};
use weylflow::modes::{omega_state, GenMode};

fn st(s: &str) -> State {
    parse_state(s).unwrap()
}

#[test]
fn central_charge_values() {
    assert_eq!(central_charge(&GaussRat::zero()), GaussRat::from_int(2));
    assert_eq!(central_charge(&GaussRat::frac(1, 2)), GaussRat::from_int(-1));
    assert_eq!(central_charge(&GaussRat::frac(-1, 2)), GaussRat::from_int(11));
    assert_eq!(central_charge(&GaussRat::from_int(2)), GaussRat::from_int(26));
}

#[test]
fn iso_on_generators_and_omega() {
    assert_eq!(flow_iso(&State::vacuum()), State::vacuum());
    assert_eq!(flow_iso(&st("a(-1)|0>")), st("a*(0)|0>"));
    assert_eq!(flow_iso(&st("a*(0)|0>")), st("-1*a(-1)|0>"));
    let mu = GaussRat::complex(1, 4, 1, 4);
    let nu = &GaussRat::one() - &mu;
    assert_eq!(flow_iso(&omega_state(&mu)), omega_state(&nu));
}

#[test]
fn mode_words() {
    assert_eq!(rho(1, GenMode::a(-1)), GenMode::a(0));
    assert_eq!(phi(&GaussRat::one(), GenMode::astar(0)).unwrap(), (GaussRat::from_int(-1), GenMode::a(0)));
    assert_eq!(
        spectral_flow(1, &GaussRat::one(), &[GenMode::a(-2)]).unwrap(),
        vec![(GaussRat::one(), GenMode::astar(-1))]
    );
    assert!(spectral_flow(0, &GaussRat::zero(), &[GenMode::a(0)]).is_err());
}

#[test]
fn composed_flow_matches_iso_on_generators() {
    // a(-m-1)1 and a*(-n)1 are single creation modes on the vacuum.
    for k in 0..4i64 {
        for g in [GenMode::a(-k - 1), GenMode::astar(-k)] {
            let (c, image) = spectral_flow(1, &GaussRat::one(), &[g]).unwrap().remove(0);
            let lhs = weylflow::modes::act_gen(image, &State::vacuum()).scaled(&c);
            let rhs = flow_iso(&weylflow::modes::act_gen(g, &State::vacuum()));
            assert_eq!(lhs, rhs, "{g}");
        }
    }
}

#[test]
fn brackets() {
    assert!(brackets_preserved(2, &GaussRat::complex(1, 2, 3, 1), -3, 3).unwrap());
}
