mod engine {
    use weylflow::exactmath::{GaussRat, Rat};
    use weylflow::fock::{parse_state, Monomial, State};
    use weylflow::modes::*;

    fn st(s: &str) -> State {
        parse_state(s).unwrap()
    }

    #[test]
    fn generator_fields() {
        let w = st("a(-2)a*(-1)a*(0)|0> + 2*a(-1)a*(-3)|0>");
        let a = State::monomial(Monomial::a_gen());
        let s = State::monomial(Monomial::astar_gen());
        for n in -4..=4 {
            assert_eq!(mode_of(&a, n, &w), act_gen(GenMode::a(n), &w), "a({n})");
            assert_eq!(mode_of(&s, n, &w), act_gen(GenMode::astar(n + 1), &w), "a*({})", n + 1);
        }
    }

    #[test]
    fn beta_zero_on_a() {
        let beta = st("a(-1)a*(0)|0>");
        assert_eq!(mode_of(&beta, 0, &st("a(-1)|0>")), st("-1*a(-1)|0>"));
    }

    #[test]
    fn vacuum_modes() {
        let w = st("a(-1)a*(0)|0>");
        assert_eq!(mode_of(&State::vacuum(), -1, &w), w);
        assert!(mode_of(&State::vacuum(), 0, &w).is_zero());
        assert!(mode_of(&State::vacuum(), -2, &w).is_zero());
    }

    #[test]
    fn truncation_bound_is_sharp_enough() {
        let v = st("a(-2)a*(0)|0>");
        let w = st("a(-1)a*(-1)|0>");
        let bound = state_truncation_bound(&v, &w);
        for p in bound..bound + 4 {
            assert!(mode_of(&v, p, &w).is_zero());
        }
    }

    #[test]
    fn overflow_is_reported() {
        let engine = ModeEngine::with_cap(GaussRat::frac(1, 2), Rat::one());
        let r = engine.mode_of(&st("a(-1)|0>"), -2, &st("a(-1)|0>"));
        assert!(r.is_err());
        assert!(engine.mode_of(&st("a(-1)|0>"), 0, &st("a*(0)|0>")).is_ok());
    }
}

mod gen {
    use weylflow::exactmath::GaussRat;
    use weylflow::fock::{parse_state, State};
    use weylflow::modes::*;

    fn st(s: &str) -> State {
        parse_state(s).unwrap()
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(act_gen(GenMode::a(0), &st("a*(0)|0>")), State::vacuum());
        assert_eq!(act_gen(GenMode::a(1), &st("a(-1)|0>")), State::zero());
        assert_eq!(act_gen(GenMode::astar(1), &st("a(-1)a(-1)|0>")), st("-2*a(-1)|0>"));
    }

    #[test]
    fn creation_appends() {
        assert_eq!(act_gen(GenMode::a(-2), &st("a*(0)|0>")), st("a(-2)a*(0)|0>"));
        assert_eq!(act_gen(GenMode::astar(-1), &State::vacuum()), st("a*(-1)|0>"));
    }

    #[test]
    fn generator_brackets() {
        let w = st("a(-2)a*(-1)a*(0)|0> + 3*a(-1)a(-1)a*(-2)|0>");
        for m in -3..=3 {
            for n in -3..=3 {
                for (x, y) in [(GenMode::a(m), GenMode::astar(n)), (GenMode::astar(m), GenMode::a(n))] {
                    let lhs = &act_word(&[x, y], &w) - &act_word(&[y, x], &w);
                    let rhs = w.scaled(&GaussRat::from_int(x.bracket(&y)));
                    assert_eq!(lhs, rhs, "[{x}, {y}]");
                }
            }
        }
    }
}

mod operators {
    use weylflow::exactmath::GaussRat;
    use weylflow::fock::{parse_state, State};
    use weylflow::modes::*;

    fn st(s: &str) -> State {
        parse_state(s).unwrap()
    }

    #[test]
    fn d_examples() {
        assert!(d_op(&State::vacuum()).is_zero());
        assert_eq!(d_op(&beta_state()), st("a(-2)a*(0)|0> + a(-1)a*(-1)|0>"));
        assert_eq!(d_op(&st("a(-1)|0>")), st("a(-2)|0>"));
    }

    #[test]
    fn l0_on_weight_two_monomial() {
        let s = st("a(-2)a*(0)|0>");
        for mu in [GaussRat::frac(1, 3), GaussRat::complex(1, 4, 1, 4)] {
            assert_eq!(virasoro_mode_exact(&mu, 0, &s), s.scaled(&GaussRat::from_int(2)));
        }
    }

    #[test]
    fn l2_on_omega_gives_half_central_charge() {
        let mu = GaussRat::frac(1, 3);
        let w = omega_state(&mu);
        let c = central_charge(&mu);
        assert_eq!(virasoro_mode_exact(&mu, 2, &w), State::vacuum().scaled(&(&c * &GaussRat::frac(1, 2))));
    }

    #[test]
    fn expansion_matches_recursion_on_small_cases() {
        let v = st("a(-2)a*(-1)|0>");
        let w = st("a(-1)a*(0)a*(-1)|0>");
        for p in -4..=4 {
            assert_eq!(mode_of(&v, p, &w), expansion_mode_of(&v, p, &w), "p = {p}");
        }
    }

    #[test]
    fn generator_commutators() {
        let a = st("a(-1)|0>");
        let s = st("a*(0)|0>");
        for n in -2..=2 {
            for m in -2..=2 {
                let (lhs, _) = commutator_sides(&a, &s, n, m, &State::vacuum());
                let expected = if n + m + 1 == 0 { State::vacuum() } else { State::zero() };
                assert_eq!(lhs, expected);
                assert!(commutator_check(&a, &s, n, m, &State::vacuum()));
            }
        }
    }
}
