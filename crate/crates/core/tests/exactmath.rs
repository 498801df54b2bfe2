mod gauss {
    use num_bigint::BigInt;

    use weylflow::exactmath::*;

    fn g(s: &str) -> GaussRat {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_text() {
        assert_eq!(GaussRat::complex(2, 3, 1, 1).to_string(), "2/3+i");
        assert_eq!(GaussRat::complex(1, 4, -1, 2).to_string(), "1/4-1/2*i");
        assert_eq!(GaussRat::complex(0, 1, 1, 2).to_string(), "1/2*i");
        assert_eq!(GaussRat::complex(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(GaussRat::zero().to_string(), "0");
        assert_eq!(GaussRat::frac(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(g("1/4+1/2i"), GaussRat::complex(1, 4, 1, 2));
        assert_eq!(g("1/4 + i/2"), GaussRat::complex(1, 4, 1, 2));
        assert_eq!(g("1/4+1/2*i"), GaussRat::complex(1, 4, 1, 2));
        assert_eq!(g("(2/3+i)"), GaussRat::complex(2, 3, 1, 1));
        assert_eq!(g("-i"), GaussRat::complex(0, 1, -1, 1));
        assert_eq!(g("-1/2"), GaussRat::frac(-1, 2));
        assert_eq!(g("3/4-1/4*i"), GaussRat::complex(3, 4, -1, 4));
    }

    #[test]
    fn parse_errors() {
        assert!("0.5".parse::<GaussRat>().is_err());
        assert!("sqrt(2)".parse::<GaussRat>().is_err());
        assert!("1+".parse::<GaussRat>().is_err());
        assert!("".parse::<GaussRat>().is_err());
    }

    #[test]
    fn ceil_re_examples() {
        assert_eq!(ceil_re(&GaussRat::frac(3, 2)), BigInt::from(2));
        assert_eq!(ceil_re(&GaussRat::from_int(2)), BigInt::from(2));
        assert_eq!(ceil_re(&GaussRat::complex(-1, 3, 5, 1)), BigInt::from(0));
    }
}

mod linalg {
    use weylflow::exactmath::*;

    fn e(dim: usize, i: usize) -> SparseVec {
        SparseVec::unit(dim, i)
    }

    #[test]
    fn empty_span_has_rank_zero() {
        assert_eq!(row_reduce(&[]).0, 0);
    }

    #[test]
    fn gaussian_scalar_dependence() {
        let mut v = e(2, 0);
        v.scale(&GaussRat::i());
        assert_eq!(row_reduce(&[e(2, 0), v]).0, 1);
    }

    #[test]
    fn elimination_to_unit_pivots() {
        let mut a = e(2, 0);
        a.add_at(1, &GaussRat::one());
        let (rank, basis) = row_reduce(&[a, e(2, 1)]);
        assert_eq!(rank, 2);
        assert_eq!(basis, vec![e(2, 0), e(2, 1)]);
    }

    #[test]
    fn membership_examples() {
        assert!(membership(&SparseVec::zero(3), &[]));
        assert!(!membership(&e(3, 0), &[]));
        let mut v = e(3, 0);
        v.scale(&GaussRat::complex(1, 1, 1, 1));
        assert!(membership(&v, &[e(3, 0)]));
    }
}

mod rat {
    use num_bigint::BigInt;

    use weylflow::exactmath::*;

    #[test]
    fn lowest_terms() {
        let r = Rat::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_rejects_decimals() {
        assert!("0.5".parse::<Rat>().is_err());
        assert!("1/0".parse::<Rat>().is_err());
        assert_eq!("-2/6".parse::<Rat>().unwrap(), Rat::new(-1, 3));
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(2, 3), BigInt::from(0));
        assert_eq!(binom(-1, 3), BigInt::from(-1));
        assert_eq!(binom(-2, 2), BigInt::from(3));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(-3, 0), BigInt::from(1));
    }

    #[test]
    fn ceil_and_floor() {
        assert_eq!(Rat::new(3, 2).ceil(), BigInt::from(2));
        assert_eq!(Rat::new(-1, 3).ceil(), BigInt::from(0));
        assert_eq!(Rat::new(-1, 3).floor(), BigInt::from(-1));
        assert_eq!(Rat::from(2).ceil(), BigInt::from(2));
    }
}

mod weight {
    use weylflow::exactmath::*;

    #[test]
    fn evaluation_is_exact() {
        let w = WeightExpr::new(1, -1);
        assert_eq!(w.evaluate(&GaussRat::frac(1, 2)), GaussRat::frac(1, 2));
        assert_eq!(w.evaluate(&GaussRat::complex(1, 4, 1, 4)), GaussRat::complex(3, 4, -1, 4));
        assert_eq!((w + WeightExpr::new(0, 1)).evaluate(&GaussRat::i()), GaussRat::from_int(1));
    }
}
