mod map {
    use weylflow::grading::*;

    #[test]
    fn grid_size() {
        let g: GridSpec = "0:1:1/4,0:1:1/4".parse().unwrap();
        assert_eq!(g.points().len(), 25);
        let csv = region_csv(&g.classify());
        assert_eq!(csv.lines().count(), 26);
        assert!(csv.starts_with("reMu,imMu,tag,subcase\n0,0,STRIP_CONF_OMEGA,CASE1_INTEGER\n"));
    }

    #[test]
    fn grid_rejects_decimals() {
        assert!("0:1:0.25,0:1:1/4".parse::<GridSpec>().is_err());
        assert!("0:1:0,0:1:1".parse::<GridSpec>().is_err());
    }

    #[test]
    fn standard_map_has_three_regions() {
        let map = RegionMap::standard(8);
        assert_eq!(map.cells.len(), 256);
        for tag in [RegionTag::OmegaVoa, RegionTag::StripConfOmega, RegionTag::NotOmegaGenerated] {
            assert!(map.cells.contains(&tag));
        }
    }
}

mod omega {
    use weylflow::exactmath::{GaussRat, Rat};
    use weylflow::fock::{parse_state, ModeWindow, Monomial, State, TruncConfig};
    use weylflow::grading::*;

    fn cfg(deg: i64, w: i64) -> TruncConfig {
        TruncConfig::with_default_budget(Rat::from(deg), ModeWindow::symmetric(w)).unwrap()
    }

    #[test]
    fn vr_examples() {
        let third = GaussRat::frac(1, 3);
        let blocks = vr_split(&third, &Rat::one(), ModeWindow::symmetric(3)).unwrap();
        assert!(blocks[0].r.is_zero());
        assert!(blocks[0].members.contains(&Monomial::vacuum()));
        assert!(blocks[0].members.contains(&Monomial::new(vec![0], vec![0])));
        let astar_block = blocks.iter().find(|b| b.members.contains(&Monomial::astar_gen())).unwrap();
        assert_eq!(astar_block.r, GaussRat::frac(-2, 3));

        let half = vr_split(&GaussRat::frac(1, 2), &Rat::one(), ModeWindow::symmetric(3)).unwrap();
        let b = half.iter().find(|b| b.members.contains(&Monomial::a_gen())).unwrap();
        assert!(b.members.contains(&Monomial::astar_gen()));
        assert_eq!(b.r, GaussRat::frac(-1, 2));
    }

    #[test]
    fn omega_examples() {
        let c = cfg(3, 3);
        assert_eq!(
            omega_test(&GaussRat::frac(1, 3), &State::vacuum(), &c).unwrap(),
            OmegaOutcome::InOmegaUpToTruncation
        );
        assert_eq!(
            omega_test(&GaussRat::from_int(2), &State::vacuum(), &c).unwrap(),
            OmegaOutcome::Violation { u: Monomial::a_gen(), n: -1 }
        );
        let v = parse_state("a*(0)a*(0)|0>").unwrap();
        assert_eq!(omega_test(&GaussRat::zero(), &v, &c).unwrap(), OmegaOutcome::InOmegaUpToTruncation);
        let v = parse_state("a(-1)|0>").unwrap();
        assert!(matches!(omega_test(&GaussRat::frac(1, 3), &v, &c).unwrap(), OmegaOutcome::Violation { .. }));
    }

    #[test]
    fn degree_examples() {
        let third = GaussRat::frac(1, 3);
        assert_eq!(degree(&third, &Monomial::vacuum()).unwrap().evaluate(&third), GaussRat::zero());
        assert_eq!(degree(&third, &Monomial::a_gen()).unwrap().evaluate(&third), GaussRat::frac(2, 3));
        assert_eq!(
            degree(&GaussRat::zero(), &Monomial::astar_gen()).unwrap().evaluate(&GaussRat::zero()),
            GaussRat::zero()
        );
        assert!(degree(&GaussRat::from_int(2), &Monomial::vacuum()).is_err());
    }

    #[test]
    fn lemma_scan_small() {
        let r = grading_lemma_scan(&GaussRat::frac(1, 2), &cfg(2, 2), 2).unwrap();
        assert_eq!(r.omega_basis, vec![Monomial::vacuum()]);
        assert!(r.counterexamples.is_empty());
        assert!(r.nonzero > 0);
    }
}

mod region {
    use weylflow::exactmath::GaussRat;
    use weylflow::grading::*;

    #[test]
    fn witnesses() {
        let half = classify(&GaussRat::frac(1, 2));
        assert_eq!((half.tag, half.clause), (RegionTag::OmegaVoa, Clause::FirstHalf));
        let c = classify(&GaussRat::i());
        assert_eq!((c.tag, c.subcase), (RegionTag::StripConfOmega, Subcase::Case3EdgeImag));
        let c = classify(&GaussRat::from_int(2));
        assert_eq!((c.tag, c.omega_description), (RegionTag::NotOmegaGenerated, OmegaDescription::Zero));
        let c = classify(&GaussRat::complex(1, 4, 1, 2));
        assert_eq!((c.tag, c.subcase), (RegionTag::StripConfOmega, Subcase::Case4bStripWideIm));
        let c = classify(&GaussRat::frac(3, 4));
        assert_eq!((c.tag, c.clause), (RegionTag::OmegaVoa, Clause::SecondHalf));
        let c = classify(&GaussRat::zero());
        assert_eq!((c.subcase, c.omega_description), (Subcase::Case1Integer, OmegaDescription::InfiniteFamily));
    }

    #[test]
    fn diamond_boundary() {
        // |Im| = Re is inside on the left half, and the right half mirrors it.
        assert_eq!(classify(&GaussRat::complex(1, 4, 1, 4)).tag, RegionTag::OmegaVoa);
        assert_eq!(classify(&GaussRat::complex(3, 4, 1, 4)).tag, RegionTag::OmegaVoa);
        assert_eq!(classify(&GaussRat::complex(1, 2, 1, 2)).tag, RegionTag::OmegaVoa);
        assert_eq!(classify(&GaussRat::complex(1, 2, 3, 5)).subcase, Subcase::Case4bStripWideIm);
    }
}
