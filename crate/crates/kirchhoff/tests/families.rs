use kirchhoff::spectral::rational::{ratio, to_f64};
use kirchhoff::spectral::{kf_exact, kf_spectral, laplacian_spectrum, wiener};
use kirchhoff::{Error, FamilySpec, FamilyTemplate};
use proptest::prelude::*;

fn spec(text: &str) -> FamilySpec {
    text.parse().unwrap()
}

#[test]
fn text_round_trip() {
    for text in [
        "path:5",
        "starlike:9,(4,3,1)",
        "double-branch:10,(1,1),(2,1)",
        "lollipop:8,3",
        "tri-path:9,(1,5)",
        "tri-path3:8,(1,2,2)",
        "dumbbell:3,4,2",
        "kn-minus-star:7,3",
        "g:11,9",
    ] {
        assert_eq!(spec(text).to_string(), text);
    }
    let t: FamilyTemplate = "starlike:n,(n-4,2,1)".parse().unwrap();
    assert!(t.depends_on_n());
    assert_eq!(t.instantiate(10).unwrap(), spec("starlike:10,(6,2,1)"));
    assert!("cycle".parse::<FamilyTemplate>().unwrap().depends_on_n());
}

#[test]
fn invalid_parameters() {
    for text in ["cycle:2", "lollipop:5,6", "starlike:9,(1,3,4)", "starlike:9,(4,3)", "tri-path:9,(1,4)", "g:4,9", "g:3,4", "kn-minus-matching:2,1"] {
        let err = text.parse::<FamilySpec>().and_then(|s| s.build()).unwrap_err();
        assert!(matches!(err, Error::InvalidFamilyParams(_)), "{text}: {err:?}");
    }
    assert!(matches!("octopus:5".parse::<FamilyTemplate>(), Err(Error::InvalidFamilyParams(_))));
}

#[test]
fn uncatalogued_kinds_have_no_closed_form() {
    for text in ["star:7", "cq3:9", "tri-path3:8,(1,2,2)", "dumbbell:3,4,2", "starlike:10,(3,3,3)", "g:9,6"] {
        assert_eq!(spec(text).closed_form_kf().unwrap(), None, "{text}");
    }
}

#[test]
fn tri_path_values() {
    // numpy pseudo-inverse fits over n = 8..=20
    for n in [8i64, 12, 20] {
        let one = kf_exact(&FamilySpec::TriPath { n: n as usize, k: [1, n as usize - 4] }.build().unwrap()).unwrap();
        assert_eq!(one, ratio(n * n * n - 19 * n + 50, 6));
        let two = kf_exact(&FamilySpec::TriPath { n: n as usize, k: [2, n as usize - 5] }.build().unwrap()).unwrap();
        assert_eq!(two, ratio(n * n * n - 27 * n + 98, 6));
    }
}

#[test]
fn closed_spectra() {
    for text in ["complete:6", "kn-minus-matching:8,3", "kn-minus-matching:6,3", "kn-minus-star:9,4"] {
        let s = spec(text);
        let closed = s.closed_form_spectrum().unwrap();
        let numeric = laplacian_spectrum(&s.build().unwrap()).unwrap();
        assert!(closed.max_abs_diff(&numeric).unwrap() < 1e-9, "{text}");
    }
    assert!(matches!(spec("path:4").closed_form_spectrum(), Err(Error::NoClosedSpectrum(_))));
}

fn catalogued(n: usize) -> Vec<FamilySpec> {
    let mut v = vec![
        FamilySpec::Path(n),
        FamilySpec::Cycle(n),
        FamilySpec::Complete(n),
        FamilySpec::Q3(n),
        FamilySpec::R3(n),
        FamilySpec::Lollipop { n, k: 3 },
        FamilySpec::Lollipop { n, k: n },
        FamilySpec::DoubleBranch { n, first: vec![1, 1], second: vec![2, 1] },
        FamilySpec::Dumbbell { p: 3, q: 3, l: n.saturating_sub(5) },
        FamilySpec::KnMinusMatching { n, p: n / 2 },
        FamilySpec::KnMinusStar { n, p: n.saturating_sub(2) },
    ];
    if n >= 7 {
        v.push(FamilySpec::Starlike { n, branches: vec![n - 4, 2, 1] });
        v.push(FamilySpec::Starlike { n, branches: vec![n - 4, 1, 1, 1] });
    }
    v.extend((1..=9).map(|i| FamilySpec::Catalog { n, i }));
    v.into_iter().filter(|s| s.validate().is_ok()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn closed_forms_match_numerics(n in 3usize..=24) {
        for s in catalogued(n) {
            if let Some(q) = s.closed_form_kf().unwrap() {
                let numeric = kf_spectral(&s.build().unwrap()).unwrap();
                prop_assert!((numeric - to_f64(&q)).abs() <= 1e-8 * numeric.max(1.0), "{} {} {}", s, numeric, q);
            }
        }
    }

    #[test]
    fn built_graphs_have_the_stated_order(n in 3usize..=24) {
        for s in catalogued(n) {
            let g = s.build().unwrap();
            prop_assert_eq!(g.order(), s.order());
            prop_assert!(g.is_connected());
            if s.is_tree() {
                prop_assert!(g.is_tree());
                prop_assert!((wiener(&g).unwrap() as f64 - kf_spectral(&g).unwrap()).abs() < 1e-6);
            }
        }
    }
}
