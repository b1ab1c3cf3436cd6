mod common;

use proptest::prelude::*;
use signed_spectra::constructions::{huang_hypercube, hypercube, k2, k22neg, p3};
use signed_spectra::linalg::eigen_sym_default;
use signed_spectra::{
    fold, is_connected, kronecker, product, signed_cartesian, signed_semistrong, Bipartition, DenseMatrix, Error,
    Factor, FoldDirection, IntMatrix, ProductKind, SignedGraph,
};

use common::{
    assert_spectrum, exact_eigen_mult, exact_square_mult, is_symmetric_zero_diag, random_bipartite, random_graph,
    spectrum,
};

fn k2p() -> SignedGraph {
    k2(1).into_graph()
}

#[test]
fn unsigned_products_of_edges() {
    let c4 = product(ProductKind::Cartesian, &k2p(), &k2p()).unwrap();
    assert_eq!(c4.edge_count(), 4);
    assert!(c4.edges().iter().all(|e| e.2 == 1));
    assert!(c4.underlying() == hypercube(2));

    let d = product(ProductKind::Direct, &k2p(), &k2p()).unwrap();
    assert_eq!(d.edge_count(), 2);
    assert!(!is_connected(&d));

    // Q_2 up to isomorphism: a connected 2-regular graph on four vertices
    let s = product(ProductKind::Semistrong, &k2p(), &k2p()).unwrap();
    assert_eq!(signed_spectra::degree_stats(&s).regular, Some(2));
    assert!(is_connected(&s));
    assert_spectrum(&spectrum(&s), &[(2.0, 1), (0.0, 2), (-2.0, 1)]);
    assert!(product(ProductKind::SignedCartesian, &k2p(), &k2p()).is_err());
}

#[test]
fn semistrong_with_k2_matches_cartesian_with_k2_on_bipartite_graphs() {
    // isomorphic underlying graphs; compared through spectra and degree sequences
    for seed in 0..10 {
        let g1 = random_bipartite(5, seed).into_graph().underlying();
        let a = product(ProductKind::Semistrong, &g1, &k2p()).unwrap();
        let b = product(ProductKind::Cartesian, &g1, &k2p()).unwrap();
        assert!(spectrum(&a).approx_eq(&spectrum(&b), 1e-8));
        let mut da = signed_spectra::degree_stats(&a).degrees;
        let mut db = signed_spectra::degree_stats(&b).degrees;
        da.sort_unstable();
        db.sort_unstable();
        assert_eq!(da, db);
    }
}

#[test]
fn signed_cartesian_examples() {
    let q2 = signed_cartesian(&k2(1), &k2p()).unwrap();
    let r2 = 2f64.sqrt();
    assert_spectrum(&spectrum(&q2), &[(r2, 2), (-r2, 2)]);

    let point = SignedGraph::empty(1);
    let b = random_bipartite(6, 9);
    assert_eq!(signed_cartesian(&b, &point).unwrap(), *b.graph());

    // P3 □̃ K2: A^2 - 3I has rank 2 and A - I, A + I have rank 5, all in exact integers
    let g = signed_cartesian(&p3(), &k2p()).unwrap();
    let a = g.adjacency::<i64>();
    assert_eq!(exact_square_mult(&a, 3), 4);
    assert_eq!(exact_eigen_mult(&a, 1), 1);
    assert_eq!(exact_eigen_mult(&a, -1), 1);
    assert_eq!(a.trace(), 0);
    let r3 = 3f64.sqrt();
    assert_spectrum(&spectrum(&g), &[(r3, 2), (1.0, 1), (-1.0, 1), (-r3, 2)]);
}

#[test]
fn signed_cartesian_block_form() {
    let b = p3();
    let g2 = random_graph(3, 2);
    let a2 = g2.adjacency::<i64>();
    let p = b.block_p();
    let (s, n, m) = (b.s(), b.order(), g2.order());
    let tl = kronecker(&IntMatrix::identity(s), &a2).unwrap();
    let tr = kronecker(&p, &IntMatrix::identity(m)).unwrap();
    let bl = kronecker(&p.transpose(), &IntMatrix::identity(m)).unwrap();
    let br = kronecker(&IntMatrix::identity(n - s), &a2).unwrap().neg();
    let expected = DenseMatrix::from_blocks(&[vec![&tl, &tr], vec![&bl, &br]]).unwrap();
    assert_eq!(signed_cartesian(&b, &g2).unwrap().adjacency::<i64>(), expected);
}

#[test]
fn signed_semistrong_examples() {
    let g = signed_semistrong(&k2(1), &k2p()).unwrap();
    let r2 = 2f64.sqrt();
    assert_spectrum(&spectrum(&g), &[(r2, 2), (-r2, 2)]);

    let edgeless = signed_semistrong(&random_bipartite(5, 1), &SignedGraph::empty(4)).unwrap();
    assert_eq!(edgeless.edge_count(), 0);

    let k = signed_semistrong(&k22neg(), k22neg().graph()).unwrap();
    let r6 = 6f64.sqrt();
    assert_spectrum(&spectrum(&k), &[(r6, 8), (-r6, 8)]);
    assert_eq!(exact_square_mult(&k.adjacency(), 6), 16);
}

fn k2_factors(n: usize) -> Vec<Factor> {
    (0..n).map(|_| Factor::from(k2(1))).collect()
}

#[test]
fn fold_examples() {
    let r3 = 3f64.sqrt();
    for dir in [FoldDirection::Left, FoldDirection::Right] {
        let q3 = fold(ProductKind::SignedCartesian, dir, &k2_factors(3)).unwrap();
        assert_eq!(q3.underlying(), hypercube(3));
        assert_spectrum(&spectrum(&q3), &[(r3, 4), (-r3, 4)]);
    }
    let k44 = fold(ProductKind::SignedSemistrong, FoldDirection::Left, &k2_factors(3)).unwrap();
    assert_spectrum(&spectrum(&k44), &[(2.0, 4), (-2.0, 4)]);
    assert_eq!(k44.edge_count(), 16);
    assert_eq!(signed_spectra::degree_stats(&k44).regular, Some(4));

    let f: Vec<Factor> = (0..3).map(|_| Factor::from(k22neg())).collect();
    let g = fold(ProductKind::SignedSemistrong, FoldDirection::Right, &f).unwrap();
    let r14 = 14f64.sqrt();
    assert_spectrum(&spectrum(&g), &[(r14, 32), (-r14, 32)]);
}

#[test]
fn left_cartesian_fold_is_the_recursive_signed_cube() {
    for n in 1..=4 {
        let f = fold(ProductKind::SignedCartesian, FoldDirection::Left, &k2_factors(n)).unwrap();
        assert_eq!(f, huang_hypercube(n as u32).unwrap());
    }
}

#[test]
fn fold_validation() {
    let k3 = signed_spectra::constructions::k3(1);
    let bad = vec![Factor::from(k2(1)), Factor::from(k3.clone()), Factor::from(k2(1))];
    assert!(matches!(
        fold(ProductKind::SignedCartesian, FoldDirection::Left, &bad),
        Err(Error::NotBipartiteFactor { index: 1 })
    ));
    assert!(matches!(
        fold(ProductKind::SignedCartesian, FoldDirection::Right, &bad),
        Err(Error::NotBipartiteFactor { index: 1 })
    ));
    let ok = vec![Factor::from(k2(1)), Factor::from(k2(1)), Factor::from(k3.clone())];
    assert_eq!(
        fold(ProductKind::SignedSemistrong, FoldDirection::Right, &ok)
            .unwrap()
            .order(),
        12
    );
    assert!(matches!(
        fold(ProductKind::SignedCartesian, FoldDirection::Left, &[]),
        Err(Error::EmptyFold)
    ));
    assert_eq!(
        fold(
            ProductKind::SignedCartesian,
            FoldDirection::Left,
            &[Factor::from(k3.clone())]
        )
        .unwrap(),
        k3
    );
}

#[test]
fn right_semistrong_fold_of_edges_has_cube_spectrum() {
    for n in 1..=5usize {
        let g = fold(ProductKind::SignedSemistrong, FoldDirection::Right, &k2_factors(n)).unwrap();
        let s = eigen_sym_default(&g.underlying().adjacency::<f64>()).unwrap();
        let expected: Vec<(f64, usize)> = (0..=n).map(|k| ((n as f64) - 2.0 * k as f64, binomial(n, k))).collect();
        assert_spectrum(&s, &expected);
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn support(m: &IntMatrix) -> IntMatrix {
    m.map(|x| i64::from(x != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn signed_products_are_sign_matrices(n in 2usize..6, m in 1usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let b = random_bipartite(n, s1);
        let g2 = random_graph(m, s2);
        for g in [signed_cartesian(&b, &g2).unwrap(), signed_semistrong(&b, &g2).unwrap()] {
            prop_assert!(is_symmetric_zero_diag(&g.adjacency::<i64>()));
            prop_assert_eq!(g.order(), n * m);
        }
        for kind in [ProductKind::Cartesian, ProductKind::Direct, ProductKind::Semistrong] {
            prop_assert!(is_symmetric_zero_diag(&product(kind, b.graph(), &g2).unwrap().adjacency::<i64>()));
        }
    }

    #[test]
    fn signed_cartesian_has_cartesian_support(n in 2usize..6, m in 1usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let b = random_bipartite(n, s1);
        let g2 = random_graph(m, s2);
        let signed = signed_cartesian(&b, &g2).unwrap().adjacency::<i64>();
        let plain = product(ProductKind::Cartesian, &b.graph().underlying(), &g2.underlying()).unwrap().adjacency::<i64>();
        prop_assert_eq!(support(&signed), plain);
    }

    #[test]
    fn squared_product_identities(n in 2usize..6, m in 1usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let b = random_bipartite(n, s1);
        let g2 = random_graph(m, s2);
        let a1 = b.graph().adjacency::<i64>();
        let a2 = g2.adjacency::<i64>();
        let a1sq = a1.matmul(&a1).unwrap();
        let a2sq = a2.matmul(&a2).unwrap();
        let (i1, i2) = (IntMatrix::identity(n), IntMatrix::identity(m));

        let c = signed_cartesian(&b, &g2).unwrap().adjacency::<i64>();
        let want = kronecker(&a1sq, &i2).unwrap().add(&kronecker(&i1, &a2sq).unwrap()).unwrap();
        prop_assert_eq!(c.matmul(&c).unwrap(), want);

        let s = signed_semistrong(&b, &g2).unwrap().adjacency::<i64>();
        let want = kronecker(&a1sq.add(&i1).unwrap(), &a2sq).unwrap();
        prop_assert_eq!(s.matmul(&s).unwrap(), want);
    }

    #[test]
    fn cartesian_folds_agree_in_both_directions(sizes in prop::collection::vec(2usize..4, 2..4), seed in any::<u64>()) {
        let mut factors: Vec<Factor> = sizes
            .iter()
            .enumerate()
            .map(|(i, &n)| Factor::from(random_bipartite(n, seed.wrapping_add(i as u64))))
            .collect();
        // the last factor need not be bipartite
        factors.push(Factor::from(random_graph(3, seed ^ 0x5a5a)));
        let left = fold(ProductKind::SignedCartesian, FoldDirection::Left, &factors).unwrap();
        let right = fold(ProductKind::SignedCartesian, FoldDirection::Right, &factors).unwrap();
        prop_assert!(spectrum(&left).approx_eq(&spectrum(&right), 1e-8));
    }

    #[test]
    fn fold_of_two_is_the_binary_product(n in 2usize..6, m in 2usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let b: Bipartition = random_bipartite(n, s1);
        let g2 = random_graph(m, s2);
        let factors = vec![Factor::from(b.clone()), Factor::from(g2.clone())];
        for dir in [FoldDirection::Left, FoldDirection::Right] {
            prop_assert_eq!(fold(ProductKind::SignedCartesian, dir, &factors).unwrap(), signed_cartesian(&b, &g2).unwrap());
            prop_assert_eq!(fold(ProductKind::SignedSemistrong, dir, &factors).unwrap(), signed_semistrong(&b, &g2).unwrap());
        }
    }
}
