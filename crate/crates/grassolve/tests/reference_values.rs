//! Worked values for each module, checked through the public API.

use grassolve::bott::{
    bott_gl, cohomology_gr, cohomology_x, grass_weight, Bundle, CohomologyResult,
};
use grassolve::complex::{
    kernel_rank_b, koszul_gr, periodicity_check, psi_layers, quotient_q, resolution_spgr4,
    subcomplex_b, tate_spgr,
};
use grassolve::exactlin::rat;
use grassolve::fiber::{build_t, split_blocks, theta_value, ComponentFiber, LascouxReport, Which};
use grassolve::ktheory::{
    euler_characteristic_sum, ext_table_spgr4, generators_gr, generators_spgr4, pairing_matrix_gr,
    resolution_coeffs,
};
use grassolve::partitions::{lr_tensor, schur_dim, Partition};
use grassolve::symplectic::{limit_check, IsotropyCase};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn ps(list: &[&[u32]]) -> Vec<Partition> {
    list.iter().map(|x| p(x)).collect()
}

#[test]
fn littlewood_richardson_examples() {
    let prod = lr_tensor(&p(&[1]), &p(&[2]), 8);
    assert_eq!(
        prod.keys().cloned().collect::<Vec<_>>(),
        ps(&[&[2, 1], &[3]])
    );
    let prod = lr_tensor(&p(&[3, 1]), &p(&[1, 1]), 2);
    assert_eq!(prod.into_iter().collect::<Vec<_>>(), vec![(p(&[4, 2]), 1)]);
    // Σ^{α*} ⊗ Sym₂ for α = (2,1): four summands, each once
    let alpha = p(&[2, 1]);
    let prod = lr_tensor(&alpha.conjugate(), &p(&[1, 1]).conjugate(), 8);
    let mut expected: Vec<Partition> = ps(&[&[3, 2], &[3, 1, 1], &[2, 2, 1], &[2, 1, 1, 1]])
        .into_iter()
        .map(|x| x.conjugate())
        .collect();
    expected.sort();
    assert_eq!(prod.keys().cloned().collect::<Vec<_>>(), expected);
    assert!(prod.values().all(|&c| c == 1));
}

#[test]
fn psi_layer_lists() {
    assert_eq!(psi_layers(&p(&[2])).unwrap(), ps(&[&[2], &[]]));
    assert_eq!(psi_layers(&p(&[2, 2])).unwrap(), ps(&[&[2, 2], &[2], &[]]));
}

#[test]
fn bott_examples() {
    assert_eq!(bott_gl(&[-1, -1, 0, 0]).unwrap(), CohomologyResult::Zero);
    assert_eq!(bott_gl(&[1, -1, 0, 0]).unwrap(), CohomologyResult::Zero);
    assert_eq!(bott_gl(&[0, -1, 0, 0]).unwrap(), CohomologyResult::Zero);
    assert_eq!(
        grass_weight(&p(&[1]), &p(&[]), 2, 4).unwrap(),
        vec![0, -1, 0, 0]
    );
    assert_eq!(
        grass_weight(&p(&[]), &p(&[1]), 2, 4).unwrap(),
        vec![0, 0, 1, 0]
    );

    let s = Bundle::schur_s(2, 4, &p(&[1])).unwrap();
    let end = s.tensor(&s.dual()).unwrap();
    assert_eq!(cohomology_gr(&end).unwrap().entries(), [1, 0, 0, 0, 0]);
    let s2 = Bundle::schur_s(2, 4, &p(&[2])).unwrap();
    assert!(cohomology_gr(&s2.tensor(&s.dual()).unwrap())
        .unwrap()
        .is_zero());
    for d in 1..=3 {
        let h = cohomology_gr(&Bundle::line(2, 4, d).unwrap()).unwrap();
        assert!(h.h(0) > 0 && h.higher_vanish());
    }

    let o = Bundle::trivial(2, 4).unwrap();
    assert_eq!(cohomology_x(&o).unwrap().entries(), [1, 0, 0, 0]);
    assert!(cohomology_x(&o.twist(-1)).unwrap().is_zero());
    assert!(cohomology_x(&o.twist(-2)).unwrap().is_zero());
    assert_eq!(cohomology_x(&end).unwrap().entries(), [1, 0, 0, 0]);
    // V* ⊗ S^⊥ is four copies of S^⊥
    let perp = Bundle::schur_perp(2, 4, &p(&[1])).unwrap();
    assert!(cohomology_x(&perp).unwrap().is_zero());
}

#[test]
fn grassmannian_koszul_terms() {
    let c = koszul_gr(2, 4).unwrap();
    assert_eq!(c.alphas(2), ps(&[&[2], &[1, 1]]));
    let total: usize = (0..=c.top_degree()).map(|d| c.terms(d).len()).sum();
    assert_eq!(total, 6);
}

#[test]
fn tate_resolution_terms() {
    let d6 = tate_spgr(6, 7).unwrap();
    assert_eq!(d6.alphas(7), ps(&[&[5, 2], &[4, 3]]));
    let d4 = tate_spgr(4, 2).unwrap();
    assert_eq!(d4.alphas(2), ps(&[&[2], &[1, 1]]));

    let b6 = subcomplex_b(6).unwrap();
    assert_eq!(b6.top_degree(), 6);
    assert_eq!(b6.alphas(6), ps(&[&[3, 3]]));
    let expected: [&[&[u32]]; 7] = [
        &[&[]],
        &[&[1]],
        &[&[2], &[1, 1]],
        &[&[3], &[2, 1]],
        &[&[3, 1], &[2, 2]],
        &[&[3, 2]],
        &[&[3, 3]],
    ];
    for (k, list) in expected.iter().enumerate() {
        assert_eq!(b6.alphas(k), ps(list), "degree {k}");
    }
    let b4 = subcomplex_b(4).unwrap();
    assert_eq!(b4.top_degree(), 2);
    assert_eq!(b4.alphas(2), ps(&[&[1, 1]]));

    assert_eq!(quotient_q(4, 3).unwrap().alphas(3), ps(&[&[2, 1]]));
    assert_eq!(quotient_q(6, 4).unwrap().alphas(4), ps(&[&[4]]));

    assert_eq!(kernel_rank_b(4).unwrap(), 1);
    assert_eq!(kernel_rank_b(6).unwrap(), 5);
    assert_eq!(resolution_spgr4().unwrap().top_degree(), 3);
}

#[test]
fn periodicity_ranges() {
    assert!(periodicity_check(4, 8).unwrap().holds());
    assert!(periodicity_check(6, 12).unwrap().holds());
}

#[test]
fn the_cycle_t() {
    let t = build_t(4).unwrap();
    assert_eq!((t.coeff(1, 0), t.coeff(0, 1)), (1, -1));
    assert_eq!(build_t(6).unwrap().rank(), 2);
    assert_eq!(build_t(6).unwrap().evaluation(), 0);
}

#[test]
fn fiber_homology_values() {
    let f4 = ComponentFiber::new(4, 4).unwrap();
    assert_eq!(f4.homology(Which::Q, 2..=3).unwrap(), vec![0, 1]);
    assert_eq!(f4.selection(2, Which::B).len(), 4);
    let f6 = ComponentFiber::new(6, 8).unwrap();
    assert!(f6
        .homology(Which::Q, 0..=6)
        .unwrap()
        .iter()
        .all(|&h| h == 0));
    assert_eq!(split_blocks(4).unwrap().len(), 2);
    assert_eq!(split_blocks(6).unwrap().len(), 4);
}

#[test]
fn lascoux_values() {
    let r = LascouxReport::compute(4, 2, 0).unwrap();
    assert_eq!(r.dims, vec![3, 4, 1]);
    assert!(r.homology.iter().all(|&h| h == 0));
    let iso = LascouxReport::compute(4, 1, 1).unwrap();
    assert!(iso.homology.iter().all(|&h| h == 0));
}

#[test]
fn theta_at_e3_e4() {
    let v = [rat(0), rat(0), rat(1), rat(0)];
    let w = [rat(0), rat(0), rat(0), rat(1)];
    let (scalar, psi) = theta_value(&v, &w);
    assert_eq!(scalar, rat(-1));
    assert_eq!((psi[0][2].clone(), psi[1][3].clone()), (rat(-1), rat(-1)));
}

#[test]
fn isotropy_limits() {
    for case in IsotropyCase::ALL {
        for n in case.min_n()..=4 {
            assert!(limit_check(case, n).unwrap().holds(), "{case} at n = {n}");
        }
    }
}

#[test]
fn ktheory_values() {
    assert_eq!(generators_gr(2, 4).unwrap().len(), 6);
    assert_eq!(generators_gr(1, 2).unwrap().len(), 2);
    for (k, n, count) in [(2, 4, 6), (2, 5, 10), (2, 6, 15), (3, 6, 20)] {
        assert_eq!(generators_gr(k, n).unwrap().len(), count);
    }
    for (k, n) in [(2, 4), (2, 5), (1, 4)] {
        assert!(
            pairing_matrix_gr(k, n).unwrap().is_unitriangular(),
            "Gr({k},{n})"
        );
    }
    let m = pairing_matrix_gr(2, 4).unwrap();
    assert_eq!(m.entries.len(), 6);

    let g = generators_spgr4().unwrap();
    assert_eq!(g.labels(), vec!["O(-2)", "O(-1)", "S", "O"]);
    let t = ext_table_spgr4().unwrap();
    assert!(t.is_exceptional());

    let o = Bundle::trivial(2, 4).unwrap();
    let r = resolution_coeffs(&o).unwrap();
    assert_eq!(r.rank, 1);
    let s_dual = Bundle::schur_s_dual(2, 4, &p(&[1])).unwrap();
    assert!(resolution_coeffs(&s_dual).is_err());
    assert_eq!(euler_characteristic_sum(&s_dual).unwrap(), 2);
    let o1 = Bundle::schur_s_dual(2, 4, &p(&[1, 1])).unwrap();
    assert_eq!(resolution_coeffs(&o1).unwrap().euler_rank, 1);
    assert_eq!(schur_dim(&p(&[1, 1]), 2), 1);
}
