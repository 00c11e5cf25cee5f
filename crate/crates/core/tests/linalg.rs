//! Properties of the integer linear algebra on random small inputs.

use proptest::prelude::*;

use symcoh::zlinalg::{
    is_compatible, kernel_mod_diagonal, kernel_mod_relations, smith_normal_form, Int, IntMatrix, Lattice, Subquotient,
};

fn matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-range..=range, cols), rows).prop_map(|r| IntMatrix::from_rows(&r))
}

fn shaped(range: i64) -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(move |(r, c)| matrix(r, c, range))
}

fn ints(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| Int::from(x)).collect()
}

fn diag_lattice(dim: usize, d: &[Int]) -> Lattice {
    Lattice::from_generators(dim, Vec::new(), Some(d))
}

proptest! {
    #[test]
    fn smith_form_round_trips(m in shaped(20)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.s());
        prop_assert_eq!(s.u.mul(&s.u_inv).unwrap(), IntMatrix::identity(m.rows()));
        prop_assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(m.cols()));
        for w in s.diag.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(s.diag.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn diagonal_kernel_matches_the_relation_kernel(
        m in shaped(6),
        src_seed in prop::collection::vec(0i64..=6, 5),
        tgt_seed in prop::collection::vec(0i64..=6, 5),
    ) {
        let src = ints(&src_seed[..m.cols()]);
        let tgt = ints(&tgt_seed[..m.rows()]);
        let fast = kernel_mod_diagonal(&m, &src, &tgt).unwrap();
        let rel = IntMatrix::diagonal(m.rows(), m.rows(), &tgt);
        let slow = Lattice::from_matrix(&kernel_mod_relations(&m, &rel).unwrap()).sum(&diag_lattice(m.cols(), &src));
        prop_assert_eq!(&fast, &slow);
        // the source relations are only in the kernel for a compatible map
        let kernel = if is_compatible(&m, &src, &tgt) { fast.basis().to_vec() } else { Vec::new() };
        for b in &kernel {
            let img = m.mul_vec(b).unwrap();
            prop_assert!(img.iter().zip(&tgt).all(|(x, t)| x.is_multiple_of(t)));
        }
    }

    #[test]
    fn subquotient_torsion_counts(
        dim in 1usize..=3,
        modulus in 2i64..=6,
        a in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 0..3),
        b in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 0..3),
    ) {
        let nz = ints(&vec![modulus; dim]);
        let cut = |v: &Vec<i64>| ints(&v[..dim]);
        let inner = Lattice::from_generators(dim, b.iter().map(cut).collect(), Some(&nz));
        let outer = Lattice::from_generators(dim, a.iter().chain(&b).map(cut).collect(), Some(&nz));
        let q = Subquotient::new(outer.clone(), inner.clone()).unwrap();
        let factors = q.factors();
        prop_assert!(factors.iter().all(|f| f.is_positive()));

        // points of Z^dim / modulus·Z^dim
        let points: Vec<Vec<Int>> = (0..modulus.pow(dim as u32))
            .map(|mut c| (0..dim).map(|_| { let x = c % modulus; c /= modulus; Int::from(x) }).collect())
            .collect();
        let inner_count = points.iter().filter(|p| inner.contains(p)).count();
        let in_outer: Vec<&Vec<Int>> = points.iter().filter(|p| outer.contains(p)).collect();
        for m in 1..=modulus {
            let killed = in_outer
                .iter()
                .filter(|p| inner.contains(&p.iter().map(|x| x * &Int::from(m)).collect::<Vec<_>>()))
                .count();
            let expected: i64 = factors.iter().map(|f| f.gcd(&Int::from(m)).to_i64().unwrap()).product();
            prop_assert_eq!((killed / inner_count) as i64, expected, "m = {}", m);
        }
        for g in q.generators() {
            prop_assert!(outer.contains(g));
        }
    }
}

#[test]
fn lattice_operations() {
    let a = Lattice::from_generators(2, vec![ints(&[2, 0]), ints(&[0, 3])], None);
    let b = Lattice::from_generators(2, vec![ints(&[3, 0]), ints(&[0, 2])], None);
    assert_eq!(a.intersect(&b), Lattice::from_generators(2, vec![ints(&[6, 0]), ints(&[0, 6])], None));
    assert_eq!(a.sum(&b), Lattice::full(2));
    assert!(Lattice::full(2).contains_lattice(&a));
    assert!(!a.contains(&ints(&[1, 0])));
}
