use lauricella::series::{eval_gauss_2f1, eval_lauricella, pochhammer, EvalOptions, Family, LauricellaParams};
use lauricella::{ExactParams, Params, Scalar};
use proptest::prelude::*;

fn opts() -> EvalOptions<f64> {
    EvalOptions::default()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn param() -> impl Strategy<Value = f64> {
    0.2f64..2.5
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn one_live_coordinate_reduces_to_gauss(
        fam in prop::sample::select(vec![Family::A, Family::B, Family::C, Family::D]),
        a in param(), b in param(), c in param(), extra in prop::collection::vec(param(), 4),
        z in -0.6f64..0.6, live in 0usize..3,
    ) {
        let r = 3;
        let (na, nb, ng) = fam.signature(r);
        let fill = |n: usize, v: f64| -> Vec<f64> {
            if n == 1 { vec![v] } else { (0..n).map(|j| if j == live { v } else { extra[j] }).collect() }
        };
        let p = LauricellaParams::new(fam, fill(na, a), fill(nb, b), fill(ng, c)).unwrap();
        let mut x = vec![0.0; r];
        // F_C needs a smaller point: its region is a sum of square roots.
        x[live] = if fam == Family::C { z * z * z.signum() } else { z };
        let got = eval_lauricella(&p, &x, &opts()).unwrap().value;
        let want = eval_gauss_2f1(a, b, c, x[live], &opts()).unwrap().value;
        prop_assert!(rel(got, want) <= 1e-13, "{got} vs {want}");
    }

    #[test]
    fn permutation_symmetry(
        fam in prop::sample::select(vec![Family::A, Family::B, Family::C, Family::D]),
        vals in prop::collection::vec(param(), 9),
        pt in prop::collection::vec(-1.0f64..1.0, 3),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let (na, nb, ng) = fam.signature(3);
        let p = LauricellaParams::new(fam, vals[..na].to_vec(), vals[3..3 + nb].to_vec(), vals[6..6 + ng].to_vec()).unwrap();
        let scale = match fam { Family::A => 0.25, Family::C => 0.02, _ => 0.6 };
        let x: Vec<f64> = pt.iter().map(|v| v * scale).collect();
        let px: Vec<f64> = perm.iter().map(|&j| x[j]).collect();
        let a = eval_lauricella(&p, &x, &opts()).unwrap().value;
        let b = eval_lauricella(&p.permuted(&perm), &px, &opts()).unwrap().value;
        prop_assert!(rel(b, a) <= 1e-13);
    }

    #[test]
    fn fd_with_alpha_equal_gamma_is_a_binomial_product(
        g in param(), b in prop::collection::vec(param(), 3), x in prop::collection::vec(-0.7f64..0.7, 3),
    ) {
        let p = LauricellaParams::fd(g, b.clone(), g).unwrap();
        let got = eval_lauricella(&p, &x, &opts()).unwrap().value;
        let want: f64 = (0..3).map(|j| (1.0 - x[j]).powf(-b[j])).product();
        prop_assert!(rel(got, want) <= 1e-12);
    }

    #[test]
    fn pochhammer_recurrence(a in -6.0f64..6.0, m in 0usize..30) {
        let lhs = pochhammer(a, m + 1);
        let rhs = pochhammer(a, m) * (a + m as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs().max(1e-300) || lhs == rhs);
    }
}

#[test]
fn shell_magnitudes_eventually_decrease() {
    let p = LauricellaParams::fa(1.3, vec![0.7, 1.9], vec![1.1, 2.4]).unwrap();
    let res = eval_lauricella(&p, &[0.2, -0.25], &opts()).unwrap();
    let m = &res.shell_magnitudes;
    let n = m.len();
    assert!(n > 10);
    assert!(m[n / 2..].windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn exact_and_single_precision_paths_agree() {
    let q = |v: f64| lauricella::BigRational::from_lit(v);
    let exact: ExactParams = LauricellaParams::fd(q(0.5), vec![q(0.25), q(1.5)], q(2.0)).unwrap();
    let series = lauricella::operators::build_series(&exact, 6).unwrap();
    let approx: Params = exact.to_f64();
    let double = lauricella::operators::build_series(&approx, 6).unwrap();
    assert!(series.map_coeffs(|c| c.as_f64()).max_abs_diff(&double).unwrap() < 1e-15);
    let single = LauricellaParams::fd(0.5f32, vec![0.25, 1.5], 2.0).unwrap();
    let v = eval_lauricella(&single, &[0.1, 0.2], &EvalOptions::default()).unwrap().value;
    let d = eval_lauricella(&approx, &[0.1, 0.2], &opts()).unwrap().value;
    assert!((v as f64 - d).abs() < 1e-5);
}
