// timing harness over the full acceptance distribution
use std::time::Instant;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use alexmod::module::PolyMatrix;
use alexmod::ring::{rat, LaurentPoly};
use alexmod::pid::smith_normal_form;

fn random_laurent_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> PolyMatrix {
    // denser entries on small matrices, leaner on large ones: the long
    // Euclidean cascades on 5x6 inputs are exercised without letting the
    // transform entries blow past the suite budget
    let (density, max_terms, coeff) = if rows.max(cols) <= 4 {
        (0.75, 3, 3)
    } else {
        (0.65, 2, 2)
    };
    let mut m = PolyMatrix::zeros(1, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if !rng.gen_bool(density) {
                continue;
            }
            let base: i64 = rng.gen_range(-2..=2);
            let mut p = LaurentPoly::zero(1);
            for _ in 0..rng.gen_range(1..=max_terms) {
                let e = base + rng.gen_range(0..=4);
                let c = rng.gen_range(-coeff..=coeff);
                p = &p + &LaurentPoly::uni_term(rat(c), e);
            }
            m[(i, j)] = p;
        }
    }
    m
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let t0 = Instant::now();
    let mut snf_time = 0.0;
    for _ in 0..300 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = random_laurent_matrix(&mut rng, rows, cols);
        let t1 = Instant::now();
        let snf = smith_normal_form(&m).unwrap();
        snf_time += t1.elapsed().as_secs_f64();
        std::hint::black_box(snf);
    }
    println!("300 SNFs: {:.1}s (total {:.1}s)", snf_time, t0.elapsed().as_secs_f64());
}
