// which entries get big: track max terms in m during elimination via stats after
use std::time::Instant;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use alexmod::module::PolyMatrix;
use alexmod::ring::{rat, LaurentPoly};
use alexmod::pid::smith_normal_form;

fn random_laurent_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(1, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.gen_bool(0.25) { continue; }
            let base: i64 = rng.gen_range(-2..=2);
            let mut p = LaurentPoly::zero(1);
            for _ in 0..rng.gen_range(1..=3) {
                let e = base + rng.gen_range(0..=4);
                let c = rng.gen_range(-3..=3);
                p = &p + &LaurentPoly::uni_term(rat(c), e);
            }
            m[(i, j)] = p;
        }
    }
    m
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    // find the worst trial (15) and re-run it alone
    let mut target = None;
    for trial in 0..=15 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = random_laurent_matrix(&mut rng, rows, cols);
        if trial == 15 { target = Some(m); }
    }
    let m = target.unwrap();
    let t0 = Instant::now();
    let _snf = smith_normal_form(&m).unwrap();
    println!("worst trial total: {:.2}s", t0.elapsed().as_secs_f64());
}
