use std::time::Instant;

fn gemm(m: usize, k: usize, n: usize, a: &[f32], b: &[f32], c: &mut [f32]) {
    unsafe {
        matrixmultiply::sgemm(
            m, k, n, 1.0, a.as_ptr(), k as isize, 1, b.as_ptr(), n as isize, 1, 0.0,
            c.as_mut_ptr(), n as isize, 1,
        );
    }
}

fn bench_gemm(m: usize, k: usize, n: usize, reps: usize) {
    let a = vec![0.5f32; m * k];
    let b = vec![0.25f32; k * n];
    let mut c = vec![0.0f32; m * n];
    gemm(m, k, n, &a, &b, &mut c); // warmup
    let t = Instant::now();
    for _ in 0..reps {
        gemm(m, k, n, &a, &b, &mut c);
    }
    let el = t.elapsed().as_secs_f64();
    let flops = 2.0 * (m * k * n * reps) as f64;
    println!("gemm {}x{}x{}: {:.1} GFLOP/s", m, k, n, flops / el / 1e9);
}

fn main() {
    bench_gemm(29, 192, 192, 2000);
    bench_gemm(29, 192, 768, 1000);
    bench_gemm(200, 192, 768, 300);
    bench_gemm(1000, 192, 768, 100);
    bench_gemm(1000, 768, 192, 100);
    // tanh throughput
    let n = 1_000_000;
    let xs: Vec<f32> = (0..n).map(|i| (i as f32) * 1e-6 - 0.5).collect();
    let t = Instant::now();
    let mut acc = 0.0f32;
    for _ in 0..20 {
        for &x in &xs {
            acc += (0.79788456 * (x + 0.044715 * x * x * x)).tanh();
        }
    }
    let el = t.elapsed().as_secs_f64();
    println!("tanh: {:.1} M/s (acc {})", 20.0 * n as f64 / el / 1e6, acc);
    let t = Instant::now();
    let mut acc2 = 0.0f32;
    for _ in 0..20 {
        for &x in &xs {
            acc2 += x / (1.0 + (-1.702 * x).exp());
        }
    }
    let el = t.elapsed().as_secs_f64();
    println!("sigmoid-gelu: {:.1} M/s (acc {})", 20.0 * n as f64 / el / 1e6, acc2);
}
