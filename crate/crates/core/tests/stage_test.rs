#[test]
fn lehmer_stages() {
    use latcone::exactalg::poly::{IntPolynomial, root_product_poly};
    use latcone::exactalg::roots::{certified_roots, SolveOptions};
    let p = IntPolynomial::from_i64_slice(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    let q = p.to_qpoly();
    let t0 = std::time::Instant::now();
    let discs = certified_roots(&q, &SolveOptions::default()).unwrap();
    eprintln!("certified_roots: {:?} ({} discs)", t0.elapsed(), discs.len());
    let t1 = std::time::Instant::now();
    let p2 = root_product_poly(&q, &q);
    eprintln!("root_product: {:?} deg {}", t1.elapsed(), p2.degree());
    let t2 = std::time::Instant::now();
    let sf = p2.primitive_integer().squarefree_part();
    eprintln!("squarefree: {:?} deg {}", t2.elapsed(), sf.degree());
}
