use std::time::Instant;
fn main() {
    let n = 16u32;
    let fam = indicial::hurwitz::build_hurwitz(n).unwrap();
    let h = fam.h_poly().clone();
    let bits: Vec<u64> = h.coeffs().iter().map(|c| c.numer().bits().max(c.denom().bits())).collect();
    println!("h coeff bits: {:?}", bits);
    let t0 = Instant::now();
    let sf = h.squarefree_part().unwrap();
    println!("squarefree_part: {:.2?}", t0.elapsed());
    let t0 = Instant::now();
    let ivs = indicial::sturm::isolate_real_roots(&sf).unwrap();
    println!("isolate on sf: {:.2?} ({} roots)", t0.elapsed(), ivs.len());
}
