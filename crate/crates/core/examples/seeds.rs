//! Prints a random UB-free seed program from the built-in generator.
fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let (used, src) = ubsmith::seedgen::generate(n);
    println!("// generator seed {used}\n{src}");
}
