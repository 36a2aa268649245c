use num_bigint::BigInt;
use wittzeta::lambda::{lambda_from_sigma, sigma_int, sigma_poly};
use wittzeta::IntPolynomial;

fn main() {
    // sigma^n(3) = C(3 + n - 1, n)
    let s = sigma_int(&BigInt::from(3), 6);
    println!("sigma_t(3) = {:?}", s.series().coeffs());
    println!("lambda_t(3) = {:?}", lambda_from_sigma(&s).coeffs());

    // f(z) = 2 + z - z^3 maps to 2[1] + [z] - [z^3]
    let f = IntPolynomial::from_i64s(&[2, 1, 0, -1]);
    let sf = sigma_poly(&f, 3);
    for (n, c) in sf.series().coeffs().iter().enumerate() {
        println!("sigma^{n}({f}) = {c}");
    }
    println!("lambda_t(f) = {:?}", lambda_from_sigma(&sf).coeffs());
}
