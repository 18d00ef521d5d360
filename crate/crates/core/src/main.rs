use nalgebra::DMatrix;
use num_complex::Complex;
fn main() {
    let a = DMatrix::<Complex<f64>>::from_row_slice(2, 2, &[
        Complex::new(2.0, 0.0), Complex::new(0.0, 1.0),
        Complex::new(0.0, -1.0), Complex::new(3.0, 0.0)]);
    let se = a.clone().symmetric_eigen();
    println!("{:?}", se.eigenvalues);
    println!("{}", se.eigenvectors);
}
