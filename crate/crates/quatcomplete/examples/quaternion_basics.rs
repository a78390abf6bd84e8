//! Scalar quaternion arithmetic: the Hamilton product, conjugation, modulus,
//! and inverses.
//!
//! Run with `cargo run --example quaternion_basics`.

use quatcomplete::quat::basis;
use quatcomplete::Quaternion;

fn main() {
    // q = w + x·i + y·j + z·k
    let q = Quaternion::new(1.0, 2.0, -1.0, 0.5);
    let r = Quaternion::new(0.5, -1.0, 3.0, 2.0);
    println!("q            = {q}");
    println!("r            = {r}");

    // The Hamilton product is associative but not commutative.
    println!("q·r          = {}", q * r);
    println!("r·q          = {}", r * q);
    assert_ne!(q * r, r * q);

    // The imaginary units anticommute pairwise: ij = k but ji = -k.
    let (i, j, k) = (basis(1), basis(2), basis(3));
    println!("i·j          = {}", i * j);
    println!("j·i          = {}", j * i);
    assert_eq!(i * j, k);
    assert_eq!(j * i, -k);

    // Conjugation reverses products: (qr)* = r* q*.
    assert_eq!((q * r).conj(), r.conj() * q.conj());
    println!("(q·r)*       = {}", (q * r).conj());

    // The modulus is multiplicative, so q·q* = |q|² is real.
    println!("|q|          = {}", q.norm());
    println!("|q·r| − |q||r| = {:+.3e}", (q * r).norm() - q.norm() * r.norm());
    let qq = q * q.conj();
    assert!(qq.is_finite() && (qq.w - q.norm_sqr()).abs() < 1e-12);

    // Every nonzero quaternion has a two-sided inverse.
    let inv = q.inverse().expect("q is nonzero");
    println!("q⁻¹          = {inv}");
    println!("q·q⁻¹        = {}", q * inv);

    // A pure quaternion has no real part; color pixels live there, with the
    // three imaginary axes carrying the red, green, and blue channels.
    let pixel = Quaternion::new(0.0, 0.35, 0.60, 0.25);
    println!("pixel        = {pixel} (pure: {})", pixel.is_pure());
}
