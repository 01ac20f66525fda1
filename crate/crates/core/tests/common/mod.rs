#![allow(dead_code)]

use liesuper::algebra::{make_heisenberg_even, make_heisenberg_odd, LieSuperalgebra, Parity, Vector};
use liesuper::Rational;

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

/// osp(1|2): a simple superalgebra whose odd self-brackets land on
/// non-central even elements, so it exercises every sign in the differential.
pub fn osp12() -> LieSuperalgebra {
    let gens = vec![
        ("h".to_string(), Parity::Even),
        ("e".to_string(), Parity::Even),
        ("f".to_string(), Parity::Even),
        ("x".to_string(), Parity::Odd),
        ("y".to_string(), Parity::Odd),
    ];
    let mut g = LieSuperalgebra::new("osp(1|2)", gens).unwrap();
    let v = |pairs: &[(usize, i64)]| -> Vector { pairs.iter().map(|&(k, c)| (k, q(c, 1))).collect() };
    g.set_bracket(0, 1, v(&[(1, 2)])).unwrap();
    g.set_bracket(0, 2, v(&[(2, -2)])).unwrap();
    g.set_bracket(1, 2, v(&[(0, 1)])).unwrap();
    g.set_bracket(0, 3, v(&[(3, 1)])).unwrap();
    g.set_bracket(0, 4, v(&[(4, -1)])).unwrap();
    g.set_bracket(1, 4, v(&[(3, -1)])).unwrap();
    g.set_bracket(2, 3, v(&[(4, -1)])).unwrap();
    g.set_bracket(3, 3, v(&[(1, 2)])).unwrap();
    g.set_bracket(4, 4, v(&[(2, -2)])).unwrap();
    g.set_bracket(3, 4, v(&[(0, 1)])).unwrap();
    g.ensure_valid().unwrap();
    g
}

/// An odd generator placed before an even one, with a fractional
/// structure constant: `[y, y] = 1/2 z`, `[y, x] = w`.
pub fn mixed_order() -> LieSuperalgebra {
    let gens = vec![
        ("y".to_string(), Parity::Odd),
        ("x".to_string(), Parity::Even),
        ("z".to_string(), Parity::Even),
        ("w".to_string(), Parity::Odd),
    ];
    let mut g = LieSuperalgebra::new("mixed", gens).unwrap();
    g.set_bracket(0, 0, std::iter::once((2, q(1, 2))).collect()).unwrap();
    g.set_bracket(0, 1, std::iter::once((3, q(1, 1))).collect()).unwrap();
    g.ensure_valid().unwrap();
    g
}

pub fn small_family() -> Vec<LieSuperalgebra> {
    vec![
        make_heisenberg_odd(1).unwrap(),
        make_heisenberg_odd(2).unwrap(),
        make_heisenberg_even(1, 1).unwrap(),
        make_heisenberg_even(1, 2).unwrap(),
    ]
}
