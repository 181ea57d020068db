pub mod arith;
pub mod error;
pub mod qfactor;
pub use arith::{
    cyclotomic, padic_valuation, q_integer, BigRat, LRat, LaurentPoly, RatFun, UniPoly, Valuation,
};
pub use error::{Error, Result};
pub use qfactor::{
    pochhammer, qpow_factor, Atom, BinomProduct, CycloFactored, ParamValue, PochBase, TriPoly,
};
