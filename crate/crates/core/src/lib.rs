//! Exact arithmetic for the discrete periodic Toda flow.
//!
//! The crate follows a Toda state through its spectral curve `z² + h(x) z − f = 0`
//! into the Jacobian of that curve, where the flow becomes translation by a fixed
//! divisor under the Gauß composition law. It also carries the box-ball automaton
//! and its tropical Toda description over Q(T).

pub mod algebra;
pub mod boxball;
pub mod harness;
pub mod jacobian;
pub mod toda;
