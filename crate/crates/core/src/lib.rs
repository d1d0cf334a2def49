//! Twisted Gabidulin rank-metric codes over F_{q^n}.
//!
//! Layers, bottom up:
//!
//! - [`gf`]: F_q and F_{q^n} with Frobenius powers and the field norm
//! - [`linalg`]: Gaussian elimination over either field
//! - [`linpoly`]: the composition ring of linearized polynomials, left and
//!   right division, root spaces, Moore determinants and subspace polynomials
//! - [`rank_metric`]: rank norm, rank distance, errors of exact rank
//! - [`gabidulin`]: classical codes and the interpolation decoder
//! - [`twisted`]: twisted codes 𝒢(η, r) and their four-step decoder
//! - [`oracle`]: exhaustive nearest-codeword and minimum-distance searches
//! - [`serial`] and [`cli`]: file formats and the `rankcode` command
//!
//! ```
//! use rankcode::gf::GaloisField;
//! use rankcode::gabidulin::Message;
//! use rankcode::twisted::TwistedCode;
//!
//! let field = GaloisField::new(3, 4).unwrap();
//! let eta = field.elements().unwrap().find(|&a| field.norm_residue(a) == 2).unwrap();
//! let code = TwistedCode::new(field.clone(), 2, eta, 3, None).unwrap();
//! let msg = Message(vec![field.generator(), field.one()]);
//! let word = code.encode(&msg).unwrap();
//! assert_eq!(code.decode(&word).unwrap(), Some(msg));
//! ```

pub mod bench;
pub mod cli;
pub mod code;
pub mod error;
pub mod gabidulin;
pub mod gf;
pub mod linalg;
pub mod linpoly;
pub mod oracle;
pub mod rank_metric;
pub mod selftest;
pub mod serial;
pub mod twisted;

pub use code::{AnyCode, RankCode};
pub use error::{Error, Result};
pub use gabidulin::{GabidulinCode, Message};
pub use gf::{Fe, GaloisField};
pub use linpoly::LinPoly;
pub use rank_metric::Word;
pub use twisted::TwistedCode;
