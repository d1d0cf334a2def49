//! JSON and packed-digit forms of fields, elements, words, polynomials and
//! code specs.
//!
//! - element: `[d_0, …, d_{n−1}]`, little-endian base-q digits
//! - word, message, linearized polynomial: arrays of elements
//! - field: `{"q": 3, "n": 4, "modulus": [2, 1, 0, 0, 1]}`
//! - code spec: `{"q", "n", "k", "modulus", "eta", "r", "alpha"?, "seed"?}`
//!
//! The packed form writes each element as n digit characters (`0-9a-z`,
//! so q ≤ 36) and separates elements with `:`.

use serde::{Deserialize, Serialize};

use crate::code::AnyCode;
use crate::error::{Error, Result};
use crate::gabidulin::{GabidulinCode, Message};
use crate::gf::{Fe, GaloisField};
use crate::linpoly::LinPoly;
use crate::rank_metric::Word;
use crate::twisted::TwistedCode;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldParams {
    pub q: u32,
    pub n: usize,
    pub modulus: Vec<u32>,
}

impl FieldParams {
    pub fn of(field: &GaloisField) -> Self {
        Self {
            q: field.characteristic(),
            n: field.degree(),
            modulus: field.modulus().to_vec(),
        }
    }

    pub fn build(&self) -> Result<GaloisField> {
        GaloisField::with_modulus(self.q, self.n, self.modulus.clone())
    }
}

/// On-disk description of a (twisted) Gabidulin code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecFile {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub modulus: Vec<u32>,
    pub eta: Vec<u32>,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CodeSpecFile {
    pub fn of(code: &TwistedCode, seed: Option<u64>) -> Self {
        let field = code.field();
        let alpha = (code.alpha() != field.power_basis().as_slice())
            .then(|| code.alpha().iter().map(|&a| field.digits(a)).collect());
        Self {
            q: field.characteristic(),
            n: field.degree(),
            k: code.k(),
            modulus: field.modulus().to_vec(),
            eta: field.digits(code.eta()),
            r: code.r(),
            alpha,
            seed,
        }
    }

    pub fn field(&self) -> Result<GaloisField> {
        GaloisField::with_modulus(self.q, self.n, self.modulus.clone())
    }

    fn parts(&self) -> Result<(GaloisField, Fe, Option<Vec<Fe>>)> {
        let field = self.field()?;
        let eta = field.from_digits(&self.eta)?;
        let alpha = match &self.alpha {
            Some(rows) => Some(
                rows.iter()
                    .map(|d| field.from_digits(d))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        Ok((field, eta, alpha))
    }

    pub fn twisted(&self) -> Result<TwistedCode> {
        let (field, eta, alpha) = self.parts()?;
        TwistedCode::new(field, self.k, eta, self.r, alpha)
    }

    /// Classical code when η = 0, twisted otherwise.
    pub fn build(&self) -> Result<AnyCode> {
        let (field, eta, alpha) = self.parts()?;
        if eta.is_zero() {
            Ok(AnyCode::Gabidulin(GabidulinCode::new(field, self.k, alpha)?))
        } else {
            Ok(AnyCode::Twisted(TwistedCode::new(
                field, self.k, eta, self.r, alpha,
            )?))
        }
    }

    /// Like [`build`](Self::build) but skips the norm check on η.
    pub fn build_unvalidated(&self) -> Result<AnyCode> {
        let (field, eta, alpha) = self.parts()?;
        if eta.is_zero() {
            Ok(AnyCode::Gabidulin(GabidulinCode::new(field, self.k, alpha)?))
        } else {
            Ok(AnyCode::Twisted(TwistedCode::new_unvalidated(
                field, self.k, eta, self.r, alpha,
            )?))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e))
}

pub fn element_to_json(field: &GaloisField, a: Fe) -> String {
    serde_json::to_string(&field.digits(a)).expect("digits serialize")
}

fn elements_to_json(field: &GaloisField, elems: &[Fe]) -> String {
    let rows: Vec<Vec<u32>> = elems.iter().map(|&a| field.digits(a)).collect();
    serde_json::to_string(&rows).expect("digits serialize")
}

fn elements_from_json(field: &GaloisField, text: &str) -> Result<Vec<Fe>> {
    let rows: Vec<Vec<u32>> = serde_json::from_str(text).map_err(json_error)?;
    rows.iter().map(|d| field.from_digits(d)).collect()
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

fn elements_to_packed(field: &GaloisField, elems: &[Fe]) -> Result<String> {
    if field.characteristic() > 36 {
        return Err(Error::Unsupported("packed digits need q <= 36".into()));
    }
    Ok(elems
        .iter()
        .map(|&a| {
            field
                .digits(a)
                .into_iter()
                .map(|d| DIGITS[d as usize] as char)
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join(":"))
}

fn elements_from_packed(field: &GaloisField, text: &str) -> Result<Vec<Fe>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(':')
        .map(|chunk| {
            let digits = chunk
                .chars()
                .map(|c| {
                    c.to_digit(36)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {chunk:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            field.from_digits(&digits)
        })
        .collect()
}

/// Reads either form; JSON is recognised by a leading `[`.
pub fn parse_elements(field: &GaloisField, text: &str) -> Result<Vec<Fe>> {
    let text = text.trim();
    if text.starts_with('[') {
        elements_from_json(field, text)
    } else {
        elements_from_packed(field, text)
    }
}

pub fn format_elements(field: &GaloisField, elems: &[Fe], packed: bool) -> Result<String> {
    if packed {
        elements_to_packed(field, elems)
    } else {
        Ok(elements_to_json(field, elems))
    }
}

pub fn parse_word(field: &GaloisField, text: &str) -> Result<Word> {
    parse_elements(field, text).map(Word)
}

pub fn parse_message(field: &GaloisField, text: &str) -> Result<Message> {
    parse_elements(field, text).map(Message)
}

pub fn poly_to_json(field: &GaloisField, p: &LinPoly) -> String {
    elements_to_json(field, p.coeffs())
}

pub fn parse_poly(field: &GaloisField, text: &str) -> Result<LinPoly> {
    elements_from_json(field, text.trim()).map(LinPoly::from_coeffs)
}
