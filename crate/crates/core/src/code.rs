//! A common face for the two code families.

use crate::error::Result;
use crate::gabidulin::{GabidulinCode, Message};
use crate::gf::GaloisField;
use crate::rank_metric::Word;
use crate::twisted::TwistedCode;

/// Anything with a field, a dimension, and an encoder.
pub trait RankCode {
    fn field(&self) -> &GaloisField;
    fn k(&self) -> usize;
    fn n(&self) -> usize;
    fn encode(&self, msg: &Message) -> Result<Word>;
    /// `Ok(None)` on decode failure.
    fn decode(&self, received: &Word) -> Result<Option<Message>>;
}

impl RankCode for GabidulinCode {
    fn field(&self) -> &GaloisField {
        GabidulinCode::field(self)
    }
    fn k(&self) -> usize {
        GabidulinCode::k(self)
    }
    fn n(&self) -> usize {
        GabidulinCode::n(self)
    }
    fn encode(&self, msg: &Message) -> Result<Word> {
        GabidulinCode::encode(self, msg)
    }
    fn decode(&self, received: &Word) -> Result<Option<Message>> {
        GabidulinCode::decode(self, received)
    }
}

impl RankCode for TwistedCode {
    fn field(&self) -> &GaloisField {
        TwistedCode::field(self)
    }
    fn k(&self) -> usize {
        TwistedCode::k(self)
    }
    fn n(&self) -> usize {
        TwistedCode::n(self)
    }
    fn encode(&self, msg: &Message) -> Result<Word> {
        TwistedCode::encode(self, msg)
    }
    fn decode(&self, received: &Word) -> Result<Option<Message>> {
        TwistedCode::decode(self, received)
    }
}

/// A classical code when η = 0, a twisted one otherwise.
#[derive(Debug, Clone)]
pub enum AnyCode {
    Gabidulin(GabidulinCode),
    Twisted(TwistedCode),
}

impl AnyCode {
    fn inner(&self) -> &dyn RankCode {
        match self {
            AnyCode::Gabidulin(c) => c,
            AnyCode::Twisted(c) => c,
        }
    }

    /// ⌊(n − k)/2⌋.
    pub fn max_radius(&self) -> usize {
        (self.n() - self.k()) / 2
    }
}

impl RankCode for AnyCode {
    fn field(&self) -> &GaloisField {
        self.inner().field()
    }
    fn k(&self) -> usize {
        self.inner().k()
    }
    fn n(&self) -> usize {
        self.inner().n()
    }
    fn encode(&self, msg: &Message) -> Result<Word> {
        self.inner().encode(msg)
    }
    fn decode(&self, received: &Word) -> Result<Option<Message>> {
        self.inner().decode(received)
    }
}
