pub mod braidact;
pub mod error;
pub mod grouptower;
pub mod jline;
pub mod liftinv;
pub mod nielsen;
pub mod permcore;
pub mod realpts;
pub mod reproduce;
pub mod spincover;

pub use error::{Error, Result};
pub use nielsen::class_product_count;
pub use permcore::{Elt, FiniteGroup, Group, Perm};
pub use spincover::CliffordDense;
