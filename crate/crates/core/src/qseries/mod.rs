//! Exact truncated power series: univariate in `q` and four-variable in
//! `(a, b, c, d)`, q-Pochhammer products and the named forms built on them.

mod forms;
mod multi;
mod pochhammer;
mod series;

pub use forms::{Boulet, FamilyParams, NamedSeries, ProductForm, SumForm, FORM_NAMES};
pub use multi::{MSeries, Monomial};
pub use pochhammer::{m_pochhammer, m_pochhammer_inverse, pochhammer, pochhammer_inverse, q_factorial, Length, PochBase, PochSpec};
pub use series::{Coeff, Series};
