use std::fmt;

use serde::{Deserialize, Serialize};

/// A value bound to a variable in a counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    /// An algebra element, as an atom bitmask.
    Elem(u64),
    /// A point of a frame (or an ultrafilter index).
    Point(usize),
    /// A set of points, as a bitmask.
    Set(u64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Elem(e) => write!(f, "{e:#b}"),
            Value::Point(p) => write!(f, "{p}"),
            Value::Set(s) => write!(f, "{{{}}}", crate::boolean::bits(*s).map(|b| b.to_string()).collect::<Vec<_>>().join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub var: String,
    pub value: Value,
}

impl Binding {
    pub fn new(var: impl Into<String>, value: Value) -> Self {
        Binding { var: var.into(), value }
    }
}

/// Outcome of checking a law: it holds, or it fails with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub law: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Vec<Binding>>,
}

impl Verdict {
    pub fn pass(law: impl Into<String>) -> Self {
        Verdict { law: law.into(), holds: true, counterexample: None }
    }

    pub fn fail(law: impl Into<String>, witness: Vec<Binding>) -> Self {
        Verdict { law: law.into(), holds: false, counterexample: Some(witness) }
    }

    pub fn from_bool(law: impl Into<String>, holds: bool) -> Self {
        if holds {
            Verdict::pass(law)
        } else {
            Verdict::fail(law, Vec::new())
        }
    }

    /// Sequential conjunction: the first failing verdict wins, otherwise a
    /// passing verdict named `law`.
    pub fn all(law: impl Into<String>, parts: impl IntoIterator<Item = Verdict>) -> Self {
        for v in parts {
            if !v.holds {
                return v;
            }
        }
        Verdict::pass(law)
    }

    /// Looks up a variable of the counterexample.
    pub fn witness(&self, var: &str) -> Option<Value> {
        self.counterexample
            .as_ref()?
            .iter()
            .find(|b| b.var == var)
            .map(|b| b.value)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return write!(f, "{}: holds", self.law);
        }
        write!(f, "{}: fails", self.law)?;
        if let Some(cx) = &self.counterexample {
            if !cx.is_empty() {
                let parts: Vec<String> = cx.iter().map(|b| format!("{}={}", b.var, b.value)).collect();
                write!(f, " at {}", parts.join(", "))?;
            }
        }
        Ok(())
    }
}
