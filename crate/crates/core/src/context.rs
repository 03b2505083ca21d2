//! Computation context: rank, treatment of `d`, and the shared memo tables.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, SymPoly, SymPolyRepr};
use crate::polyring::MPoly;
use crate::scalars::{fmt_bigrat, BigRat, DRat};

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DMode {
    Symbolic,
    Specialized(BigRat),
}

impl DMode {
    pub fn label(&self) -> String {
        match self {
            DMode::Symbolic => "symbolic".into(),
            DMode::Specialized(d0) => fmt_bigrat(d0),
        }
    }
}

/// A map filled concurrently; values are computed outside the lock and the
/// first insertion for a key wins.
pub(crate) struct Memo<K, V> {
    inner: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo {
            inner: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get(&self, k: &K) -> Option<V> {
        self.inner.read().expect("memo lock").get(k).cloned()
    }

    pub(crate) fn insert(&self, k: K, v: V) -> V {
        let mut w = self.inner.write().expect("memo lock");
        w.entry(k).or_insert(v).clone()
    }

    pub(crate) fn get_or_try(&self, k: &K, f: impl FnOnce() -> Result<V>) -> Result<V> {
        if let Some(v) = self.get(k) {
            return Ok(v);
        }
        let v = f()?;
        Ok(self.insert(k.clone(), v))
    }

    fn len(&self) -> usize {
        self.inner.read().expect("memo lock").len()
    }

    fn entries(&self) -> Vec<(K, V)> {
        self.inner
            .read()
            .expect("memo lock")
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum OpKey {
    D,
    H(usize),
}

pub struct Context {
    r: usize,
    mode: DMode,
    d: DRat,
    pub(crate) ops: Memo<(OpKey, Partition), Arc<SymPoly>>,
    pub(crate) jack: Memo<Partition, Arc<SymPoly>>,
    pub(crate) p_one: Memo<Partition, DRat>,
    pub(crate) ijack: Memo<Partition, Arc<SymPoly>>,
    pub(crate) ijack_eval: Memo<(Partition, Vec<DRat>), DRat>,
    pub(crate) m_products: Memo<(Partition, Partition), Arc<SymPoly>>,
    pub(crate) delta_images: Memo<Vec<usize>, Arc<MPoly>>,
    trace: Option<Mutex<Vec<String>>>,
}

impl Context {
    pub fn symbolic(r: usize) -> Result<Self> {
        Self::new(r, DMode::Symbolic)
    }

    pub fn specialized(r: usize, d0: BigRat) -> Result<Self> {
        Self::new(r, DMode::Specialized(d0))
    }

    pub fn new(r: usize, mode: DMode) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("r must be at least 1".into()));
        }
        let d = match &mode {
            DMode::Symbolic => DRat::d(),
            DMode::Specialized(d0) => {
                if num_traits::Zero::is_zero(d0) {
                    return Err(Error::SpecializationZeroD);
                }
                DRat::from_bigrat(d0.clone())
            }
        };
        Ok(Context {
            r,
            mode,
            d,
            ops: Memo::new(),
            jack: Memo::new(),
            p_one: Memo::new(),
            ijack: Memo::new(),
            ijack_eval: Memo::new(),
            m_products: Memo::new(),
            delta_images: Memo::new(),
            trace: None,
        })
    }

    pub fn with_trace(mut self) -> Self {
        self.trace = Some(Mutex::new(Vec::new()));
        self
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn mode(&self) -> &DMode {
        &self.mode
    }

    pub fn is_specialized(&self) -> bool {
        matches!(self.mode, DMode::Specialized(_))
    }

    /// `d` itself, or the constant `d0` in specialized mode.
    pub fn d(&self) -> &DRat {
        &self.d
    }

    pub fn half_d(&self) -> DRat {
        self.d.scale(&crate::scalars::rat(1, 2))
    }

    pub fn two_over_d(&self) -> DRat {
        self.half_d().inv().expect("d is nonzero")
    }

    /// Integer vector as scalars.
    pub fn point(&self, x: &[i64]) -> Vec<DRat> {
        x.iter().map(|&v| DRat::from_int(v)).collect()
    }

    /// `x + (d/2) δ`.
    pub fn shifted_point(&self, x: &[DRat]) -> Vec<DRat> {
        let h = self.half_d();
        let r = x.len();
        x.iter()
            .enumerate()
            .map(|(i, xi)| xi + &h.scale(&crate::scalars::int((r - 1 - i) as i64)))
            .collect()
    }

    /// Wraps a zero-denominator failure as a singularity in specialized mode.
    pub(crate) fn pole(&self, what: impl FnOnce() -> String) -> Error {
        if self.is_specialized() {
            Error::PoleAtSpecialization(what())
        } else {
            Error::PoleInCoefficient(what())
        }
    }

    pub(crate) fn tracing(&self) -> bool {
        self.trace.is_some()
    }

    pub(crate) fn trace(&self, line: impl FnOnce() -> String) {
        if let Some(t) = &self.trace {
            t.lock().expect("trace lock").push(line());
        }
    }

    pub fn take_trace(&self) -> Vec<String> {
        match &self.trace {
            Some(t) => std::mem::take(&mut *t.lock().expect("trace lock")),
            None => Vec::new(),
        }
    }

    pub fn memo_sizes(&self) -> [(&'static str, usize); 4] {
        [
            ("operators", self.ops.len()),
            ("jack", self.jack.len()),
            ("ijack", self.ijack.len()),
            ("ijack_eval", self.ijack_eval.len()),
        ]
    }

    pub fn export_cache(&self) -> CacheSnapshot {
        let mut jack: Vec<_> = self
            .jack
            .entries()
            .into_iter()
            .map(|(k, v)| CachedPoly {
                partition: k.parts().to_vec(),
                poly: v.to_repr(),
            })
            .collect();
        jack.sort_by(|a, b| a.partition.cmp(&b.partition));
        let mut ijack: Vec<_> = self
            .ijack
            .entries()
            .into_iter()
            .map(|(k, v)| CachedPoly {
                partition: k.parts().to_vec(),
                poly: v.to_repr(),
            })
            .collect();
        ijack.sort_by(|a, b| a.partition.cmp(&b.partition));
        let mut p_one: Vec<_> = self
            .p_one
            .entries()
            .into_iter()
            .map(|(k, v)| CachedScalar {
                partition: k.parts().to_vec(),
                value: v,
            })
            .collect();
        p_one.sort_by(|a, b| a.partition.cmp(&b.partition));
        CacheSnapshot {
            version: CACHE_VERSION,
            r: self.r,
            d_mode: self.mode.label(),
            jack,
            ijack,
            p_one,
        }
    }

    /// Loads a snapshot; a mismatched version, rank or `d` mode is rejected.
    pub fn import_cache(&self, snap: &CacheSnapshot) -> Result<()> {
        if snap.version != CACHE_VERSION {
            return Err(Error::InvalidInput(format!(
                "cache format version {} does not match {}",
                snap.version, CACHE_VERSION
            )));
        }
        if snap.r != self.r {
            return Err(Error::InvalidInput(format!(
                "cache was written for r={} but r={} was requested",
                snap.r, self.r
            )));
        }
        if snap.d_mode != self.mode.label() {
            return Err(Error::InvalidInput(format!(
                "cache was written for d={} but d={} was requested",
                snap.d_mode,
                self.mode.label()
            )));
        }
        for e in &snap.jack {
            let k = Partition::padded(&e.partition, self.r)?;
            self.jack.insert(k, Arc::new(SymPoly::from_repr(&e.poly)?));
        }
        for e in &snap.ijack {
            let k = Partition::padded(&e.partition, self.r)?;
            self.ijack.insert(k, Arc::new(SymPoly::from_repr(&e.poly)?));
        }
        for e in &snap.p_one {
            let k = Partition::padded(&e.partition, self.r)?;
            self.p_one.insert(k, e.value.clone());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CacheSnapshot {
    pub version: u32,
    pub r: usize,
    pub d_mode: String,
    pub jack: Vec<CachedPoly>,
    pub ijack: Vec<CachedPoly>,
    pub p_one: Vec<CachedScalar>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CachedPoly {
    pub partition: Vec<u32>,
    pub poly: SymPolyRepr,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CachedScalar {
    pub partition: Vec<u32>,
    pub value: DRat,
}
