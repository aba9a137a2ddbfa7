//! A uniform handle on every route to `B_{N,n}^{(r)}`, used by sweeps and the
//! command line.

use std::fmt;
use std::str::FromStr;

use crate::altforms;
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::hbnum::{hb_higher, HbKey};
use crate::hessenberg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Recurrence,
    Comp,
    Binom,
    Explicit,
    Trudi,
    Det,
    Descent,
    DescentNested,
    Convolution,
}

impl Route {
    pub const ALL: [Route; 9] = [
        Route::Recurrence,
        Route::Comp,
        Route::Binom,
        Route::Explicit,
        Route::Trudi,
        Route::Det,
        Route::Descent,
        Route::DescentNested,
        Route::Convolution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::Comp => "comp",
            Route::Binom => "binom",
            Route::Explicit => "explicit",
            Route::Trudi => "trudi",
            Route::Det => "det",
            Route::Descent => "descent",
            Route::DescentNested => "descent-nested",
            Route::Convolution => "convolution",
        }
    }

    /// Routes that only exist for `r = 1`.
    pub fn first_order_only(self) -> bool {
        matches!(self, Route::Comp | Route::Binom | Route::Descent | Route::DescentNested)
    }

    /// Why the route cannot evaluate `key`, if it cannot.
    pub fn precondition(self, key: &HbKey) -> Option<String> {
        if self.first_order_only() && key.r != 1 {
            return Some(format!("route {self} needs r = 1"));
        }
        if self != Route::Recurrence && key.n == 0 {
            return Some(format!("route {self} needs n >= 1"));
        }
        if matches!(self, Route::Descent | Route::DescentNested) && key.big_n < 2 {
            return Some(format!("route {self} needs N >= 2"));
        }
        None
    }

    pub fn applies(self, key: &HbKey) -> bool {
        self.precondition(key).is_none()
    }

    pub fn evaluate(self, key: &HbKey) -> Result<Rational> {
        if let Some(why) = self.precondition(key) {
            return Err(Error::RoutePrecondition(why));
        }
        let HbKey { big_n, r, n } = *key;
        match self {
            Route::Recurrence => hb_higher(big_n, r, n),
            Route::Comp => altforms::hb_explicit_comp(big_n, n),
            Route::Binom => altforms::hb_explicit_binom(big_n, n),
            Route::Explicit => altforms::hb_higher_explicit(big_n, r, n),
            Route::Trudi => altforms::hb_trudi(big_n, r, n),
            Route::Det => hessenberg::hb_higher_det(big_n, r, n),
            Route::Descent => altforms::hb_descent_step(big_n, n),
            Route::DescentNested => altforms::hb_descent_nested(big_n, n),
            Route::Convolution => altforms::hb_higher_convolution(big_n, r, n),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown route {s:?}")))
    }
}
