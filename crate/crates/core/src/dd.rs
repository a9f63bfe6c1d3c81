//! Double-word ("double-double") arithmetic.
//!
//! A [`Dd`] value represents a real number as an unevaluated sum
//! `hi + lo` of two `f64` words with `|lo| <= ulp(hi)/2`, giving roughly
//! 32 significant decimal digits. The identity checks in this crate
//! compare quantities that agree only after cancellation of ten or more
//! digits; the reference sides of those checks accumulate in `Dd` so the
//! comparison is limited by the plain-`f64` side, not the oracle.
//!
//! Only rational operations are provided. Every algorithm below is the
//! standard error-free-transformation construction (Dekker products via
//! FMA, Knuth two-sums).

/// Exact sum of two doubles: returns `(s, e)` with `s = fl(a + b)` and
/// `a + b = s + e`.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

/// Exact sum assuming `|a| >= |b|` (or either is zero).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Exact product: `a * b = p + e` with `p = fl(a * b)`.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

/// A number stored as the unevaluated sum of two `f64` words.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

impl Dd {
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: u32) -> Self {
        let mut base = self;
        let mut exp = n;
        let mut acc = ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Reciprocal, accurate to full double-double precision.
    #[inline]
    pub fn recip(self) -> Self {
        ONE / self
    }
}

impl std::ops::Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl std::ops::Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }
}

impl std::ops::Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs);
        let (s1, s2) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi: s1, lo: s2 }
    }
}

impl std::ops::Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl std::ops::Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: f64) -> Dd {
        self + (-rhs)
    }
}

impl std::ops::Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (p1, p2) = quick_two_sum(p1, p2);
        Dd { hi: p1, lo: p2 }
    }
}

impl std::ops::Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        let (p1, p2) = quick_two_sum(p1, p2 + self.lo * rhs);
        Dd { hi: p1, lo: p2 }
    }
}

impl std::ops::Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        // Long division: three quotient words, each correcting the
        // residual of the previous ones.
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * q1;
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * q2;
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + q3
    }
}

impl std::ops::Div<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, rhs: f64) -> Dd {
        self / Dd::from(rhs)
    }
}

impl std::ops::AddAssign for Dd {
    #[inline]
    fn add_assign(&mut self, rhs: Dd) {
        *self = *self + rhs;
    }
}

/// `pi/2` as a double word (`lo` is the standard two-word residue).
const HALF_PI: Dd = Dd {
    hi: std::f64::consts::FRAC_PI_2,
    lo: 6.123233995736766e-17,
};

/// Cosine of a double-word argument, for moderate `|x|` (say below 1e6,
/// far beyond the multiple angles this crate feeds it). Standard
/// reduction by `pi/2` followed by the Taylor series of the reduced
/// argument; good to a few units in the 32nd digit.
pub fn cos_dd(x: Dd) -> Dd {
    let quadrant = (x.value() / std::f64::consts::FRAC_PI_2).round();
    let r = x - HALF_PI * quadrant;
    let q = (quadrant as i64).rem_euclid(4);
    match q {
        0 => cos_taylor(r),
        1 => -sin_taylor(r),
        2 => -cos_taylor(r),
        _ => sin_taylor(r),
    }
}

fn cos_taylor(r: Dd) -> Dd {
    let r2 = r * r;
    let mut term = ONE;
    let mut acc = ONE;
    for i in 1..=18u32 {
        let d = (2 * i - 1) as f64 * (2 * i) as f64;
        term = -(term * r2 / d);
        acc += term;
    }
    acc
}

fn sin_taylor(r: Dd) -> Dd {
    let r2 = r * r;
    let mut term = r;
    let mut acc = r;
    for i in 1..=18u32 {
        let d = (2 * i) as f64 * (2 * i + 1) as f64;
        term = -(term * r2 / d);
        acc += term;
    }
    acc
}

impl std::ops::MulAssign for Dd {
    #[inline]
    fn mul_assign(&mut self, rhs: Dd) {
        *self = *self * rhs;
    }
}
