//! Exact versions of the root-of-unity products behind the sine-product
//! identities ∏ 2 sin(πr/m) = m.

use super::{CycloError, Cyclotomic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductVariant {
    /// ∏_{r=1}^{m-1} (1 - ω^r), for m ≥ 2.
    Full,
    /// ∏_{r=1}^{(m-1)/2} (2 - ω^r - ω^{-r}), for odd m ≥ 5.
    HalfOdd,
    /// ∏_{r=1}^{m/2-1} (2 - ω^r - ω^{-r}), for even m ≥ 8.
    HalfEven,
}

impl ProductVariant {
    pub const ALL: [ProductVariant; 3] = [ProductVariant::Full, ProductVariant::HalfOdd, ProductVariant::HalfEven];

    pub fn admits(self, m: u32) -> bool {
        match self {
            ProductVariant::Full => m >= 2,
            ProductVariant::HalfOdd => m >= 5 && m % 2 == 1,
            ProductVariant::HalfEven => m >= 8 && m.is_multiple_of(2),
        }
    }

    /// The value the identity predicts: m, or m/2 for the even half product.
    pub fn expected(self, m: u32) -> i64 {
        match self {
            ProductVariant::HalfEven => m as i64 / 2,
            _ => m as i64,
        }
    }
}

/// Evaluates the product for ω = e^{2πi/m} in exact arithmetic.
pub fn product_identity(m: u32, variant: ProductVariant) -> Result<Cyclotomic, CycloError> {
    if !variant.admits(m) {
        let need = match variant {
            ProductVariant::Full => "m >= 2",
            ProductVariant::HalfOdd => "odd m >= 5",
            ProductVariant::HalfEven => "even m >= 8",
        };
        return Err(CycloError::Domain(format!("{variant:?} product requires {need}, got m = {m}")));
    }
    let one = Cyclotomic::one();
    let two = Cyclotomic::from_integer(2);
    let factors: Vec<Cyclotomic> = match variant {
        ProductVariant::Full => {
            (1..m as i64).map(|r| Ok(one.sub(&Cyclotomic::root_of_unity(m, r)?))).collect::<Result<_, CycloError>>()?
        }
        ProductVariant::HalfOdd | ProductVariant::HalfEven => {
            let top = if variant == ProductVariant::HalfOdd { (m as i64 - 1) / 2 } else { m as i64 / 2 - 1 };
            (1..=top).map(|r| Ok(two.sub(&Cyclotomic::sum_of_roots(m, [r, -r])?))).collect::<Result<_, CycloError>>()?
        }
    };
    Ok(factors.into_iter().product())
}
