use num_traits::Zero;

use super::{SeqParams, SeqTable};
use crate::exact::{BigRational, EgfSeries};

/// Same table as [`super::compute_table`], obtained by general series
/// inversion instead of the recurrence.
///
/// `H_{N,j}` is built to order `N n_max + j`, divided by `z^j` (since
/// `F H = z^j`), and inverted with the full EGF convolution. Coefficients
/// at non-multiples of `N` must come out zero; that is asserted.
pub fn oracle_table(params: SeqParams, n_max: usize) -> SeqTable {
    let step = params.step as usize;
    let j = params.j as usize;
    let order = step * n_max + j;
    let h = EgfSeries::h_series(step, j, order);
    let g = h
        .divide_by_z_power(j)
        .expect("H_{N,j} is divisible by z^j by construction");
    let f = g.invert().expect("H_{N,j}/z^j has constant term 1/j!");
    for (i, c) in f.coefficients().iter().enumerate() {
        assert!(
            i % step == 0 || c.is_zero(),
            "oracle coefficient {i} of {params} is nonzero"
        );
    }
    let values: Vec<BigRational> = (0..=n_max).map(|n| f.coefficient(step * n).clone()).collect();
    SeqTable { params, values }
}
