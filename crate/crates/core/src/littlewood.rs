//! The Littlewood decomposition `λ ↦ (t-core, t-quotient)` built from the
//! t-colored Frobenius symbol.
//!
//! Splitting the colored symbol by color gives `t` two-rowed arrays. Array `j`
//! has `u_j` top and `v_j` bottom entries; `w_j = u_j - v_j` is the
//! characteristic vector, which alone determines the core, and Wright's map
//! turns each array into the quotient partition `λ_(j)`.

use serde::{Deserialize, Serialize};

use crate::error::{check_modulus, Error, Result};
use crate::frobenius::{ColoredFrobeniusSymbol, ColoredInteger, FrobeniusSymbol};
use crate::partition::Partition;
use crate::wright::{TwoRowedArray, WrightImage};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(rename = "t")]
    pub modulus: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub charvec: Vec<i64>,
}

impl Decomposition {
    /// `|core| + t·Σ|λ_(j)|`, which equals the size of the decomposed partition.
    pub fn size(&self) -> usize {
        self.core.size() + self.modulus * self.quotient.iter().map(Partition::size).sum::<usize>()
    }

    /// Number of boxes of hook length 1 across the quotient.
    pub fn quotient_hook1_count(&self) -> usize {
        self.quotient.iter().map(|q| q.count_hooks_of_length(1)).sum()
    }

    pub fn compose(&self) -> Result<Partition> {
        compose(&self.core, &self.quotient, self.modulus)
    }
}

/// Groups the entries of a colored symbol by color. Array `j` holds the values
/// of the color-`j` entries of each row, still strictly decreasing.
pub fn split_by_color(symbol: &ColoredFrobeniusSymbol) -> Vec<TwoRowedArray> {
    let t = symbol.modulus();
    (0..t)
        .map(|j| {
            let values = |row: &[ColoredInteger]| -> Vec<usize> {
                row.iter().filter(|x| x.color == j).map(|x| x.value).collect()
            };
            TwoRowedArray::new(values(symbol.top()), values(symbol.bottom()))
                .expect("same-colored entries decrease with their decoded values")
        })
        .collect()
}

/// The colored symbol of the t-core with characteristic vector `charvec`: color
/// `j` contributes `w_j - 1, …, 0` to the top row when `w_j > 0`, and
/// `-w_j - 1, …, 0` to the bottom row when `w_j < 0`.
fn core_from_charvec(charvec: &[i64]) -> Partition {
    let t = charvec.len();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (j, &w) in charvec.iter().enumerate() {
        let entries = (0..w.unsigned_abs() as usize).map(|q| ColoredInteger { value: q, color: j, modulus: t });
        if w > 0 {
            top.extend(entries.map(|x| x.decode_top()));
        } else {
            bottom.extend(entries.map(|x| x.decode_bottom()));
        }
    }
    top.sort_unstable_by(|a, b| b.cmp(a));
    bottom.sort_unstable_by(|a, b| b.cmp(a));
    FrobeniusSymbol::new(top, bottom)
        .expect("characteristic vector sums to zero")
        .to_partition()
}

/// Recovers `w_j` from a t-core: the number of color-`j` entries in the top row
/// of its colored symbol, or minus the number in the bottom row.
fn charvec_of_core(core: &Partition, t: usize) -> Vec<i64> {
    let colored = FrobeniusSymbol::from_partition(core)
        .to_colored(t)
        .expect("t is positive");
    let mut w = vec![0i64; t];
    for x in colored.top() {
        w[x.color] += 1;
    }
    for x in colored.bottom() {
        w[x.color] -= 1;
    }
    w
}

pub fn decompose(lambda: &Partition, t: usize) -> Result<Decomposition> {
    check_modulus(t)?;
    let colored = FrobeniusSymbol::from_partition(lambda).to_colored(t)?;
    let arrays = split_by_color(&colored);
    let charvec: Vec<i64> = arrays.iter().map(TwoRowedArray::offset).collect();
    let core = core_from_charvec(&charvec);
    debug_assert_eq!(charvec_of_core(&core, t), charvec);
    let quotient = arrays.iter().map(|a| a.wright_forward().mu).collect();
    Ok(Decomposition { modulus: t, core, quotient, charvec })
}

/// Inverse of [`decompose`]. Rejects a `core` that is not a t-core and a
/// quotient whose length is not `t`.
pub fn compose(core: &Partition, quotient: &[Partition], t: usize) -> Result<Partition> {
    check_modulus(t)?;
    if quotient.len() != t {
        return Err(Error::QuotientLength { expected: t, got: quotient.len() });
    }
    if !FrobeniusSymbol::from_partition(core).is_t_core(t)? {
        return Err(Error::NotCore(format!("({core})"), t));
    }
    let charvec = charvec_of_core(core, t);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (j, (mu, &w)) in quotient.iter().zip(&charvec).enumerate() {
        let array = WrightImage::new(w, mu.clone()).wright_backward();
        let recolor = |q: &usize| ColoredInteger { value: *q, color: j, modulus: t };
        top.extend(array.top().iter().map(recolor).map(|x| x.decode_top()));
        bottom.extend(array.bottom().iter().map(recolor).map(|x| x.decode_bottom()));
    }
    // merge by decoded Frobenius entries; the bottom row's colored order differs
    top.sort_unstable_by(|a, b| b.cmp(a));
    bottom.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(top.len(), bottom.len(), "merged rows must have equal length");
    Ok(FrobeniusSymbol::new(top, bottom)?.to_partition())
}

pub fn char_vector(lambda: &Partition, t: usize) -> Result<Vec<i64>> {
    Ok(decompose(lambda, t)?.charvec)
}

pub fn core(lambda: &Partition, t: usize) -> Result<Partition> {
    Ok(decompose(lambda, t)?.core)
}

pub fn quotient(lambda: &Partition, t: usize) -> Result<Vec<Partition>> {
    Ok(decompose(lambda, t)?.quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn arr(top: &[usize], bottom: &[usize]) -> TwoRowedArray {
        TwoRowedArray::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn colored(l: &Partition, t: usize) -> ColoredFrobeniusSymbol {
        FrobeniusSymbol::from_partition(l).to_colored(t).unwrap()
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            split_by_color(&colored(&p(&[8, 7, 7, 4, 4, 2]), 3)),
            vec![arr(&[0], &[1, 0]), arr(&[2, 1], &[1, 0]), arr(&[1], &[])]
        );
        assert_eq!(split_by_color(&colored(&Partition::empty(), 3)), vec![TwoRowedArray::empty(); 3]);
        assert_eq!(
            split_by_color(&colored(&p(&[9, 6, 6, 5, 3, 1, 1, 1]), 3)),
            vec![arr(&[1], &[0]), arr(&[1, 0], &[2]), arr(&[2], &[1, 0])]
        );
        assert_eq!(
            split_by_color(&colored(&p(&[8, 5, 5, 4, 3, 1, 1, 1]), 3)),
            vec![arr(&[1, 0], &[0]), arr(&[2], &[2]), arr(&[0], &[1, 0])]
        );
    }

    #[test]
    fn decompose_worked_example() {
        let d = decompose(&p(&[8, 7, 7, 4, 4, 2]), 3).unwrap();
        assert_eq!(d.core, p(&[3, 1, 1]));
        assert_eq!(d.quotient, vec![p(&[2]), p(&[3, 3]), p(&[1])]);
        assert_eq!(d.charvec, vec![-1, 0, 1]);
        assert_eq!(d.size(), 32);
    }

    #[test]
    fn decompose_self_conjugate_example() {
        let d = decompose(&p(&[8, 5, 5, 4, 3, 1, 1, 1]), 3).unwrap();
        assert_eq!(d.core, p(&[1]));
        assert_eq!(d.quotient, vec![p(&[1, 1]), p(&[3, 1, 1]), p(&[2])]);
    }

    #[test]
    fn decompose_with_t_one() {
        let l = p(&[8, 7, 7, 4, 4, 2]);
        let d = decompose(&l, 1).unwrap();
        assert_eq!(d.core, Partition::empty());
        assert_eq!(d.quotient, vec![l]);
        assert_eq!(d.charvec, vec![0]);
        assert_eq!(decompose(&Partition::empty(), 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            compose(&p(&[3, 1, 1]), &[p(&[2]), p(&[3, 3]), p(&[1])], 3).unwrap(),
            p(&[8, 7, 7, 4, 4, 2])
        );
        assert_eq!(compose(&Partition::empty(), &vec![Partition::empty(); 3], 3).unwrap(), Partition::empty());
        assert_eq!(
            compose(&p(&[2]), &[p(&[2]), p(&[1, 1, 1, 1]), p(&[4])], 3).unwrap(),
            p(&[9, 6, 6, 5, 3, 1, 1, 1])
        );
    }

    #[test]
    fn compose_validates() {
        assert_eq!(
            compose(&p(&[3]), &vec![Partition::empty(); 3], 3),
            Err(Error::NotCore("(3)".into(), 3))
        );
        assert_eq!(
            compose(&Partition::empty(), &[Partition::empty()], 3),
            Err(Error::QuotientLength { expected: 3, got: 1 })
        );
    }

    #[test]
    fn char_vector_examples() {
        assert_eq!(char_vector(&p(&[8, 7, 7, 4, 4, 2]), 3).unwrap(), vec![-1, 0, 1]);
        assert_eq!(char_vector(&Partition::empty(), 4).unwrap(), vec![0; 4]);
        // 𝔉((2)) = (1 / 0) colors as (0:1 / 0:1): color 1 has u = v = 1
        assert_eq!(char_vector(&p(&[2]), 2).unwrap(), vec![0, 0]);
        assert_eq!(char_vector(&p(&[1]), 2).unwrap(), vec![1, -1]);
    }

    #[test]
    fn hook_transfer_examples() {
        let l = p(&[8, 7, 7, 4, 4, 2]);
        let d = decompose(&l, 3).unwrap();
        assert_eq!(d.quotient_hook1_count(), 3);
        assert_eq!(l.count_hooks_of_length(3), 3);
        let empty = decompose(&Partition::empty(), 3).unwrap();
        assert_eq!(empty.quotient_hook1_count(), 0);
        let small = p(&[2, 1]);
        assert_eq!(decompose(&small, 3).unwrap().quotient_hook1_count(), 1);
        assert_eq!(small.count_hooks_of_length(3), 1);
    }

    #[test]
    fn json_payload() {
        let d = decompose(&p(&[8, 7, 7, 4, 4, 2]), 3).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"t":3,"core":[3,1,1],"quotient":[[2],[3,3],[1]],"charvec":[-1,0,1]}"#);
        let back: Decomposition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
