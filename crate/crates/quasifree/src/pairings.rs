use crate::error::QuasifreeError;

/// Perfect matching of positions `1..=n`; every pair is ascending and pairs are
/// listed by their first element.
pub type Pairing = Vec<(usize, usize)>;

/// Degree guards against double-factorial blowup. Both are overridable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_pairing_n: usize,
    pub max_gram_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairing_n: 16, max_gram_degree: 4 }
    }
}

pub fn enumerate_pairings(n: usize) -> Result<Vec<Pairing>, QuasifreeError> {
    enumerate_pairings_with(n, &Limits::default())
}

/// Deterministic order: the smallest open position is paired with each later
/// open position in increasing order, depth first.
pub fn enumerate_pairings_with(n: usize, limits: &Limits) -> Result<Vec<Pairing>, QuasifreeError> {
    if n % 2 == 1 {
        return Err(QuasifreeError::OddPairing { n });
    }
    if n > limits.max_pairing_n {
        return Err(QuasifreeError::DegreeGuard { n, max: limits.max_pairing_n });
    }
    let mut out = Vec::with_capacity(double_factorial(n.saturating_sub(1)) as usize);
    let mut open: Vec<usize> = (1..=n).collect();
    let mut current = Vec::with_capacity(n / 2);
    recurse(&mut open, &mut current, &mut out);
    Ok(out)
}

fn recurse(open: &mut Vec<usize>, current: &mut Pairing, out: &mut Vec<Pairing>) {
    if open.is_empty() {
        out.push(current.clone());
        return;
    }
    let first = open.remove(0);
    for k in 0..open.len() {
        let partner = open.remove(k);
        current.push((first, partner));
        recurse(open, current, out);
        current.pop();
        open.insert(k, partner);
    }
    open.insert(0, first);
}

/// `n!!`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: usize) -> u64 {
    (1..=n as u64).rev().step_by(2).product()
}
