use super::{Design, DesignError};

/// A Steiner triple system on `v` points, `v ≡ 1, 3 (mod 6)`.
///
/// Bose's construction is used for `v ≡ 3` and Skolem's for `v ≡ 1`.
pub fn sts(v: usize) -> Result<Design, DesignError> {
    let blocks = match v % 6 {
        3 => bose((v - 3) / 6),
        1 => skolem((v - 1) / 6),
        _ => return Err(DesignError::NoStsExists(v)),
    };
    Design::new(v, blocks)
}

fn pt(q: usize, x: usize, i: usize) -> u32 {
    (i % 3 * q + x + 1) as u32
}

fn bose(n: usize) -> Vec<Vec<u32>> {
    let q = 2 * n + 1;
    let op = |x: usize, y: usize| (n + 1) * (x + y) % q;
    let mut blocks = Vec::new();
    for x in 0..q {
        blocks.push(vec![pt(q, x, 0), pt(q, x, 1), pt(q, x, 2)]);
    }
    for i in 0..3 {
        for x in 0..q {
            for y in x + 1..q {
                blocks.push(vec![pt(q, x, i), pt(q, y, i), pt(q, op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

fn skolem(n: usize) -> Vec<Vec<u32>> {
    let q = 2 * n;
    let inf = (3 * q + 1) as u32;
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            n + (s - 1) / 2
        }
    };
    let mut blocks = Vec::new();
    for x in 0..n {
        blocks.push(vec![pt(q, x, 0), pt(q, x, 1), pt(q, x, 2)]);
    }
    for i in 0..3 {
        for x in 0..n {
            blocks.push(vec![inf, pt(q, n + x, i), pt(q, x, i + 1)]);
        }
        for x in 0..q {
            for y in x + 1..q {
                blocks.push(vec![pt(q, x, i), pt(q, y, i), pt(q, op(x, y), i + 1)]);
            }
        }
    }
    blocks
}
