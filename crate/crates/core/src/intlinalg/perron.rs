use super::primitive::{graph_irreducible, support_graph};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use num_traits::ToPrimitive;

#[derive(Clone, Debug, PartialEq)]
pub struct PerronData {
    pub lambda: f64,
    pub left_vec: Vec<f64>,
    pub right_vec: Vec<f64>,
    pub residual: f64,
}

fn to_f64(m: &IntMatrix) -> Vec<Vec<f64>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.to_f64().unwrap_or(f64::INFINITY))
                .collect()
        })
        .collect()
}

fn apply(a: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

fn norm_inf(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Power iteration on `I + A`, which is primitive whenever `A` is irreducible.
fn dominant(a: &[Vec<f64>], tol: f64) -> Result<(f64, Vec<f64>, f64)> {
    let n = a.len();
    let mut x = vec![1.0; n];
    for _ in 0..1_000_000 {
        let ax = apply(a, &x);
        let y: Vec<f64> = ax.iter().zip(&x).map(|(p, q)| p + q).collect();
        let s = norm_inf(&y);
        let y: Vec<f64> = y.iter().map(|v| v / s).collect();
        let delta = y
            .iter()
            .zip(&x)
            .fold(0.0f64, |m, (p, q)| m.max((p - q).abs()));
        x = y;
        if delta <= tol * 1e-3 {
            break;
        }
    }
    let ax = apply(a, &x);
    let lambda = ax.iter().zip(&x).map(|(p, q)| p / q).sum::<f64>() / n as f64;
    let residual = ax
        .iter()
        .zip(&x)
        .fold(0.0f64, |m, (p, q)| m.max((p - lambda * q).abs()))
        / norm_inf(&x);
    if !residual.is_finite() || residual > tol * lambda.max(1.0) {
        return Err(Error::NoConvergence(format!(
            "power iteration residual {residual:e}"
        )));
    }
    Ok((lambda, x, residual))
}

pub fn perron_eigendata(m: &IntMatrix, tol: f64) -> Result<PerronData> {
    m.require_square()?;
    if !m.is_nonnegative() || !graph_irreducible(&support_graph(m)) {
        return Err(Error::Reducible(
            "Perron data needs an irreducible nonnegative matrix".into(),
        ));
    }
    let a = to_f64(m);
    let (lambda, r, res_r) = dominant(&a, tol)?;
    let at = to_f64(&m.transpose());
    let (_, l, res_l) = dominant(&at, tol)?;
    let dot: f64 = l.iter().zip(&r).map(|(p, q)| p * q).sum();
    let left_vec = l.iter().map(|v| v / dot).collect();
    Ok(PerronData {
        lambda,
        left_vec,
        right_vec: r,
        residual: res_r.max(res_l),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let d = perron_eigendata(&IntMatrix::from_i64(&[&[2, 1], &[1, 2]]), 1e-12).unwrap();
        assert!((d.lambda - 3.0).abs() < 1e-9);
        assert!((d.right_vec[0] - d.right_vec[1]).abs() < 1e-9);
        let dot: f64 = d
            .left_vec
            .iter()
            .zip(&d.right_vec)
            .map(|(a, b)| a * b)
            .sum();
        assert!((dot - 1.0).abs() < 1e-12);

        let one = perron_eigendata(&IntMatrix::from_i64(&[&[2]]), 1e-12).unwrap();
        assert_eq!(
            (one.lambda, one.left_vec[0], one.right_vec[0]),
            (2.0, 1.0, 1.0)
        );

        let gold = perron_eigendata(&IntMatrix::from_i64(&[&[1, 1], &[1, 0]]), 1e-10).unwrap();
        assert!((gold.lambda - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);

        let per = perron_eigendata(&IntMatrix::from_i64(&[&[0, 5], &[5, 0]]), 1e-10).unwrap();
        assert!((per.lambda - 5.0).abs() < 1e-9);

        assert!(perron_eigendata(&IntMatrix::from_i64(&[&[1, 0], &[0, 1]]), 1e-9).is_err());
    }
}
