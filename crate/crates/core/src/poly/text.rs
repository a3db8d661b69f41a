//! Text form used in fixtures: `"3*x1^2*x2 + x2 + 1"`, coefficients as
//! integer field-element codes.

use crate::ff::{Field, Gf};

use super::{Monomial, MultiPoly, PolyError};

pub fn parse_poly(text: &str, nvars: usize, field: &Field) -> Result<MultiPoly, PolyError> {
    let bad = |msg: &str| PolyError::Parse(format!("{msg} in {text:?}"));
    let mut out = MultiPoly::zero(nvars);
    let text = text.trim();
    if text == "0" {
        return Ok(out);
    }
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let mut coeff = Gf::ONE;
        let mut exps = vec![0u32; nvars];
        for factor in term.split('*') {
            let factor = factor.trim();
            if let Some(var) = factor.strip_prefix('x') {
                let (idx, exp) = match var.split_once('^') {
                    Some((i, e)) => (i, e.trim().parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (var, 1),
                };
                let j: usize = idx.trim().parse().map_err(|_| bad("bad variable index"))?;
                if j == 0 || j > nvars {
                    return Err(bad("variable index out of range"));
                }
                exps[j - 1] += exp;
            } else {
                let c: u32 = factor.parse().map_err(|_| bad("bad coefficient"))?;
                if c >= field.size() {
                    return Err(bad("coefficient outside the field"));
                }
                coeff = field.mul(coeff, Gf(c));
            }
        }
        out.add_term(field, Monomial::new(exps), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = Field::binary(3).unwrap();
        let p = parse_poly("3*x1^2*x2 + x2 + 1", 2, &f).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(parse_poly(&p.to_string(), 2, &f).unwrap(), p);
        assert!(parse_poly("0", 2, &f).unwrap().is_zero());
        assert!(parse_poly("x3", 2, &f).is_err());
        assert!(parse_poly("9*x1", 2, &f).is_err());
        // like terms combine; in characteristic 2 they cancel
        assert!(parse_poly("x1 + x1", 2, &f).unwrap().is_zero());
    }
}
