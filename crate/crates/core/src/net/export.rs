use std::io::{self, Write};

/// One point per line, coordinates as unreduced dyadic rationals `k/2^m`
/// (e.g. `3/4` at m = 2), separated by tabs.
pub fn write_dyadic_text<'a, W: Write>(
    out: &mut W,
    m: usize,
    points: impl IntoIterator<Item = &'a [u64]>,
) -> io::Result<()> {
    let denom = 1u128 << m;
    for p in points {
        let line: Vec<String> = p.iter().map(|k| format!("{k}/{denom}")).collect();
        writeln!(out, "{}", line.join("\t"))?;
    }
    Ok(())
}

/// CSV with a header `x1,…,xs` and float coordinates.
pub fn write_csv<'a, W: Write>(
    out: &mut W,
    m: usize,
    s: usize,
    points: impl IntoIterator<Item = &'a [u64]>,
) -> io::Result<()> {
    let header: Vec<String> = (1..=s).map(|j| format!("x{j}")).collect();
    writeln!(out, "{}", header.join(","))?;
    let scale = (m as f64).exp2();
    for p in points {
        let line: Vec<String> = p.iter().map(|&k| format!("{}", k as f64 / scale)).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;
    use crate::net::{generate_points, NetSpec};

    #[test]
    fn faure_block_listing() {
        let m = 2;
        let spec = NetSpec::new(vec![BitMatrix::identity(m).unwrap(), BitMatrix::pascal_p(m).unwrap()]).unwrap();
        let pts = generate_points(&spec).unwrap();
        let mut text = Vec::new();
        write_dyadic_text(&mut text, m, pts.points()).unwrap();
        assert_eq!(String::from_utf8(text).unwrap(), "0/4\t0/4\n2/4\t2/4\n1/4\t3/4\n3/4\t1/4\n");
        let mut csv = Vec::new();
        write_csv(&mut csv, m, 2, pts.points()).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), "x1,x2\n0,0\n0.5,0.5\n0.25,0.75\n0.75,0.25\n");
    }
}
