use super::{MeasurementRecord, Observable, ReadoutSetting};
use crate::error::{Error, Result};
use crate::numfmt::exact_decimal;
use crate::scalar::Real;

/// Columnar text: `# sigma <setting> <value>` per record, then one
/// `<setting> <observable> <value>` line per reading.
pub fn write_records<T: Real>(records: &[MeasurementRecord<T>]) -> String {
    let mut out = String::from("# setting observable value\n");
    for r in records {
        out.push_str(&format!("# sigma {} {}\n", r.setting, exact_decimal(r.noise_sigma.as_f64())));
        for (o, v) in &r.values {
            out.push_str(&format!("{} {} {}\n", r.setting, o.name(), exact_decimal(v.as_f64())));
        }
    }
    out
}

fn value<T: Real>(line: usize, s: &str) -> Result<T> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .map(T::lit)
        .ok_or_else(|| Error::Parse { line, message: format!("bad number {s:?}") })
}

/// Inverse of [`write_records`]. Readings are grouped by setting in order of
/// first appearance; a setting without a sigma line gets sigma 0.
pub fn parse_records<T: Real>(text: &str) -> Result<Vec<MeasurementRecord<T>>> {
    let mut records: Vec<MeasurementRecord<T>> = Vec::new();
    let slot = |setting: ReadoutSetting, records: &mut Vec<MeasurementRecord<T>>| -> usize {
        match records.iter().position(|r| r.setting == setting) {
            Some(i) => i,
            None => {
                records.push(MeasurementRecord { setting, values: Vec::new(), noise_sigma: T::zero() });
                records.len() - 1
            }
        }
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| Error::Parse { line, message };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            ["#", "sigma", setting, v] => {
                let k = slot(setting.parse().map_err(err)?, &mut records);
                let sigma: T = value(line, v)?;
                if sigma < T::zero() {
                    return Err(err(format!("negative sigma {v}")));
                }
                records[k].noise_sigma = sigma;
            }
            [first, ..] if first.starts_with('#') => {}
            [setting, observable, v] => {
                let k = slot(setting.parse().map_err(err)?, &mut records);
                let o: Observable = observable.parse().map_err(err)?;
                let v = value(line, v)?;
                records[k].values.push((o, v));
            }
            _ => return Err(err(format!("expected 3 columns, got {raw:?}"))),
        }
    }
    if records.iter().all(|r| r.values.is_empty()) {
        return Err(Error::Parse { line: 0, message: "no readings".into() });
    }
    records.retain(|r| !r.values.is_empty());
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstate::DensityMatrix4;
    use crate::tomography::{reconstruct, simulate_all};

    #[test]
    fn round_trip_preserves_reconstruction() {
        let rho = DensityMatrix4::diagonal([0.4, 0.1, 0.2, 0.3]).unwrap();
        let recs = simulate_all(&rho, 0.03, 42).unwrap();
        let text = write_records(&recs);
        assert_eq!(text.lines().count(), 1 + 9 * 7);
        assert!(text.contains("# sigma x90:y90 0.0300000000000\n"));
        let back: Vec<MeasurementRecord<f64>> = parse_records(&text).unwrap();
        assert_eq!(back, recs);
        assert_eq!(reconstruct(&back).unwrap(), reconstruct(&recs).unwrap());
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            parse_records::<f64>("none:none P_CC 1\nnone:none P_XX 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_records::<f64>("none:none P_CC").is_err());
        assert!(parse_records::<f64>("z90:none P_CC 1").is_err());
        assert!(parse_records::<f64>("# nothing\n").is_err());
    }
}
