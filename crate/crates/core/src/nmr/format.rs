use super::{PulsePrimitive, PulseSequence};
use crate::error::{Error, Result};
use crate::numfmt::exact_decimal;
use crate::scalar::Real;

/// One primitive per line, preceded by a `# label` comment.
pub fn write_sequence<T: Real>(seq: &PulseSequence<T>) -> String {
    let mut out = format!("# {}\n", seq.label());
    for p in seq.primitives() {
        match *p {
            PulsePrimitive::Rotation { target, angle_deg, axis } => {
                out.push_str(&format!(
                    "PULSE {} {}deg {}\n",
                    target.name(),
                    exact_decimal(angle_deg.as_f64()),
                    axis.name()
                ));
            }
            PulsePrimitive::FreeEvolution { duration } => {
                out.push_str(&format!("DELAY {}\n", exact_decimal(duration.as_f64())));
            }
        }
    }
    out
}

fn number<T: Real>(line: usize, s: &str) -> Result<T> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .map(T::lit)
        .ok_or_else(|| Error::Parse { line, message: format!("bad number {s:?}") })
}

/// Inverse of [`write_sequence`]. Blank lines are skipped; the first `#`
/// comment becomes the label.
pub fn parse_sequence<T: Real>(text: &str) -> Result<PulseSequence<T>> {
    let mut label = None;
    let mut primitives = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            label.get_or_insert_with(|| comment.trim().to_string());
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields.as_slice() {
            ["PULSE", target, angle, axis] => {
                let angle = angle
                    .strip_suffix("deg")
                    .ok_or_else(|| err(format!("angle {angle:?} lacks the deg suffix")))?;
                primitives.push(PulsePrimitive::Rotation {
                    target: target.parse().map_err(err)?,
                    angle_deg: number(line, angle)?,
                    axis: axis.parse().map_err(err)?,
                });
            }
            ["DELAY", seconds] => primitives.push(PulsePrimitive::FreeEvolution { duration: number(line, seconds)? }),
            _ => return Err(err(format!("unrecognized line {trimmed:?}"))),
        }
    }
    PulseSequence::new(label.unwrap_or_default(), primitives)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::EntanglementParam;
    use crate::nmr::{compile_entangler, SpinSystem};

    #[test]
    fn entangler_text() {
        let seq = compile_entangler(EntanglementParam::<f64>::maximal(), &SpinSystem::default());
        let text = write_sequence(&seq);
        assert_eq!(
            text,
            "# entangler\nPULSE both 90.0000000000deg x\nDELAY 0.0697350069735007\nPULSE both 90.0000000000deg -x\n"
        );
        assert_eq!(parse_sequence::<f64>(&text).unwrap(), seq);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_sequence::<f64>("PULSE both 90deg x\nPULSE carol 90deg x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        assert!(parse_sequence::<f64>("PULSE both 90 x").is_err());
        assert!(parse_sequence::<f64>("DELAY -1").is_err());
        assert!(parse_sequence::<f64>("# only a comment").is_err());
    }
}
