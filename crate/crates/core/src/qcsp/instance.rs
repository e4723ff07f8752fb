use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::QcspError;

/// Bays `0..n` from left to right, cranes `0..m` from left to right, and an
/// integer processing time per bay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcspInstance {
    processing: Vec<i64>,
    cranes: usize,
    suffix_max: Vec<i64>,
    suffix_sum: Vec<i64>,
}

impl QcspInstance {
    pub fn new(processing: Vec<i64>, cranes: usize) -> Result<Self, QcspError> {
        let bays = processing.len();
        if bays == 0 {
            return Err(QcspError::NoBays);
        }
        if cranes == 0 {
            return Err(QcspError::NoCranes);
        }
        if cranes > bays {
            return Err(QcspError::TooManyCranes { bays, cranes });
        }
        if let Some(bay) = processing.iter().position(|&p| p < 1) {
            return Err(QcspError::NonPositiveTime { bay });
        }
        let mut suffix_max = vec![0; bays + 1];
        let mut suffix_sum = vec![0; bays + 1];
        for b in (0..bays).rev() {
            suffix_max[b] = suffix_max[b + 1].max(processing[b]);
            suffix_sum[b] = suffix_sum[b + 1] + processing[b];
        }
        Ok(QcspInstance {
            processing,
            cranes,
            suffix_max,
            suffix_sum,
        })
    }

    /// The four-bay, two-crane example with processing times 5, 9, 2, 1.
    pub fn toy() -> Self {
        Self::new(vec![5, 9, 2, 1], 2).expect("toy instance is valid")
    }

    pub fn bays(&self) -> usize {
        self.processing.len()
    }

    pub fn cranes(&self) -> usize {
        self.cranes
    }

    pub fn processing(&self) -> &[i64] {
        &self.processing
    }

    pub fn total_processing(&self) -> i64 {
        self.suffix_sum[0]
    }

    /// `max(p[b..])`, zero for `b == n`.
    pub fn suffix_max(&self, b: usize) -> i64 {
        self.suffix_max[b]
    }

    /// `sum(p[b..])`, zero for `b == n`.
    pub fn suffix_sum(&self, b: usize) -> i64 {
        self.suffix_sum[b]
    }

    /// Processing times drawn uniformly from `30..=100`.
    pub fn generate(bays: usize, cranes: usize, seed: u64) -> Result<Self, QcspError> {
        if cranes > bays {
            return Err(QcspError::TooManyCranes { bays, cranes });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let processing = (0..bays).map(|_| rng.gen_range(30..=100)).collect();
        Self::new(processing, cranes)
    }

    /// Reads `"n m\np_0 ... p_{n-1}\n"`.
    pub fn parse(text: &str) -> Result<Self, QcspError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (header_no, header) = lines.next().ok_or_else(|| QcspError::parse(1, "missing header line"))?;
        let header_no = header_no + 1;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(QcspError::parse(header_no, "expected \"n m\""));
        }
        let bays: usize = parse_token(fields[0], header_no)?;
        let cranes: usize = parse_token(fields[1], header_no)?;
        if cranes > bays {
            return Err(QcspError::TooManyCranes { bays, cranes });
        }
        let (times_no, times) = lines
            .next()
            .ok_or_else(|| QcspError::parse(header_no + 1, "missing processing times"))?;
        let times_no = times_no + 1;
        let processing = times
            .split_whitespace()
            .map(|t| parse_token::<i64>(t, times_no))
            .collect::<Result<Vec<_>, _>>()?;
        if processing.len() != bays {
            return Err(QcspError::parse(
                times_no,
                format!("expected {bays} processing times, found {}", processing.len()),
            ));
        }
        if let Some((extra_no, _)) = lines.next() {
            return Err(QcspError::parse(extra_no + 1, "unexpected trailing data"));
        }
        Self::new(processing, cranes)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.bays(), self.cranes);
        let times: Vec<String> = self.processing.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "{}", times.join(" "));
        out
    }
}

fn parse_token<T: std::str::FromStr>(token: &str, line: usize) -> Result<T, QcspError> {
    token
        .parse()
        .map_err(|_| QcspError::parse(line, format!("not a non-negative integer: {token:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_toy() {
        assert_eq!(QcspInstance::parse("4 2\n5 9 2 1\n").unwrap(), QcspInstance::toy());
    }

    #[test]
    fn rejects_more_cranes_than_bays() {
        assert!(matches!(
            QcspInstance::parse("2 3\n1 1\n"),
            Err(QcspError::TooManyCranes { bays: 2, cranes: 3 })
        ));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match QcspInstance::parse("3 1\n1 x 2\n") {
            Err(QcspError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match QcspInstance::parse("3 1\n1 2\n") {
            Err(QcspError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            QcspInstance::parse("3\n"),
            Err(QcspError::Parse { line: 1, .. })
        ));
        assert!(matches!(QcspInstance::parse(""), Err(QcspError::Parse { .. })));
        assert!(matches!(
            QcspInstance::parse("2 1\n1 0\n"),
            Err(QcspError::NonPositiveTime { bay: 1 })
        ));
    }

    #[test]
    fn suffix_tables() {
        let toy = QcspInstance::toy();
        assert_eq!(
            (0..=4).map(|b| toy.suffix_max(b)).collect::<Vec<_>>(),
            vec![9, 9, 2, 1, 0]
        );
        assert_eq!(
            (0..=4).map(|b| toy.suffix_sum(b)).collect::<Vec<_>>(),
            vec![17, 12, 3, 1, 0]
        );
    }

    #[test]
    fn generator_range_and_determinism() {
        let a = QcspInstance::generate(16, 4, 11).unwrap();
        let b = QcspInstance::generate(16, 4, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.processing().iter().all(|&p| (30..=100).contains(&p)));
        assert!((480..=1600).contains(&a.total_processing()));
        assert!(QcspInstance::generate(3, 4, 0).is_err());
    }

    #[test]
    fn generated_sums_centre_on_expectation() {
        let mean: f64 = (0..400)
            .map(|seed| QcspInstance::generate(16, 4, seed).unwrap().total_processing() as f64)
            .sum::<f64>()
            / 400.0;
        assert!((mean - 1040.0).abs() < 15.0, "{mean}");
    }
}
