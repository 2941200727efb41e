//! Batch runs over ranges of primes, with CSV input and output.
//!
//! Each prime is an independent task; rayon fans them out and the results
//! are sorted by `p`, so output never depends on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::deviation::{
    classify_digit_sixth, classify_sixth, classify_tenth, Criterion, CriterionVerdict, SignVector,
    SixthReport, TenthReport,
};
use crate::error::{Error, Result};
use crate::modular::{order_mod, primes_up_to};
use crate::render::{decimal6, parse_rational, rational};

/// Which base a sixth-power scan uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Fixed(u64),
    PPlusOne,
    /// `b = 10` restricted to primes where 10 has order `(p−1)/2`, with the
    /// classes ordered as `10^{j−1}H`.
    Digit10,
}

impl BaseSpec {
    pub fn base_for(&self, p: u64) -> u64 {
        match self {
            BaseSpec::Fixed(b) => *b,
            BaseSpec::PPlusOne => p + 1,
            BaseSpec::Digit10 => 10,
        }
    }
}

/// Which primitive root orders the classes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum GeneratorSpec {
    #[default]
    Smallest,
    /// Explicit roots for some primes; the rest use the smallest one.
    Explicit(BTreeMap<u64, u64>),
}

impl GeneratorSpec {
    pub fn root_for(&self, p: u64) -> Option<u64> {
        match self {
            GeneratorSpec::Smallest => None,
            GeneratorSpec::Explicit(map) => map.get(&p).copied(),
        }
    }
}

/// Primitive roots for the sixth-power examples below 500.
pub fn example_primitive_roots() -> GeneratorSpec {
    let pairs = [
        (79, 3),
        (103, 5),
        (139, 2),
        (151, 6),
        (199, 3),
        (271, 6),
        (367, 6),
        (439, 15),
        (463, 3),
        (487, 3),
    ];
    GeneratorSpec::Explicit(pairs.into_iter().collect())
}

/// Types that serialize to one CSV line under a fixed header.
pub trait CsvRecord: Sized {
    const HEADER: &'static [&'static str];
    fn to_record(&self) -> Vec<String>;
    fn from_record(record: &csv::StringRecord) -> Result<Self>;
}

fn field<'a>(record: &'a csv::StringRecord, i: usize, name: &str) -> Result<&'a str> {
    record.get(i).ok_or_else(|| Error::Parse {
        field: name.into(),
        value: String::new(),
    })
}

fn parse<T: std::str::FromStr>(record: &csv::StringRecord, i: usize, name: &str) -> Result<T> {
    let v = field(record, i, name)?;
    v.parse().map_err(|_| Error::Parse {
        field: name.into(),
        value: v.into(),
    })
}

fn parse_rat(record: &csv::StringRecord, i: usize, name: &str) -> Result<BigRational> {
    parse_rational(name, field(record, i, name)?)
}

/// One sixth-power scan result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub p: u64,
    pub g: u64,
    pub b: u64,
    pub c6_sq: BigRational,
    pub c2_sq: BigRational,
    pub h6: BigInt,
    pub h2: BigInt,
    pub verdict: Criterion,
    pub sign: SignVector,
    /// `T_1, T_2, T_3`.
    pub entries: Vec<BigRational>,
    /// `T_j / ΣT`, summing to 1.
    pub normalized: Vec<BigRational>,
}

impl ScanRow {
    pub fn from_report(r: &SixthReport) -> Result<Self> {
        let b =
            r.b.ok_or_else(|| Error::Precondition("scan rows need a plain base".into()))?;
        Ok(ScanRow {
            p: r.p,
            g: r.g,
            b,
            c6_sq: r.verdict.c_sq[0].clone(),
            c2_sq: r.verdict.c2_sq.clone(),
            h6: r.h6.clone(),
            h2: r.h2.clone(),
            verdict: r.verdict.applied,
            sign: r.verdict.sign.clone(),
            entries: r.deviation.entries.clone(),
            normalized: r.deviation.normalized()?,
        })
    }

    /// The verdict object; the main type is all −1 because `ΣT < 0`.
    pub fn criterion_verdict(&self) -> CriterionVerdict {
        CriterionVerdict::new(
            self.verdict,
            self.sign.clone(),
            SignVector::main_type(3),
            vec![self.c6_sq.clone()],
            self.c2_sq.clone(),
        )
    }

    pub fn is_main_type(&self) -> bool {
        self.sign == SignVector::main_type(3)
    }

    /// `h₆⁻/(h₂⁻)³`.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.h6.clone(), &self.h2 * &self.h2 * &self.h2)
    }
}

impl CsvRecord for ScanRow {
    const HEADER: &'static [&'static str] = &[
        "p", "g", "b", "c6_sq", "c2_sq", "h6", "h2", "verdict", "sign", "t1", "t2", "t3", "n1",
        "n2", "n3",
    ];

    fn to_record(&self) -> Vec<String> {
        let mut out = vec![
            self.p.to_string(),
            self.g.to_string(),
            self.b.to_string(),
            rational(&self.c6_sq),
            rational(&self.c2_sq),
            self.h6.to_string(),
            self.h2.to_string(),
            self.verdict.to_string(),
            self.sign.to_csv_field(),
        ];
        out.extend(self.entries.iter().chain(&self.normalized).map(rational));
        out
    }

    fn from_record(r: &csv::StringRecord) -> Result<Self> {
        if r.len() != Self::HEADER.len() {
            return Err(Error::LengthMismatch {
                expected: Self::HEADER.len(),
                actual: r.len(),
            });
        }
        let h = Self::HEADER;
        Ok(ScanRow {
            p: parse(r, 0, h[0])?,
            g: parse(r, 1, h[1])?,
            b: parse(r, 2, h[2])?,
            c6_sq: parse_rat(r, 3, h[3])?,
            c2_sq: parse_rat(r, 4, h[4])?,
            h6: parse(r, 5, h[5])?,
            h2: parse(r, 6, h[6])?,
            verdict: field(r, 7, h[7])?.parse()?,
            sign: SignVector::parse_csv_field(field(r, 8, h[8])?)?,
            entries: (9..12)
                .map(|i| parse_rat(r, i, h[i]))
                .collect::<Result<_>>()?,
            normalized: (12..15)
                .map(|i| parse_rat(r, i, h[i]))
                .collect::<Result<_>>()?,
        })
    }
}

/// One tenth-power scan result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TenthRow {
    pub p: u64,
    pub g: u64,
    pub h10: BigInt,
    pub h2: BigInt,
    pub strict_b: bool,
    pub prob_main: bool,
    pub sign: SignVector,
    pub norm_sq: BigRational,
    pub lower_bound: BigRational,
}

impl TenthRow {
    pub fn from_report(r: &TenthReport) -> Self {
        TenthRow {
            p: r.p,
            g: r.g,
            h10: r.h10.clone(),
            h2: r.h2.clone(),
            strict_b: r.strict_b_applies,
            prob_main: r.probabilistic_main,
            sign: r.actual_sign.clone(),
            norm_sq: r.norm_sq.clone(),
            lower_bound: r.lower_bound.clone(),
        }
    }

    pub fn is_main_type(&self) -> bool {
        self.sign == SignVector::main_type(5)
    }

    pub fn is_false_prediction(&self) -> bool {
        self.prob_main && !self.is_main_type()
    }
}

impl CsvRecord for TenthRow {
    const HEADER: &'static [&'static str] = &[
        "p",
        "g",
        "h10",
        "h2",
        "strict_b",
        "prob_main",
        "sign",
        "norm_sq",
        "lower_bound",
    ];

    fn to_record(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.g.to_string(),
            self.h10.to_string(),
            self.h2.to_string(),
            self.strict_b.to_string(),
            self.prob_main.to_string(),
            self.sign.to_csv_field(),
            rational(&self.norm_sq),
            rational(&self.lower_bound),
        ]
    }

    fn from_record(r: &csv::StringRecord) -> Result<Self> {
        if r.len() != Self::HEADER.len() {
            return Err(Error::LengthMismatch {
                expected: Self::HEADER.len(),
                actual: r.len(),
            });
        }
        let h = Self::HEADER;
        Ok(TenthRow {
            p: parse(r, 0, h[0])?,
            g: parse(r, 1, h[1])?,
            h10: parse(r, 2, h[2])?,
            h2: parse(r, 3, h[3])?,
            strict_b: parse(r, 4, h[4])?,
            prob_main: parse(r, 5, h[5])?,
            sign: SignVector::parse_csv_field(field(r, 6, h[6])?)?,
            norm_sq: parse_rat(r, 7, h[7])?,
            lower_bound: parse_rat(r, 8, h[8])?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TenthScan {
    pub rows: Vec<TenthRow>,
    /// Primes where the heuristic predicted the main type and the sign
    /// vector is something else.
    pub false_prediction_count: usize,
}

/// Population statistics of the `(p+1)`-deviation vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram2Stats {
    pub p_max: u64,
    pub total: usize,
    pub main_count: usize,
    pub main_frac: BigRational,
    /// Among main-type primes, the share where the C2 criterion fires.
    pub c2_given_main_frac: BigRational,
    /// `min h₆⁻/(h₂⁻)³`.
    pub min_ratio: BigRational,
}

impl Diagram2Stats {
    pub fn from_rows(p_max: u64, rows: &[ScanRow]) -> Self {
        let frac = |a: usize, b: usize| {
            if b == 0 {
                BigRational::zero()
            } else {
                BigRational::new(a.into(), b.into())
            }
        };
        let main: Vec<&ScanRow> = rows.iter().filter(|r| r.is_main_type()).collect();
        let c2 = main.iter().filter(|r| r.verdict == Criterion::C2).count();
        Diagram2Stats {
            p_max,
            total: rows.len(),
            main_count: main.len(),
            main_frac: frac(main.len(), rows.len()),
            c2_given_main_frac: frac(c2, main.len()),
            min_ratio: rows
                .iter()
                .map(ScanRow::ratio)
                .min()
                .unwrap_or_else(BigRational::zero),
        }
    }
}

impl fmt::Display for Diagram2Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "primes p ≡ 7 (mod 12), 7 < p ≤ {}: {}",
            self.p_max, self.total
        )?;
        writeln!(
            f,
            "main type:            {} ({})",
            self.main_count,
            decimal6(&self.main_frac)
        )?;
        writeln!(
            f,
            "C2 given main type:   {}",
            decimal6(&self.c2_given_main_frac)
        )?;
        write!(
            f,
            "min h6/h2^3:          {} = {}",
            rational(&self.min_ratio),
            decimal6(&self.min_ratio)
        )
    }
}

impl CsvRecord for Diagram2Stats {
    const HEADER: &'static [&'static str] = &[
        "p_max",
        "total",
        "main_count",
        "main_frac",
        "c2_given_main_frac",
        "min_ratio",
    ];

    fn to_record(&self) -> Vec<String> {
        vec![
            self.p_max.to_string(),
            self.total.to_string(),
            self.main_count.to_string(),
            rational(&self.main_frac),
            rational(&self.c2_given_main_frac),
            rational(&self.min_ratio),
        ]
    }

    fn from_record(r: &csv::StringRecord) -> Result<Self> {
        if r.len() != Self::HEADER.len() {
            return Err(Error::LengthMismatch {
                expected: Self::HEADER.len(),
                actual: r.len(),
            });
        }
        let h = Self::HEADER;
        Ok(Diagram2Stats {
            p_max: parse(r, 0, h[0])?,
            total: parse(r, 1, h[1])?,
            main_count: parse(r, 2, h[2])?,
            main_frac: parse_rat(r, 3, h[3])?,
            c2_given_main_frac: parse_rat(r, 4, h[4])?,
            min_ratio: parse_rat(r, 5, h[5])?,
        })
    }
}

/// Runs `f` on a pool of `jobs` workers, or on rayon's global pool.
fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::OutOfRange("--jobs must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::Precondition(format!("thread pool: {e}"))),
    }
}

fn primes_in(p_min: u64, p_max: u64, residue: u64, modulus: u64, floor: u64) -> Vec<u64> {
    if p_max <= p_min {
        return Vec::new();
    }
    primes_up_to(p_max)
        .into_iter()
        .filter(|&p| p > p_min && p > floor && p % modulus == residue)
        .collect()
}

/// One row per prime `p ≡ 7 (mod 12)` with `p_min < p ≤ p_max`, `p > 7`
/// (for `Digit10`, only those where 10 has order `(p−1)/2`), sorted by `p`.
pub fn scan_sixth(
    p_min: u64,
    p_max: u64,
    base: BaseSpec,
    gens: &GeneratorSpec,
    jobs: Option<usize>,
) -> Result<Vec<ScanRow>> {
    let mut primes = primes_in(p_min, p_max, 7, 12, 7);
    if base == BaseSpec::Digit10 {
        primes.retain(|&p| order_mod(10, p).map(|d| d == (p - 1) / 2).unwrap_or(false));
    }
    let mut rows = with_pool(jobs, || {
        primes
            .par_iter()
            .map(|&p| {
                let report = match base {
                    BaseSpec::Digit10 => classify_digit_sixth(p)?,
                    _ => classify_sixth(p, base.base_for(p), gens.root_for(p))?,
                };
                ScanRow::from_report(&report)
            })
            .collect::<Result<Vec<_>>>()
    })??;
    rows.sort_by_key(|r| r.p);
    Ok(rows)
}

/// Statistics over all `p ≡ 7 (mod 12)`, `7 < p ≤ p_max`, with the smallest
/// primitive root and `b = p + 1`.
pub fn diagram2_stats(p_max: u64, jobs: Option<usize>) -> Result<(Diagram2Stats, Vec<ScanRow>)> {
    if p_max < 7 {
        return Err(Error::OutOfRange(format!(
            "p_max = {p_max} must be at least 7"
        )));
    }
    let rows = scan_sixth(7, p_max, BaseSpec::PPlusOne, &GeneratorSpec::Smallest, jobs)?;
    Ok((Diagram2Stats::from_rows(p_max, &rows), rows))
}

/// Tenth-power analysis of every `p ≡ 11 (mod 20)`, `11 < p ≤ p_max`.
pub fn scan_tenth(p_max: u64, jobs: Option<usize>) -> Result<TenthScan> {
    if p_max < 31 {
        return Err(Error::OutOfRange(format!(
            "p_max = {p_max} must be at least 31"
        )));
    }
    let primes = primes_in(11, p_max, 11, 20, 11);
    let mut rows = with_pool(jobs, || {
        primes
            .par_iter()
            .map(|&p| classify_tenth(p, None).map(|r| TenthRow::from_report(&r)))
            .collect::<Result<Vec<_>>>()
    })??;
    rows.sort_by_key(|r| r.p);
    let false_prediction_count = rows.iter().filter(|r| r.is_false_prediction()).count();
    Ok(TenthScan {
        rows,
        false_prediction_count,
    })
}

/// Writes a header line and one line per row.
pub fn write_csv_to<T: CsvRecord, W: Write>(
    rows: &[T],
    out: W,
) -> std::result::Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(T::HEADER)?;
    for row in rows {
        w.write_record(row.to_record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string<T: CsvRecord>(rows: &[T]) -> String {
    let mut buf = Vec::new();
    write_csv_to(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("CSV output is UTF-8")
}

pub fn write_csv<T: CsvRecord>(rows: &[T], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.into(),
        source,
    })?;
    write_csv_to(rows, file).map_err(|source| Error::Csv {
        path: path.into(),
        source,
    })
}

/// Parses CSV with the exact header of `T`.
pub fn read_csv_from<T: CsvRecord, R: Read>(input: R) -> Result<Vec<T>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(input);
    let mut records = r.records();
    let bad = |e: csv::Error| Error::Parse {
        field: "csv".into(),
        value: e.to_string(),
    };
    let header = records.next().ok_or_else(|| Error::Parse {
        field: "header".into(),
        value: String::new(),
    })?;
    let header = header.map_err(bad)?;
    if header.iter().ne(T::HEADER.iter().copied()) {
        return Err(Error::Parse {
            field: "header".into(),
            value: header.iter().collect::<Vec<_>>().join(","),
        });
    }
    records
        .map(|rec| T::from_record(&rec.map_err(bad)?))
        .collect()
}

pub fn read_csv<T: CsvRecord>(path: &Path) -> Result<Vec<T>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.into(),
        source,
    })?;
    read_csv_from(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_range() {
        let rows =
            scan_sixth(500, 500, BaseSpec::Fixed(2), &GeneratorSpec::Smallest, None).unwrap();
        assert!(rows.is_empty());
        assert_eq!(
            to_csv_string(&rows),
            "p,g,b,c6_sq,c2_sq,h6,h2,verdict,sign,t1,t2,t3,n1,n2,n3\n"
        );
        let none: Vec<TenthRow> = Vec::new();
        assert_eq!(
            to_csv_string(&none),
            "p,g,h10,h2,strict_b,prob_main,sign,norm_sq,lower_bound\n"
        );
    }

    #[test]
    fn round_trips() {
        let rows = scan_sixth(
            7,
            500,
            BaseSpec::PPlusOne,
            &example_primitive_roots(),
            Some(2),
        )
        .unwrap();
        assert_eq!(rows.len(), 23);
        let text = to_csv_string(&rows);
        assert_eq!(read_csv_from::<ScanRow, _>(text.as_bytes()).unwrap(), rows);

        let tenth = scan_tenth(600, None).unwrap();
        let text = to_csv_string(&tenth.rows);
        assert_eq!(
            read_csv_from::<TenthRow, _>(text.as_bytes()).unwrap(),
            tenth.rows
        );

        let (stats, _) = diagram2_stats(600, None).unwrap();
        let text = to_csv_string(std::slice::from_ref(&stats));
        assert_eq!(
            read_csv_from::<Diagram2Stats, _>(text.as_bytes()).unwrap(),
            vec![stats]
        );
    }

    #[test]
    fn rejects_wrong_header() {
        let bad = "p,g\n1,2\n";
        assert!(read_csv_from::<ScanRow, _>(bad.as_bytes()).is_err());
        assert!(read_csv_from::<ScanRow, _>("".as_bytes()).is_err());
    }

    #[test]
    fn worker_count_does_not_matter() {
        let a = scan_sixth(
            7,
            1500,
            BaseSpec::Fixed(2),
            &GeneratorSpec::Smallest,
            Some(1),
        )
        .unwrap();
        let b = scan_sixth(
            7,
            1500,
            BaseSpec::Fixed(2),
            &GeneratorSpec::Smallest,
            Some(3),
        )
        .unwrap();
        assert_eq!(to_csv_string(&a), to_csv_string(&b));
        assert!(scan_sixth(
            7,
            100,
            BaseSpec::Fixed(2),
            &GeneratorSpec::Smallest,
            Some(0)
        )
        .is_err());
    }

    #[test]
    fn rows_are_sound_and_normalized() {
        for row in scan_sixth(7, 2000, BaseSpec::PPlusOne, &GeneratorSpec::Smallest, None).unwrap()
        {
            assert!(row.criterion_verdict().is_sound());
            let s = row
                .normalized
                .iter()
                .fold(BigRational::zero(), |a, x| a + x);
            assert_eq!(s, BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn small_stats() {
        let (stats, rows) = diagram2_stats(1000, None).unwrap();
        assert_eq!(stats.total, rows.len());
        assert!(stats.main_count <= stats.total);
        assert!(stats.min_ratio > BigRational::zero());
        assert!(diagram2_stats(5, None).is_err());
        assert!(scan_tenth(30, None).is_err());
    }
}
