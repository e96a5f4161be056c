mod common;

use common::rng;
use proptest::prelude::*;
use sgk_core::generate::{random_matrix, random_undirected, RandomValue};
use sgk_core::io::{read_edge_list, read_matrix_market, read_matrix_market_as, write_matrix_market, AnyCoo, MmValue};
use sgk_core::{Complex64, CooMatrix, Error, Orientation};
use std::fmt::Write as _;

fn round_trip<T: MmValue + RandomValue>(seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let m = random_matrix(&mut r, 1 + seed as usize % 17, 1 + seed as usize % 11, 0.3, T::random_value).to_tuples();
    let mut text = Vec::new();
    write_matrix_market(&m, &mut text).unwrap();
    let back = read_matrix_market_as::<T, _>(text.as_slice()).unwrap();
    prop_assert_eq!(back, m);
    Ok(())
}

/// Lower triangle of a symmetric matrix in symmetric Matrix Market form.
fn symmetric_file(m: &CooMatrix<i64>) -> String {
    let lower: Vec<_> = m.triples().iter().filter(|t| t.row >= t.col).collect();
    let mut s = String::from("%%MatrixMarket matrix coordinate integer symmetric\n");
    writeln!(s, "{} {} {}", m.nrows(), m.ncols(), lower.len()).unwrap();
    for t in lower {
        writeln!(s, "{} {} {}", t.row + 1, t.col + 1, t.val).unwrap();
    }
    s
}

#[test]
fn default_domains_follow_the_field() {
    let int = "%%MatrixMarket matrix coordinate integer general\n1 1 1\n1 1 -3\n";
    let (_, m) = read_matrix_market(int.as_bytes()).unwrap();
    assert!(matches!(m, AnyCoo::Int64(_)));
    let cx = "%%MatrixMarket matrix coordinate complex general\n1 2 1\n1 2 0.5 -1\n";
    let (_, m) = read_matrix_market(cx.as_bytes()).unwrap();
    let AnyCoo::Complex64(m) = m else { panic!("complex field") };
    assert_eq!(m.get(0, 1), Some(Complex64::new(0.5, -1.0)));
    let real = "%%MatrixMarket matrix coordinate real general\n% comment\n\n2 2 1\n2 2 1e-3\n";
    let (_, m) = read_matrix_market(real.as_bytes()).unwrap();
    assert!(matches!(m, AnyCoo::Float64(_)));
}

#[test]
fn typed_reads_check_the_field() {
    let real = "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 2.5\n";
    assert!(matches!(read_matrix_market_as::<i32, _>(real.as_bytes()), Err(Error::UnsupportedHeader(_))));
    let neg = "%%MatrixMarket matrix coordinate integer general\n1 1 1\n1 1 -2\n";
    assert!(matches!(read_matrix_market_as::<u8, _>(neg.as_bytes()), Err(Error::Parse { line: 3, .. })));
    let pattern = "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n2 1\n";
    assert_eq!(read_matrix_market_as::<bool, _>(pattern.as_bytes()).unwrap().get(1, 0), Some(true));
}

#[test]
fn edge_lists() {
    let m = read_edge_list("0\t1\n1\t2".as_bytes(), false, false).unwrap();
    assert_eq!((m.dims(), m.nvals()), ((3, 3), 2));
    assert_eq!(read_edge_list("0\t1\n1\t2".as_bytes(), false, true).unwrap().nvals(), 4);
    let AnyCoo::Float64(w) = read_edge_list("0\t1\t2.5\n0\t1\t0.5\n".as_bytes(), true, false).unwrap() else {
        panic!("weighted")
    };
    assert_eq!(w.get(0, 1), Some(3.0), "duplicates are summed");
    assert_eq!(read_edge_list("# nothing\n".as_bytes(), false, false).unwrap().dims(), (0, 0));
}

proptest! {
    #[test]
    fn matrix_market_round_trips_int64(seed: u64) { round_trip::<i64>(seed)?; }

    #[test]
    fn matrix_market_round_trips_uint8(seed: u64) { round_trip::<u8>(seed)?; }

    #[test]
    fn matrix_market_round_trips_bool(seed: u64) { round_trip::<bool>(seed)?; }

    #[test]
    fn matrix_market_round_trips_float32(seed: u64) { round_trip::<f32>(seed)?; }

    #[test]
    fn matrix_market_round_trips_complex(seed: u64) { round_trip::<Complex64>(seed)?; }

    #[test]
    fn arbitrary_doubles_round_trip(vals in prop::collection::vec(any::<f64>().prop_filter("nan", |x| !x.is_nan()), 0..30)) {
        let n = vals.len().max(1);
        let m = CooMatrix::from_sorted_triples(
            n,
            n,
            vals.iter().enumerate().map(|(k, &v)| (k, k, v).into()).collect(),
        ).unwrap();
        let mut text = Vec::new();
        write_matrix_market(&m, &mut text).unwrap();
        let (_, back) = read_matrix_market(text.as_slice()).unwrap();
        let AnyCoo::Float64(back) = back else { panic!("real field") };
        for (x, y) in back.triples().iter().zip(m.triples()) {
            prop_assert_eq!(x.val.to_bits(), y.val.to_bits());
        }
    }

    #[test]
    fn symmetric_reads_are_symmetric(seed: u64) {
        let mut r = rng(seed);
        let u = random_undirected(&mut r, 1 + seed as usize % 25, 0.3, i64::random_value).to_tuples();
        let text = symmetric_file(&u);
        let (_, back) = read_matrix_market(text.as_bytes()).unwrap();
        prop_assert!(back.descriptor().symmetric);
        let AnyCoo::Int64(back) = back else { panic!("integer field") };
        prop_assert!(back.to_compressed(Orientation::Csr).is_symmetric().unwrap());
        prop_assert_eq!(back.triples(), u.triples());
    }
}
