use egypt::verifier::{compare_bfile, Mismatch};
use egypt::{Error, Sequence, SequenceId};

fn listing(values: &[u64], offset: u64) -> String {
    values.iter().enumerate().map(|(i, v)| format!("{} {v}\n", i as u64 + offset)).collect()
}

fn check(id: SequenceId, text: &str) -> Option<Mismatch> {
    compare_bfile(&Sequence::new(id), text).unwrap()
}

#[test]
fn fixture_files() {
    assert_eq!(check(SequenceId::Evil, include_str!("fixtures/b001969.txt")), None);
    assert_eq!(check(SequenceId::Practical, include_str!("fixtures/b005153.txt")), None);
}

#[test]
fn published_prefixes() {
    let cases: [(SequenceId, &[u64], u64); 6] = [
        (SequenceId::Odious, &[1, 2, 4, 7, 8, 11, 13, 14, 16, 19, 21, 22, 25, 26, 28, 31], 0),
        (
            SequenceId::HardyRamanujan,
            &[1, 2, 4, 6, 8, 12, 16, 24, 30, 32, 36, 48, 60, 64, 72, 96, 120, 128, 144, 180, 192, 210, 216, 240],
            1,
        ),
        (
            SequenceId::JordanPolya,
            &[1, 2, 4, 6, 8, 12, 16, 24, 32, 36, 48, 64, 72, 96, 120, 128, 144, 192, 216, 240, 256, 288],
            1,
        ),
        (SequenceId::Fibbinary, &[0, 1, 2, 4, 5, 8, 9, 10, 16, 17, 18, 20, 21, 32, 33, 34, 36, 37, 40, 41, 42], 0),
        (
            SequenceId::MoserDoubled,
            &[1, 2, 4, 5, 8, 10, 16, 17, 20, 21, 32, 34, 40, 42, 64, 65, 68, 69, 80, 81, 84, 85],
            1,
        ),
        (SequenceId::HalfHeavy, &[1, 2, 4, 8, 12, 16, 24, 32, 40, 48, 56, 64, 80, 96, 112, 128, 144, 160], 1),
    ];
    for (id, values, offset) in cases {
        assert_eq!(check(id, &listing(values, offset)), None, "{id}");
    }
}

#[test]
fn inserted_and_missing_terms() {
    let m = check(SequenceId::Odious, &listing(&[1, 2, 3, 4, 7], 0)).unwrap();
    assert_eq!(m, Mismatch { index: 2, listed: Some(3), enumerated: Some(4) });
    // listing skips 12, so the enumeration disagrees at index 6
    let m = check(SequenceId::Practical, &listing(&[1, 2, 4, 6, 8, 16], 1)).unwrap();
    assert_eq!(m, Mismatch { index: 6, listed: Some(16), enumerated: Some(12) });
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = compare_bfile(&Sequence::new(SequenceId::Evil), "# c\n1 3\n2 five\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    let err = compare_bfile(&Sequence::new(SequenceId::Evil), "2 3\n1 5\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
}
