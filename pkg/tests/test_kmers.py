import io

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cases import BRANCHING_INPUT, BRANCHING_KMERS, BRANCHING_RECORDS, dna, kmers_of
from necktig.errors import EmptySpectrumError, FastaParseError, InvalidParameterError
from necktig.kmers import (
    SeqSet,
    Spectrum,
    check_k,
    decode_kmer,
    encode_kmer,
    extract_spectrum,
    parse_fasta,
    read_fasta,
    write_fasta,
)


def test_parse_fasta_records_and_bases():
    text = "".join(f">r{i}\n{s}\n" for i, s in enumerate(BRANCHING_RECORDS))
    seqs = parse_fasta(text)
    assert len(seqs) == 4
    assert seqs.total_bases == 37


def test_parse_fasta_multiline_lowercase_and_bytes():
    seqs = parse_fasta(b">a desc\nacg\nTTa\n>b\nGG\n")
    assert seqs.sequences == ["ACGTTA", "GG"]


def test_parse_fasta_splits_at_ambiguous_bases():
    seqs = parse_fasta(">a\nACGNNTTAC\n")
    assert seqs.sequences == ["ACG", "TTAC"]


def test_parse_fasta_rejects_sequence_before_header():
    with pytest.raises(FastaParseError) as exc:
        parse_fasta("ACGT\n>a\nAC\n")
    assert exc.value.line == 1


def test_fasta_round_trip(tmp_path):
    path = tmp_path / "x.fa"
    with open(path, "w") as fh:
        write_fasta([("a", "ACGT"), ("b", "TTT")], fh)
    assert read_fasta(str(path)).sequences == ["ACGT", "TTT"]


@pytest.mark.parametrize("k", [1, 32, 0, -3])
def test_check_k_range(k):
    with pytest.raises(InvalidParameterError):
        check_k(k)


def test_pack_order_is_lexicographic():
    words = ["AAA", "AAC", "ACA", "CAA", "TTT"]
    vals = [encode_kmer(w) for w in words]
    assert vals == sorted(vals)
    assert encode_kmer("ACGT") == 0b00011011


@given(st.text(alphabet="ACGT", min_size=1, max_size=31))
def test_encode_decode_round_trip(s):
    assert decode_kmer(encode_kmer(s), len(s)) == s


def test_branching_spectrum_has_21_kmers():
    spec = extract_spectrum(BRANCHING_INPUT, 3)
    assert len(spec) == 21
    assert spec.strings() == BRANCHING_KMERS


def test_four_records_miss_one_kmer():
    spec = extract_spectrum(BRANCHING_RECORDS, 3)
    assert set(BRANCHING_KMERS) - set(spec.strings()) == {"CAA"}


@given(st.lists(dna, min_size=1, max_size=5), st.integers(2, 7))
def test_spectrum_matches_window_oracle(strings, k):
    expected = kmers_of(strings, k)
    if not expected:
        with pytest.raises(EmptySpectrumError):
            extract_spectrum(strings, k)
        return
    spec = extract_spectrum(strings, k)
    assert spec.strings() == sorted(expected)
    assert np.all(np.diff(spec.kmers.astype(np.int64)) > 0) if len(spec) > 1 else True


def test_spectrum_lookup():
    spec = Spectrum.from_strings(["GGA", "ACG", "ACG"])
    assert len(spec) == 2
    assert spec.id_of("ACG") == 0 and spec.id_of("GGA") == 1
    assert "GGA" in spec and "TTT" not in spec
    with pytest.raises(KeyError):
        spec.id_of("TTT")
    assert spec.label(1) == "A"


def test_seqset_from_strings():
    s = SeqSet.from_strings(["AC", "GT"])
    assert s.sequences == ["AC", "GT"]
    buf = io.StringIO()
    write_fasta(s.records, buf)
    assert parse_fasta(buf.getvalue()).sequences == ["AC", "GT"]


def test_long_k_uses_full_64_bits():
    s = "T" * 40
    spec = extract_spectrum([s], 31)
    assert spec.strings() == ["T" * 31]
