import numpy as np
import pytest

from projline.errors import MatrixFormatError
from projline.matrix_io import format_matrix, parse_matrix, read_matrix, write_matrix


def test_parse_with_comments():
    text = "# a comment\n2 3\n1 2 3\n# inline block comment\n4 5.5 -6e-3\n"
    assert np.array_equal(parse_matrix(text), [[1, 2, 3], [4, 5.5, -6e-3]])


def test_round_trip_is_exact(rng, tmp_path):
    m = rng.standard_normal((4, 3))
    m[0, 0] = 0.0
    m[1, 1] = -0.0
    assert np.array_equal(parse_matrix(format_matrix(m)), m)
    path = tmp_path / "m.txt"
    write_matrix(path, m, "note\nsecond line")
    assert path.read_text().startswith("# note\n# second line\n4 3\n")
    assert np.array_equal(read_matrix(path), m)


def test_negative_zero_prints_as_zero():
    assert format_matrix(np.array([[-0.0, 1.0]])) == "1 2\n0 1.0\n"


def test_empty_matrix():
    assert parse_matrix("0 3\n").shape == (0, 3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only comments\n",
        "2\n1 2\n",
        "a b\n",
        "2 2\n1 2\n",
        "1 2\n1 2 3\n",
        "1 2\n1 x\n",
        "1 1\nnan\n",
        "-1 2\n",
    ],
)
def test_malformed_input(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def test_missing_file(tmp_path):
    with pytest.raises(MatrixFormatError):
        read_matrix(tmp_path / "absent.txt")
