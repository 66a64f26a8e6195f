import numpy as np
import pytest

from numrad.errors import MatrixFormatError
from numrad.matrixio import format_matrix, parse_matrix, read_matrix, write_matrix


def test_parse_basic():
    m = parse_matrix("2\n1,0 0,2.5\n-1,-1 3\n")
    np.testing.assert_array_equal(m, [[1, 2.5j], [-1 - 1j, 3]])


def test_roundtrip(tmp_path, rng):
    m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    path = tmp_path / "m.txt"
    write_matrix(path, m)
    np.testing.assert_array_equal(read_matrix(path), m)
    assert format_matrix(m).splitlines()[0] == "3"


@pytest.mark.parametrize(
    "text",
    ["", "x\n", "2\n1,0 0,0\n", "2\n1,0 0,0\n0,0\n", "1\n1,2,3\n", "1\nabc\n", "0\n"],
)
def test_bad_files(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)
