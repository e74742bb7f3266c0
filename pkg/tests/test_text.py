import pytest

from repeatscan.text import Text


def test_basic_properties():
    t = Text.from_str("mississippi")
    assert t.n == 11
    assert t.sigma == 4
    assert t.char(1) == ord("m")
    assert t.char(11) == ord("i")
    assert t.substring(2, 4) == b"issi"


def test_empty():
    t = Text.from_bytes(b"")
    assert t.n == 0
    assert t.sigma == 0


def test_position_bounds():
    t = Text.from_str("abc")
    with pytest.raises(IndexError):
        t.char(0)
    with pytest.raises(IndexError):
        t.char(4)
    with pytest.raises(IndexError):
        t.substring(2, 3)


def test_from_file_chomp(tmp_path):
    p = tmp_path / "x.txt"
    p.write_bytes(b"abc\n")
    assert Text.from_file(p).n == 4
    assert Text.from_file(p, chomp=True).n == 3
