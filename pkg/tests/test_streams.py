import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitlab.errors import DigitFileError, ResourceLimitError
from digitlab.streams import (
    DigitStream,
    e_digits,
    file_digits,
    pi_digits,
    sqrt_digits,
)

from oracles import e_series_digits, machin_pi_digits, schoolbook_sqrt_digits


class TestPiDigits:
    def test_first_ten(self):
        assert list(pi_digits(10).digits) == [1, 4, 1, 5, 9, 2, 6, 5, 3, 5]

    def test_first_digit(self):
        assert list(pi_digits(1).digits) == [1]

    def test_deterministic(self):
        assert pi_digits(1000).digits == pi_digits(1000).digits

    def test_agrees_with_machin_series(self):
        assert list(pi_digits(2000).digits) == machin_pi_digits(2000)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            pi_digits(1001, cap=1000)

    def test_bad_count(self):
        with pytest.raises(ValueError):
            pi_digits(0)


class TestEDigits:
    def test_first_ten(self):
        assert list(e_digits(10).digits) == [7, 1, 8, 2, 8, 1, 8, 2, 8, 4]

    def test_first_digit(self):
        assert list(e_digits(1).digits) == [7]

    def test_deterministic(self):
        assert e_digits(1000).digits == e_digits(1000).digits

    def test_agrees_with_direct_series(self):
        assert list(e_digits(2000).digits) == e_series_digits(2000)


class TestSqrtDigits:
    def test_sqrt2_first_ten(self):
        assert list(sqrt_digits(2, 10).digits) == [4, 1, 4, 2, 1, 3, 5, 6, 2, 3]

    def test_sqrt2_first_digit(self):
        assert list(sqrt_digits(2, 1).digits) == [4]

    def test_perfect_square_rejected(self):
        with pytest.raises(ValueError):
            sqrt_digits(4, 10)
        with pytest.raises(ValueError):
            sqrt_digits(1, 10)

    def test_agrees_with_schoolbook_method(self):
        assert list(sqrt_digits(2, 1500).digits) == schoolbook_sqrt_digits(2, 1500)
        assert list(sqrt_digits(123, 200).digits) == schoolbook_sqrt_digits(123, 200)

    def test_truncation_inequality(self):
        digits = sqrt_digits(2, 1000).digits
        for n in range(1, 1001):
            a = int("1" + "".join(str(d) for d in digits[:n]))
            assert a * a <= 2 * 10 ** (2 * n) < (a + 1) * (a + 1)


@pytest.mark.parametrize(
    "generator",
    [pi_digits, e_digits, lambda c: sqrt_digits(2, c)],
    ids=["pi", "e", "sqrt2"],
)
def test_prefix_stability(generator):
    long = generator(600).digits
    for n in (1, 17, 100, 599):
        assert generator(n).digits == long[:n]


@settings(max_examples=20, deadline=None)
@given(count=st.integers(1, 300))
def test_digit_range(count):
    for stream in (pi_digits(count), e_digits(count), sqrt_digits(2, count)):
        assert all(0 <= d <= 9 for d in stream.digits)
        assert stream.length == count


class TestDigitStream:
    def test_one_based_access(self):
        stream = pi_digits(5)
        assert stream.digit_at(1) == 1
        assert stream.digit_at(5) == 9
        with pytest.raises(IndexError):
            stream.digit_at(0)
        with pytest.raises(IndexError):
            stream.digit_at(6)

    def test_rejects_out_of_range_digit_values(self):
        with pytest.raises(ValueError):
            DigitStream("bad", bytes([3, 10, 1]))


class TestFileDigits:
    def test_decimal_point_and_skip(self, tmp_path):
        path = tmp_path / "d.txt"
        path.write_text("3.14159")
        stream = file_digits(str(path), skip=1)
        assert list(stream.digits) == [1, 4, 1, 5, 9]

    def test_rand_style_spacing(self, tmp_path):
        path = tmp_path / "rand.txt"
        path.write_text("10 09 73 12\n")
        stream = file_digits(str(path), count=8)
        assert list(stream.digits) == [1, 0, 0, 9, 7, 3, 1, 2]

    def test_illegal_character_offset(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("12a3")
        with pytest.raises(DigitFileError) as err:
            file_digits(str(path))
        assert err.value.offset == 2

    def test_second_decimal_point_rejected(self, tmp_path):
        path = tmp_path / "dots.txt"
        path.write_text("1.2.3")
        with pytest.raises(DigitFileError):
            file_digits(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(DigitFileError):
            file_digits(str(tmp_path / "nope.txt"))

    def test_fewer_digits_than_requested(self, tmp_path):
        path = tmp_path / "short.txt"
        path.write_text("123")
        with pytest.raises(DigitFileError):
            file_digits(str(path), count=5)

    def test_skip_consumes_everything(self, tmp_path):
        path = tmp_path / "short.txt"
        path.write_text("123")
        with pytest.raises(DigitFileError):
            file_digits(str(path), skip=3)

    def test_cap_truncates_unbounded_read(self, tmp_path):
        path = tmp_path / "many.txt"
        path.write_text("1234567890" * 5)
        stream = file_digits(str(path), cap=12)
        assert stream.length == 12
