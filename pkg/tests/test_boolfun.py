import io
import itertools

import pytest
from hypothesis import given, strategies as st

from qqasim.boolfun import (
    TruthTable,
    all_inputs,
    combine_disjoint,
    from_accepting,
    majority_compose,
    named_function,
    sensitivity,
    table_from_csv,
    table_to_csv,
)


def _permute_table(f: TruthTable, sigma) -> TruthTable:
    """g with g(x) = f(x[sigma[0]], x[sigma[1]], ...), built by reindexing."""
    bits = bytearray(len(f.bits))
    for i, x in enumerate(all_inputs(f.arity)):
        bits[i] = f.evaluate("".join(x[s] for s in sigma))
    return TruthTable(f.arity, bytes(bits))


class TestNamedFunctions:
    def test_equality3_accepting_set(self, f_eq3):
        assert f_eq3.accepting_inputs() == ["000", "111"]

    def test_pair_equality4_accepting_set(self, f_pe4):
        assert f_pe4.accepting_inputs() == ["0000", "0011", "1100", "1111"]

    def test_eval_rows(self, f_eq3, f_pe4):
        assert f_eq3.evaluate("111") == 1
        assert f_eq3.evaluate("010") == 0
        assert f_pe4.evaluate("0011") == 1

    def test_eval_length_mismatch(self, f_eq3):
        with pytest.raises(ValueError):
            f_eq3.evaluate("0101")

    def test_majority_even_rejects_ties(self):
        f = named_function("majority_even", 4)
        assert f.evaluate("1100") == 0
        assert f.evaluate("1101") == 1

    def test_majority_odd(self):
        f = named_function("majority", 3)
        assert f.accepting_inputs() == ["011", "101", "110", "111"]

    def test_constants(self):
        assert named_function("constant0", 2).accepting_inputs() == []
        assert len(named_function("constant1", 2).accepting_inputs()) == 4

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown function"):
            named_function("parity")

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            named_function("majority", 4)
        with pytest.raises(ValueError):
            named_function("majority_even", 3)
        with pytest.raises(ValueError):
            named_function("constant1")


class TestSensitivity:
    def test_equality3(self, f_eq3):
        result = sensitivity(f_eq3)
        assert result.value == 3
        assert result.witness_input == "000"

    def test_pair_equality4(self, f_pe4):
        assert sensitivity(f_pe4).value == 4

    def test_constant_is_insensitive(self):
        assert sensitivity(named_function("constant1", 3)).value == 0

    def test_double_equality_conjunction(self, f_eq3):
        f = combine_disjoint(f_eq3, f_eq3, "and")
        assert sensitivity(f).value == 6

    def test_twelve_variable_majority_composition(self, f_eq3):
        f = majority_compose([f_eq3] * 4, even=True)
        assert sensitivity(f).value == 9

    def test_witness_actually_achieves_value(self, f_pe4):
        result = sensitivity(f_pe4)
        x = result.witness_input
        flips = sum(
            f_pe4.evaluate(x) != f_pe4.evaluate(x[:i] + str(1 - int(x[i])) + x[i + 1:])
            for i in range(f_pe4.arity)
        )
        assert flips == result.value


class TestComplement:
    def test_involution(self, f_pe4):
        assert f_pe4.complement().complement() == f_pe4

    def test_constants_swap(self):
        assert named_function("constant0", 3).complement() == named_function("constant1", 3)

    def test_flipped_row(self, f_eq3):
        assert f_eq3.complement().evaluate("010") == 1

    @given(st.integers(1, 4), st.integers(0, 2**16 - 1))
    def test_sensitivity_invariant(self, arity, seed):
        bits = bytes((seed >> i) & 1 for i in range(1 << arity))
        f = TruthTable(arity, bits)
        assert sensitivity(f.complement()).value == sensitivity(f).value


class TestEquality:
    def test_reflexive(self, f_eq3):
        assert f_eq3 == named_function("equality3")

    def test_symmetric_function_survives_permutation(self, f_eq3):
        for sigma in itertools.permutations(range(3)):
            assert _permute_table(f_eq3, sigma) == f_eq3

    def test_complement_differs(self, f_eq3):
        assert f_eq3 != f_eq3.complement()

    @given(st.permutations(range(4)))
    def test_sensitivity_invariant_under_variable_permutation(self, sigma):
        f = named_function("pair_equality4")
        assert sensitivity(_permute_table(f, sigma)).value == sensitivity(f).value


class TestCombineDisjoint:
    def test_and_of_two_equality3(self, f_eq3):
        f = combine_disjoint(f_eq3, f_eq3, "and")
        assert f.arity == 6
        assert f.accepting_inputs() == ["000000", "000111", "111000", "111111"]

    def test_or_of_two_pair_equality4(self, f_pe4):
        f = combine_disjoint(f_pe4, f_pe4, "or")
        for x in all_inputs(8):
            assert f.evaluate(x) == (f_pe4.evaluate(x[:4]) | f_pe4.evaluate(x[4:]))

    def test_and_with_constant_one_extends(self, f_eq3):
        f = combine_disjoint(f_eq3, named_function("constant1", 2), "and")
        for x in all_inputs(5):
            assert f.evaluate(x) == f_eq3.evaluate(x[:3])

    def test_arity_cap(self):
        big = named_function("constant1", 9)
        with pytest.raises(ValueError, match="exceeds"):
            combine_disjoint(big, big, "and")

    def test_unknown_op(self, f_eq3):
        with pytest.raises(ValueError):
            combine_disjoint(f_eq3, f_eq3, "xor")

    @given(
        st.integers(1, 3),
        st.integers(1, 3),
        st.integers(0, 255),
        st.integers(0, 255),
        st.sampled_from(["and", "or"]),
    )
    def test_pointwise_agreement(self, n1, n2, seed1, seed2, op):
        f1 = TruthTable(n1, bytes((seed1 >> i) & 1 for i in range(1 << n1)))
        f2 = TruthTable(n2, bytes((seed2 >> i) & 1 for i in range(1 << n2)))
        combined = combine_disjoint(f1, f2, op)
        for a in all_inputs(n1):
            for b in all_inputs(n2):
                v1, v2 = f1.evaluate(a), f2.evaluate(b)
                expected = (v1 & v2) if op == "and" else (v1 | v2)
                assert combined.evaluate(a + b) == expected


class TestMajorityCompose:
    def test_four_equality_blocks(self, f_eq3):
        f = majority_compose([f_eq3] * 4, even=True)
        assert f.arity == 12
        for x in all_inputs(12):
            b = sum(f_eq3.evaluate(x[3 * k:3 * k + 3]) for k in range(4))
            assert f.evaluate(x) == (1 if b >= 3 else 0)

    def test_constant_slot_reduces_to_odd_majority(self, f_eq3):
        with_filler = majority_compose(
            [f_eq3, f_eq3, f_eq3, named_function("constant1", 1)], even=True
        )
        odd = majority_compose([f_eq3] * 3, even=False)
        for x in all_inputs(9):
            for pad in "01":
                assert with_filler.evaluate(x + pad) == odd.evaluate(x)

    def test_exact_tie_rejected(self):
        single = named_function("constant1", 1)
        f = majority_compose([single, single.complement()], even=True)
        assert f.accepting_inputs() == []

    def test_parity_validation(self, f_eq3):
        with pytest.raises(ValueError, match="even"):
            majority_compose([f_eq3] * 3, even=True)
        with pytest.raises(ValueError, match="odd"):
            majority_compose([f_eq3] * 4, even=False)


class TestCsv:
    def test_round_trip(self, f_pe4):
        buffer = io.StringIO()
        table_to_csv(f_pe4, buffer)
        assert buffer.getvalue().splitlines()[0] == "input,value"
        assert "0011,1" in buffer.getvalue()
        buffer.seek(0)
        assert table_from_csv(buffer) == f_pe4

    def test_file_round_trip(self, tmp_path, f_eq3):
        path = tmp_path / "eq3.csv"
        table_to_csv(f_eq3, path)
        assert table_from_csv(path) == f_eq3

    def test_rejects_bad_header(self):
        with pytest.raises(ValueError, match="header"):
            table_from_csv(io.StringIO("in,out\n0,1\n"))

    def test_rejects_missing_rows(self):
        with pytest.raises(ValueError, match="rows"):
            table_from_csv(io.StringIO("input,value\n00,1\n01,0\n"))

    def test_rejects_duplicates(self):
        text = "input,value\n0,1\n0,0\n"
        with pytest.raises(ValueError, match="duplicate"):
            table_from_csv(io.StringIO(text))


class TestHex:
    def test_equality3_packs_msb_first(self, f_eq3):
        assert f_eq3.as_hex() == "81"

    def test_width_scales_with_arity(self):
        assert named_function("constant1", 4).as_hex() == "ffff"


def test_from_accepting_matches_named(f_eq3):
    assert from_accepting(3, ["111", "000"]) == f_eq3


def test_table_validation():
    with pytest.raises(ValueError):
        TruthTable(0, b"\x01")
    with pytest.raises(ValueError):
        TruthTable(2, b"\x00\x01")
    with pytest.raises(ValueError):
        TruthTable(1, b"\x00\x02")
