"""Spectrum description: accumulation columns and the unitality criteria."""

from ck_invariants.epseq import ONE, EpSeq
from ck_invariants.presentation import FiniteMatrix, classify
from ck_invariants.spectrum import (
    accumulation_columns,
    gamma_description,
    is_unital,
    residue_columns,
)


class TestNamedExamples:
    def test_all_ones(self, all_ones):
        assert accumulation_columns(all_ones) == (ONE,)
        sd = gamma_description(all_ones)
        assert sd.unital and not sd.zero_at_infinity

    def test_checkerboard(self, checkerboard):
        cols = accumulation_columns(checkerboard)
        assert set(cols) == {EpSeq([], [0, 1]), EpSeq([], [1, 0])}
        assert gamma_description(checkerboard).unital

    def test_row_finite(self, row_finite):
        sd = gamma_description(row_finite)
        assert sd.accumulation_columns == ()
        assert sd.zero_at_infinity and not sd.unital

    def test_delta_rows_not_unital(self, delta_rows):
        assert not is_unital(delta_rows)

    def test_unitality_product_examples(self, all_ones, checkerboard, row_finite):
        assert is_unital(all_ones)
        assert is_unital(checkerboard)
        assert not is_unital(row_finite)

    def test_finite_matrix_is_unital(self):
        fm = FiniteMatrix(((1,),))
        sd = gamma_description(fm)
        assert sd.unital and sd.accumulation_columns == () and not sd.zero_at_infinity


class TestCorpusInvariants:
    def test_unital_iff_no_zero_accumulation_column(self, small_corpus):
        # gamma_description raises internally if the criteria ever disagree;
        # recompute both sides here as an explicit check.
        for p in small_corpus:
            sd = gamma_description(p)
            assert sd.unital == (not sd.zero_at_infinity)
            assert is_unital(p) == sd.unital

    def test_accumulation_columns_recur(self, small_corpus):
        """Every reported column is realized at least twice within the
        finite certificate window, at every horizon."""
        for p in small_corpus:
            n, period = p.pattern_alignment()
            window = n + 2 * period
            for col in accumulation_columns(p):
                for horizon in (3, window):
                    matches = [
                        j
                        for j in range(window)
                        if p.column(j).values(horizon) == col.values(horizon)
                    ]
                    assert len(matches) >= 2

    def test_row_finite_always_zero_at_infinity(self, small_corpus, row_finite):
        for p in small_corpus + [row_finite]:
            if classify(p).is_row_finite:
                sd = gamma_description(p)
                assert sd.zero_at_infinity and sd.accumulation_columns == ()

    def test_edge_matrix_columns_are_nonzero_residues(self, small_corpus):
        for p in small_corpus:
            if not classify(p).is_edge_matrix:
                continue
            residues = residue_columns(p)
            expected = []
            for col in residues:
                if not col.is_zero() and col not in expected:
                    expected.append(col)
            assert list(accumulation_columns(p)) == expected
