import pytest

from mpiassist import cst, mpiedit
from mpiassist.errors import EmbeddedCall

LABEL = """\
#include <mpi.h>
int main(int argc, char **argv)
{
    int rank;
    MPI_Init(&argc, &argv);
    MPI_Comm_rank(MPI_COMM_WORLD, &rank);
    if (rank == 0)
        rank = rank + 1;
    MPI_Finalize();
    return 0;
}
"""


def standardized_unit(text, path="t.c"):
    std = cst.standardize(text)
    return cst.parse_unit(path, std)


class TestInventory:
    def test_core_subset_of_all(self):
        inv = mpiedit.load_inventory()
        assert mpiedit.CORE_NAMES <= inv.all_names
        assert inv.core_names == frozenset(
            ("MPI_Finalize", "MPI_Comm_rank", "MPI_Comm_size", "MPI_Init",
             "MPI_Recv", "MPI_Send", "MPI_Reduce", "MPI_Bcast")
        )

    def test_all_names_prefixed(self):
        inv = mpiedit.load_inventory()
        assert all(n.startswith("MPI_") for n in inv.all_names)


class TestFindCalls:
    def test_statement_call(self):
        src = "int main(int argc, char **argv)\n{\n    int x;\n    MPI_Init(&argc, &argv);\n}\n"
        calls = mpiedit.find_mpi_calls(cst.parse(src))
        assert [(c.name, c.line, c.context) for c in calls] == [
            ("MPI_Init", 4, "statement")
        ]

    def test_embedded_in_condition(self):
        src = "int main()\n{\n    if (MPI_Send(0, 0, 0, 0, 0, 0) != 0)\n        return 1;\n}\n"
        calls = mpiedit.find_mpi_calls(cst.parse(src))
        assert [(c.name, c.context) for c in calls] == [("MPI_Send", "embedded")]

    def test_embedded_in_assignment(self):
        src = "int main()\n{\n    int e;\n    e = MPI_Send(0);\n}\n"
        calls = mpiedit.find_mpi_calls(cst.parse(src))
        assert calls[0].context == "embedded"

    def test_serial_code_empty(self):
        assert mpiedit.find_mpi_calls(cst.parse("int main(){return 0;}")) == []

    def test_macro_argument_not_a_call(self):
        src = "int main()\n{\n    MPI_Comm_rank(MPI_COMM_WORLD, &r);\n}\n"
        calls = mpiedit.find_mpi_calls(cst.parse(src))
        assert [c.name for c in calls] == ["MPI_Comm_rank"]


class TestPrune:
    def test_two_call_program(self):
        unit = standardized_unit(LABEL)
        n_lines = len(unit.text.splitlines())
        result = mpiedit.prune(unit)
        assert len(result.pruned_text.splitlines()) == n_lines - 3
        names = [(c.name) for c in result.removed]
        assert names == ["MPI_Init", "MPI_Comm_rank", "MPI_Finalize"]
        assert result.removed == sorted(result.removed, key=lambda c: c.line)

    def test_no_mpi_identity(self):
        unit = standardized_unit("int main(){return 0;}")
        result = mpiedit.prune(unit)
        assert result.pruned_text == unit.text
        assert result.removed == []

    def test_embedded_call_rejected(self):
        unit = standardized_unit(
            "int main()\n{\n    int e;\n    e = MPI_Send(0);\n    return e;\n}\n"
        )
        with pytest.raises(EmbeddedCall):
            mpiedit.prune(unit)

    def test_pruned_has_no_mpi_pattern(self):
        unit = standardized_unit(LABEL)
        result = mpiedit.prune(unit)
        assert not mpiedit.matches_mpi_pattern(result.pruned_text)

    def test_include_not_pruned(self):
        unit = standardized_unit(LABEL)
        result = mpiedit.prune(unit)
        assert "#include <mpi.h>" in result.pruned_text

    def test_restore_round_trip(self):
        unit = standardized_unit(LABEL)
        result = mpiedit.prune(unit)
        back = mpiedit.restore(result.pruned_text, result.removed, result.removed_lines)
        assert back == unit.text

    def test_prune_matches_find(self):
        unit = standardized_unit(LABEL)
        result = mpiedit.prune(unit)
        found = mpiedit.find_mpi_calls(unit.ast)
        assert [(c.name, c.line) for c in result.removed] == [
            (c.name, c.line) for c in found
        ]


class TestLexicalExtraction:
    def test_single_call(self):
        calls = mpiedit.extract_calls_lexical("MPI_Init(&argc, &argv);")
        assert [(c.name, c.line, c.context) for c in calls] == [
            ("MPI_Init", 1, "statement")
        ]

    def test_string_literal_excluded(self):
        calls = mpiedit.extract_calls_lexical('printf("MPI_Init(x)");')
        assert calls == []

    def test_comment_excluded(self):
        calls = mpiedit.extract_calls_lexical("// MPI_Init(x)\nint a;")
        assert calls == []

    def test_constant_without_paren_ignored(self):
        calls = mpiedit.extract_calls_lexical("comm = MPI_COMM_WORLD;")
        assert calls == []

    def test_broken_code_still_scanned(self):
        calls = mpiedit.extract_calls_lexical("int main( {{{ MPI_Send(x%%;")
        assert [c.name for c in calls] == ["MPI_Send"]

    def test_agreement_with_parser(self):
        std = cst.standardize(LABEL)
        parsed = mpiedit.find_mpi_calls(cst.parse(std))
        lexical = mpiedit.extract_calls_lexical(std)
        assert [(c.name, c.line) for c in parsed] == [
            (c.name, c.line) for c in lexical
        ]
