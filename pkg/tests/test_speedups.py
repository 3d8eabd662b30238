import random

import pytest

from mpiassist import bench, cst, metrics

speedups = pytest.importorskip("mpiassist._speedups")


def corpus_texts():
    texts = [p.label_code for p in bench.load_programs()]
    texts += [p.serial_code for p in bench.load_programs()]
    return texts


class TestCompiledLexer:
    def test_agrees_on_benchmark_corpus(self):
        for text in corpus_texts():
            assert speedups.lex(text) == cst._pure_lex(text)

    def test_agrees_on_edge_cases(self):
        cases = [
            "",
            "\n",
            "// comment only\n",
            "/* unterminated",
            '#define X \\\n    1\nint x = X;\n',
            'char *s = "a\\"b\\n";\n',
            "int a = 'x';\n",
            "a+++++b;\n",
            "x <<= 1; y >>= 2; z ... w;\n",
            "0x1F 1.5e-3 .5 1e9f 10ull\n",
        ]
        for text in cases:
            assert speedups.lex(text) == cst._pure_lex(text), repr(text)

    def test_agrees_on_random_ascii(self):
        rng = random.Random(42)
        alphabet = "abc ;(){}/*\"'\\\n#_09.+-<>="
        for _ in range(200):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 80)))
            assert speedups.lex(text) == cst._pure_lex(text), repr(text)


class TestCompiledLcs:
    def test_agrees_with_pure(self):
        rng = random.Random(7)
        for _ in range(200):
            a = [rng.randint(0, 5) for _ in range(rng.randint(0, 20))]
            b = [rng.randint(0, 5) for _ in range(rng.randint(0, 20))]
            assert speedups.lcs_len(a, b) == metrics._pure_lcs_len(a, b)

    def test_known_values(self):
        assert speedups.lcs_len([1, 2, 3, 4], [1, 3, 4, 5]) == 3
        assert speedups.lcs_len([], [1]) == 0
        assert speedups.lcs_len([1, 1, 1], [1, 1]) == 2


def test_runtime_selection_reports_backend():
    assert isinstance(cst.USING_COMPILED_LEXER, bool)
