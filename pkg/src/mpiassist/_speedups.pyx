# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: the C lexer and token-LCS length.

Semantics must match the pure-Python fallbacks in cst._pure_lex and
metrics._pure_lcs_len exactly; tests cross-check the two.
"""

KEYWORDS = frozenset(
    """auto break case char const continue default do double else enum extern
    float for goto if inline int long register restrict return short signed
    sizeof static struct switch typedef union unsigned void volatile while
    _Bool _Complex _Imaginary""".split()
)

_PUNCT3 = ("<<=", ">>=", "...")
_PUNCT2 = frozenset((
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "##",
))


def lex(str text):
    cdef Py_ssize_t i = 0, j, k, back, nl, n = len(text)
    cdef Py_ssize_t line = 1, col = 1
    cdef Py_ssize_t tline, tcol, toff
    cdef bint bol = True
    cdef Py_UCS4 ch, c, quote
    cdef str lexeme, kind, span
    tokens = []
    trivia = []
    pending = []

    while i < n:
        ch = text[i]
        if ch == u" " or ch == u"\t" or ch == u"\r" or ch == u"\n" or ch == u"\v" or ch == u"\f":
            pending.append(text[i])
            if ch == u"\n":
                bol = True
                line += 1
                col = 1
            else:
                col += 1
            i += 1
            continue
        if ch == u"/" and i + 1 < n and text[i + 1] == u"/":
            j = text.find("\n", i)
            if j < 0:
                j = n
            span = text[i:j]
            pending.append(span)
            col += j - i  # line comments contain no newline
            i = j
            continue
        if ch == u"/" and i + 1 < n and text[i + 1] == u"*":
            j = text.find("*/", i + 2)
            j = n if j < 0 else j + 2
            span = text[i:j]
            pending.append(span)
            nl = span.count("\n")
            if nl:
                line += nl
                col = len(span) - span.rfind("\n")
            else:
                col += len(span)
            i = j
            continue
        tline, tcol, toff = line, col, i
        if ch == u"#" and bol:
            j = i
            while j < n:
                k = text.find("\n", j)
                if k < 0:
                    j = n
                    break
                back = k - 1
                while back >= j and (text[back] == u" " or text[back] == u"\t" or text[back] == u"\r"):
                    back -= 1
                if back >= i and text[back] == u"\\":
                    j = k + 1
                    continue
                j = k
                break
            lexeme = text[i:j]
            tokens.append(("preprocessor", lexeme, tline, tcol, toff))
            trivia.append("".join(pending))
            del pending[:]
            nl = lexeme.count("\n")
            if nl:
                line += nl
                col = len(lexeme) - lexeme.rfind("\n")
            else:
                col += len(lexeme)
            i = j
            bol = True
            continue
        bol = False
        if ch.isalpha() or ch == u"_":
            j = i + 1
            while j < n:
                c = text[j]
                if c.isalnum() or c == u"_":
                    j += 1
                else:
                    break
            lexeme = text[i:j]
            kind = "keyword" if lexeme in KEYWORDS else "identifier"
        elif ch.isdigit() or (ch == u"." and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n:
                c = text[j]
                if c.isalnum() or c == u"." or c == u"_":
                    j += 1
                elif (c == u"+" or c == u"-") and (
                    text[j - 1] == u"e" or text[j - 1] == u"E"
                    or text[j - 1] == u"p" or text[j - 1] == u"P"
                ):
                    j += 1
                else:
                    break
            lexeme = text[i:j]
            kind = "literal"
        elif ch == u'"' or ch == u"'":
            quote = ch
            j = i + 1
            while j < n:
                c = text[j]
                if c == u"\\" and j + 1 < n:
                    j += 2
                    continue
                j += 1
                if c == quote or c == u"\n":
                    break
            lexeme = text[i:j]
            kind = "literal"
        else:
            if i + 3 <= n and text[i:i + 3] in _PUNCT3:
                lexeme = text[i:i + 3]
            elif i + 2 <= n and text[i:i + 2] in _PUNCT2:
                lexeme = text[i:i + 2]
            else:
                lexeme = text[i]
            j = i + len(lexeme)
            kind = "punctuation"
        tokens.append((kind, lexeme, tline, tcol, toff))
        trivia.append("".join(pending))
        del pending[:]
        nl = lexeme.count("\n")
        if nl:
            line += nl
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        i = j
    trivia.append("".join(pending))
    return tokens, trivia


def lcs_len(list a, list b):
    """Length of the longest common subsequence of two int-id lists."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t ia, ib
    cdef long av, up, left, diag
    if na == 0 or nb == 0:
        return 0
    cdef list prev = [0] * (nb + 1)
    cdef list curr = [0] * (nb + 1)
    for ia in range(1, na + 1):
        av = a[ia - 1]
        for ib in range(1, nb + 1):
            if av == <long> b[ib - 1]:
                diag = prev[ib - 1]
                curr[ib] = diag + 1
            else:
                up = prev[ib]
                left = curr[ib - 1]
                curr[ib] = up if up >= left else left
        prev, curr = curr, prev
    return prev[nb]
