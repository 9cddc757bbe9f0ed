"""Canonical forms and lex-leaders of a few EFPA code matrices."""
from symbreak.breaking import check_double_lex, check_snakelex_c
from symbreak.canonical import canonical_form, classify, is_lex_leader
from symbreak.core import Matrix

codes = [
    Matrix.from_rows([[0, 2, 1, 2, 0, 1], [0, 2, 2, 1, 1, 0],
                      [0, 1, 0, 2, 1, 2], [0, 0, 1, 1, 2, 2]]),
    Matrix.from_rows([[0, 0, 1, 1, 2, 2], [0, 1, 0, 2, 1, 2],
                      [0, 2, 1, 2, 0, 1], [0, 2, 2, 1, 1, 0]]),
    Matrix.from_rows([[0, 0, 1, 1, 2, 2], [0, 1, 0, 2, 1, 2],
                      [0, 1, 2, 0, 2, 1], [0, 2, 2, 1, 1, 0]]),
]
for m in codes:
    print(m.to_text(), end="")
    print(f"doublelex={check_double_lex(m)} snakelex_c={check_snakelex_c(m)} "
          f"leader={is_lex_leader(m)}\n")
print("canonical form of the first:")
print(canonical_form(codes[0]).to_text())
print("classes among the three:", classify(codes).n_classes)
