"""DoubleLex posted as pairwise lex constraints cannot see every deduction.

The top-left cell keeps value 1 after propagation, yet no completion uses it.
"""
from symbreak.breaking import post_double_lex
from symbreak.core import Model, VarGrid
from symbreak.search import all_solutions, propagate

grid = VarGrid.from_rows([[{0, 1}, {0, 1}, 1],
                          [{0, 1}, 0, 1],
                          [1, 1, 1]])
model = post_double_lex(Model(grid))
narrowed, failed = propagate(grid, model.constraints)
print("domain of the top-left cell after propagation:", sorted(narrowed[0, 0].values))
for sol in all_solutions(model):
    print(sol.to_text())
