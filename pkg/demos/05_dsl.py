# %% [markdown]
# The .cat language: declare, check, and print back.
#
# The square below is broken on purpose: its two sides compose to
# different arrows.

# %%
from catforge.diagram import check_commutes
from catforge.lang import ParseError, elaborate, parse_catfile, serialize
from catforge.report import emit_report

SOURCE = """\
category Sq {
  objects A B C D
  arrow f : A -> B
  arrow g : B -> D
  arrow h : A -> C
  arrow k : C -> D
  arrow gf : A -> D
  arrow kh : A -> D
  compose g f = gf
  compose k h = kh
}

diagram square over Sq {
  node a : A
  node b : B
  node c : C
  node d : D
  edge f : a -> b
  edge g : b -> d
  edge h : a -> c
  edge k : c -> d
}
"""

ws = elaborate(parse_catfile(SOURCE))
print(emit_report(check_commutes(ws.diagrams["square"]), "text", ws.diagrams["square"], "diagram square"))

# %% Printing is canonical: parse(serialize(x)) == x.
spec = parse_catfile(SOURCE)
print(serialize(spec))
print(parse_catfile(serialize(spec)) == spec)

# %% Syntax errors carry a line and column.
try:
    parse_catfile("category C {\n  objects A\n  arrow f : A B\n}")
except ParseError as e:
    print(e.line, e.column, e)
