"""Print every stage of the pipeline for a*.(a*+<-1>b*)* over the integers."""
from derterm.automaton import to_dot
from derterm.derivation import derive, differential
from derterm.derived import derived_term_automaton, derived_terms, standard_derived_term_automaton
from derterm.expr import parse
from derterm.monoid import make_monoid
from derterm.semiring import INTEGER
from derterm.series import denote
from derterm.standard import position_automaton

monoid = make_monoid(["a", "b"])
e = parse("a*.(a*+<-1>b*)*", monoid, INTEGER)
print("expression:", e)
print("\nposition automaton S_E\n" + position_automaton(e, monoid, INTEGER).to_automaton().matrix_text())
print("\nderived terms:", ", ".join(map(str, derived_terms(e, INTEGER))))
t = standard_derived_term_automaton(e, monoid, INTEGER)
print("\nT_E\n" + t.automaton.matrix_text())
d = derived_term_automaton(e, monoid, INTEGER)
print("\nD_E\n" + d.automaton.matrix_text())
print("transfer S_E -> D_E:", d.transfer)
print("\nd(E) =", " + ".join(f"{p.format(monoid)}.({h})" for p, h in differential(e, INTEGER)))
for a in monoid.alphabet:
    print(f"derivation by {a}:", derive(e, a, monoid, INTEGER))
print("\nseries up to length 3:",
      ", ".join(f"{w or 'eps'}:{k}" for w, k in denote(e, 3, monoid, INTEGER).items()))
print("\n" + to_dot(d.automaton))
