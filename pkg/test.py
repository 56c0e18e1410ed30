import kaccrystal as kc
from kaccrystal.data.examples import (EMBED_RANK, OPERATOR_LAMBDA, OPERATOR_RANK, embed_lambda, embed_tableau,
                                      operator_element)

print('current version:', kc.__version__)

# Crystal graph of K(λ) for a small rank
g = kc.crystal("2,1", "1,0|0")
print("vertices={} edges={}".format(g.number_of_nodes(), g.number_of_edges()))

# Operators on one vertex of K(4,3,2|3,1,0)
crystal = kc.setup_crystal(kc.Rank(*OPERATOR_RANK), kc.utils.parse_weight(OPERATOR_LAMBDA))
x = operator_element()
for k in crystal.colors:
    print(k, crystal.f(k, x))

# Embedding of a hook tableau, and back
t = embed_tableau()
b = kc.embed(','.join(str(x) for x in EMBED_RANK), t)
print(b.to_dict())
print(kc.extract(kc.Rank(*EMBED_RANK), embed_lambda(), b) == t)

# One instance of the verification suite
report = kc.verify("2,2", "-1,-2|2,1")
print(report.passed)
for check in report.checks:
    print(check.name, check.passed, check.counts)
