"""Tropical self-dual vectors from a tree, and the failure of the naive octad map."""
from selfdual.exactnum import rational_str
from selfdual.tropical import dressian_member, e_vector, pachter_speyer, selfdual_witness

snowflake = e_vector(2, 6, [(0, 1), (2, 3), (4, 5)])
q = pachter_speyer(snowflake)
print("tree image:", " ".join(rational_str(v) for v in q.as_list()))
print("valuated matroid:", dressian_member(q)[0], " witness:", [rational_str(v) for v in selfdual_witness(q)])

bad = q.as_list()
bad[0] -= 2
ok, why = dressian_member(type(q)(3, 6, bad))
print("after lowering p_123:", ok, why["relation"], [rational_str(v) for v in why["values"]])
