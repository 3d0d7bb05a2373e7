"""Complete seven points of P^3 to a Cayley octad and check that the octad is self-dual."""
import random
from fractions import Fraction

from selfdual.config import matroid_of, selfdual_certificate
from selfdual.exactnum import rational_str
from selfdual.octad import gamma, reconstruct_matrix

rng = random.Random(2)
X7 = [[Fraction(rng.randint(-9, 9)) for _ in range(7)] for _ in range(4)]
Y = reconstruct_matrix(gamma(X7))
for row in Y:
    print("  ".join(f"{rational_str(x):>10}" for x in row))
print("witness:", [rational_str(x) for x in selfdual_certificate(Y)])
print("uniform:", len(matroid_of(Y).nonbases()) == 0)
