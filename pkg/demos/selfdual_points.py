"""Sample a self-dual configuration, then look at its certificate and matroid."""
from selfdual.config import lambda_from_plucker, matroid_of, plucker, sample_selfdual, selfdual_certificate
from selfdual.exactnum import rational_str

X, L = sample_selfdual(3, seed=4)
for row in X:
    print("  ".join(f"{rational_str(x):>8}" for x in row))
print("witness:", [rational_str(x) for x in selfdual_certificate(X)])
print("lambda from Plücker vector:", [rational_str(x) for x in lambda_from_plucker(plucker(X))])
M = matroid_of(X)
print(f"matroid: {M.num_bases()} bases, self-dual {M.is_selfdual()}, stable {M.is_stable()}")
