"""The infinite monoids, explored through finite windows.

Run:  python demos/infinite_examples.py
"""
from rfmonoid.effective import (
    ab_monoid,
    cm_monoid,
    derivation_check,
    paper_congruence,
    t_n,
    tau,
    theta_n,
    verify_compat,
    window,
)
from rfmonoid.effective.ab import b

AB = ab_monoid()
print("ab window:", window(AB, 1))

# Each finite quotient t_n identifies b_0 and b_1 up to L.
for n in (1, 2, 3):
    th = theta_n(n)
    T = th.target
    print(f"t_{n}: order {T.size}, theta(b0) = {T.name(th(b(0)))}, theta(b1) = {T.name(th(b(1)))}")
print("order of t_n(n) for n = 1..8:", [t_n(n).size for n in range(1, 9)])

print(derivation_check("ab_L_collapse", 3).steps[-1].claim)

# tau governs the shifted classes of the commutative example.
print("tau on 1..16:", [tau(z) for z in range(1, 17)])
CM = cm_monoid()
for m in (1, 2):
    rep = verify_compat(CM, paper_congruence("case2", m), 2 ** (m + 2), 2**m)
    print(f"case2({m}): {rep.pairs} pairs checked, passed={rep.passed}, branches={sorted(rep.branches)}")
