"""
No ground state when the nonlinearity attracts
==============================================

A family of fixed-mass states whose energy runs off to minus infinity.
The state at index n is a multiple of the Green's function at spectral
parameter n, scaled to carry mass mu.
"""
from cnls2d import escape_sequence_energy, escape_sequence_functional_energy, green_l2_pairing, make_params
from cnls2d.solve import escape_sequence_charge

p = make_params(1.0, -1.0)
mu = 1.0
print(f"{'n':>5} {'mass':>8} {'E (closed)':>14} {'E (functional)':>16}")
for k in range(0, 13, 2):
    n = 2**k
    q = escape_sequence_charge(mu, n)
    mass = q * q * green_l2_pairing(n, n).l2_inner
    print(f"{n:5d} {mass:8.5f} {escape_sequence_energy(p, mu, n):14.5g} "
          f"{escape_sequence_functional_energy(p, mu, n):16.5g}")
