"""Groebner certificates that the non-flat heis3 metrics admit no conforming representation."""

from bornforge.geometry import is_flat
from bornforge.lie import heisenberg3
from bornforge.products import heis3_metric, representation_obstruction

for k in (1, 2, 3):
    h = heis3_metric(k)
    cert = representation_obstruction(heisenberg3(), h)
    print(f"h{k}: flat={is_flat(heisenberg3(), h)} params={cert.n_params} "
          f"equations={cert.equations} unsolvable={cert.unsolvable} basis={list(cert.groebner_basis)[:4]}")
