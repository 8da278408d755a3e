# -*- coding: utf-8 -*-
"""Loop parameter and entanglement in Temperley-Lieb representations

tlentangle builds projector representations ``U = d |Psi><Psi|`` of the
Temperley-Lieb algebra, Yang-Baxterizes the two-qubit generator and studies
how the loop parameter `d` controls entanglement:

- pure-state concurrence of the projective states
  (:mod:`tlentangle.temperley_lieb`, :mod:`tlentangle.entanglement`)
- the Yang-Baxter braid operator (:mod:`tlentangle.yang_baxter`) and the
  conjugated two-spin Hamiltonian (:mod:`tlentangle.spin_model`)
- thermal entanglement and the critical temperature
  (:mod:`tlentangle.thermal`)
- entanglement sudden death in the closed system
  (:mod:`tlentangle.dynamics`)

The command line interface in :mod:`tlentangle.__main__` writes the data of
the figures as csv and runs the identity checks.

Conventions used throughout the package: matrices are
:class:`numpy.ndarray` of dtype ``complex128`` stored row-major, the product
basis state ``|lambda mu>`` of two ``n``-level sites has the index
``lambda * n + mu``, ``|0>`` is the spin-up state (``S^z = +1/2``), and
``hbar = k_B = 1``.

**Disclaimer**

Copyright (C) 2026  the tlentangle developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, see <https://www.gnu.org/licenses/>.
"""
from tlentangle.version import __version__

__author__ = "the tlentangle developers"
