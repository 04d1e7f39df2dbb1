#!/usr/bin/env python3
"""Convergence table for the commutator-based intensity extraction.

Runs every preset over halving spacings and prints max interior error per
grid plus the fitted order.  The zero preset lands exactly on machine zero,
which is the designed control for the shared stencil.
"""

import pathlib
import sys

try:
    from diraclab.lattice import PRESET_NAMES, convergence_study, make_preset
except ImportError:
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))
    from diraclab.lattice import PRESET_NAMES, convergence_study, make_preset

SPACINGS = (0.2, 0.1, 0.05)

for name in PRESET_NAMES:
    study = convergence_study(make_preset(name), SPACINGS)
    errs = "  ".join(f"h={h:<5g} err={e:.3e}" for h, e in zip(study.spacings, study.errors))
    order = f"{study.order:.3f}" if isinstance(study.order, float) else study.order
    print(f"{name:<12s} {errs}  order: {order}")
