"""Commutator-derived self fields, self potentials and the scalar identities.

Two independent routes produce the matrix-valued self intensities: the
commutator route (kinematic momenta commuted, matched against the
i hbar (e/C) templates) and the substitution route (gradient and time
derivative replaced by i (m C / hbar) alpha_k and (m C / hbar) I acting on
the potential operators).  They must agree entrywise.

The substitution route's curl contraction is evaluated as
eps_jkl alpha_k alpha_l; the printed contraction reuses the free index and
is recorded as corrected in every check this route emits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import PhysicalConstants
from .errors import DomainError
from .matrices import (
    GeneratorKind,
    Representation,
    commutator,
    dirac_generator,
    generators,
    identity,
    pauli,
    sigma_block,
)
from .spinors import require_normalized, spin_coherent_expectation

EPS = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    EPS[_i, _j, _k] = 1.0
    EPS[_i, _k, _j] = -1.0

U1_INDEX_NOTE = "curl contraction read as eps_jkl alpha_k alpha_l (printed form repeats the free index)"


@dataclass(frozen=True)
class KinematicMomenta:
    """Time component m C I and space components m C alpha_j."""

    p0: np.ndarray
    p: tuple


def kinematic_momenta(constants: PhysicalConstants,
                      rep: Representation = Representation.PAULI_DIRAC) -> KinematicMomenta:
    mc = constants.mass * constants.c
    a1, a2, a3, _ = generators(rep)
    return KinematicMomenta(p0=mc * identity(4), p=(mc * a1, mc * a2, mc * a3))


@dataclass(frozen=True)
class SelfFields:
    """Matrix-valued intensities: e[j] and h[k] for axes 1..3 (0-indexed)."""

    e: tuple
    h: tuple
    provenance: str


def self_fields_commutator(constants: PhysicalConstants,
                           rep: Representation = Representation.PAULI_DIRAC) -> SelfFields:
    """Intensities solved from the kinematic-momentum commutators.

    [p_j, p_l] = i hbar (e/C) eps_jlk H_k gives H_k for the cyclic pair
    (j, l); [p_j, p0] = i hbar (e/C) E_j gives E_j (identically zero since
    p0 is proportional to the identity).
    """
    k = constants
    mom = kinematic_momenta(k, rep)
    factor = k.c / (1j * k.hbar * k.charge)
    # cyclic (j, l, k) triples, 0-indexed: eps_jlk = +1 for each
    h_list = [None, None, None]
    for (j, l, kk) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        h_list[kk] = factor * commutator(mom.p[j], mom.p[l])
    e_list = [factor * commutator(mom.p[j], mom.p0) for j in range(3)]
    return SelfFields(e=tuple(e_list), h=tuple(h_list), provenance="commutator")


def self_fields_matrix_maxwell(constants: PhysicalConstants,
                               rep: Representation = Representation.PAULI_DIRAC) -> SelfFields:
    """Intensities from the substitution route.

    grad_k -> i (m C / hbar) alpha_k and (1/C) d/dt -> (m C / hbar) I act on
    the potential operators (m C^2 / -e) alpha_l (vector part) and
    (m C^2 / -e) I (scalar part); the curl and gradient analogues are then
    evaluated literally.
    """
    k = constants
    a = generators(rep)[:3]
    grad_factor = 1j * (k.mass * k.c / k.hbar)
    pot_factor = k.mass * k.c**2 / (-k.charge)
    h_list = []
    for jj in range(3):
        acc = np.zeros((4, 4), dtype=complex)
        for kk in range(3):
            for ll in range(3):
                if EPS[jj, kk, ll] != 0.0:
                    acc = acc + EPS[jj, kk, ll] * grad_factor * a[kk] @ (pot_factor * a[ll])
        h_list.append(acc)
    e_list = []
    for jj in range(3):
        # time-gradient acting on the vector part minus space gradient
        # acting on the scalar part; elementwise scalar products keep the
        # cancellation exact in floating point
        term_t = grad_factor * (pot_factor * a[jj])
        term_g = grad_factor * (a[jj] * pot_factor)
        e_list.append(term_t - term_g)
    return SelfFields(e=tuple(e_list), h=tuple(h_list), provenance="matrix_maxwell")


def expected_self_h(constants: PhysicalConstants, k_axis: int) -> np.ndarray:
    """2 (m^2 C^3 / (e hbar)) Sigma_k: the claimed self intensity."""
    kc = constants
    return 2.0 * kc.mass**2 * kc.c**3 / (kc.charge * kc.hbar) * sigma_block(k_axis)


@dataclass(frozen=True)
class VectorField3:
    """Closed-form 3-vector field with caller-supplied derivatives.

    value(x, y, z, t) -> 3 components; jacobian[k][l] = d_k value_l;
    dt -> time derivative of each component.  All callables broadcast
    over numpy arrays.
    """

    value: Callable
    jacobian: Callable
    dt: Callable


@dataclass(frozen=True)
class ScalarField:
    value: Callable
    gradient: Callable


def zero_vector_field() -> VectorField3:
    def value(x, y, z, t):
        zero = np.zeros_like(np.asarray(x, dtype=float))
        return (zero, zero.copy(), zero.copy())

    def jacobian(x, y, z, t):
        zero = np.zeros_like(np.asarray(x, dtype=float))
        return [[zero.copy() for _ in range(3)] for _ in range(3)]

    def dt(x, y, z, t):
        zero = np.zeros_like(np.asarray(x, dtype=float))
        return (zero, zero.copy(), zero.copy())

    return VectorField3(value=value, jacobian=jacobian, dt=dt)


def zero_scalar_field() -> ScalarField:
    def value(x, y, z, t):
        return np.zeros_like(np.asarray(x, dtype=float))

    def gradient(x, y, z, t):
        zero = np.zeros_like(np.asarray(x, dtype=float))
        return (zero, zero.copy(), zero.copy())

    return ScalarField(value=value, gradient=gradient)


def symmetric_gauge(b0: float) -> VectorField3:
    """A = (-B0 y / 2, B0 x / 2, 0): uniform intensity (0, 0, B0)."""

    def value(x, y, z, t):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return (-0.5 * b0 * y, 0.5 * b0 * x, np.zeros_like(x))

    def jacobian(x, y, z, t):
        zero = np.zeros_like(np.asarray(x, dtype=float))
        half = np.full_like(zero, 0.5 * b0)
        rows = [[zero.copy() for _ in range(3)] for _ in range(3)]
        rows[0][1] = half            # d_x A_y
        rows[1][0] = -half           # d_y A_x
        return rows

    def dt(x, y, z, t):
        zero = np.zeros_like(np.asarray(x, dtype=float))
        return (zero, zero.copy(), zero.copy())

    return VectorField3(value=value, jacobian=jacobian, dt=dt)


def linear_scalar(e0: float) -> ScalarField:
    """phi = -E0 x: uniform static field (E0, 0, 0)."""

    def value(x, y, z, t):
        return -e0 * np.asarray(x, dtype=float)

    def gradient(x, y, z, t):
        zero = np.zeros_like(np.asarray(x, dtype=float))
        return (np.full_like(zero, -e0), zero.copy(), zero.copy())

    return ScalarField(value=value, gradient=gradient)


@dataclass(frozen=True)
class MaxwellFields:
    e: tuple
    h: tuple


def classical_maxwell_reference(a_field: VectorField3, phi_field: ScalarField,
                                point, time, constants: PhysicalConstants) -> MaxwellFields:
    """Textbook intensities H = curl A and E = -(1/C) dA/dt - grad phi.

    point is (x, y, z) scalars or broadcastable arrays.  Used as ground
    truth by the lattice comparisons.
    """
    x, y, z = point
    jac = a_field.jacobian(x, y, z, time)
    h = tuple(
        sum(EPS[jj, kk, ll] * jac[kk][ll] for kk in range(3) for ll in range(3) if EPS[jj, kk, ll])
        for jj in range(3)
    )
    dadt = a_field.dt(x, y, z, time)
    grad = phi_field.gradient(x, y, z, time)
    e = tuple(-dadt[jj] / constants.c - grad[jj] for jj in range(3))
    return MaxwellFields(e=e, h=h)


@dataclass(frozen=True)
class SelfPotentials:
    a: np.ndarray
    phi: float
    imag_magnitude: float
    state_ref: np.ndarray


def self_potentials(psi, constants: PhysicalConstants,
                    rep: Representation = Representation.PAULI_DIRAC) -> SelfPotentials:
    """Expectation potentials (m C^2 / -e) <beta alpha_j> and (m C^2 / -e) <beta>.

    <beta alpha_j> is purely imaginary for any state (the operator is
    anti-Hermitian), so the reported vector components are the real parts
    with the imaginary magnitude recorded alongside.
    """
    psi = require_normalized(psi)
    k = constants
    beta = dirac_generator(GeneratorKind.BETA, rep)
    factor = k.mass * k.c**2 / (-k.charge)
    a_vals = []
    imag_max = 0.0
    for j in (1, 2, 3):
        alpha = dirac_generator(GeneratorKind(j), rep)
        val = factor * complex(psi.conj() @ (beta @ alpha @ psi))
        a_vals.append(val.real)
        imag_max = max(imag_max, abs(val.imag))
    phi_val = factor * complex(psi.conj() @ (beta @ psi))
    imag_max = max(imag_max, abs(phi_val.imag))
    return SelfPotentials(
        a=np.array(a_vals), phi=phi_val.real, imag_magnitude=imag_max, state_ref=psi,
    )


def magnetic_moment_matrices(constants: PhysicalConstants) -> tuple:
    """mu_j = (-e hbar / (2 m C)) sigma_j."""
    k = constants
    factor = -k.charge * k.hbar / (2.0 * k.mass * k.c)
    return tuple(factor * pauli(j) for j in (1, 2, 3))


def spin_matrices(constants: PhysicalConstants) -> tuple:
    """S_j = (hbar / 2) sigma_j."""
    return tuple(0.5 * constants.hbar * pauli(j) for j in (1, 2, 3))


def gyromagnetic_ratio(constants: PhysicalConstants) -> float:
    """mu_j / S_j = -e / (m C), the doubled classical ratio."""
    return -constants.charge / (constants.mass * constants.c)


def rest_energy(theta: float, phi_s: float, constants: PhysicalConstants) -> float:
    """E_0 = -sum_j <mu_j><H_j> evaluated in a spin coherent state.

    The moment and intensity expectations each carry <sigma_j>, so the sum
    collapses to m C^2 independent of the spin direction.
    """
    k = constants
    s = spin_coherent_expectation(theta, phi_s)
    mu = (-k.charge * k.hbar / (2.0 * k.mass * k.c)) * s
    h = (2.0 * k.mass**2 * k.c**3 / (k.charge * k.hbar)) * s
    return float(-(mu @ h))


def anomalous_moment_ratio(constants: PhysicalConstants) -> float:
    """delta_mu / mu = e^2 / (2 pi C hbar) = alpha / (2 pi)."""
    return constants.charge**2 / (2.0 * math.pi * constants.c * constants.hbar)


@dataclass(frozen=True)
class SelfActionResult:
    norm_sq: float
    overlap_sum: complex
    hd_expectation: float
    coupled_value: complex
    reduced_value: complex


def self_action_reduction(psi, state) -> SelfActionResult:
    """Expectation bookkeeping for the self-action identity.

    coupled_value inserts the self potentials into the energy expectation;
    reduced_value is C <alpha_j P_j> + m C^2 <beta>.  For eigenstates both
    equal <H> and the cross sum <alpha_j><beta alpha_j> vanishes.
    """
    from .dynamics import hamiltonian  # local import keeps module layering flat

    psi = require_normalized(psi)
    k = state.constants
    a1, a2, a3, beta = generators(state.rep)
    alphas = (a1, a2, a3)
    mc2 = k.mass * k.c**2
    norm_sq = float(np.real(psi.conj() @ psi))
    beta_exp = complex(psi.conj() @ (beta @ psi))
    alpha_exp = [complex(psi.conj() @ (a @ psi)) for a in alphas]
    beta_alpha_exp = [complex(psi.conj() @ (beta @ a @ psi)) for a in alphas]
    overlap_sum = sum(ae * bae for ae, bae in zip(alpha_exp, beta_alpha_exp))
    coupled = (
        -k.charge * norm_sq * (mc2 / -k.charge) * beta_exp
        + sum(
            k.charge * k.c * ae * (k.mass * k.c / k.charge) * bae
            for ae, bae in zip(alpha_exp, beta_alpha_exp)
        )
        + k.c * sum(state.p[j] * alpha_exp[j] for j in range(3))
    )
    reduced = k.c * sum(state.p[j] * alpha_exp[j] for j in range(3)) + mc2 * beta_exp
    h = hamiltonian(state)
    hd_exp = float(np.real(psi.conj() @ (h @ psi)))
    return SelfActionResult(
        norm_sq=norm_sq,
        overlap_sum=complex(overlap_sum),
        hd_expectation=hd_exp,
        coupled_value=complex(coupled),
        reduced_value=complex(reduced),
    )
