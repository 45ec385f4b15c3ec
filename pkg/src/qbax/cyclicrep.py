"""Cyclic finite-dimensional representations at q a root of unity.

At q = exp(2 pi i m / N) with gcd(m, N) = 1 and odd N, the Weyl pair and
the q-oscillator algebra admit N-dimensional representations built from
the clock matrix K = diag(q^j) and the cyclic shift V (V e_j = e_{j+1}):

  * Weyl pair:      u = K,  v = V,  u~ = z u^-1     (central u u~ = z)
  * q-oscillator:   k = K,  e = V^-1,  f = B V with B = diag(c + q^(2j-1))
                    (central e f - q k^2 = c)

The oscillator weights B_j are fixed by the exchange relation
f e = e f - (q - q^-1) k k: writing e|j> = |j-1> and f|j> = B_{j+1}|j+1>,
the diagonal of e f - f e is B_{j+1} - B_j which must equal
(q - q^-1) q^(2j), giving B_j = c + q^(2j-1) up to the constant c.  For
odd N the exponents 2j-1 sweep all residues mod N, so the representation
degenerates (f loses invertibility) exactly when c = -q^r for some r;
such c are rejected.

The extended quantum-matrix algebra is represented by pulling back along
the collapse homomorphism onto the oscillator: a = e, b = c = k,
th = k^-1, d = f.  Both eta invariants th.b and th.c then become the
identity matrix.

Everything else in this module is generic numeric evaluation: turning
operator polynomials into matrices on (C^N)^(tensor n_sites), checking
presentation relations as residual norms, assembling the 4N x 4N
exchange-relation residual R12 L13 L23 - L23 L13 R12, transfer-matrix
commutators, and a discrete-Fourier fit of the self-trapping transfer
matrix against its conserved charges.
"""

from __future__ import annotations

import cmath
import math
from functools import reduce

import numpy as np

from .coeff import Coefficient
from .ncpoly import NCPoly, Presentation
from .lmatrices import OpMatrix, qdst_charges, L_qdst

__all__ = [
    "root_of_unity",
    "clock",
    "shift",
    "weyl_rep",
    "qosc_rep",
    "glq2ext_rep",
    "rep_residuals",
    "numeric_poly",
    "numeric_opmatrix",
    "rll_residual_num",
    "monodromy_num",
    "transfer_num",
    "transfer_commutator_num",
    "qdst_charge_fit",
    "spectral_points",
]


def root_of_unity(N: int, m: int = 1) -> complex:
    """q = exp(2 pi i m / N); N must be odd >= 3 and coprime to m."""
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")
    if math.gcd(m, N) != 1:
        raise ValueError(f"m = {m} is not coprime to N = {N}")
    return cmath.exp(2j * math.pi * m / N)


def clock(N: int, q: complex) -> np.ndarray:
    return np.diag(q ** np.arange(N)).astype(complex)


def shift(N: int) -> np.ndarray:
    """V e_j = e_{j+1 mod N}: ones on the subdiagonal (and corner)."""
    V = np.zeros((N, N), dtype=complex)
    for j in range(N):
        V[(j + 1) % N, j] = 1.0
    return V


def weyl_rep(N: int, m: int = 1, z: complex = 1.0) -> dict[str, np.ndarray]:
    """Clock-and-shift Weyl pair with central value u u~ = z."""
    if z == 0:
        raise ValueError("z must be nonzero (u~ = z u^-1 would vanish)")
    q = root_of_unity(N, m)
    u = clock(N, q)
    v = shift(N)
    return {
        "u": u,
        "ut": z * np.linalg.inv(u),
        "v": v,
        "vinv": np.linalg.inv(v),
    }


def qosc_rep(N: int, m: int = 1, c: complex = 2.0 + 0.5j) -> dict[str, np.ndarray]:
    """Cyclic q-oscillator representation with central value e f - q k^2 = c."""
    q = root_of_unity(N, m)
    weights = np.array([c + q ** (2 * j - 1) for j in range(N)], dtype=complex)
    if np.min(np.abs(weights)) < 1e-9:
        raise ValueError(
            f"degenerate central value c = {c}: a raising weight c + q^(2j-1) "
            "vanishes and f is no longer invertible")
    k = clock(N, q)
    V = shift(N)
    return {
        "k": k,
        "kinv": np.linalg.inv(k),
        "e": np.linalg.inv(V),
        "f": np.diag(weights) @ V,
    }


def glq2ext_rep(N: int, m: int = 1, c: complex = 2.0 + 0.5j) -> dict[str, np.ndarray]:
    """Extended quantum-matrix generators through the oscillator collapse."""
    osc = qosc_rep(N, m, c)
    return {
        "a": osc["e"],
        "b": osc["k"],
        "c": osc["k"],
        "th": osc["kinv"],
        "d": osc["f"],
    }


# --------------------------------------------------------------------------
# generic numeric evaluation
# --------------------------------------------------------------------------

def _site_operator(g: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """g acting on tensor factor `site` of n_sites copies (site 0 leftmost)."""
    N = g.shape[0]
    factors = [np.eye(N, dtype=complex)] * n_sites
    factors[site] = g
    return reduce(np.kron, factors)


def numeric_poly(p: NCPoly, rep: dict[str, np.ndarray], n_sites: int,
                 values: dict[str, complex]) -> np.ndarray:
    """Evaluate an operator polynomial on (C^N)^(tensor n_sites).

    Words are products of per-site operators from `rep` (keyed by generator
    name; the same matrices are used at every site); coefficients are
    evaluated at `values`.  Sites must lie in range(n_sites).
    """
    N = next(iter(rep.values())).shape[0]
    D = N**n_sites
    cache: dict[tuple[int, int], np.ndarray] = {}
    out = np.zeros((D, D), dtype=complex)
    for word, coeff in p.terms.items():
        mat = np.eye(D, dtype=complex)
        for site, gi in word:
            key = (site, gi)
            if key not in cache:
                cache[key] = _site_operator(rep[p.alg.gens[gi]], site, n_sites)
            mat = mat @ cache[key]
        out += complex(coeff.evaluate(values)) * mat
    return out


def numeric_opmatrix(M: OpMatrix, rep: dict[str, np.ndarray], n_sites: int,
                     values: dict[str, complex]) -> np.ndarray:
    """Blockwise numeric form, shape (M.n, M.n, D, D)."""
    N = next(iter(rep.values())).shape[0]
    D = N**n_sites
    out = np.zeros((M.n, M.n, D, D), dtype=complex)
    for i in range(M.n):
        for j in range(M.n):
            out[i, j] = numeric_poly(M[i][j], rep, n_sites, values)
    return out


def rep_residuals(alg: Presentation, rep: dict[str, np.ndarray],
                  q_val: complex) -> dict[str, float]:
    """Max-norm residual of every defining relation (and unit pair) of alg.

    Keys are human-readable: "f.e" for the rule rewriting the word f e, and
    "k.kinv=1" / "kinv.k=1" for unit pairs.
    """
    mats = {name: rep[name] for name in alg.gens}
    values = {"q": q_val, "lam": 1.0, "mu": 1.0}
    out: dict[str, float] = {}
    for (g1, g2), rhs in alg.rules.items():
        lhs_num = mats[alg.gens[g1]] @ mats[alg.gens[g2]]
        rhs_num = np.zeros_like(lhs_num)
        for word, coeff in rhs.items():
            m = np.eye(lhs_num.shape[0], dtype=complex)
            for gi in word:
                m = m @ mats[alg.gens[gi]]
            rhs_num += complex(coeff.evaluate(values)) * m
        out[f"{alg.gens[g1]}.{alg.gens[g2]}"] = float(
            np.max(np.abs(lhs_num - rhs_num)))
    eye = np.eye(next(iter(mats.values())).shape[0], dtype=complex)
    for i, j in alg.unit_pairs:
        gi, gj = alg.gens[i], alg.gens[j]
        out[f"{gi}.{gj}=1"] = float(np.max(np.abs(mats[gi] @ mats[gj] - eye)))
        out[f"{gj}.{gi}=1"] = float(np.max(np.abs(mats[gj] @ mats[gi] - eye)))
    return out


# --------------------------------------------------------------------------
# exchange relation, monodromy, transfer
# --------------------------------------------------------------------------

def _values(q_val: complex, lam: complex) -> dict[str, complex]:
    return {"q": q_val, "lam": lam, "mu": 1.0}


def rll_residual_num(R_builder, L_builder, alg: Presentation,
                     rep: dict[str, np.ndarray], x: complex, y: complex,
                     q_val: complex) -> float:
    """Frobenius norm of R12(x/y) L1(x) L2(y) - L2(y) L1(x) R12(x/y).

    The two auxiliary legs and one quantum leg give a 4N x 4N problem; the
    kernel argument is the ratio of the two evaluation points.
    """
    N = next(iter(rep.values())).shape[0]
    Rm = R_builder(alg)
    R4 = np.array(
        [[complex(Rm[i][j].terms.get((), Coefficient.zero(alg.vars))
                  .evaluate(_values(q_val, x / y))) for j in range(4)]
         for i in range(4)])
    Lx = numeric_opmatrix(L_builder(alg), rep, 1, _values(q_val, x))
    Ly = numeric_opmatrix(L_builder(alg), rep, 1, _values(q_val, y))

    L13 = np.zeros((2, 2, N, 2, 2, N), dtype=complex)
    L23 = np.zeros((2, 2, N, 2, 2, N), dtype=complex)
    for a in range(2):
        for a2 in range(2):
            for b in range(2):
                L13[a, b, :, a2, b, :] = Lx[a, a2]
                L23[b, a, :, b, a2, :] = Ly[a, a2]
    L13 = L13.reshape(4 * N, 4 * N)
    L23 = L23.reshape(4 * N, 4 * N)
    R12 = np.kron(R4, np.eye(N, dtype=complex))
    res = R12 @ L13 @ L23 - L23 @ L13 @ R12
    return float(np.linalg.norm(res))


def monodromy_num(L_builder, alg: Presentation, rep: dict[str, np.ndarray],
                  n_sites: int, lam: complex, q_val: complex) -> np.ndarray:
    """Ordered product L(site n-1) ... L(site 0), shape (2, 2, D, D)."""
    vals = _values(q_val, lam)
    out = None
    for s in range(n_sites - 1, -1, -1):
        Ls = numeric_opmatrix(L_builder(alg, site=s), rep, n_sites, vals)
        out = Ls if out is None else np.einsum("ikab,kjbc->ijac", out, Ls)
    return out


def transfer_num(L_builder, alg: Presentation, rep: dict[str, np.ndarray],
                 n_sites: int, lam: complex, q_val: complex) -> np.ndarray:
    M = monodromy_num(L_builder, alg, rep, n_sites, lam, q_val)
    return M[0, 0] + M[1, 1]


def transfer_commutator_num(L_builder, alg: Presentation,
                            rep: dict[str, np.ndarray], n_sites: int,
                            x: complex, y: complex, q_val: complex) -> float:
    """|| [T(x), T(y)] ||_F / (||T(x)||_F ||T(y)||_F)."""
    Tx = transfer_num(L_builder, alg, rep, n_sites, x, q_val)
    Ty = transfer_num(L_builder, alg, rep, n_sites, y, q_val)
    num = np.linalg.norm(Tx @ Ty - Ty @ Tx)
    return float(num / (np.linalg.norm(Tx) * np.linalg.norm(Ty)))


def qdst_charge_fit(alg: Presentation, rep: dict[str, np.ndarray],
                    n_sites: int, q_val: complex) -> dict[str, float]:
    """Laurent-coefficient fit of the self-trapping transfer matrix.

    T(lam) is a Laurent polynomial of degree at most n_sites in lam; sampling
    it on 2 n_sites + 1 roots of unity and taking the discrete Fourier
    transform recovers the matrix coefficients exactly.  The lam^(-n) one
    must equal the numeric charge Q and the lam^(2-n) one Q H.
    """
    n = n_sites
    M = 2 * n + 1
    samples = [transfer_num(L_qdst, alg, rep, n, cmath.exp(2j * math.pi * j / M),
                            q_val) for j in range(M)]

    def fourier(d: int) -> np.ndarray:
        acc = np.zeros_like(samples[0])
        for j, T in enumerate(samples):
            acc += T * cmath.exp(-2j * math.pi * j * d / M)
        return acc / M

    Q, H = qdst_charges(alg, n)
    vals = _values(q_val, 1.0)
    Qn = numeric_poly(Q, rep, n, vals)
    QHn = numeric_poly(Q * H, rep, n, vals)
    return {
        "lam^-n vs Q": float(np.linalg.norm(fourier(-n) - Qn)),
        "lam^(2-n) vs QH": float(np.linalg.norm(fourier(2 - n) - QHn)),
    }


def spectral_points(seed: int, count: int) -> np.ndarray:
    """Seeded sample of evaluation points uniform on the unit circle."""
    rng = np.random.default_rng(seed)
    return np.exp(2j * math.pi * rng.random(count))
