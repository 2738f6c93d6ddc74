#!/usr/bin/env python3
# Copyright 2026 The qpe-cost Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Straight-line reference totals for the eleven estimators.

Draws five synthetic parameter sets with a fixed seed, evaluates every method
with plain floating-point arithmetic and writes method_reference.json next to
this file. The C++ suite compares its totals to these bit for bit, so the
operation order below mirrors the closed forms as written, left to right.

    python3 tests/reference/method_reference.py
"""

import ctypes
import ctypes.util
import json
import math
import pathlib
import random

_libm = ctypes.CDLL(ctypes.util.find_library("m"))
_libm.cbrt.restype = ctypes.c_double
_libm.cbrt.argtypes = [ctypes.c_double]

PI = math.pi
LN2 = math.log(2.0)

# Default model configuration.
PLANE_WAVE_MULTIPLIER = 100.0
P_FAIL = 1e-2
X_MAX_CONSTANT = 1.0
TAYLOR_ARGUMENT_BOUND = 1.0
SEGMENT_INFLATION = math.e * LN2
ARITHMETIC_BITS = 32
CI_TOLERANCE = 1e-6
CI_MAX_ITERATIONS = 100

METHODS = [
    "qdrift", "rand_hamiltonian", "taylor_naive", "taylor_on_the_fly",
    "configuration_interaction", "low_depth_trotter", "low_depth_taylor_naive",
    "low_depth_taylor_on_the_fly", "linear_t", "sparsity_low_rank",
    "interaction_picture",
]


def cbrt(x):
    return _libm.cbrt(x)


def clog2(x):
    return 0 if x == 1 else (x - 1).bit_length()


def bits(eps):
    return math.ceil(math.log2(1.0 / eps))


def npow2(n):
    p = 1
    while p < n:
        p *= 2
    return p


# Arithmetic, T gates.
def add(n):
    return 4.0 * n


def mult(n):
    return 21.0 * n * n


def div(n):
    return 14.0 * n * n + 7.0 * n


def cmp(n):
    return 8.0 * n


def mcnot(m):
    if m == 1:
        return 0.0
    if m == 2:
        return 4.0
    return 16.0 * (m - 2)


def rot(eps, kind="rz", ctrl=1):
    b = bits(eps)
    base = 10.0 + 12.0 * b if kind == "su2" else 10.0 + 4.0 * b
    return ctrl * base


def state_rotations(n):
    return 2.0 ** (n + 1) - 2.0


def qrom(L):
    return 4.0 * L - 4.0


def qroam_best(d, M, uncompute):
    best_k, best = 1, None
    k = 1
    while k <= d:
        lookups = float((d + k - 1) // k)
        v = lookups + (k if uncompute else M * (k - 1))
        if best is None or v < best:
            best, best_k = v, k
        k *= 2
    return best


def series_exp(o, n):
    return (o - 1) * mult(n) + (o - 1) * div(n) + o * add(n)


def series_sqrt(o, n):
    return o * (add(n) + div(n))


def series_cordic(o, n):
    return div(n) + (2 * o) * add(n)


def series_order(eps_tay):
    term = 1.0
    for o in range(1, 1001):
        term *= TAYLOR_ARGUMENT_BOUND / o
        if term <= eps_tay:
            return o
    raise ValueError("series order")


def taylor_K(x):
    return max(1, int(math.ceil(-1.0 + 2.0 * math.log(x) / math.log(math.log(x) + 1.0))))


def dyson_K(x):
    return max(1, int(math.ceil(-1.0 + 2.0 * math.log(x) / (math.log(math.log(x)) + 1.0))))


# Sub-circuits returning (T gates, rotations).
def uniform(L, eps):
    return 8.0 * clog2(L) + 2.0 * rot(eps), 2.0


def uniform_log2(log2_L, eps):
    return 8.0 * math.ceil(log2_L) + 2.0 * rot(eps), 2.0


def fft(N, eps):
    lg = clog2(N)
    rotations = float(N // 2) * (lg - 1)
    t = rotations * rot(eps) if rotations > 0 else 0.0
    return t + 2.0 * (float(N // 2) * lg), rotations


def kickback(n, eps):
    return 2.0 * (add(n) + mult(n) + cmp(n)) + rot(eps, ctrl=2), 1.0


def orbital(d, n, o):
    return d * (3.0 * add(n) + 3.0 * mult(n) + 2.0 * add(n) + mult(n) + series_exp(o, n) + 3.0 * mult(n))


def laplacian(d, n):
    return d * (3.0 * (4.0 * add(n) + mult(n) + div(n)) + 2.0 * add(n) + mult(n))


def samples(q, q_lap, n, o, J):
    coulomb = 2.0 * mult(n) + add(n) + series_sqrt(o, n)
    xi = 3.0 * add(n)
    two_body = 4.0 * q + coulomb + 4.0 * mult(n) + xi
    kinetic = q + q_lap + mult(n)
    external = 2.0 * q
    if J > 0:
        external = external + J * coulomb + J * mult(n) + J * xi
        if J > 1:
            external = external + (J - 1.0) * add(n)
    return two_body, kinetic, external


def walk(r, K, prep, sel, eps):
    crz = rot(eps, ctrl=2)
    t = (K - 1.0) * crz + 2.0 * K * prep[0] + K * sel[0] + 2.0 * mcnot(K // 2 + 1)
    rotations = (K - 1.0) + 2.0 * K * prep[1] + K * sel[1]
    return r * (3.0 * t), r * (3.0 * rotations), r


# Plane-wave quantities.
def icbrt(n):
    r = int(cbrt(float(n)))
    while r * r * r > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def nu_sum(N):
    m = icbrt(N) // 2
    s = 0.0
    for x in range(m + 1):
        for y in range(m + 1):
            for z in range(m + 1):
                q = x * x + y * y + z * z
                if q:
                    s += ((2 if x else 1) * (2 if y else 1) * (2 if z else 1)) / q
    return s


def plane_waves(p):
    n_pw = int(math.floor(PLANE_WAVE_MULTIPLIER * p["N"] + 0.5))
    nu = nu_sum(n_pw)
    eta = p["eta"]
    c = cbrt(p["Omega"])
    nu_max = cbrt(float(n_pw))
    maxV = eta * eta / (2.0 * PI * c) * nu
    maxU = eta * eta / (PI * c) * nu
    maxT = 2.0 * PI * PI * eta / (c * c) * nu_max * nu_max
    n = float(n_pw)
    lam = (n * (n - 1.0) * nu / (16.0 * PI * c) + n * (2.0 * eta + 1.0) * nu / (8.0 * PI * c)
           + 2.0 * PI * PI * math.pow(n, 5.0 / 3.0) / (c * c))
    lead = (2.0 * eta + 1.0) / (8.0 * PI * c) - PI * PI / (2.0 * n * c * c)
    other = max(1.0 / (8.0 * PI * c), 6.0 * PI * PI / (cbrt(n) * c * c))
    lam_prime = 2.0 * math.pow(8.0 * n, 3.0) * (lead if lead >= other else other)
    h = p.get("H_norm_bound", maxT + maxU + maxV)
    return dict(n=n_pw, maxT=maxT, maxU=maxU, maxV=maxV, lam=lam, lam_prime=lam_prime, h=h)


def amp_bits(lam, dE, h):
    return math.ceil(math.log2(2.0 * math.sqrt(2.0) * lam / dE) + math.log2(1.0 + dE * dE / (8.0 * lam * lam))
                     - math.log2(1.0 - h / lam))


# Estimators: (params, allocation, eps_ss) -> (total, rotations, r).
def qdrift(p, a, eps):
    pf = P_FAIL + 2.0 * a["eps_hs"]
    lam = p["lambda_value"]
    n = float(math.ceil(133.0 * lam * lam / (a["eps_pea"] * a["eps_pea"] * pf * pf * pf)))
    return n * (2.0 * rot(eps)), n * 2.0, n


def rand_hamiltonian(p, a, eps):
    pf = P_FAIL + 2.0 * a["eps_hs"]
    G = p["Gamma"]
    n = float(math.ceil(69.0 * G * G * math.pow(p["Lambda_max"], 1.5) / (math.pow(a["eps_pea"], 1.5) * pf * pf)))
    return n * (2.0 * rot(eps)), n * 2.0, n


def majorana_select(N):
    return 4.0 * (4.0 * N + N * mcnot(clog2(N))), 0.0


def taylor_naive(p, a, eps):
    t = 4.7 / a["eps_pea"]
    r = float(math.ceil(p["lambda_value"] * t / LN2))
    K = taylor_K(2.0 * r / a["eps_hs"])
    n_rot = state_rotations(clog2(p["N"] ** 4))
    return walk(r, K, (n_rot * rot(eps, "su2"), n_rot), majorana_select(p["N"]), eps)


def taylor_on_the_fly(p, a, eps):
    N, J, d = p["N"], p["J"], p["basis_contraction_d"]
    phi, phi_p = p["phi_max"], p["phi_prime_max"]
    t = 4.7 / a["eps_pea"]
    x = p["x_max"] if "x_max" in p else X_MAX_CONSTANT * math.log(N * t / a["eps_h"])
    lam = p["Gamma"] * 64.0 * math.pow(phi, 4) * math.pow(x, 5)
    r = float(math.ceil(lam * t / LN2))
    K = taylor_K(2.0 * r / a["eps_hs"])
    log2_mu = 6.0 * math.log2((2.0 * r * 6.0 * K / a["eps_h"]) * (4.0 * phi_p + phi / x)
                              * math.pow(phi, 3) * math.pow(x, 6))
    n = max(1, int(math.ceil(math.ceil(log2_mu) / 3.0)))
    log2_M = math.log2(6.0 * K * r * lam / a["eps_h"])
    o = series_order(a["eps_tay"])
    two, kin, ext = samples(N * orbital(d, n, o), N * laplacian(d, n), n, o, J)
    kb = kickback(n, eps)
    un = uniform_log2(math.log2(p["Gamma"]) + log2_mu + log2_M, eps)
    prep = (2.0 * (two + kin + ext) + kb[0] + un[0], kb[1] + un[1])
    return walk(r, K, prep, majorana_select(N), eps)


def configuration_interaction(p, a, eps):
    N, eta, J, d = p["N"], p["eta"], p["J"], p["basis_contraction_d"]
    x, phi, phi_p = p["x_max"], p["phi_max"], p["phi_prime_max"]
    alpha, g2 = p["alpha_ci"], p["gamma2_ci"]
    t = 4.7 / a["eps_pea"]
    z = 0.0
    for q in p["charges"]:
        z += q
    e, v = float(eta), float(N - eta)
    gamma = e * (e - 1.0) / 2.0 * (v * (v - 1.0) / 2.0) + e * v + 1.0

    def mmz(delta):
        R = x * (1.0 + max(0.0, math.log(phi * phi * math.pow(x, 3) / delta)) / alpha)
        return max(8.0 * g2 * phi * phi * R, 8.0 * z * phi * phi * R * R, 64.0 * math.pow(phi, 4) * math.pow(R, 5))

    r = float(math.ceil(2.0 * gamma * t * mmz(a["eps_h"]) / LN2))
    for _ in range(CI_MAX_ITERATIONS):
        K = taylor_K(2.0 * r / a["eps_hs"])
        nxt = float(math.ceil(2.0 * gamma * t * mmz(a["eps_h"] / (6.0 * K * r)) / LN2))
        done = abs(nxt - r) <= CI_TOLERANCE * nxt
        r = nxt
        if done:
            break
    else:
        raise ValueError("CI did not settle")
    K = taylor_K(2.0 * r / a["eps_hs"])
    delta = a["eps_h"] / (6.0 * K * r)
    log2_mu = 6.0 * math.log2((2.0 / delta) * (4.0 * phi_p + phi / x) * math.pow(phi, 3) * math.pow(x, 6))
    n = max(1, int(math.ceil(math.ceil(log2_mu) / 3.0)))
    log2_M = math.log2(mmz(delta)) - math.log2(delta) + math.log2(gamma)
    log2_L = 1.0 + log2_M + math.log2(gamma)
    o = series_order(a["eps_tay"])
    two, kin, ext = samples(orbital(d, n, o), laplacian(d, n), n, o, J)
    q_val = 2.0 * two + (kin + ext) + add(n)
    w = max(1, clog2(N))
    sort_pass = 2.0 * (add(w) + (eta - 1.0) * (3.0 * cmp(w) + 4.0 * w))
    q_col = 2.0 * sort_pass + (2.0 * eta) * cmp(w)
    kb = kickback(n, eps)
    return walk(r, K, uniform_log2(log2_L + log2_mu, eps), (q_col + 2.0 * q_val + kb[0], kb[1]), eps)


def low_depth_trotter(p, a, eps):
    pw = plane_waves(p)
    N = float(pw["n"])
    t = 4.7 / a["eps_pea"]
    T, UV = pw["maxT"], pw["maxU"] + pw["maxV"]
    r = max(1.0, math.ceil(math.pow(t, 1.5) * math.sqrt(2.0 * (T * T * UV + T * UV * UV) / a["eps_hs"])))
    f = fft(npow2(pw["n"]), eps)
    pairs = 8.0 * N * (8.0 * N - 1.0) / 2.0
    seg_t = 2.0 * f[0] + 16.0 * N * rot(eps) + pairs * rot(eps, ctrl=2)
    seg_r = 2.0 * f[1] + 16.0 * N + pairs
    return r * seg_t, r * seg_r, r


def low_depth_taylor_naive(p, a, eps):
    pw = plane_waves(p)
    N = float(pw["n"])
    lg = clog2(pw["n"])
    t = 4.7 / a["eps_pea"]
    r = float(math.ceil(pw["lam"] * t / LN2))
    K = taylor_K(2.0 * r / a["eps_hs"])
    mu = amp_bits(pw["lam"], a["eps_pea"], pw["h"])
    prep = (6.0 * N + 40.0 * lg + 16.0 * bits(eps) + 10.0 * mu, 4.0)
    return walk(r, K, prep, (12.0 * N + 8.0 * lg, 0.0), eps)


def low_depth_taylor_on_the_fly(p, a, eps):
    pw = plane_waves(p)
    N = float(pw["n"])
    lg = clog2(pw["n"])
    J = p["J"]
    t = 4.7 / a["eps_pea"]
    lam = pw["lam_prime"]
    r = float(math.ceil(lam * t / LN2))
    K = taylor_K(2.0 * r / a["eps_hs"])
    terms = 2.0 * math.pow(8.0 * N, 3)
    zeta = a["eps_h"] / (terms * r)
    M = lam / terms / zeta
    n = max(1, int(math.ceil(math.log2(N) / 3.0)))
    o = series_order(a["eps_tay"])
    diagonal = math.ceil(J * (35.0 * o / 2.0 + 63.0 + 2.0 * o / lg) * lg * lg)
    off = (3.0 * mult(n) + 3.0 * add(n) + 3.0 * mult(n) + 2.0 * add(n) + series_cordic(o, n) + mult(n)
           + div(n))
    sample = diagonal + off + 2.0 * mult(n)
    kb = kickback(n, eps)
    un = uniform_log2(math.log2(terms) + math.log2(M), eps)
    prep = (2.0 * sample + kb[0] + un[0], kb[1] + un[1])
    return walk(r, K, prep, (12.0 * N + 8.0 * lg, 0.0), eps)


def linear_t(p, a, eps):
    pw = plane_waves(p)
    N = float(pw["n"])
    lg = clog2(pw["n"])
    b = bits(eps)
    t = 4.7 / a["eps_pea"]
    r = float(math.ceil(pw["lam"] * t / LN2 * SEGMENT_INFLATION))
    mu = amp_bits(pw["lam"], a["eps_pea"], pw["h"])
    select = 12.0 * N + 8.0 * lg - 14.0
    prep = (6.0 * N + 12.0 * lg + 10.0 * mu + 16.0 * b) + (8.0 * lg + 8.0 * b) + 4.0 * (lg - 1.0) + 32.0 * lg
    if lg > 1:
        prep += add(lg - 1)
    step = 2.0 * prep + select + mcnot(2 * lg + 3)
    return r * step, r * 12.0, r


def sparsity_low_rank(p, a, eps):
    N, L = p["N"], p["L_rank"]
    lg, h, lL = clog2(N), clog2(N // 2), clog2(L)
    b = bits(eps)
    lam = p["lambda_value"]
    t = 4.7 / a["eps_pea"]
    r = float(math.ceil(lam * t / LN2 * SEGMENT_INFLATION))
    d = ((2 * L + 1) * N * (N + 2) + 7) // 8
    mu = math.ceil(math.log2(2.0 * math.sqrt(2.0) * lam / a["eps_pea"]))
    M = clog2(N * N) + mu
    toffolis = qroam_best(d, M, False) + qroam_best(d, M, True)
    pair = (6.0 * uniform(N // 2, eps)[0] + 3.0 * rot(eps) + 3.0 * cmp(h) + 2.0 * mcnot(2 * h))
    extras = ((4.0 * L + 4.0 * mu + 14.0 * lL + 8.0 * b) + 2.0 * pair + 4.0 * mu + 4.0 * (mu + lL + 4.0 * h)
              + 8.0 * h + 8.0 * h * h)
    step = 4.0 * toffolis + (4.0 * N + 4.0 * lg) + 2.0 * extras
    return r * step, r * (2.0 * (2.0 + 2.0 * (6.0 * 2.0 + 3.0))), r


def interaction_picture(p, a, eps):
    pw = plane_waves(p)
    N = pw["n"]
    half = N // 2
    lg = clog2(N)
    t = 4.7 / a["eps_pea"]
    T = p["norm_T"] if "norm_T" in p else pw["maxT"]
    H0 = p["norm_U"] + p["norm_V"] if ("norm_U" in p and "norm_V" in p) else pw["maxU"] + pw["maxV"]
    r = float(math.ceil(t * T / LN2))
    K = dyson_K(2.0 * r / a["eps_hs"])
    M = math.ceil(max(16.0 * t * LN2 / a["eps_hs"] * (2.0 * H0 + T), float(K * K)))
    m_bits = clog2(M)
    w = max(1, clog2(p["eta"]))
    crz = rot(eps, ctrl=2)

    f_half = fft(npow2(half), eps)
    o_v = (half * add(w) + f_half[0] + N * mult(ARITHMETIC_BITS), f_half[1])
    phase = (2.0 * o_v[0] + half * crz + N * crz, 2.0 * o_v[1] + half + N)

    mu_t = math.ceil(math.log2(2.0 * math.sqrt(2.0) * T / a["eps_pea"]))
    u_n = uniform(N, eps)
    u_m = uniform(M, eps)
    prep_t = qrom(N) + u_n[0] + cmp(mu_t) + 4.0 * lg
    f_full = fft(npow2(N), eps)
    o_t = (2.0 * f_full[0] + 2.0 * prep_t + qrom(N) + u_m[0] + 2.0 * cmp(m_bits),
           2.0 * f_full[1] + 2.0 * u_n[1] + u_m[1])
    ham = ((2.0 * m_bits) * phase[0] + o_t[0], (2.0 * m_bits) * phase[1] + o_t[1])
    n_coef = state_rotations(clog2(K + 1))
    coefs = (2.0 * (n_coef * rot(eps, "su2")), 2.0 * n_coef)
    seg_t = 3.0 * (coefs[0] + K * ham[0]) + phase[0]
    seg_r = 3.0 * (coefs[1] + K * ham[1]) + phase[1]
    return r * seg_t, r * seg_r, r


ESTIMATORS = {name: globals()[name] for name in METHODS}


def estimate(name, p, a):
    first = ESTIMATORS[name](p, a, a["eps_s"])
    if not first[1] > 0.0:
        return first[0], first[2], a["eps_s"]
    eps = a["eps_s"] / first[1]
    total, _, r = ESTIMATORS[name](p, a, eps)
    return total, r, eps


def synthetic_set(rng, index):
    N = rng.choice([4, 6, 8, 10, 12])
    eta = rng.randint(2, N - 1)
    J = rng.randint(1, min(3, eta))
    charges = [1.0] * J
    charges[0] += eta - J
    Lambda_max = rng.uniform(0.2, 2.0)
    p = {
        "name": f"synthetic{index}",
        "basis": "sto-3g",
        "N": N,
        "eta": eta,
        "lambda_value": Lambda_max * rng.uniform(5.0, 60.0),
        "Lambda_max": Lambda_max,
        "Gamma": float(rng.randint(20, 3000)),
        "J": J,
        "charges": charges,
        "Omega": rng.uniform(200.0, 3000.0),
        "x_max": rng.uniform(3.0, 8.0),
        "phi_max": rng.uniform(0.3, 1.2),
        "phi_prime_max": rng.uniform(0.3, 1.5),
        "alpha_ci": rng.uniform(1.0, 8.0),
        "gamma1_ci": rng.uniform(1.0, 10.0),
        "gamma2_ci": rng.uniform(10.0, 2000.0),
        "L_rank": rng.randint(1, N * N // 4),
        "basis_contraction_d": rng.choice([3, 6]),
    }
    if index % 2 == 1:
        p["norm_T"] = rng.uniform(50.0, 500.0)
        p["norm_U"] = rng.uniform(5.0, 50.0)
        p["norm_V"] = rng.uniform(5.0, 50.0)
    split = [rng.uniform(0.5, 2.0) for _ in range(5)]
    total = sum(split)
    budget = 0.0015
    a = {k: budget * s / total for k, s in zip(["eps_pea", "eps_hs", "eps_h", "eps_s", "eps_tay"], split)}
    return p, a


def main():
    rng = random.Random(20260101)
    cases = []
    for i in range(5):
        p, a = synthetic_set(rng, i)
        results = {}
        for name in METHODS:
            total, r, eps_ss = estimate(name, p, a)
            results[name] = {"total": total, "r": r, "eps_ss": eps_ss}
        cases.append({"params": p, "allocation": a, "expected": results})
    out = pathlib.Path(__file__).with_name("method_reference.json")
    out.write_text(json.dumps({"cases": cases}, indent=1) + "\n")
    print(f"wrote {out} ({len(cases)} cases x {len(METHODS)} methods)")


if __name__ == "__main__":
    main()
