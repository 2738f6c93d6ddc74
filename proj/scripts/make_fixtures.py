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

"""Regenerates the parameter files under fixtures/.

This is a one-shot provenance script, not the full extraction tool. It needs
pyscf for the small molecules and, for FeMoCo, the Reiher active-space
integrals as shipped in openfermion's resource_estimates package (eri_reiher.h5).

    python3 scripts/make_fixtures.py --out fixtures [--reiher PATH]
"""

import argparse
import json
import pathlib

import numpy as np

COEFF_FLOOR = 1e-10
RANK_CUTOFF = 1e-8
AMPLITUDE_FRACTION = 1e-3

# Experimental equilibrium geometries, Angstrom.
MOLECULES = {
    "h2": ("H 0 0 0; H 0 0 0.7414", 0),
    "hf": ("H 0 0 0; F 0 0 0.9168", 0),
    "h2o": ("O 0 0 0.1173; H 0 0.7572 -0.4692; H 0 -0.7572 -0.4692", 0),
    "nh3": ("N 0 0 0.1162; H 0 0.9377 -0.2711; H 0.8121 -0.4689 -0.2711;"
            " H -0.8121 -0.4689 -0.2711", 0),
    "ch4": ("C 0 0 0; H 0.6276 0.6276 0.6276; H -0.6276 -0.6276 0.6276;"
            " H -0.6276 0.6276 -0.6276; H 0.6276 -0.6276 -0.6276", 0),
    "o2": ("O 0 0 0; O 0 0 1.2075", 2),
    "co2": ("C 0 0 0; O 0 0 1.16; O 0 0 -1.16", 0),
    "nacl": ("Na 0 0 0; Cl 0 0 2.3609", 0),
}


def coefficient_stats(h1, eri):
    """Spin-orbital lambda, max coefficient and term count from spatial integrals.

    H = sum h_pq a+_p a_q + 1/2 sum (pq|rs) a+_p a+_r a_s a_q. Each spatial
    one-body entry appears for 2 spins, each two-body entry for 4 spin pairs
    with weight 1/2.
    """
    h_abs = np.abs(h1)
    g_abs = np.abs(eri)
    lam = 2.0 * h_abs.sum() + 2.0 * g_abs.sum()
    big = max(h_abs.max(), 0.5 * g_abs.max())
    gamma = 2 * int((h_abs > COEFF_FLOOR).sum()) + 4 * int((0.5 * g_abs > COEFF_FLOOR).sum())
    return float(lam), float(big), gamma


def low_rank(eri):
    n = eri.shape[0]
    w = eri.reshape(n * n, n * n)
    w = 0.5 * (w + w.T)
    vals = np.linalg.eigvalsh(w)
    return int((np.abs(vals) > RANK_CUTOFF).sum())


def orbital_constants(mol):
    """Bounds on atomic-orbital amplitudes sampled along rays from each centre.

    phi_max, phi_prime_max: largest |phi| and |grad phi| seen.
    x_max: largest radius at which some orbital still exceeds
        AMPLITUDE_FRACTION * phi_max.
    alpha: largest a with |phi(r)| <= phi_max exp(-a r / x_max) on
        [x_max, 2 x_max].
    gamma1, gamma2: |grad phi| <= gamma1 phi_max / x_max and
        |lap phi| <= gamma2 phi_max / x_max^2.
    """
    rng = np.random.default_rng(7)
    dirs = rng.normal(size=(256, 3))
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    radii = np.concatenate([np.linspace(0.0, 0.5, 101), np.linspace(0.5, 40.0, 1580)[1:]])
    slices = mol.aoslice_by_atom()
    samples = []
    for atom in range(mol.natm):
        centre = mol.atom_coord(atom)
        coords = centre + (radii[:, None, None] * dirs[None, :, :]).reshape(-1, 3)
        ao = mol.eval_gto("GTOval_sph_deriv2", coords)
        lo, hi = slices[atom][2], slices[atom][3]
        val = np.abs(ao[0][:, lo:hi]).reshape(len(radii), len(dirs), -1)
        grad = np.sqrt(ao[1] ** 2 + ao[2] ** 2 + ao[3] ** 2)[:, lo:hi]
        lap = np.abs(ao[4] + ao[7] + ao[9])[:, lo:hi]
        samples.append((val.max(axis=1), grad.max(), lap.max()))
    phi_max = max(float(v.max()) for v, _, _ in samples)
    phi_prime = max(float(g) for _, g, _ in samples)
    lap_max = max(float(l) for _, _, l in samples)
    x_max = 0.0
    for v, _, _ in samples:
        above = np.nonzero(v.max(axis=1) >= AMPLITUDE_FRACTION * phi_max)[0]
        x_max = max(x_max, float(radii[above[-1]]))
    alpha = np.inf
    for v, _, _ in samples:
        env = v.max(axis=1)
        band = (radii >= x_max) & (radii <= 2.0 * x_max) & (env > 0)
        a = (x_max / radii[band]) * np.log(phi_max / env[band])
        alpha = min(alpha, float(a.min()))
    return {
        "x_max": x_max,
        "phi_max": phi_max,
        "phi_prime_max": phi_prime,
        "alpha_ci": alpha,
        "gamma1_ci": x_max * phi_prime / phi_max,
        "gamma2_ci": x_max * x_max * lap_max / phi_max,
    }


def cell_volume(mol, x_max):
    coords = mol.atom_coords()
    side = float((coords.max(axis=0) - coords.min(axis=0)).max()) + 2.0 * x_max
    return side ** 3


def molecule_fixture(name, geometry, spin, basis):
    from pyscf import ao2mo, gto, scf

    mol = gto.M(atom=geometry, basis=basis, spin=spin, verbose=0)
    mf = scf.ROHF(mol) if spin else scf.RHF(mol)
    energy = mf.kernel()
    if not mf.converged:
        raise RuntimeError(f"{name}: SCF did not converge")
    c = mf.mo_coeff
    n = c.shape[1]
    h1 = c.T @ mf.get_hcore() @ c
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), n)
    lam, big, gamma = coefficient_stats(h1, eri)
    orb = orbital_constants(mol)
    return {
        "name": name,
        "basis": basis,
        "N": 2 * n,
        "eta": int(mol.nelectron),
        "lambda_value": lam,
        "Lambda_max": big,
        "Gamma": gamma,
        "J": int(mol.natm),
        "charges": [int(z) for z in mol.atom_charges()],
        "Omega": cell_volume(mol, orb["x_max"]),
        **orb,
        "L_rank": low_rank(eri),
        "basis_contraction_d": 6,
        "metadata": {
            "generator": "scripts/make_fixtures.py",
            "geometry_angstrom": geometry,
            "scf": "ROHF" if spin else "RHF",
            "scf_energy_hartree": float(energy),
            "coefficient_floor": COEFF_FLOOR,
            "rank_cutoff": RANK_CUTOFF,
            "orbital_sampling": "atomic orbitals on 256 rays x 1680 radii up to 40 bohr",
            "x_max_rule": f"largest radius with |phi| >= {AMPLITUDE_FRACTION} phi_max",
            "omega_rule": "cube of side (largest nuclear extent + 2 x_max)",
        },
    }


def reiher_fixture(path):
    import h5py

    with h5py.File(path, "r") as f:
        h1 = np.asarray(f["h0"][()])
        eri = np.asarray(f["eri"][()])
    n = h1.shape[0]
    lam, big, gamma = coefficient_stats(h1, eri)
    return {
        "name": "femoco_reiher",
        "basis": "cas54",
        "N": 2 * n,
        "eta": 54,
        "lambda_value": lam,
        "Lambda_max": big,
        "Gamma": gamma,
        "L_rank": low_rank(eri),
        "basis_contraction_d": 6,
        "metadata": {
            "generator": "scripts/make_fixtures.py",
            "source": "Reiher et al. FeMoCo 54-orbital active space (eri_reiher.h5)",
            "coefficient_floor": COEFF_FLOOR,
            "rank_cutoff": RANK_CUTOFF,
        },
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="fixtures")
    ap.add_argument("--basis", default="6-31G")
    ap.add_argument("--reiher", help="path to eri_reiher.h5")
    ap.add_argument("--only", nargs="*")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def emit(rec):
        path = out / f"{rec['name']}_{rec['basis']}.json"
        path.write_text(json.dumps(rec, indent=2) + "\n")
        print(path, rec["N"], rec["eta"], f"{rec['lambda_value']:.4g}", rec["L_rank"])

    for name, (geometry, spin) in MOLECULES.items():
        if args.only and name not in args.only:
            continue
        emit(molecule_fixture(name, geometry, spin, args.basis))
    if args.reiher:
        emit(reiher_fixture(args.reiher))


if __name__ == "__main__":
    main()
