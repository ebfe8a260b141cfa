#!/usr/bin/env python3
# Copyright 2026 The vvqe Authors
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
"""Regenerates the Hamiltonian fixtures under data/.

Not a build dependency. Requires pyscf and openfermion.

Qubit convention: OpenFermion orders spin orbitals by ascending orbital
energy (index m = 2 * spatial + spin). The fixtures relabel mode m as qubit
n - 1 - m before the Jordan-Wigner transform, so the Hartree-Fock
determinant reads "0011" (H2) or "000011" (H4) when bitstrings are written
left to right as qubit 0 .. n-1.
"""

import argparse
import pathlib

import numpy as np
import openfermion as of
from openfermion.chem import MolecularData
from openfermion.transforms import get_fermion_operator, jordan_wigner
from openfermionpyscf import run_pyscf


def reversed_modes(op, n):
    out = of.FermionOperator()
    for term, coeff in op.terms.items():
        out += of.FermionOperator(tuple((n - 1 - m, a) for m, a in term), coeff)
    return out


def write_fixture(path, qubit_op, n, meta):
    header = pathlib.Path(__file__).read_text().split('"""', 1)[0]
    lines = [line for line in header.splitlines() if line.startswith("#") and
             not line.startswith("#!")]
    lines += ["", f"# n_qubits: {n}"]
    lines += [f"# {k}: {v}" for k, v in meta.items()]
    terms = sorted(qubit_op.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    for term, coeff in terms:
        if abs(coeff) < 1e-12:
            continue
        assert abs(np.imag(coeff)) < 1e-12
        spec = " ".join(f"{p}{q}" for q, p in term)
        lines.append(f"{np.real(coeff):.17g}, {spec}".rstrip())
    path.write_text("\n".join(lines) + "\n")
    return len([line for line in lines if line and not line.startswith("#")])


def molecule_hamiltonian(geometry, basis, occupied=None, active=None):
    mol = MolecularData(geometry, basis, multiplicity=1, charge=0)
    mol = run_pyscf(mol, run_scf=True)
    ham = mol.get_molecular_hamiltonian(occupied_indices=occupied,
                                        active_indices=active)
    fop = get_fermion_operator(ham)
    n = of.count_qubits(fop)
    return jordan_wigner(reversed_modes(fop, n)), n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[2] / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    jw_note = "qubit j = spin orbital n-1-j (ascending-energy OpenFermion order reversed); JW Z-strings strictly between endpoints"

    for bond in (0.5, 0.8, 1.0, 1.5, 2.0):
        geometry = [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, bond))]
        qop, n = molecule_hamiltonian(geometry, "sto-3g")
        name = f"h2_sto3g_{bond:.1f}.ham"
        count = write_fixture(out / name, qop, n, {
            "molecule": "H2", "basis": "sto-3g", "bond_length_angstrom": f"{bond:.1f}",
            "reference": "0011", "jw_convention": jw_note,
        })
        print(name, n, count)

    # Non-isosceles trapezoid in the xy plane (angstrom): bases 1.2 and 0.7,
    # height 0.9. Without a mirror plane through the bases, integrals that
    # vanish by symmetry in the isosceles case survive (118 Pauli terms).
    geometry = [("H", (0.0, 0.0, 0.0)), ("H", (1.2, 0.0, 0.0)),
                ("H", (0.2, 0.9, 0.0)), ("H", (0.9, 0.9, 0.0))]
    qop, n = molecule_hamiltonian(geometry, "sto-6g", occupied=[0], active=[1, 2, 3])
    count = write_fixture(out / "h4_sto6g_trapezoid.ham", qop, n, {
        "molecule": "H4", "basis": "sto-6g",
        "geometry_angstrom": "(0,0,0) (1.2,0,0) (0.2,0.9,0) (0.9,0.9,0)",
        "active_space": "frozen spatial orbital 0, active spatial orbitals 1-3, 2 active electrons",
        "reference": "000011", "jw_convention": jw_note,
    })
    print("h4_sto6g_trapezoid.ham", n, count)


if __name__ == "__main__":
    main()
