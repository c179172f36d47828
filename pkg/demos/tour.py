"""A short walk through the library on the small examples.

Run with ``python3 demos/tour.py``.
"""
from energized import SetSystem, build_bundle, complete_complex, constant_energy, omega_energy, spin_energy
from energized.exact import charpoly_exact, det_exact
from energized.graphs import export_dot, multigraphs_from
from energized.param import build_param, verify_deformation
from energized.spectra import eig1_multiplicity, orthogonal_conjugator, quadratic_form_values


def show(title, M):
    print(title)
    for row in M.tolist():
        print("   ", " ".join(f"{str(v):>4}" for v in row))


def main():
    # the komma {{1}, {1,2}}: isospectral but not inverse to each other
    komma = SetSystem([[1], [1, 2]])
    B = build_bundle(komma, constant_energy(komma))
    show("komma Lmm", B.Lmm)
    show("komma Lpp", B.Lpp)
    print("  charpoly", charpoly_exact(B.Lmm), "conjugator\n", orthogonal_conjugator(komma).round(12) + 0.0)
    print("  values of the form up to 15:", sorted(quadratic_form_values(B.Lpp, 6, 15)))

    # the edge K2 with spin and Euler energies
    K2 = complete_complex(2)
    h = spin_energy(K2, "+-+")
    B = build_bundle(K2, h)
    show("K2 with spins +-+, g = Lmm^-1", B.g)
    print("  det Lmm =", det_exact(B.Lmm), "= product of spins", h.fermi())
    print("  Euler characteristic sum g =", build_bundle(K2, omega_energy(K2)).g.total())

    # multiplicity of eigenvalue 1 grows with the complete complex
    for n in (2, 4, 6):
        print(f"  eigenvalue 1 of K{n} has multiplicity", eig1_multiplicity(complete_complex(n)))

    # isospectral multigraphs of the code example
    S = SetSystem([[1], [3], [1, 2], [2, 3], [1, 2, 3]])
    Gm, Gp = multigraphs_from(S)
    print("multigraph of Lpp in DOT:")
    print(export_dot(Gp, "Gpp"))

    # parameter case
    P = build_param(SetSystem([[1], [2], [3], [1, 2], [2, 3]]))
    print("parameter case: total of g_t =", P.gt.total())

    rep = verify_deformation(SetSystem([[1], [2], [3], [4], [1, 2], [2, 3], [2, 4], [3, 4], [2, 3, 4]]))
    print(rep.summary())
    print("  p =", rep.info["p"])


if __name__ == "__main__":
    main()
