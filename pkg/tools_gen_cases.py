"""One-shot generator for the bundled case corpus (not shipped)."""
import json
import sys
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, "src")
from ewmtool.rootlat import Weight, build_root_system, pair

OUT = Path("src/ewmtool/cases")
OUT.mkdir(parents=True, exist_ok=True)


def S(x):
    return str(x)


def V(xs):
    return [S(F(x)) for x in xs]


def M(rows):
    return [V(r) for r in rows]


def coroot_pairing(spec, sigma_rows, indices):
    rs = build_root_system(spec)
    out = {}
    for i in indices:
        out[i] = [S(pair(rs, Weight(tuple(F(x) for x in s), "root"), i)) for s in sigma_rows]
    return out


def write(name, data):
    data = {"schema_version": 1, **data}
    (OUT / f"{name}.json").write_text(json.dumps(data, indent=1) + "\n")
    print("wrote", name)


# --- sec8 (n = 3, 4) --------------------------------------------------------

for n, spec in [(3, "D4"), (4, "D5")]:
    rk = n + 1
    a1 = [1] + [0] * (rk - 1)
    s1 = [0] + [1] * (n - 1) + [0]
    s2 = [0] + [1] * (n - 2) + [0, 1]
    cols = [
        {"id": "D1+", "moved_by": [1], "pairing": V([1, -1, 0])},
        {"id": "D1-", "moved_by": [1], "pairing": V([1, 0, -1])},
        {"id": "D2", "moved_by": [2], "pairing": V([-1, 1, 1])},
        {"id": f"D{n}", "moved_by": [n], "pairing": V([0, 1, -1])},
        {"id": f"D{n+1}", "moved_by": [n + 1], "pairing": V([0, -1, 1])},
    ]
    w0row = [1] + [0] * (rk - 1)
    wnrow = [0] * (rk - 1) + [1]
    write(
        f"sec8_spin{2*n+2}_n{n}",
        {
            "id": f"sec8_spin{2*n+2}_n{n}",
            "citation": "s:example",
            "kind": "datum",
            "root_system": spec,
            "simply_connected": False,
            "wonderful": True,
            "sp": list(range(3, n)),
            "sigma": M([a1, s1, s2]),
            "colors": cols,
            "delta_prime": ["D1+", "D2", f"D{n}"],
            "p_char_basis": ["w0", f"w{n}"],
            "restriction": M([w0row, wnrow]),
            "boundary_root_of": {"D1-": 1, f"D{n+1}": n + 1},
            "rk_XP": 2,
            "expected_generators": [
                {"color": "D1+", "omega": V(a1), "chi": V([1, 0])},
                {"color": "D1-", "omega": V(a1), "chi": V([-1, 0])},
                {"color": "D2", "omega": V([0, 1] + [0] * (rk - 2)), "chi": V([0, 0])},
                {"color": f"D{n}", "omega": V([0] * (n - 1) + [1, 0]), "chi": V([1, -1])},
                {"color": f"D{n+1}", "omega": V([0] * n + [1]), "chi": V([0, -1])},
            ],
        },
    )

# --- sym1aS, n = 3 (SL(6), I = {b1}) ----------------------------------------

sig = [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1]]
pairs = coroot_pairing("A5", sig, range(1, 6))
write(
    "sym1aS_sl6",
    {
        "id": "sym1aS_sl6",
        "citation": "sym1aS",
        "kind": "datum",
        "root_system": "A5",
        "wonderful": True,
        "sp": [],
        "sigma": M(sig),
        "colors": [
            {"id": f"D{i}", "moved_by": [i], "pairing": pairs[i]} for i in range(1, 6)
        ],
        "delta_prime": ["D2", "D3", "D4"],
        "p_char_basis": ["w1"],
        "restriction": M([[1, 0, 0, 0, 1]]),
        "boundary_root_of": {"D1": 1, "D5": 5},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1", "omega": V([1, 0, 0, 0, 0]), "chi": V([-1])},
            {"color": "D2", "omega": V([0, 1, 0, 0, 0]), "chi": V([0])},
            {"color": "D3", "omega": V([0, 0, 1, 0, 0]), "chi": V([-1])},
            {"color": "D4", "omega": V([0, 0, 0, 1, 0]), "chi": V([0])},
            {"color": "D5", "omega": V([0, 0, 0, 0, 1]), "chi": V([-1])},
        ],
        "branching_setup": {
            "subgroup": "C3",
            "torus_map": M([[1, 0, 0, 0, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 0]]),
            "chi_extension": M([[1], [0], [0]]),
        },
    },
)

# --- sym1bS (SL(6), I = {b3}) -----------------------------------------------

write(
    "sym1bS_sl6",
    {
        "id": "sym1bS_sl6",
        "citation": "sym1bS",
        "kind": "datum",
        "root_system": "A5",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]),
        "colors": [
            {"id": "D1+", "moved_by": [1, 3, 5], "pairing": V([1, -1, 1, -1, 1])},
            {"id": "D1-", "moved_by": [1, 4], "pairing": V([1, 0, -1, 1, -1])},
            {"id": "D2+", "moved_by": [2], "pairing": V([0, 1, 0, 0, -1])},
            {"id": "D2-", "moved_by": [2, 5], "pairing": V([-1, 1, -1, 0, 1])},
            {"id": "D3-", "moved_by": [3], "pairing": V([-1, 0, 1, 0, -1])},
            {"id": "D4+", "moved_by": [4], "pairing": V([-1, 0, 0, 1, 0])},
        ],
        "delta_prime": ["D1+", "D1-", "D2+", "D2-", "D4+"],
        "p_char_basis": ["w3"],
        "restriction": M([[0, 0, 1, 0, 0]]),
        "boundary_root_of": {"D3-": 3},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0, 1, 0, 1]), "chi": V([-1])},
            {"color": "D1-", "omega": V([1, 0, 0, 1, 0]), "chi": V([-1])},
            {"color": "D2+", "omega": V([0, 1, 0, 0, 0]), "chi": V([0])},
            {"color": "D2-", "omega": V([0, 1, 0, 0, 1]), "chi": V([-1])},
            {"color": "D3-", "omega": V([0, 0, 1, 0, 0]), "chi": V([-1])},
            {"color": "D4+", "omega": V([0, 0, 0, 1, 0]), "chi": V([0])},
        ],
    },
)

# --- sym1cS (SL(4)/Sp(4), P = B_H) ------------------------------------------

write(
    "sym1cS_sl4",
    {
        "id": "sym1cS_sl4",
        "citation": "sym1cS",
        "kind": "datum",
        "root_system": "A3",
        "wonderful": False,
        "sp": [],
        "sigma": M([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        "xi_basis": [
            [S(F(3, 4)), S(F(1, 2)), S(F(1, 4))],
            [S(F(1, 2)), S(F(1, 1)), S(F(1, 2))],
            [S(F(1, 4)), S(F(1, 2)), S(F(3, 4))],
        ],
        "colors": [
            {"id": "D1+", "moved_by": [1, 3], "pairing": V([1, -1, 1])},
            {"id": "D1-", "moved_by": [1], "pairing": V([1, 0, -1])},
            {"id": "D2+", "moved_by": [2], "pairing": V([0, 1, 0])},
            {"id": "D2-", "moved_by": [2], "pairing": V([-1, 1, -1])},
            {"id": "D3-", "moved_by": [3], "pairing": V([-1, 0, 1])},
        ],
        "delta_prime": ["D1+", "D2+"],
        "p_char_basis": ["w1", "w2"],
        "restriction": M([[1, 0, 1], [0, 1, 0]]),
        "boundary_root_of": {"D1-": 1, "D2-": 2, "D3-": 3},
        "rk_XP": 2,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0, 1]), "chi": V([0, -1])},
            {"color": "D1-", "omega": V([1, 0, 0]), "chi": V([-1, 0])},
            {"color": "D2+", "omega": V([0, 1, 0]), "chi": V([0, 0])},
            {"color": "D2-", "omega": V([0, 1, 0]), "chi": V([0, -1])},
            {"color": "D3-", "omega": V([0, 0, 1]), "chi": V([-1, 0])},
        ],
        "branching_setup": {
            "subgroup": "C2",
            "torus_map": M([[1, 0, 1], [0, 1, 0]]),
            "chi_extension": M([[1, 0], [0, 1]]),
        },
    },
)

# --- sym4 (SO(7)/SO(6), P = B_H^-) ------------------------------------------

write(
    "sym4_so7",
    {
        "id": "sym4_so7",
        "citation": "sym4",
        "kind": "datum",
        "root_system": "B3",
        "simply_connected": False,
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        "colors": [
            {"id": "D1+", "moved_by": [1], "pairing": V([1, -1, 0])},
            {"id": "D1-", "moved_by": [1], "pairing": V([1, 0, 0])},
            {"id": "D2+", "moved_by": [2], "pairing": V([0, 1, -1])},
            {"id": "D2-", "moved_by": [2], "pairing": V([-1, 1, 0])},
            {"id": "D3+", "moved_by": [3], "pairing": V([0, -1, 1])},
            {"id": "D3-", "moved_by": [3], "pairing": V([0, -1, 1])},
        ],
        "delta_prime": ["D1-", "D2-", "D3-"],
        "p_char_basis": ["w1", "w2", "w3"],
        "restriction": M([[1, 0, 0], [0, 1, 0], [0, 1, 1]]),
        "boundary_root_of": {"D1+": 1, "D2+": 2, "D3+": 3},
        "rk_XP": 3,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0, 0]), "chi": V([-1, 0, 0])},
            {"color": "D1-", "omega": V([1, 0, 0]), "chi": V([0, 0, 0])},
            {"color": "D2+", "omega": V([0, 1, 0]), "chi": V([0, -1, -1])},
            {"color": "D2-", "omega": V([0, 1, 0]), "chi": V([-1, 0, 0])},
            {"color": "D3+", "omega": V([0, 0, 1]), "chi": V([0, 0, -1])},
            {"color": "D3-", "omega": V([0, 0, 1]), "chi": V([0, -1, 0])},
        ],
        "branching_setup": {
            "subgroup": "D3",
            "torus_map": M([[1, 0, 0], [0, 1, 0], [0, 1, 1]]),
            "chi_extension": M([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        },
    },
)

# --- sym7aS, p = q = 2 (Sp(8)) ----------------------------------------------

sig = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
pairs = coroot_pairing("C4", sig, range(1, 5))
write(
    "sym7aS_sp8",
    {
        "id": "sym7aS_sp8",
        "citation": "sym7aS",
        "kind": "datum",
        "root_system": "C4",
        "wonderful": True,
        "sp": [],
        "sigma": M(sig),
        "colors": [
            {"id": f"D{i}", "moved_by": [i], "pairing": pairs[i]} for i in range(1, 5)
        ],
        "delta_prime": ["D2", "D3", "D4"],
        "p_char_basis": ["w1"],
        "restriction": M([[1, 0, 0, 0]]),
        "boundary_root_of": {"D1": 1},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1", "omega": V([1, 0, 0, 0]), "chi": V([-1])},
            {"color": "D2", "omega": V([0, 1, 0, 0]), "chi": V([0])},
            {"color": "D3", "omega": V([0, 0, 1, 0]), "chi": V([-1])},
            {"color": "D4", "omega": V([0, 0, 0, 1]), "chi": V([0])},
        ],
        "branching_setup": {
            "subgroup": "C2xC2",
            "torus_map": M([[1, 0, 0, 0], [0, 1, 1, 1], [0, 0, 1, 0], [0, 0, 0, 1]]),
            "chi_extension": M([[1], [0], [0], [0]]),
        },
    },
)

# --- F4/Spin(9) ---------------------------------------------------------------

write(
    "sym8aS_f4",
    {
        "id": "sym8aS_f4",
        "citation": "sym8aS",
        "kind": "datum",
        "root_system": "F4",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
        "colors": [
            {"id": "D1", "moved_by": [1], "pairing": V([1, -1, 0, 0])},
            {"id": "D2", "moved_by": [2], "pairing": V([1, 1, -1, 0])},
            {"id": "D3+", "moved_by": [3], "pairing": V([0, 0, 1, -1])},
            {"id": "D3-", "moved_by": [3], "pairing": V([-2, 0, 1, 0])},
            {"id": "D4+", "moved_by": [4], "pairing": V([0, 0, -1, 1])},
            {"id": "D4-", "moved_by": [4], "pairing": V([0, -1, 0, 1])},
        ],
        "delta_prime": ["D2", "D3+", "D3-", "D4-"],
        "p_char_basis": ["w1", "w2"],
        "restriction": M([[0, 1, 1, 1], [1, 0, 0, 0]]),
        "boundary_root_of": {"D1": 1, "D4+": 4},
        "rk_XP": 2,
        "expected_generators": [
            {"color": "D1", "omega": V([1, 0, 0, 0]), "chi": V([0, -1])},
            {"color": "D2", "omega": V([0, 1, 0, 0]), "chi": V([0, -1])},
            {"color": "D3+", "omega": V([0, 0, 1, 0]), "chi": V([-1, 0])},
            {"color": "D3-", "omega": V([0, 0, 1, 0]), "chi": V([0, -1])},
            {"color": "D4+", "omega": V([0, 0, 0, 1]), "chi": V([-1, 0])},
            {"color": "D4-", "omega": V([0, 0, 0, 1]), "chi": V([0, 0])},
        ],
    },
)

write(
    "sym8bS_f4",
    {
        "id": "sym8bS_f4",
        "citation": "sym8bS",
        "kind": "datum",
        "root_system": "F4",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
        "colors": [
            {"id": "D1+", "moved_by": [1, 4], "pairing": V([1, -1, -1, 1])},
            {"id": "D1-", "moved_by": [1, 3], "pairing": V([1, 0, 1, -1])},
            {"id": "D2", "moved_by": [2], "pairing": V([-1, 1, -1, 0])},
            {"id": "D3+", "moved_by": [3], "pairing": V([-1, 0, 1, 0])},
            {"id": "D4-", "moved_by": [4], "pairing": V([-1, 0, 0, 1])},
        ],
        "delta_prime": ["D1+", "D1-", "D2", "D4-"],
        "p_char_basis": ["w3"],
        "restriction": M([[0, 0, 1, 0]]),
        "boundary_root_of": {"D3+": 3},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0, 0, 1]), "chi": V([-1])},
            {"color": "D1-", "omega": V([1, 0, 1, 0]), "chi": V([-1])},
            {"color": "D2", "omega": V([0, 1, 0, 0]), "chi": V([-1])},
            {"color": "D3+", "omega": V([0, 0, 1, 0]), "chi": V([-1])},
            {"color": "D4-", "omega": V([0, 0, 0, 1]), "chi": V([0])},
        ],
    },
)

write(
    "sym8cS_f4",
    {
        "id": "sym8cS_f4",
        "citation": "sym8cS",
        "kind": "datum",
        "root_system": "F4",
        "wonderful": True,
        "sp": [2],
        "sigma": M([[1, 1, 1, 0], [0, 1, 2, 1], [0, 0, 0, 1]]),
        "colors": [
            {"id": "D1", "moved_by": [1], "pairing": V([1, -1, 0])},
            {"id": "D3", "moved_by": [3], "pairing": V([0, 1, -1])},
            {"id": "D4+", "moved_by": [4], "pairing": V([0, 0, 1])},
            {"id": "D4-", "moved_by": [4], "pairing": V([-1, 0, 1])},
        ],
        "delta_prime": ["D1", "D3", "D4+"],
        "p_char_basis": ["w4"],
        "restriction": M([[0, 0, 0, 1]]),
        "boundary_root_of": {"D4-": 4},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1", "omega": V([1, 0, 0, 0]), "chi": V([-1])},
            {"color": "D3", "omega": V([0, 0, 1, 0]), "chi": V([-1])},
            {"color": "D4+", "omega": V([0, 0, 0, 1]), "chi": V([0])},
            {"color": "D4-", "omega": V([0, 0, 0, 1]), "chi": V([-1])},
        ],
    },
)

# --- sph3S (Spin(9)/Spin(7)) --------------------------------------------------

write(
    "sph3S_spin9",
    {
        "id": "sph3S_spin9",
        "citation": "sph3S",
        "kind": "datum",
        "root_system": "B4",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]),
        "colors": [
            {"id": "D1", "moved_by": [1], "pairing": V([1, -1, 0, 0])},
            {"id": "D2", "moved_by": [2], "pairing": V([1, 1, -1, 0])},
            {"id": "D3", "moved_by": [3], "pairing": V([-1, 1, 1, -1])},
            {"id": "D4+", "moved_by": [4], "pairing": V([0, 0, 0, 1])},
            {"id": "D4-", "moved_by": [4], "pairing": V([0, -2, 0, 1])},
        ],
        "delta_prime": ["D1", "D2", "D3", "D4+"],
        "p_char_basis": ["w1"],
        "restriction": M([[0, 0, 1, 1]]),
        "boundary_root_of": {"D4-": 4},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1", "omega": V([1, 0, 0, 0]), "chi": V([0])},
            {"color": "D2", "omega": V([0, 1, 0, 0]), "chi": V([-1])},
            {"color": "D3", "omega": V([0, 0, 1, 0]), "chi": V([-1])},
            {"color": "D4+", "omega": V([0, 0, 0, 1]), "chi": V([0])},
            {"color": "D4-", "omega": V([0, 0, 0, 1]), "chi": V([-1])},
        ],
        "branching_setup": {
            "subgroup": "B3",
            "torus_map": M([[0, 0, 1, 1], [0, 1, 0, 0], [1, 0, 1, 0]]),
            "chi_extension": M([[1], [0], [0]]),
        },
    },
)

# --- sph4 (Spin(7)/G2) ---------------------------------------------------------

write(
    "sph4aS_spin7",
    {
        "id": "sph4aS_spin7",
        "citation": "sph4aS",
        "kind": "datum",
        "root_system": "B3",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
        "colors": [
            {"id": "D1", "moved_by": [1], "pairing": V([1, -1, 0])},
            {"id": "D2", "moved_by": [2], "pairing": V([1, 1, -1])},
            {"id": "D3+", "moved_by": [3], "pairing": V([0, 0, 1])},
            {"id": "D3-", "moved_by": [3], "pairing": V([-2, 0, 1])},
        ],
        "delta_prime": ["D2", "D3+"],
        "p_char_basis": ["w1"],
        "restriction": M([[1, 0, 1]]),
        "boundary_root_of": {"D1": 1, "D3-": 3},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1", "omega": V([1, 0, 0]), "chi": V([-1])},
            {"color": "D2", "omega": V([0, 1, 0]), "chi": V([-1])},
            {"color": "D3+", "omega": V([0, 0, 1]), "chi": V([0])},
            {"color": "D3-", "omega": V([0, 0, 1]), "chi": V([-1])},
        ],
        "branching_setup": {
            "subgroup": "G2",
            "torus_map": M([[1, 0, 1], [0, 1, 0]]),
            "chi_extension": M([[1], [0]]),
        },
    },
)

write(
    "sph4bS_spin7",
    {
        "id": "sph4bS_spin7",
        "citation": "sph4bS",
        "kind": "datum",
        "root_system": "B3",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        "colors": [
            {"id": "D1+", "moved_by": [1, 2], "pairing": V([1, 1, -1])},
            {"id": "D1-", "moved_by": [1, 3], "pairing": V([1, -2, 1])},
            {"id": "D2-", "moved_by": [2], "pairing": V([-2, 1, 0])},
            {"id": "D3+", "moved_by": [3], "pairing": V([-1, 0, 1])},
        ],
        "delta_prime": ["D1+", "D1-", "D3+"],
        "p_char_basis": ["w2"],
        "restriction": M([[0, 1, 0]]),
        "boundary_root_of": {"D2-": 2},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 1, 0]), "chi": V([-1])},
            {"color": "D1-", "omega": V([1, 0, 1]), "chi": V([-1])},
            {"color": "D2-", "omega": V([0, 1, 0]), "chi": V([-1])},
            {"color": "D3+", "omega": V([0, 0, 1]), "chi": V([0])},
        ],
        "branching_setup": {
            "subgroup": "G2",
            "torus_map": M([[1, 0, 1], [0, 1, 0]]),
            "chi_extension": M([[0], [1]]),
        },
    },
)

# --- sph5S (G2/SL(3)) -----------------------------------------------------------

write(
    "sph5S_g2_sl3",
    {
        "id": "sph5S_g2_sl3",
        "citation": "sph5S",
        "kind": "datum",
        "root_system": "G2",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 0], [1, 1]]),
        "colors": [
            {"id": "D1+", "moved_by": [1], "pairing": V([1, 0])},
            {"id": "D1-", "moved_by": [1], "pairing": V([1, -1])},
            {"id": "D2", "moved_by": [2], "pairing": V([-1, 1])},
        ],
        "delta_prime": ["D1+", "D2"],
        "p_char_basis": ["w1", "w2"],
        "restriction": M([[1, 1], [0, 1]]),
        "boundary_root_of": {"D1-": 1},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0]), "chi": V([0, 0])},
            {"color": "D1-", "omega": V([1, 0]), "chi": V([-1, 0])},
            {"color": "D2", "omega": V([0, 1]), "chi": V([-1, 0])},
        ],
        "branching_setup": {
            "subgroup": "A2",
            "torus_map": M([[1, 1], [0, 1]]),
            "chi_extension": M([[1, 0], [0, 1]]),
        },
        "well_case": {"h_trivial": ["D1+"], "h_nontrivial": [], "center_dim": 0},
        "well_fixtures": [
            {
                "chi": "3*w1",
                "expected_bottom": M([[3, 0], [2, 1], [1, 2], [0, 3]]),
                "expected_d_chi": 4,
            },
            {"chi": "w1", "expected_d_chi": 2},
            {"chi": "0", "expected_bottom": M([[0, 0]]), "expected_d_chi": 1},
        ],
        "expected_free_monoid": True,
    },
)

# --- sph6aS (Sp(4) x Sp(4), i = 1) ----------------------------------------------

write(
    "sph6aS_sp4sp4",
    {
        "id": "sph6aS_sp4sp4",
        "citation": "sph6aS",
        "kind": "datum",
        "root_system": "C2xC2",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 1]]),
        "colors": [
            {"id": "D1+", "moved_by": [1], "pairing": V([1, -1, -1, 0])},
            {"id": "D1-", "moved_by": [1, 3], "pairing": V([1, -1, 1, 0])},
            {"id": "D2+", "moved_by": [2], "pairing": V([0, 1, -1, 0])},
            {"id": "D2-", "moved_by": [2, 3], "pairing": V([-1, 1, 1, 0])},
            {"id": "D2'", "moved_by": [4], "pairing": V([0, 0, -1, 1])},
        ],
        "delta_prime": ["D1-", "D2+", "D2-", "D2'"],
        "p_char_basis": ["w1"],
        "restriction": M([[1, 1, 0, 0]]),
        "boundary_root_of": {"D1+": 1},
        "rk_XP": 1,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0, 0, 0]), "chi": V([-1])},
            {"color": "D1-", "omega": V([1, 0, 1, 0]), "chi": V([0])},
            {"color": "D2+", "omega": V([0, 1, 0, 0]), "chi": V([0])},
            {"color": "D2-", "omega": V([0, 1, 1, 0]), "chi": V([-1])},
            {"color": "D2'", "omega": V([0, 0, 0, 1]), "chi": V([0])},
        ],
    },
)

# --- sym2-6S bonus (SL(6), p=1, q=3, i=2) ---------------------------------------

write(
    "sym2_6S_sl6",
    {
        "id": "sym2_6S_sl6",
        "citation": "sym2-6S",
        "kind": "datum",
        "root_system": "A5",
        "wonderful": True,
        "sp": [],
        "sigma": M([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]),
        "colors": [
            {"id": "D1+", "moved_by": [1, 3], "pairing": V([1, -1, 1, 0, -1])},
            {"id": "D1-", "moved_by": [1, 5], "pairing": V([1, 0, -1, 0, 1])},
            {"id": "D2", "moved_by": [2], "pairing": V([-1, 1, 0, 0, 0])},
            {"id": "E2", "moved_by": [2], "pairing": V([0, 1, -1, 0, 0])},
            {"id": "D3-", "moved_by": [3, 5], "pairing": V([-1, 0, 1, -1, 1])},
            {"id": "D4", "moved_by": [4], "pairing": V([0, 0, -1, 1, 0])},
            {"id": "E4", "moved_by": [4], "pairing": V([0, 0, 0, 1, -1])},
        ],
        "delta_prime": ["D1+", "D1-", "E2", "D3-", "E4"],
        "p_char_basis": ["w2", "w4"],
        "restriction": M([[0, 1, 0, 0, 0], [0, 0, 0, 1, 0]]),
        "boundary_root_of": {"D2": 2, "D4": 4},
        "rk_XP": 2,
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0, 1, 0, 0]), "chi": V([0, -1])},
            {"color": "D1-", "omega": V([1, 0, 0, 0, 1]), "chi": V([0, 0])},
            {"color": "D2", "omega": V([0, 1, 0, 0, 0]), "chi": V([-1, 0])},
            {"color": "E2", "omega": V([0, 1, 0, 0, 0]), "chi": V([1, -1])},
            {"color": "D3-", "omega": V([0, 0, 1, 0, 1]), "chi": V([1, -1])},
            {"color": "D4", "omega": V([0, 0, 0, 1, 0]), "chi": V([0, -1])},
            {"color": "E4", "omega": V([0, 0, 0, 1, 0]), "chi": V([1, 0])},
        ],
    },
)

# --- table fixtures -------------------------------------------------------------

write(
    "table1_row1_sl5",
    {
        "id": "table1_row1_sl5",
        "citation": "table-1-row-1",
        "kind": "table",
        "root_system": "A4",
        "p_char_basis": ["chi"],
        "expected_generators": [
            {"color": "D1", "omega": V([1, 0, 0, 0]), "chi": [S(F(1))]},
            {"color": "D3", "omega": V([0, 0, 1, 0]), "chi": [S(F(1, 2))]},
            {"color": "D2", "omega": V([0, 1, 0, 0]), "chi": [S(F(-1, 2))]},
            {"color": "D4", "omega": V([0, 0, 0, 1]), "chi": [S(F(-1))]},
        ],
        "well_case": {
            "h_trivial": [],
            "h_nontrivial": ["D1", "D3", "D2", "D4"],
            "center_dim": 1,
        },
        "expected_free_monoid": False,
    },
)

write(
    "table1_row2_sp6",
    {
        "id": "table1_row2_sp6",
        "citation": "table-1-row-2",
        "kind": "table",
        "root_system": "C3",
        "p_char_basis": ["mu"],
        "expected_generators": [
            {"color": "D0", "omega": V([1, 0, 0]), "chi": V([1])},
            {"color": "D1", "omega": V([1, 0, 0]), "chi": V([-1])},
            {"color": "D2", "omega": V([0, 1, 0]), "chi": V([0])},
        ],
        "well_case": {
            "h_trivial": ["D2"],
            "h_nontrivial": ["D0", "D1"],
            "center_dim": 1,
        },
        "well_fixtures": [
            {"chi": "2*mu", "expected_bottom": M([[2, 0, 0]]), "expected_d_chi": 1},
            {"chi": "0", "expected_bottom": M([[0, 0, 0]]), "expected_d_chi": 1},
        ],
        "expected_free_monoid": True,
    },
)

write(
    "table1_row3_spin10",
    {
        "id": "table1_row3_spin10",
        "citation": "table-1-row-3",
        "kind": "table",
        "root_system": "D5",
        "p_char_basis": ["chi"],
        "expected_generators": [
            {"color": "D1+", "omega": V([1, 0, 0, 0, 0]), "chi": V([2])},
            {"color": "D1-", "omega": V([1, 0, 0, 0, 0]), "chi": V([-2])},
            {"color": "D2", "omega": V([0, 1, 0, 0, 0]), "chi": V([0])},
            {"color": "D4", "omega": V([0, 0, 0, 1, 0]), "chi": V([1])},
            {"color": "D5", "omega": V([0, 0, 0, 0, 1]), "chi": V([-1])},
        ],
        "well_case": {
            "h_trivial": ["D2"],
            "h_nontrivial": ["D1+", "D1-", "D4", "D5"],
            "center_dim": 1,
        },
        "expected_free_monoid": False,
    },
)

print("done")
