#!/usr/bin/env python3
"""Transcribe the appendix matrices from the source text into corpus/*.rum.

Each matrix is parsed from its LaTeX array, validated numerically (Gram
identity or known determinant), and written in the %RUM logarithmic format.
"""
import cmath
import math
import re
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
LINES = (ROOT / "paper.md").read_text().splitlines()
OUT = ROOT / "corpus"
OUT.mkdir(exist_ok=True)


def find(anchor, start=0):
    for i in range(start, len(LINES)):
        if anchor in LINES[i]:
            return i
    raise SystemExit(f"anchor not found: {anchor}")


def rows_after(idx, n, ncols, token_map):
    rows = []
    i = idx
    while len(rows) < n:
        i += 1
        line = LINES[i].strip()
        if "&" not in line:
            continue
        line = line.rstrip("\\").strip()
        toks = [t.strip() for t in line.split("&")]
        if len(toks) != ncols:
            raise SystemExit(f"line {i+1}: expected {ncols} tokens, got {len(toks)}")
        rows.append([token_map(t) for t in toks])
    return rows


def digit(t):
    t = t.replace("\\phantom{-}", "").strip()
    assert re.fullmatch(r"\d", t), t
    return int(t)


def omega_tok(t):  # {1, omega, omega^2} -> exponent mod 3
    t = t.strip()
    return {"1": 0, "\\omega": 1, "\\omega^2": 2}[t]


def sixth_tok(t):  # entries in {0, +-1, +-omega, +-omega^2}, omega = zeta_6^2
    t = t.replace("\\phantom{-}", "").strip()
    if t == "0":
        return None
    neg = t.startswith("-")
    if neg:
        t = t[1:]
    e = {"1": 0, "\\omega": 2, "\\omega^2": 4}[t]
    return (e + (3 if neg else 0)) % 6


def to_complex(rows, m):
    z = np.zeros((len(rows), len(rows[0])), dtype=complex)
    for i, r in enumerate(rows):
        for j, e in enumerate(r):
            z[i, j] = 0 if e is None else cmath.exp(2j * math.pi * e / m)
    return z


def check_gram(rows, m, pattern, weight=None):
    """pattern: callable (i, j) -> expected complex value of (MM*)_{ij}."""
    z = to_complex(rows, m)
    g = z @ z.conj().T
    n = len(rows)
    for i in range(n):
        for j in range(n):
            want = pattern(i, j)
            if abs(g[i, j] - want) > 1e-6:
                raise SystemExit(f"gram mismatch at ({i},{j}): {g[i,j]} != {want}")


def check_det_sq(rows, m, want):
    z = to_complex(rows, m)
    d = abs(np.linalg.det(z)) ** 2
    if abs(d - want) > max(1.0, 1e-9 * want):
        raise SystemExit(f"det^2 mismatch: {d} != {want}")


def write(name, m, rows, comment, weighing=False):
    n = len(rows)
    toks = "\n".join(" ".join("." if e is None else str(e) for e in r) for r in rows)
    (OUT / name).write_text(f"# {comment}\n%RUM {m}\n{n}\n{toks}\n")
    print(f"wrote {name} ({n}x{n}, m={m})")


def hadamard(n):
    return lambda i, j: n if i == j else 0


def barba(n):
    return lambda i, j: n if i == j else 1


# ---- Butson Hadamard matrices over the third roots -------------------------
for order in (12, 24, 48):
    idx = find(f"\\begin{{array}}{{*{{{order}}}{{c}}}}", find("Tables of Matrices"))
    rows = rows_after(idx, order, order, digit)
    check_gram(rows, 3, hadamard(order))
    write(f"bh{order}_3.rum", 3, rows, f"BH({order},3) Butson-type Hadamard matrix")

# ---- Barba matrices over the third roots ------------------------------------
idx = find("B_4=")
rows = rows_after(idx, 4, 4, digit)
check_gram(rows, 3, barba(4))
write("b4_3.rum", 3, rows, "Barba matrix of order 4 over the third roots")

idx = find("B_7=")
rows = rows_after(idx, 7, 7, digit)
check_gram(rows, 3, barba(7))
check_det_sq(rows, 3, 13 * 6**6)
write("b7_3.rum", 3, rows, "Barba matrix of order 7 over the third roots")

idx = find("B_{10}=\\left[")
rows = rows_after(idx, 10, 10, digit)
check_gram(rows, 3, barba(10))
write("b10_3.rum", 3, rows, "Barba matrix of order 10 (Petersen graph algebra)")

idx = find("B_{13}=\\left[")
rows = rows_after(idx, 13, 13, digit)
check_gram(rows, 3, barba(13))
write("b13_3.rum", 3, rows, "Barba matrix of order 13 (Paley graph algebra)")

# ---- Record determinant matrices over the third roots -----------------------
idx = find("M_5=\\begin{bmatrix}")
rows = rows_after(idx, 5, 5, digit)
check_det_sq(rows, 3, 1701)
write("m5_3.rum", 3, rows, "maximal determinant matrix of order 5, |det|^2 = 1701")

idx = find("M_8=", find("M_5=\\begin{bmatrix}"))
rows = rows_after(idx, 8, 8, digit)
check_det_sq(rows, 3, 2**12 * 3**7)
write("m8_3.rum", 3, rows, "record determinant matrix of order 8, |det|^2 = 2^12 * 3^7")

idx = find("M_{11}=\\left[", find("M_8="))
rows = rows_after(idx, 11, 11, digit)
check_det_sq(rows, 3, 3**19 * 7 * 19)
write("m11_3.rum", 3, rows, "record determinant matrix of order 11, |det|^2 = 3^19 * 7 * 19")

idx = find("M_{15}=")
rows = rows_after(idx, 15, 15, digit)
check_det_sq(rows, 3, 2**22 * 3**20 * 19)
write("m15_3.rum", 3, rows, "record determinant matrix of order 15, |det|^2 = 2^22 * 3^20 * 19")

idx = find("M_{14}=\\left[")
rows = rows_after(idx, 14, 14, digit)
check_det_sq(rows, 3, 2**24 * 3**13 * 223)
write("m14_3.rum", 3, rows, "record determinant matrix of order 14, |det|^2 = 2^24 * 3^13 * 223")

idx = find("M_{16}=\\left[")
rows = rows_after(idx, 16, 16, digit)
check_det_sq(rows, 3, 2**24 * 3**23 * 7)
write("m16_3.rum", 3, rows, "record determinant matrix of order 16, |det|^2 = 2^24 * 3^23 * 7")

# ---- Matrices over the fourth roots -----------------------------------------
idx = find("B_9=")
rows = rows_after(idx, 9, 9, digit)
check_gram(rows, 4, barba(9))
write("b9_4.rum", 4, rows, "Barba matrix of order 9 over the fourth roots")

idx = find("B_{15}=")
rows = rows_after(idx, 15, 15, digit)
check_gram(rows, 4, barba(15))
write("b15_4.rum", 4, rows, "Barba matrix of order 15 over the fourth roots")

idx = find("M_{11}=", find("Wagner reported"))
rows = rows_after(idx, 11, 11, digit)
z = to_complex(rows, 4)
d = abs(np.linalg.det(z)) ** 2
print(f"m11_4 |det|^2 = {d:.1f}")
check_det_sq(rows, 4, 2**12 * 5**11)
write("m11_4.rum", 4, rows, "record determinant matrix of order 11 over the fourth roots")

# ---- Symmetric BH(6,3) and the GW(15,12;6) from its exterior square ---------
idx = find("\\begin{bmatrix}", find("the symmetric $BH(6,3)$ matrix"))
rows = rows_after(idx - 1, 6, 6, omega_tok)
check_gram(rows, 3, hadamard(6))
write("bh6_3_sym.rum", 3, rows, "symmetric BH(6,3) matrix")

idx = find("\\wedge^2 H=\\left[\\begin{smallmatrix}")
rows = rows_after(idx, 15, 15, sixth_tok)
check_gram(rows, 6, lambda i, j: 12 if i == j else 0)
for r in rows:
    assert sum(1 for e in r if e is None) == 3
write("gw15_12_6.rum", 6, rows, "GW(15,12;6) generalised weighing matrix", weighing=True)

print("all corpus matrices validated")
