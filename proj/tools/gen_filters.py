#!/usr/bin/env python3
"""Regenerates src/wavelet/filter_tables.cpp.

Daubechies and Symlet lowpass filters are recomputed by spectral factorization
at 80 digits; the root selection for each order is taken from the published
PyWavelets table so the sign/phase convention is identical. Coiflet and
biorthogonal filters are copied from PyWavelets.

    pip install PyWavelets mpmath
    python3 tools/gen_filters.py > src/wavelet/filter_tables.cpp
"""
import sys

import mpmath as mp
import numpy as np
import pywt

mp.mp.dps = 80


def refine_orthogonal(name, p):
    """High-precision Daubechies-type lowpass whose zeros match pywt's table."""
    ref = np.array(pywt.Wavelet(name).dec_lo)
    # pywt stores dec_lo; its z-transform H(z) = sum h[k] z^-k.
    ref_poly = lambda z: sum(mp.mpf(float(c)) * z ** (-k) for k, c in enumerate(ref))
    # P(y) = sum_{k<p} C(p-1+k, k) y^k, y = (2 - z - 1/z) / 4.
    coeffs = [mp.binomial(p - 1 + k, k) for k in range(p)]
    roots_y = mp.polyroots(list(reversed(coeffs)), maxsteps=500, extraprec=400) if p > 1 else []
    # Zeros far from z = -1 are unambiguous; the rest are resolved by trying
    # every combination against the reference coefficients.
    fixed, ambiguous = [], []
    for y in roots_y:
        s = 2 - 4 * y  # z + 1/z
        disc = mp.sqrt(s * s - 4)
        z1, z2 = (s + disc) / 2, (s - disc) / 2
        a1, a2 = abs(ref_poly(z1)), abs(ref_poly(z2))
        if max(a1, a2) > 1e10 * max(min(a1, a2), mp.mpf(10) ** -30):
            fixed.append(z1 if a1 < a2 else z2)
        else:
            ambiguous.append((y, z1, z2))
    # a conjugate pair of y roots shares one decision
    groups = [(z1, z2, abs(mp.im(y)) > 1e-40) for y, z1, z2 in ambiguous
              if mp.im(y) > 0 or abs(mp.im(y)) <= 1e-40]
    best, best_err = None, None
    for mask in range(1 << len(groups)):
        chosen = list(fixed)
        for gi, (z1, z2, paired) in enumerate(groups):
            pick = z1 if (mask >> gi) & 1 else z2
            chosen.append(pick)
            if paired:
                chosen.append(mp.conj(pick))
        h = build(p, chosen)
        for cand in (h, list(reversed(h))):
            err = max(abs(float(a) - b) for a, b in zip(cand, ref))
            if best_err is None or err < best_err:
                best, best_err = cand, err
    if best_err > 1e-8:
        raise SystemExit(f"{name}: refined filter disagrees with reference ({best_err})")
    return best


def build(p, zeros):
    # H(z) proportional to (1 + z^-1)^p * prod (1 - z_k z^-1)
    poly = [mp.mpc(1)]
    factors = [[mp.mpc(1), mp.mpc(1)]] * p + [[mp.mpc(1), -zk] for zk in zeros]
    for f in factors:
        out = [mp.mpc(0)] * (len(poly) + 1)
        for i, a in enumerate(poly):
            out[i] += a * f[0]
            out[i + 1] += a * f[1]
        poly = out
    h = [mp.re(c) for c in poly]
    scale = mp.sqrt(2) / sum(h)
    return [c * scale for c in h]


def fmt(values):
    return ",\n    ".join(mp.nstr(v, 25, min_fixed=-1, max_fixed=1) if isinstance(v, mp.mpf)
                          else repr(float(v)) for v in values)


def emit_orthogonal(out, prefix, orders, refine):
    for p in orders:
        name = f"{prefix}{p}"
        h = refine(name, p) if refine else [mp.mpf(repr(c)) for c in pywt.Wavelet(name).dec_lo]
        out.append(f"constexpr double k_{name}[] = {{\n    {fmt(h)}}};\n")


def main():
    out = ["// Generated by tools/gen_filters.py. Do not edit by hand.\n",
           '#include "wavelet/filter_tables.hpp"\n',
           "namespace beat::wavelet::tables {\nnamespace {\n"]
    emit_orthogonal(out, "db", range(1, 39), lambda n, p: refine_orthogonal(n, p))
    emit_orthogonal(out, "sym", range(2, 21), lambda n, p: refine_orthogonal(n, p))
    emit_orthogonal(out, "coif", range(1, 18), None)
    bior = ["1.3", "2.2", "2.4", "3.1", "3.3", "4.4", "5.5", "6.8"]
    for b in bior:
        w = pywt.Wavelet(f"bior{b}")
        tag = b.replace(".", "_")
        for part in ("dec_lo", "dec_hi", "rec_lo", "rec_hi"):
            out.append(f"constexpr double k_bior{tag}_{part}[] = {{\n    {fmt(getattr(w, part))}}};\n")
    out.append("}  // namespace\n\n")

    def table(fn, prefix, orders):
        out.append(f"std::span<const double> {fn}(int order) {{\n  switch (order) {{\n")
        for p in orders:
            out.append(f"    case {p}: return k_{prefix}{p};\n")
        out.append("    default: return {};\n  }\n}\n\n")

    table("daubechies", "db", range(1, 39))
    table("symlets", "sym", range(2, 21))
    table("coiflets", "coif", range(1, 18))
    out.append("BiorthogonalBank biorthogonal(int major, int minor) {\n")
    for b in bior:
        tag = b.replace(".", "_")
        ma, mi = b.split(".")
        out.append(f"  if (major == {ma} && minor == {mi})\n"
                   f"    return {{k_bior{tag}_dec_lo, k_bior{tag}_dec_hi, k_bior{tag}_rec_lo, k_bior{tag}_rec_hi}};\n")
    out.append("  return {};\n}\n\n}  // namespace beat::wavelet::tables\n")
    sys.stdout.write("".join(out))


if __name__ == "__main__":
    main()
