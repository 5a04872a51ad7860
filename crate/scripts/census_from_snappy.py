#!/usr/bin/env python3
"""Export the 1-cusped orientable census (at most 9 tetrahedra) as manifolds.csv.

Cusp translations are those of the maximal cusp neighbourhood. The
knot_exterior column is true when some short slope with trivial H_1 gives
a filling whose fundamental group simplifies to the trivial group.

Rerunning on an existing file resumes after its last row.

Usage: python3 scripts/census_from_snappy.py data/census/manifolds.csv
"""
import csv
import math
import os
import sys
import warnings

warnings.filterwarnings("ignore")
import snappy  # noqa: E402


def short_slopes(m, l, bound=6.0):
    # brute force over a generous box; census cusps are never that skew
    area = abs((m.conjugate() * l).imag)
    shortest = min(abs(m), abs(l), abs(m + l), abs(m - l))
    box = int(math.ceil(bound * max(abs(m), abs(l)) / area)) + 1
    for q in range(0, box + 1):
        for p in range(-box, box + 1):
            if q == 0 and p <= 0:
                continue
            if math.gcd(p, q) != 1:
                continue
            if abs(p * m + q * l) <= bound + 1e-9:
                yield (p, q)


def is_s3_knot_exterior(M, m, l):
    if str(M.homology()) != "Z":
        return False
    for s in short_slopes(m, l):
        N = M.copy()
        N.dehn_fill(s)
        if str(N.homology()) != "0":
            continue
        if N.fundamental_group().num_generators() == 0:
            return True
    return False


def translations(M):
    # the kernel's cusp neighborhood, expanded until it first touches itself
    try:
        C = M.cusp_neighborhood()
        C.set_displacement(C.stopping_displacement())
        return C.translations()
    except Exception:
        pass
    # otherwise the verified tiling; some triangulations have negatively
    # oriented tetrahedra or defeat it at double precision, so retriangulate
    # and then retry in high precision
    N = M.copy()
    for _ in range(50):
        try:
            return N.cusp_translations()[0]
        except Exception:
            N.randomize()
    H = snappy.ManifoldHP(M)
    for _ in range(50):
        try:
            return H.cusp_translations()[0]
        except Exception:
            H.randomize()
    raise RuntimeError("no usable triangulation found for " + M.name())


def main(out_path):
    done = set()
    if os.path.exists(out_path):
        with open(out_path, newline="") as fh:
            done = {row["name"] for row in csv.DictReader(fh)}
    rows = len(done)
    with open(out_path, "a" if done else "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if not done:
            w.writerow(["name", "tets", "m_re", "m_im", "l_re", "l_im", "knot_exterior"])
        for M in snappy.OrientableCuspedCensus(cusps=1):
            tets = M.num_tetrahedra()
            if tets > 9:
                break
            if M.name() in done:
                continue
            m, l = translations(M)
            m, l = complex(m), complex(l)
            knot = is_s3_knot_exterior(M, m, l)
            w.writerow([M.name(), tets, repr(m.real), repr(m.imag), repr(l.real),
                        repr(l.imag), "true" if knot else "false"])
            rows += 1
            if rows % 1000 == 0:
                fh.flush()
                print(rows, M.name(), file=sys.stderr, flush=True)
    print("wrote", rows, "rows", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1])
