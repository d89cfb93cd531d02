"""Command line front end.

Subcommands: certify, envelope, root, coeffs, gram, region, dump.  Exit
codes: 0 success (for certify: certified), 1 not certified, 2 bad input.
All numbers are printed to 12 significant digits and identical inputs give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .certify import (
    InputError,
    certify_system,
    deviation_budget,
    deviation_cap,
    parse_system,
)
from .eigenfunction import build, to_record
from .envelope import envelope, envelope_root
from .fourier import CoefficientQuery, coefficient, quadrature_coefficient
from .gram import gram_matrix, gram_witness
from .quadrature import QuadratureError
from .spectrum import (
    FucikPoint,
    SpectrumError,
    point_from_gamma,
    solve_beta,
    solve_alpha,
)


def _fmt(value: float) -> str:
    return format(float(value), ".12g")


def _round12(obj):
    """Round every float in a JSON-ready structure to 12 significant digits."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {key: _round12(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(val) for val in obj]
    return obj


def _print_json(data: dict) -> None:
    print(json.dumps(_round12(data), sort_keys=True, indent=2))


def _write_rows(rows, path: str | None) -> None:
    text = "\n".join(",".join(row) for row in rows) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _load_system(path: str, mode: str | None, split: str | None):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise InputError("system file must hold a JSON object")
    if mode is not None:
        data["mode"] = mode
    if split is not None:
        if split in ("auto", "default"):
            data["split"] = split
        else:
            try:
                data["split"] = [int(tok) for tok in split.split(",") if tok]
            except ValueError:
                raise InputError(
                    'split must be "auto", "default", or comma-separated integers'
                ) from None
    return parse_system(data)


def _cmd_certify(args) -> int:
    spec = _load_system(args.spec, args.mode, args.split)
    cert = certify_system(spec)
    _print_json(cert.as_dict())
    return 0 if cert.passed else 1


def _cmd_envelope(args) -> int:
    ev = envelope(args.gamma)
    for k, term in enumerate(ev.summands[:4], start=1):
        print(f"summand_k{k} = {_fmt(term)}")
    print(f"summand_tail = {_fmt(ev.summands[4])}")
    print(f"tail_method = {ev.tail_method}")
    print(f"value = {_fmt(ev.value)}")
    return 0


def _cmd_root(args) -> int:
    print(_fmt(envelope_root()))
    return 0


def _cmd_coeffs(args) -> int:
    if args.kmax < 1:
        raise InputError("kmax must be at least 1")
    p = point_from_gamma(2, args.gamma)
    rows = [("k", "coefficient", "reflected_coefficient", "quadrature", "abs_error")]
    for k in range(1, args.kmax + 1):
        direct = coefficient(CoefficientQuery(args.gamma, k))
        reflected = coefficient(CoefficientQuery(args.gamma, k, branch="beta-major"))
        quad = quadrature_coefficient(p, k)
        rows.append(
            (str(k), _fmt(direct), _fmt(reflected), _fmt(quad), _fmt(abs(direct - quad)))
        )
    _write_rows(rows, args.csv)
    return 0


def _cmd_gram(args) -> int:
    spec = _load_system(args.spec, None, None)
    rescale = not args.no_rescale
    matrix = gram_matrix(spec, args.n, rescale=rescale)
    witness = gram_witness(spec, args.n, rescale=rescale, matrix=matrix)
    _print_json(witness.as_dict())
    if args.csv is not None:
        rows = [tuple(_fmt(v) for v in row) for row in matrix]
        _write_rows(rows, args.csv)
    return 0


def _even_arc(n: int, sup: float, resolution: int):
    if sup <= 4.0:
        a = float(n * n)
        return [(a, a)]
    pts = []
    for i in range(resolution):
        gamma = 4.0 + (sup - 4.0) * i / (resolution - 1)
        alpha = gamma * n * n / 4.0
        pts.append((alpha, solve_beta(n, alpha)))
    return pts


def _odd_arcs(n: int, epsilon: float, budget: float, resolution: int):
    cap = deviation_cap(n, epsilon, budget)
    floor = float(n * n)
    if cap <= floor * (1.0 + 1e-14):
        return [(floor, floor)], None
    major = [floor + (cap - floor) * i / (resolution - 1) for i in range(resolution)]
    alpha_side = [(a, solve_beta(n, a)) for a in major]
    beta_side = [(solve_alpha(n, b), b) for b in major]
    return alpha_side, beta_side


def region_rows(
    sup: float,
    nmax: int = 9,
    resolution: int = 100,
    epsilon: float | None = None,
) -> list[tuple[str, float, float]]:
    """Polyline data of the admissible region: sector lines and curve arcs.

    Even curves carry the arc with dilation parameter up to sup; with an
    epsilon the odd curves up to nmax carry their admissible segments around
    the symmetric points under the total deviation budget.  At sup = 4 the
    sector collapses to the diagonal and arcs degenerate to single points.
    """
    sup = float(sup)
    root = envelope_root()
    if not 4.0 <= sup <= root:
        raise InputError(
            f"sup must lie in [4, {root:.6f}], the certifiable range"
        )
    if isinstance(nmax, bool) or not isinstance(nmax, int) or nmax < 2:
        raise InputError("nmax must be an integer >= 2")
    if isinstance(resolution, bool) or not isinstance(resolution, int) or resolution < 2:
        raise InputError("resolution must be an integer >= 2")

    arcs: list[tuple[str, list]] = []
    for n in range(2, nmax + 1, 2):
        pts = _even_arc(n, sup, resolution)
        arcs.append((f"even-{n}-alpha", pts))
        if len(pts) > 1:
            arcs.append((f"even-{n}-beta", [(b, a) for a, b in pts]))
    if epsilon is not None:
        epsilon = float(epsilon)
        if not epsilon > 0.0 or not math.isfinite(epsilon):
            raise InputError("epsilon must be positive")
        # at sup equal to the envelope root the budget vanishes exactly
        budget = 0.0 if sup >= root else deviation_budget(epsilon, sup)
        for n in range(3, nmax + 1, 2):
            alpha_side, beta_side = _odd_arcs(n, epsilon, budget, resolution)
            arcs.append((f"odd-{n}-alpha", alpha_side))
            if beta_side is not None:
                arcs.append((f"odd-{n}-beta", beta_side))

    extent = max(max(a, b) for _, pts in arcs for a, b in pts)
    slope = 1.0 / (math.sqrt(sup) - 1.0) ** 2
    rows = [
        ("sector-alpha", 0.0, 0.0),
        ("sector-alpha", extent, slope * extent),
        ("sector-beta", 0.0, 0.0),
        ("sector-beta", slope * extent, extent),
    ]
    for cid, pts in arcs:
        rows.extend((cid, a, b) for a, b in pts)
    return rows


def _write_svg(path: str, rows) -> None:
    groups: list[tuple[str, list]] = []
    for cid, a, b in rows:
        if not groups or groups[-1][0] != cid:
            groups.append((cid, []))
        groups[-1][1].append((a, b))
    extent = max(max(a, b) for _, pts in groups for a, b in pts)
    extent = max(extent, 1.0)
    size, margin = 640, 48
    scale = (size - 2 * margin) / extent

    def x(a: float) -> float:
        return margin + a * scale

    def y(b: float) -> float:
        return size - margin - b * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{margin}" y1="{size - margin}" x2="{size - margin}" '
        f'y2="{size - margin}" stroke="#444444"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{size - margin}" stroke="#444444"/>',
    ]
    for cid, pts in groups:
        if cid.startswith("sector"):
            color = "#999999"
        elif cid.startswith("even"):
            color = "#000000"
        else:
            color = "#bb2200"
        if len(pts) == 1:
            a, b = pts[0]
            parts.append(
                f'<circle cx="{x(a):.2f}" cy="{y(b):.2f}" r="3" fill="{color}"/>'
            )
        else:
            coords = " ".join(f"{x(a):.2f},{y(b):.2f}" for a, b in pts)
            parts.append(
                f'<polyline points="{coords}" fill="none" stroke="{color}" '
                'stroke-width="1.5"/>'
            )
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(parts) + "\n")


def _cmd_region(args) -> int:
    rows = region_rows(
        args.sup, nmax=args.nmax, resolution=args.resolution, epsilon=args.epsilon
    )
    table = [("curve_id", "alpha", "beta")]
    table.extend((cid, _fmt(a), _fmt(b)) for cid, a, b in rows)
    _write_rows(table, args.csv)
    if args.svg is not None:
        _write_svg(args.svg, rows)
    return 0


def _cmd_dump(args) -> int:
    if args.beta is None:
        point = FucikPoint(args.n, args.alpha, solve_beta(args.n, args.alpha))
    else:
        point = FucikPoint(args.n, args.alpha, args.beta)
    record = to_record(build(point))
    _print_json(record)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fucik",
        description="Certify asymmetric-oscillation systems as Riesz bases "
        "of L2(0, pi) and inspect the machinery behind the criterion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="run the sufficient criterion on a system file")
    c.add_argument("--spec", required=True, help="path of the system JSON file")
    c.add_argument(
        "--mode",
        choices=("exact", "bound"),
        help="override the file: quadrature defects or closed-form majorants",
    )
    c.add_argument(
        "--split",
        help='override the file: "default", "auto", or comma-separated even indices',
    )
    c.set_defaults(handler=_cmd_certify)

    e = sub.add_parser("envelope", help="evaluate the coefficient envelope")
    e.add_argument("--gamma", type=float, required=True)
    e.set_defaults(handler=_cmd_envelope)

    r = sub.add_parser("root", help="where the envelope reaches 1")
    r.set_defaults(handler=_cmd_root)

    k = sub.add_parser("coeffs", help="coefficient table with quadrature cross-check")
    k.add_argument("--gamma", type=float, required=True)
    k.add_argument("--kmax", type=int, default=20)
    k.add_argument("--csv", help="write the table here instead of stdout")
    k.set_defaults(handler=_cmd_coeffs)

    g = sub.add_parser("gram", help="truncated Gram-matrix eigenvalue witness")
    g.add_argument("--spec", required=True, help="path of the system JSON file")
    g.add_argument("--n", type=int, required=True, help="truncation size")
    g.add_argument("--no-rescale", action="store_true")
    g.add_argument("--csv", help="also write the full matrix here")
    g.set_defaults(handler=_cmd_gram)

    m = sub.add_parser("region", help="emit admissible-region polylines")
    m.add_argument("--sup", type=float, required=True, help="dilation-parameter cap")
    m.add_argument("--nmax", type=int, default=9)
    m.add_argument("--resolution", type=int, default=100)
    m.add_argument(
        "--epsilon", type=float, help="also emit odd-index segments for this decay"
    )
    m.add_argument("--csv", help="write rows here instead of stdout")
    m.add_argument("--svg", help="also render a static figure here")
    m.set_defaults(handler=_cmd_region)

    d = sub.add_parser("dump", help="print one profile as JSON")
    d.add_argument("n", type=int)
    d.add_argument("alpha", type=float)
    d.add_argument("beta", type=float, nargs="?")
    d.set_defaults(handler=_cmd_dump)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ArithmeticError, QuadratureError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
