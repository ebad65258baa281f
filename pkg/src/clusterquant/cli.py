"""Command line interface.

Exit codes: 0 success, 2 malformed input, 3 rank deficient (no quantisation
exists), 4 incompatible pair.  Indices on the command line and in printed
output are 1-based.
"""

import argparse
import json
import os
import random
import sys

from .errors import IncompatibleError, NoQuantisationError
from .exchange import mutate_matrix
from .io import DocumentError, exchange_from_document, load_document, matrix_document, matrix_from_document
from .minors import choose_frame, homogeneous_basis
from .pfaffian import full_rank_report
from .quantizer import build_quantisation, check_compatible, complete_basis
from .torus import mutate_lambda

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_RANK = 3
EXIT_INCOMPATIBLE = 4

SEED_ENV = "CLUSTERQUANT_SEED"


def _emit(args, structured, text):
    if args.format == "structured":
        print(json.dumps(structured, indent=2))
    else:
        print(text)


def _fmt(mat):
    return str(mat)


def _parse_int_list(text, what):
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise DocumentError(f"--{what} must be comma-separated integers, got {text!r}")


def _load_exchange(args):
    return exchange_from_document(load_document(args.input))


def _load_lambda(args):
    if not args.lambda_file:
        raise DocumentError("--lambda FILE is required")
    mat, _ = matrix_from_document(load_document(args.lambda_file), key="lambda")
    return mat


def cmd_rank(args):
    bt = _load_exchange(args)
    rank, pf = full_rank_report(bt)
    full = rank == bt.n
    verdict = "full rank" if full else "rank deficient"
    text = f"rank {rank} of {bt.n} ({bt.m}x{bt.n}): {verdict}"
    if pf is not None:
        text += f", Pf = {pf}"
    _emit(args, {"rows": bt.m, "cols": bt.n, "rank": rank, "full_rank": full, "pfaffian": pf}, text)
    return EXIT_OK if full else EXIT_RANK


def _no_quantisation(args, exc):
    msg = f"no quantisation exists ({exc})"
    _emit(args, {"error": "no quantisation exists", "rank": exc.rank, "n": exc.n}, msg)
    return EXIT_RANK


def cmd_quantize(args):
    bt = _load_exchange(args)
    d = _parse_int_list(args.d, "d") or None
    try:
        completion = complete_basis(bt)
        pair = build_quantisation(bt, d, completion)
    except NoQuantisationError as exc:
        return _no_quantisation(args, exc)
    except ValueError as exc:
        raise DocumentError(str(exc))
    cols = [j + 1 for j in completion.chosen_indices]
    text = (
        f"Lambda =\n{_fmt(pair.lambda_)}\n"
        f"D' = diag({', '.join(map(str, pair.dprime.diag))})\n"
        f"completion columns: {', '.join(f'e{j}' for j in cols) or '(none)'}"
    )
    structured = {
        "exchange": matrix_document(bt.data),
        "lambda": matrix_document(pair.lambda_),
        "dprime": list(pair.dprime.diag),
        "completion": cols,
    }
    _emit(args, structured, text)
    return EXIT_OK


def cmd_homog_basis(args):
    bt = _load_exchange(args)
    try:
        frame = choose_frame(bt.data)
        sols = homogeneous_basis(bt.data, frame)
    except NoQuantisationError as exc:
        return _no_quantisation(args, exc)
    frame1 = [f + 1 for f in frame.frame]
    blocks = [f"frame F = {{{', '.join(map(str, frame1))}}}", f"{len(sols)} solution(s)"]
    for s in sols:
        blocks.append(f"M_E({s.i + 1},{s.j + 1}) =\n{_fmt(s.matrix)}")
    structured = {
        "frame": frame1,
        "solutions": [{"i": s.i + 1, "j": s.j + 1, "lambda": matrix_document(s.matrix)} for s in sols],
    }
    _emit(args, structured, "\n".join(blocks))
    return EXIT_OK


def _incompatible(args, exc, step=None):
    where = f" after step {step}" if step is not None else ""
    pos = [p + 1 for p in exc.position] if exc.position is not None else None
    msg = f"incompatible{where}: {exc.clause}"
    if pos:
        msg += f" at ({pos[0]},{pos[1]})"
    if exc.detail:
        msg += f" [{exc.detail}]"
    _emit(args, {"compatible": False, "clause": exc.clause, "position": pos, "detail": exc.detail}, msg)
    return EXIT_INCOMPATIBLE


def cmd_verify(args):
    bt = _load_exchange(args)
    lam = _load_lambda(args)
    if lam.shape != (bt.m, bt.m):
        raise DocumentError(f"Lambda must be {bt.m}x{bt.m}, got {lam.rows}x{lam.cols}")
    if args.homogeneous:
        if not lam.is_skew_symmetric():
            return _incompatible(args, IncompatibleError("not-skew"))
        prod = bt.data.T @ lam
        bad = next(((i, j) for i in range(prod.rows) for j in range(prod.cols) if prod[i, j]), None)
        if bad is not None:
            return _incompatible(args, IncompatibleError("homogeneous-nonzero", bad, f"value {prod[bad]}"))
        _emit(args, {"homogeneous": True}, "homogeneous: Bt^T Lambda = 0")
        return EXIT_OK
    try:
        pair = check_compatible(bt, lam)
    except IncompatibleError as exc:
        return _incompatible(args, exc)
    text = f"compatible, D' = diag({', '.join(map(str, pair.dprime.diag))})"
    _emit(args, {"compatible": True, "dprime": list(pair.dprime.diag)}, text)
    return EXIT_OK


def cmd_mutate(args):
    bt = _load_exchange(args)
    lam = _load_lambda(args)
    seq = _parse_int_list(args.sequence, "sequence")
    for k in seq:
        if not 1 <= k <= bt.n:
            raise DocumentError(f"mutation index {k} outside 1..{bt.n}")
    try:
        pair = check_compatible(bt, lam)
    except IncompatibleError as exc:
        return _incompatible(args, exc, step=0)
    for step, k in enumerate(seq, 1):
        lam = mutate_lambda(pair.lambda_, pair.exchange, k - 1)
        bt = mutate_matrix(pair.exchange, k - 1)
        try:
            pair = check_compatible(bt, lam)
        except IncompatibleError as exc:
            return _incompatible(args, exc, step=step)
    text = (
        f"exchange =\n{_fmt(pair.exchange.data)}\nLambda =\n{_fmt(pair.lambda_)}\n"
        f"D' = diag({', '.join(map(str, pair.dprime.diag))})"
    )
    structured = {
        "sequence": seq,
        "exchange": matrix_document(pair.exchange.data),
        "lambda": matrix_document(pair.lambda_),
        "dprime": list(pair.dprime.diag),
    }
    _emit(args, structured, text)
    return EXIT_OK


def cmd_selftest(args):
    from . import sampling
    from .minors import general_solution
    from .pfaffian import pfaffian, pfaffian_via_matchings
    from .linalg import det_exact
    from .torus import initial_seed, mutate_seed

    seed = int(os.environ.get(SEED_ENV, "0"))
    rng = random.Random(seed)
    failures = []
    for _ in range(args.rounds):
        n = rng.choice((2, 4, 6))
        b = sampling.random_skew(n, rng=rng)
        pf = pfaffian(b)
        if pf * pf != det_exact(b) or pf != pfaffian_via_matchings(b):
            failures.append(f"pfaffian {b.tolist()}")
        pair = sampling.random_compatible_pair(rng=rng)
        seeded = initial_seed(pair)
        for k in range(pair.n):
            once = mutate_seed(seeded, k)
            twice = mutate_seed(once, k)
            if twice != seeded or not once.is_q_commutative():
                failures.append(f"mutation k={k + 1} on {pair.exchange.data.tolist()}")
        bt = pair.exchange
        coeffs = [rng.randint(-3, 3) for _ in range((bt.m - bt.n) * (bt.m - bt.n - 1) // 2)]
        if general_solution(bt, coeffs).dprime != pair.dprime:
            failures.append(f"general solution on {bt.data.tolist()}")
    status = "ok" if not failures else "FAILED"
    _emit(
        args,
        {"seed": seed, "rounds": args.rounds, "failures": failures},
        f"selftest seed={seed} rounds={args.rounds}: {status}" + "".join(f"\n  {f}" for f in failures),
    )
    return EXIT_OK if not failures else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="clusterquant", description="Quantisations of cluster algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, lam=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", required=True, help="exchange matrix or quiver document (JSON)")
        if lam:
            p.add_argument("--lambda", dest="lambda_file", required=True, help="Lambda matrix document (JSON)")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.set_defaults(func=func)
        return p

    add("rank", cmd_rank, "rank and Pfaffian of the exchange matrix")
    q = add("quantize", cmd_quantize, "construct a compatible Lambda")
    q.add_argument("--d", help="skew-symmetriser d1,d2,... (default: fundamental)")
    add("homog-basis", cmd_homog_basis, "basis of Bt^T Lambda = 0 from minor matrices")
    mu = add("mutate", cmd_mutate, "mutate a compatible pair", lam=True)
    mu.add_argument("--sequence", default="", help="mutation directions k1,k2,... (1-based)")
    v = add("verify", cmd_verify, "check compatibility of a pair", lam=True)
    v.add_argument("--homogeneous", action="store_true", help="check Bt^T Lambda = 0 instead")

    st = sub.add_parser("selftest", help=f"random property checks (seed from ${SEED_ENV})")
    st.add_argument("--rounds", type=int, default=20)
    st.add_argument("--format", choices=("text", "structured"), default="text")
    st.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
