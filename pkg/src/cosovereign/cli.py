"""Command line interface: ``verify``, ``build`` and ``dims``.

Exit codes: 0 all checks pass, 1 some check fails, 2 no failure but some
check is still inconclusive at the degree cap, 3 input error.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

import click

from . import cobraid, corep, forms, hopf_fd, hopf_pres, serialize, sle
from .exactmath import Matrix, Scalar, format_scalar, mat_inverse, rational_functions
from .ncalg import DegreeExceeded, Status, Verdict

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3


class UnknownLabel(KeyError):
    pass


class NotSovereign(ValueError):
    pass


# ---------------------------------------------------------------------------
# degree escalation


def escalate(check: Callable[[int | None], Verdict], start: int | None, cap: int, auto: int | None = None) -> Verdict:
    """Run ``check`` at ``start`` (or ``auto``), then at +2 steps while inconclusive.

    The last step is clamped to ``cap``, so the cap itself is always tried.
    """
    d = start if start is not None else auto
    while True:
        try:
            v = check(d)
        except DegreeExceeded as e:
            if e.needed is not None and e.needed <= cap and (d is None or e.needed > d):
                d = e.needed
                continue
            return Verdict.inconclusive(degree=d, witness=f"needs degree {e.needed}")
        if v.status is Status.INCONCLUSIVE:
            cur = v.degree if v.degree is not None else d
            if cur is not None and cur < cap:
                d = min(cur + 2, cap)
                continue
        return v


# ---------------------------------------------------------------------------
# reports


WITNESS_CHARS = 2000


def _short(text: str, limit: int) -> str:
    return text if len(text) <= limit else text[:limit] + f"... ({len(text)} chars)"


def _plain(x) -> Any:
    if x is None or isinstance(x, (bool, int)):
        return x
    if isinstance(x, str):
        return _short(x, WITNESS_CHARS)
    if isinstance(x, Scalar):
        return format_scalar(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)


@dataclass
class Entry:
    name: str
    verdict: Verdict
    values: dict | None = None

    @property
    def status(self) -> str:
        return "Pass" if self.verdict.ok else self.verdict.status.value

    def as_json(self) -> dict:
        out = {"check": self.name, "status": self.status, "degree": self.verdict.degree,
               "witness": _plain(self.verdict.witness)}
        if self.values is not None:
            out["values"] = _plain(self.values)
        return out


@dataclass
class Report:
    object: str
    kind: str
    entries: list[Entry] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def summary(self) -> dict:
        out = {"Pass": 0, "Fail": 0, "Inconclusive": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        s = self.summary()
        if s["Fail"]:
            return EXIT_FAIL
        if s["Inconclusive"]:
            return EXIT_INCONCLUSIVE
        return EXIT_PASS

    def verdict_of(self, name: str) -> Verdict:
        for e in self.entries:
            if e.name == name:
                return e.verdict
        raise KeyError(name)

    def as_json(self) -> dict:
        return {"object": self.object, "kind": self.kind, "checks": [e.as_json() for e in self.entries],
                "info": _plain(self.info), "summary": self.summary(), "exit_code": self.exit_code}

    def text(self) -> str:
        lines = [f"object: {self.object} ({self.kind})"]
        for e in self.entries:
            d = f" D={e.verdict.degree}" if e.verdict.degree is not None else ""
            extra = ""
            if e.values is not None:
                extra = "  " + ", ".join(f"{k}: {_plain(v)}" for k, v in e.values.items())
            elif not e.verdict.ok and e.verdict.witness is not None:
                extra = "  witness: " + _short(str(_plain(e.verdict.witness)), 160)
            lines.append(f"{e.status.upper():<13} {e.name}{d}{extra}")
        for k, v in self.info.items():
            lines.append(f"info: {k} = {_plain(v)}")
        s = self.summary()
        lines.append(f"summary: {s['Pass']} pass, {s['Fail']} fail, {s['Inconclusive']} inconclusive")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# labels


def characters_of(wb: serialize.Workbench) -> dict[str, forms.GenCharacter]:
    out = {}
    if wb.kind == "hf_matrix":
        out["Phi_F"] = wb.source.char
    elif wb.kind == "sle_tensor" and wb.source.char is not None:
        out["Phi_beta"] = wb.source.char
    out.update(wb.characters)
    return out


def coreps_of(wb: serialize.Workbench, with_trivial: bool = False) -> dict[str, corep.MatrixCorep]:
    out = {}
    if wb.kind == "hf_matrix":
        out["u"], out["v"] = wb.source.corep_u, wb.source.corep_v
    elif wb.kind == "sle_tensor":
        out["a"] = wb.source.corep_a
    elif wb.kind == "finite_hopf":
        out["regular"] = corep.regular_corep(wb.hopf)
    out.update(wb.coreps)
    if with_trivial:
        out["trivial"] = corep.trivial_corep(wb.hopf)
    return out


def cobraiding_of(wb: serialize.Workbench) -> cobraid.Cobraiding | None:
    c = wb.cobraiding
    if c is None:
        return None
    if "table" in c:
        return cobraid.Cobraiding(wb.hopf, c["table"], c.get("inverse_table"), "cobraiding")
    return cobraid.sweedler_cobraiding(wb.hopf, c["sweedler_parameter"].to_fraction())


# ---------------------------------------------------------------------------
# the suite


def run_suite(wb: serialize.Workbench, degree: int | None = None, cap: int | None = None) -> Report:
    A = wb.hopf
    start = degree if degree is not None else wb.degree_bound
    cap = wb.degree_cap if cap is None else cap
    if start is not None:
        cap = max(cap, start)
    rep = Report(A.name or wb.kind, wb.kind)

    def run(name, fn, auto=None, values=None) -> Verdict:
        v = escalate(fn, start, cap, auto).renamed(name)
        rep.entries.append(Entry(name, v, values))
        return v

    def fixed(name, v: Verdict, values=None):
        rep.entries.append(Entry(name, v.renamed(name), values))
        return v

    pres = wb.kind != "finite_hopf"
    if not pres:
        for v in hopf_fd.verify_all(A):
            fixed(f"hopf.{v.name.removeprefix('verify_')}", v)
        rep.info["involutory"] = hopf_fd.is_involutory(A)
    else:
        if wb.kind == "sle_tensor":
            nd = sle.check_nondegenerate(wb.source.E)
            fixed("sle.nondegenerate", Verdict.passed() if all(nd.values()) else Verdict.fail(witness=nd))
            b = wb.source.beta
            rep.info["beta"] = [format_scalar(x) for x in b] if b is not None else None
        checks = [("comult_well_defined", hopf_pres.check_comult_well_defined),
                  ("counit_well_defined", hopf_pres.check_counit_well_defined),
                  ("antipode_well_defined", hopf_pres.check_antipode_well_defined)]
        if A.antipode_inv is not None:
            checks.append(("antipode_inv_well_defined", hopf_pres.check_antipode_inv_well_defined))
        checks.append(("antipode_axiom", hopf_pres.check_antipode_axiom))
        if A.antipode_inv is not None:
            checks.append(("antipode_inverse", hopf_pres.check_antipode_inverse))
        for name, fn in checks:
            run(f"hopf.{name}", lambda d, fn=fn: fn(A, d), auto=2)
        if wb.kind == "sle_tensor":
            run("sle.inverse_relations", lambda d: sle.check_inverse_relations(wb.source, d), auto=wb.source.E.N + 1)
        for label, g in wb.sovereign_elements.items():
            run(f"group_like[{label}]", lambda d, g=g: hopf_pres.check_group_like(A, g, d), auto=2)
            run(f"sovereign_element[{label}]", lambda d, g=g: hopf_pres.check_sovereign_element(A, g, d), auto=2)

    chars = characters_of(wb)
    sovereign = []
    for label, phi in chars.items():
        c = fixed(f"character[{label}]", forms.check_character(A, phi))
        s = run(f"verify_sovereign[{label}]", lambda d, phi=phi: forms.verify_sovereign(A, phi, d))
        run(f"verify_remark_38[{label}]", lambda d, phi=phi: forms.verify_remark_38(A, phi, d))
        if c.ok and s.ok:
            sovereign.append(label)

    reps = coreps_of(wb)
    for label, V in reps.items():
        run(f"corep[{label}]", lambda d, V=V: corep.verify_corep(V, d))
    for cl in sovereign:
        phi = chars[cl]
        for label, V in reps.items():
            def iso(d, V=V, phi=phi):
                try:
                    corep.sovereign_iso(V, phi, d)
                except corep.IntertwinerCheckFailed as e:
                    return Verdict.fail(witness=str(e))
                P = Matrix.from_rows(A.field, [[forms.evaluate(A, phi, V[j, i]) for j in range(V.size)]
                                               for i in range(V.size)])
                return corep.check_intertwiner(corep.right_dual(V), corep.left_dual(V), P, d)
            run(f"sovereign_iso[{label},{cl}]", iso)
            dp = corep.dims(V, phi)
            fixed(f"dims[{label},{cl}]", Verdict.passed(), {"left": dp.left, "right": dp.right})
        if reps:
            run(f"dim_properties[{cl}]", lambda d, phi=phi: corep.check_dim_properties(list(reps.values()), phi,
                                                                                     degree=d))
    if wb.kind == "hf_matrix" and "Phi_F" in sovereign:
        F = wb.source.F
        want = (F.trace(), mat_inverse(F).trace())
        got = corep.dims(wb.source.corep_u, wb.source.char)
        fixed("trace_formula[u]", Verdict.passed() if (got.left, got.right) == want
              else Verdict.fail(witness=(got.left, got.right)), {"trace_F": want[0], "trace_F_inv": want[1]})
        rep.info["trace_zero"] = (not want[0]) or (not want[1])

    sigma = cobraiding_of(wb)
    if sigma is not None:
        run("cobraiding", lambda d: cobraid.check_cobraiding(sigma, d), auto=2)
        run("lambda_beta", lambda d: cobraid.check_lambda_beta(sigma, d), auto=2)
        run("S2_beta_lambda", lambda d: cobraid.check_S2_beta_lambda(sigma, d))
        run("lemma_A2", lambda d: cobraid.check_lemma_A2(sigma, d), auto=2)
        run("A5_A7", lambda d: cobraid.check_A5_A7(sigma, d), auto=2)
        for cl in sovereign:
            run(f"thm_A3[{cl}]", lambda d, cl=cl: cobraid.check_thm_A3(chars[cl], sigma, d), auto=2)
        cot = _cotwist(wb, sigma, chars)
        if cot is not None:
            run("cotwist", lambda d: cobraid.check_cotwist(cot, sigma, d), auto=2)

            def backward(d):
                phi = cobraid.thm_A3_backward(cot, sigma, "recovered")
                return Verdict.combine("", [forms.check_character(A, phi), forms.verify_sovereign(A, phi, d)])
            run("cotwist_backward", backward)
    return rep


def _cotwist(wb, sigma, chars):
    c = wb.cotwist
    if c is None:
        return None
    if "from_character" in c:
        label = c["from_character"]
        if label not in chars:
            raise UnknownLabel(f"unknown character {label!r}")
        return cobraid.thm_A3_forward(chars[label], sigma)
    A = wb.hopf
    return cobraid.CotwistData(cobraid.table_form(A, c["values"], "tau"),
                               cobraid.table_form(A, c["inverse_values"], "tau^-1"), "tau")


# ---------------------------------------------------------------------------
# builders


def build_workbench(kind: str, n: int | None = None, N: int | None = None, F_text: str | None = None,
                    E_text: str | None = None, field_text: str = "QQ(q)", presented: bool = False,
                    parameter: str = "1", sqrt_q: bool = False, method: str = "minnorm") -> serialize.Workbench:
    """The object of the given kind, with its intrinsic characters and coreps made explicit."""
    if kind == "hf":
        if F_text is None:
            raise click.BadParameter("hf needs --F")
        doc = {"field": field_text, "hf_matrix": {"F": _json_arg(F_text, "--F")}}
        return serialize.from_document(doc)
    if kind == "sle":
        if E_text is None or n is None or N is None:
            raise click.BadParameter("sle needs --n, --N and --E")
        doc = {"field": field_text, "sle_tensor": {"n": n, "N": N, "E": _json_arg(E_text, "--E"), "method": method}}
        return serialize.from_document(doc)
    if kind == "eq":
        if n is None:
            raise click.BadParameter("eq needs --n")
        if sqrt_q:
            Ft = rational_functions("t")
            E = sle.build_Eq(n, N, Ft, Ft.gen() ** 2)
        else:
            E = sle.build_Eq(n, N, serialize.field_from_text(field_text))
        S = sle.build_SLE(E, method)
        wb = serialize.Workbench(E.field, "sle_tensor", S.hopf, S, params={"E": E, "method": method})
        if sqrt_q:
            if n != 2 or E.N != 2:
                raise click.BadParameter("--sqrt-q cobraiding is available for n = N = 2")
            sols, _ = cobraid.solve_cobraidings(S.hopf)
            sigma = None
            for sol in sols:
                cand = cobraid.cobraiding_from_solution(S.hopf, sol)
                if cand.table[("a11", "a11")] == Ft.gen():
                    sigma = cand
            wb.cobraiding = {"table": sigma.table}
            wb.cotwist = {"from_character": "Phi_beta"}
        return wb
    if kind == "hn":
        if n is None:
            raise click.BadParameter("hn needs --n")
        A = hopf_pres.builtin_Hn(n)
        wb = serialize.Workbench(A.field, "presentation_hopf", A)
        wb.sovereign_elements["Phi_inv"] = A.sovereign_element
        X = A["X1"]
        wb.coreps["X1"] = corep.MatrixCorep(A, [[A.algebra_one(), X], [X.zero(), A["Phi"]]], "X1")
        return wb
    if kind == "sweedler":
        A = hopf_pres.builtin_sweedler_presented() if presented else hopf_fd.builtin_sweedler()
        kind_name = "presentation_hopf" if presented else "finite_hopf"
        wb = serialize.Workbench(A.field, kind_name, A)
        if presented:
            wb.characters["Phi"] = forms.make_character(A, {"g": -1, "x": 0}, "Phi")
            wb.coreps["V"] = corep.MatrixCorep(A, [[A.algebra_one(), A["x"]], [A["x"].zero(), A["g"]]], "V")
        else:
            wb.characters["Phi"] = forms.make_character(A, {"1": 1, "g": -1, "x": 0, "gx": 0}, "Phi")
        wb.cobraiding = {"sweedler_parameter": serialize._scalar(A.field, parameter)}
        wb.cotwist = {"from_character": "Phi"}
        return wb
    raise click.BadParameter(f"unknown kind {kind!r}")


def _json_arg(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise click.BadParameter(f"{flag} must be JSON: {e}") from None


# ---------------------------------------------------------------------------
# commands

INPUT_ERRORS = (serialize.ParseError, serialize.SchemaError, UnknownLabel, click.BadParameter, OSError)


def _load(path: str) -> serialize.Workbench:
    with open(path, encoding="utf-8") as fh:
        return serialize.load(fh.read())


def _input_error(e: Exception) -> None:
    click.echo(f"input error: {type(e).__name__}: {e}", err=True)
    sys.exit(EXIT_INPUT)


@click.group()
def main():
    """Exact verification of sovereign structures on Hopf algebras."""


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--degree", type=click.IntRange(min=0), default=None, help="Starting degree bound (default: automatic).")
@click.option("--cap", type=click.IntRange(min=0), default=None, help="Degree cap for escalation (default: from file, else 6).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def verify(file, degree, cap, fmt):
    """Run the verification suite on FILE."""
    try:
        wb = _load(file)
        rep = run_suite(wb, degree, cap)
    except INPUT_ERRORS as e:
        _input_error(e)
    click.echo(json.dumps(rep.as_json(), sort_keys=True, indent=2) if fmt == "json" else rep.text())
    sys.exit(rep.exit_code)


@main.command()
@click.argument("kind", type=click.Choice(["hf", "sle", "eq", "hn", "sweedler"]))
@click.option("--n", type=int, default=None)
@click.option("--N", "N", type=int, default=None)
@click.option("--F", "F_text", default=None, help='JSON matrix, e.g. \'[["1","0"],["0","q"]]\'.')
@click.option("--E", "E_text", default=None, help="JSON list of n^N scalars, last index fastest.")
@click.option("--field", "field_text", default="QQ(q)", show_default=True)
@click.option("--method", type=click.Choice(["minnorm", "particular"]), default="minnorm", show_default=True)
@click.option("--presented", is_flag=True, help="Sweedler by generators and relations.")
@click.option("--parameter", default="1", show_default=True, help="Free value sigma(x, x) of the Sweedler cobraiding.")
@click.option("--sqrt-q", is_flag=True, help="eq over Q(t) with q = t^2, with a solved cobraiding (n = 2).")
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
def build(kind, n, N, F_text, E_text, field_text, method, presented, parameter, sqrt_q, output):
    """Write a self-contained input file for a built object."""
    try:
        wb = build_workbench(kind, n, N, F_text, E_text, field_text, presented, parameter, sqrt_q, method)
        text = serialize.canonical(wb)
    except INPUT_ERRORS + (ValueError,) as e:
        _input_error(e)
    with open(output, "w", encoding="utf-8") as fh:
        fh.write(text)
    click.echo(f"wrote {output}")


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--corep", "corep_label", required=True)
@click.option("--char", "char_label", required=True)
@click.option("--degree", type=click.IntRange(min=0), default=None)
@click.option("--cap", type=click.IntRange(min=0), default=None)
def dims(file, corep_label, char_label, degree, cap):
    """Print the left and right sovereign dimensions of a corep."""
    try:
        wb = _load(file)
        chars = characters_of(wb)
        chars.setdefault("epsilon", forms.counit_character(wb.hopf))
        reps = coreps_of(wb, with_trivial=True)
        if char_label not in chars:
            raise UnknownLabel(f"unknown character {char_label!r}; known: {sorted(chars)}")
        if corep_label not in reps:
            raise UnknownLabel(f"unknown corep {corep_label!r}; known: {sorted(reps)}")
    except INPUT_ERRORS as e:
        _input_error(e)
    phi = chars[char_label]
    c = cap if cap is not None else wb.degree_cap
    v = escalate(lambda d: forms.verify_sovereign(wb.hopf, phi, d), degree, c)
    if not v.ok:
        click.echo(f"NotSovereign: {char_label} gives {v.status.value} in verify_sovereign", err=True)
        sys.exit(EXIT_FAIL if v.failed else EXIT_INCONCLUSIVE)
    d = corep.dims(reps[corep_label], phi)
    click.echo(f"left: {format_scalar(d.left)}, right: {format_scalar(d.right)}")
    sys.exit(EXIT_PASS)


if __name__ == "__main__":
    main()
