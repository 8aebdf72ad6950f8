import io
import json

import pytest
from hypothesis import given, settings, strategies as st

from chernsub import theorems
from chernsub.cli import (build_matrix, emit_json, report_from_json, report_to_json, run,
                          run_cases)
from chernsub.expr import (BoundError, ParseError, PartitionExpr, ManifoldExpr, parse,
                           parse_bundle, parse_manifold, parse_partition)
from chernsub.geommodel import Bundle, ProjProduct


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    assert parse("CP(2)*CP(1)").model() == ProjProduct((2, 1))
    assert parse("m[2,1]") == PartitionExpr((2, 1), "m")
    assert parse("m[2,1]").partition == (2, 1)
    assert parse("pt") == ManifoldExpr(())
    with pytest.raises(ParseError):
        parse("CP(-1)")


def test_parse_error_offsets():
    with pytest.raises(ParseError) as info:
        parse_manifold("CP(2)*CQ(1)")
    assert info.value.offset == 6
    with pytest.raises(ParseError) as info:
        parse_bundle("tau + ")
    assert info.value.offset == 6
    # offsets count bytes, not characters
    with pytest.raises(ParseError) as info:
        parse_bundle("tau + é")
    assert info.value.offset == 6
    with pytest.raises(ParseError) as info:
        parse_bundle("O(1) é")
    assert info.value.offset == 5


def test_dimension_bound():
    with pytest.raises(BoundError):
        parse_manifold("CP(5)*CP(4)")
    assert parse_manifold("CP(5)*CP(4)", max_dim=9).model().n == 9


def test_bundle_resolution():
    M = ProjProduct((2, 1))
    b = parse_bundle("conj(tau) + O(1,0) + nu").resolve(M)
    assert b == Bundle.tangent(M).conj() + Bundle.line((1, 0)) + Bundle.normal(M)
    with pytest.raises(ParseError):
        parse_bundle("O(1)").resolve(M)


def _manifold_texts():
    dims = st.lists(st.integers(0, 3), min_size=1, max_size=3)
    return st.one_of(st.just("pt"), dims.map(lambda d: " * ".join(f"CP( {k} )" for k in d)))


def _bundle_texts():
    leaf = st.one_of(st.just("tau"), st.just("nu"),
                     st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(
                         lambda v: "O(" + ", ".join(map(str, v)) + ")"))
    return st.recursive(leaf, lambda inner: st.one_of(
        inner.map(lambda b: f"conj( {b} )"),
        st.tuples(inner, inner).map(lambda ab: f"{ab[0]}  +{ab[1]}")), max_leaves=6)


@given(st.one_of(_manifold_texts(), _bundle_texts(),
                 st.tuples(st.sampled_from(["", "m", "h", "e", "p"]),
                           st.lists(st.integers(1, 5), min_size=1, max_size=4)).map(
                     lambda t: t[0] + "[" + " ,".join(map(str, t[1])) + "]")))
@settings(max_examples=150)
def test_print_parse_identity(text):
    expr = parse(text, max_dim=100)
    assert parse(str(expr), max_dim=100) == expr
    assert str(parse(str(expr), max_dim=100)) == str(expr)


def test_partition_canonical_order():
    assert str(parse_partition("[1,2]")) == "[2,1]"
    assert str(parse_partition("e[1]")) == "e[1]"


def test_verify_thm3():
    code, out, _ = call("verify", "thm3", "--manifold", "CP(2)", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["equal"] is True
    assert set(data) >= {"relation", "manifold", "bundle", "lhs", "rhs", "equal", "degrees",
                         "millis"}


def test_genus_and_dual_outputs():
    assert call("genus", "todd", "--manifold", "CP(3)")[:2] == (0, "1\n")
    assert call("genus", "chiy", "--manifold", "CP(2)")[1] == "1 - y + y^2\n"
    assert call("dual", "--partition", "[1]", "--bundle", "tau", "--manifold", "CP(2)")[:2] \
        == (0, "3*CP(1)\n")
    assert call("dual", "--partition", "e[2]", "--bundle", "tau", "--manifold", "CP(2)")[1] \
        == "3*pt\n"


def test_exit_codes():
    assert call("verify", "thm3", "--manifold", "CP(-1)")[0] == 2
    assert call("verify", "thm5.1", "--manifold", "CP(1)", "--bundle", "O(2)")[0] == 2
    assert call("verify", "thm4.2", "--manifold", "CP(3)")[0] == 2
    assert call("verify", "nonsense", "--manifold", "CP(1)")[0] == 2
    assert call("verify", "thm3", "--manifold", "CP(3)", "--max-degree", "2")[0] == 2


def test_failure_exit_code(monkeypatch):
    def broken(model):
        return theorems.VerificationReport("thm3", str(model), "nu", 1, 2, False)
    monkeypatch.setattr(theorems, "thm3", broken)
    assert call("verify", "thm3", "--manifold", "CP(1)")[0] == 1


def test_internal_error_exit_code(monkeypatch):
    def boom(model):
        raise RuntimeError("boom")
    monkeypatch.setattr(theorems, "thm3", boom)
    code, _, err = call("verify", "thm3", "--manifold", "CP(1)")
    assert code == 3 and "boom" in err


def test_report_file(tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = call("verify", "cor-as", "--manifold", "CP(1)", "--bundle", "O(2)",
                        "--format", "json", "--report", str(path))
    assert code == 0
    assert path.read_text().strip() == out.strip()


@pytest.mark.parametrize("case", range(0, 200, 7))
def test_json_round_trip(case):
    cases = build_matrix(3)
    report = run_cases([cases[case % len(cases)]])[0]
    assert report_from_json(emit_json(report)) == report
    assert report_to_json(report_from_json(report_to_json(report))) == report_to_json(report)


def test_json_bigraded_terms_sorted():
    r = theorems.thm3(ProjProduct((2,)))
    terms = report_to_json(r)["lhs"]
    keys = [(sum(t["y_partition"]) + sum(t["z_partition"]), t["y_partition"], t["z_partition"])
            for t in terms]
    assert keys == sorted(keys)
    assert set(terms[0]) == {"y_partition", "z_partition", "numerator", "denominator"}


def test_selftest_max_dim_2():
    code, out, _ = call("selftest", "--max-dim", "2")
    assert code == 0
    assert out.strip().endswith("cases hold")


def test_matrix_order_is_deterministic():
    ids = [cid for cid, _ in build_matrix(3)]
    assert ids == [cid for cid, _ in build_matrix(3)]
    assert len(ids) == len(set(ids))
