"""Smoke tests for the Python bindings and the CLI binary.

Environment: PYTHONPATH points at the built package, SVPROTO_FIXTURES at the
fixture directory, SVPROTO_CLI at the command-line binary.
"""

import json
import os
import pathlib
import subprocess

import pytest

import svproto

FIXTURES = pathlib.Path(os.environ["SVPROTO_FIXTURES"])


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


def body(document_text: str) -> dict:
    return json.loads(document_text)["body"]


def test_canonicalize_is_identity_on_fixtures():
    for name in ("construction-network.json", "collaboration-schema.json",
                 "executable-protocol.json"):
        text = fixture_text(name)
        assert svproto.canonicalize(text) == text


def test_canonical_predicate():
    assert svproto.canonical_predicate("⊃ {Architect}") == "superset {Architect}"
    with pytest.raises(svproto.Error, match="SyntaxError"):
        svproto.canonical_predicate("> ")


def test_membership_queries():
    network = fixture_text("construction-network.json")
    schema = fixture_text("collaboration-schema.json")
    assert svproto.instance_of(network, schema, "ArchibaldTex", "ExperiencedArchitect")
    assert not svproto.instance_of(network, schema, "ArchibaldTex", "ExperiencedDeveloper")
    assert svproto.relational_member(network, schema, "DevHouse", "ExperiencedDeveloper")


def test_compliance_report():
    network = fixture_text("construction-network.json")
    report = body(svproto.check_compliance(network, fixture_text("collaboration-schema.json")))
    assert report["level"] == "full"
    assert {"class": "Bank", "entity": "MoniBank"} in report["witness"]

    partial = body(
        svproto.check_compliance(network, fixture_text("collaboration-extended-schema.json")))
    assert partial["level"] == "partial"
    assert partial["uncoveredClasses"] == ["SitePreparation"]


def test_subnetwork_search():
    report = body(
        svproto.find_subnetworks(fixture_text("construction-network.json"),
                                 fixture_text("collaboration-schema.json")))
    assert [m["entities"] for m in report["results"]] == [[
        "ArchibaldTex", "DevHouse", "MoniBank"
    ]]


def test_implicit_schema_matches_fixture():
    derived = svproto.implicit_schema(fixture_text("abstract-protocol.json"))
    assert derived == fixture_text("implicit-schema.json")


def test_classification_levels():
    for name, level in (("abstract-protocol.json", "abstract"),
                        ("prototype-protocol.json", "prototype"),
                        ("executable-protocol.json", "executable")):
        report = body(svproto.classify(fixture_text(name)))
        assert report["level"] == level


def test_enactment_chain():
    instance = svproto.new_instance(fixture_text("executable-protocol.json"))
    assert body(instance)["currentState"] == "initial"
    assert svproto.enabled_activities(instance) == [("a1", "d1")]

    after = svproto.step(instance, "a1", "n4")
    assert body(after)["currentState"] == "financed"
    assert body(after)["history"] == [{"activity": "a1", "performer": "n4"}]

    with pytest.raises(svproto.Error, match="ActivityNotEnabled"):
        svproto.step(instance, "a3", "n8")
    with pytest.raises(svproto.Error, match="PerformerNotAuthorized"):
        svproto.step(instance, "a1", "n1")


def test_errors_carry_codes_and_paths():
    with pytest.raises(svproto.Error, match=r"SchemaViolation.*\$\.body\.entities\[1\]\.id"):
        svproto.canonicalize(fixture_text("malformed/m04.json"))
    with pytest.raises(svproto.Error, match="WrongDocumentKind"):
        svproto.check_compliance(fixture_text("collaboration-schema.json"),
                                 fixture_text("collaboration-schema.json"))


def run_cli(*args):
    return subprocess.run([os.environ["SVPROTO_CLI"], *args],
                          capture_output=True, text=True)


def test_cli_verdicts_and_exit_codes():
    network = str(FIXTURES / "construction-network.json")
    schema = str(FIXTURES / "collaboration-schema.json")
    extended = str(FIXTURES / "collaboration-extended-schema.json")

    ok = run_cli("validate", network)
    assert (ok.returncode, ok.stdout) == (0, "OK: network document\n")

    full = run_cli("check", "--network", network, "--schema", schema)
    assert (full.returncode, full.stdout) == (0, "FULL\n")

    partial = run_cli("check", "--network", network, "--schema", extended)
    assert partial.returncode == 1
    assert partial.stdout == "PARTIAL, uncovered: SitePreparation\n"

    tolerated = run_cli("check", "--partial", "--network", network, "--schema", extended)
    assert tolerated.returncode == 0

    malformed = run_cli("validate", str(FIXTURES / "malformed" / "m04.json"))
    assert malformed.returncode == 2
    assert "$.body.entities[1].id" in malformed.stderr


def test_cli_json_matches_bindings():
    network = str(FIXTURES / "construction-network.json")
    schema = str(FIXTURES / "collaboration-schema.json")
    out = run_cli("check", "--json", "--network", network, "--schema", schema)
    assert out.returncode == 0
    assert out.stdout == svproto.check_compliance(fixture_text("construction-network.json"),
                                                  fixture_text("collaboration-schema.json"))
