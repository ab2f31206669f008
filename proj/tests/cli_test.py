"""End-to-end checks of the landauvar command line: exit codes, JSON
reports against the shipped schema, DOT syntax and byte-stable output."""

import json
import re
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BIN = Path(sys.argv.pop(1)).resolve()
ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())


def run(*args):
    return subprocess.run([str(BIN), *map(str, args)], capture_output=True, text=True)


def ok(*args):
    r = run(*args)
    if r.returncode != 0:
        raise AssertionError(f"{args} exited {r.returncode}: {r.stderr}")
    return r.stdout


def sub_schema(name):
    return {"$defs": SCHEMA["$defs"], "$ref": f"#/$defs/{name}"}


# Minimal DOT grammar: header, node statements, edge statements, closing brace.
DOT_ID = r'"(?:[^"\\]|\\.)*"'
DOT_NODE = re.compile(rf"^\s*{DOT_ID}(\s*\[label={DOT_ID}\])?;$")
DOT_EDGE = re.compile(rf"^\s*({DOT_ID})\s*->\s*({DOT_ID});$")


def parse_dot(text):
    lines = text.strip().splitlines()
    if not re.match(r"^digraph\s+\w+\s*\{$", lines[0]) or lines[-1] != "}":
        raise AssertionError("not a digraph")
    nodes, edges = [], []
    for line in lines[1:-1]:
        m = DOT_EDGE.match(line)
        if m:
            edges.append((m.group(1)[1:-1], m.group(2)[1:-1]))
        elif DOT_NODE.match(line):
            nodes.append(line.strip().split(" ", 1)[0].strip('";'))
        else:
            raise AssertionError(f"bad DOT line: {line}")
    return nodes, edges


BUBBLE_DIAGRAM = {
    ("l2", "lD+"), ("l2", "lD-"), ("l1", "lD+"), ("l1", "lD-"), ("lD+", "lD+"),
    ("lD+", "lD-"), ("lD+", "lp"), ("lD-", "lD-"), ("lD-", "lD+"), ("lD-", "lp"),
}


def closure(edges):
    r = set(edges)
    while True:
        extra = {(a, d) for a, b in r for c, d in r if b == c} - r
        if not extra:
            return r
        r |= extra


class CliTest(unittest.TestCase):
    def test_analyze_report_validates(self):
        for graph in ["bubble.json", "triangle.json", "box.json", "tadpole.json"]:
            with self.subTest(graph=graph):
                first = json.loads(ok("analyze", DATA / graph))["hierarchy"]["nodes"][0]
                report = json.loads(ok("analyze", DATA / graph, "--check", f"word={first},{first}"))
                self.assertEqual(len(report["verdicts"]), 1)
                jsonschema.validate(report, SCHEMA)
                self.assertEqual(json.loads(json.dumps(report)), report)

    def test_analyze_bubble_reachability(self):
        report = json.loads(ok("analyze", DATA / "bubble.json", "--audit", "bubble"))
        jsonschema.validate(report, SCHEMA)
        rename = {"F/e2": "l1", "F/e1": "l2", "F+": "lD+", "F-": "lD-", "FU": "lp"}
        reach = {(rename[a], rename[b]) for a, b in report["hierarchy"]["reachability"]}
        self.assertEqual(reach, closure(BUBBLE_DIAGRAM))
        self.assertEqual(report["audit"]["violations"], [])

    def test_analyze_fixture_and_errors(self):
        report = json.loads(ok("analyze", DATA / "sunrise.json", "--fixture", "sunrise"))
        jsonschema.validate(report, SCHEMA)
        self.assertEqual(run("analyze", DATA / "sunrise.json").returncode, 1)
        with tempfile.TemporaryDirectory() as tmp:
            bad = Path(tmp) / "bad.json"
            bad.write_text('{"vertices": [')
            r = run("analyze", bad)
            self.assertEqual(r.returncode, 1)
            self.assertIn("line", r.stderr)
        self.assertEqual(run("landau", "fixture", "pentagon").returncode, 1)

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("homrank", "--n", "1").returncode, 2)
        self.assertEqual(run("symanzik", DATA / "bubble.json", "--format", "xml").returncode, 2)
        self.assertEqual(run("homrank", "--n", "1", "--m", "2", "--J", "x", "--degree", "0").returncode, 2)
        self.assertEqual(run("--help").returncode, 0)

    def test_component_and_model_json(self):
        comps = json.loads(ok("landau", "oneloop", DATA / "triangle.json", "--format", "json"))
        jsonschema.validate(comps, sub_schema("components"))
        self.assertEqual(len(comps), 11)
        for name in ["massless-triangle", "sunrise", "icecream-partial", "dilog"]:
            jsonschema.validate(json.loads(ok("landau", "fixture", name, "--format", "json")),
                                sub_schema("components"))
        audit = json.loads(ok("variation", "audit", "logarithm", "--format", "json"))
        jsonschema.validate(audit, sub_schema("audit"))
        hier = json.loads(ok("hierarchy", "bubble", "--format", "json", "--check", "word=lD+,l2"))
        jsonschema.validate(hier, sub_schema("hierarchy"))
        self.assertTrue(hier["verdicts"][0]["forced_zero"])

    def test_model_file_round_trip(self):
        model = ok("variation", "table", "bubble", "--format", "json")
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "model.json"
            path.write_text(model)
            self.assertEqual(ok("variation", "table", path, "--format", "json"), model)
            broken = json.loads(model)
            broken["ops"]["lp"][1][0] = "1"
            path.write_text(json.dumps(broken))
            self.assertEqual(run("variation", "table", path).returncode, 1)

    def test_dot_output_parses(self):
        nodes, edges = parse_dot(ok("hierarchy", "bubble", "--dot"))
        self.assertEqual(set(nodes), {"l1", "l2", "lD+", "lD-", "lp"})
        self.assertEqual(closure(edges), closure(BUBBLE_DIAGRAM))
        self.assertIn(("lD+", "lD+"), edges)
        nodes, edges = parse_dot(ok("aomoto", "hierarchy", "--n", "2", "--dot"))
        self.assertEqual(len(nodes), 20)
        nodes, _ = parse_dot(ok("hierarchy", DATA / "triangle.json", "--format", "dot"))
        self.assertEqual(len(nodes), 11)

    def test_documented_examples(self):
        self.assertEqual(ok("homrank", "--n", "1", "--m", "2", "--I", "", "--J", "1", "--K", "2",
                            "--degree", "1").strip(), "1")
        words = ok("aomoto", "symbol", "--n", "1").strip().splitlines()
        self.assertEqual(len(words), 4)
        sym = json.loads(ok("aomoto", "symbol", "--n", "2", "--format", "json"))
        self.assertEqual(len(sym["words"]), 36)
        track = json.loads(ok("track", DATA / "bubble.json", "--chart", "x1=1", "--var", "x2",
                              "--loop", "p1sq:center=9,r=0.1", "--fix", "m1sq=1,m2sq=4",
                              "--mark", "0"))
        jsonschema.validate(track, sub_schema("track"))
        self.assertEqual(track["permutation"], [1, 0])
        track = json.loads(ok("track", DATA / "bubble.json", "--chart", "x1=1", "--var", "x2",
                              "--loop", "m1sq:center=0,r=0.1", "--fix", "p1sq=2,m2sq=4",
                              "--mark", "0"))
        self.assertEqual(track["permutation"], [0, 1])
        self.assertEqual(track["windings"], [[0], [1]])
        comp = json.loads(ok("variation", "compose", "bubble", "w=l2,lD+", "--format", "json"))
        self.assertEqual([row[0] for row in comp["matrix"]], ["0", "1", "-1"])
        self.assertEqual(ok("signword", "p1 d2").strip(), "- d2 p1")

    def test_outputs_are_byte_stable(self):
        for args in [("analyze", DATA / "triangle.json"), ("hierarchy", "sunrise", "--dot"),
                     ("aomoto", "symbol", "--n", "2", "--format", "json"),
                     ("variation", "table", "dilog")]:
            with self.subTest(args=args):
                self.assertEqual(ok(*args), ok(*args))


if __name__ == "__main__":
    unittest.main(verbosity=2)
