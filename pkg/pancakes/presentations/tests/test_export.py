import json
from unittest import TestCase

from pancakes.group_core.context import GroupContext
from pancakes.presentations.catalog import build_presentation
from pancakes.presentations.export import export, ExportFormat, from_json
from pancakes.presentations.presentation import PresentationFormatError

A4_GAP_SCRIPT = (
    'F := FreeGroup("r2","r3","r4");;\n'
    'r2 := F.1;; r3 := F.2;; r4 := F.3;;\n'
    'rels := [ r2^2, r3^2, r4^2, (r2*r3)^3, (r2*r4)^4, (r4*r3*r2*r3)^2, r3*r2*r4*r2*r4*r3*r4, '
    'r3*r2*r3*r2*r4*r3*r4*r2*r4 ];;\n'
    'G := F / rels;;\n'
)


class ExportTest(TestCase):

    def test_gap_script_golden(self):
        p = build_presentation(GroupContext.of("A", 4), "pancake")
        self.assertEqual(A4_GAP_SCRIPT, export(p, ExportFormat.GAP))

    def test_gap_script_type_d_names(self):
        p = build_presentation(GroupContext.of("D", 4), "pancake")
        first_line = export(p, "gap").splitlines()[0]
        self.assertEqual('F := FreeGroup("rb2","r2","r3","r4");;', first_line)

    def test_json_schema(self):
        p = build_presentation(GroupContext.of("D", 4), "pancake")
        document = json.loads(export(p, ExportFormat.JSON))
        self.assertEqual("D", document["group_type"])
        self.assertEqual(4, document["degree"])
        self.assertEqual("pancake", document["family"])
        self.assertEqual(["rb2", "r2", "r3", "r4"], document["generators"])
        self.assertEqual({"label": "Rd1", "word": ["rb2", "rb2"], "indices": []}, document["relators"][0])

    def test_json_round_trip(self):
        for family in ("pancake", "coxeter"):
            for group_type in "ABD":
                p = build_presentation(GroupContext.of(group_type, 5), family)
                with self.subTest(family=family, group_type=group_type):
                    self.assertEqual(p, from_json(export(p)))

    def test_json_without_indices(self):
        text = json.dumps({"group_type": "A", "degree": 4, "family": "coxeter", "generators": ["s1"],
                           "relators": [{"label": "Ca1", "word": ["s1", "s1"]}]})
        p = from_json(text)
        self.assertEqual((), p.relators[0].indices)

    def test_malformed_json(self):
        with self.assertRaises(PresentationFormatError):
            from_json('{"group_type": "E", "degree": 4, "family": "pancake", "generators": [], "relators": []}')
        with self.assertRaises(PresentationFormatError):
            from_json('not json')
