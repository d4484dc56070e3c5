import json
import os
import shutil
import tempfile
import unittest
from ..corpus.Corpus_Generator import REFERENCE_CODEBOOK
from ..featureset.Codebook import Codebook, SELF_FEATURES, SPATIOTEMPORAL_FEATURES

class TestFeaturesetCodebook(unittest.TestCase):
    def setUp(self):
        self.codebook = Codebook.load(REFERENCE_CODEBOOK)
        with open(REFERENCE_CODEBOOK) as codebook_file:
            self.features = json.load(codebook_file)["features"]

    def test_features(self):
        self.assertEqual(self.codebook.features,
                         SELF_FEATURES + SPATIOTEMPORAL_FEATURES)
        self.assertEqual(len(self.codebook.features), 12)
        self.assertEqual(self.codebook.get_name("s1"), "voltage level")

    def test_encode_levels(self):
        self.assertEqual(self.codebook.encode("s1", "220kV"), 1)
        self.assertEqual(self.codebook.encode("s1", " 500kV "), 2)
        self.assertEqual(self.codebook.encode("s2", 4), 2)
        self.assertEqual(self.codebook.encode("t4", "special"), 1)
        self.assertFalse(self.codebook.is_banded("s1"))
        self.assertEqual(self.codebook.get_categories("s1"),
                         ["110kV", "220kV", "500kV"])

    def test_encode_bands(self):
        self.assertEqual(self.codebook.encode("s8", "12"), 1)
        self.assertEqual(self.codebook.encode("s8", 12.0), 1)
        # Bands are closed at the lower end and open at the upper end.
        self.assertEqual(self.codebook.encode("s8", "5"), 1)
        self.assertEqual(self.codebook.encode("s8", "4.9"), 0)
        self.assertEqual(self.codebook.encode("s8", "80"), 3)
        self.assertTrue(self.codebook.is_banded("s8"))
        self.assertEqual(self.codebook.get_bands("s8")[-1],
                         (25.0, float("inf"), 3))

    def test_encode_absent(self):
        self.assertIsNone(self.codebook.encode("s1", None))
        self.assertIsNone(self.codebook.encode("s1", ""))
        self.assertIsNone(self.codebook.encode("s4", "  "))
        self.assertIsNone(self.codebook.encode("s4", float("nan")))

    def test_encode_invalid(self):
        with self.assertRaisesRegex(ValueError, "'330kV' of feature 's1'"):
            self.codebook.encode("s1", "330kV")
        with self.assertRaisesRegex(ValueError, "not numeric"):
            self.codebook.encode("s4", "tall")
        with self.assertRaisesRegex(ValueError, "'-3' of feature 's4'"):
            self.codebook.encode("s4", "-3")
        with self.assertRaises(KeyError):
            self.codebook.encode("s9", "1")

    def test_max_code(self):
        self.assertEqual(self.codebook.max_code("s1"), 2)
        self.assertEqual(self.codebook.max_code("s4"), 3)
        self.assertEqual(self.codebook.max_code("t4"), 1)

    def test_init_invalid(self):
        features = dict(self.features)
        del features["t3"]
        with self.assertRaisesRegex(ValueError, "no entry for feature 't3'"):
            Codebook(features)

        features = dict(self.features, s9={"levels": {"a": 0}})
        with self.assertRaisesRegex(ValueError, "unknown features: s9"):
            Codebook(features)

        features = dict(self.features, s1={"levels": {"110kV": 0, "220kV": 2}})
        with self.assertRaisesRegex(ValueError, "consecutive from 0"):
            Codebook(features)

        features = dict(self.features, s8={"bands": [[0, 10, 0], [5, None, 1]]})
        with self.assertRaisesRegex(ValueError, "overlap at 5"):
            Codebook(features)

        features = dict(self.features, s8={"bands": [[10, 10, 0]]})
        with self.assertRaisesRegex(ValueError, "empty"):
            Codebook(features)

        features = dict(self.features, s8={"name": "years"})
        with self.assertRaisesRegex(ValueError, "levels or bands"):
            Codebook(features)

    def test_save(self):
        directory = tempfile.mkdtemp()
        try:
            file_name = os.path.join(directory, "codebook.json")
            self.codebook.save(file_name)
            loaded = Codebook.load(file_name)
        finally:
            shutil.rmtree(directory)

        self.assertEqual(loaded.to_dict(), self.codebook.to_dict())
        self.assertEqual(loaded.encode("s6", "450"), 2)

    def test_from_dict_version(self):
        data = self.codebook.to_dict()
        data["format_version"] = 2
        with self.assertRaisesRegex(ValueError, "version 2"):
            Codebook.from_dict(data)
