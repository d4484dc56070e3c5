import unittest
import numpy as np
from ..assessment.Grade import Grade
from ..featureset.Defect_Record import Defect_Record

class TestFeaturesetDefectRecord(unittest.TestCase):
    def setUp(self):
        self.self_raw = ["220kV", "2", "ACSR", "27.5", "41.0", "350.0", "tangent", "12.0"]
        self.st_raw = ["Q3", "hill", "350.0", "none"]
        self.window = np.arange(30, dtype=float).reshape(6, 5)
        self.record = Defect_Record("L001", 4, self.self_raw, self.window,
                                    self.st_raw, label=Grade.ATTENTION)

    def test_initialization(self):
        self.assertEqual(self.record.segment_id, "L001")
        self.assertEqual(self.record.week, 4)
        self.assertEqual(self.record.key, ("L001", 4))
        self.assertEqual(self.record.self_raw, tuple(self.self_raw))
        self.assertEqual(self.record.st_raw, tuple(self.st_raw))
        self.assertEqual(self.record.window_length, 5)
        self.assertEqual(self.record.label, Grade.ATTENTION)
        self.assertTrue(self.record.is_labeled)

        # Integer labels are converted to grades.
        record = Defect_Record("L001", 4, self.self_raw, self.window,
                               self.st_raw, label=3)
        self.assertEqual(record.label, Grade.ABNORMAL)

    def test_initialization_invalid(self):
        with self.assertRaisesRegex(ValueError, "8 self features, not 7"):
            Defect_Record("L001", 4, self.self_raw[:7], self.window, self.st_raw)
        with self.assertRaisesRegex(ValueError, "4 spatiotemporal features"):
            Defect_Record("L001", 4, self.self_raw, self.window, self.st_raw[:3])
        with self.assertRaisesRegex(ValueError, "6 rows"):
            Defect_Record("L001", 4, self.self_raw, self.window[:5], self.st_raw)
        with self.assertRaises(ValueError):
            Defect_Record("L001", 4, self.self_raw, np.zeros((6, 0)), self.st_raw)

    def test_meteo_window_read_only(self):
        with self.assertRaises(ValueError):
            self.record.meteo_window[0, 0] = 1.0

        # The record keeps its own copy of the window.
        self.window[0, 0] = 100.0
        self.assertEqual(self.record.meteo_window[0, 0], 0.0)

    def test_has_complete_window(self):
        self.assertTrue(self.record.has_complete_window())

        window = self.window.copy()
        window[2, 3] = np.nan
        record = Defect_Record("L001", 5, self.self_raw, window, self.st_raw)
        self.assertFalse(record.has_complete_window())
        self.assertFalse(record.has_complete_window(2))
        self.assertTrue(record.has_complete_window(0))

    def test_labels(self):
        unlabeled = self.record.without_label()
        self.assertIsNone(unlabeled.label)
        self.assertFalse(unlabeled.is_labeled)
        self.assertEqual(unlabeled.key, self.record.key)
        self.assertNotEqual(unlabeled, self.record)

        relabeled = unlabeled.with_label(Grade.ATTENTION)
        self.assertEqual(relabeled, self.record)

    def test_eq(self):
        window = self.window.copy()
        window[1, 1] = np.nan
        first = Defect_Record("L002", 1, self.self_raw, window, self.st_raw)
        second = Defect_Record("L002", 1, self.self_raw, window.copy(), self.st_raw)
        self.assertEqual(first, second)

        third = Defect_Record("L002", 1, self.self_raw, self.window, self.st_raw)
        self.assertNotEqual(first, third)
        self.assertNotEqual(first, "L002")

    def test_repr(self):
        self.assertEqual(repr(self.record),
                         "Defect_Record('L001', 4, label=Attention)")
