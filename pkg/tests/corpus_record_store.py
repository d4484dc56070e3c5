import csv
import os
import shutil
import tempfile
import unittest
import numpy as np
from ..assessment.Grade import Grade
from ..assessment.Line_Assessment import Indicator_Deduction, Line_Score
from ..core.Errors import DataFormatError
from ..corpus.Record_Store import Record_Store, Prediction
from ..featureset.Defect_Record import Defect_Record

class TestCorpusRecordStore(unittest.TestCase):
    def setUp(self):
        self.store = Record_Store()
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def _write(self, name, lines):
        file_name = os.path.join(self.directory, name)
        with open(file_name, "w") as csv_file:
            csv_file.write("".join(line + "\n" for line in lines))

        return file_name

    def test_record_header(self):
        header = Record_Store.record_header(2)
        self.assertEqual(len(header), 2 + 8 + 4 + 12)
        self.assertEqual(header[:3], ["segment_id", "week", "s1"])
        self.assertEqual(header[14:16], ["temp_d0", "temp_d1"])
        self.assertEqual(header[-1], "haze_d1")

    def test_read_records(self):
        records = self.store.read_records("tests/corpus/records.csv")
        self.assertEqual([record.key for record in records],
                         [("L001", 1), ("L001", 2), ("L002", 1)])
        self.assertFalse(any(record.is_labeled for record in records))
        self.assertEqual(records[0].self_raw[0], "220kV")
        self.assertIsNone(records[1].self_raw[2])
        self.assertIsNone(records[1].st_raw[3])
        self.assertEqual(records[2].st_raw, ("Q1", "river", "1200.0", "special"))

        self.assertEqual(records[0].window_length, 2)
        np.testing.assert_array_equal(records[0].meteo_window[0], [21.5, 22.0])
        self.assertTrue(np.isnan(records[1].meteo_window[0, 1]))
        self.assertEqual(records[2].meteo_window[0, 0], -2.5)

    def test_write_records(self):
        records = self.store.read_records("tests/corpus/records.csv")
        file_name = os.path.join(self.directory, "records.csv")
        self.store.write_records([record.with_label(Grade.NORMAL) for record in records],
                                 file_name)

        self.assertEqual(self.store.read_records(file_name), records)
        with open(file_name) as records_file:
            lines = records_file.read().splitlines()

        self.assertEqual(lines[0].split(","), Record_Store.record_header(2))
        self.assertEqual(len(lines), 4)
        self.assertIn(",,", lines[2])

        window = np.zeros((6, 3))
        mixed = records + [Defect_Record("L003", 1, records[0].self_raw, window,
                                         records[0].st_raw)]
        with self.assertRaisesRegex(ValueError, "different window lengths"):
            self.store.write_records(mixed, file_name)

    def test_read_records_errors(self):
        with self.assertRaisesRegex(DataFormatError, "line 3, column 'temp_d0'") as context:
            self.store.read_records("tests/corpus/bad_records.csv")

        self.assertEqual(context.exception.line, 3)
        self.assertEqual(context.exception.column, "temp_d0")

        header = ",".join(Record_Store.record_header(1))
        row = "L001,1,220kV,2,ACSR,27.5,41.0,350.0,tangent,12.0,Q3,hill,350.0,none,21.5,60.0,3.0,0.0,0.0,2.0"
        duplicate = self._write("duplicate.csv", [header, row, row])
        with self.assertRaisesRegex(DataFormatError, "Duplicate record L001 week 1"):
            self.store.read_records(duplicate)

        unknown = self._write("unknown.csv", [header + ",extra", row + ",1"])
        with self.assertRaisesRegex(DataFormatError, "column 'extra'"):
            self.store.read_records(unknown)

        missing = self._write("missing.csv", [header.replace(",s3", ""), row.replace(",ACSR", "")])
        with self.assertRaisesRegex(DataFormatError, "column 's3'"):
            self.store.read_records(missing)

        short = self._write("short.csv", [header, "L001,1,220kV"])
        with self.assertRaisesRegex(DataFormatError, "Expected 20 cells, not 3"):
            self.store.read_records(short)

        week = self._write("week.csv", [header, row.replace("L001,1,", "L001,first,")])
        with self.assertRaisesRegex(DataFormatError, "Invalid value 'first'"):
            self.store.read_records(week)

        infinite = self._write("infinite.csv", [header, row.replace(",21.5,", ",inf,")])
        with self.assertRaisesRegex(DataFormatError, "finite"):
            self.store.read_records(infinite)

        empty = self._write("empty.csv", [])
        with self.assertRaisesRegex(DataFormatError, "no header"):
            self.store.read_records(empty)

    def test_labels(self):
        labels = self.store.read_labels("tests/corpus/labels.csv")
        self.assertEqual(list(labels.items()), [
            (("L001", 1), Grade.NORMAL),
            (("L001", 2), Grade.ABNORMAL),
            (("L002", 1), Grade.SERIOUS)
        ])

        file_name = os.path.join(self.directory, "labels.csv")
        records = self.store.attach_labels(self.store.read_records("tests/corpus/records.csv"),
                                           labels)
        self.store.write_labels(records, file_name)
        self.assertEqual(self.store.read_labels(file_name), labels)
        with open(file_name) as labels_file:
            self.assertEqual(labels_file.read().splitlines()[2], "L001,2,Abnormal")

        self.store.write_labels([(("L009", 4), Grade.ATTENTION)], file_name)
        self.assertEqual(list(self.store.read_labels(file_name).items()),
                         [(("L009", 4), Grade.ATTENTION)])

    def test_labels_errors(self):
        bad_grade = self._write("grade.csv", ["segment_id,week,grade", "L001,1,Fine"])
        with self.assertRaisesRegex(DataFormatError, "line 2, column 'grade'"):
            self.store.read_labels(bad_grade)

        code = self._write("code.csv", ["segment_id,week,grade", "L001,1,7"])
        with self.assertRaisesRegex(DataFormatError, "column 'grade'"):
            self.store.read_labels(code)

        order = self._write("order.csv", ["week,segment_id,grade", "1,L001,Normal"])
        with self.assertRaisesRegex(DataFormatError, "order"):
            self.store.read_labels(order)

        duplicate = self._write("duplicate.csv", ["segment_id,week,grade",
                                                  "L001,1,Normal", "L001,1,Serious"])
        with self.assertRaisesRegex(DataFormatError, "Duplicate label"):
            self.store.read_labels(duplicate)

    def test_attach_labels(self):
        records = self.store.read_records("tests/corpus/records.csv")
        labeled = self.store.attach_labels(records, {("L001", 2): Grade.ATTENTION})
        self.assertEqual([record.label for record in labeled],
                         [None, Grade.ATTENTION, None])

        with self.assertRaisesRegex(DataFormatError, "unknown record L005 week 1"):
            self.store.attach_labels(records, {("L005", 1): Grade.NORMAL})

    def test_read_deductions(self):
        deductions = self.store.read_deductions("tests/corpus/deductions.csv")
        self.assertEqual(list(deductions.keys()), ["L001", "L002"])
        self.assertEqual(deductions["L001"], [
            Indicator_Deduction(2, 1, 0.5, 8.0),
            Indicator_Deduction(4, 3, 1.0, 2.5)
        ])
        self.assertEqual(deductions["L002"], [Indicator_Deduction(1, 1, 1.0, 0.0)])

        with self.assertRaisesRegex(DataFormatError, "Unit must be between 1 and 8"):
            self.store.read_deductions("tests/corpus/bad_deductions.csv")

        negative = self._write("negative.csv", ["segment_id,unit,indicator,weight,demerit",
                                                "L001,1,1,0.5,-2"])
        with self.assertRaisesRegex(DataFormatError, "column 'demerit'"):
            self.store.read_deductions(negative)

    def test_write_assessments(self):
        file_name = os.path.join(self.directory, "assessments.csv")
        self.store.write_assessments([("L001", Line_Score(86.0, Grade.ATTENTION, []))],
                                     file_name)
        with open(file_name) as assessment_file:
            rows = list(csv.reader(assessment_file))

        self.assertEqual(rows, [Record_Store.ASSESSMENT_HEADER, ["L001", "86.0", "Attention"]])

    def test_predictions(self):
        predictions = [
            Prediction(("L001", 1), Grade.NORMAL, [0.7, 0.2, 0.05, 0.05]),
            Prediction(("L002", 3), Grade.SERIOUS, [0.1, 0.1, 0.1, 0.7])
        ]
        file_name = os.path.join(self.directory, "predictions.csv")
        self.store.write_predictions(predictions, file_name)
        self.assertEqual(self.store.read_predictions(file_name), predictions)

        with open(file_name) as predictions_file:
            lines = predictions_file.read().splitlines()

        self.assertEqual(lines[0], ",".join(Record_Store.PREDICTION_HEADER))
        self.assertEqual(lines[2], "L002,3,Serious,0.1,0.1,0.1,0.7")
