# Core imports
import csv
from collections import OrderedDict, namedtuple

# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade
from ..assessment.Line_Assessment import Indicator_Deduction
from ..core.Errors import DataFormatError
from ..featureset.Codebook import SELF_FEATURES, SPATIOTEMPORAL_FEATURES
from ..featureset.Defect_Record import Defect_Record, METEO_FEATURES

Prediction = namedtuple("Prediction", ["key", "grade", "posteriors"])

class Record_Store(object):
    """
    Reading and writing of the CSV files of the pipeline.

    Empty cells are absent values. Real values are written in their shortest
    exact representation, so that reading a written file gives the same
    values.
    """

    LABEL_HEADER = ["segment_id", "week", "grade"]
    DEDUCTION_HEADER = ["segment_id", "unit", "indicator", "weight", "demerit"]
    ASSESSMENT_HEADER = ["segment_id", "score", "grade"]
    PREDICTION_HEADER = [
        "segment_id", "week", "grade",
        "p_normal", "p_attention", "p_abnormal", "p_serious"
    ]

    @staticmethod
    def record_header(window_length):
        header = ["segment_id", "week"] + SELF_FEATURES + SPATIOTEMPORAL_FEATURES
        for feature in METEO_FEATURES:
            header.extend("{}_d{}".format(feature, day) for day in range(window_length))

        return header

    @staticmethod
    def _format_real(value):
        if value is None or np.isnan(value):
            return ""

        return repr(float(value))

    def _open_reader(self, file_name, expected=None):
        """
        Open a CSV file and read its header.

        If an `expected` header is given, then the header must match it.
        Returns the open file, the reader and the header.
        """

        csv_file = open(file_name, newline="")
        reader = csv.reader(csv_file)
        try:
            header = next(reader)
        except StopIteration:
            csv_file.close()
            raise DataFormatError("File '{}' has no header".format(file_name), line=1)

        header = [column.strip() for column in header]
        if expected is not None and header != expected:
            csv_file.close()
            unknown = [column for column in header if column not in expected]
            missing = [column for column in expected if column not in header]
            if unknown:
                raise DataFormatError("Unknown column in '{}'".format(file_name), line=1, column=unknown[0])
            if missing:
                raise DataFormatError("Missing column in '{}'".format(file_name), line=1, column=missing[0])

            raise DataFormatError("Columns of '{}' must be in the order {}".format(file_name, ", ".join(expected)), line=1)

        return csv_file, reader, header

    def _rows(self, reader, header):
        for row in reader:
            if not row or all(cell.strip() == "" for cell in row):
                continue
            if len(row) != len(header):
                raise DataFormatError("Expected {} cells, not {}".format(len(header), len(row)), line=reader.line_num)

            yield reader.line_num, dict(zip(header, (cell.strip() for cell in row)))

    @staticmethod
    def _parse(cast, cells, column, line, allow_empty=False):
        cell = cells[column]
        if cell == "":
            if allow_empty:
                return None

            raise DataFormatError("Empty value", line=line, column=column)

        try:
            return cast(cell)
        except ValueError:
            raise DataFormatError("Invalid value '{}'".format(cell), line=line, column=column)

    def read_records(self, file_name):
        """
        Read the records from a CSV file. The records have no labels.
        """

        csv_file, reader, header = self._open_reader(file_name)
        with csv_file:
            window_length = len([column for column in header if column.startswith("temp_d")])
            expected = self.record_header(window_length)
            if header != expected or window_length == 0:
                unknown = [column for column in header if column not in expected]
                missing = [column for column in expected if column not in header]
                if unknown:
                    raise DataFormatError("Unknown column in '{}'".format(file_name), line=1, column=unknown[0])
                if missing or window_length == 0:
                    column = missing[0] if missing else "temp_d0"
                    raise DataFormatError("Missing column in '{}'".format(file_name), line=1, column=column)

                raise DataFormatError("Columns of '{}' are not in record order".format(file_name), line=1)

            records = []
            keys = set()
            for line, cells in self._rows(reader, header):
                segment_id = self._parse(str, cells, "segment_id", line)
                week = self._parse(int, cells, "week", line)
                if (segment_id, week) in keys:
                    raise DataFormatError("Duplicate record {} week {}".format(segment_id, week), line=line)

                keys.add((segment_id, week))

                self_raw = [cells[feature] or None for feature in SELF_FEATURES]
                st_raw = [cells[feature] or None for feature in SPATIOTEMPORAL_FEATURES]
                window = np.full((len(METEO_FEATURES), window_length), np.nan)
                for row, feature in enumerate(METEO_FEATURES):
                    for day in range(window_length):
                        column = "{}_d{}".format(feature, day)
                        value = self._parse(float, cells, column, line, allow_empty=True)
                        if value is not None:
                            if not np.isfinite(value):
                                raise DataFormatError("Value must be finite", line=line, column=column)

                            window[row, day] = value

                records.append(Defect_Record(segment_id, week, self_raw, window, st_raw))

        return records

    def write_records(self, records, file_name):
        """
        Write the `records` to a CSV file, without their labels.
        """

        window_lengths = set(record.window_length for record in records)
        if len(window_lengths) > 1:
            raise ValueError("Records have different window lengths: {}".format(sorted(window_lengths)))

        window_length = window_lengths.pop() if window_lengths else 1
        with open(file_name, "w", newline="") as csv_file:
            writer = csv.writer(csv_file, lineterminator="\n")
            writer.writerow(self.record_header(window_length))
            for record in records:
                row = [record.segment_id, record.week]
                row.extend("" if raw is None else raw for raw in record.self_raw)
                row.extend("" if raw is None else raw for raw in record.st_raw)
                row.extend(self._format_real(value) for value in record.meteo_window.ravel())
                writer.writerow(row)

    def read_labels(self, file_name):
        """
        Read a labels CSV file. Grades are either names or integer codes.

        Returns an ordered dictionary of `(segment_id, week)` keys to `Grade`s.
        """

        labels = OrderedDict()
        csv_file, reader, header = self._open_reader(file_name, self.LABEL_HEADER)
        with csv_file:
            for line, cells in self._rows(reader, header):
                key = (self._parse(str, cells, "segment_id", line),
                       self._parse(int, cells, "week", line))
                if key in labels:
                    raise DataFormatError("Duplicate label for {} week {}".format(*key), line=line)

                labels[key] = self._parse(Grade.parse, cells, "grade", line)

        return labels

    def write_labels(self, labels, file_name):
        """
        Write labels to a CSV file. The `labels` are `(key, grade)` pairs or
        labeled records.
        """

        with open(file_name, "w", newline="") as csv_file:
            writer = csv.writer(csv_file, lineterminator="\n")
            writer.writerow(self.LABEL_HEADER)
            for item in labels:
                if isinstance(item, Defect_Record):
                    key, grade = item.key, item.label
                else:
                    key, grade = item

                writer.writerow([key[0], key[1], Grade(grade).label])

    def attach_labels(self, records, labels):
        """
        Create copies of the `records` with the grades from the `labels`
        dictionary. Records without a label in the dictionary are unlabeled.
        """

        keys = set(record.key for record in records)
        unknown = [key for key in labels if key not in keys]
        if unknown:
            raise DataFormatError("Label for unknown record {} week {}".format(*unknown[0]))

        return [record.with_label(labels.get(record.key)) for record in records]

    def read_deductions(self, file_name):
        """
        Read a deductions CSV file.

        Returns an ordered dictionary of segment identifiers to lists of
        `Indicator_Deduction`s.
        """

        deductions = OrderedDict()
        csv_file, reader, header = self._open_reader(file_name, self.DEDUCTION_HEADER)
        with csv_file:
            for line, cells in self._rows(reader, header):
                segment_id = self._parse(str, cells, "segment_id", line)
                deduction = Indicator_Deduction(
                    self._parse(int, cells, "unit", line),
                    self._parse(int, cells, "indicator", line),
                    self._parse(float, cells, "weight", line),
                    self._parse(float, cells, "demerit", line)
                )
                if not 1 <= deduction.unit_index <= 8:
                    raise DataFormatError("Unit must be between 1 and 8", line=line, column="unit")
                if deduction.indicator_index < 1:
                    raise DataFormatError("Indicator must be positive", line=line, column="indicator")
                for column, value in (("weight", deduction.weight), ("demerit", deduction.demerit)):
                    if not np.isfinite(value) or value < 0:
                        raise DataFormatError("Value must be finite and non-negative", line=line, column=column)

                deductions.setdefault(segment_id, []).append(deduction)

        return deductions

    def write_assessments(self, assessments, file_name):
        """
        Write `(segment_id, line_score)` pairs to an assessment CSV file.
        """

        with open(file_name, "w", newline="") as csv_file:
            writer = csv.writer(csv_file, lineterminator="\n")
            writer.writerow(self.ASSESSMENT_HEADER)
            for segment_id, line_score in assessments:
                writer.writerow([segment_id, repr(line_score.score), line_score.grade.label])

    def write_predictions(self, predictions, file_name):
        with open(file_name, "w", newline="") as csv_file:
            writer = csv.writer(csv_file, lineterminator="\n")
            writer.writerow(self.PREDICTION_HEADER)
            for prediction in predictions:
                writer.writerow([prediction.key[0], prediction.key[1], prediction.grade.label] +
                                [repr(float(probability)) for probability in prediction.posteriors])

    def read_predictions(self, file_name):
        """
        Read a predictions CSV file into a list of `Prediction`s.
        """

        predictions = []
        csv_file, reader, header = self._open_reader(file_name, self.PREDICTION_HEADER)
        with csv_file:
            for line, cells in self._rows(reader, header):
                key = (self._parse(str, cells, "segment_id", line),
                       self._parse(int, cells, "week", line))
                posteriors = [
                    self._parse(float, cells, column, line)
                    for column in self.PREDICTION_HEADER[3:]
                ]
                predictions.append(Prediction(key, self._parse(Grade.parse, cells, "grade", line), posteriors))

        return predictions
