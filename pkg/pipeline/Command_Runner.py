# Core imports
import json
import os

# Library imports
import numpy as np

# Package imports
from .Condition_Pipeline import Condition_Pipeline
from ..assessment.Grade import Grade
from ..assessment.Line_Assessment import Line_Assessment
from ..core.Errors import DataFormatError, NumericFailureError, PipelineStageError
from ..corpus.Corpus_Generator import Corpus_Generator
from ..corpus.Corpus_Splitter import Corpus_Splitter
from ..corpus.Record_Store import Record_Store
from ..evaluation.Confusion_Matrix import Confusion_Matrix
from ..evaluation.Label_Efficiency_Sweep import Label_Efficiency_Sweep
from ..evaluation.Projection_Export import Projection_Export
from ..settings import Arguments

class Command_Runner(object):
    """
    Runner of the commands of the command line pipeline.

    The runner registers the settings of all components when it is created,
    so that the arguments can be checked for help and unknown options
    afterward. Each command reads its inputs and writes its outputs through
    the paths in the pipeline settings.
    """

    COMMANDS = ["synth", "assess", "fit", "predict", "evaluate", "sweep", "project"]
    COMPONENTS = [
        "pipeline", "assessment", "corpus", "corpus_split", "featureset",
        "imputation", "embedding", "semisupervised", "evaluation"
    ]
    REPORT_SCHEMA_VERSION = 1

    EXIT_SUCCESS = 0
    EXIT_DATA_ERROR = 3
    EXIT_NUMERIC_FAILURE = 4

    def __init__(self, arguments, log_manager):
        if isinstance(arguments, Arguments):
            self._settings = arguments.get_settings("pipeline")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        for component in self.COMPONENTS:
            arguments.get_settings(component)

        self._arguments = arguments
        self._log_manager = log_manager
        self._logger = log_manager.get_logger()
        self._store = Record_Store()

    def run(self, command):
        """
        Run the given `command` and return the exit code of the program.

        Errors in the input data or settings give exit code 3, and numeric
        failures give exit code 4. Other errors are not caught.
        """

        if command not in self.COMMANDS:
            raise ValueError("Unknown command '{}'".format(command))

        try:
            getattr(self, command)()
        except Exception as e:
            code = self.get_exit_code(e)
            if code is None:
                raise

            self._log_manager.log_exception("Command '{}' failed".format(command))
            print("Error: {}".format(e))
            return code

        return self.EXIT_SUCCESS

    def get_exit_code(self, error):
        """
        Determine the exit code for an `error`, or `None` if the error is not
        an expected failure. Pipeline stage errors use their cause.
        """

        if isinstance(error, PipelineStageError):
            error = error.cause

        if isinstance(error, (NumericFailureError, FloatingPointError, np.linalg.LinAlgError)):
            return self.EXIT_NUMERIC_FAILURE
        if isinstance(error, (ValueError, KeyError, IOError, OSError)):
            return self.EXIT_DATA_ERROR

        return None

    def _require(self, key, command):
        value = self._settings.get(key)
        if not value:
            raise ValueError("Setting '--{}' is required for the '{}' command".format(key.replace('_', '-'), command))

        return value

    def _make_directory(self, directory):
        if directory and not os.path.isdir(directory):
            os.makedirs(directory)

    def _read_labeled_records(self, command):
        records = self._store.read_records(self._require("records", command))
        labels = self._store.read_labels(self._require("labels", command))
        return self._store.attach_labels(records, labels)

    def _read_test_grades(self, records, labels):
        grades = []
        for record in records:
            if record.key not in labels:
                raise DataFormatError("No true grade for record {} week {}".format(*record.key))

            grades.append(labels[record.key])

        return grades

    def synth(self):
        pipeline = Condition_Pipeline(self._arguments)
        codebook = pipeline.load_codebook()
        generator = Corpus_Generator(self._arguments, codebook=codebook)
        records = generator.generate()

        out = self._settings.get("out")
        self._make_directory(out)
        self._store.write_records(records, os.path.join(out, "records.csv"))
        self._store.write_labels(records, os.path.join(out, "truth.csv"))
        codebook.save(os.path.join(out, "codebook.json"))
        print("Generated {} records in '{}'".format(len(records), out))

        splitter = Corpus_Splitter(self._arguments)
        try:
            split = splitter.split(records, scale=True)
        except ValueError as e:
            self._logger.warning("Split files are not written: %s", e)
            return

        keys = set(record.key for record in split.train)
        keys.update(record.key for record in split.unlabeled)
        unlabeled = dict((record.key, record) for record in split.unlabeled)
        train = [unlabeled.get(record.key, record) for record in records if record.key in keys]

        self._store.write_records(train, os.path.join(out, "train.csv"))
        self._store.write_labels(split.train, os.path.join(out, "labels.csv"))
        self._store.write_records(split.test, os.path.join(out, "test.csv"))
        self._store.write_labels(split.test, os.path.join(out, "test_labels.csv"))
        self._store.write_labels(split.unlabeled_truth, os.path.join(out, "unlabeled_truth.csv"))
        print("Split into {} labeled training, {} test and {} unlabeled records".format(len(split.train), len(split.test), len(split.unlabeled)))

    def assess(self):
        deductions = self._store.read_deductions(self._require("deductions", "assess"))
        assessment = Line_Assessment(self._arguments)

        results = []
        for segment_id, segment_deductions in deductions.items():
            line_score = assessment.assess(segment_deductions)
            results.append((segment_id, line_score))
            print("{}: {:.2f} ({})".format(segment_id, line_score.score, line_score.grade.label))

        self._store.write_assessments(results, self._settings.get("out"))

    def fit(self):
        records = self._read_labeled_records("fit")
        pipeline = Condition_Pipeline(self._arguments)
        bundle = pipeline.fit(records)
        pipeline.save(self._settings.get("model"))

        trace = self._settings.get("trace")
        if trace:
            bundle.factors.write_trace(trace)

        corrected = bundle.corrected_prototypes
        print("Fitted on {} labeled and {} unlabeled records".format(sum(bundle.prototypes.support_counts), len(records) - sum(bundle.prototypes.support_counts)))
        print("Factorization objective: {}".format(" -> ".join("{:.4f}".format(objective) for objective in bundle.factors.objective_trace[1:])))
        if bundle.loss_trace:
            print("Embedding loss: {:.4f} -> {:.4f} over {} epochs".format(bundle.loss_trace[0], bundle.loss_trace[-1], len(bundle.loss_trace)))

        print("Refinement: {} iterations, pseudo-labels per grade {}".format(corrected.iterations_run, corrected.pseudo_counts))
        print("Model bundle written to '{}'".format(self._settings.get("model")))

    def predict(self):
        pipeline = Condition_Pipeline(self._arguments)
        pipeline.load(self._settings.get("model"))
        records = self._store.read_records(self._require("records", "predict"))
        predictions = pipeline.predict(records)
        self._store.write_predictions(predictions, self._settings.get("out"))

        counts = dict((grade, 0) for grade in Grade)
        for prediction in predictions:
            counts[prediction.grade] += 1

        print("Predicted {} records: {}".format(len(predictions), ", ".join("{} {}".format(counts[grade], grade.label) for grade in Grade)))

    def _evaluate_file(self, file_name, truth):
        predictions = self._store.read_predictions(file_name)
        actual = []
        for prediction in predictions:
            if prediction.key not in truth:
                raise DataFormatError("No true grade for prediction of {} week {} in '{}'".format(prediction.key[0], prediction.key[1], file_name))

            actual.append(truth[prediction.key])

        confusion = Confusion_Matrix.from_labels(actual, [prediction.grade for prediction in predictions])
        return confusion, confusion.f1_report()

    def evaluate(self):
        truth = self._store.read_labels(self._require("truth", "evaluate"))
        confusion, report = self._evaluate_file(self._require("predictions", "evaluate"), truth)
        print(confusion.format_table(report))

        result = {
            "schema_version": self.REPORT_SCHEMA_VERSION,
            "confusion": confusion.to_dict()
        }
        result.update(report.to_dict())

        baseline_file = self._settings.get("baseline")
        if baseline_file:
            baseline_confusion, baseline_report = self._evaluate_file(baseline_file, truth)
            print("Baseline:")
            print(baseline_confusion.format_table(baseline_report))

            baseline = {"confusion": baseline_confusion.to_dict()}
            baseline.update(baseline_report.to_dict())
            result["baseline"] = baseline
            result["delta"] = {
                "per_class": dict(
                    (grade.label, report.get_f1(grade) - baseline_report.get_f1(grade))
                    for grade in Grade
                ),
                "macro": report.macro - baseline_report.macro
            }
            print("Macro F1 difference: {:+.3f}".format(result["delta"]["macro"]))

        with open(self._settings.get("report"), "w") as report_file:
            json.dump(result, report_file, indent=4, sort_keys=True)
            report_file.write("\n")

    def sweep(self):
        records = self._read_labeled_records("sweep")
        test_records = self._store.read_records(self._require("test_records", "sweep"))
        test_labels = self._store.read_labels(self._require("test_labels", "sweep"))
        test_grades = self._read_test_grades(test_records, test_labels)

        sweep = Label_Efficiency_Sweep(self._arguments)
        runs = sweep.run(Condition_Pipeline(self._arguments), records, test_records, test_grades)

        out = self._settings.get("out")
        self._make_directory(out)
        sweep.write(runs, os.path.join(out, "sweep.csv"))
        sweep.write_summary(runs, os.path.join(out, "sweep_summary.csv"))
        for fraction, labeled_count, count, mean, std in sweep.summarize(runs):
            if mean is None:
                print("Fraction {}: {} labels, all runs skipped".format(fraction, labeled_count))
            else:
                print("Fraction {}: {} labels, macro F1 {:.3f} +/- {:.3f} over {} runs".format(fraction, labeled_count, mean, std, count))

    def project(self):
        pipeline = Condition_Pipeline(self._arguments)
        pipeline.load(self._settings.get("model"))
        records = self._store.read_records(self._require("records", "project"))

        labels = {}
        if self._settings.get("labels"):
            labels = self._store.read_labels(self._settings.get("labels"))

        # Records without a known grade are shown with their predicted grade.
        predictions = pipeline.predict([record for record in records if record.key not in labels])
        predicted = dict((prediction.key, prediction.grade) for prediction in predictions)
        grades = [labels.get(record.key, predicted.get(record.key)) for record in records]

        embeddings = pipeline.embed(records)
        bundle = pipeline.bundle
        export = Projection_Export()
        rows = export.project(embeddings, grades, bundle.prototypes, bundle.corrected_prototypes)
        export.write(rows, self._settings.get("out"))
        print("Projected {} records and {} class centers".format(len(records), len(rows) - len(records)))
