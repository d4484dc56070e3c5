# Core imports
import csv
import logging
from collections import namedtuple

# Library imports
import numpy as np

# Package imports
from .Confusion_Matrix import Confusion_Matrix
from ..assessment.Grade import Grade
from ..settings import Arguments

Sweep_Run = namedtuple("Sweep_Run", ["fraction", "labeled_count", "seed", "report"])

class Label_Efficiency_Sweep(object):
    """
    Sweep over the fraction of training labels that the pipeline may use.

    For every fraction and seed, a random part of the labeled training
    records is turned into unlabeled records, the pipeline is fitted and its
    macro F1 score is measured on the same held-out test records.
    """

    HEADER = [
        "fraction", "labeled_count", "seed", "macro_f1",
        "f1_normal", "f1_attention", "f1_abnormal", "f1_serious"
    ]
    SUMMARY_HEADER = [
        "fraction", "labeled_count", "runs", "mean_macro_f1", "std_macro_f1"
    ]

    def __init__(self, arguments):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("evaluation")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._fractions = sorted(settings.get("sweep_fractions"))
        self._seeds = sorted(settings.get("sweep_seeds"))
        if not self._fractions or any(not 0.0 < fraction <= 1.0 for fraction in self._fractions):
            raise ValueError("Sweep fractions must be in (0, 1], not {}".format(self._fractions))
        if not self._seeds:
            raise ValueError("Sweep needs at least one seed")

    def demote(self, records, fraction, seed):
        """
        Keep the labels of a random `fraction` of the labeled `records` and
        strip the others. Records that were unlabeled stay unlabeled.

        Returns the new list of records and the number of kept labels.
        """

        labeled = [index for index, record in enumerate(records) if record.is_labeled]
        keep_count = int(round(fraction * len(labeled)))
        random_state = np.random.RandomState(seed)
        keep = set(labeled[index] for index in random_state.permutation(len(labeled))[:keep_count])

        demoted = [
            record if index in keep or not record.is_labeled else record.without_label()
            for index, record in enumerate(records)
        ]
        return demoted, keep_count

    def run(self, pipeline, records, test_records, test_labels):
        """
        Run the sweep with a `pipeline` that provides `fit(records, seed=...)`
        and `predict(records)`, where the predictions have a `grade`.

        The training `records` include labeled and unlabeled records. The
        `test_labels` are the grades of the `test_records` in order.

        Returns a list of `Sweep_Run`s ordered by fraction and seed, where the
        report is `None` for a skipped run.
        """

        runs = []
        for fraction in self._fractions:
            for seed in self._seeds:
                demoted, labeled_count = self.demote(records, fraction, seed)
                grades = set(record.label for record in demoted if record.is_labeled)
                missing = [grade.label for grade in Grade if grade not in grades]
                if missing:
                    self._logger.warning("Skipping sweep run with fraction %s and seed %d: no labels for %s",
                                         fraction, seed, ", ".join(missing))
                    runs.append(Sweep_Run(fraction, labeled_count, seed, None))
                    continue

                pipeline.fit(demoted, seed=seed)
                predicted = [prediction.grade for prediction in pipeline.predict(test_records)]
                report = Confusion_Matrix.from_labels(test_labels, predicted).f1_report()
                self._logger.info("Sweep run with fraction %s and seed %d: macro F1 %.4f",
                                  fraction, seed, report.macro)
                runs.append(Sweep_Run(fraction, labeled_count, seed, report))

        return runs

    def summarize(self, runs):
        """
        Summarize the `runs` per fraction with the number of completed runs
        and the mean and standard deviation of their macro F1 scores.
        """

        summary = []
        for fraction in self._fractions:
            selected = [run for run in runs if run.fraction == fraction]
            scores = [run.report.macro for run in selected if run.report is not None]
            labeled_count = selected[0].labeled_count if selected else 0
            if scores:
                summary.append((fraction, labeled_count, len(scores),
                                float(np.mean(scores)), float(np.std(scores))))
            else:
                summary.append((fraction, labeled_count, 0, None, None))

        return summary

    def write(self, runs, file_name):
        with open(file_name, "w", newline="") as sweep_file:
            writer = csv.writer(sweep_file)
            writer.writerow(self.HEADER)
            for run in runs:
                if run.report is None:
                    writer.writerow([run.fraction, run.labeled_count, run.seed, "skipped", "", "", "", ""])
                else:
                    writer.writerow([run.fraction, run.labeled_count, run.seed, repr(run.report.macro)] +
                                    [repr(f1) for f1 in run.report.per_class])

    def write_summary(self, runs, file_name):
        with open(file_name, "w", newline="") as summary_file:
            writer = csv.writer(summary_file)
            writer.writerow(self.SUMMARY_HEADER)
            for fraction, labeled_count, count, mean, std in self.summarize(runs):
                writer.writerow([fraction, labeled_count, count,
                                 "" if mean is None else repr(mean),
                                 "" if std is None else repr(std)])
