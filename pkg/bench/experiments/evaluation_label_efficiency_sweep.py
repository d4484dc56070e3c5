import numpy as np
from ...assessment.Grade import Grade
from ...corpus.Corpus_Generator import Corpus_Generator
from ...corpus.Corpus_Splitter import Corpus_Splitter
from ...evaluation.Confusion_Matrix import Confusion_Matrix
from ...evaluation.Label_Efficiency_Sweep import Label_Efficiency_Sweep
from ...pipeline.Condition_Pipeline import Condition_Pipeline
from ...settings import Arguments
from ...tests.settings import SettingsTestCase

class TestLabelEfficiencySweepOutcomes(SettingsTestCase):
    """
    Outcomes of the label efficiency sweep on the default generated corpus.
    """

    FRACTIONS = [0.1, 0.25, 0.5, 1.0]

    def setUp(self):
        self.arguments = Arguments("settings.json", [])
        evaluation = self.arguments.get_settings("evaluation")
        evaluation.set("sweep_fractions", self.FRACTIONS)
        evaluation.set("sweep_seeds", list(range(5)))

        records = Corpus_Generator(self.arguments).generate()
        self.split = Corpus_Splitter(self.arguments).split(records)
        self.records = self.split.train + self.split.unlabeled
        self.test = [record.without_label() for record in self.split.test]
        self.truth = [record.label for record in self.split.test]

    def _macro(self, predictions):
        grades = [prediction.grade for prediction in predictions]
        return Confusion_Matrix.from_labels(self.truth, grades).f1_report().macro

    def test_macro_f1_grows_with_labels(self):
        sweep = Label_Efficiency_Sweep(self.arguments)
        runs = sweep.run(Condition_Pipeline(self.arguments), self.records,
                         self.test, self.truth)
        summary = sweep.summarize(runs)
        self.assertEqual([row[0] for row in summary], self.FRACTIONS)
        for row in summary:
            self.assertGreater(row[2], 0, msg="Fraction {}".format(row[0]))

        # Each mean may only fall short of the previous one by less than
        # their pooled standard deviation.
        for previous, current in zip(summary[:-1], summary[1:]):
            pooled = np.sqrt((previous[4] ** 2 + current[4] ** 2) / 2.0)
            self.assertGreaterEqual(current[3], previous[3] - pooled,
                                    msg="Summary: {}".format(summary))

    def test_corrected_centers_with_few_labels(self):
        sweep = Label_Efficiency_Sweep(self.arguments)
        pipeline = Condition_Pipeline(self.arguments)

        # Seeds that leave a grade without labels are skipped like in the
        # sweep, until ten seeds have run.
        wins = 0
        completed = []
        seed = 0
        while len(completed) < 10:
            demoted = sweep.demote(self.records, 0.1, seed)[0]
            grades = set(record.label for record in demoted if record.is_labeled)
            if len(grades) == len(Grade):
                pipeline.fit(demoted, seed=seed)
                corrected = self._macro(pipeline.predict(self.test))
                supervised = self._macro(pipeline.predict(self.test, corrected=False))
                completed.append((seed, corrected, supervised))
                if corrected > supervised:
                    wins += 1

            seed += 1

        self.assertGreaterEqual(wins, 7, msg="Runs: {}".format(completed))
