import time
import numpy as np
from ...corpus.Corpus_Generator import Corpus_Generator
from ...corpus.Corpus_Splitter import Corpus_Splitter
from ...evaluation.Confusion_Matrix import Confusion_Matrix
from ...pipeline.Condition_Pipeline import Condition_Pipeline
from ...semisupervised.Prototype_Classifier import Prototype_Classifier
from ...semisupervised.Prototype_Refiner import Prototype_Refiner
from ...settings import Arguments
from ...tests.settings import SettingsTestCase

class TestConditionPipelineOutcomes(SettingsTestCase):
    """
    Outcomes of the full pipeline with the default settings on generated
    corpora, split into labeled training, test and unlabeled records.
    """

    # The first seed is the configured default seed.
    SEEDS = list(range(42, 52))
    MAX_SECONDS = 120.0

    @classmethod
    def setUpClass(cls):
        cls.runs = [cls._run(seed) for seed in cls.SEEDS]

    @classmethod
    def _run(cls, seed):
        start = time.perf_counter()
        arguments = Arguments("settings.json", [])
        records = Corpus_Generator(arguments).generate(seed=seed)
        split = Corpus_Splitter(arguments).split(records, seed=seed)

        pipeline = Condition_Pipeline(arguments)
        bundle = pipeline.fit(split.train + split.unlabeled, seed=seed)

        test = [record.without_label() for record in split.test]
        truth = [record.label for record in split.test]
        corrected = [prediction.grade for prediction in pipeline.predict(test)]
        supervised = [prediction.grade for prediction in pipeline.predict(test, corrected=False)]
        corrected_report = Confusion_Matrix.from_labels(truth, corrected).f1_report()
        supervised_report = Confusion_Matrix.from_labels(truth, supervised).f1_report()
        seconds = time.perf_counter() - start

        # Refinement that fully trusts the labeled centers keeps them.
        refined = Prototype_Refiner(arguments).refine(bundle.prototypes,
                                                      pipeline.embed(split.unlabeled),
                                                      alpha=1.0)
        grades = Prototype_Classifier().predict_all(pipeline.embed(test), refined)[0]

        return {
            "seed": seed,
            "corrected": corrected_report.macro,
            "supervised": supervised_report.macro,
            "seconds": seconds,
            "trusted_centers": np.array_equal(refined.centers, bundle.prototypes.centers),
            "trusted_grades": list(grades) == supervised
        }

    def test_default_corpus_macro_f1(self):
        self.assertEqual(self.runs[0]["seed"], 42)
        self.assertGreaterEqual(self.runs[0]["corrected"], 0.8)
        self.assertGreaterEqual(np.mean([run["corrected"] for run in self.runs]), 0.8)

    def test_corrected_centers_gain(self):
        gains = [run["corrected"] - run["supervised"] for run in self.runs]
        self.assertEqual(len(gains), 10)
        self.assertGreater(np.mean(gains), 0.0,
                           msg="Gains per seed: {}".format(gains))

    def test_full_confidence_keeps_supervised_run(self):
        for run in self.runs:
            self.assertTrue(run["trusted_centers"], msg="Seed {}".format(run["seed"]))
            self.assertTrue(run["trusted_grades"], msg="Seed {}".format(run["seed"]))

    def test_end_to_end_time(self):
        for run in self.runs:
            self.assertLess(run["seconds"], self.MAX_SECONDS,
                            msg="Seed {}".format(run["seed"]))
