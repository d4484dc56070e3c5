# Core imports
import logging
import os

# Library imports
import numpy as np

# Package imports
from ..assessment.Grade import Grade
from ..featureset.Codebook import Codebook, SELF_FEATURES, SPATIOTEMPORAL_FEATURES
from ..featureset.Defect_Record import Defect_Record, METEO_FEATURES
from ..featureset.Extended_Feature import SLOT_NAMES
from ..settings import Arguments

REFERENCE_CODEBOOK = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                  "reference_codebook.json")

class Corpus_Generator(object):
    """
    Generator of synthetic defect records with grade-dependent structure.

    Every record gets a latent grade drawn from the class mix. Each level
    code follows its grade with the signal probability and is uniform
    otherwise, and each meteorological row follows one of five archetype
    curves, preferring an archetype that depends on the grade and feature.
    A fixed fraction of the records then loses one to five slots.
    """

    # Typical level and spread of each meteorological feature.
    METEO_PROFILES = {
        "temp": (20.0, 8.0),
        "hum": (60.0, 15.0),
        "wind": (3.0, 1.5),
        "rain": (5.0, 4.0),
        "lightning": (1.5, 1.0),
        "haze": (2.0, 1.0)
    }
    ARCHETYPES = 5
    # Probability that a meteorological row follows its preferred archetype.
    METEO_SIGNAL = 0.7
    # Relative standard deviation of the day-to-day noise.
    METEO_NOISE = 0.15
    # Width of the generated values in an unbounded band.
    OPEN_BAND_WIDTH = 20.0
    WEEKS_PER_SEGMENT = 52

    def __init__(self, arguments, codebook=None):
        if isinstance(arguments, Arguments):
            settings = arguments.get_settings("corpus")
        else:
            raise TypeError("'arguments' must be an instance of Arguments")

        self._logger = logging.getLogger(__name__)
        self._n_records = settings.get("n_records")
        self._class_mix = np.array(settings.get("class_mix"), dtype=float)
        self._missing_record_rate = settings.get("missing_record_rate")
        self._missing_per_record = np.array(settings.get("missing_per_record"), dtype=float)
        self._window_length = settings.get("window_length")
        self._signal = settings.get("signal_strength")
        self._seed = settings.get("seed")

        if abs(self._class_mix.sum() - 1.0) > 1e-6:
            raise ValueError("Class mix must sum to 1, not {}".format(self._class_mix.sum()))
        if abs(self._missing_per_record.sum() - 1.0) > 1e-6:
            raise ValueError("Missing slot distribution must sum to 1, not {}".format(self._missing_per_record.sum()))

        # Normalize the rounding errors away for the random choices.
        self._class_mix /= self._class_mix.sum()
        self._missing_per_record /= self._missing_per_record.sum()

        if codebook is None:
            codebook = Codebook.load(REFERENCE_CODEBOOK)

        self._codebook = codebook

    @property
    def codebook(self):
        return self._codebook

    def archetype(self, index, feature):
        """
        Retrieve the noiseless curve of the archetype with the given `index`
        for the meteorological `feature` over the window.
        """

        base, spread = self.METEO_PROFILES[feature]
        if self._window_length > 1:
            u = np.linspace(-0.5, 0.5, self._window_length)
        else:
            u = np.zeros(1)

        shapes = [
            -np.ones_like(u),
            np.ones_like(u),
            2.0 * u,
            -2.0 * u,
            1.0 - 8.0 * u ** 2
        ]
        return base + spread * shapes[index]

    def preferred_archetype(self, grade, feature_index):
        return (Grade(grade).index + feature_index) % self.ARCHETYPES

    def _draw_code(self, random_state, level_count, grade):
        preferred = int(round(Grade(grade).index * (level_count - 1) / 3.0))
        if random_state.rand() < self._signal:
            return preferred

        return random_state.randint(level_count)

    def _draw_raw(self, random_state, feature, grade):
        level_count = self._codebook.max_code(feature) + 1
        code = self._draw_code(random_state, level_count, grade)
        if not self._codebook.is_banded(feature):
            return self._codebook.get_categories(feature)[code]

        lower, upper, _ = self._codebook.get_bands(feature)[code]
        if np.isinf(upper):
            upper = lower + self.OPEN_BAND_WIDTH

        value = random_state.uniform(lower + 0.5, upper - 0.5)
        return "{:.1f}".format(value)

    def _draw_window(self, random_state, grade):
        window = np.zeros((len(METEO_FEATURES), self._window_length))
        for index, feature in enumerate(METEO_FEATURES):
            if random_state.rand() < self.METEO_SIGNAL:
                archetype = self.preferred_archetype(grade, index)
            else:
                archetype = random_state.randint(self.ARCHETYPES)

            spread = self.METEO_PROFILES[feature][1]
            noise = random_state.normal(0.0, self.METEO_NOISE * spread, self._window_length)
            row = self.archetype(archetype, feature) + noise
            if feature != "temp":
                row = np.maximum(row, 0.0)

            window[index] = np.round(row, 1)

        return window

    def generate(self, seed=None):
        """
        Generate the records of the corpus with their latent grades as labels.

        The `seed` defaults to the configured seed, and the same seed always
        generates the same records.
        """

        random_state = np.random.RandomState(self._seed if seed is None else seed)

        grades = random_state.choice(len(Grade), size=self._n_records, p=self._class_mix)
        self_raws = []
        windows = []
        st_raws = []
        for index in grades:
            grade = Grade.from_index(index)
            self_raws.append([self._draw_raw(random_state, feature, grade) for feature in SELF_FEATURES])
            windows.append(self._draw_window(random_state, grade))
            st_raws.append([self._draw_raw(random_state, feature, grade) for feature in SPATIOTEMPORAL_FEATURES])

        missing_count = int(round(self._missing_record_rate * self._n_records))
        chosen = np.sort(random_state.choice(self._n_records, size=missing_count, replace=False))
        for record in chosen:
            slot_count = random_state.choice(len(self._missing_per_record), p=self._missing_per_record) + 1
            slots = random_state.choice(len(SLOT_NAMES), size=slot_count, replace=False)
            for slot in slots:
                if slot < len(SELF_FEATURES):
                    self_raws[record][slot] = None
                elif slot < len(SELF_FEATURES) + len(METEO_FEATURES):
                    day = random_state.randint(self._window_length)
                    windows[record][slot - len(SELF_FEATURES), day] = np.nan
                else:
                    st_raws[record][slot - len(SELF_FEATURES) - len(METEO_FEATURES)] = None

        records = []
        for index in range(self._n_records):
            segment_id = "L{:03d}".format(index // self.WEEKS_PER_SEGMENT + 1)
            week = index % self.WEEKS_PER_SEGMENT + 1
            records.append(Defect_Record(segment_id, week, self_raws[index],
                                         windows[index], st_raws[index],
                                         label=Grade.from_index(grades[index])))

        self._logger.info("Generated %d records, %d with missing slots",
                          self._n_records, missing_count)
        return records
