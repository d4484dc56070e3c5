# Core imports
import json
import math

SELF_FEATURES = ["s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8"]
SPATIOTEMPORAL_FEATURES = ["t1", "t2", "t3", "t4"]

class Codebook(object):
    """
    Hierarchical level codes of the self and spatiotemporal features.

    Each feature either maps categories to codes (`levels`) or numeric
    half-open intervals to codes (`bands`). Codes of a feature are consecutive
    integers from 0.
    """

    FORMAT_VERSION = 1

    def __init__(self, features):
        """
        Initialize the codebook from a dictionary `features` that maps the
        feature names `s1` to `s8` and `t1` to `t4` to their entries. An entry
        is a dictionary with a descriptive `name` and either a `levels`
        dictionary of category to code, or a `bands` list of
        `[lower, upper, code]` items where `upper` may be `None` for an
        unbounded interval.
        """

        self._features = {}
        for feature in SELF_FEATURES + SPATIOTEMPORAL_FEATURES:
            if feature not in features:
                raise ValueError("Codebook has no entry for feature '{}'".format(feature))

            self._features[feature] = self._check_entry(feature, features[feature])

        unknown = set(features) - set(self._features)
        if unknown:
            raise ValueError("Codebook has entries for unknown features: {}".format(", ".join(sorted(unknown))))

    def _check_entry(self, feature, entry):
        if "levels" in entry:
            levels = dict((str(category), int(code)) for category, code in entry["levels"].items())
            codes = sorted(levels.values())
            parsed = {"name": entry.get("name", feature), "levels": levels}
        elif "bands" in entry:
            bands = []
            for band in entry["bands"]:
                lower, upper, code = band
                upper = float("inf") if upper is None else float(upper)
                if not float(lower) < upper:
                    raise ValueError("Band [{}, {}) of feature '{}' is empty".format(lower, upper, feature))

                bands.append((float(lower), upper, int(code)))

            bands.sort()
            for previous, current in zip(bands, bands[1:]):
                if previous[1] > current[0]:
                    raise ValueError("Bands of feature '{}' overlap at {}".format(feature, current[0]))

            codes = sorted(band[2] for band in bands)
            parsed = {"name": entry.get("name", feature), "bands": bands}
        else:
            raise ValueError("Codebook entry of feature '{}' needs levels or bands".format(feature))

        if codes != list(range(len(codes))):
            raise ValueError("Codes of feature '{}' must be consecutive from 0, not {}".format(feature, codes))

        return parsed

    @property
    def features(self):
        return SELF_FEATURES + SPATIOTEMPORAL_FEATURES

    def get_name(self, feature):
        return self._features[feature]["name"]

    def is_banded(self, feature):
        return "bands" in self._features[feature]

    def get_categories(self, feature):
        """
        Retrieve the categories of a feature with levels, in code order.
        """

        levels = self._features[feature]["levels"]
        return sorted(levels, key=levels.get)

    def get_bands(self, feature):
        """
        Retrieve the `(lower, upper, code)` intervals of a feature with bands,
        in code order. An unbounded upper end is infinite.
        """

        return sorted(self._features[feature]["bands"], key=lambda band: band[2])

    def max_code(self, feature):
        """
        Retrieve the highest code of the given `feature`.
        """

        entry = self._features[feature]
        if "levels" in entry:
            return len(entry["levels"]) - 1

        return len(entry["bands"]) - 1

    def encode(self, feature, raw):
        """
        Encode the `raw` value of a `feature` to its level code.

        Returns `None` if the raw value is absent. A raw value that is not
        covered by the codebook raises a `ValueError`.
        """

        if feature not in self._features:
            raise KeyError("Feature '{}' is not in the codebook".format(feature))

        if raw is None or (isinstance(raw, str) and raw.strip() == ""):
            return None
        if isinstance(raw, float) and math.isnan(raw):
            return None

        entry = self._features[feature]
        if "levels" in entry:
            category = str(raw).strip()
            if category not in entry["levels"]:
                raise ValueError("Value '{}' of feature '{}' is not in the codebook".format(raw, feature))

            return entry["levels"][category]

        try:
            value = float(raw)
        except ValueError:
            raise ValueError("Value '{}' of feature '{}' is not numeric".format(raw, feature))

        for lower, upper, code in entry["bands"]:
            if lower <= value < upper:
                return code

        raise ValueError("Value '{}' of feature '{}' is not in the codebook".format(raw, feature))

    def to_dict(self):
        features = {}
        for feature, entry in self._features.items():
            if "levels" in entry:
                features[feature] = {
                    "name": entry["name"],
                    "levels": dict(entry["levels"])
                }
            else:
                features[feature] = {
                    "name": entry["name"],
                    "bands": [
                        [lower, None if math.isinf(upper) else upper, code]
                        for lower, upper, code in entry["bands"]
                    ]
                }

        return {
            "format_version": self.FORMAT_VERSION,
            "features": features
        }

    @classmethod
    def from_dict(cls, data):
        version = data.get("format_version", cls.FORMAT_VERSION)
        if version != cls.FORMAT_VERSION:
            raise ValueError("Unsupported codebook format version {}".format(version))

        return cls(data["features"])

    @classmethod
    def load(cls, file_name):
        with open(file_name) as codebook_file:
            return cls.from_dict(json.load(codebook_file))

    def save(self, file_name):
        with open(file_name, "w") as codebook_file:
            json.dump(self.to_dict(), codebook_file, indent=4, sort_keys=True)
            codebook_file.write("\n")
