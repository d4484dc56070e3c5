from enum import IntEnum

class Grade(IntEnum):
    """
    Condition grade of a line section, from best to worst.
    """

    NORMAL = 1
    ATTENTION = 2
    ABNORMAL = 3
    SERIOUS = 4

    @property
    def index(self):
        """
        Retrieve the zero-based index of the grade, for use in arrays that
        have one entry per grade.
        """

        return self.value - 1

    @property
    def label(self):
        """
        Retrieve the human-readable name of the grade, as used in files.
        """

        return self.name.title()

    @classmethod
    def from_index(cls, index):
        return cls(int(index) + 1)

    @classmethod
    def parse(cls, text):
        """
        Convert a grade name such as "Attention" or an integer code such as
        "2" to a `Grade`.
        """

        text = str(text).strip()
        if text.isdigit():
            try:
                return cls(int(text))
            except ValueError:
                raise ValueError("Grade code must be between 1 and 4, not {}".format(text))

        try:
            return cls[text.upper()]
        except KeyError:
            raise ValueError("Unknown grade '{}'".format(text))
