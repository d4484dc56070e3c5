# Library imports
import numpy as np

class Matrix(object):
    """
    Conversion of dense arrays to and from their serialized form, which is
    a dictionary with the `shape` and the row-major `data` of the array.
    """

    @staticmethod
    def to_dict(array):
        array = np.asarray(array, dtype=float)
        return {
            "shape": list(array.shape),
            "data": array.ravel().tolist()
        }

    @staticmethod
    def from_dict(data):
        """
        Convert a serialized array back to a numpy array.

        The array must have as many finite entries as its shape requires.
        """

        shape = tuple(int(size) for size in data["shape"])
        values = np.array(data["data"], dtype=float)
        if values.size != int(np.prod(shape)):
            raise ValueError("Array data of {} entries does not match shape {}".format(values.size, shape))
        if not np.all(np.isfinite(values)):
            raise ValueError("Array data must be finite")

        return values.reshape(shape)
