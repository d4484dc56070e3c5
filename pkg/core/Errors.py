class InsufficientDataError(ValueError):
    """
    Error raised when there is too little data to estimate a model, such as
    a grade class without labeled samples or too few complete windows.
    """

    pass

class DataFormatError(ValueError):
    """
    Error raised when an input file cannot be parsed.

    The `line` is the one-based line number in the file, counting the header,
    and `column` is the name of the offending column. Either may be `None`
    when the location is not known.
    """

    def __init__(self, message, line=None, column=None):
        location = []
        if line is not None:
            location.append("line {}".format(line))
        if column is not None:
            location.append("column '{}'".format(column))

        if location:
            message = "{} ({})".format(message, ", ".join(location))

        super(DataFormatError, self).__init__(message)
        self.line = line
        self.column = column

class NumericFailureError(ArithmeticError):
    """
    Error raised when a computation produces non-finite values.
    """

    pass

class PipelineStageError(Exception):
    """
    Error raised when a stage of the fit or predict pipeline fails.

    The `stage` is the name of the failed stage and `cause` is the original
    exception.
    """

    def __init__(self, stage, cause):
        super(PipelineStageError, self).__init__("Stage '{}' failed: {}".format(stage, cause))
        self.stage = stage
        self.cause = cause
