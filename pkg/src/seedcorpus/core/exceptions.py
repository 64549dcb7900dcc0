"""
seedcorpus exceptions.

Every error carries an ``errmsg`` template; positional arguments fill the
template's ``{}`` fields.
"""
from seedcorpus import count_string_formatters, log


class SeedCorpusException(Exception):
    r"""
    seedcorpus base exception.

    Parameters
    ----------
    *args
        If the first element of args contains ``'{}'`` it will be
        used as :attr:`errmsg` base string.
        Else, ``args`` are used to feed the sting method ``.format()``
        for the default exception :attr:`errmsg`.
    errmsg : optional
        If given, overrides any previous parameter and the ``str``
        value of ``errmsg`` is used as the Exception message.
        Defaults to ``None``.

    Examples
    --------
    Uses the default errormsg.
    >>> err = SeedCorpusException(var1, var2)
    >>> err = SeedCorpusException('An error happened: {}, {}', var1, var2)
    >>> err = SeedCorpusException('An error happened')
    >>> err = SeedCorpusException(errmsg='Custom error msg')
    """

    errmsg = 'An unknnown error as occurred.'

    def __init__(self, *args, errmsg=None):
        if errmsg is not None:
            assert isinstance(errmsg, str), f'wrong errmsg type: {type(errmsg)}'
            self.errmsg = errmsg
            self.args = []

        elif len(args) == count_string_formatters(self.errmsg):
            self.args = args

        else:
            assert count_string_formatters(args[0]) == len(args[1:]), \
                'args passed to Exception are not compatible to form a message'
            self.errmsg = args[0]
            self.args = args[1:]

        log.debug(f'Exception errors: {self.errmsg}')
        log.debug(f'Exception args: {self.args}')

        # ensure
        assert isinstance(self.args, (tuple, list)), \
            f'wrong args {type(self.args)}'
        assert count_string_formatters(self.errmsg) == len(self.args), (
            'Bad Exception message:\n'
            f'errmsg: {self.errmsg}\n'
            f'args: {self.args}'
            )

    def __str__(self):
        """Make me a string."""
        return self.errmsg.format(*self.args)

    def __repr__(self):
        return f'{self.__class__.__name__}: {self}'

    def report(self):
        """
        Report error in the form of a string.

        Identifies Error type and error message.

        Returns
        -------
        str
            The formatted string report.
        """
        return f'{self.__class__.__name__} * {self}'


class ReportOnCrashError(SeedCorpusException):
    """Raised when logger.report_on_crash."""

    errmsg = 'Crash reported to {}.'


class InvalidParameterError(SeedCorpusException):
    """Raised when a numeric or list parameter is out of its range."""

    errmsg = 'Invalid {}: {} (must be {}).'


# corpus

class MissingFileError(SeedCorpusException):
    """Raised when a file named by a manifest does not exist."""

    errmsg = 'File not found: {}'


class AlignmentMismatchError(SeedCorpusException):
    """Raised when a language does not cover the shared line ids."""

    errmsg = 'Language {} is not aligned: expected {} lines, found {}.'


class DuplicateLineIdError(SeedCorpusException):
    """Raised when the line id sidecar repeats an id."""

    errmsg = 'Duplicate line id: {}'


class UnknownLanguageError(SeedCorpusException):
    """Raised when a language code is not in the corpus or metadata."""

    errmsg = 'Unknown language: {}'


class EmptySpanError(SeedCorpusException):
    """Raised when a span reference resolves to no lines."""

    errmsg = 'Span resolves to no lines: {}'


class InsufficientMetadataError(SeedCorpusException):
    """Raised when language metadata lacks fields a policy needs."""

    errmsg = 'Insufficient language metadata: {}'


# scoring

class OrderExceedsTableError(SeedCorpusException):
    """Raised when scoring asks for an order above the table order."""

    errmsg = 'Order {} exceeds frequency table order {}.'


class EmptyTrainingSetError(SeedCorpusException):
    """Raised when a smoothed language model has no training tokens."""

    errmsg = 'Cannot train a {} language model on an empty set.'


class LineInChosenSetError(SeedCorpusException):
    """Raised when the entropy scorer is asked to score a chosen line."""

    errmsg = 'Line {} belongs to the chosen set.'


# selection

class BudgetError(SeedCorpusException):
    """Raised when the word budget is not positive."""

    errmsg = 'Word budget must be positive, got {}.'


class UnknownLineError(SeedCorpusException):
    """Raised when a line id is not part of the corpus."""

    errmsg = 'Unknown line id: {}'


class UnknownMethodError(SeedCorpusException):
    """Raised when a method name is not one of the selection methods."""

    errmsg = 'Unknown method {}. Valid methods: {}'


# aggregation

class UnknownPolicyError(SeedCorpusException):
    """Raised when a pool policy is not known."""

    errmsg = 'Unknown pool policy {}. Valid policies: {}'


class MissingRowError(SeedCorpusException):
    """Raised when a pool member has no row in the score matrix."""

    errmsg = 'Score matrix has no row for language {}.'


# evaluation

class LengthMismatchError(SeedCorpusException):
    """Raised when hypothesis and reference streams differ in length."""

    errmsg = 'Length mismatch: {} hypotheses and {} references.'


class EmptyCandidateListError(SeedCorpusException):
    """Raised when centeredness gets no candidates."""

    errmsg = 'Cannot combine an empty candidate list.'


class CorpusMismatchError(SeedCorpusException):
    """Raised when a ranking was produced on a different corpus."""

    errmsg = 'Ranking {} has corpus checksum {}, expected {}.'


# schedules

class InvalidScheduleError(SeedCorpusException):
    """Raised when a training schedule is invalid or unknown."""

    errmsg = 'Invalid schedule {}: {}'
