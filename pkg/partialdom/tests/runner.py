from django.test.runner import DiscoverRunner

TEST_FILE_PATTERN = 'Test*.py'


class TestFileDiscoverRunner(DiscoverRunner):
    """Test modules are named TestXxx.py, so discovery looks for that prefix instead of test*.py."""

    def __init__(self, pattern=None, **kwargs):
        super().__init__(pattern=pattern or TEST_FILE_PATTERN, **kwargs)

    @classmethod
    def add_arguments(cls, parser):
        super().add_arguments(parser)
        parser.set_defaults(pattern=TEST_FILE_PATTERN)
