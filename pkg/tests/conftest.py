"""Configuration module for running tests with pytest"""


def pytest_addoption(parser):
    group = parser.getgroup("tlentangle", "tlentangle specific options")
    group.addoption('--nrandom',
                    help='Set the number of random parameter draws',
                    default=100, type=int)
    group.addoption('--seed', help='The seed for the random draws',
                    default=1234, type=int)


def pytest_configure(config):
    import _base_testing
    _base_testing.RandomTestCase.nrandom = config.getoption('nrandom')
    _base_testing.RandomTestCase.seed = config.getoption('seed')
