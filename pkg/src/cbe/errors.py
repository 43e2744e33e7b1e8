
class CbeError(Exception):
    """ Common ancestor class to all of cbe's exceptions """


class ArgumentError(CbeError):
    def __init__(self, msg=None):
        msg = msg or 'Invalid argument'
        super().__init__(msg)


class DomainError(ArgumentError):
    def __init__(self, what, value, domain, msg=None):
        msg = msg or f'Argument {value} of "{what}" lies outside of its domain {domain}'
        super().__init__(msg)
        self.what = what
        self.value = value
        self.domain = domain


class PoleError(ArgumentError):
    def __init__(self, s, j, beta, msg=None):
        msg = msg or f'Gamma pole hit when evaluating the moment generating function at s={s}, j={j}, beta={beta}'
        super().__init__(msg)


class InvalidBeta(ArgumentError):
    def __init__(self, beta, msg=None):
        msg = msg or f'Inverse temperature must be positive, got beta={beta}'
        super().__init__(msg)
        self.beta = beta


class OracleCapExceeded(CbeError):
    def __init__(self, size, cap, msg=None):
        msg = msg or f'Coefficient-domain oracle requested for size {size}, above the configured cap of {cap}'
        super().__init__(msg)
        self.size = size
        self.cap = cap


class MissingSnapshot(CbeError):
    def __init__(self, k, available, msg=None):
        msg = msg or f'No field snapshot recorded at step {k}. Available steps: {sorted(available)}'
        super().__init__(msg)
        self.k = k


class MeshError(CbeError):
    def __init__(self, msg=None):
        msg = msg or 'Mesh incompatible with the requested operation'
        super().__init__(msg)


class IntegrationError(CbeError):
    def __init__(self, msg=None):
        msg = msg or 'Numerical integration of the diffusion failed'
        super().__init__(msg)


class ResourceBudgetExceeded(CbeError):
    def __init__(self, requested_mb, cap_mb, msg=None):
        msg = msg or f'Operation needs about {requested_mb:.1f}MB, above the declared memory cap of {cap_mb:.1f}MB'
        super().__init__(msg)
        self.requested_mb = requested_mb
        self.cap_mb = cap_mb


class ConfigurationError(CbeError):
    def __init__(self, msg=None):
        msg = msg or 'Invalid experiment configuration'
        super().__init__(msg)


class UnknownConfigKey(ConfigurationError):
    def __init__(self, key, experiment, msg=None):
        msg = msg or f'Unknown configuration key "{key}" for experiment "{experiment}"'
        super().__init__(msg)
        self.key = key


class VerificationFailure(CbeError):
    def __init__(self, failures, msg=None):
        msg = msg or 'Verification failed for kernels: {}'.format(', '.join(failures))
        super().__init__(msg)
        self.failures = failures


class InvariantViolation(CbeError):
    def __init__(self, what, k, msg=None):
        msg = msg or f'Invariant "{what}" violated at step {k}'
        super().__init__(msg)
        self.what = what
        self.k = k
