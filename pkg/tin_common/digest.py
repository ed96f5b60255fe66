import hashlib


def get_digest(*args):
    """ Generate a stable digest of the given values, skipping empty ones. """

    def check_value(v):
        if not isinstance(v, str):
            raise ValueError("%s value is not a string instance" % str(v))
        return v

    values = [check_value(arg) for arg in args if arg is not None and arg != '']
    s = ':'.join(values)
    return hashlib.sha1(s.encode('utf-8', errors='surrogateescape')).hexdigest()
