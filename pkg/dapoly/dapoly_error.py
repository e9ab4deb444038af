class DapolyError(Exception):
    pass
