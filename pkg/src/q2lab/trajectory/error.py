class TrajectoryError(Exception):
    """Generic trajectory observation error."""
