import logging

logger = logging.getLogger("pancakes")


def log_with_context(message, context=None, log_level='info', **kwargs):
    """Log ``message`` prefixed by ``[KEY:value]`` for every context entry that is set."""
    prefix = _context_prefix(context or {})
    logger.log(_level(log_level), f"{prefix} {message}" if prefix else message, **kwargs)


def group_context(ctx, family=None, **extra):
    """Context of a computation on one group: ``GROUP`` and ``FAMILY`` plus upper-cased extras."""
    context = {"GROUP": group_label(ctx), "FAMILY": getattr(family, "value", family)}
    context.update({key.upper(): value for key, value in extra.items()})
    return context


def group_label(ctx):
    """Short group tag, e.g. ``B5``."""
    if ctx is None:
        return None
    return f"{ctx.group_type.value}{ctx.degree}"


def _context_prefix(context):
    return "".join(f"[{key}:{value}]" for key, value in context.items() if value is not None)


def _level(log_level):
    level = logging.getLevelName(str(log_level).upper())
    return level if isinstance(level, int) else logging.INFO
