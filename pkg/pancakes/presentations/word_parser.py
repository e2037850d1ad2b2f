import re

from pancakes.group_core.context import GroupContext
from pancakes.group_core.symbols import GeneratorSymbol
from pancakes.group_core.words import Word

LEXER = re.compile(r"(?P<space>\s+)|(?P<open>\()|(?P<close>\)(?:\s*\^\s*(?P<exponent>-?\d+))?)"
                   r"|(?P<name>[A-Za-z0-9_]+)|(?P<other>.)")

# longest word a power may expand to
MAX_WORD_LENGTH = 1000000


class WordSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_word(text: str, ctx: GroupContext) -> Word:
    """
    Parse whitespace-separated generator tokens with optional ``( ... )^m`` powers.

    Powers nest and are expanded at parse time, so the result only ever holds generator
    symbols, at most ``MAX_WORD_LENGTH`` of them.  Symbols outside ``ctx`` raise
    ``InvalidSymbolForContext``.
    """
    # each open group keeps its start position and the symbols collected so far
    stack: list[tuple[int, list[GeneratorSymbol]]] = [(0, [])]
    for match in LEXER.finditer(text):
        kind = match.lastgroup
        position = match.start()
        if kind == 'space':
            continue
        if kind == 'open':
            stack.append((position, []))
        elif kind == 'close':
            if len(stack) == 1:
                raise WordSyntaxError("unbalanced ')'", position)
            exponent = match.group('exponent')
            if exponent is None:
                raise WordSyntaxError("expected '^<m>' after ')'", position)
            if int(exponent) < 1:
                raise WordSyntaxError(f"power must be at least 1, got {exponent}", position)
            _, group = stack.pop()
            if len(stack[-1][1]) + len(group) * int(exponent) > MAX_WORD_LENGTH:
                raise WordSyntaxError(f"power expands past {MAX_WORD_LENGTH} symbols", position)
            stack[-1][1].extend(group * int(exponent))
        elif kind == 'name':
            try:
                symbol = GeneratorSymbol.from_token(match.group('name'))
            except ValueError as exception:
                raise WordSyntaxError(str(exception), position) from exception
            stack[-1][1].append(symbol)
        else:
            raise WordSyntaxError(f"unexpected character '{match.group()}'", position)
    if len(stack) > 1:
        raise WordSyntaxError("unclosed '('", stack[-1][0])
    return Word.of(ctx, stack[0][1])
