"""Tokenizer shared by the class-declaration DSL and type expressions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

PUNCT = set("<>,;{}[]-")

# '?x' / '?s' are single tokens only when the letter is glued to the '?';
# a glued 'extends' or 'super' keyword still lexes as a bare '?' + ident.
KIND_WILD = "?"
KIND_WILD_EXTENDS = "?x"
KIND_WILD_SUPER = "?s"


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "punct", "?", "?x", "?s", "eof"
    text: str
    pos: int


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch == "_"


def _is_ident_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def tokenize(text: str) -> list[Token]:
    """Split *text* into tokens, ending with a synthetic "eof" token."""
    toks: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in PUNCT:
            toks.append(Token("punct", ch, i))
            i += 1
            continue
        if _is_ident_start(ch):
            j = i + 1
            while j < n and _is_ident_char(text[j]):
                j += 1
            toks.append(Token("ident", text[i:j], i))
            i = j
            continue
        if ch == "?":
            j = i + 1
            if j < n and _is_ident_char(text[j]):
                k = j
                while k < n and _is_ident_char(text[k]):
                    k += 1
                run = text[j:k]
                if run in ("extends", "super"):
                    toks.append(Token(KIND_WILD, "?", i))
                    toks.append(Token("ident", run, j))
                elif run[0] == "x":
                    toks.append(Token(KIND_WILD_EXTENDS, "?x", i))
                    if len(run) > 1:
                        toks.append(Token("ident", run[1:], j + 1))
                elif run[0] == "s":
                    toks.append(Token(KIND_WILD_SUPER, "?s", i))
                    if len(run) > 1:
                        toks.append(Token("ident", run[1:], j + 1))
                else:
                    raise ParseError("'?' may only be followed by extends/super or x/s shorthand",
                                     i, "?" + run)
                i = k
            else:
                toks.append(Token(KIND_WILD, "?", i))
                i = j
            continue
        raise ParseError("unexpected character", i, ch)
    toks.append(Token("eof", "", n))
    return toks


class TokenStream:
    """Cursor over a token list with the usual peek/expect helpers."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def next(self) -> Token:
        tok = self.tokens[self.index]
        if tok.kind != "eof":
            self.index += 1
        return tok

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text == text

    def at_ident(self, text: str | None = None) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and (text is None or tok.text == text)

    def expect_punct(self, text: str) -> Token:
        tok = self.peek()
        if not self.at_punct(text):
            raise ParseError(f"expected {text!r}", tok.pos, tok.text)
        return self.next()

    def expect_ident(self) -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            raise ParseError("expected identifier", tok.pos, tok.text)
        return self.next()

    def expect_eof(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError("trailing input", tok.pos, tok.text)
