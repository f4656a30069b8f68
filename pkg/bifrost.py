import os
import json
import asyncio
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import click

from mimir.build import induce
from mimir.errors import GroupoidError
from mimir.fraction import Fraction
from mimir.functor import Functor, validate_functor
from mimir.groupoid import (
    DEFAULT_MAX_ARROWS,
    DEFAULT_MAX_CONSTRUCTION_ARROWS,
    FiniteGroupoid,
    SetMap,
    build_standard,
    from_tables,
    validate_groupoid,
)

_EXECUTOR: ThreadPoolExecutor | None = None


def _get_executor(workers: Optional[int] = None) -> ThreadPoolExecutor:
    global _EXECUTOR
    if _EXECUTOR is None:
        _EXECUTOR = ThreadPoolExecutor(max_workers=workers or os.cpu_count() or 4)
    return _EXECUTOR


def _shutdown_executor(config: Optional[dict] = None):
    """Shutdown the thread pool executor if it exists."""
    global _EXECUTOR
    if _EXECUTOR is not None:
        if config and config.get("debug", False):
            click.echo("[bifrost] Shutting down thread pool executor...", err=True)
        _EXECUTOR.shutdown(wait=True)
        _EXECUTOR = None


class GpdSyntaxError(ValueError):
    """A GPD line that cannot be read."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class GpdValidationError(ValueError):
    """A GPD structure that reads fine but fails its laws or references."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class Document:
    """Named groupoids, functors and fractions from one GPD file, in file order."""

    groupoids: Dict[str, FiniteGroupoid] = field(default_factory=dict)
    functors: Dict[str, Functor] = field(default_factory=dict)
    functor_ends: Dict[str, Tuple[str, str]] = field(default_factory=dict)
    fractions: Dict[str, Fraction] = field(default_factory=dict)
    fraction_legs: Dict[str, Tuple[str, str]] = field(default_factory=dict)

    def names(self) -> List[str]:
        return list(self.groupoids) + list(self.functors) + list(self.fractions)

    def groupoid(self, name: str) -> FiniteGroupoid:
        if name not in self.groupoids:
            raise GpdValidationError(f"unknown groupoid '{name}'")
        return self.groupoids[name]

    def functor(self, name: str) -> Functor:
        if name not in self.functors:
            raise GpdValidationError(f"unknown functor '{name}'")
        return self.functors[name]

    def fraction(self, name: str) -> Fraction:
        if name not in self.fractions:
            raise GpdValidationError(f"unknown fraction '{name}'")
        return self.fractions[name]


Token = Tuple[str, int]


def _tokens(text: str) -> List[Token]:
    """Whitespace-separated words with their 1-based columns, comments stripped."""
    text = text.split("#", 1)[0]
    found, column = [], 0
    for word in text.split():
        column = text.index(word, column)
        found.append((word, column + 1))
        column += len(word)
    return found


def _int(token: Token, line: int) -> int:
    word, column = token
    try:
        return int(word)
    except ValueError:
        raise GpdSyntaxError(f"expected an integer, got '{word}'", line, column)


def _int_list(token: Token, line: int) -> List[int]:
    word, column = token
    try:
        return [int(part) for part in word.split(",")]
    except ValueError:
        raise GpdSyntaxError(f"expected a comma-separated integer list, got '{word}'", line, column)


def _expect_arity(tokens: List[Token], count: int, line: int, usage: str):
    if len(tokens) != count:
        column = tokens[min(len(tokens), count) - 1][1] if tokens else 1
        raise GpdSyntaxError(f"expected '{usage}'", line, column)


class bifrost:
    """Configuration and GPD document I/O."""

    DEFAULTS = {
        "max_arrows": DEFAULT_MAX_ARROWS,
        "max_construction_arrows": DEFAULT_MAX_CONSTRUCTION_ARROWS,
        "seed": 7,
        "max_objects": 3,
        "debug": False,
    }

    @staticmethod
    def load_config(path: Optional[str] = None):
        """Loads 'config.json' (or the given file) over the built-in defaults, with validation.

        Returns:
            dict: Parsed and validated configuration.

        Raises:
            ValueError: If a field has the wrong type or an invalid value.
            FileNotFoundError: If an explicitly given config file doesn't exist.
        """
        config_path = path or os.path.join(os.path.dirname(__file__), "config.json")
        config = dict(bifrost.DEFAULTS)
        config["workers"] = os.cpu_count() or 4

        try:
            with open(config_path, 'r', encoding='utf-8') as file:
                loaded = json.load(file)
        except FileNotFoundError:
            if path is not None:
                raise FileNotFoundError(f"Configuration file not found: {config_path}")
            loaded = {}
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in config file {config_path}: {e}")

        if not isinstance(loaded, dict):
            raise ValueError(f"Config file {config_path} must hold a JSON object")
        config.update(loaded)

        positive_fields = ('max_arrows', 'max_construction_arrows', 'max_objects', 'workers')
        for name in positive_fields + ('seed',):
            value = config[name]
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"Configuration field '{name}' must be of type int, got {type(value).__name__}")
        for name in positive_fields:
            if config[name] < 1:
                raise ValueError(f"Configuration field '{name}' must be positive, got {config[name]}")
        if not isinstance(config['debug'], bool):
            raise ValueError(f"Configuration field 'debug' must be of type bool, got {type(config['debug']).__name__}")
        if config.get('ledger_path') is not None and not isinstance(config['ledger_path'], str):
            raise ValueError(f"Configuration field 'ledger_path' must be of type str, got {type(config['ledger_path']).__name__}")

        if config.get("debug", False):
            click.echo("[CONFIG] Configuration validated successfully", err=True)
        return config

    @staticmethod
    def parse_document(text: str) -> Document:
        """
        Parse GPD text into a validated Document.

        Raises:
            GpdSyntaxError: unreadable line, with line and column.
            GpdValidationError: duplicate or unknown names, or a structure that
                fails the groupoid or functor laws.
        """
        doc = Document()
        lines = text.splitlines()
        i = 0

        def claim(name_token: Token, line: int) -> str:
            name = name_token[0]
            if name in doc.names():
                raise GpdValidationError(f"name '{name}' is already defined", line)
            return name

        def ref(name: str, table: dict, kind: str, line: int):
            if name not in table:
                raise GpdValidationError(f"unknown {kind} '{name}'", line)
            return table[name]

        def block(start: int) -> Tuple[List[Tuple[int, List[Token]]], int]:
            body, j = [], start + 1
            while j < len(lines):
                tokens = _tokens(lines[j])
                if tokens and tokens[0][0] == "end":
                    return body, j + 1
                if tokens:
                    body.append((j + 1, tokens))
                j += 1
            raise GpdSyntaxError("block is missing 'end'", start + 1)

        while i < len(lines):
            line = i + 1
            tokens = _tokens(lines[i])
            if not tokens:
                i += 1
                continue
            keyword = tokens[0][0]

            if keyword == "std":
                if len(tokens) < 4 or tokens[2][0] != "=":
                    raise GpdSyntaxError("expected 'std <name> = <constructor> ...'", line, tokens[-1][1])
                name = claim(tokens[1], line)
                doc.groupoids[name] = bifrost._standard(tokens[3:], doc, line)
                i += 1

            elif keyword == "groupoid":
                _expect_arity(tokens, 2, line, "groupoid <name>")
                name = claim(tokens[1], line)
                body, i = block(i)
                doc.groupoids[name] = bifrost._explicit_groupoid(name, body, line)

            elif keyword == "functor":
                if len(tokens) != 6 or tokens[2][0] != ":" or tokens[4][0] != "->":
                    raise GpdSyntaxError("expected 'functor <name> : <G> -> <H>'", line, tokens[-1][1])
                name = claim(tokens[1], line)
                dom = ref(tokens[3][0], doc.groupoids, "groupoid", line)
                cod = ref(tokens[5][0], doc.groupoids, "groupoid", line)
                body, i = block(i)
                doc.functors[name] = bifrost._explicit_functor(name, dom, cod, body, line)
                doc.functor_ends[name] = (tokens[3][0], tokens[5][0])

            elif keyword == "fraction":
                if len(tokens) != 8 or tokens[2][0] != ":" or tokens[4][0] != "<-" or tokens[6][0] != "->":
                    raise GpdSyntaxError("expected 'fraction <name> : <H> <- <K> -> <G>'", line, tokens[-1][1])
                name = claim(tokens[1], line)
                source, apex, target = (ref(tokens[k][0], doc.groupoids, "groupoid", line) for k in (3, 5, 7))
                body, i = block(i)
                legs = {}
                for body_line, entry in body:
                    _expect_arity(entry, 2, body_line, "num <functor>' or 'den <functor>")
                    if entry[0][0] not in ("num", "den"):
                        raise GpdSyntaxError(f"unexpected '{entry[0][0]}' in fraction block", body_line, entry[0][1])
                    legs[entry[0][0]] = (entry[1][0], ref(entry[1][0], doc.functors, "functor", body_line))
                if set(legs) != {"num", "den"}:
                    raise GpdValidationError(f"fraction {name} needs both num and den", line)
                p, q = legs["num"][1], legs["den"][1]
                if not (p.dom.same_as(apex) and q.dom.same_as(apex) and p.cod.same_as(target) and q.cod.same_as(source)):
                    raise GpdValidationError(f"fraction {name}: num must run {tokens[5][0]} -> {tokens[7][0]} and den {tokens[5][0]} -> {tokens[3][0]}", line)
                doc.fractions[name] = Fraction(p, q)
                doc.fraction_legs[name] = (legs["num"][0], legs["den"][0])

            else:
                raise GpdSyntaxError(f"unknown keyword '{keyword}'", line, tokens[0][1])

        return doc

    @staticmethod
    def _standard(tokens: List[Token], doc: Document, line: int) -> FiniteGroupoid:
        kind = tokens[0][0]
        args = tokens[1:]

        def named(token: Token) -> FiniteGroupoid:
            if token[0] not in doc.groupoids:
                raise GpdValidationError(f"unknown groupoid '{token[0]}'", line)
            return doc.groupoids[token[0]]

        try:
            if kind in ("null", "pair", "cyclic"):
                _expect_arity(tokens, 2, line, f"{kind} <k>")
                return build_standard(kind, _int(args[0], line))
            if kind == "sym3":
                _expect_arity(tokens, 1, line, "sym3")
                return build_standard("sym3")
            if kind == "equivrel":
                if len(args) < 2:
                    raise GpdSyntaxError("expected 'equivrel <k> <block> ...'", line, tokens[-1][1])
                return build_standard("equivrel", _int(args[0], line), [_int_list(t, line) for t in args[1:]])
            if kind == "action":
                if len(args) != 5 or args[0][0] != "cyclic" or args[2][0] != "on":
                    raise GpdSyntaxError("expected 'action cyclic <k> on <m> <images>'", line, tokens[-1][1])
                return build_standard("cyclic_action", _int(args[1], line), _int(args[3], line), _int_list(args[4], line))
            if kind in ("union", "product"):
                _expect_arity(tokens, 3, line, f"{kind} <name> <name>")
                return build_standard(kind, named(args[0]), named(args[1]))
            if kind == "induce":
                if len(args) != 3 or args[1][0] != "along":
                    raise GpdSyntaxError("expected 'induce <name> along <images>'", line, tokens[-1][1])
                base = named(args[0])
                images = _int_list(args[2], line)
                return induce(base, SetMap(len(images), base.n_objects, tuple(images))).groupoid
        except GroupoidError as e:
            raise GpdValidationError(str(e), line)
        raise GpdSyntaxError(f"unknown constructor '{kind}'", line, tokens[0][1])

    @staticmethod
    def _explicit_groupoid(name: str, body, line: int) -> FiniteGroupoid:
        n_objects = None
        arrows: Dict[int, Tuple[int, int]] = {}
        units: Dict[int, int] = {}
        inverses: Dict[int, int] = {}
        entries = []
        arity = {"objects": 2, "arrow": 4, "unit": 3, "inv": 3, "comp": 4}
        for body_line, tokens in body:
            keyword = tokens[0][0]
            if keyword not in arity:
                raise GpdSyntaxError(f"unexpected '{keyword}' in groupoid block", body_line, tokens[0][1])
            _expect_arity(tokens, arity[keyword], body_line, f"{keyword} with {arity[keyword] - 1} integers")
            values = [_int(t, body_line) for t in tokens[1:]]
            if keyword == "objects":
                n_objects = values[0]
            elif keyword == "arrow":
                if values[0] in arrows:
                    raise GpdValidationError(f"groupoid {name}: arrow {values[0]} declared twice", body_line)
                arrows[values[0]] = (values[1], values[2])
            elif keyword == "unit":
                units[values[0]] = values[1]
            elif keyword == "inv":
                inverses[values[0]] = values[1]
            else:
                entries.append(tuple(values))

        if n_objects is None:
            raise GpdValidationError(f"groupoid {name} has no 'objects' line", line)
        if sorted(arrows) != list(range(len(arrows))):
            raise GpdValidationError(f"groupoid {name}: arrow ids must be 0..{len(arrows) - 1}", line)
        missing_units = [x for x in range(n_objects) if x not in units]
        if missing_units:
            raise GpdValidationError(f"groupoid {name}: object {missing_units[0]} has no unit", line)
        missing_inverses = [a for a in range(len(arrows)) if a not in inverses]
        if missing_inverses:
            raise GpdValidationError(f"groupoid {name}: arrow {missing_inverses[0]} has no inverse", line)
        try:
            g = from_tables(
                n_objects,
                [arrows[a] for a in range(len(arrows))],
                [units[x] for x in range(n_objects)],
                [inverses[a] for a in range(len(arrows))],
                entries,
            )
        except GroupoidError as e:
            raise GpdValidationError(f"groupoid {name}: {e}", line)
        report = validate_groupoid(g)
        if not report.ok:
            raise GpdValidationError(f"groupoid {name}: {report.first}", line)
        return g

    @staticmethod
    def _explicit_functor(name: str, dom: FiniteGroupoid, cod: FiniteGroupoid, body, line: int) -> Functor:
        objects: Dict[int, int] = {}
        arrows: Dict[int, int] = {}
        for body_line, tokens in body:
            keyword = tokens[0][0]
            if keyword not in ("obj", "arr"):
                raise GpdSyntaxError(f"unexpected '{keyword}' in functor block", body_line, tokens[0][1])
            _expect_arity(tokens, 3, body_line, f"{keyword} <x> <y>")
            x, y = _int(tokens[1], body_line), _int(tokens[2], body_line)
            (objects if keyword == "obj" else arrows)[x] = y
        missing = [x for x in dom.objects if x not in objects]
        if missing:
            raise GpdValidationError(f"functor {name}: object {missing[0]} has no image", line)
        missing = [a for a in dom.arrows if a not in arrows]
        if missing:
            raise GpdValidationError(f"functor {name}: arrow {missing[0]} has no image", line)
        try:
            f = Functor.from_tables(dom, cod, [objects[x] for x in dom.objects], [arrows[a] for a in dom.arrows])
        except GroupoidError as e:
            raise GpdValidationError(f"functor {name}: {e}", line)
        report = validate_functor(f)
        if not report.ok:
            raise GpdValidationError(f"functor {name}: {report.first}", line)
        return f

    @staticmethod
    def serialize_document(doc: Document) -> str:
        """Write every structure as an explicit block; parse_document reads it back."""
        out: List[str] = []
        for name, g in doc.groupoids.items():
            out.append(f"groupoid {name}")
            out.append(f"objects {g.n_objects}")
            out += [f"arrow {a} {g.src[a]} {g.tgt[a]}" for a in g.arrows]
            out += [f"unit {x} {g.unit[x]}" for x in g.objects]
            out += [f"inv {a} {g.inv[a]}" for a in g.arrows]
            out += [
                f"comp {a} {b} {g.table[a][b]}"
                for a in g.arrows for b in g.arrows if g.table[a][b] >= 0
            ]
            out.append("end")
        for name, f in doc.functors.items():
            dom, cod = doc.functor_ends[name]
            out.append(f"functor {name} : {dom} -> {cod}")
            out += [f"obj {x} {f.obj(x)}" for x in f.dom.objects]
            out += [f"arr {a} {f(a)}" for a in f.dom.arrows]
            out.append("end")
        for name in doc.fractions:
            num, den = doc.fraction_legs[name]
            apex, target = doc.functor_ends[num]
            source = doc.functor_ends[den][1]
            out.append(f"fraction {name} : {source} <- {apex} -> {target}")
            out += [f"num {num}", f"den {den}", "end"]
        return "\n".join(out) + "\n"

    @staticmethod
    async def read_document(filepath: str, config: Optional[dict] = None) -> Document:
        """Read and parse a GPD file off the event loop.

        Raises:
            FileNotFoundError: If the file doesn't exist.
            GpdSyntaxError, GpdValidationError: as parse_document.
        """
        def _read_file():
            with open(filepath, 'rb') as file:
                raw = file.read()
            try:
                return raw.decode('utf-8')
            except UnicodeDecodeError as e:
                line_start = raw.rfind(b"\n", 0, e.start) + 1
                raise GpdSyntaxError("not valid UTF-8", raw.count(b"\n", 0, e.start) + 1, e.start - line_start + 1) from e

        loop = asyncio.get_running_loop()
        text = await loop.run_in_executor(_get_executor((config or {}).get("workers")), _read_file)
        if config and config.get("debug", False):
            click.echo(f"[bifrost] Read {len(text)} characters from {filepath}", err=True)
        return bifrost.parse_document(text)
