"""
created matt_dumont
on: 17/10/26

Line oriented text formats for rainbow instances, hypergraphs and simplicial complexes.

Instance file::

    # comment
    ground 4
    matroid M uniform 2
    matroid N circuits { 0 1 2 }
    set 1 : 0
    set 2 : 0 3
    set 3 : 1 3
    target 2

Matroid kinds: ``uniform <k>``, ``partition <b0,b1|b2,b3|...>``, ``graphic <nv> <u-v,...>``,
``linear <p> <col;col;...>`` (a column is comma separated residues), ``circuits { ... } { ... }`` and
``independent { ... } ...``.

Hypergraph / complex file: ``ground <k>`` then ``edge <e...>`` lines (a hypergraph, read as its independence complex)
or ``facet <e...>`` lines (a complex).  Optional ``pivot <e...>`` and ``target <t>`` lines carry the edge and bound of
deletion/contraction and certificate reproducers.  A file with no edge or facet lines is the void complex.
"""
import re
from dataclasses import dataclass
from pathlib import Path
from komanawa.rainbow_tools.complexes import Hypergraph, SimplicialComplex, independence_complex
from komanawa.rainbow_tools.matroids import (MatroidAxiomError, explicit_matroid, from_circuits, graphic_matroid,
                                             linear_matroid, matroid_to_spec, partition_matroid,
                                             uniform_matroid)
from komanawa.rainbow_tools.rainbow import make_instance

data_dir = Path(__file__).parent.joinpath('data')

_token_pattern = re.compile(r'[{}]|[^\s{}]+')


class InstanceParseError(ValueError):
    """
    syntax or semantic error in an input file, positioned at a 1-based line and column

    :param message: error message
    :param line: 1-based line number
    :param column: 1-based column number
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f'line {line}, column {column}: {message}' if line is not None else message)


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


def _tokenize(text):
    """
    split a file into lines of tokens, dropping comments and blank lines
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0]
        tokens = [_Token(m.group(), lineno, m.start() + 1) for m in _token_pattern.finditer(content)]
        if tokens:
            lines.append(tokens)
    return lines


def _int(token, what='integer'):
    try:
        return int(token.text)
    except ValueError:
        raise InstanceParseError(f'expected {what}, got {token.text!r}', token.line, token.column) from None


def _brace_sets(tokens, start_token):
    """
    parse '{ a b } { c } ...' into a list of frozensets
    """
    sets = []
    current = None
    last = start_token
    for t in tokens:
        last = t
        if t.text == '{':
            if current is not None:
                raise InstanceParseError('nested "{"', t.line, t.column)
            current = []
        elif t.text == '}':
            if current is None:
                raise InstanceParseError('unmatched "}"', t.line, t.column)
            sets.append(frozenset(current))
            current = None
        elif current is None:
            raise InstanceParseError(f'expected "{{", got {t.text!r}', t.line, t.column)
        else:
            current.append(_int(t, 'element'))
    if current is not None:
        raise InstanceParseError('missing "}"', last.line, last.column + len(last.text))
    return sets


def _split_ints(token, text, sep, what):
    try:
        return [int(v) for v in text.split(sep)]
    except ValueError:
        raise InstanceParseError(f'bad {what} {text!r}', token.line, token.column) from None


def parse_matroid_spec(tokens, ground):
    """
    build a matroid from the tokens after 'matroid <name>'

    :param tokens: list of _Token, the first is the kind
    :param ground: ground set size
    :return: Matroid on 0..ground-1
    """
    kind, args = tokens[0], tokens[1:]
    end = tokens[-1]

    def need(count):
        if len(args) < count:
            raise InstanceParseError(f'{kind.text} needs {count} argument(s)', end.line, end.column + len(end.text))

    try:
        if kind.text == 'uniform':
            need(1)
            return uniform_matroid(ground, _int(args[0], 'rank'))
        if kind.text == 'partition':
            need(1)
            text = ''.join(t.text for t in args)
            blocks = [_split_ints(args[0], b, ',', 'partition block') for b in text.split('|')]
            return partition_matroid(blocks, ground=ground)
        if kind.text == 'graphic':
            need(1)
            vertices = _int(args[0], 'vertex count')
            text = ''.join(t.text for t in args[1:])
            edges = [_split_ints(args[1], e, '-', 'edge') for e in text.split(',')] if text else []
            if any(len(e) != 2 for e in edges):
                raise InstanceParseError('graphic edges are written u-v', args[1].line, args[1].column)
            if len(edges) != ground:
                raise InstanceParseError(f'graphic matroid has {len(edges)} edges but the ground has {ground}',
                                         kind.line, kind.column)
            return graphic_matroid(vertices, edges)
        if kind.text == 'linear':
            need(1)
            prime = _int(args[0], 'prime')
            text = ''.join(t.text for t in args[1:])
            columns = [_split_ints(args[1], c, ',', 'column') for c in text.split(';')] if text else []
            if len(columns) != ground:
                raise InstanceParseError(f'linear matroid has {len(columns)} columns but the ground has {ground}',
                                         kind.line, kind.column)
            return linear_matroid(prime, columns)
        if kind.text == 'circuits':
            return from_circuits(ground, _brace_sets(args, kind))
        if kind.text == 'independent':
            return explicit_matroid(ground, _brace_sets(args, kind))
    except InstanceParseError:
        raise
    except (MatroidAxiomError, ValueError) as err:
        raise InstanceParseError(f'{kind.text} matroid: {err}', kind.line, kind.column) from err
    raise InstanceParseError(f'unknown matroid kind {kind.text!r}', kind.line, kind.column)


@dataclass(frozen=True)
class InstanceFile:
    """
    the parsed contents of an instance file
    """
    ground: int
    matroid_m: object
    matroid_n: object
    sets: tuple
    target: int

    def to_instance(self, validate=True):
        """
        :param validate: check independence of each A_i (InstanceValidationError names the bad indices)
        :return: RainbowInstance
        """
        return make_instance(self.matroid_m, self.matroid_n, self.sets, self.target, validate=validate)


def parse_instance_file(text):
    """
    parse the text of an instance file without the independence checks

    :param text: file contents
    :return: InstanceFile
    :raises InstanceParseError: with the line and column of the problem
    """
    ground = None
    matroids = {}
    sets = []
    target = None
    last = None
    for tokens in _tokenize(text):
        head = tokens[0]
        last = tokens[-1]
        if head.text == 'ground':
            if ground is not None:
                raise InstanceParseError('ground given twice', head.line, head.column)
            if len(tokens) != 2:
                raise InstanceParseError('expected "ground <k>"', head.line, head.column)
            ground = _int(tokens[1], 'ground size')
            if ground < 0:
                raise InstanceParseError('ground size must be non-negative', tokens[1].line, tokens[1].column)
        elif head.text == 'matroid':
            if ground is None:
                raise InstanceParseError('matroid before ground', head.line, head.column)
            if len(tokens) < 3 or tokens[1].text not in ('M', 'N'):
                raise InstanceParseError('expected "matroid M|N <kind> ..."', head.line, head.column)
            if tokens[1].text in matroids:
                raise InstanceParseError(f'matroid {tokens[1].text} given twice', head.line, head.column)
            matroids[tokens[1].text] = parse_matroid_spec(tokens[2:], ground)
        elif head.text == 'set':
            if ground is None:
                raise InstanceParseError('set before ground', head.line, head.column)
            if len(tokens) < 3 or tokens[2].text != ':':
                raise InstanceParseError('expected "set <i> : <elements>"', head.line, head.column)
            index = _int(tokens[1], 'set index')
            if index != len(sets) + 1:
                raise InstanceParseError(f'expected set {len(sets) + 1}, got set {index}', tokens[1].line,
                                         tokens[1].column)
            members = []
            for t in tokens[3:]:
                x = _int(t, 'element')
                if not 0 <= x < ground:
                    raise InstanceParseError(f'element {x} is outside the ground 0..{ground - 1}', t.line, t.column)
                if x in members:
                    raise InstanceParseError(f'element {x} repeated in set {index}', t.line, t.column)
                members.append(x)
            sets.append(frozenset(members))
        elif head.text == 'target':
            if target is not None:
                raise InstanceParseError('target given twice', head.line, head.column)
            if len(tokens) != 2:
                raise InstanceParseError('expected "target <n>"', head.line, head.column)
            target = _int(tokens[1], 'target')
            if target < 0:
                raise InstanceParseError('target must be non-negative', tokens[1].line, tokens[1].column)
        else:
            raise InstanceParseError(f'unknown keyword {head.text!r}', head.line, head.column)
    eof_line = 1 if last is None else last.line
    for name in ('M', 'N'):
        if name not in matroids:
            raise InstanceParseError(f'missing matroid {name}', eof_line, 1)
    if target is None:
        raise InstanceParseError('missing target', eof_line, 1)
    return InstanceFile(ground, matroids['M'], matroids['N'], tuple(sets), target)


def parse_instance(text, validate=True):
    """
    parse and validate an instance file

    :param text: file contents
    :param validate: check that every A_i is independent in both matroids
    :return: RainbowInstance
    :raises InstanceParseError: syntax errors and invalid matroid descriptions
    :raises InstanceValidationError: a set that is not independent, by 1-based index
    """
    return parse_instance_file(text).to_instance(validate=validate)


def format_instance(inst, comment=None):
    """
    write an instance in the file format; parse_instance reads it back to the same instance

    :param inst: RainbowInstance on a dense ground 0..k-1
    :param comment: optional text for leading '#' lines
    :return: str
    """
    lines = []
    if comment:
        lines.extend(f'# {c}'.rstrip() for c in comment.splitlines())
    lines.append(f'ground {len(inst.ground)}')
    lines.append(f'matroid M {matroid_to_spec(inst.matroid_m)}')
    lines.append(f'matroid N {matroid_to_spec(inst.matroid_n)}')
    for i, a in enumerate(inst.sets, start=1):
        lines.append(f'set {i} : {" ".join(str(x) for x in sorted(a))}'.rstrip())
    lines.append(f'target {inst.target}')
    return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class ComplexFile:
    """
    the parsed contents of a hypergraph or complex file; kind is 'hypergraph', 'complex' or 'void'
    """
    ground: int
    kind: str
    sets: tuple = ()
    pivot: frozenset = None
    target: int = None

    def hypergraph(self):
        if self.kind != 'hypergraph':
            raise ValueError(f'file describes a {self.kind}, not a hypergraph')
        return Hypergraph(self.ground, self.sets)

    def to_complex(self):
        """
        the complex of the file: I(H) for a hypergraph file
        """
        if self.kind == 'hypergraph':
            return independence_complex(self.hypergraph())
        return SimplicialComplex(self.ground, self.sets)


def parse_complex_file(text):
    """
    parse a hypergraph or complex file

    :param text: file contents
    :return: ComplexFile
    """
    ground = None
    kind = None
    sets = []
    pivot = None
    target = None
    for tokens in _tokenize(text):
        head = tokens[0]
        if head.text == 'ground':
            if ground is not None or len(tokens) != 2:
                raise InstanceParseError('expected a single "ground <k>"', head.line, head.column)
            ground = _int(tokens[1], 'ground size')
            if ground < 0:
                raise InstanceParseError('ground size must be non-negative', tokens[1].line, tokens[1].column)
            continue
        if ground is None:
            raise InstanceParseError(f'{head.text} before ground', head.line, head.column)
        if head.text == 'target':
            if len(tokens) != 2:
                raise InstanceParseError('expected "target <t>"', head.line, head.column)
            target = _int(tokens[1], 'target')
            continue
        if head.text not in ('edge', 'facet', 'pivot'):
            raise InstanceParseError(f'unknown keyword {head.text!r}', head.line, head.column)
        members = []
        for t in tokens[1:]:
            x = _int(t, 'element')
            if not 0 <= x < ground:
                raise InstanceParseError(f'element {x} is outside the ground 0..{ground - 1}', t.line, t.column)
            members.append(x)
        if head.text == 'pivot':
            pivot = frozenset(members)
            continue
        line_kind = 'hypergraph' if head.text == 'edge' else 'complex'
        if kind is not None and kind != line_kind:
            raise InstanceParseError('edge and facet lines cannot be mixed', head.line, head.column)
        kind = line_kind
        sets.append(frozenset(members))
    if ground is None:
        raise InstanceParseError('missing ground', 1, 1)
    if pivot is not None and kind != 'hypergraph':
        raise InstanceParseError('pivot needs edge lines', 1, 1)
    return ComplexFile(ground, kind or 'void', tuple(sets), pivot, target)


def _comment_lines(comment):
    return [f'# {c}'.rstrip() for c in comment.splitlines()] if comment else []


def format_hypergraph(hypergraph, pivot=None, target=None, comment=None):
    """
    write a hypergraph file on a dense ground 0..k-1

    :param hypergraph: Hypergraph
    :param pivot: optional edge written as a pivot line
    :param target: optional bound written as a target line
    :param comment: optional leading comment
    :return: str
    """
    n = len(hypergraph.ground)
    if hypergraph.ground != frozenset(range(n)):
        raise ValueError('only hypergraphs on a dense ground 0..k-1 can be written')
    lines = _comment_lines(comment) + [f'ground {n}']
    lines.extend(f'edge {" ".join(str(x) for x in sorted(e))}'.rstrip() for e in hypergraph.edges)
    if pivot is not None:
        lines.append(f'pivot {" ".join(str(x) for x in sorted(pivot))}'.rstrip())
    if target is not None:
        lines.append(f'target {target}')
    return '\n'.join(lines) + '\n'


def format_complex(cplx, comment=None):
    """
    write a complex file by its facets; the void complex has no facet lines

    :param cplx: SimplicialComplex on a dense ground 0..k-1
    :param comment: optional leading comment
    :return: str
    """
    n = len(cplx.ground)
    if cplx.ground != frozenset(range(n)):
        raise ValueError('only complexes on a dense ground 0..k-1 can be written')
    lines = _comment_lines(comment) + [f'ground {n}']
    lines.extend(f'facet {" ".join(str(x) for x in sorted(f))}'.rstrip() for f in cplx.facets)
    return '\n'.join(lines) + '\n'


def read_text(path):
    """
    read a file, falling back to the packaged data directory for bare names such as 'drisko_n2.txt'
    """
    path = Path(path)
    if not path.exists() and not path.is_absolute() and data_dir.joinpath(path).exists():
        path = data_dir.joinpath(path)
    return path.read_text(encoding='utf-8')


def write_text(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='utf-8')
